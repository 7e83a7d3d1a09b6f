//! The Goldman bracket of a simple class against an arbitrary class, term
//! collection, the t/g/i/u counts, the unoriented bracket, power classes,
//! the closed-torus closed form, Dehn twists and ad-invariance data.
//!
//! Each decomposition kind contributes its own term shape: a separating
//! curve inserts the amalgamating element into every factor slot with
//! alternating signs, a non-separating curve inserts the associated-subgroup
//! generators at every stable letter with the letter's sign, and on the
//! closed torus the bracket is the lattice determinant. The global sign
//! depends on the surface orientation, which the combinatorial data does not
//! carry; it is fixed to +1 and reported as a convention.

use alloc::string::String;
use alloc::vec::Vec;

use crate::amalgam::{
    conjugacy_test_amalgam, coset_cycle, AmalgamCtx, CosetCycle, CycleFlavor, CyclicAmalgamSeq,
};
use crate::hnn::{collins_conjugacy, coset_cycle_hnn, CyclicHnnSeq, HnnCtx, Sign};
use crate::Error;

/// A conjugacy-class representative in one of the three decomposition models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjClassRep {
    Amalgam(CyclicAmalgamSeq),
    Hnn(CyclicHnnSeq),
    Torus { k: i64, l: i64 },
}

impl ConjClassRep {
    /// The representative of the class with reversed orientation.
    pub fn reverse_bar(&self) -> ConjClassRep {
        match self {
            ConjClassRep::Amalgam(s) => ConjClassRep::Amalgam(s.reverse_bar()),
            ConjClassRep::Hnn(s) => ConjClassRep::Hnn(s.reverse_bar()),
            ConjClassRep::Torus { k, l } => ConjClassRep::Torus { k: -k, l: -l },
        }
    }
}

/// Borrowed view of the decomposition a computation runs in. The torus
/// variant carries the lattice coordinates of the simple curve.
#[derive(Clone, Copy, Debug)]
pub enum DecompCtx<'a> {
    Separating(&'a AmalgamCtx),
    NonSeparating(&'a HnnCtx),
    Torus { x: (i64, i64) },
}

/// An integer combination of pairwise non-conjugate class representatives.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FormalSum {
    terms: Vec<(i64, ConjClassRep)>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(i64, ConjClassRep)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of absolute values of the coefficients.
    pub fn abs_sum(&self) -> u64 {
        self.terms.iter().map(|(c, _)| c.unsigned_abs()).sum()
    }

    pub fn negate(&self) -> FormalSum {
        FormalSum { terms: self.terms.iter().map(|(c, r)| (-c, r.clone())).collect() }
    }
}

/// A bracket value together with the counts it certifies.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketResult {
    pub sum: FormalSum,
    /// The fixed global sign convention.
    pub s_convention: i8,
    /// Number of terms of the sequence of y with respect to x.
    pub t: u64,
    /// Sum of absolute values of the collected coefficients.
    pub g: u64,
}

/// Conjugacy of two representatives inside one decomposition.
pub fn rep_conjugate(ctx: DecompCtx<'_>, a: &ConjClassRep, b: &ConjClassRep) -> Result<bool, Error> {
    match (ctx, a, b) {
        (DecompCtx::Separating(c), ConjClassRep::Amalgam(x), ConjClassRep::Amalgam(y)) => {
            conjugacy_test_amalgam(c, x, y)
        }
        (DecompCtx::NonSeparating(c), ConjClassRep::Hnn(x), ConjClassRep::Hnn(y)) => {
            collins_conjugacy(c, x, y)
        }
        (DecompCtx::Torus { .. }, ConjClassRep::Torus { k: k1, l: l1 }, ConjClassRep::Torus { k: k2, l: l2 }) => {
            Ok(k1 == k2 && l1 == l2)
        }
        _ => Err(Error::MixedContext),
    }
}

/// Number of terms of `y` with respect to the decomposition's simple curve.
pub fn t_count(ctx: DecompCtx<'_>, y: &ConjClassRep) -> Result<u64, Error> {
    match (ctx, y) {
        (DecompCtx::Separating(_), ConjClassRep::Amalgam(s)) => {
            Ok(if s.len() <= 1 { 0 } else { s.len() as u64 })
        }
        (DecompCtx::NonSeparating(_), ConjClassRep::Hnn(s)) => Ok(s.t_count() as u64),
        (DecompCtx::Torus { x }, ConjClassRep::Torus { k, l }) => {
            Ok((x.0 * l - x.1 * k).unsigned_abs())
        }
        _ => Err(Error::MixedContext),
    }
}

/// Minimal intersection number with the decomposition's simple curve; equals
/// the term count because the bracket has no cancellation.
pub fn i_count(ctx: DecompCtx<'_>, y: &ConjClassRep) -> Result<u64, Error> {
    t_count(ctx, y)
}

/// Merges conjugate representatives by summing coefficients and drops zeros.
pub fn collect(ctx: DecompCtx<'_>, raw: Vec<(i64, ConjClassRep)>) -> Result<FormalSum, Error> {
    let mut terms: Vec<(i64, ConjClassRep)> = Vec::new();
    for (c, rep) in raw {
        let mut merged = false;
        for (c0, r0) in terms.iter_mut() {
            if rep_conjugate(ctx, r0, &rep)? {
                *c0 += c;
                merged = true;
                break;
            }
        }
        if !merged {
            terms.push((c, rep));
        }
    }
    terms.retain(|(c, _)| *c != 0);
    Ok(FormalSum { terms })
}

fn make_result(ctx: DecompCtx<'_>, t: u64, raw: Vec<(i64, ConjClassRep)>) -> Result<BracketResult, Error> {
    let sum = collect(ctx, raw)?;
    let g = sum.abs_sum();
    Ok(BracketResult { sum, s_convention: 1, t, g })
}

/// Bracket of the separating simple curve with the class of `y`: zero when
/// `n <= 1`, otherwise one term per factor slot, sign `(-1)^i`, with the
/// amalgamating element multiplied into the slot.
pub fn bracket_separating(ctx: &AmalgamCtx, y: &CyclicAmalgamSeq) -> Result<BracketResult, Error> {
    let n = y.len();
    let dctx = DecompCtx::Separating(ctx);
    if n <= 1 {
        return make_result(dctx, 0, Vec::new());
    }
    let raw = (0..n)
        .map(|i| {
            let sign = if (i + 1) % 2 == 1 { -1 } else { 1 };
            (sign, ConjClassRep::Amalgam(y.insert_c_power(ctx, i, 1)))
        })
        .collect();
    make_result(dctx, n as u64, raw)
}

/// Bracket of the non-separating simple curve (the class of the `a` word)
/// with the class of `y`: one term per stable letter, the letter's sign,
/// inserting `a` at positive letters and `b` at negative ones.
pub fn bracket_nonseparating(ctx: &HnnCtx, y: &CyclicHnnSeq) -> Result<BracketResult, Error> {
    let n = y.t_count();
    let dctx = DecompCtx::NonSeparating(ctx);
    if n == 0 {
        return make_result(dctx, 0, Vec::new());
    }
    let raw = (0..n)
        .map(|j| {
            let sign = y.eps()[j].as_i8() as i64;
            (sign, ConjClassRep::Hnn(y.insert_before_t(ctx, j, 1)))
        })
        .collect();
    make_result(dctx, n as u64, raw)
}

/// Closed-torus bracket: `[p, q] = (k1 l2 - l1 k2) · (k1+k2, l1+l2)`.
pub fn torus_bracket(p: (i64, i64), q: (i64, i64)) -> BracketResult {
    let coeff = p.0 * q.1 - p.1 * q.0;
    let t = coeff.unsigned_abs();
    let sum = if coeff == 0 {
        FormalSum::zero()
    } else {
        FormalSum { terms: alloc::vec![(coeff, ConjClassRep::Torus { k: p.0 + q.0, l: p.1 + q.1 })] }
    };
    BracketResult { sum, s_convention: 1, t, g: t }
}

/// Bracket dispatch over the decomposition kind.
pub fn bracket(ctx: DecompCtx<'_>, y: &ConjClassRep) -> Result<BracketResult, Error> {
    match (ctx, y) {
        (DecompCtx::Separating(c), ConjClassRep::Amalgam(s)) => bracket_separating(c, s),
        (DecompCtx::NonSeparating(c), ConjClassRep::Hnn(s)) => bracket_nonseparating(c, s),
        (DecompCtx::Torus { x }, ConjClassRep::Torus { k, l }) => Ok(torus_bracket(x, (*k, *l))),
        _ => Err(Error::MixedContext),
    }
}

/// Bracket against the n-th power of the simple curve: every insertion site
/// receives the inserted word to the n-th power with coefficient n.
pub fn power_bracket(ctx: DecompCtx<'_>, n: u32, y: &ConjClassRep) -> Result<BracketResult, Error> {
    let m = n as i64;
    match (ctx, y) {
        (DecompCtx::Separating(c), ConjClassRep::Amalgam(s)) => {
            let len = s.len();
            if len <= 1 {
                return make_result(ctx, 0, Vec::new());
            }
            let raw = (0..len)
                .map(|i| {
                    let sign = if (i + 1) % 2 == 1 { -m } else { m };
                    (sign, ConjClassRep::Amalgam(s.insert_c_power(c, i, m)))
                })
                .collect();
            make_result(ctx, len as u64, raw)
        }
        (DecompCtx::NonSeparating(c), ConjClassRep::Hnn(s)) => {
            let tc = s.t_count();
            if tc == 0 {
                return make_result(ctx, 0, Vec::new());
            }
            let raw = (0..tc)
                .map(|j| {
                    let sign = s.eps()[j].as_i8() as i64 * m;
                    (sign, ConjClassRep::Hnn(s.insert_before_t(c, j, m)))
                })
                .collect();
            make_result(ctx, tc as u64, raw)
        }
        (DecompCtx::Torus { x }, ConjClassRep::Torus { k, l }) => {
            Ok(torus_bracket((x.0 * m, x.1 * m), (*k, *l)))
        }
        _ => Err(Error::MixedContext),
    }
}

/// The unoriented bracket value in the hat basis, together with `u`, the
/// count of unoriented terms.
#[derive(Clone, Debug, PartialEq)]
pub struct UnorientedResult {
    /// One representative per hat class `z + z̄`.
    pub terms: Vec<(i64, ConjClassRep)>,
    pub u: u64,
}

fn hat_equal(ctx: DecompCtx<'_>, a: &ConjClassRep, b: &ConjClassRep) -> Result<bool, Error> {
    Ok(rep_conjugate(ctx, a, b)? || rep_conjugate(ctx, a, &b.reverse_bar())?)
}

fn hat_collect(
    ctx: DecompCtx<'_>,
    raw: Vec<(i64, ConjClassRep)>,
) -> Result<Vec<(i64, ConjClassRep)>, Error> {
    let mut terms: Vec<(i64, ConjClassRep)> = Vec::new();
    for (c, rep) in raw {
        let mut merged = false;
        for (c0, r0) in terms.iter_mut() {
            if hat_equal(ctx, r0, &rep)? {
                *c0 += c;
                merged = true;
                break;
            }
        }
        if !merged {
            terms.push((c, rep));
        }
    }
    terms.retain(|(c, _)| *c != 0);
    Ok(terms)
}

/// `[x̂, ŷ] = [x,y]^ + [x,ȳ]^` computed from the two oriented brackets and
/// projected to the hat basis.
pub fn unoriented_bracket(ctx: DecompCtx<'_>, y: &ConjClassRep) -> Result<UnorientedResult, Error> {
    let b1 = bracket(ctx, y)?;
    let b2 = bracket(ctx, &y.reverse_bar())?;
    let mut raw: Vec<(i64, ConjClassRep)> = Vec::new();
    raw.extend(b1.sum.terms.iter().cloned());
    raw.extend(b2.sum.terms.iter().cloned());
    let terms = hat_collect(ctx, raw)?;
    let u = terms.iter().map(|(c, _)| c.unsigned_abs()).sum();
    Ok(UnorientedResult { terms, u })
}

/// Unoriented bracket against the n-th power of the simple curve.
pub fn unoriented_power_bracket(
    ctx: DecompCtx<'_>,
    n: u32,
    y: &ConjClassRep,
) -> Result<UnorientedResult, Error> {
    let b1 = power_bracket(ctx, n, y)?;
    let b2 = power_bracket(ctx, n, &y.reverse_bar())?;
    let mut raw: Vec<(i64, ConjClassRep)> = Vec::new();
    raw.extend(b1.sum.terms.iter().cloned());
    raw.extend(b2.sum.terms.iter().cloned());
    let terms = hat_collect(ctx, raw)?;
    let u = terms.iter().map(|(c, _)| c.unsigned_abs()).sum();
    Ok(UnorientedResult { terms, u })
}

/// The action of the Dehn twist along the decomposition's simple curve.
/// `direction` selects one of the two insertion patterns; the two are
/// inverse to each other and which one a given surface orientation realizes
/// is not decided here.
pub fn dehn_twist(
    ctx: DecompCtx<'_>,
    y: &ConjClassRep,
    direction: i8,
) -> Result<ConjClassRep, Error> {
    let dir = if direction >= 0 { 1 } else { -1 };
    match (ctx, y) {
        (DecompCtx::Separating(c), ConjClassRep::Amalgam(s)) => {
            if s.len() < 2 {
                return Err(Error::TooShort);
            }
            // insert x and x̄ alternately: w_1 x w_2 x̄ w_3 x ... w_n x̄
            let mut out = s.clone();
            for i in 0..s.len() {
                let sign = if (i + 1) % 2 == 1 { dir as i64 } else { -(dir as i64) };
                out = out.insert_c_power(c, i, sign);
            }
            Ok(ConjClassRep::Amalgam(out))
        }
        (DecompCtx::NonSeparating(c), ConjClassRep::Hnn(s)) => {
            if s.t_count() < 1 {
                return Err(Error::TooShort);
            }
            // positive letters receive a^{dir}, negative ones b^{-dir}
            let mut out = s.clone();
            for j in 0..s.t_count() {
                let p = match s.eps()[j] {
                    Sign::Pos => dir as i64,
                    Sign::Neg => -(dir as i64),
                };
                out = out.insert_before_t(c, j, p);
            }
            Ok(ConjClassRep::Hnn(out))
        }
        (DecompCtx::Torus { .. }, ConjClassRep::Torus { k, l }) => {
            Ok(ConjClassRep::Torus { k: k + dir as i64 * l, l: *l })
        }
        _ => Err(Error::MixedContext),
    }
}

/// The adjoint action `ad_x(y) = [y, x]` together with the invariance data
/// the bracket terms are predicted to satisfy: every term keeps y's element
/// coset cycle (and, in the HNN model, y's exponent pattern) and y's term
/// count.
#[derive(Clone, Debug)]
pub struct AdResult {
    pub sum: FormalSum,
    pub base_cycle: Option<CosetCycle>,
    pub term_cycles: Vec<CosetCycle>,
    /// Every term's element cycle equals y's.
    pub cycles_match: bool,
    /// Every term's t-count (and, for HNN, exponent pattern) equals y's.
    pub t_match: bool,
}

pub fn ad_apply(ctx: DecompCtx<'_>, y: &ConjClassRep) -> Result<AdResult, Error> {
    let br = bracket(ctx, y)?;
    let sum = br.sum.negate();
    let t_y = t_count(ctx, y)?;
    let mut cycles_match = true;
    let mut t_match = true;
    let mut term_cycles = Vec::new();
    let base_cycle = match (ctx, y) {
        (DecompCtx::Separating(c), ConjClassRep::Amalgam(s)) if s.len() >= 2 => {
            Some(coset_cycle(c, s, CycleFlavor::Element)?)
        }
        (DecompCtx::NonSeparating(c), ConjClassRep::Hnn(s)) if s.t_count() >= 1 => {
            Some(coset_cycle_hnn(c, s, CycleFlavor::Element)?)
        }
        _ => None,
    };
    for (_, term) in sum.terms() {
        if t_count(ctx, term)? != t_y {
            t_match = false;
        }
        match (ctx, term) {
            (DecompCtx::Separating(c), ConjClassRep::Amalgam(s)) => {
                let cyc = coset_cycle(c, s, CycleFlavor::Element)?;
                if base_cycle.as_ref() != Some(&cyc) {
                    cycles_match = false;
                }
                term_cycles.push(cyc);
            }
            (DecompCtx::NonSeparating(c), ConjClassRep::Hnn(s)) => {
                if let ConjClassRep::Hnn(y_seq) = y {
                    if s.eps() != y_seq.eps() {
                        t_match = false;
                    }
                }
                let cyc = coset_cycle_hnn(c, s, CycleFlavor::Element)?;
                if base_cycle.as_ref() != Some(&cyc) {
                    cycles_match = false;
                }
                term_cycles.push(cyc);
            }
            (DecompCtx::Torus { .. }, _) => {}
            _ => return Err(Error::MixedContext),
        }
    }
    Ok(AdResult { sum, base_cycle, term_cycles, cycles_match, t_match })
}

/// Renders a representative in the decomposition's text syntax.
pub fn render_rep(ctx: DecompCtx<'_>, rep: &ConjClassRep) -> Result<String, Error> {
    match (ctx, rep) {
        (DecompCtx::Separating(c), ConjClassRep::Amalgam(s)) => Ok(c.render_terms(s.terms())),
        (DecompCtx::NonSeparating(c), ConjClassRep::Hnn(s)) => Ok(c.render_cyclic(s)),
        (DecompCtx::Torus { .. }, ConjClassRep::Torus { k, l }) => {
            Ok(alloc::format!("{k},{l}"))
        }
        _ => Err(Error::MixedContext),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::{cyclic_reduce_seq, seq_reduce, Factor};
    use crate::freegroup::Alphabet;
    use crate::hnn::cyclic_reduce_hnn;

    fn genus2() -> AmalgamCtx {
        let g = Alphabet::new(&["a1", "b1"]).unwrap();
        let h = Alphabet::new(&["a2", "b2"]).unwrap();
        let xg = g.parse_word("a1 b1 a1' b1'").unwrap();
        let xh = h.parse_word("b2 a2 b2' a2'").unwrap();
        AmalgamCtx::new(g, h, xg, xh).unwrap()
    }

    fn torus_hnn() -> HnnCtx {
        let g = Alphabet::new(&["u", "v"]).unwrap();
        let a = g.parse_word("u").unwrap();
        let b = g.parse_word("v").unwrap();
        HnnCtx::new(g, a, b, "t").unwrap()
    }

    fn aseq(ctx: &AmalgamCtx, text: &str) -> CyclicAmalgamSeq {
        cyclic_reduce_seq(ctx, &seq_reduce(ctx, ctx.parse_terms(text).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn separating_bracket_small() {
        let ctx = genus2();
        let single = aseq(&ctx, "G:a1");
        let br = bracket_separating(&ctx, &single).unwrap();
        assert!(br.sum.is_zero());
        assert_eq!((br.t, br.g), (0, 0));

        let y = aseq(&ctx, "G:a1 | H:a2");
        let br = bracket_separating(&ctx, &y).unwrap();
        assert_eq!((br.t, br.g), (2, 2));
        assert_eq!(br.sum.terms().len(), 2);
        let (c0, r0) = &br.sum.terms()[0];
        assert_eq!(*c0, -1);
        if let ConjClassRep::Amalgam(s) = r0 {
            assert_eq!(s.terms()[0].0, Factor::G);
            assert_eq!(s.terms()[0].1, ctx.alphabet(Factor::G).parse_word("a1 a1 b1 a1' b1'").unwrap());
        } else {
            panic!("wrong kind");
        }
        let (c1, r1) = &br.sum.terms()[1];
        assert_eq!(*c1, 1);
        if let ConjClassRep::Amalgam(s) = r1 {
            assert_eq!(s.terms()[1].1, ctx.alphabet(Factor::H).parse_word("a2 b2 a2 b2' a2'").unwrap());
        } else {
            panic!("wrong kind");
        }
    }

    #[test]
    fn nonseparating_bracket_small() {
        let ctx = torus_hnn();
        let y = cyclic_reduce_hnn(&ctx, &ctx.parse_seq("1 ^+ 1").unwrap()).unwrap();
        let br = bracket_nonseparating(&ctx, &y).unwrap();
        assert_eq!((br.t, br.g), (1, 1));
        let (c, r) = &br.sum.terms()[0];
        assert_eq!(*c, 1);
        assert_eq!(r, &ConjClassRep::Hnn(y.insert_before_t(&ctx, 0, 1)));

        let y = cyclic_reduce_hnn(&ctx, &ctx.parse_seq("1 ^- 1").unwrap()).unwrap();
        let br = bracket_nonseparating(&ctx, &y).unwrap();
        assert_eq!((br.t, br.g), (1, 1));
        assert_eq!(br.sum.terms()[0].0, -1);

        let y = cyclic_reduce_hnn(&ctx, &ctx.parse_seq("u u u").unwrap()).unwrap();
        let br = bracket_nonseparating(&ctx, &y).unwrap();
        assert!(br.sum.is_zero());
    }

    #[test]
    fn torus_closed_form() {
        let br = torus_bracket((1, 0), (1, 1));
        assert_eq!(br.sum.terms(), &[(1, ConjClassRep::Torus { k: 2, l: 1 })]);
        assert_eq!((br.t, br.g), (1, 1));

        let br = torus_bracket((1, 0), (3, 0));
        assert!(br.sum.is_zero());

        let br = torus_bracket((2, 1), (1, 2));
        assert_eq!(br.sum.terms(), &[(3, ConjClassRep::Torus { k: 3, l: 3 })]);
    }

    #[test]
    fn torus_antisymmetry() {
        for k1 in -3..=3 {
            for l1 in -3..=3 {
                for k2 in -3..=3 {
                    for l2 in -3..=3 {
                        let pq = torus_bracket((k1, l1), (k2, l2));
                        let qp = torus_bracket((k2, l2), (k1, l1));
                        assert_eq!(pq.g, qp.g);
                        if !pq.sum.is_zero() {
                            assert_eq!(pq.sum.terms()[0].0, -qp.sum.terms()[0].0);
                        }
                    }
                }
            }
        }
        let self_bracket = torus_bracket((2, 3), (2, 3));
        assert!(self_bracket.sum.is_zero());
    }

    #[test]
    fn collect_merges_and_cancels() {
        let ctx = genus2();
        let dctx = DecompCtx::Separating(&ctx);
        let z = ConjClassRep::Amalgam(aseq(&ctx, "G:a1 | H:a2"));
        let z_rot = ConjClassRep::Amalgam(aseq(&ctx, "H:a2 | G:a1"));
        let sum = collect(dctx, alloc::vec![(1, z.clone()), (-1, z_rot.clone())]).unwrap();
        assert!(sum.is_zero());
        let sum = collect(dctx, alloc::vec![(1, z.clone()), (1, z_rot)]).unwrap();
        assert_eq!(sum.terms().len(), 1);
        assert_eq!(sum.terms()[0].0, 2);
    }

    #[test]
    fn unoriented_doubling_examples() {
        let ctx = genus2();
        let dctx = DecompCtx::Separating(&ctx);
        let y = ConjClassRep::Amalgam(aseq(&ctx, "G:a1 | H:a2"));
        let un = unoriented_bracket(dctx, &y).unwrap();
        assert_eq!(un.u, 4);

        let un = unoriented_bracket(DecompCtx::Torus { x: (1, 0) }, &ConjClassRep::Torus { k: 1, l: 1 }).unwrap();
        assert_eq!(un.u, 2);

        let power_of_x = ConjClassRep::Torus { k: 3, l: 0 };
        let un = unoriented_bracket(DecompCtx::Torus { x: (1, 0) }, &power_of_x).unwrap();
        assert_eq!(un.u, 0);
    }

    #[test]
    fn power_scaling() {
        let ctx = genus2();
        let dctx = DecompCtx::Separating(&ctx);
        let y = ConjClassRep::Amalgam(aseq(&ctx, "G:a1 | H:a2"));
        let b1 = bracket(dctx, &y).unwrap();
        for n in 1..=3u32 {
            let bn = power_bracket(dctx, n, &y).unwrap();
            assert_eq!(bn.g, n as u64 * b1.g);
            let un = unoriented_power_bracket(dctx, n, &y).unwrap();
            assert_eq!(un.u, n as u64 * 4);
        }
    }

    #[test]
    fn dehn_twist_preserves_t() {
        let ctx = genus2();
        let dctx = DecompCtx::Separating(&ctx);
        let y = ConjClassRep::Amalgam(aseq(&ctx, "G:a1 | H:a2"));
        for dir in [1i8, -1] {
            let tw = dehn_twist(dctx, &y, dir).unwrap();
            assert_eq!(t_count(dctx, &tw).unwrap(), t_count(dctx, &y).unwrap());
        }
        // twist then inverse twist returns the class
        let there = dehn_twist(dctx, &y, 1).unwrap();
        let back = dehn_twist(dctx, &there, -1).unwrap();
        assert!(rep_conjugate(dctx, &back, &y).unwrap());

        let hctx = torus_hnn();
        let hdctx = DecompCtx::NonSeparating(&hctx);
        let y = ConjClassRep::Hnn(cyclic_reduce_hnn(&hctx, &hctx.parse_seq("v ^+ u ^-").unwrap()).unwrap());
        for dir in [1i8, -1] {
            let tw = dehn_twist(hdctx, &y, dir).unwrap();
            assert_eq!(t_count(hdctx, &tw).unwrap(), t_count(hdctx, &y).unwrap());
        }
        let there = dehn_twist(hdctx, &y, 1).unwrap();
        let back = dehn_twist(hdctx, &there, -1).unwrap();
        assert!(rep_conjugate(hdctx, &back, &y).unwrap());
    }

    #[test]
    fn ad_invariance_flags() {
        let ctx = genus2();
        let dctx = DecompCtx::Separating(&ctx);
        let y = ConjClassRep::Amalgam(aseq(&ctx, "G:a1 | H:a2"));
        let ad = ad_apply(dctx, &y).unwrap();
        assert!(ad.cycles_match);
        assert!(ad.t_match);
        assert_eq!(ad.sum.abs_sum(), 2);

        let hctx = torus_hnn();
        let hdctx = DecompCtx::NonSeparating(&hctx);
        let y = ConjClassRep::Hnn(cyclic_reduce_hnn(&hctx, &hctx.parse_seq("v ^+ u ^-").unwrap()).unwrap());
        let ad = ad_apply(hdctx, &y).unwrap();
        assert!(ad.cycles_match);
        assert!(ad.t_match);
    }
}
