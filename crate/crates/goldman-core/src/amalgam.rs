//! Sequences, normal forms, conjugacy and double-coset cycles in a free
//! product of two free groups amalgamated over a cyclic subgroup.
//!
//! The amalgamating subgroup C is cyclic and embeds as `xG` in the factor G
//! and `xH` in H; both embedding words must be cyclically reduced and not
//! proper powers, which is what the surface decompositions provide.

use alloc::string::String;
use alloc::vec::Vec;

use crate::freegroup::{
    conjugate_in_free, conjugate_power_class, cyclic_reduce, double_coset_solve_all, is_power_of,
    not_proper_power, Alphabet, Letter, Word,
};
use crate::Error;

/// Which factor of the free product a term lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    G,
    H,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::G => Factor::H,
            Factor::H => Factor::G,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Factor::G => "G",
            Factor::H => "H",
        }
    }
}

/// A free product of two free groups amalgamating a cyclic subgroup, given
/// by the two factor alphabets and the embedding words of the generator of C.
#[derive(Clone, Debug)]
pub struct AmalgamCtx {
    g: Alphabet,
    h: Alphabet,
    x_g: Word,
    x_h: Word,
}

impl AmalgamCtx {
    pub fn new(g: Alphabet, h: Alphabet, x_g: Word, x_h: Word) -> Result<Self, Error> {
        if !g.contains(&x_g) || !h.contains(&x_h) {
            return Err(Error::WrongAlphabet);
        }
        for x in [&x_g, &x_h] {
            if !not_proper_power(x)? {
                return Err(Error::Malformed("embedding word is a proper power".into()));
            }
        }
        Ok(AmalgamCtx { g, h, x_g, x_h })
    }

    pub fn alphabet(&self, f: Factor) -> &Alphabet {
        match f {
            Factor::G => &self.g,
            Factor::H => &self.h,
        }
    }

    /// The image of the generator of C inside the given factor.
    pub fn embedding(&self, f: Factor) -> &Word {
        match f {
            Factor::G => &self.x_g,
            Factor::H => &self.x_h,
        }
    }

    /// Parses `G:a1 b1 | H:a2` into raw terms (not yet reduced).
    pub fn parse_terms(&self, text: &str) -> Result<Vec<(Factor, Word)>, Error> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(Vec::new());
        }
        let mut terms = Vec::new();
        for chunk in trimmed.split('|') {
            let chunk = chunk.trim();
            let (tag, rest) = chunk
                .split_once(':')
                .ok_or_else(|| Error::Malformed(alloc::format!("missing factor tag in `{chunk}`")))?;
            let factor = match tag.trim() {
                "G" => Factor::G,
                "H" => Factor::H,
                other => return Err(Error::Malformed(alloc::format!("unknown factor tag `{other}`"))),
            };
            terms.push((factor, self.alphabet(factor).parse_word(rest)?));
        }
        Ok(terms)
    }

    pub fn render_terms(&self, terms: &[(Factor, Word)]) -> String {
        if terms.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        for (i, (f, w)) in terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" | ");
            }
            out.push_str(f.tag());
            out.push(':');
            out.push_str(&self.alphabet(*f).render_word(w));
        }
        out
    }
}

/// A reduced sequence: terms alternate factors, a single term is
/// nonidentity, and no term of a sequence of length >= 2 lies in C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamSeq {
    terms: Vec<(Factor, Word)>,
}

impl AmalgamSeq {
    pub fn terms(&self) -> &[(Factor, Word)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A sequence all of whose cyclic permutations are reduced; consequently its
/// length is 0, 1 or even, and it represents a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicAmalgamSeq {
    terms: Vec<(Factor, Word)>,
}

impl CyclicAmalgamSeq {
    pub fn terms(&self) -> &[(Factor, Word)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rotate(&self, k: usize) -> CyclicAmalgamSeq {
        let n = self.terms.len();
        if n == 0 {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.rotate_left(k % n);
        CyclicAmalgamSeq { terms }
    }

    /// The representative of the reversed-orientation class: reversed order,
    /// inverted words.
    pub fn reverse_bar(&self) -> CyclicAmalgamSeq {
        CyclicAmalgamSeq {
            terms: self.terms.iter().rev().map(|(f, w)| (*f, w.inverse())).collect(),
        }
    }

    /// The lexicographically least rotation, used as a deterministic key.
    pub fn canonical_rotation(&self) -> CyclicAmalgamSeq {
        let n = self.terms.len();
        (0..n.max(1)).map(|k| self.rotate(k)).min_by(|a, b| a.terms.cmp(&b.terms)).unwrap()
    }

    /// Replaces `w_i` by `w_i · x^p` (embedding into `w_i`'s factor). The
    /// result is again cyclically reduced because a non-C term stays non-C
    /// under right multiplication by C.
    pub fn insert_c_power(&self, ctx: &AmalgamCtx, i: usize, p: i64) -> CyclicAmalgamSeq {
        debug_assert!(self.len() >= 2);
        let mut terms = self.terms.clone();
        let (f, w) = &terms[i];
        let new_word = w.mul(&ctx.embedding(*f).pow(p));
        debug_assert!(!new_word.is_empty());
        terms[i] = (*f, new_word);
        CyclicAmalgamSeq { terms }
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<(Factor, Word)>) -> Self {
        CyclicAmalgamSeq { terms }
    }
}

fn merge_pass(terms: Vec<(Factor, Word)>) -> Vec<(Factor, Word)> {
    let mut merged: Vec<(Factor, Word)> = Vec::new();
    for (f, w) in terms {
        if w.is_empty() {
            continue;
        }
        if let Some(last) = merged.last_mut() {
            if last.0 == f {
                last.1 = last.1.mul(&w);
                if last.1.is_empty() {
                    merged.pop();
                }
                continue;
            }
        }
        merged.push((f, w));
    }
    merged
}

fn reduce_terms(ctx: &AmalgamCtx, mut terms: Vec<(Factor, Word)>) -> Result<Vec<(Factor, Word)>, Error> {
    loop {
        terms = merge_pass(terms);
        if terms.len() < 2 {
            return Ok(terms);
        }
        // A term lying in C translates into the neighboring factor, where the
        // next merge pass absorbs it.
        let mut translated = false;
        for idx in 0..terms.len() {
            let (f, w) = &terms[idx];
            if let Some(p) = is_power_of(w, ctx.embedding(*f))? {
                let other = f.other();
                terms[idx] = (other, ctx.embedding(other).pow(p));
                translated = true;
                break;
            }
        }
        if !translated {
            return Ok(terms);
        }
    }
}

/// Normalizes raw terms into a reduced sequence: merges same-factor
/// neighbors, drops identities and translates C-terms across the
/// amalgamation. The product is unchanged as a group element.
pub fn seq_reduce(ctx: &AmalgamCtx, raw: Vec<(Factor, Word)>) -> Result<AmalgamSeq, Error> {
    for (f, w) in &raw {
        if !ctx.alphabet(*f).contains(w) {
            return Err(Error::WrongAlphabet);
        }
    }
    Ok(AmalgamSeq { terms: reduce_terms(ctx, raw)? })
}

/// Conjugates a reduced sequence until every cyclic permutation is reduced.
/// The number of terms of the result is an invariant of the conjugacy class.
pub fn cyclic_reduce_seq(ctx: &AmalgamCtx, s: &AmalgamSeq) -> Result<CyclicAmalgamSeq, Error> {
    let mut terms = s.terms.clone();
    loop {
        if terms.len() >= 2 && terms.first().unwrap().0 == terms.last().unwrap().0 {
            // conjugate by the last term: (w_n w_1, w_2, ..., w_{n-1})
            let (_, w_last) = terms.pop().unwrap();
            terms[0].1 = w_last.mul(&terms[0].1);
            terms = reduce_terms(ctx, terms)?;
        } else {
            break;
        }
    }
    if terms.len() == 1 {
        // normalize the lone factor word to its canonical cyclic core
        let (f, w) = terms.pop().unwrap();
        terms.push((f, cyclic_reduce(&w).0.as_word()));
    }
    Ok(CyclicAmalgamSeq { terms })
}

pub fn word_is_in_c(ctx: &AmalgamCtx, f: Factor, w: &Word) -> Result<bool, Error> {
    Ok(is_power_of(w, ctx.embedding(f))?.is_some())
}

/// Equality of products of two reduced sequences, decided by deterministic
/// propagation of the connecting C-chain.
pub fn equal_products(ctx: &AmalgamCtx, s: &AmalgamSeq, t: &AmalgamSeq) -> Result<bool, Error> {
    if s.len() != t.len() {
        return Ok(false);
    }
    let n = s.len();
    if n == 0 {
        return Ok(true);
    }
    if (0..n).any(|j| s.terms[j].0 != t.terms[j].0) {
        return Ok(false);
    }
    if n == 1 {
        return Ok(s.terms[0].1 == t.terms[0].1);
    }
    // w_1 = h_1 c_1, w_i = c_{i-1}^{-1} h_i c_i, w_n = c_{n-1}^{-1} h_n
    let x0 = ctx.embedding(s.terms[0].0);
    let Some(mut p) = is_power_of(&t.terms[0].1.inverse().mul(&s.terms[0].1), x0)? else {
        return Ok(false);
    };
    for j in 1..n - 1 {
        let x = ctx.embedding(s.terms[j].0);
        let z = t.terms[j].1.inverse().mul(&x.pow(p)).mul(&s.terms[j].1);
        match is_power_of(&z, x)? {
            Some(next) => p = next,
            None => return Ok(false),
        }
    }
    let x = ctx.embedding(s.terms[n - 1].0);
    Ok(s.terms[n - 1].1 == x.pow(-p).mul(&t.terms[n - 1].1))
}

/// Conjugacy of two cyclically reduced sequences.
///
/// Term counts must agree. Short sequences reduce to free-group conjugacy
/// inside a factor, translating through C when the classes meet it. For
/// n >= 2 the test scans rotations with matching factor patterns, seeds the
/// C-chain from the bounded double-coset solver at position 0 and propagates
/// it deterministically; the products are conjugate exactly when some chain
/// closes up.
pub fn conjugacy_test_amalgam(
    ctx: &AmalgamCtx,
    s: &CyclicAmalgamSeq,
    t: &CyclicAmalgamSeq,
) -> Result<bool, Error> {
    if s.len() != t.len() {
        return Ok(false);
    }
    let n = s.len();
    if n == 0 {
        return Ok(true);
    }
    if n == 1 {
        let (fs, ws) = &s.terms[0];
        let (ft, wt) = &t.terms[0];
        if fs == ft {
            return Ok(conjugate_in_free(ws, wt));
        }
        // Cross-factor conjugacy passes through C: both classes must meet it
        // with the same exponent.
        let ps = conjugate_power_class(ws, ctx.embedding(*fs))?;
        let pt = conjugate_power_class(wt, ctx.embedding(*ft))?;
        return Ok(matches!((ps, pt), (Some(p), Some(q)) if p == q));
    }
    for k in 0..n {
        if (0..n).any(|j| s.terms[j].0 != t.terms[(j + k) % n].0) {
            continue;
        }
        let x0 = ctx.embedding(s.terms[0].0);
        let seeds = double_coset_solve_all(&s.terms[0].1, &t.terms[k].1, x0, x0)?;
        'seed: for (alpha, beta) in seeds {
            // w_j = x^{-q_j} v_{j+k} x^{q_{j+1}}, q_0 = -alpha, q_1 = beta
            let q0 = -alpha;
            let mut q = beta;
            for j in 1..n {
                let x = ctx.embedding(s.terms[j].0);
                let v = &t.terms[(j + k) % n].1;
                let z = v.inverse().mul(&x.pow(q)).mul(&s.terms[j].1);
                match is_power_of(&z, x)? {
                    Some(next) => q = next,
                    None => continue 'seed,
                }
            }
            if q == q0 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Canonical label of a double coset, used as an entry of a [`CosetCycle`].
///
/// Keys are the minimal representatives found by exhaustive bounded search
/// over the coset parameters, with ties broken lexicographically, so equal
/// cosets get equal keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CosetKey {
    /// C w C inside one amalgam factor.
    AmalgamElement { factor: Factor, word: Vec<Letter> },
    /// C w_i w_{i+1} C across two factors.
    AmalgamProduct { left: (Factor, Vec<Letter>), right: (Factor, Vec<Letter>) },
    /// C_{-eps_l} g C_{eps_r} in the base of an HNN extension.
    HnnElement { eps_l: i8, eps_r: i8, word: Vec<Letter> },
    /// C t g_i t g_{i+1} t C with the flanking cosets folded onto the words.
    HnnProduct { eps: [i8; 3], left: Vec<Letter>, right: Vec<Letter> },
}

/// A cyclic sequence of double-coset keys; a conjugacy invariant compared up
/// to rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetCycle {
    keys: Vec<CosetKey>,
}

impl CosetCycle {
    pub fn new(keys: Vec<CosetKey>) -> Self {
        CosetCycle { keys }
    }

    pub fn keys(&self) -> &[CosetKey] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn rotation_equal(&self, other: &CosetCycle) -> bool {
        let n = self.keys.len();
        if n != other.keys.len() {
            return false;
        }
        if n == 0 {
            return true;
        }
        (0..n).any(|k| (0..n).all(|j| self.keys[j] == other.keys[(j + k) % n]))
    }
}

fn window(len: usize, x_len: usize) -> i64 {
    (len.div_ceil(x_len.max(1)) + 3) as i64
}

/// Minimal `(len, letters)` form of `x^p · w · x^q` over the bounded window.
fn min_coset_word(w: &Word, x: &Word) -> Vec<Letter> {
    let b = window(w.len(), x.len());
    let mut best: Option<Word> = None;
    for p in -b..=b {
        let left = x.pow(p).mul(w);
        for q in -b..=b {
            let cand = left.mul(&x.pow(q));
            let better = match &best {
                None => true,
                Some(cur) => (cand.len(), cand.letters()) < (cur.len(), cur.letters()),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best.unwrap().letters().to_vec()
}

/// Minimal form of the pair `(xl^a · w1 · xm^m, xm'^{-m} · w2 · xr^b)` over
/// the three coset parameters: the flanks of the double coset plus the
/// C-shift across the middle seam.
#[allow(clippy::too_many_arguments)]
fn min_coset_pair(
    w1: &Word,
    w2: &Word,
    x_left: &Word,
    x_mid_left: &Word,
    x_mid_right: &Word,
    x_right: &Word,
) -> (Vec<Letter>, Vec<Letter>) {
    let b1 = window(w1.len(), x_left.len().min(x_mid_left.len()));
    let b2 = window(w2.len(), x_right.len().min(x_mid_right.len()));
    let bm = b1.max(b2);
    let mut best: Option<(usize, Vec<Letter>, Vec<Letter>)> = None;
    for m in -bm..=bm {
        let w1m = w1.mul(&x_mid_left.pow(m));
        let w2m = x_mid_right.pow(-m).mul(w2);
        for a in -b1..=b1 {
            let left = x_left.pow(a).mul(&w1m);
            for b in -b2..=b2 {
                let right = w2m.mul(&x_right.pow(b));
                let len = left.len() + right.len();
                let cand = (len, left.letters().to_vec(), right.letters().to_vec());
                let better = match &best {
                    None => true,
                    Some(cur) => (cand.0, &cand.1, &cand.2) < (cur.0, &cur.1, &cur.2),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
    }
    let (_, l, r) = best.unwrap();
    (l, r)
}

/// Which kind of coset cycle to extract from a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleFlavor {
    /// One key per term: C w_i C.
    Element,
    /// One key per adjacent pair: C w_i w_{i+1} C.
    Product,
}

/// The cyclic sequence of double cosets attached to a cyclically reduced
/// sequence. Conjugate inputs yield rotation-equal product cycles.
pub fn coset_cycle(
    ctx: &AmalgamCtx,
    s: &CyclicAmalgamSeq,
    flavor: CycleFlavor,
) -> Result<CosetCycle, Error> {
    let n = s.len();
    if n < 2 {
        return Err(Error::TooShort);
    }
    let mut keys = Vec::with_capacity(n);
    for i in 0..n {
        let (f, w) = &s.terms[i];
        match flavor {
            CycleFlavor::Element => {
                keys.push(CosetKey::AmalgamElement {
                    factor: *f,
                    word: min_coset_word(w, ctx.embedding(*f)),
                });
            }
            CycleFlavor::Product => {
                let (f2, w2) = &s.terms[(i + 1) % n];
                let (l, r) = min_coset_pair(
                    w,
                    w2,
                    ctx.embedding(*f),
                    ctx.embedding(*f),
                    ctx.embedding(*f2),
                    ctx.embedding(*f2),
                );
                keys.push(CosetKey::AmalgamProduct { left: (*f, l), right: (*f2, r) });
            }
        }
    }
    Ok(CosetCycle::new(keys))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus2() -> AmalgamCtx {
        let g = Alphabet::new(&["a1", "b1"]).unwrap();
        let h = Alphabet::new(&["a2", "b2"]).unwrap();
        let xg = g.parse_word("a1 b1 a1' b1'").unwrap();
        let xh = h.parse_word("b2 a2 b2' a2'").unwrap();
        AmalgamCtx::new(g, h, xg, xh).unwrap()
    }

    fn seq(ctx: &AmalgamCtx, text: &str) -> CyclicAmalgamSeq {
        let raw = ctx.parse_terms(text).unwrap();
        let red = seq_reduce(ctx, raw).unwrap();
        cyclic_reduce_seq(ctx, &red).unwrap()
    }

    #[test]
    fn rejects_proper_power_embedding() {
        let g = Alphabet::new(&["x"]).unwrap();
        let h = Alphabet::new(&["y"]).unwrap();
        let xg = g.parse_word("x x").unwrap();
        let xh = h.parse_word("y y y").unwrap();
        assert!(AmalgamCtx::new(g, h, xg, xh).is_err());
    }

    #[test]
    fn seq_reduce_merges_and_translates() {
        let ctx = genus2();
        let raw = ctx.parse_terms("G:a1 | G:b1").unwrap();
        let red = seq_reduce(&ctx, raw).unwrap();
        assert_eq!(red.terms(), &[(Factor::G, ctx.alphabet(Factor::G).parse_word("a1 b1").unwrap())]);

        let raw = ctx.parse_terms("G:a1 | H:b2 a2 b2' a2'").unwrap();
        let red = seq_reduce(&ctx, raw).unwrap();
        assert_eq!(
            red.terms(),
            &[(Factor::G, ctx.alphabet(Factor::G).parse_word("a1 a1 b1 a1' b1'").unwrap())]
        );

        let raw = ctx.parse_terms("G:a1 | H:a2 | H:a2'").unwrap();
        let red = seq_reduce(&ctx, raw).unwrap();
        assert_eq!(red.terms(), &[(Factor::G, ctx.alphabet(Factor::G).parse_word("a1").unwrap())]);
    }

    #[test]
    fn whole_c_pair_collapses() {
        let ctx = genus2();
        let raw = ctx.parse_terms("G:a1 b1 a1' b1' | H:a2 b2 a2' b2'").unwrap();
        let red = seq_reduce(&ctx, raw).unwrap();
        assert!(red.is_empty());
    }

    #[test]
    fn cyclic_reduction_peels() {
        let ctx = genus2();
        let s = seq(&ctx, "G:a1 | H:a2 | G:a1'");
        assert_eq!(s.len(), 1);
        assert_eq!(s.terms()[0].0, Factor::H);
        assert_eq!(s.terms()[0].1, ctx.alphabet(Factor::H).parse_word("a2").unwrap());

        let s = seq(&ctx, "G:a1 | H:a2");
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn conjugacy_rotation_and_c_shift() {
        let ctx = genus2();
        let s = seq(&ctx, "G:a1 | H:a2");
        let r = seq(&ctx, "H:a2 | G:a1");
        assert!(conjugacy_test_amalgam(&ctx, &s, &r).unwrap());

        // conjugation by the amalgamating element shifts C across the seam:
        // x (a1 a2) x^{-1} = (xG a1) (a2 xH^{-1})
        let shifted = seq(&ctx, "G:a1 b1 a1' b1' a1 | H:a2 a2 b2 a2' b2'");
        assert!(conjugacy_test_amalgam(&ctx, &shifted, &s).unwrap());

        // inserting x on only one side changes the class
        let bumped = seq(&ctx, "G:a1 a1 b1 a1' b1' | H:a2");
        assert!(!conjugacy_test_amalgam(&ctx, &bumped, &s).unwrap());
    }

    #[test]
    fn conjugacy_short_sequences() {
        let ctx = genus2();
        assert!(conjugacy_test_amalgam(&ctx, &seq(&ctx, "1"), &seq(&ctx, "1")).unwrap());
        let u = seq(&ctx, "G:b1 a1 b1'");
        let v = seq(&ctx, "G:a1");
        assert!(conjugacy_test_amalgam(&ctx, &u, &v).unwrap());
        // xG and xH are identified in the amalgam
        let cg = seq(&ctx, "G:a1 b1 a1' b1'");
        let ch = seq(&ctx, "H:b2 a2 b2' a2'");
        assert!(conjugacy_test_amalgam(&ctx, &cg, &ch).unwrap());
        let ch_inv = seq(&ctx, "H:a2 b2 a2' b2'");
        assert!(!conjugacy_test_amalgam(&ctx, &cg, &ch_inv).unwrap());
        assert!(!conjugacy_test_amalgam(&ctx, &v, &seq(&ctx, "H:a2")).unwrap());
    }

    #[test]
    fn equal_products_chain() {
        let ctx = genus2();
        let a = seq_reduce(&ctx, ctx.parse_terms("G:a1 a1 b1 a1' b1' | H:a2").unwrap()).unwrap();
        let b = seq_reduce(&ctx, ctx.parse_terms("G:a1 | H:b2 a2 b2' a2' a2").unwrap()).unwrap();
        // a1 * xG * a2 = a1 * xH * a2 as group elements
        assert!(equal_products(&ctx, &a, &b).unwrap());
        let c = seq_reduce(&ctx, ctx.parse_terms("G:a1 | H:a2").unwrap()).unwrap();
        assert!(!equal_products(&ctx, &a, &c).unwrap());
    }

    #[test]
    fn product_cycle_shape_and_invariance() {
        let ctx = genus2();
        let s = seq(&ctx, "G:a1 | H:a2");
        let cycle = coset_cycle(&ctx, &s, CycleFlavor::Product).unwrap();
        assert_eq!(cycle.len(), 2);

        let r = seq(&ctx, "H:a2 | G:a1");
        let cycle_r = coset_cycle(&ctx, &r, CycleFlavor::Product).unwrap();
        assert!(cycle.rotation_equal(&cycle_r));
        assert!(cycle != cycle_r || s.terms() == r.terms());
    }

    #[test]
    fn element_cycle_absorbs_c() {
        let ctx = genus2();
        let s = seq(&ctx, "G:a1 | H:a2");
        // replace a1 by xG a1 xG: same double coset C a1 C
        let xg = ctx.embedding(Factor::G).clone();
        let shifted_word = xg.mul(&s.terms()[0].1).mul(&xg);
        let shifted = CyclicAmalgamSeq::from_terms_unchecked(alloc::vec![
            (Factor::G, shifted_word),
            s.terms()[1].clone(),
        ]);
        let c1 = coset_cycle(&ctx, &s, CycleFlavor::Element).unwrap();
        let c2 = coset_cycle(&ctx, &shifted, CycleFlavor::Element).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn too_short_for_cycles() {
        let ctx = genus2();
        let s = seq(&ctx, "G:a1");
        assert!(matches!(coset_cycle(&ctx, &s, CycleFlavor::Element), Err(Error::TooShort)));
    }
}
