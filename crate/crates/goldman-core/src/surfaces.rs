//! Surface decompositions induced by a named simple closed curve: built-in
//! presentations, ambient-word parsers into amalgam/HNN sequences, class
//! enumerators and the desk-scale Thurston vector.
//!
//! Decompositions are taken as validated data: the built-ins encode the
//! standard presentations, and user-supplied ones are checked against the
//! module invariants (embedding words cyclically reduced, not proper powers,
//! evaluation maps consistent with the stable-letter relation) but not
//! against any geometric model.

use alloc::string::String;
use alloc::vec::Vec;

use crate::amalgam::{cyclic_reduce_seq, seq_reduce, AmalgamCtx, CyclicAmalgamSeq, Factor};
use crate::freegroup::{is_power_of, Alphabet, Letter, Word};
use crate::goldman::{i_count, rep_conjugate, ConjClassRep, DecompCtx};
use crate::hnn::{cyclic_reduce_hnn, CyclicHnnSeq, HnnCtx, HnnSeq, Sign};
use crate::Error;

/// One symbol of a generator-map image: a base-group letter or a stable
/// letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapItem {
    Base(Letter),
    Stable(Sign),
}

impl MapItem {
    fn inverse(self) -> MapItem {
        match self {
            MapItem::Base(l) => MapItem::Base(l.inverse()),
            MapItem::Stable(s) => MapItem::Stable(s.flip()),
        }
    }
}

/// Evaluation of base generators and the stable letter into an ambient free
/// group; present when the decomposition has a faithful ambient model.
#[derive(Clone, Debug)]
pub struct EvalMap {
    base_images: Vec<Word>,
    t_image: Word,
}

/// A registry entry tying a surface and a named simple closed curve to the
/// algebraic decomposition the curve induces.
#[derive(Clone, Debug)]
pub enum SurfaceDecomposition {
    Separating {
        name: String,
        ctx: AmalgamCtx,
    },
    NonSeparating {
        name: String,
        ctx: HnnCtx,
        ambient: Alphabet,
        gen_map: Vec<Vec<MapItem>>,
        eval: Option<EvalMap>,
    },
    ClosedTorus {
        name: String,
        basis: (String, String),
        x: (i64, i64),
    },
}

/// Parses a word over the base alphabet extended by the stable letter.
pub fn parse_mixed(ctx: &HnnCtx, text: &str) -> Result<Vec<MapItem>, Error> {
    let mut items = Vec::new();
    let base = ctx.alphabet();
    for chunk in text.split_whitespace() {
        if chunk == "1" {
            continue;
        }
        let mut rest = chunk;
        while !rest.is_empty() {
            let t_hit = rest.starts_with(ctx.stable_name()).then_some(ctx.stable_name().len());
            let base_hit = (0..base.rank())
                .filter(|&i| rest.starts_with(base.name(i as u32)))
                .max_by_key(|&i| base.name(i as u32).len());
            // longest match wins between the stable letter and base names
            let use_stable = match (t_hit, base_hit) {
                (Some(tl), Some(bi)) => tl >= base.name(bi as u32).len(),
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => return Err(Error::UnknownSymbol(rest.into())),
            };
            let (item, len) = if use_stable {
                (MapItem::Stable(Sign::Pos), ctx.stable_name().len())
            } else {
                let bi = base_hit.unwrap() as u32;
                (MapItem::Base(Letter::new(bi, false)), base.name(bi).len())
            };
            rest = &rest[len..];
            let inverted = if let Some(stripped) = rest.strip_prefix('\'') {
                rest = stripped;
                true
            } else {
                false
            };
            items.push(if inverted { item.inverse() } else { item });
        }
    }
    Ok(items)
}

/// Groups a stream of base letters and stable letters into a linear sequence.
fn items_to_seq(items: &[MapItem]) -> HnnSeq {
    let mut words: Vec<Word> = Vec::new();
    let mut eps: Vec<Sign> = Vec::new();
    let mut current: Vec<Letter> = Vec::new();
    for item in items {
        match item {
            MapItem::Base(l) => current.push(*l),
            MapItem::Stable(s) => {
                words.push(Word::reduced_from(current.drain(..)));
                eps.push(*s);
            }
        }
    }
    words.push(Word::reduced_from(current.drain(..)));
    HnnSeq::from_parts(words, eps).expect("by construction")
}

impl EvalMap {
    pub fn new(ctx: &HnnCtx, ambient: &Alphabet, images: &[&str], t_image: &str) -> Result<Self, Error> {
        if images.len() != ctx.alphabet().rank() {
            return Err(Error::Malformed("need one image per base generator".into()));
        }
        let base_images: Vec<Word> =
            images.iter().map(|s| ambient.parse_word(s)).collect::<Result<_, _>>()?;
        let t_image = ambient.parse_word(t_image)?;
        Ok(EvalMap { base_images, t_image })
    }

    pub fn eval_word(&self, w: &Word) -> Word {
        let mut out = Word::identity();
        for l in w.letters() {
            let img = &self.base_images[l.sym as usize];
            out = out.mul(&if l.inv { img.inverse() } else { img.clone() });
        }
        out
    }

    pub fn eval_cyclic(&self, s: &CyclicHnnSeq) -> Word {
        let mut out = self.eval_word(&s.words()[0]);
        for j in 0..s.t_count() {
            let t_part = match s.eps()[j] {
                Sign::Pos => self.t_image.clone(),
                Sign::Neg => self.t_image.inverse(),
            };
            out = out.mul(&t_part);
            if j + 1 < s.t_count() {
                out = out.mul(&self.eval_word(&s.words()[j + 1]));
            }
        }
        out
    }

    pub fn eval_linear(&self, s: &HnnSeq) -> Word {
        let mut out = self.eval_word(&s.words()[0]);
        for j in 0..s.t_count() {
            let t_part = match s.eps()[j] {
                Sign::Pos => self.t_image.clone(),
                Sign::Neg => self.t_image.inverse(),
            };
            out = out.mul(&t_part).mul(&self.eval_word(&s.words()[j + 1]));
        }
        out
    }
}

impl SurfaceDecomposition {
    pub fn separating(name: &str, ctx: AmalgamCtx) -> Self {
        SurfaceDecomposition::Separating { name: name.into(), ctx }
    }

    /// Builds a non-separating entry; when an evaluation map is supplied the
    /// stable-letter relation and the generator-map round trip are checked.
    pub fn non_separating(
        name: &str,
        ctx: HnnCtx,
        ambient: Alphabet,
        gen_map_texts: &[&str],
        eval: Option<EvalMap>,
    ) -> Result<Self, Error> {
        if gen_map_texts.len() != ambient.rank() {
            return Err(Error::Malformed("need one image per ambient generator".into()));
        }
        let gen_map: Vec<Vec<MapItem>> =
            gen_map_texts.iter().map(|s| parse_mixed(&ctx, s)).collect::<Result<_, _>>()?;
        if let Some(ev) = &eval {
            // t^{-1} a t = b must hold in the ambient group
            let lhs = ev.t_image.inverse().mul(&ev.eval_word(ctx.a_word())).mul(&ev.t_image);
            if lhs != ev.eval_word(ctx.b_word()) {
                return Err(Error::Malformed("evaluation map violates the stable relation".into()));
            }
            for (sym, image) in gen_map.iter().enumerate() {
                let seq = items_to_seq(image);
                let back = ev.eval_linear(&seq);
                if back != Word::generator(sym as u32) {
                    return Err(Error::Malformed("generator map does not round-trip".into()));
                }
            }
        }
        Ok(SurfaceDecomposition::NonSeparating { name: name.into(), ctx, ambient, gen_map, eval })
    }

    pub fn closed_torus(name: &str, a: &str, c: &str, x: (i64, i64)) -> Self {
        SurfaceDecomposition::ClosedTorus { name: name.into(), basis: (a.into(), c.into()), x }
    }

    /// The built-in decompositions.
    pub fn builtin(name: &str) -> Result<Self, Error> {
        match name {
            "genus2_separating" => {
                let g = Alphabet::new(&["a1", "b1"])?;
                let h = Alphabet::new(&["a2", "b2"])?;
                let xg = g.parse_word("a1 b1 a1' b1'")?;
                let xh = h.parse_word("b2 a2 b2' a2'")?;
                Ok(SurfaceDecomposition::separating(name, AmalgamCtx::new(g, h, xg, xh)?))
            }
            "onceholed_torus_nonsep" => {
                let base = Alphabet::new(&["u", "v"])?;
                let a = base.parse_word("u")?;
                let b = base.parse_word("v")?;
                let ctx = HnnCtx::new(base, a, b, "t")?;
                let ambient = Alphabet::new(&["a", "b"])?;
                let eval = EvalMap::new(&ctx, &ambient, &["a", "b' a b"], "b")?;
                SurfaceDecomposition::non_separating(name, ctx, ambient, &["u", "t"], Some(eval))
            }
            "closed_torus" => Ok(SurfaceDecomposition::closed_torus(name, "a", "c", (1, 0))),
            other => Err(Error::UnknownName(other.into())),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            SurfaceDecomposition::Separating { name, .. } => name,
            SurfaceDecomposition::NonSeparating { name, .. } => name,
            SurfaceDecomposition::ClosedTorus { name, .. } => name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SurfaceDecomposition::Separating { .. } => "separating",
            SurfaceDecomposition::NonSeparating { .. } => "nonseparating",
            SurfaceDecomposition::ClosedTorus { .. } => "torus",
        }
    }

    pub fn decomp_ctx(&self) -> DecompCtx<'_> {
        match self {
            SurfaceDecomposition::Separating { ctx, .. } => DecompCtx::Separating(ctx),
            SurfaceDecomposition::NonSeparating { ctx, .. } => DecompCtx::NonSeparating(ctx),
            SurfaceDecomposition::ClosedTorus { x, .. } => DecompCtx::Torus { x: *x },
        }
    }

    /// Replaces the simple-curve coordinates of a torus entry.
    pub fn with_torus_curve(self, x: (i64, i64)) -> Self {
        match self {
            SurfaceDecomposition::ClosedTorus { name, basis, .. } => {
                SurfaceDecomposition::ClosedTorus { name, basis, x }
            }
            other => other,
        }
    }

    pub fn eval_map(&self) -> Option<&EvalMap> {
        match self {
            SurfaceDecomposition::NonSeparating { eval, .. } => eval.as_ref(),
            _ => None,
        }
    }

    pub fn hnn_ctx(&self) -> Option<&HnnCtx> {
        match self {
            SurfaceDecomposition::NonSeparating { ctx, .. } => Some(ctx),
            _ => None,
        }
    }

    pub fn amalgam_ctx(&self) -> Option<&AmalgamCtx> {
        match self {
            SurfaceDecomposition::Separating { ctx, .. } => Some(ctx),
            _ => None,
        }
    }

    /// Parses class text into the canonical cyclically reduced representative.
    ///
    /// Separating entries take factor-tagged sequence text. Non-separating
    /// entries take base sequence text when stable-letter markers are
    /// present, otherwise an ambient word translated through the generator
    /// map. Torus entries take `k,l`.
    pub fn word_to_class(&self, text: &str) -> Result<ConjClassRep, Error> {
        match self {
            SurfaceDecomposition::Separating { ctx, .. } => {
                let raw = ctx.parse_terms(text)?;
                let red = seq_reduce(ctx, raw)?;
                Ok(ConjClassRep::Amalgam(cyclic_reduce_seq(ctx, &red)?))
            }
            SurfaceDecomposition::NonSeparating { ctx, ambient, gen_map, .. } => {
                if text.split_whitespace().any(|t| t == "^+" || t == "^-") {
                    let seq = ctx.parse_seq(text)?;
                    return Ok(ConjClassRep::Hnn(cyclic_reduce_hnn(ctx, &seq)?));
                }
                let ambient_word = ambient.parse_word(text)?;
                let mut items = Vec::new();
                for l in ambient_word.letters() {
                    let image = &gen_map[l.sym as usize];
                    if l.inv {
                        items.extend(image.iter().rev().map(|it| it.inverse()));
                    } else {
                        items.extend(image.iter().copied());
                    }
                }
                let seq = items_to_seq(&items);
                Ok(ConjClassRep::Hnn(cyclic_reduce_hnn(ctx, &seq)?))
            }
            SurfaceDecomposition::ClosedTorus { .. } => {
                let (k, l) = parse_torus_coords(text)?;
                Ok(ConjClassRep::Torus { k, l })
            }
        }
    }

    /// The ambient free-group image of a class, when the decomposition has
    /// an evaluation map.
    pub fn ambient_image(&self, rep: &ConjClassRep) -> Option<Word> {
        match (self, rep) {
            (SurfaceDecomposition::NonSeparating { eval: Some(ev), .. }, ConjClassRep::Hnn(s)) => {
                Some(ev.eval_cyclic(s))
            }
            _ => None,
        }
    }
}

pub fn parse_torus_coords(text: &str) -> Result<(i64, i64), Error> {
    let mut parts = text.split(',');
    let k = parts
        .next()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .ok_or_else(|| Error::Malformed(alloc::format!("expected `k,l`, got `{text}`")))?;
    let l = parts
        .next()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .ok_or_else(|| Error::Malformed(alloc::format!("expected `k,l`, got `{text}`")))?;
    if parts.next().is_some() {
        return Err(Error::Malformed(alloc::format!("expected `k,l`, got `{text}`")));
    }
    Ok((k, l))
}

/// Bound parameters for class enumeration.
#[derive(Clone, Copy, Debug)]
pub struct ClassBounds {
    /// Largest sequence term count (amalgam) or stable-letter count (HNN);
    /// for the torus, the coordinate box radius.
    pub max_n: usize,
    /// Largest factor/base word length.
    pub max_len: usize,
    /// Safety cap on the number of emitted sequences.
    pub max_count: usize,
}

impl ClassBounds {
    pub fn new(max_n: usize, max_len: usize) -> Self {
        ClassBounds { max_n, max_len, max_count: 1_000_000 }
    }
}

/// All freely reduced words of length <= max_len, ordered by length then
/// lexicographically.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let rank = alphabet.rank() as u32;
    let mut out = alloc::vec![Word::identity()];
    let mut layer: Vec<Vec<Letter>> = alloc::vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &layer {
            for sym in 0..rank {
                for inv in [false, true] {
                    let l = Letter::new(sym, inv);
                    if prefix.last().is_some_and(|p| p.sym == l.sym && p.inv != l.inv) {
                        continue;
                    }
                    let mut w = prefix.clone();
                    w.push(l);
                    next.push(w);
                }
            }
        }
        out.extend(next.iter().map(|ls| Word::reduced_from(ls.iter().copied())));
        layer = next;
    }
    out
}

fn amalgam_slot_words(ctx: &AmalgamCtx, f: Factor, max_len: usize) -> Result<Vec<Word>, Error> {
    let mut out = Vec::new();
    for w in words_up_to(ctx.alphabet(f), max_len) {
        if w.is_empty() {
            continue;
        }
        if is_power_of(&w, ctx.embedding(f))?.is_none() {
            out.push(w);
        }
    }
    Ok(out)
}

/// Every cyclically reduced amalgam sequence with the given term counts and
/// factor-word length bound, without conjugacy deduplication.
pub fn raw_amalgam_sequences(
    ctx: &AmalgamCtx,
    term_counts: &[usize],
    max_len: usize,
    max_count: usize,
) -> Result<Vec<CyclicAmalgamSeq>, Error> {
    let mut out = Vec::new();
    for &n in term_counts {
        match n {
            0 => out.push(CyclicAmalgamSeq::from_terms_unchecked(Vec::new())),
            1 => {
                for f in [Factor::G, Factor::H] {
                    for w in words_up_to(ctx.alphabet(f), max_len) {
                        if !w.is_empty() {
                            out.push(CyclicAmalgamSeq::from_terms_unchecked(alloc::vec![(f, w)]));
                        }
                    }
                }
            }
            n if n % 2 == 0 => {
                let g_words = amalgam_slot_words(ctx, Factor::G, max_len)?;
                let h_words = amalgam_slot_words(ctx, Factor::H, max_len)?;
                for start in [Factor::G, Factor::H] {
                    let mut stack: Vec<Vec<Word>> = alloc::vec![Vec::new()];
                    for slot in 0..n {
                        let f = if slot % 2 == 0 { start } else { start.other() };
                        let pool = if f == Factor::G { &g_words } else { &h_words };
                        let mut next = Vec::new();
                        for partial in &stack {
                            for w in pool {
                                let mut p = partial.clone();
                                p.push(w.clone());
                                next.push(p);
                            }
                        }
                        stack = next;
                        if stack.len() > max_count {
                            return Err(Error::BoundsTooLarge);
                        }
                    }
                    for combo in stack {
                        let terms = combo
                            .into_iter()
                            .enumerate()
                            .map(|(i, w)| (if i % 2 == 0 { start } else { start.other() }, w))
                            .collect();
                        out.push(CyclicAmalgamSeq::from_terms_unchecked(terms));
                    }
                }
            }
            _ => {}
        }
        if out.len() > max_count {
            return Err(Error::BoundsTooLarge);
        }
    }
    Ok(out)
}

/// Every cyclically reduced HNN sequence with stable-letter counts in
/// `t_counts` and base-word length bound, without conjugacy deduplication.
pub fn raw_hnn_sequences(
    ctx: &HnnCtx,
    t_counts: &[usize],
    max_len: usize,
    max_count: usize,
) -> Result<Vec<CyclicHnnSeq>, Error> {
    let words = words_up_to(ctx.alphabet(), max_len);
    let mut out = Vec::new();
    for &n in t_counts {
        if n == 0 {
            for w in &words {
                if w.is_cyclically_reduced() {
                    out.push(CyclicHnnSeq::from_parts_unchecked(alloc::vec![w.clone()], Vec::new()));
                }
            }
            continue;
        }
        for pattern in 0..(1u32 << n) {
            let eps: Vec<Sign> = (0..n)
                .map(|j| if pattern & (1 << j) == 0 { Sign::Pos } else { Sign::Neg })
                .collect();
            let mut stack: Vec<Vec<Word>> = alloc::vec![Vec::new()];
            for j in 0..n {
                let left = eps[(j + n - 1) % n];
                let right = eps[j];
                let mut next = Vec::new();
                for partial in &stack {
                    for w in &words {
                        let pinched = match (left, right) {
                            (Sign::Neg, Sign::Pos) => is_power_of(w, ctx.a_word())?.is_some(),
                            (Sign::Pos, Sign::Neg) => is_power_of(w, ctx.b_word())?.is_some(),
                            _ => false,
                        };
                        if pinched {
                            continue;
                        }
                        let mut p = partial.clone();
                        p.push(w.clone());
                        next.push(p);
                    }
                }
                stack = next;
                if stack.len() > max_count {
                    return Err(Error::BoundsTooLarge);
                }
            }
            for combo in stack {
                out.push(CyclicHnnSeq::from_parts_unchecked(combo, eps.clone()));
            }
            if out.len() > max_count {
                return Err(Error::BoundsTooLarge);
            }
        }
    }
    Ok(out)
}

/// Every cyclically reduced sequence within the bounds, as class
/// representatives, without deduplication.
pub fn raw_sequences(
    decomp: &SurfaceDecomposition,
    bounds: &ClassBounds,
) -> Result<Vec<ConjClassRep>, Error> {
    match decomp {
        SurfaceDecomposition::Separating { ctx, .. } => {
            let counts: Vec<usize> = (0..=bounds.max_n).filter(|&n| n <= 1 || n % 2 == 0).collect();
            Ok(raw_amalgam_sequences(ctx, &counts, bounds.max_len, bounds.max_count)?
                .into_iter()
                .map(ConjClassRep::Amalgam)
                .collect())
        }
        SurfaceDecomposition::NonSeparating { ctx, .. } => {
            let counts: Vec<usize> = (0..=bounds.max_n).collect();
            Ok(raw_hnn_sequences(ctx, &counts, bounds.max_len, bounds.max_count)?
                .into_iter()
                .map(ConjClassRep::Hnn)
                .collect())
        }
        SurfaceDecomposition::ClosedTorus { .. } => {
            let r = bounds.max_n as i64;
            let mut out = Vec::new();
            for k in -r..=r {
                for l in -r..=r {
                    out.push(ConjClassRep::Torus { k, l });
                }
            }
            Ok(out)
        }
    }
}

/// Deduplicated class enumeration: each conjugacy class within the bounds is
/// represented once. Quadratic in the emitted count.
pub fn enumerate_classes(
    decomp: &SurfaceDecomposition,
    bounds: &ClassBounds,
) -> Result<Vec<ConjClassRep>, Error> {
    let raw = raw_sequences(decomp, bounds)?;
    let ctx = decomp.decomp_ctx();
    let mut reps: Vec<ConjClassRep> = Vec::new();
    for cand in raw {
        let mut dup = false;
        for seen in &reps {
            if rep_conjugate(ctx, seen, &cand)? {
                dup = true;
                break;
            }
        }
        if !dup {
            reps.push(cand);
        }
    }
    Ok(reps)
}

/// The vector `(i(x_j, y))_j` over a family of decompositions sharing a
/// common description of `y`.
pub fn thurston_vector(
    decomps: &[SurfaceDecomposition],
    y_text: &str,
) -> Result<Vec<u64>, Error> {
    decomps
        .iter()
        .map(|d| {
            let rep = d.word_to_class(y_text)?;
            i_count(d.decomp_ctx(), &rep)
        })
        .collect()
}
