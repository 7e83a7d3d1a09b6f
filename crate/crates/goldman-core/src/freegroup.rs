//! Freely reduced and cyclically reduced words over a finite symmetric
//! alphabet, plus the bounded double-coset and power solvers the higher
//! modules are built on.
//!
//! Words are sequences of signed generators kept freely reduced at all
//! times; cyclic words are conjugacy classes of the free group, stored in
//! their lexicographically least rotation.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;

use crate::Error;

/// One signed generator occurrence. `inv == false` is the generator itself,
/// `inv == true` its inverse. Ordering is (symbol index, then `+1 < -1`),
/// which fixes the canonical rotation of cyclic words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub sym: u32,
    pub inv: bool,
}

impl Letter {
    pub fn new(sym: u32, inv: bool) -> Self {
        Letter { sym, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { sym: self.sym, inv: !self.inv }
    }

    fn cancels(self, other: Letter) -> bool {
        self.sym == other.sym && self.inv != other.inv
    }
}

/// An ordered list of distinct generator names; its size is the rank of the
/// free group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, Error> {
        if names.is_empty() {
            return Err(Error::Malformed("alphabet needs at least one generator".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.ends_with('\'') || n == "1" {
                return Err(Error::Malformed("invalid generator name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::Malformed("duplicate generator name".into()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, sym: u32) -> &str {
        &self.names[sym as usize]
    }

    pub fn index(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.letters().iter().all(|l| (l.sym as usize) < self.rank())
    }

    /// Parses the word text syntax: generators are identifiers, a trailing
    /// apostrophe inverts, tokens are separated by whitespace or juxtaposed
    /// (longest generator name wins), and `1` denotes the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word, Error> {
        let mut letters = Vec::new();
        for chunk in text.split_whitespace() {
            if chunk == "1" {
                continue;
            }
            let mut rest = chunk;
            while !rest.is_empty() {
                let hit = self
                    .names
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| rest.starts_with(n.as_str()))
                    .max_by_key(|(_, n)| n.len());
                let Some((sym, name)) = hit else {
                    return Err(Error::UnknownSymbol(rest.to_owned()));
                };
                rest = &rest[name.len()..];
                let inv = if let Some(stripped) = rest.strip_prefix('\'') {
                    rest = stripped;
                    true
                } else {
                    false
                };
                letters.push(Letter::new(sym as u32, inv));
            }
        }
        Ok(Word::reduced_from(letters))
    }

    /// Renders a word in the same syntax `parse_word` accepts.
    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        for (i, l) in w.letters().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.name(l.sym));
            if l.inv {
                out.push('\'');
            }
        }
        out
    }
}

/// A freely reduced word: no adjacent letter is followed by its inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn generator(sym: u32) -> Self {
        Word { letters: alloc::vec![Letter::new(sym, false)] }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduced_from<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|top| top.cancels(l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, rhs: &Word) -> Word {
        Word::reduced_from(self.letters.iter().chain(rhs.letters.iter()).copied())
    }

    /// The inverse word: reversed letters with flipped exponents.
    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn pow(&self, p: i64) -> Word {
        let base = if p < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..p.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) => self.len() == 1 || !a.cancels(*b),
            _ => true,
        }
    }
}

/// Free reduction against an alphabet: rejects letters outside it.
pub fn free_reduce(alphabet: &Alphabet, raw: &[Letter]) -> Result<Word, Error> {
    for l in raw {
        if l.sym as usize >= alphabet.rank() {
            return Err(Error::UnknownSymbol(alloc::format!("#{}", l.sym)));
        }
    }
    Ok(Word::reduced_from(raw.iter().copied()))
}

/// A cyclically reduced word stored in its lexicographically least rotation;
/// models a conjugacy class of the free group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_word(&self) -> Word {
        Word { letters: self.letters.clone() }
    }
}

fn min_rotation_index(letters: &[Letter]) -> usize {
    let n = letters.len();
    let mut best = 0;
    for cand in 1..n {
        for i in 0..n {
            let a = letters[(cand + i) % n];
            let b = letters[(best + i) % n];
            match a.cmp(&b) {
                core::cmp::Ordering::Less => {
                    best = cand;
                    break;
                }
                core::cmp::Ordering::Greater => break,
                core::cmp::Ordering::Equal => {}
            }
        }
    }
    best
}

/// Splits `w` as `conjugator · core · conjugator⁻¹` with `core` cyclically
/// reduced and canonically rotated.
pub fn cyclic_reduce(w: &Word) -> (CyclicWord, Word) {
    let mut letters = w.letters.clone();
    let mut conj: Vec<Letter> = Vec::new();
    while letters.len() >= 2 && letters[0].cancels(*letters.last().unwrap()) {
        conj.push(letters[0]);
        letters.pop();
        letters.remove(0);
    }
    let rot = if letters.is_empty() { 0 } else { min_rotation_index(&letters) };
    // Rotating the core by k conjugates by its length-k prefix; fold that
    // prefix into the conjugator so the recomposition identity still holds.
    conj.extend_from_slice(&letters[..rot]);
    letters.rotate_left(rot);
    (CyclicWord { letters }, Word { letters: conj })
}

/// True iff `u` and `v` are conjugate in the free group.
pub fn conjugate_in_free(u: &Word, v: &Word) -> bool {
    cyclic_reduce(u).0 == cyclic_reduce(v).0
}

/// Returns `p` with `w = x^p` if one exists. `p = 0` matches the empty word
/// and negative powers are allowed.
pub fn is_power_of(w: &Word, x: &Word) -> Result<Option<i64>, Error> {
    if x.is_empty() {
        return Err(Error::EmptyBase);
    }
    if w.is_empty() {
        return Ok(Some(0));
    }
    for sign in [1i64, -1] {
        let mut acc = Word::identity();
        let mut p = 0i64;
        loop {
            acc = if sign > 0 { acc.mul(x) } else { acc.mul(&x.inverse()) };
            p += sign;
            if acc == *w {
                return Ok(Some(p));
            }
            if acc.len() >= w.len() {
                break;
            }
        }
    }
    Ok(None)
}

/// True iff the cyclically reduced word `x` is not `u^k` for any `k >= 2`,
/// i.e. the cyclic word has no proper period.
pub fn not_proper_power(x: &Word) -> Result<bool, Error> {
    if x.is_empty() || !x.is_cyclically_reduced() {
        return Err(Error::NotCyclicallyReduced);
    }
    let n = x.len();
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        if (0..n).all(|i| x.letters[i] == x.letters[i % d]) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn coset_window(w_len: usize, v_len: usize, xl_len: usize, xr_len: usize) -> i64 {
    let min_x = xl_len.min(xr_len).max(1);
    ((w_len + v_len).div_ceil(min_x) + 2) as i64
}

/// All `(p, q)` in the bounded window with `w = xL^p · v · xR^q`.
///
/// The window is `|p|,|q| <= ceil((|w|+|v|)/min(|xL|,|xR|)) + 2`: when the
/// base words are cyclically reduced and not proper powers, representatives
/// of the double coset grow linearly in `|p|` and `|q|`, so solutions beyond
/// the window cannot reproduce a word of length `|w|`.
pub fn double_coset_solve_all(
    w: &Word,
    v: &Word,
    x_left: &Word,
    x_right: &Word,
) -> Result<Vec<(i64, i64)>, Error> {
    if x_left.is_empty() || x_right.is_empty() {
        return Err(Error::EmptyBase);
    }
    let bound = coset_window(w.len(), v.len(), x_left.len(), x_right.len());
    let mut found = Vec::new();
    let inv_v_w_base = v.inverse();
    for p in -bound..=bound {
        // w = xL^p v xR^q  <=>  xR^q = v⁻¹ xL^{-p} w
        let z = inv_v_w_base.mul(&x_left.pow(-p)).mul(w);
        if let Some(q) = is_power_of(&z, x_right)? {
            if q.abs() <= bound {
                found.push((p, q));
            }
        }
    }
    found.sort_by_key(|&(p, q)| (p.abs() + q.abs(), p, q));
    Ok(found)
}

/// The solution of `w = xL^p · v · xR^q` with smallest `|p|+|q|` (ties by
/// `(p, q)`), if any exists in the bounded window.
pub fn double_coset_solve(
    w: &Word,
    v: &Word,
    x_left: &Word,
    x_right: &Word,
) -> Result<Option<(i64, i64)>, Error> {
    Ok(double_coset_solve_all(w, v, x_left, x_right)?.first().copied())
}

/// The orientation-reversal map on representatives: `w ↦ w⁻¹`.
pub fn reverse_bar(w: &Word) -> Word {
    w.inverse()
}

/// True iff `g⁻¹ ∈ ⟨x⟩·g·⟨x⟩`. For cyclically reduced `x` that is not a
/// proper power and `g` outside `⟨x⟩` this is always false, which is what
/// the no-cancellation arguments rely on; it is exposed so tests can assert
/// it.
pub fn conjugate_to_inverse_probe(g: &Word, x: &Word) -> Result<bool, Error> {
    Ok(double_coset_solve(&g.inverse(), g, x, x)?.is_some())
}

/// Returns `p` with `w` conjugate to `x^p` in the free group, for `x`
/// cyclically reduced and not a proper power. Conjugate powers are length
/// multiples, so the candidate exponent is forced by the cyclic length.
pub fn conjugate_power_class(w: &Word, x: &Word) -> Result<Option<i64>, Error> {
    if x.is_empty() {
        return Err(Error::EmptyBase);
    }
    let core = cyclic_reduce(w).0;
    if core.is_empty() {
        return Ok(Some(0));
    }
    if core.len() % x.len() != 0 {
        return Ok(None);
    }
    let mag = (core.len() / x.len()) as i64;
    for p in [mag, -mag] {
        if conjugate_in_free(w, &x.pow(p)) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(&["a", "b"]).unwrap()
    }

    fn w(text: &str) -> Word {
        ab().parse_word(text).unwrap()
    }

    #[test]
    fn free_reduce_cancels() {
        assert_eq!(w("a b b'"), w("a"));
        assert_eq!(w("1"), Word::identity());
        assert_eq!(w("a a' a"), w("a"));
    }

    #[test]
    fn free_reduce_rejects_unknown() {
        assert!(matches!(ab().parse_word("a c"), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn parse_juxtaposed_tokens() {
        assert_eq!(ab().parse_word("ab a'b'").unwrap(), w("a b a' b'"));
        let two = Alphabet::new(&["a1", "b1"]).unwrap();
        let parsed = two.parse_word("a1b1").unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(two.render_word(&parsed), "a1 b1");
    }

    #[test]
    fn cyclic_reduce_peels_conjugator() {
        let (core, conj) = cyclic_reduce(&w("b a b'"));
        assert_eq!(core.as_word(), w("a"));
        assert_eq!(conj, w("b"));

        let (core, conj) = cyclic_reduce(&w("a b"));
        assert_eq!(core.as_word(), w("a b"));
        assert!(conj.is_empty());
    }

    #[test]
    fn cyclic_reduce_recomposes() {
        let input = w("b' a' b a b' a b");
        let (core, conj) = cyclic_reduce(&input);
        assert_eq!(conj.mul(&core.as_word()).mul(&conj.inverse()), input);
    }

    #[test]
    fn conjugacy_by_rotation() {
        assert!(conjugate_in_free(&w("a b"), &w("b a")));
        assert!(!conjugate_in_free(&w("a"), &w("b")));
    }

    #[test]
    fn power_detection() {
        assert_eq!(is_power_of(&w("a a a"), &w("a")).unwrap(), Some(3));
        assert_eq!(is_power_of(&Word::identity(), &w("a")).unwrap(), Some(0));
        assert_eq!(is_power_of(&w("b a b'"), &w("a")).unwrap(), None);
        assert_eq!(is_power_of(&w("a' a'"), &w("a")).unwrap(), Some(-2));
        assert!(matches!(is_power_of(&w("a"), &Word::identity()), Err(Error::EmptyBase)));
    }

    #[test]
    fn proper_power_detection() {
        assert!(not_proper_power(&w("a b")).unwrap());
        assert!(!not_proper_power(&w("a b a b")).unwrap());
        assert!(not_proper_power(&w("a b a' b'")).unwrap());
        assert!(matches!(not_proper_power(&Word::identity()), Err(Error::NotCyclicallyReduced)));
        assert!(matches!(not_proper_power(&w("a b a'")), Err(Error::NotCyclicallyReduced)));
    }

    #[test]
    fn double_coset_examples() {
        let sol = double_coset_solve(&w("a a b a"), &w("b"), &w("a"), &w("a")).unwrap();
        assert_eq!(sol, Some((2, 1)));
        let sol = double_coset_solve(&w("b"), &w("b"), &w("a"), &w("a")).unwrap();
        assert_eq!(sol, Some((0, 0)));
    }

    #[test]
    fn reverse_bar_involution() {
        assert_eq!(reverse_bar(&w("a b")), w("b' a'"));
        assert_eq!(reverse_bar(&Word::identity()), Word::identity());
        let v = w("a b a' b b");
        assert_eq!(reverse_bar(&reverse_bar(&v)), v);
    }

    #[test]
    fn inverse_probe_examples() {
        assert!(!conjugate_to_inverse_probe(&w("b"), &w("a")).unwrap());
        assert!(!conjugate_to_inverse_probe(&w("a b"), &w("a")).unwrap());
        assert!(!conjugate_to_inverse_probe(&w("b a b"), &w("a")).unwrap());
    }

    #[test]
    fn conjugate_power_class_examples() {
        assert_eq!(conjugate_power_class(&w("b a a b'"), &w("a")).unwrap(), Some(2));
        assert_eq!(conjugate_power_class(&w("b a' b'"), &w("a")).unwrap(), Some(-1));
        assert_eq!(conjugate_power_class(&w("a b"), &w("a")).unwrap(), None);
    }
}
