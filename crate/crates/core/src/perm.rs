//! Permutations in one-line notation, their arc statistics, the eight
//! dihedral symmetries, and the insertion and sum operators.
//!
//! Positions and values are 1-based at every public boundary. A permutation
//! of size `n` is stored as its word `σ(1)…σ(n)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates `word` as a bijection of `[n]`, `n = word.len()`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (idx, &v) in word.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    index: idx + 1,
                    reason: format!("value {v} is outside 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::InvalidPermutation {
                    index: idx + 1,
                    reason: format!("duplicate value {v}"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a bijection of `[n]`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok(), "{word:?}");
        Permutation { word }
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// `n (n-1) … 1`
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `σ(i)` for `1 ≤ i ≤ n`. Panics outside that range.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Position of the value `v`, i.e. `σ⁻¹(v)`.
    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.word.iter().position(|&x| x == v).map(|p| p + 1)
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            word: self.inverse_word(),
        }
    }

    fn inverse_word(&self) -> Vec<usize> {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        inv
    }

    pub fn reverse(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn apply(&self, s: Symmetry) -> Permutation {
        s.apply(self)
    }

    /// Every pair `(i, j)` with `i < j` that is a crossing:
    /// `i < j < σ(i) < σ(j)` or `σ(i) < σ(j) ≤ i < j`.
    pub fn crossings(&self) -> Vec<(usize, usize)> {
        self.pairs_where(is_crossing)
    }

    pub fn crs(&self) -> usize {
        self.count_pairs(is_crossing)
    }

    /// Every pair `(i, j)` with `i < j` that is a nesting:
    /// `i < j < σ(j) < σ(i)` or `σ(j) < σ(i) ≤ i < j`.
    pub fn nestings(&self) -> Vec<(usize, usize)> {
        self.pairs_where(is_nesting)
    }

    pub fn nes(&self) -> usize {
        self.count_pairs(is_nesting)
    }

    fn pairs_where(&self, pred: fn(usize, usize, usize, usize) -> bool) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if pred(i, j, self.at(i), self.at(j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn count_pairs(&self, pred: fn(usize, usize, usize, usize) -> bool) -> usize {
        let w = &self.word;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if pred(i + 1, j + 1, w[i], w[j]) {
                    c += 1;
                }
            }
        }
        c
    }

    /// Upper transients `σ⁻¹(i) < i < σ(i)` and lower transients
    /// `σ(i) < i < σ⁻¹(i)`, as counts.
    pub fn transients(&self) -> (usize, usize) {
        let inv = self.inverse_word();
        let mut ut = 0;
        let mut lt = 0;
        for i in 1..=self.len() {
            let (fwd, back) = (self.at(i), inv[i - 1]);
            if back < i && i < fwd {
                ut += 1;
            }
            if fwd < i && i < back {
                lt += 1;
            }
        }
        (ut, lt)
    }

    pub fn ut(&self) -> usize {
        self.transients().0
    }

    pub fn lt(&self) -> usize {
        self.transients().1
    }

    /// Excedances: positions with `σ(i) > i`.
    pub fn exc(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .count()
    }

    /// Descents: positions with `σ(i) > σ(i+1)`.
    pub fn des(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Inversions: pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inv(&self) -> usize {
        let w = &self.word;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `max(i − σ(i))`, floored at 0.
    pub fn maxdrop(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .map(|(i, &v)| (i + 1).saturating_sub(v))
            .max()
            .unwrap_or(0)
    }

    pub fn stats(&self) -> StatBundle {
        let (ut, lt) = self.transients();
        StatBundle {
            crs: self.crs(),
            nes: self.nes(),
            ut,
            lt,
            exc: self.exc(),
            des: self.des(),
            inv: self.inv(),
            maxdrop: self.maxdrop(),
        }
    }

    /// `σ^(a,b)`: add 1 to every letter `≥ b`, then insert `b` at position `a`.
    pub fn insert(&self, a: usize, b: usize) -> Result<Permutation> {
        let n = self.len();
        check_range("position", a, 1, n + 1)?;
        check_range("value", b, 1, n + 1)?;
        let mut word: Vec<usize> = self
            .word
            .iter()
            .map(|&v| if v >= b { v + 1 } else { v })
            .collect();
        word.insert(a - 1, b);
        Ok(Permutation::from_word_unchecked(word))
    }

    /// `σ^-(a,b) = (σ⁻¹)^(a,b)`.
    pub fn insert_of_inverse(&self, a: usize, b: usize) -> Result<Permutation> {
        self.inverse().insert(a, b)
    }

    /// Removes the value `b` and closes the gap; the left inverse of
    /// `insert(_, b)`.
    pub fn erase_value(&self, b: usize) -> Result<Permutation> {
        check_range("value", b, 1, self.len())?;
        let word = self
            .word
            .iter()
            .filter(|&&v| v != b)
            .map(|&v| if v > b { v - 1 } else { v })
            .collect();
        Ok(Permutation::from_word_unchecked(word))
    }

    /// Every letter increased by `x`. The result is a word over
    /// `{x+1, …, x+n}`, not a permutation of `[n]`.
    pub fn shifted(&self, x: usize) -> Vec<usize> {
        self.word.iter().map(|&v| v + x).collect()
    }

    /// `σ₁ ⊕ σ₂`: `σ₂` shifted up by `|σ₁|`, placed after `σ₁`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let mut word = self.word.clone();
        word.extend(other.shifted(self.len()));
        Permutation::from_word_unchecked(word)
    }

    /// `α ⊖ β`: `α` shifted up by `|β|`, placed before `β`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let mut word = self.shifted(other.len());
        word.extend_from_slice(&other.word);
        Permutation::from_word_unchecked(word)
    }

    /// Lexicographic successor on words of the same size.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut word = self.word.clone();
        next_lex_in_place(&mut word).then_some(Permutation { word })
    }
}

pub(crate) fn next_lex_in_place(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

#[inline]
fn is_crossing(i: usize, j: usize, si: usize, sj: usize) -> bool {
    (i < j && j < si && si < sj) || (si < sj && sj <= i && i < j)
}

#[inline]
fn is_nesting(i: usize, j: usize, si: usize, sj: usize) -> bool {
    (i < j && j < sj && sj < si) || (sj < si && si <= i && i < j)
}

fn check_range(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        Err(Error::OutOfRange { what, value, lo, hi })
    } else {
        Ok(())
    }
}

impl fmt::Display for Permutation {
    /// Contiguous digits when every value is a single digit, comma
    /// separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `4735126` (one digit per letter, `n ≤ 9`) or letters
    /// separated by commas and/or whitespace (`4,16,3,…`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let syntax = |reason: String| Error::PermutationSyntax {
            input: s.to_string(),
            reason,
        };
        let word: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| syntax(format!("letter {t:?} is not a positive integer")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| syntax(format!("character {c:?} is not a digit")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let word = Vec::<usize>::deserialize(d)?;
        Permutation::new(word).map_err(serde::de::Error::custom)
    }
}

/// One element of the dihedral group generated by reverse, complement and
/// inverse. Composite tags act right to left: `rc(σ) = r(c(σ))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Id,
    R,
    C,
    I,
    Rc,
    Ri,
    Ci,
    Rci,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Id,
        Symmetry::R,
        Symmetry::C,
        Symmetry::I,
        Symmetry::Rc,
        Symmetry::Ri,
        Symmetry::Ci,
        Symmetry::Rci,
    ];

    /// Normal form `r^a c^b i^c`.
    fn bits(self) -> (bool, bool, bool) {
        match self {
            Symmetry::Id => (false, false, false),
            Symmetry::R => (true, false, false),
            Symmetry::C => (false, true, false),
            Symmetry::I => (false, false, true),
            Symmetry::Rc => (true, true, false),
            Symmetry::Ri => (true, false, true),
            Symmetry::Ci => (false, true, true),
            Symmetry::Rci => (true, true, true),
        }
    }

    fn from_bits(bits: (bool, bool, bool)) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|s| s.bits() == bits)
            .expect("all eight bit patterns are tagged")
    }

    /// `self ∘ other`.
    ///
    /// Uses `r c = c r`, `i r = c i` and `i c = r i`.
    pub fn compose(self, other: Symmetry) -> Symmetry {
        let (r1, c1, i1) = self.bits();
        let (r2, c2, i2) = other.bits();
        let (r2, c2) = if i1 { (c2, r2) } else { (r2, c2) };
        Symmetry::from_bits((r1 ^ r2, c1 ^ c2, i1 ^ i2))
    }

    pub fn inverse(self) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|&s| self.compose(s) == Symmetry::Id)
            .expect("group element has an inverse")
    }

    pub fn apply(self, p: &Permutation) -> Permutation {
        let (r, c, i) = self.bits();
        let mut out = if i { p.inverse() } else { p.clone() };
        if c {
            out = out.complement();
        }
        if r {
            out = out.reverse();
        }
        out
    }

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Id => "id",
            Symmetry::R => "r",
            Symmetry::C => "c",
            Symmetry::I => "i",
            Symmetry::Rc => "rc",
            Symmetry::Ri => "ri",
            Symmetry::Ci => "ci",
            Symmetry::Rci => "rci",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symmetry::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "symmetry",
                name: s.to_string(),
            })
    }
}

/// All statistics of one permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StatBundle {
    pub crs: usize,
    pub nes: usize,
    pub ut: usize,
    pub lt: usize,
    pub exc: usize,
    pub des: usize,
    pub inv: usize,
    pub maxdrop: usize,
}

/// A named permutation statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Crs,
    Nes,
    Ut,
    Lt,
    Exc,
    Des,
    Inv,
    Maxdrop,
}

impl Statistic {
    pub const ALL: [Statistic; 8] = [
        Statistic::Crs,
        Statistic::Nes,
        Statistic::Ut,
        Statistic::Lt,
        Statistic::Exc,
        Statistic::Des,
        Statistic::Inv,
        Statistic::Maxdrop,
    ];

    pub fn eval(self, p: &Permutation) -> usize {
        match self {
            Statistic::Crs => p.crs(),
            Statistic::Nes => p.nes(),
            Statistic::Ut => p.ut(),
            Statistic::Lt => p.lt(),
            Statistic::Exc => p.exc(),
            Statistic::Des => p.des(),
            Statistic::Inv => p.inv(),
            Statistic::Maxdrop => p.maxdrop(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Crs => "crs",
            Statistic::Nes => "nes",
            Statistic::Ut => "ut",
            Statistic::Lt => "lt",
            Statistic::Exc => "exc",
            Statistic::Des => "des",
            Statistic::Inv => "inv",
            Statistic::Maxdrop => "maxdrop",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "statistic",
                name: s.to_string(),
            })
    }
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some(Permutation::identity(n));
    std::iter::from_fn(move || {
        let cur = next.take()?;
        next = cur.next_lex();
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Pair scan straight from the arc definitions, sharing nothing with
    /// the implementation above.
    fn oracle_pairs(w: &[usize], crossing: bool) -> usize {
        let n = w.len();
        let s = |i: usize| w[i - 1] as i64;
        let mut c = 0;
        for i in 1..=n {
            for j in 1..=n {
                if i >= j {
                    continue;
                }
                let (i_, j_) = (i as i64, j as i64);
                let hit = if crossing {
                    (j_ < s(i) && s(i) < s(j)) || (s(i) < s(j) && s(j) <= i_)
                } else {
                    (j_ < s(j) && s(j) < s(i)) || (s(j) < s(i) && s(i) <= i_)
                };
                if hit {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn construction_and_validation() {
        assert_eq!(p("4735126").len(), 7);
        assert!(Permutation::new(vec![]).unwrap().is_empty());
        match Permutation::new(vec![1, 1, 2]) {
            Err(Error::InvalidPermutation { index, reason }) => {
                assert_eq!(index, 2);
                assert!(reason.contains("duplicate value 1"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Permutation::new(vec![0, 1]),
            Err(Error::InvalidPermutation { index: 1, .. })
        ));
        assert!(matches!(
            Permutation::new(vec![1, 3]),
            Err(Error::InvalidPermutation { index: 2, .. })
        ));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("4,1,2,3"), p("4123"));
        assert_eq!(p("4 1 2 3"), p("4123"));
        let big = p("10,1,2,3,4,5,6,7,8,9");
        assert_eq!(big.at(1), 10);
        assert_eq!(big.to_string(), "10,1,2,3,4,5,6,7,8,9");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("12a".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().unwrap().is_empty());
    }

    #[test]
    fn figure_arcs() {
        let s = p("4735126");
        assert_eq!(s.crs(), 3);
        assert_eq!(s.nes(), 3);
        assert_eq!(s.crossings().len(), 3);
        assert_eq!(s.nestings().len(), 3);
    }

    #[test]
    fn small_crossings_and_transients() {
        assert_eq!(p("312").crossings(), vec![(2, 3)]);
        assert_eq!(p("231").crs(), 0);
        assert_eq!(p("321").nes(), oracle_pairs(&[3, 2, 1], false));
        assert_eq!(p("231").transients(), (1, 0));
        assert_eq!(p("312").transients(), (0, 1));
        for n in 0..6 {
            let id = Permutation::identity(n);
            assert_eq!(id.stats(), StatBundle::default());
        }
    }

    #[test]
    fn classic_statistics() {
        let s = p("21").stats();
        assert_eq!((s.exc, s.des, s.inv, s.maxdrop), (1, 1, 1, 1));
        let w = [4usize, 7, 3, 5, 1, 2, 6];
        let mut inv = 0;
        for i in 0..7 {
            for j in 0..7 {
                if i < j && w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        assert_eq!(p("4735126").inv(), inv);
        assert_eq!(Permutation::empty().stats(), StatBundle::default());
    }

    #[test]
    fn symmetry_examples() {
        let pi = p("4135762");
        assert_eq!(pi.apply(Symmetry::R), p("2675314"));
        assert_eq!(pi.apply(Symmetry::C), p("4753126"));
        assert_eq!(pi.apply(Symmetry::I), p("2731465"));
        assert_eq!(pi.apply(Symmetry::Rc), p("6213574"));
        assert_eq!(pi.apply(Symmetry::Rci), p("3247516"));
        assert_eq!(pi.apply(Symmetry::Id), pi);
    }

    #[test]
    fn composition_table_matches_action() {
        for n in 0..=5 {
            for s in all_permutations(n) {
                for f in Symmetry::ALL {
                    for g in Symmetry::ALL {
                        assert_eq!(f.compose(g).apply(&s), f.apply(&g.apply(&s)));
                    }
                    assert_eq!(f.inverse().apply(&f.apply(&s)), s);
                }
            }
        }
    }

    #[test]
    fn involutions_exhaustive() {
        for n in 0..=8 {
            for s in all_permutations(n) {
                for f in [Symmetry::R, Symmetry::C, Symmetry::I, Symmetry::Rc, Symmetry::Rci] {
                    assert_eq!(f.apply(&f.apply(&s)), s);
                }
            }
        }
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(p("3142").insert(2, 3).unwrap(), p("43152"));
        assert_eq!(Permutation::empty().insert(1, 1).unwrap(), p("1"));
        assert_eq!(p("3142").insert(5, 1).unwrap(), p("42531"));
        assert_eq!(p("3142").insert_of_inverse(2, 3).unwrap(), p("23514"));
        assert_eq!(p("31542").insert_of_inverse(4, 1).unwrap(), p("362154"));
        assert_eq!(Permutation::identity(4).insert_of_inverse(5, 1).unwrap(), p("23451"));
        assert!(p("12").insert(4, 1).is_err());
        assert!(p("12").insert(1, 0).is_err());
    }

    #[test]
    fn sums() {
        assert_eq!(p("312").skew_sum(&p("1342")), p("7561342"));
        assert_eq!(p("21").direct_sum(&p("1")), p("213"));
        let x = p("2413");
        assert_eq!(x.direct_sum(&Permutation::empty()), x);
        assert_eq!(Permutation::empty().direct_sum(&x), x);
        assert_eq!(Permutation::empty().skew_sum(&x), x);
    }

    #[test]
    fn statistics_agree_with_pair_oracle() {
        for n in 0..=7 {
            for s in all_permutations(n) {
                assert_eq!(s.crs(), oracle_pairs(s.word(), true), "{s}");
                assert_eq!(s.nes(), oracle_pairs(s.word(), false), "{s}");
            }
        }
    }

    #[test]
    fn transient_exchange_and_subsumption() {
        for n in 0..=7 {
            for s in all_permutations(n) {
                let (ut, lt) = s.transients();
                for f in [Symmetry::I, Symmetry::Rc] {
                    assert_eq!(f.apply(&s).transients(), (lt, ut), "{s} under {f}");
                }
                assert!(s.crs() >= lt);
                let crossings = s.crossings();
                for i in 1..=n {
                    let back = s.position_of(i).unwrap();
                    if s.at(i) < i && i < back {
                        assert!(crossings.contains(&(i, back)));
                    }
                }
            }
        }
    }

    #[test]
    fn sum_crossings_are_additive() {
        for total in 0..=8 {
            for a in 0..=total {
                for p1 in all_permutations(a) {
                    for p2 in all_permutations(total - a) {
                        assert_eq!(p1.direct_sum(&p2).crs(), p1.crs() + p2.crs());
                    }
                }
            }
        }
    }

    #[test]
    fn lexicographic_count() {
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(5).count(), 120);
        let v: Vec<_> = all_permutations(3).map(|s| s.to_string()).collect();
        assert_eq!(v, ["123", "132", "213", "231", "312", "321"]);
    }
}
