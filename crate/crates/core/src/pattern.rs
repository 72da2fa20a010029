//! Pattern occurrences, avoidance, and lazy enumeration of restricted
//! permutation classes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{next_lex_in_place, Permutation, Symmetry};

/// All occurrences of a pattern in a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrences {
    /// Index tuples (1-based, increasing).
    pub indices: Vec<Vec<usize>>,
}

impl Occurrences {
    pub fn count(&self) -> usize {
        self.indices.len()
    }

    /// Occurrences as value subsequences of `p`.
    pub fn values(&self, p: &Permutation) -> Vec<Vec<usize>> {
        self.indices
            .iter()
            .map(|idx| idx.iter().map(|&i| p.at(i)).collect())
            .collect()
    }
}

/// Every index-increasing subsequence of `p` order-isomorphic to `pat`.
pub fn occurrences(p: &Permutation, pat: &Permutation) -> Occurrences {
    let mut indices = Vec::new();
    let mut chosen = Vec::with_capacity(pat.len());
    if !pat.is_empty() {
        search(p.word(), pat.word(), 0, &mut chosen, &mut |c| {
            indices.push(c.iter().map(|&i| i + 1).collect());
            true
        });
    }
    Occurrences { indices }
}

pub fn contains(p: &Permutation, pat: &Permutation) -> bool {
    if pat.is_empty() {
        return true;
    }
    let mut found = false;
    let mut chosen = Vec::with_capacity(pat.len());
    search(p.word(), pat.word(), 0, &mut chosen, &mut |_| {
        found = true;
        false
    });
    found
}

/// `true` iff `p` avoids every pattern in `pats`.
pub fn avoids(p: &Permutation, pats: &[Permutation]) -> bool {
    pats.iter().all(|pat| !contains(p, pat))
}

/// Extends `chosen` (0-based indices into `w`) one pattern letter at a time,
/// keeping the partial subsequence order-isomorphic to the pattern prefix.
/// The visitor returns `false` to stop the search.
fn search(
    w: &[usize],
    pat: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let depth = chosen.len();
    if depth == pat.len() {
        return visit(chosen);
    }
    let remaining = pat.len() - depth;
    if w.len() < from + remaining {
        return true;
    }
    for idx in from..=w.len() - remaining {
        let v = w[idx];
        let consistent = chosen
            .iter()
            .zip(pat)
            .all(|(&c, &t)| (w[c] < v) == (t < pat[depth]));
        if consistent {
            chosen.push(idx);
            let go_on = search(w, pat, idx + 1, chosen, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// `true` iff some occurrence of `pat` in `w` uses the last letter of `w`.
fn contains_ending_at_last(w: &[usize], pat: &[usize]) -> bool {
    let k = pat.len();
    if k == 0 || w.len() < k {
        return k == 0;
    }
    let last = w.len() - 1;
    let mut chosen = Vec::with_capacity(k);
    let mut found = false;
    // Choose the first k-1 letters among w[..last], then test w[last].
    search(&w[..last], &pat[..k - 1], 0, &mut chosen, &mut |c| {
        let v = w[last];
        let ok = c.iter().zip(pat).all(|(&ci, &t)| (w[ci] < v) == (t < pat[k - 1]));
        if ok {
            found = true;
        }
        !found
    });
    found
}

/// Positional restriction on a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    None,
    /// `σ(n+1−k) = 1`, the set `S_n^k`.
    OneAt(usize),
    /// `σ(n) = k`, the set `S_{n,k}`.
    EndsWith(usize),
    /// `σ(n+1−i) = i` for every `i ≤ k`, the set `S_n^[k]`.
    Tail(usize),
    /// `max(i − σ(i)) ≤ d`, the set `B_{n,d}`.
    MaxDropLe(usize),
}

impl Constraint {
    /// Whether placing `value` at 1-based `pos` is compatible, looking only
    /// at that one cell.
    fn admits(self, n: usize, pos: usize, value: usize) -> bool {
        match self {
            Constraint::None => true,
            Constraint::OneAt(k) => (pos == n + 1 - k) == (value == 1),
            Constraint::EndsWith(k) => (pos == n) == (value == k),
            Constraint::Tail(k) => {
                if pos + k > n {
                    value == n + 1 - pos
                } else {
                    value > k
                }
            }
            Constraint::MaxDropLe(d) => pos <= value + d,
        }
    }

    fn holds(self, p: &Permutation) -> bool {
        let n = p.len();
        (1..=n).all(|i| self.admits(n, i, p.at(i)))
    }

    fn label(self) -> Option<String> {
        match self {
            Constraint::None => None,
            Constraint::OneAt(k) => Some(format!("one-at:{k}")),
            Constraint::EndsWith(k) => Some(format!("ends-with:{k}")),
            Constraint::Tail(k) => Some(format!("tail:{k}")),
            Constraint::MaxDropLe(d) => Some(format!("maxdrop:{d}")),
        }
    }

    /// The image of this constraint under `rci`, if it is again expressible.
    /// `rci` maps `S_n^k` onto `S_{n,k}` and fixes `S_n^[k]`.
    pub fn under_rci(self) -> Option<Constraint> {
        match self {
            Constraint::None => Some(Constraint::None),
            Constraint::OneAt(k) => Some(Constraint::EndsWith(k)),
            Constraint::EndsWith(k) => Some(Constraint::OneAt(k)),
            Constraint::Tail(k) => Some(Constraint::Tail(k)),
            Constraint::MaxDropLe(_) => None,
        }
    }
}

/// A restricted class `S_n(T)` with an optional positional constraint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub n: usize,
    pub forbidden: Vec<Permutation>,
    pub constraint: Constraint,
}

impl ClassSpec {
    pub fn all(n: usize) -> Self {
        ClassSpec {
            n,
            forbidden: Vec::new(),
            constraint: Constraint::None,
        }
    }

    /// `S_n(T)` with patterns given in word form, e.g. `&["123", "132"]`.
    /// Panics on malformed patterns; use [`ClassSpec::try_avoiding`] for
    /// untrusted input.
    pub fn avoiding(n: usize, patterns: &[&str]) -> Self {
        ClassSpec::try_avoiding(n, patterns).expect("pattern literal")
    }

    pub fn try_avoiding(n: usize, patterns: &[&str]) -> Result<Self> {
        let forbidden = patterns
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Permutation>>>()?;
        Ok(ClassSpec {
            n,
            forbidden,
            constraint: Constraint::None,
        })
    }

    pub fn with_patterns(n: usize, forbidden: Vec<Permutation>) -> Self {
        ClassSpec {
            n,
            forbidden,
            constraint: Constraint::None,
        }
    }

    pub fn with(mut self, constraint: Constraint) -> Self {
        self.constraint = constraint;
        self
    }

    pub fn at_size(&self, n: usize) -> Self {
        ClassSpec { n, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(idx) = self.forbidden.iter().position(|p| p.is_empty()) {
            return Err(Error::InvalidConstraint(format!(
                "forbidden pattern #{} is empty",
                idx + 1
            )));
        }
        match self.constraint {
            Constraint::OneAt(k) | Constraint::EndsWith(k) | Constraint::Tail(k)
                if k < 1 || k > self.n =>
            {
                Err(Error::InvalidConstraint(format!(
                    "{} needs 1 <= k <= n = {}",
                    self.constraint.label().unwrap_or_default(),
                    self.n
                )))
            }
            _ => Ok(()),
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.len() == self.n && self.constraint.holds(p) && avoids(p, &self.forbidden)
    }

    /// The image class under a symmetry, for pattern-only classes.
    pub fn transformed(&self, f: Symmetry) -> Self {
        ClassSpec {
            n: self.n,
            forbidden: self.forbidden.iter().map(|p| f.apply(p)).collect(),
            constraint: self.constraint,
        }
    }

    /// Whether the class can only be small enough for the raised bound of
    /// the pruned generator.
    fn is_restricted(&self) -> bool {
        !self.forbidden.is_empty() || matches!(self.constraint, Constraint::MaxDropLe(_))
    }

    pub fn pattern_label(&self) -> String {
        let pats: Vec<String> = self.forbidden.iter().map(|p| p.to_string()).collect();
        pats.join(",")
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}({})", self.n, self.pattern_label())?;
        if let Some(c) = self.constraint.label() {
            write!(f, "[{c}]")?;
        }
        Ok(())
    }
}

impl Serialize for ClassSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let pats: Vec<String> = self.forbidden.iter().map(|p| p.to_string()).collect();
        let mut st = s.serialize_struct("ClassSpec", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("avoid", &pats)?;
        st.serialize_field("constraint", &self.constraint.label())?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Walk `S_n` by lexicographic successor and filter.
    Filter,
    /// Depth-first over prefixes, abandoning any prefix that already holds
    /// a forbidden pattern or breaks the positional constraint.
    Pruned,
}

/// Enumeration front end carrying the size bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    pub strategy: Strategy,
    /// Largest `n` when every permutation of `S_n` may be visited.
    pub full_bound: usize,
    /// Largest `n` for restricted classes under the pruned generator.
    pub pruned_bound: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            strategy: Strategy::Pruned,
            full_bound: 10,
            pruned_bound: 12,
        }
    }
}

impl Enumerator {
    pub fn with_strategy(strategy: Strategy) -> Self {
        Enumerator {
            strategy,
            ..Enumerator::default()
        }
    }

    pub fn bound_for(&self, spec: &ClassSpec) -> usize {
        if self.strategy == Strategy::Pruned && spec.is_restricted() {
            self.pruned_bound.max(self.full_bound)
        } else {
            self.full_bound
        }
    }

    /// The members of `spec` in lexicographic order of their words.
    pub fn enumerate(&self, spec: &ClassSpec) -> Result<ClassIter> {
        spec.validate()?;
        let bound = self.bound_for(spec);
        if spec.n > bound {
            return Err(Error::BoundExceeded { n: spec.n, bound });
        }
        Ok(match self.strategy {
            Strategy::Filter => ClassIter::Filter(FilterIter::new(spec.clone())),
            Strategy::Pruned => ClassIter::Pruned(PrunedIter::new(spec.clone())),
        })
    }

    pub fn class_size(&self, spec: &ClassSpec) -> Result<u64> {
        Ok(self.enumerate(spec)?.count() as u64)
    }

    pub fn collect(&self, spec: &ClassSpec) -> Result<Vec<Permutation>> {
        Ok(self.enumerate(spec)?.collect())
    }
}

/// Enumerates with the default [`Enumerator`].
pub fn enumerate(spec: &ClassSpec) -> Result<ClassIter> {
    Enumerator::default().enumerate(spec)
}

pub fn class_size(spec: &ClassSpec) -> Result<u64> {
    Enumerator::default().class_size(spec)
}

/// Lexicographic stream of a class.
pub enum ClassIter {
    Filter(FilterIter),
    Pruned(PrunedIter),
}

impl Iterator for ClassIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        match self {
            ClassIter::Filter(it) => it.next(),
            ClassIter::Pruned(it) => it.next(),
        }
    }
}

pub struct FilterIter {
    spec: ClassSpec,
    word: Option<Vec<usize>>,
}

impl FilterIter {
    fn new(spec: ClassSpec) -> Self {
        let word = Some((1..=spec.n).collect());
        FilterIter { spec, word }
    }
}

impl Iterator for FilterIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            let w = self.word.as_mut()?;
            let cand = Permutation::from_word_unchecked(w.clone());
            if !next_lex_in_place(w) {
                self.word = None;
            }
            if self.spec.contains(&cand) {
                return Some(cand);
            }
        }
    }
}

pub struct PrunedIter {
    spec: ClassSpec,
    prefix: Vec<usize>,
    used: Vec<bool>,
    /// Next candidate value to try at each depth.
    cursor: Vec<usize>,
    done: bool,
}

impl PrunedIter {
    fn new(spec: ClassSpec) -> Self {
        let n = spec.n;
        PrunedIter {
            spec,
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 2],
            cursor: vec![1],
            done: false,
        }
    }

    fn acceptable(&self, value: usize) -> bool {
        let n = self.spec.n;
        let pos = self.prefix.len() + 1;
        if !self.spec.constraint.admits(n, pos, value) {
            return false;
        }
        let mut w = self.prefix.clone();
        w.push(value);
        !self
            .spec
            .forbidden
            .iter()
            .any(|pat| contains_ending_at_last(&w, pat.word()))
    }
}

impl Iterator for PrunedIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let n = self.spec.n;
        if self.done {
            return None;
        }
        if n == 0 {
            self.done = true;
            return Some(Permutation::empty());
        }
        loop {
            let Some(depth_cursor) = self.cursor.last().copied() else {
                self.done = true;
                return None;
            };
            let mut v = depth_cursor;
            while v <= n && (self.used[v] || !self.acceptable(v)) {
                v += 1;
            }
            if v > n {
                // exhausted this depth; backtrack
                self.cursor.pop();
                if let Some(last) = self.prefix.pop() {
                    self.used[last] = false;
                }
                continue;
            }
            *self.cursor.last_mut().unwrap() = v + 1;
            self.prefix.push(v);
            self.used[v] = true;
            if self.prefix.len() == n {
                let out = Permutation::from_word_unchecked(self.prefix.clone());
                let last = self.prefix.pop().unwrap();
                self.used[last] = false;
                return Some(out);
            }
            self.cursor.push(1);
        }
    }
}

/// All nonempty subsets of `S_3` with at most `max_size` elements, plus the
/// empty set.
pub fn subsets_of_s3(max_size: usize) -> Vec<Vec<Permutation>> {
    let s3: Vec<Permutation> = crate::perm::all_permutations(3).collect();
    (0u32..64)
        .filter(|m| m.count_ones() as usize <= max_size)
        .map(|m| {
            s3.iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn occurrence_examples() {
        let pi = p("4162375");
        let occ = occurrences(&pi, &p("312"));
        // brute force over all 35 triples finds 412 and 413 as well
        assert_eq!(occ.count(), 6);
        let vals: Vec<String> = occ
            .values(&pi)
            .iter()
            .map(|v| v.iter().map(|x| x.to_string()).collect())
            .collect();
        assert_eq!(vals, ["412", "413", "423", "623", "625", "635"]);
        assert_eq!(occurrences(&pi, &p("321")).count(), 0);
        assert_eq!(occurrences(&pi, &p("1")).count(), 7);
        assert!(avoids(&pi, &[p("321")]));
        assert!(avoids(&pi, &[]));
        assert!(!avoids(&p("4735126"), &[p("123")]));
        assert!(contains(&p("4735126"), &p("123")));
    }

    #[test]
    fn ending_at_last_matches_full_scan() {
        for n in 1..=6 {
            for s in all_permutations(n) {
                for pat in all_permutations(3) {
                    let w = s.word();
                    let by_prefix = (1..=n).any(|m| contains_ending_at_last(&w[..m], pat.word()));
                    assert_eq!(by_prefix, contains(&s, &pat));
                }
            }
        }
    }

    #[test]
    fn strategies_agree() {
        let filter = Enumerator::with_strategy(Strategy::Filter);
        let pruned = Enumerator::with_strategy(Strategy::Pruned);
        for n in 0..=7 {
            for pats in subsets_of_s3(2) {
                let base = ClassSpec::with_patterns(n, pats);
                let mut specs = vec![base.clone()];
                for k in 1..=n {
                    specs.push(base.clone().with(Constraint::OneAt(k)));
                    specs.push(base.clone().with(Constraint::EndsWith(k)));
                    specs.push(base.clone().with(Constraint::Tail(k)));
                }
                specs.push(base.clone().with(Constraint::MaxDropLe(1)));
                for spec in specs {
                    let a = filter.collect(&spec).unwrap();
                    let b = pruned.collect(&spec).unwrap();
                    assert_eq!(a, b, "{spec}");
                }
            }
        }
    }

    #[test]
    fn sizes() {
        for pat in ["123", "132", "213", "231", "312", "321"] {
            assert_eq!(class_size(&ClassSpec::avoiding(4, &[pat])).unwrap(), 14);
        }
        assert_eq!(class_size(&ClassSpec::avoiding(5, &["132"])).unwrap(), 42);
        let only: Vec<_> = enumerate(&ClassSpec::all(1)).unwrap().collect();
        assert_eq!(only, vec![p("1")]);
        for pats in subsets_of_s3(6) {
            assert_eq!(class_size(&ClassSpec::with_patterns(0, pats)).unwrap(), 1);
        }
        for n in 1..=10 {
            let c = class_size(&ClassSpec::avoiding(n, &["123", "132"])).unwrap();
            assert_eq!(c, 1 << (n - 1));
        }
    }

    #[test]
    fn bounds_and_validation() {
        let e = Enumerator::default();
        assert!(matches!(
            e.enumerate(&ClassSpec::all(11)),
            Err(Error::BoundExceeded { n: 11, bound: 10 })
        ));
        assert!(e.enumerate(&ClassSpec::avoiding(12, &["123", "132"])).is_ok());
        assert!(matches!(
            e.enumerate(&ClassSpec::avoiding(13, &["123", "132"])),
            Err(Error::BoundExceeded { n: 13, bound: 12 })
        ));
        let filter = Enumerator::with_strategy(Strategy::Filter);
        assert!(filter.enumerate(&ClassSpec::avoiding(11, &["123"])).is_err());
        assert!(matches!(
            e.enumerate(&ClassSpec::all(3).with(Constraint::OneAt(4))),
            Err(Error::InvalidConstraint(_))
        ));
        assert!(e.enumerate(&ClassSpec::all(3).with(Constraint::Tail(0))).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let v = enumerate(&ClassSpec::avoiding(5, &["231"]))
            .unwrap()
            .collect::<Vec<_>>();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn structural_facts() {
        for n in 1..=8 {
            for s in enumerate(&ClassSpec::avoiding(n, &["123", "132"])).unwrap() {
                let pos = s.position_of(1).unwrap();
                assert!(pos + 1 >= n, "{s}");
            }
            for s in enumerate(&ClassSpec::avoiding(n, &["213", "312"])).unwrap() {
                assert!(s.at(1) == 1 || s.at(n) == 1, "{s}");
            }
        }
    }

    #[test]
    fn display_and_json() {
        let spec = ClassSpec::avoiding(4, &["123", "132"]).with(Constraint::OneAt(2));
        assert_eq!(spec.to_string(), "S_4(123,132)[one-at:2]");
        let j = serde_json::to_value(&spec).unwrap();
        assert_eq!(j["avoid"][1], "132");
        assert_eq!(j["constraint"], "one-at:2");
    }
}
