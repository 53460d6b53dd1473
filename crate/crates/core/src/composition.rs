//! Compositions, generalized compositions and the index sets built from them.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("near concatenation needs two nonempty compositions")]
    EmptyNearConcat,
    #[error("compositions of different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("{index} is not in calI({alpha})")]
    NotInCalI { alpha: Composition, index: usize },
    #[error("j = {j} outside 1..={m} for {alpha}")]
    JOutOfRange { alpha: Composition, j: usize, m: usize },
    #[error("the empty composition is not allowed here")]
    Empty,
    #[error("set element {elem} outside [1, {max}]")]
    SetOutOfRange { elem: usize, max: usize },
    #[error("generalized compositions need at least one block and no empty blocks")]
    EmptyBlock,
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl TryFrom<Vec<usize>> for Composition {
    type Error = CompositionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CompositionError> {
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart);
        }
        Ok(Composition(parts))
    }

    /// Panics on a zero part.
    pub fn of(parts: &[usize]) -> Self {
        Composition::new(parts.to_vec()).expect("positive parts")
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(1^k)`
    pub fn ones(k: usize) -> Self {
        Composition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums, excluding the total.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    pub fn from_set(set: &BTreeSet<usize>, n: usize) -> Result<Self, CompositionError> {
        if n == 0 {
            return match set.iter().next() {
                Some(&elem) => Err(CompositionError::SetOutOfRange { elem, max: 0 }),
                None => Ok(Composition::empty()),
            };
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &i in set {
            if i == 0 || i >= n {
                return Err(CompositionError::SetOutOfRange { elem: i, max: n - 1 });
            }
            parts.push(i - prev);
            prev = i;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Composition) -> Self {
        Composition(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn near_concat(&self, other: &Composition) -> Result<Self, CompositionError> {
        if self.is_empty() || other.is_empty() {
            return Err(CompositionError::EmptyNearConcat);
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Ok(Composition(parts))
    }

    /// All compositions of `n`, in increasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out: Vec<Composition> = (0..1u64 << (n - 1))
            .map(|mask| {
                let set = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Composition::from_set(&set, n).unwrap()
            })
            .collect();
        out.sort();
        out
    }
}

/// Lexicographic comparison of two compositions of the same size.
pub fn lex_compare(a: &Composition, b: &Composition) -> Result<Ordering, CompositionError> {
    if a.size() != b.size() {
        return Err(CompositionError::SizeMismatch(a.size(), b.size()));
    }
    Ok(a.0.cmp(&b.0))
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = CompositionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CompositionError::Parse(s.to_string()))?;
        Composition::new(parts)
    }
}

/// A formal ⊕-sum of nonempty compositions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneralizedComposition(Vec<Composition>);

impl GeneralizedComposition {
    pub fn new(blocks: Vec<Composition>) -> Result<Self, CompositionError> {
        if blocks.is_empty() || blocks.iter().any(Composition::is_empty) {
            return Err(CompositionError::EmptyBlock);
        }
        Ok(GeneralizedComposition(blocks))
    }

    /// Drops empty blocks, then builds.
    pub fn from_blocks_dropping_empty(blocks: Vec<Composition>) -> Result<Self, CompositionError> {
        GeneralizedComposition::new(blocks.into_iter().filter(|b| !b.is_empty()).collect())
    }

    pub fn blocks(&self) -> &[Composition] {
        &self.0
    }

    pub fn num_blocks(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Composition::size).sum()
    }

    /// Every way of resolving each ⊕ into `·` or `⊙`; bit `1` means `⊙`,
    /// the first junction being the most significant bit.
    pub fn bracket_expansion(&self) -> Vec<Composition> {
        let p = self.0.len();
        let junctions = p - 1;
        (0..1u64 << junctions)
            .map(|mask| {
                let mut acc = self.0[0].clone();
                for (t, b) in self.0[1..].iter().enumerate() {
                    let near = mask >> (junctions - 1 - t) & 1 == 1;
                    acc = if near { acc.near_concat(b).expect("nonempty blocks") } else { acc.concat(b) };
                }
                acc
            })
            .collect()
    }
}

impl From<Composition> for GeneralizedComposition {
    /// Panics on the empty composition.
    fn from(c: Composition) -> Self {
        GeneralizedComposition::new(vec![c]).expect("nonempty composition")
    }
}

impl fmt::Display for GeneralizedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for GeneralizedComposition {
    type Err = CompositionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let blocks = s.split('|').map(Composition::from_str).collect::<Result<Vec<_>, _>>()?;
        GeneralizedComposition::new(blocks)
    }
}

/// `{1 ≤ i ≤ ℓ−1 : α_{i+1} ≠ 1}`
pub fn cal_i(alpha: &Composition) -> BTreeSet<usize> {
    (1..alpha.len()).filter(|&i| alpha.0[i] != 1).collect()
}

/// `𝜶^(i) = (α_1, …, α_i + 1, α_{i+1} − 1) ⊕ (α_{i+2}, …)`
pub fn alpha_gen_i(alpha: &Composition, i: usize) -> Result<GeneralizedComposition, CompositionError> {
    if !cal_i(alpha).contains(&i) {
        return Err(CompositionError::NotInCalI { alpha: alpha.clone(), index: i });
    }
    let a = &alpha.0;
    let mut head = a[..i - 1].to_vec();
    head.push(a[i - 1] + 1);
    head.push(a[i] - 1);
    let tail = a[i + 1..].to_vec();
    GeneralizedComposition::from_blocks_dropping_empty(vec![Composition(head), Composition(tail)])
}

/// Union of `[𝜶^(i)]` over `i ∈ calI(α)`.
pub fn cal_j(alpha: &Composition) -> BTreeSet<Composition> {
    cal_i(alpha).into_iter().flat_map(|i| alpha_gen_i(alpha, i).unwrap().bracket_expansion()).collect()
}

/// Same union kept as a multiset.
pub fn cal_j_multiset(alpha: &Composition) -> BTreeMap<Composition, usize> {
    let mut out = BTreeMap::new();
    for i in cal_i(alpha) {
        for b in alpha_gen_i(alpha, i).unwrap().bracket_expansion() {
            *out.entry(b).or_insert(0) += 1;
        }
    }
    out
}

/// `{0} ∪ {i : α_i > 1}` in increasing order.
pub fn cal_k(alpha: &Composition) -> Vec<usize> {
    std::iter::once(0).chain((1..=alpha.len()).filter(|&i| alpha.0[i - 1] > 1)).collect()
}

/// `m = |calK(α)| − 1`
pub fn cal_m(alpha: &Composition) -> usize {
    cal_k(alpha).len() - 1
}

pub fn alpha_hat(alpha: &Composition) -> Result<GeneralizedComposition, CompositionError> {
    if alpha.is_empty() {
        return Err(CompositionError::Empty);
    }
    let k = cal_k(alpha);
    let m = k.len() - 1;
    let l = alpha.len();
    if m == 0 {
        return Ok(GeneralizedComposition(vec![Composition::ones(l)]));
    }
    let part = |r: usize| alpha.0[k[r] - 1];
    let mut blocks: Vec<Composition> = (1..m).map(|r| Composition(vec![part(r) - 1])).collect();
    let mut last = vec![part(m)];
    last.extend(std::iter::repeat_n(1, l - 1));
    blocks.push(Composition(last));
    GeneralizedComposition::new(blocks)
}

/// `𝜶̂^(j)` for `1 ≤ j ≤ m`; empty blocks are dropped and the `j = m` case
/// joins its last two pieces by near concatenation.
pub fn alpha_hat_j(alpha: &Composition, j: usize) -> Result<GeneralizedComposition, CompositionError> {
    let k = cal_k(alpha);
    let m = k.len() - 1;
    if j == 0 || j > m {
        return Err(CompositionError::JOutOfRange { alpha: alpha.clone(), j, m });
    }
    let l = alpha.len();
    let part = |r: usize| alpha.0[k[r] - 1];
    let kj = k[j];
    let mut blocks: Vec<Composition> = (1..m)
        .map(|r| {
            let shrink = if r == j { 2 } else { 1 };
            Composition(vec![part(r) - shrink].into_iter().filter(|&p| p > 0).collect())
        })
        .collect();
    if j < m {
        let mut last = vec![part(m)];
        last.extend(std::iter::repeat_n(1, l - kj + 1));
        blocks.push(Composition(last));
        blocks.push(Composition::ones(kj - 1));
    } else {
        let mut last = vec![part(m) - 1];
        last.extend(std::iter::repeat_n(1, l - kj + 1));
        let last = Composition(last);
        let tail = Composition::ones(kj - 1);
        blocks.push(if tail.is_empty() { last } else { last.near_concat(&tail)? });
    }
    GeneralizedComposition::from_blocks_dropping_empty(blocks)
}

/// Multiset union of `[𝜶̂^(j)]` over `1 ≤ j ≤ m`.
pub fn cal_l(alpha: &Composition) -> BTreeMap<Composition, usize> {
    let mut out = BTreeMap::new();
    for j in 1..=cal_m(alpha) {
        for b in alpha_hat_j(alpha, j).unwrap().bracket_expansion() {
            *out.entry(b).or_insert(0) += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GeneralizedComposition {
        s.parse().unwrap()
    }

    #[test]
    fn descent_sets() {
        assert_eq!(c("3,1,2").descent_set(), BTreeSet::from([3, 4]));
        assert!(c("5").descent_set().is_empty());
        assert_eq!(c("1,2,1").descent_set(), BTreeSet::from([1, 3]));
        assert_eq!(Composition::from_set(&BTreeSet::new(), 4).unwrap(), c("4"));
        assert_eq!(Composition::from_set(&BTreeSet::from([3, 4]), 6).unwrap(), c("3,1,2"));
        assert_eq!(Composition::from_set(&BTreeSet::from([1, 3]), 4).unwrap(), c("1,2,1"));
        assert!(Composition::from_set(&BTreeSet::from([4]), 4).is_err());
    }

    #[test]
    fn concatenations() {
        assert_eq!(c("2,1").concat(&c("1")), c("2,1,1"));
        assert_eq!(c("2,1").near_concat(&c("1")).unwrap(), c("2,2"));
        assert_eq!(c("2,1,2,3").reverse(), c("3,2,1,2"));
        assert_eq!(c("").near_concat(&c("1")), Err(CompositionError::EmptyNearConcat));
    }

    #[test]
    fn text_round_trip() {
        for s in ["2,1,3", "1", ""] {
            assert_eq!(c(s).to_string(), s);
        }
        assert_eq!(g("2,1|1").to_string(), "2,1|1");
        assert!("2,0".parse::<Composition>().is_err());
        assert!("2,|1".parse::<GeneralizedComposition>().is_err());
        assert!("x".parse::<Composition>().is_err());
    }

    #[test]
    fn expansions() {
        assert_eq!(g("2,1|1").bracket_expansion(), vec![c("2,1,1"), c("2,2")]);
        assert_eq!(g("3,1").bracket_expansion(), vec![c("3,1")]);
        let e = g("1|1|3,1,1,1").bracket_expansion();
        assert_eq!(e.len(), 4);
        assert!(e.contains(&c("1,1,3,1,1,1")));
        assert!(e.contains(&c("1,4,1,1,1")));
        assert!(e.contains(&c("2,3,1,1,1")));
        assert!(e.contains(&c("5,1,1,1")));
    }

    #[test]
    fn lex() {
        assert_eq!(lex_compare(&c("1,2,1"), &c("2,2")).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&c("2,1,1"), &c("2,2")).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&c("2,2"), &c("2,2")).unwrap(), Ordering::Equal);
        assert!(lex_compare(&c("2"), &c("2,1")).is_err());
    }

    #[test]
    fn projective_index_sets() {
        assert_eq!(cal_i(&c("1,2,1")), BTreeSet::from([1]));
        assert!(cal_i(&c("4")).is_empty());
        assert!(cal_i(&c("1,1,1")).is_empty());
        assert_eq!(alpha_gen_i(&c("1,2,1"), 1).unwrap(), g("2,1|1"));
        assert_eq!(alpha_gen_i(&c("1,2,2"), 2).unwrap(), g("1,3,1"));
        assert_eq!(alpha_gen_i(&c("2,1,2,3"), 3).unwrap(), g("2,1,3,2"));
        assert!(alpha_gen_i(&c("1,2,1"), 2).is_err());
        assert_eq!(cal_j(&c("1,2,1")), BTreeSet::from([c("2,2"), c("2,1,1")]));
        assert!(cal_j(&c("3")).is_empty());
        assert_eq!(cal_j(&c("1,2,2")), BTreeSet::from([c("2,1,2"), c("2,3"), c("1,3,1")]));
    }

    #[test]
    fn injective_index_sets() {
        assert_eq!(cal_k(&c("2,1,2,3")), vec![0, 1, 3, 4]);
        assert_eq!(cal_k(&c("1,1,1")), vec![0]);
        assert_eq!(cal_k(&c("1,2,2")), vec![0, 2, 3]);
        assert_eq!(alpha_hat(&c("1,2,2")).unwrap(), g("1|2,1,1"));
        assert_eq!(alpha_hat(&c("2,1,2,3")).unwrap(), g("1|1|3,1,1,1"));
        assert_eq!(alpha_hat(&c("4")).unwrap(), g("4"));
        assert_eq!(alpha_hat(&c("1,1,1")).unwrap(), g("1,1,1"));
        assert!(alpha_hat(&c("")).is_err());
        let a = c("2,1,2,3");
        assert_eq!(alpha_hat_j(&a, 1).unwrap(), g("1|3,1,1,1,1"));
        assert_eq!(alpha_hat_j(&a, 2).unwrap(), g("1|3,1,1|1,1"));
        assert_eq!(alpha_hat_j(&a, 3).unwrap(), g("1|1|2,2,1,1"));
        assert!(alpha_hat_j(&a, 4).is_err());
        assert!(alpha_hat_j(&a, 0).is_err());
    }

    #[test]
    fn cal_l_example() {
        let l = cal_l(&c("2,1,2,3"));
        assert_eq!(l.values().sum::<usize>(), 10);
        assert_eq!(l.len(), 8);
        assert_eq!(l.values().filter(|&&v| v == 1).count(), 6);
        for b in ["1,3,1,1,1,1", "4,1,1,1,1"] {
            assert_eq!(l[&c(b)], 2);
        }
        assert!(cal_l(&c("1,1,1")).is_empty());
        for n in 2..6 {
            let l = cal_l(&Composition(vec![n]));
            assert_eq!(l, BTreeMap::from([(Composition(vec![n - 1, 1]), 1)]));
        }
    }

    #[test]
    fn all_compositions() {
        for n in 0..8 {
            let all = Composition::all_of(n);
            assert_eq!(all.len(), if n == 0 { 1 } else { 1 << (n - 1) });
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|a| a.size() == n));
        }
    }
}
