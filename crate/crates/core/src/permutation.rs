//! Permutations in one-line notation, Coxeter lengths, weak and Bruhat orders.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PermutationError {
    #[error("not a permutation of [n]: {0:?}")]
    NotBijective(Vec<usize>),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("generator s{i} outside S_{n}")]
    BadGenerator { i: usize, n: usize },
    #[error("need k1 <= c <= k2 < n, got [{k1},{k2}], c = {c}, n = {n}")]
    BadInterval { k1: usize, k2: usize, c: usize, n: usize },
    #[error("permutations of different degrees")]
    DegreeMismatch,
}

/// `σ(1..n)` stored 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, PermutationError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(PermutationError::NotBijective(one_line));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn s(i: usize, n: usize) -> Result<Self, PermutationError> {
        if i == 0 || i >= n {
            return Err(PermutationError::BadGenerator { i, n });
        }
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Ok(Permutation(v))
    }

    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// `s_{i_1} s_{i_2} ⋯ s_{i_p}` as a product of functions.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self, PermutationError> {
        let mut p = Permutation::identity(n);
        for &i in word {
            p = p.compose(&Permutation::s(i, n)?);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1]
    }

    /// `(self ∘ other)(x) = self(other(x))`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x - 1] = i + 1;
        }
        Permutation(v)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// `{i : ℓ(s_i σ) < ℓ(σ)}`, i.e. `i + 1` appears before `i` in one-line notation.
    pub fn left_descents(&self) -> BTreeSet<usize> {
        let inv = self.inverse();
        (1..self.degree()).filter(|&i| inv.0[i - 1] > inv.0[i]).collect()
    }

    /// `{i : ℓ(σ s_i) < ℓ(σ)}`
    pub fn right_descents(&self) -> BTreeSet<usize> {
        (1..self.degree()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// Reduced word built by repeatedly splitting off the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.degree();
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        while let Some(&i) = cur.left_descents().iter().next() {
            word.push(i);
            cur = Permutation::s(i, n).unwrap().compose(&cur);
        }
        word
    }

    pub fn format_word(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            return "id".to_string();
        }
        w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }

    /// All permutations of `[n]` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (1..=n).permutations(n).map(Permutation).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = s
            .split_whitespace()
            .map(str::parse::<usize>)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PermutationError::Parse(s.to_string()))?;
        Permutation::new(v)
    }
}

/// Parses word notation such as `"s2 s1"` (or `"id"`) in `S_n`.
pub fn parse_word(s: &str, n: usize) -> Result<Permutation, PermutationError> {
    let s = s.trim();
    if s.is_empty() || s == "id" {
        return Ok(Permutation::identity(n));
    }
    let word = s
        .split_whitespace()
        .map(|t| {
            t.strip_prefix('s')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| PermutationError::Parse(s.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::from_word(&word, n)
}

/// `σ ≼_L ρ` iff `ℓ(ρσ⁻¹) + ℓ(σ) = ℓ(ρ)`.
pub fn leq_left_weak(sigma: &Permutation, rho: &Permutation) -> bool {
    rho.compose(&sigma.inverse()).length() + sigma.length() == rho.length()
}

/// Bruhat order through the subword property, evaluated recursively along the
/// canonical reduced word of `rho`: for a left descent `s` of `rho`,
/// `σ ≤ ρ` iff `min(σ, sσ) ≤ sρ`.
pub fn bruhat_leq(sigma: &Permutation, rho: &Permutation) -> bool {
    assert_eq!(sigma.degree(), rho.degree(), "degree mismatch");
    let mut memo = HashMap::new();
    bruhat_rec(sigma, rho, &mut memo)
}

fn bruhat_rec(sigma: &Permutation, rho: &Permutation, memo: &mut HashMap<(Permutation, Permutation), bool>) -> bool {
    let ls = sigma.length();
    let lr = rho.length();
    if ls > lr {
        return false;
    }
    if ls == lr {
        return sigma == rho;
    }
    if ls == 0 {
        return true;
    }
    let key = (sigma.clone(), rho.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let n = rho.degree();
    let i = *rho.left_descents().iter().next().unwrap();
    let s = Permutation::s(i, n).unwrap();
    let srho = s.compose(rho);
    let ssigma = s.compose(sigma);
    let lower = if ssigma.length() < ls { ssigma } else { sigma.clone() };
    let v = bruhat_rec(&lower, &srho, memo);
    memo.insert(key, v);
    v
}

/// Longest element of the parabolic subgroup generated by `{s_i : i ∈ set}`.
pub fn longest_parabolic(set: &BTreeSet<usize>, n: usize) -> Result<Permutation, PermutationError> {
    let mut v: Vec<usize> = (1..=n).collect();
    if let Some(&bad) = set.iter().find(|&&i| i == 0 || i >= n) {
        return Err(PermutationError::BadGenerator { i: bad, n });
    }
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &i in set {
        match runs.last_mut() {
            Some((_, hi)) if *hi + 1 == i => *hi = i,
            _ => runs.push((i, i)),
        }
    }
    for (lo, hi) in runs {
        v[lo - 1..=hi].reverse();
    }
    Ok(Permutation(v))
}

/// Longest element of the permutations of positions `k1..=k2+1` (fixing the rest)
/// that increase on `k1..=c` and on `c+1..=k2+1`.
pub fn longest_bi_increasing(k1: usize, k2: usize, c: usize, n: usize) -> Result<Permutation, PermutationError> {
    if k1 == 0 || k1 > c || c > k2 || k2 >= n {
        return Err(PermutationError::BadInterval { k1, k2, c, n });
    }
    let a = c - k1 + 1;
    let b = k2 + 1 - c;
    let mut v: Vec<usize> = (1..=n).collect();
    for t in 0..a {
        v[k1 - 1 + t] = k1 + b + t;
    }
    for t in 0..b {
        v[c + t] = k1 + t;
    }
    Ok(Permutation(v))
}

/// Members of `(S_n)^{(c)}_{[k1,k2]}`, by filtering the parabolic subgroup.
pub fn bi_increasing_set(k1: usize, k2: usize, c: usize, n: usize) -> Vec<Permutation> {
    use itertools::Itertools;
    let positions: Vec<usize> = (k1..=k2 + 1).collect();
    positions
        .iter()
        .copied()
        .permutations(positions.len())
        .filter_map(|vals| {
            let mut v: Vec<usize> = (1..=n).collect();
            for (p, x) in positions.iter().zip(&vals) {
                v[p - 1] = *x;
            }
            let first_ok = (k1..c).all(|i| v[i - 1] < v[i]);
            let second_ok = (c + 1..=k2).all(|i| v[i - 1] < v[i]);
            (first_ok && second_ok).then_some(Permutation(v))
        })
        .collect()
}

/// `δ_u` for the decomposition of `(S_n)^{(c)}_{[l]}`: `δ_u(i) = u + i − 1` for
/// `i ≤ c`, increasing on `c+1..=l+1`, identity beyond.
pub fn delta_u(u: usize, c: usize, l: usize, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    let head: Vec<usize> = (u..u + c).collect();
    let rest: Vec<usize> = (1..=l + 1).filter(|x| !head.contains(x)).collect();
    for (i, x) in head.iter().enumerate() {
        v[i] = *x;
    }
    for (i, x) in rest.iter().enumerate() {
        v[c + i] = *x;
    }
    Permutation(v)
}
