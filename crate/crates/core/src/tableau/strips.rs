//! Strip decomposition of `rd(𝜶̂)` and the tableau maps behind the injective presentation.

use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;

use super::{RibbonShape, Sit, Srt, TableauError};
use crate::composition::{alpha_hat, alpha_hat_j, cal_k, Composition};
use crate::permutation::Permutation;

/// Strip data for `α`: `k_0 = 0 < k_1 < … < k_m` and the shape `𝜶̂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripLayout {
    alpha: Composition,
    ks: Vec<usize>,
    shape: Arc<RibbonShape>,
}

pub fn strips(alpha: &Composition) -> Result<StripLayout, TableauError> {
    StripLayout::new(alpha)
}

impl StripLayout {
    pub fn new(alpha: &Composition) -> Result<Self, TableauError> {
        let hat = alpha_hat(alpha)?;
        Ok(StripLayout { alpha: alpha.clone(), ks: cal_k(alpha), shape: Arc::new(RibbonShape::new(&hat)) })
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn m(&self) -> usize {
        self.ks.len() - 1
    }

    pub fn shape(&self) -> &Arc<RibbonShape> {
        &self.shape
    }

    /// Boxes `(row, col)` of `cd(α)` in `S_{k_0}, …, S_{k_m}`, 0-based.
    pub fn diagram_strips(&self) -> Vec<Vec<(usize, usize)>> {
        let parts = self.alpha.parts();
        let mut out = vec![(0..parts.len()).map(|r| (r, 0)).collect::<Vec<_>>()];
        for &k in &self.ks[1..] {
            out.push((1..parts[k - 1]).map(|c| (k - 1, c)).collect());
        }
        out
    }

    /// Cells `(column, index from top)` of `rd(𝜶̂)` in `S_{k_0}, …, S_{k_m}`.
    pub fn ribbon_strips(&self) -> Vec<Vec<(usize, usize)>> {
        let m = self.m();
        let sh = &self.shape;
        if m == 0 {
            return vec![(0..sh.num_columns()).map(|c| (c, 0)).collect()];
        }
        let mut s0 = vec![(m - 1, 0)];
        s0.extend((m..sh.num_columns()).map(|c| (c, 0)));
        let mut out = vec![s0];
        for r in 1..m {
            out.push((0..sh.column_len(r - 1)).map(|t| (r - 1, t)).collect());
        }
        out.push((1..sh.column_len(m - 1)).map(|t| (m - 1, t)).collect());
        out
    }

    /// `T(S_{k_0}), …, T(S_{k_m})`, each increasing.
    pub fn strip_entries(&self, t: &Srt) -> Vec<Vec<usize>> {
        self.ribbon_strips()
            .into_iter()
            .map(|cells| {
                let mut v: Vec<usize> = cells.into_iter().map(|(c, i)| t.column(c)[i]).collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    fn check_shape(&self, t: &Srt) -> Result<(), TableauError> {
        if **t.shape() != *self.shape {
            return Err(TableauError::Precondition(format!("{t} is not of shape {}", self.shape)));
        }
        Ok(())
    }
}

/// `T^𝒯`: the SRT of shape `𝜶̂` with the same strip contents as `𝒯`.
pub fn iota_tableau(alpha: &Composition, sit: &Sit) -> Result<Srt, TableauError> {
    if sit.shape() != alpha {
        return Err(TableauError::Precondition(format!("{sit} is not of shape {alpha}")));
    }
    let layout = StripLayout::new(alpha)?;
    let rows = sit.rows();
    let m = layout.m();
    let mut columns: Vec<Vec<usize>> = Vec::new();
    if m > 0 {
        for &k in &layout.ks[1..m] {
            columns.push(rows[k - 1][1..].to_vec());
        }
        let mut col = vec![rows[0][0]];
        col.extend_from_slice(&rows[layout.ks[m] - 1][1..]);
        columns.push(col);
        columns.extend(rows[1..].iter().map(|r| vec![r[0]]));
    } else {
        columns.extend(rows.iter().map(|r| vec![r[0]]));
    }
    Srt::new(layout.shape.clone(), columns)
}

/// Whether `T_j^{1+δ_{j,m}} > T^1_{m+k_j−1}` for all `1 ≤ j ≤ m`.
pub fn in_iota_image(alpha: &Composition, t: &Srt) -> Result<bool, TableauError> {
    let layout = StripLayout::new(alpha)?;
    layout.check_shape(t)?;
    let m = layout.m();
    Ok((1..=m).all(|j| {
        let left = if j == m { t.column(m - 1)[1] } else { t.top(j - 1) };
        left > t.top(m + layout.ks[j] - 2)
    }))
}

/// Membership in `Θ(𝒱_α)`, the complement of the image basis.
pub fn in_theta(alpha: &Composition, t: &Srt) -> Result<bool, TableauError> {
    in_iota_image(alpha, t).map(|b| !b)
}

/// The subword `𝐰_{T;j}` with its 1-based positions `u_1 < u_2 < …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordTj {
    pub positions: Vec<usize>,
    pub letters: Vec<usize>,
}

impl WordTj {
    pub fn end(&self) -> usize {
        *self.letters.last().expect("nonempty word")
    }
}

fn check_j(layout: &StripLayout, j: usize) -> Result<(), TableauError> {
    if j == 0 || j > layout.m() {
        return Err(TableauError::Precondition(format!("j = {j} outside 1..={}", layout.m())));
    }
    Ok(())
}

pub fn word_wtj(alpha: &Composition, t: &Srt, j: usize) -> Result<WordTj, TableauError> {
    let layout = StripLayout::new(alpha)?;
    layout.check_shape(t)?;
    check_j(&layout, j)?;
    Ok(word_in(&layout, t, j))
}

fn word_in(layout: &StripLayout, t: &Srt, j: usize) -> WordTj {
    let w = t.reading_word_vec();
    let parts = layout.alpha.parts();
    let limit = layout.alpha.size() - layout.alpha.len();
    let mut u: usize = layout.ks[1..=j].iter().map(|&k| parts[k - 1] - 1).sum();
    let mut positions = vec![u];
    let mut letters = vec![w[u - 1]];
    while let Some(next) = (u + 1..=limit).find(|&v| w[v - 1] < w[u - 1]) {
        u = next;
        positions.push(u);
        letters.push(w[u - 1]);
    }
    WordTj { positions, letters }
}

/// `(𝙰_{T;j}, 𝔄_{T;j})`; `𝔄` lists subsets in lexicographic order.
pub fn candidate_sets(alpha: &Composition, t: &Srt, j: usize) -> Result<(Vec<usize>, Vec<Vec<usize>>), TableauError> {
    let layout = StripLayout::new(alpha)?;
    layout.check_shape(t)?;
    check_j(&layout, j)?;
    Ok(candidates_in(&layout, t, j))
}

fn candidates_in(layout: &StripLayout, t: &Srt, j: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let end = word_in(layout, t, j).end();
    let s0 = &layout.strip_entries(t)[0];
    let big: Vec<usize> = s0.iter().copied().filter(|&y| y > end).collect();
    let size = layout.alpha.len() + 1 - layout.ks[j];
    let subsets = big.iter().copied().combinations(size).collect();
    (big, subsets)
}

/// `sgn(A)` for `A ⊆ 𝙰` (both sorted), relative to the top block `A¹` of `𝙰`.
pub fn sign(big: &[usize], a: &[usize]) -> i32 {
    let offset = big.len() - a.len();
    let displacement: usize = a
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let p = big.iter().position(|y| y == x).expect("A ⊆ 𝙰");
            offset + i - p
        })
        .sum();
    if displacement.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `sgn(A)` from a minimal-length `ω` with `A = A¹ · ω`, searched over all of `S_{|𝙰|}`.
pub fn sign_brute_force(big: &[usize], a: &[usize]) -> i32 {
    let k = big.len();
    let target: BTreeSet<usize> = a.iter().copied().collect();
    let top: Vec<usize> = (k - a.len() + 1..=k).collect();
    let best = Permutation::all(k)
        .into_iter()
        .filter(|w| {
            let inv = w.inverse();
            let image: BTreeSet<usize> = top.iter().map(|&i| big[inv.apply(i) - 1]).collect();
            image == target
        })
        .map(|w| w.length())
        .min()
        .expect("A has the size of A¹");
    if best % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `τ_{T;j;A}` as an SRT of shape `𝜶̂^(j)`.
pub fn tau_tja(alpha: &Composition, t: &Srt, j: usize, a: &[usize]) -> Result<Srt, TableauError> {
    let layout = StripLayout::new(alpha)?;
    layout.check_shape(t)?;
    check_j(&layout, j)?;
    let (_, subsets) = candidates_in(&layout, t, j);
    if !subsets.iter().any(|s| s == a) {
        return Err(TableauError::Precondition(format!("{a:?} is not a candidate set for j = {j}")));
    }
    Ok(tau_in(&layout, t, j, a))
}

fn tau_in(layout: &StripLayout, t: &Srt, j: usize, a: &[usize]) -> Srt {
    let m = layout.m();
    let word = word_in(layout, t, j);
    let strips = layout.strip_entries(t);
    let s_minus: Vec<usize> = strips[0].iter().copied().filter(|x| !a.contains(x)).collect();
    let mut s0: Vec<usize> = a.to_vec();
    s0.push(word.end());
    s0.sort_unstable();
    let shifted = |x: usize| match word.letters.iter().position(|&y| y == x) {
        Some(i) if i > 0 => word.letters[i - 1],
        _ => x,
    };
    let mut strip_r: Vec<Vec<usize>> = Vec::with_capacity(m);
    for r in 1..=m {
        let mut s: Vec<usize> = if r < j {
            strips[r].clone()
        } else if r == j {
            strips[r].iter().copied().filter(|&x| x != word.letters[0]).collect()
        } else {
            strips[r].iter().map(|&x| shifted(x)).collect()
        };
        s.sort_unstable();
        strip_r.push(s);
    }
    let mut columns: Vec<Vec<usize>> = strip_r[..m - 1].iter().filter(|s| !s.is_empty()).cloned().collect();
    let mut first = vec![s0[0]];
    first.extend_from_slice(&strip_r[m - 1]);
    columns.push(first);
    let singles = &s0[1..];
    if j == m && !s_minus.is_empty() {
        let (last, rest) = singles.split_last().expect("S'_0 has at least two cells");
        columns.extend(rest.iter().map(|&x| vec![x]));
        columns.push(vec![s_minus[0], *last]);
        columns.extend(s_minus[1..].iter().map(|&x| vec![x]));
    } else {
        columns.extend(singles.iter().map(|&x| vec![x]));
        columns.extend(s_minus.iter().map(|&x| vec![x]));
    }
    let shape = RibbonShape::new(&alpha_hat_j(&layout.alpha, j).expect("1 ≤ j ≤ m"));
    Srt::new(Arc::new(shape), columns).expect("strip conditions determine an SRT")
}

/// `𝛕_{T;j} = Σ_A sgn(A) τ_{T;j;A}` as signed terms.
pub fn tau_sum(alpha: &Composition, t: &Srt, j: usize) -> Result<Vec<(i32, Srt)>, TableauError> {
    let layout = StripLayout::new(alpha)?;
    layout.check_shape(t)?;
    check_j(&layout, j)?;
    let (big, subsets) = candidates_in(&layout, t, j);
    Ok(subsets.iter().map(|a| (sign(&big, a), tau_in(&layout, t, j, a))).collect())
}
