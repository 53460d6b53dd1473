//! Column-transfer maps between `SRT(𝜶^(i))` and `SRT(α)`, and the χ bijection.

use std::sync::Arc;

use super::{RibbonShape, Srt, TableauError};
use crate::composition::{alpha_gen_i, Composition, GeneralizedComposition};

/// Candidate filling of `rd(α)` produced by `L`, with the tableau when it is standard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LImage {
    pub columns: Vec<Vec<usize>>,
    pub srt: Option<Srt>,
}

impl LImage {
    pub fn is_valid(&self) -> bool {
        self.srt.is_some()
    }
}

/// `L(τ)` for `τ ∈ SRT(𝜶^(i))`: the top of column `i` moves into column `i + 1`.
pub fn l_map(alpha: &Composition, i: usize, tau: &Srt) -> Result<LImage, TableauError> {
    let expected = RibbonShape::new(&alpha_gen_i(alpha, i)?);
    if **tau.shape() != expected {
        return Err(TableauError::Precondition(format!("{tau} is not of shape {expected}")));
    }
    let mut columns = tau.columns().to_vec();
    let moved = columns[i - 1].remove(0);
    columns[i].push(moved);
    columns[i].sort_unstable();
    let shape = Arc::new(RibbonShape::from_composition(alpha));
    let srt = Srt::new(shape, columns.clone()).ok();
    Ok(LImage { columns, srt })
}

/// `τ_T` for `T ∈ SRT(α)` with `T_i¹ > T_{i+1}¹`: the top of column `i + 1`
/// moves into column `i`.
pub fn tau_t(alpha: &Composition, i: usize, t: &Srt) -> Result<Srt, TableauError> {
    let g = alpha_gen_i(alpha, i)?;
    if t.shape().blocks() != [alpha.clone()] {
        return Err(TableauError::Precondition(format!("{t} is not of shape {alpha}")));
    }
    if t.top(i - 1) < t.top(i) {
        return Err(TableauError::Precondition(format!("T_{i}^1 < T_{}^1 in {t}", i + 1)));
    }
    let mut columns = t.columns().to_vec();
    let moved = columns[i].remove(0);
    columns[i - 1].push(moved);
    columns[i - 1].sort_unstable();
    Srt::new(Arc::new(RibbonShape::new(&g)), columns)
}

/// The unique `β ∈ [𝜶]` and `T′ ∈ SRT(β)` with the same reading word as `T`.
pub fn chi(g: &GeneralizedComposition, t: &Srt) -> Option<(Composition, Srt)> {
    let word = t.reading_word_vec();
    g.bracket_expansion().into_iter().find_map(|beta| {
        let shape = Arc::new(RibbonShape::from_composition(&beta));
        Srt::from_reading_word(shape, &word).map(|s| (beta, s))
    })
}
