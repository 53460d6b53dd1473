//! Closed-form Hom and Ext¹ dimensions for dual immaculate modules, their
//! linear-algebra oracles, and the `f_U` basis of `Hom(P_α, 𝒱_β)`.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::composition::{alpha_hat, cal_i, cal_j, cal_l, lex_compare, Composition, GeneralizedComposition};
use crate::linalg::{kernel_of_columns, Echelon, SVec, Span};
use crate::module::{
    composition_multiplicities, dual_immaculate_module, hom_dim, hom_space, projective_module_of, radical,
    socle_components, submodule_of_space, Character, ModuleMap, ModuleRep,
};
use crate::presentation::{build_injective_presentation, phi_map, PresentationError};
use crate::tableau::{
    enumerate_sit, enumerate_srt_shape, sit_source, source_tableau_shape, PiAction, RibbonShape, Sit,
};

/// `L_{α,β}`: the number of `U ∈ SIT(α)` with descent composition `β`.
pub fn dual_immaculate_expansion(alpha: &Composition) -> Character {
    let mut out = Character::new();
    for u in enumerate_sit(alpha) {
        *out.entry(u.descent_composition()).or_insert(0) += 1;
    }
    out
}

pub fn l_coefficient(alpha: &Composition, beta: &Composition) -> usize {
    dual_immaculate_expansion(alpha).get(beta).copied().unwrap_or(0)
}

/// `dim Ext¹(𝒱_α, F_β)`: `1` iff `β ∈ 𝒥(α)`.
pub fn ext1_v_f_formula(alpha: &Composition, beta: &Composition) -> usize {
    usize::from(cal_j(alpha).contains(beta))
}

/// `dim Ext¹(F_β, 𝒱_α) = [ℒ(α) : β^r]`
pub fn ext1_f_v_formula(beta: &Composition, alpha: &Composition) -> usize {
    cal_l(alpha).get(&beta.reverse()).copied().unwrap_or(0)
}

fn lex_leq(beta: &Composition, alpha: &Composition) -> bool {
    lex_compare(beta, alpha).map(|o| o != Ordering::Greater).unwrap_or(false)
}

/// `dim Hom(𝒱_α, 𝒱_β)` for `β ≤_lex α`; `None` when `β >_lex α`.
pub fn hom_v_v_lex(alpha: &Composition, beta: &Composition) -> Option<usize> {
    lex_leq(beta, alpha).then(|| usize::from(alpha == beta))
}

/// `dim Ext¹(𝒱_α, 𝒱_β) = 0` for `β ≤_lex α`; `None` otherwise.
pub fn ext1_v_v_lex(alpha: &Composition, beta: &Composition) -> Option<usize> {
    lex_leq(beta, alpha).then_some(0)
}

/// `dim Hom(rad P_β, 𝒱_α) = L_{α,β} − [[𝜶̂] : β^r] + [ℒ(α) : β^r]`
pub fn hom_rad_p_v_formula(beta: &Composition, alpha: &Composition) -> i64 {
    let br = beta.reverse();
    let in_hat = alpha_hat(alpha).map(|h| h.bracket_expansion().contains(&br)).unwrap_or(false);
    l_coefficient(alpha, beta) as i64 - i64::from(in_hat) + ext1_f_v_formula(beta, alpha) as i64
}

/// Modules attached to one composition, shared by the oracles.
#[derive(Clone, Debug)]
pub struct ShapeData {
    pub alpha: Composition,
    pub v: Arc<ModuleRep>,
    pub p: Arc<ModuleRep>,
    pub omega: Arc<ModuleRep>,
    pub rad_p: Arc<ModuleRep>,
    pub cosyzygy: Arc<ModuleRep>,
    /// `β ↦ [soc Ω⁻¹(𝒱_α) : F_β]`
    pub cosyzygy_socle: Character,
}

impl ShapeData {
    pub fn new(alpha: &Composition) -> Result<Self, PresentationError> {
        let phi = phi_map(alpha)?;
        let omega = crate::module::kernel(&phi).module;
        let p = phi.source().clone();
        let v = phi.target().clone();
        let rad_p = submodule_of_space(&p, radical(&p))?.module;
        let inj = build_injective_presentation(alpha)?;
        let cosyzygy = inj.cosyzygy();
        let cosyzygy_socle = socle_character(&cosyzygy);
        Ok(ShapeData { alpha: alpha.clone(), v, p, omega, rad_p, cosyzygy, cosyzygy_socle })
    }
}

pub fn socle_character(m: &ModuleRep) -> Character {
    socle_components(m).into_iter().map(|(b, e)| (b, e.dim())).filter(|(_, d)| *d > 0).collect()
}

/// `dim Ext¹(𝒱_α, N) = dim Hom(Ω(𝒱_α), N) − dim Hom(P_α, N) + dim Hom(𝒱_α, N)`
pub fn ext1_oracle(data: &ShapeData, n: &ModuleRep) -> usize {
    hom_dim(&data.omega, n) + hom_dim(&data.v, n) - hom_dim(&data.p, n)
}

/// `dim Ext¹(F_β, 𝒱_α) = [soc Ω⁻¹(𝒱_α) : F_β]`
pub fn ext1_f_v_oracle(data: &ShapeData, beta: &Composition) -> usize {
    data.cosyzygy_socle.get(beta).copied().unwrap_or(0)
}

/// `dim Hom(Ω(𝒱_α), 𝒱_α)`; zero means `𝒱_α` is essentially rigid.
pub fn essential_rigidity_defect(data: &ShapeData) -> usize {
    hom_dim(&data.omega, &data.v)
}

/// Linear extension of `≼^r` on `SIT(β)`: tableaux are ranked by the longest
/// action path from `𝒯_β`, ties broken by row word (reversed when asked).
pub fn linear_extension(beta: &Composition, reverse_ties: bool) -> Vec<Sit> {
    let basis = enumerate_sit(beta);
    let idx: HashMap<&Sit, usize> = basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let n = beta.size();
    let mut succ = vec![Vec::new(); basis.len()];
    let mut indeg = vec![0usize; basis.len()];
    for (k, t) in basis.iter().enumerate() {
        for i in 1..n {
            if let PiAction::Moved(s) = t.pi(i) {
                let j = idx[&s];
                succ[k].push(j);
                indeg[j] += 1;
            }
        }
    }
    let mut level = vec![0usize; basis.len()];
    let mut queue: VecDeque<usize> = (0..basis.len()).filter(|&k| indeg[k] == 0).collect();
    let mut seen = 0;
    while let Some(k) = queue.pop_front() {
        seen += 1;
        for &j in &succ[k] {
            level[j] = level[j].max(level[k] + 1);
            indeg[j] -= 1;
            if indeg[j] == 0 {
                queue.push_back(j);
            }
        }
    }
    assert_eq!(seen, basis.len(), "the action graph on SIT(β) is acyclic");
    let mut order: Vec<usize> = (0..basis.len()).collect();
    if reverse_ties {
        order.sort_by_key(|&k| (level[k], Reverse(basis[k].row_word())));
    } else {
        order.sort_by_key(|&k| (level[k], basis[k].row_word()));
    }
    order.into_iter().map(|k| basis[k].clone()).collect()
}

/// `𝔅 = {U ∈ SIT(β) : Des(U) = set(α)}`
pub fn basis_b(alpha: &Composition, beta: &Composition) -> Vec<Sit> {
    let set = alpha.descent_set();
    enumerate_sit(beta).into_iter().filter(|u| u.descents() == set).collect()
}

/// One member of the `f_U` basis.
#[derive(Clone, Debug)]
pub struct FuMap {
    pub lead: Sit,
    /// `f_U(T_α)` in the basis `SIT(β)`.
    pub image: SVec,
    pub map: ModuleMap,
}

/// The basis of `Hom(P_α, 𝒱_β)` echelonized along a linear extension of `≼^r`:
/// each map has a leading tableau, coefficient `1` there and `0` at the other leads.
pub fn f_u_basis_with(alpha: &Composition, beta: &Composition, reverse_ties: bool) -> Vec<FuMap> {
    let p = Arc::new(projective_module_of(alpha));
    let v = Arc::new(dual_immaculate_module(beta));
    let shape = Arc::new(RibbonShape::from_composition(alpha));
    let top = enumerate_srt_shape(&shape)
        .iter()
        .position(|t| *t == source_tableau_shape(&shape))
        .expect("source tableau is standard");
    let sits = enumerate_sit(beta);
    let pos: HashMap<&Sit, usize> = sits.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let order = linear_extension(beta, reverse_ties);
    let rank_of: Vec<usize> = {
        let mut r = vec![0; sits.len()];
        for (k, t) in order.iter().enumerate() {
            r[pos[t]] = k;
        }
        r
    };
    let to_order = |v: &SVec| SVec::from_pairs(v.entries().iter().map(|(i, x)| (rank_of[*i], x.clone())));
    let from_order = |v: &SVec| SVec::from_pairs(v.entries().iter().map(|(i, x)| (pos[&order[*i]], x.clone())));
    let homs = hom_space(&p, &v);
    let mut span = Span::new(sits.len());
    let mut pushed = Vec::new();
    for (k, f) in homs.iter().enumerate() {
        if span.push(f.matrix().column(top)).is_some() {
            pushed.push(k);
        }
    }
    let rref = Echelon::spanned_by(sits.len(), homs.iter().map(|f| to_order(f.matrix().column(top))));
    rref.basis_ref()
        .map(|row| {
            let image = from_order(row);
            let coeffs = span.express(&image).expect("row lies in the image span");
            let mut matrix = crate::linalg::Matrix::zeros(v.dim(), p.dim());
            for (j, c) in coeffs.entries() {
                matrix = matrix.sub(&homs[pushed[*j]].matrix().scale(&-c.clone()));
            }
            let lead = order[row.lead().expect("nonzero row").0].clone();
            let map = ModuleMap::new(p.clone(), v.clone(), matrix).expect("combination of intertwiners");
            FuMap { lead, image, map }
        })
        .collect()
}

pub fn f_u_basis(alpha: &Composition, beta: &Composition) -> Vec<FuMap> {
    f_u_basis_with(alpha, beta, false)
}

/// `dim Hom(𝒱_α, 𝒱_β)` as the nullity of `Σ_U c_U π_{[m_{i−1}+1, m_i]} f_U(T_α) = 0`, `i ∈ 𝓘(α)`.
pub fn hom_v_v_general(alpha: &Composition, beta: &Composition) -> usize {
    hom_v_v_general_with(alpha, beta, false)
}

pub fn hom_v_v_general_with(alpha: &Composition, beta: &Composition, reverse_ties: bool) -> usize {
    let basis = f_u_basis_with(alpha, beta, reverse_ties);
    if basis.is_empty() {
        return 0;
    }
    let v = basis[0].map.target().clone();
    let d = v.dim();
    let partial: Vec<usize> = alpha
        .parts()
        .iter()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    let words: Vec<Vec<usize>> = cal_i(alpha)
        .into_iter()
        .map(|i| {
            let lo = if i == 1 { 1 } else { partial[i - 2] + 1 };
            (lo..=partial[i - 1]).collect()
        })
        .collect();
    let cols: Vec<SVec> = basis
        .iter()
        .map(|f| {
            words.iter().enumerate().fold(SVec::new(), |acc, (k, w)| acc.add(&v.apply_word(w, &f.image).shifted(k * d)))
        })
        .collect();
    kernel_of_columns(cols.len(), &cols).dim()
}

/// The report kinds produced by [`ext_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    #[serde(rename = "ext1_V_F")]
    Ext1VF,
    #[serde(rename = "ext1_F_V")]
    Ext1FV,
    #[serde(rename = "hom_V_V")]
    HomVV,
    #[serde(rename = "ext1_V_V")]
    Ext1VV,
    #[serde(rename = "hom_V_V_general")]
    HomVVGeneral,
    #[serde(rename = "hom_P_V")]
    HomPV,
    #[serde(rename = "hom_radP_V")]
    HomRadPV,
}

impl ReportKind {
    pub const ALL: [ReportKind; 7] = [
        ReportKind::Ext1VF,
        ReportKind::Ext1FV,
        ReportKind::HomVV,
        ReportKind::Ext1VV,
        ReportKind::HomVVGeneral,
        ReportKind::HomPV,
        ReportKind::HomRadPV,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReportKind::Ext1VF => "ext1_V_F",
            ReportKind::Ext1FV => "ext1_F_V",
            ReportKind::HomVV => "hom_V_V",
            ReportKind::Ext1VV => "ext1_V_V",
            ReportKind::HomVVGeneral => "hom_V_V_general",
            ReportKind::HomPV => "hom_P_V",
            ReportKind::HomRadPV => "hom_radP_V",
        }
    }

    /// What a cell `(α, β)` measures.
    pub fn describe(self) -> &'static str {
        match self {
            ReportKind::Ext1VF => "dim Ext¹(𝒱_α, F_β)",
            ReportKind::Ext1FV => "dim Ext¹(F_β, 𝒱_α)",
            ReportKind::HomVV => "dim Hom(𝒱_α, 𝒱_β)",
            ReportKind::Ext1VV => "dim Ext¹(𝒱_α, 𝒱_β)",
            ReportKind::HomVVGeneral => "dim Hom(𝒱_α, 𝒱_β) via f_U",
            ReportKind::HomPV => "dim Hom(P_α, 𝒱_β)",
            ReportKind::HomRadPV => "dim Hom(rad P_β, 𝒱_α)",
        }
    }
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ReportKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReportKind::ALL.into_iter().find(|k| k.as_str().eq_ignore_ascii_case(s)).ok_or_else(|| {
            let names: Vec<&str> = ReportKind::ALL.iter().map(|k| k.as_str()).collect();
            format!("unknown kind {s:?}; expected one of {}", names.join(", "))
        })
    }
}

/// One `(α, β)` cell; `formula` is `None` where no closed form is claimed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtReport {
    pub kind: ReportKind,
    pub alpha: Composition,
    pub beta: Composition,
    pub formula: Option<i64>,
    pub oracle: i64,
}

impl ExtReport {
    pub fn agree(&self) -> Option<bool> {
        self.formula.map(|f| f == self.oracle)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alpha": self.alpha.to_string(),
            "beta": self.beta.to_string(),
            "formula": self.formula.map_or(json!("no-claim"), |f| json!(f)),
            "oracle": self.oracle,
            "agree": self.agree().map_or(json!("no-claim"), |a| json!(a)),
        })
    }
}

/// Shape data for every composition of `n`, built in parallel.
#[derive(Clone, Debug)]
pub struct ExtContext {
    pub n: usize,
    pub shapes: BTreeMap<Composition, ShapeData>,
}

impl ExtContext {
    pub fn new(n: usize) -> Result<Self, PresentationError> {
        let comps = Composition::all_of(n);
        let data = comps.par_iter().map(ShapeData::new).collect::<Result<Vec<_>, _>>()?;
        Ok(ExtContext { n, shapes: comps.into_iter().zip(data).collect() })
    }

    pub fn shape(&self, alpha: &Composition) -> &ShapeData {
        &self.shapes[alpha]
    }

    pub fn compositions(&self) -> Vec<Composition> {
        self.shapes.keys().cloned().collect()
    }

    pub fn cell(&self, kind: ReportKind, alpha: &Composition, beta: &Composition) -> ExtReport {
        let a = self.shape(alpha);
        let b = self.shape(beta);
        let (formula, oracle) = match kind {
            ReportKind::Ext1VF => {
                let f = crate::module::simple_module(beta);
                (Some(ext1_v_f_formula(alpha, beta) as i64), ext1_oracle(a, &f) as i64)
            }
            ReportKind::Ext1FV => (Some(ext1_f_v_formula(beta, alpha) as i64), ext1_f_v_oracle(a, beta) as i64),
            ReportKind::HomVV => (hom_v_v_lex(alpha, beta).map(|x| x as i64), hom_dim(&a.v, &b.v) as i64),
            ReportKind::Ext1VV => (ext1_v_v_lex(alpha, beta).map(|x| x as i64), ext1_oracle(a, &b.v) as i64),
            ReportKind::HomVVGeneral => (Some(hom_v_v_general(alpha, beta) as i64), hom_dim(&a.v, &b.v) as i64),
            ReportKind::HomPV => (Some(basis_b(alpha, beta).len() as i64), hom_dim(&a.p, &b.v) as i64),
            ReportKind::HomRadPV => (Some(hom_rad_p_v_formula(beta, alpha)), hom_dim(&b.rad_p, &a.v) as i64),
        };
        ExtReport { kind, alpha: alpha.clone(), beta: beta.clone(), formula, oracle }
    }

    /// All cells of one kind, rows `α` and columns `β` in increasing order.
    pub fn table(&self, kind: ReportKind) -> Vec<ExtReport> {
        let comps = self.compositions();
        let pairs: Vec<(&Composition, &Composition)> =
            comps.iter().flat_map(|a| comps.iter().map(move |b| (a, b))).collect();
        pairs.par_iter().map(|(a, b)| self.cell(kind, a, b)).collect()
    }
}

/// `{ n, kind, cells: [{alpha, beta, formula, oracle, agree}] }`
pub fn ext_report(n: usize, kind: ReportKind, cells: &[ExtReport]) -> Value {
    json!({ "n": n, "kind": kind.as_str(), "cells": cells.iter().map(ExtReport::to_json).collect::<Vec<_>>() })
}

/// Whether the module's composition factors equal `L_{α,·}`.
pub fn expansion_matches_factors(alpha: &Composition) -> bool {
    let v = Arc::new(dual_immaculate_module(alpha));
    composition_multiplicities(&v) == dual_immaculate_expansion(alpha)
}

/// The injective hull shape `𝜶̂` together with every `𝜶̂^(j)`.
pub fn injective_shapes(alpha: &Composition) -> Option<(GeneralizedComposition, Vec<GeneralizedComposition>)> {
    let hat = alpha_hat(alpha).ok()?;
    let js = (1..=crate::composition::cal_m(alpha))
        .map(|j| crate::composition::alpha_hat_j(alpha, j).ok())
        .collect::<Option<Vec<_>>>()?;
    Some((hat, js))
}

/// The source of `𝒱_β` as a coordinate vector.
pub fn source_vector(beta: &Composition) -> SVec {
    let k = enumerate_sit(beta).iter().position(|s| *s == sit_source(beta)).expect("source is standard");
    SVec::unit(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn sit(s: &str) -> Sit {
        s.parse().unwrap()
    }

    fn index(beta: &Composition, u: &Sit) -> usize {
        enumerate_sit(beta).iter().position(|t| t == u).unwrap()
    }

    #[test]
    fn formula_examples() {
        let a = c("1,2,1");
        let ones: Vec<Composition> =
            Composition::all_of(4).into_iter().filter(|b| ext1_v_f_formula(&a, b) == 1).collect();
        assert_eq!(ones, vec![c("2,1,1"), c("2,2")]);
        assert!(Composition::all_of(3).iter().all(|b| ext1_v_f_formula(&c("3"), b) == 0));
        assert_eq!(ext1_v_f_formula(&c("1,2,2"), &c("1,3,1")), 1);
        assert!(Composition::all_of(4).iter().all(|b| ext1_f_v_formula(b, &c("1,1,1,1")) == 0));
        let big = c("2,1,2,3");
        assert_eq!(ext1_f_v_formula(&c("1,3,1,1,1,1").reverse(), &big), 2);
        assert_eq!(ext1_f_v_formula(&c("4,1,1,1,1").reverse(), &big), 2);
    }

    #[test]
    fn expansion_basics() {
        for n in 1..=5 {
            for alpha in Composition::all_of(n) {
                let e = dual_immaculate_expansion(&alpha);
                assert_eq!(e.get(&alpha), Some(&1));
                assert!(e.keys().all(|b| lex_leq(b, &alpha)));
                assert!(expansion_matches_factors(&alpha));
            }
        }
    }

    #[test]
    fn hom_basis_1121_122() {
        let (a, b) = (c("1,1,2,1"), c("1,2,2"));
        let u = sit("1/2,4/3,5");
        assert_eq!(basis_b(&a, &b), vec![u.clone()]);
        let fs = f_u_basis(&a, &b);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].lead, u);
        let expected = SVec::unit(index(&b, &u)).sub(&SVec::unit(index(&b, &sit("1/2,5/3,4"))));
        assert_eq!(fs[0].image, expected);
        assert_eq!(hom_v_v_general(&a, &b), 1);
        assert_eq!(hom_dim(&dual_immaculate_module(&a), &dual_immaculate_module(&b)), 1);
    }

    #[test]
    fn hom_basis_1132_232() {
        let (a, b) = (c("1,1,3,2"), c("2,3,2"));
        let us = [sit("1,5/2,4,7/3,6"), sit("1,7/2,4,5/3,6"), sit("1,5/2,6,7/3,4")];
        let mut bb = basis_b(&a, &b);
        bb.sort_by_key(|u| index(&b, u));
        let mut expected = us.to_vec();
        expected.sort_by_key(|u| index(&b, u));
        assert_eq!(bb, expected);
        let fs = f_u_basis(&a, &b);
        assert_eq!(fs.len(), 3);
        let tail = SVec::unit(index(&b, &sit("1,7/2,5,6/3,4")));
        for f in &fs {
            assert_eq!(f.image, SVec::unit(index(&b, &f.lead)).sub(&tail));
        }
        let va = dual_immaculate_module(&a);
        let vb = dual_immaculate_module(&b);
        assert_eq!(hom_v_v_general(&a, &b), 2);
        assert_eq!(hom_dim(&va, &vb), 2);
        assert_eq!(crate::module::hom_space_naive(&va, &vb).len(), 2);
    }

    #[test]
    fn leads_are_the_b_set() {
        for n in 1..=5 {
            let comps = Composition::all_of(n);
            for a in &comps {
                for b in &comps {
                    let mut want = basis_b(a, b);
                    want.sort_by_key(|u| u.row_word());
                    for rev in [false, true] {
                        let mut leads: Vec<Sit> = f_u_basis_with(a, b, rev).into_iter().map(|f| f.lead).collect();
                        leads.sort_by_key(|u| u.row_word());
                        assert_eq!(leads, want, "{a} {b} {rev}");
                    }
                }
            }
        }
    }

    #[test]
    fn linear_extension_respects_the_order() {
        for beta in Composition::all_of(5) {
            let order = linear_extension(&beta, false);
            assert_eq!(order[0], sit_source(&beta));
            let rank: HashMap<&Sit, usize> = order.iter().enumerate().map(|(k, t)| (t, k)).collect();
            for t in &order {
                for i in 1..5 {
                    if let PiAction::Moved(s) = t.pi(i) {
                        assert!(rank[&s] > rank[t]);
                    }
                }
            }
        }
    }

    #[test]
    fn small_tables_agree() {
        let ctx = ExtContext::new(4).unwrap();
        for kind in
            [ReportKind::Ext1VF, ReportKind::HomVV, ReportKind::Ext1VV, ReportKind::HomVVGeneral, ReportKind::HomPV]
        {
            for cell in ctx.table(kind) {
                assert_ne!(
                    cell.agree(),
                    Some(false),
                    "{kind} {} {}: {:?} vs {}",
                    cell.alpha,
                    cell.beta,
                    cell.formula,
                    cell.oracle
                );
            }
        }
        for alpha in ctx.compositions() {
            assert_eq!(essential_rigidity_defect(ctx.shape(&alpha)), 0);
        }
    }

    #[test]
    fn report_json_shape() {
        let ctx = ExtContext::new(3).unwrap();
        let cells = ctx.table(ReportKind::HomVV);
        let j = ext_report(3, ReportKind::HomVV, &cells);
        assert_eq!(j["kind"], "hom_V_V");
        assert_eq!(j["cells"].as_array().unwrap().len(), 16);
        assert!(j["cells"].as_array().unwrap().iter().any(|c| c["formula"] == "no-claim"));
        assert_eq!("EXT1_v_f".parse::<ReportKind>().unwrap(), ReportKind::Ext1VF);
        assert!("nope".parse::<ReportKind>().is_err());
    }
}
