//! Finite-dimensional `H_n(0)`-modules given by exact action matrices, maps
//! between them, and the radical/socle/Hom machinery.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Display;
use std::hash::Hash;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::composition::{Composition, CompositionError, GeneralizedComposition};
use crate::linalg::{kernel_of_columns, q_to_string, Echelon, Matrix, SVec, Span, Q};
use crate::permutation::Permutation;
use crate::tableau::{
    enumerate_sit, enumerate_srt, enumerate_srt_shape, source_tableau_shape, PiAction, RibbonShape, Srt, TableauError,
};

/// Composition factors with multiplicities.
pub type Character = BTreeMap<Composition, usize>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("expected {expected} action matrices, got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("π_{index} is {rows}x{cols}, expected {dim}x{dim}")]
    ActionShape { index: usize, rows: usize, cols: usize, dim: usize },
    #[error("{0} labels for a module of dimension {1}")]
    LabelCount(usize, usize),
    #[error("modules over H_{0}(0) and H_{1}(0) cannot be combined")]
    RankMismatch(usize, usize),
    #[error("map is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MapShape { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("map does not commute with π_{generator} on basis vector {column}")]
    NotIntertwining { generator: usize, column: usize },
    #[error("subspace is not stable under π_{generator}")]
    NotSubmodule { generator: usize },
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Composition(#[from] CompositionError),
}

/// An `H_n(0)`-module: a labelled basis and the matrices of `π_1, …, π_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    n: usize,
    labels: Vec<String>,
    actions: Vec<Matrix>,
}

impl ModuleRep {
    pub fn new(n: usize, labels: Vec<String>, actions: Vec<Matrix>) -> Result<Self, ModuleError> {
        let expected = n.saturating_sub(1);
        if actions.len() != expected {
            return Err(ModuleError::ActionCount { expected, got: actions.len() });
        }
        let dim = labels.len();
        for (k, a) in actions.iter().enumerate() {
            if a.nrows() != dim || a.ncols() != dim {
                return Err(ModuleError::ActionShape { index: k + 1, rows: a.nrows(), cols: a.ncols(), dim });
            }
        }
        Ok(ModuleRep { n, labels, actions })
    }

    /// Module with basis `basis` and `π_i` acting through `act`.
    pub fn from_basis<T, F>(n: usize, basis: &[T], act: F) -> Self
    where
        T: Eq + Hash + Display,
        F: Fn(usize, &T) -> PiAction<T>,
    {
        let index: HashMap<&T, usize> = basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let dim = basis.len();
        let actions = (1..n)
            .map(|i| {
                let cols = basis
                    .iter()
                    .enumerate()
                    .map(|(k, t)| match act(i, t) {
                        PiAction::Zero => SVec::new(),
                        PiAction::Fixed => SVec::unit(k),
                        PiAction::Moved(s) => SVec::unit(*index.get(&s).expect("action stays in the basis")),
                    })
                    .collect();
                Matrix::from_columns(dim, cols)
            })
            .collect();
        ModuleRep { n, labels: basis.iter().map(|t| t.to_string()).collect(), actions }
    }

    pub fn zero(n: usize) -> Self {
        ModuleRep { n, labels: Vec::new(), actions: (1..n).map(|_| Matrix::zeros(0, 0)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Matrix of `π_i`, `1 ≤ i ≤ n − 1`.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i - 1]
    }

    pub fn act(&self, i: usize, v: &SVec) -> SVec {
        self.action(i).mul_vec(v)
    }

    /// `π_{w_1} π_{w_2} ⋯ π_{w_k} · v`; the last letter acts first.
    pub fn apply_word(&self, word: &[usize], v: &SVec) -> SVec {
        word.iter().rev().fold(v.clone(), |acc, &i| self.act(i, &acc))
    }

    /// `π̄_i · v = (π_i − 1) · v`
    pub fn apply_pibar(&self, i: usize, v: &SVec) -> SVec {
        self.act(i, v).sub(v)
    }

    pub fn apply_pibar_word(&self, word: &[usize], v: &SVec) -> SVec {
        word.iter().rev().fold(v.clone(), |acc, &i| self.apply_pibar(i, &acc))
    }

    /// `π_σ · v` along the canonical reduced word of `σ`.
    pub fn apply_permutation(&self, sigma: &Permutation, v: &SVec) -> SVec {
        self.apply_word(&sigma.reduced_word(), v)
    }

    pub fn apply_pibar_permutation(&self, sigma: &Permutation, v: &SVec) -> SVec {
        self.apply_pibar_word(&sigma.reduced_word(), v)
    }

    /// Defining relations of `H_n(0)` that fail, described in words.
    pub fn relation_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let a = &self.actions;
        for i in 0..a.len() {
            if a[i].mul(&a[i]) != a[i] {
                out.push(format!("π_{}² ≠ π_{}", i + 1, i + 1));
            }
            for j in i + 1..a.len() {
                if j == i + 1 {
                    if a[i].mul(&a[j]).mul(&a[i]) != a[j].mul(&a[i]).mul(&a[j]) {
                        out.push(format!("braid relation fails at π_{} π_{}", i + 1, j + 1));
                    }
                } else if a[i].mul(&a[j]) != a[j].mul(&a[i]) {
                    out.push(format!("π_{} and π_{} do not commute", i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn satisfies_relations(&self) -> bool {
        self.relation_failures().is_empty()
    }

    pub fn is_combinatorial(&self) -> bool {
        self.actions.iter().all(Matrix::is_monomial_01)
    }

    /// `{ n, basis, actions: [[i, row, col, value], …] }` with triplets sorted.
    pub fn to_json(&self) -> Value {
        let actions: Vec<Value> = self
            .actions
            .iter()
            .enumerate()
            .flat_map(|(k, a)| a.triplets().into_iter().map(move |(r, c, x)| json!([k + 1, r, c, q_to_string(&x)])))
            .collect();
        json!({ "n": self.n, "basis": self.labels, "actions": actions })
    }
}

/// `P_𝜶`, with basis `SRT(𝜶)` in reading-word order.
pub fn projective_module(g: &GeneralizedComposition) -> ModuleRep {
    ModuleRep::from_basis(g.size(), &enumerate_srt(g), |i, t| t.pi(i))
}

/// `P_α` for a composition; the empty composition gives the trivial `H_0(0)`-module.
pub fn projective_module_of(alpha: &Composition) -> ModuleRep {
    let shape = Arc::new(RibbonShape::from_composition(alpha));
    ModuleRep::from_basis(alpha.size(), &enumerate_srt_shape(&shape), |i, t| t.pi(i))
}

/// `𝒱_α`, with basis `SIT(α)` in row-word order.
pub fn dual_immaculate_module(alpha: &Composition) -> ModuleRep {
    ModuleRep::from_basis(alpha.size(), &enumerate_sit(alpha), |i, t| t.pi(i))
}

/// `F_β`: `π_i` acts by `0` on `i ∈ set(β)` and by `1` otherwise.
pub fn simple_module(beta: &Composition) -> ModuleRep {
    let set = beta.descent_set();
    let actions =
        (1..beta.size()).map(|i| if set.contains(&i) { Matrix::zeros(1, 1) } else { Matrix::identity(1) }).collect();
    ModuleRep { n: beta.size(), labels: vec![format!("v_{beta}")], actions }
}

pub fn direct_sum(parts: &[&ModuleRep]) -> Result<ModuleRep, ModuleError> {
    let Some(first) = parts.first() else {
        return Err(ModuleError::Failed("empty direct sum".into()));
    };
    let n = first.n;
    if let Some(p) = parts.iter().find(|p| p.n != n) {
        return Err(ModuleError::RankMismatch(n, p.n));
    }
    let labels = if parts.len() == 1 {
        first.labels.clone()
    } else {
        parts.iter().enumerate().flat_map(|(k, p)| p.labels.iter().map(move |l| format!("{k}:{l}"))).collect()
    };
    let actions = (0..n.saturating_sub(1))
        .map(|i| Matrix::block_diag(&parts.iter().map(|p| p.actions[i].clone()).collect::<Vec<_>>()))
        .collect();
    Ok(ModuleRep { n, labels, actions })
}

/// `H_n(0)` acting on itself by left multiplication, basis `{π_σ}`.
pub fn regular_module(n: usize) -> ModuleRep {
    let perms = Permutation::all(n);
    ModuleRep::from_basis(n, &perms, |i, sigma| {
        let moved = Permutation::s(i, n).expect("1 ≤ i < n").compose(sigma);
        if moved.length() > sigma.length() {
            PiAction::Moved(moved)
        } else {
            PiAction::Fixed
        }
    })
}

/// Pairs `(σ, ρ)` in `S_n` where "`π_σ π̄_ρ = 0` iff `ℓ(σρ) ≠ ℓ(σ) + ℓ(ρ)`" fails.
pub fn zero_characterization_failures(n: usize) -> Vec<(Permutation, Permutation)> {
    let reg = regular_module(n);
    let perms = Permutation::all(n);
    let id = perms.iter().position(|p| p.length() == 0).expect("identity");
    let one = SVec::unit(id);
    let mut out = Vec::new();
    for rho in &perms {
        let bar = reg.apply_pibar_permutation(rho, &one);
        for sigma in &perms {
            let zero = reg.apply_permutation(sigma, &bar).is_zero();
            let additive = sigma.compose(rho).length() == sigma.length() + rho.length();
            if zero == additive {
                out.push((sigma.clone(), rho.clone()));
            }
        }
    }
    out
}

/// An intertwiner `source → target`; the matrix maps source coordinates to target coordinates.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: Arc<ModuleRep>,
    target: Arc<ModuleRep>,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: Arc<ModuleRep>, target: Arc<ModuleRep>, matrix: Matrix) -> Result<Self, ModuleError> {
        if source.n != target.n {
            return Err(ModuleError::RankMismatch(source.n, target.n));
        }
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(ModuleError::MapShape {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
                expected_rows: target.dim(),
                expected_cols: source.dim(),
            });
        }
        for i in 1..source.n {
            let left = matrix.mul(source.action(i));
            let right = target.action(i).mul(&matrix);
            if left != right {
                let column = (0..matrix.ncols()).find(|&c| left.column(c) != right.column(c)).unwrap_or(0);
                return Err(ModuleError::NotIntertwining { generator: i, column });
            }
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn zero(source: Arc<ModuleRep>, target: Arc<ModuleRep>) -> Self {
        let matrix = Matrix::zeros(target.dim(), source.dim());
        ModuleMap { source, target, matrix }
    }

    pub fn identity(m: Arc<ModuleRep>) -> Self {
        let matrix = Matrix::identity(m.dim());
        ModuleMap { source: m.clone(), target: m, matrix }
    }

    pub fn source(&self) -> &Arc<ModuleRep> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ModuleRep> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap, ModuleError> {
        if other.target.dim() != self.source.dim() {
            return Err(ModuleError::MapShape {
                rows: other.target.dim(),
                cols: other.source.dim(),
                expected_rows: self.source.dim(),
                expected_cols: other.source.dim(),
            });
        }
        Ok(ModuleMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel_space(&self) -> Echelon {
        self.matrix.kernel()
    }

    pub fn image_space(&self) -> Echelon {
        self.matrix.image()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }
}

/// Smallest submodule containing `vectors`.
pub fn closure<I: IntoIterator<Item = SVec>>(m: &ModuleRep, vectors: I) -> Echelon {
    let mut space = Echelon::new(m.dim());
    let mut queue = VecDeque::new();
    for v in vectors {
        if space.insert(v.clone()).is_some() {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for i in 1..m.n {
            let w = m.act(i, &v);
            if space.insert(w.clone()).is_some() {
                queue.push_back(w);
            }
        }
    }
    space
}

pub fn is_submodule(m: &ModuleRep, space: &Echelon) -> Result<(), ModuleError> {
    for i in 1..m.n {
        if space.basis_ref().any(|v| !space.contains(&m.act(i, v))) {
            return Err(ModuleError::NotSubmodule { generator: i });
        }
    }
    Ok(())
}

/// A submodule with its echelon basis as module basis.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub space: Echelon,
    pub module: Arc<ModuleRep>,
    pub inclusion: ModuleMap,
}

/// Submodule generated by `vectors`; basis vectors are labelled by their pivots.
pub fn submodule<I: IntoIterator<Item = SVec>>(m: &Arc<ModuleRep>, vectors: I) -> Submodule {
    submodule_of_space(m, closure(m, vectors)).expect("closure is stable")
}

pub fn submodule_of_space(m: &Arc<ModuleRep>, space: Echelon) -> Result<Submodule, ModuleError> {
    is_submodule(m, &space)?;
    let basis = space.basis();
    let pivots = space.pivots();
    let d = basis.len();
    let actions = (1..m.n)
        .map(|i| {
            let cols = basis.iter().map(|b| space.coordinates(&m.act(i, b)).expect("stable subspace")).collect();
            Matrix::from_columns(d, cols)
        })
        .collect();
    let labels = pivots.iter().map(|&p| m.labels[p].clone()).collect();
    let module = Arc::new(ModuleRep { n: m.n, labels, actions });
    let inclusion =
        ModuleMap { source: module.clone(), target: m.clone(), matrix: Matrix::from_columns(m.dim(), basis) };
    Ok(Submodule { space, module, inclusion })
}

/// `M / S`, with basis the unit vectors at the non-pivot coordinates of `S`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub kernel: Echelon,
    pub complement: Vec<usize>,
    pub module: Arc<ModuleRep>,
    pub projection: ModuleMap,
}

pub fn quotient(m: &Arc<ModuleRep>, sub: &Echelon) -> Result<Quotient, ModuleError> {
    is_submodule(m, sub)?;
    let pivots: BTreeSet<usize> = sub.pivots().into_iter().collect();
    let complement: Vec<usize> = (0..m.dim()).filter(|c| !pivots.contains(c)).collect();
    let position: HashMap<usize, usize> = complement.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let d = complement.len();
    let project = |v: &SVec| SVec::from_pairs(sub.reduce(v).into_entries().into_iter().map(|(i, x)| (position[&i], x)));
    let actions = (1..m.n)
        .map(|i| Matrix::from_columns(d, complement.iter().map(|&c| project(&m.act(i, &SVec::unit(c)))).collect()))
        .collect();
    let labels = complement.iter().map(|&c| m.labels[c].clone()).collect();
    let module = Arc::new(ModuleRep { n: m.n, labels, actions });
    let proj = Matrix::from_columns(d, (0..m.dim()).map(|c| project(&SVec::unit(c))).collect());
    let projection = ModuleMap { source: m.clone(), target: module.clone(), matrix: proj };
    Ok(Quotient { kernel: sub.clone(), complement, module, projection })
}

pub fn kernel(f: &ModuleMap) -> Submodule {
    submodule_of_space(f.source(), f.kernel_space()).expect("kernels are submodules")
}

pub fn image(f: &ModuleMap) -> Submodule {
    submodule_of_space(f.target(), f.image_space()).expect("images are submodules")
}

pub fn cokernel(f: &ModuleMap) -> Quotient {
    quotient(f.target(), &f.image_space()).expect("images are submodules")
}

/// The composition `β` of the simple module on which `π_i` acts by `pattern[i−1]`.
pub fn pattern_composition(pattern: &[bool]) -> Composition {
    let n = pattern.len() + 1;
    let set: BTreeSet<usize> = (1..n).filter(|&i| !pattern[i - 1]).collect();
    Composition::from_set(&set, n).expect("subset of [n−1]")
}

/// Common eigenspaces `{v : A_i v = c_i v ∀ i}` for all nonzero patterns `c ∈ {0,1}^k`.
pub fn joint_eigenspaces(dim: usize, mats: &[Matrix]) -> Vec<(Vec<bool>, Echelon)> {
    let mut out = Vec::new();
    let start: Vec<SVec> = (0..dim).map(SVec::unit).collect();
    fn rec(
        dim: usize,
        mats: &[Matrix],
        basis: Vec<SVec>,
        pattern: &mut Vec<bool>,
        out: &mut Vec<(Vec<bool>, Echelon)>,
    ) {
        if basis.is_empty() {
            return;
        }
        let k = pattern.len();
        if k == mats.len() {
            out.push((pattern.clone(), Echelon::spanned_by(dim, basis)));
            return;
        }
        for value in [false, true] {
            let c = if value { Q::one() } else { Q::zero() };
            let cols: Vec<SVec> = basis.iter().map(|b| mats[k].mul_vec(b).add_scaled(&-c.clone(), b)).collect();
            let ker = kernel_of_columns(cols.len(), &cols);
            let next: Vec<SVec> = ker
                .basis_ref()
                .map(|x| x.entries().iter().fold(SVec::new(), |acc, (j, y)| acc.add_scaled(y, &basis[*j])))
                .collect();
            pattern.push(value);
            rec(dim, mats, next, pattern, out);
            pattern.pop();
        }
    }
    rec(dim, mats, start, &mut Vec::new(), &mut out);
    out
}

fn trivial_pattern_module(m: &ModuleRep) -> Composition {
    if m.n == 0 {
        Composition::empty()
    } else {
        Composition::of(&[m.n])
    }
}

/// Simple submodules grouped by isomorphism type: `β ↦ {v : π_i v = [i ∉ set(β)] v}`.
pub fn socle_components(m: &ModuleRep) -> Vec<(Composition, Echelon)> {
    if m.n <= 1 {
        return if m.dim() == 0 { vec![] } else { vec![(trivial_pattern_module(m), Echelon::full(m.dim()))] };
    }
    joint_eigenspaces(m.dim(), &m.actions).into_iter().map(|(p, e)| (pattern_composition(&p), e)).collect()
}

pub fn socle(m: &ModuleRep) -> Echelon {
    socle_components(m).into_iter().fold(Echelon::new(m.dim()), |acc, (_, e)| acc.sum(&e))
}

/// Covectors `f` with `f π_i = [i ∉ set(β)] f`, i.e. maps `M → F_β`, grouped by `β`.
pub fn top_components(m: &ModuleRep) -> Vec<(Composition, Echelon)> {
    if m.n <= 1 {
        return if m.dim() == 0 { vec![] } else { vec![(trivial_pattern_module(m), Echelon::full(m.dim()))] };
    }
    let transposed: Vec<Matrix> = m.actions.iter().map(Matrix::transpose).collect();
    joint_eigenspaces(m.dim(), &transposed).into_iter().map(|(p, e)| (pattern_composition(&p), e)).collect()
}

/// `rad M`: the common kernel of all maps to simple modules.
pub fn radical(m: &ModuleRep) -> Echelon {
    let covectors = top_components(m).into_iter().fold(Echelon::new(m.dim()), |acc, (_, e)| acc.sum(&e));
    covectors.annihilator()
}

/// `M ⊇ rad M ⊇ rad² M ⊇ … ⊇ 0` in the coordinates of `M`, ending with the zero space.
pub fn radical_filtration(m: &Arc<ModuleRep>) -> Vec<Echelon> {
    let mut layers = vec![Echelon::full(m.dim())];
    let mut current =
        Submodule { space: Echelon::full(m.dim()), module: m.clone(), inclusion: ModuleMap::identity(m.clone()) };
    while current.module.dim() > 0 {
        let rad = radical(&current.module);
        let ambient = Echelon::spanned_by(m.dim(), rad.basis_ref().map(|v| current.inclusion.apply(v)));
        layers.push(ambient);
        let sub = submodule_of_space(&current.module, rad).expect("radical is a submodule");
        let inclusion = current.inclusion.compose(&sub.inclusion).expect("composable inclusions");
        current = Submodule { space: sub.space, module: sub.module, inclusion };
    }
    layers
}

/// Composition factors, read off the tops of the radical layers.
pub fn composition_multiplicities(m: &Arc<ModuleRep>) -> Character {
    let mut out = Character::new();
    let mut current = m.clone();
    while current.dim() > 0 {
        let tops = top_components(&current);
        let mut covectors = Echelon::new(current.dim());
        for (beta, e) in tops {
            *out.entry(beta).or_insert(0) += e.dim();
            covectors = covectors.sum(&e);
        }
        let rad = covectors.annihilator();
        current = submodule_of_space(&current, rad).expect("radical is a submodule").module;
    }
    out
}

pub fn character_size(ch: &Character) -> usize {
    ch.values().sum()
}

/// Unit vectors spanning a complement of `rad M`; they generate `M`.
pub fn top_generators(m: &ModuleRep) -> Vec<usize> {
    let pivots: BTreeSet<usize> = radical(m).pivots().into_iter().collect();
    (0..m.dim()).filter(|c| !pivots.contains(c)).collect()
}

struct Spin {
    span: Span,
    vectors: Vec<SVec>,
    /// Images of the spanning vectors as rows of covectors over the unknowns.
    images: Vec<Vec<SVec>>,
    unknowns: usize,
}

/// Hom solver: the unknowns are the images of a generating set, propagated
/// along a spanning tree of the action graph.
fn spin(m: &ModuleRep, n: &ModuleRep, gens: &[usize]) -> (Spin, Echelon) {
    let dn = n.dim();
    let unknowns = gens.len() * dn;
    let rows_of: Vec<Matrix> = n.actions.iter().map(Matrix::transpose).collect();
    let push_action = |i: usize, rows: &[SVec]| -> Vec<SVec> {
        let t = &rows_of[i - 1];
        (0..dn)
            .map(|r| t.column(r).entries().iter().fold(SVec::new(), |acc, (k, x)| acc.add_scaled(x, &rows[*k])))
            .collect()
    };
    let mut s = Spin { span: Span::new(m.dim()), vectors: Vec::new(), images: Vec::new(), unknowns };
    let mut eqs = Echelon::new(unknowns);
    let mut queue = VecDeque::new();
    for (j, &g) in gens.iter().enumerate() {
        let v = SVec::unit(g);
        if s.span.push(&v).is_some() {
            s.vectors.push(v);
            s.images.push((0..dn).map(|r| SVec::unit(j * dn + r)).collect());
            queue.push_back(s.vectors.len() - 1);
        }
    }
    while let Some(t) = queue.pop_front() {
        for i in 1..m.n {
            let v = m.act(i, &s.vectors[t]);
            let pushed = push_action(i, &s.images[t]);
            if s.span.push(&v).is_some() {
                s.vectors.push(v);
                s.images.push(pushed);
                queue.push_back(s.vectors.len() - 1);
                continue;
            }
            if eqs.dim() == unknowns {
                continue;
            }
            let coeffs = s.span.express(&v).expect("v lies in the span");
            for (r, p) in pushed.iter().enumerate() {
                let lhs = coeffs.entries().iter().fold(SVec::new(), |acc, (k, c)| acc.add_scaled(c, &s.images[*k][r]));
                let eq = lhs.sub(p);
                if !eq.is_zero() {
                    eqs.insert(eq);
                }
            }
        }
    }
    assert_eq!(s.span.len(), m.dim(), "generators must generate the module");
    (s, eqs)
}

fn default_generators(m: &ModuleRep) -> Vec<usize> {
    if m.dim() == 0 {
        Vec::new()
    } else {
        top_generators(m)
    }
}

/// `dim Hom(M, N)`.
pub fn hom_dim(m: &ModuleRep, n: &ModuleRep) -> usize {
    if m.dim() == 0 || n.dim() == 0 {
        return 0;
    }
    let gens = default_generators(m);
    let (s, eqs) = spin(m, n, &gens);
    s.unknowns - eqs.dim()
}

/// A basis of `Hom(M, N)`.
pub fn hom_space(m: &Arc<ModuleRep>, n: &Arc<ModuleRep>) -> Vec<ModuleMap> {
    if m.dim() == 0 || n.dim() == 0 {
        return Vec::new();
    }
    let gens = default_generators(m);
    let (s, eqs) = spin(m, n, &gens);
    let solutions = eqs.annihilator();
    let units: Vec<SVec> = (0..m.dim()).map(|c| s.span.express(&SVec::unit(c)).expect("spanning")).collect();
    solutions
        .basis_ref()
        .map(|x| {
            let on_tree: Vec<SVec> = s
                .images
                .iter()
                .map(|rows| SVec::from_pairs(rows.iter().enumerate().map(|(r, row)| (r, row.dot(x)))))
                .collect();
            let cols = units
                .iter()
                .map(|u| u.entries().iter().fold(SVec::new(), |acc, (t, c)| acc.add_scaled(c, &on_tree[*t])))
                .collect();
            ModuleMap::new(m.clone(), n.clone(), Matrix::from_columns(n.dim(), cols)).expect("solutions intertwine")
        })
        .collect()
}

/// `Hom(M, N)` by solving `X A_i^M = A_i^N X` on all `dim M · dim N` entries.
pub fn hom_space_naive(m: &ModuleRep, n: &ModuleRep) -> Vec<Matrix> {
    let (dm, dn) = (m.dim(), n.dim());
    let var = |r: usize, c: usize| r * dm + c;
    let mut eqs = Echelon::new(dm * dn);
    for i in 1..m.n {
        let am = m.action(i);
        let an_t = n.action(i).transpose();
        for r in 0..dn {
            for c in 0..dm {
                let left = am.column(c).entries().iter().map(|(k, x)| (var(r, *k), x.clone()));
                let right = an_t.column(r).entries().iter().map(|(k, x)| (var(*k, c), -x.clone()));
                let eq = SVec::from_pairs(left.chain(right));
                if !eq.is_zero() {
                    eqs.insert(eq);
                }
            }
        }
    }
    eqs.annihilator()
        .basis_ref()
        .map(|x| {
            Matrix::from_triplets(
                dn,
                dm,
                &x.entries().iter().map(|(u, y)| (u / dm, u % dm, y.clone())).collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// Basis indices reachable from `from` through nonzero generator actions
/// (combinatorial modules only).
pub fn reachable(m: &ModuleRep, from: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(k) = queue.pop_front() {
        for a in &m.actions {
            if let Some(&(t, _)) = a.column(k).entries().first() {
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
    }
    seen
}

/// An explicit isomorphism `⊕_{β ∈ [𝜶]} P_β → P_𝜶`, normalized so that
/// `T_β ↦ χ⁻¹(T_β) + (terms away from every χ⁻¹(T_γ))`.
pub fn chi_isomorphism(g: &GeneralizedComposition) -> Result<ModuleMap, ModuleError> {
    let target_basis = enumerate_srt(g);
    let target = Arc::new(ModuleRep::from_basis(g.size(), &target_basis, |i, t| t.pi(i)));
    let index: HashMap<&Srt, usize> = target_basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let shape = Arc::new(RibbonShape::new(g));
    let betas = g.bracket_expansion();
    let special: Vec<usize> = betas
        .iter()
        .map(|b| {
            let src = source_tableau_shape(&Arc::new(RibbonShape::from_composition(b)));
            let t = Srt::from_reading_word(shape.clone(), &src.reading_word_vec())
                .ok_or_else(|| ModuleError::Failed(format!("no tableau of shape {g} with the word of T_{b}")))?;
            Ok(index[&t])
        })
        .collect::<Result<_, ModuleError>>()?;
    let d = target.dim();
    // coordinates permuted so that the special positions come first
    let mut order: Vec<usize> = special.clone();
    order.extend((0..d).filter(|c| !special.contains(c)));
    let forward: HashMap<usize, usize> = order.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let permute = |v: &SVec| SVec::from_pairs(v.entries().iter().map(|(i, x)| (forward[i], x.clone())));
    let unpermute = |v: &SVec| SVec::from_pairs(v.entries().iter().map(|(i, x)| (order[*i], x.clone())));
    let mut parts = Vec::new();
    let mut blocks = Vec::new();
    for (k, beta) in betas.iter().enumerate() {
        let pb = Arc::new(projective_module_of(beta));
        let src_basis = enumerate_srt_shape(&Arc::new(RibbonShape::from_composition(beta)));
        let src = source_tableau_shape(&Arc::new(RibbonShape::from_composition(beta)));
        let top = src_basis.iter().position(|t| *t == src).expect("source tableau is standard");
        let homs = hom_space(&pb, &target);
        let mut span = Span::new(d);
        let mut pushed = Vec::new();
        for (j, f) in homs.iter().enumerate() {
            if span.push(f.matrix().column(top)).is_some() {
                pushed.push(j);
            }
        }
        let images = Echelon::spanned_by(d, homs.iter().map(|f| permute(f.matrix().column(top))));
        let row = images
            .basis_ref()
            .find(|r| r.lead().map(|(p, _)| *p) == Some(k))
            .ok_or_else(|| ModuleError::Failed(format!("no map P_{beta} → P_{g} hits χ⁻¹(T_{beta})")))?;
        let wanted = unpermute(row);
        let coeffs = span.express(&wanted).expect("row lies in the image span");
        let mut matrix = Matrix::zeros(d, pb.dim());
        for (j, c) in coeffs.entries() {
            matrix = matrix.sub(&homs[pushed[*j]].matrix().scale(&-c.clone()));
        }
        blocks.push(matrix);
        parts.push(pb);
    }
    let refs: Vec<&ModuleRep> = parts.iter().map(|p| p.as_ref()).collect();
    let source = Arc::new(direct_sum(&refs)?);
    let map = ModuleMap::new(source, target, Matrix::hstack(d, &blocks))?;
    if !(map.is_injective() && map.is_surjective()) {
        return Err(ModuleError::Failed(format!("χ-normalized map for {g} is not bijective")));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::sit_source;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GeneralizedComposition {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(projective_module(&g("2,1|1")).dim(), 8);
        assert_eq!(projective_module(&g("1,2,1")).dim(), 5);
        assert_eq!(dual_immaculate_module(&c("1,2,2")).dim(), 3);
        assert_eq!(dual_immaculate_module(&c("4")).dim(), 1);
        assert_eq!(projective_module_of(&Composition::empty()).dim(), 1);
    }

    #[test]
    fn relations_hold() {
        for n in 1..=5 {
            for alpha in Composition::all_of(n) {
                assert!(projective_module_of(&alpha).satisfies_relations());
                assert!(dual_immaculate_module(&alpha).satisfies_relations());
                assert!(simple_module(&alpha).satisfies_relations());
            }
        }
        assert!(projective_module(&g("1|1|2,1,1")).satisfies_relations());
        assert!(regular_module(4).satisfies_relations());
    }

    #[test]
    fn simple_actions() {
        let f = simple_module(&c("1,2,1"));
        assert!(f.action(1).is_zero());
        assert_eq!(f.action(2), &Matrix::identity(1));
        assert!(f.action(3).is_zero());
    }

    #[test]
    fn zero_characterization_small() {
        for n in 1..=3 {
            assert!(zero_characterization_failures(n).is_empty());
        }
    }

    #[test]
    fn projective_top_is_simple() {
        for n in 1..=5 {
            for alpha in Composition::all_of(n) {
                let p = Arc::new(projective_module_of(&alpha));
                let tops = top_components(&p);
                assert_eq!(tops.len(), 1);
                assert_eq!(tops[0].0, alpha);
                assert_eq!(tops[0].1.dim(), 1);
                let q = quotient(&p, &radical(&p)).unwrap();
                assert_eq!(q.module.dim(), 1);
            }
        }
    }

    #[test]
    fn radical_of_projective_is_span_of_non_source() {
        for n in 1..=5 {
            for alpha in Composition::all_of(n) {
                let shape = Arc::new(RibbonShape::from_composition(&alpha));
                let basis = enumerate_srt_shape(&shape);
                let src = source_tableau_shape(&shape);
                let expected =
                    Echelon::spanned_by(basis.len(), (0..basis.len()).filter(|&k| basis[k] != src).map(SVec::unit));
                assert_eq!(radical(&projective_module_of(&alpha)), expected);
            }
        }
    }

    #[test]
    fn dual_immaculate_is_cyclic() {
        for n in 1..=5 {
            for alpha in Composition::all_of(n) {
                let v = dual_immaculate_module(&alpha);
                let basis = enumerate_sit(&alpha);
                let k = basis.iter().position(|s| *s == sit_source(&alpha)).unwrap();
                assert_eq!(closure(&v, [SVec::unit(k)]).dim(), v.dim());
            }
        }
    }

    #[test]
    fn hom_solvers_agree() {
        for n in 2..=4 {
            let comps = Composition::all_of(n);
            for a in &comps {
                for b in &comps {
                    let m = Arc::new(dual_immaculate_module(a));
                    let p = Arc::new(projective_module_of(b));
                    for (x, y) in [(&m, &p), (&p, &m), (&m, &m)] {
                        let fast = hom_space(x, y);
                        let slow = hom_space_naive(x, y);
                        assert_eq!(fast.len(), slow.len(), "{a} {b}");
                        assert_eq!(hom_dim(x, y), slow.len());
                        let span = Echelon::spanned_by(x.dim() * y.dim(), slow.iter().map(flatten));
                        for f in &fast {
                            assert!(span.contains(&flatten(f.matrix())));
                        }
                    }
                }
            }
        }
    }

    fn flatten(mat: &Matrix) -> SVec {
        SVec::from_pairs(mat.triplets().into_iter().map(|(r, c, x)| (r * mat.ncols() + c, x)))
    }

    #[test]
    fn hom_between_simples() {
        for a in Composition::all_of(4) {
            for b in Composition::all_of(4) {
                let d = hom_dim(&simple_module(&a), &simple_module(&b));
                assert_eq!(d, usize::from(a == b));
            }
        }
    }

    #[test]
    fn socle_and_quotients() {
        let p = Arc::new(projective_module_of(&c("4")));
        assert_eq!(socle(&p).dim(), 1);
        let q = quotient(&p, &Echelon::new(1)).unwrap();
        assert_eq!(q.module.as_ref(), p.as_ref());
        let v = Arc::new(dual_immaculate_module(&c("1,2,2")));
        let soc = socle(&v);
        let sub = submodule_of_space(&v, soc.clone()).unwrap();
        assert_eq!(socle(&sub.module).dim(), soc.dim());
    }

    #[test]
    fn characters_add_up() {
        for n in 1..=5 {
            for alpha in Composition::all_of(n) {
                let p = Arc::new(projective_module_of(&alpha));
                assert_eq!(character_size(&composition_multiplicities(&p)), p.dim());
                let filtration = radical_filtration(&p);
                assert!(filtration.last().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn chi_isomorphisms_exist() {
        for s in ["1|1", "2,1|1", "1|2|1", "1|1|2,1,1", "2|1,1", "1|3,1"] {
            let map = chi_isomorphism(&g(s)).unwrap();
            assert!(map.is_injective() && map.is_surjective());
        }
    }

    #[test]
    fn json_dump_is_sorted() {
        let v = dual_immaculate_module(&c("1,2,2"));
        let j = v.to_json();
        assert_eq!(j["n"], 5);
        assert_eq!(j["basis"].as_array().unwrap().len(), 3);
        let triplets: Vec<(u64, u64, u64)> = j["actions"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| (t[0].as_u64().unwrap(), t[1].as_u64().unwrap(), t[2].as_u64().unwrap()))
            .collect();
        let mut sorted = triplets.clone();
        sorted.sort();
        assert_eq!(triplets, sorted);
    }
}
