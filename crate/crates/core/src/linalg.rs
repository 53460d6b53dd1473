//! Sparse exact linear algebra over arbitrary-precision rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Renders a rational as `p` or `p/q`.
pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec(Vec<(usize, Q)>);

impl SVec {
    pub fn new() -> Self {
        SVec(Vec::new())
    }

    pub fn unit(i: usize) -> Self {
        SVec(vec![(i, Q::one())])
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, x) in pairs {
            *acc.entry(i).or_insert_with(Q::zero) += x;
        }
        SVec(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }

    pub fn from_dense(values: &[Q]) -> Self {
        SVec(values.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
    }

    pub fn entries(&self) -> &[(usize, Q)] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<(usize, Q)> {
        self.0
    }

    pub fn get(&self, i: usize) -> Option<&Q> {
        self.0.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &self.0[k].1)
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn lead(&self) -> Option<&(usize, Q)> {
        self.0.first()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Q) -> SVec {
        if c.is_zero() {
            return SVec::new();
        }
        SVec(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Q, other: &SVec) -> SVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SVec(out)
    }

    pub fn add(&self, other: &SVec) -> SVec {
        self.add_scaled(&Q::one(), other)
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        self.add_scaled(&-Q::one(), other)
    }

    /// Shifts every index by `offset`.
    pub fn dot(&self, other: &SVec) -> Q {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        let mut acc = Q::zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &a[i].1 * &b[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    pub fn shifted(&self, offset: usize) -> SVec {
        SVec(self.0.iter().map(|(i, x)| (i + offset, x.clone())).collect())
    }

    /// Keeps the entries with index in `lo..hi`, reindexed from zero.
    pub fn window(&self, lo: usize, hi: usize) -> SVec {
        SVec(self.0.iter().filter(|(i, _)| *i >= lo && *i < hi).map(|(i, x)| (i - lo, x.clone())).collect())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); dim];
        for (i, x) in &self.0 {
            out[*i] = x.clone();
        }
        out
    }
}

impl fmt::Display for SVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, x)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", i, q_to_string(x))?;
        }
        write!(f, "]")
    }
}

/// Sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: Vec<SVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols: vec![SVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: n, cols: (0..n).map(SVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<SVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.entries().last().is_none_or(|(i, _)| *i < rows)));
        Matrix { rows, cols }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: &[(usize, usize, Q)]) -> Self {
        let mut per_col: Vec<Vec<(usize, Q)>> = vec![Vec::new(); cols];
        for (r, c, x) in triplets {
            per_col[*c].push((*r, x.clone()));
        }
        Matrix { rows, cols: per_col.into_iter().map(SVec::from_pairs).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SVec] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Q {
        self.cols[j].coeff(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SVec::is_zero)
    }

    pub fn mul_vec(&self, v: &SVec) -> SVec {
        match v.nnz() {
            0 => SVec::new(),
            1 => {
                let (j, x) = &v.entries()[0];
                self.cols[*j].scale(x)
            }
            _ => SVec::from_pairs(
                v.entries().iter().flat_map(|(j, x)| self.cols[*j].entries().iter().map(move |(i, y)| (*i, x * y))),
            ),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch in product");
        Matrix { rows: self.rows, cols: other.cols.iter().map(|c| self.mul_vec(c)).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut per_row: Vec<Vec<(usize, Q)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.entries() {
                per_row[*i].push((j, x.clone()));
            }
        }
        Matrix { rows: self.cols.len(), cols: per_row.into_iter().map(SVec).collect() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()));
        Matrix { rows: self.rows, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    /// `self - c·I` for a square matrix.
    pub fn minus_scalar(&self, c: &Q) -> Matrix {
        assert_eq!(self.rows, self.ncols());
        let cols = self.cols.iter().enumerate().map(|(j, v)| v.add_scaled(&-c.clone(), &SVec::unit(j))).collect();
        Matrix { rows: self.rows, cols }
    }

    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut cols = Vec::new();
        let mut offset = 0;
        for b in blocks {
            cols.extend(b.cols.iter().map(|c| c.shifted(offset)));
            offset += b.rows;
        }
        Matrix { rows, cols }
    }

    /// Places the given blocks one above another (same column count).
    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let ncols = blocks.first().map_or(0, Matrix::ncols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut cols = vec![SVec::new(); ncols];
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.ncols(), ncols);
            for (j, c) in b.cols.iter().enumerate() {
                cols[j] = cols[j].add(&c.shifted(offset));
            }
            offset += b.rows;
        }
        Matrix { rows, cols }
    }

    /// Places the given blocks side by side (same row count).
    pub fn hstack(rows: usize, blocks: &[Matrix]) -> Matrix {
        let mut cols = Vec::new();
        for b in blocks {
            assert_eq!(b.rows, rows);
            cols.extend(b.cols.iter().cloned());
        }
        Matrix { rows, cols }
    }

    /// Nonzero entries as `(row, col, value)`, sorted by row then column.
    pub fn triplets(&self) -> Vec<(usize, usize, Q)> {
        let mut out: Vec<(usize, usize, Q)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.entries().iter().map(move |(i, x)| (*i, j, x.clone())))
            .collect();
        out.sort_by_key(|a| (a.0, a.1));
        out
    }

    /// True when every column is zero or a standard basis vector.
    pub fn is_monomial_01(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero() || (c.nnz() == 1 && c.entries()[0].1.is_one()))
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.rows);
        for c in &self.cols {
            e.insert(c.clone());
        }
        e.dim()
    }

    /// Canonical basis of the column space.
    pub fn image(&self) -> Echelon {
        Echelon::spanned_by(self.rows, self.cols.iter().cloned())
    }

    /// Canonical (reduced echelon) basis of the null space.
    pub fn kernel(&self) -> Echelon {
        kernel_of_columns(self.ncols(), &self.cols)
    }
}

/// Subspace of `Q^dim` held in reduced row echelon form (rows keyed by pivot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    dim: usize,
    rows: BTreeMap<usize, SVec>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: BTreeMap::new() }
    }

    pub fn spanned_by<I: IntoIterator<Item = SVec>>(dim: usize, vs: I) -> Self {
        let mut e = Echelon::new(dim);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn full(dim: usize) -> Self {
        Echelon::spanned_by(dim, (0..dim).map(SVec::unit))
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn basis(&self) -> Vec<SVec> {
        self.rows.values().cloned().collect()
    }

    pub fn basis_ref(&self) -> impl Iterator<Item = &SVec> {
        self.rows.values()
    }

    pub fn reduce(&self, v: &SVec) -> SVec {
        let hits: Vec<(usize, Q)> = v.entries().iter().filter(|(i, _)| self.rows.contains_key(i)).cloned().collect();
        let mut out = v.clone();
        for (p, c) in hits {
            out = out.add_scaled(&-c, &self.rows[&p]);
        }
        out
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns the new pivot if the dimension grew.
    pub fn insert(&mut self, v: SVec) -> Option<usize> {
        let w = self.reduce(&v);
        let (p, c) = w.lead()?.clone();
        let w = w.scale(&c.recip());
        let touched: Vec<usize> = self.rows.iter().filter(|(_, r)| r.get(p).is_some()).map(|(k, _)| *k).collect();
        for k in touched {
            let r = &self.rows[&k];
            let f = r.coeff(p);
            let nr = r.add_scaled(&-f, &w);
            self.rows.insert(k, nr);
        }
        self.rows.insert(p, w);
        Some(p)
    }

    /// Coordinates of `v` in the echelon basis (in pivot order), if `v` lies in the span.
    pub fn coordinates(&self, v: &SVec) -> Option<SVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SVec::from_pairs(self.rows.keys().enumerate().filter_map(|(k, p)| v.get(*p).map(|x| (k, x.clone())))))
    }

    pub fn contains_space(&self, other: &Echelon) -> bool {
        other.basis_ref().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Echelon) -> Echelon {
        let mut e = self.clone();
        for v in other.basis_ref() {
            e.insert(v.clone());
        }
        e
    }

    pub fn intersect(&self, other: &Echelon) -> Echelon {
        // x = Σ a_k u_k = Σ b_l w_l ; solve on the stacked basis.
        let a = self.basis();
        let b = other.basis();
        let cols: Vec<SVec> = a.iter().cloned().chain(b.iter().map(|w| w.scale(&-Q::one()))).collect();
        let ker = kernel_of_columns(cols.len(), &cols);
        Echelon::spanned_by(
            self.dim,
            ker.basis_ref().map(|k| {
                let mut acc = SVec::new();
                for (i, x) in k.entries() {
                    if *i < a.len() {
                        acc = acc.add_scaled(x, &a[*i]);
                    }
                }
                acc
            }),
        )
    }

    /// Vectors `x` with `f·x = 0` for every basis row `f` of `self`.
    pub fn annihilator(&self) -> Echelon {
        let rows = self.basis();
        let t = Matrix::from_columns(self.dim, rows).transpose();
        t.kernel()
    }
}

/// A growing family of independent vectors `b_0, b_1, …` that can express
/// any vector of their span as a combination of them.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    count: usize,
    rows: BTreeMap<usize, (SVec, SVec)>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span { dim, count: 0, rows: BTreeMap::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    fn reduce_tracked(&self, v: &SVec) -> (SVec, SVec) {
        let mut v = v.clone();
        let mut t = SVec::new();
        while let Some((p, c)) = v.entries().iter().find(|(i, _)| self.rows.contains_key(i)).cloned() {
            let (r, tr) = &self.rows[&p];
            v = v.add_scaled(&-c.clone(), r);
            t = t.add_scaled(&c, tr);
        }
        (v, t)
    }

    /// Appends `v` if it is independent of the family; returns its index.
    pub fn push(&mut self, v: &SVec) -> Option<usize> {
        let (res, t) = self.reduce_tracked(v);
        let (p, c) = res.lead()?.clone();
        let inv = c.recip();
        let idx = self.count;
        let comb = SVec::unit(idx).sub(&t).scale(&inv);
        self.rows.insert(p, (res.scale(&inv), comb));
        self.count += 1;
        Some(idx)
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce_tracked(v).0.is_zero()
    }

    /// Coefficients `c` with `v = Σ c_k b_k`, if `v` lies in the span.
    pub fn express(&self, v: &SVec) -> Option<SVec> {
        let (res, t) = self.reduce_tracked(v);
        res.is_zero().then_some(t)
    }
}

/// Canonical null space of the map sending unit vector `j` to `cols[j]`.
pub fn kernel_of_columns(ncols: usize, cols: &[SVec]) -> Echelon {
    let mut rows: BTreeMap<usize, (SVec, SVec)> = BTreeMap::new();
    let mut ker = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        let mut v = col.clone();
        let mut t = SVec::unit(j);
        loop {
            let Some((p, c)) = v.lead().cloned() else {
                ker.push(t);
                break;
            };
            if let Some((r, tr)) = rows.get(&p) {
                let f = -c;
                v = v.add_scaled(&f, r);
                t = t.add_scaled(&f, tr);
            } else {
                let inv = c.recip();
                rows.insert(p, (v.scale(&inv), t.scale(&inv)));
                break;
            }
        }
    }
    Echelon::spanned_by(ncols, ker)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_expresses_combinations() {
        let b0 = SVec::from_dense(&[q(1), q(2), q(0)]);
        let b1 = SVec::from_dense(&[q(0), q(1), q(1)]);
        let mut s = Span::new(3);
        assert_eq!(s.push(&b0), Some(0));
        assert_eq!(s.push(&b1), Some(1));
        assert_eq!(s.push(&b0.add(&b1)), None);
        let v = b0.scale(&q(3)).sub(&b1.scale(&q(5)));
        assert_eq!(s.express(&v), Some(SVec::from_dense(&[q(3), q(-5)])));
        assert!(s.express(&SVec::unit(2)).is_none());
    }

    fn v(xs: &[i64]) -> SVec {
        SVec::from_dense(&xs.iter().map(|x| q(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn add_scaled_cancels() {
        let a = v(&[1, 2, 0, 3]);
        let b = v(&[0, 1, 5, 0]);
        assert_eq!(a.add_scaled(&q(-2), &b), v(&[1, 0, -10, 3]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn echelon_is_canonical() {
        let e1 = Echelon::spanned_by(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let e2 = Echelon::spanned_by(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(e1, e2);
        assert_eq!(e1.dim(), 2);
        assert!(e1.contains(&v(&[2, 3, 1])));
        assert!(!e1.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn kernel_rank_nullity() {
        let m = Matrix::from_columns(2, vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1]), v(&[2, 0])]);
        let k = m.kernel();
        assert_eq!(k.dim() + m.rank(), 4);
        for x in k.basis() {
            assert!(m.mul_vec(&x).is_zero());
        }
    }

    #[test]
    fn intersection_and_annihilator() {
        let a = Echelon::spanned_by(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Echelon::spanned_by(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Echelon::spanned_by(3, vec![v(&[0, 1, 0])]));
        assert_eq!(a.annihilator(), Echelon::spanned_by(3, vec![v(&[0, 0, 1])]));
    }

    #[test]
    fn transpose_and_product() {
        let m = Matrix::from_triplets(2, 3, &[(0, 0, q(1)), (1, 2, q(3)), (0, 1, q(2))]);
        let t = m.transpose();
        assert_eq!(t.nrows(), 3);
        assert_eq!(t.entry(2, 1), q(3));
        let p = m.mul(&t);
        assert_eq!(p.entry(0, 0), q(5));
        assert_eq!(p.entry(1, 1), q(9));
    }
}
