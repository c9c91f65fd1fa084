//! Prime fields and sparse linear algebra over them.
//!
//! Elimination processes columns in a fixed order (label order unless a
//! permutation is supplied) and sets free variables to zero, so every
//! preimage returned here is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

pub type Scalar = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const F2: PrimeField = PrimeField { p: 2 };
    pub const F3: PrimeField = PrimeField { p: 3 };

    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn reduce(self, x: i64) -> Scalar {
        x.rem_euclid(self.p as i64) as Scalar
    }

    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 + b as u64) % self.p as u64) as Scalar
    }

    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as Scalar
    }

    pub fn neg(self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: Scalar) -> Option<Scalar> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    /// `(-1)^k` as a field element.
    pub fn sign(self, k: i64) -> Scalar {
        if k.rem_euclid(2) == 1 {
            self.p - 1
        } else {
            1
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// Sorted `(position, value)` pairs with no zero values.
pub(crate) type Entries = Vec<(usize, Scalar)>;

/// `x + c*y` on sorted sparse entry lists.
pub(crate) fn axpy(field: PrimeField, x: &[(usize, Scalar)], c: Scalar, y: &[(usize, Scalar)]) -> Entries {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i]);
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = field.mul(c, y[j].1);
            if v != 0 {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(x[i].1, field.mul(c, y[j].1));
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale(field: PrimeField, x: &mut Entries, c: Scalar) {
    for e in x.iter_mut() {
        e.1 = field.mul(e.1, c);
    }
    x.retain(|e| e.1 != 0);
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseVector<L: Ord> {
    entries: BTreeMap<L, Scalar>,
}

impl<L: Ord> Default for SparseVector<L> {
    fn default() -> Self {
        SparseVector { entries: BTreeMap::new() }
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for SparseVector<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl<L: Ord + Clone> SparseVector<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(label: L) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(label, 1);
        SparseVector { entries }
    }

    /// Accumulates integer coefficients, reducing mod p.
    pub fn from_pairs<I: IntoIterator<Item = (L, i64)>>(field: PrimeField, pairs: I) -> Self {
        let mut v = Self::new();
        for (l, c) in pairs {
            v.add_term(field, l, field.reduce(c));
        }
        v
    }

    pub fn get(&self, label: &L) -> Scalar {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, field: PrimeField, label: L, c: Scalar) {
        if c == 0 {
            return;
        }
        let slot = self.entries.entry(label.clone()).or_insert(0);
        *slot = field.add(*slot, c);
        if *slot == 0 {
            self.entries.remove(&label);
        }
    }

    pub fn add_scaled(&mut self, field: PrimeField, c: Scalar, other: &Self) {
        for (l, &v) in &other.entries {
            self.add_term(field, l.clone(), field.mul(c, v));
        }
    }

    pub fn scaled(&self, field: PrimeField, c: Scalar) -> Self {
        let mut out = Self::new();
        out.add_scaled(field, c, self);
        out
    }

    pub fn sum(&self, field: PrimeField, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(field, 1, other);
        out
    }

    pub fn difference(&self, field: PrimeField, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(field, field.neg(1), other);
        out
    }

    pub fn dot(&self, field: PrimeField, other: &Self) -> Scalar {
        let mut acc = 0;
        for (l, &v) in &self.entries {
            acc = field.add(acc, field.mul(v, other.get(l)));
        }
        acc
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, Scalar)> {
        self.entries.iter().map(|(l, &v)| (l, v))
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn map_labels<M: Ord + Clone, F: Fn(&L) -> M>(&self, field: PrimeField, f: F) -> SparseVector<M> {
        let mut out = SparseVector::new();
        for (l, &v) in &self.entries {
            out.add_term(field, f(l), v);
        }
        out
    }
}

impl<L: Ord + Clone> FromIterator<(L, Scalar)> for SparseVector<L> {
    /// Collects pairs that are already nonzero and distinct.
    fn from_iter<I: IntoIterator<Item = (L, Scalar)>>(iter: I) -> Self {
        SparseVector { entries: iter.into_iter().filter(|(_, v)| *v != 0).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("label {0} is not part of the basis")]
    UnknownLabel(String),
    #[error("composite of the two differentials is nonzero")]
    NotAComplex,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Inconsistent system: `certificate · A = 0` but `certificate · b != 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct NoSolution<R: Ord> {
    pub certificate: SparseVector<R>,
}

impl<R: Ord + fmt::Debug> fmt::Debug for NoSolution<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NoSolution").field("certificate", &self.certificate).finish()
    }
}

impl<R: Ord + fmt::Debug> fmt::Display for NoSolution<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "linear system has no solution")
    }
}

impl<R: Ord + fmt::Debug> std::error::Error for NoSolution<R> {}

/// Column processing order for elimination.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum PivotOrder {
    #[default]
    Label,
    /// A permutation of column positions, highest priority first.
    Custom(Vec<usize>),
}

impl PivotOrder {
    pub fn shuffled<G: Rng>(ncols: usize, rng: &mut G) -> Self {
        let mut order: Vec<usize> = (0..ncols).collect();
        order.shuffle(rng);
        PivotOrder::Custom(order)
    }

    fn positions(&self, ncols: usize) -> Vec<usize> {
        match self {
            PivotOrder::Label => (0..ncols).collect(),
            PivotOrder::Custom(order) => {
                assert_eq!(order.len(), ncols, "pivot order must permute all columns");
                order.clone()
            }
        }
    }
}

/// Column-major sparse matrix with sorted, deduplicated row and column labels.
#[derive(Clone)]
pub struct SparseMatrix<R: Ord, C: Ord> {
    field: PrimeField,
    rows: Vec<R>,
    cols: Vec<C>,
    row_pos: BTreeMap<R, usize>,
    col_pos: BTreeMap<C, usize>,
    columns: Vec<Entries>,
}

impl<R: Ord + Clone + fmt::Debug, C: Ord + Clone + fmt::Debug> fmt::Debug for SparseMatrix<R, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.entry(&(&self.rows[i], &self.cols[j]), &v);
            }
        }
        m.finish()
    }
}

impl<R: Ord + Clone, C: Ord + Clone> SparseMatrix<R, C> {
    pub fn new(field: PrimeField, rows: Vec<R>, cols: Vec<C>) -> Self {
        let mut rows = rows;
        rows.sort();
        rows.dedup();
        let mut cols = cols;
        cols.sort();
        cols.dedup();
        let row_pos = rows.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let col_pos = cols.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let columns = vec![Vec::new(); cols.len()];
        SparseMatrix { field, rows, cols, row_pos, col_pos, columns }
    }

    pub fn from_dense(field: PrimeField, rows: &[Vec<i64>]) -> SparseMatrix<usize, usize> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::new(field, (0..nrows).collect(), (0..ncols).collect());
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.add_entry(&i, &j, field.reduce(v));
            }
        }
        m
    }

    pub fn identity(field: PrimeField, labels: Vec<R>) -> SparseMatrix<R, R> {
        let mut m = SparseMatrix::new(field, labels.clone(), labels.clone());
        for l in &labels {
            m.add_entry(l, l, 1);
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> &[R] {
        &self.rows
    }

    pub fn cols(&self) -> &[C] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Adds `value` to the entry at `(row, col)`. Panics on unknown labels.
    pub fn add_entry(&mut self, row: &R, col: &C, value: Scalar) {
        let i = self.row_pos[row];
        let j = self.col_pos[col];
        let updated = axpy(self.field, &self.columns[j], value, &[(i, 1)]);
        self.columns[j] = updated;
    }

    /// Replaces a column by the given vector.
    pub fn set_column(&mut self, col: &C, v: &SparseVector<R>) -> Result<(), LinAlgError>
    where
        R: fmt::Debug,
    {
        let j = self.col_pos[col];
        let mut entries = Vec::with_capacity(v.len());
        for (l, c) in v.iter() {
            let i = *self
                .row_pos
                .get(l)
                .ok_or_else(|| LinAlgError::UnknownLabel(format!("{l:?}")))?;
            entries.push((i, c));
        }
        entries.sort();
        self.columns[j] = entries;
        Ok(())
    }

    pub fn entry(&self, row: &R, col: &C) -> Scalar {
        let (Some(&i), Some(&j)) = (self.row_pos.get(row), self.col_pos.get(col)) else {
            return 0;
        };
        self.columns[j].iter().find(|e| e.0 == i).map_or(0, |e| e.1)
    }

    pub fn column(&self, col: &C) -> SparseVector<R> {
        match self.col_pos.get(col) {
            Some(&j) => self.columns[j].iter().map(|&(i, v)| (self.rows[i].clone(), v)).collect(),
            None => SparseVector::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn mul_vector(&self, x: &SparseVector<C>) -> Result<SparseVector<R>, LinAlgError>
    where
        C: fmt::Debug,
    {
        let mut acc: Entries = Vec::new();
        for (l, c) in x.iter() {
            let j = *self
                .col_pos
                .get(l)
                .ok_or_else(|| LinAlgError::UnknownLabel(format!("{l:?}")))?;
            acc = axpy(self.field, &acc, c, &self.columns[j]);
        }
        Ok(acc.into_iter().map(|(i, v)| (self.rows[i].clone(), v)).collect())
    }

    /// `self ∘ inner`; the row labels of `inner` must equal the column labels of `self`.
    pub fn compose<D: Ord + Clone>(&self, inner: &SparseMatrix<C, D>) -> Result<SparseMatrix<R, D>, LinAlgError> {
        if inner.rows != self.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "inner matrix has {} rows, outer has {} columns",
                inner.nrows(),
                self.ncols()
            )));
        }
        let mut out = SparseMatrix::new(self.field, self.rows.clone(), inner.cols.clone());
        for (j, col) in inner.columns.iter().enumerate() {
            let mut acc: Entries = Vec::new();
            for &(k, c) in col {
                acc = axpy(self.field, &acc, c, &self.columns[k]);
            }
            out.columns[j] = acc;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> SparseMatrix<C, R> {
        let mut out = SparseMatrix::new(self.field, self.cols.clone(), self.rows.clone());
        let mut rows: Vec<Entries> = vec![Vec::new(); self.rows.len()];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                rows[i].push((j, v));
            }
        }
        out.columns = rows;
        out
    }

    pub fn factor(&self, order: &PivotOrder) -> Elimination<R, C> {
        Elimination::new(self, order)
    }

    pub fn solve_preimage(&self, b: &SparseVector<R>) -> Result<SparseVector<C>, NoSolution<R>>
    where
        R: fmt::Debug,
    {
        self.factor(&PivotOrder::Label).solve(b)
    }

    pub fn kernel_basis(&self) -> Vec<SparseVector<C>> {
        self.factor(&PivotOrder::Label).kernel_basis()
    }

    pub fn rank(&self) -> usize {
        self.factor(&PivotOrder::Label).rank()
    }
}

struct Pivot {
    col: usize,
    reduced: Entries,
    combo: Entries,
}

/// Column-echelon reduction of a matrix, reusable for many right-hand sides.
pub struct Elimination<R: Ord, C: Ord> {
    matrix: SparseMatrix<R, C>,
    pivot_of_row: Vec<Option<usize>>,
    pivots: Vec<Pivot>,
    kernel: Vec<Entries>,
}

impl<R: Ord + Clone, C: Ord + Clone> Elimination<R, C> {
    fn new(m: &SparseMatrix<R, C>, order: &PivotOrder) -> Self {
        let field = m.field;
        let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.nrows()];
        let mut pivots: Vec<Pivot> = Vec::new();
        let mut kernel = Vec::new();
        for j in order.positions(m.ncols()) {
            let mut v = m.columns[j].clone();
            let mut combo: Entries = vec![(j, 1)];
            loop {
                let Some(&(r, a)) = v.first() else {
                    kernel.push(combo);
                    break;
                };
                match pivot_of_row[r] {
                    Some(k) => {
                        let c = field.neg(a);
                        v = axpy(field, &v, c, &pivots[k].reduced);
                        combo = axpy(field, &combo, c, &pivots[k].combo);
                    }
                    None => {
                        let inv = field.inv(a).expect("nonzero entry");
                        scale(field, &mut v, inv);
                        scale(field, &mut combo, inv);
                        pivot_of_row[r] = Some(pivots.len());
                        pivots.push(Pivot { col: j, reduced: v, combo });
                        break;
                    }
                }
            }
        }
        Elimination { matrix: m.clone(), pivot_of_row, pivots, kernel }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<C> {
        let mut cols: Vec<C> = self.pivots.iter().map(|p| self.matrix.cols[p.col].clone()).collect();
        cols.sort();
        cols
    }

    pub fn kernel_basis(&self) -> Vec<SparseVector<C>> {
        self.kernel
            .iter()
            .map(|k| k.iter().map(|&(j, v)| (self.matrix.cols[j].clone(), v)).collect())
            .collect()
    }

    /// The unique solution supported on pivot columns.
    pub fn solve(&self, b: &SparseVector<R>) -> Result<SparseVector<C>, NoSolution<R>>
    where
        R: fmt::Debug,
    {
        let field = self.matrix.field;
        let mut v: Entries = Vec::with_capacity(b.len());
        for (l, c) in b.iter() {
            match self.matrix.row_pos.get(l) {
                Some(&i) => v.push((i, c)),
                None => {
                    return Err(NoSolution { certificate: SparseVector::unit(l.clone()) });
                }
            }
        }
        v.sort();
        let mut x: Entries = Vec::new();
        while let Some(&(r, a)) = v.first() {
            match self.pivot_of_row[r] {
                Some(k) => {
                    v = axpy(field, &v, field.neg(a), &self.pivots[k].reduced);
                    x = axpy(field, &x, a, &self.pivots[k].combo);
                }
                None => return Err(NoSolution { certificate: self.certificate(b) }),
            }
        }
        Ok(x.into_iter().map(|(j, c)| (self.matrix.cols[j].clone(), c)).collect())
    }

    /// Splits `b = A·x + w` with `w` supported on non-pivot rows; returns `(x, w)`.
    /// Linear in `b`, and `w = 0` exactly when `b` lies in the image.
    pub fn split(&self, b: &SparseVector<R>) -> Result<(SparseVector<C>, SparseVector<R>), LinAlgError>
    where
        R: fmt::Debug,
    {
        let field = self.matrix.field;
        let mut v: Entries = Vec::with_capacity(b.len());
        for (l, c) in b.iter() {
            let &i = self.matrix.row_pos.get(l).ok_or_else(|| LinAlgError::UnknownLabel(format!("{l:?}")))?;
            v.push((i, c));
        }
        v.sort();
        let mut x: Entries = Vec::new();
        let mut rest: Entries = Vec::new();
        while let Some(&(r, a)) = v.first() {
            match self.pivot_of_row[r] {
                Some(k) => {
                    v = axpy(field, &v, field.neg(a), &self.pivots[k].reduced);
                    x = axpy(field, &x, a, &self.pivots[k].combo);
                }
                None => {
                    rest.push((r, a));
                    v.remove(0);
                }
            }
        }
        let x = x.into_iter().map(|(j, c)| (self.matrix.cols[j].clone(), c)).collect();
        let rest = rest.into_iter().map(|(i, c)| (self.matrix.rows[i].clone(), c)).collect();
        Ok((x, rest))
    }

    fn certificate(&self, b: &SparseVector<R>) -> SparseVector<R> {
        let left = self.matrix.transpose().factor(&PivotOrder::Label).kernel_basis();
        left.into_iter()
            .find(|y| y.dot(self.matrix.field, b) != 0)
            .expect("an inconsistent system has a separating left-kernel vector")
    }
}

/// `dim ker(d_out) - rank(d_in)` at the middle space.
pub fn homology_dimension<A, B, C>(d_in: &SparseMatrix<B, A>, d_out: &SparseMatrix<C, B>) -> Result<usize, LinAlgError>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
{
    let composite = d_out.compose(d_in)?;
    if !composite.is_zero() {
        return Err(LinAlgError::NotAComplex);
    }
    Ok(d_out.ncols() - d_out.rank() - d_in.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.reduce(-1), 6);
        assert_eq!(f.sign(3), 6);
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn identity_solve() {
        let f = PrimeField::F2;
        let a = SparseMatrix::<usize, usize>::identity(f, vec![0, 1, 2]);
        let b = SparseVector::unit(2usize);
        assert_eq!(a.solve_preimage(&b).unwrap(), SparseVector::unit(2));
    }

    #[test]
    fn free_variables_are_zero() {
        let a = SparseMatrix::<usize, usize>::from_dense(PrimeField::F2, &[vec![1, 1], vec![0, 0]]);
        let x = a.solve_preimage(&SparseVector::unit(0)).unwrap();
        assert_eq!(x, SparseVector::unit(0));

        let f3 = PrimeField::F3;
        let a = SparseMatrix::<usize, usize>::from_dense(f3, &[vec![1, 1]]);
        let x = a.solve_preimage(&SparseVector::from_pairs(f3, [(0, 2)])).unwrap();
        assert_eq!(x, SparseVector::from_pairs(f3, [(0, 2)]));
    }

    #[test]
    fn inconsistent_system_has_certificate() {
        let f = PrimeField::F3;
        // second row is twice the first over F3
        let a = SparseMatrix::<usize, usize>::from_dense(f, &[vec![1, 2], vec![2, 1]]);
        let b = SparseVector::from_pairs(f, [(0, 1)]);
        let err = a.solve_preimage(&b).unwrap_err();
        let y = err.certificate;
        assert_ne!(y.dot(f, &b), 0);
        assert!(a.transpose().mul_vector(&y).unwrap().is_empty());
    }

    #[test]
    fn kernels() {
        let f = PrimeField::F2;
        let zero = SparseMatrix::<usize, usize>::new(f, vec![0, 1], vec![0, 1]);
        assert_eq!(zero.kernel_basis().len(), 2);
        let id = SparseMatrix::<usize, usize>::identity(f, vec![0, 1, 2]);
        assert!(id.kernel_basis().is_empty());
        let a = SparseMatrix::<usize, usize>::from_dense(f, &[vec![1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k, vec![SparseVector::from_pairs(f, [(0, 1), (1, 1)])]);
    }

    #[test]
    fn homology_of_small_complexes() {
        let f = PrimeField::F2;
        let zero = SparseMatrix::<usize, usize>::new(f, vec![0], vec![0]);
        assert_eq!(homology_dimension(&zero, &zero).unwrap(), 1);
        let id = SparseMatrix::<usize, usize>::identity(f, vec![0]);
        assert_eq!(homology_dimension(&id, &zero).unwrap(), 0);
        assert_eq!(homology_dimension(&id, &id), Err(LinAlgError::NotAComplex));
    }

    #[test]
    fn custom_pivot_order_changes_preimage() {
        let a = SparseMatrix::<usize, usize>::from_dense(PrimeField::F2, &[vec![1, 1]]);
        let e = a.factor(&PivotOrder::Custom(vec![1, 0]));
        assert_eq!(e.solve(&SparseVector::unit(0)).unwrap(), SparseVector::unit(1));
        assert_eq!(e.pivot_columns(), vec![1]);
    }
}
