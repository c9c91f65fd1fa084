//! Reduced normalized chains and cochains, and the interval-cut action of
//! surjections on cochains.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::falg::{PrimeField, Scalar, SparseMatrix, SparseVector};
use crate::operads::Surjection;
use crate::simp::{SimpError, SimplexId, SimplexRef, SimplicialMap, SimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },
    #[error("arity mismatch: surjection of arity {expected} applied to {found} cochains")]
    ArityMismatch { expected: usize, found: usize },
    #[error("not a homology {0}-sphere")]
    NotASphere(usize),
    #[error("{0} is not a reduced cell")]
    UnknownCell(String),
    #[error(transparent)]
    Simp(#[from] SimpError),
}

/// Indices of the nondegenerate `q`-simplices that are basis elements of the
/// reduced normalized chains.
pub fn cells(x: &SimplicialSet, q: usize) -> Vec<usize> {
    (0..x.count(q)).filter(|&i| !(q == 0 && i == x.basepoint().index)).collect()
}

pub fn is_cell(x: &SimplicialSet, id: SimplexId) -> bool {
    x.contains(id) && !x.is_basepoint(id)
}

/// A reduced normalized chain of a fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Chain {
    pub dim: usize,
    pub coeffs: SparseVector<usize>,
}

/// A reduced normalized cochain on `dim`-simplices, of degree `-dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Cochain {
    pub dim: usize,
    pub coeffs: SparseVector<usize>,
}

impl Chain {
    pub fn new(dim: usize, coeffs: SparseVector<usize>) -> Self {
        Chain { dim, coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Chain { dim, coeffs: SparseVector::new() }
    }

    pub fn basis(id: SimplexId) -> Self {
        Chain { dim: id.dim, coeffs: SparseVector::unit(id.index) }
    }

    pub fn degree(&self) -> i64 {
        self.dim as i64
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Cochain {
    pub fn new(dim: usize, coeffs: SparseVector<usize>) -> Self {
        Cochain { dim, coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Cochain { dim, coeffs: SparseVector::new() }
    }

    pub fn indicator(id: SimplexId) -> Self {
        Cochain { dim: id.dim, coeffs: SparseVector::unit(id.index) }
    }

    pub fn degree(&self) -> i64 {
        -(self.dim as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, index: usize) -> Scalar {
        self.coeffs.get(&index)
    }

    pub fn sum(&self, field: PrimeField, other: &Cochain) -> Cochain {
        assert_eq!(self.dim, other.dim);
        Cochain { dim: self.dim, coeffs: self.coeffs.sum(field, &other.coeffs) }
    }

    pub fn scaled(&self, field: PrimeField, c: Scalar) -> Cochain {
        Cochain { dim: self.dim, coeffs: self.coeffs.scaled(field, c) }
    }
}

/// `∂_q`, with rows the reduced `(q-1)`-cells and columns the `q`-cells.
pub fn boundary_matrix(x: &SimplicialSet, q: usize, field: PrimeField) -> SparseMatrix<usize, usize> {
    assert!(q >= 1);
    let mut m = SparseMatrix::new(field, cells(x, q - 1), cells(x, q));
    for j in cells(x, q) {
        let col = boundary(x, field, &Chain::basis(SimplexId::new(q, j)));
        m.set_column(&j, &col.coeffs).expect("faces are cells");
    }
    m
}

/// `δ_q`, with rows the `(q+1)`-cells and columns the `q`-cells.
pub fn coboundary_matrix(x: &SimplicialSet, q: usize, field: PrimeField) -> SparseMatrix<usize, usize> {
    if q < x.dim() {
        boundary_matrix(x, q + 1, field).transpose()
    } else {
        SparseMatrix::new(field, Vec::new(), cells(x, q))
    }
}

pub fn boundary(x: &SimplicialSet, field: PrimeField, c: &Chain) -> Chain {
    let mut out = SparseVector::new();
    if c.dim == 0 {
        return Chain::zero(0);
    }
    for (&i, a) in c.coeffs.iter() {
        let s = SimplexRef::nondegenerate(SimplexId::new(c.dim, i));
        for k in 0..=c.dim {
            let f = x.face(&s, k);
            if !f.is_degenerate() && !x.is_basepoint(f.base) {
                out.add_term(field, f.base.index, field.mul(a, field.sign(k as i64)));
            }
        }
    }
    Chain { dim: c.dim - 1, coeffs: out }
}

/// `δφ = φ ∘ ∂`.
pub fn coboundary(x: &SimplicialSet, field: PrimeField, phi: &Cochain) -> Cochain {
    let q = phi.dim + 1;
    let mut out = SparseVector::new();
    if phi.is_zero() {
        return Cochain::zero(q);
    }
    for z in cells(x, q) {
        let s = SimplexRef::nondegenerate(SimplexId::new(q, z));
        let mut v = 0;
        for k in 0..=q {
            let f = x.face(&s, k);
            if !f.is_degenerate() {
                v = field.add(v, field.mul(phi.get(f.base.index), field.sign(k as i64)));
            }
        }
        out.add_term(field, z, v);
    }
    Cochain { dim: q, coeffs: out }
}

/// Reduced Betti numbers over `field` in degrees `0..=dim X`.
pub fn reduced_homology(x: &SimplicialSet, field: PrimeField) -> Vec<usize> {
    let top = x.dim();
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|q| if q == 0 || q > top { 0 } else { boundary_matrix(x, q, field).rank() })
        .collect();
    (0..=top).map(|q| cells(x, q).len() - ranks[q] - ranks[q + 1]).collect()
}

/// A cycle generating `H_m`, scaled so its first nonzero coefficient is 1.
pub fn fundamental_class(x: &SimplicialSet, m: usize, field: PrimeField) -> Result<Chain, ChainError> {
    if !crate::simp::verify_homology_sphere(x, m, field) {
        return Err(ChainError::NotASphere(m));
    }
    let kernel = boundary_matrix(x, m, field).kernel_basis();
    let cycle = if m < x.dim() {
        let image = boundary_matrix(x, m + 1, field);
        let rank = image.rank();
        kernel
            .into_iter()
            .find(|k| {
                let mut cols = image.cols().to_vec();
                cols.push(usize::MAX);
                let mut aug = SparseMatrix::new(field, image.rows().to_vec(), cols);
                for c in image.cols() {
                    aug.set_column(c, &image.column(c)).expect("same rows");
                }
                aug.set_column(&usize::MAX, k).expect("cycle lives on m-cells");
                aug.rank() > rank
            })
            .ok_or(ChainError::NotASphere(m))?
    } else {
        kernel.into_iter().next().ok_or(ChainError::NotASphere(m))?
    };
    let (_, lead) = cycle.iter().next().expect("nonzero cycle");
    let inv = field.inv(lead).expect("nonzero");
    Ok(Chain { dim: m, coeffs: cycle.scaled(field, inv) })
}

pub fn evaluate(field: PrimeField, phi: &Cochain, c: &Chain) -> Result<Scalar, ChainError> {
    if phi.dim != c.dim {
        return Err(ChainError::DegreeMismatch { expected: -(c.dim as i64), found: phi.degree() });
    }
    Ok(phi.coeffs.dot(field, &c.coeffs))
}

pub fn pullback(f: &SimplicialMap, field: PrimeField, phi: &Cochain) -> Cochain {
    let s = f.source();
    let mut out = SparseVector::new();
    for i in cells(s, phi.dim) {
        let y = f.image(SimplexId::new(phi.dim, i));
        if !y.is_degenerate() {
            out.add_term(field, i, phi.get(y.base.index));
        }
    }
    Cochain { dim: phi.dim, coeffs: out }
}

pub fn pushforward(f: &SimplicialMap, field: PrimeField, c: &Chain) -> Chain {
    let t = f.target();
    let mut out = SparseVector::new();
    for (&i, a) in c.coeffs.iter() {
        let y = f.image(SimplexId::new(c.dim, i));
        if !y.is_degenerate() && !t.is_basepoint(y.base) {
            out.add_term(field, y.base.index, a);
        }
    }
    Chain { dim: c.dim, coeffs: out }
}

/// One interval cut `0 = n_0 ≤ ... ≤ n_{r+d} = n` together with the vertex
/// sets `C_(1),...,C_(r)` it assigns and its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub points: Vec<usize>,
    pub pieces: Vec<Vec<usize>>,
    pub sign: i64,
}

/// Position sign times permutation sign of a cut.
pub fn cut_sign(u: &Surjection, points: &[usize]) -> i64 {
    let values = u.values();
    let finals = u.final_flags();
    let mut sign = 1;
    let mut degrees = Vec::with_capacity(values.len());
    for i in 0..values.len() {
        let (a, b) = (points[i], points[i + 1]);
        if finals[i] {
            degrees.push(b - a);
        } else {
            degrees.push(b - a + 1);
            if b % 2 == 1 {
                sign = -sign;
            }
        }
    }
    let mut items: Vec<(usize, usize)> = values.iter().copied().zip(degrees).collect();
    for i in 0..items.len() {
        for j in 0..items.len() - 1 - i {
            if items[j].0 > items[j + 1].0 {
                if items[j].1 % 2 == 1 && items[j + 1].1 % 2 == 1 {
                    sign = -sign;
                }
                items.swap(j, j + 1);
            }
        }
    }
    sign
}

/// All cuts of `[0,n]` for `u` whose pieces have no repeated vertex.
pub fn interval_cuts(u: &Surjection, n: usize) -> Vec<Cut> {
    let len = u.values().len();
    let mut out = Vec::new();
    let mut points = vec![0usize; len + 1];
    points[len] = n;
    fn rec(u: &Surjection, n: usize, k: usize, points: &mut Vec<usize>, out: &mut Vec<Cut>) {
        let len = u.values().len();
        if k == len {
            let mut pieces = vec![Vec::new(); u.arity()];
            for i in 0..len {
                let piece = &mut pieces[u.values()[i] - 1];
                for v in points[i]..=points[i + 1] {
                    if piece.last().is_some_and(|&l| l >= v) {
                        return;
                    }
                    piece.push(v);
                }
            }
            out.push(Cut { sign: cut_sign(u, points), points: points.clone(), pieces });
            return;
        }
        for p in points[k - 1]..=n {
            points[k] = p;
            rec(u, n, k + 1, points, out);
        }
    }
    rec(u, n, 1, &mut points, &mut out);
    out
}

/// `u(x)` as a signed sum of tensor words of nondegenerate simplices of `X`;
/// degenerate factors are dropped, basepoint vertices kept.
pub fn interval_cut_coproduct(x: &SimplicialSet, u: &Surjection, simplex: &SimplexRef) -> BTreeMap<Vec<SimplexId>, i64> {
    let mut out: BTreeMap<Vec<SimplexId>, i64> = BTreeMap::new();
    let mut faces: HashMap<Vec<usize>, SimplexRef> = HashMap::new();
    for cut in interval_cuts(u, simplex.dim()) {
        let mut word = Vec::with_capacity(cut.pieces.len());
        for piece in &cut.pieces {
            let f = faces.entry(piece.clone()).or_insert_with(|| x.subsimplex(simplex, piece));
            if f.is_degenerate() {
                break;
            }
            word.push(f.base);
        }
        if word.len() == cut.pieces.len() {
            let e = out.entry(word).or_insert(0);
            *e += cut.sign;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `u(φ_1,...,φ_r)`, of dimension `Σ dim φ_i - d`.
pub fn surjection_action(x: &SimplicialSet, field: PrimeField, u: &Surjection, phis: &[&Cochain]) -> Result<Cochain, ChainError> {
    if phis.len() != u.arity() {
        return Err(ChainError::ArityMismatch { expected: u.arity(), found: phis.len() });
    }
    let total: usize = phis.iter().map(|p| p.dim).sum();
    if total < u.degree() {
        return Err(ChainError::DegreeMismatch { expected: -(u.degree() as i64), found: -(total as i64) });
    }
    let n = total - u.degree();
    let mut out = SparseVector::new();
    if phis.iter().any(|p| p.is_zero()) {
        return Ok(Cochain::zero(n));
    }
    for z in cells(x, n) {
        let s = SimplexRef::nondegenerate(SimplexId::new(n, z));
        let mut v = 0;
        for (word, c) in interval_cut_coproduct(x, u, &s) {
            let mut prod = field.reduce(c);
            for (phi, id) in phis.iter().zip(&word) {
                if prod == 0 {
                    break;
                }
                prod = if id.dim == phi.dim { field.mul(prod, phi.get(id.index)) } else { 0 };
            }
            v = field.add(v, prod);
        }
        out.add_term(field, z, v);
    }
    Ok(Cochain { dim: n, coeffs: out })
}

/// Reverse index of `u(z)` over all cells `z`: tensor word of basis cells ↦ `[(z, coefficient)]`.
///
/// Evaluating `u` on basis cochains then costs one lookup.
#[derive(Debug, Clone)]
pub struct CoproductIndex {
    degree: usize,
    index: HashMap<Vec<SimplexId>, Vec<(usize, i64)>>,
}

impl CoproductIndex {
    pub fn new(x: &SimplicialSet, u: &Surjection) -> Self {
        let mut index: HashMap<Vec<SimplexId>, Vec<(usize, i64)>> = HashMap::new();
        for n in 0..=x.dim() {
            for z in cells(x, n) {
                let s = SimplexRef::nondegenerate(SimplexId::new(n, z));
                for (word, c) in interval_cut_coproduct(x, u, &s) {
                    if word.iter().all(|id| !x.is_basepoint(*id)) {
                        index.entry(word).or_default().push((z, c));
                    }
                }
            }
        }
        CoproductIndex { degree: u.degree(), index }
    }

    /// `u(e_{w_1},...,e_{w_r})` as `(dimension, [(cell, coefficient)])`, or
    /// `None` when the dimension would be negative.
    pub fn apply_basis(&self, word: &[SimplexId]) -> Option<(usize, &[(usize, i64)])> {
        let total: usize = word.iter().map(|id| id.dim).sum();
        let n = total.checked_sub(self.degree)?;
        Some((n, self.index.get(word).map_or(&[], |v| v.as_slice())))
    }
}

/// Outcome of one exhaustively checked surjection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCase {
    pub u: Surjection,
    pub passed: bool,
}

fn basis_words(x: &SimplicialSet, r: usize) -> Vec<Vec<SimplexId>> {
    let all: Vec<SimplexId> = (0..=x.dim()).flat_map(|q| cells(x, q).into_iter().map(move |i| SimplexId::new(q, i))).collect();
    let mut words = vec![Vec::new()];
    for _ in 0..r {
        words = words
            .into_iter()
            .flat_map(|w| {
                all.iter().map(move |&a| {
                    let mut w2 = w.clone();
                    w2.push(a);
                    w2
                })
            })
            .collect();
    }
    words
}

fn accumulate(out: &mut BTreeMap<SimplexId, Scalar>, field: PrimeField, n: usize, terms: &[(usize, i64)], c: Scalar) {
    for &(z, v) in terms {
        let e = out.entry(SimplexId::new(n, z)).or_insert(0);
        *e = field.add(*e, field.mul(c, field.reduce(v)));
    }
}

/// Checks `δ(u(φ)) - Σ_i (-1)^{d + Σ_{j<i} |φ_j|} u(..., δφ_i, ...) = (∂u)(φ)` on
/// every tuple of basis cochains of `x`, for all surjections of arity `r` and
/// degree `≤ d_max`.
pub fn verify_chain_map_axiom(x: &SimplicialSet, r: usize, d_max: usize, field: PrimeField) -> Vec<AxiomCase> {
    let words = basis_words(x, r);
    let cob: Vec<SparseMatrix<usize, usize>> = (0..=x.dim()).map(|q| coboundary_matrix(x, q, field)).collect();
    let mut cases = Vec::new();
    for d in 0..=d_max {
        for u in Surjection::all(r, d) {
            let iu = CoproductIndex::new(x, &u);
            let du: Vec<(CoproductIndex, Scalar)> = u.differential().iter().map(|(v, c)| (CoproductIndex::new(x, v), field.reduce(c))).collect();
            let passed = words.iter().all(|w| {
                let mut lhs = BTreeMap::new();
                if let Some((n, terms)) = iu.apply_basis(w) {
                    for &(z, v) in terms {
                        if n < x.dim() {
                            for (&y, c) in cob[n].column(&z).iter() {
                                accumulate(&mut lhs, field, n + 1, &[(y, 1)], field.mul(c, field.reduce(v)));
                            }
                        }
                    }
                }
                let mut pre = d as i64;
                for i in 0..r {
                    let a = w[i];
                    if a.dim < x.dim() {
                        let s = field.neg(field.sign(pre));
                        for (&y, c) in cob[a.dim].column(&a.index).iter() {
                            let mut w2 = w.clone();
                            w2[i] = SimplexId::new(a.dim + 1, y);
                            if let Some((n, terms)) = iu.apply_basis(&w2) {
                                accumulate(&mut lhs, field, n, terms, field.mul(s, c));
                            }
                        }
                    }
                    pre += a.dim as i64;
                }
                let mut rhs = BTreeMap::new();
                for (iv, c) in &du {
                    if let Some((n, terms)) = iv.apply_basis(w) {
                        accumulate(&mut rhs, field, n, terms, *c);
                    }
                }
                lhs.retain(|_, c| *c != 0);
                rhs.retain(|_, c| *c != 0);
                lhs == rhs
            });
            cases.push(AxiomCase { u, passed });
        }
    }
    cases
}

/// Result of the E_n-triviality check on `𝔖^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityReport {
    pub m: usize,
    pub n: usize,
    /// Surjections in `X_n` acting nontrivially on the fundamental cocycle.
    pub nonzero: Vec<Surjection>,
    /// Whether `∪_m(ω, ω) = ω`.
    pub top_square: bool,
}

impl TrivialityReport {
    pub fn passed(&self) -> bool {
        self.nonzero.is_empty() && self.top_square
    }
}

/// Every `u ∈ X_n(r)`, `2 ≤ r ≤ r_max`, acts by zero on `ω^{⊗r}` for the
/// fundamental cocycle `ω` of `𝔖^m`, while `∪_m(ω, ω) = ω`.
pub fn verify_sphere_en_triviality(m: usize, n: usize, r_max: usize, field: PrimeField) -> Result<TrivialityReport, ChainError> {
    let s = crate::simp::minimal_sphere(m);
    let w = Cochain::indicator(SimplexId::new(m, 0));
    let mut nonzero = Vec::new();
    for r in 2..=r_max {
        let slots = vec![&w; r];
        for d in 0..=(r - 1) * m {
            for u in Surjection::all(r, d).into_iter().filter(|u| u.in_filtration(n)) {
                if !surjection_action(&s, field, &u, &slots)?.is_zero() {
                    nonzero.push(u);
                }
            }
        }
    }
    let top = surjection_action(&s, field, &Surjection::cup(m), &[&w, &w])?;
    Ok(TrivialityReport { m, n, nonzero, top_square: top == w })
}
