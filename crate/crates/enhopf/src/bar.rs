//! Weight-truncated bar constructions `B_α Ñ*(X)` over explicit cooperad data.
//!
//! A basis element `(γ; x_1,...,x_w)` stands for `γ ⊗ e_{x_1} ⊗ ... ⊗ e_{x_w}`
//! with `e_x` the indicator cochain of a cell. Since each arity component of
//! the cooperad is free over `S_w`, coinvariants are represented by untwisted
//! generators, and `(σ·γ; a)` is rewritten as `±(γ; a_{σ(1)},...,a_{σ(w)})`
//! with the Koszul sign.

use std::collections::HashMap;

use thiserror::Error;

use crate::chains::{cells, coboundary_matrix, ChainError, Cochain, CoproductIndex};
use crate::falg::{homology_dimension, LinAlgError, PrimeField, Scalar, SparseMatrix, SparseVector};
use crate::koszul::{upsilon_arity2, CooperadKind, CooperadPresentation, GenId, KoszulError};
use crate::operads::{koszul_sign, Permutation, Surjection};
use crate::simp::{SimplexId, SimplicialMap, SimplicialSet};
use crate::susp::SuspensionStructure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BarError {
    #[error("cooperad {cooperad} has no data in arity {arity}")]
    MissingCooperadData { cooperad: String, arity: usize },
    #[error("bar differential leaves the weight-{0} slice")]
    NotClosed(usize),
    #[error("element lives on a different space or cooperad")]
    Mismatch,
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarBasis {
    pub gen: GenId,
    pub word: Vec<SimplexId>,
}

impl BarBasis {
    pub fn new(gen: GenId, word: Vec<SimplexId>) -> Self {
        BarBasis { gen, word }
    }

    pub fn weight(&self) -> usize {
        self.word.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BarElement {
    pub terms: SparseVector<BarBasis>,
}

impl BarElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BarBasis) -> Self {
        BarElement { terms: SparseVector::unit(b) }
    }

    /// `(γ; a_1 ⊗ ... ⊗ a_w)` expanded multilinearly.
    pub fn word(field: PrimeField, gen: GenId, slots: &[&Cochain]) -> Self {
        let mut acc: Vec<(Vec<SimplexId>, Scalar)> = vec![(Vec::new(), 1)];
        for a in slots {
            let mut next = Vec::new();
            for (w, c) in &acc {
                for (&i, v) in a.coeffs.iter() {
                    let mut w2 = w.clone();
                    w2.push(SimplexId::new(a.dim, i));
                    next.push((w2, field.mul(*c, v)));
                }
            }
            acc = next;
        }
        let terms = acc.into_iter().map(|(w, c)| (BarBasis::new(gen, w), c)).collect();
        BarElement { terms }
    }

    /// A weight-1 element.
    pub fn cochain(field: PrimeField, a: &Cochain) -> Self {
        Self::word(field, 0, &[a])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BarBasis, Scalar)> {
        self.terms.iter()
    }

    pub fn weight(&self) -> usize {
        self.terms.labels().map(|b| b.weight()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, field: PrimeField, b: BarBasis, c: Scalar) {
        self.terms.add_term(field, b, c);
    }

    pub fn sum(&self, field: PrimeField, other: &BarElement) -> BarElement {
        BarElement { terms: self.terms.sum(field, &other.terms) }
    }

    pub fn difference(&self, field: PrimeField, other: &BarElement) -> BarElement {
        BarElement { terms: self.terms.difference(field, &other.terms) }
    }

    pub fn scaled(&self, field: PrimeField, c: Scalar) -> BarElement {
        BarElement { terms: self.terms.scaled(field, c) }
    }

    /// The weight-1 part as a cochain of dimension `dim`.
    pub fn weight_one_part(&self, dim: usize) -> Cochain {
        let coeffs = self.iter().filter(|(b, _)| b.weight() == 1 && b.word[0].dim == dim).map(|(b, c)| (b.word[0].index, c)).collect();
        Cochain::new(dim, coeffs)
    }
}

/// `word'[k] = word[perm[k]]` and the Koszul sign of the move.
pub fn permute_word(perm: &Permutation, word: &[SimplexId]) -> (i64, Vec<SimplexId>) {
    let degrees: Vec<i64> = word.iter().map(|a| a.dim as i64).collect();
    let out = perm.images().iter().map(|&i| word[i]).collect();
    (koszul_sign(perm, &degrees), out)
}

/// The bar construction of `Ñ*(X)` for one cooperad.
pub struct BarComplex<'a> {
    space: &'a SimplicialSet,
    cooperad: &'a CooperadPresentation,
    field: PrimeField,
    coboundary: Vec<HashMap<usize, Vec<(usize, Scalar)>>>,
    actions: HashMap<Surjection, CoproductIndex>,
}

impl<'a> BarComplex<'a> {
    pub fn new(space: &'a SimplicialSet, cooperad: &'a CooperadPresentation) -> Self {
        let field = cooperad.field();
        let coboundary = (0..=space.dim())
            .map(|q| {
                let m = coboundary_matrix(space, q, field);
                m.cols().iter().map(|&c| (c, m.column(&c).iter().map(|(&r, v)| (r, v)).collect())).collect()
            })
            .collect();
        let mut actions = HashMap::new();
        for g in 0..cooperad.generators().len() {
            for (u, _) in cooperad.twisting(g).iter() {
                actions.entry(u.clone()).or_insert_with(|| CoproductIndex::new(space, u));
            }
        }
        BarComplex { space, cooperad, field, coboundary, actions }
    }

    pub fn space(&self) -> &SimplicialSet {
        self.space
    }

    pub fn cooperad(&self) -> &CooperadPresentation {
        self.cooperad
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn en_degree(&self, b: &BarBasis) -> i64 {
        self.cooperad.generator(b.gen).degree
    }

    pub fn degree(&self, b: &BarBasis) -> i64 {
        self.en_degree(b) - b.word.iter().map(|a| a.dim as i64).sum::<i64>()
    }

    /// Total degree of a homogeneous element; `None` for zero or mixed elements.
    pub fn element_degree(&self, x: &BarElement) -> Option<i64> {
        let mut degrees = x.terms.labels().map(|b| self.degree(b));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Terms of the given weight and E_n-degree.
    pub fn component(&self, x: &BarElement, weight: usize, en_degree: i64) -> BarElement {
        let terms = x.iter().filter(|(b, _)| b.weight() == weight && self.en_degree(b) == en_degree).map(|(b, c)| (b.clone(), c)).collect();
        BarElement { terms }
    }

    /// Lexicographically largest `(weight, E_n-degree)` among the terms.
    pub fn leading_stage(&self, x: &BarElement) -> Option<(usize, i64)> {
        x.terms.labels().map(|b| (b.weight(), self.en_degree(b))).max()
    }

    pub fn d1(&self, x: &BarElement) -> BarElement {
        let f = self.field;
        let mut out = BarElement::zero();
        for (b, c) in x.iter() {
            let mut pre = self.cooperad.generator(b.gen).degree;
            for (i, a) in b.word.iter().enumerate() {
                let s = f.mul(c, f.sign(pre));
                if let Some(col) = self.coboundary[a.dim].get(&a.index) {
                    for &(z, v) in col {
                        let mut w = b.word.clone();
                        w[i] = SimplexId::new(a.dim + 1, z);
                        out.add_term(f, BarBasis::new(b.gen, w), f.mul(s, v));
                    }
                }
                pre -= a.dim as i64;
            }
        }
        out
    }

    fn contract(&self, outer: GenId, position: usize, inner: GenId, word: &[SimplexId], c: Scalar, out: &mut BarElement) {
        let f = self.field;
        let (go, gi) = (self.cooperad.generator(outer), self.cooperad.generator(inner));
        let k = gi.arity;
        let pre: i64 = word[..position].iter().map(|a| -(a.dim as i64)).sum();
        let s = f.mul(c, f.sign(go.degree + (gi.degree - 1) * pre));
        for (u, cu) in self.cooperad.twisting(inner).iter() {
            let Some((n, terms)) = self.actions[u].apply_basis(&word[position..position + k]) else {
                continue;
            };
            let su = f.mul(s, f.reduce(cu));
            for &(z, cz) in terms {
                let mut w = word[..position].to_vec();
                w.push(SimplexId::new(n, z));
                w.extend_from_slice(&word[position + k..]);
                out.add_term(f, BarBasis::new(outer, w), f.mul(su, f.reduce(cz)));
            }
        }
    }

    pub fn d2(&self, x: &BarElement) -> Result<BarElement, BarError> {
        let f = self.field;
        let mut out = BarElement::zero();
        for (b, c) in x.iter() {
            let w = b.weight();
            if w < 2 {
                continue;
            }
            self.contract(self.cooperad.unit(), 0, b.gen, &b.word, c, &mut out);
            if w >= 3 {
                let rows = self.cooperad.cocomposition(b.gen).ok_or_else(|| self.missing(w))?;
                for row in rows {
                    let (s, word) = permute_word(&row.perm, &b.word);
                    let coeff = f.mul(c, f.mul(f.reduce(row.coeff), f.reduce(s)));
                    self.contract(row.outer, row.position, row.inner, &word, coeff, &mut out);
                }
            }
        }
        Ok(out)
    }

    pub fn d3(&self, x: &BarElement) -> BarElement {
        let f = self.field;
        let mut out = BarElement::zero();
        for (b, c) in x.iter() {
            for t in self.cooperad.differential(b.gen) {
                let (s, word) = permute_word(&t.perm, &b.word);
                out.add_term(f, BarBasis::new(t.gen, word), f.mul(c, f.mul(f.reduce(t.coeff), f.reduce(s))));
            }
        }
        out
    }

    /// `d_B = d_1 + d_2 + d_3`.
    pub fn differential(&self, x: &BarElement) -> Result<BarElement, BarError> {
        let f = self.field;
        Ok(self.d1(x).sum(f, &self.d2(x)?).sum(f, &self.d3(x)))
    }

    fn missing(&self, arity: usize) -> BarError {
        BarError::MissingCooperadData { cooperad: self.cooperad.label().to_string(), arity }
    }

    fn achievable_sum(&self, target: i64, slots: usize) -> bool {
        if target < 0 {
            return false;
        }
        let dims: Vec<usize> = (0..=self.space.dim()).filter(|&q| !cells(self.space, q).is_empty()).collect();
        let mut reach = vec![false; target as usize + 1];
        reach[0] = true;
        for _ in 0..slots {
            let mut next = vec![false; reach.len()];
            for (s, &ok) in reach.iter().enumerate() {
                if ok {
                    for &q in &dims {
                        if s + q < next.len() {
                            next[s + q] = true;
                        }
                    }
                }
            }
            reach = next;
        }
        reach[target as usize]
    }

    /// Basis of the degree-`degree` part of the weight-`≤ max_weight` slice.
    pub fn basis(&self, degree: i64, max_weight: usize) -> Result<Vec<BarBasis>, BarError> {
        let mut out = Vec::new();
        for w in 1..=max_weight {
            if w > self.cooperad.max_arity() {
                let possible = match self.cooperad.degree_window(w) {
                    Some((lo, hi)) => (lo + 1..=hi).any(|e| self.achievable_sum(e - degree, w)),
                    None => true,
                };
                if possible {
                    return Err(self.missing(w));
                }
                continue;
            }
            for g in self.cooperad.generators_of_arity(w) {
                let total = self.cooperad.generator(g).degree - degree;
                if total < 0 {
                    continue;
                }
                let mut word = Vec::with_capacity(w);
                self.words(total as usize, w, &mut word, &mut |word| out.push(BarBasis::new(g, word.to_vec())));
            }
        }
        out.sort();
        Ok(out)
    }

    fn words(&self, remaining: usize, slots: usize, word: &mut Vec<SimplexId>, emit: &mut dyn FnMut(&[SimplexId])) {
        if slots == 0 {
            if remaining == 0 {
                emit(word);
            }
            return;
        }
        for q in 0..=remaining.min(self.space.dim()) {
            for i in cells(self.space, q) {
                word.push(SimplexId::new(q, i));
                self.words(remaining - q, slots - 1, word, emit);
                word.pop();
            }
        }
    }

    /// `d_B` from degree `degree` to `degree - 1` on the weight-`≤ max_weight` slice.
    pub fn matrix(&self, degree: i64, max_weight: usize) -> Result<SparseMatrix<BarBasis, BarBasis>, BarError> {
        let cols = self.basis(degree, max_weight)?;
        let rows = self.basis(degree - 1, max_weight)?;
        let mut m = SparseMatrix::new(self.field, rows, cols.clone());
        for b in &cols {
            let image = self.differential(&BarElement::basis(b.clone()))?;
            m.set_column(b, &image.terms).map_err(|_| BarError::NotClosed(max_weight))?;
        }
        Ok(m)
    }

    pub fn homology(&self, degree: i64, max_weight: usize) -> Result<usize, BarError> {
        let d_in = self.matrix(degree + 1, max_weight)?;
        let d_out = self.matrix(degree, max_weight)?;
        Ok(homology_dimension(&d_in, &d_out)?)
    }
}

/// `dim H_degree` of the weight-`≤ max_weight` slice of `B Ñ*(X)`.
pub fn bar_homology(space: &SimplicialSet, cooperad: &CooperadPresentation, degree: i64, max_weight: usize) -> Result<usize, BarError> {
    BarComplex::new(space, cooperad).homology(degree, max_weight)
}

/// `B f*`: slotwise pullback along `f`.
pub fn induced_map(f: &SimplicialMap, field: PrimeField, x: &BarElement) -> BarElement {
    let source = f.source();
    let mut preimages: HashMap<SimplexId, Vec<SimplexId>> = HashMap::new();
    for q in 0..=source.dim() {
        for i in cells(source, q) {
            let id = SimplexId::new(q, i);
            let y = f.image(id);
            if !y.is_degenerate() {
                preimages.entry(y.base).or_default().push(id);
            }
        }
    }
    let mut out = BarElement::zero();
    for (b, c) in x.iter() {
        let mut acc: Vec<Vec<SimplexId>> = vec![Vec::new()];
        for a in &b.word {
            let pre = preimages.get(a).map_or(&[][..], |v| v.as_slice());
            acc = acc.iter().flat_map(|w| pre.iter().map(move |p| {
                let mut w2 = w.clone();
                w2.push(*p);
                w2
            })).collect();
        }
        for w in acc {
            out.add_term(field, BarBasis::new(b.gen, w), c);
        }
    }
    out
}

/// `Υ: B_{D_{n+1}}(σ⁻¹A) → B_{D_n}A`, with `σ⁻¹A` realized as `Ñ*(ΣX)`.
pub fn upsilon_bar(x: &BarElement, source: &CooperadPresentation, target: &CooperadPresentation, susp: &SuspensionStructure) -> Result<BarElement, BarError> {
    let CooperadKind::Dn(m) = source.kind() else {
        return Err(BarError::Mismatch);
    };
    if m < 2 {
        return Err(KoszulError::IndexOutOfRange { n: m, i: 0 }.into());
    }
    let field = target.field();
    let mut out = BarElement::zero();
    for (b, c) in x.iter() {
        let gen = if b.gen == source.unit() {
            target.unit()
        } else {
            let i = source.bar_index(b.gen).ok_or(BarError::Mismatch)?;
            match upsilon_arity2(m - 1, i)? {
                Some(j) => target.bar_generator(j).ok_or_else(|| BarError::MissingCooperadData { cooperad: target.label().to_string(), arity: 2 })?,
                None => continue,
            }
        };
        let word: Option<Vec<SimplexId>> = b.word.iter().map(|a| susp.down(*a)).collect();
        out.add_term(field, BarBasis::new(gen, word.ok_or(BarError::Mismatch)?), c);
    }
    Ok(out)
}

/// Per-identity outcome of [`check_bar_identities`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarIdentityReport {
    pub checked: usize,
    pub square_zero: bool,
    /// `d1², d2², d3², d1d2+d2d1, d1d3+d3d1, d2d3+d3d2`, in this order.
    pub identities: [(&'static str, bool); 6],
}

impl BarIdentityReport {
    pub fn all_identities(&self) -> bool {
        self.identities.iter().all(|(_, ok)| *ok)
    }
}

/// `d_B² = 0` and the six pairwise identities on the given elements.
pub fn check_bar_identities<'b>(bar: &BarComplex, elements: impl IntoIterator<Item = &'b BarElement>) -> Result<BarIdentityReport, BarError> {
    let f = bar.field();
    let names = ["d1d1", "d2d2", "d3d3", "d1d2+d2d1", "d1d3+d3d1", "d2d3+d3d2"];
    let mut ok = [true; 6];
    let mut square_zero = true;
    let mut checked = 0;
    for x in elements {
        checked += 1;
        let (a, b, c) = (bar.d1(x), bar.d2(x)?, bar.d3(x));
        let dd = bar.differential(&bar.differential(x)?)?;
        square_zero &= dd.is_zero();
        let values = [
            bar.d1(&a),
            bar.d2(&b)?,
            bar.d3(&c),
            bar.d1(&b).sum(f, &bar.d2(&a)?),
            bar.d1(&c).sum(f, &bar.d3(&a)),
            bar.d2(&c)?.sum(f, &bar.d3(&b)),
        ];
        for (k, v) in values.iter().enumerate() {
            ok[k] &= v.is_zero();
        }
    }
    let identities = std::array::from_fn(|k| (names[k], ok[k]));
    Ok(BarIdentityReport { checked, square_zero, identities })
}

/// All basis elements of total degree in `degrees` and weight `≤ max_weight`.
pub fn basis_elements(bar: &BarComplex, degrees: std::ops::RangeInclusive<i64>, max_weight: usize) -> Result<Vec<BarElement>, BarError> {
    let mut out = Vec::new();
    for q in degrees {
        out.extend(bar.basis(q, max_weight)?.into_iter().map(BarElement::basis));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simp::{minimal_sphere, standard_simplex};
    use std::sync::Arc;

    const F2: PrimeField = PrimeField::F2;

    #[test]
    fn d2_weight_two_is_the_twisting() {
        let d2 = standard_simplex(2);
        let a = CooperadPresentation::dn_arity2(1, F2).unwrap();
        let bar = BarComplex::new(&d2, &a);
        let phi = Cochain::indicator(d2.id("0,1").unwrap());
        let psi = Cochain::indicator(d2.id("1,2").unwrap());
        let x = BarElement::word(F2, a.bar_generator(0).unwrap(), &[&phi, &psi]);
        let expect = BarElement::cochain(F2, &Cochain::indicator(d2.id("0,1,2").unwrap()));
        assert_eq!(bar.d2(&x).unwrap(), expect);
    }

    #[test]
    fn d2_on_circle_vanishes_for_degree_reasons() {
        let s1 = minimal_sphere(1);
        let d2 = CooperadPresentation::dn_arity2(2, F2).unwrap();
        let bar = BarComplex::new(&s1, &d2);
        let w = Cochain::indicator(SimplexId::new(1, 0));
        let x = BarElement::word(F2, d2.bar_generator(1).unwrap(), &[&w, &w]);
        assert!(bar.d2(&x).unwrap().is_zero());
    }

    #[test]
    fn d3_examples() {
        let s = crate::simp::boundary_sphere(2);
        let d2 = CooperadPresentation::dn_arity2(2, F2).unwrap();
        let bar = BarComplex::new(&s, &d2);
        let (a, b) = (SimplexId::new(1, 0), SimplexId::new(2, 1));
        let x = BarElement::basis(BarBasis::new(d2.bar_generator(0).unwrap(), vec![a, b]));
        let b1 = d2.bar_generator(1).unwrap();
        let mut expect = BarElement::basis(BarBasis::new(b1, vec![a, b]));
        expect.add_term(F2, BarBasis::new(b1, vec![b, a]), 1);
        assert_eq!(bar.d3(&x), expect);
        let top = BarElement::basis(BarBasis::new(b1, vec![a, b]));
        assert!(bar.d3(&top).is_zero());
    }

    #[test]
    fn associative_weight_three_d2() {
        let d = standard_simplex(3);
        let f3 = PrimeField::F3;
        let a = CooperadPresentation::associative(3, f3).unwrap();
        let bar = BarComplex::new(&d, &a);
        let e = |n: &str| d.id(n).unwrap();
        let mu3 = a.generators_of_arity(3).next().unwrap();
        let x = BarElement::basis(BarBasis::new(mu3, vec![e("0,1"), e("1,2"), e("2,3")]));
        let mu2 = a.generators_of_arity(2).next().unwrap();
        let mut expect = BarElement::zero();
        expect.add_term(f3, BarBasis::new(mu2, vec![e("0,1,2"), e("2,3")]), f3.sign(1));
        expect.add_term(f3, BarBasis::new(mu2, vec![e("0,1"), e("1,2,3")]), 1);
        assert_eq!(bar.d2(&x).unwrap(), expect);
    }

    fn assert_square_zero(bar: &BarComplex, degrees: std::ops::RangeInclusive<i64>, w: usize) {
        for q in degrees {
            for b in bar.basis(q, w).unwrap() {
                let dx = bar.differential(&BarElement::basis(b.clone())).unwrap();
                assert!(bar.differential(&dx).unwrap().is_zero(), "d^2 != 0 on {b:?}");
            }
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        let d3 = standard_simplex(3);
        let a = CooperadPresentation::associative(3, PrimeField::F3).unwrap();
        assert_square_zero(&BarComplex::new(&d3, &a), -3..=0, 3);
        let s = crate::simp::boundary_sphere(3);
        for n in 1..=3 {
            let d = CooperadPresentation::dn_arity2(n, F2).unwrap();
            assert_square_zero(&BarComplex::new(&s, &d), -4..=2, 2);
        }
    }

    #[test]
    fn bar_homology_degree_zero_vanishes() {
        let s = minimal_sphere(2);
        let a = CooperadPresentation::associative(3, F2).unwrap();
        assert_eq!(bar_homology(&s, &a, 0, 3).unwrap(), 0);
        assert_eq!(bar_homology(&s, &a, -2, 3).unwrap(), 1);
    }

    #[test]
    fn missing_data_is_reported() {
        let s = minimal_sphere(2);
        let d2 = CooperadPresentation::dn_arity2(2, F2).unwrap();
        let bar = BarComplex::new(&s, &d2);
        assert!(matches!(bar.basis(-4, 3), Err(BarError::MissingCooperadData { arity: 3, .. })));
        let s3 = minimal_sphere(3);
        assert!(BarComplex::new(&s3, &d2).basis(-3, 3).is_ok());
    }

    #[test]
    fn induced_map_of_quotient() {
        let d1 = Arc::new(standard_simplex(1));
        let s1 = Arc::new(minimal_sphere(1));
        let star = crate::simp::SimplexRef::nondegenerate(s1.basepoint());
        let sigma = crate::simp::SimplexRef::nondegenerate(SimplexId::new(1, 0));
        let f = SimplicialMap::new(d1.clone(), s1.clone(), vec![vec![star.clone(), star], vec![sigma]]).unwrap();
        let a = CooperadPresentation::dn_arity2(1, F2).unwrap();
        let w = Cochain::indicator(SimplexId::new(1, 0));
        let x = BarElement::word(F2, 1, &[&w, &w]);
        let e = d1.id("0,1").unwrap();
        assert_eq!(induced_map(&f, F2, &x), BarElement::basis(BarBasis::new(1, vec![e, e])));
        let c = SimplicialMap::constant(d1, s1);
        assert!(induced_map(&c, F2, &x).is_zero());
        let _ = a;
    }

    #[test]
    fn upsilon_examples() {
        let s = crate::susp::reduced_suspension(Arc::new(minimal_sphere(2)));
        let d2 = CooperadPresentation::dn_arity2(2, F2).unwrap();
        let d1 = CooperadPresentation::dn_arity2(1, F2).unwrap();
        let sw = Cochain::indicator(SimplexId::new(3, 0));
        let w = Cochain::indicator(SimplexId::new(2, 0));
        let x = BarElement::word(F2, d2.bar_generator(0).unwrap(), &[&sw, &sw]);
        let y = upsilon_bar(&x, &d2, &d1, &s).unwrap();
        assert_eq!(y, BarElement::word(F2, d1.bar_generator(0).unwrap(), &[&w, &w]));
        let x = BarElement::word(F2, d2.bar_generator(1).unwrap(), &[&sw, &sw]);
        assert!(upsilon_bar(&x, &d2, &d1, &s).unwrap().is_zero());
    }
}
