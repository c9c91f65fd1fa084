//! Weight reduction, the E_n-Hopf pairing, the suspension relation and stable
//! Hopf invariants.
//!
//! `d_1^{-1}` on tensor words comes from a contraction `(h, e)` of `Ñ*(S)` with
//! `δh + hδ = 1 - e` and `e` landing in cocycles. On a word it is
//! `h⊗1⊗...⊗1 + e⊗h⊗1⊗... + ...`, whose leading term is the first-slot preimage.

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bar::{induced_map, upsilon_bar, BarBasis, BarComplex, BarElement, BarError};
use crate::chains::{cells, coboundary_matrix, evaluate, fundamental_class, ChainError, Cochain};
use crate::falg::{LinAlgError, PivotOrder, PrimeField, Scalar, SparseMatrix, SparseVector};
use crate::koszul::{CooperadKind, CooperadPresentation, KoszulError};
use crate::simp::{SimpError, SimplexId, SimplicialMap, SimplicialSet};
use crate::susp::{reduced_suspension, suspend_map, suspension_tower, SuspError, SuspensionStructure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("input is not a cocycle of the bar construction")]
    NotACocycle,
    #[error("leading component at weight {weight}, E_n-degree {en_degree} is not exact; weight reduction requires k > n ({detail})")]
    NotExact { weight: usize, en_degree: i64, detail: String },
    #[error("cooperad {cooperad} has no data in arity {arity}")]
    MissingCooperadData { cooperad: String, arity: usize },
    #[error("no stable lift at level {level}")]
    Obstruction { level: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Bar(BarError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Susp(#[from] SuspError),
    #[error(transparent)]
    Simp(#[from] SimpError),
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

impl From<BarError> for HopfError {
    fn from(e: BarError) -> Self {
        match e {
            BarError::MissingCooperadData { cooperad, arity } => HopfError::MissingCooperadData { cooperad, arity },
            other => HopfError::Bar(other),
        }
    }
}

type CellMap = HashMap<usize, SparseVector<usize>>;

/// Contraction data of the reduced cochains of a finite simplicial set.
pub struct Contraction {
    field: PrimeField,
    h: Vec<CellMap>,
    e: Vec<CellMap>,
}

impl Contraction {
    /// Pivots follow label order.
    pub fn canonical(x: &SimplicialSet, field: PrimeField) -> Result<Self, HopfError> {
        Self::with_orders(x, field, |_| PivotOrder::Label)
    }

    /// Pivots follow a random order per dimension.
    pub fn randomized<G: Rng>(x: &SimplicialSet, field: PrimeField, rng: &mut G) -> Result<Self, HopfError> {
        Self::with_orders(x, field, |n| PivotOrder::shuffled(n, rng))
    }

    fn with_orders(x: &SimplicialSet, field: PrimeField, mut order: impl FnMut(usize) -> PivotOrder) -> Result<Self, HopfError> {
        let top = x.dim();
        let deltas: Vec<SparseMatrix<usize, usize>> = (0..=top).map(|q| coboundary_matrix(x, q, field)).collect();
        let mut h: Vec<CellMap> = vec![CellMap::new(); top + 1];
        for q in 1..=top {
            let elim = deltas[q - 1].factor(&order(deltas[q - 1].ncols()));
            for y in cells(x, q) {
                let (pre, _) = elim.split(&SparseVector::unit(y))?;
                if !pre.is_empty() {
                    h[q].insert(y, pre);
                }
            }
        }
        let mut c = Contraction { field, h, e: vec![CellMap::new(); top + 1] };
        for q in 0..=top {
            for a in cells(x, q) {
                let unit = SparseVector::unit(a);
                let dh = match q {
                    0 => SparseVector::new(),
                    _ => deltas[q - 1].mul_vector(&c.apply_h(q, &unit))?,
                };
                let hd = c.apply_h(q + 1, &deltas[q].mul_vector(&unit)?);
                c.e[q].insert(a, unit.difference(field, &dh).difference(field, &hd));
            }
        }
        Ok(c)
    }

    fn apply_h(&self, q: usize, v: &SparseVector<usize>) -> SparseVector<usize> {
        let mut out = SparseVector::new();
        if let Some(map) = self.h.get(q) {
            for (y, c) in v.iter() {
                if let Some(col) = map.get(y) {
                    out.add_scaled(self.field, c, col);
                }
            }
        }
        out
    }

    /// `h: Ñ^q → Ñ^{q-1}`.
    pub fn h(&self, a: &Cochain) -> Cochain {
        if a.dim == 0 {
            return Cochain::zero(0);
        }
        Cochain::new(a.dim - 1, self.apply_h(a.dim, &a.coeffs))
    }

    /// `e = 1 - δh - hδ`, a projection onto cocycle representatives.
    pub fn e(&self, a: &Cochain) -> Cochain {
        let mut out = SparseVector::new();
        for (y, c) in a.coeffs.iter() {
            out.add_scaled(self.field, c, &self.e[a.dim][y]);
        }
        Cochain::new(a.dim, out)
    }

    fn cell_h(&self, a: SimplexId) -> Vec<(SimplexId, Scalar)> {
        match (a.dim, self.h.get(a.dim).and_then(|m| m.get(&a.index))) {
            (d, Some(v)) if d > 0 => v.iter().map(|(&i, c)| (SimplexId::new(d - 1, i), c)).collect(),
            _ => Vec::new(),
        }
    }

    fn cell_e(&self, a: SimplexId) -> Vec<(SimplexId, Scalar)> {
        self.e[a.dim][&a.index].iter().map(|(&i, c)| (SimplexId::new(a.dim, i), c)).collect()
    }

    /// The tensor homotopy on one word, with the generator sign folded in.
    fn preimage_word(&self, gen: usize, gen_degree: i64, word: &[SimplexId], coeff: Scalar, out: &mut BarElement) {
        let f = self.field;
        let mut prefix: Vec<(Vec<SimplexId>, Scalar)> = vec![(Vec::new(), f.mul(coeff, f.sign(gen_degree)))];
        let mut parity = 0i64;
        for (k, &a) in word.iter().enumerate() {
            let s = f.sign(parity);
            for (p, c) in &prefix {
                for (z, v) in self.cell_h(a) {
                    let mut w = p.clone();
                    w.push(z);
                    w.extend_from_slice(&word[k + 1..]);
                    out.add_term(f, BarBasis::new(gen, w), f.mul(f.mul(*c, v), s));
                }
            }
            let ea = self.cell_e(a);
            prefix = prefix
                .iter()
                .flat_map(|(p, c)| {
                    ea.iter().map(move |&(z, v)| {
                        let mut w = p.clone();
                        w.push(z);
                        (w, f.mul(*c, v))
                    })
                })
                .collect();
            parity += a.dim as i64;
        }
    }
}

/// One correction `ω ↦ ω - d_B(corrector)` of the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub weight: usize,
    pub en_degree: i64,
    pub corrector: BarElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub steps: Vec<ReductionStep>,
    pub result: Cochain,
}

impl ReductionCertificate {
    /// Checks `ω - Σ d_B(corrector) = result` exactly.
    pub fn verify(&self, bar: &BarComplex, omega: &BarElement) -> Result<bool, HopfError> {
        let f = bar.field();
        let mut cur = omega.clone();
        for s in &self.steps {
            cur = cur.difference(f, &bar.differential(&s.corrector)?);
        }
        Ok(cur == BarElement::cochain(f, &self.result))
    }
}

/// Weight reduction of a degree `-m` cocycle on a homology `m`-sphere.
pub fn weight_reduce(bar: &BarComplex, omega: &BarElement, contraction: &Contraction) -> Result<ReductionCertificate, HopfError> {
    let f = bar.field();
    let m = bar.space().dim();
    if !bar.differential(omega)?.is_zero() {
        return Err(HopfError::NotACocycle);
    }
    if let Some(d) = bar.element_degree(omega) {
        if d != -(m as i64) {
            return Err(HopfError::Invalid(format!("cocycle has degree {d}, expected {}", -(m as i64))));
        }
    }
    let mut cur = omega.clone();
    let mut steps = Vec::new();
    while let Some((w, e)) = bar.leading_stage(&cur) {
        if w <= 1 {
            break;
        }
        let nu = bar.component(&cur, w, e);
        let mut corrector = BarElement::zero();
        for (b, c) in nu.iter() {
            contraction.preimage_word(b.gen, bar.en_degree(b), &b.word, c, &mut corrector);
        }
        if bar.d1(&corrector) != nu {
            return Err(HopfError::NotExact { weight: w, en_degree: e, detail: format!("sphere dimension {m}") });
        }
        cur = cur.difference(f, &bar.differential(&corrector)?);
        debug_assert!(bar.leading_stage(&cur).is_none_or(|s| s < (w, e)));
        steps.push(ReductionStep { weight: w, en_degree: e, corrector });
    }
    Ok(ReductionCertificate { steps, result: cur.weight_one_part(m) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HopfValue {
    pub value: Scalar,
    pub p: u32,
    pub n: Option<usize>,
    pub m: usize,
}

#[derive(Debug, Clone)]
pub struct HopfOutcome {
    pub value: HopfValue,
    pub certificate: ReductionCertificate,
    pub pulled_back: BarElement,
}

/// The `n` of the E_n-structure, when the cooperad names one.
pub fn en_level(cooperad: &CooperadPresentation) -> Option<usize> {
    match cooperad.kind() {
        CooperadKind::Dn(n) => Some(n),
        CooperadKind::Associative => Some(1),
        CooperadKind::Custom => None,
    }
}

/// `⟨ω, f⟩ = ∫_S τ(B f* ω)` with label-order pivots.
pub fn hopf_pairing(cooperad: &CooperadPresentation, omega: &BarElement, f: &SimplicialMap) -> Result<HopfOutcome, HopfError> {
    let contraction = Contraction::canonical(f.source(), cooperad.field())?;
    hopf_pairing_with(cooperad, omega, f, &contraction)
}

pub fn hopf_pairing_with(cooperad: &CooperadPresentation, omega: &BarElement, f: &SimplicialMap, contraction: &Contraction) -> Result<HopfOutcome, HopfError> {
    let field = cooperad.field();
    let (x, s) = (f.target(), f.source());
    let m = s.dim();
    let n = en_level(cooperad);
    let value = |v| HopfValue { value: v, p: field.p(), n, m };
    if !BarComplex::new(x, cooperad).differential(omega)?.is_zero() {
        return Err(HopfError::NotACocycle);
    }
    let fundamental = fundamental_class(s, m, field)?;
    if let Some(n) = n.filter(|&n| n >= m) {
        return Err(HopfError::NotExact { weight: omega.weight(), en_degree: 0, detail: format!("n = {n}, sphere dimension {m}") });
    }
    let pulled_back = induced_map(f, field, omega);
    let bar = BarComplex::new(s, cooperad);
    let certificate = weight_reduce(&bar, &pulled_back, contraction)?;
    let v = evaluate(field, &certificate.result, &fundamental)?;
    Ok(HopfOutcome { value: value(v), certificate, pulled_back })
}

/// Whether `trials` random pivot orders all reproduce the label-order value.
pub fn preimage_independence_test(cooperad: &CooperadPresentation, omega: &BarElement, f: &SimplicialMap, trials: usize, seed: u64) -> Result<bool, HopfError> {
    let base = hopf_pairing(cooperad, omega, f)?.value;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
        let c = Contraction::randomized(f.source(), cooperad.field(), &mut rng)?;
        if hopf_pairing_with(cooperad, omega, f, &c)?.value != base {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuspensionRelation {
    pub desuspended: HopfValue,
    pub suspended: HopfValue,
}

impl SuspensionRelation {
    pub fn holds(&self) -> bool {
        self.desuspended.value == self.suspended.value
    }
}

/// Compares `⟨Υω, f⟩_{E_n}` with `⟨ω, Σf⟩_{E_{n+1}}` for `ω` on `ΣX`.
pub fn suspension_relation_check(
    lower: &CooperadPresentation,
    upper: &CooperadPresentation,
    omega: &BarElement,
    sx: &SuspensionStructure,
    f: &SimplicialMap,
) -> Result<SuspensionRelation, HopfError> {
    let down = upsilon_bar(omega, upper, lower, sx)?;
    let desuspended = hopf_pairing(lower, &down, f)?.value;
    let ss = reduced_suspension(f.source().clone());
    let sf = suspend_map(f, &ss, sx)?;
    let suspended = hopf_pairing(upper, omega, &sf)?.value;
    Ok(SuspensionRelation { desuspended, suspended })
}

/// `ω = ω_0, ω_1, ...` with `Υ(ω_{r+1}) = ω_r`, each over `D_{n+r}` on `Σ^r X`.
#[derive(Debug, Clone)]
pub struct StableTower {
    pub n: usize,
    pub cooperads: Vec<CooperadPresentation>,
    pub suspensions: Vec<SuspensionStructure>,
    pub lifts: Vec<BarElement>,
}

impl StableTower {
    pub fn space(&self, r: usize) -> &Arc<SimplicialSet> {
        if r == 0 {
            self.suspensions[0].base()
        } else {
            self.suspensions[r - 1].total()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum LiftRow {
    Upsilon(BarBasis),
    Differential(BarBasis),
}

fn naive_lift(omega: &BarElement, lower: &CooperadPresentation, upper: &CooperadPresentation, susp: &SuspensionStructure) -> Result<BarElement, HopfError> {
    let field = upper.field();
    let mut out = BarElement::zero();
    for (b, c) in omega.iter() {
        let gen = if b.gen == lower.unit() {
            upper.unit()
        } else {
            let i = lower.bar_index(b.gen).ok_or_else(|| HopfError::Invalid("generator outside the arity-2 data".into()))?;
            upper.bar_generator(i).ok_or_else(|| HopfError::Invalid("generator index out of range".into()))?
        };
        let word = b.word.iter().map(|a| susp.up(*a)).collect::<Option<Vec<_>>>().ok_or_else(|| HopfError::Invalid("word contains the basepoint".into()))?;
        out.add_term(field, BarBasis::new(gen, word), c);
    }
    Ok(out)
}

/// Lifts a weight-`≤ 2` cocycle over `D_n` through `levels` suspensions.
pub fn stable_lift(omega: &BarElement, x: Arc<SimplicialSet>, n: usize, levels: usize, field: PrimeField) -> Result<StableTower, HopfError> {
    let cooperads = (0..=levels).map(|r| CooperadPresentation::dn_arity2(n + r, field)).collect::<Result<Vec<_>, _>>()?;
    let suspensions = suspension_tower(x, levels.max(1));
    if omega.weight() > 2 {
        return Err(HopfError::MissingCooperadData { cooperad: cooperads[0].label().to_string(), arity: omega.weight() });
    }
    if !BarComplex::new(suspensions[0].base(), &cooperads[0]).differential(omega)?.is_zero() {
        return Err(HopfError::NotACocycle);
    }
    let mut lifts = vec![omega.clone()];
    for r in 0..levels {
        let (lower, upper, susp) = (&cooperads[r], &cooperads[r + 1], &suspensions[r]);
        let current = &lifts[r];
        let guess = naive_lift(current, lower, upper, susp)?;
        let bar = BarComplex::new(susp.total(), upper);
        let defect = bar.differential(&guess)?;
        let lift = if defect.is_zero() {
            guess
        } else {
            let degree = bar.element_degree(&guess).ok_or_else(|| HopfError::Invalid("inhomogeneous cocycle".into()))?;
            let cols = bar.basis(degree, 2)?;
            let mut rows: Vec<LiftRow> = bar.basis(degree - 1, 2)?.into_iter().map(LiftRow::Differential).collect();
            rows.extend(BarComplex::new(susp.base(), lower).basis(degree + 1, 2)?.into_iter().map(LiftRow::Upsilon));
            let mut m = SparseMatrix::new(field, rows, cols.clone());
            for b in &cols {
                let x = BarElement::basis(b.clone());
                let mut col = SparseVector::new();
                for (t, c) in bar.differential(&x)?.iter() {
                    col.add_term(field, LiftRow::Differential(t.clone()), c);
                }
                for (t, c) in upsilon_bar(&x, upper, lower, susp)?.iter() {
                    col.add_term(field, LiftRow::Upsilon(t.clone()), c);
                }
                m.set_column(b, &col)?;
            }
            let rhs: SparseVector<LiftRow> = defect.iter().map(|(t, c)| (LiftRow::Differential(t.clone()), field.neg(c))).collect();
            let y = m.solve_preimage(&rhs).map_err(|_| HopfError::Obstruction { level: r + 1 })?;
            let mut lift = guess;
            for (b, c) in y.iter() {
                lift.add_term(field, b.clone(), c);
            }
            lift
        };
        lifts.push(lift);
    }
    Ok(StableTower { n, cooperads, suspensions, lifts })
}

/// `⟨ω_r, Σ^r f⟩_{E_{n+r}}` for a map `f: S → X` into the base of the tower.
pub fn stable_pairing(tower: &StableTower, f: &SimplicialMap, r: usize) -> Result<HopfValue, HopfError> {
    if r >= tower.lifts.len() {
        return Err(HopfError::Invalid(format!("tower has only {} levels", tower.lifts.len() - 1)));
    }
    if **f.target() != **tower.space(0) {
        return Err(HopfError::Invalid("map does not land in the base of the tower".into()));
    }
    let sources = suspension_tower(f.source().clone(), r);
    let mut g = f.clone();
    for (sk, xk) in sources.iter().zip(&tower.suspensions).take(r) {
        g = suspend_map(&g, sk, xk)?;
    }
    Ok(hopf_pairing(&tower.cooperads[r], &tower.lifts[r], &g)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{coboundary, surjection_action};
    use crate::operads::Surjection;
    use crate::simp::{boundary_sphere, minimal_sphere};

    const F2: PrimeField = PrimeField::F2;

    #[test]
    fn contraction_identity() {
        for p in [F2, PrimeField::F3] {
            let s = boundary_sphere(3);
            let c = Contraction::canonical(&s, p).unwrap();
            for q in 0..=3 {
                for a in cells(&s, q) {
                    let a = Cochain::indicator(SimplexId::new(q, a));
                    let ea = c.e(&a);
                    assert!(coboundary(&s, p, &ea).is_zero());
                    let mut lhs = coboundary(&s, p, &c.h(&a)).coeffs;
                    if q < 3 {
                        lhs = lhs.sum(p, &c.h(&coboundary(&s, p, &a)).coeffs);
                    }
                    assert_eq!(lhs.sum(p, &ea.coeffs), a.coeffs);
                }
            }
        }
    }

    #[test]
    fn weight_one_input_is_untouched() {
        let s = minimal_sphere(3);
        let d1 = CooperadPresentation::dn_arity2(1, F2).unwrap();
        let w = BarElement::cochain(F2, &Cochain::indicator(SimplexId::new(3, 0)));
        let f = SimplicialMap::identity(Arc::new(s));
        let out = hopf_pairing(&d1, &w, &f).unwrap();
        assert!(out.certificate.steps.is_empty());
        assert_eq!(out.value.value, 1);
        let c = SimplicialMap::constant(f.source().clone(), f.target().clone());
        assert_eq!(hopf_pairing(&d1, &w, &c).unwrap().value.value, 0);
    }

    #[test]
    fn hopf_map_has_hopf_invariant_one() {
        let f = crate::models::hopf_map();
        let x = f.target().clone();
        let w = crate::models::suspended_triangle_generator(&x).unwrap();
        let d1 = CooperadPresentation::dn_arity2(1, F2).unwrap();
        let omega = BarElement::word(F2, d1.bar_generator(0).unwrap(), &[&w, &w]);
        let out = hopf_pairing(&d1, &omega, &f).unwrap();
        assert_eq!(out.value.value, 1);
        assert!(out.certificate.verify(&BarComplex::new(f.source(), &d1), &out.pulled_back).unwrap());
    }

    #[test]
    fn n_at_least_m_is_not_exact() {
        let s = minimal_sphere(2);
        let d2 = CooperadPresentation::dn_arity2(2, F2).unwrap();
        let w = Cochain::indicator(SimplexId::new(2, 0));
        let f = SimplicialMap::identity(Arc::new(s));
        let omega = BarElement::cochain(F2, &w);
        assert!(matches!(hopf_pairing(&d2, &omega, &f), Err(HopfError::NotExact { .. })));
    }

    #[test]
    fn not_a_cocycle_is_rejected() {
        let s = Arc::new(boundary_sphere(2));
        let d1 = CooperadPresentation::dn_arity2(1, F2).unwrap();
        let omega = BarElement::cochain(F2, &Cochain::indicator(SimplexId::new(1, 0)));
        let f = SimplicialMap::identity(s);
        assert_eq!(hopf_pairing(&d1, &omega, &f).unwrap_err(), HopfError::NotACocycle);
    }

    fn sphere_class_cocycle(c: &CooperadPresentation, i: usize) -> BarElement {
        let w = Cochain::indicator(SimplexId::new(2, 0));
        BarElement::word(F2, c.bar_generator(i).unwrap(), &[&w, &w])
    }

    #[test]
    fn top_cup_cocycle_reduces_to_transposed_cup() {
        let g = crate::models::hopf_map_to_minimal_sphere().unwrap();
        let d2 = CooperadPresentation::dn_arity2(2, F2).unwrap();
        let out = hopf_pairing(&d2, &sphere_class_cocycle(&d2, 1), &g).unwrap();
        assert_eq!(out.value.value, 1);
        let s = g.source();
        let a = crate::chains::pullback(&g, F2, &Cochain::indicator(SimplexId::new(2, 0)));
        let ha = Contraction::canonical(s, F2).unwrap().h(&a);
        let expect = surjection_action(s, F2, &Surjection::cup(0), &[&a, &ha]).unwrap();
        assert_eq!(out.certificate.result, expect);
    }

    #[test]
    fn suspended_hopf_map_needs_two_steps() {
        let f = crate::models::hopf_map();
        let x = f.target().clone();
        let w = crate::models::suspended_triangle_generator(&x).unwrap();
        let sx = reduced_suspension(x);
        let id = sx.up(SimplexId::new(2, *w.coeffs.labels().next().unwrap())).unwrap();
        let d2 = CooperadPresentation::dn_arity2(2, F2).unwrap();
        let sw = Cochain::indicator(id);
        let omega = BarElement::word(F2, d2.bar_generator(0).unwrap(), &[&sw, &sw]);
        let ss = reduced_suspension(f.source().clone());
        let sf = suspend_map(&f, &ss, &sx).unwrap();
        let out = hopf_pairing(&d2, &omega, &sf).unwrap();
        assert_eq!(out.value.value, 1);
        let stages: Vec<(usize, i64)> = out.certificate.steps.iter().map(|s| (s.weight, s.en_degree)).collect();
        assert_eq!(stages, vec![(2, 2), (2, 1)]);
        let c = SimplicialMap::constant(ss.total().clone(), sx.total().clone());
        let r = suspension_relation_check(&CooperadPresentation::dn_arity2(1, F2).unwrap(), &d2, &omega, &sx, &SimplicialMap::constant(f.source().clone(), f.target().clone())).unwrap();
        assert!(r.holds());
        assert_eq!(r.suspended.value, 0);
        assert_eq!(hopf_pairing(&d2, &omega, &c).unwrap().value.value, 0);
    }

    #[test]
    fn weight_one_cocycles_lift_verbatim() {
        let s2 = Arc::new(minimal_sphere(2));
        let w = Cochain::indicator(SimplexId::new(2, 0));
        let tower = stable_lift(&BarElement::cochain(F2, &w), s2, 1, 3, F2).unwrap();
        let mut id = SimplexId::new(2, 0);
        for r in 1..=3 {
            id = tower.suspensions[r - 1].up(id).unwrap();
            assert_eq!(tower.lifts[r], BarElement::cochain(F2, &Cochain::indicator(id)));
        }
        let c = SimplicialMap::constant(Arc::new(minimal_sphere(3)), tower.space(0).clone());
        assert_eq!(stable_pairing(&tower, &c, 2).unwrap().value, 0);
    }

    #[test]
    fn whitehead_product_is_obstructed() {
        let (x, a, b) = crate::models::sphere_wedge();
        let d1 = CooperadPresentation::dn_arity2(1, F2).unwrap();
        let omega = BarElement::word(F2, d1.bar_generator(0).unwrap(), &[&a, &b]);
        assert_eq!(stable_lift(&omega, Arc::new(x), 1, 2, F2).unwrap_err(), HopfError::Obstruction { level: 1 });
    }

    #[test]
    fn independence_on_weight_one() {
        let s = Arc::new(boundary_sphere(2));
        let d1 = CooperadPresentation::dn_arity2(1, F2).unwrap();
        let top = Cochain::indicator(SimplexId::new(2, 0));
        let f = SimplicialMap::identity(s);
        assert!(preimage_independence_test(&d1, &BarElement::cochain(F2, &top), &f, 5, 1).unwrap());
    }
}
