//! Reduced suspension, mapping cones, the map ψ: Δ^{n+1} → ΣΔ^n, the
//! identification of cochains on ΣX with desuspended cochains on X, and the
//! suspension theorem checker.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::chains::{cells, interval_cut_coproduct, surjection_action, Chain, ChainError, Cochain};
use crate::falg::{PrimeField, SparseVector};
use crate::operads::{sigma_surjection, OperadError, Surjection};
use crate::simp::{disjoint_basepoint, standard_simplex, vertex_name, SimpError, SimplexId, SimplexRef, SimplicialMap, SimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuspError {
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Simp(#[from] SimpError),
    #[error("map does not match the given suspension structures")]
    Mismatch,
}

/// `ΣX` together with the correspondence `x ↦ (x,1)`.
#[derive(Debug, Clone)]
pub struct SuspensionStructure {
    base: Arc<SimplicialSet>,
    total: Arc<SimplicialSet>,
    up: Vec<Vec<Option<usize>>>,
    down: Vec<Vec<Option<SimplexId>>>,
}

pub fn reduced_suspension(x: Arc<SimplicialSet>) -> SuspensionStructure {
    let mut b = SimplicialSet::builder();
    let star = b.add(x.name(x.basepoint()), 0, Vec::new()).expect("fresh name");
    b.set_basepoint(star).expect("vertex");
    let mut up: Vec<Vec<Option<usize>>> = (0..=x.dim()).map(|q| vec![None; x.count(q)]).collect();
    let base_simplex = |q: usize| SimplexRef::new(star, crate::simp::DegeneracyWord::total(q));
    for q in 0..=x.dim() {
        for i in cells(&x, q) {
            let xr = SimplexRef::nondegenerate(SimplexId::new(q, i));
            let mut faces = vec![base_simplex(q)];
            if q == 0 {
                faces.push(base_simplex(0));
            } else {
                for k in 0..=q {
                    let y = x.face(&xr, k);
                    faces.push(if x.is_basepoint(y.base) {
                        base_simplex(q)
                    } else {
                        let id = up[y.base.dim][y.base.index].expect("faces precede cofaces");
                        SimplexRef::new(SimplexId::new(y.base.dim + 1, id), y.word.shifted())
                    });
                }
            }
            let id = b.add(format!("s({})", x.name(xr.base)), q + 1, faces).expect("suspension names are fresh");
            up[q][i] = Some(id.index);
        }
    }
    let total = b.build().expect("reduced suspension satisfies the simplicial identities");
    let mut down: Vec<Vec<Option<SimplexId>>> = (0..=total.dim()).map(|q| vec![None; total.count(q)]).collect();
    for (q, row) in up.iter().enumerate() {
        for (i, t) in row.iter().enumerate() {
            if let Some(t) = t {
                down[q + 1][*t] = Some(SimplexId::new(q, i));
            }
        }
    }
    SuspensionStructure { base: x, total: Arc::new(total), up, down }
}

impl SuspensionStructure {
    pub fn base(&self) -> &Arc<SimplicialSet> {
        &self.base
    }

    pub fn total(&self) -> &Arc<SimplicialSet> {
        &self.total
    }

    /// `x ↦ (x,1)` on nondegenerate non-basepoint simplices.
    pub fn up(&self, id: SimplexId) -> Option<SimplexId> {
        self.up.get(id.dim)?.get(id.index).copied().flatten().map(|i| SimplexId::new(id.dim + 1, i))
    }

    /// `(x,1) ↦ x`; `None` on the basepoint.
    pub fn down(&self, id: SimplexId) -> Option<SimplexId> {
        self.down.get(id.dim)?.get(id.index).copied().flatten()
    }

    /// `(y,1)` for an arbitrary simplex `y` of `X`.
    pub fn transport(&self, y: &SimplexRef) -> SimplexRef {
        if self.base.is_basepoint(y.base) {
            self.total.base_simplex(y.dim() + 1)
        } else {
            SimplexRef::new(self.up(y.base).expect("non-basepoint simplex"), y.word.shifted())
        }
    }

    /// `ϕ(s⁻¹α)(x,1) = α(x)`.
    pub fn phi_cochain(&self, alpha: &Cochain) -> Cochain {
        let coeffs = alpha.coeffs.iter().map(|(&i, c)| (self.up(SimplexId::new(alpha.dim, i)).expect("cells lift").index, c)).collect();
        Cochain::new(alpha.dim + 1, coeffs)
    }

    pub fn phi_inverse_cochain(&self, beta: &Cochain) -> Cochain {
        assert!(beta.dim >= 1);
        let coeffs = beta.coeffs.iter().map(|(&i, c)| (self.down(SimplexId::new(beta.dim, i)).expect("cells descend").index, c)).collect();
        Cochain::new(beta.dim - 1, coeffs)
    }

    /// `φ(s x) = (x,1)`.
    pub fn phi_chain(&self, c: &Chain) -> Chain {
        let coeffs = c.coeffs.iter().map(|(&i, a)| (self.up(SimplexId::new(c.dim, i)).expect("cells lift").index, a)).collect();
        Chain::new(c.dim + 1, coeffs)
    }
}

/// `Σ^1 X, Σ^2 X, ...`: entry `k` has base `Σ^k X` and total `Σ^{k+1} X`.
pub fn suspension_tower(x: Arc<SimplicialSet>, levels: usize) -> Vec<SuspensionStructure> {
    let mut out: Vec<SuspensionStructure> = Vec::with_capacity(levels);
    let mut cur = x;
    for _ in 0..levels {
        let s = reduced_suspension(cur);
        cur = s.total.clone();
        out.push(s);
    }
    out
}

/// `Σf: ΣX → ΣY`, `(x,1) ↦ (f(x),1)`.
pub fn suspend_map(f: &SimplicialMap, sx: &SuspensionStructure, sy: &SuspensionStructure) -> Result<SimplicialMap, SuspError> {
    if **f.source() != *sx.base || **f.target() != *sy.base {
        return Err(SuspError::Mismatch);
    }
    let total = &sx.total;
    let mut images = Vec::with_capacity(total.dim() + 1);
    for q in 0..=total.dim() {
        let row = total
            .ids(q)
            .map(|id| match sx.down(id) {
                None => SimplexRef::nondegenerate(sy.total.basepoint()),
                Some(x) => sy.transport(f.image(x)),
            })
            .collect();
        images.push(row);
    }
    Ok(SimplicialMap::new(sx.total.clone(), sy.total.clone(), images)?)
}

/// `ψ: Δ^{n+1} → Σ(Δ^n_+)`, with the suspension structure of the target.
pub fn psi_map(n: usize) -> (SimplicialMap, SuspensionStructure) {
    let source = Arc::new(standard_simplex(n + 1));
    let delta = standard_simplex(n);
    let s = reduced_suspension(Arc::new(disjoint_basepoint(&delta)));
    let base = s.base.clone();
    let mut images = Vec::new();
    for q in 0..=source.dim() {
        let row = source
            .ids(q)
            .map(|id| {
                let vs = source.vertex_list(id).expect("vertex names");
                if q >= 1 && vs[0] == 0 {
                    let x: Vec<usize> = vs[1..].iter().map(|v| v - 1).collect();
                    let xid = base.id(&vertex_name(&x)).expect("face of Δ^n");
                    SimplexRef::nondegenerate(s.up(xid).expect("not the basepoint"))
                } else {
                    s.total.base_simplex(q)
                }
            })
            .collect();
        images.push(row);
    }
    let f = SimplicialMap::new(source, s.total.clone(), images).expect("ψ is simplicial");
    (f, s)
}

/// `u(s⁻¹a_1,...,s⁻¹a_r) = ± s⁻¹σ(u)(a_1,...,a_r)` with sign
/// `sgn · (-1)^{|σ(u)| + Σ_k dim(a_k)(r-k)}`.
pub fn sigma_inverse_action(x: &SimplicialSet, field: PrimeField, u: &Surjection, alphas: &[&Cochain]) -> Result<Cochain, SuspError> {
    let sigma = sigma_surjection(u)?;
    let r = u.arity();
    if alphas.len() != r {
        return Err(ChainError::ArityMismatch { expected: r, found: alphas.len() }.into());
    }
    let shift = u.degree() + 1 - r;
    let total: usize = alphas.iter().map(|a| a.dim).sum();
    if total < shift {
        return Err(ChainError::DegreeMismatch { expected: -(shift as i64), found: -(total as i64) }.into());
    }
    let mut out = Cochain::zero(total - shift);
    let e: usize = shift + alphas.iter().enumerate().map(|(k, a)| a.dim * (r - 1 - k)).sum::<usize>();
    for (v, c) in sigma.iter() {
        let term = surjection_action(x, field, v, alphas)?;
        out = out.sum(field, &term.scaled(field, field.mul(field.reduce(c), field.sign(e as i64))));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionCase {
    pub n: usize,
    pub u: Surjection,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionReport {
    pub p: u32,
    pub cases: Vec<SuspensionCase>,
}

impl SuspensionReport {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

/// Compares `u((ι,1))` in `Σ(Δ^n_+)` with `φ^{⊗r}(σ(u)(ι))` for every
/// nondegenerate `u` within the bounds.
pub fn verify_suspension_theorem(n_max: usize, r_max: usize, d_max: usize, field: PrimeField) -> SuspensionReport {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        let (_, s) = psi_map(n);
        let top_base = s.base.id(&vertex_name(&(0..=n).collect::<Vec<_>>())).expect("top simplex");
        let top = SimplexRef::nondegenerate(s.up(top_base).expect("not the basepoint"));
        let iota = SimplexRef::nondegenerate(top_base);
        for r in 1..=r_max {
            for d in 0..=d_max {
                for u in Surjection::all(r, d) {
                    let lhs: SparseVector<Vec<SimplexId>> = SparseVector::from_pairs(
                        field,
                        interval_cut_coproduct(&s.total, &u, &top)
                            .into_iter()
                            .filter(|(w, _)| w.iter().all(|id| !s.total.is_basepoint(*id))),
                    );
                    let mut rhs: SparseVector<Vec<SimplexId>> = SparseVector::new();
                    if let Ok(sigma) = sigma_surjection(&u) {
                        let shift = (d + 1 - r) as i64;
                        for (v, sg) in sigma.iter() {
                            for (word, c) in interval_cut_coproduct(&s.base, v, &iota) {
                                let e = shift + word.iter().enumerate().map(|(k, x)| (x.dim * (r - 1 - k)) as i64).sum::<i64>();
                                let lifted: Vec<SimplexId> = word.iter().map(|x| s.up(*x).expect("faces of ι lift")).collect();
                                rhs.add_term(field, lifted, field.reduce(sg * c * if e % 2 == 0 { 1 } else { -1 }));
                            }
                        }
                    }
                    let diff = lhs.difference(field, &rhs);
                    let counterexample = diff.iter().next().map(|(w, _)| {
                        let names: Vec<&str> = w.iter().map(|id| s.total.name(*id)).collect();
                        format!("{} ⊗ ... : lhs {} rhs {}", names.join(" ⊗ "), lhs.get(w), rhs.get(w))
                    });
                    cases.push(SuspensionCase { n, u, passed: diff.is_empty(), counterexample });
                }
            }
        }
    }
    SuspensionReport { p: field.p(), cases }
}

/// The mapping cone `C_f = Y ∪_f CS` of a pointed map `f: S → Y`; cone
/// simplices are named `c(x)`.
pub fn mapping_cone(f: &SimplicialMap) -> Result<SimplicialSet, SuspError> {
    let (s, y) = (f.source(), f.target());
    let mut b = SimplicialSet::builder();
    for q in 0..=y.dim() {
        for id in y.ids(q) {
            b.add(y.name(id), q, y.faces(id).to_vec())?;
        }
    }
    b.set_basepoint(y.basepoint())?;
    let mut cone: BTreeMap<SimplexId, SimplexId> = BTreeMap::new();
    for q in 0..=s.dim() {
        for i in cells(s, q) {
            let id = SimplexId::new(q, i);
            let xr = SimplexRef::nondegenerate(id);
            let mut faces = vec![f.image(id).clone()];
            if q == 0 {
                faces.push(SimplexRef::nondegenerate(y.basepoint()));
            } else {
                for k in 0..=q {
                    let z = s.face(&xr, k);
                    faces.push(if s.is_basepoint(z.base) {
                        y.base_simplex(q)
                    } else {
                        SimplexRef::new(cone[&z.base], z.word.shifted())
                    });
                }
            }
            let c = b.add(format!("c({})", s.name(id)), q + 1, faces)?;
            cone.insert(id, c);
        }
    }
    Ok(b.build()?)
}
