//! Explicit cooperad data driving bar constructions: the arity-2 part of
//! `D_n`, the associative cooperad, and user-supplied tables.
//!
//! Every arity-`w` component is a free `K[S_w]`-module on the listed
//! generators. A table entry `c·σ·g` means the generator `g` acted on by the
//! permutation `σ`.

use thiserror::Error;

use crate::falg::PrimeField;
use crate::operads::{sigma_surjection, OperadSum, Permutation, Surjection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KoszulError {
    #[error("D_n data is only available over F_2, not F_{0}")]
    UnsupportedCharacteristic(u32),
    #[error("cooperation |_{i} does not exist for n = {n}")]
    IndexOutOfRange { n: usize, i: usize },
    #[error("invalid cooperad data: {0}")]
    InvalidData(String),
}

pub type GenId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub arity: usize,
    pub degree: i64,
}

/// `coeff · perm · gen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermTerm {
    pub coeff: i64,
    pub perm: Permutation,
    pub gen: GenId,
}

/// `coeff · perm · (outer ∘_position inner)`, with `position` counted from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocompositionTerm {
    pub coeff: i64,
    pub perm: Permutation,
    pub outer: GenId,
    pub position: usize,
    pub inner: GenId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CooperadKind {
    Dn(usize),
    Associative,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CooperadPresentation {
    label: String,
    kind: CooperadKind,
    field: PrimeField,
    generators: Vec<Generator>,
    differential: Vec<Vec<PermTerm>>,
    cocomposition: Vec<Option<Vec<CocompositionTerm>>>,
    twisting: Vec<OperadSum<Surjection>>,
    max_arity: usize,
}

fn unit() -> Generator {
    Generator { label: "1".into(), arity: 1, degree: 0 }
}

impl CooperadPresentation {
    /// Arity-2 truncation of `D_n`: `|_i` of degree `n-i` for `0 ≤ i < n`.
    pub fn dn_arity2(n: usize, field: PrimeField) -> Result<Self, KoszulError> {
        if field.p() != 2 {
            return Err(KoszulError::UnsupportedCharacteristic(field.p()));
        }
        if n == 0 {
            return Err(KoszulError::IndexOutOfRange { n, i: 0 });
        }
        let mut generators = vec![unit()];
        let mut differential = vec![Vec::new()];
        let mut twisting = vec![OperadSum::zero()];
        for i in 0..n {
            generators.push(Generator { label: format!("bar_{i}"), arity: 2, degree: (n - i) as i64 });
            let d = if i + 1 < n {
                vec![
                    PermTerm { coeff: 1, perm: Permutation::identity(2), gen: i + 2 },
                    PermTerm { coeff: 1, perm: Permutation::swap(), gen: i + 2 },
                ]
            } else {
                Vec::new()
            };
            differential.push(d);
            let mut cup = Surjection::cup(n - i - 1);
            if (n - 1) % 2 == 1 {
                cup = cup.act(&Permutation::swap()).expect("arity 2");
            }
            twisting.push(OperadSum::single(cup, 1));
        }
        let cocomposition = vec![Some(Vec::new()); n + 1];
        let c = CooperadPresentation {
            label: format!("D{n}"),
            kind: CooperadKind::Dn(n),
            field,
            generators,
            differential,
            cocomposition,
            twisting,
            max_arity: 2,
        };
        c.validate()?;
        Ok(c)
    }

    /// The associative cooperad `μ_w` (degree `w-1`) for `2 ≤ w ≤ max_arity`.
    pub fn associative(max_arity: usize, field: PrimeField) -> Result<Self, KoszulError> {
        if max_arity < 2 {
            return Err(KoszulError::InvalidData("associative cooperad needs max_arity ≥ 2".into()));
        }
        let mut generators = vec![unit()];
        let mut cocomposition = vec![Some(Vec::new())];
        let mut twisting = vec![OperadSum::zero()];
        for w in 2..=max_arity {
            generators.push(Generator { label: format!("mu_{w}"), arity: w, degree: (w - 1) as i64 });
            let terms = if w == 2 {
                Vec::new()
            } else {
                (0..w - 1)
                    .map(|i| CocompositionTerm {
                        coeff: if i % 2 == 0 { 1 } else { -1 },
                        perm: Permutation::identity(w),
                        outer: w - 2,
                        position: i,
                        inner: 1,
                    })
                    .collect()
            };
            cocomposition.push(Some(terms));
            twisting.push(if w == 2 { OperadSum::single(Surjection::cup(0), 1) } else { OperadSum::zero() });
        }
        let c = CooperadPresentation {
            label: "associative".into(),
            kind: CooperadKind::Associative,
            field,
            differential: vec![Vec::new(); generators.len()],
            generators,
            cocomposition,
            twisting,
            max_arity,
        };
        c.validate()?;
        Ok(c)
    }

    /// User-supplied data. Generator 0 must be the arity-1 unit of degree 0;
    /// `None` in `cocomposition` marks missing rows.
    pub fn custom(
        label: String,
        field: PrimeField,
        generators: Vec<Generator>,
        differential: Vec<Vec<PermTerm>>,
        cocomposition: Vec<Option<Vec<CocompositionTerm>>>,
        twisting: Vec<OperadSum<Surjection>>,
    ) -> Result<Self, KoszulError> {
        let n = generators.len();
        if differential.len() != n || cocomposition.len() != n || twisting.len() != n {
            return Err(KoszulError::InvalidData("table lengths differ from the number of generators".into()));
        }
        let max_arity = generators.iter().map(|g| g.arity).max().unwrap_or(1);
        let c = CooperadPresentation { label, kind: CooperadKind::Custom, field, generators, differential, cocomposition, twisting, max_arity };
        c.validate()?;
        Ok(c)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> CooperadKind {
        self.kind
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, g: GenId) -> &Generator {
        &self.generators[g]
    }

    pub fn unit(&self) -> GenId {
        0
    }

    pub fn generators_of_arity(&self, w: usize) -> impl Iterator<Item = GenId> + '_ {
        (0..self.generators.len()).filter(move |&g| self.generators[g].arity == w)
    }

    pub fn differential(&self, g: GenId) -> &[PermTerm] {
        &self.differential[g]
    }

    pub fn cocomposition(&self, g: GenId) -> Option<&[CocompositionTerm]> {
        self.cocomposition[g].as_deref()
    }

    pub fn twisting(&self, g: GenId) -> &OperadSum<Surjection> {
        &self.twisting[g]
    }

    /// The generator standing for `|_i` (for associative data, `|_0 = μ_2`).
    pub fn bar_generator(&self, i: usize) -> Option<GenId> {
        match self.kind {
            CooperadKind::Dn(n) if i < n => Some(i + 1),
            CooperadKind::Associative if i == 0 => Some(1),
            _ => self.generators.iter().position(|g| g.label == format!("bar_{i}")),
        }
    }

    /// The index `i` with `g = |_i`, if any.
    pub fn bar_index(&self, g: GenId) -> Option<usize> {
        match self.kind {
            CooperadKind::Dn(_) if g >= 1 => Some(g - 1),
            CooperadKind::Associative if g == 1 => Some(0),
            _ => self.generators[g].label.strip_prefix("bar_").and_then(|s| s.parse().ok()),
        }
    }

    /// Degree window `(lo, hi]` of arity-`w` elements, when known.
    pub fn degree_window(&self, w: usize) -> Option<(i64, i64)> {
        let w = w as i64;
        match self.kind {
            CooperadKind::Dn(n) => {
                let n = n as i64;
                Some((n * (w - 1) * (2 - w) / 2, n * (w - 1)))
            }
            CooperadKind::Associative => Some((w - 2, w - 1)),
            CooperadKind::Custom => None,
        }
    }

    fn validate(&self) -> Result<(), KoszulError> {
        let bad = |m: String| Err(KoszulError::InvalidData(m));
        if self.generators.first() != Some(&unit()) {
            return bad("generator 0 must be the arity-1 unit of degree 0".into());
        }
        for (g, gen) in self.generators.iter().enumerate() {
            if gen.arity == 0 {
                return bad(format!("{} has arity 0", gen.label));
            }
            if g > 0 && gen.arity == 1 {
                return bad(format!("{} has arity 1; the cooperad must be connected", gen.label));
            }
            if let Some((lo, hi)) = self.degree_window(gen.arity) {
                if gen.arity > 1 && !(lo < gen.degree && gen.degree <= hi) {
                    return bad(format!("{} has degree {} outside ({lo}, {hi}]", gen.label, gen.degree));
                }
            }
            for t in &self.differential[g] {
                let target = self.generators.get(t.gen);
                if target.is_none_or(|h| h.arity != gen.arity || h.degree != gen.degree - 1) || t.perm.arity() != gen.arity {
                    return bad(format!("differential row of {} is inconsistent", gen.label));
                }
            }
            if let Some(rows) = &self.cocomposition[g] {
                for t in rows {
                    let (Some(o), Some(i)) = (self.generators.get(t.outer), self.generators.get(t.inner)) else {
                        return bad(format!("cocomposition row of {} names an unknown generator", gen.label));
                    };
                    if o.arity + i.arity != gen.arity + 1 || o.degree + i.degree != gen.degree || t.position >= o.arity || t.perm.arity() != gen.arity {
                        return bad(format!("cocomposition row of {} is inconsistent", gen.label));
                    }
                }
            }
            for (u, _) in self.twisting[g].iter() {
                if u.arity() != gen.arity || u.degree() as i64 != gen.degree - 1 {
                    return bad(format!("twisting value {u} of {} has the wrong arity or degree", gen.label));
                }
                if let CooperadKind::Dn(n) = self.kind {
                    if !u.in_filtration(n) {
                        return bad(format!("twisting value {u} of {} is not in X_{n}", gen.label));
                    }
                }
            }
        }
        for g in 0..self.generators.len() {
            let mut dd: OperadSum<(Permutation, GenId)> = OperadSum::zero();
            for t in &self.differential[g] {
                for s in &self.differential[t.gen] {
                    dd.add((t.perm.compose(&s.perm), s.gen), t.coeff * s.coeff);
                }
            }
            if !dd.reduce(self.field).is_empty() {
                return bad(format!("d² ≠ 0 on {}", self.generators[g].label));
            }
        }
        Ok(())
    }
}

/// `Υ(|_i^{(n+1)})`: `Some(i)` for `i < n`, `None` (zero) for `i = n`.
pub fn upsilon_arity2(n: usize, i: usize) -> Result<Option<usize>, KoszulError> {
    if n == 0 || i > n {
        return Err(KoszulError::IndexOutOfRange { n: n + 1, i });
    }
    Ok((i < n).then_some(i))
}

/// `σ(τ_{n+1}(|_i)) = τ_n(Υ(|_i))` for `0 ≤ i ≤ n`; terms where `σ` is
/// undefined count as zero. For `n = 1` the target is the associative `μ_2`.
pub fn koszul_square(n: usize, field: PrimeField) -> Result<Vec<(usize, bool)>, KoszulError> {
    let src = CooperadPresentation::dn_arity2(n + 1, field)?;
    let dst = if n == 1 { CooperadPresentation::associative(2, field)? } else { CooperadPresentation::dn_arity2(n, field)? };
    let mut out = Vec::new();
    for i in 0..=n {
        let mut lhs = OperadSum::zero();
        let g = src.bar_generator(i).ok_or(KoszulError::IndexOutOfRange { n: n + 1, i })?;
        for (u, c) in src.twisting(g).iter() {
            if let Ok(v) = sigma_surjection(u) {
                lhs.add_sum(&v, c);
            }
        }
        let rhs = match upsilon_arity2(n, i)? {
            Some(j) => dst.twisting(dst.bar_generator(j).ok_or(KoszulError::IndexOutOfRange { n, i: j })?).clone(),
            None => OperadSum::zero(),
        };
        out.push((i, lhs.reduce(field) == rhs.reduce(field)));
    }
    Ok(out)
}
