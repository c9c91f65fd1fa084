//! Surjection and Barratt–Eccles operad elements, differentials, filtrations
//! and the suspension morphisms σ.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::falg::{PrimeField, SparseVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("sequence {0:?} is not a surjection onto 1..r")]
    NotSurjective(Vec<usize>),
    #[error("sequence {0:?} has adjacent repeated values")]
    Degenerate(Vec<usize>),
    #[error("σ needs degree at least r-1 (arity {arity}, degree {degree})")]
    DegreeUnderflow { arity: usize, degree: usize },
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
}

/// A permutation of `0..r`, stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, OperadError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(OperadError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// From a one-line notation in `1..=r`.
    pub fn from_one_based(values: &[usize]) -> Result<Self, OperadError> {
        if values.contains(&0) {
            return Err(OperadError::NotAPermutation(values.to_vec()));
        }
        Permutation::new(values.iter().map(|v| v - 1).collect())
    }

    pub fn identity(r: usize) -> Self {
        Permutation((0..r).collect())
    }

    /// The transposition of `0` and `1` in `S_2`.
    pub fn swap() -> Self {
        Permutation(vec![1, 0])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn sign(&self) -> i64 {
        sequence_sign(&self.0)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        Permutation(inner.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[j] = i;
        }
        Permutation(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// All of `S_r` in lexicographic order.
    pub fn all(r: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; r];
        fn rec(r: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == r {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 0..r {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(r, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(r, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Sign of a sequence of distinct integers, or 0 if a value repeats.
pub fn sequence_sign(seq: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return 0;
            }
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Koszul sign of `word'[k] = word[perm[k]]` for items of the given degrees.
pub fn koszul_sign(perm: &Permutation, degrees: &[i64]) -> i64 {
    let p = perm.images();
    let mut sign = 1;
    for k in 0..p.len() {
        for l in k + 1..p.len() {
            if p[k] > p[l] && degrees[p[k]] % 2 != 0 && degrees[p[l]] % 2 != 0 {
                sign = -sign;
            }
        }
    }
    sign
}

/// Integer linear combination with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperadSum<T: Ord> {
    terms: BTreeMap<T, i64>,
}

impl<T: Ord> Default for OperadSum<T> {
    fn default() -> Self {
        OperadSum { terms: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> OperadSum<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(t: T, c: i64) -> Self {
        let mut s = Self::default();
        s.add(t, c);
        s
    }

    pub fn add(&mut self, t: T, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(t.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&t);
        }
    }

    pub fn add_sum(&mut self, other: &OperadSum<T>, c: i64) {
        for (t, &v) in &other.terms {
            self.add(t.clone(), c * v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, i64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &T) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn reduce(&self, field: PrimeField) -> SparseVector<T> {
        SparseVector::from_pairs(field, self.terms.iter().map(|(t, &c)| (t.clone(), c)))
    }
}

/// A nondegenerate surjection `{1..r+d} → {1..r}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    values: Vec<usize>,
    arity: usize,
}

impl Surjection {
    pub fn new(values: Vec<usize>) -> Result<Self, OperadError> {
        let arity = values.iter().copied().max().unwrap_or(0);
        if arity == 0 || values.contains(&0) || (1..=arity).any(|k| !values.contains(&k)) {
            return Err(OperadError::NotSurjective(values));
        }
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(OperadError::Degenerate(values));
        }
        Ok(Surjection { values, arity })
    }

    pub fn identity() -> Self {
        Surjection { values: vec![1], arity: 1 }
    }

    /// `(1,2,1,2,...)` of length `i+2`.
    pub fn cup(i: usize) -> Self {
        Surjection { values: (0..i + 2).map(|k| k % 2 + 1).collect(), arity: 2 }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.values.len() - self.arity
    }

    /// Maximal number of variations of a restriction to two values.
    pub fn complexity(&self) -> usize {
        let mut best = 0;
        for a in 1..=self.arity {
            for b in a + 1..=self.arity {
                let mut last = 0;
                let mut changes = 0usize;
                for &v in &self.values {
                    if v == a || v == b {
                        if last != 0 && last != v {
                            changes += 1;
                        }
                        last = v;
                    }
                }
                best = best.max(changes);
            }
        }
        best
    }

    /// Membership in the filtration stage `X_n`.
    pub fn in_filtration(&self, n: usize) -> bool {
        self.complexity() <= n
    }

    /// `i` is final when `u(i)` does not occur later.
    pub fn final_flags(&self) -> Vec<bool> {
        let v = &self.values;
        (0..v.len()).map(|i| !v[i + 1..].contains(&v[i])).collect()
    }

    pub fn differential(&self) -> OperadSum<Surjection> {
        let finals = self.final_flags();
        let mut caesura_index = vec![0usize; self.values.len()];
        let mut k = 0;
        for (i, &fin) in finals.iter().enumerate() {
            if !fin {
                caesura_index[i] = k;
                k += 1;
            }
        }
        let d = self.degree();
        let mut out = OperadSum::zero();
        for i in 0..self.values.len() {
            let value = self.values[i];
            if self.values.iter().filter(|&&v| v == value).count() == 1 {
                continue;
            }
            let mut v = self.values.clone();
            v.remove(i);
            if v.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let e = if finals[i] {
                let prev = (0..i).rev().find(|&j| self.values[j] == value).expect("value occurs earlier");
                caesura_index[prev] + 1
            } else {
                caesura_index[i]
            };
            let sign = if (e + d + 1).is_multiple_of(2) { 1 } else { -1 };
            out.add(Surjection { values: v, arity: self.arity }, sign);
        }
        out
    }

    /// `σ·u`: relabel values by the permutation.
    pub fn act(&self, perm: &Permutation) -> Result<Surjection, OperadError> {
        if perm.arity() != self.arity {
            return Err(OperadError::ArityMismatch { expected: self.arity, found: perm.arity() });
        }
        Ok(Surjection { values: self.values.iter().map(|&v| perm.apply(v - 1) + 1).collect(), arity: self.arity })
    }

    /// All nondegenerate surjections of the given arity and degree, lexicographically.
    pub fn all(arity: usize, degree: usize) -> Vec<Surjection> {
        let len = arity + degree;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        fn rec(arity: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Surjection>) {
            if cur.len() == len {
                if (1..=arity).all(|k| cur.contains(&k)) {
                    out.push(Surjection { values: cur.clone(), arity });
                }
                return;
            }
            for v in 1..=arity {
                if cur.last() != Some(&v) {
                    cur.push(v);
                    rec(arity, len, cur, out);
                    cur.pop();
                }
            }
        }
        if arity > 0 {
            rec(arity, len, &mut cur, &mut out);
        }
        out
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `σ(u) = sgn(u(1),...,u(r)) · (u(r),...,u(r+d))`.
pub fn sigma_surjection(u: &Surjection) -> Result<OperadSum<Surjection>, OperadError> {
    let (r, d) = (u.arity(), u.degree());
    if d + 1 < r {
        return Err(OperadError::DegreeUnderflow { arity: r, degree: d });
    }
    let sign = sequence_sign(&u.values()[..r]);
    if sign == 0 {
        return Ok(OperadSum::zero());
    }
    match Surjection::new(u.values()[r - 1..].to_vec()) {
        Ok(v) if v.arity() == r => Ok(OperadSum::single(v, sign)),
        _ => Ok(OperadSum::zero()),
    }
}

/// A tuple `(w_0,...,w_d)` of permutations with distinct neighbours.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarrattEcclesElement {
    perms: Vec<Permutation>,
}

impl BarrattEcclesElement {
    /// `None` when two adjacent permutations agree (the element is zero).
    pub fn new(perms: Vec<Permutation>) -> Result<Option<Self>, OperadError> {
        let Some(first) = perms.first() else {
            return Err(OperadError::ArityMismatch { expected: 1, found: 0 });
        };
        let r = first.arity();
        if let Some(p) = perms.iter().find(|p| p.arity() != r) {
            return Err(OperadError::ArityMismatch { expected: r, found: p.arity() });
        }
        if perms.windows(2).any(|w| w[0] == w[1]) {
            return Ok(None);
        }
        Ok(Some(BarrattEcclesElement { perms }))
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn arity(&self) -> usize {
        self.perms[0].arity()
    }

    pub fn degree(&self) -> usize {
        self.perms.len() - 1
    }

    pub fn differential(&self) -> OperadSum<BarrattEcclesElement> {
        let mut out = OperadSum::zero();
        if self.perms.len() < 2 {
            return out;
        }
        for i in 0..self.perms.len() {
            let mut p = self.perms.clone();
            p.remove(i);
            if let Ok(Some(e)) = BarrattEcclesElement::new(p) {
                out.add(e, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        out
    }
}

/// Sign of `(w_0(1),...,w_{r-1}(1))` as a permutation, or 0.
pub fn sgn_cochain(perms: &[Permutation]) -> i64 {
    let firsts: Vec<usize> = perms.iter().map(|w| w.apply(0)).collect();
    match perms.first() {
        Some(w) if perms.len() == w.arity() => sequence_sign(&firsts),
        _ => 0,
    }
}

/// `σ(w_0,...,w_d) = sgn(w_0,...,w_{r-1}) · (w_{r-1},...,w_d)`.
pub fn sigma_barratt_eccles(e: &BarrattEcclesElement) -> Result<OperadSum<BarrattEcclesElement>, OperadError> {
    let (r, d) = (e.arity(), e.degree());
    if d + 1 < r {
        return Err(OperadError::DegreeUnderflow { arity: r, degree: d });
    }
    let sign = sgn_cochain(&e.perms[..r]);
    if sign == 0 {
        return Ok(OperadSum::zero());
    }
    match BarrattEcclesElement::new(e.perms[r - 1..].to_vec())? {
        Some(t) => Ok(OperadSum::single(t, sign)),
        None => Ok(OperadSum::zero()),
    }
}
