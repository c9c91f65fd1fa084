//! Finite simplicial sets presented by their nondegenerate simplices.
//!
//! A degenerate simplex is written `s_{j_1} ... s_{j_k} x` with
//! `j_1 > ... > j_k` and `x` nondegenerate; faces of nondegenerate simplices
//! are stored in that normal form and everything else is computed from the
//! simplicial identities.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::chains;
use crate::falg::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimpError {
    #[error("unknown simplex {0}")]
    UnknownSimplex(String),
    #[error("duplicate simplex name {0}")]
    DuplicateName(String),
    #[error("degeneracy word {0:?} is not strictly decreasing")]
    NotNormalForm(Vec<usize>),
    #[error("simplex {simplex}: {reason}")]
    BadFace { simplex: String, reason: String },
    #[error("simplicial identity d_{i} d_{j} = d_{} d_{i} fails on {simplex}", .j - 1)]
    IdentityViolated { simplex: String, i: usize, j: usize },
    #[error("basepoint must be a 0-simplex")]
    BadBasepoint,
    #[error("map is not simplicial: {0}")]
    NotSimplicial(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

impl SimplexId {
    pub fn new(dim: usize, index: usize) -> Self {
        SimplexId { dim, index }
    }
}

/// Strictly decreasing degeneracy indices, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DegeneracyWord(Vec<usize>);

impl DegeneracyWord {
    pub fn empty() -> Self {
        DegeneracyWord(Vec::new())
    }

    pub fn new(indices: Vec<usize>) -> Result<Self, SimpError> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(SimpError::NotNormalForm(indices));
        }
        Ok(DegeneracyWord(indices))
    }

    /// `s_{k-1} ... s_0`, the word of the unique `k`-simplex over a vertex.
    pub fn total(k: usize) -> Self {
        DegeneracyWord((0..k).rev().collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Normal form of `s_j ∘ self`.
    pub fn prepend(&self, j: usize) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut pending = Some(j);
        for &i in &self.0 {
            match pending {
                Some(j) if j > i => {
                    out.push(j);
                    out.push(i);
                    pending = None;
                }
                Some(_) => out.push(i + 1),
                None => out.push(i),
            }
        }
        if let Some(j) = pending {
            out.push(j);
        }
        DegeneracyWord(out)
    }

    /// Normal form of `outer ∘ self`.
    pub fn then(&self, outer: &DegeneracyWord) -> Self {
        outer.0.iter().rev().fold(self.clone(), |w, &j| w.prepend(j))
    }

    /// Shifts every index by one, as for `(s_w y, 1) = s_{w+1} (y, 1)` in a cone.
    pub fn shifted(&self) -> Self {
        DegeneracyWord(self.0.iter().map(|j| j + 1).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexRef {
    pub base: SimplexId,
    pub word: DegeneracyWord,
}

impl SimplexRef {
    pub fn nondegenerate(base: SimplexId) -> Self {
        SimplexRef { base, word: DegeneracyWord::empty() }
    }

    pub fn new(base: SimplexId, word: DegeneracyWord) -> Self {
        SimplexRef { base, word }
    }

    pub fn dim(&self) -> usize {
        self.base.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }
}

/// A finite pointed simplicial set.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<SimplexRef>>>,
    basepoint: usize,
    lookup: HashMap<String, SimplexId>,
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("counts", &self.counts())
            .field("basepoint", &self.names[0][self.basepoint])
            .finish()
    }
}

#[derive(Debug, Default)]
pub struct SimplicialSetBuilder {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<SimplexRef>>>,
    basepoint: Option<usize>,
    lookup: HashMap<String, SimplexId>,
}

impl SimplicialSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: impl Into<String>, dim: usize, faces: Vec<SimplexRef>) -> Result<SimplexId, SimpError> {
        let name = name.into();
        if self.lookup.contains_key(&name) {
            return Err(SimpError::DuplicateName(name));
        }
        let expected = if dim == 0 { 0 } else { dim + 1 };
        if faces.len() != expected {
            return Err(SimpError::BadFace { simplex: name, reason: format!("expected {expected} faces, got {}", faces.len()) });
        }
        for f in &faces {
            if f.dim() + 1 != dim {
                return Err(SimpError::BadFace { simplex: name, reason: format!("face of dimension {}", f.dim()) });
            }
            let known = self.names.get(f.base.dim).is_some_and(|v| f.base.index < v.len());
            if !known {
                return Err(SimpError::BadFace { simplex: name, reason: "face refers to an unknown simplex".into() });
            }
        }
        while self.names.len() <= dim {
            self.names.push(Vec::new());
            self.faces.push(Vec::new());
        }
        let id = SimplexId::new(dim, self.names[dim].len());
        self.names[dim].push(name.clone());
        self.faces[dim].push(faces);
        self.lookup.insert(name, id);
        Ok(id)
    }

    pub fn id(&self, name: &str) -> Option<SimplexId> {
        self.lookup.get(name).copied()
    }

    pub fn set_basepoint(&mut self, id: SimplexId) -> Result<(), SimpError> {
        if id.dim != 0 {
            return Err(SimpError::BadBasepoint);
        }
        self.basepoint = Some(id.index);
        Ok(())
    }

    pub fn build(self) -> Result<SimplicialSet, SimpError> {
        let basepoint = self.basepoint.ok_or(SimpError::BadBasepoint)?;
        let mut names = self.names;
        let mut faces = self.faces;
        while names.last().is_some_and(|v| v.is_empty()) {
            names.pop();
            faces.pop();
        }
        let x = SimplicialSet { names, faces, basepoint, lookup: self.lookup };
        x.validate()?;
        Ok(x)
    }
}

impl SimplicialSet {
    pub fn builder() -> SimplicialSetBuilder {
        SimplicialSetBuilder::new()
    }

    /// Highest dimension carrying a nondegenerate simplex.
    pub fn dim(&self) -> usize {
        self.names.len().saturating_sub(1)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.names.get(dim).map_or(0, |v| v.len())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.names.iter().map(|v| v.len()).collect()
    }

    pub fn ids(&self, dim: usize) -> impl Iterator<Item = SimplexId> {
        (0..self.count(dim)).map(move |i| SimplexId::new(dim, i))
    }

    pub fn name(&self, id: SimplexId) -> &str {
        &self.names[id.dim][id.index]
    }

    pub fn id(&self, name: &str) -> Result<SimplexId, SimpError> {
        self.lookup.get(name).copied().ok_or_else(|| SimpError::UnknownSimplex(name.to_string()))
    }

    pub fn contains(&self, id: SimplexId) -> bool {
        id.index < self.count(id.dim)
    }

    pub fn basepoint(&self) -> SimplexId {
        SimplexId::new(0, self.basepoint)
    }

    pub fn is_basepoint(&self, id: SimplexId) -> bool {
        id.dim == 0 && id.index == self.basepoint
    }

    /// The basepoint degenerated to dimension `dim`.
    pub fn base_simplex(&self, dim: usize) -> SimplexRef {
        SimplexRef::new(self.basepoint(), DegeneracyWord::total(dim))
    }

    pub fn faces(&self, id: SimplexId) -> &[SimplexRef] {
        &self.faces[id.dim][id.index]
    }

    /// `d_i x` in normal form.
    pub fn face(&self, x: &SimplexRef, i: usize) -> SimplexRef {
        assert!(x.dim() >= 1 && i <= x.dim(), "face d_{i} of a {}-simplex", x.dim());
        let word = x.word.indices();
        let mut outer = Vec::new();
        let mut i = i;
        for (pos, &j) in word.iter().enumerate() {
            if i < j {
                outer.push(j - 1);
            } else if i == j || i == j + 1 {
                let rest = DegeneracyWord(word[pos + 1..].to_vec());
                return SimplexRef::new(x.base, rest.then(&DegeneracyWord(outer)));
            } else {
                outer.push(j);
                i -= 1;
            }
        }
        let f = &self.faces[x.base.dim][x.base.index][i];
        SimplexRef::new(f.base, f.word.then(&DegeneracyWord(outer)))
    }

    /// `s_j x` in normal form.
    pub fn degenerate(&self, x: &SimplexRef, j: usize) -> SimplexRef {
        assert!(j <= x.dim(), "degeneracy s_{j} of a {}-simplex", x.dim());
        SimplexRef::new(x.base, x.word.prepend(j))
    }

    /// The face of `x` spanned by the given increasing vertex positions.
    pub fn subsimplex(&self, x: &SimplexRef, vertices: &[usize]) -> SimplexRef {
        let n = x.dim();
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]) && vertices.last().is_none_or(|&v| v <= n));
        let mut out = x.clone();
        let mut keep = vertices.iter().rev().peekable();
        for v in (0..=n).rev() {
            if keep.peek() == Some(&&v) {
                keep.next();
            } else {
                out = self.face(&out, v);
            }
        }
        out
    }

    /// The vertex at position `k` of `x`.
    pub fn vertex(&self, x: &SimplexRef, k: usize) -> SimplexId {
        self.subsimplex(x, &[k]).base
    }

    fn validate(&self) -> Result<(), SimpError> {
        for dim in 2..self.names.len() {
            for id in self.ids(dim) {
                let x = SimplexRef::nondegenerate(id);
                for j in 1..=dim {
                    let dj = self.face(&x, j);
                    for i in 0..j {
                        let di = self.face(&x, i);
                        if self.face(&dj, i) != self.face(&di, j - 1) {
                            return Err(SimpError::IdentityViolated { simplex: self.name(id).to_string(), i, j });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Ordered simplicial complex on vertices `0..nvertices` generated by `facets`.
    ///
    /// Simplices are named by their comma-separated vertex lists and listed in
    /// lexicographic order within each dimension.
    pub fn from_facets(nvertices: usize, facets: &[Vec<usize>], basepoint: usize) -> Result<Self, SimpError> {
        let mut all: Vec<std::collections::BTreeSet<Vec<usize>>> = Vec::new();
        let mut add = |s: Vec<usize>| {
            let d = s.len() - 1;
            while all.len() <= d {
                all.push(Default::default());
            }
            all[d].insert(s);
        };
        for v in 0..nvertices {
            add(vec![v]);
        }
        for facet in facets {
            let mut f = facet.clone();
            f.sort();
            f.dedup();
            if f.iter().any(|&v| v >= nvertices) {
                return Err(SimpError::UnknownSimplex(vertex_name(&f)));
            }
            for mask in 1u64..(1u64 << f.len()) {
                add(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
            }
        }
        let mut b = SimplicialSet::builder();
        for level in &all {
            for s in level {
                let faces = if s.len() == 1 {
                    Vec::new()
                } else {
                    (0..s.len())
                        .map(|i| {
                            let mut t = s.clone();
                            t.remove(i);
                            SimplexRef::nondegenerate(b.id(&vertex_name(&t)).expect("faces precede cofaces"))
                        })
                        .collect()
                };
                b.add(vertex_name(s), s.len() - 1, faces)?;
            }
        }
        let bp = b.id(&vertex_name(&[basepoint])).ok_or(SimpError::BadBasepoint)?;
        b.set_basepoint(bp)?;
        b.build()
    }

    /// Vertex list of a simplex of a complex built by [`SimplicialSet::from_facets`].
    pub fn vertex_list(&self, id: SimplexId) -> Option<Vec<usize>> {
        self.name(id).split(',').map(|t| t.parse().ok()).collect()
    }
}

pub fn vertex_name(vertices: &[usize]) -> String {
    vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

pub fn point() -> SimplicialSet {
    let mut b = SimplicialSet::builder();
    let p = b.add("*", 0, Vec::new()).expect("fresh name");
    b.set_basepoint(p).expect("vertex");
    b.build().expect("a point is a simplicial set")
}

/// Δ^n with basepoint 0.
pub fn standard_simplex(n: usize) -> SimplicialSet {
    SimplicialSet::from_facets(n + 1, &[(0..=n).collect()], 0).expect("standard simplex")
}

/// ∂Δ^{m+1} with basepoint 0.
pub fn boundary_sphere(m: usize) -> SimplicialSet {
    assert!(m >= 1);
    let facets: Vec<Vec<usize>> = (0..m + 2).map(|skip| (0..m + 2).filter(|&v| v != skip).collect()).collect();
    SimplicialSet::from_facets(m + 2, &facets, 0).expect("boundary sphere")
}

/// 𝔖^m: a basepoint and a single nondegenerate m-simplex.
pub fn minimal_sphere(m: usize) -> SimplicialSet {
    assert!(m >= 1);
    let mut b = SimplicialSet::builder();
    let p = b.add("*", 0, Vec::new()).expect("fresh name");
    let face = SimplexRef::new(p, DegeneracyWord::total(m - 1));
    b.add("sigma", m, vec![face; m + 1]).expect("fresh name");
    b.set_basepoint(p).expect("vertex");
    b.build().expect("minimal sphere")
}

/// `X` with an extra vertex `+` as new basepoint.
pub fn disjoint_basepoint(x: &SimplicialSet) -> SimplicialSet {
    let mut b = SimplicialSet::builder();
    for dim in 0..=x.dim() {
        for id in x.ids(dim) {
            b.add(x.name(id), dim, x.faces(id).to_vec()).expect("copy of a valid presentation");
        }
    }
    let plus = b.add("+", 0, Vec::new()).expect("fresh basepoint name");
    b.set_basepoint(plus).expect("vertex");
    b.build().expect("disjoint union with a point")
}

/// `X ∨ Y` along the basepoints; simplices are prefixed `a:` and `b:`.
pub fn wedge(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    let mut b = SimplicialSet::builder();
    let bp = b.add("*", 0, Vec::new()).expect("fresh name");
    for (prefix, z) in [("a:", x), ("b:", y)] {
        let mut index: HashMap<SimplexId, SimplexId> = HashMap::new();
        index.insert(z.basepoint(), bp);
        for dim in 0..=z.dim() {
            for id in z.ids(dim) {
                if z.is_basepoint(id) {
                    continue;
                }
                let faces = z.faces(id).iter().map(|f| SimplexRef::new(index[&f.base], f.word.clone())).collect();
                let new = b.add(format!("{prefix}{}", z.name(id)), dim, faces).expect("prefixed names are fresh");
                index.insert(id, new);
            }
        }
    }
    b.set_basepoint(bp).expect("vertex");
    b.build().expect("wedge of valid presentations")
}

/// Pointed simplicial map, given on nondegenerate source simplices.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    images: Vec<Vec<SimplexRef>>,
}

impl SimplicialMap {
    pub fn new(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, images: Vec<Vec<SimplexRef>>) -> Result<Self, SimpError> {
        let f = SimplicialMap { source, target, images };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(x: Arc<SimplicialSet>) -> Self {
        let images = (0..=x.dim()).map(|d| x.ids(d).map(SimplexRef::nondegenerate).collect()).collect();
        SimplicialMap { source: x.clone(), target: x, images }
    }

    pub fn constant(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>) -> Self {
        let images = (0..=source.dim()).map(|d| vec![target.base_simplex(d); source.count(d)]).collect();
        SimplicialMap { source, target, images }
    }

    /// Map between complexes built by [`SimplicialSet::from_facets`], induced by a
    /// vertex map that is weakly increasing along every source simplex.
    pub fn from_vertex_map(source: Arc<SimplicialSet>, target: Arc<SimplicialSet>, vertex_map: &[usize]) -> Result<Self, SimpError> {
        let mut images = Vec::new();
        for dim in 0..=source.dim() {
            let mut row = Vec::new();
            for id in source.ids(dim) {
                let vs = source
                    .vertex_list(id)
                    .ok_or_else(|| SimpError::NotSimplicial(format!("{} is not a vertex list", source.name(id))))?;
                let image: Vec<usize> = vs.iter().map(|&v| vertex_map[v]).collect();
                if image.windows(2).any(|w| w[0] > w[1]) {
                    return Err(SimpError::NotSimplicial(format!("vertex map not monotone on {}", source.name(id))));
                }
                let mut distinct = image.clone();
                distinct.dedup();
                let word: Vec<usize> = (0..image.len().saturating_sub(1)).rev().filter(|&j| image[j] == image[j + 1]).collect();
                let base = target.id(&vertex_name(&distinct))?;
                row.push(SimplexRef::new(base, DegeneracyWord(word)));
            }
            images.push(row);
        }
        SimplicialMap::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    pub fn image(&self, id: SimplexId) -> &SimplexRef {
        &self.images[id.dim][id.index]
    }

    pub fn images(&self) -> &[Vec<SimplexRef>] {
        &self.images
    }

    pub fn apply(&self, x: &SimplexRef) -> Result<SimplexRef, SimpError> {
        if !self.source.contains(x.base) {
            return Err(SimpError::UnknownSimplex(format!("{:?}", x.base)));
        }
        let y = self.image(x.base);
        Ok(SimplexRef::new(y.base, y.word.then(&x.word)))
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SimplicialMap) -> Result<SimplicialMap, SimpError> {
        if *self.target != *g.source {
            return Err(SimpError::NotSimplicial("composing maps with mismatched spaces".into()));
        }
        let images = self
            .images
            .iter()
            .map(|row| row.iter().map(|y| g.apply(y).expect("image lies in the target")).collect())
            .collect();
        SimplicialMap::new(self.source.clone(), g.target.clone(), images)
    }

    fn validate(&self) -> Result<(), SimpError> {
        let (s, t) = (&self.source, &self.target);
        if self.images.len() != s.dim() + 1 {
            return Err(SimpError::NotSimplicial("image table does not match source dimensions".into()));
        }
        for dim in 0..=s.dim() {
            if self.images[dim].len() != s.count(dim) {
                return Err(SimpError::NotSimplicial(format!("wrong number of images in dimension {dim}")));
            }
            for (i, y) in self.images[dim].iter().enumerate() {
                if !t.contains(y.base) || y.dim() != dim {
                    return Err(SimpError::NotSimplicial(format!("bad image for {}", s.name(SimplexId::new(dim, i)))));
                }
            }
        }
        if *self.image(s.basepoint()) != SimplexRef::nondegenerate(t.basepoint()) {
            return Err(SimpError::NotSimplicial("basepoint is not preserved".into()));
        }
        for dim in 1..=s.dim() {
            for id in s.ids(dim) {
                let x = SimplexRef::nondegenerate(id);
                for i in 0..=dim {
                    let lhs = self.apply(&s.face(&x, i))?;
                    let rhs = t.face(self.image(id), i);
                    if lhs != rhs {
                        return Err(SimpError::NotSimplicial(format!("d_{i} does not commute on {}", s.name(id))));
                    }
                }
            }
        }
        Ok(())
    }
}

/// True iff reduced homology over `field` is one-dimensional in degree `m` and zero elsewhere.
pub fn verify_homology_sphere(x: &SimplicialSet, m: usize, field: PrimeField) -> bool {
    let betti = chains::reduced_homology(x, field);
    m <= x.dim() && betti.iter().enumerate().all(|(q, &b)| b == usize::from(q == m))
}
