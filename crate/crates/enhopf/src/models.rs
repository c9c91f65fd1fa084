//! Bundled spaces and maps: a simplicial Hopf map `S³ → ΣC_3` and its
//! composite with the collapse `ΣC_3 → 𝔖²`.
//!
//! The source is the join `C_3 * C_3`, triangulated as the double mapping
//! cylinder of the two projections of a 3×3 torus. A torus vertex `(i, j)` goes
//! to the circle vertex `i - j mod 3`, the first join factor to the south pole and
//! the second to the north pole.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::chains::Cochain;
use crate::simp::{DegeneracyWord, SimpError, SimplexId, SimplexRef, SimplicialMap, SimplicialSet, minimal_sphere, wedge};

const K: usize = 3;

/// `ΣC_3`: vertices `0,1,2` on the equator, `3` the south and `4` the north pole.
pub fn suspended_triangle() -> SimplicialSet {
    let mut facets = Vec::new();
    for i in 0..K {
        let j = (i + 1) % K;
        for pole in [K, K + 1] {
            facets.push(vec![i.min(j), i.max(j), pole]);
        }
    }
    SimplicialSet::from_facets(K + 2, &facets, 0).expect("suspended triangle")
}

fn join_facets() -> (Vec<Vec<usize>>, Vec<usize>) {
    let mu = |(i, j): (usize, usize)| (i + K - j) % K;
    let mut torus: Vec<(usize, usize)> = (0..K).flat_map(|i| (0..K).map(move |j| (i, j))).collect();
    torus.sort_by_key(|&v| (mu(v), v));
    let index = |v: (usize, usize)| torus.iter().position(|&t| t == v).expect("torus vertex");
    let (a, b) = (|i: usize| K * K + i, |j: usize| K * K + K + j);
    let mut triangles = Vec::new();
    for i in 0..K {
        for j in 0..K {
            let (i1, j1) = ((i + 1) % K, (j + 1) % K);
            triangles.push([(i, j), (i1, j), (i1, j1)]);
            triangles.push([(i, j), (i, j1), (i1, j1)]);
        }
    }
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for t in &triangles {
        let mut vs = t.to_vec();
        vs.sort_by_key(|&v| index(v));
        for side in 0..2 {
            let project = |v: (usize, usize)| if side == 0 { a(v.0) } else { b(v.1) };
            for i in 0..3 {
                let mut s: BTreeSet<usize> = vs[..=i].iter().map(|&v| index(v)).collect();
                s.extend(vs[i..].iter().map(|&v| project(v)));
                facets.insert(s.into_iter().collect());
            }
        }
    }
    let maximal: Vec<Vec<usize>> = facets
        .iter()
        .filter(|f| !facets.iter().any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v))))
        .cloned()
        .collect();
    let mut vertex_map = vec![0; K * K + 2 * K];
    for (n, &v) in torus.iter().enumerate() {
        vertex_map[n] = mu(v);
    }
    for i in 0..K {
        vertex_map[a(i)] = K;
        vertex_map[b(i)] = K + 1;
    }
    (maximal, vertex_map)
}

/// The triangulated 3-sphere `C_3 * C_3` (15 vertices, 63 tetrahedra).
pub fn hopf_source() -> SimplicialSet {
    let (facets, map) = join_facets();
    SimplicialSet::from_facets(map.len(), &facets, 0).expect("join of two triangles")
}

/// The simplicial Hopf map `S³ → ΣC_3`.
pub fn hopf_map() -> SimplicialMap {
    let (facets, map) = join_facets();
    let source = Arc::new(SimplicialSet::from_facets(map.len(), &facets, 0).expect("join of two triangles"));
    SimplicialMap::from_vertex_map(source, Arc::new(suspended_triangle()), &map).expect("monotone vertex map")
}

/// The cocycle dual to the triangle `0,1,3` of `ΣC_3`, a generator of `H²`.
pub fn suspended_triangle_generator(x: &SimplicialSet) -> Result<Cochain, SimpError> {
    Ok(Cochain::indicator(x.id("0,1,3")?))
}

/// `ΣC_3 → 𝔖²` collapsing everything except the triangle `0,1,3`.
pub fn collapse_to_sphere(x: Arc<SimplicialSet>) -> Result<SimplicialMap, SimpError> {
    let sphere = Arc::new(minimal_sphere(2));
    let kept = x.id("0,1,3")?;
    let star = sphere.basepoint();
    let sigma = SimplexId::new(2, 0);
    let images = (0..=x.dim())
        .map(|q| {
            x.ids(q)
                .map(|id| if id == kept { SimplexRef::nondegenerate(sigma) } else { SimplexRef::new(star, DegeneracyWord::total(q)) })
                .collect()
        })
        .collect();
    SimplicialMap::new(x, sphere, images)
}

/// The Hopf map composed with the collapse, `S³ → 𝔖²`.
pub fn hopf_map_to_minimal_sphere() -> Result<SimplicialMap, SimpError> {
    let h = hopf_map();
    let c = collapse_to_sphere(h.target().clone())?;
    h.then(&c)
}

/// `𝔖² ∨ 𝔖²` with the two dual fundamental cocycles.
pub fn sphere_wedge() -> (SimplicialSet, Cochain, Cochain) {
    let s = minimal_sphere(2);
    let w = wedge(&s, &s);
    let a = Cochain::indicator(w.id("a:sigma").expect("first summand"));
    let b = Cochain::indicator(w.id("b:sigma").expect("second summand"));
    (w, a, b)
}
