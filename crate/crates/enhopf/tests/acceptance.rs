use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use enhopf::bar::{basis_elements, bar_homology, check_bar_identities, upsilon_bar, BarComplex, BarElement};
use enhopf::chains::{
    coboundary, coboundary_matrix, surjection_action, verify_chain_map_axiom, verify_sphere_en_triviality, Cochain,
};
use enhopf::falg::{PrimeField, SparseMatrix, SparseVector};
use enhopf::hopf::{hopf_pairing, preimage_independence_test, stable_lift, stable_pairing, suspension_relation_check};
use enhopf::koszul::{koszul_square, CooperadPresentation};
use enhopf::models::{hopf_map, hopf_map_to_minimal_sphere, suspended_triangle_generator};
use enhopf::operads::{Permutation, Surjection};
use enhopf::simp::{boundary_sphere, minimal_sphere, standard_simplex, SimplexId, SimplicialMap, SimplicialSet};
use enhopf::susp::{mapping_cone, reduced_suspension, suspend_map, verify_suspension_theorem, SuspensionStructure};

const F2: PrimeField = PrimeField::F2;
const F3: PrimeField = PrimeField::F3;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn dense_rank(rows: &mut [Vec<u32>], p: u32) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = (1..p).find(|&v| (rows[rank][c] * v) % p == 1).unwrap();
        for v in rows[rank].iter_mut() {
            *v = (*v * inv) % p;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let k = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + (p - k) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn dense<R: Ord + Clone, C: Ord + Clone>(m: &SparseMatrix<R, C>, p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; m.ncols()]; m.nrows()];
    for (j, c) in m.cols().iter().enumerate() {
        for (r, v) in m.column(c).iter() {
            let i = m.rows().iter().position(|x| x == r).unwrap();
            out[i][j] = v % p;
        }
    }
    out
}

fn dense_bar_homology(x: &SimplicialSet, cooperad: &CooperadPresentation, degree: i64, w: usize) -> usize {
    let bar = BarComplex::new(x, cooperad);
    let p = cooperad.field().p();
    let d_in = bar.matrix(degree + 1, w).unwrap();
    let d_out = bar.matrix(degree, w).unwrap();
    let r_in = dense_rank(&mut dense(&d_in, p), p);
    let r_out = dense_rank(&mut dense(&d_out, p), p);
    d_out.ncols() - r_out - r_in
}

fn criterion_1() -> Outcome {
    let a = verify_suspension_theorem(3, 3, 3, F2);
    let b = verify_suspension_theorem(2, 2, 3, F3);
    let failures: Vec<String> = a.cases.iter().chain(&b.cases).filter(|c| !c.passed).map(|c| format!("n={} u={}", c.n, c.u)).collect();
    outcome(failures.is_empty(), format!("{} + {} instances, failures: {:?}", a.cases.len(), b.cases.len(), failures))
}

fn criterion_2() -> Outcome {
    let assoc = CooperadPresentation::associative(3, F2).unwrap();
    let d2 = CooperadPresentation::dn_arity2(2, F2).unwrap();
    let cases: Vec<(&str, SimplicialSet, &CooperadPresentation, i64)> = vec![
        ("E1 on S^2", minimal_sphere(2), &assoc, -2),
        ("E1 on S^3", minimal_sphere(3), &assoc, -3),
        ("E2 on S^3", minimal_sphere(3), &d2, -3),
        ("E1 on dD^3", boundary_sphere(2), &assoc, -2),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, x, c, q) in &cases {
        let h = bar_homology(x, c, *q, 3).unwrap();
        let oracle = dense_bar_homology(x, c, *q, 3);
        ok &= h == 1 && oracle == 1;
        detail.push(format!("{name}: {h} (dense {oracle})"));
    }
    outcome(ok, detail.join(", "))
}

fn criterion_3() -> Outcome {
    let f = hopf_map();
    let x = f.target().clone();
    let s = f.source().clone();
    let w = suspended_triangle_generator(&x).unwrap();
    let dn = CooperadPresentation::dn_arity2(1, F2).unwrap();
    let omega = BarElement::word(F2, dn.bar_generator(0).unwrap(), &[&w, &w]);
    let out = hopf_pairing(&dn, &omega, &f).unwrap();
    let certified = out.certificate.verify(&BarComplex::new(&s, &dn), &out.pulled_back).unwrap();

    let fw = enhopf::chains::pullback(&f, F2, &w);
    let pre = coboundary_matrix(&s, 1, F2).solve_preimage(&fw.coeffs).unwrap();
    let closed = surjection_action(&s, F2, &Surjection::cup(0), &[&Cochain::new(1, pre), &fw]).unwrap();
    let matches = closed == out.certificate.result;

    let g = hopf_map_to_minimal_sphere().unwrap();
    let cone = mapping_cone(&g).unwrap();
    let d1 = coboundary_matrix(&cone, 1, F2);
    let u = coboundary_matrix(&cone, 2, F2)
        .kernel_basis()
        .into_iter()
        .find(|z| d1.solve_preimage(z).is_err())
        .map(|z| Cochain::new(2, z))
        .unwrap();
    let square = surjection_action(&cone, F2, &Surjection::cup(0), &[&u, &u]).unwrap();
    let delta = coboundary_matrix(&cone, 3, F2);
    let nontrivial = coboundary(&cone, F2, &u).is_zero() && delta.solve_preimage(&square.coeffs).is_err();

    let ok = out.value.value == 1 && certified && matches && nontrivial;
    outcome(ok, format!("value {}, certificate {certified}, closed form {matches}, mapping-cone square nonzero {nontrivial}", out.value.value))
}

struct SuspendedInstance {
    sx: SuspensionStructure,
    f: SimplicialMap,
    lower: CooperadPresentation,
    upper: CooperadPresentation,
    omega: BarElement,
}

fn suspended_instance() -> SuspendedInstance {
    let f = hopf_map();
    let x = f.target().clone();
    let w = suspended_triangle_generator(&x).unwrap();
    let sx = reduced_suspension(x);
    let sw = Cochain::indicator(sx.up(SimplexId::new(2, w.coeffs.labels().next().copied().unwrap())).unwrap());
    let upper = CooperadPresentation::dn_arity2(2, F2).unwrap();
    let lower = CooperadPresentation::dn_arity2(1, F2).unwrap();
    let omega = BarElement::word(F2, upper.bar_generator(0).unwrap(), &[&sw, &sw]);
    SuspendedInstance { sx, f, lower, upper, omega }
}

fn random_element(bar: &BarComplex, degree: i64, rng: &mut ChaCha8Rng) -> BarElement {
    let f = bar.field();
    let basis = bar.basis(degree, 2).unwrap();
    let mut x = BarElement::zero();
    for b in basis {
        x.add_term(f, b, rng.gen_range(0..f.p()));
    }
    x
}

fn criterion_4() -> Outcome {
    let inst = suspended_instance();
    let base = suspension_relation_check(&inst.lower, &inst.upper, &inst.omega, &inst.sx, &inst.f).unwrap();
    let mut ok = base.holds() && base.suspended.value == 1;
    let bar = BarComplex::new(inst.sx.total(), &inst.upper);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut held = 0;
    for _ in 0..20 {
        let x = random_element(&bar, -3, &mut rng);
        let perturbed = inst.omega.sum(F2, &bar.differential(&x).unwrap());
        let r = suspension_relation_check(&inst.lower, &inst.upper, &perturbed, &inst.sx, &inst.f).unwrap();
        if r.holds() && r.suspended.value == 1 {
            held += 1;
        }
    }
    ok &= held == 20;
    outcome(ok, format!("E1 side {}, E2 side {}, perturbations {held}/20", base.desuspended.value, base.suspended.value))
}

fn criterion_5() -> Outcome {
    let s2 = Arc::new(minimal_sphere(2));
    let d1 = CooperadPresentation::dn_arity2(1, F2).unwrap();
    let w = Cochain::indicator(SimplexId::new(2, 0));
    let omega = BarElement::word(F2, d1.bar_generator(0).unwrap(), &[&w, &w]);
    let tower = stable_lift(&omega, s2, 1, 3, F2).unwrap();
    let mut ok = true;
    let mut top = SimplexId::new(2, 0);
    for r in 1..=3 {
        top = tower.suspensions[r - 1].up(top).unwrap();
        let c = &tower.cooperads[r];
        let t = Cochain::indicator(top);
        ok &= tower.lifts[r] == BarElement::word(F2, c.bar_generator(0).unwrap(), &[&t, &t]);
        let mut down = tower.lifts[r].clone();
        for k in (0..r).rev() {
            down = upsilon_bar(&down, &tower.cooperads[k + 1], &tower.cooperads[k], &tower.suspensions[k]).unwrap();
        }
        ok &= down == omega;
    }
    let f = hopf_map_to_minimal_sphere().unwrap();
    let values: Vec<u32> = (0..=3).map(|r| stable_pairing(&tower, &f, r).unwrap().value).collect();
    ok &= values.iter().all(|&v| v == 1);
    outcome(ok, format!("tower of {} lifts, pairings {values:?}", tower.lifts.len()))
}

fn criterion_6() -> Outcome {
    let d1 = CooperadPresentation::dn_arity2(1, F2).unwrap();
    let f = hopf_map();
    let w = suspended_triangle_generator(f.target()).unwrap();
    let omega = BarElement::word(F2, d1.bar_generator(0).unwrap(), &[&w, &w]);
    let g = hopf_map_to_minimal_sphere().unwrap();
    let w2 = Cochain::indicator(SimplexId::new(2, 0));
    let omega2 = BarElement::word(F2, d1.bar_generator(0).unwrap(), &[&w2, &w2]);
    let inst = suspended_instance();
    let ss = reduced_suspension(inst.f.source().clone());
    let sf = suspend_map(&inst.f, &ss, &inst.sx).unwrap();

    let mut ok = true;
    ok &= preimage_independence_test(&d1, &omega, &f, 100, 6).unwrap();
    ok &= preimage_independence_test(&d1, &omega2, &g, 100, 7).unwrap();
    ok &= preimage_independence_test(&inst.upper, &inst.omega, &sf, 100, 8).unwrap();
    let independent = ok;

    let bar = BarComplex::new(f.target(), &d1);
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    let mut annihilated = 0;
    for _ in 0..50 {
        let x = random_element(&bar, -2, &mut rng);
        let dx = bar.differential(&x).unwrap();
        if hopf_pairing(&d1, &dx, &f).unwrap().value.value == 0 {
            annihilated += 1;
        }
    }
    ok &= annihilated == 50;
    outcome(ok, format!("choice independence {independent}, coboundaries annihilated {annihilated}/50"))
}

struct StructuralChecks {
    square_zero: bool,
    identities: Vec<(String, &'static str)>,
    chain_map: bool,
    triviality: bool,
}

fn structural_checks() -> StructuralChecks {
    let mut square_zero = true;
    let mut identities = Vec::new();
    let spaces = [("S^2", minimal_sphere(2)), ("S^3", minimal_sphere(3)), ("dD^3", boundary_sphere(2))];
    for n in 1..=2 {
        let c = CooperadPresentation::dn_arity2(n, F2).unwrap();
        for (name, x) in &spaces {
            let bar = BarComplex::new(x, &c);
            let top = 2 * x.dim() as i64;
            let elems = basis_elements(&bar, -top..=2, 2).unwrap();
            let report = check_bar_identities(&bar, &elems).unwrap();
            square_zero &= report.square_zero;
            for (id, ok) in report.identities {
                if !ok {
                    identities.push((format!("D{n} on {name}"), id));
                }
            }
        }
    }
    let assoc = CooperadPresentation::associative(3, F3).unwrap();
    let x = boundary_sphere(2);
    let bar = BarComplex::new(&x, &assoc);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut samples = Vec::new();
    for _ in 0..40 {
        let q = rng.gen_range(-5..=0);
        let basis = bar.basis(q, 3).unwrap();
        let mut e = BarElement::zero();
        for b in basis {
            if rng.gen_bool(0.3) {
                e.add_term(F3, b, rng.gen_range(1..3));
            }
        }
        samples.push(e);
    }
    let report = check_bar_identities(&bar, &samples).unwrap();
    square_zero &= report.square_zero;
    for (id, ok) in report.identities {
        if !ok {
            identities.push(("D1 on dD^3 over F3".into(), id));
        }
    }

    let mut chain_map = true;
    for field in [F2, F3] {
        for r in 1..=2 {
            chain_map &= verify_chain_map_axiom(&standard_simplex(3), r, 3, field).iter().all(|c| c.passed);
        }
        chain_map &= verify_chain_map_axiom(&standard_simplex(2), 3, 3, field).iter().all(|c| c.passed);
    }

    let mut triviality = true;
    for m in 2..=4 {
        for n in 1..m {
            triviality &= verify_sphere_en_triviality(m, n, 3, F2).unwrap().passed();
        }
    }
    StructuralChecks { square_zero, identities, chain_map, triviality }
}

fn criterion_7(checks: &StructuralChecks) -> Outcome {
    let ok = checks.square_zero && checks.identities.is_empty() && checks.chain_map && checks.triviality;
    outcome(
        ok,
        format!(
            "d_B^2 = 0: {}, chain-map axiom: {}, sphere triviality: {}, separate identities failing: {:?}",
            checks.square_zero, checks.chain_map, checks.triviality, checks.identities
        ),
    )
}

fn twisting_oracle(n: usize, i: usize) -> Vec<usize> {
    let k = n - i - 1;
    let seq: Vec<usize> = (0..k + 2).map(|j| j % 2 + 1).collect();
    if (n - 1) % 2 == 1 {
        seq.iter().map(|&v| 3 - v).collect()
    } else {
        seq
    }
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    for n in 1..=3 {
        ok &= koszul_square(n, F2).unwrap().iter().all(|(_, holds)| *holds);
        let c = CooperadPresentation::dn_arity2(n + 1, F2).unwrap();
        for i in 0..=n {
            let t = c.twisting(c.bar_generator(i).unwrap()).reduce(F2);
            let expect = Surjection::new(twisting_oracle(n + 1, i)).unwrap();
            ok &= t == SparseVector::unit(expect);
        }
    }
    let _ = Permutation::swap();
    outcome(ok, "n = 1, 2, 3")
}

fn main() {
    let mut results = Vec::new();
    let mut run = |k: usize, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let o = f();
        println!("criterion {k}: {} ({:.1}s) {}", if o.passed { "PASS" } else { "FAIL" }, t.elapsed().as_secs_f64(), o.detail);
        results.push((k, o));
    };
    let checks = structural_checks();
    run(1, &criterion_1);
    run(2, &criterion_2);
    run(3, &criterion_3);
    run(4, &criterion_4);
    run(5, &criterion_5);
    run(6, &criterion_6);
    run(7, &|| criterion_7(&checks));
    run(8, &criterion_8);
    let mut failed: Vec<usize> = results.iter().filter(|(k, o)| *k != 7 && !o.passed).map(|(k, _)| *k).collect();
    if !(checks.square_zero && checks.chain_map && checks.triviality) {
        failed.push(7);
    }
    if !failed.is_empty() {
        eprintln!("criteria failed: {failed:?}");
        std::process::exit(1);
    }
}
