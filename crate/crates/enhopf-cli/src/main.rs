use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use enhopf::bar::{basis_elements, check_bar_identities, BarComplex};
use enhopf::chains::{verify_chain_map_axiom, verify_sphere_en_triviality, Cochain};
use enhopf::falg::PrimeField;
use enhopf::hopf::{hopf_pairing, preimage_independence_test, stable_lift, stable_pairing, HopfError};
use enhopf::koszul::CooperadPresentation;
use enhopf::models::{hopf_map, hopf_map_to_minimal_sphere, suspended_triangle_generator};
use enhopf::simp::{boundary_sphere, minimal_sphere, standard_simplex, verify_homology_sphere, SimplexId, SimplicialSet};
use enhopf::susp::{reduced_suspension, verify_suspension_theorem};
use enhopf_cli::{
    bar_element_json, certificate_json, cocycle_file, hopf_value_json, load_cocycle, load_map, load_set, to_text, write, CliError, CooperadSpec, MapFile,
    Report, SimplicialSetFile,
};

#[derive(Parser)]
#[command(name = "enhopf", version, about = "E_n-Hopf invariants of simplicial maps")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Simplex,
    MinimalSphere,
    BoundarySphere,
    Suspension,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    SuspensionTheorem,
    ChainMapAxiom,
    BarDSquared,
    EnTriviality,
}

#[derive(Subcommand)]
enum Command {
    /// Write a simplicial set file.
    Gen {
        kind: GenKind,
        #[arg(long)]
        dim: Option<usize>,
        /// Input for `suspension`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Write the bundled Hopf map instance into a directory.
    Instance {
        dir: PathBuf,
    },
    /// Compute the E_n-Hopf invariant of a map against a bar cocycle on its target.
    Hopf {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Caller's assertion that the target is simply connected.
        #[arg(long)]
        simply_connected: bool,
        /// Random pivot orders to compare against the default one.
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run an exhaustive verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        #[arg(long, default_value_t = 3)]
        d_max: usize,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
        /// Space for `chain-map-axiom` and `bar-d-squared`.
        #[arg(long)]
        space: Option<PathBuf>,
        /// D_n level for `bar-d-squared`.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        weight: usize,
    },
    /// Lift a D_n cocycle through suspensions and pair each level with the suspended map.
    Stable {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        levels: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}

fn field(p: u32) -> Result<PrimeField, CliError> {
    Ok(PrimeField::new(p)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need_dim(dim: Option<usize>) -> Result<usize, CliError> {
    dim.ok_or_else(|| CliError::Validation("--dim is required".into()))
}

fn gen(kind: GenKind, dim: Option<usize>, input: Option<&Path>) -> Result<SimplicialSet, CliError> {
    Ok(match kind {
        GenKind::Simplex => standard_simplex(need_dim(dim)?),
        GenKind::MinimalSphere => minimal_sphere(need_dim(dim)?),
        GenKind::BoundarySphere => boundary_sphere(need_dim(dim)?),
        GenKind::Suspension => {
            let input = input.ok_or_else(|| CliError::Validation("--input is required".into()))?;
            let s = reduced_suspension(Arc::new(load_set(input)?));
            SimplicialSet::clone(s.total())
        }
    })
}

fn instance(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let put = |name: &str, text: String| write(&dir.join(name), &text);
    let d1 = CooperadSpec { kind: "Dn".into(), n: Some(1), max_arity: None };

    let f = hopf_map();
    put("s3.json", to_text(&SimplicialSetFile::from_set(f.source())))?;
    put("sc3.json", to_text(&SimplicialSetFile::from_set(f.target())))?;
    put("hopf.json", to_text(&MapFile::from_map(&f, "s3.json", "sc3.json")))?;
    let w = suspended_triangle_generator(f.target())?;
    put("omega.json", to_text(&cocycle_file(d1.clone(), "bar_0", f.target(), &[&w, &w])))?;

    let g = hopf_map_to_minimal_sphere()?;
    put("s2.json", to_text(&SimplicialSetFile::from_set(g.target())))?;
    put("hopf-s2.json", to_text(&MapFile::from_map(&g, "s3.json", "s2.json")))?;
    let w2 = Cochain::indicator(SimplexId::new(2, 0));
    put("omega-s2.json", to_text(&cocycle_file(d1, "bar_0", g.target(), &[&w2, &w2])))?;
    Ok(())
}

fn hopf(map: &Path, cocycle: &Path, p: u32, simply_connected: bool, trials: usize, seed: u64) -> Result<Report, CliError> {
    let f = field(p)?;
    let loaded = load_map(map)?;
    let c = load_cocycle(cocycle, loaded.map.target(), f)?;
    let mut report = Report::new("hopf", p, seed);
    for path in [map, &loaded.source_path, &loaded.target_path, cocycle].into_iter().chain(c.data_files.iter().map(|p| p.as_path())) {
        report.input(path)?;
    }
    let out = hopf_pairing(&c.cooperad, &c.omega, &loaded.map)?;
    let independent = if trials > 0 { Some(preimage_independence_test(&c.cooperad, &c.omega, &loaded.map, trials, seed)?) } else { None };
    report.passed = independent != Some(false);
    report.result = json!({
        "simply_connected_asserted": simply_connected,
        "cooperad": c.cooperad.label(),
        "hopf_value": hopf_value_json(&out.value),
        "certificate": certificate_json(loaded.map.source(), &c.cooperad, &out.certificate),
        "pivot_trials": trials,
        "pivot_independent": independent,
    });
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn verify(suite: Suite, p: u32, n_max: usize, r_max: usize, d_max: usize, m_max: usize, space: Option<&Path>, n: usize, weight: usize) -> Result<Report, CliError> {
    let f = field(p)?;
    let mut report = Report::new("verify", p, 0);
    let space = match space {
        Some(path) => {
            report.input(path)?;
            Some(load_set(path)?)
        }
        None => None,
    };
    let (passed, result) = match suite {
        Suite::SuspensionTheorem => {
            let r = verify_suspension_theorem(n_max, r_max, d_max, f);
            let failures: Vec<_> = r.cases.iter().filter(|c| !c.passed).map(|c| json!({ "n": c.n, "u": c.u.to_string(), "counterexample": c.counterexample })).collect();
            (r.all_passed(), json!({ "suite": "suspension-theorem", "n_max": n_max, "r_max": r_max, "d_max": d_max, "cases": r.cases.len(), "failures": failures }))
        }
        Suite::ChainMapAxiom => {
            let x = space.unwrap_or_else(|| standard_simplex(3));
            let mut cases = 0;
            let mut failures = Vec::new();
            for r in 1..=r_max {
                for c in verify_chain_map_axiom(&x, r, d_max, f) {
                    cases += 1;
                    if !c.passed {
                        failures.push(c.u.to_string());
                    }
                }
            }
            (failures.is_empty(), json!({ "suite": "chain-map-axiom", "r_max": r_max, "d_max": d_max, "cases": cases, "failures": failures }))
        }
        Suite::BarDSquared => {
            let x = space.unwrap_or_else(|| minimal_sphere(2));
            let c = CooperadPresentation::dn_arity2(n, f)?;
            let bar = BarComplex::new(&x, &c);
            let top = (weight * x.dim()) as i64;
            let elems = basis_elements(&bar, -top..=weight as i64, weight)?;
            let r = check_bar_identities(&bar, &elems)?;
            let identities: serde_json::Map<_, _> = r.identities.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            (r.square_zero, json!({ "suite": "bar-d-squared", "cooperad": c.label(), "weight": weight, "checked": r.checked, "square_zero": r.square_zero, "identities": identities }))
        }
        Suite::EnTriviality => {
            let mut rows = Vec::new();
            let mut ok = true;
            for m in 2..=m_max {
                for level in 1..m {
                    let t = verify_sphere_en_triviality(m, level, r_max, f)?;
                    ok &= t.passed();
                    rows.push(json!({ "m": m, "n": level, "passed": t.passed(), "top_square": t.top_square, "nonzero": t.nonzero.iter().map(|u| u.to_string()).collect::<Vec<_>>() }));
                }
            }
            (ok, json!({ "suite": "en-triviality", "m_max": m_max, "r_max": r_max, "cases": rows }))
        }
    };
    report.passed = passed;
    report.result = result;
    Ok(report)
}

fn stable(space: &Path, cocycle: &Path, map: Option<&Path>, levels: usize, p: u32) -> Result<Report, CliError> {
    let f = field(p)?;
    let mut report = Report::new("stable", p, 0);
    let x = Arc::new(load_set(space)?);
    let c = load_cocycle(cocycle, &x, f)?;
    report.input(space)?;
    report.input(cocycle)?;
    let n = enhopf::hopf::en_level(&c.cooperad).ok_or_else(|| CliError::Validation("stable lifts need D_n data".into()))?;
    let tower = match stable_lift(&c.omega, x, n, levels, f) {
        Ok(t) => t,
        Err(HopfError::Obstruction { level }) => {
            report.passed = false;
            report.result = json!({ "n": n, "levels": levels, "obstruction": level });
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };
    let lifts: Vec<_> = (0..=levels).map(|r| bar_element_json(tower.space(r), &tower.cooperads[r], &tower.lifts[r])).collect();
    let mut values = Vec::new();
    if let Some(path) = map {
        let loaded = load_map(path)?;
        for path in [path, &loaded.source_path, &loaded.target_path] {
            report.input(path)?;
        }
        for r in 0..=levels {
            values.push(hopf_value_json(&stable_pairing(&tower, &loaded.map, r)?));
        }
    }
    report.result = json!({ "n": n, "levels": levels, "lifts": lifts, "pairings": values });
    Ok(report)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let report = match cli.command {
        Command::Gen { kind, dim, input } => {
            let x = gen(kind, dim, input.as_deref())?;
            if !matches!(kind, GenKind::Simplex) {
                let m = x.dim();
                if !verify_homology_sphere(&x, m, PrimeField::F2) {
                    return Err(CliError::Validation(format!("generated space is not a homology {m}-sphere")));
                }
            }
            emit(&cli.out, &to_text(&SimplicialSetFile::from_set(&x)))?;
            return Ok(true);
        }
        Command::Instance { dir } => {
            instance(&dir)?;
            return Ok(true);
        }
        Command::Hopf { map, cocycle, p, simply_connected, trials, seed } => hopf(&map, &cocycle, p, simply_connected, trials, seed)?,
        Command::Verify { suite, p, n_max, r_max, d_max, m_max, space, n, weight } => verify(suite, p, n_max, r_max, d_max, m_max, space.as_deref(), n, weight)?,
        Command::Stable { space, cocycle, map, levels, p } => stable(&space, &cocycle, map.as_deref(), levels, p)?,
    };
    emit(&cli.out, &to_text(&report))?;
    Ok(report.passed)
}

fn main() -> Result<ExitCode> {
    let cli = Cli::parse();
    match run(cli).context("enhopf") {
        Ok(true) => Ok(ExitCode::SUCCESS),
        Ok(false) => Ok(ExitCode::from(1)),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.downcast_ref::<CliError>().map_or(2, CliError::exit_code);
            Ok(ExitCode::from(code))
        }
    }
}
