//! File formats and report records for the `enhopf` command-line tool.
//!
//! Every file is JSON. Simplices are referred to by name, and objects keep
//! their key order, so writing a loaded file reproduces it byte for byte.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use enhopf::bar::{BarElement, BarError};
use enhopf::chains::{ChainError, Cochain};
use enhopf::falg::{FieldError, PrimeField, SparseVector};
use enhopf::hopf::{HopfError, HopfValue, ReductionCertificate};
use enhopf::koszul::{CocompositionTerm, CooperadPresentation, Generator, KoszulError, PermTerm};
use enhopf::operads::{OperadError, OperadSum, Permutation, Surjection};
use enhopf::simp::{DegeneracyWord, SimpError, SimplexId, SimplexRef, SimplicialMap, SimplicialSet};
use enhopf::susp::SuspError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 6,
            CliError::Validation(_) => 2,
            CliError::Hopf(e) => match e {
                HopfError::NotACocycle => 3,
                HopfError::NotExact { .. } => 4,
                HopfError::MissingCooperadData { .. } => 5,
                HopfError::Obstruction { .. } => 1,
                _ => 2,
            },
        }
    }
}

macro_rules! validation_from {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Validation(e.to_string())
            }
        })*
    };
}

validation_from!(SimpError, ChainError, KoszulError, OperadError, FieldError, SuspError, serde_json::Error);

impl From<BarError> for CliError {
    fn from(e: BarError) -> Self {
        CliError::Hopf(e.into())
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

pub fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRef {
    pub base: String,
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexEntry {
    pub dim: usize,
    pub faces: Vec<FaceRef>,
}

/// Nondegenerate simplices listed dimension by dimension; a face names its
/// nondegenerate base and a strictly decreasing degeneracy word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialSetFile {
    pub dims: Vec<usize>,
    pub simplices: IndexMap<String, SimplexEntry>,
    pub basepoint: String,
}

fn face_ref(x: &SimplicialSet, r: &SimplexRef) -> FaceRef {
    FaceRef { base: x.name(r.base).to_string(), word: r.word.indices().to_vec() }
}

impl SimplicialSetFile {
    pub fn from_set(x: &SimplicialSet) -> Self {
        let mut simplices = IndexMap::new();
        for q in 0..=x.dim() {
            for id in x.ids(q) {
                let faces = x.faces(id).iter().map(|f| face_ref(x, f)).collect();
                simplices.insert(x.name(id).to_string(), SimplexEntry { dim: q, faces });
            }
        }
        SimplicialSetFile { dims: x.counts(), simplices, basepoint: x.name(x.basepoint()).to_string() }
    }

    pub fn to_set(&self) -> Result<SimplicialSet, CliError> {
        let mut b = SimplicialSet::builder();
        for (name, entry) in &self.simplices {
            let faces = entry
                .faces
                .iter()
                .map(|f| {
                    let base = b.id(&f.base).ok_or_else(|| SimpError::UnknownSimplex(f.base.clone()))?;
                    Ok(SimplexRef::new(base, DegeneracyWord::new(f.word.clone())?))
                })
                .collect::<Result<Vec<_>, SimpError>>()?;
            b.add(name.clone(), entry.dim, faces)?;
        }
        let bp = b.id(&self.basepoint).ok_or_else(|| SimpError::UnknownSimplex(self.basepoint.clone()))?;
        b.set_basepoint(bp)?;
        let x = b.build()?;
        if x.counts() != self.dims {
            return Err(invalid(format!("dims {:?} disagree with the listed simplices {:?}", self.dims, x.counts())));
        }
        Ok(x)
    }
}

pub fn load_set(path: &Path) -> Result<SimplicialSet, CliError> {
    let file: SimplicialSetFile = serde_json::from_slice(&read(path)?)?;
    file.to_set()
}

/// `source` and `target` are paths relative to the map file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub source: String,
    pub target: String,
    pub images: IndexMap<String, FaceRef>,
}

impl MapFile {
    pub fn from_map(f: &SimplicialMap, source: &str, target: &str) -> Self {
        let (s, t) = (f.source(), f.target());
        let mut images = IndexMap::new();
        for q in 0..=s.dim() {
            for id in s.ids(q) {
                images.insert(s.name(id).to_string(), face_ref(t, f.image(id)));
            }
        }
        MapFile { source: source.into(), target: target.into(), images }
    }

    pub fn to_map(&self, source: Arc<SimplicialSet>, target: Arc<SimplicialSet>) -> Result<SimplicialMap, CliError> {
        if self.images.len() != source.counts().iter().sum::<usize>() {
            return Err(invalid("map must list one image per source simplex"));
        }
        let mut images = Vec::new();
        for q in 0..=source.dim() {
            let mut row = Vec::new();
            for id in source.ids(q) {
                let name = source.name(id);
                let img = self.images.get(name).ok_or_else(|| invalid(format!("no image for simplex {name}")))?;
                let base = target.id(&img.base)?;
                row.push(SimplexRef::new(base, DegeneracyWord::new(img.word.clone())?));
            }
            images.push(row);
        }
        Ok(SimplicialMap::new(source, target, images)?)
    }
}

fn sibling(file: &Path, rel: &str) -> PathBuf {
    file.parent().unwrap_or(Path::new(".")).join(rel)
}

pub struct LoadedMap {
    pub map: SimplicialMap,
    pub source_path: PathBuf,
    pub target_path: PathBuf,
}

pub fn load_map(path: &Path) -> Result<LoadedMap, CliError> {
    let file: MapFile = serde_json::from_slice(&read(path)?)?;
    let (source_path, target_path) = (sibling(path, &file.source), sibling(path, &file.target));
    let source = Arc::new(load_set(&source_path)?);
    let target = Arc::new(load_set(&target_path)?);
    Ok(LoadedMap { map: file.to_map(source, target)?, source_path, target_path })
}

/// A cochain of degree `-dim`, with integer coefficients reduced mod `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainLiteral {
    pub degree: i64,
    pub coeffs: IndexMap<String, i64>,
}

impl CochainLiteral {
    pub fn from_cochain(x: &SimplicialSet, a: &Cochain) -> Self {
        let coeffs = a.coeffs.iter().map(|(&i, c)| (x.name(SimplexId::new(a.dim, i)).to_string(), c as i64)).collect();
        CochainLiteral { degree: a.degree(), coeffs }
    }

    pub fn to_cochain(&self, x: &SimplicialSet, field: PrimeField) -> Result<Cochain, CliError> {
        if self.degree > 0 {
            return Err(invalid(format!("cochain degree {} is positive", self.degree)));
        }
        let dim = (-self.degree) as usize;
        let mut coeffs = SparseVector::new();
        for (name, &c) in &self.coeffs {
            let id = x.id(name)?;
            if id.dim != dim {
                return Err(invalid(format!("simplex {name} has dimension {}, not {dim}", id.dim)));
            }
            coeffs.add_term(field, id.index, field.reduce(c));
        }
        Ok(Cochain::new(dim, coeffs))
    }
}

/// `kind` is `"Dn"` (with `n`), `"associative"` (with `max_arity`, default 2),
/// or a path to a cooperad data file relative to the cocycle file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CooperadSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_arity: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermLiteral {
    pub coeff: i64,
    pub gamma: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub word: Vec<CochainLiteral>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleFile {
    pub cooperad: CooperadSpec,
    pub terms: Vec<TermLiteral>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermTermLiteral {
    pub coeff: i64,
    pub perm: Vec<usize>,
    pub gen: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocompositionLiteral {
    pub coeff: i64,
    pub perm: Vec<usize>,
    pub outer: String,
    pub position: usize,
    pub inner: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistingLiteral {
    pub coeff: i64,
    pub surjection: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorLiteral {
    pub label: String,
    pub arity: usize,
    pub degree: i64,
    #[serde(default)]
    pub differential: Vec<PermTermLiteral>,
    #[serde(default)]
    pub cocomposition: Option<Vec<CocompositionLiteral>>,
    #[serde(default)]
    pub twisting: Vec<TwistingLiteral>,
}

/// User-supplied cooperad tables. The first generator must be the arity-1
/// unit; permutations are 0-based image lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CooperadFile {
    pub label: String,
    pub generators: Vec<GeneratorLiteral>,
}

impl CooperadFile {
    pub fn to_presentation(&self, field: PrimeField) -> Result<CooperadPresentation, CliError> {
        let index = |label: &str| {
            self.generators.iter().position(|g| g.label == label).ok_or_else(|| invalid(format!("unknown generator {label}")))
        };
        let mut generators = Vec::new();
        let mut differential = Vec::new();
        let mut cocomposition = Vec::new();
        let mut twisting = Vec::new();
        for g in &self.generators {
            generators.push(Generator { label: g.label.clone(), arity: g.arity, degree: g.degree });
            let d = g
                .differential
                .iter()
                .map(|t| Ok(PermTerm { coeff: t.coeff, perm: Permutation::new(t.perm.clone())?, gen: index(&t.gen)? }))
                .collect::<Result<Vec<_>, CliError>>()?;
            differential.push(d);
            let c = match &g.cocomposition {
                None => None,
                Some(rows) => Some(
                    rows.iter()
                        .map(|t| {
                            Ok(CocompositionTerm {
                                coeff: t.coeff,
                                perm: Permutation::new(t.perm.clone())?,
                                outer: index(&t.outer)?,
                                position: t.position,
                                inner: index(&t.inner)?,
                            })
                        })
                        .collect::<Result<Vec<_>, CliError>>()?,
                ),
            };
            cocomposition.push(c);
            let mut tw = OperadSum::zero();
            for t in &g.twisting {
                tw.add(Surjection::new(t.surjection.clone())?, t.coeff);
            }
            twisting.push(tw);
        }
        Ok(CooperadPresentation::custom(self.label.clone(), field, generators, differential, cocomposition, twisting)?)
    }
}

pub struct LoadedCocycle {
    pub cooperad: CooperadPresentation,
    pub omega: BarElement,
    /// Extra files read while loading, for the report digests.
    pub data_files: Vec<PathBuf>,
}

pub fn load_cooperad(spec: &CooperadSpec, field: PrimeField, base: &Path) -> Result<(CooperadPresentation, Option<PathBuf>), CliError> {
    match spec.kind.as_str() {
        "Dn" => {
            let n = spec.n.ok_or_else(|| invalid("cooperad kind Dn needs n"))?;
            Ok((CooperadPresentation::dn_arity2(n, field)?, None))
        }
        "associative" => Ok((CooperadPresentation::associative(spec.max_arity.unwrap_or(2), field)?, None)),
        path => {
            let p = sibling(base, path);
            let file: CooperadFile = serde_json::from_slice(&read(&p)?)?;
            Ok((file.to_presentation(field)?, Some(p)))
        }
    }
}

pub fn cocycle_element(file: &CocycleFile, cooperad: &CooperadPresentation, x: &SimplicialSet) -> Result<BarElement, CliError> {
    let field = cooperad.field();
    let mut omega = BarElement::zero();
    for t in &file.terms {
        let gen = if t.gamma == "bar_i" {
            let i = t.i.ok_or_else(|| invalid("gamma bar_i needs the index i"))?;
            cooperad.bar_generator(i).ok_or_else(|| invalid(format!("{} has no bar_{i}", cooperad.label())))?
        } else {
            cooperad
                .generators()
                .iter()
                .position(|g| g.label == t.gamma)
                .ok_or_else(|| invalid(format!("{} has no generator {}", cooperad.label(), t.gamma)))?
        };
        let arity = cooperad.generator(gen).arity;
        if t.word.len() != arity {
            return Err(invalid(format!("{} has arity {arity} but the word has {} slots", t.gamma, t.word.len())));
        }
        let slots = t.word.iter().map(|c| c.to_cochain(x, field)).collect::<Result<Vec<_>, _>>()?;
        let refs: Vec<&Cochain> = slots.iter().collect();
        omega = omega.sum(field, &BarElement::word(field, gen, &refs).scaled(field, field.reduce(t.coeff)));
    }
    Ok(omega)
}

pub fn load_cocycle(path: &Path, x: &SimplicialSet, field: PrimeField) -> Result<LoadedCocycle, CliError> {
    let file: CocycleFile = serde_json::from_slice(&read(path)?)?;
    let (cooperad, data) = load_cooperad(&file.cooperad, field, path)?;
    let omega = cocycle_element(&file, &cooperad, x)?;
    Ok(LoadedCocycle { cooperad, omega, data_files: data.into_iter().collect() })
}

/// `(gen; a_1, ..., a_w)` for cochains `a_k` on `x`.
pub fn cocycle_file(cooperad: CooperadSpec, gamma: &str, x: &SimplicialSet, word: &[&Cochain]) -> CocycleFile {
    let word = word.iter().map(|a| CochainLiteral::from_cochain(x, a)).collect();
    CocycleFile { cooperad, terms: vec![TermLiteral { coeff: 1, gamma: gamma.into(), i: None, word }] }
}

pub fn bar_element_json(x: &SimplicialSet, cooperad: &CooperadPresentation, e: &BarElement) -> Value {
    let terms: Vec<Value> = e
        .iter()
        .map(|(b, c)| {
            let word: Vec<&str> = b.word.iter().map(|&id| x.name(id)).collect();
            json!({ "coeff": c, "gamma": cooperad.generator(b.gen).label, "word": word })
        })
        .collect();
    Value::Array(terms)
}

pub fn certificate_json(x: &SimplicialSet, cooperad: &CooperadPresentation, cert: &ReductionCertificate) -> Value {
    let steps: Vec<Value> = cert
        .steps
        .iter()
        .map(|s| json!({ "weight": s.weight, "en_degree": s.en_degree, "corrector": bar_element_json(x, cooperad, &s.corrector) }))
        .collect();
    json!({ "steps": steps, "result": CochainLiteral::from_cochain(x, &cert.result) })
}

pub fn hopf_value_json(v: &HopfValue) -> Value {
    json!({ "value": v.value, "p": v.p, "n": v.n, "m": v.m })
}

/// Header shared by all reports. Nothing time-dependent is recorded.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub p: u32,
    pub seed: u64,
    pub inputs: IndexMap<String, String>,
    pub passed: bool,
    pub result: Value,
}

impl Report {
    pub fn new(command: impl Into<String>, p: u32, seed: u64) -> Self {
        Report { tool: "enhopf", version: VERSION, command: command.into(), p, seed, inputs: IndexMap::new(), passed: true, result: Value::Null }
    }

    pub fn input(&mut self, path: &Path) -> Result<(), CliError> {
        let d = digest(&read(path)?);
        self.inputs.insert(path.display().to_string(), d);
        Ok(())
    }
}
