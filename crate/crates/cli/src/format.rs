//! JSON definition files.
//!
//! Matrices are arrays of rows. Scalars are written as strings (`"3"`, `"-1/2"`)
//! and plain integers are accepted on input. `mul[i][j]` lists the
//! coefficients of `e_i·e_j`; `delta` is `n²×n` with row `i·n + j` holding the
//! coefficient of `e_i⊗e_j`.

use std::fs;
use std::path::Path;

use gabi_core::algcore::{check_algebra, FinAlgebra};
use gabi_core::coalg::{BialgebraData, CoalgebraData};
use gabi_core::exactalg::{FieldSpec, Matrix, Scalar};
use gabi_core::gabi::{GabiSide, GabiStructure};
use gabi_core::modcat::{check_module, AModule};
use gabi_core::settheory::{FiniteMonoid, MonoidGabi};
use serde::{Deserialize, Serialize};

/// A rejected input, with the key path it was found at.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct InputError {
    pub path: String,
    pub message: String,
}

impl InputError {
    pub fn new(path: impl Into<String>, message: impl ToString) -> Self {
        InputError { path: path.into(), message: message.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Int(i64),
    Str(String),
}

impl ScalarDoc {
    fn text(&self) -> String {
        match self {
            ScalarDoc::Int(v) => v.to_string(),
            ScalarDoc::Str(s) => s.clone(),
        }
    }
}

pub type MatrixDoc = Vec<Vec<ScalarDoc>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    /// `"rational"` or `"prime"`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GabiDoc {
    pub delta: MatrixDoc,
    pub eps: MatrixDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub name: String,
    pub dim: usize,
    /// One `dim × dim` matrix per basis element of the algebra.
    pub action: Vec<MatrixDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDoc {
    pub comul: MatrixDoc,
    pub counit: MatrixDoc,
    pub antipode: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub field: FieldDoc,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    pub mul: Vec<Vec<Vec<ScalarDoc>>>,
    pub unit: Vec<ScalarDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gabi: Option<GabiDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gabi_prime: Option<GabiDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDoc {
    pub size: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    /// `gabi[m] = [m₊, m₋]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gabi: Option<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModulesDoc {
    pub modules: Vec<ModuleDoc>,
}

/// A parsed algebra file.
#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub algebra: FinAlgebra,
    pub gabi: Option<GabiStructure>,
    pub gabi_prime: Option<GabiStructure>,
    pub modules: Vec<AModule>,
    pub hopf: Option<(BialgebraData, Matrix)>,
}

#[derive(Clone, Debug)]
pub struct MonoidFile {
    pub monoid: FiniteMonoid,
    pub gabi: Option<MonoidGabi>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError::new(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| InputError::new(path.display().to_string(), e))
}

pub fn field_from_doc(d: &FieldDoc) -> Result<FieldSpec, InputError> {
    match (d.kind.as_str(), d.p) {
        ("rational", None) => Ok(FieldSpec::Rationals),
        ("prime", Some(p)) => FieldSpec::prime(p).map_err(|e| InputError::new("field.p", e)),
        _ => Err(InputError::new("field", "expected {\"kind\": \"rational\"} or {\"kind\": \"prime\", \"p\": <prime>}")),
    }
}

pub fn field_doc(f: FieldSpec) -> FieldDoc {
    match f {
        FieldSpec::Rationals => FieldDoc { kind: "rational".into(), p: None },
        FieldSpec::PrimeField(p) => FieldDoc { kind: "prime".into(), p: Some(p as u64) },
    }
}

fn scalar(f: FieldSpec, s: &ScalarDoc, path: &str) -> Result<Scalar, InputError> {
    f.parse(&s.text()).map_err(|e| InputError::new(path, e))
}

fn vector(f: FieldSpec, v: &[ScalarDoc], len: usize, path: &str) -> Result<Vec<Scalar>, InputError> {
    if v.len() != len {
        return Err(InputError::new(path, format!("expected {len} entries, found {}", v.len())));
    }
    v.iter().enumerate().map(|(i, s)| scalar(f, s, &format!("{path}[{i}]"))).collect()
}

pub fn matrix_from_doc(f: FieldSpec, m: &MatrixDoc, rows: usize, cols: usize, path: &str) -> Result<Matrix, InputError> {
    if m.len() != rows {
        return Err(InputError::new(path, format!("expected {rows} rows, found {}", m.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in m.iter().enumerate() {
        data.extend(vector(f, row, cols, &format!("{path}[{i}]"))?);
    }
    Ok(Matrix::from_vec(f, rows, cols, data).expect("checked shape"))
}

pub fn scalar_doc(s: &Scalar) -> ScalarDoc {
    ScalarDoc::Str(s.to_string())
}

pub fn matrix_doc(m: &Matrix) -> MatrixDoc {
    (0..m.rows()).map(|i| m.row(i).iter().map(scalar_doc).collect()).collect()
}

fn parse_side(s: Option<&str>, path: &str) -> Result<GabiSide, InputError> {
    match s {
        None | Some("left") => Ok(GabiSide::Left),
        Some("right") => Ok(GabiSide::Right),
        Some(other) => Err(InputError::new(path, format!("side must be \"left\" or \"right\", found {other:?}"))),
    }
}

pub fn gabi_from_doc(a: &FinAlgebra, d: &GabiDoc, path: &str) -> Result<GabiStructure, InputError> {
    let (f, n) = (a.field(), a.dim());
    let delta = matrix_from_doc(f, &d.delta, n * n, n, &format!("{path}.delta"))?;
    let eps = matrix_from_doc(f, &d.eps, 1, n, &format!("{path}.eps"))?;
    let side = parse_side(d.side.as_deref(), &format!("{path}.side"))?;
    GabiStructure::new(a.clone(), delta, eps, side).map_err(|e| InputError::new(path, e))
}

pub fn gabi_doc(g: &GabiStructure) -> GabiDoc {
    let side = match g.side() {
        GabiSide::Left => "left",
        GabiSide::Right => "right",
    };
    GabiDoc { delta: matrix_doc(g.delta()), eps: matrix_doc(g.eps()), side: Some(side.into()) }
}

pub fn module_from_doc(a: &FinAlgebra, d: &ModuleDoc, path: &str) -> Result<AModule, InputError> {
    if d.action.len() != a.dim() {
        return Err(InputError::new(format!("{path}.action"), format!("expected {} matrices, found {}", a.dim(), d.action.len())));
    }
    let action = d
        .action
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_doc(a.field(), m, d.dim, d.dim, &format!("{path}.action[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let m = AModule::new(a.clone(), d.name.clone(), action).map_err(|e| InputError::new(path, e))?;
    let report = check_module(&m);
    if let Some(f) = report.findings.first() {
        return Err(InputError::new(path, format!("not a module: {f}")));
    }
    Ok(m)
}

pub fn module_doc(m: &AModule) -> ModuleDoc {
    ModuleDoc { name: m.name().to_string(), dim: m.dim(), action: m.actions().iter().map(matrix_doc).collect() }
}

pub fn hopf_from_doc(a: &FinAlgebra, d: &HopfDoc, path: &str) -> Result<(BialgebraData, Matrix), InputError> {
    let (f, n) = (a.field(), a.dim());
    let comul = matrix_from_doc(f, &d.comul, n * n, n, &format!("{path}.comul"))?;
    let counit = matrix_from_doc(f, &d.counit, 1, n, &format!("{path}.counit"))?;
    let antipode = matrix_from_doc(f, &d.antipode, n, n, &format!("{path}.antipode"))?;
    let c = CoalgebraData::new(comul, counit).map_err(|e| InputError::new(path, e))?;
    let b = BialgebraData::new(a.clone(), c).map_err(|e| InputError::new(path, e))?;
    Ok((b, antipode))
}

pub fn hopf_doc(b: &BialgebraData, s: &Matrix) -> HopfDoc {
    HopfDoc { comul: matrix_doc(b.comul()), counit: matrix_doc(b.counit()), antipode: matrix_doc(s) }
}

/// Builds the algebra and rejects it if any associativity or unit identity fails.
pub fn algebra_from_doc(d: &AlgebraDoc) -> Result<FinAlgebra, InputError> {
    let f = field_from_doc(&d.field)?;
    let n = d.dim;
    let names = match &d.basis_names {
        Some(v) if v.len() != n => return Err(InputError::new("basis_names", format!("expected {n} names, found {}", v.len()))),
        Some(v) => v.clone(),
        None => (0..n).map(|i| format!("e{i}")).collect(),
    };
    if d.mul.len() != n {
        return Err(InputError::new("mul", format!("expected {n} rows, found {}", d.mul.len())));
    }
    let mut table = Vec::with_capacity(n);
    for (i, row) in d.mul.iter().enumerate() {
        if row.len() != n {
            return Err(InputError::new(format!("mul[{i}]"), format!("expected {n} entries, found {}", row.len())));
        }
        let row = row.iter().enumerate().map(|(j, v)| vector(f, v, n, &format!("mul[{i}][{j}]"))).collect::<Result<Vec<_>, _>>()?;
        table.push(row);
    }
    let unit = vector(f, &d.unit, n, "unit")?;
    let a = FinAlgebra::new(f, names, table, unit).map_err(|e| InputError::new("mul", e))?;
    if let Some(bad) = check_algebra(&a).findings.first() {
        let path = if bad.label == "unit" { "unit" } else { "mul" };
        return Err(InputError::new(path, bad));
    }
    Ok(a)
}

pub fn algebra_doc(a: &FinAlgebra) -> AlgebraDoc {
    let n = a.dim();
    let mul = (0..n).map(|i| (0..n).map(|j| a.product(i, j).iter().map(scalar_doc).collect()).collect()).collect();
    AlgebraDoc {
        field: field_doc(a.field()),
        dim: n,
        basis_names: Some(a.basis_names().to_vec()),
        mul,
        unit: a.unit().iter().map(scalar_doc).collect(),
        gabi: None,
        gabi_prime: None,
        modules: Vec::new(),
        hopf: None,
    }
}

pub fn algebra_file_from_doc(d: &AlgebraDoc) -> Result<AlgebraFile, InputError> {
    let algebra = algebra_from_doc(d)?;
    let gabi = d.gabi.as_ref().map(|g| gabi_from_doc(&algebra, g, "gabi")).transpose()?;
    let gabi_prime = d.gabi_prime.as_ref().map(|g| gabi_from_doc(&algebra, g, "gabi_prime")).transpose()?;
    let modules = d.modules.iter().enumerate().map(|(i, m)| module_from_doc(&algebra, m, &format!("modules[{i}]"))).collect::<Result<_, _>>()?;
    let hopf = d.hopf.as_ref().map(|h| hopf_from_doc(&algebra, h, "hopf")).transpose()?;
    Ok(AlgebraFile { algebra, gabi, gabi_prime, modules, hopf })
}

pub fn read_algebra_file(path: &Path) -> Result<AlgebraFile, InputError> {
    let doc: AlgebraDoc = read_json(path)?;
    algebra_file_from_doc(&doc).map_err(|e| InputError::new(format!("{}: {}", path.display(), e.path), e.message))
}

pub fn read_modules_file(path: &Path, a: &FinAlgebra) -> Result<Vec<AModule>, InputError> {
    let doc: ModulesDoc = read_json(path)?;
    doc.modules
        .iter()
        .enumerate()
        .map(|(i, m)| module_from_doc(a, m, &format!("modules[{i}]")))
        .collect::<Result<_, _>>()
        .map_err(|e| InputError::new(format!("{}: {}", path.display(), e.path), e.message))
}

pub fn monoid_file_from_doc(d: &MonoidDoc) -> Result<MonoidFile, InputError> {
    if d.table.len() != d.size {
        return Err(InputError::new("table", format!("expected {} rows, found {}", d.size, d.table.len())));
    }
    let mut monoid = FiniteMonoid::new(d.table.clone(), d.identity).map_err(|e| InputError::new("table", e))?;
    if let Some(names) = &d.names {
        monoid = monoid.with_names(names.clone()).map_err(|e| InputError::new("names", e))?;
    }
    let gabi = d.gabi.as_ref().map(|pairs| MonoidGabi { monoid: monoid.clone(), delta: pairs.iter().map(|&[p, q]| (p, q)).collect() });
    Ok(MonoidFile { monoid, gabi })
}

pub fn monoid_doc(m: &FiniteMonoid, gabi: Option<&MonoidGabi>) -> MonoidDoc {
    MonoidDoc {
        size: m.size(),
        identity: m.identity(),
        table: m.table().to_vec(),
        names: Some(m.names().to_vec()),
        gabi: gabi.map(|g| g.delta.iter().map(|&(p, q)| [p, q]).collect()),
    }
}

pub fn read_monoid_file(path: &Path) -> Result<MonoidFile, InputError> {
    let doc: MonoidDoc = read_json(path)?;
    monoid_file_from_doc(&doc).map_err(|e| InputError::new(format!("{}: {}", path.display(), e.path), e.message))
}
