//! The shipped fixture corpus, rebuilt from the core constructors.
//!
//! `cargo run -p gabi-cli --example write_fixtures` rewrites `crates/cli/fixtures`
//! from this list; a test checks the files on disk still match it.

use gabi_core::coalg::BialgebraData;
use gabi_core::exactalg::{FieldSpec, Matrix};
use gabi_core::fixtures;
use gabi_core::gabi::{GabiSide, GabiStructure};
use gabi_core::modcat::AModule;
use gabi_core::settheory::group_gabi;

use crate::format::{algebra_doc, gabi_doc, hopf_doc, module_doc, monoid_doc, AlgebraDoc, ModulesDoc};

const Q: FieldSpec = FieldSpec::Rationals;
const F2: FieldSpec = FieldSpec::PrimeField(2);

pub enum Entry {
    Algebra(AlgebraDoc),
    Modules(ModulesDoc),
    Monoid(crate::format::MonoidDoc),
    Raw(&'static str),
}

impl Entry {
    pub fn to_json(&self) -> String {
        let mut s = match self {
            Entry::Algebra(d) => serde_json::to_string_pretty(d),
            Entry::Modules(d) => serde_json::to_string_pretty(d),
            Entry::Monoid(d) => serde_json::to_string_pretty(d),
            Entry::Raw(s) => return s.to_string(),
        }
        .expect("serializable");
        s.push('\n');
        s
    }
}

fn hopf_entry(b: &BialgebraData, s: &Matrix) -> AlgebraDoc {
    let mut doc = algebra_doc(&b.algebra);
    doc.gabi = Some(gabi_doc(&fixtures::hopf_gabi(b, s)));
    doc.gabi_prime = Some(gabi_doc(&fixtures::hopf_gabi_prime(b, s)));
    doc.hopf = Some(hopf_doc(b, s));
    doc
}

fn sign_module(a: &gabi_core::algcore::FinAlgebra, values: &[i64]) -> AModule {
    let action = values.iter().map(|&v| Matrix::from_i64(a.field(), &[&[v]])).collect();
    AModule::new(a.clone(), "sign", action).expect("1x1 actions")
}

const NON_ASSOCIATIVE: &str = r#"{
  "field": {"kind": "rational"},
  "dim": 3,
  "basis_names": ["1", "a", "b"],
  "mul": [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]],
    [["0", "0", "1"], ["1", "0", "0"], ["0", "0", "0"]]
  ],
  "unit": ["1", "0", "0"]
}
"#;

/// `(relative path, contents)` for every shipped fixture.
pub fn corpus() -> Vec<(String, Entry)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        let b = fixtures::group_bialgebra(Q, n);
        out.push((format!("q_c{n}.json"), Entry::Algebra(hopf_entry(&b, &fixtures::group_antipode(Q, n)))));
    }
    out.push(("h4.json".into(), Entry::Algebra(hopf_entry(&fixtures::sweedler_h4_bialgebra(), &fixtures::sweedler_h4_antipode()))));
    let dual = fixtures::dual_numbers_bialgebra();
    out.push(("f2_dual_numbers.json".into(), Entry::Algebra(hopf_entry(&dual, &Matrix::identity(F2, 2)))));
    out.push(("f2_idempotent.json".into(), Entry::Algebra(algebra_doc(&fixtures::monoid_algebra(F2, &fixtures::idempotent_monoid())))));

    // δ(g) = g⊗1 is an algebra map but fails GA1 and GA2.
    let c2 = fixtures::cyclic_group_algebra(Q, 2);
    let delta = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
    let bad = GabiStructure::new(c2.clone(), delta, Matrix::from_i64(Q, &[&[1, 1]]), GabiSide::Left).expect("shapes");
    let mut doc = algebra_doc(&c2);
    doc.gabi = Some(gabi_doc(&bad));
    out.push(("q_c2_bad_delta.json".into(), Entry::Algebra(doc)));

    out.push(("q_c2_modules.json".into(), Entry::Modules(ModulesDoc { modules: vec![module_doc(&sign_module(&c2, &[1, -1]))] })));
    let h4 = fixtures::sweedler_h4();
    out.push(("h4_modules.json".into(), Entry::Modules(ModulesDoc { modules: vec![module_doc(&sign_module(&h4, &[1, -1, 0, 0]))] })));

    for (name, m) in fixtures::monoid_corpus() {
        let g = group_gabi(&m);
        out.push((format!("monoid_{}.json", name.replace('-', "_")), Entry::Monoid(monoid_doc(&m, g.as_ref()))));
    }
    out.push(("invalid/non_associative.json".into(), Entry::Raw(NON_ASSOCIATIVE)));
    out
}
