//! WebAssembly front end. Every export takes and returns JSON text; failures
//! come back as `{"error": "..."}` so the page never has to catch.

use lya_core::algebra::{heisenberg, sl2, validate_lya, LyAlgebra};
use lya_core::io::{algebra_to_json, grading_to_json, parse_algebra, parse_matrix};
use lya_core::symmetry::{automorphism_equivalence_check, enumerate_diagonal_gradings, FiniteAbelianGroup};
use lya_core::universal::Presentation;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const GROUP_CAP: usize = 64;

fn reply(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn algebra(text: &str) -> Result<LyAlgebra, String> {
    parse_algebra(text).map_err(|e| format!("algebra: {e}"))
}

#[wasm_bindgen]
pub fn preset(name: &str) -> String {
    reply(
        match name {
            "heisenberg1" => heisenberg(1).map_err(|e| e.to_string()),
            "heisenberg2" => heisenberg(2).map_err(|e| e.to_string()),
            "sl2" => Ok(sl2()),
            "abelian2" => LyAlgebra::abelian(2).map_err(|e| e.to_string()),
            other => Err(format!("unknown preset {other}")),
        }
        .map(|l| algebra_to_json(&l)),
    )
}

#[wasm_bindgen]
pub fn validate(algebra_json: &str) -> String {
    reply(algebra(algebra_json).map(|l| {
        let report = validate_lya(&l);
        let axioms: Vec<Value> = report
            .results
            .iter()
            .map(|a| {
                let w = a.witness.as_ref().map(|w| w.iter().map(|i| i + 1).collect::<Vec<_>>());
                json!({ "axiom": a.axiom, "witness": w })
            })
            .collect();
        json!({ "dim": l.dim(), "passed": report.passed(), "axioms": axioms })
    }))
}

/// P and Q polynomials of A(L), as text.
#[wasm_bindgen]
pub fn universal(algebra_json: &str) -> String {
    reply(algebra(algebra_json).map(|l| {
        let pres = Presentation::new(&l, &l);
        let show = |gs: &[lya_core::universal::Generator]| -> Vec<Value> {
            gs.iter().map(|g| json!({ "label": g.name(), "poly": g.poly.to_string() })).collect()
        };
        json!({ "p": show(pres.p_generators()), "q": show(pres.q_generators()) })
    }))
}

#[wasm_bindgen]
pub fn autocheck(algebra_json: &str, matrix_json: &str) -> String {
    reply((|| {
        let l = algebra(algebra_json)?;
        let m = parse_matrix(matrix_json).map_err(|e| format!("matrix: {e}"))?;
        let pres = Presentation::new(&l, &l);
        let r = automorphism_equivalence_check(&pres, &m).map_err(|e| e.to_string())?;
        Ok(json!({
            "automorphism": r.direct,
            "point": r.point,
            "invertible": r.invertible,
            "inverse_point": r.inverse_point,
            "agreement": r.agrees(),
        }))
    })())
}

#[wasm_bindgen]
pub fn gradings(algebra_json: &str, group: &str) -> String {
    reply((|| {
        let l = algebra(algebra_json)?;
        let g = FiniteAbelianGroup::parse(group, GROUP_CAP).map_err(|e| e.to_string())?;
        let found: Vec<Value> = enumerate_diagonal_gradings(&l, &g).iter().filter_map(grading_to_json).collect();
        Ok(json!({ "group": g.orders(), "count": found.len(), "gradings": found }))
    })())
}
