mod common;

use common::*;
use lya_core::algebra::{heisenberg, sl2};
use lya_core::io::{
    algebra_to_json, comm_algebra_to_json, grading_from_value, grading_to_json, load_module, matrix_to_json,
    module_to_json, parse_algebra, parse_comm_algebra, parse_json, parse_matrix,
};
use lya_core::rep::self_module;
use lya_core::symmetry::{FiniteAbelianGroup, Grading};
use lya_core::CommAlgebra;
use proptest::prelude::*;

#[test]
fn labels_survive() {
    let l = sl2();
    let back = parse_algebra(&algebra_to_json(&l).to_string()).unwrap();
    assert_eq!(back.label(1), "e");
    assert_eq!(back, l);
}

#[test]
fn comm_algebra_roundtrip() {
    let a = CommAlgebra::truncated(3);
    assert_eq!(parse_comm_algebra(&comm_algebra_to_json(&a).to_string()).unwrap(), a);
    assert!(parse_comm_algebra(r#"{"dim": 2, "mult": [[1, 2, 2, "1"]], "unit": ["1", "0"]}"#).is_err());
}

#[test]
fn matrices_accept_both_shapes() {
    let m = parse_matrix(r#"[[1, "-1/2"], [0, 3]]"#).unwrap();
    assert_eq!(parse_matrix(&format!("{{\"matrix\": {}}}", matrix_to_json(&m))).unwrap(), m);
    let err = parse_matrix("[[1, 2], [3]]").unwrap_err();
    assert!(err.to_string().contains("matrix"), "{err}");
}

#[test]
fn module_files_resolve_relative_paths() {
    let dir = std::env::temp_dir().join(format!("lya-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let l = heisenberg(1).unwrap();
    std::fs::write(dir.join("h1.json"), algebra_to_json(&l).to_string()).unwrap();
    let m = self_module(&l);
    let mut v = module_to_json(&m);
    v["over"] = serde_json::Value::String("h1.json".into());
    std::fs::write(dir.join("mod.json"), v.to_string()).unwrap();
    assert_eq!(load_module(&dir.join("mod.json")).unwrap(), m);
    let inline = module_to_json(&m).to_string();
    std::fs::write(dir.join("inline.json"), inline).unwrap();
    assert_eq!(load_module(&dir.join("inline.json")).unwrap(), m);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn grading_files() {
    let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
    let gr = Grading::diagonal(&g, &[0, 5, 3]).unwrap();
    let v = grading_to_json(&gr).unwrap();
    assert_eq!(grading_from_value(&v, 3).unwrap(), gr);
    let bad = parse_json(r#"{"group": [2], "assignment": [[1, [0]], [1, [1]]]}"#).unwrap();
    assert!(grading_from_value(&bad, 2).unwrap_err().to_string().contains("assigned twice"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_algebras_roundtrip(seed in any::<u64>()) {
        let l = random_lie(&mut rng(seed));
        prop_assert_eq!(parse_algebra(&algebra_to_json(&l).to_string()).unwrap(), l);
    }
}
