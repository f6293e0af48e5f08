use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use binedge_ffi::*;

fn take_string(s: *mut std::ffi::c_char) -> String {
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { bei_string_free(s) };
    text
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bei_last_error()) }.to_str().unwrap().to_owned()
}

fn path(n: usize) -> *mut BeiGraph {
    let edges: Vec<usize> = (1..n).flat_map(|v| [v, v + 1]).collect();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { bei_graph_new(n, edges.as_ptr(), n - 1, &mut g) }, BeiStatus::Ok);
    g
}

#[test]
fn path_round_trip() {
    let g = path(3);
    let mut is_path = false;
    let mut n = 0;
    unsafe {
        assert_eq!(bei_graph_vertex_count(g, &mut n), BeiStatus::Ok);
        assert_eq!(bei_graph_is_path(g, &mut is_path), BeiStatus::Ok);
    }
    assert_eq!(n, 3);
    assert!(is_path);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { bei_groebner_basis(g, &mut s) }, BeiStatus::Ok);
    assert_eq!(take_string(s).lines().count(), 2);

    let (mut fpt, mut reg_q, mut reg_2) = (0, 0, 0);
    unsafe {
        assert_eq!(bei_fpt(g, &mut fpt), BeiStatus::Ok);
        assert_eq!(bei_regularity(g, 0, &mut reg_q), BeiStatus::Ok);
        assert_eq!(bei_regularity(g, 2, &mut reg_2), BeiStatus::Ok);
    }
    assert_eq!((fpt, reg_q, reg_2), (2, 2, 2));

    assert_eq!(unsafe { bei_fedder_json(g, 3, false, &mut s) }, BeiStatus::Ok);
    let cert: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(cert["valid"], true);
    unsafe { bei_graph_free(g) };
}

#[test]
fn closed_labeling_of_a_relabeled_path() {
    let json = CString::new(r#"{"n": 3, "edges": [[1, 3], [3, 2]]}"#).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { bei_graph_from_json(json.as_ptr(), &mut g) }, BeiStatus::Ok);
    let mut sigma = [0usize; 3];
    let mut found = false;
    assert_eq!(unsafe { bei_graph_closed_labeling(g, sigma.as_mut_ptr(), &mut found) }, BeiStatus::Ok);
    assert!(found);
    let mut sorted = sigma;
    sorted.sort();
    assert_eq!(sorted, [1, 2, 3]);
    unsafe { bei_graph_free(g) };
}

#[test]
fn errors_set_status_and_message() {
    let mut g = ptr::null_mut();
    let loop_edge = [2usize, 2];
    assert_eq!(unsafe { bei_graph_new(2, loop_edge.as_ptr(), 1, &mut g) }, BeiStatus::InvalidInput);
    assert!(last_error().contains("loop"));
    assert!(g.is_null());

    let bad = CString::new("{").unwrap();
    assert_eq!(unsafe { bei_graph_from_json(bad.as_ptr(), &mut g) }, BeiStatus::Parse);

    let c4 = CString::new(r#"{"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [1, 4]]}"#).unwrap();
    assert_eq!(unsafe { bei_graph_from_json(c4.as_ptr(), &mut g) }, BeiStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { bei_fedder_json(g, 2, false, &mut s) }, BeiStatus::HypothesisFailed);
    assert!(s.is_null());
    assert!(last_error().contains("not closed"));
    let mut fpt = 0;
    assert_eq!(unsafe { bei_fpt(g, &mut fpt) }, BeiStatus::Ok);
    assert!(bei_last_error().is_null());
    unsafe { bei_graph_free(g) };

    assert_eq!(unsafe { bei_fpt(ptr::null(), &mut fpt) }, BeiStatus::NullPointer);
    let p = path(2);
    assert_eq!(unsafe { bei_fpt(p, ptr::null_mut()) }, BeiStatus::NullPointer);
    unsafe { bei_graph_free(p) };
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/binedge.h")).unwrap();
    for name in [
        "bei_last_error",
        "bei_string_free",
        "bei_graph_new",
        "bei_graph_from_json",
        "bei_graph_free",
        "bei_graph_vertex_count",
        "bei_graph_is_path",
        "bei_graph_closed_labeling",
        "bei_groebner_basis",
        "bei_fpt",
        "bei_regularity",
        "bei_fedder_json",
        "bei_field_name",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct BeiGraph BeiGraph;"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    std::fs::write(&src, "#include \"binedge.h\"\nint main(void) { BeiGraph *g = 0; return bei_graph_free(g), 0; }\n").unwrap();
    let status = Command::new(cc).args(["-fsyntax-only", "-Wall", "-Werror", "-I", include]).arg(&src).status().unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
