use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use prelorentz_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { pl_string_free(s) };
    out
}

fn last_error() -> String {
    let p = pl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn leafy_star_round_trip() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pl_leafy_star(1, &mut g) }, PlStatus::Ok);
    assert_eq!(unsafe { pl_graph_num_vertices(g) }, 4);
    assert_eq!(unsafe { pl_graph_num_edges(g) }, 3);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { pl_graph_to_json(g, &mut s) }, PlStatus::Ok);
    let json = take(s);
    assert!(json.contains("\"bound_colour\":\"x\""));

    let cj = CString::new(json.clone()).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { pl_graph_from_json(cj.as_ptr(), &mut back) }, PlStatus::Ok);
    let mut s2 = ptr::null_mut();
    unsafe { pl_graph_to_json(back, &mut s2) };
    assert_eq!(take(s2), json);

    let mut seq = ptr::null_mut();
    assert_eq!(unsafe { pl_indep_sequence_json(g, &mut seq) }, PlStatus::Ok);
    assert_eq!(take(seq), "[1,4,3]");
    unsafe {
        pl_graph_free(g);
        pl_graph_free(back);
    }
}

#[test]
fn glue_and_certify() {
    let (mut a, mut b, mut glued) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        pl_leafy_star(1, &mut a);
        pl_leafy_star(1, &mut b);
    }
    let x1 = CString::new("x1").unwrap();
    let st = unsafe { pl_glue(a, b, x1.as_ptr(), x1.as_ptr(), true, &mut glued) };
    assert_eq!(st, PlStatus::Ok);
    assert_eq!(unsafe { pl_graph_num_vertices(glued) }, 8);
    assert_eq!(unsafe { pl_graph_num_edges(glued) }, 7);

    let mut ok = false;
    let mut cert = ptr::null_mut();
    let st = unsafe { pl_certify_pre_lorentzian(glued, 4, 0, &mut ok, &mut cert) };
    assert_eq!(st, PlStatus::Ok);
    assert!(ok);
    assert!(take(cert).contains("\"verdict\":\"certified\""));

    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pl_coloured_poly(a, &mut p) }, PlStatus::Ok);
    let mut pj = ptr::null_mut();
    unsafe { pl_poly_to_json(p, &mut pj) };
    let pj = take(pj);
    assert!(pj.starts_with("{\"vars\":[\"x\",\"x1\"]"));
    unsafe {
        pl_poly_free(p);
        pl_graph_free(a);
        pl_graph_free(b);
        pl_graph_free(glued);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("{\"vertices\": [").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pl_graph_from_json(bad.as_ptr(), &mut g) }, PlStatus::Parse);
    assert!(g.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(unsafe { pl_leafy_star(0, &mut g) }, PlStatus::InvalidArgument);
    assert_eq!(unsafe { pl_graph_from_json(ptr::null(), &mut g) }, PlStatus::NullPointer);
    assert_eq!(unsafe { pl_leafy_star(2, ptr::null_mut()) }, PlStatus::NullPointer);

    let plain = CString::new(r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#).unwrap();
    unsafe { pl_graph_from_json(plain.as_ptr(), &mut g) };
    let (mut ok, mut out) = (false, ptr::null_mut());
    let st = unsafe { pl_certify_pre_lorentzian(g, 2, 0, &mut ok, &mut out) };
    assert_eq!(st, PlStatus::InvalidArgument);
    assert!(last_error().contains("bound colour"));
    unsafe { pl_graph_free(g) };
}

#[test]
fn refuted_polynomial() {
    let j = CString::new(r#"{"vars":["x","y"],"terms":[{"exp":[2,0],"coef":"1"},{"exp":[1,1],"coef":"1"},{"exp":[0,2],"coef":"1"}]}"#).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pl_poly_from_json(j.as_ptr(), &mut p) }, PlStatus::Ok);
    let (mut ok, mut out) = (true, ptr::null_mut());
    assert_eq!(unsafe { pl_certify_lorentzian(p, 0, &mut ok, &mut out) }, PlStatus::Ok);
    assert!(!ok);
    assert!(take(out).contains("hessian_inertia"));
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { pl_certify_lorentzian(p, 1, &mut ok, &mut out) },
        PlStatus::Ok
    );
    take(out);
    unsafe { pl_poly_free(p) };
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/prelorentz.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["pl_leafy_star", "pl_glue", "pl_certify_lorentzian", "pl_string_free", "PL_STATUS_OK", "PlGraph"] {
        assert!(text.contains(name), "header lacks {name}");
    }
    let Ok(st) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler, syntax check skipped");
        return;
    };
    assert!(st.success());
}
