use std::ffi::{CStr, CString};
use std::ptr;

use polysum_ffi::*;

const SQUARE: &str = r#"{"ambient_dim": 2, "vertices": [["-1","-1"],["1","-1"],["1","1"],["-1","1"]]}"#;
const DIAMOND: &str = r#"{"ambient_dim": 2, "vertices": [["2","0"],["0","2"],["-2","0"],["0","-2"]]}"#;
const HSEG: &str = r#"{"ambient_dim": 2, "vertices": [["0","0"],["1","0"]]}"#;

fn polytope(json: &str) -> *mut PolysumPolytope {
    let json = CString::new(json).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { polysum_polytope_from_json(json.as_ptr(), &mut p) }, PolysumStatus::Ok);
    assert!(!p.is_null());
    p
}

fn take_string(s: *mut libc::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { polysum_string_free(s) };
    out
}

fn f_vector(p: *const PolysumPolytope) -> Vec<u64> {
    let mut buf = [0u64; 8];
    let mut len = 0;
    assert_eq!(unsafe { polysum_polytope_f_vector(p, buf.as_mut_ptr(), buf.len(), &mut len) }, PolysumStatus::Ok);
    buf[..len].to_vec()
}

#[test]
fn octagon_round_trip() {
    let sq = polytope(SQUARE);
    let di = polytope(DIAMOND);
    assert_eq!(f_vector(sq), vec![4, 4]);

    let parts = [sq as *const _, di as *const _];
    let mut sum = ptr::null_mut();
    assert_eq!(unsafe { polysum_sum_new(parts.as_ptr(), 2, &mut sum) }, PolysumStatus::Ok);
    let mut gp = false;
    assert_eq!(unsafe { polysum_sum_general_position(sum, &mut gp) }, PolysumStatus::Ok);
    assert!(gp);

    let mut oct = ptr::null_mut();
    assert_eq!(unsafe { polysum_sum_polytope(sum, &mut oct) }, PolysumStatus::Ok);
    assert_eq!(f_vector(oct), vec![8, 8]);

    let id = CString::new("mainthm").unwrap();
    let mut json = ptr::null_mut();
    let mut pass = false;
    assert_eq!(unsafe { polysum_sum_verify(sum, id.as_ptr(), ptr::null(), &mut json, &mut pass) }, PolysumStatus::Ok);
    assert!(pass);
    let reports: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(reports[0]["identity"], "mainthm");
    assert_eq!(reports[0]["lhs"], "0");

    let mut text = ptr::null_mut();
    assert_eq!(unsafe { polysum_polytope_to_json(oct, &mut text) }, PolysumStatus::Ok);
    assert!(take_string(text).contains("ambient_dim"));

    unsafe {
        polysum_polytope_free(oct);
        polysum_sum_free(sum);
        polysum_polytope_free(sq);
        polysum_polytope_free(di);
    }
}

#[test]
fn maincor_parameter() {
    let sq = polytope(SQUARE);
    let di = polytope(DIAMOND);
    let parts = [sq as *const _, di as *const _];
    let mut sum = ptr::null_mut();
    assert_eq!(unsafe { polysum_sum_new(parts.as_ptr(), 2, &mut sum) }, PolysumStatus::Ok);
    let id = CString::new("maincor").unwrap();
    let a = CString::new("-7/2").unwrap();
    let (mut json, mut pass) = (ptr::null_mut(), false);
    assert_eq!(unsafe { polysum_sum_verify(sum, id.as_ptr(), a.as_ptr(), &mut json, &mut pass) }, PolysumStatus::Ok);
    assert!(pass);
    assert!(take_string(json).contains("a = -7/2"));

    let bad = CString::new("7/0").unwrap();
    assert_eq!(unsafe { polysum_sum_verify(sum, id.as_ptr(), bad.as_ptr(), &mut json, &mut pass) }, PolysumStatus::Parse);
    unsafe {
        polysum_sum_free(sum);
        polysum_polytope_free(sq);
        polysum_polytope_free(di);
    }
}

#[test]
fn negative_control_and_perturbation() {
    let sq = polytope(SQUARE);
    let seg = polytope(HSEG);
    let parts = [sq as *const _, seg as *const _];
    let mut sum = ptr::null_mut();
    assert_eq!(unsafe { polysum_sum_new(parts.as_ptr(), 2, &mut sum) }, PolysumStatus::Ok);
    let mut gp = true;
    assert_eq!(unsafe { polysum_sum_general_position(sum, &mut gp) }, PolysumStatus::Ok);
    assert!(!gp);
    unsafe { polysum_sum_free(sum) };

    let same = [sq as *const _, sq as *const _];
    assert_eq!(unsafe { polysum_sum_perturbed(same.as_ptr(), 2, 2, 0, &mut sum) }, PolysumStatus::Ok);
    let mut gp = false;
    assert_eq!(unsafe { polysum_sum_general_position(sum, &mut gp) }, PolysumStatus::Ok);
    assert!(gp);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { polysum_sum_polytope(sum, &mut p) }, PolysumStatus::Ok);
    assert_eq!(f_vector(p), vec![8, 8]);
    unsafe {
        polysum_polytope_free(p);
        polysum_sum_free(sum);
        polysum_polytope_free(sq);
        polysum_polytope_free(seg);
    }
}

#[test]
fn polytope_identities_and_dual() {
    let sq = polytope(SQUARE);
    let mut centered = false;
    assert_eq!(unsafe { polysum_polytope_perfectly_centered(sq, &mut centered) }, PolysumStatus::Ok);
    assert!(centered);
    for name in ["euler", "bb", "dsrshort", "nestthm", "fvthm", "pc"] {
        let id = CString::new(name).unwrap();
        let (mut json, mut pass) = (ptr::null_mut(), false);
        assert_eq!(unsafe { polysum_polytope_verify(sq, id.as_ptr(), &mut json, &mut pass) }, PolysumStatus::Ok, "{name}");
        assert!(pass, "{name}");
        take_string(json);
    }
    let mut dual = ptr::null_mut();
    assert_eq!(unsafe { polysum_polytope_dual(sq, &mut dual) }, PolysumStatus::Ok);
    let mut dim = 0;
    assert_eq!(unsafe { polysum_polytope_dim(dual, &mut dim) }, PolysumStatus::Ok);
    assert_eq!((dim, f_vector(dual)), (2, vec![4, 4]));

    let seg = polytope(HSEG);
    assert_eq!(unsafe { polysum_polytope_dual(seg, &mut dual) }, PolysumStatus::InvalidInput);
    assert!(take_string(polysum_last_error()).contains("full-dimensional"));
    unsafe {
        polysum_polytope_free(sq);
        polysum_polytope_free(seg);
    }
}

#[test]
fn error_codes() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { polysum_polytope_from_json(ptr::null(), &mut p) }, PolysumStatus::NullPointer);
    let bad = CString::new("{not json").unwrap();
    assert_eq!(unsafe { polysum_polytope_from_json(bad.as_ptr(), &mut p) }, PolysumStatus::Parse);
    assert!(!polysum_last_error().is_null());

    let sq = polytope(SQUARE);
    assert!(polysum_last_error().is_null());
    let mut len = 0;
    let mut one = [0u64; 1];
    assert_eq!(unsafe { polysum_polytope_f_vector(sq, one.as_mut_ptr(), 1, &mut len) }, PolysumStatus::BufferTooSmall);
    assert_eq!(len, 2);

    let id = CString::new("mainthm").unwrap();
    let (mut json, mut pass) = (ptr::null_mut(), false);
    assert_eq!(unsafe { polysum_polytope_verify(sq, id.as_ptr(), &mut json, &mut pass) }, PolysumStatus::InvalidInput);
    let unknown = CString::new("nope").unwrap();
    assert_eq!(unsafe { polysum_polytope_verify(sq, unknown.as_ptr(), &mut json, &mut pass) }, PolysumStatus::InvalidInput);

    let point = polytope(r#"{"ambient_dim": 3, "vertices": [["0","0","0"]]}"#);
    assert_eq!(f_vector(point), vec![1]);
    unsafe {
        polysum_polytope_free(sq);
        polysum_polytope_free(point);
        polysum_polytope_free(ptr::null_mut());
        polysum_string_free(ptr::null_mut());
    }
}
