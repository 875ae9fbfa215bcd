use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use satlab_ffi::*;

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    satlab_string_free(p);
    s
}

unsafe fn parse(text: &str) -> *mut SatlabGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(satlab_graph_from_graph6(c.as_ptr(), &mut g), SatlabStatus::Ok);
    g
}

#[test]
fn handles_and_counts() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(satlab_graph_split(10, 4, &mut g), SatlabStatus::Ok);
        assert_eq!(satlab_graph_vertex_count(g), 10);
        assert_eq!(satlab_graph_edge_count(g), 30);

        let (mut hi, mut lo) = (7u64, 7u64);
        assert_eq!(satlab_count(g, SatlabMotif::Clique, 3, &mut hi, &mut lo), SatlabStatus::Ok);
        assert_eq!((hi, lo), (0, 40));

        let mut sat = false;
        assert_eq!(satlab_is_saturated(g, 6, &mut sat), SatlabStatus::Ok);
        assert!(sat);
        assert_eq!(satlab_is_saturated(g, 5, &mut sat), SatlabStatus::Ok);
        assert!(!sat);

        let mut s = ptr::null_mut();
        assert_eq!(satlab_graph_to_graph6(g, &mut s), SatlabStatus::Ok);
        let text = take_string(s);
        let h = parse(&text);
        let mut iso = false;
        assert_eq!(satlab_is_isomorphic(g, h, &mut iso), SatlabStatus::Ok);
        assert!(iso);
        satlab_graph_free(h);
        satlab_graph_free(g);
    }
}

#[test]
fn certificates_ignore_labels() {
    unsafe {
        // two labellings of P3
        let a = parse("Bg");
        let b = parse("BW");
        let (mut ca, mut cb) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(satlab_graph_certificate(a, &mut ca), SatlabStatus::Ok);
        assert_eq!(satlab_graph_certificate(b, &mut cb), SatlabStatus::Ok);
        assert_eq!(take_string(ca), take_string(cb));

        let mut e = ptr::null_mut();
        assert_eq!(satlab_graph_empty(3, &mut e), SatlabStatus::Ok);
        assert_eq!(satlab_graph_add_edge(e, 0, 1), SatlabStatus::Ok);
        assert_eq!(satlab_graph_add_edge(e, 1, 2), SatlabStatus::Ok);
        let mut iso = false;
        assert_eq!(satlab_is_isomorphic(a, e, &mut iso), SatlabStatus::Ok);
        assert!(iso);
        assert_eq!(satlab_graph_add_edge(e, 1, 1), SatlabStatus::InvalidArgument);
        assert_eq!(satlab_graph_add_edge(e, 0, 3), SatlabStatus::InvalidArgument);
        for g in [a, b, e] {
            satlab_graph_free(g);
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let bad = CString::new("A").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(satlab_graph_from_graph6(bad.as_ptr(), &mut g), SatlabStatus::ParseError);
        assert!(g.is_null());
        let msg = CStr::from_ptr(satlab_last_error()).to_str().unwrap();
        assert!(msg.contains("parse"), "{msg}");

        assert_eq!(satlab_graph_from_graph6(ptr::null(), &mut g), SatlabStatus::NullPointer);
        assert_eq!(satlab_graph_split(3, 5, &mut g), SatlabStatus::InvalidArgument);
        assert_eq!(satlab_graph_empty(513, &mut g), SatlabStatus::InvalidArgument);

        assert_eq!(satlab_graph_empty(512, &mut g), SatlabStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(satlab_count_decimal(g, SatlabMotif::Indepset, 40, &mut s), SatlabStatus::Overflow);
        assert_eq!(satlab_count_decimal(g, SatlabMotif::Matching, 0, &mut s), SatlabStatus::InvalidArgument);
        let mut hi = 0;
        assert_eq!(satlab_count(g, SatlabMotif::Clique, 2, &mut hi, ptr::null_mut()), SatlabStatus::NullPointer);
        satlab_graph_free(g);

        let mut flag = false;
        assert_eq!(satlab_is_saturated(ptr::null(), 3, &mut flag), SatlabStatus::NullPointer);
        assert_eq!(
            satlab_extremal_search_json(9, 3, SatlabMotif::Clique, 2, SatlabMode::Min, 1, &mut s),
            SatlabStatus::BudgetExceeded
        );
        satlab_graph_free(ptr::null_mut());
        satlab_string_free(ptr::null_mut());
    }
}

#[test]
fn search_json() {
    unsafe {
        let mut a = ptr::null_mut();
        let mut b = ptr::null_mut();
        assert_eq!(satlab_extremal_search_json(6, 3, SatlabMotif::Clique, 2, SatlabMode::Min, 1, &mut a), SatlabStatus::Ok);
        assert_eq!(satlab_extremal_search_json(6, 3, SatlabMotif::Clique, 2, SatlabMode::Min, 4, &mut b), SatlabStatus::Ok);
        let (a, b) = (take_string(a), take_string(b));
        assert_eq!(a, b);
        assert!(a.contains("\"optimum\":\"5\""), "{a}");
        assert!(a.contains("\"unique\":true"));
    }
}

#[test]
fn header_declares_the_interface() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/satlab.h")).unwrap();
    for name in [
        "typedef struct SatlabGraph SatlabGraph;",
        "satlab_graph_from_graph6",
        "satlab_graph_free",
        "satlab_count(",
        "satlab_is_saturated",
        "satlab_string_free",
        "SATLAB_STATUS_PARSE_ERROR = 2",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

/// Compiles a C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libsatlab_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let out_dir = profile_dir.join("c_smoke");
    std::fs::create_dir_all(&out_dir).unwrap();
    let bin = out_dir.join("c_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .arg(dir.join("tests/c_smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
