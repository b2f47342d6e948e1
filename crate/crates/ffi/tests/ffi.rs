use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use conelab_ffi::*;

fn last_error() -> String {
    let p = conelab_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut libc::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { conelab_string_free(p) };
    s
}

#[test]
fn cone_round_trip() {
    let gens = [1i64, 0, 1, 1];
    let mut cone = ptr::null_mut();
    unsafe {
        assert_eq!(conelab_cone_new(2, gens.as_ptr(), 2, &mut cone), ConelabStatus::Ok);
        let mut dim = 0;
        assert_eq!(conelab_cone_dim(cone, &mut dim), ConelabStatus::Ok);
        assert_eq!(dim, 2);

        let mut member = false;
        assert_eq!(conelab_cone_contains(cone, [2i64, 1].as_ptr(), 2, &mut member), ConelabStatus::Ok);
        assert!(member);
        assert_eq!(conelab_cone_contains(cone, [1i64, 2].as_ptr(), 2, &mut member), ConelabStatus::Ok);
        assert!(!member);

        let mut pointed = false;
        assert_eq!(conelab_cone_is_strongly_convex(cone, &mut pointed), ConelabStatus::Ok);
        assert!(pointed);

        let mut text = ptr::null_mut();
        assert_eq!(conelab_cone_facets(cone, &mut text), ConelabStatus::Ok);
        assert_eq!(take_string(text), "normals = [[0, 1], [1, -1]]\nequations = []\n");
        conelab_cone_free(cone);
    }
}

#[test]
fn cone_from_text() {
    let text = CString::new("dim = 2\ngenerators = [\"[1, 1]\", \"[1, -1]\"]\n").unwrap();
    let mut cone = ptr::null_mut();
    unsafe {
        assert_eq!(conelab_cone_parse(text.as_ptr(), &mut cone), ConelabStatus::Ok);
        let mut member = false;
        assert_eq!(conelab_cone_contains(cone, [3i64, -2].as_ptr(), 2, &mut member), ConelabStatus::Ok);
        assert!(member);
        conelab_cone_free(cone);
    }
    let bad = CString::new("dim = 2\ngenerators = [\"[1, x]\"]\n").unwrap();
    let mut cone = ptr::null_mut();
    assert_eq!(unsafe { conelab_cone_parse(bad.as_ptr(), &mut cone) }, ConelabStatus::Parse);
    assert!(cone.is_null());
    assert!(last_error().contains("generator 1"), "{}", last_error());
}

#[test]
fn errors_are_reported() {
    let mut cone = ptr::null_mut();
    unsafe {
        assert_eq!(conelab_cone_new(2, ptr::null(), 1, &mut cone), ConelabStatus::NullPointer);
        assert!(last_error().contains("coords"));
        assert_eq!(conelab_cone_new(2, [1i64, 0].as_ptr(), 1, ptr::null_mut()), ConelabStatus::NullPointer);

        assert_eq!(conelab_cone_new(2, [1i64, 0].as_ptr(), 1, &mut cone), ConelabStatus::Ok);
        let mut member = false;
        assert_eq!(
            conelab_cone_contains(cone, [1i64, 0, 0].as_ptr(), 3, &mut member),
            ConelabStatus::DimensionMismatch
        );
        assert!(last_error().contains("dimension mismatch"));
        assert_eq!(conelab_cone_dim(ptr::null(), ptr::null_mut()), ConelabStatus::NullPointer);
        conelab_cone_free(cone);
        conelab_cone_free(ptr::null_mut());
        conelab_group_free(ptr::null_mut());
        conelab_string_free(ptr::null_mut());
    }
}

#[test]
fn groups() {
    let mut group = ptr::null_mut();
    unsafe {
        assert_eq!(conelab_group_from_relations(1, 2, [0i64, 4].as_ptr(), &mut group), ConelabStatus::Ok);
        let mut rank = 0;
        assert_eq!(conelab_group_free_rank(group, &mut rank), ConelabStatus::Ok);
        assert_eq!(rank, 1);
        let mut text = ptr::null_mut();
        assert_eq!(conelab_group_torsion(group, &mut text), ConelabStatus::Ok);
        assert_eq!(take_string(text), "[4]");
        assert_eq!(conelab_group_summary(group, &mut text), ConelabStatus::Ok);
        assert_eq!(take_string(text), "Z + Z/4");
        conelab_group_free(group);

        // No relations: the free group on the generators.
        assert_eq!(conelab_group_from_relations(0, 3, ptr::null(), &mut group), ConelabStatus::Ok);
        assert_eq!(conelab_group_summary(group, &mut text), ConelabStatus::Ok);
        assert_eq!(take_string(text), "Z^3");
        conelab_group_free(group);
    }
}

#[test]
fn checks_on_entries() {
    let entry = CString::new("quadric-cone-3d").unwrap();
    let mut verdict = ConelabVerdict::Violated;
    let mut report = ptr::null_mut();
    unsafe {
        let t1 = CString::new("t1").unwrap();
        assert_eq!(conelab_check_entry(entry.as_ptr(), t1.as_ptr(), &mut verdict, &mut report), ConelabStatus::Ok);
        assert_eq!(verdict, ConelabVerdict::Holds);
        assert!(take_string(report).contains("verdict:    holds"));

        let bogus = CString::new("t2").unwrap();
        assert_eq!(
            conelab_check_entry(entry.as_ptr(), bogus.as_ptr(), &mut verdict, ptr::null_mut()),
            ConelabStatus::InvalidArgument
        );
        let missing = CString::new("no-such-ring").unwrap();
        assert_eq!(
            conelab_check_entry(missing.as_ptr(), t1.as_ptr(), &mut verdict, ptr::null_mut()),
            ConelabStatus::UnknownEntry
        );
        assert!(last_error().contains("quadric-cone-3d"));
    }
}

#[test]
fn version_is_cargo_version() {
    let v = unsafe { CStr::from_ptr(conelab_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Directory holding the built static library: the parent of `deps/`.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf()
}

#[test]
fn header_is_current_and_links_from_c() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(manifest.join("include/conelab.h")).unwrap();
    for symbol in ["conelab_cone_new", "conelab_check_entry", "CONELAB_STATUS_UNKNOWN_ENTRY", "ConelabGroup"] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }

    let lib = artifact_dir().join("libconelab_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping C link test: no static library at {} or no `{cc}`", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).env_remove("CONELAB_DATA").output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
