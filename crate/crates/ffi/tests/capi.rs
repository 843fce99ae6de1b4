use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use latflag_ffi::*;

fn catalog(name: &str) -> *mut LatflagPoset {
    let name = CString::new(name).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { latflag_poset_catalog(name.as_ptr(), &mut p) },
        LatflagStatus::Ok
    );
    assert!(!p.is_null());
    p
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(latflag_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn partition_lattice_values() {
    let p = catalog("Pi4");
    unsafe {
        let (mut n, mut rank, mut len) = (0usize, 0usize, 0usize);
        assert_eq!(latflag_poset_element_count(p, &mut n), LatflagStatus::Ok);
        assert_eq!(latflag_poset_rank(p, &mut rank), LatflagStatus::Ok);
        assert_eq!(latflag_flag_len(p, &mut len), LatflagStatus::Ok);
        assert_eq!((n, rank, len), (15, 3, 4));
        let mut f = [0i64; 4];
        let mut h = [0i64; 4];
        assert_eq!(latflag_flag_f(p, f.as_mut_ptr(), 4), LatflagStatus::Ok);
        assert_eq!(latflag_flag_h(p, h.as_mut_ptr(), 4), LatflagStatus::Ok);
        assert_eq!((f, h), ([1, 6, 7, 18], [1, 5, 6, 6]));
        assert_eq!(
            latflag_flag_f(p, f.as_mut_ptr(), 3),
            LatflagStatus::BufferTooSmall
        );
        let mut mu = 0i64;
        assert_eq!(latflag_mobius(p, &mut mu), LatflagStatus::Ok);
        assert_eq!(mu, -6);
        let mut betti = 0usize;
        assert_eq!(latflag_top_betti(p, 0, &mut betti), LatflagStatus::Ok);
        assert_eq!(betti, 6);
        let mut cm = false;
        assert_eq!(latflag_is_cohen_macaulay(p, 2, &mut cm), LatflagStatus::Ok);
        assert!(cm);
        let mut lattice = false;
        assert_eq!(latflag_poset_is_lattice(p, &mut lattice), LatflagStatus::Ok);
        assert!(lattice);
        latflag_poset_free(p);
    }
}

#[test]
fn verify_reports_verdict_and_witness() {
    let b4 = catalog("B4");
    let chain = catalog("chain3");
    let check = CString::new("theorem").unwrap();
    unsafe {
        let mut v = LatflagVerdict::Fail;
        let mut w = ptr::null_mut();
        assert_eq!(
            latflag_verify(b4, check.as_ptr(), 0, 0, &mut v, &mut w),
            LatflagStatus::Ok
        );
        assert_eq!(v, LatflagVerdict::Pass);
        assert_eq!(CStr::from_ptr(w).to_str().unwrap(), "equality for all S");
        latflag_string_free(w);
        assert_eq!(
            latflag_verify(chain, check.as_ptr(), 0, 0, &mut v, ptr::null_mut()),
            LatflagStatus::Ok
        );
        assert_eq!(v, LatflagVerdict::NotApplicable);
        let bogus = CString::new("bogus").unwrap();
        assert_eq!(
            latflag_verify(chain, bogus.as_ptr(), 0, 0, &mut v, ptr::null_mut()),
            LatflagStatus::InvalidArgument
        );
        assert!(last_error().contains("bogus"));
        latflag_poset_free(b4);
        latflag_poset_free(chain);
    }
}

#[test]
fn parse_errors_and_round_trip() {
    let bad = CString::new("poset x\nrank 1\nelements 2\nelem 0 0\nelem 1 1\ncover 0 7\n").unwrap();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            latflag_poset_parse(bad.as_ptr(), &mut p),
            LatflagStatus::Parse
        );
        assert!(p.is_null());
        assert!(last_error().contains("line 6"), "{}", last_error());

        let b3 = catalog("B3");
        let mut s = ptr::null_mut();
        assert_eq!(latflag_poset_to_text(b3, &mut s), LatflagStatus::Ok);
        let mut q = ptr::null_mut();
        assert_eq!(latflag_poset_parse(s, &mut q), LatflagStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(latflag_poset_to_text(q, &mut again), LatflagStatus::Ok);
        assert_eq!(CStr::from_ptr(s), CStr::from_ptr(again));
        for x in [s, again] {
            latflag_string_free(x);
        }
        latflag_poset_free(b3);
        latflag_poset_free(q);
    }
}

#[test]
fn argument_errors() {
    unsafe {
        let mut n = 0usize;
        assert_eq!(
            latflag_poset_rank(ptr::null(), &mut n),
            LatflagStatus::NullPointer
        );
        let p = catalog("B3");
        assert_eq!(
            latflag_poset_rank(p, ptr::null_mut()),
            LatflagStatus::NullPointer
        );
        let mut b = 0usize;
        assert_eq!(
            latflag_top_betti(p, 4, &mut b),
            LatflagStatus::InvalidArgument
        );
        let name = CString::new("nope").unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(
            latflag_poset_catalog(name.as_ptr(), &mut q),
            LatflagStatus::InvalidArgument
        );
        let missing = CString::new("/nonexistent/x.poset").unwrap();
        assert_eq!(
            latflag_poset_read_file(missing.as_ptr(), &mut q),
            LatflagStatus::Io
        );
        latflag_poset_free(p);
        latflag_poset_free(ptr::null_mut());
    }
}

#[test]
fn large_flag_vector_fits() {
    let p = catalog("B12");
    unsafe {
        let mut len = 0usize;
        latflag_flag_len(p, &mut len);
        let mut buf = vec![0i64; len];
        assert_eq!(latflag_flag_f(p, buf.as_mut_ptr(), len), LatflagStatus::Ok);
        assert_eq!(buf[len - 1], 479_001_600);
        latflag_poset_free(p);
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "latflag.h"

int main(void) {
    LatflagPoset *p = NULL;
    if (latflag_poset_catalog("Pi4", &p) != LATFLAG_STATUS_OK) return 1;
    int64_t f[4];
    if (latflag_flag_f(p, f, 4) != LATFLAG_STATUS_OK) return 2;
    int64_t mu = 0;
    latflag_mobius(p, &mu);
    LatflagVerdict v;
    char *w = NULL;
    if (latflag_verify(p, "conjecture", 0, 0, &v, &w) != LATFLAG_STATUS_OK) return 3;
    printf("%lld %lld %lld %lld %lld %d %s\n", (long long)f[0], (long long)f[1], (long long)f[2],
           (long long)f[3], (long long)mu, (int)v, w);
    latflag_string_free(w);
    latflag_poset_free(p);
    if (latflag_poset_parse("garbage", &p) != LATFLAG_STATUS_PARSE) return 4;
    return 0;
}
"#;

#[test]
fn c_program_links_against_header_and_staticlib() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("liblatflag_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let work = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("capi");
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("smoke.c");
    let exe = work.join("smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1 6 7 18 -6 0 strict for all nonempty S; mobius-nonzero-everywhere=true\n"
    );
}
