use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use nervekit_ffi::*;

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { nk_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(nk_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn coherent_nerve_round_trips_through_json() {
    let name = CString::new("bz2").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { nk_scat_fixture(name.as_ptr(), 2, &mut c) }, NkStatus::Ok);
    let mut x = ptr::null_mut();
    assert_eq!(unsafe { nk_coherent_nerve(c, 2, &mut x) }, NkStatus::Ok);
    let counts: Vec<usize> = (0..=2)
        .map(|k| {
            let mut n = 0;
            assert_eq!(unsafe { nk_sset_count(x, k, &mut n) }, NkStatus::Ok);
            n
        })
        .collect();
    assert_eq!(counts, nervekit::nerves::coherent_nerve(&nervekit::corpus::scat("bz2", 2).unwrap(), 2).unwrap().sset.counts());

    let mut n = 0;
    assert_eq!(unsafe { nk_sset_count(x, 3, &mut n) }, NkStatus::BeyondCap);
    assert!(last_error().contains("cap"));

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { nk_sset_to_json(x, &mut json) }, NkStatus::Ok);
    let json = CString::new(take(json)).unwrap();
    let mut y = ptr::null_mut();
    assert_eq!(unsafe { nk_sset_from_json(json.as_ptr(), &mut y) }, NkStatus::Ok);
    let mut cap = 0;
    assert_eq!(unsafe { nk_sset_cap(y, &mut cap) }, NkStatus::Ok);
    assert_eq!(cap, 2);
    unsafe {
        nk_sset_free(x);
        nk_sset_free(y);
        nk_scat_free(c);
    }
}

#[test]
fn checks_report_verdicts() {
    let name = CString::new("bz2_over_arrow").unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { nk_diagram_fixture(name.as_ptr(), 2, &mut f) }, NkStatus::Ok);
    let mut cert = ptr::null_mut();
    assert_eq!(unsafe { nk_check_gr_relnerve(f, 2, &mut cert) }, NkStatus::Ok);
    assert_eq!(unsafe { nk_certificate_passed(cert) }, 1);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { nk_certificate_render(cert, 1, &mut text) }, NkStatus::Ok);
    let parsed = nervekit::certificate::Certificate::from_structured(&take(text)).unwrap();
    assert!(parsed.passed());
    unsafe {
        nk_certificate_free(cert);
        nk_diagram_free(f);
    }

    let name = CString::new("bz2").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { nk_monoidal_fixture(name.as_ptr(), 2, &mut m) }, NkStatus::Ok);
    for status in unsafe {
        let mut a = ptr::null_mut();
        let mut b = ptr::null_mut();
        let mut c = ptr::null_mut();
        let s = [nk_check_cotimes_gr(m, 2, &mut a), nk_check_fibers(m, 2, 2, 2, &mut b), nk_check_opposites(m, 2, 2, &mut c)];
        nk_certificate_free(a);
        nk_certificate_free(b);
        nk_certificate_free(c);
        s
    } {
        assert_eq!(status, NkStatus::Ok);
    }
    unsafe { nk_monoidal_free(m) };
}

#[test]
fn errors_are_codes() {
    let mut m = ptr::null_mut();
    let name = CString::new("left_zero").unwrap();
    // loading succeeds; the laws are checked by the operations that need them
    assert_eq!(unsafe { nk_monoidal_fixture(name.as_ptr(), 2, &mut m) }, NkStatus::Ok);
    let mut cert = ptr::null_mut();
    assert_eq!(unsafe { nk_check_cotimes_gr(m, 2, &mut cert) }, NkStatus::InvalidMonoidal);
    assert!(cert.is_null());
    assert!(!last_error().is_empty());
    unsafe { nk_monoidal_free(m) };

    let name = CString::new("no_such_fixture").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { nk_scat_fixture(name.as_ptr(), 2, &mut c) }, NkStatus::Malformed);
    assert_eq!(unsafe { nk_scat_fixture(ptr::null(), 2, &mut c) }, NkStatus::NullPointer);

    let broken = CString::new("{\"cap\": 1").unwrap();
    let mut x = ptr::null_mut();
    assert_eq!(unsafe { nk_sset_from_json(broken.as_ptr(), &mut x) }, NkStatus::Malformed);
    assert!(last_error().contains("malformed"));

    let mut cert = ptr::null_mut();
    assert_eq!(unsafe { nk_check_gr_relnerve(ptr::null(), 2, &mut cert) }, NkStatus::NullPointer);
    assert_eq!(unsafe { nk_certificate_passed(ptr::null()) }, 0);
    unsafe { nk_sset_free(ptr::null_mut()) };
}

#[test]
fn cli_entry_point() {
    let args: Vec<CString> = ["nervekit", "check", "opfibration", "--diagram", "opfibration_negative"]
        .into_iter()
        .map(|a| CString::new(a).unwrap())
        .collect();
    let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    assert_eq!(unsafe { nk_cli_run(argv.len() as i32, argv.as_ptr()) }, 1);
    assert_eq!(unsafe { nk_cli_run(1, ptr::null()) }, 2);
}

/// Compiles a small C program against the generated header and the static
/// library. Skipped when no C compiler is on the path.
#[test]
fn c_smoke_test() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let staticlib = profile_dir.join("libnervekit_ffi.a");
    if !staticlib.exists() {
        eprintln!("skipping: {} not built", staticlib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("smoke.c");
    std::fs::write(
        &source,
        r#"#include <stdio.h>
#include "nervekit.h"
int main(void) {
    NkMonoidal *m = NULL;
    if (nk_monoidal_fixture("bz2", 2, &m) != NK_STATUS_OK) return 10;
    NkCertificate *cert = NULL;
    if (nk_check_fibers(m, 2, 2, 1, &cert) != NK_STATUS_OK) return 11;
    if (!nk_certificate_passed(cert)) return 12;
    char *text = NULL;
    if (nk_certificate_render(cert, 0, &text) != NK_STATUS_OK) return 13;
    printf("%s", text);
    nk_string_free(text);
    nk_certificate_free(cert);
    nk_monoidal_free(m);
    if (nk_monoidal_fixture("nonassociative", 2, &m) != NK_STATUS_OK) return 14;
    if (nk_check_cotimes_gr(m, 2, &cert) != NK_STATUS_INVALID_MONOIDAL) return 15;
    nk_monoidal_free(m);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg(&source)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
}
