use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use isotypic_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = iso_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn example(name: &str, mu: Option<&str>) -> *mut IsoHopf {
    let name = cstr(name);
    let mu = mu.map(cstr);
    let mut h = ptr::null_mut();
    let s = unsafe {
        iso_example(name.as_ptr(), mu.as_ref().map_or(ptr::null(), |m| m.as_ptr()), ptr::null(), false, &mut h)
    };
    assert_eq!(s, IsoStatus::Ok);
    h
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    iso_string_free(p);
    s
}

#[test]
fn example_emit_load_round_trip() {
    let h = example("ks3", None);
    unsafe {
        assert_eq!(iso_dim(h), 6);
        assert_eq!(iso_verify_axioms(h), IsoStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(iso_emit_spec_json(h, &mut out), IsoStatus::Ok);
        let json = take_string(out);
        let c = cstr(&json);
        let mut back = ptr::null_mut();
        assert_eq!(iso_load_spec_json(c.as_ptr(), &mut back), IsoStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(iso_emit_spec_json(back, &mut again), IsoStatus::Ok);
        assert_eq!(take_string(again), json);
        iso_free(back);
        iso_free(h);
    }
}

#[test]
fn failed_check_still_returns_a_report() {
    let h = example("double-cover", Some("2"));
    let cmd = cstr("idempotents");
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(iso_run_command(h, cmd.as_ptr(), true, &mut out), IsoStatus::CheckFailed);
        let report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(report["passed"], false);
        let witness = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "p̂_V is idempotent").unwrap()
            ["witness"]
            .clone();
        assert_eq!(witness, "p̂_V² − p̂_V = 1 - g^2");
        iso_free(h);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let bad = cstr("{not json");
        let mut h = ptr::null_mut();
        assert_eq!(iso_load_spec_json(bad.as_ptr(), &mut h), IsoStatus::Input);
        assert!(h.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(iso_load_spec_json(ptr::null(), &mut h), IsoStatus::NullPointer);
        assert_eq!(iso_verify_axioms(ptr::null()), IsoStatus::NullPointer);
        assert_eq!(iso_dim(ptr::null()), 0);

        let h = example("sweedler4", None);
        let cmd = cstr("frobnicate");
        let mut out = ptr::null_mut();
        assert_eq!(iso_run_command(h, cmd.as_ptr(), false, &mut out), IsoStatus::Input);
        assert!(out.is_null());
        assert!(last_error().contains("unknown command"));

        let name = cstr("kc2");
        let mu = cstr("1");
        let mut h2 = ptr::null_mut();
        assert_eq!(iso_example(name.as_ptr(), mu.as_ptr(), ptr::null(), false, &mut h2), IsoStatus::Input);
        iso_free(h);
        iso_free(ptr::null_mut());
        iso_string_free(ptr::null_mut());
    }
}

#[test]
fn corrupted_spec_fails_verification() {
    let h = example("sweedler4", None);
    unsafe {
        let mut out = ptr::null_mut();
        iso_emit_spec_json(h, &mut out);
        let mut spec: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        spec["counit"][1] = "2".into();
        let c = cstr(&spec.to_string());
        let mut bad = ptr::null_mut();
        assert_eq!(iso_load_spec_json(c.as_ptr(), &mut bad), IsoStatus::Ok);
        assert_eq!(iso_verify_axioms(bad), IsoStatus::CheckFailed);
        assert!(!last_error().is_empty());
        iso_free(bad);
        iso_free(h);
    }
}

fn target_dir() -> PathBuf {
    // tests/… → target/<profile>/deps/<test-binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libisotypic_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let out = std::env::temp_dir().join(format!("isotypic_smoke_{}", std::process::id()));
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
