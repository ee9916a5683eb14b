use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use pcolor_ffi::*;

fn family(spec: &str) -> *mut PcGraph {
    let s = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pc_graph_from_family(s.as_ptr(), &mut g) }, PcStatus::Ok);
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(pc_last_error_message()) }.to_str().unwrap().to_string()
}

#[test]
fn graph6_round_trip() {
    let s = CString::new("Bw").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(pc_graph_from_graph6(s.as_ptr(), &mut g), PcStatus::Ok);
        assert_eq!((pc_graph_order(g), pc_graph_size(g)), (3, 3));
        let mut out = ptr::null_mut();
        assert_eq!(pc_graph_to_graph6(g, &mut out), PcStatus::Ok);
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), "Bw");
        pc_string_free(out);
        pc_graph_free(g);
    }
}

#[test]
fn chi_rho_with_witness() {
    let g = family("C(5)");
    let mut value = 0;
    let mut colors = [0u32; 5];
    unsafe {
        assert_eq!(pc_chi_rho(g, &mut value, colors.as_mut_ptr(), colors.len()), PcStatus::Ok);
        assert_eq!(value, 4);
        assert!(colors.iter().all(|&c| (1..=4).contains(&c)));
        let mut short = [0u32; 2];
        assert_eq!(pc_chi_rho(g, &mut value, short.as_mut_ptr(), short.len()), PcStatus::BufferTooSmall);
        assert!(!last_error().is_empty());
        let mut found = true;
        assert_eq!(pc_find_coloring(g, 3, &mut found, ptr::null_mut(), 0), PcStatus::Ok);
        assert!(!found);
        pc_graph_free(g);
    }
}

#[test]
fn criticality_and_classification() {
    let g = family("H7");
    let (mut chi, mut vc, mut sc) = (0, false, true);
    let mut ok = false;
    unsafe {
        assert_eq!(pc_analyze(g, &mut chi, &mut vc, &mut sc), PcStatus::Ok);
        assert_eq!((chi, vc, sc), (4, true, false));
        assert_eq!(pc_is_k_vertex_critical(g, 4, &mut ok), PcStatus::Ok);
        assert!(ok);
        let mut ids = ptr::null_mut();
        assert_eq!(pc_classify(g, PcUniverse::VertexCritical, &mut ids), PcStatus::Ok);
        assert_eq!(CStr::from_ptr(ids).to_str().unwrap(), "H7");
        pc_string_free(ids);
        assert_eq!(pc_classify(g, PcUniverse::Critical, &mut ids), PcStatus::Ok);
        assert_eq!(CStr::from_ptr(ids).to_str().unwrap(), "");
        pc_string_free(ids);
        pc_graph_free(g);
    }
}

#[test]
fn g3_parts() {
    let g = family("T");
    let mut accepted = false;
    let mut parts = [9u8; 6];
    unsafe {
        assert_eq!(pc_recognize_g3(g, &mut accepted, parts.as_mut_ptr(), parts.len()), PcStatus::Ok);
        assert!(accepted);
        assert!(parts.iter().all(|&p| p <= 7));
        pc_graph_free(g);
    }
    let c5 = family("C(5)");
    unsafe {
        assert_eq!(pc_recognize_g3(c5, &mut accepted, ptr::null_mut(), 0), PcStatus::Ok);
        assert!(!accepted);
        pc_graph_free(c5);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(pc_graph_from_graph6(ptr::null(), &mut g), PcStatus::NullPointer);
        let bad = CString::new("F2(l=1)").unwrap();
        assert_eq!(pc_graph_from_family(bad.as_ptr(), &mut g), PcStatus::Parse);
        assert!(last_error().contains("F2"));
        let edges = CString::new("0 1\n1 1\n").unwrap();
        assert_eq!(pc_graph_from_edge_list(edges.as_ptr(), &mut g), PcStatus::Parse);
        let big = CString::new("C(13)").unwrap();
        assert_eq!(pc_graph_from_family(big.as_ptr(), &mut g), PcStatus::Ok);
        let mut ok = false;
        assert_eq!(pc_is_k_vertex_critical(g, 4, &mut ok), PcStatus::OrderTooLarge);
        pc_graph_free(g);
        pc_graph_free(ptr::null_mut());
        let mut value = 0;
        assert_eq!(pc_chi_rho(ptr::null(), &mut value, ptr::null_mut(), 0), PcStatus::NullPointer);
        assert_eq!(pc_graph_order(ptr::null()), 0);
    }
    assert_eq!(pc_graph_from_edge_list_ok(), PcStatus::Ok);
    assert!(last_error().is_empty());
}

fn pc_graph_from_edge_list_ok() -> PcStatus {
    let edges = CString::new("n 3\n0 1\n").unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { pc_graph_from_edge_list(edges.as_ptr(), &mut g) };
    unsafe { pc_graph_free(g) };
    status
}

/// Compiles and runs a C program against the generated header and the
/// static library. Skipped when no C compiler is installed.
#[test]
fn c_program_links_against_staticlib() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libpcolor_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: cc or {} missing", lib.display());
        return;
    }
    let out_exe = profile_dir.join("pcolor_ffi_smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out_exe)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out_exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert_eq!(stdout, "chi=4 vc=1 sc=1 ids=H9\nerror=set\n");
}
