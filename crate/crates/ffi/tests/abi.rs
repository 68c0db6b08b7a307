use std::ffi::{c_char, CStr, CString};
use std::ptr;

use bchromatic_ffi::*;

fn generate(spec: &str, seed: u64) -> *mut BcGraph {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { bc_graph_generate(spec.as_ptr(), seed, &mut g) },
        BcStatus::Ok
    );
    g
}

fn take_string(s: *mut c_char) -> String {
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { bc_string_free(s) };
    text
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bc_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn colors_of(c: *const BcColoring) -> Vec<usize> {
    let len = unsafe { bc_coloring_len(c) };
    let mut buf = vec![0usize; len];
    assert_eq!(
        unsafe { bc_coloring_colors(c, buf.as_mut_ptr(), len) },
        BcStatus::Ok
    );
    buf
}

#[test]
fn color_petersen_and_verify() {
    let g = generate("petersen", 0);
    assert_eq!(unsafe { bc_graph_vertex_count(g) }, 10);
    assert_eq!(unsafe { bc_graph_edge_count(g) }, 15);

    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { bc_color(g, BcStrategy::LowerBound, &mut c) },
        BcStatus::Ok
    );
    assert_eq!(unsafe { bc_coloring_palette(c) }, 3);
    let colors = colors_of(c);
    assert_eq!(colors.len(), 10);

    let (mut is_b, mut count) = (false, 0usize);
    let status = unsafe { bc_verify(g, colors.as_ptr(), colors.len(), &mut is_b, &mut count) };
    assert_eq!(status, BcStatus::Ok);
    assert!(is_b);
    assert_eq!(count, 3);

    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { bc_coloring_certificate_json(g, c, &mut json) },
        BcStatus::Ok
    );
    let cert: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(cert["palette"], 3);
    assert_eq!(cert["strategy"], "lower-bound");

    let mut bad = colors.clone();
    bad[0] = bad[1];
    let status = unsafe { bc_verify(g, bad.as_ptr(), bad.len(), &mut is_b, ptr::null_mut()) };
    assert_eq!(status, BcStatus::Ok);
    assert!(!is_b);

    unsafe {
        bc_coloring_free(c);
        bc_graph_free(g);
    }
}

#[test]
fn exact_matches_construction_on_small_cubic() {
    let g = generate("random:3,16", 4);
    let (mut phi, mut witness) = (0usize, ptr::null_mut());
    assert_eq!(
        unsafe { bc_exact_phi(g, 24, &mut phi, &mut witness) },
        BcStatus::Ok
    );
    assert_eq!(unsafe { bc_coloring_palette(witness) }, phi);
    let colors = colors_of(witness);
    let mut is_b = false;
    unsafe { bc_verify(g, colors.as_ptr(), colors.len(), &mut is_b, ptr::null_mut()) };
    assert!(is_b);

    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { bc_color(g, BcStrategy::Auto, &mut c) },
        BcStatus::Ok
    );
    assert!(unsafe { bc_coloring_palette(c) } <= phi);

    assert_eq!(
        unsafe { bc_exact_phi(g, 10, &mut phi, ptr::null_mut()) },
        BcStatus::OracleRefused
    );
    assert!(!last_error().is_empty());
    unsafe {
        bc_coloring_free(witness);
        bc_coloring_free(c);
        bc_graph_free(g);
    }
}

#[test]
fn parsers_and_raw_edges() {
    let text = CString::new("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { bc_graph_from_edge_list(text.as_ptr(), &mut g) },
        BcStatus::Ok
    );
    assert_eq!(unsafe { bc_graph_edge_count(g) }, 4);
    unsafe { bc_graph_free(g) };

    let text = CString::new("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
    assert_eq!(
        unsafe { bc_graph_from_dimacs(text.as_ptr(), &mut g) },
        BcStatus::Ok
    );
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { bc_analyze_json(g, &mut json) }, BcStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(report["has_triangle"], true);
    unsafe { bc_graph_free(g) };

    let edges = [0usize, 1, 1, 2];
    assert_eq!(
        unsafe { bc_graph_from_edges(3, edges.as_ptr(), 2, &mut g) },
        BcStatus::Ok
    );
    assert_eq!(unsafe { bc_graph_vertex_count(g) }, 3);
    unsafe { bc_graph_free(g) };

    let bad = [0usize, 7];
    assert_eq!(
        unsafe { bc_graph_from_edges(3, bad.as_ptr(), 1, &mut g) },
        BcStatus::InvalidArgument
    );
    let text = CString::new("3 1\n0 0\n").unwrap();
    assert_eq!(
        unsafe { bc_graph_from_edge_list(text.as_ptr(), &mut g) },
        BcStatus::Parse
    );
    assert!(last_error().contains("line 2"));
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { bc_graph_from_edge_list(ptr::null(), &mut g) },
        BcStatus::InvalidArgument
    );
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { bc_color(ptr::null(), BcStrategy::Auto, &mut c) },
        BcStatus::InvalidArgument
    );

    let petersen = generate("petersen", 0);
    assert_eq!(
        unsafe { bc_color(petersen, BcStrategy::Diameter, &mut c) },
        BcStatus::Hypothesis
    );
    let mut short = [0usize; 3];
    let mut w = ptr::null_mut();
    let mut phi = 0;
    unsafe { bc_exact_phi(petersen, 24, &mut phi, &mut w) };
    assert_eq!(
        unsafe { bc_coloring_colors(w, short.as_mut_ptr(), short.len()) },
        BcStatus::InvalidArgument
    );
    let colors = [1usize; 10];
    let mut is_b = true;
    assert_eq!(
        unsafe { bc_verify(petersen, colors.as_ptr(), 9, &mut is_b, ptr::null_mut()) },
        BcStatus::InvalidArgument
    );

    // Null handles are accepted by the free functions and counters.
    unsafe {
        bc_graph_free(ptr::null_mut());
        bc_coloring_free(ptr::null_mut());
        bc_string_free(ptr::null_mut());
        assert_eq!(bc_graph_vertex_count(ptr::null()), 0);
        assert_eq!(bc_coloring_len(ptr::null()), 0);
        bc_coloring_free(w);
        bc_graph_free(petersen);
    }
}
