use std::path::{Path, PathBuf};
use std::process::Command;

fn header() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/bchromatic.h");
    std::fs::read_to_string(path).expect("header generated by build.rs")
}

#[test]
fn header_declares_the_api() {
    let h = header();
    assert!(h.contains("#ifndef BCHROMATIC_H"));
    assert!(h.contains("typedef struct BcGraph BcGraph;"));
    assert!(h.contains("typedef struct BcColoring BcColoring;"));
    assert!(h.contains("BC_STATUS_OK = 0"));
    assert!(h.contains("BC_STATUS_ORACLE_REFUSED = 5"));
    assert!(h.contains("BC_STRATEGY_CONNECTIVITY = 3"));
    for f in [
        "bc_last_error_message",
        "bc_string_free",
        "bc_graph_from_edge_list",
        "bc_graph_from_dimacs",
        "bc_graph_from_edges",
        "bc_graph_generate",
        "bc_graph_free",
        "bc_analyze_json",
        "bc_exact_phi",
        "bc_color",
        "bc_coloring_free",
        "bc_coloring_colors",
        "bc_coloring_certificate_json",
        "bc_verify",
    ] {
        assert!(
            h.contains(&format!(" {f}(")) || h.contains(&format!("*{f}(")),
            "missing {f}"
        );
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    std::env::current_exe()
        .unwrap()
        .parent()
        .and_then(Path::parent)
        .unwrap()
        .to_path_buf()
}

const SMOKE: &str = r#"
#include <stdio.h>
#include "bchromatic.h"

int main(void) {
    BcGraph *g = NULL;
    BcColoring *c = NULL;
    size_t colors[10];
    bool ok = false;
    size_t count = 0;
    if (bc_graph_generate("petersen", 0, &g) != BC_STATUS_OK) return 10;
    if (bc_color(g, BC_STRATEGY_AUTO, &c) != BC_STATUS_OK) return 11;
    if (bc_coloring_colors(c, colors, 10) != BC_STATUS_OK) return 12;
    if (bc_verify(g, colors, 10, &ok, &count) != BC_STATUS_OK || !ok) return 13;
    if (bc_color(g, BC_STRATEGY_DIAMETER, &c) != BC_STATUS_HYPOTHESIS) return 14;
    printf("%zu %s\n", count, bc_last_error_message()[0] ? "err" : "none");
    bc_coloring_free(c);
    bc_graph_free(g);
    return 0;
}
"#;

#[test]
fn c_program_links_against_staticlib() {
    let lib = target_dir().join("libbchromatic_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!(
            "skipping: no C compiler or static library at {}",
            lib.display()
        );
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let exe = dir.path().join("smoke");
    std::fs::write(&src, SMOKE).unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "3 err\n");
}
