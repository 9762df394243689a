//! Compiles and runs a small C program against the generated header and
//! the static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "polysum.h"

int main(void) {
    const char *square = "{\"ambient_dim\": 2, \"vertices\": [[\"-1\",\"-1\"],[\"1\",\"-1\"],[\"1\",\"1\"],[\"-1\",\"1\"]]}";
    PolysumPolytope *p = NULL;
    if (polysum_polytope_from_json(square, &p) != POLYSUM_STATUS_OK) return 1;
    PolysumPolytope *dual = NULL;
    if (polysum_polytope_dual(p, &dual) != POLYSUM_STATUS_OK) return 2;
    const PolysumPolytope *parts[2] = {p, dual};
    PolysumSum *sum = NULL;
    if (polysum_sum_new(parts, 2, &sum) != POLYSUM_STATUS_OK) return 3;
    char *json = NULL;
    bool pass = false;
    if (polysum_sum_verify(sum, "mainthm", NULL, &json, &pass) != POLYSUM_STATUS_OK || !pass) return 4;
    polysum_string_free(json);
    PolysumPolytope *oct = NULL;
    polysum_sum_polytope(sum, &oct);
    uint64_t f[4];
    size_t len = 0;
    if (polysum_polytope_f_vector(oct, f, 4, &len) != POLYSUM_STATUS_OK) return 5;
    printf("f = (%llu, %llu)\n", (unsigned long long)f[0], (unsigned long long)f[1]);
    if (polysum_polytope_from_json("{", &p) != POLYSUM_STATUS_PARSE) return 6;
    char *msg = polysum_last_error();
    if (msg == NULL) return 7;
    polysum_string_free(msg);
    polysum_polytope_free(oct);
    polysum_sum_free(sum);
    polysum_polytope_free(dual);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok())
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/polysum.h")).unwrap();
    for name in [
        "polysum_last_error",
        "polysum_string_free",
        "polysum_polytope_from_json",
        "polysum_polytope_f_vector",
        "polysum_sum_new",
        "polysum_sum_perturbed",
        "polysum_sum_verify",
        "POLYSUM_STATUS_BUFFER_TOO_SMALL",
        "typedef struct PolysumSum PolysumSum",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn c_program_links_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let lib = target_dir().join("libpolysum_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let bin = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "C program exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "f = (8, 8)");
}
