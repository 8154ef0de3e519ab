//! Compiles and runs a small C program against the generated header and the
//! static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "polarize.h"

int main(void) {
    const char *coords[] = {"t^2"};
    PolarizeNet *net = NULL;
    if (polarize_curve_net(coords, 1, NULL, -1, "0,1", false, &net) != POLARIZE_STATUS_OK) {
        fprintf(stderr, "%s\n", polarize_last_error());
        return 1;
    }
    char *listing = NULL;
    if (polarize_net_to_paper(net, NULL, &listing) != POLARIZE_STATUS_OK) return 2;
    fputs(listing, stdout);
    polarize_string_free(listing);

    char *s = NULL;
    PolarizeStatus st = polarize_net_coord(net, 7, 0, &s);
    printf("status %d\n", (int)st);
    polarize_net_free(net);

    const char *bad[] = {"t +"};
    st = polarize_curve_net(bad, 1, NULL, -1, NULL, false, &net);
    printf("status %d: %s\n", (int)st, polarize_last_error());
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().map(|o| o.status.success()).unwrap_or(false)
}

#[test]
fn header_is_generated() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/polarize.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "polarize_curve_net",
        "polarize_rect_net",
        "polarize_tri_net",
        "polarize_net_free",
        "POLARIZE_STATUS_ZERO_WEIGHT",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    assert!(text.contains("typedef struct PolarizeNet PolarizeNet;"));
}

#[test]
fn c_program_links_and_runs() {
    if !have_cc() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let lib = target_dir().join("libpolarize_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let work = std::env::temp_dir().join(format!("polarize-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    let exe = work.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        stdout,
        "{{0, 1}, {0, 1}, {1, 1}}\nstatus 7\nstatus 2: --coord 1: at column 4: unexpected end of input\n"
    );
    std::fs::remove_dir_all(&work).ok();
}
