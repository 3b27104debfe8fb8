//! Generates the C header into OUT_DIR; a unit test compares it against
//! the committed copy in include/ so the two cannot drift.

use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR is set");
    let out = PathBuf::from(env::var("OUT_DIR").expect("OUT_DIR is set"))
        .join("intersect_lab.h");
    cbindgen::generate(&crate_dir)
        .expect("header generation")
        .write_to_file(&out);
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
