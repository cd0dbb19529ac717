//! Shared fixture loading for the benchmark targets.

use std::path::PathBuf;

use pommaret_core::{parse_ideal, IdealInput};

pub fn load_fixture(name: &str) -> IdealInput {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_ideal(&text).expect("fixture parses")
}
