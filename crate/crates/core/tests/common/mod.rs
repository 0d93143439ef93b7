//! Independent oracles and helpers shared by the integration tests.
//!
//! Nothing here calls the library's checkers: the oracles re-read the raw
//! tables and decide everything by naive enumeration.
#![allow(dead_code)]

pub mod golden;
pub mod oracle;

use freemod::semiring::{Boolean, GfP, TableSemiring};

pub fn gf(p: u64) -> TableSemiring {
    TableSemiring::from_finite(&GfP::new(p).unwrap()).unwrap()
}

pub fn boolean() -> TableSemiring {
    TableSemiring::from_finite(&Boolean).unwrap()
}

pub fn fixture(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}
