#![allow(dead_code)]

use std::sync::Arc;

use semiring_cholesky::{parse_uri, AnySemiring, SemiringTable};

/// Built-in semirings exercised at n ≤ 2.
pub const SMALL: [&str; 8] = [
    "bool",
    "zn:2",
    "zn:3",
    "zn:4",
    "zn:6",
    "product:zn:2,bool",
    "chain:2",
    "z2x3",
];

/// Built-ins small enough for n = 3.
pub const CUBIC: [&str; 3] = ["bool", "zn:2", "zn:3"];

pub fn finite(uri: &str) -> Arc<SemiringTable> {
    match parse_uri(uri).unwrap() {
        AnySemiring::Finite(s) => Arc::new(s),
        AnySemiring::Naturals(_) => panic!("{uri} is not finite"),
    }
}

/// Every (semiring, n) pair of the theorem instance space.
pub fn instance_space() -> Vec<(Arc<SemiringTable>, usize)> {
    let mut out = Vec::new();
    for uri in SMALL {
        for n in 1..=2 {
            out.push((finite(uri), n));
        }
    }
    for uri in CUBIC {
        out.push((finite(uri), 3));
    }
    out
}
