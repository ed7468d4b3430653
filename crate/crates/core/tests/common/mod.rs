#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use heart_core::algebra::parse_algebra;
use heart_core::matrix::Matrix;
use heart_core::module::{AlgebraRef, Module};
use heart_core::universe::{Caps, IndecUniverse};

pub fn algebra(name: &str) -> AlgebraRef {
    let path = format!("{}/fixtures/{name}.quiver", env!("CARGO_MANIFEST_DIR"));
    Arc::new(parse_algebra(&std::fs::read_to_string(path).unwrap()).unwrap())
}

pub fn universe(name: &str) -> IndecUniverse {
    let a = algebra(name);
    let bound = vec![2; a.vertex_count()];
    IndecUniverse::enumerate(&a, &bound, &Caps::default()).unwrap()
}

pub fn a2() -> &'static IndecUniverse {
    static U: OnceLock<IndecUniverse> = OnceLock::new();
    U.get_or_init(|| universe("a2"))
}

pub fn a3() -> &'static IndecUniverse {
    static U: OnceLock<IndecUniverse> = OnceLock::new();
    U.get_or_init(|| universe("a3"))
}

pub fn d4() -> &'static IndecUniverse {
    static U: OnceLock<IndecUniverse> = OnceLock::new();
    U.get_or_init(|| universe("d4"))
}

/// Representation of a quiver without relations with the given dimensions,
/// filling arrow matrices from `entries` (cycled).
pub fn module_from_entries(alg: &AlgebraRef, dims: &[usize], entries: &[u32]) -> Module {
    let f = alg.field();
    let mut k = 0;
    let maps = alg
        .quiver()
        .arrows
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.source], dims[a.target]);
            Matrix::from_fn(f, r, c, |_, _| {
                let x = entries[k % entries.len()];
                k += 1;
                x
            })
        })
        .collect();
    Module::new(alg, dims.to_vec(), maps).unwrap()
}

/// Euler form of a quiver without relations.
pub fn euler_form(alg: &AlgebraRef, x: &[usize], y: &[usize]) -> i64 {
    let diag: i64 = x.iter().zip(y).map(|(a, b)| (*a * *b) as i64).sum();
    let off: i64 = alg
        .quiver()
        .arrows
        .iter()
        .map(|a| (x[a.source] * y[a.target]) as i64)
        .sum();
    diag - off
}
