//! Shared helpers for the integration suites: deterministic random code
//! generation and a brute-force partition oracle.
#![allow(dead_code)] // each test binary uses a different subset

use fccforge::matrix::Matrix;
use fccforge::{Code, FieldSpec};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn gf2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random binary code with exactly `m` distinct words of length `n`.
pub fn random_binary_code(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Code {
    assert!(m <= 1 << n, "cannot draw {m} distinct words of length {n}");
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(m);
    while rows.len() < m {
        let w: Vec<u8> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
        if !rows.contains(&w) {
            rows.push(w);
        }
    }
    Code::from_list(gf2(), rows).unwrap()
}

/// Random binary linear [n, k] code (resamples until the generator has
/// full rank).
pub fn random_binary_linear(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Code {
    loop {
        let rows: Vec<Vec<u8>> =
            (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..=1)).collect()).collect();
        let matrix = Matrix::new(gf2(), rows).unwrap();
        if let Ok(code) = Code::from_generator(gf2(), matrix) {
            return code;
        }
    }
}

/// Exhaustive search: can the codewords be split into exactly `v`
/// nonempty groups with every cross-group pair at distance >= `df`?
pub fn partition_oracle(code: &Code, v: usize, df: usize) -> bool {
    fn rec(
        code: &Code,
        v: usize,
        df: usize,
        next: usize,
        groups: &mut Vec<Vec<usize>>,
    ) -> bool {
        if next == code.size() {
            return groups.len() == v;
        }
        if groups.len() + (code.size() - next) < v {
            return false;
        }
        let dist = |a: usize, b: usize| {
            fccforge::hamming_distance(code.word(a), code.word(b)).unwrap()
        };
        for gi in 0..groups.len() {
            let clash = (0..groups.len()).any(|other| {
                other != gi && groups[other].iter().any(|&w| dist(w, next) < df)
            });
            if !clash {
                groups[gi].push(next);
                if rec(code, v, df, next + 1, groups) {
                    return true;
                }
                groups[gi].pop();
            }
        }
        if groups.len() < v {
            let clash = groups.iter().flatten().any(|&w| dist(w, next) < df);
            if !clash {
                groups.push(vec![next]);
                if rec(code, v, df, next + 1, groups) {
                    return true;
                }
                groups.pop();
            }
        }
        false
    }
    rec(code, v, df, 0, &mut Vec::new())
}

/// The six-codeword running example: two far-apart triangles.
pub fn two_triangle_code() -> Code {
    let rows = ["00000", "00001", "00010", "01111", "10111", "11111"]
        .iter()
        .map(|s| s.bytes().map(|b| b - b'0').collect())
        .collect();
    Code::from_list(gf2(), rows).unwrap()
}
