//! Covering radius: the largest distance from any ambient word to the code.
//!
//! Three computation routes, each with an explicit applicability window:
//!
//! * exact ambient breadth-first search, any code with q^n <= 2^24;
//! * coset-leader breadth-first search over syndrome space, linear codes
//!   with q^(n-k) <= 2^24 (the BFS level of a syndrome equals its coset
//!   leader weight, since a minimal expression of a syndrome as a sum of
//!   single-coordinate errors never repeats a coordinate);
//! * closed forms from structure: a perfect code has radius t, a
//!   quasi-perfect code t + 1, and a first-order Reed-Muller code of
//!   parameter m has radius 2^(m-1) - 2^(ceil(m/2)-1) for m <= 4.
//!
//! The dual-distance upper bound n - sum_{i=0}^{d'-2} ceil((n-i)/q) is also
//! provided. It can be non-positive, in which case it certifies nothing;
//! such results carry `vacuous = true` and must not be read as a radius.

use std::collections::VecDeque;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::{index_to_symbols, symbols_to_index, Word};

/// Largest ambient space (q^n) the exact search will sweep.
pub const MAX_AMBIENT: usize = 1 << 24;
/// Largest syndrome space (q^(n-k)) the coset-leader search will sweep.
pub const MAX_SYNDROMES: usize = 1 << 24;

/// How a covering-radius figure was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoveringMethod {
    /// Breadth-first search over the whole ambient space.
    ExactAmbient,
    /// Breadth-first search over syndrome space of a linear code.
    CosetLeader,
    /// Radius t of a perfect code.
    PerfectCode,
    /// Radius t + 1 of a quasi-perfect code.
    QuasiPerfectCode,
    /// Closed form for first-order Reed-Muller codes.
    ReedMuller1Formula,
    /// Dual-distance upper bound; not an exact radius.
    UpperBoundOnly,
}

impl CoveringMethod {
    pub fn label(&self) -> &'static str {
        match self {
            CoveringMethod::ExactAmbient => "exact-ambient",
            CoveringMethod::CosetLeader => "coset-leader",
            CoveringMethod::PerfectCode => "perfect",
            CoveringMethod::QuasiPerfectCode => "quasi-perfect",
            CoveringMethod::ReedMuller1Formula => "rm1-formula",
            CoveringMethod::UpperBoundOnly => "upper-bound-only",
        }
    }

    /// Whether the value is the exact radius (as opposed to a bound).
    pub fn is_exact(&self) -> bool {
        !matches!(self, CoveringMethod::UpperBoundOnly)
    }
}

/// A covering-radius value (or bound) with its provenance.
///
/// `certifier`, when present, is an ambient word whose distance to the code
/// equals the reported value — a deepest point of the space.
#[derive(Clone, Debug)]
pub struct CoveringResult {
    pub value: i64,
    pub method: CoveringMethod,
    pub certifier: Option<Word>,
    /// True when the value is a bound that certifies nothing (<= 0).
    pub vacuous: bool,
}

fn power_within(q: u32, exp: usize, cap: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(q as usize)?;
        if acc > cap {
            return None;
        }
    }
    Some(acc)
}

/// Exact covering radius by multi-source BFS from all codewords across the
/// full ambient space. Requires q^n <= 2^24.
pub fn covering_radius_exact(code: &Code) -> Result<CoveringResult> {
    let q = code.field().order();
    let n = code.length();
    let total = power_within(q, n, MAX_AMBIENT).ok_or_else(|| {
        Error::SizeLimit(format!(
            "exact covering radius needs q^n <= {MAX_AMBIENT}, got {q}^{n}"
        ))
    })?;

    // place[i] = q^(n-1-i), the index weight of coordinate i.
    let mut place = vec![0usize; n];
    let mut acc = 1usize;
    for i in (0..n).rev() {
        place[i] = acc;
        acc *= q as usize;
    }

    let mut level = vec![u8::MAX; total];
    let mut queue = VecDeque::with_capacity(code.size());
    for w in code.words() {
        let idx = symbols_to_index(q, w.symbols());
        if level[idx] == u8::MAX {
            level[idx] = 0;
            queue.push_back(idx as u32);
        }
    }
    while let Some(idx) = queue.pop_front() {
        let idx = idx as usize;
        let next = level[idx] + 1;
        for &pl in place.iter().take(n) {
            let digit = idx / pl % q as usize;
            let base = idx - digit * pl;
            for v in 0..q as usize {
                if v == digit {
                    continue;
                }
                let nb = base + v * pl;
                if level[nb] == u8::MAX {
                    level[nb] = next;
                    queue.push_back(nb as u32);
                }
            }
        }
    }

    let radius = level.iter().copied().max().expect("ambient space is nonempty");
    let deepest = level.iter().position(|&l| l == radius).expect("max is attained");
    let certifier = Word::new(code.field().clone(), index_to_symbols(q, n, deepest))?;
    Ok(CoveringResult {
        value: radius as i64,
        method: CoveringMethod::ExactAmbient,
        certifier: Some(certifier),
        vacuous: false,
    })
}

/// Exact covering radius of a linear code as the largest coset-leader
/// weight, by BFS over syndrome space. Requires q^(n-k) <= 2^24.
pub fn covering_radius_coset_leader(code: &Code) -> Result<CoveringResult> {
    let gen = code.generator().ok_or(Error::NotLinear)?;
    let q = code.field().order();
    let n = code.length();
    let k = code.dimension().expect("linear code has a dimension");
    let r = n - k;
    if r == 0 {
        // The code is the whole space; the zero word is as deep as it gets.
        return Ok(CoveringResult {
            value: 0,
            method: CoveringMethod::CosetLeader,
            certifier: Some(Word::zero(code.field().clone(), n)),
            vacuous: false,
        });
    }
    let total = power_within(q, r, MAX_SYNDROMES).ok_or_else(|| {
        Error::SizeLimit(format!(
            "coset-leader search needs q^(n-k) <= {MAX_SYNDROMES}, got {q}^{r}"
        ))
    })?;

    // Parity-check matrix: rows form a basis of the dual. Column j is the
    // syndrome contribution of a unit error at coordinate j.
    let h = gen.null_space();
    debug_assert_eq!(h.rows(), r);
    let field = code.field().clone();
    let cols: Vec<Vec<u8>> =
        (0..n).map(|j| (0..r).map(|t| h.get(t, j)).collect()).collect();

    // BFS from the zero syndrome; back-pointers reconstruct a coset leader.
    const UNSEEN: u32 = u32::MAX;
    let mut level = vec![u8::MAX; total];
    let mut parent = vec![(UNSEEN, 0u8, 0u8); total];
    let mut queue = VecDeque::new();
    level[0] = 0;
    queue.push_back(0u32);
    while let Some(idx) = queue.pop_front() {
        let s = index_to_symbols(q, r, idx as usize);
        let next = level[idx as usize] + 1;
        for (j, col) in cols.iter().enumerate() {
            for v in 1..q as u8 {
                let mut ns = 0usize;
                for t in 0..r {
                    ns = ns * q as usize + field.add(s[t], field.mul(v, col[t])) as usize;
                }
                if level[ns] == u8::MAX {
                    level[ns] = next;
                    parent[ns] = (idx, j as u8, v);
                    queue.push_back(ns as u32);
                }
            }
        }
    }

    let radius = level.iter().copied().max().expect("syndrome space is nonempty");
    debug_assert!(radius < u8::MAX, "H has full rank, so every syndrome is reachable");
    let deepest = level.iter().position(|&l| l == radius).expect("max is attained");

    // Walk the BFS tree back to the zero syndrome, collecting one
    // single-coordinate error per hop; their sum is a deepest coset leader.
    let mut leader = vec![0u8; n];
    let mut cur = deepest;
    while cur != 0 {
        let (prev, j, v) = parent[cur];
        leader[j as usize] = field.add(leader[j as usize], v);
        cur = prev as usize;
    }
    let certifier = Word::new(field, leader)?;
    debug_assert_eq!(certifier.weight(), radius as usize);
    Ok(CoveringResult {
        value: radius as i64,
        method: CoveringMethod::CosetLeader,
        certifier: Some(certifier),
        vacuous: false,
    })
}

/// Covering radius of the first-order Reed-Muller code of parameter m,
/// by the closed form 2^(m-1) - 2^(ceil(m/2)-1), exact for m <= 4.
pub fn rm1_covering_radius(m: u32) -> Result<CoveringResult> {
    if !(1..=4).contains(&m) {
        return Err(Error::BadParameter(format!(
            "Reed-Muller radius formula supported for m in 1..=4, got {m}"
        )));
    }
    let value = (1i64 << (m - 1)) - (1i64 << (m.div_ceil(2) - 1));
    Ok(CoveringResult {
        value,
        method: CoveringMethod::ReedMuller1Formula,
        certifier: None,
        vacuous: false,
    })
}

/// Upper bound on the covering radius of a linear code from its dual
/// distance d': n - sum_{i=0}^{d'-2} ceil((n-i)/q).
///
/// The bound can be <= 0, in which case it is vacuous: it says nothing
/// about the radius and must not be used as one.
pub fn janwa_mattson_bound(code: &Code) -> Result<CoveringResult> {
    if !code.is_linear() {
        return Err(Error::NotLinear);
    }
    let dperp = code.dual_distance()?;
    let n = code.length() as i64;
    let q = code.field().order() as i64;
    let mut sum = 0i64;
    for i in 0..=(dperp as i64 - 2) {
        sum += (n - i + q - 1) / q;
    }
    let value = n - sum;
    Ok(CoveringResult {
        value,
        method: CoveringMethod::UpperBoundOnly,
        certifier: None,
        vacuous: value <= 0,
    })
}

/// Covering radius implied by the code's structural tag, when one applies:
/// perfect (radius t), quasi-perfect (t + 1), or first-order Reed-Muller.
pub fn known_covering_radius(code: &Code) -> Option<CoveringResult> {
    use crate::code::FamilyTag::*;
    match code.family() {
        Perfect(t) => Some(CoveringResult {
            value: t as i64,
            method: CoveringMethod::PerfectCode,
            certifier: None,
            vacuous: false,
        }),
        QuasiPerfect(t) => Some(CoveringResult {
            value: (t + 1) as i64,
            method: CoveringMethod::QuasiPerfectCode,
            certifier: None,
            vacuous: false,
        }),
        ReedMuller1(m) => rm1_covering_radius(m).ok(),
        Mds | Generic => None,
    }
}

/// Best available exact radius: structural tag first, then exact ambient
/// search, then coset-leader search for linear codes.
pub fn covering_radius_auto(code: &Code) -> Result<CoveringResult> {
    if let Some(known) = known_covering_radius(code) {
        return Ok(known);
    }
    match covering_radius_exact(code) {
        Err(Error::SizeLimit(_)) if code.is_linear() => covering_radius_coset_leader(code),
        other => other,
    }
}
