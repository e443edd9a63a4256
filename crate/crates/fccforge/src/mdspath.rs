//! Short paths between codewords of a maximum-distance-separable code.
//!
//! In an MDS code with M = q^(n-d+1), any k = n-d+1 coordinates determine
//! the codeword: two codewords agreeing on k positions differ in at most
//! d-1 places, so they coincide. That yields a decoder from any k-subset
//! of coordinates, and from it a walk between two codewords u, v whose
//! hops all have length exactly dMin except possibly the last: pivoting
//! one disagreeing coordinate at a time gives a path of at most
//! d(u,v) - dMin + 1 hops in the dMin-distance graph, which is why such
//! graphs are always connected.

use std::collections::HashMap;

use serde::Serialize;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;

/// Combinatorial dimension k = n - dMin + 1 of an MDS code.
fn mds_dimension(code: &Code) -> Result<usize> {
    if !code.is_mds() {
        return Err(Error::NotMds);
    }
    let d = code.dmin().ok_or(Error::NotMds)?;
    Ok(code.length() - d + 1)
}

/// Recover the unique codeword matching `t` on the coordinate set `j`
/// (0-based, distinct, exactly k of them).
///
/// Reed-Solomon codes decode by Lagrange interpolation through the chosen
/// evaluation points; other MDS codes fall back to an index of all
/// codewords keyed by their projection onto `j`.
pub fn projection_decode(code: &Code, j: &[usize], t: &[u8]) -> Result<Word> {
    let k = mds_dimension(code)?;
    if j.len() != k {
        return Err(Error::BadParameter(format!(
            "coordinate set has {} positions, the code determines words from {k}",
            j.len()
        )));
    }
    if t.len() != k {
        return Err(Error::LengthMismatch { left: k, right: t.len() });
    }
    let n = code.length();
    let field = code.field();
    for &pos in j {
        if pos >= n {
            return Err(Error::BadParameter(format!(
                "coordinate {pos} out of range for length {n}"
            )));
        }
    }
    if (1..j.len()).any(|i| j[..i].contains(&j[i])) {
        return Err(Error::BadParameter("coordinate set has repeats".into()));
    }
    for &s in t {
        field.check_symbol(s)?;
    }

    if let Some(rs) = code.rs_info() {
        // Lagrange: p(x) = sum_i t_i * prod_{l != i} (x - x_l) / (x_i - x_l),
        // evaluated directly at every evaluation point of the code.
        let xs: Vec<u8> = j.iter().map(|&pos| rs.eval_points[pos]).collect();
        let mut symbols = Vec::with_capacity(n);
        for &e in &rs.eval_points {
            let mut acc = 0u8;
            for i in 0..k {
                let mut term = t[i];
                for l in 0..k {
                    if l != i {
                        let num = field.sub(e, xs[l]);
                        let den = field.sub(xs[i], xs[l]);
                        term = field.mul(term, field.div(num, den)?);
                    }
                }
                acc = field.add(acc, term);
            }
            symbols.push(acc);
        }
        return Word::new(field.clone(), symbols);
    }

    let mut index: HashMap<Vec<u8>, usize> = HashMap::with_capacity(code.size());
    for (i, w) in code.words().iter().enumerate() {
        let key: Vec<u8> = j.iter().map(|&pos| w.symbols()[pos]).collect();
        index.insert(key, i);
    }
    let &i = index.get(t).ok_or(Error::NotInCode)?;
    Ok(code.word(i).clone())
}

/// Provenance of one hop: which coordinates were kept, which were pivoted.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct PathStep {
    pub from: Vec<u8>,
    pub to: Vec<u8>,
    pub hop_distance: usize,
    /// Coordinates where the endpoints already agreed.
    pub agreement: Vec<usize>,
    /// Coordinates where they disagreed.
    pub difference: Vec<usize>,
    /// The k coordinates handed to the projection decoder.
    pub chosen: Vec<usize>,
    /// The one disagreeing coordinate moved onto the target.
    pub pivot: usize,
}

/// One hop from `u` toward `v`: keep all coordinates where they agree,
/// pad with the smallest disagreeing coordinates up to k, and move the
/// smallest chosen disagreement onto v's value.
///
/// The result w satisfies d(u, w) = dMin and d(w, v) <= d(u, v) - 1
/// (with w = v exactly when d(u, v) = dMin).
pub fn neighbor_step(code: &Code, u: &Word, v: &Word) -> Result<(Word, PathStep)> {
    let k = mds_dimension(code)?;
    if code.index_of(u).is_none() || code.index_of(v).is_none() {
        return Err(Error::NotInCode);
    }
    if u == v {
        return Err(Error::BadParameter("endpoints coincide".into()));
    }
    let (agreement, difference): (Vec<usize>, Vec<usize>) =
        (0..code.length()).partition(|&i| u.symbols()[i] == v.symbols()[i]);
    let mut chosen = agreement.clone();
    chosen.extend_from_slice(&difference[..k - agreement.len()]);
    chosen.sort_unstable();
    let pivot = difference[0];
    let t: Vec<u8> = chosen
        .iter()
        .map(|&i| if i == pivot { v.symbols()[i] } else { u.symbols()[i] })
        .collect();
    let w = projection_decode(code, &chosen, &t)?;
    let step = PathStep {
        from: u.symbols().to_vec(),
        to: w.symbols().to_vec(),
        hop_distance: u.dist(&w),
        agreement,
        difference,
        chosen,
        pivot,
    };
    Ok((w, step))
}

/// A walk u -> ... -> v with every hop of length at most the code's dMin.
#[derive(Clone, Debug)]
pub struct MdsPath {
    pub words: Vec<Word>,
    pub steps: Vec<PathStep>,
}

impl MdsPath {
    /// Hop lengths, one per edge.
    pub fn hops(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.hop_distance).collect()
    }
}

/// Walk from `u` to `v` by repeated neighbor steps. The path has at most
/// d(u, v) - dMin + 1 hops, each of length exactly dMin (u = v gives the
/// single-vertex path with no hops).
pub fn mds_path(code: &Code, u: &Word, v: &Word) -> Result<MdsPath> {
    mds_dimension(code)?;
    if code.index_of(u).is_none() || code.index_of(v).is_none() {
        return Err(Error::NotInCode);
    }
    let dmin = code.dmin().expect("MDS codes have at least two words");
    let mut words = vec![u.clone()];
    let mut steps = Vec::new();
    let bound = u.dist(v).saturating_sub(dmin) + 1;
    let mut cur = u.clone();
    while cur != *v {
        if steps.len() >= bound {
            return Err(Error::BadParameter(
                "path exceeded its guaranteed hop bound".into(),
            ));
        }
        let (next, step) = neighbor_step(code, &cur, v)?;
        words.push(next.clone());
        steps.push(step);
        cur = next;
    }
    Ok(MdsPath { words, steps })
}
