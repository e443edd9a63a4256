//! Distance-threshold graphs on the codewords of a code.
//!
//! G_alpha(C) has the codewords as vertices and an edge between every pair
//! at Hamming distance <= alpha. The minimum-distance graph is G_dmin.
//! Components are computed with union-find without materializing edges.
//!
//! The per-alpha component profile is derived from a minimum spanning tree
//! of the complete distance graph (Prim, O(M^2) distance evaluations, O(M)
//! memory): the components of G_alpha equal the components of the MST
//! edges of weight <= alpha (single-linkage clustering), and the MST weight
//! multiset is unique, so replaying the sorted MST edges yields the exact
//! component count at every threshold.

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};

/// Cap on codewords for DOT export; keeps emitted files tractable.
pub const MAX_DOT_WORDS: usize = 4096;

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n], components: n }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.components -= 1;
    }
}

/// Connected components of G_alpha(C). Component ids are canonical:
/// numbered by first occurrence in codeword order.
pub struct DistanceGraph {
    alpha: usize,
    labels: Vec<usize>,
    component_count: usize,
}

impl DistanceGraph {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Number of connected components Q.
    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    /// Component id of codeword `i`.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Codeword indices grouped by component, in canonical order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (i, &c) in self.labels.iter().enumerate() {
            out[c].push(i);
        }
        out
    }
}

/// One row of a component profile: Q components at threshold alpha.
#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProfileEntry {
    pub alpha: usize,
    pub components: usize,
}

fn canonical_labels(uf: &mut UnionFind, m: usize) -> (Vec<usize>, usize) {
    let mut next = 0usize;
    let mut remap = vec![usize::MAX; m];
    let mut labels = vec![0usize; m];
    for (i, label) in labels.iter_mut().enumerate() {
        let root = uf.find(i as u32) as usize;
        if remap[root] == usize::MAX {
            remap[root] = next;
            next += 1;
        }
        *label = remap[root];
    }
    (labels, next)
}

/// Build G_alpha(C). Requires alpha >= dmin(C) whenever C has two or more
/// codewords (below dmin the graph is trivially edgeless).
pub fn build_alpha_graph(code: &Code, alpha: usize) -> Result<DistanceGraph> {
    if let Some(dmin) = code.dmin() {
        if alpha < dmin {
            return Err(Error::AlphaBelowMinimum { alpha, dmin });
        }
    }
    let m = code.size();
    let mut uf = UnionFind::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if code.pair_distance(i, j) <= alpha {
                uf.union(i as u32, j as u32);
            }
        }
    }
    let (labels, component_count) = canonical_labels(&mut uf, m);
    Ok(DistanceGraph { alpha, labels, component_count })
}

/// The minimum-distance graph G(C) = G_dmin(C).
pub fn minimum_distance_graph(code: &Code) -> Result<DistanceGraph> {
    let dmin = code.dmin().ok_or(Error::TooFewCodewords)?;
    build_alpha_graph(code, dmin)
}

/// Weights of a minimum spanning tree of the complete distance graph
/// (M - 1 entries, ascending).
fn mst_weights(code: &Code) -> Vec<usize> {
    let m = code.size();
    let mut in_tree = vec![false; m];
    let mut best = vec![usize::MAX; m];
    in_tree[0] = true;
    for (j, slot) in best.iter_mut().enumerate().skip(1) {
        *slot = code.pair_distance(0, j);
    }
    let mut weights = Vec::with_capacity(m - 1);
    for _ in 1..m {
        let mut pick = usize::MAX;
        let mut w = usize::MAX;
        for v in 1..m {
            if !in_tree[v] && best[v] < w {
                w = best[v];
                pick = v;
            }
        }
        weights.push(w);
        in_tree[pick] = true;
        for v in 1..m {
            if !in_tree[v] {
                best[v] = best[v].min(code.pair_distance(pick, v));
            }
        }
    }
    weights.sort_unstable();
    weights
}

/// Component counts of G_alpha for every alpha in [dmin, dmax].
pub fn component_profile(code: &Code) -> Result<Vec<ProfileEntry>> {
    let dmin = code.dmin().ok_or(Error::TooFewCodewords)?;
    let dmax = code.dmax().expect("dmax exists whenever dmin does");
    let m = code.size();
    let weights = mst_weights(code);
    let mut out = Vec::with_capacity(dmax - dmin + 1);
    let mut used = 0usize;
    for alpha in dmin..=dmax {
        while used < weights.len() && weights[used] <= alpha {
            used += 1;
        }
        out.push(ProfileEntry { alpha, components: m - used });
    }
    Ok(out)
}

/// Least alpha >= dmin at which G_alpha(C) is connected.
pub fn connectivity_threshold(code: &Code) -> Result<usize> {
    let dmin = code.dmin().ok_or(Error::TooFewCodewords)?;
    let weights = mst_weights(code);
    let max_hop = weights.last().copied().unwrap_or(0);
    Ok(max_hop.max(dmin))
}

/// Deterministic DOT rendering of G_alpha(C): one node per codeword
/// (labeled with its symbols), one cluster per component, one edge per
/// pair at distance <= alpha.
pub fn export_dot(code: &Code, graph: &DistanceGraph) -> Result<String> {
    use std::fmt::Write;

    let m = code.size();
    if m > MAX_DOT_WORDS {
        return Err(Error::SizeLimit(format!("DOT export capped at {MAX_DOT_WORDS} codewords")));
    }
    let mut out = String::new();
    let name = code.name().unwrap_or("code");
    writeln!(out, "graph \"{}_alpha{}\" {{", name, graph.alpha()).unwrap();
    for (cid, members) in graph.members().iter().enumerate() {
        writeln!(out, "  subgraph cluster_{cid} {{").unwrap();
        writeln!(out, "    label = \"component {cid}\";").unwrap();
        for &i in members {
            writeln!(out, "    v{i} [label=\"{}\"];", code.word(i)).unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for i in 0..m {
        for j in i + 1..m {
            if code.pair_distance(i, j) <= graph.alpha() {
                writeln!(out, "  v{i} -- v{j};").unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn code_from(strs: &[&str]) -> Code {
        let rows = strs.iter().map(|s| s.bytes().map(|b| b - b'0').collect()).collect();
        Code::from_list(gf2(), rows).unwrap()
    }

    fn six_word_code() -> Code {
        code_from(&["00000", "00001", "00010", "01111", "10111", "11111"])
    }

    #[test]
    fn alpha_graph_of_six_word_code() {
        let c = six_word_code();
        let g = build_alpha_graph(&c, 2).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.members(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(build_alpha_graph(&c, 3).unwrap().is_connected());
        assert!(matches!(
            build_alpha_graph(&c, 0),
            Err(Error::AlphaBelowMinimum { alpha: 0, dmin: 1 })
        ));
    }

    #[test]
    fn profile_matches_per_alpha_union_find() {
        let c = six_word_code();
        let profile = component_profile(&c).unwrap();
        assert_eq!(
            profile,
            [(1, 2), (2, 2), (3, 1), (4, 1), (5, 1)]
                .map(|(alpha, components)| ProfileEntry { alpha, components })
        );
        for entry in &profile {
            let direct = build_alpha_graph(&c, entry.alpha).unwrap();
            assert_eq!(direct.component_count(), entry.components);
        }
    }

    #[test]
    fn two_word_code_profile() {
        let c = code_from(&["00000", "11111"]);
        assert_eq!(
            component_profile(&c).unwrap(),
            vec![ProfileEntry { alpha: 5, components: 1 }]
        );
        assert_eq!(connectivity_threshold(&c).unwrap(), 5);
    }

    #[test]
    fn threshold_of_six_word_code() {
        assert_eq!(connectivity_threshold(&six_word_code()).unwrap(), 3);
    }

    #[test]
    fn single_word_code_is_one_isolated_vertex() {
        let c = code_from(&["01010"]);
        let g = build_alpha_graph(&c, 0).unwrap();
        assert_eq!(g.component_count(), 1);
        assert!(matches!(component_profile(&c), Err(Error::TooFewCodewords)));
    }

    #[test]
    fn monotone_refinement_on_random_codes() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(3..=9);
            let m = rng.gen_range(2..=20.min(1usize << n));
            let mut rows: Vec<Vec<u8>> = Vec::new();
            while rows.len() < m {
                let w: Vec<u8> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
                if !rows.contains(&w) {
                    rows.push(w);
                }
            }
            let c = Code::from_list(gf2(), rows).unwrap();
            let dmin = c.dmin().unwrap();
            let dmax = c.dmax().unwrap();
            let mut prev: Option<DistanceGraph> = None;
            for alpha in dmin..=dmax + 1 {
                let g = build_alpha_graph(&c, alpha).unwrap();
                if let Some(p) = &prev {
                    assert!(g.component_count() <= p.component_count());
                    // Components only merge: equal labels stay equal.
                    for i in 0..c.size() {
                        for j in i + 1..c.size() {
                            if p.label(i) == p.label(j) {
                                assert_eq!(g.label(i), g.label(j));
                            }
                        }
                    }
                }
                prev = Some(g);
            }
            assert!(prev.unwrap().is_connected(), "complete graph at dmax+1");
            // Profile agrees with direct recomputation everywhere.
            for e in component_profile(&c).unwrap() {
                assert_eq!(
                    build_alpha_graph(&c, e.alpha).unwrap().component_count(),
                    e.components
                );
            }
        }
    }

    #[test]
    fn dot_export_counts() {
        let c = six_word_code();
        let g = build_alpha_graph(&c, 2).unwrap();
        let dot = export_dot(&c, &g).unwrap();
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert_eq!(dot.matches("[label=\"").count(), 6);
        assert!(dot.contains("v0 [label=\"00000\"]"));
        // Deterministic output.
        assert_eq!(dot, export_dot(&c, &g).unwrap());
    }
}
