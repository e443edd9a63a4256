//! Property-based invariants tying the modules together: metric axioms,
//! graph monotonicity, construction guarantees, and decoder round trips.

mod common;

use proptest::prelude::*;
use rand::seq::index::sample;
use rand::Rng;

use common::{gf2, random_binary_code, random_binary_linear, rng};
use fccforge::fcc::{self, FccEncoding, FunctionSpec};
use fccforge::{covering, families, graph, hamming_distance, mdspath, FieldSpec, Word};

fn random_word(rng: &mut impl Rng, q: u32, n: usize) -> Word {
    let field = FieldSpec::prime(q).unwrap();
    let symbols: Vec<u8> = (0..n).map(|_| rng.gen_range(0..q) as u8).collect();
    Word::new(field, symbols).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Hamming distance is a translation-invariant metric.
    #[test]
    fn distance_is_a_metric(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 5]), n in 1usize..=12) {
        let mut rng = rng(seed);
        let u = random_word(&mut rng, q, n);
        let v = random_word(&mut rng, q, n);
        let w = random_word(&mut rng, q, n);
        let duv = hamming_distance(&u, &v).unwrap();
        let dvw = hamming_distance(&v, &w).unwrap();
        let duw = hamming_distance(&u, &w).unwrap();
        prop_assert!(duw <= duv + dvw);
        prop_assert_eq!(duv, hamming_distance(&v, &u).unwrap());
        prop_assert_eq!(duv == 0, u == v);

        // Adding a common shift coordinate-wise preserves the distance.
        let field = FieldSpec::prime(q).unwrap();
        let t = random_word(&mut rng, q, n);
        let shift = |a: &Word| {
            let symbols = a
                .symbols()
                .iter()
                .zip(t.symbols())
                .map(|(&x, &y)| ((x as u32 + y as u32) % q) as u8)
                .collect();
            Word::new(field.clone(), symbols).unwrap()
        };
        prop_assert_eq!(duv, hamming_distance(&shift(&u), &shift(&v)).unwrap());
    }

    /// Raising alpha never splits components, and the connectivity
    /// threshold is the first alpha whose graph is connected.
    #[test]
    fn profile_is_monotone(seed in any::<u64>(), n in 2usize..=8, m in 2usize..=16) {
        let mut rng = rng(seed);
        let m = m.min(1 << n);
        let code = random_binary_code(&mut rng, n, m);
        let profile = graph::component_profile(&code).unwrap();
        prop_assert!(!profile.is_empty());
        for pair in profile.windows(2) {
            prop_assert_eq!(pair[1].alpha, pair[0].alpha + 1);
            prop_assert!(pair[1].components <= pair[0].components);
        }
        let threshold = graph::connectivity_threshold(&code).unwrap();
        for entry in &profile {
            prop_assert_eq!(entry.components == 1, entry.alpha >= threshold);
        }
        prop_assert_eq!(profile.last().unwrap().components, 1);
    }

    /// Every edge of the distance graph at the measured function distance
    /// minus one joins equal function values, so each component is
    /// value-pure and the component count dominates the value count.
    #[test]
    fn value_classes_split_components(seed in any::<u64>(), k in 1usize..=3, n in 3usize..=8) {
        let mut rng = rng(seed);
        let m = 1usize << k;
        let m = m.min(1 << n);
        let k = m.trailing_zeros() as usize;
        let table: Vec<u32> = (0..m).map(|_| rng.gen_range(0..3u32)).collect();
        prop_assume!(table.iter().collect::<std::collections::BTreeSet<_>>().len() >= 2);
        let f = FunctionSpec::table(gf2(), k, table).unwrap();
        let words = random_binary_code(&mut rng, n, m);
        let enc = FccEncoding::new(f, words.words().to_vec()).unwrap();
        let metrics = enc.measure();
        let df = metrics.function_distance.finite().expect("two values give a finite distance");
        // Below the code's own minimum distance the graph has no edges and
        // the claim is vacuous, so only the edged regime is interesting.
        prop_assume!(df > words.dmin().unwrap());

        let g = graph::build_alpha_graph(&words, df - 1).unwrap();
        for i in 0..enc.words().len() {
            for j in i + 1..enc.words().len() {
                if g.label(i) == g.label(j) {
                    prop_assert_eq!(enc.label(i), enc.label(j));
                }
            }
        }
        prop_assert!(g.component_count() >= enc.function().num_values());
    }

    /// The two-step construction meets its advertised distances.
    #[test]
    fn two_step_meets_its_guarantees(seed in any::<u64>(), n in 3usize..=9, k in 1usize..=4, r in 1usize..=3, weight_rule in any::<bool>()) {
        let mut rng = rng(seed);
        let k = k.min(n);
        let inner = random_binary_linear(&mut rng, n, k);
        let f = if weight_rule {
            FunctionSpec::weight_mod(gf2(), k, 2).unwrap()
        } else {
            FunctionSpec::parity(gf2(), k).unwrap()
        };
        let fc = families::repetition(r).unwrap();
        let index = fcc::default_label_index(&f, &fc).unwrap();
        let enc = fcc::two_step_construct(&f, &inner, &fc, &index).unwrap();
        let metrics = enc.measure();
        prop_assert!(metrics.data_distance >= inner.dmin().unwrap());
        prop_assert!(metrics
            .function_distance
            .satisfies(inner.dmin().unwrap() + fc.dmin().unwrap()));
        prop_assert_eq!(enc.length(), n + r);
    }

    /// The ambient sweep and the syndrome walk compute the same radius.
    #[test]
    fn exact_and_coset_radii_agree(seed in any::<u64>(), n in 2usize..=12, k in 1usize..=6) {
        let mut rng = rng(seed);
        let k = k.min(n);
        let code = random_binary_linear(&mut rng, n, k);
        let exact = covering::covering_radius_exact(&code).unwrap();
        let coset = covering::covering_radius_coset_leader(&code).unwrap();
        prop_assert_eq!(exact.value, coset.value);
    }

    /// A minimum-weight spanning chain of codewords exists exactly when
    /// the minimum-distance graph is connected.
    #[test]
    fn span_matches_connectivity(seed in any::<u64>(), n in 3usize..=10, k in 1usize..=5) {
        let mut rng = rng(seed);
        let k = k.min(n);
        let code = random_binary_linear(&mut rng, n, k);
        let spans = code.min_weight_span().unwrap();
        let connected = graph::minimum_distance_graph(&code).unwrap().is_connected();
        prop_assert_eq!(spans, connected);
    }

    /// Feasibility only gets easier with fewer values or a weaker
    /// distance demand.
    #[test]
    fn feasibility_is_monotone(seed in any::<u64>(), n in 4usize..=7, m in 3usize..=10) {
        let mut rng = rng(seed);
        let code = random_binary_code(&mut rng, n, m);
        let dmin = code.dmin().unwrap();
        let dmax = code.dmax().unwrap();
        for df in dmin + 1..=dmax {
            for v in 2u32..=4 {
                if !fcc::strict_feasible(&code, v, df).unwrap().feasible {
                    continue;
                }
                if v > 2 {
                    prop_assert!(fcc::strict_feasible(&code, v - 1, df).unwrap().feasible);
                }
                if df > dmin + 1 {
                    prop_assert!(fcc::strict_feasible(&code, v, df - 1).unwrap().feasible);
                }
            }
        }
    }

    /// Decoding a codeword from any k of its own coordinates returns it.
    #[test]
    fn projection_inverts_codewords(seed in any::<u64>(), q in prop::sample::select(vec![5u32, 7]), k in 1usize..=3) {
        let mut rng = rng(seed);
        let n = rng.gen_range(k..=q as usize);
        let field = FieldSpec::prime(q).unwrap();
        let code = families::reed_solomon(field, n, k, None).unwrap();
        let w = code.word(rng.gen_range(0..code.size())).clone();
        let mut j: Vec<usize> = sample(&mut rng, n, k).into_vec();
        j.sort_unstable();
        let t: Vec<u8> = j.iter().map(|&pos| w.symbols()[pos]).collect();
        let decoded = mdspath::projection_decode(&code, &j, &t).unwrap();
        prop_assert_eq!(decoded, w);
    }

    /// The length witnessing the distance-singleton trade-off is pinned.
    #[test]
    fn mds_bound_is_the_distance(k in 1usize..=8, d in 1usize..=8) {
        let b = fcc::mds_redundancy_bound(k, d).unwrap();
        prop_assert_eq!(b.value, Some(d));
        prop_assert_eq!(b.n, Some(k + d - 1));
    }
}
