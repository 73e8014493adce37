//! Property tests for the spec-level invariants: solver soundness and
//! oracle agreement, graph primitive laws, and classification monotonicity.

use proptest::prelude::*;

use starforest::classify::{classify_forest, Classification, ObstructionWitness};
use starforest::graph::Graph;
use starforest::io;
use starforest::naive;
use starforest::obstruct::in_t1_family;
use starforest::solver::{
    find_induced_minor, forest::find_induced_minor_forest, SearchBudget, SearchOutcome,
};
use starforest::{verify_model, Verdict};

/// Random graph on `n` vertices from a bitmask over the vertex pairs.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if mask >> (bit % 64) & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Random tree on `n` vertices from a Pruefer-style seed.
fn tree_from_seed(n: usize, seed: u64) -> Graph {
    if n == 1 {
        return Graph::new(1);
    }
    let mut g = Graph::new(n);
    let mut s = seed;
    for v in 1..n as u32 {
        // attach each vertex to a pseudo-random earlier one
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let parent = (s >> 33) as u32 % v;
        g.add_edge(parent, v).unwrap();
    }
    g
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// closed_neighborhood contains its argument and equals it exactly when
    /// no edge leaves the set
    #[test]
    fn closed_neighborhood_laws(n in 1usize..9, mask: u64, pick: u64) {
        let g = graph_from_mask(n, mask);
        let s: Vec<u32> = (0..n as u32).filter(|&v| pick >> v & 1 == 1).collect();
        let nh = g.closed_neighborhood(&s).unwrap();
        prop_assert!(s.iter().all(|v| nh.binary_search(v).is_ok()));
        let closed = s.iter().all(|&v| {
            g.neighbors(v).iter().all(|w| s.binary_search(w).is_ok())
        });
        prop_assert_eq!(nh == s, closed);
    }

    /// components partition the vertex set minus the removed part
    #[test]
    fn components_partition(n in 1usize..10, mask: u64, removed: u64) {
        let g = graph_from_mask(n, mask);
        let rem: Vec<u32> = (0..n as u32).filter(|&v| removed >> v & 1 == 1).collect();
        let comps = g.components(&rem);
        let mut all: Vec<u32> = comps.iter().flatten().copied().collect();
        all.extend(&rem);
        all.sort_unstable();
        prop_assert_eq!(all, (0..n as u32).collect::<Vec<_>>());
        // ascending order of minimum vertex
        let mins: Vec<u32> = comps.iter().map(|c| c[0]).collect();
        prop_assert!(mins.windows(2).all(|w| w[0] < w[1]));
    }

    /// girth is None exactly on forests
    #[test]
    fn girth_iff_forest(n in 1usize..10, mask: u64) {
        let g = graph_from_mask(n, mask);
        prop_assert_eq!(g.girth().is_none(), g.is_forest());
        prop_assert_eq!(g.girth(), naive::girth_by_edge_removal(&g));
    }

    /// contracting singletons of an induced subgraph reproduces it
    #[test]
    fn contract_singletons_is_induced(n in 2usize..9, mask: u64, pick: u64) {
        let g = graph_from_mask(n, mask);
        let s: Vec<u32> = (0..n as u32).filter(|&v| pick >> v & 1 == 1).collect();
        prop_assume!(!s.is_empty());
        let parts: Vec<Vec<u32>> = s.iter().map(|&v| vec![v]).collect();
        let q = g.contract_model(&parts).unwrap();
        let ind = g.induced(&s).unwrap();
        prop_assert_eq!(q.edges(), ind.edges());
    }

    /// biclique detection agrees with the brute-force oracle
    #[test]
    fn kst_agrees_with_oracle(n in 2usize..9, mask: u64, s in 1usize..4, t in 1usize..4) {
        let g = graph_from_mask(n, mask);
        prop_assert_eq!(
            g.has_kst(s, t).unwrap(),
            naive::brute_force_has_kst(&g, s, t).unwrap()
        );
    }

    /// solver soundness and oracle agreement on small random pairs
    #[test]
    fn solver_agrees_with_oracle(hn in 2usize..8, hmask: u64, pn in 1usize..5, pmask: u64) {
        let host = graph_from_mask(hn, hmask);
        let pattern = graph_from_mask(pn, pmask);
        let r = find_induced_minor(&host, &pattern, &budget()).unwrap();
        let oracle = naive::brute_force_induced_minor(&host, &pattern).unwrap();
        match &r.outcome {
            SearchOutcome::Found(m) => {
                prop_assert!(oracle.is_some());
                prop_assert_eq!(verify_model(m).unwrap(), Verdict::Valid);
            }
            SearchOutcome::NotContained => prop_assert!(oracle.is_none()),
            SearchOutcome::BudgetExhausted => prop_assert!(false, "budget exhausted on a toy instance"),
        }
    }

    /// forest fast path is semantically identical to the generic engine
    #[test]
    fn forest_path_matches_generic(hseed: u64, pseed: u64, hn in 2usize..14, pn in 1usize..9, hcut in 0u64..4, pcut in 0u64..4) {
        // random forests: random trees with a few vertices split off
        let host = {
            let t = tree_from_seed(hn, hseed);
            let keep: Vec<u32> = (0..hn as u32).filter(|&v| v == 0 || hcut >> (v % 4) & 1 == 0 || v as usize >= hn / 2).collect();
            t.induced(&keep).unwrap()
        };
        let pattern = {
            let t = tree_from_seed(pn, pseed);
            let keep: Vec<u32> = (0..pn as u32).filter(|&v| v == 0 || pcut >> (v % 4) & 1 == 0 || v as usize >= pn / 2).collect();
            t.induced(&keep).unwrap()
        };
        prop_assume!(host.n() > 0 && pattern.n() > 0);
        let fast = find_induced_minor_forest(&host, &pattern, &budget()).unwrap();
        let generic = find_induced_minor(&host, &pattern, &budget()).unwrap();
        prop_assert_eq!(fast.outcome.found(), generic.outcome.found());
        if let SearchOutcome::Found(m) = &fast.outcome {
            prop_assert_eq!(verify_model(m).unwrap(), Verdict::Valid);
        }
    }

    /// monotonicity: an induced subgraph of the host preserves containment
    #[test]
    fn containment_monotone_under_host_growth(hn in 3usize..8, hmask: u64, pn in 1usize..4, pmask: u64) {
        let host_big = graph_from_mask(hn, hmask);
        let sub: Vec<u32> = (0..(hn - 1) as u32).collect();
        let host_small = host_big.induced(&sub).unwrap();
        let pattern = graph_from_mask(pn, pmask);
        let small = find_induced_minor(&host_small, &pattern, &budget()).unwrap();
        if small.outcome.found() {
            let big = find_induced_minor(&host_big, &pattern, &budget()).unwrap();
            prop_assert!(big.outcome.found());
        }
    }

    /// graph document round trip is byte-identical
    #[test]
    fn graph_doc_roundtrip(n in 1usize..10, mask: u64) {
        let g = graph_from_mask(n, mask);
        let once = io::graph_to_json(&g);
        let back = io::graph_from_json(&once).unwrap();
        prop_assert_eq!(io::graph_to_json(&back), once);
    }

    /// two components outside the T1 family force a nega verdict with an
    /// nds witness (the spec's Lemma-4.2 instantiation)
    #[test]
    fn two_off_family_components_are_nega(seed in 0u64..500) {
        // claw with every edge subdivided is a small tree outside T1?
        // no: build a random tree and keep only seeds that fall outside
        let t = tree_from_seed(8, seed);
        prop_assume!(!in_t1_family(&t).unwrap());
        let double = t.disjoint_union(&t);
        match classify_forest(&double, &budget()).unwrap() {
            Classification::Nega { witness: ObstructionWitness::Nds(w) } => {
                prop_assert!(w.bridge.is_none());
            }
            other => prop_assert!(false, "expected nega/nds, got {:?}", other),
        }
    }

    /// posi-ness is monotone under induced minors: contracting one edge of a
    /// posi forest keeps it posi
    #[test]
    fn posi_closed_under_contraction(n in 2usize..9, seed: u64, pick in 0usize..8) {
        let t = tree_from_seed(n, seed);
        prop_assume!(classify_forest(&t, &budget()).unwrap().is_posi());
        let edges = t.edges();
        let (u, v) = edges[pick % edges.len()];
        // contract uv: one branch set for {u,v}, singletons elsewhere
        let mut parts = vec![vec![u, v]];
        for w in 0..n as u32 {
            if w != u && w != v {
                parts.push(vec![w]);
            }
        }
        let contracted = t.contract_model(&parts).unwrap();
        prop_assert!(classify_forest(&contracted, &budget()).unwrap().is_posi());
    }
}

/// trees on 8 vertices outside the T1 family exist and the sampled test
/// above is not vacuous
#[test]
fn off_family_seed_exists() {
    let found = (0u64..500).any(|seed| !in_t1_family(&tree_from_seed(8, seed)).unwrap());
    assert!(found);
}
