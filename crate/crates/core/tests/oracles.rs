mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tbls::certify::{certify, lbfs_pattern_table, ldfs_pattern_table, PatternEntry};
use tbls::corpus::corpus;
use tbls::engine::{check_fixpoint, check_pairwise};
use tbls::graph::{Graph, VertexOrdering};
use tbls::label::{LabelCmp, LabelOrder, LabelSet, Search};

const PATTERN_SEARCHES: [Search; 5] = [
    Search::Gen,
    Search::Bfs,
    Search::Dfs,
    Search::Lbfs,
    Search::Ldfs,
];

fn accepts(g: &Graph, s: Search, sigma: &VertexOrdering) -> bool {
    certify(g, s, sigma).unwrap().unwrap().is_accepted()
}

#[test]
fn comparators_match_definitions() {
    let u = 5;
    let sets: Vec<LabelSet> = (0..1u64 << u).map(|m| LabelSet::from_mask(m, u)).collect();
    for s in Search::ALL {
        for a in &sets {
            for b in &sets {
                let (da, db): (Dates, Dates) = (
                    a.dates().iter().copied().collect(),
                    b.dates().iter().copied().collect(),
                );
                let expected = match (brute_less(s, &da, &db), brute_less(s, &db, &da)) {
                    (true, false) => LabelCmp::Less,
                    (false, true) => LabelCmp::Greater,
                    (false, false) => LabelCmp::Incomparable,
                    (true, true) => panic!("{s} is not asymmetric on {a} {b}"),
                };
                assert_eq!(s.compare(a, b), expected, "{s} on {a} vs {b}");
            }
        }
    }
}

#[test]
fn pattern_conditions_characterize_orderings() {
    // the oracles themselves: pattern conditions agree with the label definition
    for g in corpus(5, false) {
        for p in permutations(g.n()) {
            for s in PATTERN_SEARCHES {
                assert_eq!(
                    pattern_holds(&g, s, &p),
                    brute_is_ordering(&g, s, &p),
                    "{s} on {g} with {p:?}"
                );
            }
        }
    }
}

#[test]
fn certifiers_match_brute_force_and_replay() {
    for g in corpus(5, false) {
        for p in permutations(g.n()) {
            let sigma = ord(&p);
            for s in Search::ALL {
                let truth = brute_is_ordering(&g, s, &p);
                let fix = check_fixpoint(&g, &s.into(), &sigma);
                let pair = check_pairwise(&g, &s.into(), &sigma);
                assert_eq!(fix.is_accepted(), truth, "fixpoint {s} on {g} with {p:?}");
                assert_eq!(pair.is_accepted(), truth, "pairwise {s} on {g} with {p:?}");
                let mut certs = vec![fix, pair];
                if let Some(c) = certify(&g, s, &sigma) {
                    let c = c.unwrap();
                    assert_eq!(c.is_accepted(), truth, "certifier {s} on {g} with {p:?}");
                    certs.push(c);
                }
                for c in certs.iter().filter(|c| !c.is_accepted()) {
                    if let Some(err) = replay_witness(&g, s, &p, c) {
                        panic!("{err} ({s} on {g} with {p:?})");
                    }
                }
            }
        }
    }
}

#[test]
fn certifiers_agree_with_fixpoint_on_six_vertices() {
    for g in corpus(6, false).into_iter().filter(|g| g.n() == 6) {
        for p in permutations(6) {
            let sigma = ord(&p);
            for s in PATTERN_SEARCHES {
                assert_eq!(
                    accepts(&g, s, &sigma),
                    check_fixpoint(&g, &s.into(), &sigma).is_accepted(),
                    "{s} on {g} with {p:?}"
                );
            }
        }
    }
}

#[test]
fn certifiers_respect_the_hierarchy() {
    for g in corpus(6, false) {
        for p in permutations(g.n()) {
            let sigma = ord(&p);
            if accepts(&g, Search::Lbfs, &sigma) {
                assert!(accepts(&g, Search::Bfs, &sigma) && accepts(&g, Search::Gen, &sigma));
            }
            if accepts(&g, Search::Ldfs, &sigma) {
                assert!(accepts(&g, Search::Dfs, &sigma) && accepts(&g, Search::Gen, &sigma));
            }
        }
    }
}

fn brute_cell(g: &Graph, s: Search, p: &[usize], pb: usize, pc: usize) -> PatternEntry {
    let (b, c) = (p[pb - 1], p[pc - 1]);
    let sym: Vec<usize> = (1..pb)
        .filter(|&d| g.has_edge(p[d - 1], b) != g.has_edge(p[d - 1], c))
        .collect();
    let decisive = if s == Search::Lbfs {
        sym.first()
    } else {
        sym.last()
    };
    match decisive {
        None => PatternEntry::Vacuous,
        Some(&d) if g.has_edge(p[d - 1], b) => PatternEntry::Satisfied(p[d - 1]),
        Some(&d) => PatternEntry::Violated(p[d - 1]),
    }
}

#[test]
fn pattern_tables_match_brute_cells() {
    for g in corpus(5, false) {
        for p in permutations(g.n()) {
            let sigma = ord(&p);
            for (s, table) in [
                (Search::Lbfs, lbfs_pattern_table(&g, &sigma).unwrap()),
                (Search::Ldfs, ldfs_pattern_table(&g, &sigma).unwrap()),
            ] {
                for pc in 2..=g.n() {
                    for pb in 1..pc {
                        assert_eq!(table.get(pb, pc), brute_cell(&g, s, &p, pb, pc));
                    }
                }
                assert_eq!(
                    table.certificate(&sigma),
                    certify(&g, s, &sigma).unwrap().unwrap()
                );
            }
        }
    }
}

#[test]
fn meet_orders_match_conjunction() {
    let m: LabelOrder = "meet:bfs+dfs".parse().unwrap();
    for g in corpus(5, false) {
        for p in permutations(g.n()) {
            let truth = (1..=p.len()).all(|i| {
                let lx = label_at(&g, &p, p[i - 1], i);
                (i + 1..=p.len()).all(|j| {
                    let ly = label_at(&g, &p, p[j - 1], i);
                    !(brute_less(Search::Bfs, &lx, &ly) && brute_less(Search::Dfs, &lx, &ly))
                })
            });
            assert_eq!(check_fixpoint(&g, &m, &ord(&p)).is_accepted(), truth);
        }
    }
}

#[test]
fn null_order_accepts_every_ordering() {
    let null = LabelOrder::null();
    for g in corpus(5, false) {
        for p in permutations(g.n()) {
            assert!(check_fixpoint(&g, &null, &ord(&p)).is_accepted());
        }
    }
}

fn graph_and_ordering() -> impl Strategy<Value = (Graph, VertexOrdering)> {
    (1usize..=9, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        let sigma = random_ordering(n, &mut rng);
        (g, sigma)
    })
}

proptest! {
    #[test]
    fn certifiers_match_pattern_oracle((g, sigma) in graph_and_ordering()) {
        for s in PATTERN_SEARCHES {
            let c = certify(&g, s, &sigma).unwrap().unwrap();
            prop_assert_eq!(c.is_accepted(), pattern_holds(&g, s, sigma.as_slice()));
            if !c.is_accepted() {
                prop_assert_eq!(replay_witness(&g, s, sigma.as_slice(), &c), None);
            }
        }
    }

    #[test]
    fn fixpoint_and_pairwise_agree_on_digraphs(n in 1usize..=7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_graph(n, 0.4, &mut rng);
        let arcs: Vec<(usize, usize)> = u.edges().map(|(a, b)| if rand::Rng::random_bool(&mut rng, 0.5) { (a, b) } else { (b, a) }).collect();
        let g = Graph::directed(n, arcs).unwrap();
        let sigma = random_ordering(n, &mut rng);
        for s in Search::ALL {
            prop_assert_eq!(
                check_fixpoint(&g, &s.into(), &sigma).is_accepted(),
                check_pairwise(&g, &s.into(), &sigma).is_accepted()
            );
        }
    }
}
