//! Automorphism orders of small posets and Hasse graphs, checked against a
//! plain backtracking search that shares no code with the library's
//! refinement search.

use abid::abelian::IdealCatalog;
use abid::dynkin::{aut_pi, aut_pihat, diagram_permutation};
use abid::poset::{build_hasse, graph_automorphisms, poset_automorphisms, LabeledHasse};
use abid::rootsys::RootSystem;

/// Counts bijections `p` with `adj[u][v] == adj[p(u)][p(v)]` and
/// `class[u] == class[p(u)]`.
fn count_automorphisms(adj: &[Vec<bool>], class: &[usize]) -> usize {
    fn go(adj: &[Vec<bool>], class: &[usize], img: &mut Vec<usize>, used: &mut [bool]) -> usize {
        let u = img.len();
        if u == adj.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..adj.len() {
            if used[c] || class[c] != class[u] {
                continue;
            }
            if (0..u).all(|v| adj[u][v] == adj[c][img[v]] && adj[v][u] == adj[img[v]][c]) {
                used[c] = true;
                img.push(c);
                total += go(adj, class, img, used);
                img.pop();
                used[c] = false;
            }
        }
        total
    }
    go(adj, class, &mut Vec::new(), &mut vec![false; adj.len()])
}

fn setup(ty: &str) -> (IdealCatalog, LabeledHasse) {
    let cat = IdealCatalog::new(RootSystem::new(ty.parse().unwrap()));
    let h = build_hasse(&cat);
    (cat, h)
}

fn adjacency(h: &LabeledHasse, directed: bool) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; h.len()]; h.len()];
    for e in h.edges() {
        adj[e.lo][e.hi] = true;
        if !directed {
            adj[e.hi][e.lo] = true;
        }
    }
    adj
}

fn brute_orders(ty: &str) -> (usize, usize) {
    let (_, h) = setup(ty);
    let grades: Vec<usize> = (0..h.len()).map(|v| h.grade(v)).collect();
    let poset = count_automorphisms(&adjacency(&h, true), &grades);
    let graph = count_automorphisms(&adjacency(&h, false), &vec![0; h.len()]);
    (poset, graph)
}

#[test]
fn search_agrees_with_brute_force_on_small_cases() {
    for ty in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"] {
        let (_, h) = setup(ty);
        let expected = brute_orders(ty);
        assert_eq!((poset_automorphisms(&h).order(), graph_automorphisms(&h).order()), expected, "{ty}");
    }
}

#[test]
fn documented_orders() {
    // (|Aut(Ab)|, |Aut(H)|)
    assert_eq!(brute_orders("C2"), (1, 2));
    assert_eq!(brute_orders("C3"), (2, 4));
    assert_eq!(brute_orders("G2"), (1, 2));
    assert_eq!(brute_orders("A1"), (1, 2));
    assert_eq!(brute_orders("A2"), (2, 6));
    assert_eq!(brute_orders("A3"), (2, 8));
    assert_eq!(brute_orders("D4"), (6, 24));
}

#[test]
fn extended_diagram_orders_match_graph_orders_outside_c3_and_g2() {
    for ty in ["A1", "A2", "A3", "A4", "B3", "B4", "C2", "C4", "D4", "F4"] {
        let (cat, _) = setup(ty);
        assert_eq!(aut_pihat(cat.root_system()).len(), brute_orders(ty).1, "{ty}");
    }
    for ty in ["C3", "G2"] {
        let (cat, _) = setup(ty);
        assert_eq!(2 * aut_pihat(cat.root_system()).len(), brute_orders(ty).1, "{ty}");
    }
}

#[test]
fn a3_flip_preserves_edge_labels_up_to_relabelling() {
    let (cat, h) = setup("A3");
    let flip = aut_pi(cat.root_system()).into_iter().find(|f| f.apply(1) == 3).unwrap();
    let p = diagram_permutation(&cat, &flip).unwrap();
    for e in h.edges() {
        assert_eq!(h.label_between(p.apply(e.lo), p.apply(e.hi)), Some(flip.apply(e.label)));
    }
}
