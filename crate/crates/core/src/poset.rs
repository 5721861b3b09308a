//! The Hasse diagram of the poset of abelian ideals. An edge `u → u·s_k`
//! carries the label `k` of the generator added. Also diamonds, reduced
//! words, and the automorphism groups of the poset and of its underlying
//! graph.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::abelian::IdealCatalog;
use crate::affine::AffineRoot;
use crate::perm::{Digraph, PermGroup};
use crate::rootsys::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HasseEdge {
    pub lo: usize,
    pub hi: usize,
    pub label: usize,
}

/// Covering graph of the ideal poset. Node `k` is ideal `k` of the catalog
/// it was built from, so nodes are sorted by grade and then canonical word.
#[derive(Clone, Debug)]
pub struct LabeledHasse {
    grades: Vec<usize>,
    words: Vec<Vec<usize>>,
    edges: Vec<HasseEdge>,
    up: Vec<Vec<(usize, usize)>>,
    down: Vec<Vec<(usize, usize)>>,
    pi_prime: BTreeSet<usize>,
    name: String,
}

pub fn build_hasse(cat: &IdealCatalog) -> LabeledHasse {
    let rs = cat.root_system();
    let n = cat.len();
    let mut edges = Vec::new();
    for (lo, ideal) in cat.ideals().iter().enumerate() {
        for k in 0..=rs.rank() {
            let img = ideal.word.act(rs, &AffineRoot::simple(rs, k));
            let Some(beta) = img.delta_minus_index(rs) else {
                continue;
            };
            if let Some(hi) = cat.index_of_phi(ideal.phi.with(beta)) {
                edges.push(HasseEdge { lo, hi, label: k });
            }
        }
    }
    edges.sort();
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    for e in &edges {
        up[e.lo].push((e.hi, e.label));
        down[e.hi].push((e.lo, e.label));
    }
    LabeledHasse {
        grades: cat.ideals().iter().map(|i| i.grade()).collect(),
        words: cat.ideals().iter().map(|i| i.word.letters().to_vec()).collect(),
        pi_prime: edges.iter().map(|e| e.label).collect(),
        edges,
        up,
        down,
        name: rs.cartan_type().to_string(),
    }
}

/// Four nodes `bottom < left, right < top` joined by covering edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Diamond {
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
    pub top: usize,
    /// Labels of `bottom→left`, `bottom→right`, `left→top`, `right→top`.
    pub labels: [usize; 4],
}

impl LabeledHasse {
    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn grade(&self, v: usize) -> usize {
        self.grades[v]
    }

    pub fn word(&self, v: usize) -> &[usize] {
        &self.words[v]
    }

    pub fn edges(&self) -> &[HasseEdge] {
        &self.edges
    }

    /// `(upper neighbour, label)` pairs.
    pub fn up(&self, v: usize) -> &[(usize, usize)] {
        &self.up[v]
    }

    /// `(lower neighbour, label)` pairs.
    pub fn down(&self, v: usize) -> &[(usize, usize)] {
        &self.down[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.up[v].len() + self.down[v].len()
    }

    /// Labels that occur on some edge.
    pub fn pi_prime(&self) -> &BTreeSet<usize> {
        &self.pi_prime
    }

    pub fn label_between(&self, lo: usize, hi: usize) -> Option<usize> {
        self.up[lo].iter().find(|&&(h, _)| h == hi).map(|&(_, l)| l)
    }

    /// Covering relation as a directed graph, lower to upper.
    pub fn digraph(&self) -> Digraph {
        Digraph::new(self.len(), self.edges.iter().map(|e| (e.lo, e.hi)))
    }

    /// Underlying undirected graph.
    pub fn graph(&self) -> Digraph {
        Digraph::undirected(self.len(), self.edges.iter().map(|e| (e.lo, e.hi)))
    }

    /// Every diamond, found by scanning pairs of upper covers of each node.
    pub fn diamonds(&self) -> Vec<Diamond> {
        let mut out = Vec::new();
        for bottom in 0..self.len() {
            let ups = &self.up[bottom];
            for (a, &(left, i)) in ups.iter().enumerate() {
                for &(right, j) in &ups[a + 1..] {
                    for &(top, j2) in &self.up[left] {
                        if let Some(i2) = self.label_between(right, top) {
                            out.push(Diamond { bottom, left, right, top, labels: [i, j, j2, i2] });
                        }
                    }
                }
            }
        }
        out
    }

    /// Every reduced word of the minuscule element at node `v`: each one ends
    /// with the label of an edge from a lower cover.
    pub fn reduced_words(&self, v: usize) -> Vec<Vec<usize>> {
        let mut memo: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
        self.reduced_words_memo(v, &mut memo)
    }

    fn reduced_words_memo(&self, v: usize, memo: &mut HashMap<usize, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if let Some(w) = memo.get(&v) {
            return w.clone();
        }
        let words = if self.down[v].is_empty() {
            vec![Vec::new()]
        } else {
            let mut words = Vec::new();
            for &(lo, label) in &self.down[v] {
                for mut w in self.reduced_words_memo(lo, memo) {
                    w.push(label);
                    words.push(w);
                }
            }
            words.sort();
            words
        };
        memo.insert(v, words.clone());
        words
    }

    pub fn to_json(&self) -> HasseJson {
        HasseJson {
            schema: crate::SCHEMA,
            cartan_type: self.name.clone(),
            nodes: (0..self.len())
                .map(|id| HasseNodeJson { id, grade: self.grades[id], word: self.words[id].clone() })
                .collect(),
            edges: self.edges.clone(),
        }
    }

    /// Graphviz rendering, bottom to top, one rank per grade.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{}\" {{", self.name).unwrap();
        writeln!(s, "  rankdir=BT;").unwrap();
        writeln!(s, "  node [shape=circle, fontsize=10];").unwrap();
        for v in 0..self.len() {
            writeln!(s, "  n{v} [label=\"{}\"];", word_label(&self.words[v])).unwrap();
        }
        let max_grade = self.grades.iter().copied().max().unwrap_or(0);
        for g in 0..=max_grade {
            let ids: Vec<String> = (0..self.len()).filter(|&v| self.grades[v] == g).map(|v| format!("n{v};")).collect();
            writeln!(s, "  {{ rank=same; {} }}", ids.join(" ")).unwrap();
        }
        for e in &self.edges {
            writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.lo, e.hi, e.label).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|k| format!("s{k}")).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HasseNodeJson {
    pub id: usize,
    pub grade: usize,
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HasseJson {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub nodes: Vec<HasseNodeJson>,
    pub edges: Vec<HasseEdge>,
}

/// Bijections of the nodes that preserve the covering relation with its
/// orientation. Grade is the length of any maximal chain from the bottom, so
/// it is preserved and is used as the initial colour together with the up-
/// and down-degrees.
pub fn poset_automorphisms(h: &LabeledHasse) -> PermGroup {
    let colors: Vec<u64> = (0..h.len())
        .map(|v| ((h.grade(v) as u64) << 32) | ((h.up(v).len() as u64) << 16) | h.down(v).len() as u64)
        .collect();
    h.digraph().automorphisms(&colors)
}

/// Automorphisms of the underlying undirected graph. Grades are not fixed:
/// the bottom node may move.
pub fn graph_automorphisms(h: &LabeledHasse) -> PermGroup {
    let colors: Vec<u64> = (0..h.len()).map(|v| h.degree(v) as u64).collect();
    h.graph().automorphisms(&colors)
}

/// Number of simple affine roots `α` with `w(α) ∈ ±(δ - Δ⁺)` for the
/// minuscule element `w` of ideal `k`.
pub fn degree_of_node(cat: &IdealCatalog, k: usize) -> usize {
    let rs = cat.root_system();
    let w = &cat.get(k).word;
    (0..=rs.rank())
        .filter(|&i| {
            let img = w.act(rs, &AffineRoot::simple(rs, i));
            img.delta_minus_index(rs).is_some() || img.neg().delta_minus_index(rs).is_some()
        })
        .count()
}

/// `α_k` is long in the extended diagram; `α_0 = δ - θ` counts as long.
fn is_long_affine(rs: &RootSystem, k: usize) -> bool {
    k == 0 || rs.is_long_simple(k - 1)
}

/// Position of a factor `s_a s_b s_a` in `word` other than one with `α_a`
/// long and `α_b` short.
pub fn forbidden_braid(rs: &RootSystem, word: &[usize]) -> Option<usize> {
    word.windows(3)
        .position(|t| t[0] == t[2] && t[0] != t[1] && !(is_long_affine(rs, t[0]) && !is_long_affine(rs, t[1])))
}

/// Words reachable from `word` by swapping adjacent commuting generators.
pub fn commutation_class(rs: &RootSystem, word: &[usize]) -> HashSet<Vec<usize>> {
    let a = rs.affine_cartan();
    let mut seen = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for p in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[p], w[p + 1]);
            if x != y && a.get(x, y) == 0 {
                let mut v = w.clone();
                v.swap(p, p + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Sorted letters of `word`.
pub fn letter_multiset(word: &[usize]) -> Vec<usize> {
    let mut v = word.to_vec();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::IdealCatalog;
    use crate::affine::AffineWord;
    use crate::bitset::RootSet;
    use crate::rootsys::{CartanType, Family};

    fn hasse(s: &str) -> (IdealCatalog, LabeledHasse) {
        let cat = IdealCatalog::new(RootSystem::new(s.parse().unwrap()));
        let h = build_hasse(&cat);
        (cat, h)
    }

    fn edge(lo: usize, hi: usize, label: usize) -> HasseEdge {
        HasseEdge { lo, hi, label }
    }

    #[test]
    fn c2_chain() {
        let (_, h) = hasse("C2");
        assert_eq!(h.edges(), &[edge(0, 1, 0), edge(1, 2, 1), edge(2, 3, 0)]);
        assert!(h.diamonds().is_empty());
        assert_eq!(poset_automorphisms(&h).order(), 1);
        assert_eq!(h.pi_prime(), &BTreeSet::from([0, 1]));
    }

    #[test]
    fn a3_diagram() {
        let (_, h) = hasse("A3");
        let words: Vec<&[usize]> = (0..8).map(|v| h.word(v)).collect();
        assert_eq!(words, vec![&[][..], &[0], &[0, 1], &[0, 3], &[0, 1, 2], &[0, 1, 3], &[0, 3, 2], &[0, 1, 3, 0]]);
        assert_eq!(
            h.edges(),
            &[
                edge(0, 1, 0),
                edge(1, 2, 1),
                edge(1, 3, 3),
                edge(2, 4, 2),
                edge(2, 5, 3),
                edge(3, 5, 1),
                edge(3, 6, 2),
                edge(5, 7, 0),
            ]
        );
        let d = h.diamonds();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].labels, [1, 3, 3, 1]);
        assert_eq!(poset_automorphisms(&h).order(), 2);
        assert_eq!(degree_of_node(&hasse("A3").0, 1), 3);
    }

    #[test]
    fn small_graph_groups() {
        assert_eq!(graph_automorphisms(&hasse("A1").1).order(), 2);
        assert_eq!(graph_automorphisms(&hasse("A2").1).order(), 6);
        let (_, g2) = hasse("G2");
        assert_eq!(g2.edges().len(), 3);
        assert!((0..3).all(|v| g2.up(v).len() == 1));
        assert_eq!(graph_automorphisms(&g2).order(), 2);
        assert_eq!(poset_automorphisms(&hasse("C3").1).order(), 2);
    }

    #[test]
    fn pi_prime_misses_only_the_long_simple_root_in_type_c() {
        for ty in CartanType::sweep(7) {
            let (cat, h) = hasse(&ty.to_string());
            let rs = cat.root_system();
            // A1 is C1, and B2 is C2 with the nodes swapped
            let missing = match (ty.family, ty.rank) {
                (Family::C, n) => Some(n),
                (Family::A, 1) | (Family::B, 2) => Some(1),
                _ => None,
            };
            let expected: BTreeSet<usize> = (0..=rs.rank()).filter(|&k| Some(k) != missing).collect();
            assert_eq!(h.pi_prime(), &expected, "{ty}");
        }
    }

    /// Edges agree with covers of inclusion computed by brute force, and the
    /// label is the generator that extends the word.
    #[test]
    fn edges_are_inclusion_covers() {
        for ty in CartanType::sweep(6) {
            let (cat, h) = hasse(&ty.to_string());
            let rs = cat.root_system();
            let n = cat.len();
            let mut covers = BTreeSet::new();
            for a in 0..n {
                for b in 0..n {
                    let (pa, pb) = (cat.get(a).phi, cat.get(b).phi);
                    if pa != pb && pa.is_subset(pb) {
                        let between = (0..n).any(|c| {
                            let pc = cat.get(c).phi;
                            pc != pa && pc != pb && pa.is_subset(pc) && pc.is_subset(pb)
                        });
                        if !between {
                            covers.insert((a, b));
                        }
                    }
                }
            }
            let got: BTreeSet<(usize, usize)> = h.edges().iter().map(|e| (e.lo, e.hi)).collect();
            assert_eq!(got, covers, "{ty}");
            for e in h.edges() {
                assert_eq!(h.grade(e.hi), h.grade(e.lo) + 1);
                let w = cat.get(e.lo).word.extended(rs, e.label).unwrap();
                let phi: RootSet =
                    w.inversion_set().unwrap().iter().map(|a| a.delta_minus_index(rs).unwrap()).collect();
                assert_eq!(phi, cat.get(e.hi).phi);
            }
            assert_eq!(h.degree(0), 1);
            assert_eq!((0..n).filter(|&v| h.grade(v) == 1).count(), 1);
        }
    }

    #[test]
    fn diamonds_commute_and_nodes_with_two_lower_covers_top_a_diamond() {
        for ty in CartanType::sweep(6) {
            let (cat, h) = hasse(&ty.to_string());
            let a = cat.root_system().affine_cartan();
            let diamonds = h.diamonds();
            for d in &diamonds {
                let [i, j, j2, i2] = d.labels;
                assert_eq!((i, j), (i2, j2), "{ty} {d:?}");
                assert_eq!(a.get(i, j), 0, "{ty} {d:?}");
            }
            for v in 0..h.len() {
                for (p, &(l, _)) in h.down(v).iter().enumerate() {
                    for &(r, _) in &h.down(v)[p + 1..] {
                        assert!(
                            diamonds.iter().any(|d| d.top == v && [d.left, d.right] == [l.min(r), l.max(r)]),
                            "{ty} node {v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn d4_diamonds_commute() {
        let (cat, h) = hasse("D4");
        let a = cat.root_system().affine_cartan();
        assert!(!h.diamonds().is_empty());
        assert!(h.diamonds().iter().all(|d| a.get(d.labels[0], d.labels[1]) == 0));
    }

    #[test]
    fn degree_formula_matches_graph() {
        for ty in CartanType::sweep(6) {
            let (cat, h) = hasse(&ty.to_string());
            for v in 0..h.len() {
                assert_eq!(degree_of_node(&cat, v), h.degree(v), "{ty} node {v}");
            }
        }
    }

    #[test]
    fn reduced_words_rank_four() {
        for ty in CartanType::sweep(4) {
            let (cat, h) = hasse(&ty.to_string());
            let rs = cat.root_system();
            for v in 0..h.len() {
                let words = h.reduced_words(v);
                let canon = h.word(v);
                assert!(words.iter().any(|w| w == canon));
                let class = commutation_class(rs, canon);
                assert_eq!(class, words.iter().cloned().collect::<HashSet<_>>(), "{ty} node {v}");
                for w in &words {
                    assert_eq!(letter_multiset(w), letter_multiset(canon));
                    assert_eq!(forbidden_braid(rs, w), None, "{ty} {w:?}");
                    let aw = AffineWord::new(rs, w).unwrap();
                    assert!(aw.is_reduced());
                    let phi: RootSet =
                        aw.inversion_set().unwrap().iter().map(|a| a.delta_minus_index(rs).unwrap()).collect();
                    assert_eq!(phi, cat.get(v).phi);
                }
            }
        }
    }

    #[test]
    fn forbidden_pattern_detection() {
        let rs = RootSystem::new("C2".parse().unwrap());
        // α0 long, α1 short, α2 long
        assert_eq!(forbidden_braid(&rs, &[0, 1, 0]), None);
        assert_eq!(forbidden_braid(&rs, &[1, 0, 1]), Some(0));
        let a2 = RootSystem::new("A2".parse().unwrap());
        assert_eq!(forbidden_braid(&a2, &[2, 0, 1, 0]), Some(1));
    }

    #[test]
    fn groups_are_closed_and_nested() {
        for ty in CartanType::sweep(6) {
            let (_, h) = hasse(&ty.to_string());
            let p = poset_automorphisms(&h);
            let g = graph_automorphisms(&h);
            assert!(p.is_closed() && g.is_closed(), "{ty}");
            assert!(p.is_subgroup_of(&g), "{ty}");
            assert!(p.elements().iter().all(|x| h.digraph().is_automorphism(x)));
        }
    }

    #[test]
    fn exports() {
        let (_, h) = hasse("A3");
        let dot = h.to_dot();
        assert!(dot.starts_with("digraph \"A3\" {\n  rankdir=BT;"));
        assert_eq!(dot.matches(" -> ").count(), 8);
        assert!(dot.contains("n5 -> n7 [label=\"0\"];"));
        let j = serde_json::to_value(h.to_json()).unwrap();
        assert_eq!(j["schema"], "abid/1");
        assert_eq!(j["nodes"].as_array().unwrap().len(), 8);
        assert_eq!(j["edges"][0], serde_json::json!({"lo": 0, "hi": 1, "label": 0}));
    }
}
