//! Permutations of a finite node set, the groups they generate, and a
//! backtracking search for automorphisms of small graphs.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::Serialize;

/// A bijection of `{0, .., n-1}`, stored as its list of images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct NodePermutation(Vec<usize>);

impl NodePermutation {
    pub fn identity(n: usize) -> Self {
        NodePermutation((0..n).collect())
    }

    /// `None` unless `images` is a permutation.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(NodePermutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &NodePermutation) -> NodePermutation {
        NodePermutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> NodePermutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        NodePermutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }
}

/// A finite permutation group, stored as its sorted list of elements.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<NodePermutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, elements: vec![NodePermutation::identity(degree)] }
    }

    /// The group generated by `gens`.
    pub fn generate(degree: usize, gens: &[NodePermutation]) -> Self {
        let id = NodePermutation::identity(degree);
        let mut seen: HashSet<NodePermutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let mut elements: Vec<_> = seen.into_iter().collect();
        elements.sort();
        PermGroup { degree, elements }
    }

    /// Wraps a list of permutations that is expected to be a group; use
    /// [`PermGroup::is_closed`] to check.
    pub fn from_elements(degree: usize, mut elements: Vec<NodePermutation>) -> Self {
        elements.sort();
        elements.dedup();
        PermGroup { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[NodePermutation] {
        &self.elements
    }

    pub fn contains(&self, p: &NodePermutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Contains the identity and is closed under composition and inverses.
    pub fn is_closed(&self) -> bool {
        self.contains(&NodePermutation::identity(self.degree))
            && self
                .elements
                .iter()
                .all(|p| self.contains(&p.inverse()) && self.elements.iter().all(|q| self.contains(&p.compose(q))))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }

    /// `g h g^{-1} ∈ self` for all `g ∈ other`, `h ∈ self`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.elements.iter().all(|g| {
                let gi = g.inverse();
                self.elements.iter().all(|h| self.contains(&g.compose(h).compose(&gi)))
            })
    }
}

/// A graph on `{0, .., n-1}` given by its directed edges; an undirected graph
/// lists each edge both ways.
#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    edge: Vec<bool>,
}

impl Digraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut edge = vec![false; n * n];
        for (u, v) in edges {
            if !std::mem::replace(&mut edge[u * n + v], true) {
                out[u].push(v);
                inc[v].push(u);
            }
        }
        out.iter_mut().for_each(|v| v.sort_unstable());
        inc.iter_mut().for_each(|v| v.sort_unstable());
        Digraph { n, out, inc, edge }
    }

    pub fn undirected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::new(n, edges.into_iter().flat_map(|(u, v)| [(u, v), (v, u)]))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge[u * self.n + v]
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn in_neighbors(&self, u: usize) -> &[usize] {
        &self.inc[u]
    }

    /// Whether `p` maps edges onto edges.
    pub fn is_automorphism(&self, p: &NodePermutation) -> bool {
        p.len() == self.n && (0..self.n).all(|u| self.out[u].iter().all(|&v| self.has_edge(p.apply(u), p.apply(v))))
    }

    /// Colour refinement: repeatedly split colour classes by the multisets
    /// of colours seen along outgoing and incoming edges until stable.
    /// Colours are renumbered canonically, so the result is invariant under
    /// automorphisms that respect the initial colouring.
    pub fn refine(&self, initial: &[u64]) -> Vec<usize> {
        let base = canonical_ids(initial.iter().map(|&c| vec![c as usize]).collect());
        self.refine_pair(base.clone(), base).expect("a colouring always matches itself").0
    }

    /// Colour signatures of `colors`: own colour, then the sorted colours
    /// along outgoing and incoming edges.
    fn signatures(&self, colors: &[usize]) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|u| {
                let mut out: Vec<usize> = self.out[u].iter().map(|&v| colors[v]).collect();
                let mut inc: Vec<usize> = self.inc[u].iter().map(|&v| colors[v]).collect();
                out.sort_unstable();
                inc.sort_unstable();
                let mut sig = vec![colors[u], out.len()];
                sig.extend(out);
                sig.push(usize::MAX);
                sig.extend(inc);
                sig
            })
            .collect()
    }

    /// Refines two colourings of this graph side by side with a shared
    /// numbering. `None` as soon as the class sizes stop matching, in which
    /// case no automorphism carries one colouring to the other.
    fn refine_pair(&self, mut left: Vec<usize>, mut right: Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        let mut count = classes(&left);
        loop {
            let mut keys = self.signatures(&left);
            keys.extend(self.signatures(&right));
            let ids = canonical_ids(keys);
            let (l, r) = ids.split_at(self.n);
            let (mut hl, mut hr) = (l.to_vec(), r.to_vec());
            hl.sort_unstable();
            hr.sort_unstable();
            if hl != hr {
                return None;
            }
            left = l.to_vec();
            right = r.to_vec();
            let next = classes(&left);
            if next == count {
                return Some((left, right));
            }
            count = next;
        }
    }

    /// All automorphisms preserving `initial` colours, by individualisation
    /// and refinement: fix one node of the first non-singleton colour class,
    /// try each node of the same colour as its image, refine both sides and
    /// prune when they disagree.
    pub fn automorphisms(&self, initial: &[u64]) -> PermGroup {
        if self.n == 0 {
            return PermGroup::trivial(0);
        }
        let base = canonical_ids(initial.iter().map(|&c| vec![c as usize]).collect());
        let mut found = Vec::new();
        if let Some((l, r)) = self.refine_pair(base.clone(), base) {
            self.individualise(l, r, &mut found);
        }
        PermGroup::from_elements(self.n, found)
    }

    fn individualise(&self, left: Vec<usize>, right: Vec<usize>, found: &mut Vec<NodePermutation>) {
        let mut size = vec![0usize; self.n * 2 + 1];
        for &c in &left {
            size[c] += 1;
        }
        let Some(u) = (0..self.n).filter(|&v| size[left[v]] > 1).min_by_key(|&v| (left[v], v)) else {
            // discrete: the colouring pins down the map
            let mut at = vec![0; size.len()];
            for (v, &c) in right.iter().enumerate() {
                at[c] = v;
            }
            let p = NodePermutation(left.iter().map(|&c| at[c]).collect());
            if self.is_automorphism(&p) {
                found.push(p);
            }
            return;
        };
        let fresh = left.iter().max().unwrap() + 1;
        for c in (0..self.n).filter(|&c| right[c] == left[u]) {
            let (mut l, mut r) = (left.clone(), right.clone());
            l[u] = fresh;
            r[c] = fresh;
            if let Some((l, r)) = self.refine_pair(l, r) {
                self.individualise(l, r, found);
            }
        }
    }
}

/// Replaces each key by its rank among the distinct keys.
fn canonical_ids(keys: Vec<Vec<usize>>) -> Vec<usize> {
    let ids: BTreeMap<&Vec<usize>, usize> =
        keys.iter().collect::<BTreeSet<_>>().into_iter().enumerate().map(|(k, v)| (v, k)).collect();
    keys.iter().map(|k| ids[k]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::undirected(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// All permutations of `0..n` by Heap's algorithm.
    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(a.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, a, out);
                let j = if k % 2 == 0 { i } else { 0 };
                a.swap(j, k - 1);
            }
        }
        let mut out = Vec::new();
        heap(n, &mut (0..n).collect(), &mut out);
        out
    }

    fn brute_force(g: &Digraph) -> usize {
        all_perms(g.len()).into_iter().filter(|p| g.is_automorphism(&NodePermutation::new(p.clone()).unwrap())).count()
    }

    #[test]
    fn permutation_basics() {
        let p = NodePermutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.order(), 3);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).images(), &[2, 0, 1]);
        assert!(NodePermutation::new(vec![0, 0]).is_none());
        assert!(NodePermutation::new(vec![2, 0]).is_none());
    }

    #[test]
    fn generated_groups() {
        let r = NodePermutation::new(vec![1, 2, 3, 0]).unwrap();
        let s = NodePermutation::new(vec![0, 3, 2, 1]).unwrap();
        let d4 = PermGroup::generate(4, &[r.clone(), s]);
        assert_eq!(d4.order(), 8);
        assert!(d4.is_closed());
        let c4 = PermGroup::generate(4, &[r]);
        assert_eq!(c4.order(), 4);
        assert!(c4.is_normal_in(&d4));
        let flip = PermGroup::generate(4, &[NodePermutation::new(vec![0, 3, 2, 1]).unwrap()]);
        assert!(flip.is_subgroup_of(&d4));
        assert!(!flip.is_normal_in(&d4));
    }

    #[test]
    fn small_graphs() {
        assert_eq!(cycle(5).automorphisms(&[0; 5]).order(), 10);
        let star = Digraph::undirected(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(star.automorphisms(&[0; 4]).order(), 6);
        let path = Digraph::undirected(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path.automorphisms(&[0; 4]).order(), 2);
        let directed = Digraph::new(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(directed.automorphisms(&[0; 4]).order(), 1);
        let k4 = Digraph::undirected(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.automorphisms(&[0; 4]).order(), 24);
        assert_eq!(k4.automorphisms(&[0, 0, 1, 1]).order(), 4);
    }

    fn connected_graph() -> impl Strategy<Value = Digraph> {
        (2usize..7).prop_flat_map(|n| {
            let extra = prop::collection::vec((0..n, 0..n), 0..10);
            let tree = prop::collection::vec(any::<prop::sample::Index>(), n - 1);
            (Just(n), tree, extra).prop_map(|(n, tree, extra)| {
                let mut edges: Vec<(usize, usize)> =
                    tree.iter().enumerate().map(|(k, ix)| (ix.index(k + 1), k + 1)).collect();
                edges.extend(extra.into_iter().filter(|(a, b)| a != b));
                Digraph::undirected(n, edges)
            })
        })
    }

    proptest! {
        #[test]
        fn search_matches_brute_force(g in connected_graph()) {
            let group = g.automorphisms(&vec![0; g.len()]);
            prop_assert_eq!(group.order(), brute_force(&g));
            prop_assert!(group.is_closed());
            prop_assert!(group.elements().iter().all(|p| g.is_automorphism(p)));
        }
    }
}
