//! Symmetries of the Dynkin diagram and of the extended diagram, the centre
//! `Z = {1, t_{ϖ_i} w_0^i w_0 : m_i = 1}`, and how all of them act on ideals.
//! Also the checks comparing these groups with the automorphisms of the
//! ideal poset and of its Hasse graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::abelian::IdealCatalog;
use crate::affine::{AffineWord, FiniteWeyl};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::perm::{NodePermutation, PermGroup};
use crate::poset::{graph_automorphisms, poset_automorphisms, LabeledHasse};
use crate::report::ReportRow;
use crate::rootsys::{Family, RootSystem};

/// A permutation of the extended diagram's nodes `0..=n` preserving the
/// affine Cartan matrix. Automorphisms of the finite diagram fix `0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DiagramAut {
    perm: Vec<usize>,
}

impl DiagramAut {
    pub fn identity(rs: &RootSystem) -> Self {
        DiagramAut { perm: (0..=rs.rank()).collect() }
    }

    pub fn new(rs: &RootSystem, perm: Vec<usize>) -> Result<Self> {
        let a = rs.affine_cartan();
        let ok = perm.len() == rs.rank() + 1
            && NodePermutation::new(perm.clone()).is_some()
            && (0..perm.len()).all(|i| (0..perm.len()).all(|j| a.get(perm[i], perm[j]) == a.get(i, j)));
        if ok {
            Ok(DiagramAut { perm })
        } else {
            Err(Error::NotDiagramAutomorphism)
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.perm
    }

    pub fn fixes_affine_node(&self) -> bool {
        self.perm[0] == 0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &DiagramAut) -> DiagramAut {
        DiagramAut { perm: other.perm.iter().map(|&i| self.perm[i]).collect() }
    }

    /// Induced map on fundamental-weight coordinates, `ω_j ↦ ω_{f(j)}`.
    /// Only meaningful when `0` is fixed.
    pub fn act_on_fw(&self, lam: &[i64]) -> Vec<i64> {
        let mut out = vec![0; lam.len()];
        for (j, &x) in lam.iter().enumerate() {
            out[self.perm[j + 1] - 1] = x;
        }
        out
    }
}

/// Permutations of `0..m` preserving `a`, by backtracking with row checks.
fn matrix_automorphisms(a: &IntMatrix) -> Vec<Vec<usize>> {
    fn go(a: &IntMatrix, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let m = a.dim();
        let i = perm.len();
        if i == m {
            out.push(perm.clone());
            return;
        }
        for c in 0..m {
            if used[c] {
                continue;
            }
            let ok = a.get(c, c) == a.get(i, i)
                && (0..i).all(|j| a.get(c, perm[j]) == a.get(i, j) && a.get(perm[j], c) == a.get(j, i));
            if ok {
                perm.push(c);
                used[c] = true;
                go(a, perm, used, out);
                used[c] = false;
                perm.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a, &mut Vec::new(), &mut vec![false; a.dim()], &mut out);
    out.sort();
    out
}

/// `Aut(Π)`, embedded in the extended diagram's node set with `0` fixed.
pub fn aut_pi(rs: &RootSystem) -> Vec<DiagramAut> {
    matrix_automorphisms(rs.cartan())
        .into_iter()
        .map(|p| DiagramAut { perm: std::iter::once(0).chain(p.into_iter().map(|i| i + 1)).collect() })
        .collect()
}

/// `Aut(Π̂)`.
pub fn aut_pihat(rs: &RootSystem) -> Vec<DiagramAut> {
    matrix_automorphisms(rs.affine_cartan()).into_iter().map(|perm| DiagramAut { perm }).collect()
}

/// `Aut(Π)` recovered as the stabiliser of `α_0` in `Aut(Π̂)`.
pub fn affine_node_stabilizer(rs: &RootSystem) -> Vec<DiagramAut> {
    aut_pihat(rs).into_iter().filter(|f| f.fixes_affine_node()).collect()
}

/// An element of `Z`: the identity, or `t_{ϖ_i} w_0^i w_0` for a node `i`
/// (1-based, affine numbering) with mark `m_i = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CenterElement {
    pub index: Option<usize>,
}

pub fn center(rs: &RootSystem) -> Vec<CenterElement> {
    std::iter::once(CenterElement { index: None })
        .chain((0..rs.rank()).filter(|&k| rs.marks()[k] == 1).map(|k| CenterElement { index: Some(k + 1) }))
        .collect()
}

/// `w_0^i w_0` and its inverse `w_0 w_0^i`, for affine node `i ≥ 1`.
pub fn w0i_w0(rs: &RootSystem, i: usize) -> (FiniteWeyl, FiniteWeyl) {
    let (w0, _) = FiniteWeyl::longest(rs, &[]);
    let (w0i, _) = FiniteWeyl::longest(rs, &[i - 1]);
    (w0i.compose(&w0), w0.compose(&w0i))
}

/// `N(x) = {β ∈ Δ⁺ : x^{-1}(β) < 0}` for a finite Weyl group element, given
/// its inverse.
pub fn finite_inversion_set(rs: &RootSystem, x_inverse: &FiniteWeyl) -> Vec<usize> {
    (0..rs.num_positive()).filter(|&k| x_inverse.act_root(&rs.root(k).coeffs).iter().any(|&c| c < 0)).collect()
}

/// Acts on ideal `k` by relabelling its canonical word through `f ∈ Aut(Π)`.
pub fn act_diagram(cat: &IdealCatalog, f: &DiagramAut, k: usize) -> Result<usize> {
    let rs = cat.root_system();
    if !f.fixes_affine_node() {
        return Err(Error::NotDiagramAutomorphism);
    }
    let letters: Vec<usize> = cat.get(k).word.letters().iter().map(|&i| f.apply(i)).collect();
    let w = AffineWord::new(rs, &letters)?;
    let phi = w
        .inversion_set()
        .ok()
        .and_then(|inv| inv.iter().map(|a| a.delta_minus_index(rs)).collect::<Option<crate::bitset::RootSet>>())
        .ok_or_else(|| Error::NotMinuscule(letters.clone()))?;
    cat.index_of_phi(phi).ok_or(Error::NotMinuscule(letters))
}

/// Acts on ideal `k` through `⟨z·𝔦⟩ = w_0^i w_0(⟨𝔦⟩) + h^∨ ω_i` and a weight
/// lookup.
pub fn act_center(cat: &IdealCatalog, z: CenterElement, k: usize) -> Result<usize> {
    let Some(i) = z.index else {
        return Ok(k);
    };
    let rs = cat.root_system();
    let (x, _) = w0i_w0(rs, i);
    let mut lam = x.act_weight(&cat.get(k).weight_fw);
    lam[i - 1] += rs.h_dual();
    cat.index_of_weight(&lam).ok_or(Error::UnknownWeight(lam))
}

fn ideal_permutation(cat: &IdealCatalog, act: impl Fn(usize) -> Result<usize>) -> Result<NodePermutation> {
    let images = (0..cat.len()).map(act).collect::<Result<Vec<_>>>()?;
    NodePermutation::new(images).ok_or_else(|| Error::Internal("action is not a bijection on ideals".into()))
}

pub fn diagram_permutation(cat: &IdealCatalog, f: &DiagramAut) -> Result<NodePermutation> {
    ideal_permutation(cat, |k| act_diagram(cat, f, k))
}

pub fn center_permutation(cat: &IdealCatalog, z: CenterElement) -> Result<NodePermutation> {
    ideal_permutation(cat, |k| act_center(cat, z, k))
}

/// The permutation group of the ideals generated by the diagram and centre
/// actions, together with the subgroup coming from the centre alone.
pub fn realized_groups(cat: &IdealCatalog) -> Result<(PermGroup, PermGroup)> {
    let rs = cat.root_system();
    let diagram = aut_pi(rs).iter().map(|f| diagram_permutation(cat, f)).collect::<Result<Vec<_>>>()?;
    let central = center(rs).into_iter().map(|z| center_permutation(cat, z)).collect::<Result<Vec<_>>>()?;
    let z = PermGroup::generate(cat.len(), &central);
    let all: Vec<NodePermutation> = diagram.into_iter().chain(central).collect();
    Ok((PermGroup::generate(cat.len(), &all), z))
}

fn row<T: Serialize + PartialEq>(ty: &str, what: &str, expected: T, computed: T) -> ReportRow {
    ReportRow::compare(format!("{ty} {what}"), expected, computed)
}

fn error_row(ty: &str, what: &str, e: Error) -> ReportRow {
    ReportRow::compare(format!("{ty} {what}"), "ok".to_string(), e.to_string())
}

/// Checks that `Aut(Π)` acts faithfully by poset automorphisms, and that
/// every poset automorphism arises this way except in type `C_3`, where the
/// poset has one extra symmetry.
pub fn verify_poset_symmetry(cat: &IdealCatalog, h: &LabeledHasse) -> Vec<ReportRow> {
    let rs = cat.root_system();
    let ty = rs.cartan_type();
    let name = ty.to_string();
    let poset = poset_automorphisms(h);
    let auts = aut_pi(rs);
    let perms = match auts.iter().map(|f| diagram_permutation(cat, f)).collect::<Result<Vec<_>>>() {
        Ok(p) => p,
        Err(e) => return vec![error_row(&name, "diagram action", e)],
    };
    let exceptional = ty.family == Family::C && ty.rank == 3;
    let expected_orders = if exceptional { vec![2, 1] } else { vec![auts.len(), auts.len()] };

    let distinct: BTreeSet<&NodePermutation> = perms.iter().collect();
    let homomorphism = auts.iter().enumerate().all(|(a, f)| {
        auts.iter().enumerate().all(|(b, g)| {
            let fg = f.compose(g);
            let c = auts.iter().position(|x| *x == fg).expect("Aut(Π) is a group");
            perms[c] == perms[a].compose(&perms[b])
        })
    });
    let image = PermGroup::from_elements(h.len(), perms.clone());
    vec![
        row(&name, "|Aut(Ab)|, |Aut(Π)|", expected_orders, vec![poset.order(), auts.len()]),
        ReportRow::holds(
            format!("{name} diagram action is an injective homomorphism"),
            distinct.len() == auts.len() && homomorphism,
        ),
        ReportRow::holds(format!("{name} diagram action lands in Aut(Ab)"), image.is_subgroup_of(&poset)),
        row(&name, "diagram action is onto Aut(Ab)", !exceptional, image == poset),
    ]
}

/// Compares the automorphism group of the undirected Hasse graph with
/// `Aut(Π̂)`, checks that the diagram and centre actions realise it, and
/// that graph automorphisms fixing the bottom preserve the order.
pub fn verify_hasse_symmetry(cat: &IdealCatalog, h: &LabeledHasse) -> Vec<ReportRow> {
    let rs = cat.root_system();
    let ty = rs.cartan_type();
    let name = ty.to_string();
    let graph = graph_automorphisms(h);
    let poset = poset_automorphisms(h);
    let pihat = aut_pihat(rs).len();
    let doubled = matches!((ty.family, ty.rank), (Family::C, 3) | (Family::G, 2));
    let factor = if doubled { 2 } else { 1 };
    let mut rows = vec![row(&name, "|Aut(H)|", factor * pihat, graph.order())];
    match realized_groups(cat) {
        Ok((realized, _)) => {
            rows.push(row(&name, "order of the group realised on ideals", pihat, realized.order()));
            rows.push(ReportRow::holds(
                format!("{name} realised group acts by graph automorphisms"),
                realized.is_subgroup_of(&graph),
            ));
        }
        Err(e) => rows.push(error_row(&name, "realised group", e)),
    }
    let fixing_bottom = graph.elements().iter().filter(|p| p.apply(0) == 0);
    rows.push(ReportRow::holds(
        format!("{name} graph automorphisms fixing e are poset automorphisms"),
        fixing_bottom.clone().all(|p| poset.contains(p)),
    ));
    rows
}

/// Structure of `Aut(Π̂)`: the finite diagram's group is the stabiliser of
/// `α_0`, its order times `|Z|` is `|Aut(Π̂)|`, and marks and comarks are
/// invariant.
pub fn verify_diagram_groups(rs: &RootSystem) -> Vec<ReportRow> {
    let name = rs.cartan_type().to_string();
    let pi = aut_pi(rs);
    let pihat = aut_pihat(rs);
    let z = center(rs);
    let invariant = pi.iter().all(|f| {
        (0..rs.rank()).all(|k| {
            let j = f.apply(k + 1) - 1;
            rs.marks()[k] == rs.marks()[j] && rs.comarks()[k] == rs.comarks()[j]
        })
    });
    vec![
        ReportRow::holds(format!("{name} Aut(Π) is the stabiliser of α0 in Aut(Π̂)"), affine_node_stabilizer(rs) == pi),
        row(&name, "|Aut(Π̂)| = |Aut(Π)|·|Z|", pi.len() * z.len(), pihat.len()),
        ReportRow::holds(format!("{name} marks and comarks are Aut(Π)-invariant"), invariant),
    ]
}

/// The centre: `⟨N(w_0^i w_0)⟩ = h^∨ ω_i`, each `z` acts bijectively, the
/// centre acts faithfully as a group of order `|Z|`, and the diagram action
/// satisfies `⟨f·𝔦⟩ = f(⟨𝔦⟩)`.
pub fn verify_center(cat: &IdealCatalog) -> Vec<ReportRow> {
    let rs = cat.root_system();
    let name = rs.cartan_type().to_string();
    let mut rows = Vec::new();
    for z in center(rs) {
        let Some(i) = z.index else { continue };
        let (_, inv) = w0i_w0(rs, i);
        let n = finite_inversion_set(rs, &inv);
        let sum = n.iter().fold(vec![0; rs.rank()], |acc, &k| linalg::add(&acc, rs.fw_of_root(k)));
        let mut expected = vec![0; rs.rank()];
        expected[i - 1] = rs.h_dual();
        rows.push(row(&name, &format!("<N(w0^{i} w0)> = h∨ω{i}"), expected, sum));
        rows.push(ReportRow::holds(format!("{name} z{i} permutes the ideals"), center_permutation(cat, z).is_ok()));
    }
    match realized_groups(cat) {
        Ok((_, zgroup)) => rows.push(row(&name, "|Z| acting on ideals", center(rs).len(), zgroup.order())),
        Err(e) => rows.push(error_row(&name, "centre action", e)),
    }
    let azione = aut_pi(rs).iter().all(|f| {
        (0..cat.len()).all(|k| match act_diagram(cat, f, k) {
            Ok(j) => cat.get(j).weight_fw == f.act_on_fw(&cat.get(k).weight_fw),
            Err(_) => false,
        })
    });
    rows.push(ReportRow::holds(format!("{name} weight of f·i is f(weight of i)"), azione));
    rows
}

/// The group generated by the diagram and centre actions has order
/// `|Aut(Π)|·|Z|`, with the centre part normal.
pub fn verify_semidirect(cat: &IdealCatalog) -> Vec<ReportRow> {
    let rs = cat.root_system();
    let name = rs.cartan_type().to_string();
    match realized_groups(cat) {
        Ok((g, z)) => vec![
            row(&name, "|<diagram, centre>|", aut_pi(rs).len() * center(rs).len(), g.order()),
            ReportRow::holds(format!("{name} centre part is normal"), z.is_normal_in(&g)),
        ],
        Err(e) => vec![error_row(&name, "semidirect product", e)],
    }
}
