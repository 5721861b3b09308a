//! Abelian ideals of the Borel subalgebra, stored as abelian dual order
//! ideals `Φ ⊂ Δ⁺`, together with the encodings that index them: minuscule
//! affine Weyl elements, weights, ρ-points, alcoves in `2C_1`, the vectors
//! `η = v^{-1}(τ)`, and antichains.

use std::collections::{HashMap, HashSet, VecDeque};

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::affine::{self, AffineRoot, AffineWord};
use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::RootSystem;

/// One abelian ideal with its derived encodings.
#[derive(Debug, Clone)]
pub struct IdealSet {
    pub phi: RootSet,
    pub weight_fw: Vec<i64>,
    pub word: AffineWord,
    pub antichain: Vec<usize>,
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.phi == other.phi
    }
}

impl Eq for IdealSet {}

impl IdealSet {
    /// Dimension of the ideal, i.e. `|Φ|`.
    pub fn grade(&self) -> usize {
        self.phi.len()
    }

    pub fn eta(&self, rs: &RootSystem) -> Result<Vec<i64>> {
        affine::eta(rs, &self.word)
    }

    pub fn to_json(&self, rs: &RootSystem) -> Result<IdealJson> {
        let coeffs = |i: usize| rs.root(i).coeffs.clone();
        Ok(IdealJson {
            phi: self.phi.iter().map(coeffs).collect(),
            antichain: self.antichain.iter().map(|&i| coeffs(i)).collect(),
            word: self.word.letters().to_vec(),
            weight_fw: self.weight_fw.clone(),
            eta: self.eta(rs)?,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealJson {
    pub phi: Vec<Vec<i64>>,
    pub antichain: Vec<Vec<i64>>,
    pub word: Vec<usize>,
    pub weight_fw: Vec<i64>,
    pub eta: Vec<i64>,
}

pub fn is_dual_order_ideal(rs: &RootSystem, set: RootSet) -> bool {
    set.iter().all(|i| rs.above(i).is_subset(set))
}

pub fn is_abelian(rs: &RootSystem, set: RootSet) -> bool {
    set.iter().all(|i| !rs.sum_partners(i).intersects(set))
}

pub fn is_abelian_dual_ideal(rs: &RootSystem, set: RootSet) -> bool {
    is_dual_order_ideal(rs, set) && is_abelian(rs, set)
}

/// The dual order ideal generated by `roots`.
pub fn upward_closure(rs: &RootSystem, roots: impl IntoIterator<Item = usize>) -> RootSet {
    roots.into_iter().fold(RootSet::EMPTY, |acc, i| acc.union(rs.above(i)))
}

/// Minimal elements of `set` in the root poset, in index order.
pub fn minimal_elements(rs: &RootSystem, set: RootSet) -> Vec<usize> {
    set.iter().filter(|&i| set.iter().all(|j| j == i || !rs.le(j, i))).collect()
}

/// `Σ_{α∈Φ} α` in simple-root coordinates.
pub fn weight_root_coords(rs: &RootSystem, phi: RootSet) -> Vec<i64> {
    phi.iter().fold(vec![0; rs.rank()], |acc, i| linalg::add(&acc, &rs.root(i).coeffs))
}

/// `⟨𝔦⟩ = Σ_{α∈Φ} α` in fundamental-weight coordinates.
pub fn weight(rs: &RootSystem, phi: RootSet) -> Vec<i64> {
    phi.iter().fold(vec![0; rs.rank()], |acc, i| linalg::add(&acc, rs.fw_of_root(i)))
}

/// Lexicographically smallest reduced word of the minuscule element with
/// inversion set `δ - Φ`: extend by the smallest generator whose new
/// inversion stays inside `δ - Φ`.
pub fn canonical_word(rs: &RootSystem, phi: RootSet) -> Result<AffineWord> {
    let mut w = AffineWord::identity(rs);
    let mut covered = RootSet::EMPTY;
    while covered != phi {
        let step = (0..=rs.rank()).find_map(|i| {
            let beta = w.act(rs, &AffineRoot::simple(rs, i)).delta_minus_index(rs)?;
            (phi.contains(beta) && !covered.contains(beta)).then_some((i, beta))
        });
        let Some((i, beta)) = step else {
            return Err(Error::NotAbelianIdeal);
        };
        w = w.extended(rs, i)?;
        covered.insert(beta);
    }
    Ok(w)
}

/// Builds the ideal with root set `phi`, checking that it is an abelian dual
/// order ideal.
pub fn from_phi(rs: &RootSystem, phi: RootSet) -> Result<IdealSet> {
    if !is_abelian_dual_ideal(rs, phi) {
        return Err(Error::NotAbelianIdeal);
    }
    Ok(IdealSet {
        phi,
        weight_fw: weight(rs, phi),
        word: canonical_word(rs, phi)?,
        antichain: minimal_elements(rs, phi),
    })
}

/// `α + β ≤ θ` coefficientwise.
fn sum_below_theta(rs: &RootSystem, a: usize, b: usize) -> bool {
    let (x, y) = (&rs.root(a).coeffs, &rs.root(b).coeffs);
    (0..rs.rank()).all(|k| x[k] + y[k] <= rs.marks()[k])
}

/// The ideal generated by an antichain whose pairwise sums (including each
/// root doubled) are not below `θ`.
pub fn from_antichain(rs: &RootSystem, antichain: &[usize]) -> Result<IdealSet> {
    for (p, &a) in antichain.iter().enumerate() {
        for &b in &antichain[p..] {
            if a != b && (rs.le(a, b) || rs.le(b, a)) {
                return Err(Error::NotAntichain);
            }
            if sum_below_theta(rs, a, b) {
                return Err(Error::NotAbelian(rs.root(a).coeffs.clone(), rs.root(b).coeffs.clone()));
            }
        }
    }
    from_phi(rs, upward_closure(rs, antichain.iter().copied()))
}

/// All abelian ideals, found by walking the weak order on minuscule elements
/// from the identity. Ideals come out sorted by grade, then by canonical word.
pub fn enumerate_ideals(rs: &RootSystem) -> Vec<IdealSet> {
    let mut out = vec![IdealSet {
        phi: RootSet::EMPTY,
        weight_fw: vec![0; rs.rank()],
        word: AffineWord::identity(rs),
        antichain: Vec::new(),
    }];
    let mut seen: HashSet<RootSet> = HashSet::from([RootSet::EMPTY]);
    let mut level_start = 0;
    while level_start < out.len() {
        let level_end = out.len();
        for p in level_start..level_end {
            for i in 0..=rs.rank() {
                let img = out[p].word.act(rs, &AffineRoot::simple(rs, i));
                let Some(beta) = img.delta_minus_index(rs) else {
                    continue;
                };
                let phi = out[p].phi.with(beta);
                if seen.contains(&phi) || !is_abelian_dual_ideal(rs, phi) {
                    continue;
                }
                seen.insert(phi);
                let word = out[p].word.extended(rs, i).expect("generator index is in range");
                out.push(IdealSet {
                    phi,
                    weight_fw: linalg::add(&out[p].weight_fw, rs.fw_of_root(beta)),
                    word,
                    antichain: minimal_elements(rs, phi),
                });
            }
        }
        level_start = level_end;
    }
    out
}

/// Enumerates the cliques of a compatibility relation by backtracking in
/// index order; `compatible[i]` is the set of partners of `i`.
fn cliques(compatible: &[RootSet], allowed: RootSet, visit: &mut impl FnMut(&[usize])) {
    fn go(compatible: &[RootSet], candidates: RootSet, current: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        visit(current);
        for i in candidates {
            current.push(i);
            let next = candidates.intersection(compatible[i]).difference(RootSet::full(i + 1));
            go(compatible, next, current, visit);
            current.pop();
        }
    }
    go(compatible, allowed, &mut Vec::new(), visit);
}

fn incomparable(rs: &RootSystem, a: usize, b: usize) -> bool {
    a != b && !rs.le(a, b) && !rs.le(b, a)
}

/// Root sets of abelian ideals generated from the antichains accepted by the
/// `α + β ≰ θ` test. Independent of the Weyl group walk.
pub fn enumerate_by_antichains(rs: &RootSystem) -> Vec<RootSet> {
    let n = rs.num_positive();
    let allowed: RootSet = (0..n).filter(|&a| !sum_below_theta(rs, a, a)).collect();
    let compatible: Vec<RootSet> =
        (0..n).map(|a| (0..n).filter(|&b| incomparable(rs, a, b) && !sum_below_theta(rs, a, b)).collect()).collect();
    let mut out = Vec::new();
    cliques(&compatible, allowed, &mut |a| out.push(upward_closure(rs, a.iter().copied())));
    out
}

/// Every antichain of `Δ⁺`, as the list of its elements.
pub fn all_antichains(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.num_positive();
    let compatible: Vec<RootSet> = (0..n).map(|a| (0..n).filter(|&b| incomparable(rs, a, b)).collect()).collect();
    let mut out = Vec::new();
    cliques(&compatible, RootSet::full(n), &mut |a| out.push(a.to_vec()));
    out
}

/// Root sets of abelian ideals found by closing every antichain upward and
/// keeping the abelian ones.
pub fn enumerate_by_filter(rs: &RootSystem) -> Vec<RootSet> {
    all_antichains(rs).into_iter().map(|a| upward_closure(rs, a)).filter(|&phi| is_abelian(rs, phi)).collect()
}

/// `ρ + ⟨𝔦⟩`, checked against the affine action of the minuscule word on `ρ`.
pub fn rho_point(rs: &RootSystem, ideal: &IdealSet) -> Result<Vec<i64>> {
    let rho = rs.rho();
    let expected = linalg::add(&rho, &ideal.weight_fw);
    let acted = affine::affine_act_on_weight(rs, &ideal.word, &rho);
    if acted != expected {
        return Err(Error::Internal(format!(
            "w(ρ) = {acted:?} but ρ + weight = {expected:?} for word {:?}",
            ideal.word.letters()
        )));
    }
    Ok(expected)
}

/// Spacing of the affine hyperplanes `<λ, β^∨> = const` at level `h^∨`:
/// `h^∨` for long `β`, and `h^∨ (θ,θ)/(β,β)` for short `β`.
pub fn hyperplane_periods(rs: &RootSystem) -> Vec<i64> {
    let two = BigRational::from_integer(2.into());
    rs.positive_roots()
        .iter()
        .map(|r| {
            let ratio = &two / rs.inner(&r.coeffs, &r.coeffs);
            rs.h_dual() * ratio.to_integer().to_i64().expect("length ratio is 1, 2 or 3")
        })
        .collect()
}

fn is_regular_with(rs: &RootSystem, periods: &[i64], lam: &[i64]) -> bool {
    (0..rs.num_positive()).all(|k| linalg::dot(lam, rs.coroot_of_root(k)) % periods[k] != 0)
}

/// Whether `λ` lies on no reflecting hyperplane of the level-`h^∨` affine
/// action on weights.
pub fn is_regular_weight(rs: &RootSystem, lam: &[i64]) -> bool {
    is_regular_with(rs, &hyperplane_periods(rs), lam)
}

/// Integral weights in the interior of `2C_1` that are regular, found by
/// direct search over `λ_i ≥ 1` with `<λ, θ^∨> < 2h^∨`.
pub fn rho_points_in_double_alcove(rs: &RootSystem) -> Vec<Vec<i64>> {
    fn go(rs: &RootSystem, periods: &[i64], k: usize, budget: i64, lam: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == rs.rank() {
            if is_regular_with(rs, periods, lam) {
                out.push(lam.clone());
            }
            return;
        }
        let c = rs.comarks()[k];
        let rest: i64 = rs.comarks()[k + 1..].iter().sum();
        let mut v = 1;
        while c * v + rest <= budget {
            lam.push(v);
            go(rs, periods, k + 1, budget - c * v, lam, out);
            lam.pop();
            v += 1;
        }
    }
    let periods = hyperplane_periods(rs);
    let mut out = Vec::new();
    go(rs, &periods, 0, 2 * rs.h_dual() - 1, &mut Vec::new(), &mut out);
    out
}

/// `det(A)` and the adjugate `det(A)·A^{-1}` of the Cartan matrix.
fn cartan_adjugate(rs: &RootSystem) -> (i64, Vec<Vec<i64>>) {
    let inv = rs.cartan().rational_inverse().expect("Cartan matrices are invertible");
    let det = rs.cartan().leading_minor(rs.rank()) as i64;
    let d = BigRational::from_integer(det.into());
    let adj = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let y = x * &d;
                    assert!(y.is_integer());
                    y.to_integer().to_i64().expect("small entries")
                })
                .collect()
        })
        .collect();
    (det, adj)
}

/// All `η ∈ Q^∨` (coroot coordinates) with `η(α) ∈ {-2, -1, 0, 1}` on `Δ⁺`,
/// by scanning the values on simple roots and solving back.
pub fn eta_vectors(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let (det, adj) = cartan_adjugate(rs);
    let mut out = Vec::new();
    let mut values = vec![-2i64; n];
    'scan: loop {
        // η(α_i) = Σ_k a_ik η_k, so η = A^{-1} values
        let scaled: Vec<i64> = adj.iter().map(|row| linalg::dot(row, &values)).collect();
        if scaled.iter().all(|x| x % det == 0) {
            let eta: Vec<i64> = scaled.iter().map(|x| x / det).collect();
            let ok = rs.positive_roots().iter().all(|r| (-2..=1).contains(&rs.pair_with_coroot(&r.coeffs, &eta)));
            if ok {
                out.push(eta);
            }
        }
        for k in 0..n {
            if values[k] < 1 {
                values[k] += 1;
                continue 'scan;
            }
            values[k] = -2;
        }
        break;
    }
    out
}

/// Vertices of the fundamental alcove `C_1` in coroot coordinates, scaled by
/// a common integer so they are integral: `0` and `ω_j^∨ / m_j`.
fn scaled_alcove_vertices(rs: &RootSystem) -> (i64, Vec<Vec<i64>>) {
    let n = rs.rank();
    let inv = rs.cartan().rational_inverse().expect("Cartan matrices are invertible");
    let verts: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let m = BigRational::from_integer(rs.marks()[j].into());
            (0..n).map(|i| &inv[i][j] / &m).collect()
        })
        .collect();
    let mut scale = BigRational::one();
    for x in verts.iter().flatten() {
        let den = BigRational::from_integer(x.denom().clone());
        if !(&scale / &den).is_integer() {
            scale = &scale * &den;
        }
    }
    let to_int = |x: &BigRational| (x * &scale).to_integer().to_i64().expect("small entries");
    let mut out = vec![vec![0; n]];
    out.extend(verts.iter().map(|v| v.iter().map(to_int).collect::<Vec<_>>()));
    (to_int(&BigRational::one()), out)
}

/// Minimal words of the alcoves `w(C_1)` lying inside `2C_1`, found by a
/// gallery walk from `C_1` that never leaves `2C_1`.
pub fn alcoves_in_double_alcove(rs: &RootSystem) -> Vec<AffineWord> {
    let (scale, verts) = scaled_alcove_vertices(rs);
    let n = rs.rank();
    let inside = |w: &AffineWord| -> Option<Vec<Vec<i64>>> {
        let t = linalg::scale(scale, w.translation());
        let mut images: Vec<Vec<i64>> = verts.iter().map(|v| linalg::add(&w.linear_part().act_coroot(v), &t)).collect();
        let ok = images.iter().all(|x| {
            // α_i(x) = Σ_k a_ik x_k and θ(x) = Σ_i m_i α_i(x)
            let vals: Vec<i64> = (0..n).map(|i| linalg::dot(rs.cartan().row(i), x)).collect();
            vals.iter().all(|&v| v >= 0) && linalg::dot(rs.marks(), &vals) <= 2 * scale
        });
        images.sort();
        ok.then_some(images)
    };
    let start = AffineWord::identity(rs);
    let mut seen = HashSet::from([inside(&start).expect("C_1 lies in 2C_1")]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for i in 0..=n {
            let next = w.extended(rs, i).expect("generator index is in range");
            if let Some(key) = inside(&next) {
                if seen.insert(key) {
                    queue.push_back(next);
                }
            }
        }
        out.push(w);
    }
    out
}

/// The full set of ideals of one root system, with lookups by root set and by
/// weight.
#[derive(Debug, Clone)]
pub struct IdealCatalog {
    rs: RootSystem,
    ideals: Vec<IdealSet>,
    by_phi: HashMap<RootSet, usize>,
    by_weight: HashMap<Vec<i64>, usize>,
}

impl IdealCatalog {
    pub fn new(rs: RootSystem) -> Self {
        let ideals = enumerate_ideals(&rs);
        let by_phi = ideals.iter().enumerate().map(|(k, i)| (i.phi, k)).collect();
        let by_weight = ideals.iter().enumerate().map(|(k, i)| (i.weight_fw.clone(), k)).collect();
        IdealCatalog { rs, ideals, by_phi, by_weight }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn ideals(&self) -> &[IdealSet] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn get(&self, k: usize) -> &IdealSet {
        &self.ideals[k]
    }

    pub fn index_of_phi(&self, phi: RootSet) -> Option<usize> {
        self.by_phi.get(&phi).copied()
    }

    pub fn index_of_weight(&self, w: &[i64]) -> Option<usize> {
        self.by_weight.get(w).copied()
    }

    pub fn ideal_by_weight(&self, w: &[i64]) -> Option<&IdealSet> {
        self.index_of_weight(w).map(|k| &self.ideals[k])
    }

    /// Whether distinct ideals have distinct weights.
    pub fn weights_are_injective(&self) -> bool {
        self.by_weight.len() == self.ideals.len()
    }
}
