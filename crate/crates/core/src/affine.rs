//! Affine Weyl group arithmetic: words over the generators `s_0, .., s_n`,
//! their action on affine roots and on weights, inversion sets, and the
//! splitting `w = t_τ v` into a translation by a coroot-lattice vector and a
//! finite Weyl group element.
//!
//! Generator indices use affine node numbering: `0` is `s_0 = t_{θ^∨} s_θ`
//! and `k >= 1` is the simple reflection `s_{α_k}` (so `α_k` has 0-based
//! root index `k - 1`).

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::rootsys::RootSystem;

/// The affine root `α + jδ`, i.e. the function `v ↦ α(v) + j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineRoot {
    pub finite: Vec<i64>,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(finite: Vec<i64>, level: i64) -> Self {
        AffineRoot { finite, level }
    }

    /// The simple affine root `α_i`, with `α_0 = δ - θ`.
    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        let n = rs.rank();
        if i == 0 {
            AffineRoot::new(linalg::scale(-1, rs.marks()), 1)
        } else {
            let mut v = vec![0; n];
            v[i - 1] = 1;
            AffineRoot::new(v, 0)
        }
    }

    /// `δ - β`.
    pub fn delta_minus(beta: &[i64]) -> Self {
        AffineRoot::new(linalg::scale(-1, beta), 1)
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.iter().all(|&c| c >= 0) && self.finite.iter().any(|&c| c > 0))
    }

    pub fn neg(&self) -> Self {
        AffineRoot::new(linalg::scale(-1, &self.finite), -self.level)
    }

    /// Index of `β ∈ Δ⁺` when `self = δ - β`.
    pub fn delta_minus_index(&self, rs: &RootSystem) -> Option<usize> {
        if self.level != 1 {
            return None;
        }
        rs.index_of(&linalg::scale(-1, &self.finite))
    }
}

/// Reflection in the simple affine root `α_i`.
pub fn reflect(rs: &RootSystem, i: usize, a: &AffineRoot) -> AffineRoot {
    if i == 0 {
        // s_0(β + jδ) = β - cθ + (j + c)δ with c = <β, θ^∨>
        let c = rs.pairing_theta(&a.finite);
        let finite = linalg::sub(&a.finite, &linalg::scale(c, rs.marks()));
        AffineRoot::new(finite, a.level + c)
    } else {
        let c = rs.pairing(&a.finite, i - 1);
        let mut finite = a.finite.clone();
        finite[i - 1] -= c;
        AffineRoot::new(finite, a.level)
    }
}

/// An element of the finite Weyl group, recorded through its action in three
/// bases: simple roots, simple coroots and fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWeyl {
    on_roots: IntMatrix,
    on_coroots: IntMatrix,
    on_weights: IntMatrix,
}

impl FiniteWeyl {
    pub fn identity(n: usize) -> Self {
        FiniteWeyl {
            on_roots: IntMatrix::identity(n),
            on_coroots: IntMatrix::identity(n),
            on_weights: IntMatrix::identity(n),
        }
    }

    /// Reflection `s_β` given `β` in root coordinates and `β^∨` in coroot
    /// coordinates.
    pub fn reflection(rs: &RootSystem, root: &[i64], coroot: &[i64]) -> Self {
        let n = rs.rank();
        let a = rs.cartan();
        let root_fw = rs.fw_of(root);
        let mut on_roots = IntMatrix::identity(n);
        let mut on_coroots = IntMatrix::identity(n);
        let mut on_weights = IntMatrix::identity(n);
        for j in 0..n {
            // <α_j, β^∨>
            let p: i64 = (0..n).map(|k| coroot[k] * a.get(j, k)).sum();
            // <β, α_j^∨>
            let q = rs.pairing(root, j);
            for i in 0..n {
                on_roots.set(i, j, on_roots.get(i, j) - p * root[i]);
                on_coroots.set(i, j, on_coroots.get(i, j) - q * coroot[i]);
                on_weights.set(i, j, on_weights.get(i, j) - coroot[j] * root_fw[i]);
            }
        }
        FiniteWeyl { on_roots, on_coroots, on_weights }
    }

    /// Simple reflection `s_{α_k}`, 0-based `k`.
    pub fn simple(rs: &RootSystem, k: usize) -> Self {
        let mut e = vec![0; rs.rank()];
        e[k] = 1;
        Self::reflection(rs, &e, &e)
    }

    pub fn theta_reflection(rs: &RootSystem) -> Self {
        Self::reflection(rs, rs.marks(), rs.comarks())
    }

    /// Linear part of the affine generator `s_i`.
    pub fn generator(rs: &RootSystem, i: usize) -> Self {
        if i == 0 {
            Self::theta_reflection(rs)
        } else {
            Self::simple(rs, i - 1)
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FiniteWeyl) -> FiniteWeyl {
        FiniteWeyl {
            on_roots: self.on_roots.mul(&other.on_roots),
            on_coroots: self.on_coroots.mul(&other.on_coroots),
            on_weights: self.on_weights.mul(&other.on_weights),
        }
    }

    pub fn act_root(&self, x: &[i64]) -> Vec<i64> {
        self.on_roots.apply(x)
    }

    pub fn act_coroot(&self, x: &[i64]) -> Vec<i64> {
        self.on_coroots.apply(x)
    }

    pub fn act_weight(&self, x: &[i64]) -> Vec<i64> {
        self.on_weights.apply(x)
    }

    pub fn on_roots(&self) -> &IntMatrix {
        &self.on_roots
    }

    pub fn on_coroots(&self) -> &IntMatrix {
        &self.on_coroots
    }

    pub fn on_weights(&self) -> &IntMatrix {
        &self.on_weights
    }

    /// Images of the simple roots, one per column.
    pub fn simple_root_images(&self) -> Vec<Vec<i64>> {
        (0..self.on_roots.dim()).map(|j| self.on_roots.column(j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.on_roots.is_identity()
    }

    /// Longest element of the parabolic subgroup generated by the simple
    /// reflections `s_{α_k}` with `k` not in `excluded` (0-based). Returns the
    /// element and its length.
    pub fn longest(rs: &RootSystem, excluded: &[usize]) -> (FiniteWeyl, usize) {
        let n = rs.rank();
        let support: Vec<usize> = (0..n).filter(|k| !excluded.contains(k)).collect();
        let mut lam: Vec<i64> = (0..n).map(|k| support.contains(&k) as i64).collect();
        let mut w = FiniteWeyl::identity(n);
        let mut len = 0;
        while let Some(&k) = support.iter().find(|&&k| lam[k] > 0) {
            let s = FiniteWeyl::simple(rs, k);
            lam = s.act_weight(&lam);
            w = s.compose(&w);
            len += 1;
        }
        (w, len)
    }
}

/// A word in the affine generators with its derived data computed up front.
#[derive(Debug, Clone)]
pub struct AffineWord {
    letters: Vec<usize>,
    inversions: std::result::Result<Vec<AffineRoot>, usize>,
    linear: FiniteWeyl,
    linear_inv: FiniteWeyl,
    translation: Vec<i64>,
}

impl PartialEq for AffineWord {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for AffineWord {}

impl AffineWord {
    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.rank();
        AffineWord {
            letters: Vec::new(),
            inversions: Ok(Vec::new()),
            linear: FiniteWeyl::identity(n),
            linear_inv: FiniteWeyl::identity(n),
            translation: vec![0; n],
        }
    }

    pub fn new(rs: &RootSystem, letters: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs);
        for &i in letters {
            w = w.extended(rs, i)?;
        }
        Ok(w)
    }

    /// The word `self · s_i`.
    pub fn extended(&self, rs: &RootSystem, i: usize) -> Result<Self> {
        let n = rs.rank();
        if i > n {
            return Err(Error::GeneratorOutOfRange { index: i, rank: n });
        }
        let inversions = match &self.inversions {
            Ok(prev) => {
                let new = self.act(rs, &AffineRoot::simple(rs, i));
                if new.is_positive() && !prev.contains(&new) {
                    let mut v = prev.clone();
                    v.push(new);
                    Ok(v)
                } else {
                    Err(self.letters.len())
                }
            }
            Err(p) => Err(*p),
        };
        let g = FiniteWeyl::generator(rs, i);
        let linear = self.linear.compose(&g);
        let linear_inv = g.compose(&self.linear_inv);
        // (L, τ) ∘ (g, t) = (L g, L t + τ), with t = θ^∨ for s_0.
        let translation = if i == 0 {
            linalg::add(&self.linear.act_coroot(rs.comarks()), &self.translation)
        } else {
            self.translation.clone()
        };
        let mut letters = self.letters.clone();
        letters.push(i);
        Ok(AffineWord { letters, inversions, linear, linear_inv, translation })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.inversions.is_ok()
    }

    pub fn linear_part(&self) -> &FiniteWeyl {
        &self.linear
    }

    pub fn linear_part_inverse(&self) -> &FiniteWeyl {
        &self.linear_inv
    }

    /// `τ` in simple-coroot coordinates.
    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    /// `w(a)` through the split form: `w(β + jδ) = vβ + (j - <vβ, τ>)δ`.
    pub fn act(&self, rs: &RootSystem, a: &AffineRoot) -> AffineRoot {
        let finite = self.linear.act_root(&a.finite);
        let level = a.level - rs.pair_with_coroot(&finite, &self.translation);
        AffineRoot::new(finite, level)
    }

    /// `w(x) = v(x) + τ` for `x` in coroot coordinates.
    pub fn act_point(&self, x: &[i64]) -> Vec<i64> {
        linalg::add(&self.linear.act_coroot(x), &self.translation)
    }

    pub fn inversion_set(&self) -> Result<&[AffineRoot]> {
        match &self.inversions {
            Ok(v) => Ok(v),
            Err(p) => Err(Error::NonReduced { word: self.letters.clone(), position: *p }),
        }
    }
}

impl Serialize for AffineWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

/// Applies the generators of `w` one reflection at a time, rightmost first.
pub fn act_on_affine_root(rs: &RootSystem, w: &AffineWord, a: &AffineRoot) -> AffineRoot {
    w.letters().iter().rev().fold(a.clone(), |acc, &i| reflect(rs, i, &acc))
}

/// `N(w) = {α_{i_1}, s_{i_1}(α_{i_2}), ..}` for a reduced word.
pub fn inversion_set(rs: &RootSystem, w: &AffineWord) -> Result<Vec<AffineRoot>> {
    let mut out: Vec<AffineRoot> = Vec::with_capacity(w.len());
    let mut seen = HashSet::new();
    for (k, &i) in w.letters().iter().enumerate() {
        let prefix = &w.letters()[..k];
        let img = prefix.iter().rev().fold(AffineRoot::simple(rs, i), |acc, &j| reflect(rs, j, &acc));
        if !img.is_positive() || !seen.insert(img.clone()) {
            return Err(Error::NonReduced { word: w.letters().to_vec(), position: k });
        }
        out.push(img);
    }
    Ok(out)
}

/// `w = t_τ v`: returns `τ` (coroot coordinates) and `v`.
pub fn decompose(w: &AffineWord) -> (Vec<i64>, FiniteWeyl) {
    (w.translation().to_vec(), w.linear_part().clone())
}

/// `η = v^{-1}(τ)` for a minuscule word, checked against the admissible
/// pairing range `{-2, -1, 0, 1}` on `Δ⁺`.
pub fn eta(rs: &RootSystem, w: &AffineWord) -> Result<Vec<i64>> {
    let eta = w.linear_part_inverse().act_coroot(w.translation());
    for (k, r) in rs.positive_roots().iter().enumerate() {
        let value = rs.pair_with_coroot(&r.coeffs, &eta);
        if !(-2..=1).contains(&value) {
            return Err(Error::RangeViolation { root: k, value });
        }
    }
    Ok(eta)
}

/// Level-`h^∨` action on weights in fundamental-weight coordinates:
/// `s_0(λ) = λ - (<λ, θ^∨> - h^∨)θ` and `s_i(λ) = λ - <λ, α_i^∨>α_i`.
pub fn affine_act_on_weight(rs: &RootSystem, w: &AffineWord, lam: &[i64]) -> Vec<i64> {
    let theta_fw = rs.fw_of(rs.marks());
    w.letters().iter().rev().fold(lam.to_vec(), |acc, &i| {
        if i == 0 {
            let c = rs.weight_on_theta(&acc) - rs.h_dual();
            linalg::sub(&acc, &linalg::scale(c, &theta_fw))
        } else {
            let c = acc[i - 1];
            let alpha_fw = rs.fw_of(&rs.root(i - 1).coeffs);
            linalg::sub(&acc, &linalg::scale(c, &alpha_fw))
        }
    })
}

/// Coxeter exponent `m_ij` of the affine diagram; `None` for an infinite bond.
pub fn coxeter_exponent(rs: &RootSystem, i: usize, j: usize) -> Option<u32> {
    if i == j {
        return Some(1);
    }
    let a = rs.affine_cartan();
    match a.get(i, j) * a.get(j, i) {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}
