//! Finite irreducible root systems built from Bourbaki-numbered Cartan data.
//!
//! Roots are integer coordinate vectors over the simple roots. The Cartan
//! matrix follows the convention `a_ij = 2(α_i, α_j) / (α_j, α_j)`, so
//! `a_ij` is the pairing of `α_i` with the coroot `α_j^∨`. The invariant form
//! is normalized so that the highest root has `(θ, θ) = 2`.
//!
//! Node numbering (1-based in prose, 0-based in code):
//!
//! | type | diagram |
//! |------|---------|
//! | A_n  | 1 - 2 - ... - n |
//! | B_n  | 1 - ... - (n-1) => n, α_n short |
//! | C_n  | 1 - ... - (n-1) <= n, α_n long |
//! | D_n  | 1 - ... - (n-2) with both (n-1) and n attached to (n-2) |
//! | E_n  | 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4 |
//! | F_4  | 1 - 2 => 3 - 4, α_1, α_2 long |
//! | G_2  | 1 <= 2, α_1 short |

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bitset::{RootSet, MAX_ROOTS};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.letter() == c.to_ascii_uppercase())
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Family::from_letter(c).ok_or_else(|| format!("unknown family {s:?}")),
            _ => Err(format!("unknown family {s:?}")),
        }
    }
}

/// A valid (family, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        // 9 would already overflow the root bitset for E-like data; the
        // classical families stay under 128 positive roots up to rank 8.
        if !family.valid_rank(rank) || rank > 8 {
            return Err(Error::UnsupportedType { family: family.letter(), rank });
        }
        Ok(CartanType { family, rank })
    }

    /// Every irreducible type with `rank <= max_rank`, ordered by family then rank.
    pub fn sweep(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank.min(8) {
                if let Ok(t) = CartanType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let family: Family = s.get(..1).unwrap_or("").parse()?;
        let rank: usize = s[1..].parse().map_err(|_| format!("bad rank in {s:?}"))?;
        CartanType::new(family, rank).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

/// Cartan matrix together with its symmetrizing vector.
///
/// `symmetrizers[j]` is half the squared length of `α_j` in units where the
/// shortest simple root has `d = 1`; `a_ij * d_j` is then symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub family: Family,
    pub rank: usize,
    pub cartan: IntMatrix,
    pub symmetrizers: Vec<i64>,
}

impl CartanDatum {
    /// Validates the combinatorial shape of `cartan` and computes symmetrizers.
    /// Positive definiteness is checked by [`build_root_system`].
    pub fn new(family: Family, cartan: IntMatrix) -> Result<Self> {
        let n = cartan.dim();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for i in 0..n {
            if cartan.get(i, i) != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (cartan.get(i, j), cartan.get(j, i));
                if !(-3..=0).contains(&a) {
                    return Err(Error::InvalidCartan(format!("entry ({i},{j}) = {a}")));
                }
                if (a == 0) != (b == 0) {
                    return Err(Error::InvalidCartan(format!("zero pattern not symmetric at ({i},{j})")));
                }
            }
        }

        // Propagate d_j = d_i * a_ji / a_ij along the diagram as fractions.
        let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
        d[0] = Some((1, 1));
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            let (p, q) = d[i].unwrap();
            for j in 0..n {
                if j == i || cartan.get(i, j) == 0 || d[j].is_some() {
                    continue;
                }
                let (num, den) = ((p * cartan.get(j, i)).abs(), (q * cartan.get(i, j)).abs());
                let g = gcd(num, den);
                d[j] = Some((num / g, den / g));
                stack.push(j);
            }
        }
        if d.iter().any(Option::is_none) {
            return Err(Error::InvalidCartan("Dynkin diagram is disconnected".into()));
        }
        let den_lcm = d.iter().fold(1, |acc, x| lcm(acc, x.unwrap().1));
        let mut sym: Vec<i64> = d.iter().map(|x| x.unwrap().0 * den_lcm / x.unwrap().1).collect();
        let g = sym.iter().fold(0, |acc, &x| gcd(acc, x));
        for x in &mut sym {
            *x /= g;
        }
        if sym.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidCartan("not symmetrizable with positive factors".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if cartan.get(i, j) * sym[j] != cartan.get(j, i) * sym[i] {
                    return Err(Error::InvalidCartan("not symmetrizable".into()));
                }
            }
        }
        Ok(CartanDatum { family, rank: n, cartan, symmetrizers: sym })
    }

    /// The Bourbaki Cartan matrix of `ty`.
    pub fn bourbaki(ty: CartanType) -> Self {
        let n = ty.rank;
        let mut a = IntMatrix::identity(n);
        for i in 0..n {
            a.set(i, i, 2);
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a.set(i, j, aij);
            a.set(j, i, aji);
        };
        match ty.family {
            Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            Family::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -1, -3),
        }
        CartanDatum::new(ty.family, a).expect("Bourbaki data is valid")
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.cartan.get(i, j)
    }

    /// Unnormalized invariant form `Σ x_i a_ij d_j y_j`.
    fn raw_inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * self.cartan.get(i, j) * self.symmetrizers[j] * y[j];
            }
        }
        s
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RootVec {
    pub coeffs: Vec<i64>,
    pub length: LengthClass,
}

impl RootVec {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    roots: Vec<RootVec>,
    index: HashMap<Vec<i64>, usize>,
    theta: usize,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    h_dual: i64,
    d_max: i64,
    coroots: Vec<Vec<i64>>,
    fw: Vec<Vec<i64>>,
    above: Vec<RootSet>,
    sum_partners: Vec<RootSet>,
    affine_cartan: IntMatrix,
}

/// Positive roots of `datum`, in the order the closure discovers them when the
/// simple roots are tried in `order`.
pub fn generate_positive_roots(datum: &CartanDatum, order: &[usize]) -> Result<Vec<Vec<i64>>> {
    let n = datum.rank;
    let unit = |i: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Vec<i64>> = order.iter().map(|&i| unit(i)).collect();
    let mut seen: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
    let mut next = 0;
    while next < roots.len() {
        let beta = roots[next].clone();
        next += 1;
        for &i in order {
            // α_i-string through β: β - pα_i, ..., β + qα_i with p - q = <β, α_i^∨>.
            let mut p = 0;
            let mut probe = beta.clone();
            loop {
                probe[i] -= 1;
                if seen.contains_key(&probe) {
                    p += 1;
                } else {
                    break;
                }
            }
            let pairing: i64 = (0..n).map(|k| beta[k] * datum.entry(k, i)).sum();
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if !seen.contains_key(&up) {
                    if roots.len() >= MAX_ROOTS {
                        return Err(Error::InvalidCartan("root closure exceeds 128 positive roots".into()));
                    }
                    seen.insert(up.clone(), roots.len());
                    roots.push(up);
                }
            }
        }
    }
    Ok(roots)
}

/// Builds the positive system, highest root, marks, comarks and `h^∨`.
pub fn build_root_system(datum: CartanDatum) -> Result<RootSystem> {
    let n = datum.rank;
    let sym = IntMatrix::from_rows(
        &(0..n).map(|i| (0..n).map(|j| datum.entry(i, j) * datum.symmetrizers[j]).collect()).collect::<Vec<_>>(),
    );
    for k in 1..=n {
        let m = sym.leading_minor(k);
        if m <= 0 {
            return Err(Error::NotPositiveDefinite { minor: k, value: m });
        }
    }

    let order: Vec<usize> = (0..n).collect();
    let mut coeffs = generate_positive_roots(&datum, &order)?;
    // Height ascending, then lexicographically descending so α_1, .., α_n
    // occupy indices 0..n.
    coeffs.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    let d_max = *datum.symmetrizers.iter().max().unwrap();
    let roots: Vec<RootVec> = coeffs
        .iter()
        .map(|c| {
            let len2 = datum.raw_inner(c, c);
            RootVec {
                coeffs: c.clone(),
                length: if len2 == 2 * d_max { LengthClass::Long } else { LengthClass::Short },
            }
        })
        .collect();
    let index: HashMap<Vec<i64>, usize> = coeffs.iter().enumerate().map(|(k, c)| (c.clone(), k)).collect();

    let theta = roots.len() - 1;
    let marks = roots[theta].coeffs.clone();
    if roots.iter().any(|r| r.coeffs.iter().zip(&marks).any(|(a, m)| a > m)) {
        return Err(Error::Internal("highest root is not maximal".into()));
    }
    let mut comarks = Vec::with_capacity(n);
    for i in 0..n {
        let num = datum.symmetrizers[i] * marks[i];
        if num % d_max != 0 {
            return Err(Error::Internal("non-integral comark".into()));
        }
        comarks.push(num / d_max);
    }
    let h_dual = 1 + comarks.iter().sum::<i64>();

    let coroots = coeffs
        .iter()
        .map(|c| {
            let half_len = datum.raw_inner(c, c) / 2;
            (0..n)
                .map(|i| {
                    let x = c[i] * datum.symmetrizers[i];
                    debug_assert_eq!(x % half_len, 0);
                    x / half_len
                })
                .collect()
        })
        .collect();
    let fw = coeffs.iter().map(|c| (0..n).map(|j| (0..n).map(|i| c[i] * datum.entry(i, j)).sum()).collect()).collect();

    let m = roots.len();
    let mut above = vec![RootSet::EMPTY; m];
    let mut sum_partners = vec![RootSet::EMPTY; m];
    for i in 0..m {
        for j in 0..m {
            if coeffs[i].iter().zip(&coeffs[j]).all(|(a, b)| a <= b) {
                above[i].insert(j);
            }
            if index.contains_key(&linalg::add(&coeffs[i], &coeffs[j])) {
                sum_partners[i].insert(j);
            }
        }
    }

    let mut affine_cartan = IntMatrix::zeros(n + 1);
    affine_cartan.set(0, 0, 2);
    for i in 0..n {
        for j in 0..n {
            affine_cartan.set(i + 1, j + 1, datum.entry(i, j));
        }
        // a_0i = <-θ, α_i^∨>, a_i0 = <α_i, -θ^∨>
        affine_cartan.set(0, i + 1, -(0..n).map(|k| marks[k] * datum.entry(k, i)).sum::<i64>());
        affine_cartan.set(i + 1, 0, -(0..n).map(|k| comarks[k] * datum.entry(i, k)).sum::<i64>());
    }

    Ok(RootSystem {
        datum,
        roots,
        index,
        theta,
        marks,
        comarks,
        h_dual,
        d_max,
        coroots,
        fw,
        above,
        sum_partners,
        affine_cartan,
    })
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Self {
        build_root_system(CartanDatum::bourbaki(ty)).expect("Bourbaki data is positive definite")
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn cartan_type(&self) -> CartanType {
        CartanType { family: self.datum.family, rank: self.datum.rank }
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.datum.cartan
    }

    /// `Â`, indexed 0..=n with node 0 the affine node.
    pub fn affine_cartan(&self) -> &IntMatrix {
        &self.affine_cartan
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &RootVec {
        &self.roots[i]
    }

    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Index of the simple root `α_k` (0-based `k`).
    pub fn simple_root_index(&self, k: usize) -> usize {
        debug_assert_eq!(self.roots[k].coeffs.iter().sum::<i64>(), 1);
        k
    }

    pub fn theta(&self) -> &RootVec {
        &self.roots[self.theta]
    }

    pub fn theta_index(&self) -> usize {
        self.theta
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn h_dual(&self) -> i64 {
        self.h_dual
    }

    pub fn is_long_simple(&self, k: usize) -> bool {
        self.datum.symmetrizers[k] == self.d_max
    }

    /// Normalized invariant form, `(θ, θ) = 2`.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> BigRational {
        BigRational::new(BigInt::from(self.datum.raw_inner(x, y)), BigInt::from(self.d_max))
    }

    /// `<x, α_i^∨>` for a root-lattice vector `x`.
    pub fn pairing(&self, x: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|k| x[k] * self.datum.entry(k, i)).sum()
    }

    /// `<x, c>` for a root-lattice vector `x` and a coroot-lattice vector `c`.
    pub fn pair_with_coroot(&self, x: &[i64], c: &[i64]) -> i64 {
        (0..self.rank()).map(|i| c[i] * self.pairing(x, i)).sum()
    }

    /// `<x, θ^∨>`.
    pub fn pairing_theta(&self, x: &[i64]) -> i64 {
        self.pair_with_coroot(x, &self.comarks)
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn fw_of(&self, x: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|j| self.pairing(x, j)).collect()
    }

    pub fn fw_of_root(&self, i: usize) -> &[i64] {
        &self.fw[i]
    }

    /// Coroot-basis coordinates of `β^∨` for the positive root with index `i`.
    pub fn coroot_of_root(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    /// Indices `j` with `root_i <= root_j` in the root poset.
    pub fn above(&self, i: usize) -> RootSet {
        self.above[i]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// Indices `j` with `root_i + root_j` a root.
    pub fn sum_partners(&self, i: usize) -> RootSet {
        self.sum_partners[i]
    }

    pub fn root_sum(&self, x: usize, y: usize) -> Option<&RootVec> {
        self.sum_partners[x]
            .contains(y)
            .then(|| &self.roots[self.index[&linalg::add(&self.roots[x].coeffs, &self.roots[y].coeffs)]])
    }

    /// `<λ, θ^∨>` for a weight in fundamental-weight coordinates.
    pub fn weight_on_theta(&self, lam: &[i64]) -> i64 {
        linalg::dot(lam, &self.comarks)
    }

    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            schema: crate::SCHEMA,
            family: self.datum.family.letter().to_string(),
            rank: self.rank(),
            cartan: self.datum.cartan.rows(),
            roots: self.roots.iter().map(|r| r.coeffs.clone()).collect(),
            theta: self.theta().coeffs.clone(),
            marks: self.marks.clone(),
            comarks: self.comarks.clone(),
            h_dual: self.h_dual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub schema: &'static str,
    pub family: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    pub h_dual: i64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    /// Independent oracle: Δ is the orbit of Π under simple reflections.
    fn weyl_orbit_positive(rs: &RootSystem) -> BTreeSet<Vec<i64>> {
        let n = rs.rank();
        let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut stack: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|k| (k == i) as i64).collect()).collect();
        while let Some(v) = stack.pop() {
            if !all.insert(v.clone()) {
                continue;
            }
            for i in 0..n {
                let p: i64 = (0..n).map(|k| v[k] * rs.cartan().get(k, i)).sum();
                let mut w = v.clone();
                w[i] -= p;
                stack.push(w);
            }
        }
        all.into_iter().filter(|v| v.iter().all(|&c| c >= 0)).collect()
    }

    #[test]
    fn a2_by_hand() {
        let a2 = rs("A2");
        let coeffs: Vec<_> = a2.positive_roots().iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a2.theta().coeffs, vec![1, 1]);
        assert_eq!(a2.h_dual(), 3);
    }

    #[test]
    fn g2_and_c3_marks() {
        let g2 = rs("G2");
        assert_eq!(g2.num_positive(), 6);
        assert_eq!(g2.theta().coeffs, vec![3, 2]);
        assert_eq!(g2.marks(), &[3, 2]);
        assert_eq!(g2.comarks(), &[1, 2]);
        assert_eq!(g2.h_dual(), 4);
        let c3 = rs("C3");
        assert_eq!(c3.marks(), &[2, 2, 1]);
        assert_eq!(c3.h_dual(), 4);
    }

    #[test]
    fn closure_matches_weyl_orbit_everywhere() {
        for ty in CartanType::sweep(8) {
            let r = RootSystem::new(ty);
            let ours: BTreeSet<Vec<i64>> = r.positive_roots().iter().map(|x| x.coeffs.clone()).collect();
            assert_eq!(ours, weyl_orbit_positive(&r), "{ty}");
            assert_eq!(r.num_positive(), ty.positive_root_count(), "{ty}");
        }
    }

    #[test]
    fn dual_coxeter_numbers() {
        let expected = [
            ("A1", 2),
            ("A4", 5),
            ("B3", 5),
            ("B5", 9),
            ("C4", 5),
            ("D4", 6),
            ("D6", 10),
            ("E6", 12),
            ("E7", 18),
            ("E8", 30),
            ("F4", 9),
            ("G2", 4),
        ];
        for (t, h) in expected {
            assert_eq!(rs(t).h_dual(), h, "{t}");
        }
    }

    #[test]
    fn inner_products() {
        let a2 = rs("A2");
        let two = BigRational::from_integer(2.into());
        assert_eq!(a2.inner(&[1, 1], &[1, 1]), two);
        assert_eq!(a2.inner(&[1, 0], &[0, 1]), BigRational::from_integer((-1).into()));
        let b2 = rs("B2");
        assert_eq!(b2.inner(&[0, 1], &[0, 1]), BigRational::from_integer(1.into()));
        assert_eq!(b2.inner(b2.theta().coeffs.as_slice(), &b2.theta().coeffs), two);
        let g2 = rs("G2");
        assert_eq!(g2.inner(&[1, 0], &[1, 0]), BigRational::new(2.into(), 3.into()));
    }

    #[test]
    fn coroot_pairings_are_integral_and_theta_coroot_is_comarks() {
        for ty in CartanType::sweep(8) {
            let r = RootSystem::new(ty);
            assert_eq!(r.coroot_of_root(r.theta_index()), r.comarks(), "{ty}");
            for i in 0..r.num_positive() {
                // <β, β^∨> = 2
                assert_eq!(r.pair_with_coroot(&r.root(i).coeffs, r.coroot_of_root(i)), 2);
            }
        }
    }

    #[test]
    fn root_sums() {
        let a2 = rs("A2");
        assert_eq!(a2.root_sum(0, 1).unwrap().coeffs, vec![1, 1]);
        assert!(a2.root_sum(a2.theta_index(), 0).is_none());
        let f4 = rs("F4");
        let s = f4.root_sum(1, 2).unwrap();
        assert_eq!(s.coeffs, vec![0, 1, 1, 0]);
        assert!(f4.index_of(&[0, 1, 1, 0]).is_some());
    }

    #[test]
    fn two_rho_is_all_twos() {
        for ty in CartanType::sweep(8) {
            let r = RootSystem::new(ty);
            let mut sum = vec![0; r.rank()];
            for i in 0..r.num_positive() {
                sum = linalg::add(&sum, r.fw_of_root(i));
            }
            assert_eq!(sum, vec![2; r.rank()], "{ty}");
        }
    }

    #[test]
    fn generation_is_order_independent() {
        for ty in CartanType::sweep(6) {
            let d = CartanDatum::bourbaki(ty);
            let fwd: Vec<usize> = (0..ty.rank).collect();
            let rev: Vec<usize> = fwd.iter().rev().copied().collect();
            let mut a = generate_positive_roots(&d, &fwd).unwrap();
            let mut b = generate_positive_roots(&d, &rev).unwrap();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{ty}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        // affine A1
        let m = IntMatrix::from_rows(&[vec![2, -2], vec![-2, 2]]);
        let d = CartanDatum::new(Family::A, m).unwrap();
        assert!(matches!(build_root_system(d), Err(Error::NotPositiveDefinite { .. })));
        // non-symmetrizable cycle
        let m = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]]);
        assert!(CartanDatum::new(Family::A, m).is_err());
        let m = IntMatrix::from_rows(&[vec![2, -1], vec![0, 2]]);
        assert!(CartanDatum::new(Family::A, m).is_err());
        assert!(CartanType::new(Family::D, 3).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
    }

    #[test]
    fn long_short_classes() {
        let b3 = rs("B3");
        let short = b3.positive_roots().iter().filter(|r| r.length == LengthClass::Short).count();
        assert_eq!(short, 3);
        assert!(rs("E6").positive_roots().iter().all(|r| r.length == LengthClass::Long));
        assert!(!rs("G2").is_long_simple(0));
        assert!(rs("C3").is_long_simple(2));
    }
}
