//! Type `A_{n-1}`: abelian ideals are the Young diagrams that fit inside the
//! staircase `(n-1, n-2, …, 1)`. The flip `τ` (conjugation) and the
//! sliding move `σ_n` generate a dihedral group of order `2n` acting on them.
//!
//! Row `h` of a diagram holds the roots `ε_{n-h+1} - ε_j` for `j ≤ λ_h`,
//! with `α_i = ε_{i+1} - ε_i`. In simple-root coordinates that root is
//! `α_j + … + α_{n-h}`, so a row is identified by where its support ends.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::abelian::IdealCatalog;
use crate::bitset::RootSet;
use crate::dynkin::{center_permutation, diagram_permutation, CenterElement, DiagramAut};
use crate::error::{Error, Result};
use crate::perm::{NodePermutation, PermGroup};
use crate::report::ReportRow;
use crate::rootsys::{CartanType, Family, RootSystem};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows `m`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the first row, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_1 + m ≤ n`.
    pub fn fits(&self, n: usize) -> bool {
        self.first() + self.len() <= n
    }

    pub fn check_fits(&self, n: usize) -> Result<()> {
        if self.fits(n) {
            Ok(())
        } else {
            Err(Error::OutOfStaircase { parts: self.0.clone(), n })
        }
    }

    pub fn conjugate(&self) -> Partition {
        Partition((1..=self.first()).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string and `()` give the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::NotPartition(Vec::new()))?;
        Partition::new(parts)
    }
}

/// All partitions fitting in the staircase of size `n`, by size and then
/// reverse lexicographically.
pub fn staircase_partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        let first = cur.first().copied().unwrap_or(0);
        for p in (1..=max).rev() {
            let first = if cur.is_empty() { p } else { first };
            if first + cur.len() < n {
                cur.push(p);
                go(n, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n.saturating_sub(1), &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
    out
}

/// `n` for a root system of type `A_{n-1}`.
fn staircase_size(rs: &RootSystem) -> Result<usize> {
    let ty = rs.cartan_type();
    if ty.family != Family::A {
        return Err(Error::NotTypeA(ty));
    }
    Ok(ty.rank + 1)
}

/// Simple-root support `[a, b]` of a type-A root, 1-based.
fn support(coeffs: &[i64]) -> (usize, usize) {
    let a = coeffs.iter().position(|&c| c != 0).expect("roots are nonzero");
    let b = coeffs.iter().rposition(|&c| c != 0).expect("roots are nonzero");
    (a + 1, b + 1)
}

pub fn partition_of_ideal(rs: &RootSystem, phi: RootSet) -> Result<Partition> {
    let n = staircase_size(rs)?;
    let mut rows = vec![0usize; n];
    for k in phi.iter() {
        let (_, b) = support(&rs.root(k).coeffs);
        rows[n - b] += 1;
    }
    let lam = Partition::new(rows[1..].to_vec())?;
    lam.check_fits(n)?;
    if ideal_of_partition(rs, &lam)? != phi {
        return Err(Error::NotAbelianIdeal);
    }
    Ok(lam)
}

pub fn ideal_of_partition(rs: &RootSystem, lam: &Partition) -> Result<RootSet> {
    let n = staircase_size(rs)?;
    lam.check_fits(n)?;
    let mut phi = RootSet::default();
    for (h, &len) in lam.parts().iter().enumerate() {
        let b = n - (h + 1);
        for a in 1..=len {
            let coeffs: Vec<i64> = (1..n).map(|t| i64::from(a <= t && t <= b)).collect();
            let k = rs.index_of(&coeffs).ok_or_else(|| Error::Internal(format!("{coeffs:?} is not a root")))?;
            phi.insert(k);
        }
    }
    Ok(phi)
}

/// `Σ λ_i ε_{n-i+1} - Σ λ'_i ε_i`, in coordinates `x_1, …, x_n`.
pub fn weight_epsilon(n: usize, lam: &Partition) -> Vec<i64> {
    let mut x = vec![0i64; n];
    for (i, &p) in lam.parts().iter().enumerate() {
        x[n - 1 - i] += p as i64;
    }
    for (i, &p) in lam.conjugate().parts().iter().enumerate() {
        x[i] -= p as i64;
    }
    x
}

/// Fundamental-weight coordinates of an ε-vector: `⟨x, α_t^∨⟩ = x_{t+1} - x_t`.
pub fn epsilon_to_fw(x: &[i64]) -> Vec<i64> {
    x.windows(2).map(|w| w[1] - w[0]).collect()
}

/// The flip along the anti-diagonal, which on diagrams is conjugation.
pub fn tau(lam: &Partition) -> Partition {
    lam.conjugate()
}

/// The sliding move `(λ_2+1, …, λ_m+1, 1, …, 1)`. The trailing ones fill
/// positions up to `n - m + 1` but never beyond `n`, so the empty diagram
/// goes to a column of `n - 1` boxes.
pub fn sigma(n: usize, lam: &Partition) -> Result<Partition> {
    lam.check_fits(n)?;
    let (m, l1) = (lam.len(), lam.first());
    let mut parts: Vec<usize> = lam.parts().iter().skip(1).map(|p| p + 1).collect();
    let ones = ((n - m + 1).min(n) + 1).saturating_sub(l1 + 2);
    parts.extend(std::iter::repeat_n(1, ones));
    Partition::new(parts)
}

/// The same move read on columns: with `μ = λ^t`, the result has columns
/// `ν_1 = n - λ_1 - 1` and `ν_i = μ_{i-1} - 1`.
pub fn sigma_sliding(n: usize, lam: &Partition) -> Result<Partition> {
    lam.check_fits(n)?;
    let mu = lam.conjugate();
    let mut nu = vec![n - lam.first() - 1];
    nu.extend(mu.parts().iter().map(|&c| c - 1));
    nu.retain(|&c| c > 0);
    Ok(Partition::new(nu)?.conjugate())
}

/// `λ, σ_n(λ), σ_n²(λ), …` up to the first repeat.
pub fn sigma_orbit(n: usize, lam: &Partition) -> Result<Vec<Partition>> {
    let mut orbit = vec![lam.clone()];
    loop {
        let next = sigma(n, orbit.last().expect("nonempty"))?;
        if next == *lam {
            return Ok(orbit);
        }
        if orbit.len() > n {
            return Err(Error::Internal(format!("σ_{n} orbit of {lam} does not close")));
        }
        orbit.push(next);
    }
}

/// The ideal catalog of `A_{n-1}` together with the partition of each ideal.
#[derive(Clone, Debug)]
pub struct YoungLattice {
    n: usize,
    catalog: IdealCatalog,
    partitions: Vec<Partition>,
}

impl YoungLattice {
    /// Requires `n ≥ 2`.
    pub fn new(n: usize) -> Result<Self> {
        let ty = CartanType::new(Family::A, n.saturating_sub(1))?;
        let catalog = IdealCatalog::new(RootSystem::new(ty));
        let partitions = catalog
            .ideals()
            .iter()
            .map(|i| partition_of_ideal(catalog.root_system(), i.phi))
            .collect::<Result<Vec<_>>>()?;
        Ok(YoungLattice { n, catalog, partitions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn catalog(&self) -> &IdealCatalog {
        &self.catalog
    }

    pub fn partition(&self, k: usize) -> &Partition {
        &self.partitions[k]
    }

    pub fn index_of(&self, lam: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lam)
    }

    /// A map on partitions as a permutation of the ideal catalog.
    pub fn permutation(&self, f: impl Fn(&Partition) -> Result<Partition>) -> Result<NodePermutation> {
        let images = self
            .partitions
            .iter()
            .map(|p| {
                let q = f(p)?;
                self.index_of(&q).ok_or(Error::OutOfStaircase { parts: q.0, n: self.n })
            })
            .collect::<Result<Vec<_>>>()?;
        NodePermutation::new(images).ok_or_else(|| Error::Internal("map is not a bijection".into()))
    }

    pub fn tau_permutation(&self) -> NodePermutation {
        self.permutation(|p| Ok(tau(p))).expect("conjugation preserves the staircase")
    }

    pub fn sigma_permutation(&self) -> Result<NodePermutation> {
        self.permutation(|p| sigma(self.n, p))
    }

    /// `-w_0` acting on ideals: the diagram flip `k ↦ n - k` on simple nodes.
    pub fn flip_action(&self) -> Result<NodePermutation> {
        let rs = self.catalog.root_system();
        let perm = (0..self.n).map(|k| if k == 0 { 0 } else { self.n - k }).collect();
        diagram_permutation(&self.catalog, &DiagramAut::new(rs, perm)?)
    }

    /// `t_{ϖ_1} w_0^1 w_0` acting on ideals.
    pub fn xi_action(&self) -> Result<NodePermutation> {
        center_permutation(&self.catalog, CenterElement { index: Some(1) })
    }
}

fn row<T: Serialize + PartialEq>(n: usize, what: &str, expected: T, computed: T) -> ReportRow {
    ReportRow::compare(format!("Y{n} {what}"), expected, computed)
}

/// Checks the dihedral symmetry of the staircase diagrams of size
/// `n ≥ 3` and its identification with the action of `Aut(Π̂)` on ideals.
pub fn verify_dihedral(n: usize) -> Vec<ReportRow> {
    let yl = match YoungLattice::new(n) {
        Ok(yl) => yl,
        Err(e) => return vec![row(n, "ideal/partition bijection", "ok".to_string(), e.to_string())],
    };
    let rs = yl.catalog.root_system();
    let mut rows = Vec::new();

    let mut listed = staircase_partitions(n);
    let mut realized = yl.partitions.clone();
    listed.sort();
    realized.sort();
    rows.push(row(n, "ideals ↔ staircase diagrams", listed, realized));
    let roundtrip =
        yl.partitions.iter().enumerate().all(|(k, p)| ideal_of_partition(rs, p).ok() == Some(yl.catalog.get(k).phi));
    rows.push(ReportRow::holds(format!("Y{n} partition → ideal → partition"), roundtrip));
    let weights_ok = yl
        .partitions
        .iter()
        .enumerate()
        .all(|(k, p)| epsilon_to_fw(&weight_epsilon(n, p)) == yl.catalog.get(k).weight_fw);
    rows.push(ReportRow::holds(format!("Y{n} weight from the diagram"), weights_ok));

    let agree: Vec<String> =
        yl.partitions.iter().filter(|p| sigma(n, p).ok() != sigma_sliding(n, p).ok()).map(|p| p.to_string()).collect();
    rows.push(row(n, "σ by rows disagrees with σ by columns on", Vec::<String>::new(), agree));

    let t = yl.tau_permutation();
    let s = match yl.sigma_permutation() {
        Ok(s) => s,
        Err(e) => {
            rows.push(row(n, "σ preserves the staircase", "ok".to_string(), e.to_string()));
            return rows;
        }
    };
    match yl.flip_action() {
        Ok(f) => rows.push(row(n, "τ equals -w_0 on ideals", f.images(), t.images())),
        Err(e) => rows.push(row(n, "τ equals -w_0 on ideals", "ok".to_string(), e.to_string())),
    }
    match yl.xi_action() {
        Ok(x) => rows.push(row(n, "σ equals t_ϖ1 w_0^1 w_0 on ideals", x.images(), s.images())),
        Err(e) => rows.push(row(n, "σ equals t_ϖ1 w_0^1 w_0 on ideals", "ok".to_string(), e.to_string())),
    }

    let id = NodePermutation::identity(yl.catalog.len());
    rows.push(row(n, "order of τ", 2, t.order()));
    rows.push(row(n, "order of σ", n, s.order()));
    rows.push(ReportRow::holds(format!("Y{n} τστσ = id"), t.compose(&s).compose(&t).compose(&s) == id));
    let group = PermGroup::generate(yl.catalog.len(), &[t.clone(), s.clone()]);
    rows.push(row(n, "order of ⟨τ, σ⟩", 2 * n, group.order()));
    // With the relations above, order 2n means the dihedral group embeds.
    let reflection_outside_rotations = (0..n).all(|k| {
        let sk = (0..k).fold(id.clone(), |acc, _| acc.compose(&s));
        sk != t
    });
    rows.push(ReportRow::holds(format!("Y{n} τ is not a power of σ"), reflection_outside_rotations));
    rows
}
