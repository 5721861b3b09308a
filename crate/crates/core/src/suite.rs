//! Verification suites over a sweep of Cartan types. Each suite returns a
//! [`Report`] with rows in sweep order, family by family.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::abelian::{
    alcoves_in_double_alcove, all_antichains, enumerate_by_antichains, enumerate_by_filter, eta_vectors,
    from_antichain, is_regular_weight, rho_point, rho_points_in_double_alcove, IdealCatalog,
};
use crate::bitset::RootSet;
use crate::dynkin::{
    verify_center, verify_diagram_groups, verify_hasse_symmetry, verify_poset_symmetry, verify_semidirect,
};
use crate::poset::{build_hasse, commutation_class, degree_of_node, forbidden_braid, letter_multiset, LabeledHasse};
use crate::report::{Report, ReportRow};
use crate::rootsys::{CartanType, Family, RootSystem};
use crate::young::verify_dihedral;

/// Default largest rank in a sweep.
pub const DEFAULT_MAX_RANK: usize = 7;

/// Environment variable overriding [`DEFAULT_MAX_RANK`].
pub const MAX_RANK_ENV: &str = "ABID_MAX_RANK";

/// Largest rank for which every reduced word is listed.
pub const REDUCED_WORDS_MAX_RANK: usize = 4;

/// Largest rank for the degree formula and the centre checks.
pub const EDGES_MAX_RANK: usize = 6;

/// Staircase sizes checked by the Young suite.
pub const YOUNG_RANGE: std::ops::RangeInclusive<usize> = 3..=8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Encodings,
    PosetSymmetry,
    Hasse,
    Words,
    Edges,
    Center,
    Young,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] =
        [Suite::Encodings, Suite::PosetSymmetry, Suite::Hasse, Suite::Words, Suite::Edges, Suite::Center, Suite::Young];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Encodings => "encodings",
            Suite::PosetSymmetry => "theorem-t",
            Suite::Hasse => "hasse",
            Suite::Words => "words",
            Suite::Edges => "edges",
            Suite::Center => "center",
            Suite::Young => "young",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// `ABID_MAX_RANK` if set and parseable, else [`DEFAULT_MAX_RANK`].
pub fn max_rank_from_env() -> usize {
    std::env::var(MAX_RANK_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_RANK)
}

/// Types of rank at most `max_rank`, plus `E_8` when `with_e8` is set.
pub fn sweep(max_rank: usize, with_e8: bool) -> Vec<CartanType> {
    let mut types = CartanType::sweep(max_rank);
    let e8 = CartanType::new(Family::E, 8).expect("E8 is valid");
    if with_e8 && !types.contains(&e8) {
        types.push(e8);
    }
    types.sort();
    types
}

/// Ideal catalog and Hasse diagram of one type, built once and shared by the
/// suites.
pub struct Case {
    pub catalog: IdealCatalog,
    pub hasse: LabeledHasse,
}

impl Case {
    pub fn new(ty: CartanType) -> Self {
        let catalog = IdealCatalog::new(RootSystem::new(ty));
        let hasse = build_hasse(&catalog);
        Case { catalog, hasse }
    }

    fn name(&self) -> String {
        self.catalog.root_system().cartan_type().to_string()
    }
}

fn row<T: serde::Serialize + PartialEq>(case: &Case, what: &str, expected: T, computed: T) -> ReportRow {
    ReportRow::compare(format!("{} {what}", case.name()), expected, computed)
}

fn holds(case: &Case, what: &str, ok: bool) -> ReportRow {
    ReportRow::holds(format!("{} {what}", case.name()), ok)
}

/// Ideal counts from two engines, and the equal cardinalities and cross-maps
/// of the encodings: root sets, minuscule words, alcoves in `2C_1`,
/// `ρ`-points, weights, `η` vectors and antichains.
pub fn encoding_rows(case: &Case) -> Vec<ReportRow> {
    let cat = &case.catalog;
    let rs = cat.root_system();
    let n = 1usize << rs.rank();
    let phis: BTreeSet<RootSet> = cat.ideals().iter().map(|i| i.phi).collect();
    let mut rows = Vec::new();

    let by_antichain: BTreeSet<RootSet> = enumerate_by_antichains(rs).into_iter().collect();
    rows.push(row(
        case,
        "ideal count by weak-order walk, by antichains",
        vec![n, n],
        vec![cat.len(), by_antichain.len()],
    ));
    rows.push(holds(case, "both engines find the same root sets", by_antichain == phis));
    if rs.rank() <= 6 {
        let filtered: BTreeSet<RootSet> = enumerate_by_filter(rs).into_iter().collect();
        rows.push(holds(case, "upward closures that are abelian give the same root sets", filtered == phis));
    }

    // minuscule words: N(w) = δ - Φ, words distinct
    let words_ok = cat.ideals().iter().all(|i| {
        i.word
            .inversion_set()
            .ok()
            .and_then(|inv| inv.iter().map(|a| a.delta_minus_index(rs)).collect::<Option<RootSet>>())
            == Some(i.phi)
    });
    let words: HashSet<&[usize]> = cat.ideals().iter().map(|i| i.word.letters()).collect();
    rows.push(row(case, "distinct minuscule words", n, words.len()));
    rows.push(holds(case, "inversion set of each word is δ - Φ", words_ok));

    let alcoves: HashSet<Option<RootSet>> = alcoves_in_double_alcove(rs)
        .iter()
        .map(|w| w.inversion_set().ok().and_then(|inv| inv.iter().map(|a| a.delta_minus_index(rs)).collect()))
        .collect();
    let alcove_phis: BTreeSet<RootSet> = alcoves.iter().flatten().copied().collect();
    rows.push(row(case, "alcoves in 2C1", n, alcoves.len()));
    rows.push(holds(case, "alcoves in 2C1 are the minuscule alcoves", alcove_phis == phis));

    let weights: HashSet<&[i64]> = cat.ideals().iter().map(|i| i.weight_fw.as_slice()).collect();
    rows.push(row(case, "distinct weights", n, weights.len()));

    let rho: Result<Vec<Vec<i64>>, _> = cat.ideals().iter().map(|i| rho_point(rs, i)).collect();
    match rho {
        Ok(points) => {
            rows.push(holds(case, "w(ρ) = ρ + weight for every ideal", true));
            let set: HashSet<Vec<i64>> = points.iter().cloned().collect();
            let searched: HashSet<Vec<i64>> = rho_points_in_double_alcove(rs).into_iter().collect();
            rows.push(row(case, "distinct ρ-points", n, set.len()));
            rows.push(holds(case, "ρ-points are regular", points.iter().all(|p| is_regular_weight(rs, p))));
            rows.push(holds(case, "ρ-points are the regular weights in 2C1", set == searched));
        }
        Err(e) => rows.push(row(case, "w(ρ) = ρ + weight for every ideal", "ok".to_string(), e.to_string())),
    }

    let etas: Result<HashSet<Vec<i64>>, _> = cat.ideals().iter().map(|i| i.eta(rs)).collect();
    match etas {
        Ok(etas) => {
            let searched: HashSet<Vec<i64>> = eta_vectors(rs).into_iter().collect();
            rows.push(row(case, "distinct η vectors", n, etas.len()));
            rows.push(holds(case, "η vectors are the coweights with values in {-2,-1,0,1}", etas == searched));
        }
        Err(e) => rows.push(row(case, "η of every ideal", "ok".to_string(), e.to_string())),
    }

    let accepted: BTreeSet<RootSet> =
        all_antichains(rs).iter().filter_map(|a| from_antichain(rs, a).ok()).map(|i| i.phi).collect();
    let minimal: HashSet<&[usize]> = cat.ideals().iter().map(|i| i.antichain.as_slice()).collect();
    rows.push(row(case, "accepted antichains", n, accepted.len()));
    rows.push(holds(case, "accepted antichains generate exactly the ideals", accepted == phis && minimal.len() == n));
    rows
}

/// Canonical words avoid `s_a s_b s_a` unless `α_a` is long and `α_b`
/// short. Up to [`REDUCED_WORDS_MAX_RANK`], the reduced words read off the
/// Hasse diagram are exactly the commutation class of the canonical word,
/// and all of them avoid the pattern and share one letter multiset.
pub fn word_rows(case: &Case) -> Vec<ReportRow> {
    let rs = case.catalog.root_system();
    let h = &case.hasse;
    let bad: Vec<Vec<usize>> =
        (0..h.len()).map(|v| h.word(v)).filter(|w| forbidden_braid(rs, w).is_some()).map(|w| w.to_vec()).collect();
    let mut rows = vec![row(case, "canonical words with a forbidden braid", Vec::<Vec<usize>>::new(), bad)];
    if rs.rank() <= REDUCED_WORDS_MAX_RANK {
        let mut same_class = true;
        let mut braid_free = true;
        let mut one_multiset = true;
        for v in 0..h.len() {
            let from_hasse: HashSet<Vec<usize>> = h.reduced_words(v).into_iter().collect();
            same_class &= from_hasse == commutation_class(rs, h.word(v));
            braid_free &= from_hasse.iter().all(|w| forbidden_braid(rs, w).is_none());
            let m = letter_multiset(h.word(v));
            one_multiset &= from_hasse.iter().all(|w| letter_multiset(w) == m);
        }
        rows.push(holds(case, "reduced words form one commutation class", same_class));
        rows.push(holds(case, "no reduced word has a forbidden braid", braid_free));
        rows.push(holds(case, "reduced words share their letters", one_multiset));
    }
    rows
}

/// The degree predicted from `w(α) ∈ ±(δ - Δ⁺)` equals the Hasse degree.
pub fn edge_rows(case: &Case) -> Vec<ReportRow> {
    let h = &case.hasse;
    let mismatched: Vec<usize> = (0..h.len()).filter(|&v| degree_of_node(&case.catalog, v) != h.degree(v)).collect();
    vec![row(case, "nodes whose degree differs from the formula", Vec::<usize>::new(), mismatched)]
}

/// Rows of one suite for one type. `Young` and `All` contribute no per-type
/// rows here.
pub fn rows_for(suite: Suite, case: &Case) -> Vec<ReportRow> {
    let rank = case.catalog.root_system().rank();
    match suite {
        Suite::Encodings => encoding_rows(case),
        Suite::PosetSymmetry => verify_poset_symmetry(&case.catalog, &case.hasse),
        Suite::Hasse => verify_hasse_symmetry(&case.catalog, &case.hasse),
        Suite::Words => word_rows(case),
        Suite::Edges if rank <= EDGES_MAX_RANK => edge_rows(case),
        Suite::Center if rank <= EDGES_MAX_RANK => {
            let mut rows = verify_diagram_groups(case.catalog.root_system());
            rows.extend(verify_center(&case.catalog));
            rows.extend(verify_semidirect(&case.catalog));
            rows
        }
        _ => Vec::new(),
    }
}

/// Whether a suite sweeps `E_8` in addition to ranks up to the maximum.
fn includes_e8(suite: Suite) -> bool {
    matches!(suite, Suite::Encodings | Suite::PosetSymmetry | Suite::Hasse | Suite::Words | Suite::All)
}

/// Runs `suite` over every type of rank at most `max_rank` (and `E_8` where
/// the suite calls for it).
pub fn run(suite: Suite, max_rank: usize) -> Report {
    let mut report = Report::new(suite.name());
    let selected: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let typed: Vec<Suite> = selected.iter().copied().filter(|&s| s != Suite::Young).collect();
    if !typed.is_empty() {
        for ty in sweep(max_rank, typed.iter().any(|&s| includes_e8(s))) {
            let case = Case::new(ty);
            for &s in &typed {
                if ty.rank <= max_rank || includes_e8(s) {
                    report.extend(rows_for(s, &case));
                }
            }
        }
    }
    if selected.contains(&Suite::Young) {
        for n in YOUNG_RANGE {
            report.extend(verify_dihedral(n));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn sweep_adds_e8_once() {
        let small = sweep(2, true);
        assert_eq!(small.iter().map(|t| t.to_string()).collect::<Vec<_>>(), ["A1", "A2", "B2", "C2", "E8", "G2"]);
        assert_eq!(sweep(8, true), CartanType::sweep(8));
        assert!(!sweep(3, false).iter().any(|t| t.rank > 3));
    }

    #[test]
    fn every_suite_passes_at_low_rank() {
        for s in Suite::EACH {
            if s == Suite::Young {
                continue;
            }
            for ty in CartanType::sweep(4) {
                let rows = rows_for(s, &Case::new(ty));
                assert!(rows.iter().all(|r| r.pass), "{s} {ty}: {:?}", rows.iter().find(|r| !r.pass));
            }
        }
    }

    #[test]
    fn word_rows_list_reduced_words_only_at_low_rank() {
        assert_eq!(word_rows(&Case::new("A3".parse().unwrap())).len(), 4);
        assert_eq!(word_rows(&Case::new("A5".parse().unwrap())).len(), 1);
    }
}
