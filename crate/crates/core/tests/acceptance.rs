//! Acceptance criteria, run at full scale. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use abid::abelian::{enumerate_by_antichains, enumerate_ideals, rho_point, IdealCatalog};
use abid::bitset::RootSet;
use abid::linalg;
use abid::poset::build_hasse;
use abid::report::ReportRow;
use abid::rootsys::{CartanType, RootSystem};
use abid::suite::{self, Case, Suite, EDGES_MAX_RANK, YOUNG_RANGE};
use abid::young::verify_dihedral;

const MAX_RANK: usize = 7;

struct Outcome {
    rows: Vec<ReportRow>,
    elapsed: Duration,
}

fn timed(f: impl FnOnce() -> Vec<ReportRow>) -> Outcome {
    let start = Instant::now();
    let rows = f();
    Outcome { rows, elapsed: start.elapsed() }
}

fn cases(types: &[CartanType]) -> impl Iterator<Item = Case> + '_ {
    types.iter().map(|&ty| Case::new(ty))
}

fn suite_rows(suite: Suite, types: &[CartanType]) -> Vec<ReportRow> {
    cases(types).flat_map(|c| suite::rows_for(suite, &c)).collect()
}

fn encodings(types: &[CartanType]) -> Vec<ReportRow> {
    suite_rows(Suite::Encodings, types)
}

fn ideal_counts(types: &[CartanType]) -> Vec<ReportRow> {
    types
        .iter()
        .flat_map(|&ty| {
            let rs = RootSystem::new(ty);
            let walk: BTreeSet<RootSet> = enumerate_ideals(&rs).into_iter().map(|i| i.phi).collect();
            let anti: BTreeSet<RootSet> = enumerate_by_antichains(&rs).into_iter().collect();
            let n = 1usize << ty.rank;
            vec![
                ReportRow::compare(format!("{ty} counts"), vec![n, n], vec![walk.len(), anti.len()]),
                ReportRow::holds(format!("{ty} engines agree"), walk == anti),
            ]
        })
        .collect()
}

fn rho_identity(types: &[CartanType]) -> Vec<ReportRow> {
    types
        .iter()
        .map(|&ty| {
            let cat = IdealCatalog::new(RootSystem::new(ty));
            let rs = cat.root_system();
            let bad: Vec<Vec<usize>> = cat
                .ideals()
                .iter()
                .filter(|i| rho_point(rs, i).ok() != Some(linalg::add(&rs.rho(), &i.weight_fw)))
                .map(|i| i.word.letters().to_vec())
                .collect();
            ReportRow::compare(format!("{ty} words with w(ρ) ≠ ρ + weight"), Vec::new(), bad)
        })
        .collect()
}

fn fixtures() -> Vec<ReportRow> {
    [("C2", include_str!("fixtures/c2_hasse.json")), ("A3", include_str!("fixtures/a3_hasse.json"))]
        .into_iter()
        .map(|(ty, golden)| {
            let cat = IdealCatalog::new(RootSystem::new(ty.parse().unwrap()));
            let json = serde_json::to_string_pretty(&build_hasse(&cat).to_json()).unwrap() + "\n";
            ReportRow::holds(format!("{ty} Hasse JSON byte-matches golden"), json == golden)
        })
        .collect()
}

fn main() -> ExitCode {
    let full = suite::sweep(MAX_RANK, true);
    let up_to = |r: usize| -> Vec<CartanType> { full.iter().copied().filter(|t| t.rank <= r).collect() };
    let small = up_to(EDGES_MAX_RANK);

    type Criterion<'a> = (usize, &'a str, Option<Duration>, Box<dyn FnOnce() -> Vec<ReportRow> + 'a>);
    let criteria: Vec<Criterion> = vec![
        (1, "encoding bijections", Some(Duration::from_secs(10)), Box::new(|| encodings(&full))),
        (2, "ideal counts from two engines", Some(Duration::from_secs(10)), Box::new(|| ideal_counts(&full))),
        (3, "w(ρ) = ρ + weight", None, Box::new(|| rho_identity(&full))),
        (
            4,
            "poset automorphisms vs Aut(Π)",
            Some(Duration::from_secs(30)),
            Box::new(|| suite_rows(Suite::PosetSymmetry, &full)),
        ),
        (5, "Hasse graph automorphisms vs Aut(Π̂)", None, Box::new(|| suite_rows(Suite::Hasse, &full))),
        (6, "forbidden braids and letter multisets", None, Box::new(|| suite_rows(Suite::Words, &full))),
        (7, "degree formula", None, Box::new(|| suite_rows(Suite::Edges, &small))),
        (
            8,
            "diagram and centre actions form a semidirect product",
            None,
            Box::new(|| cases(&small).flat_map(|c| abid::dynkin::verify_semidirect(&c.catalog)).collect()),
        ),
        (
            9,
            "dihedral symmetry of staircase diagrams",
            Some(Duration::from_secs(5)),
            Box::new(|| YOUNG_RANGE.flat_map(verify_dihedral).collect()),
        ),
        (10, "Hasse fixtures", None, Box::new(fixtures)),
    ];

    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let Outcome { rows, elapsed } = timed(run);
        let bad: Vec<&ReportRow> = rows.iter().filter(|r| !r.pass).collect();
        let slow = limit.is_some_and(|l| elapsed > l);
        let pass = !rows.is_empty() && bad.is_empty() && !slow;
        let limit_note = limit.map(|l| format!(", limit {:.0} s", l.as_secs_f64())).unwrap_or_default();
        println!(
            "{}  {id:>2}  {name}  ({} checks, {:.2} s{limit_note})",
            if pass { "PASS" } else { "FAIL" },
            rows.len(),
            elapsed.as_secs_f64()
        );
        for r in bad.iter().take(10) {
            println!("        {r}");
        }
        if slow {
            println!("        exceeded the time limit");
        }
        failed += usize::from(!pass);
    }
    println!("{failed} of 10 criteria failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
