//! Runs every verification suite over all types up to a rank (default 7,
//! or `ABID_MAX_RANK`) and prints a one-line summary per suite.
//!
//!     cargo run --release --example verify_all [MAX_RANK]

use std::time::Instant;

use abid::suite::{max_rank_from_env, run, Suite};

fn main() {
    let max_rank = std::env::args().nth(1).map_or_else(max_rank_from_env, |s| s.parse().expect("a rank"));
    let mut ok = true;
    for s in Suite::EACH {
        let start = Instant::now();
        let report = run(s, max_rank);
        let failed = report.failures().count();
        println!("{:<10} {:>4} checks  {failed} failed  {:.2?}", s.name(), report.rows.len(), start.elapsed());
        for f in report.failures() {
            println!("    {f}");
        }
        ok &= failed == 0;
    }
    std::process::exit(if ok { 0 } else { 1 });
}
