//! Staircase Young diagrams for `A_{n-1}`: the σ_n orbits, and the check
//! that σ_n and conjugation generate a dihedral group of order 2n that
//! matches the centre and diagram actions on ideals.
//!
//!     cargo run --example young_dihedral [N]

use std::collections::BTreeSet;

use abid::young::{sigma_orbit, staircase_partitions, verify_dihedral, Partition};

fn main() {
    let n: usize = std::env::args().nth(1).map_or(5, |s| s.parse().expect("an integer n ≥ 3"));
    let mut seen: BTreeSet<Partition> = BTreeSet::new();
    for lam in staircase_partitions(n) {
        if seen.contains(&lam) {
            continue;
        }
        let orbit = sigma_orbit(n, &lam).unwrap();
        let shown: Vec<String> = orbit.iter().map(|p| p.to_string()).collect();
        println!("orbit of size {}: {}", orbit.len(), shown.join(" -> "));
        seen.extend(orbit);
    }
    for row in verify_dihedral(n) {
        println!("{row}");
    }
}
