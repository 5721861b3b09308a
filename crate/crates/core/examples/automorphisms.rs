//! Orders of the automorphism groups of the ideal poset and of its Hasse
//! graph, next to those of the finite and extended Dynkin diagrams.
//!
//!     cargo run --release --example automorphisms [MAX_RANK]

use abid::abelian::IdealCatalog;
use abid::dynkin::{aut_pi, aut_pihat};
use abid::poset::{build_hasse, graph_automorphisms, poset_automorphisms};
use abid::rootsys::{CartanType, RootSystem};

fn main() {
    let max_rank = std::env::args().nth(1).map_or(8, |s| s.parse().expect("a rank"));
    println!("{:<5} {:>9} {:>7} {:>8} {:>7}", "type", "Aut(Ab)", "Aut(Π)", "Aut(H)", "Aut(Π̂)");
    for ty in CartanType::sweep(max_rank) {
        let rs = RootSystem::new(ty);
        let h = build_hasse(&IdealCatalog::new(rs.clone()));
        let (poset, graph) = (poset_automorphisms(&h).order(), graph_automorphisms(&h).order());
        let (pi, pihat) = (aut_pi(&rs).len(), aut_pihat(&rs).len());
        let note = if poset != pi || graph != pihat { "  <- extra symmetry" } else { "" };
        println!("{:<5} {poset:>9} {pi:>7} {graph:>8} {pihat:>7}{note}", ty.to_string());
    }
}
