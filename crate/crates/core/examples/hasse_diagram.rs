//! The labelled Hasse diagram of the ideal poset as Graphviz, with its
//! diamonds listed on stderr.
//!
//!     cargo run --example hasse_diagram [TYPE] | dot -Tsvg > hasse.svg

use abid::abelian::IdealCatalog;
use abid::poset::build_hasse;
use abid::rootsys::RootSystem;

fn main() {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let cat = IdealCatalog::new(RootSystem::new(ty.parse().expect("a type such as A3")));
    let h = build_hasse(&cat);
    print!("{}", h.to_dot());
    eprintln!("labels in use: {:?}", h.pi_prime());
    for d in h.diamonds() {
        eprintln!("diamond {} < {}, {} < {} with labels {:?}", d.bottom, d.left, d.right, d.top, d.labels);
    }
}
