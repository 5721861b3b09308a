//! Lists the abelian ideals of one type together with their other
//! encodings: minuscule word, weight, ρ-point, η vector and antichain.
//!
//!     cargo run --example enumerate_ideals [TYPE]

use abid::abelian::{rho_point, IdealCatalog};
use abid::rootsys::RootSystem;

fn main() {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let cat = IdealCatalog::new(RootSystem::new(ty.parse().expect("a type such as B3")));
    let rs = cat.root_system();
    println!("{ty}: {} abelian ideals (2^{})", cat.len(), rs.rank());
    for (k, ideal) in cat.ideals().iter().enumerate() {
        let antichain: Vec<&[i64]> = ideal.antichain.iter().map(|&i| rs.root(i).coeffs.as_slice()).collect();
        println!(
            "{k:>3}  dim {:>2}  w = {:<16} weight {:<12} ρ-point {:<12} η {:<12} generated by {antichain:?}",
            ideal.grade(),
            format!("{:?}", ideal.word.letters()),
            format!("{:?}", ideal.weight_fw),
            format!("{:?}", rho_point(rs, ideal).unwrap()),
            format!("{:?}", ideal.eta(rs).unwrap()),
        );
    }
}
