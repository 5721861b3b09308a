//! Root data for every irreducible type up to rank 8: number of positive
//! roots, highest root, marks, comarks and the dual Coxeter number.
//!
//!     cargo run --example root_systems [TYPE]

use abid::rootsys::{CartanType, RootSystem};

fn main() {
    let types: Vec<CartanType> = match std::env::args().nth(1) {
        Some(t) => vec![t.parse().expect("a type such as F4")],
        None => CartanType::sweep(8),
    };
    println!("{:<4} {:>5} {:>4}  {:<24} {:<18} comarks", "type", "|Δ⁺|", "h∨", "θ", "marks");
    for ty in types {
        let rs = RootSystem::new(ty);
        println!(
            "{:<4} {:>5} {:>4}  {:<24} {:<18} {:?}",
            ty.to_string(),
            rs.num_positive(),
            rs.h_dual(),
            format!("{:?}", rs.theta().coeffs),
            format!("{:?}", rs.marks()),
            rs.comarks()
        );
    }
}
