//! How the centre `Z` and the diagram automorphisms move ideals around.
//! Each element is shown as a permutation of the ideals, listed by word.
//!
//!     cargo run --example center_action [TYPE]

use abid::abelian::IdealCatalog;
use abid::dynkin::{aut_pi, center, center_permutation, diagram_permutation, realized_groups};
use abid::rootsys::RootSystem;

fn main() {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "D4".into());
    let cat = IdealCatalog::new(RootSystem::new(ty.parse().expect("a type such as D4")));
    let rs = cat.root_system();
    let word = |k: usize| format!("{:?}", cat.get(k).word.letters());

    for z in center(rs) {
        let p = center_permutation(&cat, z).unwrap();
        match z.index {
            None => println!("identity of Z"),
            Some(i) => println!("z{i} (order {}): sends e to {}", p.order(), word(p.apply(0))),
        }
    }
    for f in aut_pi(rs).iter().filter(|f| f.images().iter().enumerate().any(|(i, &j)| i != j)) {
        let p = diagram_permutation(&cat, f).unwrap();
        let moved: Vec<String> = (0..cat.len())
            .filter(|&k| p.apply(k) != k)
            .map(|k| format!("{} -> {}", word(k), word(p.apply(k))))
            .collect();
        println!("diagram automorphism {:?} moves {} ideals: {}", f.images(), moved.len(), moved.join(", "));
    }
    let (g, z) = realized_groups(&cat).unwrap();
    println!("generated group: order {}, centre part order {} (normal: {})", g.order(), z.order(), z.is_normal_in(&g));
}
