//! Isomorphism tests, automorphism groups and canonical forms.
//!
//! cargo run --example isomorphism

use digroup::{automorphisms, canonical_form, find_isomorphism, Builtin};

fn main() {
    let n = Builtin::N.build();
    let shuffled = n.relabel(&[3, 5, 0, 1, 4, 2]);
    match find_isomorphism(&n, &shuffled) {
        Some(m) => println!("N ≅ shuffled N via {:?}", m.image()),
        None => println!("not isomorphic"),
    }
    let (m, z2) = (Builtin::M.build(), Builtin::Cyclic(2).build());
    println!("M ≅ Z2: {}", find_isomorphism(&m, &z2).is_some());

    let c1 = canonical_form(&n).unwrap();
    let c2 = canonical_form(&shuffled).unwrap();
    println!(
        "canonical forms agree: {}",
        c1.table.same_operations(&c2.table)
    );
    println!("canonical left table: {:?}", c1.table.left_flat());

    for b in [Builtin::M, Builtin::N, Builtin::S3, Builtin::Trivial(4)] {
        let auts = automorphisms(&b.build()).unwrap();
        println!("|Aut({b})| = {}", auts.len());
    }
}
