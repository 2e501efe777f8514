//! Embed a digroup into the product of its left translation sets and look
//! at the diagonal image.
//!
//! cargo run --example cayley_embedding

use digroup::{cayley_embedding, left_translations, phi, Builtin};

fn main() {
    let n = Builtin::N.build();
    let (lleft, lright) = left_translations(&n);
    println!("|L↼| = {}, |L⇀| = {}", lleft.len(), lright.len());
    for a in n.elements() {
        println!(
            "{}: L↼ = {:?}  L⇀ = {:?}",
            n.label(a),
            lleft.of(a).image(),
            lright.of(a).image()
        );
    }
    println!("φ = {:?}", phi(&n).image());

    let p = cayley_embedding(&n).expect("N embeds");
    println!("product order {}", p.table.order());
    for a in n.elements() {
        let q = p.eta.apply(a);
        println!("η({}) = pair {:?} at index {q}", n.label(a), p.pair(q));
    }
    println!("diagonal {}", p.diagonal);
    println!(
        "diagonal commutative: {}, group: {}",
        p.diagonal_digroup().is_commutative(),
        p.diagonal_digroup().is_group()
    );
}
