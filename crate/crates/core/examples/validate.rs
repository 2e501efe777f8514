//! Check the digroup axioms on a builtin and on a deliberately broken table.
//!
//! cargo run --example validate

use digroup::io::render_digroup;
use digroup::{validate_digroup, Builtin, DigroupTable};

fn main() {
    let n = Builtin::N.build();
    print!("{}", render_digroup(&n));
    println!("N: {}", validate_digroup(n.table()));
    if let Some((x, y)) = n.non_commuting_pair() {
        println!(
            "{0}⇀{1} = {2} but {0}↼{1} = {3}",
            n.label(x),
            n.label(y),
            n.label(n.left(x, y)),
            n.label(n.right(x, y))
        );
    }
    let inverses: Vec<String> = n
        .elements()
        .map(|x| format!("{}->{}", n.label(x), n.label(n.liu_inverse(x))))
        .collect();
    println!("Liu inverses: {}", inverses.join(" "));

    // M with one left-table cell flipped
    let broken = DigroupTable::from_rows(0, &[vec![0, 0], vec![1, 0]], &[vec![0, 1], vec![0, 1]])
        .expect("well-formed");
    print!("broken M: {}", validate_digroup(&broken));
}
