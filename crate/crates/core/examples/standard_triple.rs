//! Extract the standard triple of a digroup, check it, and rebuild a digroup
//! from it.
//!
//! cargo run --example standard_triple

use digroup::io::serialize_triple;
use digroup::{digroup_from_triple, triple_from_digroup, validate_triple, Builtin};

fn main() {
    let m = Builtin::M.build();
    let t = triple_from_digroup(&m);
    print!("{}", serialize_triple(&t));
    println!("conditions: {}", validate_triple(&t));

    let rebuilt = digroup_from_triple(&t).expect("valid triple");
    println!(
        "rebuilt order {}, identity {}, commutative {}",
        rebuilt.order(),
        rebuilt.identity(),
        rebuilt.is_commutative()
    );

    // pointing at a non-unit breaks the right-unit condition
    let bad = t.with_right_unit(1).expect("index in range");
    print!("with right unit 1: {}", validate_triple(&bad));
}
