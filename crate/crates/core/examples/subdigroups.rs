//! Subdigroups of N, generated subdigroups, and the three equivalent tests.
//!
//! cargo run --example subdigroups

use digroup::{all_subdigroups, generated_subdigroup, subdigroup_criteria, Builtin, SubsetMask};

fn main() {
    let n = Builtin::N.build();
    let name = |h: &SubsetMask| {
        let labels: Vec<String> = h.elements().map(|x| n.label(x)).collect();
        format!("{{{}}}", labels.join(", "))
    };
    for h in all_subdigroups(&n).expect("small order") {
        println!("subdigroup {}", name(&h));
    }
    for label in ["α", "β", "δ"] {
        let x = n.element_by_label(label).unwrap();
        let s = SubsetMask::from_elements(6, [x]).unwrap();
        println!(
            "generated by {label}: {}",
            name(&generated_subdigroup(&n, &s))
        );
    }
    let h = SubsetMask::from_elements(6, [0, 2]).unwrap();
    println!(
        "criteria on {}: {:?}",
        name(&h),
        subdigroup_criteria(&n, &h)
    );
}
