//! End-to-end acceptance checks. Runs without the test harness so that each
//! criterion prints one PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use digroup::io::catalog_line;
use digroup::{
    are_isomorphic, cayley_embedding, count_by_class, digroup_from_triple, enumerate_digroups,
    is_homomorphism, is_subdigroup, naive_enumerate, subdigroup_criteria,
    translation_product_digroup, triple_from_digroup, validate_digroup, validate_triple,
    verify_translation_identities, Builtin, SearchOptions, SubsetMask,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn examples_validate() -> Outcome {
    let (m, n) = (Builtin::M.build(), Builtin::N.build());
    for d in [&m, &n] {
        let r = validate_digroup(d.table());
        ensure(r.ok && r.violations.is_empty(), format!("violations: {r}"))?;
    }
    ensure(
        m.is_commutative() && !m.is_group(),
        "M should be commutative, not a group",
    )?;
    ensure(
        !n.is_commutative() && !n.is_group(),
        "N should be non-commutative, not a group",
    )?;
    let b = n.element_by_label("β").unwrap();
    let (l, r) = (n.label(n.left(b, b)), n.label(n.right(b, b)));
    ensure(l == "δ" && r == "ε", format!("β⇀β = {l}, β↼β = {r}"))?;
    Ok(format!("β⇀β = {l} ≠ {r} = β↼β"))
}

fn liu_inverses() -> Outcome {
    let m = Builtin::M.build();
    ensure(m.liu_inverse_map().image() == [0, 0], "inverse map of M")?;
    for b in [Builtin::M, Builtin::N, Builtin::S3, Builtin::Trivial(4)] {
        let d = b.build();
        let e = d.identity();
        for x in d.elements() {
            let sols: Vec<_> = d
                .elements()
                .filter(|&y| d.left(y, x) == e && d.right(x, y) == e)
                .collect();
            ensure(
                sols == [d.liu_inverse(x)],
                format!("{b}: solutions for {x}: {sols:?}"),
            )?;
        }
    }
    Ok("M ↦ [0, 0]; unique on M, N, S3, trivial(4)".into())
}

fn criteria_agree() -> Outcome {
    let mut subsets = 0;
    for b in [Builtin::M, Builtin::N] {
        let d = b.build();
        for bits in 0..1u64 << d.order() {
            let h = SubsetMask::from_bits(d.order(), bits).unwrap();
            let (i, ii, iii) = subdigroup_criteria(&d, &h);
            ensure(i == ii && ii == iii, format!("{b} {h}: {:?}", (i, ii, iii)))?;
            subsets += 1;
        }
    }
    Ok(format!("{subsets} subsets"))
}

fn translation_identities() -> Outcome {
    let examples = common::named_examples();
    for (name, d) in &examples {
        let r = verify_translation_identities(d);
        ensure(r.ok, format!("{name}: {r}"))?;
    }
    Ok(format!("{} digroups", examples.len()))
}

fn cayley_counterpart() -> Outcome {
    let pool = common::construction_pool();
    for (name, d) in &pool {
        let p = cayley_embedding(d).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            validate_digroup(p.table.table()).ok,
            format!("{name}: product invalid"),
        )?;
        ensure(p.eta.is_injective(), format!("{name}: η not injective"))?;
        ensure(
            is_homomorphism(d, &p.table, &p.eta),
            format!("{name}: η not a homomorphism"),
        )?;
        ensure(
            is_subdigroup(&p.table, &p.diagonal),
            format!("{name}: diagonal not a subdigroup"),
        )?;
        ensure(
            are_isomorphic(&p.diagonal_digroup(), d),
            format!("{name}: diagonal not isomorphic to the source"),
        )?;
    }
    Ok(format!("{} digroups", pool.len()))
}

fn triple_round_trip() -> Outcome {
    let pool = common::construction_pool();
    for (name, d) in &pool {
        let t = triple_from_digroup(d);
        let r = validate_triple(&t);
        ensure(r.ok, format!("{name}: {r}"))?;
        let rebuilt = digroup_from_triple(&t).map_err(|e| format!("{name}: {e}"))?;
        let product = translation_product_digroup(d).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            rebuilt.same_operations(&product.table),
            format!("{name}: rebuilt table differs from the translation product"),
        )?;
    }
    Ok(format!("{} digroups", pool.len()))
}

fn small_classification() -> Outcome {
    let opts = SearchOptions::default();
    let one = enumerate_digroups(1, &opts).unwrap();
    ensure(one.len() == 1, format!("order 1: {} classes", one.len()))?;
    let two = enumerate_digroups(2, &opts).unwrap();
    ensure(two.len() == 2, format!("order 2: {} classes", two.len()))?;
    for b in [Builtin::Cyclic(2), Builtin::M] {
        ensure(
            two.iter().any(|e| are_isomorphic(&e.canonical, &b.build())),
            format!("order 2 misses {b}"),
        )?;
    }
    for n in 1..=3 {
        let fast = enumerate_digroups(n, &opts).unwrap();
        let slow = naive_enumerate(n).unwrap();
        ensure(
            fast == slow,
            format!("order {n}: search and brute force disagree"),
        )?;
    }
    Ok("1 class at n=1; Z2 and M at n=2; naive = search for n ≤ 3".into())
}

fn commutative_below_six() -> Outcome {
    let mut counts = Vec::new();
    for n in 3..=5 {
        let c = count_by_class(n, &SearchOptions::default()).unwrap();
        ensure(c.non_commutative == 0, format!("order {n}: {c:?}"))?;
        counts.push(format!("n={n}: {}", c.total));
    }
    Ok(format!("all commutative ({})", counts.join(", ")))
}

fn unique_at_six() -> Outcome {
    let catalog = enumerate_digroups(6, &SearchOptions::default()).unwrap();
    let n = Builtin::N.build();
    let s3 = Builtin::S3.build();
    let mut raw = Vec::new();
    let mut non_group = Vec::new();
    for e in catalog.iter().filter(|e| !e.flags.commutative) {
        let name = if are_isomorphic(&e.canonical, &n) {
            "N"
        } else if are_isomorphic(&e.canonical, &s3) {
            "S3"
        } else {
            "unnamed"
        };
        raw.push(format!("{name}(group={})", e.flags.group));
        if !e.flags.group {
            non_group.push(e);
        }
    }
    ensure(
        non_group.len() == 1 && are_isomorphic(&non_group[0].canonical, &n),
        format!("non-commutative classes: {raw:?}"),
    )?;
    Ok(format!(
        "{} classes; non-commutative: {}",
        catalog.len(),
        raw.join(", ")
    ))
}

fn group_counts() -> Outcome {
    let mut found = Vec::new();
    for n in 1..=5 {
        let catalog = enumerate_digroups(n, &SearchOptions::default()).unwrap();
        found.push(
            catalog
                .iter()
                .filter(|e| e.canonical.left_flat() == e.canonical.right_flat())
                .count(),
        );
    }
    ensure(found == [1, 1, 1, 2, 1], format!("found {found:?}"))?;
    Ok(format!("{found:?}"))
}

fn determinism() -> Outcome {
    for n in 1..=5 {
        let render = |workers| {
            let opts = SearchOptions::default().with_workers(workers);
            enumerate_digroups(n, &opts)
                .unwrap()
                .iter()
                .map(|e| catalog_line(e) + "\n")
                .collect::<String>()
        };
        let reference = render(1);
        for workers in [1, 4, 1, 4] {
            ensure(
                render(workers) == reference,
                format!("order {n}, {workers} workers"),
            )?;
        }
    }
    Ok("identical for 1 and 4 workers, n ≤ 5".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("M and N validate", examples_validate),
        ("Liu inverses", liu_inverses),
        ("subdigroup criteria agree", criteria_agree),
        ("translation identities", translation_identities),
        ("Cayley embedding", cayley_counterpart),
        ("standard triple round trip", triple_round_trip),
        ("classification at orders 1-3", small_classification),
        (
            "no non-commutative digroup below order 6",
            commutative_below_six,
        ),
        (
            "single non-group non-commutative class at order 6",
            unique_at_six,
        ),
        ("group counts for orders 1-5", group_counts),
        ("catalog determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [{elapsed:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{elapsed:.2?}]: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
