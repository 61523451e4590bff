//! Acceptance gate: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;

use common::strategies::{graph_vertex, graphs, nonzero_poly, poly, subset_triple};
use common::{bisym, s, solve_class, sympl};
use i2gr_core::classes::lefschetz_crosscheck;
use i2gr_core::classical::{
    degree_table, i2gr26_generators, pairing_matrix, parse_generator_poly,
    structure_constants_classical,
};
use i2gr_core::{
    betti_direct, betti_recursive, chevalley_table, compute_class_table, dominates, enumerate_admissible, verify_gkm,
    CharPoly, GrassmannianSpec, IntClassVector,
};
use num_bigint::{BigInt, BigUint};
use proptest::test_runner::{Config, TestCaseError, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn fixed_point_counts() -> Outcome {
    let mut checked = 0;
    for n in 2..=8u64 {
        for k in 2..=n {
            let expected = (1u64 << k) * binomial(n, k);
            for spec in [
                GrassmannianSpec::new(n as usize, k as usize, i2gr_core::Geometry::Bisymplectic).unwrap(),
                GrassmannianSpec::new(n as usize, k as usize, i2gr_core::Geometry::Symplectic).unwrap(),
            ] {
                let found = enumerate_admissible(&spec).len() as u64;
                ensure(found == expected && spec.fixed_point_count() as u64 == expected, || {
                    format!("{spec:?}: {found} != {expected}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} shapes"))
}

fn betti_sequences() -> Outcome {
    let cases: [(usize, usize, &[u64]); 3] = [
        (2, 3, &[1, 1, 2, 4, 2, 1, 1]),
        (2, 4, &[1, 1, 2, 2, 3, 6, 3, 2, 2, 1, 1]),
        (3, 4, &[1, 1, 2, 6, 6, 6, 6, 2, 1, 1]),
    ];
    for (k, n, want) in cases {
        let spec = GrassmannianSpec::new(n, k, i2gr_core::Geometry::Bisymplectic).unwrap();
        let got = betti_direct(&spec);
        ensure(got.values() == want, || format!("S_{{{k},{n}}} = {got}"))?;
    }
    for n in 3..=8 {
        let direct = betti_direct(&bisym(n));
        let rec = betti_recursive(2, n).map_err(|e| e.to_string())?;
        ensure(direct == rec, || format!("n = {n}: direct {direct} vs recursive {rec}"))?;
    }
    Ok("three sequences exact; recursion agrees for n = 3..8".into())
}

fn gkm_certification() -> Outcome {
    let specs: Vec<GrassmannianSpec> = (3..=5).map(bisym).chain((3..=4).map(|n| sympl(n, 2))).collect();
    let mut classes = 0;
    for spec in &specs {
        let table = compute_class_table(spec).map_err(|e| format!("{spec:?}: {e}"))?;
        let v = verify_gkm(&table);
        ensure(v.is_empty(), || format!("{spec:?}: {} violations, first {:?}", v.len(), v[0]))?;
        classes += table.classes().len();
    }
    Ok(format!("{} tables, {classes} classes, zero violations", specs.len()))
}

/// `(source, target, coefficient)` for n = 3.
const EXPECTED_N3: [([i32; 2], [i32; 2], &str); 21] = [
    ([3, 2], [3, 1], "1"),
    ([3, 1], [3, -1], "1"),
    ([3, 1], [2, 1], "1"),
    ([3, -1], [3, -2], "1"),
    ([3, -1], [2, -1], "1"),
    ([3, -1], [2, -3], "2"),
    ([3, -1], [1, -2], "2"),
    ([3, -2], [1, -2], "e2 - e3"),
    ([3, -2], [1, -3], "1"),
    ([2, 1], [2, -1], "1"),
    ([2, 1], [2, -3], "1"),
    ([2, 1], [1, -2], "1"),
    ([2, -1], [2, -3], "e1 - e2"),
    ([2, -1], [1, -3], "1"),
    ([2, -1], [-1, -2], "1"),
    ([2, -3], [1, -3], "1"),
    ([1, -2], [1, -3], "1"),
    ([1, -2], [-1, -2], "1"),
    ([1, -3], [-1, -3], "1"),
    ([-1, -2], [-1, -3], "1"),
    ([-1, -3], [-2, -3], "1"),
];

fn chevalley_n3() -> Outcome {
    let table = chevalley_table(&bisym(3)).map_err(|e| e.to_string())?;
    let got: BTreeMap<_, _> = table
        .into_iter()
        .map(|c| ((c.source, c.target), c.value))
        .collect();
    let want: BTreeMap<_, _> = EXPECTED_N3
        .iter()
        .map(|(a, b, v)| ((s(a), s(b)), CharPoly::parse(3, v).unwrap()))
        .collect();
    for (k, v) in &want {
        ensure(got.get(k) == Some(v), || format!("{k:?}: expected {v}, got {:?}", got.get(k)))?;
    }
    for (k, v) in &got {
        ensure(want.contains_key(k), || format!("extra coefficient {k:?} = {v}"))?;
    }
    Ok(format!("{} coefficients edge-for-edge", want.len()))
}

const DEGREES_N3: [([i32; 2], u64); 12] = [
    ([3, 2], 14),
    ([3, 1], 14),
    ([3, -1], 9),
    ([3, -2], 1),
    ([2, 1], 5),
    ([2, -1], 2),
    ([2, -3], 1),
    ([1, -2], 2),
    ([1, -3], 1),
    ([-1, -2], 1),
    ([-1, -3], 1),
    ([-2, -3], 1),
];

const DEGREES_N4: [([i32; 2], u64); 24] = [
    ([4, 3], 132),
    ([4, 2], 132),
    ([4, 1], 90),
    ([3, 2], 42),
    ([4, -1], 48),
    ([3, 1], 42),
    ([4, -2], 20),
    ([3, -1], 28),
    ([2, 1], 14),
    ([4, -3], 1),
    ([3, -2], 4),
    ([2, -1], 5),
    ([1, -2], 5),
    ([2, -3], 4),
    ([3, -4], 1),
    ([2, -4], 1),
    ([1, -3], 3),
    ([-1, -2], 2),
    ([1, -4], 1),
    ([-1, -3], 2),
    ([-2, -3], 1),
    ([-1, -4], 1),
    ([-2, -4], 1),
    ([-3, -4], 1),
];

fn classical_degrees() -> Outcome {
    for (n, frozen) in [(3, &DEGREES_N3[..]), (4, &DEGREES_N4[..])] {
        let spec = bisym(n);
        let rows = degree_table(&spec).map_err(|e| e.to_string())?;
        ensure(rows.len() == frozen.len(), || format!("n = {n}: {} rows", rows.len()))?;
        let ring = structure_constants_classical(&compute_class_table(&spec).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        for (p, d) in frozen {
            let p = s(p);
            let row = rows.iter().find(|r| r.subset == p).ok_or(format!("{p:?} missing"))?;
            ensure(row.degree == BigUint::from(*d), || format!("n = {n}, {p:?}: paths give {}", row.degree))?;
            let via_ring = ring.degree(&p);
            ensure(via_ring == BigInt::from(*d), || format!("n = {n}, {p:?}: products give {via_ring}"))?;
        }
    }
    Ok("n = 3 (14) and n = 4 (132), paths and products agree".into())
}

fn lefschetz() -> Outcome {
    let mut msg = Vec::new();
    for n in 3..=4 {
        let r = lefschetz_crosscheck(n).map_err(|e| e.to_string())?;
        let spec = bisym(n);
        let expected = enumerate_admissible(&spec)
            .iter()
            .filter(|p| i2gr_core::codim(p, &spec) < spec.middle_codim())
            .count();
        ensure(r.classes_checked == expected, || format!("n = {n}: checked {}", r.classes_checked))?;
        ensure(r.passed(), || format!("n = {n}: {:?} {:?}", r.class_mismatches, r.constant_mismatches))?;
        msg.push(format!("n = {n}: {} classes, {} constants", r.classes_checked, r.constants_checked));
    }
    Ok(msg.join("; "))
}

/// Reference presentation, taken verbatim; the first entry is checked as given.
const REFERENCE_IDEAL: [&str; 10] = [
    "2*s1^4 - 2*s1^2*s2 - 3*s1*s3'",
    "s2*s3'",
    "s1*s3 - s1*s3'",
    "s3*s3' - s1^3*s3'",
    "s2^2 - s1^4 + 2*s1^2*s2 + 2*s1*s3'",
    "s3^2",
    "s1^5 - 14*s1^2*s3'",
    "s3'^2",
    "s2*s3",
    "s1^4*s3'",
];

const REFERENCE_SUBSTITUTIONS: [([i32; 2], &str); 7] = [
    ([3, -1], "s1^2 - s2"),
    ([2, -1], "3*s1*s2 - s1^3 + s3"),
    ([1, -2], "s1^3 - 2*s1*s2 - s3 - s3'"),
    ([-1, -2], "s1^4 - 2*s1^2*s2 - 3*s1*s3'"),
    ([1, -3], "s1*s3'"),
    ([-1, -3], "s1^2*s3'"),
    ([-2, -3], "s1^3*s3'"),
];

fn ring_presentation() -> Outcome {
    let spec = bisym(3);
    let ring = structure_constants_classical(&compute_class_table(&spec).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let gens = i2gr26_generators(&ring);
    let mut failures = Vec::new();
    for r in REFERENCE_IDEAL {
        let v = ring.evaluate(&parse_generator_poly(r), &gens);
        if !v.is_zero() {
            failures.push(format!("ideal generator {r} = {}", serde_json::to_string(&v).unwrap()));
        }
    }
    let mut span: Vec<IntClassVector> = gens.to_vec();
    span.push(ring.one());
    for (p, r) in REFERENCE_SUBSTITUTIONS {
        let rhs = ring.evaluate(&parse_generator_poly(r), &gens);
        if ring.sigma(&s(&p)) != rhs {
            failures.push(format!("substitution σ{:?} = {r}", s(&p)));
        }
        span.push(rhs);
    }
    // Generation: every basis class is one of the polynomials above.
    for p in ring.points() {
        if !span.contains(&ring.sigma(p)) {
            failures.push(format!("σ{p:?} not generated"));
        }
    }
    // Pairing values, global sign +1.
    let pair = |a: &[i32], b: &[i32]| ring.integrate(&ring.mul(&ring.sigma(&s(a)), &ring.sigma(&s(b))));
    for (a, b, v) in [([3, -2], [2, -3], 1), ([1, -2], [2, -1], 1), ([3, -2], [2, -1], -1)] {
        let got = pair(&a, &b);
        if got != BigInt::from(v) {
            failures.push(format!("σ{:?}σ{:?} = {got}, expected {v}", s(&a), s(&b)));
        }
    }
    if !pairing_matrix(&ring, 3).is_unimodular() {
        failures.push("codimension 3 pairing is not unimodular".into());
    }
    if failures.is_empty() {
        Ok("10 generators vanish, 7 substitutions hold, 12 classes generated, pairings 1, 1, -1".into())
    } else {
        Err(failures.join("; "))
    }
}

fn uniqueness() -> Outcome {
    let spec = bisym(3);
    let table = compute_class_table(&spec).map_err(|e| e.to_string())?;
    for (i, p) in table.points().iter().enumerate() {
        let solved = solve_class(p, &spec).ok_or(format!("f_{p:?} is not uniquely determined"))?;
        ensure(solved.as_slice() == table.classes()[i].values(), || {
            format!("f_{p:?}: solver and induction disagree")
        })?;
    }
    Ok(format!("{} classes recovered bit-exactly", table.points().len()))
}

fn fail<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e}")
}

fn property_suites() -> Outcome {
    let cases = 1000;
    let mut runner = TestRunner::new(Config { failure_persistence: None, ..Config::with_cases(cases) });
    runner
        .run(&(poly(), poly(), poly()), |(a, b, c)| {
            let ok = &a + &b == &b + &a
                && &a * &b == &b * &a
                && &(&a * &b) * &c == &a * &(&b * &c)
                && &(&a + &b) + &c == &a + &(&b + &c)
                && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
                && (&a + &(-&a)).is_zero();
            ok.then_some(()).ok_or(TestCaseError::fail("ring axiom violated"))
        })
        .map_err(|e| fail("ring axioms", e))?;
    runner
        .run(&(poly(), nonzero_poly()), |(p, q)| {
            ((&p * &q).try_divide_exact(&q) == Ok(p))
                .then_some(())
                .ok_or(TestCaseError::fail("division round trip"))
        })
        .map_err(|e| fail("exact division", e))?;
    runner
        .run(&subset_triple(), |(a, b, c)| {
            let ok = dominates(&a, &a)
                && (!(dominates(&a, &b) && dominates(&b, &a)) || a == b)
                && (!(dominates(&a, &b) && dominates(&b, &c)) || dominates(&a, &c));
            ok.then_some(()).ok_or(TestCaseError::fail("partial order"))
        })
        .map_err(|e| fail("dominance", e))?;
    runner
        .run(&graph_vertex(), |(g, v)| {
            let graph = &graphs()[g];
            let w: Vec<_> = graph.incident_edges(v).iter().map(|&e| &graph.edges()[e].weight).collect();
            let ok = (0..w.len()).all(|i| (i + 1..w.len()).all(|j| !w[i].is_proportional_to(w[j])));
            ok.then_some(()).ok_or(TestCaseError::fail("proportional weights"))
        })
        .map_err(|e| fail("non-proportionality", e))?;
    Ok(format!("4 suites x {cases} cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("fixed-point counts", fixed_point_counts),
        ("Betti sequences", betti_sequences),
        ("GKM certification", gkm_certification),
        ("Chevalley table n = 3", chevalley_n3),
        ("classical degrees", classical_degrees),
        ("equivariant Lefschetz", lefschetz),
        ("ring presentation n = 3", ring_presentation),
        ("uniqueness solver n = 3", uniqueness),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = std::time::Instant::now();
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({:.2?})", i + 1, started.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
