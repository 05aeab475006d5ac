//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p growth-core --test acceptance -- --nocapture` to
//! see the lines. Every criterion is evaluated even when an earlier one
//! fails; the test fails at the end if any line is FAIL.

use std::time::{Duration, Instant};

use growth_core::correspondences::{
    matching_to_oscillating, pair_to_vacillating, setpartition_to_hesitating, setpartition_to_vacillating,
};
use growth_core::enumeration::{
    explore_ne_se, for_each_entries, generate_fillings, jonsson_check, verify_theorem, Budget, Constraint, Instance,
    Report, TheoremId,
};
use growth_core::figures;
use growth_core::greene::greene_values;
use growth_core::growth::label_via_blow_up;
use growth_core::insertion::{border_pair, insert_filling, Tableau};
use growth_core::{
    label_diagram, reconstruct, Boundary, CellBoard, ChainSpec, FerrersShape, Filling, FillingClass, Partition,
    StackPolyomino, Variant,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Wall-clock targets. Exceeding one is reported but does not fail a
/// criterion, since debug builds on shared machines vary widely.
const FIGURES_TARGET: Duration = Duration::from_secs(1);
const ROUND_TRIP_TARGET: Duration = Duration::from_secs(60);
const GREENE_TARGET: Duration = Duration::from_secs(300);

const ROUND_TRIP_MAX_CELLS: usize = 9;
const ROUND_TRIP_MAX_SUM: u32 = 4;
const GREENE_RANDOM_PER_VARIANT: usize = 500;
const GREENE_SEED: u64 = 0x6772_6f77;
const GREENE_MAX_UNITS: u32 = 7;
const INSERTION_MAX_SUM: u32 = 5;
const JONSSON_MAX_CELLS: usize = 8;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Outcome {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

fn seq(text: &str) -> Vec<Partition> {
    text.split(',').map(|s| s.parse().unwrap()).collect()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn t(rows: &[&[u32]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn timing(elapsed: Duration, target: Duration) -> String {
    let mark = if elapsed <= target { "" } else { " OVER TARGET" };
    format!("{:.2}s of {:.0}s{mark}", elapsed.as_secs_f64(), target.as_secs_f64())
}

fn class_constraint(v: Variant, max_sum: u32) -> Constraint {
    match v.filling_class() {
        FillingClass::Arbitrary => Constraint::TotalAtMost(max_sum),
        _ => Constraint::MaxEntry(1),
    }
}

fn wide_budget() -> Budget {
    Budget::default().unbounded_size()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut wrong = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            wrong.push(name.to_string());
        }
    };

    let f0 = figures::standard_example();
    let d0 = label_diagram(&f0, Variant::Standard, &Boundary::empty(f0.shape())).unwrap();
    check(
        "standard example",
        d0.border_tableau().seq == seq("e,1,1,11,11,1,1,1,e,e,1,e"),
    );

    let sp = figures::set_partition_example();
    check(
        "vacillating",
        setpartition_to_vacillating(&sp).seq == seq("e,e,1,1,11,11,11,1,2,1,11,1,1,e,e"),
    );
    check(
        "hesitating",
        setpartition_to_hesitating(&sp).seq == seq("e,e,1,1,11,21,11,21,2,21,11,1,1,e,e"),
    );
    check(
        "oscillating",
        matching_to_oscillating(&figures::matching_example()).seq == seq("e,1,11,21,2,1,e"),
    );
    let (pp, tab) = figures::pair_example();
    check(
        "pair with tableau",
        pair_to_vacillating(&pp, &tab).unwrap().seq == seq("e,e,1,1,2,2,2,2,21,21,211,21,21,11,21"),
    );

    let run = figures::running_example();
    let pairs = [
        (Variant::Rsk, t(&[&[1, 1, 2], &[3, 4]]), t(&[&[1, 1, 1], &[2, 2]])),
        (
            Variant::DualRsk,
            t(&[&[1, 1], &[2, 3], &[4]]),
            t(&[&[1, 2], &[1, 2], &[1]]),
        ),
        (
            Variant::RskPrime,
            t(&[&[1, 1], &[2], &[3], &[4]]),
            t(&[&[1, 2], &[1], &[1], &[2]]),
        ),
        (
            Variant::DualRskPrime,
            t(&[&[1, 1, 3, 4], &[2]]),
            t(&[&[1, 1, 1, 2], &[2]]),
        ),
    ];
    for (v, pt, qt) in pairs {
        let d = label_diagram(&run, v, &Boundary::empty(run.shape())).unwrap();
        let expected = (pt, qt);
        check(&format!("(P,Q) {v}"), border_pair(&d).unwrap() == expected);
        check(&format!("insertion {v}"), insert_filling(&run, v).unwrap() == expected);
    }
    let rsk = label_diagram(&run, Variant::Rsk, &Boundary::empty(run.shape())).unwrap();
    check("rsk corner", rsk.label(2, 4) == &p(&[3, 2]));
    let dual = label_diagram(&run, Variant::DualRskPrime, &Boundary::empty(run.shape())).unwrap();
    check("dual rsk' corner", dual.label(2, 4) == &p(&[2, 1, 1, 1]));
    let small = figures::blow_up_example();
    let d6a = label_diagram(&small, Variant::Rsk, &Boundary::empty(small.shape())).unwrap();
    check("blow-up corner", d6a.label(2, 2) == &p(&[3, 2]));
    check(
        "blow-up labels",
        label_via_blow_up(&small, Variant::Rsk).unwrap() == d6a,
    );

    let elapsed = start.elapsed();
    Outcome::new(
        wrong.is_empty(),
        format!(
            "figure goldens exact; mismatches: {wrong:?}; {}",
            timing(elapsed, FIGURES_TARGET)
        ),
    )
}

/// Visits every class-appropriate filling of every shape with at most
/// `ROUND_TRIP_MAX_CELLS` cells.
fn for_each_small_filling(v: Variant, visit: &mut dyn FnMut(&Filling)) -> u64 {
    let budget = wide_budget();
    let mut total = 0;
    for shape in FerrersShape::all_up_to(ROUND_TRIP_MAX_CELLS) {
        total += for_each_entries(
            &shape,
            v.filling_class(),
            class_constraint(v, ROUND_TRIP_MAX_SUM),
            &budget,
            &mut |e| visit(&Filling::new(shape.clone(), e.to_vec()).unwrap()),
        )
        .unwrap();
    }
    total
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut total = 0;
    for v in Variant::ALL {
        total += for_each_small_filling(v, &mut |f| {
            let ok = label_diagram(f, v, &Boundary::empty(f.shape()))
                .and_then(|d| reconstruct(f.shape(), &d.border_tableau()))
                .is_ok_and(|(g, b)| &g == f && b.is_empty());
            if !ok && failures.len() < 3 {
                failures.push(format!("{v}: {}", f.to_json()));
            }
        });
    }
    let elapsed = start.elapsed();
    Outcome::new(
        failures.is_empty(),
        format!(
            "{total} fillings, shapes <= {ROUND_TRIP_MAX_CELLS} cells, sum <= {ROUND_TRIP_MAX_SUM}; failures {failures:?}; {}",
            timing(elapsed, ROUND_TRIP_TARGET)
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut total = 0;
    for v in Variant::ALL {
        total += for_each_small_filling(v, &mut |f| {
            let direct = label_diagram(f, v, &Boundary::empty(f.shape())).unwrap();
            if label_via_blow_up(f, v).ok().as_ref() != Some(&direct) && failures.len() < 3 {
                failures.push(format!("{v}: {}", f.to_json()));
            }
        });
    }
    Outcome::new(failures.is_empty(), format!("{total} fillings; failures {failures:?}"))
}

fn prefix_sum(lambda: &Partition, k: usize) -> usize {
    (0..k).map(|i| lambda[i]).sum()
}

/// Every corner label against the brute-force statistics for k = 1, 2, 3.
fn greene_agrees(f: &Filling, v: Variant) -> bool {
    let d = label_diagram(f, v, &Boundary::empty(f.shape())).unwrap();
    let (first, second) = v.greene_specs();
    let ok = d.corners().all(|((x, y), lambda)| {
        let a = greene_values(f.shape(), &f.entries(), &first, 3, (x, y)).unwrap();
        let b = greene_values(f.shape(), &f.entries(), &second, 3, (x, y)).unwrap();
        let conj = lambda.conjugate();
        (1..=3).all(|k| a[k - 1] == prefix_sum(lambda, k) && b[k - 1] == prefix_sum(&conj, k))
    });
    ok
}

fn random_filling(rng: &mut ChaCha8Rng, shapes: &[FerrersShape], class: FillingClass) -> Filling {
    let shape = shapes[rng.gen_range(0..shapes.len())].clone();
    let cells = shape.cells();
    let mut f = Filling::empty(shape);
    let units = rng.gen_range(0..=GREENE_MAX_UNITS);
    for _ in 0..units {
        let (c, r) = cells[rng.gen_range(0..cells.len())];
        let v = f.get(c, r);
        if class == FillingClass::Arbitrary || v == 0 {
            f.set(c, r, v + 1).unwrap();
        }
    }
    f
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut exhaustive = Vec::new();
    for stair in [FerrersShape::staircase(5), FerrersShape::staircase(6)] {
        let class = FillingClass::PartialPermutation;
        exhaustive.extend(generate_fillings(&stair, class, Constraint::MaxEntry(1), &wide_budget()).unwrap());
    }
    for f in &exhaustive {
        if !greene_agrees(f, Variant::Standard) {
            failures.push(format!("standard: {}", f.to_json()));
        }
    }
    let shapes: Vec<FerrersShape> = FerrersShape::all_up_to(9)
        .into_iter()
        .filter(|s| s.num_cells() > 0)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(GREENE_SEED);
    for v in [Variant::Rsk, Variant::DualRsk, Variant::RskPrime, Variant::DualRskPrime] {
        for _ in 0..GREENE_RANDOM_PER_VARIANT {
            let f = random_filling(&mut rng, &shapes, v.filling_class());
            if !greene_agrees(&f, v) && failures.len() < 3 {
                failures.push(format!("{v}: {}", f.to_json()));
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        failures.is_empty(),
        format!(
            "{} staircase fillings (n = 5, 6) + {GREENE_RANDOM_PER_VARIANT} random per variant (seed {GREENE_SEED:#x}); failures {failures:?}; {}",
            exhaustive.len(),
            timing(elapsed, GREENE_TARGET)
        ),
    )
}

fn summarize(reports: &[Report]) -> Outcome {
    let passed = reports.iter().all(Report::passed);
    let detail = reports
        .iter()
        .map(|r| {
            let mut s = format!("{} {} ({} checked)", r.check, r.status, r.checked);
            if !r.passed() {
                s.push_str(&format!(": {}", r.notes.join("; ")));
                if let Some(w) = &r.witness {
                    s.push_str(&format!("; witness {w}"));
                }
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" | ");
    Outcome::new(passed, detail)
}

fn criterion_5() -> Outcome {
    let budget = Budget::default();
    let triangles = Instance::shapes((0..=5).map(FerrersShape::bordered_staircase).collect(), u32::MAX);
    let reports = vec![
        verify_theorem(TheoremId::T2, &triangles, &budget).unwrap(),
        verify_theorem(TheoremId::T4, &Instance::set_partitions(5), &budget).unwrap(),
        verify_theorem(TheoremId::T5, &Instance::set_partitions(5), &budget).unwrap(),
        verify_theorem(TheoremId::T6, &Instance::set_partitions(4), &budget).unwrap(),
    ];
    summarize(&reports)
}

fn criterion_6() -> Outcome {
    let budget = Budget::default();
    let shapes = Instance::all_shapes(8, 4);
    summarize(&[
        verify_theorem(TheoremId::T2aNes1, &shapes, &budget).unwrap(),
        verify_theorem(TheoremId::T2aNes2, &shapes, &budget).unwrap(),
    ])
}

fn criterion_7() -> Outcome {
    let budget = Budget::default();
    let symmetric: Vec<FerrersShape> = FerrersShape::all_up_to(9)
        .into_iter()
        .filter(FerrersShape::is_symmetric)
        .collect();
    let count = symmetric.len();
    let pp = Instance::shapes(symmetric.clone(), u32::MAX);
    let arb = Instance::shapes(symmetric, 4);
    let mut out = summarize(&[
        verify_theorem(TheoremId::T2sym, &pp, &budget).unwrap(),
        verify_theorem(TheoremId::T2asym, &arb, &budget).unwrap(),
    ]);
    out.detail = format!("{count} symmetric shapes; {}", out.detail);
    out
}

fn criterion_8() -> Outcome {
    let budget = wide_budget();
    let mut failures = Vec::new();
    let mut total = 0;
    for cols in 1..=4 {
        for rows in 1..=4 {
            if cols.min(rows) > 3 {
                continue;
            }
            let shape = FerrersShape::rectangle(cols, rows);
            for v in [Variant::Rsk, Variant::DualRsk, Variant::RskPrime, Variant::DualRskPrime] {
                let constraint = Constraint::TotalAtMost(INSERTION_MAX_SUM);
                total += for_each_entries(&shape, v.filling_class(), constraint, &budget, &mut |e| {
                    let f = Filling::new(shape.clone(), e.to_vec()).unwrap();
                    let d = label_diagram(&f, v, &Boundary::empty(f.shape())).unwrap();
                    if border_pair(&d).ok() != insert_filling(&f, v).ok() && failures.len() < 3 {
                        failures.push(format!("{v}: {}", f.to_json()));
                    }
                })
                .unwrap();
            }
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("{total} fillings of rectangles up to 3x4 and 4x3, sum <= {INSERTION_MAX_SUM}; failures {failures:?}"),
    )
}

fn criterion_9() -> Outcome {
    let budget = Budget::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    for stack in StackPolyomino::all_up_to(JONSSON_MAX_CELLS) {
        for s in [1, 2] {
            checked += 1;
            let r = jonsson_check(&stack, s, &budget).unwrap();
            if !r.passed() {
                failures.push(format!("{} s={s}: {}", r.instance, r.notes.join("; ")));
            }
        }
    }
    // Open statement: printed, never asserted.
    for (id, shape) in [
        ("staircase(4)", FerrersShape::staircase(4)),
        ("3x3", FerrersShape::rectangle(3, 3)),
    ] {
        let e = explore_ne_se(&shape, id, &budget).unwrap();
        println!("    {} {}: {}", e.status, id, e.notes.join("; "));
    }
    let stack: StackPolyomino = "1,2,3,2".parse().unwrap();
    let e = explore_ne_se(&stack, "stack 1,2,3,2", &budget).unwrap();
    println!("    {} stack 1,2,3,2: {}", e.status, e.notes.join("; "));
    Outcome::new(
        failures.is_empty(),
        format!("{checked} (stack, s) pairs with <= {JONSSON_MAX_CELLS} cells; failures {failures:?}"),
    )
}

/// Bell numbers from the recurrence B(n+1) = sum C(n,k) B(k).
fn bell_oracle(n: usize) -> Vec<u64> {
    let mut bell = vec![1u64];
    for m in 0..n {
        let mut binom = 1u64;
        let mut next = 0;
        for (k, b) in bell.iter().enumerate() {
            next += binom * b;
            binom = binom * (m - k) as u64 / (k + 1) as u64;
        }
        bell.push(next);
    }
    bell
}

/// Noncrossing perfect matchings of `points` by pairing the first point.
fn noncrossing_matchings(points: &[usize]) -> u64 {
    if points.is_empty() {
        return 1;
    }
    (1..points.len())
        .step_by(2)
        .map(|j| noncrossing_matchings(&points[1..j]) * noncrossing_matchings(&points[j + 1..]))
        .sum()
}

fn criterion_10() -> Outcome {
    let budget = Budget::default();
    let oracle = bell_oracle(5);
    let generated: Vec<u64> = (0..=5)
        .map(|n| {
            let shape = FerrersShape::bordered_staircase(n);
            generate_fillings(
                &shape,
                FillingClass::PartialPermutation,
                Constraint::MaxEntry(1),
                &budget,
            )
            .unwrap()
            .len() as u64
        })
        .collect();
    let catalan_oracle = noncrossing_matchings(&[1, 2, 3, 4, 5, 6]);
    // Matchings of {1..6}: a 1 in exactly one of column i and row i from
    // above, for every i.
    let shape = FerrersShape::bordered_staircase(6);
    let se = ChainSpec::SE.with_rectangle();
    let noncrossing = generate_fillings(&shape, FillingClass::PartialPermutation, Constraint::Total(3), &budget)
        .unwrap()
        .into_iter()
        .filter(|f| (1..=6).all(|i| f.col_sum(i) + f.row_sum(7 - i) == 1) && f.longest_chain(&se) < 2)
        .count() as u64;
    Outcome::new(
        generated == oracle && oracle == [1, 1, 2, 5, 15, 52] && noncrossing == catalan_oracle && catalan_oracle == 5,
        format!("Bell generated {generated:?} oracle {oracle:?}; 2-noncrossing matchings of 6 points {noncrossing}, oracle {catalan_oracle}"),
    )
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("figure goldens", criterion_1),
        ("round-trip bijectivity", criterion_2),
        ("blow-up equivalence", criterion_3),
        ("Greene oracle agreement", criterion_4),
        ("crossings and nestings of set partitions", criterion_5),
        ("NES1 / NES2 count and bijection", criterion_6),
        ("symmetric fillings", criterion_7),
        ("insertion equivalence", criterion_8),
        ("stack polyomino column sorting", criterion_9),
        ("Bell and Catalan cardinalities", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        let status = if out.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {name}: {}", i + 1, out.detail);
        if !out.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
