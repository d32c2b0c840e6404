//! Acceptance run: one PASS/FAIL line per criterion. Criterion 10 is
//! reported but never fails the run.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use warpdeg::families::{ozawa_twist, twist_minimal};
use warpdeg::oracle::{kauffman_bracket, min_changes_to_monotone, random_gauss_code};
use warpdeg::table::{e_hat_bounds, knot_e, knot_md, structural_identities, KnotTableEntry, Table};
use warpdeg::{summary, warping_degree, OrientedDiagram};

const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn entry<'a>(t: &'a Table, name: &str) -> Result<&'a KnotTableEntry, String> {
    t.get(name).ok_or_else(|| format!("{name} missing from the table"))
}

fn pair(d: &OrientedDiagram) -> (usize, usize) {
    let s = summary(d).unwrap();
    (s.d_fwd.min(s.d_rev), s.d_fwd.max(s.d_rev))
}

fn all_diagrams(t: &Table) -> impl Iterator<Item = &OrientedDiagram> {
    t.entries
        .iter()
        .flat_map(|e| e.minimal_diagrams.iter().chain(&e.extra_diagrams))
        .map(|d| &d.diagram)
}

fn classification(t: &Table) -> Outcome {
    let mut seen = Vec::new();
    for e in &t.entries {
        let (v, _) = knot_e(e);
        ensure(v != 1, || format!("{} has e=1", e.name))?;
        ensure((v == 0) == e.is_trivial(), || format!("{} has e={v}", e.name))?;
        ensure((v == 2) == (e.name == "3_1"), || format!("{} has e={v}", e.name))?;
        ensure((v == 3) == (e.name == "4_1"), || format!("{} has e={v}", e.name))?;
        seen.push(e.name.as_str());
    }
    for name in ["0_1", "3_1", "4_1"] {
        ensure(seen.contains(&name), || format!("{name} missing"))?;
    }
    Ok(format!("{} entries classified", seen.len()))
}

fn crossing_bound(t: &Table) -> Outcome {
    let mut equalities = 0;
    for e in t.entries.iter().filter(|e| !e.is_trivial()) {
        let (v, exact) = knot_e(e);
        let c = e.crossing_number;
        ensure(v < c, || format!("{}: e={v} c={c}", e.name))?;
        if e.prime && e.alternating {
            ensure(v + 1 == c && exact, || format!("{}: e={v} c={c}", e.name))?;
            equalities += 1;
        }
    }
    for (name, want) in [("7_6", 6), ("8_12", 7), ("5_1", 4), ("5_2", 4)] {
        let (v, _) = knot_e(entry(t, name)?);
        ensure(v == want, || format!("e({name})={v}, want {want}"))?;
    }
    ensure(equalities == 32, || format!("{equalities} prime alternating entries, want 32"))?;
    Ok(format!("{equalities} prime alternating entries with e=c-1"))
}

fn orientation_splits(t: &Table) -> Outcome {
    for (name, want, e_want) in [("7_6", [(2, 4), (3, 3)], 6), ("8_12", [(2, 5), (3, 4)], 7)] {
        let e = entry(t, name)?;
        let mut got: Vec<_> = e.minimal_diagrams.iter().map(|d| pair(&d.diagram)).collect();
        got.sort_unstable();
        ensure(got == want, || format!("{name}: pairs {got:?}"))?;
        ensure(got.iter().all(|(a, b)| a + b == e_want), || format!("{name}: e differs"))?;
    }
    Ok("7_6 {3,3} {2,4}; 8_12 {3,4} {2,5}".into())
}

fn sum_four(t: &Table) -> Outcome {
    for name in ["8_21", "granny"] {
        let e = entry(t, name)?;
        let (v, _) = knot_e(e);
        ensure(v == 4, || format!("e({name})={v}"))?;
        let first = kauffman_bracket(&e.minimal_diagrams[0].diagram).unwrap();
        let witness = e
            .minimal_diagrams
            .iter()
            .find(|d| summary(&d.diagram).unwrap().e == 4)
            .ok_or_else(|| format!("{name}: no witness"))?;
        ensure(witness.diagram.crossing_count() == e.crossing_number, || format!("{name}: witness not minimal"))?;
        ensure(kauffman_bracket(&witness.diagram).unwrap().matches_up_to_mirror(&first), || {
            format!("{name}: witness bracket differs")
        })?;
    }
    Ok("e(8_21)=4, e(granny)=4".into())
}

fn twist_law() -> Outcome {
    for n in 1..=12usize {
        let s = summary(&twist_minimal(n as i64).unwrap()).unwrap();
        let p = (s.d_fwd.min(s.d_rev), s.d_fwd.max(s.d_rev));
        let want = if n % 2 == 1 { ((n + 1) / 2, (n + 1) / 2) } else { (n / 2, (n + 2) / 2) };
        ensure(p == want, || format!("n={n}: pair {p:?}, want {want:?}"))?;
        ensure(p.0 == (n + 1) / 2 && s.e == n + 1, || format!("n={n}: md={} e={}", p.0, s.e))?;
    }
    Ok("n=1..12".into())
}

fn ozawa_law() -> Outcome {
    for n in 1..=12i64 {
        let d = ozawa_twist(n).unwrap();
        let s = summary(&d).unwrap();
        ensure(s.e == 2, || format!("n={n}: e={}", s.e))?;
        if n <= 6 {
            let same = kauffman_bracket(&d).unwrap() == kauffman_bracket(&twist_minimal(n).unwrap()).unwrap();
            ensure(same, || format!("n={n}: bracket differs from the twist knot"))?;
        }
    }
    Ok("e=2 for n=1..12, brackets match for n=1..6".into())
}

fn oracle_agrees(d: &OrientedDiagram) -> Result<(), String> {
    for x in [d.clone(), d.reverse()] {
        let slow = min_changes_to_monotone(&x, x.crossing_count()).map_err(|e| e.to_string())?;
        ensure(slow.min_changes == warping_degree(&x), || format!("{}: oracle disagrees", x.to_gauss()))?;
    }
    Ok(())
}

fn oracle_equivalence(t: &Table) -> Outcome {
    let mut count = 0;
    for d in all_diagrams(t).filter(|d| d.crossing_count() <= 10) {
        oracle_agrees(d)?;
        count += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..200 {
        let c = rng.gen_range(1..=8);
        oracle_agrees(&OrientedDiagram::from_gauss(&random_gauss_code(c, &mut rng)))?;
    }
    Ok(format!("{count} bundled diagrams and 200 random codes"))
}

fn structure(t: &Table) -> Outcome {
    let mut count = 0;
    for d in all_diagrams(t) {
        structural_identities(d).map_err(|m| format!("{}: {m}", d.to_gauss()))?;
        count += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for _ in 0..500 {
        let c = rng.gen_range(0..=10);
        let d = OrientedDiagram::from_gauss(&random_gauss_code(c, &mut rng));
        structural_identities(&d).map_err(|m| format!("{}: {m}", d.to_gauss()))?;
    }
    Ok(format!("{count} bundled diagrams and 500 random codes"))
}

fn low_sum_md(t: &Table) -> Outcome {
    let mut hits = Vec::new();
    for e in &t.entries {
        let (v, exact) = knot_e(e);
        if exact && (v == 4 || v == 5) {
            let (md, _) = knot_md(e);
            ensure(md == 2, || format!("{}: e={v} md={md}", e.name))?;
            hits.push(e.name.clone());
        }
    }
    ensure(!hits.is_empty(), || "no entry with exact e in {4,5}".into())?;
    Ok(format!("md=2 for {}", hits.join(" ")))
}

fn six_three(t: &Table) -> Outcome {
    let e = entry(t, "6_3")?;
    let reference = kauffman_bracket(&e.minimal_diagrams[0].diagram).unwrap();
    let verified = e.extra_diagrams.iter().any(|d| {
        summary(&d.diagram).unwrap().e == 4 && kauffman_bracket(&d.diagram).unwrap().matches_up_to_mirror(&reference)
    });
    match e_hat_bounds(e) {
        (4, 4) if verified => Ok("e_hat(6_3) = 4, realized by a 7-crossing diagram".into()),
        (4, 4) => Err("bounds (4,4) rest on an unverified diagram".into()),
        (4, 5) => Err("conditional: bounds (4,5), no verified diagram with e=4".into()),
        other => Err(format!("unexpected bounds {other:?}")),
    }
}

fn main() {
    let table = Table::bundled();
    assert!(table.rejected.is_empty(), "bundled table has bad records: {:?}", table.rejected);

    let criteria: Vec<(u32, &str, Duration, Box<dyn Fn() -> Outcome + '_>, bool)> = vec![
        (1, "classification endpoints", Duration::from_secs(1), Box::new(|| classification(&table)), true),
        (2, "crossing-number bound", Duration::from_secs(1), Box::new(|| crossing_bound(&table)), true),
        (3, "orientation splits", Duration::from_secs(1), Box::new(|| orientation_splits(&table)), true),
        (4, "warping sum four off the alternating primes", Duration::from_secs(5), Box::new(|| sum_four(&table)), true),
        (5, "twist knot degrees", Duration::from_secs(1), Box::new(twist_law), true),
        (6, "two-arc twist diagrams", Duration::from_secs(30), Box::new(ozawa_law), true),
        (7, "oracle equivalence", Duration::from_secs(30), Box::new(|| oracle_equivalence(&table)), true),
        (8, "structural identities", Duration::from_secs(10), Box::new(|| structure(&table)), true),
        (9, "md for warping sum 4 or 5", Duration::from_secs(1), Box::new(|| low_sum_md(&table)), true),
        (10, "reduced warping sum of 6_3", Duration::from_secs(30), Box::new(|| six_three(&table)), false),
    ];

    let mut failed = Vec::new();
    for (id, title, budget, run, blocking) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let slow = took > *budget;
        let (status, detail) = match (&outcome, slow) {
            (Ok(msg), false) => ("PASS", msg.clone()),
            (Ok(msg), true) => ("FAIL", format!("{msg}; took {took:.2?}, budget {budget:?}")),
            (Err(msg), _) if !blocking => ("FLAG", msg.clone()),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        println!("criterion {id:>2} {status} {title}: {detail} [{took:.2?}]");
        if status == "FAIL" {
            failed.push(*id);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
