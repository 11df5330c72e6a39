//! Acceptance suite. Prints one line per criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};

use indset::bijection::{
    from_sequence, independent_selections, to_sequence, valid_sequences, OddEvenSeq,
};
use indset::genfunc::{
    binomial_transform, g3_closed_form, g3_via_aux, g3_via_eq1, g3_via_eq2, gf_from_transfer,
    min_recurrence, p_gf, paper_gf, pell, verify_propp_row,
};
use indset::graphs::{build_graph, EdgeInterpretation, Family, FamilySpec};
use indset::oracle::{count_independent_sets, sweep};
use indset::transfer::{count, count_series};
use indset::IntPolynomial;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn same_counts(a: Family, b: Family, ell: usize, n_max: usize) -> Outcome {
    let (x, y) = (
        count_series(a, ell, n_max).map_err(err)?,
        count_series(b, ell, n_max).map_err(err)?,
    );
    ensure(x == y, || format!("{a}_{ell} and {b}_{ell} differ for some n <= {n_max}"))
}

fn gf_equality(family: Family) -> Outcome {
    for ell in 3..=6 {
        let computed = gf_from_transfer(family, ell).map_err(err)?;
        let published = paper_gf(family, ell).map_err(err)?;
        ensure(computed == published, || {
            format!("{family}_{ell}: computed {computed}, published {published}")
        })?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let got = count_series(Family::G, 3, 9).map_err(err)?;
    let want = big(&[1, 4, 14, 48, 164, 560, 1912, 6528, 22288, 76096]);
    ensure(got == want, || format!("got {got:?}"))
}

fn criterion_2() -> Outcome {
    gf_equality(Family::G)
}

fn criterion_3() -> Outcome {
    gf_equality(Family::R)?;
    let got = count_series(Family::R, 3, 8).map_err(err)?;
    ensure(got == big(&[1, 4, 10, 28, 76, 208, 568, 1552, 4240]), || {
        format!("r_3 prefix {got:?}")
    })
}

fn criterion_4() -> Outcome {
    gf_equality(Family::K)?;
    same_counts(Family::K, Family::G, 3, 20)
}

fn criterion_5() -> Outcome {
    for ell in 3..=12 {
        let computed = gf_from_transfer(Family::P, ell).map_err(err)?;
        let l = ell as i64;
        let expected = indset::RationalGF::from_i64s(&[1, 2], &[1, 1 - l, -2]).map_err(err)?;
        ensure(computed == expected, || format!("p_{ell}: {computed}"))?;
        ensure(computed == p_gf(ell).map_err(err)?, || format!("p_gf({ell})"))?;
        ensure(verify_propp_row(ell).map_err(err)?, || {
            format!("row identity fails for ell = {ell}")
        })?;
    }
    let got = count_series(Family::P, 4, 9).map_err(err)?;
    ensure(
        got == big(&[1, 5, 17, 61, 217, 773, 2753, 9805, 34921, 124373]),
        || format!("p_4 prefix {got:?}"),
    )?;
    same_counts(Family::P, Family::R, 3, 20)
}

fn criterion_6() -> Outcome {
    let g3 = count_series(Family::G, 3, 50).map_err(err)?;
    for (n, t) in g3.iter().enumerate() {
        ensure(g3_closed_form(n) == *t, || format!("closed form at n = {n}"))?;
        ensure(g3_via_eq1(n) == *t, || format!("three-term recurrence at n = {n}"))?;
        ensure(g3_via_eq2(n) == *t, || format!("two-term recurrence at n = {n}"))?;
        ensure(g3_via_aux(n) == *t, || format!("auxiliary recursion at n = {n}"))?;
    }
    let prefix: Vec<BigInt> = g3[..12].iter().cloned().map(BigInt::from).collect();
    let c = min_recurrence(&prefix).map_err(err)?;
    ensure(c == IntPolynomial::from_i64s(&[1, -4, 2]), || {
        format!("minimal recurrence {c}")
    })?;
    let lhs = IntPolynomial::from_i64s(&[1, -2, -6, 4]);
    let rhs = &IntPolynomial::from_i64s(&[1, -4, 2]) * &IntPolynomial::from_i64s(&[1, 2]);
    ensure(lhs == rhs, || format!("{lhs} != {rhs}"))
}

fn criterion_7() -> Outcome {
    let pells: Vec<BigUint> = (0..20).map(pell).collect();
    let mut want = vec![BigUint::from(0u32)];
    want.extend(count_series(Family::G, 3, 18).map_err(err)?);
    let got = binomial_transform(&pells);
    ensure(got == want, || format!("got {got:?}"))
}

fn oracle_matches(family: Family, ell: usize, n: usize, interp: EdgeInterpretation) -> Outcome {
    let spec = FamilySpec::new(family, ell, n).map_err(err)?;
    let graph = build_graph(&spec, interp).map_err(err)?;
    let brute = count_independent_sets(&graph).map_err(err)?;
    let transfer = count(&spec).map_err(err)?;
    ensure(brute == transfer, || {
        format!("{family} ell={ell} n={n} {interp}: oracle {brute}, transfer {transfer}")
    })
}

fn criterion_8() -> Outcome {
    for ell in 3..=5 {
        for n in 1..=20 / ell {
            oracle_matches(Family::G, ell, n, EdgeInterpretation::Literal)?;
        }
    }
    for family in Family::ALL {
        for ell in [3, 4] {
            for n in 1..=3 {
                oracle_matches(family, ell, n, EdgeInterpretation::AlgorithmConsistent)?;
            }
        }
    }
    Ok(())
}

fn consistency_report() -> Result<String, String> {
    let reports = sweep(
        &[Family::R, Family::K, Family::P],
        &[3, 4],
        &[1, 2, 3],
        EdgeInterpretation::Literal,
    )
    .map_err(err)?;
    serde_json::to_string_pretty(&reports).map_err(err)
}

fn criterion_9() -> Outcome {
    let first = consistency_report()?;
    let second = consistency_report()?;
    ensure(first == second, || "report differs between runs".into())?;

    let rows: Vec<serde_json::Value> = serde_json::from_str(&first).map_err(err)?;
    ensure(rows.len() == 18, || format!("{} rows, expected 18", rows.len()))?;
    let fields = [
        "family",
        "ell",
        "n",
        "interpretation",
        "oracle_count",
        "transfer_count",
        "agree",
    ];
    for row in &rows {
        ensure(fields.iter().all(|f| row.get(f).is_some()), || {
            format!("incomplete row {row}")
        })?;
    }
    let reparsed = serde_json::to_string_pretty(&rows).map_err(err)?;
    ensure(reparsed == first, || "report does not round-trip".into())?;

    let disagreeing: Vec<String> = rows
        .iter()
        .filter(|r| r["n"].as_u64().is_some_and(|n| n <= 2) && r["agree"] != true)
        .map(|r| {
            format!(
                "{}_{} n={}: oracle {} vs transfer {}",
                r["family"].as_str().unwrap_or("?"),
                r["ell"],
                r["n"],
                r["oracle_count"],
                r["transfer_count"]
            )
        })
        .collect();
    ensure(disagreeing.is_empty(), || {
        format!("n <= 2 rows disagree: {}", disagreeing.join("; "))
    })
}

fn seq(text: &str, n: usize) -> Result<OddEvenSeq, String> {
    let members = text.chars().filter_map(|c| c.to_digit(10)).collect();
    OddEvenSeq::new(members, n).map_err(err)
}

fn criterion_10() -> Outcome {
    let p4 = count_series(Family::P, 4, 8).map_err(err)?;
    for (n, expected) in p4.iter().enumerate().skip(1) {
        let found = valid_sequences(n).map_err(err)?.len();
        ensure(BigUint::from(found) == *expected, || {
            format!("n = {n}: {found} sequences, p_4 = {expected}")
        })?;
    }
    for n in 1..=5 {
        for sel in independent_selections(n).map_err(err)? {
            let s = to_sequence(&sel).map_err(err)?;
            let back = from_sequence(&s, n).map_err(err)?;
            ensure(back == sel, || format!("{sel} -> {s} -> {back}"))?;
        }
        for s in valid_sequences(n).map_err(err)? {
            let sel = from_sequence(&s, n).map_err(err)?;
            let again = to_sequence(&sel).map_err(err)?;
            ensure(again == s, || format!("{s} -> {sel} -> {again}"))?;
        }
    }
    let n1: Vec<String> = valid_sequences(1)
        .map_err(err)?
        .iter()
        .map(ToString::to_string)
        .collect();
    ensure(n1 == ["ε", "12", "123", "2", "23"], || format!("n = 1 list {n1:?}"))?;

    // set <-> sequence pairs in P_4^3
    let pairs = [
        ("4567", "{45,[5]67}"),
        ("467", "{4,[5]67}"),
        ("1256", "{12,[5]6}"),
        ("3467", "{[3]4,67}"),
    ];
    for (text, set) in pairs {
        let sel = from_sequence(&seq(text, 3)?, 3).map_err(err)?;
        ensure(sel.to_string() == set, || format!("{text} -> {sel}, expected {set}"))?;
        let s = to_sequence(&sel).map_err(err)?;
        ensure(s.to_string() == text, || format!("{set} -> {s}, expected {text}"))?;
    }

    let lines = [
        ("1256", "(12,ε,[5]6)", "{12,[5]6}"),
        ("4567", "(ε,45,[5]67)", "{45,[5]67}"),
    ];
    for (text, tuple, set) in lines {
        let sel = from_sequence(&seq(text, 3)?, 3).map_err(err)?;
        ensure(sel.tuple() == tuple && sel.to_string() == set, || {
            format!("{text} -> {} {sel}", sel.tuple())
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("g_3 series prefix", criterion_1),
        ("G generating functions, ell 3..6", criterion_2),
        ("R generating functions and r_3 prefix", criterion_3),
        ("K generating functions and k_3 = g_3", criterion_4),
        ("P generating functions, p_4 prefix, row identity", criterion_5),
        ("g_3 closed forms and minimal recurrence", criterion_6),
        ("Pell binomial transform", criterion_7),
        ("brute-force oracle equivalence", criterion_8),
        ("literal-graph consistency report", criterion_9),
        ("odd-neighbor sequence bijection", criterion_10),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}  PASS  {name}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}  FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
