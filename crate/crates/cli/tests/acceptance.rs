//! Acceptance run: one line per criterion with its runtime against the limit.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use tb_core::verify::*;
use tb_core::Result;

const SEED: u64 = 0;

fn all(checks: Vec<CheckResult>) -> std::result::Result<(), String> {
    let failed: Vec<String> = checks
        .into_iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail.unwrap_or_default()))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(failed.join("; "))
    }
}

fn collect(parts: Vec<Result<CheckResult>>) -> std::result::Result<(), String> {
    all(parts.into_iter().collect::<Result<Vec<_>>>().map_err(|e| e.to_string())?)
}

fn artin() -> std::result::Result<(), String> {
    let mut parts: Vec<_> = (2..=8).map(artin_relations).collect();
    parts.push(artin_product_invariant(6, 500, 50, SEED));
    collect(parts)
}

fn transversal() -> std::result::Result<(), String> {
    collect((4..=6).map(transversal_identity).collect())
}

fn kernel() -> std::result::Result<(), String> {
    collect(vec![kernel_soundness(&[4, 5, 6, 7], 200, 20, SEED)])
}

fn gn_suite() -> std::result::Result<(), String> {
    let mut parts = Vec::new();
    for n in 4..=7 {
        parts.push(gn_presentation(n));
        parts.push(gn_commutator_law(n, 1000, SEED));
        parts.push(gn_sij_table(n));
        parts.push(gn_embedding(n, 100, SEED));
        parts.push(gn_automorphisms(n, 50, SEED));
        parts.push(gn_braid_relations(n));
        parts.push(gn_squares_conjugation(n, 100, SEED));
        parts.push(gn_hurwitz(n));
    }
    collect(parts)
}

fn lambda() -> std::result::Result<(), String> {
    let mut parts = Vec::new();
    for n in [5, 6] {
        parts.push(lambda_homomorphism(n, 500, SEED));
        parts.push(lambda_equivariance(n, 500, SEED));
        parts.push(lambda_linking(n, 500, SEED));
        parts.push(lift_round_trip(n, 200, SEED));
        parts.push(section_independence(n, 200, SEED));
    }
    collect(parts)
}

fn structure() -> std::result::Result<(), String> {
    let mut parts: Vec<_> = (4..=7).map(c_structure).collect();
    parts.push(adjacent_squares(5, 50, SEED));
    parts.push(adjacent_squares(6, 50, SEED));
    parts.push(degree_law(7, 500, 40, SEED));
    collect(parts)
}

fn primes() -> std::result::Result<(), String> {
    let mut parts = Vec::new();
    for n in 4..=7 {
        parts.push(prime_frame(n, SEED));
    }
    parts.push(prime_spot_checks(5, 50, SEED));
    parts.push(prime_identities(5, 50, SEED));
    collect(parts)
}

fn prop71() -> std::result::Result<(), String> {
    collect(vec![orbit_criterion_examples(5, 3, SEED)])
}

fn transport() -> std::result::Result<(), String> {
    collect(vec![transport_uniqueness(5, 20, 5, SEED)])
}

fn tb(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_tb")).args(args).output().expect("run tb");
    (String::from_utf8_lossy(&out.stdout).into_owned(), out.status.code().unwrap_or(-1))
}

fn cli() -> std::result::Result<(), String> {
    let mut errors = Vec::new();
    let mut expect = |args: &[&str], stdout: Option<&str>, code: i32| {
        let (got, status) = tb(args);
        let text_ok = stdout.is_none_or(|s| got == s);
        if !text_ok || status != code {
            errors.push(format!("{args:?}: exit {status}, stdout {got:?}"));
        }
        got
    };
    let tc = "2 -3 -1 2 1 3 -2 -3 -1 -2 1 3";
    expect(&["--json", "--n", "5", "eq", "--group", "tbn", tc, ""], Some("\"equal\"\n"), 0);
    expect(&["--json", "--n", "4", "nf", "1 1"], Some("{\"perm\":[1,2,3,4],\"bit\":0,\"vec\":[1,0,0,0]}\n"), 0);
    let summary = expect(&["--json", "--n", "5", "verify", "all", "--cases", "200", "--seed", "0"], None, 0);
    match serde_json::from_str::<serde_json::Value>(&summary) {
        Ok(v) if v["result"] == "pass" => {}
        _ => errors.push(format!("verify summary is not a passing JSON document: {summary:.200}")),
    }
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors.join("; "))
    }
}

type Criterion = (&'static str, u64, fn() -> std::result::Result<(), String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("artin faithfulness", 5, artin),
        ("transversal commutator identity", 1, transversal),
        ("kernel suite", 10, kernel),
        ("G(n) presentation and action", 10, gn_suite),
        ("Lambda coherence", 20, lambda),
        ("structure constants", 10, structure),
        ("prime machinery", 30, primes),
        ("orbit criterion", 30, prop71),
        ("transport uniqueness", 10, transport),
        ("CLI conformance", 60, cli),
    ];
    let mut failures = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(*limit);
        let status = if result.is_ok() && in_time { "PASS" } else { "FAIL" };
        println!("criterion {:2} {status} {name} ({:.2} s, limit {limit} s)", k + 1, took.as_secs_f64());
        if let Err(e) = &result {
            println!("    {e}");
        } else if !in_time {
            println!("    over time limit");
        }
        if status == "FAIL" {
            failures += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
