//! Acceptance criteria 1–10: runs each suite at its default grid and prints
//! one PASS/FAIL line per criterion.  All comparisons are exact equality of
//! Laurent quasi-polynomials over ℤ[parameters].
//!
//! A criterion whose statement fails as literally written prints FAIL with
//! the reason; the process only exits non-zero when a check that is
//! expected to hold fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use heckelab::hecke;
use heckelab::verify::{run_suite, Report, Status, SuiteConfig};

struct Outcome {
    /// Whether the criterion holds as stated.
    holds: bool,
    /// Whether every check that is expected to hold passed.
    expected: bool,
    detail: String,
}

fn run(suite: &str) -> Report {
    let config = SuiteConfig::default_for(suite).expect("known suite");
    run_suite(&config).expect("suite runs")
}

fn tally(report: &Report) -> BTreeMap<(String, &'static str), usize> {
    let mut out = BTreeMap::new();
    for c in &report.checks {
        *out.entry((c.id.clone(), c.status.name())).or_insert(0) += 1;
    }
    out
}

fn comparisons(report: &Report, id: &str) -> u64 {
    report
        .checks
        .iter()
        .filter(|c| c.id == id)
        .map(|c| c.instance["comparisons"].as_u64().unwrap_or(0))
        .sum()
}

fn counts(report: &Report, id: &str) -> (usize, usize) {
    let total = report.checks.iter().filter(|c| c.id == id).count();
    let pass = report
        .checks
        .iter()
        .filter(|c| c.id == id && c.status == Status::Pass)
        .count();
    (pass, total)
}

fn plain(report: &Report, ids: &[&str]) -> Outcome {
    let ok = report.passed() && report.count(Status::Skipped) == 0;
    let mut parts = Vec::new();
    for id in ids {
        let (p, t) = counts(report, id);
        parts.push(format!("{id} {p}/{t} ({} comparisons)", comparisons(report, id)));
        if t == 0 {
            return Outcome {
                holds: false,
                expected: false,
                detail: format!("no `{id}` checks were produced"),
            };
        }
    }
    Outcome {
        holds: ok,
        expected: ok,
        detail: parts.join(", "),
    }
}

fn criterion_1() -> Outcome {
    let r = run("hecke-axioms");
    plain(&r, &["quadratic", "braid", "commutation", "inverse"])
}

fn criterion_2() -> Outcome {
    let r = run("n1-degeneration");
    plain(&r, &["met-equals-pol", "met-dw-equals-dw-chain", "d_m-intertwiner"])
}

fn criterion_3() -> Outcome {
    let r = run("thm-main-HA");
    let mut o = plain(&r, &["main-HA", "PBW-1pm"]);
    // Every (w, ŵ) ∈ W² for 10 f and both signs: |W| records of |W| comparisons.
    for (label, order) in [("GL2", 2u64), ("GL3", 6), ("B2", 8)] {
        let n: u64 = r
            .checks
            .iter()
            .filter(|c| c.id == "main-HA" && c.instance["system"] == label)
            .map(|c| c.instance["comparisons"].as_u64().unwrap_or(0))
            .sum();
        if n != order * order * 10 * 2 {
            o.holds = false;
            o.expected = false;
            o.detail.push_str(&format!("; {label}: {n} pair evaluations"));
        }
    }
    o
}

fn criterion_4() -> Outcome {
    let r = run("xt-formula");
    plain(&r, &["XT-formula", "gammas", "XT-met", "met-coeffs"])
}

fn criterion_5() -> Outcome {
    let r = run("qp-duality");
    plain(&r, &["qp-gamma-closed", "qp-main"])
}

fn criterion_6() -> Outcome {
    let r = run("met-duality");
    let mut o = plain(
        &r,
        &["met-plus-main", "met-minus-main", "coeffs-w0", "whitt-arb", "phi-to-gamma", "W-theta-sum"],
    );
    for mode in ["equal", "specialized"] {
        if !r.checks.iter().any(|c| c.instance["mode"] == mode) {
            o.holds = false;
            o.expected = false;
            o.detail.push_str(&format!("; no {mode} checks"));
        }
    }
    o
}

fn criterion_7() -> Outcome {
    let r = run("thm-1.1-GLr");
    plain(
        &r,
        &["support", "operator-form", "parahoric-form", "specialization-consistency"],
    )
}

fn criterion_8() -> Outcome {
    let r = run("casselman-shalika");
    plain(&r, &["casselman-shalika", "iwahori-sum"])
}

fn criterion_9() -> Outcome {
    let r = run("eps-symmetric");
    let t = tally(&r);
    let get = |id: &str, s: &'static str| t.get(&(id.to_string(), s)).copied().unwrap_or(0);
    let expected = r.passed()
        && ["eps-test-iff-conditions", "phi-bijection", "quasi-duality-normalized"]
            .iter()
            .all(|id| get(id, "pass") > 0 && get(id, "fail") == 0);
    let literal_bad = get("quasi-duality-literal", "discrepancy");
    let literal_total = literal_bad + get("quasi-duality-literal", "pass");
    let bij = r
        .checks
        .iter()
        .find(|c| c.id == "phi-bijection")
        .map(|c| c.instance["inputs"].as_u64().unwrap_or(0))
        .unwrap_or(0);
    Outcome {
        holds: expected && literal_bad == 0,
        expected,
        detail: format!(
            "test ⟺ conditions {}/{}; φ round trip on {bij} inputs per system; \
             quasi-duality as stated fails at {literal_bad}/{literal_total} alcove points, \
             with normalizing scalar κ {}/{}",
            get("eps-test-iff-conditions", "pass"),
            get("eps-test-iff-conditions", "pass") + get("eps-test-iff-conditions", "fail"),
            get("quasi-duality-normalized", "pass"),
            get("quasi-duality-normalized", "pass") + get("quasi-duality-normalized", "fail"),
        ),
    }
}

fn criterion_10(before: (u64, u64)) -> Outcome {
    let r = run("nabla-oracle");
    let (checks, failures) = hecke::nabla_oracle_counts();
    let (checks, failures) = (checks - before.0, failures - before.1);
    let ok = r.passed() && failures == 0 && checks > 0;
    Outcome {
        holds: ok,
        expected: ok,
        detail: format!(
            "{checks} divided differences re-derived by exact division, {failures} residues; \
             nabla-vs-division {}/{}",
            counts(&r, "nabla-vs-division").0,
            counts(&r, "nabla-vs-division").1
        ),
    }
}

fn main() -> ExitCode {
    // Every ∇ evaluated by criteria 1–9 is re-checked against exact
    // division (criterion 10).
    hecke::set_nabla_oracle(true);
    let before = hecke::nabla_oracle_counts();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("Hecke axioms for π, π^qp, π^m", Box::new(criterion_1)),
        ("n = 1 degeneration", Box::new(criterion_2)),
        ("Hecke-algebra matrix coefficients", Box::new(criterion_3)),
        ("XT formulas and γ-coefficients", Box::new(criterion_4)),
        ("quasi-polynomial duality", Box::new(criterion_5)),
        ("metaplectic duality", Box::new(criterion_6)),
        ("GL_r parahoric–metaplectic duality", Box::new(criterion_7)),
        ("Casselman–Shalika cross-check", Box::new(criterion_8)),
        ("ε-symmetric quasi-polynomials", Box::new(criterion_9)),
    ];
    let mut all_expected = true;
    let mut report = |k: usize, name: &str, o: Outcome, secs: f64| {
        let verdict = if o.holds { "PASS" } else { "FAIL" };
        println!("criterion {k:>2} [{verdict}] {name}: {} ({secs:.1}s)", o.detail);
        all_expected &= o.expected;
    };
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        report(k + 1, name, o, start.elapsed().as_secs_f64());
    }
    let start = Instant::now();
    let o = criterion_10(before);
    report(10, "divided differences vs exact division", o, start.elapsed().as_secs_f64());
    hecke::set_nabla_oracle(false);
    if all_expected {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
