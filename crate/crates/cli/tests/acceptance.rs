//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! (with report lines above it where a criterion measures something), and
//! exits nonzero if any criterion failed.
//!
//! Reference values come from the oracles in [`oracle`], which work on plain
//! `i128` and share no code with the library.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use fangcheng::corpus::{
    random_nonsingular_system, random_tableau, random_with_nonzero_minors, trial_rng,
};
use fangcheng::detkit::{det_oracle, det_via_chio, OracleMethod, SquareMatrix};
use fangcheng::diagonalize::{hart_backward, hart_solution, Moderation};
use fangcheng::eliminate::{forward_eliminate, forward_step, PivotPolicy, PivotStrategy};
use fangcheng::report::{run_trial, Pipeline};
use fangcheng::solve::{solve_system, Finish, SolveOptions};
use fangcheng::wellprob::{build_well_system, closed_form_det};
use fangcheng::{generic_tableau, Error, Integer, OpTally, Ring, Tableau};
use rand::Rng;

const SEED: u64 = 20_240_601;

mod oracle {
    /// Laplace expansion along the first remaining row.
    pub fn det(a: &[Vec<i128>]) -> i128 {
        let cols: Vec<usize> = (0..a.len()).collect();
        expand(a, 0, &cols)
    }

    fn expand(a: &[Vec<i128>], row: usize, cols: &[usize]) -> i128 {
        if cols.len() == 1 {
            return a[row][cols[0]];
        }
        let mut acc = 0;
        for (pos, &c) in cols.iter().enumerate() {
            if a[row][c] == 0 {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a[row][c] * expand(a, row + 1, &rest);
            acc += if pos % 2 == 0 { term } else { -term };
        }
        acc
    }

    /// Determinant of the rows and columns picked out of `a`.
    pub fn minor(a: &[Vec<i128>], rows: &[usize], cols: &[usize]) -> i128 {
        let sub: Vec<Vec<i128>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| a[i][j]).collect())
            .collect();
        det(&sub)
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    pub fn fraction(num: i128, den: i128) -> String {
        assert!(den != 0);
        let g = gcd(num, den);
        let (mut p, mut q) = (num / g, den / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        if q == 1 {
            p.to_string()
        } else {
            format!("{p}/{q}")
        }
    }

    /// Cramer's rule on an `n x (n+1)` augmented matrix.
    pub fn cramer(aug: &[Vec<i128>]) -> Vec<String> {
        let n = aug.len();
        let a: Vec<Vec<i128>> = aug.iter().map(|r| r[..n].to_vec()).collect();
        let d = det(&a);
        (0..n)
            .map(|j| {
                let aj: Vec<Vec<i128>> = aug
                    .iter()
                    .map(|r| (0..n).map(|c| if c == j { r[n] } else { r[c] }).collect())
                    .collect();
                fraction(det(&aj), d)
            })
            .collect()
    }
}

struct Verdict {
    pass: bool,
    detail: String,
    report: Vec<String>,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
            report: Vec::new(),
        }
    }

    fn with_report(mut self, report: Vec<String>) -> Self {
        self.report = report;
        self
    }
}

fn to_i128(t: &Tableau<Integer>) -> Vec<Vec<i128>> {
    t.iter_rows()
        .map(|r| r.iter().map(|v| v.to_string().parse().unwrap()).collect())
        .collect()
}

fn int(v: i128) -> Integer {
    v.to_string().parse().unwrap()
}

fn strings<T: ToString>(vs: &[T]) -> Vec<String> {
    vs.iter().map(ToString::to_string).collect()
}

fn criterion_1() -> Verdict {
    let mut failures = Vec::new();
    let mut resamples = 0;
    for r in 0..200u64 {
        let n = 3 + (r as usize % 4);
        let sample = random_with_nonzero_minors(&mut trial_rng(SEED, r), n, n + 1, 9);
        resamples += sample.resamples;
        let a = to_i128(&sample.tableau);
        let echelon =
            match forward_eliminate(&sample.tableau, PivotStrategy::Chio, PivotPolicy::Strict) {
                Ok((e, _)) => e,
                Err(e) => {
                    failures.push(format!("trial {r}: {e}"));
                    continue;
                }
            };
        // Row i of the echelon holds the minors on rows 0..=i and columns
        // 0..i plus j.
        for i in 0..n {
            for j in i..n + 1 {
                let rows: Vec<usize> = (0..=i).collect();
                let cols: Vec<usize> = (0..i).chain(std::iter::once(j)).collect();
                if *echelon.get(i, j) != int(oracle::minor(&a, &rows, &cols)) {
                    failures.push(format!(
                        "trial {r}: entry ({}, {}) is not the expected minor",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        let square: Vec<Vec<i128>> = a.iter().map(|row| row[..n].to_vec()).collect();
        if *echelon.get(n - 1, n - 1) != int(oracle::det(&square)) {
            failures.push(format!("trial {r}: final pivot differs from det"));
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!(
            "200 tableaux n=3..6, {} mismatches or errors, {resamples} resamples{}",
            failures.len(),
            failures
                .first()
                .map(|f| format!("; first: {f}"))
                .unwrap_or_default()
        ),
    )
}

fn criterion_2() -> Verdict {
    let mut t = generic_tableau(4, 5).unwrap();
    let mut checked = 0;
    let mut bad = Vec::new();
    // T^(k) after k - 1 steps: entries with i, j >= k (one-based) have degree k.
    for k in 1..=4usize {
        for i in k - 1..4 {
            for j in k - 1..5 {
                let e = t.get(i, j);
                checked += 1;
                if e.degree() != Some(k as u32) || !e.is_homogeneous() {
                    bad.push(format!(
                        "T^({k}) entry ({}, {}) degree {:?}",
                        i + 1,
                        j + 1,
                        e.degree()
                    ));
                }
            }
        }
        if k < 4 {
            t = forward_step(
                &t,
                k - 1,
                PivotStrategy::Chio,
                PivotPolicy::Strict,
                &mut OpTally::new(),
            )
            .unwrap()
            .tableau;
        }
    }
    Verdict::new(
        bad.is_empty(),
        format!(
            "generic 4x5 under chio, {checked} entries checked, {} off-degree",
            bad.len()
        ),
    )
}

type Runner = Box<dyn Fn(&Tableau<Integer>) -> fangcheng::Result<Vec<String>>>;
type Criterion = (&'static str, fn() -> Verdict);

/// Label and runner for each pipeline compared against Cramer's rule.
fn pipelines() -> Vec<(&'static str, Runner)> {
    let solve = |strategy, finish| {
        move |t: &Tableau<Integer>| {
            let opts = SolveOptions {
                strategy,
                policy: PivotPolicy::Swap,
                finish,
                moderation: Moderation::Off,
            };
            solve_system(t, &opts).result.map(|s| strings(&s.values))
        }
    };
    vec![
        (
            "field+backsub",
            Box::new(solve(PivotStrategy::FieldGauss, Finish::BackSubst)),
        ),
        (
            "nine+backsub",
            Box::new(solve(PivotStrategy::NineChapters, Finish::BackSubst)),
        ),
        (
            "chio+backsub",
            Box::new(solve(PivotStrategy::Chio, Finish::BackSubst)),
        ),
        (
            "nine+hart",
            Box::new(solve(PivotStrategy::NineChapters, Finish::Hart)),
        ),
        (
            "nine+jordan",
            Box::new(solve(PivotStrategy::NineChapters, Finish::Jordan)),
        ),
        (
            "chio+jordan",
            Box::new(solve(PivotStrategy::Chio, Finish::Jordan)),
        ),
        (
            "field+jordan",
            Box::new(solve(PivotStrategy::FieldGauss, Finish::Jordan)),
        ),
    ]
}

fn criterion_3() -> Verdict {
    let runners = pipelines();
    let mut wrong = vec![0usize; runners.len()];
    let mut errors = vec![0usize; runners.len()];
    let mut first_error = vec![None; runners.len()];
    for r in 0..100u64 {
        let n = 2 + (r as usize % 5);
        let sample = random_nonsingular_system(&mut trial_rng(SEED ^ 3, r), n, 9);
        let expected = oracle::cramer(&to_i128(&sample.tableau));
        for (k, (_, run)) in runners.iter().enumerate() {
            match run(&sample.tableau) {
                Ok(x) if x == expected => {}
                Ok(_) => wrong[k] += 1,
                Err(e) => {
                    errors[k] += 1;
                    first_error[k].get_or_insert(format!("trial {r}: {e}"));
                }
            }
        }
    }
    let report: Vec<String> = runners
        .iter()
        .enumerate()
        .map(|(k, (name, _))| {
            format!(
                "{name:<13} exact {:>3}/100  wrong {}  errors {}{}",
                100 - wrong[k] - errors[k],
                wrong[k],
                errors[k],
                first_error[k]
                    .as_ref()
                    .map(|e| format!("  (first: {e})"))
                    .unwrap_or_default()
            )
        })
        .collect();
    let failing: Vec<&str> = runners
        .iter()
        .enumerate()
        .filter(|(k, _)| wrong[*k] + errors[*k] > 0)
        .map(|(_, (name, _))| *name)
        .collect();
    let detail = if failing.is_empty() {
        "100 random nonsingular systems n=2..6, every pipeline equals Cramer's rule".to_string()
    } else {
        format!(
            "100 random nonsingular systems n=2..6, mismatching pipelines: {}",
            failing.join(", ")
        )
    };
    Verdict::new(failing.is_empty(), detail).with_report(report)
}

/// Nine Chapters echelon, backward phase, and checks on the result.
fn hart_check(t: &Tableau<Integer>, policy: PivotPolicy) -> Result<(), String> {
    let n = t.rows();
    let (echelon, _) =
        forward_eliminate(t, PivotStrategy::NineChapters, policy).map_err(|e| e.to_string())?;
    let last = echelon.get(n - 1, n - 1).clone();
    let (diag, _) = hart_backward(&echelon, Moderation::Off).map_err(|e| e.to_string())?;
    if !diag.is_diagonal() {
        return Err("result is not diagonal".into());
    }
    if (0..n).any(|i| *diag.get(i, i) != last) {
        return Err(format!("diagonal is not constant {last}"));
    }
    let x = strings(&hart_solution(&diag).map_err(|e| e.to_string())?.values);
    if x != oracle::cramer(&to_i128(t)) {
        return Err("solution differs from Cramer's rule".into());
    }
    Ok(())
}

fn well_coeffs(r: u64, n: usize) -> Vec<Integer> {
    let mut rng = trial_rng(SEED ^ 5, r);
    (0..n)
        .map(|_| Integer::from(rng.random_range(1..=9i64)))
        .collect()
}

fn criterion_4() -> Verdict {
    let mut failures = Vec::new();
    let classic = fangcheng::int_tableau(&[[3, 2, 1, 39], [2, 3, 1, 34], [1, 2, 3, 26]]).unwrap();
    if let Err(e) = hart_check(&classic, PivotPolicy::Strict) {
        failures.push(format!("classic: {e}"));
    }
    let mut singular = 0;
    for n in 2..=8usize {
        for d in 0..50u64 {
            let coeffs = well_coeffs(n as u64 * 1000 + d, n);
            // All ones with n even is the only singular member of the family.
            if closed_form_det(&coeffs).is_zero() {
                singular += 1;
                continue;
            }
            let ws = build_well_system(coeffs).unwrap();
            if let Err(e) = hart_check(&ws.tableau().unwrap(), PivotPolicy::Strict) {
                failures.push(format!("well n={n} draw {d}: {e}"));
            }
        }
    }

    let mut report = Vec::new();
    for strategy in [PivotStrategy::NineChapters, PivotStrategy::Chio] {
        let mut inexact = 0;
        let mut other = 0;
        for r in 0..500u64 {
            let n = 2 + (r as usize % 5);
            let sample = random_nonsingular_system(&mut trial_rng(SEED ^ 4, r), n, 9);
            let opts = SolveOptions {
                strategy,
                policy: PivotPolicy::Swap,
                finish: Finish::Hart,
                moderation: Moderation::Off,
            };
            match solve_system(&sample.tableau, &opts).result {
                Ok(_) => {}
                Err(Error::InexactDivision { .. }) => inexact += 1,
                Err(_) => other += 1,
            }
        }
        report.push(format!(
            "500-case random corpus, {} echelon: inexact division in {inexact} ({:.1}%), other errors {other}",
            strategy.name(),
            inexact as f64 / 5.0
        ));
    }
    Verdict::new(
        failures.is_empty(),
        format!(
            "classic + well family n=2..8 x 50 ({singular} singular draws skipped): {} failures{}",
            failures.len(),
            failures
                .first()
                .map(|f| format!("; first: {f}"))
                .unwrap_or_default()
        ),
    )
    .with_report(report)
}

fn criterion_5() -> Verdict {
    let mut failures = Vec::new();
    for n in 2..=8usize {
        for d in 0..50u64 {
            let coeffs = well_coeffs(n as u64 * 1000 + d, n);
            let ws = build_well_system(coeffs.clone()).unwrap();
            let a: Vec<Vec<i128>> = to_i128(&ws.matrix().to_tableau());
            let det = int(oracle::det(&a));
            let product: i128 = coeffs
                .iter()
                .map(|c| c.to_string().parse::<i128>().unwrap())
                .product();
            let closed = int(product + if n % 2 == 0 { -1 } else { 1 });
            let (echelon, _) = forward_eliminate(
                &ws.tableau().unwrap(),
                PivotStrategy::NineChapters,
                PivotPolicy::Strict,
            )
            .unwrap();
            let pivot = echelon.get(n - 1, n - 1);
            if *pivot != det || det != closed || closed_form_det(&coeffs) != det {
                failures.push(format!(
                    "n={n} draw {d}: pivot {pivot}, oracle {det}, closed form {closed}"
                ));
            }
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!("n=2..8 x 50 draws, {} mismatches", failures.len()),
    )
}

fn criterion_6() -> Verdict {
    let mut report = vec![format!(
        "{:>3} {:<6} {:>10} {:>10} {:>7}",
        "n", "strat", "ge mul+div", "gj mul+div", "ratio"
    )];
    let mut violations = 0;
    for n in 4..=12usize {
        let mut ge = [0u64; 3];
        let mut gj = [0u64; 3];
        for trial in 0..5u64 {
            let rec = run_trial(n, SEED ^ 6, n as u64 * 100 + trial, 9).unwrap();
            for (s, strategy) in PivotStrategy::ALL.into_iter().enumerate() {
                let a = rec.measure(strategy, Pipeline::Ge).ops.multiplicative();
                let b = rec.measure(strategy, Pipeline::Gj).ops.multiplicative();
                if b <= a {
                    violations += 1;
                }
                ge[s] += a;
                gj[s] += b;
            }
        }
        for (s, strategy) in PivotStrategy::ALL.into_iter().enumerate() {
            report.push(format!(
                "{n:>3} {:<6} {:>10} {:>10} {:>7.4}",
                strategy.name(),
                ge[s],
                gj[s],
                gj[s] as f64 / ge[s] as f64
            ));
        }
    }
    Verdict::new(
        violations == 0,
        format!("n=4..12, 3 strategies x 5 seeded systems each, {violations} cases with gj <= ge"),
    )
    .with_report(report)
}

fn criterion_7() -> Verdict {
    let mut ratios = Vec::new();
    let mut losses = 0;
    for r in 0..20u64 {
        let rec = run_trial(8, SEED ^ 7, r, 9).unwrap();
        let nine = rec
            .measure(PivotStrategy::NineChapters, Pipeline::Ge)
            .final_bits;
        let chio = rec.measure(PivotStrategy::Chio, Pipeline::Ge).final_bits;
        if nine <= chio {
            losses += 1;
        }
        ratios.push((nine, chio));
    }
    let report = ratios
        .chunks(5)
        .map(|c| {
            c.iter()
                .map(|(a, b)| format!("{a}/{b}={:.2}", *a as f64 / *b as f64))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect();
    let mean = ratios
        .iter()
        .map(|(a, b)| *a as f64 / *b as f64)
        .sum::<f64>()
        / 20.0;
    Verdict::new(
        losses == 0,
        format!(
            "n=8, 20 trials, echelon bits nine > chio in {}/20, mean ratio {mean:.2}",
            20 - losses
        ),
    )
    .with_report(report)
}

fn criterion_8() -> Verdict {
    let mut mismatches = 0;
    let mut zeros = 0;
    for r in 0..100u64 {
        let n = 1 + (r as usize % 5);
        let range = if r % 2 == 0 { 9 } else { 2 };
        let t = random_tableau(&mut trial_rng(SEED ^ 8, r), n, n, range);
        let m = SquareMatrix::leading_block(&t);
        let expected = int(oracle::det(&to_i128(&t)));
        let chio = det_via_chio(&m, PivotPolicy::Swap).unwrap();
        let cof = det_oracle(&m, OracleMethod::Cofactor).unwrap();
        let perm = det_oracle(&m, OracleMethod::Permutation).unwrap();
        if chio != cof || cof != perm || perm != expected {
            mismatches += 1;
        }
        if expected.is_zero() {
            zeros += 1;
        }
    }
    Verdict::new(
        mismatches == 0,
        format!("100 matrices n=1..5 ({zeros} singular), {mismatches} disagreements"),
    )
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fangcheng"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn criterion_9() -> Verdict {
    let mut problems: Vec<String> = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            problems.push(what);
        }
    };
    let path = |n: &str| golden(n).to_string_lossy().into_owned();

    // Golden files.
    let cases: [(&str, &[&str], &str, i32); 3] = [
        (
            "classic.tab",
            &["--strategy", "nine", "--finish", "hart"],
            "classic_hart.out",
            0,
        ),
        ("identity.tab", &[], "identity.out", 0),
        ("singular.tab", &[], "singular.out", 3),
    ];
    for (input, flags, expected, code) in cases {
        let mut args = vec!["solve".to_string(), path(input)];
        args.extend(flags.iter().map(|s| s.to_string()));
        let o = cli(&args.iter().map(String::as_str).collect::<Vec<_>>());
        let want = std::fs::read_to_string(golden(expected)).unwrap();
        check(
            o.status.code() == Some(code),
            format!("{input}: exit {:?}", o.status.code()),
        );
        check(
            stdout(&o) == want,
            format!("{input}: stdout differs from {expected}"),
        );
    }

    // Exit-code table, and no numeric result alongside a nonzero exit.
    let table: Vec<(Vec<String>, i32)> = vec![
        (vec!["solve".into(), path("identity.tab")], 0),
        (vec!["solve".into(), path("malformed.tab")], 2),
        (
            vec![
                "solve".into(),
                path("identity.tab"),
                "--strategy".into(),
                "bogus".into(),
            ],
            2,
        ),
        (vec!["well".into(), "--coeffs".into(), "7".into()], 2),
        (vec!["solve".into(), path("singular.tab")], 3),
        (
            vec![
                "solve".into(),
                path("singular.tab"),
                "--trace".into(),
                "board".into(),
            ],
            3,
        ),
        (
            vec![
                "solve".into(),
                path("inexact.tab"),
                "--strategy".into(),
                "nine".into(),
                "--finish".into(),
                "hart".into(),
            ],
            4,
        ),
        (
            vec![
                "det".into(),
                path("nine_by_nine.tab"),
                "--method".into(),
                "perm".into(),
            ],
            5,
        ),
        (
            vec![
                "det".into(),
                path("nine_by_nine.tab"),
                "--method".into(),
                "cofactor".into(),
            ],
            5,
        ),
    ];
    for (args, code) in &table {
        let o = cli(&args.iter().map(String::as_str).collect::<Vec<_>>());
        check(
            o.status.code() == Some(*code),
            format!("{args:?}: exit {:?}, want {code}", o.status.code()),
        );
        if *code != 0 {
            check(
                o.stdout.is_empty(),
                format!("{args:?}: stdout not empty on exit {code}"),
            );
        }
    }
    for (method, want) in [("chio", "5\n"), ("cofactor", "5\n"), ("perm", "5\n")] {
        let f = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(f.path(), "2 2\n2 1\n1 3\n").unwrap();
        let o = cli(&["det", &f.path().to_string_lossy(), "--method", method]);
        check(stdout(&o) == want, format!("det --method {method}"));
    }
    let o = cli(&["well", "--coeffs", "2,3"]);
    check(
        stdout(&o).contains("b = 5") && stdout(&o).contains("pivot = 5"),
        "well 2,3".into(),
    );

    // JSON trace schema and board snapshot counts.
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(golden("trace.schema.json")).unwrap())
            .unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let n = 3;
    let mut documents = 0;
    for strategy in ["nine", "chio", "field"] {
        for finish in ["backsub", "hart", "jordan"] {
            for input in ["classic.tab", "singular.tab", "inexact.tab"] {
                let args = [
                    "solve",
                    &path(input),
                    "--strategy",
                    strategy,
                    "--finish",
                    finish,
                    "--trace",
                    "json",
                ];
                let o = cli(&args);
                documents += 1;
                match serde_json::from_slice::<serde_json::Value>(&o.stdout) {
                    Ok(doc) => {
                        let errs: Vec<String> =
                            validator.iter_errors(&doc).map(|e| e.to_string()).collect();
                        check(
                            errs.is_empty(),
                            format!("{args:?}: schema violations {errs:?}"),
                        );
                        check(
                            doc["result"]["exit"].as_i64() == o.status.code().map(i64::from),
                            format!("{args:?}: result.exit disagrees with the process"),
                        );
                    }
                    Err(e) => check(false, format!("{args:?}: not JSON: {e}")),
                }
            }
            let o = cli(&[
                "solve",
                &path("classic.tab"),
                "--strategy",
                strategy,
                "--finish",
                finish,
                "--trace",
                "board",
            ]);
            let snapshots = stdout(&o)
                .lines()
                .filter(|l| l.starts_with("step "))
                .count();
            let expected = match finish {
                "backsub" => 1 + (n - 1),
                "hart" if strategy == "field" => 0,
                "hart" => 1 + (n - 1) + (n - 1),
                // Gauss-Jordan's n steps replace the n - 1 forward steps.
                _ => 1 + (n - 1) + 1,
            };
            check(
                snapshots == expected,
                format!("board {strategy}+{finish}: {snapshots} snapshots, want {expected}"),
            );
        }
    }

    // Bench determinism.
    for format in ["text", "json"] {
        let args = [
            "bench", "--n", "4", "--trials", "10", "--seed", "42", "--format", format,
        ];
        let (a, b) = (cli(&args), cli(&args));
        check(
            a.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout,
            format!("bench --format {format} not byte-identical"),
        );
    }

    let report = problems.clone();
    Verdict::new(
        problems.is_empty(),
        format!(
            "3 goldens, {} exit-code cases, {documents} JSON documents, bench determinism: {} problems{}",
            table.len(),
            problems.len(),
            problems.first().map(|p| format!("; first: {p}")).unwrap_or_default()
        ),
    )
    .with_report(report)
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("chio closure and leading minors", criterion_1),
        ("symbolic degree under chio", criterion_2),
        ("solver equivalence", criterion_3),
        ("backward diagonalization", criterion_4),
        ("well problem pivot", criterion_5),
        ("gauss-jordan op counts", criterion_6),
        ("entry growth nine vs chio", criterion_7),
        ("determinant oracles", criterion_8),
        ("cli contract", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        for line in &v.report {
            println!("    | {line}");
        }
        if !v.pass {
            failed += 1;
        }
        println!(
            "{} criterion {} ({name}): {} [{:.1?}]",
            if v.pass { "PASS" } else { "FAIL" },
            k + 1,
            v.detail,
            start.elapsed()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
