//! One line per acceptance criterion, then a single assertion over all of them.
//! Runtime bounds are wall-clock limits for the checks themselves, measured in whatever
//! profile the test runs in.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use orthochar2::quadform::QuadraticForm;
use orthochar2::scalars::Gf2;
use orthochar2_cli::census::{census_lines, sharded_elements};
use orthochar2_cli::formfile::FormFile;
use orthochar2_cli::report::{Report, Status};
use orthochar2_cli::suites::{run_suite, Suite, SuiteOptions};

const POLAR_BOUND: Duration = Duration::from_secs(1);
const SYM2_BOUND: Duration = Duration::from_secs(1);
const LIE_BOUND: Duration = Duration::from_secs(1);
const PARABOLIC_BOUND: Duration = Duration::from_secs(1);
const ENUM_SINGLE_BOUND: Duration = Duration::from_secs(60);
const ENUM_SHARDED_BOUND: Duration = Duration::from_secs(10);
const COUNTEREXAMPLE_BOUND: Duration = Duration::from_secs(1);
const LINKAGE_BOUND: Duration = Duration::from_secs(5);
const ISOTROPIC_BOUND: Duration = Duration::from_secs(5);
const SHARDS: usize = 4;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    note: String,
}

fn suite(s: Suite) -> Report {
    run_suite(s, &SuiteOptions::default())
}

fn text(r: &Report) -> Vec<String> {
    r.lines.iter().map(|l| l.to_string()).collect()
}

fn count(lines: &[String], exact: &str) -> usize {
    lines.iter().filter(|l| *l == exact).count()
}

/// Every `wanted` line occurs exactly `times` times and nothing failed.
fn require(r: &Report, wanted: &[String], times: usize) -> Result<(), String> {
    if let Some(bad) = r.lines.iter().find(|l| l.status == Status::Fail) {
        return Err(format!("failed: {bad}"));
    }
    let lines = text(r);
    for w in wanted {
        let c = count(&lines, w);
        if c != times {
            return Err(format!("expected {times}x `{w}`, found {c}"));
        }
    }
    Ok(())
}

fn timed(bound: Duration, f: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let res = f();
    let took = start.elapsed();
    match res {
        Ok(note) if took <= bound => Outcome { ok: true, note: format!("{note} in {took:.2?} (bound {bound:?})") },
        Ok(note) => Outcome { ok: false, note: format!("{note} but took {took:.2?} > {bound:?}") },
        Err(e) => Outcome { ok: false, note: e },
    }
}

fn forms() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../forms")
}

fn shipped(name: &str) -> QuadraticForm<Gf2> {
    FormFile::read(&forms().join(name)).unwrap().form::<Gf2>().unwrap()
}

fn criterion_1() -> Outcome {
    timed(POLAR_BOUND, || {
        let r = suite(Suite::Polar);
        let mut wanted = Vec::new();
        for n in 1..=6 {
            wanted.push(format!("CHECK polar.ker.dim PASS n={n} dim={n}"));
            wanted.push(format!("CHECK polar.coker.dim PASS n={n} dim={n}"));
            wanted.push(format!("CHECK polar.ker.squares PASS n={n}"));
        }
        // once over GF(2), once over GF(4)
        require(&r, &wanted, 2)?;
        require(&r, &["CHECK polar.field INFO field=gf2^1".into(), "CHECK polar.field INFO field=gf2^2".into()], 1)?;
        Ok("n=1..6 over GF(2), GF(4)".into())
    })
}

fn criterion_2() -> Outcome {
    timed(SYM2_BOUND, || {
        let r = suite(Suite::Sym2);
        let mut wanted = Vec::new();
        for n in 1..=5usize {
            let s2 = n * (n + 1) / 2;
            wanted.push(format!("CHECK sym2.twist.dim PASS n={n} dim={n}"));
            wanted.push(format!("CHECK sym2.exact PASS n={n} sym2={s2} lambda2={}", n * (n - 1) / 2));
            wanted.push(format!("CHECK sym2.s2-image PASS n={n}"));
        }
        require(&r, &wanted, 2)?;
        Ok("n<=5 over GF(2), GF(4)".into())
    })
}

fn criterion_3() -> Outcome {
    timed(LIE_BOUND, || {
        let r = suite(Suite::Lie);
        let wanted: Vec<String> = [
            "CHECK lie.so8.dim PASS dim=28",
            "CHECK lie.so7.dim PASS dim=21",
            "CHECK lie.so7.scheme.dim PASS dim=22",
            "CHECK lie.so8.bracket PASS pairs=378",
            "CHECK lie.so7.bracket PASS pairs=210",
            "CHECK lie.so8.family PASS family=28 algebra=28",
            "CHECK lie.so7.family PASS family=21 algebra=21",
        ]
        .map(String::from)
        .into();
        require(&r, &wanted, 1)?;
        Ok("28/21/22, families span-equal, brackets closed".into())
    })
}

fn criterion_4() -> Outcome {
    timed(PARABOLIC_BOUND, || {
        let mut r = suite(Suite::Parabolic);
        r.extend(suite(Suite::Quotient));
        let wanted: Vec<String> = [
            "CHECK parabolic.so8.dim PASS dim=19",
            "CHECK parabolic.so7.dim PASS dim=14",
            "CHECK quotient.so8.dims PASS sub=8 total=9 line=1",
            "CHECK quotient.so7.dims PASS sub=6 total=7 line=1",
            "CHECK quotient.so8.hom PASS dim=8",
            "CHECK quotient.so7.hom PASS dim=6",
            "CHECK quotient.so8.d-line PASS generator=e*f+f*e",
            "CHECK quotient.so7.d-line PASS generator=e*f+f*e",
            "CHECK quotient.so8.sequence PASS",
            "CHECK quotient.so7.sequence PASS",
            "CHECK quotient.basis-change PASS changes=180",
        ]
        .map(String::from)
        .into();
        require(&r, &wanted, 1)?;
        Ok("19/14, quotients 9/7, Hom 8/6, D line invariant".into())
    })
}

fn enumerate_shipped(threads: usize) -> Result<String, String> {
    let mut notes = Vec::new();
    for (file, expected) in [("H.qf", (2, 1)), ("HH.qf", (72, 36))] {
        let q = shipped(file);
        let elements = sharded_elements(&q, threads).map_err(|e| e.to_string())?;
        let report = Report { lines: census_lines("census", &q, &elements, Some(expected)) };
        if !report.passed() {
            return Err(format!("{file}: {report}"));
        }
        notes.push(format!("{file} {}/{}", expected.0, expected.1));
    }
    // the odd form: every element fixes the radical, det 1
    let q = shipped("x1sq_H.qf");
    let elements = sharded_elements(&q, threads).map_err(|e| e.to_string())?;
    let report = Report { lines: census_lines("census", &q, &elements, None) };
    if !report.passed() {
        return Err(format!("x1sq_H.qf: {report}"));
    }
    notes.push(format!("x1sq_H.qf order {}", elements.len()));
    Ok(notes.join(", "))
}

fn criterion_5() -> Outcome {
    let single = timed(ENUM_SINGLE_BOUND, || enumerate_shipped(1));
    if !single.ok {
        return single;
    }
    let sharded = timed(ENUM_SHARDED_BOUND, || enumerate_shipped(SHARDS));
    Outcome { ok: sharded.ok, note: format!("single: {}; {SHARDS} shards: {}", single.note, sharded.note) }
}

fn criterion_6() -> Outcome {
    timed(COUNTEREXAMPLE_BOUND, || {
        let mut r = suite(Suite::Descent);
        r.extend(suite(Suite::Fiber));
        let wanted: Vec<String> = [
            "CHECK fiber.so7.m0.twist PASS",
            "CHECK fiber.so7.m0.involution PASS",
            "CHECK descent.Kprime.isotropic PASS",
            "CHECK descent.K.nondegenerate PASS radical=e5 value=1",
            "CHECK descent.K.no-sqrt-t PASS",
            "CHECK descent.Kprime.witness PASS lambda=s",
            "CHECK descent.Kprime.twist PASS",
            "CHECK descent.Kprime.involution PASS",
        ]
        .map(String::from)
        .into();
        require(&r, &wanted, 1)?;
        Ok("twist identity, involution, isotropic graph, no sqrt(t) in K, lambda=s in K'".into())
    })
}

fn criterion_7() -> Outcome {
    timed(LINKAGE_BOUND, || {
        let r = suite(Suite::Fiber);
        let mut wanted = vec!["CHECK fiber.phi-class.zero PASS".to_string(), "CHECK fiber.d-layer PASS".to_string()];
        for (kind, n0) in [("so7", 7usize), ("so8-hat", 8), ("so8-B", 8)] {
            for pad in 0..=2usize {
                let n = n0 + 2 * pad;
                let alg = n * (n - 1) / 2;
                let line = r
                    .lines
                    .iter()
                    .find(|l| l.id == format!("fiber.{kind}.m{pad}.phi-class"))
                    .ok_or(format!("missing phi-class line for {kind} m={pad}"))?;
                if line.status != Status::Pass || line.details.first() != Some(&("algebra".into(), alg.to_string())) {
                    return Err(format!("{line}"));
                }
                wanted.push(format!("CHECK fiber.{kind}.m{pad}.nondegenerate PASS n={n}"));
            }
        }
        require(&r, &wanted, 1)?;
        Ok("A_phi outside p, nonzero Hom class, zero D part: 3 models x m=0..2".into())
    })
}

/// Independent brute force: Q = sum x_{2i} x_{2i+1} over GF(2) on bit vectors.
fn brute_isotropic_hyperbolic(m: u32) -> u64 {
    (0u64..1 << (2 * m))
        .filter(|v| (0..m).map(|i| (v >> (2 * i)) & (v >> (2 * i + 1)) & 1).sum::<u64>() % 2 == 0)
        .count() as u64
}

fn criterion_8() -> Outcome {
    timed(ISOTROPIC_BOUND, || {
        let r = suite(Suite::Isotropic);
        let mut wanted = Vec::new();
        for (m, value) in [(1u32, 3u64), (2, 10), (3, 36)] {
            let closed = (1u64 << (2 * m - 1)) + (1u64 << (m - 1));
            let brute = brute_isotropic_hyperbolic(m);
            if closed != value || brute != value {
                return Err(format!("H^{m}: closed {closed}, brute {brute}, expected {value}"));
            }
            wanted.push(format!("CHECK isotropic.H^{m} PASS count={value} closed_form={value}"));
        }
        require(&r, &wanted, 1)?;
        Ok("3, 10, 36".into())
    })
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_orthochar2");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let golden =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/verify_all.txt")).unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "1", "4", "4"] {
        let o = run(&["verify", "--suite", "all", "--threads", threads]);
        if o.status.code() != Some(0) {
            return Outcome { ok: false, note: format!("verify --suite all exited {:?}", o.status.code()) };
        }
        outputs.push(o.stdout);
    }
    if outputs.iter().any(|o| o.as_slice() != golden.as_bytes()) {
        return Outcome { ok: false, note: "output differs from golden".into() };
    }
    let form = |f: &str| forms().join(f).to_string_lossy().into_owned();
    let codes = [
        (run(&["census", "--form", &form("HH.qf")]).status.code(), 0),
        (run(&["census", "--form", &form("degenerate.qf")]).status.code(), 1),
        (run(&["fiber", "--psi-scale", "01"]).status.code(), 1),
        (run(&["inspect", "--form", &form("bad/term_order.qf")]).status.code(), 2),
        (run(&["inspect", "--form", &form("bad/unknown_directive.qf")]).status.code(), 2),
        (run(&["verify", "--suite", "bogus"]).status.code(), 2),
    ];
    for (got, want) in codes {
        if got != Some(want) {
            return Outcome { ok: false, note: format!("exit code {got:?}, expected {want}") };
        }
    }
    Outcome { ok: true, note: "golden equal over 2 runs x threads 1,4; exit codes 0/1/2".into() }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("polarization", criterion_1),
        ("sym2 sequence", criterion_2),
        ("lie dimensions", criterion_3),
        ("parabolic and quotient", criterion_4),
        ("dickson enumeration", criterion_5),
        ("counterexample core", criterion_6),
        ("phi linkage", criterion_7),
        ("isotropic counts", criterion_8),
        ("cli determinism and exit codes", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!("criterion {} [{name}]: {} ({})", i + 1, if o.ok { "PASS" } else { "FAIL" }, o.note);
        if !o.ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
