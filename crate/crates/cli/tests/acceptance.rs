//! One pass/fail line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use hztower::report::SuiteReport;
use hztower::verify::run_suite;

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    limit: Duration,
    /// Check names that must be present in the suite report.
    required: &'static [&'static str],
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "classifier table",
        suite: "classifier",
        limit: secs(1),
        required: &["classify klein", "classify z13", "classify root", "classify perfectm-demo"],
    },
    Criterion {
        id: 2,
        title: "lattice identities for d = c - 1",
        suite: "lemma61",
        limit: secs(1),
        required: &[
            "d^2 = -4c",
            "d^2 Z^2 = 4^1 Z^2",
            "d^4 Z^2 = 4^2 Z^2",
            "d^6 Z^2 = 4^3 Z^2",
            "d^8 Z^2 = 4^4 Z^2",
            "d^10 Z^2 = 4^5 Z^2",
            "d^12 Z^2 = 4^6 Z^2",
            "d^14 Z^2 = 4^7 Z^2",
            "d^16 Z^2 = 4^8 Z^2",
        ],
    },
    Criterion {
        id: 3,
        title: "completion truncations",
        suite: "completion",
        limit: secs(5),
        required: &["klein M/MI^20 = Z/2^20", "root M/MI^12 = (Z/4^6)^2", "Z[1/2] M/MI^12 = 0"],
    },
    Criterion {
        id: 4,
        title: "completion certificates for invariant-free gallery modules",
        suite: "certificate",
        limit: secs(5),
        required: &["certificate klein", "certificate root", "certificate z13", "certificate z12", "certificate gamma"],
    },
    Criterion {
        id: 5,
        title: "relative second cohomology by brute force",
        suite: "cohomology",
        limit: secs(60),
        required: &[
            "H^2(id, Z/2) = 0",
            "H^2(id, Z/3) = 0",
            "H^2(id, Z/4) = 0",
            "H^2(1 -> Z/2, Z/2) = Z/2",
            "nontrivial extension of Z/2 by Z/2 has an element of order 4",
            "extension classes = |H^2(f, Z/2)|",
            "extension classes = |H^2(f, Z/3)|",
        ],
    },
    Criterion {
        id: 6,
        title: "localized Klein bottle group law",
        suite: "localization",
        limit: secs(10),
        required: &[
            "associativity (determinant on Z^2)",
            "identity (determinant on Z^2)",
            "inverses (determinant on Z^2)",
            "w is a 2-cocycle (determinant on Z^2)",
        ],
    },
    Criterion {
        id: 7,
        title: "property sweeps",
        suite: "properties",
        limit: secs(60),
        required: &[
            "SNF against gcd of minors",
            "condition one implies condition two",
            "(M/M^f)^g = M^fg/M^f",
            "minimal polynomial of a block sum is the lcm",
            "rank of the exterior square is n(n-1)/2",
        ],
    },
    Criterion {
        id: 8,
        title: "unstable kernel of the square coinvariants map",
        suite: "remark",
        limit: secs(1),
        required: &["kernel of (M⊗M)_C -> (Λ²M)_C is not action-stable for [[1, 1], [0, 1]]"],
    },
    Criterion {
        id: 9,
        title: "H_2 anchors",
        suite: "h2",
        limit: secs(1),
        required: &["H_2 for klein", "H_2 for root", "H_2 for Z^3 = Z^2 x C"],
    },
];

const FULL_RUN_LIMIT: Duration = secs(120);

/// Sample counts the criteria pin, read back from the check details.
fn sample_counts_ok(r: &SuiteReport) -> bool {
    match r.suite.as_str() {
        "localization" => r.checks.iter().filter(|c| c.name.contains("determinant")).take(4).all(|c| c.detail.starts_with("10000 ")),
        "properties" => {
            let want = ["500 ", "1000 ", "200 ", "200 "];
            r.checks.iter().zip(want).all(|(c, w)| c.detail.starts_with(w))
        }
        _ => true,
    }
}

fn check(c: &Criterion) -> (bool, String) {
    let start = Instant::now();
    let report = match run_suite(c.suite) {
        Ok(r) => r,
        Err(e) => return (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    let missing: Vec<_> = c.required.iter().filter(|n| !report.checks.iter().any(|k| k.name == **n)).collect();
    let failed: Vec<_> = report.failures().map(|k| k.name.clone()).collect();
    let counts = sample_counts_ok(&report);
    let ok = missing.is_empty() && failed.is_empty() && counts && elapsed < c.limit;
    let mut detail = format!("{} checks, {:.3}s (limit {}s)", report.checks.len(), elapsed.as_secs_f64(), c.limit.as_secs());
    if !failed.is_empty() {
        detail.push_str(&format!(", failed {failed:?}"));
    }
    if !missing.is_empty() {
        detail.push_str(&format!(", missing {missing:?}"));
    }
    if !counts {
        detail.push_str(", sample counts below the pinned minimum");
    }
    (ok, detail)
}

fn full_run() -> (bool, String) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hztower")).arg("verify-paper").output();
    let elapsed = start.elapsed();
    match out {
        Ok(o) => {
            let code = o.status.code();
            let ok = code == Some(0) && elapsed < FULL_RUN_LIMIT;
            (ok, format!("exit code {code:?}, {:.3}s (limit {}s)", elapsed.as_secs_f64(), FULL_RUN_LIMIT.as_secs()))
        }
        Err(e) => (false, format!("could not run the binary: {e}")),
    }
}

fn main() {
    let mut all = true;
    for c in CRITERIA {
        let (ok, detail) = check(c);
        all &= ok;
        println!("criterion {:>2} [{}] {}: {detail}", c.id, if ok { "pass" } else { "FAIL" }, c.title);
    }
    let (ok, detail) = full_run();
    all &= ok;
    println!("criterion 10 [{}] full verify-paper run: {detail}", if ok { "pass" } else { "FAIL" });
    if !all {
        std::process::exit(1);
    }
}
