use std::fmt::Write as _;

use hztower::centralext::{extension_classes, is_perfect, relative_cocycles, CoeffGroup, FiniteGroup, GroupHom};
use hztower::classifier::{classify, ConditionReport};
use hztower::completion::{lemma_completion_certificate, tower};
use hztower::grouphom::{h1_semidirect, h2_eta_tower, h2_semidirect};
use hztower::report::SuiteReport;
use hztower::verify;
use hztower::zcmod::{Tameness, ZCModule};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::CliError;

/// Structured result of one command plus its human-readable rendering.
pub struct Output {
    pub result: Value,
    pub text: String,
    /// False when a verification failed.
    pub ok: bool,
}

fn show<T: std::fmt::Display>(x: &T) -> String {
    x.to_string()
}

pub fn analyze(m: &ZCModule) -> Result<Output, CliError> {
    let a = m.analyze()?;
    let tame = match &a.tame {
        Tameness::Yes { generator } => json!({"status": "tame", "generator": generator.to_string()}),
        Tameness::No { reason } => json!({"status": "not tame", "reason": reason}),
        Tameness::Undecided { reason } => json!({"status": "undecided", "reason": reason}),
    };
    let result = json!({
        "kind": m.kind(),
        "rank": a.rank,
        "torsion": a.tor.as_ref().map(show),
        "mu": show(&a.mu),
        "chi": show(&a.chi),
        "tame": tame,
        "invariant_free": a.invariant_free,
    });
    let mut text = String::new();
    let _ = writeln!(text, "representation: {}", m.kind());
    let _ = writeln!(text, "rank: {}", a.rank.map_or("infinite".into(), |r| r.to_string()));
    let _ = writeln!(text, "torsion: {}", a.tor.as_ref().map_or("unknown".into(), show));
    let _ = writeln!(text, "minimal polynomial: {}", a.mu);
    let _ = writeln!(text, "characteristic polynomial: {}", a.chi);
    let _ = writeln!(
        text,
        "tame: {}",
        match &a.tame {
            Tameness::Yes { generator } => format!("yes (integral for {generator})"),
            Tameness::No { reason } => format!("no ({reason})"),
            Tameness::Undecided { reason } => format!("undecided ({reason})"),
        }
    );
    let _ = writeln!(text, "invariant-free: {}", a.invariant_free);
    Ok(Output { result, text, ok: true })
}

fn condition_json(c: &ConditionReport) -> Value {
    json!({
        "holds": c.holds,
        "parts": c.parts.iter().map(|(k, s)| json!({"multiplicity": k, "factor": show(s)})).collect::<Vec<_>>(),
        "pairs": c.table.iter().map(|e| json!({
            "k": e.k, "k_prime": e.k_prime, "gcd": show(&e.gcd), "power_of_x_minus_one": e.power_of_x_minus_one,
        })).collect::<Vec<_>>(),
    })
}

pub fn classify_cmd(m: &ZCModule) -> Result<Output, CliError> {
    let v = classify(m)?;
    let c = &v.certificate;
    let h2 = c.h2_route.as_ref().map(|r| {
        json!({"exterior_coinvariants": show(&r.exterior_coinvariants), "invariants": show(&r.invariants), "holds": r.holds})
    });
    let jordan = c.jordan.as_ref().map(|j| {
        json!({
            "holds": j.holds,
            "conjugator": j.conjugator.as_ref().map(|p| (0..p.rows()).map(|i| p.row(i).iter().map(show).collect::<Vec<_>>()).collect::<Vec<_>>()),
            "note": j.note,
        })
    });
    let result = json!({
        "verdict": v.kind.to_string(),
        "mu": show(&c.mu),
        "fired": c.fired,
        "perfectm": {"m": c.perfectm.m, "f": show(&c.perfectm.f), "holds": c.perfectm.holds},
        "condition_one": condition_json(&c.condition_one),
        "condition_two": condition_json(&c.condition_two),
        "h2_route": h2,
        "jordan": jordan,
        "note": c.note,
    });
    let mut text = String::new();
    let _ = writeln!(text, "verdict: {}", v.kind);
    let _ = writeln!(text, "minimal polynomial: {}", c.mu);
    let _ = writeln!(text, "fired: {}", if c.fired.is_empty() { "none".into() } else { c.fired.join(", ") });
    let _ = writeln!(text, "perfect-quotient shortcut: {} (m = {}, f = {})", c.perfectm.holds, c.perfectm.m, c.perfectm.f);
    let _ = writeln!(text, "condition one: {}", c.condition_one.holds);
    let _ = writeln!(text, "condition two: {}", c.condition_two.holds);
    for e in c.condition_two.table.iter().filter(|e| !e.power_of_x_minus_one) {
        let _ = writeln!(text, "  pair ({}, {}): gcd {}", e.k, e.k_prime, e.gcd);
    }
    if let Some(r) = &c.h2_route {
        let _ = writeln!(text, "H_2 ends: (Λ²M)_C = {}, M^C = {}, both finite: {}", r.exterior_coinvariants, r.invariants, r.holds);
    }
    if let Some(j) = &c.jordan {
        let _ = writeln!(text, "Jordan witness: {} ({})", j.holds, j.note);
    }
    if let Some(n) = &c.note {
        let _ = writeln!(text, "note: {n}");
    }
    Ok(Output { result, text, ok: true })
}

pub fn complete(m: &ZCModule, imax: usize) -> Result<Output, CliError> {
    let t = tower(m, imax)?;
    let certificate = match m.analyze() {
        Ok(a) if a.is_tame() && a.is_torsion_free() && a.invariant_free && !matches!(m, ZCModule::Laurent(_)) => {
            let c = lemma_completion_certificate(m, imax.min(6))?;
            Some(json!({"n": show(&c.n), "levels": imax.min(6), "proofs": c.proofs.len(), "holds": c.holds()}))
        }
        _ => None,
    };
    let result = json!({
        "imax": imax,
        "stages": t.stages.iter().map(|s| json!({"level": s.level, "group": show(&s.group), "unipotent": s.is_unipotent()})).collect::<Vec<_>>(),
        "transitions": t.transitions.iter().map(|x| json!({
            "from_level": x.from_level, "surjective": x.surjective, "equivariant": x.equivariant, "isomorphism": x.isomorphism,
        })).collect::<Vec<_>>(),
        "stabilized_at": t.stabilized_at,
        "verdict": t.verdict(),
        "certificate": certificate,
    });
    let mut text = String::new();
    for s in &t.stages {
        let _ = writeln!(text, "M/MI^{}: {}", s.level, s.group);
    }
    let all = t.transitions.iter().all(|x| x.surjective && x.equivariant);
    let _ = writeln!(text, "transitions surjective and equivariant: {all}");
    let _ = writeln!(text, "{}", t.verdict());
    if let Some(c) = &certificate {
        let _ = writeln!(text, "completion certificate: n = {}, holds = {}", c["n"].as_str().unwrap_or("?"), c["holds"]);
    }
    Ok(Output { result, text, ok: true })
}

pub fn h2(m: &ZCModule, imax: usize) -> Result<Output, CliError> {
    let h1 = h1_semidirect(m)?;
    let r = h2_semidirect(m)?;
    let eta = h2_eta_tower(m, imax)?;
    let result = json!({
        "h1": show(&h1),
        "left_end": show(&r.left_end),
        "right_end": show(&r.right_end),
        "h2": r.h2.as_ref().map(show),
        "reason": r.reason,
        "eta_stages": eta.iter().map(|s| json!({
            "level": s.level, "stage_coinvariants": show(&s.stage_coinvariants), "cokernel": show(&s.cokernel),
            "transition_surjective": s.transition_surjective,
        })).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "H_1 = {h1}");
    let _ = writeln!(text, "(Λ²M)_C = {}, M^C = {}", r.left_end, r.right_end);
    let _ = writeln!(text, "H_2 = {} ({})", r.h2.as_ref().map_or("undetermined".into(), show), r.reason);
    for s in &eta {
        let _ = writeln!(text, "stage {}: (Λ²(M/MI^i))_C = {}, cokernel {}", s.level, s.stage_coinvariants, s.cokernel);
    }
    Ok(Output { result, text, ok: true })
}

/// A homomorphism between small groups and a coefficient group `Z/d1 × ... × Z/dk`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDescriptor {
    pub domain: String,
    pub codomain: String,
    pub images: Vec<usize>,
    pub coefficients: Vec<u64>,
}

/// `1`, `Zn`, `S3`, and products written `Z2xZ2`.
pub fn group_by_name(name: &str) -> Result<FiniteGroup, CliError> {
    let mut out = FiniteGroup::trivial();
    for part in name.split('x') {
        let g = match part.trim() {
            "1" => FiniteGroup::trivial(),
            "S3" => FiniteGroup::symmetric3(),
            p => match p.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if n >= 1 => FiniteGroup::cyclic(n),
                _ => return Err(CliError::Input(format!("unknown group {p:?}; use 1, Zn, S3 or products like Z2xZ3"))),
            },
        };
        out = out.direct_product(&g);
    }
    Ok(out)
}

pub const COHOMOLOGY_BUILTINS: &[(&str, &str)] = &[
    ("unit-z2", r#"{"domain": "1", "codomain": "Z2", "images": [0], "coefficients": [2]}"#),
    ("id-s3", r#"{"domain": "S3", "codomain": "S3", "images": [0, 1, 2, 3, 4, 5], "coefficients": [2]}"#),
    ("z4-onto-z2", r#"{"domain": "Z4", "codomain": "Z2", "images": [0, 1, 0, 1], "coefficients": [2]}"#),
    ("z2xz2", r#"{"domain": "1", "codomain": "Z2xZ2", "images": [0], "coefficients": [2]}"#),
];

pub fn cohomology(d: &HomDescriptor) -> Result<Output, CliError> {
    let h = group_by_name(&d.domain)?;
    let g = group_by_name(&d.codomain)?;
    let f = GroupHom::new(h, g, d.images.clone())?;
    let a = CoeffGroup::new(&d.coefficients);
    let z = relative_cocycles(&f, &a)?;
    let h2 = z.h2();
    let classes = extension_classes(&f, &a).ok().map(|c| c.len());
    let result = json!({
        "domain": d.domain,
        "codomain": d.codomain,
        "coefficients": d.coefficients,
        "perfect": is_perfect(&f),
        "relative_cocycles": show(&z.group()),
        "h2": show(&h2),
        "h2_order": h2.order().map(|o| o.to_string()),
        "extension_classes": classes,
    });
    let mut text = String::new();
    let _ = writeln!(text, "f: {} -> {}, A = {:?}", d.domain, d.codomain, d.coefficients);
    let _ = writeln!(text, "f perfect: {}", is_perfect(&f));
    let _ = writeln!(text, "relative cocycles: {}", z.group());
    let _ = writeln!(text, "H^2(f, A) = {h2}");
    match classes {
        Some(c) => {
            let _ = writeln!(text, "equivalence classes of relative extensions: {c}");
        }
        None => {
            let _ = writeln!(text, "equivalence classes: not enumerated (size guard)");
        }
    }
    Ok(Output { result, text, ok: true })
}

pub fn run_checks(suite: Option<&str>) -> Result<Output, CliError> {
    let reports: Vec<SuiteReport> = match suite {
        Some(s) => vec![verify::run_suite(s).map_err(|e| CliError::Input(e.to_string()))?],
        None => verify::run_all(),
    };
    let ok = reports.iter().all(|r| r.passed());
    let mut text = String::new();
    for r in &reports {
        let _ = write!(text, "{r}");
    }
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let _ = writeln!(text, "{} ({} of {total} checks failed)", if ok { "PASS" } else { "FAIL" }, failed);
    let result = json!({"passed": ok, "suites": reports});
    Ok(Output { result, text, ok })
}
