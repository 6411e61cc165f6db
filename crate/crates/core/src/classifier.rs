//! Upper bounds on the HZ-length of `M ⋊ C` from the minimal polynomial of a tame module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{squarefree_decomposition, FgAbelian, IntMatrix, IntPoly, QPoly};
use crate::zcmod::{Tameness, ZCModule, ZFinite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum VerdictKind {
    LessThanOmega,
    AtMostOmega,
    AtMostOmegaPlusOne,
    WitnessAtLeastOmegaPlusTwo,
    Unknown,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictKind::LessThanOmega => "LessThanOmega",
            VerdictKind::AtMostOmega => "AtMostOmega",
            VerdictKind::AtMostOmegaPlusOne => "AtMostOmegaPlusOne",
            VerdictKind::WitnessAtLeastOmegaPlusTwo => "WitnessAtLeastOmegaPlusTwo",
            VerdictKind::Unknown => "Unknown",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct PairEntry {
    pub k: usize,
    pub k_prime: usize,
    /// `gcd(s_k, rev(s_k'))`, monic over Q.
    pub gcd: QPoly,
    pub power_of_x_minus_one: bool,
}

#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub mu: IntPoly,
    pub parts: BTreeMap<usize, IntPoly>,
    pub table: Vec<PairEntry>,
    pub holds: bool,
}

fn check_mu(mu: &IntPoly) -> Result<()> {
    if !mu.is_monic() {
        return Err(Error::Precondition(format!("minimal polynomial {mu} is not monic")));
    }
    if mu.coeff(0).is_zero() {
        return Err(Error::Precondition("minimal polynomial vanishes at 0".into()));
    }
    Ok(())
}

fn pair(k: usize, kp: usize, a: &IntPoly, b: &IntPoly) -> Result<PairEntry> {
    let g = a.to_q().gcd(&b.to_q().reciprocal()?);
    Ok(PairEntry { k, k_prime: kp, power_of_x_minus_one: g.is_power_of_x_minus_one(), gcd: g })
}

/// Roots with `λ_i λ_j = 1` only when `λ_i = λ_j = 1`: `gcd(μ, rev μ)` is a power of `x - 1`.
pub fn condition_one(mu: &IntPoly) -> Result<ConditionReport> {
    check_mu(mu)?;
    let parts = squarefree_decomposition(mu)?;
    let e = pair(0, 0, mu, mu)?;
    let holds = e.power_of_x_minus_one;
    Ok(ConditionReport { mu: mu.clone(), parts, table: vec![e], holds })
}

/// `λ_i λ_j = 1` only when both roots are simple or both equal 1:
/// `gcd(s_k, rev s_k')` is a power of `x - 1` for all `(k, k') != (1, 1)`.
pub fn condition_two(mu: &IntPoly) -> Result<ConditionReport> {
    check_mu(mu)?;
    let parts = squarefree_decomposition(mu)?;
    let mut table = Vec::new();
    for (&k, a) in &parts {
        for (&kp, b) in &parts {
            if k == 1 && kp == 1 {
                continue;
            }
            table.push(pair(k, kp, a, b)?);
        }
    }
    let holds = table.iter().all(|e| e.power_of_x_minus_one);
    Ok(ConditionReport { mu: mu.clone(), parts, table, holds })
}

#[derive(Clone, Debug)]
pub struct PerfectM {
    pub m: usize,
    pub f: IntPoly,
    pub holds: bool,
}

/// `μ = (x - 1)^m f` with `f(1) = ±1`.
pub fn perfectm_shortcut(mu: &IntPoly) -> PerfectM {
    let (m, f) = mu.split_root_one();
    let holds = f.eval(&BigInt::one()).abs().is_one();
    PerfectM { m, f, holds }
}

#[derive(Clone, Debug)]
pub struct H2Route {
    pub exterior_coinvariants: FgAbelian,
    pub invariants: FgAbelian,
    pub holds: bool,
}

/// Both ends of `(Λ²M)_C ↣ H₂(M ⋊ C) ↠ M^C` finite.
pub fn h2_finite_route(m: &ZCModule) -> Result<H2Route> {
    let ext = m.exterior_square()?.coinvariants()?;
    let inv = m.invariants()?;
    let holds = ext.is_finite() && inv.is_finite();
    Ok(H2Route { exterior_coinvariants: ext, invariants: inv, holds })
}

#[derive(Clone, Debug)]
pub struct JordanReport {
    pub holds: bool,
    /// Unimodular `P` with `P^-1 A P = [[-1, 1], [0, -1]]`.
    pub conjugator: Option<IntMatrix>,
    pub note: String,
}

pub const JORDAN_SEARCH_BOUND: i64 = 6;

/// Whether `M ≅ Z²` with `t` acting by `[[-1, 1], [0, -1]]`, by bounded search for an integral conjugator.
pub fn jordan_witness(m: &ZFinite) -> Result<JordanReport> {
    m.validate()?;
    let no = |note: &str| Ok(JordanReport { holds: false, conjugator: None, note: note.into() });
    let fp = m.free_part();
    if fp.rank != 2 || !fp.torsion.is_zero() {
        return no("not free of rank 2");
    }
    let mu = crate::exactalg::min_poly(&fp.action.to_rat())?;
    if mu != QPoly::from_i64(&[1, 2, 1]) {
        return no("minimal polynomial is not (x + 1)^2");
    }
    let a: Vec<i128> = fp.action.entries().iter().map(|x| x.to_i128().expect("small entries")).collect();
    let b = JORDAN_SEARCH_BOUND as i128;
    for p0 in -b..=b {
        for p1 in -b..=b {
            for p2 in -b..=b {
                for p3 in -b..=b {
                    let det = p0 * p3 - p1 * p2;
                    if det.abs() != 1 {
                        continue;
                    }
                    // A P = P J with J = [[-1, 1], [0, -1]]
                    let ap = [a[0] * p0 + a[1] * p2, a[0] * p1 + a[1] * p3, a[2] * p0 + a[3] * p2, a[2] * p1 + a[3] * p3];
                    let pj = [-p0, p0 - p1, -p2, p2 - p3];
                    if ap == pj {
                        let p = IntMatrix::from_i64(&[&[p0 as i64, p1 as i64], &[p2 as i64, p3 as i64]]);
                        return Ok(JordanReport { holds: true, conjugator: Some(p), note: "conjugator found".into() });
                    }
                }
            }
        }
    }
    no(&format!("no conjugacy found within bound {JORDAN_SEARCH_BOUND}"))
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub mu: IntPoly,
    pub fired: Vec<&'static str>,
    pub perfectm: PerfectM,
    pub condition_one: ConditionReport,
    pub condition_two: ConditionReport,
    pub h2_route: Option<H2Route>,
    pub jordan: Option<JordanReport>,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub certificate: Certificate,
}

pub fn classify(m: &ZCModule) -> Result<Verdict> {
    let an = m.analyze()?;
    match &an.tame {
        Tameness::Yes { .. } => {}
        Tameness::No { reason } | Tameness::Undecided { reason } => return Err(Error::NotTame(reason.clone())),
    }
    let mu = an.mu.to_int().expect("tame modules have integral minimal polynomial");
    let perfectm = perfectm_shortcut(&mu);
    let c1 = condition_one(&mu)?;
    let c2 = condition_two(&mu)?;
    let h2 = h2_finite_route(m)?;
    let jordan = match m {
        ZCModule::ZFinite(z) => Some(jordan_witness(z)?),
        _ => None,
    };
    let mut fired = Vec::new();
    let mut kind = VerdictKind::Unknown;
    let mut fire = |name: &'static str, k: VerdictKind, on: bool| {
        if on {
            fired.push(name);
            if kind == VerdictKind::Unknown {
                kind = k;
            }
        }
    };
    fire("perfectm_shortcut", VerdictKind::LessThanOmega, perfectm.holds);
    fire("condition_one", VerdictKind::AtMostOmega, c1.holds);
    fire("condition_two", VerdictKind::AtMostOmegaPlusOne, c2.holds);
    fire("h2_finite_route", VerdictKind::AtMostOmegaPlusOne, h2.holds);
    fire(
        "jordan_witness",
        VerdictKind::WitnessAtLeastOmegaPlusTwo,
        jordan.as_ref().is_some_and(|j| j.holds),
    );
    let note = c2
        .parts
        .iter()
        .find(|(&k, s)| k > 1 && s.coeff(0).abs().is_one() && !s.to_q().is_power_of_x_minus_one())
        .map(|(k, s)| {
            format!("repeated factor ({s})^{k} with unit constant term; a finite bound beyond ω+1 is expected but not certified")
        });
    Ok(Verdict {
        kind,
        certificate: Certificate {
            mu,
            fired,
            perfectm,
            condition_one: c1,
            condition_two: c2,
            h2_route: Some(h2),
            jordan,
            note,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int_vec, rat_vec, RatMatrix};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn condition_one_examples() {
        assert!(condition_one(&p(&[-3, 1])).unwrap().holds);
        assert!(!condition_one(&p(&[1, 1])).unwrap().holds);
        assert!(condition_one(&p(&[-1, 1])).unwrap().holds);
        assert!(condition_one(&p(&[0, 1])).is_err());
    }

    #[test]
    fn condition_two_examples() {
        assert!(condition_two(&p(&[1, 1])).unwrap().holds);
        let r = condition_two(&p(&[1, 2, 1])).unwrap();
        assert!(!r.holds);
        assert_eq!(r.table.len(), 1);
        assert_eq!((r.table[0].k, r.table[0].k_prime), (2, 2));
        assert!(condition_two(&p(&[-1, 1]).pow(5)).unwrap().holds);
    }

    #[test]
    fn perfectm_examples() {
        assert!(perfectm_shortcut(&p(&[-1, 1]).mul(&p(&[-2, 1]))).holds);
        assert!(!perfectm_shortcut(&p(&[1, 1])).holds);
        let r = perfectm_shortcut(&p(&[-1, 1]));
        assert!(r.holds && r.m == 1);
    }

    #[test]
    fn h2_route_examples() {
        assert!(h2_finite_route(&ZCModule::free(IntMatrix::from_i64(&[&[-1]]))).unwrap().holds);
        let root = ZCModule::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]));
        let r = h2_finite_route(&root).unwrap();
        assert!(!r.holds);
        assert_eq!(r.exterior_coinvariants, FgAbelian::free(1));
        assert!(!h2_finite_route(&ZCModule::free(IntMatrix::identity(1))).unwrap().holds);
    }

    #[test]
    fn jordan_examples() {
        let j = jordan_witness(&ZFinite::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]))).unwrap();
        assert!(j.holds);
        let j = jordan_witness(&ZFinite::free(IntMatrix::from_i64(&[&[-1, 2], &[0, -1]]))).unwrap();
        assert!(!j.holds);
        assert!(!jordan_witness(&ZFinite::free(IntMatrix::identity(2))).unwrap().holds);
        // conjugate of the root action by [[2, 1], [1, 1]]
        let p = IntMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let pinv = IntMatrix::from_i64(&[&[1, -1], &[-1, 2]]);
        let a = p.mul(&IntMatrix::from_i64(&[&[-1, 1], &[0, -1]])).mul(&pinv);
        assert!(jordan_witness(&ZFinite::free(a)).unwrap().holds);
    }

    #[test]
    fn classify_table() {
        let klein = ZCModule::free(IntMatrix::from_i64(&[&[-1]]));
        assert_eq!(classify(&klein).unwrap().kind, VerdictKind::AtMostOmegaPlusOne);
        let z13 = ZCModule::lattice(RatMatrix::from_i64(&[&[3]]), vec![rat_vec(&int_vec(&[1]))]);
        assert_eq!(classify(&z13).unwrap().kind, VerdictKind::AtMostOmega);
        let root = ZCModule::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]));
        let v = classify(&root).unwrap();
        assert_eq!(v.kind, VerdictKind::WitnessAtLeastOmegaPlusTwo);
        assert!(v.certificate.note.is_some());
        let demo = ZCModule::lattice(
            RatMatrix::from_i64(&[&[1, 0], &[0, 2]]),
            vec![rat_vec(&int_vec(&[1, 0])), rat_vec(&int_vec(&[0, 1]))],
        );
        let v = classify(&demo).unwrap();
        assert_eq!(v.kind, VerdictKind::LessThanOmega);
        assert!(v.certificate.fired.contains(&"condition_one"));
    }
}
