//! Low-degree homology of `G = M ⋊ C` for torsion-free `M`, and finite-stage shadows of `H₂(η_ω)`.
//!
//! `H₂(G)` sits in `0 -> (Λ²M)_C -> H₂(G) -> M^C -> 0`. The stages of the tower are cokernels of
//! `(Λ²M)_C -> (Λ²(M/MI^i))_C`. Divisible pieces of the limit are invisible at every finite stage.


use crate::completion::truncate;
use crate::error::{Error, Result};
use crate::exactalg::{
    cokernel, contains_cols, exterior_square_matrix, preimage_lattice, FgAbelian, IntMatrix,
};
use crate::zcmod::{ZCModule, ZFinite};

/// `M_C ⊕ Z`.
pub fn h1_semidirect(m: &ZCModule) -> Result<FgAbelian> {
    Ok(m.coinvariants()?.direct_sum(&FgAbelian::free(1)))
}

#[derive(Clone, Debug)]
pub struct H2Report {
    /// `(Λ²M)_C`
    pub left_end: FgAbelian,
    /// `M^C`
    pub right_end: FgAbelian,
    /// Exact value when the extension is forced, `None` when ambiguous.
    pub h2: Option<FgAbelian>,
    pub reason: String,
}

fn require_torsion_free(m: &ZCModule) -> Result<()> {
    match m {
        ZCModule::ZFinite(z) => {
            let t = z.underlying().torsion_subgroup();
            if t.is_zero() {
                Ok(())
            } else {
                Err(Error::Precondition(format!(
                    "M has torsion {t}; H₂(M) is not Λ²M and needs Tor terms, which are not computed"
                )))
            }
        }
        ZCModule::Lattice(_) => Ok(()),
        ZCModule::Laurent(_) => Err(Error::Unsupported("H₂ of a Laurent presentation".into())),
    }
}

pub fn h2_semidirect(m: &ZCModule) -> Result<H2Report> {
    require_torsion_free(m)?;
    let left = m.exterior_square()?.coinvariants()?;
    let right = m.invariants()?;
    let (h2, reason) = if right.is_zero() {
        (Some(left.clone()), "right end is zero".to_string())
    } else if left.is_zero() {
        (Some(right.clone()), "left end is zero".to_string())
    } else if right.is_free() {
        (Some(left.direct_sum(&right)), "right end is free, so the sequence splits".to_string())
    } else {
        (None, "extension ambiguous".to_string())
    };
    Ok(H2Report { left_end: left, right_end: right, h2, reason })
}

#[derive(Clone, Debug)]
pub struct EtaStage {
    pub level: usize,
    /// `(Λ²(M/MI^i))_C`
    pub stage_coinvariants: FgAbelian,
    /// Cokernel of `(Λ²M)_C -> (Λ²(M/MI^i))_C`.
    pub cokernel: FgAbelian,
    /// Reduction from this stage to the previous one is surjective.
    pub transition_surjective: bool,
}

/// The stage presentation is on the same generators as `M` (or `M_+` for lattices), so `Λ²`
/// of the reduction is the identity on `e_a ∧ e_b`.
pub fn h2_eta_tower(m: &ZCModule, imax: usize) -> Result<Vec<EtaStage>> {
    require_torsion_free(m)?;
    let mut out: Vec<EtaStage> = Vec::new();
    let mut prev_rel: Option<IntMatrix> = None;
    for i in 1..=imax {
        let stage = truncate(m, i)?.to_zfinite();
        let ext = stage.exterior_square();
        let n = ext.gens();
        let rel = ext.relation_cols().hstack(&ext.action.sub(&IntMatrix::identity(n)));
        let image = IntMatrix::identity(n);
        let cok = cokernel(&image.hstack(&rel));
        let transition_surjective = match &prev_rel {
            None => true,
            Some(p) => cokernel(&image.hstack(p)).is_zero(),
        };
        out.push(EtaStage { level: i, stage_coinvariants: cokernel(&rel), cokernel: cok, transition_surjective });
        prev_rel = Some(rel);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct EndMaps {
    /// `Λ²f` on `e_a ∧ e_b` bases.
    pub left: IntMatrix,
    /// `f` restricted to invariants, in the invariant lattice bases.
    pub right: IntMatrix,
    pub left_well_defined: bool,
    pub right_well_defined: bool,
}

/// Maps induced on both ends by an equivariant homomorphism `f: M -> N` of free-presented modules.
pub fn induced_end_maps(m: &ZFinite, n: &ZFinite, f: &IntMatrix) -> Result<EndMaps> {
    let equivariant = f.mul(&m.action).sub(&n.action.mul(f));
    if !contains_cols(&n.relation_cols(), &equivariant) || !contains_cols(&n.relation_cols(), &f.mul(&m.relation_cols())) {
        return Err(Error::Precondition("map is not an equivariant homomorphism".into()));
    }
    let (em, en) = (m.exterior_square(), n.exterior_square());
    let left = exterior_square_matrix(f);
    let rel = |z: &ZFinite| z.relation_cols().hstack(&z.action.sub(&IntMatrix::identity(z.gens())));
    let left_well_defined = contains_cols(&rel(&en), &left.mul(&rel(&em)));
    let inv = |z: &ZFinite| preimage_lattice(&z.action.sub(&IntMatrix::identity(z.gens())), &z.relation_cols());
    let (pm, pn) = (inv(m), inv(n));
    let img = f.mul(&pm);
    let right_well_defined = contains_cols(&pn, &img);
    let right = if pn.cols() == 0 || pm.cols() == 0 {
        IntMatrix::zeros(pn.cols(), pm.cols())
    } else {
        crate::exactalg::solve_int_matrix(&pn, &img).unwrap_or_else(|| IntMatrix::zeros(pn.cols(), pm.cols()))
    };
    Ok(EndMaps { left, right, left_well_defined, right_well_defined })
}

pub fn order_consistent(r: &H2Report) -> bool {
    match (&r.h2, r.left_end.order(), r.right_end.order()) {
        (Some(h), Some(a), Some(b)) => h.order() == Some(a * b),
        (Some(h), _, _) => !h.is_finite(),
        _ => true,
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int_vec, rat_vec, RatMatrix};

    fn klein() -> ZCModule {
        ZCModule::free(IntMatrix::from_i64(&[&[-1]]))
    }

    fn root() -> ZCModule {
        ZCModule::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]))
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1_semidirect(&klein()).unwrap(), FgAbelian::new(1, int_vec(&[2])));
        assert_eq!(h1_semidirect(&root()).unwrap(), FgAbelian::new(1, int_vec(&[4])));
        assert_eq!(h1_semidirect(&ZCModule::free(IntMatrix::identity(1))).unwrap(), FgAbelian::free(2));
    }

    #[test]
    fn h2_examples() {
        assert_eq!(h2_semidirect(&klein()).unwrap().h2, Some(FgAbelian::zero()));
        let r = h2_semidirect(&root()).unwrap();
        assert_eq!(r.h2, Some(FgAbelian::free(1)));
        assert!(r.right_end.is_zero());
        let r = h2_semidirect(&ZCModule::free(IntMatrix::identity(2))).unwrap();
        assert_eq!(r.left_end, FgAbelian::free(1));
        assert_eq!(r.right_end, FgAbelian::free(2));
        assert_eq!(r.h2, Some(FgAbelian::free(3)));
        let torsion = ZCModule::ZFinite(ZFinite::new(IntMatrix::from_i64(&[&[2]]), IntMatrix::identity(1)));
        assert!(h2_semidirect(&torsion).is_err());
    }

    #[test]
    fn eta_towers() {
        assert!(h2_eta_tower(&klein(), 4).unwrap().iter().all(|s| s.cokernel.is_zero()));
        let z13 = ZCModule::lattice(RatMatrix::from_i64(&[&[3]]), vec![rat_vec(&int_vec(&[1]))]);
        assert!(h2_eta_tower(&z13, 4).unwrap().iter().all(|s| s.cokernel.is_zero()));
        let t = h2_eta_tower(&root(), 2).unwrap();
        assert_eq!(t[1].stage_coinvariants, FgAbelian::cyclic(4));
        assert!(t[1].cokernel.is_zero());
        assert!(t.iter().all(|s| s.transition_surjective));
    }

    #[test]
    fn naturality_root_onto_klein() {
        let m = ZFinite::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]));
        let n = ZFinite::free(IntMatrix::from_i64(&[&[-1]]));
        let f = IntMatrix::from_i64(&[&[0, 1]]);
        let e = induced_end_maps(&m, &n, &f).unwrap();
        assert!(e.left_well_defined && e.right_well_defined);
        assert!(induced_end_maps(&m, &n, &IntMatrix::from_i64(&[&[1, 0]])).is_err());
    }
}
