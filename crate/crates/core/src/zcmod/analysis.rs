use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ZCModule;
use crate::error::Result;
use crate::exactalg::{char_poly, min_poly, FgAbelian, QPoly};

/// Which generator of `C` has an integral characteristic polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    T,
    TInverse,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::T => write!(f, "t"),
            Generator::TInverse => write!(f, "t^-1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tameness {
    Yes { generator: Generator },
    No { reason: String },
    Undecided { reason: String },
}

#[derive(Clone, Debug)]
pub struct ModuleAnalysis {
    /// Dimension of `M ⊗ Q`; `None` when infinite.
    pub rank: Option<usize>,
    /// Z-torsion subgroup; `None` when unknown.
    pub tor: Option<FgAbelian>,
    pub mu: QPoly,
    pub chi: QPoly,
    pub tame: Tameness,
    pub invariant_free: bool,
}

impl ModuleAnalysis {
    pub fn is_tame(&self) -> bool {
        matches!(self.tame, Tameness::Yes { .. })
    }

    pub fn is_torsion_free(&self) -> bool {
        self.tor.as_ref().is_some_and(|t| t.is_zero())
    }
}

fn integral_generator(chi: &QPoly) -> Option<Generator> {
    if chi.is_integral() {
        return Some(Generator::T);
    }
    let rev = chi.reciprocal().ok()?;
    rev.is_integral().then_some(Generator::TInverse)
}

pub fn analyze(m: &ZCModule) -> Result<ModuleAnalysis> {
    m.validate()?;
    match m {
        ZCModule::ZFinite(z) => {
            let fp = z.free_part();
            let a = fp.action.to_rat();
            let chi = char_poly(&a)?;
            let mu = min_poly(&a)?;
            Ok(ModuleAnalysis {
                rank: Some(fp.rank),
                tor: Some(fp.torsion),
                mu,
                chi,
                tame: Tameness::Yes { generator: Generator::T },
                invariant_free: z.invariants().is_zero(),
            })
        }
        ZCModule::Lattice(l) => {
            let a = l.restricted_action();
            let chi = char_poly(&a)?;
            let mu = min_poly(&a)?;
            let tame = match l.integral_generator() {
                Some(false) => Tameness::Yes { generator: Generator::T },
                Some(true) => Tameness::Yes { generator: Generator::TInverse },
                None => Tameness::No { reason: "characteristic polynomial is non-integral for t and for t^-1".into() },
            };
            let invariant_free = !mu.eval(&BigRational::one()).is_zero();
            Ok(ModuleAnalysis { rank: Some(a.rows()), tor: Some(FgAbelian::zero()), mu, chi, tame, invariant_free })
        }
        ZCModule::Laurent(p) => {
            let rs = p.rational_structure();
            let Some(rank) = rs.rank() else {
                return Ok(ModuleAnalysis {
                    rank: None,
                    tor: None,
                    mu: QPoly::zero(),
                    chi: QPoly::zero(),
                    tame: Tameness::No { reason: "M ⊗ Q has a free Q[t, t^-1] summand (infinite rank)".into() },
                    invariant_free: false,
                });
            };
            let chi = rs.chi();
            let mu = rs.mu();
            let tame = match integral_generator(&chi) {
                Some(g) => Tameness::Undecided {
                    reason: format!(
                        "characteristic polynomial is integral for {g}; finiteness of the Z-torsion is not decided for Laurent presentations"
                    ),
                },
                None => Tameness::No { reason: "characteristic polynomial is non-integral for t and for t^-1".into() },
            };
            let invariant_free = !mu.eval(&BigRational::one()).is_zero();
            Ok(ModuleAnalysis { rank: Some(rank), tor: None, mu, chi, tame, invariant_free })
        }
    }
}
