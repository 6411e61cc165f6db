//! Finitely generated modules over `Z[C] = Z[t, t^-1]` in three representations, and their structure.

mod analysis;
mod lattice;
mod laurent;
mod squares;
mod zfinite;

pub use analysis::{analyze, Generator, ModuleAnalysis, Tameness};
pub use lattice::{LatticeModule, TameModel};
pub use laurent::{invariant_factors, LaurentEntry, LaurentModule, RationalStructure};
pub use squares::{square_coinvariants_map, SquareCoinvariants};
pub use zfinite::{tensor_to_wedge, FreePart, ZFinite};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::{FgAbelian, IntMatrix, IntPoly, RatMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZCModule {
    ZFinite(ZFinite),
    Lattice(LatticeModule),
    Laurent(LaurentModule),
}

impl ZCModule {
    /// `Z^n` with `t` acting by `a`.
    pub fn free(a: IntMatrix) -> Self {
        ZCModule::ZFinite(ZFinite::free(a))
    }

    /// The `Z[t, t^-1]`-span of `generators` in `Q^n`.
    pub fn lattice(action: RatMatrix, generators: Vec<Vec<BigRational>>) -> Self {
        ZCModule::Lattice(LatticeModule::new(action, generators))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ZCModule::ZFinite(_) => "zfinite",
            ZCModule::Lattice(_) => "lattice",
            ZCModule::Laurent(_) => "laurent",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ZCModule::ZFinite(m) => m.validate(),
            ZCModule::Lattice(m) => m.validate(),
            ZCModule::Laurent(m) => m.validate(),
        }
    }

    pub fn analyze(&self) -> Result<ModuleAnalysis> {
        analyze(self)
    }

    /// `M^f = {m : m f(t) = 0}`.
    pub fn annihilator_submodule(&self, f: &IntPoly) -> Result<ZCModule> {
        match self {
            ZCModule::ZFinite(m) => Ok(ZCModule::ZFinite(m.annihilator(f))),
            ZCModule::Lattice(m) => Ok(ZCModule::Lattice(m.annihilator(f)?)),
            ZCModule::Laurent(_) => Err(Error::Unsupported("annihilator of a Laurent presentation".into())),
        }
    }

    /// Largest nilpotent submodule `N = M^{(x-1)^m}` where `μ_M = (x-1)^m f`, `f(1) != 0`, and `M / N`.
    pub fn largest_nilpotent_submodule(&self) -> Result<(ZCModule, ZCModule)> {
        let an = self.analyze()?;
        if !matches!(an.tame, Tameness::Yes { .. }) {
            return Err(Error::NotTame("largest nilpotent submodule needs a tame module".into()));
        }
        let mu = an.mu.to_int().expect("tame modules have integral minimal polynomial");
        let (m, _) = mu.split_root_one();
        let f = IntPoly::linear(1).pow(m as u32);
        match self {
            ZCModule::ZFinite(z) => {
                let p = z.annihilator_lattice(&f);
                Ok((ZCModule::ZFinite(z.submodule(&p)), ZCModule::ZFinite(z.quotient(&p))))
            }
            ZCModule::Lattice(l) => {
                let n = l.annihilator(&f)?;
                let span = n.span_basis();
                Ok((ZCModule::Lattice(n), ZCModule::Lattice(l.quotient_by_subspace(&span))))
            }
            ZCModule::Laurent(_) => Err(Error::Unsupported("nilpotent submodule of a Laurent presentation".into())),
        }
    }

    /// `M^C`.
    pub fn invariants(&self) -> Result<FgAbelian> {
        match self {
            ZCModule::ZFinite(m) => Ok(m.invariants()),
            ZCModule::Lattice(m) => m.invariants(),
            ZCModule::Laurent(_) => Err(Error::Unsupported("invariants of a Laurent presentation".into())),
        }
    }

    /// `M_C = M / MI`.
    pub fn coinvariants(&self) -> Result<FgAbelian> {
        match self {
            ZCModule::ZFinite(m) => Ok(m.coinvariants()),
            ZCModule::Lattice(m) => m.coinvariants(),
            ZCModule::Laurent(_) => Ok(crate::completion::truncate(self, 1)?.group),
        }
    }

    pub fn tensor_square(&self) -> Result<ZCModule> {
        match self {
            ZCModule::ZFinite(m) => Ok(ZCModule::ZFinite(m.tensor_square())),
            ZCModule::Lattice(m) => Ok(ZCModule::Lattice(m.tensor_square()?)),
            ZCModule::Laurent(_) => Err(Error::Unsupported("tensor square of a Laurent presentation".into())),
        }
    }

    pub fn exterior_square(&self) -> Result<ZCModule> {
        match self {
            ZCModule::ZFinite(m) => Ok(ZCModule::ZFinite(m.exterior_square())),
            ZCModule::Lattice(m) => Ok(ZCModule::Lattice(m.exterior_square()?)),
            ZCModule::Laurent(_) => Err(Error::Unsupported("exterior square of a Laurent presentation".into())),
        }
    }

    /// Underlying abelian group, when finitely generated and known.
    pub fn underlying(&self) -> Option<FgAbelian> {
        match self {
            ZCModule::ZFinite(m) => Some(m.underlying()),
            _ => None,
        }
    }
}

impl From<ZFinite> for ZCModule {
    fn from(m: ZFinite) -> Self {
        ZCModule::ZFinite(m)
    }
}

impl From<LatticeModule> for ZCModule {
    fn from(m: LatticeModule) -> Self {
        ZCModule::Lattice(m)
    }
}

impl From<LaurentModule> for ZCModule {
    fn from(m: LaurentModule) -> Self {
        ZCModule::Laurent(m)
    }
}
