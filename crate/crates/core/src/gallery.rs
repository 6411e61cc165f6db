//! Named modules addressable without an input file.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exactalg::{IntMatrix, RatMatrix};
use crate::klein::Nil2;
use crate::zcmod::{ZCModule, ZFinite};

pub struct Entry {
    pub name: &'static str,
    pub description: &'static str,
    pub build: fn() -> ZCModule,
}

fn scalar_lattice(n: i64) -> ZCModule {
    ZCModule::lattice(RatMatrix::from_i64(&[&[n]]), vec![vec![BigRational::from_integer(BigInt::from(1))]])
}

pub fn klein() -> ZCModule {
    ZCModule::free(IntMatrix::from_i64(&[&[-1]]))
}

pub fn root() -> ZCModule {
    ZCModule::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]))
}

pub fn z13() -> ZCModule {
    scalar_lattice(3)
}

pub fn z12() -> ZCModule {
    scalar_lattice(2)
}

/// `Z ⊕ Z[1/2]` with `t` acting by `diag(1, 2)`, so `μ = (x - 1)(x - 2)`.
pub fn perfectm_demo() -> ZCModule {
    let one = || BigRational::from_integer(BigInt::from(1));
    let zero = || BigRational::from_integer(BigInt::from(0));
    ZCModule::lattice(RatMatrix::from_i64(&[&[1, 0], &[0, 2]]), vec![vec![one(), zero()], vec![zero(), one()]])
}

/// Abelianization of the free class-2 group with the action induced by its order-two automorphism.
pub fn gamma() -> ZCModule {
    let cols = [Nil2::A.tau().abelian(), Nil2::B.tau().abelian()];
    let a = IntMatrix::from_i64(&[&[cols[0][0], cols[1][0]], &[cols[0][1], cols[1][1]]]);
    ZCModule::ZFinite(ZFinite::free(a))
}

/// `Z²` with `t` acting by `[[1, 1], [0, 1]]`.
pub fn unipotent() -> ZCModule {
    ZCModule::free(IntMatrix::from_i64(&[&[1, 1], &[0, 1]]))
}

/// `Z²` with trivial action, so `M ⋊ C = Z³`.
pub fn trivial2() -> ZCModule {
    ZCModule::free(IntMatrix::identity(2))
}

pub const ENTRIES: &[Entry] = &[
    Entry { name: "klein", description: "Z with t acting by -1", build: klein },
    Entry { name: "root", description: "Z^2 with t acting by [[-1, 1], [0, -1]]", build: root },
    Entry { name: "z13", description: "Z[1/3] with t acting by 3", build: z13 },
    Entry { name: "z12", description: "Z[1/2] with t acting by 2", build: z12 },
    Entry { name: "perfectm-demo", description: "Z + Z[1/2] with t acting by diag(1, 2)", build: perfectm_demo },
    Entry { name: "gamma", description: "abelianized free class-2 group, a -> a^-1, b -> ab^-1", build: gamma },
    Entry { name: "unipotent", description: "Z^2 with t acting by [[1, 1], [0, 1]]", build: unipotent },
    Entry { name: "trivial2", description: "Z^2 with trivial action", build: trivial2 },
];

pub fn get(name: &str) -> Option<ZCModule> {
    ENTRIES.iter().find(|e| e.name == name).map(|e| (e.build)())
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_validate() {
        for e in ENTRIES {
            (e.build)().validate().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }

    #[test]
    fn gamma_is_the_root_module() {
        assert_eq!(gamma(), root());
        assert!(get("nope").is_none());
    }
}
