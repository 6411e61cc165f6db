use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Finitely generated abelian group `Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk` with `d1 | d2 | ... | dk`, all `di >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelian {
    pub free_rank: usize,
    #[serde(with = "bigint_vec")]
    pub torsion: Vec<BigInt>,
}

impl FgAbelian {
    /// Canonicalizes arbitrary cyclic orders into an invariant-factor chain.
    pub fn new(free_rank: usize, orders: Vec<BigInt>) -> Self {
        let mut free_rank = free_rank;
        let mut primes: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
        for o in orders {
            let o = o.abs();
            if o.is_zero() {
                free_rank += 1;
                continue;
            }
            for (p, e) in factor(&o) {
                let pk = num_traits::pow(p.clone(), e as usize);
                match primes.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, v)) => v.push(pk),
                    None => primes.push((p, vec![pk])),
                }
            }
        }
        let len = primes.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut torsion = vec![BigInt::one(); len];
        for (_, mut v) in primes {
            v.sort();
            let off = len - v.len();
            for (i, pk) in v.into_iter().enumerate() {
                torsion[off + i] *= pk;
            }
        }
        FgAbelian { free_rank, torsion }
    }

    pub fn zero() -> Self {
        FgAbelian { free_rank: 0, torsion: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelian { free_rank: rank, torsion: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(0, vec![BigInt::from(n)])
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order if finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    pub fn exponent(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.last().cloned().unwrap_or_else(BigInt::one))
    }

    pub fn direct_sum(&self, other: &FgAbelian) -> FgAbelian {
        let mut t = self.torsion.clone();
        t.extend(other.torsion.iter().cloned());
        FgAbelian::new(self.free_rank + other.free_rank, t)
    }

    pub fn torsion_subgroup(&self) -> FgAbelian {
        FgAbelian { free_rank: 0, torsion: self.torsion.clone() }
    }
}

/// Trial-division factorization; orders appearing here are small.
fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

impl fmt::Display for FgAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

mod bigint_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter().map(|x| x.parse().map_err(serde::de::Error::custom)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::matrix::int_vec;

    #[test]
    fn canonical_chain() {
        let g = FgAbelian::new(1, int_vec(&[2, 3, 4, 1, 0]));
        assert_eq!(g.free_rank, 2);
        assert_eq!(g.torsion, int_vec(&[2, 12]));
        assert_eq!(g.to_string(), "Z/2 + Z/12 + Z^2");
    }

    #[test]
    fn order_and_sum() {
        let g = FgAbelian::cyclic(4).direct_sum(&FgAbelian::cyclic(6));
        assert_eq!(g.torsion, int_vec(&[2, 12]));
        assert_eq!(g.order(), Some(BigInt::from(24)));
        assert!(FgAbelian::new(0, int_vec(&[1, 1])).is_zero());
    }
}
