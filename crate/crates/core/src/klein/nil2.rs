use std::fmt;

/// `a^i b^j c^k` in the free class-2 group on `a, b`, with `c = [a, b] = a⁻¹b⁻¹ab` central.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Nil2 {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl Nil2 {
    pub const ONE: Nil2 = Nil2 { i: 0, j: 0, k: 0 };
    pub const A: Nil2 = Nil2 { i: 1, j: 0, k: 0 };
    pub const B: Nil2 = Nil2 { i: 0, j: 1, k: 0 };
    pub const C: Nil2 = Nil2 { i: 0, j: 0, k: 1 };

    pub fn new(i: i64, j: i64, k: i64) -> Self {
        Nil2 { i, j, k }
    }

    /// Collecting `b^j a^i' = a^i' b^j c^(-j i')`.
    pub fn mul(self, o: Nil2) -> Nil2 {
        Nil2 { i: self.i + o.i, j: self.j + o.j, k: self.k + o.k - self.j * o.i }
    }

    pub fn inv(self) -> Nil2 {
        Nil2 { i: -self.i, j: -self.j, k: -self.k - self.i * self.j }
    }

    /// `x^e = (e i, e j, e k - i j e(e-1)/2)`.
    pub fn pow(self, e: i64) -> Nil2 {
        Nil2 { i: e * self.i, j: e * self.j, k: e * self.k - self.i * self.j * (e * (e - 1) / 2) }
    }

    pub fn commutator(self, o: Nil2) -> Nil2 {
        self.inv().mul(o.inv()).mul(self).mul(o)
    }

    /// `a ↦ a⁻¹`, `b ↦ ab⁻¹`; fixes `c`.
    pub fn tau(self) -> Nil2 {
        Nil2 { i: self.j - self.i, j: -self.j, k: self.k + self.j * (self.j - 1) / 2 }
    }

    pub fn tau_inv(self) -> Nil2 {
        // τ is an involution on the abelianization; solve τ(x) = self
        let j = -self.j;
        let i = j - self.i;
        Nil2 { i, j, k: self.k - j * (j - 1) / 2 }
    }

    /// Image in `K_ab = Z²`.
    pub fn abelian(self) -> [i64; 2] {
        [self.i, self.j]
    }
}

impl fmt::Display for Nil2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} b^{} c^{}", self.i, self.j, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_of_generators_is_c() {
        assert_eq!(Nil2::A.commutator(Nil2::B), Nil2::C);
        assert_eq!(Nil2::A.pow(2).commutator(Nil2::B.pow(3)), Nil2::C.pow(6));
        let ab = Nil2::A.mul(Nil2::B);
        assert_eq!(ab.mul(ab), Nil2::new(2, 2, -1));
    }

    #[test]
    fn tau_on_generators() {
        assert_eq!(Nil2::A.tau(), Nil2::A.inv());
        assert_eq!(Nil2::B.tau(), Nil2::A.mul(Nil2::B.inv()));
        assert_eq!(Nil2::C.tau(), Nil2::C);
        assert_eq!(Nil2::ONE.tau(), Nil2::ONE);
        // c = [a, b] maps to [a⁻¹, ab⁻¹]
        assert_eq!(Nil2::A.inv().commutator(Nil2::A.mul(Nil2::B.inv())), Nil2::C);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = Nil2::new(3, -2, 5);
        let mut acc = Nil2::ONE;
        for e in 0..6 {
            assert_eq!(x.pow(e), acc);
            assert_eq!(x.pow(-e), acc.inv());
            acc = acc.mul(x);
        }
    }

    #[test]
    fn tau_inverse() {
        for x in [Nil2::new(3, -2, 5), Nil2::new(-1, 7, 0), Nil2::new(0, 4, -3)] {
            assert_eq!(x.tau().tau_inv(), x);
            assert_eq!(x.tau_inv().tau(), x);
        }
    }
}
