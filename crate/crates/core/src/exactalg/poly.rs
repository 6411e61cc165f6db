use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, RatMatrix};
use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients low to high; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - a`
    pub fn linear(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Division by a monic polynomial, exact over Z.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.degree().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        (Self::new(q), Self::new(r))
    }

    /// Number of times `x - 1` divides `self`, and the cofactor.
    pub fn split_root_one(&self) -> (usize, IntPoly) {
        let mut f = self.clone();
        let mut m = 0;
        let xm1 = Self::linear(1);
        while !f.is_zero() && f.eval(&BigInt::one()).is_zero() {
            f = f.div_rem_monic(&xm1).0;
            m += 1;
        }
        (m, f)
    }

    pub fn to_q(&self) -> QPoly {
        QPoly::from_int(self.clone())
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &IntMatrix) -> IntMatrix {
        let n = a.rows();
        let mut acc = IntMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a).add(&IntMatrix::identity(n).scale(c));
        }
        acc
    }

    pub fn eval_rat_matrix(&self, a: &RatMatrix) -> RatMatrix {
        self.to_q().eval_matrix(a)
    }
}

/// `x^deg f * f(1/x)`, sign-normalized to a positive leading coefficient.
pub fn reciprocal(f: &IntPoly) -> Result<IntPoly> {
    if f.coeff(0).is_zero() {
        return Err(Error::Precondition("reciprocal needs f(0) != 0".into()));
    }
    let mut c = f.coeffs.clone();
    c.reverse();
    let r = IntPoly::new(c);
    Ok(if r.leading().is_negative() { r.neg() } else { r })
}

/// Squarefree decomposition `f = prod s_k^k` of a monic integer polynomial (Yun's algorithm).
pub fn squarefree_decomposition(f: &IntPoly) -> Result<BTreeMap<usize, IntPoly>> {
    if !f.is_monic() {
        return Err(Error::Precondition("squarefree decomposition needs a monic polynomial".into()));
    }
    let mut out = BTreeMap::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let fq = f.to_q();
    let d = fq.derivative();
    let mut a = fq.gcd(&d);
    let mut b = fq.div_exact(&a);
    let mut c = d.div_exact(&a);
    let mut dd = c.sub(&b.derivative());
    let mut k = 1;
    while b.degree() > Some(0) {
        a = b.gcd(&dd);
        b = b.div_exact(&a);
        c = dd.div_exact(&a);
        dd = c.sub(&b.derivative());
        if a.degree() > Some(0) {
            let s = a.to_int().expect("monic factor of a monic integer polynomial is integral");
            out.insert(k, s);
        }
        k += 1;
    }
    Ok(out)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect::<Vec<_>>())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, c: &[BigRational]) -> fmt::Result {
    if c.iter().all(|x| x.is_zero()) {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let mag = a.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let show_coeff = !mag.is_one() || i == 0;
        if show_coeff {
            if mag.is_integer() {
                write!(f, "{}", mag.numer())?;
            } else {
                write!(f, "({}/{})", mag.numer(), mag.denom())?;
            }
        }
        match i {
            0 => {}
            1 => write!(f, "x")?,
            _ => write!(f, "x^{i}")?,
        }
    }
    Ok(())
}

/// Polynomial over Q stored as `num / den` with `den > 0` and `gcd(content(num), den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    num: IntPoly,
    den: BigInt,
}

impl QPoly {
    pub fn from_int(p: IntPoly) -> Self {
        QPoly { num: p, den: BigInt::one() }
    }

    pub fn from_ratio(num: IntPoly, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.content().gcd(&den);
        let g = if g.is_zero() { BigInt::one() } else { g };
        let (mut n, mut d) = (IntPoly::new(num.coeffs.iter().map(|c| c / &g).collect()), &den / &g);
        if d.is_negative() {
            n = n.neg();
            d = -d;
        }
        if n.is_zero() {
            d = BigInt::one();
        }
        QPoly { num: n, den: d }
    }

    pub fn from_coeffs(c: Vec<BigRational>) -> Self {
        let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let num = IntPoly::new(c.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect());
        Self::from_ratio(num, den)
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_int(IntPoly::from_i64(c))
    }

    pub fn zero() -> Self {
        Self::from_int(IntPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_int(IntPoly::one())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.coeffs.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num.coeff(i), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num == IntPoly::one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.num.degree()
    }

    pub fn leading(&self) -> BigRational {
        BigRational::new(self.num.leading(), self.den.clone())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_int(&self) -> Option<IntPoly> {
        self.is_integral().then(|| self.num.clone())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self::from_ratio(self.num.clone(), self.num.leading())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs().iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.num.scale(&o.den).add(&o.num.scale(&self.den));
        Self::from_ratio(n, &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        QPoly { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_ratio(self.num.mul(&o.num), &self.den * &o.den)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_ratio(self.num.scale(s.numer()), &self.den * s.denom())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::from_ratio(self.num.derivative(), self.den.clone())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dc = d.coeffs();
        let dd = dc.len() - 1;
        let lead = dc[dd].clone();
        let mut r = self.coeffs();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, x) in dc.iter().enumerate() {
                r[k + i] -= &c * x;
            }
            q[k] = c;
        }
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, o: &Self) -> bool {
        o.div_rem(self).1.is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        self.mul(o).div_exact(&self.gcd(o)).monic()
    }

    /// Monic reciprocal; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeff(0).is_zero() {
            return Err(Error::Precondition("reciprocal needs f(0) != 0".into()));
        }
        Ok(Self::from_int(reciprocal(&self.num)?).monic())
    }

    /// Whether `self` is (a unit multiple of) a power of `x - 1`.
    pub fn is_power_of_x_minus_one(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let xm1 = Self::from_i64(&[-1, 1]);
        let mut f = self.monic();
        while f.degree() > Some(0) {
            let (q, r) = f.div_rem(&xm1);
            if !r.is_zero() {
                return false;
            }
            f = q;
        }
        true
    }

    pub fn eval_matrix(&self, a: &RatMatrix) -> RatMatrix {
        let n = a.rows();
        let mut acc = RatMatrix::zeros(n, n);
        for c in self.coeffs().iter().rev() {
            acc = acc.mul(a).add(&RatMatrix::identity(n).scale(c));
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monic gcd over Q.
pub fn poly_gcd_rational(f: &QPoly, g: &QPoly) -> Result<QPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::Precondition("gcd of two zero polynomials".into()));
    }
    Ok(f.gcd(g))
}
