use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::RatMatrix;
use super::poly::QPoly;
use crate::error::{Error, Result};

fn square(a: &RatMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::Dimension(format!("expected a square matrix, got {}x{}", a.rows(), a.cols())))
    }
}

/// Characteristic polynomial `det(xI - A)` (Faddeev-LeVerrier).
pub fn char_poly(a: &RatMatrix) -> Result<QPoly> {
    square(a)?;
    let n = a.rows();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m = RatMatrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&RatMatrix::identity(n).scale(&c[n - k + 1]));
        let am = a.mul(&m);
        let tr = (0..n).fold(BigRational::zero(), |s, i| s + &am[(i, i)]);
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    Ok(QPoly::from_coeffs(c))
}

/// Monic polynomial of least degree with `p(A) v = 0`.
pub fn vector_min_poly(a: &RatMatrix, v: &[BigRational]) -> QPoly {
    let n = a.rows();
    if v.iter().all(|x| x.is_zero()) {
        return QPoly::one();
    }
    let mut cols = vec![v.to_vec()];
    for _ in 0..n {
        let next = a.mul_vec(cols.last().unwrap());
        cols.push(next);
    }
    let k = RatMatrix::from_columns(&cols, n);
    let (r, piv) = k.rref();
    let d = (0..=n).find(|c| !piv.contains(c)).expect("n+1 vectors in dimension n are dependent");
    let mut coeffs: Vec<BigRational> = (0..d).map(|i| -r[(i, d)].clone()).collect();
    coeffs.push(BigRational::one());
    QPoly::from_coeffs(coeffs)
}

/// Minimal polynomial: lcm of the minimal polynomials of the standard basis vectors.
pub fn min_poly(a: &RatMatrix) -> Result<QPoly> {
    square(a)?;
    let n = a.rows();
    let mut mu = QPoly::one();
    for i in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[i] = BigRational::one();
        mu = mu.lcm(&vector_min_poly(a, &e));
    }
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let root = RatMatrix::from_i64(&[&[-1, 1], &[0, -1]]);
        assert_eq!(char_poly(&root).unwrap(), QPoly::from_i64(&[1, 2, 1]));
        assert_eq!(min_poly(&root).unwrap(), QPoly::from_i64(&[1, 2, 1]));
        assert_eq!(char_poly(&RatMatrix::from_i64(&[&[3]])).unwrap(), QPoly::from_i64(&[-3, 1]));
        assert_eq!(char_poly(&RatMatrix::identity(2)).unwrap(), QPoly::from_i64(&[1, -2, 1]));
        assert_eq!(min_poly(&RatMatrix::identity(2)).unwrap(), QPoly::from_i64(&[-1, 1]));
        let d = RatMatrix::from_i64(&[&[1, 0], &[0, 2]]);
        assert_eq!(min_poly(&d).unwrap(), QPoly::from_i64(&[2, -3, 1]));
        assert!(char_poly(&RatMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn annihilates() {
        let a = RatMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[2, -1, 3]]);
        let mu = min_poly(&a).unwrap();
        assert!(mu.eval_matrix(&a).is_zero());
        assert!(char_poly(&a).unwrap().eval_matrix(&a).is_zero());
    }
}
