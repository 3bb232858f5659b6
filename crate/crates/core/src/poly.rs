//! Exact integer polynomials (characteristic polynomials via
//! Faddeev–LeVerrier), exact root division, and a bisection root solver for
//! the small monic cubics arising from 3x3 quotient matrices.

use crate::matrix::IntSymMatrix;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// A polynomial with exact integer coefficients, stored degree-descending
/// (leading coefficient first). Characteristic polynomials here are monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPoly {
    pub coeffs: Vec<BigInt>,
}

impl ExactPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        ExactPoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        ExactPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Monic product of linear factors `(x - r)` over the given roots.
    pub fn monic_from_roots(roots: &[BigInt]) -> Self {
        let mut p = ExactPoly::one();
        for r in roots {
            p = p.mul_linear(r);
        }
        p
    }

    /// Multiply by `(x - r)`.
    pub fn mul_linear(&self, r: &BigInt) -> ExactPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
            out[i + 1] -= c * r;
        }
        ExactPoly { coeffs: out }
    }

    /// Multiply every coefficient by an integer scalar.
    pub fn scale(&self, k: &BigInt) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Coefficient-wise sum (degrees may differ).
    pub fn add(&self, other: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().rev().enumerate() {
            out[n - 1 - i] += c;
        }
        for (i, c) in other.coeffs.iter().rev().enumerate() {
            out[n - 1 - i] += c;
        }
        ExactPoly { coeffs: out }
    }

    pub fn mul(&self, other: &ExactPoly) -> ExactPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly { coeffs: out }
    }

    /// Horner evaluation at an integer point.
    pub fn eval_big(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in &self.coeffs {
            acc = acc * x + c.to_f64().expect("coefficient fits in f64");
        }
        acc
    }

    /// Exact synthetic division by `(x - r)`; `None` when the remainder is
    /// nonzero (i.e. `r` is not a root).
    pub fn divide_linear_exact(&self, r: &BigInt) -> Option<ExactPoly> {
        if self.coeffs.len() < 2 {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut acc = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc = acc * r + c;
            out.push(acc.clone());
        }
        let rem = acc * r + &self.coeffs[self.coeffs.len() - 1];
        if rem.is_zero() {
            Some(ExactPoly { coeffs: out })
        } else {
            None
        }
    }

    /// Multiplicity of `r` as an exact root (0 when not a root).
    pub fn multiplicity_of_root(&self, r: &BigInt) -> usize {
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.divide_linear_exact(r) {
            p = q;
            k += 1;
        }
        k
    }

    /// Coefficients as decimal strings (degree-descending), for lossless
    /// JSON output.
    pub fn to_dec_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Exact characteristic polynomial `det(xI - A)` of a symmetric integer
/// matrix, by the Faddeev–LeVerrier recurrence. Every division in the
/// recurrence is checked to be exact.
pub fn char_poly_exact(a: &IntSymMatrix) -> ExactPoly {
    let n = a.n;
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    let mut m = IntSymMatrix::zeros(n);
    for i in 0..n {
        m.a[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        let am = a.mul(&m);
        let t = am.trace();
        let kk = BigInt::from(k as i64);
        let c = -(&t / &kk);
        assert!(
            (&c * &kk + &t).is_zero(),
            "trace divisibility fails in Faddeev-LeVerrier"
        );
        m = am;
        for i in 0..n {
            m.a[i * n + i] += &c;
        }
        coeffs.push(c);
    }
    ExactPoly { coeffs }
}

/// Real roots, descending and with multiplicity, of a monic cubic
/// `x^3 + c2 x^2 + c1 x + c0` known to have only real roots (it arises as the
/// characteristic polynomial of a diagonally symmetrizable matrix). Roots are
/// isolated by the critical points of the cubic and refined by bisection.
pub fn real_roots_cubic(c2: f64, c1: f64, c0: f64) -> [f64; 3] {
    let p = |x: f64| ((x + c2) * x + c1) * x + c0;
    let bound = 1.0 + c2.abs().max(c1.abs()).max(c0.abs());
    let vtol = 1e-10 * (1.0 + bound * bound * bound);
    let bisect = |mut lo: f64, mut hi: f64| -> f64 {
        let (mut flo, fhi) = (p(lo), p(hi));
        debug_assert!(flo * fhi <= 0.0, "bisection bracket must change sign");
        if flo == 0.0 {
            return lo;
        }
        if fhi == 0.0 {
            return hi;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = p(mid);
            if fm == 0.0 {
                return mid;
            }
            if (fm > 0.0) == (flo > 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    // critical points of x^3 + c2 x^2 + c1 x + c0
    let disc = c2 * c2 - 3.0 * c1;
    if disc <= vtol {
        // monotone (or inflection-degenerate): with all roots real this is a
        // triple root at the inflection point
        let r = -c2 / 3.0;
        return [r, r, r];
    }
    let s = disc.sqrt();
    let r1 = (-c2 - s) / 3.0; // local max
    let r2 = (-c2 + s) / 3.0; // local min
    let (v1, v2) = (p(r1), p(r2));
    let mut roots = if v1.abs() <= vtol && v2.abs() <= vtol {
        let r = -c2 / 3.0;
        [r, r, r]
    } else if v1.abs() <= vtol {
        // double root at the local max, simple root beyond the local min
        [r1, r1, bisect(r2, bound)]
    } else if v2.abs() <= vtol {
        [bisect(-bound, r1), r2, r2]
    } else {
        [bisect(-bound, r1), bisect(r1, r2), bisect(r2, bound)]
    };
    roots.sort_by(|a, b| b.partial_cmp(a).expect("roots are finite"));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntSymMatrix;

    #[test]
    fn char_poly_of_small_seidel_matrices() {
        // K2: [[0,-1],[-1,0]] -> x^2 - 1
        let m = IntSymMatrix::from_i64(2, &[0, -1, -1, 0]);
        assert_eq!(char_poly_exact(&m), ExactPoly::from_i64(&[1, 0, -1]));

        // P3: [[0,-1,-3],[-1,0,-1],[-3,-1,0]] -> x^3 - 11x + 6
        let m = IntSymMatrix::from_i64(3, &[0, -1, -3, -1, 0, -1, -3, -1, 0]);
        let p = char_poly_exact(&m);
        assert_eq!(p, ExactPoly::from_i64(&[1, 0, -11, 6]));
        assert_eq!((-BigInt::from(1)) * p.eval_big(&BigInt::zero()), m.det_bareiss());

        // K4: I - J -> (x-1)^3 (x+3) = x^4 - 6x^2 + 8x - 3
        let m = IntSymMatrix::from_i64(
            4,
            &[0, -1, -1, -1, -1, 0, -1, -1, -1, -1, 0, -1, -1, -1, -1, 0],
        );
        let p = char_poly_exact(&m);
        assert_eq!(p, ExactPoly::from_i64(&[1, 0, -6, 8, -3]));
        let roots: Vec<BigInt> = [1, 1, 1, -3].iter().map(|&r| BigInt::from(r)).collect();
        assert_eq!(ExactPoly::monic_from_roots(&roots), p);

        // empty and trivial orders
        assert_eq!(char_poly_exact(&IntSymMatrix::zeros(0)), ExactPoly::one());
        assert_eq!(
            char_poly_exact(&IntSymMatrix::zeros(1)),
            ExactPoly::from_i64(&[1, 0])
        );
    }

    #[test]
    fn division_and_multiplicity() {
        // (x-3)^2 (x+1) = x^3 - 5x^2 + 3x + 9
        let p = ExactPoly::from_i64(&[1, -5, 3, 9]);
        let three = BigInt::from(3);
        let q = p.divide_linear_exact(&three).unwrap();
        assert_eq!(q, ExactPoly::from_i64(&[1, -2, -3]));
        assert_eq!(p.multiplicity_of_root(&three), 2);
        assert_eq!(p.multiplicity_of_root(&BigInt::from(-1)), 1);
        assert_eq!(p.multiplicity_of_root(&BigInt::from(2)), 0);
        assert!(p.divide_linear_exact(&BigInt::from(2)).is_none());
        assert!(ExactPoly::one().divide_linear_exact(&three).is_none());
    }

    #[test]
    fn eval_and_strings() {
        let p = ExactPoly::from_i64(&[1, 0, -11, 6]);
        assert_eq!(p.eval_big(&BigInt::from(3)), BigInt::zero());
        assert_eq!(p.eval_big(&BigInt::from(2)), BigInt::from(-8));
        assert!((p.eval_f64(3.0)).abs() < 1e-12);
        assert_eq!(p.to_dec_strings(), vec!["1", "0", "-11", "6"]);
        // mul agrees with mul_linear chains
        let a = ExactPoly::from_i64(&[1, -3]);
        let b = ExactPoly::from_i64(&[1, 1]);
        assert_eq!(a.mul(&b), ExactPoly::from_i64(&[1, -2, -3]));
    }

    #[test]
    fn cubic_roots_by_bisection() {
        // (x-1)(x-2)(x-3)
        let r = real_roots_cubic(-6.0, 11.0, -6.0);
        for (got, want) in r.iter().zip([3.0, 2.0, 1.0]) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let r = real_roots_cubic(0.0, -3.0, 2.0);
        for (got, want) in r.iter().zip([1.0, 1.0, -2.0]) {
            assert!((got - want).abs() < 1e-7, "{got} vs {want}");
        }
        // (x+1)^3
        let r = real_roots_cubic(3.0, 3.0, 1.0);
        for got in r {
            assert!((got + 1.0).abs() < 1e-7);
        }
        // x^3 - 11x + 6 has roots 3 and (-3 +/- sqrt(17))/2
        let r = real_roots_cubic(0.0, -11.0, 6.0);
        let s17 = 17f64.sqrt();
        for (got, want) in r.iter().zip([3.0, (-3.0 + s17) / 2.0, (-3.0 - s17) / 2.0]) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }
}
