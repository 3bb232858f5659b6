//! Dense symmetric matrices in two flavors: exact integer entries (for
//! characteristic polynomials and determinants) and `f64` entries (for
//! eigenvalue iteration).

use num_bigint::BigInt;
use num_traits::Zero;

/// Symmetric matrix with exact integer entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSymMatrix {
    pub n: usize,
    pub a: Vec<BigInt>,
}

impl IntSymMatrix {
    pub fn zeros(n: usize) -> Self {
        IntSymMatrix {
            n,
            a: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_i64(n: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), n * n);
        IntSymMatrix {
            n,
            a: entries.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.a[i * self.n + j] = v.clone();
        self.a[j * self.n + i] = v;
    }

    /// Lossy conversion to floating point for eigenvalue iteration.
    pub fn to_f64(&self) -> SymMatrix {
        use num_traits::ToPrimitive;
        SymMatrix {
            n: self.n,
            a: self
                .a
                .iter()
                .map(|x| x.to_f64().expect("entry fits in f64"))
                .collect(),
        }
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss). Exact.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut m = self.a.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                // pivot: find a row below with nonzero leading entry
                match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    let q = &num / &prev;
                    debug_assert!((&q * &prev) == num, "Bareiss division must be exact");
                    m[i * n + j] = q;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let d = m[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Matrix product (general, not necessarily symmetric result).
    pub fn mul(&self, other: &IntSymMatrix) -> IntSymMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntSymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for k in 0..n {
                    s += &self.a[i * n + k] * &other.a[k * n + j];
                }
                out.a[i * n + j] = s;
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.a[i * self.n + i].clone()).sum()
    }
}

/// Symmetric matrix with `f64` entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    pub n: usize,
    pub a: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            a: vec![0.0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n);
            a.extend_from_slice(r);
        }
        SymMatrix { n, a }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = v;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}
