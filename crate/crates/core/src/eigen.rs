//! Symmetric eigenvalue computation (cyclic Jacobi) and multiset-style
//! spectra with multiplicity grouping.

use crate::matrix::SymMatrix;
use serde::{Deserialize, Serialize};

/// Eigenvalues of a symmetric matrix in descending order, by cyclic Jacobi
/// rotations. Deterministic for a given input.
pub fn jacobi_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let n = m.n;
    if n == 0 {
        return Vec::new();
    }
    let mut a = m.a.clone();
    let thresh = 1e-14 * (1.0 + m.frobenius_norm());
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q].abs();
            }
        }
        if off <= thresh {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= thresh / (n * n) as f64 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller-magnitude root of t^2 + 2*theta*t - 1 = 0
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    eig
}

/// One eigenvalue with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub mult: usize,
}

/// A spectrum: eigenvalues in descending order, equal values grouped.
/// Serializes as a bare array of `{value, mult}` records.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Group a descending list of eigenvalues, merging values closer than
    /// `tol` to the current group representative.
    pub fn from_sorted(values: &[f64], tol: f64) -> Self {
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        for &v in values {
            match entries.last_mut() {
                Some(e) if (e.value - v).abs() <= tol => e.mult += 1,
                _ => entries.push(SpectrumEntry { value: v, mult: 1 }),
            }
        }
        Spectrum { entries }
    }

    /// Build from (value, multiplicity) pairs in any order.
    pub fn from_pairs(pairs: &[(f64, usize)]) -> Self {
        let mut p: Vec<(f64, usize)> = pairs.iter().copied().filter(|&(_, m)| m > 0).collect();
        p.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("values are finite"));
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        for (v, m) in p {
            match entries.last_mut() {
                Some(e) if e.value == v => e.mult += m,
                _ => entries.push(SpectrumEntry { value: v, mult: m }),
            }
        }
        Spectrum { entries }
    }

    /// Total number of eigenvalues, with multiplicity.
    pub fn order(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// Eigenvalues expanded to a flat descending list.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order());
        for e in &self.entries {
            out.extend(std::iter::repeat(e.value).take(e.mult));
        }
        out
    }

    /// Sum of |eigenvalue| over the spectrum.
    pub fn energy(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.value.abs() * e.mult as f64)
            .sum()
    }

    /// Largest eigenvalue (the spectral radius for the matrices in this
    /// crate, whose largest eigenvalue is also largest in modulus; use
    /// `max_abs` when that is not known).
    pub fn largest(&self) -> f64 {
        self.entries.first().map(|e| e.value).unwrap_or(0.0)
    }

    /// max |eigenvalue|.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.value.abs())
            .fold(0.0, f64::max)
    }

    /// Count of eigenvalues below `-tol` (strictly negative up to noise).
    pub fn count_negative(&self, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| e.value < -tol)
            .map(|e| e.mult)
            .sum()
    }

    /// Count of eigenvalues at least `-tol` (nonnegative up to noise).
    pub fn count_nonnegative(&self, tol: f64) -> usize {
        self.order() - self.count_negative(tol)
    }

    /// Largest |difference| between aligned eigenvalues of two spectra of the
    /// same order; `None` when the orders differ.
    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        let a = self.expanded();
        let b = other.expanded();
        if a.len() != b.len() {
            return None;
        }
        Some(
            a.iter()
                .zip(&b)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
        )
    }

    /// True when every eigenvalue is within `tol` of an integer.
    pub fn is_integral(&self, tol: f64) -> bool {
        self.entries
            .iter()
            .all(|e| (e.value - e.value.round()).abs() <= tol)
    }
}
