//! The distance Seidel matrix `D^S(G) = J - I - 2D` of a connected graph,
//! its spectrum and energy, and the Wiener-index identity that ties the
//! spectral moments to the distance distribution.

use crate::eigen::{jacobi_eigenvalues, Spectrum};
use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::IntSymMatrix;
use crate::poly::{char_poly_exact, ExactPoly};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Default tolerance for eigenvalue grouping and sign classification.
pub const DEFAULT_TOL: f64 = 1e-7;

/// Shortest-path distance matrix as an exact integer matrix.
pub fn distance_int_matrix(g: &Graph) -> Result<IntSymMatrix> {
    let n = g.n();
    let d = g.distance_matrix()?;
    let mut m = IntSymMatrix::zeros(n);
    for i in 0..n * n {
        m.a[i] = BigInt::from(d[i]);
    }
    Ok(m)
}

/// Adjacency matrix as an exact integer matrix.
pub fn adjacency_int_matrix(g: &Graph) -> IntSymMatrix {
    let n = g.n();
    let mut m = IntSymMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if g.has_edge(i, j) {
                m.a[i * n + j] = BigInt::from(1);
            }
        }
    }
    m
}

/// The distance Seidel matrix `J - I - 2D`: off-diagonal entries
/// `1 - 2 d(u,v)`, zero diagonal. Errors when the graph is disconnected.
pub fn ds_matrix(g: &Graph) -> Result<IntSymMatrix> {
    let n = g.n();
    let d = g.distance_matrix()?;
    let mut m = IntSymMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m.a[i * n + j] = BigInt::from(1 - 2 * d[i * n + j]);
            }
        }
    }
    Ok(m)
}

/// Absolute row sums of the distance Seidel matrix: the r-th value is
/// `sum_{t != r} (2 d(r,t) - 1) = 2 Tr(r) - (n - 1)`, which is positive for
/// every connected graph on at least two vertices.
pub fn ds_row_abs_sums(g: &Graph) -> Result<Vec<i64>> {
    let n = g.n() as i64;
    Ok(g.transmissions()?
        .into_iter()
        .map(|t| 2 * t - (n - 1))
        .collect())
}

/// Round to 12 significant digits. All floating-point values placed in JSON
/// reports pass through this, which keeps output byte-identical across runs
/// and platforms.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0; // normalizes -0.0
    }
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Spectral data of one distance Seidel matrix.
///
/// When the spectrum is integral (checked exactly against the characteristic
/// polynomial) the eigenvalues and derived quantities are snapped to their
/// exact integer values; otherwise they come from the Jacobi iteration and
/// are rounded to 12 significant digits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectralSummary {
    pub n: usize,
    pub m: usize,
    pub spectrum: Spectrum,
    pub energy: f64,
    pub radius: f64,
    pub a_plus: usize,
    pub a_minus: usize,
    pub char_poly: Vec<String>,
    pub integral: bool,
}

/// Compute the spectral summary of `G`'s distance Seidel matrix.
///
/// `tol` groups nearly equal eigenvalues and classifies signs: an eigenvalue
/// counts as negative only below `-tol`, so numeric noise around an exact 0
/// never inflates `a_minus`. For integral spectra the classification is exact.
pub fn spectral_summary(g: &Graph, tol: f64) -> Result<SpectralSummary> {
    let ds = ds_matrix(g)?;
    let poly = char_poly_exact(&ds);
    let eig = jacobi_eigenvalues(&ds.to_f64());
    let rounded: Vec<BigInt> = eig
        .iter()
        .map(|&x| BigInt::from(x.round() as i64))
        .collect();
    let integral = ExactPoly::monic_from_roots(&rounded) == poly;
    let (spectrum, a_minus) = if integral {
        let pairs: Vec<(f64, usize)> = rounded
            .iter()
            .map(|r| (r.to_f64().expect("small integer"), 1))
            .collect();
        let neg = rounded.iter().filter(|r| r.is_negative()).count();
        (Spectrum::from_pairs(&pairs), neg)
    } else {
        let spec = Spectrum::from_sorted(&eig, tol);
        let neg = spec.count_negative(tol);
        (spec, neg)
    };
    let energy = spectrum.energy();
    let radius = spectrum.max_abs();
    let spectrum = Spectrum {
        entries: spectrum
            .entries
            .iter()
            .map(|e| crate::eigen::SpectrumEntry {
                value: round_sig12(e.value),
                mult: e.mult,
            })
            .collect(),
    };
    Ok(SpectralSummary {
        n: g.n(),
        m: g.edge_count(),
        a_plus: g.n() - a_minus,
        a_minus,
        energy: round_sig12(energy),
        radius: round_sig12(radius),
        char_poly: poly.to_dec_strings(),
        integral,
        spectrum,
    })
}

/// The Wiener-index identity: for every connected graph,
/// `W = (1/8) (n(n-1) - sum (ds eigenvalue)^2 + 4 sum (distance eigenvalue)^2)`.
/// Both eigenvalue power sums are traces of integer matrices, so the residual
/// is computed exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WienerCheck {
    /// Wiener index `W` (half the sum of all pairwise distances).
    pub lhs: i64,
    /// The right-hand side of the identity, as a float for display.
    pub rhs: f64,
    /// `n(n-1) + 4*tr(D^2) - tr((D^S)^2) - 8W`, exactly 0 when the identity
    /// holds.
    pub residual: i64,
}

pub fn wiener_identity_check(g: &Graph) -> Result<WienerCheck> {
    let n = g.n() as i64;
    let d = g.distance_matrix()?;
    let w: i64 = d.iter().sum::<i64>() / 2;
    let sum_d2: i64 = d.iter().map(|&x| x * x).sum();
    let mut sum_ds2 = 0i64;
    for i in 0..g.n() {
        for j in 0..g.n() {
            if i != j {
                let v = 1 - 2 * d[i * g.n() + j];
                sum_ds2 += v * v;
            }
        }
    }
    let numer = n * (n - 1) + 4 * sum_d2 - sum_ds2;
    Ok(WienerCheck {
        lhs: w,
        rhs: numer as f64 / 8.0,
        residual: numer - 8 * w,
    })
}

/// Two connected graphs are distance-Seidel cospectral when their exact
/// characteristic polynomials coincide.
pub fn cospectral(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(char_poly_exact(&ds_matrix(g1)?) == char_poly_exact(&ds_matrix(g2)?))
}

/// Eigenvalues of the ordinary distance matrix, descending.
pub fn distance_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    Ok(jacobi_eigenvalues(&distance_int_matrix(g)?.to_f64()))
}

/// Eigenvalues of the adjacency matrix, descending.
pub fn adjacency_eigenvalues(g: &Graph) -> Vec<f64> {
    jacobi_eigenvalues(&adjacency_int_matrix(g).to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry_i64(m: &IntSymMatrix, i: usize, j: usize) -> i64 {
        m.get(i, j).to_i64().unwrap()
    }

    #[test]
    fn ds_matrix_entries() {
        let p4 = Graph::path(4);
        let m = ds_matrix(&p4).unwrap();
        let want = [
            [0, -1, -3, -5],
            [-1, 0, -1, -3],
            [-3, -1, 0, -1],
            [-5, -3, -1, 0],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(entry_i64(&m, i, j), want[i][j]);
            }
        }
        assert_eq!(ds_row_abs_sums(&p4).unwrap(), vec![9, 5, 5, 9]);
    }

    #[test]
    fn summary_of_complete_graph() {
        let s = spectral_summary(&Graph::complete(4), DEFAULT_TOL).unwrap();
        assert_eq!((s.n, s.m), (4, 6));
        assert!(s.integral);
        assert_eq!(s.spectrum.entries.len(), 2);
        assert_eq!((s.spectrum.entries[0].value, s.spectrum.entries[0].mult), (1.0, 3));
        assert_eq!((s.spectrum.entries[1].value, s.spectrum.entries[1].mult), (-3.0, 1));
        assert_eq!((s.energy, s.radius), (6.0, 3.0));
        assert_eq!((s.a_plus, s.a_minus), (3, 1));
        assert_eq!(s.char_poly, vec!["1", "0", "-6", "8", "-3"]);
    }

    #[test]
    fn summary_of_c4() {
        let s = spectral_summary(&Graph::cycle(4), DEFAULT_TOL).unwrap();
        assert!(s.integral);
        let vals: Vec<(f64, usize)> = s.spectrum.entries.iter().map(|e| (e.value, e.mult)).collect();
        assert_eq!(vals, vec![(3.0, 2), (-1.0, 1), (-5.0, 1)]);
        assert_eq!((s.energy, s.radius), (12.0, 5.0));
        assert_eq!(s.char_poly, vec!["1", "0", "-22", "24", "45"]);
    }

    #[test]
    fn summary_of_p3_is_not_integral() {
        let s = spectral_summary(&Graph::path(3), DEFAULT_TOL).unwrap();
        assert!(!s.integral);
        let s17 = 17f64.sqrt();
        let want = [3.0, (-3.0 + s17) / 2.0, (-3.0 - s17) / 2.0];
        let got: Vec<f64> = s.spectrum.expanded();
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-10);
        }
        assert!((s.energy - (3.0 + s17)).abs() < 1e-10);
        assert!((s.radius - (3.0 + s17) / 2.0).abs() < 1e-10);
        assert_eq!((s.a_plus, s.a_minus), (2, 1));
        assert_eq!(s.char_poly, vec!["1", "0", "-11", "6"]);
    }

    #[test]
    fn summary_of_petersen() {
        let s = spectral_summary(&Graph::petersen(), DEFAULT_TOL).unwrap();
        assert!(s.integral);
        let vals: Vec<(f64, usize)> = s.spectrum.entries.iter().map(|e| (e.value, e.mult)).collect();
        assert_eq!(vals, vec![(5.0, 5), (-1.0, 4), (-21.0, 1)]);
        assert_eq!((s.energy, s.radius), (50.0, 21.0));
        assert_eq!((s.a_plus, s.a_minus), (5, 5));
    }

    #[test]
    fn exact_zero_eigenvalue_counts_as_nonnegative() {
        // K5 minus an edge has distance Seidel spectrum {3, 1, 1, 0, -5}
        let s = spectral_summary(&Graph::complete_minus_edge(5), DEFAULT_TOL).unwrap();
        assert!(s.integral);
        assert_eq!((s.a_plus, s.a_minus), (4, 1));
        let vals: Vec<(f64, usize)> = s.spectrum.entries.iter().map(|e| (e.value, e.mult)).collect();
        assert_eq!(vals, vec![(3.0, 1), (1.0, 2), (0.0, 1), (-5.0, 1)]);
        assert_eq!(s.energy, 10.0);
    }

    #[test]
    fn wiener_identity_holds_on_samples() {
        for g in [
            Graph::path(4),
            Graph::path(7),
            Graph::petersen(),
            Graph::complete(5),
            Graph::wheel(6),
            Graph::star(9),
            Graph::cycle(7),
        ] {
            let c = wiener_identity_check(&g).unwrap();
            assert_eq!(c.residual, 0, "residual for {g:?}");
            assert_eq!(c.rhs, c.lhs as f64);
        }
        let c = wiener_identity_check(&Graph::path(4)).unwrap();
        assert_eq!(c.lhs, 10);
    }

    #[test]
    fn cospectrality_is_poly_equality() {
        assert!(cospectral(&Graph::cycle(4), &Graph::complete_bipartite(2, 2)).unwrap());
        assert!(!cospectral(&Graph::cycle(4), &Graph::complete(4)).unwrap());
    }

    #[test]
    fn rounding_to_12_digits() {
        assert_eq!(round_sig12(0.0), 0.0);
        assert_eq!(round_sig12(-0.0), 0.0);
        assert_eq!(round_sig12(3.0000000000000004), 3.0);
        assert_eq!(round_sig12(0.5615528128088303), 0.561552812809);
        assert_eq!(round_sig12(-21.000000000001), -21.0);
        assert_eq!(round_sig12(1234567890123.0), 1.23456789012e12);
    }

    #[test]
    fn summary_json_shape() {
        let s = spectral_summary(&Graph::complete(2), DEFAULT_TOL).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            "{\"n\":2,\"m\":1,\"spectrum\":[{\"value\":1.0,\"mult\":1},{\"value\":-1.0,\"mult\":1}],\"energy\":2.0,\"radius\":1.0,\"aPlus\":1,\"aMinus\":1,\"charPoly\":[\"1\",\"0\",\"-1\"],\"integral\":true}"
        );
    }
}
