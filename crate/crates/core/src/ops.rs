//! Graph operations (join, join over a union, double graph, prism,
//! lexicographic product with K2, extended double cover) together with
//! predicted distance Seidel spectra for each construction.
//!
//! Predictions are emitted even when a construction's regularity or diameter
//! hypotheses fail (with `hypothesis_ok = false`), so callers can chart where
//! the closed forms actually hold.

use crate::eigen::{jacobi_eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::real_roots_cubic;
use crate::seidel::{adjacency_eigenvalues, distance_eigenvalues, ds_matrix};
use serde::Serialize;

/// The graph operations with spectral predictions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    /// `G1 ∨ G2`: disjoint union plus all cross edges.
    Join,
    /// `G0 ∨ (G1 ∪ G2)`.
    JoinUnion,
    /// Double graph: two copies, `u` and `v'` adjacent iff `uv` is an edge
    /// (and so are `u,v` and `u',v'`); twins stay non-adjacent.
    Double,
    /// Cartesian product `G × K2`.
    Prism,
    /// Lexicographic product `G[K2]`: the double graph plus all twin edges.
    LexK2,
    /// Extended double cover: bipartite graph whose biadjacency matrix is
    /// `A + I`.
    Edc,
}

impl OpKind {
    pub fn from_cli(name: &str) -> Result<OpKind> {
        Ok(match name {
            "join" => OpKind::Join,
            "join-union" => OpKind::JoinUnion,
            "double" => OpKind::Double,
            "prism" => OpKind::Prism,
            "lex-k2" => OpKind::LexK2,
            "edc" => OpKind::Edc,
            _ => {
                return Err(Error::UnknownName {
                    kind: "operation",
                    name: name.to_string(),
                })
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            OpKind::Join => "join",
            OpKind::JoinUnion => "join-union",
            OpKind::Double => "double",
            OpKind::Prism => "prism",
            OpKind::LexK2 => "lex-k2",
            OpKind::Edc => "edc",
        }
    }

    /// Number of input graphs.
    pub fn arity(&self) -> usize {
        match self {
            OpKind::Join => 2,
            OpKind::JoinUnion => 3,
            _ => 1,
        }
    }
}

fn check_arity(op: OpKind, inputs: &[Graph]) -> Result<()> {
    if inputs.len() != op.arity() {
        return Err(Error::WrongArity {
            op: op.name(),
            expected: op.arity(),
            got: inputs.len(),
        });
    }
    Ok(())
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let (na, nb) = (a.n(), b.n());
    let mut g = Graph::new(na + nb);
    for (u, v) in a.edges() {
        g.add_edge(u, v).expect("copied edge is valid");
    }
    for (u, v) in b.edges() {
        g.add_edge(na + u, na + v).expect("offset edge is valid");
    }
    g
}

fn join(a: &Graph, b: &Graph) -> Graph {
    let (na, nb) = (a.n(), b.n());
    let mut g = disjoint_union(a, b);
    for u in 0..na {
        for v in 0..nb {
            g.add_edge(u, na + v).expect("cross edge is valid");
        }
    }
    g
}

/// Build the operation's output. Inputs may be disconnected; whether the
/// output is connected is up to the construction (e.g. the double graph of
/// K1 is not).
pub fn construct(op: OpKind, inputs: &[Graph]) -> Result<Graph> {
    check_arity(op, inputs)?;
    Ok(match op {
        OpKind::Join => join(&inputs[0], &inputs[1]),
        OpKind::JoinUnion => join(&inputs[0], &disjoint_union(&inputs[1], &inputs[2])),
        OpKind::Double => {
            let g = &inputs[0];
            let n = g.n();
            let mut out = Graph::new(2 * n);
            for (u, v) in g.edges() {
                for &(x, y) in &[(u, v), (u, v + n), (u + n, v), (u + n, v + n)] {
                    out.add_edge(x, y).expect("double edge is valid");
                }
            }
            out
        }
        OpKind::Prism => {
            let g = &inputs[0];
            let n = g.n();
            let mut out = Graph::new(2 * n);
            for (u, v) in g.edges() {
                out.add_edge(u, v).expect("copy edge is valid");
                out.add_edge(u + n, v + n).expect("copy edge is valid");
            }
            for v in 0..n {
                out.add_edge(v, v + n).expect("rung edge is valid");
            }
            out
        }
        OpKind::LexK2 => {
            let mut out = construct(OpKind::Double, inputs)?;
            let n = inputs[0].n();
            for v in 0..n {
                out.add_edge(v, v + n).expect("twin edge is valid");
            }
            out
        }
        OpKind::Edc => {
            let g = &inputs[0];
            let n = g.n();
            let mut out = Graph::new(2 * n);
            for u in 0..n {
                for v in 0..n {
                    if u == v || g.has_edge(u, v) {
                        out.add_edge(u, v + n).expect("cover edge is valid");
                    }
                }
            }
            out
        }
    })
}

/// One predicted eigenvalue with the construction clause that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PredictedValue {
    pub value: f64,
    /// Which clause of the operation's spectrum formula generated the value
    /// (operand name, quotient root, twin space, ...).
    pub clause: &'static str,
}

/// A full predicted spectrum for a constructed graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PredictedSpectrum {
    /// Predicted eigenvalues, descending.
    pub values: Vec<PredictedValue>,
    /// Whether the hypotheses of the closed form were satisfied by the
    /// inputs. When false the prediction is a diagnostic extrapolation.
    pub hypothesis_ok: bool,
}

impl PredictedSpectrum {
    fn new(mut values: Vec<PredictedValue>, hypothesis_ok: bool) -> Self {
        values.sort_by(|a, b| b.value.partial_cmp(&a.value).expect("finite values"));
        PredictedSpectrum {
            values,
            hypothesis_ok,
        }
    }

    /// Predicted eigenvalues as a plain descending list.
    pub fn sorted_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.value).collect()
    }

    /// Largest aligned difference against a numeric spectrum, `None` when
    /// the orders differ.
    pub fn max_abs_diff(&self, numeric: &Spectrum) -> Option<f64> {
        let a = self.sorted_values();
        let b = numeric.expanded();
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
}

/// Order, degree parameter, and regularity flag of an operand: `(n, k, true)`
/// for a k-regular graph, else `(n, 2m/n, false)` as a diagnostic stand-in.
fn regular_or_average(g: &Graph) -> (usize, f64, bool) {
    match g.regular_degree() {
        Some(k) => (g.n(), k as f64, true),
        None => (
            g.n(),
            2.0 * g.edge_count() as f64 / g.n().max(1) as f64,
            false,
        ),
    }
}

/// Adjacency eigenvalues below the largest one (the formulas consume the
/// non-Perron part of each operand's adjacency spectrum).
fn non_perron_adjacency(g: &Graph) -> Vec<f64> {
    let mut e = adjacency_eigenvalues(g);
    if !e.is_empty() {
        e.remove(0);
    }
    e
}

/// Predict the distance Seidel spectrum of the operation's output from the
/// operands alone.
pub fn predict(op: OpKind, inputs: &[Graph]) -> Result<PredictedSpectrum> {
    check_arity(op, inputs)?;
    match op {
        OpKind::Join => {
            let (g1, g2) = (&inputs[0], &inputs[1]);
            let (n1, k1, r1) = regular_or_average(g1);
            let (n2, k2, r2) = regular_or_average(g2);
            let mut vals: Vec<PredictedValue> = Vec::new();
            for l in non_perron_adjacency(g1) {
                vals.push(PredictedValue {
                    value: 3.0 + 2.0 * l,
                    clause: "g1",
                });
            }
            for l in non_perron_adjacency(g2) {
                vals.push(PredictedValue {
                    value: 3.0 + 2.0 * l,
                    clause: "g2",
                });
            }
            // quotient quadratic x^2 + (u+v) x + uv - n1 n2 with
            // u = 3 n1 - 2 k1 - 3, v = 3 n2 - 2 k2 - 3
            let u = 3.0 * n1 as f64 - 2.0 * k1 - 3.0;
            let v = 3.0 * n2 as f64 - 2.0 * k2 - 3.0;
            let disc = (u - v) * (u - v) + 4.0 * (n1 * n2) as f64;
            for root in [(-(u + v) + disc.sqrt()) / 2.0, (-(u + v) - disc.sqrt()) / 2.0] {
                vals.push(PredictedValue {
                    value: root,
                    clause: "quotient",
                });
            }
            Ok(PredictedSpectrum::new(vals, r1 && r2))
        }
        OpKind::JoinUnion => {
            let mut vals: Vec<PredictedValue> = Vec::new();
            let mut hyp = true;
            let mut nk = [(0usize, 0.0f64); 3];
            for (idx, (g, clause)) in inputs
                .iter()
                .zip(["g0", "g1", "g2"])
                .enumerate()
            {
                let (n, k, r) = regular_or_average(g);
                hyp &= r;
                nk[idx] = (n, k);
                for l in non_perron_adjacency(g) {
                    vals.push(PredictedValue {
                        value: 3.0 + 2.0 * l,
                        clause,
                    });
                }
            }
            let [(n0, k0), (n1, k1), (n2, k2)] = nk;
            let (n0f, n1f, n2f) = (n0 as f64, n1 as f64, n2 as f64);
            // quotient matrix rows:
            //   [3-3n0+2k0   -n1          -n2       ]
            //   [-n0          3-3n1+2k1   -3n2      ]
            //   [-n0         -3n1          3-3n2+2k2]
            let m = [
                [3.0 - 3.0 * n0f + 2.0 * k0, -n1f, -n2f],
                [-n0f, 3.0 - 3.0 * n1f + 2.0 * k1, -3.0 * n2f],
                [-n0f, -3.0 * n1f, 3.0 - 3.0 * n2f + 2.0 * k2],
            ];
            // characteristic cubic of the 3x3 (monic in x)
            let tr = m[0][0] + m[1][1] + m[2][2];
            let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0]
                + m[0][0] * m[2][2]
                - m[0][2] * m[2][0]
                + m[1][1] * m[2][2]
                - m[1][2] * m[2][1];
            let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            for root in real_roots_cubic(-tr, minors, -det) {
                vals.push(PredictedValue {
                    value: root,
                    clause: "quotient",
                });
            }
            Ok(PredictedSpectrum::new(vals, hyp))
        }
        OpKind::Double => {
            let g = &inputs[0];
            let ds = jacobi_eigenvalues(&ds_matrix(g)?.to_f64());
            let mut vals: Vec<PredictedValue> = ds
                .iter()
                .map(|&d| PredictedValue {
                    value: 2.0 * d - 3.0,
                    clause: "base",
                })
                .collect();
            vals.extend((0..g.n()).map(|_| PredictedValue {
                value: 3.0,
                clause: "twin",
            }));
            Ok(PredictedSpectrum::new(vals, g.n() >= 2))
        }
        OpKind::Prism => {
            let g = &inputs[0];
            let n = g.n();
            let d = distance_eigenvalues(g)?;
            let mut vals: Vec<PredictedValue> = d
                .iter()
                .map(|&x| PredictedValue {
                    value: -1.0 - 4.0 * x,
                    clause: "sum",
                })
                .collect();
            vals.push(PredictedValue {
                value: 2.0 * n as f64 - 1.0,
                clause: "difference",
            });
            vals.extend((0..n.saturating_sub(1)).map(|_| PredictedValue {
                value: -1.0,
                clause: "difference",
            }));
            let hyp = g.transmission_degree()?.is_some();
            Ok(PredictedSpectrum::new(vals, hyp))
        }
        OpKind::LexK2 => {
            let g = &inputs[0];
            let ds = jacobi_eigenvalues(&ds_matrix(g)?.to_f64());
            let mut vals: Vec<PredictedValue> = ds
                .iter()
                .map(|&d| PredictedValue {
                    value: 2.0 * d - 1.0,
                    clause: "base",
                })
                .collect();
            vals.extend((0..g.n()).map(|_| PredictedValue {
                value: 1.0,
                clause: "twin",
            }));
            Ok(PredictedSpectrum::new(vals, true))
        }
        OpKind::Edc => {
            let g = &inputs[0];
            let (n, k, reg) = regular_or_average(g);
            let hyp = reg && g.diameter()? <= 2;
            let nf = n as f64;
            let mut vals = vec![
                PredictedValue {
                    value: -8.0 * nf + 4.0 * k + 7.0,
                    clause: "perron-sum",
                },
                PredictedValue {
                    value: 2.0 * nf - 4.0 * k - 1.0,
                    clause: "perron-difference",
                },
            ];
            for l in non_perron_adjacency(g) {
                vals.push(PredictedValue {
                    value: 7.0 + 4.0 * l,
                    clause: "sum",
                });
                vals.push(PredictedValue {
                    value: -1.0 - 4.0 * l,
                    clause: "difference",
                });
            }
            Ok(PredictedSpectrum::new(vals, hyp))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seidel::{spectral_summary, DEFAULT_TOL};

    fn predict_and_compare(op: OpKind, inputs: &[Graph]) -> (PredictedSpectrum, f64) {
        let built = construct(op, inputs).unwrap();
        let numeric = spectral_summary(&built, DEFAULT_TOL).unwrap().spectrum;
        let pred = predict(op, inputs).unwrap();
        let diff = pred
            .max_abs_diff(&numeric)
            .expect("prediction count equals order");
        (pred, diff)
    }

    #[test]
    fn constructions_have_documented_shapes() {
        // K1 ∨ C4 is the 5-wheel, with matching labels
        let w = construct(OpKind::Join, &[Graph::complete(1), Graph::cycle(4)]).unwrap();
        assert_eq!(w, Graph::wheel(5));
        // the double graph of K2 is C4 with matching labels
        let d = construct(OpKind::Double, &[Graph::complete(2)]).unwrap();
        assert_eq!(d, Graph::cycle(4));
        // K2[K2] = K4
        let l = construct(OpKind::LexK2, &[Graph::complete(2)]).unwrap();
        assert_eq!(l, Graph::complete(4));
        // K2 x K2 = C4 up to relabeling
        let p = construct(OpKind::Prism, &[Graph::complete(2)]).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        // EDC(K1) = K2; EDC(K3) = K_{3,3}
        let e = construct(OpKind::Edc, &[Graph::complete(1)]).unwrap();
        assert_eq!(e, Graph::complete(2));
        let e3 = construct(OpKind::Edc, &[Graph::complete(3)]).unwrap();
        assert_eq!(e3.edge_count(), 9);
        assert!(e3.bipartition().is_some());
        // arity errors
        assert!(matches!(
            construct(OpKind::Join, &[Graph::complete(2)]),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn join_predictions_match_numeric() {
        let pairs = [
            (Graph::complete(2), Graph::complete(2)),
            (Graph::complete(1), Graph::cycle(4)),
            (Graph::cycle(5), Graph::cycle(4)),
            (Graph::complete(3), Graph::new(3)),
            (Graph::petersen(), Graph::complete(2)),
        ];
        for (g1, g2) in pairs {
            let (pred, diff) = predict_and_compare(OpKind::Join, &[g1.clone(), g2.clone()]);
            assert!(pred.hypothesis_ok, "{g1:?} ∨ {g2:?}");
            assert!(diff < 1e-6, "{g1:?} ∨ {g2:?}: diff {diff}");
            let sum: f64 = pred.sorted_values().iter().sum();
            assert!(sum.abs() < 1e-8);
        }
        // K2 ∨ K2 = K4 gives {1,1,1,-3}
        let pred = predict(OpKind::Join, &[Graph::complete(2), Graph::complete(2)]).unwrap();
        let want = [1.0, 1.0, 1.0, -3.0];
        for (got, w) in pred.sorted_values().iter().zip(want) {
            assert!((got - w).abs() < 1e-9);
        }
        // joining a union of two K2s onto K1 via a disconnected operand:
        // K1 ∨ 2K2 is the friendship graph f2
        let two_k2 = {
            let mut g = Graph::new(4);
            g.add_edge(0, 1).unwrap();
            g.add_edge(2, 3).unwrap();
            g
        };
        let (pred, diff) = predict_and_compare(OpKind::Join, &[Graph::complete(1), two_k2]);
        assert!(pred.hypothesis_ok); // both operands regular (0- and 1-regular)
        assert!(diff < 1e-6);
        // a non-regular operand flips the hypothesis flag
        let pred = predict(OpKind::Join, &[Graph::complete(1), Graph::path(3)]).unwrap();
        assert!(!pred.hypothesis_ok);
        assert_eq!(pred.values.len(), 4);
    }

    #[test]
    fn join_union_predictions_match_numeric() {
        let triples = [
            (Graph::complete(1), Graph::complete(2), Graph::complete(2)), // f2
            (Graph::complete(1), Graph::complete(1), Graph::complete(1)), // P3
            (Graph::complete(2), Graph::complete(2), Graph::complete(2)),
            (Graph::complete(1), Graph::cycle(4), Graph::complete(3)),
            (Graph::cycle(4), Graph::complete(2), Graph::new(2)),
        ];
        for (g0, g1, g2) in triples {
            let inputs = [g0, g1, g2];
            let (pred, diff) = predict_and_compare(OpKind::JoinUnion, &inputs);
            assert!(pred.hypothesis_ok);
            assert!(diff < 1e-6, "{inputs:?}: diff {diff}");
        }
        // K1 ∨ (K1 ∪ K1) = P3: spectrum {3, (-3 ± sqrt 17)/2}
        let pred = predict(
            OpKind::JoinUnion,
            &[Graph::complete(1), Graph::complete(1), Graph::complete(1)],
        )
        .unwrap();
        let s17 = 17f64.sqrt();
        for (got, want) in pred
            .sorted_values()
            .iter()
            .zip([3.0, (-3.0 + s17) / 2.0, (-3.0 - s17) / 2.0])
        {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn double_predictions_match_numeric() {
        for g in [
            Graph::complete(2),
            Graph::complete(3),
            Graph::path(4),
            Graph::cycle(5),
            Graph::star(5),
        ] {
            let (pred, diff) = predict_and_compare(OpKind::Double, &[g.clone()]);
            assert!(pred.hypothesis_ok);
            assert!(diff < 1e-6, "double {g:?}: diff {diff}");
        }
        // doubling K3 gives {3,3,3,-1,-1,-7} (the octahedron)
        let pred = predict(OpKind::Double, &[Graph::complete(3)]).unwrap();
        let want = [3.0, 3.0, 3.0, -1.0, -1.0, -7.0];
        for (got, w) in pred.sorted_values().iter().zip(want) {
            assert!((got - w).abs() < 1e-9);
        }
        // the double of K1 is disconnected; the prediction still reports it
        let pred = predict(OpKind::Double, &[Graph::complete(1)]).unwrap();
        assert!(!pred.hypothesis_ok);
    }

    #[test]
    fn prism_predictions_match_numeric() {
        for g in [
            Graph::complete(2),
            Graph::complete(3),
            Graph::cycle(5),
            Graph::petersen(),
        ] {
            let (pred, diff) = predict_and_compare(OpKind::Prism, &[g.clone()]);
            assert!(pred.hypothesis_ok, "prism {g:?}");
            assert!(diff < 1e-6, "prism {g:?}: diff {diff}");
        }
        // the formula verifies even off-hypothesis (non transmission-regular)
        let (pred, diff) = predict_and_compare(OpKind::Prism, &[Graph::path(4)]);
        assert!(!pred.hypothesis_ok);
        assert!(diff < 1e-6, "prism P4: diff {diff}");
        // K3 prism: {-1-4·2, -1-4·(-1), -1-4·(-1)} ∪ {5} ∪ {-1,-1}
        let pred = predict(OpKind::Prism, &[Graph::complete(3)]).unwrap();
        let want = [5.0, 3.0, 3.0, -1.0, -1.0, -9.0];
        for (got, w) in pred.sorted_values().iter().zip(want) {
            assert!((got - w).abs() < 1e-9);
        }
    }

    #[test]
    fn lex_predictions_match_numeric() {
        for g in [Graph::complete(2), Graph::path(3), Graph::cycle(4), Graph::petersen()] {
            let (pred, diff) = predict_and_compare(OpKind::LexK2, &[g.clone()]);
            assert!(pred.hypothesis_ok);
            assert!(diff < 1e-6, "lex {g:?}: diff {diff}");
        }
        let pred = predict(OpKind::LexK2, &[Graph::cycle(4)]).unwrap();
        let want = [5.0, 5.0, 1.0, 1.0, 1.0, 1.0, -3.0, -11.0];
        for (got, w) in pred.sorted_values().iter().zip(want) {
            assert!((got - w).abs() < 1e-9);
        }
    }

    #[test]
    fn edc_predictions_match_numeric() {
        for g in [
            Graph::cycle(5),
            Graph::cycle(4),
            Graph::complete(4),
            Graph::petersen(),
            Graph::cocktail_party(3),
        ] {
            let built = construct(OpKind::Edc, &[g.clone()]).unwrap();
            let numeric = spectral_summary(&built, DEFAULT_TOL).unwrap().spectrum;
            let pred = predict(OpKind::Edc, &[g.clone()]).unwrap();
            assert!(pred.hypothesis_ok, "edc {g:?}");
            let diff = pred.max_abs_diff(&numeric).unwrap();
            assert!(diff < 1e-6, "edc {g:?}: diff {diff}");
        }
        // P4 is neither regular nor diameter ≤ 2
        let pred = predict(OpKind::Edc, &[Graph::path(4)]).unwrap();
        assert!(!pred.hypothesis_ok);
    }

    #[test]
    fn energy_growth_bounds_hold_on_instances() {
        // E(double) <= 2 E + 6n and E(lex) <= 2 E + 2n for connected G;
        // E(prism) <= 4 E_D + 4n - 2 for transmission-regular G
        for g in [Graph::complete(3), Graph::cycle(5), Graph::path(4), Graph::star(5)] {
            let base = spectral_summary(&g, DEFAULT_TOL).unwrap();
            let n = g.n() as f64;
            let e_double = spectral_summary(
                &construct(OpKind::Double, &[g.clone()]).unwrap(),
                DEFAULT_TOL,
            )
            .unwrap()
            .energy;
            assert!(e_double <= 2.0 * base.energy + 6.0 * n + 1e-9, "{g:?}");
            let e_lex = spectral_summary(
                &construct(OpKind::LexK2, &[g.clone()]).unwrap(),
                DEFAULT_TOL,
            )
            .unwrap()
            .energy;
            assert!(e_lex <= 2.0 * base.energy + 2.0 * n + 1e-9, "{g:?}");
        }
        for g in [Graph::complete(3), Graph::cycle(5), Graph::petersen()] {
            let n = g.n() as f64;
            let e_dist: f64 = distance_eigenvalues(&g)
                .unwrap()
                .iter()
                .map(|x| x.abs())
                .sum();
            let e_prism = spectral_summary(
                &construct(OpKind::Prism, &[g.clone()]).unwrap(),
                DEFAULT_TOL,
            )
            .unwrap()
            .energy;
            assert!(e_prism <= 4.0 * e_dist + 4.0 * n - 2.0 + 1e-9, "{g:?}");
        }
    }

    #[test]
    fn op_names_round_trip() {
        for op in [
            OpKind::Join,
            OpKind::JoinUnion,
            OpKind::Double,
            OpKind::Prism,
            OpKind::LexK2,
            OpKind::Edc,
        ] {
            assert_eq!(OpKind::from_cli(op.name()).unwrap(), op);
        }
        assert!(OpKind::from_cli("tensor").is_err());
    }
}
