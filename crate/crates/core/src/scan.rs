//! Catalog scanning: exhaustive small-graph generation, cospectral grouping
//! keyed by exact characteristic polynomials, integral-graph detection, and
//! sweep verification of the eigenvalue characterizations and bounds.
//!
//! The built-in generator enumerates graphs up to isomorphism with an
//! adjacency-bitmask search: each level extends every representative on `k-1`
//! vertices by one new vertex, and brute-force relabeling marks the whole
//! isomorphism class of each accepted representative so later candidates from
//! the same class are rejected by a single bitset lookup.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bounds::bounds_report;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops::{construct, OpKind};
use crate::poly::{char_poly_exact, ExactPoly};
use crate::seidel::{
    adjacency_int_matrix, cospectral, distance_int_matrix, ds_matrix, round_sig12,
    spectral_summary, DEFAULT_TOL,
};

/// Largest order served by the exhaustive generator (brute-force isomorph
/// rejection stays cheap up to 7 vertices).
pub const MAX_GENERATED_ORDER: usize = 7;
/// Largest order served by the regular-graph generator.
pub const MAX_REGULAR_ORDER: usize = 8;

/// Fixed-size bitset over adjacency masks.
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
}

/// Bit index of edge `{i, j}` (`i < j`) in the mask layout: edges are grouped
/// by their larger endpoint, so extending a graph by one vertex appends bits.
fn edge_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// `(i, j)` endpoint pair for every bit index on `n` vertices.
fn bit_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out
}

fn relabel(mask: u32, perm: &[usize], pairs: &[(usize, usize)]) -> u32 {
    let mut out = 0u32;
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        let (i, j) = pairs[b];
        let (pi, pj) = (perm[i], perm[j]);
        let bit = if pi < pj {
            edge_bit(pi, pj)
        } else {
            edge_bit(pj, pi)
        };
        out |= 1 << bit;
    }
    out
}

fn graph_from_mask(n: usize, mask: u32, pairs: &[(usize, usize)]) -> Graph {
    let mut g = Graph::new(n);
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        let (i, j) = pairs[b];
        g.add_edge(i, j).expect("mask bits index valid vertex pairs");
    }
    g
}

/// All graphs on `n` vertices up to isomorphism, including disconnected ones,
/// in deterministic order.  Limited to `n <= 7`.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(Error::InvalidParameter(format!(
            "exhaustive generation supports 1..={MAX_GENERATED_ORDER} vertices, got {n}"
        )));
    }
    let mut reps: Vec<u32> = vec![0];
    for k in 2..=n {
        let bits = k * (k - 1) / 2;
        let prev_bits = (k - 1) * (k - 2) / 2;
        let pairs = bit_pairs(k);
        let perms = permutations(k);
        let mut seen = BitSet::new(1 << bits);
        let mut next = Vec::new();
        for &rep in &reps {
            for nb in 0..(1u32 << (k - 1)) {
                let cand = rep | (nb << prev_bits);
                if !seen.get(cand as usize) {
                    for p in &perms {
                        seen.set(relabel(cand, p, &pairs) as usize);
                    }
                    next.push(cand);
                }
            }
        }
        reps = next;
    }
    let pairs = bit_pairs(n);
    Ok(reps
        .into_iter()
        .map(|m| graph_from_mask(n, m, &pairs))
        .collect())
}

/// All connected graphs on `n` vertices up to isomorphism.  Limited to `n <= 7`.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

/// All connected `k`-regular graphs on `n` vertices up to isomorphism, found
/// by backtracking over neighbor sets and deduplicated like `all_graphs`.
/// Limited to `n <= 8`.
pub fn regular_graphs(n: usize, k: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_REGULAR_ORDER {
        return Err(Error::InvalidParameter(format!(
            "regular generation supports 1..={MAX_REGULAR_ORDER} vertices, got {n}"
        )));
    }
    if k >= n || (n * k) % 2 != 0 {
        return Ok(Vec::new());
    }
    let pairs = bit_pairs(n);
    let mut labeled = Vec::new();
    let mut deg = vec![0usize; n];

    // Assign, vertex by vertex, the neighbors with a larger index; `deg`
    // tracks edges already fixed by earlier vertices.
    fn assign(
        v: usize,
        n: usize,
        k: usize,
        mask: u32,
        deg: &mut [usize],
        out: &mut Vec<u32>,
    ) {
        if v == n {
            out.push(mask);
            return;
        }
        let need = k - deg[v];
        let avail: Vec<usize> = (v + 1..n).filter(|&u| deg[u] < k).collect();
        if need > avail.len() {
            return;
        }
        // Choose every `need`-subset of the available later vertices.
        let mut pick = vec![0usize; need];
        fn subsets(
            avail: &[usize],
            start: usize,
            pos: usize,
            pick: &mut Vec<usize>,
            v: usize,
            n: usize,
            k: usize,
            mask: u32,
            deg: &mut [usize],
            out: &mut Vec<u32>,
        ) {
            if pos == pick.len() {
                let mut m = mask;
                for &u in pick.iter() {
                    m |= 1 << edge_bit(v, u);
                    deg[u] += 1;
                }
                let saved = deg[v];
                deg[v] = k;
                assign(v + 1, n, k, m, deg, out);
                deg[v] = saved;
                for &u in pick.iter() {
                    deg[u] -= 1;
                }
                return;
            }
            for i in start..avail.len() {
                if avail.len() - i < pick.len() - pos {
                    break;
                }
                pick[pos] = avail[i];
                subsets(avail, i + 1, pos + 1, pick, v, n, k, mask, deg, out);
            }
        }
        subsets(&avail, 0, 0, &mut pick, v, n, k, mask, deg, out);
    }
    assign(0, n, k, 0, &mut deg, &mut labeled);

    let perms = permutations(n);
    let mut seen = BitSet::new(1usize << pairs.len());
    let mut graphs = Vec::new();
    for cand in labeled {
        if !seen.get(cand as usize) {
            for p in &perms {
                seen.set(relabel(cand, p, &pairs) as usize);
            }
            let g = graph_from_mask(n, cand, &pairs);
            if g.is_connected() {
                graphs.push(g);
            }
        }
    }
    Ok(graphs)
}

/// Order-stable parallel map over `items` on `jobs` worker threads.
fn parallel_map<T, U, F>(items: &[T], jobs: usize, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<U>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= items.len() {
                    break;
                }
                let value = f(&items[i]);
                slots.lock().unwrap()[i] = Some(value);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|v| v.expect("worker filled every slot"))
        .collect()
}

/// What to search for and verify during a catalog scan.
#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub find_cospectral: bool,
    pub find_integral: bool,
    pub verify_complete: bool,
    pub verify_multipartite: bool,
    pub verify_bounds: bool,
    pub tol: f64,
    pub jobs: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            find_cospectral: true,
            find_integral: true,
            verify_complete: true,
            verify_multipartite: true,
            verify_bounds: true,
            tol: DEFAULT_TOL,
            jobs: 1,
        }
    }
}

/// Aggregate result of a catalog scan.  `cospectral_classes` lists groups of
/// two or more input graph6 strings sharing one exact characteristic
/// polynomial, ordered by first occurrence; the failure lists are expected to
/// stay empty.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub total: usize,
    pub connected: usize,
    pub parse_errors: Vec<String>,
    pub cospectral_classes: Vec<Vec<String>>,
    pub integral_graphs: Vec<String>,
    pub characterization_failures: Vec<String>,
    pub bound_violations: Vec<String>,
}

/// Per-graph scan row for CSV output.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRow {
    pub graph6: String,
    pub energy: f64,
    pub radius: f64,
    pub integral: bool,
}

/// Report plus per-graph rows from one scan.
#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub report: ScanReport,
    pub rows: Vec<ScanRow>,
}

struct GraphFacts {
    g6: String,
    n: usize,
    char_poly: Vec<BigInt>,
    largest: f64,
    energy: f64,
    radius: f64,
    integral: bool,
    complete: bool,
    /// Number of parts when the graph is complete multipartite.
    parts: Option<usize>,
    mult_one: usize,
    mult_three: usize,
    bound_failures: Vec<String>,
}

/// Scan newline-delimited graph6 input.  Unparseable lines are recorded with
/// their line numbers and skipped; disconnected graphs count toward `total`
/// only.  The report is deterministic for a fixed input order regardless of
/// `jobs`.
pub fn scan_catalog<'a, I>(lines: I, options: &ScanOptions) -> ScanOutcome
where
    I: IntoIterator<Item = &'a str>,
{
    let mut parse_errors = Vec::new();
    let mut total = 0usize;
    let mut connected_inputs: Vec<(String, Graph)> = Vec::new();
    for (idx, raw) in lines.into_iter().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match Graph::from_graph6(line) {
            Ok(g) => {
                total += 1;
                if g.is_connected() {
                    connected_inputs.push((line.to_string(), g));
                }
            }
            Err(e) => parse_errors.push(format!("line {}: {e}", idx + 1)),
        }
    }

    let tol = options.tol;
    let verify_bounds = options.verify_bounds;
    let facts: Vec<GraphFacts> = parallel_map(&connected_inputs, options.jobs, |(g6, g)| {
        let summary = spectral_summary(g, tol).expect("connected graph");
        let poly = char_poly_exact(&ds_matrix(g).expect("connected graph"));
        let bound_failures = if verify_bounds {
            let report = bounds_report(g, tol).expect("connected graph");
            report
                .bounds
                .iter()
                .filter(|r| r.hypothesis_ok && !r.satisfied)
                .map(|r| r.name.to_string())
                .collect()
        } else {
            Vec::new()
        };
        GraphFacts {
            g6: g6.clone(),
            n: g.n(),
            mult_one: poly.multiplicity_of_root(&BigInt::from(1)),
            mult_three: poly.multiplicity_of_root(&BigInt::from(3)),
            char_poly: poly.coeffs,
            largest: summary.spectrum.largest(),
            energy: summary.energy,
            radius: summary.radius,
            integral: summary.integral,
            complete: g.is_complete(),
            parts: g.complete_multipartite_parts().map(|p| p.len()),
            bound_failures,
        }
    });

    let mut report = ScanReport {
        total,
        connected: facts.len(),
        parse_errors,
        cospectral_classes: Vec::new(),
        integral_graphs: Vec::new(),
        characterization_failures: Vec::new(),
        bound_violations: Vec::new(),
    };

    if options.find_cospectral {
        let mut classes: HashMap<&[BigInt], Vec<usize>> = HashMap::new();
        for (i, f) in facts.iter().enumerate() {
            classes.entry(&f.char_poly).or_default().push(i);
        }
        let mut groups: Vec<Vec<usize>> =
            classes.into_values().filter(|v| v.len() >= 2).collect();
        groups.sort_by_key(|v| v[0]);
        report.cospectral_classes = groups
            .into_iter()
            .map(|v| v.into_iter().map(|i| facts[i].g6.clone()).collect())
            .collect();
    }

    if options.find_integral {
        report.integral_graphs = facts
            .iter()
            .filter(|f| f.integral)
            .map(|f| f.g6.clone())
            .collect();
    }

    for f in &facts {
        if options.verify_complete && f.n >= 2 {
            // Largest eigenvalue exactly 1 (numeric match plus exact root)
            // must single out complete graphs.
            let spectral = (f.largest - 1.0).abs() <= tol && f.mult_one >= 1;
            if spectral != f.complete {
                report.characterization_failures.push(format!(
                    "{}: complete-graph eigenvalue test mismatch",
                    f.g6
                ));
            }
        }
        if options.verify_multipartite && f.n >= 2 {
            // Largest eigenvalue exactly 3 must single out complete
            // multipartite graphs with 2..n-1 parts, with the multiplicity of
            // the root 3 equal to n - q exactly.
            let spectral = (f.largest - 3.0).abs() <= tol && f.mult_three >= 1;
            let structural = f.parts.is_some_and(|q| q >= 2 && q <= f.n - 1);
            if spectral != structural {
                report.characterization_failures.push(format!(
                    "{}: multipartite eigenvalue test mismatch",
                    f.g6
                ));
            } else if let Some(q) = f.parts {
                if structural && f.mult_three != f.n - q {
                    report.characterization_failures.push(format!(
                        "{}: eigenvalue 3 multiplicity {} differs from n-q = {}",
                        f.g6,
                        f.mult_three,
                        f.n - q
                    ));
                }
            }
        }
        for name in &f.bound_failures {
            report.bound_violations.push(format!("{}: {}", f.g6, name));
        }
    }

    let rows = facts
        .iter()
        .map(|f| ScanRow {
            graph6: f.g6.clone(),
            energy: f.energy,
            radius: f.radius,
            integral: f.integral,
        })
        .collect();

    ScanOutcome { report, rows }
}

/// CSV rendering of scan rows: `graph6,energy,radius,integral`.
pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("graph6,energy,radius,integral\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.graph6,
            round_sig12(r.energy),
            round_sig12(r.radius),
            r.integral
        ));
    }
    out
}

/// Outcome of replaying the composition corollaries on one cospectral pair.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairCorollaryCheck {
    pub lex_cospectral: bool,
    pub double_cospectral: bool,
}

/// For pairs already known to be distance-Seidel cospectral, build the
/// composition with an edge and the double graph on both members and check
/// the results stay cospectral (by exact characteristic polynomials).
pub fn verify_operation_corollaries(pairs: &[(Graph, Graph)]) -> Result<Vec<PairCorollaryCheck>> {
    let mut out = Vec::with_capacity(pairs.len());
    for (g1, g2) in pairs {
        let lex1 = construct(OpKind::LexK2, std::slice::from_ref(g1))?;
        let lex2 = construct(OpKind::LexK2, std::slice::from_ref(g2))?;
        let dbl1 = construct(OpKind::Double, std::slice::from_ref(g1))?;
        let dbl2 = construct(OpKind::Double, std::slice::from_ref(g2))?;
        out.push(PairCorollaryCheck {
            lex_cospectral: cospectral(&lex1, &lex2)?,
            double_cospectral: cospectral(&dbl1, &dbl2)?,
        });
    }
    Ok(out)
}

/// For pairs of distance-cospectral transmission-regular graphs, check the
/// prisms over both members are distance-Seidel cospectral.
pub fn verify_prism_corollary(pairs: &[(Graph, Graph)]) -> Result<Vec<bool>> {
    let mut out = Vec::with_capacity(pairs.len());
    for (g1, g2) in pairs {
        let p1 = construct(OpKind::Prism, std::slice::from_ref(g1))?;
        let p2 = construct(OpKind::Prism, std::slice::from_ref(g2))?;
        out.push(cospectral(&p1, &p2)?);
    }
    Ok(out)
}

/// Empirical check that for connected regular graphs of equal order and
/// degree with diameter at most 2, distance-Seidel cospectrality coincides
/// with adjacency cospectrality.  Returns descriptions of counterexample
/// pairs (expected empty).
pub fn check_regular_cospectral_equivalence(graphs: &[Graph]) -> Result<Vec<String>> {
    struct Item {
        g6: String,
        n: usize,
        degree: usize,
        ds_poly: ExactPoly,
        a_poly: ExactPoly,
    }
    let mut items = Vec::new();
    for g in graphs {
        let degree = match g.regular_degree() {
            Some(k) => k,
            None => continue,
        };
        if g.diameter()? > 2 {
            continue;
        }
        items.push(Item {
            g6: g.to_graph6(),
            n: g.n(),
            degree,
            ds_poly: char_poly_exact(&ds_matrix(g)?),
            a_poly: char_poly_exact(&adjacency_int_matrix(g)),
        });
    }
    let mut counterexamples = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            let (a, b) = (&items[i], &items[j]);
            if a.n != b.n || a.degree != b.degree {
                continue;
            }
            let ds_match = a.ds_poly.coeffs == b.ds_poly.coeffs;
            let a_match = a.a_poly.coeffs == b.a_poly.coeffs;
            if ds_match != a_match {
                counterexamples.push(format!(
                    "{} vs {}: distance Seidel cospectral = {ds_match}, adjacency cospectral = {a_match}",
                    a.g6, b.g6
                ));
            }
        }
    }
    Ok(counterexamples)
}

/// Exact distance characteristic polynomial, used to hunt for
/// distance-cospectral pairs feeding the prism corollary.
pub fn distance_char_poly(g: &Graph) -> Result<ExactPoly> {
    Ok(char_poly_exact(&distance_int_matrix(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts_match_catalog_sizes() {
        // Graphs up to isomorphism: 1, 2, 4, 11, 34, 156, 1044;
        // connected: 1, 1, 2, 6, 21, 112, 853.
        let all: Vec<usize> = (1..=7).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let conn: Vec<usize> = (1..=7)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112, 853]);
        assert!(all_graphs(8).is_err());
    }

    #[test]
    fn regular_generator_counts() {
        assert_eq!(regular_graphs(8, 3).unwrap().len(), 5);
        assert_eq!(regular_graphs(8, 4).unwrap().len(), 6);
        assert_eq!(regular_graphs(8, 5).unwrap().len(), 3);
        assert_eq!(regular_graphs(8, 6).unwrap().len(), 1);
        assert_eq!(regular_graphs(8, 7).unwrap().len(), 1);
        // Odd-degree odd-order products are impossible.
        assert!(regular_graphs(7, 3).unwrap().is_empty());
        assert_eq!(regular_graphs(5, 2).unwrap().len(), 1);
        assert!(regular_graphs(9, 2).is_err());
        for g in regular_graphs(8, 3).unwrap() {
            assert_eq!(g.regular_degree(), Some(3));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn scan_of_order_four_catalog() {
        let graphs = connected_graphs(4).unwrap();
        let lines: Vec<String> = graphs.iter().map(|g| g.to_graph6()).collect();
        let outcome = scan_catalog(lines.iter().map(|s| s.as_str()), &ScanOptions::default());
        let report = &outcome.report;
        assert_eq!(report.total, 6);
        assert_eq!(report.connected, 6);
        assert!(report.parse_errors.is_empty());
        assert!(report.characterization_failures.is_empty());
        assert!(report.bound_violations.is_empty());
        // K_4 and C_4 are the only distance-Seidel integral graphs here.
        let k4 = Graph::complete(4).to_graph6();
        let c4 = Graph::cycle(4).to_graph6();
        assert!(report.integral_graphs.contains(&k4));
        let c4_iso = report
            .integral_graphs
            .iter()
            .any(|s| Graph::from_graph6(s).unwrap().degrees() == vec![2, 2, 2, 2]);
        assert!(c4_iso, "a C4 encoding should be integral: {c4}");
        assert_eq!(report.integral_graphs.len(), 2);
        assert_eq!(outcome.rows.len(), 6);
    }

    #[test]
    fn cospectral_duplicate_encodings_group_together() {
        // The 4-cycle under two different vertex orders: same graph, two
        // distinct graph6 strings, one cospectral class.
        let outcome = scan_catalog(["Cl", "C]"], &ScanOptions::default());
        assert_eq!(outcome.report.cospectral_classes.len(), 1);
        assert_eq!(
            outcome.report.cospectral_classes[0],
            vec!["Cl".to_string(), "C]".to_string()]
        );
    }

    #[test]
    fn integral_pair_from_named_families() {
        let lines = [
            Graph::complete_bipartite(3, 3).to_graph6(),
            Graph::cocktail_party(3).to_graph6(),
        ];
        let outcome = scan_catalog(lines.iter().map(|s| s.as_str()), &ScanOptions::default());
        assert_eq!(outcome.report.integral_graphs.len(), 2);
        assert!(outcome.report.cospectral_classes.is_empty());
    }

    #[test]
    fn parse_errors_carry_line_numbers_and_scanning_continues() {
        let outcome = scan_catalog(["C~", "", "not graph6 \u{1}", "A_"], &ScanOptions::default());
        assert_eq!(outcome.report.total, 2);
        assert_eq!(outcome.report.parse_errors.len(), 1);
        assert!(outcome.report.parse_errors[0].starts_with("line 3:"));
    }

    #[test]
    fn disconnected_graphs_count_only_toward_total() {
        // 2K_1 on two vertices is "A?".
        let outcome = scan_catalog(["A?", "A_"], &ScanOptions::default());
        assert_eq!(outcome.report.total, 2);
        assert_eq!(outcome.report.connected, 1);
    }

    #[test]
    fn characterization_sweep_clean_through_order_five() {
        for n in 2..=5 {
            let graphs = connected_graphs(n).unwrap();
            let lines: Vec<String> = graphs.iter().map(|g| g.to_graph6()).collect();
            let outcome =
                scan_catalog(lines.iter().map(|s| s.as_str()), &ScanOptions::default());
            assert!(
                outcome.report.characterization_failures.is_empty(),
                "n={n}: {:?}",
                outcome.report.characterization_failures
            );
            assert!(
                outcome.report.bound_violations.is_empty(),
                "n={n}: {:?}",
                outcome.report.bound_violations
            );
        }
    }

    #[test]
    fn scan_is_deterministic_across_job_counts() {
        let graphs = connected_graphs(5).unwrap();
        let lines: Vec<String> = graphs.iter().map(|g| g.to_graph6()).collect();
        let mut opts = ScanOptions::default();
        let one = scan_catalog(lines.iter().map(|s| s.as_str()), &opts);
        opts.jobs = 4;
        let four = scan_catalog(lines.iter().map(|s| s.as_str()), &opts);
        assert_eq!(
            serde_json::to_string(&one.report).unwrap(),
            serde_json::to_string(&four.report).unwrap()
        );
        assert_eq!(scan_csv(&one.rows), scan_csv(&four.rows));
    }

    #[test]
    fn csv_has_expected_shape() {
        let outcome = scan_catalog(["C~"], &ScanOptions::default());
        let csv = scan_csv(&outcome.rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("graph6,energy,radius,integral"));
        assert_eq!(lines.next(), Some("C~,6,3,true"));
    }

    #[test]
    fn operation_corollaries_hold_on_identical_pairs() {
        let pairs = vec![
            (Graph::cycle(5), Graph::cycle(5)),
            (Graph::path(4), Graph::path(4)),
        ];
        for check in verify_operation_corollaries(&pairs).unwrap() {
            assert!(check.lex_cospectral && check.double_cospectral);
        }
        let prisms = verify_prism_corollary(&pairs).unwrap();
        assert!(prisms.iter().all(|&ok| ok));
    }

    #[test]
    fn operation_corollaries_hold_on_scanned_cospectral_classes() {
        // Hunt for genuinely cospectral mates in the order-7 catalog; every
        // pair in every discovered class must stay cospectral under both
        // constructions.
        let graphs = connected_graphs(7).unwrap();
        let lines: Vec<String> = graphs.iter().map(|g| g.to_graph6()).collect();
        let opts = ScanOptions {
            verify_bounds: false,
            jobs: 4,
            ..ScanOptions::default()
        };
        let outcome = scan_catalog(lines.iter().map(|s| s.as_str()), &opts);
        let mut pairs = Vec::new();
        for class in &outcome.report.cospectral_classes {
            for w in class.windows(2) {
                pairs.push((
                    Graph::from_graph6(&w[0]).unwrap(),
                    Graph::from_graph6(&w[1]).unwrap(),
                ));
            }
        }
        for check in verify_operation_corollaries(&pairs).unwrap() {
            assert!(check.lex_cospectral && check.double_cospectral);
        }
    }

    #[test]
    fn regular_cospectral_equivalence_has_no_small_counterexamples() {
        let mut graphs = Vec::new();
        for n in 2..=7 {
            graphs.extend(connected_graphs(n).unwrap());
        }
        let counterexamples = check_regular_cospectral_equivalence(&graphs).unwrap();
        assert!(counterexamples.is_empty(), "{counterexamples:?}");
    }
}
