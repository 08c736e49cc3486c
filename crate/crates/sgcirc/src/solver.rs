//! Exact circular chromatic numbers by candidate enumeration and
//! backtracking homomorphism search into discretized circular targets,
//! plus tightness analysis of optimal colorings.
//!
//! The candidate grid admits only even numerators: the tight-cycle
//! accounting forces the chromatic number into the form `2(s+t)/(2a+t)`
//! with numerator at most twice the vertex count. A witness found on the
//! grid is converted to a circle coloring and re-verified before being
//! returned.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::circle::{edge_slack, verify_coloring, Coloring, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::rational::{int, modulo, rat, Rational};

/// A discretized circular target: vertices `0..p` stand for the points
/// `i/q` on a circle of circumference `p/q`. `p` is even so the grid is
/// closed under taking antipodals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircularClique {
    pub p: usize,
    pub q: usize,
}

impl CircularClique {
    pub fn new(p: usize, q: usize) -> CircularClique {
        assert!(p >= 2 && p % 2 == 0, "numerator must be even");
        assert!(q >= 1);
        assert!(p <= 128, "grid size {p} exceeds the bitset width");
        CircularClique { p, q }
    }

    pub fn value(&self) -> Rational {
        rat(self.p as i64, self.q as i64)
    }

    fn cyclic_dist(&self, i: usize, j: usize) -> usize {
        let d = i.abs_diff(j);
        d.min(self.p - d)
    }

    /// Two grid points may carry a positive edge iff their cyclic distance
    /// is at least `q`.
    pub fn positive_ok(&self, i: usize, j: usize) -> bool {
        self.cyclic_dist(i, j) >= self.q
    }

    /// Two grid points may carry a negative edge iff one is at cyclic
    /// distance at least `q` from the other's antipodal.
    pub fn negative_ok(&self, i: usize, j: usize) -> bool {
        self.cyclic_dist(i, (j + self.p / 2) % self.p) >= self.q
    }
}

/// A candidate chromatic value with its even-numerator grid representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub value: Rational,
    pub p: usize,
    pub q: usize,
}

impl Candidate {
    pub fn clique(&self) -> CircularClique {
        CircularClique::new(self.p, self.q)
    }
}

/// All distinct values `p/q` with `p` even, `p <= p_max`, `2 <= p/q`, in
/// ascending order, each with the smallest even-numerator representative.
/// No upper cutoff; callers slice as needed.
fn candidate_grid(p_max: usize) -> Vec<Candidate> {
    let mut by_value: BTreeMap<Rational, (usize, usize)> = BTreeMap::new();
    let mut p = 2;
    while p <= p_max {
        for q in 1..=(p / 2) {
            let value = rat(p as i64, q as i64);
            by_value.entry(value).or_insert((p, q));
        }
        p += 2;
    }
    by_value
        .into_iter()
        .map(|(value, (p, q))| Candidate { value, p, q })
        .collect()
}

/// The candidate values for `g` below 4, per the `p <= 2|V|` numerator
/// bound, followed by the sentinel value 4.
pub fn candidate_values(g: &SignedGraph) -> Vec<Candidate> {
    let mut out: Vec<Candidate> = candidate_grid(2 * g.n())
        .into_iter()
        .filter(|c| c.value < int(4))
        .collect();
    out.push(Candidate { value: int(4), p: 4, q: 1 });
    out
}

/// Tests whether `g` maps into the grid target, returning a re-verified
/// circle coloring on success. Backtracking over a degeneracy variable
/// order with forward checking; the first assigned vertex is pinned to
/// grid point 0.
pub fn is_hom_feasible(g: &SignedGraph, k: CircularClique) -> Option<Coloring> {
    let (g, flags) = g.simplify();
    if flags.has_positive_loop {
        return None;
    }
    // A negative loop is the unary constraint p/2 >= q, i.e. value >= 2.
    if flags.has_negative_loop && k.p / 2 < k.q {
        return None;
    }
    let n = g.n();
    if n == 0 {
        return Some(Coloring::dense(k.value(), vec![]).expect("empty coloring"));
    }

    // Per-color allowed masks for the two constraint kinds.
    let full: u128 = if k.p == 128 { !0 } else { (1u128 << k.p) - 1 };
    let mask_for = |ok: &dyn Fn(usize, usize) -> bool| -> Vec<u128> {
        (0..k.p)
            .map(|i| {
                let mut m = 0u128;
                for j in 0..k.p {
                    if ok(i, j) {
                        m |= 1 << j;
                    }
                }
                m
            })
            .collect()
    };
    let pos_mask = mask_for(&|i, j| k.positive_ok(i, j));
    let neg_mask = mask_for(&|i, j| k.negative_ok(i, j));
    let both_mask: Vec<u128> = (0..k.p).map(|i| pos_mask[i] & neg_mask[i]).collect();

    // Adjacency with the constraint table per pair (digons use both).
    #[derive(Clone, Copy, PartialEq)]
    enum Kind {
        Pos,
        Neg,
        Both,
    }
    let mut pair_kind: BTreeMap<(usize, usize), Kind> = BTreeMap::new();
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        let kind = match e.sign {
            Sign::Positive => Kind::Pos,
            Sign::Negative => Kind::Neg,
        };
        pair_kind
            .entry((e.u, e.v))
            .and_modify(|k0| {
                if *k0 != kind {
                    *k0 = Kind::Both
                }
            })
            .or_insert(kind);
    }
    let mut adj: Vec<Vec<(usize, &Vec<u128>)>> = vec![Vec::new(); n];
    for (&(u, v), kind) in &pair_kind {
        let table = match kind {
            Kind::Pos => &pos_mask,
            Kind::Neg => &neg_mask,
            Kind::Both => &both_mask,
        };
        adj[u].push((v, table));
        adj[v].push((u, table));
    }

    let order = g.degeneracy_order(n).expect("n-degeneracy always succeeds");
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    // domains[i] is the live domain of order[i].
    let mut domains = vec![full; n];
    domains[0] = 1; // symmetry: first variable pinned to 0
    let mut colors = vec![0usize; n];

    fn search(
        depth: usize,
        order: &[usize],
        position: &[usize],
        adj: &[Vec<(usize, &Vec<u128>)>],
        domains: &mut Vec<u128>,
        colors: &mut Vec<usize>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        let mut dom = domains[depth];
        while dom != 0 {
            let color = dom.trailing_zeros() as usize;
            dom &= dom - 1;
            colors[v] = color;
            // forward check against unassigned neighbors
            let saved = domains.clone();
            let mut dead = false;
            for &(w, table) in &adj[v] {
                let wp = position[w];
                if wp > depth {
                    domains[wp] &= table[color];
                    if domains[wp] == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead && search(depth + 1, order, position, adj, domains, colors) {
                return true;
            }
            *domains = saved;
        }
        false
    }

    // Check assigned-assigned consistency lazily through forward checking:
    // every edge joins a vertex to one assigned earlier, whose domain was
    // already filtered, so a full solution is consistent by construction.
    if !search(0, &order, &position, &adj, &mut domains, &mut colors) {
        return None;
    }
    let r = k.value();
    let f: Vec<Rational> = (0..n).map(|v| rat(colors[v] as i64, k.q as i64)).collect();
    let c = Coloring::dense(r, f).expect("grid points lie in range");
    let verdict = verify_coloring(&g, &c).expect("domains match");
    assert!(verdict.is_ok(), "witness failed re-verification");
    Some(c)
}

/// Exact circular chromatic number with a verified witness.
#[derive(Debug, Clone)]
pub enum ChiC {
    /// A positive loop: no circular coloring at any radius.
    Infinite,
    Finite {
        value: Rational,
        p: usize,
        q: usize,
        witness: Coloring,
    },
}

impl ChiC {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            ChiC::Infinite => None,
            ChiC::Finite { value, .. } => Some(value),
        }
    }
}

pub fn chi_c(g: &SignedGraph) -> ChiC {
    chi_c_jobs(g, 1)
}

/// Exact circular chromatic number scanning the candidate grid in
/// ascending order; `jobs > 1` evaluates candidates in parallel while
/// preserving the ascending-scan result.
pub fn chi_c_jobs(g: &SignedGraph, jobs: usize) -> ChiC {
    chi_c_with_pmax(g, 2 * g.n().max(2), jobs)
}

/// As [`chi_c_jobs`] with an explicit numerator bound for the candidate
/// grid; used by the grid-refinement sanity checks.
pub fn chi_c_with_pmax(g: &SignedGraph, p_max: usize, jobs: usize) -> ChiC {
    let (simplified, flags) = g.simplify();
    if flags.has_positive_loop {
        return ChiC::Infinite;
    }
    if simplified.m() == 0 {
        let witness = Coloring::dense(int(1), vec![Rational::zero(); g.n()])
            .expect("all-zero coloring");
        return finite(rat(2, 2), witness);
    }
    if simplified.is_forest() {
        return finite(int(2), forest_coloring(&simplified));
    }
    let candidates = candidate_grid(p_max.max(4));
    let found = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            candidates
                .par_iter()
                .find_first(|cand| is_hom_feasible(&simplified, cand.clique()).is_some())
                .cloned()
        })
    } else {
        candidates
            .iter()
            .find(|cand| is_hom_feasible(&simplified, cand.clique()).is_some())
            .cloned()
    };
    match found {
        Some(cand) => {
            let witness =
                is_hom_feasible(&simplified, cand.clique()).expect("feasibility re-run");
            ChiC::Finite { value: cand.value.clone(), p: cand.p, q: cand.q, witness }
        }
        None => unreachable!("every loopless signed graph maps to some grid target"),
    }
}

fn finite(value: Rational, witness: Coloring) -> ChiC {
    // even-numerator representative of the value
    let numer = value.numer().to_usize().expect("small numerator");
    let denom = value.denom().to_usize().expect("small denominator");
    let (p, q) = if numer % 2 == 0 { (numer, denom) } else { (2 * numer, 2 * denom) };
    ChiC::Finite { value, p, q, witness }
}

/// 2-coloring of a signed forest at radius 2: a BFS places each vertex at
/// 0 or 1 so that positive edges cross the pair and negative edges stay
/// inside it.
fn forest_coloring(g: &SignedGraph) -> Coloring {
    let mut point = vec![None; g.n()];
    for root in 0..g.n() {
        if point[root].is_some() {
            continue;
        }
        point[root] = Some(0u8);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for e in g.incident_edges(u) {
                let w = e.other(u);
                if point[w].is_none() {
                    let mine = point[u].unwrap();
                    point[w] = Some(match e.sign {
                        Sign::Positive => 1 - mine,
                        Sign::Negative => mine,
                    });
                    queue.push_back(w);
                }
            }
        }
    }
    let f = point.into_iter().map(|x| int(x.unwrap() as i64)).collect();
    let c = Coloring::dense(int(2), f).expect("forest coloring");
    assert!(verify_coloring(g, &c).expect("domains match").is_ok());
    c
}

/// A cycle of tight edges with the winding accounting that forces the
/// rational form of the chromatic number.
#[derive(Debug, Clone)]
pub struct TightCycle {
    /// Cycle vertices in traversal order.
    pub vertices: Vec<usize>,
    /// Edge indices into the graph's edge list, one per step.
    pub edges: Vec<usize>,
    /// Per step, the increment representative: `+1` or `-1` on a positive
    /// edge, `r/2 + 1` or `r/2 - 1` on a negative edge.
    pub increments: Vec<Rational>,
    pub positive_edges: usize,
    pub negative_edges: usize,
    /// `m` with increment sum equal to `m * r`.
    pub winding: BigInt,
    /// Sum of the `+-1` parts.
    pub pm_sum: BigInt,
    /// `2 * pm_sum / (2 * winding - negative_edges)`; equals `r`.
    pub recovered_r: Rational,
}

impl TightCycle {
    pub fn is_hamiltonian(&self, n: usize) -> bool {
        self.vertices.len() == n
    }
}

#[derive(Debug, Clone)]
pub struct TightnessReport {
    /// Indices of zero-slack edges in the graph's edge list.
    pub tight_edges: Vec<usize>,
    /// A tight cycle with nonzero accounting, when one exists; the longest
    /// such cycle is reported.
    pub cycle: Option<TightCycle>,
}

/// Finds the tight subgraph of a valid coloring and a tight cycle whose
/// increment accounting recovers the radius.
pub fn analyze_tightness(g: &SignedGraph, c: &Coloring) -> Result<TightnessReport> {
    match verify_coloring(g, c)? {
        Verdict::Satisfied => {}
        Verdict::Violation { edge, reason, .. } => {
            return Err(Error::InvalidColoring(format!(
                "edge {}{}{}: {reason}",
                edge.u,
                edge.sign.symbol(),
                edge.v
            )))
        }
    }
    let r = c.r().clone();
    let mut tight_edges = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let slack = edge_slack(&r, e, c.get(e.u).unwrap(), c.get(e.v).unwrap())?;
        if slack.is_zero() {
            tight_edges.push(i);
        }
    }

    let cycles = simple_cycles(g, &tight_edges);
    let mut best: Option<TightCycle> = None;
    for (vertices, edges) in cycles {
        if let Some(tc) = account(g, c, &vertices, &edges) {
            let better = match &best {
                None => true,
                Some(b) => tc.vertices.len() > b.vertices.len(),
            };
            if better {
                best = Some(tc);
            }
        }
    }
    Ok(TightnessReport { tight_edges, cycle: best })
}

/// Computes the increment accounting of one cycle; returns `None` when the
/// plus-minus sum vanishes and the radius cannot be recovered.
fn account(
    g: &SignedGraph,
    c: &Coloring,
    vertices: &[usize],
    edges: &[usize],
) -> Option<TightCycle> {
    let r = c.r();
    let half = r / int(2);
    let len = vertices.len();
    let mut increments = Vec::with_capacity(len);
    let mut pm_sum = BigInt::zero();
    let mut positive_edges = 0usize;
    let mut negative_edges = 0usize;
    let mut total = Rational::zero();
    for step in 0..len {
        let from = vertices[step];
        let to = vertices[(step + 1) % len];
        let e = &g.edges()[edges[step]];
        let raw = modulo(&(c.get(to).unwrap() - c.get(from).unwrap()), r);
        let (rep, pm) = match e.sign {
            Sign::Positive => {
                positive_edges += 1;
                if raw == int(1) {
                    (int(1), 1)
                } else {
                    debug_assert_eq!(raw, r - int(1));
                    (int(-1), -1)
                }
            }
            Sign::Negative => {
                negative_edges += 1;
                if raw == &half + int(1) || (&half + int(1) == *r && raw.is_zero()) {
                    (&half + int(1), 1)
                } else {
                    debug_assert_eq!(raw, modulo(&(&half - int(1)), r));
                    (&half - int(1), -1)
                }
            }
        };
        total += &rep;
        pm_sum += pm;
        increments.push(rep);
    }
    let winding_ratio = &total / r;
    assert!(winding_ratio.is_integer(), "tight cycle increments must wind");
    let winding = winding_ratio.to_integer();
    let denom = int(2) * Rational::from_integer(winding.clone())
        - int(negative_edges as i64);
    if denom.is_zero() {
        return None;
    }
    let recovered_r = int(2) * Rational::from_integer(pm_sum.clone()) / denom;
    Some(TightCycle {
        vertices: vertices.to_vec(),
        edges: edges.to_vec(),
        increments,
        positive_edges,
        negative_edges,
        winding,
        pm_sum,
        recovered_r,
    })
}

/// Enumerates the simple cycles of the subgraph formed by the given edge
/// indices (multigraph-aware: a digon is a 2-cycle, a loop a 1-cycle).
/// Bounded enumeration intended for desk-scale graphs.
fn simple_cycles(g: &SignedGraph, edge_ids: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    const CAP: usize = 20_000;
    let mut out = Vec::new();
    // loops
    for &eid in edge_ids {
        let e = &g.edges()[eid];
        if e.is_loop() {
            out.push((vec![e.u], vec![eid]));
        }
    }
    // incidence list of non-loop tight edges
    let mut incidence: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()]; // (other, eid)
    for &eid in edge_ids {
        let e = &g.edges()[eid];
        if !e.is_loop() {
            incidence[e.u].push((e.v, eid));
            incidence[e.v].push((e.u, eid));
        }
    }
    // DFS from each start; only vertices >= start may appear, the second
    // vertex must be smaller than the last to kill direction duplicates.
    for start in 0..g.n() {
        let mut path = vec![start];
        let mut used_edges: Vec<usize> = Vec::new();
        dfs_cycles(&incidence, start, start, &mut path, &mut used_edges, &mut out, CAP);
        if out.len() >= CAP {
            break;
        }
    }
    out
}

fn dfs_cycles(
    incidence: &[Vec<(usize, usize)>],
    start: usize,
    current: usize,
    path: &mut Vec<usize>,
    used_edges: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    for &(next, eid) in &incidence[current] {
        if used_edges.contains(&eid) {
            continue;
        }
        if next == start && path.len() >= 2 {
            // close the cycle; dedupe the two traversal directions by
            // requiring the first used edge id to be the smaller endpoint
            // edge (2-cycles) or the second vertex below the last vertex
            let keep = if path.len() == 2 {
                used_edges[0] < eid
            } else {
                path[1] < *path.last().unwrap()
            };
            if keep {
                used_edges.push(eid);
                out.push((path.clone(), used_edges.clone()));
                used_edges.pop();
            }
            continue;
        }
        if next <= start || path.contains(&next) {
            continue;
        }
        path.push(next);
        used_edges.push(eid);
        dfs_cycles(incidence, start, next, path, used_edges, out, cap);
        path.pop();
        used_edges.pop();
    }
}

/// Slack map used by reporting: per edge, distance minus one (to the other
/// endpoint for positive edges, to its antipodal for negative ones).
pub fn edge_slacks(g: &SignedGraph, c: &Coloring) -> Result<Vec<Rational>> {
    g.edges()
        .iter()
        .map(|e| edge_slack(c.r(), e, c.get(e.u).unwrap(), c.get(e.v).unwrap()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn neg_c4() -> SignedGraph {
        generators::cycle(
            4,
            &[Sign::Positive, Sign::Positive, Sign::Positive, Sign::Negative],
        )
        .unwrap()
    }

    #[test]
    fn candidate_values_small_n() {
        let g = generators::complete(3, Sign::Positive);
        let values: Vec<Rational> = candidate_values(&g).into_iter().map(|c| c.value).collect();
        assert_eq!(values, vec![int(2), int(3), int(4)]);

        let g4 = SignedGraph::new(4);
        let values: Vec<Rational> = candidate_values(&g4).into_iter().map(|c| c.value).collect();
        assert!(values.contains(&rat(8, 3)));
        let g5 = SignedGraph::new(5);
        let values: Vec<Rational> = candidate_values(&g5).into_iter().map(|c| c.value).collect();
        assert!(values.contains(&rat(10, 3)));
    }

    #[test]
    fn candidates_use_even_numerator_representatives() {
        for cand in candidate_values(&SignedGraph::new(6)) {
            assert_eq!(cand.p % 2, 0);
            assert_eq!(cand.value, rat(cand.p as i64, cand.q as i64));
        }
    }

    #[test]
    fn hom_feasibility_examples() {
        let c = is_hom_feasible(&neg_c4(), CircularClique::new(8, 3)).unwrap();
        assert_eq!(c.r(), &rat(8, 3));
        assert!(is_hom_feasible(&neg_c4(), CircularClique::new(4, 2)).is_none());
        assert!(
            is_hom_feasible(&generators::complete(3, Sign::Positive), CircularClique::new(6, 2))
                .is_some()
        );
    }

    #[test]
    fn chi_c_base_cases() {
        assert_eq!(chi_c(&neg_c4()).value().unwrap(), &rat(8, 3));
        assert_eq!(
            chi_c(&generators::complete(3, Sign::Positive)).value().unwrap(),
            &int(3)
        );
        let digon = generators::cycle(2, &[Sign::Positive, Sign::Negative]).unwrap();
        assert_eq!(chi_c(&digon).value().unwrap(), &int(4));
        let mut single_neg = SignedGraph::new(2);
        single_neg.add_edge(0, 1, Sign::Negative).unwrap();
        assert_eq!(chi_c(&single_neg).value().unwrap(), &int(2));
    }

    #[test]
    fn chi_c_special_cases() {
        let mut loopy = SignedGraph::new(1);
        loopy.add_edge(0, 0, Sign::Positive).unwrap();
        assert!(matches!(chi_c(&loopy), ChiC::Infinite));

        assert_eq!(chi_c(&SignedGraph::new(3)).value().unwrap(), &int(1));

        let mut neg_loop = SignedGraph::new(1);
        neg_loop.add_edge(0, 0, Sign::Negative).unwrap();
        assert_eq!(chi_c(&neg_loop).value().unwrap(), &int(2));
    }

    #[test]
    fn chi_c_omega_2() {
        assert_eq!(chi_c(&generators::omega(2)).value().unwrap(), &rat(10, 3));
    }

    #[test]
    fn chi_c_is_deterministic_across_jobs() {
        let g = generators::omega(2);
        let a = chi_c_jobs(&g, 1);
        let b = chi_c_jobs(&g, 4);
        assert_eq!(a.value(), b.value());
    }

    #[test]
    fn tightness_on_neg_c4_optimum() {
        let g = neg_c4();
        let c = Coloring::dense(rat(8, 3), vec![int(0), int(1), int(2), rat(1, 3)]).unwrap();
        let report = analyze_tightness(&g, &c).unwrap();
        assert_eq!(report.tight_edges.len(), 4);
        let cyc = report.cycle.unwrap();
        assert_eq!(cyc.positive_edges, 3);
        assert_eq!(cyc.negative_edges, 1);
        assert_eq!(cyc.winding, BigInt::from(2));
        assert_eq!(cyc.pm_sum, BigInt::from(4));
        assert_eq!(cyc.recovered_r, rat(8, 3));
        assert!(cyc.is_hamiltonian(4));
    }

    #[test]
    fn tightness_on_triangle() {
        let g = generators::complete(3, Sign::Positive);
        let c = Coloring::dense(int(3), vec![int(0), int(1), int(2)]).unwrap();
        let report = analyze_tightness(&g, &c).unwrap();
        let cyc = report.cycle.unwrap();
        assert_eq!(cyc.positive_edges, 3);
        assert_eq!(cyc.negative_edges, 0);
        assert_eq!(cyc.winding, BigInt::from(1));
        assert_eq!(cyc.recovered_r, int(3));
    }

    #[test]
    fn tightness_all_slack() {
        let mut g = SignedGraph::new(3);
        g.add_edge(0, 1, Sign::Positive).unwrap();
        g.add_edge(1, 2, Sign::Positive).unwrap();
        g.add_edge(0, 2, Sign::Positive).unwrap();
        let c = Coloring::dense(int(4), vec![int(0), rat(3, 2), rat(11, 4)]).unwrap();
        let report = analyze_tightness(&g, &c).unwrap();
        assert!(report.tight_edges.is_empty());
        assert!(report.cycle.is_none());
    }

    #[test]
    fn tightness_rejects_invalid_colorings() {
        let g = generators::complete(3, Sign::Positive);
        let c = Coloring::dense(int(3), vec![int(0), int(0), int(1)]).unwrap();
        assert!(matches!(
            analyze_tightness(&g, &c),
            Err(Error::InvalidColoring(_))
        ));
    }
}
