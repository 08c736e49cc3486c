//! Graph constructions: vertex contraction, the positive-edge gadget
//! expansion, the negative-4-cycle substitution, the sign-negating
//! subdivision, the tight families, and basic fixtures.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SimplifyFlags};

/// Result of contracting all edges at a vertex: the contracted graph (after
/// collapsing same-sign parallels), the id of the merged vertex, the old-to-
/// new vertex map, and the simplification flags. A positive loop in the
/// result means the contraction is not circularly colorable at any radius.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: SignedGraph,
    pub z: usize,
    pub vertex_map: Vec<usize>,
    pub flags: SimplifyFlags,
}

/// Contracts all edges incident to `u`, merging the closed neighborhood of
/// `u` into a single vertex `z` (id 0 of the result); edges inside the
/// neighborhood not incident to `u` become loops at `z`, all other signs are
/// kept. Same-sign parallels are collapsed.
pub fn f_u(g: &SignedGraph, u: usize) -> Result<Contraction> {
    if u >= g.n() {
        return Err(Error::IndexOutOfRange { index: u, n: g.n() });
    }
    let mut closed = g.neighbors(u);
    closed.insert(u);
    let mut vertex_map = vec![usize::MAX; g.n()];
    let mut next = 1usize;
    for v in 0..g.n() {
        vertex_map[v] = if closed.contains(&v) {
            0
        } else {
            let id = next;
            next += 1;
            id
        };
    }
    let mut h = SignedGraph::new(next);
    for e in g.edges() {
        if e.touches(u) {
            continue; // contracted away
        }
        h.add_edge(vertex_map[e.u], vertex_map[e.v], e.sign)?;
    }
    let (graph, flags) = h.simplify();
    Ok(Contraction { graph, z: 0, vertex_map, flags })
}

/// Expands a positive edge `uv` of a simple signed graph: adds a copy `u'`
/// of `u`, then a copy `v'` of `v` (in the graph already containing `u'`),
/// then two connector vertices `x`, `y` with `xu`, `yv` positive and `xu'`,
/// `yv'`, `xy` negative. New vertex ids, in order: `u' = n`, `v' = n+1`,
/// `x = n+2`, `y = n+3`.
pub fn f_uv(g: &SignedGraph, u: usize, v: usize) -> Result<SignedGraph> {
    if !g.is_simple() {
        return Err(Error::NonSimpleInput("edge expansion".into()));
    }
    if !g.has_edge(u, v, Sign::Positive) {
        return Err(Error::NotPositiveEdge { u, v });
    }
    let n = g.n();
    let (u_copy, v_copy, x, y) = (n, n + 1, n + 2, n + 3);
    let mut h = SignedGraph::new(n + 4);
    for e in g.edges() {
        h.add_edge(e.u, e.v, e.sign)?;
    }
    // copy of u
    for e in g.incident_edges(u) {
        h.add_edge(u_copy, e.other(u), e.sign)?;
    }
    // copy of v, in the graph that already contains u'; v sees u with the
    // positive sign of uv, so v' sees both u and u' positively
    let mut v_edges: Vec<(usize, Sign)> =
        g.incident_edges(v).iter().map(|e| (e.other(v), e.sign)).collect();
    v_edges.push((u_copy, Sign::Positive));
    for (w, s) in v_edges {
        h.add_edge(v_copy, w, s)?;
    }
    h.add_edge(x, u, Sign::Positive)?;
    h.add_edge(y, v, Sign::Positive)?;
    h.add_edge(x, u_copy, Sign::Negative)?;
    h.add_edge(y, v_copy, Sign::Negative)?;
    h.add_edge(x, y, Sign::Negative)?;
    Ok(h)
}

/// Ids of the four vertices added by [`f_uv`] on a graph of `n` vertices:
/// `(u', v', x, y)`.
pub fn f_uv_new_ids(n: usize) -> (usize, usize, usize, usize) {
    (n, n + 1, n + 2, n + 3)
}

/// Replaces each edge `uv` of a simple graph by a negative 4-cycle
/// `u - a - v - b - u` through two new vertices, with the `bu` edge negative
/// and the other three positive. Input signs are ignored. The result is
/// bipartite with every new vertex of degree 2.
pub fn s_of(g: &SignedGraph) -> Result<SignedGraph> {
    if !g.is_simple() {
        return Err(Error::NonSimpleInput("negative 4-cycle substitution".into()));
    }
    let n = g.n();
    let mut h = SignedGraph::new(n + 2 * g.m());
    for (i, e) in g.edges().iter().enumerate() {
        let a = n + 2 * i;
        let b = n + 2 * i + 1;
        h.add_edge(e.u, a, Sign::Positive)?;
        h.add_edge(a, e.v, Sign::Positive)?;
        h.add_edge(e.v, b, Sign::Positive)?;
        h.add_edge(b, e.u, Sign::Negative)?;
    }
    Ok(h)
}

/// Subdivides each edge once and signs the two half-edges so that the sign
/// of the resulting 2-path is the negation of the original edge sign:
/// the first half-edge gets the negated original sign, the second is
/// positive.
pub fn t2_of(g: &SignedGraph) -> Result<SignedGraph> {
    if !g.is_simple() {
        return Err(Error::NonSimpleInput("subdivision".into()));
    }
    let n = g.n();
    let mut h = SignedGraph::new(n + g.m());
    for (i, e) in g.edges().iter().enumerate() {
        let mid = n + i;
        h.add_edge(e.u, mid, e.sign.flipped())?;
        h.add_edge(mid, e.v, Sign::Positive)?;
    }
    Ok(h)
}

/// The tight 2-degenerate family: the all-positive triangle, then twice per
/// step a vertex is added - first a copy of the last vertex, then a vertex
/// joined to the pair, negatively to the older one and positively to the
/// copy. `omega(i)` has `2i + 1` vertices and `4i - 1` edges.
pub fn omega(i: usize) -> SignedGraph {
    assert!(i >= 1, "omega is defined for i >= 1");
    let mut g = complete(3, Sign::Positive);
    for step in 1..i {
        let last = 2 * step; // v_{2 step + 1}
        let copy = last + 1;
        let joint = last + 2;
        let mut h = SignedGraph::new(g.n() + 2);
        for e in g.edges() {
            h.add_edge(e.u, e.v, e.sign).expect("edges in range");
        }
        for e in g.incident_edges(last) {
            h.add_edge(copy, e.other(last), e.sign).expect("edges in range");
        }
        h.add_edge(joint, last, Sign::Negative).expect("edges in range");
        h.add_edge(joint, copy, Sign::Positive).expect("edges in range");
        g = h;
    }
    g
}

/// The tight bipartite planar family: `omega(i - 1)` with the edge between
/// its first two vertices subdivided once, one half positive and one
/// negative. `gamma_star(i)` has `2i` vertices and `4i - 4` edges.
pub fn gamma_star(i: usize) -> SignedGraph {
    assert!(i >= 2, "gamma_star is defined for i >= 2");
    let base = omega(i - 1);
    let mid = base.n();
    let mut g = SignedGraph::new(base.n() + 1);
    for e in base.edges() {
        if (e.u, e.v) == (0, 1) {
            continue;
        }
        g.add_edge(e.u, e.v, e.sign).expect("edges in range");
    }
    g.add_edge(0, mid, Sign::Positive).expect("edges in range");
    g.add_edge(mid, 1, Sign::Negative).expect("edges in range");
    g
}

/// Complete graph on `n` vertices with a uniform sign.
pub fn complete(n: usize, sign: Sign) -> SignedGraph {
    assert!(n >= 1);
    let mut g = SignedGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v, sign).expect("edges in range");
        }
    }
    g
}

/// Cycle on `n` vertices with the given sign pattern; edge `i` joins
/// vertices `i` and `(i+1) mod n`, so `cycle(2, ..)` is a digon and
/// `cycle(1, ..)` a loop.
pub fn cycle(n: usize, pattern: &[Sign]) -> Result<SignedGraph> {
    assert!(n >= 1);
    if pattern.len() != n {
        return Err(Error::Parse {
            line: 0,
            msg: format!("sign pattern has length {}, expected {n}", pattern.len()),
        });
    }
    let mut g = SignedGraph::new(n);
    for (i, &s) in pattern.iter().enumerate() {
        g.add_edge(i, (i + 1) % n, s)?;
    }
    Ok(g)
}

/// Random simple 2-degenerate signed graph on `n` vertices: every vertex
/// after the first joins one or two earlier vertices with random signs.
/// 2-degenerate by construction.
pub fn random_2degenerate<R: Rng>(n: usize, rng: &mut R) -> SignedGraph {
    assert!(n >= 1);
    let mut g = SignedGraph::new(n);
    for v in 1..n {
        let deg = if v == 1 { 1 } else { rng.gen_range(1..=2usize) };
        let mut picked = Vec::new();
        while picked.len() < deg {
            let w = rng.gen_range(0..v);
            if !picked.contains(&w) {
                picked.push(w);
            }
        }
        for w in picked {
            let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
            g.add_edge(v, w, sign).expect("edges in range");
        }
    }
    g
}

/// Random signed graph: each pair gets an edge with probability `p`, signs
/// uniform. Simple by construction.
pub fn random_simple<R: Rng>(n: usize, p: f64, rng: &mut R) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
                g.add_edge(u, v, sign).expect("edges in range");
            }
        }
    }
    g
}
