//! Signed multigraphs: switching, cycle signs, equivalence testing,
//! bipartiteness and degeneracy orderings.
//!
//! Vertices are dense integers `0..n`. Loops and parallel edges are allowed;
//! simplicity is a queryable predicate, not an invariant.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge sign. The product of signs follows the usual rule:
/// the product is negative iff exactly one factor is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn product(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }
}

/// A signed edge with endpoints normalized so `u <= v`; `u == v` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Edge {
        Edge { u: u.min(v), v: u.max(v), sign }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint other than `x`; for a loop returns `x` itself.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// A subset of vertices to switch at. Switching multiplies the signs of all
/// edges with exactly one endpoint in the set by a minus; loops never flip.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SwitchSet {
    members: BTreeSet<usize>,
}

impl SwitchSet {
    pub fn new() -> SwitchSet {
        SwitchSet::default()
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> SwitchSet {
        SwitchSet { members: iter.into_iter().collect() }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: usize) {
        self.members.insert(v);
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Symmetric difference, the composition law for successive switchings.
    pub fn compose(&self, other: &SwitchSet) -> SwitchSet {
        SwitchSet {
            members: self.members.symmetric_difference(&other.members).copied().collect(),
        }
    }

    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        for &v in &self.members {
            if v >= g.n() {
                return Err(Error::IndexOutOfRange { index: v, n: g.n() });
            }
        }
        Ok(())
    }
}

/// Flags reported by [`SignedGraph::simplify`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SimplifyFlags {
    pub has_positive_loop: bool,
    pub has_negative_loop: bool,
    pub has_digon: bool,
}

/// A signed multigraph. Immutable after construction; all operations are
/// pure functions returning new graphs.
#[derive(Debug, Clone)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl PartialEq for SignedGraph {
    /// Equality up to edge order.
    fn eq(&self, other: &SignedGraph) -> bool {
        self.n == other.n && self.sorted_edges() == other.sorted_edges()
    }
}

impl Eq for SignedGraph {}

impl SignedGraph {
    pub fn new(n: usize) -> SignedGraph {
        SignedGraph { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, Sign)>) -> Result<SignedGraph> {
        let mut g = SignedGraph::new(n);
        for (u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        for idx in [u, v] {
            if idx >= self.n {
                return Err(Error::IndexOutOfRange { index: idx, n: self.n });
            }
        }
        self.edges.push(Edge::new(u, v, sign));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    fn sorted_edges(&self) -> Vec<Edge> {
        let mut es = self.edges.clone();
        es.sort();
        es
    }

    /// Distinct neighbors of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for e in &self.edges {
            if e.touches(v) && !e.is_loop() {
                out.insert(e.other(v));
            }
        }
        out
    }

    /// Edges incident to `v` (loops included).
    pub fn incident_edges(&self, v: usize) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.touches(v)).collect()
    }

    /// The multiset of signs between the unordered pair `(u, v)`.
    pub fn signs_between(&self, u: usize, v: usize) -> Vec<Sign> {
        let (u, v) = (u.min(v), u.max(v));
        self.edges
            .iter()
            .filter(|e| e.u == u && e.v == v)
            .map(|e| e.sign)
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize, sign: Sign) -> bool {
        self.signs_between(u, v).contains(&sign)
    }

    /// No loops and no parallel edges of any sign combination.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            if e.is_loop() || !seen.insert((e.u, e.v)) {
                return false;
            }
        }
        true
    }

    /// Collapses same-sign parallel edges (and same-sign parallel loops) to a
    /// single edge. Opposite-sign pairs are kept: a digon stays a digon.
    pub fn simplify(&self) -> (SignedGraph, SimplifyFlags) {
        let mut kept = BTreeSet::new();
        let mut flags = SimplifyFlags::default();
        for e in &self.edges {
            kept.insert((e.u, e.v, e.sign));
        }
        for &(u, v, sign) in &kept {
            if u == v {
                match sign {
                    Sign::Positive => flags.has_positive_loop = true,
                    Sign::Negative => flags.has_negative_loop = true,
                }
            } else if kept.contains(&(u, v, sign.flipped())) {
                flags.has_digon = true;
            }
        }
        let g = SignedGraph {
            n: self.n,
            edges: kept.into_iter().map(|(u, v, s)| Edge::new(u, v, s)).collect(),
        };
        (g, flags)
    }

    /// Switches the signature at the vertex set `s`.
    pub fn switch(&self, s: &SwitchSet) -> Result<SignedGraph> {
        s.validate(self)?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let flip = s.contains(e.u) != s.contains(e.v);
                Edge { sign: if flip { e.sign.flipped() } else { e.sign }, ..*e }
            })
            .collect();
        Ok(SignedGraph { n: self.n, edges })
    }

    /// Sign of a closed walk given as a vertex sequence plus the edge index
    /// used at each step; edge `edges[i]` must join `vertices[i]` and
    /// `vertices[(i+1) % len]`. Multiplicity counts.
    pub fn cycle_sign(&self, vertices: &[usize], edge_ids: &[usize]) -> Result<Sign> {
        if vertices.is_empty() || vertices.len() != edge_ids.len() {
            return Err(Error::NotAWalk { u: 0, v: 0, sign: None, step: 0 });
        }
        let mut sign = Sign::Positive;
        for (i, &eid) in edge_ids.iter().enumerate() {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            let e = self.edges.get(eid).ok_or(Error::NotAWalk { u: a, v: b, sign: None, step: i })?;
            let joins = (e.u == a.min(b) && e.v == a.max(b)) || (e.is_loop() && a == b && e.u == a);
            if !joins {
                return Err(Error::NotAWalk { u: a, v: b, sign: None, step: i });
            }
            sign = sign.product(e.sign);
        }
        Ok(sign)
    }

    /// Unsigned edge multiset as sorted `(u, v)` pairs, loops included.
    fn underlying_multiset(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        pairs.sort();
        pairs
    }

    /// Decides switching equivalence and returns a witness switch set when
    /// the signatures are equivalent. The two graphs must share the same
    /// underlying multigraph.
    ///
    /// Per component: propagate switch values along a BFS tree so that the
    /// per-pair sign multisets agree, then verify all remaining pairs.
    pub fn is_equivalent(&self, other: &SignedGraph) -> Result<Option<SwitchSet>> {
        if self.n != other.n {
            return Err(Error::StructureMismatch(format!(
                "vertex counts {} vs {}",
                self.n, other.n
            )));
        }
        if self.underlying_multiset() != other.underlying_multiset() {
            return Err(Error::StructureMismatch("edge multisets differ".into()));
        }

        // Loops never flip under switching: their sign multisets must match.
        for v in 0..self.n {
            let mut a: Vec<_> = self.edges.iter().filter(|e| e.is_loop() && e.u == v).map(|e| e.sign).collect();
            let mut b: Vec<_> = other.edges.iter().filter(|e| e.is_loop() && e.u == v).map(|e| e.sign).collect();
            a.sort();
            b.sort();
            if a != b {
                return Ok(None);
            }
        }

        // Per unordered pair, the required relative flip between the two
        // endpoint switch values: Some(flip) when forced, None when free
        // (a balanced digon matches either way).
        let mut pair_constraint: BTreeMap<(usize, usize), Option<bool>> = BTreeMap::new();
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for e in &self.edges {
            if !e.is_loop() {
                pairs.insert((e.u, e.v));
            }
        }
        for &(u, v) in &pairs {
            let mut mine = self.signs_between(u, v);
            let mut theirs = other.signs_between(u, v);
            mine.sort();
            theirs.sort();
            let mut flipped: Vec<_> = mine.iter().map(|s| s.flipped()).collect();
            flipped.sort();
            let same_ok = mine == theirs;
            let flip_ok = flipped == theirs;
            let c = match (same_ok, flip_ok) {
                (true, true) => None,
                (true, false) => Some(false),
                (false, true) => Some(true),
                (false, false) => return Ok(None),
            };
            pair_constraint.insert((u, v), c);
        }

        // 2-color the constraint graph component by component.
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); self.n];
        for (&(u, v), c) in &pair_constraint {
            if let Some(flip) = *c {
                adj[u].push((v, flip));
                adj[v].push((u, flip));
            }
        }
        let mut value: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if value[root].is_some() {
                continue;
            }
            value[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let vu = value[u].unwrap();
                for &(v, flip) in &adj[u] {
                    let want = vu != flip;
                    match value[v] {
                        None => {
                            value[v] = Some(want);
                            queue.push_back(v);
                        }
                        Some(have) if have != want => return Ok(None),
                        Some(_) => {}
                    }
                }
            }
        }
        let witness = SwitchSet::from_iter(
            (0..self.n).filter(|&v| value[v] == Some(true)),
        );
        // Final verification over all pairs (Zaslavsky soundness check).
        let switched = self.switch(&witness)?;
        if &switched == other {
            Ok(Some(witness))
        } else {
            Ok(None)
        }
    }

    /// Standard odd-cycle-free test on the underlying graph; signs are
    /// ignored, loops make the graph non-bipartite.
    pub fn is_bipartite(&self) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
        if self.edges.iter().any(|e| e.is_loop()) {
            return None;
        }
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| side[v] == Some(false)).collect();
        let right = (0..self.n).filter(|&v| side[v] == Some(true)).collect();
        Some((left, right))
    }

    /// Repeatedly deletes a minimum-degree vertex (parallel edges counted
    /// once, loops ignored); on success returns an order `v_1..v_n` in which
    /// every vertex has at most `k` neighbors among its predecessors.
    pub fn degeneracy_order(&self, k: usize) -> Result<Vec<usize>> {
        let mut alive: BTreeSet<usize> = (0..self.n).collect();
        let mut adj: Vec<BTreeSet<usize>> = (0..self.n).map(|v| self.neighbors(v)).collect();
        let mut deletion = Vec::with_capacity(self.n);
        while !alive.is_empty() {
            let &v = alive
                .iter()
                .min_by_key(|&&v| adj[v].len())
                .expect("alive is non-empty");
            if adj[v].len() > k {
                return Err(Error::NotDegenerate(k));
            }
            alive.remove(&v);
            let nbrs: Vec<_> = adj[v].iter().copied().collect();
            for w in nbrs {
                adj[w].remove(&v);
            }
            adj[v].clear();
            deletion.push(v);
        }
        deletion.reverse();
        Ok(deletion)
    }

    /// Induced subgraph on `keep` (in the given order); vertex `i` of the
    /// result corresponds to `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Result<SignedGraph> {
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n {
                return Err(Error::IndexOutOfRange { index: v, n: self.n });
            }
            index.insert(v, i);
        }
        let mut g = SignedGraph::new(keep.len());
        for e in &self.edges {
            if let (Some(&u), Some(&v)) = (index.get(&e.u), index.get(&e.v)) {
                g.add_edge(u, v, e.sign)?;
            }
        }
        Ok(g)
    }

    /// True when the underlying multigraph has no cycle: no loops, no
    /// parallel edges, and acyclic.
    pub fn is_forest(&self) -> bool {
        if self.edges.iter().any(|e| e.is_loop()) {
            return false;
        }
        let mut seen_pairs = BTreeSet::new();
        for e in &self.edges {
            if !seen_pairs.insert((e.u, e.v)) {
                return false; // parallel edges form a 2-cycle
            }
        }
        // Union-find cycle check.
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}
