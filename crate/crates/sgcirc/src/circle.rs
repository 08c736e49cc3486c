//! Exact circle arithmetic and the circular-coloring verifier.
//!
//! A coloring assigns each vertex a point of `[0, r)` on a circle of
//! circumference `r`. A positive edge wants its endpoints at distance at
//! least 1; a negative edge wants one endpoint at distance at least 1 from
//! the antipodal of the other. The verifier checks every edge through both
//! the circle-metric form and the interval form and insists they agree.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph, SwitchSet};
use crate::rational::{fmt_ratio, int, modulo, Rational};

#[cfg(test)]
use crate::rational::rat;

/// Circle-metric distance `min(|a-b|, r-|a-b|)`; symmetric and at most `r/2`.
pub fn circ_dist(r: &Rational, a: &Rational, b: &Rational) -> Result<Rational> {
    check_point(r, a)?;
    check_point(r, b)?;
    let d = (a - b).abs();
    Ok((r - &d).min(d))
}

/// The point diametrically opposite `a`: `(a + r/2) mod r`. An involution.
pub fn antipodal(r: &Rational, a: &Rational) -> Result<Rational> {
    check_point(r, a)?;
    Ok(modulo(&(a + r / int(2)), r))
}

fn check_point(r: &Rational, a: &Rational) -> Result<()> {
    if a.is_negative() || a >= r {
        return Err(Error::OutOfRange { point: fmt_ratio(a), r: fmt_ratio(r) });
    }
    Ok(())
}

/// A circular coloring: circumference `r >= 1` and one point per vertex.
/// The domain is an explicit map so partial colorings (of a graph minus a
/// vertex) use the same type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    r: Rational,
    points: BTreeMap<usize, Rational>,
}

impl Coloring {
    pub fn new(r: Rational, points: BTreeMap<usize, Rational>) -> Result<Coloring> {
        if r < int(1) {
            return Err(Error::BadRadius(fmt_ratio(&r)));
        }
        for p in points.values() {
            check_point(&r, p)?;
        }
        Ok(Coloring { r, points })
    }

    /// Dense coloring over vertices `0..f.len()`.
    pub fn dense(r: Rational, f: Vec<Rational>) -> Result<Coloring> {
        Coloring::new(r, f.into_iter().enumerate().collect())
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn get(&self, v: usize) -> Option<&Rational> {
        self.points.get(&v)
    }

    pub fn points(&self) -> &BTreeMap<usize, Rational> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn insert(&mut self, v: usize, point: Rational) -> Result<()> {
        check_point(&self.r, &point)?;
        self.points.insert(v, point);
        Ok(())
    }

    /// True when the domain is exactly `0..n`.
    pub fn covers(&self, n: usize) -> bool {
        self.points.len() == n && self.points.keys().copied().eq(0..n)
    }

    /// Adds `delta` to every point, modulo `r`.
    pub fn rotate(&self, delta: &Rational) -> Coloring {
        let points = self
            .points
            .iter()
            .map(|(&v, p)| (v, modulo(&(p + delta), &self.r)))
            .collect();
        Coloring { r: self.r.clone(), points }
    }

    /// Maps every point `a` to `(r - a) mod r`: reflection along the
    /// diameter through 0.
    pub fn reflect(&self) -> Coloring {
        let points = self
            .points
            .iter()
            .map(|(&v, p)| (v, modulo(&(&self.r - p), &self.r)))
            .collect();
        Coloring { r: self.r.clone(), points }
    }

    /// Replaces the points of the vertices in `s` by their antipodals.
    /// A coloring is valid for `switch(g, s)` exactly when this image is
    /// valid for `g`.
    pub fn antipodalize(&self, s: &SwitchSet) -> Coloring {
        let points = self
            .points
            .iter()
            .map(|(&v, p)| {
                let q = if s.contains(v) {
                    antipodal(&self.r, p).expect("point already in range")
                } else {
                    p.clone()
                };
                (v, q)
            })
            .collect();
        Coloring { r: self.r.clone(), points }
    }
}

/// Verdict of the verifier: either every edge constraint holds, or the
/// first offending edge is reported with its slack (negative when violated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Satisfied,
    Violation { edge: Edge, reason: String, slack: Rational },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Satisfied)
    }
}

/// Slack of a single edge constraint: distance minus 1, where the distance
/// is to the other endpoint (positive edge) or to its antipodal (negative
/// edge). Nonnegative iff the constraint holds, zero iff tight.
pub fn edge_slack(r: &Rational, edge: &Edge, fu: &Rational, fv: &Rational) -> Result<Rational> {
    let d = match edge.sign {
        Sign::Positive => circ_dist(r, fu, fv)?,
        Sign::Negative => circ_dist(r, fu, &antipodal(r, fv)?)?,
    };
    Ok(d - int(1))
}

/// Interval-form check of a single edge, used as the independent second
/// route: positive wants `1 <= |fu - fv| <= r-1`; negative wants
/// `|fu - fv| <= r/2 - 1` or `|fu - fv| >= r/2 + 1`.
fn edge_ok_interval(r: &Rational, edge: &Edge, fu: &Rational, fv: &Rational) -> bool {
    let d = (fu - fv).abs();
    match edge.sign {
        Sign::Positive => d >= int(1) && d <= r - int(1),
        Sign::Negative => {
            let half = r / int(2);
            d <= &half - int(1) || d >= half + int(1)
        }
    }
}

/// Verifies a full coloring of `g`. The domain must be exactly the vertex
/// set of `g`.
pub fn verify_coloring(g: &SignedGraph, c: &Coloring) -> Result<Verdict> {
    if !c.covers(g.n()) {
        return Err(Error::DomainMismatch(format!(
            "coloring has {} points, graph has {} vertices",
            c.len(),
            g.n()
        )));
    }
    verify_edges(g, c, None)
}

/// Verifies `c` on `g` minus the vertex `skip`: the domain must be exactly
/// the other vertices, and only edges avoiding `skip` are checked.
pub fn verify_coloring_minus(g: &SignedGraph, c: &Coloring, skip: usize) -> Result<Verdict> {
    let want: Vec<usize> = (0..g.n()).filter(|&v| v != skip).collect();
    if c.len() != want.len() || !want.iter().all(|v| c.get(*v).is_some()) {
        return Err(Error::DomainMismatch(format!(
            "coloring domain is not V \\ {{{skip}}}"
        )));
    }
    verify_edges(g, c, Some(skip))
}

fn verify_edges(g: &SignedGraph, c: &Coloring, skip: Option<usize>) -> Result<Verdict> {
    for edge in g.edges() {
        if let Some(s) = skip {
            if edge.touches(s) {
                continue;
            }
        }
        let fu = c.get(edge.u).expect("domain checked");
        let fv = c.get(edge.v).expect("domain checked");
        let slack = edge_slack(c.r(), edge, fu, fv)?;
        let metric_ok = !slack.is_negative();
        let interval_ok = edge_ok_interval(c.r(), edge, fu, fv);
        // Definitions 1.3-style and 1.6-style checks are equivalent; a
        // disagreement would be an arithmetic bug.
        assert_eq!(
            metric_ok, interval_ok,
            "circle-metric and interval checks disagree on edge {edge:?}"
        );
        if !metric_ok {
            let reason = match edge.sign {
                Sign::Positive => "positive edge endpoints closer than 1",
                Sign::Negative => "negative edge endpoint closer than 1 to antipodal",
            };
            return Ok(Verdict::Violation {
                edge: *edge,
                reason: reason.to_string(),
                slack,
            });
        }
    }
    Ok(Verdict::Satisfied)
}

/// Parameters of the scale-and-insert transform from radius `4 - eps` to
/// `4 - eps/4`: scale by `gamma`, then shift every scaled point at or past
/// the insertion cut `1 - eps/8` by `eps/4`.
#[derive(Debug, Clone)]
pub struct TransformParams {
    pub eps: Rational,
    pub gamma: Rational,
    pub cut: Rational,
}

impl TransformParams {
    pub fn new(eps: Rational) -> Result<TransformParams> {
        if !eps.is_positive() || eps >= int(2) {
            return Err(Error::EpsOutOfRange(fmt_ratio(&eps)));
        }
        let gamma = (int(4) - &eps / int(2)) / (int(4) - &eps);
        let alt = int(1) + &eps / (int(8) - int(2) * &eps);
        assert_eq!(gamma, alt, "the two closed forms of gamma must agree");
        debug_assert!(gamma > int(1));
        let cut = int(1) - &eps / int(8);
        Ok(TransformParams { eps, gamma, cut })
    }

    pub fn map_point(&self, p: &Rational) -> Rational {
        let scaled = &self.gamma * p;
        if scaled < self.cut {
            scaled
        } else {
            scaled + &self.eps / int(4)
        }
    }
}

/// Maps a coloring on the circle of circumference `4 - eps` to one on
/// `4 - eps/4` via uniform scaling followed by insertion of a gap of
/// length `eps/4` at the cut point. Validity of any coloring of any signed
/// graph is preserved; 0 maps to 0, equal points map to equal points, and
/// any point at or above `2 - eps/2` lands at or above 2.
pub fn transform_4eps(c: &Coloring) -> Result<Coloring> {
    let eps = int(4) - c.r();
    if !eps.is_positive() || eps >= int(2) {
        return Err(Error::EpsOutOfRange(fmt_ratio(&eps)));
    }
    let params = TransformParams::new(eps.clone())?;
    let new_r = int(4) - &eps / int(4);
    let points = c
        .points()
        .iter()
        .map(|(&v, p)| (v, params.map_point(p)))
        .collect();
    Coloring::new(new_r, points)
}

/// Radius for a given epsilon, `4 - eps`.
pub fn radius_for_eps(eps: &Rational) -> Rational {
    int(4) - eps
}

/// Epsilon for a radius in `(2, 4)`.
pub fn eps_for_radius(r: &Rational) -> Result<Rational> {
    let eps = int(4) - r;
    if r <= &int(2) || !eps.is_positive() {
        return Err(Error::BadRadius(fmt_ratio(r)));
    }
    Ok(eps)
}

/// Picks a point at distance at least 1 from every constraint point of the
/// incident edges of a new vertex, if one exists. `constraints` holds, per
/// neighbor edge, the point the new vertex must stay at distance >= 1 from
/// (the neighbor's point for a positive edge, its antipodal for a negative
/// one). Candidate points are the arc boundaries, which is exhaustive since
/// every feasible region is a finite union of closed arcs.
pub fn feasible_point(r: &Rational, constraints: &[Rational]) -> Option<Rational> {
    if constraints.is_empty() {
        return Some(Rational::zero());
    }
    let one = Rational::one();
    let mut candidates = Vec::new();
    for a in constraints {
        candidates.push(modulo(&(a + &one), r));
        candidates.push(modulo(&(a - &one), r));
    }
    candidates.into_iter().find(|cand| {
        constraints
            .iter()
            .all(|a| circ_dist(r, cand, a).map(|d| d >= one).unwrap_or(false))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::SignedGraph;

    #[test]
    fn circ_dist_examples() {
        assert_eq!(circ_dist(&int(4), &int(1), &int(3)).unwrap(), int(2));
        assert_eq!(circ_dist(&rat(10, 3), &int(0), &int(3)).unwrap(), rat(1, 3));
        assert_eq!(circ_dist(&rat(8, 3), &rat(1, 3), &rat(4, 3)).unwrap(), int(1));
        assert!(circ_dist(&int(4), &int(4), &int(0)).is_err());
    }

    #[test]
    fn antipodal_examples() {
        assert_eq!(antipodal(&int(4), &int(1)).unwrap(), int(3));
        assert_eq!(antipodal(&rat(8, 3), &int(0)).unwrap(), rat(4, 3));
        let r = rat(10, 3);
        for a in [int(0), rat(7, 5), int(3)] {
            let b = antipodal(&r, &a).unwrap();
            assert_eq!(antipodal(&r, &b).unwrap(), a);
        }
    }

    #[test]
    fn verify_negative_c4_at_8_3() {
        let g = generators::cycle(
            4,
            &[Sign::Positive, Sign::Positive, Sign::Positive, Sign::Negative],
        )
        .unwrap();
        let c = Coloring::dense(rat(8, 3), vec![int(0), int(1), int(2), rat(1, 3)]).unwrap();
        assert!(verify_coloring(&g, &c).unwrap().is_ok());
    }

    #[test]
    fn verify_reports_first_violation() {
        let g = generators::complete(3, Sign::Positive);
        let c = Coloring::dense(int(3), vec![int(0), int(1), int(1)]).unwrap();
        match verify_coloring(&g, &c).unwrap() {
            Verdict::Violation { edge, slack, .. } => {
                assert_eq!((edge.u, edge.v), (1, 2));
                assert_eq!(slack, int(-1));
            }
            Verdict::Satisfied => panic!("expected a violation"),
        }
    }

    #[test]
    fn verify_negative_edge_equal_points_at_2() {
        let mut g = SignedGraph::new(2);
        g.add_edge(0, 1, Sign::Negative).unwrap();
        let c = Coloring::dense(int(2), vec![int(0), int(0)]).unwrap();
        assert!(verify_coloring(&g, &c).unwrap().is_ok());
    }

    #[test]
    fn rotate_and_reflect_examples() {
        let c = Coloring::dense(int(3), vec![int(0), int(1)]).unwrap();
        let rc = c.rotate(&int(2));
        assert_eq!(rc.get(0).unwrap(), &int(2));
        assert_eq!(rc.get(1).unwrap(), &int(0));

        let c = Coloring::dense(int(3), vec![int(0), rat(8, 5)]).unwrap();
        let fc = c.reflect();
        assert_eq!(fc.get(0).unwrap(), &int(0));
        assert_eq!(fc.get(1).unwrap(), &rat(7, 5));
    }

    #[test]
    fn transform_hand_values() {
        // eps = 1: gamma = 7/6, cut = 7/8
        let c = Coloring::dense(int(3), vec![int(0), rat(8, 5)]).unwrap();
        let t = transform_4eps(&c).unwrap();
        assert_eq!(t.r(), &rat(15, 4));
        assert_eq!(t.get(0).unwrap(), &int(0));
        assert_eq!(t.get(1).unwrap(), &rat(127, 60));

        let c = Coloring::dense(int(3), vec![int(0), int(1)]).unwrap();
        let t = transform_4eps(&c).unwrap();
        assert_eq!(t.get(1).unwrap(), &rat(17, 12));

        let c = Coloring::dense(int(3), vec![int(0)]).unwrap();
        assert_eq!(transform_4eps(&c).unwrap().get(0).unwrap(), &int(0));
    }

    #[test]
    fn transform_threshold_guarantee() {
        // any point at or above 2 - eps/2 lands at or above 2
        for (num, den) in [(3, 2), (8, 5), (9, 5), (2, 1), (29, 10)] {
            let c = Coloring::dense(int(3), vec![rat(num, den)]).unwrap();
            let t = transform_4eps(&c).unwrap();
            if rat(num, den) >= rat(3, 2) {
                assert!(t.get(0).unwrap() >= &int(2), "{num}/{den}");
            }
        }
    }

    #[test]
    fn transform_rejects_bad_radius() {
        let c = Coloring::dense(int(2), vec![int(0)]).unwrap();
        assert!(transform_4eps(&c).is_err());
        let c = Coloring::dense(int(4), vec![int(0)]).unwrap();
        assert!(transform_4eps(&c).is_err());
    }

    #[test]
    fn feasible_point_finds_boundary_solutions() {
        // K_3 extension: points 0 and 1 at r = 3 leave exactly {2}
        let p = feasible_point(&int(3), &[int(0), int(1)]).unwrap();
        assert_eq!(p, int(2));
        // r = 3, points 0 and 8/5: arcs do not intersect
        assert!(feasible_point(&int(3), &[int(0), rat(8, 5)]).is_none());
    }
}
