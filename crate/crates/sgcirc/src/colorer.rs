//! Constructive coloring procedures: extending a coloring over a vertex of
//! degree at most 2 while keeping the radius below 4, the induction over a
//! 2-degeneracy order, and the coloring lifts through the vertex
//! contraction and the positive-edge gadget expansion.
//!
//! Every procedure returns an explicit switch set so the output is a
//! checkable certificate, and re-verifies its own output before returning.
//! A sign is normalized by switching at the neighbor and replacing that
//! neighbor's color by its antipodal; switching at the new vertex itself
//! would flip both of its edges at once and cannot fix mixed signs.

use num_traits::Zero;

use crate::circle::{
    antipodal, eps_for_radius, feasible_point, transform_4eps, verify_coloring,
    verify_coloring_minus, Coloring, TransformParams, Verdict,
};
use crate::error::{Error, Result};
use crate::generators::{f_u, f_uv, f_uv_new_ids};
use crate::graph::{Sign, SignedGraph, SwitchSet};
use crate::rational::{int, Rational};

/// Output of the constructive procedures: a switch set `s` and a coloring
/// valid for `switch(g, s)`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub switch_set: SwitchSet,
    pub coloring: Coloring,
}

fn require_verified(g: &SignedGraph, c: &Coloring, what: &str) -> Result<()> {
    match verify_coloring(g, c)? {
        Verdict::Satisfied => Ok(()),
        Verdict::Violation { edge, reason, .. } => Err(Error::LiftFailed(format!(
            "{what}: edge {}{}{} {reason}",
            edge.u,
            edge.sign.symbol(),
            edge.v
        ))),
    }
}

/// Extends a coloring of `g - w` (radius in `(2, 4)`) over the vertex `w`
/// of degree at most 2. Returns a switch set `s` contained in the
/// neighborhood of `w` and a coloring of `switch(g, s)`; its radius is
/// either unchanged or exactly `4 - eps/4`.
///
/// Degree 2 with neighbors `u`, `v` follows the scale-and-insert proof:
/// normalize both `w`-edges to positive, rotate `u` to 0, reflect `v` into
/// the far half, place `w` at 1 directly when `v` lands at or past 2 and
/// through the transform otherwise.
pub fn extend_degree2(g: &SignedGraph, w: usize, c: &Coloring) -> Result<Certificate> {
    if !g.is_simple() {
        return Err(Error::NonSimpleInput("degree-2 extension".into()));
    }
    let eps = eps_for_radius(c.r())?;
    match verify_coloring_minus(g, c, w)? {
        Verdict::Satisfied => {}
        Verdict::Violation { edge, .. } => {
            return Err(Error::InvalidInputColoring(format!(
                "edge {}{}{} violated",
                edge.u,
                edge.sign.symbol(),
                edge.v
            )))
        }
    }
    let nbrs: Vec<usize> = g.neighbors(w).into_iter().collect();
    if nbrs.len() > 2 {
        return Err(Error::InvalidInputColoring(format!(
            "vertex {w} has degree {} > 2",
            nbrs.len()
        )));
    }

    let mut c = c.clone();
    let mut switch_set = SwitchSet::new();
    // Make every w-edge positive: switch at the negative neighbor and move
    // its color to the antipodal.
    for &x in &nbrs {
        if g.signs_between(x, w) == vec![Sign::Negative] {
            switch_set.insert(x);
            let moved = antipodal(c.r(), c.get(x).expect("neighbor colored"))?;
            c.insert(x, moved)?;
        }
    }

    match nbrs.as_slice() {
        [] => {
            c.insert(w, Rational::zero())?;
        }
        [u] => {
            let point = crate::rational::modulo(&(c.get(*u).unwrap() + int(1)), c.r());
            c.insert(w, point)?;
        }
        [u, v] => {
            let (u, v) = (*u, *v);
            c = c.rotate(&(-c.get(u).unwrap()));
            debug_assert!(c.get(u).unwrap().is_zero());
            let half = c.r() / int(2);
            let at_v = c.get(v).unwrap().clone();
            if at_v > Rational::zero() && at_v < half {
                c = c.reflect();
            }
            if c.get(v).unwrap() >= &int(2) {
                c.insert(w, int(1))?;
            } else {
                c = transform_4eps(&c)?;
                c.insert(w, int(1))?;
            }
        }
        _ => unreachable!(),
    }

    let switched = g.switch(&switch_set)?;
    require_verified(&switched, &c, "degree-2 extension output")?;
    debug_assert!(c.r() == &(int(4) - &eps) || c.r() == &(int(4) - eps / int(4)));
    Ok(Certificate { switch_set, coloring: c })
}

/// Colors a simple 2-degenerate signed graph at some radius strictly below
/// 4: seed the first vertex of a 2-degeneracy order at 0 on the circle of
/// circumference 3, then insert the remaining vertices in order, trying a
/// direct placement at the current radius before falling back to the
/// degree-2 extension. Switch sets compose by symmetric difference.
pub fn color_2degenerate(g: &SignedGraph) -> Result<Certificate> {
    if !g.is_simple() {
        return Err(Error::NonSimpleInput("2-degenerate coloring".into()));
    }
    let order = g.degeneracy_order(2)?;
    let mut switch_set = SwitchSet::new();
    let mut coloring = Coloring::new(int(3), Default::default())?;
    let mut placed: Vec<usize> = Vec::new();

    for &w in &order {
        let switched = g.switch(&switch_set)?;
        // Direct placement at the current radius: one constraint point per
        // edge to an already placed neighbor.
        let mut constraints = Vec::new();
        for e in switched.incident_edges(w) {
            let x = e.other(w);
            if let Some(p) = coloring.get(x) {
                let point = match e.sign {
                    Sign::Positive => p.clone(),
                    Sign::Negative => antipodal(coloring.r(), p)?,
                };
                constraints.push(point);
            }
        }
        if let Some(point) = feasible_point(coloring.r(), &constraints) {
            coloring.insert(w, point)?;
            placed.push(w);
            continue;
        }

        // Fall back to the radius-shrinking extension on the induced
        // prefix, in local ids.
        placed.push(w);
        let local = switched.induced(&placed)?;
        let w_local = placed.len() - 1;
        let mut local_points = std::collections::BTreeMap::new();
        for (i, &orig) in placed[..w_local].iter().enumerate() {
            local_points.insert(i, coloring.get(orig).expect("placed earlier").clone());
        }
        let local_coloring = Coloring::new(coloring.r().clone(), local_points)?;
        let cert = extend_degree2(&local, w_local, &local_coloring)?;
        let step_switch =
            SwitchSet::from_iter(cert.switch_set.iter().map(|i| placed[i]));
        switch_set = switch_set.compose(&step_switch);
        let mut new_points = std::collections::BTreeMap::new();
        for (i, &orig) in placed.iter().enumerate() {
            new_points.insert(orig, cert.coloring.get(i).expect("full domain").clone());
        }
        coloring = Coloring::new(cert.coloring.r().clone(), new_points)?;
    }

    let switched = g.switch(&switch_set)?;
    require_verified(&switched, &coloring, "2-degenerate coloring output")?;
    assert!(coloring.r() < &int(4));
    Ok(Certificate { switch_set, coloring })
}

/// Lifts a coloring through the vertex contraction at `u`: given a valid
/// coloring of the contraction of `g` at `u` (radius `4 - eps` in `(2,4)`),
/// produces a switch set `s` (the negative neighbors of `u`) and a coloring
/// of `switch(g, s)` at radius exactly `4 - eps/4`.
///
/// The contracted vertex is rotated to 0; positive neighbors of `u` sit at
/// 0, negative neighbors at the antipodal; the transform pins those classes
/// at 0 and exactly 2, and `u` goes to 1, at distance exactly 1 from both.
pub fn lift_fu(g: &SignedGraph, u: usize, c: &Coloring) -> Result<Certificate> {
    let contraction = f_u(g, u)?;
    if contraction.flags.has_positive_loop {
        return Err(Error::PositiveLoopInContraction { u });
    }
    let eps = eps_for_radius(c.r())?;
    match verify_coloring(&contraction.graph, c)? {
        Verdict::Satisfied => {}
        Verdict::Violation { edge, .. } => {
            return Err(Error::InvalidInputColoring(format!(
                "contraction edge {}{}{} violated",
                edge.u,
                edge.sign.symbol(),
                edge.v
            )))
        }
    }
    let c = c.rotate(&(-c.get(contraction.z).expect("z colored")));

    let negative_nbrs: Vec<usize> = g
        .neighbors(u)
        .into_iter()
        .filter(|&x| g.signs_between(x, u).contains(&Sign::Negative))
        .collect();
    let switch_set = SwitchSet::from_iter(negative_nbrs.iter().copied());

    let half = c.r() / int(2);
    let mut points = std::collections::BTreeMap::new();
    for v in g.vertices().filter(|&v| v != u) {
        let point = if g.neighbors(u).contains(&v) {
            if switch_set.contains(v) {
                half.clone()
            } else {
                Rational::zero()
            }
        } else {
            c.get(contraction.vertex_map[v])
                .expect("image colored")
                .clone()
        };
        points.insert(v, point);
    }
    let partial = Coloring::new(c.r().clone(), points)?;
    let mut lifted = transform_4eps(&partial)?;
    lifted.insert(u, int(1))?;

    let switched = g.switch(&switch_set)?;
    require_verified(&switched, &lifted, "contraction lift output")?;
    debug_assert_eq!(lifted.r(), &(int(4) - eps / int(4)));
    Ok(Certificate { switch_set, coloring: lifted })
}

/// Lifts a coloring of `g` (radius `4 - eps` in `(2,4)`) through the
/// positive-edge gadget expansion at `uv`, producing a coloring of the
/// expanded graph at radius exactly `4 - eps/4`.
pub fn lift_fuv(g: &SignedGraph, u: usize, v: usize, c: &Coloring) -> Result<Coloring> {
    let expanded = f_uv(g, u, v)?; // checks simplicity and the positive edge
    let eps = eps_for_radius(c.r())?;
    match verify_coloring(g, c)? {
        Verdict::Satisfied => {}
        Verdict::Violation { edge, .. } => {
            return Err(Error::InvalidInputColoring(format!(
                "edge {}{}{} violated",
                edge.u,
                edge.sign.symbol(),
                edge.v
            )))
        }
    }

    // Normalize: u at 0, v in [1, r/2].
    let mut c = c.rotate(&(-c.get(u).expect("u colored")));
    let half = c.r() / int(2);
    if c.get(v).expect("v colored") > &half {
        c = c.reflect();
    }
    debug_assert!(c.get(v).unwrap() >= &int(1) && c.get(v).unwrap() <= &half);

    let params = TransformParams::new(eps.clone())?;
    let scaled_v = &params.gamma * c.get(v).unwrap();
    let mut lifted = transform_4eps(&c)?;

    let (u_copy, v_copy, x, y) = f_uv_new_ids(g.n());
    let eighth = &eps / int(8);
    let quarter = &eps / int(4);
    lifted.insert(u_copy, eighth.clone())?;
    lifted.insert(v_copy, &scaled_v + &eighth)?;
    lifted.insert(x, int(1))?;
    lifted.insert(y, &scaled_v + &quarter - int(1))?;

    require_verified(&expanded, &lifted, "edge-expansion lift output")?;
    debug_assert_eq!(lifted.r(), &(int(4) - &eps / int(4)));
    Ok(lifted)
}
