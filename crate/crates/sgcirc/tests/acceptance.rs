//! Acceptance gate: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sgcirc::bounds;
use sgcirc::circle::{eps_for_radius, transform_4eps};
use sgcirc::colorer::{color_2degenerate, lift_fu, lift_fuv};
use sgcirc::generators;
use sgcirc::rational::{int, rat, Rational};
use sgcirc::solver::{
    analyze_tightness, candidate_values, chi_c, chi_c_with_pmax, is_hom_feasible, ChiC,
    CircularClique,
};
use sgcirc::{verify_coloring, Coloring, Sign, SignedGraph};

fn criterion(n: usize, name: &str, f: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(f) {
        Ok(()) => println!("criterion {n:2} ({name}): PASS"),
        Err(e) => {
            println!("criterion {n:2} ({name}): FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

fn chi_value(g: &SignedGraph) -> Rational {
    match chi_c(g) {
        ChiC::Finite { value, .. } => value,
        ChiC::Infinite => panic!("unexpected positive loop"),
    }
}

#[test]
fn criterion_01_omega_values() {
    criterion(1, "omega family values", || {
        let expect = [int(3), rat(10, 3), rat(7, 2), rat(18, 5)];
        for (i, want) in (1..=4).zip(expect) {
            let got = chi_value(&generators::omega(i));
            assert_eq!(got, want, "omega({i})");
            assert_eq!(got, bounds::omega_formula(2 * i as u64 + 1));
        }
    });
}

#[test]
fn criterion_02_gamma_star_values() {
    criterion(2, "gamma-star family values", || {
        let expect = [rat(8, 3), int(3), rat(16, 5)];
        for (i, want) in (2..=4).zip(expect) {
            assert_eq!(chi_value(&generators::gamma_star(i)), want, "gamma_star({i})");
        }
    });
}

#[test]
fn criterion_03_small_exact_values() {
    criterion(3, "small exact values", || {
        let neg_c4 = generators::cycle(
            4,
            &[Sign::Positive, Sign::Positive, Sign::Positive, Sign::Negative],
        )
        .unwrap();
        assert_eq!(chi_value(&neg_c4), rat(8, 3));

        let digon = generators::cycle(2, &[Sign::Positive, Sign::Negative]).unwrap();
        assert_eq!(chi_value(&digon), int(4));

        let mut single_neg = SignedGraph::new(2);
        single_neg.add_edge(0, 1, Sign::Negative).unwrap();
        assert_eq!(chi_value(&single_neg), int(2));
    });
}

#[test]
fn criterion_04_subdivision() {
    criterion(4, "full subdivision of K_3 and K_4", || {
        let s_k3 = generators::s_of(&generators::complete(3, Sign::Positive)).unwrap();
        let got = chi_value(&s_k3);
        assert_eq!(got, int(3));
        assert_eq!(got, bounds::sg_formula(&int(3)));

        // upper-bound direction only for K_4: feasibility at 16/5
        let s_k4 = generators::s_of(&generators::complete(4, Sign::Positive)).unwrap();
        assert!(is_hom_feasible(&s_k4, CircularClique::new(32, 10)).is_some());
    });
}

#[test]
fn criterion_05_path_replacement() {
    criterion(5, "length-2 path replacement cross-check", || {
        let neg_c4 = generators::cycle(
            4,
            &[Sign::Positive, Sign::Positive, Sign::Positive, Sign::Negative],
        )
        .unwrap();
        let cases = [
            generators::complete(2, Sign::Positive),
            generators::complete(3, Sign::Positive),
            neg_c4,
        ];
        let expect = [int(2), rat(12, 5), rat(16, 7)];
        for (g, want) in cases.iter().zip(expect) {
            let base = chi_value(g);
            let image = chi_value(&generators::t2_of(g).unwrap());
            assert_eq!(image, want);
            assert_eq!(image, bounds::t2_formula(&base));
        }
    });
}

#[test]
fn criterion_06_bound_consistency() {
    criterion(6, "bound consistency", || {
        for n in 2..=100 {
            assert_eq!(
                bounds::maxmin_verify(n, bounds::Family::TwoDegenerate).value,
                bounds::bound_2degenerate(n)
            );
            assert_eq!(
                bounds::maxmin_verify(n, bounds::Family::BipartitePlanar).value,
                bounds::bound_bipartite_planar(n)
            );
        }
        // odd/even closed forms: 4 - 4/(n+1) for odd n, 4 - 4/n for even n
        // (2-degenerate); 4 - 8/(n+2) for even n (bipartite planar)
        for n in 2..=1000u64 {
            let want = if n % 2 == 1 {
                int(4) - rat(4, n as i64 + 1)
            } else {
                int(4) - rat(4, n as i64)
            };
            assert_eq!(bounds::bound_2degenerate(n), want, "n = {n}");
            let want = if n % 2 == 0 {
                int(4) - rat(8, n as i64 + 2)
            } else {
                int(4) - rat(8, n as i64 + 1)
            };
            assert_eq!(bounds::bound_bipartite_planar(n), want, "n = {n}");
        }
    });
}

#[test]
fn criterion_07_constructive_pipeline() {
    criterion(7, "constructive pipeline", || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);

        // 500 random 2-degenerate graphs: certified colorings below 4
        for trial in 0..500 {
            let n = rng.gen_range(1..=40);
            let g = generators::random_2degenerate(n, &mut rng);
            let cert = color_2degenerate(&g).unwrap_or_else(|e| panic!("trial {trial}: {e}"));
            assert!(cert.coloring.r() < &int(4), "trial {trial}");
            let switched = g.switch(&cert.switch_set).unwrap();
            assert!(
                verify_coloring(&switched, &cert.coloring).unwrap().is_ok(),
                "trial {trial}"
            );
        }

        // 100 vertex-contraction lifts at radius exactly 4 - eps/4
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(3..=8);
            let g = generators::random_2degenerate(n, &mut rng);
            let u = rng.gen_range(0..n);
            let contraction = match generators::f_u(&g, u) {
                Ok(c) => c,
                Err(_) => continue,
            };
            if contraction.flags.has_positive_loop {
                continue;
            }
            let image = &contraction.graph;
            let Some(c) = coloring_in_open_range(image) else { continue };
            let eps = eps_for_radius(c.r()).unwrap();
            let want_r = int(4) - &eps / int(4);
            let cert = lift_fu(&g, u, &c).unwrap();
            assert_eq!(cert.coloring.r(), &want_r);
            let switched = g.switch(&cert.switch_set).unwrap();
            assert!(verify_coloring(&switched, &cert.coloring).unwrap().is_ok());
            done += 1;
        }

        // 100 edge-contraction lifts at radius exactly 4 - eps/4
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(2..=10);
            let g = generators::random_2degenerate(n, &mut rng);
            let positive: Vec<_> = g
                .edges()
                .iter()
                .filter(|e| e.sign == Sign::Positive && !e.is_loop())
                .cloned()
                .collect();
            if positive.is_empty() {
                continue;
            }
            let e = &positive[rng.gen_range(0..positive.len())];
            let Some(c) = coloring_valid_on_original(&g) else { continue };
            let eps = eps_for_radius(c.r()).unwrap();
            let want_r = int(4) - &eps / int(4);
            let lifted = lift_fuv(&g, e.u, e.v, &c).unwrap();
            assert_eq!(lifted.r(), &want_r);
            let image = generators::f_uv(&g, e.u, e.v).unwrap();
            assert!(verify_coloring(&image, &lifted).unwrap().is_ok());
            done += 1;
        }
    });
}

/// A valid coloring of `g` at some radius strictly between 2 and 4, via
/// feasibility on a ladder of grid targets.
fn coloring_in_open_range(g: &SignedGraph) -> Option<Coloring> {
    for (p, q) in [(10, 3), (28, 8), (18, 5), (38, 10), (78, 20)] {
        if let Some(c) = is_hom_feasible(g, CircularClique::new(p, q)) {
            return Some(c);
        }
    }
    None
}

/// A valid coloring of `g` itself (not of a switch) in the open range,
/// obtained by undoing the certificate's switch set pointwise.
fn coloring_valid_on_original(g: &SignedGraph) -> Option<Coloring> {
    let cert = color_2degenerate(g).ok()?;
    if cert.coloring.r() <= &int(2) {
        return None;
    }
    let c = cert.coloring.antipodalize(&cert.switch_set);
    verify_coloring(g, &c).ok()?.is_ok().then_some(c)
}

#[test]
fn criterion_08_worked_example() {
    criterion(8, "edge-contraction lift worked example", || {
        let mut g = SignedGraph::new(2);
        g.add_edge(0, 1, Sign::Positive).unwrap();
        let c = Coloring::dense(int(3), vec![int(0), int(1)]).unwrap();
        let lifted = lift_fuv(&g, 0, 1, &c).unwrap();
        assert_eq!(lifted.r(), &rat(15, 4));
        let expect = [int(0), rat(17, 12), rat(1, 8), rat(31, 24), int(1), rat(5, 12)];
        for (v, want) in expect.iter().enumerate() {
            assert_eq!(lifted.get(v).unwrap(), want, "vertex {v}");
        }
        // x-u' and y-v' are tight
        let image = generators::f_uv(&g, 0, 1).unwrap();
        let (up, vp, x, y) = generators::f_uv_new_ids(2);
        let slacks = sgcirc::solver::edge_slacks(&image, &lifted).unwrap();
        let mut found = [false, false];
        for (e, slack) in image.edges().iter().zip(&slacks) {
            if (e.u, e.v) == (up.min(x), up.max(x)) {
                assert_eq!(slack, &int(0), "x-u' slack");
                found[0] = true;
            }
            if (e.u, e.v) == (vp.min(y), vp.max(y)) {
                assert_eq!(slack, &int(0), "y-v' slack");
                found[1] = true;
            }
        }
        assert_eq!(found, [true, true]);
    });
}

#[test]
fn criterion_09_property_suites() {
    criterion(9, "property suites", || {
        let mut rng = ChaCha8Rng::seed_from_u64(9);

        // switching invariance of the chromatic number
        for _ in 0..100 {
            let n = rng.gen_range(1..=6);
            let g = generators::random_simple(n, 0.6, &mut rng);
            let s = sgcirc::SwitchSet::from_iter((0..n).filter(|_| rng.gen_bool(0.5)));
            let h = g.switch(&s).unwrap();
            assert_eq!(chi_c(&g).value(), chi_c(&h).value());
        }

        // equivalence decision vs brute force over all switch sets
        for trial in 0..50 {
            let n = rng.gen_range(2..=10);
            let g = generators::random_simple(n, 0.5, &mut rng);
            let h = if trial % 2 == 0 {
                let s = sgcirc::SwitchSet::from_iter((0..n).filter(|_| rng.gen_bool(0.5)));
                g.switch(&s).unwrap()
            } else {
                // same underlying graph, fresh random signs
                let mut h = SignedGraph::new(n);
                for e in g.edges() {
                    let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
                    h.add_edge(e.u, e.v, sign).unwrap();
                }
                h
            };
            let fast = g.is_equivalent(&h).unwrap().is_some();
            let brute = (0..1u32 << n).any(|mask| {
                let s = sgcirc::SwitchSet::from_iter((0..n).filter(|v| mask >> v & 1 == 1));
                g.switch(&s).unwrap() == h
            });
            assert_eq!(fast, brute, "trial {trial}");
        }

        // the two verifier routes agree (checked by an internal assertion)
        for _ in 0..10_000 {
            let mut g = SignedGraph::new(2);
            let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
            g.add_edge(0, 1, sign).unwrap();
            let r = rat(rng.gen_range(2..=40), rng.gen_range(1..=10));
            if r < int(1) {
                continue;
            }
            let point = |rng: &mut ChaCha8Rng| {
                let denom = rng.gen_range(1..=12);
                let max_num = (&r * int(denom)).to_integer();
                let max_num: i64 = (&max_num).try_into().unwrap();
                rat(rng.gen_range(0..max_num.max(1)), denom)
            };
            let (a, b) = (point(&mut rng), point(&mut rng));
            if a >= r || b >= r {
                continue;
            }
            let c = Coloring::dense(r.clone(), vec![a, b]).unwrap();
            let _ = verify_coloring(&g, &c).unwrap();
        }

        // the scale-and-insert transform preserves validity
        let mut done = 0;
        while done < 1000 {
            let n = rng.gen_range(1..=6);
            let g = generators::random_2degenerate(n, &mut rng);
            let Ok(cert) = color_2degenerate(&g) else { continue };
            if eps_for_radius(cert.coloring.r()).is_err() {
                continue;
            }
            let switched = g.switch(&cert.switch_set).unwrap();
            let t = transform_4eps(&cert.coloring).unwrap();
            assert!(verify_coloring(&switched, &t).unwrap().is_ok());
            done += 1;
        }

        // grid refinement never changes a verdict, and a finer candidate
        // grid never lowers the chromatic number
        for _ in 0..200 {
            let n = rng.gen_range(1..=4);
            let g = generators::random_simple(n, 0.7, &mut rng);
            for cand in candidate_values(&g) {
                let base = is_hom_feasible(&g, cand.clique()).is_some();
                for scale in [2, 3] {
                    let scaled =
                        CircularClique::new(scale * cand.p, scale * cand.q);
                    assert_eq!(
                        base,
                        is_hom_feasible(&g, scaled).is_some(),
                        "{}x refinement at {}/{}",
                        scale,
                        cand.p,
                        cand.q
                    );
                }
            }
            let coarse = chi_c(&g);
            let fine = chi_c_with_pmax(&g, 3 * n.max(2), 1);
            assert_eq!(coarse.value(), fine.value());
        }
    });
}

#[test]
fn criterion_10_tight_cycles() {
    criterion(10, "tight Hamiltonian cycles", || {
        for i in 1..=3 {
            let g = generators::omega(i);
            let (value, witness) = match chi_c(&g) {
                ChiC::Finite { value, witness, .. } => (value, witness),
                ChiC::Infinite => panic!(),
            };
            let report = analyze_tightness(&g, &witness).unwrap();
            let cycle = report.cycle.unwrap_or_else(|| panic!("omega({i}): no tight cycle"));
            assert_eq!(cycle.recovered_r, value, "omega({i})");
            assert!(cycle.is_hamiltonian(g.n()), "omega({i}): not Hamiltonian");
        }
    });
}
