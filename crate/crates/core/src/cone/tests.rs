//! Golden tables and structure tests for the cone machinery.

use super::*;
use crate::algebra::{AlgebraSpec, BimoduleKind, Gen};
use crate::hochschild::{Chain, GenSum, Window, Word};
use crate::linalg::{Ring, Scalar};
use crate::ops::loop_product;
use crate::precy::builtin_structure;

fn s3() -> AlgebraSpec {
    AlgebraSpec::poly("S3", 2, Ring::Int)
}

fn s4() -> AlgebraSpec {
    AlgebraSpec::poly("S4", 3, Ring::Int)
}

fn circle() -> AlgebraSpec {
    AlgebraSpec::laurent("circle", Ring::Rat)
}

#[test]
fn extended_vertex_tables_odd_sphere() {
    let spec = s3();
    let (_, _, p) = builtin_structure(&spec).unwrap();
    // μ_M(s_3, t^1) = s_2 (the indicator part vanishes)
    assert_eq!(mu2_m(&spec, &p, Gen::S(3), Gen::T(1)), GenSum::of(&spec, Gen::S(2), 1));
    // μ_M(s_1, t^3) = -t^1 (s_{-2} = 0 by the dual convention)
    assert_eq!(mu2_m(&spec, &p, Gen::S(1), Gen::T(3)), GenSum::of(&spec, Gen::T(1), -1));
    // μ_M(s_k, s_l) = s_{k+l+1}
    for k in 0..3 {
        for l in 0..3 {
            assert_eq!(
                mu2_m(&spec, &p, Gen::S(k), Gen::S(l)),
                GenSum::of(&spec, Gen::S(k + l + 1), 1)
            );
        }
    }
    // mixed: μ_M(s_k, t^l) = s_{k-l} - χ_{k<=l-1} t^{l-1-k}
    for k in 0..4 {
        for l in 1..4 {
            let mut expect = GenSum::zero();
            if k - l >= 0 {
                expect.add(Gen::S(k - l), &spec.scalar(1));
            }
            if k <= l - 1 {
                expect.add(Gen::T(l - 1 - k), &spec.scalar(-1));
            }
            assert_eq!(mu2_m(&spec, &p, Gen::S(k), Gen::T(l)), expect, "μ_M(s_{k}, t^{l})");
            let mut expect = GenSum::zero();
            if k - l >= 0 {
                expect.add(Gen::S(k - l), &spec.scalar(1));
            }
            if k <= l - 1 {
                expect.add(Gen::T(l - 1 - k), &spec.scalar(1));
            }
            assert_eq!(mu2_m(&spec, &p, Gen::T(l), Gen::S(k)), expect, "μ_M(t^{l}, s_{k})");
        }
    }
}

#[test]
fn connecting_map_values() {
    let spec = s3();
    let (_, _, p) = builtin_structure(&spec).unwrap();
    // f(s_1 ⊗ t^3) = -t^1, f(t^3 ⊗ s_1) = t^1, f(s_3 ⊗ t^2) = 0
    assert_eq!(f_alpha_right(&spec, &p.alpha, 1, 3), GenSum::of(&spec, Gen::T(1), -1));
    assert_eq!(f_alpha_left(&spec, &p.alpha, 3, 1), GenSum::of(&spec, Gen::T(1), 1));
    assert!(f_alpha_right(&spec, &p.alpha, 3, 2).is_zero());
    // on single-letter chains the two terms cancel
    for k in 0..3 {
        for e in 1..4 {
            let x = Chain::of(&spec, Gen::S(k), &[e]);
            assert!(F_alpha(&spec, &p.alpha, &x).is_zero(), "F(s_{k}[t^{e}]) over S3");
        }
    }
    // two letters: F(s_k[t^a|t^b]) = f(s_k⊗t^a)[t^b] ± f(t^b⊗s_k)[t^a]
    let x = Chain::of(&spec, Gen::S(0), &[2, 3]);
    let f = F_alpha(&spec, &p.alpha, &x);
    let mut expect = Chain::zero();
    expect.add_term((Gen::T(1), Word::of(&[3])), &spec.scalar(-1));
    expect.add_term((Gen::T(2), Word::of(&[2])), &spec.scalar(-1));
    assert_eq!(f, expect, "two-letter connecting map over S3");
}

#[test]
fn cone_boundary_squares_to_zero() {
    for spec in [s3(), s4(), circle()] {
        let (_, _, p) = builtin_structure(&spec).unwrap();
        let win = Window::new(2, -3, 3, 3);
        for g in win.gens(&spec, BimoduleKind::Cone) {
            for w in win.words(&spec) {
                let x = Chain::single((g, w.clone()), spec.scalar(1));
                let dd = cone_differential(&spec, &p.alpha, &cone_differential(&spec, &p.alpha, &x));
                assert!(dd.is_zero(), "cone d² at {g:?}{w} over {}", spec.name);
            }
        }
    }
}

#[test]
fn cone_product_extends_the_loop_product() {
    for spec in [s3(), s4(), circle()] {
        let (_, _, p) = builtin_structure(&spec).unwrap();
        let win = Window::new(1, -2, 2, 2);
        for g1 in win.gens(&spec, BimoduleKind::Diagonal) {
            for w1 in win.words(&spec) {
                for g2 in win.gens(&spec, BimoduleKind::Diagonal) {
                    for w2 in win.words(&spec) {
                        let x = Chain::single((g1, w1.clone()), spec.scalar(1));
                        let y = Chain::single((g2, w2.clone()), spec.scalar(1));
                        assert_eq!(
                            pi_m(&spec, &p, &x, &y),
                            loop_product(&spec, &p.alpha, &x, &y),
                            "π_M restriction over {}",
                            spec.name
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn cone_product_golden_tables_odd_sphere() {
    let spec = s3();
    let (_, _, p) = builtin_structure(&spec).unwrap();
    for k in 0..=3i64 {
        for l in 0..=3i64 {
            let skt = Chain::of(&spec, Gen::S(k), &[1]);
            let sl = Chain::of_gen(&spec, Gen::S(l));
            let slt = Chain::of(&spec, Gen::S(l), &[1]);
            let tl = Chain::of_gen(&spec, Gen::T(l));
            let tlt = Chain::of(&spec, Gen::T(l), &[1]);
            // π(s_k[t], s_l) = -s_{k+l+1}
            assert_eq!(
                project_dual(&pi_m(&spec, &p, &skt, &sl)),
                Chain::single((Gen::S(k + l + 1), Word::empty()), spec.scalar(-1)),
                "π(s_{k}[t], s_{l})"
            );
            // π(s_k[t], s_l[t]) = s_{k+l+1}[t]
            assert_eq!(
                project_dual(&pi_m(&spec, &p, &skt, &slt)),
                Chain::single((Gen::S(k + l + 1), Word::of(&[1])), spec.scalar(1)),
                "π(s_{k}[t], s_{l}[t])"
            );
            // π(s_k[t], t^l) = -s_{k-l} + χ t^{l-1-k}
            let mut expect = Chain::zero();
            if k - l >= 0 {
                expect.add_term((Gen::S(k - l), Word::empty()), &spec.scalar(-1));
            }
            if l >= 1 && k <= l - 1 {
                expect.add_term((Gen::T(l - 1 - k), Word::empty()), &spec.scalar(1));
            }
            assert_eq!(pi_m(&spec, &p, &skt, &tl), expect, "π(s_{k}[t], t^{l})");
            // π(s_k, t^l[t]) = s_{k-l} - χ t^{l-1-k}
            let sk = Chain::of_gen(&spec, Gen::S(k));
            let mut expect = Chain::zero();
            if k - l >= 0 {
                expect.add_term((Gen::S(k - l), Word::empty()), &spec.scalar(1));
            }
            if k <= l - 1 {
                expect.add_term((Gen::T(l - 1 - k), Word::empty()), &spec.scalar(-1));
            }
            assert_eq!(pi_m(&spec, &p, &sk, &tlt), expect, "π(s_{k}, t^{l}[t])");
        }
    }
}

#[test]
fn cone_product_golden_tables_even_sphere() {
    let spec = s4();
    let (_, _, p) = builtin_structure(&spec).unwrap();
    for k in 0..=3i64 {
        for l in 0..=3i64 {
            let skt = Chain::of(&spec, Gen::S(k), &[1]);
            let sl = Chain::of_gen(&spec, Gen::S(l));
            let slt = Chain::of(&spec, Gen::S(l), &[1]);
            let sign = spec.scalar(if (k * (l + 1)) % 2 == 1 { -1 } else { 1 });
            assert_eq!(
                project_dual(&pi_m(&spec, &p, &skt, &sl)),
                Chain::single((Gen::S(k + l + 1), Word::empty()), sign.clone()),
                "π(s_{k}[t], s_{l}) over S4"
            );
            assert_eq!(
                project_dual(&pi_m(&spec, &p, &skt, &slt)),
                Chain::single((Gen::S(k + l + 1), Word::of(&[1])), sign),
                "π(s_{k}[t], s_{l}[t]) over S4"
            );
        }
    }
}

#[test]
fn cone_product_is_a_chain_map_and_needs_the_correction() {
    // For the circle the extended product intertwines the cone boundary
    // only with the three-output correction present.
    let spec = circle();
    let (_, _, p) = builtin_structure(&spec).unwrap();
    let win = Window::new(1, -2, 2, 2);
    let mut without = p.clone();
    without.tau = None;
    let mut tau_needed = false;
    for g in win.gens(&spec, BimoduleKind::Cone) {
        for w in win.words(&spec) {
            for g2 in win.gens(&spec, BimoduleKind::Cone) {
                let x = Chain::single((g, w.clone()), spec.scalar(1));
                let y = Chain::of_gen(&spec, g2);
                let degx = Chain::term_degree(&spec, &(g, w.clone()));
                let sx = spec.scalar(if (degx + 1).rem_euclid(2) == 0 { 1 } else { -1 });
                let check = |pc: &crate::precy::PreCy| {
                    let lhs = cone_differential(&spec, &pc.alpha, &pi_m(&spec, pc, &x, &y));
                    let rhs = pi_m(&spec, pc, &cone_differential(&spec, &pc.alpha, &x), &y)
                        .add(&pi_m(&spec, pc, &x, &cone_differential(&spec, &pc.alpha, &y)).scale(&sx));
                    lhs == rhs
                };
                assert!(check(&p), "π_M chain map with correction at {g:?}{w}, {g2:?}");
                if !check(&without) {
                    tau_needed = true;
                }
            }
        }
    }
    assert!(tau_needed, "dropping the correction must break the circle");

    // Spheres carry no correction and still intertwine.
    for spec in [s3(), s4()] {
        let (_, _, p) = builtin_structure(&spec).unwrap();
        for g in win.gens(&spec, BimoduleKind::Cone) {
            let x = Chain::of(&spec, g, &[1]);
            let y = Chain::of_gen(&spec, Gen::S(1));
            let degx = Chain::term_degree(&spec, &(g, Word::of(&[1])));
            let sx = spec.scalar(if (degx + 1).rem_euclid(2) == 0 { 1 } else { -1 });
            let lhs = cone_differential(&spec, &p.alpha, &pi_m(&spec, &p, &x, &y));
            let rhs = pi_m(&spec, &p, &cone_differential(&spec, &p.alpha, &x), &y)
                .add(&pi_m(&spec, &p, &x, &cone_differential(&spec, &p.alpha, &y)).scale(&sx));
            assert_eq!(lhs, rhs, "π_M chain map over {}", spec.name);
        }
    }
}

#[test]
fn circle_fraction_tables() {
    // p π(s_k[t], s_l) = table × s_{k+l-1} and
    // p π(s_k[t], s_l[t]) = -table × s_{k+l-1}[t], entrywise for |k|,|l| <= 3.
    let spec = circle();
    let (_, _, p) = builtin_structure(&spec).unwrap();
    let entry = |k: i64, l: i64| -> Scalar {
        let col = if k <= -1 { 0 } else if k == 0 { 1 } else { 2 };
        let row = if l >= 1 { 0 } else if l == 0 { 1 } else { 2 };
        let table = [[0i64, -1, -2], [1, 0, -1], [2, 1, 0]];
        Scalar::from_ratio(spec.ring, table[row][col], 2)
    };
    for k in -3..=3i64 {
        for l in -3..=3i64 {
            let skt = Chain::of(&spec, Gen::S(k), &[1]);
            let sl = Chain::of_gen(&spec, Gen::S(l));
            let slt = Chain::of(&spec, Gen::S(l), &[1]);
            let got = project_dual(&pi_m(&spec, &p, &skt, &sl));
            let expect = Chain::single((Gen::S(k + l - 1), Word::empty()), entry(k, l));
            let expect = if entry(k, l).is_zero() { Chain::zero() } else { expect };
            assert_eq!(got, expect, "fraction table at ({k},{l})");
            let got = project_dual(&pi_m(&spec, &p, &skt, &slt));
            let e2 = -&entry(k, l);
            let expect = if e2.is_zero() {
                Chain::zero()
            } else {
                Chain::single((Gen::S(k + l - 1), Word::of(&[1])), e2)
            };
            assert_eq!(got, expect, "second fraction table at ({k},{l})");
        }
    }
}

#[test]
fn circle_explicit_homotopy_gives_the_uniform_product() {
    // π_h(s_k[t], s_l) = s_{k+l-1} for all |k|,|l| <= 3.
    let spec = circle();
    let (_, _, p) = builtin_structure(&spec).unwrap();
    let h = CircleH::rule();
    for k in -3..=3i64 {
        for l in -3..=3i64 {
            let skt = Chain::of(&spec, Gen::S(k), &[1]);
            let sl = Chain::of_gen(&spec, Gen::S(l));
            let got = dual_product(&spec, &p, &h, &h, &skt, &sl);
            assert_eq!(
                got,
                Chain::single((Gen::S(k + l - 1), Word::empty()), spec.scalar(1)),
                "π_h(s_{k}[t], s_{l})"
            );
        }
    }
}

#[test]
fn kernel_subcomplex_detects_the_problematic_class() {
    // Over a field of characteristic ≠ 2 the class s_0[t] pairs to 2 and
    // is excluded; over characteristic 2 it survives.
    let s4q = AlgebraSpec::poly("S4", 3, Ring::Rat);
    let (_, _, p) = builtin_structure(&s4q).unwrap();
    let triv = crate::precy::even_sphere_triv(&s4q);
    let win = Window::new(2, -4, 4, 4);
    // the block of s_0[t]: degree -0 + r(t) = 4, weight 1
    let deg = Chain::term_degree(&s4q, &(Gen::S(0), Word::of(&[1])));
    let wt = Chain::term_weight(&s4q, &(Gen::S(0), Word::of(&[1])));
    let basis = k_subcomplex_basis(&s4q, &win, &p, &triv, deg, wt);
    assert!(
        basis
            .iter()
            .all(|x| !x.terms.contains_key(&(Gen::S(0), Word::of(&[1])))),
        "s_0[t] must be excluded from the kernel over Q"
    );

    let s4f2 = AlgebraSpec::poly("S4", 3, Ring::Fp(2));
    let (_, _, p2) = builtin_structure(&s4f2).unwrap();
    let triv2 = crate::precy::even_sphere_triv(&s4f2);
    let basis2 = k_subcomplex_basis(&s4f2, &win, &p2, &triv2, deg, wt);
    assert!(
        basis2
            .iter()
            .any(|x| x.terms.contains_key(&(Gen::S(0), Word::of(&[1])))),
        "s_0[t] must lie in the kernel over F2"
    );
}
