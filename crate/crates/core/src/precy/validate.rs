//! Validation of the structure data: closedness of the coevaluation and
//! pairing vertex, the duality-element equations, and nondegeneracy.

use super::{CoevTerm, Coevaluation, PairingVertex, PreCy};
use crate::algebra::{act_left, act_right, d_internal, AlgebraSpec, BimoduleKind, Gen};
use crate::hochschild::{
    chain_differential, cochain_differential, cochain_exact, CochainRule, Window, Word,
};
use crate::linalg::Scalar;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn pass(name: &str) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            detail: String::new(),
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            detail,
        }
    }
}

fn sgn(spec: &AlgebraSpec, parity: i64) -> Scalar {
    spec.scalar(if parity.rem_euclid(2) == 1 { -1 } else { 1 })
}

/// The boundary of a coevaluation-type element in the two-sided complex
/// `⊕ A ⊗ Ā^i ⊗ A^! ⊗ Ā^j`. Signs follow the operator-insertion discipline
/// with the wrap transport for the trailing word; they are pinned by the
/// closedness of the shipped elements together with the sign-mutation
/// tests.
pub fn coev_differential(spec: &AlgebraSpec, terms: &[CoevTerm]) -> Vec<CoevTerm> {
    let mut out: Vec<CoevTerm> = Vec::new();
    let mut push = |c: Scalar, a: i64, l: Word, x: Gen, r: Word| {
        if c.is_zero() {
            return;
        }
        // merge with an existing identical shape
        for t in out.iter_mut() {
            if t.a_exp == a && t.left == l && t.x == x && t.right == r {
                t.coeff = &t.coeff + &c;
                return;
            }
        }
        out.push(CoevTerm {
            coeff: c,
            a_exp: a,
            left: l,
            x,
            right: r,
        });
    };
    for t in terms {
        let a_deg = spec.mono_degree(t.a_exp);
        let lw = &t.left;
        let rw = &t.right;
        // internal differential of the dual-side generator
        for (c, x2) in d_internal(spec, t.x) {
            let s = sgn(spec, a_deg + lw.rdeg(spec));
            push(&(&t.coeff * &c) * &s, t.a_exp, lw.clone(), x2, rw.clone());
        }
        // first left letter into a
        if !lw.is_empty() {
            let (ms, e) = spec.mul(t.a_exp, lw.0[0]);
            push(&(&t.coeff * &ms) * &spec.scalar(1), e, lw.slice(1, lw.len()), t.x, rw.clone());
        }
        // interior merges in the left word
        for i in 0..lw.len().saturating_sub(1) {
            let (ms, e) = spec.mul(lw.0[i], lw.0[i + 1]);
            if spec.letter_in_family(e) {
                let mut letters = lw.0.clone();
                letters[i] = e;
                letters.remove(i + 1);
                let s = sgn(spec, a_deg + lw.slice(0, i).rdeg(spec) + 1);
                push(&(&t.coeff * &ms) * &s, t.a_exp, Word(letters), t.x, rw.clone());
            }
        }
        // last left letter acts on the dual-side generator from the left
        if !lw.is_empty() {
            let e = lw.0[lw.len() - 1];
            let s = sgn(spec, a_deg + lw.slice(0, lw.len() - 1).rdeg(spec));
            for (c, x2) in act_left(spec, e, t.x) {
                push(
                    &(&t.coeff * &c) * &s,
                    t.a_exp,
                    lw.slice(0, lw.len() - 1),
                    x2,
                    rw.clone(),
                );
            }
        }
        // dual-side generator acts on the first right letter
        if !rw.is_empty() {
            let e = rw.0[0];
            let s = sgn(spec, a_deg + lw.rdeg(spec));
            for (c, x2) in act_right(spec, t.x, e) {
                push(&(&t.coeff * &c) * &s, t.a_exp, lw.clone(), x2, rw.slice(1, rw.len()));
            }
        }
        // interior merges in the right word
        for i in 0..rw.len().saturating_sub(1) {
            let (ms, e) = spec.mul(rw.0[i], rw.0[i + 1]);
            if spec.letter_in_family(e) {
                let mut letters = rw.0.clone();
                letters[i] = e;
                letters.remove(i + 1);
                let s = sgn(spec, a_deg + lw.rdeg(spec) + rw.slice(0, i).rdeg(spec) + 1);
                push(&(&t.coeff * &ms) * &s, t.a_exp, lw.clone(), t.x, Word(letters));
            }
        }
        // last right letter wraps onto a from the left
        if !rw.is_empty() {
            let e = rw.0[rw.len() - 1];
            let body = 1 + a_deg + lw.rdeg(spec) + rw.slice(0, rw.len() - 1).rdeg(spec);
            let s = sgn(spec, spec.letter_rdeg(e) * body);
            let (ms, e2) = spec.mul(e, t.a_exp);
            push(
                &(&t.coeff * &ms) * &s,
                e2,
                lw.clone(),
                t.x,
                rw.slice(0, rw.len() - 1),
            );
        }
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

/// The pairing-vertex closedness defect on one input shape; zero for a
/// closed vertex. The three families of terms (corner merge into the
/// module input, first corner letter escaping onto the first output, and
/// the internal differential of the dual-side input) telescope for the
/// shipped vertices.
pub fn eta_closedness_defect(
    spec: &AlgebraSpec,
    eta: &PairingVertex,
    corner: &Word,
    n: i64,
    x: Gen,
) -> Vec<(Scalar, i64, i64)> {
    let mut acc: std::collections::BTreeMap<(i64, i64), Scalar> = std::collections::BTreeMap::new();
    let mut add = |c: Scalar, u: i64, v: i64| {
        if c.is_zero() {
            return;
        }
        let cur = acc.remove(&(u, v)).unwrap_or_else(|| spec.scalar(0));
        let s = &cur + &c;
        if !s.is_zero() {
            acc.insert((u, v), s);
        }
    };
    // corner's last letter merges into the module input
    if !corner.is_empty() {
        let e = corner.0[corner.len() - 1];
        let (ms, n2) = spec.mul(e, n);
        for (c, u, v) in eta.eval(&corner.slice(0, corner.len() - 1), n2, x) {
            add(&(&c * &ms) * &spec.scalar(1), u, v);
        }
    }
    // first corner letter escapes onto the first output
    if !corner.is_empty() {
        let e = corner.0[0];
        for (c, u, v) in eta.eval(&corner.slice(1, corner.len()), n, x) {
            let (ms, u2) = spec.mul(e, u);
            add(&(&c * &ms) * &spec.scalar(-1), u2, v);
        }
    }
    // interior merges in the corner word
    for i in 0..corner.len().saturating_sub(1) {
        let (ms, e) = spec.mul(corner.0[i], corner.0[i + 1]);
        if spec.letter_in_family(e) {
            let mut letters = corner.0.clone();
            letters[i] = e;
            letters.remove(i + 1);
            let s = sgn(spec, corner.slice(0, i).rdeg(spec) + 1);
            for (c, u, v) in eta.eval(&Word(letters), n, x) {
                add(&(&c * &ms) * &s, u, v);
            }
        }
    }
    // internal differential of the dual-side input
    for (cx, x2) in d_internal(spec, x) {
        for (c, u, v) in eta.eval(corner, n, x2) {
            add(&(&c * &cx) * &spec.scalar(1), u, v);
        }
    }
    acc.into_iter().map(|((u, v), c)| (c, u, v)).collect()
}

/// Validates the coevaluation/pairing pair: closedness of both, and the
/// composed endomorphism being homologous to the identity.
pub fn validate_coevaluation(
    spec: &AlgebraSpec,
    co: &Coevaluation,
    eta: &PairingVertex,
    win: &Window,
) -> Vec<CheckReport> {
    let mut reports = Vec::new();

    let d = coev_differential(spec, &co.terms);
    if d.is_empty() {
        reports.push(CheckReport::pass("coevaluation closed"));
    } else {
        reports.push(CheckReport::fail(
            "coevaluation closed",
            format!("boundary has {} terms, first {:?}", d.len(), d[0]),
        ));
    }

    let mut eta_ok = true;
    let mut eta_detail = String::new();
    'outer: for corner in win.words(spec) {
        if corner.len() > 2 {
            continue;
        }
        for n in win.gens(spec, BimoduleKind::Diagonal) {
            let n = match n {
                Gen::T(k) => k,
                _ => unreachable!(),
            };
            for x in win.gens(spec, BimoduleKind::InverseDualizing) {
                let defect = eta_closedness_defect(spec, eta, &corner, n, x);
                if !defect.is_empty() {
                    eta_ok = false;
                    eta_detail = format!("defect at ({corner}, t^{n}, {x:?}): {defect:?}");
                    break 'outer;
                }
            }
        }
    }
    reports.push(if eta_ok {
        CheckReport::pass("pairing vertex closed")
    } else {
        CheckReport::fail("pairing vertex closed", eta_detail)
    });

    // Composed endomorphism: plugging the coevaluation into the pairing
    // vertex must give a cochain homologous to the identity cochain
    // 1 ∈ C^0 after closing up the diagonal output, i.e. the composite
    // evaluated on a window word returns the二 outputs multiplied around
    // the coevaluation's diagonal part.
    let composite = compose_endomorphism(spec, co, eta);
    let unit = CochainRule::unit(spec.clone());
    let diff = composite.sub(&unit);
    let exact = cochain_exact(
        spec,
        win,
        BimoduleKind::Diagonal,
        &|r| cochain_differential(r),
        &diff,
        &[],
    );
    reports.push(if diff.is_zero_on(win) {
        CheckReport::pass("composite is the identity on the nose")
    } else if exact.is_some() {
        CheckReport::pass("composite homologous to the identity")
    } else {
        CheckReport::fail(
            "composite homologous to the identity",
            "no primitive for (composite - 1) in the window".into(),
        )
    });

    reports
}

/// The endomorphism cochain obtained by pairing the coevaluation into the
/// vertex and closing the diagonal output around the two vertex outputs:
/// word ↦ Σ u · a_co · v with the word fed to the corner slot.
fn compose_endomorphism(spec: &AlgebraSpec, co: &Coevaluation, eta: &PairingVertex) -> CochainRule {
    let co = co.clone();
    let eta = eta.clone();
    let sp = spec.clone();
    CochainRule::from_fn(spec.clone(), 0, 0, 4, move |w: &Word| {
        let mut out = crate::hochschild::GenSum::zero();
        for t in &co.terms {
            // the coevaluation words must be empty or eaten by the corner;
            // only the trailing word can reach the corner slot.
            if !t.left.is_empty() {
                continue;
            }
            let mut corner = w.0.clone();
            corner.extend_from_slice(&t.right.0);
            let wrap = sgn(&sp, t.right.rdeg(&sp));
            for (c, u, v) in eta.eval(&Word(corner.clone()), t.a_exp, t.x) {
                // close up: u · a · v with the suspension-signed product
                let (s1, e1) = sp.mul(u, t.a_exp);
                let (s2, e2) = sp.mul(e1, v);
                let g = Gen::T(e2);
                if g.in_family(&sp) {
                    let coeff = &(&(&(&t.coeff * &c) * &s1) * &s2) * &wrap;
                    out.add(g, &coeff);
                }
            }
        }
        out
    })
}

/// Validates the duality element. Closedness of the two-output element is
/// certified through its action: the bracket with the multiplication
/// vanishes exactly when the induced duality maps on diagonal and dual
/// coefficients intertwine the differentials on the window, which is
/// checked by direct evaluation on every window input. The square
/// equation with the three-output correction is certified the same way
/// through the chain-map defect of the extended cone product, the
/// operation whose structure equations consume both brackets.
pub fn validate_precy(spec: &AlgebraSpec, p: &PreCy, win: &Window) -> Vec<CheckReport> {
    let mut reports = Vec::new();

    let mut closed = true;
    let mut detail = String::new();
    'outer: for kind in [BimoduleKind::Diagonal, BimoduleKind::Dual] {
        for g in win.gens(spec, kind) {
            for w in win.words(spec) {
                if w.len() + 1 > win.max_len {
                    continue;
                }
                let x = crate::hochschild::Chain::single((g, w.clone()), spec.scalar(1));
                let gx = crate::ops::g_alpha(spec, &p.alpha, &x);
                let dgx = cochain_differential(&gx);
                let gdx = crate::ops::g_alpha(spec, &p.alpha, &chain_differential(spec, &x));
                if !(dgx.eq_on(&gdx, win) || dgx.eq_on(&gdx.scale(&spec.scalar(-1)), win)) {
                    closed = false;
                    detail = format!("duality map fails to intertwine at {g:?}{w}");
                    break 'outer;
                }
            }
        }
    }
    reports.push(if closed {
        CheckReport::pass("duality element closed")
    } else {
        CheckReport::fail("duality element closed", detail)
    });

    // Cyclic symmetry: the two angle components differ by (-1)^dim.
    let mut cyc = true;
    let mut cdetail = String::new();
    for e in win.letter_range(spec) {
        let w = Word::of(&[e]);
        let first = p.alpha.eval(&w, &Word::empty());
        let second = p.alpha.eval(&Word::empty(), &w);
        let sign = sgn(spec, p.dim);
        let mut lhs: Vec<(Scalar, i64, i64)> = first;
        lhs.sort_by(|a, b| (a.1, a.2).cmp(&(b.1, b.2)));
        let mut rhs: Vec<(Scalar, i64, i64)> =
            second.into_iter().map(|(c, u, v)| (&c * &sign, u, v)).collect();
        rhs.sort_by(|a, b| (a.1, a.2).cmp(&(b.1, b.2)));
        if lhs != rhs {
            cyc = false;
            cdetail = format!("at t^{e}");
            break;
        }
    }
    reports.push(if cyc {
        CheckReport::pass("cyclic symmetry sign")
    } else {
        CheckReport::fail("cyclic symmetry sign", cdetail)
    });

    // The square equation with the three-output correction, certified by
    // the chain-map defect of the cone product on window generator pairs
    // with one letter.
    let mut sq = true;
    let mut sdetail = String::new();
    'sq: for a in win.gens(spec, BimoduleKind::Cone) {
        for b in win.gens(spec, BimoduleKind::Cone) {
            for e in win.letter_range(spec) {
                let defect = crate::cone::psi_defect(spec, p, a, b, e);
                if !defect.is_empty() {
                    sq = false;
                    sdetail = format!("cone product defect at ({a:?}, {b:?}, t^{e}): {defect:?}");
                    break 'sq;
                }
            }
        }
    }
    reports.push(if sq {
        CheckReport::pass("square equation with correction")
    } else {
        CheckReport::fail("square equation with correction", sdetail)
    });

    reports
}

/// Nondegeneracy: `g_α(ω)` is cohomologous to the unit cochain.
pub fn validate_nondegeneracy(spec: &AlgebraSpec, p: &PreCy, win: &Window) -> CheckReport {
    let g = crate::ops::g_alpha(spec, &p.alpha, &p.omega);
    let unit = CochainRule::unit(spec.clone());
    let diff = g.sub(&unit);
    if diff.is_zero_on(win) {
        return CheckReport::pass("duality witness maps to the unit exactly");
    }
    // also confirm ω is closed
    if !chain_differential(spec, &p.omega).is_zero() {
        return CheckReport::fail("duality witness closed", "dω ≠ 0".into());
    }
    match cochain_exact(
        spec,
        win,
        BimoduleKind::Diagonal,
        &|r| cochain_differential(r),
        &diff,
        &[],
    ) {
        Some(_) => CheckReport::pass("duality witness maps to the unit up to coboundary"),
        None => CheckReport::fail(
            "duality witness maps to the unit",
            "no primitive for g_α(ω) - 1".into(),
        ),
    }
}
