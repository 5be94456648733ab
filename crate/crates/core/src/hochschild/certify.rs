//! Exactness certificates: every "homologous" or "exact" claim is decided
//! by an exact linear solve inside a finite (degree, weight) block, with an
//! explicit primitive as witness. Quotients by a subcomplex are handled by
//! appending the subcomplex generators (and, for tensor complexes, their
//! two-sided saturations) as extra relation columns.

use super::chain::{Chain, Tensor2, Tensor3, Term};
use super::diff::{tensor2_differential, tensor3_differential, term_differential};
use super::window::Window;
use crate::algebra::{AlgebraSpec, BimoduleKind};
use crate::linalg::{homology, solve, HomologySummary, SparseMatrix};
use std::collections::BTreeMap;

/// Window terms of one bimodule, indexed by (degree, weight).
pub struct TermTable {
    by_dw: BTreeMap<(i64, i64), Vec<Term>>,
}

impl TermTable {
    pub fn new(spec: &AlgebraSpec, win: &Window, kind: BimoduleKind) -> Self {
        let mut by_dw: BTreeMap<(i64, i64), Vec<Term>> = BTreeMap::new();
        for g in win.gens(spec, kind) {
            for w in win.words(spec) {
                let t = (g, w);
                let key = (Chain::term_degree(spec, &t), Chain::term_weight(spec, &t));
                by_dw.entry(key).or_default().push(t);
            }
        }
        for v in by_dw.values_mut() {
            v.sort();
        }
        TermTable { by_dw }
    }

    pub fn block(&self, degree: i64, weight: i64) -> &[Term] {
        self.by_dw
            .get(&(degree, weight))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

/// Coordinates of a chain in a basis; terms outside the basis are appended
/// so nothing is silently truncated.
pub fn chain_to_vec(basis: &mut Vec<Term>, x: &Chain, spec: &AlgebraSpec) -> Vec<crate::linalg::Scalar> {
    for t in x.terms.keys() {
        if !basis.contains(t) {
            basis.push(t.clone());
        }
    }
    let _ = spec;
    basis
        .iter()
        .map(|t| x.terms.get(t).cloned().unwrap_or_else(|| spec.ring().zero()))
        .collect()
}

/// Matrix of the boundary from the (degree, weight) block to degree-1.
/// The target basis is extended by any image terms that fall outside the
/// enumerated window, so the matrix is always an exact representation.
pub fn chain_block_matrix(
    spec: &AlgebraSpec,
    table: &TermTable,
    degree: i64,
    weight: i64,
) -> (Vec<Term>, Vec<Term>, SparseMatrix) {
    let src: Vec<Term> = table.block(degree, weight).to_vec();
    let mut tgt: Vec<Term> = table.block(degree - 1, weight).to_vec();
    let mut cols: Vec<Chain> = Vec::with_capacity(src.len());
    for t in &src {
        let img = term_differential(spec, t);
        for k in img.terms.keys() {
            if !tgt.contains(k) {
                tgt.push(k.clone());
            }
        }
        cols.push(img);
    }
    let mut m = SparseMatrix::zero(spec.ring(), tgt.len(), src.len());
    for (j, img) in cols.iter().enumerate() {
        for (k, c) in &img.terms {
            let i = tgt.iter().position(|t| t == k).unwrap();
            m.set(i, j, c.clone());
        }
    }
    (src, tgt, m)
}

/// Decides whether `x` is a boundary modulo the span of `rels`, inside its
/// (degree, weight) block; returns the primitive on success.
pub fn chain_exact_mod(
    spec: &AlgebraSpec,
    win: &Window,
    kind: BimoduleKind,
    x: &Chain,
    rels: &[Chain],
) -> Option<Chain> {
    if x.is_zero() {
        return Some(Chain::zero());
    }
    let degree = x.degree(spec).expect("exactness needs a homogeneous chain");
    let weight = x.weight(spec).expect("exactness needs weight-homogeneous input");
    let table = TermTable::new(spec, win, kind);
    let src: Vec<Term> = table.block(degree + 1, weight).to_vec();
    let mut tgt: Vec<Term> = table.block(degree, weight).to_vec();
    let mut cols: Vec<Chain> = Vec::new();
    for t in &src {
        cols.push(term_differential(spec, t));
    }
    for r in rels {
        cols.push(r.clone());
    }
    for c in &cols {
        for k in c.terms.keys() {
            if !tgt.contains(k) {
                tgt.push(k.clone());
            }
        }
    }
    let v = chain_to_vec(&mut tgt, x, spec);
    let mut m = SparseMatrix::zero(spec.ring(), tgt.len(), cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (k, s) in &c.terms {
            let i = tgt.iter().position(|t| t == k).unwrap();
            m.set(i, j, s.clone());
        }
    }
    let sol = solve(&m, &v)?;
    let mut prim = Chain::zero();
    for (j, t) in src.iter().enumerate() {
        prim.add_term(t.clone(), &sol[j]);
    }
    Some(prim)
}

fn tensor2_pairs(
    spec: &AlgebraSpec,
    table: &TermTable,
    degree: i64,
    weight: i64,
    wspan: i64,
) -> Vec<(Term, Term)> {
    let mut out = Vec::new();
    for ((d1, w1), us) in table.by_dw.iter() {
        let (d2, w2) = (degree - d1, weight - w1);
        if w2.abs() > wspan {
            continue;
        }
        for u in us {
            for v in table.block(d2, w2) {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    let _ = spec;
    out.sort();
    out
}

/// Exactness of a `C ⊗ C` element modulo relation elements, block-local.
pub fn tensor2_exact_mod(
    spec: &AlgebraSpec,
    win: &Window,
    kind: BimoduleKind,
    x: &Tensor2,
    rels: &[Tensor2],
) -> Option<Tensor2> {
    if x.is_zero() {
        return Some(Tensor2::zero());
    }
    let (degree, weight) = tensor2_dw(spec, x);
    let table = TermTable::new(spec, win, kind);
    let wspan = 2 * win.max_exp * (win.max_len as i64 + 1);
    let src = tensor2_pairs(spec, &table, degree + 1, weight, wspan);
    let mut tgt: Vec<(Term, Term)> = Vec::new();
    let mut cols: Vec<Tensor2> = Vec::new();
    for t in &src {
        let single = Tensor2::single(t.clone(), spec.scalar(1));
        cols.push(tensor2_differential(spec, &single));
    }
    for r in rels {
        cols.push(r.clone());
    }
    for c in &cols {
        for k in c.terms.keys() {
            if !tgt.contains(k) {
                tgt.push(k.clone());
            }
        }
    }
    for k in x.terms.keys() {
        if !tgt.contains(k) {
            tgt.push(k.clone());
        }
    }
    tgt.sort();
    let mut m = SparseMatrix::zero(spec.ring(), tgt.len(), cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (k, s) in &c.terms {
            let i = tgt.iter().position(|t| t == k).unwrap();
            m.set(i, j, s.clone());
        }
    }
    let v: Vec<_> = tgt
        .iter()
        .map(|t| x.terms.get(t).cloned().unwrap_or_else(|| spec.ring().zero()))
        .collect();
    let sol = solve(&m, &v)?;
    let mut prim = Tensor2::zero();
    for (j, t) in src.iter().enumerate() {
        prim.add_term(t.clone(), &sol[j]);
    }
    Some(prim)
}

fn tensor2_dw(spec: &AlgebraSpec, x: &Tensor2) -> (i64, i64) {
    let mut dw = None;
    for (u, v) in x.terms.keys() {
        let d = Chain::term_degree(spec, u) + Chain::term_degree(spec, v);
        let w = Chain::term_weight(spec, u) + Chain::term_weight(spec, v);
        match dw {
            None => dw = Some((d, w)),
            Some(x) => assert_eq!(x, (d, w), "tensor element not homogeneous"),
        }
    }
    dw.expect("empty tensor element")
}

fn tensor3_dw(spec: &AlgebraSpec, x: &Tensor3) -> (i64, i64) {
    let mut dw = None;
    for (u, v, w3) in x.terms.keys() {
        let d = Chain::term_degree(spec, u) + Chain::term_degree(spec, v) + Chain::term_degree(spec, w3);
        let w = Chain::term_weight(spec, u) + Chain::term_weight(spec, v) + Chain::term_weight(spec, w3);
        match dw {
            None => dw = Some((d, w)),
            Some(x) => assert_eq!(x, (d, w), "tensor element not homogeneous"),
        }
    }
    dw.expect("empty tensor element")
}

/// Exactness of a `C ⊗ C ⊗ C` element modulo relations, block-local.
pub fn tensor3_exact_mod(
    spec: &AlgebraSpec,
    win: &Window,
    kind: BimoduleKind,
    x: &Tensor3,
    rels: &[Tensor3],
) -> Option<Tensor3> {
    if x.is_zero() {
        return Some(Tensor3::zero());
    }
    let (degree, weight) = tensor3_dw(spec, x);
    let table = TermTable::new(spec, win, kind);
    // Enumerate triples of window terms with the target (degree+1, weight).
    let mut src: Vec<(Term, Term, Term)> = Vec::new();
    for ((d1, w1), us) in table.by_dw.iter() {
        for ((d2, w2), vs) in table.by_dw.iter() {
            let (d3, w3) = (degree + 1 - d1 - d2, weight - w1 - w2);
            let ws = table.block(d3, w3);
            if ws.is_empty() {
                continue;
            }
            for u in us {
                for v in vs {
                    for w in ws {
                        src.push((u.clone(), v.clone(), w.clone()));
                    }
                }
            }
        }
    }
    src.sort();
    src.dedup();
    let mut cols: Vec<Tensor3> = Vec::new();
    for t in &src {
        cols.push(tensor3_differential(spec, &Tensor3::single(t.clone(), spec.scalar(1))));
    }
    for r in rels {
        cols.push(r.clone());
    }
    let mut tgt: Vec<(Term, Term, Term)> = Vec::new();
    for c in cols.iter().map(|c| &c.terms).chain(std::iter::once(&x.terms)) {
        for k in c.keys() {
            if !tgt.contains(k) {
                tgt.push(k.clone());
            }
        }
    }
    tgt.sort();
    let idx: BTreeMap<&(Term, Term, Term), usize> = tgt.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = SparseMatrix::zero(spec.ring(), tgt.len(), cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (k, s) in &c.terms {
            m.set(idx[k], j, s.clone());
        }
    }
    let v: Vec<_> = tgt
        .iter()
        .map(|t| x.terms.get(t).cloned().unwrap_or_else(|| spec.ring().zero()))
        .collect();
    let sol = solve(&m, &v)?;
    let mut prim = Tensor3::zero();
    for (j, t) in src.iter().enumerate() {
        prim.add_term(t.clone(), &sol[j]);
    }
    Some(prim)
}

/// Homology of the (degree, weight) block of the quotient complex
/// `(C/W) ⊗ (C/W)`, where the relation subcomplex in each block is given
/// by `rels_at`. Computed as the homology of the mapping cone of the
/// inclusion of the relation subcomplex, which is quasi-isomorphic to the
/// quotient. The cone block in homological degree `k` is
/// `F_k ⊕ R_{k-1}` with differential `(f, r) -> (df - r, -dr)`.
pub fn tensor2_block_homology(
    spec: &AlgebraSpec,
    win: &Window,
    kind: BimoduleKind,
    degree: i64,
    weight: i64,
    rels_at: &dyn Fn(i64, i64) -> Vec<Tensor2>,
) -> (Vec<(Term, Term)>, HomologySummary) {
    let table = TermTable::new(spec, win, kind);
    let free = |d: i64| tensor2_pairs(spec, &table, d, weight, i64::MAX);
    let rels = |d: i64| rels_at(d, weight);

    let cone_matrix = |d: i64| -> SparseMatrix {
        // Map from cone block at degree d to cone block at degree d-1.
        let src_f = free(d);
        let src_r = rels(d - 1);
        let tgt_f = free(d - 1);
        let tgt_r = rels(d - 2);
        let fidx: BTreeMap<&(Term, Term), usize> = tgt_f.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut m = SparseMatrix::zero(spec.ring(), tgt_f.len() + tgt_r.len(), src_f.len() + src_r.len());
        for (j, t) in src_f.iter().enumerate() {
            let img = tensor2_differential(spec, &Tensor2::single(t.clone(), spec.scalar(1)));
            for (k, s) in &img.terms {
                let i = *fidx
                    .get(k)
                    .unwrap_or_else(|| panic!("unsafe block: image escapes enumeration at {k:?}"));
                m.set(i, j, s.clone());
            }
        }
        for (j, r) in src_r.iter().enumerate() {
            let col = src_f.len() + j;
            // -i(r) into the free part.
            for (k, s) in &r.terms {
                let i = *fidx
                    .get(k)
                    .unwrap_or_else(|| panic!("unsafe block: relation escapes enumeration at {k:?}"));
                m.add_to(i, col, &(-s));
            }
            // -d(r) into the relation part, expressed in the rel basis.
            let dr = tensor2_differential(spec, r);
            if !dr.is_zero() {
                let coords = express_in_span(spec, &tgt_r, &dr)
                    .expect("relations must form a subcomplex");
                for (i, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        m.add_to(tgt_f.len() + i, col, &(-&c));
                    }
                }
            }
        }
        m
    };

    let d_in = cone_matrix(degree + 1);
    let d_out = cone_matrix(degree);
    let h = homology(&d_in, &d_out).expect("tensor block must be a complex");
    (free(degree), h)
}

/// Coordinates of `x` in the given spanning set (must be a basis for the
/// result to be unique; used for relation subcomplexes whose elements are
/// scalar multiples of distinct basis terms).
fn express_in_span(spec: &AlgebraSpec, span: &[Tensor2], x: &Tensor2) -> Option<Vec<crate::linalg::Scalar>> {
    let mut tgt: Vec<(Term, Term)> = Vec::new();
    for c in span.iter().map(|c| &c.terms).chain(std::iter::once(&x.terms)) {
        for k in c.keys() {
            if !tgt.contains(k) {
                tgt.push(k.clone());
            }
        }
    }
    tgt.sort();
    let mut m = SparseMatrix::zero(spec.ring(), tgt.len(), span.len());
    for (j, c) in span.iter().enumerate() {
        for (k, s) in &c.terms {
            let i = tgt.iter().position(|t| t == k).unwrap();
            m.set(i, j, s.clone());
        }
    }
    let v: Vec<_> = tgt
        .iter()
        .map(|t| x.terms.get(t).cloned().unwrap_or_else(|| spec.ring().zero()))
        .collect();
    solve(&m, &v)
}

/// Membership of a chain in the span of the given chains (chain-level
/// quotient equality); returns the coefficients on success.
pub fn chain_in_span(spec: &AlgebraSpec, span: &[Chain], x: &Chain) -> Option<Vec<crate::linalg::Scalar>> {
    let mut tgt: Vec<Term> = Vec::new();
    for c in span.iter().map(|c| &c.terms).chain(std::iter::once(&x.terms)) {
        for k in c.keys() {
            if !tgt.contains(k) {
                tgt.push(k.clone());
            }
        }
    }
    tgt.sort();
    let mut m = SparseMatrix::zero(spec.ring(), tgt.len(), span.len());
    for (j, c) in span.iter().enumerate() {
        for (k, s) in &c.terms {
            let i = tgt.iter().position(|t| t == k).unwrap();
            m.set(i, j, s.clone());
        }
    }
    let v: Vec<_> = tgt
        .iter()
        .map(|t| x.terms.get(t).cloned().unwrap_or_else(|| spec.ring().zero()))
        .collect();
    solve(&m, &v)
}

/// Membership of a tensor element in the span of the given elements.
pub fn tensor2_in_span(spec: &AlgebraSpec, span: &[Tensor2], x: &Tensor2) -> bool {
    express_in_span(spec, span, x).is_some()
}

/// Decides whether the cochain `psi` is a coboundary within the window:
/// enumerates primitive candidates `e_{u,g}` (value `g` on the word `u`),
/// applies the supplied differential operator, and solves the resulting
/// exact system over all window words. The candidate value bimodule is
/// `kind`; quotient relations (cochains spanning the subcomplex to mod out)
/// may be appended.
pub fn cochain_exact(
    spec: &AlgebraSpec,
    win: &Window,
    kind: BimoduleKind,
    delta: &dyn Fn(&super::cochain::CochainRule) -> super::cochain::CochainRule,
    psi: &super::cochain::CochainRule,
    rels: &[super::cochain::CochainRule],
) -> Option<Vec<(super::Word, crate::algebra::Gen, crate::linalg::Scalar)>> {
    use super::cochain::{CochainRule, GenSum};
    let deg = psi.deg() + 1;
    let wshift = psi.wshift();
    // Candidate basis (u, g) with matching homogeneity.
    let mut cands: Vec<(super::Word, crate::algebra::Gen)> = Vec::new();
    for u in win.words(spec) {
        for g in win.gens(spec, kind) {
            if g.degree(spec) - u.rdeg(spec) == deg && g.weight(spec) - u.weight() == wshift {
                cands.push((u.clone(), g));
            }
        }
    }
    // Value coordinates: (window word, generator) pairs seen in any image
    // or in psi itself.
    let mut rows: Vec<(super::Word, crate::algebra::Gen)> = Vec::new();
    let mut cols: Vec<Vec<((super::Word, crate::algebra::Gen), crate::linalg::Scalar)>> = Vec::new();
    let words = win.words(spec);
    let record = |rule: &CochainRule, rows: &mut Vec<(super::Word, crate::algebra::Gen)>| {
        let mut col = Vec::new();
        for w in &words {
            let v: GenSum = rule.eval(w);
            for (g, c) in v.terms() {
                let key = (w.clone(), *g);
                if !rows.contains(&key) {
                    rows.push(key.clone());
                }
                col.push((key, c.clone()));
            }
        }
        col
    };
    for (u, g) in &cands {
        let (uu, gg, sp) = (u.clone(), *g, spec.clone());
        let e = CochainRule::from_fn(spec.clone(), deg, wshift, u.len(), move |w| {
            if *w == uu {
                GenSum::single(gg, sp.scalar(1))
            } else {
                GenSum::zero()
            }
        });
        let de = delta(&e);
        cols.push(record(&de, &mut rows));
    }
    for r in rels {
        cols.push(record(r, &mut rows));
    }
    let target = record(psi, &mut rows);
    let mut m = SparseMatrix::zero(spec.ring(), rows.len(), cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (key, c) in col {
            let i = rows.iter().position(|k| k == key).unwrap();
            m.add_to(i, j, c);
        }
    }
    let mut v = vec![spec.ring().zero(); rows.len()];
    for (key, c) in target {
        let i = rows.iter().position(|k| k == &key).unwrap();
        v[i] = &v[i] + &c;
    }
    let sol = solve(&m, &v)?;
    Some(
        cands
            .into_iter()
            .zip(sol)
            .filter(|(_, c)| !c.is_zero())
            .map(|((u, g), c)| (u, g, c))
            .collect(),
    )
}
