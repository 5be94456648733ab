use stringtop::algebra::{AlgebraSpec, BimoduleKind, Gen};
use stringtop::cone::*;
use stringtop::hochschild::*;
use stringtop::linalg::{Ring, Scalar};
use stringtop::precy::builtin_structure;

fn main() {
    let s3 = AlgebraSpec::poly("S3", 2, Ring::Int);
    let s4 = AlgebraSpec::poly("S4", 3, Ring::Int);
    let ci = AlgebraSpec::laurent("circle", Ring::Rat);
    let (_, _, p3) = builtin_structure(&s3).unwrap();
    let (_, _, p4) = builtin_structure(&s4).unwrap();
    let (_, _, pc) = builtin_structure(&ci).unwrap();
    let win = Window::new(2, -3, 3, 3);
    // phase 1: cores passing all d² checks and the S3 f-goldens
    let mut cores = vec![];
    'outer: for bits in 0i64..(1 << 15) {
        set_params(bits);
        if f_alpha_right(&s3, &p3.alpha, 1, 3) != GenSum::of(&s3, Gen::T(1), -1) { continue; }
        if f_alpha_left(&s3, &p3.alpha, 3, 1) != GenSum::of(&s3, Gen::T(1), 1) { continue; }
        for (spec, p) in [(&s3, &p3), (&s4, &p4), (&ci, &pc)] {
            for g in win.gens(spec, BimoduleKind::Cone) {
                for w in win.words(spec) {
                    let x = Chain::single((g, w.clone()), spec.scalar(1));
                    if !cone_differential(spec, &p.alpha, &cone_differential(spec, &p.alpha, &x)).is_zero() {
                        continue 'outer;
                    }
                }
            }
        }
        cores.push(bits);
    }
    println!("cores: {} ({:?}...)", cores.len(), &cores[..cores.len().min(6)]);
    // phase 2: per core, search mu2 bits against the product tables
    let mut hits = vec![];
    for &core in &cores {
        'mu: for mu in 0i64..(1 << 6) {
            let bits = core | (mu << 15);
            set_params(bits);
            // S3 dual product table
            for k in 0..=2i64 {
                for l in 0..=2i64 {
                    let skt = Chain::of(&s3, Gen::S(k), &[1]);
                    let sl = Chain::of_gen(&s3, Gen::S(l));
                    if project_dual(&pi_m(&s3, &p3, &skt, &sl))
                        != Chain::single((Gen::S(k + l + 1), Word::empty()), s3.scalar(-1)) { continue 'mu; }
                    let slt = Chain::of(&s3, Gen::S(l), &[1]);
                    if project_dual(&pi_m(&s3, &p3, &skt, &slt))
                        != Chain::single((Gen::S(k + l + 1), Word::of(&[1])), s3.scalar(1)) { continue 'mu; }
                }
            }
            // S4 dual product tables
            for k in 0..=2i64 {
                for l in 0..=2i64 {
                    let skt = Chain::of(&s4, Gen::S(k), &[1]);
                    let sl = Chain::of_gen(&s4, Gen::S(l));
                    let sign = s4.scalar(if (k * (l + 1)) % 2 == 1 { -1 } else { 1 });
                    if project_dual(&pi_m(&s4, &p4, &skt, &sl))
                        != Chain::single((Gen::S(k + l + 1), Word::empty()), sign.clone()) { continue 'mu; }
                    let slt = Chain::of(&s4, Gen::S(l), &[1]);
                    if project_dual(&pi_m(&s4, &p4, &skt, &slt))
                        != Chain::single((Gen::S(k + l + 1), Word::of(&[1])), sign) { continue 'mu; }
                }
            }
            // circle fraction tables (full first table + spot second)
            for k in -2..=2i64 {
                for l in -2..=2i64 {
                    let col = if k <= -1 { 0 } else if k == 0 { 1 } else { 2 };
                    let row = if l >= 1 { 0 } else if l == 0 { 1 } else { 2 };
                    let table = [[0i64, -1, -2], [1, 0, -1], [2, 1, 0]];
                    let num = table[row][col];
                    let skt = Chain::of(&ci, Gen::S(k), &[1]);
                    let sl = Chain::of_gen(&ci, Gen::S(l));
                    let got = project_dual(&pi_m(&ci, &pc, &skt, &sl));
                    let want = if num == 0 { Chain::zero() } else {
                        Chain::single((Gen::S(k + l - 1), Word::empty()), Scalar::from_ratio(ci.ring, num, 2))
                    };
                    if got != want { continue 'mu; }
                    let slt = Chain::of(&ci, Gen::S(l), &[1]);
                    let got = project_dual(&pi_m(&ci, &pc, &skt, &slt));
                    let want = if num == 0 { Chain::zero() } else {
                        Chain::single((Gen::S(k + l - 1), Word::of(&[1])), Scalar::from_ratio(ci.ring, -num, 2))
                    };
                    if got != want { continue 'mu; }
                }
            }
            // S3 mixed products
            for k in 0..=2i64 {
                for l in 1..=2i64 {
                    let skt = Chain::of(&s3, Gen::S(k), &[1]);
                    let tl = Chain::of_gen(&s3, Gen::T(l));
                    let mut expect = Chain::zero();
                    if k - l >= 0 { expect.add_term((Gen::S(k - l), Word::empty()), &s3.scalar(-1)); }
                    if k <= l - 1 { expect.add_term((Gen::T(l - 1 - k), Word::empty()), &s3.scalar(1)); }
                    if pi_m(&s3, &p3, &skt, &tl) != expect { continue 'mu; }
                }
            }
            hits.push(bits);
            println!("FULL HIT bits={bits} core={core} mu={mu}");
            if hits.len() > 6 { return; }
        }
    }
    println!("total hits: {}", hits.len());
}
