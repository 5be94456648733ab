use stringtop::algebra::{AlgebraSpec, BimoduleKind, Gen};
use stringtop::cone::*;
use stringtop::hochschild::*;
use stringtop::linalg::Ring;
use stringtop::precy::builtin_structure;

fn main() {
    let s3 = AlgebraSpec::poly("S3", 2, Ring::Int);
    let s4 = AlgebraSpec::poly("S4", 3, Ring::Int);
    let ci = AlgebraSpec::laurent("circle", Ring::Rat);
    let (_, _, p3) = builtin_structure(&s3).unwrap();
    let (_, _, p4) = builtin_structure(&s4).unwrap();
    let (_, _, pc) = builtin_structure(&ci).unwrap();
    let win = Window::new(2, -3, 3, 3);
    for bits in [20i64, 32788] {
        set_params(bits);
        for (spec, p) in [(&s3, &p3), (&s4, &p4), (&ci, &pc)] {
            let mut bad = 0;
            for g in win.gens(spec, BimoduleKind::Cone) {
                for w in win.words(spec) {
                    let x = Chain::single((g, w.clone()), spec.scalar(1));
                    let dd = cone_differential(spec, &p.alpha, &cone_differential(spec, &p.alpha, &x));
                    if !dd.is_zero() {
                        if bad == 0 { println!("bits {bits} {}: first defect {g:?}{w}: {:?}", spec.name, dd.terms); }
                        bad += 1;
                    }
                }
            }
            println!("bits {bits} {}: {} defects", spec.name, bad);
        }
    }
}
