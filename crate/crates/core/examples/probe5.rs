// Direct delta-coefficient inspection of the order-4 identity pieces.
use fhecke_core::fga::AlgebraCtx;
use fhecke_core::fgl::{FglSpec, ParamValue};
use fhecke_core::hecke::{Basis, TwistedElement, WordBasis};
use fhecke_core::rootdata::{LatticeKind, RootDatum};

fn main() {
    let spec = FglSpec::FromLog(vec![
        ParamValue::Ratio(1, 2),
        ParamValue::Ratio(-1, 3),
        ParamValue::Ratio(1, 5),
    ]);
    let law = spec.build(8).unwrap();
    let (_, _, normal) = law.normalize().unwrap();
    let datum = RootDatum::build("B2", LatticeKind::SimplyConnected).unwrap();
    let ctx = AlgebraCtx::new(datum, normal).unwrap();
    let d = ctx.datum();

    let (i, j) = (0usize, 1usize);
    let mut wb = WordBasis::new(&ctx, Basis::Hecke);
    let v = |parts: &[(i64, usize)]| -> Vec<i64> {
        let mut out = vec![0i64; 2];
        for &(c, g) in parts {
            let r = &d.roots()[d.simple_root(g)];
            for (x, y) in out.iter_mut().zip(&r.vec) { *x += c * y; }
        }
        out
    };
    let ai = v(&[(1, i)]);
    let aj = v(&[(1, j)]);
    let aij = v(&[(1, i), (1, j)]);
    let k = |a: &[i64], b: &[i64]| ctx.kappa_pair(a, b, false).unwrap();
    let s = k(&ai, &aj).add(&k(&aj, &aij));
    let theta2 = ctx.coeffs().theta.mul(&ctx.coeffs().theta);

    let left = wb.word_elem(&[j as u8, i as u8, j as u8, i as u8]).unwrap();
    let right = wb.word_elem(&[i as u8, j as u8, i as u8, j as u8]).unwrap();
    let defect = left.sub(&ctx, &right);
    let tij = wb.word_elem(&[i as u8, j as u8]).unwrap();
    let tji = wb.word_elem(&[j as u8, i as u8]).unwrap();
    let cand = tij
        .sub(&ctx, &tji)
        .scale_left(&ctx, &theta2)
        .mul(&ctx, &TwistedElement::from_fga(&ctx, &s))
        .unwrap();

    for w in 0..d.num_elements() {
        let dq = defect.coeff(&ctx, w);
        let cq = cand.coeff(&ctx, w);
        let cmp = dq.compare(&ctx, &cq);
        println!(
            "delta {} (len {}): defect num order {:?} valid {}, cand num order {:?} valid {}, agree {} at deg {}",
            w,
            d.element(w).length,
            dq.num().order(), dq.num().valid(),
            cq.num().order(), cq.num().valid(),
            cmp.first_diff.is_none(),
            cmp.degree,
        );
    }
}
