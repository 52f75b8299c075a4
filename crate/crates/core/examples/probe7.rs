// Cross-cap soundness audit of the order-4 identity pieces.
use fhecke_core::fga::AlgebraCtx;
use fhecke_core::fgl::{FglSpec, ParamValue};
use fhecke_core::hecke::{Basis, TwistedElement, WordBasis};
use fhecke_core::rootdata::{LatticeKind, RootDatum};

fn main() {
    for cap in [6u32, 8] {
        let spec = FglSpec::FromLog(vec![ParamValue::Symbol("c2".into()), ParamValue::Symbol("c3".into())]);
        let law = spec.build(cap).unwrap();
        let datum = RootDatum::build("B2", LatticeKind::SimplyConnected).unwrap();
        let ctx = AlgebraCtx::new(datum, law).unwrap();
        let d = ctx.datum();
        let (i, j) = (0usize, 1usize);
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
        let kp1 = ctx.kappa_pair(&ai, &aj, true).unwrap();
        let kp2 = ctx.kappa_pair(&aj, &aij, true).unwrap();
        let sum = kp1.add(&kp2);
        println!("cap {cap}: kappa'_ij valid {}, kappa'_(j,i+j) valid {}, sum valid {}", kp1.valid(), kp2.valid(), sum.valid());
        let theta2 = ctx.coeffs().theta.mul(&ctx.coeffs().theta);
        let mut wb = WordBasis::new(&ctx, Basis::Hecke);
        let defect = wb
            .word_elem(&[j as u8, i as u8, j as u8, i as u8]).unwrap()
            .sub(&ctx, &wb.word_elem(&[i as u8, j as u8, i as u8, j as u8]).unwrap());
        let rhs = wb
            .word_elem(&[i as u8, j as u8]).unwrap()
            .sub(&ctx, &wb.word_elem(&[j as u8, i as u8]).unwrap())
            .scale_left(&ctx, &theta2)
            .mul(&ctx, &TwistedElement::from_fga(&ctx, &sum))
            .unwrap();
        for w in [1usize, 2, 3, 4] {
            let dq = defect.coeff(&ctx, w);
            let rq = rhs.coeff(&ctx, w);
            let cmp = dq.compare(&ctx, &rq);
            println!(
                "  delta {w}: defect ord {:?} valid {} den {:?} | rhs ord {:?} valid {} den {:?} | agree {} deg {}",
                dq.num().order(), dq.num().valid(), dq.den().keys().collect::<Vec<_>>(),
                rq.num().order(), rq.num().valid(), rq.den().keys().collect::<Vec<_>>(),
                cmp.first_diff.is_none(), cmp.degree
            );
            if let Some((m, a, b)) = cmp.first_diff {
                println!("      first diff {:?}: {a} vs {b}", m);
            }
        }
    }
}
