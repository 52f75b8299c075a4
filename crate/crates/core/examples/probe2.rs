// Extracts the true order-4 braid coefficients on B2 for a normal law and
// matches them against closed-form kappa combinations.
use fhecke_core::fga::AlgebraCtx;
use fhecke_core::fgl::{FglSpec, ParamValue};
use fhecke_core::hecke::{braid_defect, Basis, TwistedElement, WordBasis};
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
    let names = ctx.var_names();

    let (i, j) = (0usize, 1usize);
    let bd = braid_defect(&ctx, i, j).unwrap();
    println!("trust {}", bd.trust);
    for (w, q) in &bd.series_coeffs {
        println!("coeff at w={} (word {:?}): {}", w, d.element(*w).word, q.display_with(&names));
    }

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
    let ai2j = v(&[(1, i), (2, j)]);
    let theta2 = ctx.coeffs().theta.mul(&ctx.coeffs().theta);
    let k = |a: &[i64], b: &[i64]| ctx.kappa_pair(a, b, false).unwrap();
    println!("k_ij       = {}", k(&ai, &aj).display_with(&names));
    println!("k_ji       = {}", k(&aj, &ai).display_with(&names));
    println!("k_{{j,i+j}}  = {}", k(&aj, &aij).display_with(&names));
    println!("k_{{i,i+j}}  = {}", k(&ai, &aij).display_with(&names));
    println!("k_{{i+j,j}}  = {}", k(&aij, &aj).display_with(&names));
    println!("k_{{i+2j,-j}}= {}", {
        let naj: Vec<i64> = aj.iter().map(|x| -x).collect();
        k(&ai2j, &naj).display_with(&names)
    });
    println!("theta^2    = {}", theta2.display_with(&names));

    // Reference: expansion coefficients of (T_ij - T_ji) Theta^2 S for
    // candidate S, to match against the defect expansion.
    let mut wb = WordBasis::new(&ctx, Basis::Hecke);
    let tij = wb.word_elem(&[i as u8, j as u8]).unwrap();
    let tji = wb.word_elem(&[j as u8, i as u8]).unwrap();
    let cands = [
        ("k_ij + k_{j,i+j}", k(&ai, &aj).add(&k(&aj, &aij))),
        ("k_ij + k_{i,i+j}", k(&ai, &aj).add(&k(&ai, &aij))),
    ];
    for (name, s) in &cands {
        let rhs = tij
            .sub(&ctx, &tji)
            .scale_left(&ctx, &theta2)
            .mul(&ctx, &TwistedElement::from_fga(&ctx, s))
            .unwrap();
        let (coeffs, trust) = wb.expand(&rhs).unwrap();
        println!("cand {name} (trust {trust}):");
        for (w, q) in &coeffs {
            match q.pole_free(&ctx) {
                Ok(series) => println!("  at w={}: {}", w, series.display_with(&names)),
                Err(_) => println!("  at w={}: (pole)", w),
            }
        }
    }
}
