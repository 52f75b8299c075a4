// Checks the primed kappa pairs on B2 against the normalization transport.
use fhecke_core::fga::AlgebraCtx;
use fhecke_core::fgl::{FglSpec, ParamValue};
use fhecke_core::hecke::{Basis, TwistedElement, WordBasis};
use fhecke_core::rootdata::{LatticeKind, RootDatum};
use fhecke_core::series::TruncSeries;

fn phi_map(target: &AlgebraCtx, g: &TruncSeries, u: &TruncSeries) -> TruncSeries {
    let images: Vec<TruncSeries> =
        (0..target.nvars()).map(|i| g.substitute(&[target.x_var(i)]).unwrap()).collect();
    let refs: Vec<&TruncSeries> = images.iter().collect();
    u.substitute(&refs).unwrap()
}

fn iota_map(ctx: &AlgebraCtx, u: &TruncSeries) -> TruncSeries {
    let images: Vec<TruncSeries> = (0..ctx.nvars())
        .map(|i| {
            let mut v = vec![0i64; ctx.nvars()];
            v[i] = -1;
            ctx.x_of(&v).unwrap()
        })
        .collect();
    let refs: Vec<&TruncSeries> = images.iter().collect();
    u.substitute(&refs).unwrap()
}

fn main() {
    let spec = FglSpec::FromLog(vec![ParamValue::Ratio(1, 2), ParamValue::Ratio(-1, 3)]);
    let law = spec.build(8).unwrap();
    let (h, _f, normal) = law.normalize().unwrap();
    let datum = RootDatum::build("B2", LatticeKind::SimplyConnected).unwrap();
    let ctx = AlgebraCtx::new(datum.clone(), spec.build(8).unwrap()).unwrap();
    let tctx = AlgebraCtx::new(datum, normal).unwrap();
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

    for (name, lam, nu) in [("(i,j)", &ai, &aj), ("(j,i+j)", &aj, &aij)] {
        let primed = ctx.kappa_pair(lam, nu, true).unwrap();
        let tilde = tctx.kappa_pair(lam, nu, false).unwrap();
        // transport: phi_h(iota~(kappa~_{lam,nu}))
        let transported = phi_map(&ctx, &h, &iota_map(&tctx, &tilde));
        let deg = primed.valid().min(transported.valid());
        println!(
            "{name}: primed valid {}, transported valid {}, agree {}",
            primed.valid(),
            transported.valid(),
            primed.agrees_with(&transported.truncated(deg), deg)
        );
        // also the lemma-style identification: primed = phi_h(kappa~_{-lam,-nu})
        let nl: Vec<i64> = lam.iter().map(|x| -x).collect();
        let nn: Vec<i64> = nu.iter().map(|x| -x).collect();
        let tilde_neg = tctx.kappa_pair(&nl, &nn, false).unwrap();
        let back = phi_map(&ctx, &h, &tilde_neg);
        let deg2 = primed.valid().min(back.valid());
        println!(
            "   primed = phi_h(kappa~_(-lam,-nu)): {}",
            primed.agrees_with(&back.truncated(deg2), deg2)
        );
    }

    // Full identity with transported coefficients on the base law.
    let k_ij_t = {
        let t = tctx.kappa_pair(&ai, &aj, false).unwrap();
        phi_map(&ctx, &h, &iota_map(&tctx, &t))
    };
    let k_jij_t = {
        let t = tctx.kappa_pair(&aj, &aij, false).unwrap();
        phi_map(&ctx, &h, &iota_map(&tctx, &t))
    };
    let sum = k_ij_t.add(&k_jij_t);
    let theta2 = ctx.coeffs().theta.mul(&ctx.coeffs().theta);
    let mut wb = WordBasis::new(&ctx, Basis::Hecke);
    let defect = wb
        .word_elem(&[j as u8, i as u8, j as u8, i as u8])
        .unwrap()
        .sub(&ctx, &wb.word_elem(&[i as u8, j as u8, i as u8, j as u8]).unwrap());
    let rhs = wb
        .word_elem(&[i as u8, j as u8])
        .unwrap()
        .sub(&ctx, &wb.word_elem(&[j as u8, i as u8]).unwrap())
        .scale_left(&ctx, &theta2)
        .mul(&ctx, &TwistedElement::from_fga(&ctx, &sum))
        .unwrap();
    let cmp = defect.compare(&ctx, &rhs);
    println!("identity with transported sum: agree {} at degree {}", cmp.first_diff.is_none(), cmp.degree);
    if let Some((w, m, a, b)) = cmp.first_diff {
        println!("   first diff at element {w}, mono {:?}: {a} vs {b}", m);
    }
}
