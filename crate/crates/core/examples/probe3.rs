// Cross-checks twisted word products against the tau-operator action.
use fhecke_core::fga::AlgebraCtx;
use fhecke_core::fgl::{FglSpec, ParamValue};
use fhecke_core::hecke::{Basis, WordBasis};
use fhecke_core::rootdata::{LatticeKind, RootDatum};

fn main() {
    let spec = FglSpec::FromLog(vec![ParamValue::Ratio(1, 2), ParamValue::Ratio(-1, 3)]);
    let law = spec.build(6).unwrap();
    let datum = RootDatum::build("B2", LatticeKind::SimplyConnected).unwrap();
    let ctx = AlgebraCtx::new(datum, law).unwrap();

    let mut wb = WordBasis::new(&ctx, Basis::Hecke);
    let u = ctx.x_var(0).mul(ctx.x_var(1)).add(ctx.x_var(0));
    for word in [vec![0u8], vec![1], vec![0, 1], vec![1, 0], vec![1, 0, 1, 0], vec![0, 1, 0, 1]] {
        let elem = wb.word_elem(&word).unwrap();
        println!("word {:?}: delta support {:?}", word, elem.coeffs().keys().collect::<Vec<_>>());
        match elem.act(&ctx, &u) {
            Ok(via_product) => {
                let via_tau = ctx.tau_word(&word, &u).unwrap();
                let d = via_product.valid().min(via_tau.valid());
                let ok = via_product.agrees_with(&via_tau.truncated(d), d);
                println!("   act == tau_word: {ok} (deg {d})");
            }
            Err(e) => println!("   act failed: {e}"),
        }
    }
}
