// The multiplicative law satisfies the braid relations on the nose: the
// defect must vanish identically. Any survivor is a product bug.
use fhecke_core::fga::AlgebraCtx;
use fhecke_core::fgl::{FglSpec, ParamValue};
use fhecke_core::hecke::{Basis, WordBasis};
use fhecke_core::rootdata::{LatticeKind, RootDatum};

fn main() {
    for (label, fgl) in [
        ("B2", FglSpec::Multiplicative(ParamValue::Symbol("beta".into()))),
        ("A2", FglSpec::Multiplicative(ParamValue::Symbol("beta".into()))),
    ] {
        let law = fgl.build(6).unwrap();
        let datum = RootDatum::build(label, LatticeKind::SimplyConnected).unwrap();
        let ctx = AlgebraCtx::new(datum, law).unwrap();
        let m = ctx.datum().m_order(0, 1);
        let mut wb = WordBasis::new(&ctx, Basis::Hecke);
        let alt = |a: u8, b: u8| -> Vec<u8> {
            (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect()
        };
        let left = wb.word_elem(&alt(1, 0)).unwrap();
        let right = wb.word_elem(&alt(0, 1)).unwrap();
        let defect = left.sub(&ctx, &right);
        println!("{label} multiplicative m={m}: defect support {:?}", defect.coeffs().keys().collect::<Vec<_>>());
        for (w, q) in defect.coeffs() {
            println!("   at {w}: {}", q.display(&ctx));
        }
    }
}
