use fhecke_core::fgl::{FglSpec, ParamValue};
use fhecke_core::rootdata::LatticeKind;
use fhecke_core::verify::{run_suite, CheckSpec, Status};
use std::time::Instant;

fn main() {
    let cases: Vec<(&str, FglSpec, u32)> = vec![
        ("A1", FglSpec::Additive, 6),
        ("A1xA1", FglSpec::Multiplicative(ParamValue::Symbol("beta".into())), 6),
        ("A2", FglSpec::Multiplicative(ParamValue::Symbol("beta".into())), 6),
        ("A2", FglSpec::FromLog(vec![ParamValue::Symbol("c2".into()), ParamValue::Symbol("c3".into())]), 6),
        ("B2", FglSpec::Additive, 6),
        ("B2", FglSpec::Lorentz(ParamValue::Symbol("beta".into())), 6),
        ("B2", FglSpec::FromLog(vec![ParamValue::Symbol("c2".into()), ParamValue::Symbol("c3".into())]), 6),
    ];
    for (datum, fgl, cap) in cases {
        let spec = CheckSpec {
            datum: datum.into(),
            lattice: LatticeKind::SimplyConnected,
            fgl: fgl.clone(),
            cap,
            seed: 1,
            only: None,
        };
        let t0 = Instant::now();
        match run_suite(&spec) {
            Ok(vs) => {
                let pass = vs.iter().filter(|v| v.status == Status::Pass).count();
                let fail: Vec<_> = vs.iter().filter(|v| v.status == Status::Fail).collect();
                let skip = vs.iter().filter(|v| v.status == Status::Skipped).count();
                println!(
                    "{datum} {} cap {cap}: {pass} pass, {} fail, {skip} skip  [{:?}]",
                    fgl.desc(), fail.len(), t0.elapsed()
                );
                for f in fail {
                    println!("    FAIL {}: {:?}", f.id, f.witness);
                }
            }
            Err(e) => println!("{datum} {}: suite error {e}", fgl.desc()),
        }
    }
}
