use fhecke_core::fgl::{FglSpec, ParamValue};
use fhecke_core::rootdata::LatticeKind;
use fhecke_core::verify::{run_suite, CheckSpec, Status};

fn main() {
    for (datum, fgl, cap) in [
        ("A1", FglSpec::Additive, 6u32),
        ("A2", FglSpec::Multiplicative(ParamValue::Symbol("beta".into())), 6),
        ("A2", FglSpec::Multiplicative(ParamValue::Ratio(1, 1)), 6),
    ] {
        let spec = CheckSpec {
            datum: datum.into(),
            lattice: LatticeKind::SimplyConnected,
            fgl: fgl.clone(),
            cap,
            seed: 1,
            only: None,
        };
        println!("== {datum} {} cap {cap}", fgl.desc());
        for v in run_suite(&spec).unwrap() {
            if v.status == Status::Skipped {
                println!("  skip {}: {}", v.id, v.reason.unwrap_or_default());
            }
        }
    }
}
