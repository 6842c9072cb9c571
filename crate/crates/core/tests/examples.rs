#![allow(dead_code)]

macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(rearrangement, "rearrangement.rs");
example!(orlicz, "orlicz.rs");
example!(envelope, "envelope.rs");
example!(chong_majorant, "chong_majorant.rs");
example!(n_function, "n_function.rs");
example!(summable_scaler, "summable_scaler.rs");
example!(dvp_certificate, "dvp_certificate.rs");
example!(fixtures, "fixtures.rs");
example!(uniform_integrability, "uniform_integrability.rs");

#[test]
fn rearrangement_example_runs() {
    rearrangement::run_example().expect("rearrangement example");
}

#[test]
fn orlicz_example_runs() {
    orlicz::run_example().expect("orlicz example");
}

#[test]
fn envelope_example_runs() {
    envelope::run_example().expect("envelope example");
}

#[test]
fn chong_majorant_example_runs() {
    chong_majorant::run_example().expect("majorant example");
}

#[test]
fn n_function_example_runs() {
    n_function::run_example().expect("n-function example");
}

#[test]
fn summable_scaler_example_runs() {
    summable_scaler::run_example().expect("scaler example");
}

#[test]
fn dvp_certificate_example_runs() {
    dvp_certificate::run_example().expect("certificate example");
}

#[test]
fn fixtures_example_runs() {
    fixtures::run_example().expect("fixtures example");
}

#[test]
fn uniform_integrability_example_runs() {
    uniform_integrability::run_example().expect("uniform integrability example");
}
