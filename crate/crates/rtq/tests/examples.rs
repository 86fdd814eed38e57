//! Every runnable example also runs as a test.

macro_rules! example {
    ($m:ident, $file:literal) => {
        mod $m {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(polynomials, "polynomials.rs");
example!(twist_words, "twist_words.rs");
example!(arc_diagram, "arc_diagram.rs");
example!(windings_calibration, "windings_calibration.rs");
example!(quiver_ten_three, "quiver_ten_three.rs");
example!(poincare_oracle, "poincare_oracle.rs");
example!(verify_sweep, "verify_sweep.rs");
example!(almost_reduction, "almost_reduction.rs");

#[test]
fn polynomials_example_runs() {
    polynomials::run_example().unwrap();
}

#[test]
fn twist_words_example_runs() {
    twist_words::run_example().unwrap();
}

#[test]
fn arc_diagram_example_runs() {
    arc_diagram::run_example().unwrap();
}

#[test]
fn windings_calibration_example_runs() {
    windings_calibration::run_example().unwrap();
}

#[test]
fn quiver_ten_three_example_runs() {
    quiver_ten_three::run_example().unwrap();
}

#[test]
fn poincare_oracle_example_runs() {
    poincare_oracle::run_example().unwrap();
}

#[test]
fn verify_sweep_example_runs() {
    verify_sweep::run_example().unwrap();
}

#[test]
fn almost_reduction_example_runs() {
    almost_reduction::run_example().unwrap();
}
