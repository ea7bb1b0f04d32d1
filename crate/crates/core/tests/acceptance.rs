use projsym::suite::{criterion, run_one};

fn gate(id: usize) {
    let c = criterion(id).expect("known criterion");
    let outcome = run_one(c);
    println!("{}", outcome.line());
    for note in &outcome.report.notes {
        println!("    note: {note}");
    }
    for f in &outcome.report.failures {
        println!("    failure: {f}");
    }
    assert!(outcome.report.passed, "criterion {id} failed: {:?}", outcome.report.failures);
}

#[test]
fn criterion_01_inverse_pair() {
    gate(1);
}

#[test]
fn criterion_02_equivariance() {
    gate(2);
}

#[test]
fn criterion_03_second_order_closed_forms() {
    gate(3);
}

#[test]
fn criterion_04_coefficient_recurrences() {
    gate(4);
}

#[test]
fn criterion_05_projective_cocycle() {
    gate(5);
}

#[test]
fn criterion_06_first_order_correction() {
    gate(6);
}

#[test]
fn criterion_07_second_order_correction() {
    gate(7);
}

#[test]
fn criterion_08_classification() {
    gate(8);
}

#[test]
fn criterion_09_star_product() {
    gate(9);
}

#[test]
fn criterion_10_intertwiners() {
    gate(10);
}

#[test]
fn criterion_11_geodesic() {
    gate(11);
}

#[test]
fn criterion_12_one_dimension() {
    gate(12);
}
