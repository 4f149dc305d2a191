//! The acceptance suite as a dedicated test target: one test per
//! criterion, each printing its pass line (run with `--nocapture` to
//! see them on success).

use equipart_cli::acceptance::criteria;

fn run(id: u32) {
    let list = criteria();
    let criterion = list.iter().find(|c| c.id == id).expect("criterion exists");
    match (criterion.run)() {
        Ok(()) => println!("PASS  criterion {}: {}", criterion.id, criterion.name),
        Err(detail) => panic!(
            "FAIL  criterion {}: {}: {detail}",
            criterion.id, criterion.name
        ),
    }
}

#[test]
fn criterion_1_eight_five_two_pipeline() {
    run(1);
}

#[test]
fn criterion_2_five_three_pipeline() {
    run(2);
}

#[test]
fn criterion_3_state_machine_ground_truth() {
    run(3);
}

#[test]
fn criterion_4_counting_suite() {
    run(4);
}

#[test]
fn criterion_5_type_parity() {
    run(5);
}

#[test]
fn criterion_6_closed_form_cross_check() {
    run(6);
}

#[test]
fn criterion_7_ideal_membership_suite() {
    run(7);
}

#[test]
fn criterion_8_invariance_suite() {
    run(8);
}

#[test]
fn criterion_9_novel_output_determinism() {
    run(9);
}
