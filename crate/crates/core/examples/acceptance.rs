//! Runs every acceptance criterion and prints one line each.

use projsym::suite::run_all;

fn main() {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{}", o.line());
        for note in &o.report.notes {
            println!("    {note}");
        }
    }
    let failed = outcomes.iter().filter(|o| !o.report.passed).count();
    println!("{} of {} criteria pass", outcomes.len() - failed, outcomes.len());
}
