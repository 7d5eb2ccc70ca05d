// Budgeted search of the open case: a 5-set ridge cover of the 5-cube with
// no antipodal 2-faces in any set.
//
// Run with `cargo run --release --example probe_d5 [budget] [threads]`.

use antipode_lab::{probe_d5, Outcome, SearchOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let budget: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(100_000);
    let threads: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let result = probe_d5(SearchOptions::new(budget).with_threads(threads))?;
    println!(
        "{} after {} of {} nodes ({threads} threads)",
        result.outcome.label(),
        result.nodes_expanded,
        result.budget
    );
    match &result.outcome {
        Outcome::BudgetExhausted => println!("undecided within budget"),
        Outcome::Unsat => println!("search tree exhausted: every such cover has antipodal 2-faces"),
        Outcome::Witness(c) => print!("{c}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
