// Exhaustive search certifying that small cubes force antipodal pairs.
//
// Run with `cargo run --release --example impossibility_search`.

use antipode_lab::{cover_report, exists_cover, Outcome, SearchOptions, SearchProblem};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        // (d, sets, forbid_k)
        (2, 2, 0),
        (3, 3, 0),
        (3, 3, 1),
        (4, 4, 1),
        (4, 4, 2),
        (5, 5, 3),
    ];
    for (d, n, k) in cases {
        let problem = SearchProblem::new(d, n, 2, k)?;
        let result = exists_cover(&problem, SearchOptions::new(1_000_000_000))?;
        println!(
            "d={d} sets={n} forbid antipodal {k}-faces: {} after {} nodes",
            result.outcome.label(),
            result.nodes_expanded
        );
        if let Outcome::Witness(cover) = &result.outcome {
            let r = cover_report(cover);
            println!("  witness re-verified: {}", r.avoids(k));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
