// The small exhaustive scans: antipode-free edge sets of the 3-cube,
// six-ridge sets of the 4-cube and their disjoint covers.
//
// Run with `cargo run --release --example exhaustive_scans`.

use antipode_lab::search::{c3_edge_lemma_scan, disjoint_special_sets_scan};
use antipode_lab::{classify_six_ridge_set, enumerate_antipode_free_sets, SixRidgeShape};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let scan = c3_edge_lemma_scan();
    println!(
        "C^3: {} of {} edge subsets with >= 4 edges are antipode-free; all bound a 2-face: {}",
        scan.antipode_free_large.len(),
        scan.subsets_scanned,
        scan.all_bound_a_two_face
    );

    let sets = enumerate_antipode_free_sets(4, 2, 1, 6)?;
    let mut facets = 0;
    let mut asterisks = 0;
    for s in &sets {
        match classify_six_ridge_set(s)? {
            SixRidgeShape::FacetBoundary(f) => {
                facets += 1;
                println!("  facet boundary of {f}");
            }
            SixRidgeShape::Asterisk(v) => {
                asterisks += 1;
                println!("  asterisk of {v}");
            }
            SixRidgeShape::Other => println!("  unexpected shape"),
        }
    }
    println!(
        "C^4: {} six-ridge sets, {facets} facet boundaries, {asterisks} asterisks",
        sets.len()
    );

    let disjoint = disjoint_special_sets_scan()?;
    println!(
        "{} quadruples of special sets, {} disjoint covers",
        disjoint.combinations, disjoint.disjoint_covers
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
