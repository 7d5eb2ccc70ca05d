// The facet cover with no antipodal facets and the pair-split ridge
// covers for small d.
//
// Run with `cargo run --example sharp_covers`.

use antipode_lab::{cover_report, k_of_d, pair_split_ridge_cover, sharp_facet_cover};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", sharp_facet_cover(3)?);
    for d in 2..=8 {
        let r = cover_report(&sharp_facet_cover(d)?);
        println!(
            "facet cover d={d}: complete={} per-set {:?}",
            r.is_complete, r.per_set_self_antipodality
        );
    }
    for d in 2..=5 {
        let r = cover_report(&pair_split_ridge_cover(d)?);
        println!(
            "pair-split d={d}: complete={} max={} k(d)={}",
            r.is_complete,
            r.max_self_antipodality,
            k_of_d(d)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
