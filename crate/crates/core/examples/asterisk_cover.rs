// Four asterisk sets plus ceil(d/3) leftover sets: a ridge cover in which
// no set holds antipodal peaks.
//
// Run with `cargo run --example asterisk_cover [d]` (default d = 8).

use antipode_lab::{
    asterisk_ridge_cover, asterisk_vertices, block_lengths, cover_report, doubly_covered_count,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    let blocks = block_lengths(d)?;
    println!("blocks: {:?}", blocks.as_array());
    for (i, v) in asterisk_vertices(d)?.iter().enumerate() {
        println!("v{} = {v}", i + 1);
    }
    let rep = asterisk_ridge_cover(d)?;
    for (i, set) in rep.cover.sets().iter().enumerate().skip(4) {
        let faces: Vec<String> = set.faces().iter().map(|f| f.to_string()).collect();
        println!("A{}: {}", i + 1, faces.join(" "));
    }
    let report = cover_report(&rep.cover);
    println!(
        "doubly covered {} / leftover {} / formula {}",
        rep.doubly_covered,
        rep.leftover_count,
        doubly_covered_count(d)?
    );
    println!(
        "{} nonempty sets, d-set cover: {}, max self-antipodality {} (d-4 = {})",
        rep.nonempty_sets,
        rep.is_d_set_cover,
        report.max_self_antipodality,
        d as i32 - 4
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
