// Parse a cover from the text format and print its verification report.
//
// Run with `cargo run --example verify_cover [path]`; without a path a
// built-in 3-set ridge cover of the 3-cube is used.

use antipode_lab::{cover_report, Cover};

const SAMPLE: &str = "\
d=3 codim=2 sets=3
X00,X01,0X0,0X1
X10,X11,1X0,1X1
00X,01X,10X,11X
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) if !path.starts_with('-') => std::fs::read_to_string(path)?,
        _ => SAMPLE.to_string(),
    };
    let cover = Cover::parse(&text)?;
    let report = cover_report(&cover);
    println!("complete: {}", report.is_complete);
    println!(
        "per-set self-antipodality: {:?}",
        report.per_set_self_antipodality
    );
    println!(
        "max {} (guaranteed: {:?})",
        report.max_self_antipodality, report.expected_k
    );
    if let Some(w) = report.witness {
        println!(
            "set {} holds antipodal {}-faces {} and {}",
            w.set_index + 1,
            w.pair.k,
            w.pair.sub_a,
            w.pair.sub_b
        );
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
