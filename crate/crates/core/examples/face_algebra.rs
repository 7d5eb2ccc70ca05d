// Coordinate representation, antipodes and antipodality degree.
//
// Run with `cargo run --example face_algebra`.

use antipode_lab::{count_faces, enumerate_faces, Face};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let square = Face::parse("XX1", 3)?;
    let verts: Vec<String> = square.vertices().iter().map(|v| v.to_string()).collect();
    println!(
        "{square} has dimension {} and vertices {}",
        square.dim(),
        verts.join(" ")
    );

    let ridge = Face::parse("XXX00", 5)?;
    println!("antipode of {ridge} is {}", ridge.antipode());

    for (a, b) in [("XXX10", "XX0X1"), ("XXX10", "XX1X0"), ("XXX10", "X11XX")] {
        let (fa, fb) = (Face::parse(a, 5)?, Face::parse(b, 5)?);
        let k = fa.antipodality_degree(&fb)?;
        match fa.antipodal_subfaces(&fb)? {
            Some((g, h)) => println!("{a} ~ {b}: degree {k}, realised by {g} / {h}"),
            None => println!("{a} ~ {b}: degree {k}, no antipodal subfaces"),
        }
    }

    let meet = Face::parse("XXX00", 5)?.intersect(&Face::parse("XX0X0", 5)?)?;
    println!("XXX00 ∩ XX0X0 = {meet}");

    for d in 2..=6 {
        let ridges = enumerate_faces(d, d as i32 - 2)?;
        println!(
            "C^{d}: {} ridges (closed form {}), {} edges",
            ridges.len(),
            2 * d * (d - 1),
            count_faces(d, 1)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
