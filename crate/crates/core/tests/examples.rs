//! Every runnable example completes successfully.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(face_algebra, "face_algebra.rs");
example!(verify_cover, "verify_cover.rs");
example!(sharp_covers, "sharp_covers.rs");
example!(asterisk_cover, "asterisk_cover.rs");
example!(impossibility_search, "impossibility_search.rs");
example!(exhaustive_scans, "exhaustive_scans.rs");
example!(probe_d5, "probe_d5.rs");

#[test]
fn face_algebra_runs() {
    face_algebra::run_example().unwrap();
}

#[test]
fn verify_cover_runs() {
    verify_cover::run_example().unwrap();
}

#[test]
fn sharp_covers_runs() {
    sharp_covers::run_example().unwrap();
}

#[test]
fn asterisk_cover_runs() {
    asterisk_cover::run_example().unwrap();
}

#[test]
fn impossibility_search_runs() {
    impossibility_search::run_example().unwrap();
}

#[test]
fn exhaustive_scans_runs() {
    exhaustive_scans::run_example().unwrap();
}

#[test]
fn probe_d5_runs() {
    probe_d5::run_example().unwrap();
}
