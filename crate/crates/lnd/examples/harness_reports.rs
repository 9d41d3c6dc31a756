//! Instance harnesses: rigidity pairs with the fraction-field rank probe,
//! and the triangular first-coordinate observables.

use std::path::PathBuf;

use lnd::groebner::GbLimits;
use lnd::parse::parse;
use lnd::rigidity::{rigidity_harness, triangulability_harness};
use lnd::specfile::SpecFile;

fn main() -> lnd::Result<()> {
    let limits = GbLimits::default();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join("triangular-non-rigid.lnd");
    let file = SpecFile::load(&path)?;
    let d = file.select_derivation(None)?;
    let t1 = file.tuple("t1")?.to_vec();
    let t2 = file.tuple("t2")?.to_vec();

    let report = rigidity_harness(d, &[(t1.clone(), t2.clone())], 2, limits)?;
    println!("rigidity harness at rank 2:");
    println!("  pairs consistent: {}", report.all_consistent());
    if let Some(slice) = &report.k_side_slice {
        println!(
            "  over K = frac(A) the image D({}) = {} becomes invertible: rank collapses to 1",
            slice.element(),
            slice.image()
        );
    }
    println!(
        "  rank-equality hypothesis violated on this instance: {}",
        report.rank_hypothesis_violated
    );

    // Triangulability observables for the triangular system (T', Y, Z) and
    // the kernel variable T: the first coordinate is annihilated, but the
    // base lines Q[X][T] and Q[X][T'] differ.
    let report = triangulability_harness(d, &t2, "T", limits)?;
    println!("triangulability harness on (T', Y, Z):");
    println!("  system is triangular: {}", report.triangular);
    println!("  D(first coordinate) = {}", report.first_coordinate_image);
    println!("  base lines equal: {}", report.base_lines_equal);
    println!(
        "  rank-equality hypothesis violated: {}",
        report.rank_hypothesis_violated
    );

    // A triangular system whose first coordinate is NOT annihilated: its
    // nonzero base image is itself a local-slice witness.
    let spec = file.ring();
    let moved = vec![parse("Y", spec)?, parse("T", spec)?, parse("Z", spec)?];
    let report = triangulability_harness(d, &moved, "T", limits)?;
    println!("triangulability harness on (Y, T, Z):");
    if let Some(slice) = &report.rank_collapse_slice {
        println!(
            "  first coordinate is a local slice: D({}) = {}",
            slice.element(),
            slice.image()
        );
    }
    println!("  base lines equal: {}", report.base_lines_equal);
    Ok(())
}
