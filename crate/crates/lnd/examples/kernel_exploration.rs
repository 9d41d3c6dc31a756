//! Kernel exploration: the degree-bounded kernel oracle, local slices,
//! Dixmier images with denominator clearing, and the bounded generator
//! rounds, on one kernel that is finitely generated and one that is not.

use std::path::PathBuf;

use lnd::derivation::DEFAULT_NILPOTENCY_CAP;
use lnd::kernel::{
    dixmier_image, find_local_slice, kernel_basis_up_to_degree, kernel_generator_rounds,
    RoundsOptions, RoundsOutcome,
};
use lnd::parse::parse;
use lnd::specfile::SpecFile;

fn main() -> lnd::Result<()> {
    let corpus = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus");

    // DY = X, DZ = Y over Q[X]: the kernel is Q[X][Y^2 - 2XZ].
    let file = SpecFile::load(&corpus.join("rank-two-rigid.lnd"))?;
    let d = file.select_derivation(None)?.clone();
    let cert = d.certify_lnd(DEFAULT_NILPOTENCY_CAP).certified().unwrap();

    let basis = kernel_basis_up_to_degree(&d, 2, 50_000)?;
    println!("kernel elements of degree <= 2 (dimension {}):", basis.dimension());
    for b in &basis.basis {
        println!("  {b}");
    }

    let slice = find_local_slice(&cert, 3)?;
    println!("local slice: D({}) = {}", slice.element(), slice.image());

    let z = dixmier_image(&cert, &slice, &parse("Z", file.ring())?)?;
    println!(
        "Dixmier image of Z: {} / {}^{}",
        z.numerator,
        slice.image(),
        z.a_power
    );

    match kernel_generator_rounds(&cert, 4, 4, RoundsOptions::default())? {
        RoundsOutcome::Stabilized {
            generators,
            rounds_run,
        } => {
            println!("rounds stabilized after round {rounds_run}; generators:");
            for g in &generators {
                println!("  {g}");
            }
        }
        RoundsOutcome::NonStabilized { .. } => unreachable!(),
    }

    // The five-variable example: the kernel is not finitely generated, and
    // the oracle cross-check refuses to report stabilization.
    let file = SpecFile::load(&corpus.join("non-fg-kernel.lnd"))?;
    let d = file.select_derivation(None)?.clone();
    let cert = d.certify_lnd(DEFAULT_NILPOTENCY_CAP).certified().unwrap();
    match kernel_generator_rounds(&cert, 6, 6, RoundsOptions::default())? {
        RoundsOutcome::NonStabilized {
            rounds_run,
            missing_kernel_element,
            generators,
        } => {
            println!("five-variable example: non-stabilized at round {rounds_run}");
            println!("candidates so far: {}", generators.len());
            if let Some(witness) = missing_kernel_element {
                println!("kernel element outside the candidates: {witness}");
            }
        }
        RoundsOutcome::Stabilized { .. } => unreachable!(),
    }
    Ok(())
}
