//! The full non-rigidity flow on the bundled triangular example: two
//! Gamma_D tuples whose kernel prefixes generate different subalgebras.

use std::path::PathBuf;

use lnd::automorphism::{check_rigidity_pair, RigidityVerdict};
use lnd::groebner::GbLimits;
use lnd::specfile::SpecFile;

fn main() -> lnd::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join("triangular-non-rigid.lnd");
    let file = SpecFile::load(&path)?;
    let d = file.select_derivation(None)?;
    println!("ring: {}", file.ring());
    for (name, image) in d.images() {
        println!("D({name}) = {image}");
    }

    let t1 = file.tuple("t1")?;
    let t2 = file.tuple("t2")?;
    println!("tuple t1 prefix: {}", t1[0]);
    println!("tuple t2 prefix: {}", t2[0]);

    match check_rigidity_pair(d, t1, t2, 2, GbLimits::default())? {
        RigidityVerdict::NonRigidity(cert) => {
            println!(
                "non-rigidity certificate: {} (from tuple {}) is not in the \
                 subalgebra generated by the prefix of tuple {}",
                cert.element, cert.from_tuple, cert.not_in_prefix_of
            );
        }
        RigidityVerdict::Consistent => println!("consistent"),
    }

    // Identical tuples are trivially consistent.
    match check_rigidity_pair(d, t1, t1, 2, GbLimits::default())? {
        RigidityVerdict::Consistent => println!("t1 against itself: consistent"),
        RigidityVerdict::NonRigidity(_) => unreachable!(),
    }
    Ok(())
}
