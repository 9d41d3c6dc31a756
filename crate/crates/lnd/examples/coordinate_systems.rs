//! Coordinate-system certificates: the Jacobian pre-filter, the membership
//! sufficiency check, inverse extraction, Gamma_D membership, and rank
//! upper bounds.

use lnd::automorphism::{check_coordinate_system, in_gamma_d, rank_upper_bound, CoordCheck};
use lnd::derivation::Derivation;
use lnd::groebner::GbLimits;
use lnd::parse::parse;
use lnd::ring::RingSpec;

fn main() -> lnd::Result<()> {
    let limits = GbLimits::default();
    let ring = RingSpec::new(["X"], ["T", "Y", "Z"])?;
    let d = Derivation::new(
        &ring,
        [
            ("Y".to_string(), parse("X", &ring)?),
            ("Z".to_string(), parse("Y", &ring)?),
        ],
    )?;

    let coords = vec![
        parse("T - Y^2 + 2*X*Z", &ring)?,
        parse("Y", &ring)?,
        parse("Z", &ring)?,
    ];
    match check_coordinate_system(&coords, &ring, limits)? {
        CoordCheck::Certificate(cert) => {
            println!("(T', Y, Z) is a coordinate system");
            println!("jacobian determinant: {}", cert.jacobian_det);
            println!("inverse endomorphism:");
            for (name, image) in cert.inverse.images() {
                println!("  {name} -> {image}");
            }
            println!("rank upper bound from it: {}", rank_upper_bound(&d, &cert)?);
        }
        CoordCheck::NotCoordinateSystem(reason) => println!("refuted: {reason}"),
    }

    // The Jacobian pre-filter rejects (X*T, Y, Z) before any basis work.
    let scaled = vec![parse("X*T", &ring)?, parse("Y", &ring)?, parse("Z", &ring)?];
    match check_coordinate_system(&scaled, &ring, limits)? {
        CoordCheck::NotCoordinateSystem(reason) => println!("(X*T, Y, Z): {reason}"),
        CoordCheck::Certificate(_) => unreachable!(),
    }

    // Gamma_D membership at rank 2: the first n - r entries must be
    // annihilated.
    for tuple in [
        vec![parse("T", &ring)?, parse("Y", &ring)?, parse("Z", &ring)?],
        coords.clone(),
        vec![parse("Y", &ring)?, parse("T", &ring)?, parse("Z", &ring)?],
    ] {
        let shown: Vec<String> = tuple.iter().map(|p| p.to_string()).collect();
        let verdict = in_gamma_d(&d, &tuple, 2, limits)?;
        println!("({}) in Gamma_D at rank 2: {}", shown.join(", "), verdict.is_member());
    }
    Ok(())
}
