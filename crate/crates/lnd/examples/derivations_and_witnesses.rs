//! Derivations: Leibniz application, nilpotency witnesses, local-nilpotency
//! certificates, triangularity in given coordinates, and irreducibility.

use lnd::derivation::{Derivation, LndCheck, DEFAULT_NILPOTENCY_CAP};
use lnd::groebner::GbLimits;
use lnd::parse::parse;
use lnd::ring::RingSpec;

fn main() -> lnd::Result<()> {
    // D = X^3 d/dS + S d/dT + T d/dU + X^2 d/dV on Q[X,S,T,U,V].
    let ring = RingSpec::new([], ["X", "S", "T", "U", "V"])?;
    let d = Derivation::new(
        &ring,
        [
            ("S".to_string(), parse("X^3", &ring)?),
            ("T".to_string(), parse("S", &ring)?),
            ("U".to_string(), parse("T", &ring)?),
            ("V".to_string(), parse("X^2", &ring)?),
        ],
    )?;

    let w = parse("S - X*V", &ring)?;
    println!("D(S - X*V) = {}", d.apply(&w)?);
    println!("D(U) = {}", d.apply(&parse("U", &ring)?)?);

    match d.certify_lnd(DEFAULT_NILPOTENCY_CAP) {
        LndCheck::Certified(cert) => {
            println!("locally nilpotent; witnesses per variable:");
            for (var, steps) in cert.witnesses() {
                println!("  D^{steps}({var}) = 0");
            }
        }
        LndCheck::Unknown { cap, .. } => println!("unknown at cap {cap}"),
    }

    let limits = GbLimits::default();
    let coords: Vec<_> = ["S", "T", "U", "V", "X"]
        .iter()
        .map(|n| parse(n, &ring))
        .collect::<lnd::Result<_>>()?;
    println!(
        "triangular in (S, T, U, V, X): {}",
        d.is_triangular_in(&coords, limits)?
    );

    let cert = d.is_irreducible(limits)?;
    println!(
        "irreducible: {} (gcd of the images: {})",
        cert.irreducible, cert.gcd
    );

    // A derivation that is not locally nilpotent stays Unknown at any cap.
    let line = RingSpec::new([], ["Y"])?;
    let euler = Derivation::new(&line, [("Y".to_string(), parse("Y", &line)?)])?;
    match euler.certify_lnd(64) {
        LndCheck::Certified(_) => unreachable!(),
        LndCheck::Unknown { missing, cap, .. } => {
            println!("Y d/dY: no witness for {} at cap {cap}", missing.join(", "));
        }
    }
    Ok(())
}
