//! Dixmier exponentials: exp(f*D) for a certified locally nilpotent D and a
//! kernel element f, with composition and exact inversion.

use lnd::automorphism::exp;
use lnd::derivation::{Derivation, DEFAULT_NILPOTENCY_CAP};
use lnd::parse::parse;
use lnd::poly::Polynomial;
use lnd::ring::RingSpec;

fn main() -> lnd::Result<()> {
    let ring = RingSpec::new(["X"], ["T", "Y", "Z"])?;
    let d = Derivation::new(
        &ring,
        [
            ("Y".to_string(), parse("X", &ring)?),
            ("Z".to_string(), parse("Y", &ring)?),
        ],
    )?;
    let cert = d
        .certify_lnd(DEFAULT_NILPOTENCY_CAP)
        .certified()
        .expect("triangular derivations certify");

    let phi = exp(&cert, &Polynomial::one(&ring))?;
    println!("exp(D) sends:");
    for (name, image) in phi.images() {
        println!("  {name} -> {image}");
    }

    let inverse = exp(&cert, &parse("-1", &ring)?)?;
    let round_trip = phi.compose(&inverse)?;
    println!("exp(D) o exp(-D) is the identity: {}", round_trip.is_identity());

    // Any kernel element works as the multiplier; T' is one.
    let tprime = parse("T - Y^2 + 2*X*Z", &ring)?;
    let psi = exp(&cert, &tprime)?;
    println!("exp(T'*D) sends Z to {}", psi.image(2));

    // Ring homomorphism: products are preserved exactly.
    let g = parse("T + Y*Z", &ring)?;
    let h = parse("Z^2 - X", &ring)?;
    let preserved = psi.apply(&(&g * &h))? == &psi.apply(&g)? * &psi.apply(&h)?;
    println!("products preserved exactly: {preserved}");

    // Non-kernel multipliers are rejected with the offending image.
    match exp(&cert, &parse("Y", &ring)?) {
        Err(e) => println!("exp(Y*D): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
