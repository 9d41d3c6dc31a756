//! The Groebner engine: reduced bases, ideal membership, subalgebra
//! membership with preimage extraction, and gcd via ideal intersection.

use lnd::groebner::{buchberger, gcd, ideal_membership, GbLimits, SubalgebraTester};
use lnd::order::MonomialOrder;
use lnd::parse::parse;
use lnd::ring::RingSpec;

fn main() -> lnd::Result<()> {
    let limits = GbLimits::default();

    // The twisted cubic: eliminating X from (Y - X^2, Z - X^3) under lex.
    let ring = RingSpec::new([], ["X", "Y", "Z"])?;
    let gens = [parse("Y - X^2", &ring)?, parse("Z - X^3", &ring)?];
    let gb = buchberger(&gens, &MonomialOrder::Lex, limits)?;
    println!("reduced lex basis of the twisted cubic ideal:");
    for g in &gb.generators {
        println!("  {g}");
    }
    println!("self-certified (all S-polynomials reduce to zero): {}", gb.verify());

    let membership_gens = [parse("Y - X^2", &ring)?, parse("Z", &ring)?];
    let query = parse("X^2*Y - X^4 + Z", &ring)?;
    println!(
        "X^2*(Y - X^2) + Z in (Y - X^2, Z): {}",
        ideal_membership(&query, &membership_gens, limits)?
    );
    println!(
        "1 in (X, Y): {}",
        ideal_membership(&parse("1", &ring)?, &[parse("X", &ring)?, parse("Y", &ring)?], limits)?
    );

    // Subalgebra membership with preimages: S = (S - XV) + X*V.
    let five = RingSpec::new([], ["X", "S", "T", "U", "V"])?;
    let algebra_gens = [
        parse("X", &five)?,
        parse("S - X*V", &five)?,
        parse("T", &five)?,
        parse("U", &five)?,
        parse("V", &five)?,
    ];
    let tester = SubalgebraTester::new(&algebra_gens, &five, limits)?;
    let cert = tester.membership(&parse("S", &five)?);
    println!("S is a member: {}", cert.member);
    let preimage = cert.preimage.unwrap();
    println!("preimage in tag variables: {preimage}");
    println!("substituting back: {}", tester.substitute_preimage(&preimage)?);

    println!(
        "gcd(X^3, X^2) = {}",
        gcd(&parse("X^3", &ring)?, &parse("X^2", &ring)?, limits)?
    );
    println!(
        "gcd(X, Y) = {}",
        gcd(&parse("X", &ring)?, &parse("Y", &ring)?, limits)?
    );
    Ok(())
}
