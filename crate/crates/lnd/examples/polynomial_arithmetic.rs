//! Exact sparse polynomial arithmetic: parsing, canonical formatting,
//! arithmetic, exact division, partial derivatives, and leading terms.

use lnd::order::MonomialOrder;
use lnd::parse::parse;
use lnd::poly::Polynomial;
use lnd::ring::RingSpec;

fn main() -> lnd::Result<()> {
    // B = Q[X][T, Y, Z]: X generates the base ring A, the rest are
    // coordinates of B over A.
    let ring = RingSpec::new(["X"], ["T", "Y", "Z"])?;
    println!("ring: {ring}");

    let f = parse("T - Y^2 + 2*X*Z", &ring)?;
    println!("parsed and reprinted canonically: {f}");

    let g = parse("(Y + 1)^2 - Y^2 - 2*Y", &ring)?;
    println!("(Y + 1)^2 - Y^2 - 2*Y = {g}");

    let y2 = parse("Y^2 - 2*X*Z", &ring)?;
    println!("(Y^2 - 2*X*Z) + 2*X*Z = {}", &y2 + &parse("2*X*Z", &ring)?);

    let quotient = parse("X^3*Y", &ring)?.exact_divide(&parse("X^2", &ring)?)?;
    println!("X^3*Y / X^2 = {quotient}");
    match y2.exact_divide(&parse("X", &ring)?) {
        Ok(_) => unreachable!(),
        Err(e) => println!("Y^2 - 2*X*Z by X: {e}"),
    }

    println!("d/dY (Y^2 - 2*X*Z) = {}", y2.partial_derivative("Y")?);
    println!("d/dZ (T - Y^2 + 2*X*Z) = {}", f.partial_derivative("Z")?);

    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        let (m, c) = f.leading_term(&order)?;
        let lead = Polynomial::from_terms(&ring, [(m, c)]);
        println!("leading term under {order:?}: {lead}");
    }
    Ok(())
}
