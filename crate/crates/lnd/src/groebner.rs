//! Buchberger Groebner-basis engine: normal-form reduction, reduced bases,
//! ideal membership, subalgebra membership with preimage extraction, and gcd
//! via ideal intersection.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::ring::RingSpec;

/// Default cap on S-polynomial reductions before a resource error.
pub const DEFAULT_STEP_BUDGET: u64 = 100_000;

/// Resource limits for basis computations. Exceeding a limit is reported as
/// a distinct error, never as a wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct GbLimits {
    pub step_budget: u64,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl GbLimits {
    pub fn with_steps(step_budget: u64) -> Self {
        GbLimits { step_budget }
    }
}

/// A reduced Groebner basis together with the order it was computed under.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    /// Normal form of `f` modulo this basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.generators, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Post-hoc self-certification: every pairwise S-polynomial reduces to
    /// zero modulo the basis. Independent of how the basis was constructed.
    pub fn verify(&self) -> bool {
        for i in 0..self.generators.len() {
            for j in (i + 1)..self.generators.len() {
                let s = s_polynomial(
                    &self.generators[i],
                    &self.generators[j],
                    &self.order,
                );
                if !reduce(&s, &self.generators, &self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Full normal form of `f` with respect to the divisor list `g` under `ord`:
/// no term of the result is divisible by any leading monomial of `g`.
pub fn reduce(f: &Polynomial, g: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let divisors: Vec<(Monomial, Rational, &Polynomial)> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let (m, c) = p.leading_term(ord).unwrap();
            (m, c, p)
        })
        .collect();
    let spec = f.spec().clone();
    let mut remainder = Polynomial::zero(&spec);
    let mut p = f.clone();
    'outer: while !p.is_zero() {
        let (pm, pc) = p.leading_term(ord).unwrap();
        for (gm, gc, gp) in &divisors {
            if let Some(m) = pm.div(gm) {
                let c = &pc / gc;
                p = &p - &gp.mul_term(&m, &c);
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the remainder.
        remainder = &remainder + &Polynomial::from_terms(&spec, [(pm.clone(), pc.clone())]);
        p = &p - &Polynomial::from_terms(&spec, [(pm, pc)]);
    }
    remainder
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(ord).unwrap();
    let (gm, gc) = g.leading_term(ord).unwrap();
    let l = fm.lcm(&gm);
    let a = f.mul_term(&l.div(&fm).unwrap(), &fc.recip());
    let b = g.mul_term(&l.div(&gm).unwrap(), &gc.recip());
    &a - &b
}

/// Buchberger's algorithm with the coprimality and chain criteria and the
/// normal selection strategy (smallest lcm first). Returns the reduced,
/// monic basis; zero generators are dropped and an empty input yields the
/// empty basis of the zero ideal.
pub fn buchberger(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    limits: GbLimits,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.primitive_part(ord));
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            generators: Vec::new(),
            order: ord.clone(),
            reduced: true,
        });
    }

    // Pending S-pairs keyed by their lcm for the normal strategy; the
    // (i, j) tie-break keeps selection deterministic.
    let mut pending: Vec<(Monomial, usize, usize)> = Vec::new();
    let lm = |p: &Polynomial| p.leading_monomial(ord).unwrap();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.push((lm(&basis[i]).lcm(&lm(&basis[j])), i, j));
        }
    }

    let mut steps: u64 = 0;
    while !pending.is_empty() {
        // Normal strategy: smallest lcm under the order.
        let mut best = 0;
        for k in 1..pending.len() {
            let (bm, bi, bj) = &pending[best];
            let (km, ki, kj) = &pending[k];
            match ord.compare(km, bm) {
                std::cmp::Ordering::Less => best = k,
                std::cmp::Ordering::Equal if (ki, kj) < (bi, bj) => best = k,
                _ => {}
            }
        }
        let (lcm_ij, i, j) = pending.swap_remove(best);

        let lmi = lm(&basis[i]);
        let lmj = lm(&basis[j]);
        // Coprimality criterion.
        if lmi.coprime(&lmj) {
            continue;
        }
        // Chain criterion: some k with lm(k) | lcm(i,j) and both (i,k) and
        // (j,k) already treated.
        let treated = |a: usize, b: usize, pending: &[(Monomial, usize, usize)]| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            !pending.iter().any(|&(_, i, j)| (i, j) == (a, b))
        };
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            if lm(&basis[k]).divides(&lcm_ij)
                && treated(i, k, &pending)
                && treated(j, k, &pending)
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }

        steps += 1;
        if steps > limits.step_budget {
            return Err(Error::StepBudgetExceeded {
                budget: limits.step_budget,
            });
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = reduce(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let r = r.primitive_part(ord);
        let new = basis.len();
        for k in 0..new {
            pending.push((lm(&basis[k]).lcm(&lm(&r)), k, new));
        }
        basis.push(r);
    }

    Ok(GroebnerBasis {
        generators: inter_reduce(basis, ord),
        order: ord.clone(),
        reduced: true,
    })
}

/// Inter-reduction: drop generators whose leading monomial is divisible by
/// another's, fully reduce each survivor against the others, and return the
/// monic basis sorted ascending by leading monomial.
fn inter_reduce(mut basis: Vec<Polynomial>, ord: &MonomialOrder) -> Vec<Polynomial> {
    // Minimalize by leading monomials.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_monomial(ord).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].leading_monomial(ord).unwrap();
            if lmj.divides(&lmi) && (lmj != lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();

    // Tail-reduce every element against the others until stable.
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let r = reduce(&basis[i], &others, ord);
            if r != basis[i] {
                debug_assert!(!r.is_zero());
                basis[i] = r.primitive_part(ord);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut monic: Vec<Polynomial> = basis.iter().map(|p| p.monic(ord)).collect();
    monic.sort_by(|a, b| {
        ord.compare(
            &a.leading_monomial(ord).unwrap(),
            &b.leading_monomial(ord).unwrap(),
        )
    });
    monic
}

/// True iff `f` lies in the ideal generated by `gens` (over the ambient
/// ring of `f`), decided by normal-form reduction against a reduced basis.
pub fn ideal_membership(f: &Polynomial, gens: &[Polynomial], limits: GbLimits) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let gb = buchberger(gens, &MonomialOrder::DegRevLex, limits)?;
    Ok(gb.contains(f))
}

/// Outcome of a subalgebra membership query.
///
/// When `member` holds, `preimage` is a polynomial in the base generators
/// and the tag variables `_t1, ..., _tk` (one per subalgebra generator, in
/// order) that reproduces the query exactly under substitution.
#[derive(Clone, Debug)]
pub struct MembershipCertificate {
    pub member: bool,
    pub preimage: Option<Polynomial>,
}

/// Decides membership in `Q[base ∪ gens]` for many queries against one
/// generator set: the elimination basis is computed once and reused.
pub struct SubalgebraTester {
    ambient: Arc<RingSpec>,
    extended: Arc<RingSpec>,
    gens: Vec<Polynomial>,
    gb: GroebnerBasis,
}

impl SubalgebraTester {
    /// Adjoins one tag per generator, forms the ideal `(g_i - _ti)`, and
    /// computes its basis under a block order whose first block is the
    /// ambient variables. Base generators are implicitly members.
    pub fn new(gens: &[Polynomial], spec: &Arc<RingSpec>, limits: GbLimits) -> Result<Self> {
        let gens: Vec<Polynomial> = gens.to_vec();
        let extended = spec.with_tags(gens.len());
        let order = MonomialOrder::eliminating(spec.var_indices(), extended.len());
        let mut ideal = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            let tag = Polynomial::generator(&extended, spec.len() + k);
            ideal.push(&g.lift_to(&extended) - &tag);
        }
        let gb = buchberger(&ideal, &order, limits)?;
        Ok(SubalgebraTester {
            ambient: spec.clone(),
            extended,
            gens,
            gb,
        })
    }

    /// The extended ring carrying the tag variables.
    pub fn tag_ring(&self) -> &Arc<RingSpec> {
        &self.extended
    }

    /// Membership with preimage: the normal form of the query must involve
    /// only base generators and tags.
    pub fn membership(&self, f: &Polynomial) -> MembershipCertificate {
        let nf = self.gb.reduce(&f.lift_to(&self.extended));
        let var_free = nf
            .terms()
            .all(|(m, _)| self.ambient.var_indices().all(|i| m.exponent(i) == 0));
        if var_free {
            MembershipCertificate {
                member: true,
                preimage: Some(nf),
            }
        } else {
            MembershipCertificate {
                member: false,
                preimage: None,
            }
        }
    }

    pub fn is_member(&self, f: &Polynomial) -> bool {
        self.membership(f).member
    }

    /// Substitutes the generators back into a preimage, returning an
    /// ambient-ring element. Used to cross-check preimage soundness.
    pub fn substitute_preimage(&self, preimage: &Polynomial) -> Result<Polynomial> {
        let mut images: Vec<Polynomial> = Vec::with_capacity(self.extended.len());
        for i in 0..self.ambient.len() {
            images.push(Polynomial::generator(&self.ambient, i));
        }
        for g in &self.gens {
            images.push(g.clone());
        }
        preimage.substitute(&self.ambient, &images)
    }
}

/// One-shot subalgebra membership of `f` in `Q[base ∪ gens]`.
pub fn subalgebra_membership(
    f: &Polynomial,
    gens: &[Polynomial],
    spec: &Arc<RingSpec>,
    limits: GbLimits,
) -> Result<MembershipCertificate> {
    Ok(SubalgebraTester::new(gens, spec, limits)?.membership(f))
}

/// True iff `Q[base ∪ gens1] = Q[base ∪ gens2]`, by mutual membership.
pub fn subalgebra_equal(
    gens1: &[Polynomial],
    gens2: &[Polynomial],
    spec: &Arc<RingSpec>,
    limits: GbLimits,
) -> Result<bool> {
    let t2 = SubalgebraTester::new(gens2, spec, limits)?;
    if gens1.iter().any(|g| !t2.is_member(g)) {
        return Ok(false);
    }
    let t1 = SubalgebraTester::new(gens1, spec, limits)?;
    Ok(gens2.iter().all(|g| t1.is_member(g)))
}

/// Generator of the principal ideal `(f) ∩ (g)`, monic under degrevlex.
/// Computed by eliminating one tag `t` from `(t*f, (1-t)*g)`.
pub fn lcm(f: &Polynomial, g: &Polynomial, limits: GbLimits) -> Result<Polynomial> {
    let spec = f.spec().clone();
    let extended = spec.with_tags(1);
    let tag = Polynomial::generator(&extended, extended.len() - 1);
    let one = Polynomial::one(&extended);
    let ideal = [
        &tag * &f.lift_to(&extended),
        &(&one - &tag) * &g.lift_to(&extended),
    ];
    let order = MonomialOrder::eliminating([extended.len() - 1], extended.len());
    let gb = buchberger(&ideal, &order, limits)?;
    let mut tag_free: Vec<&Polynomial> = gb
        .generators
        .iter()
        .filter(|p| p.terms().all(|(m, _)| m.exponent(extended.len() - 1) == 0))
        .collect();
    // The intersection of two principal ideals over a polynomial ring is
    // principal, so the elimination ideal's reduced basis is one element.
    debug_assert_eq!(tag_free.len(), 1);
    let generator = tag_free.pop().expect("principal intersection");
    let mut exps_back = Vec::new();
    for (m, c) in generator.terms() {
        exps_back.push((
            Monomial::new(m.exponents()[..spec.len()].to_vec()),
            c.clone(),
        ));
    }
    Ok(Polynomial::from_terms(&spec, exps_back))
}

/// Greatest common divisor via `gcd = f*g / lcm(f, g)`, normalized to
/// leading coefficient one under degrevlex.
pub fn gcd(f: &Polynomial, g: &Polynomial, limits: GbLimits) -> Result<Polynomial> {
    let ord = MonomialOrder::DegRevLex;
    if f.is_zero() && g.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    if f.is_zero() {
        return Ok(g.monic(&ord));
    }
    if g.is_zero() {
        return Ok(f.monic(&ord));
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(f.spec()));
    }
    let l = lcm(f, g, limits)?;
    let product = f * g;
    let q = product.exact_divide(&l)?;
    Ok(q.monic(&ord))
}

/// Gcd of a nonempty list, folding [`gcd`] and stopping early at one.
pub fn gcd_many(polys: &[Polynomial], limits: GbLimits) -> Result<Polynomial> {
    let mut iter = polys.iter().filter(|p| !p.is_zero());
    let first = iter.next().ok_or(Error::GcdOfZeros)?;
    let mut acc = first.monic(&MonomialOrder::DegRevLex);
    for p in iter {
        if acc.is_constant() {
            break;
        }
        acc = gcd(&acc, p, limits)?;
    }
    if acc.is_constant() {
        acc = Polynomial::one(first.spec());
    }
    Ok(acc)
}
