//! Kernel exploration: a degree-bounded linear-algebra kernel oracle, local
//! slice search, Dixmier images with denominator clearing, and bounded
//! kernel-generator rounds. The rounds are a semi-decision procedure: the
//! kernel of a locally nilpotent derivation need not be finitely generated,
//! so stabilization is only ever reported together with an oracle cross-check.


use num_bigint::BigInt;
use num_traits::One;

use crate::derivation::{Derivation, LndCertified};
use crate::error::{Error, Result};
use crate::groebner::{GbLimits, SubalgebraTester};
use crate::linalg::{Echelon, SparseVec};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rational};

pub const DEFAULT_ROUNDS: usize = 6;
pub const DEFAULT_ORACLE_DEGREE: u64 = 6;
pub const DEFAULT_SLICE_DEGREE_CAP: u64 = 3;
/// Cap on the number of monomial columns the kernel oracle will echelonize.
pub const DEFAULT_DIMENSION_BUDGET: usize = 50_000;

/// All monomials of total degree at most `d` on `len` generators, in
/// ascending degree and descending lexicographic order within each degree.
pub fn monomials_up_to_degree(len: usize, d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; len];
    for degree in 0..=d {
        fill(&mut out, &mut current, 0, degree as u32, len);
    }
    return out;

    fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, slot: usize, left: u32, len: usize) {
        if slot + 1 == len {
            current[slot] = left;
            out.push(Monomial::new(current.clone()));
            current[slot] = 0;
            return;
        }
        for e in (0..=left).rev() {
            current[slot] = e;
            fill(out, current, slot + 1, left - e, len);
        }
        current[slot] = 0;
    }
}

fn count_monomials(len: usize, d: u64) -> Option<usize> {
    // C(d + len, len), guarded against overflow.
    let mut value: u128 = 1;
    for i in 1..=(len as u128) {
        value = value.checked_mul(d as u128 + i)?.checked_div(i)?;
        if value > usize::MAX as u128 {
            return None;
        }
    }
    Some(value as usize)
}

/// A basis of `ker D` intersected with the polynomials of total degree at
/// most `degree_bound` (all generators counted).
#[derive(Clone, Debug)]
pub struct KernelBasis {
    pub degree_bound: u64,
    pub basis: Vec<Polynomial>,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// True when some basis element is a scalar multiple of `f`.
    pub fn contains_multiple_of(&self, f: &Polynomial) -> bool {
        self.basis.iter().any(|b| {
            if b.term_count() != f.term_count() || f.is_zero() {
                return false;
            }
            let (m, c) = f.terms().next().unwrap();
            let ratio = b.coefficient(m);
            if ratio.numer() == &BigInt::from(0) {
                return false;
            }
            let factor = ratio / c;
            b == &f.scale(&factor)
        })
    }
}

/// Treats `D` as a linear map on the finite-dimensional space of polynomials
/// of total degree at most `d` and returns a basis of its null space.
/// Deterministic: columns are enumerated in graded lexicographic order and
/// pivots at the smallest monomial key.
pub fn kernel_basis_up_to_degree(
    derivation: &Derivation,
    d: u64,
    dimension_budget: usize,
) -> Result<KernelBasis> {
    let spec = derivation.spec();
    let needed = count_monomials(spec.len(), d).unwrap_or(usize::MAX);
    if needed > dimension_budget {
        return Err(Error::DimensionBudgetExceeded {
            needed,
            budget: dimension_budget,
        });
    }
    let columns = monomials_up_to_degree(spec.len(), d);
    let mut echelon: Echelon<Monomial> = Echelon::new();
    let mut basis = Vec::new();
    for (j, m) in columns.iter().enumerate() {
        let poly = Polynomial::from_terms(spec, [(m.clone(), Rational::one())]);
        let image = derivation.apply(&poly)?;
        let vector: SparseVec<Monomial> =
            image.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
        if let Some(combo) = echelon.insert(j, vector) {
            let kernel_poly = Polynomial::from_terms(
                spec,
                combo
                    .into_iter()
                    .map(|(i, c)| (columns[i].clone(), c)),
            );
            debug_assert!(derivation.apply(&kernel_poly).unwrap().is_zero());
            basis.push(kernel_poly);
        }
    }
    Ok(KernelBasis {
        degree_bound: d,
        basis,
    })
}

/// An element `s` with `D(s) = a != 0` and `D(a) = 0`: a slice after
/// inverting `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSlice {
    s: Polynomial,
    a: Polynomial,
}

impl LocalSlice {
    /// Validates the defining identities before construction.
    pub fn new(derivation: &Derivation, s: Polynomial, a: Polynomial) -> Result<LocalSlice> {
        if a.is_zero() {
            return Err(Error::InvalidSlice("slice image is zero".into()));
        }
        if derivation.apply(&s)? != a {
            return Err(Error::InvalidSlice(format!(
                "D({s}) is not {a}"
            )));
        }
        if !derivation.apply(&a)?.is_zero() {
            return Err(Error::InvalidSlice(format!(
                "slice image {a} is not in the kernel"
            )));
        }
        Ok(LocalSlice { s, a })
    }

    pub fn element(&self) -> &Polynomial {
        &self.s
    }

    pub fn image(&self) -> &Polynomial {
        &self.a
    }
}

/// Searches the variables first, then monomials of total degree at most
/// `degree_cap` in graded lexicographic order, for `s` with `D(s) != 0` and
/// `D(D(s)) = 0`. Returns the first hit.
pub fn find_local_slice(certified: &LndCertified, degree_cap: u64) -> Result<LocalSlice> {
    let derivation = certified.derivation();
    let spec = certified.spec();
    let try_candidate = |s: Polynomial| -> Result<Option<LocalSlice>> {
        let a = derivation.apply(&s)?;
        if !a.is_zero() && derivation.apply(&a)?.is_zero() {
            return Ok(Some(LocalSlice { s, a }));
        }
        Ok(None)
    };
    for i in 0..spec.var_count() {
        if let Some(slice) = try_candidate(Polynomial::generator(spec, spec.var_index(i)))? {
            return Ok(slice);
        }
    }
    for m in monomials_up_to_degree(spec.len(), degree_cap) {
        if m.is_unit() || m.total_degree() == 1 {
            continue;
        }
        let candidate = Polynomial::from_terms(spec, [(m, Rational::one())]);
        if let Some(slice) = try_candidate(candidate)? {
            return Ok(slice);
        }
    }
    Err(Error::SliceNotFound { degree_cap })
}

/// A kernel element presented as `numerator / a^a_power`, with the numerator
/// primitive (coprime integer coefficients, positive leading coefficient
/// under degrevlex) and the power minimal. The value is defined up to a
/// positive rational scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DixmierImage {
    pub numerator: Polynomial,
    pub a_power: usize,
}

/// The Dixmier projection attached to a local slice:
/// `pi(f) = sum_i (-1)^i D^i(f) s^i / (i! a^i)`, a finite sum by local
/// nilpotency, brought to lowest a-power form. The numerator is always a
/// kernel element.
pub fn dixmier_image(
    certified: &LndCertified,
    slice: &LocalSlice,
    f: &Polynomial,
) -> Result<DixmierImage> {
    // Re-validate: the slice may have been built against another derivation.
    let slice = LocalSlice::new(certified.derivation(), slice.s.clone(), slice.a.clone())?;
    let spec = certified.spec().clone();
    if f.is_zero() {
        return Ok(DixmierImage {
            numerator: Polynomial::zero(&spec),
            a_power: 0,
        });
    }
    let iterates = certified.iterates(f)?;
    let top = iterates.len() - 1;
    let mut numerator = Polynomial::zero(&spec);
    let mut factorial = BigInt::one();
    let mut s_power = Polynomial::one(&spec);
    for (i, iterate) in iterates.into_iter().enumerate() {
        if i > 0 {
            factorial *= BigInt::from(i as u64);
            s_power = &s_power * &slice.s;
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let coeff = Rational::new(BigInt::from(sign), factorial.clone());
        let a_fill = slice.a.pow((top - i) as u32);
        numerator = &numerator + &(&(&iterate * &s_power) * &a_fill).scale(&coeff);
    }
    let mut a_power = top;
    while a_power > 0 {
        match numerator.exact_divide(&slice.a) {
            Ok(q) => {
                numerator = q;
                a_power -= 1;
            }
            Err(_) => break,
        }
    }
    if numerator.is_zero() {
        return Ok(DixmierImage {
            numerator,
            a_power: 0,
        });
    }
    let numerator = numerator.primitive_part(&MonomialOrder::DegRevLex);
    debug_assert!(certified.apply(&numerator)?.is_zero());
    Ok(DixmierImage { numerator, a_power })
}

/// Removes every factor of `a` and normalizes to the primitive part: the
/// canonical cleared representative of a kernel element.
fn clear_slice_factor(p: &Polynomial, a: &Polynomial) -> Polynomial {
    let mut out = p.clone();
    while let Ok(q) = out.exact_divide(a) {
        out = q;
    }
    out.primitive_part(&MonomialOrder::DegRevLex)
}

/// Outcome of [`kernel_generator_rounds`].
#[derive(Clone, Debug)]
pub enum RoundsOutcome {
    /// The closure reached a fixed point and every oracle basis element up
    /// to the oracle degree is a member of the candidate subalgebra.
    Stabilized {
        generators: Vec<Polynomial>,
        rounds_run: usize,
    },
    /// Either the round budget ran out while candidates were still being
    /// added, or the closure stalled but the oracle found a kernel element
    /// outside the candidate subalgebra (reported as the witness).
    NonStabilized {
        generators: Vec<Polynomial>,
        rounds_run: usize,
        missing_kernel_element: Option<Polynomial>,
    },
}

impl RoundsOutcome {
    pub fn is_stabilized(&self) -> bool {
        matches!(self, RoundsOutcome::Stabilized { .. })
    }

    pub fn generators(&self) -> &[Polynomial] {
        match self {
            RoundsOutcome::Stabilized { generators, .. } => generators,
            RoundsOutcome::NonStabilized { generators, .. } => generators,
        }
    }
}

/// Budget knobs for [`kernel_generator_rounds`].
#[derive(Clone, Copy, Debug)]
pub struct RoundsOptions {
    pub slice_degree_cap: u64,
    pub dimension_budget: usize,
    pub gb_limits: GbLimits,
}

impl Default for RoundsOptions {
    fn default() -> Self {
        RoundsOptions {
            slice_degree_cap: DEFAULT_SLICE_DEGREE_CAP,
            dimension_budget: DEFAULT_DIMENSION_BUDGET,
            gb_limits: GbLimits::default(),
        }
    }
}

/// Bounded search for kernel generators.
///
/// Round 0 seeds the candidates with the slice image `a` and the cleared
/// Dixmier images of all variables. Each later round multiplies candidate
/// pairs, clears `a`-factors and content, and batch-adds every cleared
/// product that is not already a member of the candidate subalgebra. When a
/// round adds nothing the closure is a fixed point; `Stabilized` is reported
/// only if additionally every element of the degree-bounded kernel oracle is
/// a member of the candidates. The procedure cannot certify the opposite:
/// kernels need not be finitely generated, so `NonStabilized` is a budget
/// verdict, not a theorem.
pub fn kernel_generator_rounds(
    certified: &LndCertified,
    rounds: usize,
    oracle_degree: u64,
    options: RoundsOptions,
) -> Result<RoundsOutcome> {
    let derivation = certified.derivation();
    let spec = certified.spec();
    if derivation.is_zero() {
        let generators = (0..spec.var_count())
            .map(|i| Polynomial::generator(spec, spec.var_index(i)))
            .collect();
        return Ok(RoundsOutcome::Stabilized {
            generators,
            rounds_run: 0,
        });
    }
    let slice = find_local_slice(certified, options.slice_degree_cap)?;

    let mut candidates: Vec<Polynomial> = Vec::new();
    let push = |cands: &mut Vec<Polynomial>, p: Polynomial| {
        if !p.is_constant() && !cands.contains(&p) {
            cands.push(p);
        }
    };
    push(&mut candidates, slice.image().clone());
    for i in 0..spec.var_count() {
        let var = Polynomial::generator(spec, spec.var_index(i));
        let image = dixmier_image(certified, &slice, &var)?;
        push(&mut candidates, image.numerator);
    }

    let mut new_start = 0;
    for round in 1..=rounds {
        // Seminaive closure: pairs not involving a fresh candidate were
        // already processed against the same membership verdicts.
        let mut cleared: Vec<Polynomial> = Vec::new();
        for i in 0..candidates.len() {
            for j in i.max(new_start)..candidates.len() {
                let product = &candidates[i] * &candidates[j];
                let c = clear_slice_factor(&product, slice.image());
                if !c.is_constant() && !candidates.contains(&c) && !cleared.contains(&c) {
                    cleared.push(c);
                }
            }
        }
        let mut additions: Vec<Polynomial> = Vec::new();
        if !cleared.is_empty() {
            let tester = SubalgebraTester::new(&candidates, spec, options.gb_limits)?;
            for c in cleared {
                if !tester.is_member(&c) {
                    additions.push(c);
                }
            }
        }
        if additions.is_empty() {
            // Fixed point: later rounds would repeat this exact state, so
            // the oracle cross-check decides now.
            let oracle = kernel_basis_up_to_degree(
                derivation,
                oracle_degree,
                options.dimension_budget,
            )?;
            let tester = SubalgebraTester::new(&candidates, spec, options.gb_limits)?;
            for b in &oracle.basis {
                if !tester.is_member(b) {
                    return Ok(RoundsOutcome::NonStabilized {
                        generators: candidates,
                        rounds_run: round,
                        missing_kernel_element: Some(b.clone()),
                    });
                }
            }
            return Ok(RoundsOutcome::Stabilized {
                generators: candidates,
                rounds_run: round,
            });
        }
        new_start = candidates.len();
        candidates.extend(additions);
    }
    Ok(RoundsOutcome::NonStabilized {
        generators: candidates,
        rounds_run: rounds,
        missing_kernel_element: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::DEFAULT_NILPOTENCY_CAP;
    use crate::groebner::subalgebra_equal;
    use crate::parse::parse;
    use crate::ring::RingSpec;
    use std::sync::Arc;

    fn remark2() -> (Arc<RingSpec>, LndCertified) {
        let spec = RingSpec::new(["X"], ["Y", "Z"]).unwrap();
        let d = Derivation::new(
            &spec,
            [
                ("Y".to_string(), parse("X", &spec).unwrap()),
                ("Z".to_string(), parse("Y", &spec).unwrap()),
            ],
        )
        .unwrap();
        let cert = d.certify_lnd(DEFAULT_NILPOTENCY_CAP).certified().unwrap();
        (spec, cert)
    }

    fn remark3() -> (Arc<RingSpec>, LndCertified) {
        let spec = RingSpec::new([], ["X", "S", "T", "U", "V"]).unwrap();
        let d = Derivation::new(
            &spec,
            [
                ("S".to_string(), parse("X^3", &spec).unwrap()),
                ("T".to_string(), parse("S", &spec).unwrap()),
                ("U".to_string(), parse("T", &spec).unwrap()),
                ("V".to_string(), parse("X^2", &spec).unwrap()),
            ],
        )
        .unwrap();
        let cert = d.certify_lnd(DEFAULT_NILPOTENCY_CAP).certified().unwrap();
        (spec, cert)
    }

    #[test]
    fn monomial_enumeration_is_graded_lex() {
        let ms = monomials_up_to_degree(2, 2);
        let exps: Vec<Vec<u32>> = ms.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(
            exps,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![0, 1],
                vec![2, 0],
                vec![1, 1],
                vec![0, 2],
            ]
        );
        assert_eq!(count_monomials(3, 4), Some(35));
    }

    #[test]
    fn kernel_basis_of_remark2_at_degree_two() {
        let (spec, cert) = remark2();
        let basis = kernel_basis_up_to_degree(cert.derivation(), 2, 1000).unwrap();
        assert_eq!(basis.dimension(), 4);
        for b in &basis.basis {
            assert!(cert.apply(b).unwrap().is_zero());
        }
        assert!(basis.contains_multiple_of(&parse("Y^2 - 2*X*Z", &spec).unwrap()));
    }

    #[test]
    fn kernel_basis_trivial_cases() {
        let spec = RingSpec::new([], ["Y", "Z"]).unwrap();
        let zero = Derivation::zero(&spec);
        let basis = kernel_basis_up_to_degree(&zero, 1, 1000).unwrap();
        assert_eq!(basis.dimension(), 3);

        let dz = Derivation::new(&spec, [("Z".to_string(), parse("1", &spec).unwrap())]).unwrap();
        let basis = kernel_basis_up_to_degree(&dz, 3, 1000).unwrap();
        assert_eq!(basis.dimension(), 4);
        for b in &basis.basis {
            assert!(b
                .terms()
                .all(|(m, _)| m.exponent(spec.index_of("Z").unwrap()) == 0));
        }
    }

    #[test]
    fn dimension_budget_is_enforced() {
        let spec = RingSpec::new([], ["Y", "Z"]).unwrap();
        let zero = Derivation::zero(&spec);
        assert!(matches!(
            kernel_basis_up_to_degree(&zero, 10, 5),
            Err(Error::DimensionBudgetExceeded { .. })
        ));
    }

    #[test]
    fn local_slices_of_the_corpus() {
        let (spec2, cert2) = remark2();
        let slice = find_local_slice(&cert2, DEFAULT_SLICE_DEGREE_CAP).unwrap();
        assert_eq!(slice.element(), &parse("Y", &spec2).unwrap());
        assert_eq!(slice.image(), &parse("X", &spec2).unwrap());

        let (spec3, cert3) = remark3();
        let slice = find_local_slice(&cert3, DEFAULT_SLICE_DEGREE_CAP).unwrap();
        assert_eq!(slice.element(), &parse("S", &spec3).unwrap());
        assert_eq!(slice.image(), &parse("X^3", &spec3).unwrap());
    }

    #[test]
    fn slice_validation() {
        let (spec, cert) = remark2();
        let d = cert.derivation();
        assert!(LocalSlice::new(
            d,
            parse("Y", &spec).unwrap(),
            parse("X", &spec).unwrap()
        )
        .is_ok());
        assert!(LocalSlice::new(
            d,
            parse("Z", &spec).unwrap(),
            parse("X", &spec).unwrap()
        )
        .is_err());
        assert!(LocalSlice::new(
            d,
            parse("T", &spec).is_err().then(|| parse("Y", &spec).unwrap()).unwrap(),
            parse("0", &spec).unwrap()
        )
        .is_err());
    }

    #[test]
    fn dixmier_images_of_remark2() {
        let (spec, cert) = remark2();
        let slice = find_local_slice(&cert, DEFAULT_SLICE_DEGREE_CAP).unwrap();

        let z = dixmier_image(&cert, &slice, &parse("Z", &spec).unwrap()).unwrap();
        assert_eq!(z.numerator, parse("Y^2 - 2*X*Z", &spec).unwrap());
        assert_eq!(z.a_power, 1);

        // Kernel elements are fixed (up to normalization) with power zero.
        let k = dixmier_image(&cert, &slice, &parse("X^2 + 1", &spec).unwrap()).unwrap();
        assert_eq!(k.numerator, parse("X^2 + 1", &spec).unwrap());
        assert_eq!(k.a_power, 0);

        // pi(Y) = Y - X*(Y/X) = 0.
        let y = dixmier_image(&cert, &slice, &parse("Y", &spec).unwrap()).unwrap();
        assert!(y.numerator.is_zero());
        assert_eq!(y.a_power, 0);
    }

    #[test]
    fn rounds_stabilize_for_remark2() {
        let (spec, cert) = remark2();
        let outcome =
            kernel_generator_rounds(&cert, 4, 4, RoundsOptions::default()).unwrap();
        match &outcome {
            RoundsOutcome::Stabilized { generators, .. } => {
                let reference = [
                    parse("X", &spec).unwrap(),
                    parse("Y^2 - 2*X*Z", &spec).unwrap(),
                ];
                assert!(subalgebra_equal(generators, &reference, &spec, GbLimits::default())
                    .unwrap());
            }
            RoundsOutcome::NonStabilized { .. } => panic!("remark 2 kernel is Q[X][P]"),
        }
    }

    #[test]
    fn rounds_do_not_stabilize_for_remark3() {
        let (_, cert) = remark3();
        let outcome =
            kernel_generator_rounds(&cert, 6, 6, RoundsOptions::default()).unwrap();
        match &outcome {
            RoundsOutcome::NonStabilized {
                missing_kernel_element,
                ..
            } => {
                // The oracle exhibits a concrete kernel element outside the
                // candidate subalgebra.
                assert!(missing_kernel_element.is_some());
            }
            RoundsOutcome::Stabilized { .. } => {
                panic!("the remark 3 kernel is not finitely generated")
            }
        }
    }

    #[test]
    fn rounds_for_the_zero_derivation() {
        let spec = RingSpec::new(["X"], ["Y", "Z"]).unwrap();
        let zero = Derivation::zero(&spec);
        let cert = zero.certify_lnd(4).certified().unwrap();
        let outcome = kernel_generator_rounds(&cert, 2, 2, RoundsOptions::default()).unwrap();
        match outcome {
            RoundsOutcome::Stabilized { generators, .. } => {
                assert_eq!(
                    generators,
                    vec![parse("Y", &spec).unwrap(), parse("Z", &spec).unwrap()]
                );
            }
            RoundsOutcome::NonStabilized { .. } => panic!("zero derivation annihilates B"),
        }
    }
}
