//! Polynomial endomorphisms of `B` over `A`, Dixmier exponentials of
//! certified locally nilpotent derivations, coordinate-system certificates,
//! Gamma_D membership, rigidity pairs, and rank upper bounds.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::derivation::{Derivation, LndCertified};
use crate::error::{Error, Result};
use crate::groebner::{GbLimits, SubalgebraTester};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::ring::{same_ring, RingSpec};

/// An A-endomorphism of `B`, described by the images of the variables.
/// Base generators are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    spec: Arc<RingSpec>,
    images: Vec<Polynomial>,
}

impl Endomorphism {
    pub fn new(spec: &Arc<RingSpec>, images: Vec<Polynomial>) -> Result<Endomorphism> {
        if images.len() != spec.var_count() {
            return Err(Error::Usage(format!(
                "expected {} variable images, got {}",
                spec.var_count(),
                images.len()
            )));
        }
        for img in &images {
            if !same_ring(img.spec(), spec) {
                return Err(Error::RingMismatch(
                    img.spec().to_string(),
                    spec.to_string(),
                ));
            }
        }
        Ok(Endomorphism {
            spec: spec.clone(),
            images,
        })
    }

    pub fn identity(spec: &Arc<RingSpec>) -> Endomorphism {
        Endomorphism {
            spec: spec.clone(),
            images: (0..spec.var_count())
                .map(|i| Polynomial::generator(spec, spec.var_index(i)))
                .collect(),
        }
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }

    /// Image of the `i`-th variable.
    pub fn image(&self, var: usize) -> &Polynomial {
        &self.images[var]
    }

    pub fn images(&self) -> impl Iterator<Item = (&str, &Polynomial)> {
        self.spec.var_names().zip(self.images.iter())
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, img)| *img == Polynomial::generator(&self.spec, self.spec.var_index(i)))
    }

    /// Substitution of the variable images into `f` (base generators fixed).
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.spec(), &self.spec) {
            return Err(Error::RingMismatch(
                f.spec().to_string(),
                self.spec.to_string(),
            ));
        }
        let mut all_images: Vec<Polynomial> = Vec::with_capacity(self.spec.len());
        for i in 0..self.spec.base_count() {
            all_images.push(Polynomial::generator(&self.spec, i));
        }
        all_images.extend(self.images.iter().cloned());
        f.substitute(&self.spec, &all_images)
    }

    /// `(self ∘ other)(v) = self(other(v))` for every variable `v`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if !same_ring(&self.spec, &other.spec) {
            return Err(Error::RingMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ));
        }
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        Endomorphism::new(&self.spec, images)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, img) in self.images() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{name} -> {img}")?;
            first = false;
        }
        Ok(())
    }
}

/// The Dixmier exponential `exp(f D)`: each variable `v` maps to
/// `sum_j f^j / j! * D^j(v)`, a finite sum by the nilpotency witnesses.
/// Requires a prior local-nilpotency certificate and `f` in the kernel;
/// the result is an automorphism with inverse `exp(-f D)`.
pub fn exp(certified: &LndCertified, f: &Polynomial) -> Result<Endomorphism> {
    let spec = certified.spec().clone();
    let image_of_f = certified.apply(f)?;
    if !image_of_f.is_zero() {
        return Err(Error::NotInKernel {
            image: image_of_f.to_string(),
        });
    }
    let mut images = Vec::with_capacity(spec.var_count());
    for i in 0..spec.var_count() {
        let var = Polynomial::generator(&spec, spec.var_index(i));
        let mut sum = Polynomial::zero(&spec);
        let mut factorial = BigInt::one();
        let mut f_power = Polynomial::one(&spec);
        for (j, iterate) in certified.iterates(&var)?.into_iter().enumerate() {
            if j > 0 {
                factorial *= BigInt::from(j as u64);
                f_power = &f_power * f;
            }
            let coeff = Rational::new(BigInt::one(), factorial.clone());
            sum = &sum + &(&iterate * &f_power).scale(&coeff);
        }
        images.push(sum);
    }
    Endomorphism::new(&spec, images)
}

/// Reason a tuple fails the coordinate-system check.
#[derive(Clone, Debug)]
pub enum NotCoordinateSystem {
    /// The Jacobian determinant over the variables is not a nonzero rational.
    JacobianNotUnit { determinant: Polynomial },
    /// Some original variable is not generated by the tuple (and base).
    VariableNotGenerated { variable: String },
}

impl fmt::Display for NotCoordinateSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotCoordinateSystem::JacobianNotUnit { determinant } => {
                write!(f, "jacobian determinant {determinant} is not a unit")
            }
            NotCoordinateSystem::VariableNotGenerated { variable } => {
                write!(f, "variable {variable} is not generated by the tuple")
            }
        }
    }
}

/// Verdict of [`check_coordinate_system`]. Refutations are values; only
/// resource exhaustion is an error.
#[derive(Clone, Debug)]
pub enum CoordCheck {
    Certificate(CoordinateCertificate),
    NotCoordinateSystem(NotCoordinateSystem),
}

impl CoordCheck {
    pub fn certificate(self) -> Option<CoordinateCertificate> {
        match self {
            CoordCheck::Certificate(c) => Some(c),
            CoordCheck::NotCoordinateSystem(_) => None,
        }
    }

    pub fn is_coordinate_system(&self) -> bool {
        matches!(self, CoordCheck::Certificate(_))
    }
}

/// Proof that an n-tuple is a coordinate system: a unit Jacobian
/// determinant plus an explicit inverse endomorphism recovered from
/// subalgebra-membership preimages.
#[derive(Clone, Debug)]
pub struct CoordinateCertificate {
    pub coords: Vec<Polynomial>,
    pub inverse: Endomorphism,
    pub jacobian_det: Polynomial,
}

/// Jacobian determinant of the tuple over the derivation variables,
/// by Laplace expansion (desk-scale n).
pub fn jacobian_determinant(coords: &[Polynomial], spec: &Arc<RingSpec>) -> Polynomial {
    let n = coords.len();
    let mut matrix: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    for c in coords {
        let row: Vec<Polynomial> = (0..spec.var_count())
            .map(|j| c.partial_derivative_index(spec.var_index(j)))
            .collect();
        matrix.push(row);
    }
    determinant(&matrix, spec)
}

fn determinant(m: &[Vec<Polynomial>], spec: &Arc<RingSpec>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(spec);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Polynomial::zero(spec);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = &determinant(&minor, spec) * entry;
        if j % 2 == 0 {
            det = &det + &cofactor;
        } else {
            det = &det - &cofactor;
        }
    }
    det
}

/// Checks that `coords` is a coordinate system of `B` over `A`: the fast
/// necessary Jacobian-unit test first, then sufficiency via subalgebra
/// membership of every original variable, whose preimages assemble the
/// inverse endomorphism. Both checks always run on the success path.
pub fn check_coordinate_system(
    coords: &[Polynomial],
    spec: &Arc<RingSpec>,
    limits: GbLimits,
) -> Result<CoordCheck> {
    if coords.len() != spec.var_count() {
        return Err(Error::Usage(format!(
            "expected {} coordinates, got {}",
            spec.var_count(),
            coords.len()
        )));
    }
    for c in coords {
        if !same_ring(c.spec(), spec) {
            return Err(Error::RingMismatch(c.spec().to_string(), spec.to_string()));
        }
    }
    let det = jacobian_determinant(coords, spec);
    if det.constant_value().map_or(true, |c| c == Rational::from_integer(0.into())) {
        return Ok(CoordCheck::NotCoordinateSystem(
            NotCoordinateSystem::JacobianNotUnit { determinant: det },
        ));
    }

    let tester = SubalgebraTester::new(coords, spec, limits)?;
    let mut inverse_images = Vec::with_capacity(spec.var_count());
    for i in 0..spec.var_count() {
        let var = Polynomial::generator(spec, spec.var_index(i));
        let cert = tester.membership(&var);
        match cert.preimage {
            Some(preimage) => inverse_images.push(retag_to_variables(&preimage, spec)),
            None => {
                return Ok(CoordCheck::NotCoordinateSystem(
                    NotCoordinateSystem::VariableNotGenerated {
                        variable: spec.name(spec.var_index(i)).to_string(),
                    },
                ));
            }
        }
    }
    let inverse = Endomorphism::new(spec, inverse_images)?;
    // Soundness: the inverse sends each coordinate back to its variable.
    for (i, c) in coords.iter().enumerate() {
        let back = inverse.apply(c)?;
        debug_assert_eq!(
            back,
            Polynomial::generator(spec, spec.var_index(i)),
            "inverse failed to recover variable {i}"
        );
    }
    Ok(CoordCheck::Certificate(CoordinateCertificate {
        coords: coords.to_vec(),
        inverse,
        jacobian_det: det,
    }))
}

/// Rewrites a tag-and-base preimage as an ambient polynomial by sending tag
/// `_tj` to the `j`-th variable. Valid when there are exactly as many tags
/// as variables and the preimage touches no ambient variable.
fn retag_to_variables(preimage: &Polynomial, spec: &Arc<RingSpec>) -> Polynomial {
    let base = spec.base_count();
    let n = spec.var_count();
    let terms: Vec<(Monomial, Rational)> = preimage
        .terms()
        .map(|(m, c)| {
            let exps = m.exponents();
            let mut out = vec![0u32; spec.len()];
            out[..base].copy_from_slice(&exps[..base]);
            for j in 0..n {
                debug_assert_eq!(exps[base + j], 0, "preimage touches an ambient variable");
                out[base + j] = exps[base + n + j];
            }
            (Monomial::new(out), c.clone())
        })
        .collect();
    Polynomial::from_terms(spec, terms)
}

/// Verdict of [`in_gamma_d`].
#[derive(Clone, Debug)]
pub enum GammaCheck {
    Member { certificate: CoordinateCertificate },
    NotMember { reason: GammaFailure },
}

#[derive(Clone, Debug)]
pub enum GammaFailure {
    NotCoordinateSystem(NotCoordinateSystem),
    PrefixNotAnnihilated { index: usize, image: Polynomial },
}

impl fmt::Display for GammaFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaFailure::NotCoordinateSystem(r) => write!(f, "{r}"),
            GammaFailure::PrefixNotAnnihilated { index, image } => write!(
                f,
                "prefix entry {} has nonzero image {image}",
                index + 1
            ),
        }
    }
}

impl GammaCheck {
    pub fn is_member(&self) -> bool {
        matches!(self, GammaCheck::Member { .. })
    }
}

/// Membership of `coords` in Gamma_D at rank `r`: the tuple must be a
/// coordinate system whose first `n - r` entries are annihilated by `D`.
pub fn in_gamma_d(
    derivation: &Derivation,
    coords: &[Polynomial],
    r: usize,
    limits: GbLimits,
) -> Result<GammaCheck> {
    let n = derivation.spec().var_count();
    if r > n {
        return Err(Error::Usage(format!("rank {r} exceeds variable count {n}")));
    }
    for (i, c) in coords.iter().take(n - r).enumerate() {
        let image = derivation.apply(c)?;
        if !image.is_zero() {
            return Ok(GammaCheck::NotMember {
                reason: GammaFailure::PrefixNotAnnihilated { index: i, image },
            });
        }
    }
    match check_coordinate_system(coords, derivation.spec(), limits)? {
        CoordCheck::Certificate(certificate) => Ok(GammaCheck::Member { certificate }),
        CoordCheck::NotCoordinateSystem(reason) => Ok(GammaCheck::NotMember {
            reason: GammaFailure::NotCoordinateSystem(reason),
        }),
    }
}

/// A witness of non-rigidity: a prefix entry of one tuple that is not in
/// the subalgebra generated by the other tuple's prefix (and base).
#[derive(Clone, Debug)]
pub struct NonRigidityCertificate {
    /// The offending prefix element.
    pub element: Polynomial,
    /// 1-based tuple the element comes from.
    pub from_tuple: usize,
    /// 1-based tuple whose prefix algebra excludes it.
    pub not_in_prefix_of: usize,
}

/// Verdict of [`check_rigidity_pair`].
#[derive(Clone, Debug)]
pub enum RigidityVerdict {
    /// The two prefixes generate the same subalgebra over `A`.
    Consistent,
    NonRigidity(NonRigidityCertificate),
}

impl RigidityVerdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, RigidityVerdict::Consistent)
    }
}

/// Compares the `n - r` prefixes of two Gamma_D tuples. Membership of both
/// tuples in Gamma_D at rank `r` is verified here rather than trusted;
/// failure of that precondition is the `GammaMembershipFailed` error.
pub fn check_rigidity_pair(
    derivation: &Derivation,
    tuple1: &[Polynomial],
    tuple2: &[Polynomial],
    r: usize,
    limits: GbLimits,
) -> Result<RigidityVerdict> {
    for (idx, coords) in [tuple1, tuple2].into_iter().enumerate() {
        if let GammaCheck::NotMember { reason } = in_gamma_d(derivation, coords, r, limits)? {
            return Err(Error::GammaMembershipFailed {
                tuple: idx + 1,
                rank: r,
                reason: reason.to_string(),
            });
        }
    }
    let n = derivation.spec().var_count();
    let prefix1 = &tuple1[..n - r];
    let prefix2 = &tuple2[..n - r];
    let spec = derivation.spec();

    let tester1 = SubalgebraTester::new(prefix1, spec, limits)?;
    for g in prefix2 {
        if !tester1.is_member(g) {
            return Ok(RigidityVerdict::NonRigidity(NonRigidityCertificate {
                element: g.clone(),
                from_tuple: 2,
                not_in_prefix_of: 1,
            }));
        }
    }
    let tester2 = SubalgebraTester::new(prefix2, spec, limits)?;
    for g in prefix1 {
        if !tester2.is_member(g) {
            return Ok(RigidityVerdict::NonRigidity(NonRigidityCertificate {
                element: g.clone(),
                from_tuple: 1,
                not_in_prefix_of: 2,
            }));
        }
    }
    Ok(RigidityVerdict::Consistent)
}

/// `n - p` where `p` is the longest prefix of the certified coordinate
/// system annihilated by `D`; this certifies `rank D <= n - p`.
pub fn rank_upper_bound(
    derivation: &Derivation,
    certificate: &CoordinateCertificate,
) -> Result<usize> {
    let n = derivation.spec().var_count();
    let mut p = 0;
    for c in &certificate.coords {
        if derivation.apply(c)?.is_zero() {
            p += 1;
        } else {
            break;
        }
    }
    Ok(n - p)
}
