//! A-derivations of `B = A[X_1, ..., X_n]`: Leibniz extension from variable
//! images, nilpotency witnesses, local-nilpotency certification, triangularity
//! in given coordinates, and irreducibility.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{gcd_many, GbLimits, SubalgebraTester};
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingSpec};

/// Default iteration cap when searching for nilpotency witnesses.
pub const DEFAULT_NILPOTENCY_CAP: usize = 256;

/// An A-derivation, described by the images of the variables. Base
/// generators map to zero; the extension to all of `B` is by the Leibniz
/// rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    spec: Arc<RingSpec>,
    images: Vec<Polynomial>,
}

impl Derivation {
    /// Builds a derivation from `variable name -> image`. Variables missing
    /// from the map get image zero; unknown names are rejected.
    pub fn new(
        spec: &Arc<RingSpec>,
        images: impl IntoIterator<Item = (String, Polynomial)>,
    ) -> Result<Derivation> {
        let mut by_index: Vec<Option<Polynomial>> = vec![None; spec.var_count()];
        for (name, image) in images {
            let index = spec
                .index_of(&name)
                .ok_or_else(|| Error::UnknownName(name.clone()))?;
            if spec.is_base(index) {
                return Err(Error::Usage(format!(
                    "`{name}` is a base generator; an A-derivation must send it to zero"
                )));
            }
            if !same_ring(image.spec(), spec) {
                return Err(Error::RingMismatch(
                    image.spec().to_string(),
                    spec.to_string(),
                ));
            }
            let slot = &mut by_index[index - spec.base_count()];
            if slot.is_some() {
                return Err(Error::Usage(format!("duplicate image for `{name}`")));
            }
            *slot = Some(image);
        }
        Ok(Derivation {
            spec: spec.clone(),
            images: by_index
                .into_iter()
                .map(|img| img.unwrap_or_else(|| Polynomial::zero(spec)))
                .collect(),
        })
    }

    pub fn zero(spec: &Arc<RingSpec>) -> Derivation {
        Derivation {
            spec: spec.clone(),
            images: vec![Polynomial::zero(spec); spec.var_count()],
        }
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }

    /// Image of the `i`-th variable.
    pub fn image(&self, var: usize) -> &Polynomial {
        &self.images[var]
    }

    pub fn image_of(&self, name: &str) -> Option<&Polynomial> {
        let index = self.spec.index_of(name)?;
        if self.spec.is_base(index) {
            None
        } else {
            Some(&self.images[index - self.spec.base_count()])
        }
    }

    pub fn images(&self) -> impl Iterator<Item = (&str, &Polynomial)> {
        self.spec.var_names().zip(self.images.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    /// Applies the derivation: `D(f) = sum_v df/dv * D(v)` over the
    /// variables. Base generators contribute nothing.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.spec(), &self.spec) {
            return Err(Error::RingMismatch(
                f.spec().to_string(),
                self.spec.to_string(),
            ));
        }
        let mut out = Polynomial::zero(&self.spec);
        for (i, image) in self.images.iter().enumerate() {
            if image.is_zero() {
                continue;
            }
            let partial = f.partial_derivative_index(self.spec.var_index(i));
            if !partial.is_zero() {
                out = &out + &(&partial * image);
            }
        }
        Ok(out)
    }

    /// Least `s` with `D^s(f) = 0`, up to `cap` applications.
    pub fn nilpotency_witness(&self, f: &Polynomial, cap: usize) -> NilpotencyOutcome {
        let mut current = f.clone();
        for s in 1..=cap {
            current = self.apply(&current).expect("same ring by construction");
            if current.is_zero() {
                return NilpotencyOutcome::Witness(NilpotencyWitness {
                    element: f.clone(),
                    steps: s,
                });
            }
        }
        NilpotencyOutcome::Unknown { cap }
    }

    /// Per-variable nilpotency witnesses. When every variable has one the
    /// derivation is certified locally nilpotent on all of `B`: the locally
    /// nilpotent elements form a subalgebra containing `A` (Leibniz closes
    /// products, linearity closes sums), so generator witnesses suffice.
    pub fn certify_lnd(&self, cap: usize) -> LndCheck {
        let mut witnesses = BTreeMap::new();
        let mut missing = Vec::new();
        for (name, _) in self.images() {
            let var = Polynomial::variable(&self.spec, name).unwrap();
            match self.nilpotency_witness(&var, cap) {
                NilpotencyOutcome::Witness(w) => {
                    witnesses.insert(name.to_string(), w.steps);
                }
                NilpotencyOutcome::Unknown { .. } => missing.push(name.to_string()),
            }
        }
        if missing.is_empty() {
            LndCheck::Certified(LndCertified {
                derivation: self.clone(),
                witnesses,
            })
        } else {
            LndCheck::Unknown {
                witnesses,
                missing,
                cap,
            }
        }
    }

    /// True iff `D(coords_i)` lies in `Q[base ∪ {coords_1..coords_{i-1}}]`
    /// for every `i`. The caller is responsible for knowing whether `coords`
    /// is a coordinate system.
    pub fn is_triangular_in(&self, coords: &[Polynomial], limits: GbLimits) -> Result<bool> {
        for i in 0..coords.len() {
            let image = self.apply(&coords[i])?;
            if image.is_zero() {
                continue;
            }
            let tester = SubalgebraTester::new(&coords[..i], &self.spec, limits)?;
            if !tester.is_member(&image) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Gcd certificate for irreducibility: the derivation is irreducible
    /// exactly when the gcd of its nonzero variable images is a unit, i.e.
    /// the images generate an ideal contained in no proper principal ideal.
    pub fn is_irreducible(&self, limits: GbLimits) -> Result<IrreducibilityCertificate> {
        if self.is_zero() {
            return Err(Error::ZeroDerivation);
        }
        let images: Vec<Polynomial> = self
            .images
            .iter()
            .filter(|p| !p.is_zero())
            .cloned()
            .collect();
        let gcd = gcd_many(&images, limits)?;
        Ok(IrreducibilityCertificate {
            irreducible: gcd.is_constant(),
            gcd,
        })
    }
}

/// A witness that `D^steps(element) = 0` with `D^(steps-1)(element) != 0`
/// (minimality holds for every nonzero element; the zero element gets the
/// trivial witness `steps = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyWitness {
    pub element: Polynomial,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilpotencyOutcome {
    Witness(NilpotencyWitness),
    Unknown { cap: usize },
}

impl NilpotencyOutcome {
    pub fn steps(&self) -> Option<usize> {
        match self {
            NilpotencyOutcome::Witness(w) => Some(w.steps),
            NilpotencyOutcome::Unknown { .. } => None,
        }
    }
}

/// Outcome of [`Derivation::certify_lnd`].
#[derive(Clone, Debug)]
pub enum LndCheck {
    Certified(LndCertified),
    Unknown {
        witnesses: BTreeMap<String, usize>,
        missing: Vec<String>,
        cap: usize,
    },
}

impl LndCheck {
    pub fn certified(self) -> Option<LndCertified> {
        match self {
            LndCheck::Certified(c) => Some(c),
            LndCheck::Unknown { .. } => None,
        }
    }
}

/// A derivation bundled with per-variable nilpotency witnesses. Operations
/// that require local nilpotency (exponentials, Dixmier images, kernel
/// rounds) take this type, making the precondition explicit.
#[derive(Clone, Debug)]
pub struct LndCertified {
    derivation: Derivation,
    witnesses: BTreeMap<String, usize>,
}

impl LndCertified {
    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        self.derivation.spec()
    }

    pub fn witnesses(&self) -> &BTreeMap<String, usize> {
        &self.witnesses
    }

    /// Witness for the named variable.
    pub fn witness(&self, name: &str) -> usize {
        self.witnesses[name]
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.derivation.apply(f)
    }

    /// Iterates `D` on `f` until zero, returning `[f, Df, D^2 f, ...]`
    /// without the final zero. Termination is guaranteed by the witnesses.
    pub fn iterates(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        let mut current = f.clone();
        while !current.is_zero() {
            let next = self.apply(&current)?;
            out.push(current);
            current = next;
        }
        Ok(out)
    }
}

/// Gcd certificate from [`Derivation::is_irreducible`].
#[derive(Clone, Debug)]
pub struct IrreducibilityCertificate {
    pub irreducible: bool,
    pub gcd: Polynomial,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn remark1() -> (Arc<RingSpec>, Derivation) {
        let spec = RingSpec::new(["X"], ["T", "Y", "Z"]).unwrap();
        let d = Derivation::new(
            &spec,
            [
                ("Y".to_string(), parse("X", &spec).unwrap()),
                ("Z".to_string(), parse("Y", &spec).unwrap()),
            ],
        )
        .unwrap();
        (spec, d)
    }

    fn remark3() -> (Arc<RingSpec>, Derivation) {
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
        (spec, d)
    }

    #[test]
    fn apply_kills_kernel_elements() {
        let (spec, d) = remark1();
        let tprime = parse("T - Y^2 + 2*X*Z", &spec).unwrap();
        assert!(d.apply(&tprime).unwrap().is_zero());
        assert!(d.apply(&parse("X^2 - 3", &spec).unwrap()).unwrap().is_zero());
        let (spec3, d3) = remark3();
        assert!(d3
            .apply(&parse("S - X*V", &spec3).unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn witnesses_are_minimal() {
        let (spec3, d3) = remark3();
        let u = parse("U", &spec3).unwrap();
        assert_eq!(d3.nilpotency_witness(&u, 10).steps(), Some(4));
        let (spec, d) = remark1();
        assert_eq!(
            d.nilpotency_witness(&parse("X", &spec).unwrap(), 10).steps(),
            Some(1)
        );
        let spec2 = RingSpec::new(["X"], ["Y", "Z"]).unwrap();
        let d2 = Derivation::new(
            &spec2,
            [
                ("Y".to_string(), parse("X", &spec2).unwrap()),
                ("Z".to_string(), parse("Y", &spec2).unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(
            d2.nilpotency_witness(&parse("Z", &spec2).unwrap(), 10).steps(),
            Some(3)
        );
    }

    #[test]
    fn certify_lnd_collects_witnesses() {
        let (_, d) = remark1();
        match d.certify_lnd(DEFAULT_NILPOTENCY_CAP) {
            LndCheck::Certified(cert) => {
                let expected: BTreeMap<String, usize> =
                    [("T", 1), ("Y", 2), ("Z", 3)]
                        .into_iter()
                        .map(|(k, v)| (k.to_string(), v))
                        .collect();
                assert_eq!(cert.witnesses(), &expected);
            }
            LndCheck::Unknown { .. } => panic!("remark 1 derivation is locally nilpotent"),
        }
        let (_, d3) = remark3();
        let cert = d3.certify_lnd(DEFAULT_NILPOTENCY_CAP).certified().unwrap();
        let expected: BTreeMap<String, usize> =
            [("X", 1), ("S", 2), ("T", 3), ("U", 4), ("V", 2)]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
        assert_eq!(cert.witnesses(), &expected);
    }

    #[test]
    fn non_lnd_stays_unknown() {
        let spec = RingSpec::new([], ["Y"]).unwrap();
        let d = Derivation::new(&spec, [("Y".to_string(), parse("Y", &spec).unwrap())]).unwrap();
        match d.certify_lnd(64) {
            LndCheck::Unknown { missing, cap, .. } => {
                assert_eq!(missing, vec!["Y".to_string()]);
                assert_eq!(cap, 64);
            }
            LndCheck::Certified(_) => panic!("Y -> Y is not locally nilpotent"),
        }
    }

    #[test]
    fn triangularity_in_given_coordinates() {
        let (spec, d) = remark1();
        let coords = ["T", "Y", "Z"]
            .map(|n| parse(n, &spec).unwrap())
            .to_vec();
        assert!(d.is_triangular_in(&coords, GbLimits::default()).unwrap());

        let (spec3, d3) = remark3();
        let coords3 = ["S", "T", "U", "V", "X"]
            .map(|n| parse(n, &spec3).unwrap())
            .to_vec();
        assert!(!d3.is_triangular_in(&coords3, GbLimits::default()).unwrap());

        let zero = Derivation::zero(&spec);
        assert!(zero.is_triangular_in(&coords, GbLimits::default()).unwrap());
    }

    #[test]
    fn irreducibility_certificates() {
        let (_, d) = remark1();
        let cert = d.is_irreducible(GbLimits::default()).unwrap();
        assert!(cert.irreducible);

        let (_, d3) = remark3();
        assert!(d3.is_irreducible(GbLimits::default()).unwrap().irreducible);

        let spec = RingSpec::new(["X"], ["Y", "Z"]).unwrap();
        let reducible = Derivation::new(
            &spec,
            [
                ("Y".to_string(), parse("X^2", &spec).unwrap()),
                ("Z".to_string(), parse("X*Y", &spec).unwrap()),
            ],
        )
        .unwrap();
        let cert = reducible.is_irreducible(GbLimits::default()).unwrap();
        assert!(!cert.irreducible);
        assert_eq!(cert.gcd, parse("X", &spec).unwrap());

        let zero = Derivation::zero(&spec);
        assert!(matches!(
            zero.is_irreducible(GbLimits::default()),
            Err(Error::ZeroDerivation)
        ));
    }

    #[test]
    fn kernel_closure_under_ring_operations() {
        let (spec, d) = remark1();
        let f = parse("T - Y^2 + 2*X*Z", &spec).unwrap();
        let g = parse("X^3 + T", &spec).unwrap();
        assert!(d.apply(&f).unwrap().is_zero());
        assert!(d.apply(&g).unwrap().is_zero());
        let combined = &(&f * &g) + &(&f + &g);
        assert!(d.apply(&combined).unwrap().is_zero());
    }
}
