//! Corpus verification and harnesses for rigidity and triangulability
//! instances.
//!
//! The harnesses check concrete, machine-verifiable observables of specific
//! derivations (rigidity pairs, rank collapse over the fraction field,
//! base-line equality of triangular systems); they never claim the
//! universally quantified statements behind them.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Deserialize;

use crate::automorphism::{
    check_coordinate_system, check_rigidity_pair, in_gamma_d, rank_upper_bound, RigidityVerdict,
};
use crate::derivation::{Derivation, LndCheck, DEFAULT_NILPOTENCY_CAP};
use crate::error::{Error, Result};
use crate::groebner::{subalgebra_equal, GbLimits};
use crate::kernel::{
    find_local_slice, kernel_basis_up_to_degree, kernel_generator_rounds, monomials_up_to_degree,
    LocalSlice, RoundsOptions, RoundsOutcome, DEFAULT_DIMENSION_BUDGET, DEFAULT_SLICE_DEGREE_CAP,
};
use crate::poly::{Polynomial, Rational};
use crate::specfile::SpecFile;

/// Provenance of an expected value in the corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    /// The result the construction is known for.
    Established,
    /// Immediate from the definitions.
    Direct,
    /// Computed by the named independent procedure and frozen.
    Oracle(String),
}

impl Basis {
    pub fn parse(text: &str) -> Result<Basis> {
        match text {
            "established" => Ok(Basis::Established),
            "direct" => Ok(Basis::Direct),
            _ => match text.strip_prefix("oracle:") {
                Some(name) if !name.is_empty() => Ok(Basis::Oracle(name.to_string())),
                _ => Err(Error::Usage(format!(
                    "invalid basis `{text}` (expected `established`, `direct`, or `oracle:<name>`)"
                ))),
            },
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Established => write!(f, "established"),
            Basis::Direct => write!(f, "direct"),
            Basis::Oracle(name) => write!(f, "oracle:{name}"),
        }
    }
}

fn default_cap() -> usize {
    DEFAULT_NILPOTENCY_CAP
}

/// One checkable expectation attached to a corpus item.
#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum Expectation {
    LndWitnesses {
        basis: String,
        #[serde(default = "default_cap")]
        cap: usize,
        witnesses: BTreeMap<String, usize>,
    },
    Annihilates {
        basis: String,
        poly: String,
    },
    CoordinateSystem {
        basis: String,
        tuple: String,
    },
    Gamma {
        basis: String,
        tuple: String,
        rank: usize,
        member: bool,
    },
    RigidPair {
        basis: String,
        tuple1: String,
        tuple2: String,
        rank: usize,
        verdict: String,
    },
    TriangularIn {
        basis: String,
        tuple: String,
        triangular: bool,
    },
    Irreducible {
        basis: String,
        irreducible: bool,
    },
    KernelBasisDim {
        basis: String,
        degree: u64,
        dimension: usize,
        contains: Option<String>,
    },
    KernelRounds {
        basis: String,
        rounds: usize,
        oracle_degree: u64,
        stabilizes: bool,
        generators: Option<Vec<String>>,
    },
    LocalSlice {
        basis: String,
        degree_cap: u64,
        element: String,
        image: String,
    },
    RankUpperBound {
        basis: String,
        tuple: String,
        bound: usize,
    },
}

impl Expectation {
    pub fn kind(&self) -> &'static str {
        match self {
            Expectation::LndWitnesses { .. } => "lnd-witnesses",
            Expectation::Annihilates { .. } => "annihilates",
            Expectation::CoordinateSystem { .. } => "coordinate-system",
            Expectation::Gamma { .. } => "gamma",
            Expectation::RigidPair { .. } => "rigid-pair",
            Expectation::TriangularIn { .. } => "triangular-in",
            Expectation::Irreducible { .. } => "irreducible",
            Expectation::KernelBasisDim { .. } => "kernel-basis-dim",
            Expectation::KernelRounds { .. } => "kernel-rounds",
            Expectation::LocalSlice { .. } => "local-slice",
            Expectation::RankUpperBound { .. } => "rank-upper-bound",
        }
    }

    pub fn basis(&self) -> &str {
        match self {
            Expectation::LndWitnesses { basis, .. }
            | Expectation::Annihilates { basis, .. }
            | Expectation::CoordinateSystem { basis, .. }
            | Expectation::Gamma { basis, .. }
            | Expectation::RigidPair { basis, .. }
            | Expectation::TriangularIn { basis, .. }
            | Expectation::Irreducible { basis, .. }
            | Expectation::KernelBasisDim { basis, .. }
            | Expectation::KernelRounds { basis, .. }
            | Expectation::LocalSlice { basis, .. }
            | Expectation::RankUpperBound { basis, .. } => basis,
        }
    }
}

#[derive(Debug, Deserialize)]
struct CorpusManifest {
    items: Vec<CorpusItemSpec>,
}

#[derive(Debug, Deserialize)]
struct CorpusItemSpec {
    name: String,
    file: String,
    derivation: String,
    #[serde(rename = "expect")]
    expectations: Vec<Expectation>,
}

/// A corpus item: a spec file, a chosen derivation, and its expectations.
#[derive(Debug)]
pub struct CorpusItem {
    pub name: String,
    pub file: SpecFile,
    pub derivation: Derivation,
    pub expectations: Vec<Expectation>,
}

/// Loads every item of the corpus manifest `expectations.toml` in `dir`,
/// validating the basis vocabulary.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusItem>> {
    let manifest_path = dir.join("expectations.toml");
    let text = std::fs::read_to_string(&manifest_path)?;
    let manifest: CorpusManifest = toml::from_str(&text)
        .map_err(|e| Error::Usage(format!("{}: {e}", manifest_path.display())))?;
    let mut items = Vec::new();
    for item in manifest.items {
        let file = SpecFile::load(&dir.join(&item.file))?;
        let derivation = file.derivation(&item.derivation)?.clone();
        for e in &item.expectations {
            Basis::parse(e.basis())?;
        }
        items.push(CorpusItem {
            name: item.name,
            file,
            derivation,
            expectations: item.expectations,
        });
    }
    Ok(items)
}

/// Outcome of one expectation.
#[derive(Clone, Debug)]
pub struct ExpectationResult {
    pub item: String,
    pub kind: &'static str,
    pub basis: String,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail report over every expectation of every corpus item.
#[derive(Clone, Debug, Default)]
pub struct CorpusReport {
    pub results: Vec<ExpectationResult>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.results.iter().filter(|r| r.passed).count()
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(
                f,
                "[{}] {} ({}): {} -- {}",
                r.item,
                r.kind,
                r.basis,
                if r.passed { "pass" } else { "FAIL" },
                r.detail
            )?;
        }
        write!(
            f,
            "corpus: {}/{} expectations passed",
            self.passed_count(),
            self.results.len()
        )
    }
}

/// Budgets shared by every corpus run.
#[derive(Clone, Copy, Debug)]
pub struct CorpusBudgets {
    pub gb_limits: GbLimits,
    pub dimension_budget: usize,
    pub slice_degree_cap: u64,
}

impl Default for CorpusBudgets {
    fn default() -> Self {
        CorpusBudgets {
            gb_limits: GbLimits::default(),
            dimension_budget: DEFAULT_DIMENSION_BUDGET,
            slice_degree_cap: DEFAULT_SLICE_DEGREE_CAP,
        }
    }
}

/// Runs every expectation of every corpus item and reports per-expectation
/// pass/fail lines. Failures are report entries, not errors.
pub fn run_corpus(dir: &Path, budgets: CorpusBudgets) -> Result<CorpusReport> {
    let items = load_corpus(dir)?;
    let mut report = CorpusReport::default();
    for item in &items {
        for expectation in &item.expectations {
            let (passed, detail) = evaluate(item, expectation, budgets)?;
            report.results.push(ExpectationResult {
                item: item.name.clone(),
                kind: expectation.kind(),
                basis: expectation.basis().to_string(),
                passed,
                detail,
            });
        }
    }
    Ok(report)
}

fn evaluate(
    item: &CorpusItem,
    expectation: &Expectation,
    budgets: CorpusBudgets,
) -> Result<(bool, String)> {
    let d = &item.derivation;
    let file = &item.file;
    match expectation {
        Expectation::LndWitnesses {
            cap, witnesses, ..
        } => match d.certify_lnd(*cap) {
            LndCheck::Certified(cert) => {
                let got = cert.witnesses().clone();
                let passed = &got == witnesses;
                let shown: Vec<String> =
                    got.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                Ok((passed, format!("witnesses {}", shown.join(" "))))
            }
            LndCheck::Unknown { missing, cap, .. } => Ok((
                false,
                format!("unknown at cap {cap}; missing {}", missing.join(" ")),
            )),
        },
        Expectation::Annihilates { poly, .. } => {
            let f = file.resolve_poly(poly)?;
            let image = d.apply(&f)?;
            Ok((image.is_zero(), format!("D({poly}) = {image}")))
        }
        Expectation::CoordinateSystem { tuple, .. } => {
            let coords = file.tuple(tuple)?;
            let check = check_coordinate_system(coords, file.ring(), budgets.gb_limits)?;
            match check.certificate() {
                Some(cert) => Ok((
                    true,
                    format!("certificate with jacobian {}", cert.jacobian_det),
                )),
                None => Ok((false, "not a coordinate system".to_string())),
            }
        }
        Expectation::Gamma {
            tuple,
            rank,
            member,
            ..
        } => {
            let coords = file.tuple(tuple)?;
            let got = in_gamma_d(d, coords, *rank, budgets.gb_limits)?.is_member();
            Ok((
                got == *member,
                format!("membership at rank {rank} is {got}"),
            ))
        }
        Expectation::RigidPair {
            tuple1,
            tuple2,
            rank,
            verdict,
            ..
        } => {
            let t1 = file.tuple(tuple1)?;
            let t2 = file.tuple(tuple2)?;
            let got = check_rigidity_pair(d, t1, t2, *rank, budgets.gb_limits)?;
            let got_str = match &got {
                RigidityVerdict::Consistent => "consistent".to_string(),
                RigidityVerdict::NonRigidity(cert) => {
                    format!("non-rigid ({} escapes the other prefix)", cert.element)
                }
            };
            let expected_consistent = verdict == "consistent";
            Ok((got.is_consistent() == expected_consistent, got_str))
        }
        Expectation::TriangularIn {
            tuple, triangular, ..
        } => {
            let coords = file.tuple(tuple)?;
            let got = d.is_triangular_in(coords, budgets.gb_limits)?;
            Ok((got == *triangular, format!("triangular is {got}")))
        }
        Expectation::Irreducible { irreducible, .. } => {
            let cert = d.is_irreducible(budgets.gb_limits)?;
            Ok((
                cert.irreducible == *irreducible,
                format!("image gcd {}", cert.gcd),
            ))
        }
        Expectation::KernelBasisDim {
            degree,
            dimension,
            contains,
            ..
        } => {
            let basis = kernel_basis_up_to_degree(d, *degree, budgets.dimension_budget)?;
            let mut passed = basis.dimension() == *dimension;
            let mut detail = format!("dimension {}", basis.dimension());
            if let Some(name) = contains {
                let f = file.resolve_poly(name)?;
                let found = basis.contains_multiple_of(&f);
                passed &= found;
                detail.push_str(&format!(", contains multiple of {name}: {found}"));
            }
            Ok((passed, detail))
        }
        Expectation::KernelRounds {
            rounds,
            oracle_degree,
            stabilizes,
            generators,
            ..
        } => {
            let cert = d
                .certify_lnd(DEFAULT_NILPOTENCY_CAP)
                .certified()
                .ok_or_else(|| Error::Usage("corpus derivation is not certified".into()))?;
            let options = RoundsOptions {
                slice_degree_cap: budgets.slice_degree_cap,
                dimension_budget: budgets.dimension_budget,
                gb_limits: budgets.gb_limits,
            };
            let outcome = kernel_generator_rounds(&cert, *rounds, *oracle_degree, options)?;
            let mut passed = outcome.is_stabilized() == *stabilizes;
            let mut detail = match &outcome {
                RoundsOutcome::Stabilized { rounds_run, .. } => {
                    format!("stabilized after round {rounds_run}")
                }
                RoundsOutcome::NonStabilized {
                    rounds_run,
                    missing_kernel_element,
                    ..
                } => match missing_kernel_element {
                    Some(w) => format!(
                        "non-stabilized at round {rounds_run}; kernel element {w} is outside the candidates"
                    ),
                    None => format!("non-stabilized after {rounds_run} rounds"),
                },
            };
            if let Some(reference) = generators {
                let reference: Vec<Polynomial> = reference
                    .iter()
                    .map(|t| file.resolve_poly(t))
                    .collect::<Result<_>>()?;
                let equal = subalgebra_equal(
                    outcome.generators(),
                    &reference,
                    file.ring(),
                    budgets.gb_limits,
                )?;
                passed &= equal;
                detail.push_str(&format!(", generators match reference: {equal}"));
            }
            Ok((passed, detail))
        }
        Expectation::LocalSlice {
            degree_cap,
            element,
            image,
            ..
        } => {
            let cert = d
                .certify_lnd(DEFAULT_NILPOTENCY_CAP)
                .certified()
                .ok_or_else(|| Error::Usage("corpus derivation is not certified".into()))?;
            let slice = find_local_slice(&cert, *degree_cap)?;
            let expected_s = file.resolve_poly(element)?;
            let expected_a = file.resolve_poly(image)?;
            let passed = slice.element() == &expected_s && slice.image() == &expected_a;
            Ok((
                passed,
                format!("slice ({}, {})", slice.element(), slice.image()),
            ))
        }
        Expectation::RankUpperBound { tuple, bound, .. } => {
            let coords = file.tuple(tuple)?;
            let cert = check_coordinate_system(coords, file.ring(), budgets.gb_limits)?
                .certificate()
                .ok_or_else(|| Error::Usage(format!("tuple {tuple} is not a coordinate system")))?;
            let got = rank_upper_bound(d, &cert)?;
            Ok((got == *bound, format!("rank upper bound {got}")))
        }
    }
}

/// Report of the rigidity harness: pairwise verdicts at a claimed rank plus
/// the fraction-field rank probe.
#[derive(Clone, Debug)]
pub struct RigidityHarnessReport {
    pub rank: usize,
    pub verdicts: Vec<RigidityVerdict>,
    /// A local slice whose image is a nonzero base-ring element. Such an
    /// image becomes invertible over K = frac(A), so the extension of D has
    /// a genuine slice and rank one.
    pub k_side_slice: Option<LocalSlice>,
    /// Set when some pair refutes rigidity while the K-side probe shows the
    /// extension has rank one below the claimed rank: the rank-equality
    /// hypothesis that would force rigidity fails on this instance.
    pub rank_hypothesis_violated: bool,
}

impl RigidityHarnessReport {
    pub fn all_consistent(&self) -> bool {
        self.verdicts.iter().all(RigidityVerdict::is_consistent)
    }
}

/// Searches variables first, then monomials up to `DEFAULT_SLICE_DEGREE_CAP`,
/// for an element whose derivation image is a nonzero base-ring element.
fn find_base_image_slice(d: &Derivation) -> Result<Option<LocalSlice>> {
    let spec = d.spec();
    let mut candidates: Vec<Polynomial> = (0..spec.var_count())
        .map(|i| Polynomial::generator(spec, spec.var_index(i)))
        .collect();
    for m in monomials_up_to_degree(spec.len(), DEFAULT_SLICE_DEGREE_CAP) {
        if m.is_unit() || m.total_degree() == 1 {
            continue;
        }
        candidates.push(Polynomial::from_terms(spec, [(m, Rational::from_integer(1.into()))]));
    }
    for s in candidates {
        let a = d.apply(&s)?;
        if !a.is_zero() && a.is_base_element() {
            return Ok(Some(LocalSlice::new(d, s, a)?));
        }
    }
    Ok(None)
}

/// Runs [`check_rigidity_pair`] over a list of Gamma_D pairs at rank `r` and
/// cross-reports the K-side rank probe: a non-rigidity certificate together
/// with a base-image slice exhibits an instance where the extension of the
/// derivation to the fraction field has strictly smaller rank, which is
/// exactly the situation the rigidity descent hypothesis excludes.
pub fn rigidity_harness(
    d: &Derivation,
    pairs: &[(Vec<Polynomial>, Vec<Polynomial>)],
    r: usize,
    limits: GbLimits,
) -> Result<RigidityHarnessReport> {
    let mut verdicts = Vec::with_capacity(pairs.len());
    for (t1, t2) in pairs {
        verdicts.push(check_rigidity_pair(d, t1, t2, r, limits)?);
    }
    let k_side_slice = find_base_image_slice(d)?;
    let any_non_rigid = verdicts.iter().any(|v| !v.is_consistent());
    let rank_hypothesis_violated = any_non_rigid && k_side_slice.is_some() && r > 1;
    Ok(RigidityHarnessReport {
        rank: r,
        verdicts,
        k_side_slice,
        rank_hypothesis_violated,
    })
}

/// Report of the triangulability harness over one supplied triangular
/// coordinate system.
#[derive(Clone, Debug)]
pub struct TriangulabilityHarnessReport {
    /// Whether the supplied system really is triangular for the derivation.
    pub triangular: bool,
    /// Image of the first supplied coordinate.
    pub first_coordinate_image: Polynomial,
    /// When that image is a nonzero kernel element, the first coordinate is
    /// itself a local slice: over K the derivation has rank one, the
    /// collapse a rank-two hypothesis excludes.
    pub rank_collapse_slice: Option<LocalSlice>,
    /// Whether `Q[base][X] = Q[base][X']` for the designated kernel variable
    /// `X` and the first supplied coordinate `X'`.
    pub base_lines_equal: bool,
    /// Base-image slice probe, as in the rigidity harness.
    pub k_side_slice: Option<LocalSlice>,
    /// Set when the base lines differ while the K-side probe collapses the
    /// rank: the instance violates the rank-equality hypothesis.
    pub rank_hypothesis_violated: bool,
}

/// Verifies the observable steps of the "triangulable over A iff over A[X]"
/// argument on one instance: the designated variable `x_name` must be a
/// kernel variable, `coords` must be a coordinate system; the report then
/// records whether the first coordinate is annihilated (or else is itself a
/// local slice), and whether the base lines `Q[base][X]` and `Q[base][X']`
/// agree.
pub fn triangulability_harness(
    d: &Derivation,
    coords: &[Polynomial],
    x_name: &str,
    limits: GbLimits,
) -> Result<TriangulabilityHarnessReport> {
    let spec = d.spec();
    let x = Polynomial::variable(spec, x_name)?;
    let dx = d.apply(&x)?;
    if !dx.is_zero() {
        return Err(Error::Usage(format!(
            "`{x_name}` is not a kernel variable: D({x_name}) = {dx}"
        )));
    }
    let check = check_coordinate_system(coords, spec, limits)?;
    if !check.is_coordinate_system() {
        return Err(Error::Usage(
            "the supplied tuple is not a coordinate system".into(),
        ));
    }
    let triangular = d.is_triangular_in(coords, limits)?;
    let first = &coords[0];
    let first_coordinate_image = d.apply(first)?;
    let rank_collapse_slice = if first_coordinate_image.is_zero() {
        None
    } else if d.apply(&first_coordinate_image)?.is_zero() {
        Some(LocalSlice::new(
            d,
            first.clone(),
            first_coordinate_image.clone(),
        )?)
    } else {
        None
    };
    let base_lines_equal = subalgebra_equal(
        std::slice::from_ref(&x),
        std::slice::from_ref(first),
        spec,
        limits,
    )?;
    let k_side_slice = find_base_image_slice(d)?;
    let rank_hypothesis_violated = !base_lines_equal && k_side_slice.is_some();
    Ok(TriangulabilityHarnessReport {
        triangular,
        first_coordinate_image,
        rank_collapse_slice,
        base_lines_equal,
        k_side_slice,
        rank_hypothesis_violated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::ring::RingSpec;
    use std::path::PathBuf;

    fn corpus_dir() -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
    }

    #[test]
    fn basis_vocabulary() {
        assert_eq!(Basis::parse("established").unwrap(), Basis::Established);
        assert_eq!(Basis::parse("direct").unwrap(), Basis::Direct);
        assert_eq!(
            Basis::parse("oracle:image-gcd").unwrap(),
            Basis::Oracle("image-gcd".into())
        );
        assert!(Basis::parse("oracle:").is_err());
        assert!(Basis::parse("guess").is_err());
    }

    #[test]
    fn corpus_loads_and_every_basis_is_tagged() {
        let items = load_corpus(&corpus_dir()).unwrap();
        assert_eq!(items.len(), 3);
        for item in &items {
            assert!(!item.expectations.is_empty());
            for e in &item.expectations {
                let basis = Basis::parse(e.basis()).unwrap();
                if let Basis::Oracle(name) = basis {
                    assert!(!name.is_empty());
                }
            }
        }
    }

    #[test]
    fn corpus_passes_and_is_deterministic() {
        let report1 = run_corpus(&corpus_dir(), CorpusBudgets::default()).unwrap();
        assert!(report1.all_passed(), "\n{report1}");
        let report2 = run_corpus(&corpus_dir(), CorpusBudgets::default()).unwrap();
        assert_eq!(report1.to_string(), report2.to_string());
    }

    #[test]
    fn rigidity_harness_on_the_non_rigid_item() {
        let items = load_corpus(&corpus_dir()).unwrap();
        let item = &items[0];
        let t1 = item.file.tuple("t1").unwrap().to_vec();
        let t2 = item.file.tuple("t2").unwrap().to_vec();
        let report = rigidity_harness(
            &item.derivation,
            &[(t1.clone(), t2.clone()), (t1.clone(), t1.clone())],
            2,
            GbLimits::default(),
        )
        .unwrap();
        assert!(!report.verdicts[0].is_consistent());
        assert!(report.verdicts[1].is_consistent());
        let slice = report.k_side_slice.as_ref().expect("DY = X is invertible over K");
        assert_eq!(slice.element(), &parse("Y", item.file.ring()).unwrap());
        assert!(report.rank_hypothesis_violated);
    }

    #[test]
    fn rigidity_harness_rank_one_is_consistent() {
        let spec = RingSpec::new([], ["X", "Y", "Z"]).unwrap();
        let d = Derivation::new(
            &spec,
            [("Z".to_string(), parse("X^2 + Y", &spec).unwrap())],
        )
        .unwrap();
        let t1 = ["X", "Y", "Z"].map(|n| parse(n, &spec).unwrap()).to_vec();
        let t2 = vec![
            parse("X", &spec).unwrap(),
            parse("Y + X^3", &spec).unwrap(),
            parse("Z", &spec).unwrap(),
        ];
        let report =
            rigidity_harness(&d, &[(t1, t2)], 1, GbLimits::default()).unwrap();
        assert!(report.all_consistent());
        // D(Z) = X^2 + Y is not a base element (A = Q), so no K-side collapse.
        assert!(report.k_side_slice.is_none());
        assert!(!report.rank_hypothesis_violated);
    }

    #[test]
    fn triangulability_harness_identity_instance() {
        // D on Q[X][P,Q,R] with DP = 0, DQ = P, DR = Q; the first coordinate
        // of the triangular system is the kernel variable itself.
        let spec = RingSpec::new(["X"], ["P", "Q", "R"]).unwrap();
        let d = Derivation::new(
            &spec,
            [
                ("Q".to_string(), parse("P", &spec).unwrap()),
                ("R".to_string(), parse("Q", &spec).unwrap()),
            ],
        )
        .unwrap();
        let coords = ["P", "Q", "R"].map(|n| parse(n, &spec).unwrap()).to_vec();
        let report = triangulability_harness(&d, &coords, "P", GbLimits::default()).unwrap();
        assert!(report.triangular);
        assert!(report.first_coordinate_image.is_zero());
        assert!(report.rank_collapse_slice.is_none());
        assert!(report.base_lines_equal);
        assert!(!report.rank_hypothesis_violated);
    }

    #[test]
    fn triangulability_harness_flags_rank_collapse() {
        // Triangular system whose first coordinate has nonzero image in A:
        // (Y, T, Z) for the derivation DT = 0, DY = X, DZ = Y.
        let items = load_corpus(&corpus_dir()).unwrap();
        let item = &items[0];
        let spec = item.file.ring();
        let coords = vec![
            parse("Y", spec).unwrap(),
            parse("T", spec).unwrap(),
            parse("Z", spec).unwrap(),
        ];
        let report =
            triangulability_harness(&item.derivation, &coords, "T", GbLimits::default()).unwrap();
        assert!(report.triangular);
        assert_eq!(report.first_coordinate_image, parse("X", spec).unwrap());
        let slice = report.rank_collapse_slice.expect("(Y, X) is a local slice");
        assert_eq!(slice.image(), &parse("X", spec).unwrap());
        assert!(!report.base_lines_equal);
        assert!(report.rank_hypothesis_violated);
    }

    #[test]
    fn triangulability_harness_on_the_changed_line() {
        // (T', Y, Z) is triangular with DT' = 0, yet Q[X][T] != Q[X][T'].
        let items = load_corpus(&corpus_dir()).unwrap();
        let item = &items[0];
        let t2 = item.file.tuple("t2").unwrap().to_vec();
        let report =
            triangulability_harness(&item.derivation, &t2, "T", GbLimits::default()).unwrap();
        assert!(report.triangular);
        assert!(report.first_coordinate_image.is_zero());
        assert!(!report.base_lines_equal);
        assert!(report.rank_hypothesis_violated);
    }
}
