//! Checkable claims about the rings `R/I` of circulant independence
//! complexes, verified mechanically instance by instance.
//!
//! Each [`Claim`] is a statement about a single instance `C_n(S)`. Verifying
//! it yields [`Status::Holds`] or [`Status::Fails`] when the claim's
//! hypotheses are met, and [`Status::Inapplicable`] (with a reason in the
//! witness) when they are not. A failure of any claim on any instance is a
//! genuine counterexample, never a soft warning.

use crate::arith::{binomial, is_prime};
use crate::circulant::{build_circulant, enumerate_specs, CirculantSpec, Graph};
use crate::complex::{
    independence_complex_capped, ComplexError, SimplicialComplex, SkeletonConnectivity,
    DEFAULT_MAX_FACES,
};
use crate::homology::FieldSpec;
use crate::invariants::{
    betti_table_hochster_capped, hilbert_data, AlgebraicReport, BettiTable, InvariantsError,
    DEFAULT_MAX_BETTI_GROUND,
};
use num_integer::gcd;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// The claims this crate can verify, identified by the ids accepted on the
/// command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// `lem2.2`: for prime `n` and nonempty `S`, `n` divides every face
    /// count `f_i` (`i >= 0`), refined by `(i+1) f_i = n f_i(0)` where
    /// `f_i(0)` counts the faces of dimension `i` through vertex 0.
    PrimeFaceDivisibility,
    /// `thm2.3`: for prime `n` and nonempty `S`, the regularity index is 1,
    /// the reduced Euler characteristic is nonzero, and `n` divides the
    /// alternating sum `sum_{i=1..d} (-1)^i f_{i-1}`.
    PrimeHilbertRegularity,
    /// `cor2.5`: for prime `n`, nonempty `S`, and Cohen-Macaulay `R/I`,
    /// regularity equals depth.
    PrimeRegularityEqualsDepth,
    /// `lem3.2`: for prime `n` and nonempty `S`, every pure `k`-skeleton
    /// with `k >= 1` is connected.
    PrimeSkeletonConnectivity,
    /// `thm3.6`: for `S = {1,..,s}`, the combinatorial certificate holds:
    /// skeletons of dimension `>= 1` are connected, and the band subgraph on
    /// `{s+1,..,n-s-1}` is chordal with the natural vertex order as a
    /// perfect elimination order. Verified as stated only for prime `n`;
    /// composite orders report the certificate outcome as inapplicable.
    InitialSegmentCertificate,
    /// `thm4.1`: three equivalent descriptions of the 2-dimensional
    /// Cohen-Macaulay instances: `R/I` is CM with Krull dimension 2; the
    /// complex is 1-dimensional and connected; the complement connection set
    /// satisfies the arithmetic condition of [`check_cm1_condition3`].
    CmDimTwoEquivalence,
    /// `thm4.2`: Cohen-Macaulay of dimension 2 implies regularity 2.
    CmDimTwoRegularity,
    /// `thm4.3`: Cohen-Macaulay of dimension 2 implies the Cohen-Macaulay
    /// type matches the closed form of [`cm_type_formula`].
    CmDimTwoType,
    /// `cor4.6`: the Gorenstein instances of dimension 2 are exactly those
    /// with a single complement connection `i`, `gcd(n, i) = 1`, `n >= 4`.
    GorensteinDimTwoClassification,
    /// `conj-euler`: for nonempty `S` the reduced Euler characteristic of
    /// the independence complex never vanishes. A `Fails` here is a
    /// counterexample to an open conjecture.
    EulerNonvanishing,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::PrimeFaceDivisibility,
        Claim::PrimeHilbertRegularity,
        Claim::PrimeRegularityEqualsDepth,
        Claim::PrimeSkeletonConnectivity,
        Claim::InitialSegmentCertificate,
        Claim::CmDimTwoEquivalence,
        Claim::CmDimTwoRegularity,
        Claim::CmDimTwoType,
        Claim::GorensteinDimTwoClassification,
        Claim::EulerNonvanishing,
    ];

    /// Stable command-line identifier.
    pub fn id(self) -> &'static str {
        match self {
            Claim::PrimeFaceDivisibility => "lem2.2",
            Claim::PrimeHilbertRegularity => "thm2.3",
            Claim::PrimeRegularityEqualsDepth => "cor2.5",
            Claim::PrimeSkeletonConnectivity => "lem3.2",
            Claim::InitialSegmentCertificate => "thm3.6",
            Claim::CmDimTwoEquivalence => "thm4.1",
            Claim::CmDimTwoRegularity => "thm4.2",
            Claim::CmDimTwoType => "thm4.3",
            Claim::GorensteinDimTwoClassification => "cor4.6",
            Claim::EulerNonvanishing => "conj-euler",
        }
    }

    /// One-line human description for help output.
    pub fn description(self) -> &'static str {
        match self {
            Claim::PrimeFaceDivisibility => {
                "prime order: n divides every face count, refined through vertex 0"
            }
            Claim::PrimeHilbertRegularity => {
                "prime order: regularity index 1, nonzero reduced Euler characteristic, \
                 divisible alternating face sum"
            }
            Claim::PrimeRegularityEqualsDepth => {
                "prime order, Cohen-Macaulay: regularity equals depth"
            }
            Claim::PrimeSkeletonConnectivity => {
                "prime order: every skeleton of dimension >= 1 is connected"
            }
            Claim::InitialSegmentCertificate => {
                "S = {1..s}: connected skeletons and a chordal band graph with the \
                 natural perfect elimination order"
            }
            Claim::CmDimTwoEquivalence => {
                "Cohen-Macaulay in dimension 2 <=> connected 1-dimensional complex \
                 <=> arithmetic condition on the complement connections"
            }
            Claim::CmDimTwoRegularity => "Cohen-Macaulay of dimension 2: regularity is 2",
            Claim::CmDimTwoType => {
                "Cohen-Macaulay of dimension 2: type matches the closed-form count"
            }
            Claim::GorensteinDimTwoClassification => {
                "dimension-2 Gorenstein instances are exactly the coprime \
                 single-connection complements with n >= 4"
            }
            Claim::EulerNonvanishing => {
                "nonempty S: the reduced Euler characteristic never vanishes"
            }
        }
    }

    /// Does verifying this claim require the graded Betti table?
    pub fn requires_betti_table(self) -> bool {
        matches!(
            self,
            Claim::PrimeRegularityEqualsDepth
                | Claim::CmDimTwoEquivalence
                | Claim::CmDimTwoRegularity
                | Claim::CmDimTwoType
                | Claim::GorensteinDimTwoClassification
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown claim id `{0}`")]
pub struct ClaimParseError(pub String);

impl FromStr for Claim {
    type Err = ClaimParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.id() == s)
            .ok_or_else(|| ClaimParseError(s.to_string()))
    }
}

/// Verdict for one claim on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Inapplicable => "inapplicable",
        })
    }
}

/// Outcome of verifying one claim on one instance, with a JSON witness
/// carrying the measured quantities (or the reason a claim does not apply).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub claim: Claim,
    pub spec: CirculantSpec,
    pub status: Status,
    pub witness: Option<Value>,
}

/// Resource and field settings for verification runs.
#[derive(Debug, Clone)]
pub struct VerifyContext {
    pub field: FieldSpec,
    pub use_symmetry: bool,
    pub max_faces: usize,
    pub max_betti_ground: usize,
}

impl Default for VerifyContext {
    fn default() -> Self {
        VerifyContext {
            field: FieldSpec::Rationals,
            use_symmetry: true,
            max_faces: DEFAULT_MAX_FACES,
            max_betti_ground: DEFAULT_MAX_BETTI_GROUND,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
}

/// Everything the claim evaluators read; built once per instance.
struct Prepared {
    graph: Graph,
    delta: SimplicialComplex,
    algebra: Option<(BettiTable, AlgebraicReport)>,
}

fn prepare(
    spec: &CirculantSpec,
    ctx: &VerifyContext,
    with_table: bool,
) -> Result<Prepared, VerifyError> {
    let graph = build_circulant(spec);
    let delta = independence_complex_capped(&graph, ctx.max_faces)?;
    let algebra = if with_table {
        let table =
            betti_table_hochster_capped(&delta, ctx.field, ctx.use_symmetry, ctx.max_betti_ground)?;
        let report = AlgebraicReport::from_table(&delta, &table);
        Some((table, report))
    } else {
        None
    };
    Ok(Prepared {
        graph,
        delta,
        algebra,
    })
}

/// Verify a single claim on a single instance.
pub fn verify_instance(
    claim: Claim,
    spec: &CirculantSpec,
    ctx: &VerifyContext,
) -> Result<VerificationResult, VerifyError> {
    let prep = prepare(spec, ctx, claim.requires_betti_table())?;
    Ok(eval(claim, spec, &prep))
}

/// Verify several claims on one instance, sharing the complex and (when
/// needed) the Betti table across claims.
pub fn verify_claims(
    claims: &[Claim],
    spec: &CirculantSpec,
    ctx: &VerifyContext,
) -> Result<Vec<VerificationResult>, VerifyError> {
    let with_table = claims.iter().any(|c| c.requires_betti_table());
    let prep = prepare(spec, ctx, with_table)?;
    Ok(claims.iter().map(|&c| eval(c, spec, &prep)).collect())
}

fn eval(claim: Claim, spec: &CirculantSpec, prep: &Prepared) -> VerificationResult {
    let (status, witness) = match claim {
        Claim::PrimeFaceDivisibility => eval_face_divisibility(spec, prep),
        Claim::PrimeHilbertRegularity => eval_prime_hilbert(spec, prep),
        Claim::PrimeRegularityEqualsDepth => eval_reg_equals_depth(spec, prep),
        Claim::PrimeSkeletonConnectivity => eval_skeletons(spec, prep),
        Claim::InitialSegmentCertificate => eval_initial_segment(spec, prep),
        Claim::CmDimTwoEquivalence => eval_cm_equivalence(spec, prep),
        Claim::CmDimTwoRegularity => eval_cm_regularity(spec, prep),
        Claim::CmDimTwoType => eval_cm_type(spec, prep),
        Claim::GorensteinDimTwoClassification => eval_gorenstein(spec, prep),
        Claim::EulerNonvanishing => eval_euler(spec, prep),
    };
    VerificationResult {
        claim,
        spec: spec.clone(),
        status,
        witness,
    }
}

fn inapplicable(reason: &str) -> (Status, Option<Value>) {
    (Status::Inapplicable, Some(json!({ "reason": reason })))
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Holds
    } else {
        Status::Fails
    }
}

fn eval_face_divisibility(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    let n = spec.n();
    if !is_prime(n) {
        return inapplicable("order is not prime");
    }
    if spec.connections().is_empty() {
        return inapplicable("connection set is empty");
    }
    let dim = prep.delta.dim().expect("independence complex has vertices");
    for i in 0..=dim {
        let level = prep.delta.faces_of_cardinality((i + 1) as usize);
        let count = level.len() as i128;
        let through0 = level.iter().filter(|&&f| f & 1 != 0).count() as i128;
        if count % n as i128 != 0 || (i as i128 + 1) * count != n as i128 * through0 {
            let witness = json!({
                "dimension": i,
                "face_count": count as i64,
                "faces_through_vertex_zero": through0 as i64,
            });
            return (Status::Fails, Some(witness));
        }
    }
    (Status::Holds, None)
}

fn eval_prime_hilbert(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    let n = spec.n();
    if !is_prime(n) {
        return inapplicable("order is not prime");
    }
    if spec.connections().is_empty() {
        return inapplicable("connection set is empty");
    }
    let f = prep.delta.f_vector();
    let hd = hilbert_data(&f, n);
    let euler = f.reduced_euler();
    let alternating: i128 = f
        .entries()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &fi)| if i % 2 == 0 { fi as i128 } else { -(fi as i128) })
        .sum();
    let ok = hd.regularity_index() == 1 && euler != 0 && alternating % n as i128 == 0;
    let witness = json!({
        "regularity_index": hd.regularity_index(),
        "reduced_euler": euler,
        "alternating_face_sum": alternating as i64,
    });
    (verdict(ok), Some(witness))
}

fn eval_reg_equals_depth(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    if !is_prime(spec.n()) {
        return inapplicable("order is not prime");
    }
    if spec.connections().is_empty() {
        return inapplicable("edge ideal is zero");
    }
    let report = &prep.algebra.as_ref().expect("claim requires the table").1;
    if !report.is_cohen_macaulay {
        return inapplicable("ring is not Cohen-Macaulay");
    }
    let witness = json!({
        "regularity": report.regularity,
        "depth": report.depth,
    });
    (verdict(report.regularity == report.depth), Some(witness))
}

fn eval_skeletons(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    if !is_prime(spec.n()) {
        return inapplicable("order is not prime");
    }
    if spec.connections().is_empty() {
        return inapplicable("connection set is empty");
    }
    let dim = prep.delta.dim().expect("independence complex has vertices");
    for k in 1..=dim {
        if prep.delta.skeleton_connectivity(k as usize) != SkeletonConnectivity::Connected {
            return (Status::Fails, Some(json!({ "skeleton_dimension": k })));
        }
    }
    (Status::Holds, None)
}

fn eval_initial_segment(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    let n = spec.n();
    let s = spec.connections().len();
    if s == 0 || !spec.connections().iter().copied().eq(1..=s) {
        return inapplicable("connection set is not an initial segment {1,..,s}");
    }
    let cert = sequential_certificate(&prep.graph, &prep.delta, s);
    let mut witness = json!({
        "skeletons_connected": cert.skeletons_connected,
        "band_order_is_peo": cert.band_order_is_peo,
        "band_chordal": cert.band_chordal,
        "certificate_holds": cert.holds(),
    });
    if let Some(k) = cert.first_disconnected_skeleton {
        witness["first_disconnected_skeleton"] = json!(k);
    }
    if !is_prime(n) {
        witness["reason"] = json!("order is not prime");
        return (Status::Inapplicable, Some(witness));
    }
    (verdict(cert.holds()), Some(witness))
}

fn eval_cm_equivalence(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    let parts = cm1_parts(spec, prep);
    let witness = json!({
        "cohen_macaulay_dimension_two": parts.algebraic,
        "connected_one_dimensional": parts.topological,
        "complement_arithmetic": parts.arithmetic,
    });
    (verdict(parts.consistent()), Some(witness))
}

fn eval_cm_regularity(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    if spec.connections().is_empty() {
        return inapplicable("edge ideal is zero");
    }
    let report = &prep.algebra.as_ref().expect("claim requires the table").1;
    if !(report.is_cohen_macaulay && report.krull_dim == 2) {
        return inapplicable("ring is not Cohen-Macaulay of dimension 2");
    }
    let witness = json!({ "regularity": report.regularity });
    (verdict(report.regularity == 2), Some(witness))
}

fn eval_cm_type(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    if spec.connections().is_empty() {
        return inapplicable("edge ideal is zero");
    }
    let report = &prep.algebra.as_ref().expect("claim requires the table").1;
    if !(report.is_cohen_macaulay && report.krull_dim == 2) {
        return inapplicable("ring is not Cohen-Macaulay of dimension 2");
    }
    let actual = report.cm_type.expect("Cohen-Macaulay ring has a type") as i64;
    let formula = cm_type_formula(spec);
    let witness = json!({
        "cm_type": actual,
        "closed_form": formula,
    });
    (verdict(actual == formula), Some(witness))
}

fn eval_gorenstein(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    if spec.n() == 2 && spec.connections().is_empty() {
        return inapplicable("edge ideal is zero");
    }
    let report = &prep.algebra.as_ref().expect("claim requires the table").1;
    let actual = report.is_gorenstein && report.krull_dim == 2;
    let classified = gorenstein_classification(spec);
    let witness = json!({
        "gorenstein_of_dimension_two": actual,
        "classified": classified,
    });
    (verdict(actual == classified), Some(witness))
}

fn eval_euler(spec: &CirculantSpec, prep: &Prepared) -> (Status, Option<Value>) {
    if spec.connections().is_empty() {
        return inapplicable("connection set is empty");
    }
    let euler = prep.delta.f_vector().reduced_euler();
    let witness = json!({ "reduced_euler": euler });
    (verdict(euler != 0), Some(witness))
}

/// The three conditions whose equivalence [`Claim::CmDimTwoEquivalence`]
/// asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cm1Equivalence {
    /// `R/I` is Cohen-Macaulay with Krull dimension 2.
    pub algebraic: bool,
    /// The complex is 1-dimensional and connected.
    pub topological: bool,
    /// The complement connection set passes [`check_cm1_condition3`].
    pub arithmetic: bool,
}

impl Cm1Equivalence {
    pub fn consistent(&self) -> bool {
        self.algebraic == self.topological && self.topological == self.arithmetic
    }
}

fn cm1_parts(spec: &CirculantSpec, prep: &Prepared) -> Cm1Equivalence {
    let report = &prep.algebra.as_ref().expect("claim requires the table").1;
    Cm1Equivalence {
        algebraic: report.is_cohen_macaulay && report.krull_dim == 2,
        topological: prep.delta.dim() == Some(1)
            && prep.delta.skeleton_connectivity(1) == SkeletonConnectivity::Connected,
        arithmetic: check_cm1_condition3(spec),
    }
}

/// Arithmetic description of the 2-dimensional Cohen-Macaulay instances, in
/// terms of the complement connections `T = {1,..,floor(n/2)} \ S`:
/// `gcd(n, T) = 1`, no difference `b - a` of two connections lies in `T`,
/// and no value `n - (a + b)` (allowing `a = b`) lies in `T`.
pub fn check_cm1_condition3(spec: &CirculantSpec) -> bool {
    let n = spec.n();
    let complement = spec.complement();
    let t = complement.connections();
    if t.iter().fold(n, |acc, &c| gcd(acc, c)) != 1 {
        return false;
    }
    let member = |x: usize| t.binary_search(&x).is_ok();
    for (idx, &a) in t.iter().enumerate() {
        for &b in &t[idx..] {
            if b > a && member(b - a) {
                return false;
            }
            if a + b < n && member(n - a - b) {
                return false;
            }
        }
    }
    true
}

/// Evaluate the three equivalent conditions of [`Claim::CmDimTwoEquivalence`]
/// independently on one instance.
pub fn verify_cm1_equivalence(
    spec: &CirculantSpec,
    ctx: &VerifyContext,
) -> Result<Cm1Equivalence, VerifyError> {
    let prep = prepare(spec, ctx, true)?;
    Ok(cm1_parts(spec, &prep))
}

/// Closed-form Cohen-Macaulay type of the 2-dimensional CM instances:
/// `C(n,2) - n|S| - n/2 + 1` when `n` is even with `n/2` in `S`, and
/// `C(n,2) - n(|S|+1) + 1` otherwise.
pub fn cm_type_formula(spec: &CirculantSpec) -> i64 {
    let n = spec.n();
    let s = spec.connections().len();
    let pairs = binomial(n, 2) as i64;
    if n.is_multiple_of(2) && spec.connections().contains(&(n / 2)) {
        pairs - (n * s) as i64 - (n / 2) as i64 + 1
    } else {
        pairs - (n * (s + 1)) as i64 + 1
    }
}

/// Classification predicate for the dimension-2 Gorenstein instances: the
/// complement connection set is a single `i` with `gcd(n, i) = 1`, `n >= 4`.
pub fn gorenstein_classification(spec: &CirculantSpec) -> bool {
    let n = spec.n();
    let complement = spec.complement();
    let t = complement.connections();
    n >= 4 && t.len() == 1 && gcd(n, t[0]) == 1
}

/// Combinatorial certificate checked by [`Claim::InitialSegmentCertificate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequentialCertificate {
    /// Every pure `k`-skeleton with `k >= 1` is connected.
    pub skeletons_connected: bool,
    /// Smallest `k >= 1` whose skeleton is disconnected, if any.
    pub first_disconnected_skeleton: Option<usize>,
    /// The natural (increasing) order on the band `{s+1,..,n-s-1}` is a
    /// perfect elimination order of the induced subgraph.
    pub band_order_is_peo: bool,
    /// The band subgraph is chordal.
    pub band_chordal: bool,
}

impl SequentialCertificate {
    pub fn holds(&self) -> bool {
        self.skeletons_connected && self.band_order_is_peo && self.band_chordal
    }
}

fn sequential_certificate(
    graph: &Graph,
    delta: &SimplicialComplex,
    s: usize,
) -> SequentialCertificate {
    let n = graph.vertex_count();
    let dim = delta.dim().expect("independence complex has vertices");
    let first_disconnected = (1..=dim).find(|&k| {
        delta.skeleton_connectivity(k as usize) != SkeletonConnectivity::Connected
    });
    let band: Vec<usize> = if 2 * s + 2 <= n {
        (s + 1..=n - s - 1).collect()
    } else {
        Vec::new()
    };
    let sub = graph
        .induced_subgraph(&band)
        .expect("band vertices are valid");
    let natural: Vec<usize> = (0..band.len()).collect();
    let band_order_is_peo = sub
        .graph
        .is_perfect_elimination_order(&natural)
        .expect("natural order is a permutation");
    SequentialCertificate {
        skeletons_connected: first_disconnected.is_none(),
        first_disconnected_skeleton: first_disconnected.map(|k| k as usize),
        band_order_is_peo,
        band_chordal: sub.graph.is_chordal(),
    }
}

/// Check the combinatorial certificate for `C_n({1,..,s})` directly, with no
/// primality hypothesis. Panics unless `1 <= s <= n/2` (and `2 <= n <= 64`).
pub fn verify_sequential_s2_certificate(
    n: usize,
    s: usize,
    max_faces: usize,
) -> Result<SequentialCertificate, VerifyError> {
    assert!(s >= 1, "certificate needs a nonempty initial segment");
    let spec = CirculantSpec::new(n, 1..=s).expect("initial segment spec is valid");
    let graph = build_circulant(&spec);
    let delta = independence_complex_capped(&graph, max_faces)?;
    Ok(sequential_certificate(&graph, &delta, s))
}

/// Verify [`Claim::PrimeHilbertRegularity`] on one instance.
pub fn verify_prime_ri(
    spec: &CirculantSpec,
    ctx: &VerifyContext,
) -> Result<VerificationResult, VerifyError> {
    verify_instance(Claim::PrimeHilbertRegularity, spec, ctx)
}

/// Verify [`Claim::PrimeFaceDivisibility`] on one instance.
pub fn verify_prime_f_divisibility(
    spec: &CirculantSpec,
    ctx: &VerifyContext,
) -> Result<VerificationResult, VerifyError> {
    verify_instance(Claim::PrimeFaceDivisibility, spec, ctx)
}

/// Verify [`Claim::PrimeSkeletonConnectivity`] on one instance.
pub fn verify_skeleton_connectivity(
    spec: &CirculantSpec,
    ctx: &VerifyContext,
) -> Result<VerificationResult, VerifyError> {
    verify_instance(Claim::PrimeSkeletonConnectivity, spec, ctx)
}

/// Verify [`Claim::PrimeRegularityEqualsDepth`] on one instance.
pub fn verify_reg_equals_depth(
    spec: &CirculantSpec,
    ctx: &VerifyContext,
) -> Result<VerificationResult, VerifyError> {
    verify_instance(Claim::PrimeRegularityEqualsDepth, spec, ctx)
}

/// Scan every connection set passing `filter` for all listed orders and
/// collect the instances whose independence complex has reduced Euler
/// characteristic zero.
pub fn euler_zero_search<F>(
    orders: &[usize],
    max_faces: usize,
    filter: F,
) -> Result<Vec<CirculantSpec>, VerifyError>
where
    F: Fn(&CirculantSpec) -> bool,
{
    let mut found = Vec::new();
    for &n in orders {
        for spec in enumerate_specs(n) {
            if !filter(&spec) {
                continue;
            }
            let graph = build_circulant(&spec);
            let delta = independence_complex_capped(&graph, max_faces)?;
            if delta.f_vector().reduced_euler() == 0 {
                found.push(spec);
            }
        }
    }
    Ok(found)
}
