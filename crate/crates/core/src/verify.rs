//! Verification suites. Each suite runs one family of identities on one
//! algebra at one orientation and returns a [`VerifyReport`].
//!
//! Random cases come from a [`Sampler`] seeded per suite, so a report
//! depends only on (suite, algebra, λ, seed).

use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::Serialize;

use crate::algebra::AlgebraKind;
use crate::error::{Error, Result, Seminorm};
use crate::grading::{self, GradingAssignment};
use crate::hopf::{self, BasisInverseTable, CompatibilityEntry};
use crate::numeric;
use crate::octonion::{self, OctonionLike};
use crate::sampling::Sampler;
use crate::scalar::{lift, rel_close, Rational, Scalar};
use crate::sedenion::{self, SedenionLike, TableDiffEntry};
use crate::table::Orientation;
use crate::transcribed;

/// At most this many failures are listed in a report; all are counted.
pub const MAX_LISTED_FAILURES: usize = 20;

/// Relative tolerance of the floating-point checks.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Assoc,
    TableDiff,
    Matrix,
    Norm,
    Closure,
    Commutant,
    Hopf,
    Grading,
    Cocycle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Assoc,
        Suite::TableDiff,
        Suite::Matrix,
        Suite::Norm,
        Suite::Closure,
        Suite::Commutant,
        Suite::Hopf,
        Suite::Grading,
        Suite::Cocycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Assoc => "assoc",
            Suite::TableDiff => "table-diff",
            Suite::Matrix => "matrix",
            Suite::Norm => "norm",
            Suite::Closure => "closure",
            Suite::Commutant => "commutant",
            Suite::Hopf => "hopf",
            Suite::Grading => "grading",
            Suite::Cocycle => "cocycle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub algebra: AlgebraKind,
    pub orientation: Orientation,
    pub seed: u64,
    /// Treat printed-table mismatches as failures.
    pub strict: bool,
    /// Random pairs for the matrix, norm and commutant identities.
    pub random_cases: usize,
    /// Orthogonal pairs for closure and norm multiplicativity.
    pub orthogonal_pairs: usize,
}

impl VerifyConfig {
    pub fn new(algebra: AlgebraKind, orientation: Orientation) -> Self {
        VerifyConfig { algebra, orientation, seed: 0, strict: false, random_cases: 200, orthogonal_pairs: 500 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub case: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub algebra: String,
    pub lambda: i8,
    pub cases: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    pub table_diff: Vec<TableDiffEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub compatibility: Option<Vec<CompatibilityEntry>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

/// Accumulates cases and failures for one suite.
struct Recorder {
    cases: usize,
    failure_count: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { cases: 0, failure_count: 0, failures: Vec::new(), notes: Vec::new() }
    }

    /// Count a case; on failure, describe it lazily.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> (String, String, String)) {
        self.cases += 1;
        if !ok {
            self.fail(describe);
        }
    }

    /// A failure that is not a case of its own.
    fn fail(&mut self, describe: impl FnOnce() -> (String, String, String)) {
        self.failure_count += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            let (case, left, right) = describe();
            self.failures.push(Failure { case, left, right });
        }
    }

    fn eq<T: fmt::Debug + PartialEq>(&mut self, case: impl FnOnce() -> String, left: &T, right: &T) {
        self.check(left == right, || (case(), format!("{left:?}"), format!("{right:?}")));
    }

    fn finish(self, suite: Suite, config: &VerifyConfig) -> VerifyReport {
        VerifyReport {
            suite: suite.name().into(),
            algebra: config.algebra.name().into(),
            lambda: config.orientation.value(),
            cases: self.cases,
            failure_count: self.failure_count,
            failures: self.failures,
            table_diff: Vec::new(),
            compatibility: None,
            notes: self.notes,
            wall_ms: None,
        }
    }
}

fn render<T: Scalar>(c: &[T]) -> String {
    let parts: Vec<String> = c.iter().map(Scalar::render).collect();
    format!("[{}]", parts.join(", "))
}

pub fn run(suite: Suite, config: &VerifyConfig) -> VerifyReport {
    let mut report = match suite {
        Suite::Assoc => assoc(config),
        Suite::TableDiff => table_diff(config),
        Suite::Matrix => matrix(config),
        Suite::Norm => match config.algebra {
            AlgebraKind::OctonionLike => octonion_norm(config),
            AlgebraKind::SedenionLike => sedenion_norm(config),
        },
        Suite::Closure => closure(config),
        Suite::Commutant => commutant(config),
        Suite::Hopf => hopf_suite(config),
        Suite::Grading => grading_suite(config),
        Suite::Cocycle => cocycle(config),
    };
    if matches!(suite, Suite::TableDiff) && config.strict {
        for d in report.table_diff.clone() {
            report.failure_count += 1;
            if report.failures.len() < MAX_LISTED_FAILURES {
                report.failures.push(Failure {
                    case: format!("printed entry ({}, {})", d.row, d.col),
                    left: d.printed_entry,
                    right: d.derived_entry,
                });
            }
        }
    }
    report
}

fn assoc(config: &VerifyConfig) -> VerifyReport {
    let table = config.algebra.table(config.orientation);
    let names = config.algebra.names();
    let d = table.dim();
    let mut rec = Recorder::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (ij, s1) = table.unit_product(i, j);
                let (left, s2) = table.unit_product(ij, k);
                let (jk, s3) = table.unit_product(j, k);
                let (right, s4) = table.unit_product(i, jk);
                rec.eq(
                    || format!("({} {}) {} vs {} ({} {})", names[i], names[j], names[k], names[i], names[j], names[k]),
                    &(left, (s1 * s2).to_i8()),
                    &(right, (s3 * s4).to_i8()),
                );
            }
        }
    }
    rec.finish(Suite::Assoc, config)
}

fn table_diff(config: &VerifyConfig) -> VerifyReport {
    let kind = config.algebra;
    let table = kind.table(config.orientation);
    let names = kind.names();
    let mut rec = Recorder::new();
    // The derived table's own invariants at the requested orientation.
    for j in 0..kind.dim() {
        rec.eq(|| format!("identity row/column at {}", names[j]), &table.unit_product(0, j), &table.unit_product(j, 0));
        rec.eq(|| format!("1·{}", names[j]), &table.unit_product(0, j).0, &j);
        let expected = if kind.is_real_unit(j) { 1 } else { -1 };
        rec.eq(|| format!("{}²", names[j]), &(table.unit_product(j, j).0, table.constant(j, j).to_i8()), &(0, expected));
    }
    let diff = match kind {
        AlgebraKind::OctonionLike => {
            let derived = octonion::structure_table(Orientation::Positive);
            let printed = transcribed::octonion_table();
            let render = |(k, s): (usize, crate::clifford::Sign)| {
                let body = if k == 0 { "1" } else { octonion::NAMES[k] };
                if s.is_minus() { format!("-{body}") } else { body.to_string() }
            };
            let mut out = Vec::new();
            for i in 0..octonion::DIM {
                for j in 0..octonion::DIM {
                    if derived.unit_product(i, j) != printed[i][j] {
                        out.push(TableDiffEntry {
                            row: octonion::NAMES[i].into(),
                            col: octonion::NAMES[j].into(),
                            printed_entry: render(printed[i][j]),
                            derived_entry: render(derived.unit_product(i, j)),
                        });
                    }
                }
            }
            out
        }
        AlgebraKind::SedenionLike => sedenion::table_diff(),
    };
    if config.orientation == Orientation::Negative {
        rec.notes.push("printed tables are compared against the λ=+1 derivation".into());
    }
    let mut report = rec.finish(Suite::TableDiff, config);
    report.table_diff = diff;
    report
}

fn matrix(config: &VerifyConfig) -> VerifyReport {
    let o = config.orientation;
    let mut rng = Sampler::new(config.seed);
    let mut rec = Recorder::new();
    match config.algebra {
        AlgebraKind::OctonionLike => {
            for n in 0..config.random_cases {
                let (x, y) = (rng.octonion(o), rng.octonion(o));
                let z = x.multiply(&y).expect("same orientation").coeffs().to_vec();
                let via_left = x.left_matrix().mul_vec(y.coeffs());
                let via_right = y.right_matrix().mul_vec(x.coeffs());
                rec.check(via_left == z && via_right == z, || {
                    (format!("pair {n}: X={} Y={}", render(x.coeffs()), render(y.coeffs())), render(&z), render(&via_left))
                });
            }
            if o == Orientation::Positive {
                for (label, printed, left) in [
                    ("M_x", transcribed::left_matrix_pattern(), true),
                    ("M_y", transcribed::right_matrix_pattern(), false),
                ] {
                    for r in 0..octonion::DIM {
                        let derived: Vec<(usize, i8)> = (0..octonion::DIM)
                            .map(|c| symbolic_entry(r, c, left))
                            .collect();
                        let expected: Vec<(usize, i8)> = printed[r].iter().map(|&(k, s)| (k, s.to_i8())).collect();
                        rec.eq(|| format!("{label} row {r}"), &derived, &expected);
                    }
                }
            }
        }
        AlgebraKind::SedenionLike => {
            for n in 0..config.random_cases {
                let (s, t) = (rng.sedenion(o), rng.sedenion(o));
                let z = s.multiply(&t).expect("same orientation").coeffs().to_vec();
                let via_left = s.left_matrix().mul_vec(t.coeffs());
                rec.check(via_left == z, || {
                    (format!("pair {n}: S={} T={}", render(s.coeffs()), render(t.coeffs())), render(&z), render(&via_left))
                });
            }
        }
    }
    rec.finish(Suite::Matrix, config)
}

/// Entry `(r, c)` of `M_x` (or `M_y`) at λ=+1 as `(k, ±1)`, meaning `±x_k`.
fn symbolic_entry(r: usize, c: usize, left: bool) -> (usize, i8) {
    for k in 0..octonion::DIM {
        let u = OctonionLike::<Rational>::unit(k, Orientation::Positive);
        let m = if left { u.left_matrix() } else { u.right_matrix() };
        let v = m.get(r, c).to_f64();
        if v != 0.0 {
            return (k, v as i8);
        }
    }
    (usize::MAX, 0)
}

fn octonion_norm(config: &VerifyConfig) -> VerifyReport {
    type Oct = OctonionLike<Rational>;
    let o = config.orientation;
    let mut rng = Sampler::new(config.seed);
    let mut rec = Recorder::new();
    let zero = Rational::from_i64(0);

    let minus = Oct::new(lift([1, 0, 0, 0, 0, 0, 0, -1]), o);
    let plus = Oct::new(lift([1, 0, 0, 0, 0, 0, 0, 1]), o);
    rec.check(!minus.is_zero(), || ("1 - u_7 is nonzero".into(), "0".into(), "nonzero".into()));
    rec.eq(|| "‖1 - u_7‖₁²".into(), &minus.seminorm_sq(Seminorm::First), &zero);
    rec.eq(|| "‖1 + u_7‖₂²".into(), &plus.seminorm_sq(Seminorm::Second), &zero);

    let mut elements: Vec<Oct> = vec![
        minus.clone(),
        plus.clone(),
        Oct::new(lift([0, 1, 0, 0, 0, 0, 1, 0]), o),
        Oct::new(lift([2, 1, 0, 0, 0, 0, 1, 2]), o),
    ];
    elements.extend((0..config.random_cases).map(|_| rng.octonion(o)));

    for (n, x) in elements.iter().enumerate() {
        let n1 = x.seminorm_sq(Seminorm::First);
        let n2 = x.seminorm_sq(Seminorm::Second);
        // Existence is decided by the linear system, not by the seminorms.
        let mut rhs = vec![zero.clone(); octonion::DIM];
        rhs[0] = Rational::from_i64(1);
        let solvable = x.left_matrix().solve(&rhs).is_some();
        let nonsingular = !n1.is_zero() && !n2.is_zero();
        rec.check(solvable == nonsingular, || {
            (format!("inverse existence for X={}", render(x.coeffs())), format!("solvable={solvable}"), format!("seminorms nonzero={nonsingular}"))
        });
        if let Ok(inv) = x.inverse() {
            let one = Oct::one(o);
            let ok = x.multiply(&inv).ok() == Some(one.clone()) && inv.multiply(x).ok() == Some(one);
            rec.check(ok, || (format!("X·X⁻¹ for X={}", render(x.coeffs())), render(inv.coeffs()), "u_0".into()));
        }

        let xf = OctonionLike::new(x.coeffs().clone().map(|c| c.to_f64()), o);
        let (f1, f2) = (n1.to_f64(), n2.to_f64());
        let det = numeric::determinant(&xf.left_matrix()).abs();
        rec.check(rel_close(det, (f1 * f2).powi(2), FLOAT_TOLERANCE), || {
            (format!("|det M_x| case {n}"), det.to_string(), ((f1 * f2).powi(2)).to_string())
        });
        let dense = numeric::sorted_magnitudes_sq(&numeric::eigenvalues(&xf.left_matrix()));
        let mut closed = xf.eigen_magnitudes_sq().to_vec();
        closed.sort_by(f64::total_cmp);
        let ok = closed.iter().zip(&dense).all(|(a, b)| rel_close(*a, *b, FLOAT_TOLERANCE));
        rec.check(ok, || (format!("eigenvalue magnitudes case {n}"), format!("{closed:?}"), format!("{dense:?}")));
    }

    let mut rng = Sampler::new(config.seed.wrapping_add(1));
    for n in 0..config.random_cases {
        let (x, y) = (rng.octonion(o), rng.octonion(o));
        let z = x.multiply(&y).expect("same orientation");
        for w in Seminorm::BOTH {
            rec.eq(
                || format!("seminorm {} multiplicativity, pair {n}", w.index()),
                &z.seminorm_sq(w),
                &(x.seminorm_sq(w) * y.seminorm_sq(w)),
            );
        }
    }
    rec.finish(Suite::Norm, config)
}

fn sedenion_norm(config: &VerifyConfig) -> VerifyReport {
    type Sed = SedenionLike<Rational>;
    let o = config.orientation;
    let mut rec = Recorder::new();
    if o == Orientation::Positive {
        let s = Sed::new(lift([1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1]), o);
        rec.check(s.orthogonality_defect().is_zero(), || {
            ("reference element defect".into(), render(s.orthogonality_defect().coeffs()), "0".into())
        });
        let n = s.norm_sq().map(|v| v.render()).unwrap_or_else(|e| e.to_string());
        rec.eq(|| "reference element ‖S‖²".into(), &n, &"4".to_string());
    } else {
        rec.notes.push("the reference element 1+e0123+e04+e1234 is checked at λ=+1 only".into());
    }

    let mut rng = Sampler::new(config.seed);
    for n in 0..config.random_cases {
        let s = rng.sedenion(o);
        let sum: Rational = s.coeffs().iter().map(|c| c * c).sum();
        rec.eq(|| format!("scalar(SS†) = Σs² case {n}"), &s.self_product_scalar(), &sum);
    }

    let mut rng = Sampler::new(config.seed.wrapping_add(1));
    for n in 0..config.orthogonal_pairs {
        let (s, t) = (rng.orthogonal_sedenion(o), rng.orthogonal_sedenion(o));
        match s.norm_multiplicativity_check(&t) {
            Ok((lhs, rhs)) => rec.check(lhs == rhs, || {
                (
                    format!("‖ST‖² = ‖S‖²‖T‖², pair {n}: S={} T={}", render(s.coeffs()), render(t.coeffs())),
                    lhs.render(),
                    rhs.render(),
                )
            }),
            Err(e) => rec.check(false, || (format!("pair {n}"), e.to_string(), "orthogonal".into())),
        }
    }
    rec.finish(Suite::Norm, config)
}

fn closure(config: &VerifyConfig) -> VerifyReport {
    let o = config.orientation;
    let mut rec = Recorder::new();
    if config.algebra == AlgebraKind::OctonionLike {
        rec.notes.push("the orthogonality condition is defined for sedenion-like elements only".into());
        return rec.finish(Suite::Closure, config);
    }
    type Sed = SedenionLike<Rational>;
    let mut structured = vec![(Sed::one(o), Sed::one(o))];
    if o == Orientation::Positive {
        let e1 = Sed::new(lift([1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1]), o);
        structured.push((e1.clone(), e1));
    }
    let mut rng = Sampler::new(config.seed);
    let sampled = (0..config.orthogonal_pairs).map(|_| (rng.orthogonal_sedenion(o), rng.orthogonal_sedenion(o)));
    for (n, (s, t)) in structured.into_iter().chain(sampled).enumerate() {
        match s.closure_check(&t) {
            Ok(defect) => rec.check(defect.is_zero(), || {
                (
                    format!("defect(ST), pair {n}: S={} T={}", render(s.coeffs()), render(t.coeffs())),
                    render(defect.coeffs()),
                    "0".into(),
                )
            }),
            Err(e) => rec.check(false, || (format!("pair {n}"), e.to_string(), "orthogonal".into())),
        }
    }
    rec.finish(Suite::Closure, config)
}

fn commutant(config: &VerifyConfig) -> VerifyReport {
    let o = config.orientation;
    let mut rng = Sampler::new(config.seed);
    let mut rec = Recorder::new();
    for n in 0..config.random_cases {
        match config.algebra {
            AlgebraKind::OctonionLike => {
                let (x, y) = (rng.octonion(o), rng.octonion(o));
                let xx = x.multiply(&x.dagger()).expect("same orientation");
                let imaginary_zero = (1..7).all(|i| xx.coeff(i).is_zero());
                rec.check(imaginary_zero, || (format!("XX† imaginary part, case {n}"), render(xx.coeffs()), "span{u_0, u_7}".into()));
                rec.eq(|| format!("XX† = X†X, case {n}"), &xx, &x.dagger().multiply(&x).expect("same orientation"));
                rec.eq(
                    || format!("(XX†)Y = Y(XX†), case {n}"),
                    &xx.multiply(&y).expect("same orientation"),
                    &y.multiply(&xx).expect("same orientation"),
                );
            }
            AlgebraKind::SedenionLike => {
                let (s, t) = (rng.sedenion(o), rng.sedenion(o));
                let ok = s.commutant_check(&t).expect("same orientation");
                rec.check(ok, || {
                    let n2 = s.multiply(&s.dagger()).expect("same orientation");
                    (
                        format!("SS† central, case {n}: S={} T={}", render(s.coeffs()), render(t.coeffs())),
                        format!("SS†={}", render(n2.coeffs())),
                        "commutes with T".into(),
                    )
                });
            }
        }
    }
    rec.finish(Suite::Commutant, config)
}

fn hopf_suite(config: &VerifyConfig) -> VerifyReport {
    let kind = config.algebra;
    let table = kind.table(config.orientation);
    let names = kind.names();
    let inverses = BasisInverseTable::for_algebra(kind);
    let mut rec = Recorder::new();
    let failures = inverses.failures(table);
    rec.check(failures.is_empty(), || ("basis inverse table".into(), format!("{failures:?}"), "[]".into()));
    for i in 0..kind.dim() {
        let mut u = vec![Rational::from_i64(0); kind.dim()];
        u[i] = Rational::from_i64(1);
        rec.check(hopf::verify_coassociativity(&u), || (format!("coassociativity on {}", names[i]), "false".into(), "true".into()));
        rec.check(hopf::verify_counit(&u), || (format!("counit on {}", names[i]), "false".into(), "true".into()));
        rec.check(hopf::verify_antipode(&u, table, &inverses), || (format!("antipode on {}", names[i]), "false".into(), "true".into()));
    }
    let mut rng = Sampler::new(config.seed);
    for n in 0..config.random_cases {
        let x: Vec<Rational> = (0..kind.dim()).map(|_| rng.rational()).collect();
        rec.check(hopf::verify_coassociativity(&x) && hopf::verify_counit(&x), || {
            (format!("coalgebra axioms on random element {n}"), render(&x), "true".into())
        });
    }
    let report = hopf::compatibility_report(table);
    for e in &report {
        // Flagged exactly when the evaluated structure constant is negative.
        rec.check(e.compatible == (e.structure_sign == 1), || {
            (format!("compatibility ({}, {})", names[e.i], names[e.j]), e.compatible.to_string(), e.structure_sign.to_string())
        });
    }
    let incompatible = report.iter().filter(|e| !e.compatible).count();
    rec.notes.push(format!("coproduct is not multiplicative on {incompatible} of {} basis pairs", report.len()));
    let mut out = rec.finish(Suite::Hopf, config);
    out.compatibility = Some(report);
    out
}

fn grading_suite(config: &VerifyConfig) -> VerifyReport {
    let kind = config.algebra;
    let table = kind.table(config.orientation);
    let names = kind.names();
    let printed = GradingAssignment::transcribed(kind);
    let mut rec = Recorder::new();
    for (i, j, e) in table.entries() {
        let lhs = printed.degree(i).add(printed.degree(j));
        rec.eq(|| format!("|{}| + |{}| = |{}|", names[i], names[j], names[e.index]), &lhs, &printed.degree(e.index));
    }
    // Assignment-level checks add failures but not cases.
    if !printed.is_bijection_onto_even_subgroup() {
        rec.fail(|| ("printed degrees form a bijection onto the even subgroup".into(), "false".into(), "true".into()));
    }
    let constructed = GradingAssignment::constructed(kind);
    if constructed != printed {
        rec.fail(|| ("generator-indicator degrees equal printed degrees".into(), format!("{:?}", constructed.degrees()), format!("{:?}", printed.degrees())));
    }
    rec.finish(Suite::Grading, config)
}

fn cocycle(config: &VerifyConfig) -> VerifyReport {
    let kind = config.algebra;
    let table = kind.table(config.orientation);
    let mut rec = Recorder::new();
    let one = Rational::from_i64(1);
    let phi = match grading::associator_cocycle::<Rational>(table) {
        Ok(phi) => phi,
        Err(e) => {
            rec.fail(|| ("associator cocycle".into(), e.to_string(), "defined".into()));
            return rec.finish(Suite::Cocycle, config);
        }
    };
    let d = kind.dim();
    for (n, v) in phi.iter().enumerate() {
        rec.check(*v == one, || (format!("φ{:?}", (n / (d * d), (n / d) % d, n % d)), v.render(), "1".into()));
    }
    let grading = GradingAssignment::transcribed(kind);
    let group = grading::even_subgroup(kind.generators());
    match grading::push_to_group(&phi, &grading) {
        Ok(pushed) => {
            let violations = grading::check_cocycle_conditions(&pushed, &group).unwrap_or_default();
            rec.check(violations.is_empty(), || ("cocycle conditions for the associator".into(), format!("{violations:?}"), "[]".into()));
        }
        Err(conflicts) => rec.check(false, || ("associator is constant on degrees".into(), format!("{conflicts:?}"), "[]".into())),
    }
    let trivial = grading::trivial_cocycle::<Rational>(&group);
    let violations = grading::check_cocycle_conditions(&trivial, &group).unwrap_or_default();
    rec.check(violations.is_empty(), || ("cocycle conditions for φ ≡ 1".into(), format!("{violations:?}"), "[]".into()));
    rec.finish(Suite::Cocycle, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(kind: AlgebraKind, o: Orientation) -> VerifyConfig {
        VerifyConfig { random_cases: 10, orthogonal_pairs: 10, ..VerifyConfig::new(kind, o) }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn case_counts() {
        let r = run(Suite::Assoc, &quick(AlgebraKind::SedenionLike, Orientation::Positive));
        assert_eq!((r.cases, r.failure_count), (4096, 0));
        let r = run(Suite::Grading, &quick(AlgebraKind::OctonionLike, Orientation::Positive));
        assert_eq!((r.cases, r.failure_count), (64, 0));
    }

    #[test]
    fn printed_identities_pass() {
        for kind in AlgebraKind::BOTH {
            for o in Orientation::BOTH {
                for suite in [Suite::Assoc, Suite::TableDiff, Suite::Matrix, Suite::Hopf, Suite::Grading, Suite::Cocycle] {
                    let r = run(suite, &quick(kind, o));
                    assert!(r.passed(), "{suite} {kind} λ={o}: {:?}", r.failures);
                }
            }
        }
        for o in Orientation::BOTH {
            for suite in [Suite::Norm, Suite::Commutant] {
                let r = run(suite, &quick(AlgebraKind::OctonionLike, o));
                assert!(r.passed(), "{suite} λ={o}: {:?}", r.failures);
            }
        }
    }

    #[test]
    fn sedenion_table_diff_is_informational_unless_strict() {
        let mut config = quick(AlgebraKind::SedenionLike, Orientation::Positive);
        let r = run(Suite::TableDiff, &config);
        assert!(r.passed());
        assert_eq!(r.table_diff.len(), 1);
        config.strict = true;
        let r = run(Suite::TableDiff, &config);
        assert_eq!(r.failure_count, 1);
    }

    #[test]
    fn sedenion_closure_and_norm_suites_report_failures() {
        let config = quick(AlgebraKind::SedenionLike, Orientation::Positive);
        let closure = run(Suite::Closure, &config);
        assert_eq!(closure.cases, 12);
        assert!(!closure.passed());
        let norm = run(Suite::Norm, &config);
        assert!(!norm.passed());
        assert!(norm.failures.len() <= MAX_LISTED_FAILURES);
    }

    #[test]
    fn reports_are_deterministic() {
        let config = quick(AlgebraKind::SedenionLike, Orientation::Negative);
        assert_eq!(run(Suite::Commutant, &config), run(Suite::Commutant, &config));
        let other = VerifyConfig { seed: 5, ..config.clone() };
        assert_ne!(run(Suite::Commutant, &config).failures, run(Suite::Commutant, &other).failures);
    }
}
