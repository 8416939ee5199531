//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p slalg --test acceptance -- --nocapture` to see
//! the lines. The closure and norm-multiplicativity criteria are expected
//! to fail: the sampled orthogonal pairs include counterexamples.

use std::time::{Duration, Instant};

use num::Zero;

use slalg::grading::{self, GradingAssignment};
use slalg::hopf::{self, BasisInverseTable};
use slalg::sampling::Sampler;
use slalg::{
    numeric, octonion, sedenion, transcribed, AlgebraKind, OctonionLike, Orientation, Rational, Scalar, SedenionLike,
    Seminorm,
};

const RANDOM_CASES: usize = 200;
const ORTHOGONAL_PAIRS: usize = 500;
const REL_TOL: f64 = 1e-9;
const SEED: u64 = 0;

type Oct = OctonionLike<Rational>;
type Sed = SedenionLike<Rational>;

fn lift<const N: usize>(c: [i64; N]) -> [Rational; N] {
    c.map(Rational::from_i64)
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1.0)
}

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { ok, detail: detail.into() }
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        out.detail = format!("{}; {:.3} s (limit {:.0} s)", out.detail, elapsed.as_secs_f64(), limit.as_secs_f64());
        out.ok &= elapsed < limit;
    }
    out
}

fn octonion_table_fidelity() -> Outcome {
    let derived = octonion::structure_table(Orientation::Positive);
    let printed = transcribed::octonion_table();
    let mismatches = (0..8)
        .flat_map(|i| (0..8).map(move |j| (i, j)))
        .filter(|&(i, j)| derived.unit_product(i, j) != printed[i][j])
        .count();
    Outcome::new(mismatches == 0, format!("{mismatches} of 64 entries differ"))
}

fn sedenion_table_fidelity() -> Outcome {
    let diff = sedenion::table_diff();
    let o = Orientation::Positive;
    let units: Vec<Sed> = (0..sedenion::DIM).map(|i| Sed::unit(i, o)).collect();
    let mut failures = 0;
    for a in &units {
        for b in &units {
            let ab = a.multiply(b).unwrap();
            for c in &units {
                if ab.multiply(c).unwrap() != a.multiply(&b.multiply(c).unwrap()).unwrap() {
                    failures += 1;
                }
            }
        }
    }
    let listed: Vec<String> = diff
        .iter()
        .map(|d| format!("({}, {}) printed {} derived {}", d.row, d.col, d.printed_entry, d.derived_entry))
        .collect();
    Outcome::new(
        failures == 0,
        format!("associativity failures {failures} of 4096; printed-table diff: [{}]", listed.join("; ")),
    )
}

fn seminorm_degeneracy() -> Outcome {
    let mut ok = true;
    for o in Orientation::BOTH {
        let minus = Oct::new(lift([1, 0, 0, 0, 0, 0, 0, -1]), o);
        let plus = Oct::new(lift([1, 0, 0, 0, 0, 0, 0, 1]), o);
        ok &= !minus.is_zero() && minus.seminorm_sq(Seminorm::First).is_zero();
        ok &= !plus.is_zero() && plus.seminorm_sq(Seminorm::Second).is_zero();
    }
    Outcome::new(ok, "‖1-u_7‖₁ = 0 and ‖1+u_7‖₂ = 0 at λ = ±1")
}

fn inverse_law() -> Outcome {
    let mut bad = Vec::new();
    for o in Orientation::BOTH {
        let mut rng = Sampler::new(SEED);
        let mut xs = vec![
            Oct::new(lift([1, 0, 0, 0, 0, 0, 0, -1]), o),
            Oct::new(lift([1, 0, 0, 0, 0, 0, 0, 1]), o),
        ];
        xs.extend((0..RANDOM_CASES).map(|_| rng.octonion(o)));
        for (n, x) in xs.iter().enumerate() {
            let n1 = x.seminorm_sq(Seminorm::First);
            let n2 = x.seminorm_sq(Seminorm::Second);
            let mut rhs = vec![Rational::from_i64(0); 8];
            rhs[0] = Rational::from_i64(1);
            let solvable = x.left_matrix().solve(&rhs).is_some();
            if solvable != (!n1.is_zero() && !n2.is_zero()) {
                bad.push(format!("λ={o} case {n}: existence"));
            }
            if let Ok(inv) = x.inverse() {
                if x.multiply(&inv).unwrap() != Oct::one(o) {
                    bad.push(format!("λ={o} case {n}: X·X⁻¹"));
                }
            }
            let xf = OctonionLike::new(x.coeffs().clone().map(|c| c.to_f64()), o);
            let m = xf.left_matrix();
            let expected = (n1.to_f64() * n2.to_f64()).powi(2);
            if !rel_close(numeric::determinant(&m).abs(), expected) {
                bad.push(format!("λ={o} case {n}: |det M_x|"));
            }
            let dense = numeric::sorted_magnitudes_sq(&numeric::eigenvalues(&m));
            let mut closed = xf.eigen_magnitudes_sq().to_vec();
            closed.sort_by(f64::total_cmp);
            if !closed.iter().zip(&dense).all(|(a, b)| rel_close(*a, *b)) {
                bad.push(format!("λ={o} case {n}: eigenvalue magnitudes"));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{} failures over 2 × {} elements {bad:?}", bad.len(), RANDOM_CASES + 2))
}

fn central_self_product() -> Outcome {
    let mut failures = 0;
    for o in Orientation::BOTH {
        let mut rng = Sampler::new(SEED);
        for _ in 0..RANDOM_CASES {
            let (x, y) = (rng.octonion(o), rng.octonion(o));
            let p = x.multiply(&x.dagger()).unwrap();
            let imaginary_free = (1..=6).all(|i| p.coeff(i).is_zero());
            let commutes = p.multiply(&y).unwrap() == y.multiply(&p).unwrap();
            if !(imaginary_free && commutes) {
                failures += 1;
            }
        }
    }
    Outcome::new(failures == 0, format!("{failures} failures over 2 × {RANDOM_CASES} pairs"))
}

fn reference_element() -> Outcome {
    let s = Sed::new(lift([1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1]), Orientation::Positive);
    let defect = s.orthogonality_defect();
    let norm = s.norm_sq();
    let ok = defect.is_zero() && norm.as_ref().ok() == Some(&Rational::from_i64(4));
    Outcome::new(ok, format!("defect zero: {}, ‖S‖² = {:?}", defect.is_zero(), norm.map(|v| v.render())))
}

fn orthogonal_pairs() -> Vec<(Sed, Sed)> {
    let mut rng = Sampler::new(SEED);
    let o = Orientation::Positive;
    (0..ORTHOGONAL_PAIRS).map(|_| (rng.orthogonal_sedenion(o), rng.orthogonal_sedenion(o))).collect()
}

fn closure(pairs: &[(Sed, Sed)]) -> Outcome {
    let failures = pairs
        .iter()
        .filter(|(s, t)| !s.closure_check(t).map(|d| d.is_zero()).unwrap_or(false))
        .count();
    Outcome::new(failures == 0, format!("defect(ST) ≠ 0 for {failures} of {} pairs", pairs.len()))
}

fn norm_multiplicativity(pairs: &[(Sed, Sed)]) -> Outcome {
    let failures = pairs
        .iter()
        .filter(|(s, t)| !s.norm_multiplicativity_check(t).map(|(l, r)| l == r).unwrap_or(false))
        .count();
    Outcome::new(failures == 0, format!("‖ST‖² ≠ ‖S‖²‖T‖² for {failures} of {} pairs", pairs.len()))
}

fn hopf_axioms() -> Outcome {
    let mut bad = Vec::new();
    for kind in AlgebraKind::BOTH {
        for o in Orientation::BOTH {
            let table = kind.table(o);
            let inverses = BasisInverseTable::for_algebra(kind);
            if !inverses.failures(table).is_empty() {
                bad.push(format!("{kind} λ={o}: basis inverse table"));
            }
            for i in 0..kind.dim() {
                let mut u = vec![Rational::from_i64(0); kind.dim()];
                u[i] = Rational::from_i64(1);
                if !(hopf::verify_coassociativity(&u)
                    && hopf::verify_counit(&u)
                    && hopf::verify_antipode(&u, table, &inverses))
                {
                    bad.push(format!("{kind} λ={o}: axioms on {}", kind.names()[i]));
                }
            }
            let flagged: Vec<(usize, usize)> =
                hopf::compatibility_report(table).iter().filter(|e| !e.compatible).map(|e| (e.i, e.j)).collect();
            let negative: Vec<(usize, usize)> =
                table.entries().filter(|&(i, j, _)| table.constant(i, j).is_minus()).map(|(i, j, _)| (i, j)).collect();
            if flagged != negative {
                bad.push(format!("{kind} λ={o}: compatibility flags"));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("8 + 16 basis elements at λ = ±1 {bad:?}"))
}

fn grading_checks() -> Outcome {
    let mut bad = Vec::new();
    for kind in AlgebraKind::BOTH {
        let table = kind.table(Orientation::Positive);
        let printed = GradingAssignment::transcribed(kind);
        let additive = printed.additivity_failures(table);
        if !additive.is_empty() {
            bad.push(format!("{kind}: {} additivity failures", additive.len()));
        }
        if !printed.is_bijection_onto_even_subgroup() {
            bad.push(format!("{kind}: not a bijection onto the even subgroup"));
        }
        let phi = grading::associator_cocycle::<Rational>(table).unwrap();
        let d = kind.dim();
        if phi.len() != d * d * d || phi.iter().any(|v| *v != Rational::from_i64(1)) {
            bad.push(format!("{kind}: associator cocycle is not ≡ 1"));
        }
        let group = grading::even_subgroup(kind.generators());
        let trivial = grading::trivial_cocycle::<Rational>(&group);
        if !grading::check_cocycle_conditions(&trivial, &group).unwrap().is_empty() {
            bad.push(format!("{kind}: constant map violates the 3-cocycle conditions"));
        }
    }
    Outcome::new(bad.is_empty(), format!("64 + 256 pairs, 512 + 4096 triples {bad:?}"))
}

/// Entry `(r, c)` of the λ=+1 left or right matrix as `(k, ±1)`.
fn symbolic_entry(r: usize, c: usize, left: bool) -> (usize, i8) {
    (0..8)
        .find_map(|k| {
            let u = Oct::unit(k, Orientation::Positive);
            let m = if left { u.left_matrix() } else { u.right_matrix() };
            let v = m.get(r, c).to_f64();
            (v != 0.0).then_some((k, v as i8))
        })
        .unwrap_or((usize::MAX, 0))
}

fn matrix_representation() -> Outcome {
    let mut bad = Vec::new();
    for o in Orientation::BOTH {
        let mut rng = Sampler::new(SEED);
        for n in 0..RANDOM_CASES {
            let (x, y) = (rng.octonion(o), rng.octonion(o));
            let z = x.multiply(&y).unwrap().coeffs().to_vec();
            if x.left_matrix().mul_vec(y.coeffs()) != z || y.right_matrix().mul_vec(x.coeffs()) != z {
                bad.push(format!("λ={o} pair {n}"));
            }
        }
    }
    for (label, printed, left) in [
        ("M_x", transcribed::left_matrix_pattern(), true),
        ("M_y", transcribed::right_matrix_pattern(), false),
    ] {
        for (r, row) in printed.iter().enumerate() {
            for (c, &(k, s)) in row.iter().enumerate() {
                if symbolic_entry(r, c, left) != (k, s.to_i8()) {
                    bad.push(format!("{label} ({r}, {c})"));
                }
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("2 × {RANDOM_CASES} pairs and printed rows {bad:?}"))
}

#[test]
fn acceptance() {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    results.push(("table fidelity O^l", timed(Some(Duration::from_secs(1)), octonion_table_fidelity)));
    results.push(("table fidelity S^l", timed(Some(Duration::from_secs(5)), sedenion_table_fidelity)));
    results.push(("seminorm degeneracy", timed(None, seminorm_degeneracy)));
    results.push(("inverse and eigenvalue law", timed(None, inverse_law)));
    results.push(("self-conjugate product is central", timed(None, central_self_product)));
    results.push(("reference element 1+e0123+e04+e1234", timed(None, reference_element)));

    let start = Instant::now();
    let pairs = orthogonal_pairs();
    let sampling = start.elapsed();
    results.push(("closure of orthogonal pairs", timed(None, || closure(&pairs))));
    let norm_start = Instant::now();
    let mut norm = norm_multiplicativity(&pairs);
    let total = sampling + norm_start.elapsed();
    norm.detail = format!("{}; {:.3} s (limit 10 s)", norm.detail, total.as_secs_f64());
    norm.ok &= total < Duration::from_secs(10);
    results.push(("norm multiplicativity", norm));

    results.push(("Hopf axioms", timed(None, hopf_axioms)));
    results.push(("grading", timed(None, grading_checks)));
    results.push(("matrix representation", timed(None, matrix_representation)));

    for (name, outcome) in &results {
        println!("{} {name}: {}", if outcome.ok { "PASS" } else { "FAIL" }, outcome.detail);
    }
    let failed: Vec<&str> = results.iter().filter(|(_, o)| !o.ok).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
