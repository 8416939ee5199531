//! JSON element forms and the `compute` operations behind the CLI.
//!
//! Elements are `{"algebra": "octonion-like", "lambda": 1, "coeffs": [...]}`.
//! Exact coefficients are written as integers when they are integral and
//! as `"p/q"` strings otherwise; on input, integers, decimals and `"p/q"`
//! strings are all read exactly.

use std::str::FromStr;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::AlgebraKind;
use crate::error::{Error, Result, Seminorm};
use crate::octonion::OctonionLike;
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};
use crate::sedenion::{DualSplit, SedenionLike};
use crate::table::Orientation;

/// Coefficient fields with a JSON representation.
pub trait JsonScalar: Scalar {
    fn from_json(v: &Value) -> Result<Self>;
    fn to_json(&self) -> Value;
}

impl JsonScalar for Rational {
    fn from_json(v: &Value) -> Result<Self> {
        let parsed = match v {
            Value::Number(n) => parse_rational(&n.to_string()),
            Value::String(s) => parse_rational(s),
            _ => None,
        };
        parsed.ok_or_else(|| Error::Input(format!("not a rational coefficient: {v}")))
    }

    fn to_json(&self) -> Value {
        if self.is_integer() {
            if let Ok(i) = i64::try_from(self.numer()) {
                return json!(i);
            }
        }
        Value::String(format_rational(self))
    }
}

impl JsonScalar for f64 {
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => n.as_f64(),
            Value::String(s) => parse_rational(s).map(|r| r.to_f64()),
            _ => None,
        }
        .ok_or_else(|| Error::Input(format!("not a numeric coefficient: {v}")))
    }

    fn to_json(&self) -> Value {
        json!(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Element<T> {
    Octonion(OctonionLike<T>),
    Sedenion(SedenionLike<T>),
}

#[derive(Deserialize)]
struct RawElement {
    algebra: String,
    #[serde(default = "default_lambda")]
    lambda: i64,
    coeffs: Vec<Value>,
}

fn default_lambda() -> i64 {
    1
}

impl<T: JsonScalar> Element<T> {
    pub fn from_json(v: &Value) -> Result<Self> {
        let raw: RawElement =
            serde_json::from_value(v.clone()).map_err(|e| Error::Input(format!("malformed element: {e}")))?;
        let kind = AlgebraKind::from_str(&raw.algebra)?;
        let orientation = Orientation::from_i64(raw.lambda)?;
        let coeffs = raw.coeffs.iter().map(T::from_json).collect::<Result<Vec<T>>>()?;
        Ok(match kind {
            AlgebraKind::OctonionLike => Element::Octonion(OctonionLike::from_slice(&coeffs, orientation)?),
            AlgebraKind::SedenionLike => Element::Sedenion(SedenionLike::from_slice(&coeffs, orientation)?),
        })
    }

    pub fn to_json(&self) -> Value {
        let (kind, orientation, coeffs): (_, _, &[T]) = match self {
            Element::Octonion(x) => (AlgebraKind::OctonionLike, x.orientation(), x.coeffs()),
            Element::Sedenion(s) => (AlgebraKind::SedenionLike, s.orientation(), s.coeffs()),
        };
        json!({
            "algebra": kind.name(),
            "lambda": orientation.value(),
            "coeffs": coeffs.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn kind(&self) -> AlgebraKind {
        match self {
            Element::Octonion(_) => AlgebraKind::OctonionLike,
            Element::Sedenion(_) => AlgebraKind::SedenionLike,
        }
    }
}

/// `{"real": [8], "dual": [8]}` using the printed coefficient lists.
pub fn split_to_json<T: JsonScalar>(split: &DualSplit<T>) -> Value {
    let (real, dual) = split.lists();
    json!({
        "real": real.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
        "dual": dual.iter().map(JsonScalar::to_json).collect::<Vec<_>>(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Product,
    Dagger,
    Inverse,
    Norm,
    Split,
    Defect,
}

impl Op {
    pub fn arity(self) -> usize {
        match self {
            Op::Product => 2,
            _ => 1,
        }
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "product" => Op::Product,
            "dagger" => Op::Dagger,
            "inverse" => Op::Inverse,
            "norm" => Op::Norm,
            "split" => Op::Split,
            "defect" => Op::Defect,
            other => return Err(Error::Input(format!("unknown operation {other:?}"))),
        })
    }
}

fn sedenion_only(op: &str) -> Error {
    Error::Input(format!("{op} is only defined for sedenion-like elements"))
}

/// Apply `op` to parsed operands and render the result as JSON.
pub fn compute<T: JsonScalar>(op: Op, operands: &[Element<T>]) -> Result<Value> {
    if operands.len() != op.arity() {
        return Err(Error::Input(format!("expected {} operand(s), got {}", op.arity(), operands.len())));
    }
    let first = &operands[0];
    match (op, first) {
        (Op::Product, _) => match (first, &operands[1]) {
            (Element::Octonion(x), Element::Octonion(y)) => Ok(Element::Octonion(x.multiply(y)?).to_json()),
            (Element::Sedenion(s), Element::Sedenion(t)) => Ok(Element::Sedenion(s.multiply(t)?).to_json()),
            (a, b) => Err(Error::Input(format!("cannot multiply {} by {}", a.kind(), b.kind()))),
        },
        (Op::Dagger, Element::Octonion(x)) => Ok(Element::Octonion(x.dagger()).to_json()),
        (Op::Dagger, Element::Sedenion(s)) => Ok(Element::Sedenion(s.dagger()).to_json()),
        (Op::Inverse, Element::Octonion(x)) => Ok(Element::Octonion(x.inverse()?).to_json()),
        (Op::Inverse, Element::Sedenion(s)) => Ok(Element::Sedenion(s.try_inverse()?).to_json()),
        (Op::Norm, Element::Octonion(x)) => Ok(json!({
            "seminorm_1_sq": x.seminorm_sq(Seminorm::First).to_json(),
            "seminorm_2_sq": x.seminorm_sq(Seminorm::Second).to_json(),
        })),
        (Op::Norm, Element::Sedenion(s)) => Ok(json!({ "norm_sq": s.norm_sq()?.to_json() })),
        (Op::Split, Element::Sedenion(s)) => Ok(split_to_json(&s.split())),
        (Op::Defect, Element::Sedenion(s)) => Ok(Element::Octonion(s.orthogonality_defect()).to_json()),
        (Op::Split, _) => Err(sedenion_only("split")),
        (Op::Defect, _) => Err(sedenion_only("defect")),
    }
}

/// Structured error payload for the CLI.
pub fn error_to_json(e: &Error) -> Value {
    let kind = match e {
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::OrientationMismatch { .. } => "orientation_mismatch",
        Error::SingularElement { .. } => "singular_element",
        Error::SingularMatrix => "singular_matrix",
        Error::NotOrthogonal { .. } => "not_orthogonal",
        Error::ZeroDenominator(_) => "zero_denominator",
        Error::Input(_) => "input",
    };
    let mut out = json!({ "error": kind, "message": e.to_string() });
    match e {
        Error::SingularElement { which } => out["seminorm"] = json!(which.index()),
        Error::NotOrthogonal { defect } => out["defect"] = json!(defect),
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn parse(v: Value) -> Element<Rational> {
        Element::from_json(&v).unwrap()
    }

    #[test]
    fn rational_coefficients_round_trip() {
        let e = parse(json!({"algebra": "octonion-like", "lambda": -1, "coeffs": [1, "1/3", 0.5, -2, 0, 0, 0, "7"]}));
        let Element::Octonion(x) = &e else { panic!() };
        assert_eq!(x.coeff(1), &rat(1, 3));
        assert_eq!(x.coeff(2), &rat(1, 2));
        assert_eq!(x.orientation(), Orientation::Negative);
        assert_eq!(
            e.to_json(),
            json!({"algebra": "octonion-like", "lambda": -1, "coeffs": [1, "1/3", "1/2", -2, 0, 0, 0, 7]})
        );
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        for v in [
            json!({"algebra": "quaternion", "coeffs": [1]}),
            json!({"algebra": "octonion-like", "coeffs": [1, 2]}),
            json!({"algebra": "octonion-like", "lambda": 2, "coeffs": [0, 0, 0, 0, 0, 0, 0, 0]}),
            json!({"algebra": "octonion-like", "coeffs": [0, 0, 0, 0, 0, 0, 0, "x"]}),
        ] {
            assert!(matches!(Element::<Rational>::from_json(&v), Err(Error::Input(_))), "{v}");
        }
    }

    #[test]
    fn compute_examples() {
        let u = |i: usize| {
            let mut c = vec![0; 8];
            c[i] = 1;
            parse(json!({"algebra": "octonion-like", "coeffs": c}))
        };
        assert_eq!(compute(Op::Product, &[u(1), u(2)]).unwrap(), u(3).to_json());
        let x = parse(json!({"algebra": "octonion-like", "coeffs": [1, 0, 0, 0, 0, 0, 0, -1]}));
        let err = compute(Op::Inverse, &[x]).unwrap_err();
        assert_eq!(err, Error::SingularElement { which: Seminorm::First });
        let s = parse(json!({"algebra": "sedenion-like", "coeffs": [1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1]}));
        assert_eq!(
            compute(Op::Split, std::slice::from_ref(&s)).unwrap(),
            json!({"real": [1, 0, 0, 0, 0, 0, 0, 1], "dual": [-1, 0, 0, 0, 0, 0, 0, 1]})
        );
        assert_eq!(compute(Op::Norm, &[s]).unwrap(), json!({"norm_sq": 4}));
    }

    #[test]
    fn errors_render_with_payload() {
        let v = error_to_json(&Error::NotOrthogonal { defect: vec!["0".into(), "2".into()] });
        assert_eq!(v["error"], "not_orthogonal");
        assert_eq!(v["defect"], json!(["0", "2"]));
        assert_eq!(int(3).to_json(), json!(3));
    }
}
