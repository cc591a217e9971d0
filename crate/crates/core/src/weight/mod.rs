//! The gl and so weight systems: chord-diagram state sums, the deframed
//! pipeline on trivalent diagrams, and the scalar functionals derived from it.

mod eval;

pub use eval::{Evaluator, DEFAULT_MAX_VERTICES};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rat, AlgebraError, Poly, Rational};
use crate::diagram::{ChordDiagram, Diagram, DiagramCombo};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightFlavor {
    Gl,
    So,
}

impl FromStr for WeightFlavor {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gl" => Ok(WeightFlavor::Gl),
            "so" => Ok(WeightFlavor::So),
            _ => Err(format!("unknown flavor '{s}' (expected gl or so)")),
        }
    }
}

impl fmt::Display for WeightFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightFlavor::Gl => "gl",
            WeightFlavor::So => "so",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("diagram has {found} internal vertices, more than the limit of {limit}")]
    TooManyVertices { found: usize, limit: usize },
    #[error(
        "diagram has {found} chords after reduction; the so state sum supports at most {limit}"
    )]
    TooManyChords { found: usize, limit: usize },
    #[error("so value is not divisible by c(c-1): {0}")]
    NotDivisible(String),
    #[error("wso_tilde needs a single circle and positive degree (got {circles} circles, degree {degree})")]
    Shape { circles: usize, degree: usize },
    #[error("diagram has degree {found_n} on {found_l} circles, expected degree {n} on {l}")]
    Mismatch {
        n: usize,
        l: usize,
        found_n: usize,
        found_l: usize,
    },
}

/// A single evaluation together with the shape of the evaluated diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Poly,
    pub flavor: WeightFlavor,
    pub deframed: bool,
    pub degree_n: usize,
    pub circles_l: usize,
}

/// `c^m`, where `m` counts the closed curves after splicing every chord
/// parallel, plus the legless circles.
pub fn wgl_chord(d: &ChordDiagram) -> Poly {
    let layout = d.layout();
    Poly::monomial(rat(1), layout.loops(0, &mut Vec::new()) as usize)
}

/// Sum over parallel/crossed states of `(-1)^{#crossed} c^{#loops}`.
pub fn wso_chord(d: &ChordDiagram) -> Poly {
    let layout = d.layout();
    let mut coeffs = vec![0i128; layout.partner.len() + layout.bare as usize + 2];
    let mut buf = Vec::new();
    for mask in 0u64..1 << layout.chord_count() {
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        coeffs[layout.loops(mask, &mut buf) as usize] += sign;
    }
    Poly::from_i128(&coeffs)
}

/// Evaluates with the default limits; see [`Evaluator`].
pub fn evaluate(d: &Diagram, flavor: WeightFlavor, deframed: bool) -> Result<Poly, EvalError> {
    Evaluator::new().evaluate(d, flavor, deframed)
}

pub fn evaluate_combo(
    c: &DiagramCombo,
    flavor: WeightFlavor,
    deframed: bool,
) -> Result<Poly, EvalError> {
    Evaluator::new().evaluate_combo(c, flavor, deframed)
}

/// Deframed so value divided by `c(c-1)`, for one circle and degree >= 1.
pub fn wso_tilde(d: &Diagram) -> Result<Poly, EvalError> {
    wso_tilde_with(&Evaluator::new(), d)
}

pub fn wso_tilde_with(ev: &Evaluator, d: &Diagram) -> Result<Poly, EvalError> {
    if d.circle_count() != 1 || d.degree() == 0 {
        return Err(EvalError::Shape {
            circles: d.circle_count(),
            degree: d.degree(),
        });
    }
    let v = ev.evaluate(d, WeightFlavor::So, true)?;
    divide_by_c_cminus1(&v)
}

pub(crate) fn divide_by_c_cminus1(v: &Poly) -> Result<Poly, EvalError> {
    let divisor = Poly::from_ints(&[0, -1, 1]);
    v.div_exact(&divisor).map_err(|e| match e {
        AlgebraError::NotDivisible { dividend, .. } => EvalError::NotDivisible(dividend),
        other => EvalError::NotDivisible(other.to_string()),
    })
}

/// Scalar functionals of the deframed weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Functional {
    /// `(-1)^l` times the gl value at `c = 2`.
    R,
    /// Coefficient of `c^(n+l)` in the gl value.
    Y,
    /// `(-2)^n so(4) - 2 (-2)^l so(-2)`.
    W,
}

impl FromStr for Functional {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "r" => Ok(Functional::R),
            "y" => Ok(Functional::Y),
            "w" => Ok(Functional::W),
            _ => Err(format!("unknown functional '{s}' (expected r, y or w)")),
        }
    }
}

/// Applies `kind` to `d`, which must have degree `n` on `l` circles.
pub fn functional(
    d: &Diagram,
    kind: Functional,
    n: usize,
    l: usize,
) -> Result<Rational, EvalError> {
    functional_with(&Evaluator::new(), d, kind, n, l)
}

pub fn functional_with(
    ev: &Evaluator,
    d: &Diagram,
    kind: Functional,
    n: usize,
    l: usize,
) -> Result<Rational, EvalError> {
    if d.degree() != n || d.circle_count() != l {
        return Err(EvalError::Mismatch {
            n,
            l,
            found_n: d.degree(),
            found_l: d.circle_count(),
        });
    }
    let sign_pow = |base: i64, e: usize| rat(base).pow(e as i32);
    Ok(match kind {
        Functional::R => sign_pow(-1, l) * ev.evaluate(d, WeightFlavor::Gl, true)?.eval_int(2),
        Functional::Y => ev.evaluate(d, WeightFlavor::Gl, true)?.coeff(n + l),
        Functional::W => {
            let so = ev.evaluate(d, WeightFlavor::So, true)?;
            sign_pow(-2, n) * so.eval_int(4) - rat(2) * sign_pow(-2, l) * so.eval_int(-2)
        }
    })
}
