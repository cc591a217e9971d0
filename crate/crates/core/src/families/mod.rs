//! The named diagrams and diagram lists, their text addresses, and the
//! closed-form polynomial sequences they evaluate to.

mod build;
mod closed;
mod spec;

pub use build::{
    chain, d_ijk, e_n, omega, omega3_two_circles, parallel, psi, ring, template_on_circle,
};
pub use closed::{a_seq, closed_form, de_seq, p_poly, q_poly, r_poly, Family};
pub use spec::FamilySpec;

use thiserror::Error;

use crate::algebra::PairedPoly;
use crate::diagram::{
    connected_sum, disjoint_union, insert_template, Diagram, DiagramCombo, DiagramError, Template,
};
use crate::weight::{EvalError, Evaluator};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("unknown family '{0}'")]
    Unknown(String),
    #[error("family syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no closed form: {0}")]
    NoClosedForm(String),
    #[error("{0} is a list and cannot be combined here")]
    ListOperand(String),
    #[error("{0} has no internal vertex to insert into")]
    NoVertex(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A built element: a single diagram or a rational combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Diagram(Diagram),
    Combo(DiagramCombo),
}

impl Element {
    pub fn to_combo(&self) -> DiagramCombo {
        match self {
            Element::Diagram(d) => DiagramCombo::from(d.clone()),
            Element::Combo(c) => c.clone(),
        }
    }

    /// `(degree, circles)` of the first term; `None` for the zero combination.
    pub fn shape(&self) -> Option<(usize, usize)> {
        match self {
            Element::Diagram(d) => Some((d.degree(), d.circle_count())),
            Element::Combo(c) => c
                .terms()
                .first()
                .map(|(_, d)| (d.degree(), d.circle_count())),
        }
    }

    pub fn evaluate_pair(&self, ev: &Evaluator) -> Result<PairedPoly, EvalError> {
        match self {
            Element::Diagram(d) => ev.evaluate_pair(d, true),
            Element::Combo(c) => ev.evaluate_combo_pair(c, true),
        }
    }

    fn map(
        &self,
        f: impl Fn(&Diagram) -> Result<Diagram, FamilyError>,
    ) -> Result<Element, FamilyError> {
        Ok(match self {
            Element::Diagram(d) => Element::Diagram(f(d)?),
            Element::Combo(c) => Element::Combo(c.try_map(|d| f(d).map(DiagramCombo::from))?),
        })
    }
}

/// One built list entry with the spec that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled {
    pub spec: FamilySpec,
    pub element: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyValue {
    Diagram(Diagram),
    Combo(DiagramCombo),
    List(Vec<Labeled>),
}

impl FamilyValue {
    /// Flattens to labeled elements; a single value is labeled by `spec`.
    pub fn into_elements(self, spec: &FamilySpec) -> Vec<Labeled> {
        match self {
            FamilyValue::Diagram(d) => vec![Labeled {
                spec: spec.clone(),
                element: Element::Diagram(d),
            }],
            FamilyValue::Combo(c) => vec![Labeled {
                spec: spec.clone(),
                element: Element::Combo(c),
            }],
            FamilyValue::List(v) => v,
        }
    }
}

impl FamilySpec {
    pub fn is_list(&self) -> bool {
        match self {
            FamilySpec::Sigma(_) | FamilySpec::M(..) => true,
            FamilySpec::Tpow(_, x) | FamilySpec::X3(x) | FamilySpec::Pad(x, _) => x.is_list(),
            FamilySpec::Sum(a, b) => a.is_list() || b.is_list(),
            _ => false,
        }
    }

    /// Replaces list atoms by their members, distributing unary operators.
    pub fn expand(&self) -> Result<Vec<FamilySpec>, FamilyError> {
        Ok(match self {
            FamilySpec::Sigma(n) => sigma_specs(*n)?,
            FamilySpec::M(n, l) => m_specs(*n, *l)?,
            FamilySpec::Tpow(k, x) => x
                .expand()?
                .into_iter()
                .map(|s| FamilySpec::t_pow(*k, s))
                .collect(),
            FamilySpec::X3(x) => x.expand()?.into_iter().map(FamilySpec::x3).collect(),
            FamilySpec::Pad(x, l) => x
                .expand()?
                .into_iter()
                .map(|s| FamilySpec::pad(s, *l))
                .collect(),
            FamilySpec::Sum(..) if self.is_list() => {
                return Err(FamilyError::ListOperand(self.to_string()))
            }
            other => vec![other.clone()],
        })
    }

    pub fn build(&self) -> Result<FamilyValue, FamilyError> {
        if self.is_list() {
            let items = self
                .expand()?
                .into_iter()
                .map(|spec| {
                    let element = spec.element()?;
                    Ok(Labeled { spec, element })
                })
                .collect::<Result<_, FamilyError>>()?;
            return Ok(FamilyValue::List(items));
        }
        Ok(match self.element()? {
            Element::Diagram(d) => FamilyValue::Diagram(d),
            Element::Combo(c) => FamilyValue::Combo(c),
        })
    }

    /// Builds a non-list spec.
    pub fn element(&self) -> Result<Element, FamilyError> {
        let d = |x: Diagram| Ok(Element::Diagram(x));
        match self {
            FamilySpec::Omega(k) => d(omega(*k)?),
            FamilySpec::L(k) => d(chain(*k)),
            FamilySpec::C(k) => d(ring(*k)),
            FamilySpec::T(k) => d(parallel(*k)),
            FamilySpec::Psi => d(psi()),
            FamilySpec::Omega3 => d(omega3_two_circles()),
            FamilySpec::Circle => d(Diagram::circle()),
            FamilySpec::D(i, j, k) => d(d_ijk(*i, *j, *k)),
            FamilySpec::E(n) => Ok(Element::Combo(e_n(*n)?)),
            FamilySpec::TTemplate => d(template_on_circle(&Template::t())),
            FamilySpec::X3Template => d(template_on_circle(&Template::x3())),
            FamilySpec::Sigma(_) | FamilySpec::M(..) => {
                Err(FamilyError::ListOperand(self.to_string()))
            }
            FamilySpec::Tpow(k, x) => {
                let t = Template::t();
                let label = self.to_string();
                x.element()?.map(|base| {
                    let mut cur = base.clone();
                    for _ in 0..*k {
                        cur = insert_at_first_vertex(&cur, &t, &label)?;
                    }
                    Ok(cur)
                })
            }
            FamilySpec::X3(x) => {
                let t = Template::x3();
                let label = self.to_string();
                x.element()?
                    .map(|base| insert_at_first_vertex(base, &t, &label))
            }
            FamilySpec::Sum(a, b) => {
                let (ea, eb) = (a.element()?, b.element()?);
                match (&ea, &eb) {
                    (Element::Diagram(x), Element::Diagram(y)) => {
                        d(connected_sum(x, x.circle_count() - 1, y, 0)?)
                    }
                    _ => {
                        let (ca, cb) = (ea.to_combo(), eb.to_combo());
                        let out = ca.try_map(|x| {
                            cb.try_map(|y| {
                                connected_sum(x, x.circle_count() - 1, y, 0).map(DiagramCombo::from)
                            })
                        })?;
                        Ok(Element::Combo(out))
                    }
                }
            }
            FamilySpec::Pad(x, l) => {
                let label = self.to_string();
                x.element()?.map(|base| {
                    let have = base.circle_count();
                    if have > *l {
                        return Err(FamilyError::Range(format!(
                            "{label}: diagram already has {have} circles"
                        )));
                    }
                    Ok(disjoint_union(base, l - have))
                })
            }
        }
    }
}

fn insert_at_first_vertex(d: &Diagram, t: &Template, label: &str) -> Result<Diagram, FamilyError> {
    if d.vertex_count() == 0 {
        return Err(FamilyError::NoVertex(label.to_string()));
    }
    Ok(insert_template(d, 0, t)?)
}

fn om(k: usize) -> FamilySpec {
    FamilySpec::Omega(k)
}

/// The primitive spanning list in degree `n >= 4`.
pub fn sigma_specs(n: usize) -> Result<Vec<FamilySpec>, FamilyError> {
    let t = |k: usize, x: FamilySpec| FamilySpec::t_pow(k, x);
    Ok(match n {
        0..=3 => return Err(FamilyError::Range("Sigma needs n >= 4".into())),
        4 => vec![om(4), t(2, om(2))],
        5 | 6 => {
            let mut v: Vec<FamilySpec> = sigma_specs(n - 1)?.into_iter().map(|s| t(1, s)).collect();
            v.push(om(n));
            if n == 6 {
                v.push(FamilySpec::Psi);
            }
            v
        }
        7 => vec![
            om(7),
            t(1, om(6)),
            t(2, om(5)),
            t(3, om(4)),
            t(5, om(2)),
            FamilySpec::x3(om(4)),
        ],
        _ => {
            let mut v: Vec<FamilySpec> = sigma_specs(n - 1)?.into_iter().map(|s| t(1, s)).collect();
            v.push(om(n));
            if n % 2 == 0 {
                v.push(FamilySpec::x3(om(n - 3)));
            }
            v
        }
    })
}

/// The spanning list for `H + F` in degree `n >= 4` on `l >= 2` circles:
/// the degree-`n` primitive elements padded with circles, then the gl list,
/// then the so list.
pub fn m_specs(n: usize, l: usize) -> Result<Vec<FamilySpec>, FamilyError> {
    if n < 4 || l < 2 {
        return Err(FamilyError::Range("M needs n >= 4 and l >= 2".into()));
    }
    let pad = |s: FamilySpec| FamilySpec::pad(s, l);
    let mut out: Vec<FamilySpec> = sigma_specs(n)?.into_iter().map(pad).collect();
    out.push(pad(FamilySpec::sum(om(2), FamilySpec::t_pow(n - 4, om(2)))));

    let top = if n < l { n } else { 2 * ((n + l - 1) / 2) - n };
    let bottom = n - 2 * ((n - 1) / 2);
    for i in (bottom..=top).rev().step_by(2) {
        out.push(if i == n {
            pad(FamilySpec::D(n, 0, 0))
        } else {
            pad(FamilySpec::sum(FamilySpec::D(i, 0, 0), om(n - i)))
        });
    }

    if n <= l {
        for i in 0..=n - 3 {
            out.push(pad(FamilySpec::D(i, n - i, 0)));
        }
    } else {
        for i in 0..l.saturating_sub(2) {
            out.push(pad(FamilySpec::D(i, l - 1 - i, n - l + 1)));
        }
    }
    out.push(pad(FamilySpec::D(0, 0, n)));
    out.push(pad(FamilySpec::E(n)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_sizes() {
        for n in 4..=10 {
            assert_eq!(sigma_specs(n).unwrap().len(), n / 2 + n - 4, "n = {n}");
        }
    }

    #[test]
    fn m_sizes() {
        for (n, l) in [
            (4, 2),
            (4, 3),
            (5, 2),
            (4, 4),
            (5, 3),
            (6, 2),
            (5, 5),
            (6, 4),
        ] {
            let want = n + l - 3 + (n + l - 1) / 2;
            assert_eq!(m_specs(n, l).unwrap().len(), want, "(n, l) = ({n}, {l})");
        }
    }

    #[test]
    fn m_elements_have_the_right_shape() {
        for (n, l) in [(4, 2), (4, 3), (5, 2), (4, 4)] {
            for s in m_specs(n, l).unwrap() {
                let e = s.element().unwrap();
                assert_eq!(e.shape(), Some((n, l)), "{s}");
            }
        }
    }

    #[test]
    fn list_specs_build_lists() {
        let spec: FamilySpec = "t*Sigma:4".parse().unwrap();
        let FamilyValue::List(v) = spec.build().unwrap() else {
            panic!()
        };
        assert_eq!(v.len(), 2);
        assert_eq!(v[1].spec.to_string(), "t^3*omega:2");
        assert!(matches!(
            "Sigma:4#omega:2".parse::<FamilySpec>().unwrap().build(),
            Err(FamilyError::ListOperand(_))
        ));
    }

    #[test]
    fn e_is_a_combination() {
        let FamilyValue::Combo(c) = "E:4@2".parse::<FamilySpec>().unwrap().build().unwrap() else {
            panic!()
        };
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn pad_checks_circle_count() {
        assert!("L:3@2".parse::<FamilySpec>().unwrap().build().is_err());
        assert!("t*L:2".parse::<FamilySpec>().unwrap().build().is_err());
    }
}
