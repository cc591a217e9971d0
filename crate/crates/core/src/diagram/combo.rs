use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::Diagram;
use crate::algebra::Rational;

/// Finite rational linear combination of diagrams.
///
/// Terms are kept merged by canonical form, sorted, and free of zero
/// coefficients, so structural equality is equality of combinations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiagramCombo {
    terms: Vec<(Rational, Diagram)>,
}

impl DiagramCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Diagram)>) -> Self {
        let mut map: BTreeMap<Diagram, Rational> = BTreeMap::new();
        for (c, d) in terms {
            *map.entry(d).or_insert_with(Rational::zero) += c;
        }
        DiagramCombo {
            terms: map
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| (c, d))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(Rational, Diagram)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(c, d)| (c * k, d.clone())))
    }

    /// Applies a linear map defined on single diagrams.
    pub fn try_map<E>(
        &self,
        mut f: impl FnMut(&Diagram) -> Result<DiagramCombo, E>,
    ) -> Result<Self, E> {
        let mut out = Vec::new();
        for (c, d) in &self.terms {
            for (c2, d2) in f(d)?.terms {
                out.push((c * c2, d2));
            }
        }
        Ok(Self::from_terms(out))
    }
}

impl From<Diagram> for DiagramCombo {
    fn from(d: Diagram) -> Self {
        DiagramCombo {
            terms: vec![(Rational::one(), d)],
        }
    }
}

impl Add for DiagramCombo {
    type Output = DiagramCombo;
    fn add(self, rhs: Self) -> Self {
        Self::from_terms(self.terms.into_iter().chain(rhs.terms))
    }
}

impl Sub for DiagramCombo {
    type Output = DiagramCombo;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DiagramCombo {
    type Output = DiagramCombo;
    fn neg(self) -> Self {
        DiagramCombo {
            terms: self.terms.into_iter().map(|(c, d)| (-c, d)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn merges_and_cancels() {
        let a = Diagram::circle();
        let b = Diagram::from_parts(vec![vec![0, 1]], vec![], vec![[0, 1]]).unwrap();
        let x = DiagramCombo::from(a.clone()) + DiagramCombo::from(b.clone());
        let y = x.clone() - DiagramCombo::from(a);
        assert_eq!(y, DiagramCombo::from(b.clone()));
        assert!((y.clone() - y).is_empty());
        assert_eq!(x.scale(&rat(0)).len(), 0);
        assert_eq!(x.len(), 2);
    }
}
