use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{PairedPoly, Rational};

/// Rectangular matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QMatrix {
    rows: Vec<Vec<Rational>>,
    width: usize,
}

impl QMatrix {
    /// Panics if the rows differ in length.
    pub fn new(rows: Vec<Vec<Rational>>) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == width),
            "QMatrix rows must have equal length"
        );
        QMatrix { rows, width }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn transpose(&self) -> QMatrix {
        let rows = (0..self.width)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        QMatrix {
            rows,
            width: self.rows.len(),
        }
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    ///
    /// Every row is first scaled by the lcm of its denominators, after which
    /// all intermediate entries stay integral and are bounded by minors of
    /// the input.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = self.rows.iter().map(|r| integral_row(r)).collect();
        m.retain(|r| r.iter().any(|x| !x.is_zero()));
        let nrows = m.len();
        let ncols = self.width;
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..ncols {
            if rank == nrows {
                break;
            }
            let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, piv);
            let (top, rest) = m.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in rest.iter_mut() {
                let factor = row[col].clone();
                for j in col..ncols {
                    let v = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                    // Sylvester's identity guarantees exactness.
                    row[j] = v / &prev;
                }
            }
            prev = m[rank][col].clone();
            rank += 1;
        }
        rank
    }
}

fn integral_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Which half of a paired value enters a span computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Projection {
    Gl,
    So,
    Both,
}

impl std::str::FromStr for Projection {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gl" => Ok(Projection::Gl),
            "so" => Ok(Projection::So),
            "both" => Ok(Projection::Both),
            _ => Err(format!(
                "unknown projection '{s}' (expected gl, so or both)"
            )),
        }
    }
}

/// Dimension of the span of `values` after flattening each to its
/// coefficient vector under `projection`.
pub fn span_dim(values: &[PairedPoly], projection: Projection) -> usize {
    if values.is_empty() {
        return 0;
    }
    let width = |f: fn(&PairedPoly) -> &super::Poly| {
        values
            .iter()
            .map(|v| f(v).coeffs().len())
            .max()
            .unwrap_or(0)
    };
    let wg = width(|v| &v.gl);
    let ws = width(|v| &v.so);
    let rows = values
        .iter()
        .map(|v| {
            let mut row = Vec::new();
            if projection != Projection::So {
                row.extend((0..wg).map(|i| v.gl.coeff(i)));
            }
            if projection != Projection::Gl {
                row.extend((0..ws).map(|i| v.so.coeff(i)));
            }
            row
        })
        .collect();
    QMatrix::new(rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Poly};
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(QMatrix::from_ints(&[&[1, 0], &[0, 1], &[1, 1]]).rank(), 2);
        assert_eq!(QMatrix::from_ints(&[&[0, 0]]).rank(), 0);
        assert_eq!(QMatrix::new(vec![]).rank(), 0);
        assert_eq!(
            QMatrix::from_ints(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 1]]).rank(),
            2
        );
    }

    #[test]
    fn distinct_orders_are_independent() {
        // c - c^3 and c^2 (1 + c)
        let a = Poly::from_ints(&[0, 1, 0, -1]);
        let b = Poly::from_ints(&[0, 0, 1, 1]);
        let vals = [
            PairedPoly::new(a, Poly::zero()),
            PairedPoly::new(b, Poly::zero()),
        ];
        assert_eq!(span_dim(&vals, Projection::Gl), 2);
        assert_eq!(span_dim(&vals, Projection::So), 0);
    }

    #[test]
    fn span_dim_edge_cases() {
        assert_eq!(span_dim(&[], Projection::Both), 0);
        let v = PairedPoly::new(Poly::c(), Poly::one());
        assert_eq!(span_dim(&[v.clone(), v], Projection::Both), 1);
    }

    #[test]
    fn rational_entries() {
        let m = QMatrix::new(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), ratio(1, 1)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(
            rows in 1usize..6, cols in 1usize..6,
            data in prop::collection::vec(-3i64..4, 36),
        ) {
            let m = QMatrix::new(
                (0..rows)
                    .map(|i| (0..cols).map(|j| ratio(data[i * 6 + j], 1 + (i + j) as i64 % 3)).collect())
                    .collect(),
            );
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert!(m.rank() <= rows.min(cols));
        }
    }
}
