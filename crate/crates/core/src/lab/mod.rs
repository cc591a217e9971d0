//! Chord diagram enumeration, rank-based dimension counts for the spans of
//! the deframed gl and so weight systems, and the verification suites.

mod cache;
mod random;
mod verify;

pub use cache::DimCache;
pub use random::random_diagram;
pub use verify::{verify, Check, Suite, SuiteReport};

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{span_dim, PairedPoly, Poly, Projection, QMatrix, Rational};
use crate::diagram::{ChordDiagram, Diagram};
use crate::families::{FamilyError, FamilySpec};
use crate::weight::{EvalError, Evaluator};

#[derive(Debug, Error)]
pub enum LabError {
    #[error("enumeration of (n, l) = ({n}, {l}) exceeds the guard n <= {max_n}, l <= {max_l}")]
    Guard {
        n: usize,
        l: usize,
        max_n: usize,
        max_l: usize,
    },
    #[error("l must be at least 1")]
    NoCircles,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Size limits on chord enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumGuard {
    pub max_n: usize,
    pub max_l: usize,
}

impl Default for EnumGuard {
    fn default() -> Self {
        EnumGuard { max_n: 6, max_l: 4 }
    }
}

impl EnumGuard {
    pub fn unlimited() -> Self {
        EnumGuard {
            max_n: usize::MAX,
            max_l: usize::MAX,
        }
    }

    fn check(&self, n: usize, l: usize) -> Result<(), LabError> {
        if l == 0 {
            return Err(LabError::NoCircles);
        }
        if n > self.max_n || l > self.max_l {
            return Err(LabError::Guard {
                n,
                l,
                max_n: self.max_n,
                max_l: self.max_l,
            });
        }
        Ok(())
    }
}

/// Every chord diagram with `n` chords on `l` circles: each distribution of
/// `2n` positions over the circles, combined with each pairing of the
/// positions. Isomorphic diagrams are not merged.
pub struct ChordEnumeration {
    layouts: Vec<Vec<Vec<u32>>>,
    pairings: Vec<Vec<[u32; 2]>>,
    next: usize,
    total: usize,
}

impl Iterator for ChordEnumeration {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        if self.next >= self.total {
            return None;
        }
        let (li, pi) = (
            self.next / self.pairings.len(),
            self.next % self.pairings.len(),
        );
        self.next += 1;
        let d = Diagram::from_parts(
            self.layouts[li].clone(),
            Vec::new(),
            self.pairings[pi].clone(),
        )
        .expect("enumerated chord diagrams are valid");
        Some(ChordDiagram::new(d).expect("no internal vertices"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.total - self.next;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for ChordEnumeration {}

pub fn enumerate_chords(
    n: usize,
    l: usize,
    guard: EnumGuard,
) -> Result<ChordEnumeration, LabError> {
    guard.check(n, l)?;
    let points = 2 * n;
    let layouts = compositions(points, l)
        .into_iter()
        .map(|parts| {
            let mut next = 0u32;
            parts
                .iter()
                .map(|&len| {
                    let ids = (next..next + len as u32).collect();
                    next += len as u32;
                    ids
                })
                .collect()
        })
        .collect();
    let layouts: Vec<Vec<Vec<u32>>> = layouts;
    let pairings = pairings(points);
    Ok(ChordEnumeration {
        total: layouts.len() * pairings.len(),
        layouts,
        pairings,
        next: 0,
    })
}

/// Number of diagrams `enumerate_chords` yields, without building them.
pub fn chord_count(n: usize, l: usize, guard: EnumGuard) -> Result<u128, LabError> {
    guard.check(n, l)?;
    let binom = |a: u128, b: u128| (1..=b).fold(1u128, |acc, i| acc * (a - b + i) / i);
    let layouts = binom((2 * n + l - 1) as u128, (l - 1) as u128);
    let pairings: u128 = (1..=n as u128).map(|i| 2 * i - 1).product();
    Ok(layouts * pairings)
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn pairings(points: usize) -> Vec<Vec<[u32; 2]>> {
    fn go(free: &[u32], cur: &mut Vec<[u32; 2]>, out: &mut Vec<Vec<[u32; 2]>>) {
        let Some((&a, rest)) = free.split_first() else {
            out.push(cur.clone());
            return;
        };
        for i in 0..rest.len() {
            let mut remaining = rest.to_vec();
            let b = remaining.remove(i);
            cur.push([a, b]);
            go(&remaining, cur, out);
            cur.pop();
        }
    }
    let free: Vec<u32> = (0..points as u32).collect();
    let mut out = Vec::new();
    go(&free, &mut Vec::new(), &mut out);
    out
}

/// True when some chord joins two neighbouring legs with nothing between
/// them on their circle.
pub fn has_isolated_chord(d: &ChordDiagram) -> bool {
    let layout = d.layout();
    (0..layout.succ.len()).any(|p| layout.succ[p] as usize == layout.partner[p] as usize)
}

/// Dimensions of the spans of the deframed gl and so weight systems on
/// diagrams of degree `n` on `l` circles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub n: usize,
    pub l: usize,
    #[serde(rename = "dim_H")]
    pub dim_h: usize,
    #[serde(rename = "dim_F")]
    pub dim_f: usize,
    pub dim_sum: usize,
    pub dim_cap: usize,
    pub diagram_count: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl DimReport {
    pub const CSV_HEADER: &'static str = "n,l,dim_H,dim_F,dim_sum,dim_cap,diagram_count";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n, self.l, self.dim_h, self.dim_f, self.dim_sum, self.dim_cap, self.diagram_count
        )
    }

    /// The dimension identities every report must satisfy.
    pub fn is_consistent(&self) -> bool {
        self.dim_h + self.dim_f == self.dim_sum + self.dim_cap
            && self.dim_h.max(self.dim_f) <= self.dim_sum
    }
}

impl fmt::Display for DimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n = {}, l = {}: dim H = {}, dim F = {}, dim H+F = {}, dim H∩F = {} ({} diagrams)",
            self.n, self.l, self.dim_h, self.dim_f, self.dim_sum, self.dim_cap, self.diagram_count
        )
    }
}

/// The dimensions predicted by the closed formulas, as `(dim_H, dim_F,
/// dim_cap)`.
pub fn predicted_dims(n: usize, l: usize) -> (usize, usize, usize) {
    let dim_h = n.min((n + l - 1) / 2);
    let dim_f = match (n, l) {
        (0, _) => 0,
        (1, 1) => 0,
        (1, _) => 1,
        (2, 1) => 1,
        (2, 2) => 2,
        (2, _) => 3,
        (3, 1) => 1,
        (3, 2) => 4,
        (3, _) => 5,
        (_, 1) => n - 1,
        _ if n <= l => 2 * n - 1,
        _ => n + l - 1,
    };
    (dim_h, dim_f, dim_h.min(2))
}

/// Coefficients of `c^1 .. c^top`.
fn coeff_row(p: &Poly, top: usize) -> Vec<Rational> {
    (1..=top).map(|i| p.coeff(i)).collect()
}

fn rank(rows: impl Iterator<Item = Vec<Rational>>) -> usize {
    let distinct: HashSet<Vec<Rational>> = rows
        .filter(|r| r.iter().any(|x| *x != Rational::from_integer(0.into())))
        .collect();
    QMatrix::new(distinct.into_iter().collect()).rank()
}

/// Ranks of the coefficient matrices over the values of `diagrams`.
pub fn dims_of(n: usize, l: usize, values: &[PairedPoly]) -> DimReport {
    let top = n + l;
    let dim_h = rank(values.iter().map(|v| coeff_row(&v.gl, top)));
    let dim_f = rank(values.iter().map(|v| coeff_row(&v.so, top)));
    let dim_sum = rank(values.iter().map(|v| {
        let mut row = coeff_row(&v.gl, top);
        row.extend(coeff_row(&v.so, top));
        row
    }));
    DimReport {
        n,
        l,
        dim_h,
        dim_f,
        dim_sum,
        dim_cap: dim_h + dim_f - dim_sum,
        diagram_count: values.len(),
        elapsed: Duration::ZERO,
    }
}

/// Deframed `(gl, so)` values of every enumerated chord diagram, in
/// enumeration order.
pub fn chord_values(
    n: usize,
    l: usize,
    guard: EnumGuard,
    ev: &Evaluator,
) -> Result<Vec<PairedPoly>, LabError> {
    let diagrams: Vec<ChordDiagram> = enumerate_chords(n, l, guard)?.collect();
    let values: Result<Vec<PairedPoly>, EvalError> = diagrams
        .par_iter()
        .map(|d| ev.evaluate_pair(d.diagram(), true))
        .collect();
    Ok(values?)
}

pub fn dims(n: usize, l: usize, guard: EnumGuard, ev: &Evaluator) -> Result<DimReport, LabError> {
    let start = Instant::now();
    let values = chord_values(n, l, guard, ev)?;
    let mut report = dims_of(n, l, &values);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Values of a list of family elements and the dimension of their span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub label: String,
    pub projection: Projection,
    pub elements: Vec<String>,
    #[serde(serialize_with = "serialize_values")]
    pub values: Vec<PairedPoly>,
    pub rank: usize,
}

fn serialize_values<S: serde::Serializer>(values: &[PairedPoly], s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Pair {
        gl: String,
        so: String,
    }
    s.collect_seq(values.iter().map(|v| Pair {
        gl: v.gl.to_string(),
        so: v.so.to_string(),
    }))
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, v) in self.elements.iter().zip(&self.values) {
            writeln!(f, "{e}: gl = {}, so = {}", v.gl, v.so)?;
        }
        write!(
            f,
            "rank of {} ({:?}) = {}",
            self.label, self.projection, self.rank
        )
    }
}

/// Expands every spec (lists included), evaluates each element deframed,
/// and reports the span dimension under `projection`.
pub fn rank_of(
    specs: &[FamilySpec],
    projection: Projection,
    ev: &Evaluator,
) -> Result<RankReport, LabError> {
    let mut expanded = Vec::new();
    for s in specs {
        expanded.extend(s.expand()?);
    }
    let elements = expanded
        .iter()
        .map(FamilySpec::element)
        .collect::<Result<Vec<_>, _>>()?;
    let values = elements
        .par_iter()
        .map(|e| e.evaluate_pair(ev))
        .collect::<Result<Vec<_>, _>>()?;
    let label = specs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ");
    Ok(RankReport {
        label,
        projection,
        elements: expanded.iter().map(ToString::to_string).collect(),
        rank: span_dim(&values, projection),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let g = EnumGuard::default();
        assert_eq!(enumerate_chords(1, 1, g).unwrap().count(), 1);
        assert_eq!(enumerate_chords(2, 1, g).unwrap().count(), 3);
        assert_eq!(enumerate_chords(0, 2, g).unwrap().count(), 1);
        for (n, l) in [(2, 2), (3, 2), (2, 3)] {
            let e = enumerate_chords(n, l, g).unwrap();
            assert_eq!(e.len() as u128, chord_count(n, l, g).unwrap());
        }
    }

    #[test]
    fn guard() {
        let g = EnumGuard::default();
        assert!(matches!(
            enumerate_chords(7, 1, g),
            Err(LabError::Guard { .. })
        ));
        assert!(matches!(
            enumerate_chords(1, 5, g),
            Err(LabError::Guard { .. })
        ));
        assert!(matches!(
            enumerate_chords(1, 0, g),
            Err(LabError::NoCircles)
        ));
        assert!(enumerate_chords(7, 1, EnumGuard::unlimited()).is_ok());
    }

    #[test]
    fn low_degree_dims() {
        let ev = Evaluator::new();
        let d = dims(1, 1, EnumGuard::default(), &ev).unwrap();
        assert_eq!((d.dim_h, d.dim_f, d.dim_sum, d.dim_cap), (0, 0, 0, 0));
        let d = dims(3, 2, EnumGuard::default(), &ev).unwrap();
        assert_eq!((d.dim_h, d.dim_f, d.dim_sum, d.dim_cap), (2, 4, 4, 2));
        let d = dims(4, 1, EnumGuard::default(), &ev).unwrap();
        assert_eq!((d.dim_h, d.dim_f, d.dim_sum, d.dim_cap), (2, 3, 3, 2));
        assert!(d.is_consistent());
    }

    #[test]
    fn json_has_no_timing() {
        let d = dims(2, 1, EnumGuard::default(), &Evaluator::new()).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"l":1,"dim_H":1,"dim_F":1,"dim_sum":1,"dim_cap":1,"diagram_count":3}"#
        );
    }

    #[test]
    fn sigma_seven_rank() {
        let r = rank_of(&[FamilySpec::Sigma(7)], Projection::Both, &Evaluator::new()).unwrap();
        assert_eq!(r.elements.len(), 6);
        assert_eq!(r.rank, 6);
    }
}
