use std::collections::HashMap;

use rayon::prelude::*;

use super::{EvalError, EvalResult, WeightFlavor};
use crate::algebra::{PairedPoly, Poly};
use crate::diagram::stu::Work;
use crate::diagram::{Diagram, DiagramCombo, ResolveOrder};

pub const DEFAULT_MAX_VERTICES: usize = 24;

/// The so state sum enumerates `2^chords` states with a `u64` mask.
const SO_CHORD_LIMIT: usize = 40;

/// STU branches above this recursion depth are evaluated on separate
/// rayon tasks.
const PAR_DEPTH: usize = 12;

/// Configurable evaluator for the gl and so weight systems.
///
/// Deframing is applied to the original chord components before any STU
/// expansion. Since an isolated chord multiplies the gl value by `c` and the
/// so value by `c - 1`, `W(iota D)` is computed as a signed sum over subsets
/// `S` of the chord components of `(-c)^|S| W(D - S)` (resp. `(1 - c)^|S|`),
/// which equals the three-term expansion term by term.
#[derive(Clone, Debug)]
pub struct Evaluator {
    max_vertices: usize,
    order: ResolveOrder,
    parallel: bool,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator {
            max_vertices: DEFAULT_MAX_VERTICES,
            order: ResolveOrder::First,
            parallel: true,
        }
    }
}

#[derive(Clone, Copy)]
struct Want {
    gl: bool,
    so: bool,
}

#[derive(Clone, Debug, Default)]
struct Acc {
    gl: Vec<i128>,
    so: Vec<i128>,
}

impl Acc {
    fn new(width: usize) -> Self {
        Acc {
            gl: vec![0; width],
            so: vec![0; width],
        }
    }

    fn add(&mut self, other: &Acc, sign: i128) {
        for (a, b) in self.gl.iter_mut().zip(&other.gl) {
            *a += sign * b;
        }
        for (a, b) in self.so.iter_mut().zip(&other.so) {
            *a += sign * b;
        }
    }
}

struct Leaf {
    gl: u32,
    so: Vec<(u32, i128)>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.max_vertices = n;
        self
    }

    pub fn with_order(mut self, order: ResolveOrder) -> Self {
        self.order = order;
        self
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }

    pub fn evaluate(
        &self,
        d: &Diagram,
        flavor: WeightFlavor,
        deframed: bool,
    ) -> Result<Poly, EvalError> {
        let want = Want {
            gl: flavor == WeightFlavor::Gl,
            so: flavor == WeightFlavor::So,
        };
        let (gl, so) = self.run(d, want, deframed)?;
        Ok(match flavor {
            WeightFlavor::Gl => gl,
            WeightFlavor::So => so,
        })
    }

    pub fn evaluate_pair(&self, d: &Diagram, deframed: bool) -> Result<PairedPoly, EvalError> {
        let (gl, so) = self.run(d, Want { gl: true, so: true }, deframed)?;
        Ok(PairedPoly::new(gl, so))
    }

    pub fn result(
        &self,
        d: &Diagram,
        flavor: WeightFlavor,
        deframed: bool,
    ) -> Result<EvalResult, EvalError> {
        Ok(EvalResult {
            value: self.evaluate(d, flavor, deframed)?,
            flavor,
            deframed,
            degree_n: d.degree(),
            circles_l: d.circle_count(),
        })
    }

    pub fn evaluate_combo(
        &self,
        c: &DiagramCombo,
        flavor: WeightFlavor,
        deframed: bool,
    ) -> Result<Poly, EvalError> {
        let mut total = Poly::zero();
        for (k, d) in c.terms() {
            total += &self.evaluate(d, flavor, deframed)?.scale(k);
        }
        Ok(total)
    }

    pub fn evaluate_combo_pair(
        &self,
        c: &DiagramCombo,
        deframed: bool,
    ) -> Result<PairedPoly, EvalError> {
        let mut total = PairedPoly::new(Poly::zero(), Poly::zero());
        for (k, d) in c.terms() {
            total = &total + &self.evaluate_pair(d, deframed)?.scale(k);
        }
        Ok(total)
    }

    fn run(&self, d: &Diagram, want: Want, deframed: bool) -> Result<(Poly, Poly), EvalError> {
        if d.vertex_count() > self.max_vertices {
            return Err(EvalError::TooManyVertices {
                found: d.vertex_count(),
                limit: self.max_vertices,
            });
        }
        if want.so && d.degree() > SO_CHORD_LIMIT {
            return Err(EvalError::TooManyChords {
                found: d.degree(),
                limit: SO_CHORD_LIMIT,
            });
        }
        if !deframed {
            let acc = self.raw(d, want);
            return Ok((Poly::from_i128(&acc.gl), Poly::from_i128(&acc.so)));
        }

        let chords: Vec<[u32; 2]> = d
            .edges()
            .filter(|&[a, b]| d.is_leg(a) && d.is_leg(b))
            .collect();
        let k = chords.len();
        let (circles, vertices, edges) = d.to_parts();
        let strip = |mask: u64| {
            let removed: Vec<u32> = chords
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, e)| *e)
                .collect();
            let circles = circles
                .iter()
                .map(|c| c.iter().copied().filter(|p| !removed.contains(p)).collect())
                .collect();
            let edges = edges
                .iter()
                .copied()
                .filter(|e| !removed.contains(&e[0]))
                .collect();
            Diagram::from_parts(circles, vertices.clone(), edges)
                .expect("removing chords keeps validity")
        };
        let eval_mask = |mask: u64| (mask.count_ones() as usize, self.raw(&strip(mask), want));
        let parts: Vec<(usize, Acc)> = if self.parallel && k >= 3 {
            (0..1u64 << k).into_par_iter().map(eval_mask).collect()
        } else {
            (0..1u64 << k).map(eval_mask).collect()
        };
        let width = parts.iter().map(|(_, a)| a.gl.len()).max().unwrap_or(0);
        let mut groups = vec![Acc::new(width); k + 1];
        for (j, acc) in &parts {
            groups[*j].add(acc, 1);
        }
        let minus_c = Poly::from_ints(&[0, -1]);
        let one_minus_c = Poly::from_ints(&[1, -1]);
        let mut gl = Poly::zero();
        let mut so = Poly::zero();
        for (j, g) in groups.iter().enumerate() {
            if want.gl {
                gl += &(Poly::from_i128(&g.gl) * minus_c.pow(j as u32));
            }
            if want.so {
                so += &(Poly::from_i128(&g.so) * one_minus_c.pow(j as u32));
            }
        }
        Ok((gl, so))
    }

    /// Undeframed values as integer coefficient vectors.
    fn raw(&self, d: &Diagram, want: Want) -> Acc {
        let width = 2 * d.degree() + d.circle_count() + 2;
        let mut acc = Acc::new(width);
        let mut memo = HashMap::new();
        self.expand(Work::new(d), 1, 0, want, &mut acc, &mut memo);
        acc
    }

    fn expand(
        &self,
        w: Work,
        sign: i128,
        depth: usize,
        want: Want,
        acc: &mut Acc,
        memo: &mut HashMap<Vec<u32>, Leaf>,
    ) {
        if w.vertex_count() == 0 {
            let add = |leaf: &Leaf, acc: &mut Acc| {
                if want.gl {
                    acc.gl[leaf.gl as usize] += sign;
                }
                for &(e, v) in &leaf.so {
                    acc.so[e as usize] += sign * v;
                }
            };
            if want.so {
                let key = w.key();
                if let Some(leaf) = memo.get(&key) {
                    add(leaf, acc);
                } else {
                    let leaf = leaf_values(&w, want);
                    add(&leaf, acc);
                    memo.insert(key, leaf);
                }
            } else {
                add(&leaf_values(&w, want), acc);
            }
            return;
        }
        let Some((plus, minus)) = w.resolve(self.order) else {
            return;
        };
        if self.parallel && depth < PAR_DEPTH && plus.vertex_count() >= 4 {
            let width = acc.gl.len();
            let (a, b) = rayon::join(
                || {
                    let mut a = Acc::new(width);
                    self.expand(plus, 1, depth + 1, want, &mut a, &mut HashMap::new());
                    a
                },
                || {
                    let mut b = Acc::new(width);
                    self.expand(minus, 1, depth + 1, want, &mut b, &mut HashMap::new());
                    b
                },
            );
            acc.add(&a, sign);
            acc.add(&b, -sign);
        } else {
            self.expand(plus, sign, depth + 1, want, acc, memo);
            self.expand(minus, -sign, depth + 1, want, acc, memo);
        }
    }
}

fn leaf_values(w: &Work, want: Want) -> Leaf {
    let layout = w.layout();
    let mut buf = Vec::new();
    let gl = layout.loops(0, &mut buf);
    let mut so = Vec::new();
    if want.so {
        let mut counts: Vec<i128> = vec![0; layout.partner.len() + layout.bare as usize + 2];
        for mask in 0u64..1 << layout.chord_count() {
            let s = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            counts[layout.loops(mask, &mut buf) as usize] += s;
        }
        so = counts
            .into_iter()
            .enumerate()
            .filter(|&(_, v)| v != 0)
            .map(|(e, v)| (e as u32, v))
            .collect();
    }
    Leaf { gl, so }
}
