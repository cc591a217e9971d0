//! Reference implementations written directly from the definitions, sharing
//! no code with the library's state sums.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vassiliev_core::algebra::rat;
use vassiliev_core::diagram::{deframe, stu_reduce, ResolveOrder};
use vassiliev_core::lab::random_diagram;
use vassiliev_core::{Diagram, Poly};

pub struct Dsu(Vec<usize>);

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    pub fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }

    pub fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// A chord diagram as plain data: circles list legs in orientation order,
/// chords pair the legs.
#[derive(Clone, Debug)]
pub struct Chords {
    pub circles: Vec<Vec<u32>>,
    pub chords: Vec<(u32, u32)>,
}

impl Chords {
    /// Loop count of one splice state. Each leg `p` starts the arc from `p`
    /// to the next leg on its circle; a chord in the parallel state joins the
    /// arc arriving at one end to the arc leaving the other end, in the
    /// crossed state it joins the two arriving arcs and the two leaving arcs.
    fn loops(&self, crossed: &[bool]) -> u32 {
        let mut index = HashMap::new();
        let mut prev = HashMap::new();
        for circle in &self.circles {
            for (i, &p) in circle.iter().enumerate() {
                let n = index.len();
                index.insert(p, n);
                prev.insert(p, circle[(i + circle.len() - 1) % circle.len()]);
            }
        }
        let mut dsu = Dsu::new(index.len());
        for (&(p, q), &x) in self.chords.iter().zip(crossed) {
            let (into_p, out_p) = (index[&prev[&p]], index[&p]);
            let (into_q, out_q) = (index[&prev[&q]], index[&q]);
            if x {
                dsu.union(into_p, into_q);
                dsu.union(out_p, out_q);
            } else {
                dsu.union(into_p, out_q);
                dsu.union(into_q, out_p);
            }
        }
        let bare = self.circles.iter().filter(|c| c.is_empty()).count();
        (dsu.classes() + bare) as u32
    }

    pub fn gl(&self) -> Poly {
        let loops = self.loops(&vec![false; self.chords.len()]);
        Poly::monomial(rat(1), loops as usize)
    }

    pub fn so(&self) -> Poly {
        let n = self.chords.len();
        let mut total = Poly::zero();
        for mask in 0u32..(1 << n) {
            let crossed: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            total = total + Poly::monomial(rat(sign), self.loops(&crossed) as usize);
        }
        total
    }

    pub fn from_diagram(d: &Diagram) -> Chords {
        assert!(d.is_chord_diagram());
        let (circles, _, edges) = d.to_parts();
        Chords {
            circles,
            chords: edges.into_iter().map(|[a, b]| (a, b)).collect(),
        }
    }
}

/// Framed value of a trivalent diagram by the vertex rule: each internal
/// vertex with ports `(a, b, c)` becomes a small circle carrying the ports as
/// legs, in the order `(a, c, b)` with sign `+` and `(a, b, c)` with sign
/// `-`, and every edge becomes a chord. For so each vertex also carries a
/// factor 1/2, since a chord stands for parallel minus crossed rather than
/// half of it.
pub fn vertex_rule(d: &Diagram, so: bool) -> Poly {
    let (circles, vertices, edges) = d.to_parts();
    let chords: Vec<(u32, u32)> = edges.into_iter().map(|[a, b]| (a, b)).collect();
    let mut total = Poly::zero();
    for mask in 0u32..(1 << vertices.len()) {
        let mut cs = circles.clone();
        for (j, &[a, b, c]) in vertices.iter().enumerate() {
            cs.push(if mask >> j & 1 == 0 {
                vec![a, c, b]
            } else {
                vec![a, b, c]
            });
        }
        let ch = Chords {
            circles: cs,
            chords: chords.clone(),
        };
        let v = if so { ch.so() } else { ch.gl() };
        total = if mask.count_ones() % 2 == 0 {
            total + v
        } else {
            total - v
        };
    }
    if so {
        total.scale(&rat(2).pow(-(vertices.len() as i32)))
    } else {
        total
    }
}

pub fn seeded_diagram(seed: u64, circles: usize, legs: usize, vertices: usize) -> Option<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_diagram(&mut rng, circles, legs, vertices)
}

/// Deframed `(gl, so)` values: STU-expand with the library, deframe each
/// chord diagram term by term and sum the splice oracle. Nothing here uses
/// the evaluator's own deframing shortcut.
pub fn deframed(d: &Diagram) -> (Poly, Poly) {
    let mut gl = Poly::zero();
    let mut so = Poly::zero();
    for (k, chord) in stu_reduce(d, ResolveOrder::First).terms() {
        for (j, t) in deframe(chord).terms() {
            let plain = Chords::from_diagram(t);
            let kj = k * j;
            gl += &plain.gl().scale(&kj);
            so += &plain.so().scale(&kj);
        }
    }
    (gl, so)
}
