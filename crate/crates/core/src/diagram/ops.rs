use num_traits::One;

use super::{Diagram, DiagramCombo, DiagramError};
use crate::algebra::{ratio, Rational};

/// Appends `extra` circles without legs.
pub fn disjoint_union(d: &Diagram, extra: usize) -> Diagram {
    let mut out = d.clone();
    out.circle_lens.extend(std::iter::repeat_n(0, extra));
    out
}

/// Connected sum along circle `i1` of `d1` and circle `i2` of `d2`.
///
/// Both circles are cut just after their last leg; the merged circle carries
/// the legs of `i1` followed by those of `i2` and takes the place of `i1`.
/// The remaining circles of `d2` follow those of `d1`.
pub fn connected_sum(
    d1: &Diagram,
    i1: usize,
    d2: &Diagram,
    i2: usize,
) -> Result<Diagram, DiagramError> {
    if i1 >= d1.circle_count() {
        return Err(DiagramError::CircleIndex(i1));
    }
    if i2 >= d2.circle_count() {
        return Err(DiagramError::CircleIndex(i2));
    }
    let off = d1.point_count() as u32;
    let (mut circles, mut vertices, mut edges) = d1.to_parts();
    let (c2, v2, e2) = d2.to_parts();
    let shift = |v: Vec<u32>| v.into_iter().map(|p| p + off).collect::<Vec<_>>();
    for (k, c) in c2.into_iter().enumerate() {
        if k == i2 {
            circles[i1].extend(shift(c));
        } else {
            circles.push(shift(c));
        }
    }
    vertices.extend(v2.into_iter().map(|v| v.map(|p| p + off)));
    edges.extend(e2.into_iter().map(|e| e.map(|p| p + off)));
    Diagram::from_parts(circles, vertices, edges)
}

/// Reverses the cyclic order at internal vertex `v`.
pub fn flip_vertex(d: &Diagram, v: usize) -> Result<Diagram, DiagramError> {
    if v >= d.vertex_count() {
        return Err(DiagramError::VertexIndex(v));
    }
    let (circles, mut vertices, edges) = d.to_parts();
    vertices[v].swap(1, 2);
    Diagram::from_parts(circles, vertices, edges)
}

/// A trivalent graph with three external ports, grafted in place of a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    vertices: Vec<[u32; 3]>,
    edges: Vec<[u32; 2]>,
    ext: [u32; 3],
}

/// Neighbour of a template vertex: another vertex or external leg `k`.
#[derive(Clone, Copy)]
enum Nb {
    V(usize),
    Ext(usize),
}

impl Template {
    /// Builds a template from cyclic neighbour lists. Each internal edge must
    /// appear from both ends, and each external leg exactly once.
    fn from_adjacency(adj: &[[Nb; 3]]) -> Self {
        let port = |v: usize, s: usize| (3 * v + s) as u32;
        let mut edges = Vec::new();
        let mut ext = [u32::MAX; 3];
        for (v, nbs) in adj.iter().enumerate() {
            for (s, nb) in nbs.iter().enumerate() {
                match *nb {
                    Nb::Ext(k) => ext[k] = port(v, s),
                    Nb::V(w) if w > v => {
                        let back = adj[w]
                            .iter()
                            .position(|x| matches!(x, Nb::V(u) if *u == v))
                            .expect("template adjacency must be symmetric");
                        edges.push([port(v, s), port(w, back)]);
                    }
                    Nb::V(_) => {}
                }
            }
        }
        Template {
            vertices: (0..adj.len())
                .map(|v| [port(v, 0), port(v, 1), port(v, 2)])
                .collect(),
            edges,
            ext,
        }
    }

    /// The triangle: three vertices pairwise joined, one external leg each.
    pub fn t() -> Self {
        use Nb::*;
        Self::from_adjacency(&[
            [Ext(0), V(1), V(2)],
            [Ext(1), V(2), V(0)],
            [Ext(2), V(0), V(1)],
        ])
    }

    /// The seven-vertex element: two rails `T1–T2` and `B1–B2` joined by the
    /// rungs through `M1` and `M2`, the crossbar `M1–M2`, and both rails
    /// merging at `R`. External legs sit at `T1`, `B1` and `R`.
    pub fn x3() -> Self {
        use Nb::*;
        const T1: usize = 0;
        const T2: usize = 1;
        const B1: usize = 2;
        const B2: usize = 3;
        const M1: usize = 4;
        const M2: usize = 5;
        const R: usize = 6;
        Self::from_adjacency(&[
            [V(T2), Ext(0), V(M1)],
            [V(R), V(T1), V(M2)],
            [V(B2), V(M1), Ext(1)],
            [V(R), V(M2), V(B1)],
            [V(M2), V(T1), V(B1)],
            [V(T2), V(M1), V(B2)],
            [Ext(2), V(T2), V(B2)],
        ])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

/// Replaces internal vertex `v` by `template`, attaching its external legs to
/// the former neighbours of `v` in the vertex's cyclic order.
pub fn insert_template(
    d: &Diagram,
    v: usize,
    template: &Template,
) -> Result<Diagram, DiagramError> {
    if v >= d.vertex_count() {
        return Err(DiagramError::VertexIndex(v));
    }
    let ports = d.vertex_ports(v);
    let off = d.point_count() as u32;
    let (circles, mut vertices, edges) = d.to_parts();
    vertices.remove(v);
    let mut edges: Vec<[u32; 2]> = edges
        .into_iter()
        .filter(|e| !e.iter().any(|p| ports.contains(p)))
        .collect();
    vertices.extend(template.vertices.iter().map(|t| t.map(|p| p + off)));
    edges.extend(template.edges.iter().map(|e| e.map(|p| p + off)));
    let ext = template.ext.map(|p| p + off);
    for (k, &x) in ports.iter().enumerate() {
        let target = d.mate(x);
        match ports.iter().position(|&q| q == target) {
            Some(k2) if k < k2 => edges.push([ext[k], ext[k2]]),
            Some(_) => {}
            None => edges.push([ext[k], target]),
        }
    }
    Diagram::from_parts(circles, vertices, edges)
}

/// Applies the deframing map: every chord component `{p, q}` becomes
/// `keep - 1/2 (isolated chord at p) - 1/2 (isolated chord at q)`.
pub fn deframe(d: &Diagram) -> DiagramCombo {
    let chords: Vec<[u32; 2]> = d
        .edges()
        .filter(|&[a, b]| d.is_leg(a) && d.is_leg(b))
        .collect();
    if chords.is_empty() {
        return DiagramCombo::from(d.clone());
    }
    let (circles, vertices, edges) = d.to_parts();
    let half = ratio(-1, 2);
    let mut terms = Vec::new();
    let states = 3usize.pow(chords.len() as u32);
    for mut s in 0..states {
        let mut circ = circles.clone();
        let mut coeff = Rational::one();
        for &[p, q] in &chords {
            let choice = s % 3;
            s /= 3;
            let (stay, moved) = match choice {
                0 => continue,
                1 => (p, q),
                _ => (q, p),
            };
            coeff *= &half;
            for c in circ.iter_mut() {
                c.retain(|&x| x != moved);
            }
            for c in circ.iter_mut() {
                if let Some(i) = c.iter().position(|&x| x == stay) {
                    c.insert(i + 1, moved);
                }
            }
        }
        let term = Diagram::from_parts(circ, vertices.clone(), edges.clone())
            .expect("moving chord legs preserves validity");
        terms.push((coeff, term));
    }
    DiagramCombo::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn theta() -> Diagram {
        Diagram::from_parts(vec![vec![0, 1]], vec![], vec![[0, 1]]).unwrap()
    }

    fn l1() -> Diagram {
        Diagram::from_parts(vec![vec![0], vec![1]], vec![], vec![[0, 1]]).unwrap()
    }

    #[test]
    fn deframe_theta_vanishes() {
        assert!(deframe(&theta()).is_empty());
    }

    #[test]
    fn deframe_l1_has_three_terms() {
        let out = deframe(&l1());
        let both = disjoint_union(&theta(), 1);
        let other = Diagram::from_parts(vec![vec![], vec![0, 1]], vec![], vec![[0, 1]]).unwrap();
        let expected =
            DiagramCombo::from_terms([(rat(1), l1()), (ratio(-1, 2), both), (ratio(-1, 2), other)]);
        assert_eq!(out, expected);
    }

    #[test]
    fn connected_sum_with_circle_is_identity() {
        let d = l1();
        assert_eq!(connected_sum(&d, 0, &Diagram::circle(), 0).unwrap(), d);
        assert_eq!(connected_sum(&d, 1, &Diagram::circle(), 0).unwrap(), d);
        assert_eq!(
            connected_sum(&d, 2, &Diagram::circle(), 0),
            Err(DiagramError::CircleIndex(2))
        );
    }

    #[test]
    fn disjoint_union_adds_circles() {
        let d = disjoint_union(&theta(), 1);
        assert_eq!(d.circle_count(), 2);
        assert_eq!(d.degree(), 1);
        assert_eq!(disjoint_union(&theta(), 0), theta());
    }

    #[test]
    fn template_sizes() {
        assert_eq!(Template::t().vertex_count(), 3);
        assert_eq!(Template::x3().vertex_count(), 7);
        assert_eq!(Template::x3().edges.len(), 9);
        assert!(Template::x3().ext.iter().all(|&p| p != u32::MAX));
    }
}
