//! Trivalent diagrams on oriented circles and the structural operators on them.
//!
//! A [`Diagram`] is always valid and stored in canonical form: legs are
//! numbered `0..L` circle by circle in counterclockwise order, and the
//! internal vertices follow in breadth-first discovery order starting from
//! the legs, each vertex contributing its three ports in cyclic order with
//! the discovering port first. Two diagrams that differ only by relabeling
//! points, reordering the vertex list, or rotating a vertex's ports therefore
//! compare equal, and the derived `Ord` is the deterministic key used to
//! normalize linear combinations.

mod chord;
mod combo;
mod file;
mod ops;
pub(crate) mod stu;

pub use chord::{ChordDiagram, ChordLayout};
pub use combo::DiagramCombo;
pub use file::RawDiagram;
pub use ops::{connected_sum, deframe, disjoint_union, flip_vertex, insert_template, Template};
pub use stu::{stu_reduce, ResolveOrder};

use std::fmt;
use std::ops::Range;

use thiserror::Error;

pub(crate) const NONE: u32 = u32::MAX;

/// A structural defect found by validation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    DuplicatePoint(String),
    LegUnmatched(String),
    PortUnmatched(String),
    MatchedTwice(String),
    UnknownEdgeEndpoint(String),
    SelfEdge(String),
    EdgeArity(usize),
    VertexArity { vertex: usize, ports: usize },
    ComponentWithoutCircle(String),
    OddVertexCount { legs: usize, vertices: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicatePoint(p) => write!(f, "point listed twice: {p}"),
            Violation::LegUnmatched(p) => write!(f, "leg unmatched: {p}"),
            Violation::PortUnmatched(p) => write!(f, "port unmatched: {p}"),
            Violation::MatchedTwice(p) => write!(f, "point in more than one edge: {p}"),
            Violation::UnknownEdgeEndpoint(p) => {
                write!(f, "edge endpoint is not a leg or port: {p}")
            }
            Violation::SelfEdge(p) => write!(f, "edge joins {p} to itself"),
            Violation::EdgeArity(i) => write!(f, "edge {i} does not have exactly two endpoints"),
            Violation::VertexArity { vertex, ports } => {
                write!(f, "vertex {vertex} has {ports} ports, expected 3")
            }
            Violation::ComponentWithoutCircle(p) => {
                write!(f, "component containing {p} has no oriented circle")
            }
            Violation::OddVertexCount { legs, vertices } => {
                write!(f, "legs + internal vertices = {legs} + {vertices} is odd")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("invalid diagram: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("no internal vertex with index {0}")]
    VertexIndex(usize),
    #[error("no circle with index {0}")]
    CircleIndex(usize),
    #[error("diagram has internal vertices; a chord diagram was expected")]
    NotChordDiagram,
}

/// A valid trivalent diagram in canonical form. See the module docs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    circle_lens: Vec<u32>,
    mate: Vec<u32>,
}

impl Diagram {
    /// A single circle without legs.
    pub fn circle() -> Self {
        Diagram {
            circle_lens: vec![0],
            mate: Vec::new(),
        }
    }

    /// Builds a diagram from arbitrary point ids. `circles` lists legs in
    /// counterclockwise order, `vertices` lists ports in cyclic order.
    pub fn from_parts(
        circles: Vec<Vec<u32>>,
        vertices: Vec<[u32; 3]>,
        edges: Vec<[u32; 2]>,
    ) -> Result<Self, DiagramError> {
        let mut b = DiagramBuilder::new();
        b.circles = circles;
        b.vertices = vertices;
        b.edges = edges;
        b.build()
    }

    pub fn circle_count(&self) -> usize {
        self.circle_lens.len()
    }

    pub fn leg_count(&self) -> usize {
        self.circle_lens.iter().map(|&l| l as usize).sum()
    }

    pub fn vertex_count(&self) -> usize {
        (self.mate.len() - self.leg_count()) / 3
    }

    pub fn point_count(&self) -> usize {
        self.mate.len()
    }

    /// Half the number of legs plus internal vertices.
    pub fn degree(&self) -> usize {
        (self.leg_count() + self.vertex_count()) / 2
    }

    pub fn is_chord_diagram(&self) -> bool {
        self.vertex_count() == 0
    }

    pub fn circle_lens(&self) -> &[u32] {
        &self.circle_lens
    }

    /// Point ids of the legs on circle `i`, in counterclockwise order.
    pub fn circle_legs(&self, i: usize) -> Range<u32> {
        let start: u32 = self.circle_lens[..i].iter().sum();
        start..start + self.circle_lens[i]
    }

    /// Port ids of internal vertex `j`, in cyclic order.
    pub fn vertex_ports(&self, j: usize) -> [u32; 3] {
        let base = (self.leg_count() + 3 * j) as u32;
        [base, base + 1, base + 2]
    }

    pub fn mate(&self, p: u32) -> u32 {
        self.mate[p as usize]
    }

    pub fn is_leg(&self, p: u32) -> bool {
        (p as usize) < self.leg_count()
    }

    /// Index of the internal vertex owning port `p`, if `p` is a port.
    pub fn vertex_of(&self, p: u32) -> Option<usize> {
        let l = self.leg_count();
        (p as usize >= l).then(|| (p as usize - l) / 3)
    }

    /// Circle index of leg `p`.
    pub fn circle_of(&self, p: u32) -> Option<usize> {
        let mut start = 0;
        for (i, &len) in self.circle_lens.iter().enumerate() {
            if p < start + len {
                return Some(i);
            }
            start += len;
        }
        None
    }

    /// Every edge once, as `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = [u32; 2]> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(a, &b)| (a as u32) < b)
            .map(|(a, &b)| [a as u32, b])
    }

    /// Decomposes into the explicit lists used by the builder.
    #[allow(clippy::type_complexity)]
    pub fn to_parts(&self) -> (Vec<Vec<u32>>, Vec<[u32; 3]>, Vec<[u32; 2]>) {
        let circles = (0..self.circle_count())
            .map(|i| self.circle_legs(i).collect())
            .collect();
        let vertices = (0..self.vertex_count())
            .map(|j| self.vertex_ports(j))
            .collect();
        (circles, vertices, self.edges().collect())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (circles, vertices, edges) = self.to_parts();
        f.debug_struct("Diagram")
            .field("circles", &circles)
            .field("vertices", &vertices)
            .field("edges", &edges)
            .finish()
    }
}

/// Accumulates circles, vertices and edges over arbitrary `u32` point ids,
/// then validates and canonicalizes.
#[derive(Clone, Debug, Default)]
pub struct DiagramBuilder {
    pub circles: Vec<Vec<u32>>,
    pub vertices: Vec<[u32; 3]>,
    pub edges: Vec<[u32; 2]>,
    next: u32,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// A fresh point id not used by any previous call.
    pub fn point(&mut self) -> u32 {
        let p = self.next;
        self.next += 1;
        p
    }

    /// Adds a circle carrying `legs` fresh legs and returns them in order.
    pub fn circle(&mut self, legs: usize) -> Vec<u32> {
        let ids: Vec<u32> = (0..legs).map(|_| self.point()).collect();
        self.circles.push(ids.clone());
        ids
    }

    /// Adds an internal vertex with three fresh ports in cyclic order.
    pub fn vertex(&mut self) -> [u32; 3] {
        let ports = [self.point(), self.point(), self.point()];
        self.vertices.push(ports);
        ports
    }

    pub fn edge(&mut self, a: u32, b: u32) {
        self.edges.push([a, b]);
    }

    pub fn build(self) -> Result<Diagram, DiagramError> {
        let names = |p: u32| p.to_string();
        let checked = check_structure(&self.circles, &self.vertices, &self.edges, names)
            .map_err(DiagramError::Invalid)?;
        Ok(canonicalize(&self.circles, &self.vertices, &checked))
    }
}

/// Validates the structure and returns the dense mate table (indexed by id).
pub(crate) fn check_structure(
    circles: &[Vec<u32>],
    vertices: &[[u32; 3]],
    edges: &[[u32; 2]],
    name: impl Fn(u32) -> String,
) -> Result<Vec<u32>, Vec<Violation>> {
    let mut violations = Vec::new();
    let max_id = circles
        .iter()
        .flatten()
        .chain(vertices.iter().flatten())
        .chain(edges.iter().flatten())
        .copied()
        .max()
        .map_or(0, |m| m as usize + 1);

    // 0 = unknown, 1 = leg, 2 = port
    let mut kind = vec![0u8; max_id];
    let tagged = circles
        .iter()
        .flatten()
        .map(|&p| (1u8, p))
        .chain(vertices.iter().flatten().map(|&p| (2u8, p)));
    for (k, p) in tagged {
        let slot = &mut kind[p as usize];
        if *slot != 0 {
            violations.push(Violation::DuplicatePoint(name(p)));
        } else {
            *slot = k;
        }
    }

    let mut mate = vec![NONE; max_id];
    for &[a, b] in edges {
        if a == b {
            violations.push(Violation::SelfEdge(name(a)));
            continue;
        }
        for p in [a, b] {
            if kind[p as usize] == 0 {
                violations.push(Violation::UnknownEdgeEndpoint(name(p)));
            } else if mate[p as usize] != NONE {
                violations.push(Violation::MatchedTwice(name(p)));
            }
        }
        if kind[a as usize] != 0
            && kind[b as usize] != 0
            && mate[a as usize] == NONE
            && mate[b as usize] == NONE
        {
            mate[a as usize] = b;
            mate[b as usize] = a;
        }
    }
    for (p, &k) in kind.iter().enumerate() {
        if k != 0 && mate[p] == NONE {
            if k == 1 {
                violations.push(Violation::LegUnmatched(name(p as u32)));
            } else {
                violations.push(Violation::PortUnmatched(name(p as u32)));
            }
        }
    }

    let legs: usize = circles.iter().map(Vec::len).sum();
    if (legs + vertices.len()) % 2 != 0 {
        violations.push(Violation::OddVertexCount {
            legs,
            vertices: vertices.len(),
        });
    }

    // Components: anything not reachable from a leg has no circle.
    let mut uf = UnionFind::new(max_id);
    for (p, &m) in mate.iter().enumerate() {
        if m != NONE {
            uf.union(p as u32, m);
        }
    }
    for v in vertices {
        uf.union(v[0], v[1]);
        uf.union(v[0], v[2]);
    }
    for c in circles {
        for w in c.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut has_circle = vec![false; max_id];
    for &p in circles.iter().flatten() {
        has_circle[uf.find(p) as usize] = true;
    }
    let mut reported = vec![false; max_id];
    for &p in vertices.iter().flatten() {
        let r = uf.find(p) as usize;
        if !has_circle[r] && !reported[r] {
            reported[r] = true;
            violations.push(Violation::ComponentWithoutCircle(name(p)));
        }
    }

    if violations.is_empty() {
        Ok(mate)
    } else {
        violations.sort();
        violations.dedup();
        Err(violations)
    }
}

/// Relabels a structurally valid diagram into canonical form.
pub(crate) fn canonicalize(circles: &[Vec<u32>], vertices: &[[u32; 3]], mate: &[u32]) -> Diagram {
    let n = mate.len();
    let mut owner = vec![NONE; n];
    let mut slot = vec![0u8; n];
    for (j, v) in vertices.iter().enumerate() {
        for (s, &p) in v.iter().enumerate() {
            owner[p as usize] = j as u32;
            slot[p as usize] = s as u8;
        }
    }
    let mut new_id = vec![NONE; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    for &p in circles.iter().flatten() {
        new_id[p as usize] = order.len() as u32;
        order.push(p);
    }
    let mut seen = vec![false; vertices.len()];
    let mut i = 0;
    while i < order.len() {
        let t = mate[order[i] as usize];
        let v = owner[t as usize];
        if v != NONE && !seen[v as usize] {
            seen[v as usize] = true;
            let s = slot[t as usize] as usize;
            let ports = vertices[v as usize];
            for k in 0..3 {
                let q = ports[(s + k) % 3];
                new_id[q as usize] = order.len() as u32;
                order.push(q);
            }
        }
        i += 1;
    }
    debug_assert!(seen.iter().all(|&s| s), "vertex unreachable from circles");
    let new_mate = order
        .iter()
        .map(|&old| new_id[mate[old as usize] as usize])
        .collect();
    Diagram {
        circle_lens: circles.iter().map(|c| c.len() as u32).collect(),
        mate: new_mate,
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Diagram {
        Diagram::from_parts(vec![vec![0, 1]], vec![], vec![[0, 1]]).unwrap()
    }

    #[test]
    fn bare_circle_is_valid() {
        let d = Diagram::from_parts(vec![vec![]], vec![], vec![]).unwrap();
        assert_eq!(d, Diagram::circle());
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn unmatched_leg_is_reported() {
        let err = Diagram::from_parts(vec![vec![7]], vec![], vec![]).unwrap_err();
        let DiagramError::Invalid(v) = err else {
            panic!()
        };
        assert!(v.contains(&Violation::LegUnmatched("7".into())));
        assert!(v.iter().any(|x| x.to_string().starts_with("leg unmatched")));
    }

    #[test]
    fn all_violations_are_collected() {
        // duplicate leg, unknown endpoint, floating vertex
        let err = Diagram::from_parts(
            vec![vec![0, 0]],
            vec![[10, 11, 12]],
            vec![[0, 99], [10, 11]],
        )
        .unwrap_err();
        let DiagramError::Invalid(v) = err else {
            panic!()
        };
        assert!(v.contains(&Violation::DuplicatePoint("0".into())));
        assert!(v.contains(&Violation::UnknownEdgeEndpoint("99".into())));
        assert!(v.contains(&Violation::PortUnmatched("12".into())));
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::ComponentWithoutCircle(_))));
        assert!(v.contains(&Violation::OddVertexCount {
            legs: 2,
            vertices: 1
        }));
    }

    #[test]
    fn canonical_form_ignores_labels_and_rotation() {
        let a = Diagram::from_parts(vec![vec![0], vec![]], vec![[1, 2, 3]], vec![[0, 1], [2, 3]]);
        // vertex self-loop through distinct ports is permitted
        assert!(a.is_ok());
        let b = Diagram::from_parts(
            vec![vec![50], vec![]],
            vec![[7, 8, 9]],
            vec![[50, 8], [9, 7]],
        );
        assert_eq!(a.unwrap(), b.unwrap());
        assert_eq!(
            theta(),
            Diagram::from_parts(vec![vec![4, 3]], vec![], vec![[3, 4]]).unwrap()
        );
    }

    #[test]
    fn accessors() {
        let d = theta();
        assert_eq!(d.degree(), 1);
        assert_eq!(d.circle_legs(0), 0..2);
        assert_eq!(d.mate(0), 1);
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![[0, 1]]);
        assert_eq!(d.circle_of(1), Some(0));
        assert!(d.is_chord_diagram());
    }
}
