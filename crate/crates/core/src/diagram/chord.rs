use super::{Diagram, DiagramError};

/// A diagram without internal vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram(Diagram);

impl ChordDiagram {
    pub fn new(d: Diagram) -> Result<Self, DiagramError> {
        if d.is_chord_diagram() {
            Ok(ChordDiagram(d))
        } else {
            Err(DiagramError::NotChordDiagram)
        }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.0
    }

    pub fn into_diagram(self) -> Diagram {
        self.0
    }

    pub fn layout(&self) -> ChordLayout {
        ChordLayout::from_lens(self.0.circle_lens(), |p| self.0.mate(p))
    }
}

/// Flat description of a chord diagram for the state-sum evaluators.
///
/// Legs are numbered `0..m` circle by circle; `succ`/`pred` move
/// counterclockwise/clockwise along the leg's circle and `partner` crosses
/// the chord. `bare` counts circles without legs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChordLayout {
    pub succ: Vec<u32>,
    pub pred: Vec<u32>,
    pub partner: Vec<u32>,
    pub chord_of: Vec<u32>,
    pub bare: u32,
}

impl ChordLayout {
    /// `mate` maps a leg id (in the `0..m` numbering given by `lens`) to its
    /// chord partner.
    pub fn from_lens(lens: &[u32], mate: impl Fn(u32) -> u32) -> Self {
        let m: u32 = lens.iter().sum();
        let mut succ = vec![0; m as usize];
        let mut pred = vec![0; m as usize];
        let mut start = 0;
        let mut bare = 0;
        for &len in lens {
            if len == 0 {
                bare += 1;
                continue;
            }
            for k in 0..len {
                let p = start + k;
                succ[p as usize] = start + (k + 1) % len;
                pred[p as usize] = start + (k + len - 1) % len;
            }
            start += len;
        }
        let partner: Vec<u32> = (0..m).map(mate).collect();
        let mut chord_of = vec![u32::MAX; m as usize];
        let mut next = 0;
        for p in 0..m {
            if chord_of[p as usize] == u32::MAX {
                chord_of[p as usize] = next;
                chord_of[partner[p as usize] as usize] = next;
                next += 1;
            }
        }
        ChordLayout {
            succ,
            pred,
            partner,
            chord_of,
            bare,
        }
    }

    pub fn chord_count(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of closed curves after resolving every chord; chord `i` is
    /// crossed when bit `i` of `crossed` is set, parallel otherwise.
    ///
    /// Each leg `x` owns the circle arc from `x` to `succ(x)`. A parallel
    /// chord `{x, y}` joins the arc entering `x` to the arc leaving `y`; a
    /// crossed chord joins the two entering arcs and the two leaving arcs,
    /// so traversal may run along an arc backwards.
    pub fn loops(&self, crossed: u64, visited: &mut Vec<bool>) -> u32 {
        let m = self.partner.len();
        visited.clear();
        visited.resize(m, false);
        let is_crossed = |leg: u32| crossed >> self.chord_of[leg as usize] & 1 == 1;
        let mut count = self.bare;
        for start in 0..m as u32 {
            if visited[start as usize] {
                continue;
            }
            count += 1;
            let (mut arc, mut forward) = (start, true);
            while !visited[arc as usize] {
                visited[arc as usize] = true;
                if forward {
                    let z = self.succ[arc as usize];
                    let w = self.partner[z as usize];
                    (arc, forward) = if is_crossed(z) {
                        (self.pred[w as usize], false)
                    } else {
                        (w, true)
                    };
                } else {
                    let u = self.partner[arc as usize];
                    (arc, forward) = if is_crossed(arc) {
                        (u, true)
                    } else {
                        (self.pred[u as usize], false)
                    };
                }
            }
        }
        count
    }
}
