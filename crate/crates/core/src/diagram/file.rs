use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{canonicalize, check_structure, Diagram, DiagramError, Violation};

/// On-disk diagram: named legs per circle (counterclockwise), named ports per
/// vertex (cyclic order), and edges as name pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct RawDiagram {
    pub circles: Vec<Vec<String>>,
    #[serde(default)]
    pub vertices: Vec<Vec<String>>,
    #[serde(default)]
    pub edges: Vec<Vec<String>>,
}

impl RawDiagram {
    /// Reports every structural problem at once.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        self.lower().map(|_| ())
    }

    pub fn to_diagram(&self) -> Result<Diagram, DiagramError> {
        let (circles, vertices, mate) = self.lower().map_err(DiagramError::Invalid)?;
        Ok(canonicalize(&circles, &vertices, &mate))
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializing plain strings cannot fail")
    }

    #[allow(clippy::type_complexity)]
    fn lower(&self) -> Result<(Vec<Vec<u32>>, Vec<[u32; 3]>, Vec<u32>), Vec<Violation>> {
        let mut ids: HashMap<&str, u32> = HashMap::new();
        // Points listed twice receive distinct ids so the duplicate is caught
        // by structural checking; edges refer to the first occurrence.
        let fresh = |s: &str, names: &mut Vec<String>| -> u32 {
            names.push(s.to_string());
            (names.len() - 1) as u32
        };
        let mut owned: Vec<String> = Vec::new();
        let mut violations = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for s in self.circles.iter().chain(&self.vertices).flatten() {
            if !seen.insert(s.as_str()) {
                violations.push(Violation::DuplicatePoint(s.clone()));
            }
        }
        let mut circles = Vec::new();
        for c in &self.circles {
            let mut legs = Vec::new();
            for s in c {
                let id = fresh(s, &mut owned);
                ids.entry(s.as_str()).or_insert(id);
                legs.push(id);
            }
            circles.push(legs);
        }
        let mut vertices = Vec::new();
        for (j, v) in self.vertices.iter().enumerate() {
            let ports: Vec<u32> = v
                .iter()
                .map(|s| {
                    let id = fresh(s, &mut owned);
                    ids.entry(s.as_str()).or_insert(id);
                    id
                })
                .collect();
            match <[u32; 3]>::try_from(ports) {
                Ok(p) => vertices.push(p),
                Err(p) => violations.push(Violation::VertexArity {
                    vertex: j,
                    ports: p.len(),
                }),
            }
        }
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.len() != 2 {
                violations.push(Violation::EdgeArity(i));
                continue;
            }
            let mut ends = [0u32; 2];
            for (k, s) in e.iter().enumerate() {
                ends[k] = match ids.get(s.as_str()) {
                    Some(&id) => id,
                    None => {
                        violations.push(Violation::UnknownEdgeEndpoint(s.clone()));
                        u32::MAX
                    }
                };
            }
            if ends.contains(&u32::MAX) {
                continue;
            }
            edges.push(ends);
        }
        let name = |p: u32| owned[p as usize].clone();
        let structural = check_structure(&circles, &vertices, &edges, name);
        let mate = match structural {
            Ok(m) if violations.is_empty() => m,
            Ok(_) => return Err(violations),
            Err(more) => {
                violations.extend(more);
                violations.sort();
                violations.dedup();
                return Err(violations);
            }
        };
        Ok((circles, vertices, mate))
    }
}

impl From<&Diagram> for RawDiagram {
    fn from(d: &Diagram) -> Self {
        let (circles, vertices, edges) = d.to_parts();
        let name = |p: u32| {
            if d.is_leg(p) {
                format!("l{p}")
            } else {
                format!("v{}", p as usize - d.leg_count())
            }
        };
        RawDiagram {
            circles: circles
                .into_iter()
                .map(|c| c.into_iter().map(name).collect())
                .collect(),
            vertices: vertices
                .into_iter()
                .map(|v| v.into_iter().map(name).collect())
                .collect(),
            edges: edges
                .into_iter()
                .map(|e| e.into_iter().map(name).collect())
                .collect(),
        }
    }
}
