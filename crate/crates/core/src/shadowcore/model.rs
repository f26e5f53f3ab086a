use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Arc,
    Circle,
}

impl EdgeKind {
    pub fn chi(self) -> i64 {
        match self {
            EdgeKind::Arc => 1,
            EdgeKind::Circle => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Region {
    pub id: String,
    pub chi: i64,
    /// Twice the gleam.
    pub gleam2: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InteriorEdge {
    pub id: String,
    pub kind: EdgeKind,
    pub regions: [String; 3],
}

/// Region ids around an interior vertex; the four germs carry
/// `(a,b,c)`, `(a,e,f)`, `(d,b,f)`, `(d,e,c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Slots {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
    pub e: String,
    pub f: String,
}

impl Slots {
    pub fn as_array(&self) -> [&str; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    /// Slot indices (into `a..f`) of the four germ triples.
    pub const GERMS: [[usize; 3]; 4] = [[0, 1, 2], [0, 4, 5], [3, 1, 5], [3, 4, 2]];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InteriorVertex {
    pub id: String,
    pub slots: Slots,
    /// Optional ids of the interior edges carrying the four germs, in germ
    /// order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<[String; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryVertex {
    pub id: String,
    pub regions: [String; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryEdge {
    pub id: String,
    pub kind: EdgeKind,
    pub region: String,
    pub color: u32,
}

/// Combinatorial incidence model of a shadow.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Shadow {
    #[serde(default)]
    pub regions: Vec<Region>,
    #[serde(default)]
    pub interior_edges: Vec<InteriorEdge>,
    #[serde(default)]
    pub interior_vertices: Vec<InteriorVertex>,
    #[serde(default)]
    pub boundary_vertices: Vec<BoundaryVertex>,
    #[serde(default)]
    pub boundary_edges: Vec<BoundaryEdge>,
}

impl Shadow {
    pub fn from_json(text: &str) -> Result<Shadow, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("shadow serializes")
    }

    pub fn region_index(&self, id: &str) -> Option<usize> {
        self.regions.iter().position(|r| r.id == id)
    }

    pub fn max_boundary_color(&self) -> u32 {
        self.boundary_edges.iter().map(|e| e.color).max().unwrap_or(0)
    }
}

/// Colors forced on a region by its boundary edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Fixed {
    Free,
    Color(u32),
    Conflict,
}

/// A validated shadow with region references resolved to indices.
#[derive(Clone, Debug)]
pub(crate) struct Indexed {
    pub chi: Vec<i64>,
    pub gleam2: Vec<i64>,
    pub fixed: Vec<Fixed>,
    pub edges: Vec<([usize; 3], i64)>,
    pub ivs: Vec<[usize; 6]>,
    pub bvs: Vec<[usize; 3]>,
    /// `(region, color, χ)`.
    pub bes: Vec<(usize, u32, i64)>,
}

impl Indexed {
    pub fn n_regions(&self) -> usize {
        self.chi.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicateId { id: String },
    MissingRegion { owner: String, region: String },
    UnknownEdge { vertex: String, edge: String },
    ColorMismatch { region: String, expected: u32, found: Option<u32> },
    ConflictingColorGiven { region: String, color: u32 },
    ColorWithoutBoundary { region: String, color: u32 },
    GermMismatch { vertex: String, germ: usize },
    BoundaryVertexMismatch { vertex: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateId { id } => write!(f, "duplicate id `{id}`"),
            Violation::MissingRegion { owner, region } => {
                write!(f, "`{owner}` references missing region `{region}`")
            }
            Violation::UnknownEdge { vertex, edge } => {
                write!(f, "vertex `{vertex}` references missing interior edge `{edge}`")
            }
            Violation::ColorMismatch { region, expected, found } => match found {
                Some(c) => write!(f, "region `{region}` has color {c} but its boundary forces {expected}"),
                None => write!(f, "region `{region}` meets the boundary and needs color {expected}"),
            },
            Violation::ConflictingColorGiven { region, color } => write!(
                f,
                "region `{region}` meets boundary edges of different colors and must not carry a color (found {color})"
            ),
            Violation::ColorWithoutBoundary { region, color } => {
                write!(f, "region `{region}` has color {color} but no boundary edge")
            }
            Violation::GermMismatch { vertex, germ } => write!(
                f,
                "germ {germ} of interior vertex `{vertex}` matches no interior edge triple"
            ),
            Violation::BoundaryVertexMismatch { vertex } => {
                write!(f, "boundary vertex `{vertex}` matches no interior edge triple")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

fn sorted3<T: Ord + Clone>(t: &[T; 3]) -> [T; 3] {
    let mut s = t.clone();
    s.sort();
    s
}

/// Lists every structural problem; an empty report means the shadow can be
/// evaluated.
pub fn validate_shadow(s: &Shadow) -> ValidationReport {
    let mut out = Vec::new();
    let mut seen: HashMap<&str, ()> = HashMap::new();
    let ids = s
        .regions
        .iter()
        .map(|r| &r.id)
        .chain(s.interior_edges.iter().map(|e| &e.id))
        .chain(s.interior_vertices.iter().map(|v| &v.id))
        .chain(s.boundary_vertices.iter().map(|v| &v.id))
        .chain(s.boundary_edges.iter().map(|e| &e.id));
    for id in ids {
        if seen.insert(id, ()).is_some() {
            out.push(Violation::DuplicateId { id: id.clone() });
        }
    }
    let regions: HashMap<&str, &Region> = s.regions.iter().map(|r| (r.id.as_str(), r)).collect();
    let mut check = |owner: &str, region: &str| {
        if !regions.contains_key(region) {
            out.push(Violation::MissingRegion {
                owner: owner.to_string(),
                region: region.to_string(),
            });
        }
    };
    for e in &s.interior_edges {
        e.regions.iter().for_each(|r| check(&e.id, r));
    }
    for v in &s.interior_vertices {
        v.slots.as_array().iter().for_each(|r| check(&v.id, r));
    }
    for v in &s.boundary_vertices {
        v.regions.iter().for_each(|r| check(&v.id, r));
    }
    for e in &s.boundary_edges {
        check(&e.id, &e.region);
    }

    // colors forced by the boundary
    let mut forced: BTreeMap<&str, Vec<u32>> = BTreeMap::new();
    for e in &s.boundary_edges {
        forced.entry(e.region.as_str()).or_default().push(e.color);
    }
    for r in &s.regions {
        match (forced.get(r.id.as_str()), r.color) {
            (None, Some(c)) => out.push(Violation::ColorWithoutBoundary {
                region: r.id.clone(),
                color: c,
            }),
            (None, None) => {}
            (Some(cs), given) => {
                let first = cs[0];
                let agree = cs.iter().all(|&c| c == first);
                match (agree, given) {
                    (true, Some(c)) if c == first => {}
                    (true, found) => out.push(Violation::ColorMismatch {
                        region: r.id.clone(),
                        expected: first,
                        found,
                    }),
                    (false, Some(c)) => out.push(Violation::ConflictingColorGiven {
                        region: r.id.clone(),
                        color: c,
                    }),
                    (false, None) => {}
                }
            }
        }
    }

    let edge_triples: HashMap<&str, [&str; 3]> = s
        .interior_edges
        .iter()
        .map(|e| (e.id.as_str(), sorted3(&[e.regions[0].as_str(), e.regions[1].as_str(), e.regions[2].as_str()])))
        .collect();
    let any_edge = |t: [&str; 3]| edge_triples.values().any(|e| *e == t);
    for v in &s.interior_vertices {
        let slots = v.slots.as_array();
        for (g, germ) in Slots::GERMS.iter().enumerate() {
            let t = sorted3(&[slots[germ[0]], slots[germ[1]], slots[germ[2]]]);
            let ok = match &v.edges {
                Some(es) => match edge_triples.get(es[g].as_str()) {
                    Some(e) => *e == t,
                    None => {
                        out.push(Violation::UnknownEdge {
                            vertex: v.id.clone(),
                            edge: es[g].clone(),
                        });
                        continue;
                    }
                },
                None => any_edge(t),
            };
            if !ok {
                out.push(Violation::GermMismatch {
                    vertex: v.id.clone(),
                    germ: g,
                });
            }
        }
    }
    for v in &s.boundary_vertices {
        let t = sorted3(&[v.regions[0].as_str(), v.regions[1].as_str(), v.regions[2].as_str()]);
        if !any_edge(t) {
            out.push(Violation::BoundaryVertexMismatch { vertex: v.id.clone() });
        }
    }
    ValidationReport { violations: out }
}

impl Shadow {
    /// Resolves ids to indices; `Err` carries the validation report.
    pub(crate) fn index(&self) -> Result<Indexed, ValidationReport> {
        let report = validate_shadow(self);
        if !report.is_empty() {
            return Err(report);
        }
        let idx: HashMap<&str, usize> = self.regions.iter().enumerate().map(|(i, r)| (r.id.as_str(), i)).collect();
        let r = |id: &String| idx[id.as_str()];
        let mut fixed = vec![Fixed::Free; self.regions.len()];
        for e in &self.boundary_edges {
            let slot = &mut fixed[r(&e.region)];
            *slot = match *slot {
                Fixed::Free => Fixed::Color(e.color),
                Fixed::Color(c) if c == e.color => Fixed::Color(c),
                _ => Fixed::Conflict,
            };
        }
        Ok(Indexed {
            chi: self.regions.iter().map(|x| x.chi).collect(),
            gleam2: self.regions.iter().map(|x| x.gleam2).collect(),
            fixed,
            edges: self
                .interior_edges
                .iter()
                .map(|e| (e.regions.each_ref().map(r), e.kind.chi()))
                .collect(),
            ivs: self
                .interior_vertices
                .iter()
                .map(|v| v.slots.as_array().map(|s| idx[s]))
                .collect(),
            bvs: self.boundary_vertices.iter().map(|v| v.regions.each_ref().map(r)).collect(),
            bes: self
                .boundary_edges
                .iter()
                .map(|e| (r(&e.region), e.color, e.kind.chi()))
                .collect(),
        })
    }
}
