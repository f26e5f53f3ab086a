//! Planar diagrams of framed links and trivalent graphs, and their shadows.
//!
//! A diagram lists arcs, 4-valent crossings and 3-valent graph vertices, each
//! node naming the arc ends at its slots in counterclockwise order. Faces are
//! the orbits of the induced rotation system. [`compile`] deletes the outer
//! face and the holes, attaches one band above every edge of the underlying
//! graph and returns the resulting shadow.
//!
//! ```
//! use shadowbracket::diagramc::{compile, parse_diagram};
//! use shadowbracket::shadowcore::bracket;
//!
//! // a free loop; its left side is the inside
//! let d = parse_diagram(r#"{"arcs": ["k"], "outer_face": {"arc": "k", "side": "right"}}"#).unwrap();
//! assert_eq!(d.faces().len(), 2);
//! let out = compile(&d).unwrap();
//! assert_eq!(bracket(&out.shadow, 17).unwrap().value.render(), "-q - q^-1");
//! ```

mod compile;
pub mod corpus;
mod pd;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use compile::{compile, CompileError, CompileOutput, CompileReport, CornerGleam, RegionMerge};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcEnd {
    pub arc: String,
    pub which_end: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingSpec {
    pub id: String,
    pub ends: [ArcEnd; 4],
    /// 0: slots 0 and 2 pass over; 1: slots 1 and 3.
    pub over: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSpec {
    pub id: String,
    pub ends: [ArcEnd; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Names a face by one arc side on it. `Left` is the left of the arc run
/// from end 0 to end 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceKey {
    pub arc: String,
    pub side: Side,
}

impl fmt::Display for FaceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        write!(f, "{}:{}", self.arc, s)
    }
}

/// The on-disk diagram format.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub arcs: Vec<String>,
    #[serde(default)]
    pub crossings: Vec<CrossingSpec>,
    #[serde(default)]
    pub vertices: Vec<VertexSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<FaceKey>,
    #[serde(default)]
    pub holes: Vec<FaceKey>,
    /// Colors of graph edges, keyed by any arc on the edge. Default 1.
    #[serde(default)]
    pub colors: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiagramIssue {
    Json { line: usize, column: usize, message: String },
    DuplicateId { id: String },
    UnknownArc { node: String, arc: String },
    BadEnd { node: String, which_end: u8 },
    BadOver { crossing: String, over: u8 },
    RepeatedEnd { arc: String, which_end: u8 },
    DanglingEnd { arc: String, which_end: u8 },
    Disconnected,
    Euler { vertices: usize, edges: usize, faces: usize },
    UnknownFace { key: FaceKey },
    FaceRepeated { key: FaceKey },
    UnknownColorKey { arc: String },
    ConflictingColors { arc: String, other: String },
    ZeroColor { arc: String },
}

impl fmt::Display for DiagramIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DiagramIssue::*;
        match self {
            Json { message, .. } => write!(f, "{message}"),
            DuplicateId { id } => write!(f, "duplicate id `{id}`"),
            UnknownArc { node, arc } => write!(f, "`{node}` references unknown arc `{arc}`"),
            BadEnd { node, which_end } => write!(f, "`{node}` uses arc end {which_end}; ends are 0 and 1"),
            BadOver { crossing, over } => write!(f, "crossing `{crossing}` has over = {over}; expected 0 or 1"),
            RepeatedEnd { arc, which_end } => write!(f, "end {which_end} of arc `{arc}` is used twice"),
            DanglingEnd { arc, which_end } => {
                write!(f, "end {which_end} of arc `{arc}` is not attached while its other end is")
            }
            Disconnected => write!(f, "diagram is not connected"),
            Euler { vertices, edges, faces } => write!(
                f,
                "rotation system is not planar: V - E + F = {vertices} - {edges} + {faces} != 2"
            ),
            UnknownFace { key } => write!(f, "face key `{key}` names no arc"),
            FaceRepeated { key } => write!(f, "face of `{key}` is designated twice"),
            UnknownColorKey { arc } => write!(f, "color given for unknown arc `{arc}`"),
            ConflictingColors { arc, other } => {
                write!(f, "arcs `{arc}` and `{other}` lie on one graph edge but carry different colors")
            }
            ZeroColor { arc } => write!(f, "arc `{arc}` has color 0"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}", render_issues(.0))]
pub struct DiagramError(pub Vec<DiagramIssue>);

fn render_issues(v: &[DiagramIssue]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("\n")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum NodeKind {
    Crossing { over: u8 },
    Vertex,
}

#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub id: String,
    pub kind: NodeKind,
    /// `(arc, end)` per slot.
    pub slots: Vec<(usize, u8)>,
}

impl Node {
    pub fn deg(&self) -> usize {
        self.slots.len()
    }

    pub fn is_over(&self, k: usize) -> bool {
        match self.kind {
            NodeKind::Crossing { over } => k % 2 == over as usize,
            NodeKind::Vertex => false,
        }
    }
}

/// Darts are `2·arc` (end 0 to end 1) and `2·arc + 1` (reverse); the face
/// of a dart is the one on its left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    face_of_dart: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Each face as its cyclic dart sequence, starting at its smallest dart.
    pub fn darts(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn face_of_dart(&self, dart: usize) -> usize {
        self.face_of_dart[dart]
    }
}

/// A maximal chain of arcs through crossings: an edge of the underlying
/// graph, or a closed component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub arcs: Vec<usize>,
    pub closed: bool,
    pub color: u32,
}

/// A structurally valid diagram.
#[derive(Clone, Debug)]
pub struct Diagram {
    file: DiagramFile,
    pub(crate) nodes: Vec<Node>,
    /// Node and slot holding each end of each arc.
    pub(crate) ends: Vec<[Option<(usize, usize)>; 2]>,
    faces: FaceSet,
    gedges: Vec<GraphEdge>,
    pub(crate) gedge_of_arc: Vec<usize>,
}

pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let file: DiagramFile = serde_json::from_str(text).map_err(|e| {
        DiagramError(vec![DiagramIssue::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }])
    })?;
    Diagram::new(file)
}

impl Diagram {
    pub fn new(file: DiagramFile) -> Result<Diagram, DiagramError> {
        let mut issues = Vec::new();
        let mut ids: HashMap<&str, ()> = HashMap::new();
        for id in file
            .arcs
            .iter()
            .chain(file.crossings.iter().map(|c| &c.id))
            .chain(file.vertices.iter().map(|v| &v.id))
        {
            if ids.insert(id, ()).is_some() {
                issues.push(DiagramIssue::DuplicateId { id: id.clone() });
            }
        }
        let arc_ix: HashMap<&str, usize> = file.arcs.iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
        let mut nodes = Vec::new();
        let mut ends: Vec<[Option<(usize, usize)>; 2]> = vec![[None, None]; file.arcs.len()];
        let specs = file
            .crossings
            .iter()
            .map(|c| (&c.id, NodeKind::Crossing { over: c.over }, &c.ends[..]))
            .chain(file.vertices.iter().map(|v| (&v.id, NodeKind::Vertex, &v.ends[..])));
        for (id, kind, slot_ends) in specs {
            if let NodeKind::Crossing { over } = kind {
                if over > 1 {
                    issues.push(DiagramIssue::BadOver { crossing: id.clone(), over });
                }
            }
            let n = nodes.len();
            let mut slots = Vec::new();
            for (k, e) in slot_ends.iter().enumerate() {
                let Some(&a) = arc_ix.get(e.arc.as_str()) else {
                    issues.push(DiagramIssue::UnknownArc { node: id.clone(), arc: e.arc.clone() });
                    continue;
                };
                if e.which_end > 1 {
                    issues.push(DiagramIssue::BadEnd { node: id.clone(), which_end: e.which_end });
                    continue;
                }
                let slot = &mut ends[a][e.which_end as usize];
                if slot.is_some() {
                    issues.push(DiagramIssue::RepeatedEnd { arc: e.arc.clone(), which_end: e.which_end });
                }
                *slot = Some((n, k));
                slots.push((a, e.which_end));
            }
            nodes.push(Node { id: id.clone(), kind, slots });
        }
        for (a, e) in ends.iter().enumerate() {
            match e {
                [Some(_), None] => issues.push(DiagramIssue::DanglingEnd { arc: file.arcs[a].clone(), which_end: 1 }),
                [None, Some(_)] => issues.push(DiagramIssue::DanglingEnd { arc: file.arcs[a].clone(), which_end: 0 }),
                _ => {}
            }
        }
        if !issues.is_empty() {
            return Err(DiagramError(issues));
        }

        let mut d = Diagram {
            file,
            nodes,
            ends,
            faces: FaceSet { face_of_dart: Vec::new(), faces: Vec::new() },
            gedges: Vec::new(),
            gedge_of_arc: Vec::new(),
        };
        d.faces = d.trace_faces();
        let n_arcs = d.file.arcs.len();
        if n_arcs > 0 {
            let free_loops = d.ends.iter().filter(|e| e[0].is_none()).count();
            let v = d.nodes.len() + free_loops;
            let (e, f) = (n_arcs, d.faces.len());
            if !d.is_connected() {
                issues.push(DiagramIssue::Disconnected);
            } else if v + f != e + 2 {
                issues.push(DiagramIssue::Euler { vertices: v, edges: e, faces: f });
            }
        }
        let mut designated: BTreeMap<usize, ()> = BTreeMap::new();
        for key in d.file.outer_face.iter().chain(d.file.holes.iter()) {
            match d.face_of_key(key) {
                None => issues.push(DiagramIssue::UnknownFace { key: key.clone() }),
                Some(f) => {
                    if designated.insert(f, ()).is_some() {
                        issues.push(DiagramIssue::FaceRepeated { key: key.clone() });
                    }
                }
            }
        }
        d.trace_graph_edges(&mut issues);
        if issues.is_empty() {
            Ok(d)
        } else {
            Err(DiagramError(issues))
        }
    }

    pub fn file(&self) -> &DiagramFile {
        &self.file
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.file).expect("diagram serializes")
    }

    pub fn arc_id(&self, a: usize) -> &str {
        &self.file.arcs[a]
    }

    pub fn n_crossings(&self) -> usize {
        self.file.crossings.len()
    }

    pub fn has_vertices(&self) -> bool {
        !self.file.vertices.is_empty()
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn graph_edges(&self) -> &[GraphEdge] {
        &self.gedges
    }

    /// Closed components of the underlying graph.
    pub fn components(&self) -> usize {
        self.gedges.iter().filter(|g| g.closed).count()
    }

    /// The face on the given side of an arc.
    pub fn face_of_key(&self, key: &FaceKey) -> Option<usize> {
        let a = self.file.arcs.iter().position(|x| *x == key.arc)?;
        let dart = 2 * a + (key.side == Side::Right) as usize;
        Some(self.faces.face_of_dart(dart))
    }

    /// The canonical key of a face: the arc side of its smallest dart.
    pub fn face_key(&self, f: usize) -> FaceKey {
        let dart = self.faces.darts(f)[0];
        FaceKey {
            arc: self.file.arcs[dart / 2].clone(),
            side: if dart.is_multiple_of(2) { Side::Left } else { Side::Right },
        }
    }

    pub fn set_outer_face(&mut self, key: FaceKey) -> Result<(), DiagramError> {
        let mut file = self.file.clone();
        file.outer_face = Some(key);
        *self = Diagram::new(file)?;
        Ok(())
    }

    /// Outgoing dart at slot `k` of node `n`.
    pub(crate) fn out_dart(&self, n: usize, k: usize) -> usize {
        let (a, e) = self.nodes[n].slots[k];
        2 * a + e as usize
    }

    /// Face in the corner between slots `k` and `k + 1`.
    pub(crate) fn corner(&self, n: usize, k: usize) -> usize {
        self.faces.face_of_dart(self.out_dart(n, k % self.nodes[n].deg()))
    }

    fn next_dart(&self, dart: usize) -> usize {
        let (a, dir) = (dart / 2, dart % 2);
        // the head of a forward dart is end 1
        match self.ends[a][1 - dir] {
            None => dart,
            Some((n, k)) => {
                let deg = self.nodes[n].deg();
                self.out_dart(n, (k + deg - 1) % deg)
            }
        }
    }

    fn trace_faces(&self) -> FaceSet {
        let nd = 2 * self.file.arcs.len();
        let mut face_of_dart = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                face_of_dart[d] = f;
                cycle.push(d);
                d = self.next_dart(d);
                if d == start {
                    break;
                }
                assert!(face_of_dart[d] == usize::MAX, "dart successor is a permutation");
            }
            faces.push(cycle);
        }
        FaceSet { face_of_dart, faces }
    }

    fn is_connected(&self) -> bool {
        let n = self.file.arcs.len();
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(n);
        for node in &self.nodes {
            for w in node.slots.windows(2) {
                uf.union(w[0].0, w[1].0);
            }
        }
        (1..n).all(|a| uf.equiv(0, a))
    }

    fn trace_graph_edges(&mut self, issues: &mut Vec<DiagramIssue>) {
        let n = self.file.arcs.len();
        let mut of_arc = vec![usize::MAX; n];
        let mut gedges = Vec::new();
        for start in 0..n {
            if of_arc[start] != usize::MAX {
                continue;
            }
            let g = gedges.len();
            of_arc[start] = g;
            let mut arcs = vec![start];
            let mut closed = false;
            // walk forward from end 1, then backward from end 0
            let mut back = Vec::new();
            for (dir, out) in [(1usize, &mut arcs), (0usize, &mut back)] {
                if closed {
                    break;
                }
                let (mut a, mut e) = (start, dir);
                loop {
                    let Some((nd, k)) = self.ends[a][e] else {
                        closed = true;
                        break;
                    };
                    let node = &self.nodes[nd];
                    if node.kind == NodeKind::Vertex {
                        break;
                    }
                    let (b, be) = node.slots[(k + 2) % 4];
                    if b == start {
                        closed = true;
                        break;
                    }
                    of_arc[b] = g;
                    out.push(b);
                    (a, e) = (b, 1 - be as usize);
                }
            }
            back.reverse();
            back.extend(arcs);
            gedges.push(GraphEdge { arcs: back, closed, color: 1 });
        }
        let arc_ix: HashMap<&str, usize> =
            self.file.arcs.iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
        let mut given: Vec<Option<(u32, usize)>> = vec![None; gedges.len()];
        for (key, &c) in &self.file.colors {
            let Some(&a) = arc_ix.get(key.as_str()) else {
                issues.push(DiagramIssue::UnknownColorKey { arc: key.clone() });
                continue;
            };
            if c == 0 {
                issues.push(DiagramIssue::ZeroColor { arc: key.clone() });
            }
            let g = of_arc[a];
            match given[g] {
                Some((c0, a0)) if c0 != c => issues.push(DiagramIssue::ConflictingColors {
                    arc: self.file.arcs[a0].clone(),
                    other: key.clone(),
                }),
                _ => given[g] = Some((c, a)),
            }
        }
        for (g, e) in gedges.iter_mut().enumerate() {
            if let Some((c, _)) = given[g] {
                e.color = c;
            }
        }
        self.gedges = gedges;
        self.gedge_of_arc = of_arc;
    }
}

pub use pd::{from_pd, PdError};

#[cfg(test)]
mod tests {
    use super::corpus::TREFOIL;
    use super::*;

    #[test]
    fn free_loop_has_two_faces() {
        let d = parse_diagram(r#"{"arcs": ["k"]}"#).unwrap();
        assert_eq!(d.faces().len(), 2);
        assert_eq!(d.components(), 1);
    }

    #[test]
    fn empty_diagram() {
        let d = parse_diagram(r#"{"arcs": []}"#).unwrap();
        assert_eq!(d.faces().len(), 0);
        assert_eq!(d.components(), 0);
    }

    #[test]
    fn trefoil_faces() {
        let d = from_pd(&TREFOIL).unwrap();
        assert_eq!(d.faces().len(), 5);
        assert_eq!(d.components(), 1);
        assert_eq!(d.graph_edges()[0].arcs.len(), 6);
    }

    #[test]
    fn json_errors_have_positions() {
        let err = parse_diagram("{\"arcs\": [\n  1]}").unwrap_err();
        match &err.0[0] {
            DiagramIssue::Json { line, .. } => assert_eq!(*line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dangling_and_repeated_ends() {
        let text = r#"{"arcs": ["a", "b"], "crossings": [{"id": "X", "over": 0, "ends": [
            {"arc": "a", "which_end": 0}, {"arc": "a", "which_end": 0},
            {"arc": "b", "which_end": 0}, {"arc": "b", "which_end": 1}]}]}"#;
        let err = parse_diagram(text).unwrap_err();
        assert!(err.0.contains(&DiagramIssue::RepeatedEnd { arc: "a".into(), which_end: 0 }));
        assert!(err.0.contains(&DiagramIssue::DanglingEnd { arc: "a".into(), which_end: 1 }));
    }

    #[test]
    fn nonplanar_rotation_is_rejected() {
        // trefoil with one crossing's rotation reversed
        let mut pd = TREFOIL;
        pd[0] = [1, 4, 2, 5];
        let err = from_pd(&pd).unwrap_err();
        assert!(matches!(err, PdError::Diagram(DiagramError(ref v)) if matches!(v[0], DiagramIssue::Euler { .. })));
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = parse_diagram(r#"{"arcs": ["a", "b"]}"#).unwrap_err();
        assert_eq!(err.0, vec![DiagramIssue::Disconnected]);
    }

    #[test]
    fn colors_follow_graph_edges() {
        let mut f = from_pd(&TREFOIL).unwrap().file().clone();
        f.colors.insert("3".into(), 2);
        let d = Diagram::new(f.clone()).unwrap();
        assert_eq!(d.graph_edges()[0].color, 2);
        f.colors.insert("5".into(), 3);
        assert!(matches!(
            Diagram::new(f).unwrap_err().0[0],
            DiagramIssue::ConflictingColors { .. }
        ));
    }

    #[test]
    fn face_keys_round_trip() {
        let d = from_pd(&TREFOIL).unwrap();
        for f in 0..d.faces().len() {
            assert_eq!(d.face_of_key(&d.face_key(f)), Some(f));
        }
    }
}
