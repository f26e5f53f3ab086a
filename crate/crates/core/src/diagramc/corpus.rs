use super::{from_pd, ArcEnd, Diagram, DiagramFile, FaceKey, Side, VertexSpec};

pub const UNKNOT_POSITIVE_KINK: [[u32; 4]; 1] = [[1, 1, 2, 2]];
pub const UNKNOT_NEGATIVE_KINK: [[u32; 4]; 1] = [[2, 1, 1, 2]];
/// Two circles overlapping, one above the other at both crossings.
pub const UNLINK2: [[u32; 4]; 2] = [[4, 1, 3, 2], [3, 1, 4, 2]];
pub const HOPF: [[u32; 4]; 2] = [[4, 1, 3, 2], [2, 3, 1, 4]];
pub const TREFOIL: [[u32; 4]; 3] = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]];
pub const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

/// A round circle of the given color.
pub fn unknot(color: u32) -> Diagram {
    let file = DiagramFile {
        arcs: vec!["k".into()],
        outer_face: Some(FaceKey { arc: "k".into(), side: Side::Right }),
        colors: [("k".to_string(), color)].into(),
        ..DiagramFile::default()
    };
    Diagram::new(file).expect("valid diagram")
}

/// Link diagrams used as the compiler oracle corpus, with their number of
/// components.
pub fn link_corpus() -> Vec<(&'static str, Diagram, u32)> {
    let pd = |c: &[[u32; 4]]| from_pd(c).expect("valid code");
    vec![
        ("unknot", unknot(1), 1),
        ("unknot-kink+", pd(&UNKNOT_POSITIVE_KINK), 1),
        ("unknot-kink-", pd(&UNKNOT_NEGATIVE_KINK), 1),
        ("unlink2", pd(&UNLINK2), 2),
        ("hopf", pd(&HOPF), 2),
        ("trefoil", pd(&TREFOIL), 1),
        ("figure-eight", pd(&FIGURE_EIGHT), 1),
    ]
}

fn end(arc: &str, which_end: u8) -> ArcEnd {
    ArcEnd { arc: arc.into(), which_end }
}

/// A planar theta graph with edges colored `a`, `b`, `c`.
pub fn theta_diagram(a: u32, b: u32, c: u32) -> Diagram {
    let file = DiagramFile {
        arcs: vec!["a".into(), "b".into(), "c".into()],
        vertices: vec![
            VertexSpec { id: "u".into(), ends: [end("a", 0), end("b", 0), end("c", 0)] },
            VertexSpec { id: "v".into(), ends: [end("c", 1), end("b", 1), end("a", 1)] },
        ],
        outer_face: Some(FaceKey { arc: "a".into(), side: Side::Left }),
        colors: [("a".to_string(), a), ("b".to_string(), b), ("c".to_string(), c)].into(),
        ..DiagramFile::default()
    };
    Diagram::new(file).expect("valid diagram")
}

/// A planar tetrahedron whose edges carry `[a, b, c, d, e, f]` as in
/// [`crate::graphvals::TetFrame`]: vertex 1 meets `a, b, c`, and `d` is
/// opposite `a`.
pub fn tet_diagram(colors: [u32; 6]) -> Diagram {
    // vertex 4 sits inside the triangle 1, 2, 3
    let [a, b, c, d, e, f] = colors;
    let arcs = [("12", a), ("13", b), ("14", c), ("34", d), ("24", e), ("23", f)];
    let v = |id: &str, ends: [ArcEnd; 3]| VertexSpec { id: id.into(), ends };
    let file = DiagramFile {
        arcs: arcs.iter().map(|(s, _)| s.to_string()).collect(),
        vertices: vec![
            v("1", [end("12", 0), end("14", 0), end("13", 0)]),
            v("2", [end("23", 0), end("24", 0), end("12", 1)]),
            v("3", [end("13", 1), end("34", 0), end("23", 1)]),
            v("4", [end("14", 1), end("24", 1), end("34", 1)]),
        ],
        outer_face: Some(FaceKey { arc: "12".into(), side: Side::Right }),
        colors: arcs.iter().map(|(s, col)| (s.to_string(), *col)).collect(),
        ..DiagramFile::default()
    };
    Diagram::new(file).expect("valid diagram")
}
