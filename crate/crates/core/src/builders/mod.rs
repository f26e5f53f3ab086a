//! Parametric shadows: the three atomic cones, the genus-`g` knot family of
//! the large region with `g` discs, and surfaces bounded by colored circles.
//!
//! ```
//! use shadowbracket::builders::fig14_knot_shadow;
//! use shadowbracket::exactq::Order;
//! use shadowbracket::shadowcore::bracket;
//!
//! let s = fig14_knot_shadow(3, 1).unwrap();
//! assert_eq!(bracket(&s, 17).unwrap().ord_i, Order::Finite(-2));
//! ```

use crate::graphvals::{ColorTriple, GraphError, TetFrame};
use crate::shadowcore::{
    BoundaryEdge, BoundaryVertex, EdgeKind, InteriorEdge, InteriorVertex, Region, Shadow, Slots,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("a surface needs at least one boundary circle")]
    NoBoundary,
    #[error("{colors} colors given for {circles} boundary circles")]
    ColorCount { circles: usize, colors: usize },
    #[error("χ = {chi} is impossible for a connected surface with {circles} boundary circles (need χ ≤ {max})")]
    EulerCharacteristic { chi: i64, circles: usize, max: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtomicKind {
    Circle(u32),
    Theta(ColorTriple),
    Tet(TetFrame),
}

fn disc(id: &str, color: Option<u32>) -> Region {
    Region {
        id: id.to_string(),
        chi: 1,
        gleam2: 0,
        color,
    }
}

fn boundary(id: &str, kind: EdgeKind, region: &str, color: u32) -> BoundaryEdge {
    BoundaryEdge {
        id: id.to_string(),
        kind,
        region: region.to_string(),
        color,
    }
}

fn ids3(a: &str, b: &str, c: &str) -> [String; 3] {
    [a.to_string(), b.to_string(), c.to_string()]
}

/// The cone over a colored circle, theta graph or tetrahedron, with zero
/// gleams.
pub fn atomic_cone(kind: AtomicKind) -> Result<Shadow, BuildError> {
    match kind {
        AtomicKind::Circle(a) => Ok(Shadow {
            regions: vec![disc("D", Some(a))],
            boundary_edges: vec![boundary("K", EdgeKind::Circle, "D", a)],
            ..Default::default()
        }),
        AtomicKind::Theta(t) => {
            t.check()?;
            let names = ["Da", "Db", "Dc"];
            let colors = [t.a, t.b, t.c];
            Ok(Shadow {
                regions: names.iter().zip(colors).map(|(n, c)| disc(n, Some(c))).collect(),
                interior_edges: vec![InteriorEdge {
                    id: "e".into(),
                    kind: EdgeKind::Arc,
                    regions: ids3("Da", "Db", "Dc"),
                }],
                boundary_vertices: ["v1", "v2"]
                    .iter()
                    .map(|v| BoundaryVertex {
                        id: v.to_string(),
                        regions: ids3("Da", "Db", "Dc"),
                    })
                    .collect(),
                boundary_edges: names
                    .iter()
                    .zip(colors)
                    .map(|(n, c)| boundary(&format!("k{}", &n[1..]), EdgeKind::Arc, n, c))
                    .collect(),
                ..Default::default()
            })
        }
        AtomicKind::Tet(fr) => {
            fr.check()?;
            let names = ["Da", "Db", "Dc", "Dd", "De", "Df"];
            let colors = fr.colors();
            let germs: Vec<[String; 3]> = Slots::GERMS
                .iter()
                .map(|g| g.map(|i| names[i].to_string()))
                .collect();
            Ok(Shadow {
                regions: names.iter().zip(colors).map(|(n, c)| disc(n, Some(c))).collect(),
                interior_edges: germs
                    .iter()
                    .enumerate()
                    .map(|(i, t)| InteriorEdge {
                        id: format!("e{}", i + 1),
                        kind: EdgeKind::Arc,
                        regions: t.clone(),
                    })
                    .collect(),
                interior_vertices: vec![InteriorVertex {
                    id: "v".into(),
                    slots: Slots {
                        a: "Da".into(),
                        b: "Db".into(),
                        c: "Dc".into(),
                        d: "Dd".into(),
                        e: "De".into(),
                        f: "Df".into(),
                    },
                    edges: Some(["e1", "e2", "e3", "e4"].map(String::from)),
                }],
                boundary_vertices: germs
                    .iter()
                    .enumerate()
                    .map(|(i, t)| BoundaryVertex {
                        id: format!("w{}", i + 1),
                        regions: t.clone(),
                    })
                    .collect(),
                boundary_edges: names
                    .iter()
                    .zip(colors)
                    .map(|(n, c)| boundary(&format!("k{}", &n[1..]), EdgeKind::Arc, n, c))
                    .collect(),
            })
        }
    }
}

/// The knot of genus-`g` type: a large region `R` with `χ = 1 − 2g` and gleam
/// `g`, and `g` discs of gleam −1 glued along circles running twice along
/// `R`.
pub fn fig14_knot_shadow(g: u32, boundary_color: u32) -> Result<Shadow, BuildError> {
    if g == 0 {
        return Err(BuildError::ZeroGenus);
    }
    let g = g as i64;
    let mut regions = vec![Region {
        id: "R".into(),
        chi: 1 - 2 * g,
        gleam2: 2 * g,
        color: Some(boundary_color),
    }];
    let mut interior_edges = Vec::new();
    for i in 1..=g {
        regions.push(Region {
            id: format!("D{i}"),
            chi: 1,
            gleam2: -2,
            color: None,
        });
        interior_edges.push(InteriorEdge {
            id: format!("c{i}"),
            kind: EdgeKind::Circle,
            regions: [format!("D{i}"), "R".into(), "R".into()],
        });
    }
    Ok(Shadow {
        regions,
        interior_edges,
        boundary_edges: vec![boundary("K", EdgeKind::Circle, "R", boundary_color)],
        ..Default::default()
    })
}

/// A single region of Euler characteristic `chi`, zero gleam, bounded by
/// circles of the given colors.
///
/// When the colors disagree the region carries no color and the shadow has
/// no admissible coloring.
pub fn surface_link_shadow(chi: i64, colors: &[u32]) -> Result<Shadow, BuildError> {
    let circles = colors.len();
    if circles == 0 {
        return Err(BuildError::NoBoundary);
    }
    let max = 2 - circles as i64;
    if chi > max {
        return Err(BuildError::EulerCharacteristic { chi, circles, max });
    }
    let agree = colors.iter().all(|&c| c == colors[0]);
    Ok(Shadow {
        regions: vec![Region {
            id: "S".into(),
            chi,
            gleam2: 0,
            color: agree.then_some(colors[0]),
        }],
        boundary_edges: colors
            .iter()
            .enumerate()
            .map(|(i, &c)| boundary(&format!("K{}", i + 1), EdgeKind::Circle, "S", c))
            .collect(),
        ..Default::default()
    })
}

/// Same as [`surface_link_shadow`] with an explicit circle count, checked
/// against the color list.
pub fn surface_with_circles(chi: i64, boundary_circles: usize, colors: &[u32]) -> Result<Shadow, BuildError> {
    if colors.len() != boundary_circles {
        return Err(BuildError::ColorCount {
            circles: boundary_circles,
            colors: colors.len(),
        });
    }
    surface_link_shadow(chi, colors)
}

/// Named builder outputs used by the test corpus and the CLI.
pub fn corpus() -> Vec<(String, Shadow)> {
    let mut out = Vec::new();
    for a in [0, 1, 2, 3] {
        out.push((format!("circle-{a}"), atomic_cone(AtomicKind::Circle(a)).unwrap()));
    }
    for t in [(1, 1, 0), (1, 1, 2), (2, 2, 2), (3, 2, 1), (3, 3, 2)] {
        let t = ColorTriple::new(t.0, t.1, t.2);
        out.push((format!("theta-{}-{}-{}", t.a, t.b, t.c), atomic_cone(AtomicKind::Theta(t)).unwrap()));
    }
    for fr in [[2; 6], [1, 1, 2, 1, 1, 2], [2, 2, 2, 1, 1, 1], [3, 3, 2, 3, 1, 2]] {
        let name = format!("tet-{}", fr.map(|c| c.to_string()).join("-"));
        out.push((name, atomic_cone(AtomicKind::Tet(TetFrame::new(fr))).unwrap()));
    }
    for g in 1..=4 {
        for c in [1, 2, 3] {
            out.push((format!("fig14-g{g}-c{c}"), fig14_knot_shadow(g, c).unwrap()));
        }
    }
    for chi in [-3, -2, -1, 0, 1] {
        for n in [1, 2, 3] {
            out.push((format!("surface-chi{chi}-n{n}"), surface_link_shadow(chi, &[n]).unwrap()));
        }
    }
    out.push(("surface-two-circles-1-1".into(), surface_link_shadow(-2, &[1, 1]).unwrap()));
    out.push(("surface-two-circles-1-3".into(), surface_link_shadow(-2, &[1, 3]).unwrap()));
    out
}
