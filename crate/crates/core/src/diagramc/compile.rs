use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::{Diagram, NodeKind};
use crate::shadowcore::{
    validate_shadow, BoundaryEdge, BoundaryVertex, EdgeKind, InteriorEdge, InteriorVertex, Region, Shadow, Slots,
    ValidationReport,
};

/// Twice the gleam put in the corner swept by rotating an over strand
/// counterclockwise; the other two corners get the opposite sign.
const A_CORNER_GLEAM2: i64 = 1;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CompileError {
    #[error("no outer face designated")]
    NoOuterFace,
    #[error("both sides of arc `{arc}` are deleted faces, leaving a band with nothing attached")]
    OneSheetArc { arc: String },
    #[error(
        "crossing `{crossing}` touches deleted faces in {deleted} corners; \
         isotope the diagram (e.g. a Reidemeister I or II move away from the outer face) so it touches at most one"
    )]
    DegenerateCrossing { crossing: String, deleted: usize },
    #[error("graph vertex `{vertex}` touches deleted faces in {deleted} corners; isotope the diagram so it touches at most one")]
    DegenerateVertex { vertex: String, deleted: usize },
    #[error("compiled shadow is inconsistent:\n{0}")]
    Inconsistent(ValidationReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionMerge {
    pub region: String,
    pub sheets: Vec<String>,
    /// Arcs of the diagram that became interior to the region.
    pub absorbed_arcs: Vec<String>,
    pub chi: i64,
    pub gleam2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerGleam {
    pub crossing: String,
    /// Corner between slots `corner` and `corner + 1`.
    pub corner: usize,
    pub face: String,
    pub gleam2: i64,
    /// False if the face was deleted.
    pub kept: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CompileReport {
    /// Sheet name and the face key or arcs it comes from.
    pub sheets: Vec<(String, String)>,
    pub deleted_faces: Vec<String>,
    pub merges: Vec<RegionMerge>,
    pub gleam_ledger: Vec<CornerGleam>,
    /// Crossings next to a deleted face; their edges pass straight through.
    pub fused_crossings: Vec<String>,
    pub fused_vertices: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CompileOutput {
    pub shadow: Shadow,
    pub report: CompileReport,
}

/// A 3-sheet germ of the singular set, with two ports.
struct Piece {
    sheets: [usize; 3],
}

struct Build<'a> {
    d: &'a Diagram,
    face_sheet: Vec<Option<usize>>,
    band_sheet: Vec<usize>,
    pieces: Vec<Piece>,
    arc_piece: Vec<Option<usize>>,
    partner: Vec<Option<usize>>,
}

impl Build<'_> {
    fn band_at(&self, n: usize, k: usize) -> usize {
        self.band_sheet[self.d.gedge_of_arc[self.d.nodes[n].slots[k].0]]
    }

    fn port_at(&self, n: usize, k: usize) -> usize {
        let (a, e) = self.d.nodes[n].slots[k];
        2 * self.arc_piece[a].expect("3-sheet arc") + e as usize
    }

    fn add_piece(&mut self, sheets: [usize; 3]) -> usize {
        self.pieces.push(Piece { sheets });
        self.partner.extend([None, None]);
        self.pieces.len() - 1
    }

    fn link(&mut self, p: usize, q: usize) {
        self.partner[p] = Some(q);
        self.partner[q] = Some(p);
    }
}

/// Compiles a diagram into a shadow of the link or graph it represents, in
/// `S³` or, with `g` holes, in `#_g(S² × S¹)`.
pub fn compile(d: &Diagram) -> Result<CompileOutput, CompileError> {
    let file = d.file();
    let nf = d.faces().len();
    let mut deleted = vec![false; nf];
    if !file.arcs.is_empty() {
        let outer = file.outer_face.as_ref().ok_or(CompileError::NoOuterFace)?;
        for key in std::iter::once(outer).chain(&file.holes) {
            deleted[d.face_of_key(key).expect("validated face key")] = true;
        }
    }
    let mut report = CompileReport::default();
    let face_name = |f: usize| format!("F{}", f + 1);

    // sheets: kept faces, then one band per graph edge
    let mut sheet_names = Vec::new();
    let mut sheet_chi = Vec::new();
    let mut face_sheet = vec![None; nf];
    for f in 0..nf {
        if deleted[f] {
            report.deleted_faces.push(face_name(f));
            continue;
        }
        face_sheet[f] = Some(sheet_names.len());
        sheet_names.push(face_name(f));
        sheet_chi.push(1);
        report.sheets.push((face_name(f), d.face_key(f).to_string()));
    }
    let mut band_sheet = Vec::new();
    for (g, ge) in d.graph_edges().iter().enumerate() {
        band_sheet.push(sheet_names.len());
        let name = format!("B{}", g + 1);
        sheet_names.push(name.clone());
        sheet_chi.push(if ge.closed { 0 } else { 1 });
        let arcs: Vec<&str> = ge.arcs.iter().map(|&a| d.arc_id(a)).collect();
        report.sheets.push((name, arcs.join(" ")));
    }
    let ns = sheet_names.len();
    let mut uf = UnionFind::<usize>::new(ns);

    let mut b = Build {
        d,
        face_sheet,
        band_sheet,
        pieces: Vec::new(),
        arc_piece: vec![None; file.arcs.len()],
        partner: Vec::new(),
    };

    // arcs: three sheets give an edge germ, two sheets merge
    let mut absorbed: Vec<(usize, usize, i64)> = Vec::new();
    for a in 0..file.arcs.len() {
        let band = b.band_sheet[d.gedge_of_arc[a]];
        let left = b.face_sheet[d.faces().face_of_dart(2 * a)];
        let right = b.face_sheet[d.faces().face_of_dart(2 * a + 1)];
        let free_loop = d.ends[a][0].is_none();
        match (left, right) {
            (Some(l), Some(r)) => {
                let p = b.add_piece([band, l, r]);
                b.arc_piece[a] = Some(p);
                if free_loop {
                    b.link(2 * p, 2 * p + 1);
                }
            }
            (Some(s), None) | (None, Some(s)) => {
                uf.union(band, s);
                absorbed.push((band, a, if free_loop { 0 } else { -1 }));
            }
            (None, None) => return Err(CompileError::OneSheetArc { arc: file.arcs[a].clone() }),
        }
    }

    // nodes
    let mut gleam2 = vec![0i64; ns];
    let mut ivs: Vec<(String, [usize; 6], [usize; 4])> = Vec::new();
    let mut bvs: Vec<(String, [usize; 3])> = Vec::new();
    for (n, node) in d.nodes.iter().enumerate() {
        let deg = node.deg();
        let corners: Vec<usize> = (0..deg).map(|k| d.corner(n, k)).collect();
        let dead: Vec<usize> = (0..deg).filter(|&k| deleted[corners[k]]).collect();
        match node.kind {
            NodeKind::Crossing { over } => {
                for (k, &f) in corners.iter().enumerate() {
                    let g2 = if node.is_over(k) { A_CORNER_GLEAM2 } else { -A_CORNER_GLEAM2 };
                    report.gleam_ledger.push(CornerGleam {
                        crossing: node.id.clone(),
                        corner: k,
                        face: face_name(f),
                        gleam2: g2,
                        kept: !deleted[f],
                    });
                    if let Some(s) = b.face_sheet[f] {
                        gleam2[s] += g2;
                    }
                }
                let u = if over == 0 { 1 } else { 0 };
                match dead.as_slice() {
                    [] => {
                        let f = |j: usize| b.face_sheet[corners[(u + j) % 4]].unwrap();
                        let slots = [b.band_at(n, u), f(3), f(0), b.band_at(n, u + 1), f(1), f(2)];
                        let germs = [u, u + 2, u + 3, u + 1].map(|k| b.port_at(n, k % 4));
                        ivs.push((format!("v:{}", node.id), slots, germs));
                    }
                    [j] => {
                        let (p, q) = (b.port_at(n, (j + 2) % 4), b.port_at(n, (j + 3) % 4));
                        b.link(p, q);
                        report.fused_crossings.push(node.id.clone());
                    }
                    _ => {
                        return Err(CompileError::DegenerateCrossing {
                            crossing: node.id.clone(),
                            deleted: dead.len(),
                        })
                    }
                }
            }
            NodeKind::Vertex => {
                let bands = [0, 1, 2].map(|k| b.band_at(n, k));
                let vertical = b.add_piece(bands);
                let bottom = 2 * vertical;
                match dead.as_slice() {
                    [] => {
                        let f = |k: usize| b.face_sheet[corners[k]].unwrap();
                        let slots = [bands[0], bands[1], bands[2], f(1), f(2), f(0)];
                        let germs = [bottom, b.port_at(n, 0), b.port_at(n, 1), b.port_at(n, 2)];
                        ivs.push((format!("v:{}", node.id), slots, germs));
                    }
                    [j] => {
                        let p = b.port_at(n, (j + 2) % 3);
                        b.link(p, bottom);
                        report.fused_vertices.push(node.id.clone());
                    }
                    _ => {
                        return Err(CompileError::DegenerateVertex {
                            vertex: node.id.clone(),
                            deleted: dead.len(),
                        })
                    }
                }
                bvs.push((format!("w:{}", node.id), bands));
            }
        }
    }

    // regions
    let mut region_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut region_sheets: Vec<Vec<usize>> = Vec::new();
    for s in 0..ns {
        let r = *region_of_root.entry(uf.find(s)).or_insert_with(|| {
            region_sheets.push(Vec::new());
            region_sheets.len() - 1
        });
        region_sheets[r].push(s);
    }
    let region_of = |s: usize| region_of_root[&uf.find(s)];
    let region_names: Vec<String> = region_sheets
        .iter()
        .map(|ss| ss.iter().map(|&s| sheet_names[s].as_str()).collect::<Vec<_>>().join("+"))
        .collect();
    let mut regions: Vec<Region> = region_sheets
        .iter()
        .enumerate()
        .map(|(r, ss)| Region {
            id: region_names[r].clone(),
            chi: ss.iter().map(|&s| sheet_chi[s]).sum(),
            gleam2: ss.iter().map(|&s| gleam2[s]).sum(),
            color: None,
        })
        .collect();
    let mut absorbed_by_region: Vec<Vec<String>> = vec![Vec::new(); regions.len()];
    for &(s, a, chi) in &absorbed {
        let r = region_of(s);
        regions[r].chi += chi;
        absorbed_by_region[r].push(file.arcs[a].clone());
    }
    let mut band_colors: Vec<Vec<u32>> = vec![Vec::new(); regions.len()];
    for (g, ge) in d.graph_edges().iter().enumerate() {
        band_colors[region_of(b.band_sheet[g])].push(ge.color);
    }
    for (r, cs) in band_colors.iter().enumerate() {
        if let Some(&c) = cs.first() {
            if cs.iter().all(|&x| x == c) {
                regions[r].color = Some(c);
            }
        }
    }
    for (r, ss) in region_sheets.iter().enumerate() {
        if ss.len() > 1 {
            report.merges.push(RegionMerge {
                region: regions[r].id.clone(),
                sheets: ss.iter().map(|&s| sheet_names[s].clone()).collect(),
                absorbed_arcs: absorbed_by_region[r].clone(),
                chi: regions[r].chi,
                gleam2: regions[r].gleam2,
            });
        }
    }
    let name = |s: usize| region_names[region_of(s)].clone();

    // interior edges: chains of pieces joined at fused nodes
    let np = b.pieces.len();
    let mut chain_uf = UnionFind::<usize>::new(np);
    for (port, q) in b.partner.iter().enumerate() {
        if let Some(q) = q {
            chain_uf.union(port / 2, q / 2);
        }
    }
    let mut chain_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut chains: Vec<(usize, usize)> = Vec::new(); // (first piece, terminal ports)
    for p in 0..np {
        let c = *chain_of_root.entry(chain_uf.find(p)).or_insert_with(|| {
            chains.push((p, 0));
            chains.len() - 1
        });
        chains[c].1 += (0..2).filter(|&i| b.partner[2 * p + i].is_none()).count();
    }
    let edge_id = |c: usize| format!("E{}", c + 1);
    let interior_edges: Vec<InteriorEdge> = chains
        .iter()
        .enumerate()
        .map(|(c, &(p, terminals))| InteriorEdge {
            id: edge_id(c),
            kind: if terminals == 0 { EdgeKind::Circle } else { EdgeKind::Arc },
            regions: b.pieces[p].sheets.map(name),
        })
        .collect();
    let chain_of_port = |port: usize| chain_of_root[&chain_uf.find(port / 2)];

    let interior_vertices = ivs
        .iter()
        .map(|(id, s, germs)| {
            let s = s.map(name);
            InteriorVertex {
                id: id.clone(),
                slots: Slots {
                    a: s[0].clone(),
                    b: s[1].clone(),
                    c: s[2].clone(),
                    d: s[3].clone(),
                    e: s[4].clone(),
                    f: s[5].clone(),
                },
                edges: Some(germs.map(|p| edge_id(chain_of_port(p)))),
            }
        })
        .collect();
    let boundary_vertices = bvs
        .iter()
        .map(|(id, t)| BoundaryVertex { id: id.clone(), regions: t.map(name) })
        .collect();
    let boundary_edges = d
        .graph_edges()
        .iter()
        .enumerate()
        .map(|(g, ge)| BoundaryEdge {
            id: format!("K{}", g + 1),
            kind: if ge.closed { EdgeKind::Circle } else { EdgeKind::Arc },
            region: name(b.band_sheet[g]),
            color: ge.color,
        })
        .collect();
    let shadow = Shadow {
        regions,
        interior_edges,
        interior_vertices,
        boundary_vertices,
        boundary_edges,
    };
    let v = validate_shadow(&shadow);
    if !v.is_empty() {
        return Err(CompileError::Inconsistent(v));
    }
    Ok(CompileOutput { shadow, report })
}
