use std::collections::BTreeMap;

use super::{ArcEnd, CrossingSpec, Diagram, DiagramError, DiagramFile};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PdError {
    #[error("label {label} occurs {count} times; every label occurs exactly twice")]
    LabelCount { label: u32, count: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Builds a link diagram from a planar diagram code. Each `X[i,j,k,l]` lists
/// the edge labels counterclockwise starting from the incoming under strand.
/// The first occurrence of a label is end 0 of its arc.
///
/// The outer face is the largest face meeting no crossing twice, if any.
pub fn from_pd(code: &[[u32; 4]]) -> Result<Diagram, PdError> {
    let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
    for x in code {
        for &l in x {
            *seen.entry(l).or_default() += 1;
        }
    }
    if let Some((&label, &count)) = seen.iter().find(|(_, &c)| c != 2) {
        return Err(PdError::LabelCount { label, count });
    }
    let mut used: BTreeMap<u32, u8> = BTreeMap::new();
    let crossings = code
        .iter()
        .enumerate()
        .map(|(i, x)| CrossingSpec {
            id: format!("X{}", i + 1),
            ends: x.map(|l| {
                let e = used.entry(l).or_default();
                *e += 1;
                ArcEnd { arc: l.to_string(), which_end: *e - 1 }
            }),
            over: 1,
        })
        .collect();
    let file = DiagramFile {
        arcs: seen.keys().map(|l| l.to_string()).collect(),
        crossings,
        ..DiagramFile::default()
    };
    let mut d = Diagram::new(file)?;
    if let Some(f) = default_outer_face(&d) {
        d.set_outer_face(d.face_key(f))?;
    }
    Ok(d)
}

pub(crate) fn default_outer_face(d: &Diagram) -> Option<usize> {
    let nf = d.faces().len();
    let mut twice = vec![false; nf];
    for n in 0..d.nodes.len() {
        let mut count = vec![0; nf];
        for k in 0..d.nodes[n].deg() {
            count[d.corner(n, k)] += 1;
        }
        for f in 0..nf {
            twice[f] |= count[f] > 1;
        }
    }
    let mut order: Vec<usize> = (0..nf).collect();
    order.sort_by_key(|&f| std::cmp::Reverse(d.faces().darts(f).len()));
    order.iter().copied().find(|&f| !twice[f]).or(order.first().copied())
}
