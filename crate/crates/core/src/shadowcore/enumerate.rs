use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use super::model::{Fixed, Indexed, Shadow};
use super::ShadowError;
use crate::graphvals::ColorTriple;

/// Colors of the regions, in the order of `Shadow::regions`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    pub fn is_all_even(&self) -> bool {
        self.colors.iter().all(|c| c % 2 == 0)
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.colors.serialize(s)
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub colorings: Vec<Coloring>,
    /// Heuristic certificate: no free region reached `cap − 1` or `cap`, and
    /// every region is tied to a boundary color through interior edges.
    pub complete: bool,
    pub cap: u32,
    /// Regions with no chain of interior edges to a boundary-colored region.
    pub unanchored: Vec<String>,
}

/// All admissible colorings with every color at most `cap`, sorted.
pub fn enumerate_colorings(s: &Shadow, cap: u32) -> Result<Enumeration, ShadowError> {
    let ix = s.index().map_err(ShadowError::Invalid)?;
    let (colorings, complete, unanchored) = enumerate_indexed(&ix, s, cap)?;
    Ok(Enumeration {
        colorings,
        complete,
        cap,
        unanchored: unanchored.into_iter().map(|r| s.regions[r].id.clone()).collect(),
    })
}

pub(crate) fn enumerate_indexed(
    ix: &Indexed,
    s: &Shadow,
    cap: u32,
) -> Result<(Vec<Coloring>, bool, Vec<usize>), ShadowError> {
    let n = ix.n_regions();
    let max_fixed = ix
        .fixed
        .iter()
        .filter_map(|f| match f {
            Fixed::Color(c) => Some(*c),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    if cap < max_fixed {
        return Err(ShadowError::CapBelowBoundary { cap, boundary: max_fixed });
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, (t, _)) in ix.edges.iter().enumerate() {
        for &r in t {
            if !incident[r].contains(&e) {
                incident[r].push(e);
            }
        }
    }
    for (r, inc) in incident.iter().enumerate() {
        if ix.fixed[r] == Fixed::Free && inc.is_empty() {
            return Err(ShadowError::Unbounded {
                region: s.regions[r].id.clone(),
            });
        }
    }
    if ix.fixed.contains(&Fixed::Conflict) {
        return Ok((Vec::new(), true, Vec::new()));
    }

    // breadth-first order from the boundary-colored regions, then from any
    // region left over
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let anchors: Vec<usize> = (0..n).filter(|&r| ix.fixed[r] != Fixed::Free).collect();
    breadth_first(anchors, ix, &incident, &mut seen, &mut order);
    let mut unanchored = Vec::new();
    while let Some(r) = (0..n).find(|&r| !seen[r]) {
        let before = order.len();
        breadth_first(vec![r], ix, &incident, &mut seen, &mut order);
        unanchored.extend_from_slice(&order[before..]);
    }
    let mut pos = vec![0; n];
    for (p, &r) in order.iter().enumerate() {
        pos[r] = p;
    }
    unanchored.sort_unstable();

    // edges checked once their last region is assigned
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, (t, _)) in ix.edges.iter().enumerate() {
        let last = t.iter().map(|&r| pos[r]).max().unwrap();
        checks[last].push(e);
    }
    // an edge whose other two regions come earlier narrows the domain
    let mut narrowing: Vec<Option<(usize, usize)>> = vec![None; n];
    for (p, &r) in order.iter().enumerate() {
        for &e in &incident[r] {
            let t = ix.edges[e].0;
            if t.iter().filter(|&&x| x == r).count() != 1 {
                continue;
            }
            let others: Vec<usize> = t.iter().copied().filter(|&x| x != r).collect();
            if others.iter().all(|&o| pos[o] < p) {
                narrowing[p] = Some((others[0], others[1]));
                break;
            }
        }
    }

    let mut search = Search {
        ix,
        order: &order,
        checks: &checks,
        narrowing: &narrowing,
        cap,
        colors: vec![0; n],
        out: Vec::new(),
    };
    search.descend(0);
    let mut colorings = search.out;
    colorings.sort();
    let top = cap.saturating_sub(1);
    let hits_cap = colorings.iter().any(|c| {
        c.colors
            .iter()
            .enumerate()
            .any(|(r, &v)| ix.fixed[r] == Fixed::Free && v >= top)
    });
    let complete = !hits_cap && unanchored.is_empty();
    Ok((colorings, complete, unanchored))
}

fn breadth_first(start: Vec<usize>, ix: &Indexed, incident: &[Vec<usize>], seen: &mut [bool], order: &mut Vec<usize>) {
    let mut queue: VecDeque<usize> = VecDeque::new();
    for r in start {
        if !seen[r] {
            seen[r] = true;
            queue.push_back(r);
        }
    }
    while let Some(r) = queue.pop_front() {
        order.push(r);
        for &e in &incident[r] {
            for &o in &ix.edges[e].0 {
                if !seen[o] {
                    seen[o] = true;
                    queue.push_back(o);
                }
            }
        }
    }
}

struct Search<'a> {
    ix: &'a Indexed,
    order: &'a [usize],
    checks: &'a [Vec<usize>],
    narrowing: &'a [Option<(usize, usize)>],
    cap: u32,
    colors: Vec<u32>,
    out: Vec<Coloring>,
}

impl Search<'_> {
    fn descend(&mut self, p: usize) {
        if p == self.order.len() {
            self.out.push(Coloring::new(self.colors.clone()));
            return;
        }
        let r = self.order[p];
        let (lo, hi, step) = match (self.ix.fixed[r], self.narrowing[p]) {
            (Fixed::Color(c), _) => (c, c, 1),
            (_, Some((u, v))) => {
                let (u, v) = (self.colors[u], self.colors[v]);
                (u.abs_diff(v), (u + v).min(self.cap), 2)
            }
            _ => (0, self.cap, 1),
        };
        let mut c = lo;
        while c <= hi {
            self.colors[r] = c;
            let ok = self.checks[p].iter().all(|&e| {
                let [x, y, z] = self.ix.edges[e].0;
                ColorTriple::new(self.colors[x], self.colors[y], self.colors[z]).is_admissible()
            });
            if ok {
                self.descend(p + 1);
            }
            c += step;
        }
    }
}
