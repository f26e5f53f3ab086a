use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_indexed, Coloring};
use super::model::{Fixed, Indexed, Shadow};
use super::ShadowError;
use crate::exactq::{HalfInt, Order, QRat};
use crate::graphvals::{circle_factored, tet_factored, theta_factored, ColorTriple, TetFrame};
use crate::qcombinat::Factored;

/// Phase of a region with twice-gleam `g2` and color `c`:
/// `(√−1)^{g2·c} · x^{−g2·c·(c+2)}`.
pub fn region_phase(g2: i64, c: u32) -> Factored {
    let c = c as i64;
    Factored::unit_monomial((g2 * c).rem_euclid(4), -g2 * c * (c + 2))
}

fn check_coloring(ix: &Indexed, s: &Shadow, sigma: &Coloring) -> Result<(), ShadowError> {
    if sigma.colors.len() != ix.n_regions() {
        return Err(ShadowError::ColoringLength {
            expected: ix.n_regions(),
            found: sigma.colors.len(),
        });
    }
    for (r, f) in ix.fixed.iter().enumerate() {
        let ok = match f {
            Fixed::Free => true,
            Fixed::Color(c) => sigma.colors[r] == *c,
            Fixed::Conflict => false,
        };
        if !ok {
            return Err(ShadowError::Inadmissible {
                at: s.regions[r].id.clone(),
            });
        }
    }
    for (e, (t, _)) in ix.edges.iter().enumerate() {
        if !triple(sigma, *t).is_admissible() {
            return Err(ShadowError::Inadmissible {
                at: s.interior_edges[e].id.clone(),
            });
        }
    }
    Ok(())
}

fn triple(sigma: &Coloring, [x, y, z]: [usize; 3]) -> ColorTriple {
    ColorTriple::new(sigma.colors[x], sigma.colors[y], sigma.colors[z])
}

/// The state value with all products kept factored.
pub(crate) fn state_factored_unchecked(ix: &Indexed, sigma: &Coloring) -> Factored {
    let inadmissible = "admissible coloring";
    let mut v = Factored::one();
    for r in 0..ix.n_regions() {
        let c = sigma.colors[r];
        let circ = circle_factored(c).pow(ix.chi[r]).expect("circle values are units times cyclotomics");
        v.mul_assign(&circ);
        v.mul_assign(&region_phase(ix.gleam2[r], c));
    }
    for slots in &ix.ivs {
        let fr = TetFrame::new(slots.map(|r| sigma.colors[r]));
        v.mul_assign(&tet_factored(fr).expect(inadmissible));
    }
    for t in &ix.bvs {
        v.mul_assign(&theta_factored(triple(sigma, *t)).expect(inadmissible));
    }
    for (t, chi) in &ix.edges {
        if *chi != 0 {
            let th = theta_factored(triple(sigma, *t)).expect(inadmissible);
            v.mul_assign(&th.pow(-chi).expect("theta values are invertible"));
        }
    }
    for &(_, c, chi) in &ix.bes {
        if chi != 0 {
            v.mul_assign(&circle_factored(c).pow(-chi).expect("circle values are invertible"));
        }
    }
    v
}

pub fn state_factored(s: &Shadow, sigma: &Coloring) -> Result<Factored, ShadowError> {
    let ix = s.index().map_err(ShadowError::Invalid)?;
    check_coloring(&ix, s, sigma)?;
    Ok(state_factored_unchecked(&ix, sigma))
}

pub fn state_value(s: &Shadow, sigma: &Coloring) -> Result<QRat, ShadowError> {
    Ok(state_factored(s, sigma)?.to_qrat())
}

#[derive(Clone, Debug)]
pub struct BracketResult {
    pub value: QRat,
    pub ord_i: Order,
    pub states_evaluated: usize,
    /// Heuristic completeness certificate of the enumeration.
    pub complete: bool,
    pub cap_used: u32,
    pub colorings: Vec<Coloring>,
    pub unanchored: Vec<String>,
}

/// Sum of the state values over every coloring up to `cap`.
pub fn bracket(s: &Shadow, cap: u32) -> Result<BracketResult, ShadowError> {
    let ix = s.index().map_err(ShadowError::Invalid)?;
    let (colorings, complete, unanchored) = enumerate_indexed(&ix, s, cap)?;
    let states: Vec<Factored> = colorings.par_iter().map(|c| state_factored_unchecked(&ix, c)).collect();
    let total = Factored::sum(&states);
    Ok(BracketResult {
        ord_i: total.ord_at_i(),
        value: total.to_qrat(),
        states_evaluated: colorings.len(),
        complete,
        cap_used: cap,
        colorings,
        unanchored: unanchored.into_iter().map(|r| s.regions[r].id.clone()).collect(),
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OddSurface {
    pub regions: Vec<String>,
    pub interior_edges: Vec<String>,
    pub boundary_edges: Vec<String>,
    pub interior_vertices: Vec<String>,
    pub boundary_vertices: Vec<String>,
    pub euler_char: i64,
}

/// The subcomplex carried by the odd colors.
pub fn odd_surface(s: &Shadow, sigma: &Coloring) -> Result<OddSurface, ShadowError> {
    let ix = s.index().map_err(ShadowError::Invalid)?;
    check_coloring(&ix, s, sigma)?;
    Ok(odd_surface_unchecked(&ix, s, sigma))
}

fn odd_surface_unchecked(ix: &Indexed, s: &Shadow, sigma: &Coloring) -> OddSurface {
    let odd = |r: usize| sigma.colors[r] % 2 == 1;
    let mut out = OddSurface::default();
    let mut chi = 0;
    for r in 0..ix.n_regions() {
        if odd(r) {
            out.regions.push(s.regions[r].id.clone());
            chi += ix.chi[r];
        }
    }
    for (e, (t, c)) in ix.edges.iter().enumerate() {
        let k = t.iter().filter(|&&r| odd(r)).count();
        if k > 0 {
            assert_eq!(k, 2, "admissible edges carry zero or two odd sheets");
            out.interior_edges.push(s.interior_edges[e].id.clone());
            chi -= c;
        }
    }
    for (e, &(r, _, c)) in ix.bes.iter().enumerate() {
        if odd(r) {
            out.boundary_edges.push(s.boundary_edges[e].id.clone());
            chi -= c;
        }
    }
    for (v, slots) in ix.ivs.iter().enumerate() {
        if slots.iter().any(|&r| odd(r)) {
            out.interior_vertices.push(s.interior_vertices[v].id.clone());
            chi += 1;
        }
    }
    for (v, t) in ix.bvs.iter().enumerate() {
        if t.iter().any(|&r| odd(r)) {
            out.boundary_vertices.push(s.boundary_vertices[v].id.clone());
            chi += 1;
        }
    }
    out.euler_char = chi;
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StateBound {
    pub ord: Order,
    pub chi: i64,
    pub red_boundary: usize,
    /// `χ(S_σ) − r/2`.
    pub bound: HalfInt,
    pub holds: bool,
}

impl StateBound {
    pub fn slack(&self) -> Option<HalfInt> {
        self.ord.slack(self.bound)
    }
}

/// Compares the order of one state with `χ(S_σ) − r/2`.
pub fn verify_state_bound(s: &Shadow, sigma: &Coloring) -> Result<StateBound, ShadowError> {
    let ix = s.index().map_err(ShadowError::Invalid)?;
    check_coloring(&ix, s, sigma)?;
    Ok(state_bound_unchecked(&ix, s, sigma))
}

pub(crate) fn state_bound_unchecked(ix: &Indexed, s: &Shadow, sigma: &Coloring) -> StateBound {
    let ord = state_factored_unchecked(ix, sigma).ord_at_i();
    let chi = odd_surface_unchecked(ix, s, sigma).euler_char;
    let red_boundary = ix
        .bvs
        .iter()
        .filter(|t| triple(sigma, **t).is_red().expect("admissible"))
        .count();
    let bound = HalfInt::from_twice(2 * chi - red_boundary as i64);
    StateBound {
        ord,
        chi,
        red_boundary,
        bound,
        holds: ord.at_least(bound),
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct StateAudit {
    pub states: usize,
    pub failures: usize,
    /// Smallest `ord − bound` over states with finite order.
    pub min_slack: Option<HalfInt>,
    pub records: Vec<(Coloring, StateBound)>,
}

/// Runs [`verify_state_bound`] on every given coloring.
pub fn audit_states(s: &Shadow, colorings: &[Coloring]) -> Result<StateAudit, ShadowError> {
    let ix = s.index().map_err(ShadowError::Invalid)?;
    for c in colorings {
        check_coloring(&ix, s, c)?;
    }
    let records: Vec<(Coloring, StateBound)> = colorings
        .par_iter()
        .map(|c| (c.clone(), state_bound_unchecked(&ix, s, c)))
        .collect();
    Ok(StateAudit {
        states: records.len(),
        failures: records.iter().filter(|(_, b)| !b.holds).count(),
        min_slack: records.iter().filter_map(|(_, b)| b.slack()).min(),
        records,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RibbonTarget {
    Knot,
    Link { components: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonBoundReport {
    pub ord_i: Order,
    /// Every ribbon surface bounded by the link has `χ ≤ ord_i`.
    pub max_ribbon_chi: Option<i64>,
    /// The link bounds no ribbon disc(s).
    pub not_ribbon: bool,
    /// Knots only: lower bound on the ribbon genus.
    pub ribbon_genus_at_least: Option<i64>,
    pub summary: String,
}

/// Reads ribbon obstructions off the order of a complete bracket.
pub fn ribbon_report(b: &BracketResult, target: RibbonTarget) -> Result<RibbonBoundReport, ShadowError> {
    if !b.complete {
        return Err(ShadowError::Incomplete { cap: b.cap_used });
    }
    let ord = b.ord_i;
    let Some(k) = ord.finite() else {
        return Ok(RibbonBoundReport {
            ord_i: ord,
            max_ribbon_chi: None,
            not_ribbon: false,
            ribbon_genus_at_least: None,
            summary: "bracket vanishes identically; no information".to_string(),
        });
    };
    let n = match target {
        RibbonTarget::Knot => 1,
        RibbonTarget::Link { components } => components as i64,
    };
    let not_ribbon = k < n;
    let genus = match target {
        RibbonTarget::Knot if k <= 0 => Some(HalfInt::from_twice(1 - k).ceil()),
        _ => None,
    };
    let summary = match (target, genus) {
        (RibbonTarget::Knot, Some(g)) => format!("not ribbon; ribbon genus ≥ {g}"),
        (RibbonTarget::Knot, None) => "no information".to_string(),
        (RibbonTarget::Link { .. }, _) if not_ribbon => {
            format!("not ribbon; every ribbon surface has χ ≤ {k}")
        }
        (RibbonTarget::Link { .. }, _) => format!("every ribbon surface has χ ≤ {k}"),
    };
    Ok(RibbonBoundReport {
        ord_i: ord,
        max_ribbon_chi: Some(k),
        not_ribbon,
        ribbon_genus_at_least: genus,
        summary,
    })
}
