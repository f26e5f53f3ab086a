//! Shadows, their admissible colorings, and the state sum.
//!
//! A [`Shadow`] is the combinatorial incidence data of a simple polyhedron:
//! regions with Euler characteristic and (twice) gleam, interior edges with
//! three sheets, interior vertices with six slots, and the boundary graph.
//! [`bracket`] sums the state values of every admissible coloring up to a
//! color cap.
//!
//! ```
//! use shadowbracket::exactq::Order;
//! use shadowbracket::shadowcore::{bracket, Shadow};
//!
//! // a disc bounded by an unknot colored 1
//! let s = Shadow::from_json(r#"{
//!     "regions": [{"id": "D", "chi": 1, "gleam2": 0, "color": 1}],
//!     "boundary_edges": [{"id": "K", "kind": "circle", "region": "D", "color": 1}]
//! }"#).unwrap();
//! let b = bracket(&s, 17).unwrap();
//! assert_eq!(b.value.render(), "-q - q^-1");
//! assert_eq!(b.ord_i, Order::Finite(1));
//! ```

mod enumerate;
mod model;
mod state;

pub use enumerate::{enumerate_colorings, Coloring, Enumeration};
pub use model::{
    validate_shadow, BoundaryEdge, BoundaryVertex, EdgeKind, InteriorEdge, InteriorVertex, Region, Shadow, Slots,
    ValidationReport, Violation,
};
pub use state::{
    audit_states, bracket, odd_surface, region_phase, ribbon_report, state_factored, state_value,
    verify_state_bound, BracketResult, OddSurface, RibbonBoundReport, RibbonTarget, StateAudit, StateBound,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShadowError {
    #[error("invalid shadow:\n{0}")]
    Invalid(ValidationReport),
    #[error("unbounded coloring space: region `{region}` has no interior edge and no boundary color")]
    Unbounded { region: String },
    #[error("color cap {cap} is below the boundary color {boundary}")]
    CapBelowBoundary { cap: u32, boundary: u32 },
    #[error("coloring has {found} entries, shadow has {expected} regions")]
    ColoringLength { expected: usize, found: usize },
    #[error("coloring is not admissible at `{at}`")]
    Inadmissible { at: String },
    #[error(
        "bracket enumeration up to cap {cap} carries no completeness certificate; \
         finitely many colorings contribute for collapsible shadows, but no a priori bound is known"
    )]
    Incomplete { cap: u32 },
}
