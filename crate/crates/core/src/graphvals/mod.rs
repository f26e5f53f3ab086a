//! Admissibility, redness, and the closed-form brackets of the three planar
//! graphs: the circle, the theta graph and the tetrahedron.
//!
//! ```
//! use shadowbracket::exactq::Order;
//! use shadowbracket::graphvals::{theta_eval, ColorTriple};
//!
//! let t = ColorTriple::new(2, 2, 2);
//! assert!(t.is_red().unwrap());
//! assert_eq!(theta_eval(t).unwrap().ord_at_i(), Order::Finite(-1));
//! ```

use serde::{Deserialize, Serialize};

use crate::exactq::{HalfInt, Order, QRat};
use crate::qcombinat::Factored;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("color triple ({0}, {1}, {2}) is not admissible")]
    Inadmissible(u32, u32, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColorTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl ColorTriple {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        ColorTriple { a, b, c }
    }

    pub fn from_array([a, b, c]: [u32; 3]) -> Self {
        ColorTriple { a, b, c }
    }

    /// Triangle inequalities and even sum.
    pub fn is_admissible(&self) -> bool {
        let (a, b, c) = (self.a as i64, self.b as i64, self.c as i64);
        (a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0
    }

    pub fn check(&self) -> Result<(), GraphError> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(GraphError::Inadmissible(self.a, self.b, self.c))
        }
    }

    /// `((a+b−c)/2, (b+c−a)/2, (c+a−b)/2)`.
    pub fn halves(&self) -> Result<[u32; 3], GraphError> {
        self.check()?;
        let (a, b, c) = (self.a, self.b, self.c);
        Ok([(a + b - c) / 2, (b + c - a) / 2, (c + a - b) / 2])
    }

    /// At least two of the three halves are odd.
    pub fn is_red(&self) -> Result<bool, GraphError> {
        Ok(self.halves()?.iter().filter(|h| *h % 2 == 1).count() >= 2)
    }

    pub fn has_odd(&self) -> bool {
        self.a % 2 == 1 || self.b % 2 == 1 || self.c % 2 == 1
    }
}

/// Colors of a tetrahedron: `(a, d)`, `(b, e)`, `(c, f)` are opposite edges
/// and the vertex triples are `(a,b,c)`, `(a,e,f)`, `(d,b,f)`, `(d,e,c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TetFrame {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub e: u32,
    pub f: u32,
}

impl TetFrame {
    pub fn new([a, b, c, d, e, f]: [u32; 6]) -> Self {
        TetFrame { a, b, c, d, e, f }
    }

    pub fn colors(&self) -> [u32; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    pub fn vertex_triples(&self) -> [ColorTriple; 4] {
        let TetFrame { a, b, c, d, e, f } = *self;
        [
            ColorTriple::new(a, b, c),
            ColorTriple::new(a, e, f),
            ColorTriple::new(d, b, f),
            ColorTriple::new(d, e, c),
        ]
    }

    pub fn check(&self) -> Result<(), GraphError> {
        self.vertex_triples().iter().try_for_each(ColorTriple::check)
    }

    /// `Δ₁..Δ₄`, the half perimeters of the vertex triples.
    pub fn triangles(&self) -> [u32; 4] {
        self.vertex_triples().map(|t| (t.a + t.b + t.c) / 2)
    }

    /// `□₁..□₃`, the half perimeters of the three 4-cycles.
    pub fn squares(&self) -> [u32; 3] {
        let TetFrame { a, b, c, d, e, f } = *self;
        [(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2]
    }

    pub fn red_count(&self) -> Result<usize, GraphError> {
        let mut r = 0;
        for t in self.vertex_triples() {
            r += t.is_red()? as usize;
        }
        Ok(r)
    }

    /// The frame with `a ↔ d` and `b ↔ e`, which permutes the vertex triples.
    pub fn swapped(&self) -> TetFrame {
        TetFrame::new([self.d, self.e, self.c, self.a, self.b, self.f])
    }

    /// Rotation `(a, b, c) → (b, c, a)` together with `(d, e, f) → (e, f, d)`.
    pub fn rotated(&self) -> TetFrame {
        TetFrame::new([self.b, self.c, self.a, self.e, self.f, self.d])
    }
}

/// `(−1)^a [a+1]`.
pub fn circle_factored(a: u32) -> Factored {
    Factored::quantum_int(a + 1).mul_unit_monomial(2 * (a % 2) as i64, 0)
}

pub fn circle_eval(a: u32) -> QRat {
    circle_factored(a).to_qrat()
}

pub fn theta_factored(t: ColorTriple) -> Result<Factored, GraphError> {
    let [h1, h2, h3] = t.halves()?;
    let s = (t.a + t.b + t.c) / 2;
    let f = Factored::factorial_ratio(&[s + 1, h1, h2, h3], &[t.a, t.b, t.c, 1]);
    Ok(f.mul_unit_monomial(2 * (s % 2) as i64, 0))
}

pub fn theta_eval(t: ColorTriple) -> Result<QRat, GraphError> {
    Ok(theta_factored(t)?.to_qrat())
}

/// Prefactor and z-sum of the tetrahedron formula, both factored.
pub fn tet_parts(fr: TetFrame) -> Result<(Factored, Factored), GraphError> {
    fr.check()?;
    let tri = fr.triangles();
    let sq = fr.squares();
    let lo = *tri.iter().max().unwrap();
    let hi = *sq.iter().min().unwrap();
    assert!(lo <= hi, "admissible frames satisfy max Δ ≤ min □");
    let tops: Vec<u32> = sq.iter().flat_map(|&s| tri.iter().map(move |&t| s - t)).collect();
    let prefactor = Factored::factorial_ratio(&tops, &fr.colors());
    let terms: Vec<Factored> = (lo..=hi)
        .map(|z| {
            let mut bottoms: Vec<u32> = tri.iter().map(|&t| z - t).collect();
            bottoms.extend(sq.iter().map(|&s| s - z));
            bottoms.push(1);
            Factored::factorial_ratio(&[z + 1], &bottoms).mul_unit_monomial(2 * (z % 2) as i64, 0)
        })
        .collect();
    Ok((prefactor, Factored::sum(&terms)))
}

pub fn tet_factored(fr: TetFrame) -> Result<Factored, GraphError> {
    let (pre, sum) = tet_parts(fr)?;
    Ok(pre.mul(&sum))
}

pub fn tet_eval(fr: TetFrame) -> Result<QRat, GraphError> {
    Ok(tet_factored(fr)?.to_qrat())
}

/// One of the three planar graphs, colored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PlanarGraph {
    Circle { a: u32 },
    Theta(ColorTriple),
    Tet(TetFrame),
}

impl PlanarGraph {
    pub fn factored(&self) -> Result<Factored, GraphError> {
        match *self {
            PlanarGraph::Circle { a } => Ok(circle_factored(a)),
            PlanarGraph::Theta(t) => theta_factored(t),
            PlanarGraph::Tet(fr) => tet_factored(fr),
        }
    }

    pub fn eval(&self) -> Result<QRat, GraphError> {
        Ok(self.factored()?.to_qrat())
    }

    /// `|L|`: 1 if some edge has an odd color.
    pub fn odd_link_components(&self) -> u32 {
        let odd = match *self {
            PlanarGraph::Circle { a } => a % 2 == 1,
            PlanarGraph::Theta(t) => t.has_odd(),
            PlanarGraph::Tet(fr) => fr.colors().iter().any(|c| c % 2 == 1),
        };
        odd as u32
    }

    pub fn red_vertices(&self) -> Result<usize, GraphError> {
        match *self {
            PlanarGraph::Circle { .. } => Ok(0),
            PlanarGraph::Theta(t) => Ok(2 * t.is_red()? as usize),
            PlanarGraph::Tet(fr) => fr.red_count(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma49Record {
    pub ord: Order,
    /// `|L| − r/2`.
    pub bound: HalfInt,
    /// Equality is claimed for the circle and the theta graph only.
    pub equality_expected: bool,
    pub holds: bool,
    pub equal: bool,
}

pub fn lemma49_check(g: &PlanarGraph) -> Result<Lemma49Record, GraphError> {
    let ord = g.factored()?.ord_at_i();
    let bound = HalfInt::from_twice(2 * g.odd_link_components() as i64 - g.red_vertices()? as i64);
    Ok(Lemma49Record {
        ord,
        bound,
        equality_expected: !matches!(g, PlanarGraph::Tet(_)),
        holds: ord.at_least(bound),
        equal: ord.slack(bound) == Some(HalfInt::from_int(0)),
    })
}

/// Every admissible frame with all colors `≤ max`, in lexicographic order.
pub fn admissible_frames(max: u32) -> Vec<TetFrame> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                if !ColorTriple::new(a, b, c).is_admissible() {
                    continue;
                }
                for d in 0..=max {
                    for e in 0..=max {
                        if !ColorTriple::new(d, e, c).is_admissible() {
                            continue;
                        }
                        for f in 0..=max {
                            let fr = TetFrame::new([a, b, c, d, e, f]);
                            if fr.check().is_ok() {
                                out.push(fr);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every admissible triple with all colors `≤ max`.
pub fn admissible_triples(max: u32) -> Vec<ColorTriple> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                let t = ColorTriple::new(a, b, c);
                if t.is_admissible() {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::QPoly;
    use crate::qcombinat::{quantum_factorial, quantum_int};
    use proptest::prelude::*;

    fn qi(n: u32) -> QPoly {
        quantum_int(n)
    }

    #[test]
    fn admissibility_and_redness() {
        assert!(ColorTriple::new(1, 1, 0).is_admissible());
        assert!(!ColorTriple::new(1, 1, 1).is_admissible());
        assert!(!ColorTriple::new(1, 4, 1).is_admissible());
        assert!(ColorTriple::new(2, 2, 2).is_admissible());
        assert!(ColorTriple::new(2, 2, 2).is_red().unwrap());
        assert!(!ColorTriple::new(1, 1, 0).is_red().unwrap());
        assert!(!ColorTriple::new(0, 0, 0).is_red().unwrap());
        assert_eq!(ColorTriple::new(1, 1, 1).is_red(), Err(GraphError::Inadmissible(1, 1, 1)));
    }

    #[test]
    fn circles() {
        assert_eq!(circle_eval(0), QRat::one());
        assert_eq!(circle_eval(1), QRat::from(-qi(2)));
        assert_eq!(circle_eval(2), QRat::from(qi(3)));
    }

    #[test]
    fn thetas() {
        assert_eq!(theta_eval(ColorTriple::new(0, 0, 0)).unwrap(), QRat::one());
        let expected = QRat::new(-(&qi(4) * &qi(3)), qi(2).pow(2)).unwrap();
        assert_eq!(theta_eval(ColorTriple::new(2, 2, 2)).unwrap(), expected);
        assert_eq!(theta_eval(ColorTriple::new(1, 1, 0)).unwrap(), circle_eval(1));
        assert!(theta_eval(ColorTriple::new(1, 1, 1)).is_err());
        for a in 0..=20 {
            assert_eq!(theta_eval(ColorTriple::new(a, a, 0)).unwrap(), circle_eval(a));
        }
    }

    #[test]
    fn tetrahedra() {
        assert_eq!(tet_eval(TetFrame::new([0; 6])).unwrap(), QRat::one());
        let v = tet_eval(TetFrame::new([2; 6])).unwrap();
        let expected = QRat::new(&quantum_factorial(4) * &(&qi(5) - &QPoly::one()), qi(2).pow(6)).unwrap();
        assert_eq!(v, expected);
        // the cancellation in [5] − 1 leaves a pole of order 2, not 4
        assert_eq!(v.ord_at_i(), Order::Finite(-2));
        assert!(tet_eval(TetFrame::new([1, 1, 1, 0, 0, 0])).is_err());
    }

    #[test]
    fn frame_invariants() {
        for fr in admissible_frames(4) {
            let tri = fr.triangles();
            let sq = fr.squares();
            let total: u32 = fr.colors().iter().sum();
            assert_eq!(tri.iter().sum::<u32>(), total);
            assert_eq!(sq.iter().sum::<u32>(), total);
            assert!(tri.iter().max() <= sq.iter().min());
        }
    }

    #[test]
    fn lemma_records() {
        let r = lemma49_check(&PlanarGraph::Theta(ColorTriple::new(2, 2, 2))).unwrap();
        assert_eq!((r.ord, r.bound, r.equal), (Order::Finite(-1), HalfInt::from_int(-1), true));
        let r = lemma49_check(&PlanarGraph::Circle { a: 1 }).unwrap();
        assert_eq!((r.ord, r.bound, r.equal), (Order::Finite(1), HalfInt::from_int(1), true));
        let r = lemma49_check(&PlanarGraph::Tet(TetFrame::new([2; 6]))).unwrap();
        assert_eq!((r.ord, r.bound, r.holds), (Order::Finite(-2), HalfInt::from_int(-2), true));
        assert!(!r.equality_expected);
    }

    #[test]
    fn theta_equality_small() {
        for t in admissible_triples(8) {
            let r = lemma49_check(&PlanarGraph::Theta(t)).unwrap();
            assert!(r.equal, "{t:?}: {r:?}");
        }
    }

    fn arb_frame() -> impl Strategy<Value = TetFrame> {
        prop::array::uniform6(0u32..7)
            .prop_map(TetFrame::new)
            .prop_filter("admissible", |fr| fr.check().is_ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn tet_symmetries(fr in arb_frame()) {
            let v = tet_eval(fr).unwrap();
            prop_assert_eq!(&tet_eval(fr.swapped()).unwrap(), &v);
            prop_assert_eq!(&tet_eval(fr.rotated()).unwrap(), &v);
        }
    }
}
