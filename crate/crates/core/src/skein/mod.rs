//! Brute-force Kauffman bracket of color-1 link diagrams.
//!
//! Every crossing is smoothed both ways; a state with `a` A-smoothings, `b`
//! B-smoothings and `l` loops contributes `A^{a−b} δ^l` with
//! `δ = −A² − A⁻²`. The A-smoothing joins the two corners swept by turning
//! an over strand counterclockwise.
//!
//! ```
//! use shadowbracket::diagramc::from_pd;
//! use shadowbracket::exactq::render::{render_poly, Var};
//! use shadowbracket::skein::kauffman_bracket;
//!
//! let hopf = from_pd(&[[4, 1, 3, 2], [2, 3, 1, 4]]).unwrap();
//! let v = kauffman_bracket(&hopf).unwrap();
//! assert_eq!(v.x4_minus_i_multiplicity(), Some(1));
//! assert_eq!(render_poly(&v, Var::Q), "q^3 + q + q^-1 + q^-3");
//! ```

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::diagramc::Diagram;
use crate::exactq::QPoly;

/// Above this the 2^n state enumeration is refused.
pub const MAX_CROSSINGS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SkeinError {
    #[error("the skein evaluator handles links only; the diagram has trivalent vertices")]
    Unsupported,
    #[error("the skein evaluator handles color 1 only; graph edge through arc `{arc}` has color {color}")]
    Colored { arc: String, color: u32 },
    #[error("{crossings} crossings exceed the limit of {MAX_CROSSINGS} for brute-force enumeration")]
    TooManyCrossings { crossings: usize },
}

/// `−A² − A⁻²`.
pub fn loop_value() -> QPoly {
    -(QPoly::a_pow(2) + QPoly::a_pow(-2))
}

pub fn kauffman_bracket(d: &Diagram) -> Result<QPoly, SkeinError> {
    if d.has_vertices() {
        return Err(SkeinError::Unsupported);
    }
    if let Some(g) = d.graph_edges().iter().find(|g| g.color != 1) {
        return Err(SkeinError::Colored { arc: d.arc_id(g.arcs[0]).to_string(), color: g.color });
    }
    let n = d.n_crossings();
    if n > MAX_CROSSINGS {
        return Err(SkeinError::TooManyCrossings { crossings: n });
    }
    let n_arcs = d.file().arcs.len();
    // for each crossing, the arc pairs joined by the A and by the B smoothing
    let joins: Vec<[[(usize, usize); 2]; 2]> = d
        .nodes
        .iter()
        .map(|node| {
            let o = (0..4).find(|&k| node.is_over(k)).unwrap();
            let arc = |k: usize| node.slots[k % 4].0;
            [
                [(arc(o), arc(o + 3)), (arc(o + 2), arc(o + 1))],
                [(arc(o), arc(o + 1)), (arc(o + 2), arc(o + 3))],
            ]
        })
        .collect();
    // loops per state, collected by exponent of A
    let counts: Vec<(i64, usize)> = (0u64..1 << n)
        .into_par_iter()
        .map(|state| {
            let mut uf = UnionFind::<usize>::new(n_arcs);
            let mut b_count = 0i64;
            for (x, j) in joins.iter().enumerate() {
                let s = (state >> x) & 1;
                b_count += s as i64;
                for &(p, q) in &j[s as usize] {
                    uf.union(p, q);
                }
            }
            let loops = (0..n_arcs).filter(|&a| uf.find(a) == a).count();
            (n as i64 - 2 * b_count, loops)
        })
        .collect();
    let mut tally: std::collections::BTreeMap<(i64, usize), i64> = Default::default();
    for c in counts {
        *tally.entry(c).or_default() += 1;
    }
    let delta = loop_value();
    Ok(tally
        .into_iter()
        .map(|((e, l), m)| QPoly::a_pow(e) * delta.pow(l as u32) * QPoly::constant(m))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagramc::{from_pd, parse_diagram};

    #[test]
    fn empty_and_unknot() {
        let e = parse_diagram(r#"{"arcs": []}"#).unwrap();
        assert_eq!(kauffman_bracket(&e).unwrap(), QPoly::one());
        let u = parse_diagram(r#"{"arcs": ["k"]}"#).unwrap();
        assert_eq!(kauffman_bracket(&u).unwrap(), loop_value());
    }

    #[test]
    fn kinks_are_monomials() {
        let delta = loop_value();
        let pos = kauffman_bracket(&from_pd(&[[1, 1, 2, 2]]).unwrap()).unwrap();
        let neg = kauffman_bracket(&from_pd(&[[2, 1, 1, 2]]).unwrap()).unwrap();
        let r1 = -QPoly::a_pow(3) * delta.clone();
        let r2 = -QPoly::a_pow(-3) * delta;
        assert!((pos == r1 && neg == r2) || (pos == r2 && neg == r1), "{pos:?} {neg:?}");
    }

    #[test]
    fn trefoil_value() {
        let t = from_pd(&crate::diagramc::corpus::TREFOIL).unwrap();
        let v = kauffman_bracket(&t).unwrap();
        // (−A⁵ − A⁻³ + A⁻⁷)·δ, or its mirror
        let p = QPoly::a_pow(7) + QPoly::a_pow(3) + QPoly::a_pow(-1) - QPoly::a_pow(-9);
        let m = QPoly::a_pow(-7) + QPoly::a_pow(-3) + QPoly::a_pow(1) - QPoly::a_pow(9);
        assert!(v == p || v == m);
    }
}
