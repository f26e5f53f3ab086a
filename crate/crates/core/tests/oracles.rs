//! Hand-derived values checked through the public API.

use proptest::prelude::*;
use shadowbracket::builders::{atomic_cone, fig14_knot_shadow, surface_link_shadow, AtomicKind};
use shadowbracket::diagramc::compile;
use shadowbracket::diagramc::corpus::{link_corpus, HOPF, TREFOIL};
use shadowbracket::diagramc::{from_pd, parse_diagram};
use shadowbracket::exactq::render::{render_poly, Var};
use shadowbracket::exactq::{Order, QPoly, QRat};
use shadowbracket::graphvals::{circle_eval, theta_eval, ColorTriple};
use shadowbracket::qcombinat::{quantum_factorial, quantum_int, quantum_multinomial, MultinomialSpec};
use shadowbracket::shadowcore::{bracket, odd_surface, verify_state_bound, Coloring, Shadow};
use shadowbracket::skein::{kauffman_bracket, loop_value};

fn q(terms: &[(i64, i64)]) -> QPoly {
    QPoly::from_q_terms(terms)
}

fn rat(p: QPoly) -> QRat {
    QRat::from_poly(p)
}

#[test]
fn quantum_arithmetic_by_hand() {
    let two = quantum_int(2);
    assert_eq!(&two * &two, q(&[(2, 1), (0, 2), (-2, 1)]));
    assert_ne!(quantum_int(3), two);
    assert_eq!(quantum_int(5), q(&[(4, 1), (2, 1), (0, 1), (-2, 1), (-4, 1)]));
    assert_eq!(quantum_factorial(4), &(&quantum_int(2) * &quantum_int(3)) * &quantum_int(4));
    let inv = QRat::new(QPoly::one(), &two * &two).unwrap();
    assert_eq!(inv.ord_at_i(), Order::Finite(-2));
}

#[test]
fn multinomials_by_hand() {
    let s = MultinomialSpec::new(vec![4, 1, 1, 1], vec![2, 2, 2, 1]).unwrap();
    let expected = QRat::new(quantum_factorial(4), quantum_int(2).pow(3)).unwrap();
    assert_eq!(quantum_multinomial(&s), expected);

    let s = MultinomialSpec::new(vec![1; 12], vec![2; 6]).unwrap();
    let m = quantum_multinomial(&s);
    assert_eq!(m.ord_at_i(), Order::Finite(-6));
    let inv = QRat::new(QPoly::one(), quantum_int(2).pow(6)).unwrap();
    assert_eq!(m.ord_at_i(), inv.ord_at_i());
}

#[test]
fn small_graphs_by_hand() {
    let t = ColorTriple::new(1, 1, 0);
    assert!(t.is_admissible());
    assert_eq!(t.halves().unwrap(), [1, 0, 0]);
    assert!(!t.is_red().unwrap());
    assert_eq!(circle_eval(2), rat(quantum_int(3)));
    assert_eq!(theta_eval(t).unwrap(), circle_eval(1));
    assert_eq!(circle_eval(1), rat(-quantum_int(2)));
}

#[test]
fn fig14_genus_two() {
    let s = fig14_knot_shadow(2, 1).unwrap();
    let b = bracket(&s, 12).unwrap();
    // −q³[4]²/[2]³
    let num = -(&QPoly::q_pow(3) * &quantum_int(4).pow(2));
    let expected = QRat::new(num, quantum_int(2).pow(3)).unwrap();
    assert_eq!(b.value, expected);
    assert_eq!(b.ord_i, Order::Finite(-1));

    let sigma = Coloring::new(
        s.regions.iter().map(|r| if r.id == "R" { 1 } else { 0 }).collect(),
    );
    let surf = odd_surface(&s, &sigma).unwrap();
    assert_eq!(surf.regions, vec!["R".to_string()]);
    assert_eq!(surf.interior_edges.len(), 2);
    assert_eq!(surf.euler_char, -3);
    let v = verify_state_bound(&s, &sigma).unwrap();
    assert_eq!(v.ord, Order::Finite(-3));
    assert_eq!(v.chi, -3);
    assert_eq!(v.red_boundary, 0);
    assert!(v.holds);
    assert_eq!(v.slack().map(|h| h.twice()), Some(0));
}

#[test]
fn theta_cone_meets_its_bound() {
    let s = atomic_cone(AtomicKind::Theta(ColorTriple::new(2, 2, 2))).unwrap();
    let b = bracket(&s, 8).unwrap();
    assert_eq!(b.ord_i, Order::Finite(-1));
    for sigma in &b.colorings {
        assert!(verify_state_bound(&s, sigma).unwrap().holds);
    }
}

#[test]
fn diagram_censuses() {
    let free = parse_diagram(r#"{"arcs": ["k"]}"#).unwrap();
    assert_eq!((free.components(), free.faces().len()), (1, 2));
    let hopf = from_pd(&HOPF).unwrap();
    assert_eq!((hopf.components(), hopf.faces().len()), (2, 4));
    let trefoil = from_pd(&TREFOIL).unwrap();
    assert_eq!((trefoil.components(), trefoil.faces().len()), (1, 5));
}

/// Every 2-crossing resolution of the Hopf diagram, written out.
#[test]
fn hopf_by_enumeration() {
    let d = loop_value();
    // AA and BB give two loops, AB and BA give one.
    let expected = &(&(&QPoly::a_pow(2) + &QPoly::a_pow(-2)) * &(&d * &d)) + &(&d * &QPoly::constant(2));
    let v = kauffman_bracket(&from_pd(&HOPF).unwrap()).unwrap();
    assert_eq!(v, expected);
    assert_eq!(render_poly(&v, Var::Q), "q^3 + q + q^-1 + q^-3");
}

#[test]
fn compiled_links_match_enumeration() {
    for (name, d, _) in link_corpus() {
        let out = compile(&d).unwrap();
        let b = bracket(&out.shadow, 6).unwrap();
        assert_eq!(b.value, rat(kauffman_bracket(&d).unwrap()), "{name}");
    }
}

fn arb_surface() -> impl Strategy<Value = (i64, u32)> {
    (-5i64..=1, 0u32..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn surface_order_is_chi_for_odd_colors((chi, k) in arb_surface()) {
        let color = 2 * k + 1;
        let s = surface_link_shadow(chi, &[color]).unwrap();
        let b = bracket(&s, color + 2).unwrap();
        prop_assert_eq!(b.ord_i, Order::Finite(chi));
    }

    #[test]
    fn shadow_json_round_trips(g in 1u32..5, c in 0u32..4) {
        let s = fig14_knot_shadow(g, c).unwrap();
        let back = Shadow::from_json(&s.to_json()).unwrap();
        prop_assert_eq!(&back, &s);
    }

    #[test]
    fn region_order_does_not_change_the_bracket(g in 1u32..4, seed in any::<u64>()) {
        let s = fig14_knot_shadow(g, 1).unwrap();
        let mut t = s.clone();
        let n = t.regions.len();
        t.regions.rotate_left((seed as usize) % n);
        prop_assert_eq!(bracket(&s, 8).unwrap().value, bracket(&t, 8).unwrap().value);
    }
}
