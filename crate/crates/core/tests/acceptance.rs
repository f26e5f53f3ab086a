use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use shadowbracket::builders::{self, atomic_cone, fig14_knot_shadow, surface_link_shadow, AtomicKind};
use shadowbracket::diagramc::corpus::{link_corpus, tet_diagram, theta_diagram, unknot, TREFOIL};
use shadowbracket::diagramc::{compile, from_pd, Diagram};
use shadowbracket::exactq::{HalfInt, Order, QPoly, QRat};
use shadowbracket::graphvals::{
    admissible_frames, admissible_triples, circle_eval, lemma49_check, tet_eval, theta_eval, ColorTriple, PlanarGraph,
    TetFrame,
};
use shadowbracket::qcombinat::{
    ord_closed_form, quantum_factorial, quantum_int, quantum_multinomial, ClosedForm, MultinomialSpec,
};
use shadowbracket::shadowcore::{audit_states, bracket, ribbon_report, RibbonTarget, Shadow};
use shadowbracket::skein::kauffman_bracket;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn qi(n: u32) -> QRat {
    QRat::from(quantum_int(n))
}

fn ac1() -> Outcome {
    let v = theta_eval(ColorTriple::new(2, 2, 2)).unwrap();
    let num = -(QPoly::from_q_terms(&[(3, 1), (1, 1), (-1, 1), (-3, 1)]) * QPoly::from_q_terms(&[(2, 1), (0, 1), (-2, 1)]));
    let den = QPoly::from_q_terms(&[(1, 1), (-1, 1)]).pow(2);
    check(v == QRat::new(num, den).unwrap(), format!("value {}", v.render()))?;
    check(v.ord_at_i() == Order::Finite(-1), format!("ord {}", v.ord_at_i()))?;
    Ok(format!("theta(2,2,2) = {}, ord -1", v.render()))
}

fn ac2() -> Outcome {
    let v = tet_eval(TetFrame::new([2; 6])).unwrap();
    let expected = QRat::from(quantum_factorial(4)) * (qi(5) - QRat::from(QPoly::one())) / qi(2).pow(6).unwrap();
    check(v == expected, format!("value {}", v.render()))?;
    // order by repeated exact division of numerator and denominator
    let (n, d) = v.clone().into_parts();
    let ord = n.x4_minus_i_multiplicity().unwrap() as i64 - d.x4_minus_i_multiplicity().unwrap() as i64;
    check(v.ord_at_i() == Order::Finite(ord), "ord_at_i disagrees with division count")?;
    check(ord == -2, format!("ord {ord}, frozen value is -2"))?;
    Ok(format!("tet(2^6) = [4]!([5]-1)/[2]^6, ord {ord} by division"))
}

fn ac3() -> Outcome {
    for g in 1..=6u32 {
        let s = fig14_knot_shadow(g, 1).unwrap();
        let b = bracket(&s, 17).unwrap();
        let gi = g as i64;
        let sign: i64 = if (1 - gi) % 2 == 0 { 1 } else { -1 };
        let expected = QRat::from(QPoly::x_pow(6 * gi) * QPoly::constant(sign)) * qi(4).pow(g as i32).unwrap()
            / qi(2).pow(2 * g as i32 - 1).unwrap();
        check(b.complete, format!("g={g}: incomplete"))?;
        check(b.value == expected, format!("g={g}: {}", b.value.render()))?;
        check(b.ord_i == Order::Finite(1 - gi), format!("g={g}: ord {}", b.ord_i))?;
        let r = ribbon_report(&b, RibbonTarget::Knot).unwrap();
        if g >= 2 {
            let want = format!("not ribbon; ribbon genus ≥ {}", g.div_ceil(2));
            check(r.summary == want, format!("g={g}: {}", r.summary))?;
        }
    }
    Ok("g = 1..6: closed form, ord 1-g, ribbon genus ≥ ⌈g/2⌉".into())
}

fn ac4() -> Outcome {
    let mut cases = 0;
    for n in [1u32, 2, 3, 5] {
        let circle = circle_eval(n);
        for chi in -3..=0i64 {
            for circles in [1usize, 2] {
                let s = surface_link_shadow(chi, &vec![n; circles]).unwrap();
                let b = bracket(&s, n + 16).unwrap();
                check(b.complete, "incomplete")?;
                check(b.value == circle.pow(chi as i32).unwrap(), format!("n={n} χ={chi}: {}", b.value.render()))?;
                if n % 2 == 1 {
                    check(b.ord_i == Order::Finite(chi), format!("n={n} χ={chi}: ord {}", b.ord_i))?;
                }
                cases += 1;
            }
        }
        let s = surface_link_shadow(-1, &[n, n + 2]).unwrap();
        let b = bracket(&s, n + 18).unwrap();
        check(b.value.is_zero() && b.states_evaluated == 0, "mismatched colors give a state")?;
    }
    Ok(format!("{cases} surfaces match ◯_n^χ; mismatched circle colors give 0"))
}

fn ac5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let triples = admissible_triples(10);
    let frames = admissible_frames(10);
    for k in 0..200 {
        let (cone, closed) = match k % 3 {
            0 => {
                let a = rng.gen_range(0..=10);
                (AtomicKind::Circle(a), circle_eval(a))
            }
            1 => {
                let t = triples[rng.gen_range(0..triples.len())];
                (AtomicKind::Theta(t), theta_eval(t).unwrap())
            }
            _ => {
                let fr = frames[rng.gen_range(0..frames.len())];
                (AtomicKind::Tet(fr), tet_eval(fr).unwrap())
            }
        };
        let s = atomic_cone(cone).unwrap();
        let b = bracket(&s, s.max_boundary_color() + 2).unwrap();
        check(b.value == closed, format!("{cone:?}: {} vs {}", b.value.render(), closed.render()))?;
    }
    Ok("200 cones (67 circle, 67 theta, 66 tet, uniform over admissible colorings ≤ 10) equal their closed forms".into())
}

fn random_spec(rng: &mut ChaCha8Rng) -> MultinomialSpec {
    let tops: Vec<u32> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(0..12)).collect();
    let mut left: u32 = tops.iter().sum();
    let mut bottoms = Vec::new();
    while left > 0 && bottoms.len() < 4 {
        let b = rng.gen_range(0..=left);
        bottoms.push(b);
        left -= b;
    }
    bottoms.push(left);
    MultinomialSpec::new(tops, bottoms).unwrap()
}

fn ac6() -> Outcome {
    for n in 0..=40 {
        let by_div = qi(n).ord_at_i();
        check(ord_closed_form(&ClosedForm::Int(n)) == by_div, format!("[{n}]"))?;
        let by_div = QRat::from(quantum_factorial(n)).ord_at_i();
        check(ord_closed_form(&ClosedForm::Factorial(n)) == by_div, format!("[{n}]!"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let s = random_spec(&mut rng);
        let by_div = quantum_multinomial(&s).ord_at_i();
        check(
            ord_closed_form(&ClosedForm::Multinomial(s.clone())) == by_div,
            format!("{:?}/{:?}", s.tops(), s.bottoms()),
        )?;
    }
    Ok("[n], [n]! for n ≤ 40 and 100 random multinomials".into())
}

fn ac7() -> Outcome {
    let triples = admissible_triples(20);
    for t in &triples {
        let r = lemma49_check(&PlanarGraph::Theta(*t)).unwrap();
        check(r.equal, format!("theta {t:?}: ord {} bound {}", r.ord, r.bound))?;
    }
    let frames = admissible_frames(8);
    let bad: Vec<(TetFrame, Order, HalfInt)> = frames
        .par_iter()
        .filter_map(|fr| {
            let r = lemma49_check(&PlanarGraph::Tet(*fr)).unwrap();
            (!r.holds).then_some((*fr, r.ord, r.bound))
        })
        .collect();
    check(bad.is_empty(), format!("{} tet frames below the bound, e.g. {:?}", bad.len(), bad.first()))?;
    Ok(format!(
        "{} theta triples (≤ 20) with equality, {} tet frames (≤ 8) above the bound",
        triples.len(),
        frames.len()
    ))
}

fn odd_product(v: &[u32]) -> QPoly {
    v.iter().map(|&x| quantum_int(x)).product()
}

fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let odd_tuple = |rng: &mut ChaCha8Rng| -> Vec<u32> { (0..rng.gen_range(1..4)).map(|_| 2 * rng.gen_range(0..8) + 1).collect() };
    let residue = |v: &[u32]| v.iter().map(|x| x - 1).sum::<u32>() % 4;
    let (mut good, mut bad) = (0, Vec::new());
    while good < 100 || bad.len() < 20 {
        let xs = odd_tuple(&mut rng);
        let ys = odd_tuple(&mut rng);
        let ord = QRat::from(odd_product(&xs) - odd_product(&ys)).ord_at_i();
        if residue(&xs) == residue(&ys) {
            if good < 100 {
                check(ord >= Order::Finite(2), format!("{xs:?} {ys:?}: ord {ord}"))?;
                good += 1;
            }
        } else if bad.len() < 20 {
            bad.push(ord);
        }
    }
    let at_least_one = bad.iter().filter(|o| **o >= Order::Finite(1)).count();
    let min = bad.iter().min().unwrap();
    Ok(format!(
        "100 congruent instances have ord ≥ 2; 20 non-congruent (not asserted): {at_least_one} with ord ≥ 1, min ord {min}"
    ))
}

fn compiled(d: &Diagram) -> Shadow {
    compile(d).unwrap().shadow
}

fn audit_corpus() -> Vec<(String, Shadow)> {
    let mut all = builders::corpus();
    for (name, d, _) in link_corpus() {
        all.push((format!("compiled {name}"), compiled(&d)));
    }
    all.push(("compiled theta 2 2 2".into(), compiled(&theta_diagram(2, 2, 2))));
    all.push(("compiled theta 1 2 3".into(), compiled(&theta_diagram(1, 2, 3))));
    all.push(("compiled tet 2^6".into(), compiled(&tet_diagram([2; 6]))));
    all.push(("compiled tet 1 1 2 1 1 2".into(), compiled(&tet_diagram([1, 1, 2, 1, 1, 2]))));
    let mut f = from_pd(&TREFOIL).unwrap().file().clone();
    f.colors.insert("1".into(), 3);
    all.push(("compiled trefoil colored 3".into(), compiled(&Diagram::new(f).unwrap())));
    all
}

fn ac9() -> Outcome {
    let mut states = 0;
    let mut min_slack: Option<HalfInt> = None;
    let corpus = audit_corpus();
    for (name, s) in &corpus {
        let b = bracket(s, s.max_boundary_color() + 16).unwrap();
        let a = audit_states(s, &b.colorings).unwrap();
        check(a.failures == 0, format!("{name}: {} failing states", a.failures))?;
        states += a.states;
        min_slack = match (min_slack, a.min_slack) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
    }
    let slack = min_slack.map_or("none".into(), |h| h.to_string());
    Ok(format!("{states} states over {} shadows satisfy ord ≥ χ(S) - r/2, min slack {slack}", corpus.len()))
}

fn ac10() -> Outcome {
    let mut summary = Vec::new();
    for (name, d, components) in link_corpus() {
        let sk = QRat::from(kauffman_bracket(&d).unwrap());
        let b = bracket(&compiled(&d), 17).unwrap();
        check(b.complete, format!("{name}: incomplete"))?;
        check(b.value == sk, format!("{name}: compiled {} vs skein {}", b.value.render(), sk.render()))?;
        let ord = b.ord_i.finite().unwrap();
        check(1 <= ord && ord <= components as i64, format!("{name}: ord {ord}, {components} components"))?;
        summary.push(format!("{name} {ord}"));
    }
    let flat = QRat::from(kauffman_bracket(&unknot(1)).unwrap());
    let monomials = [-QPoly::a_pow(3), -QPoly::a_pow(-3)].map(QRat::from);
    for name in ["unknot-kink+", "unknot-kink-"] {
        let d = link_corpus().into_iter().find(|c| c.0 == name).unwrap().1;
        let v = bracket(&compiled(&d), 17).unwrap().value;
        check(monomials.contains(&(v.clone() / flat.clone())), format!("{name}: ratio not ±A^±3"))?;
        check(v.ord_at_i() == flat.ord_at_i(), format!("{name}: kink changed ord"))?;
    }
    Ok(format!("compiled = skein, 1 ≤ ord ≤ #components ({})", summary.join(", ")))
}

fn ac11() -> Outcome {
    let mut checked = Vec::new();
    let mut run = |name: String, s: &Shadow| -> Result<(), String> {
        let b = bracket(s, s.max_boundary_color() + 16).unwrap();
        check(b.complete, format!("{name}: incomplete"))?;
        check(b.ord_i >= Order::Finite(1), format!("{name}: ord {}", b.ord_i))?;
        checked.push(name);
        Ok(())
    };
    for n in [1, 3, 5, 7] {
        run(format!("cone ◯{n}"), &atomic_cone(AtomicKind::Circle(n)).unwrap())?;
        run(format!("disc χ=1 n={n}"), &surface_link_shadow(1, &[n]).unwrap())?;
    }
    for (name, d, _) in link_corpus() {
        run(format!("compiled {name}"), &compiled(&d))?;
    }
    for (pd, colors) in [(TREFOIL.to_vec(), vec![("1", 3)]), (TREFOIL.to_vec(), vec![("1", 5)])] {
        let mut f = from_pd(&pd).unwrap().file().clone();
        for (arc, c) in &colors {
            f.colors.insert(arc.to_string(), *c);
        }
        run(format!("compiled trefoil colored {}", colors[0].1), &compiled(&Diagram::new(f).unwrap()))?;
    }
    let hopf = link_corpus().into_iter().find(|c| c.0 == "hopf").unwrap().1;
    let mut f = hopf.file().clone();
    f.colors.insert("1".into(), 3);
    run("compiled hopf colored 3,1".into(), &compiled(&Diagram::new(f).unwrap()))?;
    for (name, d, _) in link_corpus() {
        let ord = QRat::from(kauffman_bracket(&d).unwrap()).ord_at_i();
        check(ord >= Order::Finite(1), format!("skein {name}: ord {ord}"))?;
    }
    Ok(format!("{} odd-colored links in S³ and the skein corpus vanish at q = i", checked.len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
        ("AC11", ac11),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = std::time::Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("{name} PASS ({secs:.2}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("{name} FAIL ({secs:.2}s) {msg}");
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
