//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chord_census::counting::{
    chi_o_fixed, d_double_star, d_double_star_prime, d_n_class, d_o, d_o_prime, d_star, double_factorial,
    euler_phi, factorial, fix_uncolored, p_fixed_colored,
};
use chord_census::{
    diagram_to_spin_graph, enumerate_gluings, enumerate_o_gluings, spin_graph_to_diagram, surface_type,
    trace_cycles, BigUint, ColorDiagram, DiagramClass, Enumerator,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn ac1() -> Outcome {
    let expected = [3u64, 7, 35, 193, 1799, 19311, 254143, 3828921, 65486307, 1249937335];
    for (n, &want) in (2..=11).zip(&expected) {
        let got = d_double_star(n).map_err(|e| e.to_string())?;
        check(got == big(want), || format!("d**({n}) = {got}, expected {want}"))?;
    }
    Ok("d** for n = 2..11 matches".into())
}

fn ac2() -> Outcome {
    let expected = [2u64, 4, 10, 28, 136, 726, 5100, 40362, 363288, 3628810];
    for (n, &want) in (2..=11).zip(&expected) {
        let got = d_o(n).map_err(|e| e.to_string())?;
        check(got == big(want), || format!("d_o({n}) = {got}, expected {want}"))?;
    }
    Ok("d_o for n = 2..11 matches".into())
}

fn ac3() -> Outcome {
    let e = Enumerator::new();
    for n in 2..=9 {
        let census = e.orbit_census(n, DiagramClass::All, false).map_err(|e| e.to_string())?;
        let formula = d_double_star(n).map_err(|e| e.to_string())?;
        check(census.orbit_count == formula, || format!("n={n}: census {} vs d** {formula}", census.orbit_count))?;
    }
    Ok("census(All) = d** for n = 2..9".into())
}

fn ac4() -> Outcome {
    let e = Enumerator::new();
    for n in 2..=10 {
        let census = e.orbit_census(n, DiagramClass::O, false).map_err(|e| e.to_string())?;
        let formula = d_o(n).map_err(|e| e.to_string())?;
        check(census.orbit_count == formula, || format!("n={n}: census {} vs d_o {formula}", census.orbit_count))?;
    }
    Ok("census(O) = d_o for n = 2..10".into())
}

fn ac5() -> Outcome {
    let e = Enumerator::new();
    let mut checked = 0;
    for n in 1..=8 {
        for k in (2..=2 * n).step_by(2).filter(|k| (2 * n) % k == 0) {
            let m = k / 2;
            let all = e.count_fixed(n, k, DiagramClass::All).map_err(|e| e.to_string())?.count;
            let want = p_fixed_colored(n, m).map_err(|e| e.to_string())?;
            check(all == want, || format!("n={n} k={k}: All scan {all} vs formula {want}"))?;
            if n % m == 0 {
                let o = e.count_fixed(n, k, DiagramClass::O).map_err(|e| e.to_string())?.count;
                let want = chi_o_fixed(n, m).map_err(|e| e.to_string())?;
                check(o == want, || format!("n={n} k={k}: O scan {o} vs formula {want}"))?;
            }
            checked += 1;
        }
        let o2 = e.count_fixed(n, 2, DiagramClass::O).map_err(|e| e.to_string())?.count;
        check(o2 == big(n as u64), || format!("n={n}: O fixed by shift 2 is {o2}, expected {n}"))?;
    }
    Ok(format!("{checked} (n, k) pairs for n <= 8"))
}

fn ac6() -> Outcome {
    for p in [3, 5, 7, 11, 13] {
        let (a, b) = (d_double_star_prime(p), d_double_star(p));
        check(a == b, || format!("p={p}: d** shortcut {a:?} vs {b:?}"))?;
        let (a, b) = (d_o_prime(p), d_o(p));
        check(a == b, || format!("p={p}: d_o shortcut {a:?} vs {b:?}"))?;
    }
    Ok("p in {3, 5, 7, 11, 13}".into())
}

fn ac7() -> Outcome {
    for n in 1..=9 {
        let all = enumerate_gluings(n).count();
        let want = double_factorial(2 * n as i64 - 1).map_err(|e| e.to_string())?;
        check(big(all as u64) == want, || format!("n={n}: {all} gluings, expected {want}"))?;
        let o = enumerate_o_gluings(n).count();
        check(big(o as u64) == factorial(n as u64), || format!("n={n}: {o} O-gluings"))?;
    }
    Ok("(2n-1)!! and n! for n <= 9".into())
}

fn ac8() -> Outcome {
    let d: ColorDiagram = "(1,8)(2,4)(3,7)(5,12)(6,9)(10,11)".parse().map_err(|e: chord_census::Error| e.to_string())?;
    let dec = trace_cycles(&d);
    let arcs = |c: &chord_census::Cycle| c.arcs().collect::<Vec<_>>();
    let expected_black = [vec![(1, 2), (4, 3), (7, 8)], vec![(5, 6), (9, 10), (11, 12)]];
    let expected_white = [vec![(2, 3), (7, 6), (9, 8), (1, 12), (5, 4)], vec![(10, 11)]];
    check(dec.lambda() == (2, 2), || format!("lambda = {:?}", dec.lambda()))?;
    for (got, want) in dec.black.iter().zip(&expected_black).chain(dec.white.iter().zip(&expected_white)) {
        check(&arcs(got) == want, || format!("cycle {got} has arcs {:?}, expected {want:?}", arcs(got)))?;
    }
    let text = dec.to_string();
    let want = "Cb1=[1,2](2,4)[4,3](3,7)[7,8](8,1)\nCb2=[5,6](6,9)[9,10](10,11)[11,12](12,5)\n\
                Cw1=[2,3](3,7)[7,6](6,9)[9,8](8,1)[1,12](12,5)[5,4](4,2)\nCw2=[10,11](11,10)\n";
    check(text == want, || format!("decomposition text differs:\n{text}"))?;
    Ok("lambda(2,2) = 4 with matching arcs and chords".into())
}

fn ac9() -> Outcome {
    let mut diagrams = 0;
    for n in 1..=6 {
        for g in enumerate_gluings(n) {
            let d = ColorDiagram::new(g.clone());
            let ours = common::traced_corner_sets(&d);
            let theirs = common::boundary_walk(&g);
            check(ours == theirs, || format!("{g}: traced {ours:?} vs walk {theirs:?}"))?;
            let s = surface_type(&d).map_err(|e| e.to_string())?;
            let b = theirs.len() as i64;
            let chi = 1 - n as i64;
            let ok = if s.orientable { 2 - 2 * s.genus as i64 - b == chi } else { 2 - s.genus as i64 - b == chi };
            check(ok && s.euler_characteristic == chi && s.boundary_components == theirs.len(), || {
                format!("{g}: surface {s:?} inconsistent with b={b}")
            })?;
            diagrams += 1;
        }
    }
    Ok(format!("{diagrams} diagrams with n <= 6"))
}

fn ac10() -> Outcome {
    let e = Enumerator::new();
    for n in 1..=8 {
        for class in [DiagramClass::All, DiagramClass::O, DiagramClass::N] {
            let sum: BigUint = (1..=n)
                .map(|m| e.count_fixed(n, 2 * m, class).map(|f| f.count))
                .sum::<chord_census::Result<BigUint>>()
                .map_err(|e| e.to_string())?;
            let orbits = e.orbit_census(n, class, false).map_err(|e| e.to_string())?.orbit_count;
            check(sum == &orbits * big(n as u64), || format!("n={n} {class}: sum {sum} vs {n} x {orbits}"))?;
        }
    }
    // closed-form sums, recomputed here so the remainder is visible
    for n in 1..=40u64 {
        let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        let all: BigUint = divisors
            .iter()
            .map(|&m| big(euler_phi(n / m)) * p_fixed_colored(n as usize, m as usize).unwrap())
            .sum();
        let o: BigUint = divisors
            .iter()
            .map(|&i| big(euler_phi(n / i)) * chi_o_fixed(n as usize, i as usize).unwrap())
            .sum();
        let uncolored: BigUint = (1..=2 * n)
            .filter(|k| (2 * n) % k == 0)
            .map(|k| big(euler_phi(2 * n / k)) * fix_uncolored(n as usize, k as usize).unwrap())
            .sum();
        let zero = big(0);
        check(&all % big(n) == zero && &o % big(n) == zero && &uncolored % big(2 * n) == zero, || {
            format!("n={n}: Burnside sum not divisible")
        })?;
        d_n_class(n as usize).map_err(|e| e.to_string())?;
    }
    Ok("fixed-point sums equal n x orbits for n <= 8; closed forms divisible for n <= 40".into())
}

fn ac11() -> Outcome {
    let mut diagrams = 0;
    for n in 1..=4 {
        for g in enumerate_gluings(n) {
            let d = ColorDiagram::new(g.clone());
            let spin = diagram_to_spin_graph(&d);
            let back = spin_graph_to_diagram(&spin);
            check(back == d, || format!("{g}: round trip gave {back}"))?;
            check(diagram_to_spin_graph(&back) == spin, || format!("{g}: spin graph changed"))?;
            if d.classify() == DiagramClass::O {
                check(spin.has_odd_loop_positions(), || format!("{g}: O-diagram fails the parity condition"))?;
            }
            diagrams += 1;
        }
    }
    Ok(format!("{diagrams} diagrams with n <= 4"))
}

fn ac12() -> Outcome {
    let e = Enumerator::new();
    let mut values = Vec::new();
    for n in 1..=7 {
        let census = e.uncolored_census(n, false).map_err(|e| e.to_string())?.orbit_count;
        let formula = d_star(n).map_err(|e| e.to_string())?;
        check(census == formula, || format!("n={n}: census {census} vs d* {formula}"))?;
        values.push(census.to_string());
    }
    Ok(format!("d* = {} for n = 1..7", values.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC1 colored table", ac1, Some(Duration::from_secs(1))),
        ("AC2 O-diagram table", ac2, Some(Duration::from_secs(1))),
        ("AC3 census All = d** (n <= 9)", ac3, Some(Duration::from_secs(300))),
        ("AC4 census O = d_o (n <= 10)", ac4, Some(Duration::from_secs(60))),
        ("AC5 fixed-point formulas", ac5, None),
        ("AC6 prime shortcuts", ac6, None),
        ("AC7 stream cardinalities", ac7, None),
        ("AC8 cycle example", ac8, None),
        ("AC9 ribbon-graph oracle", ac9, Some(Duration::from_secs(30))),
        ("AC10 Burnside consistency", ac10, None),
        ("AC11 spin-graph round trip", ac11, None),
        ("AC12 uncolored census = d*", ac12, None),
    ];
    let mut failures = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {name} [{elapsed:.2?}] {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL {name} [{elapsed:.2?}] {why}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
