//! Independent reference implementations used to cross-check the library.
//! None of these go through the partner-table kernels the library uses.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use chord_census::{ArcColor, ColorDiagram, DiagramClass, Gluing};

/// Rotation by conjugating the matching with the cyclic shift
/// `sigma(d) = d + k`, read back through `normalize`.
pub fn rotate_by_conjugation(g: &Gluing, k: usize) -> Gluing {
    let points = g.points();
    let sigma = |d: usize| (d - 1 + k) % points + 1;
    let pairs: Vec<_> = g.chords().map(|(a, b)| (sigma(a), sigma(b))).collect();
    Gluing::normalize(&pairs).unwrap()
}

/// Orbit count by collecting explicit orbit minima in a hash set.
pub fn hash_set_census(n: usize, class: DiagramClass, step: usize) -> usize {
    let mut seen = HashSet::new();
    for g in all_matchings(n) {
        if !class.contains(&g) {
            continue;
        }
        let least = (step..=2 * n)
            .step_by(step)
            .map(|k| rotate_by_conjugation(&g, k))
            .min()
            .unwrap();
        seen.insert(least);
    }
    seen.len()
}

/// All perfect matchings of `1..=2n` by plain recursion on the least
/// unmatched point (no relation to the library's walker).
pub fn all_matchings(n: usize) -> Vec<Gluing> {
    fn go(free: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Gluing>) {
        if free.is_empty() {
            out.push(Gluing::normalize(acc).unwrap());
            return;
        }
        let a = free[0];
        for i in 1..free.len() {
            let rest: Vec<_> = free[1..].iter().copied().filter(|&x| x != free[i]).collect();
            acc.push((a, free[i]));
            go(&rest, acc, out);
            acc.pop();
        }
    }
    let free: Vec<_> = (1..=2 * n).collect();
    let mut out = Vec::new();
    go(&free, &mut Vec::new(), &mut out);
    out
}

/// Boundary components of the ribbon graph with one vertex whose rotation
/// is `1, 2, ..., 2n` and whose loops are the chords, a loop being twisted
/// when its ends have equal parity.
///
/// Faces are traced on states `(half-edge, orientation)`: cross the loop,
/// flip the orientation on a twisted loop, then step to the next half-edge
/// in the rotation (or its inverse). Every face shows up as two mutually
/// reverse state cycles. Each face is returned as its set of corners, a
/// corner being named by its clockwise start point.
pub fn boundary_walk(g: &Gluing) -> Vec<BTreeSet<usize>> {
    let points = g.points();
    let index = |h: usize, forward: bool| 2 * (h - 1) + forward as usize;
    let mut visited = vec![false; 2 * points];
    let mut faces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut cycles = 0;
    for h0 in 1..=points {
        for f0 in [true, false] {
            if visited[index(h0, f0)] {
                continue;
            }
            cycles += 1;
            let mut corners = BTreeSet::new();
            let (mut h, mut forward) = (h0, f0);
            while !visited[index(h, forward)] {
                visited[index(h, forward)] = true;
                let other = g.partner(h);
                if (h + other) % 2 == 0 {
                    forward = !forward;
                }
                let next = if forward { other % points + 1 } else { (other + points - 2) % points + 1 };
                corners.insert(if forward { other } else { next });
                h = next;
            }
            faces.insert(corners);
        }
    }
    assert_eq!(cycles, 2 * faces.len(), "faces must pair up with their reverses");
    faces.into_iter().collect()
}

/// Corner sets of the library's traced cycles, for comparison with
/// [`boundary_walk`].
pub fn traced_corner_sets(d: &ColorDiagram) -> Vec<BTreeSet<usize>> {
    let dec = chord_census::trace_cycles(d);
    let points = d.gluing().points();
    let mut sets: Vec<BTreeSet<usize>> = dec
        .black
        .iter()
        .chain(dec.white.iter())
        .map(|c| {
            c.arcs()
                .map(|(from, to)| if to == from % points + 1 { from } else { to })
                .collect()
        })
        .collect();
    sets.sort();
    sets
}

pub fn corner_color(start: usize) -> ArcColor {
    ArcColor::of_arc_from(start)
}

/// `gcd(a, b)`.
pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
