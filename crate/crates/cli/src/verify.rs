//! Closed-form counts checked against brute force, with optional seeded
//! mutations so the check itself can be tested.

use chord_census::counting::{
    self, chi_o_fixed, d_double_star, d_double_star_prime, d_n_class, d_o, d_o_prime, d_star, fix_uncolored,
    p_fixed_colored,
};
use chord_census::{BigUint, DiagramClass, Enumerator, Result};
use clap::ValueEnum;
use serde::Serialize;

/// A formula to perturb by one, for mutation smoke tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mutation {
    DDoubleStar,
    #[value(name = "d-o")]
    DO,
    #[value(name = "d-n")]
    DN,
    DStar,
    PFixed,
    ChiO,
    FixUncolored,
    DDoubleStarPrime,
    #[value(name = "d-o-prime")]
    DOPrime,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub n: usize,
    pub name: String,
    #[serde(serialize_with = "chord_census::serde_big::serialize")]
    pub formula: BigUint,
    #[serde(serialize_with = "chord_census::serde_big::serialize")]
    pub brute_force: BigUint,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub from: usize,
    pub to: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

struct Verifier {
    enumerator: Enumerator,
    mutation: Option<Mutation>,
    checks: Vec<Check>,
}

impl Verifier {
    fn formula(&self, which: Mutation, value: Result<BigUint>) -> Result<BigUint> {
        let v = value?;
        Ok(if self.mutation == Some(which) { v + 1u32 } else { v })
    }

    fn record(&mut self, n: usize, name: String, formula: BigUint, brute_force: BigUint) {
        let passed = formula == brute_force;
        self.checks.push(Check { n, name, formula, brute_force, passed });
    }

    fn run_size(&mut self, n: usize) -> Result<()> {
        let e = self.enumerator;
        let census = |class| e.orbit_census(n, class, false).map(|c| c.orbit_count);

        let f = self.formula(Mutation::DDoubleStar, d_double_star(n))?;
        self.record(n, "d_double_star".into(), f, census(DiagramClass::All)?);
        let f = self.formula(Mutation::DO, d_o(n))?;
        self.record(n, "d_o".into(), f, census(DiagramClass::O)?);
        let f = self.formula(Mutation::DN, d_n_class(n))?;
        self.record(n, "d_n".into(), f, census(DiagramClass::N)?);
        let f = self.formula(Mutation::DStar, d_star(n))?;
        self.record(n, "d_star".into(), f, e.uncolored_census(n, false)?.orbit_count);

        let all = e.fixed_point_profile(n, DiagramClass::All)?;
        let o = e.fixed_point_profile(n, DiagramClass::O)?;
        for m in (1..=n).filter(|m| n.is_multiple_of(*m)) {
            let f = self.formula(Mutation::PFixed, p_fixed_colored(n, m))?;
            self.record(n, format!("p_fixed_colored(m={m})"), f, all[m - 1].clone());
            let f = self.formula(Mutation::ChiO, chi_o_fixed(n, m))?;
            self.record(n, format!("chi_o_fixed(i={m})"), f, o[m - 1].clone());
        }
        for k in (1..=2 * n).filter(|k| (2 * n).is_multiple_of(*k)) {
            let f = self.formula(Mutation::FixUncolored, fix_uncolored(n, k))?;
            self.record(n, format!("fix_uncolored(k={k})"), f, e.count_fixed_any(n, k, DiagramClass::All)?);
        }
        if n >= 3 && counting::is_prime(n as u64) {
            let f = self.formula(Mutation::DDoubleStarPrime, d_double_star_prime(n))?;
            self.record(n, "d_double_star_prime".into(), f, census(DiagramClass::All)?);
            let f = self.formula(Mutation::DOPrime, d_o_prime(n))?;
            self.record(n, "d_o_prime".into(), f, census(DiagramClass::O)?);
        }
        Ok(())
    }
}

/// Runs every check for `from..=to`. Budget errors abort the run.
pub fn verify(enumerator: Enumerator, from: usize, to: usize, mutation: Option<Mutation>) -> Result<Report> {
    if from == 0 || from > to {
        return Err(chord_census::Error::InvalidRange { from, to });
    }
    let mut v = Verifier { enumerator, mutation, checks: Vec::new() };
    for n in from..=to {
        v.run_size(n)?;
    }
    let passed = v.checks.iter().all(|c| c.passed);
    Ok(Report { from, to, checks: v.checks, passed })
}
