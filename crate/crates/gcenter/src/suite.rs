//! Every invariant suite on one category, as a flat list of named checks.

use std::time::Instant;

use serde::Serialize;

use crate::braiding::{braiding_checks, gamma_checks, ribbon_checks, Braided};
use crate::category::{validate, Category, Check, FusionData, Obj};
use crate::center::{self, HalfBraiding};
use crate::coend::{build_coend, coend_checks, CoendCheckOptions};
use crate::crossing::{crossing_checks, omega_checks};
use crate::error::Result;
use crate::monad::monad_checks;

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// every `n`-th center simple enters the multi-object identities
    pub multi_step: usize,
    /// representatives per grade for the independence identities
    pub reps: usize,
    pub coend: bool,
    /// coend relation on a composite object, for every `(α, β)`
    pub coend_composite: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { multi_step: 3, reps: 2, coend: true, coend_composite: true }
    }
}

impl SuiteOptions {
    /// Lighter sampling once the category has many simples.
    pub fn for_rank(rank: usize) -> Self {
        if rank > 6 {
            SuiteOptions { multi_step: 8, reps: 2, coend: true, coend_composite: false }
        } else {
            SuiteOptions::default()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteCheck {
    pub suite: String,
    pub axiom: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub ok: bool,
    pub checks: Vec<SuiteCheck>,
    pub seconds: Vec<(String, f64)>,
}

impl SuiteReport {
    pub fn failures(&self) -> Vec<&SuiteCheck> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }

    pub fn suite_ok(&self, suite: &str) -> bool {
        self.checks.iter().filter(|c| c.suite == suite).all(|c| c.ok)
    }
}

struct Collector {
    checks: Vec<SuiteCheck>,
    seconds: Vec<(String, f64)>,
    t: Instant,
}

impl Collector {
    fn add(&mut self, suite: &str, checks: Vec<Check>) {
        for ch in checks {
            self.checks.push(SuiteCheck { suite: suite.into(), axiom: ch.axiom, ok: ch.ok, detail: ch.detail });
        }
        self.seconds.push((suite.into(), self.t.elapsed().as_secs_f64()));
        self.t = Instant::now();
    }
}

fn half_braiding_checks(c: &Category, simples: &[HalfBraiding], labels: &[String]) -> Result<Vec<Check>> {
    let mut f = Vec::new();
    for alpha in 0..c.data.group.size {
        for i in 0..c.rank() {
            let hb = center::free_object(c, alpha, &c.simple(i))?;
            if let Err(e) = center::check_half_braiding(c, &hb) {
                f.push(format!("F_{alpha}({}): {e}", c.data.labels[i]));
            }
        }
    }
    let free = Check::from_failures("free-objects", f);
    let mut f = Vec::new();
    for (hb, l) in simples.iter().zip(labels) {
        if let Err(e) = center::check_half_braiding(c, hb) {
            f.push(format!("{l}: {e}"));
        }
    }
    Ok(vec![free, Check::from_failures("center-simples", f)])
}

/// Runs category, half-braiding, monad, crossing, braiding, ribbon and
/// coend suites. Stops early only when the data fail validation.
pub fn run_suite(data: FusionData, opts: SuiteOptions) -> Result<SuiteReport> {
    let name = data.name.clone();
    let mut col = Collector { checks: Vec::new(), seconds: Vec::new(), t: Instant::now() };
    let rep = validate(&data, true);
    let valid = rep.ok();
    col.add("category", rep.checks);
    if !valid {
        return Ok(SuiteReport { name, ok: false, checks: col.checks, seconds: col.seconds });
    }
    let c = Category::new(data)?;
    let simples = center::all_simples(&c)?;
    let hbs: Vec<HalfBraiding> = simples.iter().map(|s| s.hb.clone()).collect();
    let labels: Vec<String> = simples.iter().map(|s| s.label.clone()).collect();
    col.add("half-braiding", half_braiding_checks(&c, &hbs, &labels)?);
    col.add("monad", monad_checks(&c)?);
    let br = Braided::new(&c)?;
    let few: Vec<HalfBraiding> = hbs.iter().step_by(opts.multi_step.max(1)).cloned().collect();
    let xs: Vec<Obj> = (0..c.rank()).map(|i| c.simple(i)).collect();
    let mut cr_checks = crossing_checks(&br.cr, &hbs, &few, opts.reps)?;
    cr_checks.extend(omega_checks(&br.cr, &xs)?);
    col.add("crossing", cr_checks);
    let mut b = braiding_checks(&br, &few)?;
    b.extend(gamma_checks(&br, &hbs, &few, &xs, opts.reps)?);
    col.add("braiding", b);
    col.add("ribbon", ribbon_checks(&br, &simples, &xs)?);
    if opts.coend {
        let n = c.data.group.size;
        let mut all = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let co = build_coend(&c, a, b)?;
                // one composite relation per category at least
                let composite = opts.coend_composite || (a + 1 == n && b + 1 == n);
                let o = CoendCheckOptions { composite, decomposition: true };
                for mut ch in coend_checks(&c, &co, o)? {
                    ch.axiom = format!("{} ({a},{b})", ch.axiom);
                    all.push(ch);
                }
            }
        }
        col.add("coend", all);
    }
    let ok = col.checks.iter().all(|c| c.ok);
    Ok(SuiteReport { name, ok, checks: col.checks, seconds: col.seconds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn toric_code_suite() {
        let r = run_suite(examples::named("z2_to_1").unwrap(), SuiteOptions::default()).unwrap();
        for ch in r.failures() {
            panic!("{} {}: {}", ch.suite, ch.axiom, ch.detail);
        }
        assert!(r.ok);
        assert!(r.checks.len() > 30);
    }

    #[test]
    fn invalid_data_stop_early() {
        let mut d = examples::named("id_z2").unwrap();
        d.fusion[1][1][0] = 2;
        let r = run_suite(d, SuiteOptions::default()).unwrap();
        assert!(!r.ok);
        assert!(r.checks.iter().all(|c| c.suite == "category"));
    }
}
