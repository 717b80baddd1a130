//! The coend `C_{α,β} = ∫^{Y∈C_β} Z_α(Y)*⊗Y` with its `Z₁`-action
//! `r_{α,β}` and half braiding `σ^{α,β} = (id⊗r)∂¹`.

use serde::Serialize;

use crate::category::{Category, Check, Mor, Obj, WMor};
use crate::center::{self, HalfBraiding};
use crate::crossing::Crossing;
use crate::error::{Error, Result};
use crate::monad::{antipode_l, eta, mu, partial, z1_mor, z2_comonoidal, z_inj, z_mor, z_mul, z_obj};

/// A direct sum with its injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub obj: Obj,
    pub inj: Vec<Mor>,
    pub proj: Vec<Mor>,
}

pub fn direct_sum(c: &Category, parts: &[Obj]) -> DirectSum {
    let mut obj = c.zero_obj();
    let mut offsets = Vec::new();
    for p in parts {
        offsets.push(obj.mult.clone());
        obj = obj.direct_sum(p);
    }
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    for (p, off) in parts.iter().zip(&offsets) {
        let mut m = c.zero_mor(p, &obj);
        for k in p.support() {
            for a in 0..p.mult[k] {
                m.blocks[k].set(off[k] + a, a, c.one());
            }
        }
        let mut t = c.zero_mor(&obj, p);
        for (k, b) in m.blocks.iter().enumerate() {
            t.blocks[k] = b.transpose();
        }
        inj.push(m);
        proj.push(t);
    }
    DirectSum { obj, inj, proj }
}

#[derive(Clone, Debug)]
pub struct CoendObject {
    pub alpha: usize,
    pub beta: usize,
    /// summands `(i, j)` of `⊕ i*⊗j*⊗i⊗j`
    pub pairs: Vec<(usize, usize)>,
    pub sum: DirectSum,
    /// `r_{α,β}: Z₁(C) → C`
    pub action: Mor,
    pub hb: HalfBraiding,
}

impl CoendObject {
    pub fn obj(&self) -> &Obj {
        &self.sum.obj
    }

    /// `ι_{ij}: [i*, j*, i, j] → [C]`
    fn iota(&self, c: &Category, n: usize) -> WMor {
        let (i, j) = self.pairs[n];
        let (si, sj) = (c.simple(i), c.simple(j));
        let w = vec![c.dual_obj(&si), c.dual_obj(&sj), si, sj];
        let m = self.sum.inj[n].compose(&c.fuse(&w).mor).expect("iota");
        c.wrap(&w, &[self.sum.obj.clone()], m)
    }

    /// `ϱ_Y: Z_α(Y)*⊗Y → C` for `Y` of grade `β`.
    pub fn varrho(&self, c: &Category, y: &Obj) -> Result<WMor> {
        let img = z_obj(c, self.alpha, y);
        let zd = c.dual_obj(&img.output);
        let src = vec![zd, y.clone()];
        let mut acc = c.wzero(&src, &[self.sum.obj.clone()]);
        let parts = c.i_partition(y);
        let mut by_i: Vec<(usize, WMor)> = Vec::new();
        for (n, &(i, j)) in self.pairs.iter().enumerate() {
            let si = c.simple(i);
            let sid = c.dual_obj(&si);
            let sj = c.simple(j);
            let mid = vec![sid.clone(), c.dual_obj(y), si.clone(), y.clone()];
            if by_i.last().map_or(true, |e| e.0 != i) {
                by_i.push((i, c.wzero(&mid, &[self.sum.obj.clone()])));
            }
            for part in parts.iter().filter(|t| t.simple == j) {
                let q = c.wrap(&[sj.clone()], &[y.clone()], part.q.clone());
                let p = c.wrap(&[y.clone()], &[sj.clone()], part.p.clone());
                let legs = c.tens_all(&[&c.wid(&[sid.clone()]), &c.dual_mor(&q), &c.atom(&c.phi_inv(&si)), &p]);
                let t = c.comp(&self.iota(c, n), &legs)?;
                let e = by_i.last_mut().expect("entry");
                e.1 = c.wadd(&e.1, &t)?;
            }
        }
        for (i, m) in by_i {
            let dinj = c.dual_mor(&z_inj(c, &img, i));
            let t = c.comp(&m, &c.tens(&dinj, &c.wid(&[y.clone()])))?;
            acc = c.wadd(&acc, &t)?;
        }
        Ok(acc)
    }

    /// Right-hand side of the defining relation of `r_{α,β}` at `Y`:
    /// `ϱ_{Z₁(Y)}(Z₂(α,1)_Y* s^l_{Z_α(Y)} Z₁(Z₂(1,α)_Y*) ⊗ id)(Z₁)₂(Z_α(Y)*, Y)`.
    pub fn defining_rhs(&self, c: &Category, y: &Obj) -> Result<Mor> {
        let one = c.data.group.unit;
        let a = self.alpha;
        let za = z_obj(c, a, y).output;
        let zad = c.dual_obj(&za);
        let co = z2_comonoidal(c, one, &zad, y);
        let m1 = z1_mor(c, &c.dual_atom(&z_mul(c, one, a, y)));
        let m2 = antipode_l(c, &za)?;
        let m3 = c.dual_atom(&z_mul(c, a, one, y));
        let left = m3.compose(&m2)?.compose(&m1)?;
        let z1y = z_obj(c, one, y).output;
        let mid = c.tens(&c.atom(&left), &c.wid(&[z1y.clone()]));
        let rest = self.varrho(c, &z1y)?;
        Ok(c.seq(&[&co, &mid, &rest])?.mor)
    }

    /// `r_{α,β}Z₁(ϱ_Y)`
    pub fn defining_lhs(&self, c: &Category, y: &Obj) -> Result<Mor> {
        let v = self.varrho(c, y)?;
        self.action.compose(&z1_mor(c, &v.mor))
    }
}

/// `C_{α,β}` with `r_{α,β}` determined by its defining relation on the
/// simples of grade `β`, through `id_C = Σ_j ϱ_j(…)`.
pub fn build_coend(c: &Category, alpha: usize, beta: usize) -> Result<CoendObject> {
    let mut pairs = Vec::new();
    let mut parts = Vec::new();
    for i in c.data.simples_of_grade(alpha) {
        for j in c.data.simples_of_grade(beta) {
            let (si, sj) = (c.simple(i), c.simple(j));
            pairs.push((i, j));
            parts.push(c.comb(&[c.dual_obj(&si), c.dual_obj(&sj), si, sj]));
        }
    }
    let sum = direct_sum(c, &parts);
    let mut co = CoendObject {
        alpha,
        beta,
        pairs,
        sum: sum.clone(),
        action: c.zero_mor(&z_obj(c, c.data.group.unit, &sum.obj).output, &sum.obj),
        hb: HalfBraiding { a: sum.obj.clone(), sigma: Vec::new() },
    };
    let js = c.data.simples_of_grade(beta);
    let sources: Vec<Obj> = js
        .iter()
        .map(|&j| {
            let sj = c.simple(j);
            c.tensor(&c.dual_obj(&z_obj(c, alpha, &sj).output), &sj)
        })
        .collect();
    let d = direct_sum(c, &sources);
    let mut phi = c.zero_mor(&d.obj, &sum.obj);
    let mut rhs = c.zero_mor(&z_obj(c, c.data.group.unit, &d.obj).output, &sum.obj);
    for (n, &j) in js.iter().enumerate() {
        let sj = c.simple(j);
        phi = phi.add(&co.varrho(c, &sj)?.mor.compose(&d.proj[n])?)?;
        rhs = rhs.add(&co.defining_rhs(c, &sj)?.compose(&z1_mor(c, &d.proj[n]))?)?;
    }
    let phi_inv = phi.inverse().map_err(|_| Error::Internal("the coend cone is not an isomorphism".into()))?;
    co.action = rhs.compose(&z1_mor(c, &phi_inv))?;
    let mut sigma = Vec::new();
    for k in c.neutral_simples() {
        let sk = c.simple(k);
        let d1 = partial(c, c.data.group.unit, &sum.obj, &[sk.clone()])?;
        let r = c.whisker(&[sk], &c.atom(&co.action), &[]);
        sigma.push(c.comp(&r, &d1)?.mor);
    }
    co.hb.sigma = sigma;
    Ok(co)
}

/// Multiplicities of `(C_{α,β}, σ)` against the center simples, next to the
/// same numbers for `⊕_{A∈Z_β} φ_α(A)*⊗A`.
#[derive(Clone, Debug, Serialize)]
pub struct CoendDecomposition {
    pub labels: Vec<String>,
    pub multiplicities: Vec<usize>,
    pub expected: Vec<usize>,
}

pub fn decomposition(c: &Category, co: &CoendObject) -> Result<CoendDecomposition> {
    let simples = center::all_simples(c)?;
    let cr = Crossing::new(c)?;
    let mut integrand = Vec::new();
    for a in simples.iter().filter(|s| s.grade == co.beta) {
        let img = cr.phi(co.alpha, &a.hb)?;
        integrand.push(center::hb_tensor(c, &center::hb_dual(c, &img.gamma)?, &a.hb)?);
    }
    let mut multiplicities = Vec::new();
    let mut expected = Vec::new();
    for s in &simples {
        multiplicities.push(center::center_hom_basis(c, &s.hb, &co.hb)?.len());
        let mut e = 0;
        for t in &integrand {
            e += center::center_hom_basis(c, &s.hb, t)?.len();
        }
        expected.push(e);
    }
    Ok(CoendDecomposition { labels: simples.iter().map(|s| s.label.clone()).collect(), multiplicities, expected })
}

/// Test objects of grade `β`: the simples, then sums of two of them.
pub fn grade_objects(c: &Category, beta: usize) -> Vec<Obj> {
    let js = c.data.simples_of_grade(beta);
    let mut out: Vec<Obj> = js.iter().map(|&j| c.simple(j)).collect();
    for (n, &a) in js.iter().enumerate() {
        for &b in &js[n..] {
            out.push(c.simple(a).direct_sum(&c.simple(b)));
        }
    }
    out
}

#[derive(Clone, Copy, Debug)]
pub struct CoendCheckOptions {
    /// also test the defining relation on one sum of two simples
    pub composite: bool,
    pub decomposition: bool,
}

impl Default for CoendCheckOptions {
    fn default() -> Self {
        CoendCheckOptions { composite: true, decomposition: true }
    }
}

/// Grade, action laws, half braiding, the defining relation, dinaturality of
/// `ϱ`, and the decomposition.
pub fn coend_checks(c: &Category, co: &CoendObject, opts: CoendCheckOptions) -> Result<Vec<Check>> {
    let g = &c.data.group;
    let mut out = Vec::new();
    let want = g.commutator(co.alpha, co.beta);
    let got = c.grade_of(co.obj());
    out.push(Check::from_failures(
        "coend-grade-commutator",
        if got == Some(want) { vec![] } else { vec![format!("grade {got:?}, commutator {want}")] },
    ));
    let x = co.obj();
    let r = &co.action;
    let mut f = Vec::new();
    if !r.compose(&eta(c, x))?.is_identity() {
        f.push("r eta != id".to_string());
    }
    if r.compose(&z1_mor(c, r))? != r.compose(&mu(c, x))? {
        f.push("r Z(r) != r mu".to_string());
    }
    out.push(Check::from_failures("coend-action", f));
    let mut f = Vec::new();
    if let Err(e) = center::check_half_braiding(c, &co.hb) {
        f.push(e.to_string());
    }
    if center::action(c, &co.hb)? != *r {
        f.push("action of the half braiding differs from r".into());
    }
    out.push(Check::from_failures("coend-half-braiding", f));
    let ys = grade_objects(c, co.beta);
    let n_simple = c.data.simples_of_grade(co.beta).len();
    let mut rel: Vec<&Obj> = ys[..n_simple].iter().collect();
    if opts.composite {
        // prefer a sum of two different simples
        let pick = if n_simple > 1 { n_simple + 1 } else { n_simple };
        rel.push(&ys[pick]);
    }
    let mut f = Vec::new();
    for y in rel {
        if co.defining_lhs(c, y)? != co.defining_rhs(c, y)? {
            f.push(format!("Y = {}", c.label(y)));
        }
    }
    out.push(Check::from_failures("coend-defining-relation", f));
    let mut f = Vec::new();
    for y in &ys {
        for y2 in &ys {
            for (n, h) in Mor::hom_basis(c.order(), y, y2).into_iter().enumerate() {
                let l = c.comp(&co.varrho(c, y2)?, &c.tens(&c.wid(&[c.dual_obj(&z_obj(c, co.alpha, y2).output)]), &c.atom(&h)))?;
                let za = c.atom(&z_mor(c, co.alpha, &h));
                let rr = c.comp(&co.varrho(c, y)?, &c.tens(&c.dual_mor(&za), &c.wid(&[y.clone()])))?;
                if l != rr {
                    f.push(format!("basis map {n} from {} to {}", c.label(y), c.label(y2)));
                }
            }
        }
    }
    out.push(Check::from_failures("coend-dinaturality", f));
    if opts.decomposition {
        let d = decomposition(c, co)?;
        let f = (0..d.labels.len())
            .filter(|&n| d.multiplicities[n] != d.expected[n])
            .map(|n| format!("{}: {} vs {}", d.labels[n], d.multiplicities[n], d.expected[n]))
            .collect();
        out.push(Check::from_failures("coend-decomposition", f));
    }
    Ok(out)
}

/// The unique `f` with `f∘ϱ_j = ν_j` for every simple `j` of grade `β`,
/// given a cone `ν_j: Z_α(j)*⊗j → T`.
pub fn factor(c: &Category, co: &CoendObject, nu: &dyn Fn(&Obj) -> Result<Mor>) -> Result<Mor> {
    let js = c.data.simples_of_grade(co.beta);
    let sources: Vec<Obj> = js
        .iter()
        .map(|&j| {
            let sj = c.simple(j);
            c.tensor(&c.dual_obj(&z_obj(c, co.alpha, &sj).output), &sj)
        })
        .collect();
    let d = direct_sum(c, &sources);
    let mut phi: Option<Mor> = None;
    let mut tot: Option<Mor> = None;
    for (n, &j) in js.iter().enumerate() {
        let sj = c.simple(j);
        let a = co.varrho(c, &sj)?.mor.compose(&d.proj[n])?;
        let b = nu(&sj)?.compose(&d.proj[n])?;
        phi = Some(match phi {
            Some(p) => p.add(&a)?,
            None => a,
        });
        tot = Some(match tot {
            Some(t) => t.add(&b)?,
            None => b,
        });
    }
    let (phi, tot) = (phi.expect("grade inhabited"), tot.expect("grade inhabited"));
    let inv = phi.inverse().map_err(|_| Error::Internal("the coend cone is not an isomorphism".into()))?;
    tot.compose(&inv)
}

/// Dinaturality on the test objects, and unique factorization of the
/// identity cone and of `g∘ϱ` for a diagonal endomorphism `g`.
pub fn verify_universality(c: &Category, co: &CoendObject) -> Result<bool> {
    let opts = CoendCheckOptions { composite: false, decomposition: false };
    let dinat = coend_checks(c, co, opts)?.iter().find(|ch| ch.axiom == "coend-dinaturality").is_some_and(|ch| ch.ok);
    let id = factor(c, co, &|y| Ok(co.varrho(c, y)?.mor))?;
    let mut g = c.zero_mor(co.obj(), co.obj());
    for (n, inj) in co.sum.inj.iter().enumerate() {
        let e = inj.compose(&co.sum.proj[n])?.scale(&c.scalar(n as i64 + 1));
        g = g.add(&e)?;
    }
    let f = factor(c, co, &|y| g.compose(&co.varrho(c, y)?.mor))?;
    let mut ok = dinat && id.is_identity() && f == g;
    for y in grade_objects(c, co.beta) {
        ok &= f.compose(&co.varrho(c, &y)?.mor)? == g.compose(&co.varrho(c, &y)?.mor)?;
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn running_example_all_pairs() {
        let c = Category::new(examples::named("z4_to_z2").unwrap()).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let co = build_coend(&c, a, b).unwrap();
                assert_eq!(co.obj().total(), 4);
                assert_eq!(c.grade_of(co.obj()), Some(0));
                for ch in coend_checks(&c, &co, CoendCheckOptions::default()).unwrap() {
                    assert!(ch.ok, "({a},{b}) {}: {}", ch.axiom, ch.detail);
                }
            }
        }
    }

    #[test]
    fn trivial_grading_and_twisted_associator() {
        for d in [examples::named("z2_to_1").unwrap(), examples::twisted_z2(4, false), examples::twisted_z2(4, true)] {
            let c = Category::new(d).unwrap();
            let n = c.data.group.size;
            for a in 0..n {
                for b in 0..n {
                    let co = build_coend(&c, a, b).unwrap();
                    for ch in coend_checks(&c, &co, CoendCheckOptions::default()).unwrap() {
                        assert!(ch.ok, "{} ({a},{b}) {}: {}", c.data.name, ch.axiom, ch.detail);
                    }
                }
            }
        }
    }

    #[test]
    fn universality() {
        let c = Category::new(examples::named("z4_to_z2").unwrap()).unwrap();
        let co = build_coend(&c, 1, 0).unwrap();
        assert!(verify_universality(&c, &co).unwrap());
    }

    #[test]
    fn trivial_grading_counts_neutral_simples() {
        let c = Category::new(examples::named("z2_to_1").unwrap()).unwrap();
        let co = build_coend(&c, 0, 0).unwrap();
        let unit = center::hb_unit(&c);
        let n = center::center_hom_basis(&c, &unit, &co.hb).unwrap().len();
        assert_eq!(n, center::all_simples(&c).unwrap().len());
    }

    #[test]
    fn direct_sums_split() {
        let c = Category::new(examples::named("z4_to_z2").unwrap()).unwrap();
        let s = direct_sum(&c, &[c.simple(1), c.simple(1), c.simple(2)]);
        assert_eq!(s.obj.mult, vec![0, 2, 1, 0]);
        for n in 0..3 {
            assert!(s.proj[n].compose(&s.inj[n]).unwrap().is_identity());
        }
        assert!(s.proj[0].compose(&s.inj[1]).unwrap().is_zero());
    }
}
