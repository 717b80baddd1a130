//! The crossing of `Z_G(C)`: the idempotents `π^V`, the functors `φ_V`,
//! the transition isomorphisms `δ`, `ζ`, `η`, and the isomorphisms
//! `ω: φ_α F_β ≅ F_{βα}`.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::category::{Category, Check, Mor, Obj, WMor, Word};
use crate::center::{self, sigma_word, sigma_word_inv, HalfBraiding};
use crate::error::{Error, Result};
use crate::linalg::split_idempotent;
use crate::monad;
use crate::scalars::Cyclotomic;

/// `φ_V(A,σ) = (E, γ)` together with the splitting of `π^V`.
#[derive(Clone, Debug)]
pub struct PhiImage {
    pub v: Obj,
    pub input: HalfBraiding,
    pub e: Obj,
    /// `V*⊗A⊗V → E`
    pub p: Mor,
    /// `E → V*⊗A⊗V`
    pub q: Mor,
    pub gamma: HalfBraiding,
    /// `E = Z_{βα}(X)` split so that `ω` is the identity
    pub canonical_free: bool,
}

impl PhiImage {
    pub fn word(&self, c: &Category) -> Word {
        vec![c.dual_obj(&self.v), self.input.a.clone(), self.v.clone()]
    }

    pub fn hb(&self) -> &HalfBraiding {
        &self.gamma
    }

    /// `p` as a word morphism `[V*, A, V] → [E]`.
    pub fn wp(&self, c: &Category) -> WMor {
        c.wrap(&self.word(c), &[self.e.clone()], self.p.clone())
    }

    pub fn wq(&self, c: &Category) -> WMor {
        c.wrap(&[self.e.clone()], &self.word(c), self.q.clone())
    }
}

/// `d_V = ev_V∘coev~_V`
pub fn dim_v(c: &Category, v: &Obj) -> Cyclotomic {
    c.trace_l(&c.wid(&[v.clone()]))
}

pub fn dim_v_inv(c: &Category, v: &Obj) -> Result<Cyclotomic> {
    dim_v(c, v)
        .inv()
        .map_err(|_| Error::SingularDimension(format!("dimension of {} is not invertible", c.label(v))))
}

fn grade_or_unit(c: &Category, x: &Obj) -> Result<usize> {
    if x.is_zero() {
        return Ok(c.data.group.unit);
    }
    c.grade_of(x).ok_or_else(|| Error::Grade(format!("{} is not homogeneous", c.label(x))))
}

/// `π^V = d_V⁻¹(ev_V⊗id)(id⊗σ_{V⊗V*}⊗id)(id⊗coev~_V)` on `V*⊗A⊗V`.
pub fn pi_idem(c: &Category, v: &Obj, b: &HalfBraiding) -> Result<Mor> {
    let d = dim_v_inv(c, v)?;
    let vd = c.dual_obj(v);
    let a = b.a.clone();
    let w = vec![vd.clone(), a.clone(), v.clone()];
    let s1 = c.whisker(&w, &c.coev_tilde(v), &[]);
    let s2 = c.whisker(&[vd.clone()], &sigma_word(c, b, &[v.clone(), vd.clone()])?, &[v.clone()]);
    let s3 = c.whisker(&[], &c.ev(v), &w);
    Ok(c.seq(&[&s1, &s2, &s3])?.mor.scale(&d))
}

/// `γ^V_X: E⊗X → X⊗E` for a neutral simple `X`.
fn gamma_component(c: &Category, v: &Obj, b: &HalfBraiding, e: &Obj, p: &Mor, q: &Mor, x: &Obj) -> Result<Mor> {
    let d = dim_v_inv(c, v)?;
    let vd = c.dual_obj(v);
    let a = b.a.clone();
    let w = vec![vd.clone(), a.clone(), v.clone()];
    let wq = c.wrap(&[e.clone()], &w, q.clone());
    let wp = c.wrap(&w, &[e.clone()], p.clone());
    let s0 = c.whisker(&[], &wq, &[x.clone()]);
    let s1 = c.whisker(&[vd.clone(), a.clone(), v.clone(), x.clone()], &c.coev_tilde(v), &[]);
    let s2 = c.whisker(&[vd.clone()], &sigma_word(c, b, &[v.clone(), x.clone(), vd.clone()])?, &[v.clone()]);
    let s3 = c.whisker(&[], &c.ev(v), &[x.clone(), vd.clone(), a, v.clone()]);
    let s4 = c.whisker(&[x.clone()], &wp, &[]);
    Ok(c.seq(&[&s0, &s1, &s2, &s3, &s4])?.mor.scale(&d))
}

fn image_from_split(c: &Category, v: &Obj, b: &HalfBraiding, p: Mor, q: Mor, canonical_free: bool) -> Result<PhiImage> {
    let e = p.target.clone();
    let mut sigma = Vec::new();
    for &k in &c.neutral_simples() {
        sigma.push(gamma_component(c, v, b, &e, &p, &q, &c.simple(k))?);
    }
    let gamma = HalfBraiding { a: e.clone(), sigma };
    Ok(PhiImage { v: v.clone(), input: b.clone(), e, p, q, gamma, canonical_free })
}

/// `φ_V(A,σ)` with the generic splitting of `π^V`.
pub fn phi_v(c: &Category, v: &Obj, b: &HalfBraiding) -> Result<PhiImage> {
    let pi = pi_idem(c, v, b)?;
    let (_, p, q) = center::split_mor(c, &pi)?;
    image_from_split(c, v, b, p, q, false)
}

/// `a^{V,β}_X = d_V⁻¹ Z₂(α,β)_X ρ^α_{Z_β(X),V}: V*⊗Z_β(X)⊗V → Z_{βα}(X)`
pub fn free_a(c: &Category, v: &Obj, beta: usize, x: &Obj) -> Result<Mor> {
    let alpha = grade_or_unit(c, v)?;
    let d = dim_v_inv(c, v)?;
    let zb = monad::z_obj(c, beta, x).output;
    let r = monad::rho(c, alpha, &zb, &[v.clone()])?;
    Ok(monad::z_mul(c, alpha, beta, x).compose(&r.mor)?.scale(&d))
}

/// `φ_V(F_β(X))` split through `E = Z_{βα}(X)`, so that `ω = id`.
pub fn phi_v_free(c: &Category, v: &Obj, beta: usize, x: &Obj) -> Result<PhiImage> {
    let b = center::free_object(c, beta, x)?;
    let pi = pi_idem(c, v, &b)?;
    let a = free_a(c, v, beta, x)?;
    if a.compose(&pi)? != a {
        return Err(Error::Internal("a is not invariant under pi".into()));
    }
    let mut blocks = Vec::new();
    for (k, blk) in pi.blocks.iter().enumerate() {
        let s = split_idempotent(blk)?;
        let aq = a.blocks[k].mul(&s.q)?;
        blocks.push(s.q.mul(&aq.inverse()?)?);
    }
    let q = Mor { source: a.target.clone(), target: a.source.clone(), blocks };
    image_from_split(c, v, &b, a, q, true)
}

/// `φ_V(f) = p(id⊗f⊗id)q`
pub fn phi_v_mor(c: &Category, src: &PhiImage, tgt: &PhiImage, f: &Mor) -> Result<Mor> {
    let vd = c.dual_obj(&src.v);
    let mid = c.whisker(&[vd], &c.atom(f), &[src.v.clone()]);
    Ok(c.seq(&[&src.wq(c), &mid, &tgt.wp(c)])?.mor)
}

/// `(φ_V)₂: E_A⊗E_B → E_{A⊗B}`, `p_{AB}(id⊗ev~_V⊗id)(q_A⊗q_B)`.
pub fn phi_v2(c: &Category, pa: &PhiImage, pb: &PhiImage, pab: &PhiImage) -> Result<Mor> {
    let v = &pa.v;
    let vd = c.dual_obj(v);
    let (a, b) = (pa.input.a.clone(), pb.input.a.clone());
    let s1 = c.tens(&pa.wq(c), &pb.wq(c));
    let s2 = c.whisker(&[vd.clone(), a.clone()], &c.ev_tilde(v), &[b.clone(), v.clone()]);
    let s3 = c.whisker(&[vd], &c.fuse(&[a, b]), &[v.clone()]);
    Ok(c.seq(&[&s1, &s2, &s3, &pab.wp(c)])?.mor)
}

/// `d_V (p_A⊗p_B)(id⊗coev_V⊗id)q_{AB}`
pub fn phi_v2_inv(c: &Category, pa: &PhiImage, pb: &PhiImage, pab: &PhiImage) -> Result<Mor> {
    let v = &pa.v;
    let vd = c.dual_obj(v);
    let (a, b) = (pa.input.a.clone(), pb.input.a.clone());
    let s1 = c.whisker(&[vd.clone()], &c.unfuse(&[a.clone(), b.clone()]), &[v.clone()]);
    let s2 = c.whisker(&[vd.clone(), a], &c.coev(v), &[b, v.clone()]);
    let s3 = c.tens(&pa.wp(c), &pb.wp(c));
    Ok(c.seq(&[&pab.wq(c), &s1, &s2, &s3])?.mor.scale(&dim_v(c, v)))
}

/// `(φ_V)₀ = p∘coev~_V: 𝟙 → E_𝟙`
pub fn phi_v0(c: &Category, pu: &PhiImage) -> Result<Mor> {
    let cup = c.retype(&c.coev_tilde(&pu.v), &[], &pu.word(c))?;
    Ok(c.comp(&pu.wp(c), &cup)?.mor)
}

/// `d_V⁻¹ ev_V∘q`
pub fn phi_v0_inv(c: &Category, pu: &PhiImage) -> Result<Mor> {
    let d = dim_v_inv(c, &pu.v)?;
    let cap = c.retype(&c.ev(&pu.v), &pu.word(c), &[])?;
    Ok(c.comp(&cap, &pu.wq(c))?.mor.scale(&d))
}

/// `δ^{U,V}: φ_V(b) → φ_U(b)`
pub fn delta(c: &Category, pu: &PhiImage, pv: &PhiImage) -> Result<Mor> {
    let (u, v) = (&pu.v, &pv.v);
    if grade_or_unit(c, u)? != grade_or_unit(c, v)? {
        return Err(Error::Grade("delta needs representatives of equal grade".into()));
    }
    let d = dim_v_inv(c, v)?;
    let b = &pv.input;
    let (vd, ud) = (c.dual_obj(v), c.dual_obj(u));
    let s1 = c.whisker(&pv.word(c), &c.coev_tilde(u), &[]);
    let s2 = c.whisker(&[vd.clone()], &sigma_word(c, b, &[v.clone(), ud.clone()])?, &[u.clone()]);
    let s3 = c.whisker(&[], &c.ev(v), &pu.word(c));
    Ok(c.seq(&[&pv.wq(c), &s1, &s2, &s3, &pu.wp(c)])?.mor.scale(&d))
}

/// `ζ^{U,V,W}: φ_Uφ_V(b) → φ_W(b)`; `puv = φ_U(φ_V(b))`.
pub fn zeta(c: &Category, puv: &PhiImage, pv: &PhiImage, pw: &PhiImage) -> Result<Mor> {
    let (u, v, w) = (&puv.v, &pv.v, &pw.v);
    let g = &c.data.group;
    if grade_or_unit(c, w)? != g.op(grade_or_unit(c, v)?, grade_or_unit(c, u)?) {
        return Err(Error::Grade("zeta needs |W| = |V||U|".into()));
    }
    let d = &dim_v_inv(c, u)? * &dim_v_inv(c, v)?;
    let b = &pv.input;
    let a = b.a.clone();
    let (ud, vd, wd) = (c.dual_obj(u), c.dual_obj(v), c.dual_obj(w));
    let s1 = c.whisker(&[ud.clone()], &pv.wq(c), &[u.clone()]);
    let s2 = c.whisker(&[ud.clone(), vd.clone(), a.clone(), v.clone(), u.clone()], &c.coev_tilde(w), &[]);
    let s3 = c.whisker(
        &[ud.clone(), vd.clone()],
        &sigma_word(c, b, &[v.clone(), u.clone(), wd.clone()])?,
        &[w.clone()],
    );
    let s4 = c.whisker(&[], &c.ev_w(&[v.clone(), u.clone()]), &pw.word(c));
    Ok(c.seq(&[&puv.wq(c), &s1, &s2, &s3, &s4, &pw.wp(c)])?.mor.scale(&d))
}

/// `η^U: b → φ_U(b)` for `U` of neutral grade.
pub fn eta_u(c: &Category, pu: &PhiImage) -> Result<Mor> {
    let u = &pu.v;
    let ud = c.dual_obj(u);
    let b = &pu.input;
    let s1 = c.whisker(&[b.a.clone()], &c.coev_tilde(u), &[]);
    let s2 = c.whisker(&[], &sigma_word(c, b, &[ud])?, &[u.clone()]);
    Ok(c.seq(&[&s1, &s2, &pu.wp(c)])?.mor)
}

/// `d_U⁻¹(id⊗ev_U)(σ_{U*}⁻¹⊗id)q`
pub fn eta_u_inv(c: &Category, pu: &PhiImage) -> Result<Mor> {
    let u = &pu.v;
    let ud = c.dual_obj(u);
    let b = &pu.input;
    let d = dim_v_inv(c, u)?;
    let s1 = c.whisker(&[], &sigma_word_inv(c, b, &[ud])?, &[u.clone()]);
    let s2 = c.whisker(&[b.a.clone()], &c.ev(u), &[]);
    Ok(c.seq(&[&pu.wq(c), &s1, &s2])?.mor.scale(&d))
}

/// The crossing `φ_α = φ_{V_α}` for a fixed family of representatives.
pub struct Crossing<'a> {
    pub c: &'a Category,
    /// `V_α` as a simple index, per group element
    pub reps: Vec<usize>,
    cache: RefCell<HashMap<(usize, Vec<usize>), Vec<(HalfBraiding, PhiImage)>>>,
}

impl<'a> Crossing<'a> {
    /// `V_1 = 𝟙` and `V_α` the first simple of grade `α` with invertible dimension.
    pub fn new(c: &'a Category) -> Result<Self> {
        let mut reps = Vec::new();
        for g in 0..c.data.group.size {
            if g == c.data.group.unit {
                reps.push(c.data.unit);
                continue;
            }
            let r = c.representatives(g);
            let first = *r.first().ok_or_else(|| Error::SingularDimension(format!("no representative of grade {g}")))?;
            reps.push(first);
        }
        Ok(Crossing { c, reps, cache: RefCell::new(HashMap::new()) })
    }

    pub fn with_reps(c: &'a Category, reps: Vec<usize>) -> Result<Self> {
        for (g, &r) in reps.iter().enumerate() {
            if c.data.grade[r] != g || c.dim_l(r).is_zero() {
                return Err(Error::Grade(format!("{} cannot represent grade {g}", c.data.labels[r])));
            }
        }
        Ok(Crossing { c, reps, cache: RefCell::new(HashMap::new()) })
    }

    pub fn rep(&self, alpha: usize) -> Obj {
        self.c.simple(self.reps[alpha])
    }

    pub fn phi(&self, alpha: usize, b: &HalfBraiding) -> Result<PhiImage> {
        self.phi_at(self.reps[alpha], b)
    }

    /// `φ_V(b)` for the simple `V`, memoized.
    pub fn phi_at(&self, v: usize, b: &HalfBraiding) -> Result<PhiImage> {
        let key = (v, b.a.mult.clone());
        if let Some(hit) = self.cache.borrow().get(&key).and_then(|v| v.iter().find(|(h, _)| h == b)) {
            return Ok(hit.1.clone());
        }
        let img = phi_v(self.c, &self.c.simple(v), b)?;
        self.cache.borrow_mut().entry(key).or_default().push((b.clone(), img.clone()));
        Ok(img)
    }

    /// `φ_α` on a center morphism `f: b → b'`.
    pub fn phi_mor(&self, alpha: usize, b: &HalfBraiding, b2: &HalfBraiding, f: &Mor) -> Result<Mor> {
        phi_v_mor(self.c, &self.phi(alpha, b)?, &self.phi(alpha, b2)?, f)
    }

    /// `φ₂(α,β)_b: φ_αφ_β(b) → φ_{βα}(b)`
    pub fn phi2(&self, alpha: usize, beta: usize, b: &HalfBraiding) -> Result<Mor> {
        let ba = self.c.data.group.op(beta, alpha);
        let pv = self.phi(beta, b)?;
        let puv = self.phi(alpha, &pv.gamma)?;
        let pw = self.phi(ba, b)?;
        zeta(self.c, &puv, &pv, &pw)
    }

    /// `(φ₀)_b: b → φ_1(b)`
    pub fn phi0(&self, b: &HalfBraiding) -> Result<Mor> {
        eta_u(self.c, &self.phi(self.c.data.group.unit, b)?)
    }

    pub fn phi0_inv(&self, b: &HalfBraiding) -> Result<Mor> {
        eta_u_inv(self.c, &self.phi(self.c.data.group.unit, b)?)
    }

    /// `(φ_α)₂` for `b₁`, `b₂` of equal grade.
    pub fn monoidal(&self, alpha: usize, b1: &HalfBraiding, b2: &HalfBraiding) -> Result<Mor> {
        let b12 = center::hb_tensor(self.c, b1, b2)?;
        phi_v2(self.c, &self.phi(alpha, b1)?, &self.phi(alpha, b2)?, &self.phi(alpha, &b12)?)
    }

    /// `ω^{α,β}_X: φ_α F_β(X) → F_{βα}(X)`, with either splitting.
    pub fn omega(&self, alpha: usize, beta: usize, x: &Obj, canonical: bool) -> Result<(PhiImage, Mor)> {
        let v = self.rep(alpha);
        let img = if canonical {
            phi_v_free(self.c, &v, beta, x)?
        } else {
            phi_v(self.c, &v, &center::free_object(self.c, beta, x)?)?
        };
        let a = free_a(self.c, &v, beta, x)?;
        let w = a.compose(&img.q)?;
        Ok((img, w))
    }
}

/// Up to `k` representatives of grade `α`, the chosen one first.
pub fn rep_sample(cr: &Crossing, alpha: usize, k: usize) -> Vec<usize> {
    let mut out = vec![cr.reps[alpha]];
    for r in cr.c.representatives(alpha) {
        if out.len() >= k {
            break;
        }
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Identities of the crossing on center objects: those on `π^V`, `φ_V`,
/// `ζ`, `η`, `δ` over several representatives, and the crossing axioms of
/// `φ_α = φ_{V_α}`. `singles` get the one-object identities, `multi` the
/// identities on pairs and triples; `k` bounds the representatives per grade.
pub fn crossing_checks(cr: &Crossing, singles: &[HalfBraiding], multi: &[HalfBraiding], k: usize) -> Result<Vec<Check>> {
    let c = cr.c;
    let g = &c.data.group;
    let n = g.size;
    let one = g.unit;
    let unit = center::hb_unit(c);
    let lab = |h: &HalfBraiding| c.label(&h.a);
    let vl = |v: usize| c.data.labels[v].clone();
    let reps: Vec<Vec<usize>> = (0..n).map(|a| rep_sample(cr, a, k)).collect();
    let last = |a: usize| *reps[a].last().unwrap();
    let mut out = Vec::new();

    // π^V idempotent, φ_V well defined
    let (mut f1, mut f2) = (Vec::new(), Vec::new());
    for x in singles {
        let gx = grade_or_unit(c, &x.a)?;
        for a in 0..n {
            for &u in &reps[a] {
                let pi = pi_idem(c, &c.simple(u), x)?;
                if pi.compose(&pi)? != pi {
                    f1.push(format!("pi^{} on {}", vl(u), lab(x)));
                }
                let img = cr.phi_at(u, x)?;
                if center::check_half_braiding(c, &img.gamma).is_err() {
                    f2.push(format!("gamma^{} on {}", vl(u), lab(x)));
                }
                if grade_or_unit(c, &img.e)? != g.conj(a, gx) && !img.e.is_zero() {
                    f2.push(format!("grade of phi_{}({})", vl(u), lab(x)));
                }
                if !phi_v_mor(c, &img, &img, &c.id(&x.a))?.is_identity() {
                    f2.push(format!("phi_{}(id) on {}", vl(u), lab(x)));
                }
            }
        }
    }
    out.push(Check::from_failures("pi-idempotent", f1));

    // (φ_V)₂ and (φ_V)₀: invertible, central, associative, unital
    for a in 0..n {
        for &u in &reps[a] {
            let pu = cr.phi_at(u, &unit)?;
            let z = phi_v0(c, &pu)?;
            if !phi_v0_inv(c, &pu)?.compose(&z)?.is_identity() || !center::is_center_mor(c, &z, &unit, &pu.gamma) {
                f2.push(format!("(phi_{})_0", vl(u)));
            }
            for x in multi {
                let px = cr.phi_at(u, x)?;
                for y in multi {
                    let py = cr.phi_at(u, y)?;
                    let xy = center::hb_tensor(c, x, y)?;
                    let pxy = cr.phi_at(u, &xy)?;
                    let m = phi_v2(c, &px, &py, &pxy)?;
                    let mi = phi_v2_inv(c, &px, &py, &pxy)?;
                    let src = center::hb_tensor(c, &px.gamma, &py.gamma)?;
                    if !m.compose(&mi)?.is_identity() || !mi.compose(&m)?.is_identity() || !center::is_center_mor(c, &m, &src, &pxy.gamma) {
                        f2.push(format!("(phi_{})_2({}, {})", vl(u), lab(x), lab(y)));
                    }
                }
            }
        }
    }
    out.push(Check::from_failures("phi-v-monoidal", f2));

    let mut f = Vec::new();
    for a in 0..n {
        let m2 = |x: &HalfBraiding, y: &HalfBraiding| cr.monoidal(a, x, y);
        for x in multi {
            let px = cr.phi(a, x)?;
            let xu = m2(x, &unit)?;
            let ux = m2(&unit, x)?;
            let z = phi_v0(c, &cr.phi(a, &unit)?)?;
            let ide = c.id(&px.e);
            if !xu.compose(&c.tensor_mor(&ide, &z))?.is_identity() || !ux.compose(&c.tensor_mor(&z, &ide))?.is_identity() {
                f.push(format!("crossing-monoidal-unit alpha {a} on {}", lab(x)));
            }
        }
    }
    out.push(Check::from_failures("crossing-monoidal-unit", f));

    let mut f = Vec::new();
    for a in 0..n {
        for x in multi {
            for y in multi {
                for z in multi {
                    let (px, py, pz) = (cr.phi(a, x)?, cr.phi(a, y)?, cr.phi(a, z)?);
                    let xy = center::hb_tensor(c, x, y)?;
                    let yz = center::hb_tensor(c, y, z)?;
                    let xy_z = center::hb_tensor(c, &xy, z)?;
                    let x_yz = center::hb_tensor(c, x, &yz)?;
                    let (pxy_z, px_yz) = (cr.phi(a, &xy_z)?, cr.phi(a, &x_yz)?);
                    let l = cr.monoidal(a, &xy, z)?.compose(&c.tensor_mor(&cr.monoidal(a, x, y)?, &c.id(&pz.e)))?;
                    let l = phi_v_mor(c, &pxy_z, &px_yz, &c.associator(&x.a, &y.a, &z.a))?.compose(&l)?;
                    let r = cr
                        .monoidal(a, x, &yz)?
                        .compose(&c.tensor_mor(&c.id(&px.e), &cr.monoidal(a, y, z)?))?
                        .compose(&c.associator(&px.e, &py.e, &pz.e))?;
                    if l != r {
                        f.push(format!("alpha {a} on ({}, {}, {})", lab(x), lab(y), lab(z)));
                    }
                }
            }
        }
    }
    out.push(Check::from_failures("crossing-monoidal-associativity", f));

    // ζ: invertible, central, monoidal; pentagon
    let mut f = Vec::new();
    let mut fm = Vec::new();
    let mut fp = Vec::new();
    for x in singles {
        for a in 0..n {
            for b in 0..n {
                let ba = g.op(b, a);
                for &u in &reps[a] {
                    for &v in &reps[b] {
                        for &w in &reps[ba] {
                            let pv = cr.phi_at(v, x)?;
                            let puv = cr.phi_at(u, &pv.gamma)?;
                            let pw = cr.phi_at(w, x)?;
                            let z = zeta(c, &puv, &pv, &pw)?;
                            if z.inverse().is_err() || !center::is_center_mor(c, &z, &puv.gamma, &pw.gamma) {
                                f.push(format!("zeta^({},{},{}) on {}", vl(u), vl(v), vl(w), lab(x)));
                            }
                        }
                    }
                }
                for cc in 0..n {
                    let (cb, cba) = (g.op(cc, b), g.op(g.op(cc, b), a));
                    for &u in &reps[a] {
                        for &v in &reps[b] {
                            for &w in &reps[cc] {
                                let (r, s, t) = (reps[ba][0], reps[cb][0], reps[cba][0]);
                                let pw = cr.phi_at(w, x)?;
                                let pvw = cr.phi_at(v, &pw.gamma)?;
                                let ps = cr.phi_at(s, x)?;
                                let pt = cr.phi_at(t, x)?;
                                let z_vws = zeta(c, &pvw, &pw, &ps)?;
                                let pu_vw = cr.phi_at(u, &pvw.gamma)?;
                                let pu_s = cr.phi_at(u, &ps.gamma)?;
                                let lhs = zeta(c, &pu_s, &ps, &pt)?.compose(&phi_v_mor(c, &pu_vw, &pu_s, &z_vws)?)?;
                                let pr_w = cr.phi_at(r, &pw.gamma)?;
                                let rhs = zeta(c, &cr.phi_at(r, &pw.gamma)?, &pw, &pt)?
                                    .compose(&zeta(c, &pu_vw, &pvw, &pr_w)?)?;
                                if lhs != rhs {
                                    fp.push(format!("({},{},{}) on {}", vl(u), vl(v), vl(w), lab(x)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ba = g.op(b, a);
            for x in multi {
                for y in multi {
                    let xy = center::hb_tensor(c, x, y)?;
                    let (px, py, pxy) = (cr.phi(b, x)?, cr.phi(b, y)?, cr.phi(b, &xy)?);
                    let pxpy = center::hb_tensor(c, &px.gamma, &py.gamma)?;
                    let inner = cr.phi_mor(a, &pxpy, &pxy.gamma, &phi_v2(c, &px, &py, &pxy)?)?;
                    let top = cr.phi2(a, b, &xy)?.compose(&inner)?.compose(&cr.monoidal(a, &px.gamma, &py.gamma)?)?;
                    let bottom = cr.monoidal(ba, x, y)?.compose(&c.tensor_mor(&cr.phi2(a, b, x)?, &cr.phi2(a, b, y)?))?;
                    if top != bottom {
                        fm.push(format!("({a},{b}) on ({}, {})", lab(x), lab(y)));
                    }
                }
            }
        }
    }
    out.push(Check::from_failures("zeta-iso", f));
    out.push(Check::from_failures("zeta-pentagon", fp));
    out.push(Check::from_failures("zeta-monoidal", fm));

    // η: invertible, central, monoidal, triangle
    let (mut f, mut ft) = (Vec::new(), Vec::new());
    for &u in &reps[one] {
        for x in singles {
            let pu = cr.phi_at(u, x)?;
            let e = eta_u(c, &pu)?;
            if !eta_u_inv(c, &pu)?.compose(&e)?.is_identity() || !center::is_center_mor(c, &e, x, &pu.gamma) {
                f.push(format!("eta^{} on {}", vl(u), lab(x)));
            }
            for a in 0..n {
                for &v in &reps[a] {
                    let pv = cr.phi_at(v, x)?;
                    let pupv = cr.phi_at(u, &pv.gamma)?;
                    let t1 = zeta(c, &pupv, &pv, &pv)?.compose(&eta_u(c, &pupv)?)?;
                    let pvpu = cr.phi_at(v, &pu.gamma)?;
                    let t2 = zeta(c, &pvpu, &pu, &pv)?.compose(&phi_v_mor(c, &pv, &pvpu, &e)?)?;
                    if !t1.is_identity() || !t2.is_identity() {
                        ft.push(format!("U={} V={} on {}", vl(u), vl(v), lab(x)));
                    }
                }
            }
        }
        for x in multi {
            for y in multi {
                let xy = center::hb_tensor(c, x, y)?;
                let (px, py, pxy) = (cr.phi_at(u, x)?, cr.phi_at(u, y)?, cr.phi_at(u, &xy)?);
                let lhs = eta_u(c, &pxy)?;
                let rhs = phi_v2(c, &px, &py, &pxy)?.compose(&c.tensor_mor(&eta_u(c, &px)?, &eta_u(c, &py)?))?;
                if lhs != rhs {
                    f.push(format!("eta^{} not monoidal on ({}, {})", vl(u), lab(x), lab(y)));
                }
            }
        }
    }
    out.push(Check::from_failures("eta-iso", f));
    out.push(Check::from_failures("eta-triangle", ft));

    // δ
    let (mut fa, mut fb, mut fc, mut fd) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for x in singles {
        for a in 0..n {
            for &u in &reps[a] {
                let pu = cr.phi_at(u, x)?;
                if !delta(c, &pu, &pu)?.is_identity() {
                    fb.push(format!("delta^({0},{0}) on {1}", vl(u), lab(x)));
                }
                for &v in &reps[a] {
                    let pv = cr.phi_at(v, x)?;
                    let d = delta(c, &pu, &pv)?;
                    if d.inverse().is_err() || !center::is_center_mor(c, &d, &pv.gamma, &pu.gamma) {
                        fa.push(format!("delta^({},{}) on {}", vl(u), vl(v), lab(x)));
                    }
                    for &w in &reps[a] {
                        let pw = cr.phi_at(w, x)?;
                        if d.compose(&delta(c, &pv, &pw)?)? != delta(c, &pu, &pw)? {
                            fb.push(format!("delta cocycle ({},{},{}) on {}", vl(u), vl(v), vl(w), lab(x)));
                        }
                    }
                }
            }
            for b in 0..n {
                let ba = g.op(b, a);
                for &u in &reps[a] {
                    for &v in &reps[b] {
                        for &w in &reps[ba] {
                            let (u2, v2, w2) = (last(a), last(b), last(ba));
                            let pv = cr.phi_at(v, x)?;
                            let puv = cr.phi_at(u, &pv.gamma)?;
                            let pw = cr.phi_at(w, x)?;
                            let pw2 = cr.phi_at(w2, x)?;
                            let lhs = delta(c, &pw2, &pw)?.compose(&zeta(c, &puv, &pv, &pw)?)?;
                            let pv2 = cr.phi_at(v2, x)?;
                            let pu2v = cr.phi_at(u2, &pv.gamma)?;
                            let pu2v2 = cr.phi_at(u2, &pv2.gamma)?;
                            let rhs = zeta(c, &pu2v2, &pv2, &pw2)?
                                .compose(&phi_v_mor(c, &pu2v, &pu2v2, &delta(c, &pv2, &pv)?)?)?
                                .compose(&delta(c, &pu2v, &puv)?)?;
                            if lhs != rhs {
                                fc.push(format!("({},{},{}) on {}", vl(u), vl(v), vl(w), lab(x)));
                            }
                        }
                    }
                }
            }
        }
        for &u in &reps[one] {
            for &u2 in &reps[one] {
                let (pu, pu2) = (cr.phi_at(u, x)?, cr.phi_at(u2, x)?);
                if delta(c, &pu2, &pu)?.compose(&eta_u(c, &pu)?)? != eta_u(c, &pu2)? {
                    fd.push(format!("({},{}) on {}", vl(u2), vl(u), lab(x)));
                }
            }
        }
    }
    for a in 0..n {
        for &u in &reps[a] {
            let u2 = last(a);
            for x in multi {
                for y in multi {
                    let xy = center::hb_tensor(c, x, y)?;
                    let (px, py, pxy) = (cr.phi_at(u, x)?, cr.phi_at(u, y)?, cr.phi_at(u, &xy)?);
                    let (qx, qy, qxy) = (cr.phi_at(u2, x)?, cr.phi_at(u2, y)?, cr.phi_at(u2, &xy)?);
                    let lhs = delta(c, &qxy, &pxy)?.compose(&phi_v2(c, &px, &py, &pxy)?)?;
                    let rhs = phi_v2(c, &qx, &qy, &qxy)?.compose(&c.tensor_mor(&delta(c, &qx, &px)?, &delta(c, &qy, &py)?))?;
                    if lhs != rhs {
                        fa.push(format!("delta^({},{}) not monoidal on ({}, {})", vl(u2), vl(u), lab(x), lab(y)));
                    }
                }
            }
        }
    }
    out.push(Check::from_failures("delta-iso", fa));
    out.push(Check::from_failures("delta-cocycle", fb));
    out.push(Check::from_failures("delta-zeta", fc));
    out.push(Check::from_failures("delta-eta", fd));

    // unit and phi2 compatibilities for the chosen representatives
    let (mut f4, mut f5, mut f6, mut f7) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for a in 0..n {
        for b in 0..n {
            let ba = g.op(b, a);
            let pb = cr.phi(b, &unit)?;
            let lift = cr.phi_mor(a, &unit, &pb.gamma, &phi_v0(c, &pb)?)?;
            let lhs = cr.phi2(a, b, &unit)?.compose(&lift)?.compose(&phi_v0(c, &cr.phi(a, &unit)?)?)?;
            if lhs != phi_v0(c, &cr.phi(ba, &unit)?)? {
                f4.push(format!("({a},{b})"));
            }
        }
    }
    for x in singles {
        for a in 0..n {
            let px = cr.phi(a, x)?;
            let p1 = cr.phi(one, x)?;
            let l = cr.phi2(a, one, x)?.compose(&cr.phi_mor(a, x, &p1.gamma, &cr.phi0(x)?)?)?;
            let r = cr.phi2(one, a, x)?.compose(&cr.phi0(&px.gamma)?)?;
            if !l.is_identity() || !r.is_identity() {
                f6.push(format!("alpha {a} on {}", lab(x)));
            }
            for b in 0..n {
                for cc in 0..n {
                    let pc = cr.phi(cc, x)?;
                    let pbc = cr.phi(b, &pc.gamma)?;
                    let pcb = cr.phi(g.op(cc, b), x)?;
                    let l = cr.phi2(a, g.op(cc, b), x)?.compose(&cr.phi_mor(a, &pbc.gamma, &pcb.gamma, &cr.phi2(b, cc, x)?)?)?;
                    let r = cr.phi2(g.op(b, a), cc, x)?.compose(&cr.phi2(a, b, &pc.gamma)?)?;
                    if l != r {
                        f5.push(format!("({a},{b},{cc}) on {}", lab(x)));
                    }
                }
            }
        }
    }
    for x in multi {
        for y in multi {
            let xy = center::hb_tensor(c, x, y)?;
            let l = cr.phi0(&xy)?;
            let r = cr.monoidal(one, x, y)?.compose(&c.tensor_mor(&cr.phi0(x)?, &cr.phi0(y)?))?;
            if l != r {
                f7.push(format!("({}, {})", lab(x), lab(y)));
            }
        }
    }
    if cr.phi0(&unit)? != phi_v0(c, &cr.phi(one, &unit)?)? {
        f7.push("(phi_0)_1 != (phi_1)_0".into());
    }
    out.push(Check::from_failures("crossing-unit-compatibility", f4));
    out.push(Check::from_failures("crossing-phi2-associativity", f5));
    out.push(Check::from_failures("crossing-phi2-unit", f6));
    out.push(Check::from_failures("crossing-phi0-monoidal", f7));
    Ok(out)
}

/// `ω^{1,α} = (φ₀)⁻¹` and `ω^{βα,γ}φ₂(α,β) = ω^{α,γβ}φ_α(ω^{β,γ})` on the given objects.
pub fn omega_checks(cr: &Crossing, xs: &[Obj]) -> Result<Vec<Check>> {
    let c = cr.c;
    let g = &c.data.group;
    let n = g.size;
    let (mut f0, mut f) = (Vec::new(), Vec::new());
    for x in xs {
        for a in 0..n {
            let fa = center::free_object(c, a, x)?;
            let (_, w) = cr.omega(g.unit, a, x, false)?;
            if w != cr.phi0_inv(&fa)? {
                f0.push(format!("omega^(1,{a}) at {}", c.label(x)));
            }
            for b in 0..n {
                for gg in 0..n {
                    let fg = center::free_object(c, gg, x)?;
                    let fgb = center::free_object(c, g.op(gg, b), x)?;
                    let (pbg, wbg) = cr.omega(b, gg, x, false)?;
                    let (_, w1) = cr.omega(g.op(b, a), gg, x, false)?;
                    let (_, w2) = cr.omega(a, g.op(gg, b), x, false)?;
                    let lhs = w1.compose(&cr.phi2(a, b, &fg)?)?;
                    let rhs = w2.compose(&cr.phi_mor(a, &pbg.gamma, &fgb, &wbg)?)?;
                    if lhs != rhs {
                        f.push(format!("({a},{b},{gg}) at {}", c.label(x)));
                    }
                }
            }
        }
    }
    Ok(vec![Check::from_failures("omega-unit", f0), Check::from_failures("omega-coherence", f)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::{check_half_braiding, free_object, hb_tensor, hb_unit, is_center_mor, simple_objects};
    use crate::examples;

    fn running() -> Category {
        Category::new(examples::named("z4_to_z2").unwrap()).unwrap()
    }

    #[test]
    fn idempotent_and_splitting() {
        let c = running();
        let f = free_object(&c, 0, &c.simple(0)).unwrap();
        let u = c.unit_obj();
        assert!(pi_idem(&c, &u, &f).unwrap().is_identity());
        for v in 0..4 {
            let v = c.simple(v);
            let pi = pi_idem(&c, &v, &f).unwrap();
            assert!(pi.compose(&pi).unwrap() == pi);
            let img = phi_v(&c, &v, &f).unwrap();
            assert!(img.p.compose(&img.q).unwrap().is_identity());
            assert_eq!(img.q.compose(&img.p).unwrap(), pi);
            let tr: Cyclotomic = pi.blocks.iter().fold(c.scalar(0), |s, b| &s + &b.trace());
            assert_eq!(tr, c.scalar(img.e.total() as i64));
            check_half_braiding(&c, &img.gamma).unwrap();
        }
    }

    #[test]
    fn grades_move_by_conjugation() {
        let c = running();
        for s in simple_objects(&c, 1).unwrap() {
            let img = phi_v(&c, &c.simple(1), &s.hb).unwrap();
            assert_eq!(c.grade_of(&img.e), Some(1));
            assert_eq!(img.e.total(), 1);
        }
    }

    #[test]
    fn monoidal_structure_and_inverses() {
        let c = running();
        let x = free_object(&c, 0, &c.simple(0)).unwrap();
        let y = free_object(&c, 0, &c.simple(2)).unwrap();
        let xy = hb_tensor(&c, &x, &y).unwrap();
        for v in [1, 3] {
            let v = c.simple(v);
            let (px, py, pxy) = (phi_v(&c, &v, &x).unwrap(), phi_v(&c, &v, &y).unwrap(), phi_v(&c, &v, &xy).unwrap());
            let m = phi_v2(&c, &px, &py, &pxy).unwrap();
            let mi = phi_v2_inv(&c, &px, &py, &pxy).unwrap();
            assert!(m.compose(&mi).unwrap().is_identity());
            assert!(mi.compose(&m).unwrap().is_identity());
            let t = hb_tensor(&c, &px.gamma, &py.gamma).unwrap();
            assert!(is_center_mor(&c, &m, &t, &pxy.gamma));
            let pu = phi_v(&c, &v, &hb_unit(&c)).unwrap();
            let z = phi_v0(&c, &pu).unwrap();
            assert!(phi_v0_inv(&c, &pu).unwrap().compose(&z).unwrap().is_identity());
            assert!(is_center_mor(&c, &z, &hb_unit(&c), &pu.gamma));
        }
    }

    #[test]
    fn delta_cocycle() {
        let c = running();
        let f = free_object(&c, 0, &c.simple(0)).unwrap();
        let p1 = phi_v(&c, &c.simple(1), &f).unwrap();
        let p3 = phi_v(&c, &c.simple(3), &f).unwrap();
        assert!(delta(&c, &p1, &p1).unwrap().is_identity());
        let d13 = delta(&c, &p1, &p3).unwrap();
        let d31 = delta(&c, &p3, &p1).unwrap();
        assert!(d13.compose(&d31).unwrap().is_identity());
        assert!(is_center_mor(&c, &d13, &p3.gamma, &p1.gamma));
        assert!(delta(&c, &p1, &phi_v(&c, &c.simple(0), &f).unwrap()).is_err());
    }

    #[test]
    fn eta_and_zeta_triangle() {
        let c = running();
        let f = free_object(&c, 1, &c.simple(1)).unwrap();
        let (u, v) = (c.simple(2), c.simple(1));
        let pu = phi_v(&c, &u, &f).unwrap();
        let e = eta_u(&c, &pu).unwrap();
        assert!(eta_u_inv(&c, &pu).unwrap().compose(&e).unwrap().is_identity());
        assert!(is_center_mor(&c, &e, &f, &pu.gamma));
        let pv = phi_v(&c, &v, &f).unwrap();
        let pupv = phi_v(&c, &u, &pv.gamma).unwrap();
        let eta_phi = eta_u(&c, &pupv).unwrap();
        let z = zeta(&c, &pupv, &pv, &pv).unwrap();
        assert!(z.compose(&eta_phi).unwrap().is_identity());
        let pvpu = phi_v(&c, &v, &pu.gamma).unwrap();
        let z2 = zeta(&c, &pvpu, &pu, &pv).unwrap();
        let lifted = phi_v_mor(&c, &pv, &pvpu, &e).unwrap();
        assert!(z2.compose(&lifted).unwrap().is_identity());
    }

    #[test]
    fn omega_is_identity_for_canonical_splitting() {
        let c = running();
        let cr = Crossing::new(&c).unwrap();
        for alpha in 0..2 {
            for beta in 0..2 {
                let x = c.simple(0);
                let (img, w) = cr.omega(alpha, beta, &x, true).unwrap();
                assert!(w.is_identity());
                assert!(img.canonical_free);
                check_half_braiding(&c, &img.gamma).unwrap();
                let (img2, w2) = cr.omega(alpha, beta, &x, false).unwrap();
                let target = free_object(&c, c.data.group.op(beta, alpha), &x).unwrap();
                assert!(is_center_mor(&c, &w2, &img2.gamma, &target));
                assert!(w2.inverse().is_ok());
            }
        }
    }

    #[test]
    fn check_lists_pass() {
        let c = running();
        let cr = Crossing::new(&c).unwrap();
        let all: Vec<HalfBraiding> = crate::center::all_simples(&c).unwrap().into_iter().map(|s| s.hb).collect();
        let few: Vec<HalfBraiding> = all.iter().step_by(3).cloned().collect();
        for ch in crossing_checks(&cr, &all, &few, 2).unwrap() {
            assert!(ch.ok, "{}: {}", ch.axiom, ch.detail);
        }
        let xs: Vec<Obj> = (0..4).map(|i| c.simple(i)).collect();
        for ch in omega_checks(&cr, &xs).unwrap() {
            assert!(ch.ok, "{}: {}", ch.axiom, ch.detail);
        }
    }
}
