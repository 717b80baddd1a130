//! The G-braiding `τ`, the twist, the ribbon criterion and the neutral
//! S-matrix.

use serde::Serialize;

use crate::category::{Category, Check, Mor, Obj, WMor, Word};
use crate::center::{self, sigma_word, sigma_word_inv, CenterSimple, HalfBraiding};
use crate::crossing::{self, dim_v_inv, Crossing, PhiImage};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::Cyclotomic;

/// `Γ^V_{(A,σ),X} = (id_X⊗p)(σ_{X⊗V*}⊗id_V)(id_{A⊗X}⊗coev~_V): [A]++X → X++[E]`
pub fn gamma_big(c: &Category, pv: &PhiImage, x: &[Obj]) -> Result<WMor> {
    let v = &pv.v;
    let vd = c.dual_obj(v);
    let a = pv.input.a.clone();
    let ax: Word = std::iter::once(a).chain(x.iter().cloned()).collect();
    let xv: Word = x.iter().cloned().chain(std::iter::once(vd.clone())).collect();
    let s1 = c.whisker(&ax, &c.coev_tilde(v), &[]);
    let s2 = c.whisker(&[], &sigma_word(c, &pv.input, &xv)?, &[v.clone()]);
    let s3 = c.whisker(x, &pv.wp(c), &[]);
    c.seq(&[&s1, &s2, &s3])
}

/// `d_V⁻¹(id⊗ev_V)(σ_{X⊗V*}⁻¹⊗id)(id_X⊗q)`
pub fn gamma_big_inv(c: &Category, pv: &PhiImage, x: &[Obj]) -> Result<WMor> {
    let v = &pv.v;
    let vd = c.dual_obj(v);
    let d = dim_v_inv(c, v)?;
    let a = pv.input.a.clone();
    let ax: Word = std::iter::once(a).chain(x.iter().cloned()).collect();
    let xv: Word = x.iter().cloned().chain(std::iter::once(vd)).collect();
    let s1 = c.whisker(x, &pv.wq(c), &[]);
    let s2 = c.whisker(&[], &sigma_word_inv(c, &pv.input, &xv)?, &[v.clone()]);
    let s3 = c.whisker(&ax, &c.ev(v), &[]);
    Ok(c.wscale(&c.seq(&[&s1, &s2, &s3])?, &d))
}

fn grade_of_word(c: &Category, x: &[Obj]) -> Result<usize> {
    let o = c.comb(x);
    if o.is_zero() {
        return Ok(c.data.group.unit);
    }
    c.grade_of(&o).ok_or_else(|| Error::Grade(format!("{} is not homogeneous", c.word_label(x))))
}

/// The G-braiding of `Z_G(C)` with a fixed family of representatives.
pub struct Braided<'a> {
    pub cr: Crossing<'a>,
}

impl<'a> Braided<'a> {
    pub fn new(c: &'a Category) -> Result<Self> {
        Ok(Braided { cr: Crossing::new(c)? })
    }

    pub fn with_reps(c: &'a Category, reps: Vec<usize>) -> Result<Self> {
        Ok(Braided { cr: Crossing::with_reps(c, reps)? })
    }

    pub fn c(&self) -> &'a Category {
        self.cr.c
    }

    /// `τ_{(A,σ),X}: [A]++X → X++[φ_{|X|}(A)]` for a homogeneous word `X`.
    pub fn tau_word(&self, a: &HalfBraiding, x: &[Obj]) -> Result<(PhiImage, WMor)> {
        let g = grade_of_word(self.c(), x)?;
        let img = self.cr.phi(g, a)?;
        let t = gamma_big(self.c(), &img, x)?;
        Ok((img, t))
    }

    /// `τ_{a,b}: A⊗B → B⊗φ_{|b|}(A)`
    pub fn tau(&self, a: &HalfBraiding, b: &HalfBraiding) -> Result<(PhiImage, Mor)> {
        let (img, t) = self.tau_word(a, &[b.a.clone()])?;
        Ok((img, t.mor))
    }

    pub fn tau_inv(&self, a: &HalfBraiding, b: &HalfBraiding) -> Result<Mor> {
        let g = grade_of_word(self.c(), &[b.a.clone()])?;
        let img = self.cr.phi(g, a)?;
        Ok(gamma_big_inv(self.c(), &img, &[b.a.clone()])?.mor)
    }

    /// `θ = (ev_A⊗id)(id_{A*}⊗τ_{A,A})(coev~_A⊗id_A): A → φ_{|A|}(A)`
    pub fn twist(&self, b: &HalfBraiding) -> Result<(PhiImage, Mor)> {
        let c = self.c();
        let a = b.a.clone();
        let ad = c.dual_obj(&a);
        let (img, t) = self.tau_word(b, &[a.clone()])?;
        let s1 = c.whisker(&[], &c.coev_tilde(&a), &[a.clone()]);
        let s2 = c.whisker(&[ad], &t, &[]);
        let s3 = c.whisker(&[], &c.ev(&a), &[img.e.clone()]);
        Ok((img, c.seq(&[&s1, &s2, &s3])?.mor))
    }

    /// `c_{X,Y} = (id_Y⊗(φ₀)_X⁻¹)τ_{X,Y}` for neutral `X`, `Y`.
    pub fn neutral_braiding(&self, x: &HalfBraiding, y: &HalfBraiding) -> Result<Mor> {
        let c = self.c();
        let (_, t) = self.tau(x, y)?;
        let f = c.tensor_mor(&c.id(&y.a), &self.cr.phi0_inv(x)?);
        f.compose(&t)
    }

    /// `(φ₀)⁻¹θ` on a simple neutral object, as a scalar.
    pub fn neutral_twist(&self, x: &HalfBraiding) -> Result<Cyclotomic> {
        let (_, t) = self.twist(x)?;
        let m = self.cr.phi0_inv(x)?.compose(&t)?;
        scalar_of(&m)
    }

    /// Pivotal structure `φ_α(Y*) → φ_α(Y)*` of the crossing, from left
    /// duality when `left`, from right duality otherwise.
    pub fn phi_one(&self, alpha: usize, y: &HalfBraiding, left: bool) -> Result<Mor> {
        let c = self.c();
        let yd = center::hb_dual(c, y)?;
        let p = self.cr.phi(alpha, y)?;
        let pd = self.cr.phi(alpha, &yd)?;
        let pu = self.cr.phi(alpha, &center::hb_unit(c))?;
        let f0_inv = crossing::phi_v0_inv(c, &pu)?;
        let (pe, pde) = (p.e.clone(), pd.e.clone());
        let ped = c.dual_obj(&pe);
        if left {
            let pair = center::hb_tensor(c, &yd, y)?;
            let pp = self.cr.phi(alpha, &pair)?;
            let f2 = crossing::phi_v2(c, &pd, &p, &pp)?;
            let fe = crossing::phi_v_mor(c, &pp, &pu, &c.ev(&y.a).mor)?;
            let cap = c.wrap(&[pde.clone(), pe.clone()], &[], f0_inv.compose(&fe)?.compose(&f2)?);
            let s1 = c.whisker(&[pde], &c.coev(&pe), &[]);
            let s2 = c.whisker(&[], &cap, &[ped]);
            Ok(c.comp(&s2, &s1)?.mor)
        } else {
            let pair = center::hb_tensor(c, y, &yd)?;
            let pp = self.cr.phi(alpha, &pair)?;
            let f2 = crossing::phi_v2(c, &p, &pd, &pp)?;
            let fe = crossing::phi_v_mor(c, &pp, &pu, &c.ev_tilde(&y.a).mor)?;
            let cap = c.wrap(&[pe.clone(), pde.clone()], &[], f0_inv.compose(&fe)?.compose(&f2)?);
            let s1 = c.whisker(&[], &c.coev_tilde(&pe), &[pde]);
            let s2 = c.whisker(&[ped], &cap, &[]);
            Ok(c.comp(&s2, &s1)?.mor)
        }
    }

    /// Self-duality of the twist:
    /// `θ_X* = (φ₀)_X*(φ₂(|X|⁻¹,|X|)_X⁻¹)*φ¹_{|X|⁻¹}(φ_{|X|}(X))θ_{φ_{|X|}(X)*}`.
    pub fn twist_self_dual(&self, x: &HalfBraiding) -> Result<bool> {
        let c = self.c();
        let g = &c.data.group;
        let alpha = grade_of_word(c, &[x.a.clone()])?;
        let ainv = g.inverse(alpha);
        let (px, th) = self.twist(x)?;
        let lhs = c.dual_atom(&th);
        let y = px.gamma.clone();
        let yd = center::hb_dual(c, &y)?;
        let (_, th2) = self.twist(&yd)?;
        let one = self.phi_one(ainv, &y, true)?;
        let f2inv = self.cr.phi2(ainv, alpha, x)?.inverse()?;
        let f0 = self.cr.phi0(x)?;
        let rhs = c.dual_atom(&f0).compose(&c.dual_atom(&f2inv))?.compose(&one)?.compose(&th2)?;
        Ok(lhs == rhs)
    }

    /// Ribbon criterion for `(A,σ)` of grade `α` and `U ∈ E_α`: the two loops
    /// `(ev_A⊗id)(id⊗σ_{A⊗U*})(coev~_A⊗id)` and
    /// `(id⊗ev~_A)(σ_{U*⊗A}⊗id)(id⊗coev_A)` agree.
    pub fn ribbon_criterion(&self, x: &HalfBraiding, u: &Obj) -> Result<bool> {
        let c = self.c();
        let a = x.a.clone();
        let ad = c.dual_obj(&a);
        let ud = c.dual_obj(u);
        let l1 = c.whisker(&[], &c.coev_tilde(&a), &[a.clone(), ud.clone()]);
        let l2 = c.whisker(&[ad.clone()], &sigma_word(c, x, &[a.clone(), ud.clone()])?, &[]);
        let l3 = c.whisker(&[], &c.ev(&a), &[ud.clone(), a.clone()]);
        let lhs = c.seq(&[&l1, &l2, &l3])?;
        let r1 = c.whisker(&[a.clone(), ud.clone()], &c.coev(&a), &[]);
        let r2 = c.whisker(&[], &sigma_word(c, x, &[ud.clone(), a.clone()])?, &[ad]);
        let r3 = c.whisker(&[ud, a.clone()], &c.ev_tilde(&a), &[]);
        let rhs = c.seq(&[&r1, &r2, &r3])?;
        Ok(lhs == rhs)
    }

    /// The criterion over the given simples and all representatives of their grade.
    pub fn ribbon_check(&self, simples: &[CenterSimple]) -> Result<bool> {
        let c = self.c();
        for s in simples {
            for u in c.representatives(s.grade) {
                if !self.ribbon_criterion(&s.hb, &c.simple(u))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The scalar `t` with `m = t·id` (for an endomorphism of a simple object).
pub fn scalar_of(m: &Mor) -> Result<Cyclotomic> {
    let supp = m.source.support();
    let k = *supp.first().ok_or_else(|| Error::Internal("scalar of a zero object".into()))?;
    let t = m.blocks[k].get(0, 0).clone();
    if m.source != m.target || *m != Mor::identity(m.order(), &m.source).scale(&t) {
        return Err(Error::Internal("endomorphism is not scalar".into()));
    }
    Ok(t)
}

/// The modular data of the neutral component.
#[derive(Clone, Debug, Serialize)]
pub struct ModularReport {
    pub labels: Vec<String>,
    pub s_matrix: Vec<Vec<String>>,
    #[serde(skip)]
    pub s: Matrix,
    pub twists: Vec<String>,
    #[serde(skip)]
    pub twist_values: Vec<Cyclotomic>,
    pub determinant: String,
    #[serde(skip)]
    pub det: Cyclotomic,
    pub is_invertible: bool,
    pub ribbon_ok: bool,
    pub spherical_ok: bool,
    pub fusion_ok: bool,
    pub is_g_modular: bool,
    pub dim_neutral: String,
}

/// `S_ij = tr(c_{j,i}c_{i,j})` over the simples of `Z₁(C)`, with the verdict.
pub fn s_matrix(c: &Category) -> Result<ModularReport> {
    let one = c.data.group.unit;
    let dim = c.dim_component(one);
    if dim.is_zero() {
        return Err(Error::SingularDimension("dim of the neutral component is zero".into()));
    }
    let br = Braided::new(c)?;
    let neutral = center::simple_objects(c, one)?;
    let n = neutral.len();
    let mut s = Matrix::zeros(c.order(), n, n);
    for (i, x) in neutral.iter().enumerate() {
        for (j, y) in neutral.iter().enumerate() {
            let cij = br.neutral_braiding(&x.hb, &y.hb)?;
            let cji = br.neutral_braiding(&y.hb, &x.hb)?;
            let dbl = c.wrap(&[x.hb.a.clone(), y.hb.a.clone()], &[x.hb.a.clone(), y.hb.a.clone()], cji.compose(&cij)?);
            s.set(i, j, c.trace_l(&dbl));
        }
    }
    let det = s.determinant()?;
    let twist_values = neutral.iter().map(|x| br.neutral_twist(&x.hb)).collect::<Result<Vec<_>>>()?;
    let all = center::all_simples(c)?;
    let ribbon_ok = br.ribbon_check(&all)?;
    let rep = crate::category::validate(&c.data, false);
    let spherical_ok = rep.get("sphericity").map(|k| k.ok).unwrap_or(false);
    let fusion_ok = rep.ok();
    let is_invertible = !det.is_zero();
    Ok(ModularReport {
        labels: neutral.iter().map(|x| x.label.clone()).collect(),
        s_matrix: (0..n).map(|i| (0..n).map(|j| s.get(i, j).to_string()).collect()).collect(),
        s,
        twists: twist_values.iter().map(|t| t.to_string()).collect(),
        twist_values,
        determinant: det.to_string(),
        det,
        is_invertible,
        ribbon_ok,
        spherical_ok,
        fusion_ok,
        is_g_modular: is_invertible && ribbon_ok && fusion_ok,
        dim_neutral: dim.to_string(),
    })
}

/// Whether `a` equals `b` after permuting rows and columns simultaneously.
pub fn equal_up_to_permutation(a: &Matrix, b: &Matrix) -> bool {
    let n = a.rows();
    if n != b.rows() || a.cols() != n || b.cols() != n {
        return false;
    }
    fn go(a: &Matrix, b: &Matrix, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = perm.len();
        if k == a.rows() {
            return true;
        }
        for cand in 0..a.rows() {
            if used[cand] {
                continue;
            }
            let ok = (0..k).all(|i| a.get(i, k) == b.get(perm[i], cand) && a.get(k, i) == b.get(cand, perm[i]))
                && a.get(k, k) == b.get(cand, cand);
            if ok {
                perm.push(cand);
                used[cand] = true;
                if go(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[cand] = false;
            }
        }
        false
    }
    go(a, b, &mut Vec::new(), &mut vec![false; n])
}

/// Named checks of the G-braiding on the given center objects.
pub fn braiding_checks(br: &Braided, objs: &[HalfBraiding]) -> Result<Vec<Check>> {
    let c = br.c();
    let g = &c.data.group;
    let mut out = Vec::new();
    let mut push = |axiom: &str, fails: Vec<String>| {
        let ok = fails.is_empty();
        out.push(Check { axiom: axiom.into(), ok, detail: if ok { "ok".into() } else { fails.join("; ") } });
    };
    let lab = |h: &HalfBraiding| c.label(&h.a);
    let grade = |h: &HalfBraiding| grade_of_word(c, &[h.a.clone()]);
    let unit = center::hb_unit(c);

    // invertibility, center morphism, displayed inverse
    let mut f = Vec::new();
    for x in objs {
        for y in objs {
            let (img, t) = br.tau(x, y)?;
            let ti = br.tau_inv(x, y)?;
            if !ti.compose(&t)?.is_identity() || !t.compose(&ti)?.is_identity() {
                f.push(format!("inverse of tau({}, {})", lab(x), lab(y)));
            }
            let src = center::hb_tensor(c, x, y)?;
            let tgt = center::hb_tensor(c, y, &img.gamma)?;
            if !center::is_center_mor(c, &t, &src, &tgt) {
                f.push(format!("tau({}, {}) is not a center morphism", lab(x), lab(y)));
            }
        }
    }
    push("tau-iso-and-central", f);

    // braiding-tensor-right
    let mut f = Vec::new();
    for x in objs {
        for y in objs {
            for z in objs {
                let (gy, gz) = (grade(y)?, grade(z)?);
                let (_, whole) = br.tau_word(x, &[y.a.clone(), z.a.clone()])?;
                let (py, t1) = br.tau_word(x, &[y.a.clone()])?;
                let (_, t2) = br.tau_word(&py.gamma, &[z.a.clone()])?;
                let f2 = c.atom(&br.cr.phi2(gz, gy, x)?);
                let s1 = c.whisker(&[], &t1, &[z.a.clone()]);
                let s2 = c.whisker(&[y.a.clone()], &t2, &[]);
                let s3 = c.whisker(&[y.a.clone(), z.a.clone()], &f2, &[]);
                let path = c.seq(&[&s1, &s2, &s3])?;
                if path != whole {
                    f.push(format!("({}, {}, {})", lab(x), lab(y), lab(z)));
                }
            }
        }
    }
    push("braiding-tensor-right", f);

    // braiding-tensor-left
    let mut f = Vec::new();
    for x in objs {
        for y in objs {
            for z in objs {
                let gz = grade(z)?;
                let xy = center::hb_tensor(c, x, y)?;
                let (_, whole) = br.tau(&xy, z)?;
                let (px, tx) = br.tau_word(x, &[z.a.clone()])?;
                let (py, ty) = br.tau_word(y, &[z.a.clone()])?;
                let pxy = br.cr.phi(gz, &xy)?;
                let m2 = c.wrap(&[px.e.clone(), py.e.clone()], &[pxy.e.clone()], crossing::phi_v2(c, &px, &py, &pxy)?);
                let s1 = c.whisker(&[x.a.clone()], &ty, &[]);
                let s2 = c.whisker(&[], &tx, &[py.e.clone()]);
                let s3 = c.whisker(&[z.a.clone()], &m2, &[]);
                let path = c.seq(&[&s1, &s2, &s3])?;
                if path.mor != whole {
                    f.push(format!("({}, {}, {})", lab(x), lab(y), lab(z)));
                }
            }
        }
    }
    push("braiding-tensor-left", f);

    // braiding-crossing
    let mut f = Vec::new();
    for alpha in 0..g.size {
        for x in objs {
            for y in objs {
                let gy = grade(y)?;
                let ai = g.inverse(alpha);
                let conj = g.op(g.op(ai, gy), alpha);
                let xy = center::hb_tensor(c, x, y)?;
                let (pyx, t) = br.tau(x, y)?;
                let yphi = center::hb_tensor(c, y, &pyx.gamma)?;
                let (fx, fy) = (br.cr.phi(alpha, x)?, br.cr.phi(alpha, y)?);
                let fxy = br.cr.phi(alpha, &xy)?;
                let fyphi = br.cr.phi(alpha, &yphi)?;
                let top = crossing::phi_v_mor(c, &fxy, &fyphi, &t)?.compose(&crossing::phi_v2(c, &fx, &fy, &fxy)?)?;
                let (_, t2) = br.tau(&fx.gamma, &fy.gamma)?;
                let z1 = br.cr.phi2(conj, alpha, x)?;
                let z2 = br.cr.phi2(alpha, gy, x)?.inverse()?;
                let fphi = br.cr.phi(alpha, &pyx.gamma)?;
                let m = crossing::phi_v2(c, &fy, &fphi, &fyphi)?;
                let idy = c.id(&fy.e);
                let path = m
                    .compose(&c.tensor_mor(&idy, &z2))?
                    .compose(&c.tensor_mor(&idy, &z1))?
                    .compose(&t2)?;
                if path != top {
                    f.push(format!("alpha {alpha} on ({}, {})", lab(x), lab(y)));
                }
            }
        }
    }
    push("braiding-crossing", f);

    // tau with the unit on either side, and the first displayed inverse
    let mut f = Vec::new();
    for x in objs {
        let (_, t) = br.tau(x, &unit)?;
        if t != br.cr.phi0(x)? {
            f.push(format!("tau({}, 1) != phi0", lab(x)));
        }
        let gx = grade(x)?;
        let (_, t) = br.tau(&unit, x)?;
        let pu = br.cr.phi(gx, &unit)?;
        let expect = c.tensor_mor(&c.id(&x.a), &crossing::phi_v0(c, &pu)?);
        if t != expect {
            f.push(format!("tau(1, {}) != id (x) phi_0", lab(x)));
        }
    }
    for x in objs {
        for y in objs {
            let gy = grade(y)?;
            let gi = g.inverse(gy);
            let yy = y.a.clone();
            let yd = c.dual_obj(&yy);
            let (px, t) = br.tau(x, y)?;
            let (pxx, t2) = br.tau_word(&px.gamma, &[yd.clone()])?;
            let back = br.cr.phi0_inv(x)?.compose(&br.cr.phi2(gi, gy, x)?)?;
            let s1 = c.whisker(&[yy.clone(), px.e.clone()], &c.coev_tilde(&yy), &[]);
            let s2 = c.whisker(&[yy.clone()], &t2, &[yy.clone()]);
            let s3 = c.tens_all(&[&c.ev_tilde(&yy), &c.wrap(&[pxx.e.clone()], &[x.a.clone()], back), &c.wid(&[yy.clone()])]);
            let inv = c.seq(&[&s1, &s2, &s3])?;
            if !inv.mor.compose(&t)?.is_identity() {
                f.push(format!("displayed inverse of tau({}, {})", lab(x), lab(y)));
            }
        }
    }
    push("tau-unit-and-inverse", f);

    // Γ^V at the unit object and at the unit half braiding
    let mut f = Vec::new();
    for x in objs {
        for u in c.neutral_simples() {
            let pu = crossing::phi_v(c, &c.simple(u), x)?;
            let gm = gamma_big(c, &pu, &[])?;
            if gm.mor != crossing::eta_u(c, &pu)? {
                f.push(format!("Gamma at the unit for {} and {}", lab(x), c.data.labels[u]));
            }
        }
    }
    for v in 0..c.rank() {
        if c.dim_l(v).is_zero() {
            continue;
        }
        let pv = crossing::phi_v(c, &c.simple(v), &unit)?;
        let vs = c.simple(v);
        let gm = gamma_big(c, &pv, &[vs.clone()])?;
        let expect = c.tensor_mor(&c.id(&vs), &crossing::phi_v0(c, &pv)?);
        if gm.mor != expect {
            f.push(format!("Gamma of the unit at {}", c.data.labels[v]));
        }
    }
    push("gamma-unit-cases", f);
    Ok(out)
}

/// The same `τ` on free objects along the second route:
/// `Γ^V_{F_α(X),Y} = (id_Y⊗ω⁻¹Z₂(β,α)_X)∂^β_{Z_α(X),Y}`.
pub fn tau_free_matches(br: &Braided, alpha: usize, x: &Obj, y: &Obj) -> Result<bool> {
    let c = br.c();
    let beta = grade_of_word(c, &[y.clone()])?;
    let (img, w) = br.cr.omega(beta, alpha, x, false)?;
    let (_, t) = br.tau_word(&img.input, &[y.clone()])?;
    let za = crate::monad::z_obj(c, alpha, x).output;
    let d = crate::monad::partial(c, beta, &za, &[y.clone()])?;
    let m = w.inverse()?.compose(&crate::monad::z_mul(c, beta, alpha, x))?;
    let other = c.comp(&c.whisker(&[y.clone()], &c.atom(&m), &[]), &d)?;
    Ok(other.mor == t.mor)
}

/// Identities of `Γ^V` over several representatives: the displayed inverse,
/// independence of `V` through `δ`, and the two tensor decompositions.
/// `xs` are homogeneous objects of `C`.
pub fn gamma_checks(br: &Braided, singles: &[HalfBraiding], multi: &[HalfBraiding], xs: &[Obj], k: usize) -> Result<Vec<Check>> {
    let c = br.c();
    let cr = &br.cr;
    let g = &c.data.group;
    let lab = |h: &HalfBraiding| c.label(&h.a);
    let reps: Vec<Vec<usize>> = (0..g.size).map(|a| crossing::rep_sample(cr, a, k)).collect();
    let (mut fa, mut fb, mut fc, mut fd) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for a in singles {
        for x in xs {
            let gx = grade_of_word(c, &[x.clone()])?;
            for &u in &reps[gx] {
                let pu = cr.phi_at(u, a)?;
                let t = gamma_big(c, &pu, &[x.clone()])?;
                let ti = gamma_big_inv(c, &pu, &[x.clone()])?;
                if !c.comp(&ti, &t)?.mor.is_identity() || !c.comp(&t, &ti)?.mor.is_identity() {
                    fa.push(format!("V={} on ({}, {})", c.data.labels[u], lab(a), c.label(x)));
                }
                for &v in &reps[gx] {
                    let pv = cr.phi_at(v, a)?;
                    let d = c.atom(&crossing::delta(c, &pu, &pv)?);
                    let via = c.comp(&c.whisker(&[x.clone()], &d, &[]), &gamma_big(c, &pv, &[x.clone()])?)?;
                    if via != t {
                        fb.push(format!("U={} V={} on ({}, {})", c.data.labels[u], c.data.labels[v], lab(a), c.label(x)));
                    }
                }
                for y in xs {
                    let gy = grade_of_word(c, &[y.clone()])?;
                    let w = cr.reps[g.op(gx, gy)];
                    for &v in &reps[gy] {
                        let pw = cr.phi_at(w, a)?;
                        let lhs = gamma_big(c, &pw, &[x.clone(), y.clone()])?;
                        let pvu = cr.phi_at(v, &pu.gamma)?;
                        let z = c.atom(&crossing::zeta(c, &pvu, &pu, &pw)?);
                        let s1 = c.whisker(&[], &t, &[y.clone()]);
                        let s2 = c.whisker(&[x.clone()], &gamma_big(c, &pvu, &[y.clone()])?, &[]);
                        let s3 = c.whisker(&[x.clone(), y.clone()], &z, &[]);
                        if c.seq(&[&s1, &s2, &s3])? != lhs {
                            fc.push(format!(
                                "U={} V={} on ({}, {}, {})",
                                c.data.labels[u],
                                c.data.labels[v],
                                lab(a),
                                c.label(x),
                                c.label(y)
                            ));
                        }
                    }
                }
            }
        }
    }
    for a in multi {
        for b in multi {
            let ab = center::hb_tensor(c, a, b)?;
            for x in xs {
                let gx = grade_of_word(c, &[x.clone()])?;
                for &v in &reps[gx] {
                    let (pa, pb, pab) = (cr.phi_at(v, a)?, cr.phi_at(v, b)?, cr.phi_at(v, &ab)?);
                    let lhs = gamma_big(c, &pab, &[x.clone()])?;
                    let lhs = c.retype(&lhs, &[a.a.clone(), b.a.clone(), x.clone()], &[x.clone(), pab.e.clone()])?;
                    let m2 = c.wrap(&[pa.e.clone(), pb.e.clone()], &[pab.e.clone()], crossing::phi_v2(c, &pa, &pb, &pab)?);
                    let s1 = c.whisker(&[a.a.clone()], &gamma_big(c, &pb, &[x.clone()])?, &[]);
                    let s2 = c.whisker(&[], &gamma_big(c, &pa, &[x.clone()])?, &[pb.e.clone()]);
                    let s3 = c.whisker(&[x.clone()], &m2, &[]);
                    if c.seq(&[&s1, &s2, &s3])? != lhs {
                        fd.push(format!("V={} on ({}, {}, {})", c.data.labels[v], lab(a), lab(b), c.label(x)));
                    }
                }
            }
        }
    }
    let mut fp = Vec::new();
    for a in singles {
        for alpha in 0..g.size {
            if br.phi_one(alpha, a, true)? != br.phi_one(alpha, a, false)? {
                fp.push(format!("alpha {alpha} on {}", lab(a)));
            }
        }
    }
    Ok(vec![
        Check::from_failures("gamma-inverse", fa),
        Check::from_failures("gamma-delta", fb),
        Check::from_failures("gamma-word", fc),
        Check::from_failures("gamma-tensor", fd),
        Check::from_failures("phi-v-pivotal", fp),
    ])
}

/// Ribbon criterion, twist self-duality and the free-object route for `τ`.
pub fn ribbon_checks(br: &Braided, singles: &[CenterSimple], xs: &[Obj]) -> Result<Vec<Check>> {
    let c = br.c();
    let (mut fr, mut fs, mut ff) = (Vec::new(), Vec::new(), Vec::new());
    for s in singles {
        for u in c.representatives(s.grade) {
            if !br.ribbon_criterion(&s.hb, &c.simple(u))? {
                fr.push(format!("{} with U={}", s.label, c.data.labels[u]));
            }
        }
        if !br.twist_self_dual(&s.hb)? {
            fs.push(s.label.clone());
        }
    }
    for alpha in 0..c.data.group.size {
        for x in xs {
            for y in xs {
                if !tau_free_matches(br, alpha, x, y)? {
                    ff.push(format!("alpha {alpha} on ({}, {})", c.label(x), c.label(y)));
                }
            }
        }
    }
    Ok(vec![
        Check::from_failures("ribbon-criterion", fr),
        Check::from_failures("twist-self-dual", fs),
        Check::from_failures("tau-free-route", ff),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn running() -> Category {
        Category::new(examples::named("z4_to_z2").unwrap()).unwrap()
    }

    fn hadamard() -> Matrix {
        Matrix::from_ints(4, &[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]])
    }

    #[test]
    fn toric_code_data() {
        let c = Category::new(examples::named("z2_to_1").unwrap()).unwrap();
        let r = s_matrix(&c).unwrap();
        assert!(equal_up_to_permutation(&r.s, &hadamard()));
        assert!(r.is_g_modular);
        let mut tw: Vec<String> = r.twist_values.iter().map(|t| t.to_string()).collect();
        tw.sort();
        assert_eq!(tw, vec!["-1", "1", "1", "1"]);
    }

    #[test]
    fn double_semion_twists() {
        let c = Category::new(examples::twisted_z2(4, false)).unwrap();
        let r = s_matrix(&c).unwrap();
        assert!(r.is_g_modular);
        let i = Cyclotomic::root_of_unity(4, 1);
        let mut expect = vec![c.one(), c.one(), i.clone(), -i];
        for t in &r.twist_values {
            let k = expect.iter().position(|e| e == t).expect("twist value");
            expect.remove(k);
        }
    }

    #[test]
    fn running_example_is_modular() {
        let c = running();
        let r = s_matrix(&c).unwrap();
        assert!(equal_up_to_permutation(&r.s, &hadamard()));
        assert!(r.det == c.scalar(16) || r.det == c.scalar(-16));
        assert!(r.is_g_modular);
    }

    #[test]
    fn trivial_category() {
        let d = examples::build_pointed(&crate::category::FiniteGroup::trivial(), 4);
        let c = Category::new(d).unwrap();
        let r = s_matrix(&c).unwrap();
        assert_eq!(r.s, Matrix::from_ints(4, &[&[1]]));
        assert!(r.is_g_modular);
    }

    #[test]
    fn braiding_axioms_on_running_simples() {
        let c = running();
        let br = Braided::new(&c).unwrap();
        let objs: Vec<HalfBraiding> = center::all_simples(&c).unwrap().into_iter().map(|s| s.hb).step_by(3).collect();
        for ch in braiding_checks(&br, &objs).unwrap() {
            assert!(ch.ok, "{}: {}", ch.axiom, ch.detail);
        }
    }

    #[test]
    fn ribbon_and_self_duality() {
        let c = running();
        let br = Braided::new(&c).unwrap();
        let all = center::all_simples(&c).unwrap();
        assert!(br.ribbon_check(&all).unwrap());
        for s in &all {
            assert!(br.twist_self_dual(&s.hb).unwrap(), "{}", s.label);
            for alpha in 0..2 {
                assert_eq!(br.phi_one(alpha, &s.hb, true).unwrap(), br.phi_one(alpha, &s.hb, false).unwrap());
            }
        }
    }

    #[test]
    fn free_route_agrees() {
        let c = running();
        let br = Braided::new(&c).unwrap();
        for alpha in 0..2 {
            for x in 0..4 {
                for y in 0..4 {
                    assert!(tau_free_matches(&br, alpha, &c.simple(x), &c.simple(y)).unwrap());
                }
            }
        }
    }

    #[test]
    fn gamma_and_ribbon_lists() {
        let c = running();
        let br = Braided::new(&c).unwrap();
        let all = center::all_simples(&c).unwrap();
        let hbs: Vec<HalfBraiding> = all.iter().map(|s| s.hb.clone()).collect();
        let few: Vec<HalfBraiding> = hbs.iter().step_by(3).cloned().collect();
        let xs: Vec<Obj> = (0..4).map(|i| c.simple(i)).collect();
        let mut checks = gamma_checks(&br, &hbs, &few, &xs, 2).unwrap();
        checks.extend(ribbon_checks(&br, &all, &xs).unwrap());
        for ch in checks {
            assert!(ch.ok, "{}: {}", ch.axiom, ch.detail);
        }
    }
}
