//! Centralizers `Z_α(X) = ⊕_{i∈I_α} i*⊗X⊗i` and the Hopf monad `Z₁`.

use crate::category::{Category, Check, Mor, Obj, WMor, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CentralizerImage {
    pub alpha: usize,
    pub input: Obj,
    pub output: Obj,
    /// `(i, comb([i*, X, i]))` in summand order.
    pub summands: Vec<(usize, Obj)>,
    /// offset of each summand inside each block of `output`
    offsets: Vec<Vec<usize>>,
}

impl CentralizerImage {
    pub fn index_of(&self, i: usize) -> Option<usize> {
        self.summands.iter().position(|&(j, _)| j == i)
    }
}

pub fn z_obj(c: &Category, alpha: usize, x: &Obj) -> CentralizerImage {
    let mut output = c.zero_obj();
    let mut summands = Vec::new();
    let mut offsets = Vec::new();
    for i in c.data.simples_of_grade(alpha) {
        let s = c.simple(i);
        let o = c.comb(&[c.dual_obj(&s), x.clone(), s]);
        offsets.push(output.mult.clone());
        output = output.direct_sum(&o);
        summands.push((i, o));
    }
    CentralizerImage { alpha, input: x.clone(), output, summands, offsets }
}

pub fn z_word(c: &Category, i: usize, x: &Obj) -> Word {
    let s = c.simple(i);
    vec![c.dual_obj(&s), x.clone(), s]
}

/// Inclusion of the `i`-summand, `[i*, X, i] → [Z_α(X)]`.
pub fn z_inj(c: &Category, img: &CentralizerImage, i: usize) -> WMor {
    let n = img.index_of(i).expect("summand");
    let part = &img.summands[n].1;
    let mut m = c.zero_mor(part, &img.output);
    for k in part.support() {
        let off = img.offsets[n][k];
        for a in 0..part.mult[k] {
            m.blocks[k].set(off + a, a, c.one());
        }
    }
    c.wrap(&z_word(c, i, &img.input), &[img.output.clone()], m)
}

/// Projection onto the `i`-summand.
pub fn z_proj(c: &Category, img: &CentralizerImage, i: usize) -> WMor {
    let inj = z_inj(c, img, i);
    let mut m = c.zero_mor(&inj.mor.target, &inj.mor.source);
    for (k, b) in inj.mor.blocks.iter().enumerate() {
        m.blocks[k] = b.transpose();
    }
    c.wrap(&inj.tgt, &inj.src, m)
}

pub fn z_mor(c: &Category, alpha: usize, f: &Mor) -> Mor {
    let s = z_obj(c, alpha, &f.source);
    let t = z_obj(c, alpha, &f.target);
    let mut out = c.zero_mor(&s.output, &t.output);
    for &(i, _) in &s.summands {
        let si = c.simple(i);
        let mid = c.whisker(&[c.dual_obj(&si)], &c.atom(f), &[si]);
        let g = c.seq(&[&z_proj(c, &s, i), &mid, &z_inj(c, &t, i)]).expect("z_mor");
        out = out.add(&g.mor).expect("z_mor");
    }
    out
}

fn check_grade(c: &Category, alpha: usize, y: &[Obj]) -> Result<()> {
    let o = c.comb(y);
    match c.grade_of(&o) {
        Some(g) if g != alpha => Err(Error::Grade(format!("expected grade {alpha}, got {g}"))),
        _ => Ok(()),
    }
}

/// `ρ^α_{X,Y}: Y*⊗X⊗Y → Z_α(X)` for a word `Y` of grade `α`.
pub fn rho(c: &Category, alpha: usize, x: &Obj, y: &[Obj]) -> Result<WMor> {
    check_grade(c, alpha, y)?;
    let img = z_obj(c, alpha, x);
    let yd = c.dual_word(y);
    let src: Word = yd.iter().cloned().chain(std::iter::once(x.clone())).chain(y.iter().cloned()).collect();
    let mut acc = c.wzero(&src, &[img.output.clone()]);
    let py = c.comb(y);
    for part in c.i_partition(&py) {
        let k = part.simple;
        let ks = c.simple(k);
        let p = c.wrap(y, &[ks.clone()], part.p.clone());
        let q = c.wrap(&[ks.clone()], y, part.q.clone());
        let qd = c.dual_mor(&q);
        let leg = c.tens_all(&[&qd, &c.wid(&[x.clone()]), &p]);
        let term = c.comp(&z_inj(c, &img, k), &leg)?;
        acc = c.wadd(&acc, &term)?;
    }
    Ok(acc)
}

/// `∂^α_{X,Y} = (id_Y⊗ρ_{X,Y})(coev_Y⊗id_{X⊗Y})`
pub fn partial(c: &Category, alpha: usize, x: &Obj, y: &[Obj]) -> Result<WMor> {
    let r = rho(c, alpha, x, y)?;
    let xy: Word = std::iter::once(x.clone()).chain(y.iter().cloned()).collect();
    let a = c.whisker(&[], &c.coev_w(y), &xy);
    let b = c.whisker(y, &r, &[]);
    c.comp(&b, &a)
}

/// `(Z_α)₂(X₁,X₂): Z_α(X₁⊗X₂) → Z_α(X₁)⊗Z_α(X₂)`
pub fn z2_comonoidal(c: &Category, alpha: usize, x1: &Obj, x2: &Obj) -> WMor {
    let x12 = c.tensor(x1, x2);
    let src = z_obj(c, alpha, &x12);
    let a = z_obj(c, alpha, x1);
    let b = z_obj(c, alpha, x2);
    let mut acc = c.wzero(&[src.output.clone()], &[a.output.clone(), b.output.clone()]);
    for &(i, _) in &src.summands {
        let s = c.simple(i);
        let sd = c.dual_obj(&s);
        let split = c.whisker(&[sd.clone()], &c.unfuse(&[x1.clone(), x2.clone()]), &[s.clone()]);
        let cup = c.whisker(&[sd.clone(), x1.clone()], &c.coev(&s), &[x2.clone(), s.clone()]);
        let legs = c.tens(&z_inj(c, &a, i), &z_inj(c, &b, i));
        let t = c.seq(&[&z_proj(c, &src, i), &split, &cup, &legs]).expect("z2");
        acc = c.wadd(&acc, &t).expect("z2");
    }
    acc
}

/// `(Z_α)₀: Z_α(𝟙) → 𝟙`
pub fn z0(c: &Category, alpha: usize) -> WMor {
    let u = c.unit_obj();
    let img = z_obj(c, alpha, &u);
    let mut acc = c.wzero(&[img.output.clone()], &[]);
    for &(i, _) in &img.summands {
        let s = c.simple(i);
        let drop = c.whisker(&[c.dual_obj(&s)], &c.wrap(&[u.clone()], &[], c.id(&u)), &[s.clone()]);
        let t = c.seq(&[&z_proj(c, &img, i), &drop, &c.ev(&s)]).expect("z0");
        acc = c.wadd(&acc, &t).expect("z0");
    }
    acc
}

/// `Z₂(α,β)_X: Z_α Z_β(X) → Z_{βα}(X)`
pub fn z_mul(c: &Category, alpha: usize, beta: usize, x: &Obj) -> Mor {
    let g = &c.data.group;
    let ba = g.op(beta, alpha);
    let inner = z_obj(c, beta, x);
    let outer = z_obj(c, alpha, &inner.output);
    let tgt = z_obj(c, ba, x);
    let mut acc = c.zero_mor(&outer.output, &tgt.output);
    for &(i, _) in &outer.summands {
        let si = c.simple(i);
        let sid = c.dual_obj(&si);
        let pi = z_proj(c, &outer, i);
        for &(j, _) in &inner.summands {
            let sj = c.simple(j);
            let pj = c.whisker(&[sid.clone()], &z_proj(c, &inner, j), &[si.clone()]);
            let flat = c.wrap(
                &pj.tgt,
                &[sid.clone(), c.dual_obj(&sj), x.clone(), sj.clone(), si.clone()],
                c.id(&pj.mor.target),
            );
            let r = rho(c, ba, x, &[sj.clone(), si.clone()]).expect("z_mul");
            let t = c.seq(&[&pi, &pj, &flat, &r]).expect("z_mul");
            acc = acc.add(&t.mor).expect("z_mul");
        }
    }
    acc
}

pub fn mu(c: &Category, x: &Obj) -> Mor {
    let one = c.data.group.unit;
    z_mul(c, one, one, x)
}

/// `η_X: X → Z₁(X)`, the unit summand inclusion.
pub fn eta(c: &Category, x: &Obj) -> Mor {
    let img = z_obj(c, c.data.group.unit, x);
    z_inj(c, &img, c.data.unit).mor
}

pub fn z1_obj(c: &Category, x: &Obj) -> Obj {
    z_obj(c, c.data.group.unit, x).output
}

pub fn z1_mor(c: &Category, f: &Mor) -> Mor {
    z_mor(c, c.data.group.unit, f)
}

/// `H^l_{X,Y} = (Z(X)⊗μ_Y)Z₂(X,Z(Y))`
pub fn fusion_left(c: &Category, x: &Obj, y: &Obj) -> WMor {
    let one = c.data.group.unit;
    let zy = z1_obj(c, y);
    let zx = z1_obj(c, x);
    let z2 = z2_comonoidal(c, one, x, &zy);
    let m = c.tens(&c.wid(&[zx]), &c.atom(&mu(c, y)));
    c.comp(&m, &z2).expect("fusion")
}

/// `H^r_{X,Y} = (μ_X⊗Z(Y))Z₂(Z(X),Y)`
pub fn fusion_right(c: &Category, x: &Obj, y: &Obj) -> WMor {
    let one = c.data.group.unit;
    let zx = z1_obj(c, x);
    let zy = z1_obj(c, y);
    let z2 = z2_comonoidal(c, one, &zx, y);
    let m = c.tens(&c.atom(&mu(c, x)), &c.wid(&[zy]));
    c.comp(&m, &z2).expect("fusion")
}

/// Left antipode `s^l_X: Z(Z(X)*) → X*`,
/// `(Z₀ Z(ev_{Z(X)}) (H^l_{Z(X)*,X})⁻¹ ⊗ η_X*)(id ⊗ coev_{Z(X)})`.
pub fn antipode_l(c: &Category, x: &Obj) -> Result<Mor> {
    let one = c.data.group.unit;
    let zx = z1_obj(c, x);
    let zxd = c.dual_obj(&zx);
    let src = z1_obj(c, &zxd);
    let h = fusion_left(c, &zxd, x);
    let hinv = WMor { src: h.tgt.clone(), tgt: h.src.clone(), mor: h.mor.inverse()? };
    let zev = c.atom(&z_mor(c, one, &c.ev(&zx).mor));
    let counit = z0(c, one);
    let into = c.tens(&c.wid(&[src.clone()]), &c.atom(&eta(c, x)));
    let left = c.seq(&[&into, &hinv, &zev, &counit])?;
    // (id ⊗ η*)coev_{Z(X)} = (η ⊗ id)coev_X
    let both = c.tens(&left, &c.wid(&[c.dual_obj(x)]));
    let cup = c.whisker(&[src.clone()], &c.coev(x), &[]);
    Ok(c.comp(&both, &cup)?.mor)
}

/// Separability `γ_X: X → Z₁(Z₁(X))` with `μ_X γ_X = η_X`.
pub fn gamma(c: &Category, x: &Obj) -> Result<Mor> {
    let one = c.data.group.unit;
    let dim = c.dim_component(one);
    let dinv = dim.inv().map_err(|_| Error::SingularDimension("dim of the neutral component is zero".into()))?;
    let inner = z_obj(c, one, x);
    let outer = z_obj(c, one, &inner.output);
    let mut acc = c.zero_mor(x, &outer.output);
    for &(i, _) in &outer.summands {
        let j = c.data.dual[i];
        let si = c.simple(i);
        let sj = c.simple(j);
        let w = &(&c.dim_l(i) * &c.dim_r(i)) * &dinv;
        // scalar making (q*∘coev~_i) pair to one
        let q = c.wrap(&[c.unit_obj()], &[sj.clone(), si.clone()], unit_slot(c, &sj, &si));
        let loop_val = c
            .comp(&c.dual_mor(&q), &c.retype(&c.coev_tilde(&si), &[], &c.dual_word(&[sj.clone(), si.clone()]))?)?
            .mor
            .as_scalar()
            .ok_or_else(|| Error::Internal("gamma loop".into()))?;
        let coef = &w * &loop_val.inv()?;
        let legs = c.tens_all(&[&c.coev_tilde(&si), &c.wid(&[x.clone()]), &c.coev(&sj)]);
        let word = vec![c.dual_obj(&si), c.dual_obj(&sj), x.clone(), sj.clone(), si.clone()];
        let legs = c.retype(&legs, &[x.clone()], &word)?;
        let into_inner = c.whisker(&[c.dual_obj(&si)], &z_inj(c, &inner, j), &[si.clone()]);
        let flat = c.wrap(&word, &into_inner.src, c.id(&legs.mor.target));
        let t = c.seq(&[&legs, &flat, &into_inner, &z_inj(c, &outer, i)])?;
        acc = acc.add(&t.mor.scale(&coef))?;
    }
    Ok(acc)
}

/// The unit-slot vector `𝟙 → a⊗b` (requires `b = a*`).
fn unit_slot(c: &Category, a: &Obj, b: &Obj) -> Mor {
    let (ab, w) = c.tensor_obj(a, b);
    let u = c.data.unit;
    let mut m = c.zero_mor(&c.unit_obj(), &ab);
    for i in a.support() {
        let j = c.data.dual[i];
        if b.mult[j] > 0 {
            m.blocks[u].set(w.slot(&c.data, u, i, j, 0, 0, 0), 0, c.one());
        }
    }
    m
}

/// Monad, bimonad, Hopf and separability laws of `Z₁` on simples.
pub fn monad_checks(c: &Category) -> Result<Vec<Check>> {
    let one = c.data.group.unit;
    let u = c.unit_obj();
    let simples: Vec<Obj> = (0..c.rank()).map(|i| c.simple(i)).collect();
    let mut laws = Vec::new();
    let mut sep = Vec::new();
    let mut counit = Vec::new();
    let mut hopf = Vec::new();
    let mut coassoc = Vec::new();
    let mut anti = Vec::new();
    for (i, x) in simples.iter().enumerate() {
        let name = &c.data.labels[i];
        let zx = z1_obj(c, x);
        let m = mu(c, x);
        if !m.compose(&eta(c, &zx))?.is_identity() || !m.compose(&z1_mor(c, &eta(c, x)))?.is_identity() {
            laws.push(format!("unit law at {name}"));
        }
        if m.compose(&mu(c, &zx))? != m.compose(&z1_mor(c, &m))? {
            laws.push(format!("associativity at {name}"));
        }
        let g = gamma(c, x)?;
        if m.compose(&g)? != eta(c, x) {
            sep.push(format!("mu gamma != eta at {name}"));
        }
        if z1_mor(c, &m).compose(&gamma(c, &zx)?)? != mu(c, &zx).compose(&z1_mor(c, &g))? {
            sep.push(format!("gamma not Z-linear at {name}"));
        }
        let l = c.comp(&c.tens(&c.wid(&[zx.clone()]), &z0(c, one)), &z2_comonoidal(c, one, x, &u))?;
        let r = c.comp(&c.tens(&z0(c, one), &c.wid(&[zx.clone()])), &z2_comonoidal(c, one, &u, x))?;
        if !l.mor.is_identity() || !r.mor.is_identity() {
            counit.push(format!("counit at {name}"));
        }
        let s = antipode_l(c, x)?;
        if s.target != c.dual_obj(x) {
            anti.push(format!("antipode target at {name}"));
        }
        for (j, y) in simples.iter().enumerate() {
            if fusion_left(c, x, y).mor.inverse().is_err() || fusion_right(c, x, y).mor.inverse().is_err() {
                hopf.push(format!("fusion at ({name}, {})", c.data.labels[j]));
            }
            let xy = c.tensor(x, y);
            for z in &simples {
                let yz = c.tensor(y, z);
                let zz = z1_obj(c, z);
                let a = c.comp(&c.tens(&z2_comonoidal(c, one, x, y), &c.wid(&[zz.clone()])), &z2_comonoidal(c, one, &xy, z))?;
                let whole = z1_obj(c, &c.comb(&[x.clone(), y.clone(), z.clone()]));
                let assoc = c.wrap(&[whole.clone()], &[whole], z1_mor(c, &c.associator(x, y, z)));
                let inner = c.retype(&z2_comonoidal(c, one, x, &yz), &assoc.tgt, &[zx.clone(), z1_obj(c, &yz)])?;
                let b = c.seq(&[&assoc, &inner, &c.tens(&c.wid(&[zx.clone()]), &z2_comonoidal(c, one, y, z))])?;
                if a.mor != b.mor {
                    coassoc.push(format!("({name}, {}, ...)", c.data.labels[j]));
                }
            }
        }
    }
    Ok(vec![
        Check::from_failures("monad-laws", laws),
        Check::from_failures("comonoidal-counit", counit),
        Check::from_failures("comonoidal-coassociativity", coassoc),
        Check::from_failures("hopf-fusion-invertible", hopf),
        Check::from_failures("antipode", anti),
        Check::from_failures("separability", sep),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn running() -> Category {
        Category::new(examples::named("z4_to_z2").unwrap()).unwrap()
    }

    fn twisted() -> Category {
        Category::new(examples::twisted_z2(4, false)).unwrap()
    }

    #[test]
    fn laws_with_nontrivial_associator() {
        let c = twisted();
        for i in 0..2 {
            let x = c.simple(i);
            let zx = z1_obj(&c, &x);
            let m = mu(&c, &x);
            assert!(m.compose(&eta(&c, &zx)).unwrap().is_identity());
            assert!(m.compose(&z1_mor(&c, &eta(&c, &x))).unwrap().is_identity());
            assert_eq!(m.compose(&mu(&c, &zx)).unwrap(), m.compose(&z1_mor(&c, &m)).unwrap());
            let g = gamma(&c, &x).unwrap();
            assert_eq!(m.compose(&g).unwrap(), eta(&c, &x));
            let lhs = z1_mor(&c, &m).compose(&gamma(&c, &zx).unwrap()).unwrap();
            assert_eq!(lhs, mu(&c, &zx).compose(&z1_mor(&c, &g)).unwrap());
            for j in 0..2 {
                let y = c.simple(j);
                assert!(fusion_left(&c, &x, &y).mor.inverse().is_ok());
            }
        }
        let x = c.simple(1);
        let y = c.simple(1).direct_sum(&c.simple(0));
        let f = Mor::from_coords(4, &y, &y, &[c.scalar(2), c.scalar(3)]);
        let fw = c.atom(&f);
        let yd = c.dual_obj(&y);
        let r = rho(&c, 0, &x, &[y.clone()]).unwrap();
        let lhs = c.comp(&r, &c.tens_all(&[&c.wid(&[yd.clone()]), &c.wid(&[x.clone()]), &fw])).unwrap();
        let rhs = c.comp(&r, &c.tens_all(&[&c.dual_mor(&fw), &c.wid(&[x.clone()]), &c.wid(&[y.clone()])])).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn centralizer_objects() {
        let c = running();
        let d0 = c.simple(0);
        let img = z_obj(&c, 0, &d0);
        // -i + 0 + i over i ∈ {0, 2}
        assert_eq!(img.output.mult, vec![2, 0, 0, 0]);
        assert_eq!(z_obj(&c, 1, &c.unit_obj()).output.mult, vec![2, 0, 0, 0]);
        assert!(z_obj(&c, 0, &c.zero_obj()).output.is_zero());
        assert_eq!(z_obj(&c, 1, &c.simple(1)).output.mult, vec![0, 2, 0, 0]);
    }

    #[test]
    fn rho_on_simple_is_inclusion() {
        let c = running();
        let x = c.simple(1);
        let r = rho(&c, 1, &x, &[c.simple(3)]).unwrap();
        let img = z_obj(&c, 1, &x);
        assert_eq!(r.mor, z_inj(&c, &img, 3).mor);
        assert!(rho(&c, 0, &x, &[c.simple(3)]).is_err());
    }

    #[test]
    fn rho_dinatural() {
        let c = running();
        let x = c.simple(2);
        let y = c.simple(1).direct_sum(&c.simple(1)).direct_sum(&c.simple(3));
        let f = Mor::from_coords(4, &y, &y, &[c.scalar(1), c.scalar(2), c.scalar(-1), c.scalar(3), c.scalar(5)]);
        let fw = c.atom(&f);
        let yd = c.dual_obj(&y);
        let lhs = c.comp(&rho(&c, 1, &x, &[y.clone()]).unwrap(), &c.tens_all(&[&c.wid(&[yd.clone()]), &c.wid(&[x.clone()]), &fw])).unwrap();
        let rhs = c.comp(&rho(&c, 1, &x, &[y.clone()]).unwrap(), &c.tens_all(&[&c.dual_mor(&fw), &c.wid(&[x.clone()]), &c.wid(&[y.clone()])])).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_on_unit_is_eta() {
        let c = running();
        for i in 0..4 {
            let x = c.simple(i);
            let p = partial(&c, 0, &x, &[c.unit_obj()]).unwrap();
            assert_eq!(p.mor, eta(&c, &x));
        }
    }

    #[test]
    fn monad_laws() {
        let c = running();
        for i in 0..4 {
            let x = c.simple(i);
            let zx = z1_obj(&c, &x);
            let m = mu(&c, &x);
            assert!(m.compose(&eta(&c, &zx)).unwrap().is_identity());
            assert!(m.compose(&z1_mor(&c, &eta(&c, &x))).unwrap().is_identity());
            let a = m.compose(&mu(&c, &zx)).unwrap();
            let b = m.compose(&z1_mor(&c, &m)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn comonoidal_laws() {
        let c = running();
        let one = 0;
        let u = c.unit_obj();
        for i in 0..4 {
            let x = c.simple(i);
            let f2 = z2_comonoidal(&c, one, &x, &u);
            let zx = z1_obj(&c, &x);
            let counit = c.tens(&c.wid(&[zx.clone()]), &z0(&c, one));
            assert!(c.comp(&counit, &f2).unwrap().mor.is_identity());
            let f2 = z2_comonoidal(&c, one, &u, &x);
            let counit = c.tens(&z0(&c, one), &c.wid(&[zx.clone()]));
            assert!(c.comp(&counit, &f2).unwrap().mor.is_identity());
        }
        let x = c.simple(1);
        let xx = c.tensor(&x, &x);
        let zx = z1_obj(&c, &x);
        let a = c.comp(&c.tens(&z2_comonoidal(&c, one, &x, &x), &c.wid(&[zx.clone()])), &z2_comonoidal(&c, one, &xx, &x)).unwrap();
        let b = c.comp(&c.tens(&c.wid(&[zx.clone()]), &z2_comonoidal(&c, one, &x, &x)), &c.retype(&z2_comonoidal(&c, one, &x, &xx), &[z1_obj(&c, &c.comb(&[x.clone(), x.clone(), x.clone()]))], &[zx.clone(), z1_obj(&c, &xx)]).unwrap()).unwrap();
        assert_eq!(a.mor, b.mor);
    }

    #[test]
    fn fusion_invertible() {
        let c = running();
        for i in 0..4 {
            for j in 0..4 {
                let (x, y) = (c.simple(i), c.simple(j));
                assert!(fusion_left(&c, &x, &y).mor.inverse().is_ok());
                assert!(fusion_right(&c, &x, &y).mor.inverse().is_ok());
            }
        }
    }

    #[test]
    fn separability() {
        let c = running();
        for i in 0..4 {
            let x = c.simple(i);
            let g = gamma(&c, &x).unwrap();
            assert_eq!(mu(&c, &x).compose(&g).unwrap(), eta(&c, &x));
            let zx = z1_obj(&c, &x);
            let lhs = z1_mor(&c, &mu(&c, &x)).compose(&gamma(&c, &zx).unwrap()).unwrap();
            let rhs = mu(&c, &zx).compose(&z1_mor(&c, &g)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn check_list_passes() {
        for c in [running(), twisted()] {
            for ch in monad_checks(&c).unwrap() {
                assert!(ch.ok, "{}: {}", ch.axiom, ch.detail);
            }
        }
    }

    #[test]
    fn antipode_shapes() {
        let c = running();
        let x = c.simple(1);
        let s = antipode_l(&c, &x).unwrap();
        assert_eq!(s.target, c.dual_obj(&x));
        assert_eq!(c.grade_of(&s.source), Some(1));
    }
}
