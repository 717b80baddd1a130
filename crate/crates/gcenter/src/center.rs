//! Objects and morphisms of `Z_G(C)`: half braidings relative to `C₁`,
//! free objects, the adjunction with `C` and the simple objects.

use crate::category::{Category, Mor, Obj, WMor};
use crate::error::{Error, Result};
use crate::linalg::{decompose_algebra, mat_kernel, split_idempotent, Matrix};
use crate::monad;
use crate::scalars::Cyclotomic;

/// `(A, σ)` with `σ_Y: A⊗Y → Y⊗A` stored for `Y` in `I₁`, in the order
/// of [`Category::neutral_simples`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfBraiding {
    pub a: Obj,
    pub sigma: Vec<Mor>,
}

fn neutral_pos(c: &Category, k: usize) -> usize {
    c.neutral_simples().iter().position(|&j| j == k).expect("neutral simple")
}

fn check_neutral(c: &Category, y: &Obj) -> Result<()> {
    let one = c.data.group.unit;
    if y.support().iter().any(|&k| c.data.grade[k] != one) {
        return Err(Error::Grade(format!("{} is not in the neutral component", c.label(y))));
    }
    Ok(())
}

/// `σ_Y` for any neutral `Y`, assembled through an I-partition.
pub fn sigma_obj(c: &Category, hb: &HalfBraiding, y: &Obj) -> Result<Mor> {
    check_neutral(c, y)?;
    let src = c.tensor(&hb.a, y);
    let tgt = c.tensor(y, &hb.a);
    let ida = c.id(&hb.a);
    let mut acc = c.zero_mor(&src, &tgt);
    for part in c.i_partition(y) {
        let s = &hb.sigma[neutral_pos(c, part.simple)];
        let t = c.tensor_mor(&part.q, &ida).compose(s)?.compose(&c.tensor_mor(&ida, &part.p))?;
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

/// `σ_Y` on a word: `[A]++Y → Y++[A]`.
pub fn sigma_word(c: &Category, hb: &HalfBraiding, y: &[Obj]) -> Result<WMor> {
    let a = hb.a.clone();
    let py = c.comb(y);
    let s = c.wrap(&[a.clone(), py.clone()], &[py.clone(), a.clone()], sigma_obj(c, hb, &py)?);
    let into = c.whisker(&[a.clone()], &c.fuse(y), &[]);
    let out = c.whisker(&[], &c.unfuse(y), &[a]);
    c.seq(&[&into, &s, &out])
}

pub fn sigma_word_inv(c: &Category, hb: &HalfBraiding, y: &[Obj]) -> Result<WMor> {
    let s = sigma_word(c, hb, y)?;
    Ok(WMor { src: s.tgt, tgt: s.src, mor: s.mor.inverse()? })
}

/// Invertibility, `σ_𝟙 = id` and `σ_{Y⊗Y'} = (id_Y⊗σ_{Y'})(σ_Y⊗id_{Y'})`.
pub fn check_half_braiding(c: &Category, hb: &HalfBraiding) -> Result<()> {
    let fail = |m: String| Err(Error::Validation(format!("half-braiding: {m}")));
    let ns = c.neutral_simples();
    if hb.sigma.len() != ns.len() {
        return fail("wrong number of components".into());
    }
    for (n, &k) in ns.iter().enumerate() {
        let y = c.simple(k);
        let s = &hb.sigma[n];
        if s.source != c.tensor(&hb.a, &y) || s.target != c.tensor(&y, &hb.a) {
            return fail(format!("sigma at {} has the wrong shape", c.data.labels[k]));
        }
        if s.inverse().is_err() {
            return fail(format!("sigma at {} is not invertible", c.data.labels[k]));
        }
        if k == c.data.unit && !s.is_identity() {
            return fail("sigma at the unit is not the identity".into());
        }
    }
    let a = hb.a.clone();
    for &k in &ns {
        for &l in &ns {
            let y = c.simple(k);
            let z = c.simple(l);
            let whole = sigma_word(c, hb, &[y.clone(), z.clone()])?;
            let first = c.whisker(&[], &sigma_word(c, hb, &[y.clone()])?, &[z.clone()]);
            let second = c.whisker(&[y.clone()], &sigma_word(c, hb, &[z.clone()])?, &[]);
            let step = c.comp(&second, &first)?;
            if step != whole {
                return fail(format!(
                    "multiplicativity fails at ({}, {}) for {}",
                    c.data.labels[k],
                    c.data.labels[l],
                    c.label(&a)
                ));
            }
        }
    }
    Ok(())
}

pub fn hb_unit(c: &Category) -> HalfBraiding {
    let u = c.unit_obj();
    let sigma = c.neutral_simples().iter().map(|&k| c.id(&c.simple(k))).collect();
    HalfBraiding { a: u, sigma }
}

/// `(A⊗B, (σ⊗id_B)(id_A⊗ρ))`
pub fn hb_tensor(c: &Category, x: &HalfBraiding, y: &HalfBraiding) -> Result<HalfBraiding> {
    let ab = c.tensor(&x.a, &y.a);
    let mut sigma = Vec::new();
    for &k in &c.neutral_simples() {
        let s = c.simple(k);
        let first = c.whisker(&[x.a.clone()], &sigma_word(c, y, &[s.clone()])?, &[]);
        let second = c.whisker(&[], &sigma_word(c, x, &[s.clone()])?, &[y.a.clone()]);
        let merge = c.whisker(&[s.clone()], &c.fuse(&[x.a.clone(), y.a.clone()]), &[]);
        let t = c.seq(&[&first, &second, &merge])?;
        sigma.push(c.retype(&t, &[ab.clone(), s.clone()], &[s, ab.clone()])?.mor);
    }
    Ok(HalfBraiding { a: ab, sigma })
}

/// `(A*, σ†)` with `σ†_Y = (ev_A⊗id)(id⊗σ_Y⁻¹⊗id)(id⊗coev_A)`.
pub fn hb_dual(c: &Category, x: &HalfBraiding) -> Result<HalfBraiding> {
    let a = x.a.clone();
    let ad = c.dual_obj(&a);
    let mut sigma = Vec::new();
    for &k in &c.neutral_simples() {
        let y = c.simple(k);
        let cup = c.whisker(&[ad.clone(), y.clone()], &c.coev(&a), &[]);
        let mid = c.whisker(&[ad.clone()], &sigma_word_inv(c, x, &[y.clone()])?, &[ad.clone()]);
        let cap = c.whisker(&[], &c.ev(&a), &[y.clone(), ad.clone()]);
        sigma.push(c.seq(&[&cup, &mid, &cap])?.mor);
    }
    Ok(HalfBraiding { a: ad, sigma })
}

/// The same dual built from `σ_{Y*}`: `σ†_Y = (σ_{Y*})*`.
pub fn hb_dual_via_dual_sigma(c: &Category, x: &HalfBraiding) -> Result<HalfBraiding> {
    let ad = c.dual_obj(&x.a);
    let mut sigma = Vec::new();
    for &k in &c.neutral_simples() {
        let yd = c.simple(c.data.dual[k]);
        sigma.push(c.dual_mor(&sigma_word(c, x, &[yd])?).mor);
    }
    Ok(HalfBraiding { a: ad, sigma })
}

/// Restriction of a half braiding along a retract `p: A → E`, `q: E → A`.
pub fn restrict(c: &Category, x: &HalfBraiding, p: &Mor, q: &Mor) -> Result<HalfBraiding> {
    let mut sigma = Vec::new();
    for (n, &k) in c.neutral_simples().iter().enumerate() {
        let y = c.simple(k);
        let idy = c.id(&y);
        let t = c.tensor_mor(&idy, p).compose(&x.sigma[n])?.compose(&c.tensor_mor(q, &idy))?;
        sigma.push(t);
    }
    Ok(HalfBraiding { a: p.target.clone(), sigma })
}

/// `F_α(X) = (Z_α(X), σ^α_X)` with `σ^α_{X,Y} = (id_Y⊗Z₂(1,α)_X)∂¹_{Z_α(X),Y}`.
pub fn free_object(c: &Category, alpha: usize, x: &Obj) -> Result<HalfBraiding> {
    let one = c.data.group.unit;
    let m = monad::z_obj(c, alpha, x).output;
    let mult = c.atom(&monad::z_mul(c, one, alpha, x));
    let mut sigma = Vec::new();
    for &k in &c.neutral_simples() {
        let y = c.simple(k);
        let d = monad::partial(c, one, &m, &[y.clone()])?;
        sigma.push(c.comp(&c.whisker(&[y], &mult, &[]), &d)?.mor);
    }
    Ok(HalfBraiding { a: m, sigma })
}

/// `(id_Y⊗f)σ_Y = σ'_Y(f⊗id_Y)` for all `Y ∈ I₁`.
pub fn is_center_mor(c: &Category, f: &Mor, x: &HalfBraiding, y: &HalfBraiding) -> bool {
    if f.source != x.a || f.target != y.a {
        return false;
    }
    intertwiner_defect(c, f, x, y).map(|v| v.iter().all(Cyclotomic::is_zero)).unwrap_or(false)
}

fn intertwiner_defect(c: &Category, f: &Mor, x: &HalfBraiding, y: &HalfBraiding) -> Result<Vec<Cyclotomic>> {
    let mut out = Vec::new();
    for (n, &k) in c.neutral_simples().iter().enumerate() {
        let s = c.simple(k);
        let ids = c.id(&s);
        let lhs = c.tensor_mor(&ids, f).compose(&x.sigma[n])?;
        let rhs = y.sigma[n].compose(&c.tensor_mor(f, &ids))?;
        out.extend(lhs.sub(&rhs)?.coords());
    }
    Ok(out)
}

/// Basis of `Hom_{Z_G}(x, y)` from the intertwiner equations.
pub fn center_hom_basis(c: &Category, x: &HalfBraiding, y: &HalfBraiding) -> Result<Vec<Mor>> {
    let basis = Mor::hom_basis(c.order(), &x.a, &y.a);
    if basis.is_empty() {
        return Ok(vec![]);
    }
    let cols = basis.iter().map(|b| intertwiner_defect(c, b, x, y)).collect::<Result<Vec<_>>>()?;
    let rows = cols[0].len();
    let mut m = Matrix::zeros(c.order(), rows, basis.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    let ker = mat_kernel(&m);
    Ok((0..ker.cols())
        .map(|j| Mor::from_coords(c.order(), &x.a, &y.a, &ker.col(j)))
        .collect())
}

/// The `Z₁`-action `r: Z₁(A) → A`, `r|_i = (ev_i⊗id)(id⊗σ_i)`.
pub fn action(c: &Category, hb: &HalfBraiding) -> Result<Mor> {
    let one = c.data.group.unit;
    let img = monad::z_obj(c, one, &hb.a);
    let mut acc = c.zero_mor(&img.output, &hb.a);
    for &(i, _) in &img.summands {
        let s = c.simple(i);
        let sd = c.dual_obj(&s);
        let br = c.whisker(&[sd], &sigma_word(c, hb, &[s.clone()])?, &[]);
        let cap = c.whisker(&[], &c.ev(&s), &[hb.a.clone()]);
        let t = c.seq(&[&monad::z_proj(c, &img, i), &br, &cap])?;
        acc = acc.add(&t.mor)?;
    }
    Ok(acc)
}

/// `Hom_{Z_G}(F₁(X), b) → Hom_C(X, A)`, `f ↦ f∘η_X`.
pub fn adjunct_to_c(c: &Category, x: &Obj, f: &Mor) -> Result<Mor> {
    f.compose(&monad::eta(c, x))
}

/// `Hom_C(X, A) → Hom_{Z_G}(F₁(X), b)`, `g ↦ r_b∘Z₁(g)`.
pub fn adjunct_to_center(c: &Category, b: &HalfBraiding, g: &Mor) -> Result<Mor> {
    action(c, b)?.compose(&monad::z1_mor(c, g))
}

/// A simple object of `Z_α(C)` split off `F₁(i)`.
#[derive(Clone, Debug)]
pub struct CenterSimple {
    pub grade: usize,
    pub parent: usize,
    pub block: usize,
    pub hb: HalfBraiding,
    /// `E → Z₁(i)`
    pub embed: Mor,
    /// `Z₁(i) → E`
    pub project: Mor,
    pub label: String,
}

fn mor_to_matrix(m: &Mor) -> Matrix {
    let rows: usize = m.target.total();
    let cols: usize = m.source.total();
    let mut out = Matrix::zeros(m.order(), rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in &m.blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    out
}

fn matrix_to_mor(order: u32, x: &Obj, y: &Obj, m: &Matrix) -> Mor {
    let mut out = Mor::zero(order, x, y);
    let (mut r0, mut c0) = (0, 0);
    for (k, b) in out.blocks.iter_mut().enumerate() {
        for i in 0..y.mult[k] {
            for j in 0..x.mult[k] {
                b.set(i, j, m.get(r0 + i, c0 + j).clone());
            }
        }
        r0 += y.mult[k];
        c0 += x.mult[k];
    }
    out
}

/// Split an idempotent endomorphism blockwise: `(E, p, q)` with `qp = e`, `pq = id`.
pub fn split_mor(c: &Category, e: &Mor) -> Result<(Obj, Mor, Mor)> {
    let mut mult = vec![0; c.rank()];
    let mut ps = Vec::new();
    let mut qs = Vec::new();
    for (k, b) in e.blocks.iter().enumerate() {
        let s = split_idempotent(b)?;
        mult[k] = s.rank;
        ps.push(s.p);
        qs.push(s.q);
    }
    let eo = Obj { mult };
    let p = Mor { source: e.source.clone(), target: eo.clone(), blocks: ps };
    let q = Mor { source: eo.clone(), target: e.source.clone(), blocks: qs };
    Ok((eo, p, q))
}

/// `End_{Z_G}(F₁(X))` through the adjunction: `μ_X∘Z₁(g)` for `g ∈ Hom(X, Z₁(X))`.
pub fn free_endomorphisms(c: &Category, x: &Obj) -> Vec<Mor> {
    let zx = monad::z1_obj(c, x);
    let m = monad::mu(c, x);
    Mor::hom_basis(c.order(), x, &zx)
        .iter()
        .map(|g| m.compose(&monad::z1_mor(c, g)).expect("free endomorphism"))
        .collect()
}

/// Representative simple objects of `Z_α(C)`.
pub fn simple_objects(c: &Category, alpha: usize) -> Result<Vec<CenterSimple>> {
    let one = c.data.group.unit;
    if c.dim_component(one).is_zero() {
        return Err(Error::SingularDimension("dim of the neutral component is zero".into()));
    }
    let mut out: Vec<CenterSimple> = Vec::new();
    for i in c.data.simples_of_grade(alpha) {
        let x = c.simple(i);
        let free = free_object(c, one, &x)?;
        let ends = free_endomorphisms(c, &x);
        let n = free.a.total();
        let gens: Vec<Matrix> = ends.iter().map(mor_to_matrix).collect();
        let dec = decompose_algebra(c.order(), n, &gens)?;
        let mut seen_blocks = Vec::new();
        for (e, &blk) in dec.idempotents.iter().zip(&dec.block_of) {
            if seen_blocks.contains(&blk) {
                continue;
            }
            seen_blocks.push(blk);
            let em = matrix_to_mor(c.order(), &free.a, &free.a, e);
            let (_, p, q) = split_mor(c, &em)?;
            let hb = restrict(c, &free, &p, &q)?;
            let mut dup = false;
            for t in &out {
                if t.hb.a == hb.a && !center_hom_basis(c, &hb, &t.hb)?.is_empty() {
                    dup = true;
                    break;
                }
            }
            if dup {
                continue;
            }
            let block = seen_blocks.len() - 1;
            let label = format!("{}.{}", c.data.labels[i], block);
            out.push(CenterSimple { grade: alpha, parent: i, block, hb, embed: q, project: p, label });
        }
    }
    Ok(out)
}

/// Simples of every grade, grade by grade.
pub fn all_simples(c: &Category) -> Result<Vec<CenterSimple>> {
    let mut out = Vec::new();
    for g in 0..c.data.group.size {
        out.extend(simple_objects(c, g)?);
    }
    Ok(out)
}

/// Index of the simple isomorphic to `hb` (which must be simple).
pub fn identify(c: &Category, simples: &[CenterSimple], hb: &HalfBraiding) -> Result<usize> {
    for (n, s) in simples.iter().enumerate() {
        if s.hb.a == hb.a && !center_hom_basis(c, hb, &s.hb)?.is_empty() {
            return Ok(n);
        }
    }
    Err(Error::Internal(format!("no simple matches {}", c.label(&hb.a))))
}

/// Every half braiding on a simple `δ` of a pointed category with scalar
/// components among the `N`-th roots of unity.
pub fn brute_force_scalar_braidings(c: &Category, i: usize) -> Result<Vec<HalfBraiding>> {
    let ns = c.neutral_simples();
    let n = c.order();
    let a = c.simple(i);
    let roots: Vec<Cyclotomic> = (0..n).map(|k| Cyclotomic::root_of_unity(n, k as i64)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; ns.len()];
    loop {
        let mut sigma = Vec::new();
        let mut ok = true;
        for (pos, &k) in ns.iter().enumerate() {
            let y = c.simple(k);
            let s = c.tensor(&a, &y);
            let t = c.tensor(&y, &a);
            if s != t || s.total() != 1 {
                ok = false;
                break;
            }
            sigma.push(c.id(&s).scale(&roots[choice[pos]]));
        }
        if !ok {
            return Err(Error::Unsupported("brute force needs invertible simples".into()));
        }
        let hb = HalfBraiding { a: a.clone(), sigma };
        if check_half_braiding(c, &hb).is_ok() {
            out.push(hb);
        }
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(out);
            }
            choice[pos] += 1;
            if choice[pos] < n as usize {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn running() -> Category {
        Category::new(examples::named("z4_to_z2").unwrap()).unwrap()
    }

    #[test]
    fn unit_and_free_objects_are_half_braidings() {
        let c = running();
        check_half_braiding(&c, &hb_unit(&c)).unwrap();
        for alpha in 0..2 {
            for i in 0..4 {
                let f = free_object(&c, alpha, &c.simple(i)).unwrap();
                check_half_braiding(&c, &f).unwrap();
                assert_eq!(f.a, monad::z_obj(&c, alpha, &c.simple(i)).output);
            }
        }
        let f = free_object(&c, 0, &c.simple(0)).unwrap();
        assert_eq!(f.a.mult, vec![2, 0, 0, 0]);
        // σ_{δ₂} on δ₀⊕δ₀ swaps the two summands
        let s = &f.sigma[1];
        assert_eq!(s.blocks[2], Matrix::from_ints(4, &[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn tensor_and_dual() {
        let c = running();
        let u = hb_unit(&c);
        let f = free_object(&c, 0, &c.simple(0)).unwrap();
        assert_eq!(hb_tensor(&c, &f, &u).unwrap(), f);
        let ff = hb_tensor(&c, &f, &f).unwrap();
        assert_eq!(ff.a.total(), 4);
        check_half_braiding(&c, &ff).unwrap();
        let g = free_object(&c, 1, &c.simple(1)).unwrap();
        let l = hb_tensor(&c, &hb_tensor(&c, &f, &g).unwrap(), &ff).unwrap();
        let r = hb_tensor(&c, &f, &hb_tensor(&c, &g, &ff).unwrap()).unwrap();
        assert_eq!(l, r);
        for x in [&f, &g, &u] {
            let d = hb_dual(&c, x).unwrap();
            check_half_braiding(&c, &d).unwrap();
            assert_eq!(d, hb_dual_via_dual_sigma(&c, x).unwrap());
        }
        assert_eq!(hb_dual(&c, &u).unwrap(), u);
    }

    #[test]
    fn dual_formulas_agree_with_nontrivial_pivotal() {
        let c = Category::new(examples::twisted_z2(4, false)).unwrap();
        for s in simple_objects(&c, 0).unwrap() {
            let d = hb_dual(&c, &s.hb).unwrap();
            check_half_braiding(&c, &d).unwrap();
            assert_eq!(d, hb_dual_via_dual_sigma(&c, &s.hb).unwrap());
            let dd = hb_dual(&c, &d).unwrap();
            let ph = c.phi(&s.hb.a);
            assert!(is_center_mor(&c, &ph, &s.hb, &dd));
        }
        let f = free_object(&c, 0, &c.simple(1)).unwrap();
        assert_eq!(hb_dual(&c, &f).unwrap(), hb_dual_via_dual_sigma(&c, &f).unwrap());
    }

    #[test]
    fn adjunction_round_trips() {
        let c = running();
        let x = c.simple(0);
        let f = free_object(&c, 0, &x).unwrap();
        assert_eq!(action(&c, &f).unwrap(), monad::mu(&c, &x));
        let ends = center_hom_basis(&c, &f, &f).unwrap();
        assert_eq!(ends.len(), 2);
        assert_eq!(ends.len(), Mor::hom_dim(&x, &monad::z1_obj(&c, &x)));
        for g in Mor::hom_basis(4, &x, &f.a) {
            let h = adjunct_to_center(&c, &f, &g).unwrap();
            assert!(is_center_mor(&c, &h, &f, &f));
            assert_eq!(adjunct_to_c(&c, &x, &h).unwrap(), g);
        }
        for h in &ends {
            let g = adjunct_to_c(&c, &x, h).unwrap();
            assert_eq!(&adjunct_to_center(&c, &f, &g).unwrap(), h);
        }
        let u = hb_unit(&c);
        let one = c.unit_obj();
        let fu = free_object(&c, 0, &one).unwrap();
        assert_eq!(center_hom_basis(&c, &fu, &u).unwrap().len(), 1);
    }

    #[test]
    fn non_intertwiner_detected() {
        let c = running();
        let f = free_object(&c, 0, &c.simple(0)).unwrap();
        assert!(is_center_mor(&c, &c.id(&f.a), &f, &f));
        let mut m = c.id(&f.a);
        m.blocks[0].set(0, 0, c.scalar(2));
        assert!(!is_center_mor(&c, &m, &f, &f));
    }

    #[test]
    fn running_example_simples_match_brute_force() {
        let c = running();
        for alpha in 0..2 {
            let ss = simple_objects(&c, alpha).unwrap();
            assert_eq!(ss.len(), 4);
            let mut brute = 0;
            for i in c.data.simples_of_grade(alpha) {
                brute += brute_force_scalar_braidings(&c, i).unwrap().len();
            }
            assert_eq!(brute, 4);
            for s in &ss {
                check_half_braiding(&c, &s.hb).unwrap();
                assert_eq!(s.hb.a.total(), 1);
                let f = free_object(&c, 0, &c.simple(s.parent)).unwrap();
                assert!(is_center_mor(&c, &s.embed, &s.hb, &f));
                assert!(is_center_mor(&c, &s.project, &f, &s.hb));
                assert!(s.project.compose(&s.embed).unwrap().is_identity());
                for t in &ss {
                    let n = center_hom_basis(&c, &s.hb, &t.hb).unwrap().len();
                    assert_eq!(n, usize::from(s.label == t.label));
                }
            }
        }
    }

    #[test]
    fn toric_code_and_double_semion() {
        let c = Category::new(examples::named("z2_to_1").unwrap()).unwrap();
        let ss = simple_objects(&c, 0).unwrap();
        assert_eq!(ss.len(), 4);
        let total: usize = (0..2).map(|i| brute_force_scalar_braidings(&c, i).unwrap().len()).sum();
        assert_eq!(total, 4);
        let sum: Cyclotomic = ss.iter().fold(Cyclotomic::zero(4), |a, s| &a + &c.dim_obj(&s.hb.a).pow(2));
        assert_eq!(sum, c.dim_component(0).pow(2));
        let t = Category::new(examples::twisted_z2(4, false)).unwrap();
        let ss = simple_objects(&t, 0).unwrap();
        assert_eq!(ss.len(), 4);
        let total: usize = (0..2).map(|i| brute_force_scalar_braidings(&t, i).unwrap().len()).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn unit_is_simple() {
        let c = running();
        let u = hb_unit(&c);
        assert_eq!(center_hom_basis(&c, &u, &u).unwrap().len(), 1);
    }
}
