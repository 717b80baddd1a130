//! Pointed categories `Vec_H`, their pushforwards along epimorphisms
//! `π: H → G`, and the reference model `D(π)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::braiding::{gamma_big, Braided};
use crate::category::{Category, FiniteGroup, FusionData, Mor};
use crate::center;
use crate::error::{Error, Result};
use crate::scalars::Cyclotomic;

pub const BUNDLED: [&str; 5] = ["z4_to_z2", "z2_to_1", "id_z2", "z6_to_z3", "z8_to_z2"];

#[derive(Clone, Debug)]
pub struct Epimorphism {
    pub name: String,
    pub h: FiniteGroup,
    pub g: FiniteGroup,
    pub pi: Vec<usize>,
    pub section: Vec<usize>,
    pub kernel: Vec<usize>,
}

impl Epimorphism {
    pub fn new(name: &str, h: FiniteGroup, g: FiniteGroup, pi: Vec<usize>, section: Vec<usize>) -> Result<Self> {
        for a in 0..h.size {
            for b in 0..h.size {
                if pi[h.op(a, b)] != g.op(pi[a], pi[b]) {
                    return Err(Error::Validation("pi is not a homomorphism".into()));
                }
            }
        }
        if (0..g.size).any(|x| pi[section[x]] != x) {
            return Err(Error::Validation("section is not a section of pi".into()));
        }
        let kernel = (0..h.size).filter(|&k| pi[k] == g.unit).collect();
        Ok(Epimorphism { name: name.into(), h, g, pi, section, kernel })
    }

    /// `ℤ/n → ℤ/m`, reduction mod `m`, with section `a ↦ a + shift·m`.
    pub fn cyclic(name: &str, n: usize, m: usize, shift: usize) -> Result<Self> {
        if m == 0 || n % m != 0 {
            return Err(Error::Validation(format!("no epimorphism Z{n} -> Z{m}")));
        }
        let pi = (0..n).map(|h| h % m).collect();
        let section = (0..m).map(|a| (a + if a == 0 { 0 } else { shift * m }) % n).collect();
        Self::new(name, FiniteGroup::cyclic(n), FiniteGroup::cyclic(m), pi, section)
    }

    pub fn with_section(&self, section: Vec<usize>) -> Result<Self> {
        Self::new(&self.name, self.h.clone(), self.g.clone(), self.pi.clone(), section)
    }

    /// Sections other than the given one, for invariance checks.
    pub fn alternative_sections(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for &k in &self.kernel {
            if k == self.h.unit {
                continue;
            }
            let s: Vec<usize> = (0..self.g.size)
                .map(|a| if a == self.g.unit { self.section[a] } else { self.h.op(self.section[a], k) })
                .collect();
            out.push(s);
        }
        out
    }

    pub fn default_order(&self) -> u32 {
        let kg = kernel_group(self);
        num_integer::lcm(kg.exponent(), 4) as u32
    }
}

fn kernel_group(e: &Epimorphism) -> FiniteGroup {
    let pos: HashMap<usize, usize> = e.kernel.iter().enumerate().map(|(a, &k)| (k, a)).collect();
    let mul = e.kernel.iter().map(|&a| e.kernel.iter().map(|&b| pos[&e.h.op(a, b)]).collect()).collect();
    FiniteGroup::from_table(mul).expect("kernel is a subgroup")
}

pub fn named_epi(name: &str) -> Result<Epimorphism> {
    match name {
        "z4_to_z2" => Epimorphism::cyclic(name, 4, 2, 0),
        "z2_to_1" => Epimorphism::cyclic(name, 2, 1, 0),
        "id_z2" => Epimorphism::cyclic(name, 2, 2, 0),
        "z6_to_z3" => Epimorphism::cyclic(name, 6, 3, 0),
        "z8_to_z2" => Epimorphism::cyclic(name, 8, 2, 0),
        _ => Err(Error::Parse(format!("unknown example {name}; known: {}", BUNDLED.join(", ")))),
    }
}

/// `Vec_H` with trivial associator and pivotal structure.
pub fn build_pointed(h: &FiniteGroup, order: u32) -> FusionData {
    let r = h.size;
    let mut fusion = vec![vec![vec![0; r]; r]; r];
    for a in 0..r {
        for b in 0..r {
            fusion[a][b][h.op(a, b)] = 1;
        }
    }
    FusionData {
        name: format!("Vec_H{r}"),
        group: h.clone(),
        order,
        labels: (0..r).map(|a| format!("d{a}")).collect(),
        grade: (0..r).collect(),
        unit: h.unit,
        dual: (0..r).map(|a| h.inverse(a)).collect(),
        fusion,
        f_symbols: HashMap::new(),
        pivotal: vec![Cyclotomic::one(order); r],
    }
}

/// `Vec_{ℤ/2}` twisted by the nontrivial 3-cocycle (`F^{111}_1 = −1`),
/// with the pivotal structure making both dimensions 1. Graded by `ℤ/2`
/// or, with `graded = false`, by the trivial group.
pub fn twisted_z2(order: u32, graded: bool) -> FusionData {
    let mut d = build_pointed(&FiniteGroup::cyclic(2), order);
    d.name = "Vec_Z2^omega".into();
    let minus = -Cyclotomic::one(order);
    d.f_symbols.insert((1, 1, 1, 1), crate::linalg::Matrix::scalar(order, 1, &minus));
    d.pivotal[1] = minus;
    if !graded {
        d.group = FiniteGroup::trivial();
        d.grade = vec![0, 0];
    }
    d
}

/// Regrade an `H`-graded category along `π`.
pub fn pushforward(data: &FusionData, epi: &Epimorphism) -> FusionData {
    let mut out = data.clone();
    out.group = epi.g.clone();
    out.grade = data.grade.iter().map(|&h| epi.pi[h]).collect();
    out.name = format!("pi_*({})", data.name);
    out
}

pub fn for_epi(epi: &Epimorphism, order: u32) -> FusionData {
    let mut d = pushforward(&build_pointed(&epi.h, order), epi);
    d.name = epi.name.clone();
    d
}

/// Bundled example at its default cyclotomic order.
pub fn named(name: &str) -> Result<FusionData> {
    let e = named_epi(name)?;
    Ok(for_epi(&e, e.default_order()))
}

pub fn named_with_order(name: &str, order: u32) -> Result<FusionData> {
    Ok(for_epi(&named_epi(name)?, order))
}

/// A simple object `(h, χ)` of `D(π)`: `𝕜` in degree `h` with `K` acting by `χ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DpiSimple {
    pub h: usize,
    /// `χ(k) = ζ_N^{e}`, indexed like `Epimorphism::kernel`
    pub chi_exp: Vec<u32>,
    pub grade: usize,
    pub label: String,
}

/// Structure constants of `D(π)` for abelian `H`, all simples of dimension 1.
#[derive(Clone, Debug)]
pub struct DpiModel {
    pub order: u32,
    pub simples: Vec<DpiSimple>,
    /// `θ` on `(h, χ)`: `χ(h·s(α)⁻¹)`
    pub twist: Vec<Cyclotomic>,
    /// `τ_{i,j}`: `χ_i(h_j·s(|j|)⁻¹)`
    pub braiding: Vec<Vec<Cyclotomic>>,
    /// `φ₂(α,β)` on `(h, χ)`: `χ(s(β)s(α)s(βα)⁻¹)`
    pub phi2: Vec<Vec<Vec<Cyclotomic>>>,
    /// `φ_α` permutes nothing for abelian `H`; kept for the record
    pub crossing: Vec<Vec<usize>>,
}

/// Characters of the kernel with values `ζ_N^e`, as exponent vectors.
pub fn kernel_characters(e: &Epimorphism, order: u32) -> Result<Vec<Vec<u32>>> {
    let kg = kernel_group(e);
    if !kg.is_abelian() {
        return Err(Error::Unsupported("reference model needs an abelian kernel".into()));
    }
    if order as usize % kg.exponent() != 0 {
        return Err(Error::NonSplit(format!("characters of K need N divisible by {}", kg.exponent())));
    }
    let n = order as u64;
    // partial characters on the subgroup generated so far
    let mut chars: Vec<Vec<Option<u32>>> = vec![{
        let mut v = vec![None; kg.size];
        v[kg.unit] = Some(0);
        v
    }];
    loop {
        let known: Vec<usize> = (0..kg.size).filter(|&k| chars[0][k].is_some()).collect();
        let Some(g) = (0..kg.size).find(|&k| chars[0][k].is_none()) else { break };
        let mut m = 1;
        let mut gm = g;
        while chars[0][gm].is_none() {
            gm = kg.op(gm, g);
            m += 1;
        }
        let mut next = Vec::new();
        for ch in &chars {
            let target = ch[gm].unwrap() as u64;
            for x in 0..n {
                if (x * m as u64) % n != target {
                    continue;
                }
                let mut new = ch.clone();
                let mut pw = kg.unit;
                for j in 0..m as u64 {
                    for &s in &known {
                        let v = (ch[s].unwrap() as u64 + j * x) % n;
                        new[kg.op(s, pw)] = Some(v as u32);
                    }
                    pw = kg.op(pw, g);
                }
                next.push(new);
            }
        }
        chars = next;
    }
    Ok(chars.into_iter().map(|c| c.into_iter().map(|v| v.unwrap()).collect()).collect())
}

pub fn dpi_reference(e: &Epimorphism, order: u32) -> Result<DpiModel> {
    if !e.h.is_abelian() {
        return Err(Error::Unsupported("reference model implemented for abelian H".into()));
    }
    let chars = kernel_characters(e, order)?;
    let kpos: HashMap<usize, usize> = e.kernel.iter().enumerate().map(|(a, &k)| (k, a)).collect();
    let zeta = |x: u32| Cyclotomic::root_of_unity(order, x as i64);
    let mut simples = Vec::new();
    for h in 0..e.h.size {
        for (j, ch) in chars.iter().enumerate() {
            simples.push(DpiSimple { h, chi_exp: ch.clone(), grade: e.pi[h], label: format!("(h{h},chi{j})") });
        }
    }
    let eval = |s: &DpiSimple, k: usize| zeta(s.chi_exp[kpos[&k]]);
    let h = &e.h;
    let twist = simples.iter().map(|s| eval(s, h.op(s.h, h.inverse(e.section[s.grade])))).collect();
    let braiding = simples
        .iter()
        .map(|a| simples.iter().map(|b| eval(a, h.op(b.h, h.inverse(e.section[b.grade])))).collect())
        .collect();
    let g = &e.g;
    let phi2 = simples
        .iter()
        .map(|s| {
            (0..g.size)
                .map(|al| {
                    (0..g.size)
                        .map(|be| {
                            let k = h.op(h.op(e.section[be], e.section[al]), h.inverse(e.section[g.op(be, al)]));
                            eval(s, k)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let crossing = (0..g.size).map(|_| (0..simples.len()).collect()).collect();
    Ok(DpiModel { order, simples, twist, braiding, phi2, crossing })
}

impl DpiModel {
    fn index_of(&self, h: usize, chi: &[u32]) -> usize {
        self.simples.iter().position(|s| s.h == h && s.chi_exp == chi).expect("closed under tensor")
    }

    /// The hexagon-type identities as character identities, and `θ_{1} = 1`.
    pub fn check_axioms(&self, e: &Epimorphism) -> Vec<String> {
        let n = self.order;
        let mut bad = Vec::new();
        let tensor = |a: &DpiSimple, b: &DpiSimple| {
            let chi: Vec<u32> = a.chi_exp.iter().zip(&b.chi_exp).map(|(x, y)| (x + y) % n).collect();
            self.index_of(e.h.op(a.h, b.h), &chi)
        };
        for (x, sx) in self.simples.iter().enumerate() {
            for (y, sy) in self.simples.iter().enumerate() {
                for (z, sz) in self.simples.iter().enumerate() {
                    let yz = tensor(sy, sz);
                    let lhs = &self.braiding[x][yz];
                    let rhs = &(&self.braiding[x][y] * &self.braiding[x][z]) * &self.phi2[x][sz.grade][sy.grade];
                    if *lhs != rhs {
                        bad.push(format!("braiding1 {} {} {}", sx.label, sy.label, sz.label));
                    }
                    let xy = tensor(sx, sy);
                    if self.braiding[xy][z] != &self.braiding[x][z] * &self.braiding[y][z] {
                        bad.push(format!("braiding2 {} {} {}", sx.label, sy.label, sz.label));
                    }
                }
            }
        }
        let unit = self.index_of(e.h.unit, &vec![0; e.kernel.len()]);
        if !self.twist[unit].is_one() && e.section[e.g.unit] == e.h.unit {
            bad.push("twist of the unit".into());
        }
        bad
    }

    /// Whether every `φ₂` is the identity.
    pub fn is_strict(&self) -> bool {
        self.phi2.iter().all(|a| a.iter().all(|b| b.iter().all(|t| t.is_one())))
    }
}

/// Data of a center simple read off with the representatives `δ_{s(α)}`.
#[derive(Clone, Debug)]
pub struct CenterInvariants {
    pub labels: Vec<String>,
    pub grades: Vec<usize>,
    pub dims: Vec<Cyclotomic>,
    pub twist: Vec<Cyclotomic>,
    pub braiding: Vec<Vec<Cyclotomic>>,
}

fn bare_scalar(m: &Mor) -> Result<Cyclotomic> {
    let s = m.source.support();
    if s.len() != 1 || m.source.mult[s[0]] != 1 || m.target != m.source {
        return Err(Error::Unsupported("invariants need one-dimensional simples".into()));
    }
    Ok(m.blocks[s[0]].get(0, 0).clone())
}

/// Twist and braiding scalars of all center simples, with `φ_β(A)` identified
/// with `V*⊗A⊗V ≅ A` through the splitting.
pub fn center_invariants(c: &Category, reps: Vec<usize>) -> Result<CenterInvariants> {
    let br = Braided::with_reps(c, reps)?;
    let simples = center::all_simples(c)?;
    let gsize = c.data.group.size;
    let mut images = Vec::new();
    for s in &simples {
        images.push((0..gsize).map(|b| br.cr.phi(b, &s.hb)).collect::<Result<Vec<_>>>()?);
    }
    let mut twist = Vec::new();
    let mut braiding = Vec::new();
    for (i, s) in simples.iter().enumerate() {
        let (img, th) = br.twist(&s.hb)?;
        twist.push(bare_scalar(&img.q.compose(&th)?)?);
        let mut row = Vec::new();
        for t in &simples {
            let pv = &images[i][t.grade];
            let tau = gamma_big(c, pv, &[t.hb.a.clone()])?.mor;
            let m = c.tensor_mor(&c.id(&t.hb.a), &pv.q).compose(&tau)?;
            row.push(bare_scalar(&m)?);
        }
        braiding.push(row);
    }
    Ok(CenterInvariants {
        labels: simples.iter().map(|s| s.label.clone()).collect(),
        grades: simples.iter().map(|s| s.grade).collect(),
        dims: simples.iter().map(|s| c.dim_obj(&s.hb.a)).collect(),
        twist,
        braiding,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DpiComparison {
    pub epi: String,
    pub section: Vec<usize>,
    pub ok: bool,
    /// center label, reference label
    pub matching: Vec<(String, String)>,
    pub discrepancy: Option<String>,
}

/// Match center simples with `D(π)` simples on grade, dimension, twist and
/// all mutual braiding scalars.
pub fn compare_center_vs_dpi(e: &Epimorphism, order: u32) -> Result<DpiComparison> {
    let c = Category::new(for_epi(e, order))?;
    let reference = dpi_reference(e, order)?;
    let inv = center_invariants(&c, e.section.clone())?;
    let mut out =
        DpiComparison { epi: e.name.clone(), section: e.section.clone(), ok: false, matching: Vec::new(), discrepancy: None };
    let n = inv.labels.len();
    if n != reference.simples.len() {
        out.discrepancy = Some(format!("{} center simples vs {} reference simples", n, reference.simples.len()));
        return Ok(out);
    }
    let one = c.one();
    let fits = |i: usize, j: usize| {
        let r = &reference.simples[j];
        inv.grades[i] == r.grade && inv.dims[i] == one && inv.twist[i] == reference.twist[j]
    };
    fn go(
        i: usize,
        n: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        fits: &dyn Fn(usize, usize) -> bool,
        inv: &CenterInvariants,
        rf: &DpiModel,
    ) -> bool {
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] || !fits(i, j) {
                continue;
            }
            let consistent = (0..i).all(|k| {
                inv.braiding[i][k] == rf.braiding[j][perm[k]] && inv.braiding[k][i] == rf.braiding[perm[k]][j]
            }) && inv.braiding[i][i] == rf.braiding[j][j];
            if !consistent {
                continue;
            }
            perm.push(j);
            used[j] = true;
            if go(i + 1, n, perm, used, fits, inv, rf) {
                return true;
            }
            perm.pop();
            used[j] = false;
        }
        false
    }
    let mut perm = Vec::new();
    if go(0, n, &mut perm, &mut vec![false; n], &fits, &inv, &reference) {
        out.ok = true;
        out.matching = (0..n).map(|i| (inv.labels[i].clone(), reference.simples[perm[i]].label.clone())).collect();
    } else {
        let lonely = (0..n).find(|&i| !(0..n).any(|j| fits(i, j)));
        out.discrepancy = Some(match lonely {
            Some(i) => format!(
                "{} (grade {}, twist {}) has no reference partner",
                inv.labels[i], inv.grades[i], inv.twist[i]
            ),
            None => "no bijection respects the braiding scalars".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::validate;

    #[test]
    fn pointed_basics() {
        let d = build_pointed(&FiniteGroup::trivial(), 4);
        assert_eq!(d.rank(), 1);
        let d = build_pointed(&FiniteGroup::cyclic(4), 4);
        assert_eq!(d.n(1, 2, 3), 1);
        assert_eq!(d.dual[1], 3);
        assert!(validate(&d, true).ok());
    }

    #[test]
    fn pushforward_grades() {
        let d = named("z4_to_z2").unwrap();
        assert_eq!(d.simples_of_grade(0), vec![0, 2]);
        assert_eq!(d.simples_of_grade(1), vec![1, 3]);
        let c = Category::new(d).unwrap();
        assert_eq!(c.dim_component(0), c.scalar(2));
        assert_eq!(c.dim_component(1), c.scalar(2));
        let e = named_epi("id_z2").unwrap();
        let d = for_epi(&e, 4);
        assert_eq!(d.grade, vec![0, 1]);
    }

    #[test]
    fn all_bundled_validate() {
        for n in BUNDLED {
            let rep = validate(&named(n).unwrap(), true);
            assert!(rep.ok(), "{n}: {:?}", rep.failures());
        }
    }

    #[test]
    fn twisted_validates() {
        for g in [true, false] {
            let d = twisted_z2(4, g);
            assert!(validate(&d, true).ok(), "{:?}", validate(&d, true).failures());
            let c = Category::new(d).unwrap();
            assert_eq!(c.ev_scalar(1), &-c.one());
            assert!(c.dim_l(1).is_one());
        }
        let mut d = twisted_z2(4, true);
        d.f_symbols.insert((1, 1, 1, 1), crate::linalg::Matrix::scalar(4, 1, &Cyclotomic::from_int(4, 2)));
        assert!(!validate(&d, true).get("pentagon").unwrap().ok);
    }

    #[test]
    fn sections() {
        let e = named_epi("z4_to_z2").unwrap();
        assert_eq!(e.section, vec![0, 1]);
        assert_eq!(e.alternative_sections(), vec![vec![0, 3]]);
        assert!(e.with_section(vec![0, 2]).is_err());
        assert_eq!(named_epi("z8_to_z2").unwrap().default_order(), 4);
    }

    #[test]
    fn reference_model_formulas() {
        let e = named_epi("z4_to_z2").unwrap();
        let m = dpi_reference(&e, 4).unwrap();
        assert_eq!(m.simples.len(), 8);
        let minus = -Cyclotomic::one(4);
        for (s, t) in m.simples.iter().zip(&m.twist) {
            if s.h == 1 {
                assert!(t.is_one());
            }
            if s.h == 3 && s.chi_exp == vec![0, 2] {
                assert_eq!(t, &minus);
            }
        }
        assert!(m.check_axioms(&e).is_empty());
        let t = dpi_reference(&named_epi("z2_to_1").unwrap(), 4).unwrap();
        assert_eq!(t.simples.len(), 4);
    }

    #[test]
    fn strict_iff_section_is_homomorphism() {
        let e = named_epi("z4_to_z2").unwrap();
        assert!(!dpi_reference(&e, 4).unwrap().is_strict());
        assert!(dpi_reference(&named_epi("id_z2").unwrap(), 4).unwrap().is_strict());
        let e = named_epi("z6_to_z3").unwrap();
        assert!(!dpi_reference(&e, 12).unwrap().is_strict());
        let e = e.with_section(vec![0, 4, 2]).unwrap();
        let m = dpi_reference(&e, 12).unwrap();
        assert!(m.is_strict());
        assert!(m.check_axioms(&e).is_empty());
    }

    #[test]
    fn characters_of_kernels() {
        for n in BUNDLED {
            let e = named_epi(n).unwrap();
            let ch = kernel_characters(&e, e.default_order()).unwrap();
            assert_eq!(ch.len(), e.kernel.len());
        }
        let e = named_epi("z8_to_z2").unwrap();
        assert!(matches!(kernel_characters(&e, 2), Err(Error::NonSplit(_))));
    }

    #[test]
    fn center_matches_reference() {
        for n in ["z4_to_z2", "z2_to_1", "id_z2"] {
            let e = named_epi(n).unwrap();
            let r = compare_center_vs_dpi(&e, e.default_order()).unwrap();
            assert!(r.ok, "{n}: {:?}", r.discrepancy);
            for s in e.alternative_sections() {
                let r = compare_center_vs_dpi(&e.with_section(s).unwrap(), e.default_order()).unwrap();
                assert!(r.ok, "{n}: {:?}", r.discrepancy);
            }
        }
    }
}
