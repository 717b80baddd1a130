//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! Elements are stored in the power basis modulo the cyclotomic polynomial
//! Φ_N, so every element has a unique coefficient vector of length deg Φ_N.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

pub type Rational = BigRational;

/// Precomputed data for one cyclotomic order.
#[derive(Debug)]
pub struct CycloTable {
    pub n: u32,
    pub phi: Vec<i64>,
    // x^t mod Φ_N for t < max(N, 2·deg - 1)
    powers: Vec<Vec<i64>>,
}

impl CycloTable {
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn power(&self, t: usize) -> &[i64] {
        if t < self.powers.len() {
            &self.powers[t]
        } else {
            &self.powers[t % self.n as usize]
        }
    }
}

fn poly_divide_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    // exact division of integer polynomials with monic divisor, low degree first
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    quot
}

/// The cyclotomic polynomial Φ_n with integer coefficients, low degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    table(n).phi.clone()
}

fn compute_phi(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = table(d).phi.clone();
            p = poly_divide_int(&p, &q);
        }
    }
    p
}

fn build_table(n: u32) -> CycloTable {
    let phi = compute_phi(n);
    let deg = phi.len() - 1;
    let count = (n as usize).max(2 * deg);
    let mut powers = Vec::with_capacity(count);
    let mut cur = vec![0i64; deg];
    if deg > 0 {
        cur[0] = 1;
    }
    for _ in 0..count {
        powers.push(cur.clone());
        // multiply by x and reduce
        let top = cur[deg - 1];
        for j in (1..deg).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..deg {
                cur[j] -= top * phi[j];
            }
        }
    }
    CycloTable { n, phi, powers }
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();

/// Shared table for order `n`. First writer wins under concurrent access.
pub fn table(n: u32) -> Arc<CycloTable> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let map = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = map.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_table(n));
    map.lock().unwrap().entry(n).or_insert(t).clone()
}

/// An element of ℚ(ζ_N).
#[derive(Clone)]
pub struct Cyclotomic {
    tab: Arc<CycloTable>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let tab = table(n);
        let d = tab.degree();
        Cyclotomic { tab, coeffs: vec![Rational::zero(); d] }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::one())
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_frac(n: u32, num: i64, den: i64) -> Self {
        Self::from_rational(n, Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(n: u32, r: Rational) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = r;
        z
    }

    /// ζ_N^k for any integer k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let tab = table(n);
        let t = k.rem_euclid(n as i64) as usize;
        let coeffs = tab.power(t).iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect();
        Cyclotomic { tab, coeffs }
    }

    /// Build from power-basis coefficients; reduces modulo Φ_N.
    pub fn from_coeffs(n: u32, cs: &[Rational]) -> Self {
        let tab = table(n);
        let mut out = vec![Rational::zero(); tab.degree()];
        for (t, c) in cs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &p) in tab.power(t).iter().enumerate() {
                if p != 0 {
                    out[j] += c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        Cyclotomic { tab, coeffs: out }
    }

    pub fn order(&self) -> u32 {
        self.tab.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Image in ℚ(ζ_m) for a multiple m of the current order.
    pub fn promote(&self, m: u32) -> Self {
        let n = self.order();
        if m == n {
            return self.clone();
        }
        assert!(m % n == 0, "promotion target {m} is not a multiple of {n}");
        let k = (m / n) as usize;
        let tab = table(m);
        let mut out = vec![Rational::zero(); tab.degree()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, &p) in tab.power(j * k).iter().enumerate() {
                if p != 0 {
                    out[t] += c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        Cyclotomic { tab, coeffs: out }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let m = (a.order() as u64).lcm(&(b.order() as u64)) as u32;
        (a.promote(m), b.promote(m))
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order(), r.recip()));
        }
        // extended Euclid: find s with s·a ≡ 1 mod Φ_N
        let phi: Vec<Rational> =
            self.tab.phi.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect();
        let a = trim(self.coeffs.clone());
        let (g, s) = poly_ext_gcd(&a, &phi);
        debug_assert!(g.len() == 1);
        let c = g[0].recip();
        let s: Vec<Rational> = s.into_iter().map(|x| x * &c).collect();
        Ok(Self::from_coeffs(self.order(), &s))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { tab: self.tab.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Numerical value in the embedding ζ_N ↦ exp(2πi/N).
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rat_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    pub fn to_json(&self) -> CyclotomicJson {
        CyclotomicJson {
            n: self.order(),
            coeffs: self.coeffs.iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect(),
        }
    }

    pub fn from_json(j: &CyclotomicJson) -> Result<Self, Error> {
        if j.n == 0 {
            return Err(Error::Parse("cyclotomic order must be positive".into()));
        }
        let tab = table(j.n);
        if j.coeffs.len() != tab.degree() {
            return Err(Error::Parse(format!(
                "cyclotomic of order {} needs {} coefficients, got {}",
                j.n,
                tab.degree(),
                j.coeffs.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for [num, den] in &j.coeffs {
            let num: BigInt = num.parse().map_err(|_| Error::Parse(format!("bad integer {num:?}")))?;
            let den: BigInt = den.parse().map_err(|_| Error::Parse(format!("bad integer {den:?}")))?;
            if !den.is_positive() {
                return Err(Error::Parse("denominator must be positive".into()));
            }
            coeffs.push(Rational::new(num, den));
        }
        Ok(Cyclotomic { tab, coeffs })
    }
}

fn rat_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Wire format: `{"N": n, "coeffs": [["num","den"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicJson {
    #[serde(rename = "N")]
    pub n: u32,
    pub coeffs: Vec<[String; 2]>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = CyclotomicJson::deserialize(d)?;
        Cyclotomic::from_json(&j).map_err(serde::de::Error::custom)
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
    p
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() - 1 < db || (r.len() == 1 && r[0].is_zero()) {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() - 1 >= db && !(r.len() == 1 && r[0].is_zero()) {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        r.pop();
        r = trim(r);
        if r.len() - 1 < db {
            break;
        }
    }
    (trim(q), r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

// returns (g, s) with s·a ≡ g mod b
fn poly_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![Rational::one()], vec![Rational::zero()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    (r0, s0)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order() == other.order() {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Self::aligned(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // only consistent within one order; callers hash within a fixed field
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order() != rhs.order() {
            let (a, b) = Cyclotomic::aligned(self, rhs);
            return &a + &b;
        }
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic { tab: self.tab.clone(), coeffs }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order() != rhs.order() {
            let (a, b) = Cyclotomic::aligned(self, rhs);
            return &a - &b;
        }
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x - y).collect();
        Cyclotomic { tab: self.tab.clone(), coeffs }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order() != rhs.order() {
            let (a, b) = Cyclotomic::aligned(self, rhs);
            return &a * &b;
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let d = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<Rational> = prod[..d].to_vec();
        for (t, c) in prod.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (j, &p) in self.tab.power(t).iter().enumerate() {
                if p != 0 {
                    out[j] += c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        Cyclotomic { tab: self.tab.clone(), coeffs: out }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { tab: self.tab.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Sum of two elements. Orders may differ; the result lives in the lcm order.
pub fn cyc_add(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    a + b
}

pub fn cyc_mul(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    a * b
}

pub fn cyc_inv(a: &Cyclotomic) -> Result<Cyclotomic, Error> {
    a.inv()
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match j {
                0 => format!("{c}"),
                1 if c.is_one() => format!("z{}", self.order()),
                1 => format!("{c}*z{}", self.order()),
                _ if c.is_one() => format!("z{}^{j}", self.order()),
                _ => format!("{c}*z{}^{j}", self.order()),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn phi_small_orders() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn third_roots_sum_to_minus_one() {
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(3, -1));
    }

    #[test]
    fn doubling() {
        assert_eq!(&z(4, 1) + &z(4, 1), z(4, 1).scale(&Rational::from_integer(2.into())));
        let x = &z(5, 2) + &Cyclotomic::from_frac(5, 1, 3);
        assert_eq!(&Cyclotomic::zero(5) + &x, x);
    }

    #[test]
    fn products_of_roots() {
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::from_int(4, -1));
        assert_eq!(&z(8, 1) * &z(8, 7), Cyclotomic::one(8));
        let x = &z(7, 3) - &Cyclotomic::from_int(7, 2);
        assert_eq!(&Cyclotomic::one(7) * &x, x);
    }

    #[test]
    fn inverses() {
        assert_eq!(Cyclotomic::from_int(1, 2).inv().unwrap(), Cyclotomic::from_frac(1, 1, 2));
        assert_eq!(z(8, 1).inv().unwrap(), z(8, 7));
        let a = &Cyclotomic::one(4) + &z(4, 1);
        let expect = (&Cyclotomic::one(4) - &z(4, 1)).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(a.inv().unwrap(), expect);
        assert_eq!(&a * &expect, Cyclotomic::one(4));
        assert!(matches!(Cyclotomic::zero(6).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn mixed_orders_promote() {
        let s = &z(3, 1) + &z(4, 1);
        assert_eq!(s.order(), 12);
        assert_eq!(z(4, 1).promote(12), z(12, 3));
        assert_eq!(z(2, 1), Cyclotomic::from_int(1, -1));
    }

    #[test]
    fn json_roundtrip() {
        let a = &z(8, 3) + &Cyclotomic::from_frac(8, -5, 7);
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with("{\"N\":8,\"coeffs\":[[\"-5\",\"7\"]"));
        let b: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<Cyclotomic>("{\"N\":8,\"coeffs\":[[\"1\",\"1\"]]}").is_err());
    }

    fn elem(n: u32) -> impl Strategy<Value = Cyclotomic> {
        let d = table(n).degree();
        prop::collection::vec((-6i64..7, 1i64..5), d).prop_map(move |cs| {
            let rs: Vec<Rational> = cs.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect();
            Cyclotomic::from_coeffs(n, &rs)
        })
    }

    fn order_and_three() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
        (1u32..=24).prop_flat_map(|n| (elem(n), elem(n), elem(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn field_axioms((a, b, c) in order_and_three()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            prop_assert!((&a - &b == Cyclotomic::zero(a.order())) == (a.coeffs() == b.coeffs()));
        }

        #[test]
        fn embedding_is_additive_and_multiplicative((a, b, _c) in (1u32..=12).prop_flat_map(|n| (elem(n), elem(n), elem(n))), k in 1u32..4) {
            let m = a.order() * k;
            prop_assert_eq!((&a + &b).promote(m), &a.promote(m) + &b.promote(m));
            prop_assert_eq!((&a * &b).promote(m), &a.promote(m) * &b.promote(m));
            prop_assert_eq!(a.promote(m) == b.promote(m), a == b);
        }
    }
}
