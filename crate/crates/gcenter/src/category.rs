//! Skeletal spherical G-fusion categories and their hom-space calculus.
//!
//! Objects are multiplicity vectors over the simples, morphisms are one
//! matrix block per simple. Multi-fold tensor products are handled through
//! [`Word`]s, lists of objects evaluated as a left comb `((X₁⊗X₂)⊗X₃)⊗…`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub size: usize,
    pub mul: Vec<Vec<usize>>,
    pub unit: usize,
    pub inv: Vec<usize>,
}

impl FiniteGroup {
    /// Build from a multiplication table, checking the group axioms.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 || mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Validation("group: malformed multiplication table".into()));
        }
        let unit = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::Validation("group: no unit".into()))?;
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| mul[a][b] == unit && mul[b][a] == unit)
                .ok_or_else(|| Error::Validation(format!("group: element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::Validation("group: not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup { size: n, mul, unit, inv })
    }

    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(mul).expect("cyclic group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a⁻¹·b·a`
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.op(self.op(self.inv[a], b), a)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.op(a, b);
        let ba = self.op(b, a);
        self.op(self.inv[ba], ab)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.unit {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.size).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }
}

/// F-symbol key `(i, j, k, l)`: the block of `((i⊗j)⊗k → l)`.
pub type FKey = (usize, usize, usize, usize);

/// Skeletal presentation of a pivotal G-graded fusion category.
#[derive(Clone, Debug)]
pub struct FusionData {
    pub name: String,
    pub group: FiniteGroup,
    pub order: u32,
    pub labels: Vec<String>,
    pub grade: Vec<usize>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `fusion[i][j][k] = N_{ij}^k`
    pub fusion: Vec<Vec<Vec<usize>>>,
    /// Rows index left trees `(e, μ, ν)`, columns right trees `(f, γ, δ)`.
    /// Missing admissible keys are identity blocks.
    pub f_symbols: HashMap<FKey, Matrix>,
    pub pivotal: Vec<Cyclotomic>,
}

impl FusionData {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> usize {
        self.fusion[i][j][k]
    }

    pub fn simple_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Simples of grade `g`, in index order.
    pub fn simples_of_grade(&self, g: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.grade[i] == g).collect()
    }

    /// Left trees `(e, μ, ν)` for `((i⊗j)⊗k → l)`.
    pub fn left_trees(&self, i: usize, j: usize, k: usize, l: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for e in 0..self.rank() {
            for mu in 0..self.n(i, j, e) {
                for nu in 0..self.n(e, k, l) {
                    out.push((e, mu, nu));
                }
            }
        }
        out
    }

    /// Right trees `(f, γ, δ)` for `(i⊗(j⊗k) → l)`.
    pub fn right_trees(&self, i: usize, j: usize, k: usize, l: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.rank() {
            for ga in 0..self.n(j, k, f) {
                for de in 0..self.n(i, f, l) {
                    out.push((f, ga, de));
                }
            }
        }
        out
    }

    pub fn f_matrix(&self, i: usize, j: usize, k: usize, l: usize) -> Matrix {
        if let Some(m) = self.f_symbols.get(&(i, j, k, l)) {
            return m.clone();
        }
        let n = self.left_trees(i, j, k, l).len();
        Matrix::identity(self.order, n)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let perr = |m: &str| Error::Parse(m.to_string());
        let name = v.get("name").and_then(Value::as_str).unwrap_or("unnamed").to_string();
        let order = v
            .get("cyclotomic_order")
            .and_then(Value::as_u64)
            .filter(|&n| n >= 1)
            .ok_or_else(|| perr("missing or invalid cyclotomic_order"))? as u32;
        let g = v.get("group").ok_or_else(|| perr("missing group"))?;
        let size = g.get("size").and_then(Value::as_u64).ok_or_else(|| perr("group.size"))? as usize;
        let mul: Vec<Vec<usize>> = serde_json::from_value(g.get("mul").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("group.mul: {e}")))?;
        if mul.len() != size {
            return Err(perr("group.mul has wrong size"));
        }
        let group = FiniteGroup::from_table(mul).map_err(|e| match e {
            Error::Validation(m) => Error::Validation(m),
            other => other,
        })?;
        if let Some(u) = g.get("unit").and_then(Value::as_u64) {
            if u as usize != group.unit {
                return Err(Error::Validation("group: declared unit is not the unit".into()));
            }
        }
        let simples = v.get("simples").and_then(Value::as_array).ok_or_else(|| perr("missing simples"))?;
        let mut labels = Vec::new();
        let mut grade = Vec::new();
        for s in simples {
            labels.push(s.get("label").and_then(Value::as_str).ok_or_else(|| perr("simple label"))?.to_string());
            let gr = s.get("grade").and_then(Value::as_u64).ok_or_else(|| perr("simple grade"))? as usize;
            if gr >= size {
                return Err(perr("simple grade out of range"));
            }
            grade.push(gr);
        }
        let idx = |l: &str| -> Result<usize> {
            labels.iter().position(|x| x == l).ok_or_else(|| Error::Parse(format!("unknown simple {l}")))
        };
        let unit = idx(v.get("unit_simple").and_then(Value::as_str).ok_or_else(|| perr("unit_simple"))?)?;
        let r = labels.len();
        let mut dual = vec![usize::MAX; r];
        let dmap = v.get("dual").and_then(Value::as_object).ok_or_else(|| perr("missing dual"))?;
        for (a, b) in dmap {
            dual[idx(a)?] = idx(b.as_str().ok_or_else(|| perr("dual value"))?)?;
        }
        if dual.iter().any(|&d| d == usize::MAX) {
            return Err(perr("dual map incomplete"));
        }
        let mut fusion = vec![vec![vec![0usize; r]; r]; r];
        for e in v.get("fusion").and_then(Value::as_array).ok_or_else(|| perr("missing fusion"))? {
            let get = |k: &str| e.get(k).and_then(Value::as_str).ok_or_else(|| Error::Parse(format!("fusion.{k}")));
            let m = e.get("mult").and_then(Value::as_u64).ok_or_else(|| perr("fusion.mult"))? as usize;
            fusion[idx(get("i")?)?][idx(get("j")?)?][idx(get("k")?)?] = m;
        }
        let pivotal = match v.get("pivotal") {
            None => vec![Cyclotomic::one(order); r],
            Some(Value::String(s)) if s == "trivial" => vec![Cyclotomic::one(order); r],
            Some(Value::Object(m)) => {
                let mut p = vec![Cyclotomic::one(order); r];
                for (k, c) in m {
                    let c: Cyclotomic =
                        serde_json::from_value(c.clone()).map_err(|e| Error::Parse(format!("pivotal: {e}")))?;
                    p[idx(k)?] = promote(&c, order)?;
                }
                p
            }
            _ => return Err(perr("pivotal must be \"trivial\" or a map")),
        };
        let mut data = FusionData {
            name,
            group,
            order,
            labels: labels.clone(),
            grade,
            unit,
            dual,
            fusion,
            f_symbols: HashMap::new(),
            pivotal,
        };
        match v.get("f_symbols") {
            None => {}
            Some(Value::String(s)) if s == "trivial" => {}
            Some(Value::Array(list)) => {
                let mut explicit: HashMap<FKey, Matrix> = HashMap::new();
                for e in list {
                    let get = |k: &str| {
                        e.get(k).and_then(Value::as_str).ok_or_else(|| Error::Parse(format!("f_symbols.{k}")))
                    };
                    let slot = |k: &str| e.get(k).and_then(Value::as_u64).unwrap_or(0) as usize;
                    let (i, j, k, l) = (idx(get("i")?)?, idx(get("j")?)?, idx(get("k")?)?, idx(get("l")?)?);
                    let ef = idx(get("e")?)?;
                    let ff = idx(get("f")?)?;
                    let val: Cyclotomic = serde_json::from_value(e.get("value").cloned().unwrap_or(Value::Null))
                        .map_err(|er| Error::Parse(format!("f_symbols.value: {er}")))?;
                    let lt = data.left_trees(i, j, k, l);
                    let rt = data.right_trees(i, j, k, l);
                    let a = lt
                        .iter()
                        .position(|&t| t == (ef, slot("mu"), slot("nu")))
                        .ok_or_else(|| perr("f_symbols: inadmissible left tree"))?;
                    let b = rt
                        .iter()
                        .position(|&t| t == (ff, slot("gamma"), slot("delta")))
                        .ok_or_else(|| perr("f_symbols: inadmissible right tree"))?;
                    let m = explicit.entry((i, j, k, l)).or_insert_with(|| Matrix::zeros(order, lt.len(), rt.len()));
                    m.set(a, b, promote(&val, order)?);
                }
                data.f_symbols = explicit;
            }
            _ => return Err(perr("f_symbols must be \"trivial\" or a list")),
        }
        Ok(data)
    }

    pub fn to_value(&self) -> Value {
        let mut fusion = Vec::new();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                for k in 0..self.rank() {
                    if self.n(i, j, k) > 0 {
                        fusion.push(json!({"i": self.labels[i], "j": self.labels[j], "k": self.labels[k], "mult": self.n(i, j, k)}));
                    }
                }
            }
        }
        let f_symbols = if self.f_symbols.is_empty() {
            json!("trivial")
        } else {
            let mut keys: Vec<&FKey> = self.f_symbols.keys().collect();
            keys.sort();
            let mut list = Vec::new();
            for &(i, j, k, l) in keys {
                let m = &self.f_symbols[&(i, j, k, l)];
                let lt = self.left_trees(i, j, k, l);
                let rt = self.right_trees(i, j, k, l);
                for (a, &(e, mu, nu)) in lt.iter().enumerate() {
                    for (b, &(f, ga, de)) in rt.iter().enumerate() {
                        let v = m.get(a, b);
                        if v.is_zero() {
                            continue;
                        }
                        list.push(json!({
                            "i": self.labels[i], "j": self.labels[j], "k": self.labels[k], "l": self.labels[l],
                            "e": self.labels[e], "f": self.labels[f],
                            "mu": mu, "nu": nu, "gamma": ga, "delta": de, "value": v,
                        }));
                    }
                }
            }
            Value::Array(list)
        };
        let pivotal = if self.pivotal.iter().all(|p| p.is_one()) {
            json!("trivial")
        } else {
            let mut m = serde_json::Map::new();
            for (i, p) in self.pivotal.iter().enumerate() {
                m.insert(self.labels[i].clone(), serde_json::to_value(p).expect("serializable"));
            }
            Value::Object(m)
        };
        let mut dual = serde_json::Map::new();
        for i in 0..self.rank() {
            dual.insert(self.labels[i].clone(), json!(self.labels[self.dual[i]]));
        }
        json!({
            "name": self.name,
            "cyclotomic_order": self.order,
            "group": {"size": self.group.size, "mul": self.group.mul, "unit": self.group.unit},
            "simples": (0..self.rank()).map(|i| json!({"label": self.labels[i], "grade": self.grade[i]})).collect::<Vec<_>>(),
            "unit_simple": self.labels[self.unit],
            "dual": dual,
            "fusion": fusion,
            "f_symbols": f_symbols,
            "pivotal": pivotal,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable")
    }
}

fn promote(c: &Cyclotomic, order: u32) -> Result<Cyclotomic> {
    if order % c.order() != 0 {
        return Err(Error::Parse(format!(
            "scalar of order {} does not embed in Q(zeta_{order})",
            c.order()
        )));
    }
    Ok(c.promote(order))
}

/// Object of the skeleton: multiplicity of each simple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj {
    pub mult: Vec<usize>,
}

impl Obj {
    pub fn zero(rank: usize) -> Self {
        Obj { mult: vec![0; rank] }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut o = Self::zero(rank);
        o.mult[i] = 1;
        o
    }

    pub fn total(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&i| self.mult[i] > 0).collect()
    }

    pub fn direct_sum(&self, other: &Obj) -> Obj {
        Obj { mult: self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect() }
    }
}

/// Morphism: one `target.mult[i] × source.mult[i]` block per simple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mor {
    pub source: Obj,
    pub target: Obj,
    pub blocks: Vec<Matrix>,
}

impl Mor {
    pub fn zero(order: u32, source: &Obj, target: &Obj) -> Self {
        let blocks = (0..source.mult.len()).map(|i| Matrix::zeros(order, target.mult[i], source.mult[i])).collect();
        Mor { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn identity(order: u32, x: &Obj) -> Self {
        let blocks = x.mult.iter().map(|&m| Matrix::identity(order, m)).collect();
        Mor { source: x.clone(), target: x.clone(), blocks }
    }

    pub fn order(&self) -> u32 {
        self.blocks.first().map_or(1, |b| b.order())
    }

    pub fn then(&self, g: &Mor) -> Result<Mor> {
        g.compose(self)
    }

    /// `self ∘ f`
    pub fn compose(&self, f: &Mor) -> Result<Mor> {
        if f.target != self.source {
            return Err(Error::Dimension("compose: object mismatch".into()));
        }
        let blocks = self.blocks.iter().zip(&f.blocks).map(|(a, b)| a.mul(b)).collect::<Result<_>>()?;
        Ok(Mor { source: f.source.clone(), target: self.target.clone(), blocks })
    }

    pub fn add(&self, g: &Mor) -> Result<Mor> {
        if self.source != g.source || self.target != g.target {
            return Err(Error::Dimension("add: object mismatch".into()));
        }
        let blocks = self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Mor { source: self.source.clone(), target: self.target.clone(), blocks })
    }

    pub fn sub(&self, g: &Mor) -> Result<Mor> {
        self.add(&g.scale(&-Cyclotomic::one(g.order())))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Mor {
        Mor {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.blocks.iter().all(Matrix::is_identity)
    }

    pub fn inverse(&self) -> Result<Mor> {
        let blocks = self.blocks.iter().map(Matrix::inverse).collect::<Result<_>>()?;
        Ok(Mor { source: self.target.clone(), target: self.source.clone(), blocks })
    }

    /// The scalar of an endomorphism of a simple object.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        let supp = self.source.support();
        if self.source != self.target || supp.len() != 1 || self.source.mult[supp[0]] != 1 {
            return None;
        }
        Some(self.blocks[supp[0]].get(0, 0).clone())
    }

    /// Flattened coordinates, block by block.
    pub fn coords(&self) -> Vec<Cyclotomic> {
        self.blocks.iter().flat_map(|b| b.to_dense()).collect()
    }

    pub fn from_coords(order: u32, source: &Obj, target: &Obj, v: &[Cyclotomic]) -> Mor {
        let mut m = Mor::zero(order, source, target);
        let mut pos = 0;
        for (i, b) in m.blocks.iter_mut().enumerate() {
            for r in 0..target.mult[i] {
                for c in 0..source.mult[i] {
                    b.set(r, c, v[pos].clone());
                    pos += 1;
                }
            }
        }
        m
    }

    pub fn hom_dim(source: &Obj, target: &Obj) -> usize {
        source.mult.iter().zip(&target.mult).map(|(a, b)| a * b).sum()
    }

    /// Basis of `Hom(source, target)` by matrix units.
    pub fn hom_basis(order: u32, source: &Obj, target: &Obj) -> Vec<Mor> {
        let d = Self::hom_dim(source, target);
        (0..d)
            .map(|k| {
                let mut v = vec![Cyclotomic::zero(order); d];
                v[k] = Cyclotomic::one(order);
                Mor::from_coords(order, source, target, &v)
            })
            .collect()
    }
}

/// Slot bookkeeping for a binary tensor product: block `k` of `X⊗Y` lists
/// slots `(i, j, a, b, μ)` ordered by `(i, j)` then `a`, `b`, `μ`.
#[derive(Clone, Debug)]
pub struct TensorWitness {
    pub left: Obj,
    pub right: Obj,
    pub product: Obj,
    offsets: Vec<HashMap<(usize, usize), usize>>,
}

impl TensorWitness {
    pub fn slot(&self, data: &FusionData, k: usize, i: usize, j: usize, a: usize, b: usize, mu: usize) -> usize {
        let n = data.n(i, j, k);
        self.offsets[k][&(i, j)] + (a * self.right.mult[j] + b) * n + mu
    }
}

pub type Word = Vec<Obj>;

/// Morphism between words, acting on their left-comb evaluations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WMor {
    pub src: Word,
    pub tgt: Word,
    pub mor: Mor,
}

impl WMor {
    pub fn is_zero(&self) -> bool {
        self.mor.is_zero()
    }
}

/// One summand of an I-partition.
#[derive(Clone, Debug)]
pub struct PartItem {
    pub simple: usize,
    pub p: Mor,
    pub q: Mor,
}

type TPair = (Mor, Mor);

/// A validated category together with memo tables for the calculus.
pub struct Category {
    pub data: FusionData,
    ev_scalar: Vec<Cyclotomic>,
    t_cache: Mutex<HashMap<(Word, Word), Arc<TPair>>>,
    assoc_cache: Mutex<HashMap<(Obj, Obj, Obj), Arc<TPair>>>,
}

impl Category {
    pub fn new(data: FusionData) -> Result<Self> {
        let r = data.rank();
        let mut ev_scalar = Vec::with_capacity(r);
        for i in 0..r {
            let d = data.dual[i];
            let lt = data.left_trees(i, d, i, i);
            let rt = data.right_trees(i, d, i, i);
            let a = lt.iter().position(|&(e, _, _)| e == data.unit);
            let b = rt.iter().position(|&(f, _, _)| f == data.unit);
            let (Some(a), Some(b)) = (a, b) else {
                return Err(Error::Validation(format!("duality: {} has no dual pairing", data.labels[i])));
            };
            let f = data.f_matrix(i, d, i, i);
            let val = f.get(a, b).inv().map_err(|_| {
                Error::Validation(format!("duality: singular F-symbol for {}", data.labels[i]))
            })?;
            ev_scalar.push(val);
        }
        Ok(Category {
            data,
            ev_scalar,
            t_cache: Mutex::new(HashMap::new()),
            assoc_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn order(&self) -> u32 {
        self.data.order
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.order())
    }

    pub fn scalar(&self, v: i64) -> Cyclotomic {
        Cyclotomic::from_int(self.order(), v)
    }

    pub fn unit_obj(&self) -> Obj {
        Obj::simple(self.rank(), self.data.unit)
    }

    pub fn simple(&self, i: usize) -> Obj {
        Obj::simple(self.rank(), i)
    }

    pub fn zero_obj(&self) -> Obj {
        Obj::zero(self.rank())
    }

    pub fn grade_of(&self, x: &Obj) -> Option<usize> {
        let gs: Vec<usize> = x.support().iter().map(|&i| self.data.grade[i]).collect();
        match gs.first() {
            Some(&g) if gs.iter().all(|&h| h == g) => Some(g),
            _ => None,
        }
    }

    pub fn label(&self, x: &Obj) -> String {
        let parts: Vec<String> = x
            .support()
            .iter()
            .map(|&i| {
                if x.mult[i] == 1 {
                    self.data.labels[i].clone()
                } else {
                    format!("{}*{}", x.mult[i], self.data.labels[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    pub fn dual_obj(&self, x: &Obj) -> Obj {
        let mut m = vec![0; self.rank()];
        for i in 0..self.rank() {
            m[self.data.dual[i]] = x.mult[i];
        }
        Obj { mult: m }
    }

    pub fn id(&self, x: &Obj) -> Mor {
        Mor::identity(self.order(), x)
    }

    pub fn zero_mor(&self, x: &Obj, y: &Obj) -> Mor {
        Mor::zero(self.order(), x, y)
    }

    pub fn tensor_obj(&self, x: &Obj, y: &Obj) -> (Obj, TensorWitness) {
        let r = self.rank();
        let mut mult = vec![0; r];
        let mut offsets = vec![HashMap::new(); r];
        for k in 0..r {
            for i in 0..r {
                if x.mult[i] == 0 {
                    continue;
                }
                for j in 0..r {
                    let n = self.data.n(i, j, k);
                    if y.mult[j] == 0 || n == 0 {
                        continue;
                    }
                    offsets[k].insert((i, j), mult[k]);
                    mult[k] += x.mult[i] * y.mult[j] * n;
                }
            }
        }
        let product = Obj { mult };
        (product.clone(), TensorWitness { left: x.clone(), right: y.clone(), product, offsets })
    }

    pub fn tensor(&self, x: &Obj, y: &Obj) -> Obj {
        self.tensor_obj(x, y).0
    }

    pub fn tensor_mor(&self, f: &Mor, g: &Mor) -> Mor {
        let (_, ws) = self.tensor_obj(&f.source, &g.source);
        let (_, wt) = self.tensor_mor_witness(&f.target, &g.target);
        self.tensor_mor_with(f, g, &ws, &wt)
    }

    fn tensor_mor_witness(&self, x: &Obj, y: &Obj) -> (Obj, TensorWitness) {
        self.tensor_obj(x, y)
    }

    pub fn tensor_mor_with(&self, f: &Mor, g: &Mor, ws: &TensorWitness, wt: &TensorWitness) -> Mor {
        let r = self.rank();
        let d = &self.data;
        let mut out = Mor::zero(self.order(), &ws.product, &wt.product);
        for k in 0..r {
            for i in 0..r {
                for j in 0..r {
                    let n = d.n(i, j, k);
                    if n == 0 {
                        continue;
                    }
                    let (fs, ft) = (f.source.mult[i], f.target.mult[i]);
                    let (gs, gt) = (g.source.mult[j], g.target.mult[j]);
                    if fs * gs == 0 || ft * gt == 0 {
                        continue;
                    }
                    for a2 in 0..ft {
                        for (a, x) in f.blocks[i].row_entries(a2) {
                            for b2 in 0..gt {
                                for (b, y) in g.blocks[j].row_entries(b2) {
                                    let v = x * y;
                                    for mu in 0..n {
                                        let s = ws.slot(d, k, i, j, *a, *b, mu);
                                        let t = wt.slot(d, k, i, j, a2, b2, mu);
                                        out.blocks[k].set(t, s, v.clone());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `α_{X,Y,Z}: (X⊗Y)⊗Z → X⊗(Y⊗Z)` and its inverse.
    pub fn associator_pair(&self, x: &Obj, y: &Obj, z: &Obj) -> Arc<TPair> {
        let key = (x.clone(), y.clone(), z.clone());
        if let Some(v) = self.assoc_cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(self.build_associator(x, y, z));
        self.assoc_cache.lock().unwrap().insert(key, v.clone());
        v
    }

    pub fn associator(&self, x: &Obj, y: &Obj, z: &Obj) -> Mor {
        self.associator_pair(x, y, z).0.clone()
    }

    fn build_associator(&self, x: &Obj, y: &Obj, z: &Obj) -> TPair {
        let r = self.rank();
        let d = &self.data;
        let (xy, w_xy) = self.tensor_obj(x, y);
        let (_, w_l) = self.tensor_obj(&xy, z);
        let (yz, w_yz) = self.tensor_obj(y, z);
        let (_, w_r) = self.tensor_obj(x, &yz);
        let mut out = Mor::zero(self.order(), &w_l.product, &w_r.product);
        let mut inv = Mor::zero(self.order(), &w_r.product, &w_l.product);
        for i in x.support() {
            for j in y.support() {
                for k in z.support() {
                    for l in 0..r {
                        let lt = d.left_trees(i, j, k, l);
                        if lt.is_empty() {
                            continue;
                        }
                        let rt = d.right_trees(i, j, k, l);
                        let f = d.f_matrix(i, j, k, l);
                        let finv = f.inverse().expect("invertible F-matrix");
                        for a in 0..x.mult[i] {
                            for b in 0..y.mult[j] {
                                for c in 0..z.mult[k] {
                                    for (li, &(e, mu, nu)) in lt.iter().enumerate() {
                                        let s_xy = w_xy.slot(d, e, i, j, a, b, mu);
                                        let src = w_l.slot(d, l, e, k, s_xy, c, nu);
                                        for (ri, &(ff, ga, de)) in rt.iter().enumerate() {
                                            let s_yz = w_yz.slot(d, ff, j, k, b, c, ga);
                                            let tgt = w_r.slot(d, l, i, ff, a, s_yz, de);
                                            let v = f.get(li, ri);
                                            if !v.is_zero() {
                                                out.blocks[l].set(tgt, src, v.clone());
                                            }
                                            let w = finv.get(ri, li);
                                            if !w.is_zero() {
                                                inv.blocks[l].set(src, tgt, w.clone());
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        (out, inv)
    }

    /// Pentagon check on four objects.
    pub fn pentagon_holds(&self, a: &Obj, b: &Obj, c: &Obj, d: &Obj) -> bool {
        let ab = self.tensor(a, b);
        let bc = self.tensor(b, c);
        let cd = self.tensor(c, d);
        let bcd = self.tensor(&bc, d);
        let lhs = self
            .tensor_mor(&self.associator(a, b, c), &self.id(d))
            .then(&self.associator(a, &bc, d))
            .and_then(|m| m.then(&self.tensor_mor(&self.id(a), &self.associator(b, c, d))));
        let rhs = self.associator(&ab, c, d).then(&self.associator(a, b, &cd));
        let _ = bcd;
        matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
    }

    // ---- words ----

    pub fn comb(&self, w: &[Obj]) -> Obj {
        let mut acc = self.unit_obj();
        for (n, x) in w.iter().enumerate() {
            acc = if n == 0 { x.clone() } else { self.tensor(&acc, x) };
        }
        acc
    }

    /// `T_{A,C}: comb(A++C) → comb(A)⊗comb(C)` and its inverse.
    fn t_map(&self, a: &[Obj], c: &[Obj]) -> Arc<TPair> {
        let key = (a.to_vec(), c.to_vec());
        if let Some(v) = self.t_cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = if a.is_empty() || c.len() <= 1 {
            let whole: Vec<Obj> = a.iter().chain(c).cloned().collect();
            let o = self.comb(&whole);
            Arc::new((self.id(&o), self.id(&o)))
        } else {
            let (c0, last) = c.split_at(c.len() - 1);
            let prev = self.t_map(a, c0);
            let pa = self.comb(a);
            let pc = self.comb(c0);
            let asc = self.associator_pair(&pa, &pc, &last[0]);
            let idl = self.id(&last[0]);
            let fwd = asc.0.compose(&self.tensor_mor(&prev.0, &idl)).expect("t-map");
            let bwd = self.tensor_mor(&prev.1, &idl).compose(&asc.1).expect("t-map");
            Arc::new((fwd, bwd))
        };
        self.t_cache.lock().unwrap().insert(key, v.clone());
        v
    }

    pub fn wid(&self, w: &[Obj]) -> WMor {
        WMor { src: w.to_vec(), tgt: w.to_vec(), mor: self.id(&self.comb(w)) }
    }

    /// Wrap a plain morphism `comb(src) → comb(tgt)`.
    pub fn wrap(&self, src: &[Obj], tgt: &[Obj], mor: Mor) -> WMor {
        debug_assert_eq!(mor.source, self.comb(src));
        debug_assert_eq!(mor.target, self.comb(tgt));
        WMor { src: src.to_vec(), tgt: tgt.to_vec(), mor }
    }

    pub fn atom(&self, m: &Mor) -> WMor {
        WMor { src: vec![m.source.clone()], tgt: vec![m.target.clone()], mor: m.clone() }
    }

    pub fn wzero(&self, src: &[Obj], tgt: &[Obj]) -> WMor {
        WMor { src: src.to_vec(), tgt: tgt.to_vec(), mor: self.zero_mor(&self.comb(src), &self.comb(tgt)) }
    }

    /// The identity `W → [comb(W)]`.
    pub fn fuse(&self, w: &[Obj]) -> WMor {
        let o = self.comb(w);
        WMor { src: w.to_vec(), tgt: vec![o.clone()], mor: self.id(&o) }
    }

    pub fn unfuse(&self, w: &[Obj]) -> WMor {
        let o = self.comb(w);
        WMor { src: vec![o.clone()], tgt: w.to_vec(), mor: self.id(&o) }
    }

    /// Reinterpret `f` with new source/target words of the same combs.
    pub fn retype(&self, f: &WMor, src: &[Obj], tgt: &[Obj]) -> Result<WMor> {
        if self.comb(src) != f.mor.source || self.comb(tgt) != f.mor.target {
            return Err(Error::Dimension("retype: comb mismatch".into()));
        }
        Ok(WMor { src: src.to_vec(), tgt: tgt.to_vec(), mor: f.mor.clone() })
    }

    /// `g ∘ f`
    pub fn comp(&self, g: &WMor, f: &WMor) -> Result<WMor> {
        if f.tgt != g.src {
            return Err(Error::Dimension(format!(
                "word mismatch: [{}] vs [{}]",
                self.word_label(&f.tgt),
                self.word_label(&g.src)
            )));
        }
        Ok(WMor { src: f.src.clone(), tgt: g.tgt.clone(), mor: g.mor.compose(&f.mor)? })
    }

    /// Compose in diagram order: `fs[n-1] ∘ … ∘ fs[0]`.
    pub fn seq(&self, fs: &[&WMor]) -> Result<WMor> {
        let mut acc = fs[0].clone();
        for f in &fs[1..] {
            acc = self.comp(f, &acc)?;
        }
        Ok(acc)
    }

    pub fn wadd(&self, f: &WMor, g: &WMor) -> Result<WMor> {
        if f.src != g.src || f.tgt != g.tgt {
            return Err(Error::Dimension("add: word mismatch".into()));
        }
        Ok(WMor { src: f.src.clone(), tgt: f.tgt.clone(), mor: f.mor.add(&g.mor)? })
    }

    pub fn wscale(&self, f: &WMor, c: &Cyclotomic) -> WMor {
        WMor { src: f.src.clone(), tgt: f.tgt.clone(), mor: f.mor.scale(c) }
    }

    pub fn tens(&self, f: &WMor, g: &WMor) -> WMor {
        let src: Word = f.src.iter().chain(&g.src).cloned().collect();
        let tgt: Word = f.tgt.iter().chain(&g.tgt).cloned().collect();
        if g.src.is_empty() && g.tgt.is_empty() {
            let s = g.mor.as_scalar().expect("endomorphism of the unit");
            return WMor { src, tgt, mor: f.mor.scale(&s) };
        }
        if f.src.is_empty() && f.tgt.is_empty() {
            let s = f.mor.as_scalar().expect("endomorphism of the unit");
            return WMor { src, tgt, mor: g.mor.scale(&s) };
        }
        let ts = self.t_map(&f.src, &g.src);
        let tt = self.t_map(&f.tgt, &g.tgt);
        let mid = self.tensor_mor(&f.mor, &g.mor);
        let mor = tt.1.compose(&mid).and_then(|m| m.compose(&ts.0)).expect("tensor of word morphisms");
        WMor { src, tgt, mor }
    }

    pub fn tens_all(&self, fs: &[&WMor]) -> WMor {
        let mut acc = fs[0].clone();
        for f in &fs[1..] {
            acc = self.tens(&acc, f);
        }
        acc
    }

    /// `id_L ⊗ f ⊗ id_R`
    pub fn whisker(&self, l: &[Obj], f: &WMor, r: &[Obj]) -> WMor {
        let mut acc = f.clone();
        if !l.is_empty() {
            acc = self.tens(&self.wid(l), &acc);
        }
        if !r.is_empty() {
            acc = self.tens(&acc, &self.wid(r));
        }
        acc
    }

    pub fn word_label(&self, w: &[Obj]) -> String {
        w.iter().map(|x| self.label(x)).collect::<Vec<_>>().join(", ")
    }

    // ---- duality ----

    pub fn ev_scalar(&self, i: usize) -> &Cyclotomic {
        &self.ev_scalar[i]
    }

    pub fn pivotal(&self, i: usize) -> &Cyclotomic {
        &self.data.pivotal[i]
    }

    /// `ev_X: X*⊗X → 𝟙`
    pub fn ev(&self, x: &Obj) -> WMor {
        let xd = self.dual_obj(x);
        let (_, w) = self.tensor_obj(&xd, x);
        let u = self.data.unit;
        let mut m = Mor::zero(self.order(), &w.product, &self.unit_obj());
        for i in x.support() {
            let di = self.data.dual[i];
            for a in 0..x.mult[i] {
                m.blocks[u].set(0, w.slot(&self.data, u, di, i, a, a, 0), self.ev_scalar[i].clone());
            }
        }
        WMor { src: vec![xd, x.clone()], tgt: vec![], mor: m }
    }

    /// `coev_X: 𝟙 → X⊗X*`
    pub fn coev(&self, x: &Obj) -> WMor {
        let xd = self.dual_obj(x);
        let (_, w) = self.tensor_obj(x, &xd);
        let u = self.data.unit;
        let mut m = Mor::zero(self.order(), &self.unit_obj(), &w.product);
        for i in x.support() {
            let di = self.data.dual[i];
            for a in 0..x.mult[i] {
                m.blocks[u].set(w.slot(&self.data, u, i, di, a, a, 0), 0, self.one());
            }
        }
        WMor { src: vec![], tgt: vec![x.clone(), xd], mor: m }
    }

    /// Pivotal structure `φ_X: X → X**` (with `X** = X`).
    pub fn phi(&self, x: &Obj) -> Mor {
        let mut m = self.id(x);
        for i in x.support() {
            m.blocks[i] = m.blocks[i].scale(&self.data.pivotal[i]);
        }
        m
    }

    pub fn phi_inv(&self, x: &Obj) -> Mor {
        self.phi(x).inverse().expect("pivotal coefficients are invertible")
    }

    /// `ev~_X = ev_{X*}(φ_X⊗id): X⊗X* → 𝟙`
    pub fn ev_tilde(&self, x: &Obj) -> WMor {
        let xd = self.dual_obj(x);
        let e = self.ev(&xd);
        let f = self.tens(&self.atom(&self.phi(x)), &self.wid(&[xd]));
        self.comp(&e, &f).expect("ev~")
    }

    /// `coev~_X = (id⊗φ_X⁻¹)coev_{X*}: 𝟙 → X*⊗X`
    pub fn coev_tilde(&self, x: &Obj) -> WMor {
        let xd = self.dual_obj(x);
        let c = self.coev(&xd);
        let f = self.tens(&self.wid(&[xd]), &self.atom(&self.phi_inv(x)));
        self.comp(&f, &c).expect("coev~")
    }

    pub fn dual_word(&self, w: &[Obj]) -> Word {
        w.iter().rev().map(|x| self.dual_obj(x)).collect()
    }

    /// `ev_W: W*++W → []`
    pub fn ev_w(&self, w: &[Obj]) -> WMor {
        if w.is_empty() {
            return self.wid(&[]);
        }
        if w.len() == 1 {
            return self.ev(&w[0]);
        }
        let (rest, last) = w.split_at(w.len() - 1);
        let x = &last[0];
        let inner = self.whisker(&[self.dual_obj(x)], &self.ev_w(rest), &[x.clone()]);
        self.comp(&self.ev(x), &inner).expect("ev_W")
    }

    /// `coev_W: [] → W++W*`
    pub fn coev_w(&self, w: &[Obj]) -> WMor {
        if w.is_empty() {
            return self.wid(&[]);
        }
        if w.len() == 1 {
            return self.coev(&w[0]);
        }
        let (rest, last) = w.split_at(w.len() - 1);
        let inner = self.whisker(rest, &self.coev(&last[0]), &self.dual_word(rest));
        self.comp(&inner, &self.coev_w(rest)).expect("coev_W")
    }

    /// `ev~_W: W++W* → []`
    pub fn ev_tilde_w(&self, w: &[Obj]) -> WMor {
        if w.is_empty() {
            return self.wid(&[]);
        }
        if w.len() == 1 {
            return self.ev_tilde(&w[0]);
        }
        let (rest, last) = w.split_at(w.len() - 1);
        let inner = self.whisker(rest, &self.ev_tilde(&last[0]), &self.dual_word(rest));
        self.comp(&self.ev_tilde_w(rest), &inner).expect("ev~_W")
    }

    /// `coev~_W: [] → W*++W`
    pub fn coev_tilde_w(&self, w: &[Obj]) -> WMor {
        if w.is_empty() {
            return self.wid(&[]);
        }
        if w.len() == 1 {
            return self.coev_tilde(&w[0]);
        }
        let (rest, last) = w.split_at(w.len() - 1);
        let x = &last[0];
        let inner = self.whisker(&[self.dual_obj(x)], &self.coev_tilde_w(rest), &[x.clone()]);
        self.comp(&inner, &self.coev_tilde(x)).expect("coev~_W")
    }

    /// Left dual `f*: W2* → W1*` of `f: W1 → W2`.
    pub fn dual_mor(&self, f: &WMor) -> WMor {
        let d1 = self.dual_word(&f.src);
        let d2 = self.dual_word(&f.tgt);
        let a = self.whisker(&d2, &self.coev_w(&f.src), &[]);
        let mid: Word = f.src.iter().chain(&d1).cloned().collect();
        let b = self.whisker(&d2, f, &d1);
        let _ = mid;
        let c = self.whisker(&[], &self.ev_w(&f.tgt), &d1);
        self.seq(&[&a, &b, &c]).expect("dual morphism")
    }

    /// Right-duality version `(id⊗ev~_{W2})(id⊗f⊗id)(coev~_{W1}⊗id)`.
    pub fn dual_mor_right(&self, f: &WMor) -> WMor {
        let d1 = self.dual_word(&f.src);
        let d2 = self.dual_word(&f.tgt);
        let a = self.whisker(&[], &self.coev_tilde_w(&f.src), &d2);
        let b = self.whisker(&d1, f, &d2);
        let c = self.whisker(&d1, &self.ev_tilde_w(&f.tgt), &[]);
        self.seq(&[&a, &b, &c]).expect("dual morphism")
    }

    pub fn dual_atom(&self, f: &Mor) -> Mor {
        self.dual_mor(&self.atom(f)).mor
    }

    pub fn trace_l(&self, g: &WMor) -> Cyclotomic {
        let w = &g.src;
        let dw = self.dual_word(w);
        let t = self.seq(&[&self.coev_tilde_w(w), &self.whisker(&dw, g, &[]), &self.ev_w(w)]).expect("trace");
        t.mor.as_scalar().expect("scalar")
    }

    pub fn trace_r(&self, g: &WMor) -> Cyclotomic {
        let w = &g.src;
        let dw = self.dual_word(w);
        let t = self.seq(&[&self.coev_w(w), &self.whisker(&[], g, &dw), &self.ev_tilde_w(w)]).expect("trace");
        t.mor.as_scalar().expect("scalar")
    }

    pub fn dim_l(&self, i: usize) -> Cyclotomic {
        &self.ev_scalar[i] * &self.data.pivotal[i].inv().expect("pivotal")
    }

    pub fn dim_r(&self, i: usize) -> Cyclotomic {
        &self.ev_scalar[self.data.dual[i]] * &self.data.pivotal[i]
    }

    pub fn dim_obj(&self, x: &Obj) -> Cyclotomic {
        let mut d = Cyclotomic::zero(self.order());
        for i in x.support() {
            d = &d + &self.dim_l(i).scale(&crate::scalars::Rational::from_integer(x.mult[i].into()));
        }
        d
    }

    /// `Σ_{i∈I_α} dim_l(i)·dim_r(i)`
    pub fn dim_component(&self, alpha: usize) -> Cyclotomic {
        let mut d = Cyclotomic::zero(self.order());
        for i in self.data.simples_of_grade(alpha) {
            d = &d + &(&self.dim_l(i) * &self.dim_r(i));
        }
        d
    }

    pub fn i_partition(&self, x: &Obj) -> Vec<PartItem> {
        let mut out = Vec::new();
        for k in x.support() {
            let s = self.simple(k);
            for a in 0..x.mult[k] {
                let mut p = self.zero_mor(x, &s);
                p.blocks[k].set(0, a, self.one());
                let mut q = self.zero_mor(&s, x);
                q.blocks[k].set(a, 0, self.one());
                out.push(PartItem { simple: k, p, q });
            }
        }
        out
    }

    /// Representative simples of grade `α` with invertible dimension.
    pub fn representatives(&self, alpha: usize) -> Vec<usize> {
        self.data.simples_of_grade(alpha).into_iter().filter(|&i| !self.dim_l(i).is_zero()).collect()
    }

    pub fn neutral_simples(&self) -> Vec<usize> {
        self.data.simples_of_grade(self.data.group.unit)
    }
}

/// One named check of a validation report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub axiom: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl Check {
    /// A passing check when `failures` is empty; the detail keeps the first three.
    pub fn from_failures(axiom: &str, failures: Vec<String>) -> Check {
        let ok = failures.is_empty();
        let detail = if ok { "ok".into() } else { failures.into_iter().take(3).collect::<Vec<_>>().join("; ") };
        Check { axiom: axiom.into(), ok, detail }
    }
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }

    pub fn get(&self, axiom: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    fn push(&mut self, axiom: &str, failures: Vec<String>) {
        self.checks.push(Check::from_failures(axiom, failures));
    }
}

/// Check the axioms of a pivotal G-fusion category. Pentagon checking is
/// quartic in the rank and can be skipped.
pub fn validate(data: &FusionData, pentagon: bool) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let r = data.rank();
    let g = &data.group;
    rep.push("group", FiniteGroup::from_table(g.mul.clone()).err().map(|e| vec![e.to_string()]).unwrap_or_default());

    let mut f = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if data.n(i, j, k) > 0 && data.grade[k] != g.op(data.grade[i], data.grade[j]) {
                    f.push(format!("N_{{{},{}}}^{} crosses grades", data.labels[i], data.labels[j], data.labels[k]));
                }
            }
        }
    }
    rep.push("grading", f);

    rep.push(
        "unit-grade",
        if data.grade[data.unit] == g.unit { vec![] } else { vec!["unit simple not in neutral grade".into()] },
    );

    let mut f = Vec::new();
    for i in 0..r {
        let d = data.dual[i];
        if data.dual[d] != i {
            f.push(format!("dual of {} is not an involution", data.labels[i]));
        }
        if data.grade[d] != g.inverse(data.grade[i]) {
            f.push(format!("{}* has wrong grade", data.labels[i]));
        }
    }
    rep.push("duality", f);

    let mut f = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let want = usize::from(j == data.dual[i]);
            if data.n(i, j, data.unit) != want {
                f.push(format!("N_{{{},{}}}^1 = {}", data.labels[i], data.labels[j], data.n(i, j, data.unit)));
            }
        }
        if (0..r).any(|k| data.n(data.unit, i, k) != usize::from(k == i) || data.n(i, data.unit, k) != usize::from(k == i)) {
            f.push(format!("unit does not act trivially on {}", data.labels[i]));
        }
    }
    rep.push("unit-fusion", f);

    let mut f = Vec::new();
    for a in 0..g.size {
        if data.simples_of_grade(a).is_empty() {
            f.push(format!("grade {a} has no simple"));
        }
    }
    rep.push("nonempty-components", f);

    // F-blocks must be square and invertible, with trivial unit legs
    let mut f = Vec::new();
    let mut normalized = true;
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    let lt = data.left_trees(i, j, k, l).len();
                    let rt = data.right_trees(i, j, k, l).len();
                    if lt != rt {
                        f.push(format!("({},{},{};{}) tree counts differ", data.labels[i], data.labels[j], data.labels[k], data.labels[l]));
                        continue;
                    }
                    if lt == 0 {
                        continue;
                    }
                    let m = data.f_matrix(i, j, k, l);
                    if m.rows() != lt || m.cols() != rt || m.inverse().is_err() {
                        f.push(format!("F^{{{},{},{}}}_{} not invertible", data.labels[i], data.labels[j], data.labels[k], data.labels[l]));
                    } else if (i == data.unit || j == data.unit || k == data.unit) && !m.is_identity() {
                        normalized = false;
                        f.push(format!("F^{{{},{},{}}}_{} not normalized", data.labels[i], data.labels[j], data.labels[k], data.labels[l]));
                    }
                }
            }
        }
    }
    let structural_ok = rep.checks.iter().all(|c| c.ok) && f.is_empty();
    rep.push("associativity", f);

    if pentagon && structural_ok {
        let cat = Category::new(data.clone());
        let mut f = Vec::new();
        match cat {
            Ok(cat) => {
                'outer: for a in 0..r {
                    for b in 0..r {
                        for c in 0..r {
                            for d in 0..r {
                                let o = |x| cat.simple(x);
                                if !cat.pentagon_holds(&o(a), &o(b), &o(c), &o(d)) {
                                    f.push(format!(
                                        "pentagon fails at ({},{},{},{})",
                                        data.labels[a], data.labels[b], data.labels[c], data.labels[d]
                                    ));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            Err(e) => f.push(e.to_string()),
        }
        rep.push("pentagon", f);
    } else if pentagon {
        rep.push("pentagon", vec!["skipped: structural checks failed".into()]);
    }

    let mut f = Vec::new();
    let mut nonsing = Vec::new();
    if structural_ok && normalized {
        match Category::new(data.clone()) {
            Ok(cat) => {
                for i in 0..r {
                    if cat.dim_l(i) != cat.dim_r(i) {
                        f.push(format!("dim_l({0}) != dim_r({0})", data.labels[i]));
                    }
                    let di = cat.dual_obj(&cat.simple(i));
                    let x = cat.simple(i);
                    let z1 = cat.seq(&[
                        &cat.tens(&cat.coev(&x), &cat.wid(&[x.clone()])),
                        &cat.tens(&cat.wid(&[x.clone()]), &cat.ev(&x)),
                    ]);
                    let z2 = cat.seq(&[
                        &cat.tens(&cat.wid(&[di.clone()]), &cat.coev(&x)),
                        &cat.tens(&cat.ev(&x), &cat.wid(&[di.clone()])),
                    ]);
                    let good = matches!((z1, z2), (Ok(a), Ok(b)) if a.mor.is_identity() && b.mor.is_identity());
                    if !good {
                        f.push(format!("zig-zag fails for {}", data.labels[i]));
                    }
                }
                for a in 0..g.size {
                    if cat.representatives(a).is_empty() {
                        nonsing.push(format!("grade {a} has no simple of invertible dimension"));
                    }
                }
                if cat.dim_component(g.unit).is_zero() {
                    nonsing.push("dim of the neutral component is zero".into());
                }
            }
            Err(e) => f.push(e.to_string()),
        }
    } else {
        f.push("skipped: structural checks failed".into());
        nonsing.push("skipped: structural checks failed".into());
    }
    rep.push("sphericity", f);
    rep.push("non-singularity", nonsing);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pointed(n: usize) -> FusionData {
        let g = FiniteGroup::cyclic(n);
        let r = n;
        let mut fusion = vec![vec![vec![0; r]; r]; r];
        for i in 0..r {
            for j in 0..r {
                fusion[i][j][(i + j) % n] = 1;
            }
        }
        FusionData {
            name: format!("Vec_Z{n}"),
            group: g,
            order: 4,
            labels: (0..n).map(|i| format!("d{i}")).collect(),
            grade: (0..n).collect(),
            unit: 0,
            dual: (0..n).map(|i| (n - i) % n).collect(),
            fusion,
            f_symbols: HashMap::new(),
            pivotal: vec![Cyclotomic::one(4); r],
        }
    }

    #[test]
    fn group_tables() {
        let g = FiniteGroup::cyclic(6);
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.inverse(2), 4);
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![0, 1]]).is_err());
    }

    #[test]
    fn tensor_of_simples_and_sums() {
        let c = Category::new(pointed(4)).unwrap();
        assert_eq!(c.tensor(&c.simple(1), &c.simple(3)), c.simple(0));
        let x = c.simple(2);
        assert_eq!(c.tensor(&x, &c.unit_obj()), x);
        let s = c.simple(0).direct_sum(&c.simple(2));
        let t = c.tensor(&s, &s);
        // brute force multiplicities
        let mut want = vec![0; 4];
        for i in [0, 2] {
            for j in [0, 2] {
                want[(i + j) % 4] += 1;
            }
        }
        assert_eq!(t.mult, want);
    }

    #[test]
    fn tensor_bilinear_and_interchange() {
        let c = Category::new(pointed(4)).unwrap();
        let two = c.id(&c.simple(1)).scale(&c.scalar(2));
        let three = c.id(&c.simple(2)).scale(&c.scalar(3));
        assert_eq!(c.tensor_mor(&two, &three), c.id(&c.simple(3)).scale(&c.scalar(6)));
        let s = c.simple(0).direct_sum(&c.simple(0)).direct_sum(&c.simple(2));
        let f = Mor::from_coords(4, &s, &s, &(1..=5).map(|v| c.scalar(v)).collect::<Vec<_>>());
        let g = Mor::from_coords(4, &s, &s, &(3..=7).map(|v| c.scalar(v * v - 9)).collect::<Vec<_>>());
        let lhs = c.tensor_mor(&f, &g).compose(&c.tensor_mor(&g, &f)).unwrap();
        let rhs = c.tensor_mor(&f.compose(&g).unwrap(), &g.compose(&f).unwrap());
        assert_eq!(lhs, rhs);
        assert!(c.tensor_mor(&c.id(&s), &c.id(&s)).is_identity());
    }

    #[test]
    fn pointed_data_validates() {
        let rep = validate(&pointed(4), true);
        assert!(rep.ok(), "{:?}", rep.failures());
    }

    #[test]
    fn grading_violation_named() {
        let mut d = pointed(4);
        d.fusion[1][1][2] = 0;
        d.fusion[1][1][3] = 1;
        let rep = validate(&d, false);
        assert!(!rep.get("grading").unwrap().ok);
    }

    #[test]
    fn zigzags_on_sums() {
        let c = Category::new(pointed(4)).unwrap();
        for x in [c.simple(1), c.simple(0).direct_sum(&c.simple(2)), c.unit_obj()] {
            let xd = c.dual_obj(&x);
            let z = c
                .seq(&[&c.tens(&c.coev(&x), &c.wid(&[x.clone()])), &c.tens(&c.wid(&[x.clone()]), &c.ev(&x))])
                .unwrap();
            assert!(z.mor.is_identity());
            let z = c
                .seq(&[&c.tens(&c.wid(&[xd.clone()]), &c.coev(&x)), &c.tens(&c.ev(&x), &c.wid(&[xd.clone()]))])
                .unwrap();
            assert!(z.mor.is_identity());
            let z = c
                .seq(&[&c.tens(&c.wid(&[x.clone()]), &c.coev_tilde(&x)), &c.tens(&c.ev_tilde(&x), &c.wid(&[x.clone()]))])
                .unwrap();
            assert!(z.mor.is_identity());
        }
        assert!(c.ev(&c.unit_obj()).mor.is_identity());
    }

    #[test]
    fn duals_of_morphisms() {
        let c = Category::new(pointed(4)).unwrap();
        let x = c.simple(1);
        let two = c.atom(&c.id(&x).scale(&c.scalar(2)));
        let d = c.dual_mor(&two);
        assert_eq!(d.mor, c.id(&c.simple(3)).scale(&c.scalar(2)));
        let s = c.simple(1).direct_sum(&c.simple(1));
        let f = c.atom(&Mor::from_coords(4, &s, &s, &[c.scalar(1), c.scalar(2), c.scalar(3), c.scalar(5)]));
        let g = c.atom(&Mor::from_coords(4, &s, &s, &[c.scalar(0), c.scalar(1), c.scalar(-1), c.scalar(4)]));
        assert_eq!(c.dual_mor(&f), c.dual_mor_right(&f));
        let fg = c.comp(&f, &g).unwrap();
        assert_eq!(c.dual_mor(&fg), c.comp(&c.dual_mor(&g), &c.dual_mor(&f)).unwrap());
        assert!(c.dual_mor(&c.wid(&[s.clone()])).mor.is_identity());
        assert_eq!(c.dual_mor(&c.dual_mor(&f)), f);
    }

    #[test]
    fn traces_and_dims() {
        let c = Category::new(pointed(4)).unwrap();
        assert!(c.trace_l(&c.wid(&[c.unit_obj()])).is_one());
        for i in 0..4 {
            assert!(c.trace_l(&c.wid(&[c.simple(i)])).is_one());
        }
        let s = c.simple(1).direct_sum(&c.simple(1));
        let f = c.atom(&Mor::from_coords(4, &s, &s, &[c.scalar(1), c.scalar(2), c.scalar(3), c.scalar(5)]));
        assert_eq!(c.trace_l(&f), c.scalar(6));
        assert_eq!(c.trace_l(&f), c.trace_r(&f));
        assert_eq!(c.trace_l(&f), c.trace_r(&c.dual_mor(&f)));
        assert_eq!(c.dim_component(0), c.scalar(1));
        let w = vec![c.simple(1), c.simple(2)];
        assert!(c.trace_l(&c.wid(&w)).is_one());
    }

    #[test]
    fn partitions_complete() {
        let c = Category::new(pointed(4)).unwrap();
        let x = c.simple(0).direct_sum(&c.simple(0)).direct_sum(&c.simple(3));
        let parts = c.i_partition(&x);
        assert_eq!(parts.len(), 3);
        let mut sum = c.zero_mor(&x, &x);
        for (a, pa) in parts.iter().enumerate() {
            sum = sum.add(&pa.q.compose(&pa.p).unwrap()).unwrap();
            for (b, pb) in parts.iter().enumerate() {
                if pa.simple == pb.simple {
                    let m = pa.p.compose(&pb.q).unwrap();
                    assert_eq!(m.is_identity(), a == b);
                    assert_eq!(m.is_zero(), a != b);
                }
            }
        }
        assert!(sum.is_identity());
    }

    #[test]
    fn json_roundtrip() {
        let d = pointed(2);
        let back = FusionData::parse_json(&d.to_json_string()).unwrap();
        assert_eq!(back.fusion, d.fusion);
        assert_eq!(back.labels, d.labels);
        assert!(matches!(FusionData::parse_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn word_tensor_is_associative() {
        let c = Category::new(pointed(4)).unwrap();
        let s = c.simple(1).direct_sum(&c.simple(3));
        let f = c.atom(&Mor::from_coords(4, &s, &s, &[c.scalar(2), c.scalar(3)]));
        let g = c.wid(&[c.simple(2), s.clone()]);
        let lhs = c.tens(&c.tens(&f, &g), &f);
        let rhs = c.tens(&f, &c.tens(&g, &f));
        assert_eq!(lhs, rhs);
    }
}
