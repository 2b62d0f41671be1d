//! Noncommutative symmetric functions.
//!
//! Elements are stored on the complete basis `S^I` (products are concatenations there); the
//! elementary basis `Λ^I` and the ribbon basis `R_I` are views produced by [`NSym::expand`].
//! Transition rules:
//!
//! * `S^I = Σ_{J ≽ I} R_J` over the coarsenings `J` of `I`;
//! * `Λ_n = Σ_{I ⊨ n} (−1)^{n−ℓ(I)} S^I` and symmetrically `S_n = Σ (−1)^{n−ℓ(I)} Λ^I`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::format::{join_usize, linear_combination};
use crate::ncpart::ndpf_enumerate;
use crate::ring::{binomial, int, Rational, Ring};

/// A composition (sequence of positive parts).
///
/// Ordered by size, then length, then decreasing lexicographic order, which is how the
/// expansions are listed (`S[3] + 2S[2,1] + S[1,2] + S[1,1,1]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// All compositions of `n` (the single empty composition for `n = 0`).
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out: Vec<Composition> =
            (0u64..1 << (n - 1)).map(|mask| Self::from_descent_mask(n, mask)).collect();
        out.sort();
        out
    }

    /// Bit `i` of `mask` set means a cut after position `i + 1`.
    fn from_descent_mask(n: usize, mask: u64) -> Self {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Composition(parts)
    }

    fn descent_mask(&self) -> u64 {
        let mut mask = 0;
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// All `J` obtained by merging adjacent parts of `self` (including `self`).
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.0.len() <= 1 {
            return vec![self.clone()];
        }
        let gaps = self.0.len() - 1;
        (0u64..1 << gaps)
            .map(|keep| {
                let mut parts = vec![self.0[0]];
                for g in 0..gaps {
                    if keep >> g & 1 == 1 {
                        parts.push(self.0[g + 1]);
                    } else {
                        *parts.last_mut().unwrap() += self.0[g + 1];
                    }
                }
                Composition(parts)
            })
            .collect()
    }

    /// The composition of the same size whose descent set is the complement of `self`'s
    /// (conjugate of the mirror image): `3 ↔ 111`, `21 ↔ 12`.
    pub fn mirror_conjugate(&self) -> Self {
        let n = self.size();
        if n == 0 {
            return self.clone();
        }
        let full = (1u64 << (n - 1)) - 1;
        Self::from_descent_mask(n, !self.descent_mask() & full)
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join_usize(&self.0, ","))
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    S,
    Lambda,
    R,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::S => "S",
            Basis::Lambda => "L",
            Basis::R => "R",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "S" | "s" => Ok(Basis::S),
            "L" | "l" | "Lambda" | "lambda" | "Λ" => Ok(Basis::Lambda),
            "R" | "r" => Ok(Basis::R),
            other => Err(Error::Parse { position: 0, message: format!("unknown basis `{other}`") }),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Coefficients of an element on one basis, in display order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub basis: Basis,
    pub terms: BTreeMap<Composition, Rational>,
}

impl Expansion {
    pub fn new(basis: Basis) -> Self {
        Expansion { basis, terms: BTreeMap::new() }
    }

    pub fn with_terms(basis: Basis, terms: impl IntoIterator<Item = (Vec<usize>, i64)>) -> Self {
        let mut e = Expansion::new(basis);
        for (c, v) in terms {
            add_into(&mut e.terms, Composition(c), int(v));
        }
        e
    }

    pub fn coefficient(&self, c: &[usize]) -> Rational {
        self.terms.get(&Composition(c.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        let terms = self.terms.iter().map(|(c, v)| {
            let label = if c.is_empty() { String::new() } else { format!("{sym}{c}") };
            (label, v)
        });
        f.write_str(&linear_combination(terms))
    }
}

fn add_into(map: &mut BTreeMap<Composition, Rational>, key: Composition, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// An element of the algebra, on the `S` basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NSym {
    terms: BTreeMap<Composition, Rational>,
}

impl NSym {
    pub fn s(parts: &[usize]) -> Self {
        Self::monomial(Composition(parts.to_vec()), Rational::one())
    }

    /// `S_n`, with `S_0 = 1`.
    pub fn s_n(n: usize) -> Self {
        if n == 0 {
            Self::one()
        } else {
            Self::s(&[n])
        }
    }

    pub fn monomial(c: Composition, v: Rational) -> Self {
        let mut x = NSym::default();
        add_into(&mut x.terms, c, v);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<usize>, i64)>) -> Self {
        let mut x = NSym::default();
        for (c, v) in terms {
            add_into(&mut x.terms, Composition(c), int(v));
        }
        x
    }

    pub fn terms(&self) -> &BTreeMap<Composition, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, c: &[usize]) -> Rational {
        self.terms.get(&Composition(c.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, c: Composition, v: Rational) {
        add_into(&mut self.terms, c, v);
    }

    /// Homogeneous component of degree `n`.
    pub fn homogeneous(&self, n: usize) -> Self {
        NSym {
            terms: self.terms.iter().filter(|(c, _)| c.size() == n).map(|(c, v)| (c.clone(), v.clone())).collect(),
        }
    }

    pub fn truncate(&self, n: usize) -> Self {
        NSym {
            terms: self.terms.iter().filter(|(c, _)| c.size() <= n).map(|(c, v)| (c.clone(), v.clone())).collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Composition::size).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&[])
    }

    /// Product keeping only degrees `≤ n`.
    pub fn mul_trunc(&self, other: &Self, n: usize) -> Self {
        let mut out = NSym::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.size() + b.size() <= n {
                    add_into(&mut out.terms, a.concat(b), x * y);
                }
            }
        }
        out
    }

    /// Multiplicative inverse up to degree `n`, for a constant term of 1.
    pub fn inverse_trunc(&self, n: usize) -> Result<Self> {
        if self.constant_term() != Rational::one() {
            return Err(Error::Domain("series inverse needs constant term 1".into()));
        }
        // (1 + u)^{-1} = Σ (−u)^k
        let minus_u = self.sub(&Self::one()).neg().truncate(n);
        let mut acc = Self::one();
        let mut power = Self::one();
        for _ in 0..n {
            power = power.mul_trunc(&minus_u, n);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc)
    }

    /// Linear map defined on basis elements.
    pub fn map_linear(&self, mut image: impl FnMut(&Composition) -> NSym) -> NSym {
        let mut out = NSym::default();
        for (c, v) in &self.terms {
            for (d, w) in image(c).terms {
                add_into(&mut out.terms, d, v * w);
            }
        }
        out
    }

    /// Algebra morphism (`antimorphism` when `reverse`) given by the images of `S_n`.
    fn map_generators(&self, image: &mut impl FnMut(usize) -> NSym, reverse: bool) -> NSym {
        let mut cache: HashMap<usize, NSym> = HashMap::new();
        self.map_linear(|c| {
            let mut acc = NSym::one();
            let parts: Vec<usize> =
                if reverse { c.0.iter().rev().copied().collect() } else { c.0.clone() };
            for p in parts {
                let img = cache.entry(p).or_insert_with(|| image(p)).clone();
                acc = acc.mul(&img);
            }
            acc
        })
    }

    pub fn expand(&self, basis: Basis) -> Expansion {
        let mut out = Expansion::new(basis);
        for (c, v) in &self.terms {
            let img = match basis {
                Basis::S => vec![(c.clone(), Rational::one())],
                Basis::R => c.coarsenings().into_iter().map(|j| (j, Rational::one())).collect(),
                Basis::Lambda => s_in_lambda(c),
            };
            for (d, w) in img {
                add_into(&mut out.terms, d, v * w);
            }
        }
        out
    }

    pub fn from_expansion(e: &Expansion) -> NSym {
        let mut out = NSym::default();
        for (c, v) in &e.terms {
            let img = match e.basis {
                Basis::S => NSym::monomial(c.clone(), Rational::one()),
                Basis::R => ribbon(c),
                Basis::Lambda => lambda_product(c),
            };
            out = out.add(&img.scale(v));
        }
        out
    }

    /// The automorphism `S_n ↦ (−1)^n Λ_n`, written `f ↦ f(−A)`.
    pub fn minus_a(&self) -> NSym {
        self.map_generators(&mut |n| lambda_n(n).scale(&sign(n)), false)
    }

    /// `S^{i1,…,ir} ↦ S^{i1+1,i2,…,ir}`, `1 ↦ S_1`.
    pub fn omega(&self) -> NSym {
        self.map_linear(|c| {
            let mut parts = c.0.clone();
            match parts.first_mut() {
                Some(p) => *p += 1,
                None => parts.push(1),
            }
            NSym::s(&parts)
        })
    }

    /// Antipode of the Faà di Bruno coproduct (an antimorphism).
    pub fn antipode(&self) -> NSym {
        let table = antipode_generators(self.max_degree());
        self.map_generators(&mut |n| table[n].clone(), true)
    }

    /// Coproduct `Δ₁`, extended multiplicatively.
    pub fn delta1(&self) -> Tensor2 {
        let mut cache: HashMap<usize, Tensor2> = HashMap::new();
        let mut out = Tensor2::new();
        for (c, v) in &self.terms {
            let mut acc = tensor_unit();
            for &p in &c.0 {
                let d = cache.entry(p).or_insert_with(|| delta1_generator(p)).clone();
                acc = tensor_mul(&acc, &d);
            }
            for (k, w) in acc {
                tensor_add(&mut out, k, v * w);
            }
        }
        out
    }
}

impl Ring for NSym {
    fn zero() -> Self {
        NSym::default()
    }
    fn one() -> Self {
        NSym::monomial(Composition::empty(), Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, v) in &other.terms {
            add_into(&mut out.terms, c.clone(), v.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_trunc(other, usize::MAX)
    }
    fn neg(&self) -> Self {
        NSym { terms: self.terms.iter().map(|(c, v)| (c.clone(), -v)).collect() }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return NSym::default();
        }
        NSym { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 && !self.constant_term().is_zero() {
            return Some(NSym::one().scale(&self.constant_term().recip()));
        }
        None
    }
}

impl fmt::Display for NSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expand(Basis::S).fmt(f)
    }
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `Λ_n` on the `S` basis.
pub fn lambda_n(n: usize) -> NSym {
    let mut out = NSym::default();
    for c in Composition::all(n) {
        let s = sign(n - c.len());
        add_into(&mut out.terms, c, s);
    }
    out
}

fn lambda_product(c: &Composition) -> NSym {
    c.0.iter().fold(NSym::one(), |acc, &p| acc.mul(&lambda_n(p)))
}

/// `R_I = Σ_{J ≽ I} (−1)^{ℓ(I)−ℓ(J)} S^J`.
pub fn ribbon(c: &Composition) -> NSym {
    let mut out = NSym::default();
    for j in c.coarsenings() {
        let s = sign(c.len() - j.len());
        add_into(&mut out.terms, j, s);
    }
    out
}

fn s_in_lambda(c: &Composition) -> Vec<(Composition, Rational)> {
    // S_n = Σ (−1)^{n−ℓ(J)} Λ^J; the map S ↔ Λ is the same on generators.
    let mut acc: BTreeMap<Composition, Rational> = BTreeMap::new();
    acc.insert(Composition::empty(), Rational::one());
    for &p in &c.0 {
        let mut next = BTreeMap::new();
        for (a, x) in &acc {
            for j in Composition::all(p) {
                add_into(&mut next, a.concat(&j), x * sign(p - j.len()));
            }
        }
        acc = next;
    }
    acc.into_iter().collect()
}

/// `S_m(kA) = [σ₁^k]_m = Σ_{J ⊨ m, ℓ(J) ≤ k} C(k, ℓ(J)) S^J`.
pub fn s_of_multiple(m: usize, k: usize) -> NSym {
    let mut out = NSym::default();
    for j in Composition::all(m) {
        if j.len() <= k {
            let c = Rational::from_integer(binomial(k, j.len()));
            add_into(&mut out.terms, j, c);
        }
    }
    out
}

/// `σ₁ = Σ_{n ≤ N} S_n`.
pub fn sigma1(n: usize) -> NSym {
    (0..=n).fold(NSym::zero(), |acc, k| acc.add(&NSym::s_n(k)))
}

/// Pairs of `S`-basis compositions.
pub type Tensor2 = BTreeMap<(Composition, Composition), Rational>;
pub type Tensor3 = BTreeMap<(Composition, Composition, Composition), Rational>;

fn tensor_add(t: &mut Tensor2, k: (Composition, Composition), v: Rational) {
    if v.is_zero() {
        return;
    }
    let slot = t.entry(k.clone()).or_insert_with(Rational::zero);
    *slot += v;
    if slot.is_zero() {
        t.remove(&k);
    }
}

fn tensor_unit() -> Tensor2 {
    let mut t = Tensor2::new();
    t.insert((Composition::empty(), Composition::empty()), Rational::one());
    t
}

fn tensor_mul(a: &Tensor2, b: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((a1, a2), x) in a {
        for ((b1, b2), y) in b {
            tensor_add(&mut out, (a1.concat(b1), a2.concat(b2)), x * y);
        }
    }
    out
}

/// `Δ₁ S_n = Σ_i S_i ⊗ S_{n−i}((i+1)A)`.
fn delta1_generator(n: usize) -> Tensor2 {
    let mut out = Tensor2::new();
    for i in 0..=n {
        let left = if i == 0 { Composition::empty() } else { Composition(vec![i]) };
        for (c, v) in s_of_multiple(n - i, i + 1).terms {
            tensor_add(&mut out, (left.clone(), c), v);
        }
    }
    out
}

/// `(Δ₁ ⊗ id)Δ₁` and `(id ⊗ Δ₁)Δ₁`, for coassociativity checks.
pub fn delta1_iterated(x: &NSym) -> (Tensor3, Tensor3) {
    let d = x.delta1();
    let mut left = Tensor3::new();
    let mut right = Tensor3::new();
    let add3 = |t: &mut Tensor3, k: (Composition, Composition, Composition), v: Rational| {
        let slot = t.entry(k.clone()).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            t.remove(&k);
        }
    };
    for ((a, b), v) in &d {
        for ((a1, a2), w) in NSym::monomial(a.clone(), Rational::one()).delta1() {
            add3(&mut left, (a1, a2, b.clone()), v * w);
        }
        for ((b1, b2), w) in NSym::monomial(b.clone(), Rational::one()).delta1() {
            add3(&mut right, (a.clone(), b1, b2), v * w);
        }
    }
    (left, right)
}

/// `m ∘ (γ ⊗ id) ∘ Δ₁` applied to `x`.
pub fn antipode_convolution(x: &NSym) -> NSym {
    let mut out = NSym::zero();
    for ((a, b), v) in x.delta1() {
        let left = NSym::monomial(a, Rational::one()).antipode();
        out = out.add(&left.mul(&NSym::monomial(b, v)));
    }
    out
}

/// `γ(S_n)` for `n ≤ max`, from `Σ_{i ≤ n} γ(S_i) S_{n−i}((i+1)A) = 0`.
fn antipode_generators(max: usize) -> Vec<NSym> {
    let mut table = vec![NSym::one()];
    for n in 1..=max {
        let mut acc = NSym::zero();
        for (i, gi) in table.iter().enumerate() {
            acc = acc.add(&gi.mul(&s_of_multiple(n - i, i + 1)));
        }
        table.push(acc.neg());
    }
    table
}

/// The noncommutative Lagrange series `g = Σ S_n g^n`, up to degree `n`.
pub fn lagrange_g(n: usize) -> NSym {
    let mut g = NSym::one();
    for _ in 0..n {
        let mut next = NSym::one();
        let mut power = NSym::one();
        for k in 1..=n {
            power = power.mul_trunc(&g, n - k);
            next = next.add(&NSym::s_n(k).mul_trunc(&power, n));
        }
        g = next;
    }
    g
}

/// `g_n = Σ_{π ∈ NDPF_n} S^{ev(π)}`.
pub fn lagrange_g_component(n: usize) -> NSym {
    let mut out = NSym::zero();
    for p in ndpf_enumerate(n) {
        out.add_term(Composition(p.ev()), Rational::one());
    }
    if n == 0 {
        return NSym::one();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KMethod {
    /// Graded solve of `σ₁ = Σ K_n σ₁^n`.
    Solve,
    /// `K = (g(−A))^{−1}`.
    AntipodeFormula,
    /// `K_n = (−1)^{n−1} Σ c_I R_{1·Ī~}` where `g_{n−1} = Σ c_I R_I`.
    RibbonRule,
}

impl FromStr for KMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('-', "_").as_str() {
            "solve" => Ok(KMethod::Solve),
            "antipode_formula" | "antipode" => Ok(KMethod::AntipodeFormula),
            "ribbon_rule" | "ribbon" => Ok(KMethod::RibbonRule),
            other => Err(Error::Parse { position: 0, message: format!("unknown method `{other}`") }),
        }
    }
}

/// The cumulant series `K = 1 + Σ_{n ≤ N} K_n`.
pub fn cumulant_k(n: usize, method: KMethod) -> NSym {
    match method {
        KMethod::Solve => {
            let s1 = sigma1(n);
            let mut powers = vec![NSym::one()];
            for k in 1..=n {
                powers.push(powers[k - 1].mul_trunc(&s1, n));
            }
            let mut ks: Vec<NSym> = vec![NSym::one()];
            for m in 1..=n {
                let mut km = NSym::s_n(m);
                for (j, kj) in ks.iter().enumerate().skip(1) {
                    km = km.sub(&kj.mul(&powers[j].homogeneous(m - j)));
                }
                ks.push(km);
            }
            ks.into_iter().fold(NSym::zero(), |a, b| a.add(&b))
        }
        KMethod::AntipodeFormula => lagrange_g(n)
            .minus_a()
            .truncate(n)
            .inverse_trunc(n)
            .expect("g(−A) has constant term 1"),
        KMethod::RibbonRule => {
            let g = lagrange_g(n.saturating_sub(1));
            let mut out = NSym::one();
            for m in 1..=n {
                let mut e = Expansion::new(Basis::R);
                for (c, v) in g.homogeneous(m - 1).expand(Basis::R).terms {
                    let target = Composition(vec![1]).concat(&c.mirror_conjugate());
                    add_into(&mut e.terms, target, v * sign(m - 1));
                }
                out = out.add(&NSym::from_expansion(&e));
            }
            out
        }
    }
}

/// An expansion on the multiplicative basis `K^I = K_{i1}⋯K_{ir}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KExpansion(pub BTreeMap<Composition, Rational>);

impl KExpansion {
    /// Replaces each `K_i` by `ks[i]`.
    pub fn substitute(&self, ks: &[NSym]) -> NSym {
        let mut out = NSym::zero();
        for (c, v) in &self.0 {
            let term = c.0.iter().fold(NSym::one(), |acc, &p| acc.mul(&ks[p]));
            out = out.add(&term.scale(v));
        }
        out
    }
}

impl fmt::Display for KExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.0.iter().map(|(c, v)| {
            let label = if c.is_empty() { String::new() } else { format!("K{c}") };
            (label, v)
        });
        f.write_str(&linear_combination(terms))
    }
}

/// `S_n = Σ_{π ∈ NDPF_n} K^{ev(π)}`.
pub fn s_in_k(n: usize) -> KExpansion {
    KExpansion(lagrange_g_component(n).terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn composition_order_and_mirror() {
        let all: Vec<String> = Composition::all(3).iter().map(ToString::to_string).collect();
        assert_eq!(all, ["[3]", "[2,1]", "[1,2]", "[1,1,1]"]);
        assert_eq!(comp(&[3]).mirror_conjugate(), comp(&[1, 1, 1]));
        assert_eq!(comp(&[2, 1]).mirror_conjugate(), comp(&[1, 2]));
        for n in 0..7 {
            for c in Composition::all(n) {
                assert_eq!(c.mirror_conjugate().mirror_conjugate(), c);
            }
        }
    }

    #[test]
    fn lambda_two() {
        // K2 = S2 − S11 = −Λ2 = −R11
        let k2 = NSym::from_terms([(vec![2], 1), (vec![1, 1], -1)]);
        assert_eq!(k2.expand(Basis::Lambda), Expansion::with_terms(Basis::Lambda, [(vec![2], -1)]));
        assert_eq!(k2.expand(Basis::R), Expansion::with_terms(Basis::R, [(vec![1, 1], -1)]));
    }

    #[test]
    fn conversions_round_trip() {
        for n in 0..=6 {
            for c in Composition::all(n) {
                let x = NSym::monomial(c.clone(), Rational::one());
                for b in [Basis::S, Basis::Lambda, Basis::R] {
                    assert_eq!(NSym::from_expansion(&x.expand(b)), x, "{c} via {b}");
                }
            }
        }
    }

    #[test]
    fn omega_basics() {
        assert_eq!(NSym::s(&[2, 1]).omega(), NSym::s(&[3, 1]));
        assert_eq!(NSym::one().omega(), NSym::s(&[1]));
    }

    #[test]
    fn small_delta1() {
        let d = NSym::s(&[1]).delta1();
        let mut want = Tensor2::new();
        want.insert((comp(&[]), comp(&[1])), Rational::one());
        want.insert((comp(&[1]), comp(&[])), Rational::one());
        assert_eq!(d, want);
        let d2 = NSym::s(&[2]).delta1();
        assert_eq!(d2[&(comp(&[1]), comp(&[1]))], int(2));
    }

    #[test]
    fn g_components() {
        let g = lagrange_g(4);
        for n in 0..=4 {
            assert_eq!(g.homogeneous(n), lagrange_g_component(n));
        }
        assert_eq!(g.homogeneous(2).to_string(), "S[2] + S[1,1]");
    }
}
