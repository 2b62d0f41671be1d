//! Free cumulants as signed sums over prime trees, read as nested moment expressions.
//!
//! A decorated tree is read bottom-up: an internal vertex with children `c₀ … c_p` and viewed
//! letters `x₁ … x_p` becomes `φ(c₀ x₁ c₁ … x_p c_p)`, leaves reading as the empty product.
//! Three readings are provided: the raw nested expression (operator mode), the same
//! expression with boundary `φ`-factors pulled out (bimodule mode), and the commutative
//! product of the moments of the viewed words (scalar mode).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::format::linear_combination;
use crate::ncpart::{enumerate_nc, moebius_column, NoncrossingPartition};
use crate::poly::{MAtom, Monomial, MomentPoly, Poly, UniPoly};
use crate::ring::{Rational, Ring};
use crate::trees::{enumerate, SchroederTree, Shape, TreeKind};
use crate::words::{Letter, Word};

// ---------------------------------------------------------------------------------------------
// Nested moment expressions

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Letter(Letter),
    Phi(PhiExpr),
}

/// A formal product of letters and `φ(…)` factors; the empty product is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PhiExpr(Vec<Factor>);

impl PhiExpr {
    pub fn one() -> Self {
        PhiExpr(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        PhiExpr(vec![Factor::Letter(l)])
    }

    /// `φ(self)`; `φ(1) = 1`.
    pub fn phi(self) -> Self {
        if self.0.is_empty() {
            self
        } else {
            PhiExpr(vec![Factor::Phi(self)])
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PhiExpr(v)
    }

    pub fn letter_count(&self) -> usize {
        self.0
            .iter()
            .map(|f| match f {
                Factor::Letter(_) => 1,
                Factor::Phi(e) => e.letter_count(),
            })
            .sum()
    }

    fn letters_flat(&self, out: &mut Vec<Letter>) {
        for f in &self.0 {
            match f {
                Factor::Letter(l) => out.push(*l),
                Factor::Phi(e) => e.letters_flat(out),
            }
        }
    }

    /// Letters in reading order.
    pub fn letters(&self) -> Word {
        let mut v = Vec::new();
        self.letters_flat(&mut v);
        Word(v)
    }

    /// Polish-style shape code of the content of a `φ`: the number of letters at this level,
    /// then for each gap around them the codes of the `φ`-factors there (`0` if none).
    fn shape(&self) -> Vec<u16> {
        let mut slots: Vec<Vec<u16>> = vec![Vec::new()];
        for f in &self.0 {
            match f {
                Factor::Letter(_) => slots.push(Vec::new()),
                Factor::Phi(e) => slots.last_mut().unwrap().extend(e.shape()),
            }
        }
        let mut out = vec![(slots.len() - 1) as u16];
        for s in slots {
            if s.is_empty() {
                out.push(0);
            } else {
                out.extend(s);
            }
        }
        out
    }

    fn factor_keys(&self) -> Vec<Vec<u16>> {
        self.0
            .iter()
            .map(|f| match f {
                Factor::Letter(_) => Vec::new(),
                Factor::Phi(e) => e.shape(),
            })
            .collect()
    }

    /// Pulls `φ`-factors at either end of every `φ` argument out of it, to closure.
    pub fn bimodule_normal_form(&self) -> Self {
        let mut out = Vec::new();
        for f in &self.0 {
            match f {
                Factor::Letter(l) => out.push(Factor::Letter(*l)),
                Factor::Phi(e) => out.extend(pull_out(e)),
            }
        }
        PhiExpr(out)
    }

    /// Makes every `φ` value central: the product over all `φ` nodes of the moment of the
    /// letters directly inside it.
    pub fn scalar_image(&self) -> Result<MomentPoly> {
        let mut acc = MomentPoly::one();
        for f in &self.0 {
            match f {
                Factor::Letter(_) => return Err(Error::NotTreeShaped(self.to_string())),
                Factor::Phi(e) => acc = acc.mul(&phi_scalar(e)),
            }
        }
        Ok(acc)
    }
}

fn phi_scalar(content: &PhiExpr) -> MomentPoly {
    let mut word = Vec::new();
    let mut acc = MomentPoly::one();
    for f in &content.0 {
        match f {
            Factor::Letter(l) => word.push(*l),
            Factor::Phi(e) => acc = acc.mul(&phi_scalar(e)),
        }
    }
    if word.is_empty() {
        acc
    } else {
        acc.mul(&MomentPoly::atom(Word(word)))
    }
}

/// `φ(content)` in bimodule normal form, as a list of factors.
fn pull_out(content: &PhiExpr) -> Vec<Factor> {
    let inner = content.bimodule_normal_form().0;
    let start = inner.iter().position(|f| matches!(f, Factor::Letter(_)));
    let Some(start) = start else {
        // No letters at this level: φ(φ(x)φ(y)) = φ(x)φ(y).
        return inner;
    };
    let end = inner.iter().rposition(|f| matches!(f, Factor::Letter(_))).unwrap() + 1;
    let mut out: Vec<Factor> = inner[..start].to_vec();
    out.push(Factor::Phi(PhiExpr(inner[start..end].to_vec())));
    out.extend_from_slice(&inner[end..]);
    out
}

impl Ord for PhiExpr {
    /// Letter count, then number of factors, then shape codes in decreasing order (which
    /// lists tree readings in decreasing Polish-word order), then the letters.
    fn cmp(&self, other: &Self) -> Ordering {
        self.letter_count()
            .cmp(&other.letter_count())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| other.factor_keys().cmp(&self.factor_keys()))
            .then_with(|| self.letters().cmp(&other.letters()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PhiExpr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PhiExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for x in &self.0 {
            match x {
                Factor::Letter(l) => write!(f, "{l}")?,
                Factor::Phi(e) => write!(f, "φ({e})")?,
            }
        }
        Ok(())
    }
}

impl FromStr for PhiExpr {
    type Err = Error;

    /// Parses `φ(a1φ(a2))a3`; `phi(` is accepted for `φ(`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.replace("phi(", "φ(").chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let e = parse_product(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse { position: pos, message: "unexpected character".into() });
        }
        Ok(e)
    }
}

fn parse_product(chars: &[char], pos: &mut usize) -> Result<PhiExpr> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        match chars[*pos] {
            'φ' => {
                if chars.get(*pos + 1) != Some(&'(') {
                    return Err(Error::Parse { position: *pos + 1, message: "expected `(`".into() });
                }
                *pos += 2;
                let inner = parse_product(chars, pos)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::Parse { position: *pos, message: "expected `)`".into() });
                }
                *pos += 1;
                if inner.0.is_empty() {
                    return Err(Error::Parse { position: *pos, message: "empty φ argument".into() });
                }
                out.push(Factor::Phi(inner));
            }
            'a' => {
                let start = *pos;
                *pos += 1;
                while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                    *pos += 1;
                }
                let text: String = chars[start..*pos].iter().collect();
                out.push(Factor::Letter(text.parse().map_err(|_| Error::Parse {
                    position: start,
                    message: format!("bad letter {text:?}"),
                })?));
            }
            '1' if out.is_empty() => *pos += 1,
            ')' => break,
            c => return Err(Error::Parse { position: *pos, message: format!("unexpected {c:?}") }),
        }
    }
    Ok(PhiExpr(out))
}

/// Rational combination of [`PhiExpr`] monomials; a noncommutative ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhiPoly {
    terms: BTreeMap<PhiExpr, Rational>,
}

impl PhiPoly {
    pub fn monomial(e: PhiExpr, c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: PhiExpr, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PhiExpr, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Linear extension of a monomial map.
    pub fn map(&self, f: impl Fn(&PhiExpr) -> PhiExpr) -> Self {
        let mut out = Self::default();
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// `φ` applied termwise.
    pub fn phi(&self) -> Self {
        self.map(|e| e.clone().phi())
    }

    pub fn bimodule_normal_form(&self) -> Self {
        self.map(PhiExpr::bimodule_normal_form)
    }

    pub fn scalar_image(&self) -> Result<MomentPoly> {
        let mut acc = MomentPoly::zero();
        for (e, c) in &self.terms {
            acc = acc.add(&e.scalar_image()?.scale(c));
        }
        Ok(acc)
    }
}

impl Ring for PhiPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::monomial(PhiExpr::one(), Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        PhiPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        PhiPoly { terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }
    fn try_inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && e.0.is_empty() => {
                Some(Self::monomial(PhiExpr::one(), c.recip()))
            }
            _ => None,
        }
    }
}

impl fmt::Display for PhiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(e, c)| {
            let label = if e.0.is_empty() { String::new() } else { e.to_string() };
            (label, c)
        });
        write!(f, "{}", linear_combination(terms))
    }
}

// ---------------------------------------------------------------------------------------------
// Tree readings

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Operator,
    Bimodule,
    Scalar,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "operator" => Ok(Mode::Operator),
            "bimodule" => Ok(Mode::Bimodule),
            "scalar" => Ok(Mode::Scalar),
            _ => Err(Error::Domain(format!("unknown evaluation mode {s:?}"))),
        }
    }
}

/// Result of a reading: a nested expression or, in scalar mode, a moment polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Expr(PhiPoly),
    Scalar(MomentPoly),
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluation::Expr(p) => write!(f, "{p}"),
            Evaluation::Scalar(p) => write!(f, "{p}"),
        }
    }
}

fn check_length(t: &SchroederTree, w: &Word) -> Result<()> {
    if t.weight() != w.len() {
        return Err(Error::LengthMismatch { expected: t.weight(), got: w.len() });
    }
    Ok(())
}

/// The nested expression of a decorated tree (operator mode).
pub fn read_tree(t: &SchroederTree, w: &Word) -> Result<PhiExpr> {
    check_length(t, w)?;
    fn go(s: &Shape, letters: &[Letter], leaves: &mut usize) -> PhiExpr {
        match s {
            Shape::Leaf => {
                *leaves += 1;
                PhiExpr::one()
            }
            Shape::Node(children) => {
                let mut content = PhiExpr::one();
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        content.0.push(Factor::Letter(letters[*leaves - 1]));
                    }
                    content = content.mul(&go(c, letters, leaves));
                }
                content.phi()
            }
        }
    }
    let mut leaves = 0;
    Ok(go(&t.to_shape(), w.letters(), &mut leaves))
}

/// `Π_v φ(letters viewed by v)` for a decorated tree.
pub fn scalar_reading(t: &SchroederTree, w: &Word) -> Result<MomentPoly> {
    check_length(t, w)?;
    let letters = w.letters();
    Ok(t.sector_views().values().fold(MomentPoly::one(), |acc, sectors| {
        acc.mul(&MomentPoly::atom(Word(sectors.iter().map(|&s| letters[s - 1]).collect())))
    }))
}

pub fn eval_tree(t: &SchroederTree, w: &Word, mode: Mode) -> Result<Evaluation> {
    Ok(match mode {
        Mode::Operator => Evaluation::Expr(PhiPoly::monomial(read_tree(t, w)?, Rational::one())),
        Mode::Bimodule => {
            Evaluation::Expr(PhiPoly::monomial(read_tree(t, w)?.bimodule_normal_form(), Rational::one()))
        }
        Mode::Scalar => Evaluation::Scalar(scalar_reading(t, w)?),
    })
}

/// `(−1)^{i(t)−1}`.
pub fn prime_tree_sign(t: &SchroederTree) -> Rational {
    if t.internal_count() % 2 == 1 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `κ_n[a₁,…,a_n] = Σ_{t prime} (−1)^{i(t)−1} · reading of t`.
pub fn kappa_eval(n: usize, mode: Mode) -> Result<Evaluation> {
    kappa_eval_word(&Word::standard(n), mode)
}

/// [`kappa_eval`] on an arbitrary word.
pub fn kappa_eval_word(w: &Word, mode: Mode) -> Result<Evaluation> {
    if w.is_empty() {
        return Err(Error::Empty);
    }
    let primes = enumerate(TreeKind::Prime, w.len());
    Ok(match mode {
        Mode::Scalar => {
            let mut acc = MomentPoly::zero();
            for t in primes.iter() {
                acc = acc.add(&scalar_reading(t, w)?.scale(&prime_tree_sign(t)));
            }
            Evaluation::Scalar(acc)
        }
        Mode::Operator | Mode::Bimodule => {
            let mut acc = PhiPoly::zero();
            for t in primes.iter() {
                let mut e = read_tree(t, w)?;
                if mode == Mode::Bimodule {
                    e = e.bimodule_normal_form();
                }
                acc.add_term(e, prime_tree_sign(t));
            }
            Evaluation::Expr(acc)
        }
    })
}

/// Scalar free cumulant on a word.
pub fn kappa_scalar(w: &Word) -> Result<MomentPoly> {
    match kappa_eval_word(w, Mode::Scalar)? {
        Evaluation::Scalar(p) => Ok(p),
        Evaluation::Expr(_) => unreachable!("scalar mode yields a polynomial"),
    }
}

/// `φ_π = Π_{B∈π} m_{a_B}` on a word.
pub fn phi_partition(pi: &NoncrossingPartition, w: &Word) -> MomentPoly {
    let letters = w.letters();
    pi.blocks().iter().fold(MomentPoly::one(), |acc, b| {
        acc.mul(&MomentPoly::atom(Word(b.iter().map(|&i| letters[i - 1]).collect())))
    })
}

/// `Σ_{π ∈ NC_n} μ(π, 1̂) φ_π`, by Möbius inversion on the noncrossing lattice.
pub fn speicher_kappa(n: usize) -> Result<MomentPoly> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let w = Word::standard(n);
    let mu = moebius_column(&NoncrossingPartition::top(n));
    let mut acc = MomentPoly::zero();
    for pi in enumerate_nc(n) {
        let c = Rational::from_integer(mu[&pi].clone());
        acc = acc.add(&phi_partition(&pi, &w).scale(&c));
    }
    Ok(acc)
}

/// `Σ_{π ∈ NC_n} Π_{B∈π} κ_{|B|}[a_B]`, which must reproduce `m_{a₁…a_n}`.
pub fn moments_from_kappa(n: usize) -> Result<MomentPoly> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut by_size: HashMap<usize, MomentPoly> = HashMap::new();
    for k in 1..=n {
        by_size.insert(k, kappa_scalar(&Word::standard(k))?);
    }
    let mut acc = MomentPoly::zero();
    for pi in enumerate_nc(n) {
        let mut term = MomentPoly::one();
        for b in pi.blocks() {
            // Rename a_i ↦ a_{b_i}.
            let renamed = by_size[&b.len()].map_atoms(|w: &Word| {
                Word(w.letters().iter().map(|l| Letter(b[l.0 as usize - 1] as u16)).collect())
            });
            term = term.mul(&renamed);
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Specialises every letter to one variable: `m_w ↦ m_{|w|}`.
pub fn univariate(p: &MomentPoly) -> UniPoly {
    p.map_atoms(|w: &Word| MAtom(w.len()))
}

/// `Σ_{t prime} Π_v m_{#sectors viewed by v}`: the cumulant with all signs removed.
pub fn unsigned_polynomial(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut acc = UniPoly::zero();
    for t in enumerate(TreeKind::Prime, n).iter() {
        let m = Monomial::from_atoms(t.sector_views().values().map(|s| MAtom(s.len())));
        acc = acc.add(&Poly::monomial(m, Rational::one()));
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------------------------
// Right-directed normal form

/// Recovers the decorated tree whose reading is `e` (a single `φ(…)` factor).
pub fn expr_to_tree(e: &PhiExpr) -> Result<(SchroederTree, Word)> {
    let [Factor::Phi(content)] = e.factors() else {
        return Err(Error::NotTreeShaped(e.to_string()));
    };
    fn build(content: &PhiExpr, letters: &mut Vec<Letter>, whole: &PhiExpr) -> Result<Shape> {
        let mut children = Vec::new();
        let mut slot: Vec<&PhiExpr> = Vec::new();
        let flush = |slot: &mut Vec<&PhiExpr>, letters: &mut Vec<Letter>| -> Result<Shape> {
            match slot.as_slice() {
                [] => Ok(Shape::Leaf),
                [inner] => {
                    let s = build(inner, letters, whole)?;
                    slot.clear();
                    Ok(s)
                }
                _ => Err(Error::NotTreeShaped(whole.to_string())),
            }
        };
        for f in content.factors() {
            match f {
                Factor::Letter(l) => {
                    children.push(flush(&mut slot, letters)?);
                    letters.push(*l);
                }
                Factor::Phi(inner) => slot.push(inner),
            }
        }
        children.push(flush(&mut slot, letters)?);
        if children.len() < 2 {
            return Err(Error::NotTreeShaped(whole.to_string()));
        }
        Ok(Shape::Node(children))
    }
    let mut letters = Vec::new();
    let shape = build(content, &mut letters, e)?;
    Ok((shape.to_tree()?, Word(letters)))
}

/// Rewrites a bimodule-mode reading as the reading of a right-directed tree, using
/// `φ(φ(x)y) = φ(x)φ(y) = φ(xφ(y))`.
pub fn right_directed_form(e: &PhiExpr) -> Result<PhiExpr> {
    if e.factors().is_empty() || e.factors().iter().any(|f| matches!(f, Factor::Letter(_))) {
        return Err(Error::NotTreeShaped(e.to_string()));
    }
    // A product φ(x₁)…φ(x_k) at top level equals φ(x₁φ(x₂ … φ(x_k))).
    let mut acc: Option<PhiExpr> = None;
    for f in e.factors().iter().rev() {
        let Factor::Phi(x) = f else { unreachable!() };
        let content = match acc {
            None => x.clone(),
            Some(inner) => x.mul(&inner),
        };
        acc = Some(content.phi());
    }
    let out = rd_phi(match &acc.unwrap().0[0] {
        Factor::Phi(c) => c.clone(),
        Factor::Letter(_) => unreachable!(),
    });
    expr_to_tree(&out)?;
    Ok(out)
}

/// Normal form of `φ(content)`.
fn rd_phi(content: PhiExpr) -> PhiExpr {
    let mut content = content;
    while let Some(Factor::Phi(x)) = content.0.first().cloned() {
        let rest = PhiExpr(content.0[1..].to_vec());
        content = x.mul(&rest.phi());
    }
    let mut out = Vec::new();
    let mut run: Vec<PhiExpr> = Vec::new();
    let flush = |run: &mut Vec<PhiExpr>, out: &mut Vec<Factor>| {
        if let Some(last) = run.pop() {
            let merged = run.drain(..).rev().fold(last, |acc, x| x.mul(&acc.phi()));
            out.extend(rd_phi(merged).0);
        }
    };
    for f in content.0 {
        match f {
            Factor::Phi(x) => run.push(x),
            l => {
                flush(&mut run, &mut out);
                out.push(l);
            }
        }
    }
    flush(&mut run, &mut out);
    PhiExpr(out).phi()
}

// ---------------------------------------------------------------------------------------------
// Cluster involution

fn node_mut<'a>(s: &'a mut Shape, path: &[usize]) -> &'a mut Shape {
    let mut cur = s;
    for &i in path {
        let Shape::Node(children) = cur else { unreachable!("path stays on internal vertices") };
        cur = &mut children[i];
    }
    cur
}

fn arity(s: &Shape) -> usize {
    s.children().len()
}

/// The sign-reversing local move on prime trees of weight `j + k` whose sectors carry
/// `b₁…b_j c₁…c_k`.
///
/// Walking up from leaf `j+1` (the one between `b_j` and `c₁`), the first middle edge is
/// split off into a new vertex, or the first right edge sitting under a left edge has its
/// two vertices merged; the two moves undo each other.
pub fn cluster_involution(t: &SchroederTree, j: usize, k: usize) -> Result<SchroederTree> {
    if j == 0 || k == 0 || j + k != t.weight() {
        return Err(Error::BadSplit { j, k, weight: t.weight() });
    }
    if !t.is_prime() {
        return Err(Error::NotPrime(t.to_string()));
    }
    let mut shape = t.to_shape();
    // Child indices from the root down to the leaf with index j (0-based).
    let mut path = Vec::new();
    {
        let mut cur = &shape;
        let mut target = j;
        while let Shape::Node(children) = cur {
            let mut i = 0;
            while target >= children[i].leaf_count() {
                target -= children[i].leaf_count();
                i += 1;
            }
            path.push(i);
            cur = &children[i];
        }
    }
    for d in (0..path.len()).rev() {
        let p = arity(node_mut(&mut shape, &path[..d]));
        let i = path[d];
        if i > 0 && i + 1 < p {
            let v = node_mut(&mut shape, &path[..d]);
            let Shape::Node(children) = std::mem::replace(v, Shape::Leaf) else { unreachable!() };
            let mut children = children;
            let right: Vec<Shape> = children.split_off(i + 1);
            let mut top = vec![Shape::Node(children)];
            top.extend(right);
            *v = Shape::Node(top);
            return shape.to_tree();
        }
        if i + 1 == p && d >= 1 && path[d - 1] == 0 {
            let v1 = node_mut(&mut shape, &path[..d - 1]);
            let Shape::Node(mut children) = std::mem::replace(v1, Shape::Leaf) else { unreachable!() };
            let Shape::Node(mut merged) = children.remove(0) else { unreachable!() };
            merged.extend(children);
            *v1 = Shape::Node(merged);
            return shape.to_tree();
        }
    }
    unreachable!("every prime tree has a middle edge or a right-under-left pair on the path")
}

/// Moments of a product of two clusters: `m_w ↦ m_{w∩B} m_{w∩C}` where `B` holds the letters
/// `a₁…a_j`.
pub fn factor_moments(p: &MomentPoly, j: usize) -> MomentPoly {
    p.substitute(&mut |w: &Word| {
        let (b, c): (Vec<Letter>, Vec<Letter>) = w.letters().iter().partition(|l| (l.0 as usize) <= j);
        [b, c]
            .into_iter()
            .filter(|x| !x.is_empty())
            .fold(MomentPoly::one(), |acc, x| acc.mul(&MomentPoly::atom(Word(x))))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SchroederTree {
        s.parse().unwrap()
    }

    #[test]
    fn six_sector_reading() {
        let tree = t("((* (* *)) (* * *) *)");
        let w = Word::standard(6);
        assert_eq!(read_tree(&tree, &w).unwrap().to_string(), "φ(φ(a1φ(a2))a3φ(a4a5)a6)");
        assert_eq!(
            scalar_reading(&tree, &w).unwrap(),
            ["a1", "a2", "a3a6", "a4a5"]
                .iter()
                .fold(MomentPoly::one(), |a, x| a.mul(&MomentPoly::atom(x.parse().unwrap())))
        );
    }

    #[test]
    fn kappa_three_operator_and_bimodule() {
        let op = kappa_eval(3, Mode::Operator).unwrap().to_string();
        assert_eq!(
            op,
            "φ(a1a2a3) - φ(φ(a1)a2a3) - φ(a1φ(a2)a3) - φ(φ(a1a2)a3) + φ(φ(φ(a1)a2)a3) + φ(φ(a1φ(a2))a3)"
        );
        let bi = kappa_eval(3, Mode::Bimodule).unwrap().to_string();
        assert_eq!(bi, "φ(a1a2a3) - φ(a1φ(a2)a3) - φ(a1a2)φ(a3) - φ(a1)φ(a2a3) + 2φ(a1)φ(a2)φ(a3)");
    }

    #[test]
    fn corolla_reads_the_same_in_every_mode() {
        let w = Word::standard(4);
        let c = SchroederTree::corolla(4);
        assert_eq!(read_tree(&c, &w).unwrap().to_string(), "φ(a1a2a3a4)");
        assert_eq!(read_tree(&c, &w).unwrap().bimodule_normal_form().to_string(), "φ(a1a2a3a4)");
        assert_eq!(scalar_reading(&c, &w).unwrap(), MomentPoly::atom(w));
    }

    #[test]
    fn right_directed_example() {
        let e: PhiExpr = "φ(a1φ(φ(a2)a3φ(a4)a5φ(a6))a7)".parse().unwrap();
        let r = right_directed_form(&e).unwrap();
        assert_eq!(r.to_string(), "φ(a1φ(a2φ(a3φ(a4)a5φ(a6)))a7)");
        let (tree, _) = expr_to_tree(&r).unwrap();
        assert!(tree.belongs_to(TreeKind::RightDirected));
        assert_eq!(right_directed_form(&r).unwrap(), r);
    }

    #[test]
    fn expression_round_trip() {
        for tree in enumerate(TreeKind::All, 4).iter() {
            let w = Word::standard(4);
            let e = read_tree(tree, &w).unwrap();
            assert_eq!(e.to_string().parse::<PhiExpr>().unwrap(), e);
            assert_eq!(expr_to_tree(&e).unwrap(), (tree.clone(), w));
        }
    }

    #[test]
    fn univariate_three() {
        let k3 = univariate(&speicher_kappa(3).unwrap());
        assert_eq!(k3.to_string(), "2m1^3 - 3m2m1 + m3");
        assert_eq!(unsigned_polynomial(3).unwrap().to_string(), "2m1^3 + 3m2m1 + m3");
    }

    #[test]
    fn length_mismatch_is_reported() {
        assert_eq!(
            read_tree(&SchroederTree::corolla(3), &Word::standard(2)),
            Err(Error::LengthMismatch { expected: 3, got: 2 })
        );
    }
}
