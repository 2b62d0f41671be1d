//! Truncated tree series and the group of the Schröder operad.
//!
//! All products are computed by one grafting engine: for every tree `t0` in the support of
//! the left factor, series trees are substituted into a chosen set of `t0`'s leaves (all of
//! them for `∘`, all but the rightmost for `⊣`, only the rightmost for `⊢`).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::format::linear_combination;
use crate::nsym::{Composition, NSym};
use crate::ring::{Rational, Ring};
use crate::trees::{enumerate, SchroederTree, TreeKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSeries {
    order: usize,
    terms: BTreeMap<SchroederTree, Rational>,
}

/// Which leaves of the outer tree receive a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slots {
    All,
    AllButLast,
    LastOnly,
}

impl Slots {
    fn active(self, leaves: usize) -> Vec<bool> {
        (0..leaves)
            .map(|i| match self {
                Slots::All => true,
                Slots::AllButLast => i + 1 < leaves,
                Slots::LastOnly => i + 1 == leaves,
            })
            .collect()
    }
}

type Accumulator = HashMap<Vec<u8>, Rational>;

fn accumulate(acc: &mut Accumulator, word: Vec<u8>, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(word).or_insert_with(Rational::zero);
    *slot += c;
}

/// Series terms bucketed by weight.
fn layers(s: &TreeSeries) -> Vec<Vec<(&SchroederTree, &Rational)>> {
    let mut out = vec![Vec::new(); s.order + 1];
    for (t, c) in &s.terms {
        out[t.weight()].push((t, c));
    }
    out
}

/// Adds `coeff · t0(args)` over all assignments of series trees to the active leaves of `t0`
/// whose weights total exactly `extra`.
fn graft_exact(
    t0: &SchroederTree,
    coeff: &Rational,
    active: &[bool],
    arg_layers: &[Vec<(&SchroederTree, &Rational)>],
    extra: usize,
    acc: &mut Accumulator,
) {
    let slots: Vec<usize> = (0..active.len()).filter(|&i| active[i]).collect();
    if slots.is_empty() {
        if extra == 0 {
            accumulate(acc, t0.word().to_vec(), coeff.clone());
        }
        return;
    }
    let mut chosen: Vec<Option<&SchroederTree>> = vec![None; active.len()];
    dfs(t0, coeff.clone(), &slots, 0, extra, arg_layers, &mut chosen, acc);
}

#[allow(clippy::too_many_arguments)]
fn dfs<'a>(
    t0: &SchroederTree,
    coeff: Rational,
    slots: &[usize],
    k: usize,
    remaining: usize,
    arg_layers: &[Vec<(&'a SchroederTree, &'a Rational)>],
    chosen: &mut Vec<Option<&'a SchroederTree>>,
    acc: &mut Accumulator,
) {
    let last = k + 1 == slots.len();
    let weights: Vec<usize> = if last { vec![remaining] } else { (0..=remaining).collect() };
    for w in weights {
        let Some(layer) = arg_layers.get(w) else { continue };
        for &(t, c) in layer {
            chosen[slots[k]] = Some(t);
            let next = &coeff * c;
            if last {
                accumulate(acc, substitute(t0, chosen), next);
            } else {
                dfs(t0, next, slots, k + 1, remaining - w, arg_layers, chosen, acc);
            }
        }
    }
    chosen[slots[k]] = None;
}

fn substitute(t0: &SchroederTree, chosen: &[Option<&SchroederTree>]) -> Vec<u8> {
    let mut w = Vec::with_capacity(t0.word().len() + 8);
    let mut leaf = 0;
    for &s in t0.word() {
        if s == 0 {
            match chosen[leaf] {
                Some(t) => w.extend_from_slice(t.word()),
                None => w.push(0),
            }
            leaf += 1;
        } else {
            w.push(s);
        }
    }
    w
}

impl TreeSeries {
    pub fn zero(order: usize) -> Self {
        TreeSeries { order, terms: BTreeMap::new() }
    }

    /// The group unit: the bare leaf.
    pub fn leaf(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.terms.insert(SchroederTree::leaf(), Rational::one());
        s
    }

    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = (SchroederTree, Rational)>) -> Self {
        let mut s = Self::zero(order);
        for (t, c) in terms {
            s.add_term(t, c);
        }
        s
    }

    fn from_accumulator(order: usize, acc: Accumulator) -> Self {
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| {
                let weight = w.iter().map(|&s| s as usize).sum();
                (SchroederTree::from_word_unchecked(w, weight), c)
            })
            .filter(|(t, _)| t.weight() <= order)
            .collect();
        TreeSeries { order, terms }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<SchroederTree, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: SchroederTree, c: Rational) {
        if t.weight() > self.order || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(t.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn coefficient(&self, t: &SchroederTree) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        TreeSeries {
            order,
            terms: self.terms.iter().filter(|(t, _)| t.weight() <= order).map(|(t, c)| (t.clone(), c.clone())).collect(),
        }
    }

    /// Terms of exactly the given weight.
    pub fn component(&self, weight: usize) -> Vec<(&SchroederTree, &Rational)> {
        self.terms.iter().filter(|(t, _)| t.weight() == weight).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(self.order.min(other.order));
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TreeSeries::from_terms(self.order, self.terms.iter().map(|(t, v)| (t.clone(), v * c)))
    }

    pub fn is_group_element(&self) -> bool {
        self.coefficient(&SchroederTree::leaf()) == Rational::one()
    }

    fn require_group(&self) -> Result<()> {
        if self.is_group_element() {
            Ok(())
        } else {
            Err(Error::NotGroupElement(self.coefficient(&SchroederTree::leaf()).to_string()))
        }
    }

    fn graft_all(&self, args: &TreeSeries, slots: Slots, order: usize) -> Self {
        let arg_layers = layers(args);
        let mut acc = Accumulator::new();
        for (t0, c) in &self.terms {
            if t0.weight() > order {
                continue;
            }
            let active = slots.active(t0.degree());
            for extra in 0..=order - t0.weight() {
                graft_exact(t0, c, &active, &arg_layers, extra, &mut acc);
            }
        }
        Self::from_accumulator(order, acc)
    }

    /// `p ∘ q = Σ_{t0} p_{t0} t0(q, …, q)`.
    pub fn compose(&self, q: &Self, order: usize) -> Result<Self> {
        self.require_group()?;
        q.require_group()?;
        Ok(self.graft_all(&q.truncate(order), Slots::All, order))
    }

    /// `f ⊣ g = Σ_{t0} f_{t0} t0(g, …, g, leaf)`.
    pub fn dashv(&self, g: &Self, order: usize) -> Result<Self> {
        self.require_group()?;
        g.require_group()?;
        Ok(self.graft_all(&g.truncate(order), Slots::AllButLast, order))
    }

    /// `f ⊢ g = Σ_{t0} f_{t0} t0(leaf, …, leaf, g)`.
    pub fn vdash(&self, g: &Self, order: usize) -> Result<Self> {
        self.require_group()?;
        g.require_group()?;
        Ok(self.graft_all(&g.truncate(order), Slots::LastOnly, order))
    }

    /// Solves `q + Σ_{t0 ≠ leaf} p_{t0} t0(q, …, q) = leaf` weight by weight.
    pub fn comp_inverse(&self, order: usize) -> Result<Self> {
        self.require_group()?;
        let mut q = TreeSeries::leaf(order);
        for w in 1..=order {
            let acc = self.weight_layer(&q, Slots::All, w);
            for (t, c) in Self::from_accumulator(order, acc).terms {
                q.add_term(t, -c);
            }
        }
        Ok(q)
    }

    /// Weight-`w` part of `Σ_{t0 ≠ leaf} p_{t0} t0(args)` with the given active slots.
    fn weight_layer(&self, args: &TreeSeries, slots: Slots, w: usize) -> Accumulator {
        let arg_layers = layers(args);
        let mut acc = Accumulator::new();
        for (t0, c) in &self.terms {
            if t0.weight() == 0 || t0.weight() > w {
                continue;
            }
            let active = slots.active(t0.degree());
            graft_exact(t0, c, &active, &arg_layers, w - t0.weight(), &mut acc);
        }
        acc
    }

    /// The unique `h` with `h = p ⊣ h`.
    pub fn dashv_fixpoint(&self, order: usize) -> Result<Self> {
        self.require_group()?;
        let mut h = TreeSeries::leaf(order);
        for w in 1..=order {
            let acc = self.weight_layer(&h, Slots::AllButLast, w);
            for (t, c) in Self::from_accumulator(order, acc).terms {
                h.add_term(t, c);
            }
        }
        Ok(h)
    }

    /// The unique `u` with `u ⊢ self = leaf`.
    pub fn vdash_inverse(&self, order: usize) -> Result<Self> {
        self.require_group()?;
        let x = self.truncate(order);
        let x_layers = layers(&x);
        let mut u = TreeSeries::leaf(order);
        for w in 1..=order {
            let mut acc = Accumulator::new();
            for (t0, c) in &u.terms {
                if t0.weight() >= w {
                    continue;
                }
                let active = Slots::LastOnly.active(t0.degree());
                graft_exact(t0, c, &active, &x_layers, w - t0.weight(), &mut acc);
            }
            for (t, c) in Self::from_accumulator(order, acc).terms {
                u.add_term(t, -c);
            }
        }
        Ok(u)
    }

    /// Operadic R-transform `f ⊣ f^{∘−1}`.
    pub fn r_transform(&self, order: usize) -> Result<Self> {
        let inv = self.comp_inverse(order)?;
        self.dashv(&inv, order)
    }

    /// Image under `S_0 ↦ 1`: each tree goes to `S^I`, `I` its word with zeros removed.
    pub fn project_to_nsym(&self) -> NSym {
        let mut out = NSym::zero();
        for (t, c) in &self.terms {
            let parts: Vec<usize> = t.word().iter().filter(|&&s| s != 0).map(|&s| s as usize).collect();
            out.add_term(Composition(parts), c.clone());
        }
        out
    }
}

impl fmt::Display for TreeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(t, c)| (format!("S[{t}]"), c));
        f.write_str(&linear_combination(terms))
    }
}

fn series_over(order: usize, kind: TreeKind, coeff: impl Fn(&SchroederTree) -> Rational) -> TreeSeries {
    let mut s = TreeSeries::zero(order);
    for w in 0..=order {
        for t in enumerate(kind, w).iter() {
            s.add_term(t.clone(), coeff(t));
        }
    }
    s
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `f_c`: every corolla with coefficient 1.
pub fn corolla_series(order: usize) -> TreeSeries {
    TreeSeries::from_terms(order, (0..=order).map(|n| (SchroederTree::corolla(n), Rational::one())))
}

/// `g_c = Σ_t (−1)^{i(t)} t`, the composition inverse of `f_c`.
pub fn gc_series(order: usize) -> TreeSeries {
    series_over(order, TreeKind::All, |t| sign(t.internal_count()))
}

/// `κ = leaf + Σ_{t prime} (−1)^{i(t)−1} t`.
pub fn kappa_series(order: usize) -> TreeSeries {
    series_over(order, TreeKind::Prime, |t| {
        if t.is_leaf() {
            Rational::one()
        } else {
            sign(t.internal_count() - 1)
        }
    })
}

/// Characteristic series of the left-directed trees.
pub fn ldst_series(order: usize) -> TreeSeries {
    series_over(order, TreeKind::LeftDirected, |_| Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn t(s: &str) -> SchroederTree {
        s.parse().unwrap()
    }

    fn series(order: usize, terms: &[(&str, i64)]) -> TreeSeries {
        TreeSeries::from_terms(order, terms.iter().map(|(s, c)| (t(s), int(*c))))
    }

    #[test]
    fn kappa_low_weights_print() {
        assert_eq!(kappa_series(2).to_string(), "S[0] + S[1,0,0] + S[2,0,0,0] - S[1,1,0,0,0]");
    }

    #[test]
    fn gc_weight_two() {
        let want = series(2, &[("0", 1), ("1,0,0", -1), ("2,0,0,0", -1), ("1,1,0,0,0", 1), ("1,0,1,0,0", 1)]);
        assert_eq!(gc_series(2), want);
        assert_eq!(corolla_series(2).comp_inverse(2).unwrap(), want);
    }

    #[test]
    fn units() {
        let p = kappa_series(4);
        let leaf = TreeSeries::leaf(4);
        assert_eq!(p.compose(&leaf, 4).unwrap(), p);
        assert_eq!(leaf.compose(&p, 4).unwrap(), p);
        assert_eq!(leaf.vdash(&p, 4).unwrap(), p);
        assert_eq!(p.vdash(&leaf, 4).unwrap(), p);
        assert_eq!(leaf.r_transform(4).unwrap(), leaf);
        assert_eq!(leaf.vdash_inverse(4).unwrap(), leaf);
        assert_eq!(leaf.dashv_fixpoint(4).unwrap(), leaf);
    }

    #[test]
    fn single_right_graft() {
        let a = series(2, &[("0", 1), ("1,0,0", 1)]);
        let got = a.vdash(&corolla_series(2), 2).unwrap();
        assert_eq!(got.coefficient(&t("1,0,1,0,0")), int(1));
        assert_eq!(got.coefficient(&t("1,1,0,0,0")), int(0));
    }

    #[test]
    fn non_group_rejected() {
        let bad = series(2, &[("1,0,0", 1)]);
        assert!(bad.compose(&TreeSeries::leaf(2), 2).is_err());
        assert!(bad.comp_inverse(2).is_err());
    }

    #[test]
    fn ldst_fixpoint_weight_two() {
        let h = corolla_series(2).dashv_fixpoint(2).unwrap();
        assert_eq!(h, series(2, &[("0", 1), ("1,0,0", 1), ("2,0,0,0", 1), ("1,1,0,0,0", 1)]));
    }

    #[test]
    fn projection_of_leaf() {
        assert_eq!(TreeSeries::leaf(3).project_to_nsym(), NSym::one());
    }
}
