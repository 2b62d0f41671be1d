//! Commutative polynomials with exact rational coefficients over an arbitrary ordered atom set.
//!
//! Monomials are stored as atom/exponent lists sorted by *decreasing* atom, and the polynomial
//! keeps its monomials in increasing lexicographic order of those lists. For univariate moment
//! polynomials this prints `5m1^4 + 10m2m1^2 + 2m2^2 + 4m3m1 + m4`.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use crate::format::write_coefficient;
use crate::ring::{Rational, Ring};
use crate::words::Word;

/// An indeterminate of a [`Poly`].
pub trait Atom: Clone + Ord + Eq + Hash + fmt::Debug {
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    fn fmt_monomial(factors: &[(Self, u32)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, e) in factors {
            a.fmt_atom(f)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Univariate moment `m_k` (identified with `h_k` in the symmetric-function layer).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MAtom(pub usize);

impl Atom for MAtom {
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

/// Elementary symmetric function `e_k`; monomials print as `e[λ]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EAtom(pub usize);

impl Atom for EAtom {
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{}]", self.0)
    }

    fn fmt_monomial(factors: &[(Self, u32)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = factors
            .iter()
            .flat_map(|(a, e)| std::iter::repeat_n(a.0.to_string(), *e as usize))
            .collect();
        write!(f, "e[{}]", parts.join(","))
    }
}

/// Multivariate moment `m_w = φ(w)` indexed by a word.
impl Atom for Word {
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m[{self}]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial<A: Atom>(Vec<(A, u32)>);

impl<A: Atom> Monomial<A> {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn atom(a: A) -> Self {
        Monomial(vec![(a, 1)])
    }

    pub fn from_atoms(atoms: impl IntoIterator<Item = A>) -> Self {
        let mut m = Self::one();
        for a in atoms {
            m = m.mul(&Self::atom(a));
        }
        m
    }

    pub fn factors(&self) -> &[(A, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut merged: BTreeMap<A, u32> = BTreeMap::new();
        for (a, e) in self.0.iter().chain(other.0.iter()) {
            *merged.entry(a.clone()).or_default() += e;
        }
        Monomial(merged.into_iter().rev().collect())
    }

    /// Flattened atom multiset in decreasing order.
    pub fn atoms(&self) -> Vec<A> {
        self.0
            .iter()
            .flat_map(|(a, e)| std::iter::repeat_n(a.clone(), *e as usize))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<A: Atom> {
    terms: BTreeMap<Monomial<A>, Rational>,
}

pub type MomentPoly = Poly<Word>;
pub type UniPoly = Poly<MAtom>;

impl<A: Atom> Default for Poly<A> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<A: Atom> Poly<A> {
    pub fn constant(c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn atom(a: A) -> Self {
        Self::monomial(Monomial::atom(a), Rational::one())
    }

    pub fn monomial(m: Monomial<A>, c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial<A>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<A>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial<A>) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Ring morphism determined by the image of each atom.
    pub fn substitute<B: Atom>(&self, image: &mut impl FnMut(&A) -> Poly<B>) -> Poly<B> {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for (a, e) in &m.0 {
                let img = image(a);
                for _ in 0..*e {
                    acc = Ring::mul(&acc, &img);
                }
            }
            out = Ring::add(&out, &acc);
        }
        out
    }

    pub fn map_atoms<B: Atom>(&self, mut f: impl FnMut(&A) -> B) -> Poly<B> {
        self.substitute(&mut |a| Poly::atom(f(a)))
    }

    /// Drops signs: every coefficient replaced by its absolute value.
    pub fn unsigned(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), num_traits::Signed::abs(c))).collect() }
    }
}

impl<A: Atom> Ring for Poly<A> {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<Monomial<A>, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Poly { terms: acc }
    }
    fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.0.is_empty() {
                return Some(Self::constant(c.recip()));
            }
        }
        None
    }
}

impl<A: Atom> fmt::Display for Poly<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let has_body = !m.0.is_empty();
            write_coefficient(f, c, i == 0, has_body)?;
            struct M<'a, A: Atom>(&'a Monomial<A>);
            impl<A: Atom> fmt::Display for M<'_, A> {
                fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                    A::fmt_monomial(&self.0 .0, f)
                }
            }
            if has_body {
                write!(f, "{}", M(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn m(k: usize) -> UniPoly {
        Poly::atom(MAtom(k))
    }

    #[test]
    fn display_orders_by_monomial() {
        let p = m(4)
            .add(&m(3).mul(&m(1)).scale(&int(4)))
            .add(&m(2).pow(2).scale(&int(2)))
            .add(&m(2).mul(&m(1).pow(2)).scale(&int(10)))
            .add(&m(1).pow(4).scale(&int(5)));
        assert_eq!(p.to_string(), "5m1^4 + 10m2m1^2 + 2m2^2 + 4m3m1 + m4");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = m(1).mul(&m(2)).sub(&m(2).mul(&m(1)));
        assert!(Ring::is_zero(&p));
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let p = m(1).mul(&m(1)).add(&m(2));
        let q: UniPoly = p.substitute(&mut |a: &MAtom| Poly::constant(int(a.0 as i64)));
        assert_eq!(q, Poly::constant(int(3)));
    }

    #[test]
    fn e_monomials_print_as_partitions() {
        let p: Poly<EAtom> = Poly::atom(EAtom(2)).mul(&Poly::atom(EAtom(1)));
        assert_eq!(p.to_string(), "e[2,1]");
    }
}
