//! Univariate commutative layer: truncated power series, reversion, and the `h*`/`e*` involution.
//!
//! Complete homogeneous functions are the atoms `m1, m2, …` of [`UniPoly`] (so that `h_n = m_n`),
//! with `H(t) = 1 + Σ h_n tⁿ` and `H(t)E(−t) = 1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::format::write_coefficient;
use crate::nsym::{cumulant_k, Composition, KMethod, NSym};
use crate::poly::{EAtom, MAtom, Monomial, Poly, UniPoly};
use crate::ring::{binomial, factorial, Rational, Ring};

/// A power series truncated after `t^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect(), n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].try_inverse().ok_or(Error::NotRevertible("constant term is not a unit"))?;
        let mut out = vec![c0.clone()];
        for k in 1..=self.order() {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out.push(acc.mul(&c0).neg());
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `self(inner(t))`; `inner` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain("inner series has a constant term".into()));
        }
        let n = self.order().min(inner.order());
        let mut acc = Self::zero(n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// `self / t`, dropping the top order; the constant term must vanish.
    pub fn divide_by_variable(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::Domain("series is not divisible by t".into()));
        }
        Ok(PowerSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// `t · self`, keeping the order.
    pub fn times_variable(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        PowerSeries { coeffs }
    }

    fn check_revertible(&self) -> Result<R> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotRevertible("constant term is nonzero"));
        }
        if self.order() == 0 {
            return Err(Error::NotRevertible("truncation order is zero"));
        }
        self.coeffs[1].try_inverse().ok_or(Error::NotRevertible("linear coefficient is not a unit"))
    }

    /// Compositional inverse, fixing one more coefficient per pass of
    /// `G ← c₁⁻¹ (t − (F − c₁t)∘G)`. Coefficients are assumed to commute.
    pub fn revert(&self) -> Result<Self> {
        let inv = self.check_revertible()?;
        let n = self.order();
        let mut tail = self.clone();
        tail.coeffs[1] = R::zero();
        let t = Self::variable(n);
        let mut g = t.clone();
        g.coeffs[1] = inv.clone();
        for _ in 1..n {
            let next = t.sub(&tail.compose(&g)?);
            g = PowerSeries { coeffs: next.coeffs.iter().map(|c| c.mul(&inv)).collect() };
        }
        Ok(g)
    }

    /// Compositional inverse by Lagrange's formula `[uⁿ]G = (1/n)[t^{n−1}](F/t)^{−n}`.
    pub fn revert_lagrange(&self) -> Result<Self> {
        self.check_revertible()?;
        let n = self.order();
        let quotient = self.divide_by_variable()?.inverse()?;
        let mut coeffs = vec![R::zero()];
        let mut power = Self::one(n - 1);
        for k in 1..=n {
            power = power.mul(&quotient);
            coeffs.push(power.coeffs[k - 1].scale(&Rational::new(1.into(), k.into())));
        }
        Ok(PowerSeries { coeffs })
    }
}

impl fmt::Display for PowerSeries<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            write_coefficient(f, c, first, !var.is_empty())?;
            write!(f, "{var}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `h_k` as a univariate polynomial atom.
pub fn h(k: usize) -> UniPoly {
    if k == 0 {
        UniPoly::one()
    } else {
        UniPoly::atom(MAtom(k))
    }
}

/// `H(t) = Σ_{k ≤ order} h_k t^k`.
pub fn h_series(order: usize) -> PowerSeries<UniPoly> {
    PowerSeries::new((0..=order).map(h).collect(), order)
}

/// `h_n*` read off the reversion of `u = tH(t)`: `t = uH*(u)`.
pub fn h_star(n: usize) -> UniPoly {
    h_series(n).times_variable_extended().revert().expect("tH(t) has unit slope").coefficient(n + 1)
}

/// `h_n* = (1/(n+1)) [tⁿ] E(−t)^{n+1}` with `E(−t) = H(t)^{−1}`.
pub fn h_star_lagrange(n: usize) -> UniPoly {
    let e_neg = h_series(n).inverse().expect("H(0) = 1");
    e_neg.pow(n + 1).coefficient(n).scale(&Rational::new(1.into(), (n + 1).into()))
}

/// `e_n` in terms of `h`, from `E(−t)H(t) = 1`.
pub fn e_in_h(n: usize) -> UniPoly {
    let c = h_series(n).inverse().expect("H(0) = 1").coefficient(n);
    if n % 2 == 1 {
        c.neg()
    } else {
        c
    }
}

/// Converts a polynomial in the `e_k` to one in the `h_k`.
pub fn e_to_h(p: &Poly<EAtom>) -> UniPoly {
    p.substitute(&mut |e: &EAtom| e_in_h(e.0))
}

/// The ring involution `f ↦ f*` determined by `h_k ↦ h_k*`.
pub fn star(p: &UniPoly) -> UniPoly {
    let mut cache: BTreeMap<usize, UniPoly> = BTreeMap::new();
    p.substitute(&mut |a: &MAtom| cache.entry(a.0).or_insert_with(|| h_star(a.0)).clone())
}

pub fn e_star(n: usize) -> UniPoly {
    star(&e_in_h(n))
}

/// `e_n* = −(1/(n−1)) Σ_{λ ⊢ n} C(n−1, ℓ(λ)) · ℓ(λ)!/Π mᵢ! · e_λ`.
pub fn estar_formula(n: usize) -> Result<Poly<EAtom>> {
    if n < 2 {
        return Err(Error::Domain(format!("closed e* formula needs n ≥ 2, got {n}")));
    }
    let mut out = Poly::zero();
    for lambda in integer_partitions(n) {
        let len = lambda.len();
        if len > n - 1 {
            continue;
        }
        let mut multinomial = factorial(len);
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &part in &lambda {
            *counts.entry(part).or_default() += 1;
        }
        for &m in counts.values() {
            multinomial /= factorial(m);
        }
        let c = Rational::from_integer(binomial(n - 1, len) * multinomial);
        out.add_term(Monomial::from_atoms(lambda.into_iter().map(EAtom)), c);
    }
    Ok(out.scale(&Rational::new((-1).into(), (n - 1).into())))
}

/// Integer partitions of `n`, parts weakly decreasing.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Free cumulants `k_1..k_N` of a single variable with moments `m_k`, from the compositional
/// inverse of `M(z) = z⁻¹ + Σ m_k z^{−k−1}`.
///
/// With `w = 1/z`, `M = wH(w)` where `h_k = m_k`; reverting gives `w = uH*(u)`, and
/// `K(u) = 1/(uH*(u)) = u⁻¹ + Σ k_n u^{n−1}`.
pub fn classical_cumulants(n: usize) -> Vec<UniPoly> {
    if n == 0 {
        return Vec::new();
    }
    let w = h_series(n).times_variable_extended().revert().expect("unit slope");
    let h_star_series = w.divide_by_variable().expect("no constant term");
    let k = h_star_series.inverse().expect("H*(0) = 1");
    (1..=n).map(|i| k.coefficient(i)).collect()
}

/// Image of a homogeneous noncommutative symmetric function under `S^I ↦ m_{i1}⋯m_{ir}`.
pub fn moment_character(x: &NSym) -> UniPoly {
    let mut out = UniPoly::zero();
    for (c, v) in x.terms() {
        let Composition(parts) = c;
        out = out.add(&UniPoly::monomial(Monomial::from_atoms(parts.iter().map(|&p| MAtom(p))), v.clone()));
    }
    out
}

/// `χ(K_n)` for `n = 1..=N`, where `χ(S_n) = m_n`.
pub fn nsym_cumulants(n: usize) -> Vec<UniPoly> {
    let k = cumulant_k(n, KMethod::Solve);
    (1..=n).map(|i| moment_character(&k.homogeneous(i))).collect()
}

impl PowerSeries<UniPoly> {
    /// `t · self` with the order raised by one, so no coefficient is lost.
    fn times_variable_extended(&self) -> Self {
        let mut coeffs = vec![UniPoly::zero()];
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn series(c: &[i64], order: usize) -> PowerSeries<Rational> {
        PowerSeries::new(c.iter().map(|&x| int(x)).collect(), order)
    }

    #[test]
    fn revert_of_t_is_t() {
        let t = PowerSeries::<Rational>::variable(6);
        assert_eq!(t.revert().unwrap(), t);
    }

    #[test]
    fn revert_t_plus_t_squared() {
        let g = series(&[0, 1, 1], 6).revert().unwrap();
        assert_eq!(g, series(&[0, 1, -1, 2, -5, 14, -42], 6));
        assert_eq!(g.to_string(), "t - t^2 + 2t^3 - 5t^4 + 14t^5 - 42t^6");
    }

    #[test]
    fn revert_rejects_bad_input() {
        assert!(series(&[1, 1], 3).revert().is_err());
        assert!(series(&[0, 0, 1], 3).revert().is_err());
    }

    #[test]
    fn first_h_stars() {
        assert_eq!(h_star(1), h(1).neg());
        assert_eq!(h_star(2), h(1).mul(&h(1)).scale(&int(2)).sub(&h(2)));
    }

    #[test]
    fn partitions_of_four() {
        assert_eq!(integer_partitions(4), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn estar_small_degrees() {
        assert!(estar_formula(1).is_err());
        assert_eq!(estar_formula(2).unwrap().to_string(), "-e[2]");
        assert_eq!(e_to_h(&estar_formula(2).unwrap()), e_star(2));
    }
}
