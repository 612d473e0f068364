use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

use super::{MonoOrder, Monomial, VarSet};
use crate::scalar::Scalar;

/// A sparse polynomial over a [`VarSet`] with terms sorted strictly
/// decreasing under `order`; no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: VarSet,
    order: MonoOrder,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet, order: MonoOrder) -> Self {
        Polynomial { vars: vars.clone(), order, terms: Vec::new() }
    }

    pub fn constant(vars: &VarSet, order: MonoOrder, c: Scalar) -> Self {
        Self::from_terms(vars, order, vec![(Monomial::one(), c)])
    }

    pub fn one(vars: &VarSet, order: MonoOrder) -> Self {
        Self::constant(vars, order, Scalar::one())
    }

    pub fn var(vars: &VarSet, order: MonoOrder, v: usize) -> Self {
        assert!(v < vars.len(), "variable index out of range");
        Self::from_terms(vars, order, vec![(Monomial::var(v), Scalar::one())])
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(vars: &VarSet, order: MonoOrder, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if matches!(out.last(), Some(l) if l.1.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some(l) if l.1.is_zero()) {
            out.pop();
        }
        Polynomial { vars: vars.clone(), order, terms: out }
    }

    /// Terms already sorted and nonzero.
    pub(crate) fn from_sorted(vars: &VarSet, order: MonoOrder, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { vars: vars.clone(), order, terms }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn order(&self) -> MonoOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.iter().find(|t| &t.0 == m).map_or_else(Scalar::zero, |t| t.1.clone())
    }

    /// Same polynomial sorted under another order.
    pub fn with_order(&self, order: MonoOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { vars: self.vars.clone(), order, terms }
    }

    fn same_ring(&self, other: &Polynomial) {
        assert!(self.vars == other.vars, "polynomials over different variable sets");
        assert_eq!(self.order, other.order, "polynomials under different orders");
    }

    /// `self + c * m * other`, merging the sorted term lists.
    pub fn add_scaled(&self, c: &Scalar, m: &Monomial, other: &Polynomial) -> Polynomial {
        self.same_ring(other);
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let o = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(mm, cc)| (mm.mul(m), c * cc)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => o.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m1, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let s = c1 + c2;
                    if !s.is_zero() {
                        out.push((m1.clone(), s));
                    }
                }
            }
        }
        Polynomial { vars: self.vars.clone(), order: o, terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(&Scalar::one(), &Monomial::one(), other)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(&-Scalar::one(), &Monomial::one(), other)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars, self.order);
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        Polynomial { vars: self.vars.clone(), order: self.order, terms }
    }

    pub fn mul_monomial(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars, self.order);
        }
        // multiplication by a monomial preserves the order of terms
        let terms = self.terms.iter().map(|(mm, x)| (mm.mul(m), x * c)).collect();
        Polynomial { vars: self.vars.clone(), order: self.order, terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.same_ring(other);
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                terms.push((m1.mul(m2), c1 * c2));
            }
        }
        Polynomial::from_terms(&self.vars, self.order, terms)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.vars, self.order);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&(Scalar::one() / lc)),
        }
    }

    /// Partial derivative with respect to variable `v`.
    pub fn derivative(&self, v: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(v);
                (e > 0).then(|| {
                    let q = Monomial::var(v).quotient_of(m).expect("v divides m");
                    (q, c * Scalar::from_integer(e.into()))
                })
            })
            .collect();
        Polynomial::from_terms(&self.vars, self.order, terms)
    }

    /// Moves every variable `v` to `f(v)` in a new variable set.
    pub fn rename(&self, target: &VarSet, f: impl Fn(usize) -> usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())).collect();
        Polynomial::from_terms(target, self.order, terms)
    }

    /// `Σ c_k · p_k`
    pub fn linear_combination(vars: &VarSet, order: MonoOrder, parts: &[(Scalar, &Polynomial)]) -> Polynomial {
        let mut out = Polynomial::zero(vars, order);
        for (c, p) in parts {
            out = out.add_scaled(c, &Monomial::one(), p);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_polynomial(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn arithmetic_cancels() {
        let v = VarSet::with_count(2);
        let o = MonoOrder::DegRevLex;
        let x = Polynomial::var(&v, o, 0);
        let y = Polynomial::var(&v, o, 1);
        let s = x.add(&y);
        let d = x.sub(&y);
        let prod = s.mul(&d);
        let expected = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(prod, expected);
        assert!(prod.sub(&expected).is_zero());
        assert_eq!(prod.leading_monomial().unwrap(), &Monomial::from_pairs(&[(0, 2)]));
        assert_eq!(s.pow(2).coefficient(&Monomial::from_pairs(&[(0, 1), (1, 1)])), int(2));
    }
}
