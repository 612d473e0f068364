use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use super::groebner::{buchberger_with_cofactors, default_degree_cap, divide_unchecked, GroebnerBasis};
use super::{MonoOrder, Polynomial, VarSet};
use crate::error::PolyError;
use crate::scalar::Scalar;

/// Answer of an ideal-membership query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Yes,
    No,
    /// the truncated basis left a nonzero remainder
    Unknown,
}

impl Membership {
    pub fn name(self) -> &'static str {
        match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Unknown => "unknown",
        }
    }
}

/// An ideal given by generators, with Gröbner bases cached per
/// `(order, degree cap)`.
#[derive(Debug)]
pub struct Ideal {
    vars: VarSet,
    gens: Vec<Polynomial>,
    cache: Mutex<BTreeMap<(MonoOrder, u32), Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            vars: self.vars.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.gens == other.gens
    }
}

impl Ideal {
    pub fn new(vars: &VarSet, gens: Vec<Polynomial>) -> Result<Self, PolyError> {
        for g in &gens {
            if g.vars() != vars {
                return Err(PolyError::MixedVarSets { expected: vars.len(), found: g.vars().len() });
            }
        }
        Ok(Ideal { vars: vars.clone(), gens, cache: Mutex::new(BTreeMap::new()) })
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    /// Adds a generator and drops every cached basis.
    pub fn push(&mut self, g: Polynomial) -> Result<(), PolyError> {
        if g.vars() != &self.vars {
            return Err(PolyError::MixedVarSets { expected: self.vars.len(), found: g.vars().len() });
        }
        self.gens.push(g);
        self.cache.get_mut().unwrap().clear();
        Ok(())
    }

    pub fn default_cap(&self) -> u32 {
        default_degree_cap(&self.gens)
    }

    /// Gröbner basis (with cofactors) under `order`, truncated at `cap`.
    pub fn groebner(&self, order: MonoOrder, cap: u32) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().unwrap().get(&(order, cap)) {
            return gb.clone();
        }
        let gb = Arc::new(buchberger_with_cofactors(&self.gens, order, cap));
        self.cache.lock().unwrap().insert((order, cap), gb.clone());
        gb
    }

    /// Membership with the cheap certificates first: a scalar multiple of a
    /// generator, then division by the generators, then a capped basis.
    pub fn contains(&self, p: &Polynomial, cap: u32) -> Result<Membership, PolyError> {
        if p.vars() != &self.vars {
            return Err(PolyError::MixedVarSets { expected: self.vars.len(), found: p.vars().len() });
        }
        if p.is_zero() || self.multiple_of_generator(p).is_some() {
            return Ok(Membership::Yes);
        }
        let gens = self.gens_in(p.order());
        if divide_unchecked(p, &gens, false).remainder.is_zero() {
            return Ok(Membership::Yes);
        }
        let gb = self.groebner(p.order(), cap);
        Ok(if gb.normal_form(p).is_zero() {
            Membership::Yes
        } else if gb.complete {
            Membership::No
        } else {
            Membership::Unknown
        })
    }

    /// Cofactors `c` with `Σ c_k · gens[k] = p`, or `None` when no
    /// certificate was found at this cap.
    pub fn certificate(&self, p: &Polynomial, cap: u32) -> Option<Vec<Polynomial>> {
        let order = p.order();
        let gens = self.gens_in(order);
        let d = divide_unchecked(p, &gens, true);
        if d.remainder.is_zero() {
            return Some(d.quotients);
        }
        self.groebner(order, cap).lift(p, self.gens.len())
    }

    /// Checks a certificate exactly.
    pub fn verify_certificate(&self, p: &Polynomial, cofactors: &[Polynomial]) -> bool {
        if cofactors.len() != self.gens.len() {
            return false;
        }
        let order = p.order();
        let mut sum = Polynomial::zero(&self.vars, order);
        for (c, g) in cofactors.iter().zip(&self.gens) {
            sum = sum.add(&c.with_order(order).mul(&g.with_order(order)));
        }
        &sum == p
    }

    fn gens_in(&self, order: MonoOrder) -> Vec<Polynomial> {
        self.gens.iter().map(|g| g.with_order(order)).collect()
    }

    fn multiple_of_generator(&self, p: &Polynomial) -> Option<(usize, Scalar)> {
        let (lm, lc) = p.terms().first()?;
        self.gens.iter().enumerate().find_map(|(k, g)| {
            let g = g.with_order(p.order());
            if g.len() != p.len() || g.leading_monomial() != Some(lm) {
                return None;
            }
            let c = lc / g.leading_coefficient().unwrap();
            (g.scale(&c) == *p).then_some((k, c))
        })
    }
}
