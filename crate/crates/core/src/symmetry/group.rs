use num_traits::{One, Zero};
use std::fmt;

use crate::error::SymmetryError;
use crate::poly::EvalAlgebra;
use crate::scalar::Scalar;

pub const DEFAULT_GROUP_CAP: usize = 64;

/// `ℤ/d_1 × … × ℤ/d_k`; elements are exponent tuples, indexed in
/// lexicographic order (last coordinate fastest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
    order: usize,
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self, SymmetryError> {
        Self::with_cap(orders, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(orders: Vec<u32>, cap: usize) -> Result<Self, SymmetryError> {
        if orders.contains(&0) {
            return Err(SymmetryError::InvalidGroup(format!("{orders:?}")));
        }
        let order = orders.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d as usize)).unwrap_or(usize::MAX);
        if order > cap {
            return Err(SymmetryError::GroupTooLarge { order, cap });
        }
        Ok(FiniteAbelianGroup { orders, order })
    }

    /// `"2x2"`, `"3"`, `"2x3x4"`; `"1"` is the trivial group.
    pub fn parse(text: &str, cap: usize) -> Result<Self, SymmetryError> {
        let orders = text
            .split(['x', 'X', '×'])
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SymmetryError::InvalidGroup(text.to_string()))?;
        Self::with_cap(orders, cap)
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.orders.len()];
        for (k, &d) in self.orders.iter().enumerate().rev() {
            out[k] = (idx % d as usize) as u32;
            idx /= d as usize;
        }
        out
    }

    /// Index of an exponent tuple; exponents are reduced mod `d_i`.
    pub fn index_of(&self, exps: &[u32]) -> Result<usize, SymmetryError> {
        if exps.len() != self.orders.len() {
            return Err(SymmetryError::InvalidGroup(format!("element {exps:?} for group {self}")));
        }
        Ok(exps.iter().zip(&self.orders).fold(0, |acc, (&e, &d)| acc * d as usize + (e % d) as usize))
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let sum: Vec<u32> = x.iter().zip(&y).zip(&self.orders).map(|((p, q), d)| (p + q) % d).collect();
        self.index_of(&sum).expect("same group")
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.orders.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

/// `𝕂[G]` with dense coordinates over the element indices.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: FiniteAbelianGroup,
    table: Vec<usize>,
}

impl GroupAlgebra {
    pub fn new(group: &FiniteAbelianGroup) -> Self {
        let n = group.order();
        let table = (0..n * n).map(|k| group.add(k / n, k % n)).collect();
        GroupAlgebra { group: group.clone(), table }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// The basis element `g`.
    pub fn element(&self, g: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.group.order()];
        v[g] = Scalar::one();
        v
    }
}

impl EvalAlgebra for GroupAlgebra {
    type Elem = Vec<Scalar>;
    fn zero(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.group.order()]
    }
    fn one(&self) -> Vec<Scalar> {
        self.element(self.group.identity())
    }
    fn add(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn mul(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        let n = self.group.order();
        let mut out = self.zero();
        for (g, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (h, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[self.table[g * n + h]] += x * y;
            }
        }
        out
    }
    fn scale(&self, c: &Scalar, a: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().map(|x| c * x).collect()
    }
}
