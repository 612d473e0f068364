use num_traits::{One, Zero};
use std::collections::BTreeMap;

use super::axioms::first_tuple;
use super::{axpy, unit_vector};
use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// A finite-dimensional commutative associative unital algebra, given by
/// multiplication constants `a_a a_b = Σ_c mult[(a,b,c)] a_c` and the
/// coordinates of the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra {
    dim: usize,
    mult: BTreeMap<(usize, usize, usize), Scalar>,
    unit: Vec<Scalar>,
    table: Vec<Vec<Scalar>>,
}

impl CommAlgebra {
    /// Builds the algebra without checking the laws; see [`CommAlgebra::validate`].
    pub fn new(
        dim: usize,
        mult: BTreeMap<(usize, usize, usize), Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if unit.len() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, found: unit.len() });
        }
        let mut table = vec![vec![Scalar::zero(); dim]; dim * dim];
        let mut clean = BTreeMap::new();
        for ((a, b, c), v) in mult {
            if let Some(&index) = [a, b, c].iter().find(|&&i| i >= dim) {
                return Err(AlgebraError::IndexOutOfRange { index, dim });
            }
            if !v.is_zero() {
                table[a * dim + b][c] = v.clone();
                clean.insert((a, b, c), v);
            }
        }
        Ok(CommAlgebra { dim, mult: clean, unit, table })
    }

    /// Builds and validates.
    pub fn checked(
        dim: usize,
        mult: BTreeMap<(usize, usize, usize), Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        let a = Self::new(dim, mult, unit)?;
        a.validate()?;
        Ok(a)
    }

    /// The ground field as a 1-dimensional algebra.
    pub fn field() -> Self {
        Self::truncated(1)
    }

    /// `𝕂[t]/(t²)`, basis `1, t`.
    pub fn dual_numbers() -> Self {
        Self::truncated(2)
    }

    /// `𝕂[t]/(t^m)` in the basis `1, t, …, t^{m-1}`.
    pub fn truncated(m: usize) -> Self {
        let mut mult = BTreeMap::new();
        for a in 0..m {
            for b in 0..m {
                if a + b < m {
                    mult.insert((a, b, a + b), Scalar::one());
                }
            }
        }
        Self::new(m.max(1), mult, unit_vector(m.max(1), 0)).expect("well-formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn mult_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.mult.iter()
    }

    pub(crate) fn basis_product(&self, a: usize, b: usize) -> &[Scalar] {
        &self.table[a * self.dim + b]
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.dim]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                axpy(&mut out, &(xa * yb), self.basis_product(a, b));
            }
        }
        out
    }

    /// Checks commutativity, associativity and the unit law on basis elements.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        if let Some(w) = first_tuple(n, 2, |t| self.basis_product(t[0], t[1]) != self.basis_product(t[1], t[0])) {
            return Err(AlgebraError::InvalidCommAlgebra { law: "commutativity", witness: w });
        }
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(n, i)).collect();
        if let Some(w) = first_tuple(n, 3, |t| {
            let left = self.mul(self.basis_product(t[0], t[1]), &basis[t[2]]);
            let right = self.mul(&basis[t[0]], self.basis_product(t[1], t[2]));
            left != right
        }) {
            return Err(AlgebraError::InvalidCommAlgebra { law: "associativity", witness: w });
        }
        if let Some(w) = first_tuple(n, 1, |t| self.mul(&self.unit, &basis[t[0]]) != basis[t[0]]) {
            return Err(AlgebraError::InvalidCommAlgebra { law: "unit", witness: w });
        }
        Ok(())
    }
}
