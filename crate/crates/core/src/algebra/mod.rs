//! Finite-dimensional Lie-Yamaguti algebras given by structure constants.
//!
//! Indices are 0-based in memory. Files and text dumps use 1-based indices.
//! Structure constants are stored exactly as supplied: antisymmetric
//! partners are kept as separate entries and checked by [`validate_lya`],
//! never filled in silently.

mod axioms;
mod comm;
mod construct;

pub(crate) use axioms::first_tuple;
pub use axioms::{validate_lya, AxiomReport, AxiomResult, LyAxiom};
pub use comm::CommAlgebra;
pub use construct::{
    current_algebra, derived_subalgebra, from_leibniz, from_lie, from_malcev, heisenberg, heisenberg_unsymmetrized,
    sl2, Entry2, Entry3,
};

use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::error::AlgebraError;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct LyAlgebra {
    dim: usize,
    tau: BTreeMap<(usize, usize, usize), Scalar>,
    omega: BTreeMap<(usize, usize, usize, usize), Scalar>,
    labels: Option<Vec<String>>,
    dense: OnceLock<Arc<DenseTables>>,
}

/// Brackets of basis elements as dense coordinate vectors.
#[derive(Debug)]
pub(crate) struct DenseTables {
    n: usize,
    tau: Vec<Vec<Scalar>>,
    omega: Vec<Vec<Scalar>>,
}

impl DenseTables {
    pub(crate) fn bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.tau[i * self.n + j]
    }

    pub(crate) fn triple(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        &self.omega[(i * self.n + j) * self.n + k]
    }
}

impl PartialEq for LyAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.tau == other.tau && self.omega == other.omega && self.labels == other.labels
    }
}

impl Eq for LyAlgebra {}

impl LyAlgebra {
    pub fn new(dim: usize) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        Ok(LyAlgebra { dim, tau: BTreeMap::new(), omega: BTreeMap::new(), labels: None, dense: OnceLock::new() })
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Result<Self, AlgebraError> {
        Self::new(dim)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    fn check(&self, idx: &[usize]) -> Result<(), AlgebraError> {
        match idx.iter().find(|&&i| i >= self.dim) {
            Some(&index) => Err(AlgebraError::IndexOutOfRange { index, dim: self.dim }),
            None => Ok(()),
        }
    }

    /// Sets `τ_{ij}^s`. Zero removes the entry.
    pub fn set_tau(&mut self, i: usize, j: usize, s: usize, v: Scalar) -> Result<(), AlgebraError> {
        self.check(&[i, j, s])?;
        self.dense = OnceLock::new();
        if v.is_zero() {
            self.tau.remove(&(i, j, s));
        } else {
            self.tau.insert((i, j, s), v);
        }
        Ok(())
    }

    /// Sets `ω_{ijk}^s`. Zero removes the entry.
    pub fn set_omega(&mut self, i: usize, j: usize, k: usize, s: usize, v: Scalar) -> Result<(), AlgebraError> {
        self.check(&[i, j, k, s])?;
        self.dense = OnceLock::new();
        if v.is_zero() {
            self.omega.remove(&(i, j, k, s));
        } else {
            self.omega.insert((i, j, k, s), v);
        }
        Ok(())
    }

    pub fn tau(&self, i: usize, j: usize, s: usize) -> Scalar {
        self.tau.get(&(i, j, s)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn omega(&self, i: usize, j: usize, k: usize, s: usize) -> Scalar {
        self.omega.get(&(i, j, k, s)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn tau_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.tau.iter()
    }

    pub fn omega_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize, usize), &Scalar)> {
        self.omega.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.tau.is_empty() && self.omega.is_empty()
    }

    pub(crate) fn dense(&self) -> Arc<DenseTables> {
        self.dense
            .get_or_init(|| {
                let n = self.dim;
                let mut tau = vec![vec![Scalar::zero(); n]; n * n];
                for (&(i, j, s), v) in &self.tau {
                    tau[i * n + j][s] = v.clone();
                }
                let mut omega = vec![vec![Scalar::zero(); n]; n * n * n];
                for (&(i, j, k, s), v) in &self.omega {
                    omega[(i * n + j) * n + k][s] = v.clone();
                }
                Arc::new(DenseTables { n, tau, omega })
            })
            .clone()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.dense().bracket(i, j).to_vec()
    }

    pub fn triple_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        self.dense().triple(i, j, k).to_vec()
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let t = self.dense();
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi * yj;
                axpy(&mut out, &c, t.bracket(i, j));
            }
        }
        out
    }

    /// `{x, y, z}` for coordinate vectors.
    pub fn triple(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let t = self.dense();
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let c = &xy * zk;
                    axpy(&mut out, &c, t.triple(i, j, k));
                }
            }
        }
        out
    }

    /// Coordinate vector of the basis element `e_i`.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.dim, i)
    }
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = num_traits::One::one();
    v
}

/// `out += c * v`, skipping zeros.
pub(crate) fn axpy(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += c * x;
        }
    }
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// A linear map between coordinate spaces; column `i` is the image of the
/// `i`-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source_dim: usize, target_dim: usize, matrix: Matrix) -> Result<Self, AlgebraError> {
        if matrix.cols() != source_dim {
            return Err(AlgebraError::DimensionMismatch { expected: source_dim, found: matrix.cols() });
        }
        if matrix.rows() != target_dim {
            return Err(AlgebraError::DimensionMismatch { expected: target_dim, found: matrix.rows() });
        }
        Ok(LinearMap { matrix })
    }

    pub fn from_matrix(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: Matrix::identity(n) }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn image(&self, i: usize) -> Vec<Scalar> {
        self.matrix.column(i)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    /// Checks both brackets on all basis pairs and triples; returns the
    /// first failing bracket and tuple.
    pub fn morphism_defect(
        &self,
        source: &LyAlgebra,
        target: &LyAlgebra,
    ) -> Result<Option<(&'static str, Vec<usize>)>, AlgebraError> {
        if self.source_dim() != source.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: source.dim(), found: self.source_dim() });
        }
        if self.target_dim() != target.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: target.dim(), found: self.target_dim() });
        }
        let n = source.dim();
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| self.image(i)).collect();
        let st = source.dense();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply(st.bracket(i, j));
                let rhs = target.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Ok(Some(("binary", vec![i, j])));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.apply(st.triple(i, j, k));
                    let rhs = target.triple(&images[i], &images[j], &images[k]);
                    if lhs != rhs {
                        return Ok(Some(("ternary", vec![i, j, k])));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_morphism(&self, source: &LyAlgebra, target: &LyAlgebra) -> bool {
        matches!(self.morphism_defect(source, target), Ok(None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn index_checks() {
        let mut l = LyAlgebra::new(2).unwrap();
        assert_eq!(l.set_tau(0, 2, 1, int(1)), Err(AlgebraError::IndexOutOfRange { index: 2, dim: 2 }));
        assert!(LyAlgebra::new(0).is_err());
        l.set_tau(0, 1, 1, int(1)).unwrap();
        l.set_tau(0, 1, 1, int(0)).unwrap();
        assert!(l.is_abelian());
    }

    #[test]
    fn bracket_of_vectors_is_bilinear_extension() {
        let mut l = LyAlgebra::new(2).unwrap();
        l.set_tau(0, 1, 1, int(1)).unwrap();
        l.set_tau(1, 0, 1, int(-1)).unwrap();
        let x = vec![int(2), int(3)];
        let y = vec![int(1), int(5)];
        // [x,y] = (2*5 - 3*1) e2
        assert_eq!(l.bracket(&x, &y), vec![int(0), int(7)]);
    }
}
