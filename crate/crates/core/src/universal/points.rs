//! Algebra maps `𝒜(L, K) → A` into finite-dimensional commutative algebras
//! and the bijection with morphisms `K → L ⊗ A`.

use num_traits::Zero;

use super::{var_index, Presentation};
use crate::algebra::{current_algebra, CommAlgebra, LinearMap};
use crate::error::UniversalError;
use crate::linalg::Matrix;
use crate::poly::Rationals;
use crate::scalar::Scalar;

/// Images `θ(x[s,i])` (coordinate vectors in `target`), indexed like the
/// presentation's variables; verified on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPoint {
    target: CommAlgebra,
    images: Vec<Vec<Scalar>>,
}

impl AlgebraPoint {
    pub fn target(&self) -> &CommAlgebra {
        &self.target
    }

    pub fn images(&self) -> &[Vec<Scalar>] {
        &self.images
    }

    /// `θ(x[s,i])` for an `n × m` presentation.
    pub fn image(&self, m: usize, s: usize, i: usize) -> &[Scalar] {
        &self.images[var_index(m, s, i)]
    }
}

/// Checks that every `P` and `Q` vanishes under `x[s,i] ↦ images[..]`.
pub fn verify_point(
    pres: &Presentation,
    target: &CommAlgebra,
    images: Vec<Vec<Scalar>>,
) -> Result<AlgebraPoint, UniversalError> {
    let nvars = pres.vars().len();
    if images.len() != nvars {
        return Err(UniversalError::PointShape { expected: nvars, found: images.len() });
    }
    if let Some(bad) = images.iter().find(|v| v.len() != target.dim()) {
        return Err(UniversalError::PointShape { expected: target.dim(), found: bad.len() });
    }
    for g in pres.generators() {
        let v = g.poly.eval(target, &images);
        if v.iter().any(|c| !c.is_zero()) {
            return Err(UniversalError::UnverifiedPoint { generator: g.name() });
        }
    }
    Ok(AlgebraPoint { target: target.clone(), images })
}

/// A scalar point given as the matrix `T[s][i] = θ(x[s,i])`.
pub fn verify_scalar_point(pres: &Presentation, t: &Matrix) -> Result<AlgebraPoint, UniversalError> {
    let (n, m) = pres.dims();
    if t.rows() != n || t.cols() != m {
        return Err(UniversalError::PointShape { expected: n * m, found: t.rows() * t.cols() });
    }
    let images = (0..n).flat_map(|s| (0..m).map(move |i| (s, i))).map(|(s, i)| vec![t[(s, i)].clone()]).collect();
    verify_point(pres, &CommAlgebra::field(), images)
}

/// `Ψ(θ) = (id ⊗ θ) ∘ Φ : K → L ⊗ A`, as a matrix into the basis
/// `e_s ⊗ a_p` (index `s · dim A + p`) of the current algebra.
pub fn psi_forward(pres: &Presentation, point: &AlgebraPoint) -> LinearMap {
    let (n, m) = pres.dims();
    let d = point.target.dim();
    let matrix = Matrix::from_fn(n * d, m, |row, i| {
        let (s, p) = (row / d, row % d);
        point.image(m, s, i)[p].clone()
    });
    LinearMap::from_matrix(matrix)
}

/// Where `Ψ⁻¹` should land.
#[derive(Clone, Debug)]
pub enum PsiTarget {
    Finite(CommAlgebra),
    /// the universal algebra itself; not decidable by evaluation
    Universal,
}

/// Reads `g[s,i]` off `γ(f_i) = Σ_s e_s ⊗ g[s,i]` after checking that `γ`
/// is a morphism `K → L ⊗ A`.
pub fn psi_inverse(pres: &Presentation, target: &PsiTarget, gamma: &LinearMap) -> Result<AlgebraPoint, UniversalError> {
    let a = match target {
        PsiTarget::Finite(a) => a,
        PsiTarget::Universal => return Err(UniversalError::FiniteTargetRequired),
    };
    let (n, m) = pres.dims();
    let d = a.dim();
    let current = current_algebra(pres.l(), a)?;
    if let Some((bracket, witness)) = gamma.morphism_defect(pres.k(), &current)? {
        return Err(UniversalError::NotAMorphism { bracket, witness });
    }
    let mx = gamma.matrix();
    let mut images = Vec::with_capacity(n * m);
    for s in 0..n {
        for i in 0..m {
            images.push((0..d).map(|p| mx[(s * d + p, i)].clone()).collect());
        }
    }
    verify_point(pres, a, images)
}

/// Basis of the tangent space at a scalar point: vectors `v` with
/// `Σ_k ∂g/∂x_k (base) · v_k = 0` for every generator `g`. Then
/// `x ↦ base + t·v` is a point into `𝕂[t]/(t²)`.
pub fn tangent_space(pres: &Presentation, base: &[Scalar]) -> Vec<Vec<Scalar>> {
    let nv = pres.vars().len();
    let rows: Vec<Vec<Scalar>> =
        pres.generators().map(|g| (0..nv).map(|k| g.poly.derivative(k).eval(&Rationals, base)).collect()).collect();
    if rows.is_empty() {
        return (0..nv).map(|k| crate::algebra::unit_vector(nv, k)).collect();
    }
    Matrix::from_rows(rows).null_space()
}

/// Dual-number point `x ↦ base + t·tangent`.
pub fn dual_point(base: &[Scalar], tangent: &[Scalar]) -> Vec<Vec<Scalar>> {
    base.iter().zip(tangent).map(|(b, t)| vec![b.clone(), t.clone()]).collect()
}
