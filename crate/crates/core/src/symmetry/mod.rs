//! Automorphisms as invertible scalar points of `𝒜(L)` and abelian group
//! gradings as bialgebra maps `𝒜(L) → 𝕂[G]`.

mod grading;
mod group;

pub use grading::{
    conjugate_point, enumerate_diagonal_gradings, grading_to_point, maps_components, point_to_grading,
    validate_grading, verify_group_point, Grading, GradingReport, GroupAlgebraPoint,
};
pub use group::{FiniteAbelianGroup, GroupAlgebra, DEFAULT_GROUP_CAP};

use num_traits::Zero;

use crate::algebra::{LinearMap, LyAlgebra};
use crate::error::SymmetryError;
use crate::linalg::Matrix;
use crate::poly::Rationals;
use crate::scalar::Scalar;
use crate::universal::Presentation;

/// Why a matrix is not an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphismWitness {
    Singular,
    /// `("binary" | "ternary", basis tuple)`, 0-based
    Bracket(&'static str, Vec<usize>),
}

pub fn is_automorphism_direct(l: &LyAlgebra, m: &Matrix) -> Result<Option<AutomorphismWitness>, SymmetryError> {
    let n = l.dim();
    if m.rows() != n || m.cols() != n {
        return Err(SymmetryError::NotSquare { expected: n });
    }
    if m.determinant().is_zero() {
        return Ok(Some(AutomorphismWitness::Singular));
    }
    let map = LinearMap::from_matrix(m.clone());
    Ok(map.morphism_defect(l, l).expect("dimensions checked").map(|(b, w)| AutomorphismWitness::Bracket(b, w)))
}

/// `T[s][i] = θ(x[s,i])` for a verified algebra map `𝒜(L) → 𝕂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarPoint {
    matrix: Matrix,
}

impl ScalarPoint {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// The counit `x[s,i] ↦ δ_si`, the unit of the convolution monoid.
    pub fn counit(n: usize) -> Self {
        ScalarPoint { matrix: Matrix::identity(n) }
    }

    /// `ζ(θ)(e_i) = Σ_s θ(x[s,i]) e_s`.
    pub fn zeta(&self) -> LinearMap {
        LinearMap::from_matrix(self.matrix.clone())
    }
}

/// Verifies that every generator vanishes at `x[s,i] ↦ m[s][i]`.
pub fn point_from_matrix(pres: &Presentation, m: &Matrix) -> Result<ScalarPoint, SymmetryError> {
    let (n, k) = pres.dims();
    if n != k {
        return Err(crate::error::UniversalError::NotSquare.into());
    }
    if m.rows() != n || m.cols() != n {
        return Err(SymmetryError::NotSquare { expected: n });
    }
    let values: Vec<Scalar> =
        (0..n).flat_map(|s| (0..n).map(move |i| (s, i))).map(|(s, i)| m[(s, i)].clone()).collect();
    for g in pres.generators() {
        if !g.poly.eval(&Rationals, &values).is_zero() {
            return Err(SymmetryError::RelationViolated { generator: g.name() });
        }
    }
    Ok(ScalarPoint { matrix: m.clone() })
}

/// `(θ1 ⋆ θ2)(x[s,j]) = Σ_t θ1(x[s,t]) θ2(x[t,j])`.
pub fn convolution(pres: &Presentation, p1: &ScalarPoint, p2: &ScalarPoint) -> ScalarPoint {
    let product = &p1.matrix * &p2.matrix;
    point_from_matrix(pres, &product).expect("the convolution of two points is a point")
}

/// The three-way comparison behind the automorphism characterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub direct: bool,
    pub point: bool,
    pub invertible: bool,
    pub inverse_point: bool,
}

impl EquivalenceReport {
    pub fn via_points(&self) -> bool {
        self.point && self.invertible && self.inverse_point
    }

    pub fn agrees(&self) -> bool {
        self.direct == self.via_points()
    }
}

pub fn automorphism_equivalence_check(pres: &Presentation, m: &Matrix) -> Result<EquivalenceReport, SymmetryError> {
    let direct = is_automorphism_direct(pres.l(), m)?.is_none();
    let point = match point_from_matrix(pres, m) {
        Ok(_) => true,
        Err(SymmetryError::RelationViolated { .. }) => false,
        Err(e) => return Err(e),
    };
    let inverse = m.inverse();
    let invertible = inverse.is_some();
    let inverse_point = inverse.is_some_and(|inv| point_from_matrix(pres, &inv).is_ok());
    Ok(EquivalenceReport { direct, point, invertible, inverse_point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::heisenberg;
    use crate::scalar::{frac, int};

    fn swap() -> Matrix {
        Matrix::from_i64(&[&[-1, 0, 0], &[0, 0, 1], &[0, 1, 0]])
    }

    #[test]
    fn heisenberg_swap_and_scaling() {
        let h = heisenberg(1).unwrap();
        let pres = Presentation::new(&h, &h);
        assert_eq!(is_automorphism_direct(&h, &swap()).unwrap(), None);
        let p = point_from_matrix(&pres, &swap()).unwrap();
        assert_eq!(convolution(&pres, &p, &p), ScalarPoint::counit(3));

        let mut scale = Matrix::identity(3);
        scale[(1, 1)] = int(2);
        scale[(2, 2)] = frac(1, 2);
        assert_eq!(
            is_automorphism_direct(&h, &scale).unwrap(),
            Some(AutomorphismWitness::Bracket("ternary", vec![1, 2, 1]))
        );
        match point_from_matrix(&pres, &scale) {
            Err(SymmetryError::RelationViolated { generator }) => assert!(generator.starts_with('Q')),
            other => panic!("{other:?}"),
        }
        let r = automorphism_equivalence_check(&pres, &Matrix::zeros(3, 3)).unwrap();
        assert!(r.agrees() && !r.direct && r.point);
    }
}
