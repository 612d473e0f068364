use num_traits::{One, Zero};

use super::{MonoOrder, Polynomial, VarSet};
use crate::algebra::CommAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A commutative (or at least commuting-on-the-given-values) algebra that
/// polynomials can be evaluated in.
pub trait EvalAlgebra {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem;
}

/// The ground field.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl EvalAlgebra for Rationals {
    type Elem = Scalar;
    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn scale(&self, c: &Scalar, a: &Scalar) -> Scalar {
        c * a
    }
}

impl EvalAlgebra for CommAlgebra {
    type Elem = Vec<Scalar>;
    fn zero(&self) -> Vec<Scalar> {
        CommAlgebra::zero(self)
    }
    fn one(&self) -> Vec<Scalar> {
        self.unit().to_vec()
    }
    fn add(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn mul(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        CommAlgebra::mul(self, a, b)
    }
    fn scale(&self, c: &Scalar, a: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().map(|x| c * x).collect()
    }
}

/// `n × n` matrices; only meaningful on pairwise commuting values.
#[derive(Clone, Copy, Debug)]
pub struct MatrixAlgebra {
    pub n: usize,
}

impl EvalAlgebra for MatrixAlgebra {
    type Elem = Matrix;
    fn zero(&self) -> Matrix {
        Matrix::zeros(self.n, self.n)
    }
    fn one(&self) -> Matrix {
        Matrix::identity(self.n)
    }
    fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a + b
    }
    fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a * b
    }
    fn scale(&self, c: &Scalar, a: &Matrix) -> Matrix {
        a.scale(c)
    }
}

/// Polynomials over a fixed variable set; evaluation here is substitution.
#[derive(Clone, Debug)]
pub struct PolyAlgebra {
    pub vars: VarSet,
    pub order: MonoOrder,
}

impl EvalAlgebra for PolyAlgebra {
    type Elem = Polynomial;
    fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.vars, self.order)
    }
    fn one(&self) -> Polynomial {
        Polynomial::one(&self.vars, self.order)
    }
    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.add(b)
    }
    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.mul(b)
    }
    fn scale(&self, c: &Scalar, a: &Polynomial) -> Polynomial {
        a.scale(c)
    }
}

impl Polynomial {
    /// Evaluates with variable `k` sent to `values[k]`.
    pub fn eval<A: EvalAlgebra>(&self, alg: &A, values: &[A::Elem]) -> A::Elem {
        assert_eq!(values.len(), self.vars().len(), "one value per variable");
        let mut acc = alg.zero();
        for (m, c) in self.terms() {
            let mut t: Option<A::Elem> = None;
            for (v, e) in m.exponents() {
                for _ in 0..e {
                    t = Some(match t {
                        None => values[v].clone(),
                        Some(x) => alg.mul(&x, &values[v]),
                    });
                }
            }
            let t = t.unwrap_or_else(|| alg.one());
            acc = alg.add(&acc, &alg.scale(c, &t));
        }
        acc
    }

    /// Substitutes a polynomial (over `target.vars`) for every variable.
    pub fn substitute(&self, target: &PolyAlgebra, values: &[Polynomial]) -> Polynomial {
        self.eval(target, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial;
    use crate::scalar::int;

    #[test]
    fn evaluates_in_several_algebras() {
        let v = VarSet::with_count(2);
        let p = parse_polynomial("x[1,1]^2 - 2*x[1,1]*x[1,2] + 3", &v, MonoOrder::DegRevLex).unwrap();
        assert_eq!(p.eval(&Rationals, &[int(2), int(5)]), int(-13));
        let d = CommAlgebra::dual_numbers();
        // x = 1 + t, y = t: 1 + 2t - 2t + 3 = 4
        let r = p.eval(&d, &[vec![int(1), int(1)], vec![int(0), int(1)]]);
        assert_eq!(r, vec![int(4), int(0)]);
        let m = MatrixAlgebra { n: 2 };
        let r = p.eval(&m, &[Matrix::identity(2), Matrix::zeros(2, 2)]);
        assert_eq!(r, Matrix::identity(2).scale(&int(4)));
    }
}
