//! Modules over Lie-Yamaguti algebras, the induced module on `U ⊗ W` and
//! the universal module presentation `𝒰(U, V)`.

mod induced;
mod universal;

pub use induced::{induced_module, intertwines, multiplication_matrix, verify_matrix_point, MatrixPoint};
pub use universal::{
    factor_through, universal_module_presentation, Family, GammaMap, ModuleMorphism, ModulePresentation, Relation,
};

use num_traits::Zero;

use crate::algebra::{AxiomReport, AxiomResult, LyAlgebra};
use crate::error::RepError;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `(ρ, D, θ)` on an `m`-dimensional space, one matrix per basis index
/// (pair) of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyModule {
    over: LyAlgebra,
    dim: usize,
    rho: Vec<Matrix>,
    d: Vec<Matrix>,
    theta: Vec<Matrix>,
}

fn check_square(what: &'static str, m: &Matrix, dim: usize) -> Result<(), RepError> {
    if m.rows() != dim || m.cols() != dim {
        let found = if m.rows() != dim { m.rows() } else { m.cols() };
        return Err(RepError::DimensionMismatch { what, expected: dim, found });
    }
    Ok(())
}

impl LyModule {
    /// The zero module.
    pub fn zero(over: &LyAlgebra, dim: usize) -> Self {
        let n = over.dim();
        let z = Matrix::zeros(dim, dim);
        LyModule { over: over.clone(), dim, rho: vec![z.clone(); n], d: vec![z.clone(); n * n], theta: vec![z; n * n] }
    }

    /// `rho[i]`, `d[i*n+j]`, `theta[i*n+j]`; every matrix `dim × dim`.
    pub fn from_parts(
        over: &LyAlgebra,
        dim: usize,
        rho: Vec<Matrix>,
        d: Vec<Matrix>,
        theta: Vec<Matrix>,
    ) -> Result<Self, RepError> {
        let n = over.dim();
        if rho.len() != n {
            return Err(RepError::DimensionMismatch { what: "rho", expected: n, found: rho.len() });
        }
        if d.len() != n * n {
            return Err(RepError::DimensionMismatch { what: "D", expected: n * n, found: d.len() });
        }
        if theta.len() != n * n {
            return Err(RepError::DimensionMismatch { what: "theta", expected: n * n, found: theta.len() });
        }
        for m in &rho {
            check_square("rho", m, dim)?;
        }
        for m in &d {
            check_square("D", m, dim)?;
        }
        for m in &theta {
            check_square("theta", m, dim)?;
        }
        Ok(LyModule { over: over.clone(), dim, rho, d, theta })
    }

    pub fn over(&self) -> &LyAlgebra {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn d(&self, i: usize, j: usize) -> &Matrix {
        &self.d[i * self.over.dim() + j]
    }

    pub fn theta(&self, i: usize, j: usize) -> &Matrix {
        &self.theta[i * self.over.dim() + j]
    }

    pub fn set_rho(&mut self, i: usize, m: Matrix) -> Result<(), RepError> {
        self.index(i)?;
        check_square("rho", &m, self.dim)?;
        self.rho[i] = m;
        Ok(())
    }

    pub fn set_d(&mut self, i: usize, j: usize, m: Matrix) -> Result<(), RepError> {
        let k = self.pair(i, j)?;
        check_square("D", &m, self.dim)?;
        self.d[k] = m;
        Ok(())
    }

    pub fn set_theta(&mut self, i: usize, j: usize, m: Matrix) -> Result<(), RepError> {
        let k = self.pair(i, j)?;
        check_square("theta", &m, self.dim)?;
        self.theta[k] = m;
        Ok(())
    }

    fn index(&self, i: usize) -> Result<(), RepError> {
        let n = self.over.dim();
        if i >= n {
            return Err(RepError::DimensionMismatch { what: "algebra index", expected: n, found: i + 1 });
        }
        Ok(())
    }

    fn pair(&self, i: usize, j: usize) -> Result<usize, RepError> {
        self.index(i)?;
        self.index(j)?;
        Ok(i * self.over.dim() + j)
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn rho_of(&self, x: &[Scalar]) -> Matrix {
        combine(self.dim, x.iter().zip(&self.rho))
    }

    /// `θ(e_i, x)`
    pub fn theta_right(&self, i: usize, x: &[Scalar]) -> Matrix {
        let n = self.over.dim();
        combine(self.dim, x.iter().zip(&self.theta[i * n..(i + 1) * n]))
    }

    /// `θ(x, e_j)`
    pub fn theta_left(&self, x: &[Scalar], j: usize) -> Matrix {
        let n = self.over.dim();
        combine(self.dim, x.iter().zip((0..n).map(|i| &self.theta[i * n + j])))
    }

    /// `D(x, e_j)`
    pub fn d_left(&self, x: &[Scalar], j: usize) -> Matrix {
        let n = self.over.dim();
        combine(self.dim, x.iter().zip((0..n).map(|i| &self.d[i * n + j])))
    }
}

fn combine<'a>(dim: usize, parts: impl Iterator<Item = (&'a Scalar, &'a Matrix)>) -> Matrix {
    let mut out = Matrix::zeros(dim, dim);
    for (c, m) in parts {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

/// `ρ(a)b = [a,b]`, `D(a,b)c = {a,b,c}`, `θ(a,b)c = {c,a,b}`.
pub fn self_module(l: &LyAlgebra) -> LyModule {
    let n = l.dim();
    let rho = (0..n).map(|a| Matrix::from_fn(n, n, |s, b| l.bracket_basis(a, b)[s].clone())).collect();
    let mut d = Vec::with_capacity(n * n);
    let mut theta = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            d.push(Matrix::from_fn(n, n, |s, c| l.triple_basis(a, b, c)[s].clone()));
            theta.push(Matrix::from_fn(n, n, |s, c| l.triple_basis(c, a, b)[s].clone()));
        }
    }
    LyModule { over: l.clone(), dim: n, rho, d, theta }
}

pub const MODULE_AXIOMS: [&str; 7] = ["R1", "R2", "R3", "R4", "R5", "R6", "R7"];

/// Checks R1–R6 and the derived identity R7 on all basis tuples.
pub fn validate_module(m: &LyModule) -> AxiomReport {
    use crate::algebra::first_tuple;
    let l = &m.over;
    let n = l.dim();
    let br = |a: usize, b: usize| l.bracket_basis(a, b);
    let tr = |a: usize, b: usize, c: usize| l.triple_basis(a, b, c);
    let rho = |a: usize| m.rho(a);
    let d = |a: usize, b: usize| m.d(a, b);
    let th = |a: usize, b: usize| m.theta(a, b);
    let mul = |a: &Matrix, b: &Matrix| a * b;

    let r1 = first_tuple(n, 2, |t| {
        let (a, b) = (t[0], t[1]);
        let lhs = &(d(a, b) + th(a, b)) - th(b, a);
        let rhs = &rho(a).commutator(rho(b)) - &m.rho_of(&br(a, b));
        lhs != rhs
    });
    let r2 = first_tuple(n, 3, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let v = &(&m.theta_right(a, &br(b, c)) - &mul(rho(b), th(a, c))) + &mul(rho(c), th(a, b));
        !v.is_zero()
    });
    let r3 = first_tuple(n, 3, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let v = &(&m.theta_left(&br(a, b), c) - &mul(th(a, c), rho(b))) + &mul(th(b, c), rho(a));
        !v.is_zero()
    });
    let r4 = first_tuple(n, 4, |t| {
        let (a, b, c, e) = (t[0], t[1], t[2], t[3]);
        let v = &(&(&mul(th(c, e), th(a, b)) - &mul(th(b, e), th(a, c))) - &m.theta_right(a, &tr(b, c, e)))
            + &mul(d(b, c), th(a, e));
        !v.is_zero()
    });
    let r5 = first_tuple(n, 3, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        d(a, b).commutator(rho(c)) != m.rho_of(&tr(a, b, c))
    });
    let r6 = first_tuple(n, 4, |t| {
        let (a, b, c, e) = (t[0], t[1], t[2], t[3]);
        let rhs = &m.theta_left(&tr(a, b, c), e) + &m.theta_right(c, &tr(a, b, e));
        d(a, b).commutator(th(c, e)) != rhs
    });
    let r7 = first_tuple(n, 3, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let v = &(&m.d_left(&br(a, b), c) + &m.d_left(&br(b, c), a)) + &m.d_left(&br(c, a), b);
        !v.is_zero()
    });
    let results = MODULE_AXIOMS
        .iter()
        .zip([r1, r2, r3, r4, r5, r6, r7])
        .map(|(&axiom, witness)| AxiomResult { axiom, witness })
        .collect();
    AxiomReport { results }
}

/// Checks `map ∘ X_source = X_target ∘ map` for every `ρ`, `D`, `θ`
/// matrix; `map` is `target.dim() × source.dim()`. The witness is the
/// failing basis index (pair).
pub fn module_morphism_defect(source: &LyModule, target: &LyModule, map: &Matrix) -> Result<(), RepError> {
    if source.over != target.over {
        return Err(RepError::Incompatible("modules over different algebras"));
    }
    if map.rows() != target.dim || map.cols() != source.dim {
        return Err(RepError::DimensionMismatch { what: "module map", expected: target.dim, found: map.rows() });
    }
    let n = source.over.dim();
    for i in 0..n {
        if (map * source.rho(i)) != (target.rho(i) * map) {
            return Err(RepError::NotAModuleMorphism { map: "rho", witness: vec![i] });
        }
    }
    for i in 0..n {
        for j in 0..n {
            if (map * source.d(i, j)) != (target.d(i, j) * map) {
                return Err(RepError::NotAModuleMorphism { map: "D", witness: vec![i, j] });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if (map * source.theta(i, j)) != (target.theta(i, j) * map) {
                return Err(RepError::NotAModuleMorphism { map: "theta", witness: vec![i, j] });
            }
        }
    }
    Ok(())
}
