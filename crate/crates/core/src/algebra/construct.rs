//! Standard constructions: Lie, Leibniz and Malcev algebras, the Heisenberg
//! family, current algebras and the derived subalgebra.

use num_traits::Zero;

use super::axioms::first_tuple;
use super::{axpy, CommAlgebra, LyAlgebra};
use crate::error::AlgebraError;
use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

/// `(i, j, s, c)`: the product of `e_i` and `e_j` has coefficient `c` on `e_s`.
pub type Entry2 = (usize, usize, usize, Scalar);
/// `(i, j, k, s, c)` for ternary products.
pub type Entry3 = (usize, usize, usize, usize, Scalar);

/// Dense product table of a bilinear map on `𝕂^n`.
struct Product {
    n: usize,
    table: Vec<Vec<Scalar>>,
}

impl Product {
    fn new(entries: &[Entry2], n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let mut table = vec![vec![Scalar::zero(); n]; n * n];
        for (i, j, s, c) in entries {
            if let Some(&index) = [*i, *j, *s].iter().find(|&&x| x >= n) {
                return Err(AlgebraError::IndexOutOfRange { index, dim: n });
            }
            table[i * n + j][*s] += c;
        }
        Ok(Product { n, table })
    }

    fn basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.n + j]
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                axpy(&mut out, &(xi * yj), self.basis(i, j));
            }
        }
        out
    }

    fn e(&self, i: usize) -> Vec<Scalar> {
        super::unit_vector(self.n, i)
    }

    fn antisymmetry_witness(&self) -> Option<Vec<usize>> {
        first_tuple(self.n, 2, |t| {
            self.basis(t[0], t[1]).iter().zip(self.basis(t[1], t[0])).any(|(a, b)| !(a + b).is_zero())
        })
    }

    /// `(xy)z + (yz)x + (zx)y`
    fn jacobiator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut j = self.mul(&self.mul(x, y), z);
        for (a, b) in j.iter_mut().zip(self.mul(&self.mul(y, z), x)) {
            *a += b;
        }
        for (a, b) in j.iter_mut().zip(self.mul(&self.mul(z, x), y)) {
            *a += b;
        }
        j
    }

    fn into_algebra(
        self,
        tau: impl Fn(usize, usize) -> Vec<Scalar>,
        omega: impl Fn(usize, usize, usize) -> Vec<Scalar>,
    ) -> LyAlgebra {
        let n = self.n;
        let mut l = LyAlgebra::new(n).expect("positive dimension");
        for i in 0..n {
            for j in 0..n {
                for (s, v) in tau(i, j).into_iter().enumerate() {
                    l.set_tau(i, j, s, v).expect("in range");
                }
                for k in 0..n {
                    for (s, v) in omega(i, j, k).into_iter().enumerate() {
                        l.set_omega(i, j, k, s, v).expect("in range");
                    }
                }
            }
        }
        l
    }
}

fn sub(mut a: Vec<Scalar>, b: &[Scalar]) -> Vec<Scalar> {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    a
}

fn neg(mut a: Vec<Scalar>) -> Vec<Scalar> {
    for x in a.iter_mut() {
        *x = -x.clone();
    }
    a
}

/// A Lie algebra viewed as a Lie-Yamaguti algebra with `{a,b,c} = [[a,b],c]`.
pub fn from_lie(bracket: &[Entry2], n: usize) -> Result<LyAlgebra, AlgebraError> {
    let p = Product::new(bracket, n)?;
    if let Some(w) = p.antisymmetry_witness() {
        return Err(AlgebraError::NotALieAlgebra { reason: "antisymmetry", witness: w });
    }
    if let Some(w) =
        first_tuple(n, 3, |t| p.jacobiator(&p.e(t[0]), &p.e(t[1]), &p.e(t[2])).iter().any(|v| !v.is_zero()))
    {
        return Err(AlgebraError::NotALieAlgebra { reason: "Jacobi identity", witness: w });
    }
    let tau = |i: usize, j: usize| p.basis(i, j).to_vec();
    let omega = |i: usize, j: usize, k: usize| p.mul(p.basis(i, j), &p.e(k));
    let l = Product::new(bracket, n)?.into_algebra(tau, omega);
    Ok(l)
}

/// `sl2` with basis `h, e, f`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LyAlgebra {
    let c = |v: i64| Scalar::from_integer(v.into());
    let bracket =
        vec![(0, 1, 1, c(2)), (1, 0, 1, c(-2)), (0, 2, 2, c(-2)), (2, 0, 2, c(2)), (1, 2, 0, c(1)), (2, 1, 0, c(-1))];
    from_lie(&bracket, 3)
        .and_then(|l| l.with_labels(vec!["h".into(), "e".into(), "f".into()]))
        .expect("sl2 is a Lie algebra")
}

/// A left Leibniz algebra (`x(yz) = (xy)z + y(xz)`) with
/// `[x,y] = xy - yx` and `{x,y,z} = -(xy)z`.
pub fn from_leibniz(prod: &[Entry2], n: usize) -> Result<LyAlgebra, AlgebraError> {
    let p = Product::new(prod, n)?;
    if let Some(w) = first_tuple(n, 3, |t| {
        let (x, y, z) = (p.e(t[0]), p.e(t[1]), p.e(t[2]));
        let lhs = p.mul(&x, &p.mul(&y, &z));
        let mut rhs = p.mul(&p.mul(&x, &y), &z);
        for (a, b) in rhs.iter_mut().zip(p.mul(&y, &p.mul(&x, &z))) {
            *a += b;
        }
        lhs != rhs
    }) {
        return Err(AlgebraError::NotALeibnizAlgebra { witness: w });
    }
    let q = Product::new(prod, n)?;
    let tau = |i: usize, j: usize| sub(q.basis(i, j).to_vec(), q.basis(j, i));
    let omega = |i: usize, j: usize, k: usize| neg(q.mul(q.basis(i, j), &q.e(k)));
    Ok(p.into_algebra(tau, omega))
}

/// A Malcev algebra with `[x,y] = xy` and
/// `{x,y,z} = x(yz) - y(xz) + (xy)z`.
pub fn from_malcev(prod: &[Entry2], n: usize) -> Result<LyAlgebra, AlgebraError> {
    let p = Product::new(prod, n)?;
    if let Some(w) = p.antisymmetry_witness() {
        return Err(AlgebraError::NotAMalcevAlgebra { reason: "antisymmetry", witness: w });
    }
    // linearised Malcev identity J(x,y,wz) + J(w,y,xz) = J(x,y,z)w + J(w,y,z)x
    if let Some(w) = first_tuple(n, 4, |t| {
        let (x, y, z, w) = (p.e(t[0]), p.e(t[1]), p.e(t[2]), p.e(t[3]));
        let mut lhs = p.jacobiator(&x, &y, &p.mul(&w, &z));
        for (a, b) in lhs.iter_mut().zip(p.jacobiator(&w, &y, &p.mul(&x, &z))) {
            *a += b;
        }
        let mut rhs = p.mul(&p.jacobiator(&x, &y, &z), &w);
        for (a, b) in rhs.iter_mut().zip(p.mul(&p.jacobiator(&w, &y, &z), &x)) {
            *a += b;
        }
        lhs != rhs
    }) {
        return Err(AlgebraError::NotAMalcevAlgebra { reason: "Malcev identity", witness: w });
    }
    let q = Product::new(prod, n)?;
    let tau = |i: usize, j: usize| q.basis(i, j).to_vec();
    let omega = |i: usize, j: usize, k: usize| {
        let mut v = q.mul(&q.e(i), q.basis(j, k));
        v = sub(v, &q.mul(&q.e(j), q.basis(i, k)));
        for (a, b) in v.iter_mut().zip(q.mul(q.basis(i, j), &q.e(k))) {
            *a += b;
        }
        v
    };
    Ok(p.into_algebra(tau, omega))
}

fn heisenberg_base(n: usize) -> Result<LyAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDimension);
    }
    let mut l = LyAlgebra::new(2 * n + 1)?;
    for i in 1..=n {
        l.set_tau(i, n + i, 0, int(1))?;
        l.set_tau(n + i, i, 0, int(-1))?;
        l.set_omega(i, n + i, i, 0, int(1))?;
        l.set_omega(n + i, i, n + i, 0, int(-1))?;
    }
    let labels = (0..=2 * n).map(|i| format!("e{i}")).collect();
    l.with_labels(labels)
}

/// The Heisenberg Lie-Yamaguti algebra on `e_0, …, e_{2n}` (stored at
/// indices `0..=2n`): `[e_i, e_{n+i}] = e_0` and
/// `{x, y, z} = Σ_i (x_i y_{n+i} - x_{n+i} y_i)(z_i + z_{n+i}) e_0`.
pub fn heisenberg(n: usize) -> Result<LyAlgebra, AlgebraError> {
    let mut l = heisenberg_base(n)?;
    for i in 1..=n {
        l.set_omega(n + i, i, i, 0, int(-1))?;
        l.set_omega(i, n + i, n + i, 0, int(1))?;
    }
    Ok(l)
}

/// Only the four families `τ_{i,n+i}^0 = 1`, `τ_{n+i,i}^0 = -1`,
/// `ω_{i,n+i,i}^0 = 1`, `ω_{n+i,i,n+i}^0 = -1`, without the partners that
/// antisymmetry of the ternary bracket requires. Fails LY2.
pub fn heisenberg_unsymmetrized(n: usize) -> Result<LyAlgebra, AlgebraError> {
    heisenberg_base(n)
}

/// `L ⊗ A` with basis `e_i ⊗ a_p` at index `i * dim A + p`.
pub fn current_algebra(l: &LyAlgebra, a: &CommAlgebra) -> Result<LyAlgebra, AlgebraError> {
    a.validate()?;
    let (n, m) = (l.dim(), a.dim());
    let mut out = LyAlgebra::new(n * m)?;
    let idx = |i: usize, p: usize| i * m + p;
    for (&(i, j, s), t) in l.tau_entries() {
        for p in 0..m {
            for q in 0..m {
                for (r, c) in a.basis_product(p, q).iter().enumerate() {
                    if !c.is_zero() {
                        let key = (idx(i, p), idx(j, q), idx(s, r));
                        let v = out.tau(key.0, key.1, key.2) + t * c;
                        out.set_tau(key.0, key.1, key.2, v)?;
                    }
                }
            }
        }
    }
    let mut triple_products = Vec::with_capacity(m * m * m);
    for p in 0..m {
        for q in 0..m {
            let pq = a.basis_product(p, q).to_vec();
            for r in 0..m {
                triple_products.push(a.mul(&pq, &super::unit_vector(m, r)));
            }
        }
    }
    for (&(i, j, k, s), w) in l.omega_entries() {
        for p in 0..m {
            for q in 0..m {
                for r in 0..m {
                    for (t, c) in triple_products[(p * m + q) * m + r].iter().enumerate() {
                        if !c.is_zero() {
                            let key = (idx(i, p), idx(j, q), idx(k, r), idx(s, t));
                            let v = out.omega(key.0, key.1, key.2, key.3) + w * c;
                            out.set_omega(key.0, key.1, key.2, key.3, v)?;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Row-reduced basis (one row per basis vector) of `[L,L] + {L,L,L}`.
pub fn derived_subalgebra(l: &LyAlgebra) -> Matrix {
    let n = l.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let t = l.dense();
    for i in 0..n {
        for j in 0..n {
            rows.push(t.bracket(i, j).to_vec());
            for k in 0..n {
                rows.push(t.triple(i, j, k).to_vec());
            }
        }
    }
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    if rows.is_empty() {
        return Matrix::zeros(0, n);
    }
    Matrix::from_rows(rows).row_space_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_lya;

    fn sl2() -> Vec<Entry2> {
        // h = 0, e = 1, f = 2
        vec![
            (0, 1, 1, int(2)),
            (1, 0, 1, int(-2)),
            (0, 2, 2, int(-2)),
            (2, 0, 2, int(2)),
            (1, 2, 0, int(1)),
            (2, 1, 0, int(-1)),
        ]
    }

    #[test]
    fn heisenberg_one_constants() {
        let h = heisenberg_unsymmetrized(1).unwrap();
        assert_eq!(h.tau_entries().count(), 2);
        assert_eq!(h.omega_entries().count(), 2);
        assert_eq!(h.omega(1, 2, 1, 0), int(1));
        assert_eq!(h.omega(2, 1, 2, 0), int(-1));
        assert!(validate_lya(&heisenberg(1).unwrap()).passed());
    }

    #[test]
    fn sl2_lie_and_malcev_agree_on_tau() {
        let a = from_lie(&sl2(), 3).unwrap();
        let b = from_malcev(&sl2(), 3).unwrap();
        assert!(validate_lya(&a).passed());
        assert!(validate_lya(&b).passed());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.bracket_basis(i, j), b.bracket_basis(i, j));
            }
        }
    }

    #[test]
    fn rejects_non_jacobi() {
        let bad = vec![
            (0, 1, 0, int(1)),
            (1, 0, 0, int(-1)),
            (0, 2, 2, int(1)),
            (2, 0, 2, int(-1)),
            (1, 2, 1, int(1)),
            (2, 1, 1, int(-1)),
        ];
        assert!(matches!(from_lie(&bad, 3), Err(AlgebraError::NotALieAlgebra { reason: "Jacobi identity", .. })));
    }

    #[test]
    fn derived_ranks() {
        assert_eq!(derived_subalgebra(&LyAlgebra::abelian(3).unwrap()).rows(), 0);
        assert_eq!(derived_subalgebra(&heisenberg(2).unwrap()).rows(), 1);
        assert_eq!(derived_subalgebra(&from_lie(&sl2(), 3).unwrap()).rows(), 3);
    }
}
