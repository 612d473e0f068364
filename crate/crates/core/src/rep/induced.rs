use super::LyModule;
use crate::algebra::CommAlgebra;
use crate::error::RepError;
use crate::linalg::Matrix;
use crate::poly::MatrixAlgebra;
use crate::universal::{var_index, AlgebraPoint, Presentation};

/// An action of `𝒜(L, K)` on `𝕂^wdim`: one matrix per generator `x[s,i]`,
/// pairwise commuting and killing every `P` and `Q`.
#[derive(Clone, Debug)]
pub struct MatrixPoint {
    pres: Presentation,
    wdim: usize,
    images: Vec<Matrix>,
}

impl MatrixPoint {
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn wdim(&self) -> usize {
        self.wdim
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    /// The matrix of `x[s,i]`.
    pub fn x(&self, s: usize, i: usize) -> &Matrix {
        &self.images[var_index(self.pres.dims().1, s, i)]
    }

    /// The regular representation of an algebra point: `x[s,i]` acts on the
    /// target algebra by multiplication with its image.
    pub fn regular(pres: &Presentation, point: &AlgebraPoint) -> Result<MatrixPoint, RepError> {
        let a = point.target();
        let images = point.images().iter().map(|v| multiplication_matrix(a, v)).collect();
        verify_matrix_point(pres, images)
    }
}

/// Matrix of `b ↦ v·b` on `A`.
pub fn multiplication_matrix(a: &CommAlgebra, v: &[crate::Scalar]) -> Matrix {
    let d = a.dim();
    let cols: Vec<Vec<crate::Scalar>> = (0..d).map(|j| a.mul(v, &crate::algebra::unit_vector(d, j))).collect();
    Matrix::from_fn(d, d, |r, c| cols[c][r].clone())
}

pub fn verify_matrix_point(pres: &Presentation, images: Vec<Matrix>) -> Result<MatrixPoint, RepError> {
    let nv = pres.vars().len();
    if images.len() != nv {
        return Err(RepError::DimensionMismatch { what: "matrix point images", expected: nv, found: images.len() });
    }
    let wdim = images[0].rows();
    if wdim == 0 {
        return Err(RepError::DimensionMismatch { what: "matrix point dimension", expected: 1, found: 0 });
    }
    for m in &images {
        super::check_square("matrix point image", m, wdim)?;
    }
    let vars = pres.vars();
    for a in 0..nv {
        for b in a + 1..nv {
            if !images[a].commutator(&images[b]).is_zero() {
                return Err(RepError::NonCommutingImages {
                    first: vars.get(a).to_string(),
                    second: vars.get(b).to_string(),
                });
            }
        }
    }
    let alg = MatrixAlgebra { n: wdim };
    for g in pres.generators() {
        if !g.poly.eval(&alg, &images).is_zero() {
            return Err(RepError::RelationViolated { generator: g.name() });
        }
    }
    Ok(MatrixPoint { pres: pres.clone(), wdim, images })
}

/// The `K`-module on `U ⊗ W` (basis `u_t ⊗ w_q` at `t·wdim + q`):
/// `ρ(f_p) = Σ_i ρ(e_i) ⊗ X[i,p]`,
/// `D(f_p,f_q) = Σ_{i,j} D(e_i,e_j) ⊗ X[i,p]X[j,q]`, and `θ` likewise.
pub fn induced_module(u: &LyModule, w: &MatrixPoint) -> Result<LyModule, RepError> {
    let pres = &w.pres;
    if u.over() != pres.l() {
        return Err(RepError::Incompatible("module is not over the presentation's L"));
    }
    let (n, m) = pres.dims();
    let dim = u.dim() * w.wdim;
    let k = pres.k();
    let mut out = LyModule::zero(k, dim);
    for p in 0..m {
        let mut acc = Matrix::zeros(dim, dim);
        for i in 0..n {
            if !u.rho(i).is_zero() {
                acc = &acc + &u.rho(i).kron(w.x(i, p));
            }
        }
        out.rho[p] = acc;
    }
    for p in 0..m {
        for q in 0..m {
            let mut d = Matrix::zeros(dim, dim);
            let mut th = Matrix::zeros(dim, dim);
            for i in 0..n {
                for j in 0..n {
                    let (ud, ut) = (u.d(i, j), u.theta(i, j));
                    if ud.is_zero() && ut.is_zero() {
                        continue;
                    }
                    let xx = w.x(i, p) * w.x(j, q);
                    if !ud.is_zero() {
                        d = &d + &ud.kron(&xx);
                    }
                    if !ut.is_zero() {
                        th = &th + &ut.kron(&xx);
                    }
                }
            }
            out.d[p * m + q] = d;
            out.theta[p * m + q] = th;
        }
    }
    Ok(out)
}

/// `g X[s,i] = X'[s,i] g` for every generator; `g` is `wdim' × wdim`.
pub fn intertwines(w: &MatrixPoint, w2: &MatrixPoint, g: &Matrix) -> bool {
    g.rows() == w2.wdim && g.cols() == w.wdim && w.images.iter().zip(&w2.images).all(|(a, b)| (g * a) == (b * g))
}
