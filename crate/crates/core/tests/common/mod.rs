#![allow(dead_code, clippy::needless_range_loop, clippy::type_complexity)]

use lya_core::algebra::{from_lie, LyAlgebra};
use lya_core::linalg::Matrix;
use lya_core::poly::{MonoOrder, Monomial, Polynomial, VarSet};
use lya_core::scalar::{frac, int};
use lya_core::Scalar;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(r: &mut impl Rng, lo: i64, hi: i64) -> Scalar {
    int(r.gen_range(lo..=hi))
}

pub fn small_frac(r: &mut impl Rng) -> Scalar {
    frac(r.gen_range(-4..=4), r.gen_range(1..=3))
}

pub fn random_matrix(r: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small(r, lo, hi))
}

pub fn random_invertible(r: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Matrix {
    loop {
        let m = random_matrix(r, n, n, lo, hi);
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

pub fn naive_mul(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows(), b.cols(), |i, j| (0..a.cols()).map(|k| &a[(i, k)] * &b[(k, j)]).sum())
}

// Dense brackets straight from the accessors.
pub struct Dense {
    pub n: usize,
    tau: Vec<Scalar>,
    omega: Vec<Scalar>,
}

impl Dense {
    pub fn new(l: &LyAlgebra) -> Self {
        let n = l.dim();
        let mut tau = vec![Scalar::zero(); n * n * n];
        let mut omega = vec![Scalar::zero(); n * n * n * n];
        for i in 0..n {
            for j in 0..n {
                for s in 0..n {
                    tau[(i * n + j) * n + s] = l.tau(i, j, s);
                    for k in 0..n {
                        omega[((i * n + j) * n + k) * n + s] = l.omega(i, j, k, s);
                    }
                }
            }
        }
        Dense { n, tau, omega }
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let c = &x[i] * &y[j];
                if c.is_zero() {
                    continue;
                }
                for s in 0..n {
                    out[s] += &c * &self.tau[(i * n + j) * n + s];
                }
            }
        }
        out
    }

    pub fn tr(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &x[i] * &y[j] * &z[k];
                    if c.is_zero() {
                        continue;
                    }
                    for s in 0..n {
                        out[s] += &c * &self.omega[((i * n + j) * n + k) * n + s];
                    }
                }
            }
        }
        out
    }

    pub fn e(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.n];
        v[i] = int(1);
        v
    }
}

fn add(parts: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        for (a, b) in out.iter_mut().zip(p) {
            *a += b;
        }
    }
    out
}

fn neg(v: Vec<Scalar>) -> Vec<Scalar> {
    v.into_iter().map(|c| -c).collect()
}

fn nonzero(v: &[Scalar]) -> bool {
    v.iter().any(|c| !c.is_zero())
}

fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|t| (0..n).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

/// Lex-first failing tuple for each of LY1..LY6.
pub fn axiom_witnesses(l: &LyAlgebra) -> Vec<Option<Vec<usize>>> {
    let d = Dense::new(l);
    let n = d.n;
    let e = |i: usize| d.e(i);
    let ly1 = |t: &[usize]| nonzero(&add(&[d.br(&e(t[0]), &e(t[1])), d.br(&e(t[1]), &e(t[0]))]));
    let ly2 = |t: &[usize]| nonzero(&add(&[d.tr(&e(t[0]), &e(t[1]), &e(t[2])), d.tr(&e(t[1]), &e(t[0]), &e(t[2]))]));
    let ly3 = |t: &[usize]| {
        let (a, b, c) = (e(t[0]), e(t[1]), e(t[2]));
        let mut parts = Vec::new();
        for (x, y, z) in [(&a, &b, &c), (&b, &c, &a), (&c, &a, &b)] {
            parts.push(d.br(&d.br(x, y), z));
            parts.push(d.tr(x, y, z));
        }
        nonzero(&add(&parts))
    };
    let ly4 = |t: &[usize]| {
        let (a, b, c, w) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]));
        let parts: Vec<Vec<Scalar>> =
            [(&a, &b, &c), (&b, &c, &a), (&c, &a, &b)].iter().map(|(x, y, z)| d.tr(&d.br(x, y), z, &w)).collect();
        nonzero(&add(&parts))
    };
    let ly5 = |t: &[usize]| {
        let (a, b, c, w) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]));
        let lhs = d.tr(&a, &b, &d.br(&c, &w));
        let r1 = d.br(&d.tr(&a, &b, &c), &w);
        let r2 = d.br(&c, &d.tr(&a, &b, &w));
        nonzero(&add(&[lhs, neg(r1), neg(r2)]))
    };
    let ly6 = |t: &[usize]| {
        let (a, b, c, w, z) = (e(t[0]), e(t[1]), e(t[2]), e(t[3]), e(t[4]));
        let lhs = d.tr(&a, &b, &d.tr(&c, &w, &z));
        let r1 = d.tr(&d.tr(&a, &b, &c), &w, &z);
        let r2 = d.tr(&c, &d.tr(&a, &b, &w), &z);
        let r3 = d.tr(&c, &w, &d.tr(&a, &b, &z));
        nonzero(&add(&[lhs, neg(r1), neg(r2), neg(r3)]))
    };
    let checks: [(usize, &dyn Fn(&[usize]) -> bool); 6] =
        [(2, &ly1), (3, &ly2), (3, &ly3), (4, &ly4), (4, &ly5), (5, &ly6)];
    checks.iter().map(|(k, f)| tuples(n, *k).into_iter().find(|t| f(t))).collect()
}

/// Brackets of a Lie algebra after the change of basis `p` (columns are
/// the new basis vectors in old coordinates).
pub fn transport_lie(
    bracket: &[(usize, usize, usize, Scalar)],
    n: usize,
    p: &Matrix,
) -> Vec<(usize, usize, usize, Scalar)> {
    let pinv = p.inverse().expect("invertible");
    let mut tab = vec![vec![Scalar::zero(); n]; n * n];
    for (i, j, s, c) in bracket {
        tab[i * n + j][*s] += c;
    }
    let br = |x: &[Scalar], y: &[Scalar]| {
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let c = &x[i] * &y[j];
                if !c.is_zero() {
                    for s in 0..n {
                        out[s] += &c * &tab[i * n + j][s];
                    }
                }
            }
        }
        out
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = br(&p.column(i), &p.column(j));
            for (s, c) in pinv.apply(&v).into_iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, s, c));
                }
            }
        }
    }
    out
}

/// A random Lie algebra of dimension 1..=3: a known family, possibly
/// with a random parameter, in a random basis.
pub fn random_lie(r: &mut impl Rng) -> LyAlgebra {
    let c = |v: i64| int(v);
    let pick = r.gen_range(0..6);
    let (n, base): (usize, Vec<(usize, usize, usize, Scalar)>) = match pick {
        0 => (r.gen_range(1..=3), vec![]),
        1 => (2, vec![(0, 1, 1, c(1)), (1, 0, 1, c(-1))]),
        2 => (3, vec![(0, 1, 2, c(1)), (1, 0, 2, c(-1))]),
        3 => {
            let a = small(r, -3, 3);
            (3, vec![(0, 1, 1, c(1)), (1, 0, 1, c(-1)), (0, 2, 2, a.clone()), (2, 0, 2, -a)])
        }
        4 => (
            3,
            vec![
                (0, 1, 1, c(2)),
                (1, 0, 1, c(-2)),
                (0, 2, 2, c(-2)),
                (2, 0, 2, c(2)),
                (1, 2, 0, c(1)),
                (2, 1, 0, c(-1)),
            ],
        ),
        _ => (
            3,
            vec![
                (0, 1, 2, c(1)),
                (1, 0, 2, c(-1)),
                (1, 2, 0, c(1)),
                (2, 1, 0, c(-1)),
                (2, 0, 1, c(1)),
                (0, 2, 1, c(-1)),
            ],
        ),
    };
    let p = random_invertible(r, n, -2, 2);
    from_lie(&transport_lie(&base, n, &p), n).expect("transported Lie bracket")
}

/// `Σ c · Π x_v` over an explicit variable set.
pub fn poly(vars: &VarSet, terms: &[(i64, &[usize])]) -> Polynomial {
    let t = terms
        .iter()
        .map(|(c, vs)| {
            let mut m = Monomial::one();
            for &v in vs.iter() {
                m = m.mul(&Monomial::var(v));
            }
            (m, int(*c))
        })
        .collect();
    Polynomial::from_terms(vars, MonoOrder::DegRevLex, t)
}
