//! The universal algebra `𝒜(L, K)`: generators `x[s,i]` (row `s` indexes a
//! basis of `L`, column `i` a basis of `K`) modulo the universal
//! polynomials `P` and `Q`.

mod bialgebra;
mod dump;
mod points;

pub use bialgebra::{
    bialgebra_structure, verify_coideal, verify_comodule, BialgebraPresentation, CoidealEntry, CoidealReport,
    ComoduleReport, Strategy,
};
pub use points::{
    dual_point, psi_forward, psi_inverse, tangent_space, verify_point, verify_scalar_point, AlgebraPoint, PsiTarget,
};

use num_traits::Zero;
use std::fmt;

use crate::algebra::{derived_subalgebra, LyAlgebra};
use crate::error::UniversalError;
use crate::linalg::Matrix;
use crate::poly::{Ideal, Membership, MonoOrder, Monomial, Polynomial, Role, VarSet};
use crate::scalar::Scalar;

/// Which universal polynomial a generator is; indices 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    P { a: usize, i: usize, j: usize },
    Q { a: usize, i: usize, j: usize, k: usize },
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenKind::P { a, i, j } => write!(f, "P({},{},{})", a + 1, i + 1, j + 1),
            GenKind::Q { a, i, j, k } => write!(f, "Q({},{},{},{})", a + 1, i + 1, j + 1, k + 1),
        }
    }
}

/// A labelled universal polynomial, exactly as emitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub kind: GenKind,
    pub poly: Polynomial,
}

impl Generator {
    pub fn name(&self) -> String {
        self.kind.to_string()
    }
}

/// Variable index of `x[s,i]` in an `n × m` block.
pub fn var_index(m: usize, s: usize, i: usize) -> usize {
    s * m + i
}

/// The universal polynomials, zero ones dropped, ordered by index tuple.
pub fn universal_polynomials(
    l: &LyAlgebra,
    k: &LyAlgebra,
    order: MonoOrder,
) -> (VarSet, Vec<Generator>, Vec<Generator>) {
    let (n, m) = (l.dim(), k.dim());
    let vars = VarSet::matrix(Role::Plain, n, m);
    let x = |s: usize, i: usize| var_index(m, s, i);
    let kt = k.dense();
    // τ_{st}^a grouped by a
    let mut tau_by_a: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
    for (&(s, t, a), c) in l.tau_entries() {
        tau_by_a[a].push((s, t, c.clone()));
    }
    let mut omega_by_a: Vec<Vec<(usize, usize, usize, Scalar)>> = vec![Vec::new(); n];
    for (&(r, s, t, a), c) in l.omega_entries() {
        omega_by_a[a].push((r, s, t, c.clone()));
    }

    let mut ps = Vec::new();
    for a in 0..n {
        for i in 0..m {
            for j in 0..m {
                let mut terms = Vec::new();
                for (u, c) in kt.bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((Monomial::var(x(a, u)), c.clone()));
                    }
                }
                for (s, t, c) in &tau_by_a[a] {
                    terms.push((Monomial::from_pairs(&[(x(*s, i), 1), (x(*t, j), 1)]), -c.clone()));
                }
                let poly = Polynomial::from_terms(&vars, order, terms);
                if !poly.is_zero() {
                    ps.push(Generator { kind: GenKind::P { a, i, j }, poly });
                }
            }
        }
    }
    let mut qs = Vec::new();
    for a in 0..n {
        for i in 0..m {
            for j in 0..m {
                for kk in 0..m {
                    let mut terms = Vec::new();
                    for (u, c) in kt.triple(i, j, kk).iter().enumerate() {
                        if !c.is_zero() {
                            terms.push((Monomial::var(x(a, u)), c.clone()));
                        }
                    }
                    for (r, s, t, c) in &omega_by_a[a] {
                        terms.push((Monomial::from_pairs(&[(x(*r, i), 1), (x(*s, j), 1), (x(*t, kk), 1)]), -c.clone()));
                    }
                    let poly = Polynomial::from_terms(&vars, order, terms);
                    if !poly.is_zero() {
                        qs.push(Generator { kind: GenKind::Q { a, i, j, k: kk }, poly });
                    }
                }
            }
        }
    }
    (vars, ps, qs)
}

/// `𝒜(L, K)` as a finitely presented commutative algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    l: LyAlgebra,
    k: LyAlgebra,
    vars: VarSet,
    order: MonoOrder,
    p: Vec<Generator>,
    q: Vec<Generator>,
    ideal: Ideal,
}

impl Presentation {
    pub fn new(l: &LyAlgebra, k: &LyAlgebra) -> Self {
        Self::with_order(l, k, MonoOrder::default())
    }

    pub fn with_order(l: &LyAlgebra, k: &LyAlgebra, order: MonoOrder) -> Self {
        let (vars, p, q) = universal_polynomials(l, k, order);
        // canonical ideal generators: monic, duplicates removed, first occurrence kept
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in p.iter().chain(&q) {
            let monic = g.poly.monic();
            if !gens.contains(&monic) {
                gens.push(monic);
            }
        }
        let ideal = Ideal::new(&vars, gens).expect("same variable set");
        Presentation { l: l.clone(), k: k.clone(), vars, order, p, q, ideal }
    }

    pub fn l(&self) -> &LyAlgebra {
        &self.l
    }

    pub fn k(&self) -> &LyAlgebra {
        &self.k
    }

    /// `(dim L, dim K)`
    pub fn dims(&self) -> (usize, usize) {
        (self.l.dim(), self.k.dim())
    }

    pub fn is_square(&self) -> bool {
        self.l.dim() == self.k.dim()
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn order(&self) -> MonoOrder {
        self.order
    }

    pub fn p_generators(&self) -> &[Generator] {
        &self.p
    }

    pub fn q_generators(&self) -> &[Generator] {
        &self.q
    }

    /// All `P` then all `Q`, as emitted.
    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.p.iter().chain(&self.q)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// `x[s,i]` as a polynomial.
    pub fn x(&self, s: usize, i: usize) -> Polynomial {
        Polynomial::var(&self.vars, self.order, var_index(self.k.dim(), s, i))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.vars, self.order)
    }

    pub fn default_cap(&self) -> u32 {
        self.ideal.default_cap()
    }
}

/// `[Σ e_s⊗p_s, Σ e_t⊗q_t]` in `L ⊗ R` for a polynomial ring `R`.
pub fn bracket_tensor(l: &LyAlgebra, p: &[Polynomial], q: &[Polynomial], zero: &Polynomial) -> Vec<Polynomial> {
    let mut out = vec![zero.clone(); l.dim()];
    for (&(s, t, a), c) in l.tau_entries() {
        if p[s].is_zero() || q[t].is_zero() {
            continue;
        }
        out[a] = out[a].add(&p[s].mul(&q[t]).scale(c));
    }
    out
}

/// `{Σ e_r⊗p_r, Σ e_s⊗q_s, Σ e_t⊗w_t}` in `L ⊗ R`.
pub fn triple_tensor(
    l: &LyAlgebra,
    p: &[Polynomial],
    q: &[Polynomial],
    w: &[Polynomial],
    zero: &Polynomial,
) -> Vec<Polynomial> {
    let mut out = vec![zero.clone(); l.dim()];
    for (&(r, s, t, a), c) in l.omega_entries() {
        if p[r].is_zero() || q[s].is_zero() || w[t].is_zero() {
            continue;
        }
        out[a] = out[a].add(&p[r].mul(&q[s]).mul(&w[t]).scale(c));
    }
    out
}

/// One coefficient of the morphism defect of `Φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiDefect {
    /// `("binary", [a,i,j])` or `("ternary", [a,i,j,k])`, 0-based
    pub bracket: &'static str,
    pub index: Vec<usize>,
    /// coefficient of `e_a` in `[Φf_i, Φf_j] - Φ[f_i, f_j]` (or ternary)
    pub defect: Polynomial,
    pub membership: Membership,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub defects: Vec<PhiDefect>,
}

impl PhiReport {
    pub fn certified(&self) -> bool {
        self.defects.iter().all(|d| d.membership == Membership::Yes)
    }

    pub fn unknown(&self) -> usize {
        self.defects.iter().filter(|d| d.membership == Membership::Unknown).count()
    }
}

/// `Φ(f_i) = Σ_s e_s ⊗ x[s,i]`, as the coefficient list of each `f_i`.
pub fn phi_map(pres: &Presentation) -> Vec<Vec<Polynomial>> {
    let (n, m) = pres.dims();
    (0..m).map(|i| (0..n).map(|s| pres.x(s, i)).collect()).collect()
}

/// Computes every defect coefficient of `Φ` and checks it lies in the ideal.
/// Identically zero defects are omitted.
pub fn verify_phi(pres: &Presentation, cap: u32) -> PhiReport {
    let (n, m) = pres.dims();
    let phi = phi_map(pres);
    let zero = pres.zero();
    let kt = pres.k().dense();
    let image = |v: &[Scalar]| -> Vec<Polynomial> {
        let mut out = vec![zero.clone(); n];
        for (u, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&phi[u]) {
                *o = o.add(&p.scale(c));
            }
        }
        out
    };
    let mut defects = Vec::new();
    let mut record = |bracket: &'static str, idx: Vec<usize>, lhs: Vec<Polynomial>, rhs: Vec<Polynomial>| {
        for (a, (x, y)) in lhs.into_iter().zip(rhs).enumerate() {
            let d = x.sub(&y);
            if d.is_zero() {
                continue;
            }
            let membership = pres.ideal().contains(&d, cap).unwrap_or(Membership::Unknown);
            let mut index = vec![a];
            index.extend(&idx);
            defects.push(PhiDefect { bracket, index, defect: d, membership });
        }
    };
    for i in 0..m {
        for j in 0..m {
            let lhs = bracket_tensor(pres.l(), &phi[i], &phi[j], &zero);
            record("binary", vec![i, j], lhs, image(kt.bracket(i, j)));
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let lhs = triple_tensor(pres.l(), &phi[i], &phi[j], &phi[k], &zero);
                record("ternary", vec![i, j, k], lhs, image(kt.triple(i, j, k)));
            }
        }
    }
    defects.sort_by(|a, b| (a.bracket != "binary", &a.index).cmp(&(b.bracket != "binary", &b.index)));
    PhiReport { defects }
}

/// Outcome of comparing `𝒜(𝕂, L)` with the symmetric algebra of `L/L'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricQuotientReport {
    /// rank of the span of the linear generators
    pub generator_rank: usize,
    pub derived_rank: usize,
    /// number of free variables of the quotient
    pub free_variables: usize,
    /// invertible `n × n` matrix; its first `generator_rank` rows are the
    /// reduced linear generators, so `Y = C·X` splits off a free part
    pub change_of_basis: Matrix,
}

impl SymmetricQuotientReport {
    pub fn agrees(&self) -> bool {
        self.generator_rank == self.derived_rank
    }
}

pub fn check_symmetric_quotient(l: &LyAlgebra) -> SymmetricQuotientReport {
    let n = l.dim();
    let field = LyAlgebra::abelian(1).expect("dimension 1");
    let pres = Presentation::new(&field, l);
    let rows: Vec<Vec<Scalar>> = pres
        .generators()
        .map(|g| {
            let mut v = vec![Scalar::zero(); n];
            for (mono, c) in g.poly.terms() {
                let (var, e) = mono.exponents().next().expect("linear generator");
                debug_assert_eq!((mono.degree(), e), (1, 1));
                v[var] = c.clone();
            }
            v
        })
        .collect();
    let reduced = if rows.is_empty() { Matrix::zeros(0, n) } else { Matrix::from_rows(rows).row_space_basis() };
    let r = reduced.rows();
    let (_, pivots) = if r == 0 { (reduced.clone(), Vec::new()) } else { reduced.rref() };
    let mut all = reduced.to_rows();
    for c in (0..n).filter(|c| !pivots.contains(c)) {
        let mut e = vec![Scalar::zero(); n];
        e[c] = num_traits::One::one();
        all.push(e);
    }
    SymmetricQuotientReport {
        generator_rank: r,
        derived_rank: derived_subalgebra(l).rows(),
        free_variables: n - r,
        change_of_basis: Matrix::from_rows(all),
    }
}

/// Propagates an unknown membership answer as an error.
pub fn require_certified(report: &PhiReport, cap: u32) -> Result<(), UniversalError> {
    match report.defects.iter().find(|d| d.membership != Membership::Yes) {
        None => Ok(()),
        Some(d) => Err(UniversalError::MembershipUnknown { generator: format!("{} {:?}", d.bracket, d.index), cap }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{heisenberg, sl2};

    #[test]
    fn heisenberg_p_generators() {
        let h = heisenberg(1).unwrap();
        let pres = Presentation::new(&h, &h);
        let names: Vec<String> = pres.p_generators().iter().map(Generator::name).collect();
        assert_eq!(names.len(), 10);
        assert_eq!(names[3], "P(1,2,3)");
        let p = &pres.p_generators()[3].poly;
        assert_eq!(p.to_string(), "x[2,3]*x[3,2] - x[2,2]*x[3,3] + x[1,1]");
        assert_eq!(pres.p_generators()[6].poly.to_string(), "x[2,1]");
        assert_eq!(pres.q_generators().len(), 26);
    }

    #[test]
    fn phi_is_a_morphism_modulo_the_ideal() {
        for l in [heisenberg(1).unwrap(), sl2()] {
            let pres = Presentation::new(&l, &l);
            let report = verify_phi(&pres, pres.default_cap());
            assert!(report.certified());
            assert_eq!(report.unknown(), 0);
        }
    }

    #[test]
    fn coideal_and_comodule_on_heisenberg() {
        let h = heisenberg(1).unwrap();
        let pres = Presentation::new(&h, &h);
        let b = bialgebra_structure(&pres).unwrap();
        let c = verify_coideal(&b, pres.default_cap());
        assert!(c.certified(), "{c:?}");
        assert!(verify_comodule(&b).passed());
    }

    #[test]
    fn identity_is_a_point() {
        let l = sl2();
        let pres = Presentation::new(&l, &l);
        assert!(verify_scalar_point(&pres, &Matrix::identity(3)).is_ok());
        assert!(matches!(
            verify_scalar_point(&pres, &Matrix::identity(3).scale(&Scalar::from_integer(2.into()))),
            Err(UniversalError::UnverifiedPoint { .. })
        ));
    }

    #[test]
    fn symmetric_quotient_ranks() {
        assert_eq!(check_symmetric_quotient(&LyAlgebra::abelian(2).unwrap()).generator_rank, 0);
        assert_eq!(check_symmetric_quotient(&heisenberg(2).unwrap()).generator_rank, 1);
        let r = check_symmetric_quotient(&sl2());
        assert!(r.agrees());
        assert_eq!(r.generator_rank, 3);
    }
}
