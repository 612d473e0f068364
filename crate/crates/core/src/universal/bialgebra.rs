//! `Δ(x[i,j]) = Σ_s x[i,s] ⊗ x[s,j]`, `ε(x[i,j]) = δ_ij` on the square
//! universal algebra, and the checks that they descend to the quotient.

use num_traits::{One, Zero};
use std::collections::HashMap;

use super::{var_index, GenKind, Presentation};
use crate::error::UniversalError;
use crate::poly::{EvalAlgebra, Membership, Monomial, PolyAlgebra, Polynomial, Rationals, Role, Var, VarSet};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct BialgebraPresentation {
    pres: Presentation,
    doubled: VarSet,
    delta_images: Vec<Polynomial>,
}

pub fn bialgebra_structure(pres: &Presentation) -> Result<BialgebraPresentation, UniversalError> {
    if !pres.is_square() {
        return Err(UniversalError::NotSquare);
    }
    let n = pres.dims().0;
    let doubled = VarSet::matrix(Role::Left, n, n).concat(&VarSet::matrix(Role::Right, n, n));
    let order = pres.order();
    let mut delta_images = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let terms = (0..n)
                .map(|s| {
                    (Monomial::from_pairs(&[(var_index(n, i, s), 1), (n * n + var_index(n, s, j), 1)]), Scalar::one())
                })
                .collect();
            delta_images.push(Polynomial::from_terms(&doubled, order, terms));
        }
    }
    Ok(BialgebraPresentation { pres: pres.clone(), doubled, delta_images })
}

impl BialgebraPresentation {
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn dim(&self) -> usize {
        self.pres.dims().0
    }

    /// Variables of `𝒜 ⊗ 𝒜`: `xL[..]` then `xR[..]`.
    pub fn doubled_vars(&self) -> &VarSet {
        &self.doubled
    }

    /// The formal sum `Δ(x[i,j])` as pairs `(x[i,s], x[s,j])`.
    pub fn delta_terms(&self, i: usize, j: usize) -> Vec<(Var, Var)> {
        (0..self.dim()).map(|s| (Var::plain(i, s), Var::plain(s, j))).collect()
    }

    /// `Δ(x[i,j])` in the doubled ring.
    pub fn delta_image(&self, i: usize, j: usize) -> &Polynomial {
        &self.delta_images[var_index(self.dim(), i, j)]
    }

    pub fn epsilon(&self, i: usize, j: usize) -> Scalar {
        if i == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    /// `Δ(p)`, extended multiplicatively.
    pub fn delta(&self, p: &Polynomial) -> Polynomial {
        let ring = PolyAlgebra { vars: self.doubled.clone(), order: p.order() };
        let images: Vec<Polynomial> = self.delta_images.iter().map(|d| d.with_order(p.order())).collect();
        p.substitute(&ring, &images)
    }

    /// `ε(p)`.
    pub fn counit(&self, p: &Polynomial) -> Scalar {
        let n = self.dim();
        let values: Vec<Scalar> = (0..n * n).map(|k| self.epsilon(k / n, k % n)).collect();
        p.eval(&Rationals, &values)
    }

    /// `p ⊗ 1`
    pub fn left(&self, p: &Polynomial) -> Polynomial {
        p.rename(&self.doubled, |v| v)
    }

    /// `1 ⊗ p`
    pub fn right(&self, p: &Polynomial) -> Polynomial {
        let nn = self.dim() * self.dim();
        p.rename(&self.doubled, |v| v + nn)
    }
}

/// How a coideal entry was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// division by the images of the generators in `J⊗1 + 1⊗J`
    GeneratorReduction,
    /// the explicit combination `Σ_v x[a,v] ⊗ g_v + Σ g_(a,..) ⊗ x·x(·x)`, checked exactly
    Cofactors,
    /// division by a (capped) Gröbner basis of `J` lifted to both legs
    Groebner,
    None,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::GeneratorReduction => "generator-reduction",
            Strategy::Cofactors => "cofactors",
            Strategy::Groebner => "groebner",
            Strategy::None => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealEntry {
    pub generator: String,
    pub counit_zero: bool,
    pub membership: Membership,
    pub strategy: Strategy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealReport {
    pub degree_cap: u32,
    pub entries: Vec<CoidealEntry>,
}

impl CoidealReport {
    pub fn certified(&self) -> bool {
        self.entries.iter().all(|e| e.counit_zero && e.membership == Membership::Yes)
    }

    pub fn unknown(&self) -> usize {
        self.entries.iter().filter(|e| e.membership == Membership::Unknown).count()
    }
}

/// For each generator `g`: `ε(g) = 0` exactly and `Δ(g) ∈ J⊗𝒜 + 𝒜⊗J`.
pub fn verify_coideal(b: &BialgebraPresentation, cap: u32) -> CoidealReport {
    let pres = b.presentation();
    let order = pres.order();
    let images: Vec<Polynomial> = pres.ideal().generators().iter().flat_map(|g| [b.left(g), b.right(g)]).collect();
    let by_kind: HashMap<GenKind, &Polynomial> = pres.generators().map(|g| (g.kind, &g.poly)).collect();
    let zero = Polynomial::zero(b.doubled_vars(), order);
    let raw = |k: GenKind| by_kind.get(&k).map_or_else(|| zero.clone(), |p| (*p).clone());
    let ring = PolyAlgebra { vars: b.doubled_vars().clone(), order };
    let lifted_gb: std::cell::OnceCell<(Vec<Polynomial>, bool)> = std::cell::OnceCell::new();

    let mut entries = Vec::new();
    for g in pres.generators() {
        let counit_zero = b.counit(&g.poly).is_zero();
        let d = b.delta(&g.poly);
        let mut strategy = Strategy::None;
        let mut membership = Membership::Unknown;
        if d.is_zero() || crate::poly::normal_form(&d, &images).map(|r| r.is_zero()).unwrap_or(false) {
            strategy = Strategy::GeneratorReduction;
            membership = Membership::Yes;
        } else if cofactor_sum(b, g.kind, &raw, &ring) == d {
            strategy = Strategy::Cofactors;
            membership = Membership::Yes;
        } else {
            let (basis, complete) = lifted_gb.get_or_init(|| {
                let gb = pres.ideal().groebner(order, cap);
                (gb.basis.iter().flat_map(|h| [b.left(h), b.right(h)]).collect(), gb.complete)
            });
            let r = crate::poly::normal_form(&d, basis).expect("same ring");
            if r.is_zero() {
                strategy = Strategy::Groebner;
                membership = Membership::Yes;
            } else if *complete {
                membership = Membership::No;
            }
        }
        entries.push(CoidealEntry { generator: g.name(), counit_zero, membership, strategy });
    }
    CoidealReport { degree_cap: cap, entries }
}

/// `Σ_v (x[a,v] ⊗ 1)(1 ⊗ g_(v,…)) + Σ (g_(a,p,q,…) ⊗ 1)(1 ⊗ x[p,i] x[q,j] …)`.
fn cofactor_sum(
    b: &BialgebraPresentation,
    kind: GenKind,
    raw: &dyn Fn(GenKind) -> Polynomial,
    ring: &PolyAlgebra,
) -> Polynomial {
    let n = b.dim();
    let pres = b.presentation();
    let x = |s: usize, i: usize| pres.x(s, i);
    let mut out = ring.zero();
    match kind {
        GenKind::P { a, i, j } => {
            for v in 0..n {
                let g = raw(GenKind::P { a: v, i, j });
                if !g.is_zero() {
                    out = out.add(&b.left(&x(a, v)).mul(&b.right(&g)));
                }
            }
            for p in 0..n {
                for q in 0..n {
                    let g = raw(GenKind::P { a, i: p, j: q });
                    if !g.is_zero() {
                        out = out.add(&b.left(&g).mul(&b.right(&x(p, i).mul(&x(q, j)))));
                    }
                }
            }
        }
        GenKind::Q { a, i, j, k } => {
            for v in 0..n {
                let g = raw(GenKind::Q { a: v, i, j, k });
                if !g.is_zero() {
                    out = out.add(&b.left(&x(a, v)).mul(&b.right(&g)));
                }
            }
            for p in 0..n {
                for q in 0..n {
                    for r in 0..n {
                        let g = raw(GenKind::Q { a, i: p, j: q, k: r });
                        if !g.is_zero() {
                            let m = x(p, i).mul(&x(q, j)).mul(&x(r, k));
                            out = out.add(&b.left(&g).mul(&b.right(&m)));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Both comodule identities for `Φ`, computed along independent paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleReport {
    pub coassociative: bool,
    pub counit: bool,
    /// `(id ⊗ Δ)Φ(e_i)`, coefficient of `e_s` at `[i][s]`
    pub lhs: Vec<Vec<Polynomial>>,
    /// `(Φ ⊗ id)Φ(e_i)`
    pub rhs: Vec<Vec<Polynomial>>,
}

impl ComoduleReport {
    pub fn passed(&self) -> bool {
        self.coassociative && self.counit
    }

    /// Canonical text of both sides, one line per `(i, s)`.
    pub fn dump_sides(&self) -> (String, String) {
        let dump = |side: &Vec<Vec<Polynomial>>| {
            let mut out = String::new();
            for (i, row) in side.iter().enumerate() {
                for (s, p) in row.iter().enumerate() {
                    out.push_str(&format!("e{} -> e{} ⊗ {}\n", i + 1, s + 1, p));
                }
            }
            out
        };
        (dump(&self.lhs), dump(&self.rhs))
    }
}

pub fn verify_comodule(b: &BialgebraPresentation) -> ComoduleReport {
    let n = b.dim();
    let pres = b.presentation();
    let order = pres.order();
    let nn = n * n;
    let lhs: Vec<Vec<Polynomial>> = (0..n).map(|i| (0..n).map(|s| b.delta(&pres.x(s, i))).collect()).collect();
    let rhs: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|s| {
                    // Φ(e_i) = Σ_t e_t ⊗ x[t,i], then Φ(e_t) = Σ_s e_s ⊗ x[s,t]
                    let terms = (0..n)
                        .map(|t| {
                            (
                                Monomial::from_pairs(&[(var_index(n, s, t), 1), (nn + var_index(n, t, i), 1)]),
                                Scalar::one(),
                            )
                        })
                        .collect();
                    Polynomial::from_terms(b.doubled_vars(), order, terms)
                })
                .collect()
        })
        .collect();
    let counit = (0..n).all(|i| (0..n).all(|s| b.counit(&pres.x(s, i)) == b.epsilon(i, s)));
    ComoduleReport { coassociative: lhs == rhs, counit, lhs, rhs }
}
