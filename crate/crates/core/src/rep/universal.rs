use num_traits::Zero;
use std::fmt;

use super::{induced_module, module_morphism_defect, validate_module, LyModule, MatrixPoint};
use crate::error::RepError;
use crate::linalg::Matrix;
use crate::poly::{format_polynomial, MatrixAlgebra, Polynomial};
use crate::scalar::Scalar;
use crate::universal::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Rho,
    D,
    Theta,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Rho => "rho",
            Family::D => "D",
            Family::Theta => "theta",
        }
    }
}

/// `Σ coefficient · Y[t,r]`, terms sorted by `(t, r)`, no zero
/// coefficients. `index` is `(p, i, r)` or `(p, i, j, r)`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub family: Family,
    pub index: Vec<usize>,
    pub terms: Vec<((usize, usize), Polynomial)>,
}

impl Relation {
    pub fn label(&self) -> String {
        let idx: Vec<String> = self.index.iter().map(|k| (k + 1).to_string()).collect();
        format!("{}({})", self.family.name(), idx.join(","))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.label())?;
        for (k, ((t, r), c)) in self.terms.iter().enumerate() {
            let y = format!("Y[{},{}]", t + 1, r + 1);
            let text = format_polynomial(c);
            let (neg, body) = match text.as_str() {
                _ if c.len() > 1 => (false, format!("({text}) * {y}")),
                "1" => (false, y),
                "-1" => (true, y),
                t if t.starts_with('-') => (true, format!("{} * {y}", &t[1..])),
                t => (false, format!("{t} * {y}")),
            };
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// `𝒰(U, V)`: the free `𝒜(L,K)`-module on `Y[s,r]` modulo `relations`.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    pres: Presentation,
    u: LyModule,
    v: LyModule,
    relations: Vec<Relation>,
}

impl ModulePresentation {
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn u(&self) -> &LyModule {
        &self.u
    }

    pub fn v(&self) -> &LyModule {
        &self.v
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Number of generators `Y[s,r]`.
    pub fn generator_count(&self) -> usize {
        self.u.dim() * self.v.dim()
    }

    /// Rank when no relation survives.
    pub fn free_rank(&self) -> Option<usize> {
        self.relations.is_empty().then(|| self.generator_count())
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        let gens: Vec<String> =
            (0..self.u.dim()).flat_map(|s| (0..self.v.dim()).map(move |r| format!("Y[{},{}]", s + 1, r + 1))).collect();
        out.push_str(&format!("generators ({}): {}\n", gens.len(), gens.join(" ")));
        out.push_str(&format!("relations ({}):\n", self.relations.len()));
        for r in &self.relations {
            out.push_str(&format!("{r}\n"));
        }
        out
    }
}

/// `Γ(v_r) = Σ_p u_p ⊗ Y[p,r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaMap {
    pub u_dim: usize,
    pub v_dim: usize,
}

impl GammaMap {
    /// `(p, (p, r))` pairs: `u_p ⊗ Y[p,r]`.
    pub fn image(&self, r: usize) -> Vec<(usize, (usize, usize))> {
        (0..self.u_dim).map(|p| (p, (p, r))).collect()
    }

    /// Matrix of `(id ⊗ g) ∘ Γ : V → U ⊗ W`.
    pub fn compose(&self, g: &ModuleMorphism) -> Matrix {
        let w = g.wdim;
        let mut out = Matrix::zeros(self.u_dim * w, self.v_dim);
        for r in 0..self.v_dim {
            for (p, (s, rr)) in self.image(r) {
                for (q, c) in g.image(s, rr).iter().enumerate() {
                    out[(p * w + q, r)] += c;
                }
            }
        }
        out
    }
}

impl fmt::Display for GammaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.v_dim {
            let parts: Vec<String> =
                self.image(r).iter().map(|(p, (s, rr))| format!("u{} ⊗ Y[{},{}]", p + 1, s + 1, rr + 1)).collect();
            writeln!(f, "v{} -> {}", r + 1, parts.join(" + "))?;
        }
        Ok(())
    }
}

pub fn universal_module_presentation(u: &LyModule, v: &LyModule) -> Result<(ModulePresentation, GammaMap), RepError> {
    for module in [u, v] {
        if let Some(bad) = validate_module(module).first_failure() {
            return Err(RepError::InvalidModule { axiom: bad.axiom, witness: bad.witness.clone().unwrap_or_default() });
        }
    }
    let pres = Presentation::new(u.over(), v.over());
    let (n, m) = pres.dims();
    let (mu, mv) = (u.dim(), v.dim());
    let x = |s: usize, i: usize| pres.x(s, i);
    let zero = pres.zero();
    let mut relations = Vec::new();

    let mut push = |family: Family, index: Vec<usize>, mut acc: Vec<Polynomial>| {
        // acc indexed by t * mv + r
        let terms: Vec<((usize, usize), Polynomial)> =
            acc.drain(..).enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| ((k / mv, k % mv), c)).collect();
        if !terms.is_empty() {
            relations.push(Relation { family, index, terms });
        }
    };

    // Σ_s μ_ir^s Y[p,s] − Σ_{t,k} γ_kt^p x[k,i] Y[t,r]
    for p in 0..mu {
        for i in 0..m {
            for r in 0..mv {
                let mut acc = vec![zero.clone(); mu * mv];
                for s in 0..mv {
                    let c = &v.rho(i)[(s, r)];
                    if !c.is_zero() {
                        acc[p * mv + s] =
                            acc[p * mv + s].add(&Polynomial::constant(pres.vars(), pres.order(), c.clone()));
                    }
                }
                for t in 0..mu {
                    for k in 0..n {
                        let c = &u.rho(k)[(p, t)];
                        if !c.is_zero() {
                            acc[t * mv + r] = acc[t * mv + r].sub(&x(k, i).scale(c));
                        }
                    }
                }
                push(Family::Rho, vec![p, i, r], acc);
            }
        }
    }
    // the D and θ families weight by x[l,i] x[k,j]
    for family in [Family::D, Family::Theta] {
        let vmap = |i: usize, j: usize| if family == Family::D { v.d(i, j) } else { v.theta(i, j) };
        let umap = |l: usize, k: usize| if family == Family::D { u.d(l, k) } else { u.theta(l, k) };
        for p in 0..mu {
            for i in 0..m {
                for j in 0..m {
                    for r in 0..mv {
                        let mut acc = vec![zero.clone(); mu * mv];
                        for s in 0..mv {
                            let c = &vmap(i, j)[(s, r)];
                            if !c.is_zero() {
                                acc[p * mv + s] =
                                    acc[p * mv + s].add(&Polynomial::constant(pres.vars(), pres.order(), c.clone()));
                            }
                        }
                        for t in 0..mu {
                            for l in 0..n {
                                for k in 0..n {
                                    let c = &umap(l, k)[(p, t)];
                                    if !c.is_zero() {
                                        let xx = x(l, i).mul(&x(k, j));
                                        acc[t * mv + r] = acc[t * mv + r].sub(&xx.scale(c));
                                    }
                                }
                            }
                        }
                        push(family, vec![p, i, j, r], acc);
                    }
                }
            }
        }
    }
    let gamma = GammaMap { u_dim: mu, v_dim: mv };
    Ok((ModulePresentation { pres, u: u.clone(), v: v.clone(), relations }, gamma))
}

/// `g(y[s,r]) = w[s,r]`, each a coordinate vector in `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub wdim: usize,
    pub v_dim: usize,
    /// indexed `s · dim V + r`
    pub table: Vec<Vec<Scalar>>,
}

impl ModuleMorphism {
    pub fn image(&self, s: usize, r: usize) -> &[Scalar] {
        &self.table[s * self.v_dim + r]
    }
}

/// Given `f(v_r) = Σ_s u_s ⊗ w[s,r]`, checks `f` is a module map into the
/// induced module `U ⊗ W` and returns the unique `g` with
/// `(id ⊗ g) ∘ Γ = f`.
pub fn factor_through(
    presn: &ModulePresentation,
    w: &[Vec<Scalar>],
    point: &MatrixPoint,
) -> Result<ModuleMorphism, RepError> {
    let (mu, mv) = (presn.u.dim(), presn.v.dim());
    let wdim = point.wdim();
    if point.presentation().dims() != presn.pres.dims() || point.presentation().l() != presn.pres.l() {
        return Err(RepError::Incompatible("matrix point is for a different universal algebra"));
    }
    if w.len() != mu * mv {
        return Err(RepError::DimensionMismatch { what: "w family", expected: mu * mv, found: w.len() });
    }
    if let Some(bad) = w.iter().find(|c| c.len() != wdim) {
        return Err(RepError::DimensionMismatch { what: "w vector", expected: wdim, found: bad.len() });
    }
    let f = Matrix::from_fn(mu * wdim, mv, |row, r| w[(row / wdim) * mv + r][row % wdim].clone());
    let target = induced_module(&presn.u, point)?;
    module_morphism_defect(&presn.v, &target, &f)?;

    let alg = MatrixAlgebra { n: wdim };
    for rel in &presn.relations {
        let mut acc = vec![Scalar::zero(); wdim];
        for ((t, r), c) in &rel.terms {
            let m = c.eval(&alg, point.images());
            for (a, b) in acc.iter_mut().zip(m.apply(&w[t * mv + r])) {
                *a += b;
            }
        }
        if acc.iter().any(|c| !c.is_zero()) {
            return Err(RepError::RelationViolated { generator: rel.label() });
        }
    }
    let g = ModuleMorphism { wdim, v_dim: mv, table: w.to_vec() };
    let gamma = GammaMap { u_dim: mu, v_dim: mv };
    if gamma.compose(&g) != f {
        return Err(RepError::Incompatible("(id ⊗ g) ∘ Γ differs from f"));
    }
    Ok(g)
}
