//! Truncated presentations of the commutative Hopf envelope `𝓗(L)` of
//! `𝒜(L)`: levels `x{0}, …, x{k}` of the generator matrix, the antipode
//! sending level `l` to level `l+1`.

use num_traits::{One, Zero};
use std::fmt;

use crate::error::HopfError;
use crate::poly::{Ideal, Membership, Monomial, Polynomial, Role, Var, VarSet};
use crate::scalar::Scalar;
use crate::universal::{verify_phi, BialgebraPresentation, GenKind, PhiReport};

/// What a Hopf generator is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HopfGenKind {
    /// a universal polynomial lifted to `level`
    Lifted { kind: GenKind, level: u32 },
    /// `Σ_s x{l}[i,s] x{l+1}[s,j] - δ_ij`
    ConvLeft { level: u32, i: usize, j: usize },
    /// `Σ_s x{l+1}[i,s] x{l}[s,j] - δ_ij`
    ConvRight { level: u32, i: usize, j: usize },
}

impl HopfGenKind {
    /// Highest level whose variables occur.
    pub fn top_level(&self) -> u32 {
        match *self {
            HopfGenKind::Lifted { level, .. } => level,
            HopfGenKind::ConvLeft { level, .. } | HopfGenKind::ConvRight { level, .. } => level + 1,
        }
    }
}

impl fmt::Display for HopfGenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HopfGenKind::Lifted { kind, level } => write!(f, "{kind}{{{level}}}"),
            HopfGenKind::ConvLeft { level, i, j } => write!(f, "SL{{{level}}}({},{})", i + 1, j + 1),
            HopfGenKind::ConvRight { level, i, j } => write!(f, "SR{{{level}}}({},{})", i + 1, j + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfGenerator {
    pub kind: HopfGenKind,
    pub poly: Polynomial,
}

impl HopfGenerator {
    pub fn name(&self) -> String {
        self.kind.to_string()
    }
}

#[derive(Clone, Debug)]
pub struct HopfPresentation {
    bialgebra: BialgebraPresentation,
    depth: u32,
    vars: VarSet,
    generators: Vec<HopfGenerator>,
    ideal: Ideal,
}

/// `x{l}[s,i]` as a variable index.
fn level_index(n: usize, l: u32, s: usize, i: usize) -> usize {
    l as usize * n * n + s * n + i
}

pub fn hopf_envelope(b: &BialgebraPresentation, depth: u32) -> Result<HopfPresentation, HopfError> {
    if depth == 0 {
        return Err(HopfError::ZeroDepth);
    }
    let pres = b.presentation();
    let n = b.dim();
    let order = pres.order();
    let vars = (1..=depth)
        .fold(VarSet::matrix(Role::Level(0), n, n), |acc, l| acc.concat(&VarSet::matrix(Role::Level(l), n, n)));
    let mut generators = Vec::new();
    for l in 0..=depth {
        let shift = l as usize * n * n;
        for g in pres.generators() {
            generators.push(HopfGenerator {
                kind: HopfGenKind::Lifted { kind: g.kind, level: l },
                poly: g.poly.rename(&vars, |v| v + shift),
            });
        }
    }
    for l in 0..depth {
        for (left, right, flipped) in [(l, l + 1, false), (l + 1, l, true)] {
            for i in 0..n {
                for j in 0..n {
                    let mut terms: Vec<(Monomial, Scalar)> = (0..n)
                        .map(|s| {
                            let m = Monomial::from_pairs(&[
                                (level_index(n, left, i, s), 1),
                                (level_index(n, right, s, j), 1),
                            ]);
                            (m, Scalar::one())
                        })
                        .collect();
                    if i == j {
                        terms.push((Monomial::one(), -Scalar::one()));
                    }
                    generators.push(HopfGenerator {
                        kind: if flipped {
                            HopfGenKind::ConvRight { level: l, i, j }
                        } else {
                            HopfGenKind::ConvLeft { level: l, i, j }
                        },
                        poly: Polynomial::from_terms(&vars, order, terms),
                    });
                }
            }
        }
    }
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in &generators {
        let monic = g.poly.monic();
        if !gens.contains(&monic) {
            gens.push(monic);
        }
    }
    let ideal = Ideal::new(&vars, gens).expect("same variable set");
    Ok(HopfPresentation { bialgebra: b.clone(), depth, vars, generators, ideal })
}

impl HopfPresentation {
    pub fn bialgebra(&self) -> &BialgebraPresentation {
        &self.bialgebra
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn generators(&self) -> &[HopfGenerator] {
        &self.generators
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn x(&self, l: u32, s: usize, i: usize) -> Polynomial {
        Polynomial::var(&self.vars, self.bialgebra.presentation().order(), level_index(self.dim(), l, s, i))
    }

    /// Ideal generators involving level-0 variables only, moved back to
    /// the variables of `𝒜(L)`.
    pub fn level0_slice(&self) -> Vec<Polynomial> {
        let nn = self.dim() * self.dim();
        let plain = self.bialgebra.presentation().vars();
        self.ideal
            .generators()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.max_var().is_none_or(|v| v < nn)))
            .map(|g| g.rename(plain, |v| v))
            .collect()
    }

    /// `Δ(x{l}[i,j])` as pairs `(left, right)`: `Σ_s x{l}[i,s] ⊗ x{l}[s,j]`
    /// at even levels, the flipped tensor order at odd ones.
    pub fn delta_terms(&self, l: u32, i: usize, j: usize) -> Vec<(Var, Var)> {
        (0..self.dim())
            .map(|s| {
                let a = Var { role: Role::Level(l), row: i, col: s };
                let b = Var { role: Role::Level(l), row: s, col: j };
                if l.is_multiple_of(2) {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// `S(x{l}[s,i]) = x{l+1}[s,i]`, defined below the top level.
    pub fn antipode(&self, p: &Polynomial) -> Option<Polynomial> {
        let nn = self.dim() * self.dim();
        let top = (self.depth as usize) * nn;
        if p.terms().iter().any(|(m, _)| m.max_var().is_some_and(|v| v >= top)) {
            return None;
        }
        Some(p.rename(&self.vars, |v| v + nn))
    }

    /// First generator not killed by `ε(x{l}[i,j]) = δ_ij`.
    pub fn counit_violation(&self) -> Option<String> {
        let values: Vec<Scalar> = (0..self.vars.len())
            .map(|k| {
                let v = self.vars.get(k);
                if v.row == v.col {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        self.generators
            .iter()
            .find(|g| !g.poly.eval(&crate::poly::Rationals, &values).is_zero())
            .map(HopfGenerator::name)
    }

    pub fn dump_text(&self) -> String {
        let n = self.dim();
        let mut out = format!("# Hopf envelope, dim L = {n}, depth = {}\n", self.depth);
        let vars: Vec<String> = self.vars.vars().iter().map(Var::to_string).collect();
        out.push_str(&format!("variables ({}): {}\n", vars.len(), vars.join(" ")));
        out.push_str(&format!("generators ({}):\n", self.generators.len()));
        for g in &self.generators {
            out.push_str(&format!("{} = {}\n", g.name(), g.poly));
        }
        out
    }
}

/// `𝒳_L(e_i) = Σ_s e_s ⊗ x{0}[s,i]` together with the morphism certificate.
#[derive(Clone, Debug)]
pub struct Coaction {
    /// coefficient of `e_s` in the image of `e_i`, at `[i][s]`
    pub images: Vec<Vec<Polynomial>>,
    pub report: PhiReport,
}

pub fn universal_coaction(h: &HopfPresentation, cap: u32) -> Coaction {
    let n = h.dim();
    let images = (0..n).map(|i| (0..n).map(|s| h.x(0, s, i)).collect()).collect();
    let report = verify_phi(h.bialgebra.presentation(), cap);
    Coaction { images, report }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeEntry {
    pub generator: String,
    pub membership: Membership,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeReport {
    pub degree_cap: u32,
    pub entries: Vec<AntipodeEntry>,
}

impl AntipodeReport {
    pub fn certified(&self) -> bool {
        self.entries.iter().all(|e| e.membership == Membership::Yes)
    }

    pub fn unknown(&self) -> usize {
        self.entries.iter().filter(|e| e.membership == Membership::Unknown).count()
    }
}

/// `S(g)` reduces into the ideal for every generator below the top level.
pub fn antipode_check(h: &HopfPresentation, cap: u32) -> AntipodeReport {
    let entries = h
        .generators
        .iter()
        .filter_map(|g| {
            let image = h.antipode(&g.poly)?;
            let membership = h.ideal.contains(&image, cap).unwrap_or(Membership::Unknown);
            Some(AntipodeEntry { generator: g.name(), membership })
        })
        .collect();
    AntipodeReport { degree_cap: cap, entries }
}

/// Optional: whether `x{l+2} ↦ x{l}` maps every generator into the ideal.
pub fn s_squared_check(h: &HopfPresentation, cap: u32) -> AntipodeReport {
    let nn = h.dim() * h.dim();
    let entries = h
        .generators
        .iter()
        .filter(|g| g.kind.top_level() >= 2)
        .map(|g| {
            let image = g.poly.rename(&h.vars, |v| if v >= 2 * nn { v - 2 * nn } else { v });
            let membership = h.ideal.contains(&image, cap).unwrap_or(Membership::Unknown);
            AntipodeEntry { generator: g.name(), membership }
        })
        .collect();
    AntipodeReport { degree_cap: cap, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{heisenberg, LyAlgebra};
    use crate::universal::{bialgebra_structure, Presentation};

    fn envelope(l: &LyAlgebra, depth: u32) -> HopfPresentation {
        let pres = Presentation::new(l, l);
        hopf_envelope(&bialgebra_structure(&pres).unwrap(), depth).unwrap()
    }

    #[test]
    fn laurent_polynomials() {
        let h = envelope(&LyAlgebra::abelian(1).unwrap(), 1);
        let gens: Vec<String> = h.ideal().generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["x{0}[1,1]*x{1}[1,1] - 1"]);
        assert!(antipode_check(&h, 4).certified());
        let h2 = envelope(&LyAlgebra::abelian(1).unwrap(), 2);
        assert!(antipode_check(&h2, 4).certified());
    }

    #[test]
    fn heisenberg_depth_one() {
        let l = heisenberg(1).unwrap();
        let h = envelope(&l, 1);
        assert_eq!(h.vars().len(), 18);
        let conv = h.generators().iter().filter(|g| !matches!(g.kind, HopfGenKind::Lifted { .. })).count();
        assert_eq!(conv, 18);
        let pres = Presentation::new(&l, &l);
        assert_eq!(h.level0_slice(), pres.ideal().generators());
        assert_eq!(h.counit_violation(), None);
        let r = antipode_check(&h, h.ideal().default_cap());
        assert!(r.certified() && r.unknown() == 0);
        assert!(matches!(hopf_envelope(&bialgebra_structure(&pres).unwrap(), 0), Err(HopfError::ZeroDepth)));
    }
}
