use num_traits::{One, Zero};

use super::{point_from_matrix, FiniteAbelianGroup, GroupAlgebra, ScalarPoint};
use crate::algebra::{unit_vector, LyAlgebra};
use crate::error::{SymmetryError, UniversalError};
use crate::linalg::{in_row_space, Matrix};
use crate::scalar::Scalar;
use crate::universal::{var_index, Presentation};

/// A decomposition `L = ⊕_g L_g`. Components are stored in increasing
/// element order, each as a reduced row basis; empty components are
/// omitted, so equal gradings compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    group: FiniteAbelianGroup,
    dim: usize,
    components: Vec<(usize, Matrix)>,
}

impl Grading {
    /// `e_i ∈ L_{assignment[i]}` (element indices).
    pub fn diagonal(group: &FiniteAbelianGroup, assignment: &[usize]) -> Result<Self, SymmetryError> {
        let n = assignment.len();
        let mut parts: Vec<(usize, Matrix)> = Vec::new();
        for (i, &g) in assignment.iter().enumerate() {
            if g >= group.order() {
                return Err(SymmetryError::InvalidGroup(format!("element index {g} in group {group}")));
            }
            parts.push((g, Matrix::from_rows(vec![unit_vector(n, i)])));
        }
        Self::new(group, n, parts)
    }

    /// Components given by spanning rows; repeated elements are merged.
    pub fn new(group: &FiniteAbelianGroup, dim: usize, parts: Vec<(usize, Matrix)>) -> Result<Self, SymmetryError> {
        let mut merged: Vec<(usize, Matrix)> = Vec::new();
        for (g, m) in parts {
            if g >= group.order() {
                return Err(SymmetryError::InvalidGroup(format!("element index {g} in group {group}")));
            }
            if m.rows() > 0 && m.cols() != dim {
                return Err(SymmetryError::NotADecomposition("component of the wrong dimension"));
            }
            match merged.iter_mut().find(|(h, _)| *h == g) {
                Some((_, acc)) => *acc = acc.stack(&m),
                None => merged.push((g, m)),
            }
        }
        let mut total = 0;
        let mut all = Matrix::zeros(0, dim);
        let mut components = Vec::new();
        for (g, m) in merged {
            if m.rows() == 0 {
                continue;
            }
            if m.rank() != m.rows() {
                return Err(SymmetryError::NotADecomposition("component basis is linearly dependent"));
            }
            total += m.rows();
            all = all.stack(&m);
            components.push((g, m.row_space_basis()));
        }
        if total != dim || all.rank() != dim {
            return Err(SymmetryError::NotADecomposition("components do not span the algebra directly"));
        }
        components.sort_by_key(|(g, _)| *g);
        Ok(Grading { group: group.clone(), dim, components })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(element, reduced row basis)` in increasing element order.
    pub fn components(&self) -> &[(usize, Matrix)] {
        &self.components
    }

    pub fn component(&self, g: usize) -> Option<&Matrix> {
        self.components.iter().find(|(h, _)| *h == g).map(|(_, m)| m)
    }

    /// The element of each basis vector, when every component is spanned
    /// by basis vectors.
    pub fn assignment(&self) -> Option<Vec<usize>> {
        let mut out = vec![usize::MAX; self.dim];
        for (g, m) in &self.components {
            for r in 0..m.rows() {
                let row = m.row(r);
                let nz: Vec<usize> = (0..self.dim).filter(|&c| !row[c].is_zero()).collect();
                if nz.len() != 1 {
                    return None;
                }
                out[nz[0]] = *g;
            }
        }
        Some(out)
    }

    /// A homogeneous basis with the grade of each vector: the standard
    /// basis for diagonal gradings, else the component rows in order.
    fn homogeneous_basis(&self) -> Vec<(Vec<Scalar>, usize)> {
        match self.assignment() {
            Some(a) => a.iter().enumerate().map(|(i, &g)| (unit_vector(self.dim, i), g)).collect(),
            None => self.components.iter().flat_map(|(g, m)| m.to_rows().into_iter().map(move |r| (r, *g))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingReport {
    /// `("binary" | "ternary", tuple)` over the homogeneous basis, 0-based
    pub witness: Option<(&'static str, Vec<usize>)>,
}

impl GradingReport {
    pub fn valid(&self) -> bool {
        self.witness.is_none()
    }
}

/// `[L_a, L_b] ⊆ L_{a+b}` and `{L_a, L_b, L_c} ⊆ L_{a+b+c}`, checked on a
/// homogeneous basis with linear membership tests.
pub fn validate_grading(l: &LyAlgebra, g: &Grading) -> Result<GradingReport, SymmetryError> {
    if g.dim != l.dim() {
        return Err(SymmetryError::NotADecomposition("grading and algebra have different dimensions"));
    }
    let basis = g.homogeneous_basis();
    let group = &g.group;
    let inside = |v: &[Scalar], grade: usize| match g.component(grade) {
        Some(m) => in_row_space(m, v),
        None => v.iter().all(Zero::is_zero),
    };
    let k = basis.len();
    for a in 0..k {
        for b in 0..k {
            let v = l.bracket(&basis[a].0, &basis[b].0);
            if !inside(&v, group.add(basis[a].1, basis[b].1)) {
                return Ok(GradingReport { witness: Some(("binary", vec![a, b])) });
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            let ab = group.add(basis[a].1, basis[b].1);
            for c in 0..k {
                let v = l.triple(&basis[a].0, &basis[b].0, &basis[c].0);
                if !inside(&v, group.add(ab, basis[c].1)) {
                    return Ok(GradingReport { witness: Some(("ternary", vec![a, b, c])) });
                }
            }
        }
    }
    Ok(GradingReport { witness: None })
}

/// Every basis-homogeneous grading by `group`, in lexicographic order of
/// the assignment (element indices).
pub fn enumerate_diagonal_gradings(l: &LyAlgebra, group: &FiniteAbelianGroup) -> Vec<Grading> {
    let n = l.dim();
    // (inputs, output) with grade(output) = Σ grade(inputs), bucketed by
    // the largest index involved so each is checked once it is decided
    let mut constraints: Vec<Vec<(Vec<usize>, usize)>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            for (s, c) in l.bracket_basis(a, b).iter().enumerate() {
                if !c.is_zero() {
                    constraints[a.max(b).max(s)].push((vec![a, b], s));
                }
            }
            for k in 0..n {
                for (s, c) in l.triple_basis(a, b, k).iter().enumerate() {
                    if !c.is_zero() {
                        constraints[a.max(b).max(k).max(s)].push((vec![a, b, k], s));
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    search(0, &mut assignment, &constraints, group, &mut out);
    out.into_iter().map(|a| Grading::diagonal(group, &a).expect("valid assignment")).collect()
}

fn search(
    level: usize,
    assignment: &mut Vec<usize>,
    constraints: &[Vec<(Vec<usize>, usize)>],
    group: &FiniteAbelianGroup,
    out: &mut Vec<Vec<usize>>,
) {
    if level == assignment.len() {
        out.push(assignment.clone());
        return;
    }
    for g in group.elements() {
        assignment[level] = g;
        let ok = constraints[level].iter().all(|(inputs, s)| {
            let sum = inputs.iter().fold(group.identity(), |acc, &i| group.add(acc, assignment[i]));
            sum == assignment[*s]
        });
        if ok {
            search(level + 1, assignment, constraints, group, out);
        }
    }
}

/// A bialgebra map `𝒜(L) → 𝕂[G]`: `images[s·n + i]` is `θ(x[s,i])` in
/// coordinates over the group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraPoint {
    group: FiniteAbelianGroup,
    dim: usize,
    images: Vec<Vec<Scalar>>,
}

impl GroupAlgebraPoint {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn images(&self) -> &[Vec<Scalar>] {
        &self.images
    }

    /// The matrix of `g`-coefficients: `Θ_g[s][i]`.
    pub fn coefficient_matrix(&self, g: usize) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, n, |s, i| self.images[var_index(n, s, i)][g].clone())
    }
}

/// Checks the relations in `𝕂[G]`, `Δθ(x[i,j]) = Σ_s θ(x[i,s]) ⊗ θ(x[s,j])`
/// and `εθ(x[i,j]) = δ_ij`.
pub fn verify_group_point(
    pres: &Presentation,
    group: &FiniteAbelianGroup,
    images: Vec<Vec<Scalar>>,
) -> Result<GroupAlgebraPoint, SymmetryError> {
    let (n, m) = pres.dims();
    if n != m {
        return Err(UniversalError::NotSquare.into());
    }
    if images.len() != n * n {
        return Err(UniversalError::PointShape { expected: n * n, found: images.len() }.into());
    }
    let order = group.order();
    if let Some(bad) = images.iter().find(|v| v.len() != order) {
        return Err(UniversalError::PointShape { expected: order, found: bad.len() }.into());
    }
    let alg = GroupAlgebra::new(group);
    for gen in pres.generators() {
        if gen.poly.eval(&alg, &images).iter().any(|c| !c.is_zero()) {
            return Err(SymmetryError::RelationViolated { generator: gen.name() });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = &images[var_index(n, i, j)];
            let mut rhs = vec![Scalar::zero(); order * order];
            for s in 0..n {
                let (a, b) = (&images[var_index(n, i, s)], &images[var_index(n, s, j)]);
                for (g, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (h, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        rhs[g * order + h] += x * y;
                    }
                }
            }
            let ok = (0..order).all(|g| {
                (0..order).all(|h| {
                    let expected = if g == h { lhs[g].clone() } else { Scalar::zero() };
                    rhs[g * order + h] == expected
                })
            });
            if !ok {
                return Err(SymmetryError::NotABialgebraMap { law: "comultiplication", witness: vec![i, j] });
            }
            let eps: Scalar = lhs.iter().sum();
            let delta = if i == j { Scalar::one() } else { Scalar::zero() };
            if eps != delta {
                return Err(SymmetryError::NotABialgebraMap { law: "counit", witness: vec![i, j] });
            }
        }
    }
    Ok(GroupAlgebraPoint { group: group.clone(), dim: n, images })
}

/// `θ(x[s,i]) = Σ_g π_g[s][i] · g` with `π_g` the projection onto `L_g`.
pub fn grading_to_point(pres: &Presentation, g: &Grading) -> Result<GroupAlgebraPoint, SymmetryError> {
    let n = g.dim;
    let report = validate_grading(pres.l(), g)?;
    if let Some((law, witness)) = report.witness {
        return Err(SymmetryError::NotABialgebraMap { law, witness });
    }
    let mut rows = Vec::new();
    let mut owner = Vec::new();
    for (h, m) in &g.components {
        for r in m.to_rows() {
            rows.push(r);
            owner.push(*h);
        }
    }
    // columns of `b` are the homogeneous basis vectors
    let b = Matrix::from_rows(rows).transpose();
    let binv = b.inverse().expect("direct sum");
    let order = g.group.order();
    let mut images = vec![vec![Scalar::zero(); order]; n * n];
    for s in 0..n {
        for i in 0..n {
            for (k, &h) in owner.iter().enumerate() {
                let c = &b[(s, k)] * &binv[(k, i)];
                if !c.is_zero() {
                    images[var_index(n, s, i)][h] += c;
                }
            }
        }
    }
    verify_group_point(pres, &g.group, images)
}

/// `L_g = { x : (id ⊗ θ)Φ(x) = x ⊗ g }`, the fixed space of `Θ_g`.
pub fn point_to_grading(point: &GroupAlgebraPoint) -> Result<Grading, SymmetryError> {
    let n = point.dim;
    let id = Matrix::identity(n);
    let parts: Vec<(usize, Matrix)> = point
        .group
        .elements()
        .map(|g| {
            let fixed = (&point.coefficient_matrix(g) - &id).null_space();
            let m = if fixed.is_empty() { Matrix::zeros(0, n) } else { Matrix::from_rows(fixed) };
            (g, m)
        })
        .collect();
    Grading::new(&point.group, n, parts).map_err(|_| SymmetryError::ComponentsDoNotSum)
}

/// `u ⋆ θ ⋆ u⁻¹`: entrywise `U · [θ(x[s,i])] · U⁻¹` in `𝕂[G]`.
pub fn conjugate_point(
    pres: &Presentation,
    point: &GroupAlgebraPoint,
    u: &ScalarPoint,
) -> Result<GroupAlgebraPoint, SymmetryError> {
    let um = u.matrix();
    let inv = um.inverse().ok_or(SymmetryError::NonInvertiblePoint)?;
    point_from_matrix(pres, &inv).map_err(|_| SymmetryError::NonInvertiblePoint)?;
    let n = um.rows();
    let order = point.group.order();
    let mut images = vec![vec![Scalar::zero(); order]; n * n];
    for s in 0..n {
        for i in 0..n {
            let out = &mut images[var_index(n, s, i)];
            for t in 0..n {
                if um[(s, t)].is_zero() {
                    continue;
                }
                for r in 0..n {
                    let c = &um[(s, t)] * &inv[(r, i)];
                    if c.is_zero() {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(&point.images[var_index(n, t, r)]) {
                        *o += &c * x;
                    }
                }
            }
        }
    }
    verify_group_point(pres, &point.group, images)
}

/// Whether `zeta` carries each component of `g1` onto the same-degree
/// component of `g2`.
pub fn maps_components(zeta: &Matrix, g1: &Grading, g2: &Grading) -> bool {
    if g1.group != g2.group || g1.components.len() != g2.components.len() {
        return false;
    }
    g1.components.iter().all(|(h, m)| {
        let Some(target) = g2.component(*h) else { return false };
        let images: Vec<Vec<Scalar>> = m.to_rows().iter().map(|r| zeta.apply(r)).collect();
        target.rows() == m.rows()
            && Matrix::from_rows(images.clone()).rank() == m.rows()
            && images.iter().all(|v| in_row_space(target, v))
    })
}
