use std::fmt;
use std::sync::Arc;

/// Which copy of the generator matrix a variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Plain,
    /// left tensor factor in `A ⊗ A`
    Left,
    /// right tensor factor in `A ⊗ A`
    Right,
    /// antipode level of the Hopf envelope
    Level(u32),
}

/// One indeterminate `x[s,i]` (0-based in memory, printed 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub role: Role,
    pub row: usize,
    pub col: usize,
}

impl Var {
    pub fn plain(row: usize, col: usize) -> Self {
        Var { role: Role::Plain, row, col }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, c) = (self.row + 1, self.col + 1);
        match self.role {
            Role::Plain => write!(f, "x[{r},{c}]"),
            Role::Left => write!(f, "xL[{r},{c}]"),
            Role::Right => write!(f, "xR[{r},{c}]"),
            Role::Level(l) => write!(f, "x{{{l}}}[{r},{c}]"),
        }
    }
}

/// An ordered list of distinct variables. Variable `k` of a polynomial is
/// `vars()[k]`; cloning is cheap.
#[derive(Clone, Debug)]
pub struct VarSet {
    vars: Arc<Vec<Var>>,
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for VarSet {}

impl VarSet {
    /// Panics on duplicate descriptors.
    pub fn new(vars: Vec<Var>) -> Self {
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), vars.len(), "duplicate variable descriptors");
        VarSet { vars: Arc::new(vars) }
    }

    /// `x[s,i]` for `s < rows`, `i < cols`, row-major.
    pub fn matrix(role: Role, rows: usize, cols: usize) -> Self {
        let mut v = Vec::with_capacity(rows * cols);
        for s in 0..rows {
            for i in 0..cols {
                v.push(Var { role, row: s, col: i });
            }
        }
        VarSet::new(v)
    }

    /// `k` plain variables `x[1,1], …, x[1,k]`.
    pub fn with_count(k: usize) -> Self {
        VarSet::matrix(Role::Plain, 1, k)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn get(&self, k: usize) -> Var {
        self.vars[k]
    }

    pub fn index_of(&self, v: &Var) -> Option<usize> {
        self.vars.iter().position(|w| w == v)
    }

    /// Concatenation; panics if the two sets share a variable.
    pub fn concat(&self, other: &VarSet) -> VarSet {
        let mut v = self.vars.as_ref().clone();
        v.extend(other.vars.iter().copied());
        VarSet::new(v)
    }
}
