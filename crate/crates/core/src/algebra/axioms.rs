use num_traits::Zero;
use std::fmt;

use super::{axpy, is_zero_vec, LyAlgebra};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LyAxiom {
    Ly1,
    Ly2,
    Ly3,
    Ly4,
    Ly5,
    Ly6,
}

impl LyAxiom {
    pub const ALL: [LyAxiom; 6] = [LyAxiom::Ly1, LyAxiom::Ly2, LyAxiom::Ly3, LyAxiom::Ly4, LyAxiom::Ly5, LyAxiom::Ly6];

    pub fn name(self) -> &'static str {
        match self {
            LyAxiom::Ly1 => "LY1",
            LyAxiom::Ly2 => "LY2",
            LyAxiom::Ly3 => "LY3",
            LyAxiom::Ly4 => "LY4",
            LyAxiom::Ly5 => "LY5",
            LyAxiom::Ly6 => "LY6",
        }
    }
}

/// Outcome of one axiom: `witness` is the lexicographically first failing
/// basis tuple, `None` when the axiom holds on every tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub witness: Option<Vec<usize>>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.results.iter().find(|r| !r.passed())
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    /// Witness of the named axiom, if it failed.
    pub fn witness(&self, axiom: &str) -> Option<&[usize]> {
        self.get(axiom).and_then(|r| r.witness.as_deref())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.witness {
                None => writeln!(f, "{}: pass", r.axiom)?,
                Some(w) => {
                    let w: Vec<String> = w.iter().map(|i| (i + 1).to_string()).collect();
                    writeln!(f, "{}: FAIL at ({})", r.axiom, w.join(","))?
                }
            }
        }
        Ok(())
    }
}

/// Iterates all `arity`-tuples over `0..n` in lexicographic order and
/// returns the first one for which `fails` holds.
pub(crate) fn first_tuple(n: usize, arity: usize, mut fails: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut t = vec![0; arity];
    if n == 0 {
        return None;
    }
    loop {
        if fails(&t) {
            return Some(t);
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < n {
                break;
            }
            t[pos] = 0;
        }
    }
}

/// Evaluates LY1–LY6 on every basis tuple.
pub fn validate_lya(l: &LyAlgebra) -> AxiomReport {
    let n = l.dim();
    let t = l.dense();
    let zero_vec = || vec![Scalar::zero(); n];
    // [u, e_c] and {u, e_c, e_d} etc. for a vector u
    let br_left = |u: &[Scalar], c: usize| {
        let mut out = zero_vec();
        for (i, ui) in u.iter().enumerate() {
            axpy(&mut out, ui, t.bracket(i, c));
        }
        out
    };
    let br_right = |c: usize, u: &[Scalar]| {
        let mut out = zero_vec();
        for (i, ui) in u.iter().enumerate() {
            axpy(&mut out, ui, t.bracket(c, i));
        }
        out
    };
    // {u, e_b, e_c}
    let tr_first = |u: &[Scalar], b: usize, c: usize| {
        let mut out = zero_vec();
        for (i, ui) in u.iter().enumerate() {
            axpy(&mut out, ui, t.triple(i, b, c));
        }
        out
    };
    // {e_a, u, e_c}
    let tr_second = |a: usize, u: &[Scalar], c: usize| {
        let mut out = zero_vec();
        for (i, ui) in u.iter().enumerate() {
            axpy(&mut out, ui, t.triple(a, i, c));
        }
        out
    };
    // {e_a, e_b, u}
    let tr_third = |a: usize, b: usize, u: &[Scalar]| {
        let mut out = zero_vec();
        for (i, ui) in u.iter().enumerate() {
            axpy(&mut out, ui, t.triple(a, b, i));
        }
        out
    };
    let add = |acc: &mut Vec<Scalar>, v: &[Scalar], sign: i32| {
        for (a, b) in acc.iter_mut().zip(v) {
            if sign > 0 {
                *a += b;
            } else {
                *a -= b;
            }
        }
    };

    let ly1 = first_tuple(n, 2, |w| {
        let (a, b) = (w[0], w[1]);
        t.bracket(a, b).iter().zip(t.bracket(b, a)).any(|(x, y)| !(x + y).is_zero())
    });
    let ly2 = first_tuple(n, 3, |w| {
        let (a, b, c) = (w[0], w[1], w[2]);
        t.triple(a, b, c).iter().zip(t.triple(b, a, c)).any(|(x, y)| !(x + y).is_zero())
    });
    let ly3 = first_tuple(n, 3, |w| {
        let (a, b, c) = (w[0], w[1], w[2]);
        let mut acc = zero_vec();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            add(&mut acc, &br_left(t.bracket(x, y), z), 1);
            add(&mut acc, t.triple(x, y, z), 1);
        }
        !is_zero_vec(&acc)
    });
    let ly4 = first_tuple(n, 4, |w| {
        let (a, b, c, d) = (w[0], w[1], w[2], w[3]);
        let mut acc = zero_vec();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            add(&mut acc, &tr_first(t.bracket(x, y), z, d), 1);
        }
        !is_zero_vec(&acc)
    });
    let ly5 = first_tuple(n, 4, |w| {
        let (a, b, c, d) = (w[0], w[1], w[2], w[3]);
        let mut acc = tr_third(a, b, t.bracket(c, d));
        add(&mut acc, &br_left(t.triple(a, b, c), d), -1);
        add(&mut acc, &br_right(c, t.triple(a, b, d)), -1);
        !is_zero_vec(&acc)
    });
    let ly6 = first_tuple(n, 5, |w| {
        let (a, b, c, d, e) = (w[0], w[1], w[2], w[3], w[4]);
        let mut acc = tr_third(a, b, t.triple(c, d, e));
        add(&mut acc, &tr_first(t.triple(a, b, c), d, e), -1);
        add(&mut acc, &tr_second(c, t.triple(a, b, d), e), -1);
        add(&mut acc, &tr_third(c, d, t.triple(a, b, e)), -1);
        !is_zero_vec(&acc)
    });

    let results = [ly1, ly2, ly3, ly4, ly5, ly6]
        .into_iter()
        .zip(LyAxiom::ALL)
        .map(|(witness, axiom)| AxiomResult { axiom: axiom.name(), witness })
        .collect();
    AxiomReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_lexicographic() {
        let mut seen = Vec::new();
        first_tuple(2, 2, |t| {
            seen.push(t.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(first_tuple(3, 2, |t| t == [1, 2]), Some(vec![1, 2]));
    }

    #[test]
    fn abelian_passes_everything() {
        for n in 1..=3 {
            let r = validate_lya(&LyAlgebra::abelian(n).unwrap());
            assert!(r.passed());
            assert_eq!(r.results.len(), 6);
        }
    }
}
