use smallvec::SmallVec;
use std::cmp::Ordering;

/// Monomial orders. Variable 0 is the largest variable in both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl MonoOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonoOrder::DegRevLex => "degrevlex",
            MonoOrder::Lex => "lex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "degrevlex" | "grevlex" => Some(MonoOrder::DegRevLex),
            "lex" => Some(MonoOrder::Lex),
            _ => None,
        }
    }

    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonoOrder::Lex => lex(a, b),
            MonoOrder::DegRevLex => a.degree.cmp(&b.degree).then_with(|| revlex(a, b)),
        }
    }
}

/// Compare exponent vectors from variable 0 upward; the larger exponent at
/// the first difference wins.
fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    let (mut i, mut j) = (0, 0);
    let (x, y) = (&a.exps, &b.exps);
    loop {
        match (x.get(i), y.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                if va < vb {
                    return Ordering::Greater;
                }
                if vb < va {
                    return Ordering::Less;
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
                i += 1;
                j += 1;
            }
        }
    }
}

/// Reverse lexicographic tie-break for equal degrees: at the last variable
/// where exponents differ, the smaller exponent is the larger monomial.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    let (x, y) = (&a.exps, &b.exps);
    let (mut i, mut j) = (x.len(), y.len());
    loop {
        match (i, j) {
            (0, 0) => return Ordering::Equal,
            // remaining variables of b only: b has positive exponents where a has 0
            (0, _) => return Ordering::Greater,
            (_, 0) => return Ordering::Less,
            _ => {
                let (va, ea) = x[i - 1];
                let (vb, eb) = y[j - 1];
                if va > vb {
                    return Ordering::Less;
                }
                if vb > va {
                    return Ordering::Greater;
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
                i -= 1;
                j -= 1;
            }
        }
    }
}

/// Sparse exponent vector: `(variable, exponent)` pairs sorted by variable,
/// exponents positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: SmallVec<[(u32, u32); 4]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: usize) -> Self {
        Monomial::from_pairs(&[(v, 1)])
    }

    /// Exponents for repeated variables add up; zero exponents are dropped.
    pub fn from_pairs(pairs: &[(usize, u32)]) -> Self {
        let mut exps: SmallVec<[(u32, u32); 4]> = SmallVec::new();
        let mut sorted: Vec<(usize, u32)> = pairs.iter().copied().filter(|p| p.1 > 0).collect();
        sorted.sort();
        for (v, e) in sorted {
            match exps.last_mut() {
                Some(last) if last.0 as usize == v => last.1 += e,
                _ => exps.push((v as u32, e)),
            }
        }
        let degree = exps.iter().map(|p| p.1).sum();
        Monomial { exps, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.exps.iter().find(|p| p.0 as usize == v).map_or(0, |p| p.1)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|p| p.0 as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (x, y) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
                exps.push(x[i]);
                i += 1;
            } else if i == x.len() || y[j].0 < x[i].0 {
                exps.push(y[j]);
                j += 1;
            } else {
                exps.push((x[i].0, x[i].1 + y[j].1));
                i += 1;
                j += 1;
            }
        }
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let y = &other.exps;
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < y.len() && y[j].0 < v {
                j += 1;
            }
            if j == y.len() || y[j].0 != v || y[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = SmallVec::new();
        let mut i = 0;
        for &(v, e) in &other.exps {
            if i < self.exps.len() && self.exps[i].0 == v {
                let d = e - self.exps[i].1;
                if d > 0 {
                    exps.push((v, d));
                }
                i += 1;
            } else {
                exps.push((v, e));
            }
        }
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::new();
        let (x, y) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
                exps.push(x[i]);
                i += 1;
            } else if i == x.len() || y[j].0 < x[i].0 {
                exps.push(y[j]);
                j += 1;
            } else {
                exps.push((x[i].0, x[i].1.max(y[j].1)));
                i += 1;
                j += 1;
            }
        }
        let degree = exps.iter().map(|p: &(u32, u32)| p.1).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (x, y) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Renames variables through `f`; the result is re-sorted.
    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Monomial {
        let pairs: Vec<(usize, u32)> = self.exponents().map(|(v, e)| (f(v), e)).collect();
        Monomial::from_pairs(&pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(p)
    }

    #[test]
    fn degrevlex_textbook_cases() {
        let o = MonoOrder::DegRevLex;
        // x = 0, y = 1, z = 2
        assert_eq!(o.cmp(&m(&[(0, 2)]), &m(&[(1, 1)])), Ordering::Greater);
        // x y z^2 vs x^2 z^2 ... degree 4 both: x^2z^2 < xy z^2? compare last var z: equal 2; then y: 1 vs 0 -> smaller y exponent wins: x^2z^2 > xyz^2
        assert_eq!(o.cmp(&m(&[(0, 2), (2, 2)]), &m(&[(0, 1), (1, 1), (2, 2)])), Ordering::Greater);
        // x^2 y vs x y z: z present in second -> first bigger
        assert_eq!(o.cmp(&m(&[(0, 2), (1, 1)]), &m(&[(0, 1), (1, 1), (2, 1)])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[(1, 1)]), &m(&[(2, 1)])), Ordering::Greater);
    }

    #[test]
    fn lex_cases() {
        let o = MonoOrder::Lex;
        assert_eq!(o.cmp(&m(&[(0, 1)]), &m(&[(1, 5)])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[(0, 1), (1, 1)]), &m(&[(0, 1)])), Ordering::Greater);
        assert_eq!(o.cmp(&Monomial::one(), &m(&[(3, 1)])), Ordering::Less);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[(0, 1), (2, 2)]);
        let b = m(&[(0, 2), (1, 1), (2, 3)]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b).unwrap(), m(&[(0, 1), (1, 1), (2, 1)]));
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&m(&[(1, 4)])), m(&[(0, 1), (1, 4), (2, 2)]));
        assert!(m(&[(0, 1)]).is_coprime(&m(&[(1, 1)])));
    }
}
