//! Multivariate division and Buchberger completion with optional cofactor
//! tracking.

use num_traits::One;
use std::collections::HashSet;

use super::{MonoOrder, Monomial, Polynomial, VarSet};
use crate::error::PolyError;
use crate::scalar::Scalar;

/// `p = Σ quotients[k] · divisors[k] + remainder`, where no term of the
/// remainder is divisible by a leading monomial of a divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn check_ring(p: &Polynomial, g: &[Polynomial]) -> Result<(), PolyError> {
    for q in g {
        if q.vars() != p.vars() {
            return Err(PolyError::MixedVarSets { expected: p.vars().len(), found: q.vars().len() });
        }
    }
    Ok(())
}

/// Full multivariate division. Divisors are tried in the given order.
pub fn divide(p: &Polynomial, divisors: &[Polynomial]) -> Result<Division, PolyError> {
    check_ring(p, divisors)?;
    let order = p.order();
    let divisors: Vec<Polynomial> = divisors.iter().map(|g| g.with_order(order)).collect();
    Ok(divide_unchecked(p, &divisors, true))
}

/// Remainder of [`divide`].
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial, PolyError> {
    check_ring(p, divisors)?;
    let order = p.order();
    let divisors: Vec<Polynomial> = divisors.iter().map(|g| g.with_order(order)).collect();
    Ok(divide_unchecked(p, &divisors, false).remainder)
}

pub(crate) fn divide_unchecked(p: &Polynomial, divisors: &[Polynomial], track: bool) -> Division {
    let vars = p.vars().clone();
    let order = p.order();
    let leads: Vec<Option<(&Monomial, Scalar)>> = divisors
        .iter()
        .map(|g| g.leading_monomial().map(|m| (m, Scalar::one() / g.leading_coefficient().unwrap())))
        .collect();
    let mut quotient_terms: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); if track { divisors.len() } else { 0 }];
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    let mut work = p.clone();
    // `work` is split as head (already scanned terms moved to `rem`) + the rest;
    // we peel the leading term each round.
    while let Some((lm, lc)) = work.terms().first().cloned() {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(k, l)| l.as_ref().and_then(|(m, inv)| m.quotient_of(&lm).map(|q| (k, q, &lc * inv))));
        match hit {
            Some((k, q, c)) => {
                work = work.add_scaled(&-c.clone(), &q, &divisors[k]);
                if track {
                    quotient_terms[k].push((q, c));
                }
            }
            None => {
                rem.push((lm, lc));
                let rest = work.terms()[1..].to_vec();
                work = Polynomial::from_sorted(&vars, order, rest);
            }
        }
    }
    let quotients = quotient_terms.into_iter().map(|t| Polynomial::from_terms(&vars, order, t)).collect();
    Division { quotients, remainder: Polynomial::from_sorted(&vars, order, rem) }
}

/// Result of a (possibly truncated) Buchberger run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonoOrder,
    pub degree_cap: u32,
    /// `false` when some S-pair was skipped because its lcm exceeded the cap.
    pub complete: bool,
    /// Monic, inter-reduced, sorted by increasing leading monomial.
    pub basis: Vec<Polynomial>,
    /// `basis[k] = Σ_j cofactors[k][j] · gens[j]`, when tracked.
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
}

impl GroebnerBasis {
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        divide_unchecked(&p.with_order(self.order), &self.basis, false).remainder
    }

    /// Cofactors of `p` with respect to the original generators, when `p`
    /// reduces to zero and cofactors were tracked.
    pub fn lift(&self, p: &Polynomial, ngens: usize) -> Option<Vec<Polynomial>> {
        let reps = self.cofactors.as_ref()?;
        let p = p.with_order(self.order);
        let d = divide_unchecked(&p, &self.basis, true);
        if !d.remainder.is_zero() {
            return None;
        }
        let mut out = vec![Polynomial::zero(p.vars(), self.order); ngens];
        for (q, rep) in d.quotients.iter().zip(reps) {
            if q.is_zero() {
                continue;
            }
            for (j, r) in rep.iter().enumerate() {
                out[j] = out[j].add(&q.mul(r));
            }
        }
        Some(out)
    }
}

struct Element {
    poly: Polynomial,
    rep: Option<Vec<Polynomial>>,
}

fn combine_reps(
    vars: &VarSet,
    order: MonoOrder,
    parts: &[(&Scalar, &Monomial, &Vec<Polynomial>)],
    ngens: usize,
) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(vars, order); ngens];
    for (c, m, rep) in parts {
        for (o, r) in out.iter_mut().zip(rep.iter()) {
            *o = o.add_scaled(c, m, r);
        }
    }
    out
}

/// Reduces `p` (with representation `rep`) fully against `basis`.
fn reduce_element(p: Polynomial, rep: Option<Vec<Polynomial>>, basis: &[Element], ngens: usize) -> Element {
    let polys: Vec<Polynomial> = basis.iter().map(|e| e.poly.clone()).collect();
    let track = rep.is_some();
    let d = divide_unchecked(&p, &polys, track);
    let rep = rep.map(|mut r| {
        let vars = p.vars();
        for (q, e) in d.quotients.iter().zip(basis) {
            if q.is_zero() {
                continue;
            }
            let er = e.rep.as_ref().expect("tracked basis");
            for (j, x) in r.iter_mut().enumerate().take(ngens) {
                *x = x.sub(&q.mul(&er[j]));
            }
        }
        let _ = vars;
        r
    });
    Element { poly: d.remainder, rep }
}

fn make_monic(e: Element) -> Element {
    let Some(lc) = e.poly.leading_coefficient().cloned() else { return e };
    if lc.is_one() {
        return e;
    }
    let inv = Scalar::one() / lc;
    Element { poly: e.poly.scale(&inv), rep: e.rep.map(|r| r.iter().map(|x| x.scale(&inv)).collect()) }
}

/// Default degree cap: twice the largest generator degree plus two.
pub fn default_degree_cap(gens: &[Polynomial]) -> u32 {
    2 * gens.iter().map(Polynomial::total_degree).max().unwrap_or(0) + 2
}

pub fn buchberger(gens: &[Polynomial], order: MonoOrder, degree_cap: u32) -> GroebnerBasis {
    run(gens, order, degree_cap, false)
}

pub fn buchberger_with_cofactors(gens: &[Polynomial], order: MonoOrder, degree_cap: u32) -> GroebnerBasis {
    run(gens, order, degree_cap, true)
}

fn run(gens: &[Polynomial], order: MonoOrder, degree_cap: u32, track: bool) -> GroebnerBasis {
    let ngens = gens.len();
    let Some(first) = gens.first() else {
        return GroebnerBasis { order, degree_cap, complete: true, basis: Vec::new(), cofactors: track.then(Vec::new) };
    };
    let vars = first.vars().clone();
    for g in gens {
        assert!(g.vars() == &vars, "generators over different variable sets");
    }
    let zero = Polynomial::zero(&vars, order);
    let one = Polynomial::one(&vars, order);

    let mut basis: Vec<Element> = Vec::new();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut complete = true;

    let add = |basis: &mut Vec<Element>,
               pairs: &mut Vec<(usize, usize, Monomial)>,
               pending: &mut HashSet<(usize, usize)>,
               e: Element| {
        let k = basis.len();
        let lm = e.poly.leading_monomial().unwrap().clone();
        for (i, b) in basis.iter().enumerate() {
            let l = b.poly.leading_monomial().unwrap().lcm(&lm);
            pairs.push((i, k, l));
            pending.insert((i, k));
        }
        basis.push(e);
    };

    for (j, g) in gens.iter().enumerate() {
        let g = g.with_order(order);
        let rep = track.then(|| {
            let mut r = vec![zero.clone(); ngens];
            r[j] = one.clone();
            r
        });
        let e = make_monic(reduce_element(g, rep, &basis, ngens));
        if !e.poly.is_zero() {
            add(&mut basis, &mut pairs, &mut pending, e);
        }
    }

    // normal strategy: smallest lcm under the order, ties by pair index
    while let Some(pos) = (0..pairs.len()).min_by(|&a, &b| {
        let (pa, pb) = (&pairs[a], &pairs[b]);
        order.cmp(&pa.2, &pb.2).then((pa.1, pa.0).cmp(&(pb.1, pb.0)))
    }) {
        let (i, j, l) = pairs.swap_remove(pos);
        pending.remove(&(i, j));
        if l.degree() > degree_cap {
            complete = false;
            continue;
        }
        let (li, lj) =
            (basis[i].poly.leading_monomial().unwrap().clone(), basis[j].poly.leading_monomial().unwrap().clone());
        if li.is_coprime(&lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].poly.leading_monomial().unwrap().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let qi = li.quotient_of(&l).unwrap();
        let qj = lj.quotient_of(&l).unwrap();
        let minus = -Scalar::one();
        let s = basis[i].poly.mul_monomial(&Scalar::one(), &qi).add_scaled(&minus, &qj, &basis[j].poly);
        let rep = track.then(|| {
            combine_reps(
                &vars,
                order,
                &[(&Scalar::one(), &qi, basis[i].rep.as_ref().unwrap()), (&minus, &qj, basis[j].rep.as_ref().unwrap())],
                ngens,
            )
        });
        let e = make_monic(reduce_element(s, rep, &basis, ngens));
        if !e.poly.is_zero() {
            add(&mut basis, &mut pairs, &mut pending, e);
        }
    }

    // minimalise: drop elements whose leading monomial is divisible by another's
    let lms: Vec<Monomial> = basis.iter().map(|e| e.poly.leading_monomial().unwrap().clone()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|k| !(0..basis.len()).any(|m| m != k && lms[m].divides(&lms[k]) && (lms[m] != lms[k] || m < k)))
        .collect();
    let mut minimal: Vec<Element> = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
    minimal.sort_by(|a, b| order.cmp(a.poly.leading_monomial().unwrap(), b.poly.leading_monomial().unwrap()));

    // inter-reduce tails
    for k in 0..minimal.len() {
        let e = std::mem::replace(&mut minimal[k], Element { poly: zero.clone(), rep: None });
        let others: Vec<Element> = minimal
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, o)| Element { poly: o.poly.clone(), rep: o.rep.clone() })
            .collect();
        let head = e.poly.terms()[0].clone();
        let tail = Polynomial::from_sorted(&vars, order, e.poly.terms()[1..].to_vec());
        let reduced_tail = reduce_element(tail, e.rep.clone().map(|_| vec![zero.clone(); ngens]), &others, ngens);
        let poly = Polynomial::from_sorted(&vars, order, vec![head]).add(&reduced_tail.poly);
        let rep = e.rep.map(|r| r.iter().zip(reduced_tail.rep.unwrap()).map(|(a, b)| a.add(&b)).collect::<Vec<_>>());
        minimal[k] = make_monic(Element { poly, rep });
    }

    let cofactors = track.then(|| minimal.iter().map(|e| e.rep.clone().unwrap()).collect());
    GroebnerBasis { order, degree_cap, complete, basis: minimal.into_iter().map(|e| e.poly).collect(), cofactors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial;

    fn p(v: &VarSet, s: &str) -> Polynomial {
        parse_polynomial(s, v, MonoOrder::DegRevLex).unwrap()
    }

    #[test]
    fn hand_division() {
        // x = x[1,1], y = x[1,2]
        let v = VarSet::with_count(2);
        let g = [p(&v, "x[1,1]^2 - x[1,2]")];
        assert!(normal_form(&p(&v, "x[1,1]^2 - x[1,2]"), &g).unwrap().is_zero());
        assert_eq!(normal_form(&p(&v, "x[1,1]^2*x[1,2]"), &g).unwrap(), p(&v, "x[1,2]^2"));
        let d = divide(&p(&v, "x[1,1]^2*x[1,2]"), &g).unwrap();
        assert_eq!(d.quotients[0], p(&v, "x[1,2]"));
    }

    #[test]
    fn textbook_basis() {
        let v = VarSet::with_count(2);
        let gens = [p(&v, "x[1,1]^2 + x[1,2]^2"), p(&v, "x[1,1]*x[1,2]")];
        let gb = buchberger(&gens, MonoOrder::DegRevLex, 10);
        assert!(gb.complete);
        assert!(gb.basis.contains(&p(&v, "x[1,2]^3")));
        let linear = [p(&v, "x[1,1]"), p(&v, "x[1,2]")];
        let gb = buchberger(&linear, MonoOrder::DegRevLex, 4);
        assert_eq!(gb.basis, vec![p(&v, "x[1,2]"), p(&v, "x[1,1]")]);
        assert!(buchberger(&[], MonoOrder::Lex, 4).basis.is_empty());
    }

    #[test]
    fn cofactors_recombine() {
        let v = VarSet::with_count(2);
        let gens = [p(&v, "x[1,1]^2 - x[1,2]"), p(&v, "x[1,1]^3")];
        let gb = buchberger_with_cofactors(&gens, MonoOrder::DegRevLex, 10);
        let target = p(&v, "x[1,2]^2");
        let cof = gb.lift(&target, 2).unwrap();
        let sum = cof[0].mul(&gens[0]).add(&cof[1].mul(&gens[1]));
        assert_eq!(sum, target);
    }
}
