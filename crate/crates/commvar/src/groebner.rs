//! Buchberger's algorithm over a prime field with Gebauer-Moller pair
//! elimination, reduced bases, and the Krull dimension of the quotient read
//! off the leading monomials.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::poly::{degrevlex, Monomial, Poly};
use crate::scalar::{is_prime_u64, Fp};
use num_traits::Zero;
use crate::{FpPoly, IntPoly};

/// Work limits. Defaults are sized so every acceptance instance finishes
/// within seconds; the CLI can override them.
#[derive(Debug, Clone, Copy)]
pub struct GroebnerConfig {
    /// Abort once this many S-pairs have been reduced.
    pub max_pairs: usize,
    /// Abort if a pair lcm exceeds this total degree.
    pub max_degree: u32,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pairs: 2_000_000,
            max_degree: 60,
        }
    }
}

/// A reduced Groebner basis over F_p under degrevlex.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub p: u64,
    pub num_vars: usize,
    pub polys: Vec<FpPoly>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .filter_map(|g| g.leading().map(|(m, _)| m.clone()))
            .collect()
    }

    pub fn contains_unit(&self) -> bool {
        self.polys.iter().any(|g| g.is_constant() && !g.is_zero())
    }
}

/// Leading-monomial lookup data for fast reducer search: support mask and
/// degree give a cheap rejection test before the full divisibility check.
struct ReducerIndex {
    masks: Vec<u64>,
    degrees: Vec<u32>,
}

impl ReducerIndex {
    fn build(basis: &[FpPoly]) -> Self {
        let mut idx = ReducerIndex {
            masks: Vec::with_capacity(basis.len()),
            degrees: Vec::with_capacity(basis.len()),
        };
        for g in basis {
            idx.push(g);
        }
        idx
    }

    fn push(&mut self, g: &FpPoly) {
        let (m, _) = g.leading().expect("no zero polys in the basis");
        self.masks.push(m.support_mask());
        self.degrees.push(m.degree());
    }

    fn find(&self, lm: &Monomial, basis: &[FpPoly]) -> Option<usize> {
        let mask = lm.support_mask();
        let deg = lm.degree();
        for (k, g) in basis.iter().enumerate() {
            if self.degrees[k] > deg || (self.masks[k] & !mask) != 0 {
                continue;
            }
            if g.leading().unwrap().0.divides(lm) {
                return Some(k);
            }
        }
        None
    }
}

struct HeapTerm {
    m: Monomial,
    c: Fp,
}

impl PartialEq for HeapTerm {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}
impl Eq for HeapTerm {}
impl Ord for HeapTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(&self.m, &other.m)
    }
}
impl PartialOrd for HeapTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Normal form of f modulo the basis: full reduction of every term, with a
/// term heap so each reduction step costs only the reducer tail instead of a
/// merge of the whole work polynomial.
fn reduce_indexed(f: &FpPoly, basis: &[FpPoly], index: &ReducerIndex) -> FpPoly {
    let nv = f.num_vars();
    let mut heap: BinaryHeap<HeapTerm> = f
        .terms()
        .iter()
        .map(|(m, c)| HeapTerm {
            m: m.clone(),
            c: *c,
        })
        .collect();
    let mut tail: Vec<(Monomial, Fp)> = Vec::new();
    while let Some(top) = heap.pop() {
        let lm = top.m;
        let mut lc = top.c;
        while let Some(next) = heap.peek() {
            if next.m != lm {
                break;
            }
            lc = lc + heap.pop().unwrap().c;
        }
        if lc.is_zero() {
            continue;
        }
        if let Some(k) = index.find(&lm, basis) {
            // push -(lm/gm) * lc * tail(g); g is monic so the head cancels
            let g = &basis[k];
            let q = g.leading().unwrap().0.div_into(&lm);
            for (m, c) in &g.terms()[1..] {
                heap.push(HeapTerm {
                    m: m.mul(&q),
                    c: -(*c * lc),
                });
            }
        } else {
            tail.push((lm, lc));
        }
    }
    Poly::from_sorted_terms(nv, tail)
}

/// Normal form against an ad-hoc basis (small inputs, interreduction,
/// tests).
fn reduce(f: &FpPoly, basis: &[FpPoly]) -> FpPoly {
    let nonzero: Vec<FpPoly> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let index = ReducerIndex::build(&nonzero);
    reduce_indexed(f, &nonzero, &index)
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; invert so the smallest lcm pops first
        degrevlex(&other.lcm, &self.lcm)
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Gebauer-Moller update: prune the pending pairs against the new element
/// and generate the surviving new pairs.
fn update_pairs(
    pairs: &mut Vec<Pair>,
    basis: &[FpPoly],
    new_index: usize,
) {
    let lt_new = basis[new_index].leading().unwrap().0.clone();
    // drop old pairs strictly superseded by the new element
    pairs.retain(|pr| {
        let (lti, _) = basis[pr.i].leading().unwrap();
        let (ltj, _) = basis[pr.j].leading().unwrap();
        if !lt_new.divides(&pr.lcm) {
            return true;
        }
        let lcm_i_new = lti.lcm(&lt_new);
        let lcm_j_new = ltj.lcm(&lt_new);
        lcm_i_new == pr.lcm || lcm_j_new == pr.lcm
    });
    // candidate new pairs (i, new)
    let mut fresh: Vec<Pair> = (0..new_index)
        .filter(|&i| basis[i].leading().is_some())
        .map(|i| {
            let lti = basis[i].leading().unwrap().0;
            let lcm = lti.lcm(&lt_new);
            Pair {
                i,
                j: new_index,
                degree: lcm.degree(),
                lcm,
            }
        })
        .collect();
    // among equal or divisible lcms keep minimal representatives
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..fresh.len() {
            if a == b || !keep[b] {
                continue;
            }
            if fresh[b].lcm.divides(&fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm {
                keep[a] = false;
                break;
            }
        }
    }
    // of the equal-lcm classes keep one; drop coprime pairs entirely
    let mut seen_lcms: Vec<Monomial> = Vec::new();
    for (idx, pr) in fresh.iter().enumerate() {
        if !keep[idx] {
            continue;
        }
        if seen_lcms.contains(&pr.lcm) {
            keep[idx] = false;
            continue;
        }
        seen_lcms.push(pr.lcm.clone());
        let lti = basis[pr.i].leading().unwrap().0;
        if lti.is_coprime(&lt_new) {
            keep[idx] = false; // product criterion
        }
    }
    for (idx, pr) in fresh.drain(..).enumerate() {
        if keep[idx] {
            pairs.push(pr);
        }
    }
}

/// S-polynomial of two monic polynomials.
fn s_poly(f: &FpPoly, g: &FpPoly) -> FpPoly {
    let (lf, _) = f.leading().unwrap();
    let (lg, _) = g.leading().unwrap();
    let lcm = lf.lcm(lg);
    let uf = lf.div_into(&lcm);
    let ug = lg.div_into(&lcm);
    let one = num_traits::One::one();
    f.mul_term(&uf, &one).sub(&g.mul_term(&ug, &one))
}

/// Reduced Groebner basis of integer generators over F_p under degrevlex.
pub fn groebner(
    generators: &[IntPoly],
    num_vars: usize,
    p: u64,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    if !is_prime_u64(p) {
        return Err(Error::Input(format!("characteristic {p} is not prime")));
    }
    let mut basis: Vec<FpPoly> = Vec::new();
    for g in generators {
        debug_assert_eq!(g.num_vars(), num_vars);
        let f = g.reduce_mod(p);
        if !f.is_zero() {
            basis.push(f.monic());
        }
    }
    // mutual reduction preserves the ideal (unlike minimality dropping,
    // which is only valid on a finished basis)
    basis = interreduce_preserving(basis);

    let mut pairs: Vec<Pair> = Vec::new();
    for k in 0..basis.len() {
        update_pairs(&mut pairs, &basis, k);
    }
    let mut heap: BinaryHeap<Pair> = pairs.drain(..).collect();
    let mut index = ReducerIndex::build(&basis);
    let mut processed = 0usize;

    while let Some(pair) = heap.pop() {
        processed += 1;
        if processed > config.max_pairs {
            return Err(Error::Resource(format!(
                "pair budget exceeded ({} pairs)",
                config.max_pairs
            )));
        }
        if pair.degree > config.max_degree {
            return Err(Error::Resource(format!(
                "degree bound exceeded (lcm degree {} > {})",
                pair.degree, config.max_degree
            )));
        }
        let s = s_poly(&basis[pair.i], &basis[pair.j]);
        let nf = reduce_indexed(&s, &basis, &index);
        if nf.is_zero() {
            continue;
        }
        basis.push(nf.monic());
        index.push(basis.last().unwrap());
        let new_index = basis.len() - 1;
        let mut pending: Vec<Pair> = heap.drain().collect();
        update_pairs(&mut pending, &basis, new_index);
        heap = pending.into_iter().collect();
    }

    let basis = interreduce(basis);
    Ok(GroebnerBasis {
        p,
        num_vars,
        polys: basis,
    })
}

/// Replace each element by its normal form against the others until stable.
/// Ideal-preserving, so safe on arbitrary generator sets.
fn interreduce_preserving(mut basis: Vec<FpPoly>) -> Vec<FpPoly> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let g = basis.remove(i);
            let r = reduce(&g, &basis);
            if r.is_zero() {
                changed = true;
                continue;
            }
            let r = r.monic();
            if r != g {
                changed = true;
            }
            basis.insert(i, r);
            i += 1;
        }
        if !changed {
            return basis;
        }
    }
}

/// Minimal, tail-reduced, monic, deterministically ordered basis. Only valid
/// once the Buchberger loop has finished.
fn interreduce(mut basis: Vec<FpPoly>) -> Vec<FpPoly> {
    basis.retain(|g| !g.is_zero());
    // minimality: drop any element whose leading monomial is divisible by
    // another's
    let mut minimal: Vec<FpPoly> = Vec::new();
    basis.sort_by(|a, b| degrevlex(a.leading().unwrap().0, b.leading().unwrap().0));
    for g in &basis {
        let lm = g.leading().unwrap().0;
        if !minimal
            .iter()
            .any(|h| h.leading().unwrap().0.divides(lm))
        {
            minimal.push(g.clone());
        }
    }
    // tail-reduce each against the others
    let snapshot = minimal.clone();
    let mut out: Vec<FpPoly> = Vec::new();
    for (k, g) in snapshot.iter().enumerate() {
        let others: Vec<FpPoly> = snapshot
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, h)| h.clone())
            .collect();
        let r = reduce(g, &others);
        if !r.is_zero() {
            out.push(r.monic());
        }
    }
    out.sort_by(|a, b| degrevlex(a.leading().unwrap().0, b.leading().unwrap().0));
    out
}

/// Buchberger criterion, asserted post-hoc on the output basis.
pub fn all_s_polys_reduce_to_zero(gb: &GroebnerBasis) -> bool {
    for i in 0..gb.polys.len() {
        for j in (i + 1)..gb.polys.len() {
            let s = s_poly(&gb.polys[i], &gb.polys[j]);
            if !reduce(&s, &gb.polys).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Normal form with respect to a computed basis (exposed for membership
/// style tests).
pub fn normal_form(f: &FpPoly, gb: &GroebnerBasis) -> FpPoly {
    reduce(f, &gb.polys)
}

/// Krull dimension of the quotient ring: the maximum size of a set S of
/// variables such that no leading monomial is supported entirely inside S.
/// Equivalently num_vars minus a minimum hitting set of the supports; solved
/// by branch and bound. The unit ideal reports -1 (empty variety).
pub fn ideal_dimension(gb: &GroebnerBasis, num_vars: usize) -> i64 {
    if gb.contains_unit() {
        return -1;
    }
    let mut supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support_mask())
        .collect();
    supports.sort();
    supports.dedup();
    // drop supersets: hitting a subset hits the superset
    let reduced: Vec<u64> = supports
        .iter()
        .copied()
        .filter(|&s| {
            !supports
                .iter()
                .any(|&t| t != s && (t & s) == t)
        })
        .collect();
    let all_vars: u64 = if num_vars == 64 {
        u64::MAX
    } else {
        (1u64 << num_vars) - 1
    };
    let mut best_removed = num_vars; // upper bound on the hitting set
    fn dfs(supports: &[u64], allowed: u64, removed: usize, best: &mut usize) {
        if removed >= *best {
            return;
        }
        // first support still inside the allowed set
        let Some(&s) = supports.iter().find(|&&s| (s & allowed) == s) else {
            *best = removed;
            return;
        };
        let mut vars = s;
        while vars != 0 {
            let v = vars & vars.wrapping_neg();
            vars ^= v;
            dfs(supports, allowed & !v, removed + 1, best);
        }
    }
    dfs(&reduced, all_vars, 0, &mut best_removed);
    (num_vars - best_removed) as i64
}
