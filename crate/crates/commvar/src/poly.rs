//! Sparse multivariate polynomials over an exact scalar ring, with the
//! degree-reverse-lexicographic order fixed throughout the crate.
//!
//! Ideal generators are `Poly<i64>`; the Groebner engine works on `Poly<Fp>`
//! after reduction mod p. Terms are kept sorted descending in degrevlex with
//! no zero coefficients.

use std::cmp::Ordering;

use crate::scalar::{gcd_i64, modp, Field, Fp, Scalar};

const PACK_BITS: usize = 6;
const PACK_MAX: u16 = 63;
const PACK_VARS: usize = 20;

/// Packed comparison key: total degree in the top bits, then complemented
/// exponents with the last variable most significant, so that one u128
/// comparison realizes degrevlex. None when the monomial does not fit.
fn pack_key(exps: &[u16]) -> Option<u128> {
    if exps.len() > PACK_VARS {
        return None;
    }
    let mut key: u128 = 0;
    let mut deg: u32 = 0;
    for (i, &e) in exps.iter().enumerate() {
        if e > PACK_MAX {
            return None;
        }
        deg += e as u32;
        key |= ((PACK_MAX - e) as u128) << (PACK_BITS * i);
    }
    if deg > 255 {
        return None;
    }
    Some(((deg as u128) << (PACK_BITS * PACK_VARS)) | key)
}

/// Exponent vector of fixed length (one slot per variable), with a cached
/// packed comparison key.
#[derive(Debug, Clone)]
pub struct Monomial {
    exps: Vec<u16>,
    key: Option<u128>,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl std::hash::Hash for Monomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial::from_exps(vec![0; num_vars])
    }

    pub fn var(index: usize, num_vars: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial::from_exps(exps)
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let key = pack_key(&exps);
        Monomial { exps, key }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn div_into(&self, other: &Self) -> Self {
        debug_assert!(self.divides(other));
        Monomial::from_exps(
            other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with positive exponent, as a bitmask (instances here never
    /// exceed 64 variables).
    pub fn support_mask(&self) -> u64 {
        assert!(self.exps.len() <= 64, "more than 64 variables");
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 1 {
                parts.push(names[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", names[i], e));
            }
        }
        parts.join("*")
    }
}

/// Degree-reverse-lexicographic comparison: higher total degree wins; on a
/// tie the monomial with the smaller exponent in the last differing variable
/// is the larger one. One integer comparison when both keys are packed.
pub fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    if let (Some(x), Some(y)) = (a.key, b.key) {
        return x.cmp(&y);
    }
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Sparse polynomial; terms sorted descending in degrevlex, no zero
/// coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<S> {
    num_vars: usize,
    terms: Vec<(Monomial, S)>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(num_vars: usize) -> Self {
        Poly {
            num_vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: S, num_vars: usize) -> Self {
        let mut p = Poly::zero(num_vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(num_vars), c));
        }
        p
    }

    pub fn var(index: usize, num_vars: usize) -> Self {
        Poly {
            num_vars,
            terms: vec![(Monomial::var(index, num_vars), S::one())],
        }
    }

    pub fn from_terms(num_vars: usize, terms: Vec<(Monomial, S)>) -> Self {
        let mut p = Poly { num_vars, terms };
        p.normalize();
        p
    }

    /// Construct from terms already sorted descending with no duplicates or
    /// zeros. Checked in debug builds only.
    pub fn from_sorted_terms(num_vars: usize, terms: Vec<(Monomial, S)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| degrevlex(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { num_vars, terms }
    }

    fn normalize(&mut self) {
        self.terms.sort_by(|a, b| degrevlex(&b.0, &a.0));
        let mut merged: Vec<(Monomial, S)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = last.1.clone() + c;
                    continue;
                }
            }
            merged.push((m, c));
        }
        merged.retain(|(_, c)| !c.is_zero());
        self.terms = merged;
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, S)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<(&Monomial, &S)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match degrevlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.clone() + other.terms[j].1.clone();
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly {
            num_vars: self.num_vars,
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        Poly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &S) -> Self {
        if c.is_zero() {
            return Poly::zero(self.num_vars);
        }
        Poly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut acc = Poly::zero(self.num_vars);
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c));
        }
        acc
    }

    /// Rename variables: new index = perm[old index]. perm must be a
    /// bijection on 0..num_vars.
    pub fn rename_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.num_vars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16; self.num_vars];
                for (old, &e) in m.exps().iter().enumerate() {
                    exps[perm[old]] = e;
                }
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Poly::from_terms(self.num_vars, terms)
    }

    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.num_vars);
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let cs = format!("{c}");
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if k == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(if sign == "-" { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&m.render(names));
            } else {
                s.push_str(&format!("{}*{}", mag, m.render(names)));
            }
        }
        s
    }
}

impl Poly<i64> {
    /// Divide out the integer content and make the leading coefficient
    /// positive. Deterministic canonical form for generator sets.
    pub fn content_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = 0i64;
        for (_, c) in &self.terms {
            g = gcd_i64(g, *c);
        }
        let sign = if self.terms[0].1 < 0 { -1 } else { 1 };
        let d = g * sign;
        Poly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c / d))
                .collect(),
        }
    }

    pub fn reduce_mod(&self, p: u64) -> Poly<Fp> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let v = Fp::from_i64(*c, p);
                if num_traits::Zero::is_zero(&v) {
                    None
                } else {
                    Some((m.clone(), v))
                }
            })
            .collect();
        Poly {
            num_vars: self.num_vars,
            terms,
        }
    }

    /// Evaluate over F_p on raw residues; the hot path for point counting.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> u64 {
        debug_assert_eq!(point.len(), self.num_vars);
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = modp::reduce_i64(*c, p);
            if t == 0 {
                continue;
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = modp::mul_mod(t, modp::pow_mod(point[i], e as u64, p), p);
                }
            }
            acc = modp::add_mod(acc, t, p);
        }
        acc
    }
}

impl<S: Field> Poly<S> {
    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                Poly {
                    num_vars: self.num_vars,
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, c)| (m.clone(), c.clone() * inv.clone()))
                        .collect(),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn degrevlex_ordering() {
        // x0 > x1 > x2 among degree-1 monomials
        assert_eq!(
            degrevlex(&mono(&[1, 0, 0]), &mono(&[0, 1, 0])),
            Ordering::Greater
        );
        assert_eq!(
            degrevlex(&mono(&[0, 1, 0]), &mono(&[0, 0, 1])),
            Ordering::Greater
        );
        // degree dominates
        assert_eq!(
            degrevlex(&mono(&[2, 0, 0]), &mono(&[0, 0, 1])),
            Ordering::Greater
        );
        // x1^2 > x0 x2 in degrevlex
        assert_eq!(
            degrevlex(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])),
            Ordering::Greater
        );
        assert_eq!(
            degrevlex(&mono(&[1, 1, 0]), &mono(&[1, 1, 0])),
            Ordering::Equal
        );
    }

    #[test]
    fn monomial_ops() {
        let a = mono(&[2, 1, 0]);
        let b = mono(&[1, 0, 3]);
        assert_eq!(a.mul(&b), mono(&[3, 1, 3]));
        assert_eq!(a.lcm(&b), mono(&[2, 1, 3]));
        assert!(mono(&[1, 0, 0]).divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(mono(&[1, 1, 0]).div_into(&a), mono(&[1, 0, 0]));
        assert!(mono(&[1, 0, 0]).is_coprime(&mono(&[0, 1, 1])));
        assert_eq!(a.support_mask(), 0b011);
    }

    #[test]
    fn arithmetic_and_normal_form() {
        let x: Poly<i64> = Poly::var(0, 2);
        let y: Poly<i64> = Poly::var(1, 2);
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        let expected = Poly::from_terms(2, vec![(mono(&[2, 0]), 1), (mono(&[0, 2]), -1)]);
        assert_eq!(p, expected);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn content_normalization() {
        let p = Poly::from_terms(2, vec![(mono(&[1, 1]), -4i64), (mono(&[0, 1]), -6)]);
        let n = p.content_normalize();
        assert_eq!(
            n,
            Poly::from_terms(2, vec![(mono(&[1, 1]), 2i64), (mono(&[0, 1]), 3)])
        );
    }

    #[test]
    fn eval_and_eval_mod() {
        // p = x^2 + 2 x y - 3
        let p = Poly::from_terms(
            2,
            vec![
                (mono(&[2, 0]), 1i64),
                (mono(&[1, 1]), 2),
                (mono(&[0, 0]), -3),
            ],
        );
        assert_eq!(p.eval(&[2, 3]), 4 + 12 - 3);
        assert_eq!(p.eval_mod(&[2, 3], 5), ((4 + 12 - 3) % 5) as u64);
        assert_eq!(p.eval_mod(&[0, 0], 5), 2); // -3 mod 5
    }

    #[test]
    fn rename_is_permutation_action() {
        let p = Poly::from_terms(3, vec![(mono(&[2, 1, 0]), 5i64)]);
        let q = p.rename_vars(&[1, 2, 0]);
        assert_eq!(q, Poly::from_terms(3, vec![(mono(&[0, 2, 1]), 5i64)]));
        let back = q.rename_vars(&[2, 0, 1]);
        assert_eq!(back, p);
    }

    #[test]
    fn render_readable() {
        let names: Vec<String> = vec!["x".into(), "y".into()];
        let p = Poly::from_terms(
            2,
            vec![
                (mono(&[2, 0]), 1i64),
                (mono(&[1, 1]), -2),
                (mono(&[0, 0]), 1),
            ],
        );
        assert_eq!(p.render(&names), "x^2 - 2*x*y + 1");
        assert_eq!(Poly::<i64>::zero(2).render(&names), "0");
    }

    #[test]
    fn monic_over_fp() {
        let p = Poly::from_terms(1, vec![(mono(&[2]), 3i64), (mono(&[0]), 1)]).reduce_mod(5);
        let m = p.monic();
        let (_, lead) = m.leading().unwrap();
        assert!(num_traits::One::is_one(lead));
        assert_eq!(m.terms()[1].1, Fp::new(2, 5)); // 3^{-1} = 2 mod 5
    }
}
