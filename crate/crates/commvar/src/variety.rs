//! Compile a commuting-variety instance C_r(V) into a polynomial ideal in
//! r * dim(V) variables with integer coefficients.
//!
//! The generators are the entries of the pairwise commutators [X_i, X_j] of
//! generic matrices of the ambient span, plus the locus constraints applied
//! to each block: powers of the generic matrix for the nilpotent cone, the
//! restricted nullcone and the square-zero locus; nothing for the linear
//! loci. Reduction mod p is deferred to the engine.

use std::collections::HashSet;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::lie::{construct_algebra, select_subalgebra, Family, LieType, SubalgebraTag};
use crate::matrix::Matrix;
use crate::poly::{Monomial, Poly};
use crate::scalar::is_prime_u64;
use crate::IntPoly;

/// The locus V inside the algebra that each tuple entry is constrained to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Locus {
    /// u: the nilradical (linear).
    Nilradical,
    /// w: the abelian square-zero corner (linear).
    SquareZeroAbelian,
    /// N: the nilpotent cone, cut out by X^n = 0.
    NilpotentCone,
    /// N_1: the restricted nullcone at characteristic p, cut out by X^p = 0
    /// (compiled identically to N when p is at least the Coxeter number).
    RestrictedNullcone { p: u64 },
    /// O_2: the square-zero locus X^2 = 0 (types A and C only).
    SquareZero,
    /// O_2 intersected with u (types A and C only).
    SquareZeroCapU,
}

impl Locus {
    pub fn short_name(&self) -> String {
        match self {
            Locus::Nilradical => "u".into(),
            Locus::SquareZeroAbelian => "w".into(),
            Locus::NilpotentCone => "N".into(),
            Locus::RestrictedNullcone { p } => format!("N1({p})"),
            Locus::SquareZero => "O2".into(),
            Locus::SquareZeroCapU => "O2u".into(),
        }
    }

    /// Parse a CLI locus name; `char_p` supplies p for the restricted
    /// nullcone.
    pub fn parse(name: &str, char_p: u64) -> Result<Locus> {
        match name.to_ascii_lowercase().as_str() {
            "u" => Ok(Locus::Nilradical),
            "w" => Ok(Locus::SquareZeroAbelian),
            "n" => Ok(Locus::NilpotentCone),
            "n1" => Ok(Locus::RestrictedNullcone { p: char_p }),
            "o2" => Ok(Locus::SquareZero),
            "o2u" | "o2capu" => Ok(Locus::SquareZeroCapU),
            other => Err(Error::Input(format!("unknown locus {other:?}"))),
        }
    }
}

/// A compiled instance: ambient basis, variable names, and the normalized
/// generator set.
#[derive(Debug, Clone)]
pub struct CommutingVarietyInstance {
    pub lie_type: LieType,
    pub locus: Locus,
    pub r: usize,
    /// Integer basis matrices of the ambient linear span of the locus.
    pub ambient: Vec<Matrix<i64>>,
    /// Variables: r blocks of block_size coordinates, named x_{i}_{j}.
    pub var_names: Vec<String>,
    pub block_size: usize,
    pub generators: Vec<IntPoly>,
}

impl CommutingVarietyInstance {
    pub fn num_vars(&self) -> usize {
        self.r * self.block_size
    }

    pub fn description(&self) -> String {
        format!(
            "C_{}({}) of {}",
            self.r,
            self.locus.short_name(),
            self.lie_type.name()
        )
    }
}

fn check_locus_supported(t: LieType, locus: Locus) -> Result<()> {
    match locus {
        Locus::SquareZero | Locus::SquareZeroCapU => match t.family() {
            Family::A | Family::C => Ok(()),
            Family::B | Family::D => Err(Error::UnsupportedLocus(format!(
                "square-zero locus is only modeled for types A and C, not {}",
                t.name()
            ))),
        },
        Locus::RestrictedNullcone { p } => {
            if is_prime_u64(p) {
                Ok(())
            } else {
                Err(Error::Input(format!(
                    "restricted nullcone needs a prime characteristic, got {p}"
                )))
            }
        }
        _ => Ok(()),
    }
}

/// Integer ambient basis of the span of the locus.
fn ambient_basis(t: LieType, locus: Locus) -> Vec<Matrix<i64>> {
    let g = construct_algebra(t);
    let to_int = |m: &crate::QMatrix| -> Matrix<i64> {
        m.map(|v| {
            debug_assert!(v.is_integer());
            let (sign, digits) = v.numer().to_u64_digits();
            let mag = digits.first().copied().unwrap_or(0) as i64;
            match sign {
                num_bigint::Sign::Minus => -mag,
                _ => mag,
            }
        })
    };
    match locus {
        Locus::Nilradical | Locus::SquareZeroCapU => {
            select_subalgebra(&g, SubalgebraTag::Nilradical)
                .basis
                .iter()
                .map(to_int)
                .collect()
        }
        Locus::SquareZeroAbelian => select_subalgebra(&g, SubalgebraTag::SquareZero)
            .basis
            .iter()
            .map(to_int)
            .collect(),
        _ => g.basis().iter().map(to_int).collect(),
    }
}

/// Exponent e such that the locus constraint is "entries of X^e vanish",
/// if any.
fn locus_power(t: LieType, locus: Locus) -> Option<usize> {
    match locus {
        Locus::Nilradical | Locus::SquareZeroAbelian => None,
        Locus::NilpotentCone => Some(t.n()),
        Locus::RestrictedNullcone { p } => {
            if p as usize >= t.coxeter_number() {
                Some(t.n())
            } else {
                Some(p as usize)
            }
        }
        Locus::SquareZero | Locus::SquareZeroCapU => Some(2),
    }
}

/// Square matrix of integer polynomials; just enough arithmetic to form
/// commutators and powers of generic matrices.
#[derive(Clone)]
struct PolyMatrix {
    n: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    fn zero(n: usize, num_vars: usize) -> Self {
        PolyMatrix {
            n,
            entries: vec![Poly::zero(num_vars); n * n],
        }
    }

    fn get(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, p: IntPoly) {
        self.entries[i * self.n + j] = p;
    }

    fn mul(&self, rhs: &Self) -> Self {
        let n = self.n;
        let nv = self.entries[0].num_vars();
        let mut out = PolyMatrix::zero(n, nv);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = a.sub(b);
        }
        out
    }

    fn pow(&self, e: usize) -> Self {
        assert!(e >= 1);
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// The generic matrix of one block: sum of x_{block,j} * b_j.
fn generic_matrix(
    ambient: &[Matrix<i64>],
    n: usize,
    num_vars: usize,
    block: usize,
) -> PolyMatrix {
    let d = ambient.len();
    let mut x = PolyMatrix::zero(n, num_vars);
    for (j, b) in ambient.iter().enumerate() {
        for row in 0..n {
            for col in 0..n {
                let c = *b.get(row, col);
                if c != 0 {
                    let term = Poly::from_terms(
                        num_vars,
                        vec![(Monomial::var(block * d + j, num_vars), c)],
                    );
                    let cur = x.get(row, col).add(&term);
                    x.set(row, col, cur);
                }
            }
        }
    }
    x
}

/// Push every entry of the matrix into the generator set, content-normalized
/// and deduplicated, preserving first-seen order.
fn collect_entries(
    m: &PolyMatrix,
    out: &mut Vec<IntPoly>,
    seen: &mut HashSet<Vec<(Vec<u16>, i64)>>,
) {
    for i in 0..m.n {
        for j in 0..m.n {
            let p = m.get(i, j).content_normalize();
            if p.is_zero() {
                continue;
            }
            let key: Vec<(Vec<u16>, i64)> = p
                .terms()
                .iter()
                .map(|(mo, c)| (mo.exps().to_vec(), *c))
                .collect();
            if seen.insert(key) {
                out.push(p);
            }
        }
    }
}

/// Compile C_r(V): pairwise commutator entries plus per-block locus
/// constraints, normalized and deduplicated.
pub fn compile(t: LieType, locus: Locus, r: usize) -> Result<CommutingVarietyInstance> {
    if r < 1 {
        return Err(Error::Input("tuple length r must be at least 1".into()));
    }
    check_locus_supported(t, locus)?;
    let ambient = ambient_basis(t, locus);
    let d = ambient.len();
    let n = t.n();
    let num_vars = r * d;
    if num_vars > 64 {
        return Err(Error::Resource(format!(
            "instance has {num_vars} variables; the engine is limited to 64"
        )));
    }
    let var_names: Vec<String> = (1..=r)
        .flat_map(|i| (1..=d).map(move |j| format!("x_{i}_{j}")))
        .collect();
    let blocks: Vec<PolyMatrix> = (0..r)
        .map(|i| generic_matrix(&ambient, n, num_vars, i))
        .collect();
    let mut generators = Vec::new();
    let mut seen = HashSet::new();
    for i in 0..r {
        for j in (i + 1)..r {
            let comm = blocks[i].mul(&blocks[j]).sub(&blocks[j].mul(&blocks[i]));
            collect_entries(&comm, &mut generators, &mut seen);
        }
    }
    if let Some(e) = locus_power(t, locus) {
        for block in &blocks {
            let power = block.pow(e);
            collect_entries(&power, &mut generators, &mut seen);
        }
    }
    Ok(CommutingVarietyInstance {
        lie_type: t,
        locus,
        r,
        ambient,
        var_names,
        block_size: d,
        generators,
    })
}

/// The determinantal superset of C_r(u) for C2: keep only the minors in the
/// first and fourth coordinates of each block. Its dimension reproduces the
/// 3r + 1 bound.
pub fn determinantal_relaxation(
    instance: &CommutingVarietyInstance,
) -> Result<CommutingVarietyInstance> {
    if instance.lie_type != LieType::new(Family::C, 2)?
        || instance.locus != Locus::Nilradical
    {
        return Err(Error::Input(
            "the determinantal relaxation is defined for the nilradical of C2".into(),
        ));
    }
    let d = instance.block_size;
    debug_assert_eq!(d, 4);
    let nv = instance.num_vars();
    let mut generators = Vec::new();
    // coordinates: index 0 is the first simple-root coordinate, index 3 the
    // inner one; minors x_i t_j - x_j t_i
    for i in 0..instance.r {
        for j in (i + 1)..instance.r {
            let xi: IntPoly = Poly::var(i * d, nv);
            let ti: IntPoly = Poly::var(i * d + 3, nv);
            let xj: IntPoly = Poly::var(j * d, nv);
            let tj: IntPoly = Poly::var(j * d + 3, nv);
            generators.push(xi.mul(&tj).sub(&xj.mul(&ti)).content_normalize());
        }
    }
    Ok(CommutingVarietyInstance {
        generators,
        ..instance.clone()
    })
}

/// Rename tuple blocks by a permutation of {0..r-1}; the generator multiset
/// must be preserved up to sign, which tests use as a compile symmetry check.
pub fn tuple_permute(instance: &CommutingVarietyInstance, sigma: &[usize]) -> Result<Vec<IntPoly>> {
    if sigma.len() != instance.r {
        return Err(Error::Input("permutation length must equal r".into()));
    }
    let mut check: Vec<usize> = sigma.to_vec();
    check.sort_unstable();
    if check != (0..instance.r).collect::<Vec<_>>() {
        return Err(Error::Input("not a permutation of the blocks".into()));
    }
    let d = instance.block_size;
    let mut perm = vec![0usize; instance.num_vars()];
    for (i, &si) in sigma.iter().enumerate() {
        for j in 0..d {
            perm[i * d + j] = si * d + j;
        }
    }
    Ok(instance
        .generators
        .iter()
        .map(|g| g.rename_vars(&perm).content_normalize())
        .collect())
}

/// Canonical form of a generator set for multiset comparison.
pub fn generator_multiset(gens: &[IntPoly]) -> Vec<Vec<(Vec<u16>, i64)>> {
    let mut keys: Vec<Vec<(Vec<u16>, i64)>> = gens
        .iter()
        .map(|p| {
            p.content_normalize()
                .terms()
                .iter()
                .map(|(m, c)| (m.exps().to_vec(), *c))
                .collect()
        })
        .collect();
    keys.sort();
    keys
}

/// One polynomial per line, variables by name, `^` for powers.
pub fn export_text(instance: &CommutingVarietyInstance) -> String {
    let mut s = String::new();
    for g in &instance.generators {
        s.push_str(&g.render(&instance.var_names));
        s.push('\n');
    }
    s
}

/// JSON export: variables plus each generator as a list of
/// {exponent vector, coefficient} pairs.
pub fn export_json(instance: &CommutingVarietyInstance) -> serde_json::Value {
    json!({
        "algebra": instance.lie_type.name(),
        "locus": instance.locus.short_name(),
        "r": instance.r,
        "vars": instance.var_names,
        "generators": instance.generators.iter().map(|g| {
            g.terms().iter().map(|(m, c)| json!({
                "exps": m.exps(),
                "coeff": c,
            })).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> LieType {
        LieType::new(Family::C, 2).unwrap()
    }

    fn a2() -> LieType {
        LieType::new(Family::A, 2).unwrap()
    }

    #[test]
    fn c2_nilradical_generators_match_known_presentation() {
        // 8 variables; generators reduce to exactly {x1 t2 - x2 t1,
        // x1 y2 - x2 y1} in the coordinates (x, y, z, t) per block
        let inst = compile(c2(), Locus::Nilradical, 2).unwrap();
        assert_eq!(inst.num_vars(), 8);
        assert_eq!(inst.generators.len(), 2);
        let nv = 8;
        let var = |k: usize| -> IntPoly { Poly::var(k, nv) };
        let xt = var(0).mul(&var(7)).sub(&var(4).mul(&var(3)));
        let xy = var(0).mul(&var(5)).sub(&var(4).mul(&var(1)));
        let expected = generator_multiset(&[xt, xy]);
        assert_eq!(generator_multiset(&inst.generators), expected);
    }

    #[test]
    fn r1_linear_locus_has_no_generators() {
        for locus in [Locus::Nilradical, Locus::SquareZeroAbelian] {
            let inst = compile(c2(), locus, 1).unwrap();
            assert!(inst.generators.is_empty());
        }
    }

    #[test]
    fn w_locus_commutators_vanish_identically() {
        // the corner subalgebra is abelian, so even r >= 2 yields nothing
        for t in [a2(), c2(), LieType::new(Family::A, 3).unwrap()] {
            let inst = compile(t, Locus::SquareZeroAbelian, 3).unwrap();
            assert!(
                inst.generators.is_empty(),
                "unexpected generators for {}",
                t.name()
            );
        }
    }

    #[test]
    fn sl2_cone_is_cut_by_squares() {
        let t = LieType::new(Family::A, 1).unwrap();
        let inst = compile(t, Locus::NilpotentCone, 1).unwrap();
        assert_eq!(inst.num_vars(), 3);
        assert!(!inst.generators.is_empty());
        // zero point satisfies everything
        let zero = vec![0u64; 3];
        for g in &inst.generators {
            assert_eq!(g.eval_mod(&zero, 5), 0);
        }
    }

    #[test]
    fn padding_property() {
        // generators of the r-instance embed into the (r+1)-instance
        let small = compile(c2(), Locus::Nilradical, 2).unwrap();
        let big = compile(c2(), Locus::Nilradical, 3).unwrap();
        let d = small.block_size;
        let embedded: Vec<IntPoly> = small
            .generators
            .iter()
            .map(|g| {
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        let mut exps = m.exps().to_vec();
                        exps.resize(3 * d, 0);
                        (Monomial::from_exps(exps), *c)
                    })
                    .collect();
                Poly::from_terms(3 * d, terms)
            })
            .collect();
        let big_set = generator_multiset(&big.generators);
        for g in generator_multiset(&embedded) {
            assert!(big_set.contains(&g), "missing embedded generator");
        }
    }

    #[test]
    fn w_points_satisfy_u_and_o2_instances() {
        // substituting zero for every non-corner coordinate must kill each
        // generator identically: w^r sits inside both C_r(u) and C_r(O2)
        fn kill_non_w(inst: &CommutingVarietyInstance, w_coords: &[usize]) {
            let d = inst.block_size;
            for gpoly in &inst.generators {
                let kill: Vec<usize> = (0..inst.num_vars())
                    .filter(|k| !w_coords.contains(&(k % d)))
                    .collect();
                let mut killed = gpoly.clone();
                for k in kill {
                    let terms = killed
                        .terms()
                        .iter()
                        .filter(|(m, _)| m.exps()[k] == 0)
                        .map(|(m, c)| (m.clone(), *c))
                        .collect();
                    killed = Poly::from_terms(inst.num_vars(), terms);
                }
                assert!(killed.is_zero(), "generator survives on w^r");
            }
        }
        for t in [a2(), c2()] {
            let g = construct_algebra(t);
            let w = select_subalgebra(&g, SubalgebraTag::SquareZero);
            let u = select_subalgebra(&g, SubalgebraTag::Nilradical);
            let w_in_u: Vec<usize> = u
                .basis
                .iter()
                .enumerate()
                .filter(|(_, b)| w.basis.contains(b))
                .map(|(k, _)| k)
                .collect();
            assert_eq!(w_in_u.len(), t.dim_w(), "w basis inside u basis");
            let w_in_g: Vec<usize> = g
                .basis()
                .iter()
                .enumerate()
                .filter(|(_, b)| w.basis.contains(b))
                .map(|(k, _)| k)
                .collect();
            assert_eq!(w_in_g.len(), t.dim_w(), "w basis inside g basis");
            for r in 1..=2 {
                kill_non_w(&compile(t, Locus::Nilradical, r).unwrap(), &w_in_u);
                kill_non_w(&compile(t, Locus::SquareZero, r).unwrap(), &w_in_g);
            }
        }
    }

    #[test]
    fn permutation_symmetry() {
        let inst = compile(c2(), Locus::Nilradical, 3).unwrap();
        let id = tuple_permute(&inst, &[0, 1, 2]).unwrap();
        assert_eq!(
            generator_multiset(&id),
            generator_multiset(&inst.generators)
        );
        let cyc = tuple_permute(&inst, &[1, 2, 0]).unwrap();
        assert_eq!(
            generator_multiset(&cyc),
            generator_multiset(&inst.generators)
        );
        let swap = tuple_permute(&inst, &[1, 0, 2]).unwrap();
        assert_eq!(
            generator_multiset(&swap),
            generator_multiset(&inst.generators)
        );
        assert!(tuple_permute(&inst, &[0, 0, 1]).is_err());
    }

    #[test]
    fn swapping_two_blocks_negates_commutator_generators() {
        let inst = compile(c2(), Locus::Nilradical, 2).unwrap();
        let d = inst.block_size;
        let mut perm = vec![0usize; 2 * d];
        for j in 0..d {
            perm[j] = d + j;
            perm[d + j] = j;
        }
        for g in &inst.generators {
            let renamed = g.rename_vars(&perm);
            assert_eq!(renamed, g.neg(), "antisymmetry under the block swap");
        }
    }

    #[test]
    fn unsupported_and_invalid_inputs() {
        let d4 = LieType::new(Family::D, 4).unwrap();
        assert!(matches!(
            compile(d4, Locus::SquareZero, 1),
            Err(Error::UnsupportedLocus(_))
        ));
        assert!(matches!(
            compile(c2(), Locus::RestrictedNullcone { p: 4 }, 1),
            Err(Error::Input(_))
        ));
        assert!(compile(c2(), Locus::Nilradical, 0).is_err());
    }

    #[test]
    fn restricted_nullcone_at_large_p_compiles_like_the_cone() {
        let t = a2();
        let cone = compile(t, Locus::NilpotentCone, 1).unwrap();
        let big_p = compile(t, Locus::RestrictedNullcone { p: 5 }, 1).unwrap();
        assert_eq!(
            generator_multiset(&cone.generators),
            generator_multiset(&big_p.generators)
        );
        // p = 2 < h = 3 uses squares instead
        let small_p = compile(t, Locus::RestrictedNullcone { p: 2 }, 1).unwrap();
        assert_ne!(
            generator_multiset(&cone.generators),
            generator_multiset(&small_p.generators)
        );
        let o2 = compile(t, Locus::SquareZero, 1).unwrap();
        assert_eq!(
            generator_multiset(&o2.generators),
            generator_multiset(&small_p.generators)
        );
    }

    #[test]
    fn determinantal_relaxation_generator_counts() {
        let inst1 = compile(c2(), Locus::Nilradical, 1).unwrap();
        assert!(determinantal_relaxation(&inst1).unwrap().generators.is_empty());
        let inst2 = compile(c2(), Locus::Nilradical, 2).unwrap();
        assert_eq!(determinantal_relaxation(&inst2).unwrap().generators.len(), 1);
        let inst3 = compile(c2(), Locus::Nilradical, 3).unwrap();
        assert_eq!(determinantal_relaxation(&inst3).unwrap().generators.len(), 3);
        let bad = compile(a2(), Locus::Nilradical, 2).unwrap();
        assert!(determinantal_relaxation(&bad).is_err());
    }

    #[test]
    fn export_formats() {
        let inst = compile(a2(), Locus::Nilradical, 2).unwrap();
        let text = export_text(&inst);
        assert_eq!(text.lines().count(), inst.generators.len());
        assert!(text.contains("x_1_"));
        let js = export_json(&inst);
        assert_eq!(js["vars"].as_array().unwrap().len(), 6);
        assert_eq!(
            js["generators"].as_array().unwrap().len(),
            inst.generators.len()
        );
    }
}
