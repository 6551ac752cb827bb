//! Nilpotent orbit combinatorics: partition validity and duality per
//! classical type, the closed orbit-dimension formulas, explicit nilpotent
//! representatives compatible with the defining bilinear forms, and the
//! adjoint-kernel centralizer oracle that validates the formulas.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{construct_algebra, Family, LieAlgebraBasis, LieType};
use crate::matrix::Matrix;
use crate::{rat, QMatrix, Rat};

/// Weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Input("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn dual(&self) -> Partition {
        let max = self.parts[0];
        let parts = (1..=max)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    pub fn count_odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// p dominates q: partial sums of p are at least those of q.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.total() != other.total() {
            return false;
        }
        let mut sa = 0usize;
        let mut sb = 0usize;
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            sa += self.parts.get(i).copied().unwrap_or(0);
            sb += other.parts.get(i).copied().unwrap_or(0);
            if sa < sb {
                return false;
            }
        }
        true
    }

    /// Validity as a nilpotent Jordan type in the given classical type:
    /// any partition of n for type A; even parts with even multiplicity for
    /// the orthogonal types; odd parts with even multiplicity for the
    /// symplectic type.
    pub fn is_valid_for(&self, t: LieType) -> bool {
        if self.total() != t.n() {
            return false;
        }
        match t.family() {
            Family::A => true,
            Family::B | Family::D => (2..=self.parts[0])
                .step_by(2)
                .all(|d| self.parts.iter().filter(|&&p| p == d).count() % 2 == 0),
            Family::C => (1..=self.parts[0])
                .step_by(2)
                .all(|d| self.parts.iter().filter(|&&p| p == d).count() % 2 == 0),
        }
    }

    /// Very even partitions (type D, all parts even) label two orbits of the
    /// same dimension.
    pub fn is_very_even_for(&self, t: LieType) -> bool {
        t.family() == Family::D && self.parts.iter().all(|&p| p % 2 == 0)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions of n, in a fixed order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            prefix.push(next);
            rec(remaining - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All valid nilpotent Jordan types for the given classical type.
pub fn valid_partitions(t: LieType) -> Vec<Partition> {
    partitions_of(t.n())
        .into_iter()
        .filter(|p| p.is_valid_for(t))
        .collect()
}

/// A nilpotent orbit label with its closed-form dimension.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitDescriptor {
    pub lie_type: LieType,
    pub partition: Partition,
    pub dim: usize,
    pub valid: bool,
    /// Two orbits share this label (and dimension) in type D.
    pub very_even: bool,
}

/// Closed orbit-dimension formulas per classical family, in terms of the
/// dual partition d and the number of odd parts:
///   type A:  n^2 - sum d_i^2
///   type C:  2l^2 + l - (sum d_i^2 + #odd)/2
///   types B, D (so_m): (m^2 - m)/2 - (sum d_i^2 - #odd)/2
pub fn orbit_dim(t: LieType, p: &Partition) -> Result<usize> {
    if !p.is_valid_for(t) {
        return Err(Error::Input(format!(
            "partition {p} is not a nilpotent type in {}",
            t.name()
        )));
    }
    let dual = p.dual();
    let sum_sq: usize = dual.parts().iter().map(|d| d * d).sum();
    let odd = p.count_odd_parts();
    let n = t.n();
    let dim = match t.family() {
        Family::A => n * n - sum_sq,
        Family::C => {
            let l = t.rank();
            2 * l * l + l - (sum_sq + odd) / 2
        }
        Family::B | Family::D => (n * n - n) / 2 - (sum_sq - odd) / 2,
    };
    Ok(dim)
}

/// Dimension of the kernel of y -> [x, y] on the algebra, by exact
/// nullspace. This is the oracle the closed formulas are checked against.
pub fn centralizer_dim(g: &LieAlgebraBasis, x: &QMatrix) -> Result<usize> {
    if !g.contains(x) {
        return Err(Error::Input(
            "element does not lie in the span of the algebra".into(),
        ));
    }
    let n = g.n();
    let dim = g.dim();
    // columns are the flattened brackets [x, b_k]
    let mut ad = Matrix::zero(n * n, dim);
    for (k, b) in g.basis().iter().enumerate() {
        let br = x.bracket(b)?;
        for i in 0..n {
            for j in 0..n {
                ad.set(i * n + j, k, br.get(i, j).clone());
            }
        }
    }
    Ok(dim - ad.rank())
}

/// The dense orbit inside the square-zero locus, with partition [2^s, 1^t].
/// Only types A and C have a unique such orbit.
pub fn square_zero_max_orbit(t: LieType) -> Result<OrbitDescriptor> {
    let n = t.n();
    let partition = match t.family() {
        Family::A => {
            let tt = n % 2;
            let s = (n - tt) / 2;
            let mut parts = vec![2; s];
            parts.extend(std::iter::repeat_n(1, tt));
            Partition::new(parts)?
        }
        Family::C => Partition::new(vec![2; t.rank()])?,
        Family::B | Family::D => {
            return Err(Error::UnsupportedLocus(format!(
                "the square-zero locus of {} is not the closure of a unique orbit",
                t.name()
            )));
        }
    };
    let dim = orbit_dim(t, &partition)?;
    Ok(OrbitDescriptor {
        lie_type: t,
        partition: partition.clone(),
        dim,
        valid: true,
        very_even: partition.is_very_even_for(t),
    })
}

// --- representatives -------------------------------------------------------
//
// A representative of Jordan type p is assembled from chunks, each of which
// is a nilpotent inside a smaller algebra of the same kind in the same
// split anti-diagonal realization:
//   - a single even part in sp_d, or a single odd part in so_d, is a shift
//     matrix with signs arranged for form invariance;
//   - an equal pair [d, d] places a shift block in the upper-left quadrant
//     and its mirrored negative in the lower-right;
//   - two unequal odd parts in an orthogonal algebra use the alternating
//     pairing model on each block, made split by an explicit hyperbolic
//     change of basis.
// Chunks are then scattered onto nested symmetric index rings of {0..n-1},
// which restores the global anti-diagonal form on each chunk.

#[derive(Debug, Clone, PartialEq)]
enum Chunk {
    /// One part, self-paired: even size in sp, odd size in so.
    Single(usize),
    /// Equal pair [d, d] via the block-diagonal trick.
    EqualPair(usize),
    /// Two distinct odd parts in an orthogonal algebra.
    OddPair(usize, usize),
}

impl Chunk {
    fn size(&self) -> usize {
        match self {
            Chunk::Single(d) => *d,
            Chunk::EqualPair(d) => 2 * d,
            Chunk::OddPair(a, b) => a + b,
        }
    }
}

fn chunk_partition(t: LieType, p: &Partition) -> Vec<Chunk> {
    let mut evens: Vec<usize> = p.parts().iter().copied().filter(|d| d % 2 == 0).collect();
    let mut odds: Vec<usize> = p.parts().iter().copied().filter(|d| d % 2 == 1).collect();
    evens.sort_unstable_by(|a, b| b.cmp(a));
    odds.sort_unstable_by(|a, b| b.cmp(a));
    let mut chunks = Vec::new();
    match t.family() {
        Family::C => {
            for d in evens {
                chunks.push(Chunk::Single(d));
            }
            // odd parts come in equal pairs by validity
            let mut it = odds.into_iter();
            while let (Some(a), Some(b)) = (it.next(), it.next()) {
                debug_assert_eq!(a, b);
                chunks.push(Chunk::EqualPair(a));
            }
        }
        Family::B | Family::D => {
            // even parts come in equal pairs by validity
            let mut it = evens.into_iter();
            while let (Some(a), Some(b)) = (it.next(), it.next()) {
                debug_assert_eq!(a, b);
                chunks.push(Chunk::EqualPair(a));
            }
            // pair odd parts consecutively; one remains iff n is odd
            let mut i = 0;
            while i + 1 < odds.len() {
                let (a, b) = (odds[i], odds[i + 1]);
                if a == b {
                    chunks.push(Chunk::EqualPair(a));
                } else {
                    chunks.push(Chunk::OddPair(a, b));
                }
                i += 2;
            }
            if i < odds.len() {
                chunks.push(Chunk::Single(odds[i]));
            }
        }
        Family::A => unreachable!("type A representatives do not use chunks"),
    }
    // even-sized chunks outermost, the odd single (if any) innermost;
    // among even chunks keep a fixed deterministic order
    chunks.sort_by(|a, b| {
        let odd_a = a.size() % 2;
        let odd_b = b.size() % 2;
        odd_a
            .cmp(&odd_b)
            .then(b.size().cmp(&a.size()))
            .then_with(|| format!("{a:?}").cmp(&format!("{b:?}")))
    });
    chunks
}

/// Shift matrix with superdiagonal entries +1 on the first half and -1 after,
/// which is form-invariant for the local split form of either kind.
fn single_block(d: usize, positive: usize) -> QMatrix {
    Matrix::from_fn(d, d, |i, j| {
        if j == i + 1 {
            if i < positive {
                rat(1)
            } else {
                rat(-1)
            }
        } else {
            rat(0)
        }
    })
}

/// [d, d] inside the size-2d algebra: shift block in the m11 quadrant, its
/// negated anti-transpose in m22.
fn equal_pair_block(d: usize) -> QMatrix {
    let m = 2 * d;
    Matrix::from_fn(m, m, |i, j| {
        if j == i + 1 && i + 1 < d {
            rat(1)
        } else if j == i + 1 && i >= d {
            rat(-1)
        } else {
            rat(0)
        }
    })
}

/// Two odd blocks d1 > d2 in so_(d1+d2): build the alternating-pairing model
/// and conjugate it into the split anti-diagonal form by an explicit
/// hyperbolic basis.
fn odd_pair_block(d1: usize, d2: usize) -> QMatrix {
    assert!(d1 % 2 == 1 && d2 % 2 == 1 && d1 != d2);
    let m = d1 + d2;
    // model Gram: B(u_i, u_{d1+1-i}) = (-1)^i, B(w_j, w_{d2+1-j}) = c (-1)^{j+1}
    // with c chosen so the two middle values multiply to -1 (1-indexed).
    let s1: i64 = if d1.div_ceil(2).is_multiple_of(2) { 1 } else { -1 };
    // middle of block two before scaling: -(-1)^{(d2+1)/2}
    let raw2: i64 = if d2.div_ceil(2).is_multiple_of(2) { -1 } else { 1 };
    let c = -s1 * raw2; // force s2 = c * raw2 = -s1
    let s2 = c * raw2;
    debug_assert_eq!(s1 * s2, -1);

    // model coordinates: u_1..u_d1 then w_1..w_d2 (0-indexed storage)
    let gram_u = |i: usize| -> i64 {
        // cross value B(u_i, u_{d1+1-i}), 1-indexed i
        if i.is_multiple_of(2) {
            1
        } else {
            -1
        }
    };
    let gram_w = |j: usize| -> i64 {
        c * if (j + 1).is_multiple_of(2) { 1 } else { -1 }
    };

    // shift matrix in model coordinates
    let mut shift: QMatrix = Matrix::zero(m, m);
    for i in 1..d1 {
        shift.set(i - 1, i, rat(1)); // u_{i+1} -> u_i
    }
    for j in 1..d2 {
        shift.set(d1 + j - 1, d1 + j, rat(1));
    }

    // hyperbolic pairs (e, f) with B(e,f) = 1, B(e,e) = B(f,f) = 0
    let mut pairs: Vec<(Vec<Rat>, Vec<Rat>)> = Vec::new();
    let basis_vec = |idx: usize, scale: Rat| -> Vec<Rat> {
        let mut v = vec![rat(0); m];
        v[idx] = scale;
        v
    };
    for i in 1..=(d1 - 1) / 2 {
        let a = gram_u(i);
        pairs.push((
            basis_vec(i - 1, rat(1)),
            basis_vec(d1 - i, rat(1) / rat(a)),
        ));
    }
    for j in 1..=(d2 - 1) / 2 {
        let a = gram_w(j);
        pairs.push((
            basis_vec(d1 + j - 1, rat(1)),
            basis_vec(d1 + d2 - j, rat(1) / rat(a)),
        ));
    }
    // the two middle vectors combine into the innermost hyperbolic pair
    let mid1 = d1 / 2; // 0-indexed middle of block one
    let mid2 = d1 + d2 / 2;
    let mut e = vec![rat(0); m];
    e[mid1] = rat(1);
    e[mid2] = rat(1);
    let mut f = vec![rat(0); m];
    f[mid1] = rat(1) / rat(2 * s1);
    f[mid2] = -rat(1) / rat(2 * s1);
    pairs.push((e, f));

    // new basis: pair k occupies local positions (k, m-1-k)
    let mut basis_change: QMatrix = Matrix::zero(m, m);
    for (k, (e, f)) in pairs.iter().enumerate() {
        for row in 0..m {
            basis_change.set(row, k, e[row].clone());
            basis_change.set(row, m - 1 - k, f[row].clone());
        }
    }
    let inv = basis_change
        .inverse()
        .expect("hyperbolic basis is invertible");
    inv.mul(&shift).mul(&basis_change)
}

/// Nested symmetric index rings for the chunk sizes: each even-sized chunk
/// takes the outermost unused indices on both ends; an odd-sized chunk takes
/// the middle as well.
fn assign_rings(n: usize, chunks: &[Chunk]) -> Vec<Vec<usize>> {
    let mut lo = 0usize;
    let mut hi = n; // exclusive
    let mut rings = Vec::new();
    for ch in chunks {
        let size = ch.size();
        let half = size / 2;
        let mut ring = Vec::with_capacity(size);
        ring.extend(lo..lo + half);
        if size % 2 == 1 {
            // an odd chunk is placed last, so it owns the exact middle
            debug_assert_eq!(hi - lo, size);
            ring.push(lo + half);
        }
        ring.extend(hi - half..hi);
        lo += half;
        hi -= half;
        rings.push(ring);
    }
    rings
}

/// Explicit nilpotent representative of the given Jordan type inside the
/// fixed realization. Postconditions (membership in the algebra, Jordan
/// type) are re-checked by callers and the test suites rather than assumed.
pub fn partition_representative(t: LieType, p: &Partition) -> Result<QMatrix> {
    if !p.is_valid_for(t) {
        return Err(Error::Input(format!(
            "partition {p} is not a nilpotent type in {}",
            t.name()
        )));
    }
    let n = t.n();
    if t.family() == Family::A {
        // direct sum of shift blocks, largest first
        let mut x = Matrix::zero(n, n);
        let mut offset = 0;
        for &d in p.parts() {
            for i in 0..d.saturating_sub(1) {
                x.set(offset + i, offset + i + 1, rat(1));
            }
            offset += d;
        }
        return Ok(x);
    }
    let chunks = chunk_partition(t, p);
    let rings = assign_rings(n, &chunks);
    let mut x = Matrix::zero(n, n);
    for (ch, ring) in chunks.iter().zip(&rings) {
        let local = match (ch, t.family()) {
            (Chunk::Single(d), Family::C) => single_block(*d, d / 2),
            (Chunk::Single(d), _) => single_block(*d, (d - 1) / 2),
            (Chunk::EqualPair(d), _) => equal_pair_block(*d),
            (Chunk::OddPair(a, b), _) => odd_pair_block(*a, *b),
        };
        let m = ch.size();
        for i in 0..m {
            for j in 0..m {
                let v = local.get(i, j);
                if !num_traits::Zero::is_zero(v) {
                    x.set(ring[i], ring[j], v.clone());
                }
            }
        }
    }
    Ok(x)
}

/// Representative together with its oracle data; convenience for the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub lie_type: LieType,
    pub partition: Partition,
    pub valid: bool,
    pub dim: Option<usize>,
    pub centralizer_dim: Option<usize>,
    pub very_even: bool,
}

pub fn orbit_report(t: LieType, p: &Partition) -> OrbitReport {
    if !p.is_valid_for(t) {
        return OrbitReport {
            lie_type: t,
            partition: p.clone(),
            valid: false,
            dim: None,
            centralizer_dim: None,
            very_even: false,
        };
    }
    let dim = orbit_dim(t, p).ok();
    let g = construct_algebra(t);
    let cdim = partition_representative(t, p)
        .ok()
        .and_then(|x| centralizer_dim(&g, &x).ok());
    OrbitReport {
        lie_type: t,
        partition: p.clone(),
        valid: true,
        dim,
        centralizer_dim: cdim,
        very_even: p.is_very_even_for(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{jordan_type, regular_nilpotent, w_representative};

    fn lt(f: Family, r: usize) -> LieType {
        LieType::new(f, r).unwrap()
    }

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(pt(&[2, 2]).dual(), pt(&[2, 2]));
        assert_eq!(pt(&[2, 2, 1]).dual(), pt(&[3, 2]));
        assert_eq!(pt(&[5]).dual(), pt(&[1, 1, 1, 1, 1]));
        for p in partitions_of(6) {
            assert_eq!(p.dual().dual(), p);
        }
    }

    #[test]
    fn validity_rules() {
        // type C: odd parts need even multiplicity
        assert!(pt(&[2, 2]).is_valid_for(lt(Family::C, 2)));
        assert!(pt(&[1, 1, 1, 1]).is_valid_for(lt(Family::C, 2)));
        assert!(!pt(&[3, 1]).is_valid_for(lt(Family::C, 2)));
        assert!(pt(&[3, 3, 2]).is_valid_for(lt(Family::C, 4)));
        // type B/D: even parts need even multiplicity
        assert!(pt(&[3, 1, 1]).is_valid_for(lt(Family::B, 2)));
        assert!(!pt(&[4, 1]).is_valid_for(lt(Family::B, 2)));
        assert!(pt(&[2, 2, 1]).is_valid_for(lt(Family::B, 2)));
        assert!(pt(&[4, 4]).is_valid_for(lt(Family::D, 4)));
        // total must match
        assert!(!pt(&[2, 2]).is_valid_for(lt(Family::A, 4)));
    }

    #[test]
    fn orbit_dim_examples() {
        // sl4, [2,2] -> 8
        assert_eq!(orbit_dim(lt(Family::A, 3), &pt(&[2, 2])).unwrap(), 8);
        // sl5, [2,2,1] -> 12
        assert_eq!(orbit_dim(lt(Family::A, 4), &pt(&[2, 2, 1])).unwrap(), 12);
        // sp4, [2,2] -> 6
        assert_eq!(orbit_dim(lt(Family::C, 2), &pt(&[2, 2])).unwrap(), 6);
        // sl2, [2] -> 2
        assert_eq!(orbit_dim(lt(Family::A, 1), &pt(&[2])).unwrap(), 2);
        // regular orbits have dimension dim g - rank
        for t in [
            lt(Family::A, 3),
            lt(Family::B, 2),
            lt(Family::C, 2),
            lt(Family::D, 3),
        ] {
            let reg = match t.family() {
                Family::A => pt(&[t.n()]),
                Family::B => pt(&[t.n()]),
                Family::C => pt(&[t.n()]),
                Family::D => {
                    let mut parts = vec![t.n() - 1, 1];
                    parts.sort_unstable_by(|a, b| b.cmp(a));
                    Partition::new(parts).unwrap()
                }
            };
            assert_eq!(
                orbit_dim(t, &reg).unwrap(),
                t.dim() - t.rank(),
                "{}",
                t.name()
            );
        }
        assert!(orbit_dim(lt(Family::C, 2), &pt(&[3, 1])).is_err());
    }

    #[test]
    fn centralizer_oracle_small() {
        // (sl2, E12) -> 1
        let g = construct_algebra(lt(Family::A, 1));
        let e12 = Matrix::unit(2, 0, 1, rat(1));
        assert_eq!(centralizer_dim(&g, &e12).unwrap(), 1);
        // (sl4, representative of [2,2]) -> 7 = 15 - 8
        let g = construct_algebra(lt(Family::A, 3));
        let x = partition_representative(lt(Family::A, 3), &pt(&[2, 2])).unwrap();
        assert_eq!(centralizer_dim(&g, &x).unwrap(), 7);
        // (sp4, representative of [2,2]) -> 4 = 10 - 6
        let g = construct_algebra(lt(Family::C, 2));
        let x = partition_representative(lt(Family::C, 2), &pt(&[2, 2])).unwrap();
        assert_eq!(centralizer_dim(&g, &x).unwrap(), 4);
        // not in the span
        let not_in = Matrix::unit(4, 0, 0, rat(1));
        assert!(centralizer_dim(&g, &not_in).is_err());
    }

    #[test]
    fn representatives_have_declared_jordan_type() {
        for t in [
            lt(Family::A, 3),
            lt(Family::B, 2),
            lt(Family::B, 3),
            lt(Family::C, 2),
            lt(Family::C, 3),
            lt(Family::D, 3),
            lt(Family::D, 4),
        ] {
            let g = construct_algebra(t);
            for p in valid_partitions(t) {
                let x = partition_representative(t, &p).unwrap();
                assert!(g.is_member(&x), "{} {p} representative not in algebra", t);
                assert!(g.contains(&x), "{} {p} representative not in span", t);
                assert_eq!(
                    jordan_type(&x).unwrap(),
                    p.parts().to_vec(),
                    "{} {p} wrong Jordan type",
                    t
                );
            }
        }
    }

    #[test]
    fn master_identity_rank_two() {
        for t in [lt(Family::A, 2), lt(Family::B, 2), lt(Family::C, 2)] {
            let g = construct_algebra(t);
            for p in valid_partitions(t) {
                let x = partition_representative(t, &p).unwrap();
                let z = centralizer_dim(&g, &x).unwrap();
                assert_eq!(
                    orbit_dim(t, &p).unwrap(),
                    t.dim() - z,
                    "{} {p} formula vs oracle",
                    t
                );
            }
        }
    }

    #[test]
    fn square_zero_orbit_data() {
        // sl5 -> [2,2,1], dim 12
        let d = square_zero_max_orbit(lt(Family::A, 4)).unwrap();
        assert_eq!(d.partition, pt(&[2, 2, 1]));
        assert_eq!(d.dim, 12);
        // sp4 -> [2,2], dim 6
        let d = square_zero_max_orbit(lt(Family::C, 2)).unwrap();
        assert_eq!(d.partition, pt(&[2, 2]));
        assert_eq!(d.dim, 6);
        // sl2 -> [2], dim 2
        let d = square_zero_max_orbit(lt(Family::A, 1)).unwrap();
        assert_eq!(d.partition, pt(&[2]));
        assert_eq!(d.dim, 2);
        // orthogonal types are refused
        assert!(matches!(
            square_zero_max_orbit(lt(Family::D, 4)),
            Err(Error::UnsupportedLocus(_))
        ));
        // equals twice the corner dimension for A and C
        for t in [
            lt(Family::A, 1),
            lt(Family::A, 4),
            lt(Family::C, 2),
            lt(Family::C, 4),
        ] {
            assert_eq!(square_zero_max_orbit(t).unwrap().dim, 2 * t.dim_w());
        }
    }

    #[test]
    fn regular_and_corner_elements_match_oracle() {
        for t in [
            lt(Family::A, 2),
            lt(Family::B, 2),
            lt(Family::C, 2),
            lt(Family::D, 3),
        ] {
            let g = construct_algebra(t);
            let xreg = regular_nilpotent(&g);
            assert_eq!(
                centralizer_dim(&g, &xreg).unwrap(),
                t.rank(),
                "regular centralizer in {}",
                t
            );
        }
        // the corner representative realizes the dense square-zero orbit
        for t in [lt(Family::A, 3), lt(Family::A, 4), lt(Family::C, 2)] {
            let g = construct_algebra(t);
            let xw = w_representative(&g);
            let jt = jordan_type(&xw).unwrap();
            let p = Partition::new(jt).unwrap();
            assert_eq!(
                orbit_dim(t, &p).unwrap(),
                square_zero_max_orbit(t).unwrap().dim
            );
            let z = centralizer_dim(&g, &xw).unwrap();
            assert_eq!(t.dim() - z, 2 * t.dim_w());
        }
    }

    #[test]
    fn dominance_respected_at_small_rank() {
        for t in [lt(Family::A, 3), lt(Family::C, 2), lt(Family::B, 2)] {
            let ps = valid_partitions(t);
            for p in &ps {
                for q in &ps {
                    if p.dominates(q) {
                        assert!(
                            orbit_dim(t, p).unwrap() >= orbit_dim(t, q).unwrap(),
                            "{}: {p} dominates {q}",
                            t
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_dims_are_even() {
        for t in [lt(Family::A, 3), lt(Family::B, 2), lt(Family::C, 3)] {
            for p in valid_partitions(t) {
                assert_eq!(orbit_dim(t, &p).unwrap() % 2, 0, "{} {p}", t);
            }
        }
    }

    #[test]
    fn very_even_flag() {
        assert!(pt(&[4, 4]).is_very_even_for(lt(Family::D, 4)));
        assert!(pt(&[2, 2, 2, 2]).is_very_even_for(lt(Family::D, 4)));
        assert!(!pt(&[5, 3]).is_very_even_for(lt(Family::D, 4)));
        assert!(!pt(&[2, 2]).is_very_even_for(lt(Family::C, 2)));
    }

    #[test]
    fn partition_representative_examples() {
        // (A1, [2]) -> E12
        let x = partition_representative(lt(Family::A, 1), &pt(&[2])).unwrap();
        assert_eq!(x, Matrix::unit(2, 0, 1, rat(1)));
        // (A2, [2,1]) -> E12
        let x = partition_representative(lt(Family::A, 2), &pt(&[2, 1])).unwrap();
        assert_eq!(x, Matrix::unit(3, 0, 1, rat(1)));
        // (C2, [2,2]) has the same orbit data as the corner representative
        let x = partition_representative(lt(Family::C, 2), &pt(&[2, 2])).unwrap();
        assert_eq!(jordan_type(&x).unwrap(), vec![2, 2]);
    }
}
