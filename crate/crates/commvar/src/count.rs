//! Point counting over small prime fields: the independent cross-check of
//! the Groebner dimensions. A d-dimensional vanishing set has on the order
//! of q^d points over F_q, so the least-squares slope of log counts against
//! log q estimates the dimension.
//!
//! Enumeration is staged: the locus points of a single block are enumerated
//! once (q^block_size assignments), then tuples are counted by intersecting
//! adjoint kernels with the locus, which is exact and far cheaper than
//! scanning q^(r * block_size) assignments.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{modp, Fp};
use crate::variety::{compile, CommutingVarietyInstance};
use crate::FpMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CountMode {
    /// Exact staged enumeration.
    Enumerate,
    /// Seeded uniform sampling of all variable assignments.
    Sample { samples: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct CountOutcome {
    pub q: u64,
    /// Exact point count (enumerate mode).
    pub count: Option<u128>,
    /// Unbiased estimate q^vars * hits / samples with its standard error
    /// (sample mode). Never auto-rounded to a dimension.
    pub estimate: Option<f64>,
    pub std_error: Option<f64>,
}

/// xorshift64*: small deterministic generator for the sampling mode.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }
    fn below(&mut self, bound: u64) -> u64 {
        // rejection sampling to stay unbiased
        let limit = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next();
            if v < limit {
                return v % bound;
            }
        }
    }
}

fn checked_pow(q: u64, e: usize, budget: u64) -> Result<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc
            .checked_mul(q)
            .filter(|&v| v <= budget)
            .ok_or_else(|| {
                Error::Resource(format!(
                    "enumeration of q^{e} assignments at q = {q} exceeds the budget {budget}"
                ))
            })?;
    }
    Ok(acc)
}

/// Materialize a block element from its coordinates.
fn block_matrix(inst: &CommutingVarietyInstance, coords: &[u64], q: u64) -> FpMatrix {
    let n = inst.lie_type.n();
    let mut m: FpMatrix = Matrix::zero(n, n);
    for (c, b) in coords.iter().zip(&inst.ambient) {
        if *c == 0 {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                let e = *b.get(i, j);
                if e != 0 {
                    let add = modp::mul_mod(*c, modp::reduce_i64(e, q), q);
                    let cur = *m.get(i, j);
                    m.set(i, j, cur + Fp::new(add, q));
                }
            }
        }
    }
    m
}

/// Locus membership of a single block element, evaluated on the generators
/// of the r = 1 instance.
struct LocusTest {
    single_gens: Vec<crate::IntPoly>,
}

impl LocusTest {
    fn new(inst: &CommutingVarietyInstance) -> Result<Self> {
        let single = compile(inst.lie_type, inst.locus, 1)?;
        Ok(LocusTest {
            single_gens: single.generators,
        })
    }

    fn contains(&self, coords: &[u64], q: u64) -> bool {
        self.single_gens
            .iter()
            .all(|g| g.eval_mod(coords, q) == 0)
    }
}

/// All locus points of one block over F_q, as coordinate vectors.
fn enumerate_locus(
    inst: &CommutingVarietyInstance,
    q: u64,
    budget: u64,
) -> Result<Vec<Vec<u64>>> {
    let d = inst.block_size;
    checked_pow(q, d, budget)?;
    let test = LocusTest::new(inst)?;
    let mut out = Vec::new();
    let mut coords = vec![0u64; d];
    loop {
        if test.contains(&coords, q) {
            out.push(coords.clone());
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == d {
                return Ok(out);
            }
            coords[k] += 1;
            if coords[k] < q {
                break;
            }
            coords[k] = 0;
            k += 1;
        }
    }
}

/// Coordinates of the kernel of y -> [x, y] on the ambient span over F_q.
fn adjoint_kernel(
    inst: &CommutingVarietyInstance,
    x: &FpMatrix,
    q: u64,
) -> Vec<Vec<u64>> {
    let n = inst.lie_type.n();
    let d = inst.block_size;
    let mut ad: FpMatrix = Matrix::zero(n * n, d);
    for (k, b) in inst.ambient.iter().enumerate() {
        let bq = b.map(|&v| Fp::from_i64(v, q));
        let br = x.bracket(&bq).expect("square matrices");
        for i in 0..n {
            for j in 0..n {
                ad.set(i * n + j, k, *br.get(i, j));
            }
        }
    }
    ad.kernel_basis()
        .into_iter()
        .map(|v| v.into_iter().map(|c| (Fp::new(0, q) + c).value()).collect())
        .collect()
}

/// Exact count of commuting r-tuples on the locus.
fn count_tuples(
    inst: &CommutingVarietyInstance,
    q: u64,
    budget: u64,
) -> Result<u128> {
    let locus_points = enumerate_locus(inst, q, budget)?;
    let r = inst.r;
    if r == 1 {
        return Ok(locus_points.len() as u128);
    }
    let d = inst.block_size;
    let test = LocusTest::new(inst)?;
    if r == 2 {
        // sum over x of |z(x) on the locus|, via kernel enumeration
        let mut total: u128 = 0;
        let mut work: u64 = 0;
        for coords in &locus_points {
            let x = block_matrix(inst, coords, q);
            let kernel = adjoint_kernel(inst, &x, q);
            let nullity = kernel.len();
            let fiber = checked_pow(q, nullity, budget)?;
            work = work.saturating_add(fiber);
            if work > budget {
                return Err(Error::Resource(format!(
                    "kernel enumeration exceeds the budget {budget}"
                )));
            }
            let mut combo = vec![0u64; nullity];
            loop {
                let mut y = vec![0u64; d];
                for (c, kv) in combo.iter().zip(&kernel) {
                    if *c != 0 {
                        for (yj, kj) in y.iter_mut().zip(kv) {
                            *yj = modp::add_mod(*yj, modp::mul_mod(*c, *kj, q), q);
                        }
                    }
                }
                if test.contains(&y, q) {
                    total += 1;
                }
                let mut k = 0;
                loop {
                    if k == nullity {
                        break;
                    }
                    combo[k] += 1;
                    if combo[k] < q {
                        break;
                    }
                    combo[k] = 0;
                    k += 1;
                }
                if k == nullity {
                    break;
                }
            }
        }
        return Ok(total);
    }
    // r >= 3: depth-first search over tuples with a pairwise commutation
    // adjacency; feasible only for small locus sets
    let len = locus_points.len() as u64;
    if len.saturating_mul(len) > budget {
        return Err(Error::Resource(format!(
            "pairwise adjacency on {len} locus points exceeds the budget {budget}"
        )));
    }
    let mats: Vec<FpMatrix> = locus_points
        .iter()
        .map(|c| block_matrix(inst, c, q))
        .collect();
    let m = mats.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        adj[i][i] = true;
        for j in (i + 1)..m {
            let commutes = mats[i].bracket(&mats[j]).expect("square").is_zero();
            adj[i][j] = commutes;
            adj[j][i] = commutes;
        }
    }
    fn dfs(adj: &[Vec<bool>], chosen: &mut Vec<usize>, depth: usize, r: usize) -> u128 {
        if depth == r {
            return 1;
        }
        let mut total = 0u128;
        for cand in 0..adj.len() {
            if chosen.iter().all(|&c| adj[c][cand]) {
                chosen.push(cand);
                total += dfs(adj, chosen, depth + 1, r);
                chosen.pop();
            }
        }
        total
    }
    Ok(dfs(&adj, &mut Vec::new(), 0, r))
}

/// Count (or estimate) the points of the instance over F_q.
pub fn count_points(
    inst: &CommutingVarietyInstance,
    q: u64,
    mode: CountMode,
    budget: u64,
    seed: u64,
) -> Result<CountOutcome> {
    if !crate::scalar::is_prime_u64(q) {
        return Err(Error::Input(format!(
            "point counting is implemented over prime fields; {q} is not prime"
        )));
    }
    match mode {
        CountMode::Enumerate => {
            let count = count_tuples(inst, q, budget)?;
            Ok(CountOutcome {
                q,
                count: Some(count),
                estimate: None,
                std_error: None,
            })
        }
        CountMode::Sample { samples } => {
            if samples == 0 {
                return Err(Error::Input("sample count must be positive".into()));
            }
            let nv = inst.num_vars();
            let mut rng = Rng::new(seed);
            let mut hits = 0u64;
            let mut point = vec![0u64; nv];
            for _ in 0..samples {
                for slot in point.iter_mut() {
                    *slot = rng.below(q);
                }
                if inst
                    .generators
                    .iter()
                    .all(|g| g.eval_mod(&point, q) == 0)
                {
                    hits += 1;
                }
            }
            let total = (q as f64).powi(nv as i32);
            let rate = hits as f64 / samples as f64;
            let estimate = total * rate;
            let std_error = total * (rate * (1.0 - rate) / samples as f64).sqrt();
            Ok(CountOutcome {
                q,
                count: None,
                estimate: Some(estimate),
                std_error: Some(std_error),
            })
        }
    }
}

/// Least-squares slope of log count against log q, with the residual sum of
/// squares of the fit. Needs at least two distinct counts.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub residual: f64,
    pub points: usize,
}

pub fn slope_fit(counts: &[(u64, u128)]) -> Result<SlopeFit> {
    let usable: Vec<(f64, f64)> = counts
        .iter()
        .filter(|(_, c)| *c > 0)
        .map(|(q, c)| ((*q as f64).ln(), (*c as f64).ln()))
        .collect();
    if usable.len() < 2 {
        return Err(Error::Input(
            "slope fit needs at least two positive counts".into(),
        ));
    }
    let n = usable.len() as f64;
    let mean_x = usable.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = usable.iter().map(|(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = usable.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    let sxy: f64 = usable
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual: f64 = usable
        .iter()
        .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
        .sum();
    Ok(SlopeFit {
        slope,
        residual,
        points: usable.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieType;
    use crate::variety::Locus;

    fn count(alg: &str, locus: Locus, r: usize, q: u64) -> u128 {
        let t: LieType = alg.parse().unwrap();
        let inst = compile(t, locus, r).unwrap();
        count_points(&inst, q, CountMode::Enumerate, 100_000_000, 1)
            .unwrap()
            .count
            .unwrap()
    }

    #[test]
    fn whole_linear_space_counts() {
        // C_1(u) of A2 over F_2: the whole 3-dimensional space
        assert_eq!(count("A2", Locus::Nilradical, 1, 2), 8);
        assert_eq!(count("A2", Locus::Nilradical, 1, 3), 27);
        // zero ideal in m variables has q^m points: r = 2 on the abelian
        // corner of sl4 gives 8 free coordinates
        assert_eq!(count("sl4", Locus::SquareZeroAbelian, 2, 2), 256);
    }

    #[test]
    fn sl2_nilpotent_pairs_match_known_counts() {
        // the commuting nilpotent pairs of sl2 number q^3 + q^2 - q
        for q in [2u64, 3, 5, 7] {
            let expected = (q * q * q + q * q - q) as u128;
            assert_eq!(count("A1", Locus::NilpotentCone, 2, q), expected);
        }
    }

    #[test]
    fn sl2_cone_counts() {
        // q^2 nilpotent matrices in sl2
        for q in [2u64, 3, 5] {
            assert_eq!(count("A1", Locus::NilpotentCone, 1, q), (q * q) as u128);
        }
    }

    #[test]
    fn slope_of_sl2_pairs_is_three_ish() {
        let counts: Vec<(u64, u128)> = [2u64, 3, 5, 7]
            .iter()
            .map(|&q| (q, count("A1", Locus::NilpotentCone, 2, q)))
            .collect();
        let fit = slope_fit(&counts).unwrap();
        assert!(
            fit.slope > 2.5 && fit.slope < 3.5,
            "slope {} out of range",
            fit.slope
        );
    }

    #[test]
    fn triples_agree_with_direct_dfs() {
        // r = 3 path: commuting triples in the nilradical of A2 over F_2
        let c3 = count("A2", Locus::Nilradical, 3, 2);
        // brute-force count over all q^9 assignments for comparison
        let t: LieType = "A2".parse().unwrap();
        let inst = compile(t, Locus::Nilradical, 3).unwrap();
        let q = 2u64;
        let nv = inst.num_vars();
        let mut brute = 0u128;
        for code in 0..(q.pow(nv as u32)) {
            let mut point = vec![0u64; nv];
            let mut c = code;
            for slot in point.iter_mut() {
                *slot = c % q;
                c /= q;
            }
            if inst.generators.iter().all(|g| g.eval_mod(&point, q) == 0) {
                brute += 1;
            }
        }
        assert_eq!(c3, brute);
    }

    #[test]
    fn sampling_is_seeded_and_reasonable() {
        let t: LieType = "A1".parse().unwrap();
        let inst = compile(t, Locus::NilpotentCone, 1).unwrap();
        let a = count_points(&inst, 5, CountMode::Sample { samples: 4000 }, 1_000_000, 42)
            .unwrap();
        let b = count_points(&inst, 5, CountMode::Sample { samples: 4000 }, 1_000_000, 42)
            .unwrap();
        assert_eq!(a.estimate, b.estimate);
        // true count is 25 of 125; the estimate should be in the right ballpark
        let est = a.estimate.unwrap();
        assert!(est > 5.0 && est < 60.0, "estimate {est}");
        assert!(a.std_error.unwrap() > 0.0);
    }

    #[test]
    fn budget_and_input_errors() {
        let t: LieType = "A2".parse().unwrap();
        let inst = compile(t, Locus::NilpotentCone, 2).unwrap();
        assert!(matches!(
            count_points(&inst, 3, CountMode::Enumerate, 10, 1),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            count_points(&inst, 4, CountMode::Enumerate, 1000, 1),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn slope_fit_needs_two_points() {
        assert!(slope_fit(&[(2, 100)]).is_err());
        let fit = slope_fit(&[(2, 4), (3, 9), (5, 25)]).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-9);
        assert!(fit.residual < 1e-12);
    }
}
