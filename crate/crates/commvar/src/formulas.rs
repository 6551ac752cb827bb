//! Closed-form dimension statements, lower bounds, equidimensionality
//! thresholds and cohomological bound tables, all as executable formulas.
//!
//! Everything here is exact integer or rational arithmetic. The threshold
//! fractions are stored as rationals and compared strictly; each threshold is
//! re-derived from the underlying dimension inequality so the two routes can
//! be checked against each other.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Family, LieType};
use crate::variety::Locus;

pub type Frac = Ratio<i64>;

/// dim N + (r-1) l: the dimension of the component swept from a regular
/// nilpotent, and the dimension of C_r(N) whenever that variety is
/// irreducible or equidimensional.
pub fn regular_component_dim(t: LieType, r: usize) -> usize {
    t.dim_nilpotent_cone() + (r - 1) * t.rank()
}

/// dim u + (r-1) l: the Borel analogue inside C_r(u).
pub fn borel_component_dim(t: LieType, r: usize) -> usize {
    t.dim_u() + (r - 1) * t.rank()
}

/// dim of the saturation of the r-fold corner: (r+1) dim w.
pub fn saturation_dim(t: LieType, r: usize) -> usize {
    (r + 1) * t.dim_w()
}

/// Lower bound for dim C_r(u_1), any p >= 2: r dim w.
pub fn restricted_borel_lower_bound(t: LieType, r: usize) -> usize {
    r * t.dim_w()
}

/// Lower bound for dim C_r(N_1), any good p: (r+1) dim w.
pub fn restricted_cone_lower_bound(t: LieType, r: usize) -> usize {
    saturation_dim(t, r)
}

/// dim of the square-zero locus = dim of its dense orbit (types A and C).
pub fn square_zero_locus_dim(t: LieType) -> Result<usize> {
    let n = t.n() as i64;
    match t.family() {
        Family::A => {
            let tt = n % 2;
            Ok(((n * n - tt * tt) / 2) as usize)
        }
        Family::C => {
            let l = t.rank() as i64;
            Ok((l * l + l) as usize)
        }
        _ => Err(Error::UnsupportedLocus(format!(
            "square-zero locus dimension is stated for types A and C, not {}",
            t.name()
        ))),
    }
}

/// dim C_r(O2) = (r+1) dim w (types A and C).
pub fn square_zero_commuting_dim(t: LieType, r: usize) -> Result<usize> {
    match t.family() {
        Family::A | Family::C => Ok(saturation_dim(t, r)),
        _ => Err(Error::UnsupportedLocus(format!(
            "square-zero commuting dimension is stated for types A and C, not {}",
            t.name()
        ))),
    }
}

/// dim C_r(O2 meet u) = r dim w (types A and C).
pub fn square_zero_borel_commuting_dim(t: LieType, r: usize) -> Result<usize> {
    match t.family() {
        Family::A | Family::C => Ok(r * t.dim_w()),
        _ => Err(Error::UnsupportedLocus(format!(
            "square-zero-and-nilradical dimension is stated for types A and C, not {}",
            t.name()
        ))),
    }
}

/// Type A at p = 2: dim C_r(N_1) = (r+1) floor(n^2/4).
pub fn type_a_char_two_dim(n: usize, r: usize) -> usize {
    (r + 1) * (n * n / 4)
}

// --- equidimensionality thresholds ------------------------------------------

/// The displayed threshold fraction for non-equidimensionality of C_r(u):
/// C_r(u) is not equidimensional once r exceeds it. None outside the
/// fraction's domain.
pub fn borel_threshold(t: LieType) -> Option<Frac> {
    let l = t.rank() as i64;
    match t.family() {
        Family::A => {
            // both parities share 2 + 1/(m-1) with m = floor(n/2)
            let m = (t.n() / 2) as i64;
            if m <= 1 {
                None
            } else {
                Some(Frac::new(2 * m - 1, m - 1))
            }
        }
        Family::C => {
            // the derivation divides by l^2 - l
            if l <= 1 {
                None
            } else {
                Some(Frac::from_integer(2))
            }
        }
        Family::D => {
            if l <= 3 {
                None
            } else {
                Some(Frac::new(2 * l - 4, l - 3))
            }
        }
        Family::B => {
            if l <= 3 {
                None
            } else {
                Some(Frac::new(2 * l - 2, l - 3))
            }
        }
    }
}

/// The displayed threshold fraction for non-equidimensionality of C_r(N).
pub fn cone_threshold(t: LieType) -> Option<Frac> {
    let l = t.rank() as i64;
    match t.family() {
        Family::A => {
            let m = (t.n() / 2) as i64;
            if m <= 1 {
                None
            } else {
                Some(Frac::new(3 * m - 1, m - 1))
            }
        }
        Family::C => {
            if l <= 1 {
                None
            } else {
                Some(Frac::from_integer(3))
            }
        }
        Family::D => {
            if l <= 3 {
                None
            } else {
                Some(Frac::new(3 * l - 5, l - 3))
            }
        }
        Family::B => {
            if l <= 3 {
                None
            } else {
                Some(Frac::new(3 * l - 1, l - 3))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdVerdict {
    pub lie_type: LieType,
    pub r: usize,
    /// C_r(u) is forced non-equidimensional: r dim w exceeds the Borel
    /// component.
    pub borel_non_equidimensional: bool,
    /// C_r(N) is forced non-equidimensional: (r+1) dim w exceeds the regular
    /// component.
    pub cone_non_equidimensional: bool,
}

/// Evaluate r against both displayed thresholds and recompute the raw
/// dimension inequalities; errors if the two routes ever disagree, and
/// errors outside the fractions' domain.
pub fn threshold_check(t: LieType, r: usize) -> Result<ThresholdVerdict> {
    let (Some(bt), Some(ct)) = (borel_threshold(t), cone_threshold(t)) else {
        return Err(Error::OutOfDomain(format!(
            "threshold fractions are undefined for {}",
            t.name()
        )));
    };
    let rr = Frac::from_integer(r as i64);
    let by_fraction_u = rr > bt;
    let by_fraction_n = rr > ct;
    let by_inequality_u = r * t.dim_w() > borel_component_dim(t, r);
    let by_inequality_n = (r + 1) * t.dim_w() > regular_component_dim(t, r);
    if by_fraction_u != by_inequality_u || by_fraction_n != by_inequality_n {
        return Err(Error::Internal(format!(
            "threshold routes disagree for {} at r = {r}",
            t.name()
        )));
    }
    Ok(ThresholdVerdict {
        lie_type: t,
        r,
        borel_non_equidimensional: by_fraction_u,
        cone_non_equidimensional: by_fraction_n,
    })
}

// --- rank 2 ------------------------------------------------------------------

/// dim C_r(u_1) for the rank-2 types, by characteristic regime.
pub fn rank2_restricted_borel_dim(t: LieType, p: u64, r: usize) -> Result<usize> {
    match (t.family(), t.rank()) {
        (Family::A, 2) => Ok(if p == 2 { 2 * r } else { 2 * r + 1 }),
        (Family::C, 2) => {
            if p < 3 {
                return Err(Error::OutOfDomain(
                    "the C2 statement assumes p at least 3".into(),
                ));
            }
            Ok(if r == 1 && p != 3 { 4 } else { 3 * r })
        }
        _ => Err(Error::OutOfDomain(format!(
            "rank-2 formulas cover A2 and C2, not {}",
            t.name()
        ))),
    }
}

/// dim C_r(N_1) for the rank-2 types, by characteristic regime.
pub fn rank2_restricted_cone_dim(t: LieType, p: u64, r: usize) -> Result<usize> {
    match (t.family(), t.rank()) {
        (Family::A, 2) => Ok(if p == 2 { 2 * r + 2 } else { 2 * r + 4 }),
        (Family::C, 2) => {
            if p < 3 {
                return Err(Error::OutOfDomain(
                    "the C2 statement assumes p at least 3".into(),
                ));
            }
            Ok(if r <= 2 && p != 3 {
                2 * r + 6
            } else {
                3 * r + 3
            })
        }
        _ => Err(Error::OutOfDomain(format!(
            "rank-2 formulas cover A2 and C2, not {}",
            t.name()
        ))),
    }
}

// --- cohomology bounds --------------------------------------------------------

/// Lower bound for the Krull dimension of the degree-r Borel (and unipotent)
/// cohomology ring: r dim w. Via the spectrum identification this is the
/// bound for dim C_r(u_1).
pub fn borel_cohomology_lower_bound(t: LieType, r: usize) -> usize {
    r * t.dim_w()
}

/// Lower bound for the complexity of the trivial module over the r-th
/// Frobenius kernel, i.e. the Krull dimension of its cohomology ring:
/// (r+1) dim w.
pub fn frobenius_complexity_lower_bound(t: LieType, r: usize) -> usize {
    (r + 1) * t.dim_w()
}

/// The lower bounds are equalities for type A in characteristic 2.
pub fn bounds_are_equalities(t: LieType, p: u64) -> bool {
    t.family() == Family::A && p == 2
}

/// The constant c in the p > h*c hypothesis for the simple-module bound.
pub fn simple_module_constant(t: LieType) -> Frac {
    let l = t.rank() as i64;
    match t.family() {
        Family::A => Frac::new((l + 1) * (l + 1), 4),
        Family::B => Frac::new(l * (l + 1), 2),
        Family::C => Frac::new(l * l, 2),
        Family::D => Frac::new(l * (l - 1), 2),
    }
}

/// Rank-2 complexity ceiling for Borel Frobenius kernels.
pub fn rank2_borel_complexity_ceiling(t: LieType, p: u64, r: usize) -> Result<usize> {
    rank2_restricted_borel_dim(t, p, r)
}

/// Rank-2 complexity ceiling for the full Frobenius kernels: 2r+4 for A2 and
/// max(2r+6, 3r+3) for B2/C2 (the two share one Lie algebra in good
/// characteristic).
pub fn rank2_frobenius_complexity_ceiling(family: Family, r: usize) -> Result<usize> {
    match family {
        Family::A => Ok(2 * r + 4),
        Family::B | Family::C => Ok((2 * r + 6).max(3 * r + 3)),
        Family::D => Err(Error::OutOfDomain(
            "no rank-2 ceiling is stated for type D".into(),
        )),
    }
}

/// c_{G_r}(M) <= c_{B_r}(M) + dim u, checked at M = k where both sides are
/// known: (r+1) dim w on the left needs r dim w + dim u on the right.
pub fn complexity_relation_holds_for_trivial_module(t: LieType, r: usize) -> bool {
    frobenius_complexity_lower_bound(t, r) <= borel_cohomology_lower_bound(t, r) + t.dim_u()
}

/// One row of the bound table.
#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub lie_type: LieType,
    pub r: usize,
    pub borel_lower: usize,
    pub frobenius_lower: usize,
    /// Marked when the displayed bound is an equality (type A, p = 2).
    pub equality_at_p2: bool,
    /// The p > h*c hypothesis data for the simple-module bound.
    pub coxeter_number: usize,
    pub simple_module_constant: String,
}

pub fn bound_table(family: Family, max_rank: usize, max_r: usize) -> Result<Vec<BoundRow>> {
    let min_rank = match family {
        Family::A | Family::C => 1,
        Family::B => 2,
        Family::D => 3,
    };
    if max_rank < min_rank || max_r < 1 {
        return Err(Error::Input(
            "bound table needs max rank and max r at least the family minimum".into(),
        ));
    }
    let mut rows = Vec::new();
    for rank in min_rank..=max_rank {
        let t = LieType::new(family, rank)?;
        for r in 1..=max_r {
            rows.push(BoundRow {
                lie_type: t,
                r,
                borel_lower: borel_cohomology_lower_bound(t, r),
                frobenius_lower: frobenius_complexity_lower_bound(t, r),
                equality_at_p2: bounds_are_equalities(t, 2),
                coxeter_number: t.coxeter_number(),
                simple_module_constant: simple_module_constant(t).to_string(),
            });
        }
    }
    Ok(rows)
}

// --- engine expectations -------------------------------------------------------

/// A formula value attached to a computed dimension, with the claim it comes
/// from.
#[derive(Debug, Clone, Serialize)]
pub struct Expectation {
    pub value: i64,
    pub statement: String,
}

fn exp(value: usize, statement: impl Into<String>) -> Option<Expectation> {
    Some(Expectation {
        value: value as i64,
        statement: statement.into(),
    })
}

/// The catalog's prediction for dim C_r(locus) at the given characteristic,
/// when one of the closed forms applies.
pub fn expectation_for(t: LieType, locus: Locus, r: usize, p: u64) -> Option<Expectation> {
    let rank2 = t.rank() == 2;
    match locus {
        Locus::SquareZeroAbelian => exp(
            r * t.dim_w(),
            "the corner subalgebra is linear of dimension dim w",
        ),
        Locus::Nilradical => {
            if r == 1 {
                return exp(t.dim_u(), "the nilradical is linear");
            }
            match (t.family(), rank2) {
                (Family::A, true) => exp(
                    rank2_restricted_borel_dim(t, p, r).ok()?,
                    "rank-2 dimension of C_r(u) in type A2",
                ),
                (Family::C, true) if p >= 5 => exp(
                    rank2_restricted_borel_dim(t, p, r).ok()?,
                    "rank-2 dimension of C_r(u) in type C2",
                ),
                _ => None,
            }
        }
        Locus::SquareZero => exp(
            square_zero_commuting_dim(t, r).ok()?,
            "dim C_r(O2) = (r+1) dim w",
        ),
        Locus::SquareZeroCapU => exp(
            square_zero_borel_commuting_dim(t, r).ok()?,
            "dim C_r(O2 meet u) = r dim w",
        ),
        Locus::NilpotentCone => {
            if r == 1 {
                return exp(t.dim_nilpotent_cone(), "dim N = dim g - rank");
            }
            // irreducibility of C_r(N) is known for sl2 and sl3
            if t.family() == Family::A && t.rank() <= 2 {
                return exp(
                    regular_component_dim(t, r),
                    "C_r(N) is irreducible for sl2 and sl3",
                );
            }
            None
        }
        Locus::RestrictedNullcone { p: locus_p } => {
            if locus_p as usize >= t.coxeter_number() {
                return expectation_for(t, Locus::NilpotentCone, r, p);
            }
            if t.family() == Family::A && locus_p == 2 {
                return exp(
                    type_a_char_two_dim(t.n(), r),
                    "type A at p = 2: dim C_r(N_1) = (r+1) floor(n^2/4)",
                );
            }
            if t.family() == Family::C && t.rank() == 2 && locus_p == 3 {
                return exp(
                    saturation_dim(t, r),
                    "C2 at p = 3: the restricted nullcone is the square-zero locus",
                );
            }
            None
        }
    }
}
