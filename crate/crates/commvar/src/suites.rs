//! Verification suites: each suite compares computed quantities against the
//! formula catalog and renders one row per claim. A failing row names the
//! exact statement it contradicts.

use serde::Serialize;

use crate::count::{count_points, slope_fit, CountMode};
use crate::engine::{dimension, EngineConfig, Method};
use crate::error::{Error, Result};
use crate::formulas;
use crate::lie::{
    construct_algebra, regular_nilpotent, select_subalgebra, w_representative, Family, LieType,
    SubalgebraTag,
};
use crate::orbit::{
    centralizer_dim, orbit_dim, partition_representative, square_zero_max_orbit, valid_partitions,
};
use crate::variety::{compile, determinantal_relaxation, Locus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowVerdict {
    Match,
    Mismatch,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteRow {
    /// Content-addressed claim id, e.g. "dim-w/C2" or "cru/A2/r2".
    pub id: String,
    /// The claim being checked, in words.
    pub statement: String,
    pub expected: String,
    pub computed: String,
    pub verdict: RowVerdict,
}

impl SuiteRow {
    fn check(id: String, statement: String, expected: impl ToString, computed: impl ToString) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let verdict = if expected == computed {
            RowVerdict::Match
        } else {
            RowVerdict::Mismatch
        };
        SuiteRow {
            id,
            statement,
            expected,
            computed,
            verdict,
        }
    }

    fn error(id: String, statement: String, err: &Error) -> Self {
        SuiteRow {
            id,
            statement,
            expected: String::new(),
            computed: format!("{err}"),
            verdict: RowVerdict::Error,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == RowVerdict::Match)
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let idw = self.rows.iter().map(|r| r.id.len()).max().unwrap_or(4).max(4);
        let exw = self
            .rows
            .iter()
            .map(|r| r.expected.len())
            .max()
            .unwrap_or(8)
            .max(8);
        out.push_str(&format!(
            "{:idw$}  {:>exw$}  {:>10}  verdict\n",
            "id", "expected", "computed"
        ));
        for row in &self.rows {
            let verdict = match row.verdict {
                RowVerdict::Match => "match",
                RowVerdict::Mismatch => "MISMATCH",
                RowVerdict::Error => "ERROR",
            };
            out.push_str(&format!(
                "{:idw$}  {:>exw$}  {:>10}  {}\n",
                row.id, row.expected, row.computed, verdict
            ));
        }
        let (matches, total) = (
            self.rows
                .iter()
                .filter(|r| r.verdict == RowVerdict::Match)
                .count(),
            self.rows.len(),
        );
        out.push_str(&format!("{matches}/{total} rows match\n"));
        out
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub max_rank: usize,
    pub max_r: usize,
    pub engine: EngineConfig,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_rank: 6,
            max_r: 3,
            engine: EngineConfig::default(),
        }
    }
}

fn all_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 1..=max_rank {
            if let Ok(t) = LieType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out
}

/// Construction suite: dims, bracket closure, form invariance for every
/// family and rank up to the cap.
fn constructions(opts: &SuiteOptions) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    for t in all_types(opts.max_rank) {
        let g = construct_algebra(t);
        let name = t.name();
        rows.push(SuiteRow::check(
            format!("dim-g/{name}"),
            format!("dimension of {} matches its closed form", t.algebra_name()),
            t.dim(),
            g.dim(),
        ));
        let u = select_subalgebra(&g, SubalgebraTag::Nilradical);
        rows.push(SuiteRow::check(
            format!("dim-u/{name}"),
            "nilradical dimension (dim g - rank)/2".into(),
            t.dim_u(),
            u.dim(),
        ));
        let w = select_subalgebra(&g, SubalgebraTag::SquareZero);
        rows.push(SuiteRow::check(
            format!("dim-w/{name}"),
            "corner subalgebra dimension matches the four-case display".into(),
            t.dim_w(),
            w.dim(),
        ));
        rows.push(SuiteRow::check(
            format!("closure/{name}"),
            "bracket closure holds exactly".into(),
            true,
            g.bracket_closure_holds(),
        ));
        rows.push(SuiteRow::check(
            format!("form/{name}"),
            "form invariance (or tracelessness) for every basis element".into(),
            true,
            g.form_invariance_holds(),
        ));
        rows.push(SuiteRow::check(
            format!("independent/{name}"),
            "basis is linearly independent".into(),
            true,
            g.basis_is_independent(),
        ));
        let ww = w_representative(&g);
        rows.push(SuiteRow::check(
            format!("w-square-zero/{name}"),
            "corner representative squares to zero".into(),
            true,
            ww.mul(&ww).is_zero() && g.is_member(&ww),
        ));
    }
    rows
}

/// Orbit suite: the closed dimension formula against the adjoint-kernel
/// oracle for every valid partition, the square-zero orbit data, and the
/// regular orbit.
fn orbits(opts: &SuiteOptions) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    let cap = opts.max_rank.min(4);
    for t in all_types(cap) {
        let g = construct_algebra(t);
        let name = t.name();
        for p in valid_partitions(t) {
            let id = format!("orbit/{name}/{p}");
            let statement =
                format!("orbit dimension formula equals dim g - centralizer for {p} in {name}");
            match (|| -> Result<(usize, usize)> {
                let formula = orbit_dim(t, &p)?;
                let x = partition_representative(t, &p)?;
                let oracle = t.dim() - centralizer_dim(&g, &x)?;
                Ok((formula, oracle))
            })() {
                Ok((formula, oracle)) => {
                    rows.push(SuiteRow::check(id, statement, formula, oracle))
                }
                Err(e) => rows.push(SuiteRow::error(id, statement, &e)),
            }
        }
        // regular orbit: centralizer dimension equals the rank
        let xreg = regular_nilpotent(&g);
        let id = format!("regular/{name}");
        match centralizer_dim(&g, &xreg) {
            Ok(z) => rows.push(SuiteRow::check(
                id,
                "regular nilpotent centralizer has dimension rank".into(),
                t.rank(),
                z,
            )),
            Err(e) => rows.push(SuiteRow::error(
                id,
                "regular nilpotent centralizer has dimension rank".into(),
                &e,
            )),
        }
        // dominance monotonicity, aggregated
        let ps = valid_partitions(t);
        let monotone = ps.iter().all(|p| {
            ps.iter().all(|q| {
                !p.dominates(q) || orbit_dim(t, p).unwrap() >= orbit_dim(t, q).unwrap()
            })
        });
        rows.push(SuiteRow::check(
            format!("dominance/{name}"),
            "orbit dimension respects the dominance order".into(),
            true,
            monotone,
        ));
        let even = ps.iter().all(|p| orbit_dim(t, p).unwrap().is_multiple_of(2));
        rows.push(SuiteRow::check(
            format!("even/{name}"),
            "orbit dimensions are even".into(),
            true,
            even,
        ));
    }
    // square-zero orbit data: type A up to sl8, type C up to sp8
    for rank in 1..=7usize {
        let t = LieType::new(Family::A, rank).unwrap();
        let n = t.n() as i64;
        let tt = n % 2;
        let id = format!("o2-orbit/{}", t.name());
        match square_zero_max_orbit(t) {
            Ok(d) => rows.push(SuiteRow::check(
                id,
                "square-zero orbit dimension is (n^2 - t^2)/2".into(),
                ((n * n - tt * tt) / 2) as usize,
                d.dim,
            )),
            Err(e) => rows.push(SuiteRow::error(id, "square-zero orbit".into(), &e)),
        }
    }
    for rank in 1..=4usize {
        let t = LieType::new(Family::C, rank).unwrap();
        let id = format!("o2-orbit/{}", t.name());
        match square_zero_max_orbit(t) {
            Ok(d) => rows.push(SuiteRow::check(
                id,
                "square-zero orbit dimension is l^2 + l".into(),
                rank * rank + rank,
                d.dim,
            )),
            Err(e) => rows.push(SuiteRow::error(id, "square-zero orbit".into(), &e)),
        }
    }
    // the square-zero orbit is twice the corner dimension (oracle route)
    for t in [
        LieType::new(Family::A, 3).unwrap(),
        LieType::new(Family::A, 4).unwrap(),
        LieType::new(Family::C, 2).unwrap(),
        LieType::new(Family::C, 3).unwrap(),
    ] {
        rows.push(SuiteRow::check(
            format!("o2-twice-w/{}", t.name()),
            "square-zero orbit dimension equals 2 dim w".into(),
            2 * t.dim_w(),
            square_zero_max_orbit(t).map(|d| d.dim).unwrap_or(usize::MAX),
        ));
    }
    rows
}

/// Rank-2 Groebner reproductions; the pinned engine runs.
fn rank2(opts: &SuiteOptions) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    let a2: LieType = "A2".parse().unwrap();
    let c2: LieType = "C2".parse().unwrap();
    let engine_row = |id: String, statement: String, t: LieType, locus: Locus, r: usize,
                          expected: usize| {
        let config = opts.engine.clone();
        let row = (|| -> Result<SuiteRow> {
            let inst = compile(t, locus, r)?;
            let rep = dimension(&inst, &config, None)?;
            Ok(SuiteRow::check(
                id.clone(),
                statement.clone(),
                expected as i64,
                rep.dimension.unwrap_or(i64::MIN),
            ))
        })();
        row.unwrap_or_else(|e| SuiteRow::error(id, statement, &e))
    };
    for r in 1..=3 {
        rows.push(engine_row(
            format!("cru/A2/r{r}"),
            "dim C_r(u) = 2r + 1 for A2 in good characteristic".into(),
            a2,
            Locus::Nilradical,
            r,
            2 * r + 1,
        ));
    }
    for r in 1..=3 {
        let expected = if r == 1 { 4 } else { 3 * r };
        rows.push(engine_row(
            format!("cru/C2/r{r}"),
            "dim C_r(u) for C2: 2r + 2 at r = 1, then 3r".into(),
            c2,
            Locus::Nilradical,
            r,
            expected,
        ));
    }
    for r in 1..=3 {
        rows.push(engine_row(
            format!("cro2u/A2/r{r}"),
            "dim C_r(O2 meet u) = 2r for A2 (characteristic-2 model)".into(),
            a2,
            Locus::SquareZeroCapU,
            r,
            2 * r,
        ));
    }
    for r in 1..=2 {
        rows.push(engine_row(
            format!("cro2u/C2/r{r}"),
            "dim C_r(O2 meet u) = 3r for C2 (characteristic-3 model)".into(),
            c2,
            Locus::SquareZeroCapU,
            r,
            3 * r,
        ));
    }
    // determinantal relaxation: dim 3r + 1
    for r in 2..=3 {
        let id = format!("det-relax/C2/r{r}");
        let statement = "the determinantal relaxation has dimension 3r + 1".to_string();
        let row = (|| -> Result<SuiteRow> {
            let inst = compile(c2, Locus::Nilradical, r)?;
            let relaxed = determinantal_relaxation(&inst)?;
            let rep = dimension(&relaxed, &opts.engine, None)?;
            Ok(SuiteRow::check(
                id.clone(),
                statement.clone(),
                (3 * r + 1) as i64,
                rep.dimension.unwrap_or(i64::MIN),
            ))
        })();
        rows.push(row.unwrap_or_else(|e| SuiteRow::error(id, statement, &e)));
    }
    for r in 1..=2 {
        rows.push(engine_row(
            format!("cro2/A2/r{r}"),
            "dim C_r(O2) = (r+1) floor(n^2/4) for sl3".into(),
            a2,
            Locus::SquareZero,
            r,
            (r + 1) * 2,
        ));
    }
    for r in 1..=2 {
        rows.push(engine_row(
            format!("cro2/C2/r{r}"),
            "dim C_r(O2) = 3(r+1) for sp4".into(),
            c2,
            Locus::SquareZero,
            r,
            3 * (r + 1),
        ));
    }
    rows
}

/// Threshold suite: printed fractions against raw inequalities over the full
/// stated domain.
fn thresholds(_opts: &SuiteOptions) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        let mut agree = true;
        let mut checked = 0usize;
        for rank in 1..=20 {
            let Ok(t) = LieType::new(family, rank) else {
                continue;
            };
            if formulas::borel_threshold(t).is_none() {
                continue;
            }
            for r in 1..=20 {
                match formulas::threshold_check(t, r) {
                    Ok(_) => checked += 1,
                    Err(_) => agree = false,
                }
            }
        }
        rows.push(SuiteRow::check(
            format!("threshold-agree/{}", family.letter()),
            format!(
                "printed thresholds equal the raw dimension inequalities ({checked} cases)"
            ),
            true,
            agree,
        ));
    }
    // spot examples
    let c2: LieType = "C2".parse().unwrap();
    rows.push(SuiteRow::check(
        "threshold/C2/r3-u".into(),
        "C_3(u) of C2 is not equidimensional".into(),
        true,
        formulas::threshold_check(c2, 3)
            .map(|v| v.borel_non_equidimensional)
            .unwrap_or(false),
    ));
    rows.push(SuiteRow::check(
        "threshold/C2/r2-u".into(),
        "r = 2 is the boundary case for C2".into(),
        false,
        formulas::threshold_check(c2, 2)
            .map(|v| v.borel_non_equidimensional)
            .unwrap_or(true),
    ));
    let sl6: LieType = "sl6".parse().unwrap();
    rows.push(SuiteRow::check(
        "threshold/sl6/r3-u".into(),
        "C_3(u) of sl6 is not equidimensional".into(),
        true,
        formulas::threshold_check(sl6, 3)
            .map(|v| v.borel_non_equidimensional)
            .unwrap_or(false),
    ));
    rows.push(SuiteRow::check(
        "threshold/so6-domain".into(),
        "rank-3 orthogonal thresholds are out of the statement domain".into(),
        true,
        matches!(
            formulas::threshold_check("so6".parse().unwrap(), 5),
            Err(Error::OutOfDomain(_))
        ),
    ));
    rows
}

/// Bound tables and rank-2 ceilings.
fn bounds(opts: &SuiteOptions) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    let cap = opts.max_rank.clamp(3, 8);
    for family in [Family::A, Family::B, Family::C, Family::D] {
        let table = match formulas::bound_table(family, cap, opts.max_r.max(4)) {
            Ok(t) => t,
            Err(e) => {
                rows.push(SuiteRow::error(
                    format!("bound-table/{}", family.letter()),
                    "bound table".into(),
                    &e,
                ));
                continue;
            }
        };
        let display_ok = table.iter().all(|row| {
            let t = row.lie_type;
            let expected_b = match t.family() {
                Family::A => row.r * (t.n() * t.n() / 4),
                Family::C => row.r * (t.rank() * t.rank() + t.rank()) / 2,
                Family::B | Family::D => row.r * (t.rank() * t.rank() - t.rank()) / 2,
            };
            row.borel_lower == expected_b && row.frobenius_lower == expected_b / row.r * (row.r + 1)
        });
        rows.push(SuiteRow::check(
            format!("bound-table/{}", family.letter()),
            "emitted lower bounds match the displayed formulas".into(),
            true,
            display_ok,
        ));
        let equality_marks = table
            .iter()
            .all(|row| row.equality_at_p2 == (family == Family::A));
        rows.push(SuiteRow::check(
            format!("bound-equality/{}", family.letter()),
            "characteristic-2 equality markers appear exactly for type A".into(),
            true,
            equality_marks,
        ));
    }
    // rank-2 ceilings equal the rank-2 restricted-cone dimensions, r <= 5
    for r in 1..=5 {
        let a2: LieType = "A2".parse().unwrap();
        rows.push(SuiteRow::check(
            format!("ceiling/A2/r{r}"),
            "the A2 complexity ceiling 2r + 4 equals dim C_r(N_1)".into(),
            formulas::rank2_frobenius_complexity_ceiling(Family::A, r).unwrap(),
            formulas::rank2_restricted_cone_dim(a2, 32003, r).unwrap(),
        ));
        let c2: LieType = "C2".parse().unwrap();
        rows.push(SuiteRow::check(
            format!("ceiling/C2/r{r}"),
            "the B2/C2 ceiling max(2r+6, 3r+3) equals dim C_r(N_1)".into(),
            formulas::rank2_frobenius_complexity_ceiling(Family::C, r).unwrap(),
            formulas::rank2_restricted_cone_dim(c2, 32003, r).unwrap(),
        ));
    }
    // complexity relation at the trivial module
    let relation = all_types(opts.max_rank.min(8))
        .into_iter()
        .all(|t| (1..=opts.max_r.max(4)).all(|r| {
            formulas::complexity_relation_holds_for_trivial_module(t, r)
        }));
    rows.push(SuiteRow::check(
        "complexity-relation".into(),
        "complexity of the trivial module respects the Borel bound plus dim u".into(),
        true,
        relation,
    ));
    rows
}

/// Cross-checks: small nilpotent cones both ways, the count slope, and
/// characteristic independence of the linear and square-zero loci.
fn crosschecks(opts: &SuiteOptions) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    let engine_groebner = |t: LieType, locus: Locus, r: usize| -> Result<i64> {
        let inst = compile(t, locus, r)?;
        let rep = dimension(&inst, &opts.engine, None)?;
        Ok(rep.dimension.unwrap())
    };
    // small cones: dim C_1(N) = dim N for sl2 and sl3; dim C_2(N) = 3 for sl2
    let sl2: LieType = "A1".parse().unwrap();
    let sl3: LieType = "A2".parse().unwrap();
    for (id, t, r, expected) in [
        ("cone/sl2/r1", sl2, 1, 2i64),
        ("cone/sl3/r1", sl3, 1, 6),
        ("cone/sl2/r2", sl2, 2, 3),
    ] {
        let statement = "small nilpotent-cone dimension".to_string();
        match engine_groebner(t, Locus::NilpotentCone, r) {
            Ok(d) => rows.push(SuiteRow::check(id.into(), statement, expected, d)),
            Err(e) => rows.push(SuiteRow::error(id.into(), statement, &e)),
        }
    }
    // the slope of the sl2 pair counts over q = 2, 3, 5, 7
    {
        let id = "slope/sl2-pairs".to_string();
        let statement = "log-count slope of C_2(N) for sl2 lies in [2.5, 3.5]".to_string();
        let row = (|| -> Result<SuiteRow> {
            let inst = compile(sl2, Locus::NilpotentCone, 2)?;
            let mut counts = Vec::new();
            for q in [2u64, 3, 5, 7] {
                let c = count_points(&inst, q, CountMode::Enumerate, opts.engine.budget, 1)?;
                counts.push((q, c.count.unwrap()));
            }
            let fit = slope_fit(&counts)?;
            Ok(SuiteRow::check(
                id.clone(),
                statement.clone(),
                true,
                fit.slope >= 2.5 && fit.slope <= 3.5,
            ))
        })();
        rows.push(row.unwrap_or_else(|e| SuiteRow::error(id, statement, &e)));
    }
    // enumeration agrees with the Groebner dimension where both are cheap
    for (id, alg, locus, r) in [
        ("agree/A2-u-r2", "A2", Locus::Nilradical, 2usize),
        ("agree/A1-N-r2", "A1", Locus::NilpotentCone, 2),
        ("agree/A2-o2u-r2", "A2", Locus::SquareZeroCapU, 2),
        ("agree/A1-o2-r1", "A1", Locus::SquareZero, 1),
    ] {
        let statement = "Groebner dimension agrees with the count slope".to_string();
        let t: LieType = alg.parse().unwrap();
        let row = (|| -> Result<SuiteRow> {
            let inst = compile(t, locus, r)?;
            let config = EngineConfig {
                method: Method::Both,
                qs: vec![2, 3, 5],
                ..opts.engine.clone()
            };
            let rep = dimension(&inst, &config, None)?;
            Ok(SuiteRow::check(
                id.to_string(),
                statement.clone(),
                true,
                rep.routes_consistent.unwrap_or(false),
            ))
        })();
        rows.push(row.unwrap_or_else(|e| SuiteRow::error(id.to_string(), statement, &e)));
    }
    // characteristic independence of the linear and square-zero loci at
    // small rank
    for (alg, locus, r) in [
        ("A1", Locus::Nilradical, 2usize),
        ("A2", Locus::Nilradical, 2),
        ("C2", Locus::Nilradical, 2),
        ("A2", Locus::SquareZero, 1),
        ("C2", Locus::SquareZero, 1),
        ("A2", Locus::SquareZeroCapU, 2),
        ("C2", Locus::SquareZeroCapU, 2),
    ] {
        let t: LieType = alg.parse().unwrap();
        let id = format!("char-free/{}-{}-r{}", alg, locus.short_name(), r);
        let statement =
            "Groebner dimension is the same at characteristics 2, 3 and 32003".to_string();
        let row = (|| -> Result<SuiteRow> {
            let inst = compile(t, locus, r)?;
            let mut dims = Vec::new();
            for p in [2u64, 3, 32003] {
                let config = EngineConfig {
                    characteristic: p,
                    ..opts.engine.clone()
                };
                let rep = dimension(&inst, &config, None)?;
                dims.push(rep.dimension.unwrap());
            }
            Ok(SuiteRow::check(
                id.clone(),
                statement.clone(),
                true,
                dims.windows(2).all(|w| w[0] == w[1]),
            ))
        })();
        rows.push(row.unwrap_or_else(|e| SuiteRow::error(id, statement, &e)));
    }
    // the restricted nullcone at p >= h carves the same points as the cone
    {
        let id = "nullcone-agrees/sl2".to_string();
        let statement =
            "restricted nullcone above the Coxeter number matches the cone pointwise".to_string();
        let row = (|| -> Result<SuiteRow> {
            let mut ok = true;
            for q in [2u64, 3] {
                let cone = compile(sl2, Locus::NilpotentCone, 1)?;
                let nullcone = compile(sl2, Locus::RestrictedNullcone { p: 3 }, 1)?;
                let a = count_points(&cone, q, CountMode::Enumerate, opts.engine.budget, 1)?;
                let b = count_points(&nullcone, q, CountMode::Enumerate, opts.engine.budget, 1)?;
                ok &= a.count == b.count;
            }
            Ok(SuiteRow::check(id.clone(), statement.clone(), true, ok))
        })();
        rows.push(row.unwrap_or_else(|e| SuiteRow::error(id, statement, &e)));
    }
    // monotone in r, and containment of loci, on computed values
    {
        let id = "monotone/C2-u".to_string();
        let statement = "computed dim C_r is monotone in r".to_string();
        let row = (|| -> Result<SuiteRow> {
            let mut previous = -1i64;
            let mut ok = true;
            for r in 1..=3 {
                let d = engine_groebner("C2".parse().unwrap(), Locus::Nilradical, r)?;
                ok &= d >= previous;
                previous = d;
            }
            Ok(SuiteRow::check(id.clone(), statement.clone(), true, ok))
        })();
        rows.push(row.unwrap_or_else(|e| SuiteRow::error(id, statement, &e)));
    }
    {
        let id = "containment/A2".to_string();
        let statement =
            "dim C_r(O2 meet u) <= dim C_r(u) and dim C_r(O2) <= dim C_r(N)".to_string();
        let row = (|| -> Result<SuiteRow> {
            let t: LieType = "A2".parse().unwrap();
            let small = engine_groebner(t, Locus::SquareZeroCapU, 2)?;
            let big = engine_groebner(t, Locus::Nilradical, 2)?;
            let o2 = engine_groebner(t, Locus::SquareZero, 1)?;
            let cone = engine_groebner(t, Locus::NilpotentCone, 1)?;
            Ok(SuiteRow::check(
                id.clone(),
                statement.clone(),
                true,
                small <= big && o2 <= cone,
            ))
        })();
        rows.push(row.unwrap_or_else(|e| SuiteRow::error(id, statement, &e)));
    }
    rows
}

pub const SUITE_NAMES: [&str; 6] = [
    "constructions",
    "orbits",
    "rank2",
    "thresholds",
    "bounds",
    "crosschecks",
];

/// Run one named suite. Rows are sorted by id for deterministic output.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut rows = match name {
        "constructions" => constructions(opts),
        "orbits" => orbits(opts),
        "rank2" => rank2(opts),
        "thresholds" => thresholds(opts),
        "bounds" => bounds(opts),
        "crosschecks" => crosschecks(opts),
        other => {
            return Err(Error::Input(format!(
                "unknown suite {other:?}; available: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    };
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteReport {
        suite: name.to_string(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_opts() -> SuiteOptions {
        SuiteOptions {
            max_rank: 3,
            max_r: 2,
            engine: EngineConfig::default(),
        }
    }

    #[test]
    fn construction_suite_matches() {
        let report = run_suite("constructions", &quick_opts()).unwrap();
        assert!(report.all_match(), "{}", report.render_table());
    }

    #[test]
    fn threshold_suite_matches() {
        let report = run_suite("thresholds", &quick_opts()).unwrap();
        assert!(report.all_match(), "{}", report.render_table());
    }

    #[test]
    fn bounds_suite_matches() {
        let report = run_suite("bounds", &quick_opts()).unwrap();
        assert!(report.all_match(), "{}", report.render_table());
    }

    #[test]
    fn unknown_suite_is_an_input_error() {
        assert!(matches!(
            run_suite("nope", &quick_opts()),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn rows_are_sorted_and_renderable() {
        let report = run_suite("thresholds", &quick_opts()).unwrap();
        let ids: Vec<&String> = report.rows.iter().map(|r| &r.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        let table = report.render_table();
        assert!(table.contains("rows match"));
    }
}
