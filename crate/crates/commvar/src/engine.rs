//! Orchestration: compute the dimension of a compiled instance by the
//! Groebner route, the counting route, or both, attach the catalog's
//! expectation, and produce a verdict.

use serde::Serialize;

use crate::count::{count_points, slope_fit, CountMode, SlopeFit};
use crate::error::{Error, Result};
use crate::formulas::Expectation;
use crate::groebner::{groebner, ideal_dimension, GroebnerConfig};
use crate::variety::CommutingVarietyInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Groebner,
    Count,
    Both,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "groebner" | "grobner" | "gb" => Ok(Method::Groebner),
            "count" | "enumerate" => Ok(Method::Count),
            "both" => Ok(Method::Both),
            other => Err(Error::Input(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Characteristic for the Groebner route. 32003 models good
    /// characteristic; small primes model the characteristic-specific
    /// statements.
    pub characteristic: u64,
    pub method: Method,
    /// Field sizes for the counting route.
    pub qs: Vec<u64>,
    pub seed: u64,
    /// Budget on enumeration work (assignments evaluated).
    pub budget: u64,
    pub groebner: GroebnerConfig,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            characteristic: 32003,
            method: Method::Groebner,
            qs: vec![2, 3, 5],
            seed: 1,
            budget: 100_000_000,
            groebner: GroebnerConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    NoExpectation,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionReport {
    pub instance: String,
    pub algebra: String,
    pub locus: String,
    pub r: usize,
    pub num_vars: usize,
    pub method: Method,
    pub characteristic: Option<u64>,
    /// Dimension from the Groebner route (exact).
    pub groebner_dimension: Option<i64>,
    /// Point counts per field size, from the counting route.
    pub counts: Vec<(u64, u128)>,
    /// Slope fit of the counts, plus its integer rounding.
    pub slope: Option<f64>,
    pub slope_residual: Option<f64>,
    pub count_dimension: Option<i64>,
    /// The dimension the report stands behind.
    pub dimension: Option<i64>,
    pub expected: Option<i64>,
    pub statement: Option<String>,
    pub verdict: Verdict,
    /// When both routes run: did they agree?
    pub routes_consistent: Option<bool>,
    pub notes: Vec<String>,
}

impl DimensionReport {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Match | Verdict::NoExpectation => 0,
            Verdict::Mismatch => 1,
        }
    }
}

/// Compute the dimension of the instance with the configured method(s).
pub fn dimension(
    inst: &CommutingVarietyInstance,
    config: &EngineConfig,
    expected: Option<Expectation>,
) -> Result<DimensionReport> {
    let mut report = DimensionReport {
        instance: inst.description(),
        algebra: inst.lie_type.name(),
        locus: inst.locus.short_name(),
        r: inst.r,
        num_vars: inst.num_vars(),
        method: config.method,
        characteristic: None,
        groebner_dimension: None,
        counts: Vec::new(),
        slope: None,
        slope_residual: None,
        count_dimension: None,
        dimension: None,
        expected: expected.as_ref().map(|e| e.value),
        statement: expected.as_ref().map(|e| e.statement.clone()),
        verdict: Verdict::NoExpectation,
        routes_consistent: None,
        notes: Vec::new(),
    };

    if matches!(config.method, Method::Groebner | Method::Both) {
        let gb = groebner(
            &inst.generators,
            inst.num_vars(),
            config.characteristic,
            &config.groebner,
        )
        .map_err(|e| match e {
            Error::Resource(msg) => Error::Resource(format!("groebner: {msg}")),
            other => other,
        })?;
        report.characteristic = Some(config.characteristic);
        report.groebner_dimension = Some(ideal_dimension(&gb, inst.num_vars()));
    }

    if matches!(config.method, Method::Count | Method::Both) {
        if config.qs.len() < 2 {
            return Err(Error::Input(
                "the counting route needs at least two field sizes".into(),
            ));
        }
        if config.method == Method::Count && config.qs.len() < 3 {
            return Err(Error::Input(
                "an integer dimension estimate needs at least three field sizes".into(),
            ));
        }
        for &q in &config.qs {
            let outcome = count_points(inst, q, CountMode::Enumerate, config.budget, config.seed)
                .map_err(|e| match e {
                    Error::Resource(msg) => Error::Resource(format!("count: {msg}")),
                    other => other,
                })?;
            report.counts.push((q, outcome.count.expect("enumerate mode")));
        }
        let SlopeFit {
            slope, residual, ..
        } = slope_fit(&report.counts)?;
        report.slope = Some(slope);
        report.slope_residual = Some(residual);
        // an integer estimate is only produced from three or more points
        if report.counts.len() >= 3 {
            report.count_dimension = Some(slope.round() as i64);
        }
    }

    report.dimension = match config.method {
        Method::Groebner => report.groebner_dimension,
        Method::Count => report.count_dimension,
        Method::Both => {
            let g = report.groebner_dimension.expect("groebner route ran");
            let slope = report.slope.expect("count route ran");
            let consistent = (slope - g as f64).abs() <= 0.5;
            report.routes_consistent = Some(consistent);
            if !consistent {
                report.notes.push(format!(
                    "internal inconsistency: groebner dimension {g} vs count slope {slope:.3}"
                ));
            }
            Some(g)
        }
    };

    report.verdict = match (report.dimension, report.expected) {
        (Some(d), Some(e)) if d == e => Verdict::Match,
        (Some(_), Some(_)) => Verdict::Mismatch,
        _ => Verdict::NoExpectation,
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::expectation_for;
    use crate::lie::LieType;
    use crate::variety::{compile, Locus};

    fn run(alg: &str, locus: Locus, r: usize, method: Method) -> DimensionReport {
        let t: LieType = alg.parse().unwrap();
        let inst = compile(t, locus, r).unwrap();
        let config = EngineConfig {
            method,
            qs: vec![2, 3, 5, 7],
            ..EngineConfig::default()
        };
        let expected = expectation_for(t, locus, r, config.characteristic);
        dimension(&inst, &config, expected).unwrap()
    }

    #[test]
    fn corner_locus_dimension_is_r_dim_w() {
        for r in 1..=3 {
            let rep = run("sl4", Locus::SquareZeroAbelian, r, Method::Groebner);
            assert_eq!(rep.dimension, Some(4 * r as i64));
            assert_eq!(rep.verdict, Verdict::Match);
        }
    }

    #[test]
    fn both_routes_agree_on_sl2_pairs() {
        let rep = run("A1", Locus::NilpotentCone, 2, Method::Both);
        assert_eq!(rep.dimension, Some(3));
        assert_eq!(rep.verdict, Verdict::Match);
        assert_eq!(rep.routes_consistent, Some(true));
        assert_eq!(rep.counts.len(), 4);
        let slope = rep.slope.unwrap();
        assert!(slope > 2.5 && slope < 3.5);
    }

    #[test]
    fn count_only_route_rounds_the_slope() {
        let rep = run("A2", Locus::Nilradical, 2, Method::Count);
        assert_eq!(rep.count_dimension, Some(5));
        assert_eq!(rep.dimension, Some(5));
        assert_eq!(rep.verdict, Verdict::Match);
    }

    #[test]
    fn mismatch_is_reported() {
        let t: LieType = "A2".parse().unwrap();
        let inst = compile(t, Locus::Nilradical, 2).unwrap();
        let config = EngineConfig::default();
        let wrong = Expectation {
            value: 11,
            statement: "deliberately wrong".into(),
        };
        let rep = dimension(&inst, &config, Some(wrong)).unwrap();
        assert_eq!(rep.verdict, Verdict::Mismatch);
        assert_eq!(rep.exit_code(), 1);
    }

    #[test]
    fn resource_errors_name_the_route() {
        let t: LieType = "C2".parse().unwrap();
        let inst = compile(t, Locus::SquareZero, 2).unwrap();
        let config = EngineConfig {
            groebner: GroebnerConfig {
                max_pairs: 1,
                max_degree: 60,
            },
            ..EngineConfig::default()
        };
        match dimension(&inst, &config, None) {
            Err(Error::Resource(msg)) => assert!(msg.starts_with("groebner:")),
            other => panic!("expected resource error, got {other:?}"),
        }
        let config = EngineConfig {
            method: Method::Count,
            budget: 10,
            ..EngineConfig::default()
        };
        match dimension(&inst, &config, None) {
            Err(Error::Resource(msg)) => assert!(msg.starts_with("count:")),
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn reports_are_deterministic() {
        // identical input and config produce byte-identical reports
        let a = run("C2", Locus::Nilradical, 2, Method::Both);
        let b = run("C2", Locus::Nilradical, 2, Method::Both);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn no_expectation_reports_cleanly() {
        let rep = run("C2", Locus::NilpotentCone, 1, Method::Groebner);
        // r = 1 has an expectation (dim N = 8), so use r = 2 elsewhere:
        assert_eq!(rep.dimension, Some(8));
        let t: LieType = "B2".parse().unwrap();
        let inst = compile(t, Locus::Nilradical, 2).unwrap();
        let rep = dimension(&inst, &EngineConfig::default(), None).unwrap();
        assert_eq!(rep.verdict, Verdict::NoExpectation);
        assert_eq!(rep.exit_code(), 0);
    }

    #[test]
    fn count_method_needs_three_field_sizes() {
        let t: LieType = "A1".parse().unwrap();
        let inst = compile(t, Locus::NilpotentCone, 2).unwrap();
        let config = EngineConfig {
            method: Method::Count,
            qs: vec![2, 3],
            ..EngineConfig::default()
        };
        assert!(matches!(
            dimension(&inst, &config, None),
            Err(Error::Input(_))
        ));
        // two field sizes are still enough for the consistency check
        let config = EngineConfig {
            method: Method::Both,
            qs: vec![2, 3],
            ..EngineConfig::default()
        };
        let rep = dimension(&inst, &config, None).unwrap();
        assert_eq!(rep.count_dimension, None);
        assert!(rep.slope.is_some());
    }
}
