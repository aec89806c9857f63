//! Registry of the six benchmark problems.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    fourier_coefficients, shock_exact, two_mode_exact, FourierSolution, Reliability, SeriesValue,
    DEFAULT_L_MAX, DEFAULT_QUAD_TOL,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemId {
    Ex1,
    Ex2,
    Ex3,
    Ex4,
    Ex5,
    Ex6,
}

impl ProblemId {
    pub const ALL: [ProblemId; 6] = [
        ProblemId::Ex1,
        ProblemId::Ex2,
        ProblemId::Ex3,
        ProblemId::Ex4,
        ProblemId::Ex5,
        ProblemId::Ex6,
    ];
}

impl FromStr for ProblemId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ex1" => Ok(Self::Ex1),
            "ex2" => Ok(Self::Ex2),
            "ex3" => Ok(Self::Ex3),
            "ex4" => Ok(Self::Ex4),
            "ex5" => Ok(Self::Ex5),
            "ex6" => Ok(Self::Ex6),
            other => Err(Error::Domain(format!(
                "unknown problem `{other}` (expected ex1..ex6)"
            ))),
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = *self as usize + 1;
        write!(f, "ex{k}")
    }
}

/// Which reference solution a problem has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactKind {
    Fourier,
    Shock,
    TwoMode,
    None,
}

/// Where the initial data violates the homogeneous Dirichlet conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Consistency {
    Consistent,
    InconsistentRight,
    InconsistentBoth,
}

/// A parameter set used by one of the benchmark tables or figures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamSet {
    pub nu: f64,
    pub h: f64,
    pub tau: f64,
    /// Report times (absolute).
    pub times: Vec<f64>,
    pub citation: &'static str,
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub id: ProblemId,
    pub domain: (f64, f64),
    pub t_init: f64,
    initial: fn(f64, f64) -> f64,
    pub exact: ExactKind,
    pub consistency: Consistency,
    pub defaults: Vec<ParamSet>,
}

impl Problem {
    /// Initial Burgers data `w(x, t_init)` for viscosity `nu`.
    pub fn w0(&self, x: f64, nu: f64) -> f64 {
        (self.initial)(x, nu)
    }

    /// Reference solution for absolute evaluation times `t >= t_min`.
    pub fn exact_solution(&self, nu: f64, t_min: f64) -> Result<ExactSolution> {
        Ok(match self.exact {
            ExactKind::Fourier => {
                let w0 = |x: f64| self.w0(x, nu);
                ExactSolution::Fourier(fourier_coefficients(
                    &w0,
                    nu,
                    DEFAULT_L_MAX,
                    DEFAULT_QUAD_TOL,
                    t_min,
                )?)
            }
            ExactKind::Shock => ExactSolution::Shock { nu },
            ExactKind::TwoMode => ExactSolution::TwoMode { nu },
            ExactKind::None => ExactSolution::None,
        })
    }
}

/// A ready-to-evaluate reference solution.
#[derive(Clone, Debug)]
pub enum ExactSolution {
    Fourier(FourierSolution),
    Shock { nu: f64 },
    TwoMode { nu: f64 },
    None,
}

impl ExactSolution {
    /// `None` if the problem has no reference solution.
    pub fn eval(&self, x: f64, t: f64) -> Result<Option<SeriesValue>> {
        let closed = |value| {
            Some(SeriesValue {
                value,
                terms: 0,
                reliability: Reliability::Reliable,
            })
        };
        Ok(match self {
            Self::Fourier(sol) => Some(sol.eval(x, t)?),
            Self::Shock { nu } => closed(shock_exact(x, t, *nu)),
            Self::TwoMode { nu } => closed(two_mode_exact(x, t, *nu)),
            Self::None => None,
        })
    }
}

fn ex3_initial(x: f64, nu: f64) -> f64 {
    let e = (x * x - 0.25) / (2.0 * nu);
    if e >= 700.0 {
        x * (-e).exp()
    } else {
        x / (1.0 + e.exp())
    }
}

pub fn get_problem(id: ProblemId) -> Problem {
    let unit = (0.0, 1.0);
    match id {
        ProblemId::Ex1 => Problem {
            id,
            domain: unit,
            t_init: 0.0,
            initial: |x, _| (PI * x).sin(),
            exact: ExactKind::Fourier,
            consistency: Consistency::Consistent,
            defaults: vec![
                ParamSet { nu: 2.0, h: 0.0125, tau: 1e-4, times: vec![0.001, 0.01, 0.1], citation: "table 1: h=0.0125, nu=2, tau=0.0001" },
                ParamSet { nu: 0.2, h: 0.0125, tau: 1e-4, times: vec![0.4, 0.6, 0.8, 1.0, 3.0], citation: "table 2: h=0.0125, nu=0.2, tau=0.0001" },
                ParamSet { nu: 0.01, h: 0.0125, tau: 0.01, times: vec![5.0, 10.0, 15.0, 20.0], citation: "table 3: nu=0.01, h=0.0125, tau=0.01" },
                ParamSet { nu: 0.001, h: 0.0125, tau: 0.001, times: vec![10.0], citation: "figure 4: T=10, nu=0.001, tau=0.001, h=0.0125" },
            ],
        },
        ProblemId::Ex2 => Problem {
            id,
            domain: unit,
            t_init: 0.0,
            initial: |x, _| 4.0 * x * (1.0 - x),
            exact: ExactKind::Fourier,
            consistency: Consistency::Consistent,
            defaults: vec![
                ParamSet { nu: 2.0, h: 0.0125, tau: 1e-4, times: vec![0.001, 0.01, 0.1], citation: "table 4: h=0.0125, nu=2, tau=0.0001" },
                ParamSet { nu: 0.2, h: 0.0125, tau: 1e-4, times: vec![0.4, 0.6, 0.8, 1.0, 3.0], citation: "table 5: h=0.0125, nu=0.2, tau=0.0001" },
                ParamSet { nu: 0.01, h: 0.0125, tau: 0.01, times: vec![5.0, 10.0, 15.0, 20.0], citation: "table 6: nu=0.01, h=0.0125, tau=0.01" },
                ParamSet { nu: 0.001, h: 0.0125, tau: 0.001, times: vec![10.0], citation: "figure 9: T=10, nu=0.001, tau=0.001, h=0.0125" },
            ],
        },
        ProblemId::Ex3 => Problem {
            id,
            domain: (0.0, 1.2),
            t_init: 1.0,
            initial: ex3_initial,
            exact: ExactKind::Shock,
            consistency: Consistency::Consistent,
            defaults: vec![ParamSet {
                nu: 0.002,
                h: 0.0005,
                tau: 0.01,
                times: vec![1.7, 3.0, 3.5],
                citation: "table 7: nu=0.002, h=0.0005, tau=0.01",
            }],
        },
        ProblemId::Ex4 => Problem {
            id,
            domain: (0.0, 2.0),
            t_init: 0.0,
            initial: |x, nu| two_mode_exact(x, 0.0, nu),
            exact: ExactKind::TwoMode,
            consistency: Consistency::Consistent,
            defaults: vec![ParamSet {
                nu: 0.001,
                h: 0.025,
                tau: 0.01,
                times: vec![1.0, 2.0, 3.0],
                citation: "figure 13: nu=0.001, h=0.025, tau=0.01 (report times not published)",
            }],
        },
        ProblemId::Ex5 => Problem {
            id,
            domain: unit,
            t_init: 0.0,
            initial: |x, _| (0.5 * PI * x).sin(),
            exact: ExactKind::Fourier,
            consistency: Consistency::InconsistentRight,
            defaults: vec![ParamSet {
                nu: 2.0,
                h: 0.0125,
                tau: 0.01,
                times: vec![0.1],
                citation: "figure 11: T=0.1, h=0.0125, nu=2, tau=0.01",
            }],
        },
        ProblemId::Ex6 => Problem {
            id,
            domain: unit,
            t_init: 0.0,
            initial: |x, _| (0.25 * PI * x).cos(),
            exact: ExactKind::Fourier,
            consistency: Consistency::InconsistentBoth,
            defaults: vec![ParamSet {
                nu: 2.0,
                h: 0.0125,
                tau: 0.01,
                times: vec![0.1],
                citation: "figure 12: T=0.1, h=0.0125, nu=2, tau=0.01",
            }],
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in ProblemId::ALL {
            assert_eq!(id.to_string().parse::<ProblemId>().unwrap(), id);
            assert_eq!(get_problem(id).id, id);
        }
        assert!("ex7".parse::<ProblemId>().is_err());
    }

    #[test]
    fn initial_values() {
        assert!((get_problem(ProblemId::Ex1).w0(0.5, 1.0) - 1.0).abs() < 1e-15);
        assert_eq!(get_problem(ProblemId::Ex2).w0(0.5, 1.0), 1.0);
        assert_eq!(get_problem(ProblemId::Ex3).w0(0.5, 0.002), 0.25);
        let ex3 = get_problem(ProblemId::Ex3);
        assert_eq!(ex3.domain, (0.0, 1.2));
        assert_eq!(ex3.t_init, 1.0);
        assert_eq!(get_problem(ProblemId::Ex4).domain, (0.0, 2.0));
        // ex3 initial data is the shock solution at t = 1.
        for x in [0.1, 0.45, 0.52, 0.9] {
            assert!((ex3.w0(x, 0.002) - shock_exact(x, 1.0, 0.002)).abs() < 1e-14);
        }
    }

    #[test]
    fn consistency_flags_match_boundary_values() {
        for id in ProblemId::ALL {
            let p = get_problem(id);
            let nu = p.defaults[0].nu;
            let left = p.w0(p.domain.0, nu).abs() > 1e-12;
            let right = p.w0(p.domain.1, nu).abs() > 1e-12;
            let expected = match (left, right) {
                (false, false) => Consistency::Consistent,
                (false, true) => Consistency::InconsistentRight,
                (true, true) => Consistency::InconsistentBoth,
                (true, false) => panic!("{id}: left-only inconsistency not registered"),
            };
            assert_eq!(p.consistency, expected, "{id}");
        }
    }

    #[test]
    fn every_default_is_cited() {
        for id in ProblemId::ALL {
            for set in get_problem(id).defaults {
                assert!(set.citation.starts_with("table") || set.citation.starts_with("figure"));
                assert!(set.citation.contains(&format!("nu={}", set.nu)), "{}", set.citation);
                assert!(!set.times.is_empty());
            }
        }
    }
}
