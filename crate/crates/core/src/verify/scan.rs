//! Exhaustive scans for the open lower-bound questions on `MOF_k`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::universe::{Profiled, Universe};
use crate::bounds::Fraction;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::io::write_ug;
use crate::kernel::MaskDigraph;
use crate::solver;

pub const NO_COUNTEREXAMPLE: &str = "no counterexample in universe";
const KEPT: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScanProblem {
    /// `MOF_k(G) >= ⌈n/(k+1)⌉`.
    P1,
    /// `MOF(G) >= n/2`.
    P2,
    /// `MOF(G) >= n − μ(G)`.
    P3,
    /// Graphs with `MOF(G) = n − 1`.
    P4,
}

impl ScanProblem {
    pub const ALL: [ScanProblem; 4] = [ScanProblem::P1, ScanProblem::P2, ScanProblem::P3, ScanProblem::P4];

    pub fn anchor(self) -> &'static str {
        match self {
            ScanProblem::P1 => "MOF_k(G) >= ceil(n/(k+1))",
            ScanProblem::P2 => "MOF(G) >= n/2",
            ScanProblem::P3 => "MOF(G) >= n - mu(G)",
            ScanProblem::P4 => "MOF(G) = n - 1",
        }
    }
}

impl fmt::Display for ScanProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ScanProblem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "P1" => Ok(ScanProblem::P1),
            "P2" => Ok(ScanProblem::P2),
            "P3" => Ok(ScanProblem::P3),
            "P4" => Ok(ScanProblem::P4),
            _ => Err(Error::Parameter(format!("unknown problem {s:?}; expected P1..P4"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    /// `.ug` text.
    pub graph: String,
    pub n: usize,
    pub k: usize,
    /// `MOF_k`, certified by re-solving `F_k` of `witness_bits`.
    pub value: usize,
    pub threshold: Fraction,
    pub satisfied: bool,
    pub witness_bits: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub problem: ScanProblem,
    pub anchor: String,
    pub universe: String,
    /// (graph, k) pairs examined.
    pub total: u64,
    pub satisfied: u64,
    pub counterexample_count: u64,
    /// The first counterexamples in enumeration order.
    pub counterexamples: Vec<ScanRecord>,
    /// Records with the smallest `value / threshold`; for P4, one per
    /// isomorphism class with `MOF = n − 1`.
    pub extremal: Vec<ScanRecord>,
    pub verdict: String,
}

fn certify(p: &Profiled, k: usize) -> Result<usize> {
    let e = p.at(k);
    let d = p.g.orient_bits(e.max_bits);
    let (value, _, _) = solver::forcing_number_masks(&MaskDigraph::new(&d), k);
    if value != e.max {
        return Err(Error::Verification(format!(
            "witness orientation of {:?} gives F_{k} = {value}, profile says {}",
            p.g.edges(),
            e.max
        )));
    }
    Ok(value)
}

fn record(p: &Profiled, k: usize, value: usize, threshold: Ratio<i64>) -> ScanRecord {
    ScanRecord {
        graph: write_ug(&p.g),
        n: p.g.n(),
        k,
        value,
        threshold: threshold.into(),
        satisfied: Ratio::from_integer(value as i64) >= threshold,
        witness_bits: p.at(k).max_bits,
    }
}

/// Thresholds a problem places on a connected graph, one per `k`.
fn thresholds(problem: ScanProblem, p: &Profiled) -> Result<Vec<(usize, Ratio<i64>)>> {
    let n = p.g.n() as i64;
    Ok(match problem {
        ScanProblem::P1 => (1..=p.kmax())
            .map(|k| (k, Ratio::from_integer((n + k as i64) / (k as i64 + 1))))
            .collect(),
        ScanProblem::P2 => vec![(1, Ratio::new(n, 2))],
        ScanProblem::P3 => {
            let mu = solver::matching_number(&p.g)?.count() as i64;
            vec![(1, Ratio::from_integer(n - mu))]
        }
        ScanProblem::P4 => vec![(1, Ratio::from_integer(n - 1))],
    })
}

/// Scans every connected graph of order `2..=nmax` in the universe.
pub fn scan(problem: ScanProblem, u: &Universe) -> Result<ScanReport> {
    let mut total = 0u64;
    let mut satisfied = 0u64;
    let mut bad = 0u64;
    let mut counterexamples = Vec::new();
    let mut ratios: Vec<(Ratio<i64>, ScanRecord)> = Vec::new();
    let mut classes: BTreeMap<(usize, u64), ScanRecord> = BTreeMap::new();
    for p in u.connected().iter().filter(|p| p.g.n() >= 2) {
        for (k, threshold) in thresholds(problem, p)? {
            let value = certify(p, k)?;
            let rec = record(p, k, value, threshold);
            total += 1;
            if problem == ScanProblem::P4 {
                if value == p.g.n() - 1 {
                    satisfied += 1;
                    let code = enumerate::canonical_code(&p.g)?;
                    classes.entry((p.g.n(), code)).or_insert(rec);
                }
                continue;
            }
            if rec.satisfied {
                satisfied += 1;
            } else {
                bad += 1;
                if counterexamples.len() < KEPT {
                    counterexamples.push(rec.clone());
                }
            }
            ratios.push((Ratio::from_integer(value as i64) / threshold, rec));
        }
    }
    let extremal: Vec<ScanRecord> = if problem == ScanProblem::P4 {
        classes.into_values().collect()
    } else {
        // stable sort keeps enumeration order among ties
        ratios.sort_by(|a, b| a.0.cmp(&b.0));
        let best = ratios.first().map(|r| r.0);
        ratios
            .into_iter()
            .take_while(|r| Some(r.0) == best)
            .take(KEPT)
            .map(|r| r.1)
            .collect()
    };
    let verdict = match problem {
        ScanProblem::P4 => format!(
            "{} isomorphism classes with MOF = n - 1 among {} connected graphs",
            extremal.len(),
            total
        ),
        _ if bad == 0 => NO_COUNTEREXAMPLE.to_string(),
        _ => format!("{bad} counterexamples"),
    };
    Ok(ScanReport {
        problem,
        anchor: problem.anchor().to_string(),
        universe: format!("connected labeled graphs with 2 <= n <= {}", u.cfg.nmax),
        total,
        satisfied,
        counterexample_count: bad,
        counterexamples,
        extremal,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::VerifyConfig;

    fn small() -> Universe {
        Universe::new(VerifyConfig { nmax: 4, ..VerifyConfig::default() }).unwrap()
    }

    #[test]
    fn p4_classes_small() {
        let r = scan(ScanProblem::P4, &small()).unwrap();
        // K2, P3, K3, and the order-4 classes with MOF = 3
        let orders: Vec<usize> = r.extremal.iter().map(|x| x.n).collect();
        assert!(orders.starts_with(&[2, 3, 3]));
        assert!(r.extremal.iter().all(|x| x.value == x.n - 1));
    }

    #[test]
    fn p2_minimum_ratio_is_recorded() {
        let r = scan(ScanProblem::P2, &small()).unwrap();
        assert_eq!(r.verdict, NO_COUNTEREXAMPLE);
        assert!(!r.extremal.is_empty());
        assert_eq!(r.total, r.satisfied);
    }

    #[test]
    fn parse_problem() {
        assert_eq!("p3".parse::<ScanProblem>().unwrap(), ScanProblem::P3);
        assert!("P5".parse::<ScanProblem>().is_err());
    }
}
