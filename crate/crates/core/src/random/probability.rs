//! Exact membership probabilities for common neighbourhoods and the Chernoff
//! tail used to bound their concentration.

use itertools::Itertools;
use num_traits::Float;

use super::rng::SplitMix64;
use super::sample::{Model, RandomError};
use crate::scalar::Scalar;
use crate::types::{EdgeColor, VertexColor};
use crate::Rational;

/// A fresh vertex of colour `candidate` against constraint vertices of fixed
/// colours. The question is whether the fresh vertex lies in `N(A)` for every
/// constraint set `A`.
///
/// Only the edges from the fresh vertex to the constraint vertices matter, so
/// the colours of edges among constraint vertices are not part of the scenario.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub model: Model,
    pub candidate: VertexColor,
    pub constraint_colors: Vec<VertexColor>,
    pub sets: Vec<Vec<usize>>,
}

/// Most constraint vertices an exact enumeration will take (3^16 colourings).
pub const MAX_SCENARIO_VERTICES: usize = 16;

impl Scenario {
    /// Red candidate against `N(r1, r2)` and `N(b1, b2)` in the friendly model.
    pub fn two_pairs() -> Self {
        use VertexColor::*;
        Scenario {
            model: Model::Friendly,
            candidate: Red,
            constraint_colors: vec![Red, Red, Blue, Blue],
            sets: vec![vec![0, 1], vec![2, 3]],
        }
    }

    /// [`Scenario::two_pairs`] with the extra set `{r1, b1}`.
    pub fn two_pairs_and_cross() -> Self {
        let mut s = Self::two_pairs();
        s.sets.push(vec![0, 2]);
        s
    }

    pub fn validate(&self) -> Result<(), RandomError> {
        let k = self.constraint_colors.len();
        if k > MAX_SCENARIO_VERTICES {
            return Err(RandomError::Scenario(format!("{k} constraint vertices, at most {MAX_SCENARIO_VERTICES}")));
        }
        for (i, set) in self.sets.iter().enumerate() {
            if let Some(&v) = set.iter().find(|&&v| v >= k) {
                return Err(RandomError::Scenario(format!("set {i} names vertex {v}, only {k} declared")));
            }
            if set.iter().duplicates().next().is_some() {
                return Err(RandomError::Scenario(format!("set {i} repeats a vertex")));
            }
        }
        Ok(())
    }

    /// Colours the edge from the fresh vertex to constraint vertex `u` can take,
    /// all equally likely.
    fn edge_options(&self, u: usize) -> &'static [EdgeColor] {
        match self.model {
            Model::Friendly if self.constraint_colors[u] == self.candidate => &[EdgeColor::Red, EdgeColor::Blue],
            _ => &EdgeColor::ALL,
        }
    }

    fn relevant_vertices(&self) -> Vec<usize> {
        self.sets.iter().flatten().copied().sorted_unstable().dedup().collect()
    }

    /// Whether the fresh vertex is in every `N(A)` given its edge colours.
    fn admits(&self, edge: impl Fn(usize) -> EdgeColor) -> bool {
        self.sets.iter().all(|set| {
            let red = set.iter().any(|&u| edge(u) == EdgeColor::Red);
            let blue = set.iter().any(|&u| edge(u) == EdgeColor::Blue);
            !(red && blue)
        })
    }

    /// Reads `key=value` lines: `model`, `candidate`, `vertices` (comma
    /// separated colours) and any number of `set` lines (comma separated
    /// indices into `vertices`). `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, RandomError> {
        let mut model = None;
        let mut candidate = None;
        let mut colors = None;
        let mut sets = Vec::new();
        let bad = |line: usize, msg: String| RandomError::Scenario(format!("line {line}: {msg}"));
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(bad(i + 1, format!("expected key=value, got {line:?}")));
            };
            let value = value.trim();
            match key.trim() {
                "model" => {
                    model = Some(Model::parse(value).ok_or_else(|| bad(i + 1, format!("unknown model {value:?}")))?)
                }
                "candidate" => {
                    candidate = Some(parse_color(value).ok_or_else(|| bad(i + 1, format!("bad colour {value:?}")))?)
                }
                "vertices" => {
                    colors = Some(
                        split_list(value)
                            .map(|c| parse_color(c).ok_or_else(|| bad(i + 1, format!("bad colour {c:?}"))))
                            .collect::<Result<Vec<_>, _>>()?,
                    )
                }
                "set" => sets.push(
                    split_list(value)
                        .map(|v| v.parse::<usize>().map_err(|_| bad(i + 1, format!("bad index {v:?}"))))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                other => return Err(bad(i + 1, format!("unknown key {other:?}"))),
            }
        }
        let scenario = Scenario {
            model: model.ok_or_else(|| RandomError::Scenario("missing model".into()))?,
            candidate: candidate.ok_or_else(|| RandomError::Scenario("missing candidate".into()))?,
            constraint_colors: colors.ok_or_else(|| RandomError::Scenario("missing vertices".into()))?,
            sets,
        };
        scenario.validate()?;
        Ok(scenario)
    }
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

pub fn parse_color(s: &str) -> Option<VertexColor> {
    match s {
        "red" | "r" => Some(VertexColor::Red),
        "blue" | "b" => Some(VertexColor::Blue),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityResult<T> {
    pub value: T,
    pub admissible: u64,
    pub total: u64,
    pub scenario: Scenario,
}

/// Exact probability that a fresh vertex lies in every constraint set's
/// common neighbourhood, by enumerating all colourings of its edges to the
/// constraint vertices. Every colouring is equally likely, so the answer is
/// `admissible / total`.
pub fn exact_membership_probability<T: Scalar>(scenario: &Scenario) -> Result<ProbabilityResult<T>, RandomError> {
    scenario.validate()?;
    let relevant = scenario.relevant_vertices();
    let options: Vec<&[EdgeColor]> = relevant.iter().map(|&u| scenario.edge_options(u)).collect();
    let total: u64 = options.iter().map(|o| o.len() as u64).product();
    let mut colors = vec![EdgeColor::Red; scenario.constraint_colors.len()];
    let admissible = options
        .iter()
        .map(|o| o.iter().copied())
        .multi_cartesian_product()
        .filter(|assignment| {
            for (&u, &c) in relevant.iter().zip(assignment) {
                colors[u] = c;
            }
            scenario.admits(|u| colors[u])
        })
        .count() as u64;
    // The empty product has exactly one (admissible) colouring.
    let admissible = if relevant.is_empty() { 1 } else { admissible };
    Ok(ProbabilityResult { value: T::from_counts(admissible, total), admissible, total, scenario: scenario.clone() })
}

/// Draws the fresh vertex's edges `trials` times and counts admissible draws.
pub fn simulate_membership(scenario: &Scenario, trials: u64, seed: u64) -> Result<u64, RandomError> {
    scenario.validate()?;
    let mut rng = SplitMix64::new(seed);
    let k = scenario.constraint_colors.len();
    let mut colors = vec![EdgeColor::Red; k];
    let mut hits = 0;
    for _ in 0..trials {
        for (u, c) in colors.iter_mut().enumerate() {
            let opts = scenario.edge_options(u);
            *c = opts[rng.below_usize(opts.len())];
        }
        if scenario.admits(|u| colors[u]) {
            hits += 1;
        }
    }
    Ok(hits)
}

/// `(7/72) eps^2 (n - 2)`, the exponent of the lower-tail bound for a
/// binomial with parameters `n - 2` and `7/18`.
pub fn chernoff_exponent(eps: Rational, n: u64) -> Result<Rational, RandomError> {
    let zero = Rational::from_integer(0);
    if eps <= zero || eps > Rational::from_integer(1) || n < 3 {
        return Err(RandomError::ChernoffDomain);
    }
    Ok(Rational::new(7, 72) * eps * eps * Rational::from_integer(n as i64 - 2))
}

/// `exp(-(7/72) eps^2 (n - 2))`.
pub fn chernoff_tail_bound<T: Float>(eps: Rational, n: u64) -> Result<T, RandomError> {
    let exponent = chernoff_exponent(eps, n)?;
    let x = T::from(*exponent.numer()).unwrap() / T::from(*exponent.denom()).unwrap();
    Ok((-x).exp())
}
