//! Fixed-n Monte Carlo estimates over seeded random types, and the
//! experiment file that drives them.

use std::fmt::Write as _;

use num_traits::Float;
use rayon::prelude::*;

use super::lemma::{check_neighborhood_lemma, CheckMode, LemmaId};
use super::rng::{derive_seed, SplitMix64};
use super::sample::{sample_type, Model, RandomError, RandomSpec};
use crate::constructions::{rho_theorem1, rho_theorem3};
use crate::matrix::PartitionMatrix;
use crate::scalar::mean_stddev;
use crate::types::{find_subtype_copy, EdgeColor, NeighborhoodIndex, TypeGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaPart {
    I,
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaMode {
    Exhaustive,
    /// Per trial, `tuples` instances drawn from a generator derived from the trial seed.
    Sampled {
        tuples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoPattern {
    Theorem1,
    Theorem3,
}

impl RhoPattern {
    pub fn pattern(self) -> TypeGraph {
        match self {
            RhoPattern::Theorem1 => rho_theorem1(),
            RhoPattern::Theorem3 => rho_theorem3(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// Success when the part holds; the measure is the worst witness size.
    Lemma { lemma: LemmaId, part: LemmaPart, mode: LemmaMode },
    /// Success when both colour classes pass every block-row condition.
    BlockDistinct,
    /// Success when the pattern occurs as a subtype (found by search, not planted).
    ContainsRho(RhoPattern),
    /// Measure is the fraction of pairs carrying the colour; always a success.
    EdgeColorFrequency(EdgeColor),
    /// One random `(r1, r2, b1, b2)` per trial. Hits count the other vertices in
    /// `N(r1,r2) ∩ N(b1,b2)`, the measure is that count over `2n`, and
    /// success is a count of at least `2n/3`.
    Membership,
}

impl Property {
    pub fn name(&self) -> String {
        match self {
            Property::Lemma { lemma, part, .. } => {
                format!("{}-{}", lemma.name(), if *part == LemmaPart::I { "i" } else { "ii" })
            }
            Property::BlockDistinct => "block-distinct".into(),
            Property::ContainsRho(RhoPattern::Theorem1) => "contains-rho1".into(),
            Property::ContainsRho(RhoPattern::Theorem3) => "contains-rho3".into(),
            Property::EdgeColorFrequency(c) => format!("edge-frequency-{}", edge_color_name(*c)),
            Property::Membership => "membership".into(),
        }
    }
}

fn edge_color_name(c: EdgeColor) -> &'static str {
    match c {
        EdgeColor::Red => "red",
        EdgeColor::Blue => "blue",
        EdgeColor::Green => "green",
    }
}

/// What one seed contributes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialOutcome {
    pub success: bool,
    pub measure: f64,
    pub hits: u64,
    pub draws: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct McSummary<T> {
    pub property: String,
    pub model: Model,
    pub n: usize,
    pub trials: u64,
    pub successes: u64,
    pub mean: T,
    pub stddev: T,
    pub hits: u64,
    pub draws: u64,
}

impl<T: Float> McSummary<T> {
    pub fn success_fraction(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }

    pub fn hit_fraction(&self) -> f64 {
        if self.draws == 0 {
            0.0
        } else {
            self.hits as f64 / self.draws as f64
        }
    }
}

/// Runs `property` on the type drawn from `seed`.
pub fn run_trial(property: &Property, model: Model, n: usize, seed: u64) -> Result<TrialOutcome, RandomError> {
    let tau = sample_type(&RandomSpec::new(n, model, seed)?);
    let inner_seed = derive_seed(seed, 1);
    let flag = |b: bool| TrialOutcome { success: b, measure: if b { 1.0 } else { 0.0 }, hits: b as u64, draws: 1 };
    Ok(match *property {
        Property::Lemma { lemma, part, mode } => {
            let mode = match mode {
                LemmaMode::Exhaustive => CheckMode::Exhaustive,
                LemmaMode::Sampled { tuples } => CheckMode::Sampled { tuples, seed: inner_seed },
            };
            let report = check_neighborhood_lemma(&tau, lemma, mode)?;
            let (holds, worst, checked) = match part {
                LemmaPart::I => (report.part_i_holds, report.worst_i, report.part_i_checked),
                LemmaPart::II => (report.part_ii_holds, report.worst_ii, report.part_ii_checked),
            };
            TrialOutcome {
                success: holds,
                measure: worst.map_or(0.0, |w| w.size as f64),
                hits: holds as u64,
                draws: checked,
            }
        }
        Property::BlockDistinct => {
            let r = PartitionMatrix::from(&tau).block_row_distinctness();
            flag(r.a_rows_distinct && r.b_rows_distinct && r.no_three_rows_equal_a && r.no_three_rows_equal_b)
        }
        Property::ContainsRho(p) => flag(find_subtype_copy(&tau, &p.pattern()).is_some()),
        Property::EdgeColorFrequency(c) => {
            let draws = tau.pairs().count() as u64;
            let hits = tau.count_edges(c) as u64;
            let measure = if draws == 0 { 0.0 } else { hits as f64 / draws as f64 };
            TrialOutcome { success: true, measure, hits, draws }
        }
        Property::Membership => {
            let (red, blue) = (tau.red_vertices(), tau.blue_vertices());
            if red.len() < 2 || blue.len() < 2 {
                return Err(RandomError::NotEnoughVertices);
            }
            let mut rng = SplitMix64::new(inner_seed);
            let r = rng.choose_distinct(&red, 2);
            let b = rng.choose_distinct(&blue, 2);
            let index = NeighborhoodIndex::new(&tau);
            let mut set = index.neighborhood(&r);
            set.intersect_with(&index.neighborhood(&b));
            let size = set.count_ones(..) as u64;
            let scale = n as u64 * if model == Model::Friendly { 2 } else { 1 };
            TrialOutcome {
                // size >= 2n/3 with n the per-class count
                success: 3 * size >= 2 * n as u64,
                measure: size as f64 / scale as f64,
                hits: size,
                draws: tau.order() as u64 - 4,
            }
        }
    })
}

/// Runs every seed for each `n` and aggregates per `n`. Trials run in
/// parallel; aggregation is in seed order, so the result depends only on the
/// seed list.
pub fn monte_carlo<T: Float + Send>(
    property: &Property,
    model: Model,
    n_values: &[usize],
    seeds: &[u64],
) -> Result<Vec<McSummary<T>>, RandomError> {
    n_values
        .iter()
        .map(|&n| {
            let outcomes =
                seeds.par_iter().map(|&s| run_trial(property, model, n, s)).collect::<Result<Vec<_>, _>>()?;
            let measures: Vec<T> = outcomes.iter().map(|o| T::from(o.measure).unwrap()).collect();
            let (mean, stddev) = mean_stddev(&measures);
            Ok(McSummary {
                property: property.name(),
                model,
                n,
                trials: outcomes.len() as u64,
                successes: outcomes.iter().filter(|o| o.success).count() as u64,
                mean,
                stddev,
                hits: outcomes.iter().map(|o| o.hits).sum(),
                draws: outcomes.iter().map(|o| o.draws).sum(),
            })
        })
        .collect()
}

/// A parsed experiment file.
///
/// ```text
/// model=friendly
/// n=30,200
/// seeds=0..300          # or a list 1,5,9, or a count with master=<seed>
/// property=nsize-i      # nsize-ii, nsize2-i, ..., block-distinct, contains-rho1,
///                       # contains-rho3, edge-frequency, membership
/// mode=sampled          # lemma properties only; default exhaustive
/// tuples=25
/// color=green           # edge-frequency only
/// threshold=0.99        # minimum success fraction
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct Experiment {
    pub model: Model,
    pub n_values: Vec<usize>,
    pub seeds: Vec<u64>,
    pub property: Property,
    pub threshold: Option<f64>,
}

impl Experiment {
    pub fn parse(text: &str) -> Result<Self, RandomError> {
        let bad = |msg: String| RandomError::Scenario(msg);
        let mut kv = std::collections::BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| bad(format!("line {}: expected key=value", i + 1)))?;
            let k = k.trim();
            if !matches!(k, "model" | "n" | "seeds" | "master" | "property" | "mode" | "tuples" | "color" | "threshold")
            {
                return Err(bad(format!("line {}: unknown key {k:?}", i + 1)));
            }
            if kv.insert(k.to_string(), v.trim().to_string()).is_some() {
                return Err(bad(format!("line {}: duplicate key {k:?}", i + 1)));
            }
        }
        let get = |k: &str| kv.get(k).map(String::as_str);
        let need = |k: &str| get(k).ok_or_else(|| bad(format!("missing {k}")));
        let int = |k: &str, v: &str| v.parse::<u64>().map_err(|_| bad(format!("{k}: bad integer {v:?}")));

        let model = Model::parse(need("model")?).ok_or_else(|| bad("unknown model".into()))?;
        let n_values = list(need("n")?).map(|v| int("n", v).map(|x| x as usize)).collect::<Result<Vec<_>, _>>()?;
        if n_values.is_empty() || n_values.contains(&0) {
            return Err(RandomError::ZeroOrder);
        }

        let seeds_text = need("seeds")?;
        let seeds = if let Some((a, b)) = seeds_text.split_once("..") {
            (int("seeds", a.trim())?..int("seeds", b.trim())?).collect()
        } else if let Some(master) = get("master") {
            let master = int("master", master)?;
            (0..int("seeds", seeds_text)?).map(|i| derive_seed(master, i)).collect()
        } else {
            list(seeds_text).map(|v| int("seeds", v)).collect::<Result<Vec<_>, _>>()?
        };

        let mode = match get("mode").unwrap_or("exhaustive") {
            "exhaustive" => LemmaMode::Exhaustive,
            "sampled" => LemmaMode::Sampled { tuples: int("tuples", need("tuples")?)? as usize },
            other => return Err(bad(format!("unknown mode {other:?}"))),
        };
        let prop = need("property")?;
        let property = match prop {
            "block-distinct" => Property::BlockDistinct,
            "contains-rho1" => Property::ContainsRho(RhoPattern::Theorem1),
            "contains-rho3" => Property::ContainsRho(RhoPattern::Theorem3),
            "membership" => Property::Membership,
            "edge-frequency" => Property::EdgeColorFrequency(match get("color").unwrap_or("green") {
                "red" => EdgeColor::Red,
                "blue" => EdgeColor::Blue,
                "green" => EdgeColor::Green,
                other => return Err(bad(format!("unknown colour {other:?}"))),
            }),
            other => {
                let (lemma, part) = other.rsplit_once('-').ok_or_else(|| bad(format!("unknown property {other:?}")))?;
                let lemma = LemmaId::parse(lemma).ok_or_else(|| bad(format!("unknown property {other:?}")))?;
                let part = match part {
                    "i" => LemmaPart::I,
                    "ii" => LemmaPart::II,
                    _ => return Err(bad(format!("unknown property {other:?}"))),
                };
                Property::Lemma { lemma, part, mode }
            }
        };
        let threshold = get("threshold")
            .map(|t| t.parse::<f64>().map_err(|_| bad(format!("threshold: bad number {t:?}"))))
            .transpose()?;
        Ok(Experiment { model, n_values, seeds, property, threshold })
    }

    pub fn run(&self) -> Result<Vec<McSummary<f64>>, RandomError> {
        monte_carlo(&self.property, self.model, &self.n_values, &self.seeds)
    }

    /// Whether every summary reaches the threshold (vacuously true without one).
    pub fn passes(&self, summaries: &[McSummary<f64>]) -> bool {
        self.threshold.is_none_or(|t| summaries.iter().all(|s| s.success_fraction() >= t))
    }

    /// One `key: value` block per `n`, blank-line separated.
    pub fn render(&self, summaries: &[McSummary<f64>]) -> String {
        let mut out = String::new();
        for (i, s) in summaries.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "property: {}", s.property);
            let _ = writeln!(out, "model: {}", s.model.name());
            let _ = writeln!(out, "n: {}", s.n);
            let _ = writeln!(out, "trials: {}", s.trials);
            let _ = writeln!(out, "successes: {}", s.successes);
            let _ = writeln!(out, "fraction: {:.6}", s.success_fraction());
            let _ = writeln!(out, "mean: {:.6}", s.mean);
            let _ = writeln!(out, "stddev: {:.6}", s.stddev);
            let _ = writeln!(out, "hits: {}", s.hits);
            let _ = writeln!(out, "draws: {}", s.draws);
            if let Some(t) = self.threshold {
                let _ = writeln!(out, "threshold: {t}");
                let _ = writeln!(out, "meets_threshold: {}", s.success_fraction() >= t);
            }
        }
        out
    }
}

fn list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}
