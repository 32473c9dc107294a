//! Per-instance checks of the common-neighbourhood size bounds.
//!
//! Three families are supported, all stated for a type `tau` with scale `n`:
//!
//! * `nsize` (friendly, `n = |V|/2`): for distinct red `r1, r2` and blue
//!   `b1, b2`, (i) `|N(r1,r2) ∩ N(b1,b2)| >= 2n/3`, and (ii)
//!   `|N(r1,r2) ∩ N(b1,b2) ∩ N(v,w)| <= 16n/27` for distinct `v, w` with
//!   `{v,w}` equal to neither pair.
//! * `nsize2` (friendly, `n = |V|/2`): for six red and three blue vertices
//!   `A`, (i) `|N(A)| >= n/36`, and (ii) `|N(A ∪ {v})| <= n/40` for `v ∉ A`.
//! * `nsize3` (general, `n = |V|`): for three vertices `A`, (i)
//!   `|N(A)| >= 14n/27`, and (ii) `|N(A ∪ {v})| <= 13n/27` for `v ∉ A`.

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use super::rng::SplitMix64;
use super::sample::RandomError;
use crate::types::{NeighborhoodIndex, TypeGraph};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    Nsize,
    Nsize2,
    Nsize3,
}

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Nsize => "nsize",
            LemmaId::Nsize2 => "nsize2",
            LemmaId::Nsize3 => "nsize3",
        }
    }

    pub fn parse(s: &str) -> Option<LemmaId> {
        match s {
            "nsize" => Some(LemmaId::Nsize),
            "nsize2" => Some(LemmaId::Nsize2),
            "nsize3" => Some(LemmaId::Nsize3),
            _ => None,
        }
    }

    /// Lower-bound fraction for part (i) and upper-bound fraction for part (ii).
    pub fn thresholds(self) -> (Rational, Rational) {
        match self {
            LemmaId::Nsize => (Rational::new(2, 3), Rational::new(16, 27)),
            LemmaId::Nsize2 => (Rational::new(1, 36), Rational::new(1, 40)),
            LemmaId::Nsize3 => (Rational::new(14, 27), Rational::new(13, 27)),
        }
    }

    pub fn scale(self, tau: &TypeGraph) -> usize {
        match self {
            LemmaId::Nsize | LemmaId::Nsize2 => tau.order() / 2,
            LemmaId::Nsize3 => tau.order(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    /// `tuples` uniformly drawn quantifier instances per part.
    Sampled {
        tuples: usize,
        seed: u64,
    },
}

/// Largest quantified tuple space the exhaustive mode accepts.
pub const EXHAUSTIVE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub n: usize,
    pub part_i_holds: bool,
    pub part_ii_holds: bool,
    pub part_i_checked: u64,
    pub part_ii_checked: u64,
    /// Smallest part (i) set seen.
    pub worst_i: Option<Witness>,
    /// Largest part (ii) set seen.
    pub worst_ii: Option<Witness>,
    pub threshold_i: Rational,
    pub threshold_ii: Rational,
}

struct Tally {
    lower_bound: bool,
    threshold: Rational,
    n: usize,
    checked: u64,
    holds: bool,
    worst: Option<Witness>,
}

impl Tally {
    fn new(lower_bound: bool, threshold: Rational, n: usize) -> Self {
        Tally { lower_bound, threshold, n, checked: 0, holds: true, worst: None }
    }

    fn record(&mut self, size: usize, vertices: impl FnOnce() -> Vec<usize>) {
        self.checked += 1;
        // size >= t*n  <=>  size * den >= num * n, and likewise for <=.
        let lhs = size as i128 * *self.threshold.denom() as i128;
        let rhs = *self.threshold.numer() as i128 * self.n as i128;
        let ok = if self.lower_bound { lhs >= rhs } else { lhs <= rhs };
        self.holds &= ok;
        let worse = match &self.worst {
            None => true,
            Some(w) if self.lower_bound => size < w.size,
            Some(w) => size > w.size,
        };
        if worse {
            self.worst = Some(Witness { vertices: vertices(), size });
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn intersection_len(a: &FixedBitSet, b: &FixedBitSet) -> usize {
    a.intersection_count(b)
}

/// Checks both parts of `lemma` on `tau`.
pub fn check_neighborhood_lemma(tau: &TypeGraph, lemma: LemmaId, mode: CheckMode) -> Result<LemmaReport, RandomError> {
    let n = lemma.scale(tau);
    let (ti, tii) = lemma.thresholds();
    let mut part_i = Tally::new(true, ti, n);
    let mut part_ii = Tally::new(false, tii, n);
    let index = NeighborhoodIndex::new(tau);
    let red = tau.red_vertices();
    let blue = tau.blue_vertices();
    let all: Vec<usize> = (0..tau.order()).collect();
    let v = tau.order();

    if mode == CheckMode::Exhaustive {
        let space = match lemma {
            LemmaId::Nsize => binomial(red.len(), 2) * binomial(blue.len(), 2) * binomial(v, 2),
            LemmaId::Nsize2 => binomial(red.len(), 6) * binomial(blue.len(), 3) * v.saturating_sub(9) as u128,
            LemmaId::Nsize3 => binomial(v, 3) * v.saturating_sub(3) as u128,
        };
        if space > EXHAUSTIVE_LIMIT {
            return Err(RandomError::TooLarge { got: space, limit: EXHAUSTIVE_LIMIT });
        }
    }

    match (lemma, mode) {
        (LemmaId::Nsize, CheckMode::Exhaustive) => {
            let pair_nbhd: Vec<((usize, usize), FixedBitSet)> =
                all.iter().copied().tuple_combinations().map(|(a, b)| ((a, b), index.neighborhood(&[a, b]))).collect();
            for (r1, r2) in red.iter().copied().tuple_combinations() {
                for (b1, b2) in blue.iter().copied().tuple_combinations() {
                    let mut base = index.neighborhood(&[r1, r2]);
                    base.intersect_with(&index.neighborhood(&[b1, b2]));
                    part_i.record(base.count_ones(..), || vec![r1, r2, b1, b2]);
                    for &((x, y), ref nb) in &pair_nbhd {
                        if (x, y) == (r1, r2) || (x, y) == (b1, b2) {
                            continue;
                        }
                        part_ii.record(intersection_len(&base, nb), || vec![r1, r2, b1, b2, x, y]);
                    }
                }
            }
        }
        (LemmaId::Nsize, CheckMode::Sampled { tuples, seed }) => {
            if red.len() >= 2 && blue.len() >= 2 && v >= 2 {
                let mut rng = SplitMix64::new(seed);
                for _ in 0..tuples {
                    let (r, b) = (rng.choose_distinct(&red, 2), rng.choose_distinct(&blue, 2));
                    let mut base = index.neighborhood(&r);
                    base.intersect_with(&index.neighborhood(&b));
                    part_i.record(base.count_ones(..), || vec![r[0], r[1], b[0], b[1]]);
                }
                // Part (ii) has its own draws so each part sees `tuples` instances.
                for _ in 0..tuples {
                    let (r, b) = (rng.choose_distinct(&red, 2), rng.choose_distinct(&blue, 2));
                    let Some(vw) = draw_other_pair(&mut rng, v, &r, &b) else { break };
                    let mut base = index.neighborhood(&r);
                    base.intersect_with(&index.neighborhood(&b));
                    base.intersect_with(&index.neighborhood(&vw));
                    part_ii.record(base.count_ones(..), || vec![r[0], r[1], b[0], b[1], vw[0], vw[1]]);
                }
            }
        }
        (LemmaId::Nsize2 | LemmaId::Nsize3, CheckMode::Exhaustive) => {
            let mut visit = |a: Vec<usize>| {
                part_i.record(index.neighborhood(&a).count_ones(..), || a.clone());
                let mut ext = a.clone();
                ext.push(0);
                for x in (0..v).filter(|x| !a.contains(x)) {
                    *ext.last_mut().unwrap() = x;
                    part_ii.record(index.neighborhood(&ext).count_ones(..), || ext.clone());
                }
            };
            if lemma == LemmaId::Nsize2 {
                for reds in red.iter().copied().combinations(6) {
                    for blues in blue.iter().copied().combinations(3) {
                        visit(reds.iter().chain(&blues).copied().collect());
                    }
                }
            } else {
                for a in all.iter().copied().combinations(3) {
                    visit(a);
                }
            }
        }
        (LemmaId::Nsize2 | LemmaId::Nsize3, CheckMode::Sampled { tuples, seed }) => {
            let mut rng = SplitMix64::new(seed);
            let draw = |rng: &mut SplitMix64| -> Option<Vec<usize>> {
                if lemma == LemmaId::Nsize2 {
                    if red.len() < 6 || blue.len() < 3 {
                        return None;
                    }
                    let mut a = rng.choose_distinct(&red, 6);
                    a.extend(rng.choose_distinct(&blue, 3));
                    Some(a)
                } else {
                    (v >= 3).then(|| rng.choose_distinct(&all, 3))
                }
            };
            for _ in 0..tuples {
                let Some(a) = draw(&mut rng) else { break };
                part_i.record(index.neighborhood(&a).count_ones(..), || a.clone());
            }
            for _ in 0..tuples {
                let Some(mut a) = draw(&mut rng) else { break };
                let outside: Vec<usize> = (0..v).filter(|x| !a.contains(x)).collect();
                if outside.is_empty() {
                    break;
                }
                a.push(outside[rng.below_usize(outside.len())]);
                part_ii.record(index.neighborhood(&a).count_ones(..), || a.clone());
            }
        }
    }

    Ok(LemmaReport {
        lemma,
        n,
        part_i_holds: part_i.holds,
        part_ii_holds: part_ii.holds,
        part_i_checked: part_i.checked,
        part_ii_checked: part_ii.checked,
        worst_i: part_i.worst,
        worst_ii: part_ii.worst,
        threshold_i: ti,
        threshold_ii: tii,
    })
}

/// A uniformly random pair `{v, w}` of distinct vertices other than `{r}` and `{b}`.
fn draw_other_pair(rng: &mut SplitMix64, order: usize, r: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    // Only two pairs are excluded, so with at least four vertices there is always another.
    if order < 4 {
        return None;
    }
    let same = |p: &[usize], q: &[usize]| (p[0] == q[0] && p[1] == q[1]) || (p[0] == q[1] && p[1] == q[0]);
    loop {
        let x = rng.below_usize(order);
        let y = rng.below_usize(order);
        if x == y {
            continue;
        }
        let pair = [x.min(y), x.max(y)];
        if !same(&pair, r) && !same(&pair, b) {
            return Some(pair.to_vec());
        }
    }
}
