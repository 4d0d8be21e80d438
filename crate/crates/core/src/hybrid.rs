//! The hybrid loop: GA generations, with an annealing run from the best
//! individual every `t_sa` generations whose result replaces a randomly chosen
//! weak individual.

use std::time::{Duration, Instant};

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ga::{self, penalty_iteration, Evaluator, GaParams, Individual, Population};
use crate::model::TrussModel;
use crate::penalty::PenaltyParams;
use crate::sa::{self, SaParams, TOP_K};

#[derive(Clone, Debug, PartialEq)]
pub struct HybridParams {
    /// Generations between SA launches; `None` disables SA (plain GA).
    pub t_sa: Option<u64>,
    pub ga: GaParams,
    pub sa: SaParams,
    /// `None` uses [`PenaltyParams::for_model`].
    pub penalty: Option<PenaltyParams>,
    /// Keep the current best out of the replacement draw.
    pub protect_best: bool,
    /// Stop once this many analyses have been spent.
    pub max_evaluations: Option<u64>,
    /// Stop after this many generations without a best-F gain above 1e-8.
    pub stagnation_generations: Option<u64>,
}

pub const DEFAULT_T_SA: u64 = 20;

impl HybridParams {
    pub fn defaults(n_variables: usize) -> Self {
        Self {
            t_sa: Some(DEFAULT_T_SA),
            ga: GaParams::defaults(n_variables),
            sa: SaParams::default(),
            penalty: None,
            protect_best: true,
            max_evaluations: None,
            stagnation_generations: None,
        }
    }

    pub fn for_model(model: &TrussModel) -> Self {
        Self::defaults(model.n_variables())
    }

    pub fn plain_ga(mut self) -> Self {
        self.t_sa = None;
        self
    }

    pub fn check(&self) -> Result<(), String> {
        if self.t_sa == Some(0) {
            return Err("t_sa must be at least 1".into());
        }
        self.ga.check()?;
        self.sa.check()
    }
}

/// One line of the convergence history, written after each completed
/// generation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenerationRow {
    pub generation: u64,
    pub best_f: f64,
    pub mean_f: f64,
    /// Lightest feasible weight found so far.
    pub best_feasible_weight: Option<f64>,
    /// Analyses spent so far, including the initial population.
    pub evaluations: u64,
    pub sa_ran: bool,
}

#[derive(Clone, Debug)]
pub struct RunRecord {
    pub seed: u64,
    pub rows: Vec<GenerationRow>,
    pub best: Individual,
    pub best_feasible: Option<Individual>,
    pub total_evaluations: u64,
    pub wall_time: Duration,
}

impl PartialEq for RunRecord {
    /// Wall time is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.seed == other.seed
            && self.rows == other.rows
            && self.best == other.best
            && self.best_feasible == other.best_feasible
            && self.total_evaluations == other.total_evaluations
    }
}

impl RunRecord {
    pub fn final_feasible_weight(&self) -> Option<f64> {
        self.best_feasible.as_ref().map(|i| i.weight)
    }

    /// Analyses spent when the best feasible weight first reached `target`.
    pub fn evaluations_to_reach(&self, target: f64) -> Option<u64> {
        self.rows
            .iter()
            .find(|r| r.best_feasible_weight.is_some_and(|w| w <= target))
            .map(|r| r.evaluations)
    }
}

/// Index of the individual to replace. Weights are proportional to
/// `1 + F - F_min`, the reciprocal of the selection fitness; non-finite
/// objectives take precedence.
pub fn remove_victim_index(individuals: &[Individual], protect_best: bool, rng: &mut impl Rng) -> usize {
    let best = individuals
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.penalized.total_cmp(&b.1.penalized))
        .map(|(i, _)| i)
        .expect("population is non-empty");
    let candidate = |i: usize| !(protect_best && i == best && individuals.len() > 1);
    let infinite: Vec<usize> = (0..individuals.len())
        .filter(|&i| candidate(i) && !individuals[i].penalized.is_finite())
        .collect();
    if !infinite.is_empty() {
        return infinite[rng.random_range(0..infinite.len())];
    }
    let weights = removal_weights(individuals, protect_best);
    WeightedIndex::new(&weights)
        .expect("removal weights are positive")
        .sample(rng)
}

/// Unnormalized removal weights for finite objectives; the protected best
/// gets zero.
pub fn removal_weights(individuals: &[Individual], protect_best: bool) -> Vec<f64> {
    let (best, f_min) = individuals
        .iter()
        .enumerate()
        .map(|(i, ind)| (i, ind.penalized))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("population is non-empty");
    individuals
        .iter()
        .enumerate()
        .map(|(i, ind)| {
            if protect_best && i == best && individuals.len() > 1 {
                0.0
            } else {
                1.0 + ind.penalized - f_min
            }
        })
        .collect()
}

struct Tracker {
    rows: Vec<GenerationRow>,
    last_best: f64,
    stalled: u64,
}

impl Tracker {
    fn record(&mut self, pop: &Population, evaluator: &Evaluator<'_>, sa_ran: bool) {
        let best_f = pop.best().penalized;
        if best_f < self.last_best - 1e-8 {
            self.stalled = 0;
        } else {
            self.stalled += 1;
        }
        self.last_best = self.last_best.min(best_f);
        self.rows.push(GenerationRow {
            generation: pop.generation,
            best_f,
            mean_f: pop.mean_penalized(),
            best_feasible_weight: evaluator.best_feasible().map(|i| i.weight),
            evaluations: evaluator.evaluations(),
            sa_ran,
        });
    }
}

/// Runs the hybrid optimizer. The seed overrides `params.ga.seed`.
pub fn run(model: &TrussModel, params: &HybridParams, seed: u64) -> RunRecord {
    let started = Instant::now();
    let penalty = params.penalty.unwrap_or_else(|| PenaltyParams::for_model(model));
    let mut ga_params = params.ga.clone();
    ga_params.seed = seed;
    let mut evaluator = Evaluator::new(model, penalty);
    let mut pop = ga::init_population(&mut evaluator, &ga_params);
    // Rows start at generation 1; the initial population only seeds the
    // stagnation reference.
    let mut tracker = Tracker {
        rows: Vec::new(),
        last_best: pop.best().penalized,
        stalled: 0,
    };

    while pop.generation < ga_params.max_generations {
        if params.max_evaluations.is_some_and(|b| evaluator.evaluations() >= b) {
            break;
        }
        if params
            .stagnation_generations
            .is_some_and(|limit| tracker.stalled >= limit)
        {
            break;
        }
        pop = ga::step_generation(pop, &mut evaluator, &ga_params);
        let mut sa_ran = false;
        if let Some(t_sa) = params.t_sa {
            let remaining = params
                .max_evaluations
                .map_or(u64::MAX, |b| b.saturating_sub(evaluator.evaluations()));
            if pop.generation % t_sa == 0 && pop.individuals.len() >= TOP_K && remaining > 0 {
                inject_sa(&mut pop, &mut evaluator, params, remaining);
                sa_ran = true;
            }
        }
        tracker.record(&pop, &evaluator, sa_ran);
    }

    RunRecord {
        seed,
        best: pop.best().clone(),
        best_feasible: evaluator.best_feasible().cloned(),
        total_evaluations: evaluator.evaluations(),
        rows: tracker.rows,
        wall_time: started.elapsed(),
    }
}

/// Runs SA from the best individual, spending at most `remaining` analyses.
fn inject_sa(pop: &mut Population, evaluator: &mut Evaluator<'_>, params: &HybridParams, remaining: u64) {
    let iteration = penalty_iteration(pop.generation);
    let top = pop.top_designs(TOP_K);
    let start = pop.best().clone();
    let mut sa_params = params.sa.clone();
    let cap = sa_params
        .max_iterations
        .unwrap_or(sa::DEFAULT_MAX_ITERATIONS_PER_VARIABLE * start.design.len());
    sa_params.max_iterations = Some(cap.min(usize::try_from(remaining).unwrap_or(usize::MAX)));
    let outcome = sa::sa_run(&start, &top, evaluator, &sa_params, iteration, &mut pop.rng)
        .expect("population holds at least ten designs of model dimension");
    let victim = remove_victim_index(&pop.individuals, params.protect_best, &mut pop.rng);
    let mut injected = outcome.best;
    injected.evaluated_at_generation = pop.generation;
    pop.individuals[victim] = injected;
    pop.sort();
}

/// Paired result of one seed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairedEntry {
    pub seed: u64,
    pub hybrid_weight: Option<f64>,
    pub plain_weight: Option<f64>,
    pub hybrid_evaluations: u64,
    pub plain_evaluations: u64,
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub budget: u64,
    pub entries: Vec<PairedEntry>,
    pub hybrid_median: Option<f64>,
    pub plain_median: Option<f64>,
    pub hybrid_runs: Vec<RunRecord>,
    pub plain_runs: Vec<RunRecord>,
}

impl Comparison {
    /// Seeds whose hybrid run reached the plain median within the plain
    /// run's evaluation count.
    pub fn hybrid_reaches_plain_median(&self) -> usize {
        let Some(target) = self.plain_median else {
            return 0;
        };
        self.hybrid_runs
            .iter()
            .zip(&self.plain_runs)
            .filter(|(h, p)| h.evaluations_to_reach(target).is_some_and(|e| e <= p.total_evaluations))
            .count()
    }
}

/// Median of the finite values; `None` if any run found no feasible design
/// in the lower half, so infeasible runs count as worst.
pub fn median(values: &[Option<f64>]) -> Option<f64> {
    let mut v: Vec<f64> = values.iter().map(|w| w.unwrap_or(f64::INFINITY)).collect();
    if v.is_empty() {
        return None;
    }
    v.sort_by(f64::total_cmp);
    let n = v.len();
    let m = if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    };
    m.is_finite().then_some(m)
}

/// Runs the hybrid and a plain GA on each seed with the same analysis
/// budget. `params.max_evaluations` sets the budget; if absent it is
/// `population_size * (max_generations + 1)`. Both arms ignore the generation
/// cap and stop on the budget alone.
pub fn compare_plain_ga(model: &TrussModel, params: &HybridParams, seeds: &[u64]) -> Comparison {
    let budget = params
        .max_evaluations
        .unwrap_or(params.ga.population_size as u64 * (params.ga.max_generations + 1));
    let mut hybrid = params.clone();
    hybrid.max_evaluations = Some(budget);
    hybrid.ga.max_generations = u64::MAX;
    hybrid.stagnation_generations = None;
    let plain = hybrid.clone().plain_ga();

    let pairs: Vec<(RunRecord, RunRecord)> = seeds
        .par_iter()
        .map(|&s| (run(model, &hybrid, s), run(model, &plain, s)))
        .collect();
    let (hybrid_runs, plain_runs): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let entries: Vec<PairedEntry> = hybrid_runs
        .iter()
        .zip(&plain_runs)
        .map(|(h, p)| PairedEntry {
            seed: h.seed,
            hybrid_weight: h.final_feasible_weight(),
            plain_weight: p.final_feasible_weight(),
            hybrid_evaluations: h.total_evaluations,
            plain_evaluations: p.total_evaluations,
        })
        .collect();
    Comparison {
        budget,
        hybrid_median: median(&entries.iter().map(|e| e.hybrid_weight).collect::<Vec<_>>()),
        plain_median: median(&entries.iter().map(|e| e.plain_weight).collect::<Vec<_>>()),
        entries,
        hybrid_runs,
        plain_runs,
    }
}
