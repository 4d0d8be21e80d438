//! Real-coded generational genetic algorithm.
//!
//! Parents are drawn by fitness-proportionate sampling on the shifted inverse
//! `1 / (1 + F - F_min)` of the penalized objective, recombined with blend
//! crossover (BLX-0.5) and perturbed by bounded Gaussian mutation. The best
//! `elite_count` individuals survive unchanged. All randomness comes from one
//! seeded ChaCha stream owned by the population; evaluation may run in parallel
//! without touching it.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Normal;
use rayon::prelude::*;

use crate::fem::analyze;
use crate::model::{Bounds, DesignVector, TrussModel};
use crate::penalty::{evaluate_constraints, penalized_objective, PenaltyParams};

/// A design with its cached objective values.
#[derive(Clone, Debug, PartialEq)]
pub struct Individual {
    pub design: DesignVector,
    /// Raw structure weight, lb.
    pub weight: f64,
    /// Sum of normalized constraint violations; `INFINITY` if analysis failed.
    pub violation_total: f64,
    /// Largest single normalized violation.
    pub max_violation: f64,
    /// Penalized objective at the iteration it was last scored with.
    pub penalized: f64,
    pub evaluated_at_generation: u64,
}

impl Individual {
    pub fn is_feasible(&self) -> bool {
        self.violation_total == 0.0
    }

    /// Recomputes the penalized objective for a new penalty iteration. No
    /// structural analysis is needed since weight and violations are cached.
    pub fn rescore(&mut self, penalty: &PenaltyParams, iteration: u64) {
        self.penalized = score(self.weight, self.violation_total, penalty, iteration);
    }
}

fn score(weight: f64, violation_total: f64, penalty: &PenaltyParams, iteration: u64) -> f64 {
    if violation_total == 0.0 {
        weight
    } else if violation_total.is_finite() {
        weight + penalty.alpha * (iteration.max(1) as f64).powf(penalty.beta_exp) * violation_total
    } else {
        f64::INFINITY
    }
}

/// Turns designs into [`Individual`]s and counts structural analyses.
#[derive(Debug)]
pub struct Evaluator<'m> {
    pub model: &'m TrussModel,
    pub penalty: PenaltyParams,
    evaluations: u64,
    best_feasible: Option<Individual>,
}

impl<'m> Evaluator<'m> {
    pub fn new(model: &'m TrussModel, penalty: PenaltyParams) -> Self {
        Self {
            model,
            penalty,
            evaluations: 0,
            best_feasible: None,
        }
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    /// Lightest feasible design analyzed so far by this evaluator.
    pub fn best_feasible(&self) -> Option<&Individual> {
        self.best_feasible.as_ref()
    }

    fn observe(&mut self, ind: &Individual) {
        if ind.is_feasible() && self.best_feasible.as_ref().is_none_or(|b| ind.weight < b.weight) {
            self.best_feasible = Some(ind.clone());
        }
    }

    fn evaluate_uncounted(&self, design: DesignVector, iteration: u64, generation: u64) -> Individual {
        let design = self.model.clamp(&design);
        match analyze(self.model, &design) {
            Ok(result) => {
                let report = evaluate_constraints(self.model, &result);
                let penalized = penalized_objective(result.weight, &report, &self.penalty, iteration.max(1));
                Individual {
                    weight: result.weight,
                    violation_total: report.total,
                    max_violation: report.max_violation(),
                    penalized,
                    evaluated_at_generation: generation,
                    design,
                }
            }
            // A mechanism is treated as infinitely bad rather than fatal.
            Err(_) => Individual {
                weight: crate::fem::structure_weight(self.model, &design),
                violation_total: f64::INFINITY,
                max_violation: f64::INFINITY,
                penalized: f64::INFINITY,
                evaluated_at_generation: generation,
                design,
            },
        }
    }

    pub fn evaluate(&mut self, design: DesignVector, iteration: u64, generation: u64) -> Individual {
        self.evaluations += 1;
        let ind = self.evaluate_uncounted(design, iteration, generation);
        self.observe(&ind);
        ind
    }

    /// Evaluates in parallel; output order matches input order.
    pub fn evaluate_batch(&mut self, designs: Vec<DesignVector>, iteration: u64, generation: u64) -> Vec<Individual> {
        self.evaluations += designs.len() as u64;
        let this = &*self;
        let out: Vec<Individual> = designs
            .into_par_iter()
            .map(|d| this.evaluate_uncounted(d, iteration, generation))
            .collect();
        for ind in &out {
            self.observe(ind);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaParams {
    pub population_size: usize,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    /// Mutation standard deviation as a fraction of each variable's range.
    pub mutation_sigma_fraction: f64,
    pub elite_count: usize,
    pub max_generations: u64,
    pub seed: u64,
}

impl GaParams {
    /// Population 50, crossover 0.9, mutation rate `1 / n_variables`, sigma
    /// 0.1 of the range, one elite.
    pub fn defaults(n_variables: usize) -> Self {
        Self {
            population_size: 50,
            crossover_rate: 0.9,
            mutation_rate: 1.0 / n_variables.max(1) as f64,
            mutation_sigma_fraction: 0.1,
            elite_count: 1,
            max_generations: 300,
            seed: 0,
        }
    }

    pub fn check(&self) -> Result<(), String> {
        if self.population_size < 10 {
            return Err(format!(
                "population_size must be at least 10, got {}",
                self.population_size
            ));
        }
        if self.elite_count >= self.population_size {
            return Err("elite_count must be below population_size".into());
        }
        for (name, v) in [
            ("crossover_rate", self.crossover_rate),
            ("mutation_rate", self.mutation_rate),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(format!("{name} must lie in [0, 1], got {v}"));
            }
        }
        if !(self.mutation_sigma_fraction >= 0.0) {
            return Err("mutation_sigma_fraction must be non-negative".into());
        }
        Ok(())
    }
}

/// Individuals ordered best first by penalized objective.
#[derive(Clone, Debug)]
pub struct Population {
    pub individuals: Vec<Individual>,
    pub generation: u64,
    pub rng: ChaCha8Rng,
}

impl Population {
    pub fn best(&self) -> &Individual {
        &self.individuals[0]
    }

    pub fn mean_penalized(&self) -> f64 {
        self.individuals.iter().map(|i| i.penalized).sum::<f64>() / self.individuals.len() as f64
    }

    pub fn best_feasible(&self) -> Option<&Individual> {
        self.individuals
            .iter()
            .filter(|i| i.is_feasible())
            .min_by(|a, b| a.weight.total_cmp(&b.weight))
    }

    /// Designs of the `k` best individuals.
    pub fn top_designs(&self, k: usize) -> Vec<DesignVector> {
        self.individuals.iter().take(k).map(|i| i.design.clone()).collect()
    }

    pub fn sort(&mut self) {
        sort_individuals(&mut self.individuals);
    }
}

pub(crate) fn sort_individuals(individuals: &mut [Individual]) {
    individuals.sort_by(|a, b| a.penalized.total_cmp(&b.penalized));
}

/// Penalty iteration used for a generation number.
pub fn penalty_iteration(generation: u64) -> u64 {
    generation.max(1)
}

pub fn init_population(evaluator: &mut Evaluator<'_>, params: &GaParams) -> Population {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let bounds = evaluator.model.bounds();
    let designs: Vec<DesignVector> = (0..params.population_size)
        .map(|_| random_design(&bounds, &mut rng))
        .collect();
    let mut individuals = evaluator.evaluate_batch(designs, penalty_iteration(0), 0);
    sort_individuals(&mut individuals);
    Population {
        individuals,
        generation: 0,
        rng,
    }
}

pub fn random_design(bounds: &Bounds, rng: &mut impl Rng) -> DesignVector {
    let areas = (0..bounds.len())
        .map(|i| {
            let (lo, hi) = (bounds.lower[i], bounds.upper[i]);
            if hi > lo {
                rng.random_range(lo..=hi)
            } else {
                lo
            }
        })
        .collect();
    DesignVector::new(areas)
}

/// Fitness `1 / (1 + F - F_min)`; zero for non-finite objectives.
pub fn fitness_values(individuals: &[Individual]) -> Vec<f64> {
    let f_min = individuals
        .iter()
        .map(|i| i.penalized)
        .filter(|f| f.is_finite())
        .fold(f64::INFINITY, f64::min);
    individuals
        .iter()
        .map(|i| {
            if i.penalized.is_finite() {
                1.0 / (1.0 + i.penalized - f_min)
            } else {
                0.0
            }
        })
        .collect()
}

/// Normalized fitness-proportionate selection probabilities.
pub fn selection_probabilities(individuals: &[Individual]) -> Vec<f64> {
    let fitness = fitness_values(individuals);
    let total: f64 = fitness.iter().sum();
    if total > 0.0 {
        fitness.iter().map(|f| f / total).collect()
    } else {
        vec![1.0 / individuals.len() as f64; individuals.len()]
    }
}

/// Samples `pool_size` parent indices with replacement.
pub fn select_mating_pool(individuals: &[Individual], pool_size: usize, rng: &mut impl Rng) -> Vec<usize> {
    let probs = selection_probabilities(individuals);
    let dist = WeightedIndex::new(&probs).expect("selection weights are positive");
    (0..pool_size).map(|_| dist.sample(rng)).collect()
}

/// Blend crossover with extension 0.5 on both sides, clamped to bounds. With
/// probability `1 - rate` the parents are returned unchanged.
pub fn crossover(
    a: &DesignVector,
    b: &DesignVector,
    bounds: &Bounds,
    rate: f64,
    rng: &mut impl Rng,
) -> (DesignVector, DesignVector) {
    assert_eq!(a.len(), b.len(), "parent dimensions differ");
    if rng.random::<f64>() >= rate {
        return (a.clone(), b.clone());
    }
    const EXTENSION: f64 = 0.5;
    let mut c1 = Vec::with_capacity(a.len());
    let mut c2 = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        let (x, y) = (a.areas[i], b.areas[i]);
        let spread = (x - y).abs();
        let lo = x.min(y) - EXTENSION * spread;
        let hi = x.max(y) + EXTENSION * spread;
        let u1: f64 = rng.random();
        let u2: f64 = rng.random();
        c1.push(bounds.clamp_one(i, lo + u1 * (hi - lo)));
        c2.push(bounds.clamp_one(i, lo + u2 * (hi - lo)));
    }
    (DesignVector::new(c1), DesignVector::new(c2))
}

/// Gaussian perturbation of each variable with probability `rate`.
pub fn mutate(
    design: &DesignVector,
    bounds: &Bounds,
    rate: f64,
    sigma_fraction: f64,
    rng: &mut impl Rng,
) -> DesignVector {
    let areas = design
        .areas
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if rng.random::<f64>() < rate {
                let sigma = sigma_fraction * bounds.range(i);
                let noise = Normal::new(0.0, sigma).map(|n| n.sample(rng)).unwrap_or(0.0);
                bounds.clamp_one(i, x + noise)
            } else {
                x
            }
        })
        .collect();
    DesignVector::new(areas)
}

/// Produces the next generation: elites carried over, the rest bred by
/// selection, crossover and mutation, then everyone ranked at the new
/// generation's penalty iteration.
pub fn step_generation(mut pop: Population, evaluator: &mut Evaluator<'_>, params: &GaParams) -> Population {
    let generation = pop.generation + 1;
    let iteration = penalty_iteration(generation);
    let bounds = evaluator.model.bounds();
    let size = pop.individuals.len();
    let elite_count = params.elite_count.min(size);

    let pool = select_mating_pool(&pop.individuals, size, &mut pop.rng);
    let needed = size - elite_count;
    let mut offspring = Vec::with_capacity(needed + 1);
    let mut pairs = pool.chunks(2).cycle();
    while offspring.len() < needed {
        let pair = pairs.next().expect("non-empty pool");
        let a = &pop.individuals[pair[0]].design;
        let b = &pop.individuals[pair[pair.len() - 1]].design;
        let (c1, c2) = crossover(a, b, &bounds, params.crossover_rate, &mut pop.rng);
        for child in [c1, c2] {
            if offspring.len() < needed {
                offspring.push(mutate(
                    &child,
                    &bounds,
                    params.mutation_rate,
                    params.mutation_sigma_fraction,
                    &mut pop.rng,
                ));
            }
        }
    }

    let mut next: Vec<Individual> = pop.individuals[..elite_count].to_vec();
    for elite in &mut next {
        elite.rescore(&evaluator.penalty, iteration);
    }
    next.extend(evaluator.evaluate_batch(offspring, iteration, generation));
    sort_individuals(&mut next);
    Population {
        individuals: next,
        generation,
        rng: pop.rng,
    }
}
