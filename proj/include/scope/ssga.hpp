#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scope/policy.hpp"
#include "scope/rng.hpp"

namespace scope {

// Steady-state GA: one tournament per generation, the top two breed, the
// bottom two of the same tournament are replaced by the offspring.

struct GaConfig {
    std::size_t population_size = 100;
    std::size_t tournament_size = 5;
    double mutation_rate = 0.003;
    double mutation_sigma = 0.5;
    std::size_t generations = 0;
    std::uint64_t seed = 0;

    void validate() const {
        if (tournament_size < 2 || tournament_size > population_size)
            throw std::invalid_argument("GaConfig: need 2 <= tournament_size <= population_size");
        if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
            throw std::invalid_argument("GaConfig: mutation_rate must be in [0,1]");
        if (!(mutation_sigma > 0.0))
            throw std::invalid_argument("GaConfig: mutation_sigma must be positive");
    }
};

struct Individual {
    Chromosome chrom;
    double fitness = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t id = 0;
};

struct GenerationRecord {
    std::size_t generation = 0; // 1-based
    double offspring1 = 0.0;
    double offspring2 = 0.0;
    double best_so_far = 0.0;
};

struct GaResult {
    Individual best;
    std::vector<GenerationRecord> history;
    std::size_t evaluations = 0;
};

// k distinct individuals sampled uniformly without replacement, returned as
// population indices ranked best to worst; fitness ties go to the lower id.
inline std::vector<std::size_t> tournament(const std::vector<Individual>& pop,
                                           std::size_t k, Rng& rng) {
    if (k > pop.size())
        throw std::invalid_argument("tournament: k exceeds population size");
    std::vector<std::size_t> picks = rng.sample_without_replacement(pop.size(), k);
    std::sort(picks.begin(), picks.end(), [&](std::size_t a, std::size_t b) {
        if (pop[a].fitness != pop[b].fitness) return pop[a].fitness > pop[b].fitness;
        return pop[a].id < pop[b].id;
    });
    return picks;
}

// Single-point crossover; the cut is uniform on {1..L-1}.
inline std::pair<Chromosome, Chromosome> crossover(const Chromosome& a,
                                                   const Chromosome& b, Rng& rng) {
    if (a.layout != b.layout || a.genes.size() != b.genes.size())
        throw std::invalid_argument("crossover: parents must share layout and length");
    const std::size_t len = a.genes.size();
    if (len < 2)
        throw std::invalid_argument("crossover: chromosomes must have at least 2 genes");
    const std::size_t cut = 1 + static_cast<std::size_t>(rng.below(len - 1));
    Chromosome c1 = a, c2 = b;
    for (std::size_t j = cut; j < len; ++j) {
        c1.genes[j] = b.genes[j];
        c2.genes[j] = a.genes[j];
    }
    return {std::move(c1), std::move(c2)};
}

// Each gene independently gains N(0, sigma^2) noise with probability rate.
// Genes are never clamped; the gait normalization absorbs extremes.
inline Chromosome mutate(Chromosome c, double rate, double sigma, Rng& rng) {
    for (double& g : c.genes)
        if (rng.uniform() < rate) g += rng.normal(0.0, sigma);
    return c;
}

template <typename Evaluator>
class SteadyStateGa {
public:
    // genome_length defaults to the layout's contract length; benchmarks may
    // pass any length >= 2.
    SteadyStateGa(GaConfig cfg, Layout layout, Evaluator& evaluator,
                  std::size_t genome_length = 0)
        : cfg_(cfg), layout_(layout),
          genome_length_(genome_length == 0 ? gene_count(layout) : genome_length),
          evaluator_(evaluator), rng_(cfg.seed) {
        cfg_.validate();
        initialize();
    }

    const std::vector<Individual>& population() const { return pop_; }
    const Individual& best() const { return best_; }
    const std::vector<GenerationRecord>& history() const { return history_; }
    std::size_t evaluations() const { return evaluations_; }
    Rng& rng() { return rng_; }

    // One generation: tournament, breed, evaluate offspring sequentially,
    // replace the tournament's two worst. If an evaluation throws, the
    // population is left untouched.
    void step() {
        const std::vector<std::size_t> ranked = tournament(pop_, cfg_.tournament_size, rng_);
        const std::size_t worst = ranked[ranked.size() - 1];
        const std::size_t second_worst = ranked[ranked.size() - 2];

        auto [c1, c2] = crossover(pop_[ranked[0]].chrom, pop_[ranked[1]].chrom, rng_);
        c1 = mutate(std::move(c1), cfg_.mutation_rate, cfg_.mutation_sigma, rng_);
        c2 = mutate(std::move(c2), cfg_.mutation_rate, cfg_.mutation_sigma, rng_);

        const double f1 = evaluate(c1);
        const double f2 = evaluate(c2);

        pop_[worst] = Individual{std::move(c1), f1, next_id_++};
        pop_[second_worst] = Individual{std::move(c2), f2, next_id_++};
        consider_for_best(pop_[worst]);
        consider_for_best(pop_[second_worst]);
        history_.push_back({history_.size() + 1, f1, f2, best_.fitness});
    }

    GaResult run() {
        for (std::size_t g = 0; g < cfg_.generations; ++g) step();
        return GaResult{best_, history_, evaluations_};
    }

private:
    void initialize() {
        pop_.reserve(cfg_.population_size);
        for (std::size_t i = 0; i < cfg_.population_size; ++i) {
            Chromosome c{layout_, std::vector<double>(genome_length_)};
            for (double& g : c.genes) g = rng_.uniform(-1.0, 1.0);
            pop_.push_back(Individual{std::move(c), 0.0, next_id_++});
        }
        for (Individual& ind : pop_) ind.fitness = evaluate(ind.chrom);
        best_ = pop_.front();
        for (const Individual& ind : pop_)
            if (ind.fitness > best_.fitness) best_ = ind;
    }

    double evaluate(const Chromosome& c) {
        const double f = evaluator_(c);
        if (!std::isfinite(f))
            throw std::runtime_error("SteadyStateGa: evaluator returned a non-finite fitness");
        ++evaluations_;
        return f;
    }

    void consider_for_best(const Individual& ind) {
        if (ind.fitness > best_.fitness) best_ = ind;
    }

    GaConfig cfg_;
    Layout layout_;
    std::size_t genome_length_;
    Evaluator& evaluator_;
    Rng rng_;
    std::vector<Individual> pop_;
    Individual best_;
    std::vector<GenerationRecord> history_;
    std::uint64_t next_id_ = 0;
    std::size_t evaluations_ = 0;
};

// Initialize, run G generations, return the best-ever individual plus the
// per-generation record.
template <typename Evaluator>
GaResult run_ga(const GaConfig& cfg, Layout layout, Evaluator&& evaluator,
                std::size_t genome_length = 0) {
    SteadyStateGa<std::remove_reference_t<Evaluator>> ga(cfg, layout, evaluator,
                                                         genome_length);
    return ga.run();
}

} // namespace scope
