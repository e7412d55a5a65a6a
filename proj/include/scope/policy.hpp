#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "scope/matrix.hpp"

namespace scope {

inline constexpr std::size_t kMotors = 18;
inline constexpr std::size_t kGaitValues = kMotors * 3; // 54
inline constexpr std::size_t kHistoryFrames = 50;
inline constexpr std::size_t kFrameCols = 9; // (p,v,a) x 3 motors per leg
inline constexpr std::size_t kLegs = 6;
inline constexpr std::size_t kRawInputs = kLegs * kFrameCols * kHistoryFrames; // 2700

inline constexpr std::size_t kScopeGenes = 2 * kGaitValues;   // 54 weights + 54 biases
inline constexpr std::size_t kBaselineGenes = 2 * kRawInputs; // 2700 weights + 2700 biases

enum class Layout { kScope, kBaseline };

inline const char* layout_name(Layout l) {
    return l == Layout::kScope ? "scope" : "baseline";
}

inline std::size_t gene_count(Layout l) {
    return l == Layout::kScope ? kScopeGenes : kBaselineGenes;
}

struct Chromosome {
    Layout layout = Layout::kScope;
    std::vector<double> genes;
};

inline void validate_chromosome(const Chromosome& c) {
    if (c.genes.size() != gene_count(c.layout))
        throw std::invalid_argument(
            std::string("chromosome: ") + layout_name(c.layout) + " layout requires " +
            std::to_string(gene_count(c.layout)) + " genes, got " +
            std::to_string(c.genes.size()));
    for (double g : c.genes)
        if (!std::isfinite(g))
            throw std::invalid_argument("chromosome: non-finite gene");
}

struct PolicyOutput {
    std::array<double, kGaitValues> values{};
};

// SCOPE policy: elementwise affine map over the column-wise vectorization of
// the truncated coefficient block. o_j = w_j * x_j + b_j.
// The block may be any shape with 54 cells (6x9 by default).
inline PolicyOutput evaluate_scope(const Chromosome& chrom, const RealMatrix& c_prime) {
    if (chrom.layout != Layout::kScope)
        throw std::invalid_argument("evaluate_scope: chromosome layout is not scope");
    validate_chromosome(chrom);
    if (c_prime.size() != kGaitValues)
        throw std::invalid_argument("evaluate_scope: coefficient block must hold 54 values");
    PolicyOutput out;
    const std::size_t rows = c_prime.rows();
    for (std::size_t j = 0; j < kGaitValues; ++j) {
        const double x = c_prime(j % rows, j / rows); // column-wise vec
        out.values[j] = chrom.genes[j] * x + chrom.genes[kGaitValues + j];
    }
    return out;
}

// Baseline policy: one weight and one bias per raw input. Inputs are indexed
// (cell j in 0..53, frame t in 0..49) where j is the column-wise vec index of
// the 6x9 frame sub-matrix, and o_j = sum_t (w_{j,t} x_{j,t} + b_{j,t}) with
// genes stored cell-major: w_{j,t} = genes[j*50 + t], biases at offset 2700.
inline PolicyOutput evaluate_baseline(const Chromosome& chrom, const RealMatrix& m_hat) {
    if (chrom.layout != Layout::kBaseline)
        throw std::invalid_argument("evaluate_baseline: chromosome layout is not baseline");
    validate_chromosome(chrom);
    if (m_hat.rows() != kLegs || m_hat.cols() != kFrameCols * kHistoryFrames)
        throw std::invalid_argument("evaluate_baseline: state history must be 6x450");
    PolicyOutput out;
    for (std::size_t j = 0; j < kGaitValues; ++j) {
        const std::size_t r = j % kLegs;
        const std::size_t c = j / kLegs;
        double acc = 0.0;
        for (std::size_t t = 0; t < kHistoryFrames; ++t) {
            const double x = m_hat(r, t * kFrameCols + c);
            const std::size_t g = j * kHistoryFrames + t;
            acc += chrom.genes[g] * x + chrom.genes[kRawInputs + g];
        }
        out.values[j] = acc;
    }
    return out;
}

} // namespace scope
