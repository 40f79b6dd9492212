#pragma once

#include "coreduce/linalg.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace coreduce {

// Thrown when a search exceeds its configured state budget.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MonoidLimits {
    std::size_t max_frontier = 5'000'000;
    std::size_t max_generators = 200'000;
};

// Nonnegative integer relations sum_i m_i w_i = 0 among `weights`.
struct HilbertBasis {
    std::vector<Vec> weights;
    std::vector<Vec> generators;  // sorted by total degree, then lexicographically
};

bool is_relation(const std::vector<Vec>& weights, const Vec& coeffs);
bool dominated_by(const Vec& big, const Vec& small);  // small <= big componentwise

// Minimal solutions by breadth-first completion over total degree with the
// geometric pruning <A p, a_j> < 0. Duplicate weights stay separate variables.
HilbertBasis hilbert_basis(const std::vector<Vec>& weights, const MonoidLimits& limits = {});

struct TorusVerdict {
    bool coreduced = true;
    std::optional<Vec> violating;  // generator with a coefficient >= 2, aligned with `weights`
    std::vector<Vec> weights;      // nonzero input weights, in input order
};

// Zero weights are dropped first. A repeated weight never changes the
// verdict, so the search runs on distinct weights and lifts the certificate
// onto the first copy.
TorusVerdict is_torus_coreduced(const std::vector<Vec>& weights, const MonoidLimits& limits = {});

enum class SumMode { exact_count, at_most, one_per_block };

struct SumResult {
    bool feasible = false;
    Vec counts;  // aligned with the flattened weight list
    std::size_t states = 0;
};

// Is target = sum x_i w_i with x >= 0 and sum x_i = count (or <= count)?
SumResult exists_sum(const std::vector<Vec>& weights, const Vec& target, Int count, SumMode mode,
                     std::size_t state_limit = 50'000'000);
// One weight from each block.
SumResult exists_sum_blocks(const std::vector<std::vector<Vec>>& blocks, const Vec& target,
                            std::size_t state_limit = 50'000'000);

}  // namespace coreduce
