#pragma once

#include "coreduce/monoid.hpp"
#include "coreduce/rootsys.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coreduce {

inline constexpr const char* kCharacterCacheVersion = "freudenthal-1";

// Multiplicities of the dominant weights of an irreducible module, in
// order of increasing depth below the highest weight.
struct DominantCharacter {
    std::vector<Vec> weights;
    std::vector<Int> mults;
    std::unordered_map<Vec, Int, VecHash> index;

    Int at(const Vec& dominant) const {
        auto it = index.find(dominant);
        return it == index.end() ? 0 : it->second;
    }
};

// Freudenthal recursion restricted to dominant weights. Results are memoized
// in memory and, when a cache directory is set, on disk.
const DominantCharacter& dominant_character(const RootSystem& rs, const Vec& lam);
DominantCharacter freudenthal(const RootSystem& rs, const Vec& lam);
void set_character_cache_dir(const std::string& dir);
std::string character_cache_dir();
// Drops the in-memory memo so the next lookup goes to disk or recomputes.
void clear_character_memo();

struct WeightMultiset {
    GroupSpec group;
    std::unordered_map<Vec, Int, VecHash> entries;

    Int at(const Vec& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? 0 : it->second;
    }
    Int mass() const;
    void add(const Vec& w, Int m);
    std::vector<std::pair<Vec, Int>> sorted() const;
    // Nonzero weights with multiplicity, expanded into a list in sorted order.
    std::vector<Vec> nonzero_list() const;
};

WeightMultiset weight_diagram(const RootSystem& rs, const Vec& lam);
WeightMultiset weight_diagram(const GroupSpec& g, const Vec& lam);

struct Summand {
    Int coef = 1;
    Vec highest;  // concatenated Dynkin blocks followed by torus weights
};

struct ModuleSpec {
    GroupSpec group;
    std::vector<Summand> summands;

    // "[1,0]+2[0,1]" or "2*[0,0,0,1]"; weights use the rootsys grammar.
    static ModuleSpec parse(const GroupSpec& g, std::string_view text);
    static ModuleSpec irreducible(const GroupSpec& g, const Vec& lam, Int coef = 1);
    std::string str() const;
    BigInt dim() const;
    ModuleSpec dual() const;
    // Summands with coefficients expanded, one entry per copy.
    std::vector<Vec> copies() const;
};

Vec dual_weight(const GroupSpec& g, const Vec& lam);  // highest weight of the dual
WeightMultiset module_weights(const ModuleSpec& m);
Int weight_multiplicity(const ModuleSpec& m, const Vec& mu);

struct RootMultiplicity {
    Int min = 0;
    Vec witness;  // a root attaining the minimum
};
RootMultiplicity min_root_multiplicity(const ModuleSpec& m);
// Largest multiplicity of a nonzero dominant weight, with the weight.
std::pair<Int, Vec> max_nonzero_multiplicity(const ModuleSpec& m);

WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset direct_sum(const WeightMultiset& a, const WeightMultiset& b);

// S^0 .. S^dmax of a character by unbounded-knapsack dynamic programming.
std::vector<WeightMultiset> symmetric_powers(const WeightMultiset& chi, int dmax,
                                             std::size_t state_limit = 50'000'000);
WeightMultiset symmetric_power(const WeightMultiset& chi, int d, std::size_t state_limit = 50'000'000);

// (delta - w delta, sign(w)) over the Weyl group; throws above the order limit.
std::vector<std::pair<Vec, int>> weyl_shifts(const GroupSpec& g, std::size_t order_limit = 100'000);
// Multiplicity of V(lam) by the alternating sum sum_w sign(w) chi(lam + delta - w delta).
Int mult_in_character(const WeightMultiset& chi, const Vec& lam);
// Same for the tensor product of several characters, without forming it.
Int mult_in_product(const std::vector<const WeightMultiset*>& factors, const Vec& lam);
// Full decomposition by repeatedly extracting the highest remaining weight.
std::map<Vec, Int> decompose(const WeightMultiset& chi);

struct CovariantCount {
    Vec target;
    int degree = 0;
    std::vector<Int> covariants;  // index e: multiplicity of the target in S^e(V), e = 0..d
    std::vector<Int> invariants;  // index e: dim of invariants in S^e(V)
    Int lhs = 0;                  // covariants[d]
    Int rhs = 0;                  // sum_{e=1}^{d-1} invariants[d-e] * covariants[e]
    bool exists = false;          // lhs > rhs
};

// Counting bound for a generating covariant of type V(target) in degree d:
// products of positive-degree invariants with lower-degree covariants span
// at most rhs dimensions of the lhs-dimensional isotypic space.
CovariantCount covariant_generator_exists(const ModuleSpec& m, const Vec& target, int d,
                                          std::size_t state_limit = 50'000'000);
CovariantCount covariant_bound_from_series(const Vec& target, const std::vector<Int>& covariants,
                                           const std::vector<Int>& invariants);

// Multigraded multiplicity table over the expanded summands: entry for
// multidegree a is the multiplicity of V(lam) in the tensor product of S^{a_i}(V_i).
struct GradedSeries {
    Vec max_degree;
    std::map<Vec, Int> table;
};
GradedSeries graded_multiplicity_series(const ModuleSpec& m, const Vec& lam, const Vec& max_degree,
                                        std::size_t state_limit = 50'000'000);
GradedSeries graded_invariant_series(const ModuleSpec& m, const Vec& max_degree,
                                     std::size_t state_limit = 50'000'000);

}  // namespace coreduce
