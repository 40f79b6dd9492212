#pragma once

#include "coreduce/repthy.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coreduce {

// A rational one-parameter subgroup, given by its values on the simple roots
// of each factor followed by its values on the torus coordinates.
struct Cocharacter {
    GroupSpec group;
    QVec values;

    Q pair(const Vec& weight) const;
    // Nonzero on every listed nonzero weight and positive on every simple root.
    bool generic_for(const std::vector<Vec>& weights) const;
    // Diagonal entries (x_1, ..., x_{n+1}) on each type-A factor, concatenated.
    static Cocharacter from_diagonals(const GroupSpec& g, const std::vector<QVec>& diagonals);
};

enum class DominanceStatus { dominant, dominated, unknown };
const char* status_name(DominanceStatus s);

struct AdmissibleSet {
    std::vector<std::pair<Vec, Int>> weights;  // sorted distinct weights with multiplicity
    Cocharacter defining;
    DominanceStatus status = DominanceStatus::unknown;
    std::optional<std::size_t> dominated_by;  // index into the enclosing list

    Int z_dim() const;
    bool contains(const Vec& w) const;
    Int mult(const Vec& w) const;
    std::vector<Vec> support() const;
};

// Admissible subset of the nonzero weights of m cut out by rho.
AdmissibleSet admissible_from(const ModuleSpec& m, const Cocharacter& rho);

// Values t > 0 where rho_t = (1, t) vanishes on a nonzero weight; semisimple rank 2 only.
std::vector<Q> critical_ratios(const ModuleSpec& m);

// One set per chamber of the weight hyperplane arrangement (restricted to the
// dominant cone when mod_weyl). Semisimple rank 2 with mod_weyl returns the
// interval decomposition in increasing t. Throws above rank max_rank.
std::vector<AdmissibleSet> admissible_sets(const ModuleSpec& m, bool mod_weyl, int max_rank = 4);

// Model cocharacters for C^7 (x) C^7 over G2 x G2. Each row is (a, b, a', b')
// with a = rho(alpha_1 + alpha_2), b = rho(alpha_1) per factor.
std::vector<std::array<Int, 4>> g2g2_models();
std::vector<AdmissibleSet> g2g2_maximal_sets();  // the models and their swaps

enum class Dominance { dominated, not_by_these_criteria };

struct DominanceResult {
    Dominance verdict = Dominance::not_by_these_criteria;
    std::vector<std::pair<int, int>> sigma;  // word in simple reflections (factor, index)
    std::string reason;
};

// Sufficient tests for G Z_1 in G Z_2: inclusion, or a Weyl element sigma for
// which B Z_1^(sigma) is dense in Z_1 by a tangent-space support count.
DominanceResult dominance(const AdmissibleSet& l1, const AdmissibleSet& l2);

// Minimal elements: weights not of the form (another member) + positive root.
std::vector<Vec> minimal_elements(const AdmissibleSet& l);
// If the nonnegative cone of the minimal elements contains every simple root,
// domination by l2 forces inclusion.
bool simple_roots_in_minimal_cone(const AdmissibleSet& l);
// SL3 criterion: l is inclusion-maximal and has nonzero members -a alpha + b beta
// and c alpha - d beta with a, b, c, d >= 0.
bool sl3_two_quadrant(const AdmissibleSet& l, const std::vector<AdmissibleSet>& all);

struct ComponentAnalysis {
    std::vector<std::vector<bool>> proven;    // proven[i][j]: G Z_i within G Z_j
    std::vector<std::vector<bool>> excluded;  // excluded[i][j]: G Z_i not within G Z_j
    std::vector<std::vector<std::size_t>> dominant_classes;
};
// Fills status and dominated_by on every set.
ComponentAnalysis analyze_components(std::vector<AdmissibleSet>& sets);

// Degree-d covariants of highest weight target vanish on G Z_l when target is
// not a sum of exactly d members of l.
bool covariant_vanishes(const AdmissibleSet& l, const Vec& target, int d, std::size_t state_limit = 50'000'000);
// Same for every degree 1..d.
bool covariant_vanishes_up_to(const AdmissibleSet& l, const Vec& target, int d,
                              std::size_t state_limit = 50'000'000);
// Largest d with target a sum of d members of l (bounded through rho).
std::optional<int> max_covariant_degree(const AdmissibleSet& l, const Vec& target,
                                        std::size_t state_limit = 50'000'000);

struct SupportReduction {
    std::size_t columns = 0;                  // distinct weight supports of generators of g.v
    std::size_t after_column = 0;             // columns left after column reduction
    std::size_t singletons_after_column = 0;  // of which have a single entry
    std::size_t bound = 0;                    // singleton columns after row reduction
};

// Lower bound on dim G.v for generic v with the given support, one
// (copy index, weight) pair per weight vector. Every support weight and every
// reached weight needs a one-dimensional weight space, except the zero weight
// of the 26-dimensional F4 module, which splits by the root class.
SupportReduction support_orbit_dim_bound(const ModuleSpec& m, const std::vector<std::pair<int, Vec>>& v_support);

struct DimBracket {
    Int lower = 0;  // max(dim Z, support bound at a generic point of Z)
    Int upper = 0;  // dim Z + positive roots outside the parabolic stabilizing Z
};
DimBracket gz_dimension(const ModuleSpec& m, const AdmissibleSet& l);

struct DegreeScreen {
    int max_degree = 0;           // largest zero-weight monomial degree with one factor outside l
    Int generators = 0;           // supplied generators of degree <= max_degree
    Int usable_complement = 0;    // weight-space dims outside l met by such monomials
    Int rank_bound = 0;           // bound on rank of d pi along Z
    Int codim_lower = 0;          // lower bound on codim of G Z in V
    Int codim_upper = 0;
    bool not_reduced = false;     // rank_bound < codim_lower (l must be dominant)
    std::string note;
};
DegreeScreen negative_weight_degree_screen(const ModuleSpec& m, const AdmissibleSet& l,
                                           const std::vector<int>& invariant_degrees,
                                           std::size_t state_limit = 50'000'000);

// Multigraded refinement: per multidegree over the expanded summands, a bound
// on new generators, and the weight coordinates outside l reachable by a
// zero-weight monomial with exactly that factor outside l. Generators above
// max_total_degree have zero differential along Z.
struct GradedScreen {
    struct Row {
        Vec multidegree;
        Int generator_bound = 0;  // invariants minus an injective image of lower ones
        Int usable = 0;           // coordinates outside l met by this multidegree
    };
    int max_total_degree = 0;
    std::vector<Row> rows;         // rows with positive generator bound
    Int usable_union = 0;          // coordinates met by some row
    Int rank_bound = 0;            // min(sum of min(bound, usable), usable_union)
    Int codim_lower = 0;
    Int codim_upper = 0;
    bool not_reduced = false;      // rank_bound < codim_lower (l must be dominant)
};
GradedScreen graded_degree_screen(const ModuleSpec& m, const AdmissibleSet& l, int max_total_degree,
                                  std::size_t state_limit = 50'000'000);

// Monomial screen for a multihomogeneous invariant: per summand, rho values of
// the positive and negative weights; a monomial of the given multidegree with
// a single negative factor needs positive sum = |negative value|.
struct OneNegativeScreen {
    std::vector<std::vector<Q>> positives;  // per summand, with multiplicity, sorted
    Q max_negative = 0;                     // most negative value (<= 0)
    Q min_positive_sum = 0;                 // over the choice of summand for the negative factor
    bool vanishes = false;                  // min_positive_sum > |max_negative|: no such monomial
};
OneNegativeScreen one_negative_screen(const ModuleSpec& m, const Cocharacter& rho, const Vec& multidegree);

// Sign patterns and model rows for SL3 x SL3 on the four bifundamental
// modules: columns c-b', c-c', c+a', b+a', b-c', b-b'.
struct ModelRow {
    std::array<int, 6> signs;
    std::array<Int, 6> values;  // a, b, c, a', b', c'
};
std::vector<ModelRow> sl3sl3_model_table();
std::array<int, 6> sl3sl3_signs(const std::array<Int, 6>& v);
ModuleSpec sl3sl3_bifundamentals();
Cocharacter sl3sl3_cocharacter(const std::array<Int, 6>& v);

// D4 positive weight cases for 2(phi1 + phi3 + phi4): per case, the positive
// weights of the exterior squares, one block per module, in Dynkin coordinates.
std::vector<std::vector<std::vector<Vec>>> d4_exterior_cases();
// Is target a sum of one weight from each block?
bool d4_case_feasible(const std::vector<std::vector<Vec>>& blocks, const Vec& target);

}  // namespace coreduce
