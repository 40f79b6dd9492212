#pragma once

#include "coreduce/monoid.hpp"
#include "coreduce/repthy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coreduce {

// Nonzero weights of the slice representation of T at a zero-weight vector
// whose isotropy group has identity component T.
struct SliceWeights {
    WeightMultiset weights;
    ModuleSpec source;
};

enum class CertificateKind { toral_relation, roots_mult2, criterion_a_i, criterion_a_ii, criterion_a_iii, product_rule };
const char* kind_name(CertificateKind k);

inline constexpr const char* kGenericZeroVector =
    "zero-weight vector taken generic: isotropy identity component is the maximal torus";

struct BadSliceCertificate {
    CertificateKind kind = CertificateKind::toral_relation;
    std::vector<Vec> weights;  // distinct slice weights, full Dynkin coordinates
    Vec relation;              // aligned with weights; empty when no relation is carried
    std::optional<Vec> witness_weight;
    Int witness_multiplicity = 0;
    std::vector<std::string> notes;
    bool exact = false;                  // relation sums to zero and has a coefficient >= 2
    std::optional<bool> indecomposable;  // decided by brute force when the support is small

    bool has_relation() const { return !relation.empty(); }
};

inline constexpr std::size_t kIndecomposableSupport = 6;

struct RelationCheck {
    bool sums_to_zero = false;
    bool big_coefficient = false;
    std::optional<bool> indecomposable;
};
// Duplicate weights are merged before checking.
RelationCheck check_relation(const std::vector<Vec>& weights, const Vec& coeffs);

bool has_toral_slice(const ModuleSpec& m);
SliceWeights toral_slice_weights(const ModuleSpec& m);  // throws std::invalid_argument without a toral slice

std::optional<BadSliceCertificate> bad_toral_slice(const ModuleSpec& m, const MonoidLimits& limits = {});
std::optional<BadSliceCertificate> roots_mult2_rule(const ModuleSpec& m, const MonoidLimits& limits = {});
// Every applicable case among (i), (ii), (iii); empty when none applies.
// Requires a simple group and both weights in the root lattice.
std::vector<BadSliceCertificate> criterion_a(const Vec& phi, const Vec& psi, const GroupSpec& g,
                                             const MonoidLimits& limits = {});
// Irreducible tensor product over at least two simple factors with every root occurring.
std::optional<BadSliceCertificate> product_group_rule(const ModuleSpec& m, const MonoidLimits& limits = {});

}  // namespace coreduce
