#pragma once

#include "coreduce/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace coreduce {

using WeightSet = std::unordered_set<Vec, VecHash>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const;
    static SimpleType parse(std::string_view s);
    bool operator==(const SimpleType&) const = default;
};

// Simple root i in fundamental-weight coordinates is row i of the Cartan
// matrix, so the simple reflection is s_i(w) = w - w_i * cartan[i].
// Symmetrizer entries are (a_i, a_i)/2 with short roots normalized to 1.
class RootSystem {
public:
    explicit RootSystem(SimpleType t);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const Mat& cartan() const { return cartan_; }
    const Vec& symmetrizer() const { return sym_; }
    Int lattice_index() const { return index_; }

    // Positive roots in simple-root coordinates, sorted by height.
    const std::vector<Vec>& positive_roots() const { return pos_roots_; }
    const std::vector<Vec>& positive_roots_dynkin() const { return pos_dyn_; }
    // All roots in Dynkin coordinates.
    std::vector<Vec> roots_dynkin() const;
    std::size_t num_roots() const { return 2 * pos_roots_.size(); }
    bool is_long_root(const Vec& root_coords) const;
    const Vec& highest_root() const { return highest_root_; }
    const Vec& highest_short_root() const { return highest_short_root_; }
    Vec weyl_vector() const { return Vec(rank(), 1); }

    Vec root_to_dynkin(const Vec& root_coords) const;
    // root_scaled = simple-root coordinates times lattice_index.
    Vec to_root_scaled(const Vec& dyn) const;
    Vec from_root_scaled(const Vec& rs) const;
    bool in_root_lattice(const Vec& dyn) const;
    std::optional<Vec> root_coords(const Vec& dyn) const;  // if in root lattice

    // (alpha, lambda) for alpha in simple-root coordinates; always integral.
    Int pair_root(const Vec& root_coords, const Vec& dyn) const;
    Int root_norm2(const Vec& root_coords) const;  // (alpha, alpha)

    void reflect_inplace(Vec& w, int i) const;
    bool is_dominant(const Vec& dyn) const;
    Vec dominant_rep(Vec dyn) const;
    BigInt weyl_dimension(const Vec& lam) const;
    BigInt weyl_order() const;

    // Orthogonal realization, scaled by eps_scale() to keep entries integral.
    // Rows are simple roots. Empty for type E.
    const Mat& eps_simple_roots() const { return eps_; }
    Int eps_scale() const { return eps_scale_; }
    QVec to_eps(const Vec& dyn) const;
    Vec from_eps(const QVec& eps) const;  // throws when not integral

private:
    SimpleType type_;
    Mat cartan_;
    Vec sym_;
    Int index_ = 1;
    Mat adj_;  // adjugate of cartan: root_scaled = dyn * adj
    std::vector<Vec> pos_roots_;
    std::vector<Vec> pos_dyn_;
    Vec highest_root_;
    Vec highest_short_root_;
    Mat eps_;
    Int eps_scale_ = 1;
};

// Product of simple factors and a central torus. Weights concatenate
// Dynkin blocks followed by the torus coordinates.
class GroupSpec {
public:
    GroupSpec() = default;
    GroupSpec(std::vector<SimpleType> factors, int torus_rank = 0);

    static GroupSpec parse(std::string_view s);
    std::string name() const;

    const std::vector<RootSystem>& factors() const { return factors_; }
    int torus_rank() const { return torus_rank_; }
    int dim() const { return dim_; }
    int offset(int factor) const { return offsets_[factor]; }
    int semisimple_rank() const { return dim_ - torus_rank_; }

    Vec block(const Vec& w, int factor) const;
    Vec torus_part(const Vec& w) const;
    Vec embed(const Vec& block_w, int factor) const;

    void reflect_inplace(Vec& w, int factor, int i) const;
    bool is_dominant(const Vec& w) const;
    Vec dominant_rep(const Vec& w) const;
    WeightSet orbit(const Vec& w) const;
    BigInt weyl_order() const;

    // All roots of all simple factors, as full-length Dynkin vectors.
    std::vector<Vec> roots() const;
    std::vector<Vec> positive_roots() const;
    std::vector<Vec> simple_roots() const;

    // Integral coordinates on which cocharacters act linearly: per block the
    // simple-root coordinates times common_scale(), then torus coordinates.
    Int common_scale() const { return common_scale_; }
    Vec to_cochar_coords(const Vec& w) const;
    // Per-block root_scaled coordinates (each block scaled by its own index).
    Vec to_root_scaled(const Vec& w) const;
    bool in_root_lattice(const Vec& w) const;

    bool operator==(const GroupSpec& o) const {
        return types_ == o.types_ && torus_rank_ == o.torus_rank_;
    }

private:
    std::vector<SimpleType> types_;
    std::vector<RootSystem> factors_;
    std::vector<int> offsets_;
    int torus_rank_ = 0;
    int dim_ = 0;
    Int common_scale_ = 1;
};

enum class Basis { dynkin, root, eps };

struct Weight {
    Vec coords;  // Dynkin coordinates
};

// "[3,1]" Dynkin, "(2,-1)@root" simple-root coordinates (rationals allowed),
// "e1+e2@eps" orthogonal coordinates (simple groups with a realization).
Vec parse_weight(const GroupSpec& g, std::string_view text);
std::string format_weight(const GroupSpec& g, const Vec& dyn, Basis basis = Basis::dynkin);
std::vector<Vec> parse_weight_list(const GroupSpec& g, std::string_view text);

// Dominant weights mu with lam - mu a nonnegative combination of simple
// roots, found by repeatedly subtracting positive roots.
std::vector<Vec> dominant_weights_below(const RootSystem& rs, const Vec& lam);
std::vector<Vec> dominant_weights_below(const GroupSpec& g, const Vec& lam);
WeightSet weyl_orbit(const RootSystem& rs, const Vec& w);

namespace sl3 {
// [r,s] -> simple-root coordinates ((2r+s)/3, (r+2s)/3).
std::pair<Q, Q> to_root(Int r, Int s);
std::pair<Int, Int> from_root(const Q& p, const Q& q);
// For dominant (p,q) in root coordinates with p != q: the smallest positive
// value and the largest value of -k/l over orbit points (k,l) with opposite signs.
std::pair<Q, Q> min_max_negation_ratios(const Q& p, const Q& q);
// Orbit in root coordinates.
std::vector<std::pair<Q, Q>> orbit_root(const Q& p, const Q& q);
}  // namespace sl3

}  // namespace coreduce
