#pragma once

// Independent reference implementations used only by tests.

#include "coreduce/linalg.hpp"

#include <map>
#include <vector>

namespace oracle {

using coreduce::Int;
using coreduce::Vec;

// Minimal nonzero relations with total degree <= bound, by exhaustive enumeration.
std::vector<Vec> minimal_relations(const std::vector<Vec>& weights, Int bound);

// Extreme rays of {m >= 0 : sum m_i w_i = 0}: primitive relations of minimal support.
std::vector<Vec> circuits(const std::vector<Vec>& weights);

// Every Hilbert-basis element lies in the half-open zonotope of at most
// (dim of the relation cone) circuits, so its degree is below this bound.
Int degree_bound(const std::vector<Vec>& weights);

// Is `v` a nonnegative integer combination of `gens`?
bool in_monoid(const std::vector<Vec>& gens, const Vec& v);

}  // namespace oracle

namespace oracle {

// Weyl group as integer matrices on Dynkin coordinates (brute-force closure).
std::vector<coreduce::Mat> weyl_matrices(const coreduce::Mat& cartan);
coreduce::Int det(const coreduce::Mat& m);

// Weight multiplicity from Kostant's partition function and the full
// alternating sum over the Weyl group.
coreduce::Int kostant_multiplicity(const coreduce::Mat& cartan, const std::vector<Vec>& positive_roots_simple,
                                   const Vec& lam, const Vec& mu);

}  // namespace oracle

namespace oracle {

// Number of chambers of a central arrangement by the signed subset sum
// sum_S (-1)^{|S| - rank S} over sets of distinct hyperplanes.
coreduce::Int region_count(const std::vector<Vec>& normals);

// Dominance among positive weight spaces of the SL3 module V[r,s], decided
// on explicit matrices: V[r,s] is generated inside S^r(C^3) (x) S^s(C^3*) by
// lowering operators, and D[i][j] holds when for some Weyl element sigma the
// tangent image b.z + Z' fills Z_i at a random z in Z' (arithmetic mod a prime).
std::vector<std::vector<bool>> sl3_dominance(int r, int s, const std::vector<std::vector<Vec>>& sets);

}  // namespace oracle
