#include "coreduce/slices.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coreduce {

const char* kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::toral_relation: return "toral_relation";
        case CertificateKind::roots_mult2: return "roots_mult2";
        case CertificateKind::criterion_a_i: return "criterion_a_i";
        case CertificateKind::criterion_a_ii: return "criterion_a_ii";
        case CertificateKind::criterion_a_iii: return "criterion_a_iii";
        case CertificateKind::product_rule: return "product_rule";
    }
    return "unknown";
}

namespace {

void merge(std::vector<Vec>& weights, Vec& coeffs) {
    std::map<Vec, Int> acc;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (coeffs[i] != 0) acc[weights[i]] += coeffs[i];
    weights.clear();
    coeffs.clear();
    for (const auto& [w, c] : acc) {
        weights.push_back(w);
        coeffs.push_back(c);
    }
}

// Some 0 < m' < m with sum m'_i w_i = 0, by enumerating the box below m.
bool has_proper_subrelation(const std::vector<Vec>& w, const Vec& m) {
    std::size_t n = w.size();
    Vec cur(n, 0);
    Vec sum(w.empty() ? 0 : w[0].size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < n && cur[i] == m[i]) {
            sum = sub(sum, scale(w[i], cur[i]));
            cur[i] = 0;
            ++i;
        }
        if (i == n) return false;
        ++cur[i];
        sum = add(sum, w[i]);
        if (is_zero(sum) && cur != m) return true;
    }
}

void finalize(BadSliceCertificate& c) {
    if (!c.has_relation()) return;
    merge(c.weights, c.relation);
    auto chk = check_relation(c.weights, c.relation);
    c.exact = chk.sums_to_zero && chk.big_coefficient;
    c.indecomposable = chk.indecomposable;
    if (!c.exact) throw std::logic_error("certificate relation failed verification");
    if (c.indecomposable && !*c.indecomposable) throw std::logic_error("certificate relation is decomposable");
}

BadSliceCertificate from_verdict(const TorusVerdict& v, CertificateKind kind) {
    BadSliceCertificate c;
    c.kind = kind;
    for (std::size_t i = 0; i < v.weights.size(); ++i)
        if ((*v.violating)[i] != 0) {
            c.weights.push_back(v.weights[i]);
            c.relation.push_back((*v.violating)[i]);
        }
    c.notes.emplace_back(kGenericZeroVector);
    c.notes.emplace_back("relation is a Hilbert basis generator of the slice weight monoid");
    finalize(c);
    return c;
}

// Slice multiplicity of a weight: module multiplicity, less one for a root.
Int slice_multiplicity(const ModuleSpec& m, const Vec& w, const WeightSet& roots) {
    Int k = weight_multiplicity(m, w);
    return roots.count(w) ? k - 1 : k;
}

bool all_in_slice(const ModuleSpec& m, const std::vector<Vec>& ws) {
    auto rs = m.group.roots();
    WeightSet roots(rs.begin(), rs.end());
    for (const auto& w : ws)
        if (is_zero(w) || slice_multiplicity(m, w, roots) < 1) return false;
    return true;
}

}  // namespace

RelationCheck check_relation(const std::vector<Vec>& weights, const Vec& coeffs) {
    if (weights.size() != coeffs.size()) throw std::invalid_argument("relation length mismatch");
    std::vector<Vec> w = weights;
    Vec m = coeffs;
    for (Int c : m)
        if (c < 0) throw std::invalid_argument("relation coefficients must be nonnegative");
    merge(w, m);
    RelationCheck r;
    r.sums_to_zero = !w.empty() && is_relation(w, m);
    r.big_coefficient = std::any_of(m.begin(), m.end(), [](Int c) { return c >= 2; });
    if (r.sums_to_zero && w.size() <= kIndecomposableSupport) r.indecomposable = !has_proper_subrelation(w, m);
    return r;
}

bool has_toral_slice(const ModuleSpec& m) {
    if (m.group.factors().empty()) return true;
    return min_root_multiplicity(m).min >= 1;
}

SliceWeights toral_slice_weights(const ModuleSpec& m) {
    if (!has_toral_slice(m)) throw std::invalid_argument("some root is not a weight of the module");
    SliceWeights s{module_weights(m), m};
    s.weights.entries.erase(Vec(m.group.dim(), 0));
    for (const auto& r : m.group.roots()) {
        auto it = s.weights.entries.find(r);
        if (--it->second == 0) s.weights.entries.erase(it);
    }
    return s;
}

std::optional<BadSliceCertificate> bad_toral_slice(const ModuleSpec& m, const MonoidLimits& limits) {
    if (!has_toral_slice(m)) return std::nullopt;
    auto s = toral_slice_weights(m);
    auto v = is_torus_coreduced(s.weights.nonzero_list(), limits);
    if (v.coreduced) return std::nullopt;
    return from_verdict(v, CertificateKind::toral_relation);
}

std::optional<BadSliceCertificate> roots_mult2_rule(const ModuleSpec& m, const MonoidLimits& limits) {
    const auto& g = m.group;
    if (g.factors().empty()) return std::nullopt;
    auto rm = min_root_multiplicity(m);
    if (rm.min < 2) return std::nullopt;

    BadSliceCertificate c;
    c.kind = CertificateKind::roots_mult2;
    c.witness_weight = rm.witness;
    c.witness_multiplicity = rm.min;
    for (std::size_t f = 0; f < g.factors().size(); ++f) {
        const auto& rs = g.factors()[f];
        if (rs.type().family == Family::A) continue;
        // The highest root of a non-type-A factor has a simple-root coefficient >= 2.
        const Vec& theta = rs.highest_root();
        c.weights.push_back(g.embed(rs.root_to_dynkin(theta), static_cast<int>(f)));
        c.relation.push_back(1);
        for (int i = 0; i < rs.rank(); ++i) {
            if (theta[i] == 0) continue;
            Vec a(rs.rank(), 0);
            a[i] = 1;
            c.weights.push_back(g.embed(neg(rs.root_to_dynkin(a)), static_cast<int>(f)));
            c.relation.push_back(theta[i]);
        }
        c.notes.emplace_back(kGenericZeroVector);
        c.notes.push_back("highest root of " + rs.type().name() + " minus its simple-root expansion");
        finalize(c);
        return c;
    }

    // Every factor has type A: look for a toral relation first.
    try {
        if (auto t = bad_toral_slice(m, limits)) {
            t->kind = CertificateKind::roots_mult2;
            t->witness_weight = rm.witness;
            t->witness_multiplicity = rm.min;
            return t;
        }
    } catch (const LimitExceeded&) {
    }
    int maxrank = 0;
    for (const auto& rs : g.factors()) maxrank = std::max(maxrank, rs.rank());
    c.notes.emplace_back("all simple factors have type A; the toral slice alone is coreduced or undecided");
    c.notes.emplace_back("components reduce on slices to adjoint modules or sl2 (x) sl2");
    if (maxrank > 1)
        c.notes.emplace_back("a factor of rank > 1 yields two adjoint copies; g + g is not coreduced");
    else
        c.notes.emplace_back("all factors are A1; the A1 product configurations are not coreduced");
    return c;
}

std::vector<BadSliceCertificate> criterion_a(const Vec& phi, const Vec& psi, const GroupSpec& g,
                                             const MonoidLimits& limits) {
    if (g.factors().size() != 1 || g.torus_rank() != 0) throw std::invalid_argument("criterion A needs a simple group");
    if (!g.is_dominant(phi) || !g.is_dominant(psi)) throw std::invalid_argument("weights must be dominant");
    if (!g.in_root_lattice(phi) || !g.in_root_lattice(psi)) throw std::invalid_argument("weights must have a zero weight");
    const auto& rs = g.factors()[0];
    std::vector<BadSliceCertificate> out;

    auto vphi = ModuleSpec::irreducible(g, phi);
    if (auto t = bad_toral_slice(vphi, limits)) {
        t->kind = CertificateKind::criterion_a_i;
        t->notes.emplace_back("embedded through a zero-weight vector of the second factor");
        out.push_back(*t);
    }
    // A trivial factor leaves only case (i).
    if (is_zero(phi) || is_zero(psi)) return out;

    auto prod = ModuleSpec::irreducible(g, add(phi, psi));
    Vec alpha = rs.root_to_dynkin(rs.highest_short_root());
    auto short_relation = [&](BadSliceCertificate& c) {
        c.weights = {scale(alpha, 2), neg(alpha)};
        c.relation = {1, 2};
        if (!all_in_slice(prod, c.weights)) {
            c.weights.clear();
            c.relation.clear();
            c.notes.emplace_back("twice a short root is not a slice weight; relation omitted");
            return;
        }
        c.notes.emplace_back(kGenericZeroVector);
        finalize(c);
    };

    auto [k, w] = max_nonzero_multiplicity(prod);
    if (k > 1) {
        BadSliceCertificate c;
        c.kind = CertificateKind::criterion_a_ii;
        c.witness_weight = w;
        c.witness_multiplicity = k;
        short_relation(c);
        out.push_back(c);
    }
    Int z = weight_multiplicity(vphi, Vec(g.dim(), 0));
    if (z > 1) {
        BadSliceCertificate c;
        c.kind = CertificateKind::criterion_a_iii;
        c.witness_weight = Vec(g.dim(), 0);
        c.witness_multiplicity = z;
        short_relation(c);
        out.push_back(c);
    }
    return out;
}

std::optional<BadSliceCertificate> product_group_rule(const ModuleSpec& m, const MonoidLimits& limits) {
    const auto& g = m.group;
    if (g.factors().size() < 2 || g.torus_rank() != 0) throw std::invalid_argument("need at least two simple factors");
    if (m.summands.size() != 1 || m.summands[0].coef != 1) throw std::invalid_argument("need an irreducible module");
    if (!has_toral_slice(m)) throw std::invalid_argument("some root is not a weight of the module");

    auto simple = [&](int f, int i) {
        Vec a(g.factors()[f].rank(), 0);
        a[i] = 1;
        return g.embed(g.factors()[f].root_to_dynkin(a), f);
    };
    BadSliceCertificate c;
    c.kind = CertificateKind::product_rule;
    std::size_t k = g.factors().size();
    if (k > 2) {
        Vec a = simple(0, 0), b = simple(1, 0), d = simple(2, 0);
        c.weights = {add(a, b), add(b, d), add(a, d), neg(add(add(a, b), d))};
        c.relation = {1, 1, 1, 2};
        c.notes.emplace_back("simple roots from three distinct factors");
    } else {
        int big = g.factors()[0].rank() > 1 ? 0 : (g.factors()[1].rank() > 1 ? 1 : -1);
        if (big < 0) {
            // A1 x A1: only sl2 (x) sl2 escapes, decided by the slice monoid.
            auto t = bad_toral_slice(m, limits);
            if (t) {
                t->kind = CertificateKind::product_rule;
                t->notes.emplace_back("A1 x A1 case decided on the toral slice");
            }
            return t;
        }
        const auto& rs = g.factors()[big];
        int i = 0, j = -1;
        for (int p = 0; p < rs.rank() && j < 0; ++p)
            for (int q = 0; q < rs.rank(); ++q)
                if (p != q && rs.cartan()[p][q] != 0) {
                    i = p;
                    j = q;
                    break;
                }
        Vec a = simple(big, i), b = simple(big, j), d = simple(1 - big, 0);
        c.weights = {add(a, d), sub(a, d), sub(b, d), add(neg(add(a, b)), d)};
        c.relation = {1, 1, 2, 2};
        c.notes.emplace_back("adjacent simple roots of a factor of rank > 1 against a simple root of the other");
    }
    if (!all_in_slice(m, c.weights)) throw std::logic_error("product relation weights missing from the slice");
    c.notes.emplace_back(kGenericZeroVector);
    finalize(c);
    return c;
}

}  // namespace coreduce
