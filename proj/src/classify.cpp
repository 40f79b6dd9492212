#include "coreduce/classify.hpp"

#include "coreduce/nullcone.hpp"
#include "coreduce/slices.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace coreduce {

using json = nlohmann::json;

namespace {

using Counts = std::map<Vec, Int>;

json vec_json(const Vec& v) { return json(v); }
Vec vec_from(const json& j) { return j.get<Vec>(); }
std::vector<Vec> vecs_from(const json& j) { return j.get<std::vector<Vec>>(); }

json qvec_json(const QVec& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}
QVec qvec_from(const json& j) {
    QVec out;
    for (const auto& s : j) out.push_back(parse_rational(s.get<std::string>()));
    return out;
}

Counts counts(const ModuleSpec& m) {
    Counts c;
    for (const auto& s : m.summands)
        if (s.coef > 0) c[s.highest] += s.coef;
    return c;
}

ModuleSpec from_counts(const GroupSpec& g, const Counts& c) {
    ModuleSpec m{g, {}};
    for (const auto& [w, k] : c)
        if (k > 0) m.summands.push_back({k, w});
    return m;
}

bool sub_counts(const Counts& a, const Counts& b) {
    for (const auto& [w, k] : a) {
        auto it = b.find(w);
        if (it == b.end() || it->second < k) return false;
    }
    return true;
}

bool irreducible(const ModuleSpec& m) {
    auto c = counts(m);
    return c.size() == 1 && c.begin()->second == 1;
}

json module_json(const ModuleSpec& m) { return {{"group", m.group.name()}, {"module", m.str()}}; }
ModuleSpec module_from(const json& j) {
    auto g = GroupSpec::parse(j.at("group").get<std::string>());
    return ModuleSpec::parse(g, j.at("module").get<std::string>());
}

bool is_simple(const GroupSpec& g, Family f) {
    return g.factors().size() == 1 && g.torus_rank() == 0 && g.factors()[0].type().family == f;
}
bool is_simple(const GroupSpec& g, Family f, int rank) {
    return is_simple(g, f) && g.factors()[0].rank() == rank;
}

Vec unit(int n, int i, Int k = 1) {
    Vec v(n, 0);
    v[i] = k;
    return v;
}

// Permutations of Dynkin nodes induced by diagram automorphisms of a simple group.
std::vector<std::vector<int>> node_permutations(const GroupSpec& g) {
    int n = g.dim();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> out{id};
    if (g.factors().size() != 1) return out;
    auto t = g.factors()[0].type();
    if (t.family == Family::A && n > 1) {
        std::vector<int> r(id.rbegin(), id.rend());
        out.push_back(r);
    } else if (t.family == Family::D && n == 4) {
        std::vector<int> outer{0, 2, 3};
        std::sort(outer.begin(), outer.end());
        do {
            if (outer == std::vector<int>{0, 2, 3}) continue;
            std::vector<int> p = id;
            p[0] = outer[0];
            p[2] = outer[1];
            p[3] = outer[2];
            out.push_back(p);
        } while (std::next_permutation(outer.begin(), outer.end()));
    } else if (t.family == Family::D) {
        auto p = id;
        std::swap(p[n - 2], p[n - 1]);
        out.push_back(p);
    } else if (t.family == Family::E && n == 6) {
        out.push_back({5, 1, 4, 3, 2, 0});
    }
    return out;
}

Counts permute(const Counts& c, const std::vector<int>& p) {
    Counts out;
    for (const auto& [w, k] : c) {
        Vec v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) v[p[i]] = w[i];
        out[v] += k;
    }
    return out;
}

// ---------------------------------------------------------------- certificates

Certificate bad_slice_certificate(const ModuleSpec& m, const BadSliceCertificate& b) {
    Certificate c;
    c.kind = "bad_slice";
    c.claim = std::string(kind_name(b.kind)) + ": the slice at a zero-weight vector is not coreduced";
    c.data = module_json(m);
    c.data["rule"] = kind_name(b.kind);
    json ws = json::array();
    for (const auto& w : b.weights) ws.push_back(vec_json(w));
    c.data["weights"] = ws;
    c.data["relation"] = vec_json(b.relation);
    if (b.witness_weight) {
        c.data["witness_weight"] = vec_json(*b.witness_weight);
        c.data["witness_multiplicity"] = b.witness_multiplicity;
    }
    c.data["notes"] = b.notes;
    return c;
}

Certificate summand_certificate(const ModuleSpec& m, const ModuleSpec& part, const Certificate& inner) {
    Certificate c;
    c.kind = "summand";
    c.claim = "the summand " + part.str() + " is not coreduced, and a retraction onto it preserves non-coreducedness";
    c.data = module_json(m);
    c.data["summand"] = part.str();
    c.data["inner"] = to_json(inner);
    return c;
}

std::vector<AdmissibleSet> component_candidates(const ModuleSpec& m) {
    auto sets = admissible_sets(m, true);
    analyze_components(sets);
    std::vector<AdmissibleSet> out;
    for (auto& s : sets)
        if (s.status != DominanceStatus::dominated) out.push_back(s);
    return out;
}

// Degrees of a generating set, each degree repeated up to a bound on its generator count.
std::vector<int> invariant_degree_bound(const ModuleSpec& m, int dmax, std::size_t limit) {
    std::vector<int> out;
    if (dmax < 1) return out;
    auto powers = symmetric_powers(module_weights(m), dmax, limit);
    Vec zero(m.group.dim(), 0);
    std::vector<Int> inv{1};
    for (int d = 1; d <= dmax; ++d) {
        inv.push_back(mult_in_character(powers[d], zero));
        // Multiplication by one invariant of degree e embeds S^{d-e}(V)^G.
        Int decomposable = 0;
        for (int e = 1; e < d; ++e)
            if (inv[e] > 0) decomposable = std::max(decomposable, inv[d - e]);
        for (Int i = 0; i < inv[d] - decomposable; ++i) out.push_back(d);
    }
    return out;
}

bool same_support(const AdmissibleSet& a, const AdmissibleSet& b) { return a.support() == b.support(); }

// ---------------------------------------------------------------- revalidation

bool revalidate_bad_slice(const json& d) {
    auto m = module_from(d);
    auto ws = vecs_from(d.at("weights"));
    auto rel = vec_from(d.at("relation"));
    const auto rule = d.at("rule").get<std::string>();
    bool checked = false;
    if (!rel.empty()) {
        auto r = check_relation(ws, rel);
        if (!r.sums_to_zero || !r.big_coefficient || r.indecomposable == false) return false;
        checked = true;
    }
    if (d.contains("witness_weight")) {
        if (weight_multiplicity(m, vec_from(d.at("witness_weight"))) < d.at("witness_multiplicity").get<Int>())
            return false;
        checked = true;
    }
    if (rule == kind_name(CertificateKind::toral_relation)) {
        auto s = toral_slice_weights(m);
        for (const auto& w : ws)
            if (s.weights.at(w) < 1) return false;
    }
    if (rule == kind_name(CertificateKind::roots_mult2) && min_root_multiplicity(m).min < 2) return false;
    return checked;
}

bool revalidate_toral_relation(const json& d) {
    auto g = GroupSpec::parse(d.at("group").get<std::string>());
    auto ws = vecs_from(d.at("weights"));
    auto rel = vec_from(d.at("relation"));
    for (const auto& w : ws)
        if (static_cast<int>(w.size()) != g.dim()) return false;
    auto r = check_relation(ws, rel);
    if (!r.sums_to_zero || !r.big_coefficient || r.indecomposable == false) return false;
    return !is_torus_coreduced(ws).coreduced;
}

bool revalidate_covariant(const json& d) {
    auto m = module_from(d);
    Vec target = vec_from(d.at("target"));
    int deg = d.at("degree").get<int>();
    auto c = covariant_generator_exists(m, target, deg);
    if (!c.exists || c.lhs != d.at("lhs").get<Int>() || c.rhs != d.at("rhs").get<Int>()) return false;
    std::vector<AdmissibleSet> listed;
    for (const auto& v : d.at("cocharacters")) {
        auto l = admissible_from(m, Cocharacter{m.group, qvec_from(v)});
        if (!covariant_vanishes(l, target, deg)) return false;
        listed.push_back(l);
    }
    const auto cover = d.at("cover").get<std::string>();
    std::vector<AdmissibleSet> needed;
    if (cover == "all") {
        needed = admissible_sets(m, true);
    } else if (cover == "components") {
        needed = component_candidates(m);
    } else {
        return false;
    }
    for (const auto& s : needed)
        if (std::none_of(listed.begin(), listed.end(), [&](const AdmissibleSet& l) { return same_support(l, s); }))
            return false;
    return true;
}

bool revalidate_degree_screen(const json& d) {
    auto m = module_from(d);
    auto l = admissible_from(m, Cocharacter{m.group, qvec_from(d.at("cocharacter"))});
    const auto comp = d.at("component").get<std::string>();
    if (comp == "analysis") {
        auto sets = admissible_sets(m, true);
        analyze_components(sets);
        bool found = false;
        for (const auto& s : sets)
            if (same_support(s, l)) {
                if (s.status != DominanceStatus::dominant) return false;
                found = true;
            }
        if (!found) return false;
        l.status = DominanceStatus::dominant;
    } else if (comp == "cited") {
        l.status = DominanceStatus::dominant;
    } else {
        return false;
    }
    if (d.value("graded", false)) {
        int dmax = negative_weight_degree_screen(m, l, {}).max_degree;
        if (d.at("max_total_degree").get<int>() < dmax) return false;
        auto g = graded_degree_screen(m, l, d.at("max_total_degree").get<int>());
        return g.not_reduced && g.rank_bound == d.at("rank_bound").get<Int>() &&
               g.codim_lower == d.at("codim_lower").get<Int>();
    }
    auto degs = d.at("invariant_degrees").get<std::vector<int>>();
    // The degree list is the recomputed generator bound up to the usable degree.
    int dmax = negative_weight_degree_screen(m, l, {}).max_degree;
    if (degs != invariant_degree_bound(m, dmax, 50'000'000)) return false;
    auto s = negative_weight_degree_screen(m, l, degs);
    return s.not_reduced && s.rank_bound == d.at("rank_bound").get<Int>() &&
           s.codim_lower == d.at("codim_lower").get<Int>();
}

bool revalidate_null_cone(const json& d) {
    auto m = module_from(d);
    auto sets = admissible_sets(m, true);
    auto a = analyze_components(sets);
    for (const auto& s : sets)
        if (s.status == DominanceStatus::unknown) return false;
    if (static_cast<Int>(a.dominant_classes.size()) != d.at("classes").get<Int>()) return false;
    auto l = admissible_from(m, Cocharacter{m.group, qvec_from(d.at("cocharacter"))});
    auto b = gz_dimension(m, l);
    Int dimv = static_cast<Int>(m.dim());
    return dimv - b.upper == d.at("codim_lower").get<Int>() && dimv - b.lower == d.at("codim_upper").get<Int>();
}

bool revalidate_dense_orbit(const json& d) {
    auto m = module_from(d);
    std::vector<std::pair<int, Vec>> v;
    for (const auto& e : d.at("support")) v.emplace_back(e.at(0).get<int>(), e.at(1).get<Vec>());
    auto r = support_orbit_dim_bound(m, v);
    Int bound = d.at("bound").get<Int>();
    Int null_dim = static_cast<Int>(m.dim()) - d.at("quotient_dim").get<Int>();
    return static_cast<Int>(r.bound) == bound && bound >= null_dim;
}

bool revalidate_exterior_cases(const json& d) {
    // The slice reduction is cited; the module must be at least three copies of the 26-dimensional F4 module.
    auto m = module_from(d);
    auto c = counts(m);
    if (!is_simple(m.group, Family::F) || c.size() != 1 || c.begin()->first != unit(4, 3) || c.begin()->second < 3)
        return false;
    auto g = GroupSpec::parse(d.at("slice_group").get<std::string>());
    if (!is_simple(g, Family::D, 4)) return false;
    Vec target = vec_from(d.at("target"));
    for (const auto& blocks : d4_exterior_cases())
        if (d4_case_feasible(blocks, target)) return false;
    auto ad = weight_diagram(g, target);
    return mult_in_product({&ad, &ad, &ad}, target) == d.at("copies_in_cube").get<Int>();
}

WeightMultiset exterior_cube(const WeightMultiset& chi) {
    std::vector<Vec> ws;
    for (const auto& [w, k] : chi.sorted())
        for (Int i = 0; i < k; ++i) ws.push_back(w);
    WeightMultiset out{chi.group, {}};
    for (std::size_t a = 0; a < ws.size(); ++a)
        for (std::size_t b = a + 1; b < ws.size(); ++b)
            for (std::size_t c = b + 1; c < ws.size(); ++c) out.add(add(add(ws[a], ws[b]), ws[c]), 1);
    return out;
}

bool revalidate_alternating(const json& d) {
    auto m = module_from(d);
    Vec target = vec_from(d.at("target"));
    // The exterior cube of three copies of V(target) sits in S^3(m).
    auto c = counts(m);
    if (!c.count(target) || c.at(target) < 3) return false;
    auto chi = weight_diagram(m.group, target);
    if (mult_in_character(exterior_cube(chi), target) < 1) return false;
    for (const auto& l : admissible_sets(m, true))
        if (!covariant_vanishes(l, target, 3)) return false;
    return true;
}

bool revalidate_summand(const json& d) {
    auto m = module_from(d);
    auto part = ModuleSpec::parse(m.group, d.at("summand").get<std::string>());
    if (!sub_counts(counts(part), counts(m))) return false;
    auto inner = certificate_from_json(d.at("inner"));
    if (inner.data.contains("module") && inner.data.contains("group")) {
        auto im = module_from(inner.data);
        if (!(im.group == part.group) || counts(im) != counts(part)) return false;
    }
    return revalidate(inner);
}

// ---------------------------------------------------------------- rules

struct Ctx {
    const ClassifyOptions& o;
    bool small(const ModuleSpec& m) const { return m.dim() <= o.max_dim; }
};

std::optional<Certificate> slice_rule(const ModuleSpec& m, const Ctx& x) {
    if (!x.small(m) || m.group.factors().empty()) return std::nullopt;
    try {
        if (auto b = roots_mult2_rule(m, x.o.limits); b && b->has_relation()) return bad_slice_certificate(m, *b);
    } catch (const LimitExceeded&) {
    }
    try {
        if (has_toral_slice(m))
            if (auto b = bad_toral_slice(m, x.o.limits)) return bad_slice_certificate(m, *b);
    } catch (const LimitExceeded&) {
    }
    if (m.group.factors().size() >= 2 && m.group.torus_rank() == 0 && irreducible(m)) {
        try {
            if (has_toral_slice(m))
                if (auto b = product_group_rule(m, x.o.limits)) return bad_slice_certificate(m, *b);
        } catch (const LimitExceeded&) {
        } catch (const std::invalid_argument&) {
        }
    }
    return std::nullopt;
}

std::optional<Certificate> degree_screen_rule(const ModuleSpec& m, const Ctx& x) {
    if (!x.small(m)) return std::nullopt;
    std::vector<AdmissibleSet> sets;
    try {
        sets = admissible_sets(m, true);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    analyze_components(sets);
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].status != DominanceStatus::dominant) continue;
        int deg = negative_weight_degree_screen(m, sets[i], {}, x.o.state_limit).max_degree;
        if (deg <= x.o.max_screen_degree) order.emplace_back(deg, i);
    }
    std::sort(order.begin(), order.end());
    auto record = [&](const AdmissibleSet& l, const std::string& claim) {
        Certificate c;
        c.kind = "degree_screen";
        c.claim = claim;
        c.data = module_json(m);
        c.data["cocharacter"] = qvec_json(l.defining.values);
        c.data["component"] = "analysis";
        return c;
    };
    // Ungraded first: it is cheaper and its certificate is smaller.
    for (const auto& [deg, i] : order) {
        const auto& l = sets[i];
        try {
            auto degs = invariant_degree_bound(m, deg, x.o.state_limit);
            auto s = negative_weight_degree_screen(m, l, degs, x.o.state_limit);
            if (!s.not_reduced) continue;
            auto c = record(l, "along a null-cone component the invariant differentials have rank <= " +
                                   std::to_string(s.rank_bound) + " < codimension >= " + std::to_string(s.codim_lower));
            c.data["invariant_degrees"] = degs;
            c.data["rank_bound"] = s.rank_bound;
            c.data["codim_lower"] = s.codim_lower;
            return c;
        } catch (const LimitExceeded&) {
        } catch (const std::length_error&) {
        } catch (const std::bad_alloc&) {
        }
    }
    for (const auto& [deg, i] : order) {
        const auto& l = sets[i];
        try {
            auto gs = graded_degree_screen(m, l, deg, x.o.state_limit);
            if (!gs.not_reduced) continue;
            auto c = record(l, "along a null-cone component the multigraded invariant generators have differential rank <= " +
                                   std::to_string(gs.rank_bound) + " < codimension >= " + std::to_string(gs.codim_lower));
            c.data["graded"] = true;
            c.data["max_total_degree"] = gs.max_total_degree;
            c.data["rank_bound"] = gs.rank_bound;
            c.data["codim_lower"] = gs.codim_lower;
            return c;
        } catch (const LimitExceeded&) {
        } catch (const std::length_error&) {
        } catch (const std::bad_alloc&) {
        }
    }
    return std::nullopt;
}

// A generating covariant of type target in some degree d, vanishing on every
// component candidate.
std::optional<Certificate> covariant_rule(const ModuleSpec& m, const std::vector<Vec>& targets, const Ctx& x) {
    if (!x.small(m)) return std::nullopt;
    std::vector<AdmissibleSet> comps;
    try {
        comps = component_candidates(m);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    const int dmax = x.o.max_covariant_degree;
    std::vector<WeightMultiset> powers;
    try {
        powers = symmetric_powers(module_weights(m), dmax, x.o.state_limit);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    Vec zero(m.group.dim(), 0);
    std::vector<Int> inv;
    for (const auto& p : powers) inv.push_back(mult_in_character(p, zero));
    for (const auto& t : targets) {
        std::vector<Int> cov;
        for (const auto& p : powers) cov.push_back(mult_in_character(p, t));
        for (int d = 2; d <= dmax; ++d) {
            auto c = covariant_bound_from_series(t, Vec(cov.begin(), cov.begin() + d + 1),
                                                 Vec(inv.begin(), inv.begin() + d + 1));
            if (!c.exists) continue;
            bool vanish = true;
            try {
                for (const auto& l : comps)
                    if (!covariant_vanishes(l, t, d, x.o.state_limit)) vanish = false;
            } catch (const LimitExceeded&) {
                vanish = false;
            }
            if (!vanish) continue;
            Certificate cert;
            cert.kind = "covariant";
            cert.claim = "a generating covariant of type " + to_string(t, '[', ']') + " in degree " +
                         std::to_string(d) + " vanishes on the null cone";
            cert.data = module_json(m);
            cert.data["target"] = vec_json(t);
            cert.data["degree"] = d;
            cert.data["lhs"] = c.lhs;
            cert.data["rhs"] = c.rhs;
            json ch = json::array();
            for (const auto& l : comps) ch.push_back(qvec_json(l.defining.values));
            cert.data["cocharacters"] = ch;
            cert.data["cover"] = "components";
            return cert;
        }
    }
    return std::nullopt;
}

Verdict make(const ModuleSpec& m, Coreduced c, std::string tag) {
    Verdict v;
    v.module = m;
    v.coreduced = c;
    v.theorem_tag = std::move(tag);
    return v;
}

Verdict negative(const ModuleSpec& m, const std::string& tag, std::optional<Certificate> cert,
                 const std::string& fallback_citation) {
    auto v = make(m, Coreduced::no, tag);
    if (cert) {
        v.certificates.push_back(*cert);
    } else {
        v.coreduced = Coreduced::no_paper_proof;
        v.citations.push_back(fallback_citation);
    }
    return v;
}

// Sub-sums of m with two or three summand copies, smallest first.
std::vector<Counts> small_subsums(const Counts& c) {
    std::vector<std::pair<Vec, Int>> items(c.begin(), c.end());
    std::set<Counts> out2, out3;
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i; j < items.size(); ++j) {
            Counts s;
            s[items[i].first] += 1;
            s[items[j].first] += 1;
            if (sub_counts(s, c)) out2.insert(s);
            for (std::size_t k = j; k < items.size(); ++k) {
                Counts t = s;
                t[items[k].first] += 1;
                if (sub_counts(t, c)) out3.insert(t);
            }
        }
    std::vector<Counts> out(out2.begin(), out2.end());
    out.insert(out.end(), out3.begin(), out3.end());
    return out;
}

// ---------------------------------------------------------------- tables

bool is_b1(const RootSystem& rs, const Vec& w) { return rs.type().family == Family::A && rs.rank() == 1 && w == Vec{2}; }
bool is_bn_vector(const RootSystem& rs, const Vec& w) {
    return is_b1(rs, w) || (rs.type().family == Family::B && w == unit(rs.rank(), 0));
}

bool sl3_irreducible_yes(const Vec& w) {
    static const std::set<Vec> ok{{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}};
    return ok.count(w) > 0;
}

bool sl3_in_table(const Counts& c) {
    Int total = 0;
    for (const auto& [w, k] : c) total += k;
    if (total == 1) return sl3_irreducible_yes(c.begin()->first);
    bool only_std = std::all_of(c.begin(), c.end(), [](const auto& e) { return e.first == Vec{1, 0} || e.first == Vec{0, 1}; });
    if (only_std) return true;
    return c == Counts{{{2, 0}, 1}, {{0, 1}, 1}} || c == Counts{{{0, 2}, 1}, {{1, 0}, 1}};
}

bool sl2_in_table(const Counts& c) {
    if (c.size() != 1) return false;
    const auto& [w, k] = *c.begin();
    if (w == Vec{1}) return true;
    return k == 1 && (w == Vec{2} || w == Vec{3} || w == Vec{4});
}

bool semisimple_in_table(const ModuleSpec& m) {
    const auto& g = m.group;
    if (g.factors().size() != 2 || g.torus_rank() != 0 || !irreducible(m)) return false;
    const Vec& w = m.summands[0].highest;
    Vec a = g.block(w, 0), b = g.block(w, 1);
    const auto& r0 = g.factors()[0];
    const auto& r1 = g.factors()[1];
    if (is_bn_vector(r0, a) && is_bn_vector(r1, b)) return true;
    auto g2_std = [](const RootSystem& rs, const Vec& v) { return rs.type().family == Family::G && v == Vec{1, 0}; };
    return (is_b1(r0, a) && g2_std(r1, b)) || (g2_std(r0, a) && is_b1(r1, b));
}

const char* kTagSl2 = "sl2";
const char* kTagExceptional = "exceptional";
const char* kTagClassical = "classical";
const char* kTagSemisimple = "semisimple";
const char* kTagSl3 = "sl3";

const char* kCiteSl2 = "generic stabilizer trivial or {+-1}: Frobenius reciprocity forces a generating covariant of "
                       "type R1 or R2 in degree > 1, which vanishes on the null cone";
const char* kCiteSlice = "slice representation at a closed orbit with a non-coreduced slice";
const char* kCiteYes = "coreducedness proved by hand (quotient dimension, cofreeness and slices)";

}  // namespace

// ---------------------------------------------------------------- public API

const char* coreduced_name(Coreduced c) {
    switch (c) {
        case Coreduced::yes: return "yes";
        case Coreduced::no: return "no";
        case Coreduced::yes_paper_proof: return "yes_paper_proof";
        case Coreduced::no_paper_proof: return "no_paper_proof";
    }
    return "?";
}

Coreduced coreduced_from_name(std::string_view s) {
    for (auto c : {Coreduced::yes, Coreduced::no, Coreduced::yes_paper_proof, Coreduced::no_paper_proof})
        if (s == coreduced_name(c)) return c;
    throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

bool revalidate(const Certificate& c) {
    const auto& d = c.data;
    try {
        if (c.kind == "bad_slice") return revalidate_bad_slice(d);
        if (c.kind == "toral_relation") return revalidate_toral_relation(d);
        if (c.kind == "covariant") return revalidate_covariant(d);
        if (c.kind == "degree_screen") return revalidate_degree_screen(d);
        if (c.kind == "null_cone") return revalidate_null_cone(d);
        if (c.kind == "dense_orbit") return revalidate_dense_orbit(d);
        if (c.kind == "exterior_cases") return revalidate_exterior_cases(d);
        if (c.kind == "alternating_covariant") return revalidate_alternating(d);
        if (c.kind == "summand") return revalidate_summand(d);
    } catch (const json::exception&) {
        return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
    return false;
}

bool verdict_consistent(const Verdict& v) {
    if (v.coreduced == Coreduced::no && v.certificates.empty()) return false;
    if ((v.coreduced == Coreduced::yes_paper_proof || v.coreduced == Coreduced::no_paper_proof) && v.citations.empty())
        return false;
    return std::all_of(v.certificates.begin(), v.certificates.end(), [](const Certificate& c) { return revalidate(c); });
}

json to_json(const Certificate& c) { return {{"kind", c.kind}, {"claim", c.claim}, {"data", c.data}}; }

Certificate certificate_from_json(const json& j) {
    try {
        return Certificate{j.at("kind").get<std::string>(), j.at("claim").get<std::string>(), j.at("data")};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad certificate: ") + e.what());
    }
}

json to_json(const Verdict& v) {
    json certs = json::array();
    for (const auto& c : v.certificates) certs.push_back(to_json(c));
    return {{"group", v.module.group.name()},    {"module", v.module.str()}, {"coreduced", coreduced_name(v.coreduced)},
            {"certificates", certs},             {"citations", v.citations}, {"theorem_tag", v.theorem_tag}};
}

Verdict verdict_from_json(const json& j) {
    try {
        Verdict v;
        v.module = module_from(j);
        v.coreduced = coreduced_from_name(j.at("coreduced").get<std::string>());
        for (const auto& c : j.at("certificates")) v.certificates.push_back(certificate_from_json(c));
        v.citations = j.at("citations").get<std::vector<std::string>>();
        v.theorem_tag = j.at("theorem_tag").get<std::string>();
        if (v.coreduced == Coreduced::no && v.certificates.empty())
            throw std::invalid_argument("verdict 'no' without a certificate");
        return v;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad verdict: ") + e.what());
    }
}

// ---------------------------------------------------------------- tables

std::vector<ModuleSpec> maximal_coreduced(const GroupSpec& g) {
    if (g.factors().size() != 1 || g.torus_rank() != 0) return {};
    const auto t = g.factors()[0].type();
    const int n = t.rank;
    auto irr = [&](const Vec& w, Int k = 1) { return ModuleSpec::irreducible(g, w, k); };
    std::vector<ModuleSpec> out;
    switch (t.family) {
        case Family::E:
            out.push_back(irr(n == 6 ? unit(6, 1) : (n == 7 ? unit(7, 0) : unit(8, 7))));
            break;
        case Family::F:
            out.push_back(irr(unit(4, 0)));
            out.push_back(irr(unit(4, 3), 2));
            break;
        case Family::G:
            out.push_back(irr(unit(2, 1)));
            out.push_back(irr(unit(2, 0), 2));
            break;
        case Family::A: {
            if (n < 2) break;
            Vec ad(n, 0);
            ad[0] = ad[n - 1] = 1;
            out.push_back(irr(ad));
            if (n == 3) out.push_back(irr(unit(3, 1, 2)));
            if (n == 2) out.push_back(irr(unit(2, 0, 3)));
            break;
        }
        case Family::B:
            if (n < 2) break;
            out.push_back(irr(n == 2 ? unit(2, 1, 2) : unit(n, 1)));
            out.push_back(irr(unit(n, 0, 2)));
            out.push_back(irr(unit(n, 0), n));
            break;
        case Family::C:
            if (n < 3) break;
            out.push_back(irr(unit(n, 0, 2)));
            out.push_back(irr(unit(n, 1)));
            if (n == 4) out.push_back(irr(unit(4, 3)));
            break;
        case Family::D:
            if (n < 4) break;
            out.push_back(irr(unit(n, 1)));
            out.push_back(irr(unit(n, 0, 2)));
            break;
    }
    return out;
}

bool in_table(const ModuleSpec& m) {
    const auto& g = m.group;
    auto c = counts(m);
    if (c.empty()) return false;
    if (is_simple(g, Family::A, 1)) return sl2_in_table(c);
    if (is_simple(g, Family::A, 2)) return sl3_in_table(c);
    if (g.factors().size() >= 2) return semisimple_in_table(m);
    for (const auto& p : node_permutations(g)) {
        auto pc = permute(c, p);
        for (const auto& top : maximal_coreduced(g))
            if (sub_counts(pc, counts(top))) return true;
    }
    return false;
}

std::vector<std::string> negative_rules_firing(const ModuleSpec& m, const ClassifyOptions& o) {
    Ctx x{o};
    std::vector<std::string> out;
    if (auto c = slice_rule(m, x)) out.push_back(c->data.at("rule").get<std::string>());
    if (m.group.semisimple_rank() <= 2) {
        if (degree_screen_rule(m, x)) out.push_back("degree_screen");
        std::vector<Vec> targets;
        for (const auto& [w, k] : counts(m)) targets.push_back(w);
        if (covariant_rule(m, targets, x)) out.push_back("covariant");
    }
    return out;
}

// ---------------------------------------------------------------- SL2

Verdict classify_sl2(const std::vector<Int>& parts, const ClassifyOptions& o) {
    if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](Int k) { return k < 0; }) ||
        std::all_of(parts.begin(), parts.end(), [](Int k) { return k == 0; }))
        throw std::invalid_argument("parts must be nonnegative and not all zero");
    GroupSpec g = GroupSpec::parse("A1");
    Counts c;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] > 0) c[Vec{static_cast<Int>(i + 1)}] = parts[i];
    auto m = from_counts(g, c);
    if (sl2_in_table(c)) {
        auto v = make(m, Coreduced::yes_paper_proof, kTagSl2);
        v.citations.emplace_back(c.begin()->first == Vec{1} ? "null cone of k R1 is the determinantal variety of rank <= 1; "
                                                              "its ideal is generated by the 2x2 minors"
                                                            : kCiteYes);
        return v;
    }
    Ctx x{o};
    // R_{2m}, m >= 3: bad toral slice. 2 R2: differential rank below codimension.
    if (irreducible(m) && c.begin()->first[0] % 2 == 0)
        if (auto s = slice_rule(m, x)) return negative(m, kTagSl2, s, kCiteSl2);
    if (c == Counts{{{2}, 2}})
        if (auto s = degree_screen_rule(m, x)) return negative(m, kTagSl2, s, kCiteSl2);
    std::vector<Vec> targets;
    for (Int t = 1; t <= 4; ++t) targets.push_back(Vec{t});
    if (auto s = covariant_rule(m, targets, x)) return negative(m, kTagSl2, s, kCiteSl2);
    // A non-coreduced summand.
    for (const auto& sub : small_subsums(c)) {
        if (sub == c || sl2_in_table(sub)) continue;
        auto part = from_counts(g, sub);
        std::optional<Certificate> s;
        if (sub == Counts{{{2}, 2}}) s = degree_screen_rule(part, x);
        if (!s) s = covariant_rule(part, targets, x);
        if (s) return negative(m, kTagSl2, summand_certificate(m, part, *s), kCiteSl2);
    }
    for (const auto& [w, k] : c) {
        auto part = ModuleSpec::irreducible(g, w);
        if (sl2_in_table(Counts{{w, 1}})) continue;
        std::optional<Certificate> s = slice_rule(part, x);
        if (!s) s = covariant_rule(part, targets, x);
        if (s) return negative(m, kTagSl2, m.summands.size() == 1 && k == 1 ? *s : summand_certificate(m, part, *s), kCiteSl2);
    }
    return negative(m, kTagSl2, std::nullopt, kCiteSl2);
}

// ---------------------------------------------------------------- SL3

namespace {

std::optional<Certificate> sl3_irreducible_negative(const ModuleSpec& m, const Ctx& x) {
    if (auto s = slice_rule(m, x)) return s;
    if (auto s = degree_screen_rule(m, x)) return s;
    return covariant_rule(m, {{1, 0}, {0, 1}}, x);
}

std::optional<Certificate> sl3_reducible_negative(const ModuleSpec& m, const Ctx& x) {
    if (auto s = slice_rule(m, x)) return s;
    if (auto s = degree_screen_rule(m, x)) return s;
    std::vector<Vec> targets;
    for (const auto& [w, k] : counts(m)) targets.push_back(w);
    for (Int r = 0; r <= 3; ++r)
        for (Int t = 0; r + t <= 3; ++t)
            if (r + t > 0 && std::find(targets.begin(), targets.end(), Vec{r, t}) == targets.end())
                targets.push_back(Vec{r, t});
    return covariant_rule(m, targets, x);
}

// Irreducible null cone and its codimension; the non-reducedness itself comes
// from the associated cone of a fiber through a non-coreduced slice.
std::optional<Certificate> null_cone_record(const ModuleSpec& m) {
    auto sets = admissible_sets(m, true);
    auto a = analyze_components(sets);
    for (const auto& s : sets)
        if (s.status == DominanceStatus::unknown) return std::nullopt;
    if (a.dominant_classes.size() != 1) return std::nullopt;
    const auto& l = sets[a.dominant_classes[0][0]];
    auto b = gz_dimension(m, l);
    Int dimv = static_cast<Int>(m.dim());
    Certificate c;
    c.kind = "null_cone";
    c.claim = "the null cone is irreducible of codimension in [" + std::to_string(dimv - b.upper) + "," +
              std::to_string(dimv - b.lower) + "]";
    c.data = module_json(m);
    c.data["classes"] = 1;
    c.data["cocharacter"] = qvec_json(l.defining.values);
    c.data["codim_lower"] = dimv - b.upper;
    c.data["codim_upper"] = dimv - b.lower;
    return c;
}

}  // namespace

Verdict classify_sl3(const ModuleSpec& m, const ClassifyOptions& o) {
    if (!is_simple(m.group, Family::A, 2)) throw std::invalid_argument("classify_sl3 needs the group A2");
    auto c = counts(m);
    if (c.empty()) throw std::invalid_argument("empty module");
    if (c.count(Vec{0, 0})) throw std::invalid_argument("trivial summands are not allowed");
    auto norm = from_counts(m.group, c);
    if (sl3_in_table(c)) {
        auto v = make(norm, Coreduced::yes_paper_proof, kTagSl3);
        v.citations.emplace_back(kCiteYes);
        return v;
    }
    Ctx x{o};
    const std::string cite = "counting of negative weights against low-degree invariants, or " + std::string(kCiteSlice);
    const bool single = c.size() == 1 && c.begin()->second == 1;
    for (const auto& [w, k] : c) {
        if (sl3_irreducible_yes(w)) continue;
        auto part = ModuleSpec::irreducible(m.group, w);
        auto s = sl3_irreducible_negative(part, x);
        if (single) return negative(norm, kTagSl3, s, cite);
        if (s) return negative(norm, kTagSl3, summand_certificate(norm, part, *s), cite);
    }
    // Every summand is on the irreducible list.
    const char* kCiteAssociated = "the SL2 slice 2 R2 + theta_1 has a non-reduced null cone of the same codimension "
                                  "three, so the associated cone of its fiber is the whole null cone";
    if (c == Counts{{{2, 0}, 1}, {{0, 1}, 2}} || c == Counts{{{0, 2}, 1}, {{1, 0}, 2}}) {
        if (auto r = null_cone_record(norm)) {
            auto v = make(norm, Coreduced::no, kTagSl3);
            v.certificates.push_back(*r);
            v.citations.emplace_back(kCiteAssociated);
            if (auto s = sl3_reducible_negative(norm, x)) v.certificates.push_back(*s);
            return v;
        }
    }
    std::vector<Counts> subs{c};
    for (const auto& s : small_subsums(c))
        if (s != c && !sl3_in_table(s)) subs.push_back(s);
    for (const auto& sub : subs) {
        auto part = from_counts(m.group, sub);
        std::optional<Certificate> s;
        try {
            s = sl3_reducible_negative(part, x);
        } catch (const LimitExceeded&) {
        }
        if (s) return negative(norm, kTagSl3, sub == c ? *s : summand_certificate(norm, part, *s), cite);
    }
    for (const auto& sub : subs) {
        if (sub != Counts{{{2, 0}, 1}, {{0, 1}, 2}} && sub != Counts{{{0, 2}, 1}, {{1, 0}, 2}}) continue;
        auto part = from_counts(m.group, sub);
        if (auto r = null_cone_record(part)) {
            auto v = negative(norm, kTagSl3, sub == c ? *r : summand_certificate(norm, part, *r), cite);
            v.citations.emplace_back(kCiteAssociated);
            return v;
        }
    }
    return negative(norm, kTagSl3, std::nullopt, cite);
}

// ---------------------------------------------------------------- exceptional

namespace {

std::optional<Certificate> f4_three_copies(const GroupSpec& g) {
    auto m = ModuleSpec::irreducible(g, unit(4, 3), 3);
    Certificate c;
    c.kind = "exterior_cases";
    c.claim = "on the D4 slice every adjoint covariant in the product of the three exterior squares vanishes on the "
              "null cone (no case writes the highest root as one weight per block)";
    c.data = module_json(m);
    auto d4 = GroupSpec::parse("D4");
    c.data["slice_group"] = "D4";
    c.data["slice_module"] = "2[1,0,0,0]+2[0,0,1,0]+2[0,0,0,1]";
    c.data["target"] = vec_json(unit(4, 1));
    auto ad = weight_diagram(d4, unit(4, 1));
    c.data["copies_in_cube"] = mult_in_product({&ad, &ad, &ad}, unit(4, 1));
    return c;
}

Certificate g2_three_copies(const GroupSpec& g) {
    auto m = ModuleSpec::irreducible(g, unit(2, 0), 3);
    Certificate c;
    c.kind = "alternating_covariant";
    c.claim = "the alternating cubic covariant of type phi1 vanishes on the null cone";
    c.data = module_json(m);
    c.data["target"] = vec_json(unit(2, 0));
    return c;
}

Certificate f4_dense_orbit(const ModuleSpec& m) {
    const auto& rs = m.group.factors()[0];
    Q h(1, 2);
    std::vector<std::pair<int, Vec>> v{{0, rs.from_eps({0, 0, 1, 0})},
                                       {0, rs.from_eps({h, -h, -h, h})},
                                       {1, rs.from_eps({0, 1, 0, 0})},
                                       {1, rs.from_eps({h, -h, -h, -h})}};
    auto r = support_orbit_dim_bound(m, v);
    Certificate c;
    c.kind = "dense_orbit";
    c.claim = "the orbit of a four-term vector has dimension >= " + std::to_string(r.bound) + " = dim of the null cone";
    c.data = module_json(m);
    json s = json::array();
    for (const auto& [k, w] : v) s.push_back(json::array({k, w}));
    c.data["support"] = s;
    c.data["bound"] = r.bound;
    c.data["quotient_dim"] = 8;
    return c;
}

template <class Rule>
std::optional<Certificate> first_bad_part(const ModuleSpec& m, const Counts& c, Rule rule) {
    for (const auto& [w, k] : c) {
        auto part = ModuleSpec::irreducible(m.group, w);
        if (in_table(part)) continue;
        if (auto s = rule(part)) return c.size() == 1 && k == 1 ? *s : summand_certificate(m, part, *s);
    }
    if (auto s = rule(m)) return s;
    for (const auto& sub : small_subsums(c)) {
        auto part = from_counts(m.group, sub);
        if (sub == c || in_table(part)) continue;
        if (auto s = rule(part)) return summand_certificate(m, part, *s);
    }
    return std::nullopt;
}

}  // namespace

Verdict classify_adjoint_exceptional(const ModuleSpec& m, const ClassifyOptions& o) {
    const auto& g = m.group;
    if (g.factors().size() != 1 || g.torus_rank() != 0) throw std::invalid_argument("need a simple group");
    auto fam = g.factors()[0].type().family;
    if (fam != Family::E && fam != Family::F && fam != Family::G) throw std::invalid_argument("need an exceptional group");
    auto c = counts(m);
    if (c.empty() || c.count(Vec(g.dim(), 0))) throw std::invalid_argument("need a nontrivial module without trivial summands");
    if (std::none_of(c.begin(), c.end(), [&](const auto& e) { return g.in_root_lattice(e.first); }))
        throw std::invalid_argument("module has no zero weight");
    auto norm = from_counts(g, c);
    if (in_table(norm)) {
        if (fam == Family::F && c == Counts{{unit(4, 3), 2}}) {
            auto v = make(norm, Coreduced::yes, kTagExceptional);
            v.certificates.push_back(f4_dense_orbit(norm));
            v.citations.emplace_back("two copies of the 26-dimensional module are cofree with an 8-dimensional quotient; "
                                     "a dense orbit in the complete-intersection null cone gives reducedness");
            return v;
        }
        auto v = make(norm, Coreduced::yes_paper_proof, kTagExceptional);
        v.citations.emplace_back(kCiteYes);
        return v;
    }
    Ctx x{o};
    std::vector<std::string> cites{kCiteSlice};
    std::optional<Certificate> s;
    if (fam == Family::F && c.count(unit(4, 3)) && c.at(unit(4, 3)) >= 3) {
        auto three = ModuleSpec::irreducible(g, unit(4, 3), 3);
        auto inner = *f4_three_copies(g);
        s = counts(norm) == counts(three) ? inner : summand_certificate(norm, three, inner);
        cites = {"seven adjoint copies in the cube of the adjoint module, only five in the ideal of the invariants",
                 "slice reduction from F4 through B4 to 2(phi1 + phi3 + phi4) of D4"};
    } else if (fam == Family::G && c.count(unit(2, 0)) && c.at(unit(2, 0)) >= 3) {
        auto three = ModuleSpec::irreducible(g, unit(2, 0), 3);
        auto inner = g2_three_copies(g);
        s = counts(norm) == counts(three) ? inner : summand_certificate(norm, three, inner);
        cites = {"an alternating cubic covariant is not in the ideal generated by the quadratic invariants"};
    }
    if (!s) s = first_bad_part(norm, c, [&](const ModuleSpec& p) { return slice_rule(p, x); });
    if (!s && g.semisimple_rank() <= 2)
        s = first_bad_part(norm, c, [&](const ModuleSpec& p) -> std::optional<Certificate> {
            if (auto d = degree_screen_rule(p, x)) return d;
            return covariant_rule(p, {unit(2, 0), unit(2, 1)}, x);
        });
    auto v = negative(norm, kTagExceptional, s, cites[0]);
    if (s) v.citations = cites;
    return v;
}

// ---------------------------------------------------------------- classical

Verdict classify_adjoint_classical(const ModuleSpec& m, const ClassifyOptions& o) {
    const auto& g = m.group;
    if (g.factors().size() != 1 || g.torus_rank() != 0) throw std::invalid_argument("need a simple group");
    const auto t = g.factors()[0].type();
    bool ok = (t.family == Family::A && t.rank >= 2) || (t.family == Family::B && t.rank >= 2) ||
              (t.family == Family::C && t.rank >= 3) || (t.family == Family::D && t.rank >= 4);
    if (!ok) throw std::invalid_argument("need A_n (n>=2), B_n (n>=2), C_n (n>=3) or D_n (n>=4)");
    auto c = counts(m);
    if (c.empty() || c.count(Vec(g.dim(), 0))) throw std::invalid_argument("need a nontrivial module without trivial summands");
    for (const auto& [w, k] : c)
        if (!g.in_root_lattice(w)) throw std::invalid_argument("not a module of the adjoint group: " + to_string(w, '[', ']'));
    auto norm = from_counts(g, c);
    if (t.family == Family::A && t.rank == 2) return classify_sl3(norm, o);
    if (in_table(norm)) {
        auto v = make(norm, Coreduced::yes_paper_proof, kTagClassical);
        v.citations.emplace_back(kCiteYes);
        return v;
    }
    Ctx x{o};
    std::string cite = kCiteSlice;
    Vec std1 = unit(t.rank, 0);
    if (t.family == Family::B && c.size() == 1 && c.begin()->first == std1) {
        cite = "k copies of the standard module of SO(2n+1) are coreduced exactly when k <= n";
        auto s = g.semisimple_rank() <= 3 ? degree_screen_rule(norm, x) : std::nullopt;
        if (!s) s = covariant_rule(norm, {std1}, x);
        return negative(norm, kTagClassical, s, cite);
    }
    auto s = first_bad_part(norm, c, [&](const ModuleSpec& p) { return slice_rule(p, x); });
    if (!s && g.semisimple_rank() <= 3)
        s = first_bad_part(norm, c, [&](const ModuleSpec& p) -> std::optional<Certificate> {
            if (auto d = degree_screen_rule(p, x)) return d;
            std::vector<Vec> targets;
            for (const auto& [w, k] : counts(p)) targets.push_back(w);
            return covariant_rule(p, targets, x);
        });
    return negative(norm, kTagClassical, s, cite);
}

// ---------------------------------------------------------------- semisimple

Verdict classify_semisimple_irreducible(const ModuleSpec& m, const ClassifyOptions& o) {
    const auto& g = m.group;
    if (g.factors().size() < 2 || g.torus_rank() != 0) throw std::invalid_argument("need at least two simple factors");
    if (!irreducible(m)) throw std::invalid_argument("need an irreducible module");
    const Vec& w = m.summands[0].highest;
    for (std::size_t f = 0; f < g.factors().size(); ++f) {
        GroupSpec one({g.factors()[f].type()});
        Vec b = g.block(w, static_cast<int>(f));
        if (is_zero(b)) throw std::invalid_argument("every factor must act nontrivially");
        if (!one.in_root_lattice(b)) throw std::invalid_argument("not a module of the adjoint group");
    }
    if (in_table(m)) {
        auto v = make(m, Coreduced::yes_paper_proof, kTagSemisimple);
        v.citations.emplace_back(
            "isotropy representation of a symmetric space, or cofree with reduced fibers away from zero");
        return v;
    }
    Ctx x{o};
    auto block_is = [&](int f, Family fam, const Vec& v) {
        return g.factors()[f].type().family == fam && g.block(w, f) == v;
    };
    // C^7 (x) C^7 over G2 x G2.
    if (g.factors().size() == 2 && block_is(0, Family::G, {1, 0}) && block_is(1, Family::G, {1, 0})) {
        Vec target{0, 0, 1, 0};
        auto cnt = covariant_generator_exists(m, target, 9, o.state_limit);
        Certificate c;
        c.kind = "covariant";
        c.claim = "generating covariants of type theta (x) phi1 in degree 9 vanish on every maximal positive weight space";
        c.data = module_json(m);
        c.data["target"] = vec_json(target);
        c.data["degree"] = 9;
        c.data["lhs"] = cnt.lhs;
        c.data["rhs"] = cnt.rhs;
        json ch = json::array();
        for (const auto& l : g2g2_maximal_sets()) ch.push_back(qvec_json(l.defining.values));
        c.data["cocharacters"] = ch;
        c.data["cover"] = "all";
        if (!cnt.exists) return negative(m, kTagSemisimple, std::nullopt, kCiteSlice);
        auto v = make(m, Coreduced::no, kTagSemisimple);
        v.certificates.push_back(c);
        return v;
    }
    // C^5 (x) C^7 over SO5 x G2: slice C^4 (x) (C^3 + C^3*) of SO4 x SL3.
    for (int f : {0, 1}) {
        if (g.factors().size() != 2 || !block_is(f, Family::B, {1, 0}) || !block_is(1 - f, Family::G, {1, 0})) continue;
        auto slice = ModuleSpec::parse(GroupSpec::parse("A1xA1xA2"), "[1,1,1,0]+[1,1,0,1]");
        QVec rho{Q(2), Q(0), Q(2), Q(2)};
        auto l = admissible_from(slice, Cocharacter{slice.group, rho});
        l.status = DominanceStatus::dominant;
        auto probe = negative_weight_degree_screen(slice, l, {}, o.state_limit);
        auto degs = invariant_degree_bound(slice, probe.max_degree, o.state_limit);
        auto s = negative_weight_degree_screen(slice, l, degs, o.state_limit);
        if (!s.not_reduced) break;
        Certificate c;
        c.kind = "degree_screen";
        c.claim = "on the slice C^4 (x) (C^3 + C^3*) the invariant differentials have rank <= " +
                  std::to_string(s.rank_bound) + " along a component of codimension >= " + std::to_string(s.codim_lower);
        c.data = module_json(slice);
        c.data["cocharacter"] = qvec_json(rho);
        c.data["invariant_degrees"] = degs;
        c.data["rank_bound"] = s.rank_bound;
        c.data["codim_lower"] = s.codim_lower;
        c.data["component"] = "cited";
        auto v = make(m, Coreduced::no, kTagSemisimple);
        v.certificates.push_back(c);
        v.citations.emplace_back("slice at the zero weight vector; the positive weight space is a component since its "
                                 "orbit under the opposite unipotent radical has the maximal dimension");
        return v;
    }
    // Three or more orthogonal factors with a C^3: the quotient chain ends in a torus.
    bool all_b = g.factors().size() >= 3;
    int smallest_b1 = -1;
    for (std::size_t f = 0; f < g.factors().size() && all_b; ++f) {
        Vec b = g.block(w, static_cast<int>(f));
        if (!is_bn_vector(g.factors()[f], b)) all_b = false;
        if (is_b1(g.factors()[f], b)) smallest_b1 = static_cast<int>(f);
    }
    if (all_b && smallest_b1 >= 0) {
        int b1_count = 0, mid = 0;
        for (std::size_t f = 0; f < g.factors().size(); ++f)
            if (is_b1(g.factors()[f], g.block(w, static_cast<int>(f)))) ++b1_count;
        mid = b1_count >= 2 ? 1 : 2;  // rank of SO(2m) in the middle factor
        Certificate c;
        c.kind = "toral_relation";
        if (mid == 1) {
            c.claim = "the final torus quotient has weights 2e, 2v, e+v, -e-v";
            c.data = {{"group", "T2"}, {"weights", json::array({Vec{2, 0}, Vec{0, 2}, Vec{1, 1}, Vec{-1, -1}})},
                      {"relation", Vec{1, 1, 0, 2}}};
        } else {
            c.claim = "the final torus quotient has weights -2e1, -2e2, e1+v, e2-v";
            c.data = {{"group", "T3"}, {"weights", json::array({Vec{-2, 0, 0}, Vec{0, -2, 0}, Vec{1, 0, 1}, Vec{0, 1, -1}})},
                      {"relation", Vec{1, 1, 2, 2}}};
        }
        auto v = make(m, Coreduced::no, kTagSemisimple);
        v.certificates.push_back(c);
        v.citations.emplace_back("slice at the zero weight vector, then quotients by orthogonal groups down to a torus");
        return v;
    }
    auto s = slice_rule(m, x);
    return negative(m, kTagSemisimple, s, "tensor-product slice lemmas for the five types of coreduced factors");
}

// ---------------------------------------------------------------- dispatch

Verdict classify(const ModuleSpec& m, const ClassifyOptions& o) {
    const auto& g = m.group;
    if (g.torus_rank() != 0 || g.factors().empty()) throw std::invalid_argument("need a semisimple group");
    if (g.factors().size() >= 2) return classify_semisimple_irreducible(m, o);
    auto t = g.factors()[0].type();
    if (t.family == Family::A && t.rank == 1) {
        std::vector<Int> parts;
        for (const auto& [w, k] : counts(m)) {
            if (w[0] == 0) throw std::invalid_argument("trivial summands are not allowed");
            if (static_cast<Int>(parts.size()) < w[0]) parts.resize(w[0], 0);
            parts[w[0] - 1] += k;
        }
        return classify_sl2(parts, o);
    }
    if (t.family == Family::A && t.rank == 2) return classify_sl3(m, o);
    if (t.family == Family::E || t.family == Family::F || t.family == Family::G) return classify_adjoint_exceptional(m, o);
    return classify_adjoint_classical(m, o);
}

// ---------------------------------------------------------------- report

std::vector<ReportRow> emit_report(const std::vector<Verdict>& verdicts) {
    std::vector<ReportRow> rows;
    for (const auto& v : verdicts) {
        ReportRow r{v.theorem_tag, v.module.group.name(), v.module.str(), coreduced_name(v.coreduced), {}};
        for (const auto& c : v.certificates) r.certificate_kinds.push_back(c.kind);
        rows.push_back(std::move(r));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.theorem_tag, a.group, a.module) < std::tie(b.theorem_tag, b.group, b.module);
    });
    return rows;
}

json report_json(const std::vector<ReportRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"theorem_tag", r.theorem_tag},
                       {"group", r.group},
                       {"module", r.module},
                       {"coreduced", r.coreduced},
                       {"certificates", r.certificate_kinds}});
    return {{"schema", kReportSchema}, {"rows", out}};
}

std::string report_text(const std::vector<ReportRow>& rows) {
    std::size_t w0 = 11, w1 = 5, w2 = 6, w3 = 9;
    for (const auto& r : rows) {
        w0 = std::max(w0, r.theorem_tag.size());
        w1 = std::max(w1, r.group.size());
        w2 = std::max(w2, r.module.size());
        w3 = std::max(w3, r.coreduced.size());
    }
    auto pad = [](const std::string& s, std::size_t n) { return s + std::string(n - s.size() + 2, ' '); };
    std::string out = pad("theorem_tag", w0) + pad("group", w1) + pad("module", w2) + pad("coreduced", w3) + "certificates\n";
    for (const auto& r : rows) {
        std::string kinds;
        for (const auto& k : r.certificate_kinds) kinds += (kinds.empty() ? "" : ",") + k;
        out += pad(r.theorem_tag, w0) + pad(r.group, w1) + pad(r.module, w2) + pad(r.coreduced, w3) + kinds + "\n";
    }
    return out;
}

}  // namespace coreduce
