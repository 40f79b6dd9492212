#include "coreduce/verify.hpp"

#include "coreduce/nullcone.hpp"
#include "coreduce/slices.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace coreduce {

using json = nlohmann::json;

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

struct Row {
    const char* group;
    const char* module;
    bool positive;
};

// Rows of the classification tables, by suite.
const std::vector<Row> kExceptionalRows{
    {"G2", "[0,1]", true},         {"G2", "2[1,0]", true},
    {"G2", "3[1,0]", false},       {"G2", "[1,0]+[0,1]", false},
    {"F4", "[1,0,0,0]", true},     {"F4", "2[0,0,0,1]", true},
    {"F4", "3[0,0,0,1]", false},   {"E6", "[0,1,0,0,0,0]", true},
    {"E6", "[1,0,0,0,0,1]", false}, {"E7", "[1,0,0,0,0,0,0]", true},
    {"E7", "[0,0,0,0,0,1,0]", false}, {"E8", "[0,0,0,0,0,0,0,1]", true},
    {"E8", "[1,0,0,0,0,0,0,0]", false},
};

const std::vector<Row> kClassicalRows{
    {"A3", "[1,0,1]", true},   {"A3", "[0,2,0]", true},   {"A3", "[4,0,0]", false},
    {"B2", "2[1,0]", true},    {"B2", "3[1,0]", false},   {"B3", "[0,1,0]", true},
    {"B3", "[2,0,0]", true},   {"C3", "[0,1,0]", true},   {"C3", "[1,0,1]", false},
    {"C4", "[0,0,0,1]", true}, {"D4", "[0,0,2,0]", true}, {"D4", "2[2,0,0,0]", false},
};

const std::vector<Row> kSemisimpleRows{
    {"A1xA1", "[2,2]", true},          {"B2xB3", "[1,0,1,0,0]", true}, {"A1xG2", "[2,1,0]", true},
    {"A1xA1xA1", "[2,2,2]", false},    {"G2xG2", "[1,0,1,0]", false},  {"B2xG2", "[1,0,1,0]", false},
    {"A2xA2", "[1,1,1,1]", false},
};

const std::vector<Row> kSl3Rows{
    {"A2", "[1,0]", true},          {"A2", "[3,0]", true},         {"A2", "[0,2]", true},
    {"A2", "[1,1]", true},          {"A2", "3[1,0]+2[0,1]", true}, {"A2", "[2,0]+[0,1]", true},
    {"A2", "[0,2]+[1,0]", true},    {"A2", "[2,1]", false},        {"A2", "[3,1]", false},
    {"A2", "[4,0]", false},         {"A2", "2[2,0]", false},       {"A2", "[2,0]+[1,0]", false},
    {"A2", "[2,0]+2[0,1]", false},  {"A2", "[1,1]+[1,0]", false},
};

// Binary forms: R_1 with any multiplicity, and R_2, R_3, R_4 alone.
bool sl2_listed(const std::vector<Int>& parts) {
    int kinds = 0, which = -1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] > 0) ++kinds, which = static_cast<int>(i);
    if (kinds != 1) return false;
    return which == 0 || (parts[which] == 1 && which <= 3);
}

class Suite {
public:
    Suite(std::string name, const VerifyOptions& o) : o_(o) { r_.suite = std::move(name); }

    void check(std::string name, bool ok, json detail = json::object()) {
        r_.checks.push_back({std::move(name), ok, std::move(detail)});
    }
    const VerifyOptions& opts() const { return o_; }
    SuiteResult take() { return std::move(r_); }

    void rows(const std::vector<Row>& rows) {
        for (const auto& row : rows) {
            auto m = ModuleSpec::parse(GroupSpec::parse(row.group), row.module);
            auto v = classify(m, o_.classify);
            bool ok = is_positive(v.coreduced) == row.positive && verdict_consistent(v);
            check(std::string("table ") + row.group + " " + row.module, ok,
                  {{"coreduced", coreduced_name(v.coreduced)}, {"expected_positive", row.positive}});
        }
    }

    // No machine negative rule may fire on a maximal table entry.
    void fixture(const std::vector<const char*>& groups) {
        for (const char* g : groups) {
            json fired = json::array();
            for (const auto& m : maximal_coreduced(GroupSpec::parse(g)))
                for (const auto& rule : negative_rules_firing(m, o_.classify))
                    fired.push_back({{"module", m.str()}, {"rule", rule}});
            check(std::string("fixture consistency ") + g, fired.empty(), {{"fired", fired}});
        }
    }

private:
    const VerifyOptions& o_;
    SuiteResult r_;
};

ModuleSpec M(const char* g, const char* m) { return ModuleSpec::parse(GroupSpec::parse(g), m); }

void torus_suite(Suite& s) {
    auto t1 = GroupSpec::parse("T1");
    for (Int k = 1; k <= 8; ++k) {
        auto w = parse_weight_list(t1, std::to_string(k) + "," + std::to_string(-k) + "," + std::to_string(k));
        s.check("weights +-" + std::to_string(k), is_torus_coreduced(w).coreduced);
    }
    auto ex = is_torus_coreduced(parse_weight_list(t1, "4,-4,6,-6"));
    bool ok = !ex.coreduced && ex.violating && *ex.violating == Vec{3, 0, 0, 2};
    s.check("weights 4,-4,6,-6", ok,
            {{"coreduced", ex.coreduced}, {"certificate", ex.violating ? json(*ex.violating) : json()}});

    auto t2 = GroupSpec::parse("T2");
    s.check("weights +-e1, +-e2", is_torus_coreduced(parse_weight_list(t2, "[1,0];[-1,0];[0,1];[0,-1]")).coreduced);
}

void sl2_suite(Suite& s) {
    // Every module of dimension at most 10 without trivial summands.
    int total = 0, mismatched = 0, uncertified = 0;
    std::function<void(std::vector<Int>&, int, int)> sweep = [&](std::vector<Int>& parts, int i, int room) {
        if (i == static_cast<int>(parts.size())) {
            if (std::all_of(parts.begin(), parts.end(), [](Int k) { return k == 0; })) return;
            auto v = classify_sl2(parts, s.opts().classify);
            ++total;
            if (is_positive(v.coreduced) != sl2_listed(parts) || !verdict_consistent(v)) ++mismatched;
            if (!is_positive(v.coreduced) && v.coreduced != Coreduced::no) ++uncertified;
            return;
        }
        for (int k = 0; k * (i + 2) <= room; ++k) {
            parts[i] = k;
            sweep(parts, i + 1, room - k * (i + 2));
        }
        parts[i] = 0;
    };
    std::vector<Int> parts(9, 0);
    sweep(parts, 0, 10);
    s.check("classification of binary forms up to dimension 10", mismatched == 0 && uncertified == 0,
            {{"modules", total}, {"mismatched", mismatched}, {"without_machine_certificate", uncertified}});

    auto m2 = M("A1", "2[2]");
    auto sets = admissible_sets(m2, true);
    auto inv = covariant_generator_exists(m2, Vec{0}, 2, s.opts().state_limit).invariants;
    std::vector<int> degrees(static_cast<std::size_t>(inv[2]), 2);
    auto screen = negative_weight_degree_screen(m2, sets.at(0), degrees, s.opts().state_limit);
    s.check("2R2 degree screen", screen.rank_bound == 2 && screen.codim_lower == 3 && screen.not_reduced,
            {{"rank_bound", screen.rank_bound}, {"codim_lower", screen.codim_lower}});

    auto c = covariant_generator_exists(M("A1xA1", "3[1,1]"), Vec{1, 1}, 3, s.opts().state_limit);
    s.check("three copies of C^4: cubic covariant count", c.lhs == 19 && c.rhs == 18 && c.exists,
            {{"lhs", c.lhs}, {"rhs", c.rhs}});
}

void exceptional_suite(Suite& s) {
    auto f4 = GroupSpec::parse("F4");
    const auto& rs = f4.factors()[0];
    auto phi4 = ModuleSpec::irreducible(f4, Vec{0, 0, 0, 1});
    auto w = module_weights(phi4);
    std::set<Vec> support, short_roots;
    bool simple_support = true;
    for (const auto& [v, k] : w.sorted())
        if (!is_zero(v)) support.insert(v), simple_support = simple_support && k == 1;
    for (const auto& p : rs.positive_roots())
        if (!rs.is_long_root(p)) short_roots.insert(rs.root_to_dynkin(p)), short_roots.insert(neg(rs.root_to_dynkin(p)));
    s.check("F4 26-dimensional module",
            phi4.dim() == 26 && w.at(Vec(4, 0)) == 2 && simple_support && support == short_roots,
            {{"dim", phi4.dim().str()}, {"zero_weight_multiplicity", w.at(Vec(4, 0))}, {"support", support.size()}});

    for (auto [lam, bound] : std::vector<std::pair<Vec, Int>>{{{0, 1, 0, 0}, 2}, {{0, 0, 1, 0}, 2},
                                                                 {{2, 0, 0, 0}, 3}, {{1, 0, 0, 1}, 3},
                                                                 {{0, 0, 0, 2}, 3}}) {
        auto r = min_root_multiplicity(ModuleSpec::irreducible(f4, lam));
        s.check("F4 " + to_string(lam, '[', ']') + " root multiplicity >= " + std::to_string(bound), r.min >= bound,
                {{"min_root_multiplicity", r.min}});
    }

    auto e7 = GroupSpec::parse("E7");
    auto r = min_root_multiplicity(ModuleSpec::irreducible(e7, Vec{0, 0, 0, 0, 0, 0, 2}));
    s.check("E7 [0,0,0,0,0,0,2] root multiplicity", r.min == 5, {{"min_root_multiplicity", r.min}});
    for (int i = 1; i <= 5; ++i) {
        Vec lam(7, 0);
        lam[i] = 1;
        auto [k, at] = max_nonzero_multiplicity(ModuleSpec::irreducible(e7, lam));
        s.check("E7 " + to_string(lam, '[', ']') + " nonzero weight multiplicity >= 6", k >= 6,
                {{"max_nonzero_multiplicity", k}, {"weight", at}});
    }
    s.rows(kExceptionalRows);
    s.fixture({"G2", "F4", "E6", "E7", "E8"});
}

void classical_suite(Suite& s) {
    s.rows(kClassicalRows);
    for (int n = 2; n <= 3; ++n)
        for (Int k = 1; k <= n + 1; ++k) {
            Vec lam(n, 0);
            lam[0] = 1;
            auto g = GroupSpec::parse("B" + std::to_string(n));
            auto v = classify(ModuleSpec::irreducible(g, lam, k), s.opts().classify);
            s.check(g.name() + " " + std::to_string(k) + " copies of the vector module",
                    is_positive(v.coreduced) == (k <= n) && verdict_consistent(v),
                    {{"coreduced", coreduced_name(v.coreduced)}});
        }
    for (const auto& orbit : std::vector<std::vector<Vec>>{{{2, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}},
                                                           {{2, 0, 2, 0}, {2, 0, 0, 2}, {0, 0, 2, 2}}}) {
        std::set<bool> seen;
        json verdicts = json::array();
        for (const auto& lam : orbit) {
            auto v = classify(ModuleSpec::irreducible(GroupSpec::parse("D4"), lam), s.opts().classify);
            seen.insert(is_positive(v.coreduced));
            verdicts.push_back(coreduced_name(v.coreduced));
        }
        s.check("D4 triality " + to_string(orbit[0], '[', ']'), seen.size() == 1, {{"verdicts", verdicts}});
    }
    s.fixture({"A3", "B2", "B3", "C3", "C4", "D4"});
}

void semisimple_suite(Suite& s) {
    s.rows(kSemisimpleRows);
    auto g = GroupSpec::parse("A1xA1xA2");
    auto m = ModuleSpec::parse(g, "[1,1,1,0]+[1,1,0,1]");
    auto z = admissible_from(m, Cocharacter{g, {2, 0, 2, 2}});
    auto inv = covariant_generator_exists(m, Vec(4, 0), 4, s.opts().state_limit).invariants;
    // One quadratic generator; its square spans one dimension of the quartics.
    std::vector<int> degrees(static_cast<std::size_t>(inv[2]), 2);
    for (Int k = 0; k < inv[4] - inv[2]; ++k) degrees.push_back(4);
    auto sc = negative_weight_degree_screen(m, z, degrees, s.opts().state_limit);
    s.check("SO4 x SL3 degree screen", sc.rank_bound == 4 && sc.codim_lower == 8 && sc.not_reduced,
            {{"rank_bound", sc.rank_bound}, {"codim_lower", sc.codim_lower}, {"invariant_degrees", degrees}});

    auto v = classify(M("A1xA1xA1", "[2,2,2]"), s.opts().classify);
    bool toral = std::any_of(v.certificates.begin(), v.certificates.end(),
                             [](const Certificate& c) { return c.kind == "toral_relation"; });
    s.check("triple orthogonal product: final torus", toral && verdict_consistent(v),
            {{"coreduced", coreduced_name(v.coreduced)}});
    s.fixture({"A1xA1", "B2xB3", "A1xG2", "A1xB2"});
}

void sl3_suite(Suite& s) {
    auto m = M("A2", "[3,1]");
    auto ratios = critical_ratios(m);
    std::vector<std::string> shown;
    for (const auto& q : ratios) shown.push_back(to_string(q));
    s.check("V[3,1] critical ratios", ratios == std::vector<Q>{Q(1, 4), Q(2, 5), Q(1), Q(5, 2), Q(4)},
            {{"ratios", shown}});
    auto sets = admissible_sets(m, true);
    auto a = analyze_components(sets);
    s.check("V[3,1] dominant classes", a.dominant_classes.size() == 2, {{"classes", a.dominant_classes.size()}});

    Vec target{1, 0};
    auto c = covariant_generator_exists(m, target, 8, s.opts().state_limit);
    bool vanish = true;
    for (const auto& l : sets)
        if (l.status == DominanceStatus::dominant) vanish = vanish && covariant_vanishes(l, target, 8);
    s.check("V[3,1] generating covariant of type [1,0] in degree 8", c.exists && vanish,
            {{"lhs", c.lhs}, {"rhs", c.rhs}, {"vanishes_on_components", vanish}});

    s.rows(kSl3Rows);
    int mismatched = 0, checked = 0;
    for (Int r = 0; r <= 4; ++r)
        for (Int t = 0; t <= 4 - r; ++t) {
            if (r + t == 0) continue;
            auto x = ModuleSpec::irreducible(GroupSpec::parse("A2"), Vec{r, t});
            for (const auto& y : {x, ModuleSpec::parse(x.group, x.str() + "+[1,0]")}) {
                ++checked;
                if (is_positive(classify_sl3(y, s.opts().classify).coreduced) !=
                    is_positive(classify_sl3(y.dual(), s.opts().classify).coreduced))
                    ++mismatched;
            }
        }
    s.check("duality", mismatched == 0, {{"modules", checked}, {"mismatched", mismatched}});
    s.fixture({"A2"});
}

void appendix_a_suite(Suite& s) {
    auto f4 = GroupSpec::parse("F4");
    const auto& rs = f4.factors()[0];
    auto m = ModuleSpec::irreducible(f4, Vec{0, 0, 0, 1}, 2);
    Q h(1, 2);
    std::vector<std::pair<int, Vec>> v{{0, rs.from_eps({0, 0, 1, 0})},
                                       {0, rs.from_eps({h, -h, -h, h})},
                                       {1, rs.from_eps({0, 1, 0, 0})},
                                       {1, rs.from_eps({h, -h, -h, -h})}};
    auto r = support_orbit_dim_bound(m, v);
    s.check("support-matrix reduction",
            r.columns == 45 && r.singletons_after_column == 34 && r.bound == 44 && r.bound == 2 * 26 - 8,
            {{"columns", r.columns},
             {"after_column", r.after_column},
             {"singletons_after_column", r.singletons_after_column},
             {"bound", r.bound}});

    RootSystem d4(SimpleType{Family::D, 4});
    Vec target = d4.from_eps({1, 1, 0, 0});
    auto cases = d4_exterior_cases();
    int infeasible = 0;
    for (const auto& blocks : cases) infeasible += !d4_case_feasible(blocks, target);
    s.check("D4 one-per-block cases for e1+e2", cases.size() == 3 && infeasible == 3,
            {{"cases", cases.size()}, {"infeasible", infeasible}});

    auto ms = sl3sl3_bifundamentals();
    bool signs = true;
    for (const auto& row : sl3sl3_model_table()) signs = signs && sl3sl3_signs(row.values) == row.signs;
    s.check("model table sign patterns", signs);
    const std::array<Int, 6> model{8, -3, -5, 6, -2, -4};
    auto sc = one_negative_screen(ms, sl3sl3_cocharacter(model), Vec{3, 3, 3, 3});
    s.check("model row (8,-3,-5,6,-2,-4)", sc.max_negative == -14 && sc.min_positive_sum == 19 && sc.vanishes,
            {{"max_negative", to_string(sc.max_negative)}, {"min_positive_sum", to_string(sc.min_positive_sum)}});

    auto vf = classify(ModuleSpec::irreducible(f4, Vec{0, 0, 0, 1}, 3), s.opts().classify);
    s.check("F4 three copies of the 26-dimensional module", vf.coreduced == Coreduced::no && verdict_consistent(vf),
            {{"coreduced", coreduced_name(vf.coreduced)}});
}

void appendix_b_suite(Suite& s) {
    auto models = g2g2_models();
    auto sets = g2g2_maximal_sets();
    std::set<std::vector<Vec>> supports;
    auto m = M("G2xG2", "[1,0,1,0]");
    auto weights = module_weights(m).nonzero_list();
    int generic = 0;
    for (const auto& l : sets) {
        supports.insert(l.support());
        generic += l.defining.generic_for(weights);
    }
    s.check("maximal admissible sets", models.size() == 8 && sets.size() == 16 && supports.size() == 16 && generic == 16,
            {{"models", models.size()}, {"sets", sets.size()}, {"distinct", supports.size()}});

    Vec target{0, 0, 1, 0};
    int infeasible = 0;
    for (const auto& l : sets)
        infeasible += !exists_sum(l.support(), target, 9, SumMode::exact_count, s.opts().state_limit).feasible;
    s.check("no sum of nine members reaches the target", infeasible == 16, {{"infeasible", infeasible}});

    auto c = covariant_generator_exists(m, target, 9, s.opts().state_limit);
    std::vector<Int> cov(c.covariants.begin() + 1, c.covariants.end());
    std::vector<Int> inv(c.invariants.begin() + 1, c.invariants.end());
    s.check("covariant series", cov == std::vector<Int>{0, 0, 1, 1, 3, 5, 12, 18, 41}, {{"degrees_1_to_9", cov}});
    s.check("invariant series", inv == std::vector<Int>{0, 1, 1, 3, 2, 8, 7, 17, 19}, {{"degrees_1_to_9", inv}});
    // The displayed sum 1*12 + 1*5 + 3*3 + 2*1 + 8*1 is 36.
    s.check("bound arithmetic", c.rhs == 36 && c.rhs < c.lhs && c.exists, {{"lhs", c.lhs}, {"rhs", c.rhs}});

    auto bif = sl3sl3_bifundamentals();
    auto series = graded_invariant_series(bif, Vec{3, 3, 3, 3}, s.opts().state_limit);
    std::vector<Int> diag;
    for (Int k = 1; k <= 3; ++k) diag.push_back(series.table.at(Vec{k, k, k, k}));
    s.check("Poincare coefficients on the diagonal", diag == std::vector<Int>{4, 37, 265}, {{"k_1_to_3", diag}});
}

const std::map<std::string, void (*)(Suite&)>& registry() {
    static const std::map<std::string, void (*)(Suite&)> r{
        {"torus", torus_suite},           {"sl2", sl2_suite},         {"exceptional", exceptional_suite},
        {"classical", classical_suite},   {"semisimple", semisimple_suite}, {"sl3", sl3_suite},
        {"appendixA", appendix_a_suite},  {"appendixB", appendix_b_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"torus",      "sl2", "exceptional", "classical",
                                                "semisimple", "sl3", "appendixA",   "appendixB"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& o) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite: '" + name + "'");
    Suite s(name, o);
    it->second(s);
    return s.take();
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& o) {
    for (const auto& n : names)
        if (!registry().count(n)) throw std::invalid_argument("unknown suite: '" + n + "'");
    std::vector<SuiteResult> out(names.size());
    if (names.empty()) return out;
    std::vector<std::exception_ptr> errors(names.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < names.size();) {
            try {
                out[i] = run_suite(names[i], o);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t n = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(o.jobs, 1)), 1, names.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

json to_json(const SuiteResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

std::string to_text(const SuiteResult& r) {
    std::ostringstream out;
    for (const auto& c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name;
        if (!c.detail.empty()) out << "  " << c.detail.dump();
        out << '\n';
    }
    out << (r.passed() ? "PASS " : "FAIL ") << r.suite << '\n';
    return out.str();
}

}  // namespace coreduce
