#include <doctest.h>

#include "coreduce/classify.hpp"
#include "coreduce/nullcone.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>

using namespace coreduce;
using json = nlohmann::json;

namespace {

GroupSpec G(const char* s) { return GroupSpec::parse(s); }
ModuleSpec M(const char* g, const char* m) { return ModuleSpec::parse(G(g), m); }

// Partitions of j into at most d parts, each at most m.
Int box_partitions(int d, int m, int j) {
    if (j < 0) return 0;
    // cur[p][s]: partitions of s into at most p parts, parts bounded by the sizes added so far.
    std::vector<std::vector<Int>> cur(d + 1, std::vector<Int>(j + 1, 0));
    for (int p = 0; p <= d; ++p) cur[p][0] = 1;
    for (int part = 1; part <= m; ++part) {
        auto next = cur;
        for (int p = 1; p <= d; ++p)
            for (int s = part; s <= j; ++s) next[p][s] += next[p - 1][s - part];
        cur = next;
    }
    return cur[d][j];
}

// Cayley-Sylvester: multiplicity of R_k in S^d(R_m).
Int cayley_sylvester(int m, int d, int k) {
    if ((d * m - k) % 2 != 0 || k > d * m) return 0;
    int j = (d * m - k) / 2;
    return box_partitions(d, m, j) - box_partitions(d, m, j - 1);
}

// Hand-encoded lists of coreduced modules.
bool sl2_listed(const std::map<int, Int>& parts) {
    if (parts.size() != 1) return false;
    auto [i, k] = *parts.begin();
    return i == 1 || (k == 1 && i >= 2 && i <= 4);
}

bool sl3_listed(const std::map<std::pair<int, int>, Int>& c) {
    Int total = 0;
    for (const auto& [w, k] : c) total += k;
    static const std::set<std::pair<int, int>> irr{{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}};
    if (total == 1) return irr.count(c.begin()->first) > 0;
    bool standard = true;
    for (const auto& [w, k] : c)
        if (w != std::pair{1, 0} && w != std::pair{0, 1}) standard = false;
    if (standard) return true;
    using C = std::map<std::pair<int, int>, Int>;
    return c == C{{{2, 0}, 1}, {{0, 1}, 1}} || c == C{{{0, 2}, 1}, {{1, 0}, 1}};
}

std::vector<std::string> kinds(const Verdict& v) {
    std::vector<std::string> out;
    for (const auto& c : v.certificates) out.push_back(c.kind);
    return out;
}

void check_verdict(const Verdict& v) {
    CHECK(verdict_consistent(v));
    if (v.coreduced == Coreduced::no) CHECK_FALSE(v.certificates.empty());
    if (v.coreduced == Coreduced::yes_paper_proof || v.coreduced == Coreduced::no_paper_proof)
        CHECK_FALSE(v.citations.empty());
}

}  // namespace

TEST_CASE("verdict names round trip") {
    for (auto c : {Coreduced::yes, Coreduced::no, Coreduced::yes_paper_proof, Coreduced::no_paper_proof})
        CHECK(coreduced_from_name(coreduced_name(c)) == c);
    CHECK_THROWS_AS(coreduced_from_name("maybe"), std::invalid_argument);
    CHECK(is_positive(Coreduced::yes_paper_proof));
    CHECK_FALSE(is_positive(Coreduced::no_paper_proof));
}

TEST_CASE("sl2: the list kR1, R2, R3, R4 over small modules") {
    // Every module with summands among R1..R5 of total dimension <= 10.
    std::vector<std::vector<Int>> all;
    std::vector<Int> cur(5, 0);
    std::function<void(int, int)> rec = [&](int i, int room) {
        if (i == 5) {
            if (std::any_of(cur.begin(), cur.end(), [](Int k) { return k > 0; })) all.push_back(cur);
            return;
        }
        for (int k = 0; k * (i + 2) <= room; ++k) {
            cur[i] = k;
            rec(i + 1, room - k * (i + 2));
        }
        cur[i] = 0;
    };
    rec(0, 10);
    int machine = 0;
    for (const auto& parts : all) {
        std::map<int, Int> p;
        for (int i = 0; i < 5; ++i)
            if (parts[i] > 0) p[i + 1] = parts[i];
        auto v = classify_sl2(parts);
        INFO(v.module.str());
        CHECK(is_positive(v.coreduced) == sl2_listed(p));
        CHECK(v.theorem_tag == "sl2");
        check_verdict(v);
        if (v.coreduced == Coreduced::no) ++machine;
    }
    // Every non-listed module here is machine-certified.
    int negatives = 0;
    for (const auto& parts : all) {
        std::map<int, Int> p;
        for (int i = 0; i < 5; ++i)
            if (parts[i] > 0) p[i + 1] = parts[i];
        if (!sl2_listed(p)) ++negatives;
    }
    CHECK(machine == negatives);
}

TEST_CASE("sl2: 2R2 by the degree screen, R6 by a toral slice, R5 by a covariant") {
    auto v = classify_sl2({0, 2});
    REQUIRE(v.coreduced == Coreduced::no);
    CHECK(kinds(v) == std::vector<std::string>{"degree_screen"});
    CHECK(v.certificates[0].data.at("rank_bound") == 2);
    CHECK(v.certificates[0].data.at("codim_lower") == 3);

    auto r6 = classify_sl2({0, 0, 0, 0, 0, 1});
    REQUIRE(r6.coreduced == Coreduced::no);
    REQUIRE(r6.certificates[0].kind == "bad_slice");
    for (const auto& w : r6.certificates[0].data.at("weights")) {
        Int x = w.at(0).get<Int>();
        CHECK((x == 4 || x == -4 || x == 6 || x == -6));
    }

    auto r5 = classify_sl2({0, 0, 0, 0, 1});
    REQUIRE(r5.coreduced == Coreduced::no);
    REQUIRE(r5.certificates[0].kind == "covariant");
    const auto& d = r5.certificates[0].data;
    int deg = d.at("degree").get<int>();
    int k = static_cast<int>(d.at("target").at(0).get<Int>());
    CHECK(d.at("lhs").get<Int>() == cayley_sylvester(5, deg, k));
    Int rhs = 0;
    for (int e = 1; e < deg; ++e) rhs += cayley_sylvester(5, deg - e, 0) * cayley_sylvester(5, e, k);
    CHECK(d.at("rhs").get<Int>() == rhs);
}

TEST_CASE("sl2: invalid parts") {
    CHECK_THROWS_AS(classify_sl2({}), std::invalid_argument);
    CHECK_THROWS_AS(classify_sl2({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(classify_sl2({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(classify(M("A1", "[0]+[1]")), std::invalid_argument);
}

TEST_CASE("sl3: irreducible sweep r + s <= 6, every negative machine-certified") {
    for (int r = 0; r <= 6; ++r)
        for (int s = 0; r + s <= 6; ++s) {
            if (r + s == 0) continue;
            auto m = ModuleSpec::irreducible(G("A2"), Vec{r, s});
            auto v = classify_sl3(m);
            INFO(m.str());
            CHECK(is_positive(v.coreduced) == sl3_listed({{{r, s}, 1}}));
            if (!is_positive(v.coreduced)) CHECK(v.coreduced == Coreduced::no);
            check_verdict(v);
        }
}

TEST_CASE("sl3: reducible sums of two listed irreducibles") {
    const std::vector<std::pair<int, int>> irr{{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}, {3, 0}, {0, 3}};
    for (std::size_t i = 0; i < irr.size(); ++i)
        for (std::size_t j = i; j < irr.size(); ++j) {
            std::map<std::pair<int, int>, Int> c;
            ++c[irr[i]];
            ++c[irr[j]];
            ModuleSpec m{G("A2"), {}};
            for (const auto& [w, k] : c) m.summands.push_back({k, Vec{w.first, w.second}});
            auto v = classify_sl3(m);
            INFO(m.str());
            CHECK(is_positive(v.coreduced) == sl3_listed(c));
            if (!is_positive(v.coreduced)) CHECK(v.coreduced == Coreduced::no);
            check_verdict(v);
        }
}

TEST_CASE("sl3: V[3,1] has generating covariants of type V[1,0] in degree 8") {
    auto v = classify_sl3(M("A2", "[3,1]"));
    REQUIRE(v.coreduced == Coreduced::no);
    REQUIRE(v.certificates[0].kind == "covariant");
    const auto& d = v.certificates[0].data;
    CHECK(d.at("degree") == 8);
    CHECK(d.at("target") == json::array({1, 0}));
    CHECK(d.at("lhs") == 44);
    CHECK(d.at("cocharacters").size() == 2);
}

TEST_CASE("sl3: V[2,0] + 2V[0,1] records an irreducible null cone of codimension 3") {
    for (const char* s : {"[2,0]+2[0,1]", "[0,2]+2[1,0]"}) {
        auto v = classify_sl3(M("A2", s));
        REQUIRE(v.coreduced == Coreduced::no);
        REQUIRE(v.certificates[0].kind == "null_cone");
        const auto& d = v.certificates[0].data;
        CHECK(d.at("classes") == 1);
        CHECK(d.at("codim_lower").get<Int>() <= 3);
        CHECK(d.at("codim_upper").get<Int>() >= 3);
        CHECK(v.citations.size() == 1);
        check_verdict(v);
    }
}

TEST_CASE("sl3: larger standard sums and preconditions") {
    CHECK(classify_sl3(M("A2", "3[1,0]+2[0,1]")).coreduced == Coreduced::yes_paper_proof);
    auto v = classify_sl3(M("A2", "[2,0]+[0,1]+[1,0]"));
    CHECK(v.coreduced == Coreduced::no);
    check_verdict(v);
    CHECK_THROWS_AS(classify_sl3(M("A2", "[0,0]+[1,0]")), std::invalid_argument);
    CHECK_THROWS_AS(classify_sl3(M("A1", "[1]")), std::invalid_argument);
}

TEST_CASE("duality: a module and its dual get the same verdict") {
    for (const char* s : {"[2,1]", "[4,0]", "[2,0]+[1,0]", "[1,1]+[0,1]", "[2,0]+[0,1]", "[3,2]"}) {
        auto m = M("A2", s);
        INFO(s);
        CHECK(classify(m).coreduced == classify(m.dual()).coreduced);
    }
    for (const char* s : {"[1,0,1]", "[4,0,0]", "[0,2,0]"}) {
        auto m = M("A3", s);
        INFO(s);
        CHECK(classify(m).coreduced == classify(m.dual()).coreduced);
    }
}

TEST_CASE("exceptional: maximal entries and negative rows") {
    struct Row {
        const char* g;
        const char* m;
        bool positive;
    };
    for (const Row& r : {Row{"E6", "[0,1,0,0,0,0]", true}, Row{"E7", "[1,0,0,0,0,0,0]", true},
                         Row{"E8", "[0,0,0,0,0,0,0,1]", true}, Row{"F4", "[1,0,0,0]", true},
                         Row{"F4", "2[0,0,0,1]", true}, Row{"F4", "[0,0,0,1]", true}, Row{"G2", "[0,1]", true},
                         Row{"G2", "2[1,0]", true}, Row{"G2", "[1,0]", true}, Row{"E6", "2[0,1,0,0,0,0]", false},
                         Row{"F4", "[0,0,0,1]+[1,0,0,0]", false}, Row{"G2", "[1,0]+[0,1]", false},
                         Row{"G2", "[2,0]", false}, Row{"E8", "[1,0,0,0,0,0,0,0]", false}}) {
        auto v = classify_adjoint_exceptional(M(r.g, r.m));
        INFO(r.g << " " << r.m);
        CHECK(is_positive(v.coreduced) == r.positive);
        CHECK(v.theorem_tag == "exceptional");
        check_verdict(v);
    }
}

TEST_CASE("exceptional: E7 fundamentals of the adjoint group other than the adjoint") {
    // phi3, phi4, phi6 carry a nonzero weight of multiplicity at least 6.
    for (int i : {2, 3, 5}) {
        Vec w(7, 0);
        w[i] = 1;
        auto m = ModuleSpec::irreducible(G("E7"), w);
        CHECK(max_nonzero_multiplicity(m).first >= 6);
        auto v = classify(m);
        CHECK(v.coreduced == Coreduced::no);
        check_verdict(v);
    }
    CHECK_THROWS_AS(classify(M("E7", "[0,0,0,0,0,0,1]")), std::invalid_argument);
}

TEST_CASE("exceptional: F4 two and three copies of the 26-dimensional module") {
    auto two = classify(M("F4", "2[0,0,0,1]"));
    CHECK(two.coreduced == Coreduced::yes);
    REQUIRE(kinds(two) == std::vector<std::string>{"dense_orbit"});
    CHECK(two.certificates[0].data.at("bound") == 44);
    check_verdict(two);

    auto three = classify(M("F4", "3[0,0,0,1]"));
    CHECK(three.coreduced == Coreduced::no);
    REQUIRE(kinds(three) == std::vector<std::string>{"exterior_cases"});
    CHECK(three.certificates[0].data.at("copies_in_cube") == 7);
    check_verdict(three);

    auto four = classify(M("F4", "4[0,0,0,1]"));
    CHECK(four.coreduced == Coreduced::no);
    CHECK(kinds(four) == std::vector<std::string>{"summand"});
    check_verdict(four);
}

TEST_CASE("exceptional: G2 three copies of the 7-dimensional module") {
    auto v = classify(M("G2", "3[1,0]"));
    CHECK(v.coreduced == Coreduced::no);
    REQUIRE(kinds(v) == std::vector<std::string>{"alternating_covariant"});
    check_verdict(v);
}

TEST_CASE("classical: table entries and certified negatives") {
    struct Row {
        const char* g;
        const char* m;
        bool positive;
    };
    for (const Row& r : {Row{"A3", "[1,0,1]", true}, Row{"A3", "[0,2,0]", true}, Row{"A4", "[1,0,0,1]", true},
                         Row{"B2", "[0,2]", true}, Row{"B2", "[2,0]", true}, Row{"B2", "2[1,0]", true},
                         Row{"B3", "3[1,0,0]", true}, Row{"B3", "[0,1,0]+[1,0,0]", false},
                         Row{"C3", "[2,0,0]", true}, Row{"C3", "[0,1,0]", true}, Row{"C3", "[1,0,1]", false},
                         Row{"C4", "[0,0,0,1]", true}, Row{"D4", "[0,1,0,0]", true}, Row{"D4", "[2,0,0,0]", true},
                         Row{"D5", "[0,0,0,1,1]", false}, Row{"A3", "[4,0,0]", false},
                         Row{"A3", "2[1,0,1]", false}}) {
        auto v = classify_adjoint_classical(M(r.g, r.m));
        INFO(r.g << " " << r.m);
        CHECK(is_positive(v.coreduced) == r.positive);
        check_verdict(v);
    }
    // A2 goes through the SL3 classification.
    CHECK(classify_adjoint_classical(M("A2", "[1,1]")).theorem_tag == "sl3");
    CHECK_THROWS_AS(classify_adjoint_classical(M("A3", "[0,1,0]")), std::invalid_argument);
    CHECK_THROWS_AS(classify_adjoint_classical(M("G2", "[0,1]")), std::invalid_argument);
}

TEST_CASE("classical: k copies of the standard SO(2n+1) module are coreduced iff k <= n") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= n + 1; ++k) {
            Vec w(n, 0);
            w[0] = 1;
            auto v = classify(ModuleSpec::irreducible(G(n == 2 ? "B2" : "B3"), w, k));
            CHECK(is_positive(v.coreduced) == (k <= n));
            check_verdict(v);
        }
}

TEST_CASE("diagram automorphisms: D4 triality and the E6 flip") {
    auto a = classify(M("D4", "[2,0,0,0]")).coreduced;
    CHECK(classify(M("D4", "[0,0,2,0]")).coreduced == a);
    CHECK(classify(M("D4", "[0,0,0,2]")).coreduced == a);
    auto b = classify(M("D4", "[2,0,2,0]")).coreduced;
    CHECK(classify(M("D4", "[2,0,0,2]")).coreduced == b);
    CHECK(classify(M("D4", "[0,0,2,2]")).coreduced == b);
    CHECK(in_table(M("E6", "[0,1,0,0,0,0]")));
}

TEST_CASE("semisimple: the two coreduced families and the certified negatives") {
    struct Row {
        const char* g;
        const char* m;
        bool positive;
        const char* kind;
    };
    for (const Row& r : {Row{"A1xA1", "[2,2]", true, ""}, Row{"B2xB3", "[1,0,1,0,0]", true, ""},
                         Row{"A1xB2", "[2,1,0]", true, ""}, Row{"A1xG2", "[2,1,0]", true, ""},
                         Row{"G2xA1", "[1,0,2]", true, ""}, Row{"A1xA1", "[2,4]", false, "bad_slice"},
                         Row{"A1xA1xA1", "[2,2,2]", false, "toral_relation"},
                         Row{"A1xB2xB3", "[2,1,0,1,0,0]", false, "toral_relation"},
                         Row{"B2xG2", "[1,0,1,0]", false, "degree_screen"},
                         Row{"G2xB2", "[1,0,1,0]", false, "degree_screen"},
                         Row{"A2xA2", "[1,1,1,1]", false, "bad_slice"}}) {
        auto v = classify_semisimple_irreducible(M(r.g, r.m));
        INFO(r.g << " " << r.m);
        CHECK(is_positive(v.coreduced) == r.positive);
        if (!r.positive) {
            REQUIRE(v.coreduced == Coreduced::no);
            CHECK(v.certificates[0].kind == r.kind);
        }
        check_verdict(v);
    }
    CHECK_THROWS_AS(classify_semisimple_irreducible(M("A1xA1", "[2,0]")), std::invalid_argument);
    CHECK_THROWS_AS(classify_semisimple_irreducible(M("A1xA1", "[2,2]+[2,2]")), std::invalid_argument);
    CHECK_THROWS_AS(classify_semisimple_irreducible(M("A1xA1", "[1,2]")), std::invalid_argument);
}

TEST_CASE("semisimple: G2 x G2 covariant count exceeds the product bound") {
    auto v = classify(M("G2xG2", "[1,0,1,0]"));
    REQUIRE(v.coreduced == Coreduced::no);
    REQUIRE(v.certificates[0].kind == "covariant");
    const auto& d = v.certificates[0].data;
    CHECK(d.at("degree") == 9);
    CHECK(d.at("lhs") == 41);
    // The published bound is 37; the recomputed sum is one less.
    CHECK(d.at("rhs").get<Int>() <= 37);
    CHECK(d.at("cocharacters").size() == 16);
    CHECK(d.at("cover") == "all");
    check_verdict(v);
}

TEST_CASE("consistency: no machine negative rule fires on listed modules") {
    for (const char* s : {"[1]", "4[1]", "[2]", "[3]", "[4]"}) {
        INFO(s);
        CHECK(negative_rules_firing(M("A1", s)).empty());
    }
    for (const char* s : {"[1,0]", "[2,0]", "[3,0]", "[0,3]", "[1,1]", "2[1,0]+[0,1]", "[2,0]+[0,1]"}) {
        INFO(s);
        CHECK(negative_rules_firing(M("A2", s)).empty());
    }
    for (const char* s : {"[0,1]", "2[1,0]"}) CHECK(negative_rules_firing(M("G2", s)).empty());
    for (const char* s : {"[0,2]", "[2,0]", "2[1,0]"}) CHECK(negative_rules_firing(M("B2", s)).empty());
    for (const auto& m : maximal_coreduced(G("F4"))) CHECK(negative_rules_firing(m).empty());
    for (const auto& m : maximal_coreduced(G("E6"))) CHECK(negative_rules_firing(m).empty());
    // And they do fire on a listed negative.
    CHECK_FALSE(negative_rules_firing(M("A1", "[6]")).empty());
}

TEST_CASE("tables: maximal entries are in the table, their doubles are not") {
    for (const char* g : {"A3", "A4", "B2", "B3", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
        auto top = maximal_coreduced(G(g));
        CHECK_FALSE(top.empty());
        for (const auto& m : top) {
            INFO(g << " " << m.str());
            CHECK(in_table(m));
            auto twice = m;
            for (auto& s : twice.summands) s.coef *= 2;
            CHECK_FALSE(in_table(twice));
        }
    }
    CHECK(maximal_coreduced(G("A1xA1")).empty());
}

TEST_CASE("certificates: JSON round trip and tamper detection") {
    std::vector<Verdict> vs{classify(M("A1", "[6]")),           classify(M("A1", "2[2]")),
                            classify(M("A2", "[3,1]")),         classify(M("A2", "[2,0]+2[0,1]")),
                            classify(M("A2", "[2,0]+[1,0]")),   classify(M("F4", "2[0,0,0,1]")),
                            classify(M("F4", "4[0,0,0,1]")),    classify(M("G2", "3[1,0]")),
                            classify(M("A1xA1xA1", "[2,2,2]")), classify(M("B2xG2", "[1,0,1,0]"))};
    for (const auto& v : vs) {
        INFO(v.module.str());
        auto j = to_json(v);
        auto back = verdict_from_json(json::parse(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(verdict_consistent(back));
    }
    // Tampering breaks revalidation.
    auto c = vs[0].certificates[0];
    c.data["relation"][0] = c.data["relation"][0].get<Int>() + 1;
    CHECK_FALSE(revalidate(c));
    auto cov = vs[2].certificates[0];
    cov.data["lhs"] = 4;
    CHECK_FALSE(revalidate(cov));
    cov = vs[2].certificates[0];
    cov.data["cocharacters"].erase(0);
    CHECK_FALSE(revalidate(cov));
    auto scr = vs[1].certificates[0];
    scr.data["invariant_degrees"] = json::array({2, 2});
    CHECK_FALSE(revalidate(scr));
    auto graded = vs[4].certificates[0];
    REQUIRE(graded.data.value("graded", false));
    graded.data["max_total_degree"] = 2;
    CHECK_FALSE(revalidate(graded));
    auto tor = vs[8].certificates[0];
    tor.data["relation"] = json::array({1, 1, 1, 1});
    CHECK_FALSE(revalidate(tor));
    Certificate unknown{"mystery", "", json::object()};
    CHECK_FALSE(revalidate(unknown));
    CHECK_THROWS_AS(verdict_from_json(json{{"group", "A1"}}), std::invalid_argument);
    auto bad = to_json(vs[0]);
    bad["certificates"] = json::array();
    CHECK_THROWS_AS(verdict_from_json(bad), std::invalid_argument);
}

TEST_CASE("report: stable order, schema and text table") {
    std::vector<Verdict> vs{classify(M("G2", "[0,1]")), classify(M("A1", "[2]")), classify(M("E6", "[0,1,0,0,0,0]")),
                            classify(M("A1", "[1]")), classify(M("F4", "3[0,0,0,1]"))};
    auto rows = emit_report(vs);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].theorem_tag == "exceptional");
    CHECK(rows[0].group == "E6");
    CHECK(rows[1].group == "F4");
    CHECK(rows[1].certificate_kinds == std::vector<std::string>{"exterior_cases"});
    CHECK(rows[2].group == "G2");
    CHECK(rows[3].module == "[1]");
    CHECK(rows[4].module == "[2]");
    auto j = report_json(rows);
    CHECK(j.at("schema") == kReportSchema);
    CHECK(j.at("rows").size() == 5);
    auto t = report_text(rows);
    CHECK(t.rfind("theorem_tag", 0) == 0);
    CHECK(std::count(t.begin(), t.end(), '\n') == 6);
    // Reordering the input does not change the report.
    std::reverse(vs.begin(), vs.end());
    CHECK(report_json(emit_report(vs)) == j);
}

TEST_CASE("golden verdicts") {
    std::ifstream in(std::string(COREDUCE_SOURCE_DIR) + "/tests/golden/verdicts.json");
    REQUIRE(in.good());
    auto g = json::parse(in);
    CHECK(g.at("schema") == "coreduce.golden/1");
    for (const auto& r : g.at("rows")) {
        auto m = ModuleSpec::parse(GroupSpec::parse(r.at("group").get<std::string>()), r.at("module").get<std::string>());
        INFO(r.dump());
        auto v = classify(m);
        CHECK(is_positive(v.coreduced) == r.at("positive").get<bool>());
        check_verdict(v);
    }
}
