#include "coreduce/cli.hpp"

#include "coreduce/classify.hpp"
#include "coreduce/nullcone.hpp"
#include "coreduce/slices.hpp"
#include "coreduce/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <new>
#include <random>
#include <sstream>
#include <stdexcept>

namespace coreduce::cli {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Payload plus the exit code it implies; this pair is what the cache stores.
struct Outcome {
    json payload;
    int exit = Exit::ok;
};

// FNV-1a, stable across platforms and builds.
std::string digest(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

class ResultCache {
public:
    explicit ResultCache(const std::string& dir) : dir_(dir.empty() ? fs::path() : fs::path(dir) / "results") {}

    Outcome get_or_compute(const json& key, const std::function<Outcome()>& compute) const {
        if (dir_.empty()) return compute();
        std::string k = key.dump();
        fs::path file = dir_ / (digest(k) + ".json");
        if (std::ifstream in{file}) {
            try {
                json j = json::parse(in);
                if (j.at("key") == key) return {j.at("payload"), j.at("exit").get<int>()};
            } catch (const json::exception&) {
                // Unreadable entries are recomputed and overwritten.
            }
        }
        Outcome o = compute();
        // Concurrent writers each rename a complete file into place.
        fs::path tmp = file;
        tmp += ".tmp" + std::to_string(std::random_device{}());
        {
            std::ofstream f{tmp};
            f << json{{"key", key}, {"payload", o.payload}, {"exit", o.exit}}.dump();
        }
        std::error_code ec;
        fs::rename(tmp, file, ec);
        if (ec) fs::remove(tmp, ec);
        return o;
    }

private:
    fs::path dir_;
};

json weight_mult_list(const std::vector<std::pair<Vec, Int>>& v) {
    json out = json::array();
    for (const auto& [w, k] : v) out.push_back({{"weight", w}, {"multiplicity", k}});
    return out;
}

json qvec_json(const QVec& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

json bad_slice_json(const BadSliceCertificate& b) {
    json j{{"kind", kind_name(b.kind)},
           {"weights", b.weights},
           {"relation", b.relation},
           {"exact", b.exact},
           {"notes", b.notes}};
    if (b.witness_weight) j["witness_weight"] = *b.witness_weight;
    if (b.witness_multiplicity) j["witness_multiplicity"] = b.witness_multiplicity;
    if (b.indecomposable) j["indecomposable"] = *b.indecomposable;
    return j;
}

json set_json(const AdmissibleSet& l, std::size_t index) {
    json j{{"index", index},
           {"weights", weight_mult_list(l.weights)},
           {"cocharacter", qvec_json(l.defining.values)},
           {"status", status_name(l.status)},
           {"z_dim", l.z_dim()}};
    if (l.dominated_by) j["dominated_by"] = *l.dominated_by;
    return j;
}

json big_json(const BigInt& b) {
    if (b <= std::numeric_limits<Int>::max()) return static_cast<Int>(b);
    return b.str();
}

std::string text_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(const std::string& command, const json& p, std::ostream& out) {
    if (command == "verify-paper") {
        for (const auto& s : p.at("suites")) {
            for (const auto& c : s.at("checks")) {
                out << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << s.at("suite").get<std::string>() << ": "
                    << c.at("name").get<std::string>();
                if (!c.at("detail").empty()) out << "  " << c.at("detail").dump();
                out << '\n';
            }
            out << (s.at("passed").get<bool>() ? "PASS " : "FAIL ") << s.at("suite").get<std::string>() << '\n';
        }
        return;
    }
    if (command == "classify") {
        out << p.at("report").get<std::string>();
        for (const auto& c : p.at("verdict").at("certificates"))
            out << "  certificate " << c.at("kind").get<std::string>() << ": " << c.at("claim").get<std::string>() << '\n';
        for (const auto& c : p.at("verdict").at("citations")) out << "  citation: " << c.get<std::string>() << '\n';
        return;
    }
    for (const auto& [k, v] : p.items()) {
        if (k == "schema" || k == "version" || k == "command") continue;
        out << k << ": " << text_value(v) << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coreducedness of representations: weights, slices, null cones and classification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string output = "json", cache_dir;
    std::size_t limit_states = 0;
    int jobs = 1;
    app.add_option("--output", output, "json or text")
        ->envname("COREDUCE_OUTPUT")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", cache_dir, "directory for characters and results")->envname("COREDUCE_CACHE_DIR");
    app.add_option("--limit-states", limit_states, "state budget for searches and dynamic programs")
        ->envname("COREDUCE_LIMIT_STATES")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "parallel workers")->envname("COREDUCE_JOBS")->check(CLI::PositiveNumber);

    std::string group, module, weight, weights, target;
    int degree = 1;
    bool all = false;
    std::vector<std::pair<int, std::string>> vectors;
    std::vector<std::string> suites;

    auto* c_rootsys = app.add_subcommand("rootsys", "root system data of a simple type");
    c_rootsys->add_option("type", group, "simple type, e.g. F4")->required();

    auto* c_weights = app.add_subcommand("weights", "weight diagram of an irreducible module");
    c_weights->add_option("group", group)->required();
    c_weights->add_option("weight", weight, "highest weight")->required();
    c_weights->add_flag("--all", all, "list every weight, not only dominant ones");

    auto* c_torus = app.add_subcommand("torus-check", "coreducedness of a torus module");
    c_torus->add_option("--weights", weights, "e.g. \"4,-4,6,-6\" or \"[1,0];[0,1]\"")->required();
    c_torus->add_option("--group", group, "torus, e.g. T2 (default T1)");

    auto* c_hilbert = app.add_subcommand("hilbert-basis", "minimal nonnegative relations among weights");
    c_hilbert->add_option("--weights", weights)->required();
    c_hilbert->add_option("--group", group, "torus, e.g. T2 (default T1)");

    auto* c_slice = app.add_subcommand("bad-slice", "search for a non-coreduced toral slice");
    c_slice->add_option("group", group)->required();
    c_slice->add_option("module", module)->required();

    auto* c_comp = app.add_subcommand("components", "admissible sets and null-cone components");
    c_comp->add_option("group", group)->required();
    c_comp->add_option("module", module)->required();
    c_comp->add_flag("--all", all, "every chamber, not only those modulo the Weyl group");

    auto* c_cov = app.add_subcommand("covariant-vanish", "generating covariants and their vanishing on components");
    c_cov->add_option("group", group)->required();
    c_cov->add_option("module", module)->required();
    c_cov->add_option("--target", target, "highest weight of the covariant")->required();
    c_cov->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);

    auto* c_support = app.add_subcommand("support-rank", "support-matrix lower bound on an orbit dimension");
    c_support->add_option("group", group)->required();
    c_support->add_option("module", module)->required();
    c_support->add_option("--vector", vectors, "copy index and weight, e.g. --vector 0 \"e3@eps\"")
        ->allow_extra_args(false);

    auto* c_classify = app.add_subcommand("classify", "classify a module");
    c_classify->add_option("group", group)->required();
    c_classify->add_option("module", module)->required();

    auto* c_verify = app.add_subcommand("verify-paper", "run the reproduction suites");
    c_verify->add_option("--suite", suites, "suite name; repeatable (default: all)")
        ->check(CLI::IsMember(suite_names()));

    std::vector<std::string> argv_store{"coreduce"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return Exit::usage;
    }

    Config cfg;
    cfg.cache_dir = cache_dir;
    if (limit_states) cfg.dp_state_limit = limit_states;
    cfg.parallelism = jobs;
    cfg.output = output == "text" ? Output::text : Output::json;

    if (!cfg.cache_dir.empty()) {
        std::error_code ec;
        fs::create_directories(fs::path(cfg.cache_dir) / "results", ec);
        if (ec) {
            err << "error: cannot create cache directory '" << cfg.cache_dir << "': " << ec.message() << '\n';
            return Exit::usage;
        }
        set_character_cache_dir((fs::path(cfg.cache_dir) / "characters").string());
    }

    std::size_t dp_limit = cfg.dp_state_limit.value_or(50'000'000);
    MonoidLimits mlim;
    if (cfg.dp_state_limit) mlim.max_frontier = *cfg.dp_state_limit;
    ClassifyOptions copt;
    if (cfg.dp_state_limit) copt.state_limit = *cfg.dp_state_limit, copt.limits = mlim;

    const std::string command = app.get_subcommands().front()->get_name();
    ResultCache cache(cfg.cache_dir);
    auto torus_group = [&] { return GroupSpec::parse(group.empty() ? "T1" : group); };
    auto parse_module = [&] { return ModuleSpec::parse(GroupSpec::parse(group), module); };

    Outcome result;
    try {
        json key{{"command", command}, {"version", kVersion}, {"limit_states", limit_states}};
        std::function<Outcome()> compute;

        if (command == "rootsys") {
            RootSystem rs(SimpleType::parse(group));
            key["type"] = rs.type().name();
            compute = [rs] {
                json pos = json::array();
                for (const auto& r : rs.positive_roots_dynkin()) pos.push_back(r);
                json p{{"type", rs.type().name()},
                       {"rank", rs.rank()},
                       {"cartan", rs.cartan()},
                       {"symmetrizer", rs.symmetrizer()},
                       {"lattice_index", rs.lattice_index()},
                       {"positive_roots", pos},
                       {"num_roots", rs.num_roots()},
                       {"highest_root", rs.root_to_dynkin(rs.highest_root())},
                       {"highest_short_root", rs.root_to_dynkin(rs.highest_short_root())},
                       {"weyl_order", big_json(rs.weyl_order())}};
                return Outcome{p};
            };
        } else if (command == "weights") {
            auto g = GroupSpec::parse(group);
            Vec lam = parse_weight(g, weight);
            if (!g.is_dominant(lam)) throw std::invalid_argument("highest weight must be dominant");
            key["group"] = g.name(), key["weight"] = lam, key["all"] = all;
            compute = [g, lam, all] {
                auto d = weight_diagram(g, lam);
                json dominant = json::array();
                for (const auto& [w, k] : d.sorted())
                    if (g.is_dominant(w))
                        dominant.push_back({{"weight", w}, {"multiplicity", k}, {"orbit_size", g.orbit(w).size()}});
                json p{{"group", g.name()},
                       {"highest_weight", lam},
                       {"dim", big_json(ModuleSpec::irreducible(g, lam).dim())},
                       {"zero_weight_multiplicity", d.at(Vec(g.dim(), 0))},
                       {"dominant_weights", dominant}};
                if (all) p["weights"] = weight_mult_list(d.sorted());
                return Outcome{p};
            };
        } else if (command == "torus-check" || command == "hilbert-basis") {
            auto g = torus_group();
            if (g.semisimple_rank() != 0) throw std::invalid_argument("--group must be a torus such as T2");
            auto ws = parse_weight_list(g, weights);
            key["group"] = g.name(), key["weights"] = ws;
            if (command == "torus-check")
                compute = [ws, mlim] {
                    auto v = is_torus_coreduced(ws, mlim);
                    json p{{"weights", v.weights}, {"coreduced", v.coreduced}};
                    p["certificate"] = v.violating ? json(*v.violating) : json();
                    return Outcome{p, v.coreduced ? Exit::ok : Exit::answer_no};
                };
            else
                compute = [ws, mlim] {
                    auto hb = hilbert_basis(ws, mlim);
                    return Outcome{{{"weights", hb.weights}, {"generators", hb.generators}}};
                };
        } else if (command == "bad-slice") {
            auto m = parse_module();
            key["group"] = m.group.name(), key["module"] = m.str();
            compute = [m, mlim] {
                json certs = json::array();
                bool toral = has_toral_slice(m);
                if (toral)
                    if (auto b = bad_toral_slice(m, mlim)) certs.push_back(bad_slice_json(*b));
                if (auto b = roots_mult2_rule(m, mlim)) certs.push_back(bad_slice_json(*b));
                try {
                    if (auto b = product_group_rule(m, mlim)) certs.push_back(bad_slice_json(*b));
                } catch (const std::invalid_argument&) {
                    // Not an irreducible product module.
                }
                bool bad = false;
                for (const auto& c : certs) bad = bad || c.at("exact").get<bool>();
                json p{{"group", m.group.name()}, {"module", m.str()}, {"has_toral_slice", toral},
                       {"certificates", certs}, {"bad_slice", bad}};
                return Outcome{p, bad ? Exit::answer_no : Exit::ok};
            };
        } else if (command == "components") {
            auto m = parse_module();
            key["group"] = m.group.name(), key["module"] = m.str(), key["all"] = all;
            compute = [m, all] {
                auto sets = admissible_sets(m, !all);
                json p{{"group", m.group.name()}, {"module", m.str()}, {"mod_weyl", !all}};
                json js = json::array();
                if (!all) {
                    auto a = analyze_components(sets);
                    p["dominant_classes"] = a.dominant_classes;
                }
                for (std::size_t i = 0; i < sets.size(); ++i) js.push_back(set_json(sets[i], i));
                p["sets"] = js;
                if (m.group.semisimple_rank() == 2) {
                    json r = json::array();
                    for (const auto& q : critical_ratios(m)) r.push_back(to_string(q));
                    p["critical_ratios"] = r;
                }
                return Outcome{p};
            };
        } else if (command == "covariant-vanish") {
            auto m = parse_module();
            Vec t = parse_weight(m.group, target);
            key["group"] = m.group.name(), key["module"] = m.str(), key["target"] = t, key["degree"] = degree;
            compute = [m, t, degree, dp_limit] {
                auto c = covariant_generator_exists(m, t, degree, dp_limit);
                auto sets = admissible_sets(m, true);
                analyze_components(sets);
                json comps = json::array();
                bool all_vanish = true;
                for (std::size_t i = 0; i < sets.size(); ++i) {
                    if (sets[i].status == DominanceStatus::dominated) continue;
                    bool v = covariant_vanishes(sets[i], t, degree, dp_limit);
                    all_vanish = all_vanish && v;
                    comps.push_back({{"index", i}, {"status", status_name(sets[i].status)}, {"vanishes", v}});
                }
                json p{{"group", m.group.name()},
                       {"module", m.str()},
                       {"target", t},
                       {"degree", degree},
                       {"covariants", c.covariants},
                       {"invariants", c.invariants},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"generator_exists", c.exists},
                       {"components", comps},
                       {"vanishes", all_vanish}};
                return Outcome{p, all_vanish ? Exit::ok : Exit::answer_no};
            };
        } else if (command == "support-rank") {
            auto m = parse_module();
            std::vector<std::pair<int, Vec>> v;
            for (const auto& [copy, w] : vectors) v.emplace_back(copy, parse_weight(m.group, w));
            json jv = json::array();
            for (const auto& [copy, w] : v) jv.push_back({copy, w});
            key["group"] = m.group.name(), key["module"] = m.str(), key["vectors"] = jv;
            compute = [m, v, jv] {
                auto r = support_orbit_dim_bound(m, v);
                json p{{"group", m.group.name()},
                       {"module", m.str()},
                       {"vectors", jv},
                       {"columns", r.columns},
                       {"after_column", r.after_column},
                       {"singletons_after_column", r.singletons_after_column},
                       {"bound", r.bound}};
                return Outcome{p};
            };
        } else if (command == "classify") {
            auto m = parse_module();
            key["group"] = m.group.name(), key["module"] = m.str();
            compute = [m, copt] {
                auto v = classify(m, copt);
                auto rows = emit_report({v});
                json p{{"verdict", to_json(v)}, {"report", report_text(rows)}, {"row", report_json(rows).at("rows").at(0)}};
                return Outcome{p, is_positive(v.coreduced) ? Exit::ok : Exit::answer_no};
            };
        } else if (command == "verify-paper") {
            if (suites.empty()) suites = suite_names();
            key["suites"] = suites;
            VerifyOptions vo;
            vo.classify = copt;
            vo.state_limit = dp_limit;
            vo.jobs = cfg.parallelism;
            compute = [suites, vo] {
                json js = json::array();
                bool passed = true;
                for (const auto& r : run_suites(suites, vo)) {
                    js.push_back(to_json(r));
                    passed = passed && r.passed();
                }
                return Outcome{{{"suites", js}, {"passed", passed}}, passed ? Exit::ok : Exit::answer_no};
            };
        }
        result = cache.get_or_compute(key, compute);
    } catch (const LimitExceeded& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return Exit::resource_limit;
    } catch (const std::bad_alloc&) {
        err << "error: resource limit: out of memory\n";
        return Exit::resource_limit;
    } catch (const std::length_error& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return Exit::resource_limit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    }

    result.payload["schema"] = kSchema;
    result.payload["version"] = kVersion;
    result.payload["command"] = command;
    if (cfg.output == Output::json)
        out << result.payload.dump(2) << '\n';
    else
        render_text(command, result.payload, out);
    return result.exit;
}

}  // namespace coreduce::cli
