#pragma once

#include "coreduce/monoid.hpp"
#include "coreduce/repthy.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coreduce {

enum class Coreduced { yes, no, yes_paper_proof, no_paper_proof };
const char* coreduced_name(Coreduced c);
Coreduced coreduced_from_name(std::string_view s);  // throws std::invalid_argument
inline bool is_positive(Coreduced c) { return c == Coreduced::yes || c == Coreduced::yes_paper_proof; }

// A machine-checkable claim. `data` holds every input needed to recompute it;
// `revalidate` recomputes from `data` alone.
//
// kinds: bad_slice, multiplicity, toral_relation, covariant, degree_screen,
// null_cone, dense_orbit, exterior_cases, alternating_covariant,
// covariant_series, summand.
struct Certificate {
    std::string kind;
    std::string claim;
    nlohmann::json data;
};

struct Verdict {
    ModuleSpec module;
    Coreduced coreduced = Coreduced::no_paper_proof;
    std::vector<Certificate> certificates;
    std::vector<std::string> citations;  // arguments not checked here, by name
    std::string theorem_tag;
};

bool revalidate(const Certificate& c);
// A verdict "no" carries a certificate; "*_paper_proof" carries a citation;
// every certificate revalidates.
bool verdict_consistent(const Verdict& v);

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);  // throws std::invalid_argument

struct ClassifyOptions {
    std::size_t state_limit = 20'000'000;
    MonoidLimits limits{};
    BigInt max_dim = 2'000'000;  // modules above this skip weight-based rules
    int max_covariant_degree = 10;
    int max_screen_degree = 12;  // degree screens skip components needing higher invariants
};

// parts[i] is the multiplicity of R_{i+1}, the binary forms of degree i + 1.
Verdict classify_sl2(const std::vector<Int>& parts, const ClassifyOptions& o = {});
// Simple exceptional group, module with a zero weight.
Verdict classify_adjoint_exceptional(const ModuleSpec& m, const ClassifyOptions& o = {});
// Simple classical group of rank >= 2 (type C from rank 3, type D from rank 4),
// every summand a module of the adjoint group.
Verdict classify_adjoint_classical(const ModuleSpec& m, const ClassifyOptions& o = {});
// At least two simple factors, irreducible module of the adjoint group.
Verdict classify_semisimple_irreducible(const ModuleSpec& m, const ClassifyOptions& o = {});
// Any module of SL3 without trivial summands.
Verdict classify_sl3(const ModuleSpec& m, const ClassifyOptions& o = {});
// Dispatch on the group; throws std::invalid_argument outside the tables.
Verdict classify(const ModuleSpec& m, const ClassifyOptions& o = {});

// Machine negative rules that apply to m, by name. Used to check that no
// rule fires on a module the tables list as coreduced.
std::vector<std::string> negative_rules_firing(const ModuleSpec& m, const ClassifyOptions& o = {});

// Maximal coreduced modules from the tables, for the given group.
std::vector<ModuleSpec> maximal_coreduced(const GroupSpec& g);
// Is m a submodule of a maximal table entry up to a diagram automorphism?
bool in_table(const ModuleSpec& m);

struct ReportRow {
    std::string theorem_tag;
    std::string group;
    std::string module;
    std::string coreduced;
    std::vector<std::string> certificate_kinds;
};
// Rows sorted by theorem tag, then group, then module.
std::vector<ReportRow> emit_report(const std::vector<Verdict>& verdicts);
nlohmann::json report_json(const std::vector<ReportRow>& rows);
std::string report_text(const std::vector<ReportRow>& rows);

inline constexpr const char* kReportSchema = "coreduce.report/1";

}  // namespace coreduce
