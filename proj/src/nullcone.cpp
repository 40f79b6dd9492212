#include "coreduce/nullcone.hpp"

#include "coreduce/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coreduce {

namespace {

using Word = std::vector<std::pair<int, int>>;

// Simple-root coordinates per block, then torus coordinates.
QVec root_q(const GroupSpec& g, const Vec& w) {
    QVec out;
    Vec rs = g.to_root_scaled(w);
    std::size_t k = 0;
    for (const auto& f : g.factors())
        for (int i = 0; i < f.rank(); ++i, ++k) out.emplace_back(Q(rs[k], f.lattice_index()));
    for (; k < rs.size(); ++k) out.emplace_back(rs[k]);
    return out;
}

Vec apply_word(const GroupSpec& g, const Word& word, Vec w) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) g.reflect_inplace(w, it->first, it->second);
    return w;
}

// Every Weyl group element once, by a shortest word, in breadth-first order.
const std::vector<Word>& weyl_words(const GroupSpec& g) {
    static std::mutex mu;
    static std::map<std::string, std::vector<Word>> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::string key = g.name();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Vec reg(g.dim(), 0);
    for (std::size_t f = 0; f < g.factors().size(); ++f)
        for (int i = 0; i < g.factors()[f].rank(); ++i) reg[g.offset(static_cast<int>(f)) + i] = 1;
    std::map<Vec, std::size_t> seen{{reg, 0}};
    std::vector<Vec> points{reg};
    std::vector<Word> words{{}};
    for (std::size_t k = 0; k < points.size(); ++k)
        for (std::size_t f = 0; f < g.factors().size(); ++f)
            for (int i = 0; i < g.factors()[f].rank(); ++i) {
                Vec p = points[k];
                g.reflect_inplace(p, static_cast<int>(f), i);
                if (seen.count(p)) continue;
                seen.emplace(p, points.size());
                points.push_back(p);
                Word w{{static_cast<int>(f), i}};
                w.insert(w.end(), words[k].begin(), words[k].end());
                words.push_back(std::move(w));
            }
    return cache.emplace(key, std::move(words)).first->second;
}

struct PosRoot {
    Vec dyn;
    int factor = 0;
    Vec rc;  // simple-root coordinates within the factor
};

std::vector<PosRoot> positive_roots_info(const GroupSpec& g) {
    std::vector<PosRoot> out;
    for (std::size_t f = 0; f < g.factors().size(); ++f) {
        const auto& rs = g.factors()[f];
        for (const auto& rc : rs.positive_roots())
            out.push_back({g.embed(rs.root_to_dynkin(rc), static_cast<int>(f)), static_cast<int>(f), rc});
    }
    return out;
}

bool subset_of(const std::vector<Vec>& a, const std::set<Vec>& b) {
    return std::all_of(a.begin(), a.end(), [&](const Vec& w) { return b.count(w) > 0; });
}

// target in the nonnegative rational cone of gens (Caratheodory: some
// linearly independent subset carries a nonnegative solution).
bool in_cone(const std::vector<Vec>& gens, const Vec& target) {
    if (is_zero(target)) return true;
    const int dim = static_cast<int>(target.size());
    const int n = static_cast<int>(gens.size());
    std::vector<int> idx;
    std::function<bool(int, int)> rec = [&](int start, int k) -> bool {
        if (static_cast<int>(idx.size()) == k) {
            QMat a(dim, QVec(k + 1));
            for (int r = 0; r < dim; ++r) {
                for (int j = 0; j < k; ++j) a[r][j] = gens[idx[j]][r];
                a[r][k] = target[r];
            }
            auto piv = row_reduce(a);
            if (static_cast<int>(piv.size()) != k || piv.back() != k - 1) return false;
            for (int j = 0; j < k; ++j)
                if (a[j][k] < 0) return false;
            return true;
        }
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            bool ok = rec(i + 1, k);
            idx.pop_back();
            if (ok) return true;
        }
        return false;
    };
    for (int k = 1; k <= std::min(dim, n); ++k)
        if (rec(0, k)) return true;
    return false;
}

Vec scaled_values(const QVec& x) {
    Vec p = primitive(x);
    return p;
}

Cocharacter from_point(const GroupSpec& g, const QVec& x) {
    Vec p = scaled_values(x);
    return Cocharacter{g, QVec(p.begin(), p.end())};
}

bool weights_less(const AdmissibleSet& a, const AdmissibleSet& b) { return a.support() < b.support(); }

}  // namespace

Q Cocharacter::pair(const Vec& weight) const {
    QVec r = root_q(group, weight);
    Q s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * values[i];
    return s;
}

bool Cocharacter::generic_for(const std::vector<Vec>& weights) const {
    for (int k = 0; k < group.semisimple_rank(); ++k)
        if (values[k] <= 0) return false;
    for (const auto& w : weights)
        if (!is_zero(w) && pair(w) == 0) return false;
    return true;
}

Cocharacter Cocharacter::from_diagonals(const GroupSpec& g, const std::vector<QVec>& diagonals) {
    if (diagonals.size() != g.factors().size()) throw std::invalid_argument("one diagonal per factor");
    Cocharacter c{g, {}};
    for (std::size_t f = 0; f < diagonals.size(); ++f) {
        const auto& rs = g.factors()[f];
        if (rs.type().family != Family::A || static_cast<int>(diagonals[f].size()) != rs.rank() + 1)
            throw std::invalid_argument("diagonal form needs type A factors of matching size");
        for (int i = 0; i < rs.rank(); ++i) c.values.push_back(diagonals[f][i] - diagonals[f][i + 1]);
    }
    c.values.resize(g.dim(), 0);
    return c;
}

const char* status_name(DominanceStatus s) {
    switch (s) {
        case DominanceStatus::dominant: return "dominant";
        case DominanceStatus::dominated: return "dominated";
        case DominanceStatus::unknown: return "unknown";
    }
    return "unknown";
}

Int AdmissibleSet::z_dim() const {
    Int s = 0;
    for (const auto& [w, k] : weights) s += k;
    return s;
}

Int AdmissibleSet::mult(const Vec& w) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), w,
                               [](const std::pair<Vec, Int>& e, const Vec& x) { return e.first < x; });
    return (it != weights.end() && it->first == w) ? it->second : 0;
}

bool AdmissibleSet::contains(const Vec& w) const { return mult(w) > 0; }

std::vector<Vec> AdmissibleSet::support() const {
    std::vector<Vec> out;
    for (const auto& [w, k] : weights) out.push_back(w);
    return out;
}

AdmissibleSet admissible_from(const ModuleSpec& m, const Cocharacter& rho) {
    AdmissibleSet s;
    s.defining = rho;
    for (const auto& [w, k] : module_weights(m).sorted())
        if (rho.pair(w) > 0) s.weights.emplace_back(w, k);
    return s;
}

std::vector<Q> critical_ratios(const ModuleSpec& m) {
    const auto& g = m.group;
    if (g.semisimple_rank() != 2 || g.torus_rank() != 0) throw std::invalid_argument("critical ratios need semisimple rank 2");
    std::set<Q> ts;
    for (const auto& [w, k] : module_weights(m).sorted()) {
        QVec r = root_q(g, w);
        if (r[0] * r[1] < 0) ts.insert(-r[0] / r[1]);
    }
    return {ts.begin(), ts.end()};
}

std::vector<AdmissibleSet> admissible_sets(const ModuleSpec& m, bool mod_weyl, int max_rank) {
    const auto& g = m.group;
    if (g.dim() > max_rank) throw std::invalid_argument("rank limit exceeded for chamber enumeration");
    std::vector<AdmissibleSet> out;
    if (mod_weyl && g.semisimple_rank() == 2 && g.torus_rank() == 0) {
        auto ts = critical_ratios(m);
        std::vector<Q> samples;
        if (ts.empty()) {
            samples.push_back(1);
        } else {
            samples.push_back(ts.front() / 2);
            for (std::size_t i = 0; i + 1 < ts.size(); ++i) samples.push_back((ts[i] + ts[i + 1]) / 2);
            samples.push_back(ts.back() + 1);
        }
        for (const auto& t : samples) out.push_back(admissible_from(m, from_point(g, {Q(1), t})));
        return out;
    }

    std::set<Vec> normal_set;
    for (const auto& [w, k] : module_weights(m).sorted())
        if (!is_zero(w)) {
            Vec c = g.to_cochar_coords(w);
            Int d = gcd_all(c);
            for (auto& x : c) x /= d;
            normal_set.insert(c);
        }
    if (mod_weyl)
        for (int k = 0; k < g.semisimple_rank(); ++k) {
            Vec e(g.dim(), 0);
            e[k] = 1;
            normal_set.insert(e);
        }
    std::vector<Vec> normals(normal_set.begin(), normal_set.end());
    std::set<std::vector<Vec>> seen;
    for (const auto& x : chamber_points(normals, g.dim())) {
        if (mod_weyl && std::any_of(x.begin(), x.begin() + g.semisimple_rank(), [](const Q& v) { return v <= 0; }))
            continue;
        auto s = admissible_from(m, from_point(g, x));
        if (seen.insert(s.support()).second) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), weights_less);
    return out;
}

std::vector<std::array<Int, 4>> g2g2_models() {
    return {{5, 4, 2, 1}, {6, 4, 3, 2}, {6, 5, 4, 3}, {5, 2, 3, 1},
            {6, 4, 5, 3}, {7, 1, 4, 2}, {6, 2, 4, 3}, {6, 2, 5, 4}};
}

std::vector<AdmissibleSet> g2g2_maximal_sets() {
    GroupSpec g = GroupSpec::parse("G2xG2");
    auto m = ModuleSpec::parse(g, "[1,0,1,0]");
    std::vector<AdmissibleSet> out;
    for (int swap = 0; swap < 2; ++swap)
        for (const auto& r : g2g2_models()) {
            Int a = r[0], b = r[1], a2 = r[2], b2 = r[3];
            if (swap) {
                std::swap(a, a2);
                std::swap(b, b2);
            }
            Cocharacter rho{g, {Q(b), Q(a - b), Q(b2), Q(a2 - b2)}};
            out.push_back(admissible_from(m, rho));
        }
    return out;
}

DominanceResult dominance(const AdmissibleSet& l1, const AdmissibleSet& l2) {
    const auto& g = l1.defining.group;
    DominanceResult res;
    auto s1 = l1.support();
    auto s2v = l2.support();
    std::set<Vec> s2(s2v.begin(), s2v.end());
    if (subset_of(s1, s2)) {
        res.verdict = Dominance::dominated;
        res.reason = "inclusion";
        return res;
    }
    auto pos = positive_roots_info(g);
    for (const auto& word : weyl_words(g)) {
        std::vector<Vec> lp, mset;
        for (const auto& w : s1) (s2.count(apply_word(g, word, w)) ? lp : mset).push_back(w);
        if (lp.empty()) continue;
        if (std::any_of(mset.begin(), mset.end(), [&](const Vec& mu) { return l1.mult(mu) != 1; })) continue;
        std::set<Vec> lps(lp.begin(), lp.end());
        // Column delta has entry at mu when mu - delta is in the sigma-part.
        // For generic z each entry is nonzero: x_delta is injective on V_lambda
        // when <lambda, delta^vee> < 0 and onto V_{lambda + delta} otherwise.
        std::set<Vec> uncovered(mset.begin(), mset.end());
        bool progress = true;
        while (!uncovered.empty() && progress) {
            progress = false;
            for (const auto& d : pos) {
                std::optional<Vec> only;
                int hits = 0;
                for (const auto& mu : uncovered) {
                    if (!lps.count(sub(mu, d.dyn))) continue;
                    if (++hits > 1) break;
                    only = mu;
                }
                if (hits == 1) {
                    uncovered.erase(*only);
                    progress = true;
                    break;
                }
            }
        }
        if (uncovered.empty()) {
            res.verdict = Dominance::dominated;
            res.sigma = word;
            res.reason = "B-orbit of the sigma-part is dense";
            return res;
        }
    }
    return res;
}

std::vector<Vec> minimal_elements(const AdmissibleSet& l) {
    auto pos = positive_roots_info(l.defining.group);
    std::vector<Vec> out;
    for (const auto& [w, k] : l.weights)
        if (std::none_of(pos.begin(), pos.end(), [&](const PosRoot& d) { return l.contains(sub(w, d.dyn)); }))
            out.push_back(w);
    return out;
}

bool simple_roots_in_minimal_cone(const AdmissibleSet& l) {
    auto omega = minimal_elements(l);
    for (const auto& a : l.defining.group.simple_roots())
        if (!in_cone(omega, a)) return false;
    return true;
}

namespace {

// Is l strictly inside some Weyl translate of a set in all?
bool strictly_inside_translate(const AdmissibleSet& l, const std::vector<AdmissibleSet>& all) {
    const auto& g = l.defining.group;
    auto s = l.support();
    for (const auto& o : all)
        for (const auto& word : weyl_words(g)) {
            std::set<Vec> t;
            for (const auto& w : o.support()) t.insert(apply_word(g, word, w));
            if (t.size() > s.size() && subset_of(s, t)) return true;
        }
    return false;
}

bool inside_some_translate(const AdmissibleSet& l, const AdmissibleSet& o) {
    const auto& g = l.defining.group;
    auto s = l.support();
    for (const auto& word : weyl_words(g)) {
        std::set<Vec> t;
        for (const auto& w : o.support()) t.insert(apply_word(g, word, w));
        if (subset_of(s, t)) return true;
    }
    return false;
}

}  // namespace

bool sl3_two_quadrant(const AdmissibleSet& l, const std::vector<AdmissibleSet>& all) {
    const auto& g = l.defining.group;
    if (g.factors().size() != 1 || g.torus_rank() != 0 || !(g.factors()[0].type() == SimpleType{Family::A, 2}))
        throw std::invalid_argument("two-quadrant criterion is for SL3");
    if (strictly_inside_translate(l, all)) return false;
    bool first = false, second = false;
    for (const auto& [w, k] : l.weights) {
        QVec r = root_q(g, w);
        if (r[0] <= 0 && r[1] >= 0) first = true;
        if (r[0] >= 0 && r[1] <= 0) second = true;
    }
    return first && second;
}

namespace {

// Necessary condition for G Z_1 in G Z_2: some sigma whose tangent support
// (columns delta with mu - delta in the sigma-part) admits a matching that
// saturates every weight vector of Z_1 outside the sigma-part.
bool density_possible(const AdmissibleSet& l1, const AdmissibleSet& l2) {
    const auto& g = l1.defining.group;
    auto s2v = l2.support();
    std::set<Vec> s2(s2v.begin(), s2v.end());
    auto pos = positive_roots_info(g);
    for (const auto& word : weyl_words(g)) {
        std::set<Vec> lps;
        std::vector<Vec> rows;  // one entry per weight vector outside the sigma-part
        for (const auto& [w, k] : l1.weights) {
            if (s2.count(apply_word(g, word, w))) {
                lps.insert(w);
            } else {
                for (Int c = 0; c < k; ++c) rows.push_back(w);
            }
        }
        if (rows.size() > pos.size()) continue;
        std::vector<std::vector<std::size_t>> adj(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < pos.size(); ++c)
                if (lps.count(sub(rows[r], pos[c].dyn))) adj[r].push_back(c);
        std::vector<long> owner(pos.size(), -1);
        std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
            for (auto c : adj[r]) {
                if (seen[c]) continue;
                seen[c] = true;
                if (owner[c] < 0 || augment(static_cast<std::size_t>(owner[c]), seen)) {
                    owner[c] = static_cast<long>(r);
                    return true;
                }
            }
            return false;
        };
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r) {
            std::vector<bool> seen(pos.size(), false);
            ok = augment(r, seen);
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

ComponentAnalysis analyze_components(std::vector<AdmissibleSet>& sets) {
    const std::size_t n = sets.size();
    ComponentAnalysis a;
    a.proven.assign(n, std::vector<bool>(n, false));
    a.excluded.assign(n, std::vector<bool>(n, false));
    if (n == 0) return a;
    const auto& g = sets[0].defining.group;
    bool is_sl3 = g.factors().size() == 1 && g.torus_rank() == 0 && g.factors()[0].type() == SimpleType{Family::A, 2};
    std::vector<bool> cone(n);
    for (std::size_t i = 0; i < n; ++i)
        cone[i] = simple_roots_in_minimal_cone(sets[i]) || (is_sl3 && sl3_two_quadrant(sets[i], sets));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                a.proven[i][j] = true;
                continue;
            }
            a.proven[i][j] = dominance(sets[i], sets[j]).verdict == Dominance::dominated;
            a.excluded[i][j] = (cone[i] && !inside_some_translate(sets[i], sets[j])) || !density_possible(sets[i], sets[j]);
        }
    // Z_k in Z_i and Z_k not in Z_j excludes i <= j; so does i not in k with j <= k.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    bool p = a.proven[i][j] || (a.proven[i][k] && a.proven[k][j]);
                    bool e = a.excluded[i][j] || (a.proven[k][i] && a.excluded[k][j]) ||
                             (a.proven[j][k] && a.excluded[i][k]);
                    if (p != a.proven[i][j] || e != a.excluded[i][j]) {
                        a.proven[i][j] = p;
                        a.excluded[i][j] = e;
                        changed = true;
                    }
                }
    }
    for (std::size_t i = 0; i < n; ++i) {
        sets[i].status = DominanceStatus::unknown;
        sets[i].dominated_by.reset();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && a.proven[i][j] && a.excluded[j][i]) {
                sets[i].status = DominanceStatus::dominated;
                sets[i].dominated_by = j;
                break;
            }
        if (sets[i].status == DominanceStatus::dominated) continue;
        bool dom = true;
        for (std::size_t j = 0; j < n && dom; ++j)
            if (j != i && !a.excluded[i][j] && !a.proven[j][i]) dom = false;
        if (dom) sets[i].status = DominanceStatus::dominant;
    }
    std::vector<bool> placed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (placed[i] || sets[i].status != DominanceStatus::dominant) continue;
        std::vector<std::size_t> cls{i};
        placed[i] = true;
        for (std::size_t j = i + 1; j < n; ++j)
            if (!placed[j] && sets[j].status == DominanceStatus::dominant && a.proven[i][j] && a.proven[j][i]) {
                cls.push_back(j);
                placed[j] = true;
            }
        a.dominant_classes.push_back(cls);
    }
    return a;
}

bool covariant_vanishes(const AdmissibleSet& l, const Vec& target, int d, std::size_t state_limit) {
    return !exists_sum(l.support(), target, d, SumMode::exact_count, state_limit).feasible;
}

bool covariant_vanishes_up_to(const AdmissibleSet& l, const Vec& target, int d, std::size_t state_limit) {
    for (int e = 1; e <= d; ++e)
        if (!covariant_vanishes(l, target, e, state_limit)) return false;
    return true;
}

std::optional<int> max_covariant_degree(const AdmissibleSet& l, const Vec& target, std::size_t state_limit) {
    if (l.weights.empty()) return std::nullopt;
    Q p = l.defining.pair(target);
    Q minp = -1;
    for (const auto& [w, k] : l.weights) {
        Q v = l.defining.pair(w);
        if (minp < 0 || v < minp) minp = v;
    }
    if (p <= 0) return std::nullopt;
    Q ratio = p / minp;
    Int bound = static_cast<Int>(numerator(ratio) / denominator(ratio));
    for (Int d = bound; d >= 1; --d)
        if (!covariant_vanishes(l, target, static_cast<int>(d), state_limit)) return static_cast<int>(d);
    return std::nullopt;
}

SupportReduction support_orbit_dim_bound(const ModuleSpec& m, const std::vector<std::pair<int, Vec>>& v_support) {
    using Label = std::tuple<int, Vec, int>;  // copy, weight, zero-weight class (0 none, 1 integral, 2 half)
    using Column = std::set<Label>;
    const auto& g = m.group;
    auto copies = m.copies();
    std::vector<WeightMultiset> diagrams;
    std::vector<bool> split_zero;
    for (const auto& hw : copies) {
        diagrams.push_back(module_weights(ModuleSpec::irreducible(g, hw)));
        bool f4_short = g.factors().size() == 1 && g.torus_rank() == 0 && g.factors()[0].type() == SimpleType{Family::F, 4} &&
                        hw == g.factors()[0].root_to_dynkin(g.factors()[0].highest_short_root());
        split_zero.push_back(f4_short);
    }
    std::set<std::pair<int, Vec>> seen;
    for (const auto& [c, w] : v_support) {
        if (c < 0 || c >= static_cast<int>(copies.size())) throw std::invalid_argument("support copy index out of range");
        if (diagrams[c].at(w) != 1) throw std::invalid_argument("support weight must have a one-dimensional weight space");
        if (!seen.insert({c, w}).second) throw std::invalid_argument("repeated support entry");
    }
    SupportReduction out;
    if (v_support.empty()) return out;

    std::set<Column> cols;
    Mat ws;
    for (const auto& [c, w] : v_support) ws.push_back(w);
    if (rank(ws) == static_cast<int>(ws.size())) {
        for (const auto& [c, w] : v_support) cols.insert(Column{Label{c, w, 0}});
    } else {
        Column all;
        for (const auto& [c, w] : v_support) all.insert(Label{c, w, 0});
        cols.insert(all);
    }
    for (const auto& root : g.roots()) {
        Column col;
        for (const auto& [c, w] : v_support) {
            Vec t = add(w, root);
            Int k = diagrams[c].at(t);
            if (k == 0) continue;
            int tag = 0;
            if (is_zero(t) && split_zero[c]) {
                QVec e = g.factors()[0].to_eps(root);
                bool integral = std::all_of(e.begin(), e.end(), [](const Q& x) { return denominator(x) == 1; });
                tag = integral ? 1 : 2;
            } else if (k != 1) {
                throw std::invalid_argument("reached weight space has dimension > 1");
            }
            col.insert(Label{c, t, tag});
        }
        if (!col.empty()) cols.insert(col);
    }
    out.columns = cols.size();

    auto column_reduce = [](std::set<Column>& cs) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::set<Label> singles;
            for (const auto& c : cs)
                if (c.size() == 1) singles.insert(*c.begin());
            std::set<Column> next;
            for (auto c : cs) {
                if (c.size() > 1)
                    for (const auto& s : singles)
                        if (c.erase(s)) changed = true;
                if (!c.empty()) next.insert(c);
            }
            if (next != cs) changed = true;
            cs = std::move(next);
        }
    };
    auto row_reduce_once = [](std::set<Column>& cs) {
        std::map<Label, std::vector<const Column*>> where;
        for (const auto& c : cs)
            for (const auto& l : c) where[l].push_back(&c);
        for (const auto& [l, v] : where)
            if (v.size() == 1 && v[0]->size() > 1) {
                Column old = *v[0];
                cs.erase(old);
                cs.insert(Column{l});
                return true;
            }
        return false;
    };

    column_reduce(cols);
    out.after_column = cols.size();
    out.singletons_after_column = static_cast<std::size_t>(
        std::count_if(cols.begin(), cols.end(), [](const Column& c) { return c.size() == 1; }));
    while (row_reduce_once(cols)) column_reduce(cols);
    out.bound = static_cast<std::size_t>(
        std::count_if(cols.begin(), cols.end(), [](const Column& c) { return c.size() == 1; }));
    return out;
}

DimBracket gz_dimension(const ModuleSpec& m, const AdmissibleSet& l) {
    const auto& g = m.group;
    auto all = module_weights(m);
    // Simple roots whose negative root vector keeps Z invariant.
    std::vector<std::vector<bool>> levi(g.factors().size());
    for (std::size_t f = 0; f < g.factors().size(); ++f) {
        const auto& rs = g.factors()[f];
        levi[f].assign(rs.rank(), false);
        for (int i = 0; i < rs.rank(); ++i) {
            Vec a(rs.rank(), 0);
            a[i] = 1;
            Vec alpha = g.embed(rs.root_to_dynkin(a), static_cast<int>(f));
            bool ok = true;
            for (const auto& [w, k] : l.weights) {
                Vec t = sub(w, alpha);
                if (all.at(t) > 0 && !l.contains(t)) {
                    ok = false;
                    break;
                }
            }
            levi[f][i] = ok;
        }
    }
    Int outside = 0;
    for (const auto& d : positive_roots_info(g)) {
        bool inside = true;
        for (std::size_t i = 0; i < d.rc.size(); ++i)
            if (d.rc[i] != 0 && !levi[d.factor][i]) inside = false;
        if (!inside) ++outside;
    }
    DimBracket b{l.z_dim(), l.z_dim() + outside};
    // A generic point of Z has full support; its orbit dimension bounds dim G Z below.
    if (m.copies().size() == 1) {
        std::vector<std::pair<int, Vec>> supp;
        for (const auto& w : l.support()) supp.emplace_back(0, w);
        try {
            b.lower = std::max<Int>(b.lower, static_cast<Int>(support_orbit_dim_bound(m, supp).bound));
        } catch (const std::invalid_argument&) {
        }
    }
    return b;
}

DegreeScreen negative_weight_degree_screen(const ModuleSpec& m, const AdmissibleSet& l,
                                           const std::vector<int>& invariant_degrees, std::size_t state_limit) {
    DegreeScreen s;
    auto all = module_weights(m);
    auto members = l.support();
    Q minp = -1;
    for (const auto& w : members) {
        Q v = l.defining.pair(w);
        if (minp < 0 || v < minp) minp = v;
    }
    std::set<int> degs(invariant_degrees.begin(), invariant_degrees.end());
    // layers[k]: sums of k members with rho value at most the largest target value.
    Q pmax = 0;
    for (const auto& [w, mult] : all.sorted())
        if (!l.contains(w)) pmax = std::max(pmax, l.defining.pair(neg(w)));
    std::vector<std::set<Vec>> layers{{Vec(m.group.dim(), 0)}};
    std::size_t states = 0;
    while (minp > 0 && !layers.back().empty()) {
        std::set<Vec> next;
        for (const auto& v : layers.back())
            for (const auto& a : members) {
                Vec u = add(v, a);
                if (l.defining.pair(u) <= pmax) next.insert(u);
            }
        states += next.size();
        if (states > state_limit) throw LimitExceeded("degree screen: too many partial sums");
        layers.push_back(std::move(next));
    }
    int maxk = -1;
    for (const auto& [w, mult] : all.sorted()) {
        if (l.contains(w)) continue;
        std::vector<int> ks;
        if (is_zero(w)) {
            ks.push_back(0);
        } else if (minp > 0 && l.defining.pair(neg(w)) > 0) {
            for (std::size_t k = 1; k < layers.size(); ++k)
                if (layers[k].count(neg(w))) ks.push_back(static_cast<int>(k));
        }
        bool usable = false;
        for (int k : ks) {
            maxk = std::max(maxk, k);
            if (degs.count(k + 1)) usable = true;
        }
        if (usable) s.usable_complement += mult;
    }
    s.max_degree = maxk + 1;
    for (int d : invariant_degrees)
        if (d <= s.max_degree) ++s.generators;
    s.rank_bound = std::min(s.generators, s.usable_complement);
    auto b = gz_dimension(m, l);
    Int dimv = static_cast<Int>(m.dim());
    s.codim_lower = dimv - b.upper;
    s.codim_upper = dimv - b.lower;
    if (invariant_degrees.empty()) {
        s.note = "no invariant degrees supplied; inconclusive";
        return s;
    }
    s.not_reduced = s.rank_bound < s.codim_lower;
    if (s.not_reduced && l.status != DominanceStatus::dominant)
        s.note = "conclusion applies along G Z only when the set is dominant";
    return s;
}

GradedScreen graded_degree_screen(const ModuleSpec& m, const AdmissibleSet& l, int max_total_degree,
                                  std::size_t state_limit) {
    GradedScreen s;
    s.max_total_degree = max_total_degree;
    const auto copies = m.copies();
    const std::size_t n = copies.size();
    // Per copy: weights inside l (one entry per distinct weight) and outside l with multiplicity.
    std::vector<std::vector<Vec>> inside(n);
    std::vector<std::vector<std::pair<Vec, Int>>> outside(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [w, k] : module_weights(ModuleSpec::irreducible(m.group, copies[i])).sorted()) {
            if (!is_zero(w) && l.defining.pair(w) > 0)
                inside[i].push_back(w);
            else
                outside[i].emplace_back(w, k);
        }
    std::set<std::pair<std::size_t, Vec>> met;
    if (max_total_degree >= 1) {
        auto series = graded_invariant_series(m, Vec(n, max_total_degree), state_limit);
        for (const auto& [a, k] : series.table) {
            Int total = std::accumulate(a.begin(), a.end(), Int{0});
            if (total == 0 || total > max_total_degree || k == 0) continue;
            Int decomposable = 0;
            for (const auto& [b, kb] : series.table) {
                if (kb == 0 || b == a || is_zero(b) || !dominated_by(a, b)) continue;
                auto it = series.table.find(sub(a, b));
                if (it != series.table.end()) decomposable = std::max(decomposable, it->second);
            }
            if (k <= decomposable) continue;
            GradedScreen::Row row{a, k - decomposable, 0};
            for (std::size_t j = 0; j < n; ++j) {
                if (a[j] < 1) continue;
                std::vector<std::vector<Vec>> blocks;
                for (std::size_t i = 0; i < n; ++i)
                    for (Int t = 0; t < a[i] - (i == j ? 1 : 0); ++t) blocks.push_back(inside[i]);
                for (const auto& [w, mult] : outside[j]) {
                    bool reach = blocks.empty() ? is_zero(w)
                                                : exists_sum_blocks(blocks, neg(w), state_limit).feasible;
                    if (!reach) continue;
                    row.usable += mult;
                    met.insert({j, w});
                }
            }
            s.rows.push_back(row);
        }
    }
    Int total = 0;
    for (const auto& r : s.rows) total += std::min(r.generator_bound, r.usable);
    for (const auto& [j, w] : met)
        for (const auto& [ow, mult] : outside[j])
            if (ow == w) s.usable_union += mult;
    s.rank_bound = std::min(total, s.usable_union);
    auto b = gz_dimension(m, l);
    Int dimv = static_cast<Int>(m.dim());
    s.codim_lower = dimv - b.upper;
    s.codim_upper = dimv - b.lower;
    s.not_reduced = s.rank_bound < s.codim_lower;
    return s;
}

OneNegativeScreen one_negative_screen(const ModuleSpec& m, const Cocharacter& rho, const Vec& multidegree) {
    auto copies = m.copies();
    if (multidegree.size() != copies.size()) throw std::invalid_argument("one degree per summand copy");
    OneNegativeScreen s;
    std::vector<std::optional<Q>> minpos;
    for (const auto& hw : copies) {
        std::vector<Q> pos;
        std::optional<Q> least;
        for (const auto& [w, k] : module_weights(ModuleSpec::irreducible(m.group, hw)).sorted()) {
            Q v = rho.pair(w);
            if (v < s.max_negative) s.max_negative = v;
            if (v >= 0 && (!least || v < *least)) least = v;
            if (v > 0)
                for (Int i = 0; i < k; ++i) pos.push_back(v);
        }
        std::sort(pos.begin(), pos.end());
        s.positives.push_back(pos);
        minpos.push_back(least);
    }
    std::optional<Q> best;
    for (std::size_t j = 0; j < copies.size(); ++j) {
        if (multidegree[j] < 1) continue;
        Q sum = 0;
        bool ok = true;
        for (std::size_t i = 0; i < copies.size(); ++i) {
            Int c = multidegree[i] - (i == j ? 1 : 0);
            if (c == 0) continue;
            if (!minpos[i]) {
                ok = false;
                break;
            }
            sum += *minpos[i] * c;
        }
        if (ok && (!best || sum < *best)) best = sum;
    }
    if (best) {
        s.min_positive_sum = *best;
        s.vanishes = *best > -s.max_negative;
    } else {
        s.vanishes = true;
    }
    return s;
}

std::vector<ModelRow> sl3sl3_model_table() {
    return {
        {{-1, -1, -1, -1, -1, -1}, {4, -2, -2, 1, 0, -1}},
        {{-1, -1, -1, 1, -1, -1}, {8, -3, -5, 4, -2, -2}},
        {{-1, -1, -1, 1, 1, -1}, {4, -1, -3, 2, 0, -2}},
        {{-1, -1, -1, 1, 1, 1}, {3, 0, -3, 2, -1, -1}},
        {{-1, -1, 1, 1, -1, -1}, {6, -3, -3, 4, -2, -2}},
        {{-1, -1, 1, 1, 1, -1}, {8, -3, -5, 6, -2, -4}},
        {{-1, -1, 1, 1, 1, 1}, {7, -2, -5, 6, -3, -3}},
        {{-1, 1, 1, 1, 1, -1}, {4, -2, -2, 3, 0, -3}},
    };
}

std::array<int, 6> sl3sl3_signs(const std::array<Int, 6>& v) {
    const Int a2 = v[3], b = v[1], c = v[2], b2 = v[4], c2 = v[5];
    std::array<Int, 6> vals{c - b2, c - c2, c + a2, b + a2, b - c2, b - b2};
    std::array<int, 6> out{};
    for (int i = 0; i < 6; ++i) out[i] = vals[i] > 0 ? 1 : (vals[i] < 0 ? -1 : 0);
    return out;
}

ModuleSpec sl3sl3_bifundamentals() {
    return ModuleSpec::parse(GroupSpec::parse("A2xA2"), "[1,0,1,0]+[1,0,0,1]+[0,1,1,0]+[0,1,0,1]");
}

Cocharacter sl3sl3_cocharacter(const std::array<Int, 6>& v) {
    GroupSpec g = GroupSpec::parse("A2xA2");
    return Cocharacter::from_diagonals(g, {{Q(v[0]), Q(v[1]), Q(v[2])}, {Q(v[3]), Q(v[4]), Q(v[5])}});
}

std::vector<std::vector<std::vector<Vec>>> d4_exterior_cases() {
    RootSystem d4(SimpleType{Family::D, 4});
    auto half = [](const std::string& signs) {
        QVec e;
        for (char ch : signs) e.push_back(Q(ch == '+' ? 1 : -1, 2));
        return e;
    };
    std::vector<QVec> phi1;
    for (int i = 0; i < 4; ++i) {
        QVec e(4, 0);
        e[i] = 1;
        phi1.push_back(e);
    }
    const std::vector<std::string> p3a{"++++", "+-+-", "++--", "-++-"};
    const std::vector<std::string> p3b{"++++", "+-+-", "++--", "+--+"};
    const std::vector<std::string> p4a{"+++-", "+-++", "++-+", "-+++"};
    const std::vector<std::string> p4b{"+++-", "+-++", "++-+", "+---"};
    auto lift = [&](const std::vector<std::string>& v) {
        std::vector<QVec> out;
        for (const auto& s : v) out.push_back(half(s));
        return out;
    };
    // Positive weights of the exterior square: sums of two distinct positive weights.
    auto wedge = [&](const std::vector<QVec>& ws) {
        std::set<Vec> out;
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j) {
                QVec s(4);
                for (int k = 0; k < 4; ++k) s[k] = ws[i][k] + ws[j][k];
                out.insert(d4.from_eps(s));
            }
        return std::vector<Vec>(out.begin(), out.end());
    };
    std::vector<std::vector<std::vector<Vec>>> cases;
    for (auto [p3, p4] : {std::pair{&p3a, &p4a}, std::pair{&p3b, &p4b}, std::pair{&p3b, &p4a}})
        cases.push_back({wedge(phi1), wedge(lift(*p3)), wedge(lift(*p4))});
    return cases;
}

bool d4_case_feasible(const std::vector<std::vector<Vec>>& blocks, const Vec& target) {
    return exists_sum_blocks(blocks, target).feasible;
}

}  // namespace coreduce
