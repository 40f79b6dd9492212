#include "coreduce/repthy.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unistd.h>

namespace coreduce {

namespace fs = std::filesystem;

// ------------------------------------------------------------- Freudenthal

DominantCharacter freudenthal(const RootSystem& rs, const Vec& lam) {
    auto doms = dominant_weights_below(rs, lam);
    // Sort by depth: height of lam - mu in simple-root coordinates.
    std::vector<std::pair<Int, Vec>> by_depth;
    for (auto& mu : doms) {
        Vec rsc = rs.to_root_scaled(sub(lam, mu));
        by_depth.emplace_back(std::accumulate(rsc.begin(), rsc.end(), Int{0}), mu);
    }
    std::stable_sort(by_depth.begin(), by_depth.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    DominantCharacter ch;
    const Vec two_delta(rs.rank(), 2);
    for (auto& [depth, mu] : by_depth) {
        Int m = 1;
        if (mu != lam) {
            Vec diff = *rs.root_coords(sub(lam, mu));
            const Int denom = rs.pair_root(diff, add(add(lam, mu), two_delta));
            __int128 sum = 0;
            const auto& roots = rs.positive_roots();
            const auto& rdyn = rs.positive_roots_dynkin();
            for (std::size_t a = 0; a < roots.size(); ++a) {
                Vec nu = mu;
                while (true) {
                    nu = add(nu, rdyn[a]);
                    auto it = ch.index.find(rs.dominant_rep(nu));
                    if (it == ch.index.end()) break;
                    sum += static_cast<__int128>(it->second) * rs.pair_root(roots[a], nu);
                }
            }
            sum *= 2;
            if (denom <= 0 || sum % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
            m = static_cast<Int>(sum / denom);
        }
        ch.weights.push_back(mu);
        ch.mults.push_back(m);
        ch.index.emplace(mu, m);
    }
    return ch;
}

namespace {

std::mutex g_cache_mutex;
std::string g_cache_dir;
std::map<std::pair<std::string, Vec>, std::unique_ptr<DominantCharacter>> g_memo;

fs::path cache_path(const RootSystem& rs, const Vec& lam) {
    std::string name = rs.type().name();
    for (Int x : lam) name += "_" + std::to_string(x);
    return fs::path(g_cache_dir) / (name + ".chr");
}

std::unique_ptr<DominantCharacter> load_cached(const RootSystem& rs, const Vec& lam) {
    std::ifstream in(cache_path(rs, lam));
    if (!in) return nullptr;
    std::string magic, key, version, group, weight;
    std::size_t count = 0;
    in >> magic >> key >> version;
    if (magic != "coreduce-character" || key != "version" || version != kCharacterCacheVersion) return nullptr;
    in >> key >> group;
    if (key != "group" || group != rs.type().name()) return nullptr;
    in >> key >> weight;
    if (key != "weight" || weight != to_string(lam, '[', ']')) return nullptr;
    in >> key >> count;
    if (key != "count") return nullptr;
    auto ch = std::make_unique<DominantCharacter>();
    for (std::size_t i = 0; i < count; ++i) {
        Vec w(rs.rank());
        Int m = 0;
        for (auto& x : w) in >> x;
        in >> m;
        if (!in) return nullptr;
        ch->weights.push_back(w);
        ch->mults.push_back(m);
        ch->index.emplace(w, m);
    }
    return ch;
}

void store_cached(const RootSystem& rs, const Vec& lam, const DominantCharacter& ch) {
    std::error_code ec;
    fs::create_directories(g_cache_dir, ec);
    fs::path final_path = cache_path(rs, lam);
    fs::path tmp = final_path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "coreduce-character\nversion " << kCharacterCacheVersion << "\ngroup " << rs.type().name() << "\nweight "
            << to_string(lam, '[', ']') << "\ncount " << ch.weights.size() << "\n";
        for (std::size_t i = 0; i < ch.weights.size(); ++i) {
            for (Int x : ch.weights[i]) out << x << ' ';
            out << ch.mults[i] << '\n';
        }
        if (!out) return;
    }
    fs::rename(tmp, final_path, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace

void set_character_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache_dir = dir;
}

std::string character_cache_dir() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache_dir;
}

void clear_character_memo() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_memo.clear();
}

const DominantCharacter& dominant_character(const RootSystem& rs, const Vec& lam) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_pair(rs.type().name(), lam);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return *it->second;
    std::unique_ptr<DominantCharacter> ch;
    if (!g_cache_dir.empty()) ch = load_cached(rs, lam);
    if (!ch) {
        ch = std::make_unique<DominantCharacter>(freudenthal(rs, lam));
        if (!g_cache_dir.empty()) store_cached(rs, lam, *ch);
    }
    return *g_memo.emplace(key, std::move(ch)).first->second;
}

// ---------------------------------------------------------- WeightMultiset

Int WeightMultiset::mass() const {
    Int s = 0;
    for (const auto& [w, m] : entries) s += m;
    return s;
}

void WeightMultiset::add(const Vec& w, Int m) {
    if (m == 0) return;
    auto& x = entries[w];
    x += m;
    if (x == 0) entries.erase(w);
}

std::vector<std::pair<Vec, Int>> WeightMultiset::sorted() const {
    std::vector<std::pair<Vec, Int>> out(entries.begin(), entries.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> WeightMultiset::nonzero_list() const {
    std::vector<Vec> out;
    for (const auto& [w, m] : sorted())
        if (!is_zero(w))
            for (Int i = 0; i < m; ++i) out.push_back(w);
    return out;
}

WeightMultiset weight_diagram(const RootSystem& rs, const Vec& lam) {
    WeightMultiset d;
    d.group = GroupSpec({rs.type()});
    const auto& ch = dominant_character(rs, lam);
    for (std::size_t i = 0; i < ch.weights.size(); ++i)
        for (const auto& w : weyl_orbit(rs, ch.weights[i])) d.entries.emplace(w, ch.mults[i]);
    return d;
}

WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset out;
    out.group = a.group;
    for (const auto& [x, m] : a.entries)
        for (const auto& [y, n] : b.entries) out.add(add(x, y), m * n);
    return out;
}

WeightMultiset direct_sum(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset out = a;
    for (const auto& [w, m] : b.entries) out.add(w, m);
    return out;
}

WeightMultiset weight_diagram(const GroupSpec& g, const Vec& lam) {
    if (!g.is_dominant(lam)) throw std::invalid_argument("highest weight is not dominant");
    WeightMultiset acc;
    acc.group = g;
    Vec base(g.dim(), 0);
    Vec t = g.torus_part(lam);
    std::copy(t.begin(), t.end(), base.begin() + g.semisimple_rank());
    acc.entries.emplace(base, 1);
    for (std::size_t f = 0; f < g.factors().size(); ++f) {
        WeightMultiset part;
        part.group = g;
        for (const auto& [w, m] : weight_diagram(g.factors()[f], g.block(lam, static_cast<int>(f))).entries)
            part.entries.emplace(g.embed(w, static_cast<int>(f)), m);
        acc = convolve(acc, part);
    }
    return acc;
}

// -------------------------------------------------------------- ModuleSpec

ModuleSpec ModuleSpec::parse(const GroupSpec& g, std::string_view text) {
    ModuleSpec m;
    m.group = g;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::size_t i = 0;
    while (i < s.size()) {
        Int coef = 1;
        std::string num;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
        if (!num.empty()) coef = std::stoll(num);
        if (i < s.size() && s[i] == '*') ++i;
        if (i >= s.size() || s[i] != '[') throw std::invalid_argument("module term must be [..] with an optional coefficient: '" + s + "'");
        auto close = s.find(']', i);
        if (close == std::string::npos) throw std::invalid_argument("unterminated weight in module: '" + s + "'");
        Vec lam = parse_weight(g, s.substr(i, close - i + 1));
        if (!g.is_dominant(lam)) throw std::invalid_argument("module highest weight is not dominant");
        if (coef <= 0) throw std::invalid_argument("module coefficients must be positive");
        m.summands.push_back({coef, lam});
        i = close + 1;
        if (i < s.size()) {
            if (s[i] != '+') throw std::invalid_argument("expected '+' between module terms");
            ++i;
        }
    }
    if (m.summands.empty()) throw std::invalid_argument("empty module");
    return m;
}

ModuleSpec ModuleSpec::irreducible(const GroupSpec& g, const Vec& lam, Int coef) {
    if (!g.is_dominant(lam)) throw std::invalid_argument("highest weight is not dominant");
    return ModuleSpec{g, {{coef, lam}}};
}

std::string ModuleSpec::str() const {
    std::string out;
    for (const auto& s : summands) {
        if (!out.empty()) out += '+';
        if (s.coef != 1) out += std::to_string(s.coef);
        out += to_string(s.highest, '[', ']');
    }
    return out;
}

BigInt ModuleSpec::dim() const {
    BigInt d = 0;
    for (const auto& s : summands) {
        BigInt p = s.coef;
        for (std::size_t f = 0; f < group.factors().size(); ++f)
            p *= group.factors()[f].weyl_dimension(group.block(s.highest, static_cast<int>(f)));
        d += p;
    }
    return d;
}

Vec dual_weight(const GroupSpec& g, const Vec& lam) { return g.dominant_rep(neg(lam)); }

ModuleSpec ModuleSpec::dual() const {
    ModuleSpec d = *this;
    for (auto& s : d.summands) s.highest = dual_weight(group, s.highest);
    return d;
}

std::vector<Vec> ModuleSpec::copies() const {
    std::vector<Vec> out;
    for (const auto& s : summands)
        for (Int i = 0; i < s.coef; ++i) out.push_back(s.highest);
    return out;
}

WeightMultiset module_weights(const ModuleSpec& m) {
    WeightMultiset out;
    out.group = m.group;
    for (const auto& s : m.summands)
        for (const auto& [w, k] : weight_diagram(m.group, s.highest).entries) out.add(w, k * s.coef);
    return out;
}

Int weight_multiplicity(const ModuleSpec& m, const Vec& mu) {
    const auto& g = m.group;
    Int total = 0;
    for (const auto& s : m.summands) {
        if (g.torus_part(s.highest) != g.torus_part(mu)) continue;
        Int p = s.coef;
        for (std::size_t f = 0; f < g.factors().size() && p; ++f) {
            const auto& rs = g.factors()[f];
            Vec hb = g.block(s.highest, static_cast<int>(f));
            Vec mb = rs.dominant_rep(g.block(mu, static_cast<int>(f)));
            // A weight below lam differs from it by the root lattice.
            if (!rs.in_root_lattice(sub(hb, mb))) {
                p = 0;
                break;
            }
            p *= dominant_character(rs, hb).at(mb);
        }
        total += p;
    }
    return total;
}

RootMultiplicity min_root_multiplicity(const ModuleSpec& m) {
    RootMultiplicity best;
    bool first = true;
    const auto& g = m.group;
    for (std::size_t f = 0; f < g.factors().size(); ++f) {
        const auto& rs = g.factors()[f];
        // Every root is conjugate to the highest root or the highest short root.
        for (const Vec* r : {&rs.highest_root(), &rs.highest_short_root()}) {
            Vec w = g.embed(rs.root_to_dynkin(*r), static_cast<int>(f));
            Int k = weight_multiplicity(m, w);
            if (first || k < best.min) {
                best.min = k;
                best.witness = w;
                first = false;
            }
        }
    }
    return best;
}

std::pair<Int, Vec> max_nonzero_multiplicity(const ModuleSpec& m) {
    const auto& g = m.group;
    std::pair<Int, Vec> best{0, {}};
    for (const auto& s : m.summands) {
        // Dominant weights of each summand are products of per-factor ones.
        std::vector<Vec> doms = dominant_weights_below(g, s.highest);
        for (const auto& d : doms) {
            if (is_zero(d)) continue;
            Int k = weight_multiplicity(m, d);
            if (k > best.first || (k == best.first && d < best.second)) best = {k, d};
        }
    }
    return best;
}

// ------------------------------------------------------- symmetric powers

namespace {

struct Packer {
    std::vector<Int> offset, stride, range;
    Int delta(const Vec& w) const {
        Int k = 0;
        for (std::size_t i = 0; i < w.size(); ++i) k += w[i] * stride[i];
        return k;
    }
    Int base() const {
        Int k = 0;
        for (std::size_t i = 0; i < offset.size(); ++i) k -= offset[i] * stride[i];
        return k;
    }
    Vec unpack(Int key) const {
        Vec w(stride.size());
        for (std::size_t i = stride.size(); i-- > 0;) {
            w[i] = key / stride[i] + offset[i];
            key %= stride[i];
        }
        return w;
    }
};

Packer make_packer(const WeightMultiset& chi, int dmax) {
    const std::size_t dim = chi.group.dim();
    Packer p;
    p.offset.assign(dim, 0);
    p.stride.assign(dim, 1);
    p.range.assign(dim, 1);
    Vec lo(dim, 0), hi(dim, 0);
    for (const auto& [w, m] : chi.entries)
        for (std::size_t i = 0; i < dim; ++i) {
            lo[i] = std::min(lo[i], w[i]);
            hi[i] = std::max(hi[i], w[i]);
        }
    __int128 total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        p.offset[i] = dmax * lo[i];
        p.range[i] = dmax * (hi[i] - lo[i]) + 1;
        p.stride[i] = static_cast<Int>(total);
        total *= p.range[i];
        if (total > (static_cast<__int128>(1) << 62)) throw LimitExceeded("symmetric power weight range too large to pack");
    }
    return p;
}

}  // namespace

std::vector<WeightMultiset> symmetric_powers(const WeightMultiset& chi, int dmax, std::size_t state_limit) {
    if (dmax < 0) throw std::invalid_argument("negative degree");
    // Coefficients are bounded by the total mass C(dim + d - 1, d).
    BigInt mass = 1;
    const Int n = chi.mass();
    for (int k = 1; k <= dmax; ++k) mass = mass * (n + k - 1) / k;
    if (mass > BigInt(std::numeric_limits<Int>::max() / 4)) throw LimitExceeded("symmetric power mass exceeds 64-bit range");

    Packer pk = make_packer(chi, dmax);
    std::vector<std::unordered_map<Int, Int>> h(dmax + 1);
    h[0][pk.base()] = 1;
    std::size_t states = 1;
    for (const auto& [w, mult] : chi.sorted()) {
        const Int delta = pk.delta(w);
        for (Int copy = 0; copy < mult; ++copy) {
            for (int e = 1; e <= dmax; ++e) {
                auto& cur = h[e];
                for (const auto& [key, c] : h[e - 1]) {
                    auto [it, inserted] = cur.try_emplace(key + delta, 0);
                    it->second += c;
                    if (inserted && ++states > state_limit) throw LimitExceeded("symmetric power state limit exceeded");
                }
            }
        }
    }
    std::vector<WeightMultiset> out(dmax + 1);
    for (int e = 0; e <= dmax; ++e) {
        out[e].group = chi.group;
        out[e].entries.reserve(h[e].size());
        for (const auto& [key, c] : h[e]) out[e].entries.emplace(pk.unpack(key), c);
    }
    return out;
}

WeightMultiset symmetric_power(const WeightMultiset& chi, int d, std::size_t state_limit) {
    return symmetric_powers(chi, d, state_limit).back();
}

// ----------------------------------------------------- multiplicity extraction

std::vector<std::pair<Vec, int>> weyl_shifts(const GroupSpec& g, std::size_t order_limit) {
    if (g.weyl_order() > BigInt(order_limit)) throw LimitExceeded("Weyl group too large to enumerate");
    Vec delta(g.dim(), 0);
    for (int i = 0; i < g.semisimple_rank(); ++i) delta[i] = 1;
    std::unordered_map<Vec, int, VecHash> depth{{delta, 0}};
    std::deque<Vec> q{delta};
    std::vector<std::pair<Vec, int>> out;
    while (!q.empty()) {
        Vec v = std::move(q.front());
        q.pop_front();
        const int d = depth[v];
        out.emplace_back(sub(delta, v), d % 2 == 0 ? 1 : -1);
        for (std::size_t f = 0; f < g.factors().size(); ++f)
            for (int i = 0; i < g.factors()[f].rank(); ++i) {
                Vec u = v;
                g.reflect_inplace(u, static_cast<int>(f), i);
                if (depth.emplace(u, d + 1).second) q.push_back(std::move(u));
            }
    }
    return out;
}

namespace {

std::mutex g_shift_mutex;
std::map<std::string, std::vector<std::pair<Vec, int>>> g_shifts;

const std::vector<std::pair<Vec, int>>& cached_shifts(const GroupSpec& g) {
    std::lock_guard<std::mutex> lock(g_shift_mutex);
    auto it = g_shifts.find(g.name());
    if (it == g_shifts.end()) it = g_shifts.emplace(g.name(), weyl_shifts(g)).first;
    return it->second;
}

}  // namespace

Int mult_in_character(const WeightMultiset& chi, const Vec& lam) {
    Int n = 0;
    for (const auto& [s, sign] : cached_shifts(chi.group)) n += sign * chi.at(add(lam, s));
    return n;
}

Int mult_in_product(const std::vector<const WeightMultiset*>& factors, const Vec& lam) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    if (factors.size() == 1) return mult_in_character(*factors[0], lam);
    const std::size_t half = factors.size() / 2;
    WeightMultiset a = *factors[0];
    for (std::size_t i = 1; i < half; ++i) a = convolve(a, *factors[i]);
    WeightMultiset b = *factors[half];
    for (std::size_t i = half + 1; i < factors.size(); ++i) b = convolve(b, *factors[i]);
    Int n = 0;
    for (const auto& [s, sign] : cached_shifts(factors[0]->group)) {
        Vec x = add(lam, s);
        Int v = 0;
        for (const auto& [y, m] : a.entries) v += m * b.at(sub(x, y));
        n += sign * v;
    }
    return n;
}

std::map<Vec, Int> decompose(const WeightMultiset& chi) {
    const GroupSpec& g = chi.group;
    WeightMultiset rest = chi;
    std::map<Vec, Int> out;
    auto height = [&](const Vec& w) {
        Vec c = g.to_cochar_coords(w);
        Int h = 0;
        for (int i = 0; i < g.semisimple_rank(); ++i) h += c[i];
        return h;
    };
    while (!rest.entries.empty()) {
        const Vec* top = nullptr;
        Int best = 0;
        for (const auto& [w, m] : rest.entries) {
            if (!g.is_dominant(w)) continue;
            Int h = height(w);
            if (!top || h > best || (h == best && w > *top)) {
                top = &w;
                best = h;
            }
        }
        if (!top) throw std::logic_error("character has no dominant weight left");
        Vec lam = *top;
        Int k = rest.at(lam);
        out[lam] += k;
        for (const auto& [w, m] : weight_diagram(g, lam).entries) rest.add(w, -k * m);
    }
    return out;
}

// ------------------------------------------------------------- covariants

CovariantCount covariant_bound_from_series(const Vec& target, const std::vector<Int>& cov, const std::vector<Int>& inv) {
    CovariantCount c;
    c.target = target;
    c.degree = static_cast<int>(cov.size()) - 1;
    c.covariants = cov;
    c.invariants = inv;
    const int d = c.degree;
    c.lhs = cov[d];
    for (int e = 1; e < d; ++e) c.rhs += inv[d - e] * cov[e];
    c.exists = c.lhs > c.rhs;
    return c;
}

CovariantCount covariant_generator_exists(const ModuleSpec& m, const Vec& target, int d, std::size_t state_limit) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    auto powers = symmetric_powers(module_weights(m), d, state_limit);
    std::vector<Int> cov, inv;
    const Vec zero(m.group.dim(), 0);
    for (int e = 0; e <= d; ++e) {
        cov.push_back(mult_in_character(powers[e], target));
        inv.push_back(mult_in_character(powers[e], zero));
    }
    return covariant_bound_from_series(target, cov, inv);
}

GradedSeries graded_multiplicity_series(const ModuleSpec& m, const Vec& lam, const Vec& max_degree, std::size_t state_limit) {
    auto parts = m.copies();
    if (max_degree.size() != parts.size()) throw std::invalid_argument("one maximal degree per summand copy is required");
    std::vector<std::vector<WeightMultiset>> powers;
    for (std::size_t i = 0; i < parts.size(); ++i)
        powers.push_back(symmetric_powers(weight_diagram(m.group, parts[i]), static_cast<int>(max_degree[i]), state_limit));
    GradedSeries gs;
    gs.max_degree = max_degree;
    Vec a(parts.size(), 0);
    while (true) {
        std::vector<const WeightMultiset*> fs;
        for (std::size_t i = 0; i < parts.size(); ++i) fs.push_back(&powers[i][a[i]]);
        gs.table[a] = mult_in_product(fs, lam);
        std::size_t k = 0;
        while (k < a.size() && a[k] == max_degree[k]) a[k++] = 0;
        if (k == a.size()) break;
        ++a[k];
    }
    return gs;
}

GradedSeries graded_invariant_series(const ModuleSpec& m, const Vec& max_degree, std::size_t state_limit) {
    return graded_multiplicity_series(m, Vec(m.group.dim(), 0), max_degree, state_limit);
}

}  // namespace coreduce
