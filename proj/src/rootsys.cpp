#include "coreduce/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coreduce {

namespace {

void check_rank(Family f, int n) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n >= 6 && n <= 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(n) + " for family " + std::string(1, static_cast<char>(f)));
}

// Simple roots in orthogonal coordinates (scaled by `scale`).
Mat eps_roots(SimpleType t, Int& scale) {
    const int n = t.rank;
    scale = 1;
    Mat r;
    auto e = [](int dim, std::initializer_list<std::pair<int, Int>> terms) {
        Vec v(dim, 0);
        for (auto [i, c] : terms) v[i] += c;
        return v;
    };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) r.push_back(e(n + 1, {{i, 1}, {i + 1, -1}}));
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) r.push_back(e(n, {{i, 1}, {i + 1, -1}}));
            if (t.family == Family::B) r.push_back(e(n, {{n - 1, 1}}));
            if (t.family == Family::C) r.push_back(e(n, {{n - 1, 2}}));
            if (t.family == Family::D) r.push_back(e(n, {{n - 2, 1}, {n - 1, 1}}));
            break;
        case Family::F:
            scale = 2;
            r = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
            break;
        case Family::G:
            r = {{1, -1, 0}, {-2, 1, 1}};
            break;
        case Family::E:
            break;
    }
    return r;
}

Mat e_cartan(int n) {
    // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
    std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    Mat a(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (auto [x, y] : edges)
        if (x <= n && y <= n) a[x - 1][y - 1] = a[y - 1][x - 1] = -1;
    return a;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::string SimpleType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

SimpleType SimpleType::parse(std::string_view s) {
    if (s.size() < 2 || std::string("ABCDEFG").find(s[0]) == std::string::npos)
        throw std::invalid_argument("bad simple type: '" + std::string(s) + "'");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad simple type: '" + std::string(s) + "'");
    SimpleType t{static_cast<Family>(s[0]), std::stoi(std::string(s.substr(1)))};
    check_rank(t.family, t.rank);
    return t;
}

RootSystem::RootSystem(SimpleType t) : type_(t) {
    check_rank(t.family, t.rank);
    const int n = t.rank;
    eps_ = eps_roots(t, eps_scale_);
    if (t.family == Family::E) {
        cartan_ = e_cartan(n);
        sym_.assign(n, 1);
    } else {
        cartan_.assign(n, Vec(n, 0));
        Int min_norm = 0;
        for (int i = 0; i < n; ++i) {
            Int nn = dot(eps_[i], eps_[i]);
            min_norm = (i == 0) ? nn : std::min(min_norm, nn);
        }
        sym_.resize(n);
        for (int i = 0; i < n; ++i) {
            sym_[i] = dot(eps_[i], eps_[i]) / min_norm;
            for (int j = 0; j < n; ++j) cartan_[i][j] = 2 * dot(eps_[i], eps_[j]) / dot(eps_[j], eps_[j]);
        }
    }
    index_ = determinant(cartan_);
    adj_ = adjugate(cartan_);

    // Positive roots by alpha-string closure, processed in height order.
    std::set<Vec> seen;
    for (int i = 0; i < n; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        pos_roots_.push_back(v);
        seen.insert(v);
    }
    for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
        const Vec beta = pos_roots_[k];
        const Vec dyn = root_to_dynkin(beta);
        for (int i = 0; i < n; ++i) {
            Int r = 0;
            Vec down = beta;
            while (true) {
                --down[i];
                if (seen.count(down)) ++r;
                else break;
            }
            if (r - dyn[i] > 0) {
                Vec up = beta;
                ++up[i];
                if (seen.insert(up).second) pos_roots_.push_back(up);
            }
        }
    }
    for (const auto& r : pos_roots_) pos_dyn_.push_back(root_to_dynkin(r));
    auto height = [](const Vec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
    for (const auto& r : pos_roots_) {
        if (highest_root_.empty() || height(r) > height(highest_root_)) highest_root_ = r;
        if (!is_long_root(r) && (highest_short_root_.empty() || height(r) > height(highest_short_root_)))
            highest_short_root_ = r;
    }
    if (highest_short_root_.empty()) highest_short_root_ = highest_root_;
}

std::vector<Vec> RootSystem::roots_dynkin() const {
    std::vector<Vec> out;
    for (const auto& r : pos_dyn_) out.push_back(r);
    for (const auto& r : pos_dyn_) out.push_back(neg(r));
    return out;
}

bool RootSystem::is_long_root(const Vec& root_coords) const {
    Int m = *std::max_element(sym_.begin(), sym_.end());
    return root_norm2(root_coords) == 2 * m;
}

Vec RootSystem::root_to_dynkin(const Vec& c) const {
    const int n = rank();
    Vec d(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[j] += c[i] * cartan_[i][j];
    return d;
}

Vec RootSystem::to_root_scaled(const Vec& dyn) const {
    const int n = rank();
    Vec rs(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs[j] += dyn[i] * adj_[i][j];
    return rs;
}

Vec RootSystem::from_root_scaled(const Vec& rs) const {
    Vec d = root_to_dynkin(rs);
    for (auto& x : d) {
        if (x % index_ != 0) throw std::invalid_argument("root_scaled vector is not in the weight lattice");
        x /= index_;
    }
    return d;
}

bool RootSystem::in_root_lattice(const Vec& dyn) const {
    for (Int x : to_root_scaled(dyn))
        if (x % index_ != 0) return false;
    return true;
}

std::optional<Vec> RootSystem::root_coords(const Vec& dyn) const {
    Vec rs = to_root_scaled(dyn);
    for (auto& x : rs) {
        if (x % index_ != 0) return std::nullopt;
        x /= index_;
    }
    return rs;
}

Int RootSystem::pair_root(const Vec& c, const Vec& dyn) const {
    Int s = 0;
    for (int j = 0; j < rank(); ++j) s += c[j] * sym_[j] * dyn[j];
    return s;
}

Int RootSystem::root_norm2(const Vec& c) const { return pair_root(c, root_to_dynkin(c)); }

void RootSystem::reflect_inplace(Vec& w, int i) const {
    const Int k = w[i];
    if (k == 0) return;
    const auto& row = cartan_[i];
    for (int j = 0; j < rank(); ++j) w[j] -= k * row[j];
}

bool RootSystem::is_dominant(const Vec& dyn) const {
    for (Int x : dyn)
        if (x < 0) return false;
    return true;
}

Vec RootSystem::dominant_rep(Vec w) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank(); ++i)
            if (w[i] < 0) {
                reflect_inplace(w, i);
                changed = true;
            }
    }
    return w;
}

BigInt RootSystem::weyl_dimension(const Vec& lam) const {
    BigInt num = 1, den = 1;
    Vec ld = lam;
    for (auto& x : ld) x += 1;
    Vec delta = weyl_vector();
    for (const auto& a : pos_roots_) {
        num *= pair_root(a, ld);
        den *= pair_root(a, delta);
    }
    return num / den;
}

BigInt RootSystem::weyl_order() const {
    const int n = rank();
    switch (type_.family) {
        case Family::A: return factorial(n + 1);
        case Family::B:
        case Family::C: return (BigInt(1) << n) * factorial(n);
        case Family::D: return (BigInt(1) << (n - 1)) * factorial(n);
        case Family::E: return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

QVec RootSystem::to_eps(const Vec& dyn) const {
    if (eps_.empty()) throw std::invalid_argument("no orthogonal realization for " + type_.name());
    Vec rs = to_root_scaled(dyn);
    QVec out(eps_[0].size(), Q(0));
    for (int i = 0; i < rank(); ++i)
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += Q(rs[i] * eps_[i][k], index_ * eps_scale_);
    return out;
}

Vec RootSystem::from_eps(const QVec& eps) const {
    if (eps_.empty()) throw std::invalid_argument("no orthogonal realization for " + type_.name());
    if (eps.size() != eps_[0].size()) throw std::invalid_argument("wrong number of orthogonal coordinates");
    Vec d(rank());
    for (int j = 0; j < rank(); ++j) {
        Q ip = 0;
        for (std::size_t k = 0; k < eps.size(); ++k) ip += eps[k] * eps_[j][k];
        Q v = 2 * eps_scale_ * ip / dot(eps_[j], eps_[j]);
        if (boost::multiprecision::denominator(v) != 1) throw std::invalid_argument("not an integral weight");
        d[j] = static_cast<Int>(boost::multiprecision::numerator(v));
    }
    return d;
}

WeightSet weyl_orbit(const RootSystem& rs, const Vec& w) {
    WeightSet seen{w};
    std::deque<Vec> q{w};
    while (!q.empty()) {
        Vec v = std::move(q.front());
        q.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            if (v[i] == 0) continue;
            Vec u = v;
            rs.reflect_inplace(u, i);
            if (seen.insert(u).second) q.push_back(std::move(u));
        }
    }
    return seen;
}

std::vector<Vec> dominant_weights_below(const RootSystem& rs, const Vec& lam) {
    if (!rs.is_dominant(lam)) throw std::invalid_argument("highest weight is not dominant");
    std::vector<Vec> out{lam};
    WeightSet seen{lam};
    for (std::size_t k = 0; k < out.size(); ++k) {
        const Vec mu = out[k];
        for (const auto& a : rs.positive_roots_dynkin()) {
            Vec nu = sub(mu, a);
            if (rs.is_dominant(nu) && seen.insert(nu).second) out.push_back(nu);
        }
    }
    return out;
}

// ---------------------------------------------------------------- GroupSpec

GroupSpec::GroupSpec(std::vector<SimpleType> factors, int torus_rank) : types_(std::move(factors)), torus_rank_(torus_rank) {
    if (types_.empty() && torus_rank_ <= 0) throw std::invalid_argument("group needs a simple factor or a torus");
    if (torus_rank_ < 0) throw std::invalid_argument("negative torus rank");
    int off = 0;
    for (const auto& t : types_) {
        factors_.emplace_back(t);
        offsets_.push_back(off);
        off += t.rank;
        common_scale_ = lcm(common_scale_, factors_.back().lattice_index());
    }
    offsets_.push_back(off);
    dim_ = off + torus_rank_;
}

GroupSpec GroupSpec::parse(std::string_view s) {
    std::vector<SimpleType> ts;
    int torus = 0;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t x = s.find('x', start);
        std::string_view part = s.substr(start, x == std::string_view::npos ? std::string_view::npos : x - start);
        if (part.empty()) throw std::invalid_argument("bad group: '" + std::string(s) + "'");
        if (part[0] == 'T') {
            try {
                torus += std::stoi(std::string(part.substr(1)));
            } catch (const std::logic_error&) {
                throw std::invalid_argument("bad torus factor: '" + std::string(part) + "'");
            }
        } else {
            if (torus) throw std::invalid_argument("torus factor must come last");
            ts.push_back(SimpleType::parse(part));
        }
        if (x == std::string_view::npos) break;
        start = x + 1;
    }
    return GroupSpec(ts, torus);
}

std::string GroupSpec::name() const {
    std::string out;
    for (const auto& t : types_) {
        if (!out.empty()) out += 'x';
        out += t.name();
    }
    if (torus_rank_) {
        if (!out.empty()) out += 'x';
        out += "T" + std::to_string(torus_rank_);
    }
    return out;
}

Vec GroupSpec::block(const Vec& w, int f) const {
    return Vec(w.begin() + offsets_[f], w.begin() + offsets_[f + 1]);
}

Vec GroupSpec::torus_part(const Vec& w) const { return Vec(w.begin() + offsets_.back(), w.end()); }

Vec GroupSpec::embed(const Vec& b, int f) const {
    Vec w(dim_, 0);
    std::copy(b.begin(), b.end(), w.begin() + offsets_[f]);
    return w;
}

void GroupSpec::reflect_inplace(Vec& w, int f, int i) const {
    const int o = offsets_[f];
    const Int k = w[o + i];
    if (k == 0) return;
    const auto& row = factors_[f].cartan()[i];
    for (std::size_t j = 0; j < row.size(); ++j) w[o + j] -= k * row[j];
}

bool GroupSpec::is_dominant(const Vec& w) const {
    for (int i = 0; i < offsets_.back(); ++i)
        if (w[i] < 0) return false;
    return true;
}

Vec GroupSpec::dominant_rep(const Vec& w) const {
    Vec out = w;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        Vec b = factors_[f].dominant_rep(block(w, f));
        std::copy(b.begin(), b.end(), out.begin() + offsets_[f]);
    }
    return out;
}

WeightSet GroupSpec::orbit(const Vec& w) const {
    WeightSet seen{w};
    std::deque<Vec> q{w};
    while (!q.empty()) {
        Vec v = std::move(q.front());
        q.pop_front();
        for (std::size_t f = 0; f < factors_.size(); ++f)
            for (int i = 0; i < factors_[f].rank(); ++i) {
                if (v[offsets_[f] + i] == 0) continue;
                Vec u = v;
                reflect_inplace(u, static_cast<int>(f), i);
                if (seen.insert(u).second) q.push_back(std::move(u));
            }
    }
    return seen;
}

BigInt GroupSpec::weyl_order() const {
    BigInt o = 1;
    for (const auto& f : factors_) o *= f.weyl_order();
    return o;
}

std::vector<Vec> GroupSpec::positive_roots() const {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < factors_.size(); ++f)
        for (const auto& r : factors_[f].positive_roots_dynkin()) out.push_back(embed(r, static_cast<int>(f)));
    return out;
}

std::vector<Vec> GroupSpec::roots() const {
    std::vector<Vec> out = positive_roots();
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(neg(out[i]));
    return out;
}

std::vector<Vec> GroupSpec::simple_roots() const {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < factors_.size(); ++f)
        for (const auto& row : factors_[f].cartan()) out.push_back(embed(row, static_cast<int>(f)));
    return out;
}

Vec GroupSpec::to_cochar_coords(const Vec& w) const {
    Vec out;
    out.reserve(dim_);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        const Int m = common_scale_ / factors_[f].lattice_index();
        for (Int x : factors_[f].to_root_scaled(block(w, f))) out.push_back(x * m);
    }
    for (Int x : torus_part(w)) out.push_back(x * common_scale_);
    return out;
}

Vec GroupSpec::to_root_scaled(const Vec& w) const {
    Vec out;
    out.reserve(dim_);
    for (std::size_t f = 0; f < factors_.size(); ++f)
        for (Int x : factors_[f].to_root_scaled(block(w, f))) out.push_back(x);
    for (Int x : torus_part(w)) out.push_back(x);
    return out;
}

bool GroupSpec::in_root_lattice(const Vec& w) const {
    for (std::size_t f = 0; f < factors_.size(); ++f)
        if (!factors_[f].in_root_lattice(block(w, f))) return false;
    return is_zero(torus_part(w));
}

std::vector<Vec> dominant_weights_below(const GroupSpec& g, const Vec& lam) {
    if (!g.is_dominant(lam)) throw std::invalid_argument("highest weight is not dominant");
    std::vector<Vec> acc{g.torus_part(lam)};
    for (int f = static_cast<int>(g.factors().size()) - 1; f >= 0; --f) {
        auto part = dominant_weights_below(g.factors()[f], g.block(lam, f));
        std::vector<Vec> next;
        for (const auto& p : part)
            for (const auto& a : acc) {
                Vec v = p;
                v.insert(v.end(), a.begin(), a.end());
                next.push_back(std::move(v));
            }
        acc = std::move(next);
    }
    return acc;
}

// ------------------------------------------------------------------ grammar

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

QVec parse_eps_expr(const std::string& s, std::size_t dim) {
    QVec v(dim, Q(0));
    if (trim(s) == "0") return v;
    std::size_t i = 0;
    const std::string t = [&] {
        std::string r;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) r += c;
        return r;
    }();
    if (t.empty()) throw std::invalid_argument("empty orthogonal-coordinate expression");
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        std::string coef;
        while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/')) coef += t[i++];
        if (i < t.size() && t[i] == '*') ++i;
        if (i >= t.size() || t[i] != 'e') throw std::invalid_argument("expected 'e<index>' in '" + s + "'");
        ++i;
        std::string idx;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) idx += t[i++];
        if (idx.empty()) throw std::invalid_argument("missing index in '" + s + "'");
        std::size_t k = std::stoul(idx);
        if (k < 1 || k > dim) throw std::invalid_argument("orthogonal index out of range in '" + s + "'");
        Q c = coef.empty() ? Q(1) : parse_rational(coef);
        v[k - 1] += sign * c;
    }
    return v;
}

std::string format_eps(const QVec& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        Q c = v[k];
        if (c < 0) {
            out += '-';
            c = -c;
        } else if (!out.empty()) {
            out += '+';
        }
        if (c != 1) out += to_string(c);
        out += "e" + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

Vec parse_weight(const GroupSpec& g, std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty weight");
    std::string basis;
    if (auto at = s.rfind('@'); at != std::string::npos) {
        basis = trim(s.substr(at + 1));
        s = trim(s.substr(0, at));
    }
    if (basis.empty() || basis == "dynkin") {
        if (s.front() != '[' || s.back() != ']') throw std::invalid_argument("Dynkin weight must look like [a,b,...]: '" + s + "'");
        auto parts = split(s.substr(1, s.size() - 2), ',');
        if (static_cast<int>(parts.size()) != g.dim()) throw std::invalid_argument("weight has wrong length for " + g.name());
        Vec v;
        for (const auto& p : parts) {
            Q q = parse_rational(p);
            if (boost::multiprecision::denominator(q) != 1) throw std::invalid_argument("Dynkin labels must be integers");
            v.push_back(static_cast<Int>(boost::multiprecision::numerator(q)));
        }
        return v;
    }
    if (basis == "root") {
        if (s.front() != '(' || s.back() != ')') throw std::invalid_argument("root-coordinate weight must look like (p,q,...)@root");
        auto parts = split(s.substr(1, s.size() - 2), ',');
        if (static_cast<int>(parts.size()) != g.dim()) throw std::invalid_argument("weight has wrong length for " + g.name());
        Vec out;
        for (std::size_t f = 0; f < g.factors().size(); ++f) {
            const auto& rs = g.factors()[f];
            QVec c;
            for (int i = 0; i < rs.rank(); ++i) c.push_back(parse_rational(parts[g.offset(static_cast<int>(f)) + i]));
            for (int j = 0; j < rs.rank(); ++j) {
                Q d = 0;
                for (int i = 0; i < rs.rank(); ++i) d += c[i] * rs.cartan()[i][j];
                if (boost::multiprecision::denominator(d) != 1) throw std::invalid_argument("not an integral weight");
                out.push_back(static_cast<Int>(boost::multiprecision::numerator(d)));
            }
        }
        for (std::size_t k = g.semisimple_rank(); k < parts.size(); ++k) {
            Q q = parse_rational(parts[k]);
            if (boost::multiprecision::denominator(q) != 1) throw std::invalid_argument("torus weights must be integers");
            out.push_back(static_cast<Int>(boost::multiprecision::numerator(q)));
        }
        return out;
    }
    if (basis == "eps") {
        if (g.factors().size() != 1 || g.torus_rank() != 0)
            throw std::invalid_argument("orthogonal coordinates need a simple group");
        const auto& rs = g.factors()[0];
        if (rs.eps_simple_roots().empty()) throw std::invalid_argument("no orthogonal realization for " + rs.type().name());
        return rs.from_eps(parse_eps_expr(s, rs.eps_simple_roots()[0].size()));
    }
    throw std::invalid_argument("unknown weight basis '" + basis + "'");
}

std::string format_weight(const GroupSpec& g, const Vec& dyn, Basis basis) {
    switch (basis) {
        case Basis::dynkin: return to_string(dyn, '[', ']');
        case Basis::root: {
            std::string out = "(";
            bool first = true;
            auto put = [&](const std::string& x) {
                if (!first) out += ',';
                out += x;
                first = false;
            };
            for (std::size_t f = 0; f < g.factors().size(); ++f) {
                const auto& rs = g.factors()[f];
                for (Int x : rs.to_root_scaled(g.block(dyn, static_cast<int>(f)))) put(to_string(Q(x, rs.lattice_index())));
            }
            for (Int x : g.torus_part(dyn)) put(std::to_string(x));
            return out + ")@root";
        }
        case Basis::eps:
            if (g.factors().size() != 1 || g.torus_rank() != 0) throw std::invalid_argument("orthogonal coordinates need a simple group");
            return format_eps(g.factors()[0].to_eps(dyn)) + "@eps";
    }
    return {};
}

std::vector<Vec> parse_weight_list(const GroupSpec& g, std::string_view text) {
    std::string s = trim(text);
    std::vector<Vec> out;
    if (s.empty()) return out;
    if (s.find(';') != std::string::npos || s.front() == '[' || s.front() == '(' || s.find('@') != std::string::npos) {
        for (const auto& p : split(s, ';'))
            if (!p.empty()) out.push_back(parse_weight(g, p));
        return out;
    }
    if (g.dim() != 1) throw std::invalid_argument("bare integer lists are only accepted for rank-one groups");
    for (const auto& p : split(s, ',')) out.push_back(parse_weight(g, "[" + p + "]"));
    return out;
}

// ---------------------------------------------------------------------- SL3

namespace sl3 {

std::pair<Q, Q> to_root(Int r, Int s) { return {Q(2 * r + s, 3), Q(r + 2 * s, 3)}; }

std::pair<Int, Int> from_root(const Q& p, const Q& q) {
    Q r = 2 * p - q, s = 2 * q - p;
    if (boost::multiprecision::denominator(r) != 1 || boost::multiprecision::denominator(s) != 1)
        throw std::invalid_argument("not an SL3 weight");
    return {static_cast<Int>(boost::multiprecision::numerator(r)), static_cast<Int>(boost::multiprecision::numerator(s))};
}

std::vector<std::pair<Q, Q>> orbit_root(const Q& p, const Q& q) {
    RootSystem a2(SimpleType{Family::A, 2});
    auto [r, s] = from_root(p, q);
    std::vector<std::pair<Q, Q>> out;
    for (const auto& w : weyl_orbit(a2, Vec{r, s})) {
        Vec rs = a2.to_root_scaled(w);
        out.emplace_back(Q(rs[0], 3), Q(rs[1], 3));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Q, Q> min_max_negation_ratios(const Q& p, const Q& q) {
    auto [r, s] = from_root(p, q);
    if (r < 0 || s < 0) throw std::invalid_argument("weight is not dominant");
    if (p == q) throw std::invalid_argument("ratios undefined for p = q");
    Q m = p < q ? p : q;
    Q d = p < q ? q - p : p - q;
    return {m / d, d / m};
}

}  // namespace sl3

}  // namespace coreduce
