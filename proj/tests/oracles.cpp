#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace oracle {

std::vector<Vec> minimal_relations(const std::vector<Vec>& w, Int bound) {
    const std::size_t n = w.size();
    std::vector<Vec> minimal;
    if (n == 0) return minimal;
    const std::size_t dim = w[0].size();

    // Pick r weights P and r coordinates R with an invertible minor, r the rank.
    // Every other coordinate row is a combination of the rows in R, so the free
    // coefficients determine the coefficients on P by Cramer's rule.
    coreduce::Mat cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = w[i];
    const int r = coreduce::rank(cols);
    std::vector<std::size_t> P, R;
    coreduce::Mat minor;
    Int det = 0;
    std::function<bool(std::size_t, std::vector<std::size_t>&, std::size_t, const std::function<bool(const std::vector<std::size_t>&)>&)>
        choose = [&](std::size_t from, std::vector<std::size_t>& cur, std::size_t limit,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
            if (static_cast<int>(cur.size()) == r) return f(cur);
            for (std::size_t i = from; i < limit; ++i) {
                cur.push_back(i);
                if (choose(i + 1, cur, limit, f)) return true;
                cur.pop_back();
            }
            return false;
        };
    std::vector<std::size_t> pc, rc;
    choose(0, pc, n, [&](const std::vector<std::size_t>& p) {
        return choose(0, rc, dim, [&](const std::vector<std::size_t>& rows) {
            coreduce::Mat a(r, Vec(r));
            for (int k = 0; k < r; ++k)
                for (int j = 0; j < r; ++j) a[k][j] = w[p[j]][rows[k]];
            Int d = r == 0 ? 1 : coreduce::determinant(a);
            if (d == 0) return false;
            P = p, R = rows, minor = a, det = d;
            return true;
        });
    });
    coreduce::Mat adj = r == 0 ? coreduce::Mat{} : coreduce::adjugate(minor);
    std::vector<bool> pivot(n, false);
    for (auto i : P) pivot[i] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) free.push_back(i);

    // Antichain of the minimal relations seen so far.
    auto leq = [](const Vec& a, const Vec& b) {
        return std::equal(a.begin(), a.end(), b.begin(), [](Int x, Int y) { return x <= y; });
    };
    auto offer = [&](const Vec& m) {
        for (const auto& q : minimal)
            if (leq(q, m)) return;
        minimal.erase(std::remove_if(minimal.begin(), minimal.end(), [&](const Vec& q) { return leq(m, q); }),
                      minimal.end());
        minimal.push_back(m);
    };

    Vec m(n, 0), s(dim, 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
        if (i == free.size()) {
            // Solve minor * x = -s on the rows R.
            Int used = 0;
            for (int j = 0; j < r; ++j) {
                Int num = 0;
                for (int k = 0; k < r; ++k) num -= adj[j][k] * s[R[k]];
                if (num % det != 0) return;
                Int x = num / det;
                if (x < 0) return;
                m[P[j]] = x;
                used += x;
            }
            if (used > left) return;
            Vec total(dim, 0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t k = 0; k < dim; ++k) total[k] += m[a] * w[a][k];
            if (coreduce::is_zero(total) && !coreduce::is_zero(m)) offer(m);
            return;
        }
        const std::size_t v = free[i];
        for (Int c = 0; c <= left; ++c) {
            m[v] = c;
            rec(i + 1, left - c);
            for (std::size_t k = 0; k < dim; ++k) s[k] += w[v][k];
        }
        for (std::size_t k = 0; k < dim; ++k) s[k] -= (left + 1) * w[v][k];
        m[v] = 0;
    };
    rec(0, bound);
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

std::vector<Vec> circuits(const std::vector<Vec>& w) {
    const std::size_t n = w.size();
    std::vector<Vec> out;
    if (n == 0) return out;
    const std::size_t dim = w[0].size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i);
        coreduce::QMat a(dim, coreduce::QVec(idx.size()));
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t j = 0; j < idx.size(); ++j) a[k][j] = w[idx[j]][k];
        auto ker = coreduce::kernel(a, static_cast<int>(idx.size()));
        if (ker.size() != 1) continue;
        Vec p = coreduce::primitive(ker[0]);
        bool all_pos = std::all_of(p.begin(), p.end(), [](Int x) { return x > 0; });
        bool all_neg = std::all_of(p.begin(), p.end(), [](Int x) { return x < 0; });
        if (!all_pos && !all_neg) continue;
        Vec full(n, 0);
        for (std::size_t j = 0; j < idx.size(); ++j) full[idx[j]] = all_pos ? p[j] : -p[j];
        out.push_back(full);
    }
    return out;
}

Int degree_bound(const std::vector<Vec>& w) {
    auto cs = circuits(w);
    if (cs.empty()) return 0;
    Int maxnorm = 0;
    for (const auto& c : cs) maxnorm = std::max(maxnorm, std::accumulate(c.begin(), c.end(), Int{0}));
    // Dimension of the relation cone = dimension of the span of its circuits.
    Int d = coreduce::rank(cs);
    return d * maxnorm;
}

bool in_monoid(const std::vector<Vec>& gens, const Vec& v) {
    if (coreduce::is_zero(v)) return true;
    for (const auto& g : gens) {
        if (coreduce::is_zero(g)) continue;
        bool fits = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (g[i] > v[i]) fits = false;
        if (fits && in_monoid(gens, coreduce::sub(v, g))) return true;
    }
    return false;
}

}  // namespace oracle

#include <set>

namespace oracle {

std::vector<coreduce::Mat> weyl_matrices(const coreduce::Mat& a) {
    using coreduce::Mat;
    const int n = static_cast<int>(a.size());
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i) {
        // s_i(e_c) = e_c - [c == i] * row i of the Cartan matrix.
        Mat m(n, Vec(n, 0));
        for (int c = 0; c < n; ++c) {
            m[c][c] += 1;
            if (c == i)
                for (int r = 0; r < n; ++r) m[r][c] -= a[i][r];
        }
        gens.push_back(m);
    }
    auto mul = [n](const Mat& x, const Mat& y) {
        Mat z(n, Vec(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    Mat id(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    std::set<Mat> seen{id};
    std::vector<Mat> all{id};
    for (std::size_t k = 0; k < all.size(); ++k)
        for (const auto& g : gens) {
            Mat p = mul(g, all[k]);
            if (seen.insert(p).second) all.push_back(p);
        }
    return all;
}

Int det(const coreduce::Mat& m) { return coreduce::determinant(m); }

namespace {

// Number of ways to write v (simple-root coordinates) as a sum of positive roots,
// using roots with index >= k.
Int partitions(const std::vector<Vec>& roots, const Vec& v, std::size_t k, std::map<std::pair<Vec, std::size_t>, Int>& memo) {
    for (Int x : v)
        if (x < 0) return 0;
    if (coreduce::is_zero(v)) return 1;
    if (k == roots.size()) return 0;
    auto key = std::make_pair(v, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = partitions(roots, v, k + 1, memo);
    Vec rest = coreduce::sub(v, roots[k]);
    total += partitions(roots, rest, k, memo);
    memo[key] = total;
    return total;
}

}  // namespace

Int kostant_multiplicity(const coreduce::Mat& cartan, const std::vector<Vec>& pos, const Vec& lam, const Vec& mu) {
    const int n = static_cast<int>(cartan.size());
    coreduce::QMat aq = coreduce::to_q(cartan);
    // Dynkin -> simple-root coordinates by solving c * A = v.
    auto to_simple = [&](const Vec& v) -> std::optional<Vec> {
        coreduce::QMat aug(n, coreduce::QVec(n + 1));
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) aug[j][i] = aq[i][j];
            aug[j][n] = v[j];
        }
        coreduce::row_reduce(aug);
        Vec c(n);
        for (int i = 0; i < n; ++i) {
            if (boost::multiprecision::denominator(aug[i][n]) != 1) return std::nullopt;
            c[i] = static_cast<Int>(boost::multiprecision::numerator(aug[i][n]));
        }
        return c;
    };
    Vec ld = lam, md = mu;
    for (auto& x : ld) ++x;
    for (auto& x : md) ++x;
    std::map<std::pair<Vec, std::size_t>, Int> memo;
    Int total = 0;
    for (const auto& w : weyl_matrices(cartan)) {
        Vec img(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) img[i] += w[i][j] * ld[j];
        auto c = to_simple(coreduce::sub(img, md));
        if (!c) continue;
        total += det(w) * partitions(pos, *c, 0, memo);
    }
    return total;
}

}  // namespace oracle

#include <array>
#include <map>
#include <random>

namespace oracle {

coreduce::Int region_count(const std::vector<Vec>& normals) {
    std::set<Vec> lines;
    for (Vec h : normals) {
        Int g = coreduce::gcd_all(h);
        if (g == 0) continue;
        for (auto& x : h) x /= g;
        for (Int x : h)
            if (x != 0) {
                if (x < 0) h = coreduce::neg(h);
                break;
            }
        lines.insert(h);
    }
    std::vector<Vec> hs(lines.begin(), lines.end());
    const std::size_t n = hs.size();
    Int total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        coreduce::Mat sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(hs[i]);
        int rk = sub.empty() ? 0 : coreduce::rank(sub);
        total += ((sub.size() - rk) % 2 == 0) ? 1 : -1;
    }
    return total;
}

namespace {

constexpr Int kPrime = 2147483647;

using Mono = std::array<int, 6>;  // exponents of x1 x2 x3 y1 y2 y3
using Poly = std::map<Mono, Int>;

Int md(Int a) {
    a %= kPrime;
    return a < 0 ? a + kPrime : a;
}

Int pw(Int b, Int e) {
    Int r = 1;
    b = md(b);
    while (e) {
        if (e & 1) r = static_cast<Int>((__int128)r * b % kPrime);
        b = static_cast<Int>((__int128)b * b % kPrime);
        e >>= 1;
    }
    return r;
}

// E_ij acts as x_i d/dx_j - y_j d/dy_i.
Poly apply_e(const Poly& p, int i, int j) {
    Poly out;
    for (const auto& [m, c] : p) {
        if (m[j] > 0) {
            Mono n = m;
            Int k = n[j]--;
            ++n[i];
            out[n] = md(out[n] + c * k);
        }
        if (m[3 + i] > 0) {
            Mono n = m;
            Int k = n[3 + i]--;
            ++n[3 + j];
            out[n] = md(out[n] - c * k);
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Vec weight_of(const Mono& m) {
    const Vec eps[3] = {{1, 0}, {-1, 1}, {0, -1}};
    Vec w{0, 0};
    for (int i = 0; i < 3; ++i) {
        w = coreduce::add(w, coreduce::scale(eps[i], m[i]));
        w = coreduce::sub(w, coreduce::scale(eps[i], m[3 + i]));
    }
    return w;
}

// Rank of vectors over the monomial coordinates, mod p.
int rank_mod(std::vector<Poly> rows) {
    int rk = 0;
    while (!rows.empty()) {
        auto it = std::find_if(rows.begin(), rows.end(), [](const Poly& p) { return !p.empty(); });
        if (it == rows.end()) break;
        Poly piv = *it;
        rows.erase(it);
        ++rk;
        Mono lead = piv.begin()->first;
        Int inv = pw(piv.begin()->second, kPrime - 2);
        for (auto& r : rows) {
            auto f = r.find(lead);
            if (f == r.end()) continue;
            Int c = static_cast<Int>((__int128)f->second * inv % kPrime);
            for (const auto& [m, v] : piv) {
                Int nv = md(r[m] - static_cast<Int>((__int128)c * v % kPrime));
                if (nv == 0)
                    r.erase(m);
                else
                    r[m] = nv;
            }
        }
    }
    return rk;
}

}  // namespace

std::vector<std::vector<bool>> sl3_dominance(int r, int s, const std::vector<std::vector<Vec>>& sets) {
    // Weight bases of V[r,s] from the highest weight vector x1^r y3^s.
    std::map<Vec, std::vector<Poly>> basis;
    std::vector<Poly> queue{Poly{{Mono{r, 0, 0, 0, 0, s}, 1}}};
    basis[Vec{r, s}] = queue;
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (auto [i, j] : {std::pair{1, 0}, std::pair{2, 1}}) {
            Poly q = apply_e(queue[k], i, j);
            if (q.empty()) continue;
            Vec w = weight_of(q.begin()->first);
            auto& b = basis[w];
            auto trial = b;
            trial.push_back(q);
            if (rank_mod(trial) > static_cast<int>(b.size())) {
                b.push_back(q);
                queue.push_back(q);
            }
        }
    auto weyl = weyl_matrices({{2, -1}, {-1, 2}});
    std::mt19937_64 rng(12345);
    const std::size_t n = sets.size();
    std::vector<std::vector<bool>> d(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        int dim_z = 0;
        for (const auto& w : sets[i]) dim_z += static_cast<int>(basis[w].size());
        for (std::size_t j = 0; j < n; ++j) {
            std::set<Vec> target(sets[j].begin(), sets[j].end());
            for (const auto& sigma : weyl) {
                std::vector<Poly> zbasis;
                for (const auto& w : sets[i]) {
                    Vec img{sigma[0][0] * w[0] + sigma[0][1] * w[1], sigma[1][0] * w[0] + sigma[1][1] * w[1]};
                    if (target.count(img))
                        for (const auto& v : basis[w]) zbasis.push_back(v);
                }
                bool dense = false;
                for (int attempt = 0; attempt < 2 && !dense; ++attempt) {
                    Poly z;
                    for (const auto& v : zbasis) {
                        Int c = static_cast<Int>(rng() % (kPrime - 1)) + 1;
                        for (const auto& [m, x] : v) z[m] = md(z[m] + static_cast<Int>((__int128)c * x % kPrime));
                    }
                    for (auto it = z.begin(); it != z.end();) it = it->second == 0 ? z.erase(it) : std::next(it);
                    std::vector<Poly> rows = zbasis;
                    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) rows.push_back(apply_e(z, a, b));
                    dense = rank_mod(rows) == dim_z;
                }
                if (dense) {
                    d[i][j] = true;
                    break;
                }
            }
        }
    }
    return d;
}

}  // namespace oracle
