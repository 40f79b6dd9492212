#include "coreduce/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace coreduce {

namespace {

Q qdot(const QVec& a, const QVec& b) {
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int sgn(const Q& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Primitive direction with the first nonzero entry positive.
Vec normalize_line(Vec v) {
    Int g = gcd_all(v);
    for (auto& x : v) x /= g;
    for (Int x : v)
        if (x != 0) {
            if (x < 0) v = neg(v);
            break;
        }
    return v;
}

// Chambers of an essential arrangement in Q^r. Every chamber is a pointed
// cone, so it contains a point near one of its extreme rays; the extreme
// rays are intersections of r-1 independent hyperplanes.
std::vector<QVec> essential_chambers(const std::vector<QVec>& normals, int r);

std::vector<QVec> reduce_and_solve(const std::vector<QVec>& normals, int dim) {
    QMat m;
    for (const auto& h : normals)
        if (std::any_of(h.begin(), h.end(), [](const Q& x) { return x != 0; })) m.push_back(h);
    if (m.empty()) return {QVec(dim, 0)};
    QMat rref = m;
    auto piv = row_reduce(rref);
    int r = static_cast<int>(piv.size());
    // Coordinates y_k = x[piv_k] on the row space; a normal h equals sum_k h[piv_k] rref_k.
    std::vector<QVec> reduced;
    for (const auto& h : m) {
        QVec c(r);
        for (int k = 0; k < r; ++k) c[k] = h[piv[k]];
        reduced.push_back(c);
    }
    std::vector<QVec> ys = essential_chambers(reduced, r);
    std::vector<QVec> out;
    for (const auto& y : ys) {
        QVec x(dim, 0);
        for (int k = 0; k < r; ++k) x[piv[k]] = y[k];
        out.push_back(x);
    }
    return out;
}

std::vector<QVec> essential_chambers(const std::vector<QVec>& normals, int r) {
    if (r == 1) return {QVec{Q(1)}, QVec{Q(-1)}};
    // Distinct hyperplanes only.
    std::vector<QVec> hs;
    {
        std::set<Vec> seen;
        for (const auto& h : normals) {
            Vec p = normalize_line(primitive(h));
            if (seen.insert(p).second) hs.push_back(to_q(Mat{p})[0]);
        }
    }
    std::set<Vec> lines;
    const std::size_t n = hs.size();
    std::vector<std::size_t> idx(r - 1);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
        if (depth == idx.size()) {
            QMat a;
            for (auto i : idx) a.push_back(hs[i]);
            auto ker = kernel(a, r);
            if (ker.size() == 1) lines.insert(normalize_line(primitive(ker[0])));
            return;
        }
        for (std::size_t i = start; i + (idx.size() - depth) <= n; ++i) {
            idx[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);

    std::set<std::vector<int>> seen_signs;
    std::vector<QVec> out;
    for (const auto& line : lines) {
        QVec d = to_q(Mat{line})[0];
        for (int s : {1, -1}) {
            QVec ray = d;
            for (auto& x : ray) x *= s;
            std::vector<QVec> through;
            for (const auto& h : hs)
                if (qdot(h, ray) == 0) through.push_back(h);
            for (const auto& u : reduce_and_solve(through, r)) {
                Q eps = 1;
                for (const auto& h : hs) {
                    Q hr = qdot(h, ray), hu = qdot(h, u);
                    if (hr == 0 || hu == 0 || sgn(hr) == sgn(hu)) continue;
                    Q lim = abs(hr / hu) / 2;
                    if (lim < eps) eps = lim;
                }
                QVec p(r);
                for (int k = 0; k < r; ++k) p[k] = ray[k] + eps * u[k];
                std::vector<int> sv;
                for (const auto& h : hs) sv.push_back(sgn(qdot(h, p)));
                if (seen_signs.insert(sv).second) out.push_back(p);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<int> sign_vector(const std::vector<Vec>& normals, const QVec& x) {
    std::vector<int> s;
    for (const auto& h : normals) {
        Q v = 0;
        for (std::size_t i = 0; i < h.size(); ++i) v += Q(h[i]) * x[i];
        s.push_back(sgn(v));
    }
    return s;
}

std::vector<QVec> chamber_points(const std::vector<Vec>& normals, int dim) {
    std::vector<QVec> q;
    for (const auto& h : normals) q.push_back(to_q(Mat{h})[0]);
    return reduce_and_solve(q, dim);
}

}  // namespace coreduce
