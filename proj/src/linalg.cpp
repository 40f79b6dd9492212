#include "coreduce/linalg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coreduce {

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& a, Int k) {
    Vec r(a);
    for (auto& x : r) x *= k;
    return r;
}

Vec neg(const Vec& a) { return scale(a, -1); }

bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int gcd_all(const Vec& a) {
    Int g = 0;
    for (Int x : a) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

Int lcm(Int a, Int b) { return a / std::gcd(a, b) * b; }

std::vector<int> row_reduce(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Q inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(row_reduce(m).size()); }

int rank(const Mat& m) { return rank(to_q(m)); }

QMat to_q(const Mat& m) {
    QMat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i].assign(m[i].begin(), m[i].end());
    return q;
}

QMat kernel(const QMat& m, int ncols) {
    QMat a = m;
    for (auto& row : a) row.resize(ncols);
    auto piv = row_reduce(a);
    std::vector<bool> is_piv(ncols, false);
    for (int c : piv) is_piv[c] = true;
    QMat basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        QVec v(ncols, Q(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec primitive(const QVec& v) {
    BigInt den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    std::vector<BigInt> num;
    BigInt g = 0;
    for (const auto& x : v) {
        BigInt n = boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x));
        num.push_back(n);
        g = boost::multiprecision::gcd(g, abs(n));
    }
    Vec out;
    for (auto& n : num) out.push_back(static_cast<Int>(g == 0 ? n : n / g));
    return out;
}

Int determinant(const Mat& m) {
    QMat a = to_q(m);
    const int n = static_cast<int>(a.size());
    Q det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int i = c + 1; i < n; ++i) {
            Q f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return static_cast<Int>(boost::multiprecision::numerator(det));
}

Mat adjugate(const Mat& m) {
    const int n = static_cast<int>(m.size());
    Mat adj(n, Vec(n, 0));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat minor;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                Vec row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(row);
            }
            Int d = determinant(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

std::string to_string(const Vec& v, char open, char close) {
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << close;
    return os.str();
}

std::string to_string(const Q& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
    return os.str();
}

Q parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Q(BigInt(std::stoll(s)));
        BigInt n(std::stoll(s.substr(0, slash)));
        BigInt d(std::stoll(s.substr(slash + 1)));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Q(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational: '" + s + "'");
    }
}

}  // namespace coreduce
