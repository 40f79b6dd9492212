#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace coreduce {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;
using BigInt = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (Int x : v) {
            h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, Int k);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);
Int dot(const Vec& a, const Vec& b);
Int gcd_all(const Vec& a);
Int lcm(Int a, Int b);

// Row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(QMat& m);
int rank(QMat m);
int rank(const Mat& m);
// Basis of {x : m x = 0}.
QMat kernel(const QMat& m, int ncols);
QMat to_q(const Mat& m);
// Integer vector with the same direction as a rational vector (primitive).
Vec primitive(const QVec& v);
// Determinant and adjugate of a square integer matrix.
Int determinant(const Mat& m);
Mat adjugate(const Mat& m);

std::string to_string(const Vec& v, char open = '(', char close = ')');
std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

}  // namespace coreduce
