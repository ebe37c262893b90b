#include "monomideal/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace monomideal::linalg {

namespace {

using BigInt = boost::multiprecision::cpp_int;

bool mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t& out) {
    std::int64_t ab, cd;
    if (__builtin_mul_overflow(a, b, &ab)) return false;
    if (__builtin_mul_overflow(c, d, &cd)) return false;
    return !__builtin_sub_overflow(ab, cd, &out);
}

bool mul_sub(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, BigInt& out) {
    out = a * b - c * d;
    return true;
}

std::int64_t abs_value(std::int64_t v) { return v < 0 ? -v : v; }
BigInt abs_value(const BigInt& v) { return boost::multiprecision::abs(v); }

std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

/// Fraction-free elimination; each eliminated row is divided by its content
/// so entries stay small on boundary matrices. Returns nullopt on int64 overflow.
template <class Int>
std::optional<std::size_t> fraction_free_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            if (best == rows || abs_value(m[i][c]) < abs_value(m[best][c])) best = i;
            if (abs_value(m[best][c]) == 1) break;
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        const Int pivot = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Int factor = m[i][c];
            Int content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                if (m[i][j] == 0 && m[r][j] == 0) continue;
                Int v;
                if (!mul_sub(pivot, m[i][j], factor, m[r][j], v)) return std::nullopt;
                m[i][j] = v;
                if (v != 0) content = gcd_of(content, abs_value(v));
            }
            if (content > 1)
                for (std::size_t j = c; j < cols; ++j) m[i][j] /= content;
        }
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank_rational(IntMatrix m) {
    if (auto r = fraction_free_rank(m)) return *r;
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return *fraction_free_rank(std::move(big));
}

std::size_t rank_mod_p(IntMatrix m, std::uint32_t p) {
    if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be a prime");
    if (m.empty()) return 0;
    const auto mod = static_cast<std::int64_t>(p);
    for (auto& row : m)
        for (auto& v : row) v = ((v % mod) + mod) % mod;
    auto inverse = [mod](std::int64_t a) {
        std::int64_t result = 1, e = mod - 2;
        while (e > 0) {
            if (e & 1) result = result * a % mod;
            a = a * a % mod;
            e >>= 1;
        }
        return result;
    };
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot_row = r;
        while (pivot_row < rows && m[pivot_row][c] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(m[r], m[pivot_row]);
        const std::int64_t inv = inverse(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % mod;
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::int64_t f = m[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                m[i][j] = ((m[i][j] - f * m[r][j]) % mod + mod) % mod;
            }
        }
        ++r;
    }
    return r;
}

std::size_t rank(IntMatrix m, std::uint32_t characteristic) {
    return characteristic == 0 ? rank_rational(std::move(m)) : rank_mod_p(std::move(m), characteristic);
}

} // namespace monomideal::linalg
