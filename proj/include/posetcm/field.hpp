#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace posetcm {

/// Coefficient field for homology: a prime field GF(p) or the rationals.
/// All arithmetic downstream is exact; there is no floating point anywhere.
class FieldDescriptor {
public:
    static FieldDescriptor gf(std::int64_t p) {
        if (!is_prime(p))
            throw std::invalid_argument("field: modulus " + std::to_string(p) + " is not prime");
        if (p > max_modulus)
            throw std::invalid_argument("field: modulus too large (limit " +
                                        std::to_string(max_modulus) + ")");
        return FieldDescriptor(p);
    }

    // products of canonical representatives must fit in int64
    static constexpr std::int64_t max_modulus = 2147483647;
    static FieldDescriptor rationals() { return FieldDescriptor(0); }

    /// Accepts "gf<p>" or "rat" (also "q"/"qq", case-insensitive).
    static FieldDescriptor parse(std::string text) {
        for (char& c : text)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (text == "rat" || text == "q" || text == "qq")
            return rationals();
        if (text.size() > 2 && text.substr(0, 2) == "gf") {
            std::int64_t p = 0;
            try {
                p = std::stoll(text.substr(2));
            } catch (const std::exception&) {
                throw std::invalid_argument("field: cannot parse '" + text + "'");
            }
            return gf(p);
        }
        throw std::invalid_argument("field: cannot parse '" + text + "' (expected gf<p> or rat)");
    }

    bool is_rational() const { return p_ == 0; }
    std::int64_t modulus() const { return p_; }

    std::string name() const { return is_rational() ? "rat" : "gf" + std::to_string(p_); }

    bool operator==(const FieldDescriptor& other) const { return p_ == other.p_; }

private:
    explicit FieldDescriptor(std::int64_t p) : p_(p) {}

    static bool is_prime(std::int64_t p) {
        if (p < 2)
            return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

    std::int64_t p_;  // 0 encodes the rationals
};

namespace detail {

/// GF(p) element operations on canonical representatives in [0, p).
struct PrimeFieldOps {
    using value_type = std::int64_t;
    std::int64_t p;

    value_type from_int(int v) const {
        std::int64_t r = v % p;
        return r < 0 ? r + p : r;
    }
    bool is_zero(value_type a) const { return a == 0; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type add(value_type a, value_type b) const { return (a + b) % p; }
    value_type mul(value_type a, value_type b) const { return a * b % p; }
    value_type sub_mul(value_type a, value_type b, value_type c) const {
        // a - b*c
        std::int64_t r = (a - b * c % p) % p;
        return r < 0 ? r + p : r;
    }
    value_type inv(value_type a) const {
        // extended Euclid; a nonzero mod p
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1)
            throw std::logic_error("field: inverse of a zero divisor");
        return t < 0 ? t + p : t;
    }
};

/// Exact rational operations (arbitrary precision, always normalized).
struct RationalOps {
    using value_type = boost::multiprecision::cpp_rational;

    value_type from_int(int v) const { return value_type(v); }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type neg(const value_type& a) const { return -a; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type sub_mul(const value_type& a, const value_type& b, const value_type& c) const {
        return a - b * c;
    }
    value_type inv(const value_type& a) const { return value_type(1) / a; }
};

template <typename Ops>
using Matrix = std::vector<std::vector<typename Ops::value_type>>;

/// Rank by in-place Gaussian elimination; destroys its argument.
template <typename Ops>
int matrix_rank(Matrix<Ops>& m, const Ops& ops) {
    if (m.empty() || m.front().empty())
        return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!ops.is_zero(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        auto& prow = m[static_cast<std::size_t>(rank)];
        const auto pinv = ops.inv(prow[static_cast<std::size_t>(col)]);
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = m[static_cast<std::size_t>(r)];
            if (ops.is_zero(row[static_cast<std::size_t>(col)]))
                continue;
            const auto factor = ops.mul(row[static_cast<std::size_t>(col)], pinv);
            for (int c = col; c < cols; ++c)
                row[static_cast<std::size_t>(c)] = ops.sub_mul(
                    row[static_cast<std::size_t>(c)], factor, prow[static_cast<std::size_t>(c)]);
        }
        ++rank;
    }
    return rank;
}

/// True iff a*b is the zero matrix (dimensions assumed compatible).
template <typename Ops>
bool product_is_zero(const Matrix<Ops>& a, const Matrix<Ops>& b, const Ops& ops) {
    if (a.empty() || b.empty() || b.front().empty())
        return true;
    const int rows = static_cast<int>(a.size());
    const int inner = static_cast<int>(b.size());
    const int cols = static_cast<int>(b.front().size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            auto acc = ops.from_int(0);
            for (int k = 0; k < inner; ++k)
                acc = ops.add(acc, ops.mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                           b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
            if (!ops.is_zero(acc))
                return false;
        }
    return true;
}

}  // namespace detail

}  // namespace posetcm
