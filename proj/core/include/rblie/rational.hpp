#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace rblie {

// Exact rational scalar. Always stored in lowest terms with positive
// denominator; serialized as "p" or "p/q".
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

inline std::string to_string(const Scalar& s) { return s.str(); }

inline Scalar parse_rational(const std::string& text) {
    auto begin = text.find_first_not_of(" \t");
    auto end = text.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw std::invalid_argument("not a rational: '" + text + "'");
    try {
        Scalar s(text.substr(begin, end - begin + 1));
        return s;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

inline bool is_zero(const Vec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v[i] = 1;
    return v;
}

inline Vec& add_assign(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec& sub_assign(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec& scale_assign(Vec& a, const Scalar& c) {
    for (auto& x : a) x *= c;
    return a;
}

inline Vec scaled(Vec a, const Scalar& c) {
    scale_assign(a, c);
    return a;
}

}  // namespace rblie
