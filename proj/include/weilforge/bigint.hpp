#ifndef WEILFORGE_BIGINT_HPP
#define WEILFORGE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weilforge/error.hpp"

namespace weilforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs_rat(const Rat& a) { return a < 0 ? Rat(-a) : a; }
inline int sign(const Int& a) { return a < 0 ? -1 : (a == 0 ? 0 : 1); }
inline int sign(const Rat& a) { return a < 0 ? -1 : (a == 0 ? 0 : 1); }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Floor division and the matching nonnegative remainder.
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
inline Int fmod_int(const Int& a, const Int& b) {
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

inline Int floor_rat(const Rat& r) { return fdiv(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return -fdiv(-num(r), den(r)); }
inline Int round_rat(const Rat& r) { return floor_rat(r + Rat(1, 2)); }

// Extended gcd: returns g and sets x, y with a*x + b*y = g >= 0.
inline Int xgcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0; y = y0;
    return a;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = xgcd(fmod_int(a, m), m, x, y);
    require(g == 1, errc::internal, "element not invertible modulo m");
    return fmod_int(x, m);
}

inline Int powmod(Int base, Int e, const Int& m) {
    Int r = 1;
    base = fmod_int(base, m);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

inline Int isqrt_int(const Int& a) {
    require(a >= 0, errc::internal, "isqrt of negative");
    return boost::multiprecision::sqrt(a);
}

inline bool is_square_int(const Int& a, Int* root = nullptr) {
    if (a < 0) return false;
    Int s = isqrt_int(a);
    if (s * s == a) {
        if (root) *root = s;
        return true;
    }
    return false;
}

inline bool is_square_rat(const Rat& a, Rat* root = nullptr) {
    Int rn, rd;
    if (!is_square_int(num(a), &rn) || !is_square_int(den(a), &rd)) return false;
    if (root) *root = Rat(rn, rd);
    return true;
}

// v_p of a nonzero integer.
inline long val_p(Int a, const Int& p) {
    require(a != 0, errc::internal, "valuation of zero");
    long v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

inline long val_p_rat(const Rat& a, const Int& p) {
    require(a != 0, errc::internal, "valuation of zero");
    return val_p(num(a), p) - val_p(den(a), p);
}

inline bool fits_ulong(const Int& a) { return a >= 0 && a <= Int(std::numeric_limits<unsigned long>::max()); }

inline std::string to_string(const Int& a) { return a.str(); }
inline std::string to_string(const Rat& a) {
    if (den(a) == 1) return num(a).str();
    return num(a).str() + "/" + den(a).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// Deterministic primality: trial division, adequate for desk-scale bounds.
inline bool is_prime_small(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline Int next_prime_above(Int n) {
    ++n;
    while (!is_prime_small(n)) ++n;
    return n;
}

} // namespace weilforge

#endif
