#ifndef WEILFORGE_POLY_HPP
#define WEILFORGE_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "weilforge/bigint.hpp"

namespace weilforge {

// Dense univariate polynomial over Z, coefficients in ascending degree.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static IntPoly x_power(size_t k, Int lead = Int(1)) {
        std::vector<Int> c(k + 1, Int(0));
        c[k] = std::move(lead);
        return IntPoly(std::move(c));
    }
    static IntPoly constant(Int a) { return IntPoly(std::vector<Int>{std::move(a)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& operator[](size_t i) const {
        static const Int zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    Int lc() const { return c_.empty() ? Int(0) : c_.back(); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator-() const {
        std::vector<Int> r(c_);
        for (auto& a : r) a = -a;
        return IntPoly(std::move(r));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const Int& s, const IntPoly& a) {
        std::vector<Int> r(a.c_);
        for (auto& x : r) x *= s;
        return IntPoly(std::move(r));
    }

    Int eval(const Int& x) const {
        Int r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
        return r;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<Int> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(i) * c_[i];
        return IntPoly(std::move(r));
    }

    Int content() const {
        Int g = 0;
        for (const auto& a : c_) g = gcd_int(g, a);
        return g;
    }
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        if (lc() < 0) g = -g;
        std::vector<Int> r(c_);
        for (auto& a : r) a /= g;
        return IntPoly(std::move(r));
    }

    // x^deg * f(1/x), the coefficient reversal.
    IntPoly reversed() const {
        std::vector<Int> r(c_.rbegin(), c_.rend());
        return IntPoly(std::move(r));
    }

    // f(s*x)
    IntPoly scale_arg(const Int& s) const {
        std::vector<Int> r(c_);
        Int pw = 1;
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] *= pw;
            pw *= s;
        }
        return IntPoly(std::move(r));
    }

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// Polynomial over Q, same conventions.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    QPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit QPoly(const IntPoly& f) {
        c_.reserve(f.coeffs().size());
        for (const auto& a : f.coeffs()) c_.emplace_back(a);
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](size_t i) const {
        static const Rat zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& a : r) a = -a;
        return QPoly(std::move(r));
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return QPoly(std::move(r));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(r));
    }
    friend QPoly operator*(const Rat& s, const QPoly& a) {
        std::vector<Rat> r(a.c_);
        for (auto& x : r) x *= s;
        return QPoly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    QPoly derivative() const {
        if (c_.size() <= 1) return QPoly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(i) * c_[i];
        return QPoly(std::move(r));
    }

    QPoly monic() const {
        require(!is_zero(), errc::internal, "monic of zero polynomial");
        Rat l = lc();
        std::vector<Rat> r(c_);
        for (auto& a : r) a /= l;
        return QPoly(std::move(r));
    }

    // Clears denominators and the content; sign follows the leading coefficient.
    IntPoly primitive_over_z() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Division with remainder over Q; divisor nonzero.
void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly qpoly_rem(const QPoly& a, const QPoly& b);
QPoly qpoly_gcd(QPoly a, QPoly b); // monic gcd
QPoly qpoly_squarefree_part(const QPoly& f);

// Subresultant PRS resultant over Z.
Int resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), degree >= 1.
Int poly_discriminant(const IntPoly& f);

IntPoly intpoly_gcd(const IntPoly& f, const IntPoly& g); // primitive gcd
bool is_squarefree_over_q(const IntPoly& f);

// Number of distinct real roots of f in the open interval (a, b), f squarefree.
long sturm_count_open(const QPoly& f, const Rat& a, const Rat& b);
// Number of distinct real roots of a squarefree f in (a, b] intersected with
// the whole line when a,b are +-infinity; helpers below isolate roots.
long sturm_count_all(const QPoly& f);

// Isolating intervals (lo, hi] with rational endpoints, one per distinct real
// root, sorted increasingly. f squarefree.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& f);

// Sign sequence of the Sturm chain evaluated in Z[y]/(y^2 - q) at u + v*sqrt(q),
// counting roots in intervals with quadratic-irrational endpoints. q > 0 and
// not a perfect square.
int sign_at_quadratic(const QPoly& g, const Rat& u, const Rat& v, const Int& q);
long sturm_count_open_quadratic(const QPoly& f, const Rat& au, const Rat& av,
                                const Rat& bu, const Rat& bv, const Int& q);

} // namespace weilforge

#endif
