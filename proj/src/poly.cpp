#include "weilforge/poly.hpp"

#include <sstream>

namespace weilforge {

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        Int m = abs_int(a);
        if (i == 0 || m != 1) os << m.str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly QPoly::primitive_over_z() const {
    if (is_zero()) return IntPoly();
    Int d = 1;
    for (const auto& a : c_) d = lcm_int(d, den(a));
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = num(c_[i]) * (d / den(c_[i]));
    return IntPoly(std::move(r)).primitive_part();
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    require(!b.is_zero(), errc::internal, "division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    long db = b.degree();
    long da = static_cast<long>(rem.size()) - 1;
    if (da < db) {
        q = QPoly();
        r = QPoly(std::move(rem));
        return;
    }
    std::vector<Rat> quot(da - db + 1, Rat(0));
    for (long i = da; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / b.lc();
        quot[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
    }
    q = QPoly(std::move(quot));
    r = QPoly(std::move(rem));
}

QPoly qpoly_rem(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    qpoly_divmod(a, b, q, r);
    return r;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = qpoly_rem(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

QPoly qpoly_squarefree_part(const QPoly& f) {
    if (f.degree() <= 0) return f;
    QPoly g = qpoly_gcd(f, f.derivative());
    QPoly q, r;
    qpoly_divmod(f, g, q, r);
    require(r.is_zero(), errc::internal, "squarefree part division not exact");
    return q;
}

namespace {

// res(f, g) over Q through the Euclidean remainder sequence:
//   res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * res(g, r)
Rat resultant_q(QPoly f, QPoly g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    Rat acc = 1;
    int sgn = 1;
    while (true) {
        long m = f.degree(), n = g.degree();
        if (n == 0) {
            Rat lc = g.lc();
            Rat r = 1;
            for (long i = 0; i < m; ++i) r *= lc;
            return Rat(sgn) * acc * r;
        }
        QPoly r = qpoly_rem(f, g);
        if (r.is_zero()) return Rat(0);
        long k = r.degree();
        if ((m & 1) && (n & 1)) sgn = -sgn;
        Rat lc = g.lc();
        for (long i = 0; i < m - k; ++i) acc *= lc;
        f = std::move(g);
        g = std::move(r);
    }
}

} // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    Rat r = resultant_q(QPoly(f), QPoly(g));
    require(den(r) == 1, errc::internal, "integer resultant has denominator");
    return num(r);
}

Int poly_discriminant(const IntPoly& f) {
    require(f.degree() >= 1, errc::internal, "discriminant needs degree >= 1");
    Int r = resultant(f, f.derivative());
    long d = f.degree();
    Int disc = r / f.lc();
    if (((d * (d - 1)) / 2) % 2 == 1) disc = -disc;
    return disc;
}

IntPoly intpoly_gcd(const IntPoly& f, const IntPoly& g) {
    QPoly h = qpoly_gcd(QPoly(f), QPoly(g));
    if (h.is_zero()) return IntPoly();
    return h.primitive_over_z();
}

bool is_squarefree_over_q(const IntPoly& f) {
    if (f.degree() <= 0) return f.degree() == 0;
    return intpoly_gcd(f, f.derivative()).degree() == 0;
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero()) {
        QPoly r = qpoly_rem(chain[chain.size() - 2], chain.back());
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

long sign_variations(const std::vector<int>& signs) {
    long v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

long variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& g : chain) signs.push_back(sign(g.eval(x)));
    return sign_variations(signs);
}

long variations_at_infinity(const std::vector<QPoly>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& g : chain) {
        if (g.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sign(g.lc());
        if (dir < 0 && (g.degree() & 1)) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

} // namespace

long sturm_count_open(const QPoly& f, const Rat& a, const Rat& b) {
    require(a < b, errc::internal, "empty interval");
    QPoly g = f;
    // Sturm needs nonvanishing endpoints; rational endpoint roots split off
    // exactly and do not change the open-interval count.
    for (const Rat& e : {a, b}) {
        while (g.degree() > 0 && g.eval(e) == 0) {
            QPoly q, r;
            qpoly_divmod(g, QPoly({-e, Rat(1)}), q, r);
            g = q;
        }
    }
    if (g.degree() <= 0) return 0;
    auto chain = sturm_chain(g);
    return variations_at(chain, a) - variations_at(chain, b);
}

long sturm_count_all(const QPoly& f) {
    auto chain = sturm_chain(f);
    return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& f) {
    std::vector<std::pair<Rat, Rat>> out;
    if (f.degree() <= 0) return out;
    // Cauchy bound on root magnitude.
    Rat bound = 0;
    for (const auto& c : f.coeffs()) bound = std::max(bound, abs_rat(c / f.lc()));
    bound += 1;
    auto chain = sturm_chain(f);
    auto var = [&](const Rat& x) { return variations_at(chain, x); };
    // A cut point strictly inside (lo, hi) where f does not vanish.
    auto pick_cut = [&](const Rat& lo, const Rat& hi) {
        Rat mid = (lo + hi) / 2;
        Rat step = (hi - lo) / 4;
        while (f.eval(mid) == 0) {
            mid += step;
            step /= 2;
        }
        return mid;
    };
    struct Seg { Rat lo, hi; long nlo, nhi; };
    std::vector<Seg> stack;
    Rat lo = -bound, hi = bound;
    stack.push_back({lo, hi, var(lo), var(hi)});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        long n = s.nlo - s.nhi;
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(s.lo, s.hi);
            continue;
        }
        Rat mid = pick_cut(s.lo, s.hi);
        long nm = var(mid);
        stack.push_back({s.lo, mid, s.nlo, nm});
        stack.push_back({mid, s.hi, nm, s.nhi});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// Sign of u + v*sqrt(q), exact; q positive non-square.
static int sign_quad_value(const Rat& u, const Rat& v, const Int& q) {
    int su = sign(u), sv = sign(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // opposite signs: compare u^2 with v^2 q
    Rat lhs = u * u, rhs = v * v * Rat(q);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? su : sv;
}

int sign_at_quadratic(const QPoly& g, const Rat& u, const Rat& v, const Int& q) {
    // evaluate g at u + v*sqrt(q) in Q(sqrt(q)) by Horner
    Rat a = 0, b = 0; // a + b sqrt(q)
    for (size_t i = g.coeffs().size(); i-- > 0;) {
        // (a + b s)(u + v s) = (au + bvq) + (av + bu) s
        Rat na = a * u + b * v * Rat(q);
        Rat nb = a * v + b * u;
        a = na + g[i];
        b = nb;
    }
    return sign_quad_value(a, b, q);
}

long sturm_count_open_quadratic(const QPoly& f, const Rat& au, const Rat& av,
                                const Rat& bu, const Rat& bv, const Int& q) {
    QPoly g = f;
    // Split off endpoint roots exactly; the minimal polynomial of u + v*sqrt(q)
    // over Q is x^2 - 2u x + (u^2 - q v^2) when v != 0.
    for (auto [u, v] : {std::pair<Rat, Rat>{au, av}, {bu, bv}}) {
        while (g.degree() > 0 && sign_at_quadratic(g, u, v, q) == 0) {
            QPoly m = (v == 0) ? QPoly({-u, Rat(1)})
                               : QPoly({u * u - Rat(q) * v * v, -2 * u, Rat(1)});
            QPoly quo, rem;
            qpoly_divmod(g, m, quo, rem);
            require(rem.is_zero(), errc::internal, "endpoint deflation not exact");
            g = quo;
        }
    }
    if (g.degree() <= 0) return 0;
    auto chain = sturm_chain(g);
    auto var = [&](const Rat& u, const Rat& v) {
        std::vector<int> signs;
        for (const auto& h : chain) signs.push_back(sign_at_quadratic(h, u, v, q));
        return sign_variations(signs);
    };
    return var(au, av) - var(bu, bv);
}

} // namespace weilforge
