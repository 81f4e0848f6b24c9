#include "weilforge/field.hpp"

namespace weilforge {

Field::Field(IntPoly h) : h_(std::move(h)) {
    require(h_.is_monic(), errc::non_monic, "field modulus must be monic");
    deg_ = h_.degree();
    require(deg_ >= 1, errc::internal, "field modulus must be nonconstant");
    // Power traces via Newton's identities, then the linear recurrence.
    traces_.assign(2 * deg_ - 1, Rat(0));
    traces_[0] = Rat(deg_);
    for (long k = 1; k < 2 * deg_ - 1; ++k) {
        Rat s;
        if (k <= deg_) {
            s = -Rat(k) * Rat(h_[deg_ - k]);
            for (long i = 1; i < k; ++i) s -= Rat(h_[deg_ - i]) * traces_[k - i];
        } else {
            s = 0;
            for (long j = 0; j < deg_; ++j) s -= Rat(h_[j]) * traces_[k - deg_ + j];
        }
        traces_[k] = s;
    }
}

FieldElem Field::reduce(std::vector<Rat> c) const {
    for (long i = static_cast<long>(c.size()) - 1; i >= deg_; --i) {
        if (c[i] == 0) continue;
        Rat f = c[i];
        c[i] = 0;
        for (long j = 0; j < deg_; ++j) c[i - deg_ + j] -= f * Rat(h_[j]);
    }
    c.resize(deg_, Rat(0));
    return c;
}

FieldElem Field::one() const {
    FieldElem e = zero();
    e[0] = 1;
    return e;
}

FieldElem Field::gen(long k) const {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = 1;
    return reduce(std::move(c));
}

FieldElem Field::from_rat(const Rat& r) const {
    FieldElem e = zero();
    e[0] = r;
    return e;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r(deg_);
    for (long i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r(deg_);
    for (long i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
    return r;
}

FieldElem Field::neg(const FieldElem& a) const {
    FieldElem r(deg_);
    for (long i = 0; i < deg_; ++i) r[i] = -a[i];
    return r;
}

FieldElem Field::smul(const Rat& s, const FieldElem& a) const {
    FieldElem r(deg_);
    for (long i = 0; i < deg_; ++i) r[i] = s * a[i];
    return r;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    std::vector<Rat> c(2 * deg_ - 1, Rat(0));
    for (long i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < deg_; ++j) c[i + j] += a[i] * b[j];
    }
    return reduce(std::move(c));
}

bool Field::is_zero(const FieldElem& a) const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

FieldElem Field::inv(const FieldElem& a) const {
    require(!is_zero(a), errc::internal, "inverse of zero");
    // Extended Euclid over Q against h.
    QPoly r0{QPoly(h_)};
    QPoly r1{std::vector<Rat>(a)};
    QPoly s0, s1{Rat(1)};
    while (r1.degree() > 0) {
        QPoly q, r;
        qpoly_divmod(r0, r1, q, r);
        QPoly s2 = s0 - q * s1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        require(!r1.is_zero(), errc::internal, "element not invertible (modulus not irreducible?)");
    }
    // r1 is a nonzero constant: a * s1 = r1 mod h.
    QPoly invp = (Rat(1) / r1[0]) * s1;
    std::vector<Rat> c(deg_, Rat(0));
    for (long i = 0; i <= invp.degree(); ++i) c[i] = invp[i];
    return c;
}

FieldElem Field::pow(FieldElem a, Int e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    FieldElem r = one();
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

RatMat Field::mult_matrix(const FieldElem& a) const {
    RatMat m(deg_, deg_);
    FieldElem row = a;
    for (long i = 0; i < deg_; ++i) {
        m.set_row(i, row);
        if (i + 1 < deg_) row = mul(row, gen());
    }
    return m;
}

Rat Field::trace(const FieldElem& a) const {
    Rat s = 0;
    for (long i = 0; i < deg_; ++i) s += a[i] * traces_[i];
    return s;
}

Rat Field::norm(const FieldElem& a) const { return det(mult_matrix(a)); }

QPoly Field::minpoly(const FieldElem& a) const {
    // First linear dependency among 1, a, a^2, ...
    std::vector<FieldElem> pows{one()};
    for (long k = 1; k <= deg_; ++k) {
        pows.push_back(mul(pows.back(), a));
        // Solve sum c_i pows[i] = 0 with c_k = 1.
        RatMat m(k, deg_);
        for (long i = 0; i < k; ++i) m.set_row(i, pows[i]);
        // Least-degree relation: try to express pows[k] in span of lower powers.
        // Gaussian elimination on the transposed system.
        RatMat sys(deg_, k);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < deg_; ++j) sys.at(j, i) = pows[i][j];
        std::vector<Rat> rhs = pows[k];
        // Solve sys * c = rhs if consistent.
        RatMat w = sys;
        std::vector<Rat> b = rhs;
        std::vector<long> pivot_row(k, -1);
        long pr = 0;
        for (long col = 0; col < k && pr < deg_; ++col) {
            long piv = -1;
            for (long i = pr; i < deg_; ++i)
                if (w.at(i, col) != 0) { piv = i; break; }
            if (piv < 0) continue;
            for (long j = 0; j < k; ++j) std::swap(w.at(pr, j), w.at(piv, j));
            std::swap(b[pr], b[piv]);
            Rat f = Rat(1) / w.at(pr, col);
            for (long j = 0; j < k; ++j) w.at(pr, j) *= f;
            b[pr] *= f;
            for (long i = 0; i < deg_; ++i) {
                if (i == pr || w.at(i, col) == 0) continue;
                Rat g = w.at(i, col);
                for (long j = 0; j < k; ++j) w.at(i, j) -= g * w.at(pr, j);
                b[i] -= g * b[pr];
            }
            pivot_row[col] = pr;
            ++pr;
        }
        bool consistent = true;
        for (long i = pr; i < deg_; ++i)
            if (b[i] != 0) { consistent = false; break; }
        if (!consistent) continue;
        std::vector<Rat> c(k + 1, Rat(0));
        c[k] = 1;
        for (long col = 0; col < k; ++col)
            if (pivot_row[col] >= 0) c[col] = -b[pivot_row[col]];
        // verify
        return QPoly(std::move(c));
    }
    raise(errc::internal, "minpoly not found");
}

IntPoly Field::charpoly_elem(const FieldElem& a) const {
    QPoly m = minpoly(a);
    long e = deg_ / m.degree();
    require(m.degree() * e == deg_, errc::internal, "minpoly degree does not divide field degree");
    QPoly c{Rat(1)};
    for (long i = 0; i < e; ++i) c = c * m;
    std::vector<Int> r(deg_ + 1);
    for (long i = 0; i <= deg_; ++i) {
        require(den(c[i]) == 1, errc::internal, "charpoly not integral");
        r[i] = num(c[i]);
    }
    return IntPoly(std::move(r));
}

FieldElem Field::eval_poly(const IntPoly& f, const FieldElem& a) const {
    FieldElem r = zero();
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        r = mul(r, a);
        r[0] += Rat(f[i]);
    }
    return r;
}

FieldElem Field::eval_poly(const QPoly& f, const FieldElem& a) const {
    FieldElem r = zero();
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        r = mul(r, a);
        r[0] += f[i];
    }
    return r;
}

RatMat Field::trace_gram(const std::vector<FieldElem>& basis) const {
    long n = static_cast<long>(basis.size());
    RatMat g(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) {
            Rat t = trace(mul(basis[i], basis[j]));
            g.at(i, j) = t;
            g.at(j, i) = t;
        }
    return g;
}

bool is_q_symmetric(const IntPoly& h, const Int& q) {
    long d = h.degree();
    if (d < 0 || d % 2 != 0) return false;
    long g = d / 2;
    Int qk = 1;
    for (long k = 1; k <= g; ++k) {
        qk *= q;
        if (h[g - k] != h[g + k] * qk) return false;
    }
    return true;
}

IntPoly real_counterpart(const IntPoly& h, const Int& q) {
    require(is_q_symmetric(h, q), errc::internal, "polynomial is not q-symmetric");
    long g = h.degree() / 2;
    // L_k(t) with x^k + q^k/x^k = L_k(x + q/x): L_0 = 2, L_1 = t,
    // L_k = t L_{k-1} - q L_{k-2}.
    std::vector<IntPoly> L;
    L.push_back(IntPoly::constant(2));
    L.push_back(IntPoly::x_power(1));
    for (long k = 2; k <= g; ++k) L.push_back(IntPoly::x_power(1) * L[k - 1] - q * L[k - 2]);
    IntPoly P = IntPoly::constant(h[g]);
    for (long k = 1; k <= g; ++k) P = P + h[g + k] * L[k];
    return P;
}

CMField::CMField(IntPoly h, Int p, unsigned a_exp)
    : k_(std::make_shared<Field>(std::move(h))), p_(std::move(p)), a_(a_exp) {
    q_ = pow_int(p_, a_);
    long d = k_->degree();
    require(d % 2 == 0, errc::odd_degree, "Weil field degree must be even");
    require(is_q_symmetric(k_->h(), q_), errc::internal, "h is not q-symmetric");
    // conjugation matrix: x -> q/x
    FieldElem v = k_->smul(Rat(q_), k_->inv(k_->gen()));
    conj_mat_ = RatMat(d, d);
    FieldElem row = k_->one();
    for (long i = 0; i < d; ++i) {
        conj_mat_.set_row(i, row);
        if (i + 1 < d) row = k_->mul(row, v);
    }
    h_plus_ = real_counterpart(k_->h(), q_);
    long g = d / 2;
    t_powers_ = RatMat(g, d);
    FieldElem t = k_->add(k_->gen(), v);
    FieldElem tp = k_->one();
    for (long i = 0; i < g; ++i) {
        t_powers_.set_row(i, tp);
        if (i + 1 < g) tp = k_->mul(tp, t);
    }
}

FieldElem CMField::v_elem() const { return k_->smul(Rat(q_), k_->inv(k_->gen())); }

FieldElem CMField::conj(const FieldElem& x) const { return x * conj_mat_; }

QLattice CMField::conj_lattice(const QLattice& l) const {
    return QLattice::from_rows(l.basis() * conj_mat_);
}

bool CMField::is_conj_fixed(const FieldElem& x) const { return conj(x) == x; }

std::vector<Rat> CMField::to_real_coords(const FieldElem& x) const {
    require(is_conj_fixed(x), errc::internal, "element is not in the real subfield");
    long g = this->g(), d = k_->degree();
    // Solve c * t_powers = x.
    RatMat sys(d, g);
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < d; ++j) sys.at(j, i) = t_powers_.at(i, j);
    // Gaussian elimination.
    std::vector<Rat> b(x);
    std::vector<Rat> c(g, Rat(0));
    std::vector<long> pivcol(d, -1);
    long pr = 0;
    for (long col = 0; col < g && pr < d; ++col) {
        long piv = -1;
        for (long i = pr; i < d; ++i)
            if (sys.at(i, col) != 0) { piv = i; break; }
        require(piv >= 0, errc::internal, "t-power basis degenerate");
        for (long j = 0; j < g; ++j) std::swap(sys.at(pr, j), sys.at(piv, j));
        std::swap(b[pr], b[piv]);
        Rat f = Rat(1) / sys.at(pr, col);
        for (long j = 0; j < g; ++j) sys.at(pr, j) *= f;
        b[pr] *= f;
        for (long i = 0; i < d; ++i) {
            if (i == pr || sys.at(i, col) == 0) continue;
            Rat gg = sys.at(i, col);
            for (long j = 0; j < g; ++j) sys.at(i, j) -= gg * sys.at(pr, j);
            b[i] -= gg * b[pr];
        }
        pivcol[col] = pr;
        ++pr;
    }
    for (long i = pr; i < d; ++i)
        require(b[i] == 0, errc::internal, "element not in t-power span");
    for (long col = 0; col < g; ++col) c[col] = b[pivcol[col]];
    return c;
}

FieldElem CMField::from_real_coords(const std::vector<Rat>& c) const {
    FieldElem x = k_->zero();
    for (size_t i = 0; i < c.size(); ++i)
        x = k_->add(x, k_->smul(c[i], t_powers_.row(static_cast<long>(i))));
    return x;
}

} // namespace weilforge
