#include "weilforge/lattice.hpp"

namespace weilforge {

QLattice QLattice::from_rows(const RatMat& rows) {
    long n = rows.cols();
    require(rows.rows() >= n, errc::rank_deficient, "fewer generators than dimension");
    Int d = 1;
    for (const auto& x : rows.entries()) d = lcm_int(d, den(x));
    IntMat m(rows.rows(), n);
    for (long i = 0; i < rows.rows(); ++i)
        for (long j = 0; j < n; ++j) {
            const Rat& x = rows.at(i, j);
            m.at(i, j) = num(x) * (d / den(x));
        }
    IntMat h = hnf_lower(m);
    QLattice l;
    l.dim_ = n;
    l.basis_ = RatMat(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) l.basis_.at(i, j) = Rat(h.at(i, j), d);
    return l;
}

Rat QLattice::det_abs() const {
    Rat d = 1;
    for (long i = 0; i < dim_; ++i) d *= basis_.at(i, i);
    return d; // triangular with positive pivots
}

std::vector<Rat> QLattice::coords(const std::vector<Rat>& v) const {
    // Back-substitution against the lower-triangular basis.
    std::vector<Rat> c(dim_, Rat(0));
    std::vector<Rat> rem = v;
    for (long i = dim_ - 1; i >= 0; --i) {
        c[i] = rem[i] / basis_.at(i, i);
        for (long j = 0; j <= i; ++j) rem[j] -= c[i] * basis_.at(i, j);
    }
    return c;
}

bool QLattice::contains(const std::vector<Rat>& v) const {
    for (const Rat& x : coords(v))
        if (den(x) != 1) return false;
    return true;
}

bool QLattice::contains(const QLattice& other) const {
    for (long i = 0; i < other.dim_; ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

QLattice QLattice::scaled(const Rat& s) const {
    require(s != 0, errc::internal, "scaling lattice by zero");
    RatMat m = basis_;
    for (auto& x : m.entries()) x *= s;
    return from_rows(m);
}

QLattice operator+(const QLattice& a, const QLattice& b) {
    require(a.dim_ == b.dim_, errc::internal, "lattice sum dimension mismatch");
    RatMat m(2 * a.dim_, a.dim_);
    for (long i = 0; i < a.dim_; ++i)
        for (long j = 0; j < a.dim_; ++j) {
            m.at(i, j) = a.basis_.at(i, j);
            m.at(a.dim_ + i, j) = b.basis_.at(i, j);
        }
    return QLattice::from_rows(m);
}

QLattice QLattice::dual() const {
    return from_rows(inverse(basis_).transpose());
}

QLattice QLattice::intersect(const QLattice& other) const {
    return (dual() + other.dual()).dual();
}

Rat lattice_index(const QLattice& l1, const QLattice& l2) {
    require(l1.dim() == l2.dim(), errc::internal, "lattice index dimension mismatch");
    Rat r = l2.det_abs() / l1.det_abs();
    return r;
}

} // namespace weilforge
