#ifndef WEILFORGE_LATTICE_HPP
#define WEILFORGE_LATTICE_HPP

#include <vector>

#include "weilforge/matrix.hpp"

namespace weilforge {

// Full-rank lattice in Q^dim. Basis rows are stored in canonical Hermite form
// (lower-triangular, positive pivots, entries below each pivot reduced), so
// equal lattices compare equal componentwise.
class QLattice {
  public:
    QLattice() : dim_(0) {}

    // Rows generate the lattice; they must span a rank = cols sublattice.
    static QLattice from_rows(const RatMat& rows);
    static QLattice standard(long dim) { return from_rows(RatMat::identity(dim)); }

    long dim() const { return dim_; }
    const RatMat& basis() const { return basis_; }

    bool operator==(const QLattice& o) const { return dim_ == o.dim_ && basis_ == o.basis_; }
    bool operator!=(const QLattice& o) const { return !(*this == o); }

    Rat det_abs() const;

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const QLattice& other) const;

    // Coordinates of v in this basis (rational).
    std::vector<Rat> coords(const std::vector<Rat>& v) const;

    QLattice scaled(const Rat& s) const;

    friend QLattice operator+(const QLattice& a, const QLattice& b);
    QLattice intersect(const QLattice& other) const;

    // Dual lattice under the standard inner product sum x_i y_i.
    QLattice dual() const;

  private:
    long dim_;
    RatMat basis_;
};

// hnf_canonicalize is the canonical-form entry point from the spec surface.
inline QLattice hnf_canonicalize(const RatMat& rows) { return QLattice::from_rows(rows); }

// Generalized index [L1 : L2] = |det(B2 B1^{-1})| as a positive rational.
Rat lattice_index(const QLattice& l1, const QLattice& l2);

} // namespace weilforge

#endif
