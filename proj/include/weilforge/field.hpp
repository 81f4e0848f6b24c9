#ifndef WEILFORGE_FIELD_HPP
#define WEILFORGE_FIELD_HPP

#include <memory>
#include <vector>

#include "weilforge/lattice.hpp"
#include "weilforge/poly.hpp"

namespace weilforge {

using FieldElem = std::vector<Rat>; // power-basis coordinates

// Q[x]/(h) for a monic h; callers that need a field must pass irreducible h.
class Field {
  public:
    explicit Field(IntPoly h);

    const IntPoly& h() const { return h_; }
    long degree() const { return deg_; }

    FieldElem zero() const { return FieldElem(deg_, Rat(0)); }
    FieldElem one() const;
    FieldElem gen(long k = 1) const; // x^k mod h
    FieldElem from_rat(const Rat& r) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem smul(const Rat& s, const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, Int e) const; // e may be negative

    bool is_zero(const FieldElem& a) const;

    // Matrix of multiplication by a (row convention: coords(v*a) = coords(v) * M).
    RatMat mult_matrix(const FieldElem& a) const;

    Rat trace(const FieldElem& a) const;
    Rat norm(const FieldElem& a) const;
    QPoly minpoly(const FieldElem& a) const;       // monic, over Q
    IntPoly charpoly_elem(const FieldElem& a) const;

    // Evaluate a polynomial at an element of K.
    FieldElem eval_poly(const IntPoly& f, const FieldElem& a) const;
    FieldElem eval_poly(const QPoly& f, const FieldElem& a) const;

    // Gram matrix of the trace form on a list of elements.
    RatMat trace_gram(const std::vector<FieldElem>& basis) const;

    const std::vector<Rat>& power_traces() const { return traces_; }

  private:
    IntPoly h_;
    long deg_;
    std::vector<Rat> traces_; // Tr(x^k), k = 0..2*deg-2
    FieldElem reduce(std::vector<Rat> c) const;
};

// Symmetry a_i = a_{2g-i} q^{g-i} of a degree-2g polynomial (root multiset
// closed under b -> q/b).
bool is_q_symmetric(const IntPoly& h, const Int& q);

// P with h(x) = x^g P(x + q/x); requires is_q_symmetric.
IntPoly real_counterpart(const IntPoly& h, const Int& q);

// CM structure on a Weil field: conjugation pi -> q/pi and the totally real
// subfield Q(pi + q/pi).
class CMField {
  public:
    CMField(IntPoly h, Int p, unsigned a_exp);

    const Field& field() const { return *k_; }
    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    unsigned a_exp() const { return a_; }
    long g() const { return field().degree() / 2; }

    FieldElem pi() const { return k_->gen(); }
    FieldElem v_elem() const; // q/pi

    FieldElem conj(const FieldElem& x) const;
    QLattice conj_lattice(const QLattice& l) const;
    bool is_conj_fixed(const FieldElem& x) const;

    const IntPoly& h_plus() const { return h_plus_; }
    // Coordinates of (pi + q/pi)^j, j < g, as rows.
    const RatMat& t_power_basis() const { return t_powers_; }
    // Express a conj-fixed element in the t-power basis of the real subfield.
    std::vector<Rat> to_real_coords(const FieldElem& x) const;
    FieldElem from_real_coords(const std::vector<Rat>& c) const;

    // Relative norm and trace for K over the real subfield.
    FieldElem rel_norm(const FieldElem& x) const { return k_->mul(x, conj(x)); }
    FieldElem rel_trace(const FieldElem& x) const { return k_->add(x, conj(x)); }

  private:
    std::shared_ptr<Field> k_;
    Int p_, q_;
    unsigned a_;
    RatMat conj_mat_;
    IntPoly h_plus_;
    RatMat t_powers_;
};

} // namespace weilforge

#endif
