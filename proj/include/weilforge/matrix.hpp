#ifndef WEILFORGE_MATRIX_HPP
#define WEILFORGE_MATRIX_HPP

#include <vector>

#include "weilforge/bigint.hpp"
#include "weilforge/poly.hpp"

namespace weilforge {

// Dense matrices, row-major. Vectors are rows; a matrix acts on a row vector
// from the right (v -> v*M).
template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    T& at(long i, long j) { return e_[i * cols_ + j]; }
    const T& at(long i, long j) const { return e_[i * cols_ + j]; }
    const std::vector<T>& entries() const { return e_; }
    std::vector<T>& entries() { return e_; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    std::vector<T> row(long i) const {
        return std::vector<T>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }
    void set_row(long i, const std::vector<T>& r) {
        for (long j = 0; j < cols_; ++j) at(i, j) = r[j];
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat c(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik == T(0)) continue;
                for (long j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
        return c;
    }
    friend Mat operator*(const T& s, const Mat& a) {
        Mat c = a;
        for (auto& x : c.e_) x *= s;
        return c;
    }

    friend std::vector<T> operator*(const std::vector<T>& v, const Mat& m) {
        std::vector<T> r(m.cols_, T(0));
        for (long i = 0; i < m.rows_; ++i) {
            if (v[i] == T(0)) continue;
            for (long j = 0; j < m.cols_; ++j) r[j] += v[i] * m.at(i, j);
        }
        return r;
    }

  private:
    long rows_, cols_;
    std::vector<T> e_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rat(const IntMat& m);
// Fails if any entry has a denominator.
IntMat to_int(const RatMat& m);

Int bareiss_det(IntMat m);
Rat det(const RatMat& m);

// Gauss-Jordan inverse; raises rank_deficient on singular input.
RatMat inverse(const RatMat& m);

// Solve x * M = v over Q (M square invertible).
std::vector<Rat> solve_row(const RatMat& m, const std::vector<Rat>& v);

// Characteristic polynomial det(x*I - A), integer matrix.
IntPoly charpoly(const IntMat& a);

// Canonical Hermite normal form of the row lattice: lower-triangular with
// positive diagonal and the entries below each pivot reduced into [0, pivot).
// Input must have full column rank.
IntMat hnf_lower(const IntMat& m);

// Smith normal form S = U * A * V with U, V unimodular. S is diagonal with
// s_1 | s_2 | ..., nonnegative.
struct SmithForm {
    IntMat s, u, v;
};
SmithForm smith_form(IntMat a);

// Basis (rows) of {x : x * A == 0 mod p^N} as a full-rank sublattice of Z^m
// containing p^N Z^m.
IntMat kernel_mod(const IntMat& a, const Int& pN);

IntMat matpow(IntMat a, unsigned long e);
IntMat matpow_mod(IntMat a, Int e, const Int& m);
IntMat reduce_mod(IntMat a, const Int& m);

// Inverse of a matrix that is invertible mod m (entries in [0, m)).
IntMat inverse_mod(const IntMat& a, const Int& m);

} // namespace weilforge

#endif
