#include "weilforge/matrix.hpp"

namespace weilforge {

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

IntMat to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            require(den(m.at(i, j)) == 1, errc::internal, "matrix entry not integral");
            r.at(i, j) = num(m.at(i, j));
        }
    return r;
}

Int bareiss_det(IntMat m) {
    require(m.rows() == m.cols(), errc::internal, "determinant of non-square matrix");
    long n = m.rows();
    if (n == 0) return Int(1);
    Int denom = 1;
    int sgn = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sgn = -sgn;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / denom;
            }
        denom = m.at(k, k);
    }
    return sgn > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

Rat det(const RatMat& m) {
    require(m.rows() == m.cols(), errc::internal, "determinant of non-square matrix");
    RatMat a = m;
    long n = a.rows();
    Rat d = 1;
    for (long k = 0; k < n; ++k) {
        long piv = -1;
        for (long i = k; i < n; ++i)
            if (a.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            d = -d;
        }
        d *= a.at(k, k);
        Rat inv = Rat(1) / a.at(k, k);
        for (long i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rat f = a.at(i, k) * inv;
            for (long j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return d;
}

RatMat inverse(const RatMat& m) {
    require(m.rows() == m.cols(), errc::internal, "inverse of non-square matrix");
    long n = m.rows();
    RatMat a = m, inv = RatMat::identity(n);
    for (long k = 0; k < n; ++k) {
        long piv = -1;
        for (long i = k; i < n; ++i)
            if (a.at(i, k) != 0) { piv = i; break; }
        require(piv >= 0, errc::rank_deficient, "singular matrix");
        if (piv != k)
            for (long j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Rat f = Rat(1) / a.at(k, k);
        for (long j = 0; j < n; ++j) {
            a.at(k, j) *= f;
            inv.at(k, j) *= f;
        }
        for (long i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rat g = a.at(i, k);
            for (long j = 0; j < n; ++j) {
                a.at(i, j) -= g * a.at(k, j);
                inv.at(i, j) -= g * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> solve_row(const RatMat& m, const std::vector<Rat>& v) {
    // x * M = v  <=>  M^T x^T = v^T
    RatMat inv = inverse(m);
    return v * inv;
}

IntPoly charpoly(const IntMat& a) {
    require(a.rows() == a.cols(), errc::internal, "charpoly of non-square matrix");
    long n = a.rows();
    // Interpolate det(xI - A) at x = 0..n.
    std::vector<Rat> xs, ys;
    for (long k = 0; k <= n; ++k) {
        IntMat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m.at(i, j) = (i == j ? Int(k) : Int(0)) - a.at(i, j);
        xs.emplace_back(k);
        ys.emplace_back(bareiss_det(m));
    }
    // Lagrange interpolation.
    QPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        QPoly term{ys[i]};
        Rat denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * QPoly({-xs[j], Rat(1)});
            denom *= (xs[i] - xs[j]);
        }
        acc = acc + (Rat(1) / denom) * term;
    }
    std::vector<Int> c(n + 1);
    for (long i = 0; i <= n; ++i) {
        require(den(acc[i]) == 1, errc::internal, "charpoly interpolation not integral");
        c[i] = num(acc[i]);
    }
    return IntPoly(std::move(c));
}

IntMat hnf_lower(const IntMat& m) {
    long rows = m.rows(), n = m.cols();
    IntMat w = m;
    std::vector<long> owner(n, -1); // row index assigned to each pivot column
    std::vector<bool> assigned(rows, false);
    for (long col = n - 1; col >= 0; --col) {
        // Eliminate entries in `col` among unassigned rows down to one owner.
        while (true) {
            long r1 = -1, r2 = -1;
            for (long i = 0; i < rows; ++i) {
                if (assigned[i] || w.at(i, col) == 0) continue;
                if (r1 < 0) r1 = i;
                else { r2 = i; break; }
            }
            if (r2 < 0) {
                if (r1 >= 0) {
                    owner[col] = r1;
                    assigned[r1] = true;
                }
                break;
            }
            // Euclidean step on the pair, smaller magnitude as the divisor.
            if (abs_int(w.at(r1, col)) < abs_int(w.at(r2, col))) std::swap(r1, r2);
            Int q = w.at(r1, col) / w.at(r2, col);
            for (long j = 0; j < n; ++j) w.at(r1, j) -= q * w.at(r2, j);
        }
        require(owner[col] >= 0, errc::rank_deficient, "matrix does not have full column rank");
    }
    IntMat h(n, n);
    for (long i = 0; i < n; ++i) h.set_row(i, w.row(owner[i]));
    // Positive pivots.
    for (long i = 0; i < n; ++i)
        if (h.at(i, i) < 0)
            for (long j = 0; j < n; ++j) h.at(i, j) = -h.at(i, j);
    // Reduce below-pivot entries into [0, pivot).
    for (long i = 1; i < n; ++i)
        for (long c = i - 1; c >= 0; --c) {
            Int q = fdiv(h.at(i, c), h.at(c, c));
            if (q == 0) continue;
            for (long j = 0; j <= c; ++j) h.at(i, j) -= q * h.at(c, j);
        }
    return h;
}

SmithForm smith_form(IntMat a) {
    long rows = a.rows(), cols = a.cols();
    IntMat u = IntMat::identity(rows), v = IntMat::identity(cols);
    long r = std::min(rows, cols);
    auto swap_rows = [&](long i, long j) {
        if (i == j) return;
        for (long c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (long c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](long i, long j) {
        if (i == j) return;
        for (long rr = 0; rr < rows; ++rr) std::swap(a.at(rr, i), a.at(rr, j));
        for (long rr = 0; rr < cols; ++rr) std::swap(v.at(rr, i), v.at(rr, j));
    };
    auto addmul_row = [&](long dst, long src, const Int& q) {
        for (long c = 0; c < cols; ++c) a.at(dst, c) += q * a.at(src, c);
        for (long c = 0; c < rows; ++c) u.at(dst, c) += q * u.at(src, c);
    };
    auto addmul_col = [&](long dst, long src, const Int& q) {
        for (long rr = 0; rr < rows; ++rr) a.at(rr, dst) += q * a.at(rr, src);
        for (long rr = 0; rr < cols; ++rr) v.at(rr, dst) += q * v.at(rr, src);
    };
    auto diagonalize = [&]() {
        for (long k = 0; k < r; ++k) {
            long pi = -1, pj = -1;
            for (long i = k; i < rows && pi < 0; ++i)
                for (long j = k; j < cols; ++j)
                    if (a.at(i, j) != 0) { pi = i; pj = j; break; }
            if (pi < 0) break;
            swap_rows(k, pi);
            swap_cols(k, pj);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (long i = k + 1; i < rows; ++i) {
                    while (a.at(i, k) != 0) {
                        Int q = a.at(i, k) / a.at(k, k);
                        addmul_row(i, k, -q);
                        if (a.at(i, k) != 0) { swap_rows(i, k); dirty = true; }
                    }
                }
                for (long j = k + 1; j < cols; ++j) {
                    while (a.at(k, j) != 0) {
                        Int q = a.at(k, j) / a.at(k, k);
                        addmul_col(j, k, -q);
                        if (a.at(k, j) != 0) { swap_cols(j, k); dirty = true; }
                    }
                }
            }
            if (a.at(k, k) < 0) {
                for (long c = 0; c < cols; ++c) a.at(k, c) = -a.at(k, c);
                for (long c = 0; c < rows; ++c) u.at(k, c) = -u.at(k, c);
            }
        }
    };
    diagonalize();
    // Enforce the divisibility chain; each fix couples two diagonal entries and
    // re-diagonalizes (entries refine toward gcd/lcm, so this terminates).
    while (true) {
        long bi = -1, bj = -1;
        for (long i = 0; i + 1 < r && bi < 0; ++i) {
            if (a.at(i, i) == 0) break;
            for (long j = i + 1; j < r; ++j)
                if (a.at(j, j) % a.at(i, i) != 0) { bi = i; bj = j; break; }
        }
        if (bi < 0) break;
        addmul_col(bi, bj, Int(1));
        diagonalize();
    }
    return SmithForm{a, u, v};
}

IntMat kernel_mod(const IntMat& a, const Int& pN) {
    long m = a.rows();
    SmithForm sf = smith_form(a);
    long r = std::min(a.rows(), a.cols());
    IntMat basis(m, m);
    for (long i = 0; i < m; ++i) {
        Int mult = 1;
        if (i < r && sf.s.at(i, i) != 0) {
            Int g = gcd_int(sf.s.at(i, i), pN);
            mult = pN / g;
        }
        for (long j = 0; j < m; ++j) basis.at(i, j) = mult * sf.u.at(i, j);
    }
    return hnf_lower(basis);
}

IntMat matpow(IntMat a, unsigned long e) {
    IntMat r = IntMat::identity(a.rows());
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

IntMat reduce_mod(IntMat a, const Int& m) {
    for (auto& x : a.entries()) x = fmod_int(x, m);
    return a;
}

IntMat matpow_mod(IntMat a, Int e, const Int& m) {
    IntMat r = IntMat::identity(a.rows());
    a = reduce_mod(a, m);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = reduce_mod(r * a, m);
        a = reduce_mod(a * a, m);
        e >>= 1;
    }
    return r;
}

IntMat inverse_mod(const IntMat& a, const Int& m) {
    long n = a.rows();
    IntMat w = reduce_mod(a, m), inv = IntMat::identity(n);
    for (long k = 0; k < n; ++k) {
        long piv = -1;
        for (long i = k; i < n; ++i)
            if (gcd_int(w.at(i, k), m) == 1) { piv = i; break; }
        require(piv >= 0, errc::internal, "matrix not invertible modulo m");
        if (piv != k)
            for (long j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Int f = mod_inverse(w.at(k, k), m);
        for (long j = 0; j < n; ++j) {
            w.at(k, j) = w.at(k, j) * f % m;
            inv.at(k, j) = inv.at(k, j) * f % m;
        }
        for (long i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Int g = w.at(i, k);
            for (long j = 0; j < n; ++j) {
                w.at(i, j) = fmod_int(w.at(i, j) - g * w.at(k, j), m);
                inv.at(i, j) = fmod_int(inv.at(i, j) - g * inv.at(k, j), m);
            }
        }
    }
    return inv;
}

} // namespace weilforge
