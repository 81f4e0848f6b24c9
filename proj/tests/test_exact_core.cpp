#include "doctest.h"

#include <random>

#include "weilforge/field.hpp"
#include "weilforge/lattice.hpp"
#include "weilforge/matrix.hpp"
#include "weilforge/poly.hpp"

using namespace weilforge;

namespace {

// Independent oracle: resultant as the determinant of the Sylvester matrix.
Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    long m = f.degree(), n = g.degree();
    IntMat s(m + n, m + n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s.at(i, i + j) = f[m - j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s.at(n + i, i + j) = g[n - j];
    return bareiss_det(s);
}

RatMat rows2(std::vector<std::vector<long>> v) {
    RatMat m(static_cast<long>(v.size()), static_cast<long>(v[0].size()));
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v[i].size(); ++j) m.at(i, j) = Rat(v[i][j]);
    return m;
}

} // namespace

TEST_CASE("discriminant matches the Sylvester determinant oracle") {
    IntPoly f{9, 3, 3, 1, 1}; // x^4+x^3+3x^2+3x+9
    Int oracle = sylvester_resultant(f, f.derivative());
    // disc = (-1)^(d(d-1)/2) res(f,f')/lc
    Int expect = oracle; // d=4: (-1)^6 = +1, lc = 1
    CHECK(poly_discriminant(f) == expect);
    CHECK(resultant(f, f.derivative()) == oracle);

    CHECK(poly_discriminant(IntPoly{1, 0, 1}) == -4);  // x^2+1
    CHECK(poly_discriminant(IntPoly{-3, 0, 1}) == 12); // x^2-3
}

TEST_CASE("discriminant vanishes exactly on non-squarefree input") {
    IntPoly f{1, 2, 1}; // (x+1)^2
    CHECK(poly_discriminant(f) == 0);
    CHECK(!is_squarefree_over_q(f));
    CHECK(is_squarefree_over_q(IntPoly{-3, 0, 1}));
}

TEST_CASE("random resultants agree with Sylvester oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Int> fc(5), gc(4);
        for (auto& c : fc) c = coeff(rng);
        for (auto& c : gc) c = coeff(rng);
        fc.back() = 1 + std::abs(static_cast<long>(coeff(rng)));
        gc.back() = 1 + std::abs(static_cast<long>(coeff(rng)));
        IntPoly f(fc), g(gc);
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
    }
}

TEST_CASE("hnf canonical form basics") {
    // identity stays identity
    QLattice id = QLattice::from_rows(rows2({{1, 0}, {0, 1}}));
    CHECK(id.basis() == RatMat::identity(2));

    // permuted/negated basis canonicalizes to identity
    QLattice perm = QLattice::from_rows(rows2({{0, -1}, {1, 0}}));
    CHECK(perm == id);

    // {(2,0),(1,1)}: determinant-2 lattice, canonical basis preserved
    QLattice l = QLattice::from_rows(rows2({{2, 0}, {1, 1}}));
    CHECK(l.det_abs() == Rat(2));
    QLattice l2 = QLattice::from_rows(rows2({{1, 1}, {2, 0}, {3, 1}}));
    CHECK(l == l2);
}

TEST_CASE("hnf is idempotent and unimodular-invariant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        RatMat m(3, 3);
        do {
            for (long i = 0; i < 3; ++i)
                for (long j = 0; j < 3; ++j) m.at(i, j) = Rat(coeff(rng), 1 + (trial % 3));
        } while (det(m) == 0);
        QLattice l = QLattice::from_rows(m);
        CHECK(QLattice::from_rows(l.basis()) == l);
        // multiply by a random unimodular matrix
        RatMat u = RatMat::identity(3);
        for (int k = 0; k < 6; ++k) {
            long i = rng() % 3, j = rng() % 3;
            if (i == j) continue;
            Rat f = Rat(coeff(rng));
            for (long c = 0; c < 3; ++c) u.at(i, c) += f * u.at(j, c);
        }
        CHECK(QLattice::from_rows(u * l.basis()) == l);
    }
}

TEST_CASE("lattice index examples and multiplicativity") {
    QLattice z2 = QLattice::standard(2);
    QLattice two_z2 = z2.scaled(Rat(2));
    CHECK(lattice_index(z2, two_z2) == Rat(4));
    CHECK(lattice_index(z2, z2) == Rat(1));
    // Z[i] vs Z + 2iZ
    QLattice zi = QLattice::from_rows(rows2({{1, 0}, {0, 1}}));
    QLattice z2i = QLattice::from_rows(rows2({{1, 0}, {0, 2}}));
    CHECK(lattice_index(zi, z2i) == Rat(2));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coeff(-5, 5);
    auto rnd_lattice = [&]() {
        RatMat m(3, 3);
        do {
            for (long i = 0; i < 3; ++i)
                for (long j = 0; j < 3; ++j) m.at(i, j) = Rat(coeff(rng), 1 + (rng() % 2));
        } while (det(m) == 0);
        return QLattice::from_rows(m);
    };
    for (int trial = 0; trial < 20; ++trial) {
        QLattice a = rnd_lattice(), b = rnd_lattice(), c = rnd_lattice();
        CHECK(lattice_index(a, b) * lattice_index(b, c) == lattice_index(a, c));
    }
}

TEST_CASE("lattice sum, intersection, dual") {
    QLattice a = QLattice::from_rows(rows2({{2, 0}, {0, 1}}));
    QLattice b = QLattice::from_rows(rows2({{1, 0}, {0, 3}}));
    QLattice s = a + b;
    CHECK(s == QLattice::standard(2));
    QLattice i = a.intersect(b);
    CHECK(i == QLattice::from_rows(rows2({{2, 0}, {0, 3}})));
    CHECK(a.dual().dual() == a);
    CHECK(s.contains(a));
    CHECK(a.contains(i));
}

TEST_CASE("bareiss determinant and smith form") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> coeff(-8, 8);
    for (int trial = 0; trial < 25; ++trial) {
        long n = 2 + trial % 3;
        IntMat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m.at(i, j) = coeff(rng);
        CHECK(Rat(bareiss_det(m)) == det(to_rat(m)));

        SmithForm sf = smith_form(m);
        CHECK(sf.u * m * sf.v == sf.s);
        CHECK(abs_int(bareiss_det(sf.u)) == 1);
        CHECK(abs_int(bareiss_det(sf.v)) == 1);
        Int prod = 1;
        for (long i = 0; i < n; ++i) {
            prod *= sf.s.at(i, i);
            if (i + 1 < n && sf.s.at(i, i) != 0)
                CHECK(sf.s.at(i + 1, i + 1) % sf.s.at(i, i) == 0);
            for (long j = 0; j < n; ++j)
                if (i != j) CHECK(sf.s.at(i, j) == 0);
        }
        CHECK(prod == abs_int(bareiss_det(m)));
    }
}

TEST_CASE("charpoly by interpolation") {
    IntMat m(2, 2);
    m.at(0, 0) = 0; m.at(0, 1) = -9;
    m.at(1, 0) = 1; m.at(1, 1) = -1;
    IntPoly cp = charpoly(m);
    CHECK(cp == IntPoly{9, 1, 1});
}

TEST_CASE("kernel mod p^N") {
    // A = diag(3, 1) mod 27: kernel = 9Z x 27Z
    IntMat a(2, 2);
    a.at(0, 0) = 3; a.at(1, 1) = 1;
    IntMat k = kernel_mod(a, Int(27));
    QLattice kl = QLattice::from_rows(to_rat(k));
    CHECK(kl == QLattice::from_rows(rows2({{9, 0}, {0, 27}})));
}

TEST_CASE("sturm counting and isolation") {
    // (x^2-2)(x^2-5) has 4 real roots
    QPoly f{Rat(10), Rat(0), Rat(-7), Rat(0), Rat(1)};
    CHECK(sturm_count_all(f) == 4);
    CHECK(sturm_count_open(f, Rat(-3), Rat(0)) == 2);
    CHECK(sturm_count_open(f, Rat(0), Rat(3)) == 2);
    auto roots = isolate_real_roots(f);
    REQUIRE(roots.size() == 4);
    for (auto& [lo, hi] : roots) CHECK(sturm_count_open(f, lo, hi) == 1);

    // rational endpoint hitting a root: roots of x^2-1 in (1-eps, anything) vs at 1
    QPoly g{Rat(-1), Rat(0), Rat(1)};
    CHECK(sturm_count_open(g, Rat(-1), Rat(1)) == 0);
    CHECK(sturm_count_open(g, Rat(-2), Rat(2)) == 2);
}

TEST_CASE("sign evaluation in Z[sqrt(q)]") {
    // x - 2*sqrt(3) at x = u + v sqrt(3)
    QPoly f{Rat(0), Rat(1)};
    CHECK(sign_at_quadratic(f, Rat(4), Rat(-1), Int(3)) > 0);  // 4 - sqrt3 > 0
    CHECK(sign_at_quadratic(f, Rat(1), Rat(-1), Int(3)) < 0);  // 1 - sqrt3 < 0
    CHECK(sign_at_quadratic(QPoly{Rat(-12), Rat(0), Rat(1)}, Rat(0), Rat(2), Int(3)) == 0);
    // roots of x^2+x-3 lie in (-2sqrt3, 2sqrt3)
    QPoly hp{Rat(-3), Rat(1), Rat(1)};
    CHECK(sturm_count_open_quadratic(hp, Rat(0), Rat(-2), Rat(0), Rat(2), Int(3)) == 2);
}

TEST_CASE("field arithmetic in Q[x]/(h)") {
    Field k(IntPoly{9, 3, 3, 1, 1});
    FieldElem pi = k.gen();
    FieldElem ipi = k.inv(pi);
    CHECK(k.mul(pi, ipi) == k.one());
    // 3/pi = -(pi^3+pi^2+3pi+3)/3
    FieldElem v = k.smul(Rat(3), ipi);
    FieldElem expect = k.smul(Rat(-1, 3), FieldElem{Rat(3), Rat(3), Rat(1), Rat(1)});
    CHECK(v == expect);
    // trace of pi = -1 (coefficient), norm = 9
    CHECK(k.trace(pi) == Rat(-1));
    CHECK(k.norm(pi) == Rat(9));
    CHECK(k.charpoly_elem(pi) == k.h());
    // minpoly of pi + 3/pi is the real counterpart x^2+x-3
    FieldElem t = k.add(pi, v);
    CHECK(k.minpoly(t) == QPoly{Rat(-3), Rat(1), Rat(1)});
}

TEST_CASE("real counterpart recursion") {
    CHECK(real_counterpart(IntPoly{9, 3, 3, 1, 1}, Int(3)) == IntPoly{-3, 1, 1});
    CHECK(real_counterpart(IntPoly{3, -1, 1}, Int(3)) == IntPoly{-1, 1});
    CHECK(is_q_symmetric(IntPoly{9, 3, 3, 1, 1}, Int(3)));
    // x^2-4x+3 = (x-1)(x-3) is 3-symmetric (roots swap under b -> 3/b)
    CHECK(is_q_symmetric(IntPoly{3, -4, 1}, Int(3)));
    CHECK(!is_q_symmetric(IntPoly{1, 1, 1}, Int(3)));
}

TEST_CASE("CM field conjugation") {
    CMField cm(IntPoly{9, 3, 3, 1, 1}, Int(3), 1);
    const Field& k = cm.field();
    FieldElem pi = cm.pi();
    CHECK(cm.conj(pi) == cm.v_elem());
    CHECK(cm.conj(cm.conj(pi)) == pi);
    FieldElem t = cm.rel_trace(pi);
    CHECK(cm.is_conj_fixed(t));
    auto tc = cm.to_real_coords(t);
    CHECK(tc == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(cm.from_real_coords(tc) == t);
    CHECK(cm.h_plus() == IntPoly{-3, 1, 1});
    // rel norm of pi is q
    CHECK(k.is_zero(k.sub(cm.rel_norm(pi), k.from_rat(Rat(3)))));
}
