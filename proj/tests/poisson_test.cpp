#include <doctest.h>

#include <random>

#include "psalg/poisson.hpp"
#include "test_util.hpp"

using namespace psalg;
using testutil::algebra;
using testutil::random_homog;
using testutil::random_poly;

namespace {

Poly gen(const AlgebraPtr& a, const char* name) { return Poly::generator(a, a->index_of(name)); }

std::vector<std::vector<Rational>> zeros(size_t r, size_t c) {
    return std::vector<std::vector<Rational>>(r, std::vector<Rational>(c, Rational(0)));
}

}  // namespace

TEST_CASE("Leibniz bracket on the symplectic superalgebra") {
    auto T = symplectic_super(1);
    auto A = T.algebra();
    auto x = gen(A, "x1"), y = gen(A, "y1");

    CHECK(T.bracket(x, y) == Poly::constant(A, 1));
    CHECK(T.bracket(Poly::constant(A, 1), x * y).is_zero());
    // {x, xy} = (-1)^{|x||x|} x{x,y} + {x,x}y = -x
    CHECK(T.bracket(x, x * y) == -x);
}

TEST_CASE("verify_poisson on the symplectic family") {
    for (int n = 1; n <= 3; ++n) {
        auto rep = verify_poisson(symplectic_super(n));
        CHECK(rep.pass);
    }
    CHECK(symplectic_super(2).entry(0, 3).is_zero());  // {x1, y2} = 0
    CHECK_THROWS_AS(symplectic_super(0), input_error);
}

TEST_CASE("trivial bracket passes") {
    auto rep = verify_poisson(trivial_bracket(testutil::poly_super(2, 2)));
    CHECK(rep.pass);
}

TEST_CASE("overridden antisymmetry is caught") {
    // For odd-odd pairs {x,y} = +{y,x}; an override to -1 must fail.
    auto A = algebra({{"x1", Parity::Odd}, {"y1", Parity::Odd}});
    BracketTable::Builder b(A);
    b.set(0, 1, Poly::constant(A, 1));
    b.set(1, 0, Poly::constant(A, -1));
    auto rep = verify_poisson(std::move(b).finish());
    CHECK_FALSE(rep.pass);
    CHECK(rep.kind == "antisymmetry");
}

TEST_CASE("incomplete table") {
    auto A = algebra({{"x1", Parity::Odd}, {"y1", Parity::Odd}});
    BracketTable::Builder b(A);
    b.set(0, 0, Poly::zero(A));
    auto T = std::move(b).finish(/*fill_zero=*/false);
    CHECK_THROWS_AS(T.entry(0, 1), incomplete_table_error);
    CHECK_THROWS_AS(T.bracket(gen(A, "x1"), gen(A, "y1")), incomplete_table_error);
}

TEST_CASE("entry parity is validated at construction") {
    auto A = algebra({{"x1", Parity::Odd}, {"y1", Parity::Odd}});
    BracketTable::Builder b(A);
    // |{x1,y1}| must be even; a single odd generator is not.
    CHECK_THROWS_AS(b.set(0, 1, gen(A, "x1")), parity_error);

    auto E = algebra({{"x", Parity::Even}});
    BracketTable::Builder be(E);
    CHECK_THROWS_AS(be.set(0, 0, gen(E, "x") * gen(E, "x")), parity_error);
}

TEST_CASE("odd diagonal defaults produce a warning") {
    auto T = symplectic_super(1);
    CHECK(T.warnings().size() == 2);  // x1 and y1 diagonals
}

TEST_CASE("quadratic and dual brackets from structure constants") {
    SUBCASE("skew-symmetric lambda") {
        auto lambda = zeros(2, 2);
        lambda[0][1] = 1;
        lambda[1][0] = -1;
        auto C = StructureConstants::from_skew(lambda);

        auto P = quadratic_bracket(C);
        auto A = P.algebra();
        CHECK(P.entry(0, 1) == gen(A, "x1") * gen(A, "x2"));
        CHECK(verify_poisson(P).pass);

        auto D = dual_bracket(C);
        auto L = D.algebra();
        // {th_k, th_l} = lambda_kl th_l th_k
        CHECK(D.entry(0, 1) == gen(L, "th2") * gen(L, "th1"));
        CHECK(verify_poisson(D).pass);
    }

    SUBCASE("zero constants give trivial brackets") {
        auto C = StructureConstants::from_skew(zeros(3, 3));
        auto D = dual_bracket(C);
        for (size_t k = 0; k < 3; ++k)
            for (size_t l = 0; l < 3; ++l) CHECK(D.entry(k, l).is_zero());
        CHECK(verify_poisson(D).pass);
    }

    SUBCASE("symmetry violations are rejected") {
        std::map<std::array<size_t, 4>, Rational> e;
        e[{0, 1, 0, 1}] = 1;  // missing the (k,l)-symmetric partner
        CHECK_THROWS_AS(StructureConstants(2, std::move(e)), invalid_constants_error);

        auto notskew = zeros(2, 2);
        notskew[0][1] = 1;
        CHECK_THROWS_AS(StructureConstants::from_skew(notskew), invalid_constants_error);
    }
}

TEST_CASE("2x2 matrix coordinate ring and its dual") {
    auto C = StructureConstants::matrix_2x2();
    auto P = quadratic_bracket(C);
    auto A = P.algebra();
    // reproduce the defining bracket
    CHECK(P.entry(0, 1) == gen(A, "x1") * gen(A, "x2"));
    CHECK(P.entry(0, 3) == (gen(A, "x2") * gen(A, "x3")).scaled(2));
    CHECK(P.entry(1, 2).is_zero());
    CHECK(verify_poisson(P).pass);

    auto D = dual_bracket(C);
    auto L = D.algebra();
    // induced bracket on Lambda(alpha,beta,gamma,delta):
    // {th1,th2} = th2 th1, {th2,th3} = 2 th4 th1, {th1,th4} = 0
    CHECK(D.entry(0, 1) == gen(L, "th2") * gen(L, "th1"));
    CHECK(D.entry(1, 2) == (gen(L, "th4") * gen(L, "th1")).scaled(2));
    CHECK(D.entry(0, 3).is_zero());
    CHECK(D.entry(1, 3) == gen(L, "th4") * gen(L, "th2"));
    CHECK(D.entry(2, 3) == gen(L, "th4") * gen(L, "th3"));
    CHECK(verify_poisson(D).pass);
}

TEST_CASE("skew super bracket family") {
    SUBCASE("all zero matrices") {
        auto T = skew_super_bracket(zeros(1, 1), zeros(1, 1), zeros(1, 1));
        CHECK(verify_poisson(T).pass);
        CHECK(T.entry(0, 1).is_zero());
    }

    SUBCASE("n=m=1 with xi=1") {
        auto xi = zeros(1, 1);
        xi[0][0] = 1;
        auto T = skew_super_bracket(zeros(1, 1), zeros(1, 1), xi);
        auto A = T.algebra();
        CHECK(T.entry(0, 1) == gen(A, "x1") * gen(A, "y1"));
        CHECK(verify_poisson(T).pass);
    }

    SUBCASE("n=2, m=1, lambda12=2") {
        auto lambda = zeros(2, 2);
        lambda[0][1] = 2;
        lambda[1][0] = -2;
        auto T = skew_super_bracket(lambda, zeros(1, 1), zeros(2, 1));
        auto A = T.algebra();
        CHECK(T.entry(0, 1) == (gen(A, "x1") * gen(A, "x2")).scaled(2));
        CHECK(verify_poisson(T).pass);
    }

    SUBCASE("non-skew input rejected") {
        auto bad = zeros(2, 2);
        bad[0][1] = 1;
        CHECK_THROWS_AS(skew_super_bracket(bad, zeros(1, 1), zeros(2, 1)),
                        invalid_constants_error);
    }
}

TEST_CASE("bracket properties") {
    auto T = symplectic_super(2);
    auto A = T.algebra();
    std::mt19937 rng(77);

    SUBCASE("super antisymmetry on homogeneous polynomials") {
        for (int it = 0; it < 30; ++it) {
            Parity pp = (it % 2) ? Parity::Odd : Parity::Even;
            Parity qp = (it % 3) ? Parity::Odd : Parity::Even;
            auto p = random_homog(A, pp, 3, 2, rng);
            auto q = random_homog(A, qp, 3, 2, rng);
            bool both_odd = is_odd(pp) && is_odd(qp);
            auto rhs = T.bracket(q, p);
            CHECK(T.bracket(p, q) == (both_odd ? rhs : -rhs));
        }
    }

    SUBCASE("{p,-} is a superderivation of parity |p|") {
        for (int it = 0; it < 20; ++it) {
            Parity pp = (it % 2) ? Parity::Odd : Parity::Even;
            auto p = random_homog(A, pp, 2, 2, rng);
            if (p.is_zero()) continue;
            auto d = T.hamiltonian(p);
            CHECK(d.parity() == pp);
            auto q = random_poly(A, 3, 3, rng);
            CHECK(d.apply(q) == T.bracket(p, q));
            // Leibniz against apply_derivation's law, even first factor
            auto r = random_homog(A, Parity::Even, 2, 2, rng);
            auto s = random_poly(A, 2, 2, rng);
            CHECK(T.bracket(p, r * s) == T.bracket(p, r) * s + r * T.bracket(p, s));
        }
    }

    SUBCASE("Jacobi extends to monomials up to degree 4") {
        // The Leibniz extension preserves Jacobi; random sweep at small degree.
        for (int it = 0; it < 20; ++it) {
            auto p = Poly::monomial(A, testutil::random_monomial(*A, 4, rng), 1);
            auto q = Poly::monomial(A, testutil::random_monomial(*A, 4, rng), 1);
            auto r = Poly::monomial(A, testutil::random_monomial(*A, 4, rng), 1);
            if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
            bool pq = is_odd(p.parity_or_throw()) && is_odd(q.parity_or_throw());
            bool pr = is_odd(p.parity_or_throw()) && is_odd(r.parity_or_throw());
            bool qr = is_odd(q.parity_or_throw()) && is_odd(r.parity_or_throw());
            auto t1 = T.bracket(p, T.bracket(q, r));
            auto t2 = T.bracket(q, T.bracket(r, p));
            auto t3 = T.bracket(r, T.bracket(p, q));
            auto lhs = (pr ? -t1 : t1) + (pq ? -t2 : t2) + (qr ? -t3 : t3);
            CHECK(lhs.is_zero());
        }
    }
}

TEST_CASE("entrywise comparison across generator orders") {
    auto xi = zeros(1, 1);
    xi[0][0] = rat(3, 2);
    auto T = skew_super_bracket(zeros(1, 1), zeros(1, 1), xi);

    // same data on the reversed algebra
    auto B = algebra({{"y1", Parity::Odd}, {"x1", Parity::Even}});
    BracketTable::Builder bb(B);
    bb.set(B->index_of("x1"), B->index_of("y1"),
           (gen(B, "x1") * gen(B, "y1")).scaled(rat(3, 2)));
    auto T2 = std::move(bb).finish();
    CHECK(T.entries_equal(T2));
    CHECK(T2.entries_equal(T));
}
