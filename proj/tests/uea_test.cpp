#include <doctest.h>

#include <random>
#include <set>

#include "psalg/uea.hpp"
#include "test_util.hpp"

using namespace psalg;
using testutil::algebra;

namespace {

Poly gen(const AlgebraPtr& a, const char* name) { return Poly::generator(a, a->index_of(name)); }

NCPoly msym(const AlgebraPtr& a, const char* name) {
    return NCPoly::symbol(a, SymKind::M, a->index_of(name));
}
NCPoly hsym(const AlgebraPtr& a, const char* name) {
    return NCPoly::symbol(a, SymKind::H, a->index_of(name));
}

// [u,v]_gr for parity-homogeneous u, v given as words of symbols.
NCPoly gr(const NCPoly& u, const NCPoly& v) {
    const AlgebraPtr& alg = u.algebra();
    Parity pu = word_parity(u.terms().begin()->first, *alg);
    Parity pv = word_parity(v.terms().begin()->first, *alg);
    bool both_odd = is_odd(pu) && is_odd(pv);
    return both_odd ? u * v + v * u : u * v - v * u;
}

Word random_word(const Algebra& alg, size_t len, std::mt19937& rng) {
    std::uniform_int_distribution<int> dk(0, 1);
    std::uniform_int_distribution<uint32_t> dg(0, static_cast<uint32_t>(alg.size() - 1));
    Word w;
    for (size_t i = 0; i < len; ++i)
        w.push_back(Sym{dk(rng) ? SymKind::H : SymKind::M, dg(rng)});
    return w;
}

}  // namespace

TEST_CASE("embed") {
    auto A = testutil::poly_super(2, 0);
    auto x1 = gen(A, "x1"), x2 = gen(A, "x2");

    SUBCASE("m is multiplicative on monomials") {
        auto w = embed(x1 * x2, SymKind::M);
        CHECK(w == msym(A, "x1") * msym(A, "x2"));
    }

    SUBCASE("h of a scalar is zero") {
        CHECK(embed(Poly::constant(A, 1), SymKind::H).is_zero());
    }

    SUBCASE("h(xy) = m(x)h(y) + m(y)h(x) for even generators") {
        auto w = embed(x1 * x2, SymKind::H);
        CHECK(w == msym(A, "x1") * hsym(A, "x2") + msym(A, "x2") * hsym(A, "x1"));
    }
}

TEST_CASE("normalize against the relation families") {
    SUBCASE("trivial bracket, even generator: H M -> M H") {
        UEARules rules(trivial_bracket(testutil::poly_super(1, 0)));
        auto A = rules.algebra();
        auto r = normalize(rules, hsym(A, "x1") * msym(A, "x1"));
        CHECK(r == msym(A, "x1") * hsym(A, "x1"));
    }

    SUBCASE("P1: H_{x1} M_{y1} -> -M_{y1} H_{x1} + 1") {
        UEARules rules(symplectic_super(1));
        auto A = rules.algebra();
        auto r = normalize(rules, hsym(A, "x1") * msym(A, "y1"));
        CHECK(r == -(msym(A, "y1") * hsym(A, "x1")) + NCPoly::constant(A, 1));
        CHECK(ncpoly_str(r) == "-1 m(y1)h(x1) + 1");
    }

    SUBCASE("P1: odd h squares vanish through h_{{x,x}}") {
        UEARules rules(symplectic_super(1));
        auto A = rules.algebra();
        CHECK(normalize(rules, hsym(A, "x1") * hsym(A, "x1")).is_zero());
        CHECK(normalize(rules, msym(A, "x1") * msym(A, "x1")).is_zero());
    }

    SUBCASE("nonzero odd diagonal: 2 h_y^2 = h_{{y,y}}") {
        // {y,y} = x on k[x|y] (valid: Jacobi is immediate since {x,-} = 0)
        auto A = testutil::poly_super(1, 1);
        BracketTable::Builder b(A);
        b.set("y1", "y1", gen(A, "x1"));
        UEARules rules(std::move(b).finish());
        auto r = normalize(rules, hsym(A, "y1") * hsym(A, "y1"));
        CHECK(r == embed(gen(A, "x1"), SymKind::H).scaled(rat(1, 2)));
    }
}

TEST_CASE("normal-form soundness: both sides of every defining relation agree") {
    auto check_table = [](const BracketTable& T) {
        UEARules rules(T);
        auto A = rules.algebra();
        for (size_t a = 0; a < A->size(); ++a)
            for (size_t b = 0; b < A->size(); ++b) {
                auto Ma = NCPoly::symbol(A, SymKind::M, a);
                auto Mb = NCPoly::symbol(A, SymKind::M, b);
                auto Ha = NCPoly::symbol(A, SymKind::H, a);
                auto Hb = NCPoly::symbol(A, SymKind::H, b);
                auto ga = Poly::generator(A, a), gb = Poly::generator(A, b);
                bool both_odd = is_odd(A->gen(a).parity) && is_odd(A->gen(b).parity);
                Rational s = both_odd ? -1 : 1;

                auto r1 = Ma * Mb - embed(ga * gb, SymKind::M);
                auto r2 = Ha * Mb - (Mb * Ha).scaled(s) - embed(T.entry(a, b), SymKind::M);
                auto r4 = Ha * Hb - (Hb * Ha).scaled(s) - embed(T.entry(a, b), SymKind::H);
                auto r5 = Ma * Hb + (Mb * Ha).scaled(s) - embed(ga * gb, SymKind::H);
                CHECK(normalize(rules, r1).is_zero());
                CHECK(normalize(rules, r2).is_zero());
                CHECK(normalize(rules, r4).is_zero());
                CHECK(normalize(rules, r5).is_zero());
            }
    };
    check_table(symplectic_super(2));
    std::vector<std::vector<Rational>> lambda{{0, 2}, {-2, 0}}, mu{{0}}, xi{{1}, {rat(1, 2)}};
    check_table(skew_super_bracket(lambda, mu, xi));
}

TEST_CASE("supercommutator identities after normalization") {
    auto T = symplectic_super(2);
    UEARules rules(T);
    auto A = rules.algebra();
    for (size_t a = 0; a < A->size(); ++a)
        for (size_t b = 0; b < A->size(); ++b) {
            auto Ma = NCPoly::symbol(A, SymKind::M, a);
            auto Mb = NCPoly::symbol(A, SymKind::M, b);
            auto Ha = NCPoly::symbol(A, SymKind::H, a);
            auto Hb = NCPoly::symbol(A, SymKind::H, b);
            CHECK(normalize(rules, gr(Ma, Mb)).is_zero());
            CHECK(normalize(rules, gr(Ha, Mb)) ==
                  normalize(rules, embed(T.entry(a, b), SymKind::M)));
            CHECK(normalize(rules, gr(Ha, Hb)) ==
                  normalize(rules, embed(T.entry(a, b), SymKind::H)));
        }
}

TEST_CASE("termination and confluence on random words") {
    UEARules rules(symplectic_super(2));
    auto A = rules.algebra();
    std::mt19937 gen_rng(123), s1(500), s2(9001);
    for (int it = 0; it < 120; ++it) {
        Word w = random_word(*A, 1 + it % 5, gen_rng);
        NCPoly p = NCPoly::from_word(A, w);
        NCPoly det = normalize(rules, p);
        for (const auto& [nw, c] : det.terms()) CHECK(is_normal_word(nw, *A));
        CHECK(normalize_random(rules, p, s1) == det);
        CHECK(normalize_random(rules, p, s2) == det);
    }
}

TEST_CASE("injectivity of m on monomials") {
    UEARules rules(symplectic_super(2));
    auto A = rules.algebra();
    std::mt19937 rng(321);
    std::set<Word> seen;
    std::set<Monomial> sources;
    for (int it = 0; it < 40; ++it) {
        Monomial m = testutil::random_monomial(*A, 3, rng);
        if (!sources.insert(m).second) continue;
        auto nf = normalize(rules, embed(Poly::monomial(A, m, 1), SymKind::M));
        REQUIRE(nf.terms().size() == 1);
        CHECK(nf.terms().begin()->second == 1);
        CHECK(seen.insert(nf.terms().begin()->first).second);
    }
}

TEST_CASE("pbw basis enumeration") {
    SUBCASE("P1 with caps 1: 16 elements") {
        auto A = symplectic_super(1).algebra();
        CHECK(pbw_basis(A, 1, 1).size() == 16);
        CHECK(pbw_basis_total(A, 4).size() == 16);
    }

    SUBCASE("k[x] with caps 1") {
        auto A = testutil::poly_super(1, 0);
        auto basis = pbw_basis(A, 1, 1);
        REQUIRE(basis.size() == 4);
        CHECK(word_str(pbw_to_word(basis[0]), *A, SymStyle::MH) == "1");
        CHECK(word_str(pbw_to_word(basis[1]), *A, SymStyle::MH) == "m(x1)");
        CHECK(word_str(pbw_to_word(basis[2]), *A, SymStyle::MH) == "h(x1)");
        CHECK(word_str(pbw_to_word(basis[3]), *A, SymStyle::MH) == "m(x1)h(x1)");
    }

    SUBCASE("k[x|y] with caps 2: 36 elements") {
        auto A = testutil::poly_super(1, 1);
        CHECK(pbw_basis(A, 2, 2).size() == 36);
    }
}

TEST_CASE("weyl normalization") {
    WeylRules c2(0, 2);
    auto A = c2.algebra();
    auto X = [&](size_t i) { return NCPoly::symbol(A, SymKind::M, i); };
    auto Y = [&](size_t i) { return NCPoly::symbol(A, SymKind::H, i); };

    // C_2, both odd: Y1 X1 -> 1 - X1 Y1
    CHECK(normalize(c2, Y(0) * X(0)) == NCPoly::constant(A, 1) - X(0) * Y(0));
    // odd squares
    CHECK(normalize(c2, X(0) * X(0)).is_zero());
    // delta_ij = 0 case
    CHECK(normalize(c2, Y(1) * X(0)) == -(X(0) * Y(1)));

    // even Weyl algebra A_1 for contrast: Y1 X1 -> X1 Y1 - 1
    WeylRules a1(1, 0);
    auto B = a1.algebra();
    CHECK(normalize(a1, NCPoly::symbol(B, SymKind::H, 0) * NCPoly::symbol(B, SymKind::M, 0)) ==
          NCPoly::symbol(B, SymKind::M, 0) * NCPoly::symbol(B, SymKind::H, 0) -
              NCPoly::constant(B, 1));

    // all defining relations normalize to zero inside C_{p|q} itself
    WeylRules c12(1, 2);
    for (const auto& r : c12.defining_relations())
        CHECK(normalize(c12, r).is_zero());
}

TEST_CASE("symplectic isomorphism with the Weyl superalgebra") {
    SUBCASE("n=1, full degree") {
        auto rep = symplectic_iso_check(1, 4);
        CHECK(rep.pass);
        // 2n(4n-1) = 6 relations and 16 basis elements each side
        CHECK(rep.info[0] == "relations checked: 6");
        CHECK(rep.info[1] == "basis count both sides: 16");
    }

    SUBCASE("n=2 at degree 2") {
        auto rep = symplectic_iso_check(2, 2);
        CHECK(rep.pass);
        CHECK(rep.info[0] == "relations checked: 28");  // 2n(4n-1) = 28
    }

    SUBCASE("corrupted bracket breaks a delta relation") {
        auto A = symplectic_super(1).algebra();
        UEARules rules(trivial_bracket(A));  // {x1,y1} corrupted to 0
        // [h_{x1}, m_{y1}]_gr - 1 can no longer map to zero
        auto r = gr(hsym(A, "x1"), msym(A, "y1")) - NCPoly::constant(A, 1);
        CHECK_FALSE(normalize(rules, r).is_zero());
    }
}

TEST_CASE("presentations") {
    std::vector<std::vector<Rational>> lambda{{0, 1}, {-1, 0}};
    auto C = StructureConstants::from_skew(lambda);

    SUBCASE("quadratic relations match the skew display") {
        auto P = quadratic_bracket(C);
        auto A = P.algebra();
        auto rels = present_quadratic(A, C);
        CHECK(rels.size() == 6);  // n(2n-1)
        auto m1 = msym(A, "x1"), m2 = msym(A, "x2"), h1 = hsym(A, "x1"), h2 = hsym(A, "x2");
        // h1 h2 - h2 h1 - lambda12 (m1 h2 + m2 h1)
        auto want = h1 * h2 - h2 * h1 - (m1 * h2 + m2 * h1);
        CHECK(rels.back() == want);
        // every relation normalizes to zero in U(P)
        UEARules rules(P);
        for (const auto& r : rels) CHECK(normalize(rules, r).is_zero());
    }

    SUBCASE("exterior relations match the skew display modulo the m-m family") {
        auto D = dual_bracket(C, "th");
        auto L = D.algebra();
        auto rels = present_exterior(L, C);
        CHECK(rels.size() == 10);  // n(2n+1)
        auto m1 = msym(L, "th1"), m2 = msym(L, "th2"), h1 = hsym(L, "th1"), h2 = hsym(L, "th2");
        // family 2 at (k,l)=(1,2) differs from the display
        // [h1,m2]_gr - lambda12 m2 m1 by half the m-m anticommutator
        auto emitted = h1 * m2 + m2 * h1 - (m2 * m1 - m1 * m2).scaled(rat(1, 2));
        auto display = h1 * m2 + m2 * h1 - m2 * m1;
        CHECK(emitted == display + (m1 * m2 + m2 * m1).scaled(rat(1, 2)));
        bool found = false;
        for (const auto& r : rels) found = found || r == emitted;
        CHECK(found);
        UEARules rules(D);
        for (const auto& r : rels) CHECK(normalize(rules, r).is_zero());
    }

    SUBCASE("zero constants reduce to plain (anti)commutators") {
        auto C0 = StructureConstants::from_skew({{Rational(0)}});
        auto A = quadratic_bracket(C0).algebra();
        auto rels = present_quadratic(A, C0);
        REQUIRE(rels.size() == 1);
        CHECK(rels[0] == hsym(A, "x1") * msym(A, "x1") - msym(A, "x1") * hsym(A, "x1"));
        auto L = dual_bracket(C0).algebra();
        auto erels = present_exterior(L, C0);
        REQUIRE(erels.size() == 3);
        CHECK(erels[0] == (msym(L, "th1") * msym(L, "th1")).scaled(2));
    }
}

TEST_CASE("opposite algebra map") {
    auto A = symplectic_super(1).algebra();
    CHECK(opposite_uea(hsym(A, "x1")) == -hsym(A, "x1"));
    CHECK(opposite_uea(msym(A, "x1")) == msym(A, "x1"));

    std::mt19937 rng(51);
    for (int it = 0; it < 30; ++it) {
        Word w = random_word(*A, 1 + it % 5, rng);
        NCPoly p = NCPoly::from_word(A, w, rat(it % 7 - 3 == 0 ? 1 : it % 7 - 3));
        CHECK(opposite_uea(opposite_uea(p)) == p);
    }
}

TEST_CASE("functoriality") {
    auto T = symplectic_super(1);
    auto A = T.algebra();

    SUBCASE("identity map") {
        std::vector<Poly> id{gen(A, "x1"), gen(A, "y1")};
        auto p = hsym(A, "x1") * msym(A, "y1") + NCPoly::constant(A, rat(2, 3));
        CHECK(uea_functor(T, T, id, p) == p);
    }

    SUBCASE("swap x,y is a super Poisson automorphism of P1") {
        std::vector<Poly> swap{gen(A, "y1"), gen(A, "x1")};
        auto img = uea_functor(T, T, swap, msym(A, "x1"));
        CHECK(img == msym(A, "y1"));
    }

    SUBCASE("bracket-incompatible maps are rejected") {
        std::vector<Poly> bad{gen(A, "x1").scaled(2), gen(A, "y1")};
        CHECK_THROWS_AS(uea_functor(T, T, bad, msym(A, "x1")), not_poisson_error);
    }

    SUBCASE("parity-violating maps are rejected") {
        auto B = testutil::poly_super(1, 1);
        auto TB = trivial_bracket(B);
        std::vector<Poly> bad{gen(B, "x1"), gen(B, "y1")};
        CHECK_THROWS_AS(uea_functor(T, TB, bad, msym(A, "x1")), not_poisson_error);
    }
}

TEST_CASE("printing") {
    auto A = symplectic_super(1).algebra();
    auto p = msym(A, "x1") * msym(A, "x1") * hsym(A, "y1") - NCPoly::constant(A, rat(1, 2));
    CHECK(ncpoly_str(p) == "1 m(x1)^2h(y1) + -1/2");
    WeylRules c2(0, 2);
    auto B = c2.algebra();
    CHECK(ncpoly_str(NCPoly::symbol(B, SymKind::H, 1) * NCPoly::symbol(B, SymKind::M, 0),
                     SymStyle::Weyl) == "1 Y2X1");
}
