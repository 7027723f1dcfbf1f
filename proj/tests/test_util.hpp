#pragma once

#include <random>
#include <vector>

#include "psalg/algebra.hpp"

namespace psalg::testutil {

inline AlgebraPtr algebra(std::initializer_list<std::pair<const char*, Parity>> gens) {
    std::vector<Generator> v;
    for (const auto& [name, p] : gens) v.push_back({name, p});
    return Algebra::make(std::move(v));
}

// Mixed k[x1..xn | y1..ym].
inline AlgebraPtr poly_super(int n, int m) {
    std::vector<Generator> v;
    for (int i = 1; i <= n; ++i) v.push_back({"x" + std::to_string(i), Parity::Even});
    for (int j = 1; j <= m; ++j) v.push_back({"y" + std::to_string(j), Parity::Odd});
    return Algebra::make(std::move(v));
}

inline Monomial random_monomial(const Algebra& alg, unsigned max_degree, std::mt19937& rng) {
    Monomial m(alg.size());
    std::uniform_int_distribution<unsigned> du(0, max_degree);
    unsigned budget = du(rng);
    std::uniform_int_distribution<size_t> dg(0, alg.size() - 1);
    for (unsigned k = 0; k < budget; ++k) {
        size_t i = dg(rng);
        if (is_odd(alg.gen(i).parity) && m.exp(i) >= 1) continue;
        m = m.with_exp(i, m.exp(i) + 1);
    }
    return m;
}

inline Poly random_poly(const AlgebraPtr& alg, unsigned max_degree, unsigned terms,
                        std::mt19937& rng) {
    Poly p = Poly::zero(alg);
    std::uniform_int_distribution<long> dc(-4, 4);
    for (unsigned t = 0; t < terms; ++t) {
        long c = dc(rng);
        if (c == 0) c = 1;
        p = p + Poly::monomial(alg, random_monomial(*alg, max_degree, rng), Rational(c));
    }
    return p;
}

// Homogeneous of the requested parity (may come out zero).
inline Poly random_homog(const AlgebraPtr& alg, Parity parity, unsigned max_degree, unsigned terms,
                         std::mt19937& rng) {
    Poly p = Poly::zero(alg);
    std::uniform_int_distribution<long> dc(-4, 4);
    unsigned tries = 0;
    unsigned got = 0;
    while (got < terms && tries < 50 * terms) {
        ++tries;
        Monomial m = random_monomial(*alg, max_degree, rng);
        if (m.parity(*alg) != parity) continue;
        long c = dc(rng);
        if (c == 0) c = 1;
        p = p + Poly::monomial(alg, m, Rational(c));
        ++got;
    }
    return p;
}

}  // namespace psalg::testutil
