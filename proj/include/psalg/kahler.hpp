#pragma once

// Even Kaehler superdifferentials over a polynomial superalgebra, stored
// directly in the free basis {dg : g generator}; the quotient relations
// d(fg) = f dg + (-1)^{|f||g|} g df live inside d_ev. Includes the
// Lie-Rinehart bracket with anchor rho(df) = {f,-} and the semidirect-product
// bracket on A (+) Omega.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "psalg/poisson.hpp"

namespace psalg {

// Sum of f * dg terms: key is (coefficient monomial, generator index of dg).
class KahlerElement {
  public:
    static KahlerElement zero(AlgebraPtr a);
    static KahlerElement differential(AlgebraPtr a, size_t gen);  // dg

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<std::pair<Monomial, size_t>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    KahlerElement operator+(const KahlerElement& o) const;
    KahlerElement operator-(const KahlerElement& o) const;
    KahlerElement scaled(const Rational& c) const;
    // Left module action of A.
    KahlerElement left_mul(const Poly& p) const;
    bool operator==(const KahlerElement& o) const;

    // Parity of f*dg is |f|+|g|; throws on mixed.
    Parity parity_or_throw() const;

    std::string str() const;

    void add_term(const Monomial& coeff, size_t gen, const Rational& c);

  private:
    explicit KahlerElement(AlgebraPtr a) : alg_(std::move(a)) {}
    AlgebraPtr alg_;
    std::map<std::pair<Monomial, size_t>, Rational> terms_;
};

KahlerElement d_ev(const Poly& p);

// [x df, y dg] = (-1)^{|y||f|} xy d{f,g} + x{f,y} dg - (-1)^{|xf||yg|} y{g,x} df
KahlerElement lr_bracket(const BracketTable& T, const KahlerElement& u, const KahlerElement& v);

// rho(x df)(p) = x {f, p}
Poly apply_anchor(const BracketTable& T, const KahlerElement& u, const Poly& p);
// The same action packaged as a checkable superderivation (u homogeneous).
Derivation anchor(const BracketTable& T, const KahlerElement& u);

// Element a + x of the semidirect product A x| Omega, A with trivial bracket.
struct SemidirectElement {
    Poly a;
    KahlerElement u;
};

// [a+x, b+y] = ([a,b] + rho(x)(b) - (-1)^{|a||y|} rho(y)(a)) + [x,y]
SemidirectElement semidirect_bracket(const BracketTable& T, const SemidirectElement& lhs,
                                     const SemidirectElement& rhs);

// {dg : g generator} as indices, in generator order.
std::vector<size_t> kahler_basis(const AlgebraPtr& alg);
// Linear-independence witness D_i(g_j) = delta_ij g_i.
Derivation witness_derivation(const AlgebraPtr& alg, size_t i);

// Monomials of S_R(Omega) with per-exponent caps: R-exponents <= cap_r,
// Omega-exponents <= cap_omega (odd generators capped at 1 on both sides).
unsigned long supersym_monomial_count(const AlgebraPtr& alg, unsigned cap_r, unsigned cap_omega);

}  // namespace psalg
