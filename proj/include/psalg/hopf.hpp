#pragma once

// Hopf superalgebra structure on U(A) for Poisson Hopf superalgebras:
// the tensor-square enveloping algebra with the Def-5.3 bracket, the maps
//   Delta_U m = (m (x) m) Delta,  Delta_U h = (m (x) h + h (x) m) Delta,
//   eps_U m = eps, eps_U h = 0,   S_U m = m S, S_U h = h S,
// and axiom verification on PBW monomials.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "psalg/uea.hpp"

namespace psalg {

// Delta, eps, S on generators; extended multiplicatively (Delta, eps) and
// multiplicatively-with-signs (S; supercommutativity makes the
// anti-homomorphism extension plain multiplication).
struct HopfData {
    AlgebraPtr alg;
    std::vector<Tensor2> delta;
    std::vector<Rational> counit;
    std::vector<Poly> antipode;
};

// Primitive coproduct, zero counit, S = -id: the Poisson supersymmetric
// superalgebra PS(L) structure.
HopfData ps_hopf(const AlgebraPtr& alg);

// A (x) A as a supercommutative algebra on a doubled generator list: left
// copy "g.1" first, right copy "g.2" after; the Koszul sign of the canonical
// sort reproduces the Def-1.7 product.
AlgebraPtr doubled_algebra(const AlgebraPtr& alg);
Poly tensor_to_doubled(const Tensor2& t, const AlgebraPtr& doubled);

// {a(x)a', b(x)b'} = (-1)^{|a'||b|}({a,b}(x)a'b' + ab(x){a',b'}) on generators.
BracketTable bracket_tensor_square(const BracketTable& T);

// Element of U(A) (x) U(A); components are words, normalized on demand.
class TensorNC {
  public:
    static TensorNC zero(AlgebraPtr a);
    static TensorNC unit(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorNC operator+(const TensorNC& o) const;
    TensorNC operator-(const TensorNC& o) const;
    TensorNC scaled(const Rational& c) const;
    bool operator==(const TensorNC& o) const;

    void add_term(const Word& l, const Word& r, const Rational& c);
    std::string str(SymStyle style = SymStyle::MH) const;

  private:
    explicit TensorNC(AlgebraPtr a) : alg_(std::move(a)) {}
    AlgebraPtr alg_;
    std::map<std::pair<Word, Word>, Rational> terms_;
};

// (u1 (x) u2)(v1 (x) v2) = (-1)^{|u2||v1|} (u1 v1 (x) u2 v2)
TensorNC tensor_nc_mul(const TensorNC& u, const TensorNC& v);

// Validates the Poisson-Hopf hypotheses at construction: parity preservation,
// eps(odd) = 0, Delta a super Poisson homomorphism into the tensor-square
// bracket, eps and S Poisson (anti-)compatible on generator pairs. Throws
// not_poisson_error otherwise.
class HopfEngine {
  public:
    HopfEngine(HopfData data, BracketTable table);

    const HopfData& data() const { return data_; }
    const UEARules& rules() const { return rules_; }
    const AlgebraPtr& algebra() const { return data_.alg; }

    TensorNC coproduct(const NCPoly& p) const;  // components in PBW form
    Rational counit(const NCPoly& p) const;
    NCPoly antipode(const NCPoly& p) const;  // normalized

    Rational counit_poly(const Poly& p) const;  // eps_A extended
    Poly antipode_poly(const Poly& p) const;    // S_A extended

  private:
    TensorNC symbol_image(const Sym& s) const;
    TensorNC normalize_components(const TensorNC& t) const;

    HopfData data_;
    UEARules rules_;
    std::vector<TensorNC> m_image_, h_image_;
};

TensorNC uea_coproduct(const HopfData& H, const BracketTable& T, const NCPoly& p);
Rational uea_counit(const HopfData& H, const BracketTable& T, const NCPoly& p);
NCPoly uea_antipode(const HopfData& H, const BracketTable& T, const NCPoly& p);

// Coassociativity, counit laws, antipode law, and multiplicativity of the
// coproduct, on all PBW monomials of total degree <= degree.
CheckReport check_hopf_axioms(const HopfData& H, const BracketTable& T, unsigned degree);

// Example-5.9 correspondence U(V x| L) -> PS(L)^e, M_v <- v, H_x <- x:
// supercommutator identities on generators, primitivity of the images, and
// the basis bijection up to total degree `degree`.
CheckReport ps_phi_correspondence(const BracketTable& L_table, unsigned degree);

}  // namespace psalg
