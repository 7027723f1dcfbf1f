#pragma once

// Universal enveloping algebras as rewriting systems: the free algebra on
// m/h symbols, PBW normalization, basis enumeration, quadratic presentations,
// Weyl superalgebras, opposite algebras, and functoriality.
//
// Normal-form target: words M_{g1}^{r1}..M_{gk}^{rk} H_{g1}^{s1}..H_{gk}^{sk}
// with generators in index order and odd exponents capped at 1. Every rewrite
// strictly decreases (h-degree, length, inversion count), so normalization
// terminates; confluence is a tested property.

#include <compare>
#include <random>
#include <string>
#include <vector>

#include "psalg/poisson.hpp"

namespace psalg {

enum class SymKind : uint8_t { M = 0, H = 1 };

struct Sym {
    SymKind kind;
    uint32_t gen;
    auto operator<=>(const Sym&) const = default;
};

using Word = std::vector<Sym>;

class NCPoly {
  public:
    static NCPoly zero(AlgebraPtr a);
    static NCPoly constant(AlgebraPtr a, const Rational& c);
    static NCPoly symbol(AlgebraPtr a, SymKind k, size_t gen);
    static NCPoly from_word(AlgebraPtr a, Word w, const Rational& c = 1);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;  // concatenation, bilinear
    NCPoly scaled(const Rational& c) const;
    bool operator==(const NCPoly& o) const;

    void add_term(const Word& w, const Rational& c);

  private:
    explicit NCPoly(AlgebraPtr a) : alg_(std::move(a)) {}
    AlgebraPtr alg_;
    std::map<Word, Rational> terms_;
};

Parity sym_parity(const Sym& s, const Algebra& alg);
Parity word_parity(const Word& w, const Algebra& alg);
unsigned h_degree(const Word& w);

// m is multiplicative, h is expanded by h(xy) = m(x)h(y) + (-1)^{|x||y|} m(y)h(x)
// down to single generators; h of a scalar is 0 (h_1 = 0 follows from the
// m_x h_y + (-1)^{|x||y|} m_y h_x - h_{xy} relation at x = y = 1).
NCPoly embed(const Poly& p, SymKind kind);

// Oriented rewriting toward the PBW normal form. The two concrete systems
// share the engine and differ only in the correction terms.
class RewriteRules {
  public:
    virtual ~RewriteRules() = default;
    const AlgebraPtr& algebra() const { return alg_; }

    // Replacement polynomial for the adjacent symbols s t, or nullopt when
    // the pair is already normal.
    std::optional<NCPoly> rewrite_pair(const Sym& s, const Sym& t) const;

  protected:
    explicit RewriteRules(AlgebraPtr alg) : alg_(std::move(alg)) {}
    virtual NCPoly hm_correction(uint32_t hgen, uint32_t mgen) const = 0;
    virtual NCPoly hh_correction(uint32_t a, uint32_t b) const = 0;
    virtual NCPoly hh_square(uint32_t g) const = 0;  // odd g: replaces H_g H_g

    AlgebraPtr alg_;
};

// Thm-2.6 relation families oriented as rewrites:
//   H_x M_y -> (-1)^{|x||y|} M_y H_x + m_{{x,y}}
//   H_x H_y -> (-1)^{|x||y|} H_y H_x + h_{{x,y}}   (x after y in the order)
//   M_g M_g -> 0,  H_g H_g -> 1/2 h_{{g,g}}        (odd g)
class UEARules : public RewriteRules {
  public:
    explicit UEARules(BracketTable table);
    const BracketTable& table() const { return table_; }

  protected:
    NCPoly hm_correction(uint32_t hgen, uint32_t mgen) const override;
    NCPoly hh_correction(uint32_t a, uint32_t b) const override;
    NCPoly hh_square(uint32_t g) const override;

  private:
    BracketTable table_;
};

// Weyl superalgebra C_{p|q}: M_i plays X_{i+1}, H_i plays Y_{i+1}, with
// [X_i,Y_j]_gr = delta_ij and all other supercommutators zero.
class WeylRules : public RewriteRules {
  public:
    WeylRules(int p, int q);
    int p() const { return p_; }
    int q() const { return q_; }
    // AllN(2N-1) supercommutator defining relations, N = p+q.
    std::vector<NCPoly> defining_relations() const;

  protected:
    NCPoly hm_correction(uint32_t hgen, uint32_t mgen) const override;
    NCPoly hh_correction(uint32_t a, uint32_t b) const override;
    NCPoly hh_square(uint32_t g) const override;

  private:
    int p_, q_;
};

bool is_normal_word(const Word& w, const Algebra& alg);

NCPoly normalize(const RewriteRules& rules, const NCPoly& p);
// Applies uniformly random applicable rewrites; must agree with normalize
// when the system is confluent (tested, not assumed).
NCPoly normalize_random(const RewriteRules& rules, const NCPoly& p, std::mt19937& rng);

struct PBWMonomial {
    Monomial m_part;
    Monomial h_part;
    unsigned degree() const { return m_part.degree() + h_part.degree(); }
    bool operator==(const PBWMonomial& o) const = default;
};

Word pbw_to_word(const PBWMonomial& p);
PBWMonomial word_to_pbw(const Word& w, const Algebra& alg);  // word must be normal

// Basis listing order: total degree, then h-degree, then the print order of
// the m- and h-parts.
bool pbw_less(const PBWMonomial& a, const PBWMonomial& b);

// Exponent caps: every even exponent <= bound, odd <= min(bound, 1);
// dm bounds the m-part, dh the h-part.
std::vector<PBWMonomial> pbw_basis(const AlgebraPtr& alg, unsigned dm, unsigned dh);
// All PBW monomials of total degree <= d.
std::vector<PBWMonomial> pbw_basis_total(const AlgebraPtr& alg, unsigned d);

struct CheckReport {
    bool pass = true;
    std::string detail;  // first failure description
    std::vector<std::string> info;

    std::string str() const;
};

// Prop-2.7(b) map X_i -> m_{x_i}, X_{i+n} -> m_{y_i}, Y_i -> h_{y_i},
// Y_{i+n} -> h_{x_i}: checks every C_{2n} defining relation dies in U(P_n)
// and that the PBW bases correspond bijectively up to total degree d.
CheckReport symplectic_iso_check(int n, unsigned degree);

// Generating relations of U(P) (all-even quadratic case) and U(P^!) (dual
// exterior case), three families each.
std::vector<NCPoly> present_quadratic(const AlgebraPtr& alg, const StructureConstants& C);
std::vector<NCPoly> present_exterior(const AlgebraPtr& alg, const StructureConstants& C);

// m_x -> m_x, h_x -> -h_x composed with word reversal and the Koszul sign;
// an involution.
NCPoly opposite_uea(const NCPoly& p);

// U(phi) for a super Poisson homomorphism given by generator images; images
// are validated against both bracket tables.
NCPoly uea_functor(const BracketTable& src, const BracketTable& dst,
                   const std::vector<Poly>& images, const NCPoly& p);

enum class SymStyle { MH, Weyl };
std::string sym_str(const Sym& s, const Algebra& alg, SymStyle style);
std::string word_str(const Word& w, const Algebra& alg, SymStyle style);
// Terms sorted by length descending, then lexicographically.
std::string ncpoly_str(const NCPoly& p, SymStyle style = SymStyle::MH);

}  // namespace psalg
