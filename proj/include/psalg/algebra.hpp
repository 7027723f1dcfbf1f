#pragma once

// Exact arithmetic in finitely generated supercommutative superalgebras
// (polynomial generators tensor exterior generators), superderivations, and
// the super tensor product. Everything here is immutable after construction
// and every operation is pure.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psalg/errors.hpp"
#include "psalg/rational.hpp"

namespace psalg {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}
inline bool is_odd(Parity p) { return p == Parity::Odd; }
inline const char* parity_name(Parity p) { return is_odd(p) ? "odd" : "even"; }

struct Generator {
    std::string name;
    Parity parity = Parity::Even;
};

// Immutable generator list; list position is the canonical monomial order.
class Algebra {
  public:
    static std::shared_ptr<const Algebra> make(std::vector<Generator> gens);

    size_t size() const { return gens_.size(); }
    const Generator& gen(size_t i) const { return gens_[i]; }
    std::optional<size_t> find(std::string_view name) const;
    size_t index_of(std::string_view name) const;  // throws input_error if absent

    // Structural identity: same names and parities in the same order.
    bool same(const Algebra& other) const;

  private:
    explicit Algebra(std::vector<Generator> gens) : gens_(std::move(gens)) {}
    std::vector<Generator> gens_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

void require_same_algebra(const Algebra& a, const Algebra& b);

// Exponent vector in generator order. Canonical by construction; exponents of
// odd generators are kept in {0,1} by mono_mul returning nullopt on squares.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(size_t ngens) : exps_(ngens, 0) {}

    uint32_t exp(size_t i) const { return exps_[i]; }
    size_t width() const { return exps_.size(); }
    unsigned degree() const;
    Parity parity(const Algebra& alg) const;
    bool is_unit() const { return degree() == 0; }

    Monomial with_exp(size_t i, uint32_t e) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator<(const Monomial& o) const;  // degree, then lex

  private:
    std::vector<uint32_t> exps_;
};

struct SignedMonomial {
    bool negative = false;
    Monomial mono;
};

// Product with the Koszul sign (parity of the permutation restricted to odd
// generators); nullopt when an odd generator squares to zero.
std::optional<SignedMonomial> mono_mul(const Monomial& a, const Monomial& b, const Algebra& alg);

enum class Homogeneity { Zero, Even, Odd, Mixed };

class Poly {
  public:
    static Poly zero(AlgebraPtr a);
    static Poly constant(AlgebraPtr a, const Rational& c);
    static Poly generator(AlgebraPtr a, size_t i);
    static Poly monomial(AlgebraPtr a, Monomial m, const Rational& c = 1);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    unsigned degree() const;

    Homogeneity homogeneity() const;
    // Zero counts as compatible with either parity.
    bool parity_is(Parity p) const;
    Parity parity_or_throw() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned e) const;
    bool operator==(const Poly& o) const;

    // Transport onto another algebra, matching generators by name.
    Poly remap(const AlgebraPtr& target) const;

    std::string str() const;

  private:
    explicit Poly(AlgebraPtr a) : alg_(std::move(a)) {}
    void add_term(const Monomial& m, const Rational& c);

    AlgebraPtr alg_;
    std::map<Monomial, Rational> terms_;

    friend Poly mul_impl(const Poly&, const Poly&);
    friend class Derivation;
};

// Homogeneous superderivation d(ab) = d(a)b + (-1)^{|a||d|} a d(b), stored by
// its images on generators. A generator with no image is an error at apply
// time, not at construction.
class Derivation {
  public:
    Derivation(AlgebraPtr alg, Parity parity);

    static Derivation zero(AlgebraPtr alg, Parity parity = Parity::Even);

    const AlgebraPtr& algebra() const { return alg_; }
    Parity parity() const { return parity_; }

    // Enforces parity(image) = parity(gen) + parity(derivation).
    void set_image(size_t gen, Poly value);
    bool has_image(size_t gen) const { return images_[gen].has_value(); }
    const Poly& image(size_t gen) const;  // throws incomplete_derivation_error

    Poly apply(const Poly& p) const;

  private:
    AlgebraPtr alg_;
    Parity parity_;
    std::vector<std::optional<Poly>> images_;
};

inline Poly apply_derivation(const Derivation& d, const Poly& p) { return d.apply(p); }

// Element of A tensor A with the Def-1.7 sign rule
// (a(x)b)(c(x)d) = (-1)^{|b||c|} (ac (x) bd).
class Tensor2 {
  public:
    static Tensor2 zero(AlgebraPtr a);
    static Tensor2 unit(AlgebraPtr a);
    static Tensor2 simple(const Poly& left, const Poly& right);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<std::pair<Monomial, Monomial>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 scaled(const Rational& c) const;
    bool operator==(const Tensor2& o) const;

    // Compatible with either parity when zero, as for Poly.
    bool parity_is(Parity p) const;

    std::string str() const;

  private:
    explicit Tensor2(AlgebraPtr a) : alg_(std::move(a)) {}
    void add_term(const Monomial& l, const Monomial& r, const Rational& c);

    AlgebraPtr alg_;
    std::map<std::pair<Monomial, Monomial>, Rational> terms_;

    friend Tensor2 tensor_mul(const Tensor2&, const Tensor2&);
    friend class HopfEngine;
};

Tensor2 tensor_mul(const Tensor2& u, const Tensor2& v);

// Substitute images[i] for generator i; images must preserve parity so the
// result is independent of factor order.
Poly substitute(const Poly& p, const AlgebraPtr& target, const std::vector<Poly>& images);

// Term-ordering shared by all printers: total degree descending, then
// exponent vectors lexicographically descending (x1^2 before x1 x2).
bool print_order_less(const Monomial& a, const Monomial& b);

std::string monomial_str(const Monomial& m, const Algebra& alg);
std::string coeff_str(const Rational& c);

}  // namespace psalg
