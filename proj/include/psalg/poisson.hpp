#pragma once

// Poisson superalgebra structures: bracket tables on generators, the
// super-Leibniz extension {x,yz} = (-1)^{|x||y|} y{x,z} + {x,y}z, axiom
// verification, and the standard example families (symplectic, quadratic,
// dual, skew-symmetric).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psalg/algebra.hpp"

namespace psalg {

class BracketTable {
  public:
    class Builder {
      public:
        explicit Builder(AlgebraPtr alg);
        // Accepts any ordered pair, including odd diagonals; entry parity must
        // be parity(gi)+parity(gj). Even diagonals must be zero.
        Builder& set(size_t i, size_t j, Poly value);
        Builder& set(const std::string& gi, const std::string& gj, Poly value);
        // fill_zero: missing pairs become 0 (odd diagonals defaulting to 0 get
        // a warning). Otherwise lookups of missing pairs throw.
        BracketTable finish(bool fill_zero = true) &&;

      private:
        AlgebraPtr alg_;
        std::map<std::pair<size_t, size_t>, Poly> raw_;
    };

    const AlgebraPtr& algebra() const { return alg_; }

    // {g_i, g_j}; pairs given only in the opposite order are derived by super
    // antisymmetry {y,x} = -(-1)^{|x||y|}{x,y}.
    Poly entry(size_t i, size_t j) const;
    bool has_entry(size_t i, size_t j) const;

    // Bilinear bracket on polynomials via the Leibniz extension.
    Poly bracket(const Poly& p, const Poly& q) const;

    // {p, -} as a superderivation of parity |p| (p homogeneous).
    Derivation hamiltonian(const Poly& p) const;

    const std::vector<std::string>& warnings() const { return warnings_; }

    // Raw entries exactly as supplied (for antisymmetry auditing).
    const std::map<std::pair<size_t, size_t>, Poly>& raw_entries() const { return raw_; }

    // Transport onto an algebra with the same generator names (any order).
    BracketTable remap(const AlgebraPtr& target) const;

    bool entries_equal(const BracketTable& other) const;

    std::string str() const;

  private:
    explicit BracketTable(AlgebraPtr alg) : alg_(std::move(alg)) {}
    Poly bracket_mono(const Monomial& u, const Monomial& v) const;

    AlgebraPtr alg_;
    std::map<std::pair<size_t, size_t>, Poly> raw_;
    bool complete_ = false;
    std::vector<std::string> warnings_;
};

struct VerifyReport {
    bool pass = true;
    // "antisymmetry" or "jacobi" on failure.
    std::string kind;
    std::vector<std::string> where;  // generator names involved
    std::optional<Poly> residual;
    std::vector<std::string> warnings;

    std::string str() const;
};

// Checks super antisymmetry of every explicitly overridden entry and the super
// Jacobi identity on all generator triples; first failure in lexicographic
// order wins.
VerifyReport verify_poisson(const BracketTable& table);

// Structure constants C^{i,j}_{k,l} with the symmetries
// C^{i,j}_{k,l} = C^{i,j}_{l,k} = -C^{j,i}_{l,k} = -C^{j,i}_{k,l} (0-based).
class StructureConstants {
  public:
    StructureConstants(size_t n, std::map<std::array<size_t, 4>, Rational> entries);

    static StructureConstants from_skew(const std::vector<std::vector<Rational>>& lambda);
    // C for the classical bracket on the coordinate ring of 2x2 matrices.
    static StructureConstants matrix_2x2();

    size_t n() const { return n_; }
    Rational at(size_t i, size_t j, size_t k, size_t l) const;

  private:
    size_t n_;
    std::map<std::array<size_t, 4>, Rational> entries_;
};

// k[x1..xn] with {x_i,x_j} = sum C^{i,j}_{k,l} x_k x_l.
BracketTable quadratic_bracket(const StructureConstants& C,
                               const std::string& name_prefix = "x");
// Lambda(th1..thn) with the dual bracket {th_k,th_l} = sum C^{i,j}_{k,l} th_j th_i.
BracketTable dual_bracket(const StructureConstants& C, const std::string& name_prefix = "th");

// Exterior algebra Lambda(x1..xn, y1..yn), all odd, {x_i,y_j} = delta_ij = {y_j,x_i}.
BracketTable symplectic_super(int n);

// k[x1..xn | y1..ym] with {x_i,x_j} = lambda_ij x_i x_j, {y_i,y_j} = mu_ij y_i y_j,
// {x_i,y_j} = xi_ij x_i y_j. lambda and mu must be skew-symmetric.
BracketTable skew_super_bracket(const std::vector<std::vector<Rational>>& lambda,
                                const std::vector<std::vector<Rational>>& mu,
                                const std::vector<std::vector<Rational>>& xi);

BracketTable trivial_bracket(AlgebraPtr alg);

}  // namespace psalg
