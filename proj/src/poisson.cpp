#include "psalg/poisson.hpp"

#include <algorithm>
#include <sstream>

namespace psalg {

BracketTable::Builder::Builder(AlgebraPtr alg) : alg_(std::move(alg)) {}

BracketTable::Builder& BracketTable::Builder::set(size_t i, size_t j, Poly value) {
    require_same_algebra(*alg_, *value.algebra());
    const Generator& gi = alg_->gen(i);
    const Generator& gj = alg_->gen(j);
    if (!value.parity_is(gi.parity + gj.parity))
        throw parity_error("bracket {" + gi.name + "," + gj.name + "} must be " +
                           parity_name(gi.parity + gj.parity));
    if (i == j && !is_odd(gi.parity) && !value.is_zero())
        throw parity_error("{" + gi.name + "," + gi.name + "} is forced to 0 for an even generator");
    if (raw_.count({i, j}))
        throw input_error("duplicate bracket entry for {" + gi.name + "," + gj.name + "}");
    raw_.emplace(std::make_pair(i, j), std::move(value));
    return *this;
}

BracketTable::Builder& BracketTable::Builder::set(const std::string& gi, const std::string& gj,
                                                  Poly value) {
    return set(alg_->index_of(gi), alg_->index_of(gj), std::move(value));
}

BracketTable BracketTable::Builder::finish(bool fill_zero) && {
    BracketTable t(alg_);
    t.raw_ = std::move(raw_);
    t.complete_ = fill_zero;
    if (fill_zero) {
        for (size_t i = 0; i < alg_->size(); ++i)
            if (is_odd(alg_->gen(i).parity) && !t.raw_.count({i, i}))
                t.warnings_.push_back("odd diagonal {" + alg_->gen(i).name + "," +
                                      alg_->gen(i).name + "} defaulted to 0");
    }
    return t;
}

bool BracketTable::has_entry(size_t i, size_t j) const {
    if (complete_) return true;
    if (raw_.count({i, j}) || raw_.count({j, i})) return true;
    return i == j && !is_odd(alg_->gen(i).parity);
}

Poly BracketTable::entry(size_t i, size_t j) const {
    if (auto it = raw_.find({i, j}); it != raw_.end()) return it->second;
    if (auto it = raw_.find({j, i}); it != raw_.end()) {
        // {g_i,g_j} = -(-1)^{|g_j||g_i|} {g_j,g_i}
        bool both_odd = is_odd(alg_->gen(i).parity) && is_odd(alg_->gen(j).parity);
        return both_odd ? it->second : -it->second;
    }
    if (i == j && !is_odd(alg_->gen(i).parity)) return Poly::zero(alg_);
    if (complete_) return Poly::zero(alg_);
    throw incomplete_table_error("{" + alg_->gen(i).name + "," + alg_->gen(j).name + "}");
}

Poly BracketTable::bracket_mono(const Monomial& u, const Monomial& v) const {
    unsigned du = u.degree(), dv = v.degree();
    if (du == 0 || dv == 0) return Poly::zero(alg_);
    if (du == 1 && dv == 1) {
        size_t g = 0, h = 0;
        for (size_t i = 0; i < alg_->size(); ++i) {
            if (u.exp(i)) g = i;
            if (v.exp(i)) h = i;
        }
        return entry(g, h);
    }
    if (du > 1 && dv == 1) {
        // flip: {u,v} = -(-1)^{|u||v|} {v,u}
        bool both_odd = is_odd(u.parity(*alg_)) && is_odd(v.parity(*alg_));
        Poly flipped = bracket_mono(v, u);
        return both_odd ? flipped : -flipped;
    }
    // peel the leading factor of v: {u, g w} = (-1)^{|u||g|} g {u,w} + {u,g} w
    size_t lead = 0;
    while (v.exp(lead) == 0) ++lead;
    Monomial g = Monomial(alg_->size()).with_exp(lead, 1);
    Monomial w = v.with_exp(lead, v.exp(lead) - 1);
    bool sign = is_odd(u.parity(*alg_)) && is_odd(alg_->gen(lead).parity);
    Poly gp = Poly::monomial(alg_, g, 1);
    Poly wp = Poly::monomial(alg_, w, 1);
    Poly first = gp * bracket_mono(u, w);
    Poly second = bracket_mono(u, g) * wp;
    return (sign ? -first : first) + second;
}

Poly BracketTable::bracket(const Poly& p, const Poly& q) const {
    require_same_algebra(*alg_, *p.algebra());
    require_same_algebra(*alg_, *q.algebra());
    Poly out = Poly::zero(alg_);
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) out = out + bracket_mono(u, v).scaled(cu * cv);
    return out;
}

Derivation BracketTable::hamiltonian(const Poly& p) const {
    Derivation d(alg_, p.parity_or_throw());
    for (size_t i = 0; i < alg_->size(); ++i)
        d.set_image(i, bracket(p, Poly::generator(alg_, i)));
    return d;
}

BracketTable BracketTable::remap(const AlgebraPtr& target) const {
    Builder b(target);
    for (const auto& [pair, value] : raw_)
        b.set(target->index_of(alg_->gen(pair.first).name),
              target->index_of(alg_->gen(pair.second).name), value.remap(target));
    return std::move(b).finish(complete_);
}

bool BracketTable::entries_equal(const BracketTable& other) const {
    BracketTable o = other.algebra()->same(*alg_) ? other : other.remap(alg_);
    for (size_t i = 0; i < alg_->size(); ++i)
        for (size_t j = 0; j < alg_->size(); ++j)
            if (!(entry(i, j) == o.entry(i, j))) return false;
    return true;
}

std::string BracketTable::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < alg_->size(); ++i)
        for (size_t j = i; j < alg_->size(); ++j) {
            Poly e = entry(i, j);
            if (e.is_zero()) continue;
            os << "{" << alg_->gen(i).name << ", " << alg_->gen(j).name << "} = " << e.str()
               << "\n";
        }
    return os.str();
}

std::string VerifyReport::str() const {
    std::ostringstream os;
    if (pass) {
        os << "PASS";
    } else {
        os << "FAIL " << kind << " at (";
        for (size_t i = 0; i < where.size(); ++i) os << (i ? ", " : "") << where[i];
        os << ")";
        if (residual) os << ": residual = " << residual->str();
    }
    return os.str();
}

VerifyReport verify_poisson(const BracketTable& table) {
    const AlgebraPtr& alg = table.algebra();
    VerifyReport rep;
    rep.warnings = table.warnings();

    // Overridden opposite-order entries must agree with super antisymmetry.
    for (const auto& [pair, value] : table.raw_entries()) {
        auto [i, j] = pair;
        if (i >= j || !table.raw_entries().count({j, i})) continue;
        bool both_odd = is_odd(alg->gen(i).parity) && is_odd(alg->gen(j).parity);
        Poly expected = both_odd ? value : -value;
        Poly given = table.raw_entries().at({j, i});
        if (!(given == expected)) {
            rep.pass = false;
            rep.kind = "antisymmetry";
            rep.where = {alg->gen(j).name, alg->gen(i).name};
            rep.residual = given - expected;
            return rep;
        }
    }

    // Super Jacobi on generator triples, lexicographic order.
    for (size_t i = 0; i < alg->size(); ++i)
        for (size_t j = 0; j < alg->size(); ++j)
            for (size_t k = 0; k < alg->size(); ++k) {
                Poly x = Poly::generator(alg, i);
                Poly y = Poly::generator(alg, j);
                Poly z = Poly::generator(alg, k);
                bool xz = is_odd(alg->gen(i).parity) && is_odd(alg->gen(k).parity);
                bool xy = is_odd(alg->gen(i).parity) && is_odd(alg->gen(j).parity);
                bool yz = is_odd(alg->gen(j).parity) && is_odd(alg->gen(k).parity);
                Poly t1 = table.bracket(x, table.bracket(y, z));
                Poly t2 = table.bracket(y, table.bracket(z, x));
                Poly t3 = table.bracket(z, table.bracket(x, y));
                Poly residual = (xz ? -t1 : t1) + (xy ? -t2 : t2) + (yz ? -t3 : t3);
                if (!residual.is_zero()) {
                    rep.pass = false;
                    rep.kind = "jacobi";
                    rep.where = {alg->gen(i).name, alg->gen(j).name, alg->gen(k).name};
                    rep.residual = residual;
                    return rep;
                }
            }
    return rep;
}

StructureConstants::StructureConstants(size_t n, std::map<std::array<size_t, 4>, Rational> entries)
    : n_(n), entries_(std::move(entries)) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->second == 0)
            it = entries_.erase(it);
        else
            ++it;
    }
    for (const auto& [k, v] : entries_)
        for (size_t idx : k)
            if (idx >= n_) throw invalid_constants_error("structure constant index out of range");
    auto get = [&](size_t i, size_t j, size_t k, size_t l) {
        auto it = entries_.find({i, j, k, l});
        return it == entries_.end() ? Rational(0) : it->second;
    };
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            for (size_t k = 0; k < n_; ++k)
                for (size_t l = 0; l < n_; ++l) {
                    Rational c = get(i, j, k, l);
                    if (c != get(i, j, l, k))
                        throw invalid_constants_error(
                            "violated symmetry C^{i,j}_{k,l} = C^{i,j}_{l,k}");
                    if (c != -get(j, i, k, l))
                        throw invalid_constants_error(
                            "violated symmetry C^{i,j}_{k,l} = -C^{j,i}_{k,l}");
                }
}

Rational StructureConstants::at(size_t i, size_t j, size_t k, size_t l) const {
    auto it = entries_.find({i, j, k, l});
    return it == entries_.end() ? Rational(0) : it->second;
}

StructureConstants StructureConstants::from_skew(
    const std::vector<std::vector<Rational>>& lambda) {
    size_t n = lambda.size();
    for (const auto& row : lambda)
        if (row.size() != n) throw invalid_constants_error("lambda must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (lambda[i][j] != -lambda[j][i])
                throw invalid_constants_error("lambda must be skew-symmetric");
    // {x_i,x_j} = lambda_ij x_i x_j: split the coefficient across (k,l)=(i,j),(j,i).
    std::map<std::array<size_t, 4>, Rational> entries;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (lambda[i][j] == 0 || i == j) continue;
            entries[{i, j, i, j}] += lambda[i][j] / 2;
            entries[{i, j, j, i}] += lambda[i][j] / 2;
        }
    return StructureConstants(n, std::move(entries));
}

StructureConstants StructureConstants::matrix_2x2() {
    // k[a,b,c,d] with {a,b}=ab, {a,c}=ac, {a,d}=2bc, {b,c}=0, {b,d}=bd, {c,d}=cd.
    std::map<std::array<size_t, 4>, Rational> e;
    auto put = [&](size_t i, size_t j, size_t k, size_t l, const Rational& c) {
        e[{i, j, k, l}] += c;
        e[{i, j, l, k}] += c;
        e[{j, i, k, l}] -= c;
        e[{j, i, l, k}] -= c;
    };
    Rational half = rat(1, 2);
    put(0, 1, 0, 1, half);  // {a,b} = ab
    put(0, 2, 0, 2, half);  // {a,c} = ac
    put(0, 3, 1, 2, 1);     // {a,d} = 2bc
    put(1, 3, 1, 3, half);  // {b,d} = bd
    put(2, 3, 2, 3, half);  // {c,d} = cd
    return StructureConstants(4, std::move(e));
}

BracketTable quadratic_bracket(const StructureConstants& C, const std::string& prefix) {
    size_t n = C.n();
    std::vector<Generator> gens;
    for (size_t i = 1; i <= n; ++i) gens.push_back({prefix + std::to_string(i), Parity::Even});
    AlgebraPtr alg = Algebra::make(std::move(gens));
    BracketTable::Builder b(alg);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Poly v = Poly::zero(alg);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    v = v +
                        (Poly::generator(alg, k) * Poly::generator(alg, l)).scaled(C.at(i, j, k, l));
            b.set(i, j, v);
        }
    return std::move(b).finish();
}

BracketTable dual_bracket(const StructureConstants& C, const std::string& prefix) {
    size_t n = C.n();
    std::vector<Generator> gens;
    for (size_t i = 1; i <= n; ++i) gens.push_back({prefix + std::to_string(i), Parity::Odd});
    AlgebraPtr alg = Algebra::make(std::move(gens));
    BracketTable::Builder b(alg);
    for (size_t k = 0; k < n; ++k)
        for (size_t l = k; l < n; ++l) {
            // {th_k, th_l} = sum_{i,j} C^{i,j}_{k,l} th_j th_i  (reversed order)
            Poly v = Poly::zero(alg);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    v = v +
                        (Poly::generator(alg, j) * Poly::generator(alg, i)).scaled(C.at(i, j, k, l));
            b.set(k, l, v);
        }
    return std::move(b).finish();
}

BracketTable symplectic_super(int n) {
    if (n < 1) throw input_error("symplectic_super requires n >= 1");
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({"x" + std::to_string(i), Parity::Odd});
    for (int i = 1; i <= n; ++i) gens.push_back({"y" + std::to_string(i), Parity::Odd});
    AlgebraPtr alg = Algebra::make(std::move(gens));
    BracketTable::Builder b(alg);
    size_t un = static_cast<size_t>(n);
    for (size_t i = 0; i < un; ++i) b.set(i, un + i, Poly::constant(alg, 1));
    return std::move(b).finish();
}

BracketTable skew_super_bracket(const std::vector<std::vector<Rational>>& lambda,
                                const std::vector<std::vector<Rational>>& mu,
                                const std::vector<std::vector<Rational>>& xi) {
    size_t n = lambda.size(), m = mu.size();
    auto check_skew = [](const std::vector<std::vector<Rational>>& a, const char* what) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].size() != a.size())
                throw invalid_constants_error(std::string(what) + " must be square");
            for (size_t j = 0; j < a.size(); ++j)
                if (a[i][j] != -a[j][i])
                    throw invalid_constants_error(std::string(what) + " must be skew-symmetric");
        }
    };
    check_skew(lambda, "lambda");
    check_skew(mu, "mu");
    if (xi.size() != n) throw invalid_constants_error("xi must be n x m");
    for (const auto& row : xi)
        if (row.size() != m) throw invalid_constants_error("xi must be n x m");

    std::vector<Generator> gens;
    for (size_t i = 1; i <= n; ++i) gens.push_back({"x" + std::to_string(i), Parity::Even});
    for (size_t j = 1; j <= m; ++j) gens.push_back({"y" + std::to_string(j), Parity::Odd});
    AlgebraPtr alg = Algebra::make(std::move(gens));
    BracketTable::Builder b(alg);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            b.set(i, j, (Poly::generator(alg, i) * Poly::generator(alg, j)).scaled(lambda[i][j]));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            b.set(n + i, n + j,
                  (Poly::generator(alg, n + i) * Poly::generator(alg, n + j)).scaled(mu[i][j]));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            b.set(i, n + j,
                  (Poly::generator(alg, i) * Poly::generator(alg, n + j)).scaled(xi[i][j]));
    return std::move(b).finish();
}

BracketTable trivial_bracket(AlgebraPtr alg) {
    return std::move(BracketTable::Builder(std::move(alg))).finish();
}

}  // namespace psalg
