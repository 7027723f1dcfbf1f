#include "psalg/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace psalg {

AlgebraPtr Algebra::make(std::vector<Generator> gens) {
    std::set<std::string> seen;
    for (const auto& g : gens) {
        if (g.name.empty()) throw input_error("generator name may not be empty");
        if (!seen.insert(g.name).second)
            throw input_error("duplicate generator name: " + g.name);
    }
    return AlgebraPtr(new Algebra(std::move(gens)));
}

std::optional<size_t> Algebra::find(std::string_view name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

size_t Algebra::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw input_error("unknown generator: " + std::string(name));
}

bool Algebra::same(const Algebra& other) const {
    if (this == &other) return true;
    if (gens_.size() != other.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != other.gens_[i].name || gens_[i].parity != other.gens_[i].parity)
            return false;
    return true;
}

void require_same_algebra(const Algebra& a, const Algebra& b) {
    if (!a.same(b)) throw algebra_mismatch_error();
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
}

Parity Monomial::parity(const Algebra& alg) const {
    unsigned odd = 0;
    for (size_t i = 0; i < exps_.size(); ++i)
        if (is_odd(alg.gen(i).parity)) odd += exps_[i];
    return (odd % 2) ? Parity::Odd : Parity::Even;
}

Monomial Monomial::with_exp(size_t i, uint32_t e) const {
    Monomial m = *this;
    m.exps_[i] = e;
    return m;
}

bool Monomial::operator<(const Monomial& o) const {
    unsigned da = degree(), db = o.degree();
    if (da != db) return da < db;
    return exps_ < o.exps_;
}

std::optional<SignedMonomial> mono_mul(const Monomial& a, const Monomial& b, const Algebra& alg) {
    SignedMonomial out;
    out.mono = Monomial(alg.size());
    // Inversions among odd generators: each odd occurrence in b at index i
    // passes every odd occurrence in a at an index > i.
    unsigned long inversions = 0;
    unsigned long odd_suffix = 0;  // odd exponents of a strictly above current index
    for (size_t i = alg.size(); i-- > 0;) {
        bool odd = is_odd(alg.gen(i).parity);
        uint32_t ea = a.exp(i), eb = b.exp(i);
        if (odd && ea + eb > 1) return std::nullopt;
        if (odd) inversions += static_cast<unsigned long>(eb) * odd_suffix;
        out.mono = out.mono.with_exp(i, ea + eb);
        if (odd) odd_suffix += ea;
    }
    out.negative = (inversions % 2) != 0;
    return out;
}

Poly Poly::zero(AlgebraPtr a) { return Poly(std::move(a)); }

Poly Poly::constant(AlgebraPtr a, const Rational& c) {
    Poly p(std::move(a));
    p.add_term(Monomial(p.alg_->size()), c);
    return p;
}

Poly Poly::generator(AlgebraPtr a, size_t i) {
    Poly p(std::move(a));
    p.add_term(Monomial(p.alg_->size()).with_exp(i, 1), 1);
    return p;
}

Poly Poly::monomial(AlgebraPtr a, Monomial m, const Rational& c) {
    Poly p(std::move(a));
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Poly::constant_term() const {
    auto it = terms_.find(Monomial(alg_->size()));
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Homogeneity Poly::homogeneity() const {
    if (terms_.empty()) return Homogeneity::Zero;
    bool even = false, odd = false;
    for (const auto& [m, c] : terms_)
        (is_odd(m.parity(*alg_)) ? odd : even) = true;
    if (even && odd) return Homogeneity::Mixed;
    return odd ? Homogeneity::Odd : Homogeneity::Even;
}

bool Poly::parity_is(Parity p) const {
    switch (homogeneity()) {
        case Homogeneity::Zero: return true;
        case Homogeneity::Even: return p == Parity::Even;
        case Homogeneity::Odd: return p == Parity::Odd;
        case Homogeneity::Mixed: return false;
    }
    return false;
}

Parity Poly::parity_or_throw() const {
    switch (homogeneity()) {
        case Homogeneity::Zero:
        case Homogeneity::Even: return Parity::Even;
        case Homogeneity::Odd: return Parity::Odd;
        case Homogeneity::Mixed: break;
    }
    throw parity_error("polynomial has mixed parity");
}

Poly Poly::operator-() const {
    Poly p(alg_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_algebra(*alg_, *o.alg_);
    Poly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_algebra(*alg_, *o.alg_);
    Poly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_algebra(*alg_, *o.alg_);
    Poly p(alg_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto prod = mono_mul(ma, mb, *alg_);
            if (!prod) continue;
            Rational c = ca * cb;
            if (prod->negative) c = -c;
            p.add_term(prod->mono, c);
        }
    return p;
}

Poly Poly::scaled(const Rational& c) const {
    Poly p(alg_);
    if (c == 0) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly p = Poly::constant(alg_, 1);
    for (unsigned i = 0; i < e; ++i) p = p * *this;
    return p;
}

bool Poly::operator==(const Poly& o) const {
    return alg_->same(*o.alg_) && terms_ == o.terms_;
}

Poly Poly::remap(const AlgebraPtr& target) const {
    std::vector<size_t> where(alg_->size());
    for (size_t i = 0; i < alg_->size(); ++i) {
        where[i] = target->index_of(alg_->gen(i).name);
        if (target->gen(where[i]).parity != alg_->gen(i).parity)
            throw parity_error("generator " + alg_->gen(i).name + " changes parity under remap");
    }
    Poly out = Poly::zero(target);
    for (const auto& [m, c] : terms_) {
        // Build the image one generator at a time so Koszul signs are right
        // even if the target order differs.
        Poly term = Poly::constant(target, c);
        for (size_t i = 0; i < alg_->size(); ++i)
            for (uint32_t e = 0; e < m.exp(i); ++e)
                term = term * Poly::generator(target, where[i]);
        out = out + term;
    }
    return out;
}

Derivation::Derivation(AlgebraPtr alg, Parity parity)
    : alg_(std::move(alg)), parity_(parity), images_(alg_->size()) {}

Derivation Derivation::zero(AlgebraPtr alg, Parity parity) {
    Derivation d(alg, parity);
    for (size_t i = 0; i < alg->size(); ++i) d.set_image(i, Poly::zero(alg));
    return d;
}

void Derivation::set_image(size_t gen, Poly value) {
    require_same_algebra(*alg_, *value.algebra());
    Parity want = alg_->gen(gen).parity + parity_;
    if (!value.parity_is(want))
        throw parity_error("image of " + alg_->gen(gen).name + " must be " + parity_name(want) +
                           " for a " + parity_name(parity_) + " derivation");
    images_[gen] = std::move(value);
}

const Poly& Derivation::image(size_t gen) const {
    if (!images_[gen]) throw incomplete_derivation_error(alg_->gen(gen).name);
    return *images_[gen];
}

Poly Derivation::apply(const Poly& p) const {
    require_same_algebra(*alg_, *p.algebra());
    Poly out = Poly::zero(alg_);
    for (const auto& [mono, c] : p.terms()) {
        // Graded Leibniz left-to-right across the monomial's factors.
        Monomial prefix(alg_->size());
        unsigned prefix_odd = 0;
        for (size_t i = 0; i < alg_->size(); ++i) {
            uint32_t e = mono.exp(i);
            if (e == 0) continue;
            const Poly& dg = image(i);
            bool gen_odd = is_odd(alg_->gen(i).parity);
            // d(g^e) = e g^{e-1} d(g) for even g; d(g) for odd g (e = 1).
            Poly dpart = gen_odd
                             ? dg
                             : Poly::monomial(alg_, Monomial(alg_->size()).with_exp(i, e - 1),
                                              Rational(static_cast<long>(e))) *
                                   dg;
            Monomial suffix(alg_->size());
            for (size_t j = i + 1; j < alg_->size(); ++j)
                suffix = suffix.with_exp(j, mono.exp(j));
            Poly term = Poly::monomial(alg_, prefix, 1) * dpart * Poly::monomial(alg_, suffix, 1);
            bool neg = is_odd(parity_) && (prefix_odd % 2 != 0);
            out = out + term.scaled(neg ? -c : c);
            prefix = prefix.with_exp(i, e);
            if (gen_odd) prefix_odd += e;
        }
    }
    return out;
}

Tensor2 Tensor2::zero(AlgebraPtr a) { return Tensor2(std::move(a)); }

Tensor2 Tensor2::unit(AlgebraPtr a) {
    Tensor2 t(std::move(a));
    Monomial one(t.alg_->size());
    t.add_term(one, one, 1);
    return t;
}

Tensor2 Tensor2::simple(const Poly& left, const Poly& right) {
    require_same_algebra(*left.algebra(), *right.algebra());
    Tensor2 t(left.algebra());
    for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) t.add_term(ml, mr, cl * cr);
    return t;
}

void Tensor2::add_term(const Monomial& l, const Monomial& r, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(l, r);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    require_same_algebra(*alg_, *o.alg_);
    Tensor2 t = *this;
    for (const auto& [k, c] : o.terms_) t.add_term(k.first, k.second, c);
    return t;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    require_same_algebra(*alg_, *o.alg_);
    Tensor2 t = *this;
    for (const auto& [k, c] : o.terms_) t.add_term(k.first, k.second, -c);
    return t;
}

Tensor2 Tensor2::scaled(const Rational& c) const {
    Tensor2 t(alg_);
    if (c == 0) return t;
    for (const auto& [k, v] : terms_) t.terms_.emplace(k, v * c);
    return t;
}

bool Tensor2::operator==(const Tensor2& o) const {
    return alg_->same(*o.alg_) && terms_ == o.terms_;
}

bool Tensor2::parity_is(Parity p) const {
    for (const auto& [k, c] : terms_)
        if (k.first.parity(*alg_) + k.second.parity(*alg_) != p) return false;
    return true;
}

Tensor2 tensor_mul(const Tensor2& u, const Tensor2& v) {
    require_same_algebra(*u.algebra(), *v.algebra());
    const Algebra& alg = *u.algebra();
    Tensor2 t = Tensor2::zero(u.algebra());
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            // (a(x)b)(c(x)d) = (-1)^{|b||c|} (ac (x) bd)
            auto left = mono_mul(ku.first, kv.first, alg);
            if (!left) continue;
            auto right = mono_mul(ku.second, kv.second, alg);
            if (!right) continue;
            bool neg = left->negative ^ right->negative;
            if (is_odd(ku.second.parity(alg)) && is_odd(kv.first.parity(alg))) neg = !neg;
            Rational c = cu * cv;
            t.add_term(left->mono, right->mono, neg ? -c : c);
        }
    return t;
}

Poly substitute(const Poly& p, const AlgebraPtr& target, const std::vector<Poly>& images) {
    const Algebra& src = *p.algebra();
    if (images.size() != src.size()) throw input_error("substitution needs one image per generator");
    for (size_t i = 0; i < images.size(); ++i) {
        require_same_algebra(*images[i].algebra(), *target);
        if (!images[i].parity_is(src.gen(i).parity))
            throw parity_error("substitution image of " + src.gen(i).name +
                               " does not preserve parity");
    }
    Poly out = Poly::zero(target);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(target, c);
        for (size_t i = 0; i < src.size(); ++i)
            for (uint32_t e = 0; e < m.exp(i); ++e) term = term * images[i];
        out = out + term;
    }
    return out;
}

bool print_order_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (size_t i = 0; i < a.width(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i);
    return false;
}

std::string monomial_str(const Monomial& m, const Algebra& alg) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < alg.size(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) os << "*";
        os << alg.gen(i).name;
        if (m.exp(i) > 1) os << "^" << m.exp(i);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string coeff_str(const Rational& c) { return c.get_str(); }

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* x, auto* y) { return print_order_less(x->first, y->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        if (!first) os << " + ";
        if (t->first.is_unit())
            os << coeff_str(t->second);
        else
            os << coeff_str(t->second) << " " << monomial_str(t->first, *alg_);
        first = false;
    }
    return os.str();
}

std::string Tensor2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << coeff_str(c) << " " << monomial_str(k.first, *alg_) << " (x) "
           << monomial_str(k.second, *alg_);
        first = false;
    }
    return os.str();
}

}  // namespace psalg
