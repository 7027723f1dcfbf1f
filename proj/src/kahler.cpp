#include "psalg/kahler.hpp"

#include <sstream>

namespace psalg {

KahlerElement KahlerElement::zero(AlgebraPtr a) { return KahlerElement(std::move(a)); }

KahlerElement KahlerElement::differential(AlgebraPtr a, size_t gen) {
    KahlerElement k(std::move(a));
    k.add_term(Monomial(k.alg_->size()), gen, 1);
    return k;
}

void KahlerElement::add_term(const Monomial& coeff, size_t gen, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(coeff, gen);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

KahlerElement KahlerElement::operator+(const KahlerElement& o) const {
    require_same_algebra(*alg_, *o.alg_);
    KahlerElement k = *this;
    for (const auto& [key, c] : o.terms_) k.add_term(key.first, key.second, c);
    return k;
}

KahlerElement KahlerElement::operator-(const KahlerElement& o) const {
    require_same_algebra(*alg_, *o.alg_);
    KahlerElement k = *this;
    for (const auto& [key, c] : o.terms_) k.add_term(key.first, key.second, -c);
    return k;
}

KahlerElement KahlerElement::scaled(const Rational& c) const {
    KahlerElement k(alg_);
    if (c == 0) return k;
    for (const auto& [key, v] : terms_) k.terms_.emplace(key, v * c);
    return k;
}

KahlerElement KahlerElement::left_mul(const Poly& p) const {
    require_same_algebra(*alg_, *p.algebra());
    KahlerElement k(alg_);
    for (const auto& [pm, pc] : p.terms())
        for (const auto& [key, c] : terms_) {
            auto prod = mono_mul(pm, key.first, *alg_);
            if (!prod) continue;
            Rational v = pc * c;
            k.add_term(prod->mono, key.second, prod->negative ? Rational(-v) : v);
        }
    return k;
}

bool KahlerElement::operator==(const KahlerElement& o) const {
    return alg_->same(*o.alg_) && terms_ == o.terms_;
}

Parity KahlerElement::parity_or_throw() const {
    bool seen = false;
    Parity p = Parity::Even;
    for (const auto& [key, c] : terms_) {
        Parity tp = key.first.parity(*alg_) + alg_->gen(key.second).parity;
        if (!seen) {
            p = tp;
            seen = true;
        } else if (tp != p) {
            throw parity_error("Kaehler element has mixed parity");
        }
    }
    return p;
}

std::string KahlerElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        os << coeff_str(c) << " " << monomial_str(key.first, *alg_) << " d"
           << alg_->gen(key.second).name;
        first = false;
    }
    return os.str();
}

namespace {

// d(g^e) on one generator power: even g gives e g^{e-1} dg, odd g has e = 1.
KahlerElement d_pow(const AlgebraPtr& alg, size_t g, uint32_t e) {
    KahlerElement out = KahlerElement::zero(alg);
    if (e == 0) return out;
    out.add_term(Monomial(alg->size()).with_exp(g, e - 1), g, Rational(static_cast<long>(e)));
    return out;
}

KahlerElement d_mono(const AlgebraPtr& alg, const Monomial& m) {
    if (m.degree() == 0) return KahlerElement::zero(alg);
    size_t lead = 0;
    while (m.exp(lead) == 0) ++lead;
    uint32_t e = m.exp(lead);
    Monomial rest = m.with_exp(lead, 0);
    KahlerElement df = d_pow(alg, lead, e);
    if (rest.degree() == 0) return df;
    // d(f rest) = f d(rest) + (-1)^{|f||rest|} rest d(f)
    Monomial f = Monomial(alg->size()).with_exp(lead, e);
    KahlerElement first = d_mono(alg, rest).left_mul(Poly::monomial(alg, f, 1));
    KahlerElement second = df.left_mul(Poly::monomial(alg, rest, 1));
    bool neg = is_odd(f.parity(*alg)) && is_odd(rest.parity(*alg));
    return first + (neg ? second.scaled(-1) : second);
}

}  // namespace

KahlerElement d_ev(const Poly& p) {
    const AlgebraPtr& alg = p.algebra();
    KahlerElement out = KahlerElement::zero(alg);
    for (const auto& [m, c] : p.terms()) out = out + d_mono(alg, m).scaled(c);
    return out;
}

KahlerElement lr_bracket(const BracketTable& T, const KahlerElement& u, const KahlerElement& v) {
    const AlgebraPtr& alg = T.algebra();
    require_same_algebra(*alg, *u.algebra());
    require_same_algebra(*alg, *v.algebra());
    KahlerElement out = KahlerElement::zero(alg);
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            const Monomial& x = ku.first;
            size_t f = ku.second;
            const Monomial& y = kv.first;
            size_t g = kv.second;
            Rational c = cu * cv;
            Poly xp = Poly::monomial(alg, x, 1);
            Poly yp = Poly::monomial(alg, y, 1);
            Poly fp = Poly::generator(alg, f);
            Poly gp = Poly::generator(alg, g);
            bool yf = is_odd(y.parity(*alg)) && is_odd(alg->gen(f).parity);
            // (-1)^{|y||f|} x y d{f,g}
            KahlerElement t1 = d_ev(T.entry(f, g)).left_mul(xp * yp);
            out = out + t1.scaled(yf ? -c : c);
            // x {f,y} dg
            KahlerElement t2 = KahlerElement::differential(alg, g).left_mul(xp * T.bracket(fp, yp));
            out = out + t2.scaled(c);
            // -(-1)^{|xf||yg|} y {g,x} df
            bool xfyg = is_odd(x.parity(*alg) + alg->gen(f).parity) &&
                        is_odd(y.parity(*alg) + alg->gen(g).parity);
            KahlerElement t3 = KahlerElement::differential(alg, f).left_mul(yp * T.bracket(gp, xp));
            out = out + t3.scaled(xfyg ? c : -c);
        }
    return out;
}

Poly apply_anchor(const BracketTable& T, const KahlerElement& u, const Poly& p) {
    const AlgebraPtr& alg = T.algebra();
    require_same_algebra(*alg, *u.algebra());
    Poly out = Poly::zero(alg);
    for (const auto& [key, c] : u.terms()) {
        Poly x = Poly::monomial(alg, key.first, c);
        out = out + x * T.bracket(Poly::generator(alg, key.second), p);
    }
    return out;
}

Derivation anchor(const BracketTable& T, const KahlerElement& u) {
    Derivation d(T.algebra(), u.parity_or_throw());
    for (size_t i = 0; i < T.algebra()->size(); ++i)
        d.set_image(i, apply_anchor(T, u, Poly::generator(T.algebra(), i)));
    return d;
}

SemidirectElement semidirect_bracket(const BracketTable& T, const SemidirectElement& lhs,
                                     const SemidirectElement& rhs) {
    // A carries the trivial bracket, so the [a,b] summand vanishes.
    Poly part = apply_anchor(T, lhs.u, rhs.a);
    bool sign = false;
    if (!lhs.a.is_zero() && !rhs.u.is_zero())
        sign = is_odd(lhs.a.parity_or_throw()) && is_odd(rhs.u.parity_or_throw());
    Poly second = apply_anchor(T, rhs.u, lhs.a);
    part = sign ? part + second : part - second;
    return SemidirectElement{part, lr_bracket(T, lhs.u, rhs.u)};
}

std::vector<size_t> kahler_basis(const AlgebraPtr& alg) {
    std::vector<size_t> out(alg->size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

Derivation witness_derivation(const AlgebraPtr& alg, size_t i) {
    Derivation d(alg, Parity::Even);
    for (size_t j = 0; j < alg->size(); ++j)
        d.set_image(j, j == i ? Poly::generator(alg, i) : Poly::zero(alg));
    return d;
}

namespace {

unsigned long count_with_caps(const Algebra& alg, unsigned cap) {
    unsigned long total = 1;
    for (size_t i = 0; i < alg.size(); ++i) {
        unsigned top = is_odd(alg.gen(i).parity) ? std::min(cap, 1u) : cap;
        total *= (top + 1);
    }
    return total;
}

}  // namespace

unsigned long supersym_monomial_count(const AlgebraPtr& alg, unsigned cap_r, unsigned cap_omega) {
    // |dg| = |g|, so the Omega part counts exactly like a second generator copy.
    return count_with_caps(*alg, cap_r) * count_with_caps(*alg, cap_omega);
}

}  // namespace psalg
