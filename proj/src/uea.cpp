#include "psalg/uea.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace psalg {

NCPoly NCPoly::zero(AlgebraPtr a) { return NCPoly(std::move(a)); }

NCPoly NCPoly::constant(AlgebraPtr a, const Rational& c) {
    NCPoly p(std::move(a));
    p.add_term(Word{}, c);
    return p;
}

NCPoly NCPoly::symbol(AlgebraPtr a, SymKind k, size_t gen) {
    NCPoly p(std::move(a));
    p.add_term(Word{Sym{k, static_cast<uint32_t>(gen)}}, 1);
    return p;
}

NCPoly NCPoly::from_word(AlgebraPtr a, Word w, const Rational& c) {
    NCPoly p(std::move(a));
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly p(alg_);
    for (const auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    require_same_algebra(*alg_, *o.alg_);
    NCPoly p = *this;
    for (const auto& [w, c] : o.terms_) p.add_term(w, c);
    return p;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    require_same_algebra(*alg_, *o.alg_);
    NCPoly p = *this;
    for (const auto& [w, c] : o.terms_) p.add_term(w, -c);
    return p;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    require_same_algebra(*alg_, *o.alg_);
    NCPoly p(alg_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            p.add_term(w, ca * cb);
        }
    return p;
}

NCPoly NCPoly::scaled(const Rational& c) const {
    NCPoly p(alg_);
    if (c == 0) return p;
    for (const auto& [w, k] : terms_) p.terms_.emplace(w, k * c);
    return p;
}

bool NCPoly::operator==(const NCPoly& o) const {
    return alg_->same(*o.alg_) && terms_ == o.terms_;
}

Parity sym_parity(const Sym& s, const Algebra& alg) { return alg.gen(s.gen).parity; }

Parity word_parity(const Word& w, const Algebra& alg) {
    Parity p = Parity::Even;
    for (const Sym& s : w) p = p + sym_parity(s, alg);
    return p;
}

unsigned h_degree(const Word& w) {
    unsigned d = 0;
    for (const Sym& s : w)
        if (s.kind == SymKind::H) ++d;
    return d;
}

namespace {

Word m_word_of(const Monomial& m, size_t width) {
    Word w;
    for (size_t i = 0; i < width; ++i)
        for (uint32_t e = 0; e < m.exp(i); ++e)
            w.push_back(Sym{SymKind::M, static_cast<uint32_t>(i)});
    return w;
}

NCPoly embed_h_mono(const AlgebraPtr& alg, const Monomial& m) {
    unsigned d = m.degree();
    if (d == 0) return NCPoly::zero(alg);
    size_t lead = 0;
    while (m.exp(lead) == 0) ++lead;
    if (d == 1) return NCPoly::symbol(alg, SymKind::H, lead);
    // h(g v) = m(g) h(v) + (-1)^{|g||v|} m(v) h(g)
    Monomial v = m.with_exp(lead, m.exp(lead) - 1);
    NCPoly first = NCPoly::symbol(alg, SymKind::M, lead) * embed_h_mono(alg, v);
    Word second = m_word_of(v, alg->size());
    second.push_back(Sym{SymKind::H, static_cast<uint32_t>(lead)});
    bool neg = is_odd(alg->gen(lead).parity) && is_odd(v.parity(*alg));
    return first + NCPoly::from_word(alg, std::move(second), neg ? -1 : 1);
}

}  // namespace

NCPoly embed(const Poly& p, SymKind kind) {
    const AlgebraPtr& alg = p.algebra();
    NCPoly out = NCPoly::zero(alg);
    for (const auto& [m, c] : p.terms()) {
        if (kind == SymKind::M)
            out.add_term(m_word_of(m, alg->size()), c);
        else
            out = out + embed_h_mono(alg, m).scaled(c);
    }
    return out;
}

std::optional<NCPoly> RewriteRules::rewrite_pair(const Sym& s, const Sym& t) const {
    bool sign = is_odd(sym_parity(s, *alg_)) && is_odd(sym_parity(t, *alg_));
    if (s.kind == SymKind::H && t.kind == SymKind::M) {
        NCPoly out = NCPoly::from_word(alg_, Word{t, s}, sign ? -1 : 1);
        return out + hm_correction(s.gen, t.gen);
    }
    if (s.kind != t.kind) return std::nullopt;  // M before H is normal
    if (s.gen > t.gen) {
        NCPoly out = NCPoly::from_word(alg_, Word{t, s}, sign ? -1 : 1);
        if (s.kind == SymKind::H) out = out + hh_correction(s.gen, t.gen);
        return out;
    }
    if (s.gen == t.gen && is_odd(alg_->gen(s.gen).parity)) {
        if (s.kind == SymKind::M) return NCPoly::zero(alg_);
        return hh_square(s.gen);
    }
    return std::nullopt;
}

UEARules::UEARules(BracketTable table) : RewriteRules(table.algebra()), table_(std::move(table)) {}

NCPoly UEARules::hm_correction(uint32_t hgen, uint32_t mgen) const {
    return embed(table_.entry(hgen, mgen), SymKind::M);
}

NCPoly UEARules::hh_correction(uint32_t a, uint32_t b) const {
    return embed(table_.entry(a, b), SymKind::H);
}

NCPoly UEARules::hh_square(uint32_t g) const {
    // 2 h_g^2 = h_{{g,g}} for odd g
    return embed(table_.entry(g, g), SymKind::H).scaled(rat(1, 2));
}

namespace {

AlgebraPtr weyl_algebra(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) throw input_error("C_{p|q} requires p+q >= 1");
    std::vector<Generator> gens;
    for (int i = 1; i <= p + q; ++i)
        gens.push_back({"X" + std::to_string(i), i <= p ? Parity::Even : Parity::Odd});
    return Algebra::make(std::move(gens));
}

}  // namespace

WeylRules::WeylRules(int p, int q) : RewriteRules(weyl_algebra(p, q)), p_(p), q_(q) {}

NCPoly WeylRules::hm_correction(uint32_t hgen, uint32_t mgen) const {
    // From X_i Y_j - (-1)^{|X_i||Y_j|} Y_j X_i = delta_ij:
    //   Y_j X_i = (-1)^s X_i Y_j - (-1)^s delta_ij.
    if (hgen != mgen) return NCPoly::zero(alg_);
    bool sign = is_odd(alg_->gen(hgen).parity);
    return NCPoly::constant(alg_, sign ? 1 : -1);
}

NCPoly WeylRules::hh_correction(uint32_t, uint32_t) const { return NCPoly::zero(alg_); }

NCPoly WeylRules::hh_square(uint32_t) const { return NCPoly::zero(alg_); }

std::vector<NCPoly> WeylRules::defining_relations() const {
    size_t N = alg_->size();
    std::vector<NCPoly> rels;
    auto X = [&](size_t i) { return NCPoly::symbol(alg_, SymKind::M, i); };
    auto Y = [&](size_t i) { return NCPoly::symbol(alg_, SymKind::H, i); };
    auto gr = [&](const NCPoly& a, const NCPoly& b, bool both_odd) {
        return both_odd ? a * b + b * a : a * b - b * a;
    };
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j) {
            bool both_odd = is_odd(alg_->gen(i).parity) && is_odd(alg_->gen(j).parity);
            rels.push_back(gr(X(i), X(j), both_odd));
            rels.push_back(gr(Y(i), Y(j), both_odd));
        }
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            bool both_odd = is_odd(alg_->gen(i).parity) && is_odd(alg_->gen(j).parity);
            NCPoly r = gr(X(i), Y(j), both_odd);
            if (i == j) r = r - NCPoly::constant(alg_, 1);
            rels.push_back(r);
        }
    return rels;
}

bool is_normal_word(const Word& w, const Algebra& alg) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        const Sym& s = w[i];
        const Sym& t = w[i + 1];
        if (s.kind == SymKind::H && t.kind == SymKind::M) return false;
        if (s.kind == t.kind) {
            if (s.gen > t.gen) return false;
            if (s.gen == t.gen && is_odd(alg.gen(s.gen).parity)) return false;
        }
    }
    return true;
}

namespace {

// Leftmost H-M adjacency first, then the leftmost ordering violation.
std::optional<size_t> pick_position(const RewriteRules& rules, const Word& w) {
    const Algebra& alg = *rules.algebra();
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].kind == SymKind::H && w[i + 1].kind == SymKind::M) return i;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].kind != w[i + 1].kind) continue;
        if (w[i].gen > w[i + 1].gen) return i;
        if (w[i].gen == w[i + 1].gen && is_odd(alg.gen(w[i].gen).parity)) return i;
    }
    return std::nullopt;
}

std::vector<size_t> all_positions(const RewriteRules& rules, const Word& w) {
    const Algebra& alg = *rules.algebra();
    std::vector<size_t> out;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        const Sym& s = w[i];
        const Sym& t = w[i + 1];
        bool applicable = (s.kind == SymKind::H && t.kind == SymKind::M) ||
                          (s.kind == t.kind &&
                           (s.gen > t.gen || (s.gen == t.gen && is_odd(alg.gen(s.gen).parity))));
        if (applicable) out.push_back(i);
    }
    return out;
}

NCPoly splice(const AlgebraPtr& alg, const Word& w, size_t pos, const NCPoly& replacement) {
    NCPoly out = NCPoly::zero(alg);
    for (const auto& [mid, c] : replacement.terms()) {
        Word nw(w.begin(), w.begin() + pos);
        nw.insert(nw.end(), mid.begin(), mid.end());
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        out.add_term(nw, c);
    }
    return out;
}

template <typename PickFn>
NCPoly normalize_with(const RewriteRules& rules, const NCPoly& p, PickFn pick) {
    const AlgebraPtr& alg = rules.algebra();
    NCPoly done = NCPoly::zero(alg);
    std::vector<std::pair<Word, Rational>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::optional<size_t> pos = pick(w);
        if (!pos) {
            done.add_term(w, c);
            continue;
        }
        auto rep = rules.rewrite_pair(w[*pos], w[*pos + 1]);
        NCPoly expanded = splice(alg, w, *pos, *rep);
        for (const auto& [nw, nc] : expanded.terms()) work.emplace_back(nw, nc * c);
    }
    return done;
}

}  // namespace

NCPoly normalize(const RewriteRules& rules, const NCPoly& p) {
    require_same_algebra(*rules.algebra(), *p.algebra());
    return normalize_with(rules, p, [&](const Word& w) { return pick_position(rules, w); });
}

NCPoly normalize_random(const RewriteRules& rules, const NCPoly& p, std::mt19937& rng) {
    require_same_algebra(*rules.algebra(), *p.algebra());
    return normalize_with(rules, p, [&](const Word& w) -> std::optional<size_t> {
        auto cand = all_positions(rules, w);
        if (cand.empty()) return std::nullopt;
        std::uniform_int_distribution<size_t> d(0, cand.size() - 1);
        return cand[d(rng)];
    });
}

Word pbw_to_word(const PBWMonomial& p) {
    Word w;
    for (size_t i = 0; i < p.m_part.width(); ++i)
        for (uint32_t e = 0; e < p.m_part.exp(i); ++e)
            w.push_back(Sym{SymKind::M, static_cast<uint32_t>(i)});
    for (size_t i = 0; i < p.h_part.width(); ++i)
        for (uint32_t e = 0; e < p.h_part.exp(i); ++e)
            w.push_back(Sym{SymKind::H, static_cast<uint32_t>(i)});
    return w;
}

PBWMonomial word_to_pbw(const Word& w, const Algebra& alg) {
    if (!is_normal_word(w, alg)) throw input_error("word is not in PBW normal form");
    PBWMonomial p{Monomial(alg.size()), Monomial(alg.size())};
    for (const Sym& s : w) {
        Monomial& part = s.kind == SymKind::M ? p.m_part : p.h_part;
        part = part.with_exp(s.gen, part.exp(s.gen) + 1);
    }
    return p;
}

bool pbw_less(const PBWMonomial& a, const PBWMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.h_part.degree() != b.h_part.degree()) return a.h_part.degree() < b.h_part.degree();
    if (!(a.m_part == b.m_part)) return print_order_less(a.m_part, b.m_part);
    if (!(a.h_part == b.h_part)) return print_order_less(a.h_part, b.h_part);
    return false;
}

namespace {

void enumerate_parts(const Algebra& alg, unsigned cap, size_t gen, Monomial cur,
                     std::vector<Monomial>& out) {
    if (gen == alg.size()) {
        out.push_back(cur);
        return;
    }
    unsigned top = is_odd(alg.gen(gen).parity) ? std::min(cap, 1u) : cap;
    for (unsigned e = 0; e <= top; ++e)
        enumerate_parts(alg, cap, gen + 1, cur.with_exp(gen, e), out);
}

}  // namespace

std::vector<PBWMonomial> pbw_basis(const AlgebraPtr& alg, unsigned dm, unsigned dh) {
    std::vector<Monomial> ms, hs;
    enumerate_parts(*alg, dm, 0, Monomial(alg->size()), ms);
    enumerate_parts(*alg, dh, 0, Monomial(alg->size()), hs);
    std::vector<PBWMonomial> out;
    out.reserve(ms.size() * hs.size());
    for (const auto& m : ms)
        for (const auto& h : hs) out.push_back({m, h});
    std::sort(out.begin(), out.end(), pbw_less);
    return out;
}

std::vector<PBWMonomial> pbw_basis_total(const AlgebraPtr& alg, unsigned d) {
    std::vector<Monomial> ms, hs;
    enumerate_parts(*alg, d, 0, Monomial(alg->size()), ms);
    enumerate_parts(*alg, d, 0, Monomial(alg->size()), hs);
    std::vector<PBWMonomial> out;
    for (const auto& m : ms)
        for (const auto& h : hs)
            if (m.degree() + h.degree() <= d) out.push_back({m, h});
    std::sort(out.begin(), out.end(), pbw_less);
    return out;
}

std::string CheckReport::str() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL");
    if (!pass && !detail.empty()) os << " " << detail;
    for (const auto& line : info) os << "\n" << line;
    return os.str();
}

CheckReport symplectic_iso_check(int n, unsigned degree) {
    if (n < 1 || degree < 2) throw input_error("symplectic_iso_check requires n >= 1, d >= 2");
    CheckReport rep;
    UEARules uea(symplectic_super(n));
    const AlgebraPtr& palg = uea.algebra();
    WeylRules weyl(0, 2 * n);
    size_t N = 2 * static_cast<size_t>(n);

    // phi on symbols: X at index i -> M at index i; Y at index i -> H at (i+n mod 2n).
    auto map_word = [&](const Word& w) {
        Word out;
        for (const Sym& s : w) {
            uint32_t g =
                s.kind == SymKind::M ? s.gen : static_cast<uint32_t>((s.gen + n) % N);
            out.push_back(Sym{s.kind, g});
        }
        return out;
    };
    auto map_poly = [&](const NCPoly& p) {
        NCPoly out = NCPoly::zero(palg);
        for (const auto& [w, c] : p.terms()) out.add_term(map_word(w), c);
        return out;
    };

    auto rels = weyl.defining_relations();
    rep.info.push_back("relations checked: " + std::to_string(rels.size()));
    for (size_t r = 0; r < rels.size(); ++r) {
        NCPoly image = normalize(uea, map_poly(rels[r]));
        if (!image.is_zero()) {
            rep.pass = false;
            rep.detail = "relation " + std::to_string(r) + " maps to " + ncpoly_str(image);
            return rep;
        }
    }

    // Basis bijection within total degree `degree`.
    auto weyl_basis = pbw_basis_total(weyl.algebra(), degree);
    std::set<Word> images;
    for (const auto& b : weyl_basis) {
        NCPoly image =
            normalize(uea, map_poly(NCPoly::from_word(weyl.algebra(), pbw_to_word(b))));
        if (image.terms().size() != 1) {
            rep.pass = false;
            rep.detail = "basis image is not a single normal monomial: " +
                         word_str(pbw_to_word(b), *weyl.algebra(), SymStyle::Weyl);
            return rep;
        }
        const auto& [w, c] = *image.terms().begin();
        if (!(c == 1 || c == -1)) {
            rep.pass = false;
            rep.detail = "basis image has coefficient " + coeff_str(c);
            return rep;
        }
        if (!images.insert(w).second) {
            rep.pass = false;
            rep.detail = "basis images collide at " + word_str(w, *palg, SymStyle::MH);
            return rep;
        }
    }
    size_t target = pbw_basis_total(palg, degree).size();
    rep.info.push_back("basis count both sides: " + std::to_string(weyl_basis.size()));
    if (images.size() != weyl_basis.size() || weyl_basis.size() != target) {
        rep.pass = false;
        rep.detail = "basis counts differ: " + std::to_string(weyl_basis.size()) + " vs " +
                     std::to_string(target);
    }
    return rep;
}

namespace {

void require_parities(const AlgebraPtr& alg, const StructureConstants& C, Parity want,
                      const char* what) {
    if (alg->size() != C.n()) throw input_error("algebra size does not match structure constants");
    for (size_t i = 0; i < alg->size(); ++i)
        if (alg->gen(i).parity != want)
            throw parity_error(std::string(what) + " requires all generators " + parity_name(want));
}

}  // namespace

std::vector<NCPoly> present_quadratic(const AlgebraPtr& alg, const StructureConstants& C) {
    require_parities(alg, C, Parity::Even, "present_quadratic");
    size_t n = C.n();
    auto M = [&](size_t i) { return NCPoly::symbol(alg, SymKind::M, i); };
    auto H = [&](size_t i) { return NCPoly::symbol(alg, SymKind::H, i); };
    std::vector<NCPoly> rels;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) rels.push_back(M(i) * M(j) - M(j) * M(i));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly r = H(i) * M(j) - M(j) * H(i);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    r = r - (M(k) * M(l)).scaled(C.at(i, j, k, l));
            rels.push_back(r);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            NCPoly r = H(i) * H(j) - H(j) * H(i);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    r = r - (M(k) * H(l) + M(l) * H(k)).scaled(C.at(i, j, k, l));
            rels.push_back(r);
        }
    return rels;
}

std::vector<NCPoly> present_exterior(const AlgebraPtr& alg, const StructureConstants& C) {
    require_parities(alg, C, Parity::Odd, "present_exterior");
    size_t n = C.n();
    auto M = [&](size_t i) { return NCPoly::symbol(alg, SymKind::M, i); };
    auto H = [&](size_t i) { return NCPoly::symbol(alg, SymKind::H, i); };
    std::vector<NCPoly> rels;
    for (size_t k = 0; k < n; ++k)
        for (size_t l = k; l < n; ++l) rels.push_back(M(k) * M(l) + M(l) * M(k));
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
            NCPoly r = H(k) * M(l) + M(l) * H(k);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    r = r - (M(j) * M(i)).scaled(C.at(i, j, k, l));
            rels.push_back(r);
        }
    for (size_t k = 0; k < n; ++k)
        for (size_t l = k; l < n; ++l) {
            NCPoly r = H(k) * H(l) + H(l) * H(k);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    r = r - (M(j) * H(i) - M(i) * H(j)).scaled(C.at(i, j, k, l));
            rels.push_back(r);
        }
    return rels;
}

NCPoly opposite_uea(const NCPoly& p) {
    const AlgebraPtr& alg = p.algebra();
    NCPoly out = NCPoly::zero(alg);
    for (const auto& [w, c] : p.terms()) {
        unsigned odd = 0, hs = 0;
        for (const Sym& s : w) {
            if (is_odd(sym_parity(s, *alg))) ++odd;
            if (s.kind == SymKind::H) ++hs;
        }
        // Koszul sign of full reversal plus one -1 per h symbol.
        bool neg = ((odd * (odd - 1) / 2) + hs) % 2 != 0;
        Word rev(w.rbegin(), w.rend());
        out.add_term(rev, neg ? -c : c);
    }
    return out;
}

NCPoly uea_functor(const BracketTable& src, const BracketTable& dst,
                   const std::vector<Poly>& images, const NCPoly& p) {
    const AlgebraPtr& salg = src.algebra();
    const AlgebraPtr& dalg = dst.algebra();
    require_same_algebra(*salg, *p.algebra());
    if (images.size() != salg->size())
        throw input_error("uea_functor needs one image per generator");
    for (size_t i = 0; i < images.size(); ++i)
        if (!images[i].parity_is(salg->gen(i).parity))
            throw not_poisson_error("image of " + salg->gen(i).name + " changes parity");
    // Bracket compatibility on generator pairs.
    for (size_t i = 0; i < salg->size(); ++i)
        for (size_t j = 0; j < salg->size(); ++j) {
            Poly lhs = substitute(src.entry(i, j), dalg, images);
            Poly rhs = dst.bracket(images[i], images[j]);
            if (!(lhs == rhs))
                throw not_poisson_error("generator map is not a super Poisson homomorphism at {" +
                                        salg->gen(i).name + "," + salg->gen(j).name + "}");
        }
    NCPoly out = NCPoly::zero(dalg);
    for (const auto& [w, c] : p.terms()) {
        NCPoly term = NCPoly::constant(dalg, c);
        for (const Sym& s : w)
            term = term * embed(images[s.gen], s.kind == SymKind::M ? SymKind::M : SymKind::H);
        out = out + term;
    }
    return out;
}

std::string sym_str(const Sym& s, const Algebra& alg, SymStyle style) {
    if (style == SymStyle::Weyl) {
        std::string suffix = std::to_string(s.gen + 1);
        return (s.kind == SymKind::M ? "X" : "Y") + suffix;
    }
    return (s.kind == SymKind::M ? std::string("m(") : std::string("h(")) + alg.gen(s.gen).name +
           ")";
}

std::string word_str(const Word& w, const Algebra& alg, SymStyle style) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        os << sym_str(w[i], alg, style);
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

std::string ncpoly_str(const NCPoly& p, SymStyle style) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Word, Rational>*> order;
    for (const auto& t : p.terms()) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        if (a->first.size() != b->first.size()) return a->first.size() > b->first.size();
        return a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        if (!first) os << " + ";
        if (t->first.empty())
            os << coeff_str(t->second);
        else
            os << coeff_str(t->second) << " " << word_str(t->first, *p.algebra(), style);
        first = false;
    }
    return os.str();
}

}  // namespace psalg
