#include "hodgeforge/emonomial.hpp"

#include <functional>
#include <stdexcept>

#include "hodgeforge/combinatorics.hpp"

namespace hodgeforge {

namespace {

void check_same(int ra, int rb, long ga, long gb, const char* what) {
    if (ra != rb) throw std::logic_error(std::string(what) + ": modulus mismatch");
    if (ga != gb) throw std::logic_error(std::string(what) + ": rgrade mismatch");
}

}  // namespace

void ESeries::add_term(const EMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational ESeries::coeff(const EMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

ESeries& ESeries::operator+=(const ESeries& o) {
    check_same(r_, o.r_, rgrade_, o.rgrade_, "ESeries::operator+=");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ESeries& ESeries::operator-=(const ESeries& o) {
    check_same(r_, o.r_, rgrade_, o.rgrade_, "ESeries::operator-=");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ESeries operator*(const ESeries& a, const ESeries& b) {
    if (a.r_ != b.r_) throw std::logic_error("ESeries::operator*: modulus mismatch");
    ESeries out(a.r_, a.rgrade_ + b.rgrade_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term({ma.s + mb.s, ma.N + mb.N}, ca * cb);
    return out;
}

ESeries ESeries::scaled(const Rational& c) const {
    ESeries out(r_, rgrade_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

std::vector<std::pair<EMonomial, Rational>> reduce_monomial(int r, const EMonomial& m) {
    if (m.s < 0) throw std::logic_error("reduce_monomial: negative s-index");
    const long q = m.s / r;
    const long s0 = m.s % r;
    std::vector<std::pair<EMonomial, Rational>> out;
    out.reserve(q + 1);
    if (q == 0) {
        out.emplace_back(m, Rational(1));
        return out;
    }
    for (long u = 0; u <= q; ++u) {
        Rational c(binomial(q, u));
        if ((q - u) % 2 != 0) c = -c;
        out.emplace_back(EMonomial{s0, m.N - q + u}, c);
    }
    return out;
}

ESeries ESeries::normal_form() const {
    long g = rgrade_ % r_;
    if (g < 0) g += r_;
    const long folded = (rgrade_ - g) / r_;
    Rational scale = Rational(r_).pow(folded);

    ESeries out(r_, g);
    for (const auto& [m, c] : terms_)
        for (const auto& [m2, c2] : reduce_monomial(r_, m)) out.add_term(m2, c * c2 * scale);
    return out;
}

bool ESeries::equal_normalized(const ESeries& o) const {
    if (r_ != o.r_) return false;
    const ESeries a = normal_form();
    const ESeries b = o.normal_form();
    return a.rgrade() == b.rgrade() && a.terms() == b.terms();
}

ESeries apply_operator(const ESeries& f) {
    ESeries out(f.modulus(), f.rgrade());
    const long r = f.modulus();
    for (const auto& [m, c] : f.terms()) {
        const Rational top = Rational(m.N * r) * c;
        const Rational low = Rational(m.N * r - m.s) * c;
        out.add_term({m.s, m.N + 2}, top);
        out.add_term({m.s, m.N + 1}, -low);
    }
    return out;
}

void BivariateESeries::add_term(const EMonomial& mi, const EMonomial& mj, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(mi, mj);
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational BivariateESeries::coeff(const EMonomial& mi, const EMonomial& mj) const {
    auto it = terms_.find(std::make_pair(mi, mj));
    return it == terms_.end() ? Rational(0) : it->second;
}

BivariateESeries BivariateESeries::normal_form() const {
    long g = rgrade_ % r_;
    if (g < 0) g += r_;
    const long folded = (rgrade_ - g) / r_;
    Rational scale = Rational(r_).pow(folded);

    BivariateESeries out(r_, g);
    for (const auto& [key, c] : terms_) {
        const auto ri = reduce_monomial(r_, key.first);
        const auto rj = reduce_monomial(r_, key.second);
        for (const auto& [mi, ci] : ri)
            for (const auto& [mj, cj] : rj) out.add_term(mi, mj, c * ci * cj * scale);
    }
    return out;
}

void MultiESeries::add_product(const std::vector<EMonomial>& monomials, const Rational& c) {
    if (static_cast<int>(monomials.size()) != nvars_)
        throw std::logic_error("MultiESeries::add_product: arity mismatch");
    if (c.is_zero()) return;

    std::vector<std::vector<std::pair<EMonomial, Rational>>> reduced;
    reduced.reserve(nvars_);
    for (const auto& m : monomials) reduced.push_back(reduce_monomial(r_, m));

    std::vector<EMonomial> key(nvars_);
    std::vector<size_t> pick(nvars_, 0);
    while (true) {
        Rational term = c;
        for (int v = 0; v < nvars_; ++v) {
            key[v] = reduced[v][pick[v]].first;
            term *= reduced[v][pick[v]].second;
        }
        auto [it, fresh] = terms_.emplace(key, term);
        if (!fresh) {
            it->second += term;
            if (it->second.is_zero()) terms_.erase(it);
        }
        int v = nvars_ - 1;
        while (v >= 0 && ++pick[v] == reduced[v].size()) pick[v--] = 0;
        if (v < 0) break;
    }
}

void MultiESeries::add_factored(const std::vector<const ESeries*>& factors, const Rational& c) {
    if (static_cast<int>(factors.size()) != nvars_)
        throw std::logic_error("MultiESeries::add_factored: arity mismatch");
    if (c.is_zero()) return;

    std::vector<EMonomial> key(nvars_);
    std::function<void(int, const Rational&)> walk = [&](int v, const Rational& acc) {
        if (v == nvars_) {
            add_product(key, acc);
            return;
        }
        for (const auto& [m, cv] : factors[v]->terms()) {
            key[v] = m;
            walk(v + 1, acc * cv);
        }
    };
    walk(0, c);
}

MultiESeries& MultiESeries::operator-=(const MultiESeries& o) {
    if (r_ != o.r_ || nvars_ != o.nvars_)
        throw std::logic_error("MultiESeries::operator-=: shape mismatch");
    for (const auto& [k, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(k, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

}  // namespace hodgeforge
