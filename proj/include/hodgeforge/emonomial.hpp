#ifndef HODGEFORGE_EMONOMIAL_HPP
#define HODGEFORGE_EMONOMIAL_HPP

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "hodgeforge/rational.hpp"

namespace hodgeforge {

// Index pair (s, N) for the monomial e_{s,N}(t) = (t^r - 1)^{s/r} t^{Nr - s}.
// In the eta variable, e_{s,N} = eta^s (1 - eta^r)^{-N}. Multiplication adds
// indices componentwise. The monomials are not independent across s-classes:
// e_{s+r,N} = e_{s,N} - e_{s,N-1}, so a canonical form keeps s in [0, r).
struct EMonomial {
    long s = 0;
    long N = 0;

    auto operator<=>(const EMonomial&) const = default;
};

// Sparse element of the graded e-monomial algebra at a fixed modulus r.
// rgrade counts net powers of r^{1/r} carried outside the coefficients.
class ESeries {
public:
    explicit ESeries(int r, long rgrade = 0) : r_(r), rgrade_(rgrade) {}

    static ESeries monomial(int r, EMonomial m, Rational coeff, long rgrade = 0) {
        ESeries s(r, rgrade);
        s.add_term(m, coeff);
        return s;
    }

    int modulus() const { return r_; }
    long rgrade() const { return rgrade_; }
    const std::map<EMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const EMonomial& m, const Rational& c);
    Rational coeff(const EMonomial& m) const;

    ESeries& operator+=(const ESeries& o);
    ESeries& operator-=(const ESeries& o);
    friend ESeries operator+(ESeries a, const ESeries& b) { return a += b; }
    friend ESeries operator-(ESeries a, const ESeries& b) { return a -= b; }
    friend ESeries operator*(const ESeries& a, const ESeries& b);
    ESeries scaled(const Rational& c) const;

    // Canonical form: every s reduced into [0, r) via
    // e_{s0+qr, N} = sum_u binom(q,u) (-1)^(q-u) e_{s0, N-q+u},
    // and rgrade reduced into [0, r) by folding r^q into the coefficients.
    ESeries normal_form() const;

    bool equal_normalized(const ESeries& o) const;

private:
    int r_;
    long rgrade_;
    std::map<EMonomial, Rational> terms_;
};

// The cut-and-join vector field t^(r+1)(t^r - 1) d/dt, extended linearly by
// e_{s,N} -> N r e_{s,N+2} - (N r - s) e_{s,N+1}.
ESeries apply_operator(const ESeries& f);

// Two-variable analog used by the join-kernel expansion.
class BivariateESeries {
public:
    explicit BivariateESeries(int r, long rgrade = 0) : r_(r), rgrade_(rgrade) {}

    int modulus() const { return r_; }
    long rgrade() const { return rgrade_; }
    const std::map<std::pair<EMonomial, EMonomial>, Rational>& terms() const { return terms_; }

    void add_term(const EMonomial& mi, const EMonomial& mj, const Rational& c);
    Rational coeff(const EMonomial& mi, const EMonomial& mj) const;

    BivariateESeries normal_form() const;

private:
    int r_;
    long rgrade_;
    std::map<std::pair<EMonomial, EMonomial>, Rational> terms_;
};

// l-variable series used when assembling multi-point identities. Terms are
// kept with every variable's s-index already reduced into [0, r) and the
// total r^(1/r)-grade folded away (contributions must arrive grade-0).
class MultiESeries {
public:
    MultiESeries(int r, int nvars) : r_(r), nvars_(nvars) {}

    int modulus() const { return r_; }
    int vars() const { return nvars_; }
    const std::map<std::vector<EMonomial>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * prod_v term_v, reducing each variable's s-index.
    void add_product(const std::vector<EMonomial>& monomials, const Rational& c);

    // Adds c * prod_v f_v(t_v); each factor must be a single-variable series
    // with rgrade 0 after the caller's grade bookkeeping.
    void add_factored(const std::vector<const ESeries*>& factors, const Rational& c);

    MultiESeries& operator-=(const MultiESeries& o);
    bool operator==(const MultiESeries& o) const { return r_ == o.r_ && terms_ == o.terms_; }

private:
    int r_;
    int nvars_;
    std::map<std::vector<EMonomial>, Rational> terms_;
};

// Coefficients of e_{s0+qr, N} in the canonical basis, as (s0, N', coeff).
std::vector<std::pair<EMonomial, Rational>> reduce_monomial(int r, const EMonomial& m);

}  // namespace hodgeforge

#endif
