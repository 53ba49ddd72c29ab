#include "hodgeforge/elsv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hodgeforge/combinatorics.hpp"

namespace hodgeforge {

namespace {

long stratum_dim(int g, int l) { return 3L * g - 3 + l; }

void check_monodromy(int r, const std::vector<int>& kL, const char* what) {
    if (r < 1) throw std::domain_error(std::string(what) + ": modulus < 1");
    long sum = 0;
    for (int k : kL) {
        if (k < 0 || k >= r) throw std::domain_error(std::string(what) + ": residue outside [0, r)");
        sum += k;
    }
    if (sum % r != 0) throw std::domain_error(std::string(what) + ": unbalanced monodromy vector");
}

// Coefficients in mu of binom(q, n) with q = (mu - m0)/r, as a dense vector
// indexed by the mu-power. Signed Stirling numbers expand the falling factorial.
std::vector<Rational> binom_in_mu(long n, long m0, int r) {
    // falling(q, n) = prod_{t=0}^{n-1} (q - t), expanded in powers of q
    std::vector<Rational> acc = {Rational(1)};
    for (long t = 0; t < n; ++t) {
        std::vector<Rational> next(acc.size() + 1);
        for (size_t a = 0; a < acc.size(); ++a) {
            next[a + 1] += acc[a];
            next[a] -= Rational(t) * acc[a];
        }
        acc = std::move(next);
    }
    const Rational inv_nfact = Rational(1) / Rational(factorial(n));

    std::vector<Rational> out(n + 1);
    // q^a = r^{-a} (mu - m0)^a
    for (long a = 0; a < static_cast<long>(acc.size()); ++a) {
        if (acc[a].is_zero()) continue;
        const Rational scale = acc[a] * inv_nfact * Rational(BigInt(1), BigInt(r).pow(a));
        for (long w = 0; w <= a; ++w)
            out[w] += scale * Rational(binomial(a, w)) * Rational(-m0).pow(a - w);
    }
    return out;
}

using Multi = std::vector<long>;

struct MultiLess {
    bool operator()(const Multi& a, const Multi& b) const { return a < b; }
};

std::vector<Multi> simplex_points(int l, long D) {
    std::vector<Multi> pts;
    Multi cur(l, 0);
    std::function<void(int, long)> rec = [&](int v, long left) {
        if (v == l) {
            pts.push_back(cur);
            return;
        }
        for (long q = 0; q <= left; ++q) {
            cur[v] = q;
            rec(v + 1, left - q);
        }
        cur[v] = 0;
    };
    rec(0, D);
    return pts;
}

}  // namespace

long rank_eu(int g, int r, const std::vector<int>& kL) {
    check_monodromy(r, kL, "rank_eu");
    if (g < 0) throw std::domain_error("rank_eu: negative genus");
    const long sum = std::accumulate(kL.begin(), kL.end(), 0L);
    if (sum == 0) return g;
    return g - 1 + sum / r;
}

Rational elsv_prefactor(int g, int r, const Composition& mu) {
    check_composition(mu);
    if (r < 1) throw std::domain_error("elsv_prefactor: modulus < 1");
    long frac_sum = 0;
    for (long p : mu) frac_sum += p % r;
    if (frac_sum % r != 0)
        throw std::domain_error("elsv_prefactor: fractional r-power does not resolve");
    const long exponent = 1 - g + frac_sum / r;

    Rational out = Rational(r).pow(exponent);
    for (long p : mu) {
        const long q = p / r;
        out *= Rational(BigInt(p).pow(q), factorial(q));
    }
    return out;
}

const HodgeBlock& HodgeBridge::block(int g, int r, int l, const std::vector<int>& kL) {
    const auto key = std::make_tuple(g, r, l, kL);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = blocks_.find(key);
        if (it != blocks_.end()) return it->second;
    }
    HodgeBlock computed = fit_block(g, r, l, kL);
    std::lock_guard<std::mutex> lock(mutex_);
    return blocks_.emplace(key, std::move(computed)).first->second;
}

HodgeBlock HodgeBridge::fit_block(int g, int r, int l, const std::vector<int>& kL) const {
    if (l < 1 || static_cast<int>(kL.size()) != l)
        throw std::domain_error("fit_block: bad marked-point count");
    check_monodromy(r, kL, "fit_block");
    const long D = stratum_dim(g, l);
    if (D < 0) throw std::domain_error("fit_block: unstable (g, l)");

    std::vector<long> m0(l);
    for (int i = 0; i < l; ++i) m0[i] = (kL[i] == 0) ? r : r - kL[i];

    auto profile = [&](const Multi& q) {
        Composition mu(l);
        for (int i = 0; i < l; ++i) mu[i] = m0[i] + r * q[i];
        return mu;
    };
    auto sample = [&](const Multi& q) {
        const Composition mu = profile(q);
        return engine_.reduced_hurwitz(g, r, mu) / elsv_prefactor(g, r, mu);
    };

    // mu-monomial coefficients of the fitted polynomial.
    std::map<Multi, Rational, MultiLess> coeffs;

    double tensor_cost = 1;
    for (int i = 0; i < l; ++i) tensor_cost *= static_cast<double>(D + 1);

    if (tensor_cost <= tensor_limit_) {
        // Full grid, one exact Vandermonde solve per line and per variable.
        std::map<Multi, Rational, MultiLess> data;
        Multi q(l, 0);
        std::function<void(int)> fill = [&](int v) {
            if (v == l) {
                data[q] = sample(q);
                return;
            }
            for (q[v] = 0; q[v] <= D; ++q[v]) fill(v + 1);
            q[v] = 0;
        };
        fill(0);

        for (int v = 0; v < l; ++v) {
            std::vector<std::vector<Rational>> basis(D + 1);
            for (long n = 0; n <= D; ++n) basis[n] = binom_in_mu(n, m0[v], r);

            auto value_or_zero = [&data](const Multi& q_) {
                auto it = data.find(q_);
                return it == data.end() ? Rational(0) : it->second;
            };
            std::map<Multi, Rational, MultiLess> next;
            Multi line(l, 0);
            std::function<void(int)> lines = [&](int u) {
                if (u == l) {
                    if (line[v] != 0) return;
                    std::vector<Rational> values(D + 1);
                    Multi probe = line;
                    for (long t = 0; t <= D; ++t) {
                        probe[v] = t;
                        values[t] = value_or_zero(probe);
                    }
                    // Forward differences, then expand the binomial basis.
                    std::vector<Rational> delta = values;
                    for (long n = 1; n <= D; ++n)
                        for (long t = D; t >= n; --t) delta[t] -= delta[t - 1];
                    std::vector<Rational> out(D + 1);
                    for (long n = 0; n <= D; ++n) {
                        if (delta[n].is_zero()) continue;
                        for (long w = 0; w <= n; ++w) out[w] += delta[n] * basis[n][w];
                    }
                    for (long w = 0; w <= D; ++w) {
                        if (out[w].is_zero()) continue;
                        probe[v] = w;
                        next[probe] = out[w];
                    }
                    return;
                }
                for (line[u] = 0; line[u] <= D; ++line[u]) lines(u + 1);
                line[u] = 0;
            };
            lines(0);
            data = std::move(next);
        }
        for (auto& [w, c] : data)
            if (!c.is_zero()) coeffs[w] = c;
    } else {
        // Total-degree lattice {|q| <= D} with multivariate forward differences.
        const auto pts = simplex_points(l, D);
        std::map<Multi, Rational, MultiLess> values;
        for (const auto& q : pts) values[q] = sample(q);

        std::map<Multi, Rational, MultiLess> delta;
        for (const auto& b : pts) {
            Rational acc(0);
            Multi j(l, 0);
            std::function<void(int, long, const Rational&)> rec = [&](int v, long parity,
                                                                      const Rational& w) {
                if (v == l) {
                    const Rational term = w * values.at(j);
                    acc += (parity % 2 == 0) ? term : -term;
                    return;
                }
                for (j[v] = 0; j[v] <= b[v]; ++j[v])
                    rec(v + 1, parity + (b[v] - j[v]), w * Rational(binomial(b[v], j[v])));
                j[v] = 0;
            };
            rec(0, 0, Rational(1));
            if (!acc.is_zero()) delta[b] = acc;
        }

        std::vector<std::vector<std::vector<Rational>>> basis(l);
        for (int v = 0; v < l; ++v) {
            basis[v].resize(D + 1);
            for (long n = 0; n <= D; ++n) basis[v][n] = binom_in_mu(n, m0[v], r);
        }
        for (const auto& [n_vec, dv] : delta) {
            Multi w(l, 0);
            std::function<void(int, const Rational&)> expand = [&](int v, const Rational& acc) {
                if (v == l) {
                    auto [it, fresh] = coeffs.emplace(w, acc);
                    if (!fresh) {
                        it->second += acc;
                        if (it->second.is_zero()) coeffs.erase(it);
                    }
                    return;
                }
                const auto& poly = basis[v][n_vec[v]];
                for (w[v] = 0; w[v] < static_cast<long>(poly.size()); ++w[v]) {
                    if (poly[w[v]].is_zero()) continue;
                    expand(v + 1, acc * poly[w[v]]);
                }
                w[v] = 0;
            };
            expand(0, dv);
        }
    }

    // One off-grid sample must be reproduced exactly.
    {
        Multi q_off(l, 0);
        q_off[0] = D + 1;
        const Composition mu = profile(q_off);
        Rational fitted(0);
        for (const auto& [w, c] : coeffs) {
            Rational term = c;
            for (int v = 0; v < l; ++v) term *= Rational(mu[v]).pow(w[v]);
            fitted += term;
        }
        if (fitted != sample(q_off))
            throw std::logic_error("fit_block: off-grid verification failed");
    }

    const long rank = rank_eu(g, r, kL);
    HodgeBlock out;
    out.g = g;
    out.r = r;
    out.k = kL;

    // Stray coefficients outside the stratum bounds signal a convention bug.
    for (const auto& [w, c] : coeffs) {
        const long total = std::accumulate(w.begin(), w.end(), 0L);
        if (total > D || D - total > rank)
            throw std::logic_error("fit_block: coefficient outside the admissible strata");
    }

    // Record every key on the stratum, including exact zeros.
    for (long j = 0; j <= rank; ++j) {
        const long btotal = D - j;
        if (btotal < 0) continue;
        const Rational scale = Rational(1) / Rational(-r).pow(j);
        Multi b(l, 0);
        std::function<void(int, long)> emit = [&](int v, long left) {
            if (v == l) {
                if (left != 0) return;
                auto it = coeffs.find(b);
                out.entries[{b, static_cast<int>(j)}] =
                    (it == coeffs.end()) ? Rational(0) : it->second * scale;
                return;
            }
            for (b[v] = 0; b[v] <= left; ++b[v]) emit(v + 1, left - b[v]);
            b[v] = 0;
        };
        emit(0, btotal);
    }
    return out;
}

Rational HodgeBridge::integral(const HodgeIntegralKey& key_in) {
    const HodgeIntegralKey key = key_in.canonical();
    const int l = static_cast<int>(key.b.size());
    if (l < 1 || key.b.size() != key.k.size())
        throw std::domain_error("HodgeBridge::integral: malformed key");
    check_monodromy(key.r, key.k, "HodgeBridge::integral");
    const long D = stratum_dim(key.g, l);
    if (D < 0) return Rational(0);
    long btotal = 0;
    for (long v : key.b) {
        if (v < 0) return Rational(0);
        btotal += v;
    }
    if (key.j < 0 || btotal + key.j != D) return Rational(0);
    if (key.j > rank_eu(key.g, key.r, key.k)) return Rational(0);
    return block(key.g, key.r, l, key.k).value(key.b, key.j);
}

Rational HodgeBridge::lambda_resolved(int g, int r, const DescendentVector& b,
                                      const std::vector<int>& kL) {
    const long D = stratum_dim(g, static_cast<int>(b.size()));
    long btotal = 0;
    for (long v : b) btotal += v;
    const long j = D - btotal;
    if (j < 0) return Rational(0);
    HodgeIntegralKey key{g, r, b, kL, static_cast<int>(j)};
    Rational base = integral(key);
    if (base.is_zero()) return base;
    return Rational(-r).pow(j) * base;
}

}  // namespace hodgeforge
