#include "hodgeforge/laplace.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "hodgeforge/combinatorics.hpp"
#include "hodgeforge/recursions.hpp"
#include "hodgeforge/xi.hpp"

namespace hodgeforge {

namespace {

long vsum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }
long vsum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

std::vector<std::vector<int>> residue_vectors(int r, int len, bool balanced_only) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == len) {
            if (!balanced_only || vsum(cur) % r == 0) out.push_back(cur);
            return;
        }
        for (cur[pos] = 0; cur[pos] < r; ++cur[pos]) rec(pos + 1);
        cur[pos] = 0;
    };
    rec(0);
    return out;
}

std::vector<std::vector<long>> bounded_vectors(int len, long sum_max) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(len, 0);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == len) {
            out.push_back(cur);
            return;
        }
        for (cur[pos] = 0; cur[pos] <= left; ++cur[pos]) rec(pos + 1, left - cur[pos]);
        cur[pos] = 0;
    };
    rec(0, std::max<long>(0, sum_max));
    return out;
}

// Drops the series' r^(1/r)-grade; used where an r^{|k|/r}-prefactor cancels
// it exactly, so the flattened series is the graded product.
ESeries flatten(const ESeries& s) {
    ESeries out(s.modulus(), 0);
    for (const auto& [m, c] : s.terms()) out.add_term(m, c);
    return out;
}

// Dense multivariate truncated power series over a box.
struct XBox {
    std::vector<long> dims;
    std::vector<Rational> data;

    explicit XBox(std::vector<long> d) : dims(std::move(d)) {
        size_t n = 1;
        for (long b : dims) n *= static_cast<size_t>(b + 1);
        data.assign(n, Rational(0));
    }
    void add(const std::vector<long>& e, const Rational& c) {
        size_t idx = 0;
        for (size_t v = 0; v < dims.size(); ++v) {
            if (e[v] > dims[v]) return;
            idx = idx * (dims[v] + 1) + e[v];
        }
        data[idx] += c;
    }
    bool operator==(const XBox& o) const { return dims == o.dims && data == o.data; }
};

// x-expansion of eta^s with the r^{s/r} grade stripped:
// sum_n s (s + rn)^{n-1} / n! x^{s+rn}.
std::vector<Rational> eta_power_series(int r, long s, long order) {
    std::vector<Rational> out(order + 1);
    if (s == 0) {
        out[0] = Rational(1);
        return out;
    }
    for (long n = 0; s + r * n <= order; ++n) {
        const long base = s + r * n;
        out[base] = (n == 0) ? Rational(1)
                             : Rational(s) * Rational(BigInt(base).pow(n - 1), factorial(n));
    }
    return out;
}

std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 long order) {
    std::vector<Rational> out(order + 1);
    for (long i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// x-expansion of e_{s,N} = eta^s (1 - eta^r)^{-N}, grade stripped per s.
class EMonomialExpander {
public:
    EMonomialExpander(int r, long order) : r_(r), order_(order) {
        u_ = eta_power_series(r, r, order);
        for (auto& c : u_) c *= Rational(r);  // true eta^r carries one folded r
    }

    const std::vector<Rational>& expand(const EMonomial& m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        std::vector<Rational> res = eta_power_series(r_, m.s, order_);
        if (m.N != 0) res = series_mul(res, one_minus_u_pow(-m.N), order_);
        return cache_.emplace(m, std::move(res)).first->second;
    }

private:
    const std::vector<Rational>& one_minus_u_pow(long e) {
        auto it = pow_cache_.find(e);
        if (it != pow_cache_.end()) return it->second;
        std::vector<Rational> out(order_ + 1);
        out[0] = Rational(1);
        if (e > 0) {
            std::vector<Rational> base(order_ + 1);
            base[0] = Rational(1);
            for (long i = 0; i <= order_; ++i) base[i] -= (i == 0 ? Rational(0) : u_[i]);
            for (long t = 0; t < e; ++t) out = series_mul(out, base, order_);
        } else if (e < 0) {
            std::vector<Rational> upow(order_ + 1);
            upow[0] = Rational(1);
            for (long j = 1; r_ * j <= order_; ++j) {
                upow = series_mul(upow, u_, order_);
                const Rational w{binomial(-e - 1 + j, j)};
                for (long i = 0; i <= order_; ++i)
                    if (!upow[i].is_zero()) out[i] += w * upow[i];
            }
        }
        return pow_cache_.emplace(e, std::move(out)).first->second;
    }

    int r_;
    long order_;
    std::vector<Rational> u_;
    std::map<EMonomial, std::vector<Rational>> cache_;
    std::map<long, std::vector<Rational>> pow_cache_;
};

void expand_into_box(const MultiESeries& series, EMonomialExpander& ex, XBox& box) {
    const int r = series.modulus();
    const int l = series.vars();
    for (const auto& [mons, coeff] : series.terms()) {
        long gsum = 0;
        for (const auto& m : mons) gsum += m.s;
        if (gsum % r != 0) throw std::logic_error("laplace: fractional grade survived assembly");
        const Rational scale = coeff * Rational(r).pow(gsum / r);

        std::vector<const std::vector<Rational>*> uni(l);
        for (int v = 0; v < l; ++v) uni[v] = &ex.expand(mons[v]);

        std::vector<long> e(l, 0);
        std::function<void(int, const Rational&)> walk = [&](int v, const Rational& acc) {
            if (v == l) {
                box.add(e, acc);
                return;
            }
            for (e[v] = 0; e[v] <= box.dims[v]; ++e[v]) {
                const Rational& c = (*uni[v])[e[v]];
                if (c.is_zero()) continue;
                walk(v + 1, acc * c);
            }
            e[v] = 0;
        };
        walk(0, scale);
    }
}

}  // namespace

LaplaceReport verify_laplace_identity(int g, int l, int r, HodgeBridge& bridge) {
    if (g < 0 || l < 1 || r < 1) throw std::domain_error("verify_laplace_identity: bad arguments");
    const long dim = 3L * g - 3 + l;
    if (dim < 0) throw std::domain_error("verify_laplace_identity: unstable (g, l)");

    // Table lookups use the monodromy labels; the series assembly runs in the
    // kernel labels, which are dual per entry.
    auto table_value = [&](int gg, const DescendentVector& b, const std::vector<int>& kp) {
        std::vector<int> kt(kp.size());
        for (size_t i = 0; i < kp.size(); ++i) kt[i] = dual_residue(r, kp[i]);
        return bridge.lambda_resolved(gg, r, b, kt);
    };

    std::map<std::pair<int, long>, ESeries> xi_cache;
    auto xi_flat = [&](int k, long m) -> const ESeries& {
        const auto key = std::make_pair(k, m);
        auto it = xi_cache.find(key);
        if (it == xi_cache.end())
            it = xi_cache.emplace(key, flatten(xi_series(r, k, static_cast<int>(m)))).first;
        return it->second;
    };

    // All r^{...}-prefactors in the identity exactly cancel the r^{-k/r}
    // grades of the series they multiply, so every factor enters flattened.
    MultiESeries delta(r, l);
    const ESeries dress = ESeries::monomial(r, {0, -1}, Rational(1));

    // ---- left side ---------------------------------------------------------
    for (const auto& kp : residue_vectors(r, l, true)) {
        for (const auto& b : bounded_vectors(l, dim)) {
            const Rational v = table_value(g, b, kp);
            if (v.is_zero()) continue;

            std::vector<const ESeries*> plain(l);
            for (int i = 0; i < l; ++i) plain[i] = &xi_flat(kp[i], b[i]);
            delta.add_factored(plain, v * Rational(2 * g - 2 + l));

            for (int i = 0; i < l; ++i) {
                ESeries dressed = xi_flat(kp[i], b[i] + 1) * dress;
                std::vector<const ESeries*> factors = plain;
                factors[i] = &dressed;
                delta.add_factored(factors, v * Rational(1, r));
            }
        }
    }

    // ---- right side: join-kernel pairs -------------------------------------
    const long m_cap = dim - 1;  // m + |b''| <= 3g - 4 + l
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            std::vector<int> spectators;
            for (int t = 0; t < l; ++t)
                if (t != i && t != j) spectators.push_back(t);
            const int ns = static_cast<int>(spectators.size());

            for (const auto& kpp : residue_vectors(r, ns, false)) {
                const int a = static_cast<int>(((-vsum(kpp)) % r + r) % r);
                for (long m = 0; m <= m_cap; ++m) {
                    for (const auto& brest : bounded_vectors(ns, m_cap - m)) {
                        DescendentVector child_b{m};
                        std::vector<int> child_k{a};
                        for (int t = 0; t < ns; ++t) {
                            child_b.push_back(brest[t]);
                            child_k.push_back(kpp[t]);
                        }
                        const Rational v = table_value(g, child_b, child_k);
                        if (v.is_zero()) continue;

                        const BivariateESeries kernel = join_kernel_expansion(r, a, static_cast<int>(m));
                        std::vector<const ESeries*> spect(ns);
                        for (int t = 0; t < ns; ++t) spect[t] = &xi_flat(kpp[t], brest[t]);

                        std::vector<EMonomial> mons(l, EMonomial{0, 0});
                        for (const auto& [pairkey, kc] : kernel.terms()) {
                            mons[i] = pairkey.first;
                            mons[j] = pairkey.second;
                            std::function<void(int, const Rational&)> walk =
                                [&](int t, const Rational& acc) {
                                    if (t == ns) {
                                        delta.add_product(mons, -acc);
                                        return;
                                    }
                                    for (const auto& [mm, cc] : spect[t]->terms()) {
                                        mons[spectators[t]] = mm;
                                        walk(t + 1, acc * cc);
                                    }
                                };
                            walk(0, v * kc);
                        }
                    }
                }
            }
        }
    }

    // ---- right side: genus reduction and stable splittings ------------------
    for (int i = 0; i < l; ++i) {
        std::vector<int> spectators;
        for (int t = 0; t < l; ++t)
            if (t != i) spectators.push_back(t);
        const int ns = static_cast<int>(spectators.size());

        for (const auto& kpp : residue_vectors(r, ns, false)) {
            for (const auto& brest : bounded_vectors(ns, dim)) {
                std::vector<const ESeries*> spect(ns);
                for (int t = 0; t < ns; ++t) spect[t] = &xi_flat(kpp[t], brest[t]);

                auto subtract_with_kernel = [&](const ESeries& kern_i, const Rational& weight) {
                    std::vector<EMonomial> mons(l, EMonomial{0, 0});
                    for (const auto& [mi, ci] : kern_i.terms()) {
                        mons[i] = mi;
                        std::function<void(int, const Rational&)> walk = [&](int t,
                                                                             const Rational& acc) {
                            if (t == ns) {
                                delta.add_product(mons, -acc);
                                return;
                            }
                            for (const auto& [mm, cc] : spect[t]->terms()) {
                                mons[spectators[t]] = mm;
                                walk(t + 1, acc * cc);
                            }
                        };
                        walk(0, weight * ci);
                    }
                };

                if (g >= 1) {
                    const long cap = 3L * (g - 1) - 3 + (l + 1) - vsum(brest);
                    for (int a = 0; a < r; ++a) {
                        const int bres = static_cast<int>(((-(a + vsum(kpp))) % r + r) % r);
                        for (long m = 0; m <= cap; ++m) {
                            for (long n = 0; m + n <= cap; ++n) {
                                DescendentVector child_b{m, n};
                                std::vector<int> child_k{a, bres};
                                for (int t = 0; t < ns; ++t) {
                                    child_b.push_back(brest[t]);
                                    child_k.push_back(kpp[t]);
                                }
                                const Rational v = table_value(g - 1, child_b, child_k);
                                if (v.is_zero()) continue;
                                subtract_with_kernel(xi_flat(a, m + 1) * xi_flat(bres, n + 1),
                                                     v * Rational(r, 2));
                            }
                        }
                    }
                }

                for (int g1 = 0; g1 <= g; ++g1) {
                    const int g2 = g - g1;
                    for (unsigned mask = 0; mask < (1u << ns); ++mask) {
                        const int ni = __builtin_popcount(mask);
                        if (2 * g1 - 2 + ni + 1 <= 0 || 2 * g2 - 2 + (ns - ni) + 1 <= 0) continue;
                        DescendentVector bI, bJ;
                        std::vector<int> kI, kJ;
                        for (int t = 0; t < ns; ++t) {
                            if ((mask >> t) & 1u) {
                                bI.push_back(brest[t]);
                                kI.push_back(kpp[t]);
                            } else {
                                bJ.push_back(brest[t]);
                                kJ.push_back(kpp[t]);
                            }
                        }
                        const int a = static_cast<int>(((-vsum(kI)) % r + r) % r);
                        const int bres = static_cast<int>(((-vsum(kJ)) % r + r) % r);
                        const long capI = 3L * g1 - 2 + ni - vsum(bI);
                        const long capJ = 3L * g2 - 2 + (ns - ni) - vsum(bJ);
                        for (long m = 0; m <= capI; ++m) {
                            DescendentVector fb1{m};
                            std::vector<int> fk1{a};
                            fb1.insert(fb1.end(), bI.begin(), bI.end());
                            fk1.insert(fk1.end(), kI.begin(), kI.end());
                            const Rational v1 = table_value(g1, fb1, fk1);
                            if (v1.is_zero()) continue;
                            for (long n = 0; n <= capJ; ++n) {
                                DescendentVector fb2{n};
                                std::vector<int> fk2{bres};
                                fb2.insert(fb2.end(), bJ.begin(), bJ.end());
                                fk2.insert(fk2.end(), kJ.begin(), kJ.end());
                                const Rational v2 = table_value(g2, fb2, fk2);
                                if (v2.is_zero()) continue;
                                subtract_with_kernel(xi_flat(a, m + 1) * xi_flat(bres, n + 1),
                                                     v1 * v2 * Rational(r, 2));
                            }
                        }
                    }
                }
            }
        }
    }

    LaplaceReport report;
    report.boundary = (g == 1 && l == 1) || (g == 0 && l == 3);

    if (!report.boundary) {
        report.holds = delta.is_zero();
        return report;
    }

    // ---- unstable boundary --------------------------------------------------
    // The remaining difference must equal the transform of the genus-zero
    // two-point terms of the cut-and-join equation. Compare x-coefficients on
    // a box that strictly contains the stable side's numerator support.
    std::vector<long> nmax(l, 0);
    for (const auto& [mons, c] : delta.terms())
        for (int v = 0; v < l; ++v) nmax[v] = std::max(nmax[v], mons[v].N);
    std::vector<long> bounds(l, 0);
    for (const auto& [mons, c] : delta.terms())
        for (int v = 0; v < l; ++v)
            bounds[v] = std::max(bounds[v], mons[v].s + r * (nmax[v] - mons[v].N));
    for (auto& b : bounds) b += 2L * r;
    const long order = *std::max_element(bounds.begin(), bounds.end());

    EMonomialExpander expander(r, order);
    XBox lhs_box(bounds);
    expand_into_box(delta, expander, lhs_box);

    XBox rhs_box(bounds);
    // Each transform level carries a global r^{1-g}; relative to the stable
    // side (divided through by r^{1-g}) the genus-zero two-point data scales
    // by r^{g-1}.
    const Rational unstable_scale = Rational(r).pow(g - 1);
    auto h02 = [&](long alpha, long mpart) {
        return unstable_scale *
               bridge.engine().reduced_hurwitz(0, r, Composition{alpha, mpart});
    };

    if (g == 1 && l == 1) {
        // (1/2) sum alpha beta H_{0,2}(alpha, beta) x^{alpha+beta}
        for (long alpha = 1; alpha <= bounds[0]; ++alpha)
            for (long beta = 1; alpha + beta <= bounds[0]; ++beta) {
                const Rational h = h02(alpha, beta);
                if (!h.is_zero()) rhs_box.add({alpha + beta}, Rational(alpha * beta, 2) * h);
            }
    } else {
        // joins carrying two-point data
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) {
                const int q = 3 - i - j;
                for (long mm = 2; mm <= bounds[i] + bounds[j]; ++mm)
                    for (long n = 1; n <= bounds[q]; ++n) {
                        const Rational h = h02(mm, n);
                        if (h.is_zero()) continue;
                        const Rational w = Rational(mm) * h;
                        for (long ai = std::max(1L, mm - bounds[j]);
                             ai < mm && ai <= bounds[i]; ++ai) {
                            std::vector<long> e(l, 0);
                            e[i] = ai;
                            e[j] = mm - ai;
                            e[q] = n;
                            rhs_box.add(e, w);
                        }
                    }
            }
        // two-point x two-point splittings (one global scale, not one per factor)
        auto h02_raw = [&](long alpha, long mpart) {
            return bridge.engine().reduced_hurwitz(0, r, Composition{alpha, mpart});
        };
        for (int i = 0; i < l; ++i) {
            std::vector<int> others;
            for (int t = 0; t < l; ++t)
                if (t != i) others.push_back(t);
            for (int ord = 0; ord < 2; ++ord) {
                const int j = others[ord], q = others[1 - ord];
                for (long alpha = 1; alpha < bounds[i]; ++alpha)
                    for (long mj = 1; mj <= bounds[j]; ++mj) {
                        const Rational h1 = h02_raw(alpha, mj);
                        if (h1.is_zero()) continue;
                        for (long beta = 1; alpha + beta <= bounds[i]; ++beta)
                            for (long mq = 1; mq <= bounds[q]; ++mq) {
                                const Rational h2 = h02_raw(beta, mq);
                                if (h2.is_zero()) continue;
                                std::vector<long> e(l, 0);
                                e[i] = alpha + beta;
                                e[j] = mj;
                                e[q] = mq;
                                rhs_box.add(e, unstable_scale * Rational(alpha * beta, 2) * h1 * h2);
                            }
                    }
            }
        }
    }

    report.compared_coeffs = lhs_box.data.size();
    report.holds = (lhs_box == rhs_box);
    if (!report.holds && std::getenv("HF_LAPLACE_DEBUG")) {
        size_t shown = 0;
        std::vector<long> e(l, 0);
        for (size_t idx = 0; idx < lhs_box.data.size() && shown < 12; ++idx) {
            if (lhs_box.data[idx] == rhs_box.data[idx]) continue;
            size_t rem = idx;
            for (int v = l - 1; v >= 0; --v) {
                e[v] = rem % (bounds[v] + 1);
                rem /= (bounds[v] + 1);
            }
            fprintf(stderr, "mismatch at (");
            for (int v = 0; v < l; ++v) fprintf(stderr, "%ld%s", e[v], v + 1 < l ? "," : "");
            fprintf(stderr, "): stable=%s unstable=%s\n", lhs_box.data[idx].str().c_str(),
                    rhs_box.data[idx].str().c_str());
            ++shown;
        }
    }
    return report;
}

}  // namespace hodgeforge
