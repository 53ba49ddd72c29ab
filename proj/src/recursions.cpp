#include "hodgeforge/recursions.hpp"

#include <algorithm>
#include <numeric>

#include "hodgeforge/combinatorics.hpp"
#include "hodgeforge/xi.hpp"

namespace hodgeforge {

namespace {

long sum_of(const DescendentVector& b) { return std::accumulate(b.begin(), b.end(), 0L); }
long sum_of(const std::vector<int>& k) { return std::accumulate(k.begin(), k.end(), 0L); }

bool moduli_stable(int g, int l) { return 2 * g - 2 + l > 0; }

int max_pivot(const DescendentVector& b) {
    int best = -1;
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] >= 1 && (best < 0 || b[i] > b[best])) best = static_cast<int>(i);
    return best;
}

Rational dfact_ratio(long m, long n, long b1) {
    return Rational(double_factorial(2 * m + 1) * double_factorial(2 * n + 1),
                    double_factorial(2 * b1 + 1));
}

}  // namespace

int dual_residue(int r, int k) { return k == 0 ? 0 : r - k; }

Rational WittenDVV::tau(int g, const DescendentVector& b) {
    const int l = static_cast<int>(b.size());
    if (l < 1 || g < 0) throw std::domain_error("WittenDVV::tau: bad arguments");
    for (long v : b)
        if (v < 0) return Rational(0);
    if (sum_of(b) != 3L * g - 3 + l) return Rational(0);
    if (!moduli_stable(g, l)) return Rational(0);

    DescendentVector key_b = b;
    std::sort(key_b.begin(), key_b.end(), std::greater<long>());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find({g, key_b});
        if (it != memo_.end()) return it->second;
    }

    Rational value;
    const int pivot = max_pivot(key_b);
    if (pivot < 0) {
        // all-zero descendents: only <tau_0^3>_0 is on-stratum
        value = bridge_.integral({0, 1, key_b, std::vector<int>(l, 0), 0});
    } else if (g == 1 && l == 1) {
        // every sum in the recursion is empty for <tau_1>_1
        value = bridge_.integral({1, 1, {1}, {0}, 0});
    } else {
        value = expand(g, key_b, pivot);
    }

    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(std::make_pair(g, key_b), value);
    return value;
}

Rational WittenDVV::tau_with_pivot(int g, const DescendentVector& b, int pivot) {
    if (pivot < 0 || pivot >= static_cast<int>(b.size()) || b[pivot] < 1)
        throw std::domain_error("WittenDVV::tau_with_pivot: inadmissible pivot");
    if (sum_of(b) != 3L * g - 3 + static_cast<int>(b.size())) return Rational(0);
    if (g == 1 && b.size() == 1) return tau(g, b);
    return expand(g, b, pivot);
}

Rational WittenDVV::expand(int g, const DescendentVector& b, int pivot) {
    const int l = static_cast<int>(b.size());
    const long b1 = b[pivot];
    DescendentVector rest;
    rest.reserve(l - 1);
    for (int i = 0; i < l; ++i)
        if (i != pivot) rest.push_back(b[i]);

    Rational acc(0);

    // join terms
    for (size_t j = 0; j < rest.size(); ++j) {
        const long bj = rest[j];
        Rational coeff(double_factorial(2 * b1 + 2 * bj - 1),
                       double_factorial(2 * b1 + 1) * double_factorial(2 * bj - 1));
        DescendentVector merged;
        merged.reserve(l - 1);
        merged.push_back(b1 + bj - 1);
        for (size_t t = 0; t < rest.size(); ++t)
            if (t != j) merged.push_back(rest[t]);
        acc += coeff * tau(g, merged);
    }

    // genus reduction and stable splittings share the m + n = b1 - 2 binding
    Rational half_sum(0);
    for (long m = 0; m <= b1 - 2; ++m) {
        const long n = b1 - 2 - m;
        const Rational ratio = dfact_ratio(m, n, b1);

        if (g >= 1) {
            DescendentVector child;
            child.reserve(l + 1);
            child.push_back(m);
            child.push_back(n);
            child.insert(child.end(), rest.begin(), rest.end());
            half_sum += ratio * tau(g - 1, child);
        }

        const int nrest = static_cast<int>(rest.size());
        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            for (unsigned mask = 0; mask < (1u << nrest); ++mask) {
                const int ni = __builtin_popcount(mask);
                if (!moduli_stable(g1, ni + 1) || !moduli_stable(g2, nrest - ni + 1)) continue;
                DescendentVector left, right;
                left.push_back(m);
                right.push_back(n);
                for (int t = 0; t < nrest; ++t)
                    ((mask >> t) & 1u ? left : right).push_back(rest[t]);
                const Rational f1 = tau(g1, left);
                if (f1.is_zero()) continue;
                const Rational f2 = tau(g2, right);
                if (f2.is_zero()) continue;
                half_sum += ratio * f1 * f2;
            }
        }
    }
    acc += half_sum * Rational(1, 2);
    return acc;
}

Rational OrbifoldDVV::tau(int g, int r, const DescendentVector& b, const std::vector<int>& k) {
    const int l = static_cast<int>(b.size());
    if (l < 1 || g < 0 || k.size() != b.size())
        throw std::domain_error("OrbifoldDVV::tau: bad arguments");
    for (int ki : k)
        if (ki < 0 || ki >= r) throw std::domain_error("OrbifoldDVV::tau: residue outside [0, r)");
    if (sum_of(k) % r != 0) throw std::domain_error("OrbifoldDVV::tau: unbalanced monodromy");
    for (long v : b)
        if (v < 0) return Rational(0);
    if (sum_of(b) != 3L * g - 3 + l) return Rational(0);
    if (!moduli_stable(g, l)) return Rational(0);

    std::vector<std::pair<int, long>> pairs(l);
    for (int i = 0; i < l; ++i) pairs[i] = {k[i], b[i]};
    std::sort(pairs.begin(), pairs.end());
    const auto key = std::make_tuple(g, r, pairs);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    DescendentVector cb(l);
    std::vector<int> ck(l);
    for (int i = 0; i < l; ++i) {
        ck[i] = pairs[i].first;
        cb[i] = pairs[i].second;
    }

    Rational value;
    const int pivot = max_pivot(cb);
    if (pivot < 0 || (g == 1 && l == 1)) {
        const long j = 0;
        value = bridge_.integral({g, r, cb, ck, static_cast<int>(j)});
    } else {
        value = expand(g, r, cb, ck, pivot);
    }

    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, value);
    return value;
}

Rational OrbifoldDVV::tau_with_pivot(int g, int r, const DescendentVector& b,
                                     const std::vector<int>& k, int pivot) {
    if (pivot < 0 || pivot >= static_cast<int>(b.size()) || b[pivot] < 1)
        throw std::domain_error("OrbifoldDVV::tau_with_pivot: inadmissible pivot");
    if (sum_of(b) != 3L * g - 3 + static_cast<int>(b.size())) return Rational(0);
    if (g == 1 && b.size() == 1) return tau(g, r, b, k);
    return expand(g, r, b, k, pivot);
}

Rational OrbifoldDVV::expand(int g, int r, const DescendentVector& b, const std::vector<int>& k,
                             int pivot) {
    const int l = static_cast<int>(b.size());
    const long b1 = b[pivot];
    const int k1 = k[pivot];
    DescendentVector rest_b;
    std::vector<int> rest_k;
    for (int i = 0; i < l; ++i) {
        if (i == pivot) continue;
        rest_b.push_back(b[i]);
        rest_k.push_back(k[i]);
    }
    const int nrest = static_cast<int>(rest_b.size());

    Rational acc(0);

    // join terms: r * C / (c_{b1+1,b1+1} c_{bj,bj}) with the kernel constant
    // extracted at the dual residues
    const Rational c_b1 = Rational(xi_c_top(r, b1 + 1));
    for (int j = 0; j < nrest; ++j) {
        const long bj = rest_b[j];
        const int kj = rest_k[j];
        const Rational cj = Rational(xi_c_top(r, bj));
        const Rational joinC =
            join_constant(r, dual_residue(r, k1), dual_residue(r, kj), b1, bj);
        if (joinC.is_zero()) continue;

        DescendentVector merged_b;
        std::vector<int> merged_k;
        merged_b.push_back(b1 + bj - 1);
        merged_k.push_back((k1 + kj) % r);
        for (int t = 0; t < nrest; ++t) {
            if (t == j) continue;
            merged_b.push_back(rest_b[t]);
            merged_k.push_back(rest_k[t]);
        }
        acc += Rational(r) * joinC / (c_b1 * cj) * tau(g, r, merged_b, merged_k);
    }

    // genus reduction and stable splittings; (r^2/2) c^a c^b / c^{k1} reduces
    // to (r/2) (2m+1)!!(2n+1)!!/(2b1+1)!! since the top coefficients carry r^m
    Rational half_sum(0);
    for (long m = 0; m <= b1 - 2; ++m) {
        const long n = b1 - 2 - m;
        const Rational ratio = dfact_ratio(m, n, b1);

        if (g >= 1) {
            for (int a = 0; a < r; ++a) {
                const int bb = ((k1 - a) % r + r) % r;
                DescendentVector child_b;
                std::vector<int> child_k;
                child_b.push_back(m);
                child_b.push_back(n);
                child_k.push_back(a);
                child_k.push_back(bb);
                child_b.insert(child_b.end(), rest_b.begin(), rest_b.end());
                child_k.insert(child_k.end(), rest_k.begin(), rest_k.end());
                half_sum += ratio * tau(g - 1, r, child_b, child_k);
            }
        }

        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            for (unsigned mask = 0; mask < (1u << nrest); ++mask) {
                const int ni = __builtin_popcount(mask);
                if (!moduli_stable(g1, ni + 1) || !moduli_stable(g2, nrest - ni + 1)) continue;
                DescendentVector left_b{m}, right_b{n};
                std::vector<int> left_k{0}, right_k{0};
                long ksum_left = 0, ksum_right = 0;
                for (int t = 0; t < nrest; ++t) {
                    if ((mask >> t) & 1u) {
                        left_b.push_back(rest_b[t]);
                        left_k.push_back(rest_k[t]);
                        ksum_left += rest_k[t];
                    } else {
                        right_b.push_back(rest_b[t]);
                        right_k.push_back(rest_k[t]);
                        ksum_right += rest_k[t];
                    }
                }
                left_k[0] = static_cast<int>(((-ksum_left) % r + r) % r);
                right_k[0] = static_cast<int>(((-ksum_right) % r + r) % r);
                const Rational f1 = tau(g1, r, left_b, left_k);
                if (f1.is_zero()) continue;
                const Rational f2 = tau(g2, r, right_b, right_k);
                if (f2.is_zero()) continue;
                half_sum += ratio * f1 * f2;
            }
        }
    }
    acc += half_sum * Rational(r, 2);
    return acc;
}

Rational half_sine_quotient_coeff(int g) {
    if (g < 0) throw std::domain_error("half_sine_quotient_coeff: negative index");
    // sin(x)/x = sum (-1)^n x^{2n}/(2n+1)!; invert in u = x^2, then x = t/2.
    std::vector<Rational> s(g + 1), a(g + 1);
    for (int n = 0; n <= g; ++n) {
        Rational c(BigInt(1), factorial(2L * n + 1));
        s[n] = (n % 2 == 0) ? c : -c;
    }
    a[0] = Rational(1);
    for (int n = 1; n <= g; ++n) {
        Rational acc(0);
        for (int j = 1; j <= n; ++j) acc += s[j] * a[n - j];
        a[n] = -acc;
    }
    return a[g] / Rational(4).pow(g);
}

Rational lambda_g_onepoint(int g, int r) {
    if (g < 1) throw std::domain_error("lambda_g_onepoint: genus < 1");
    if (r < 1) throw std::domain_error("lambda_g_onepoint: modulus < 1");
    return half_sine_quotient_coeff(g) / Rational(r);
}

Rational lambda_g_multipoint(int g, int r, const DescendentVector& b) {
    const long dim = 2L * g - 3 + static_cast<long>(b.size());
    if (sum_of(b) != dim) throw std::domain_error("lambda_g_multipoint: dimension mismatch");
    return Rational(multinomial(dim, b)) * lambda_g_onepoint(g, r);
}

ZhouCheck check_zhou(int g, int r, const DescendentVector& b, HodgeBridge& bridge) {
    const int l = static_cast<int>(b.size());
    if (sum_of(b) != 2L * g - 3 + l) throw std::domain_error("check_zhou: dimension mismatch");
    ZhouCheck out{
        bridge.integral({g, r, b, std::vector<int>(l, 0), g}),
        bridge.integral({g, 1, b, std::vector<int>(l, 0), g}) / Rational(r),
    };
    return out;
}

IdentityCheck check_lambda_top_identity(int g, int r, const DescendentVector& b,
                                        const std::vector<int>& k,
                                        const IntegralProvider& provider) {
    const int l = static_cast<int>(b.size());
    if (l < 1 || k.size() != b.size())
        throw std::domain_error("check_lambda_top_identity: bad arguments");
    if (sum_of(k) % r != 0)
        throw std::domain_error("check_lambda_top_identity: unbalanced monodromy");

    std::vector<int> Z;
    for (int i = 0; i < l; ++i)
        if (k[i] == 0) Z.push_back(i);
    if (Z.empty()) return {Rational(0), Rational(0)};

    const long nz = static_cast<long>(Z.size());
    const long expected = 2L * g - 2 + nz + sum_of(k) / r;
    if (sum_of(b) != expected)
        throw std::domain_error("check_lambda_top_identity: b_L off the minimal stratum");

    auto lam = [&](int gg, const DescendentVector& bb, const std::vector<int>& kk) {
        const long D = 3L * gg - 3 + static_cast<long>(bb.size());
        if (D < 0) return Rational(0);
        long bt = 0;
        for (long v : bb) {
            if (v < 0) return Rational(0);
            bt += v;
        }
        const long j = rank_eu(gg, r, kk);
        if (bt + j != D) return Rational(0);
        return provider.value({gg, r, bb, kk, static_cast<int>(j)});
    };
    auto c_bot = [&](int res, long m) { return Rational(xi_c_bottom(r, dual_residue(r, res), m)); };

    const Rational lhs = Rational(nz) * lam(g, b, k);

    Rational rhs(0);

    // joins: one zero-residue point against a nonzero one, then zero pairs
    for (int i : Z) {
        for (int j = 0; j < l; ++j) {
            if (j == i || k[j] == 0) continue;
            if (b[i] + b[j] == 0) continue;
            DescendentVector nb{b[i] + b[j] - 1};
            std::vector<int> nk{k[j]};
            for (int t = 0; t < l; ++t) {
                if (t == i || t == j) continue;
                nb.push_back(b[t]);
                nk.push_back(k[t]);
            }
            rhs += c_bot(k[j], b[i] + b[j]) / (c_bot(0, b[i]) * c_bot(k[j], b[j])) *
                   lam(g, nb, nk);
        }
    }
    for (size_t zi = 0; zi < Z.size(); ++zi) {
        for (size_t zj = zi + 1; zj < Z.size(); ++zj) {
            const int i = Z[zi], j = Z[zj];
            if (b[i] + b[j] == 0) continue;
            DescendentVector nb{b[i] + b[j] - 1};
            std::vector<int> nk{0};
            for (int t = 0; t < l; ++t) {
                if (t == i || t == j) continue;
                nb.push_back(b[t]);
                nk.push_back(k[t]);
            }
            rhs += c_bot(0, b[i] + b[j]) / (c_bot(0, b[i]) * c_bot(0, b[j])) * lam(g, nb, nk);
        }
    }

    // genus reduction and stable splittings. Extracting the minimal-stratum
    // coefficient from the transformed equation weights this bracket by +r/2:
    // the kernel's lowest sector contributes -c^a_{m+1,0} c^b_{n+1,0} against
    // the join side's -c^{k_j}_{b_i+b_j,0}, so the signs cancel uniformly.
    Rational bracket(0);
    for (int i : Z) {
        const Rational denom = c_bot(0, b[i]);
        DescendentVector rest_b;
        std::vector<int> rest_k;
        for (int t = 0; t < l; ++t) {
            if (t == i) continue;
            rest_b.push_back(b[t]);
            rest_k.push_back(k[t]);
        }
        const int nrest = static_cast<int>(rest_b.size());

        if (g >= 1) {
            for (int a = 1; a < r; ++a) {
                const int bb = r - a;
                for (long m = 0; m <= b[i] - 2; ++m) {
                    const long n = b[i] - 2 - m;
                    DescendentVector nbv{m, n};
                    std::vector<int> nkv{a, bb};
                    nbv.insert(nbv.end(), rest_b.begin(), rest_b.end());
                    nkv.insert(nkv.end(), rest_k.begin(), rest_k.end());
                    bracket += lam(g - 1, nbv, nkv) * c_bot(a, m + 1) * c_bot(bb, n + 1) / denom;
                }
            }
        }

        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            for (unsigned mask = 0; mask < (1u << nrest); ++mask) {
                const int ni = __builtin_popcount(mask);
                if (!moduli_stable(g1, ni + 1) || !moduli_stable(g2, nrest - ni + 1)) continue;
                DescendentVector left_b{0}, right_b{0};
                std::vector<int> left_k{0}, right_k{0};
                long kI = 0, kJ = 0, bI = 0, bJ = 0;
                for (int t = 0; t < nrest; ++t) {
                    if ((mask >> t) & 1u) {
                        left_b.push_back(rest_b[t]);
                        left_k.push_back(rest_k[t]);
                        kI += rest_k[t];
                        bI += rest_b[t];
                    } else {
                        right_b.push_back(rest_b[t]);
                        right_k.push_back(rest_k[t]);
                        kJ += rest_k[t];
                        bJ += rest_b[t];
                    }
                }
                const int a = static_cast<int>(((-kI) % r + r) % r);
                const int bb = static_cast<int>(((-kJ) % r + r) % r);
                if (a + bb != r) continue;  // only the lowest-term sector contributes
                // m, n fixed by the per-factor minimal strata:
                // m + |b_I| = dim(g1, |I|+1) - rank of the factor's Hodge bundle
                const long m =
                    (3L * g1 - 2 + ni) - (g1 - 1 + (a + kI) / r) - bI;
                const long n =
                    (3L * g2 - 2 + (nrest - ni)) - (g2 - 1 + (bb + kJ) / r) - bJ;
                if (m < 0 || n < 0 || m + n != b[i] - 2) continue;
                left_b[0] = m;
                left_k[0] = a;
                right_b[0] = n;
                right_k[0] = bb;
                const Rational f1 = lam(g1, left_b, left_k);
                if (f1.is_zero()) continue;
                const Rational f2 = lam(g2, right_b, right_k);
                if (f2.is_zero()) continue;
                bracket += f1 * f2 * c_bot(a, m + 1) * c_bot(bb, n + 1) / denom;
            }
        }
    }
    rhs += bracket * Rational(r, 2);

    return {lhs, rhs};
}

}  // namespace hodgeforge
