#include "hodgeforge/group_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hodgeforge/combinatorics.hpp"

namespace hodgeforge {

namespace {

using Perm = std::vector<int>;  // images, 0-based: p[i] = image of i

std::vector<int> cycle_type(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    std::vector<int> type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

struct Search {
    int d;
    std::vector<int> target_type;                  // (r, ..., r) sorted
    std::vector<std::pair<int, int>> transpositions;
    std::vector<int> chosen;                       // transposition index per slot
    std::vector<Perm> suffix;                      // suffix[k] = tau_{k+1} ... tau_s sigma_inf
    const Perm* sigma_inf = nullptr;
    bool transitive_only = true;
    std::uint64_t hits = 0;

    bool leaf_ok() const {
        if (cycle_type(suffix[0]) != target_type) return false;
        if (!transitive_only) return true;
        UnionFind uf(d);
        for (int idx : chosen) {
            const auto& [a, b] = transpositions[idx];
            uf.unite(a, b);
        }
        const Perm& si = *sigma_inf;
        for (int i = 0; i < d; ++i) uf.unite(i, si[i]);
        return uf.components() == 1;
    }

    void run(int k) {
        if (k == 0) {
            if (leaf_ok()) ++hits;
            return;
        }
        for (int idx = 0; idx < static_cast<int>(transpositions.size()); ++idx) {
            const auto& [a, b] = transpositions[idx];
            Perm& out = suffix[k - 1];
            const Perm& in = suffix[k];
            out = in;
            std::swap(out[a], out[b]);  // out = tau * in (compose as functions)
            chosen[k - 1] = idx;
            run(k - 1);
        }
    }
};

}  // namespace

BigInt count_factorizations(const FactorizationInstance& inst, const OracleLimits& limits,
                            bool transitive_only) {
    check_composition(inst.mu);
    if (inst.d != total(inst.mu)) throw std::domain_error("count_factorizations: d != |mu|");
    if (inst.r < 1 || inst.d % inst.r != 0)
        throw std::domain_error("count_factorizations: r does not divide d");
    if (inst.s < 0) throw std::domain_error("count_factorizations: negative s");
    if (inst.d > limits.max_d || inst.s > limits.max_s)
        throw resource_error("count_factorizations: instance exceeds configured limits");

    const int d = inst.d;
    std::vector<int> mu_type(inst.mu.begin(), inst.mu.end());
    std::sort(mu_type.begin(), mu_type.end(), std::greater<int>());

    // Cycles of sigma_infty carry part labels; length-preserving bijections.
    BigInt labelings(1);
    for (size_t i = 0; i < mu_type.size();) {
        size_t j = i;
        while (j < mu_type.size() && mu_type[j] == mu_type[i]) ++j;
        labelings *= factorial(static_cast<long>(j - i));
        i = j;
    }

    Search search;
    search.d = d;
    search.target_type.assign(d / inst.r, inst.r);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) search.transpositions.emplace_back(a, b);
    search.chosen.assign(inst.s, 0);
    search.suffix.assign(inst.s + 1, Perm(d));
    search.transitive_only = transitive_only;

    BigInt count(0);
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (cycle_type(p) != mu_type) continue;
        search.sigma_inf = &p;
        search.suffix[inst.s] = p;
        search.hits = 0;
        search.run(inst.s);
        count += BigInt(static_cast<long>(search.hits));
    } while (std::next_permutation(p.begin(), p.end()));

    return count * labelings;
}

Rational oracle_hurwitz(int g, int r, const Composition& mu, const OracleLimits& limits) {
    check_composition(mu);
    if (g < 0) throw std::domain_error("oracle_hurwitz: negative genus");
    if (r < 1) throw std::domain_error("oracle_hurwitz: modulus < 1");
    const long deg = total(mu);
    if (deg % r != 0) return Rational(0);
    const long s = 2L * g - 2 + static_cast<long>(mu.size()) + deg / r;
    if (s < 0) return Rational(0);

    FactorizationInstance inst;
    inst.d = static_cast<int>(deg);
    inst.r = r;
    inst.mu = mu;
    inst.s = static_cast<int>(s);
    return Rational(count_factorizations(inst, limits), factorial(deg));
}

}  // namespace hodgeforge
