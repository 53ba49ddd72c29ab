#include "hodgeforge/cut_and_join.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "hodgeforge/combinatorics.hpp"

namespace hodgeforge {

namespace {

Composition sorted_desc(Composition mu) {
    std::sort(mu.begin(), mu.end(), std::greater<long>());
    return mu;
}

Composition with_parts(const Composition& base, std::initializer_list<long> extra) {
    Composition out = base;
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

// Distinct parts with multiplicities, for multiset-aware sums.
std::vector<std::pair<long, int>> run_lengths(const Composition& sorted_mu) {
    std::vector<std::pair<long, int>> runs;
    for (long p : sorted_mu) {
        if (!runs.empty() && runs.back().first == p)
            ++runs.back().second;
        else
            runs.emplace_back(p, 1);
    }
    return runs;
}

}  // namespace

std::optional<long> ramification_degree(int g, int l, const Composition& mu, int r) {
    if (r < 1) throw std::domain_error("ramification_degree: modulus < 1");
    const long deg = total(mu);
    if (deg % r != 0) return std::nullopt;
    return 2L * g - 2 + l + deg / r;
}

Rational HurwitzEngine::hurwitz(int g, int r, const Composition& mu) {
    Rational reduced = reduced_hurwitz(g, r, mu);
    if (reduced.is_zero()) return reduced;
    const auto s = ramification_degree(g, static_cast<int>(mu.size()), mu, r);
    return reduced * Rational(factorial(*s));
}

Rational HurwitzEngine::reduced_hurwitz(int g, int r, const Composition& mu) {
    check_composition(mu);
    if (g < 0) throw std::domain_error("hurwitz: negative genus");
    if (r < 1) throw std::domain_error("hurwitz: modulus < 1");
    HurwitzKey key{g, r, sorted_desc(mu)};
    return eval(key);
}

std::optional<Rational> HurwitzEngine::lookup(const HurwitzKey& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void HurwitzEngine::store(const HurwitzKey& key, const Rational& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    table_.emplace(key, value);
}

size_t HurwitzEngine::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.size();
}

void HurwitzEngine::clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    table_.clear();
}

Rational HurwitzEngine::eval(const HurwitzKey& key) {
    const int g = key.g;
    const int r = key.r;
    const Composition& mu = key.mu;
    const int l = static_cast<int>(mu.size());

    const auto s_opt = ramification_degree(g, l, mu, r);
    if (!s_opt || *s_opt < 0) return Rational(0);
    const long s = *s_opt;
    if (s == 0) {
        // The only s = 0 key with a cover: g = 0, mu = (r).
        return (g == 0 && l == 1 && mu[0] == r) ? Rational(1, r) : Rational(0);
    }

    if (auto hit = lookup(key)) return *hit;

    Rational acc(0);
    const auto runs = run_lengths(mu);

    // Join: two marked parts merge into one.
    for (size_t a = 0; a < runs.size(); ++a) {
        for (size_t b = a; b < runs.size(); ++b) {
            const long u = runs[a].first, v = runs[b].first;
            long pairs;
            if (a == b) {
                pairs = static_cast<long>(runs[a].second) * (runs[a].second - 1) / 2;
            } else {
                pairs = static_cast<long>(runs[a].second) * runs[b].second;
            }
            if (pairs == 0) continue;
            Composition rest;
            rest.reserve(l - 1);
            for (size_t t = 0; t < runs.size(); ++t) {
                int m = runs[t].second;
                if (t == a) --m;
                if (t == b) --m;
                rest.insert(rest.end(), m, runs[t].first);
            }
            HurwitzKey sub{g, r, sorted_desc(with_parts(rest, {u + v}))};
            Rational h = eval(sub);
            if (!h.is_zero()) acc += Rational(pairs) * Rational(u + v) * h;
        }
    }

    // Cut: one part splits as alpha + beta.
    for (size_t a = 0; a < runs.size(); ++a) {
        const long u = runs[a].first;
        const int mult = runs[a].second;
        Composition rest;
        rest.reserve(l - 1);
        for (size_t t = 0; t < runs.size(); ++t)
            rest.insert(rest.end(), runs[t].second - (t == a ? 1 : 0), runs[t].first);
        const auto rest_runs = run_lengths(sorted_desc(rest));

        Rational cut_i(0);
        for (long alpha = 1; alpha < u; ++alpha) {
            const long beta = u - alpha;
            Rational inner(0);

            if (g >= 1) inner += eval({g - 1, r, sorted_desc(with_parts(rest, {alpha, beta}))});

            // Ordered (g1, I) x (g2, J) splittings over sub-multisets of rest.
            std::vector<int> take(rest_runs.size(), 0);
            std::function<void(size_t)> descend = [&](size_t pos) {
                if (pos == rest_runs.size()) {
                    long ways = 1;
                    Composition part_i, part_j;
                    for (size_t t = 0; t < rest_runs.size(); ++t) {
                        ways *= binomial(rest_runs[t].second, take[t]).to_long();
                        part_i.insert(part_i.end(), take[t], rest_runs[t].first);
                        part_j.insert(part_j.end(), rest_runs[t].second - take[t],
                                      rest_runs[t].first);
                    }
                    for (int g1 = 0; g1 <= g; ++g1) {
                        Rational h1 =
                            eval({g1, r, sorted_desc(with_parts(part_i, {alpha}))});
                        if (h1.is_zero()) continue;
                        Rational h2 =
                            eval({g - g1, r, sorted_desc(with_parts(part_j, {beta}))});
                        if (h2.is_zero()) continue;
                        inner += Rational(ways) * h1 * h2;
                    }
                    return;
                }
                for (take[pos] = 0; take[pos] <= rest_runs[pos].second; ++take[pos]) descend(pos + 1);
                take[pos] = 0;
            };
            descend(0);

            if (!inner.is_zero()) cut_i += Rational(alpha) * Rational(beta) * inner;
        }
        if (!cut_i.is_zero()) acc += Rational(mult) * cut_i * Rational(1, 2);
    }

    Rational value = acc / Rational(s);
    store(key, value);
    return value;
}

void HurwitzEngine::save_cache(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_cache: cannot open " + path);
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [key, reduced] : table_) {
        const auto s = ramification_degree(key.g, static_cast<int>(key.mu.size()), key.mu, key.r);
        out << key.g << ' ' << key.r << ' ';
        for (size_t i = 0; i < key.mu.size(); ++i) out << (i ? "," : "") << key.mu[i];
        out << ' ' << (reduced * Rational(factorial(*s))).str() << '\n';
    }
}

size_t HurwitzEngine::load_cache(const std::string& path, int verify_samples) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_cache: cannot open " + path);
    std::vector<std::pair<HurwitzKey, Rational>> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        HurwitzKey key;
        std::string mu_field, value_field;
        if (!(ss >> key.g >> key.r >> mu_field >> value_field))
            throw std::runtime_error("load_cache: malformed record: " + line);
        std::istringstream ms(mu_field);
        std::string part;
        while (std::getline(ms, part, ',')) key.mu.push_back(std::stol(part));
        key.mu = sorted_desc(key.mu);
        const auto s = ramification_degree(key.g, static_cast<int>(key.mu.size()), key.mu, key.r);
        if (!s || *s < 0) throw std::runtime_error("load_cache: impossible key: " + line);
        records.emplace_back(std::move(key),
                             Rational::parse(value_field) / Rational(factorial(*s)));
    }

    // Loading must never change computed results: recompute a few records
    // from scratch and compare before trusting the file.
    std::mt19937 rng(12345);
    std::vector<size_t> order(records.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    HurwitzEngine scratch;
    int checked = 0;
    for (size_t idx : order) {
        if (checked >= verify_samples) break;
        const auto& [key, reduced] = records[idx];
        if (scratch.eval(key) != reduced)
            throw std::runtime_error("load_cache: record disagrees with recomputation");
        ++checked;
    }

    std::lock_guard<std::mutex> lock(mutex_);
    size_t added = 0;
    for (auto& [key, reduced] : records) added += table_.emplace(key, reduced).second ? 1 : 0;
    return added;
}

}  // namespace hodgeforge
