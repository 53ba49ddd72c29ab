#include "hodgeforge/suites.hpp"

#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hodgeforge/group_oracle.hpp"
#include "hodgeforge/laplace.hpp"
#include "hodgeforge/recursions.hpp"
#include "hodgeforge/xi.hpp"

namespace hodgeforge {

void SuiteReport::record(std::string params, const Rational& lhs_v, const Rational& rhs_v) {
    SuiteInstance inst{std::move(params), lhs_v.str(), rhs_v.str(), lhs_v == rhs_v};
    pass = pass && inst.equal;
    instances.push_back(std::move(inst));
}

void SuiteReport::record_flag(std::string params, bool ok, const std::string& note) {
    SuiteInstance inst{std::move(params), note, note, ok};
    pass = pass && ok;
    instances.push_back(std::move(inst));
}

std::vector<std::string> suite_names() {
    return {"cutjoin-oracle", "dvv-bridge", "orbifold-dvv-bridge", "lemma32",
            "lambda-g",       "zhou",       "laplace",             "lambda-top"};
}

namespace {

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<Composition> partitions_of(long n) {
    std::vector<Composition> out;
    Composition cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Descending descendent vectors with the given length and sum (one
// representative per orbit of the exchange symmetry).
std::vector<DescendentVector> sorted_stratum(int l, long total) {
    std::vector<DescendentVector> out;
    DescendentVector cur(l);
    std::function<void(int, long, long)> rec = [&](int pos, long left, long maxv) {
        if (pos == l) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (long v = std::min(left, maxv); v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, left - v, v);
        }
    };
    if (total >= 0) rec(0, total, total);
    return out;
}

// Canonical (k, b) pair multisets with balanced residues and |b| = dim.
std::vector<std::pair<std::vector<int>, DescendentVector>> pair_classes(int r, int l, long dim) {
    std::vector<std::pair<std::vector<int>, DescendentVector>> out;
    std::vector<std::pair<int, long>> cur(l);
    std::function<void(int, long)> rec = [&](int pos, long bleft) {
        if (pos == l) {
            if (bleft != 0) return;
            long ksum = 0;
            for (const auto& [kk, bb] : cur) ksum += kk;
            if (ksum % r != 0) return;
            std::vector<int> k(l);
            DescendentVector b(l);
            for (int i = 0; i < l; ++i) {
                k[i] = cur[i].first;
                b[i] = cur[i].second;
            }
            out.emplace_back(std::move(k), std::move(b));
            return;
        }
        const std::pair<int, long> floor_pair = pos == 0 ? std::pair<int, long>{0, 0} : cur[pos - 1];
        for (int kk = floor_pair.first; kk < r; ++kk) {
            const long bstart = (kk == floor_pair.first) ? floor_pair.second : 0;
            for (long bb = bstart; bb <= bleft; ++bb) {
                cur[pos] = {kk, bb};
                rec(pos + 1, bleft - bb);
            }
        }
    };
    rec(0, dim);
    return out;
}

SuiteReport suite_cutjoin_oracle(const SuiteLimits& limits) {
    SuiteReport report;
    report.identity = "cutjoin-oracle";
    HurwitzEngine engine;
    OracleLimits olim{limits.max_d, limits.max_s};
    const long dmax = std::min<long>(6, limits.max_d);
    const long smax = std::min<long>(4, limits.max_s);
    for (int r = 1; r <= 3; ++r) {
        for (long n = r; n <= dmax; n += r) {
            for (const auto& mu : partitions_of(n)) {
                const int l = static_cast<int>(mu.size());
                for (int g = 0;; ++g) {
                    const long s = 2L * g - 2 + l + n / r;
                    if (s > smax) break;
                    if (s < 0) continue;
                    std::ostringstream params;
                    params << "g=" << g << " r=" << r << " mu=" << join_longs(mu);
                    report.record(params.str(), engine.hurwitz(g, r, mu),
                                  oracle_hurwitz(g, r, mu, olim));
                }
            }
        }
    }
    return report;
}

SuiteReport suite_dvv_bridge(const SuiteLimits& limits) {
    SuiteReport report;
    report.identity = "dvv-bridge";
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    WittenDVV witten(bridge);
    const long cap = std::min<long>(6, limits.max_dim);
    for (int g = 0; g <= 2; ++g) {
        for (int l = 1; l <= 6; ++l) {
            const long dim = 3L * g - 3 + l;
            if (dim < 0 || dim > cap) continue;
            if (2 * g - 2 + l <= 0) continue;
            for (const auto& b : sorted_stratum(l, dim)) {
                std::ostringstream params;
                params << "g=" << g << " b=" << join_longs(b);
                report.record(params.str(), witten.tau(g, b),
                              bridge.integral({g, 1, b, std::vector<int>(l, 0), 0}));
            }
        }
    }
    return report;
}

SuiteReport suite_orbifold_dvv_bridge(const SuiteLimits& limits) {
    SuiteReport report;
    report.identity = "orbifold-dvv-bridge";
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    OrbifoldDVV orbifold(bridge);
    const long cap = std::min<long>(4, limits.max_dim);
    for (int r = 2; r <= 3; ++r) {
        for (int g = 0; g <= 2; ++g) {
            for (int l = 1; l <= 7; ++l) {
                const long dim = 3L * g - 3 + l;
                if (dim < 0 || dim > cap) continue;
                if (2 * g - 2 + l <= 0) continue;
                for (const auto& [k, b] : pair_classes(r, l, dim)) {
                    std::ostringstream params;
                    params << "g=" << g << " r=" << r << " b=" << join_longs(b)
                           << " k=" << join_ints(k);
                    report.record(params.str(), orbifold.tau(g, r, b, k),
                                  bridge.integral({g, r, b, k, 0}));
                }
            }
        }
    }
    return report;
}

SuiteReport suite_join_kernel(const SuiteLimits&) {
    SuiteReport report;
    report.identity = "lemma32";
    for (int r = 1; r <= 4; ++r)
        for (int a = 0; a < r; ++a)
            for (int m = -1; m <= 4; ++m) {
                std::ostringstream params;
                params << "r=" << r << " a=" << a << " m=" << m;
                report.record_flag(params.str(), join_kernel_matches_rational_form(r, a, m),
                                   "polynomial identity");
            }
    return report;
}

SuiteReport suite_lambda_g(const SuiteLimits&) {
    SuiteReport report;
    report.identity = "lambda-g";
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    for (int r = 1; r <= 3; ++r)
        for (int g = 1; g <= 3; ++g) {
            std::ostringstream params;
            params << "one-point g=" << g << " r=" << r;
            report.record(params.str(), bridge.integral({g, r, {2L * g - 2}, {0}, g}),
                          lambda_g_onepoint(g, r));
        }
    for (int r = 1; r <= 3; ++r)
        for (int g = 1; g <= 2; ++g)
            for (int l = 1; l <= 3; ++l) {
                const long dim = 2L * g - 3 + l;
                if (dim < 0) continue;
                for (const auto& b : sorted_stratum(l, dim)) {
                    std::ostringstream params;
                    params << "multi g=" << g << " r=" << r << " b=" << join_longs(b);
                    report.record(params.str(),
                                  bridge.integral({g, r, b, std::vector<int>(l, 0), g}),
                                  lambda_g_multipoint(g, r, b));
                }
            }
    return report;
}

SuiteReport suite_zhou(const SuiteLimits&) {
    SuiteReport report;
    report.identity = "zhou";
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    for (int r = 2; r <= 3; ++r)
        for (int g = 1; g <= 2; ++g)
            for (int l = 1; l <= 2; ++l) {
                const long dim = 2L * g - 3 + l;
                if (dim < 0) continue;
                for (const auto& b : sorted_stratum(l, dim)) {
                    const auto c = check_zhou(g, r, b, bridge);
                    std::ostringstream params;
                    params << "g=" << g << " r=" << r << " b=" << join_longs(b);
                    report.record(params.str(), c.twisted, c.untwisted);
                }
            }
    return report;
}

SuiteReport suite_laplace(const SuiteLimits&) {
    SuiteReport report;
    report.identity = "laplace";
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    const std::tuple<int, int, int> cases[] = {{0, 3, 1}, {0, 3, 2}, {1, 1, 2}, {1, 2, 2}};
    for (const auto& [g, l, r] : cases) {
        const auto rep = verify_laplace_identity(g, l, r, bridge);
        std::ostringstream params;
        params << "g=" << g << " l=" << l << " r=" << r;
        report.record_flag(params.str(), rep.holds,
                           rep.boundary ? "series identity (two-point completion)"
                                        : "series identity");
    }
    return report;
}

SuiteReport suite_lambda_top(const SuiteLimits&) {
    SuiteReport report;
    report.identity = "lambda-top";
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    BridgeProvider provider(bridge);

    const std::pair<int, std::vector<int>> shapes[] = {
        {0, {0, 1, 1, 0}},
        {0, {0, 0, 1, 1, 0}},
        {1, {0, 1, 1}},
        {1, {0, 1, 2}},
    };
    const int rs[] = {2, 2, 2, 3};
    for (size_t c = 0; c < std::size(shapes); ++c) {
        const auto& [g, k] = shapes[c];
        const int r = rs[c];
        const int l = static_cast<int>(k.size());
        int zeros = 0;
        long ksum = 0;
        for (int kk : k) {
            zeros += kk == 0 ? 1 : 0;
            ksum += kk;
        }
        const long dim = 2L * g - 2 + zeros + ksum / r;
        std::vector<DescendentVector> bs;
        {
            // all stratum vectors; the monodromy labels break the symmetry
            DescendentVector cur(l, 0);
            std::function<void(int, long)> rec = [&](int pos, long left) {
                if (pos == l - 1) {
                    cur[pos] = left;
                    bs.push_back(cur);
                    return;
                }
                for (cur[pos] = 0; cur[pos] <= left; ++cur[pos]) rec(pos + 1, left - cur[pos]);
            };
            if (dim >= 0) rec(0, dim);
        }
        for (const auto& b : bs) {
            const auto chk = check_lambda_top_identity(g, r, b, k, provider);
            std::ostringstream params;
            params << "g=" << g << " r=" << r << " b=" << join_longs(b) << " k=" << join_ints(k);
            report.record(params.str(), chk.lhs, chk.rhs);
        }
    }
    const auto empty_z = check_lambda_top_identity(1, 2, {1, 1}, {1, 1}, provider);
    report.record_flag("g=1 r=2 k=1,1 (empty Z)",
                       empty_z.lhs == Rational(0) && empty_z.rhs == Rational(0), "0");
    return report;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteLimits& limits) {
    if (name == "cutjoin-oracle") return suite_cutjoin_oracle(limits);
    if (name == "dvv-bridge") return suite_dvv_bridge(limits);
    if (name == "orbifold-dvv-bridge") return suite_orbifold_dvv_bridge(limits);
    if (name == "lemma32") return suite_join_kernel(limits);
    if (name == "lambda-g") return suite_lambda_g(limits);
    if (name == "zhou") return suite_zhou(limits);
    if (name == "laplace") return suite_laplace(limits);
    if (name == "lambda-top") return suite_lambda_top(limits);
    throw std::invalid_argument("unknown suite: " + name);
}

std::string report_to_json(const SuiteReport& report) {
    nlohmann::json out;
    out["identity"] = report.identity;
    out["pass"] = report.pass;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& inst : report.instances)
        list.push_back({{"params", inst.params},
                        {"lhs", inst.lhs},
                        {"rhs", inst.rhs},
                        {"equal", inst.equal}});
    out["instances"] = std::move(list);
    return out.dump(2);
}

std::string report_to_csv(const SuiteReport& report) {
    std::ostringstream out;
    out << "identity,params,lhs,rhs,equal\n";
    for (const auto& inst : report.instances)
        out << report.identity << ",\"" << inst.params << "\"," << inst.lhs << ',' << inst.rhs
            << ',' << (inst.equal ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace hodgeforge
