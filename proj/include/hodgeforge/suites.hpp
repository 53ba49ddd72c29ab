#ifndef HODGEFORGE_SUITES_HPP
#define HODGEFORGE_SUITES_HPP

#include <string>
#include <vector>

#include "hodgeforge/rational.hpp"

namespace hodgeforge {

struct SuiteLimits {
    int max_d = 7;       // oracle degree bound
    int max_s = 5;       // oracle transposition bound
    int max_dim = 6;     // 3g - 3 + l bound for bridge-backed suites
    unsigned seed = 2024;
};

struct SuiteInstance {
    std::string params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

struct SuiteReport {
    std::string identity;
    std::vector<SuiteInstance> instances;
    bool pass = true;

    void record(std::string params, const Rational& lhs, const Rational& rhs);
    void record_flag(std::string params, bool ok, const std::string& note = "");
};

// Suite names: cutjoin-oracle, dvv-bridge, orbifold-dvv-bridge, lemma32,
// lambda-g, zhou, laplace, lambda-top.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteLimits& limits);

std::string report_to_json(const SuiteReport& report);
std::string report_to_csv(const SuiteReport& report);

}  // namespace hodgeforge

#endif
