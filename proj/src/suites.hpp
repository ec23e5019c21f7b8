#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bszego/verify.hpp"

namespace bsz::detail {

struct Job {
    std::string id;
    Params params;
    std::function<std::vector<VerificationRecord>()> run;
    double tol = 0.0;  // reported on records of jobs that throw
};

struct SuiteContext {
    Grid grid;  // defaults merged with overrides
    double tol = 1e-8;
    std::uint64_t seed = 0;
};

std::vector<Job> expand_suite(const std::string& id, const SuiteContext& ctx);

}  // namespace bsz::detail
