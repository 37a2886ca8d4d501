#pragma once

#include <functional>
#include <memory>

#include "cqsl2/maxwell.hpp"

namespace cqsl2 {

/// Per-r engine stack, built lazily so cheap suites skip the heavy layers.
class Engine {
public:
    explicit Engine(int r) : r_(r) {}
    int r() const { return r_; }
    const DeRhamComplex& complex();
    const HodgeStructure& hodge();
    const MaxwellTheory& maxwell();

private:
    int r_;
    std::unique_ptr<DeRhamComplex> cx_;
    std::unique_ptr<HodgeStructure> hodge_;
    std::unique_ptr<MaxwellTheory> maxwell_;
};

struct CertResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteRun {
    std::vector<CertResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

/// Suite names, one per acceptance area; "all" unions every suite
/// defined for the given r.
std::vector<std::string> suite_names();
/// The r values a suite carries certificates for ({} when slow-only).
std::vector<int> suite_supported_r(const std::string& suite, bool slow_tier);
SuiteRun run_suite(Engine& eng, const std::string& suite, bool slow_tier);

}  // namespace cqsl2
