#ifndef FLOWDEPTH_VERIFY_HPP
#define FLOWDEPTH_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace flowdepth {

struct PropertyResult {
    std::string name;
    int samples = 0;
    double worst_slack = 0.0;  // most negative margin observed; >= 0 passes
    bool pass = false;
    std::string note;
};

/// Run every module's invariant suite with the given seed. `filter` keeps
/// only properties whose name contains the substring (empty keeps all).
std::vector<PropertyResult> run_verify(std::uint64_t seed, const std::string& filter = "");

bool all_pass(const std::vector<PropertyResult>& results);

}  // namespace flowdepth

#endif
