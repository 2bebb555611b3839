#include "pdx/common.hpp"

#include <atomic>

namespace pdx {

namespace {
std::atomic<double> g_epsilon{1e-9};
}

double epsilon() {
    return g_epsilon.load(std::memory_order_relaxed);
}

void set_epsilon(double eps) {
    if (!(eps > 0.0)) {
        throw Error(ErrorCode::Domain, "epsilon must be positive");
    }
    g_epsilon.store(eps, std::memory_order_relaxed);
}

std::string set_to_string(StateSet x, const std::vector<std::string>& universe) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (x & (StateSet{1} << i)) {
            if (!first) out += ",";
            out += universe[i];
            first = false;
        }
    }
    out += "}";
    return out;
}

} // namespace pdx
