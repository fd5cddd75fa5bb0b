#ifndef COLORTREE_LIMITS_HPP
#define COLORTREE_LIMITS_HPP

#include <cstdint>

namespace colortree {

// Work caps. Every entry point that can blow up exponentially checks one of
// these before doing any work and throws BudgetExceeded when it is exceeded.
struct Limits {
    unsigned max_colors = 8;
    std::uint64_t max_trees = 10'000'000;

    // 0 selects the per-d default below.
    unsigned series_order_cap = 0;
    unsigned profile_total_cap = 0;

    static unsigned default_series_order(unsigned d) {
        return d <= 2 ? 20 : d == 3 ? 12 : 8;
    }
    static unsigned default_profile_total(unsigned d) {
        return d <= 2 ? 30 : d == 3 ? 15 : d == 4 ? 10 : 8;
    }
    unsigned series_order(unsigned d) const {
        return series_order_cap ? series_order_cap : default_series_order(d);
    }
    unsigned profile_total(unsigned d) const {
        return profile_total_cap ? profile_total_cap : default_profile_total(d);
    }
};

}  // namespace colortree

#endif  // COLORTREE_LIMITS_HPP
