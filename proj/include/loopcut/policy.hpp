#pragma once

#include <optional>
#include <utility>

namespace loopcut {

/// Greedy scoring scheme for cutset selection.
///
/// Default ordering: degree descending, then value count (descending by
/// default, ascending if configured), then lowest node id. When `weighted` is
/// set it replaces the lexicographic keys entirely: score = w_degree * degree
/// + w_values * values, highest score wins, ties by lowest id.
struct SelectionPolicy {
    enum class ValueOrder { descending, ascending };

    ValueOrder value_order = ValueOrder::descending;
    std::optional<std::pair<double, double>> weighted;  // (w_degree, w_values), >= 0

    bool lexicographic() const { return !weighted.has_value(); }
};

}  // namespace loopcut
