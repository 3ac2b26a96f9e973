#include "rosel/errors.hpp"
#include "rosel/selection.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rosel {

std::vector<Index> oracle_order(std::span<const Value> values) {
    std::vector<Index> order(values.size());
    std::iota(order.begin(), order.end(), Index{1});
    std::sort(order.begin(), order.end(), [&](Index x, Index y) {
        return OrderedKey{values[x - 1], x} < OrderedKey{values[y - 1], y};
    });
    return order;
}

Index oracle_select(std::span<const Value> values, std::uint64_t k) {
    if (k == 0 || k > values.size()) {
        throw BoundsError("rank " + std::to_string(k) + " outside [1, " + std::to_string(values.size()) + "]");
    }
    std::vector<Index> order(values.size());
    std::iota(order.begin(), order.end(), Index{1});
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k - 1), order.end(),
                     [&](Index x, Index y) { return OrderedKey{values[x - 1], x} < OrderedKey{values[y - 1], y}; });
    return order[k - 1];
}

}  // namespace rosel
