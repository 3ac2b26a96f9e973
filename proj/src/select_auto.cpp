#include "rosel/bounds.hpp"
#include "rosel/errors.hpp"
#include "rosel/math.hpp"
#include "rosel/selection.hpp"

#include <cmath>
#include <string>

namespace rosel {

std::uint64_t min_budget_bits(std::uint64_t n) {
    const std::uint64_t lg = ceil_lg(n);
    return lg * lg * lg;
}

SelectionResult select_auto(const ReadOnlyArray& a, std::uint64_t k, std::optional<std::uint64_t> budget_bits,
                            WorkspaceMeter& meter) {
    const std::uint64_t n = a.size();
    if (!budget_bits) {
        return select_linear_bits(a, k, meter);
    }
    if (*budget_bits < min_budget_bits(n)) {
        throw ParameterError("budget of " + std::to_string(*budget_bits) + " bits outside the supported range [" +
                             std::to_string(min_budget_bits(n)) + ", inf) for N = " + std::to_string(n));
    }
    const auto linear_threshold =
        static_cast<std::uint64_t>(std::ceil(bounds::kAutoLinearFactor * static_cast<double>(n)));
    if (*budget_bits >= linear_threshold) {
        return select_linear_bits(a, k, meter);
    }
    return select_general(a, k, *budget_bits, meter);
}

}  // namespace rosel
