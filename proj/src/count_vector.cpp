#include "rosel/count_vector.hpp"

#include "rosel/errors.hpp"
#include "rosel/math.hpp"

#include <numeric>
#include <string>

namespace rosel {

CountVector::CountVector(const ReadOnlyArray& a, const FilterPair& filters, std::uint64_t in_filter,
                         std::uint64_t buckets, WorkspaceMeter& meter)
    : buckets_(buckets), width_(ceil_div(a.size(), buckets)) {
    if (buckets == 0) {
        throw UsageError("count vector needs at least one bucket");
    }
    BitBuffer buffer(meter, in_filter + buckets - 1, "count-vector");
    std::uint64_t bucket = 1;
    std::uint64_t seen = 0;
    for (Index i = 1; i <= a.size(); ++i) {
        const std::uint64_t u = (i - 1) / width_ + 1;
        for (; bucket < u; ++bucket) buffer.append(false);
        if (filters.admits(a, i)) {
            if (++seen > in_filter) {
                throw UsageError("more filtered elements than announced");
            }
            buffer.append(true);
        }
    }
    for (; bucket < buckets; ++bucket) buffer.append(false);
    bits_ = RsBitVector::build(std::move(buffer), meter, SelectSupport::OnesAndZeros);
}

CountVector::CountVector(std::span<const std::uint64_t> counts, std::uint64_t width, WorkspaceMeter& meter)
    : buckets_(counts.size()), width_(width) {
    if (counts.empty()) {
        throw UsageError("count vector needs at least one bucket");
    }
    const std::uint64_t ones = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    BitBuffer buffer(meter, ones + counts.size() - 1, "count-vector");
    for (std::size_t u = 0; u < counts.size(); ++u) {
        if (u > 0) buffer.append(false);
        for (std::uint64_t c = 0; c < counts[u]; ++c) buffer.append(true);
    }
    bits_ = RsBitVector::build(std::move(buffer), meter, SelectSupport::OnesAndZeros);
}

CountVector::Location CountVector::locate(std::uint64_t j) const {
    Location loc;
    loc.position = bits_.select(j);
    loc.bucket = loc.position - j + 1;
    if (loc.bucket > 1) {
        loc.border = bits_.complement_select(loc.bucket - 1);
        loc.offset = loc.position - loc.border;
    } else {
        loc.offset = loc.position;
    }
    return loc;
}

}  // namespace rosel
