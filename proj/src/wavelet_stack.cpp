#include "rosel/wavelet_stack.hpp"

#include "rosel/errors.hpp"
#include "rosel/math.hpp"

#include <string>

namespace rosel {

namespace {
// Per level: a reference into the level store and the level length.
constexpr std::uint64_t kHeaderBitsPerLevel = 2 * kWordBits;
}  // namespace

WaveletStack::WaveletStack(std::uint64_t n, WorkspaceMeter& meter)
    : meter_(&meter), base_length_(n), shrink_floor_(n == 0 ? 0 : ceil_div(n, ceil_lg(n))) {
    if (n == 0) {
        throw UsageError("wavelet stack over zero elements");
    }
    recharge_header();
}

void WaveletStack::recharge_header() {
    header_.reset();
    header_ = ScopedRegion(*meter_, (levels_.size() + 1) * kHeaderBitsPerLevel, "wavelet/header");
}

void WaveletStack::push_level(BitBuffer&& keep) {
    const std::uint64_t before = active_count();
    if (keep.length() != before) {
        throw UsageError("keep mask has " + std::to_string(keep.length()) + " bits, expected " +
                         std::to_string(before));
    }
    RsBitVector level = RsBitVector::build(std::move(keep), *meter_);
    if (level.ones() == 0) {
        throw UsageError("empty level refused");
    }
    if (before > shrink_floor_ && static_cast<double>(level.ones()) > kShrinkRatio * static_cast<double>(before)) {
        ++shrink_violations_;
    }
    levels_.push_back(std::move(level));
    recharge_header();
}

bool WaveletStack::is_active(std::uint64_t i) const {
    if (i == 0 || i > base_length_) {
        throw BoundsError("element " + std::to_string(i) + " outside [1, " + std::to_string(base_length_) + "]");
    }
    for (const auto& level : levels_) {
        ++level_touches_;
        if (!level.access_unchecked(i)) {
            return false;
        }
        i = level.rank_unchecked(i);
    }
    return true;
}

std::uint64_t WaveletStack::index(std::uint64_t j) const {
    if (j == 0 || j > active_count()) {
        throw BoundsError("fewer active elements than " + std::to_string(j));
    }
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
        ++level_touches_;
        j = it->select_unchecked(j);
    }
    return j;
}

const RsBitVector& WaveletStack::level(std::size_t l) const {
    if (l < 2 || l > height()) {
        throw BoundsError("stored levels are 2.." + std::to_string(height()) + ", asked for " + std::to_string(l));
    }
    return levels_[l - 2];
}

std::uint64_t WaveletStack::total_bits() const noexcept {
    std::uint64_t bits = header_.bits();
    for (const auto& level : levels_) {
        bits += level.total_bits();
    }
    return bits;
}

}  // namespace rosel
