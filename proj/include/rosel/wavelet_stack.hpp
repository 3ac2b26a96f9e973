#pragma once

#include "rosel/bitvector.hpp"
#include "rosel/workspace.hpp"

#include <cstdint>
#include <vector>

namespace rosel {

/// Stack of rank/select bit vectors recording which of `base_length` elements
/// survive each pruning round. Level 1 has one bit per element; level l+1 has
/// one bit per 1-bit of level l. Only ever grows; discard the whole stack.
class WaveletStack {
public:
    /// Survivor counts must shrink to at most 7/8 of the previous count while
    /// the active count exceeds ceil(N / lg N).
    static constexpr double kShrinkRatio = 7.0 / 8.0;

    /// A stack of height 1 over n elements, all active. The all-ones base
    /// level is implicit and uses no bits. Throws UsageError for n == 0.
    WaveletStack(std::uint64_t n, WorkspaceMeter& meter);

    WaveletStack(WaveletStack&&) noexcept = default;
    WaveletStack& operator=(WaveletStack&&) noexcept = default;

    /// Buffer for the next keep-mask: one bit per active element, in active order.
    BitBuffer mask_buffer() const { return BitBuffer(*meter_, active_count(), "wavelet/level"); }

    /// Pushes a completely written mask of active_count() bits. An all-zero
    /// mask throws UsageError("empty level refused").
    void push_level(BitBuffer&& keep);

    /// Whether input element i (1-based) is active at the top level.
    bool is_active(std::uint64_t i) const;

    /// Input index of the j-th active element in left-to-right order.
    std::uint64_t index(std::uint64_t j) const;

    std::uint64_t active_count() const noexcept { return levels_.empty() ? base_length_ : levels_.back().ones(); }
    std::uint64_t base_length() const noexcept { return base_length_; }
    /// Number of levels including the implicit base level 1.
    std::size_t height() const noexcept { return levels_.size() + 1; }
    /// Stored level l in [2, height()]; level 2 has base_length() bits.
    const RsBitVector& level(std::size_t l) const;

    /// Pushes whose survivor count broke the shrink condition.
    std::uint64_t shrink_violations() const noexcept { return shrink_violations_; }

    /// Bits charged for pushed levels, their directories, and the level header.
    std::uint64_t total_bits() const noexcept;

    /// Number of level visits made by is_active/index since construction.
    std::uint64_t level_touches() const noexcept { return level_touches_; }

private:
    void recharge_header();

    WorkspaceMeter* meter_;
    std::uint64_t base_length_;
    std::uint64_t shrink_floor_;
    std::vector<RsBitVector> levels_;
    ScopedRegion header_;
    std::uint64_t shrink_violations_ = 0;
    mutable std::uint64_t level_touches_ = 0;
};

}  // namespace rosel
