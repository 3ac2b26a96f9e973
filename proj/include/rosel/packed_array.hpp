#pragma once

#include "rosel/workspace.hpp"

#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

namespace rosel {

/// Bits needed to store any value in [0, max_value].
constexpr unsigned bits_for(std::uint64_t max_value) noexcept {
    return max_value == 0 ? 1u : static_cast<unsigned>(std::bit_width(max_value));
}

/// Fixed-width unsigned integer array packed into 64-bit words and charged to
/// a meter. Entries are addressed by 0-based offsets.
class PackedArray {
public:
    PackedArray() = default;
    PackedArray(WorkspaceMeter& meter, std::uint64_t size, unsigned width, std::string_view label);

    PackedArray(PackedArray&&) noexcept = default;
    PackedArray& operator=(PackedArray&&) noexcept = default;

    std::uint64_t get(std::uint64_t i) const noexcept {
        const std::uint64_t bit = i * width_;
        const std::uint64_t word = bit / kWordBits;
        const unsigned offset = static_cast<unsigned>(bit % kWordBits);
        std::uint64_t value = words_[word] >> offset;
        if (offset + width_ > kWordBits) {
            value |= words_[word + 1] << (kWordBits - offset);
        }
        return value & mask_;
    }

    void set(std::uint64_t i, std::uint64_t value) noexcept {
        value &= mask_;
        const std::uint64_t bit = i * width_;
        const std::uint64_t word = bit / kWordBits;
        const unsigned offset = static_cast<unsigned>(bit % kWordBits);
        words_[word] = (words_[word] & ~(mask_ << offset)) | (value << offset);
        if (offset + width_ > kWordBits) {
            const unsigned spill = kWordBits - offset;
            words_[word + 1] = (words_[word + 1] & ~(mask_ >> spill)) | (value >> spill);
        }
    }

    void swap(std::uint64_t i, std::uint64_t j) noexcept {
        const std::uint64_t tmp = get(i);
        set(i, get(j));
        set(j, tmp);
    }

    std::uint64_t size() const noexcept { return size_; }
    unsigned width() const noexcept { return width_; }
    bool empty() const noexcept { return size_ == 0; }
    std::uint64_t charged_bits() const noexcept { return charge_.bits(); }

    /// Drops the storage and returns its bits to the meter.
    void clear() noexcept;

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
    unsigned width_ = 1;
    std::uint64_t mask_ = 1;
    ScopedRegion charge_;
};

}  // namespace rosel
