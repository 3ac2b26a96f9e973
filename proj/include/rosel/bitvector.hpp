#pragma once

#include "rosel/packed_array.hpp"
#include "rosel/workspace.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace rosel {

/// Append-only bit buffer with a length fixed at creation. Storage is charged
/// to the meter and handed over to RsBitVector::build.
class BitBuffer {
public:
    BitBuffer(WorkspaceMeter& meter, std::uint64_t length, std::string_view label);

    void append(bool bit) {
        if (bit) {
            words_[cursor_ / kWordBits] |= std::uint64_t{1} << (cursor_ % kWordBits);
        }
        ++cursor_;
    }

    /// Flips every bit written so far.
    void invert() noexcept;
    /// Clears the bit at 1-based position i (already written).
    void clear_bit(std::uint64_t i) noexcept {
        words_[(i - 1) / kWordBits] &= ~(std::uint64_t{1} << ((i - 1) % kWordBits));
    }

    std::uint64_t length() const noexcept { return length_; }
    std::uint64_t written() const noexcept { return cursor_; }
    bool full() const noexcept { return cursor_ == length_; }

private:
    friend class RsBitVector;

    std::vector<std::uint64_t> words_;
    std::uint64_t length_ = 0;
    std::uint64_t cursor_ = 0;
    ScopedRegion charge_;
};

enum class SelectSupport { OnesOnly, OnesAndZeros };

/// Sampled select directory over one bit polarity. Every `stride`-th target
/// bit is sampled; a block whose span reaches stride^2 bits lists all of its
/// positions explicitly, every other block is resolved by a bounded word scan.
class SelectDirectory {
public:
    SelectDirectory() = default;
    SelectDirectory(std::span<const std::uint64_t> words, std::uint64_t length, bool zeros,
                    WorkspaceMeter& meter, std::string_view label);

    /// 0-based position of the j-th target bit, j in [1, count()].
    std::uint64_t select(std::span<const std::uint64_t> words, std::uint64_t j) const;

    std::uint64_t count() const noexcept { return count_; }
    std::uint64_t charged_bits() const noexcept {
        return samples_.charged_bits() + offsets_.charged_bits() + explicit_.charged_bits();
    }
    std::uint64_t sparse_blocks() const noexcept { return sparse_blocks_; }

private:
    bool zeros_ = false;
    std::uint64_t count_ = 0;
    std::uint64_t stride_ = 1;
    std::uint64_t sparse_blocks_ = 0;
    PackedArray samples_;   // position of target bit t*stride + 1
    PackedArray offsets_;   // 1 + start in explicit_ for sparse blocks, 0 for dense
    PackedArray explicit_;  // positions of every target bit in sparse blocks
};

/// Plain bit vector with constant-time rank and select. Rank uses an absolute
/// count every kSuperWords words plus a 9-bit count per word relative to its
/// superblock. Positions and ranks are 1-based at the interface.
class RsBitVector {
public:
    RsBitVector() = default;

    /// The buffer must be completely written. Rank and select directories are
    /// built with one linear scan each and charged to `meter`.
    static RsBitVector build(BitBuffer&& bits, WorkspaceMeter& meter,
                             SelectSupport support = SelectSupport::OnesOnly);

    RsBitVector(RsBitVector&&) noexcept = default;
    RsBitVector& operator=(RsBitVector&&) noexcept = default;

    std::uint64_t length() const noexcept { return length_; }
    std::uint64_t ones() const noexcept { return ones_; }
    std::uint64_t zeros() const noexcept { return length_ - ones_; }

    /// Bit at 1-based position i. Throws BoundsError outside [1, L].
    bool access(std::uint64_t i) const;

    /// Number of 1-bits among positions 1..i; rank(0) = 0. Throws for i > L.
    std::uint64_t rank(std::uint64_t i) const;
    std::uint64_t rank0(std::uint64_t i) const { return i - rank(i); }

    /// Position of the j-th 1-bit. Throws BoundsError("no such one").
    std::uint64_t select(std::uint64_t j) const;

    /// Position of the j-th 0-bit. Requires SelectSupport::OnesAndZeros.
    std::uint64_t complement_select(std::uint64_t j) const;

    static constexpr std::uint64_t kSuperWords = 8;

    /// Number of 1-bits before 0-based word j; exposed for white-box tests.
    std::uint64_t landmark(std::uint64_t word) const {
        return superblocks_.get(word / kSuperWords) + landmarks_.get(word);
    }

    std::uint64_t storage_bits() const noexcept { return charge_.bits(); }
    std::uint64_t support_bits() const noexcept {
        return superblocks_.charged_bits() + landmarks_.charged_bits() + ones_dir_.charged_bits() +
               zeros_dir_.charged_bits();
    }
    std::uint64_t total_bits() const noexcept { return storage_bits() + support_bits(); }
    const SelectDirectory& ones_directory() const noexcept { return ones_dir_; }

    /// Unchecked variants for hot loops; arguments must already be in range.
    bool access_unchecked(std::uint64_t i) const noexcept {
        return (words_[(i - 1) / kWordBits] >> ((i - 1) % kWordBits)) & 1u;
    }
    std::uint64_t rank_unchecked(std::uint64_t i) const noexcept {
        const std::uint64_t word = i / kWordBits;
        const unsigned offset = static_cast<unsigned>(i % kWordBits);
        if (word == words_.size()) return ones_;
        std::uint64_t r = landmark(word);
        if (offset != 0) {
            r += static_cast<std::uint64_t>(std::popcount(words_[word] & ((std::uint64_t{1} << offset) - 1)));
        }
        return r;
    }
    std::uint64_t select_unchecked(std::uint64_t j) const { return ones_dir_.select(words_, j) + 1; }

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t length_ = 0;
    std::uint64_t ones_ = 0;
    bool has_zero_select_ = false;
    ScopedRegion charge_;
    PackedArray superblocks_;  // absolute 1-count before each group of kSuperWords words
    PackedArray landmarks_;    // 1-count before each word within its group
    SelectDirectory ones_dir_;
    SelectDirectory zeros_dir_;
};

/// 0-based position of the r-th (0-based) set bit of `word`; requires r < popcount(word).
unsigned select_in_word(std::uint64_t word, unsigned r) noexcept;

}  // namespace rosel
