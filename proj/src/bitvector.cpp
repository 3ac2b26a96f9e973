#include "rosel/bitvector.hpp"

#include "rosel/errors.hpp"
#include "rosel/math.hpp"

#include <algorithm>
#include <string>

namespace rosel {

unsigned select_in_word(std::uint64_t word, unsigned r) noexcept {
    unsigned base = 0;
    for (;;) {
        const auto byte = static_cast<unsigned>(word & 0xffu);
        const auto count = static_cast<unsigned>(std::popcount(byte));
        if (r < count) {
            unsigned b = byte;
            for (; r > 0; --r) {
                b &= b - 1;
            }
            return base + static_cast<unsigned>(std::countr_zero(b));
        }
        r -= count;
        word >>= 8;
        base += 8;
    }
}

BitBuffer::BitBuffer(WorkspaceMeter& meter, std::uint64_t length, std::string_view label)
    : length_(length), charge_(meter, length, label) {
    words_.assign((length + kWordBits - 1) / kWordBits, 0);
}

void BitBuffer::invert() noexcept {
    for (auto& w : words_) w = ~w;
    const std::uint64_t tail = cursor_ % kWordBits;
    const std::uint64_t full = cursor_ / kWordBits;
    if (tail != 0) {
        words_[full] &= (std::uint64_t{1} << tail) - 1;
    }
    for (std::uint64_t w = full + (tail != 0 ? 1 : 0); w < words_.size(); ++w) words_[w] = 0;
}

namespace {

/// Word `wi` viewed in the directory's polarity, with bits past `length` cleared.
std::uint64_t target_word(std::span<const std::uint64_t> words, std::uint64_t wi, std::uint64_t length,
                          bool zeros) noexcept {
    std::uint64_t w = zeros ? ~words[wi] : words[wi];
    const std::uint64_t tail = length % kWordBits;
    if (wi + 1 == words.size() && tail != 0) {
        w &= (std::uint64_t{1} << tail) - 1;
    }
    return w;
}

}  // namespace

SelectDirectory::SelectDirectory(std::span<const std::uint64_t> words, std::uint64_t length, bool zeros,
                                 WorkspaceMeter& meter, std::string_view label)
    : zeros_(zeros) {
    stride_ = length <= 2 ? 1 : bits_for(length - 1);
    const unsigned pos_width = bits_for(length == 0 ? 0 : length - 1);

    for (std::uint64_t wi = 0; wi < words.size(); ++wi) {
        count_ += static_cast<std::uint64_t>(std::popcount(target_word(words, wi, length, zeros)));
    }
    const std::uint64_t blocks = (count_ + stride_ - 1) / stride_;
    samples_ = PackedArray(meter, blocks, pos_width, std::string(label) + "/samples");

    std::uint64_t seen = 0;
    std::uint64_t last_pos = 0;
    for (std::uint64_t wi = 0; wi < words.size(); ++wi) {
        std::uint64_t w = target_word(words, wi, length, zeros);
        const auto pc = static_cast<std::uint64_t>(std::popcount(w));
        if (pc == 0) continue;
        const std::uint64_t next_sample = (seen + stride_ - 1) / stride_ * stride_;
        if (seen + pc > next_sample) {
            for (; w != 0; w &= w - 1, ++seen) {
                if (seen % stride_ == 0) {
                    samples_.set(seen / stride_, wi * kWordBits + static_cast<unsigned>(std::countr_zero(w)));
                }
            }
        } else {
            seen += pc;
        }
        last_pos = wi * kWordBits + (kWordBits - 1 - static_cast<unsigned>(std::countl_zero(
                                                          target_word(words, wi, length, zeros))));
    }

    const std::uint64_t sparse_span = stride_ * stride_;
    std::uint64_t explicit_total = 0;
    auto block_end = [&](std::uint64_t t) {
        return t + 1 < blocks ? samples_.get(t + 1) : last_pos + 1;
    };
    auto block_size = [&](std::uint64_t t) {
        return std::min(stride_, count_ - t * stride_);
    };
    for (std::uint64_t t = 0; t < blocks; ++t) {
        if (block_end(t) - samples_.get(t) >= sparse_span) {
            ++sparse_blocks_;
            explicit_total += block_size(t);
        }
    }
    if (sparse_blocks_ == 0) {
        return;
    }

    offsets_ = PackedArray(meter, blocks, bits_for(explicit_total + 1), std::string(label) + "/offsets");
    explicit_ = PackedArray(meter, explicit_total, pos_width, std::string(label) + "/explicit");
    std::uint64_t fill = 0;
    for (std::uint64_t t = 0; t < blocks; ++t) {
        const std::uint64_t start = samples_.get(t);
        if (block_end(t) - start < sparse_span) continue;
        offsets_.set(t, fill + 1);
        std::uint64_t need = block_size(t);
        std::uint64_t wi = start / kWordBits;
        std::uint64_t w = target_word(words, wi, length, zeros) & (~std::uint64_t{0} << (start % kWordBits));
        while (need > 0) {
            while (w == 0) {
                w = target_word(words, ++wi, length, zeros);
            }
            explicit_.set(fill++, wi * kWordBits + static_cast<unsigned>(std::countr_zero(w)));
            w &= w - 1;
            --need;
        }
    }
}

std::uint64_t SelectDirectory::select(std::span<const std::uint64_t> words, std::uint64_t j) const {
    const std::uint64_t t = (j - 1) / stride_;
    auto r = static_cast<unsigned>((j - 1) % stride_);
    if (!offsets_.empty()) {
        const std::uint64_t off = offsets_.get(t);
        if (off != 0) {
            return explicit_.get(off - 1 + r);
        }
    }
    const std::uint64_t start = samples_.get(t);
    if (r == 0) {
        return start;
    }
    // Dense block: the target lies fewer than stride^2 bits past the sample.
    std::uint64_t wi = start / kWordBits;
    std::uint64_t w = (zeros_ ? ~words[wi] : words[wi]) & (~std::uint64_t{0} << (start % kWordBits));
    for (;;) {
        const auto pc = static_cast<unsigned>(std::popcount(w));
        if (r < pc) {
            return wi * kWordBits + select_in_word(w, r);
        }
        r -= pc;
        ++wi;
        w = zeros_ ? ~words[wi] : words[wi];
    }
}

RsBitVector RsBitVector::build(BitBuffer&& bits, WorkspaceMeter& meter, SelectSupport support) {
    if (!bits.full()) {
        throw UsageError("bit buffer not completely written (" + std::to_string(bits.written()) + " of " +
                         std::to_string(bits.length()) + " bits)");
    }
    RsBitVector v;
    v.words_ = std::move(bits.words_);
    v.length_ = bits.length_;
    v.charge_ = std::move(bits.charge_);

    const std::uint64_t nwords = v.words_.size();
    v.superblocks_ = PackedArray(meter, ceil_div(nwords, kSuperWords), bits_for(v.length_), "bitvector/superblocks");
    v.landmarks_ = PackedArray(meter, nwords, bits_for((kSuperWords - 1) * kWordBits), "bitvector/landmarks");
    std::uint64_t running = 0;
    for (std::uint64_t w = 0; w < nwords; ++w) {
        if (w % kSuperWords == 0) v.superblocks_.set(w / kSuperWords, running);
        v.landmarks_.set(w, running - v.superblocks_.get(w / kSuperWords));
        running += static_cast<std::uint64_t>(std::popcount(v.words_[w]));
    }
    v.ones_ = running;

    v.ones_dir_ = SelectDirectory(v.words_, v.length_, false, meter, "bitvector/select1");
    if (support == SelectSupport::OnesAndZeros) {
        v.zeros_dir_ = SelectDirectory(v.words_, v.length_, true, meter, "bitvector/select0");
        v.has_zero_select_ = true;
    }
    return v;
}

bool RsBitVector::access(std::uint64_t i) const {
    if (i == 0 || i > length_) {
        throw BoundsError("bit index " + std::to_string(i) + " outside [1, " + std::to_string(length_) + "]");
    }
    return access_unchecked(i);
}

std::uint64_t RsBitVector::rank(std::uint64_t i) const {
    if (i > length_) {
        throw BoundsError("rank position " + std::to_string(i) + " beyond length " + std::to_string(length_));
    }
    return rank_unchecked(i);
}

std::uint64_t RsBitVector::select(std::uint64_t j) const {
    if (j == 0 || j > ones_) {
        throw BoundsError("no such one: " + std::to_string(j) + " of " + std::to_string(ones_));
    }
    return select_unchecked(j);
}

std::uint64_t RsBitVector::complement_select(std::uint64_t j) const {
    if (!has_zero_select_) {
        throw UsageError("complement select needs SelectSupport::OnesAndZeros");
    }
    if (j == 0 || j > zeros()) {
        throw BoundsError("no such zero: " + std::to_string(j) + " of " + std::to_string(zeros()));
    }
    return zeros_dir_.select(words_, j) + 1;
}

}  // namespace rosel
