#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rosel {

inline constexpr std::uint64_t kWordBits = 64;

/// Round a bit count up to whole 64-bit words.
constexpr std::uint64_t round_to_words(std::uint64_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits * kWordBits;
}

/// Handle for one live allocation. `bits` is the word-rounded size that was charged.
struct Region {
    std::uint64_t id = 0;
    std::uint64_t bits = 0;
    std::uint32_t label = 0;
};

struct WorkspaceReport {
    std::uint64_t current = 0;
    std::uint64_t peak = 0;
    std::optional<std::uint64_t> budget;
    std::map<std::string, std::uint64_t> label_peaks;
};

/// Bit-granular accounting arena. Every structure an algorithm writes to is
/// charged here, so the peak is the workspace the run actually needed.
class WorkspaceMeter {
public:
    WorkspaceMeter() = default;
    explicit WorkspaceMeter(std::optional<std::uint64_t> budget_bits) : budget_(budget_bits) {}

    WorkspaceMeter(const WorkspaceMeter&) = delete;
    WorkspaceMeter& operator=(const WorkspaceMeter&) = delete;

    /// Charges `bits` rounded up to a whole word. Throws BudgetExceeded when the
    /// budget would be overrun; the meter is left unchanged in that case.
    Region allocate(std::uint64_t bits, std::string_view label);

    /// Throws UsageError for regions that are unknown or already released.
    void release(const Region& region);

    WorkspaceReport report() const;

    std::uint64_t current() const noexcept { return current_; }
    std::uint64_t peak() const noexcept { return peak_; }
    std::optional<std::uint64_t> budget() const noexcept { return budget_; }
    std::size_t live_regions() const noexcept { return live_.size(); }

    /// Label of the allocation with the most bits at its peak; empty for a fresh meter.
    std::string largest_label() const;

private:
    struct LabelStats {
        std::string name;
        std::uint64_t current = 0;
        std::uint64_t peak = 0;
    };

    std::uint32_t intern(std::string_view label);

    std::optional<std::uint64_t> budget_;
    std::uint64_t current_ = 0;
    std::uint64_t peak_ = 0;
    std::uint64_t next_id_ = 1;
    std::unordered_map<std::uint64_t, Region> live_;
    std::vector<LabelStats> labels_;
};

/// Owning RAII wrapper: releases its region on destruction.
class ScopedRegion {
public:
    ScopedRegion() = default;
    ScopedRegion(WorkspaceMeter& meter, std::uint64_t bits, std::string_view label)
        : meter_(&meter), region_(meter.allocate(bits, label)) {}

    ScopedRegion(ScopedRegion&& other) noexcept
        : meter_(std::exchange(other.meter_, nullptr)), region_(other.region_) {}
    ScopedRegion& operator=(ScopedRegion&& other) noexcept {
        if (this != &other) {
            reset();
            meter_ = std::exchange(other.meter_, nullptr);
            region_ = other.region_;
        }
        return *this;
    }
    ScopedRegion(const ScopedRegion&) = delete;
    ScopedRegion& operator=(const ScopedRegion&) = delete;
    ~ScopedRegion() { reset(); }

    void reset() noexcept {
        if (meter_ != nullptr) {
            meter_->release(region_);
            meter_ = nullptr;
        }
    }

    std::uint64_t bits() const noexcept { return meter_ != nullptr ? region_.bits : 0; }
    WorkspaceMeter* meter() const noexcept { return meter_; }

private:
    WorkspaceMeter* meter_ = nullptr;
    Region region_{};
};

}  // namespace rosel
