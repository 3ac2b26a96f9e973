#include "rosel/workspace.hpp"

#include "rosel/errors.hpp"

#include <algorithm>

namespace rosel {

std::uint32_t WorkspaceMeter::intern(std::string_view label) {
    // Runs use a handful of distinct labels, so a linear probe beats hashing.
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].name == label) {
            return static_cast<std::uint32_t>(i);
        }
    }
    labels_.push_back(LabelStats{std::string(label)});
    return static_cast<std::uint32_t>(labels_.size() - 1);
}

Region WorkspaceMeter::allocate(std::uint64_t bits, std::string_view label) {
    const std::uint64_t charged = round_to_words(bits);
    if (budget_ && current_ + charged > *budget_) {
        throw BudgetExceeded(std::string(label), charged, *budget_);
    }
    Region region{next_id_++, charged, intern(label)};
    live_.emplace(region.id, region);
    current_ += charged;
    peak_ = std::max(peak_, current_);
    auto& stats = labels_[region.label];
    stats.current += charged;
    stats.peak = std::max(stats.peak, stats.current);
    return region;
}

void WorkspaceMeter::release(const Region& region) {
    auto it = live_.find(region.id);
    if (it == live_.end()) {
        throw UsageError("release of unknown or already released region");
    }
    const std::uint64_t charged = it->second.bits;
    labels_[it->second.label].current -= charged;
    current_ -= charged;
    live_.erase(it);
}

WorkspaceReport WorkspaceMeter::report() const {
    WorkspaceReport out;
    out.current = current_;
    out.peak = peak_;
    out.budget = budget_;
    for (const auto& stats : labels_) {
        out.label_peaks[stats.name] = stats.peak;
    }
    return out;
}

std::string WorkspaceMeter::largest_label() const {
    const LabelStats* best = nullptr;
    for (const auto& stats : labels_) {
        if (best == nullptr || stats.peak > best->peak) {
            best = &stats;
        }
    }
    return best != nullptr ? best->name : std::string{};
}

}  // namespace rosel
