#include "rosel/pruning.hpp"

#include "rosel/baseline_select.hpp"
#include "rosel/errors.hpp"
#include "rosel/math.hpp"
#include "rosel/packed_array.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rosel {

SamplingPlan plan_sampling(std::uint64_t n, std::uint64_t budget_bits) {
    const std::uint64_t lg = ceil_lg(n);
    SamplingPlan plan;
    plan.words = budget_bits / lg;
    plan.s = std::max<std::uint64_t>(4, 2 * ceil_div(plan.words, 2 * lg));
    return plan;
}

std::uint64_t count_active(const ReadOnlyArray& a, const FilterPair& f) {
    std::uint64_t count = 0;
    for (Index i = 1; i <= a.size(); ++i) {
        count += f.admits(a, i) ? 1 : 0;
    }
    return count;
}

std::pair<std::uint64_t, std::uint64_t> mp_filter_ranks(std::uint64_t k, std::uint64_t r, std::uint64_t s) {
    const std::uint64_t scaled = r >= 64 ? 1 : ceil_div(k, std::uint64_t{1} << r);
    const std::uint64_t low = scaled > r ? scaled - r : 1;
    return {std::max<std::uint64_t>(1, low), std::min(s, scaled)};
}

namespace {

// Entry 0 in a sample is the +infinity sentinel; real entries are input indices.
constexpr std::uint64_t kInfinity = 0;

/// A sorted sample. The element at 1-based position p has rank in
/// [p * unit, (p + slack) * unit] within the population it represents.
struct Sample {
    PackedArray items;
    std::uint64_t size = 0;
    double unit = 1.0;
    double slack = 0.0;
};

class Sampler {
public:
    Sampler(const ReadOnlyArray& a, std::uint64_t s, std::uint64_t d, WorkspaceMeter& meter, PruneStats* stats)
        : a_(a), s_(s), d_(d), meter_(meter), stats_(stats), width_(bits_for(a.size())) {}

    bool less(std::uint64_t x, std::uint64_t y) const {
        if (x == kInfinity) return false;
        if (y == kInfinity) return true;
        return a_.less(x, y);
    }

    /// Builds the level-0 sample of collect[0, size), padded to s with sentinels.
    Sample level_zero(PackedArray& collect, std::uint64_t size) {
        Sample out;
        if (d_ == s_) {
            heap_sort(collect, 0, size, a_);
            out.items = PackedArray(meter_, s_, width_, "pruning/sample");
            for (std::uint64_t i = 0; i < size; ++i) out.items.set(i, collect.get(i));
            out.size = s_;
            return out;
        }
        auto quantile_rank = [this](std::uint64_t j) { return ceil_div((j + 1) * s_, d_); };
        std::uint64_t reals = 0;
        while (reals < d_ && quantile_rank(reals) <= size) ++reals;
        baseline_multiselect(collect, 0, size, 0, reals, quantile_rank, 0, a_, meter_);
        out.items = PackedArray(meter_, d_, width_, "pruning/sample");
        for (std::uint64_t j = 0; j < reals; ++j) out.items.set(j, collect.get(quantile_rank(j) - 1));
        out.size = d_;
        out.unit = static_cast<double>(s_) / static_cast<double>(d_);
        out.slack = s_ % d_ == 0 ? 0.0 : 1.0 / out.unit;
        return out;
    }

    /// Merges two same-level samples; `other == nullptr` stands for an all-sentinel
    /// sample. Plain merge while the result fits in s, thin-and-merge otherwise.
    Sample combine(const Sample& first, const Sample* other) {
        const std::uint64_t m = first.size;
        const bool plain = 2 * m <= s_;
        const std::uint64_t take = plain ? m : m / 2;
        auto pick = [&](const Sample* smp, std::uint64_t t) -> std::uint64_t {
            if (smp == nullptr) return kInfinity;
            return smp->items.get(plain ? t : 2 * t + 1);
        };
        Sample out;
        out.size = 2 * take;
        out.items = PackedArray(meter_, out.size, width_, "pruning/sample");
        std::uint64_t i = 0;
        std::uint64_t j = 0;
        std::uint64_t o = 0;
        while (i < take && j < take) {
            const std::uint64_t x = pick(&first, i);
            const std::uint64_t y = pick(other, j);
            if (less(y, x)) {
                out.items.set(o++, y);
                ++j;
            } else {
                out.items.set(o++, x);
                ++i;
            }
        }
        for (; i < take; ++i) out.items.set(o++, pick(&first, i));
        for (; j < take; ++j) out.items.set(o++, pick(other, j));

        const double slack = other != nullptr ? std::max(first.slack, other->slack) : first.slack;
        if (plain) {
            out.unit = first.unit;
            out.slack = 2.0 * slack + 1.0 - 1.0 / first.unit;
        } else {
            out.unit = 2.0 * first.unit;
            out.slack = slack + 1.0 - 1.0 / out.unit;
        }
        return out;
    }

    void insert(Sample sample) {
        std::size_t level = 0;
        while (level < levels_.size() && levels_[level]) {
            sample = combine(*levels_[level], &sample);
            levels_[level].reset();
            ++level;
        }
        if (level == levels_.size()) levels_.emplace_back();
        levels_[level] = std::move(sample);
        note_levels();
    }

    /// Collapses every level into one sample; returns it with its level.
    std::pair<Sample, std::uint64_t> collapse() {
        std::optional<Sample> carry;
        std::uint64_t carry_level = 0;
        for (std::size_t level = 0; level < levels_.size(); ++level) {
            if (!levels_[level]) continue;
            if (!carry) {
                carry = std::move(levels_[level]);
                carry_level = level;
            } else {
                // Lift the carry to this level against all-infinity partners, then merge.
                for (; carry_level < level; ++carry_level) carry = combine(*carry, nullptr);
                carry = combine(*levels_[level], &*carry);
                carry_level = level + 1;
            }
            levels_[level].reset();
        }
        return {std::move(*carry), carry_level};
    }

private:
    void note_levels() {
        if (stats_ == nullptr) return;
        std::uint64_t alive = 0;
        for (const auto& l : levels_) alive += l ? 1 : 0;
        stats_->max_levels = std::max(stats_->max_levels, alive);
    }

    const ReadOnlyArray& a_;
    std::uint64_t s_;
    std::uint64_t d_;
    WorkspaceMeter& meter_;
    PruneStats* stats_;
    unsigned width_;
    std::vector<std::optional<Sample>> levels_;
};

}  // namespace

PassResult sampling_pass(const ReadOnlyArray& a, const PruneState& state, std::uint64_t s, std::uint64_t d,
                         WorkspaceMeter& meter, PruneStats* stats) {
    if (s < 4 || s % 2 != 0) {
        throw ParameterError("sample size must be even and at least 4, got " + std::to_string(s));
    }
    if (d < 2 || d > s) {
        throw ParameterError("quantile parameter must lie in [2, s], got " + std::to_string(d));
    }
    PassResult result{state};
    if (state.found || state.active <= s) {
        result.endgame = true;
        return result;
    }

    std::uint64_t low_rank = 0;
    std::uint64_t high_rank = 0;
    OrderedKey low_key;
    OrderedKey high_key;
    {
        Sampler sampler(a, s, d, meter, stats);
        {
            PackedArray collect(meter, s, bits_for(a.size()), "pruning/collect");
            std::uint64_t filled = 0;
            for (Index i = 1; i <= a.size(); ++i) {
                if (!state.filters.admits(a, i)) continue;
                collect.set(filled++, i);
                if (filled == s) {
                    sampler.insert(sampler.level_zero(collect, filled));
                    filled = 0;
                }
            }
            if (filled > 0) {
                sampler.insert(sampler.level_zero(collect, filled));
            }
        }
        auto [final_sample, level] = sampler.collapse();
        result.final_level = level;

        std::uint64_t reals = final_sample.size;
        while (reals > 0 && final_sample.items.get(reals - 1) == kInfinity) --reals;
        if (reals == 0) {
            throw Error("sampling pass produced no candidates");
        }
        if (d == s) {
            std::tie(low_rank, high_rank) = mp_filter_ranks(state.k, level, s);
        } else {
            const double unit = final_sample.unit;
            const double lo = std::floor(static_cast<double>(state.k - 1) / unit - final_sample.slack);
            const double hi = std::ceil(static_cast<double>(state.k) / unit);
            low_rank = lo < 1.0 ? 1 : static_cast<std::uint64_t>(lo);
            high_rank = std::min<std::uint64_t>(final_sample.size, std::max(1.0, hi));
            low_rank = std::min(low_rank, high_rank);
        }
        low_rank = std::min(low_rank, reals);
        high_rank = std::min(high_rank, reals);
        low_key = a.get(final_sample.items.get(low_rank - 1));
        high_key = a.get(final_sample.items.get(high_rank - 1));
    }
    result.low_rank = low_rank;
    result.high_rank = high_rank;

    // Counting scan: below = #active < low candidate, upto = #active <= high candidate.
    std::uint64_t below = 0;
    std::uint64_t upto = 0;
    for (Index i = 1; i <= a.size(); ++i) {
        if (!state.filters.admits(a, i)) continue;
        if (a.less(i, low_key)) {
            ++below;
            ++upto;
        } else if (!a.less(high_key, i)) {
            ++upto;
        }
    }

    PruneState& next = result.state;
    const std::uint64_t k = state.k;
    if (k <= below) {
        next.filters.high = low_key;
        next.active = below;
    } else if (k == below + 1) {
        if (high_key != low_key) {
            next.filters.high = high_key;
            next.active = upto - 1;
        } else {
            next.found = low_key.index;
        }
    } else if (k < upto) {
        next.filters = FilterPair{low_key, high_key};
        next.k = k - below - 1;
        next.active = upto - below - 2;
    } else if (k == upto) {
        next.filters.low = low_key;
        next.k = k - below - 1;
        next.active = state.active - below - 1;
    } else {
        next.filters.low = high_key;
        next.k = k - upto;
        next.active = state.active - upto;
    }

    if (stats != nullptr) {
        stats->scans += 2;
        ++stats->sampling_passes;
        if (d < s) ++stats->quantile_passes;
        stats->active_after_pass.push_back(next.active);
    }
    return result;
}

PassResult mp_pass(const ReadOnlyArray& a, const PruneState& state, std::uint64_t s, WorkspaceMeter& meter,
                   PruneStats* stats) {
    return sampling_pass(a, state, s, s, meter, stats);
}

PruneState fred_phase(const ReadOnlyArray& a, const PruneState& state, std::uint64_t s, std::uint64_t d,
                      std::uint64_t target, WorkspaceMeter& meter, PruneStats* stats, const PruneHooks& hooks) {
    PruneState current = state;
    while (!current.found && current.active > target) {
        PassResult pass = sampling_pass(a, current, s, d, meter, stats);
        if (pass.endgame) break;
        current = pass.state;
        if (hooks.after_pass) hooks.after_pass(current);
    }
    return current;
}

PruneState prune_until(const ReadOnlyArray& a, std::uint64_t k, std::uint64_t budget_bits, std::uint64_t limit,
                       WorkspaceMeter& meter, PruneStats* stats, const PruneHooks& hooks) {
    const std::uint64_t n = a.size();
    if (k == 0 || k > n) {
        throw BoundsError("rank " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
    PruneState state{FilterPair{}, k, n, std::nullopt};
    if (n <= limit) {
        return state;
    }
    const std::uint64_t s = plan_sampling(n, budget_bits).s;
    const unsigned star = lg_star(static_cast<double>(s));
    unsigned phase = star > 2 ? star - 2 : 0;

    while (!state.found && state.active > limit) {
        std::uint64_t d = s;
        if (phase > 0) {
            d = std::clamp<std::uint64_t>(
                static_cast<std::uint64_t>(std::floor(iterated_lg(phase, static_cast<double>(s)))), 2, s);
            // Switch to plain Munro-Paterson passes once d >= min(s, n / s).
            if (d >= std::min(s, state.active / s)) {
                phase = 0;
                d = s;
            }
        }
        PassResult pass = sampling_pass(a, state, s, d, meter, stats);
        if (pass.endgame) break;
        state = pass.state;
        if (hooks.after_pass) hooks.after_pass(state);
        if (phase > 0) {
            const double phase_target = static_cast<double>(n) / iterated_lg(phase, static_cast<double>(s));
            if (static_cast<double>(state.active) <= phase_target) --phase;
        }
    }
    return state;
}

PruneState reduce_to_s(const ReadOnlyArray& a, std::uint64_t k, std::uint64_t budget_bits, WorkspaceMeter& meter,
                       PruneStats* stats, const PruneHooks& hooks) {
    return prune_until(a, k, budget_bits, budget_bits, meter, stats, hooks);
}

}  // namespace rosel
