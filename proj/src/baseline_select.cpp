#include "rosel/baseline_select.hpp"

#include "rosel/errors.hpp"

#include <algorithm>
#include <string>

namespace rosel {

namespace {

constexpr std::uint64_t kSmallRange = 10;

void insertion_sort(PackedArray& idx, std::uint64_t lo, std::uint64_t hi, const ReadOnlyArray& a) {
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
        const std::uint64_t moving = idx.get(i);
        std::uint64_t j = i;
        while (j > lo && a.less(moving, idx.get(j - 1))) {
            idx.set(j, idx.get(j - 1));
            --j;
        }
        idx.set(j, moving);
    }
}

std::uint64_t select_range(PackedArray& idx, std::uint64_t lo, std::uint64_t hi, std::uint64_t k,
                           const ReadOnlyArray& a, WorkspaceMeter& meter) {
    ScopedRegion frame(meter, kBaselineFrameWords * kWordBits, "baseline/frames");
    // k is 0-based relative to lo from here on.
    for (;;) {
        const std::uint64_t n = hi - lo;
        if (n <= kSmallRange) {
            insertion_sort(idx, lo, hi, a);
            return lo + k;
        }
        const std::uint64_t groups = (n + 4) / 5;
        for (std::uint64_t g = 0; g < groups; ++g) {
            const std::uint64_t gl = lo + 5 * g;
            const std::uint64_t gh = std::min(gl + 5, hi);
            insertion_sort(idx, gl, gh, a);
            idx.swap(lo + g, gl + (gh - gl - 1) / 2);
        }
        const std::uint64_t pivot_pos = select_range(idx, lo, lo + groups, (groups - 1) / 2, a, meter);

        idx.swap(pivot_pos, hi - 1);
        const OrderedKey pivot = a.get(idx.get(hi - 1));
        std::uint64_t store = lo;
        for (std::uint64_t i = lo; i + 1 < hi; ++i) {
            if (a.less(idx.get(i), pivot)) {
                idx.swap(i, store++);
            }
        }
        idx.swap(store, hi - 1);

        const std::uint64_t r = store - lo;
        if (k == r) {
            return store;
        }
        if (k < r) {
            hi = store;
        } else {
            k -= r + 1;
            lo = store + 1;
        }
    }
}

}  // namespace

std::uint64_t baseline_select_at(PackedArray& indices, std::uint64_t lo, std::uint64_t hi, std::uint64_t k,
                                 const ReadOnlyArray& a, WorkspaceMeter& meter) {
    if (lo >= hi || k == 0 || k > hi - lo) {
        throw BoundsError("baseline select rank " + std::to_string(k) + " outside [1, " +
                          std::to_string(hi > lo ? hi - lo : 0) + "]");
    }
    return select_range(indices, lo, hi, k - 1, a, meter);
}

Index baseline_select(PackedArray& indices, std::uint64_t k, const ReadOnlyArray& a, WorkspaceMeter& meter) {
    return indices.get(baseline_select_at(indices, 0, indices.size(), k, a, meter));
}

void heap_sort(PackedArray& idx, std::uint64_t lo, std::uint64_t hi, const ReadOnlyArray& a) {
    const std::uint64_t n = hi - lo;
    if (n < 2) return;
    auto sift_down = [&](std::uint64_t root, std::uint64_t end) {
        for (;;) {
            std::uint64_t child = 2 * root + 1;
            if (child >= end) return;
            if (child + 1 < end && a.less(idx.get(lo + child), idx.get(lo + child + 1))) {
                ++child;
            }
            if (!a.less(idx.get(lo + root), idx.get(lo + child))) return;
            idx.swap(lo + root, lo + child);
            root = child;
        }
    };
    for (std::uint64_t i = n / 2; i-- > 0;) {
        sift_down(i, n);
    }
    for (std::uint64_t end = n - 1; end > 0; --end) {
        idx.swap(lo, lo + end);
        sift_down(0, end);
    }
}

}  // namespace rosel
