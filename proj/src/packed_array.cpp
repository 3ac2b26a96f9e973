#include "rosel/packed_array.hpp"

#include "rosel/errors.hpp"

namespace rosel {

PackedArray::PackedArray(WorkspaceMeter& meter, std::uint64_t size, unsigned width,
                         std::string_view label)
    : size_(size), width_(width) {
    if (width == 0 || width > kWordBits) {
        throw UsageError("packed array width must be in [1, 64]");
    }
    mask_ = width == kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    const std::uint64_t bits = size * width;
    charge_ = ScopedRegion(meter, bits, label);
    words_.assign((bits + kWordBits - 1) / kWordBits, 0);
}

void PackedArray::clear() noexcept {
    words_.clear();
    words_.shrink_to_fit();
    size_ = 0;
    charge_.reset();
}

}  // namespace rosel
