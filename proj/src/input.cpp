#include "rosel/input.hpp"

#include "rosel/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

namespace rosel {

ReadOnlyArray::ReadOnlyArray(std::vector<Value> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw ParseError("empty input");
    }
}

void ReadOnlyArray::check(Index i) const {
    if (i == 0 || i > values_.size()) {
        throw BoundsError("index " + std::to_string(i) + " outside [1, " +
                          std::to_string(values_.size()) + "]");
    }
}

OrderedKey ReadOnlyArray::get(Index i) const { return fetch(i); }

bool ReadOnlyArray::less(Index i, Index j) const {
    const OrderedKey a = fetch(i);
    const OrderedKey b = fetch(j);
    ++comparisons_;
    return a < b;
}

bool ReadOnlyArray::less(Index i, const OrderedKey& key) const {
    const OrderedKey a = fetch(i);
    ++comparisons_;
    return a < key;
}

bool ReadOnlyArray::less(const OrderedKey& key, Index i) const {
    const OrderedKey a = fetch(i);
    ++comparisons_;
    return key < a;
}

std::string to_string(Distribution d) {
    switch (d) {
        case Distribution::Permutation: return "perm";
        case Distribution::Sorted: return "sorted";
        case Distribution::ReverseSorted: return "reverse";
        case Distribution::FewDistinct: return "few-distinct";
    }
    return "?";
}

namespace {

std::uint64_t parse_unsigned(std::string_view text, const char* what) {
    std::uint64_t out = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ParseError(std::string("bad ") + what + " in generator spec: '" + std::string(text) + "'");
    }
    return out;
}

Distribution parse_distribution(std::string_view name) {
    if (name == "perm" || name == "permutation" || name == "uniform-random-permutation") {
        return Distribution::Permutation;
    }
    if (name == "sorted") return Distribution::Sorted;
    if (name == "reverse" || name == "reverse-sorted") return Distribution::ReverseSorted;
    if (name == "few-distinct" || name == "few") return Distribution::FewDistinct;
    throw ParseError("unknown distribution '" + std::string(name) + "'");
}

}  // namespace

GeneratorSpec parse_generator(const std::string& spec) {
    GeneratorSpec out;
    const auto colon = spec.find(':');
    out.count = parse_unsigned(std::string_view(spec).substr(0, colon), "count");
    if (colon != std::string::npos) {
        std::string_view rest = std::string_view(spec).substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError("generator option without '=': '" + std::string(item) + "'");
            }
            const std::string_view key = item.substr(0, eq);
            const std::string_view val = item.substr(eq + 1);
            if (key == "seed") {
                out.seed = parse_unsigned(val, "seed");
            } else if (key == "dist") {
                out.distribution = parse_distribution(val);
            } else {
                throw ParseError("unknown generator option '" + std::string(key) + "'");
            }
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
    }
    if (out.count == 0) {
        throw ParseError("empty input");
    }
    return out;
}

std::vector<Value> generate(const GeneratorSpec& spec) {
    std::vector<Value> out(spec.count);
    std::mt19937_64 rng(spec.seed);
    switch (spec.distribution) {
        case Distribution::Permutation:
            std::iota(out.begin(), out.end(), Value{1});
            // Fisher-Yates by hand: std::shuffle's draw sequence is library-specific.
            for (std::uint64_t i = out.size(); i > 1; --i) {
                const std::uint64_t j = rng() % i;
                std::swap(out[i - 1], out[j]);
            }
            break;
        case Distribution::Sorted:
            std::iota(out.begin(), out.end(), Value{1});
            break;
        case Distribution::ReverseSorted:
            for (std::uint64_t i = 0; i < out.size(); ++i) {
                out[i] = static_cast<Value>(out.size() - i);
            }
            break;
        case Distribution::FewDistinct:
            for (auto& v : out) {
                v = static_cast<Value>(rng() % 16);
            }
            break;
    }
    return out;
}

std::vector<Value> parse_text(const std::string& text) {
    std::vector<Value> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string_view line(text.data() + pos, end - pos);
        pos = end + 1;
        const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
        while (!line.empty() && is_space(line.front())) line.remove_prefix(1);
        while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
        if (line.empty()) continue;  // blank lines carry no value
        const char* first = line.data();
        const char* last = line.data() + line.size();
        if (first != last && *first == '+') ++first;
        Value v = 0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed integer '" +
                             std::string(line) + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ParseError("empty input");
    }
    return out;
}

std::vector<Value> load_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

std::vector<Value> load_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.empty()) {
        throw ParseError("empty input");
    }
    if (bytes.size() % 8 != 0) {
        throw ParseError("binary input length " + std::to_string(bytes.size()) + " is not a multiple of 8");
    }
    std::vector<Value> out(bytes.size() / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t u = 0;
        for (int b = 7; b >= 0; --b) {
            u = (u << 8) | bytes[i * 8 + static_cast<std::size_t>(b)];
        }
        out[i] = std::bit_cast<Value>(u);
    }
    return out;
}

void save_binary(const std::filesystem::path& path, std::span<const Value> values) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open " + path.string() + " for writing");
    }
    for (Value v : values) {
        auto u = std::bit_cast<std::uint64_t>(v);
        char bytes[8];
        for (int b = 0; b < 8; ++b) {
            bytes[b] = static_cast<char>(u & 0xff);
            u >>= 8;
        }
        out.write(bytes, 8);
    }
}

}  // namespace rosel
