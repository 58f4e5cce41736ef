#include "lrvan/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lrvan {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition part is negative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts are not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) return Partition{};
    while (true) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw ParseError("expected nonnegative integer in partition at position " +
                             std::to_string(start) + " of \"" + text + "\"");
        long long value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000'000)
                throw ParseError("partition part out of range in \"" + text + "\"");
        }
        parts.push_back(static_cast<int>(value));
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                             "' in partition \"" + text + "\"");
        ++pos;
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string Partition::render() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool contains(const Partition& inner, const Partition& outer) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

Partition scale(const Partition& p, int factor) {
    if (factor < 0) throw std::invalid_argument("scale factor is negative");
    std::vector<int> parts = p.parts();
    for (int& x : parts) x *= factor;
    return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!contains(inner, outer))
        throw std::invalid_argument("skew shape: inner partition not contained in outer");
}

bool SkewShape::has_box(int row, int col) const {
    return row >= 1 && col >= 1 && inner.part(row) < col && col <= outer.part(row);
}

bool SkewShape::edge_admissible(int row, int col) const {
    return row >= 1 && col >= 1 && inner.part(row + 1) < col && col <= outer.part(row);
}

}  // namespace lrvan
