#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrvan {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Weakly decreasing sequence of nonnegative integers.  Trailing zeros are
/// stripped on construction, so (3,1,0,0) and (3,1) compare equal.  Reads
/// past the stored length yield 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Accepts "3,1", "3, 1", "" and "0,0".  Throws ParseError on anything
    /// that is not a comma separated list of nonnegative integers, and
    /// std::invalid_argument if the list is not weakly decreasing.
    static Partition parse(const std::string& text);

    int part(int i) const;        // 1-based; 0 when i exceeds the length
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;       // sum of parts
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    std::string render() const;   // "3,1"; empty partition renders as ""

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Componentwise containment inner_i <= outer_i.
bool contains(const Partition& inner, const Partition& outer);

/// Multiplies every part by factor (factor >= 0).
Partition scale(const Partition& p, int factor);

/// Skew shape outer/inner.  Construction requires inner contained in outer.
struct SkewShape {
    Partition outer, inner;

    SkewShape() = default;
    SkewShape(Partition outer_, Partition inner_);

    int rows() const { return outer.length(); }
    long long box_count() const { return outer.size() - inner.size(); }

    /// Box (row, col), 1-based: present iff inner_row < col <= outer_row.
    bool has_box(int row, int col) const;

    /// Horizontal edge below row `row` at column `col` may carry labels
    /// iff inner_{row+1} < col <= outer_row.
    bool edge_admissible(int row, int col) const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

}  // namespace lrvan
