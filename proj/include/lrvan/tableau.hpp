#pragma once

#include "lrvan/partition.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lrvan {

/// Thrown when an enumeration or search exceeds its node budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SearchLimits {
    long long max_nodes = 10'000'000;
};

using ReadingWord = std::vector<int>;

/// Skew tableau with one label per box and a (possibly empty) set of labels
/// on each admissible horizontal edge.  Edge position (i, j) stands for the
/// edge (i+1/2, j) on the southern border of row i.  The constructor checks
/// structure only: boxes exactly fill the shape, edge sets sit on admissible
/// edges and hold strictly increasing positive labels.  Semantic validity
/// (rows, columns, the too-high condition, content) is checked by is_valid.
class EdgeLabeledTableau {
public:
    using BoxMap = std::map<std::pair<int, int>, int>;
    using EdgeMap = std::map<std::pair<int, int>, std::vector<int>>;

    EdgeLabeledTableau() = default;
    EdgeLabeledTableau(SkewShape shape, BoxMap boxes, EdgeMap edges);

    const SkewShape& shape() const { return shape_; }
    const BoxMap& boxes() const { return boxes_; }
    const EdgeMap& edges() const { return edges_; }

    int box(int row, int col) const;  // throws std::out_of_range if absent
    /// Sorted labels on edge (row+1/2, col); empty vector if none.
    const std::vector<int>& edge(int row, int col) const;

    int max_label() const;

    friend bool operator==(const EdgeLabeledTableau&, const EdgeLabeledTableau&) = default;

private:
    SkewShape shape_;
    BoxMap boxes_;
    EdgeMap edges_;
};

/// Counts of each label per row: box(k, i) is the number of k's among the
/// boxes of row i, edge(k, i) the number on edge (i+1/2).  Reads outside the
/// stored ranges yield 0, writes there grow the storage, and equality ignores
/// trailing all-zero rows or labels, so statistics of different nominal
/// dimensions compare by content.
struct RowStatistics {
    int rows = 0;    // nominal number of shape rows
    int labels = 0;  // nominal number of labels

    static RowStatistics zeros(int rows, int labels);

    long long box(int k, int i) const;
    long long edge(int k, int i) const;
    void set_box(int k, int i, long long v);
    void set_edge(int k, int i, long long v);

    /// Flattening in variable order: k outer, i inner, box before edge.
    std::vector<long long> to_vector() const;
    static RowStatistics from_vector(const std::vector<long long>& v, int rows, int labels);

    friend bool operator==(const RowStatistics& a, const RowStatistics& b);

    std::vector<long long> box_counts, edge_counts;  // (k-1)*rows + (i-1)
};

/// Every prefix of w contains at least as many k's as (k+1)'s, for all k.
bool is_lattice(const ReadingWord& w);

/// Columns right to left; within a column top to bottom, box label before
/// the edge set below it, each set in increasing order.
ReadingWord column_word(const EdgeLabeledTableau& t);

/// Row 1 boxes right to left, then edge row 1+1/2 right to left (each set in
/// increasing order), then row 2, and so on.
ReadingWord row_word(const EdgeLabeledTableau& t);

/// Rows weakly increase (boxes), columns strictly increase through the
/// interleaved edge sets, no label k above row k, and the content is mu.
bool is_valid(const EdgeLabeledTableau& t, const Partition& mu);

RowStatistics row_statistics(const EdgeLabeledTableau& t);

/// All structurally and semantically valid tableaux of shape nu/la and
/// content mu, in a canonical deterministic order.  Lattice not required.
std::vector<EdgeLabeledTableau> enumerate_valid_tableaux(const Partition& la,
                                                         const Partition& mu,
                                                         const Partition& nu,
                                                         const SearchLimits& limits = {});

/// The subset of enumerate_valid_tableaux whose column word is lattice.
std::vector<EdgeLabeledTableau> enumerate_tableaux(const Partition& la,
                                                   const Partition& mu,
                                                   const Partition& nu,
                                                   const SearchLimits& limits = {});

/// Builds the canonical tableau realizing integral row statistics r, placing
/// the k's of edge row i+1/2 in the rightmost admissible columns.  Requires r
/// to satisfy the full constraint system for (la, mu, nu); throws
/// std::invalid_argument otherwise.
EdgeLabeledTableau reconstruct_witness(const RowStatistics& r, const Partition& la,
                                       const Partition& mu, const Partition& nu);

}  // namespace lrvan
