#include "lrvan/tableau.hpp"

#include "lrvan/polytope.hpp"

#include <algorithm>

namespace lrvan {

EdgeLabeledTableau::EdgeLabeledTableau(SkewShape shape, BoxMap boxes, EdgeMap edges)
    : shape_(std::move(shape)), boxes_(std::move(boxes)) {
    long long expect = shape_.box_count();
    if (static_cast<long long>(boxes_.size()) != expect)
        throw std::invalid_argument("tableau: box count does not match shape");
    for (const auto& [pos, label] : boxes_) {
        if (!shape_.has_box(pos.first, pos.second))
            throw std::invalid_argument("tableau: box outside shape at (" +
                                        std::to_string(pos.first) + "," +
                                        std::to_string(pos.second) + ")");
        if (label < 1) throw std::invalid_argument("tableau: box label < 1");
    }
    for (auto& [pos, labels] : edges) {
        if (labels.empty()) continue;
        if (!shape_.edge_admissible(pos.first, pos.second))
            throw std::invalid_argument("tableau: labels on inadmissible edge (" +
                                        std::to_string(pos.first) + "+1/2," +
                                        std::to_string(pos.second) + ")");
        for (std::size_t a = 0; a < labels.size(); ++a) {
            if (labels[a] < 1) throw std::invalid_argument("tableau: edge label < 1");
            if (a > 0 && labels[a] <= labels[a - 1])
                throw std::invalid_argument("tableau: edge set not strictly increasing");
        }
        edges_.emplace(pos, std::move(labels));
    }
}

int EdgeLabeledTableau::box(int row, int col) const {
    auto it = boxes_.find({row, col});
    if (it == boxes_.end())
        throw std::out_of_range("tableau: no box at (" + std::to_string(row) + "," +
                                std::to_string(col) + ")");
    return it->second;
}

const std::vector<int>& EdgeLabeledTableau::edge(int row, int col) const {
    static const std::vector<int> none;
    auto it = edges_.find({row, col});
    return it == edges_.end() ? none : it->second;
}

int EdgeLabeledTableau::max_label() const {
    int m = 0;
    for (const auto& [pos, label] : boxes_) m = std::max(m, label);
    for (const auto& [pos, labels] : edges_)
        if (!labels.empty()) m = std::max(m, labels.back());
    return m;
}

RowStatistics RowStatistics::zeros(int rows, int labels) {
    RowStatistics r;
    r.rows = rows;
    r.labels = labels;
    r.box_counts.assign(static_cast<std::size_t>(rows) * labels, 0);
    r.edge_counts.assign(static_cast<std::size_t>(rows) * labels, 0);
    return r;
}

long long RowStatistics::box(int k, int i) const {
    if (k < 1 || k > labels || i < 1 || i > rows) return 0;
    return box_counts[static_cast<std::size_t>(k - 1) * rows + (i - 1)];
}

long long RowStatistics::edge(int k, int i) const {
    if (k < 1 || k > labels || i < 1 || i > rows) return 0;
    return edge_counts[static_cast<std::size_t>(k - 1) * rows + (i - 1)];
}

namespace {

// Widens stats so that (k, i) is addressable, keeping stored values in place.
void widen(RowStatistics& r, int k, int i) {
    if (k <= r.labels && i <= r.rows) return;
    RowStatistics wider = RowStatistics::zeros(std::max(i, r.rows), std::max(k, r.labels));
    for (int kk = 1; kk <= r.labels; ++kk)
        for (int ii = 1; ii <= r.rows; ++ii) {
            wider.box_counts[static_cast<std::size_t>(kk - 1) * wider.rows + (ii - 1)] =
                r.box(kk, ii);
            wider.edge_counts[static_cast<std::size_t>(kk - 1) * wider.rows + (ii - 1)] =
                r.edge(kk, ii);
        }
    r = std::move(wider);
}

}  // namespace

void RowStatistics::set_box(int k, int i, long long v) {
    widen(*this, k, i);
    box_counts.at(static_cast<std::size_t>(k - 1) * rows + (i - 1)) = v;
}

void RowStatistics::set_edge(int k, int i, long long v) {
    widen(*this, k, i);
    edge_counts.at(static_cast<std::size_t>(k - 1) * rows + (i - 1)) = v;
}

std::vector<long long> RowStatistics::to_vector() const {
    std::vector<long long> v;
    v.reserve(static_cast<std::size_t>(rows) * labels * 2);
    for (int k = 1; k <= labels; ++k)
        for (int i = 1; i <= rows; ++i) {
            v.push_back(box(k, i));
            v.push_back(edge(k, i));
        }
    return v;
}

RowStatistics RowStatistics::from_vector(const std::vector<long long>& v, int rows, int labels) {
    if (static_cast<long long>(v.size()) != 2LL * rows * labels)
        throw std::invalid_argument("row statistics vector has wrong length");
    RowStatistics r = zeros(rows, labels);
    std::size_t idx = 0;
    for (int k = 1; k <= labels; ++k)
        for (int i = 1; i <= rows; ++i) {
            r.set_box(k, i, v[idx++]);
            r.set_edge(k, i, v[idx++]);
        }
    return r;
}

bool operator==(const RowStatistics& a, const RowStatistics& b) {
    int rows = std::max(a.rows, b.rows);
    int labels = std::max(a.labels, b.labels);
    for (int k = 1; k <= labels; ++k)
        for (int i = 1; i <= rows; ++i)
            if (a.box(k, i) != b.box(k, i) || a.edge(k, i) != b.edge(k, i)) return false;
    return true;
}

bool is_lattice(const ReadingWord& w) {
    int top = 0;
    for (int c : w) top = std::max(top, c);
    std::vector<long long> count(static_cast<std::size_t>(top) + 2, 0);
    for (int c : w) {
        if (c < 1) return false;
        ++count[c];
        if (c > 1 && count[c] > count[c - 1]) return false;
    }
    return true;
}

ReadingWord column_word(const EdgeLabeledTableau& t) {
    ReadingWord w;
    const SkewShape& sh = t.shape();
    int maxcol = sh.outer.part(1);
    for (int j = maxcol; j >= 1; --j) {
        for (int i = 1; i <= sh.rows(); ++i) {
            if (sh.has_box(i, j)) w.push_back(t.box(i, j));
            const auto& e = t.edge(i, j);
            w.insert(w.end(), e.begin(), e.end());
        }
    }
    return w;
}

ReadingWord row_word(const EdgeLabeledTableau& t) {
    ReadingWord w;
    const SkewShape& sh = t.shape();
    for (int i = 1; i <= sh.rows(); ++i) {
        for (int j = sh.outer.part(i); j > sh.inner.part(i); --j) w.push_back(t.box(i, j));
        for (int j = sh.outer.part(i); j >= 1; --j) {
            const auto& e = t.edge(i, j);
            w.insert(w.end(), e.begin(), e.end());
        }
    }
    return w;
}

bool is_valid(const EdgeLabeledTableau& t, const Partition& mu) {
    const SkewShape& sh = t.shape();
    // rows of box labels weakly increase
    for (int i = 1; i <= sh.rows(); ++i) {
        int prev = 0;
        for (int j = sh.inner.part(i) + 1; j <= sh.outer.part(i); ++j) {
            int lab = t.box(i, j);
            if (lab < prev) return false;
            prev = lab;
        }
    }
    // columns strictly increase through box and edge entries alternately
    int maxcol = sh.outer.part(1);
    for (int j = 1; j <= maxcol; ++j) {
        int last = 0;
        for (int i = 1; i <= sh.rows(); ++i) {
            if (sh.has_box(i, j)) {
                int lab = t.box(i, j);
                if (lab <= last) return false;
                last = lab;
            }
            for (int lab : t.edge(i, j)) {
                if (lab <= last) return false;
                last = lab;
            }
        }
    }
    // no label k strictly above row k
    for (const auto& [pos, label] : t.boxes())
        if (label > pos.first) return false;
    for (const auto& [pos, labels] : t.edges())
        for (int lab : labels)
            if (lab > pos.first) return false;
    // content equals mu
    std::vector<long long> count(static_cast<std::size_t>(std::max(t.max_label(), mu.length())) + 1, 0);
    for (const auto& [pos, label] : t.boxes()) ++count[label];
    for (const auto& [pos, labels] : t.edges())
        for (int lab : labels) ++count[lab];
    for (int k = 1; k < static_cast<int>(count.size()); ++k)
        if (count[k] != mu.part(k)) return false;
    return true;
}

RowStatistics row_statistics(const EdgeLabeledTableau& t) {
    const SkewShape& sh = t.shape();
    RowStatistics r = RowStatistics::zeros(sh.rows(), std::max(t.max_label(), 0));
    for (const auto& [pos, label] : t.boxes())
        r.set_box(label, pos.first, r.box(label, pos.first) + 1);
    for (const auto& [pos, labels] : t.edges())
        for (int lab : labels) r.set_edge(lab, pos.first, r.edge(lab, pos.first) + 1);
    return r;
}

namespace {

// Depth-first fill of boxes (row major) and edge sets (after each row's
// boxes, columns ascending, set elements ascending).  Column chains are
// visited top to bottom, so one running maximum per column enforces the
// strict column condition as labels are placed.
struct TableauSearch {
    const Partition &la, &mu, &nu;
    SkewShape shape;
    int lmu, lnu, maxcol;
    long long need;

    struct Pos {
        bool is_edge;
        int row, col;
    };
    std::vector<Pos> positions;
    std::vector<long long> suffix_boxes, suffix_edge_cap;

    std::vector<int> col_last;          // running column maximum, index 1..maxcol
    std::vector<long long> used;        // per label
    long long placed = 0;
    std::map<std::pair<int, int>, int> box_out;
    std::map<std::pair<int, int>, std::vector<int>> edge_out;

    long long nodes = 0, budget;
    std::vector<EdgeLabeledTableau>* sink;

    TableauSearch(const Partition& la_, const Partition& mu_, const Partition& nu_,
                  const SearchLimits& limits)
        : la(la_), mu(mu_), nu(nu_), shape(nu_, la_), budget(limits.max_nodes) {
        lmu = mu.length();
        lnu = nu.length();
        maxcol = nu.part(1);
        need = mu.size();
        for (int i = 1; i <= lnu; ++i) {
            for (int j = la.part(i) + 1; j <= nu.part(i); ++j)
                positions.push_back({false, i, j});
            for (int j = la.part(i + 1) + 1; j <= nu.part(i); ++j)
                positions.push_back({true, i, j});
        }
        std::size_t n = positions.size();
        suffix_boxes.assign(n + 1, 0);
        suffix_edge_cap.assign(n + 1, 0);
        for (std::size_t idx = n; idx-- > 0;) {
            suffix_boxes[idx] = suffix_boxes[idx + 1] + (positions[idx].is_edge ? 0 : 1);
            long long cap = positions[idx].is_edge ? std::min(positions[idx].row, lmu) : 0;
            suffix_edge_cap[idx] = suffix_edge_cap[idx + 1] + cap;
        }
        col_last.assign(maxcol + 2, 0);
        used.assign(lmu + 1, 0);
    }

    void run(std::vector<EdgeLabeledTableau>& out) {
        sink = &out;
        step(0);
    }

    void tick() {
        if (++nodes > budget)
            throw BudgetExceeded("tableau enumeration exceeded " + std::to_string(budget) +
                                 " nodes");
    }

    bool prunable(std::size_t idx) const {
        long long remaining = need - placed;
        return remaining < suffix_boxes[idx] ||
               remaining > suffix_boxes[idx] + suffix_edge_cap[idx];
    }

    void step(std::size_t idx) {
        if (prunable(idx)) return;
        if (idx == positions.size()) {
            emit();
            return;
        }
        const Pos& p = positions[idx];
        if (!p.is_edge) {
            int lo = col_last[p.col] + 1;
            if (shape.has_box(p.row, p.col - 1)) lo = std::max(lo, box_out.at({p.row, p.col - 1}));
            int hi = std::min(p.row, lmu);
            for (int k = lo; k <= hi; ++k) {
                if (used[k] >= mu.part(k)) continue;
                tick();
                box_out[{p.row, p.col}] = k;
                int saved = col_last[p.col];
                col_last[p.col] = k;
                ++used[k];
                ++placed;
                step(idx + 1);
                --placed;
                --used[k];
                col_last[p.col] = saved;
                box_out.erase({p.row, p.col});
            }
            return;
        }
        extend_edge(idx, col_last[p.col] + 1);
    }

    // Either close the current edge set or append one more label to it.
    void extend_edge(std::size_t idx, int from) {
        const Pos& p = positions[idx];
        step(idx + 1);
        int hi = std::min(p.row, lmu);
        for (int k = std::max(from, col_last[p.col] + 1); k <= hi; ++k) {
            if (used[k] >= mu.part(k)) continue;
            tick();
            edge_out[{p.row, p.col}].push_back(k);
            int saved = col_last[p.col];
            col_last[p.col] = k;
            ++used[k];
            ++placed;
            extend_edge(idx, k + 1);
            --placed;
            --used[k];
            col_last[p.col] = saved;
            auto& vec = edge_out[{p.row, p.col}];
            vec.pop_back();
            if (vec.empty()) edge_out.erase({p.row, p.col});
        }
    }

    void emit() {
        for (int k = 1; k <= lmu; ++k)
            if (used[k] != mu.part(k)) return;
        sink->push_back(EdgeLabeledTableau(shape, box_out, edge_out));
    }
};

}  // namespace

std::vector<EdgeLabeledTableau> enumerate_valid_tableaux(const Partition& la, const Partition& mu,
                                                         const Partition& nu,
                                                         const SearchLimits& limits) {
    std::vector<EdgeLabeledTableau> out;
    if (!contains(la, nu)) return out;
    TableauSearch search(la, mu, nu, limits);
    search.run(out);
    return out;
}

std::vector<EdgeLabeledTableau> enumerate_tableaux(const Partition& la, const Partition& mu,
                                                   const Partition& nu,
                                                   const SearchLimits& limits) {
    std::vector<EdgeLabeledTableau> all = enumerate_valid_tableaux(la, mu, nu, limits);
    std::vector<EdgeLabeledTableau> out;
    for (auto& t : all)
        if (is_lattice(column_word(t))) out.push_back(std::move(t));
    return out;
}

EdgeLabeledTableau reconstruct_witness(const RowStatistics& r, const Partition& la,
                                       const Partition& mu, const Partition& nu) {
    ConstraintSystem sys = build_constraints(la, mu, nu);
    PointCheck chk = check_point(r, sys);
    if (!chk.ok)
        throw std::invalid_argument("row statistics do not satisfy the constraint system: " +
                                    chk.violations.front());
    SkewShape shape(nu, la);
    EdgeLabeledTableau::BoxMap boxes;
    EdgeLabeledTableau::EdgeMap edges;
    for (int i = 1; i <= nu.length(); ++i) {
        int col = la.part(i) + 1;
        for (int k = 1; k <= mu.length(); ++k)
            for (long long c = 0; c < r.box(k, i); ++c) boxes[{i, col++}] = k;
        if (col != nu.part(i) + 1)
            throw std::invalid_argument("row statistics do not fill row " + std::to_string(i));
        for (int k = 1; k <= mu.length(); ++k) {
            long long cnt = r.edge(k, i);
            if (cnt == 0) continue;
            long long end = la.part(i);
            for (int kp = 1; kp < k; ++kp) end += r.box(kp, i);
            for (long long j = end - cnt + 1; j <= end; ++j)
                edges[{i, static_cast<int>(j)}].push_back(k);
        }
    }
    for (auto& [pos, labels] : edges) std::sort(labels.begin(), labels.end());
    return EdgeLabeledTableau(std::move(shape), std::move(boxes), std::move(edges));
}

}  // namespace lrvan
