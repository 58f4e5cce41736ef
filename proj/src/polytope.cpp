#include "lrvan/polytope.hpp"

#include "lrvan/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace lrvan {

namespace {

std::string row_name(const ConstraintRow& row) {
    std::ostringstream os;
    os << static_cast<char>(row.tag) << "(i=" << row.i << ",k=" << row.k << ")";
    return os.str();
}

}  // namespace

ConstraintSystem build_constraints(const Partition& la, const Partition& mu, const Partition& nu) {
    ConstraintSystem sys;
    sys.shape_rows = nu.length();
    sys.labels = mu.length();
    sys.num_vars = 2 * sys.shape_rows * sys.labels;

    auto blank = [&](ConstraintTag tag, int i, int k) {
        ConstraintRow row;
        row.tag = tag;
        row.i = i;
        row.k = k;
        row.coeffs.assign(sys.num_vars, 0);
        return row;
    };

    // (B) box labels fill each row of the skew shape.  Rows are emitted up
    // to the length of la as well: when la sticks out below nu the row has
    // no variables and a negative right hand side, which is what rules the
    // shape out.
    for (int i = 1; i <= std::max(nu.length(), la.length()); ++i) {
        ConstraintRow row = blank(ConstraintTag::B, i, 0);
        if (i <= sys.shape_rows)
            for (int k = 1; k <= sys.labels; ++k) row.coeffs[sys.var_box(k, i)] = 1;
        row.rhs = nu.part(i) - la.part(i);
        sys.equalities.push_back(std::move(row));
    }

    // (C) each label k appears mu_k times in total.
    for (int k = 1; k <= sys.labels; ++k) {
        ConstraintRow row = blank(ConstraintTag::C, 0, k);
        for (int i = 1; i <= sys.shape_rows; ++i) {
            row.coeffs[sys.var_box(k, i)] = 1;
            row.coeffs[sys.var_edge(k, i)] = 1;
        }
        row.rhs = mu.part(k);
        sys.equalities.push_back(std::move(row));
    }

    // (E) nothing above its own row index.
    for (int k = 1; k <= sys.labels; ++k)
        for (int i = 1; i <= std::min(k - 1, sys.shape_rows); ++i) {
            ConstraintRow rb = blank(ConstraintTag::E, i, k);
            rb.coeffs[sys.var_box(k, i)] = 1;
            sys.equalities.push_back(std::move(rb));
            ConstraintRow re = blank(ConstraintTag::E, i, k);
            re.coeffs[sys.var_edge(k, i)] = 1;
            sys.equalities.push_back(std::move(re));
        }

    // (A) nonnegativity.
    for (int k = 1; k <= sys.labels; ++k)
        for (int i = 1; i <= sys.shape_rows; ++i) {
            ConstraintRow rb = blank(ConstraintTag::A, i, k);
            rb.coeffs[sys.var_box(k, i)] = -1;
            sys.inequalities.push_back(std::move(rb));
            ConstraintRow re = blank(ConstraintTag::A, i, k);
            re.coeffs[sys.var_edge(k, i)] = -1;
            sys.inequalities.push_back(std::move(re));
        }

    // (D) the k's on edge i+1/2 fit between the shorter row below and the
    // boxes of smaller labels above.
    for (int k = 1; k <= sys.labels; ++k)
        for (int i = 1; i <= sys.shape_rows; ++i) {
            ConstraintRow row = blank(ConstraintTag::D, i, k);
            row.coeffs[sys.var_edge(k, i)] = 1;
            for (int kp = 1; kp < k; ++kp) row.coeffs[sys.var_box(kp, i)] = -1;
            if (i + 1 <= sys.shape_rows)
                for (int kp = 1; kp <= k; ++kp) row.coeffs[sys.var_box(kp, i + 1)] = 1;
            row.rhs = la.part(i) - la.part(i + 1);
            sys.inequalities.push_back(std::move(row));
        }

    // (F) reading prefixes never hold more (k+1)'s than k's.
    for (int k = 1; k + 1 <= sys.labels; ++k)
        for (int i = 1; i <= sys.shape_rows; ++i) {
            ConstraintRow row = blank(ConstraintTag::F, i, k);
            row.coeffs[sys.var_box(k + 1, i)] = 1;
            for (int ip = 1; ip < i; ++ip) {
                row.coeffs[sys.var_box(k + 1, ip)] = 1;
                row.coeffs[sys.var_edge(k + 1, ip)] = 1;
                row.coeffs[sys.var_box(k, ip)] = -1;
                row.coeffs[sys.var_edge(k, ip)] = -1;
            }
            row.rhs = 0;
            sys.inequalities.push_back(std::move(row));
        }

    return sys;
}

PointCheck check_point(const std::vector<Rational>& x, const ConstraintSystem& sys) {
    PointCheck out;
    if (static_cast<int>(x.size()) != sys.num_vars) {
        out.ok = false;
        out.violations.push_back("point has " + std::to_string(x.size()) + " entries, expected " +
                                 std::to_string(sys.num_vars));
        return out;
    }
    auto eval = [&](const ConstraintRow& row) {
        Rational lhs = 0;
        for (int v = 0; v < sys.num_vars; ++v)
            if (row.coeffs[v] != 0) lhs += Rational(row.coeffs[v]) * x[v];
        return lhs;
    };
    for (const ConstraintRow& row : sys.equalities) {
        Rational lhs = eval(row);
        if (lhs != row.rhs) {
            out.ok = false;
            std::ostringstream os;
            os << row_name(row) << ": lhs " << lhs << " != rhs " << row.rhs;
            out.violations.push_back(os.str());
        }
    }
    for (const ConstraintRow& row : sys.inequalities) {
        Rational lhs = eval(row);
        if (lhs > row.rhs) {
            out.ok = false;
            std::ostringstream os;
            os << row_name(row) << ": lhs " << lhs << " > rhs " << row.rhs;
            out.violations.push_back(os.str());
        }
    }
    return out;
}

PointCheck check_point(const RowStatistics& r, const ConstraintSystem& sys) {
    PointCheck out;
    for (int k = 1; k <= std::max(r.labels, sys.labels); ++k)
        for (int i = 1; i <= std::max(r.rows, sys.shape_rows); ++i)
            if ((k > sys.labels || i > sys.shape_rows) && (r.box(k, i) != 0 || r.edge(k, i) != 0)) {
                out.ok = false;
                out.violations.push_back("nonzero count at label " + std::to_string(k) + ", row " +
                                         std::to_string(i) + " outside the variable range");
            }
    if (!out.ok) return out;
    std::vector<Rational> x(sys.num_vars);
    for (int k = 1; k <= sys.labels; ++k)
        for (int i = 1; i <= sys.shape_rows; ++i) {
            x[sys.var_box(k, i)] = r.box(k, i);
            x[sys.var_edge(k, i)] = r.edge(k, i);
        }
    return check_point(x, sys);
}

VanishingVerdict decide_vanishing(const Partition& la, const Partition& mu, const Partition& nu,
                                  bool want_witness, const WitnessSearchOptions& opts) {
    ConstraintSystem sys = build_constraints(la, mu, nu);
    FeasibilityResult fr = feasible(sys);
    VanishingVerdict verdict;
    verdict.vanishes = !fr.feasible;
    if (verdict.vanishes) return verdict;
    verdict.rational_point = std::move(fr.point);
    if (want_witness) {
        bool exceeded = false;
        auto ip = find_integer_point(sys, mu, opts, &exceeded);
        verdict.witness_budget_exceeded = exceeded;
        if (ip) {
            RowStatistics stats =
                RowStatistics::from_vector(*ip, sys.shape_rows, sys.labels);
            verdict.witness = reconstruct_witness(stats, la, mu, nu);
            verdict.integer_point = std::move(stats);
        }
    }
    return verdict;
}

bool decide_classical_vanishing(const Partition& la, const Partition& mu, const Partition& nu) {
    if (la.size() + mu.size() != nu.size()) return true;
    return decide_vanishing(la, mu, nu).vanishes;
}

bool dilate_check(const Partition& la, const Partition& mu, const Partition& nu, int factor) {
    if (factor < 1) throw std::invalid_argument("dilation factor must be positive");
    ConstraintSystem base = build_constraints(la, mu, nu);
    ConstraintSystem scaled =
        build_constraints(scale(la, factor), scale(mu, factor), scale(nu, factor));
    auto rows_match = [&](const std::vector<ConstraintRow>& a, const std::vector<ConstraintRow>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (a[r].tag != b[r].tag || a[r].i != b[r].i || a[r].k != b[r].k) return false;
            if (a[r].coeffs != b[r].coeffs) return false;
            if (b[r].rhs != static_cast<long long>(factor) * a[r].rhs) return false;
        }
        return true;
    };
    return base.shape_rows == scaled.shape_rows && base.labels == scaled.labels &&
           base.num_vars == scaled.num_vars && rows_match(base.equalities, scaled.equalities) &&
           rows_match(base.inequalities, scaled.inequalities);
}

namespace {

struct IntegerSearch {
    struct Row {
        const ConstraintRow* src;
        bool is_eq;
    };
    const ConstraintSystem& sys;
    std::vector<Row> rows;
    std::vector<long long> ub;
    // suffix_min/max[r][idx]: extreme contribution of variables idx.. to row r
    std::vector<std::vector<long long>> suffix_min, suffix_max;
    std::vector<long long> partial;
    std::vector<long long> x;
    long long nodes = 0, budget;
    bool exceeded = false;

    IntegerSearch(const ConstraintSystem& s, const Partition& mu, long long budget_)
        : sys(s), budget(budget_) {
        for (const auto& row : sys.equalities) rows.push_back({&row, true});
        for (const auto& row : sys.inequalities) rows.push_back({&row, false});
        ub.assign(sys.num_vars, 0);
        for (int k = 1; k <= sys.labels; ++k)
            for (int i = 1; i <= sys.shape_rows; ++i) {
                long long cap = i < k ? 0 : mu.part(k);
                ub[sys.var_box(k, i)] = cap;
                ub[sys.var_edge(k, i)] = cap;
            }
        int n = sys.num_vars;
        suffix_min.assign(rows.size(), std::vector<long long>(n + 1, 0));
        suffix_max.assign(rows.size(), std::vector<long long>(n + 1, 0));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int v = n; v-- > 0;) {
                int c = rows[r].src->coeffs[v];
                long long lo = c > 0 ? 0 : c * ub[v];
                long long hi = c > 0 ? c * ub[v] : 0;
                suffix_min[r][v] = suffix_min[r][v + 1] + lo;
                suffix_max[r][v] = suffix_max[r][v + 1] + hi;
            }
        partial.assign(rows.size(), 0);
        x.assign(n, 0);
    }

    bool viable(int idx) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            long long rhs = rows[r].src->rhs;
            if (partial[r] + suffix_min[r][idx] > rhs) return false;
            if (rows[r].is_eq && partial[r] + suffix_max[r][idx] < rhs) return false;
        }
        return true;
    }

    bool run(std::vector<long long>& out) {
        if (!viable(0)) return false;
        if (search(0)) {
            out = x;
            return true;
        }
        return false;
    }

    bool search(int idx) {
        if (idx == sys.num_vars) return true;
        for (long long v = 0; v <= ub[idx]; ++v) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            x[idx] = v;
            for (std::size_t r = 0; r < rows.size(); ++r)
                partial[r] += rows[r].src->coeffs[idx] * v;
            bool ok = viable(idx + 1) && search(idx + 1);
            for (std::size_t r = 0; r < rows.size(); ++r)
                partial[r] -= rows[r].src->coeffs[idx] * v;
            if (ok) return true;
            if (exceeded) return false;
        }
        x[idx] = 0;
        return false;
    }
};

}  // namespace

std::optional<std::vector<long long>> find_integer_point(const ConstraintSystem& sys,
                                                         const Partition& mu,
                                                         const WitnessSearchOptions& opts,
                                                         bool* budget_exceeded) {
    IntegerSearch search(sys, mu, opts.max_nodes);
    std::vector<long long> out;
    bool found = search.run(out);
    if (budget_exceeded) *budget_exceeded = search.exceeded;
    if (!found) return std::nullopt;
    return out;
}

}  // namespace lrvan
