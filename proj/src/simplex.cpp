#include "lrvan/simplex.hpp"

#include <algorithm>
#include <optional>

namespace lrvan {

namespace {

struct WorkRow {
    std::vector<Rational> a;
    Rational rhs;
    bool is_eq;
    bool kept = true;
};

struct Reduced {
    bool decided = false;   // presolve alone settled feasibility
    bool feasible = false;
    std::vector<std::optional<Rational>> fixed, lb, ub;
    std::vector<WorkRow> rows;  // remaining rows, fixed variables substituted
};

// Repeatedly folds singleton rows into variable bounds or fixings and
// removes constant rows, until nothing changes.
Reduced presolve(const ConstraintSystem& sys) {
    int n = sys.num_vars;
    Reduced red;
    red.fixed.assign(n, std::nullopt);
    red.lb.assign(n, std::nullopt);
    red.ub.assign(n, std::nullopt);

    std::vector<WorkRow> rows;
    auto add = [&](const ConstraintRow& src, bool is_eq) {
        WorkRow row;
        row.a.assign(src.coeffs.begin(), src.coeffs.end());
        row.rhs = src.rhs;
        row.is_eq = is_eq;
        rows.push_back(std::move(row));
    };
    for (const auto& r : sys.equalities) add(r, true);
    for (const auto& r : sys.inequalities) add(r, false);

    auto fail = [&] {
        red.decided = true;
        red.feasible = false;
        return red;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (WorkRow& row : rows) {
            if (!row.kept) continue;
            Rational rhs = row.rhs;
            int last = -1, count = 0;
            for (int v = 0; v < n; ++v) {
                if (row.a[v] == 0) continue;
                if (red.fixed[v]) {
                    rhs -= row.a[v] * *red.fixed[v];
                    continue;
                }
                last = v;
                ++count;
            }
            if (count >= 2) continue;
            row.kept = false;
            changed = true;
            if (count == 0) {
                if (row.is_eq ? rhs != 0 : rhs < 0) return fail();
                continue;
            }
            const Rational& a = row.a[last];
            Rational bound = rhs / a;
            if (row.is_eq) {
                red.fixed[last] = bound;
            } else if (a > 0) {
                if (!red.ub[last] || bound < *red.ub[last]) red.ub[last] = bound;
            } else {
                if (!red.lb[last] || bound > *red.lb[last]) red.lb[last] = bound;
            }
        }
        for (int v = 0; v < n; ++v) {
            if (red.fixed[v]) {
                if (red.lb[v] && *red.fixed[v] < *red.lb[v]) return fail();
                if (red.ub[v] && *red.fixed[v] > *red.ub[v]) return fail();
                red.lb[v].reset();
                red.ub[v].reset();
                continue;
            }
            if (red.lb[v] && red.ub[v]) {
                if (*red.lb[v] > *red.ub[v]) return fail();
                if (*red.lb[v] == *red.ub[v]) {
                    red.fixed[v] = red.lb[v];
                    red.lb[v].reset();
                    red.ub[v].reset();
                    changed = true;
                }
            }
        }
    }

    for (WorkRow& row : rows) {
        if (!row.kept) continue;
        for (int v = 0; v < n; ++v) {
            if (row.a[v] != 0 && red.fixed[v]) {
                row.rhs -= row.a[v] * *red.fixed[v];
                row.a[v] = 0;
            }
        }
        red.rows.push_back(std::move(row));
    }
    if (red.rows.empty()) {
        red.decided = true;
        red.feasible = true;
    }
    return red;
}

// Phase-I simplex on rows over nonnegative column variables.  Returns the
// column values when the artificial objective reaches zero.
std::optional<std::vector<Rational>> phase_one(const std::vector<std::vector<Rational>>& mat,
                                               const std::vector<Rational>& rhs,
                                               const std::vector<bool>& is_eq, int ncols) {
    int m = static_cast<int>(mat.size());
    int total = ncols;
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    std::vector<std::vector<Rational>> D(m);
    std::vector<Rational> b(m);
    std::vector<bool> negated(m, false);
    for (int r = 0; r < m; ++r) {
        b[r] = rhs[r];
        if (b[r] < 0) negated[r] = true;
        if (!is_eq[r]) slack_col[r] = total++;
    }
    int first_art = total;
    for (int r = 0; r < m; ++r) {
        bool slack_basic = !is_eq[r] && !negated[r];
        if (!slack_basic) art_col[r] = total++;
    }
    for (int r = 0; r < m; ++r) {
        D[r].assign(total + 1, Rational(0));
        Rational sign = negated[r] ? -1 : 1;
        for (int c = 0; c < ncols; ++c) D[r][c] = sign * mat[r][c];
        if (slack_col[r] >= 0) D[r][slack_col[r]] = sign;
        if (art_col[r] >= 0) D[r][art_col[r]] = 1;
        D[r][total] = sign * b[r];
    }

    std::vector<int> basis(m);
    std::vector<bool> basis_art(m, false);
    for (int r = 0; r < m; ++r) {
        if (art_col[r] >= 0) {
            basis[r] = art_col[r];
            basis_art[r] = true;
        } else {
            basis[r] = slack_col[r];
        }
    }

    auto pivot = [&](int pr, int pc) {
        Rational inv = 1 / D[pr][pc];
        for (int c = 0; c <= total; ++c) D[pr][c] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == pr || D[r][pc] == 0) continue;
            Rational f = D[r][pc];
            for (int c = 0; c <= total; ++c) D[r][c] -= f * D[pr][c];
        }
        basis[pr] = pc;
        basis_art[pr] = pc >= first_art;
    };

    while (true) {
        int enter = -1;
        for (int c = 0; c < first_art && enter < 0; ++c) {
            Rational reduced = 0;  // cost 0 minus artificial-row contributions
            for (int r = 0; r < m; ++r)
                if (basis_art[r]) reduced -= D[r][c];
            if (reduced < 0) enter = c;
        }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int r = 0; r < m; ++r) {
            if (D[r][enter] <= 0) continue;
            Rational ratio = D[r][total] / D[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) break;  // cannot happen: the phase-I objective is bounded
        pivot(leave, enter);
    }

    Rational objective = 0;
    for (int r = 0; r < m; ++r)
        if (basis_art[r]) objective += D[r][total];
    if (objective != 0) return std::nullopt;

    std::vector<Rational> x(ncols, Rational(0));
    for (int r = 0; r < m; ++r)
        if (basis[r] < ncols) x[basis[r]] = D[r][total];
    return x;
}

}  // namespace

FeasibilityResult feasible(const ConstraintSystem& sys) {
    int n = sys.num_vars;
    Reduced red = presolve(sys);
    FeasibilityResult out;
    if (red.decided && !red.feasible) return out;

    std::vector<Rational> x(n, Rational(0));
    if (!red.decided) {
        // Column layout per remaining variable: shift to the lower bound,
        // reflect through the upper bound, or split into a difference of
        // nonnegative parts when unbounded on both sides.
        enum class Mode { Shift, Reflect, Split };
        struct Col {
            Mode mode;
            int col, col2 = -1;
            Rational base;
        };
        std::vector<std::optional<Col>> layout(n);
        int ncols = 0;
        std::vector<std::pair<int, Rational>> residual_ub;  // structural col <= value
        for (int v = 0; v < n; ++v) {
            if (red.fixed[v]) continue;
            Col col;
            if (red.lb[v]) {
                col.mode = Mode::Shift;
                col.base = *red.lb[v];
                col.col = ncols++;
                if (red.ub[v]) residual_ub.push_back({col.col, *red.ub[v] - *red.lb[v]});
            } else if (red.ub[v]) {
                col.mode = Mode::Reflect;
                col.base = *red.ub[v];
                col.col = ncols++;
            } else {
                col.mode = Mode::Split;
                col.col = ncols++;
                col.col2 = ncols++;
            }
            layout[v] = col;
        }

        std::vector<std::vector<Rational>> mat;
        std::vector<Rational> rhs;
        std::vector<bool> is_eq;
        for (const WorkRow& row : red.rows) {
            std::vector<Rational> m(ncols, Rational(0));
            Rational r = row.rhs;
            for (int v = 0; v < n; ++v) {
                if (row.a[v] == 0) continue;
                const Col& col = *layout[v];
                switch (col.mode) {
                    case Mode::Shift:
                        m[col.col] += row.a[v];
                        r -= row.a[v] * col.base;
                        break;
                    case Mode::Reflect:
                        m[col.col] -= row.a[v];
                        r -= row.a[v] * col.base;
                        break;
                    case Mode::Split:
                        m[col.col] += row.a[v];
                        m[col.col2] -= row.a[v];
                        break;
                }
            }
            mat.push_back(std::move(m));
            rhs.push_back(std::move(r));
            is_eq.push_back(row.is_eq);
        }
        for (const auto& [c, value] : residual_ub) {
            std::vector<Rational> m(ncols, Rational(0));
            m[c] = 1;
            mat.push_back(std::move(m));
            rhs.push_back(value);
            is_eq.push_back(false);
        }

        auto cols = phase_one(mat, rhs, is_eq, ncols);
        if (!cols) return out;
        for (int v = 0; v < n; ++v) {
            if (red.fixed[v]) continue;
            const Col& col = *layout[v];
            switch (col.mode) {
                case Mode::Shift: x[v] = col.base + (*cols)[col.col]; break;
                case Mode::Reflect: x[v] = col.base - (*cols)[col.col]; break;
                case Mode::Split: x[v] = (*cols)[col.col] - (*cols)[col.col2]; break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (red.fixed[v]) x[v] = *red.fixed[v];
        else if (red.decided) x[v] = red.lb[v] ? *red.lb[v] : (red.ub[v] ? *red.ub[v] : Rational(0));
    }

    PointCheck chk = check_point(x, sys);
    if (!chk.ok)
        throw std::logic_error("simplex returned a point violating the input system: " +
                               chk.violations.front());
    out.feasible = true;
    out.point = std::move(x);
    return out;
}

}  // namespace lrvan
