#pragma once

// Test-only feasibility oracle: textbook Fourier-Motzkin elimination over the
// rationals.  Exponential in the worst case, so callers keep systems small
// (a dozen variables or so).  Used to cross-check the simplex routine on
// systems where both can run.

#include "lrvan/polytope.hpp"
#include "lrvan/rational.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace lrvan::testing {

// One inequality coeffs . x <= rhs with exact integer entries.
struct FmRow {
    std::vector<BigInt> coeffs;
    BigInt rhs;

    friend bool operator<(const FmRow& a, const FmRow& b) {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        return a.rhs < b.rhs;
    }
};

inline void fm_normalize(FmRow& row) {
    BigInt g = 0;
    for (const BigInt& c : row.coeffs) g = boost::multiprecision::gcd(g, c);
    g = boost::multiprecision::gcd(g, row.rhs);
    if (g > 1) {
        for (BigInt& c : row.coeffs) c /= g;
        row.rhs /= g;
    }
}

inline bool fm_feasible(const ConstraintSystem& sys, size_t max_rows = 200000) {
    const int n = sys.num_vars;
    std::set<FmRow> rows;
    auto add = [&](const std::vector<int>& coeffs, long long rhs, int sign) {
        FmRow row;
        row.coeffs.reserve(n);
        for (int c : coeffs) row.coeffs.push_back(BigInt(sign * c));
        row.rhs = BigInt(sign * rhs);
        fm_normalize(row);
        rows.insert(std::move(row));
    };
    for (const auto& eq : sys.equalities) {
        add(eq.coeffs, eq.rhs, 1);
        add(eq.coeffs, eq.rhs, -1);
    }
    for (const auto& le : sys.inequalities) add(le.coeffs, le.rhs, 1);

    std::vector<bool> alive(n, true);
    for (int step = 0; step < n; ++step) {
        // Eliminate the live variable with the smallest pos*neg fan-out.
        int best = -1;
        size_t best_cost = 0;
        for (int j = 0; j < n; ++j) {
            if (!alive[j]) continue;
            size_t pos = 0, neg = 0;
            for (const auto& row : rows) {
                if (row.coeffs[j] > 0) ++pos;
                if (row.coeffs[j] < 0) ++neg;
            }
            size_t cost = pos * neg;
            if (best < 0 || cost < best_cost) {
                best = j;
                best_cost = cost;
            }
        }
        int j = best;
        alive[j] = false;

        std::vector<FmRow> pos, neg;
        std::set<FmRow> next;
        for (const auto& row : rows) {
            if (row.coeffs[j] > 0)
                pos.push_back(row);
            else if (row.coeffs[j] < 0)
                neg.push_back(row);
            else
                next.insert(row);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                FmRow combined;
                combined.coeffs.resize(n);
                const BigInt mp = -q.coeffs[j];  // > 0
                const BigInt mq = p.coeffs[j];   // > 0
                for (int t = 0; t < n; ++t)
                    combined.coeffs[t] = mp * p.coeffs[t] + mq * q.coeffs[t];
                combined.rhs = mp * p.rhs + mq * q.rhs;
                bool all_zero = std::all_of(combined.coeffs.begin(), combined.coeffs.end(),
                                            [](const BigInt& c) { return c == 0; });
                if (all_zero) {
                    if (combined.rhs < 0) return false;
                    continue;
                }
                fm_normalize(combined);
                next.insert(std::move(combined));
                if (next.size() > max_rows)
                    throw std::runtime_error("fourier-motzkin row budget exceeded");
            }
        rows = std::move(next);
    }

    for (const auto& row : rows)
        if (row.rhs < 0) return false;
    return true;
}

}  // namespace lrvan::testing
