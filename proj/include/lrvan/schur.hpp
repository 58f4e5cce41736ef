#pragma once

#include "lrvan/partition.hpp"
#include "lrvan/poly.hpp"
#include "lrvan/tableau.hpp"

#include <map>
#include <utility>
#include <vector>

namespace lrvan {

struct SchurLimits {
    long long max_diagrams = 2'000'000;  // closure states per shape
    long long max_terms = 60'000'000;    // distinct monomials held per expansion table
};

/// Placement of +'s in an n x m grid, reachable from the top-left justified
/// placement of la by moves that slide a + from the top-left to the
/// bottom-right corner of an otherwise empty 2x2 square.
struct PlusDiagram {
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> pluses;  // (row, col), 1-based, sorted

    friend bool operator==(const PlusDiagram&, const PlusDiagram&) = default;
};

/// The full move closure, in a canonical deterministic order.  Requires
/// n >= l(la), la_1 <= m and n*m <= 128 so a grid fits one machine word pair.
std::vector<PlusDiagram> enumerate_plus_diagrams(const Partition& la, int n, int m,
                                                 const SchurLimits& limits = {});

/// prod over rows i of x_i^(number of +'s in row i), in universe (n, 0).
MultiPoly weight_x(const PlusDiagram& d);

/// prod over +'s at (i, j) of (x_i - y_j), in universe (n, m).
MultiPoly weight_xy(const PlusDiagram& d);

/// Sum of weight_xy over the closure, in universe (n, n + la_1 - 1).
/// Results are cached per (la, n); the cache is shared and thread safe.
MultiPoly factorial_schur(const Partition& la, int n, const SchurLimits& limits = {});

/// Coefficients of the expansion s_la * s_mu = sum_nu C_nu s_nu in the
/// factorial basis, computed by eliminating the lexicographically largest
/// leading x-monomial at top degree.  Keys are the nu with C_nu != 0; values
/// are polynomials in the y's alone, universe (0, n + la_1 + mu_1).
std::map<Partition, MultiPoly> expand_product(const Partition& la, const Partition& mu, int n,
                                              const SchurLimits& limits = {});

/// Whether C_nu vanishes identically, with n = max(l(la) + l(mu), l(nu)).
bool coefficient_is_zero(const Partition& la, const Partition& mu, const Partition& nu,
                         const SchurLimits& limits = {});

/// Free wrapper over MultiPoly::rewrite_in_beta for expansion coefficients.
MultiPoly rewrite_in_beta(const MultiPoly& c);

void clear_schur_cache();

}  // namespace lrvan
