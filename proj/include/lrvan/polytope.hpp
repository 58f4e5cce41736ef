#pragma once

#include "lrvan/partition.hpp"
#include "lrvan/rational.hpp"
#include "lrvan/tableau.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrvan {

/// Which family a constraint row belongs to:
///   A  nonnegativity            -r_k^i <= 0  (and the edge variant)
///   B  row size                 sum_k r_k^i = nu_i - la_i
///   C  label content            sum_i (r_k^i + r_k^{i+1/2}) = mu_k
///   D  edge room                r_k^{i+1/2} + boxes below minus room above <= la_i - la_{i+1}
///   E  too-high                 r_k^i = 0 and r_k^{i+1/2} = 0 for i < k
///   F  lattice comparison       prefix of k+1 minus prefix of k <= 0
enum class ConstraintTag : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F' };

struct ConstraintRow {
    ConstraintTag tag;
    int i = 0;  // row index, 0 when not applicable
    int k = 0;  // label index, 0 when not applicable
    std::vector<int> coeffs;  // dense, one entry per variable, each in {-1, 0, 1}
    long long rhs = 0;
};

/// The linear system whose solutions are in bijection-with-dilation to row
/// statistics vectors.  Variables are ordered with the label k outermost,
/// the row i innermost, and the box variable before the edge variable:
///   index(k, i, box)  = ((k-1)*shape_rows + (i-1)) * 2
///   index(k, i, edge) = ((k-1)*shape_rows + (i-1)) * 2 + 1
struct ConstraintSystem {
    int shape_rows = 0;  // l(nu)
    int labels = 0;      // l(mu)
    int num_vars = 0;    // 2 * shape_rows * labels

    std::vector<ConstraintRow> equalities;    // rows read  coeffs . x = rhs
    std::vector<ConstraintRow> inequalities;  // rows read  coeffs . x <= rhs

    int var_box(int k, int i) const { return ((k - 1) * shape_rows + (i - 1)) * 2; }
    int var_edge(int k, int i) const { return ((k - 1) * shape_rows + (i - 1)) * 2 + 1; }
};

ConstraintSystem build_constraints(const Partition& la, const Partition& mu, const Partition& nu);

struct PointCheck {
    bool ok = true;
    std::vector<std::string> violations;  // one line per violated row
};

PointCheck check_point(const std::vector<Rational>& x, const ConstraintSystem& sys);
PointCheck check_point(const RowStatistics& r, const ConstraintSystem& sys);

struct WitnessSearchOptions {
    long long max_nodes = 10'000'000;
};

struct VanishingVerdict {
    bool vanishes = false;
    std::optional<std::vector<Rational>> rational_point;  // present iff not vanishing
    std::optional<RowStatistics> integer_point;           // found integral solution
    std::optional<EdgeLabeledTableau> witness;            // tableau built from it
    bool witness_budget_exceeded = false;
};

/// Vanishing of the coefficient of s_nu in s_la * s_mu (the y-dependent
/// coefficient, not its classical specialization): decided by feasibility of
/// the constraint system over the rationals.
VanishingVerdict decide_vanishing(const Partition& la, const Partition& mu, const Partition& nu,
                                  bool want_witness = false,
                                  const WitnessSearchOptions& opts = {});

/// Vanishing of the classical coefficient: as above plus the size condition
/// |la| + |mu| = |nu|.
bool decide_classical_vanishing(const Partition& la, const Partition& mu, const Partition& nu);

/// Structural identity: the system for (N*la, N*mu, N*nu) equals the system
/// for (la, mu, nu) with every right hand side multiplied by N.
bool dilate_check(const Partition& la, const Partition& mu, const Partition& nu, int factor);

/// Depth-first search for an integral solution, bounding each variable of
/// label k by mu_k.  Returns nullopt if none exists or the budget runs out
/// (the flag tells which).
std::optional<std::vector<long long>> find_integer_point(const ConstraintSystem& sys,
                                                         const Partition& mu,
                                                         const WitnessSearchOptions& opts = {},
                                                         bool* budget_exceeded = nullptr);

}  // namespace lrvan
