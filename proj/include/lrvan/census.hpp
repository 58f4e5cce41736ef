#pragma once

#include "lrvan/partition.hpp"
#include "lrvan/schur.hpp"
#include "lrvan/tableau.hpp"

#include <string>
#include <vector>

namespace lrvan {

/// Sweep of every (la, mu, nu) with la, nu inside a box and |mu| bounded,
/// comparing the three independent routes to the same verdict: rational
/// feasibility, tableau enumeration, and the expansion oracle.  The optional
/// sweeps bolt further invariant checks onto the same triples.
struct CensusOptions {
    int box_rows = 3, box_cols = 3;
    long long mu_max_size = 4;

    bool with_oracle = true;
    bool with_witnesses = false;        // integer point, tableau round trip
    bool with_reading_order = false;    // row word lattice == column word lattice
    bool check_structure = false;       // coefficients in {-1,0,1}, bounded rhs
    bool with_positivity = false;       // beta rewrite of every nonzero coefficient
    std::vector<int> saturation_factors;  // scaled verdict must match
    std::vector<int> dilation_factors;    // structural rhs scaling identity

    int jobs = 1;
    SearchLimits tableau_limits{};
    SchurLimits schur_limits{};
};

struct CensusTriple {
    Partition la, mu, nu;
    bool lp_feasible = false;
    long long tableau_count = 0;
    bool oracle_nonzero = false;
    bool agree = true;
};

struct CensusResult {
    std::vector<CensusTriple> triples;
    long long disagreements = 0;
    long long feasible_count = 0;
    long long points_verified = 0;   // feasibility certificates rechecked exactly
    long long tableaux_checked = 0;  // reading order sweep
    long long systems_checked = 0;   // structure sweep
    long long saturation_checks = 0;
    long long dilation_checks = 0;
    long long positivity_checks = 0;
    long long witness_checks = 0;
    std::vector<std::string> failures;  // empty when every check passed
};

CensusResult run_census(const CensusOptions& opt);

/// lambda,mu,nu,lp_feasible,tableau_count_found,oracle_nonzero,agree with
/// partitions quoted and flags as 0/1.
std::string census_csv(const CensusResult& r);

std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> partitions_up_to(long long max_size);

}  // namespace lrvan
