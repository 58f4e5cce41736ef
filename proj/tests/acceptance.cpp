// End-to-end acceptance run: one line of output per criterion, exit code
// equal to the number of failed criteria.  The census (criteria 4 through 9
// and part of 10) runs once with every sweep enabled and the failures are
// classified afterwards by their message.

#include "fourier_motzkin.hpp"
#include "lrvan/census.hpp"
#include "lrvan/json_io.hpp"
#include "lrvan/partition.hpp"
#include "lrvan/polytope.hpp"
#include "lrvan/schur.hpp"
#include "lrvan/simplex.hpp"
#include "lrvan/tableau.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

using namespace lrvan;

namespace {

struct Tally {
    int failed = 0;

    void report(int id, const char* label, bool pass, double seconds, const std::string& note) {
        std::printf("criterion %2d: %s  %-46s (%.2fs)%s%s\n", id, pass ? "PASS" : "FAIL", label,
                    seconds, note.empty() ? "" : "  ", note.c_str());
        std::fflush(stdout);
        if (!pass) ++failed;
    }

    void run(int id, const char* label, const std::function<bool(std::string&)>& body) {
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string note;
        try {
            pass = body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report(id, label, pass, seconds, note);
    }
};

bool contains_match(const std::vector<std::string>& failures,
                    std::initializer_list<const char*> needles) {
    for (const std::string& f : failures)
        for (const char* n : needles)
            if (f.find(n) != std::string::npos) return true;
    return false;
}

std::string first_match(const std::vector<std::string>& failures,
                        std::initializer_list<const char*> needles) {
    for (const std::string& f : failures)
        for (const char* n : needles)
            if (f.find(n) != std::string::npos) return f;
    return {};
}

// The one-box square: s_1^2 = s_2 + s_11 + (y3 - y2) s_1 with two x's.
bool criterion_expansion(std::string& note) {
    auto exp = expand_product(Partition({1}), Partition({1}), 2);
    bool ok = exp.size() == 3 && exp.count(Partition({2})) && exp.count(Partition({1, 1})) &&
              exp.count(Partition({1}));
    ok = ok && exp.at(Partition({2})).to_string() == "+1";
    ok = ok && exp.at(Partition({1, 1})).to_string() == "+1";
    ok = ok && exp.at(Partition({1})).to_string() == "-1*y2 +1*y3";
    if (!ok) note = "expansion of s_1 * s_1 in two variables is off";
    return ok;
}

// The five-row worked instance: statistics vector, its fiber of tableaux,
// the canonical witness, and the final verdict.
bool criterion_five_row(std::string& note) {
    Partition la({2, 2, 1, 1}), mu({2, 2, 2, 1, 1}), nu({2, 2, 2, 2, 2});
    RowStatistics r = RowStatistics::zeros(5, 5);
    r.set_box(1, 3, 1);
    r.set_box(2, 4, 1);
    r.set_box(3, 5, 2);
    r.set_edge(1, 4, 1);
    r.set_edge(2, 4, 1);
    r.set_edge(4, 5, 1);
    r.set_edge(5, 5, 1);

    ConstraintSystem sys = build_constraints(la, mu, nu);
    if (!check_point(r, sys).ok) {
        note = "stated statistics violate the constraint system";
        return false;
    }

    auto valid = enumerate_valid_tableaux(la, mu, nu);
    long long fiber = 0, lattice = 0;
    for (const auto& t : valid) {
        if (!(row_statistics(t) == r)) continue;
        ++fiber;
        if (is_lattice(column_word(t))) ++lattice;
    }
    if (fiber != 4 || lattice != 3) {
        note = "statistics fiber has " + std::to_string(fiber) + " tableaux, " +
               std::to_string(lattice) + " lattice";
        return false;
    }

    EdgeLabeledTableau star = reconstruct_witness(r, la, mu, nu);
    SkewShape shape{nu, la};
    EdgeLabeledTableau expected(
        shape, {{{3, 2}, 1}, {{4, 2}, 2}, {{5, 1}, 3}, {{5, 2}, 3}},
        {{{4, 1}, {1, 2}}, {{5, 2}, {4, 5}}});
    if (!(star == expected)) {
        note = "canonical witness differs from the rightmost tableau";
        return false;
    }

    VanishingVerdict v = decide_vanishing(la, mu, nu, true);
    if (v.vanishes || !v.rational_point || !v.witness) {
        note = "vanishing verdict or witness missing";
        return false;
    }
    return true;
}

// The three-row statistics example: six listed values, all others zero.
bool criterion_statistics(std::string& note) {
    SkewShape shape{Partition({4, 4, 3}), Partition({4, 2, 1})};
    EdgeLabeledTableau t(shape, {{{2, 3}, 1}, {{2, 4}, 1}, {{3, 2}, 2}, {{3, 3}, 3}},
                         {{{2, 2}, {1}}, {{2, 3}, {2}}, {{3, 2}, {3}}});
    RowStatistics expected = RowStatistics::zeros(3, 3);
    expected.set_box(1, 2, 2);
    expected.set_edge(1, 2, 1);
    expected.set_edge(2, 2, 1);
    expected.set_box(2, 3, 1);
    expected.set_box(3, 3, 1);
    expected.set_edge(3, 3, 1);
    bool ok = is_valid(t, Partition({3, 2, 2})) && row_statistics(t) == expected;
    if (!ok) note = "displayed tableau statistics do not match";
    return ok;
}

}  // namespace

int main() {
    Tally tally;

    tally.run(1, "product expansion reproduced exactly", criterion_expansion);
    tally.run(2, "five-row instance end to end", criterion_five_row);
    tally.run(3, "row statistics of the displayed tableau", criterion_statistics);

    // One census run powers criteria 4 through 9 and the certificate half
    // of criterion 10.
    CensusOptions opt;
    opt.box_rows = opt.box_cols = 3;
    opt.mu_max_size = 4;
    opt.with_oracle = true;
    opt.with_witnesses = true;
    opt.with_reading_order = true;
    opt.check_structure = true;
    opt.with_positivity = true;
    opt.saturation_factors = {2, 3};
    opt.dilation_factors = {1, 2, 3, 7};
    opt.jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

    auto census_start = std::chrono::steady_clock::now();
    CensusResult census = run_census(opt);
    double census_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - census_start).count();

    const long long lambdas = 20, mus = 12;  // partitions in a 3x3 box, |mu| <= 4
    const long long expected_triples = lambdas * mus * lambdas;

    {
        bool pass = census.disagreements == 0 &&
                    static_cast<long long>(census.triples.size()) == expected_triples;
        for (const CensusTriple& t : census.triples) pass = pass && t.agree;
        std::string note = first_match(
            census.failures, {"verdicts disagree", "integer point", "witness fails validation"});
        if (!note.empty()) pass = false;
        if (pass)
            note = std::to_string(expected_triples) + " triples, " +
                   std::to_string(census.feasible_count) + " nonvanishing, census " +
                   std::to_string(static_cast<long long>(census_seconds)) + "s";
        tally.report(4, "three-way census agreement", pass, census_seconds, note);
    }
    {
        bool pass = census.tableaux_checked > 0 &&
                    !contains_match(census.failures, {"lattice checks disagree"});
        std::string note = "tableaux checked: " + std::to_string(census.tableaux_checked);
        tally.report(5, "reading order independence", pass, 0.0, note);
    }
    {
        bool pass = census.saturation_checks == 2 * expected_triples &&
                    !contains_match(census.failures, {"scaled verdict differs"});
        tally.report(6, "saturation of the verdict", pass, 0.0,
                     "scaled solves: " + std::to_string(census.saturation_checks));
    }
    {
        bool pass = census.dilation_checks == 4 * expected_triples &&
                    !contains_match(census.failures, {"does not scale by factor"});
        tally.report(7, "dilation identity of the system", pass, 0.0,
                     "scalings compared: " + std::to_string(census.dilation_checks));
    }
    {
        bool pass = census.systems_checked == expected_triples &&
                    !contains_match(census.failures, {"wrong width", "outside {-1,0,1}"});
        tally.report(8, "combinatorial constraint matrices", pass, 0.0,
                     "systems scanned: " + std::to_string(census.systems_checked));
    }
    {
        bool pass = census.positivity_checks > 0 &&
                    !contains_match(census.failures, {"shift invariant", "negative term"});
        tally.report(9, "positivity in the difference variables", pass, 0.0,
                     "coefficients rewritten: " + std::to_string(census.positivity_checks));
    }

    tally.run(10, "exact solver soundness", [&](std::string& note) {
        if (census.points_verified != census.feasible_count) {
            note = "only " + std::to_string(census.points_verified) + " of " +
                   std::to_string(census.feasible_count) + " certificates verified";
            return false;
        }
        if (contains_match(census.failures, {"feasibility certificate fails"})) {
            note = first_match(census.failures, {"feasibility certificate fails"});
            return false;
        }
        // Elimination cross-check on every census system small enough for it.
        std::vector<Partition> shapes = partitions_in_box(3, 3);
        std::vector<Partition> mus_list = partitions_up_to(4);
        long long compared = 0;
        for (const Partition& la : shapes)
            for (const Partition& nu : shapes)
                for (const Partition& mu : mus_list) {
                    ConstraintSystem sys = build_constraints(la, mu, nu);
                    if (sys.num_vars > 12) continue;
                    ++compared;
                    if (feasible(sys).feasible != testing::fm_feasible(sys)) {
                        note = "elimination disagrees on la=(" + la.render() + ") mu=(" +
                               mu.render() + ") nu=(" + nu.render() + ")";
                        return false;
                    }
                }
        // And on randomized dense-ish systems.
        std::mt19937 rng(987654321);
        std::uniform_int_distribution<int> var_count(1, 5);
        std::uniform_int_distribution<int> eq_count(0, 2);
        std::uniform_int_distribution<int> ineq_count(1, 6);
        std::uniform_int_distribution<int> coeff(-2, 2);
        std::uniform_int_distribution<long long> rhs(-4, 6);
        for (int trial = 0; trial < 500; ++trial) {
            ConstraintSystem sys;
            sys.num_vars = var_count(rng);
            sys.shape_rows = sys.num_vars;
            sys.labels = 1;
            auto fill = [&](std::vector<ConstraintRow>& rows, int count) {
                for (int e = 0; e < count; ++e) {
                    ConstraintRow row;
                    row.tag = ConstraintTag::D;
                    row.coeffs.resize(sys.num_vars);
                    for (int& c : row.coeffs) c = coeff(rng);
                    row.rhs = rhs(rng);
                    rows.push_back(std::move(row));
                }
            };
            fill(sys.equalities, eq_count(rng));
            fill(sys.inequalities, ineq_count(rng));
            if (feasible(sys).feasible != testing::fm_feasible(sys)) {
                note = "elimination disagrees on random trial " + std::to_string(trial);
                return false;
            }
        }
        note = std::to_string(compared) + " census systems + 500 random systems cross-checked";
        return true;
    });

    if (!census.failures.empty()) {
        std::printf("census failure detail (%zu):\n", census.failures.size());
        for (std::size_t i = 0; i < census.failures.size() && i < 10; ++i)
            std::printf("  %s\n", census.failures[i].c_str());
    }
    return tally.failed;
}
