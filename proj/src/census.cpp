#include "lrvan/census.hpp"

#include "lrvan/polytope.hpp"
#include "lrvan/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace lrvan {

namespace {

void gen_partitions(int rows, int cols, std::vector<int>& stack, std::vector<Partition>& out) {
    out.push_back(Partition(stack));
    if (static_cast<int>(stack.size()) == rows) return;
    int top = stack.empty() ? cols : stack.back();
    for (int p = 1; p <= top; ++p) {
        stack.push_back(p);
        gen_partitions(rows, cols, stack, out);
        stack.pop_back();
    }
}

std::string triple_name(const Partition& la, const Partition& mu, const Partition& nu) {
    return "la=(" + la.render() + ") mu=(" + mu.render() + ") nu=(" + nu.render() + ")";
}

struct PairWorker {
    const CensusOptions& opt;
    const std::vector<Partition>& nus;
    std::vector<CensusTriple>& triples;
    CensusResult local;  // counters and failures only

    // expansions for this pair at the handful of x counts the nu's require
    std::map<int, std::map<Partition, MultiPoly>> expansions;
    const Partition *la = nullptr, *mu = nullptr;

    PairWorker(const CensusOptions& o, const std::vector<Partition>& nus_,
               std::vector<CensusTriple>& triples_)
        : opt(o), nus(nus_), triples(triples_) {}

    const std::map<Partition, MultiPoly>& expansion_for(int n) {
        auto it = expansions.find(n);
        if (it == expansions.end())
            it = expansions.emplace(n, expand_product(*la, *mu, n, opt.schur_limits)).first;
        return it->second;
    }

    void fail(const std::string& what) { local.failures.push_back(what); }

    void run_pair(const Partition& la_, const Partition& mu_, std::size_t base) {
        la = &la_;
        mu = &mu_;
        expansions.clear();
        for (std::size_t vi = 0; vi < nus.size(); ++vi)
            triples[base + vi] = run_triple(nus[vi]);
    }

    CensusTriple run_triple(const Partition& nu) {
        CensusTriple t;
        t.la = *la;
        t.mu = *mu;
        t.nu = nu;
        std::string name = triple_name(*la, *mu, nu);

        ConstraintSystem sys = build_constraints(*la, *mu, nu);
        if (opt.check_structure) {
            ++local.systems_checked;
            check_structure(sys, name);
        }

        FeasibilityResult fr = feasible(sys);
        t.lp_feasible = fr.feasible;
        if (fr.feasible) {
            ++local.feasible_count;
            PointCheck chk = check_point(fr.point, sys);
            if (chk.ok) ++local.points_verified;
            else fail(name + ": feasibility certificate fails " + chk.violations.front());
        }

        std::vector<EdgeLabeledTableau> all =
            enumerate_valid_tableaux(*la, *mu, nu, opt.tableau_limits);
        for (const auto& tab : all) {
            bool col_lattice = is_lattice(column_word(tab));
            if (col_lattice) ++t.tableau_count;
            if (opt.with_reading_order) {
                ++local.tableaux_checked;
                if (col_lattice != is_lattice(row_word(tab)))
                    fail(name + ": row and column word lattice checks disagree");
            }
        }

        if (opt.with_oracle) {
            int n = std::max(la->length() + mu->length(), nu.length());
            const auto& exp = expansion_for(n);
            t.oracle_nonzero = exp.find(nu) != exp.end();
            t.agree = t.lp_feasible == (t.tableau_count > 0) && t.lp_feasible == t.oracle_nonzero;
            if (opt.with_positivity && t.oracle_nonzero) {
                ++local.positivity_checks;
                const MultiPoly& c = exp.at(nu);
                if (!c.shift_invariant_in_y())
                    fail(name + ": coefficient is not shift invariant");
                else if (!c.rewrite_in_beta().all_coefficients_nonnegative())
                    fail(name + ": coefficient has a negative term in the differences");
            }
        } else {
            t.agree = t.lp_feasible == (t.tableau_count > 0);
        }
        if (!t.agree) {
            ++local.disagreements;
            std::ostringstream os;
            os << name << ": verdicts disagree (lp " << t.lp_feasible << ", tableaux "
               << t.tableau_count << ", oracle " << t.oracle_nonzero << ")";
            fail(os.str());
        }

        for (int factor : opt.saturation_factors) {
            ++local.saturation_checks;
            ConstraintSystem scaled = build_constraints(scale(*la, factor), scale(*mu, factor),
                                                        scale(nu, factor));
            if (feasible(scaled).feasible != t.lp_feasible)
                fail(name + ": scaled verdict differs at factor " + std::to_string(factor));
        }
        for (int factor : opt.dilation_factors) {
            ++local.dilation_checks;
            if (!dilate_check(*la, *mu, nu, factor))
                fail(name + ": system does not scale by factor " + std::to_string(factor));
        }

        if (t.lp_feasible && opt.with_witnesses) {
            bool exceeded = false;
            WitnessSearchOptions wopt;
            auto ip = find_integer_point(sys, *mu, wopt, &exceeded);
            if (!ip) {
                fail(name + (exceeded ? ": integer point search ran out of budget"
                                      : ": feasible system has no integer point in the box"));
            } else {
                RowStatistics stats =
                    RowStatistics::from_vector(*ip, sys.shape_rows, sys.labels);
                EdgeLabeledTableau w = reconstruct_witness(stats, *la, *mu, nu);
                bool ok = is_valid(w, *mu) && is_lattice(row_word(w)) &&
                          is_lattice(column_word(w)) && row_statistics(w) == stats &&
                          t.tableau_count > 0;
                if (ok) ++local.witness_checks;
                else fail(name + ": reconstructed witness fails validation");
            }
        }
        return t;
    }

    void check_structure(const ConstraintSystem& sys, const std::string& name) {
        auto scan = [&](const std::vector<ConstraintRow>& rows) {
            for (const auto& row : rows) {
                if (static_cast<int>(row.coeffs.size()) != sys.num_vars) {
                    fail(name + ": constraint row has wrong width");
                    return;
                }
                for (int c : row.coeffs)
                    if (c < -1 || c > 1) {
                        fail(name + ": constraint coefficient outside {-1,0,1}");
                        return;
                    }
            }
        };
        scan(sys.equalities);
        scan(sys.inequalities);
    }
};

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(rows, cols, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(long long max_size) {
    std::vector<Partition> out;
    int bound = static_cast<int>(max_size);
    for (const Partition& p : partitions_in_box(bound, bound))
        if (p.size() <= max_size) out.push_back(p);
    return out;
}

CensusResult run_census(const CensusOptions& opt) {
    std::vector<Partition> lambdas = partitions_in_box(opt.box_rows, opt.box_cols);
    std::vector<Partition> mus = partitions_up_to(opt.mu_max_size);
    std::vector<Partition> nus = lambdas;

    struct Pair {
        const Partition *la, *mu;
    };
    std::vector<Pair> pairs;
    for (const Partition& la : lambdas)
        for (const Partition& mu : mus) pairs.push_back({&la, &mu});

    CensusResult result;
    result.triples.resize(pairs.size() * nus.size());

    int jobs = std::max(opt.jobs, 1);
    std::vector<CensusResult> partials(jobs);
    std::atomic<std::size_t> next{0};
    auto work = [&](int w) {
        PairWorker worker(opt, nus, result.triples);
        while (true) {
            std::size_t p = next.fetch_add(1);
            if (p >= pairs.size()) break;
            worker.run_pair(*pairs[p].la, *pairs[p].mu, p * nus.size());
        }
        partials[w] = std::move(worker.local);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    for (CensusResult& part : partials) {
        result.disagreements += part.disagreements;
        result.feasible_count += part.feasible_count;
        result.points_verified += part.points_verified;
        result.tableaux_checked += part.tableaux_checked;
        result.systems_checked += part.systems_checked;
        result.saturation_checks += part.saturation_checks;
        result.dilation_checks += part.dilation_checks;
        result.positivity_checks += part.positivity_checks;
        result.witness_checks += part.witness_checks;
        for (auto& f : part.failures) result.failures.push_back(std::move(f));
    }
    std::sort(result.failures.begin(), result.failures.end());
    return result;
}

std::string census_csv(const CensusResult& r) {
    std::ostringstream os;
    os << "lambda,mu,nu,lp_feasible,tableau_count_found,oracle_nonzero,agree\n";
    for (const CensusTriple& t : r.triples) {
        os << '"' << t.la.render() << "\",\"" << t.mu.render() << "\",\"" << t.nu.render()
           << "\"," << (t.lp_feasible ? 1 : 0) << ',' << t.tableau_count << ','
           << (t.oracle_nonzero ? 1 : 0) << ',' << (t.agree ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace lrvan
