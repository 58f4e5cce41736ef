#include "lrvan/census.hpp"
#include "lrvan/json_io.hpp"
#include "lrvan/polytope.hpp"
#include "lrvan/schur.hpp"
#include "lrvan/simplex.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace lrvan;

constexpr int kExitNonvanishing = 0;
constexpr int kExitVanishes = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDisagreement = 4;

int cmd_vanish(const std::string& ls, const std::string& ms, const std::string& ns, bool witness,
               bool classical, bool json_out) {
    Partition la = Partition::parse(ls), mu = Partition::parse(ms), nu = Partition::parse(ns);
    bool size_ok = la.size() + mu.size() == nu.size();
    VanishingVerdict v;
    if (classical && !size_ok) {
        v.vanishes = true;
    } else {
        v = decide_vanishing(la, mu, nu, witness);
    }
    if (json_out) {
        nlohmann::json j;
        j["lambda"] = to_json(la);
        j["mu"] = to_json(mu);
        j["nu"] = to_json(nu);
        j["classical"] = classical;
        j["vanishes"] = v.vanishes;
        if (v.rational_point) {
            std::vector<std::string> point;
            for (const Rational& q : *v.rational_point) point.push_back(q.str());
            j["rational_point"] = point;
        }
        if (witness) {
            j["witness_budget_exceeded"] = v.witness_budget_exceeded;
            if (v.witness) j["witness"] = to_json(*v.witness);
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (v.vanishes ? "VANISHES" : "NONVANISHING") << '\n';
        if (witness && v.witness) {
            std::cout << render_text(*v.witness);
        } else if (witness && !v.vanishes) {
            std::cout << (v.witness_budget_exceeded ? "witness search budget exhausted\n"
                                                    : "no integral witness found\n");
        }
    }
    return v.vanishes ? kExitVanishes : kExitNonvanishing;
}

int cmd_expand(const std::string& ls, const std::string& ms, int n, bool json_out) {
    Partition la = Partition::parse(ls), mu = Partition::parse(ms);
    if (n < 0) n = la.length() + mu.length();
    auto expansion = expand_product(la, mu, n);
    if (json_out) {
        nlohmann::json j;
        j["n"] = n;
        j["terms"] = nlohmann::json::array();
        for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
            nlohmann::json term;
            term["nu"] = to_json(it->first);
            term["y"] = it->second.to_string("x", "y");
            term["beta"] = it->second.rewrite_in_beta().to_string("x", "b");
            j["terms"].push_back(std::move(term));
        }
        std::cout << j.dump(2) << '\n';
    } else {
        for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
            std::cout << '(' << it->first.render() << "): " << it->second.to_string("x", "y")
                      << "  |  beta: " << it->second.rewrite_in_beta().to_string("x", "b")
                      << '\n';
        }
    }
    return 0;
}

int cmd_census(const std::string& box, long long mu_max, const std::string& csv_path, int jobs) {
    CensusOptions opt;
    auto xpos = box.find('x');
    if (xpos == std::string::npos) throw ParseError("box must look like 3x3");
    opt.box_rows = std::stoi(box.substr(0, xpos));
    opt.box_cols = std::stoi(box.substr(xpos + 1));
    opt.mu_max_size = mu_max;
    opt.jobs = jobs;
    opt.with_oracle = true;
    opt.with_witnesses = true;
    opt.with_reading_order = true;
    opt.check_structure = true;
    opt.with_positivity = true;
    opt.saturation_factors = {2, 3};
    opt.dilation_factors = {1, 2, 3, 7};

    CensusResult r = run_census(opt);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        out << census_csv(r);
    }
    std::cout << "triples: " << r.triples.size() << '\n'
              << "feasible: " << r.feasible_count << '\n'
              << "points verified: " << r.points_verified << '\n'
              << "tableaux checked: " << r.tableaux_checked << '\n'
              << "saturation checks: " << r.saturation_checks << '\n'
              << "dilation checks: " << r.dilation_checks << '\n'
              << "positivity checks: " << r.positivity_checks << '\n'
              << "witness round trips: " << r.witness_checks << '\n'
              << "disagreements: " << r.disagreements << '\n';
    if (!r.failures.empty()) {
        std::cout << "FAIL: " << r.failures.front() << '\n';
        return kExitDisagreement;
    }
    return 0;
}

int cmd_dump(const std::string& ls, const std::string& ms, const std::string& ns, bool json_out) {
    Partition la = Partition::parse(ls), mu = Partition::parse(ms), nu = Partition::parse(ns);
    ConstraintSystem sys = build_constraints(la, mu, nu);
    if (json_out) std::cout << to_json(sys).dump(2) << '\n';
    else std::cout << dump_text(sys);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vanishing of equivariant Littlewood-Richardson coefficients"};
    app.require_subcommand(1);

    std::string ls, ms, ns, box = "3x3", csv_path;
    bool witness = false, classical = false, json_out = false;
    int n = -1, jobs = 1;
    long long mu_max = 4;

    CLI::App* vanish = app.add_subcommand("vanish", "decide whether the coefficient vanishes");
    vanish->add_option("-l,--lambda", ls, "first partition, e.g. 2,1")->required();
    vanish->add_option("-m,--mu", ms, "second partition")->required();
    vanish->add_option("-n,--nu", ns, "target partition")->required();
    vanish->add_flag("--witness", witness, "search for an integral point and print its tableau");
    vanish->add_flag("--classical", classical, "decide the classical coefficient instead");
    vanish->add_flag("--json", json_out, "JSON output");

    CLI::App* expand = app.add_subcommand("expand", "expand a product in the deformed basis");
    expand->add_option("-l,--lambda", ls)->required();
    expand->add_option("-m,--mu", ms)->required();
    expand->add_option("-n,--nvars", n, "number of x variables (default: sum of lengths)");
    expand->add_flag("--json", json_out, "JSON output");

    CLI::App* census = app.add_subcommand("census", "cross-check all verdict routes over a box");
    census->add_option("--box", box, "lambda/nu box, e.g. 3x3");
    census->add_option("--mu-max", mu_max, "largest |mu|");
    census->add_option("--csv", csv_path, "write per-triple results to this file");
    census->add_option("--jobs", jobs, "worker threads");

    CLI::App* dump = app.add_subcommand("dump", "print the constraint system");
    dump->add_option("-l,--lambda", ls)->required();
    dump->add_option("-m,--mu", ms)->required();
    dump->add_option("-n,--nu", ns)->required();
    dump->add_flag("--json", json_out, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (vanish->parsed()) return cmd_vanish(ls, ms, ns, witness, classical, json_out);
        if (expand->parsed()) return cmd_expand(ls, ms, n, json_out);
        if (census->parsed()) return cmd_census(box, mu_max, csv_path, jobs);
        if (dump->parsed()) return cmd_dump(ls, ms, ns, json_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return kExitUsage;
}
