// Copyright 2026 The qracsr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "qracsr/bitstring.hpp"
#include "qracsr/bounds.hpp"
#include "qracsr/classical.hpp"
#include "qracsr/code_document.hpp"
#include "qracsr/constructions.hpp"
#include "qracsr/errors.hpp"
#include "qracsr/optimizer.hpp"
#include "qracsr/qrac.hpp"
#include "qracsr/sim.hpp"

namespace qracsr::cli {
namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string partition_text(const AxisPartition &p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << text;
}

void print_report(std::ostream &out, const QracCode &code, const CodeMetadata &meta, bool table) {
    const CodeReport r = evaluate(code);
    if (meta.name) out << "name\t" << *meta.name << "\n";
    out << "n\t" << r.n << "\n";
    out << "average\t" << fixed6(r.average) << "\n";
    out << "worst_case\t" << fixed6(r.worst_case) << "\n";
    out << "randomized_worst_case\t" << fixed6(r.randomized_worst_case) << "\n";
    out << "s_value\t" << fixed6(r.s_value) << "\n";
    out << "optimally_encoded\t" << (r.optimally_encoded ? "yes" : "no") << "\n";
    if (meta.expected_probability) out << "expected\t" << fixed6(*meta.expected_probability) << "\n";
    out << "upper_bound\t" << fixed6(upper_bound(r.n)) << "\n";
    out << "neutral\t";
    if (r.neutral_inputs.empty()) out << "-";
    for (std::size_t k = 0; k < r.neutral_inputs.size(); ++k) {
        out << (k ? "," : "") << bit_key(r.neutral_inputs[k], r.n);
    }
    out << "\n";
    if (table) {
        out << "x";
        for (int i = 1; i <= r.n; ++i) out << "\tp(x," << i << ")";
        out << "\n";
        for (std::uint64_t x = 0; x < code.input_count(); ++x) {
            out << bit_key(x, r.n);
            for (int i = 0; i < r.n; ++i) out << "\t" << fixed6(r.probability(x, i));
            out << "\n";
        }
    }
}

CodeDocument named_document(const std::string &name) {
    const NamedConstruction c = named_construction(name);
    return {make_optimal_code(c.measurements), {c.name, c.expected_probability}};
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Random access codes with shared randomness", "qracsr"};
    app.require_subcommand(1);

    // classical
    int classical_n = 0;
    bool exact = false;
    auto *classical = app.add_subcommand("classical", "Optimal classical code probability");
    classical->add_option("--n", classical_n, "Number of encoded bits")->required();
    classical->add_flag("--exact", exact, "Print the exact rational");

    // bound
    std::string bound_kind;
    int bound_n = 0;
    auto *bound = app.add_subcommand("bound", "Upper and lower bounds for the quantum code");
    bound->add_option("--kind", bound_kind, "upper | random-asymptotic | orthogonal")
        ->required()
        ->check(CLI::IsMember({"upper", "random-asymptotic", "orthogonal"}));
    bound->add_option("--n", bound_n, "Number of encoded bits")->required();

    // code
    auto *code = app.add_subcommand("code", "Known codes and code documents");
    code->require_subcommand(1);
    std::string show_name, show_json;
    bool show_table = false;
    auto *show = code->add_subcommand("show", "Evaluate a named construction");
    show->add_option("--name", show_name, "Construction name")->required();
    show->add_option("--json", show_json, "Also write the code document here");
    show->add_flag("--table", show_table, "Print p(x,i) for every input");
    std::string eval_json;
    bool eval_table = false;
    auto *eval = code->add_subcommand("eval", "Evaluate a code document");
    eval->add_option("--json", eval_json, "Code document")->required();
    eval->add_flag("--table", eval_table, "Print p(x,i) for every input");
    std::string geo_name, geo_json, geo_out;
    auto *geometry = code->add_subcommand("geometry", "Export circles and points for plotting");
    auto *geo_name_opt = geometry->add_option("--name", geo_name, "Construction name");
    auto *geo_json_opt = geometry->add_option("--json", geo_json, "Code document");
    geo_name_opt->excludes(geo_json_opt);
    geometry->add_option("--out", geo_out, "Write to this file instead of stdout");
    code->add_subcommand("list", "List construction names");

    // optimize
    int opt_n = 0;
    OptimizerConfig config;
    std::string opt_json;
    auto *optimize_cmd = app.add_subcommand("optimize", "Numerically maximize the success probability");
    optimize_cmd->add_option("--n", opt_n, "Number of encoded bits (2..12)")->required();
    optimize_cmd->add_option("--restarts", config.restarts, "Random restarts")->capture_default_str();
    optimize_cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    optimize_cmd->add_option("--max-iterations", config.max_iterations, "Iterations per restart")->capture_default_str();
    optimize_cmd->add_option("--threads", config.threads, "Worker threads")->capture_default_str();
    optimize_cmd->add_option("--json", opt_json, "Write the optimal code document here");

    // simulate
    std::string sim_json;
    std::int64_t sim_trials = 0;
    std::uint64_t sim_seed = 1;
    bool randomize = false;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo protocol simulation");
    simulate->add_option("--json", sim_json, "Code document")->required();
    simulate->add_option("--trials", sim_trials, "Trials per (input, index)")->required();
    simulate->add_option("--seed", sim_seed, "Random seed")->capture_default_str();
    simulate->add_flag("--randomize", randomize, "Apply shared-randomness input scrambling");

    // regions
    std::string regions_name, regions_file;
    auto *regions = app.add_subcommand("regions", "Count sphere regions cut by great circles");
    auto *rn = regions->add_option("--name", regions_name, "Construction name");
    auto *rc = regions->add_option("--circles", regions_file, "JSON file with circle normals");
    rn->excludes(rc);

    // table1
    std::uint64_t t1_trials = 1000000;
    std::uint64_t t1_seed = 1;
    auto *table1 = app.add_subcommand("table1", "Lower bounds for n = 2..9");
    table1->add_option("--trials", t1_trials, "Monte Carlo trials per n")->capture_default_str();
    table1->add_option("--seed", t1_seed, "Random seed")->capture_default_str();

    // table2
    int t2_max = 9;
    OptimizerConfig t2_config;
    auto *table2 = app.add_subcommand("table2", "Optimized probabilities for n = 2..max");
    table2->add_option("--max-n", t2_max, "Largest n (<= 12)")->capture_default_str();
    table2->add_option("--restarts", t2_config.restarts, "Random restarts")->capture_default_str();
    table2->add_option("--seed", t2_config.seed, "Random seed")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (classical->parsed()) {
            const ExactProbability p = optimal_classical_probability(classical_n);
            if (exact) {
                out << p.exact.str() << "\n";
                return 0;
            }
            out << "probability\t" << shortest(p.value) << "\n";
            out << "asymptotic\t" << fixed6(classical_asymptotic(classical_n)) << "\n";
            if (classical_n >= 2) {
                const ProbabilityInterval b = classical_bounds(classical_n);
                out << "lower_bound\t" << fixed6(b.lower) << "\n";
                out << "upper_bound\t" << fixed6(b.upper) << "\n";
            }
            return 0;
        }
        if (bound->parsed()) {
            if (bound_kind == "upper") {
                out << fixed6(upper_bound(bound_n)) << "\n";
            } else if (bound_kind == "random-asymptotic") {
                const AsymptoticBound b = random_lower_bound_asymptotic(bound_n);
                out << fixed6(b.probability) << "\n";
                if (b.small_n_caveat) err << "note: asymptotic formula; n < 4 is outside its regime\n";
            } else {
                const OrthogonalBound b = orthogonal_lower_bound(bound_n);
                out << fixed6(b.probability) << "\t" << partition_text(b.partition) << "\n";
            }
            return 0;
        }
        if (code->parsed()) {
            if (show->parsed()) {
                const CodeDocument doc = named_document(show_name);
                print_report(out, doc.code, doc.metadata, show_table);
                if (!show_json.empty()) write_code_document(show_json, doc);
                return 0;
            }
            if (eval->parsed()) {
                const CodeDocument doc = read_code_document(eval_json);
                print_report(out, doc.code, doc.metadata, eval_table);
                return 0;
            }
            if (geometry->parsed()) {
                if (geo_name.empty() == geo_json.empty()) {
                    throw std::invalid_argument("give exactly one of --name or --json");
                }
                const QracCode c = geo_name.empty() ? read_code_document(geo_json).code : known_code(geo_name);
                const std::string text = geometry_json(c);
                if (geo_out.empty()) {
                    out << text;
                } else {
                    write_text(geo_out, text);
                }
                return 0;
            }
            for (const std::string &name : construction_names()) out << name << "\n";
            return 0;
        }
        if (optimize_cmd->parsed()) {
            const OptimizerResult r = optimize(opt_n, config);
            out << "probability\t" << fixed6(r.probability) << "\n";
            out << "s_value\t" << fixed6(r.s_value) << "\n";
            out << "best_restart\t" << r.best_restart << "\n";
            out << "axis\ttheta\tphi\tx\ty\tz\n";
            for (std::size_t i = 0; i < r.measurements.size(); ++i) {
                const BlochVector &v = r.measurements[i].direction;
                const double theta = std::acos(std::clamp(v.z(), -1.0, 1.0));
                double phi = std::atan2(v.y(), v.x());
                if (phi < 0.0) phi += 2.0 * std::numbers::pi;
                out << "v" << (i + 1) << "\t" << fixed6(theta) << "\t" << fixed6(phi) << "\t" << fixed6(v.x())
                    << "\t" << fixed6(v.y()) << "\t" << fixed6(v.z()) << "\n";
            }
            if (!opt_json.empty()) {
                write_code_document(opt_json, {make_optimal_code(r.measurements),
                                               {"optimized-n" + std::to_string(opt_n), r.probability}});
            }
            return 0;
        }
        if (simulate->parsed()) {
            if (sim_trials < 1) throw std::invalid_argument("--trials must be at least 1");
            const CodeDocument doc = read_code_document(sim_json);
            const SimReport r = simulate_code(doc.code, static_cast<std::uint64_t>(sim_trials), sim_seed, randomize);
            out << "n\t" << r.n << "\n";
            out << "randomized\t" << (r.randomized ? "yes" : "no") << "\n";
            out << "trials_per_input\t" << r.trials_per_input << "\n";
            out << "seed\t" << r.seed << "\n";
            out << "average\t" << fixed6(r.average) << "\n";
            out << "worst_case\t" << fixed6(r.worst_case) << "\n";
            out << "best_case\t" << fixed6(r.best_case) << "\n";
            out << "spread\t" << fixed6(r.spread()) << "\n";
            return 0;
        }
        if (regions->parsed()) {
            if (regions_name.empty() == regions_file.empty()) {
                throw std::invalid_argument("give exactly one of --name or --circles");
            }
            if (!regions_name.empty()) {
                const NamedConstruction c = named_construction(regions_name);
                out << count_sphere_regions(arrangement_from_measurements(c.measurements)) << "\n";
            } else {
                const GreatCircleArrangement arr(circles_from_json(read_text_file(regions_file)));
                out << count_sphere_regions(arr) << "\n";
            }
            return 0;
        }
        if (table1->parsed()) {
            if (t1_trials < 1) throw std::invalid_argument("--trials must be at least 1");
            out << "n\torthogonal\tpartition\tasymptotic\tsampling\n";
            for (int n = 2; n <= 9; ++n) {
                const OrthogonalBound o = orthogonal_lower_bound(n);
                const WalkEstimate w = random_walk_distance_mc(n, t1_trials, t1_seed);
                out << n << "\t" << fixed6(o.probability) << "\t" << partition_text(o.partition) << "\t"
                    << fixed6(random_lower_bound_asymptotic(n).probability) << "\t"
                    << fixed6(walk_probability(n, w.mean_distance)) << "\n";
            }
            return 0;
        }
        if (table2->parsed()) {
            if (t2_max < 2) throw std::invalid_argument("--max-n must be at least 2");
            if (t2_max > 12) throw CostGuardError("--max-n above 12 is outside the optimizer's budget");
            out << "n\toptimized\tupper_bound\tclassical\n";
            for (int n = 2; n <= t2_max; ++n) {
                const OptimizerResult r = optimize(n, t2_config);
                out << n << "\t" << fixed6(r.probability) << "\t" << fixed6(upper_bound(n)) << "\t"
                    << fixed6(optimal_classical_probability(n).value) << "\n";
            }
            return 0;
        }
    } catch (const CostGuardError &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace qracsr::cli
