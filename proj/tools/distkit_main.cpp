// distkit: command-line front end for bipartite entanglement classification,
// state-family generation, projector search, and recurrence distillation.
//
// Exit codes: 0 success, 1 protocol-level failure, 2 input/parameter error,
// 3 I/O error, 4 capacity exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "distkit/criteria.hpp"
#include "distkit/distill.hpp"
#include "distkit/errors.hpp"
#include "distkit/search.hpp"
#include "distkit/statefile.hpp"
#include "distkit/states.hpp"

namespace {

using distkit::BipartiteState;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitProtocol = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCapacity = 4;

struct GenerateArgs {
    std::string family;
    std::optional<double> f;
    std::optional<double> a;
    std::optional<int> d;
    std::optional<int> da;
    std::optional<int> db;
    std::optional<int> k;
    std::uint64_t seed = 0;
    std::string out;
};

template <typename T>
T require_flag(const std::optional<T>& v, const std::string& flag, const std::string& family) {
    if (!v) {
        throw distkit::ParameterError("generate " + family + " requires " + flag);
    }
    return *v;
}

BipartiteState state_from_args(const GenerateArgs& g) {
    distkit::FamilyParams p;
    p.seed = g.seed;
    if (g.family == "singlet") {
        p.family = distkit::Family::Singlet;
    } else if (g.family == "werner") {
        p.family = distkit::Family::Werner;
        p.fidelity = require_flag(g.f, "--f", g.family);
    } else if (g.family == "isotropic") {
        p.family = distkit::Family::Isotropic;
        p.d = require_flag(g.d, "--d", g.family);
        p.fidelity = require_flag(g.f, "--f", g.family);
    } else if (g.family == "horodecki3x3") {
        p.family = distkit::Family::Horodecki3x3;
        p.a = require_flag(g.a, "--a", g.family);
    } else if (g.family == "random-separable") {
        p.family = distkit::Family::RandomSeparable;
        p.dim_a = require_flag(g.da, "--da", g.family);
        p.dim_b = require_flag(g.db, "--db", g.family);
        p.terms = require_flag(g.k, "--k", g.family);
    } else if (g.family == "random-density") {
        p.family = distkit::Family::RandomDensity;
        p.dim_a = require_flag(g.da, "--da", g.family);
        p.dim_b = require_flag(g.db, "--db", g.family);
    } else {
        throw distkit::ParameterError("unknown family: " + g.family);
    }
    return distkit::make_state(p);
}

int cmd_generate(const GenerateArgs& g) {
    distkit::write_state_file(g.out, state_from_args(g));
    return kExitOk;
}

json report_to_json(const distkit::CriteriaReport& report) {
    json out;
    out["label"] = distkit::to_string(report.label.state_class);
    out["min_pt_eigenvalue"] = report.label.min_pt_eigenvalue;
    out["negativity"] = report.negativity;
    out["realignment_norm"] = report.realignment_norm;
    out["pt_spectrum"] = report.pt_spectrum;
    out["dims"] = {report.dim_a, report.dim_b};
    out["distillability_certified"] = report.label.distillability_certified;
    out["detector_scores"] = report.label.detector_scores;
    return out;
}

int cmd_classify(const std::string& in_path, double tol) {
    const BipartiteState s = distkit::read_state_file(in_path, tol);
    std::cout << report_to_json(distkit::classify(s, tol)).dump() << "\n";
    return kExitOk;
}

int cmd_distill(const std::string& in_path, double target, int max_rounds) {
    const BipartiteState s = distkit::read_state_file(in_path);
    json out;
    try {
        const distkit::DistillRun run = distkit::recurrence_distill(s, target, max_rounds);
        out["success"] = run.reached_target;
        if (!run.reached_target) {
            out["reason"] = "target fidelity not reached within max rounds";
        }
        out["filter_applied"] = run.filter_applied;
        out["filter_prob"] = run.filter_prob;
        out["final_fidelity"] = run.records.back().fidelity;
        json records = json::array();
        for (const auto& rec : run.records) {
            records.push_back({{"round", rec.round},
                               {"fidelity", rec.fidelity},
                               {"survival", rec.survival},
                               {"pairs_factor", rec.pairs_factor}});
        }
        out["records"] = std::move(records);
        std::cout << out.dump() << "\n";
        return run.reached_target ? kExitOk : kExitProtocol;
    } catch (const distkit::ProtocolFailure& e) {
        out["success"] = false;
        out["reason"] = "fidelity <= 1/2 after filtering";
        out["records"] = json::array();
        std::cout << out.dump() << "\n";
        std::cerr << e.what() << "\n";
        return kExitProtocol;
    }
}

json frame_to_json(const distkit::Frame2& f) {
    json vectors = json::array();
    for (const auto* v : {&f.v0(), &f.v1()}) {
        json entries = json::array();
        for (Eigen::Index i = 0; i < v->size(); ++i) {
            entries.push_back({(*v)(i).real(), (*v)(i).imag()});
        }
        vectors.push_back(std::move(entries));
    }
    return vectors;
}

int cmd_search(const std::string& in_path, int copies, int restarts, std::uint64_t seed,
               int budget) {
    const BipartiteState s = distkit::read_state_file(in_path);
    distkit::SearchOptions opts;
    opts.refine_budget = budget;
    const distkit::SearchResult r = distkit::search_2x2_projection(s, copies, restarts, seed, opts);
    json out;
    out["verdict"] = distkit::to_string(r.verdict);
    out["best_negativity"] = r.best_negativity;
    out["copies"] = r.copies;
    out["restarts_used"] = r.restarts_used;
    out["evaluations"] = r.evaluations;
    if (r.best_frame_a && r.best_frame_b) {
        out["best_frames"] = {{"a", frame_to_json(*r.best_frame_a)},
                              {"b", frame_to_json(*r.best_frame_b)}};
    } else {
        out["best_frames"] = nullptr;
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_scan_family(const std::string& family, double from, double to, double step,
                    std::optional<int> d, const std::string& out_path) {
    if (!(step > 0.0)) {
        throw distkit::ParameterError("scan-family: --step must be positive");
    }
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double x = from + i * step;
        if (x > to + 1e-12) {
            break;
        }
        grid.push_back(x);
    }
    if (grid.empty()) {
        throw distkit::ParameterError("scan-family: empty parameter grid");
    }

    std::string csv = "param,min_pt_eigenvalue,negativity,realignment_norm,label\n";
    for (double x : grid) {
        BipartiteState s = [&] {
            if (family == "werner") {
                return distkit::werner(x);
            }
            if (family == "isotropic") {
                if (!d) {
                    throw distkit::ParameterError("scan-family isotropic requires --d");
                }
                return distkit::isotropic(*d, x);
            }
            if (family == "horodecki3x3") {
                return distkit::horodecki3x3(x);
            }
            throw distkit::ParameterError("scan-family: unsupported family: " + family);
        }();
        const distkit::CriteriaReport report = distkit::classify(s);
        csv += distkit::format_double(x);
        csv += ',';
        csv += distkit::format_double(report.pt_spectrum.front());
        csv += ',';
        csv += distkit::format_double(report.negativity);
        csv += ',';
        csv += distkit::format_double(report.realignment_norm);
        csv += ',';
        csv += distkit::to_string(report.label.state_class);
        csv += '\n';
    }

    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw distkit::IoError("cannot open for writing: " + out_path);
        }
        out << csv;
        if (!out) {
            throw distkit::IoError("write failed: " + out_path);
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite mixed-state entanglement toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "generate a state family member");
    generate->add_option("family", gen.family,
                         "singlet | werner | isotropic | horodecki3x3 | "
                         "random-separable | random-density")
        ->required();
    generate->add_option("--f", gen.f, "fidelity parameter (werner, isotropic)");
    generate->add_option("--a", gen.a, "family parameter (horodecki3x3)");
    generate->add_option("--d", gen.d, "local dimension (isotropic)");
    generate->add_option("--da", gen.da, "dimension of subsystem A (random families)");
    generate->add_option("--db", gen.db, "dimension of subsystem B (random families)");
    generate->add_option("--k", gen.k, "number of product terms (random-separable)");
    generate->add_option("--seed", gen.seed, "PRNG seed (random families)");
    generate->add_option("--out", gen.out, "output state file")->required();

    std::string classify_in;
    double classify_tol = distkit::kDefaultTol;
    auto* classify = app.add_subcommand("classify", "classify a state file");
    classify->add_option("input", classify_in, "state file")->required();
    classify->add_option("--tol", classify_tol, "PT / validation tolerance");

    std::string distill_in;
    double distill_target = 0.99;
    int distill_rounds = 50;
    auto* distill = app.add_subcommand("distill", "run recurrence distillation on a 2x2 state");
    distill->add_option("input", distill_in, "state file")->required();
    distill->add_option("--target", distill_target, "target singlet fidelity, in (1/2, 1)");
    distill->add_option("--max-rounds", distill_rounds, "round budget");

    std::string search_in;
    int search_copies = 1;
    int search_restarts = 32;
    std::uint64_t search_seed = 0;
    int search_budget = 2000;
    auto* search = app.add_subcommand("search", "search for a distillable 2x2 projection");
    search->add_option("input", search_in, "state file")->required();
    search->add_option("--copies", search_copies, "tensor copies of the input");
    search->add_option("--restarts", search_restarts, "random restarts");
    search->add_option("--seed", search_seed, "search seed");
    search->add_option("--budget", search_budget, "refinement proposals per restart");

    std::string scan_family;
    double scan_from = 0.0;
    double scan_to = 0.0;
    double scan_step = 0.0;
    std::optional<int> scan_d;
    std::string scan_out;
    auto* scan = app.add_subcommand("scan-family", "classify a family over a parameter grid");
    scan->add_option("family", scan_family, "werner | isotropic | horodecki3x3")->required();
    scan->add_option("--from", scan_from, "grid start")->required();
    scan->add_option("--to", scan_to, "grid end (inclusive)")->required();
    scan->add_option("--step", scan_step, "grid step")->required();
    scan->add_option("--d", scan_d, "local dimension (isotropic)");
    scan->add_option("--out", scan_out, "output CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
        if (generate->parsed()) {
            return cmd_generate(gen);
        }
        if (classify->parsed()) {
            return cmd_classify(classify_in, classify_tol);
        }
        if (distill->parsed()) {
            return cmd_distill(distill_in, distill_target, distill_rounds);
        }
        if (search->parsed()) {
            return cmd_search(search_in, search_copies, search_restarts, search_seed,
                              search_budget);
        }
        if (scan->parsed()) {
            return cmd_scan_family(scan_family, scan_from, scan_to, scan_step, scan_d, scan_out);
        }
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const distkit::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const distkit::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const distkit::ProtocolFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitProtocol;
    } catch (const distkit::Error& e) {
        // parameter, validation, null-outcome
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
