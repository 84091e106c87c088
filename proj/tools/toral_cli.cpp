// Command-line surface for the affine torus-map analyzer: batch commands that
// read JSON input documents and emit versioned JSON reports.
//
// Exit codes: 0 success (and "Isomorphic" for compare), 1 parse error,
// 2 out-of-regime input, 3 NotIsomorphic, 4 Undecided.

#include "toral/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

namespace {

using namespace toral;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitOutOfRegime = 2;
constexpr int kExitNotIsomorphic = 3;
constexpr int kExitUndecided = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Json& doc, const std::string& out_path) {
    std::string text = serialize_document(doc);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write output file '" + out_path + "'");
    out << text;
}

int cmd_analyze(const std::string& in_path, const std::string& out_path) {
    InputSpec spec = parse_input_spec(read_file(in_path));
    TransitivityVerdict verdict = classify_transitivity(spec.matrix, spec.translation);
    Json payload;
    payload["transitivity"] = json_verdict(verdict);
    if (spec.n <= 3)
        payload["ktheory"] = json_ktheory(k_groups_affine(spec.matrix, spec.translation));
    else
        payload["ktheory_note"] = "K-theory reports cover n <= 3 only";
    emit(make_document("analyze", {spec}, payload), out_path);
    return kExitOk;
}

int cmd_ktheory(const std::string& in_path, const std::string& out_path) {
    InputSpec spec = parse_input_spec(read_file(in_path));
    Json payload;
    payload["ktheory"] = json_ktheory(k_groups_endomorphism(spec.matrix));
    emit(make_document("ktheory", {spec}, payload), out_path);
    return kExitOk;
}

int cmd_presentation(const std::string& in_path, const std::string& out_path) {
    InputSpec spec = parse_input_spec(read_file(in_path));
    Json payload;
    payload["presentation"] = json_presentation(presentation(spec.matrix, spec.translation));
    emit(make_document("presentation", {spec}, payload), out_path);
    return kExitOk;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& out_path) {
    InputSpec a = parse_input_spec(read_file(a_path));
    InputSpec b = parse_input_spec(read_file(b_path));
    ComparisonReport report =
        same_algebra(a.matrix, a.translation, b.matrix, b.translation);
    Json payload;
    payload["comparison"] = json_comparison(report);
    emit(make_document("compare", {a, b}, payload), out_path);
    switch (report.verdict) {
        case IsoVerdict::Isomorphic: return kExitOk;
        case IsoVerdict::NotIsomorphic: return kExitNotIsomorphic;
        case IsoVerdict::Undecided: return kExitUndecided;
    }
    return kExitUndecided;
}

int cmd_simulate(const std::string& in_path, const std::string& out_path,
                 long resolution, long max_steps, double box_radius,
                 double box_center) {
    InputSpec spec = parse_input_spec(read_file(in_path));
    std::vector<double> alpha = spec.numeric_translation();
    std::vector<double> center(static_cast<std::size_t>(spec.n), box_center);
    GridCoverResult res = grid_transitivity_oracle(
        spec.matrix, alpha, center, box_radius, resolution, max_steps);
    Json payload;
    payload["grid_oracle"] = json_grid_result(res);
    payload["parameters"] = {{"resolution", resolution},
                             {"max_steps", max_steps},
                             {"box_radius", box_radius},
                             {"box_center", box_center}};
    emit(make_document("simulate", {spec}, payload), out_path);
    return kExitOk;
}

int cmd_conjugacy(long deg, double perturbation, double tol, long samples,
                  long max_iter, const std::string& out_path) {
    if (std::fabs(perturbation * 2 * std::numbers::pi) >= std::fabs(static_cast<double>(deg)))
        throw out_of_regime_error(
            "perturbation too large: the sample lift must stay monotone");
    CircleLift lift;
    lift.sample_count = samples;
    lift.g = [deg, perturbation](double t) {
        return static_cast<double>(deg) * t +
               perturbation * std::sin(2 * std::numbers::pi * t);
    };
    long d = degree(lift);
    ConjugacyResult res = conjugacy_to_power_map(lift, tol, max_iter);
    Json payload;
    payload["degree"] = d;
    payload["residual"] = res.residual;
    payload["iterations"] = res.iterations;
    payload["final_step_size"] =
        res.step_sizes.empty() ? 0.0 : res.step_sizes.back();
    payload["samples"] = samples;
    emit(make_document("conjugacy", {}, payload), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analyzer for affine torus maps T(x) = lambda * phi_A(x)"};
    app.require_subcommand(1);

    std::string in_path, in_path_b, out_path;
    long resolution = 256, max_steps = 200, samples = 4096, max_iter = 200;
    long deg = 2;
    double box_radius = 0.15, box_center = 0.5, tol = 1e-10, perturbation = 0.05;

    auto add_io = [&](CLI::App* sub, bool two_inputs = false) {
        sub->add_option("input", in_path, "input JSON file")->required();
        if (two_inputs)
            sub->add_option("input_b", in_path_b, "second input JSON file")->required();
        sub->add_option("-o,--output", out_path, "write the report here (default stdout)");
    };

    auto* analyze = app.add_subcommand(
        "analyze", "transitivity/exactness verdict plus K-data when n <= 3");
    add_io(analyze);
    auto* ktheory = app.add_subcommand(
        "ktheory", "K-groups with unit class for the endomorphism algebra");
    add_io(ktheory);
    auto* pres = app.add_subcommand(
        "presentation", "universal generators-and-relations presentation");
    add_io(pres);
    auto* compare = app.add_subcommand(
        "compare", "decide isomorphism of two affine-map algebras");
    add_io(compare, true);

    auto* simulate = app.add_subcommand(
        "simulate", "grid covering oracle (numerical, n <= 2)");
    add_io(simulate);
    simulate->add_option("--resolution", resolution, "grid cells per axis");
    simulate->add_option("--max-steps", max_steps, "forward-image step budget");
    simulate->add_option("--box-radius", box_radius, "seed box half-width");
    simulate->add_option("--box-center", box_center, "seed box center (each axis)");

    auto* conjugacy = app.add_subcommand(
        "conjugacy", "conjugate a perturbed power circle map to t -> d t");
    conjugacy->add_option("--degree", deg, "map degree d, |d| >= 2");
    conjugacy->add_option("--perturbation", perturbation,
                          "amplitude c of g(t) = d t + c sin(2 pi t)");
    conjugacy->add_option("--tol", tol, "fixed-point stopping tolerance");
    conjugacy->add_option("--samples", samples, "uniform sample count");
    conjugacy->add_option("--max-iter", max_iter, "iteration budget");
    conjugacy->add_option("-o,--output", out_path, "write the report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(in_path, out_path);
        if (ktheory->parsed()) return cmd_ktheory(in_path, out_path);
        if (pres->parsed()) return cmd_presentation(in_path, out_path);
        if (compare->parsed()) return cmd_compare(in_path, in_path_b, out_path);
        if (simulate->parsed())
            return cmd_simulate(in_path, out_path, resolution, max_steps,
                                box_radius, box_center);
        if (conjugacy->parsed())
            return cmd_conjugacy(deg, perturbation, tol, samples, max_iter, out_path);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const toral::out_of_regime_error& e) {
        std::cerr << "out of regime: " << e.what() << "\n";
        return kExitOutOfRegime;
    } catch (const invalid_lift_error& e) {
        std::cerr << "invalid lift: " << e.what() << "\n";
        return kExitOutOfRegime;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
