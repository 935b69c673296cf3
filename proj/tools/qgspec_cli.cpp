// Command-line front end: graph generation, matrix export, CK/KC spectra,
// secular scans, loop spectra, invariant recovery and comparison reports.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgspec/boundary.hpp"
#include "qgspec/graph.hpp"
#include "qgspec/matrices.hpp"
#include "qgspec/recover.hpp"
#include "qgspec/serialize.hpp"
#include "qgspec/spectrum.hpp"

namespace {

// QG_SPECTRA_TOL overrides the default tolerances of every subcommand.
std::optional<double> env_tolerance() {
    const char* raw = std::getenv("QG_SPECTRA_TOL");
    if (!raw) return std::nullopt;
    try {
        return std::stod(raw);
    } catch (const std::exception&) {
        throw qg::Error(qg::ErrorCode::ParseError, "QG_SPECTRA_TOL is not a number");
    }
}

qg::Graph load_graph(const std::string& path) {
    if (path == "-") return qg::read_graph_auto(std::cin);
    std::ifstream in(path);
    if (!in) throw qg::Error(qg::ErrorCode::ParseError, "cannot open graph file '" + path + "'");
    return qg::read_graph_auto(in);
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qg::Error(qg::ErrorCode::ParseError, "cannot open file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw qg::Error(qg::ErrorCode::ParseError, e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw qg::Error(qg::ErrorCode::ParseError, "cannot open output file '" + out_path + "'");
    out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra of metric-graph Laplacians under CK/KC and general (Y,R) "
                 "boundary conditions"};
    app.require_subcommand(1);

    std::string out_path, format = "json";

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a named graph");
    std::string gen_kind;
    int gen_size = 0;
    gen->add_option("--kind", gen_kind, "path|circuit|star|complete|petersen|cube_q3|"
                                        "butler_grout_1|butler_grout_2")
        ->required();
    gen->add_option("--size", gen_size, "size parameter (ignored for fixed graphs)");
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->add_option("--format", format, "json|edgelist")->default_val("json");

    // matrices
    auto* matrices_cmd = app.add_subcommand("matrices", "Emit a named graph matrix");
    std::string mat_graph, mat_kind;
    matrices_cmd->add_option("--graph", mat_graph, "graph file (JSON or edge list, '-' for stdin)")
        ->required();
    matrices_cmd->add_option("--kind", mat_kind,
                             "adjacency|degree|signed_incidence|unsigned_incidence|"
                             "combinatorial_laplacian|normalized_laplacian|signless_laplacian")
        ->required();
    matrices_cmd->add_option("--out", out_path, "output file");
    matrices_cmd->add_option("--format", format, "json|csv")->default_val("json");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "CK/KC spectrum on a window");
    std::string spec_graph, spec_condition;
    double spec_lambda_max = 0.0, spec_tol = -1.0;
    bool spec_plot_data = false, spec_z = false;
    spectrum_cmd->add_option("--graph", spec_graph, "graph file")->required();
    spectrum_cmd->add_option("--condition", spec_condition, "ck|kc")->required();
    spectrum_cmd->add_option("--lambda-max", spec_lambda_max, "window upper end")->required();
    spectrum_cmd->add_option("--tol", spec_tol, "clustering tolerance");
    spectrum_cmd->add_flag("--plot-data", spec_plot_data,
                           "emit CSV columns lambda,cos_sqrt_lambda,condition,multiplicity");
    spectrum_cmd->add_flag("--transition", spec_z, "emit the transition-matrix spectrum instead");
    spectrum_cmd->add_option("--out", out_path, "output file");
    spectrum_cmd->add_option("--format", format, "json|csv")->default_val("json");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Secular singular-value scan");
    std::string scan_graph, scan_bc, scan_subspace, scan_coupling;
    double scan_lambda_max = 0.0, scan_grid_step = 0.01, scan_tol_root = 1e-10,
           scan_tol_mult = 1e-8;
    scan_cmd->add_option("--graph", scan_graph, "graph file (with --bc)");
    scan_cmd->add_option("--bc", scan_bc, "ck|kc (with --graph)");
    scan_cmd->add_option("--subspace", scan_subspace,
                         "JSON file with spanning vectors of Y (alternative to --graph)");
    scan_cmd->add_option("--coupling", scan_coupling, "JSON file with Hermitian R as [re,im] pairs");
    scan_cmd->add_option("--lambda-max", scan_lambda_max, "scan upper end")->required();
    scan_cmd->add_option("--grid-step", scan_grid_step, "step in s = sqrt(lambda)");
    scan_cmd->add_option("--tol-root", scan_tol_root, "root refinement tolerance in s");
    scan_cmd->add_option("--tol-mult", scan_tol_mult, "relative singular-value threshold");
    scan_cmd->add_option("--out", out_path, "output file");

    // loop
    auto* loop_cmd = app.add_subcommand("loop", "Closed-form loop spectrum for Y_alpha");
    double loop_re = 0.0, loop_im = 0.0, loop_lambda_max = 0.0;
    loop_cmd->add_option("--alpha-re", loop_re, "Re(alpha)")->required();
    loop_cmd->add_option("--alpha-im", loop_im, "Im(alpha)");
    loop_cmd->add_option("--lambda-max", loop_lambda_max, "window upper end")->required();
    loop_cmd->add_option("--out", out_path, "output file");

    // recover
    auto* recover_cmd = app.add_subcommand("recover", "Recover graph invariants from a spectrum");
    std::string recover_in, recover_condition;
    recover_cmd->add_option("--in", recover_in, "spectrum JSON file")->required();
    recover_cmd->add_option("--condition", recover_condition,
                            "ck|kc (must match the spectrum file)");
    recover_cmd->add_option("--out", out_path, "output file");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "Compare CK and KC spectra of one graph");
    std::string compare_graph;
    double compare_lambda_max = 0.0;
    compare_cmd->add_option("--graph", compare_graph, "graph file")->required();
    compare_cmd->add_option("--lambda-max", compare_lambda_max, "window upper end")->required();
    compare_cmd->add_option("--out", out_path, "output file");

    // report
    auto* report_cmd = app.add_subcommand("report", "Butler-Grout non-recoverability report");
    report_cmd->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const std::optional<double> env_tol = env_tolerance();

        if (*gen) {
            const qg::Graph g = qg::generate(qg::graph_kind_from_string(gen_kind), gen_size);
            if (format == "edgelist") {
                std::ostringstream text;
                qg::write_edge_list_text(g, text);
                emit(text.str(), out_path);
            } else {
                emit(dump(qg::to_json(g)), out_path);
            }
        } else if (*matrices_cmd) {
            const qg::Graph g = load_graph(mat_graph);
            const Eigen::MatrixXd m = qg::matrix(g, qg::matrix_kind_from_string(mat_kind));
            emit(format == "csv" ? qg::to_csv(m) : dump(qg::to_json(m)), out_path);
        } else if (*spectrum_cmd) {
            const qg::Graph g = load_graph(spec_graph);
            const double tol = spec_tol > 0.0 ? spec_tol : env_tol.value_or(-1.0);
            if (spec_z) {
                const qg::RealSpectrum z = qg::spectrum_of_transition(g, tol);
                emit(format == "csv" ? qg::to_csv(z) : dump(qg::to_json(z)), out_path);
            } else {
                const qg::Condition cond = qg::condition_from_string(spec_condition);
                const qg::SpectrumWindow window =
                    cond == qg::Condition::CK ? qg::ck_spectrum(g, spec_lambda_max, tol)
                                              : qg::kc_spectrum(g, spec_lambda_max, tol);
                if (spec_plot_data)
                    emit(qg::plot_data_csv(window), out_path);
                else
                    emit(format == "csv" ? qg::to_csv(window) : dump(qg::to_json(window)),
                         out_path);
            }
        } else if (*scan_cmd) {
            if (env_tol) scan_tol_mult = *env_tol;
            std::optional<qg::Subspace> y;
            if (!scan_subspace.empty()) {
                y = qg::Subspace::from_spanning(
                    qg::spanning_vectors_from_json(load_json(scan_subspace)));
            } else if (!scan_graph.empty() && !scan_bc.empty()) {
                const qg::Graph g = load_graph(scan_graph);
                y = qg::condition_from_string(scan_bc) == qg::Condition::CK ? qg::ck_subspace(g)
                                                                            : qg::kc_subspace(g);
            } else {
                throw qg::Error(qg::ErrorCode::InvalidArgument,
                                "scan needs either --subspace or --graph with --bc");
            }
            qg::BoundaryCondition bc = qg::BoundaryCondition::free_of_coupling(*y);
            if (!scan_coupling.empty()) {
                const Eigen::MatrixXcd r =
                    qg::spanning_vectors_from_json(load_json(scan_coupling));
                bc.R = r;
            }
            const qg::SecularScan scan = qg::scan_eigenvalues(bc, scan_lambda_max, scan_grid_step,
                                                              scan_tol_root, scan_tol_mult);
            emit(dump(qg::to_json(scan)), out_path);
        } else if (*loop_cmd) {
            const std::complex<double> alpha(loop_re, loop_im);
            const auto roots = qg::loop_spectrum(alpha, loop_lambda_max);
            nlohmann::json out_roots = nlohmann::json::array();
            for (const auto& r : roots)
                out_roots.push_back(
                    {{"lambda", qg::json_number(r.lambda)}, {"multiplicity", r.multiplicity}});
            const double cos_value = 2.0 * alpha.real() / (1.0 + std::norm(alpha));
            emit(dump({{"alpha", {qg::json_number(loop_re), qg::json_number(loop_im)}},
                       {"cos_value", qg::json_number(cos_value)},
                       {"roots", out_roots}}),
                 out_path);
        } else if (*recover_cmd) {
            qg::SpectrumWindow window = qg::spectrum_window_from_json(load_json(recover_in));
            if (!recover_condition.empty() &&
                qg::condition_from_string(recover_condition) != window.condition)
                throw qg::Error(qg::ErrorCode::WindowMismatch,
                                "--condition disagrees with the spectrum file");
            emit(dump(qg::to_json(qg::recover(window))), out_path);
        } else if (*compare_cmd) {
            const qg::Graph g = load_graph(compare_graph);
            emit(dump(qg::to_json(qg::compare_ck_kc(g, compare_lambda_max))), out_path);
        } else if (*report_cmd) {
            emit(dump(qg::to_json(qg::non_recoverability_report())), out_path);
        }
    } catch (const qg::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
