#include "qgspec/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

namespace qg {

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g", v);
    return buffer;
}

nlohmann::json json_number(double v) {
    return nlohmann::json(std::stod(format_double(v)));
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error(ErrorCode::ParseError, "graph JSON needs fields 'n' and 'edges'");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw Error(ErrorCode::ParseError, "each edge must be a [tail, head] pair");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edge_list(j.at("n").get<int>(), pairs);
}

nlohmann::json to_json(const RealSpectrum& spec) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [value, mult] : spec.values)
        out.push_back({{"value", json_number(value)}, {"multiplicity", mult}});
    return out;
}

nlohmann::json to_json(const SpectrumWindow& window) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : window.entries) {
        nlohmann::json entry = {{"lambda", json_number(e.lambda)},
                                {"multiplicity", e.multiplicity},
                                {"class", to_string(e.klass)}};
        entry["source_mu"] = e.source_mu ? json_number(*e.source_mu) : nlohmann::json();
        entries.push_back(entry);
    }
    return {{"condition", to_string(window.condition)},
            {"lambda_max", json_number(window.lambda_max)},
            {"entries", entries}};
}

SpectrumWindow spectrum_window_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("condition") || !j.contains("lambda_max") ||
        !j.contains("entries"))
        throw Error(ErrorCode::ParseError,
                    "spectrum JSON needs 'condition', 'lambda_max' and 'entries'");
    SpectrumWindow window;
    window.condition = condition_from_string(j.at("condition").get<std::string>());
    window.lambda_max = j.at("lambda_max").get<double>();
    for (const auto& e : j.at("entries")) {
        EigenvalueEntry entry;
        entry.lambda = e.at("lambda").get<double>();
        entry.sqrt_lambda = std::sqrt(std::max(entry.lambda, 0.0));
        entry.multiplicity = e.at("multiplicity").get<int>();
        if (e.contains("class")) {
            const std::string klass = e.at("class").get<std::string>();
            if (klass == "zero") entry.klass = EigClass::zero;
            else if (klass == "immanent") entry.klass = EigClass::immanent;
            else if (klass == "singular_cos_plus_one") entry.klass = EigClass::singular_cos_plus_one;
            else if (klass == "singular_cos_minus_one") entry.klass = EigClass::singular_cos_minus_one;
            else throw Error(ErrorCode::ParseError, "unknown eigenvalue class '" + klass + "'");
        }
        if (e.contains("source_mu") && !e.at("source_mu").is_null())
            entry.source_mu = e.at("source_mu").get<double>();
        window.entries.push_back(entry);
    }
    return window;
}

nlohmann::json to_json(const SecularScan& scan) {
    nlohmann::json roots = nlohmann::json::array();
    for (const ScanRoot& r : scan.roots)
        roots.push_back({{"lambda", json_number(r.lambda)}, {"multiplicity", r.multiplicity}});
    return {{"roots", roots}, {"regime_guaranteed", scan.regime_guaranteed}};
}

nlohmann::json to_json(const RecoveredInvariants& r) {
    return {{"n", r.n},       {"N", r.N},
            {"c", r.c},       {"c_plus", r.c_plus},
            {"c_minus", r.c_minus}, {"condition", to_string(r.source_condition)}};
}

nlohmann::json to_json(const CkKcComparison& report) {
    return {{"full_coincidence", report.full_coincidence},
            {"immanent_coincidence", report.immanent_coincidence},
            {"unicyclic_and_bipartite", report.unicyclic_and_bipartite},
            {"bipartite", report.bipartite},
            {"equivalences_hold", report.equivalences_hold}};
}

nlohmann::json to_json(const ContractionReport& report) {
    return {{"lambda1_original", json_number(report.lambda1_original)},
            {"lambda1_contracted", json_number(report.lambda1_contracted)},
            {"holds", report.holds}};
}

nlohmann::json to_json(const NonRecoverabilityReport& report) {
    return {{"ck_isospectral", report.ck_isospectral},
            {"kc_isospectral", report.kc_isospectral},
            {"spanning_trees", {report.spanning_trees_1, report.spanning_trees_2}},
            {"degree_sequences", {report.degree_sequence_1, report.degree_sequence_2}},
            {"degree_sequences_differ", report.degree_sequences_differ},
            {"recovered", {to_json(report.recovered_1), to_json(report.recovered_2)}},
            {"c4_claw_z_isospectral", report.c4_claw_z_isospectral},
            {"c4_claw_ck_isospectral", report.c4_claw_ck_isospectral}};
}

nlohmann::json to_json(const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json_number(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Eigen::MatrixXcd spanning_vectors_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw Error(ErrorCode::ParseError, "expected a nonempty JSON list of spanning vectors");
    const size_t ambient = j[0].size();
    Eigen::MatrixXcd span(static_cast<Eigen::Index>(ambient), static_cast<Eigen::Index>(j.size()));
    for (size_t col = 0; col < j.size(); ++col) {
        const auto& vec = j[col];
        if (!vec.is_array() || vec.size() != ambient)
            throw Error(ErrorCode::ParseError, "spanning vectors must share one length");
        for (size_t row = 0; row < ambient; ++row) {
            const auto& entry = vec[row];
            if (!entry.is_array() || entry.size() != 2)
                throw Error(ErrorCode::ParseError, "vector entries must be [re, im] pairs");
            span(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                std::complex<double>(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return span;
}

std::string to_csv(const Eigen::MatrixXd& m) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ",";
            out << format_double(m(i, j));
        }
        out << "\n";
    }
    return out.str();
}

std::string to_csv(const SpectrumWindow& window) {
    std::ostringstream out;
    out << "lambda,multiplicity,class\n";
    for (const auto& e : window.entries)
        out << format_double(e.lambda) << "," << e.multiplicity << "," << to_string(e.klass)
            << "\n";
    return out.str();
}

std::string to_csv(const RealSpectrum& spec) {
    std::ostringstream out;
    out << "value,multiplicity\n";
    for (const auto& [value, mult] : spec.values)
        out << format_double(value) << "," << mult << "\n";
    return out.str();
}

std::string plot_data_csv(const SpectrumWindow& window) {
    std::ostringstream out;
    out << "lambda,cos_sqrt_lambda,condition,multiplicity\n";
    for (const auto& e : window.entries)
        out << format_double(e.lambda) << "," << format_double(std::cos(e.sqrt_lambda)) << ","
            << to_string(window.condition) << "," << e.multiplicity << "\n";
    return out.str();
}

Graph read_graph_auto(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error(ErrorCode::ParseError, "empty graph input");
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        return graph_from_json(j);
    }
    std::istringstream stream(text);
    return read_edge_list_text(stream);
}

} // namespace qg
