#ifndef QGSPEC_SERIALIZE_HPP
#define QGSPEC_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "qgspec/boundary.hpp"
#include "qgspec/graph.hpp"
#include "qgspec/matrices.hpp"
#include "qgspec/recover.hpp"
#include "qgspec/spectrum.hpp"

namespace qg {

// Doubles are normalized to 15 significant digits before they enter a JSON
// document, so CLI output is byte-stable.
nlohmann::json json_number(double v);

nlohmann::json to_json(const Graph& g);                 // {n, edges}
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RealSpectrum& spec);       // [{value, multiplicity}]
nlohmann::json to_json(const SpectrumWindow& window);   // {condition, lambda_max, entries}
SpectrumWindow spectrum_window_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SecularScan& scan);        // {roots, regime_guaranteed}
nlohmann::json to_json(const RecoveredInvariants& r);
nlohmann::json to_json(const CkKcComparison& report);
nlohmann::json to_json(const ContractionReport& report);
nlohmann::json to_json(const NonRecoverabilityReport& report);
nlohmann::json to_json(const Eigen::MatrixXd& m);       // row-major nested arrays

// Subspace spanning vectors: a JSON list of vectors, each a list of [re, im]
// pairs of length 2m.
Eigen::MatrixXcd spanning_vectors_from_json(const nlohmann::json& j);

std::string to_csv(const Eigen::MatrixXd& m);
std::string to_csv(const SpectrumWindow& window);       // lambda,multiplicity,class
std::string to_csv(const RealSpectrum& spec);           // value,multiplicity
// Plot-data columns: lambda, cos_sqrt_lambda, condition, multiplicity.
std::string plot_data_csv(const SpectrumWindow& window);

std::string format_double(double v); // %.15g

// Reads a graph from a stream holding either JSON ({...}) or edge-list text.
Graph read_graph_auto(std::istream& in);

} // namespace qg

#endif
