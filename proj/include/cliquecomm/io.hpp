#pragma once

#include <string>

#include <json.hpp>

#include "cliquecomm/classical.hpp"
#include "cliquecomm/graph.hpp"
#include "cliquecomm/prob_table.hpp"
#include "cliquecomm/quantum.hpp"
#include "cliquecomm/relation.hpp"

namespace cliquecomm {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Graph& g);
Json to_json(const CliqueSet& c);
Json to_json(const Relation& r);
Json to_json(const ExactTable& t);
Json to_json(const RealTable& t);
Json to_json(const Strategy& s);
Json to_json(const PublicCoinMixture& m);
Json to_json(const OrthogonalRepresentation& rep);

// Readers throw kInvalidParams on malformed documents (kEmptyGraph for order 0).
Graph graph_from_json(const Json& j);
CliqueSet cliques_from_json(const Graph& g, const Json& j);
Relation relation_from_json(const Json& j);
ExactTable exact_table_from_json(const Json& j);
// Accepts exact ("p/q" strings) and quantum (numbers) tables.
RealTable real_table_from_json(const Json& j);
bool is_exact_table(const Json& j);
Strategy strategy_from_json(const Json& j);
OrthogonalRepresentation representation_from_json(const Json& j);

// CSV: a comment line carrying n, omega and kind, then one line per table row.
std::string table_csv(const ExactTable& t);
std::string table_csv(const RealTable& t);

}  // namespace cliquecomm
