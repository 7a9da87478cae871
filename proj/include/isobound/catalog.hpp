#pragma once

#include <string>
#include <vector>

#include "isobound/graph.hpp"

namespace isobound {

struct CatalogEntry {
  std::string id;
  std::string description;
};

/// Fixed named graphs, in display order.
const std::vector<CatalogEntry> &catalog_entries();

/// Builds a named graph. Besides the fixed ids this accepts parametric ids
/// (cycle:N, path:N, complete:N, empty:N, kneser:N:K, paley:Q, folded-cube:D)
/// and a "co-" prefix for complements. Throws InvalidInput on unknown ids.
Graph catalog_graph(const std::string &id);

/// Every fixed catalog graph, built.
std::vector<Graph> catalog_graphs();

/// Graph argument as used by the CLI: "@path" reads a file, anything else is a
/// catalog id.
Graph resolve_graph(const std::string &arg);

} // namespace isobound
