#include "isobound/catalog.hpp"

#include <charconv>
#include <functional>

#include "isobound/error.hpp"
#include "isobound/graph_io.hpp"

namespace isobound {

namespace {

struct Builder {
  CatalogEntry entry;
  std::function<Graph()> build;
};

const std::vector<Builder> &builders() {
  static const std::vector<Builder> list = {
      {{"k2", "complete graph on 2 vertices"}, [] { return make_complete(2); }},
      {{"k5", "complete graph on 5 vertices"}, [] { return make_complete(5); }},
      {{"p4", "path on 4 vertices"}, [] { return make_path(4); }},
      {{"c5", "5-cycle"}, [] { return make_cycle(5); }},
      {{"c6", "6-cycle"}, [] { return make_cycle(6); }},
      {{"c7", "7-cycle"}, [] { return make_cycle(7); }},
      {{"empty5", "5 isolated vertices"}, [] { return make_empty(5); }},
      {{"petersen", "Petersen graph, Kneser(5,2)"},
       [] { return make_kneser(5, 2).relabeled("petersen"); }},
      {{"kneser6-2", "Kneser(6,2), 15 vertices"}, [] { return make_kneser(6, 2); }},
      {{"clebsch", "Clebsch graph, folded 5-cube"},
       [] { return make_folded_cube(5).relabeled("clebsch"); }},
      {{"co-clebsch", "complement of the Clebsch graph"},
       [] { return complement(make_folded_cube(5)).relabeled("co-clebsch"); }},
      {{"paley13", "Paley graph on Z_13"}, [] { return make_paley(13); }},
      {{"paley17", "Paley graph on Z_17"}, [] { return make_paley(17); }},
      {{"rook3", "K3 x K3 rook's graph"},
       [] { return cartesian_product(make_complete(3), make_complete(3)).relabeled("rook3"); }},
      {{"line-rook3", "line graph of K3 x K3, 18 vertices"},
       [] {
         return line_graph(cartesian_product(make_complete(3), make_complete(3)))
             .relabeled("line-rook3");
       }},
      {{"folded7", "folded 7-cube, 64 vertices"},
       [] { return make_folded_cube(7).relabeled("folded7"); }},
      {{"co-folded7", "complement of the folded 7-cube, 64 vertices"},
       [] { return complement(make_folded_cube(7)).relabeled("co-folded7"); }},
  };
  return list;
}

int parse_int(const std::string &id, const std::string &field) {
  int value = 0;
  const auto *end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw InvalidInput("bad integer '" + field + "' in graph id '" + id + "'");
  return value;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos)
      break;
    start = pos + 1;
  }
  return out;
}

} // namespace

const std::vector<CatalogEntry> &catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto &b : builders())
      out.push_back(b.entry);
    return out;
  }();
  return entries;
}

Graph catalog_graph(const std::string &id) {
  for (const auto &b : builders())
    if (b.entry.id == id) {
      Graph g = b.build();
      return g.relabeled(id);
    }

  const auto parts = split(id, ':');
  if (parts.size() >= 2) {
    const auto &kind = parts[0];
    auto arg = [&](std::size_t i) { return parse_int(id, parts.at(i)); };
    if (kind == "cycle" && parts.size() == 2)
      return make_cycle(arg(1)).relabeled(id);
    if (kind == "path" && parts.size() == 2)
      return make_path(arg(1)).relabeled(id);
    if (kind == "complete" && parts.size() == 2)
      return make_complete(arg(1)).relabeled(id);
    if (kind == "empty" && parts.size() == 2)
      return make_empty(arg(1)).relabeled(id);
    if (kind == "kneser" && parts.size() == 3)
      return make_kneser(arg(1), arg(2)).relabeled(id);
    if (kind == "paley" && parts.size() == 2)
      return make_paley(arg(1)).relabeled(id);
    if (kind == "folded-cube" && parts.size() == 2)
      return make_folded_cube(arg(1)).relabeled(id);
  }
  if (id.rfind("co-", 0) == 0 && id.size() > 3)
    return complement(catalog_graph(id.substr(3))).relabeled(id);

  throw InvalidInput("unknown graph id '" + id + "'");
}

std::vector<Graph> catalog_graphs() {
  std::vector<Graph> out;
  for (const auto &e : catalog_entries())
    out.push_back(catalog_graph(e.id));
  return out;
}

Graph resolve_graph(const std::string &arg) {
  if (!arg.empty() && arg[0] == '@')
    return read_graph_file(arg.substr(1));
  return catalog_graph(arg);
}

} // namespace isobound
