#include "edgebal/report_json.h"

#include "edgebal/atlas.h"

namespace edgebal {

Json to_json(const TValues& values) {
  if (values.all) return "all";
  Json arr = Json::array();
  for (int t : values.values) arr.push_back(t);
  return arr;
}

Json to_json(const std::optional<NicelyBalanced>& nb, const char* gamma_key) {
  if (!nb) return nullptr;
  Json j;
  j["t"] = nb->t;
  j[gamma_key] = nb->gamma;
  return j;
}

Json to_json(const EdgeBalanceCounts& c) {
  Json j;
  j["edge"] = {c.edge.alpha, c.edge.beta};
  j["n_alpha"] = c.vertex.n_alpha;
  j["n_beta"] = c.vertex.n_beta;
  j["n_zero"] = c.vertex.n_zero;
  j["m_alpha"] = c.edges.m_alpha;
  j["m_beta"] = c.edges.m_beta;
  j["m_zero"] = c.edges.m_zero;
  return j;
}

Json to_json(const EdgePartition& partition) {
  Json j;
  j["edge"] = {partition.base().alpha, partition.base().beta};
  Json cells = Json::array();
  for (const auto& [key, edges] : partition.cells()) {
    Json cell;
    cell["to_alpha"] = key.first;
    cell["to_beta"] = key.second;
    cell["size"] = edges.size();
    Json list = Json::array();
    for (const Edge& e : edges) list.push_back({e.u, e.v});
    cell["edges"] = std::move(list);
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  return j;
}

Json to_json(const ClassificationReport& r, bool with_edges) {
  Json j;
  j["convention"] = to_string(r.convention);
  j["n"] = r.vertex_count;
  j["m"] = r.edge_count;
  j["diameter"] = r.diameter;
  j["bipartite"] = r.bipartite;
  j["db"] = r.db;
  j["edb"] = r.edb;
  j["gt_db_values"] = to_json(r.gt_db_values);
  j["gt_edb_values"] = to_json(r.gt_edb_values);
  j["gt_nedb"] = to_json(r.gt_nedb, "gamma_prime");
  j["gt_ndb"] = to_json(r.gt_ndb, "gamma");
  j["gt_sedb_values"] = to_json(r.gt_sedb_values);
  if (with_edges) {
    Json edges = Json::array();
    for (const auto& c : r.per_edge_counts) edges.push_back(to_json(c));
    j["per_edge_counts"] = std::move(edges);
  }
  return j;
}

Json catalog_json(const CatalogEntry& e) {
  Json j;
  j["graph6"] = e.graph6;
  j["n"] = e.vertex_count;
  j["m"] = e.edge_count;
  j["diameter"] = e.report.diameter;
  j["bipartite"] = e.report.bipartite;
  j["gt_edb_values"] = to_json(e.report.gt_edb_values);
  j["gt_db_values"] = to_json(e.report.gt_db_values);
  j["gt_nedb"] = to_json(e.report.gt_nedb, "gamma_prime");
  j["gt_sedb_values"] = to_json(e.report.gt_sedb_values);
  j["convention"] = to_string(e.report.convention);
  return j;
}

}  // namespace edgebal
