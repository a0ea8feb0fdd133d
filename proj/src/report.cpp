#include "mdim/report.hpp"

#include <ostream>
#include <sstream>

#include "mdim/structure.hpp"

namespace mdim {

using nlohmann::json;

json structure_report(const Graph& g) {
  const CycleSet cs = find_cycles(g);
  const ThreadDecomposition td = decompose_threads(g);
  const GraphClass cls = classify(g, cs);

  json threads = json::array();
  for (const Thread& t : td.threads) threads.push_back({{"anchor", t.anchor}, {"path", t.path}});
  json ell = json::object();
  for (Vertex v = 0; v < td.ell.size(); ++v) {
    if (td.ell[v] > 0) ell[std::to_string(v)] = td.ell[v];
  }

  json per_cycle = json::array();
  json doms = json::array();
  if (cs.is_cactus && cs.count() > 0) {
    for (std::size_t i = 0; i < cs.count(); ++i) {
      CycleActivity ca = cycle_activity(g, cs, i);
      per_cycle.push_back({{"b", ca.b}, {"branch_active", ca.branch_active}});
    }
    for (const Domain& d : domains(g, cs)) {
      json connectors = json::array();
      for (const Connector& c : d.connectors) {
        connectors.push_back({{"from", c.from_cycle}, {"to", c.to_cycle}, {"path", c.path}});
      }
      doms.push_back({{"cycle", d.cycle},
                      {"vertices", d.vertices},
                      {"boundary_vertices", d.boundary_vertices},
                      {"connectors", connectors}});
    }
  }

  return json{{"n", g.order()},
              {"m", g.size()},
              {"class", to_string(cls)},
              {"is_cactus", cs.is_cactus},
              {"cycles", cs.cycles},
              {"cyclomatic", cs.cyclomatic_number},
              {"L", td.L},
              {"ell", ell},
              {"threads", threads},
              {"branching_vertices", td.branching_vertices},
              {"per_cycle", per_cycle},
              {"domains", doms}};
}

json solve_report(const Graph& g, const DimensionResult& dim, const DimensionResult& edim) {
  return json{{"dim", dim.dimension},   {"dim_witness", dim.witness},
              {"edim", edim.dimension}, {"edim_witness", edim.witness},
              {"n", g.order()},         {"m", g.size()}};
}

json to_json(const GeneratorReport& r) {
  return json{{"S", r.S},
              {"cardinality", r.cardinality},
              {"is_vertex_generator", r.is_vertex_generator},
              {"is_edge_generator", r.is_edge_generator}};
}

json to_json(const BoundsCertificate& cert) {
  json claims = json::array();
  for (const ClaimVerdict& v : cert.claims) {
    claims.push_back({{"claim", v.claim},
                      {"proven", v.proven},
                      {"status", to_string(v.status)},
                      {"detail", v.detail}});
  }
  json j{{"class", to_string(cert.graph_class)},
         {"n", cert.n},
         {"m", cert.m},
         {"cyclomatic", cert.cyclomatic},
         {"L", cert.L},
         {"per_cycle_b", cert.per_cycle_b},
         {"lower", nullptr},
         {"upper", nullptr},
         {"dim", cert.dim},
         {"dim_witness", cert.dim_witness},
         {"edim", cert.edim},
         {"edim_witness", cert.edim_witness},
         {"constructed", nullptr},
         {"claims", claims},
         {"ok", cert.all_ok()}};
  if (cert.bounds) {
    j["lower"] = cert.bounds->lower;
    j["upper"] = cert.bounds->upper;
  }
  if (cert.constructed) j["constructed"] = to_json(*cert.constructed);
  return j;
}

json to_json(const ScanReport& report) {
  json rows = json::array();
  for (const ScanRow& r : report.rows) {
    json row{{"trial", r.trial}, {"n", r.n},           {"m", r.m},
             {"c", r.c},         {"L", r.L},           {"b_list", r.b_list},
             {"lower", nullptr}, {"upper", nullptr},   {"dim", r.dim},
             {"edim", r.edim},   {"diff", r.diff},     {"violation", r.violation}};
    if (r.bounds) {
      row["lower"] = r.bounds->lower;
      row["upper"] = r.bounds->upper;
    }
    if (r.violation) row["graph"] = r.graph;
    rows.push_back(std::move(row));
  }
  return json{{"rows", rows},
              {"trials", report.rows.size() + report.skipped},
              {"skipped", report.skipped},
              {"violations", report.violations}};
}

std::string scan_csv_header() {
  return "trial,n,m,c,L,b_list,lower,upper,dim,edim,diff,violation";
}

std::string scan_csv_row(const ScanRow& r) {
  std::ostringstream os;
  os << r.trial << ',' << r.n << ',' << r.m << ',' << r.c << ',' << r.L << ',';
  for (std::size_t k = 0; k < r.b_list.size(); ++k) os << (k ? ";" : "") << r.b_list[k];
  os << ',';
  if (r.bounds) os << r.bounds->lower;
  os << ',';
  if (r.bounds) os << r.bounds->upper;
  os << ',' << r.dim << ',' << r.edim << ',' << r.diff << ',' << (r.violation ? 1 : 0);
  return os.str();
}

void write_scan_csv(std::ostream& out, const ScanReport& report) {
  out << scan_csv_header() << '\n';
  for (const ScanRow& r : report.rows) out << scan_csv_row(r) << '\n';
}

}  // namespace mdim
