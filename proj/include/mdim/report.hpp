#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mdim/bounds.hpp"
#include "mdim/graph.hpp"
#include "mdim/solver.hpp"

namespace mdim {

/// {cycles, cyclomatic, L, ell, threads, per_cycle: [{b, branch_active}], domains}
/// plus is_cactus and class. per_cycle and domains are empty unless g is a
/// cactus with at least one cycle.
nlohmann::json structure_report(const Graph& g);

/// {dim, dim_witness, edim, edim_witness, n, m}
nlohmann::json solve_report(const Graph& g, const DimensionResult& dim,
                            const DimensionResult& edim);

nlohmann::json to_json(const GeneratorReport& r);
nlohmann::json to_json(const BoundsCertificate& cert);
nlohmann::json to_json(const ScanReport& report);

/// Header: trial,n,m,c,L,b_list,lower,upper,dim,edim,diff,violation.
/// b_list is ';'-separated; lower/upper are empty without a cycle bound.
void write_scan_csv(std::ostream& out, const ScanReport& report);
std::string scan_csv_header();
std::string scan_csv_row(const ScanRow& row);

}  // namespace mdim
