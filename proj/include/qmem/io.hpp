#pragma once

// JSON and CSV forms of tables, families, state families and bound reports.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmem/bounds.hpp"
#include "qmem/functions.hpp"
#include "qmem/quantum.hpp"

namespace qmem {

using json = nlohmann::ordered_json;

// FunctionTable: a JSON array of integers; the range is carried separately
// where it is not implied.

inline json table_to_json(const FunctionTable& t) {
  return json(std::vector<std::uint32_t>(t.values().begin(), t.values().end()));
}

inline FunctionTable table_from_json(const json& j, std::size_t range_size) {
  detail::require(j.is_array(), "function table JSON must be an array of integers");
  return FunctionTable(range_size, j.get<std::vector<std::uint32_t>>());
}

// FunctionFamily: {"kind", "params", "seed"}.

inline json family_params_to_json(const FunctionFamily& f) {
  json p = json::object();
  switch (f.kind()) {
    case FamilyKind::explicit_list: {
      const auto& e = f.params<family_params::Explicit>();
      p["range"] = f.range_size();
      json tables = json::array();
      for (const auto& t : e.tables) tables.push_back(table_to_json(t));
      p["tables"] = std::move(tables);
      p["weights"] = e.weights;
      break;
    }
    case FamilyKind::uniform_all:
      p["domain"] = f.domain_size();
      p["range"] = f.range_size();
      break;
    case FamilyKind::uniform_balanced: p["domain"] = f.domain_size(); break;
    case FamilyKind::affine_gf2: {
      const auto& a = f.params<family_params::Affine>();
      p["in_bits"] = a.in_bits;
      p["out_bits"] = a.out_bits;
      break;
    }
    case FamilyKind::inner_product: p["bits"] = f.params<family_params::InnerProduct>().bits; break;
    case FamilyKind::composed: {
      const auto& c = f.params<family_params::Composed>();
      p["outer"] = {{"kind", c.outer->name()}, {"params", family_params_to_json(*c.outer)}};
      p["inner"] = {{"kind", c.inner->name()}, {"params", family_params_to_json(*c.inner)}};
      break;
    }
  }
  return p;
}

inline json family_to_json(const FunctionFamily& f, std::uint64_t seed) {
  return {{"kind", f.name()}, {"params", family_params_to_json(f)}, {"seed", seed}};
}

inline FunctionFamily family_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("kind"), "family JSON needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  const json p = j.value("params", json::object());
  try {
    if (kind == "explicit") {
      const auto range = p.at("range").get<std::size_t>();
      std::vector<FunctionTable> tables;
      for (const auto& t : p.at("tables")) tables.push_back(table_from_json(t, range));
      if (p.contains("weights")) return FunctionFamily::explicit_list(std::move(tables), p.at("weights").get<std::vector<double>>());
      return FunctionFamily::uniform_over(std::move(tables));
    }
    if (kind == "uniform-all") return FunctionFamily::uniform_all(p.at("domain").get<std::size_t>(), p.at("range").get<std::size_t>());
    if (kind == "uniform-balanced") return FunctionFamily::uniform_balanced(p.at("domain").get<std::size_t>());
    if (kind == "affine-gf2") return FunctionFamily::affine_gf2(p.at("in_bits").get<unsigned>(), p.at("out_bits").get<unsigned>());
    if (kind == "inner-product") return FunctionFamily::inner_product(p.at("bits").get<unsigned>());
    if (kind == "composed") return FunctionFamily::composed(family_from_json(p.at("outer")), family_from_json(p.at("inner")));
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("malformed family JSON: ") + e.what());
  }
  throw validation_error("unknown family kind '" + kind + "'");
}

inline std::uint64_t family_seed_from_json(const json& j) { return j.value("seed", std::uint64_t{0}); }

// StateFamily: {"dim", "prior", "states"} with states as nested [re, im].

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j, std::size_t dim) {
  detail::require(j.is_array() && j.size() == dim, "matrix JSON: wrong number of rows");
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    detail::require(j[i].is_array() && j[i].size() == dim, "matrix JSON: wrong number of columns");
    for (std::size_t k = 0; k < dim; ++k) {
      const json& z = j[i][k];
      if (z.is_number()) m(i, k) = z.get<double>();
      else {
        detail::require(z.is_array() && z.size() == 2, "matrix JSON: entries must be [re, im]");
        m(i, k) = cplx(z[0].get<double>(), z[1].get<double>());
      }
    }
  }
  return m;
}

inline json state_family_to_json(const StateFamily& sf) {
  json states = json::array();
  for (const auto& rho : sf.states()) states.push_back(matrix_to_json(rho.matrix()));
  return {{"dim", sf.dim()},
          {"prior", std::vector<double>(sf.prior().probs().begin(), sf.prior().probs().end())},
          {"states", std::move(states)}};
}

inline StateFamily state_family_from_json(const json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<DensityMatrix> states;
    for (const auto& s : j.at("states")) states.emplace_back(matrix_from_json(s, dim));
    return StateFamily(Distribution(j.at("prior").get<std::vector<double>>()), std::move(states));
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("malformed state family JSON: ") + e.what());
  }
}

// BoundReport

inline json report_to_json(const BoundReport& r) {
  json j;
  j["label"] = r.label;
  j["bound"] = r.bound_value;
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  j["std_error"] = r.std_error;
  if (r.lower_estimate) j["lower_estimate"] = *r.lower_estimate;
  j["relation"] = relation_name(r.relation);
  j["tolerance"] = r.tolerance;
  j["satisfied"] = r.satisfied;
  j["vacuous"] = r.vacuous;
  j["context"] = r.context;
  return j;
}

// CSV: one row per report, fixed column order.

inline constexpr const char* kCsvHeader = "label,n,s,k,d,family,bound,exact,std_error,satisfied,vacuous";

inline std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_context(const json& ctx, const char* key) {
  if (!ctx.contains(key)) return "";
  const json& v = ctx.at(key);
  if (v.is_string()) return csv_field(v.get<std::string>());
  if (v.is_number_float()) return csv_number(v.get<double>());
  return v.dump();
}

inline std::string report_to_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << csv_field(r.label) << ',' << csv_context(r.context, "n") << ',' << csv_context(r.context, "s") << ','
     << csv_context(r.context, "k") << ',' << csv_context(r.context, "d") << ','
     << csv_context(r.context, "family") << ',' << csv_number(r.bound_value) << ','
     << (r.exact ? csv_number(*r.exact) : std::string()) << ',' << csv_number(r.std_error) << ','
     << (r.satisfied ? "true" : "false") << ',' << (r.vacuous ? "true" : "false");
  return os.str();
}

inline std::string reports_to_csv(const std::vector<BoundReport>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) out += report_to_csv_row(r) + "\n";
  return out;
}

}  // namespace qmem
