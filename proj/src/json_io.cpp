#include "ils/json_io.hpp"

#include <string>
#include <utility>

namespace ils {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const std::string& name) {
  if (!j.is_object()) throw JsonError("input: expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw JsonError("field \"" + name + "\": missing");
  return *it;
}

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw JsonError("field \"" + where + "\": expected an integer");
  return j.get<int>();
}

Parts parts_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw JsonError("field \"" + where + "\": expected a nonempty array of positive integers");
  Parts parts;
  parts.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    int v = require_int(j[i], where + "[" + std::to_string(i) + "]");
    if (v <= 0)
      throw JsonError("field \"" + where + "[" + std::to_string(i) + "]\": must be positive");
    parts.push_back(v);
  }
  return parts;
}

json sets_to_json(const std::vector<int>& s) { return json(s); }

}  // namespace

json square_to_json(const Grid& grid) {
  json j;
  j["order"] = static_cast<int>(grid.size());
  j["grid"] = grid;
  return j;
}

Grid square_from_json(const json& j) {
  const json& jg = require_field(j, "grid");
  if (!jg.is_array() || jg.empty())
    throw JsonError("field \"grid\": expected a nonempty array of rows");
  const int n = static_cast<int>(jg.size());
  Grid grid(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const json& row = jg[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw JsonError("field \"grid\": row " + std::to_string(i) + ": expected " +
                      std::to_string(n) + " entries");
    grid[static_cast<size_t>(i)].resize(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
      const std::string where =
          "grid[" + std::to_string(i) + "][" + std::to_string(c) + "]";
      int v = require_int(row[static_cast<size_t>(c)], where);
      if (v < 0 || v > n)
        throw JsonError("field \"" + where + "\": out of range 0.." + std::to_string(n));
      grid[static_cast<size_t>(i)][static_cast<size_t>(c)] = v;
    }
  }
  int order = require_int(require_field(j, "order"), "order");
  if (order != n)
    throw JsonError("field \"order\": value " + std::to_string(order) +
                    " does not match grid size " + std::to_string(n));
  return grid;
}

json outline_to_json(const Outline& o) {
  json counts = json::array();
  for (int i = 0; i < o.u(); ++i) {
    json plane = json::array();
    for (int jj = 0; jj < o.v(); ++jj) {
      json cell = json::array();
      for (int l = 0; l < o.t(); ++l) cell.push_back(o.at(i, jj, l));
      plane.push_back(std::move(cell));
    }
    counts.push_back(std::move(plane));
  }
  json j;
  j["p"] = o.P;
  j["q"] = o.Q;
  j["r"] = o.R;
  j["counts"] = std::move(counts);
  return j;
}

Outline outline_from_json(const json& j) {
  Outline o(parts_from_json(require_field(j, "p"), "p"),
            parts_from_json(require_field(j, "q"), "q"),
            parts_from_json(require_field(j, "r"), "r"));
  const json& jc = require_field(j, "counts");
  if (!jc.is_array() || static_cast<int>(jc.size()) != o.u())
    throw JsonError("field \"counts\": expected " + std::to_string(o.u()) +
                    " row-group planes");
  for (int i = 0; i < o.u(); ++i) {
    const json& plane = jc[static_cast<size_t>(i)];
    if (!plane.is_array() || static_cast<int>(plane.size()) != o.v())
      throw JsonError("field \"counts[" + std::to_string(i) + "]\": expected " +
                      std::to_string(o.v()) + " cells");
    for (int jj = 0; jj < o.v(); ++jj) {
      const json& cell = plane[static_cast<size_t>(jj)];
      if (!cell.is_array() || static_cast<int>(cell.size()) != o.t())
        throw JsonError("field \"counts[" + std::to_string(i) + "][" + std::to_string(jj) +
                        "]\": expected " + std::to_string(o.t()) + " symbol-group counts");
      for (int l = 0; l < o.t(); ++l) {
        const std::string where = "counts[" + std::to_string(i) + "][" + std::to_string(jj) +
                                  "][" + std::to_string(l) + "]";
        int v = require_int(cell[static_cast<size_t>(l)], where);
        if (v < 0) throw JsonError("field \"" + where + "\": must be nonnegative");
        o.at(i, jj, l) = v;
      }
    }
  }
  return o;
}

json violation_to_json(const Violation& v) {
  json j;
  j["A"] = sets_to_json(v.A);
  j["B"] = sets_to_json(v.B);
  j["C"] = sets_to_json(v.C);
  j["D"] = sets_to_json(v.D);
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  return j;
}

json verdict_to_json(const ExistenceVerdict& v, const Parts& parts, int n) {
  json j;
  j["order"] = n;
  j["parts"] = parts;
  switch (v.status) {
    case ExistenceVerdict::Status::Exists:
      j["status"] = "exists";
      break;
    case ExistenceVerdict::Status::NotExists:
      j["status"] = "not_exists";
      break;
    case ExistenceVerdict::Status::Unknown:
      j["status"] = "unknown";
      break;
  }
  if (v.witness) j["witness"] = square_to_json(*v.witness);
  if (v.violation)
    j["certificate"] = violation_to_json(*v.violation);
  else if (!v.citation.empty())
    j["certificate"] = v.citation;
  return j;
}

json oracle_to_json(const OracleResult& r) {
  json j;
  j["nodes"] = r.nodes;
  switch (r.status) {
    case OracleResult::Status::Exists:
      j["status"] = "exists";
      break;
    case OracleResult::Status::NotExists:
      j["status"] = "not_exists";
      break;
    case OracleResult::Status::Unknown:
      j["status"] = "unknown";
      break;
  }
  if (r.witness) j["witness"] = square_to_json(*r.witness);
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

Parts parse_parts(const std::string& csv, const std::string& flag_name) {
  Parts parts;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                 : comma - pos);
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw JsonError("option \"" + flag_name +
                      "\": expected comma-separated positive integers, got \"" + csv + "\"");
    long long v = 0;
    for (char ch : tok) {
      v = v * 10 + (ch - '0');
      if (v > 1'000'000'000) break;
    }
    if (v <= 0 || v > 1'000'000'000)
      throw JsonError("option \"" + flag_name + "\": part \"" + tok + "\" out of range");
    parts.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (parts.empty())
    throw JsonError("option \"" + flag_name + "\": expected at least one part");
  return parts;
}

}  // namespace ils
