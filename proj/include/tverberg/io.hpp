#pragma once

// JSON formats. All indices in files are 1-based.
//
//   sequence   {"d": 2, "n": 4, "points": [["1","1"], ["2","4"], ...]}
//   partition  {"n": 3, "classes": [[1, 3], [2]]}
//   generator  {"d": 1, "r": 2, "base": "2", "schedule": "chain", "params": {...}}
//   filling    {"d": 1, "r": 2, "ell": 1, "grid": [["z0", 3], [2, "z1"]]}

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tverberg/core_arith.hpp"
#include "tverberg/dominant_filling.hpp"
#include "tverberg/filling.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/sequences.hpp"
#include "tverberg/system.hpp"

namespace tverberg::io {

using json = nlohmann::json;

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InputError("scalar must be a \"p/q\" string or an integer");
}

inline json to_json(const PointSequence& a) {
  json pts = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json p = json::array();
    for (std::size_t t = 0; t < a.dim(); ++t) p.push_back(to_string(a(t, i)));
    pts.push_back(std::move(p));
  }
  return {{"d", a.dim()}, {"n", a.size()}, {"points", std::move(pts)}};
}

inline PointSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points")) throw InputError("sequence JSON needs a \"points\" array");
  const auto& pts = j.at("points");
  if (!pts.is_array() || pts.empty()) throw InputError("\"points\" must be a nonempty array");
  std::vector<std::vector<Scalar>> points;
  for (const auto& p : pts) {
    if (!p.is_array()) throw InputError("each point must be an array of coordinates");
    std::vector<Scalar> coords;
    for (const auto& c : p) coords.push_back(scalar_from_json(c));
    points.push_back(std::move(coords));
  }
  auto seq = PointSequence::from_points(points);
  if (j.contains("d") && j.at("d").get<std::size_t>() != seq.dim()) throw DimensionError("\"d\" disagrees with the points");
  if (j.contains("n") && j.at("n").get<std::size_t>() != seq.size()) throw DimensionError("\"n\" disagrees with the points");
  return seq;
}

inline json to_json(const Partition& p) {
  json classes = json::array();
  for (const auto& c : p.classes()) {
    json cls = json::array();
    for (int i : c) cls.push_back(i + 1);
    classes.push_back(std::move(cls));
  }
  return {{"n", p.n()}, {"classes", std::move(classes)}};
}

inline Partition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("classes")) throw InputError("partition JSON needs \"n\" and \"classes\"");
  const auto n = j.at("n").get<long>();
  if (n <= 0) throw InputError("\"n\" must be positive");
  std::vector<std::vector<int>> classes;
  for (const auto& c : j.at("classes")) {
    if (!c.is_array()) throw InputError("each class must be an array");
    std::vector<int> cls;
    for (const auto& x : c) {
      const auto v = x.get<long>();
      if (v < 1 || v > n) throw InputError("partition element " + std::to_string(v) + " out of range");
      cls.push_back(static_cast<int>(v - 1));
    }
    classes.push_back(std::move(cls));
  }
  return Partition(static_cast<std::size_t>(n), std::move(classes));
}

inline json to_json(const GFilling& g) {
  json grid = json::array();
  for (std::size_t k = 0; k < g.rows(); ++k) {
    json row = json::array();
    for (std::size_t m = 0; m < g.r(); ++m) {
      if (g.is_z(k, m))
        row.push_back("z" + std::to_string(k));
      else
        row.push_back(g.at(k, m) + 1);
    }
    grid.push_back(std::move(row));
  }
  return {{"d", g.d()}, {"r", g.r()}, {"ell", g.ell() + 1}, {"grid", std::move(grid)}};
}

inline GFilling filling_from_json(const json& j) {
  const auto d = j.at("d").get<std::size_t>();
  const auto r = j.at("r").get<std::size_t>();
  GFilling g(d, r, j.at("ell").get<int>() - 1);
  const auto& grid = j.at("grid");
  if (grid.size() != d + 1) throw DimensionError("filling grid must have d+1 rows");
  for (std::size_t k = 0; k <= d; ++k) {
    if (grid[k].size() != r) throw DimensionError("filling grid rows must have r cells");
    for (std::size_t m = 0; m < r; ++m) {
      const auto& c = grid[k][m];
      if (c.is_string()) {
        if (c.get<std::string>() != "z" + std::to_string(k)) throw InputError("z marker must name its row");
        g.at(k, m) = GFilling::kZ;
      } else {
        g.at(k, m) = c.get<int>() - 1;
      }
    }
  }
  return g;
}

inline json to_json(const TverbergVerdict& v) {
  json j{{"proper", v.proper}, {"is_tverberg", v.is_tverberg}, {"hulls_disjoint", v.hulls_disjoint}};
  json a = json::array(), z = json::array();
  for (const auto& x : v.alphas) a.push_back(to_string(x));
  for (const auto& x : v.z) z.push_back(to_string(x));
  j["alphas"] = std::move(a);
  j["z"] = std::move(z);
  if (!v.cramer_signs.empty()) {
    j["cramer_signs"] = v.cramer_signs;
    j["det_sign_M"] = v.det_sign_M;
    j["criteria_agree"] = v.criteria_agree;
  }
  return j;
}

inline json to_json(const DominanceReport& rep) {
  return {{"ell", rep.ell + 1},
          {"monomials", rep.monomials},
          {"dominant", to_json(rep.best.filling)},
          {"dominant_sign", sgn(rep.best.term())},
          {"det_sign", rep.det_sign},
          {"violations", rep.violations},
          {"ok", rep.ok()}};
}

/// Aligned text table of dominance reports.
inline std::string format_reports(const std::vector<DominanceReport>& reps) {
  std::ostringstream os;
  os << " ell  monomials  sign  det  status\n";
  for (const auto& r : reps) {
    os.width(4);
    os << r.ell + 1 << "  ";
    os.width(9);
    os << r.monomials << "  ";
    os.width(4);
    os << sgn(r.best.term()) << "  ";
    os.width(3);
    os << r.det_sign << "  " << (r.ok() ? "ok" : "FAIL");
    for (const auto& v : r.violations) os << "; " << v;
    os << '\n';
  }
  return os.str();
}

/// Parses a file; malformed JSON becomes an InputError.
inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace tverberg::io
