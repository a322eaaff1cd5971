#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "poincare/map_model.hpp"
#include "poincare/space_model.hpp"

namespace poincare {

using Json = nlohmann::json;

namespace detail {

inline Json dims_to_json(const GradedDims& dims) {
  Json out = Json::object();
  for (auto& [degree, rank] : dims.entries()) out[std::to_string(degree)] = rank;
  return out;
}

inline Json support_to_json(const Support& s) {
  return Json{{s.finite() ? "finiteUpTo" : "truncatedAt", s.bound}};
}

inline int parse_degree_key(const std::string& key) {
  std::size_t used = 0;
  int degree = 0;
  try {
    degree = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw InvalidModel("bad degree key '" + key + "'");
  }
  if (used != key.size() || degree < 0) throw InvalidModel("bad degree key '" + key + "'");
  return degree;
}

inline GradedDims dims_from_json(const Json& ranks, const Json& support) {
  if (!ranks.is_object() || !support.is_object() || support.size() != 1) {
    throw InvalidModel("ranks must be an object and support a one-key object");
  }
  Support s;
  if (support.contains("finiteUpTo")) {
    s = Support::finite_up_to(support["finiteUpTo"].get<int>());
  } else if (support.contains("truncatedAt")) {
    s = Support::truncated_at(support["truncatedAt"].get<int>());
  } else {
    throw InvalidModel("support must declare finiteUpTo or truncatedAt");
  }
  std::map<int, GradedDims::Dim> dims;
  for (auto& [key, value] : ranks.items()) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
      throw InvalidModel("ranks must be nonnegative integers");
    }
    dims[parse_degree_key(key)] = value.get<long long>();
  }
  return GradedDims(s, std::move(dims));
}

inline Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidModel("matrix must be an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw InvalidModel("matrix rows must be arrays");
    cols = static_cast<Eigen::Index>(j[0].size());
  }
  RationalMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw InvalidModel("ragged matrix rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      if (!j[i][k].is_string()) throw InvalidModel("matrix entries must be rational strings");
      m(i, k) = parse_rational(j[i][k].get<std::string>());
    }
  }
  return m;
}

inline Json blocks_to_json(const GradedLinearMap& f) {
  Json out = Json::object();
  for (auto& [degree, block] : f.blocks()) {
    if (degree == 0 || is_zero_matrix(block)) continue;  // canonical: forced/zero blocks implicit
    out[std::to_string(degree)] = matrix_to_json(block);
  }
  return out;
}

inline void blocks_from_json(const Json& j, GradedLinearMap& f) {
  if (j.is_null()) return;
  if (!j.is_object()) throw InvalidModel("blocks must be an object keyed by degree");
  for (auto& [key, value] : j.items()) {
    const int degree = parse_degree_key(key);
    RationalMatrix m = matrix_from_json(value);
    if (degree == 0) {
      if (m.rows() != 1 || m.cols() != 1 || m(0, 0) == 0) {
        throw InvalidModel("H_0 block must be a 1x1 isomorphism");
      }
    }
    f.add_block(degree, std::move(m));
  }
}

}  // namespace detail

inline Json space_to_json(const SpaceModel& x) {
  Json out = Json::object();
  out["name"] = x.name;
  out["homology"] = detail::dims_to_json(x.homology);
  out["homologySupport"] = detail::support_to_json(x.homology.support());
  out["homotopy"] = detail::dims_to_json(x.homotopy);
  out["homotopySupport"] = detail::support_to_json(x.homotopy.support());
  if (x.homology_total == Finiteness::Infinite) out["homologyInfinite"] = true;
  if (x.homotopy_total == Finiteness::Infinite) out["homotopyInfinite"] = true;
  if (!x.notes.empty()) out["notes"] = x.notes;
  return out;
}

inline SpaceModel space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("name")) throw InvalidModel("space JSON needs a name");
  GradedDims homology =
      detail::dims_from_json(j.value("homology", Json::object()), j.at("homologySupport"));
  GradedDims homotopy =
      detail::dims_from_json(j.value("homotopy", Json::object()), j.at("homotopySupport"));
  auto totals = [](const GradedDims& dims, bool declared_infinite) {
    if (declared_infinite) {
      if (dims.support().finite()) throw InvalidModel("FiniteUpTo support declared infinite");
      return Finiteness::Infinite;
    }
    return dims.support().finite() ? Finiteness::Finite : Finiteness::Unknown;
  };
  const Finiteness h_total = totals(homology, j.value("homologyInfinite", false));
  const Finiteness pi_total = totals(homotopy, j.value("homotopyInfinite", false));
  return make_space(j.at("name").get<std::string>(), std::move(homology), std::move(homotopy),
                    h_total, pi_total, j.value("notes", std::string{}));
}

/// Resolves "source"/"target" entries given as catalog reference strings.
using SpaceRefResolver = std::function<SpaceModel(const std::string&)>;

inline Json map_to_json(const MapModel& f) {
  Json out = Json::object();
  out["name"] = f.name;
  out["source"] = space_to_json(f.source);
  out["target"] = space_to_json(f.target);
  out["H"] = detail::blocks_to_json(f.hmap);
  out["pi"] = detail::blocks_to_json(f.pimap);
  return out;
}

inline MapModel map_from_json(const Json& j, const SpaceRefResolver& resolver) {
  if (!j.is_object() || !j.contains("name")) throw InvalidModel("map JSON needs a name");
  auto load_space = [&](const Json& side, const char* which) {
    if (side.is_string()) {
      if (!resolver) throw InvalidModel(std::string(which) + " is a reference but no resolver given");
      return resolver(side.get<std::string>());
    }
    if (side.is_object()) return space_from_json(side);
    throw InvalidModel(std::string(which) + " must be a space object or a catalog reference");
  };
  SpaceModel source = load_space(j.at("source"), "source");
  SpaceModel target = load_space(j.at("target"), "target");
  GradedLinearMap hmap(source.homology, target.homology);
  GradedLinearMap pimap(source.homotopy, target.homotopy);
  detail::blocks_from_json(j.value("H", Json()), hmap);
  detail::blocks_from_json(j.value("pi", Json()), pimap);
  return make_map(j.at("name").get<std::string>(), std::move(source), std::move(target),
                  std::move(hmap), std::move(pimap));
}

/// Canonical serialization: alphabetical keys, two-space indent, rationals in
/// lowest terms, zero blocks omitted. Byte-stable under reload.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace poincare
