#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "poincare/json_io.hpp"
#include "poincare/map_model.hpp"
#include "poincare/space_model.hpp"

namespace poincare {

// Catalog reference grammar, chosen for scriptability:
//   spaces: point | sphere:N | cp:N | kq:N | wedge:N1,N2,... | product:<ref>*<ref>
//   maps:   constant:<space> | identity:<space> | degree:N:D |
//           counterexample:referee | wedge-inclusion:N | product:<ref>*<ref>
// A reference containing ".json" is loaded from disk instead.

namespace detail {

inline bool looks_like_file(const std::string& ref) {
  return ref.find(".json") != std::string::npos || ref.find('/') != std::string::npos;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModel("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidModel("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

inline int parse_int(const std::string& text, const std::string& ref) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InvalidModel("bad number '" + text + "' in reference '" + ref + "'");
  }
  if (used != text.size()) throw InvalidModel("bad number '" + text + "' in reference '" + ref + "'");
  if (value < -1000000 || value > 1000000) throw InvalidModel("number out of range in '" + ref + "'");
  return static_cast<int>(value);
}

/// Splits "product:<a>*<b>" at the first '*'; nesting associates rightward.
inline std::pair<std::string, std::string> split_product(const std::string& body,
                                                         const std::string& ref) {
  const auto star = body.find('*');
  if (star == std::string::npos || star == 0 || star + 1 >= body.size()) {
    throw InvalidModel("product reference needs '<ref>*<ref>' in '" + ref + "'");
  }
  return {body.substr(0, star), body.substr(star + 1)};
}

}  // namespace detail

inline SpaceModel resolve_space_ref(const std::string& ref, int truncation = kDefaultTruncation) {
  if (detail::looks_like_file(ref)) return space_from_json(detail::load_json_file(ref));
  if (ref == "point" || ref == "pt") return point();

  const auto colon = ref.find(':');
  const std::string head = ref.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : ref.substr(colon + 1);
  if (head == "sphere") return sphere(detail::parse_int(body, ref));
  if (head == "cp") return complex_projective(detail::parse_int(body, ref));
  if (head == "kq") return eilenberg_maclane_q(detail::parse_int(body, ref), truncation);
  if (head == "wedge") {
    std::vector<int> degrees;
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto comma = body.find(',', start);
      const std::string item =
          comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start);
      degrees.push_back(detail::parse_int(item, ref));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return wedge_of_spheres(degrees, truncation);
  }
  if (head == "product") {
    auto [left, right] = detail::split_product(body, ref);
    return product(resolve_space_ref(left, truncation), resolve_space_ref(right, truncation));
  }
  throw InvalidModel("unknown space reference '" + ref + "'");
}

inline MapModel resolve_map_ref(const std::string& ref, int truncation = kDefaultTruncation) {
  if (detail::looks_like_file(ref)) {
    return map_from_json(detail::load_json_file(ref),
                         [&](const std::string& r) { return resolve_space_ref(r, truncation); });
  }
  const auto colon = ref.find(':');
  const std::string head = ref.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : ref.substr(colon + 1);
  if (head == "constant") return constant_map(resolve_space_ref(body, truncation), point());
  if (head == "identity") return identity_map(resolve_space_ref(body, truncation));
  if (head == "degree") {
    const auto second = body.find(':');
    if (second == std::string::npos) throw InvalidModel("degree reference needs 'degree:N:D'");
    return sphere_self_map(detail::parse_int(body.substr(0, second), ref),
                           detail::parse_int(body.substr(second + 1), ref));
  }
  if (head == "counterexample") {
    if (body == "referee") return referee_counterexample(truncation);
    throw InvalidModel("unknown counterexample '" + body + "'");
  }
  if (head == "wedge-inclusion") return wedge_inclusion(detail::parse_int(body, ref), truncation);
  if (head == "generator") return eilenberg_generator(detail::parse_int(body, ref), truncation);
  if (head == "product") {
    auto [left, right] = detail::split_product(body, ref);
    return product_map(resolve_map_ref(left, truncation), resolve_map_ref(right, truncation),
                       Exactness::AllowTruncated);
  }
  throw InvalidModel("unknown map reference '" + ref + "'");
}

}  // namespace poincare
