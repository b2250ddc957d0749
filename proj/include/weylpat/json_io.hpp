#pragma once

// JSON serialization of the report types. Rationals are "num/den" strings,
// matrices row-major. Every top-level document carries schema_version 1.

#include "weylpat/anmap.hpp"
#include "weylpat/chamber.hpp"
#include "weylpat/distortion.hpp"
#include "weylpat/embedsearch.hpp"
#include "weylpat/matrix.hpp"
#include "weylpat/pattern.hpp"
#include "weylpat/rational.hpp"
#include "weylpat/rootsystem.hpp"

#include <json.hpp>

#include <string>

namespace weylpat {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

inline json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

inline Vec vec_from_json(const json& a) {
  Vec v;
  for (const auto& x : a) v.push_back(parse_rat(x.get<std::string>()));
  return v;
}

inline json mat_to_json(const Mat& m) {
  json o;
  o["rows"] = m.rows();
  o["cols"] = m.cols();
  json e = json::array();
  for (const auto& x : m.entries()) e.push_back(rat_str(x));
  o["entries"] = e;
  return o;
}

inline Mat mat_from_json(const json& o) {
  std::vector<Rat> entries;
  for (const auto& x : o.at("entries")) entries.push_back(parse_rat(x.get<std::string>()));
  return Mat(o.at("rows").get<std::size_t>(), o.at("cols").get<std::size_t>(),
             std::move(entries));
}

inline json rootsystem_to_json(const RootSystem& rs) {
  json o;
  o["family"] = family_name(rs.family);
  o["rank"] = rs.rank;
  json roots = json::array();
  for (const auto& r : rs.positive_roots) roots.push_back(vec_to_json(r));
  o["positive_roots"] = roots;
  return o;
}

inline RootSystem rootsystem_from_json(const json& o) {
  auto [fam, rank] = parse_system_spec(o.at("family").get<std::string>() +
                                       std::to_string(o.at("rank").get<int>()));
  return build_root_system(fam, rank);
}

inline json distortion_to_json(const DistortionBound& d) {
  json o;
  o["lower"] = rat_str(d.lower);
  o["upper"] = rat_str(d.upper);
  if (d.conformal) o["conformal_scalar"] = rat_str(*d.conformal);
  return o;
}

inline DistortionBound distortion_from_json(const json& o) {
  DistortionBound d;
  d.lower = parse_rat(o.at("lower").get<std::string>());
  d.upper = parse_rat(o.at("upper").get<std::string>());
  if (o.contains("conformal_scalar"))
    d.conformal = parse_rat(o.at("conformal_scalar").get<std::string>());
  return d;
}

inline json families_to_json(const Pattern& p,
                             const std::vector<FamilySet>& fams) {
  json list = json::array();
  for (const auto& f : fams) {
    json fam;
    json normals = json::array();
    for (int i : f.members) normals.push_back(vec_to_json(p.hyperplanes[i].normal));
    fam["normals"] = normals;
    fam["large"] = f.large;
    list.push_back(fam);
  }
  return list;
}

inline json embedding_class_to_json(const EmbeddingClass& c) {
  json o;
  o["matrix"] = mat_to_json(c.rep.T);
  o["assignment"] = c.rep.assignment;
  o["conformal"] = c.conformal.has_value();
  if (c.conformal) o["conformal_scalar"] = rat_str(*c.conformal);
  o["distortion"] = distortion_to_json(c.distortion);
  o["class_id"] = c.rep.class_id;
  return o;
}

inline json anmap_to_json(const ANMap& m, const RootSystem& src,
                          const RootSystem& dst) {
  json o;
  o["matrix"] = mat_to_json(m.T);
  json corr = json::array();
  for (const auto& [i, j] : m.correspondence)
    corr.push_back({vec_to_json(src.positive_roots[i]),
                    vec_to_json(dst.positive_roots[j])});
  o["correspondence"] = corr;
  return o;
}

inline json subdivision_to_json(const SubdivisionReport& r) {
  json o;
  o["counts"] = r.counts;
  o["total"] = r.total;
  o["average"] = rat_str(r.average);
  return o;
}

}  // namespace weylpat
