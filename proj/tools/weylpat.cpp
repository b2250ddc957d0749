// weylpat: exact root-system / Weyl-pattern toolkit.
//
//   weylpat info <pattern>                     hyperplane count, group order
//   weylpat families <pattern>                 maximal families
//   weylpat embed <src> <dst> [--classes]      pattern embedding search
//   weylpat anmap <src> <dst>                  AN-map search
//   weylpat subdivide <src> <dst> --map M      chamber subdivision profile
//   weylpat distortion --map M                 conformality / distortion of M
//   weylpat verify [--rank-max N]              replay the claim registry
//
// --json switches every report to the versioned JSON schema. Exit codes:
// 0 success, 1 verification failure, 2 usage error.

#include "weylpat/json_io.hpp"
#include "weylpat/util.hpp"
#include "weylpat/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace weylpat;

json with_schema(json o) {
  o["schema_version"] = kSchemaVersion;
  return o;
}

Pattern pattern_arg(const std::string& spec) {
  auto [fam, rank] = parse_system_spec(spec);
  return pattern_of(build_root_system(fam, rank));
}

// A map argument is either a named form (an-map, first-form, second-form;
// the rank is taken from the src system) or an inline JSON matrix, given as
// {"rows":..,"cols":..,"entries":[..]} or as an array of rows.
Mat map_arg(const std::string& arg, int rank) {
  if (arg == "an-map") return explicit_an_map(rank).T;
  if (arg == "first-form") return form_matrix(rank, false);
  if (arg == "second-form") return form_matrix(rank, true);
  json j;
  try {
    j = json::parse(arg);
  } catch (const json::exception&) {
    throw std::invalid_argument(
        "--map expects an-map, first-form, second-form, or a JSON matrix");
  }
  if (j.is_object()) return mat_from_json(j);
  if (j.is_array()) {
    std::vector<Vec> rows;
    for (const auto& r : j) {
      Vec row;
      for (const auto& x : r)
        row.push_back(x.is_string() ? parse_rat(x.get<std::string>())
                                    : Rat(x.get<long>()));
      rows.push_back(std::move(row));
    }
    return Mat::from_rows(rows);
  }
  throw std::invalid_argument("--map: unrecognized matrix literal");
}

std::string assignment_str(const Assignment& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

int cmd_info(const std::string& spec, bool as_json, std::size_t weyl_cap) {
  Pattern p = pattern_arg(spec);
  WeylGroup w = generate(p, weyl_cap);
  if (as_json) {
    json o;
    o["pattern"] = spec;
    o["rank"] = p.rank;
    o["hyperplanes"] = p.size();
    o["weyl_order"] = w.order();
    o["chambers"] = w.order();
    std::cout << with_schema(o).dump(2) << "\n";
  } else {
    std::cout << "pattern:     " << spec << "\n"
              << "rank:        " << p.rank << "\n"
              << "hyperplanes: " << p.size() << "\n"
              << "Weyl order:  " << w.order() << "\n"
              << "chambers:    " << w.order() << "\n";
  }
  return 0;
}

int cmd_families(const std::string& spec, bool as_json) {
  Pattern p = pattern_arg(spec);
  auto fams = maximal_families(p);
  if (as_json) {
    json o;
    o["pattern"] = spec;
    o["families"] = families_to_json(p, fams);
    std::cout << with_schema(o).dump(2) << "\n";
  } else {
    std::cout << fams.size() << " maximal families of " << spec << ":\n";
    for (const auto& f : fams) {
      std::cout << (f.large ? "  large " : "  small ") << "{ ";
      for (int i : f.members) {
        std::cout << "[";
        const auto& n = p.hyperplanes[i].normal;
        for (std::size_t k = 0; k < n.size(); ++k)
          std::cout << (k ? " " : "") << rat_str(n[k]);
        std::cout << "] ";
      }
      std::cout << "}\n";
    }
  }
  return 0;
}

int cmd_embed(const std::string& s1, const std::string& s2, bool classes,
              bool as_json, const Config& cfg) {
  Pattern src = pattern_arg(s1), dst = pattern_arg(s2);
  SearchOptions opts;
  opts.rank_cap = cfg.rank_cap;
  auto embs = find_embeddings(src, dst, opts);
  if (!classes) {
    if (as_json) {
      json o;
      o["src"] = s1;
      o["dst"] = s2;
      o["embeddings"] = embs.size();
      std::cout << with_schema(o).dump(2) << "\n";
    } else {
      std::cout << embs.size() << " embeddings (up to scaling) of " << s1
                << " into " << s2 << "\n";
    }
    return 0;
  }
  WeylGroup ws = generate(src, cfg.weyl_cap), wd = generate(dst, cfg.weyl_cap);
  auto cls = classify(embs, ws, wd, src, dst);
  if (as_json) {
    json o;
    o["src"] = s1;
    o["dst"] = s2;
    json list = json::array();
    for (const auto& c : cls) list.push_back(embedding_class_to_json(c));
    o["classes"] = list;
    std::cout << with_schema(o).dump(2) << "\n";
  } else {
    std::cout << cls.size() << " classes of " << s1 << " -> " << s2
              << " (" << embs.size() << " embeddings)\n";
    for (const auto& c : cls) {
      std::cout << "  class " << assignment_str(c.rep.class_id) << ": "
                << (c.conformal ? "conformal" : "nonconformal");
      if (!c.conformal)
        std::cout << ", K in [" << rat_str(c.distortion.lower) << ", "
                  << rat_str(c.distortion.upper) << "]";
      std::cout << ", " << c.members.size() << " members\n";
    }
  }
  return 0;
}

int cmd_anmap(const std::string& s1, const std::string& s2, bool as_json) {
  auto [f1, r1] = parse_system_spec(s1);
  auto [f2, r2] = parse_system_spec(s2);
  RootSystem src = build_root_system(f1, r1);
  RootSystem dst = build_root_system(f2, r2);
  auto maps = find_an_maps(src, dst);
  if (as_json) {
    json o;
    o["src"] = s1;
    o["dst"] = s2;
    json list = json::array();
    for (const auto& m : maps) list.push_back(anmap_to_json(m, src, dst));
    o["an_maps"] = list;
    std::cout << with_schema(o).dump(2) << "\n";
  } else {
    std::cout << maps.size() << " AN-maps " << s1 << " -> " << s2 << "\n";
  }
  return 0;
}

int cmd_subdivide(const std::string& s1, const std::string& s2,
                  const std::string& map_spec, bool as_json,
                  const Config& cfg) {
  Pattern src = pattern_arg(s1), dst = pattern_arg(s2);
  Mat t = map_arg(map_spec, src.rank);
  auto rep = subdivision_report(t, src, dst, cfg.chamber_rank_cap, cfg.threads);
  if (as_json) {
    json o;
    o["src"] = s1;
    o["dst"] = s2;
    o["report"] = subdivision_to_json(rep);
    std::cout << with_schema(o).dump(2) << "\n";
  } else {
    std::cout << "chamber subdivision " << s1 << " -> " << s2 << " under "
              << map_spec << ":\n  counts:";
    for (long c : rep.counts) std::cout << " " << c;
    std::cout << "\n  total:   " << rep.total
              << "\n  average: " << rat_str(rep.average) << "\n";
  }
  return 0;
}

int cmd_distortion(const std::string& map_spec, const std::string& domain,
                   bool as_json) {
  DistortionBound d;
  if (!domain.empty()) {
    Pattern src = pattern_arg(domain);
    Pattern dst = pattern_of(build_root_system(Family::BC, src.rank));
    Mat t = map_arg(map_spec, src.rank);
    d = embedding_distortion(t, src, dst);
  } else {
    Mat t = map_arg(map_spec, 0);
    d = distortion(t, Rat(1, 1000000));
  }
  if (as_json) {
    std::cout << with_schema(json{{"distortion", distortion_to_json(d)}}).dump(2)
              << "\n";
  } else {
    if (d.conformal)
      std::cout << "conformal, scalar " << rat_str(*d.conformal) << "\n";
    else
      std::cout << "K in [" << rat_str(d.lower) << ", " << rat_str(d.upper)
                << "]\n";
  }
  return 0;
}

int cmd_verify(int rank_max, bool as_json) {
  auto outcomes = run_verification(rank_max);
  bool ok = true;
  if (as_json) {
    json list = json::array();
    for (const auto& o : outcomes) {
      list.push_back({{"id", o.id},
                      {"claim", o.claim},
                      {"status", o.status},
                      {"details", o.details}});
      if (o.status == "fail") ok = false;
    }
    std::cout << with_schema(json{{"outcomes", list}}).dump(2) << "\n";
  } else {
    for (const auto& o : outcomes) {
      std::cout << "[" << (o.status == "pass" ? "PASS"
                                              : o.status == "skipped" ? "SKIP"
                                                                      : "FAIL")
                << "] " << o.id << ": " << o.claim;
      if (!o.details.empty()) std::cout << " -- " << o.details;
      std::cout << "\n";
      if (o.status == "fail") ok = false;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Weyl-pattern toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string config_path;
  int threads = 1;
  app.add_flag("--json", as_json, "emit JSON reports");
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--threads", threads, "worker thread cap");

  std::string arg1, arg2, map_spec, domain;
  bool classes = false;
  int rank_max = 5;

  auto* info = app.add_subcommand("info", "pattern summary");
  info->add_option("pattern", arg1)->required();
  auto* families = app.add_subcommand("families", "maximal families");
  families->add_option("pattern", arg1)->required();
  auto* embed = app.add_subcommand("embed", "pattern embedding search");
  embed->add_option("src", arg1)->required();
  embed->add_option("dst", arg2)->required();
  embed->add_flag("--classes", classes, "reduce to Weyl x scaling classes");
  auto* anmap = app.add_subcommand("anmap", "AN-map search");
  anmap->add_option("src", arg1)->required();
  anmap->add_option("dst", arg2)->required();
  auto* subdivide = app.add_subcommand("subdivide", "chamber subdivision");
  subdivide->add_option("src", arg1)->required();
  subdivide->add_option("dst", arg2)->required();
  subdivide->add_option("--map", map_spec, "an-map | first-form | second-form | JSON matrix")
      ->required();
  auto* distortion_cmd = app.add_subcommand("distortion", "conformality / distortion");
  distortion_cmd->add_option("--map", map_spec)->required();
  distortion_cmd->add_option("--domain", domain,
                             "measure as an embedding of this system into BC");
  auto* verify = app.add_subcommand("verify", "replay the claim registry");
  verify->add_option("--rank-max", rank_max, "cap the search ranks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (threads > 1) cfg.threads = threads;

    if (*info) return cmd_info(arg1, as_json, cfg.weyl_cap);
    if (*families) return cmd_families(arg1, as_json);
    if (*embed) return cmd_embed(arg1, arg2, classes, as_json, cfg);
    if (*anmap) return cmd_anmap(arg1, arg2, as_json);
    if (*subdivide) return cmd_subdivide(arg1, arg2, map_spec, as_json, cfg);
    if (*distortion_cmd) return cmd_distortion(map_spec, domain, as_json);
    if (*verify) return cmd_verify(rank_max, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
