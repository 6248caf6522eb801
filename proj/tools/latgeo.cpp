// latgeo command-line tool: inspect, classify, compare, and enumerate
// lattice polytopes, and run the desk-scale verification suite.
//
// Exit codes: 0 success (and: relation holds / all claims hold),
//             1 the checked relation or claim fails,
//             2 parse or usage error,
//             3 precondition violation,
//             4 resource guard tripped,
//             5 internal error (always a bug).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latgeo/format.hpp"
#include "latgeo/report_io.hpp"
#include "latgeo/verify.hpp"

namespace {

using namespace latgeo;

[[nodiscard]] std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[nodiscard]] Polytope load_polytope(const std::string& path) { return parse_polytope(read_input(path)); }

[[nodiscard]] std::string vec_text(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i].value();
  os << ")";
  return os.str();
}

[[nodiscard]] std::string vecs_text(const std::vector<Vec>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vec_text(vs[i]);
  return os.str();
}

[[nodiscard]] std::string map_text(const UnimodularAffineMap& f) {
  std::ostringstream os;
  os << "x -> A x + t with A rows";
  for (int i = 0; i < f.linear().rows(); ++i) {
    os << " [";
    for (int j = 0; j < f.linear().cols(); ++j)
      os << (j ? " " : "") << f.linear().at(i, j).value();
    os << "]";
  }
  os << ", t = " << vec_text(f.translation());
  return os.str();
}

[[nodiscard]] nlohmann::json map_to_json(const UnimodularAffineMap& f) {
  return {{"linear", mat_to_json(f.linear())}, {"translation", vec_to_json(f.translation())}};
}

struct GlobalFlags {
  std::string format = "text";
  int jobs = 1;
  [[nodiscard]] bool json() const { return format == "json"; }
};

[[nodiscard]] SearchOptions search_options(const GlobalFlags& g) {
  SearchOptions so;
  so.jobs = g.jobs;
  return so;
}

void print_records(const GlobalFlags& g, const std::vector<CensusRecord>& recs) {
  if (g.json()) {
    write_census_jsonl(std::cout, recs);
    return;
  }
  for (const CensusRecord& r : recs)
    std::cout << "vol=" << r.form.volume.value() << " points=" << r.form.total_points
              << " verts=" << r.form.vertex_count << " tag=" << to_string(r.cls.tag) << "  "
              << vecs_text(r.rep.vertices()) << "\n";
  std::cout << "classes: " << recs.size() << "\n";
}

// ---------------------------------------------------------------------------

int cmd_info(const GlobalFlags& g, const std::string& file) {
  Polytope p = load_polytope(file);
  LatticePointSet pts = lattice_points(p);
  Int vol = normalized_volume(p);
  bool full = p.affine_dim() == p.ambient_dim();
  Int width = p.affine_dim() >= 1 ? lattice_width(p).width : 0;
  bool vertex_only = is_empty_polytope(p);

  if (g.json()) {
    nlohmann::json j = {{"format", 1},
                        {"ambient_dim", p.ambient_dim()},
                        {"affine_dim", p.affine_dim()},
                        {"vertices", p.vertices().size()},
                        {"volume", vol.value()},
                        {"points",
                         {{"total", pts.total},
                          {"interior", pts.interior},
                          {"boundary", pts.boundary},
                          {"relative_interior", pts.relative_interior}}},
                        {"width", width.value()},
                        {"vertex_only", vertex_only}};
    j["degree"] = full ? nlohmann::json(degree(p)) : nlohmann::json(nullptr);
    j["white"] = p.affine_dim() == 3 && full ? nlohmann::json(is_white(p)) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "dimension:      " << p.affine_dim() << " (ambient " << p.ambient_dim() << ")\n"
            << "vertices:       " << p.vertices().size() << "\n"
            << "volume:         " << vol.value() << "\n"
            << "lattice points: " << pts.total << " (interior " << pts.interior << ", boundary "
            << pts.boundary << ")\n";
  if (full) std::cout << "degree:         " << degree(p) << "\n";
  std::cout << "width:          " << width.value() << "\n";
  if (p.affine_dim() == 3 && full)
    std::cout << "white:          " << (is_white(p) ? "yes" : "no") << "\n";
  std::cout << "vertex-only:    " << (vertex_only ? "yes" : "no") << "\n";
  return 0;
}

int cmd_classify(const GlobalFlags& g, const std::string& file, bool no_containers) {
  Polytope p = load_polytope(file);
  ClassifyOptions co;
  co.find_containers = !no_containers;
  Classification c = classify_3d(p, co);

  if (g.json()) {
    nlohmann::json j = classification_to_json(c);
    j["format"] = 1;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "tag:      " << to_string(c.tag) << "\n"
            << "interior: " << c.interior_points << "\n"
            << "width:    " << c.width.value() << "\n";
  if (c.cayley) {
    std::cout << "witness:  levels of " << vec_text(c.cayley->direction) << " at "
              << c.cayley->base_level.value() << " and " << (c.cayley->base_level + 1).value()
              << "\n"
              << "  lower:  " << vecs_text(c.cayley->lower) << "\n"
              << "  upper:  " << vecs_text(c.cayley->upper) << "\n";
  } else if (c.projection) {
    std::cout << "witness:  projection rows";
    for (int i = 0; i < 2; ++i) {
      Vec row(c.projection->map.cols());
      for (int j = 0; j < c.projection->map.cols(); ++j) row[j] = c.projection->map.at(i, j);
      std::cout << " " << vec_text(row);
    }
    std::cout << "\n  image:  " << vecs_text(c.projection->image_vertices) << "\n";
  }
  if (!c.containers.empty()) {
    std::cout << "containers:";
    for (int i : c.containers) std::cout << " " << i;
    std::cout << "\n";
  }
  return 0;
}

int cmd_equiv(const GlobalFlags& g, const std::string& file1, const std::string& file2) {
  Polytope p = load_polytope(file1);
  Polytope q = load_polytope(file2);
  std::optional<UnimodularAffineMap> f = are_equivalent(p, q);
  if (g.json()) {
    nlohmann::json j = {{"format", 1}, {"equivalent", f.has_value()}};
    j["map"] = f ? map_to_json(*f) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (f) {
    std::cout << "equivalent via " << map_text(*f) << "\n";
  } else {
    std::cout << "not equivalent\n";
  }
  return f ? 0 : 1;
}

int cmd_embed(const GlobalFlags& g, const std::string& file1, const std::string& file2) {
  Polytope p = load_polytope(file1);
  Polytope q = load_polytope(file2);
  std::optional<UnimodularAffineMap> f = embeds_into(p, q);
  if (g.json()) {
    nlohmann::json j = {{"format", 1}, {"embeds", f.has_value()}};
    j["map"] = f ? map_to_json(*f) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (f) {
    std::cout << "embeds via " << map_text(*f) << "\n";
  } else {
    std::cout << "no embedding\n";
  }
  return f ? 0 : 1;
}

int cmd_width(const GlobalFlags& g, const std::string& file) {
  Polytope p = load_polytope(file);
  WidthResult w = lattice_width(p);
  if (g.json()) {
    nlohmann::json dirs = nlohmann::json::array();
    for (const Vec& d : w.directions) dirs.push_back(vec_to_json(d));
    std::cout << nlohmann::json{{"format", 1}, {"width", w.width.value()}, {"directions", dirs}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "width: " << w.width.value() << "\n"
              << "directions: " << vecs_text(w.directions) << "\n";
  }
  return 0;
}

int cmd_project(const GlobalFlags& g, const std::string& file) {
  Polytope p = load_polytope(file);
  std::optional<ProjectionWitness> w = projects_onto_2delta2(p);
  if (g.json()) {
    nlohmann::json j = {{"format", 1}, {"projects", w.has_value()}};
    j["witness"] = w ? nlohmann::json{{"map", mat_to_json(w->map)},
                                      {"image_vertices", vecs_to_json(w->image_vertices)}}
                     : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (w) {
    std::cout << "projects onto the doubled triangle; image " << vecs_text(w->image_vertices)
              << "\n";
  } else {
    std::cout << "no projection onto the doubled triangle\n";
  }
  return w ? 0 : 1;
}

int cmd_enumerate(const GlobalFlags& g, const std::string& kind, long long vol_max,
                  bool empty_only) {
  SearchOptions so = search_options(g);
  if (kind == "polygons") {
    std::vector<Polytope> polys = enumerate_polygons(vol_max, so);
    if (g.json()) {
      for (const Polytope& p : polys) std::cout << polytope_to_json(p).dump() << "\n";
    } else {
      for (const Polytope& p : polys)
        std::cout << "vol=" << normalized_volume(p).value() << "  " << vecs_text(p.vertices())
                  << "\n";
      std::cout << "classes: " << polys.size() << "\n";
    }
    return 0;
  }
  std::function<bool(const Polytope&)> filter;
  if (empty_only) filter = [](const Polytope& p) { return is_empty_polytope(p); };
  print_records(g, enumerate_simplices(vol_max, filter, so));
  return 0;
}

int cmd_census(const GlobalFlags& g, const std::string& container, long long hollow_budget) {
  SearchOptions so = search_options(g);
  if (!container.empty()) {
    print_records(g, subpolytope_census(load_polytope(container), so));
    return 0;
  }
  print_records(g, hollow_census(hollow_budget, so));
  return 0;
}

int cmd_verify_paper(const GlobalFlags& g, bool fast) {
  VerifyOptions vo;
  vo.fast = fast;
  vo.jobs = g.jobs;
  std::vector<ClaimResult> results = verify_claims(vo);
  bool ok = all_claims_hold(results);

  if (g.json()) {
    nlohmann::json claims = nlohmann::json::array();
    for (const ClaimResult& r : results)
      claims.push_back({{"id", r.id},
                        {"label", r.label},
                        {"status", to_string(r.status)},
                        {"detail", r.detail}});
    std::cout << nlohmann::json{
                     {"format", 1}, {"fast", fast}, {"claims", claims}, {"all_hold", ok}}
                     .dump(2)
              << "\n";
  } else {
    for (const ClaimResult& r : results) std::cout << format_claim_line(r) << "\n";
    long long fails = 0, reports = 0;
    for (const ClaimResult& r : results) {
      fails += r.status == ClaimStatus::Fail ? 1 : 0;
      reports += r.status == ClaimStatus::Report ? 1 : 0;
    }
    std::cout << "result: " << (ok ? "no failures" : "FAILURES PRESENT") << " ("
              << results.size() << " claims, " << fails << " failed, " << reports
              << " reported)\n";
  }
  return ok ? 0 : 1;
}

int cmd_catalog(const GlobalFlags& g, int index) {
  const std::vector<Polytope>& cat = catalog();
  if (index < 0 || index > static_cast<int>(cat.size()))
    throw PreconditionError("catalog index must be 1..9");
  if (g.json()) {
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (index != 0 && static_cast<int>(i) + 1 != index) continue;
      nlohmann::json j = polytope_to_json(cat[i]);
      j["index"] = i + 1;
      std::cout << j.dump() << "\n";
    }
  } else {
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (index != 0 && static_cast<int>(i) + 1 != index) continue;
      std::cout << "# member " << i + 1 << "\n" << polytope_to_text(cat[i]);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-polytope toolkit"};
  app.require_subcommand(1);

  GlobalFlags g;
  if (const char* env = std::getenv("LATGEO_JOBS")) g.jobs = std::max(1, std::atoi(env));
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads (default: LATGEO_JOBS or 1)");

  std::string file, file2, container;
  std::string kind = "simplices";
  long long vol_max = 0, hollow_budget = 0;
  bool empty_only = false, fast = false, full = false, no_containers = false;
  int index = 0;

  CLI::App* info = app.add_subcommand("info", "volume, point counts, degree, width of a polytope");
  info->add_option("file", file, "polytope file (JSON or text; '-' for stdin)")->required();

  CLI::App* classify = app.add_subcommand("classify", "classify a 3-polytope");
  classify->add_option("file", file, "polytope file")->required();
  classify->add_flag("--no-containers", no_containers, "skip the catalog embedding search");

  CLI::App* equiv = app.add_subcommand("equiv", "test two polytopes for lattice equivalence");
  equiv->add_option("file1", file, "first polytope")->required();
  equiv->add_option("file2", file2, "second polytope")->required();

  CLI::App* embed = app.add_subcommand("embed", "test whether the first polytope embeds in the second");
  embed->add_option("file1", file, "polytope to embed")->required();
  embed->add_option("file2", file2, "container polytope")->required();

  CLI::App* width = app.add_subcommand("width", "lattice width and minimizing directions");
  width->add_option("file", file, "polytope file")->required();

  CLI::App* project = app.add_subcommand("project", "search a projection onto the doubled triangle");
  project->add_option("file", file, "polytope file")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate simplex or polygon classes");
  enumerate->add_option("--kind", kind, "what to enumerate")
      ->check(CLI::IsMember({"simplices", "polygons"}))
      ->capture_default_str();
  enumerate->add_option("--vol-max", vol_max, "largest normalized volume")->required();
  enumerate->add_flag("--empty", empty_only, "keep only vertex-only simplices");

  CLI::App* census = app.add_subcommand("census", "sub-polytope census or hollow corpus");
  CLI::Option* copt = census->add_option("--container", container, "container polytope file");
  census->add_option("--hollow", hollow_budget, "grow the hollow corpus up to this point budget")
      ->excludes(copt);

  CLI::App* verify = app.add_subcommand("verify-paper", "run the desk-scale verification suite");
  CLI::Option* fopt = verify->add_flag("--fast", fast, "reduced bounds (seconds)");
  verify->add_flag("--full", full, "full bounds (about a minute)")->excludes(fopt);

  CLI::App* cat = app.add_subcommand("catalog", "print the nine catalog members");
  cat->add_option("--index", index, "print only this member (1..9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(g, file);
    if (*classify) return cmd_classify(g, file, no_containers);
    if (*equiv) return cmd_equiv(g, file, file2);
    if (*embed) return cmd_embed(g, file, file2);
    if (*width) return cmd_width(g, file);
    if (*project) return cmd_project(g, file);
    if (*enumerate) return cmd_enumerate(g, kind, vol_max, empty_only);
    if (*census) {
      if (container.empty() && hollow_budget == 0)
        throw PreconditionError("census needs --container FILE or --hollow BUDGET");
      return cmd_census(g, container, hollow_budget);
    }
    if (*verify) return cmd_verify_paper(g, fast);
    if (*cat) return cmd_catalog(g, index);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 4;
  } catch (const OverflowError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
