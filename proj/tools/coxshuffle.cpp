// coxshuffle command-line tool. Exit codes: 0 ok, 1 an identity failed, 2 bad flags or limits.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "coxshuffle/buildings.hpp"
#include "coxshuffle/io.hpp"
#include "coxshuffle/maps.hpp"
#include "coxshuffle/spectral.hpp"
#include "coxshuffle/verify.hpp"
#include "coxshuffle/walks.hpp"

using namespace coxshuffle;

namespace {

struct Common {
  std::string family = "sideA";
  int n = 3;
  long a = 1;
  long q = 2;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string format;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void add_common(CLI::App* app, Common& c, bool with_a, bool with_q, bool with_seed) {
  app->add_option("--family", c.family, "shuffle family (sideA, twoSidedA, riffleA, sideB, riffleB, sideD, riffleD)");
  app->add_option("--n", c.n, "rank");
  if (with_a) app->add_option("--a", c.a, "shuffle index");
  if (with_q) app->add_option("--q", c.q, "field size (prime)");
  if (with_seed) app->add_option("--seed", c.seed, "random seed");
  app->add_option("--out", c.out, "output file, - for stdout");
  app->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
}

void emit(const Common& c, const std::string& body) {
  if (c.out == "-") {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + c.out);
  f << body;
  if (!f) throw UsageError("write failed: " + c.out);
}

std::string fmt(const Common& c, const std::string& fallback) { return c.format.empty() ? fallback : c.format; }

// A complex letter or any shuffle family name.
Family complex_of(const std::string& name) {
  if (name == "A" || name == "B" || name == "D") return parse_family(name);
  return info(parse_shuffle_family(name)).complex;
}

std::string checks_text(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.statement;
    if (!c.detail.empty()) out += " [" + c.detail + "]";
    out += "\n";
  }
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---- subcommands --------------------------------------------------------------

int cmd_enumerate(const Common& c, const std::string& type) {
  const Family family = complex_of(c.family);
  check_rank(family, c.n);
  std::optional<FaceType> filter;
  if (!type.empty()) filter = FaceType::parse(family, c.n, type);
  const auto faces = enumerate_faces(family, c.n, filter);
  const auto f = fmt(c, "text");
  if (f == "json") {
    Json j;
    j["family"] = std::string(to_string(family));
    j["n"] = c.n;
    j["count"] = faces.size();
    Json list = Json::array();
    for (const auto& x : faces) list.push_back({{"face", x.to_string()}, {"type", x.type().to_string()}});
    j["faces"] = std::move(list);
    emit(c, dump(j));
  } else if (f == "csv") {
    std::string out = "index,face,type,rank\n";
    for (std::size_t i = 0; i < faces.size(); ++i)
      out += std::to_string(i) + ",\"" + faces[i].to_string() + "\",\"" + faces[i].type().to_string() + "\"," +
             std::to_string(faces[i].rank()) + "\n";
    emit(c, out);
  } else {
    std::string out;
    for (const auto& x : faces) out += x.to_string() + "\n";
    emit(c, out);
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& checks) {
  const auto f = parse_shuffle_family(c.family);
  auto results = run_verify(f, c.n, split(checks));
  const bool ok = all_passed(results);
  if (fmt(c, "json") == "text") {
    emit(c, checks_text(results));
  } else {
    Json j;
    j["family"] = c.family;
    j["n"] = c.n;
    j["passed"] = ok;
    j["checks"] = checks_json(results);
    emit(c, dump(j));
  }
  return ok ? 0 : 1;
}

int cmd_spectrum(const Common& c) {
  const auto f = parse_shuffle_family(c.family);
  check_verify_scale(f, c.n);
  if (!valid_shuffle_index(f, c.a)) throw UsageError("invalid shuffle index a = " + std::to_string(c.a));
  const auto fm = fmt(c, "json");
  if (fm == "csv") {
    emit(c, matrix_csv(transition_operator(shuffle(f, c.n, c.a)).normalized()));
    return 0;
  }
  auto r = verify_minimal_polynomial(f, c.n, c.a);
  if (fm == "text") {
    std::string out;
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
      out += r.eigenvalues[i].get_str() + " x" + r.multiplicities[i].get_str() + "\n";
    out += std::string("minimal polynomial: ") + (r.ok() ? "verified" : "FAILED") + "\n";
    emit(c, out);
  } else {
    emit(c, dump(spectrum_json(r)));
  }
  return r.ok() ? 0 : 1;
}

int cmd_map(const Common& c, const std::string& map_name, const std::string& face, const std::string& element,
            const std::string& input) {
  const auto m = parse_complex_map(map_name);
  const Family src = source_family(m);
  check_rank(src, c.n);
  if (target_family(m) == Family::D && c.n < 2) throw UsageError("D needs n >= 2");
  const int given = !face.empty() + !element.empty() + !input.empty();
  if (given != 1) throw UsageError("give exactly one of --face, --element, --input");
  const auto fm = fmt(c, "text");
  if (!face.empty()) {
    auto img = apply_map(m, Face::parse(src, c.n, face));
    if (fm == "json") {
      Json j{{"map", std::string(to_string(m))}, {"n", c.n}, {"face", Face::parse(src, c.n, face).to_string()}, {"image", img.to_string()}};
      emit(c, dump(j));
    } else {
      emit(c, img.to_string() + "\n");
    }
    return 0;
  }
  AlgebraElement x;
  if (!element.empty()) {
    x = parse_element_text(src, c.n, element);
  } else {
    std::ifstream in(input);
    if (!in) throw UsageError("cannot read " + input);
    x = element_from_json(Json::parse(in));
    if (x.family() != src || x.n() != c.n) throw UsageError("element does not live on the source complex");
  }
  auto img = push_element(m, x);
  emit(c, fm == "json" ? dump(element_json(img)) : img.to_string() + "\n");
  return 0;
}

int cmd_qshuffle(const Common& c, const std::string& building, int max_a) {
  const auto k = parse_building_kind(building);
  auto checks = qshuffle_checks(k, c.n, c.q, max_a);
  const bool ok = all_passed(checks);
  if (fmt(c, "json") == "text") {
    emit(c, checks_text(checks));
  } else {
    Json j;
    j["building"] = building;
    j["n"] = c.n;
    j["q"] = c.q;
    j["passed"] = ok;
    j["checks"] = checks_json(checks);
    emit(c, dump(j));
  }
  return ok ? 0 : 1;
}

int cmd_simulate(Common c, CLI::App* app, int steps, std::uint64_t trials, const std::string& route, const std::string& config) {
  WalkConfig cfg;
  if (!config.empty()) {
    std::ifstream in(config);
    if (!in) throw UsageError("cannot read " + config);
    auto j = Json::parse(in);
    // flags given on the command line win
    if (j.contains("family") && !app->count("--family")) c.family = j["family"].get<std::string>();
    if (j.contains("n") && !app->count("--n")) c.n = j["n"].get<int>();
    if (j.contains("a") && !app->count("--a")) c.a = j["a"].get<long>();
    if (j.contains("seed") && !app->count("--seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("steps") && !app->count("--steps")) steps = j["steps"].get<int>();
    if (j.contains("trials") && !app->count("--trials")) trials = j["trials"].get<std::uint64_t>();
  }
  cfg.family = parse_shuffle_family(c.family);
  cfg.n = c.n;
  cfg.a = c.a;
  cfg.steps = steps;
  cfg.trials = trials;
  cfg.seed = c.seed;
  cfg.route = route == "procedural" ? SamplerRoute::Procedural : SamplerRoute::Element;
  auto t = run_walk(cfg);
  const auto fm = fmt(c, "csv");
  if (fm == "json") {
    Json j;
    j["family"] = c.family;
    j["n"] = cfg.n;
    j["a"] = cfg.a;
    j["steps"] = cfg.steps;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["route"] = route;
    j["path"] = t.path;
    Json tv = Json::array();
    char buf[32];
    for (double x : t.tv) {
      std::snprintf(buf, sizeof buf, "%.6f", x);
      tv.push_back(std::stod(buf));
    }
    j["tv_distance"] = std::move(tv);
    j["final_counts"] = t.final_counts;
    emit(c, dump(j));
  } else {
    emit(c, trace_csv(t));
  }
  return 0;
}

int cmd_numbers(const Common& c, const std::string& kind, unsigned max_a, unsigned max_j) {
  auto t = coefficient_table(parse_stirling_kind(kind), max_a, max_j, c.q, c.n);
  if (fmt(c, "csv") == "json") {
    Json j;
    j["kind"] = kind;
    j["q"] = c.q;
    j["n"] = c.n;
    Json rows = Json::array();
    for (const auto& r : t.values) {
      Json row = Json::array();
      for (const auto& v : r) row.push_back(integer_json(v));
      rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    emit(c, dump(j));
  } else {
    emit(c, table_csv(t));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walks on Coxeter complexes and buildings: exact algebra, spectra and simulation"};
  app.require_subcommand(1);

  Common c;
  std::string type, checks, map_name, face, element, input, building = "glnA", route = "element", config,
                                                                 kind = "plain";
  int max_a = 4, steps = 10;
  unsigned table_a = 8, table_j = 8;
  std::uint64_t trials = 1000;

  auto* en = app.add_subcommand("enumerate", "list the faces of a Coxeter complex");
  add_common(en, c, false, false, false);
  en->add_option("--type", type, "restrict to one face type, e.g. {s1,t}");

  auto* ve = app.add_subcommand("verify", "run exact identity suites");
  add_common(ve, c, false, false, false);
  ve->add_option("--checks", checks, "comma list: semigroup,idempotents,characters,minpoly,stirling,axioms,double,maps");

  auto* sp = app.add_subcommand("spectrum", "eigenvalues and multiplicities of S_a");
  add_common(sp, c, true, false, false);

  auto* mp = app.add_subcommand("map", "push a face or element along B-D, D-A or B-A");
  add_common(mp, c, false, false, false);
  mp->add_option("--map", map_name, "B-D, D-A or B-A")->required();
  mp->add_option("--face", face, "face in canonical text");
  mp->add_option("--element", element, "element as c*face + ...");
  mp->add_option("--input", input, "element JSON file");

  auto* qs = app.add_subcommand("qshuffle", "relation report for a building");
  add_common(qs, c, false, true, false);
  qs->add_option("--building", building, "glnA, symplecticB, orthogonalB or oriflammeD");
  qs->add_option("--max-a", max_a, "largest power of sigma_1 expanded");

  auto* si = app.add_subcommand("simulate", "Monte Carlo random walk on chambers");
  add_common(si, c, true, false, true);
  si->add_option("--steps", steps, "steps per trial");
  si->add_option("--trials", trials, "number of trials");
  si->add_option("--route", route, "element or procedural")->check(CLI::IsMember({"element", "procedural"}));
  si->add_option("--config", config, "JSON file with family, n, a, steps, trials, seed");

  auto* nu = app.add_subcommand("numbers", "coefficient tables as CSV");
  add_common(nu, c, false, true, false);
  nu->add_option("--kind", kind, "plain, signed, qA, qSymplectic or qOrthogonal");
  nu->add_option("--max-a", table_a, "largest a");
  nu->add_option("--max-j", table_j, "largest j");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*en) return cmd_enumerate(c, type);
    if (*ve) return cmd_verify(c, checks);
    if (*sp) return cmd_spectrum(c);
    if (*mp) return cmd_map(c, map_name, face, element, input);
    if (*qs) return cmd_qshuffle(c, building, max_a);
    if (*si) return cmd_simulate(c, si, steps, trials, route, config);
    if (*nu) {
      // --n only matters for the polar kinds
      if (!nu->count("--n")) c.n = static_cast<int>(table_j);
      return cmd_numbers(c, kind, table_a, table_j);
    }
  } catch (const ScaleLimit& e) {
    std::cerr << "error: scale limit: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
