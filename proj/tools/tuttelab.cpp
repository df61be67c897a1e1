// Command-line front end: generation, polynomials, bijections, series,
// verification suites and closed formulas.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tuttelab/closed_forms.hpp"
#include "tuttelab/equations.hpp"
#include "tuttelab/errors.hpp"
#include "tuttelab/map_json.hpp"
#include "tuttelab/mapgen.hpp"
#include "tuttelab/potts.hpp"
#include "tuttelab/verify.hpp"

using namespace tuttelab;
using json = nlohmann::json;

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kInvalidArgument = 3,  // unknown family, equation, suite or formula; bad values
  kMalformedMap = 4,
  kCapExceeded = 5,
  kComputation = 6,  // singular system, division failure, other errors
};

enum class Format { plain, json, csv };

struct Options {
  bool json = false;
  bool csv = false;
  Format format() const { return json ? Format::json : csv ? Format::csv : Format::plain; }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int report_exit(const std::vector<CheckReport>& reports, Format f) {
  if (f == Format::json)
    std::cout << reports_to_json(reports).dump(2) << '\n';
  else if (f == Format::csv)
    std::cout << reports_to_csv(reports);
  else
    std::cout << reports_to_text(reports);
  for (const auto& r : reports)
    if (!r.pass()) return kCheckFailed;
  return kOk;
}

int cmd_gen(const std::string& family, int n, bool count_only, Format f) {
  const Family fam = family_from_name(family);
  const auto maps = generate(fam, n);
  if (count_only) {
    if (f == Format::json)
      std::cout << json{{"family", family_name(fam)}, {"n", n}, {"count", maps.size()}}.dump() << '\n';
    else if (f == Format::csv)
      std::cout << "family,n,count\n" << family_name(fam) << ',' << n << ',' << maps.size() << '\n';
    else
      std::cout << maps.size() << '\n';
    return kOk;
  }
  if (f == Format::csv) {
    std::cout << "index,edges,vertices,faces,root_vertex_degree,root_face_degree\n";
    for (size_t i = 0; i < maps.size(); ++i) {
      const auto& m = maps[i];
      const bool a = m.is_atomic();
      std::cout << i << ',' << m.num_edges() << ',' << m.num_vertices() << ',' << m.num_faces() << ','
                << (a ? 0 : m.root_vertex_degree()) << ',' << (a ? 0 : m.root_face_degree()) << '\n';
    }
    return kOk;
  }
  // JSON Lines in both plain and json modes: one map record per line.
  for (const auto& m : maps) std::cout << map_to_json_line(m) << '\n';
  return kOk;
}

std::vector<RootedMap> read_maps(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidMap("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  std::vector<RootedMap> maps;
  json doc = json::parse(text, nullptr, false);
  if (!doc.is_discarded()) {
    if (doc.is_array())
      for (const auto& j : doc) maps.push_back(map_from_json(j));
    else
      maps.push_back(map_from_json(doc));
    return maps;
  }
  // JSON Lines, as written by gen.
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) maps.push_back(map_from_json_text(line));
  if (maps.empty()) throw InvalidMap("no map record in " + path);
  return maps;
}

int cmd_tutte(const std::string& path, const std::string& mode, Format f) {
  const auto maps = read_maps(path);
  json out = json::array();
  if (f == Format::csv) {
    std::cout << (mode == "special" ? "index,spanning_trees,chromatic,bipolar\n" : "index," + mode + "\n");
  }
  for (size_t i = 0; i < maps.size(); ++i) {
    const auto& m = maps[i];
    if (mode == "special") {
      Specializations s = specializations(m);
      const std::string st = to_string(s.spanning_tree_count), ch = s.chromatic_poly.to_string(),
                        bp = to_string(s.bipolar_count);
      if (f == Format::json)
        out.push_back({{"index", i}, {"spanning_trees", st}, {"chromatic", ch}, {"bipolar", bp}});
      else if (f == Format::csv)
        std::cout << i << ',' << st << ',' << csv_field(ch) << ',' << bp << '\n';
      else
        std::cout << "spanning_trees " << st << "\nchromatic " << ch << "\nbipolar " << bp << '\n';
      continue;
    }
    const std::string p = (mode == "potts" ? potts(m) : tutte(m)).to_string();
    if (f == Format::json)
      out.push_back({{"index", i}, {mode, p}});
    else if (f == Format::csv)
      std::cout << i << ',' << csv_field(p) << '\n';
    else
      std::cout << p << '\n';
  }
  if (f == Format::json) std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_series(const std::string& eq_name, int order, const std::string& set, Format f) {
  const EquationId eq = equation_from_name(eq_name);
  const EquationInfo& info = equation_info(eq);
  // One --set list serves every equation: values of variables this equation
  // does not carry are dropped with a note.
  Params params;
  for (const auto& [v, p] : parse_params(set)) {
    const bool known = std::find(info.params.begin(), info.params.end(), v) != info.params.end() ||
                       std::find(info.catalytic.begin(), info.catalytic.end(), v) != info.catalytic.end();
    if (known)
      params[v] = p;
    else
      std::cerr << "note: " << info.name << " has no variable " << var_name(v) << "; ignored\n";
  }
  const TSeries s = expand(eq, params, order);
  const std::string mv = var_name(info.main);
  if (f == Format::json) {
    json coeffs = json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s[n].to_string());
    std::cout << json{{"equation", eq_name}, {"order", order}, {"set", set}, {"variable", mv}, {"coefficients", coeffs}}
                     .dump(2)
              << '\n';
  } else if (f == Format::csv) {
    std::cout << "order,coefficient\n";
    for (int n = 0; n <= s.order(); ++n) std::cout << n << ',' << csv_field(s[n].to_string()) << '\n';
  } else {
    for (int n = 0; n <= s.order(); ++n) std::cout << mv << '^' << n << ": " << s[n].to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const std::string& level, Format f) {
  if (level != "desk") throw DomainError("unknown level: " + level + " (only desk is available)");
  std::vector<CheckReport> reports;
  if (suite == "all")
    for (const auto& s : verify_suites()) reports.push_back(run_suite(s.name));
  else
    reports.push_back(run_suite(suite));
  return report_exit(reports, f);
}

int cmd_formula(const std::string& name, const std::vector<std::string>& raw, bool list, Format f) {
  if (list || name.empty()) {
    for (const auto& info : formulas()) std::cout << info.name << ' ' << info.args << "  " << info.description << '\n';
    return kOk;
  }
  std::vector<long> args;
  for (const auto& a : raw) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(a, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != a.size() || a.empty()) throw DomainError("formula arguments must be integers, got " + a);
    args.push_back(v);
  }
  const std::string value = to_string(closed_form(name, args));
  if (f == Format::json)
    std::cout << json{{"formula", name}, {"args", args}, {"value", value}}.dump() << '\n';
  else if (f == Format::csv)
    std::cout << "formula,value\n" << name << ',' << value << '\n';
  else
    std::cout << value << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of planar maps and their Potts and Tutte generating functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  GenConfig& cfg = gen_config();
  app.add_flag("--json", opt.json, "JSON output");
  app.add_flag("--csv", opt.csv, "CSV output with a header row");
  app.add_option("--cache-dir", cfg.cache_dir, "map cache directory (default: $TUTTELAB_CACHE, none if unset)");
  app.add_option("--listing-cap", cfg.listing_cap, "largest edge count all_maps lists")->capture_default_str();
  app.add_option("--max-maps", cfg.max_materialized, "maps held by any one generation step")->capture_default_str();

  int rc = kOk;

  auto* gen = app.add_subcommand("gen", "generate a family of rooted maps (JSON Lines, CSV or a count)");
  std::string family;
  int gen_n = 0;
  bool count_only = false;
  gen->add_option("family", family, "maps, bipartite, near_triangulations, ...")->required();
  gen->add_option("--n", gen_n, "size (edges, vertices or faces depending on the family)")->required();
  gen->add_flag("--count-only", count_only, "print the number of maps only");

  auto* tut = app.add_subcommand("tutte", "Potts or Tutte polynomial of maps in a JSON file ('-' for stdin)");
  std::string mapfile;
  tut->add_option("mapfile", mapfile, "a map record, an array of records, or JSON Lines")->required();
  auto* fp = tut->add_flag("--potts", "Potts polynomial P(q, nu)");
  auto* ft = tut->add_flag("--tutte", "Tutte polynomial T(mu, nu) (default)");
  auto* fs = tut->add_flag("--special", "spanning trees, chromatic polynomial, bipolar orientations");
  fp->excludes(ft)->excludes(fs);
  ft->excludes(fs);

  auto* bij = app.add_subcommand("bijection", "bijection round trips");
  auto* rt = bij->add_subcommand("roundtrip", "round trip on all objects up to a size");
  bij->require_subcommand(1);
  std::string which;
  int max_size = 4;
  rt->add_option("bijection", which, "psi, cvs, mullin or ising")
      ->required()
      ->check(CLI::IsMember({"psi", "cvs", "mullin", "ising"}));
  rt->add_option("--max-size", max_size, "largest size")->capture_default_str();

  auto* ser = app.add_subcommand("series", "series of the functional equations");
  auto* exp = ser->add_subcommand("expand", "iterate an equation to a given order");
  ser->require_subcommand(1);
  std::string eq_name, set;
  int order = 6;
  exp->add_option("--eq", eq_name, "equation id, e.g. NT or POTTS_MAPS")->required();
  exp->add_option("--order", order, "truncation order")->capture_default_str();
  exp->add_option("--set", set, "parameter values, e.g. q=3,nu=0");

  auto* ver = app.add_subcommand("verify", "run a verification suite or all of them");
  std::string suite, level = "desk";
  ver->add_option("suite", suite, "suite name or all")->required();
  ver->add_option("--level", level, "verification scale")->capture_default_str();

  auto* frm = app.add_subcommand("formula", "evaluate a closed formula");
  std::string fname;
  std::vector<std::string> fargs;
  bool flist = false;
  frm->add_option("name", fname, "formula name");
  frm->add_option("args", fargs, "integer arguments");
  frm->add_flag("--list", flist, "list the formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format f = opt.format();
    if (*gen) rc = cmd_gen(family, gen_n, count_only, f);
    else if (*tut) rc = cmd_tutte(mapfile, *fp ? "potts" : *fs ? "special" : "tutte", f);
    else if (*rt) rc = report_exit({bijection_roundtrip(which, max_size)}, f);
    else if (*exp) rc = cmd_series(eq_name, order, set, f);
    else if (*ver) rc = cmd_verify(suite, level, f);
    else if (*frm) rc = cmd_formula(fname, fargs, flist, f);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InvalidMap& e) {
    std::cerr << "malformed map: " << e.what() << '\n';
    return kMalformedMap;
  } catch (const DomainError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputation;
  }
  return rc;
}
