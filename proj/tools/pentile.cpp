#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "pentile/atlas.hpp"
#include "pentile/goldens.hpp"
#include "pentile/realize.hpp"

using nlohmann::json;
using namespace pentile;

namespace {

double env_tolerance(double fallback) {
  const char* s = std::getenv("PENTILE_TOL");
  if (!s || !*s) return fallback;
  try {
    double v = std::stod(s);
    if (v > 0) return v;
  } catch (const std::exception&) {
  }
  throw Error("bad-tolerance", std::string("PENTILE_TOL must be a positive number, got '") + s + "'");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("bad-json", path + ": " + e.what());
  }
}

std::string pi_multiple(double rad) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << rad / kPi << "pi";
  return os.str();
}

// "3/4 pi", "pi/2", "2pi/3" are exact; anything else is read as radians.
std::optional<Angle> parse_exact_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '*') s += c;
  std::smatch m;
  static const std::regex pre(R"(^(-?\d+)(?:/(\d+))?pi$)"), post(R"(^(-?\d*)pi(?:/(\d+))?$)");
  if (std::regex_match(s, m, pre))
    return Angle(std::stoll(m[1]), m[2].matched ? std::stoll(m[2]) : 1);
  if (std::regex_match(s, m, post)) {
    std::string n = m[1];
    std::int64_t num = n.empty() ? 1 : n == "-" ? -1 : std::stoll(n);
    return Angle(num, m[2].matched ? std::stoll(m[2]) : 1);
  }
  return std::nullopt;
}

SubdivisionCase parse_variant(const std::string& s) {
  if (s == "alpha3") return SubdivisionCase::kAlphaCubed;
  if (s == "gamma3") return SubdivisionCase::kGammaCubed;
  throw Error("bad-variant", "variant must be alpha3 or gamma3");
}

json avc_table(const AVCCounts& avc) {
  json j = json::array();
  for (const auto& [v, n] : avc) j.push_back({{"type", v.name()}, {"count", n}, {"degree", v.degree()}});
  return j;
}

struct Output {
  bool as_json = false;
  json doc = json::object();
  std::ostringstream text;

  void flush(int code) const {
    if (as_json) {
      json d = doc;
      d["ok"] = code == 0;
      std::cout << d.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
  }
};

int cmd_solve(Output& out, const std::string& fam, int f, const std::string& a_text, const std::string& variant,
              const std::string& out_path, double tol) {
  Family x = parse_family(fam);
  std::optional<double> a;
  if (!a_text.empty()) a = parse_angle_radians(a_text);
  PentagonSpec p = solve_family(x, f, a, parse_variant(variant));
  Residuals3 r = existence_residuals(p.angle, p.a);
  double closure = rotation_closure_residual(p);
  auto simp = simplicity_check(p);
  bool g1 = geometry1_consistency(p, 1e-9);
  bool ok = std::abs(r.r1) < tol && std::abs(r.r2) < tol && std::abs(r.r3) < tol && closure < tol && g1;
  out.doc["pentagon"] = to_json(p);
  out.doc["residuals"] = {{"eq1", r.r1}, {"eq2", r.r2}, {"eq3", r.r3}, {"closure", closure}};
  out.doc["geometry1"] = g1;
  out.doc["simplicity"] = {{"verdict", verdict_name(simp.verdict)}, {"detail", simp.detail}};
  auto& t = out.text;
  t << family_name(x) << " f=" << f << "\n";
  t << std::setprecision(12);
  for (Label l : kLabels)
    t << "  " << std::left << std::setw(8) << label_name(l) << std::setw(18) << p.angle[l] << pi_multiple(p.angle[l])
      << "\n";
  t << "  " << std::setw(8) << "a" << std::setw(18) << p.a << pi_multiple(p.a) << "\n";
  t << "  " << std::setw(8) << "b" << std::setw(18) << p.b << pi_multiple(p.b) << "\n";
  t << "residuals eq1 " << r.r1 << "  eq2 " << r.r2 << "  eq3 " << r.r3 << "  closure " << closure << "\n";
  t << "geometry1 " << (g1 ? "consistent" : "VIOLATED") << ", simplicity " << verdict_name(simp.verdict) << " ("
    << simp.detail << ")\n";
  if (!out_path.empty()) {
    write_text(out_path, to_json(p).dump(2) + "\n");
    t << "wrote " << out_path << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_build(Output& out, const std::string& fam, int f, const std::string& variant, std::optional<int> position,
              bool flipped, const std::string& out_path) {
  Family x = parse_family(fam);
  BuildOptions opt;
  opt.variant = parse_variant(variant);
  if (position || flipped)
    opt.locator = PatchLocator{position.value_or(0), flipped ? PatchLocator::kFlipped : PatchLocator::kAsIs};
  CombinatorialTiling t = build(x, f, opt);
  bool primed = x == Family::kF2E2Prime || x == Family::kF2E2DoublePrime;
  if (opt.locator && !primed && locate_patch(t) != opt.locator)
    throw Error("no-patch-at-location", std::string(family_name(x)) + " has no patch at the requested location");
  write_text(out_path, tiling_to_json(t).dump(2) + "\n");
  auto rep = verify_tiling(t);
  out.doc["family"] = family_name(x);
  out.doc["f"] = f;
  out.doc["vertices"] = rep.v;
  out.doc["out"] = out_path;
  out.text << "built " << family_name(x) << " f=" << f << " (" << rep.v << " vertices), wrote " << out_path << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_verify(Output& out, const std::string& path) {
  CombinatorialTiling t = tiling_from_json(read_json(path));
  auto rep = verify_tiling(t);
  auto& t_ = out.text;
  json issues = json::array();
  for (const auto& i : rep.issues) issues.push_back({{"check", i.check}, {"entity", i.entity}, {"message", i.message}});
  out.doc["verify"] = {{"ok", rep.ok}, {"v", rep.v}, {"e", rep.e}, {"f", rep.f}, {"issues", issues},
                       {"twisted_pairs", rep.twisted_pairs}, {"matched_pairs", rep.matched_pairs}};
  t_ << "verify: " << (rep.ok ? "pass" : "FAIL") << "  v=" << rep.v << " e=" << rep.e << " f=" << rep.f << "\n";
  for (const auto& i : rep.issues) t_ << "  [" << i.check << "] " << i.entity << ": " << i.message << "\n";
  if (!rep.ok) return 1;
  auto avc = extract_avc(t);
  bool bal = balance_check(avc_types(avc));
  auto cnt = counting_check(avc, t.f());
  out.doc["avc"] = avc_table(avc);
  out.doc["degrees"] = rep.degrees;
  out.doc["balance"] = bal;
  out.doc["counting"] = {{"pass", cnt.pass}, {"failures", cnt.failures}};
  t_ << "AVC:\n";
  for (const auto& [v, n] : avc) t_ << "  " << v.name() << " : " << n << "\n";
  t_ << "degrees:";
  for (const auto& [k, n] : rep.degrees) t_ << " v" << k << "=" << n;
  t_ << "\nb-edge pairs: " << rep.twisted_pairs << " twisted, " << rep.matched_pairs << " matched\n";
  t_ << "balance: " << (bal ? "pass" : "FAIL") << "\ncounting: " << (cnt.pass ? "pass" : "FAIL") << "\n";
  for (const auto& s : cnt.failures) t_ << "  " << s << "\n";
  return bal && cnt.pass ? 0 : 1;
}

ExportFormat format_of(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  if (ext.empty()) throw Error("bad-format", "output path needs a .json, .obj or .svg extension");
  return parse_export_format(ext.substr(1));
}

void report_realization(Output& out, const RealizedTiling& r) {
  double area = total_area(r);
  bool simple = tiles_simple(r);
  out.doc["closure_residual"] = r.closure_residual;
  out.doc["total_area"] = area;
  out.doc["simple"] = simple;
  out.text << std::setprecision(6) << "closure residual " << r.closure_residual << ", total area " << area
           << " (4pi = " << 4 * kPi << "), tiles simple: " << (simple ? "yes" : "no") << "\n";
}

int cmd_realize(Output& out, const std::string& path, const std::string& pent, const std::string& out_path,
                const ExportOptions& eo, double tol) {
  CombinatorialTiling t = tiling_from_json(read_json(path));
  PentagonSpec p = pentagon_from_json(read_json(pent));
  RealizedTiling r = realize(t, p, {tol});
  report_realization(out, r);
  export_tiling(r, format_of(out_path), out_path, eo);
  out.doc["out"] = out_path;
  out.text << "wrote " << out_path << "\n";
  return std::abs(total_area(r) - 4 * kPi) <= tol ? 0 : 1;
}

int cmd_export(Output& out, const std::string& path, const std::string& out_path, const ExportOptions& eo,
               double tol) {
  json j = read_json(path);
  CombinatorialTiling t = tiling_from_json(j);
  ExportFormat fmt = format_of(out_path);
  if (j.contains("positions") && j.contains("pentagon")) {
    RealizedTiling r = realize(t, pentagon_from_json(j["pentagon"]), {tol});
    report_realization(out, r);
    export_tiling(r, fmt, out_path, eo);
  } else {
    export_tiling(t, fmt, out_path);
  }
  out.doc["out"] = out_path;
  out.text << "wrote " << out_path << "\n";
  return 0;
}

int cmd_enumerate(Output& out, const std::string& angles, int max_degree, double tol) {
  std::vector<std::string> parts;
  std::stringstream ss(angles);
  for (std::string s; std::getline(ss, s, ',');) parts.push_back(s);
  if (parts.size() != 5) throw Error("bad-angle", "--angles needs five comma separated values");
  std::array<double, 5> rad{};
  std::array<std::optional<Angle>, 5> exact{};
  bool all_exact = true;
  for (int i = 0; i < 5; ++i) {
    exact[i] = parse_exact_angle(parts[i]);
    rad[i] = exact[i] ? exact[i]->radians() : parse_angle_radians(parts[i]);
    all_exact = all_exact && exact[i].has_value();
  }
  AngleAssignment a = AngleAssignment::from_radians(rad);
  if (all_exact) a.exact = exact;
  AVC avc = enumerate_vertices(a, max_degree, all_exact ? 0.0 : tol);
  json list = json::array();
  out.text << (all_exact ? "exact" : "numeric") << " enumeration, degree <= " << max_degree << ": " << avc.size()
           << " vertex types\n";
  for (const auto& v : avc) {
    list.push_back(v.name());
    out.text << "  " << v.name() << "\n";
  }
  out.doc["avc"] = list;
  out.doc["exact"] = all_exact;
  return 0;
}

int cmd_goldens(Output& out) {
  auto rows = run_goldens();
  bool all = true;
  json list = json::array();
  for (const auto& r : rows) {
    all = all && r.pass;
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out.text << std::right << std::setw(3) << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << std::left
             << std::setw(44) << r.name << r.detail << "\n";
  }
  out.doc["rows"] = list;
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sphere tilings by congruent almost equilateral pentagons"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON report")->configurable(false);

  std::string fam, a_text, variant = "alpha3", out_path, file, pent, angles;
  int f = 0, max_degree = 6, samples = 16;
  std::optional<int> position;
  bool flipped = false;
  std::vector<double> pole = {0, 0, -1};

  auto* solve = app.add_subcommand("solve", "solve the pentagon of a family");
  solve->add_option("--family", fam, "family name")->required();
  solve->add_option("--f", f, "number of tiles")->required();
  solve->add_option("--a", a_text, "edge length a for the general E2 family (radians or p/q pi)");
  solve->add_option("--variant", variant, "alpha3 or gamma3 for pp8/pp20");
  solve->add_option("--out", out_path, "write the pentagon as JSON");

  auto* bld = app.add_subcommand("build", "build the combinatorial tiling of a family");
  bld->add_option("--family", fam, "family name")->required();
  bld->add_option("--f", f, "number of tiles")->required();
  bld->add_option("--out", out_path, "output JSON")->required();
  bld->add_option("--variant", variant, "alpha3 or gamma3 for pp8/pp20");
  bld->add_option("--position", position, "patch position for f2e2-prime/f2e2-doubleprime");
  bld->add_flag("--flipped", flipped, "patch flipped at the given position");

  auto* ver = app.add_subcommand("verify", "verify a tiling and print its AVC");
  ver->add_option("tiling", file, "tiling JSON")->required()->check(CLI::ExistingFile);

  auto* rea = app.add_subcommand("realize", "place a tiling on the sphere and export it");
  rea->add_option("tiling", file, "tiling JSON")->required()->check(CLI::ExistingFile);
  rea->add_option("--pentagon", pent, "pentagon JSON")->required()->check(CLI::ExistingFile);
  rea->add_option("--out", out_path, "output .obj, .svg or .json")->required();
  rea->add_option("--samples", samples, "arc samples per edge")->check(CLI::PositiveNumber);
  rea->add_option("--pole", pole, "projection pole x y z")->expected(3);

  auto* exp = app.add_subcommand("export", "convert a tiling or realized tiling");
  exp->add_option("input", file, "tiling JSON, realized if it carries positions")->required()->check(CLI::ExistingFile);
  exp->add_option("--out", out_path, "output .obj, .svg or .json")->required();
  exp->add_option("--samples", samples, "arc samples per edge")->check(CLI::PositiveNumber);
  exp->add_option("--pole", pole, "projection pole x y z")->expected(3);

  auto* en = app.add_subcommand("enumerate", "list vertex types with angle sum 2pi");
  en->add_option("--angles", angles, "alpha,beta,gamma,delta,epsilon as p/q pi or radians")->required();
  en->add_option("--max-degree", max_degree, "largest vertex degree")->check(CLI::Range(3, 12));

  app.add_subcommand("goldens", "compare against the published values");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.as_json = as_json;
  int code = 0;
  try {
    double tol = env_tolerance(1e-8);
    ExportOptions eo;
    eo.arc_samples = samples;
    eo.pole = Vec3(pole[0], pole[1], pole[2]);
    if (eo.pole.norm() < 1e-12) throw Error("bad-pole", "pole must be nonzero");
    if (*solve) code = cmd_solve(out, fam, f, a_text, variant, out_path, tol);
    else if (*bld) code = cmd_build(out, fam, f, variant, position, flipped, out_path);
    else if (*ver) code = cmd_verify(out, file);
    else if (*rea) code = cmd_realize(out, file, pent, out_path, eo, tol);
    else if (*exp) code = cmd_export(out, file, out_path, eo, tol);
    else if (*en) code = cmd_enumerate(out, angles, max_degree, tol);
    else code = cmd_goldens(out);
  } catch (const Error& e) {
    out.doc["error"] = {{"code", e.code()}, {"message", e.what()}};
    out.text << "error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    out.doc["error"] = {{"code", "exception"}, {"message", e.what()}};
    out.text << "error: " << e.what() << "\n";
    code = 2;
  }
  out.flush(code);
  return code;
}
