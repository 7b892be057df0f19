// Command-line front end. Every subcommand prints JSON on standard output.
// Exit status: 0 ok, 1 verification mismatch, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ellk3/brauer.hpp"
#include "ellk3/golden.hpp"

using namespace ellk3;

namespace {

constexpr int kMismatch = 1;
constexpr int kInputError = 2;

bool g_pretty = false;

void emit(const Json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json(const std::string& path) {
  std::string text = slurp(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
}

WeierstrassModel read_model(const std::string& path) {
  Json j = read_json(path);
  try {
    return model_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.reason(), e.offset());
  }
}

// Mordell-Weil data of a golden row with the same characteristic and fibers.
std::optional<std::string> tabulated_mordell_weil(const SurfaceReport& r) {
  const int p = r.model.p();
  std::string mine = render_multiset(fiber_multiset(r.fibers), p);
  for (const GoldenTable& t : golden_tables()) {
    if (t.p != p) continue;
    for (const GoldenRow& row : t.rows) {
      if (row.expect.mw.empty()) continue;
      if (render_multiset(parse_multiset(row.expect.fibers), p) == mine) return row.expect.mw;
    }
  }
  return std::nullopt;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const std::string& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("parameter '" + s + "' is not of the form name=value");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

FamilySpec family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw Error("family spec needs a string 'family'");
  }
  FamilySpec s{parse_family_kind(j["family"].get<std::string>()), {}};
  if (j.contains("parameters")) {
    if (!j["parameters"].is_object()) throw Error("'parameters' must be an object");
    for (const auto& [k, v] : j["parameters"].items()) {
      s.parameters[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  return s;
}

struct AnalyzeArgs {
  std::string file;
  int torsion = 0;
  int deg_bound = -1;
  int assume_rho = 0;
  bool raw = false;
  bool fixed = false;
  std::string mw;
};

int run_analyze(const AnalyzeArgs& a) {
  WeierstrassModel m = read_model(a.file);
  AnalyzeOptions opt;
  opt.raw = a.raw;
  opt.brauer_flags = true;

  Json torsion_json;
  if (a.torsion > 0) {
    int bound = a.deg_bound >= 0 ? a.deg_bound : 2 * std::max(1, m.chi());
    // Search on the model that analyze will report.
    WeierstrassModel target = a.raw ? m : minimalize_global(m).first;
    auto pts = torsion_search(target, a.torsion, bound);
    Json list = Json::array();
    for (const SectionPoint& P : pts) list.push_back(point_to_json(P));
    torsion_json = {{"order", a.torsion}, {"deg_bound", bound}, {"points", std::move(list)}};
    int q = a.torsion;
    while (q % m.p() == 0) q /= m.p();
    if (!pts.empty() && q == 1) opt.torsion = a.torsion;
  }

  SurfaceReport r = analyze(m, opt);
  std::optional<std::string> mw;
  if (!a.mw.empty()) mw = a.mw;
  if (a.assume_rho > 0) {
    r.mw_rank = mw_rank(a.assume_rho, r.fibers);
    if (!mw && a.assume_rho == 22) mw = tabulated_mordell_weil(r);
    if (mw && a.assume_rho == 22) r.sigma0 = sigma0_from_mw(r, *mw);
  }

  Json j = report_to_json(r);
  if (mw) j["mordell_weil"] = *mw;
  if (a.assume_rho > 0) {
    Lattice t = trivial_lattice(r.fibers);
    j["trivial_lattice"] = {{"name", t.name()}, {"det", to_string(t.det())}};
    if (mw) {
      MordellWeil g = parse_mordell_weil(*mw);
      j["det_ns"] = to_string(shioda_tate(t.det(), g.free, g.torsion_order()));
    }
  }
  if (!torsion_json.is_null()) j["torsion_search"] = std::move(torsion_json);
  if (a.fixed) {
    const int p = r.model.p();
    for (std::size_t i = 0; i < r.fibers.size(); ++i) {
      Json loci;
      for (auto [name, spec] : {std::pair{"identity", Specialization::Identity},
                                std::pair{"component_group", Specialization::ComponentGroup}}) {
        for (bool meets : {false, true}) {
          try {
            FixedLocusDescriptor d = fixed_locus(r.fibers[i], p, meets, spec);
            loci[std::string(name) + (meets ? "+zero" : "")] = {{"kind", to_string(d.kind)}, {"detail", d.detail}};
          } catch (const Error&) {
            // Combination impossible for this fiber.
          }
        }
      }
      j["fibers"][i]["fixed_locus"] = std::move(loci);
    }
  }
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic surfaces over GF(p)(t): fibers, Frobenius pullbacks, torsion and lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", g_pretty, "Indented JSON");

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Fiber types, Euler numbers and height flags of a model file");
  analyze_cmd->add_option("model", aa.file, "Model JSON file ('-' for stdin)")->required();
  analyze_cmd->add_option("--torsion", aa.torsion, "Search for sections of this exact order");
  analyze_cmd->add_option("--deg-bound", aa.deg_bound, "Degree bound of the torsion search (default 2 chi)");
  analyze_cmd->add_option("--assume-rho", aa.assume_rho, "Picard number used for Shioda-Tate");
  analyze_cmd->add_option("--mw", aa.mw, "Mordell-Weil group, e.g. 'A1*(7) + Z/7'");
  analyze_cmd->add_flag("--raw", aa.raw, "Skip minimalization");
  analyze_cmd->add_flag("--fixed-locus", aa.fixed, "Per-fiber fixed loci of a p-torsion translation");

  std::string pb_file;
  int pb_times = 1;
  bool pb_raw = false;
  auto* pullback_cmd = app.add_subcommand("pullback", "Frobenius pullback a_i(t) -> a_i(t^p)");
  pullback_cmd->add_option("model", pb_file)->required();
  pullback_cmd->add_option("--times", pb_times, "Number of pullbacks")->check(CLI::Range(0, 6));
  pullback_cmd->add_flag("--raw", pb_raw);

  std::string bc_file, bc_phi;
  bool bc_raw = false;
  auto* bc_cmd = app.add_subcommand("basechange", "Base change along t = phi(s)");
  bc_cmd->add_option("model", bc_file)->required();
  bc_cmd->add_option("--phi", bc_phi, "Classifying map in s, e.g. 's^6/(s^2+1)'")->required();
  bc_cmd->add_flag("--raw", bc_raw);

  std::string tw_file, tw_g;
  bool tw_raw = false;
  auto* tw_cmd = app.add_subcommand("twist2", "Artin-Schreier quadratic twist in characteristic 2");
  tw_cmd->add_option("model", tw_file)->required();
  tw_cmd->add_option("--g", tw_g, "Twisting function, e.g. '1/(t+1)'")->required();
  tw_cmd->add_flag("--raw", tw_raw);

  std::string fam_file, fam_name;
  std::vector<std::string> fam_params;
  bool fam_raw = false, fam_analyze = false;
  auto* fam_cmd = app.add_subcommand("family", "Generate a family member");
  fam_cmd->add_option("spec", fam_file, "Family spec JSON {family, parameters}");
  fam_cmd->add_option("--name", fam_name, "Family name instead of a spec file");
  fam_cmd->add_option("--param", fam_params, "name=value, repeatable");
  fam_cmd->add_flag("--raw", fam_raw, "Unminimized pullback");
  fam_cmd->add_flag("--analyze", fam_analyze, "Attach the surface report");

  std::string ig_arg;
  auto* ig_cmd = app.add_subcommand("igusa", "Universal curves over Igusa curves ('dump' for all)");
  ig_cmd->add_option("p_power", ig_arg, "p^n or 'dump'")->required();

  std::string lat_text;
  bool lat_mw = false;
  auto* lat_cmd = app.add_subcommand("lattice", "Gram matrix and determinant of a named lattice");
  lat_cmd->add_option("name", lat_text, "e.g. 'A2*(3)^2' or '3.(E7*(3))'")->required();
  lat_cmd->add_flag("--mw", lat_mw, "Parse as a Mordell-Weil group 'L + Z/n'");

  std::string ver_id = "all";
  auto* ver_cmd = app.add_subcommand("verify", "Regenerate and check the embedded tables");
  ver_cmd->add_option("table", ver_id, "Table id or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze_cmd) return run_analyze(aa);
    if (*pullback_cmd) {
      WeierstrassModel m = read_model(pb_file);
      for (int i = 0; i < pb_times; ++i) m = frobenius_pullback(m, true);
      if (!pb_raw) m = minimalize_global(m).first;
      emit(model_to_json(m));
      return 0;
    }
    if (*bc_cmd) {
      WeierstrassModel m = read_model(bc_file);
      emit(model_to_json(base_change(m, ClassifyingMap::parse(bc_phi, m.p()), bc_raw)));
      return 0;
    }
    if (*tw_cmd) {
      WeierstrassModel m = read_model(tw_file);
      emit(model_to_json(quadratic_twist_char2(m, parse_ratfunc(tw_g, m.p()), tw_raw)));
      return 0;
    }
    if (*fam_cmd) {
      FamilySpec spec = [&] {
        if (!fam_file.empty()) return family_from_json(read_json(fam_file));
        if (fam_name.empty()) throw Error("family: give a spec file or --name");
        return FamilySpec{parse_family_kind(fam_name), parse_params(fam_params)};
      }();
      FamilyMember m = generate(spec, fam_raw);
      Json j;
      j["spec"] = spec.describe();
      j["model"] = model_to_json(m.model);
      j["base"] = model_to_json(m.base);
      j["torsion_order"] = m.torsion_order;
      Json secs = Json::array();
      for (const SectionPoint& P : m.sections) {
        Json s = point_to_json(P);
        auto ord = order_of(m.model, P, 2 * std::max(1, m.torsion_order));
        s["order"] = ord ? Json(*ord) : Json(nullptr);
        secs.push_back(std::move(s));
      }
      j["sections"] = std::move(secs);
      if (fam_analyze) {
        AnalyzeOptions o;
        if (m.torsion_order > 0) o.torsion = m.torsion_order;
        o.brauer_flags = true;
        o.raw = fam_raw;
        j["report"] = report_to_json(analyze(m.model, o));
      }
      emit(j);
      return 0;
    }
    if (*ig_cmd) {
      if (ig_arg == "dump") {
        Json all = Json::array();
        for (int q : igusa_levels()) all.push_back(igusa_to_json(igusa_universal(q)));
        emit(all);
        return 0;
      }
      int q = 0;
      try {
        q = std::stoi(ig_arg);
      } catch (const std::exception&) {
        throw Error("igusa: expected p^n or 'dump', got '" + ig_arg + "'");
      }
      emit(igusa_to_json(igusa_universal(q)));
      return 0;
    }
    if (*lat_cmd) {
      if (lat_mw) {
        MordellWeil g = parse_mordell_weil(lat_text);
        emit({{"free", lattice_to_json(g.free)}, {"torsion", g.torsion}, {"torsion_order", g.torsion_order()}});
      } else {
        emit(lattice_to_json(parse_lattice(lat_text)));
      }
      return 0;
    }
    if (*ver_cmd) {
      std::vector<std::string> ids;
      if (ver_id == "all") {
        for (const GoldenTable& t : golden_tables()) ids.push_back(t.id);
      } else {
        golden_table(ver_id);  // unknown ids are input errors
        ids.push_back(ver_id);
      }
      Json out = Json::array();
      bool ok = true;
      for (const std::string& id : ids) {
        TableResult r = verify_table(id);
        ok = ok && r.pass();
        out.push_back(to_json(r));
      }
      emit(ids.size() == 1 ? out[0] : out);
      return ok ? 0 : kMismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
