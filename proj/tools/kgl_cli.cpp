// kgl: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 self-test failure, 2 usage or input error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgl/acceptance.hpp"
#include "kgl/decomp.hpp"
#include "kgl/divisors.hpp"
#include "kgl/json_io.hpp"
#include "kgl/repdim.hpp"
#include "kgl/toric.hpp"
#include "kgl/weights.hpp"

namespace {

using namespace kgl;

constexpr int kExitOk = 0;
constexpr int kExitSelfTestFailed = 1;
constexpr int kExitUsage = 2;

Integer parse_integer(const std::string& text) {
  Integer out;
  std::string trimmed = text;
  if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(0, 1);
  if (trimmed.empty() || out.set_str(trimmed, 10) != 0)
    throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
  return out;
}

IntVec parse_list(const std::vector<std::string>& items) {
  IntVec out;
  for (const auto& item : items) {
    if (!item.empty()) out.push_back(parse_integer(item));
  }
  return out;
}

std::set<int> parse_index_set(const std::vector<std::string>& items) {
  std::set<int> out;
  for (const auto& item : items) {
    if (item.empty()) continue;
    const Integer v = parse_integer(item);
    if (!v.fits_sint_p()) throw Error(ErrorCode::InvalidArgument, "index out of range: " + item);
    out.insert(static_cast<int>(v.get_si()));
  }
  return out;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// Flags shared by the bundle-oriented subcommands.
struct BundleArgs {
  int n = 0;
  std::vector<std::string> m, l, I, J;
  std::string e = "0", d = "0";

  void attach(CLI::App* cmd, bool with_orbit) {
    cmd->add_option("--n", n, "rank n >= 1")->required();
    cmd->add_option("--m", m, "m_0,...,m_{n-1} (coefficients of Z_i)")->delimiter(',')->required();
    cmd->add_option("--l", l, "l_0,...,l_{n-1} (coefficients of Y_i)")->delimiter(',')->required();
    cmd->add_option("--e", e, "det E exponent")->capture_default_str();
    cmd->add_option("--d", d, "det F exponent")->capture_default_str();
    if (with_orbit) {
      cmd->add_option("--I", I, "indices i of the Z_i cutting out the orbit closure")->delimiter(',');
      cmd->add_option("--J", J, "indices j of the Y_j cutting out the orbit closure")->delimiter(',');
    }
  }
  LineBundleClass bundle() const { return LineBundleClass(n, parse_list(m), parse_list(l), parse_integer(e), parse_integer(d)); }
  OrbitSpec orbit() const {
    OrbitSpec spec(n, parse_index_set(I), parse_index_set(J));
    validate_orbit(spec);
    return spec;
  }
};

Json header(const LineBundleClass& bundle, const std::optional<OrbitSpec>& spec) {
  Json doc{{"conventions", conventions_json()}, {"bundle", to_json(bundle)}};
  if (spec) doc["orbit"] = to_json(*spec);
  return doc;
}

std::string decomposition_table(const Decomposition& decomposition) {
  std::string out = "a\tb\tdim\n";
  auto row = [](const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
  };
  for (const auto& entry : decomposition.entries())
    out += row(entry.weight.a) + "\t" + row(entry.weight.b) + "\t" + entry.dim.get_str() + "\n";
  out += "total\t\t" + decomposition.total_dim().get_str() + "\n";
  return out;
}

Json dims_json(const std::vector<WeightPair>& weights) {
  Json out = Json::array();
  for (const auto& w : weights) {
    Json item = to_json(w);
    item["dim"] = integer_to_json(dim_pair(w));
    out.push_back(std::move(item));
  }
  return out;
}

bool closed_orbit_sections_nonzero(const LineBundleClass& bundle) {
  for (int r = 0; r <= bundle.n(); ++r) {
    const WeightPair w = closed_orbit_weight(bundle, r, bundle.n() - r);
    if (!is_nondecreasing(w.a) || !is_nondecreasing(w.b)) return false;
  }
  return true;
}

Json pic_json(const PicClass& c) { return Json{{"Z", to_json(c.z)}, {"Y", to_json(c.y)}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sections of line bundles on the compactification KGL_n of GL_n"};
  app.require_subcommand(1);

  BundleArgs decompose_args;
  bool decompose_table = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose H^0(O_IJ, L) into simple modules");
  decompose_args.attach(decompose_cmd, true);
  decompose_cmd->add_flag("--table", decompose_table, "print a plain-text table instead of JSON");

  BundleArgs restrict_args;
  auto* restrict_cmd = app.add_subcommand("restrict", "restriction map H^0(KGL, L) -> H^0(O_IJ, L)");
  restrict_args.attach(restrict_cmd, true);

  BundleArgs include_args;
  std::vector<std::string> include_mp, include_lp;
  auto* include_cmd = app.add_subcommand("include", "inclusion H^0(O_IJ, L') -> H^0(O_IJ, L)");
  include_args.attach(include_cmd, true);
  include_cmd->add_option("--mp", include_mp, "m' of the smaller bundle L'")->delimiter(',')->required();
  include_cmd->add_option("--lp", include_lp, "l' of the smaller bundle L'")->delimiter(',')->required();

  int ample_n = 0;
  std::vector<std::string> ample_m, ample_l, ample_a;
  auto* ample_cmd = app.add_subcommand("ample", "nef/ample test on the toric closure");
  ample_cmd->add_option("--n", ample_n, "rank n >= 1")->required();
  auto* ample_m_opt = ample_cmd->add_option("--m", ample_m, "m_0,...,m_{n-1}")->delimiter(',');
  auto* ample_l_opt = ample_cmd->add_option("--l", ample_l, "l_0,...,l_{n-1}")->delimiter(',');
  auto* ample_a_opt =
      ample_cmd->add_option("--a", ample_a, "nondecreasing a_1,...,a_n; builds the bundle from a")->delimiter(',');
  ample_m_opt->needs(ample_l_opt)->excludes(ample_a_opt);
  ample_l_opt->needs(ample_m_opt)->excludes(ample_a_opt);

  int fan_n = 0;
  bool fan_table = false;
  auto* fan_cmd = app.add_subcommand("fan", "rays and maximal cones of the toric fan");
  fan_cmd->add_option("--n", fan_n, "rank 1 <= n <= 6")->required();
  fan_cmd->add_flag("--table", fan_table, "print a plain-text table instead of JSON");

  BundleArgs picard_args;
  auto* picard_cmd = app.add_subcommand("picard", "normal form of the class in Pic(KGL_n)");
  picard_args.attach(picard_cmd, false);

  AcceptanceConfig selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance grid");
  selftest_cmd->add_option("--grid-radius", selftest.grid_radius, "grid radius (2 = full grid)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  selftest_cmd->add_option("--seed", selftest.seed, "seed for the sampled criteria")->capture_default_str();
  selftest_cmd->add_flag("--corrupt-toric-rule", selftest.corrupt_toric_rule,
                         "fault injection: perturb the toric coefficient rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decompose_cmd) {
      const LineBundleClass L = decompose_args.bundle();
      const OrbitSpec spec = decompose_args.orbit();
      const Decomposition result = decompose(L, spec);
      if (decompose_table) {
        std::cout << decomposition_table(result);
      } else {
        Json doc = header(L, spec);
        const Json body = to_json(result);
        doc["weights"] = body["weights"];
        doc["total"] = body["total"];
        emit(doc);
      }
    } else if (*restrict_cmd) {
      const LineBundleClass L = restrict_args.bundle();
      const OrbitSpec spec = restrict_args.orbit();
      const RestrictionReport report = restriction_report(L, spec);
      Json doc = header(L, spec);
      doc["common"] = dims_json(report.common);
      doc["kernel_dim"] = integer_to_json(report.kernel_dim);
      doc["image_dim"] = integer_to_json(report.image_dim);
      doc["ambient_extra_dim"] = integer_to_json(report.ambient_extra_dim);
      emit(doc);
    } else if (*include_cmd) {
      const LineBundleClass L = include_args.bundle();
      const LineBundleClass Lp(include_args.n, parse_list(include_mp), parse_list(include_lp), L.e(), L.d());
      const OrbitSpec spec = include_args.orbit();
      const InclusionReport report = inclusion_report(Lp, L, spec);
      Json doc = header(L, spec);
      doc["sub_bundle"] = to_json(Lp);
      doc["subset_ok"] = report.subset_ok;
      doc["new_weights"] = dims_json(report.new_weights);
      doc["dim_increase"] = integer_to_json(report.dim_increase);
      emit(doc);
    } else if (*ample_cmd) {
      LineBundleClass L = LineBundleClass::trivial(ample_n < 1 ? 1 : ample_n);
      Json doc{{"conventions", conventions_json()}};
      if (ample_a_opt->count() > 0) {
        const IntVec a = parse_list(ample_a);
        if (static_cast<int>(a.size()) != ample_n)
          throw Error(ErrorCode::InvalidArgument, "--a needs exactly n entries");
        L = check_not_ample(a).bundle;
        doc["a"] = to_json(a);
      } else if (ample_m_opt->count() > 0) {
        L = LineBundleClass(ample_n, parse_list(ample_m), parse_list(ample_l));
      } else {
        throw Error(ErrorCode::InvalidArgument, "ample needs --m and --l, or --a");
      }
      const Fan fan = build_fan(L.n());
      const Positivity p = positivity(restrict_to_toric(L), fan);
      const LineBundleClass twisted = boundary_twist(L);
      doc["bundle"] = to_json(L);
      doc["twisted_bundle"] = to_json(twisted);
      doc["nef"] = p.nef;
      doc["ample"] = p.ample;
      doc["twisted_ample"] = is_ample(restrict_to_toric(twisted), fan);
      doc["closed_orbit_sections_nonzero"] = closed_orbit_sections_nonzero(L);
      emit(doc);
    } else if (*fan_cmd) {
      const Fan fan = build_fan(fan_n);
      if (fan_table) {
        std::cout << fan.table();
      } else {
        Json rays = Json::array();
        for (const Ray& ray : fan.rays())
          rays.push_back(Json{{"sign", ray.key.sign}, {"support", ray.support}, {"vector", ray.vector}});
        Json cones = Json::array();
        for (const MaxCone& cone : fan.cones())
          cones.push_back(Json{{"perm", cone.perm}, {"split", cone.split}, {"rays", cone.rays}});
        emit(Json{{"conventions", {{"ray_support", "1-based coordinates of Z^n"}, {"cone_rays", "indices into rays"}}},
                  {"n", fan.n()},
                  {"rays", std::move(rays)},
                  {"cones", std::move(cones)}});
      }
    } else if (*picard_cmd) {
      const LineBundleClass L = picard_args.bundle();
      Json doc = header(L, std::nullopt);
      doc["normal_form"] = pic_json(pic_normal_form(L));
      emit(doc);
    } else if (*selftest_cmd) {
      const auto results = run_acceptance(selftest);
      bool all = true;
      for (const auto& r : results) {
        std::cout << format_result(r) << "\n";
        all = all && r.passed;
      }
      std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      return all ? kExitOk : kExitSelfTestFailed;
    }
  } catch (const Error& e) {
    std::cerr << Json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
