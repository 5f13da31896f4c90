// fiberscope command-line interface.
//
// Subcommands:
//   analyze            end-to-end pipeline from a config file and/or flags
//   covers             Massey cover calculus from a base type or seed list
//   realroots          exact real-root count of an integer polynomial
//   twistknots         twist-knot cover family table
//   check-observation  conjecture coverage report against the census table

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <fiberscope/fiberscope.hpp>

namespace {

using fiberscope::Json;

#ifndef FIBERSCOPE_BUNDLED_DATA
#define FIBERSCOPE_BUNDLED_DATA ""
#endif

std::string default_census_path() {
  const std::string dir = FIBERSCOPE_BUNDLED_DATA;
  return dir.empty() ? "" : dir + "/census.csv";
}

void emit(const Json& j, const std::string& json_out) {
  const std::string text = j.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(json_out);
  if (!out) throw fiberscope::Error("io_error", "cannot write '" + json_out + "'");
  out << text;
  if (!out) throw fiberscope::Error("io_error", "failed writing '" + json_out + "'");
}

fiberscope::SurfaceType parse_type_arg(const std::string& value, const std::string& what) {
  const auto pair = fiberscope::detail::parse_int_pair(value, what);
  return fiberscope::SurfaceType{pair[0], pair[1]};
}

std::vector<fiberscope::SurfaceType> parse_type_list_arg(const std::string& value,
                                                         const std::string& what) {
  std::vector<fiberscope::SurfaceType> types;
  std::size_t start = 0;
  while (start <= value.size()) {
    auto end = value.find(';', start);
    if (end == std::string::npos) end = value.size();
    const std::string item = fiberscope::detail::trim_view(value.substr(start, end - start));
    if (!item.empty()) types.push_back(parse_type_arg(item, what));
    start = end + 1;
  }
  if (types.empty()) {
    throw fiberscope::SyntaxError("empty type list for " + what, "bad_config");
  }
  return types;
}

Json covered_types_json(fiberscope::SurfaceType base, std::int64_t max_minus_chi) {
  Json types = Json::array();
  for (const auto& t : fiberscope::bundle_covered_types(base, max_minus_chi)) {
    types.push_back(fiberscope::to_json(t));
  }
  return types;
}

int run(int argc, char** argv) {
  CLI::App app{"Fibering calculus for two-generator one-relator 3-manifold groups:\n"
               "Brown's criterion, Alexander norm balls, fiber-type enumeration,\n"
               "surface-bundle cover calculus, and exact real-root certificates."};
  app.require_subcommand(1);

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline");
  std::string config_path, relator, alexander, mu, lambda, polynomial, claimed;
  std::int64_t max_chi = -1;
  std::string json_out, svg_out;
  analyze->add_option("--config", config_path, "key=value config file");
  analyze->add_option("--relator", relator, "relator word, e.g. \"a^2 b^3 ...\"");
  analyze->add_option("--alexander", alexander, "Alexander polynomial in a, b");
  analyze->add_option("--mu", mu, "peripheral image mu as c,d");
  analyze->add_option("--lambda", lambda, "peripheral image lambda as c,d");
  analyze->add_option("--max-chi", max_chi, "fiber-type enumeration bound on -chi");
  analyze->add_option("--polynomial", polynomial, "trace-field minimal polynomial in x");
  analyze->add_option("--claimed-nonfibered", claimed,
                      "expected non-fibered lines, e.g. \"1,0; 0,1; 1,-1\"");
  analyze->add_option("--json-out", json_out, "write the JSON report to a file");
  analyze->add_option("--svg-out", svg_out,
                      "prefix for <prefix>_path.svg and <prefix>_ball.svg");

  // ---- covers ----
  auto* covers = app.add_subcommand("covers", "Massey cover calculus");
  std::string base_arg, seeds_arg;
  std::int64_t covers_max = 10;
  std::string covers_json_out;
  covers->add_option("--base", base_arg, "base surface type as -chi,p");
  covers->add_option("--seeds", seeds_arg, "seed types, e.g. \"2,4; 2,0\"");
  covers->add_option("--max", covers_max, "bound on -chi of covered types");
  covers->add_option("--json-out", covers_json_out, "write JSON to a file");

  // ---- realroots ----
  auto* realroots = app.add_subcommand("realroots", "Exact real-root counting");
  std::string poly_arg, realroots_json_out;
  realroots->add_option("--polynomial", poly_arg,
                        "polynomial \"x^4 - ...\" or coefficient list \"[c0, ..., cn]\"")
      ->required();
  realroots->add_option("--json-out", realroots_json_out, "write JSON to a file");

  // ---- twistknots ----
  auto* twistknots = app.add_subcommand("twistknots", "Twist-knot cover family");
  std::int64_t max_m = 0;
  std::string twist_json_out;
  twistknots->add_option("--max-m", max_m, "largest twist-knot index m")->required();
  twistknots->add_option("--json-out", twist_json_out, "write JSON to a file");

  // ---- check-observation ----
  auto* check = app.add_subcommand("check-observation",
                                   "Conjecture coverage against the census table");
  std::int64_t check_max = 22;
  std::string check_json_out;
  check->add_option("--max-chi", check_max, "coverage bound on -chi");
  check->add_option("--json-out", check_json_out, "write JSON to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (analyze->parsed()) {
    fiberscope::AnalysisConfig config;
    if (!config_path.empty()) config = fiberscope::parse_config_file(config_path);
    if (!relator.empty()) config.relator = relator;
    if (!alexander.empty()) config.alexander = alexander;
    if (!mu.empty()) fiberscope::apply_config_entry(config, "mu", mu);
    if (!lambda.empty()) fiberscope::apply_config_entry(config, "lambda", lambda);
    if (max_chi >= 0) config.max_minus_chi = max_chi;
    if (!polynomial.empty()) config.polynomial = polynomial;
    if (!claimed.empty()) {
      fiberscope::apply_config_entry(config, "claimed_nonfibered", claimed);
    }
    const fiberscope::AnalysisResult result = fiberscope::run_analysis(config);
    if (!svg_out.empty()) fiberscope::write_analysis_svgs(result, svg_out);
    emit(fiberscope::to_json(result), json_out);
    return 0;
  }

  if (covers->parsed()) {
    if (base_arg.empty() == seeds_arg.empty()) {
      std::cerr << "covers: exactly one of --base or --seeds is required\n";
      return 2;
    }
    Json j;
    j["max_minus_chi"] = covers_max;
    if (!base_arg.empty()) {
      const auto base = parse_type_arg(base_arg, "base");
      j["base"] = fiberscope::to_json(base);
      j["types"] = covered_types_json(base, covers_max);
    } else {
      const auto seeds = parse_type_list_arg(seeds_arg, "seeds");
      Json per_seed = Json::array();
      std::set<fiberscope::SurfaceType> all;
      for (const auto& seed : seeds) {
        Json row;
        row["seed"] = fiberscope::to_json(seed);
        row["types"] = covered_types_json(seed, covers_max);
        per_seed.push_back(row);
        const auto covered = fiberscope::bundle_covered_types(seed, covers_max);
        all.insert(covered.begin(), covered.end());
      }
      Json union_json = Json::array();
      for (const auto& t : all) union_json.push_back(fiberscope::to_json(t));
      j["per_seed"] = per_seed;
      j["union"] = union_json;
    }
    emit(j, covers_json_out);
    return 0;
  }

  if (realroots->parsed()) {
    const fiberscope::IntPolynomial f = fiberscope::parse_polynomial(poly_arg);
    const std::int64_t count = fiberscope::count_real_roots(f);
    Json j;
    j["polynomial"] = fiberscope::print_polynomial(f);
    j["degree"] = f.degree();
    j["real_root_count"] = count;
    j["has_real_root"] = count >= 1;
    j["squarefree_part"] = fiberscope::print_polynomial(fiberscope::squarefree_part(f));
    emit(j, realroots_json_out);
    return 0;
  }

  if (twistknots->parsed()) {
    if (max_m < 4) {
      throw fiberscope::DomainError("twist_knot_range", "--max-m must be >= 4");
    }
    Json rows = Json::array();
    for (std::int64_t m = 3; m <= max_m; ++m) {
      const fiberscope::TwistKnotIndex k{m};
      Json row;
      row["m"] = m;
      row["two_bridge_fraction"] =
          fiberscope::to_fraction_string(fiberscope::twist_knot_fraction(k));
      const auto type = fiberscope::walsh_cover_type(k);
      row["walsh_cover_type"] = fiberscope::to_json(type);
      // Even index <=> odd-degree trace field <=> guaranteed real place.
      row["real_place"] = m % 2 == 0;
      row["satisfies_mt_a"] = fiberscope::mt_a(type);
      rows.push_back(row);
    }
    Json family = Json::array();
    for (const auto& t : fiberscope::twistknot_realplace_types(max_m)) {
      family.push_back(fiberscope::to_json(t));
    }
    Json j;
    j["max_m"] = max_m;
    j["knots"] = rows;
    j["real_place_family"] = family;
    emit(j, twist_json_out);
    return 0;
  }

  if (check->parsed()) {
    const char* env = std::getenv("FIBERSCOPE_DATA");
    const std::string source = (env != nullptr && *env != '\0')
                                   ? std::string(env)
                                   : default_census_path();
    const auto census = fiberscope::resolve_census(default_census_path());
    Json j = fiberscope::to_json(fiberscope::conjecture_coverage(check_max, census));
    j["max_minus_chi"] = check_max;
    j["census_source"] = source.empty() ? "builtin" : source;
    j["census_rows"] = static_cast<std::int64_t>(census.size());
    emit(j, check_json_out);
    return 0;
  }

  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fiberscope::Error& e) {
    std::cerr << fiberscope::error_json(e).dump(2) << "\n";
    return fiberscope::exit_status_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "{\n  \"error\": {\n    \"code\": \"internal_error\",\n    \"message\": \""
              << e.what() << "\"\n  }\n}\n";
    return 70;
  }
}
