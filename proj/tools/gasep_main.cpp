// Command-line front end: construction of the separating set, batch
// verification, counting, the point-equivalence oracle, and evaluation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gasep/invariants.hpp"
#include "gasep/orbit.hpp"
#include "gasep/point.hpp"
#include "gasep/projection.hpp"
#include "gasep/separating_set.hpp"
#include "gasep/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

gasep::Point load_point(const gasep::RepSpec& rep, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open point file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return gasep::Point::from_json(rep, j);
}

gasep::SampleBounds parse_bounds(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected --bounds NUM,DEN");
  gasep::SampleBounds b;
  b.numerator_bound = std::stol(text.substr(0, comma));
  b.denominator_max = std::stol(text.substr(comma + 1));
  if (b.numerator_bound < 1 || b.denominator_max < 1)
    throw std::invalid_argument("--bounds values must be positive");
  return b;
}

std::vector<std::string> parse_checks(const std::string& text) {
  if (text == "all") return gasep::all_check_names();
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) names.push_back(item);
  return names;
}

int cmd_build(const std::string& rep_text, const std::string& format,
              const std::string& dedup_text) {
  gasep::RepSpec rep = gasep::RepSpec::parse(rep_text);
  gasep::SeparatingSet set =
      gasep::build_separating_set(rep, gasep::parse_dedup_mode(dedup_text));
  if (format == "json") {
    std::cout << set.to_json().dump(2) << "\n";
  } else {
    std::cout << "rep " << rep.name() << "  (n=" << rep.dimension() << ", k=" << rep.k()
              << ", l=" << rep.even_count() << ", l'=" << rep.two_mod4_count() << ")\n";
    std::cout << "size " << set.elements.size() << " (raw " << set.raw_total() << ")\n";
    for (const auto& t : set.elements)
      std::cout << t.label() << " = " << t.poly.str() << "\n";
  }
  return 0;
}

int cmd_count(const std::string& rep_text, const std::string& format) {
  gasep::RepSpec rep = gasep::RepSpec::parse(rep_text);
  gasep::SeparatingSet set = gasep::build_separating_set(rep);
  gasep::CheckResult counts = gasep::check_counts(rep, set);
  if (format == "json") {
    std::cout << counts.to_json(false).dump(2) << "\n";
  } else {
    std::cout << "rep " << rep.name() << ": size " << set.elements.size() << " (raw "
              << set.raw_total() << ")\n";
    const auto& table = counts.details["table"];
    if (table["status"] == "not-listed") {
      std::cout << "published size: not listed\n";
    } else {
      std::cout << "published size: " << table["published"] << " -> " << table["status"].get<std::string>()
                << "\n";
    }
  }
  return counts.pass ? 0 : kExitFailure;
}

int cmd_verify(const std::string& rep_text, const std::string& checks_text, int trials,
               uint64_t seed, const std::string& bounds_text, bool timings,
               const std::string& out_path) {
  gasep::RepSpec rep = gasep::RepSpec::parse(rep_text);
  auto names = parse_checks(checks_text);
  auto bounds = parse_bounds(bounds_text);
  nlohmann::ordered_json report =
      gasep::run_checks(rep, names, trials, seed, bounds, timings);
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text;
  }
  return gasep::report_has_failures(report) ? kExitFailure : 0;
}

int cmd_oracle(const std::string& rep_text, const std::string& v_path, const std::string& w_path,
               const std::string& format) {
  gasep::RepSpec rep = gasep::RepSpec::parse(rep_text);
  gasep::Point v = load_point(rep, v_path);
  gasep::Point w = load_point(rep, w_path);
  bool equivalent = gasep::invariant_equivalent(rep, v, w);

  nlohmann::ordered_json result{{"rep", rep.to_json()},
                                {"verdict", equivalent ? "equivalent" : "separated"}};
  if (!equivalent) {
    gasep::SeparatingSet set = gasep::build_separating_set(rep);
    bool witnessed = false;
    for (const auto& t : set.elements) {
      gasep::Rational at_v = gasep::evaluate(t.poly, v);
      gasep::Rational at_w = gasep::evaluate(t.poly, w);
      if (!(at_v == at_w)) {
        result["witness"] = {{"element", t.label()},
                             {"value_v", at_v.str()},
                             {"value_w", at_w.str()}};
        witnessed = true;
        break;
      }
    }
    if (!witnessed) {
      // would contradict the separating property; surface it loudly
      result["witness"] = nullptr;
      result["warning"] = "oracle separated the points but no element of T does";
    }
  }

  if (format == "json") {
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << result["verdict"].get<std::string>() << "\n";
    if (result.contains("witness") && !result["witness"].is_null()) {
      const auto& witness = result["witness"];
      std::cout << "witness " << witness["element"].get<std::string>() << ": "
                << witness["value_v"].get<std::string>() << " vs "
                << witness["value_w"].get<std::string>() << "\n";
    }
    if (result.contains("warning"))
      std::cout << "WARNING: " << result["warning"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& rep_text, const std::string& poly_text,
             const std::string& point_path) {
  gasep::RepSpec rep = gasep::RepSpec::parse(rep_text);
  std::string source = poly_text;
  if (!source.empty() && source[0] == '@') {
    std::ifstream in(source.substr(1));
    if (!in) throw std::invalid_argument("cannot open polynomial file '" + source.substr(1) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    source = buffer.str();
  }
  gasep::Polynomial f = gasep::Polynomial::parse(source);
  for (gasep::VarId v : f.variables()) {
    if (v.is_main() && !rep.contains(v))
      throw std::invalid_argument("polynomial variable " + v.name() + " outside the module");
  }
  gasep::Point p = load_point(rep, point_path);
  std::cout << gasep::evaluate(f, p).str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separating invariants for additive-group modules"};
  app.require_subcommand(1);

  std::string rep_text, format = "text", dedup = "scalar";
  std::string checks = "all", bounds = "9,4", out_path, v_path, w_path, poly_text, point_path;
  int trials = 500;
  uint64_t seed = 42;
  bool timings = false;

  auto* build = app.add_subcommand("build", "construct the separating set");
  build->add_option("--rep", rep_text, "summand degrees, e.g. 2,2,3")->required();
  build->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  build->add_option("--dedup", dedup)->check(CLI::IsMember({"scalar", "exact", "none"}));

  auto* verify = app.add_subcommand("verify", "run the verification checks");
  verify->add_option("--rep", rep_text)->required();
  verify->add_option("--checks", checks, "all or a comma-separated subset");
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);
  verify->add_option("--bounds", bounds, "sampling bounds NUM,DEN");
  verify->add_flag("--timings", timings, "include wall-clock timings in the report");
  verify->add_option("--out", out_path, "write the report to a file");

  auto* count = app.add_subcommand("count", "family counts and table comparison");
  count->add_option("--rep", rep_text)->required();
  count->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* oracle = app.add_subcommand("oracle", "decide invariant equivalence of two points");
  oracle->add_option("--rep", rep_text)->required();
  oracle->add_option("--v", v_path, "JSON point file")->required();
  oracle->add_option("--w", w_path, "JSON point file")->required();
  oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial at a point");
  eval->add_option("--rep", rep_text)->required();
  eval->add_option("--poly", poly_text, "polynomial text, or @file")->required();
  eval->add_option("--point", point_path, "JSON point file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (build->parsed()) return cmd_build(rep_text, format, dedup);
    if (verify->parsed()) return cmd_verify(rep_text, checks, trials, seed, bounds, timings, out_path);
    if (count->parsed()) return cmd_count(rep_text, format);
    if (oracle->parsed()) return cmd_oracle(rep_text, v_path, w_path, format);
    if (eval->parsed()) return cmd_eval(rep_text, poly_text, point_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
