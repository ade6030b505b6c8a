#include "schubert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schubert/charring.hpp"
#include "schubert/cohomology.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/report.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

using nlohmann::json;

namespace {

const std::vector<std::string> kChecks = {"thmA",       "thm42",       "thmB",        "prop51",  "lemma26",
                                          "lemma54_56", "thmC_typeA", "cor52_53_58", "lemma61", "remarkB2"};

struct Config {
  std::string type;
  std::string format = "table";
  std::uint64_t guard = 1'000'000;
  unsigned workers = 1;
  std::string out;

  std::string check;
  std::optional<std::size_t> alpha;
  std::string word;
  std::string weight_fund;
  std::string weight_root;
};

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--type", cfg.type, "Cartan type such as A3, B2, G2, E6")->required();
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--guard", cfg.guard, "Largest Weyl group the command may enumerate")
      ->envname("SCHUBERT_GUARD")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", cfg.workers, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
  cmd->add_option("--out", cfg.out, "Write the result to this file instead of stdout");
}

std::vector<int> parse_ints(const std::string& text, std::size_t rank, const char* what) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidArgument(std::string("bad entry '") + item + "' in " + what);
    v.push_back(x);
  }
  if (v.size() != rank) {
    throw InvalidArgument(std::string(what) + " needs " + std::to_string(rank) + " comma-separated integers, got '" +
                          text + "'");
  }
  return v;
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (int x : w.coords()) out.push_back(x);
  return out;
}

std::string rational_str(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string coords_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string labels_line(const RootSystem& rs) {
  std::string s;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const bool is_long = rs.roots()[*rs.find_root(rs.simple_root(i))].is_long;
    s += (i ? " " : "") + std::to_string(i + 1) + ":" + (is_long ? "long" : "short");
  }
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string render_table(const Report& r, const RootSystem& rs) {
  std::ostringstream os;
  os << "check        " << r.check_id << "\n"
     << "type         " << r.cartan_type << "  [" << labels_line(rs) << "]\n"
     << "universe     " << r.universe_size << "\n"
     << "passed       " << (r.passed() ? "yes" : "no") << "\n"
     << "elapsed_ms   " << r.elapsed.count() << "\n"
     << "engine       " << kEngineVersion << "\n";
  for (const auto& [key, value] : r.details.items()) {
    const bool flat = value.is_primitive() ||
                      (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& x) { return x.is_primitive(); }));
    if (flat) os << key << ": " << value.dump() << "\n";
    else os << key << ": " << value.size() << " entries (see --format json)\n";
  }
  os << "counterexamples " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) {
    os << "  w=" << format_word(c.element) << " w^-1=" << format_word(c.inverse) << "  " << c.note
       << "\n    expected " << c.expected.dump() << "\n    actual   " << c.actual.dump() << "\n";
  }
  return os.str();
}

Report run_check(const std::string& check, const WeylGroup& g, const Config& cfg) {
  const SweepOptions opt{cfg.guard, cfg.workers};
  const RootSystem& rs = g.root_system();
  if (check == "thmA") return cohomology::verify_thmA(g, opt);
  if (check == "thm42") return cohomology::verify_thm42(g, cfg.alpha, opt);
  if (check == "thmB") return cohomology::verify_thmB_criterion(g, opt);
  if (check == "prop51") return coxeter::verify_prop51(g, opt);
  if (check == "lemma26") return cohomology::verify_lemma26(rs);
  if (check == "lemma54_56") return coxeter::verify_lemma54_55_56(g, opt);
  if (check == "thmC_typeA") return coxeter::verify_thmC_typeA(g, opt);
  if (check == "cor52_53_58") return coxeter::verify_cor52_53_58(g, opt);
  if (check == "lemma61") return cohomology::verify_lemma61(g);
  if (check == "remarkB2") return cohomology::remark_b2_check(g);
  throw InvalidArgument("unknown check " + check);
}

std::vector<std::string> applicable_checks(const RootSystem& rs) {
  std::vector<std::string> out;
  if (rs.simply_laced()) {
    out = {"lemma26", "thmA", "thm42", "lemma54_56", "prop51", "cor52_53_58"};
    if (rs.type().family == Family::A) out.push_back("thmC_typeA");
  } else {
    out = {"prop51", "thmB", "lemma61"};
    if (rs.type() == CartanType(Family::B, 2)) out.push_back("remarkB2");
  }
  return out;
}

struct Rendered {
  std::string text;
  int code = kExitPass;
};

Rendered cmd_roots(const Config& cfg) {
  const RootSystem rs(CartanType::parse(cfg.type));
  json roots = json::array();
  for (const auto& r : rs.positive_roots()) {
    roots.push_back({{"weight", weight_json(r.weight)},
                     {"root_coords", r.root_coords},
                     {"height", r.height},
                     {"length", r.is_long ? "long" : "short"}});
  }
  const auto& a0 = rs.highest_root();
  const auto& nu = rs.highest_short_root();
  if (cfg.format == "json") {
    json doc = {{"command", "roots"},
                {"type", rs.type().name()},
                {"root_count", rs.roots().size()},
                {"positive_roots", std::move(roots)},
                {"highest_root", {{"weight", weight_json(a0.weight)}, {"root_coords", a0.root_coords},
                                  {"length", a0.is_long ? "long" : "short"}}},
                {"highest_short_root", {{"weight", weight_json(nu.weight)}, {"root_coords", nu.root_coords}}},
                {"rho", weight_json(rs.rho())},
                {"engine_version", kEngineVersion},
                {"labeling", labeling_json(rs)}};
    return {dump(doc)};
  }
  std::ostringstream os;
  os << "type " << rs.type().name() << "  |R| = " << rs.roots().size() << "  |W| = " << rs.type().weyl_group_order()
     << "\nlabels [" << labels_line(rs) << "]\ncartan matrix (row i: <alpha_j, alpha_i^vee>)\n";
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < rs.rank(); ++j) os << " " << (rs.cartan(i, j) >= 0 ? " " : "") << rs.cartan(i, j);
    os << "\n";
  }
  os << "positive roots (fundamental coords | simple-root coords | height | length)\n";
  for (const auto& r : rs.positive_roots()) {
    os << "  " << r.weight.str() << "  " << coords_str(r.root_coords) << "  " << r.height << "  "
       << (r.is_long ? "long" : "short") << "\n";
  }
  os << "alpha_0 " << coords_str(a0.root_coords) << " " << (a0.is_long ? "long" : "short") << "\n"
     << "highest short root " << coords_str(nu.root_coords) << "\n"
     << "rho " << rs.rho().str() << "\n";
  return {os.str()};
}

Rendered cmd_demazure(const Config& cfg, bool fund_given, bool root_given) {
  const RootSystem rs(CartanType::parse(cfg.type));
  if (fund_given == root_given) throw InvalidArgument("give exactly one of --weight-fund and --weight-root");
  const Word word = parse_word(cfg.word, rs.rank());
  Weight lambda(rs.rank());
  if (fund_given) {
    const auto v = parse_ints(cfg.weight_fund, rs.rank(), "--weight-fund");
    lambda = Weight::from_span(v);
  } else {
    const auto v = parse_ints(cfg.weight_root, rs.rank(), "--weight-root");
    lambda = rs.from_root_coords(v);
  }
  const Character result = demazure_along_word(rs, word, Character::monomial(lambda));
  if (cfg.format == "json") {
    json root_coords = json::array();
    for (const auto& q : rs.root_coords(lambda)) root_coords.push_back(rational_str(q));
    json doc = {{"command", "demazure"},
                {"type", rs.type().name()},
                {"word", word_json(word)},
                {"weight", weight_json(lambda)},
                {"weight_root_coords", std::move(root_coords)},
                {"result", character_json(rs, result)},
                {"terms", result.size()},
                {"engine_version", kEngineVersion},
                {"labeling", labeling_json(rs)}};
    return {dump(doc)};
  }
  std::ostringstream os;
  os << "D" << format_word(word) << "(e^" << lambda.str() << ") = " << result.str(rs) << "\n"
     << "terms " << result.size() << "\n";
  return {os.str()};
}

Rendered render_report(const Report& r, const RootSystem& rs, const Config& cfg) {
  Rendered out;
  out.code = r.passed() ? kExitPass : kExitCounterexample;
  out.text = cfg.format == "json" ? dump(to_json(r, rs)) : render_table(r, rs);
  return out;
}

Rendered cmd_verify(const Config& cfg) {
  const RootSystem rs(CartanType::parse(cfg.type));
  if (cfg.alpha && cfg.check != "thm42") throw InvalidArgument("--alpha only applies to thm42");
  if (cfg.alpha && (*cfg.alpha < 1 || *cfg.alpha > rs.rank())) throw InvalidArgument("--alpha out of range");
  Config c = cfg;
  if (c.alpha) c.alpha = *c.alpha - 1;
  const WeylGroup g(rs);
  return render_report(run_check(c.check, g, c), rs, c);
}

Rendered cmd_sweep(const Config& cfg) {
  const RootSystem rs(CartanType::parse(cfg.type));
  const std::uint64_t order = rs.type().weyl_group_order();
  if (order > cfg.guard) {
    throw GuardExceeded("|W(" + rs.type().name() + ")| = " + std::to_string(order) + " exceeds the guard " +
                        std::to_string(cfg.guard) + " (raise --guard or SCHUBERT_GUARD)");
  }
  const WeylGroup g(rs);
  Report agg = timed("sweep", rs, [&](Report& rep) {
    json checks = json::array();
    for (const auto& id : applicable_checks(rs)) {
      Report r = run_check(id, g, cfg);
      rep.universe_size += r.universe_size;
      for (auto& c : r.counterexamples) {
        c.note = id + ": " + c.note;
        rep.counterexamples.push_back(c);
      }
      json sub = to_json(r, rs);
      sub.erase("labeling");
      sub.erase("engine_version");
      sub.erase("type");
      checks.push_back(std::move(sub));
    }
    rep.details = {{"checks", std::move(checks)}};
  });
  if (cfg.format == "json") return render_report(agg, rs, cfg);
  std::ostringstream os;
  os << "sweep " << rs.type().name() << "  [" << labels_line(rs) << "]  engine " << kEngineVersion << "\n";
  for (const auto& sub : agg.details["checks"]) {
    os << "  " << sub["check"].get<std::string>() << std::string(14 - sub["check"].get<std::string>().size(), ' ')
       << (sub["passed"].get<bool>() ? "pass" : "FAIL") << "  universe=" << sub["universe"].get<std::uint64_t>()
       << "  " << sub["elapsed_ms"].get<std::int64_t>() << " ms\n";
  }
  os << "passed " << (agg.passed() ? "yes" : "no") << "  total " << agg.elapsed.count() << " ms\n";
  for (const auto& c : agg.counterexamples) {
    os << "  w=" << format_word(c.element) << "  " << c.note << "\n    expected " << c.expected.dump()
       << "\n    actual   " << c.actual.dump() << "\n";
  }
  return {os.str(), agg.passed() ? kExitPass : kExitCounterexample};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert variety tangent-bundle cohomology verifier", "schubert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kEngineVersion);
  Config cfg;

  auto* roots = app.add_subcommand("roots", "Describe a root system");
  add_common(roots, cfg);

  auto* demazure = app.add_subcommand("demazure", "Apply Demazure operators along a word to e^lambda");
  add_common(demazure, cfg);
  demazure->add_option("--word", cfg.word, "1-based letters, e.g. 2,1; the last letter acts first")->required();
  auto* wf = demazure->add_option("--weight-fund", cfg.weight_fund, "Weight in fundamental-weight coordinates");
  auto* wr = demazure->add_option("--weight-root", cfg.weight_root, "Weight in simple-root coordinates");
  wf->excludes(wr);

  auto* verify = app.add_subcommand("verify", "Run one verification sweep");
  add_common(verify, cfg);
  verify->add_option("check", cfg.check, "Check identifier")->required()->check(CLI::IsMember(kChecks));
  verify->add_option("--alpha", cfg.alpha, "Restrict thm42 to one simple root (1-based)");

  auto* sweep = app.add_subcommand("sweep", "Run every applicable check");
  add_common(sweep, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Rendered result;
  try {
    if (roots->parsed()) result = cmd_roots(cfg);
    else if (demazure->parsed()) result = cmd_demazure(cfg, wf->count() > 0, wr->count() > 0);
    else if (verify->parsed()) result = cmd_verify(cfg);
    else result = cmd_sweep(cfg);
  } catch (const ApplicabilityError& e) {
    err << "not applicable: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out);
    if (!file || !(file << result.text)) {
      err << "error: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
  }
  return result.code;
}

}  // namespace schubert
