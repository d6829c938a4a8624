#include "coprod/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>

#include "coprod/centralizer.hpp"
#include "coprod/order.hpp"
#include "coprod/syntax.hpp"
#include "coprod/verify.hpp"

namespace coprod::cli {

namespace {

constexpr std::size_t kMaxLetters = 256;
constexpr std::size_t kWitnessesShown = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::size_t nx = 2;
  std::size_t ny = 2;
  std::string field = "q";
  std::uint64_t seed = 1;
  std::size_t max_degree = 4;
  std::size_t trials = 100;
  std::string lemma = "all";
  std::string format = "text";
  bool negative_control = false;
  std::string config;
};

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value.front() == '-') {
    throw UsageError(key + ": expected a non-negative integer, got '" + value + "'");
  }
  return n;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// "key = value" lines; '#' starts a comment. Values only fill settings whose
// flag was not given on the command line.
void apply_config(Settings& s, const std::map<std::string, CLI::Option*>& flags, bool& seed_set) {
  std::ifstream in(s.config);
  if (!in) throw UsageError("cannot read config file '" + s.config + "'");
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(s.config + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto flag = flags.find(key);
    if (flag == flags.end()) throw UsageError(s.config + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (flag->second->count() > 0) continue;
    if (key == "nx") s.nx = parse_unsigned(key, value);
    else if (key == "ny") s.ny = parse_unsigned(key, value);
    else if (key == "field") s.field = value;
    else if (key == "seed") s.seed = parse_unsigned(key, value), seed_set = true;
    else if (key == "max-degree") s.max_degree = parse_unsigned(key, value);
    else if (key == "trials") s.trials = parse_unsigned(key, value);
    else if (key == "lemma") s.lemma = value;
    else if (key == "format") s.format = value;
  }
}

const char* ordering_name(std::strong_ordering o) {
  if (o < 0) return "LT";
  if (o > 0) return "GT";
  return "EQ";
}

Json dims_json(const std::vector<std::size_t>& dims) {
  Json out = Json::array();
  for (auto d : dims) out.push_back(d);
  return out;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out + "]";
}

void print_check_text(const CheckReport& r, std::ostream& out) {
  out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": trials=" << r.trials << " passed=" << r.passed
      << " not_applicable=" << r.not_applicable << " failures=" << r.failures.size() << "\n";
  for (std::size_t i = 0; i < std::min(r.failures.size(), kWitnessesShown); ++i) {
    out << "  " << r.failures[i].what << ": " << r.failures[i].witness.dump() << "\n";
  }
  if (r.failures.size() > kWitnessesShown) {
    out << "  ... " << r.failures.size() - kWitnessesShown << " more\n";
  }
}

struct Outcome {
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<CheckReport> checks;
  std::string text;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact arithmetic and centralizer computations in k<X> * k[Y]", "coprod"};
  app.require_subcommand(1);
  std::map<std::string, CLI::Option*> flags;
  flags["nx"] = app.add_option("--nx", s.nx, "Noncommuting variables x1..xN")->capture_default_str();
  flags["ny"] = app.add_option("--ny", s.ny, "Commuting variables y1..yN")->capture_default_str();
  flags["field"] = app.add_option("--field", s.field, "Coefficient field: q or gf:P")->capture_default_str();
  flags["seed"] = app.add_option("--seed", s.seed, std::string("Master seed (default from ") + kSeedVariable + ", else 1)");
  flags["max-degree"] =
      app.add_option("--max-degree", s.max_degree, "Degree / word-length bound")->capture_default_str();
  flags["trials"] = app.add_option("--trials", s.trials, "Random trials per campaign")->capture_default_str();
  flags["lemma"] = app.add_option("--lemma", s.lemma, "Campaign name or 'all'")->capture_default_str();
  flags["format"] = app.add_option("--format", s.format, "text or structured")
                        ->check(CLI::IsMember({"text", "structured"}))
                        ->capture_default_str();
  app.add_option("--config", s.config, "File of 'key = value' lines; flags take precedence");
  app.add_flag("--negative-control", s.negative_control, "verify: feed corrupted conclusions to every checker");

  std::string element_text;
  auto* normalize = app.add_subcommand("normalize", "Print an element in canonical form");
  normalize->add_option("element", element_text)->required();

  std::vector<std::string> factors;
  auto* mul = app.add_subcommand("mul", "Multiply two or more elements");
  mul->add_option("factors", factors)->required();

  std::string lhs;
  std::string rhs;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two words in the total order (LT, EQ, GT)");
  compare_cmd->add_option("u", lhs)->required();
  compare_cmd->add_option("v", rhs)->required();

  auto* commute = app.add_subcommand("commute", "Test whether two elements commute");
  commute->add_option("a", lhs)->required();
  commute->add_option("b", rhs)->required();

  std::string u_text;
  auto* centralizer = app.add_subcommand("centralizer", "Graded centralizer basis up to --max-degree");
  centralizer->add_option("u,--u", u_text, "The element u (flag or positional)")->required();

  auto* verify = app.add_subcommand("verify", "Run lemma and theorem campaigns");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  Outcome o;
  std::string command;
  try {
    bool seed_set = flags["seed"]->count() > 0;
    if (!s.config.empty()) apply_config(s, flags, seed_set);
    if (!seed_set) {
      if (const char* env = std::getenv(kSeedVariable); env != nullptr && *env != '\0') {
        s.seed = parse_unsigned(kSeedVariable, env);
      }
    }
    if (s.format != "text" && s.format != "structured") throw UsageError("format must be text or structured");
    if (s.nx > kMaxLetters || s.ny > kMaxLetters) throw UsageError("too many variables");

    const auto field = FieldSpec::parse(s.field);
    const auto alphabet = Alphabet::standard(s.nx, s.ny);
    auto element = [&](const std::string& text) { return parse_element(alphabet, field, text); };
    o.inputs["nx"] = s.nx;
    o.inputs["ny"] = s.ny;
    o.inputs["field"] = field.to_string();

    if (normalize->parsed()) {
      command = "normalize";
      o.inputs["element"] = element_text;
      o.results["element"] = format_element(element(element_text));
      o.text = o.results["element"].get<std::string>() + "\n";
    } else if (mul->parsed()) {
      command = "mul";
      if (factors.size() < 2) throw UsageError("mul needs at least two factors");
      o.inputs["factors"] = factors;
      auto product = element(factors.front());
      for (std::size_t i = 1; i < factors.size(); ++i) product = multiply(product, element(factors[i]));
      o.results["product"] = format_element(product);
      o.text = o.results["product"].get<std::string>() + "\n";
    } else if (compare_cmd->parsed()) {
      command = "compare";
      o.inputs["u"] = lhs;
      o.inputs["v"] = rhs;
      const char* ord = ordering_name(compare(parse_word(alphabet, lhs), parse_word(alphabet, rhs)));
      o.results["ordering"] = ord;
      o.text = std::string(ord) + "\n";
    } else if (commute->parsed()) {
      command = "commute";
      o.inputs["a"] = lhs;
      o.inputs["b"] = rhs;
      const auto c = commutator(element(lhs), element(rhs));
      o.results["commutes"] = c.is_zero();
      o.results["commutator"] = format_element(c);
      o.text = std::string(c.is_zero() ? "commute" : "do not commute") + "\n[a,b] = " + format_element(c) + "\n";
    } else if (centralizer->parsed()) {
      command = "centralizer";
      const auto u = element(u_text);
      o.inputs["u"] = format_element(u);
      o.inputs["max_degree"] = s.max_degree;
      const auto gb = centralizer_basis(u, s.max_degree);
      o.results["dims"] = dims_json(gb.dims());
      Json basis = Json::array();
      o.text = "dims " + dims_text(gb.dims()) + "\n";
      for (const auto& slice : gb.per_degree) {
        for (const auto& e : slice.new_elements) {
          basis.push_back(Json{{"degree", slice.degree}, {"element", format_element(e)}});
          o.text += "  degree " + std::to_string(slice.degree) + ": " + format_element(e) + "\n";
        }
      }
      o.results["basis"] = std::move(basis);
      o.checks.push_back(check_pairwise_commutes(gb));
    } else if (verify->parsed()) {
      command = "verify";
      verify::TrialConfig cfg;
      cfg.nx = s.nx;
      cfg.ny = s.ny;
      cfg.field = field;
      cfg.max_length = s.max_degree;
      cfg.element_degree = std::min<std::size_t>(3, s.max_degree);
      cfg.trials = s.trials;
      cfg.seed = s.seed;
      cfg.validate();
      std::vector<std::string> names;
      if (s.lemma == "all") {
        names = verify::campaign_names();
      } else if (std::ranges::find(verify::campaign_names(), s.lemma) != verify::campaign_names().end()) {
        names = {s.lemma};
      } else {
        std::string known;
        for (const auto& n : verify::campaign_names()) known += " " + n;
        throw UsageError("unknown lemma '" + s.lemma + "'; known:" + known + " all");
      }
      o.inputs["max_degree"] = s.max_degree;
      o.inputs["trials"] = s.trials;
      o.inputs["lemma"] = s.lemma;
      o.inputs["negative_control"] = s.negative_control;
      const auto hooks = s.negative_control ? verify::CheckHooks::corrupted() : verify::CheckHooks{};
      for (const auto& name : names) o.checks.push_back(verify::run_campaign(name, cfg, hooks));
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at position " << e.position() << ")\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const bool ok = std::ranges::all_of(o.checks, [](const CheckReport& r) { return r.ok(); });
  if (s.format == "structured") {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["inputs"] = std::move(o.inputs);
    doc["results"] = std::move(o.results);
    Json checks = Json::array();
    for (const auto& r : o.checks) checks.push_back(r.to_json(kWitnessesShown));
    doc["checks"] = std::move(checks);
    doc["seed"] = s.seed;
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
    for (const auto& r : o.checks) print_check_text(r, out);
    if (!o.checks.empty()) {
      const auto failed = std::ranges::count_if(o.checks, [](const CheckReport& r) { return !r.ok(); });
      out << (ok ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
    }
  }
  return ok ? kSuccess : kCheckFailure;
}

}  // namespace coprod::cli
