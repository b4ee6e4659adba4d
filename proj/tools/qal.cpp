// qal: command-line front end.
//
// Exit codes: 0 ok, 1 internal/resource error, 2 bad input or usage,
// 3 not certified (this diagram), 4 search budget exceeded, 5 a check failed.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qal/corpus.hpp"
#include "qal/families.hpp"
#include "qal/invariants.hpp"
#include "qal/obstructions.hpp"
#include "qal/qa.hpp"
#include "qal/report.hpp"

namespace {

using nlohmann::json;
using namespace qal;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kBadInput = 2;
constexpr int kNotCertified = 3;
constexpr int kBudget = 4;
constexpr int kCheckFailed = 5;

/// Raised for anything the user can fix: bad PD text, unknown fixture, ...
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string pd;
  std::string fixture;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option_group("input");
    g->add_option("--pd", pd, "inline PD code");
    g->add_option("--fixture", fixture, "built-in fixture name");
    g->add_option("--file", file, "corpus file (name: <PD> per line)");
    g->require_option(1);
  }

  std::vector<NamedDiagram> load() const {
    try {
      if (!pd.empty()) return {NamedDiagram{"input", parse_pd(pd), std::nullopt, std::nullopt}};
      if (!fixture.empty()) return {qal::fixture(fixture)};
      return load_corpus(file);
    } catch (const ParseError& e) {
      throw InputError(e.what());
    } catch (const std::out_of_range& e) {
      throw InputError(e.what());
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
  }
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json one_or_many(const std::vector<json>& items) { return items.size() == 1 ? items.front() : json(items); }

int cmd_jones(const InputOptions& in, bool as_json, bool det_only) {
  std::vector<json> out;
  for (const auto& e : in.load()) {
    const HalfLaurent v = jones(e.diagram);
    const std::int64_t det = determinant_of_jones(v);
    if (as_json) {
      json j = describe(e.diagram);
      j["name"] = e.name;
      j["jones"] = v;
      j["determinant"] = det;
      out.push_back(j);
    } else if (det_only) {
      std::cout << (in.file.empty() ? "" : e.name + ": ") << det << '\n';
    } else {
      std::cout << (in.file.empty() ? "" : e.name + ": ") << to_string(v) << "\ndet " << det << '\n';
    }
  }
  if (as_json) emit(one_or_many(out));
  return kOk;
}

int cmd_certify(const InputOptions& in, const SearchBudget& budget) {
  int code = kOk;
  std::vector<json> out;
  for (const auto& e : in.load()) {
    const CertifyResult r = certify(e.diagram, budget);
    json j = {{"name", e.name},
              {"input", to_pd(e.diagram)},
              {"outcome", to_string(r.status)},
              {"nodes_visited", r.nodes_visited}};
    if (r.certificate) j["certificate"] = *r.certificate;
    out.push_back(j);
    const int c = r.status == CertifyStatus::certified       ? kOk
                  : r.status == CertifyStatus::not_certified ? kNotCertified
                                                             : kBudget;
    code = std::max(code, c);
  }
  emit(one_or_many(out));
  return code;
}

int cmd_check(const InputOptions& in, const std::string& jones_override) {
  bool all_passed = true;
  std::vector<json> out;
  for (const auto& e : in.load()) {
    HalfLaurent v;
    if (!jones_override.empty()) {
      try {
        v = parse_laurent(jones_override);
      } catch (const std::invalid_argument& ex) {
        throw InputError(std::string("--jones: ") + ex.what());
      }
    } else {
      v = jones(e.diagram);
    }

    ObstructionRecord rec;
    try {
      lattice_coefficients(v);  // the alternation scan needs a single lattice
      const std::int64_t det = jones_override.empty() ? determinant(e.diagram) : determinant_of_jones(v);
      rec = audit_jones(v, det);
    } catch (const std::domain_error& ex) {
      throw InputError(std::string("check failed on ") + e.name + ": " + ex.what());
    } catch (const InvariantViolation& ex) {
      throw InputError(std::string("check failed on ") + e.name + ": " + ex.what());
    }

    json skein = json::array();
    bool skein_ok = true;
    if (jones_override.empty()) {
      for (int i = 0; i < e.diagram.crossing_count(); ++i) {
        const SkeinReport s = skein_check(e.diagram, i);
        skein_ok = skein_ok && s.holds;
        skein.push_back(s);
      }
    }
    const bool passed = rec.passed() && skein_ok;
    all_passed = all_passed && passed;
    out.push_back({{"name", e.name}, {"obstructions", rec}, {"skein", skein}, {"passed", passed}});
  }
  emit(one_or_many(out));
  return all_passed ? kOk : kCheckFailed;
}

int cmd_twist(const InputOptions& in, int crossing, int n, const std::string& axis) {
  std::optional<TwistAxis> chosen;
  if (axis == "parallel") chosen = TwistAxis::parallel;
  if (axis == "antiparallel") chosen = TwistAxis::antiparallel;
  std::vector<json> out;
  for (const auto& e : in.load()) {
    if (crossing < 0 || crossing >= e.diagram.crossing_count()) {
      throw InputError("crossing " + std::to_string(crossing) + " out of range for " + e.name);
    }
    json j = twist_family_audit(e.diagram, crossing, n, chosen);
    j["name"] = e.name;
    out.push_back(j);
  }
  emit(one_or_many(out));
  return kOk;
}

int cmd_enumerate(const std::string& corpus_path, int twists, std::optional<std::int64_t> det_filter,
                  const SearchBudget& budget, bool parallel) {
  std::vector<NamedDiagram> corpus;
  if (corpus_path.empty()) {
    corpus = builtin_fixtures();
  } else {
    try {
      corpus = load_corpus(corpus_path);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
  }
  if (twists > 0) {
    auto extra = twist_extensions(corpus, twists);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
  }
  Enumeration en = enumerate_classes(corpus, budget, parallel);
  if (det_filter) {
    std::erase_if(en.classes, [&](const ClassReport& r) { return r.determinant != *det_filter; });
  }
  emit(en);
  return kOk;
}

int cmd_fixtures(bool as_json) {
  bool all_match = true;
  json rows = json::array();
  for (const auto& f : builtin_fixtures()) {
    const HalfLaurent v = jones(f.diagram);
    const std::int64_t det = determinant_of_jones(v);
    const bool ok = (!f.expected_jones || *f.expected_jones == v) && (!f.expected_det || *f.expected_det == det);
    all_match = all_match && ok;
    if (as_json) {
      rows.push_back({{"name", f.name}, {"pd", to_pd(f.diagram)}, {"jones", v}, {"determinant", det}, {"matches", ok}});
    } else {
      std::cout << (ok ? "ok   " : "FAIL ") << f.name << "  det " << det << "  " << to_string(v) << '\n';
    }
  }
  if (as_json) emit(rows);
  return all_match ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones polynomials, determinants and quasi-alternating certificates from PD codes"};
  app.require_subcommand(1);

  InputOptions in;
  bool as_json = false;
  SearchBudget budget;
  std::string jones_override;
  int crossing = 0;
  int n = 5;
  std::string axis = "auto";
  std::string corpus_path;
  int twists = 0;
  std::optional<std::int64_t> det_filter;
  bool parallel = false;

  auto* jones_cmd = app.add_subcommand("jones", "print the Jones polynomial and determinant");
  in.attach(jones_cmd);
  jones_cmd->add_flag("--json", as_json, "emit JSON");

  auto* det_cmd = app.add_subcommand("det", "print the determinant");
  in.attach(det_cmd);
  det_cmd->add_flag("--json", as_json, "emit JSON");

  auto* certify_cmd = app.add_subcommand("certify", "search for a quasi-alternating certificate");
  in.attach(certify_cmd);
  certify_cmd->add_option("--max-nodes", budget.max_nodes, "search node budget")->check(CLI::PositiveNumber);
  certify_cmd->add_option("--max-depth", budget.max_depth, "search depth budget")->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "obstruction checks and skein identities");
  in.attach(check_cmd);
  check_cmd->add_option("--jones", jones_override, "check this polynomial instead of the computed one");

  auto* twist_cmd = app.add_subcommand("twist", "audit the twist family at a crossing");
  in.attach(twist_cmd);
  twist_cmd->add_option("--crossing", crossing, "crossing index")->check(CLI::NonNegativeNumber);
  twist_cmd->add_option("-n", n, "family length")->check(CLI::PositiveNumber);
  twist_cmd->add_option("--axis", axis, "parallel, antiparallel or auto")
      ->check(CLI::IsMember({"auto", "parallel", "antiparallel"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "group certified corpus entries by determinant");
  enum_cmd->add_option("--corpus", corpus_path, "corpus file (default: built-in fixtures)");
  enum_cmd->add_option("--twists", twists, "append this many twist-generated diagrams")->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--det", det_filter, "only report this determinant");
  enum_cmd->add_option("--max-nodes", budget.max_nodes, "search node budget")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--max-depth", budget.max_depth, "search depth budget")->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--parallel", parallel, "certify corpus entries concurrently");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "recompute the built-in fixtures against their tags");
  fixtures_cmd->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*jones_cmd) return cmd_jones(in, as_json, false);
    if (*det_cmd) return cmd_jones(in, as_json, true);
    if (*certify_cmd) return cmd_certify(in, budget);
    if (*check_cmd) return cmd_check(in, jones_override);
    if (*twist_cmd) return cmd_twist(in, crossing, n, axis);
    if (*enum_cmd) return cmd_enumerate(corpus_path, twists, det_filter, budget, parallel);
    if (*fixtures_cmd) return cmd_fixtures(as_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
