#include "mm/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "mm/report.hpp"

namespace mm {

namespace {

struct Options {
  std::string command;
  std::string problem;
  std::string type;
  std::optional<std::uint64_t> seed;
  std::optional<int> base0;
  std::optional<int> window;
  std::optional<int> retries;
  std::string json_path;
  bool all = false;
  bool serial = false;
  bool pretty = false;
  int d = 2;
  std::string t = "1";
  std::string J;
  std::string H;
  std::string quotient;
  int count = 50;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  try {
    return parse_type(text);
  } catch (const Error&) {
    throw Error(ErrorCode::kInput, std::string("bad ") + what + " list '" + text + "'");
  }
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {}

  Json run(int& status) {
    const auto& c = o_.command;
    if (c == "free") return free_command();
    if (c == "difftest") return difftest(status);
    load();
    if (c == "table") return to_json(table());
    if (c == "mixed") return to_json(mixed_multiplicities(table()));
    if (c == "fc") return fc(status);
    if (c == "verify") return verify(status);
    if (c == "hsm") return hsm();
    throw Error(ErrorCode::kInput, "unknown command '" + c + "'");
  }

 private:
  void load() {
    if (o_.problem.empty()) throw Error(ErrorCode::kInput, "command '" + o_.command + "' needs a problem file");
    pf_ = read_problem_file(o_.problem);
    loaded_.emplace(build_instance(*pf_));
  }
  const ProblemInstance& P() const { return loaded_->instance; }

  std::uint64_t seed() const { return o_.seed.value_or(pf_ && pf_->seed ? *pf_->seed : 0); }
  int retries() const { return o_.retries.value_or(pf_ && pf_->retries ? *pf_->retries : 5); }

  TableOptions table_options() const {
    TableOptions t;
    t.base0 = o_.base0 ? o_.base0 : (pf_ ? pf_->base0 : std::nullopt);
    t.window = o_.window ? o_.window : (pf_ ? pf_->window : std::nullopt);
    t.execution = o_.serial ? Execution::kSerial : Execution::kParallel;
    return t;
  }

  HilbertTable table() { return build_table(P(), table_options()); }

  std::vector<int> required_type() const {
    if (o_.type.empty()) throw Error(ErrorCode::kInput, "--type is required");
    return parse_int_list(o_.type, "type");
  }

  Json fc(int& status) {
    auto k = required_type();
    auto T = table();
    Json j;
    j["type"] = type_label(k);
    try {
      j["sequence"] = to_json(build_sequence(P(), k, {seed(), retries(), T.base, 1}));
    } catch (const SearchFailure& f) {
      j = error_json(f);
      j["partial"] = to_json(f.record());
      status = 3;
    }
    return j;
  }

  Json verify(int& status) {
    auto T = table();
    std::vector<std::vector<int>> types;
    if (o_.all) {
      types = mixed_types(T.dims, T.ell - 1);
    } else {
      types.push_back(required_type());
    }
    Json j;
    j["ell"] = T.ell;
    j["base"] = T.base;
    Json results = Json::array();
    bool unequal = false, inconclusive = false;
    for (const auto& k : types) {
      auto r = verify_theorem43(P(), T, k, seed(), retries());
      unequal = unequal || r.status == VerifyStatus::kUnequal;
      inconclusive = inconclusive || r.status == VerifyStatus::kInconclusive;
      results.push_back(to_json(r));
    }
    j["results"] = std::move(results);
    status = unequal ? 2 : inconclusive ? 3 : 0;
    return j;
  }

  Json hsm() {
    const auto& ring = loaded_->ring;
    Ideal J = o_.J.empty() ? P().J() : Ideal(ring, parse_generator_list(ring, o_.J));
    Ideal H(ring, parse_generator_list(ring, o_.H));
    return to_json(hilbert_samuel(P().model(), J, H));
  }

  Json free_command() {
    std::optional<LocalRingModel> A;
    std::optional<Ideal> J;
    if (!o_.problem.empty()) {
      load();
      A.emplace(P().model());
      J.emplace(o_.J.empty() ? P().J() : Ideal(loaded_->ring, parse_generator_list(loaded_->ring, o_.J)));
    } else {
      if (o_.d < 1 || o_.d > static_cast<int>(kMaxVars)) throw Error(ErrorCode::kInput, "--d must be between 1 and 8");
      std::vector<std::string> names;
      for (int i = 0; i < o_.d; ++i) names.push_back(o_.d <= 3 ? std::string(1, "xyz"[i]) : "y" + std::to_string(i + 1));
      auto ring = RingContext::make(names);
      A.emplace(LocalRingModel::regular(ring));
      if (o_.J.empty()) {
        std::vector<Polynomial> vars;
        for (int i = 0; i < o_.d; ++i) vars.push_back(Polynomial::variable(ring, i));
        J.emplace(ring, vars);
      } else {
        J.emplace(ring, parse_generator_list(ring, o_.J));
      }
    }
    FreeAlgebraSpec spec{*A, *J, parse_int_list(o_.t, "t")};
    TableOptions opts;
    opts.base0 = o_.base0;
    opts.window = o_.window;
    Json j = to_json(free_algebra_report(spec, opts).report);
    if (!o_.quotient.empty()) {
      auto dirs = parse_int_list(o_.quotient, "quotient");
      j["sequence"] = to_json(free_algebra_sequence(spec, dirs, opts));
    }
    return j;
  }

  Json difftest(int& status) {
    if (o_.count < 0) throw Error(ErrorCode::kInput, "--count must be non-negative");
    auto d = run_difftest(o_.count, o_.seed.value_or(0), o_.base0.value_or(2), o_.window.value_or(2),
                          o_.serial ? Execution::kSerial : Execution::kParallel);
    status = d.mismatches.empty() ? 0 : 2;
    return to_json(d);
  }

  const Options& o_;
  std::optional<ProblemFile> pf_;
  std::optional<LoadedProblem> loaded_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mixed multiplicities of ideal families", "mm"};
  app.add_option("command", o.command, "table | mixed | fc | verify | hsm | free | difftest")
      ->required()
      ->check(CLI::IsMember({"table", "mixed", "fc", "verify", "hsm", "free", "difftest"}));
  app.add_option("problem", o.problem, "problem file");
  app.add_option("--type", o.type, "mixed type k0,k1,...");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--base0", o.base0, "initial grid base");
  app.add_option("--window", o.window, "grid window");
  app.add_option("--retries", o.retries, "candidate seeds per sequence step");
  app.add_option("--json", o.json_path, "also write the report to this file");
  app.add_flag("--all", o.all, "verify every type");
  app.add_flag("--serial", o.serial, "evaluate grids without threads");
  app.add_flag("--pretty", o.pretty, "indent the JSON output");
  app.add_option("--d", o.d, "free: dimension of the regular base ring");
  app.add_option("--t", o.t, "free: variables per direction t1,t2,...");
  app.add_option("--J", o.J, "generators of J, comma separated");
  app.add_option("--H", o.H, "hsm: generators of H, comma separated");
  app.add_option("--quotient", o.quotient, "free: directions to quotient by, in order");
  app.add_option("--count", o.count, "difftest: number of instances");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("INPUT_ERROR", e.what()).dump() << "\n";
    return 1;
  }

  int status = 0;
  Json result;
  try {
    Session session(o);
    result = session.run(status);
  } catch (const StabilizationFailure& e) {
    result = error_json(e);
    result["table"] = to_json(e.table());
    status = exit_code_for(e.code());
  } catch (const Error& e) {
    result = error_json(e);
    status = exit_code_for(e.code());
  } catch (const std::exception& e) {
    result = error_json("INTERNAL_INCONSISTENCY", e.what());
    status = 2;
  }
  const std::string text = o.pretty ? result.dump(2) : result.dump();
  out << text << "\n";
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) {
      err << "cannot write " << o.json_path << "\n";
      return status == 0 ? 1 : status;
    }
    f << text << "\n";
  }
  return status;
}

}  // namespace mm
