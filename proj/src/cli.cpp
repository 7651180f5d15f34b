#include "egh/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "egh/linkage.hpp"
#include "egh/macaulay.hpp"
#include "egh/verify.hpp"

namespace egh {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::optional<int> n;
  std::string d_text;
  std::optional<int> deg;
  std::optional<Count> value;
  std::string hf_path;
  std::string values_text;
  std::string ideal_path;
  bool quotient = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
  Count budget = default_box_budget;
  Count samples = 100;
  std::string extra_text;
};

struct Output {
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> text;
  int code = exit_ok;
};

// Fully resolved inputs shared by the commands.
class Context {
 public:
  Context(std::string command, const Options& o, std::ostream& err) : command_(std::move(command)), o_(o) {
    config_ = {{"command", command_}, {"format", o.format}};
    if (!o.hf_path.empty()) {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (o.hf_path != "-") {
        file.open(o.hf_path);
        if (!file) throw UsageError("cannot open " + o.hf_path);
        in = &file;
      }
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(*in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, o.hf_path + ": " + e.what());
      }
      hf_ = hf_from_json(j);
      config_["hf"] = o.hf_path;
    }
    if (!o.d_text.empty()) {
      bool sorted = false;
      d_ = parse_degree_sequence(o.d_text, true, &sorted);
      if (sorted) err << "warning: degree sequence sorted to " << to_string(*d_) << "\n";
    } else if (hf_ && !hf_->d.empty()) {
      d_ = DegreeSequence(hf_->d);
    }
    if (hf_ && d_ && !hf_->d.empty() && hf_->d != d_->entries() && command_ != "pipeline")
      throw UsageError("--d disagrees with the degree sequence in " + o.hf_path);
    if (o.n) {
      if (*o.n < 1) throw UsageError("--n must be positive");
      n_ = *o.n;
    } else if (hf_) {
      n_ = hf_->n;
    } else if (d_) {
      n_ = d_->h();
    }
    if (hf_ && n_ && hf_->n != *n_) throw UsageError("--n disagrees with n in " + o.hf_path);
    if (d_) config_["d"] = d_->entries();
    if (n_) config_["n"] = *n_;
  }

  const Options& options() const { return o_; }
  nlohmann::json& config() { return config_; }

  const DegreeSequence& d() const {
    if (!d_) throw UsageError("--d is required");
    return *d_;
  }
  RingContext ring() const {
    if (!n_) throw UsageError("--n is required");
    return RingContext(*n_);
  }
  Residue prime() {
    std::uint64_t p = default_prime;
    if (o_.prime) {
      p = *o_.prime;
    } else if (const char* env = std::getenv("EGH_PRIME")) {
      try {
        p = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("EGH_PRIME is not a number: ") + env);
      }
    }
    require_prime(p);
    config_["prime"] = p;
    return static_cast<Residue>(p);
  }

  /// Table from --hf or --values; --quotient applies to --values only.
  HilbertTable table() {
    if (hf_) return hf_->table;
    if (o_.values_text.empty()) throw UsageError("a table is required (--hf or --values)");
    std::vector<Count> values;
    std::stringstream ss(o_.values_text);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("--values entry '" + item + "' is not an integer");
      }
    }
    config_["values"] = values;
    config_["side"] = o_.quotient ? "quotient" : "ideal";
    return HilbertTable(ring(), o_.quotient ? Side::quotient : Side::ideal, std::move(values));
  }
  bool has_table() const { return hf_.has_value() || !o_.values_text.empty(); }

  MonomialIdeal ideal() {
    std::ifstream file(o_.ideal_path);
    if (!file) throw UsageError("cannot open " + o_.ideal_path);
    config_["ideal"] = o_.ideal_path;
    return parse_ideal(file, ring());
  }

 private:
  std::string command_;
  const Options& o_;
  nlohmann::json config_;
  std::optional<HfDocument> hf_;
  std::optional<DegreeSequence> d_;
  std::optional<int> n_;
};

std::string join(const std::vector<Count>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s;
}

nlohmann::json generators_json(const MonomialIdeal& I) {
  auto out = nlohmann::json::array();
  for (const auto& g : I.generators()) out.push_back(to_string(g));
  return out;
}

nlohmann::json lpp_json(const LppIdeal& L, const std::vector<int>& d) {
  return {{"generators", generators_json(L.generators())},
          {"lex_prefixes", L.lex_prefixes()},
          {"hf", hf_to_json(L.table(), d)}};
}

Output cmd_bound(Context& c) {
  const auto& o = c.options();
  if (!o.deg || !o.value) throw UsageError("bound needs --deg and --value");
  const auto ring = c.ring();
  const auto& d = c.d();
  const int j = *o.deg;
  if (j < 0) throw UsageError("--deg must be non-negative");
  const Count a = o.quotient ? ring.slice_dim(j) - *o.value : *o.value;
  c.config()["deg"] = j;
  c.config()["value"] = *o.value;
  c.config()["side"] = o.quotient ? "quotient" : "ideal";

  Output out;
  const Count mac = macaulay_min_ideal_growth(ring, j, a);
  const Count egh = egh_min_growth(ring, d, j, a);
  const std::string next = std::to_string(j + 1);
  out.result = {{"degree", j + 1}, {"egh_bound", egh}, {"macaulay_bound", mac}};
  out.text.push_back("EGH bound: HF(I;" + next + ") >= " + std::to_string(egh));
  out.text.push_back("Macaulay bound: HF(I;" + next + ") >= " + std::to_string(mac));
  if (o.quotient) {
    const Count dim = ring.slice_dim(j + 1);
    out.result["quotient_egh_bound"] = dim - egh;
    out.result["quotient_macaulay_bound"] = dim - mac;
    out.text.push_back("EGH bound: HF(S/I;" + next + ") <= " + std::to_string(dim - egh));
    out.text.push_back("Macaulay bound: HF(S/I;" + next + ") <= " + std::to_string(dim - mac));
  }
  return out;
}

Output cmd_lpp(Context& c) {
  const auto ring = c.ring();
  const auto& d = c.d();
  const auto t = c.table().to_side(Side::ideal);
  Output out;
  const auto r = lpp_from_table(ring, d, t);
  out.result["feasible"] = r.ideal.has_value();
  if (r) {
    out.result["lpp"] = lpp_json(*r.ideal, d.entries());
    out.text.push_back("LPP ideal: " + to_string(r.ideal->generators()));
    out.text.push_back("lex prefixes: " + join(r.ideal->lex_prefixes()));
    return out;
  }
  out.code = exit_infeasible;
  out.result["degree"] = r.failure->degree;
  out.result["reason"] = to_string(r.failure->reason);
  out.result["detail"] = r.failure->detail;
  out.text.push_back("no d-LPP ideal: degree " + std::to_string(r.failure->degree) + " (" +
                     std::string(to_string(r.failure->reason)) + ") " + r.failure->detail);
  return out;
}

Output cmd_egh_check(Context& c) {
  const auto ring = c.ring();
  const auto& d = c.d();
  const auto t = c.table().to_side(Side::ideal);
  Output out;
  const auto r = egh_check(ring, d, t);
  out.result["holds"] = r.holds;
  auto per_degree = nlohmann::json::array();
  for (int j = 0; j < t.jmax(); ++j) {
    const auto e = egh_j_check(ring, d, j, t.at(j), t.at(j + 1));
    per_degree.push_back({{"j", j}, {"holds", e.holds}, {"bound", e.bound}, {"reason", e.reason}});
  }
  out.result["egh_j"] = per_degree;
  if (r.holds) {
    out.result["witness"] = lpp_json(*r.witness, d.entries());
    out.text.push_back("EGH holds; witness " + to_string(r.witness->generators()));
    return out;
  }
  out.code = exit_infeasible;
  if (r.failure) {
    out.result["degree"] = r.failure->degree;
    out.result["reason"] = to_string(r.failure->reason);
    out.text.push_back("EGH fails at degree " + std::to_string(r.failure->degree) + " (" +
                       std::string(to_string(r.failure->reason)) + ") " + r.failure->detail);
  }
  return out;
}

void render_report(const VerificationReport& report, Output& out) {
  out.result = to_json(report, false);
  out.text.push_back("checked " + std::to_string(report.checked) + ", passed " + std::to_string(report.passed));
  if (report.resampled > 0) out.text.push_back("resampled " + std::to_string(report.resampled) + " irregular draws");
  for (const auto& f : report.failures)
    out.text.push_back("FAILURE " + f.kind + (f.degree ? " at degree " + std::to_string(*f.degree) : "") + ": " +
                       f.ideal.dump() + " table " + join(f.table));
  if (!report.failures.empty()) out.code = exit_verification_failure;
}

Output cmd_verify_monomial(Context& c) {
  const auto& o = c.options();
  c.config()["budget"] = o.budget;
  if (c.options().n && *c.options().n != c.d().h()) throw UsageError("verify-monomial needs n = h");
  Output out;
  render_report(verify_egh_monomial(c.d(), o.jobs, o.budget), out);
  return out;
}

std::vector<std::vector<int>> parse_extra(const std::string& text, const DegreeSequence& d) {
  if (text.empty()) return default_extra_degree_sets(d);
  if (text == "none") return {{}};
  std::vector<std::vector<int>> sets;
  std::stringstream ss(text);
  for (std::string group; std::getline(ss, group, ';');) {
    std::vector<int> set;
    std::stringstream gs(group);
    for (std::string item; std::getline(gs, item, ',');) {
      try {
        std::size_t used = 0;
        set.push_back(std::stoi(item, &used));
        if (used != item.size() || set.back() < 1) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("--extra entry '" + item + "' is not a positive degree");
      }
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

Output cmd_verify_random(Context& c) {
  const auto& o = c.options();
  if (o.samples < 0) throw UsageError("--samples must be non-negative");
  RandomCampaign campaign{c.d(), parse_extra(o.extra_text, c.d()), c.prime(), o.samples, o.seed};
  c.config()["samples"] = o.samples;
  c.config()["seed"] = o.seed;
  c.config()["extra"] = campaign.extra_degree_sets;
  Output out;
  render_report(verify_egh_random(c.ring(), campaign, o.jobs), out);
  return out;
}

Output cmd_linkage(Context& c) {
  const auto& o = c.options();
  const auto ring = c.ring();
  const auto& d = c.d();
  const int s = socle_degree(d);
  Output out;
  if (!o.ideal_path.empty()) {
    const auto Q = c.ideal();
    const auto r = monomial_link_check(ring, d, Q);
    out.result = {{"holds", r.holds}, {"linked", hf_to_json(r.linked, d.entries())}};
    out.result["failed_degree"] = r.failed_degree ? nlohmann::json(*r.failed_degree) : nlohmann::json(nullptr);
    out.text.push_back("J = (x^d) : Q has HF(S/J) = " + join(r.linked.values()));
    out.text.push_back(r.holds ? "linkage duality holds on [0, " + std::to_string(s) + "]"
                               : "linkage duality FAILS at degree " + std::to_string(*r.failed_degree));
    if (!r.holds) out.code = exit_verification_failure;
    return out;
  }
  const auto q = c.table().to_side(Side::quotient);
  const auto J = linked_table({ci_hilbert_table(ring, d, s), q, s});
  out.result = {{"linked", hf_to_json(J, d.entries())}};
  out.text.push_back("HF(S/J) = " + join(J.values()));
  return out;
}

// One-line summary; returns the ids of the failed checks.
std::vector<std::string> pipeline_summary_line(const PipelineTrace& t, std::string& line) {
  std::vector<std::string> failed;
  for (const auto& ch : t.checks)
    if (!ch.passed) failed.push_back(ch.id);
  line = "branch " + std::string(to_string(t.branch)) + ", u = " + (t.u ? to_string(*t.u) : "-") + ", growth " +
         std::to_string(t.growth);
  if (!failed.empty()) {
    line += ", failed:";
    for (const auto& f : failed) line += " " + f;
  }
  return failed;
}

Output cmd_pipeline(Context& c) {
  const auto& o = c.options();
  const auto& d = c.d();
  if (c.options().n && *c.options().n != d.h()) throw UsageError("pipeline needs n = h");
  const RingContext ring(d.h());
  if (!pipeline_gate(d))
    throw Error(Errc::precondition, "d_n = sum_{i<n}(d_i - 1) fails for " + to_string(d));
  const int dn = d.back();
  const std::vector<int> dprime(d.entries().begin(), d.entries().end() - 1);
  Output out;

  auto run_one = [&](const LppIdeal& L1) {
    const auto t = socle_pipeline(ring, d, L1);
    out.result = to_json(t);
    std::string line;
    pipeline_summary_line(t, line);
    out.text.push_back(line);
    for (const auto& ch : t.checks)
      out.text.push_back(std::string(ch.passed ? "[PASS] " : "[FAIL] ") + ch.id + ": " + ch.identity +
                         (ch.detail.empty() ? "" : " (" + ch.detail + ")"));
    if (!t.passed()) out.code = exit_verification_failure;
  };

  if (!o.ideal_path.empty()) {
    const auto Q = c.ideal();
    std::vector<int> g = dprime;
    g.push_back(dn - 1);
    const auto J = colon(MonomialIdeal::pure_powers(ring, g), Q);
    const auto L1 = lpp_from_table(ring, dprime, hilbert_table(J, 2 * dn - 2));
    if (!L1) throw Error(Errc::infeasible_value, "no d'-LPP ideal has the Hilbert function of (x^d'') : Q");
    run_one(*L1.ideal);
    return out;
  }
  if (c.has_table()) {
    const auto t = c.table().to_side(Side::ideal);
    const auto L1 = lpp_from_table(ring, dprime, t);
    if (!L1)
      throw Error(Errc::infeasible_value,
                  "no d'-LPP ideal has this table (degree " + std::to_string(L1.failure->degree) + ")");
    run_one(*L1.ideal);
    return out;
  }

  c.config()["budget"] = o.budget;
  const auto inputs = admissible_pipeline_inputs(ring, d, static_cast<std::size_t>(o.budget));
  auto traces = nlohmann::json::array();
  std::map<std::string, int> branches, failures;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto t = socle_pipeline(ring, d, inputs[i].l1);
    auto j = to_json(t);
    j["q"] = to_string(inputs[i].q);
    traces.push_back(std::move(j));
    ++branches[std::string(to_string(t.branch))];
    std::string line;
    for (const auto& f : pipeline_summary_line(t, line)) ++failures[f];
    out.text.push_back("#" + std::to_string(i) + " Q = " + to_string(inputs[i].q) + ": " + line);
  }
  out.result = {{"instances", inputs.size()}, {"branches", branches}, {"failed_checks", failures}, {"traces", traces}};
  out.text.push_back(std::to_string(inputs.size()) + " admissible inputs");
  for (const auto& [b, k] : branches) out.text.push_back("branch " + b + ": " + std::to_string(k));
  for (const auto& [id, k] : failures) out.text.push_back("check " + id + " failed " + std::to_string(k) + " times");
  if (!failures.empty()) out.code = exit_verification_failure;
  return out;
}

Output cmd_coverage(Context& c) {
  const auto r = coverage_classify(c.d());
  Output out;
  out.result = to_json(r);
  std::string labels;
  for (const auto& l : r.labels) labels += (labels.empty() ? "" : ", ") + l;
  out.text.push_back("labels: " + labels);
  out.text.push_back("strongest: " + r.strongest);
  return out;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::invalid_input:
    case Errc::invalid_degree_sequence:
    case Errc::dimension_mismatch:
      return exit_usage;
    default:
      return exit_infeasible;
  }
}

}  // namespace

nlohmann::json hf_to_json(const HilbertTable& table, const std::vector<int>& d) {
  nlohmann::json hf = nlohmann::json::object();
  for (int j = 0; j <= table.jmax(); ++j) hf[std::to_string(j)] = table.at(j);
  return {{"n", table.ring().n()}, {"d", d}, {"side", to_string(table.side())}, {"hf", hf}};
}

HfDocument hf_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw Error(Errc::parse_error, "n must be positive");
    std::vector<int> d = j.contains("d") ? j.at("d").get<std::vector<int>>() : std::vector<int>{};
    const auto side_text = j.value("side", std::string("ideal"));
    if (side_text != "ideal" && side_text != "quotient") throw Error(Errc::parse_error, "side must be ideal or quotient");
    std::map<int, Count> entries;
    for (const auto& [key, value] : j.at("hf").items()) {
      std::size_t used = 0;
      const int deg = std::stoi(key, &used);
      if (used != key.size() || deg < 0) throw Error(Errc::parse_error, "bad degree key '" + key + "'");
      entries[deg] = value.get<Count>();
    }
    std::vector<Count> values;
    for (const auto& [deg, value] : entries) {
      if (deg != static_cast<int>(values.size())) throw Error(Errc::parse_error, "hf degrees must be 0..jmax without gaps");
      values.push_back(value);
    }
    return {n, std::move(d),
            HilbertTable(RingContext(n), side_text == "ideal" ? Side::ideal : Side::quotient, std::move(values))};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("hf document: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(Errc::parse_error, std::string("hf document: ") + e.what());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions, lex-plus-power ideals and EGH verification", "egh"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_d) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--n", o.n, "number of variables (default h)");
    auto* d = sub->add_option("--d", o.d_text, "degree sequence, e.g. 4,5,7");
    if (needs_d) d->required();
  };
  auto add_table = [&](CLI::App* sub) {
    sub->add_option("--hf", o.hf_path, "Hilbert table JSON file ('-' for stdin)");
    sub->add_option("--values", o.values_text, "Hilbert table inline, degrees 0..jmax");
    sub->add_flag("--quotient", o.quotient, "--values and --value are quotient-side");
  };

  auto* bound = app.add_subcommand("bound", "EGH and Macaulay lower bounds for HF(I; deg + 1)");
  add_common(bound, true);
  bound->add_option("--deg", o.deg, "degree j")->required();
  bound->add_option("--value", o.value, "HF(I; j)")->required();
  bound->add_flag("--quotient", o.quotient, "--value is HF(S/I; j)");

  auto* lpp = app.add_subcommand("lpp", "d-LPP ideal with a given Hilbert table");
  add_common(lpp, false);
  add_table(lpp);

  auto* check = app.add_subcommand("egh-check", "does a d-LPP ideal share this Hilbert table");
  add_common(check, false);
  add_table(check);

  auto* vmono = app.add_subcommand("verify-monomial", "EGH over every monomial ideal containing (x^d)");
  add_common(vmono, true);
  vmono->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  vmono->add_option("--budget", o.budget, "box cell budget")->check(CLI::PositiveNumber);

  auto* vrand = app.add_subcommand("verify-random", "EGH on random ideals over GF(p)");
  add_common(vrand, true);
  vrand->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  vrand->add_option("--seed", o.seed, "campaign seed");
  vrand->add_option("--prime", o.prime, "field size (default $EGH_PRIME or 32003)");
  vrand->add_option("--samples", o.samples, "sample count");
  vrand->add_option("--extra", o.extra_text, "extra form degrees: sets separated by ';', or 'none'");

  auto* link = app.add_subcommand("linkage", "Hilbert function of J = (x^d) : Q");
  add_common(link, true);
  add_table(link);
  link->add_option("--ideal,--q", o.ideal_path, "monomial ideal file, one generator per line");

  auto* pipe = app.add_subcommand("pipeline", "construction chain of the socle-degree argument");
  add_common(pipe, true);
  add_table(pipe);
  pipe->add_option("--ideal,--q", o.ideal_path, "monomial Q; L1 comes from (x^d'') : Q");
  pipe->add_option("--budget", o.budget, "limit on enumerated choices")->check(CLI::PositiveNumber);

  auto* cover = app.add_subcommand("coverage", "known theorems covering d");
  add_common(cover, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return exit_usage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Context ctx(command, o, err);
    Output result;
    if (command == "bound") result = cmd_bound(ctx);
    else if (command == "lpp") result = cmd_lpp(ctx);
    else if (command == "egh-check") result = cmd_egh_check(ctx);
    else if (command == "verify-monomial") result = cmd_verify_monomial(ctx);
    else if (command == "verify-random") result = cmd_verify_random(ctx);
    else if (command == "linkage") result = cmd_linkage(ctx);
    else if (command == "pipeline") result = cmd_pipeline(ctx);
    else result = cmd_coverage(ctx);

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const nlohmann::json runtime{{"jobs", o.jobs}, {"elapsed_ms", ms}};
    if (o.format == "json") {
      out << nlohmann::json{{"config", ctx.config()}, {"result", result.result}, {"runtime", runtime}}.dump(2) << "\n";
    } else {
      out << "# config " << ctx.config().dump() << "\n";
      for (const auto& line : result.text) out << line << "\n";
    }
    return result.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << sub->help();
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace egh
