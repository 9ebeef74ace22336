// duo_cli: validate bimonoid documents, diagnose the Hopf conditions, print
// antipodes, and run the identity self-test suites.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "document.hpp"
#include "report.hpp"

namespace {

using duo::cli::json;

enum Exit { kPass = 0, kFail = 1, kInput = 2, kInternal = 3 };

struct Options {
  std::string file;
  std::string backend_override;
  std::vector<std::string> features;
  std::string json_path;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;
  bool samples_set = false;
  bool seed_set = false;
  bool quiet = false;

  bool weak_models() const {
    for (const auto& f : features)
      if (f == "weak-models") return true;
    return false;
  }
};

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Options& o, const json& report) {
  if (!o.quiet) std::cout << duo::cli::render_text(report);
  if (o.json_path.empty()) return;
  if (o.json_path == "-") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(o.json_path);
  if (!out) throw duo::cli::DocumentError("", "cannot write '" + o.json_path + "'");
  out << report.dump(2) << "\n";
}

duo::cli::Loaded load(const Options& o, duo::cli::InputDocument& doc) {
  doc = duo::cli::read_document(o.file);
  return duo::cli::load_model(doc, {o.backend_override, o.weak_models()});
}

int cmd_validate(const Options& o) {
  duo::cli::InputDocument doc;
  try {
    auto m = load(o, doc);
    json r = std::visit([](const auto& x) { return duo::cli::model_header("validate", x); }, m);
    r["valid"] = true;
    r["timing"] = json::object();
    emit(o, r);
    return kPass;
  } catch (const duo::cli::AxiomError& e) {
    json r = {{"format", duo::cli::kReportFormat}, {"command", "validate"}, {"bimonoid", doc.name},
              {"backend", o.backend_override.empty() ? doc.backend : o.backend_override},
              {"n", doc.n.value_or(1)}, {"valid", false}, {"error", e.what()}, {"pointer", e.pointer()},
              {"timing", json::object()}};
    emit(o, r);
    return kFail;
  }
}

int cmd_diagnose(const Options& o) {
  duo::cli::InputDocument doc;
  auto m = load(o, doc);
  const std::size_t samples = o.samples_set ? o.samples : doc.samples.value_or(o.samples);
  const std::uint64_t seed = o.seed_set ? o.seed : doc.seed.value_or(o.seed);
  return std::visit(
      [&]<class B>(const duo::cli::LoadedModel<B>& x) {
        auto t0 = std::chrono::steady_clock::now();
        duo::Diagnoser<B> dg(x.engine->E);
        auto report = dg.diagnose(x.b, samples, seed);
        json r = duo::cli::diagnose_json(x, report, millis_since(t0));
        emit(o, r);
        return report.all_hold() ? kPass : kFail;
      },
      m);
}

int cmd_antipode(const Options& o) {
  duo::cli::InputDocument doc;
  auto m = load(o, doc);
  return std::visit(
      [&](const auto& x) {
        auto t0 = std::chrono::steady_clock::now();
        auto res = x.engine->E.antipode_solve(x.b);
        json r = duo::cli::model_header("antipode", x);
        r["exists"] = res.antipode.has_value();
        r["antipode"] = res.antipode ? duo::cli::antipode_json(x, *res.antipode) : json(nullptr);
        r["witness"] = res.witness ? duo::cli::witness_json(*res.witness, x.engine->E.hopf_map(x.b), duo::cli::namer_for(x))
                                   : json(nullptr);
        r["timing"] = {{"antipode_ms", millis_since(t0)}};
        emit(o, r);
        return res.antipode ? kPass : kFail;
      },
      m);
}

int cmd_selftest(const Options& o) {
  std::vector<std::string> suites = o.suites.empty() ? duo::suite_names() : o.suites;
  std::vector<std::string> backends;
  if (!o.backend_override.empty()) {
    if (o.backend_override == "gvec-weak" && !o.weak_models())
      throw duo::cli::DocumentError("", "the gvec-weak backend is gated; pass --feature weak-models");
    backends = {o.backend_override};
  } else {
    backends = {"span", "gvec-commutative"};
    if (o.weak_models()) backends.push_back("gvec-weak");
  }
  auto t0 = std::chrono::steady_clock::now();
  std::vector<duo::SuiteResult> results;
  for (const auto& s : suites)
    for (const auto& b : backends) {
      if (b == "span")
        results.push_back(duo::run_suite<duo::SpanBackend>(s, duo::Preset::SpanDiagonal, o.samples, o.seed));
      else
        results.push_back(duo::run_suite<duo::GVecBackend>(
            s, b == "gvec-weak" ? duo::Preset::Weak : duo::Preset::Commutative, o.samples, o.seed));
    }
  json r = duo::cli::selftest_json(results, o.samples, o.seed, millis_since(t0));
  emit(o, r);
  return r["all_pass"].get<bool>() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-condition diagnostics for bimonoids in duoidal bicategories"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", o.file, "input JSON document")->required()->check(CLI::ExistingFile);
    sub->add_option("--backend-override", o.backend_override, "run on this backend instead of the document's")
        ->check(CLI::IsMember(duo::cli::backend_names()));
    sub->add_option("--feature", o.features, "enable gated features")->check(CLI::IsMember({"weak-models"}));
    sub->add_option("--json", o.json_path, "write the JSON report to PATH (- for stdout)");
    sub->add_flag("-q,--quiet", o.quiet, "suppress the text summary");
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option_function<std::size_t>("--samples", [&](const std::size_t& v) { o.samples = v; o.samples_set = true; },
                                          "random samples per condition (default 20)");
    sub->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& v) { o.seed = v; o.seed_set = true; },
                                            "random seed (default 0)");
  };

  auto* validate = app.add_subcommand("validate", "check a document and the bimonoid axioms");
  common(validate, true);
  auto* diagnose = app.add_subcommand("diagnose", "decide or sample conditions (a)-(i)");
  common(diagnose, true);
  sampling(diagnose);
  auto* antipode = app.add_subcommand("antipode", "solve for the antipode or print a witness");
  common(antipode, true);
  auto* selftest = app.add_subcommand("selftest", "run identity suites on the seeded corpora");
  common(selftest, false);
  sampling(selftest);
  selftest->add_option("--suite", o.suites, "suite to run (default: all)")->check(CLI::IsMember(duo::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*diagnose) return cmd_diagnose(o);
    if (*antipode) return cmd_antipode(o);
    return cmd_selftest(o);
  } catch (const duo::cli::DocumentError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const duo::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const duo::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
