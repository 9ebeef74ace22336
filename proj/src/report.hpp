#pragma once

// JSON reports for the CLI commands, plus an offline witness replay that works
// on the serialized cell data alone.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "duo/diagnose.hpp"
#include "duo/suites.hpp"
#include "document.hpp"

namespace duo::cli {

inline constexpr const char* kReportFormat = "duo-report/1";

// Names of elements of a 1-cell: occurrences of the bimonoid's atom use the
// basis names of the document, other atoms are written name#index.
struct ElementNamer {
  AtomPtr atom;
  std::vector<std::string> basis;

  std::vector<std::string> atoms_of(const OneCellData& c, std::size_t e) const {
    std::vector<std::string> out;
    for (std::size_t o = 0; o < c.occ.size(); ++o) {
      auto s = static_cast<std::size_t>(c.seq(e)[o]);
      if (c.occ[o].atom == atom && s < basis.size())
        out.push_back(basis[s]);
      else
        out.push_back(c.occ[o].atom->name + "#" + std::to_string(s));
    }
    return out;
  }

  std::string name(const OneCellData& c, std::size_t e) const {
    std::string s = "(";
    auto atoms = atoms_of(c, e);
    for (std::size_t k = 0; k < atoms.size(); ++k) s += (k ? " " : "") + atoms[k];
    s += " @";
    for (int v : c.grade(e)) s += " " + std::to_string(v);
    return s + ")";
  }
};

template <class B>
ElementNamer namer_for(const LoadedModel<B>& m) {
  ElementNamer n;
  if (m.b.a->occ.size() == 1) n.atom = m.b.a->occ[0].atom;
  n.basis = m.basis;
  return n;
}

json rational_json(const Rational& r);
json carrier_json(const OneCellData& c, const ElementNamer& names);
json matrix_json(const linalg::Dense& S);

template <class B>
json cell_json(const Cell2<B>& c, const ElementNamer& names) {
  json j;
  j["src"] = carrier_json(*c.src, names);
  j["tgt"] = carrier_json(*c.tgt, names);
  if constexpr (std::is_same_v<B, SpanBackend>) {
    j["kind"] = "function";
    j["map"] = c.map;
  } else {
    j["kind"] = "linear";
    json rows = json::array();
    for (const auto& row : c.map.rows) {
      json r = json::array();
      for (const auto& [col, v] : row) r.push_back(json::array({col, rational_json(v)}));
      rows.push_back(std::move(r));
    }
    j["map"] = {{"cols", c.map.cols}, {"rows", std::move(rows)}};
  }
  return j;
}

template <class B>
json witness_json(const Witness& w, const Cell2<B>& cell, const ElementNamer& names) {
  const OneCellData& side = w.side == "tgt" ? *cell.tgt : *cell.src;
  json j;
  j["kind"] = w.kind;
  j["side"] = w.side;
  j["elements"] = w.elements;
  json en = json::array();
  for (auto e : w.elements)
    if (e < side.size()) en.push_back(names.name(side, e));
  j["element_names"] = std::move(en);
  json vec = json::array();
  json support = json::array();
  for (std::size_t e = 0; e < w.vector.size(); ++e) {
    vec.push_back(rational_json(w.vector[e]));
    if (w.vector[e] != 0 && e < side.size()) support.push_back(names.name(side, e));
  }
  j["vector"] = std::move(vec);
  if (!support.empty()) j["support_names"] = std::move(support);
  j["note"] = w.note;
  j["cell"] = cell_json(cell, names);
  return j;
}

// The antipode as a cell, a matrix on the basis of a, and for span a function.
template <class B>
json antipode_json(const LoadedModel<B>& m, const Cell2<B>& s) {
  const auto names = namer_for(m);
  json j;
  j["cell"] = cell_json(s, names);
  auto S = antipode_matrix(m.b, s);
  if (!S) {
    j["matrix"] = nullptr;
    j["order"] = nullptr;
    j["involutive"] = nullptr;
    return j;
  }
  std::vector<std::string> basis = m.basis;
  if (basis.size() != S->rows) basis = numbered("e", S->rows);
  j["basis"] = basis;
  j["matrix"] = matrix_json(*S);
  if constexpr (std::is_same_v<B, SpanBackend>) {
    json f = json::object();
    for (std::size_t y = 0; y < S->cols; ++y)
      for (std::size_t z = 0; z < S->rows; ++z)
        if (S->at(z, y) != 0) f[basis[y]] = basis[z];
    j["function"] = std::move(f);
  }
  auto order = matrix_order(*S);
  j["order"] = order ? json(*order) : json(nullptr);
  j["involutive"] = linalg::mul(*S, *S) == linalg::Dense::identity(S->rows);
  return j;
}

template <class B>
json model_header(const std::string& command, const LoadedModel<B>& m) {
  return {{"format", kReportFormat},
          {"command", command},
          {"bimonoid", m.b.name},
          {"backend", preset_name(m.engine->D.M().preset)},
          {"n", m.n},
          {"basis", m.basis}};
}

template <class B>
json diagnose_json(const LoadedModel<B>& m, const DiagnosticsReport<B>& r, double millis) {
  const auto names = namer_for(m);
  json j = model_header("diagnose", m);
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  const bool a_holds = r.verdicts[0].ok();
  json verdicts = json::array();
  json witnesses = json::array();
  for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
    const auto& v = r.verdicts[k];
    const std::string cond(1, static_cast<char>('a' + k));
    json jv = {{"condition", cond},
               {"name", condition_label(k)},
               {"status", v.status},
               {"samples", v.samples},
               {"implied", a_holds ? "holds" : "fails"},
               {"where", v.where},
               {"note", v.note}};
    if (v.witness && v.witness_cell) {
      jv["witness"] = witness_json(*v.witness, *v.witness_cell, names);
      witnesses.push_back({{"condition", cond}, {"where", v.where}, {"witness", jv["witness"]}});
    } else {
      jv["witness"] = nullptr;
    }
    verdicts.push_back(std::move(jv));
  }
  j["verdicts"] = std::move(verdicts);
  j["all_hold"] = r.all_hold();
  j["antipode"] = r.antipode ? antipode_json(m, *r.antipode) : json(nullptr);
  j["witnesses"] = std::move(witnesses);
  j["timing"] = {{"diagnose_ms", millis}};
  return j;
}

json selftest_json(const std::vector<SuiteResult>& results, std::size_t samples, std::uint64_t seed, double millis);

// Null when the witness replays against its own cell data; otherwise the reason.
std::optional<std::string> replay_witness_json(const json& witness);

// Structural check of a report; throws DocumentError with a pointer path.
void check_report(const json& report);

// Report with the timing block removed, for determinism comparisons.
json without_timing(json report);

// One line per verdict or suite.
std::string render_text(const json& report);

}  // namespace duo::cli
