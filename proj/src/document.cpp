#include "document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace duo::cli {

namespace {

using ptr = json::json_pointer;

[[noreturn]] void fail(const ptr& p, const std::string& msg) { throw DocumentError(p.to_string(), msg); }

const json& member(const json& obj, const ptr& p, const std::string& key) {
  if (!obj.contains(key)) fail(p / key, "missing required member '" + key + "'");
  return obj.at(key);
}

void expect_object(const json& j, const ptr& p) {
  if (!j.is_object()) fail(p, "expected an object");
}

void expect_array(const json& j, const ptr& p) {
  if (!j.is_array()) fail(p, "expected an array");
}

void only_keys(const json& obj, const ptr& p, std::initializer_list<const char*> keys) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail(p / k, "unknown member");
}

long long integer(const json& j, const ptr& p, long long lo, long long hi) {
  if (!j.is_number_integer()) fail(p, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi) fail(p, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

std::string string_value(const json& j, const ptr& p) {
  if (!j.is_string()) fail(p, "expected a string");
  return j.get<std::string>();
}

Rational rational(const json& j, const ptr& p) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(p, "expected a rational \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    fail(p, "malformed rational '" + j.get<std::string>() + "'");
  }
}

std::vector<std::vector<int>> table(const json& j, const ptr& p) {
  expect_array(j, p);
  const long long k = static_cast<long long>(j.size());
  if (k == 0 || k > 12) fail(p, "table must have 1..12 rows");
  std::vector<std::vector<int>> t;
  for (std::size_t r = 0; r < j.size(); ++r) {
    expect_array(j[r], p / r);
    if (static_cast<long long>(j[r].size()) != k) fail(p / r, "row length differs from the number of rows");
    std::vector<int> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) row.push_back(static_cast<int>(integer(j[r][c], p / r / c, 0, k - 1)));
    t.push_back(std::move(row));
  }
  return t;
}

// Resolves a basis reference given by index or by name.
std::size_t basis_ref(const json& j, const ptr& p, const std::vector<std::string>& names) {
  if (j.is_string()) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == j.get<std::string>()) return i;
    fail(p, "unknown basis element '" + j.get<std::string>() + "'");
  }
  return static_cast<std::size_t>(integer(j, p, 0, static_cast<long long>(names.size()) - 1));
}

FiniteCategory parse_category(const json& j, const ptr& p, std::vector<std::string>& names) {
  expect_object(j, p);
  only_keys(j, p, {"name", "objects", "morphisms", "identities", "composition"});
  FiniteCategory C;
  C.name = j.contains("name") ? string_value(j["name"], p / "name") : "category";
  C.objects = static_cast<int>(integer(member(j, p, "objects"), p / "objects", 1, 6));
  const auto& mor = member(j, p, "morphisms");
  expect_array(mor, p / "morphisms");
  if (mor.empty() || mor.size() > 24) fail(p / "morphisms", "expected 1..24 morphisms");
  for (std::size_t f = 0; f < mor.size(); ++f) {
    const ptr q = p / "morphisms" / f;
    expect_object(mor[f], q);
    only_keys(mor[f], q, {"name", "source", "target"});
    C.src.push_back(static_cast<int>(integer(member(mor[f], q, "source"), q / "source", 0, C.objects - 1)));
    C.tgt.push_back(static_cast<int>(integer(member(mor[f], q, "target"), q / "target", 0, C.objects - 1)));
    names.push_back(mor[f].contains("name") ? string_value(mor[f]["name"], q / "name") : "");
  }
  const int k = C.size();
  const auto& ids = member(j, p, "identities");
  expect_array(ids, p / "identities");
  if (static_cast<int>(ids.size()) != C.objects) fail(p / "identities", "expected one identity per object");
  for (std::size_t x = 0; x < ids.size(); ++x) C.ident.push_back(static_cast<int>(integer(ids[x], p / "identities" / x, 0, k - 1)));
  C.comp.assign(k, std::vector<int>(k, -1));
  const auto& comp = member(j, p, "composition");
  expect_array(comp, p / "composition");
  for (std::size_t r = 0; r < comp.size(); ++r) {
    const ptr q = p / "composition" / r;
    expect_array(comp[r], q);
    if (comp[r].size() != 3) fail(q, "expected a triple [g, f, g after f]");
    int g = static_cast<int>(integer(comp[r][0], q / 0, 0, k - 1));
    int f = static_cast<int>(integer(comp[r][1], q / 1, 0, k - 1));
    int h = static_cast<int>(integer(comp[r][2], q / 2, 0, k - 1));
    if (C.comp[g][f] >= 0 && C.comp[g][f] != h) fail(q, "conflicting entry for the pair");
    C.comp[g][f] = h;
  }
  // Composites with an identity may be left implicit.
  for (int f = 0; f < k; ++f) {
    int s = C.ident[C.src[f]], t = C.ident[C.tgt[f]];
    if (C.src[s] == C.tgt[s] && C.comp[f][s] < 0) C.comp[f][s] = f;
    if (C.src[t] == C.tgt[t] && C.comp[t][f] < 0) C.comp[t][f] = f;
  }
  if (auto err = category_error(C); !err.empty()) fail(p / "composition", err);
  const auto fallback = morphism_names(C);
  for (std::size_t f = 0; f < names.size(); ++f)
    if (names[f].empty()) names[f] = fallback[f];
  return C;
}

BialgebraData parse_bialgebra(const json& j, const ptr& p, int n) {
  expect_object(j, p);
  only_keys(j, p, {"name", "basis", "grades", "multiplication", "unit", "comultiplication", "counit"});
  BialgebraData d;
  d.name = j.contains("name") ? string_value(j["name"], p / "name") : "bialgebra";
  const auto& basis = member(j, p, "basis");
  expect_array(basis, p / "basis");
  if (basis.empty() || basis.size() > 12) fail(p / "basis", "expected 1..12 basis elements");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) names.push_back(string_value(basis[i], p / "basis" / i));
  const std::size_t k = names.size();
  if (j.contains("grades")) {
    const auto& gr = j["grades"];
    expect_array(gr, p / "grades");
    if (gr.size() != k) fail(p / "grades", "expected one grade per basis element");
    for (std::size_t i = 0; i < k; ++i) {
      const ptr q = p / "grades" / i;
      expect_array(gr[i], q);
      if (gr[i].size() != 2) fail(q, "expected [codomain, domain]");
      d.grades.push_back({static_cast<int>(integer(gr[i][0], q / 0, 0, n - 1)), static_cast<int>(integer(gr[i][1], q / 1, 0, n - 1))});
    }
  } else {
    d.grades.assign(k, {0, 0});
  }
  d.mult.resize(k * k);
  d.comult.resize(k);
  d.counit.assign(k, 0);
  auto rows = [&](const char* key, std::size_t arity, auto&& take) {
    const auto& arr = member(j, p, key);
    expect_array(arr, p / key);
    for (std::size_t r = 0; r < arr.size(); ++r) {
      const ptr q = p / key / r;
      expect_array(arr[r], q);
      if (arr[r].size() != arity + 1) fail(q, "expected " + std::to_string(arity) + " basis references and a coefficient");
      std::vector<std::size_t> idx;
      for (std::size_t c = 0; c < arity; ++c) idx.push_back(basis_ref(arr[r][c], q / c, names));
      take(idx, rational(arr[r][arity], q / arity));
    }
  };
  rows("multiplication", 3, [&](const auto& idx, const Rational& c) { d.mult[idx[0] * k + idx[1]].push_back({{idx[2]}, c}); });
  rows("unit", 1, [&](const auto& idx, const Rational& c) { d.unit.push_back({{idx[0]}, c}); });
  rows("comultiplication", 3, [&](const auto& idx, const Rational& c) { d.comult[idx[0]].push_back({{idx[1], idx[2]}, c}); });
  rows("counit", 1, [&](const auto& idx, const Rational& c) { d.counit[idx[0]] += c; });
  return d;
}

struct Spec {
  enum Kind { TrivialI, TrivialJ, Category, Bialgebra } kind;
  std::optional<FiniteCategory> category;
  std::optional<BialgebraData> data;  // one-object algebras
  std::vector<std::string> basis;
};

// The model described by a constructor, before a backend is chosen.
Spec constructor_spec(const json& model, const ptr& p, std::optional<int> n) {
  const std::string ctor = string_value(model["constructor"], p / "constructor");
  const json args = model.contains("arguments") ? model["arguments"] : json::object();
  const ptr ap = p / "arguments";
  expect_object(args, ap);
  auto one_object = [&](const std::vector<std::vector<int>>& t, int unit, const std::string& name) {
    FiniteCategory C = group_category(t, unit, name);
    if (auto err = category_error(C); !err.empty()) fail(ap / "table", err);
    Spec s{Spec::Category, C, monoid_algebra_data(t, unit, name), numbered("e", t.size())};
    return s;
  };
  if (ctor == "trivial-i" || ctor == "trivial-j") {
    only_keys(args, ap, {});
    return {ctor == "trivial-i" ? Spec::TrivialI : Spec::TrivialJ, std::nullopt, std::nullopt, {}};
  }
  if (ctor == "discrete") {
    only_keys(args, ap, {});
    auto C = discrete_category(n.value_or(1));
    return {Spec::Category, C, std::nullopt, morphism_names(C)};
  }
  if (ctor == "walking-arrow") {
    only_keys(args, ap, {});
    auto C = walking_arrow();
    return {Spec::Category, C, std::nullopt, morphism_names(C)};
  }
  if (ctor == "cyclic-group") {
    only_keys(args, ap, {"order"});
    int k = static_cast<int>(integer(member(args, ap, "order"), ap / "order", 1, 12));
    auto s = one_object(cyclic_table(k), 0, "Z" + std::to_string(k));
    s.basis = numbered("g", static_cast<std::size_t>(k));
    return s;
  }
  if (ctor == "symmetric-group-3") {
    only_keys(args, ap, {});
    return one_object(s3_table(), 0, "S3");
  }
  if (ctor == "group" || ctor == "monoid") {
    only_keys(args, ap, {"table", "unit", "name"});
    auto t = table(member(args, ap, "table"), ap / "table");
    int unit = static_cast<int>(integer(member(args, ap, "unit"), ap / "unit", 0, static_cast<long long>(t.size()) - 1));
    std::string name = args.contains("name") ? string_value(args["name"], ap / "name") : ctor;
    try {
      (void)monoid_algebra_data(t, unit, name);
    } catch (const ValidationError& e) {
      fail(ap / "table", e.what());
    }
    if (ctor == "group") {
      for (std::size_t x = 0; x < t.size(); ++x) {
        bool inv = false;
        for (std::size_t y = 0; y < t.size(); ++y) inv = inv || (t[x][y] == unit && t[y][x] == unit);
        if (!inv) fail(ap / "table" / x, "element has no inverse; use the \"monoid\" constructor");
      }
    }
    return one_object(t, unit, name);
  }
  if (ctor == "sweedler") {
    only_keys(args, ap, {});
    return {Spec::Bialgebra, std::nullopt, sweedler_data(), {"1", "g", "x", "gx"}};
  }
  fail(p / "constructor", "unknown constructor '" + ctor + "'");
}

}  // namespace

const std::vector<std::string>& backend_names() {
  static const std::vector<std::string> v = {"span", "gvec-commutative", "gvec-weak"};
  return v;
}

const std::vector<std::string>& constructor_names() {
  static const std::vector<std::string> v = {"trivial-i",    "trivial-j", "discrete", "walking-arrow",
                                             "cyclic-group", "symmetric-group-3", "group", "monoid", "sweedler"};
  return v;
}

InputDocument parse_document(const json& doc) {
  const ptr root;
  expect_object(doc, root);
  only_keys(doc, root, {"name", "backend", "parameters", "model", "options"});
  InputDocument d;
  d.backend = string_value(member(doc, root, "backend"), root / "backend");
  bool known = false;
  for (const auto& b : backend_names()) known = known || b == d.backend;
  if (!known) fail(root / "backend", "unknown backend '" + d.backend + "'");
  if (doc.contains("name")) d.name = string_value(doc["name"], root / "name");
  if (doc.contains("parameters")) {
    const auto& ps = doc["parameters"];
    expect_object(ps, root / "parameters");
    only_keys(ps, root / "parameters", {"n"});
    if (ps.contains("n")) d.n = static_cast<int>(integer(ps["n"], root / "parameters" / "n", 1, 6));
  }
  if (doc.contains("options")) {
    const auto& os = doc["options"];
    expect_object(os, root / "options");
    only_keys(os, root / "options", {"samples", "seed"});
    if (os.contains("samples")) d.samples = static_cast<std::size_t>(integer(os["samples"], root / "options" / "samples", 0, 10000));
    if (os.contains("seed")) {
      if (!os["seed"].is_number_unsigned() && !(os["seed"].is_number_integer() && os["seed"].get<long long>() >= 0))
        fail(root / "options" / "seed", "expected a non-negative integer");
      d.seed = os["seed"].get<std::uint64_t>();
    }
  }
  const auto& model = member(doc, root, "model");
  expect_object(model, root / "model");
  only_keys(model, root / "model", {"constructor", "arguments", "category", "bialgebra"});
  int kinds = static_cast<int>(model.contains("constructor")) + static_cast<int>(model.contains("category")) +
              static_cast<int>(model.contains("bialgebra"));
  if (kinds != 1) fail(root / "model", "expected exactly one of 'constructor', 'category', 'bialgebra'");
  if (model.contains("arguments") && !model.contains("constructor"))
    fail(root / "model" / "arguments", "arguments require a constructor");
  d.model = model;
  return d;
}

InputDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("", "cannot read '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError("", std::string("not valid JSON: ") + e.what());
  }
  return parse_document(doc);
}

namespace {

template <class B>
LoadedModel<B> finish(EnginePtr<B> eng, Bimonoid<B> b, int n, std::vector<std::string> basis, const std::string& name) {
  if (!name.empty()) b.name = name;
  if (auto err = eng->E.validate(b)) throw AxiomError("/model", "not a bimonoid: " + *err);
  return {std::move(eng), std::move(b), n, std::move(basis)};
}

}  // namespace

Loaded load_model(const InputDocument& doc, const LoadOptions& opts) {
  const ptr mp = ptr("/model");
  std::string backend = opts.backend_override.empty() ? doc.backend : opts.backend_override;
  bool known = false;
  for (const auto& b : backend_names()) known = known || b == backend;
  if (!known) throw DocumentError("", "unknown backend override '" + backend + "'");
  if (backend == "gvec-weak" && !opts.weak_models)
    fail(ptr("/backend"), "the gvec-weak backend is gated; pass --feature weak-models");

  Spec spec;
  if (doc.model.contains("constructor")) {
    spec = constructor_spec(doc.model, mp, doc.n);
  } else if (doc.model.contains("category")) {
    std::vector<std::string> names;
    auto C = parse_category(doc.model["category"], mp / "category", names);
    spec = {Spec::Category, C, std::nullopt, names};
  } else {
    if (backend == "span") fail(mp / "bialgebra", "structure constants need a gvec backend");
    spec = {Spec::Bialgebra, std::nullopt, parse_bialgebra(doc.model["bialgebra"], mp / "bialgebra", doc.n.value_or(1)), {}};
    for (const auto& b : doc.model["bialgebra"]["basis"]) spec.basis.push_back(b.get<std::string>());
  }

  int n = doc.n.value_or(spec.kind == Spec::TrivialI || spec.kind == Spec::TrivialJ ? 1 : 0);
  if (spec.category) {
    if (doc.n && *doc.n != spec.category->objects)
      fail(ptr("/parameters/n"), "the category has " + std::to_string(spec.category->objects) + " objects");
    n = spec.category->objects;
  }
  if (n == 0) n = 1;

  try {
    if (backend == "span") {
      auto eng = make_engine<SpanBackend>(Preset::SpanDiagonal, n);
      if (spec.kind == Spec::TrivialI) return finish(eng, trivial_i(eng->D), n, {}, doc.name);
      if (spec.kind == Spec::TrivialJ) return finish(eng, trivial_j(eng->D), n, {}, doc.name);
      if (!spec.category) fail(mp, "this model has no span realization");
      return finish(eng, category_bimonoid(eng->D, *spec.category), n, spec.basis, doc.name);
    }
    const Preset p = backend == "gvec-weak" ? Preset::Weak : Preset::Commutative;
    auto eng = make_engine<GVecBackend>(p, n);
    if (spec.kind == Spec::TrivialI) return finish(eng, trivial_i(eng->D), n, {}, doc.name);
    if (spec.kind == Spec::TrivialJ) return finish(eng, trivial_j(eng->D), n, {}, doc.name);
    if (p == Preset::Weak) fail(mp, "only trivial-i and trivial-j are available on the weak preset");
    if (spec.data) return finish(eng, bialgebra_bimonoid(eng->D, *spec.data), n, spec.basis, doc.name);
    return finish(eng, bialgebra_bimonoid(eng->D, linearized_category_data(*spec.category)), n, spec.basis, doc.name);
  } catch (const ValidationError& e) {
    throw DocumentError(mp.to_string(), e.what());
  }
}

std::string backend_of(const Loaded& m) {
  return std::visit([](const auto& x) { return std::string(preset_name(x.engine->D.M().preset)); }, m);
}

}  // namespace duo::cli
