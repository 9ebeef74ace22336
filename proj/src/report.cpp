#include "report.hpp"

#include <iomanip>
#include <set>
#include <sstream>

namespace duo::cli {

json rational_json(const Rational& r) { return to_string(r); }

json carrier_json(const OneCellData& c, const ElementNamer& names) {
  json elems = json::array();
  for (std::size_t e = 0; e < c.size(); ++e) elems.push_back({{"atoms", names.atoms_of(c, e)}, {"grade", c.grade(e)}});
  return {{"formula", c.describe()}, {"size", c.size()}, {"elements", std::move(elems)}};
}

json matrix_json(const linalg::Dense& S) {
  json rows = json::array();
  for (std::size_t i = 0; i < S.rows; ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < S.cols; ++j) r.push_back(rational_json(S.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json selftest_json(const std::vector<SuiteResult>& results, std::size_t samples, std::uint64_t seed, double millis) {
  json suites = json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    suites.push_back({{"suite", r.suite},
                      {"backend", r.backend},
                      {"instances", r.instances},
                      {"checks", r.checks},
                      {"passed", r.passed()},
                      {"failures", r.failures}});
  }
  return {{"format", kReportFormat}, {"command", "selftest"}, {"samples", samples}, {"seed", seed},
          {"suites", std::move(suites)}, {"all_pass", ok}, {"timing", {{"selftest_ms", millis}}}};
}

namespace {

std::optional<Rational> rational_of(const json& j) {
  if (!j.is_string()) return std::nullopt;
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool nonzero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return true;
  return false;
}

}  // namespace

std::optional<std::string> replay_witness_json(const json& w) {
  try {
    const json& cell = w.at("cell");
    const std::size_t ns = cell.at("src").at("size").get<std::size_t>();
    const std::size_t nt = cell.at("tgt").at("size").get<std::size_t>();
    const std::string kind = w.at("kind").get<std::string>();
    const auto elems = w.at("elements").get<std::vector<std::size_t>>();
    if (cell.at("kind") == "function") {
      const auto map = cell.at("map").get<std::vector<std::size_t>>();
      if (map.size() != nt) return "map length differs from the target carrier";
      for (auto s : map)
        if (s >= ns) return "map leaves the source carrier";
      if (kind == "no-preimage") {
        if (elems.size() != 1 || elems[0] >= ns) return "malformed no-preimage witness";
        for (auto s : map)
          if (s == elems[0]) return "source element " + std::to_string(elems[0]) + " is hit";
        return std::nullopt;
      }
      if (kind == "multiple-preimages") {
        if (elems.size() != 3 || elems[1] == elems[2] || elems[1] >= nt || elems[2] >= nt)
          return "malformed multiple-preimages witness";
        if (map[elems[1]] != elems[0] || map[elems[2]] != elems[0]) return "the two target elements do not share an image";
        return std::nullopt;
      }
      return "unknown witness kind '" + kind + "' for a function";
    }
    if (cell.at("kind") != "linear") return "unknown cell kind";
    const json& rows = cell.at("map").at("rows");
    if (rows.size() != nt || cell.at("map").at("cols").get<std::size_t>() != ns) return "matrix shape differs from the carriers";
    std::vector<Rational> v;
    for (const auto& x : w.at("vector")) {
      auto r = rational_of(x);
      if (!r) return "malformed rational in the witness vector";
      v.push_back(*r);
    }
    if (!nonzero(v)) return "witness vector is zero";
    std::vector<Rational> acc;
    if (kind == "kernel") {
      if (v.size() != ns) return "kernel vector has the wrong length";
      for (const auto& row : rows) {
        Rational s = 0;
        for (const auto& e : row) {
          auto c = e.at(0).get<std::size_t>();
          auto r = rational_of(e.at(1));
          if (!r || c >= ns) return "malformed matrix entry";
          s += *r * v[c];
        }
        acc.push_back(s);
      }
    } else if (kind == "cokernel") {
      if (v.size() != nt) return "cokernel vector has the wrong length";
      acc.assign(ns, Rational(0));
      for (std::size_t i = 0; i < nt; ++i)
        for (const auto& e : rows[i]) {
          auto c = e.at(0).get<std::size_t>();
          auto r = rational_of(e.at(1));
          if (!r || c >= ns) return "malformed matrix entry";
          acc[c] += v[i] * *r;
        }
    } else {
      return "unknown witness kind '" + kind + "' for a linear map";
    }
    if (nonzero(acc)) return "the witness vector is not annihilated";
    return std::nullopt;
  } catch (const json::exception& e) {
    return std::string("malformed witness: ") + e.what();
  }
}

namespace {

using ptr = json::json_pointer;

[[noreturn]] void bad(const ptr& p, const std::string& msg) { throw DocumentError(p.to_string(), msg); }

const json& need(const json& j, const ptr& p, const char* key, json::value_t type) {
  if (!j.is_object() || !j.contains(key)) bad(p / key, "missing");
  const json& v = j.at(key);
  bool ok = v.type() == type || (type == json::value_t::number_unsigned && v.is_number_integer() && v >= 0) ||
            (type == json::value_t::number_float && v.is_number());
  if (!ok) bad(p / key, std::string("expected ") + json(type).type_name());
  return v;
}

void check_rational(const json& j, const ptr& p) {
  if (!rational_of(j)) bad(p, "expected a \"p/q\" rational");
  if (to_string(*rational_of(j)) != j.get<std::string>()) bad(p, "rational not in lowest terms");
}

void check_carrier(const json& c, const ptr& p) {
  auto n = need(c, p, "size", json::value_t::number_unsigned).get<std::size_t>();
  need(c, p, "formula", json::value_t::string);
  const auto& es = need(c, p, "elements", json::value_t::array);
  if (es.size() != n) bad(p / "elements", "length differs from size");
}

void check_cell(const json& c, const ptr& p) {
  check_carrier(need(c, p, "src", json::value_t::object), p / "src");
  check_carrier(need(c, p, "tgt", json::value_t::object), p / "tgt");
  auto kind = need(c, p, "kind", json::value_t::string).get<std::string>();
  if (kind == "function") {
    need(c, p, "map", json::value_t::array);
  } else if (kind == "linear") {
    const auto& m = need(c, p, "map", json::value_t::object);
    const auto& rows = need(m, p / "map", "rows", json::value_t::array);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < rows[i].size(); ++k) check_rational(rows[i][k].at(1), p / "map" / "rows" / i / k / 1);
  } else {
    bad(p / "kind", "unknown cell kind");
  }
}

void check_witness(const json& w, const ptr& p) {
  need(w, p, "kind", json::value_t::string);
  need(w, p, "side", json::value_t::string);
  need(w, p, "elements", json::value_t::array);
  need(w, p, "element_names", json::value_t::array);
  const auto& v = need(w, p, "vector", json::value_t::array);
  for (std::size_t i = 0; i < v.size(); ++i) check_rational(v[i], p / "vector" / i);
  check_cell(need(w, p, "cell", json::value_t::object), p / "cell");
  if (auto why = replay_witness_json(w)) bad(p, "witness does not replay: " + *why);
}

}  // namespace

void check_report(const json& r) {
  const ptr root;
  if (!r.is_object()) bad(root, "expected an object");
  if (need(r, root, "format", json::value_t::string) != kReportFormat) bad(root / "format", "unknown report format");
  const auto cmd = need(r, root, "command", json::value_t::string).get<std::string>();
  need(r, root, "timing", json::value_t::object);
  if (cmd == "selftest") {
    const auto& suites = need(r, root, "suites", json::value_t::array);
    for (std::size_t i = 0; i < suites.size(); ++i) {
      const ptr p = root / "suites" / i;
      need(suites[i], p, "suite", json::value_t::string);
      need(suites[i], p, "backend", json::value_t::string);
      need(suites[i], p, "passed", json::value_t::boolean);
      need(suites[i], p, "failures", json::value_t::array);
    }
    need(r, root, "all_pass", json::value_t::boolean);
    return;
  }
  need(r, root, "bimonoid", json::value_t::string);
  need(r, root, "backend", json::value_t::string);
  need(r, root, "n", json::value_t::number_unsigned);
  auto check_antipode = [&](const json& a, const ptr& p) {
    if (a.is_null()) return;
    check_cell(need(a, p, "cell", json::value_t::object), p / "cell");
    if (a.contains("matrix") && !a["matrix"].is_null())
      for (std::size_t i = 0; i < a["matrix"].size(); ++i)
        for (std::size_t k = 0; k < a["matrix"][i].size(); ++k) check_rational(a["matrix"][i][k], p / "matrix" / i / k);
  };
  if (cmd == "validate") {
    need(r, root, "valid", json::value_t::boolean);
    return;
  }
  if (cmd == "antipode") {
    need(r, root, "exists", json::value_t::boolean);
    if (!r.contains("antipode")) bad(root / "antipode", "missing");
    check_antipode(r["antipode"], root / "antipode");
    if (r.contains("witness") && !r["witness"].is_null()) check_witness(r["witness"], root / "witness");
    return;
  }
  if (cmd != "diagnose") bad(root / "command", "unknown command");
  need(r, root, "samples", json::value_t::number_unsigned);
  need(r, root, "seed", json::value_t::number_unsigned);
  const auto& vs = need(r, root, "verdicts", json::value_t::array);
  if (vs.size() != 9) bad(root / "verdicts", "expected nine verdicts");
  static const std::set<std::string> statuses = {"holds", "fails", "sampled-holds", "not-checked"};
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const ptr p = root / "verdicts" / i;
    if (need(vs[i], p, "condition", json::value_t::string) != std::string(1, static_cast<char>('a' + i)))
      bad(p / "condition", "out of order");
    if (!statuses.count(need(vs[i], p, "status", json::value_t::string).get<std::string>())) bad(p / "status", "unknown status");
    need(vs[i], p, "implied", json::value_t::string);
    need(vs[i], p, "samples", json::value_t::number_unsigned);
    const bool fails = vs[i]["status"] == "fails";
    if (!vs[i].contains("witness")) bad(p / "witness", "missing");
    if (fails != !vs[i]["witness"].is_null()) bad(p / "witness", "a witness is present exactly when the verdict fails");
    if (fails) check_witness(vs[i]["witness"], p / "witness");
  }
  need(r, root, "all_hold", json::value_t::boolean);
  if (!r.contains("antipode")) bad(root / "antipode", "missing");
  check_antipode(r["antipode"], root / "antipode");
  need(r, root, "witnesses", json::value_t::array);
}

json without_timing(json report) {
  report.erase("timing");
  return report;
}

std::string render_text(const json& r) {
  std::ostringstream os;
  const std::string cmd = r.value("command", "");
  if (cmd == "selftest") {
    for (const auto& s : r["suites"]) {
      os << (s["passed"].get<bool>() ? "PASS " : "FAIL ") << s["suite"].get<std::string>() << " ["
         << s["backend"].get<std::string>() << "] " << s["instances"] << " instances, " << s["checks"] << " checks\n";
      for (const auto& f : s["failures"]) os << "  " << f.get<std::string>() << "\n";
    }
    return os.str();
  }
  os << r["bimonoid"].get<std::string>() << " [" << r["backend"].get<std::string>() << ", n=" << r["n"] << "]\n";
  auto witness_line = [&](const json& w) {
    os << "    witness: " << w["kind"].get<std::string>() << " on " << w["side"].get<std::string>();
    for (const auto& n : w["element_names"]) os << " " << n.get<std::string>();
    if (w.contains("support_names")) {
      os << " support";
      for (const auto& n : w["support_names"]) os << " " << n.get<std::string>();
    }
    os << "\n";
  };
  auto antipode_lines = [&](const json& a) {
    if (a.contains("function")) {
      os << "  antipode:";
      for (const auto& [y, z] : a["function"].items()) os << " S(" << y << ")=" << z.get<std::string>();
      os << "\n";
    } else if (a.contains("matrix") && !a["matrix"].is_null()) {
      os << "  antipode matrix:\n";
      for (const auto& row : a["matrix"]) {
        os << "   ";
        for (const auto& x : row) os << " " << std::setw(5) << x.get<std::string>();
        os << "\n";
      }
    }
    if (!a["order"].is_null()) os << "  antipode order: " << a["order"] << "\n";
  };
  if (cmd == "validate") {
    os << "  " << (r["valid"].get<bool>() ? "valid bimonoid" : "invalid: " + r["error"].get<std::string>()) << "\n";
    return os.str();
  }
  if (cmd == "antipode") {
    if (r["exists"].get<bool>())
      antipode_lines(r["antipode"]);
    else {
      os << "  no antipode\n";
      witness_line(r["witness"]);
    }
    return os.str();
  }
  for (const auto& v : r["verdicts"]) {
    os << "  (" << v["condition"].get<std::string>() << ") " << std::left << std::setw(18) << v["name"].get<std::string>()
       << std::right << v["status"].get<std::string>();
    if (v["status"] == "sampled-holds") os << "(" << v["samples"] << ")";
    if (!v["where"].get<std::string>().empty()) os << "  at " << v["where"].get<std::string>();
    os << "\n";
    if (!v["witness"].is_null()) witness_line(v["witness"]);
  }
  if (!r["antipode"].is_null()) antipode_lines(r["antipode"]);
  os << (r["all_hold"].get<bool>() ? "all conditions hold\n" : "conditions fail\n");
  return os.str();
}

}  // namespace duo::cli
