#pragma once

// JSON encodings used by the command-line tool. Parsing failures of any kind
// surface as ErrorKind::MalformedInput.
//
//   QZ          [num, den]
//   group       [n1, ..., nk]
//   cochain     {"group", "shape", "entries": [[coords, [num, den]], ...]}
//               coords: the arguments' coordinates concatenated (a nested
//               list of per-argument coordinates is accepted on input);
//               omitted entries are 0
//   form        {"group", "gen_values": [[n,d], ...], "cross": [[i, j, [n,d]], ...]}
//   theory      {"group", "omega": cochain, "c": cochain}
//               or {"group", "quadratic_form": form}
//   hom         {"domain", "codomain", "images": [coords, ...]}

#include <anyonkit/classify.hpp>
#include <anyonkit/cochain.hpp>
#include <anyonkit/error.hpp>
#include <anyonkit/group.hpp>
#include <anyonkit/obstruction.hpp>
#include <anyonkit/quadratic.hpp>
#include <anyonkit/theory.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace anyonkit::io {

using json = nlohmann::ordered_json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::MalformedInput, std::string(what) + ": " + e.what());
  }
}

inline i64 as_int(const json& j, const char* what) {
  require(j.is_number_integer(), ErrorKind::MalformedInput, std::string(what) + " must be an integer");
  return j.get<i64>();
}

inline const json& field(const json& j, const char* key) {
  require(j.is_object(), ErrorKind::MalformedInput, std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  require(it != j.end(), ErrorKind::MalformedInput, std::string("missing field \"") + key + "\"");
  return *it;
}

inline void flatten_ints(const json& j, std::vector<i64>& out) {
  if (j.is_array()) {
    for (const auto& x : j) flatten_ints(x, out);
    return;
  }
  out.push_back(as_int(j, "coordinate"));
}

}  // namespace detail

inline json to_json(const QZ& q) { return json::array({q.num(), q.den()}); }

inline QZ qz_from_json(const json& j) {
  require(j.is_array() && j.size() == 2, ErrorKind::MalformedInput, "a Q/Z value is [num, den]");
  i64 d = detail::as_int(j[1], "denominator");
  require(d > 0, ErrorKind::MalformedInput, "denominator must be positive");
  return QZ(detail::as_int(j[0], "numerator"), d);
}

inline json to_json(const FinAbGroup& g) { return json(g.orders()); }

inline FinAbGroup group_from_json(const json& j) {
  require(j.is_array(), ErrorKind::MalformedInput, "group must be a list of cyclic orders");
  std::vector<i64> o;
  for (const auto& x : j) {
    i64 n = detail::as_int(x, "cyclic order");
    require(n >= 2, ErrorKind::MalformedInput, "cyclic orders must be >= 2");
    o.push_back(n);
  }
  return FinAbGroup(std::move(o));
}

/// "2,4" -> Z/2 + Z/4.
inline FinAbGroup group_from_string(const std::string& s) {
  std::vector<i64> o;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    std::size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t used = 0;
    i64 n = 0;
    try {
      n = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == tok.size() && used > 0 && n >= 2, ErrorKind::MalformedInput, "bad group order \"" + tok + "\"");
    o.push_back(n);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return FinAbGroup(std::move(o));
}

inline json to_json(const Cochain& f) {
  json entries = json::array();
  const FinAbGroup& g = f.group();
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f.values().raw(i) == 0) continue;
    json coords = json::array();
    for (Elem a : f.args_of(i))
      for (i64 c : g.coords(a)) coords.push_back(c);
    entries.push_back(json::array({coords, to_json(f.values().at(i))}));
  }
  return json{{"group", to_json(g)}, {"shape", f.shape()}, {"entries", entries}};
}

inline Cochain cochain_from_json(const json& j, const Config& cfg = {}) {
  return detail::guarded("cochain", [&] {
    FinAbGroup g = group_from_json(detail::field(j, "group"));
    const json& sj = detail::field(j, "shape");
    require(sj.is_array(), ErrorKind::MalformedInput, "shape must be a list");
    std::vector<int> shape;
    int arity = 0;
    for (const auto& x : sj) {
      i64 p = detail::as_int(x, "block size");
      require(p >= 1, ErrorKind::MalformedInput, "block sizes must be positive");
      shape.push_back(static_cast<int>(p));
      arity += static_cast<int>(p);
    }
    const json& ej = detail::field(j, "entries");
    require(ej.is_array(), ErrorKind::MalformedInput, "entries must be a list");
    std::size_t size = 1;
    for (int i = 0; i < arity; ++i) size *= g.size();
    require(static_cast<i64>(size) <= cfg.table_cap, ErrorKind::CapExceeded, "cochain table exceeds cap");
    std::map<std::size_t, QZ> vals;
    for (const auto& e : ej) {
      require(e.is_array() && e.size() == 2, ErrorKind::MalformedInput, "an entry is [coords, [num, den]]");
      std::vector<i64> c;
      detail::flatten_ints(e[0], c);
      require(c.size() == static_cast<std::size_t>(arity) * g.rank(), ErrorKind::MalformedInput,
              "entry has " + std::to_string(c.size()) + " coordinates, expected " + std::to_string(arity * g.rank()));
      std::size_t idx = 0;
      for (int a = 0; a < arity; ++a) {
        std::vector<i64> one(c.begin() + a * g.rank(), c.begin() + (a + 1) * g.rank());
        for (std::size_t i = 0; i < one.size(); ++i)
          require(one[i] >= 0 && one[i] < g.orders()[i], ErrorKind::MalformedInput, "coordinate out of range");
        idx = idx * g.size() + g.from_coords(one);
      }
      require(!vals.contains(idx), ErrorKind::MalformedInput, "duplicate cochain entry");
      vals[idx] = qz_from_json(e[1]);
    }
    std::vector<QZ> all(size);
    for (const auto& [i, v] : vals) all[i] = v;
    return Cochain(g, shape, FractionTable::from_values(all, cfg.denominator_cap), cfg);
  });
}

inline json to_json(const QuadraticForm& q) {
  json gens = json::array();
  for (const auto& v : q.gen_values()) gens.push_back(to_json(v));
  json cross = json::array();
  for (const auto& [ij, v] : q.cross_terms()) cross.push_back(json::array({ij.first, ij.second, to_json(v)}));
  return json{{"group", to_json(q.group())}, {"gen_values", gens}, {"cross", cross}};
}

/// `group` overrides the form's own "group" field when given.
inline QuadraticForm form_from_json(const json& j, const FinAbGroup* group = nullptr) {
  return detail::guarded("form", [&] {
    FinAbGroup g = group ? *group : group_from_json(detail::field(j, "group"));
    if (group && j.is_object() && j.contains("group"))
      require(group_from_json(j["group"]) == *group, ErrorKind::MalformedInput, "form group differs from --group");
    const json& gv = detail::field(j, "gen_values");
    require(gv.is_array(), ErrorKind::MalformedInput, "gen_values must be a list");
    std::vector<QZ> gens;
    for (const auto& v : gv) gens.push_back(qz_from_json(v));
    require(gens.size() == g.rank(), ErrorKind::MalformedInput, "need one generator value per cyclic factor");
    std::map<std::pair<std::size_t, std::size_t>, QZ> cross;
    if (j.contains("cross")) {
      require(j["cross"].is_array(), ErrorKind::MalformedInput, "cross must be a list");
      for (const auto& t : j["cross"]) {
        require(t.is_array() && t.size() == 3, ErrorKind::MalformedInput, "a cross term is [i, j, [num, den]]");
        i64 a = detail::as_int(t[0], "cross index"), b = detail::as_int(t[1], "cross index");
        require(a >= 0 && a < b && b < static_cast<i64>(g.rank()), ErrorKind::MalformedInput, "cross indices need 0 <= i < j < rank");
        auto key = std::pair<std::size_t, std::size_t>(a, b);
        require(!cross.contains(key), ErrorKind::MalformedInput, "duplicate cross term");
        cross[key] = qz_from_json(t[2]);
      }
    }
    return QuadraticForm::from_generators(g, gens, cross);
  });
}

inline json to_json(const AnyonTheory& t) {
  return json{{"group", to_json(t.group())}, {"omega", to_json(t.cocycle().omega)}, {"c", to_json(t.cocycle().c)}};
}

/// Accepts a full cocycle (validated) or a quadratic form (built).
inline AnyonTheory theory_from_json(const json& j, const Config& cfg = {}) {
  return detail::guarded("theory", [&] {
    FinAbGroup g = group_from_json(detail::field(j, "group"));
    if (j.contains("quadratic_form")) return AnyonTheory::from_quadratic(form_from_json(j["quadratic_form"], &g), cfg);
    Cochain omega = cochain_from_json(detail::field(j, "omega"), cfg);
    Cochain c = cochain_from_json(detail::field(j, "c"), cfg);
    require(omega.group() == g && c.group() == g, ErrorKind::MalformedInput, "cochain groups differ from the theory group");
    require(omega.shape() == std::vector<int>{3}, ErrorKind::MalformedInput, "omega must have shape [3]");
    require(c.shape() == std::vector<int>{1, 1}, ErrorKind::MalformedInput, "c must have shape [1,1]");
    return AnyonTheory(AbelianThreeCocycle{std::move(omega), std::move(c)});
  });
}

inline json to_json(const GroupHom& h) {
  json im = json::array();
  for (Elem x : h.images()) im.push_back(h.codomain().coords(x));
  return json{{"domain", to_json(h.domain())}, {"codomain", to_json(h.codomain())}, {"images", im}};
}

inline json to_json(const ObstructionReport& r) {
  json j;
  j["total_vanishes"] = r.total_vanishes;
  j["partial1"] = r.partial1_vanishes;
  j["theta"] = r.theta_vanishes ? json(*r.theta_vanishes) : json(nullptr);
  j["witness"] = r.witness_braiding ? to_json(*r.witness_braiding) : json(nullptr);
  j["modulus"] = r.modulus_used;
  j["witness_denominator"] = r.witness_denominator ? json(*r.witness_denominator) : json(nullptr);
  return j;
}

inline json to_json(const PrimeLabel& l) {
  json j{{"kind", std::string(to_string(l.kind))}, {"p", l.p}, {"k", l.k}};
  if (l.epsilon) j["epsilon"] = *l.epsilon;
  return j;
}

inline json to_json(const Decomposition& d) {
  json f = json::array();
  for (const auto& l : d.factors) f.push_back(to_json(l));
  return json{{"factors", f}, {"witness_iso", to_json(d.witness_iso)}};
}

inline json to_json(const PhaseMatrix& m) {
  json labels = json::array();
  for (const auto& l : m.labels) labels.push_back(l.coords);
  json j{{"labels", labels}};
  if (m.diagonal) {
    json d = json::array();
    for (const auto& e : m.exponents) d.push_back(to_json(e));
    j["diagonal"] = d;
  } else {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m.exponent(r, c)));
      rows.push_back(row);
    }
    j["exponents"] = rows;
  }
  if (m.inv_sqrt_order) j["scale"] = "|A|^-1/2";
  return j;
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace anyonkit::io
