// anyonkit: command-line front end. Every subcommand reads JSON and writes
// JSON to stdout; library errors print {"error": ...} and exit 1, malformed
// input exits 2.

#include <anyonkit/anyonkit.hpp>
#include <anyonkit/io.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace anyonkit;
using io::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) { return io::parse(slurp(path)); }

struct CapFlags {
  std::optional<std::int64_t> element_cap, automorphism_cap, equivalence_cap, table_cap, decompose_cap,
      linear_system_cap, witness_search_cap, denominator_cap;
  std::optional<std::string> modulus_policy;
};

void apply_json(Config& cfg, const json& j) {
  require(j.is_object(), ErrorKind::MalformedInput, "config must be a JSON object");
  auto num = [&](const char* key, std::int64_t& slot) {
    if (!j.contains(key)) return;
    require(j[key].is_number_integer() && j[key].get<std::int64_t>() > 0, ErrorKind::MalformedInput,
            std::string("config ") + key + " must be a positive integer");
    slot = j[key].get<std::int64_t>();
  };
  num("element_cap", cfg.element_cap);
  num("automorphism_cap", cfg.automorphism_cap);
  num("automorphism_count_cap", cfg.automorphism_count_cap);
  num("equivalence_cap", cfg.equivalence_cap);
  num("table_cap", cfg.table_cap);
  num("decompose_cap", cfg.decompose_cap);
  num("linear_system_cap", cfg.linear_system_cap);
  num("witness_search_cap", cfg.witness_search_cap);
  num("denominator_cap", cfg.denominator_cap);
  if (j.contains("modulus_policy")) {
    require(j["modulus_policy"].is_string(), ErrorKind::MalformedInput, "modulus_policy must be a string");
    auto s = j["modulus_policy"].get<std::string>();
    require(s == "order" || s == "exponent", ErrorKind::MalformedInput, "modulus_policy is \"order\" or \"exponent\"");
    cfg.modulus_policy = s == "order" ? ModulusPolicy::order : ModulusPolicy::exponent;
  }
}

/// default < --config file < ANYONKIT_CONFIG < flags. The variable holds
/// inline JSON when it starts with '{', otherwise a file path.
Config resolve_config(const std::string& file, const CapFlags& f) {
  Config cfg;
  if (!file.empty()) apply_json(cfg, read_json(file));
  if (const char* env = std::getenv("ANYONKIT_CONFIG"); env && *env) {
    std::string v(env);
    apply_json(cfg, v.front() == '{' ? io::parse(v) : read_json(v));
  }
  json flags = json::object();
  if (f.element_cap) flags["element_cap"] = *f.element_cap;
  if (f.automorphism_cap) flags["automorphism_cap"] = *f.automorphism_cap;
  if (f.equivalence_cap) flags["equivalence_cap"] = *f.equivalence_cap;
  if (f.table_cap) flags["table_cap"] = *f.table_cap;
  if (f.decompose_cap) flags["decompose_cap"] = *f.decompose_cap;
  if (f.linear_system_cap) flags["linear_system_cap"] = *f.linear_system_cap;
  if (f.witness_search_cap) flags["witness_search_cap"] = *f.witness_search_cap;
  if (f.denominator_cap) flags["denominator_cap"] = *f.denominator_cap;
  if (f.modulus_policy) flags["modulus_policy"] = *f.modulus_policy;
  apply_json(cfg, flags);
  return cfg;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json verify_cmd(const json& in, const Config& cfg) {
  json out;
  if (in.contains("quadratic_form")) {
    auto t = io::theory_from_json(in, cfg);
    return json{{"pentagon", true}, {"hexagon", true}, {"modular", is_modular(t)}, {"symmetric", is_symmetric_theory(t)}};
  }
  FinAbGroup g = io::group_from_json(io::detail::field(in, "group"));
  Cochain omega = io::cochain_from_json(io::detail::field(in, "omega"), cfg);
  Cochain c = io::cochain_from_json(io::detail::field(in, "c"), cfg);
  require(omega.group() == g && c.group() == g, ErrorKind::MalformedInput, "cochain groups differ from the theory group");
  require(omega.shape() == std::vector<int>{3} && c.shape() == std::vector<int>{1, 1}, ErrorKind::MalformedInput,
          "omega has shape [3] and c has shape [1,1]");
  bool pent = pentagon_check(omega);
  bool hex = pent && hexagon_check(omega, c);
  out["pentagon"] = pent;
  out["hexagon"] = hex;
  if (pent && hex) {
    AnyonTheory t(AbelianThreeCocycle{omega, c});
    out["modular"] = is_modular(t);
    out["symmetric"] = is_symmetric_theory(t);
  } else {
    out["modular"] = nullptr;
    out["symmetric"] = nullptr;
  }
  return out;
}

void st_float(const AnyonTheory& t) {
  std::cout << "matrix,row,col,re,im\n" << std::fixed << std::setprecision(12);
  auto dump = [&](const char* name, const PhaseMatrix& m) {
    auto v = m.render();
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) {
        double re = v[r * m.dim() + c].real(), im = v[r * m.dim() + c].imag();
        // Avoid "-0.000000000000" so output does not depend on rounding noise.
        if (std::abs(re) < 5e-13) re = 0.0;
        if (std::abs(im) < 5e-13) im = 0.0;
        std::cout << name << "," << r << "," << c << "," << re << "," << im << "\n";
      }
  };
  dump("S", s_matrix(t));
  dump("T", t_matrix(t));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian anyon theories: build, verify, obstruct, classify"};
  app.require_subcommand(1);
  std::string config_file;
  CapFlags caps;
  app.add_option("--config", config_file, "JSON config file (caps, modulus_policy)");
  app.add_option("--element-cap", caps.element_cap);
  app.add_option("--automorphism-cap", caps.automorphism_cap);
  app.add_option("--equivalence-cap", caps.equivalence_cap);
  app.add_option("--table-cap", caps.table_cap);
  app.add_option("--decompose-cap", caps.decompose_cap);
  app.add_option("--linear-system-cap", caps.linear_system_cap);
  app.add_option("--witness-search-cap", caps.witness_search_cap);
  app.add_option("--denominator-cap", caps.denominator_cap);
  app.add_option("--modulus-policy", caps.modulus_policy)->check(CLI::IsMember({"order", "exponent"}));

  std::string path, group_str, form_path;
  bool staged = false, as_float = false;
  std::int64_t p = 0, k = 0;
  std::optional<std::int64_t> u;

  auto* verify = app.add_subcommand("verify", "pentagon / hexagon / modular / symmetric flags");
  verify->add_option("theory", path)->required();
  auto* build = app.add_subcommand("build", "abelian 3-cocycle realizing a quadratic form");
  build->add_option("--group", group_str)->required();
  build->add_option("--form", form_path)->required();
  auto* obstruct = app.add_subcommand("obstruct", "braiding obstruction report for an associator");
  obstruct->add_option("omega", path)->required();
  obstruct->add_flag("--staged", staged, "partial obstruction 1, then the second obstruction");
  auto* st = app.add_subcommand("st", "S and T matrices");
  st->add_option("theory", path)->required();
  st->add_flag("--float", as_float, "CSV of complex entries");
  auto* classify = app.add_subcommand("classify", "prime decomposition of a modular theory");
  classify->add_option("theory", path)->required();
  auto* enumerate = app.add_subcommand("enumerate-forms", "all quadratic forms on a group");
  enumerate->add_option("--group", group_str)->required();
  auto* catalog = app.add_subcommand("catalog", "catalog theories on Z/p^k or (Z/2^k)^2");
  catalog->add_option("--p", p)->required();
  catalog->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  catalog->add_option("--u", u, "multiplier for cyclic entries (entries it does not fit are skipped)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Config cfg = resolve_config(config_file, caps);
    if (*verify) {
      emit(verify_cmd(read_json(path), cfg));
    } else if (*build) {
      FinAbGroup g = io::group_from_string(group_str);
      auto q = io::form_from_json(read_json(form_path), &g);
      emit(io::to_json(AnyonTheory::from_quadratic(q, cfg)));
    } else if (*obstruct) {
      json in = read_json(path);
      Cochain omega = io::cochain_from_json(in.contains("omega") ? in["omega"] : in, cfg);
      require(omega.shape() == std::vector<int>{3}, ErrorKind::MalformedInput, "omega must have shape [3]");
      emit(io::to_json(staged ? staged_braiding(omega, cfg) : solve_braiding(omega, cfg)));
    } else if (*st) {
      auto t = io::theory_from_json(read_json(path), cfg);
      if (as_float) {
        st_float(t);
      } else {
        emit(json{{"S", io::to_json(s_matrix(t))}, {"T", io::to_json(t_matrix(t))}});
      }
    } else if (*classify) {
      emit(io::to_json(prime_decompose(io::theory_from_json(read_json(path), cfg), cfg)));
    } else if (*enumerate) {
      FinAbGroup g = io::group_from_string(group_str);
      auto forms = enumerate_quadratic_forms(g, cfg);
      json list = json::array();
      for (const auto& q : forms) list.push_back(io::to_json(q));
      const auto expected = quadratic_form_count(g);
      emit(json{{"group", io::to_json(g)},
                {"count", forms.size()},
                {"expected", expected},
                {"count_matches", static_cast<std::int64_t>(forms.size()) == expected},
                {"forms", list}});
    } else if (*catalog) {
      require(p >= 2 && is_prime(p), ErrorKind::MalformedInput, "--p must be a prime");
      require(k <= 62, ErrorKind::MalformedInput, "--k too large");
      json entries = json::array();
      for (const auto& label : catalog_labels(p, static_cast<int>(k))) {
        const bool cyclic = label.kind == PrimeKind::odd_cyclic || label.kind == PrimeKind::two_cyclic;
        if (u && (!cyclic || !anyonkit::detail::multiplier_ok(label, *u))) continue;
        entries.push_back(json{{"label", io::to_json(label)}, {"theory", io::to_json(catalog_theory(label, u, cfg))}});
      }
      emit(json{{"entries", entries}});
    }
  } catch (const Error& e) {
    emit(json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    return e.kind() == ErrorKind::MalformedInput ? 2 : 1;
  }
  return 0;
}
