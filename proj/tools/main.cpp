// wpoisson command-line front end.
//
// Exit status: 0 success, 1 computational mismatch (catalog verify,
// verify-aut), 2 usage or parse error.

#include "wpoisson/catalog.hpp"
#include "wpoisson/complexes.hpp"
#include "wpoisson/hilbert.hpp"
#include "wpoisson/jacobian.hpp"
#include "wpoisson/poisson.hpp"
#include "wpoisson/textio.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace {

using namespace wpoisson;
using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct Common {
  std::string weights;
  std::string potential;
  std::optional<int> max_degree;
  std::string format = "table";
  std::string modulus;
};

struct Outcome {
  ordered_json results = ordered_json::object();
  std::optional<int> bound;
  int status = 0;
};

std::string render_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(const std::string& command, const ordered_json& doc, std::ostream& out) {
  out << command;
  if (!doc["truncation_bound"].is_null()) out << "  (computed up to degree " << doc["truncation_bound"] << ")";
  out << '\n';
  for (const auto& [k, v] : doc["inputs"].items()) out << "  " << k << ": " << render_cell(v) << '\n';
  for (const auto& [k, v] : doc["results"].items()) {
    if (k == "rows") continue;
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      out << "  " << k << ":\n";
      for (const auto& row : v) {
        out << "   ";
        for (const auto& [rk, rv] : row.items()) out << ' ' << rk << '=' << render_cell(rv);
        out << '\n';
      }
      continue;
    }
    out << "  " << k << ": " << render_cell(v) << '\n';
  }
  const auto rows = doc["results"].find("rows");
  if (rows == doc["results"].end() || rows->empty()) return;
  std::vector<std::string> keys;
  for (const auto& [k, v] : (*rows)[0].items()) keys.push_back(k);
  std::vector<std::size_t> width(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    width[i] = keys[i].size();
    for (const auto& r : *rows) width[i] = std::max(width[i], render_cell(r[keys[i]]).size());
  }
  auto line = [&](auto cell) {
    out << ' ';
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const std::string s = cell(i);
      out << ' ' << std::string(width[i] - s.size(), ' ') << s;
    }
    out << '\n';
  };
  line([&](std::size_t i) { return keys[i]; });
  for (const auto& r : *rows) line([&](std::size_t i) { return render_cell(r[keys[i]]); });
}

std::string csv_cell(const ordered_json& v) {
  std::string cell = render_cell(v);
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string q = "\"";
  for (char ch : cell) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void print_csv(const ordered_json& doc, std::ostream& out) {
  const auto& res = doc["results"];
  const auto rows = res.find("rows");
  if (rows != res.end() && !rows->empty()) {
    std::string sep;
    for (const auto& [k, v] : (*rows)[0].items()) out << std::exchange(sep, ",") << k;
    out << '\n';
    for (const auto& r : *rows) {
      sep.clear();
      for (const auto& [k, v] : r.items()) out << std::exchange(sep, ",") << csv_cell(v);
      out << '\n';
    }
    return;
  }
  out << "key,value\n";
  for (const auto& [k, v] : res.items()) out << k << ',' << csv_cell(v) << '\n';
}

void emit(const std::string& command, const Common& c, const ordered_json& extra_inputs, const Outcome& o) {
  ordered_json doc;
  doc["command"] = command;
  ordered_json inputs = ordered_json::object();
  if (!c.weights.empty()) inputs["weights"] = c.weights;
  if (!c.potential.empty()) inputs["potential"] = c.potential;
  if (!c.modulus.empty()) inputs["modulus"] = c.modulus;
  for (const auto& [k, v] : extra_inputs.items()) inputs[k] = v;
  doc["inputs"] = inputs;
  doc["results"] = o.results;
  doc["truncation_bound"] = o.bound ? ordered_json(*o.bound) : ordered_json(nullptr);
  doc["version"] = kVersion;
  if (c.format == "json") std::cout << doc.dump(2) << '\n';
  else if (c.format == "csv") print_csv(doc, std::cout);
  else print_table(command, doc, std::cout);
}

Poly potential(const Common& c) { return textio::parse_poly(c.potential, textio::parse_weights(c.weights)); }

int bound_for(const Common& c, const Poly& omega) {
  const int d = c.max_degree ? *c.max_degree : complexes::default_max_degree(omega);
  if (d < 0) throw CLI::ValidationError("--max-degree", "must be >= 0");
  return d;
}

std::string series_text(const hilbert::HilbertSeries& s) { return s.to_string(); }

// --- subcommands --------------------------------------------------------

Outcome run_bracket(const Common& c, const std::string& f, const std::string& g) {
  Outcome o;
  const Weights w = textio::parse_weights(c.weights);
  if (!c.modulus.empty()) {
    const auto field = textio::parse_extension(c.modulus);
    const auto s = poisson::from_potential(textio::parse_poly(c.potential, w, field));
    o.results["bracket"] =
        textio::format_poly(poisson::bracket(s, textio::parse_poly(f, w, field), textio::parse_poly(g, w, field)));
    return o;
  }
  const auto s = poisson::from_potential(potential(c));
  o.results["bracket"] = textio::format_poly(poisson::bracket(s, textio::parse_poly(f, w), textio::parse_poly(g, w)));
  return o;
}

Outcome run_jacobi(const Common& c) {
  Outcome o;
  const auto s = poisson::from_potential(potential(c));
  const Poly j = poisson::jacobiator(s);
  o.results["jacobiator"] = textio::format_poly(j);
  o.results["is_poisson"] = j.is_zero();
  return o;
}

Outcome run_modular(const Common& c) {
  Outcome o;
  const auto s = poisson::from_potential(potential(c));
  const auto m = poisson::modular_derivation(s);
  o.results["x"] = textio::format_poly(m[0]);
  o.results["y"] = textio::format_poly(m[1]);
  o.results["z"] = textio::format_poly(m[2]);
  o.results["unimodular"] = is_zero(m);
  return o;
}

Outcome run_rgt(const Common& c) {
  Outcome o;
  const Poly omega = potential(c);
  o.results["rgt"] = poisson::rgt(omega);
  ordered_json neg = ordered_json::array();
  for (const auto& [d, dim] : poisson::negative_degree_pd_dims(omega)) neg.push_back({{"degree", d}, {"dim", dim}});
  o.results["negative_degree_derivations"] = neg;
  return o;
}

Outcome run_gkdim(const Common& c) {
  Outcome o;
  const Poly omega = potential(c);
  o.results["gkdim"] = jacobian::gkdim(omega);
  o.results["a_sing_series"] = series_text(jacobian::a_sing_hilbert(omega, 0).series);
  return o;
}

Outcome run_singularity(const Common& c) {
  Outcome o;
  const Poly omega = potential(c);
  o.results["isolated"] = jacobian::has_isolated_singularity(omega);
  o.results["gkdim"] = jacobian::gkdim(omega);
  o.results["gcd_partials"] = textio::format_poly(jacobian::gcd_partials(omega));
  return o;
}

Outcome run_cohomology(const Common& c) {
  Outcome o;
  const Poly omega = potential(c);
  const int D = bound_for(c, omega);
  o.bound = D;
  const auto t = complexes::ph_dims(omega, D);
  const Weights& w = omega.weights();
  const bool comparable = *omega.degree() == w.sum();
  std::array<std::vector<Integer>, 4> cf;
  if (comparable)
    for (int i = 0; i < 4; ++i) cf[i] = hilbert::closed_form_ph(w, i).expand(t.min_degree, D);
  ordered_json rows = ordered_json::array();
  bool match = comparable;
  for (int d = t.min_degree; d <= D; ++d) {
    ordered_json r;
    r["d"] = d;
    for (int i = 0; i < 4; ++i) r["PH" + std::to_string(i)] = t.at(i, d);
    if (comparable) {
      for (int i = 0; i < 4; ++i) {
        const Integer& v = cf[i][static_cast<std::size_t>(d - t.min_degree)];
        r["CF" + std::to_string(i)] = v.get_str();
        match = match && v == static_cast<unsigned long>(t.at(i, d));
      }
    }
    rows.push_back(r);
  }
  if (comparable) o.results["closed_forms_match"] = match;
  o.results["rows"] = rows;
  return o;
}

Outcome run_koszul(const Common& c) {
  Outcome o;
  const Poly omega = potential(c);
  const int D = bound_for(c, omega);
  o.bound = D;
  const auto t = complexes::koszul_dims(omega, D);
  ordered_json rows = ordered_json::array();
  for (int d = 0; d <= D; ++d) {
    ordered_json r;
    r["d"] = d;
    for (int i = 0; i < 4; ++i) r["H" + std::to_string(i)] = t.at(i, d);
    rows.push_back(r);
  }
  o.results["rows"] = rows;
  return o;
}

Outcome run_sealed(const Common& c) {
  Outcome o;
  const Poly omega = potential(c);
  const int D = bound_for(c, omega);
  o.bound = D;
  const auto rep = complexes::sealed_k1_dims(omega, D);
  o.results["sealed_up_to_bound"] = rep.sealed();
  ordered_json rows = ordered_json::array();
  for (const auto& [d, v] : rep.dims) rows.push_back({{"d", d}, {"sK1", v}});
  o.results["rows"] = rows;
  return o;
}

Outcome run_vacancy(const Common& c) {
  Outcome o;
  const Poly omega = potential(c);
  const int D = bound_for(c, omega);
  o.bound = D;
  complexes::PoissonComplex cx(omega);
  const auto rep = complexes::vacancy_check(cx, D);
  o.results["vacant_up_to_bound"] = rep.vacant();
  ordered_json rows = ordered_json::array();
  for (const auto& r : rep.rows) rows.push_back({{"d", r.degree}, {"ker_d2", r.ker_d2}, {"M2", r.m2}, {"uPH2", r.uph2}});
  o.results["rows"] = rows;
  return o;
}

Outcome run_ozone(const Common& c) {
  Outcome o;
  const Poly omega = potential(c);
  const int D = bound_for(c, omega);
  o.bound = D;
  complexes::PoissonComplex cx(omega);
  const auto rep = complexes::ozone_vs_hamiltonian(cx, D);
  o.results["ozone_up_to_bound"] = rep.ozone();
  ordered_json rows = ordered_json::array();
  for (const auto& r : rep.rows) rows.push_back({{"d", r.degree}, {"Od", r.od}, {"Hd", r.hd}});
  o.results["rows"] = rows;
  return o;
}

template <class K>
void automorphism_results(Outcome& o, const Polynomial<K>& omega, const PolyVector<K>& phi,
                          const std::optional<PolyVector<K>>& psi, const std::optional<K>& xi) {
  o.results["det"] = textio::format_poly(poisson::map_determinant(phi));
  o.results["phi_omega"] = textio::format_poly(poisson::apply_map(phi, omega));
  if (psi) {
    const auto q = poisson::verify_quotient_automorphism(omega, xi ? *xi : K(0), phi, *psi);
    o.results["preserves_ideal"] = q.preserves_ideal;
    o.results["preserves_bracket"] = q.preserves_bracket;
    o.results["inverse_ok"] = q.inverse_ok;
    o.results["passed"] = q.passed();
    o.status = q.passed() ? 0 : 1;
    return;
  }
  const bool ok = poisson::verify_automorphism(omega, phi);
  o.results["passed"] = ok;
  o.status = ok ? 0 : 1;
}

Outcome run_verify_aut(const Common& c, const std::string& map, const std::string& inverse, const std::string& xi) {
  Outcome o;
  const Weights w = textio::parse_weights(c.weights);
  if (!inverse.empty() || !xi.empty()) {
    if (inverse.empty()) throw CLI::ValidationError("--xi", "requires --inverse");
  }
  if (!c.modulus.empty()) {
    const auto field = textio::parse_extension(c.modulus);
    const auto omega = textio::parse_poly(c.potential, w, field);
    const auto phi = textio::parse_map(map, w, field);
    std::optional<PolyVector<ExtElement>> psi;
    if (!inverse.empty()) psi = textio::parse_map(inverse, w, field);
    std::optional<ExtElement> x;
    if (!xi.empty()) x = textio::parse_element(xi, field);
    automorphism_results(o, omega, phi, psi, x);
    return o;
  }
  const Poly omega = textio::parse_poly(c.potential, w);
  const auto phi = textio::parse_map(map, w);
  std::optional<PolyVec> psi;
  if (!inverse.empty()) psi = textio::parse_map(inverse, w);
  std::optional<Rational> x;
  if (!xi.empty()) x = textio::parse_rational(xi);
  automorphism_results(o, omega, phi, psi, x);
  return o;
}

Outcome run_catalog_verify(const std::vector<std::string>& filters, std::optional<int> D, const std::string& path) {
  Outcome o;
  const auto all = catalog::load_catalog(path.empty() ? catalog::default_catalog_path() : path);
  const auto selected = catalog::entries(all, filters);
  const auto agg = catalog::verify_all(selected, D);
  if (D) o.bound = *D;
  o.results["entries"] = agg.entries.size();
  o.results["passed"] = agg.passed;
  o.results["failed"] = agg.failed;
  o.results["info"] = agg.infos;
  ordered_json rows = ordered_json::array();
  for (const auto& e : agg.entries)
    for (const auto& it : e.items)
      rows.push_back({{"id", e.id},
                      {"weights", e.weights},
                      {"D", e.max_degree},
                      {"check", it.check},
                      {"status", catalog::to_string(it.status)},
                      {"expected", it.expected},
                      {"computed", it.computed}});
  o.results["rows"] = rows;
  o.status = agg.ok() ? 0 : 1;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Poisson cohomology and invariants of weighted potentials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common c;
  auto add_common = [&](CLI::App* sub, bool needs_degree) {
    sub->add_option("--weights", c.weights, "weights a,b,c")->required();
    sub->add_option("--potential", c.potential, "potential, e.g. \"z^2+x^3*y\"")->required();
    sub->add_option("--format", c.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    if (needs_degree) sub->add_option("--max-degree", c.max_degree, "truncation degree (default 3n+12)");
  };

  std::string f, g, map, inverse, xi, catalog_path;
  std::vector<std::string> filters;

  auto* bracket = app.add_subcommand("bracket", "{f,g} for the bracket of a potential");
  add_common(bracket, false);
  bracket->add_option("--f", f)->required();
  bracket->add_option("--g", g)->required();
  bracket->add_option("--modulus", c.modulus, "work over Q[s]/(modulus)");

  auto* jacobi = app.add_subcommand("jacobi", "jacobiator of the bracket");
  add_common(jacobi, false);
  auto* modular = app.add_subcommand("modular", "modular derivation");
  add_common(modular, false);
  auto* rgt = app.add_subcommand("rgt", "rigidity of the grading");
  add_common(rgt, false);
  auto* gk = app.add_subcommand("gkdim", "GK dimension of the singular locus algebra");
  add_common(gk, false);
  auto* sing = app.add_subcommand("singularity", "isolated-singularity test");
  add_common(sing, false);
  auto* coh = app.add_subcommand("cohomology", "Poisson cohomology dimensions");
  add_common(coh, true);
  auto* kos = app.add_subcommand("koszul", "Koszul homology on the gradient");
  add_common(kos, true);
  auto* sealed = app.add_subcommand("sealed", "sealed K1 dimensions");
  add_common(sealed, true);
  auto* vac = app.add_subcommand("vacancy", "uPH2 vacancy table");
  add_common(vac, true);
  auto* oz = app.add_subcommand("ozone", "ozone versus hamiltonian derivations");
  add_common(oz, true);

  auto* aut = app.add_subcommand("verify-aut", "check a candidate automorphism");
  add_common(aut, false);
  aut->add_option("--map", map, "\"x->..; y->..; z->..\"")->required();
  aut->add_option("--inverse", inverse, "inverse map, checked modulo (Omega - xi)");
  aut->add_option("--xi", xi, "level xi (default 0)");
  aut->add_option("--modulus", c.modulus, "work over Q[s]/(modulus)");

  auto* cat = app.add_subcommand("catalog", "bundled classification catalog");
  cat->require_subcommand(1);
  auto* verify = cat->add_subcommand("verify", "recompute and compare every entry");
  verify->add_option("--filter", filters, "table:<t>, type:<t>, weights:a,b,c, id:<id>");
  verify->add_option("--max-degree", c.max_degree, "truncation degree (default 3n+12 per entry)");
  verify->add_option("--catalog", catalog_path, "catalog file");
  verify->add_option("--format", c.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Outcome o;
    std::string name;
    ordered_json extra = ordered_json::object();
    if (*bracket) {
      name = "bracket";
      extra = {{"f", f}, {"g", g}};
      o = run_bracket(c, f, g);
    } else if (*jacobi) {
      name = "jacobi", o = run_jacobi(c);
    } else if (*modular) {
      name = "modular", o = run_modular(c);
    } else if (*rgt) {
      name = "rgt", o = run_rgt(c);
    } else if (*gk) {
      name = "gkdim", o = run_gkdim(c);
    } else if (*sing) {
      name = "singularity", o = run_singularity(c);
    } else if (*coh) {
      name = "cohomology", o = run_cohomology(c);
    } else if (*kos) {
      name = "koszul", o = run_koszul(c);
    } else if (*sealed) {
      name = "sealed", o = run_sealed(c);
    } else if (*vac) {
      name = "vacancy", o = run_vacancy(c);
    } else if (*oz) {
      name = "ozone", o = run_ozone(c);
    } else if (*aut) {
      name = "verify-aut";
      extra = {{"map", map}};
      if (!inverse.empty()) extra["inverse"] = inverse;
      if (!xi.empty()) extra["xi"] = xi;
      o = run_verify_aut(c, map, inverse, xi);
    } else if (*verify) {
      name = "catalog verify";
      extra = {{"filters", filters}};
      o = run_catalog_verify(filters, c.max_degree, catalog_path);
    }
    emit(name, c, extra, o);
    return o.status;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const textio::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
