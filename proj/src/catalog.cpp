#include "wpoisson/catalog.hpp"

#include "wpoisson/hilbert.hpp"
#include "wpoisson/jacobian.hpp"
#include "wpoisson/poisson.hpp"
#include "wpoisson/textio.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef WPOISSON_DATA_DIR
#define WPOISSON_DATA_DIR "data"
#endif

namespace wpoisson::catalog {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

OmegaType parse_type(const std::string& s) {
  if (s == "i") return OmegaType::i;
  if (s == "q") return OmegaType::q;
  if (s == "bw") return OmegaType::bw;
  if (s == "nw") return OmegaType::nw;
  if (s == "r") return OmegaType::r;
  throw std::invalid_argument("unknown type label: " + s);
}

Tri parse_tri(const std::string& s) {
  if (s == "yes") return Tri::yes;
  if (s == "no") return Tri::no;
  if (s == "unknown" || s == "?") return Tri::unknown;
  throw std::invalid_argument("expected yes/no/unknown: " + s);
}

bool parse_bool(const std::string& s) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw std::invalid_argument("expected yes/no: " + s);
}

// c = m*a + n*b with m, n in {-1, 0, 1, 2, ...}
bool is_ma_plus_nb(int a, int b, int c) {
  for (int m = -1; m * a <= c + b; ++m)
    for (int n = -1; m * a + n * b <= c; ++n)
      if (m * a + n * b == c) return true;
  return false;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ReportItem compare(std::string check, bool ok, std::string expected, std::string computed) {
  return {std::move(check), ok ? Status::pass : Status::fail, std::move(expected), std::move(computed)};
}

ReportItem compare_tri(std::string check, Tri expected, bool computed) {
  if (expected == Tri::unknown) return {std::move(check), Status::info, "unknown", yes_no(computed)};
  return compare(std::move(check), (expected == Tri::yes) == computed, to_string(expected), yes_no(computed));
}

std::string first_nonzero(const std::vector<std::pair<int, std::size_t>>& rows) {
  for (const auto& [d, v] : rows)
    if (v != 0) return "degree " + std::to_string(d) + ": " + std::to_string(v);
  return "none";
}

}  // namespace

std::string to_string(OmegaType t) {
  switch (t) {
    case OmegaType::i: return "i";
    case OmegaType::q: return "q";
    case OmegaType::bw: return "bw";
    case OmegaType::nw: return "nw";
    case OmegaType::r: return "r";
  }
  return "?";
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "?";
}

IntExpectation IntExpectation::parse(const std::string& text) {
  IntExpectation e;
  const std::string t = trim(text);
  if (t.rfind("<=", 0) == 0) {
    e.bound_ = parse_int(trim(t.substr(2)));
    return e;
  }
  for (const auto& part : split(t, '|')) e.values_.push_back(parse_int(part));
  return e;
}

bool IntExpectation::matches(int v) const {
  if (bound_) return v <= *bound_;
  return std::find(values_.begin(), values_.end(), v) != values_.end();
}

std::string IntExpectation::to_string() const {
  if (bound_) return "<=" + std::to_string(*bound_);
  std::string s;
  for (std::size_t k = 0; k < values_.size(); ++k) s += (k ? "|" : "") + std::to_string(values_[k]);
  return s;
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("WPOISSON_CATALOG"); env && *env) return env;
  return std::string(WPOISSON_DATA_DIR) + "/catalog.txt";
}

bool condition_holds(const std::string& cond, const Weights& w) {
  const int a = w.a(), b = w.b(), c = w.c();
  if (cond == "a=b=c") return a == b && b == c;
  if (cond == "a=b<c") return a == b && b < c;
  if (cond == "a<b=c") return a < b && b == c;
  if (cond == "a<b<c") return a < b && b < c;
  if (cond == "c=ka") return c % a == 0;
  if (cond == "c!=ka") return c % a != 0;
  if (cond == "a_div_b") return b % a == 0;
  if (cond == "a_ndiv_b") return b % a != 0;
  if (cond == "c=a+b") return c == a + b;
  if (cond == "c!=a+b") return c != a + b;
  if (cond == "c=ma+nb") return is_ma_plus_nb(a, b, c);
  if (cond == "c!=ma+nb") return !is_ma_plus_nb(a, b, c);
  if (cond == "b=2a") return b == 2 * a;
  if (cond == "b!=2a") return b != 2 * a;
  if (cond == "c!=2a") return c != 2 * a;
  throw std::invalid_argument("unknown side condition: " + cond);
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto where = "catalog line " + std::to_string(lineno) + ": ";
    const auto f = split(t, '|');
    // gk may itself contain '|', so the gk column is everything between
    // the rgt column and the last four columns.
    if (f.size() < 11) throw std::invalid_argument(where + "expected 11 columns");
    const std::size_t extra = f.size() - 11;
    std::string gk = f[6];
    for (std::size_t k = 0; k < extra; ++k) gk += "|" + f[7 + k];
    try {
      CatalogEntry e;
      e.id = f[0];
      if (!ids.insert(e.id).second) throw std::invalid_argument("duplicate id " + e.id);
      e.weights = textio::parse_weights(f[1]);
      e.omega_text = f[2];
      e.omega = textio::parse_poly(f[2], e.weights);
      e.type = parse_type(f[3]);
      e.irreducible = parse_bool(f[4]);
      e.rgt = IntExpectation::parse(f[5]);
      e.gk = IntExpectation::parse(gk);
      e.vacant = parse_tri(f[7 + extra]);
      e.sealed = parse_tri(f[8 + extra]);
      e.isolated = parse_bool(f[9 + extra]);
      e.notes = f[10 + extra];
      for (const auto& kv : split(e.notes, ';')) {
        if (kv.empty()) continue;
        const auto eq = kv.find('=');
        const std::string key = trim(kv.substr(0, eq));
        const std::string val = eq == std::string::npos ? "" : trim(kv.substr(eq + 1));
        if (key == "table") e.table = val;
        else if (key == "cond") {
          for (const auto& c : split(val, ',')) e.conditions.push_back(c);
        } else if (key == "flag") e.flags.push_back(val);
      }
      if (e.table.empty()) throw std::invalid_argument("missing table= note");
      for (const auto& c : e.conditions)
        if (!condition_holds(c, e.weights)) throw std::invalid_argument("side condition " + c + " fails");
      if (e.omega.is_zero() || !e.omega.is_homogeneous() || *e.omega.degree() != e.weights.sum())
        throw std::invalid_argument("potential is not homogeneous of degree a+b+c");
      if (e.irreducible != (e.type != OmegaType::r))
        throw std::invalid_argument("type label disagrees with irreducibility");
      out.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw std::invalid_argument(where + ex.what());
    }
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::vector<CatalogEntry> entries(const std::vector<CatalogEntry>& all, const std::vector<std::string>& filters) {
  using Pred = std::function<bool(const CatalogEntry&)>;
  std::vector<Pred> preds;
  for (const auto& f : filters) {
    const auto colon = f.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("filter needs kind:value, got " + f);
    const std::string kind = f.substr(0, colon), val = f.substr(colon + 1);
    if (kind == "table") {
      preds.push_back([val](const CatalogEntry& e) { return e.table == val; });
    } else if (kind == "type") {
      const OmegaType t = parse_type(val);
      preds.push_back([t](const CatalogEntry& e) { return e.type == t; });
    } else if (kind == "weights") {
      const Weights w = textio::parse_weights(val);
      preds.push_back([w](const CatalogEntry& e) { return e.weights == w; });
    } else if (kind == "id") {
      preds.push_back([val](const CatalogEntry& e) { return e.id == val; });
    } else if (kind == "irreducible") {
      const bool b = parse_bool(val);
      preds.push_back([b](const CatalogEntry& e) { return e.irreducible == b; });
    } else {
      throw std::invalid_argument("unknown filter kind: " + kind);
    }
  }
  std::vector<CatalogEntry> out;
  for (const auto& e : all)
    if (std::all_of(preds.begin(), preds.end(), [&](const Pred& p) { return p(e); })) out.push_back(e);
  return out;
}

bool EntryReport::failed() const {
  return std::any_of(items.begin(), items.end(), [](const ReportItem& r) { return r.status == Status::fail; });
}

bool ph_matches_closed_forms(const complexes::DimsTable& t, const Weights& w) {
  for (int i = 0; i < 4; ++i) {
    const auto exp = hilbert::closed_form_ph(w, i).expand(t.min_degree, t.max_degree);
    for (int d = t.min_degree; d <= t.max_degree; ++d)
      if (exp[static_cast<std::size_t>(d - t.min_degree)] != static_cast<unsigned long>(t.at(i, d))) return false;
  }
  return true;
}

EntryReport verify_entry(const CatalogEntry& e, std::optional<int> max_degree, complexes::Execution ex) {
  EntryReport rep;
  rep.id = e.id;
  rep.omega = textio::format_poly(e.omega);
  rep.weights = e.weights.to_string();
  const int D = max_degree ? *max_degree : complexes::default_max_degree(e.omega);
  rep.max_degree = D;
  auto& items = rep.items;
  try {
    const auto s = poisson::from_potential(e.omega);
    items.push_back(compare("jacobiator", poisson::jacobiator(s).is_zero(), "0", textio::format_poly(poisson::jacobiator(s))));
    const auto mod = poisson::modular_derivation(s);
    items.push_back(compare("modular", is_zero(mod), "0", is_zero(mod) ? "0" : "nonzero"));

    const int r = poisson::rgt(e.omega);
    items.push_back(compare("rgt", e.rgt.matches(r), e.rgt.to_string(), std::to_string(r)));
    const int gk = jacobian::gkdim(e.omega);
    items.push_back(compare("gk", e.gk.matches(gk), e.gk.to_string(), std::to_string(gk)));
    const bool iso = jacobian::has_isolated_singularity(e.omega);
    items.push_back(compare("isolated", iso == e.isolated, yes_no(e.isolated), yes_no(iso)));

    complexes::PoissonComplex cx(e.omega);
    const auto vac = complexes::vacancy_check(cx, D, ex);
    std::vector<std::pair<int, std::size_t>> uph2;
    for (const auto& row : vac.rows) uph2.emplace_back(row.degree, row.uph2);
    items.push_back(compare_tri("vacant", e.vacant, vac.vacant()));
    if (!vac.vacant()) items.push_back({"uph2-first", Status::info, "", first_nonzero(uph2)});

    const auto oz = complexes::ozone_vs_hamiltonian(cx, D, ex);
    bool agree = oz.rows.size() == vac.rows.size();
    for (std::size_t k = 0; agree && k < oz.rows.size(); ++k)
      agree = (vac.rows[k].uph2 == 0) == (oz.rows[k].od == oz.rows[k].hd);
    items.push_back(compare("vacancy-vs-ozone", agree, "agree per degree", agree ? "agree" : "differ"));

    const auto sealed = complexes::sealed_k1_dims(e.omega, D, ex);
    items.push_back(compare_tri("sealed", e.sealed, sealed.sealed()));

    if (e.type == OmegaType::i || e.type == OmegaType::q || e.type == OmegaType::bw) {
      const auto t = complexes::ph_dims(cx, D, ex);
      const bool ok = ph_matches_closed_forms(t, e.weights);
      items.push_back(compare("ph-closed-forms", ok, "match", ok ? "match" : "mismatch"));
    }
    const bool euler = complexes::euler_characteristic_check(cx, D, ex);
    items.push_back(compare("euler-characteristic", euler, "holds", euler ? "holds" : "violated"));
  } catch (const std::exception& err) {
    items.push_back({"exception", Status::fail, "", err.what()});
  }
  return rep;
}

AggregateReport verify_all(const std::vector<CatalogEntry>& es, std::optional<int> max_degree,
                           complexes::Execution ex) {
  AggregateReport agg;
  agg.entries.resize(es.size());
  if (ex == complexes::Execution::parallel) {
    // Entries in parallel; each entry then runs its degrees serially.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < es.size(); ++k)
      agg.entries[k] = verify_entry(es[k], max_degree, complexes::Execution::serial);
  } else {
    for (std::size_t k = 0; k < es.size(); ++k)
      agg.entries[k] = verify_entry(es[k], max_degree, complexes::Execution::serial);
  }
  for (const auto& r : agg.entries)
    for (const auto& it : r.items) {
      if (it.status == Status::pass) ++agg.passed;
      else if (it.status == Status::fail) ++agg.failed;
      else ++agg.infos;
    }
  return agg;
}

}  // namespace wpoisson::catalog
