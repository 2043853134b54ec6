#include "wpoisson/catalog.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace wptest;
using catalog::Status;

namespace {

const std::vector<catalog::CatalogEntry>& bundled() {
  static const auto all = catalog::load_catalog(catalog::default_catalog_path());
  return all;
}

const catalog::ReportItem& item(const catalog::EntryReport& r, const std::string& check) {
  for (const auto& it : r.items)
    if (it.check == check) return it;
  FAIL("missing report item " << check);
  return r.items.front();
}

}  // namespace

TEST_CASE("bundled catalog loads and every potential has degree a+b+c") {
  const auto& all = bundled();
  CHECK(all.size() > 100);
  for (const auto& e : all) {
    CHECK(e.omega.is_homogeneous());
    CHECK(*e.omega.degree() == e.weights.sum());
  }
  CHECK(catalog::entries(all, {}).size() == all.size());
}

TEST_CASE("filters") {
  const auto& all = bundled();
  CHECK(catalog::entries(all, {"table:112"}).size() == 25);
  const auto iso = catalog::entries(all, {"type:i"});
  std::set<std::string> weights;
  for (const auto& e : iso) weights.insert(e.weights.to_string());
  CHECK(iso.size() == 9);
  CHECK(weights.size() == 3);
  CHECK(catalog::entries(all, {"weights:2,3,5", "type:nw"}).size() == 1);
  CHECK(catalog::entries(all, {"id:does-not-exist"}).empty());
  CHECK_THROWS(catalog::entries(all, {"colour:red"}));
  CHECK_THROWS(catalog::entries(all, {"type:zz"}));
}

TEST_CASE("side conditions") {
  CHECK(catalog::condition_holds("c!=ma+nb", Weights(5, 6, 8)));
  CHECK(catalog::condition_holds("c!=ma+nb", Weights(2, 4, 5)));
  CHECK(catalog::condition_holds("c=ma+nb", Weights(3, 4, 5)));  // 3*3 - 4
  CHECK(catalog::condition_holds("c=ka", Weights(1, 1, 3)));
  CHECK_FALSE(catalog::condition_holds("a_div_b", Weights(2, 3, 3)));
  CHECK_THROWS(catalog::condition_holds("nonsense", Weights(1, 1, 1)));
}

TEST_CASE("malformed records are rejected at load") {
  const std::string ok = "t1 | 1,1,2 | z^2+x^3*y | bw | yes | 0 | 1 | yes | unknown | no | table=112\n";
  CHECK(catalog::parse_catalog(ok).size() == 1);
  CHECK_THROWS(catalog::parse_catalog("t1 | 1,1,2 | z^2+x^2 | r | no | 0 | 1 | no | no | no | table=112\n"));
  CHECK_THROWS(catalog::parse_catalog("t1 | 1,1,2 | z^2 | r | no | 0 | 1 | no | no | no | table=112; cond=a<b=c\n"));
  CHECK_THROWS(catalog::parse_catalog("t1 | 1,1,2 | z^2 | q | no | 0 | 1 | no | no | no | table=112\n"));
  CHECK_THROWS(catalog::parse_catalog(ok + ok));
  CHECK_THROWS(catalog::parse_catalog("t1 | 1,1,2 | z^2\n"));
  const auto e = catalog::parse_catalog("t | 1,1,1 | x^3 | r | no | <=-1 | 1|2 | no | no | no | table=111\n");
  CHECK(e[0].rgt.matches(-4));
  CHECK_FALSE(e[0].rgt.matches(0));
  CHECK(e[0].gk.matches(2));
  CHECK_FALSE(e[0].gk.matches(0));
}

TEST_CASE("verify an isolated entry") {
  const auto es = catalog::entries(bundled(), {"id:112-i-5"});
  REQUIRE(es.size() == 1);
  const auto r = catalog::verify_entry(es[0], 14);
  CHECK_FALSE(r.failed());
  CHECK(item(r, "rgt").computed == "0");
  CHECK(item(r, "gk").computed == "0");
  CHECK(item(r, "isolated").computed == "yes");
  CHECK(item(r, "ph-closed-forms").status == Status::pass);
}

TEST_CASE("verify the cusp and a pure power") {
  const auto cusp = catalog::verify_entry(catalog::entries(bundled(), {"id:123-nw-1"}).at(0), 18);
  CHECK_FALSE(cusp.failed());
  CHECK(item(cusp, "vacant").computed == "no");
  CHECK(item(cusp, "sealed").computed == "no");
  const auto x4 = catalog::verify_entry(catalog::entries(bundled(), {"id:112-r-1"}).at(0), 12);
  CHECK(item(x4, "rgt").computed == "-5");
  CHECK(item(x4, "gk").computed == "2");
}

TEST_CASE("unknown sealedness is reported, not graded") {
  const auto r = catalog::verify_entry(catalog::entries(bundled(), {"id:112-q-1"}).at(0), 12);
  CHECK(item(r, "sealed").status == Status::info);
}

TEST_CASE("empty selection gives an empty report") {
  const auto agg = catalog::verify_all({}, 10);
  CHECK(agg.entries.empty());
  CHECK(agg.ok());
}
