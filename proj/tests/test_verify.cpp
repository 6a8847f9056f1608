#include <catch2/catch_amalgamated.hpp>

#include "steiner/scan.hpp"
#include "steiner/verify.hpp"

using namespace steiner;

namespace {

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, es);
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, es);
}

std::string value_of(const VerificationReport& r, const std::string& name) {
  for (const auto& [k, v] : r.values)
    if (k == name) return v;
  return "<missing " + name + ">";
}

}  // namespace

TEST_CASE("bound table") {
  CHECK(BoundSpec::for_k(2).bound == Rational(2, 1));
  CHECK(BoundSpec::for_k(3).bound == Rational(8, 5));
  CHECK(BoundSpec::for_k(4).bound == Rational(10, 7));
  CHECK(BoundSpec::for_k(5).bound == Rational(8, 6));
  CHECK(BoundSpec::for_k(9).bound == Rational(12, 10));
  CHECK(BoundSpec::tree_bound(3) == Rational(3, 2));
  CHECK_THROWS_AS(BoundSpec::for_k(1), Error);
}

TEST_CASE("report lines have stable field order") {
  VerificationReport r;
  r.claim = "demo";
  r.add("alpha", (std::int64_t)1);
  r.add("beta", Rational(8, 6));
  CHECK(r.line() == "claim=demo status=Verified alpha=1 beta=4/3");
  r.status = Status::PremiseNotMet;
  CHECK(r.line() == "claim=demo status=PremiseNotMet alpha=1 beta=4/3");
}

TEST_CASE("check_bound on trees and the G5 equality case") {
  const auto tree2 = check_bound(path_graph(6), 2);
  CHECK(tree2.status == Status::Verified);

  const auto g5 = check_bound(build_Gk(5).graph, 5);
  CHECK(g5.status == Status::Verified);
  CHECK(value_of(g5, "srad") == "6");
  CHECK(value_of(g5, "sdiam") == "8");
  CHECK(value_of(g5, "ratio") == "4/3");     // 8/6 reduced
  CHECK(value_of(g5, "bound") == "4/3");     // equality: the bound is tight

  SweepOptions tiny;
  tiny.budget = 10;
  const auto skipped = check_bound(path_graph(6), 2, tiny);
  CHECK(skipped.status == Status::Skipped);
}

TEST_CASE("check_tree_bound: stars meet k/(k-1) with equality") {
  // K_{1,5}: srad_3 = 2 (center + two leaves spans 2), sdiam_3 = 3
  const auto r = check_tree_bound(star_graph(5), 3);
  CHECK(r.status == Status::Verified);
  CHECK(value_of(r, "srad") == "2");
  CHECK(value_of(r, "sdiam") == "3");

  // K_{1,4} same shape
  const auto r4 = check_tree_bound(star_graph(4), 3);
  CHECK(r4.status == Status::Verified);
  CHECK(value_of(r4, "srad") == "2");
  CHECK(value_of(r4, "sdiam") == "3");

  // P6 at k=3: every vertex rides with both ends, srad = sdiam = 5
  const auto p6 = check_tree_bound(path_graph(6), 3);
  CHECK(p6.status == Status::Verified);
  CHECK(value_of(p6, "srad") == "5");
  CHECK(value_of(p6, "sdiam") == "5");

  const auto p6k2 = check_tree_bound(path_graph(6), 2);
  CHECK(p6k2.status == Status::Verified);

  CHECK_THROWS_AS(check_tree_bound(build_Gk(5).graph, 3), Error);  // not a tree
}

TEST_CASE("verify_Gk witness and exhaustive tiers") {
  const auto w5 = verify_Gk(5, Tier::Witness);
  CHECK(w5.status == Status::Verified);
  CHECK(value_of(w5, "dR") == "6");
  CHECK(value_of(w5, "dD") == "8");
  CHECK(value_of(w5, "er") == "6");

  const auto e5 = verify_Gk(5, Tier::Exhaustive);
  CHECK(e5.status == Status::Verified);
  CHECK(value_of(e5, "srad") == "6");
  CHECK(value_of(e5, "sdiam") == "8");
  CHECK(value_of(e5, "ratio") == "4/3");

  const auto e6 = verify_Gk(6, Tier::Exhaustive);
  CHECK(e6.status == Status::Verified);
  CHECK(value_of(e6, "srad") == "7");
  CHECK(value_of(e6, "sdiam") == "9");
}

TEST_CASE("verify_H witness tier reproduces the displayed arithmetic") {
  const auto h = verify_H(Tier::Witness);
  CHECK(h.status == Status::Verified);
  CHECK(value_of(h, "e4_v0") == "20");
  CHECK(value_of(h, "dD") == "26");
  CHECK(value_of(h, "d_v0_u4") == "2");
  CHECK(value_of(h, "d_uv") == "6");
  CHECK(value_of(h, "below_bound") == "1");  // 7*26 = 182 <= 10*20 = 200
}

TEST_CASE("verify_claim_violation reports 13 + 6 + 6 = 25 < 26") {
  const auto c = verify_claim_violation();
  CHECK(c.status == Status::Verified);
  CHECK(value_of(c, "d_D2") == "19");
  CHECK(value_of(c, "t2pp") == "13");
  CHECK(value_of(c, "d_D1") == "20");
  CHECK(value_of(c, "a1") == "6");
  CHECK(value_of(c, "b1") == "6");
  CHECK(value_of(c, "c1") == "6");
  CHECK(value_of(c, "d1") == "0");
  CHECK(value_of(c, "ell1") == "2");
  CHECK(value_of(c, "lhs") == "25");
  CHECK(value_of(c, "sdiam4") == "26");
  CHECK(value_of(c, "violated") == "1");
  // the claim's own premises on this graph: ell premise holds, the
  // pairwise-distance premise does not (d(v0,v_i) = 7 <= 78/10)
  CHECK(value_of(c, "ell_premise_met") == "1");
  CHECK(value_of(c, "min_pair_dist") == "7");
  CHECK(value_of(c, "pair_premise_met") == "0");
}

TEST_CASE("check_lemma on G5: premise at 13/10 holds, 4/3 is the boundary") {
  const Graph g5 = build_Gk(5).graph;
  const auto ok = check_lemma(g5, 5, Rational(13, 10));
  CHECK(ok.status == Status::Verified);
  CHECK(value_of(ok, "srad") == "6");
  CHECK(value_of(ok, "sdiam") == "8");

  const auto boundary = check_lemma(g5, 5, Rational(4, 3));
  CHECK(boundary.status == Status::PremiseNotMet);  // 8 = (4/3)*6 exactly, not >

  CHECK_THROWS_AS(check_lemma(g5, 5, Rational(1, 1)), Error);
}

TEST_CASE("check_lemma on P10 at k=2 against classical values") {
  const Graph p10 = path_graph(10);
  // rad = 5 (vertices 4,5), diam = 9; premise 9 > (3/2)*5 holds
  const auto r = check_lemma(p10, 2, Rational(3, 2));
  CHECK(r.status == Status::Verified);
  CHECK(value_of(r, "srad") == "5");
  CHECK(value_of(r, "sdiam") == "9");

  // with p = 2 the premise 9 > 10 fails
  CHECK(check_lemma(p10, 2, Rational(2, 1)).status == Status::PremiseNotMet);
}

TEST_CASE("corollary instance: p = (k+3)/(k+1) premise never holds under the bound") {
  // any graph satisfying the bound makes the corollary vacuous
  const auto r = check_lemma(build_Gk(5).graph, 5, Rational(8, 6));
  CHECK(r.status == Status::PremiseNotMet);
}
