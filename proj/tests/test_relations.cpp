#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "rootmean/error.hpp"
#include "rootmean/linalg.hpp"
#include "rootmean/relations.hpp"

using namespace rootmean;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool contains_alpha(const std::vector<RelationVector>& rels, const IntVector& alpha) {
  return std::any_of(rels.begin(), rels.end(), [&](const RelationVector& r) { return r.alpha() == alpha; });
}

RelationVector from_fixture(const fixtures::PrintedRelation& p) {
  return RelationVector(p.D, p.delta, p.support, p.alpha);
}

}  // namespace

TEST_CASE("integer nullspace") {
  const IntMatrix identity{iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
  CHECK(nullspace(identity, 3).empty());
  CHECK(rank(identity, 3) == 3);
  const IntMatrix dup{iv({2, 2, 1}), iv({3, 3, 5})};
  const auto ns = nullspace(dup, 3);
  REQUIRE(ns.size() == 1);
  CHECK(ns.front() == iv({1, -1, 0}));
  CHECK(make_primitive(iv({0, -4, 6})) == iv({0, 2, -3}));
  CHECK(primitive_from_rational({Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(3))}) == iv({3, -2}));
  // Kernel vectors really annihilate the rows.
  const IntMatrix m{iv({1, 2, 3, 4, 5}), iv({2, 3, 5, 7, 11}), iv({1, 1, 2, 3, 6})};
  for (const IntVector& v : nullspace(m, 5)) {
    for (const IntVector& row : m) {
      BigInt dot = 0;
      for (size_t i = 0; i < 5; ++i) dot += row[i] * v[i];
      CHECK(dot == 0);
    }
  }
  CHECK(nullspace(m, 5).size() == 5 - rank(m, 5));
}

TEST_CASE("mean-value matrix of the quartic") {
  const PhiMatrix pm = build_phi_matrix({{4, 0, 1}, {4, 0, 2}, {4, 0, 3}});
  CHECK(pm.rows.size() == 5);
  CHECK(pm.cols.size() == 3);
  const auto ns = nullspace(pm.entries, 3);
  REQUIRE(ns.size() == 1);
  CHECK(ns.front() == iv({5, -6, 1}));
}

TEST_CASE("relation vectors normalize and verify") {
  const RelationVector v(4, 0, {1, 2, 3}, iv({-10, 12, -2}));
  CHECK(v.alpha() == iv({5, -6, 1}));
  CHECK(v.alpha_sum() == 0);
  CHECK(v.str() == "D=4 delta=0 rho=[1,2,3] alpha=[5,-6,1]");
  CHECK_THROWS_AS(RelationVector(4, 0, {1, 2, 3}, iv({5, -6, 2})), StructureError);
  CHECK_THROWS_AS(RelationVector(4, 0, {1, 1}, iv({1, -1})), PreconditionError);
  const auto u = RelationVector::unchecked(4, 0, {1, 2}, iv({2, 4}));
  CHECK(u.alpha() == iv({1, 2}));
  CHECK(RelationVector(5, 0, {1, 2, 3, 4}, iv({1, 0, -3, 2})).nonzero_support() == std::vector<int>{1, 3, 4});
}

TEST_CASE("fundamental relations") {
  CHECK(find_relations(2, 0, {1}).basis.empty());
  const auto d3 = find_relations(3, 0, positive_rho_set(3));
  REQUIRE(d3.dim == 1);
  CHECK(d3.basis.front().alpha() == iv({1, -1}));
  const auto d4 = find_relations(4, 0, positive_rho_set(4));
  REQUIRE(d4.dim == 1);
  CHECK(d4.basis.front().alpha() == iv({5, -6, 1}));

  const auto d5 = find_relations(5, 0, positive_rho_set(5));
  CHECK(d5.dim == 2);
  CHECK(d5.minimal_support_complete);
  for (const IntVector& a : {iv({1, 0, -3, 2}), iv({0, 2, -5, 3}), iv({3, -4, 1, 0}), iv({5, -6, 0, 1})}) {
    CHECK(contains_alpha(d5.minimal_support, a));
  }
  CHECK(d5.minimal_support.size() == 4);
  REQUIRE(d5.distinguished.has_value());
  CHECK(d5.distinguished->alpha() == iv({1, -2, 2, -1}));

  const auto d6 = find_relations(6, 0, positive_rho_set(6));
  REQUIRE(d6.dim == 1);
  CHECK(d6.basis.front().alpha() == iv({77, -120, 60, -20, 3}));
  CHECK_FALSE(d6.distinguished.has_value());

  const auto d7 = find_relations(7, 0, positive_rho_set(7));
  CHECK(d7.dim == 2);
  CHECK(d7.minimal_support.size() == 6);
  CHECK(contains_alpha(d7.minimal_support, iv({37, 0, -150, 200, -135, 48})));
  CHECK(contains_alpha(d7.minimal_support, iv({0, 111, -335, 385, -246, 85})));
  CHECK(d7.distinguished->alpha() == iv({1, -3, 5, -5, 3, -1}));

  const auto d8 = find_relations(8, 0, positive_rho_set(8));
  REQUIRE(d8.dim == 1);
  CHECK(d8.basis.front().alpha() == iv({669, -1260, 1050, -700, 315, -84, 10}));

  const auto shifted5 = find_relations(5, 2, {0, 3});
  REQUIRE(shifted5.dim == 1);
  CHECK(shifted5.basis.front().alpha() == iv({1, 5}));
}

TEST_CASE("minimal supports are minimal and ordered") {
  const auto rep = find_relations(7, 0, positive_rho_set(7));
  for (size_t i = 0; i < rep.minimal_support.size(); ++i) {
    const auto si = rep.minimal_support[i].nonzero_support();
    // No proper subset carries a relation.
    CHECK(find_relations(7, 0, std::vector<int>(si.begin(), si.end() - 1), {.minimal_support = false}).dim == 0);
    for (size_t j = 0; j < rep.minimal_support.size(); ++j) {
      if (i == j) continue;
      const auto sj = rep.minimal_support[j].nonzero_support();
      CHECK_FALSE(std::includes(si.begin(), si.end(), sj.begin(), sj.end()));
    }
  }
}

TEST_CASE("relation space dimension alternates") {
  CHECK(relation_space_dim(2) == 0);
  CHECK(relation_space_dim(3) == 1);
  for (int D = 4; D <= 12; ++D) CHECK(relation_space_dim(D) == (D % 2 == 0 ? 1U : 2U));
}

TEST_CASE("alternating binomial combination for odd degrees") {
  for (int D = 3; D <= 11; D += 2) CHECK(check_odd_binomial(D));
  CHECK_THROWS_AS(check_odd_binomial(4), PreconditionError);
  const auto d3 = find_relations(3, 0, positive_rho_set(3));
  CHECK(d3.distinguished->alpha() == iv({1, -1}));
}

TEST_CASE("zero-sum property of positive-order relations") {
  for (int D = 3; D <= 9; ++D) {
    const auto rep = find_relations(D, 0, positive_rho_set(D));
    CHECK(rep.zero_sum_ok);
    for (const auto& r : rep.minimal_support) CHECK(r.alpha_sum() == 0);
  }
}

TEST_CASE("inheritance examples") {
  CHECK(check_inheritance(RelationVector(4, 0, {1, 2, 3}, iv({5, -6, 1}))));
  CHECK(check_inheritance(RelationVector(3, 0, {1, 2}, iv({1, -1}))));
  CHECK(check_inheritance(RelationVector(3, 1, {0, 2}, iv({1, 1}))));
  const auto s = shifted(RelationVector(4, 0, {1, 2, 3}, iv({5, -6, 1})));
  CHECK(s.D() == 5);
  CHECK(s.delta() == 1);
  CHECK(s.support() == std::vector<int>{2, 3, 4});
}

TEST_CASE("printed relations verify and inherit") {
  const auto rels = fixtures::printed_relations();
  for (const auto& p : rels) {
    CAPTURE(p.id);
    CHECK_NOTHROW(from_fixture(p));
  }
  for (const auto& [from, to] : fixtures::inheritance_pairs()) {
    CAPTURE(from);
    const auto src = from_fixture(fixtures::by_label(rels, from));
    const auto dst = from_fixture(fixtures::by_label(rels, to));
    CHECK(check_inheritance(src));
    CHECK(shifted(src) == dst);
  }
}

TEST_CASE("any two printed odd-degree relations are independent, any three dependent") {
  const auto rels = fixtures::printed_relations();
  for (int D : {5, 7}) {
    std::vector<RelationVector> group;
    for (const auto& p : rels) {
      if (p.D == D && p.delta == 0 && p.group == "fundamental") group.push_back(from_fixture(p));
    }
    REQUIRE(group.size() >= 3);
    const auto rho = positive_rho_set(D);
    CHECK(relation_rank(group, rho) == 2);
    for (size_t i = 0; i < group.size(); ++i) {
      for (size_t j = i + 1; j < group.size(); ++j) {
        CHECK(relation_rank({group[i], group[j]}, rho) == 2);
        for (size_t k = j + 1; k < group.size(); ++k) CHECK(relation_rank({group[i], group[j], group[k]}, rho) == 2);
      }
    }
  }
}

TEST_CASE("printed relation tables, with the ledger") {
  const auto ledger = fixtures::ledger();
  size_t failing = 0;
  for (const auto& col : fixtures::alpha_columns()) {
    CAPTURE(col.D);
    CAPTURE(col.block);
    CAPTURE(col.column);
    const bool ok = relation_sum(col.D, col.delta, col.support, col.alpha).is_zero();
    auto it = std::find_if(ledger.alpha.begin(), ledger.alpha.end(), [&](const fixtures::AlphaFix& f) {
      return f.D == col.D && f.block == col.block && f.column == col.column;
    });
    if (it == ledger.alpha.end()) {
      CHECK(ok);
      continue;
    }
    ++failing;
    CHECK_FALSE(ok);
    CHECK(it->printed == col.alpha);
    const auto suggestion = relation_on_support(col.D, col.delta, col.support);
    if (it->corrected) {
      REQUIRE(suggestion.has_value());
      CHECK(suggestion->alpha() == make_primitive(*it->corrected));
    } else {
      // Either nothing lives on the support, or only the trivial rho = 0 column.
      CHECK((!suggestion || suggestion->nonzero_support() == std::vector<int>{0}));
    }
  }
  CHECK(failing == ledger.alpha.size());
}

TEST_CASE("printed index slips") {
  const auto ledger = fixtures::ledger();
  const auto rels = fixtures::printed_relations();
  REQUIRE(ledger.support.size() == 2);
  for (const auto& fix : ledger.support) {
    const auto& p = fixtures::by_label(rels, fix.label);
    CHECK(p.support == fix.corrected_support);
    // The printed indices, taken literally, do not give a relation.
    SymPoly literal;
    for (size_t i = 0; i < p.alpha.size(); ++i) {
      literal += phi({p.D, p.delta, fix.printed_support[i]}).poly * Rational(p.alpha[i]);
    }
    CHECK_FALSE(literal.is_zero());
  }
}

TEST_CASE("default window and threads do not change results") {
  CHECK(default_rho_window(4).front() == -6);
  CHECK(default_rho_window(4).back() == 3);
  const auto a = find_relations(5, 0, positive_rho_set(5), {.threads = 1});
  const auto b = find_relations(5, 0, positive_rho_set(5), {.threads = 3});
  CHECK(a.basis == b.basis);
  CHECK(a.minimal_support == b.minimal_support);
}
