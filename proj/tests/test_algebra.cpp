#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "manyval/algebra.hpp"
#include "manyval/builtins.hpp"
#include "oracles.hpp"

using namespace manyval;

namespace {

Partition partition_of(const Matrix& m, const char* literal) {
  return Partition::from_literal(m, literal);
}

const char* kNineClass =
    "{Bb,Tb,Fb,Nb|Bt,Ft|Bf,Tf|Bn|Tt,Nt|Tn|Ff,Nf|Fn|Nn}";
const char* kThirteenClass =
    "{Bb,Tb,Fb,Nb|Bt|Bf|Bn|Tt|Tf|Tn|Ft|Ff|Fn|Nt|Nf|Nn}";

}  // namespace

TEST_CASE("direct products") {
  Matrix fde = build_builtin("fde");
  Matrix ac2 = build_builtin("ac2");
  SUBCASE("fde times ac2") {
    Matrix p = direct_product(fde, ac2);
    CHECK(p.size() == 16);
    std::set<std::string> designated;
    for (Value v : p.designated_values()) designated.insert(p.value_name(v));
    CHECK(designated == std::set<std::string>{"Tn", "Bf", "Tf", "Bn"});
    CHECK(p.apply_named("and", {"Bf", "Tn"}) ==
          fde.apply_named("and", {"B", "T"}) + ac2.apply_named("and", {"f", "n"}));
  }
  SUBCASE("product with a one-point matrix is isomorphic to the factor") {
    Matrix unit("unit", {"e"}, {"e"},
                {Operation{"neg", 1, {0}}, Operation{"and", 2, {0}},
                 Operation{"or", 2, {0}}});
    Matrix p = direct_product(fde, unit);
    CHECK(p.size() == fde.size());
    CHECK(find_isomorphism(p, fde).has_value());
  }
  SUBCASE("nc squared") {
    Matrix nc = build_builtin("nc");
    Matrix p = direct_product(nc, nc);
    CHECK(p.size() == 81);
    CHECK(p.designated_count() == 9);
  }
  SUBCASE("signature mismatch is rejected") {
    CHECK_THROWS_WITH_AS(direct_product(fde, build_builtin("kw3")),
                         doctest::Contains("signature"), Error);
  }
}

TEST_CASE("strong homomorphism checks") {
  Matrix nc = build_builtin("nc");
  Matrix fc = build_builtin("fc");
  SUBCASE("identity") {
    CHECK(is_strong_homomorphism(nc, nc, ValueMap::identity(nc)).ok);
  }
  SUBCASE("projection onto the nine-class factor") {
    auto census = enumerate_congruences(fc, {});
    REQUIRE(census.congruences.size() == 2);
    auto [factor, projection] = factor_matrix(fc, census.congruences.front());
    CHECK(is_strong_homomorphism(fc, factor, projection).ok);
  }
  SUBCASE("a constant map breaks designation with a witness") {
    ValueMap constant;
    constant.source = fc.name();
    constant.target = nc.name();
    constant.map.assign(fc.size(), nc.value("tt"));
    HomCheck check = is_strong_homomorphism(fc, nc, constant);
    REQUIRE_FALSE(check.ok);
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->kind == HomWitness::Kind::Designation);
    // first violation in declaration order: the undesignated Bb
    CHECK(fc.value_name(check.witness->value) == "Bb");
  }
  SUBCASE("an operation violation carries the offending tuple") {
    // identity on values but with designation preserved and one op broken:
    // map nc to itself swapping ff and fu (both undesignated).
    ValueMap swap = ValueMap::identity(nc);
    swap.kind = ValueMap::Kind::Raw;
    std::swap(swap.map[nc.value("ff")], swap.map[nc.value("fu")]);
    HomCheck check = is_strong_homomorphism(nc, nc, swap);
    REQUIRE_FALSE(check.ok);
    CHECK(check.witness->kind == HomWitness::Kind::Operation);
  }
  SUBCASE("foreign values are rejected, not reported") {
    ValueMap bad;
    bad.source = nc.name();
    bad.target = nc.name();
    bad.map.assign(nc.size(), static_cast<Value>(200));
    CHECK_THROWS_AS(is_strong_homomorphism(nc, nc, bad), Error);
  }
}

TEST_CASE("induced partitions") {
  Matrix fde = build_builtin("fde");
  SUBCASE("identity induces singletons") {
    Partition p = induced_partition(fde, ValueMap::identity(fde));
    CHECK(p.block_count() == 4);
    CHECK(p.is_identity());
  }
  SUBCASE("the fc to nc epimorphism induces the nine-class congruence") {
    Matrix fc = build_builtin("fc");
    Matrix nc = build_builtin("nc");
    auto epis = find_epimorphisms(fc, nc, false);
    REQUIRE(epis.size() == 1);
    Partition p = induced_partition(fc, epis.front());
    CHECK(p == partition_of(fc, kNineClass));
    // spot check the all-b block
    bool found = false;
    for (const auto& block : p.blocks) {
      std::set<std::string> names;
      for (Value v : block) names.insert(fc.value_name(v));
      if (names == std::set<std::string>{"Bb", "Fb", "Nb", "Tb"}) found = true;
    }
    CHECK(found);
  }
  SUBCASE("a constant map induces one block") {
    Matrix kw3 = build_builtin("kw3");
    ValueMap constant;
    constant.source = kw3.name();
    constant.target = kw3.name();
    constant.map.assign(3, kw3.value("t"));
    CHECK(induced_partition(kw3, constant).block_count() == 1);
  }
}

TEST_CASE("congruence checks") {
  Matrix fc = build_builtin("fc");
  SUBCASE("the nine-class partition is a congruence") {
    CHECK(is_congruence(fc, partition_of(fc, kNineClass)).ok);
    CHECK(is_congruence(fc, partition_of(fc, kThirteenClass)).ok);
  }
  SUBCASE("merging designated with undesignated is caught") {
    Partition p = partition_of(fc,
        "{Bb|Bt|Bf|Bn|Tb|Tt|Tf|Tn,Nn|Fb|Ft|Ff|Fn|Nb|Nt|Nf}");
    CongruenceCheck check = is_congruence(fc, p);
    REQUIRE_FALSE(check.ok);
    CHECK(check.witness->kind == CongruenceWitness::Kind::MixedBlock);
  }
  SUBCASE("every two-element merge in nc fails with an operation witness") {
    Matrix nc = build_builtin("nc");
    int checked = 0;
    for (std::size_t a = 0; a < nc.size(); ++a) {
      for (std::size_t b = a + 1; b < nc.size(); ++b) {
        if (nc.is_designated(static_cast<Value>(a)) !=
            nc.is_designated(static_cast<Value>(b)))
          continue;
        std::vector<std::vector<Value>> blocks;
        blocks.push_back({static_cast<Value>(a), static_cast<Value>(b)});
        for (std::size_t v = 0; v < nc.size(); ++v) {
          if (v != a && v != b) blocks.push_back({static_cast<Value>(v)});
        }
        CongruenceCheck check = is_congruence(nc, Partition::of_blocks(nc, blocks));
        REQUIRE_FALSE(check.ok);
        REQUIRE(check.witness.has_value());
        CHECK(check.witness->kind == CongruenceWitness::Kind::Operation);
        // the witness names blockwise-equal tuples that separate
        ++checked;
      }
    }
    CHECK(checked == 18);  // C(3,2) designated + C(6,2) undesignated
  }
  SUBCASE("foreign partitions are rejected") {
    Matrix nc = build_builtin("nc");
    CHECK_THROWS_AS(is_congruence(nc, Partition::identity(fc)), Error);
  }
}

TEST_CASE("congruence enumeration on the named matrices") {
  SUBCASE("fc has exactly the two published non-trivial congruences") {
    Matrix fc = build_builtin("fc");
    auto census = enumerate_congruences(fc, {});
    REQUIRE(census.complete);
    REQUIRE(census.congruences.size() == 2);
    CHECK(census.congruences[0].partition == partition_of(fc, kNineClass));
    CHECK(census.congruences[1].partition == partition_of(fc, kThirteenClass));
    EnumerationOptions with_identity;
    with_identity.include_identity = true;
    auto full = enumerate_congruences(fc, with_identity);
    CHECK(full.congruences.size() == 3);
    CHECK(full.congruences.back().partition.is_identity());
  }
  SUBCASE("nc has only the identity congruence") {
    auto census = enumerate_congruences(build_builtin("nc"), {});
    CHECK(census.complete);
    CHECK(census.congruences.empty());
  }
  SUBCASE("the two-valued Boolean matrix has only the identity congruence") {
    auto census = enumerate_congruences(oracles::boolean2(), {});
    CHECK(census.complete);
    CHECK(census.congruences.empty());
  }
}

TEST_CASE("enumeration options") {
  Matrix fc = build_builtin("fc");
  SUBCASE("limit stops early and is flagged") {
    EnumerationOptions options;
    options.limit = 1;
    auto result = enumerate_congruences(fc, options);
    CHECK(result.congruences.size() == 1);
    CHECK(result.hit_limit);
    CHECK_FALSE(result.complete);
  }
  SUBCASE("an exhausted node budget reports an explicitly partial result") {
    EnumerationOptions options;
    options.node_cap = 3;
    auto result = enumerate_congruences(fc, options);
    CHECK_FALSE(result.complete);
  }
  SUBCASE("worker count does not change the output") {
    EnumerationOptions serial, parallel;
    serial.include_identity = parallel.include_identity = true;
    parallel.jobs = 4;
    auto a = enumerate_congruences(fc, serial);
    auto b = enumerate_congruences(fc, parallel);
    REQUIRE(a.congruences.size() == b.congruences.size());
    for (std::size_t i = 0; i < a.congruences.size(); ++i)
      CHECK(a.congruences[i].partition == b.congruences[i].partition);
  }
  SUBCASE("repeated runs are identical") {
    auto a = enumerate_congruences(fc, {});
    auto b = enumerate_congruences(fc, {});
    REQUIRE(a.congruences.size() == b.congruences.size());
    for (std::size_t i = 0; i < a.congruences.size(); ++i)
      CHECK(a.congruences[i].partition == b.congruences[i].partition);
  }
}

TEST_CASE("factor matrices") {
  Matrix fc = build_builtin("fc");
  auto census = enumerate_congruences(fc, {});
  REQUIRE(census.congruences.size() == 2);
  SUBCASE("the nine-class factor") {
    auto [factor, projection] = factor_matrix(fc, census.congruences[0]);
    CHECK(factor.size() == 9);
    std::set<std::string> designated;
    for (Value v : factor.designated_values()) designated.insert(factor.value_name(v));
    CHECK(designated == std::set<std::string>{"Tn", "Bf·Tf", "Bn"});
    CHECK(projection.kind == ValueMap::Kind::Epi);
    CHECK(projection.is_surjective(factor.size()));
    CHECK(validate_matrix(factor).ok);
  }
  SUBCASE("the thirteen-class factor keeps four designated singletons") {
    auto [factor, projection] = factor_matrix(fc, census.congruences[1]);
    CHECK(factor.size() == 13);
    CHECK(factor.designated_count() == 4);
    for (Value v : factor.designated_values())
      CHECK(factor.value_name(v).find("·") == std::string::npos);
  }
  SUBCASE("factoring by the identity is an isomorphic copy") {
    Congruence identity{Partition::identity(fc), true};
    auto [factor, projection] = factor_matrix(fc, identity);
    CHECK(factor.size() == fc.size());
    CHECK(find_isomorphism(factor, fc).has_value());
  }
  SUBCASE("unverified congruences are rejected") {
    Congruence unverified{partition_of(fc, kNineClass), false};
    CHECK_THROWS_WITH_AS(factor_matrix(fc, unverified), doctest::Contains("unverified"),
                         Error);
  }
}

TEST_CASE("isomorphism search") {
  Matrix nc = build_builtin("nc");
  Matrix fde = build_builtin("fde");
  Matrix ac2 = build_builtin("ac2");
  SUBCASE("the nine-class factor is isomorphic to nc") {
    Matrix fc = build_builtin("fc");
    auto census = enumerate_congruences(fc, {});
    auto [factor, projection] = factor_matrix(fc, census.congruences.front());
    auto iso = find_isomorphism(factor, nc);
    REQUIRE(iso.has_value());
    CHECK(iso->kind == ValueMap::Kind::Iso);
    CHECK(oracles::naive_is_hom(factor, nc, iso->map));
    CHECK(iso->is_injective());
  }
  SUBCASE("nc maps to itself by the identity") {
    auto iso = find_isomorphism(nc, nc);
    REQUIRE(iso.has_value());
    for (std::size_t v = 0; v < nc.size(); ++v) CHECK(iso->map[v] == v);
  }
  SUBCASE("fde and ac2 are not isomorphic") {
    CHECK_FALSE(find_isomorphism(fde, ac2).has_value());
    CHECK_FALSE(oracles::naive_find_isomorphism(fde, ac2).has_value());
  }
  SUBCASE("size and signature prechecks") {
    CHECK_FALSE(find_isomorphism(nc, fde).has_value());
    CHECK_FALSE(find_isomorphism(fde, build_builtin("kw3")).has_value());
  }
}

TEST_CASE("automorphism groups of the named matrices are trivial") {
  Matrix nc = build_builtin("nc");
  auto autos = automorphisms(nc);
  REQUIRE(autos.size() == 1);
  for (std::size_t v = 0; v < nc.size(); ++v) CHECK(autos[0].map[v] == v);

  Matrix fde = build_builtin("fde");
  CHECK(automorphisms(fde).size() == 1);
  CHECK(oracles::naive_automorphisms(fde).size() == 1);

  CHECK(automorphisms(oracles::boolean2()).size() == 1);
}

TEST_CASE("epimorphism search") {
  Matrix fc = build_builtin("fc");
  Matrix nc = build_builtin("nc");
  SUBCASE("fc maps onto nc") {
    auto epis = find_epimorphisms(fc, nc, false);
    REQUIRE(epis.size() == 1);
    const ValueMap& epi = epis.front();
    CHECK(epi.kind == ValueMap::Kind::Epi);
    CHECK(epi.is_surjective(nc.size()));
    CHECK(is_strong_homomorphism(fc, nc, epi).ok);
  }
  SUBCASE("find_all yields the same single epimorphism for fc to nc") {
    auto all = find_epimorphisms(fc, nc, true);
    auto first = find_epimorphisms(fc, nc, false);
    REQUIRE(all.size() == 1);
    CHECK(all.front().map == first.front().map);
  }
  SUBCASE("ac2 is an image of the Bb seven-valued matrix") {
    Matrix m = build_seven_valued({'B', 'b', false});
    auto epis = find_epimorphisms(m, build_builtin("ac2"), false);
    REQUIRE_FALSE(epis.empty());
    CHECK(is_strong_homomorphism(m, build_builtin("ac2"), epis.front()).ok);
  }
  SUBCASE("the Tf seven-valued matrix has no epimorphism onto fde") {
    Matrix m = build_seven_valued({'T', 'f', false});
    CHECK(find_epimorphisms(m, build_builtin("fde"), true).empty());
  }
  SUBCASE("an epimorphism onto itself is found via the identity congruence") {
    CHECK_FALSE(find_epimorphisms(nc, nc, false).empty());
  }
}

TEST_CASE("homomorphism facts tie the searches together") {
  Matrix fc = build_builtin("fc");
  Matrix nc = build_builtin("nc");
  std::vector<std::pair<const Matrix*, ValueMap>> maps;
  auto epis = find_epimorphisms(fc, nc, false);
  REQUIRE_FALSE(epis.empty());
  maps.emplace_back(&fc, epis.front());
  for (const auto& a : automorphisms(nc)) maps.emplace_back(&nc, a);

  SUBCASE("fibers of returned maps are congruences") {
    for (const auto& [m, f] : maps) {
      Partition p = induced_partition(*m, f);
      CHECK(is_congruence(*m, p).ok);
    }
  }
  SUBCASE("projections of enumerated congruences are strong homomorphisms") {
    EnumerationOptions options;
    options.include_identity = true;
    for (const auto& c : enumerate_congruences(fc, options).congruences) {
      auto [factor, projection] = factor_matrix(fc, c);
      CHECK(is_strong_homomorphism(fc, factor, projection).ok);
    }
  }
  SUBCASE("every returned epimorphism factors as projection then isomorphism") {
    for (const ValueMap& epi : find_epimorphisms(fc, nc, true)) {
      Partition p = induced_partition(fc, epi);
      REQUIRE(is_congruence(fc, p).ok);
      auto [factor, projection] = factor_matrix(fc, Congruence{p, true});
      auto iso = find_isomorphism(factor, nc);
      REQUIRE(iso.has_value());
      for (std::size_t v = 0; v < fc.size(); ++v)
        CHECK(epi.map[v] == iso->map[projection.map[v]]);
    }
  }
}

TEST_CASE("enumeration agrees with brute force on random small matrices") {
  std::mt19937 rng(991);
  int with_nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // every third matrix gets an indistinguishable twin value, so the
    // sample is guaranteed to contain non-trivial congruences
    Matrix m = trial % 3 == 2
                   ? oracles::inflate_one_value(rng, oracles::random_matrix(rng, 2, 4))
                   : oracles::random_matrix(rng, 2, 5);
    CAPTURE(trial);
    EnumerationOptions options;
    options.include_identity = true;
    auto result = enumerate_congruences(m, options);
    REQUIRE(result.complete);
    auto expected = oracles::naive_congruences(m);
    REQUIRE(result.congruences.size() == expected.size());
    std::set<std::string> got, want;
    for (const auto& c : result.congruences) got.insert(c.partition.to_literal(m));
    for (auto& blocks : expected)
      want.insert(Partition::of_blocks(m, blocks).to_literal(m));
    CHECK(got == want);
    if (expected.size() > 1) ++with_nontrivial;
  }
  CHECK(with_nontrivial > 10);  // the sample exercises positive cases too
}

TEST_CASE("isomorphism search agrees with brute force on small matrices") {
  std::mt19937 rng(4242);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Matrix a = oracles::random_matrix(rng, 2, 6);
    Matrix b = trial % 2 == 0 ? oracles::shuffled_copy(rng, a)
                              : oracles::random_matrix(rng, 2, 6);
    CAPTURE(trial);
    auto mine = find_isomorphism(a, b);
    auto brute = oracles::naive_find_isomorphism(a, b);
    REQUIRE(mine.has_value() == brute.has_value());
    if (mine) {
      CHECK(oracles::naive_is_hom(a, b, mine->map));
      CHECK(mine->is_injective());
      ++positives;
    }
  }
  CHECK(positives >= 30);  // every shuffled copy is isomorphic by construction
}

TEST_CASE("search-space accounting") {
  SUBCASE("the sixteen-value, four-designated case") {
    SearchStats stats = search_space_stats(16, 4);
    CHECK(stats.bell_designated == 15);
    CHECK(stats.bell_undesignated == 4213597);
    CHECK(stats.congruence_candidates == 63203955);
  }
  SUBCASE("the nine-value, three-designated case") {
    CHECK(search_space_stats(9, 3).bijection_candidates == 4320);
  }
  SUBCASE("classwise surjection counts") {
    SearchStats stats = search_space_stats(16, 4, SurjectionSplit{12, 6, 4, 3});
    REQUIRE(stats.surjection_candidates.has_value());
    CHECK(*stats.surjection_candidates == BigInt("34309059840"));
    CHECK(*stats.surjection_candidates > BigInt("34000000000"));
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(search_space_stats(4, 0), Error);
    CHECK_THROWS_AS(search_space_stats(4, 4), Error);
    CHECK_THROWS_AS(search_space_stats(65, 3), Error);
    CHECK_THROWS_AS(search_space_stats(16, 4, SurjectionSplit{12, 13, 4, 3}), Error);
  }
  SUBCASE("small closed forms") {
    CHECK(bell_number(0) == 1);
    CHECK(bell_number(5) == 52);
    CHECK(bell_number(12) == 4213597);
    CHECK(stirling2(12, 6) == 1323652);
    CHECK(stirling2(4, 3) == 6);
    CHECK(stirling2(3, 5) == 0);
    CHECK(factorial(6) == 720);
  }
}

TEST_CASE("partition literals and canonical form") {
  Matrix fde = build_builtin("fde");
  Partition p = Partition::from_literal(fde, "{N,F|T|B}");
  CHECK(p.block_count() == 3);
  // canonical: members by declaration order, blocks by least member
  CHECK(p.to_literal(fde) == "{B|T|F,N}");
  CHECK_THROWS_AS(Partition::from_literal(fde, "{B|T}"), Error);
  // repeating a value inside a block is harmless set syntax ...
  CHECK(Partition::from_literal(fde, "{B,B|T,F,N}").block_count() == 2);
  // ... but the same value in two blocks is not a partition
  CHECK_THROWS_AS(Partition::from_literal(fde, "{B|B|T,F,N}"), Error);
  CHECK_THROWS_AS(Partition::from_literal(fde, "{B|T|x|F,N}"), Error);
  CHECK(Partition::from_literal(fde, "{ B , T | F , N }").block_count() == 2);
}
