// Acceptance suite: runs every workbench-level claim end to end and prints
// one PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "manyval/algebra.hpp"
#include "manyval/builtins.hpp"
#include "manyval/semantics.hpp"
#include "manyval/spec_io.hpp"
#include "manyval/tableau.hpp"
#include "oracles.hpp"

using namespace manyval;

namespace {

struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ACCEPT(cond)                                                            \
  do {                                                                          \
    if (!(cond)) throw CriterionFailure("check failed: " #cond);                \
  } while (0)

#define ACCEPT_MSG(cond, msg)                                                   \
  do {                                                                          \
    if (!(cond)) {                                                              \
      std::ostringstream os_;                                                   \
      os_ << "check failed: " << msg;                                           \
      throw CriterionFailure(os_.str());                                        \
    }                                                                           \
  } while (0)

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const char* kNineClass = "{Bb,Tb,Fb,Nb|Bt,Ft|Bf,Tf|Bn|Tt,Nt|Tn|Ff,Nf|Fn|Nn}";
const char* kThirteenClass = "{Bb,Tb,Fb,Nb|Bt|Bf|Bn|Tt|Tf|Tn|Ft|Ff|Fn|Nt|Nf|Nn}";

// --------------------------------------------------------------------------
// 1. Congruence census of fc: identity plus exactly the two known
//    congruences, block for block, within 60 seconds.
// --------------------------------------------------------------------------
void criterion_1() {
  Matrix fc = build_builtin("fc");
  const auto start = std::chrono::steady_clock::now();
  EnumerationOptions options;
  options.include_identity = true;
  options.budget_seconds = 600.0;  // hard cap
  EnumerationResult census = enumerate_congruences(fc, options);
  const double elapsed = seconds_since(start);
  ACCEPT(census.complete);
  ACCEPT_MSG(census.congruences.size() == 3,
             "expected identity + 2 congruences, got " << census.congruences.size());
  ACCEPT(census.congruences[0].partition == Partition::from_literal(fc, kNineClass));
  ACCEPT(census.congruences[1].partition == Partition::from_literal(fc, kThirteenClass));
  ACCEPT(census.congruences[2].partition.is_identity());
  for (const auto& c : census.congruences) ACCEPT(is_congruence(fc, c.partition).ok);
  ACCEPT_MSG(elapsed <= 60.0, "census took " << elapsed << " s (limit 60)");
}

// --------------------------------------------------------------------------
// 2. An epimorphism fc -> nc exists, its fibers are the nine-class
//    congruence, it passes the strong-homomorphism check, in under 1 s.
// --------------------------------------------------------------------------
void criterion_2() {
  Matrix fc = build_builtin("fc");
  Matrix nc = build_builtin("nc");
  const auto start = std::chrono::steady_clock::now();
  std::vector<ValueMap> epis = find_epimorphisms(fc, nc, false);
  const double elapsed = seconds_since(start);
  ACCEPT_MSG(!epis.empty(), "no epimorphism found");
  const ValueMap& epi = epis.front();
  ACCEPT(epi.kind == ValueMap::Kind::Epi);
  ACCEPT(epi.is_surjective(nc.size()));
  ACCEPT(induced_partition(fc, epi) == Partition::from_literal(fc, kNineClass));
  ACCEPT(is_strong_homomorphism(fc, nc, epi).ok);
  ACCEPT_MSG(elapsed <= 1.0, "epimorphism search took " << elapsed << " s (limit 1)");
}

// --------------------------------------------------------------------------
// 3. The nine-class factor of fc is isomorphic to nc and the isomorphism,
//    read through class membership, is exactly the published mapping g.
// --------------------------------------------------------------------------
void criterion_3() {
  Matrix fc = build_builtin("fc");
  Matrix nc = build_builtin("nc");
  EnumerationResult census = enumerate_congruences(fc, {});
  ACCEPT(census.congruences.size() == 2);
  auto [factor, projection] = factor_matrix(fc, census.congruences.front());
  auto iso = find_isomorphism(factor, nc);
  ACCEPT_MSG(iso.has_value(), "factor and nc are not isomorphic");
  ACCEPT(is_strong_homomorphism(factor, nc, *iso).ok);

  // g maps each nc value to a congruence class, written here by its members.
  const std::map<std::string, std::set<std::string>> g = {
      {"ff", {"Nn"}},
      {"fu", {"Ff", "Nf"}},
      {"ft", {"Fn"}},
      {"uf", {"Nt", "Tt"}},
      {"uu", {"Bb", "Fb", "Nb", "Tb"}},
      {"ut", {"Bt", "Ft"}},
      {"tf", {"Tn"}},
      {"tu", {"Bf", "Tf"}},
      {"tt", {"Bn"}},
  };
  // read the found iso backwards: class -> nc value
  for (const auto& [nc_value, members] : g) {
    // locate the factor value whose class is `members`
    for (Value fv = 0; fv < factor.size(); ++fv) {
      std::set<std::string> block;
      for (Value source = 0; source < fc.size(); ++source) {
        if (projection.map[source] == fv) block.insert(fc.value_name(source));
      }
      if (block == members) {
        ACCEPT_MSG(nc.value_name(iso->map[fv]) == nc_value,
                   "class of " << *members.begin() << " maps to "
                               << nc.value_name(iso->map[fv]) << ", expected "
                               << nc_value);
      }
    }
  }
}

// --------------------------------------------------------------------------
// 4. nc has no congruence besides the identity, and fc none with fewer
//    than nine classes.
// --------------------------------------------------------------------------
void criterion_4() {
  Matrix nc = build_builtin("nc");
  EnumerationOptions options;
  options.include_identity = true;
  EnumerationResult nc_census = enumerate_congruences(nc, options);
  ACCEPT(nc_census.complete);
  ACCEPT_MSG(nc_census.congruences.size() == 1, "nc has a non-identity congruence");
  ACCEPT(nc_census.congruences.front().partition.is_identity());

  Matrix fc = build_builtin("fc");
  EnumerationResult fc_census = enumerate_congruences(fc, options);
  ACCEPT(fc_census.complete);
  for (const auto& c : fc_census.congruences)
    ACCEPT_MSG(c.partition.block_count() >= 9,
               "fc congruence with " << c.partition.block_count() << " classes");
}

// --------------------------------------------------------------------------
// 5. The seven-valued refutations: the B-differentiated matrices validate
//    the two entailments that fail in nc, with the published
//    countervaluations checked by evaluation; double negation fails in the
//    starred Tf matrix.
// --------------------------------------------------------------------------
void criterion_5() {
  const auto start = std::chrono::steady_clock::now();
  const Formula a_or_b = parse_formula("A | B");
  const Formula b = parse_formula("B");
  const Formula lhs = parse_formula("A & (B | ~A)");

  for (char v : {'t', 'b'}) {
    Matrix plain = build_seven_valued({'B', v, false});
    ACCEPT_MSG(entails(plain, {a_or_b}, b).holds, plain.name() << " refutes A|B |= B");
    Matrix starred = build_seven_valued({'B', v, true});
    ACCEPT_MSG(entails(starred, {lhs}, b).holds,
               starred.name() << " refutes A&(B|~A) |= B");
  }

  Matrix nc = build_builtin("nc");
  ACCEPT(!entails(nc, {a_or_b}, b).holds);
  ACCEPT(!entails(nc, {lhs}, b).holds);
  {  // the published countervaluations, replayed through evaluate
    Valuation counter1{{"A", nc.value("tf")}, {"B", nc.value("ff")}};
    ACCEPT(nc.is_designated(evaluate(nc, a_or_b, counter1)));
    ACCEPT(!nc.is_designated(evaluate(nc, b, counter1)));
    Valuation counter2{{"A", nc.value("tt")}, {"B", nc.value("ff")}};
    ACCEPT(nc.is_designated(evaluate(nc, lhs, counter2)));
    ACCEPT(!nc.is_designated(evaluate(nc, b, counter2)));
  }

  Matrix tf_starred = build_seven_valued({'T', 'f', true});
  EntailmentVerdict verdict =
      entails(tf_starred, {parse_formula("A")}, parse_formula("~~A"));
  ACCEPT(!verdict.holds);
  ACCEPT(verdict.countervaluation.has_value());
  ACCEPT(tf_starred.value_name(verdict.countervaluation->at("A")) == "Tf");

  const double elapsed = seconds_since(start);
  ACCEPT_MSG(elapsed <= 1.0, "took " << elapsed << " s (limit 1)");
}

// --------------------------------------------------------------------------
// 6. Among the sixteen seven-valued matrices: only the unstarred Bb matrix
//    maps onto ac2, none of the other fifteen maps onto fde or ac2, and no
//    two of the sixteen are isomorphic (120 pairs).
// --------------------------------------------------------------------------
void criterion_6() {
  const auto start = std::chrono::steady_clock::now();
  Matrix fde = build_builtin("fde");
  Matrix ac2 = build_builtin("ac2");

  std::vector<Matrix> sixteen;
  for (const auto& spec : all_seven_valued_specs())
    sixteen.push_back(build_seven_valued(spec));

  int bb_index = -1;
  for (std::size_t i = 0; i < sixteen.size(); ++i) {
    if (sixteen[i].name() == "fc7:Bb") bb_index = static_cast<int>(i);
  }
  ACCEPT(bb_index >= 0);
  ACCEPT_MSG(!find_epimorphisms(sixteen[static_cast<std::size_t>(bb_index)], ac2, false).empty(),
             "fc7:Bb has no epimorphism onto ac2");

  for (std::size_t i = 0; i < sixteen.size(); ++i) {
    if (static_cast<int>(i) == bb_index) continue;
    ACCEPT_MSG(find_epimorphisms(sixteen[i], fde, true).empty(),
               sixteen[i].name() << " maps onto fde");
    ACCEPT_MSG(find_epimorphisms(sixteen[i], ac2, true).empty(),
               sixteen[i].name() << " maps onto ac2");
  }

  int pairs = 0;
  for (std::size_t i = 0; i < sixteen.size(); ++i) {
    for (std::size_t j = i + 1; j < sixteen.size(); ++j) {
      ACCEPT_MSG(!find_isomorphism(sixteen[i], sixteen[j]).has_value(),
                 sixteen[i].name() << " and " << sixteen[j].name() << " are isomorphic");
      ++pairs;
    }
  }
  ACCEPT(pairs == 120);
  const double elapsed = seconds_since(start);
  ACCEPT_MSG(elapsed <= 120.0, "took " << elapsed << " s (limit 120)");
}

// --------------------------------------------------------------------------
// 7. Search-space numbers: 4,320 candidate bijections; 63,203,955 candidate
//    congruences; the classwise surjection count, pinned exactly.
// --------------------------------------------------------------------------
void criterion_7() {
  SearchStats nine = search_space_stats(9, 3);
  ACCEPT(nine.bijection_candidates == 4320);

  SearchStats sixteen = search_space_stats(16, 4, SurjectionSplit{12, 6, 4, 3});
  ACCEPT(sixteen.bell_designated == 15);
  ACCEPT(sixteen.bell_undesignated == 4213597);
  ACCEPT(sixteen.congruence_candidates == 63203955);
  ACCEPT(sixteen.surjection_candidates.has_value());
  // 6! S(12,6) * 3! S(4,3), computed by the Stirling recurrence and pinned.
  ACCEPT(*sixteen.surjection_candidates == BigInt("34309059840"));
  ACCEPT(*sixteen.surjection_candidates > BigInt("34000000000"));
}

// --------------------------------------------------------------------------
// 8. Distribution quantifiers over nc: both induced tables materialize all
//    511 subsets; the brute-force count of folds differing from uu is
//    reported next to the documented figure of 113. The count itself is
//    asserted only for internal consistency (stability and the singleton
//    and pair laws), not against 113.
// --------------------------------------------------------------------------
void criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  Matrix nc = build_builtin("nc");
  const Value uu = nc.value("uu");

  std::size_t counts[2] = {0, 0};
  int index = 0;
  for (const char* op : {"and", "or"}) {
    DistributionTable table = distribution_table(nc, op);
    ACCEPT(table.subset_count() == 511);
    for (std::size_t v = 0; v < nc.size(); ++v)
      ACCEPT(table.fold(std::uint64_t{1} << v) == v);
    for (std::size_t x = 0; x < nc.size(); ++x) {
      for (std::size_t y = x + 1; y < nc.size(); ++y) {
        const std::uint64_t mask = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
        ACCEPT(table.fold(mask) ==
               nc.apply(op, std::vector<Value>{static_cast<Value>(x),
                                               static_cast<Value>(y)}));
      }
    }
    DistributionTable again = distribution_table(nc, op);
    ACCEPT(again.by_subset == table.by_subset);  // recomputation stability
    counts[index++] = table.count_not(uu);
  }
  ACCEPT(counts[0] == counts[1]);  // the two induced quantifiers agree here
  std::cout << "        [criterion 8] subsets folding to a value other than uu: "
            << counts[0] << " (and), " << counts[1]
            << " (or); documented figure: 113"
            << (counts[0] == 113 ? " — agreement" : " — discrepancy recorded") << "\n";
  const double elapsed = seconds_since(start);
  ACCEPT_MSG(elapsed <= 1.0, "took " << elapsed << " s (limit 1)");
}

// --------------------------------------------------------------------------
// 9. nc has no automorphism besides the identity.
// --------------------------------------------------------------------------
void criterion_9() {
  const auto start = std::chrono::steady_clock::now();
  Matrix nc = build_builtin("nc");
  std::vector<ValueMap> autos = automorphisms(nc);
  ACCEPT_MSG(autos.size() == 1, "found " << autos.size() << " automorphisms");
  for (std::size_t v = 0; v < nc.size(); ++v) ACCEPT(autos[0].map[v] == v);
  const double elapsed = seconds_since(start);
  ACCEPT_MSG(elapsed <= 1.0, "took " << elapsed << " s (limit 1)");
}

// --------------------------------------------------------------------------
// 10. Property suites: search results against brute-force oracles, prover
//     against exhaustive semantics over a full formula pool, and the
//     homomorphism facts across everything the searches return.
// --------------------------------------------------------------------------

// Formulas over atoms A, B with at most three nesting levels counting
// atoms: atoms, one connective over atoms, connectives over those.
std::vector<Formula> formula_pool() {
  std::vector<Formula> depth1{Formula::atom("A"), Formula::atom("B")};
  auto close_once = [](const std::vector<Formula>& base) {
    std::vector<Formula> out = base;
    std::set<std::string> seen;
    for (const auto& f : out) seen.insert(f.to_string());
    auto push = [&](Formula f) {
      if (seen.insert(f.to_string()).second) out.push_back(std::move(f));
    };
    for (const auto& f : base) push(Formula::neg(f));
    for (const auto& f : base)
      for (const auto& g : base) {
        push(Formula::conj(f, g));
        push(Formula::disj(f, g));
      }
    return out;
  };
  std::vector<Formula> depth2 = close_once(depth1);   // 12 formulas
  std::vector<Formula> depth3 = close_once(depth2);   // 302 formulas
  return depth3;
}

// Designation profile of a formula: one bit per valuation of (A, B) in
// odometer order. Entailment is bitmask containment over these.
std::vector<std::uint64_t> designation_profile(const Matrix& m, const Formula& f) {
  const std::size_t n = m.size();
  std::vector<std::uint64_t> bits((n * n + 63) / 64, 0);
  Valuation valuation;
  std::size_t index = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b, ++index) {
      valuation["A"] = static_cast<Value>(a);
      valuation["B"] = static_cast<Value>(b);
      if (m.is_designated(evaluate(m, f, valuation)))
        bits[index / 64] |= std::uint64_t{1} << (index % 64);
    }
  }
  return bits;
}

void criterion_10() {
  // --- congruence enumeration vs brute force, 100 random matrices ---------
  {
    std::mt19937 rng(1337);
    for (int trial = 0; trial < 100; ++trial) {
      Matrix m = trial % 3 == 2
                     ? oracles::inflate_one_value(rng, oracles::random_matrix(rng, 2, 4))
                     : oracles::random_matrix(rng, 2, 5);
      EnumerationOptions options;
      options.include_identity = true;
      EnumerationResult result = enumerate_congruences(m, options);
      ACCEPT(result.complete);
      auto expected = oracles::naive_congruences(m);
      ACCEPT_MSG(result.congruences.size() == expected.size(),
                 "trial " << trial << ": " << result.congruences.size() << " vs "
                          << expected.size());
      std::set<std::string> got, want;
      for (const auto& c : result.congruences) got.insert(c.partition.to_literal(m));
      for (auto& blocks : expected)
        want.insert(Partition::of_blocks(m, blocks).to_literal(m));
      ACCEPT(got == want);
    }
  }

  // --- isomorphism search vs brute force, matrices up to 6 values --------
  {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      Matrix a = oracles::random_matrix(rng, 2, 6);
      Matrix b = trial % 2 == 0 ? oracles::shuffled_copy(rng, a)
                                : oracles::random_matrix(rng, 2, 6);
      auto mine = find_isomorphism(a, b);
      auto brute = oracles::naive_find_isomorphism(a, b);
      ACCEPT_MSG(mine.has_value() == brute.has_value(), "iso trial " << trial);
      if (mine) ACCEPT(oracles::naive_is_hom(a, b, mine->map));
    }
  }

  // --- tableau prover vs exhaustive semantics over the full pool ----------
  {
    const std::vector<Formula> pool = formula_pool();
    ACCEPT(pool.size() == 302);
    const std::vector<Formula> small = {pool.begin(), pool.begin() + 12};
    for (const char* name : {"nc", "fde"}) {
      Matrix m = build_builtin(name);
      RuleSet rules = generate_rules(m);
      std::vector<std::vector<std::uint64_t>> profile;
      profile.reserve(pool.size());
      for (const auto& f : pool) profile.push_back(designation_profile(m, f));
      auto oracle_holds = [&](const std::vector<std::size_t>& premises,
                              std::size_t conclusion) {
        const std::size_t words = profile[conclusion].size();
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t premise_bits = ~std::uint64_t{0};
          for (std::size_t p : premises) premise_bits &= profile[p][w];
          if (premise_bits & ~profile[conclusion][w]) return false;
        }
        return true;
      };
      auto check_one = [&](const std::vector<std::size_t>& premise_ids,
                           std::size_t conclusion_id) {
        std::vector<Formula> premises;
        for (std::size_t p : premise_ids) premises.push_back(pool[p]);
        ProofResult proof =
            prove_entailment(m, rules, premises, pool[conclusion_id]);
        ACCEPT_MSG(proof.holds == oracle_holds(premise_ids, conclusion_id),
                   name << ": prover disagrees on {"
                        << (premise_ids.empty()
                                ? std::string()
                                : pool[premise_ids[0]].to_string())
                        << "} |- " << pool[conclusion_id].to_string());
        if (!proof.holds) {
          // extracted countervaluations must be genuine
          for (const auto& p : premises)
            ACCEPT(m.is_designated(evaluate(m, p, *proof.countervaluation)));
          ACCEPT(!m.is_designated(
              evaluate(m, pool[conclusion_id], *proof.countervaluation)));
        }
      };
      for (std::size_t c = 0; c < pool.size(); ++c) check_one({}, c);
      for (std::size_t p = 0; p < pool.size(); ++p)
        for (std::size_t c = 0; c < pool.size(); ++c) check_one({p}, c);
      // premise pairs are drawn from the twelve shallow pool members
      for (std::size_t p1 = 0; p1 < small.size(); ++p1)
        for (std::size_t p2 = p1 + 1; p2 < small.size(); ++p2)
          for (std::size_t c = 0; c < pool.size(); ++c) check_one({p1, p2}, c);
    }
  }

  // --- homomorphism facts over everything the searches return -------------
  {
    Matrix fc = build_builtin("fc");
    Matrix nc = build_builtin("nc");
    Matrix ac2 = build_builtin("ac2");

    std::vector<std::pair<const Matrix*, ValueMap>> returned;
    for (auto& epi : find_epimorphisms(fc, nc, true)) returned.emplace_back(&fc, epi);
    Matrix bb = build_seven_valued({'B', 'b', false});
    for (auto& epi : find_epimorphisms(bb, ac2, true)) returned.emplace_back(&bb, epi);
    for (auto& f : automorphisms(nc)) returned.emplace_back(&nc, f);
    ACCEPT(returned.size() >= 3);

    // fibers of returned homomorphisms are congruences
    for (const auto& [m, f] : returned)
      ACCEPT(is_congruence(*m, induced_partition(*m, f)).ok);

    // projections onto factors are strong homomorphisms
    EnumerationOptions options;
    options.include_identity = true;
    for (const auto& c : enumerate_congruences(fc, options).congruences) {
      auto [factor, projection] = factor_matrix(fc, c);
      ACCEPT(is_strong_homomorphism(fc, factor, projection).ok);
    }

    // every epimorphism factors as projection followed by an isomorphism
    for (const auto& epi : find_epimorphisms(fc, nc, true)) {
      Partition fibers = induced_partition(fc, epi);
      auto [factor, projection] = factor_matrix(fc, Congruence{fibers, true});
      auto iso = find_isomorphism(factor, nc);
      ACCEPT(iso.has_value());
      for (std::size_t v = 0; v < fc.size(); ++v)
        ACCEPT(epi.map[v] == iso->map[projection.map[v]]);
    }

    // consequence agreement across the found epimorphism
    auto epis = find_epimorphisms(fc, nc, false);
    ACCEPT(!epis.empty());
    std::mt19937 rng(606);
    const std::vector<std::string> atoms = {"A", "B", "C"};
    std::vector<FormulaPair> suite;
    for (int i = 0; i < 500; ++i) {
      FormulaPair pair{{oracles::random_formula(rng, atoms, 4)},
                       oracles::random_formula(rng, atoms, 4)};
      if (i % 2) pair.premises.push_back(oracles::random_formula(rng, atoms, 3));
      suite.push_back(std::move(pair));
    }
    AgreementReport agreement = check_consequence_agreement(fc, nc, epis.front(), suite);
    ACCEPT(agreement.all_agree);
    ACCEPT(agreement.pairs_checked == 500);
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "congruence census of fc (identity + the two known congruences, <= 60 s)",
       criterion_1},
      {2, "epimorphism fc -> nc with the nine-class fibers (<= 1 s)", criterion_2},
      {3, "nine-class factor isomorphic to nc via the published mapping", criterion_3},
      {4, "no smaller factor: nc only identity, fc nothing under nine classes",
       criterion_4},
      {5, "seven-valued refutations with verified countervaluations (<= 1 s)",
       criterion_5},
      {6, "only fc7:Bb maps onto ac2; no epis to fde/ac2 elsewhere; 120 non-iso pairs "
          "(<= 120 s)",
       criterion_6},
      {7, "search-space numbers: 4320, 63203955, surjections 34309059840", criterion_7},
      {8, "distribution quantifier tables over nc, fold counts reported (<= 1 s)",
       criterion_8},
      {9, "nc has a trivial automorphism group (<= 1 s)", criterion_9},
      {10, "oracle equivalence: congruences, isomorphisms, prover vs semantics, "
           "homomorphism facts (<= 10 min)",
       criterion_10},
  };

  int failures = 0;
  const auto suite_start = std::chrono::steady_clock::now();
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run();
      std::printf("PASS  %2d  %s  (%.2f s)\n", criterion.id, criterion.title,
                  seconds_since(start));
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  %2d  %s  (%.2f s)\n          %s\n", criterion.id,
                  criterion.title, seconds_since(start), e.what());
    }
    std::fflush(stdout);
  }
  std::printf("%s: %d/%zu criteria passed (%.2f s total)\n",
              failures == 0 ? "OK" : "FAILED",
              static_cast<int>(criteria.size()) - failures, criteria.size(),
              seconds_since(suite_start));
  return failures == 0 ? 0 : 1;
}
