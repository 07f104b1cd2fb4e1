#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "manyval/matrix.hpp"
#include "manyval/partition.hpp"

namespace manyval {

// Pair values are named by concatenating the component names, designation
// is componentwise, every operation acts componentwise. Both factors must
// declare the same (name, arity) signature.
Matrix direct_product(const Matrix& a, const Matrix& b);

struct HomWitness {
  enum class Kind { Designation, Operation };
  Kind kind = Kind::Designation;
  // Designation: `value` crosses the designated/undesignated boundary.
  Value value = 0;
  // Operation: f(op(args)) != op(f(args)).
  std::string op;
  std::vector<Value> args;

  std::string describe(const Matrix& source) const;
};

struct HomCheck {
  bool ok = false;
  std::optional<HomWitness> witness;
};

// Checks that f respects every operation and designation in both
// directions; on failure reports the first violation in a fixed order
// (designation over values in declaration order, then operations in
// declaration order over argument tuples in row-major order).
HomCheck is_strong_homomorphism(const Matrix& source, const Matrix& target,
                                const ValueMap& f);

// The fibers {v' : f(v') = f(v)}, canonicalized.
Partition induced_partition(const Matrix& source, const ValueMap& f);

struct CongruenceWitness {
  enum class Kind { MixedBlock, Operation };
  Kind kind = Kind::MixedBlock;
  // MixedBlock: values a (designated) and b (undesignated) share a block.
  Value a = 0, b = 0;
  // Operation: blockwise-equal tuples with results in different blocks.
  std::string op;
  std::vector<Value> args1, args2;

  std::string describe(const Matrix& m) const;
};

struct CongruenceCheck {
  bool ok = false;
  std::optional<CongruenceWitness> witness;
};

CongruenceCheck is_congruence(const Matrix& m, const Partition& p);

struct EnumerationOptions {
  bool include_identity = false;
  std::size_t limit = 0;  // 0 = no limit
  double budget_seconds = 600.0;
  std::uint64_t node_cap = 4'000'000'000;
  int jobs = 1;
};

struct EnumerationResult {
  std::vector<Congruence> congruences;  // ascending block count, then lexicographic
  bool complete = true;                 // false iff the budget or limit cut the search short
  bool hit_limit = false;
  std::uint64_t nodes_visited = 0;
  double elapsed_seconds = 0.0;
};

// Sound and complete enumeration of the congruences of m. Partitions are
// generated value by value over the designated and undesignated subsets
// separately (a block never mixes the two); a partial assignment is pruned
// as soon as its operation closure would either merge a designated with an
// undesignated value or contradict an already-committed block separation.
// Deterministic across runs and independent of the worker count.
EnumerationResult enumerate_congruences(const Matrix& m,
                                        const EnumerationOptions& options = {});

// Streaming single-threaded variant in generation order; the callback
// returns false to stop early. Returns false iff the budget ran out.
bool for_each_congruence(const Matrix& m, const EnumerationOptions& options,
                         const std::function<bool(const Congruence&)>& visit);

// Factor matrix and the projection v -> [v] (kind=epi). Block values are
// named by joining member names with "·"; a block is designated iff its
// members are; operations are lifted via representatives. The congruence
// must be verified.
std::pair<Matrix, ValueMap> factor_matrix(const Matrix& m, const Congruence& c);

// Backtracking search that extends a partial map one value at a time,
// pairing designated with designated only and abandoning any partial map
// that already conflicts with the tables. Returns the first isomorphism in
// deterministic order, or nullopt.
std::optional<ValueMap> find_isomorphism(const Matrix& a, const Matrix& b);

// All isomorphisms a -> a, identity included, deterministic order.
std::vector<ValueMap> automorphisms(const Matrix& m);

struct EpimorphismOptions {
  double budget_seconds = 600.0;
  std::uint64_t node_cap = 4'000'000'000;
};

// For each congruence of source with as many blocks as target has values,
// attempts an isomorphism from the factor onto target; every success
// contributes projection∘iso (kind=epi). With find_all=false the search
// stops at the first success. An empty result means no epimorphism exists.
std::vector<ValueMap> find_epimorphisms(const Matrix& source, const Matrix& target,
                                        bool find_all,
                                        const EpimorphismOptions& options = {});

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt bell_number(int n);
BigInt stirling2(int n, int m);

// Source/target sizes for counting surjections classwise:
// undesignated_from -> undesignated_to and designated_from -> designated_to.
struct SurjectionSplit {
  int undesignated_from = 0, undesignated_to = 0;
  int designated_from = 0, designated_to = 0;
};

struct SearchStats {
  int n = 0, k = 0;               // values, designated values
  BigInt bell_designated;         // B_k
  BigInt bell_undesignated;       // B_{n-k}
  BigInt congruence_candidates;   // B_k * B_{n-k}
  BigInt bijection_candidates;    // k! * (n-k)!
  std::optional<BigInt> surjection_candidates;  // product of m! * S(n, m) per class
};

SearchStats search_space_stats(int n, int k,
                               std::optional<SurjectionSplit> split = std::nullopt);

}  // namespace manyval
