#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "manyval/matrix.hpp"

namespace manyval {

// A partition of a matrix's value set in canonical form: block members
// ascending in declaration order, blocks ordered by least member.
struct Partition {
  std::string matrix_name;
  std::vector<std::vector<Value>> blocks;

  // Canonicalizes and checks cover/disjointness; throws Error("foreign
  // partition ...") when the blocks do not partition m's value set.
  static Partition of_blocks(const Matrix& m, std::vector<std::vector<Value>> blocks);
  static Partition identity(const Matrix& m);
  // Parses the literal syntax {a,b|c|d,e} against m's value names.
  static Partition from_literal(const Matrix& m, std::string_view literal);

  std::size_t block_count() const { return blocks.size(); }
  bool is_identity() const;
  // value index -> block index; n_values must equal the covered size.
  std::vector<int> block_of(std::size_t n_values) const;
  // No block mixes designated with undesignated values.
  bool respects_designation(const Matrix& m) const;

  std::string to_literal(const Matrix& m) const;

  bool operator==(const Partition& other) const { return blocks == other.blocks; }
  // Ascending block count, then lexicographic on blocks.
  static bool canonical_less(const Partition& a, const Partition& b);
};

// A partition together with whether operation compatibility has been
// verified (designation-respecting is structural for verified=true).
struct Congruence {
  Partition partition;
  bool verified = false;
};

// A total function between the value sets of two matrices.
struct ValueMap {
  enum class Kind { Raw, Hom, Epi, Iso };
  std::string source;
  std::string target;
  std::vector<Value> map;  // indexed by source value
  Kind kind = Kind::Raw;

  Value operator()(Value v) const { return map[v]; }
  bool is_surjective(std::size_t target_size) const;
  bool is_injective() const;

  static ValueMap identity(const Matrix& m);
  // g after f (apply f first); f.target must name g.source.
  static ValueMap compose(const ValueMap& f, const ValueMap& g, Kind kind);
};

const char* kind_name(ValueMap::Kind kind);

}  // namespace manyval
