#include "manyval/partition.hpp"

#include <algorithm>

namespace manyval {

Partition Partition::of_blocks(const Matrix& m, std::vector<std::vector<Value>> blocks) {
  std::vector<std::uint8_t> seen(m.size(), 0);
  std::size_t covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw Error("foreign partition: empty block");
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    for (Value v : block) {
      if (v >= m.size())
        throw Error("foreign partition: value index " + std::to_string(v) +
                    " outside matrix '" + m.name() + "'");
      if (seen[v])
        throw Error("foreign partition: value '" + m.value_name(v) +
                    "' appears in two blocks");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != m.size())
    throw Error("foreign partition: blocks do not cover all values of matrix '" +
                m.name() + "'");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition{m.name(), std::move(blocks)};
}

Partition Partition::identity(const Matrix& m) {
  std::vector<std::vector<Value>> blocks;
  blocks.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    blocks.push_back({static_cast<Value>(i)});
  return Partition{m.name(), std::move(blocks)};
}

Partition Partition::from_literal(const Matrix& m, std::string_view literal) {
  auto fail = [&](const std::string& why) {
    throw Error("bad partition literal '" + std::string(literal) + "': " + why);
  };
  std::string_view s = literal;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    fail("expected {a,b|c|...}");
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<Value>> blocks;
  std::vector<Value> block;
  std::string name;
  auto flush_name = [&] {
    // trim surrounding whitespace
    std::size_t b = name.find_first_not_of(" \t");
    std::size_t e = name.find_last_not_of(" \t");
    if (b == std::string::npos) fail("empty value name");
    std::string trimmed = name.substr(b, e - b + 1);
    auto v = m.find_value(trimmed);
    if (!v) fail("'" + trimmed + "' is not a value of matrix '" + m.name() + "'");
    block.push_back(*v);
    name.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush_name();
    } else if (c == '|') {
      flush_name();
      blocks.push_back(block);
      block.clear();
    } else {
      name += c;
    }
  }
  flush_name();
  blocks.push_back(block);
  return of_blocks(m, std::move(blocks));
}

bool Partition::is_identity() const {
  for (const auto& block : blocks) {
    if (block.size() != 1) return false;
  }
  return true;
}

std::vector<int> Partition::block_of(std::size_t n_values) const {
  std::vector<int> out(n_values, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Value v : blocks[b]) out[v] = static_cast<int>(b);
  }
  return out;
}

bool Partition::respects_designation(const Matrix& m) const {
  for (const auto& block : blocks) {
    bool any_designated = false, any_undesignated = false;
    for (Value v : block) {
      (m.is_designated(v) ? any_designated : any_undesignated) = true;
    }
    if (any_designated && any_undesignated) return false;
  }
  return true;
}

std::string Partition::to_literal(const Matrix& m) const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += "|";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ",";
      out += m.value_name(blocks[b][i]);
    }
  }
  out += "}";
  return out;
}

bool Partition::canonical_less(const Partition& a, const Partition& b) {
  if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
  return a.blocks < b.blocks;
}

bool ValueMap::is_surjective(std::size_t target_size) const {
  std::vector<std::uint8_t> hit(target_size, 0);
  for (Value v : map) {
    if (v >= target_size) return false;
    hit[v] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
}

bool ValueMap::is_injective() const {
  std::vector<Value> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

ValueMap ValueMap::identity(const Matrix& m) {
  ValueMap f;
  f.source = m.name();
  f.target = m.name();
  f.map.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) f.map[i] = static_cast<Value>(i);
  f.kind = Kind::Iso;
  return f;
}

ValueMap ValueMap::compose(const ValueMap& f, const ValueMap& g, Kind kind) {
  if (f.target != g.source)
    throw Error("cannot compose maps: '" + f.target + "' vs '" + g.source + "'");
  ValueMap out;
  out.source = f.source;
  out.target = g.target;
  out.kind = kind;
  out.map.resize(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) out.map[i] = g.map[f.map[i]];
  return out;
}

const char* kind_name(ValueMap::Kind kind) {
  switch (kind) {
    case ValueMap::Kind::Raw: return "raw";
    case ValueMap::Kind::Hom: return "hom";
    case ValueMap::Kind::Epi: return "epi";
    case ValueMap::Kind::Iso: return "iso";
  }
  return "?";
}

}  // namespace manyval
