#include "manyval/builtins.hpp"

#include <array>
#include <string>

#include "manyval/algebra.hpp"

namespace manyval {

namespace {

// Weak Kleene conjunction/disjunction over f, u, t: u is infectious,
// otherwise classical.
char kw_and(char a, char b) {
  if (a == 'u' || b == 'u') return 'u';
  return (a == 'f' || b == 'f') ? 'f' : 't';
}

char kw_or(char a, char b) {
  if (a == 'u' || b == 'u') return 'u';
  return (a == 't' || b == 't') ? 't' : 'f';
}

Matrix build_kw3() {
  const std::vector<std::string> values = {"f", "u", "t"};
  auto idx = [&](char c) {
    return static_cast<Value>(std::string("fut").find(c));
  };
  Operation conj{"and", 2, {}}, disj{"or", 2, {}};
  for (char a : {'f', 'u', 't'}) {
    for (char b : {'f', 'u', 't'}) {
      conj.table.push_back(idx(kw_and(a, b)));
      disj.table.push_back(idx(kw_or(a, b)));
    }
  }
  return Matrix("kw3", values, {"t"}, {conj, disj});
}

Matrix build_nc() {
  // Pairs over weak Kleene values, pair-major in f, u, t order. A pair
  // tracks a formula's value together with its negation's value: negation
  // swaps the pair, and the second components of a conjunction combine by
  // disjunction (and vice versa), De Morgan style. First components always
  // combine by the operation itself.
  const std::string k = "fut";
  std::vector<std::string> values;
  for (char a : k)
    for (char b : k) values.push_back(std::string{a, b});
  auto idx = [&](char a, char b) {
    return static_cast<Value>(k.find(a) * 3 + k.find(b));
  };
  Operation neg{"neg", 1, {}}, conj{"and", 2, {}}, disj{"or", 2, {}};
  for (const auto& v : values) neg.table.push_back(idx(v[1], v[0]));
  for (const auto& v : values) {
    for (const auto& w : values) {
      conj.table.push_back(idx(kw_and(v[0], w[0]), kw_or(v[1], w[1])));
      disj.table.push_back(idx(kw_or(v[0], w[0]), kw_and(v[1], w[1])));
    }
  }
  return Matrix("nc", values, {"tf", "tu", "tt"}, {neg, conj, disj});
}

Matrix build_fde() {
  const std::vector<std::string> values = {"B", "T", "F", "N"};
  // Tables in declaration order B, T, F, N.
  const char* neg_t = "BFTN";
  const char* and_t =
      "BBFF"
      "BTFN"
      "FFFF"
      "FNFN";
  const char* or_t =
      "BTBT"
      "TTTT"
      "BTFN"
      "TTNN";
  auto idx = [&](char c) {
    return static_cast<Value>(std::string("BTFN").find(c));
  };
  Operation neg{"neg", 1, {}}, conj{"and", 2, {}}, disj{"or", 2, {}};
  for (int i = 0; i < 4; ++i) neg.table.push_back(idx(neg_t[i]));
  for (int i = 0; i < 16; ++i) {
    conj.table.push_back(idx(and_t[i]));
    disj.table.push_back(idx(or_t[i]));
  }
  return Matrix("fde", values, {"B", "T"}, {neg, conj, disj});
}

Matrix build_ac2() {
  const std::vector<std::string> values = {"b", "t", "f", "n"};
  const char* neg_t = "bftn";
  // Conjunction and disjunction share one table.
  const char* bin_t =
      "bbbb"
      "btbt"
      "bbff"
      "btfn";
  auto idx = [&](char c) {
    return static_cast<Value>(std::string("btfn").find(c));
  };
  Operation neg{"neg", 1, {}}, conj{"and", 2, {}}, disj{"or", 2, {}};
  for (int i = 0; i < 4; ++i) neg.table.push_back(idx(neg_t[i]));
  for (int i = 0; i < 16; ++i) {
    conj.table.push_back(idx(bin_t[i]));
    disj.table.push_back(idx(bin_t[i]));
  }
  return Matrix("ac2", values, {"f", "n"}, {neg, conj, disj});
}

}  // namespace

std::string SevenValuedSpec::matrix_name() const {
  std::string name = "fc7:";
  name += differentiated;
  name += dominant;
  if (starred) name += '*';
  return name;
}

Matrix build_builtin(std::string_view name) {
  if (name == "kw3") return build_kw3();
  if (name == "nc") return build_nc();
  if (name == "fde") return build_fde();
  if (name == "ac2") return build_ac2();
  if (name == "fc")
    return direct_product(build_fde(), build_ac2()).with_name("fc");
  throw Error("unknown builtin matrix '" + std::string(name) +
              "' (known: kw3, nc, fde, ac2, fc)");
}

Matrix build_seven_valued(const SevenValuedSpec& spec) {
  if (spec.differentiated != 'B' && spec.differentiated != 'T')
    throw Error("seven-valued spec: differentiated value must be B or T");
  if (std::string("btfn").find(spec.dominant) == std::string::npos)
    throw Error("seven-valued spec: dominant value must be one of b, t, f, n");

  const Matrix fc = build_builtin("fc");
  const char V = spec.differentiated;
  const char v = spec.dominant;

  // Keep fc's declaration order on the 7-value subset.
  std::vector<Value> kept;
  for (std::size_t i = 0; i < fc.size(); ++i) {
    const std::string& name = fc.value_name(static_cast<Value>(i));
    if (name[0] == V || name[1] == v) kept.push_back(static_cast<Value>(i));
  }

  // Projection into the subset: values whose fde component differs from V
  // get the dominant ac2 value forced onto them.
  auto project = [&](Value fc_value) {
    const std::string& name = fc.value_name(fc_value);
    if (name[0] == V) return fc_value;
    return fc.value(std::string{name[0], v});
  };
  std::vector<int> new_index(fc.size(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) new_index[kept[i]] = static_cast<int>(i);

  std::vector<std::string> values;
  for (Value kv : kept) values.push_back(fc.value_name(kv));

  std::vector<Operation> ops;
  for (const auto& fc_op : fc.ops()) {
    Operation op{fc_op.name, fc_op.arity, {}};
    std::vector<Value> args(static_cast<std::size_t>(fc_op.arity));
    std::size_t count = 1;
    for (int i = 0; i < fc_op.arity; ++i) count *= kept.size();
    for (std::size_t index = 0; index < count; ++index) {
      std::size_t rest = index;
      for (int a = fc_op.arity - 1; a >= 0; --a) {
        args[static_cast<std::size_t>(a)] = kept[rest % kept.size()];
        rest /= kept.size();
      }
      Value result = project(fc.apply(fc_op, args));
      op.table.push_back(static_cast<Value>(new_index[result]));
    }
    ops.push_back(std::move(op));
  }

  std::vector<std::string> designated;
  for (Value kv : kept) {
    if (fc.is_designated(kv)) designated.push_back(fc.value_name(kv));
  }
  const char other = V == 'B' ? 'T' : 'B';
  const std::string flip_name = std::string{other, v};
  if (spec.starred) {
    if (v == 't' || v == 'b') {
      designated.push_back(flip_name);
    } else {
      std::erase(designated, flip_name);
    }
  }

  return Matrix(spec.matrix_name(), values, designated, ops);
}

std::optional<Matrix> resolve_builtin(std::string_view reference) {
  constexpr std::string_view prefix = "builtin:";
  if (reference.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view rest = reference.substr(prefix.size());
  constexpr std::string_view fc7 = "fc7:";
  if (rest.substr(0, fc7.size()) == fc7) {
    std::string_view spec_text = rest.substr(fc7.size());
    SevenValuedSpec spec;
    if (spec_text.size() < 2 || spec_text.size() > 3 ||
        (spec_text.size() == 3 && spec_text[2] != '*'))
      throw Error("bad seven-valued reference '" + std::string(reference) +
                  "' (expected builtin:fc7:<V><v>[*], e.g. builtin:fc7:Bt*)");
    spec.differentiated = spec_text[0];
    spec.dominant = spec_text[1];
    spec.starred = spec_text.size() == 3;
    return build_seven_valued(spec);
  }
  return build_builtin(rest);
}

std::vector<SevenValuedSpec> all_seven_valued_specs() {
  std::vector<SevenValuedSpec> specs;
  for (char V : {'B', 'T'}) {
    for (char v : {'b', 't', 'f', 'n'}) {
      for (bool starred : {false, true}) {
        specs.push_back(SevenValuedSpec{V, v, starred});
      }
    }
  }
  return specs;
}

}  // namespace manyval
