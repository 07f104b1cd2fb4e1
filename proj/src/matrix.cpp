#include "manyval/matrix.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>

namespace manyval {

namespace {

std::size_t pow_size(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Decomposes a row-major table index into its argument tuple.
std::vector<std::size_t> decompose(std::size_t index, std::size_t n, int arity) {
  std::vector<std::size_t> args(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    args[static_cast<std::size_t>(i)] = index % n;
    index /= n;
  }
  return args;
}

std::string tuple_string(const std::vector<std::string>& names,
                         const std::vector<std::size_t>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i] < names.size() ? names[args[i]] : "?";
  }
  s += ")";
  return s;
}

}  // namespace

void ValidationReport::add(Issue::Severity severity, std::string message,
                           std::string location) {
  if (severity == Issue::Severity::Error) ok = false;
  issues.push_back(Issue{severity, std::move(message), std::move(location)});
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& issue : issues) {
    os << (issue.severity == Issue::Severity::Error ? "error" : "warning");
    if (!issue.location.empty()) os << " [" << issue.location << "]";
    os << ": " << issue.message << "\n";
  }
  return os.str();
}

Matrix::Matrix(std::string name, std::vector<std::string> values,
               std::vector<std::string> designated, std::vector<Operation> ops)
    : name_(std::move(name)),
      values_(std::move(values)),
      designated_raw_(std::move(designated)),
      ops_(std::move(ops)) {
  designated_flags_.assign(values_.size(), 0);
  for (const auto& d : designated_raw_) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] == d) designated_flags_[i] = 1;
    }
  }
}

const std::string& Matrix::value_name(Value v) const {
  if (v >= values_.size()) throw Error("foreign value index " + std::to_string(v));
  return values_[v];
}

std::optional<Value> Matrix::find_value(std::string_view name) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == name) return static_cast<Value>(i);
  }
  return std::nullopt;
}

Value Matrix::value(std::string_view name) const {
  if (auto v = find_value(name)) return *v;
  throw Error("foreign value '" + std::string(name) + "' (not a value of matrix '" +
              name_ + "')");
}

bool Matrix::is_designated(Value v) const {
  if (v >= values_.size()) throw Error("foreign value index " + std::to_string(v));
  return designated_flags_[v] != 0;
}

std::size_t Matrix::designated_count() const {
  std::size_t k = 0;
  for (auto f : designated_flags_) k += f;
  return k;
}

std::vector<Value> Matrix::designated_values() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (designated_flags_[i]) out.push_back(static_cast<Value>(i));
  }
  return out;
}

std::uint64_t Matrix::designated_mask() const {
  if (values_.size() > kMaxValues)
    throw Error("matrix '" + name_ + "' has more than 64 values");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (designated_flags_[i]) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

const Operation* Matrix::find_op(std::string_view name, int arity) const {
  for (const auto& op : ops_) {
    if (op.arity == arity && op.name == name) return &op;
  }
  return nullptr;
}

const Operation& Matrix::op(std::string_view name, int arity) const {
  if (const Operation* op = find_op(name, arity)) return *op;
  throw Error("unknown operation '" + std::string(name) + "/" +
              std::to_string(arity) + "' in matrix '" + name_ + "'");
}

Value Matrix::apply(const Operation& op, std::span<const Value> args) const {
  std::size_t index = 0;
  for (Value a : args) index = index * values_.size() + a;
  return op.table[index];
}

Value Matrix::apply(std::string_view op_name, std::span<const Value> args) const {
  const Operation* found = nullptr;
  for (const auto& candidate : ops_) {
    if (candidate.name == op_name) {
      found = &candidate;
      if (candidate.arity == static_cast<int>(args.size())) break;
    }
  }
  if (!found)
    throw Error("unknown operation '" + std::string(op_name) + "' in matrix '" +
                name_ + "'");
  if (found->arity != static_cast<int>(args.size()))
    throw Error("arity mismatch: operation '" + std::string(op_name) + "' has arity " +
                std::to_string(found->arity) + ", got " + std::to_string(args.size()) +
                " arguments");
  for (Value a : args) {
    if (a >= values_.size())
      throw Error("foreign value index " + std::to_string(a) + " passed to '" +
                  std::string(op_name) + "'");
  }
  Value result = apply(*found, args);
  if (result == kNoValue)
    throw Error("incomplete table for operation '" + std::string(op_name) + "'");
  return result;
}

std::string Matrix::apply_named(std::string_view op_name,
                                const std::vector<std::string>& args) const {
  std::vector<Value> idx;
  idx.reserve(args.size());
  for (const auto& a : args) idx.push_back(value(a));
  return value_name(apply(op_name, idx));
}

Matrix Matrix::with_name(std::string name) const {
  Matrix copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool Matrix::structurally_equal(const Matrix& other) const {
  if (values_ != other.values_) return false;
  if (designated_flags_ != other.designated_flags_) return false;
  if (ops_.size() != other.ops_.size()) return false;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name != other.ops_[i].name || ops_[i].arity != other.ops_[i].arity ||
        ops_[i].table != other.ops_[i].table)
      return false;
  }
  return true;
}

bool is_valid_value_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (std::strchr(",{}().", c)) return false;
  }
  return true;
}

namespace {

// Names that are legal per the core invariant but that the spec-file lexer
// would split; validate_matrix warns about these so round-trips stay honest.
bool survives_lexer(std::string_view name) {
  for (char c : name) {
    if (std::strchr(":/#\"|", c)) return false;
  }
  return name.find("->") == std::string_view::npos;
}

}  // namespace

ValidationReport validate_matrix(const Matrix& m) {
  ValidationReport report;
  const auto err = Issue::Severity::Error;
  const auto warn = Issue::Severity::Warning;

  if (m.name().empty()) report.add(err, "matrix name is empty", "logic");

  const auto& values = m.values();
  if (values.empty()) report.add(err, "no truth values declared", "values");
  if (values.size() > kMaxRepresentable) {
    report.add(err,
               "too many truth values (" + std::to_string(values.size()) +
                   " > " + std::to_string(kMaxRepresentable) + ")",
               "values");
  } else if (values.size() > kMaxValues) {
    report.add(warn,
               "matrix has " + std::to_string(values.size()) +
                   " values; searches support at most " + std::to_string(kMaxValues),
               "values");
  }

  std::set<std::string> seen;
  for (const auto& v : values) {
    if (!is_valid_value_name(v)) {
      report.add(err, "invalid value name '" + v + "'", "values");
    } else if (!survives_lexer(v)) {
      report.add(warn, "value name '" + v + "' will not round-trip through the spec format",
                 "values");
    }
    if (!seen.insert(v).second) report.add(err, "duplicate value " + v, "values");
  }

  for (const auto& d : m.designated_names()) {
    if (!m.find_value(d))
      report.add(err, "designated value " + d + " not declared", "designated");
  }
  std::size_t designated = 0, undesignated = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    (m.is_designated(static_cast<Value>(i)) ? designated : undesignated)++;
  }
  if (!values.empty()) {
    if (designated == 0) report.add(err, "designated set empty", "designated");
    if (undesignated == 0)
      report.add(err, "every value is designated; at least one undesignated value is required",
                 "designated");
  }

  std::set<std::pair<std::string, int>> op_keys;
  for (const auto& op : m.ops()) {
    const std::string loc = "op " + op.name + "/" + std::to_string(op.arity);
    if (!is_valid_value_name(op.name)) report.add(err, "invalid operation name", loc);
    if (op.arity < 0) {
      report.add(err, "negative arity", loc);
      continue;
    }
    if (!op_keys.insert({op.name, op.arity}).second)
      report.add(err, "duplicate operation " + op.name + "/" + std::to_string(op.arity),
                 loc);
    const std::size_t expected = pow_size(values.size(), op.arity);
    if (op.table.size() != expected) {
      report.add(err,
                 "table has " + std::to_string(op.table.size()) + " entries, expected " +
                     std::to_string(expected),
                 loc);
      continue;
    }
    for (std::size_t i = 0; i < op.table.size(); ++i) {
      if (op.table[i] == kNoValue) {
        report.add(err,
                   "missing table entry " +
                       tuple_string(values, decompose(i, values.size(), op.arity)),
                   loc);
      } else if (op.table[i] >= values.size()) {
        report.add(err,
                   "table output for " +
                       tuple_string(values, decompose(i, values.size(), op.arity)) +
                       " is not a declared value",
                   loc);
      }
    }
  }

  return report;
}

}  // namespace manyval
