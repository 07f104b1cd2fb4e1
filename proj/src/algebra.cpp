#include "manyval/algebra.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace manyval {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::pair<std::string, int>> signature(const Matrix& m) {
  std::vector<std::pair<std::string, int>> sig;
  for (const auto& op : m.ops()) sig.emplace_back(op.name, op.arity);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::size_t pow_size(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void decompose(std::size_t index, std::size_t n, int arity, std::vector<Value>& out) {
  out.resize(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<Value>(index % n);
    index /= n;
  }
}

std::string tuple_names(const Matrix& m, const std::vector<Value>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += m.value_name(args[i]);
  }
  return s + ")";
}

}  // namespace

Matrix direct_product(const Matrix& a, const Matrix& b) {
  if (signature(a) != signature(b))
    throw Error("signature mismatch: matrices '" + a.name() + "' and '" + b.name() +
                "' declare different operations");
  const std::size_t na = a.size(), nb = b.size();
  if (na * nb > kMaxRepresentable)
    throw Error("product of '" + a.name() + "' and '" + b.name() + "' would have " +
                std::to_string(na * nb) + " values (limit " +
                std::to_string(kMaxRepresentable) + ")");

  std::vector<std::string> values;
  values.reserve(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) values.push_back(a.values()[i] + b.values()[j]);

  std::vector<std::string> designated;
  for (std::size_t i = 0; i < na; ++i) {
    if (!a.is_designated(static_cast<Value>(i))) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (b.is_designated(static_cast<Value>(j)))
        designated.push_back(a.values()[i] + b.values()[j]);
    }
  }

  std::vector<Operation> ops;
  for (const auto& op_a : a.ops()) {
    const Operation& op_b = b.op(op_a.name, op_a.arity);
    Operation op{op_a.name, op_a.arity, {}};
    const std::size_t count = pow_size(na * nb, op_a.arity);
    op.table.reserve(count);
    std::vector<Value> args_a(static_cast<std::size_t>(op_a.arity));
    std::vector<Value> args_b(static_cast<std::size_t>(op_a.arity));
    for (std::size_t index = 0; index < count; ++index) {
      std::size_t rest = index;
      for (int k = op_a.arity - 1; k >= 0; --k) {
        const std::size_t pair = rest % (na * nb);
        rest /= na * nb;
        args_a[static_cast<std::size_t>(k)] = static_cast<Value>(pair / nb);
        args_b[static_cast<std::size_t>(k)] = static_cast<Value>(pair % nb);
      }
      const Value ra = a.apply(op_a, args_a);
      const Value rb = b.apply(op_b, args_b);
      op.table.push_back(static_cast<Value>(ra * nb + rb));
    }
    ops.push_back(std::move(op));
  }

  return Matrix(a.name() + "×" + b.name(), values, designated, ops);
}

std::string HomWitness::describe(const Matrix& source) const {
  if (kind == Kind::Designation)
    return "designation violated at '" + source.value_name(value) +
           "' (v is designated iff f(v) is designated)";
  return "operation '" + op + "' violated at " + tuple_names(source, args) +
         ": f(" + op + "(args)) != " + op + "(f(args))";
}

HomCheck is_strong_homomorphism(const Matrix& source, const Matrix& target,
                                const ValueMap& f) {
  if (f.map.size() != source.size())
    throw Error("map is not total on the values of '" + source.name() + "'");
  for (Value v : f.map) {
    if (v >= target.size())
      throw Error("map output " + std::to_string(v) + " is foreign to '" +
                  target.name() + "'");
  }

  for (std::size_t v = 0; v < source.size(); ++v) {
    if (source.is_designated(static_cast<Value>(v)) !=
        target.is_designated(f.map[v])) {
      HomWitness w;
      w.kind = HomWitness::Kind::Designation;
      w.value = static_cast<Value>(v);
      return HomCheck{false, w};
    }
  }

  std::vector<Value> args, mapped;
  for (const auto& op : source.ops()) {
    const Operation* top = target.find_op(op.name, op.arity);
    if (!top)
      throw Error("matrix '" + target.name() + "' lacks operation " + op.name + "/" +
                  std::to_string(op.arity));
    const std::size_t count = op.table.size();
    for (std::size_t index = 0; index < count; ++index) {
      decompose(index, source.size(), op.arity, args);
      mapped.resize(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) mapped[i] = f.map[args[i]];
      if (f.map[op.table[index]] != target.apply(*top, mapped)) {
        HomWitness w;
        w.kind = HomWitness::Kind::Operation;
        w.op = op.name;
        w.args = args;
        return HomCheck{false, w};
      }
    }
  }

  return HomCheck{true, std::nullopt};
}

Partition induced_partition(const Matrix& source, const ValueMap& f) {
  if (f.map.size() != source.size())
    throw Error("map is not total on the values of '" + source.name() + "'");
  std::unordered_map<Value, std::vector<Value>> fibers;
  for (std::size_t v = 0; v < source.size(); ++v)
    fibers[f.map[v]].push_back(static_cast<Value>(v));
  std::vector<std::vector<Value>> blocks;
  blocks.reserve(fibers.size());
  for (auto& [image, members] : fibers) blocks.push_back(std::move(members));
  return Partition::of_blocks(source, std::move(blocks));
}

std::string CongruenceWitness::describe(const Matrix& m) const {
  if (kind == Kind::MixedBlock)
    return "block mixes designated '" + m.value_name(a) + "' with undesignated '" +
           m.value_name(b) + "'";
  return "operation '" + op + "' incompatible: blockwise-equal tuples " +
         tuple_names(m, args1) + " and " + tuple_names(m, args2) +
         " give results in different blocks";
}

CongruenceCheck is_congruence(const Matrix& m, const Partition& p) {
  if (p.matrix_name != m.name())
    throw Error("foreign partition: belongs to matrix '" + p.matrix_name + "', not '" +
                m.name() + "'");
  Partition checked = Partition::of_blocks(m, p.blocks);
  const std::vector<int> block = checked.block_of(m.size());

  for (const auto& blk : checked.blocks) {
    Value designated_member = kNoValue, undesignated_member = kNoValue;
    for (Value v : blk) {
      (m.is_designated(v) ? designated_member : undesignated_member) = v;
    }
    if (designated_member != kNoValue && undesignated_member != kNoValue) {
      CongruenceWitness w;
      w.kind = CongruenceWitness::Kind::MixedBlock;
      w.a = designated_member;
      w.b = undesignated_member;
      return CongruenceCheck{false, w};
    }
  }

  // Compatibility: the result block may depend only on the argument blocks.
  std::vector<Value> args;
  for (const auto& op : m.ops()) {
    std::unordered_map<std::size_t, std::pair<std::size_t, int>> seen;  // key -> (first index, result block)
    for (std::size_t index = 0; index < op.table.size(); ++index) {
      std::size_t key = 0, rest = index;
      for (int i = 0; i < op.arity; ++i) {
        key = key * checked.blocks.size() +
              static_cast<std::size_t>(block[rest % m.size()]);
        rest /= m.size();
      }
      const int result_block = block[op.table[index]];
      auto [it, inserted] = seen.emplace(key, std::make_pair(index, result_block));
      if (!inserted && it->second.second != result_block) {
        CongruenceWitness w;
        w.kind = CongruenceWitness::Kind::Operation;
        w.op = op.name;
        decompose(it->second.first, m.size(), op.arity, w.args1);
        decompose(index, m.size(), op.arity, w.args2);
        return CongruenceCheck{false, w};
      }
    }
  }

  return CongruenceCheck{true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Congruence enumeration
// ---------------------------------------------------------------------------

namespace {

// Union-find over value indices carrying, per class: whether the class
// contains designated / undesignated values, and the block id the class is
// committed to (-1 while it holds only unassigned values).
struct ClosureState {
  std::array<Value, kMaxValues> parent;
  std::array<std::int8_t, kMaxValues> committed;
  std::uint64_t has_designated = 0;    // bit per root
  std::uint64_t has_undesignated = 0;  // bit per root

  void init(std::size_t n, std::uint64_t designated_mask) {
    for (std::size_t i = 0; i < n; ++i) {
      parent[i] = static_cast<Value>(i);
      committed[i] = -1;
    }
    has_designated = designated_mask;
    has_undesignated = ~designated_mask & ((n == 64) ? ~std::uint64_t{0}
                                                     : ((std::uint64_t{1} << n) - 1));
  }

  Value find(Value v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  // Returns false on a designated/undesignated mix or a commitment clash.
  bool unite(Value a, Value b) {
    Value ra = find(a), rb = find(b);
    if (ra == rb) return true;
    if (ra > rb) std::swap(ra, rb);  // keep the least member as root
    if (committed[ra] >= 0 && committed[rb] >= 0 && committed[ra] != committed[rb])
      return false;
    parent[rb] = ra;
    if (committed[rb] >= 0) committed[ra] = committed[rb];
    const std::uint64_t bit_b = std::uint64_t{1} << rb;
    if (has_designated & bit_b) has_designated |= std::uint64_t{1} << ra;
    if (has_undesignated & bit_b) has_undesignated |= std::uint64_t{1} << ra;
    const std::uint64_t bit_a = std::uint64_t{1} << ra;
    return !((has_designated & bit_a) && (has_undesignated & bit_a));
  }
};

// Closes the state under operation compatibility: whenever two argument
// tuples are pointwise equivalent, their results are united. Returns false
// as soon as a union violates designation purity or block commitments —
// in that case no completion of the current assignment is a congruence.
bool close_under_ops(const Matrix& m, ClosureState& st) {
  const std::size_t n = m.size();
  std::array<Value, kMaxValues> unary_first;
  std::array<Value, kMaxValues * kMaxValues> binary_first;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& op : m.ops()) {
      if (op.arity == 1) {
        std::fill(unary_first.begin(), unary_first.begin() + n, kNoValue);
        for (std::size_t v = 0; v < n; ++v) {
          const Value key = st.find(static_cast<Value>(v));
          const Value result = op.table[v];
          if (unary_first[key] == kNoValue) {
            unary_first[key] = result;
          } else if (st.find(unary_first[key]) != st.find(result)) {
            if (!st.unite(unary_first[key], result)) return false;
            changed = true;
          }
        }
      } else if (op.arity == 2) {
        std::fill(binary_first.begin(), binary_first.begin() + n * n, kNoValue);
        std::size_t index = 0;
        for (std::size_t x = 0; x < n; ++x) {
          const std::size_t rx = st.find(static_cast<Value>(x)) * n;
          for (std::size_t y = 0; y < n; ++y, ++index) {
            const std::size_t key = rx + st.find(static_cast<Value>(y));
            const Value result = op.table[index];
            if (binary_first[key] == kNoValue) {
              binary_first[key] = result;
            } else if (st.find(binary_first[key]) != st.find(result)) {
              if (!st.unite(binary_first[key], result)) return false;
              changed = true;
            }
          }
        }
      } else {
        std::unordered_map<std::size_t, Value> first;
        for (std::size_t index = 0; index < op.table.size(); ++index) {
          std::size_t key = 0, rest = index;
          for (int i = 0; i < op.arity; ++i) {
            key = key * n + st.find(static_cast<Value>(rest % n));
            rest /= n;
          }
          const Value result = op.table[index];
          auto [it, inserted] = first.emplace(key, result);
          if (!inserted && st.find(it->second) != st.find(result)) {
            if (!st.unite(it->second, result)) return false;
            changed = true;
          }
        }
      }
    }
  }
  return true;
}

struct SearchLimits {
  Clock::time_point deadline;
  std::uint64_t node_cap = 0;
};

struct SearchCounters {
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  bool stop_requested = false;  // sink asked to stop; not a budget failure
};

// Depth-first generation of designation-respecting partitions in
// restricted-growth order: each value either joins an existing block of
// matching designation or starts a new one. `sink` sees every congruence;
// returning false stops the walk.
class CongruenceSearch {
 public:
  CongruenceSearch(const Matrix& m, const SearchLimits& limits,
                   const std::function<bool(std::vector<std::vector<Value>>&)>& sink)
      : m_(m), n_(m.size()), limits_(limits), sink_(sink) {}

  void run_from(const ClosureState& state,
                std::vector<std::vector<Value>>& blocks, std::size_t depth,
                SearchCounters& counters) {
    if (counters.out_of_budget || counters.stop_requested) return;
    if (++counters.nodes >= limits_.node_cap ||
        ((counters.nodes & 0x3FF) == 0 && Clock::now() >= limits_.deadline)) {
      counters.out_of_budget = true;
      return;
    }
    if (depth == n_) {
      if (!sink_(blocks)) counters.stop_requested = true;
      return;
    }
    const Value v = static_cast<Value>(depth);
    const bool v_designated = m_.is_designated(v);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (m_.is_designated(blocks[b].front()) != v_designated) continue;
      ClosureState child = state;
      if (child.unite(v, blocks[b].front()) && close_under_ops(m_, child)) {
        blocks[b].push_back(v);
        run_from(child, blocks, depth + 1, counters);
        blocks[b].pop_back();
        if (counters.out_of_budget || counters.stop_requested) return;
      }
    }
    ClosureState child = state;
    const Value root = child.find(v);
    // Starting a fresh block contradicts any earlier forced merge of v into
    // a committed block.
    if (child.committed[root] >= 0) return;
    child.committed[root] = static_cast<std::int8_t>(blocks.size());
    blocks.push_back({v});
    run_from(child, blocks, depth + 1, counters);
    blocks.pop_back();
  }

  ClosureState initial_state() const {
    ClosureState st;
    st.init(n_, m_.designated_mask());
    return st;
  }

 private:
  const Matrix& m_;
  std::size_t n_;
  SearchLimits limits_;
  const std::function<bool(std::vector<std::vector<Value>>&)>& sink_;
};

SearchLimits make_limits(double budget_seconds, std::uint64_t node_cap) {
  SearchLimits limits;
  limits.deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(budget_seconds));
  limits.node_cap = node_cap == 0 ? ~std::uint64_t{0} : node_cap;
  return limits;
}

}  // namespace

bool for_each_congruence(const Matrix& m, const EnumerationOptions& options,
                         const std::function<bool(const Congruence&)>& visit) {
  if (m.size() > kMaxValues)
    throw Error("matrix '" + m.name() + "' exceeds the 64-value limit");
  const SearchLimits limits = make_limits(options.budget_seconds, options.node_cap);
  std::size_t emitted = 0;
  auto sink = [&](std::vector<std::vector<Value>>& blocks) {
    if (!options.include_identity && blocks.size() == m.size()) return true;
    Congruence c{Partition{m.name(), blocks}, true};
    ++emitted;
    if (!visit(c)) return false;
    return !(options.limit && emitted >= options.limit);
  };
  std::function<bool(std::vector<std::vector<Value>>&)> sink_fn = sink;
  CongruenceSearch search(m, limits, sink_fn);
  SearchCounters counters;
  std::vector<std::vector<Value>> blocks;
  search.run_from(search.initial_state(), blocks, 0, counters);
  return !counters.out_of_budget;
}

EnumerationResult enumerate_congruences(const Matrix& m,
                                        const EnumerationOptions& options) {
  if (m.size() > kMaxValues)
    throw Error("matrix '" + m.name() + "' exceeds the 64-value limit");
  const auto started = Clock::now();
  EnumerationResult result;
  const SearchLimits limits = make_limits(options.budget_seconds, options.node_cap);

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    std::function<bool(std::vector<std::vector<Value>>&)> sink =
        [&](std::vector<std::vector<Value>>& blocks) {
          if (!options.include_identity && blocks.size() == m.size()) return true;
          result.congruences.push_back(Congruence{Partition{m.name(), blocks}, true});
          if (options.limit && result.congruences.size() >= options.limit) {
            result.hit_limit = true;
            return false;
          }
          return true;
        };
    CongruenceSearch search(m, limits, sink);
    SearchCounters counters;
    std::vector<std::vector<Value>> blocks;
    search.run_from(search.initial_state(), blocks, 0, counters);
    result.nodes_visited = counters.nodes;
    result.complete = !counters.out_of_budget && !result.hit_limit;
  } else {
    // Split the first few levels of the search tree into tasks; the final
    // canonical sort makes the output independent of the worker count.
    struct Task {
      ClosureState state;
      std::vector<std::vector<Value>> blocks;
      std::size_t depth;
    };
    std::vector<Task> tasks;
    {
      std::function<bool(std::vector<std::vector<Value>>&)> nop =
          [](std::vector<std::vector<Value>>&) { return true; };
      CongruenceSearch seed(m, limits, nop);
      ClosureState root = seed.initial_state();
      std::vector<Task> frontier{Task{root, {}, 0}};
      while (!frontier.empty() &&
             frontier.size() < static_cast<std::size_t>(jobs) * 8 &&
             frontier.front().depth < m.size()) {
        std::vector<Task> next;
        for (Task& task : frontier) {
          const Value v = static_cast<Value>(task.depth);
          const bool v_designated = m.is_designated(v);
          for (std::size_t b = 0; b < task.blocks.size(); ++b) {
            if (m.is_designated(task.blocks[b].front()) != v_designated) continue;
            ClosureState child = task.state;
            if (child.unite(v, task.blocks[b].front()) && close_under_ops(m, child)) {
              Task t{child, task.blocks, task.depth + 1};
              t.blocks[b].push_back(v);
              next.push_back(std::move(t));
            }
          }
          ClosureState child = task.state;
          const Value root_v = child.find(v);
          if (child.committed[root_v] < 0) {
            child.committed[root_v] = static_cast<std::int8_t>(task.blocks.size());
            Task t{child, task.blocks, task.depth + 1};
            t.blocks.push_back({v});
            next.push_back(std::move(t));
          }
        }
        frontier = std::move(next);
      }
      tasks = std::move(frontier);
    }

    std::mutex merge_mutex;
    std::atomic<std::size_t> next_task{0};
    std::atomic<bool> out_of_budget{false};
    std::uint64_t total_nodes = 0;
    auto worker = [&] {
      std::vector<Congruence> local;
      SearchCounters counters;
      std::function<bool(std::vector<std::vector<Value>>&)> sink =
          [&](std::vector<std::vector<Value>>& blocks) {
            if (!options.include_identity && blocks.size() == m.size()) return true;
            local.push_back(Congruence{Partition{m.name(), blocks}, true});
            return true;
          };
      CongruenceSearch search(m, limits, sink);
      for (;;) {
        const std::size_t i = next_task.fetch_add(1);
        if (i >= tasks.size()) break;
        Task task = tasks[i];
        search.run_from(task.state, task.blocks, task.depth, counters);
        if (counters.out_of_budget) {
          out_of_budget = true;
          break;
        }
      }
      std::scoped_lock lock(merge_mutex);
      total_nodes += counters.nodes;
      result.congruences.insert(result.congruences.end(), local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    result.nodes_visited = total_nodes;
    result.complete = !out_of_budget;
    if (options.limit && result.congruences.size() > options.limit) {
      result.hit_limit = true;
      result.complete = false;
    }
  }

  std::sort(result.congruences.begin(), result.congruences.end(),
            [](const Congruence& a, const Congruence& b) {
              return Partition::canonical_less(a.partition, b.partition);
            });
  if (options.limit && result.congruences.size() > options.limit)
    result.congruences.resize(options.limit);
  result.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

// ---------------------------------------------------------------------------
// Factors, isomorphisms, epimorphisms
// ---------------------------------------------------------------------------

std::pair<Matrix, ValueMap> factor_matrix(const Matrix& m, const Congruence& c) {
  if (!c.verified)
    throw Error("unverified congruence: verify with is_congruence before factoring");
  if (c.partition.matrix_name != m.name())
    throw Error("foreign partition: belongs to matrix '" + c.partition.matrix_name +
                "', not '" + m.name() + "'");
  const Partition partition = Partition::of_blocks(m, c.partition.blocks);
  if (!partition.respects_designation(m))
    throw Error("congruence does not respect designation");
  const std::vector<int> block = partition.block_of(m.size());
  const std::size_t nb = partition.blocks.size();

  std::vector<std::string> values;
  std::vector<std::string> designated;
  for (const auto& blk : partition.blocks) {
    std::string name;
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) name += "·";
      name += m.value_name(blk[i]);
    }
    if (m.is_designated(blk.front())) designated.push_back(name);
    values.push_back(std::move(name));
  }

  std::vector<Operation> ops;
  std::vector<Value> rep_args;
  for (const auto& op : m.ops()) {
    Operation lifted{op.name, op.arity, {}};
    const std::size_t count = pow_size(nb, op.arity);
    lifted.table.reserve(count);
    for (std::size_t index = 0; index < count; ++index) {
      std::size_t rest = index;
      rep_args.resize(static_cast<std::size_t>(op.arity));
      for (int i = op.arity - 1; i >= 0; --i) {
        rep_args[static_cast<std::size_t>(i)] = partition.blocks[rest % nb].front();
        rest /= nb;
      }
      lifted.table.push_back(static_cast<Value>(block[m.apply(op, rep_args)]));
    }
    ops.push_back(std::move(lifted));
  }

  Matrix factor(m.name() + "/≡", values, designated, ops);
  ValueMap projection;
  projection.source = m.name();
  projection.target = factor.name();
  projection.kind = ValueMap::Kind::Epi;
  projection.map.resize(m.size());
  for (std::size_t v = 0; v < m.size(); ++v)
    projection.map[v] = static_cast<Value>(block[v]);
  return {std::move(factor), std::move(projection)};
}

namespace {

// Partial map consistency: every operation application fully inside the
// domain must commute with the map. Tuples whose result is still unmapped
// impose no constraint yet.
bool partial_iso_ok(const Matrix& a, const Matrix& b,
                    const std::vector<Value>& map, std::size_t mapped_prefix) {
  std::vector<Value> args, images;
  for (const auto& op : a.ops()) {
    const Operation& opb = b.op(op.name, op.arity);
    const std::size_t count = op.table.size();
    for (std::size_t index = 0; index < count; ++index) {
      decompose(index, a.size(), op.arity, args);
      bool in_domain = true;
      for (Value arg : args) {
        if (arg >= mapped_prefix) {
          in_domain = false;
          break;
        }
      }
      if (!in_domain || op.table[index] >= mapped_prefix) continue;
      images.resize(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) images[i] = map[args[i]];
      if (b.apply(opb, images) != map[op.table[index]]) return false;
    }
  }
  return true;
}

void iso_search(const Matrix& a, const Matrix& b, bool collect_all,
                std::vector<ValueMap>& out) {
  if (a.size() != b.size()) return;
  if (a.designated_count() != b.designated_count()) return;
  if (signature(a) != signature(b)) return;

  const std::size_t n = a.size();
  std::vector<Value> map(n, kNoValue);
  std::vector<std::uint8_t> used(n, 0);

  // Extends the map along a's declaration order; candidates are tried in
  // b's declaration order, designated paired with designated only.
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) {
      ValueMap f;
      f.source = a.name();
      f.target = b.name();
      f.map = map;
      f.kind = ValueMap::Kind::Iso;
      out.push_back(std::move(f));
      return !collect_all;
    }
    const bool designated = a.is_designated(static_cast<Value>(depth));
    for (std::size_t candidate = 0; candidate < n; ++candidate) {
      if (used[candidate]) continue;
      if (b.is_designated(static_cast<Value>(candidate)) != designated) continue;
      map[depth] = static_cast<Value>(candidate);
      used[candidate] = 1;
      if (partial_iso_ok(a, b, map, depth + 1)) {
        if (self(self, depth + 1)) return true;
      }
      used[candidate] = 0;
      map[depth] = kNoValue;
    }
    return false;
  };
  rec(rec, 0);
}

}  // namespace

std::optional<ValueMap> find_isomorphism(const Matrix& a, const Matrix& b) {
  std::vector<ValueMap> out;
  iso_search(a, b, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<ValueMap> automorphisms(const Matrix& m) {
  std::vector<ValueMap> out;
  iso_search(m, m, true, out);
  return out;
}

std::vector<ValueMap> find_epimorphisms(const Matrix& source, const Matrix& target,
                                        bool find_all,
                                        const EpimorphismOptions& options) {
  std::vector<ValueMap> found;
  if (signature(source) != signature(target)) return found;
  if (target.size() > source.size()) return found;

  EnumerationOptions eopts;
  eopts.include_identity = true;
  eopts.budget_seconds = options.budget_seconds;
  eopts.node_cap = options.node_cap;

  auto try_congruence = [&](const Congruence& c) {
    if (c.partition.block_count() != target.size()) return true;
    auto [factor, projection] = factor_matrix(source, c);
    if (auto iso = find_isomorphism(factor, target)) {
      found.push_back(ValueMap::compose(projection, *iso, ValueMap::Kind::Epi));
      return find_all;  // stop after the first hit unless collecting all
    }
    return true;
  };

  if (find_all) {
    EnumerationResult census = enumerate_congruences(source, eopts);
    if (!census.complete)
      throw BudgetExhausted("epimorphism search: congruence census of '" +
                            source.name() + "' ran out of budget");
    for (const Congruence& c : census.congruences) try_congruence(c);
  } else {
    const bool finished = for_each_congruence(source, eopts, try_congruence);
    if (found.empty() && !finished)
      throw BudgetExhausted("epimorphism search: congruence census of '" +
                            source.name() + "' ran out of budget");
  }
  return found;
}

// ---------------------------------------------------------------------------
// Search-space accounting
// ---------------------------------------------------------------------------

BigInt factorial(int n) {
  if (n < 0) throw Error("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt bell_number(int n) {
  if (n < 0) throw Error("Bell number of a negative number");
  // Bell triangle.
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next;
    next.reserve(static_cast<std::size_t>(i) + 1);
    next.push_back(row.back());
    for (const BigInt& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigInt stirling2(int n, int m) {
  if (n < 0 || m < 0) throw Error("Stirling number of a negative argument");
  if (m > n) return 0;
  if (n == m) return 1;
  if (m == 0) return 0;
  // S(i, j) = j*S(i-1, j) + S(i-1, j-1), row by row.
  std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(m)];
}

SearchStats search_space_stats(int n, int k, std::optional<SurjectionSplit> split) {
  if (!(0 < k && k < n && n <= static_cast<int>(kMaxValues)))
    throw Error("search-space stats require 0 < k < n <= 64 (got n=" +
                std::to_string(n) + ", k=" + std::to_string(k) + ")");
  SearchStats stats;
  stats.n = n;
  stats.k = k;
  stats.bell_designated = bell_number(k);
  stats.bell_undesignated = bell_number(n - k);
  stats.congruence_candidates = stats.bell_designated * stats.bell_undesignated;
  stats.bijection_candidates = factorial(k) * factorial(n - k);
  if (split) {
    auto check = [](int from, int to, const char* what) {
      if (!(0 < to && to <= from))
        throw Error(std::string("surjection split: need 0 < ") + what +
                    " target <= source");
    };
    check(split->undesignated_from, split->undesignated_to, "undesignated");
    check(split->designated_from, split->designated_to, "designated");
    stats.surjection_candidates =
        factorial(split->undesignated_to) *
        stirling2(split->undesignated_from, split->undesignated_to) *
        factorial(split->designated_to) *
        stirling2(split->designated_from, split->designated_to);
  }
  return stats;
}

}  // namespace manyval
