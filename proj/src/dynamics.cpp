#include "dbac/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace dbac {

namespace {

constexpr int network_node_limit = 62;

constexpr std::uint8_t indegree_mask = 0x07;
constexpr std::uint8_t removed_flag = 0x08;
constexpr std::uint8_t visited_flag = 0x10;

void check_network_size(int n) {
  if (n < 1 || n > network_node_limit) {
    throw Error(ErrorCode::size_out_of_range, "network node count " + std::to_string(n));
  }
}

template <typename Fn>
void parallel_ranges(std::uint64_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < workers) {
    fn(std::uint64_t{0}, count);
    return;
  }
  const std::uint64_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(count, w * chunk);
    const std::uint64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

// Marks transient states as removed by peeling in-degree-zero states; the
// survivors are exactly the cyclic states. `on_removed` sees every transient
// state after all of its predecessors.
template <typename OnRemoved>
std::vector<std::uint8_t> peel(const Network& net, unsigned workers, OnRemoved&& on_removed) {
  const std::uint64_t count = net.state_count();
  std::vector<std::uint8_t> flags(count, 0);
  if (workers <= 1) {
    for (std::uint64_t x = 0; x < count; ++x) ++flags[net.step(x)];
  } else {
    parallel_ranges(count, workers, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t x = begin; x < end; ++x) {
        std::atomic_ref<std::uint8_t>(flags[net.step(x)]).fetch_add(1, std::memory_order_relaxed);
      }
    });
  }
  for (std::uint64_t x = 0; x < count; ++x) {
    std::uint64_t y = x;
    while ((flags[y] & (indegree_mask | removed_flag)) == 0) {
      flags[y] |= removed_flag;
      const std::uint64_t next = net.step(y);
      on_removed(y, next);
      --flags[next];
      y = next;
    }
  }
  return flags;
}

std::vector<std::uint8_t> peel(const Network& net, unsigned workers) {
  return peel(net, workers, [](std::uint64_t, std::uint64_t) {});
}

bool is_cyclic(std::uint8_t flag) { return (flag & removed_flag) == 0; }

struct CycleInfo {
  int period;
  std::uint64_t representative;
};

// Every cycle exactly once, keyed by its lexicographically minimal member.
std::vector<CycleInfo> find_cycles(const Network& net, const EngineOptions& opts) {
  check_engine_cap(net.n(), opts);
  auto flags = peel(net, opts.workers);
  const int n = net.n();
  const std::uint64_t count = net.state_count();
  std::vector<CycleInfo> cycles;

  if (opts.workers <= 1) {
    for (std::uint64_t x = 0; x < count; ++x) {
      if (!is_cyclic(flags[x]) || (flags[x] & visited_flag)) continue;
      int period = 0;
      std::uint64_t best = x;
      std::uint64_t y = x;
      do {
        flags[y] |= visited_flag;
        if (reverse_bits(y, n) < reverse_bits(best, n)) best = y;
        y = net.step(y);
        ++period;
      } while (y != x);
      cycles.push_back({period, best});
    }
  } else {
    // Each worker reports the cycles whose minimal member falls in its range.
    std::vector<std::vector<CycleInfo>> partial(opts.workers);
    const std::uint64_t chunk = (count + opts.workers - 1) / opts.workers;
    parallel_ranges(count, opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
      auto& out = partial[static_cast<std::size_t>(begin / std::max<std::uint64_t>(chunk, 1))];
      for (std::uint64_t x = begin; x < end; ++x) {
        if (!is_cyclic(flags[x])) continue;
        const std::uint64_t key = reverse_bits(x, n);
        bool minimal = true;
        int period = 1;
        for (std::uint64_t y = net.step(x); y != x; y = net.step(y), ++period) {
          if (reverse_bits(y, n) < key) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back({period, x});
      }
    });
    for (auto& part : partial) cycles.insert(cycles.end(), part.begin(), part.end());
  }

  std::sort(cycles.begin(), cycles.end(), [n](const CycleInfo& a, const CycleInfo& b) {
    if (a.period != b.period) return a.period < b.period;
    return reverse_bits(a.representative, n) < reverse_bits(b.representative, n);
  });
  return cycles;
}

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t tree_hash(std::uint64_t children_sum) { return mix(children_sum ^ 0x5bd1e995ULL); }

std::uint64_t fold(std::uint64_t seed, std::uint64_t value) { return mix(seed ^ mix(value)); }

}  // namespace

Network::Network(const DbacSpec& spec) : n_(spec.n()) {
  check_network_size(n_);
  const int l = spec.l();
  const auto arcs = spec.effective_arc_signs();
  for (int i = 1; i < n_; ++i) {
    if (i != l) shift_mask_ |= std::uint64_t{1} << i;
    if (arcs[static_cast<std::size_t>(i)] == Sign::negative) flip_mask_ |= std::uint64_t{1} << i;
  }
  branch_bit_ = std::uint64_t{1} << l;
  src_a_ = l - 1;
  neg_a_ = arcs.front() == Sign::negative ? 1 : 0;
  src_b_ = n_ - 1;
  neg_b_ = arcs.back() == Sign::negative ? 1 : 0;
  conjunction_ = spec.star() == Combiner::conjunction;
}

Network::Network(const IsolatedCircuit& circuit) : n_(circuit.size) {
  check_network_size(n_);
  for (int i = 1; i < n_; ++i) shift_mask_ |= std::uint64_t{1} << i;
  src_a_ = src_b_ = n_ - 1;
  neg_a_ = neg_b_ = circuit.sign == Sign::negative ? 1 : 0;
}

EngineOptions EngineOptions::from_environment() {
  EngineOptions opts;
  if (const char* env = std::getenv("DBAC_MAX_NODES")) {
    try {
      opts.max_nodes = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, std::string("DBAC_MAX_NODES is not an integer: ") + env);
    }
  }
  return opts;
}

void check_engine_cap(int n, const EngineOptions& opts) {
  if (n > opts.max_nodes || n > network_node_limit) {
    throw Error(ErrorCode::state_space_too_large,
                "n = " + std::to_string(n) + " exceeds engine cap " + std::to_string(opts.max_nodes));
  }
}

std::uint64_t AttractorSpectrum::total() const {
  std::uint64_t sum = 0;
  for (const auto& [p, c] : counts) sum += c;
  return sum;
}

std::uint64_t AttractorSpectrum::periodic_configurations() const {
  std::uint64_t sum = 0;
  for (const auto& [p, c] : counts) sum += static_cast<std::uint64_t>(p) * c;
  return sum;
}

std::uint64_t AttractorSpectrum::at(int period) const {
  auto it = counts.find(period);
  return it == counts.end() ? 0 : it->second;
}

Configuration step(const DbacSpec& spec, const Configuration& x) {
  return Configuration(spec, Network(spec).step(x.bits().word()));
}

std::optional<int> exact_period(const Network& net, std::uint64_t x) {
  // Brent: length of the cycle eventually reached from x.
  std::uint64_t power = 1;
  std::uint64_t length = 1;
  std::uint64_t tortoise = x;
  std::uint64_t hare = net.step(x);
  while (tortoise != hare) {
    if (power == length) {
      tortoise = hare;
      power *= 2;
      length = 0;
    }
    hare = net.step(hare);
    ++length;
  }
  std::uint64_t y = x;
  for (std::uint64_t i = 0; i < length; ++i) y = net.step(y);
  if (y != x) return std::nullopt;
  return static_cast<int>(length);
}

std::optional<int> exact_period(const DbacSpec& spec, const Configuration& x) {
  return exact_period(Network(spec), x.bits().word());
}

std::vector<Attractor> attractors(const Network& net, const EngineOptions& opts) {
  std::vector<Attractor> out;
  for (const auto& cycle : find_cycles(net, opts)) {
    Attractor a;
    a.period = cycle.period;
    a.representative = Bits(cycle.representative, net.n());
    std::uint64_t y = cycle.representative;
    for (int i = 0; i < cycle.period; ++i, y = net.step(y)) a.members.emplace_back(y, net.n());
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Attractor> attractors(const DbacSpec& spec, const EngineOptions& opts) {
  return attractors(Network(spec), opts);
}

AttractorSpectrum attractor_spectrum(const Network& net, const EngineOptions& opts) {
  AttractorSpectrum spectrum;
  for (const auto& cycle : find_cycles(net, opts)) ++spectrum.counts[cycle.period];
  return spectrum;
}

AttractorSpectrum attractor_spectrum(const DbacSpec& spec, const EngineOptions& opts) {
  return attractor_spectrum(Network(spec), opts);
}

std::string transition_graph(const DbacSpec& spec, GraphFormat format, const EngineOptions& opts) {
  check_engine_cap(spec.n(), opts);
  const Network net(spec);
  const int n = net.n();
  std::ostringstream out;
  if (format == GraphFormat::dot) {
    out << "digraph transition_graph {\n";
    for (std::uint64_t x = 0; x < net.state_count(); ++x) {
      out << "  \"" << Bits(x, n).to_string() << "\";\n";
    }
    for (std::uint64_t x = 0; x < net.state_count(); ++x) {
      out << "  \"" << Bits(x, n).to_string() << "\" -> \"" << Bits(net.step(x), n).to_string()
          << "\";\n";
    }
    out << "}\n";
  } else {
    out << "state,next\n";
    for (std::uint64_t x = 0; x < net.state_count(); ++x) {
      out << Bits(x, n).to_string() << ',' << Bits(net.step(x), n).to_string() << '\n';
    }
  }
  return out.str();
}

std::uint64_t functional_graph_fingerprint(const Network& net, const EngineOptions& opts) {
  check_engine_cap(net.n(), opts);
  // children_sum[x]: commutative sum over transient predecessors of their
  // mixed rooted-tree hashes.
  std::vector<std::uint64_t> children_sum(net.state_count(), 0);
  auto flags = peel(net, opts.workers, [&](std::uint64_t x, std::uint64_t next) {
    children_sum[next] += mix(tree_hash(children_sum[x]));
  });

  std::vector<std::uint64_t> cycle_hashes;
  std::vector<std::uint64_t> trees;
  for (std::uint64_t x = 0; x < net.state_count(); ++x) {
    if (!is_cyclic(flags[x]) || (flags[x] & visited_flag)) continue;
    trees.clear();
    std::uint64_t y = x;
    do {
      flags[y] |= visited_flag;
      trees.push_back(tree_hash(children_sum[y]));
      y = net.step(y);
    } while (y != x);

    // Least rotation, so the hash does not depend on where the walk started.
    const std::size_t p = trees.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < p; ++s) {
      for (std::size_t i = 0; i < p; ++i) {
        const auto a = trees[(s + i) % p];
        const auto b = trees[(best + i) % p];
        if (a != b) {
          if (a < b) best = s;
          break;
        }
      }
    }
    std::uint64_t h = mix(p);
    for (std::size_t i = 0; i < p; ++i) h = fold(h, trees[(best + i) % p]);
    cycle_hashes.push_back(h);
  }

  std::sort(cycle_hashes.begin(), cycle_hashes.end());
  std::uint64_t h = mix(net.state_count());
  for (auto c : cycle_hashes) h = fold(h, c);
  return h;
}

std::uint64_t functional_graph_fingerprint(const DbacSpec& spec, const EngineOptions& opts) {
  return functional_graph_fingerprint(Network(spec), opts);
}

std::vector<Configuration> periodic_configurations(const DbacSpec& spec, int p,
                                                   const EngineOptions& opts) {
  if (p < 1) throw Error(ErrorCode::invalid_argument, "period must be positive");
  check_engine_cap(spec.n(), opts);
  const Network net(spec);
  std::vector<Configuration> out;
  for (std::uint64_t x = 0; x < net.state_count(); ++x) {
    std::uint64_t y = x;
    for (int i = 0; i < p; ++i) y = net.step(y);
    if (y == x) out.emplace_back(spec, x);
  }
  return out;
}

std::string attractor_report_json(const DbacSpec& spec, const std::vector<Attractor>& found) {
  nlohmann::ordered_json j;
  j["l"] = spec.l();
  j["r"] = spec.r();
  j["signs"] = spec.signs();
  j["attractors"] = nlohmann::ordered_json::array();
  for (const auto& a : found) {
    j["attractors"].push_back({{"period", a.period}, {"representative", a.representative.to_string()}});
  }
  return j.dump();
}

}  // namespace dbac
