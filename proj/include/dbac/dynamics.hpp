#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dbac/core_model.hpp"

namespace dbac {

// An isolated Boolean automata circuit of the given size and sign, with the
// single negative arc (if any) entering node 0.
struct IsolatedCircuit {
  int size;
  Sign sign;
};

// Compiled parallel-update rule on states packed into a 64-bit word.
//
// Every node except node 0 copies one predecessor, optionally negated; node 0
// combines one or two predecessors. For a DBAC the copy mask covers all nodes
// but 0 and l, with node l reading node 0.
class Network {
 public:
  explicit Network(const DbacSpec& spec);
  explicit Network(const IsolatedCircuit& circuit);

  int n() const noexcept { return n_; }
  std::uint64_t state_count() const noexcept { return std::uint64_t{1} << n_; }

  std::uint64_t step(std::uint64_t x) const noexcept {
    std::uint64_t y = ((x << 1) & shift_mask_) | ((x & 1u) * branch_bit_);
    const std::uint64_t a = ((x >> src_a_) ^ neg_a_) & 1u;
    const std::uint64_t b = ((x >> src_b_) ^ neg_b_) & 1u;
    y |= conjunction_ ? (a & b) : (a | b);
    return y ^ flip_mask_;
  }

 private:
  int n_ = 0;
  std::uint64_t shift_mask_ = 0;
  std::uint64_t branch_bit_ = 0;
  std::uint64_t flip_mask_ = 0;
  int src_a_ = 0;
  int src_b_ = 0;
  std::uint64_t neg_a_ = 0;
  std::uint64_t neg_b_ = 0;
  bool conjunction_ = false;
};

struct EngineOptions {
  // Largest node count the exhaustive engine accepts (2^n states).
  int max_nodes = 26;
  unsigned workers = 1;

  // Defaults, with max_nodes taken from DBAC_MAX_NODES when set.
  static EngineOptions from_environment();
};

struct Attractor {
  int period = 0;
  Bits representative;
  std::vector<Bits> members;  // orbit starting at the representative
};

struct AttractorSpectrum {
  std::map<int, std::uint64_t> counts;  // exact period -> attractors

  std::uint64_t total() const;
  std::uint64_t periodic_configurations() const;
  std::uint64_t at(int period) const;

  friend bool operator==(const AttractorSpectrum&, const AttractorSpectrum&) = default;
};

enum class GraphFormat { dot, csv };

Configuration step(const DbacSpec& spec, const Configuration& x);

// Smallest p > 0 with F^p(x) = x, or nothing when x is transient.
std::optional<int> exact_period(const DbacSpec& spec, const Configuration& x);
std::optional<int> exact_period(const Network& net, std::uint64_t x);

// All cycles of the functional graph, sorted by (period, representative).
std::vector<Attractor> attractors(const Network& net, const EngineOptions& opts = {});
std::vector<Attractor> attractors(const DbacSpec& spec, const EngineOptions& opts = {});

AttractorSpectrum attractor_spectrum(const Network& net, const EngineOptions& opts = {});
AttractorSpectrum attractor_spectrum(const DbacSpec& spec, const EngineOptions& opts = {});

std::string transition_graph(const DbacSpec& spec, GraphFormat format,
                             const EngineOptions& opts = {});

// Isomorphism-invariant hash of the functional graph x -> F(x).
std::uint64_t functional_graph_fingerprint(const Network& net, const EngineOptions& opts = {});
std::uint64_t functional_graph_fingerprint(const DbacSpec& spec, const EngineOptions& opts = {});

// All x with F^p(x) = x, in increasing state-word order.
std::vector<Configuration> periodic_configurations(const DbacSpec& spec, int p,
                                                   const EngineOptions& opts = {});

// {"l","r","signs","attractors":[{"period":p,"representative":"bits"}]}
std::string attractor_report_json(const DbacSpec& spec, const std::vector<Attractor>& found);

// Throws state_space_too_large when n exceeds the cap.
void check_engine_cap(int n, const EngineOptions& opts);

}  // namespace dbac
