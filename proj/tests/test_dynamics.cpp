#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "dbac/dynamics.hpp"

using namespace dbac;

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

// Literal transcription of the update rule, node by node.
std::uint64_t reference_step(const DbacSpec& spec, std::uint64_t x) {
  const int l = spec.l();
  const int n = spec.n();
  const auto arcs = spec.effective_arc_signs();
  auto bit = [&](int i) { return static_cast<bool>((x >> i) & 1u); };
  auto apply = [](Sign s, bool v) { return s == N ? !v : v; };
  std::uint64_t y = 0;
  for (int i = 1; i < n; ++i) {
    const bool in = i == l ? bit(0) : bit(i - 1);
    if (apply(arcs[static_cast<std::size_t>(i)], in)) y |= std::uint64_t{1} << i;
  }
  const bool a = apply(arcs.front(), bit(l - 1));
  const bool b = apply(arcs.back(), bit(n - 1));
  const bool node0 = spec.star() == Combiner::disjunction ? (a || b) : (a && b);
  return y | (node0 ? 1u : 0u);
}

Configuration config(const DbacSpec& spec, const char* bits) {
  return Configuration(spec.l(), spec.r(), Bits::parse(bits));
}

}  // namespace

TEST_CASE("step on the documented examples") {
  const auto np = new_spec(2, 3, N, P);
  CHECK(step(np, config(np, "1111")).to_string() == "1111");

  const auto nn = new_spec(2, 3, N, N);
  CHECK(step(nn, config(nn, "1111")).to_string() == "0111");

  const auto pp = new_spec(3, 4, P, P);
  CHECK(step(pp, Configuration(pp, 0)).bits().word() == 0);
}

TEST_CASE("compiled step matches the node-by-node rule") {
  for (int l = 2; l <= 4; ++l) {
    for (int r = 2; r <= 4; ++r) {
      const int arcs = l + r;
      for (unsigned mask = 0; mask < (1u << arcs); mask += 3) {
        std::vector<Sign> signs;
        for (int i = 0; i < arcs; ++i) signs.push_back((mask >> i) & 1u ? N : P);
        for (Combiner star : {Combiner::disjunction, Combiner::conjunction}) {
          const auto spec = DbacSpec::with_arc_signs(l, r, star, signs);
          const Network net(spec);
          for (std::uint64_t x = 0; x < net.state_count(); ++x) {
            REQUIRE(net.step(x) == reference_step(spec, x));
          }
        }
      }
    }
  }
}

TEST_CASE("isolated circuits") {
  const Network positive(IsolatedCircuit{3, P});
  CHECK(positive.step(0b001) == 0b010);
  CHECK(positive.step(0b100) == 0b001);
  const Network negative(IsolatedCircuit{3, N});
  CHECK(negative.step(0b000) == 0b001);
  const Network self_loop(IsolatedCircuit{1, N});
  CHECK(self_loop.step(0) == 1);
  CHECK(self_loop.step(1) == 0);
}

TEST_CASE("exact_period") {
  const auto np = new_spec(2, 3, N, P);
  CHECK(exact_period(np, config(np, "1111")) == 1);
  CHECK(exact_period(np, config(np, "0111")) == 3);

  // A state with no predecessor is transient.
  const Network net(np);
  std::vector<int> indegree(net.state_count(), 0);
  for (std::uint64_t x = 0; x < net.state_count(); ++x) ++indegree[net.step(x)];
  int transient = 0;
  for (std::uint64_t x = 0; x < net.state_count(); ++x) {
    if (indegree[x] == 0) {
      CHECK_FALSE(exact_period(np, Configuration(np, x)).has_value());
      ++transient;
    }
  }
  CHECK(transient > 0);
}

TEST_CASE("attractors of small instances") {
  const auto np = attractors(new_spec(2, 3, N, P));
  REQUIRE(np.size() == 2);
  CHECK(np[0].period == 1);
  CHECK(np[0].representative.to_string() == "1111");
  CHECK(np[1].period == 3);
  CHECK(np[1].representative.to_string() == "0111");

  const auto nn = attractors(new_spec(2, 2, N, N));
  REQUIRE(nn.size() == 1);
  CHECK(nn[0].period == 4);

  CHECK(attractor_spectrum(new_spec(2, 2, P, P)) == attractor_spectrum(Network(IsolatedCircuit{2, P})));
}

TEST_CASE("attractor invariants") {
  for (auto [left, right] : {std::pair{P, P}, std::pair{N, P}, std::pair{P, N}, std::pair{N, N}}) {
    for (int l = 2; l <= 5; ++l) {
      for (int r = 2; r <= 5; ++r) {
        const auto spec = new_spec(l, r, left, right);
        const Network net(spec);
        const auto found = attractors(spec);
        std::uint64_t periodic = 0;
        for (const auto& a : found) {
          REQUIRE(static_cast<int>(a.members.size()) == a.period);
          CHECK(a.members.front() == a.representative);
          std::set<std::uint64_t> distinct;
          for (const auto& m : a.members) {
            distinct.insert(m.word());
            CHECK(m.lex_key() >= a.representative.lex_key());
          }
          CHECK(static_cast<int>(distinct.size()) == a.period);
          CHECK(exact_period(net, a.representative.word()) == a.period);
          periodic += static_cast<std::uint64_t>(a.period);
        }
        CHECK(attractor_spectrum(spec).periodic_configurations() == periodic);
        CHECK(std::is_sorted(found.begin(), found.end(), [](const Attractor& a, const Attractor& b) {
          if (a.period != b.period) return a.period < b.period;
          return a.representative.lex_key() < b.representative.lex_key();
        }));

        // Brute check of the cyclic set: x is periodic iff F^(2^n)(x) returns to x's cycle.
        std::uint64_t cyclic = 0;
        for (std::uint64_t x = 0; x < net.state_count(); ++x) cyclic += exact_period(net, x).has_value();
        CHECK(cyclic == periodic);
      }
    }
  }
}

TEST_CASE("spectrum examples") {
  CHECK(attractor_spectrum(new_spec(2, 3, N, P)).counts == std::map<int, std::uint64_t>{{1, 1}, {3, 1}});
  for (int l = 2; l <= 5; ++l) {
    for (int r = 2; r <= 5; ++r) {
      CHECK(attractor_spectrum(new_spec(l, r, P, P)).at(1) == 2);
      CHECK(attractor_spectrum(new_spec(l, r, N, N)).at(1) == 0);
    }
  }
}

TEST_CASE("result does not depend on worker count") {
  for (auto [l, r, left, right] : {std::tuple{5, 7, N, P}, std::tuple{6, 6, N, N}, std::tuple{4, 8, P, P}}) {
    const auto spec = new_spec(l, r, left, right);
    EngineOptions one;
    const auto baseline = attractor_report_json(spec, attractors(spec, one));
    for (unsigned workers : {2u, 3u, 8u}) {
      EngineOptions many;
      many.workers = workers;
      CHECK(attractor_report_json(spec, attractors(spec, many)) == baseline);
      CHECK(functional_graph_fingerprint(spec, many) == functional_graph_fingerprint(spec, one));
    }
  }
}

TEST_CASE("engine cap") {
  EngineOptions small;
  small.max_nodes = 8;
  const auto spec = new_spec(5, 5, N, P);
  try {
    attractors(spec, small);
    FAIL("expected state-space-too-large");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::state_space_too_large);
  }
  CHECK_THROWS_AS(transition_graph(spec, GraphFormat::csv, small), Error);
  CHECK_THROWS_AS(functional_graph_fingerprint(spec, small), Error);
  CHECK_THROWS_AS(periodic_configurations(spec, 2, small), Error);
}

TEST_CASE("transition graph formats") {
  const auto spec = new_spec(2, 2, P, P);
  const std::string dot = transition_graph(spec, GraphFormat::dot);
  std::istringstream in(dot);
  std::string line;
  int vertices = 0;
  int edges = 0;
  std::map<std::string, int> out_degree;
  while (std::getline(in, line)) {
    if (line.find("->") != std::string::npos) {
      ++edges;
      ++out_degree[line.substr(0, line.find("->"))];
    } else if (line.find('"') != std::string::npos) {
      ++vertices;
    }
  }
  CHECK(vertices == 8);
  CHECK(edges == 8);
  CHECK(out_degree.size() == 8);
  for (const auto& [v, d] : out_degree) CHECK(d == 1);

  const std::string csv = transition_graph(new_spec(2, 3, N, P), GraphFormat::csv);
  CHECK(csv.rfind("state,next\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
  CHECK(csv.find("0111,1001\n") != std::string::npos);
}

TEST_CASE("fingerprints") {
  const auto np = new_spec(2, 3, N, P);
  CHECK(functional_graph_fingerprint(np) == functional_graph_fingerprint(np));
  CHECK(functional_graph_fingerprint(np) == functional_graph_fingerprint(new_spec(2, 3, N, P, Combiner::conjunction)));
  CHECK(functional_graph_fingerprint(np) != functional_graph_fingerprint(new_spec(2, 3, P, P)));

  // Equal spectra, different state counts.
  CHECK(functional_graph_fingerprint(new_spec(3, 3, N, N)) !=
        functional_graph_fingerprint(Network(IsolatedCircuit{3, N})));
}

TEST_CASE("non-canonical arc placement gives an isomorphic graph") {
  // Move the single negative arc of a negative-positive instance inside the left circuit.
  const auto canon = new_spec(3, 4, N, P);
  for (int index : {1, 2}) {
    std::vector<Sign> arcs(7, P);
    arcs[static_cast<std::size_t>(index)] = N;
    const auto moved = DbacSpec::with_arc_signs(3, 4, Combiner::disjunction, arcs);
    CHECK(functional_graph_fingerprint(moved) == functional_graph_fingerprint(canon));
  }
}

TEST_CASE("periodic configurations") {
  CHECK(periodic_configurations(new_spec(4, 5, N, P), 1).size() == 1);
  const auto period3 = periodic_configurations(new_spec(2, 3, N, P), 3);
  CHECK(period3.size() == 4);
  // Period 6 on D_{2,3}: the lcm of {1, 3} divides 6, so every periodic state.
  CHECK(periodic_configurations(new_spec(2, 3, N, P), 6).size() == 4);
  CHECK_THROWS_AS(periodic_configurations(new_spec(2, 3, N, P), 0), Error);
}

TEST_CASE("attractor report json") {
  const auto spec = new_spec(2, 3, N, P);
  CHECK(attractor_report_json(spec, attractors(spec)) ==
        R"({"l":2,"r":3,"signs":"np","attractors":[{"period":1,"representative":"1111"},{"period":3,"representative":"0111"}]})");
}
