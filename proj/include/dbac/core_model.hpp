#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dbac/bits.hpp"
#include "dbac/error.hpp"

namespace dbac {

enum class Sign { positive, negative };

// Combiner applied at node 0 to its two (possibly negated) inputs.
enum class Combiner { disjunction, conjunction };

Sign sign_of_parity(int negative_arcs) noexcept;
Sign flip(Sign s) noexcept;

// Two-letter sign code, left side first: "pp", "np", "pn" or "nn".
std::string sign_code(Sign left, Sign right);
std::pair<Sign, Sign> parse_sign_code(std::string_view code);

// A double Boolean automata circuit D_{l,r}.
//
// Nodes 0..l-1 form the left circuit; node 0 together with l..n-1 forms the
// right circuit, n = l + r - 1. Node i (i not in {0, l}) reads node i-1,
// node l reads node 0, and node 0 reads l-1 and n-1.
//
// Arc signs, when present, hold n + 1 entries:
//   index 0       arc (l-1, 0)
//   index i<n     arc entering node i
//   index n       arc (n-1, 0)
// Without explicit arc signs the instance has canonical arcs: the only
// possibly negative arcs are (l-1, 0) and (n-1, 0).
class DbacSpec {
 public:
  DbacSpec(int l, int r, Sign left, Sign right, Combiner star);

  // Instance with arbitrary arc signs; side signs are derived from parity.
  static DbacSpec with_arc_signs(int l, int r, Combiner star, std::vector<Sign> arc_signs);

  int l() const noexcept { return l_; }
  int r() const noexcept { return r_; }
  int n() const noexcept { return l_ + r_ - 1; }
  int arc_count() const noexcept { return n() + 1; }
  Sign left_sign() const noexcept { return left_; }
  Sign right_sign() const noexcept { return right_; }
  Combiner star() const noexcept { return star_; }
  const std::optional<std::vector<Sign>>& arc_signs() const noexcept { return arc_signs_; }

  // Sign of each arc under the index convention above.
  std::vector<Sign> effective_arc_signs() const;

  bool is_canonical() const;
  std::string signs() const { return sign_code(left_, right_); }

  friend bool operator==(const DbacSpec&, const DbacSpec&) = default;

 private:
  int l_;
  int r_;
  Sign left_;
  Sign right_;
  Combiner star_;
  std::optional<std::vector<Sign>> arc_signs_;
};

DbacSpec new_spec(int l, int r, Sign left, Sign right, Combiner star = Combiner::disjunction);

// Canonical spec with star = disjunction and side signs equal to the
// negative-arc parities of the input.
DbacSpec canonicalize(const DbacSpec& spec);

// {"l":int,"r":int,"left_sign":"pos|neg","right_sign":"pos|neg","star":"or|and"}
std::string to_json(const DbacSpec& spec);
DbacSpec spec_from_json(std::string_view text);

class Configuration {
 public:
  Configuration(const DbacSpec& spec, std::uint64_t word);
  Configuration(int l, int r, Bits bits);

  int l() const noexcept { return l_; }
  int r() const noexcept { return r_; }
  int n() const noexcept { return bits_.size(); }
  const Bits& bits() const noexcept { return bits_; }
  bool node(int i) const noexcept { return bits_.test(i); }
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int l_;
  int r_;
  Bits bits_;
};

// x^L = (x_0 .. x_{l-1})
Bits left_projection(const Configuration& x);
// x^R = (x_0, x_l .. x_{n-1})
Bits right_projection(const Configuration& x);

}  // namespace dbac
