#pragma once

#include <vector>

#include "dbac/bigint.hpp"
#include "dbac/bits.hpp"
#include "dbac/core_model.hpp"

namespace dbac {

// Circular binary word; all index arithmetic is modulo its length.
class CircularWord {
 public:
  CircularWord() = default;
  explicit CircularWord(Bits letters);
  static CircularWord parse(std::string_view text) { return CircularWord(Bits::parse(text)); }

  int length() const noexcept { return letters_.size(); }
  bool at(long i) const noexcept;
  const Bits& letters() const noexcept { return letters_; }
  std::string to_string() const { return letters_.to_string(); }

  friend bool operator==(const CircularWord&, const CircularWord&) = default;

 private:
  Bits letters_;
};

// Lucas numbers L(1)=1, L(2)=3: circular words of length m with no cyclic 00.
BigInt lucas(int m);

// Perrin numbers P(0)=3, P(1)=0, P(2)=2: circular words avoiding 00 and 111.
BigInt perrin(int m);

// No i with w_i = w_{i+d} = 0.
bool admissible_negpos(const CircularWord& w, int d);

// No i with w_i = w_{i+d} = 0 and no i with w_i = w_{i+d} = w_{i+2d} = 1.
bool admissible_negneg(const CircularWord& w, int d);

// gcd(d, p) strided sub-words of length p / gcd(d, p); part j holds
// w_j, w_{j+d}, w_{j+2d}, ...
struct InterlockDecomposition {
  std::vector<CircularWord> parts;
  int stride = 1;
};

InterlockDecomposition interlock_decompose(const CircularWord& w, int d);
CircularWord interlock_compose(const std::vector<CircularWord>& parts, int d, int p);

// Periodic configuration whose node-0 trajectory is w: w_i = x_0(t+i).
// A node at distance j from node 0 along its circuit holds x_0(t-j) = w_{-j}.
// The (l, r) overload is the negative-positive contract and requires p | r;
// the spec overload checks p against the sign combination.
Configuration word_to_configuration(const CircularWord& w, int l, int r);
Configuration word_to_configuration(const DbacSpec& spec, const CircularWord& w);

// w_i = node 0 of F^i(x), i < p. Throws not_periodic unless F^p(x) = x.
CircularWord configuration_to_word(const DbacSpec& spec, const Configuration& x, int p);

// Every word of length p accepted by the predicate, in increasing order of
// their bit strings.
enum class WordMode { negpos, negneg };
std::vector<CircularWord> enumerate_admissible(int p, int d, WordMode mode);
std::uint64_t count_admissible(int p, int d, WordMode mode);

}  // namespace dbac
