#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "dbac/counting.hpp"
#include "dbac/dynamics.hpp"
#include "dbac/words.hpp"

using namespace dbac;

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

// Independent oracle: count strings of length m whose cyclic reading avoids
// every pattern in `forbidden`.
std::uint64_t count_circular_strings(int m, const std::vector<std::string>& forbidden) {
  std::uint64_t count = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) {
    std::string s;
    for (int i = 0; i < m; ++i) s += ((w >> i) & 1u) ? '1' : '0';
    std::string unrolled;
    while (unrolled.size() < s.size() + 3) unrolled += s;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      for (const auto& f : forbidden) {
        if (unrolled.compare(static_cast<std::size_t>(i), f.size(), f) == 0) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

std::set<std::string> words_of(const DbacSpec& spec, int p) {
  std::set<std::string> out;
  for (const auto& x : periodic_configurations(spec, p)) out.insert(configuration_to_word(spec, x, p).to_string());
  return out;
}

}  // namespace

TEST_CASE("lucas values") {
  CHECK(lucas(1) == 1);
  CHECK(lucas(2) == 3);
  CHECK(lucas(3) == 4);
  CHECK(lucas(5) == 11);
  CHECK(lucas(10) == 123);
  CHECK(lucas(100).str() == "792070839848372253127");
  CHECK_THROWS_AS(lucas(0), Error);
  for (int m = 3; m <= 60; ++m) CHECK(lucas(m) == lucas(m - 1) + lucas(m - 2));
}

TEST_CASE("perrin values") {
  const int expected[] = {3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29, 39};
  for (int m = 0; m < 14; ++m) CHECK(perrin(m) == expected[m]);
  CHECK(perrin(7) == 7);
  CHECK_THROWS_AS(perrin(-1), Error);
}

TEST_CASE("sequences count circular words (independent string oracle)") {
  for (int m = 1; m <= 14; ++m) CHECK(lucas(m) == count_circular_strings(m, {"00"}));
  for (int m = 2; m <= 14; ++m) CHECK(perrin(m) == count_circular_strings(m, {"00", "111"}));
}

TEST_CASE("perrin follows the plastic number") {
  for (int m = 17; m <= 60; ++m) {
    const double value = perrin(m).convert_to<double>();
    const double dominant = std::pow(GoldenConstants::plastic, m);
    CHECK(std::abs(value - dominant) <= 2.0 * std::pow(GoldenConstants::plastic, -m / 2.0) + 1e-12 * value);
  }
  const double a = GoldenConstants::plastic;
  CHECK(std::abs(a * a * a - a - 1.0) < 1e-15);
}

TEST_CASE("admissible_negpos") {
  CHECK(admissible_negpos(CircularWord(Bits::ones(7)), 3));
  CHECK_FALSE(admissible_negpos(CircularWord::parse("011011"), 3));
  CHECK(admissible_negpos(CircularWord::parse("011011"), 1));
  CHECK(count_admissible(5, 2, WordMode::negpos) == 11);
  CHECK_THROWS_AS(admissible_negpos(CircularWord::parse("01"), 0), Error);
}

TEST_CASE("admissible_negneg") {
  CHECK_FALSE(admissible_negneg(CircularWord::parse("0110"), 1));
  CHECK(admissible_negneg(CircularWord::parse("010101"), 1));
  CHECK(admissible_negneg(CircularWord::parse("0101"), 1));
  CHECK_FALSE(admissible_negneg(CircularWord::parse("01110"), 1));
  CHECK(count_admissible(4, 1, WordMode::negneg) == 2);
}

TEST_CASE("interlock decomposition") {
  const auto w15 = CircularWord(Bits(0b101101110111011, 15));
  const auto parts = interlock_decompose(w15, 6);
  REQUIRE(parts.parts.size() == 3);
  for (const auto& part : parts.parts) CHECK(part.length() == 5);

  const auto w6 = CircularWord::parse("101100");
  const auto six = interlock_decompose(w6, 2);
  REQUIRE(six.parts.size() == 2);
  CHECK(six.parts[0].to_string() == "110");  // w0 w2 w4
  CHECK(six.parts[1].to_string() == "010");  // w1 w3 w5

  CHECK_THROWS_AS(interlock_compose({CircularWord::parse("11"), CircularWord::parse("101")}, 2, 6), Error);
  CHECK_THROWS_AS(interlock_compose({CircularWord::parse("110")}, 2, 6), Error);
}

TEST_CASE("interlock round trip (fuzzed)") {
  std::mt19937_64 rng(20101);
  for (int trial = 0; trial < 2000; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 40);
    const int d = 1 + static_cast<int>(rng() % 50);
    const CircularWord w(Bits(rng(), p));
    CHECK(interlock_compose(interlock_decompose(w, d).parts, d, p) == w);
  }
}

TEST_CASE("admissibility factors over the interlock") {
  for (int p = 1; p <= 12; ++p) {
    for (int d = 1; d < p + 2; ++d) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p); ++bits) {
        const CircularWord w(Bits(bits, p));
        const auto parts = interlock_decompose(w, d).parts;
        bool no00 = true;
        bool no00_111 = true;
        for (const auto& part : parts) {
          no00 = no00 && admissible_negpos(part, 1);
          no00_111 = no00_111 && admissible_negneg(part, 1);
        }
        REQUIRE(admissible_negpos(w, d) == no00);
        REQUIRE(admissible_negneg(w, d) == no00_111);
      }
    }
  }
}

TEST_CASE("word_to_configuration") {
  const auto x = word_to_configuration(CircularWord::parse("011"), 2, 3);
  CHECK(x.to_string() == "0111");
  CHECK(exact_period(new_spec(2, 3, N, P), x) == 3);

  CHECK(word_to_configuration(CircularWord(Bits::ones(4)), 6, 8).bits() == Bits::ones(13));
  CHECK_THROWS_AS(word_to_configuration(CircularWord::parse("01"), 2, 3), Error);

  // Nodes at distance j from node 0 hold w_{-j}, so the word is read back
  // from node 0's trajectory even for words that are not reflection-symmetric.
  const auto spec = new_spec(2, 3, N, P);
  const auto y = word_to_configuration(CircularWord::parse("101"), 2, 3);
  CHECK(y.to_string() == "1110");
  CHECK(configuration_to_word(spec, y, 3).to_string() == "101");
}

TEST_CASE("configuration_to_word") {
  const auto np = new_spec(2, 3, N, P);
  CHECK(configuration_to_word(np, Configuration(np, 0b1111), 1).to_string() == "1");
  CHECK_THROWS_AS(configuration_to_word(np, Configuration(np, 0b0000), 1), Error);

  std::set<std::string> expected;
  for (const auto& w : enumerate_admissible(3, 2, WordMode::negpos)) expected.insert(w.to_string());
  CHECK(expected.size() == 4);
  CHECK(words_of(np, 3) == expected);

  const auto nn = new_spec(2, 2, N, N);
  const auto orbit = attractors(nn);
  REQUIRE(orbit.size() == 1);
  std::set<std::string> rotations;
  for (const auto& m : orbit[0].members) {
    const auto w = configuration_to_word(nn, Configuration(2, 2, m), 4);
    CHECK(admissible_negneg(w, 2));
    rotations.insert(w.to_string());
  }
  CHECK(rotations.size() == 4);
  const std::string first = *rotations.begin();
  for (int k = 0; k < 4; ++k) {
    CHECK(rotations.count(first.substr(static_cast<std::size_t>(k)) + first.substr(0, static_cast<std::size_t>(k))) == 1);
  }
}

TEST_CASE("words map bijectively onto periodic configurations (negative-positive)") {
  for (int l = 2; l <= 7; ++l) {
    for (int r = 2; r <= 7; ++r) {
      const auto spec = new_spec(l, r, N, P);
      for (int p = 2; p <= r; ++p) {
        if (r % p != 0 || l % p == 0) continue;
        const int d = l % p;
        std::set<std::uint64_t> from_words;
        for (const auto& w : enumerate_admissible(p, d, WordMode::negpos)) {
          const auto x = word_to_configuration(w, l, r);
          CHECK(configuration_to_word(spec, x, p) == w);
          from_words.insert(x.bits().word());
        }
        std::set<std::uint64_t> periodic;
        for (const auto& x : periodic_configurations(spec, p)) periodic.insert(x.bits().word());
        CHECK(from_words == periodic);
      }
    }
  }
}

TEST_CASE("words map bijectively onto periodic configurations (doubly negative)") {
  for (int l = 2; l <= 7; ++l) {
    for (int r = 2; r <= 7; ++r) {
      const auto spec = new_spec(l, r, N, N);
      for (int p = 2; p <= l + r; ++p) {
        if ((l + r) % p != 0 || l % p == 0 || r % p == 0) continue;
        const int d = std::min(l % p, r % p);
        std::set<std::uint64_t> from_words;
        for (const auto& w : enumerate_admissible(p, d, WordMode::negneg)) {
          const auto x = word_to_configuration(spec, w);
          CHECK(configuration_to_word(spec, x, p) == w);
          from_words.insert(x.bits().word());
        }
        std::set<std::uint64_t> periodic;
        for (const auto& x : periodic_configurations(spec, p)) periodic.insert(x.bits().word());
        CHECK(from_words == periodic);
      }
    }
  }
}

TEST_CASE("period-p words depend only on d and p") {
  // p = 3, d = 2 realised by several (l, r).
  const auto reference = words_of(new_spec(2, 3, N, P), 3);
  for (auto [l, r] : {std::pair{5, 3}, std::pair{2, 6}, std::pair{5, 6}, std::pair{8, 3}}) {
    CHECK(words_of(new_spec(l, r, N, P), 3) == reference);
  }
}

TEST_CASE("word enumeration listing") {
  const auto listed = enumerate_admissible(3, 2, WordMode::negpos);
  std::vector<std::string> text;
  for (const auto& w : listed) text.push_back(w.to_string());
  CHECK(text == std::vector<std::string>{"011", "101", "110", "111"});
  CHECK(count_admissible(15, 6, WordMode::negpos) == 1331);
  CHECK_THROWS_AS(count_admissible(33, 1, WordMode::negpos), Error);
}
