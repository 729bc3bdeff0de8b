#include "dbac/words.hpp"

#include <algorithm>
#include <numeric>

#include "dbac/dynamics.hpp"

namespace dbac {

namespace {

constexpr int enumeration_limit = 32;

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

void check_stride(int d) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "stride d must be at least 1");
}

}  // namespace

CircularWord::CircularWord(Bits letters) : letters_(letters) {
  if (letters.size() < 1) throw Error(ErrorCode::size_out_of_range, "circular word must be non-empty");
}

bool CircularWord::at(long i) const noexcept {
  return letters_.test(static_cast<int>(mod(i, letters_.size())));
}

BigInt lucas(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "lucas(m) needs m >= 1");
  BigInt prev = 1;  // L(1)
  BigInt cur = 3;   // L(2)
  if (m == 1) return prev;
  for (int i = 2; i < m; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt perrin(int m) {
  if (m < 0) throw Error(ErrorCode::invalid_argument, "perrin(m) needs m >= 0");
  BigInt a = 3, b = 0, c = 2;  // P(i), P(i+1), P(i+2)
  for (int i = 0; i < m; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return a;
}

bool admissible_negpos(const CircularWord& w, int d) {
  check_stride(d);
  for (long i = 0; i < w.length(); ++i) {
    if (!w.at(i) && !w.at(i + d)) return false;
  }
  return true;
}

bool admissible_negneg(const CircularWord& w, int d) {
  check_stride(d);
  for (long i = 0; i < w.length(); ++i) {
    if (!w.at(i) && !w.at(i + d)) return false;
    if (w.at(i) && w.at(i + d) && w.at(i + 2L * d)) return false;
  }
  return true;
}

InterlockDecomposition interlock_decompose(const CircularWord& w, int d) {
  check_stride(d);
  const int p = w.length();
  const int parts = std::gcd(d, p);
  const int part_length = p / parts;
  InterlockDecomposition out;
  out.stride = d;
  for (int j = 0; j < parts; ++j) {
    Bits letters = Bits::zeros(part_length);
    for (int i = 0; i < part_length; ++i) letters.set(i, w.at(j + static_cast<long>(i) * d));
    out.parts.emplace_back(letters);
  }
  return out;
}

CircularWord interlock_compose(const std::vector<CircularWord>& parts, int d, int p) {
  check_stride(d);
  if (p < 1) throw Error(ErrorCode::invalid_argument, "word length must be positive");
  const int expected_parts = std::gcd(d, p);
  const int part_length = p / expected_parts;
  if (static_cast<int>(parts.size()) != expected_parts) {
    throw Error(ErrorCode::mismatched_parts, "expected " + std::to_string(expected_parts) + " parts");
  }
  Bits letters = Bits::zeros(p);
  for (int j = 0; j < expected_parts; ++j) {
    const auto& part = parts[static_cast<std::size_t>(j)];
    if (part.length() != part_length) {
      throw Error(ErrorCode::mismatched_parts, "part " + std::to_string(j) + " has length " +
                                                   std::to_string(part.length()));
    }
    for (int i = 0; i < part_length; ++i) {
      letters.set(static_cast<int>(mod(j + static_cast<long>(i) * d, p)), part.at(i));
    }
  }
  return CircularWord(letters);
}

namespace {

Configuration unroll(const CircularWord& w, int l, int r) {
  const int n = l + r - 1;
  Bits bits = Bits::zeros(n);
  bits.set(0, w.at(0));
  for (int i = 1; i < l; ++i) bits.set(i, w.at(-i));
  for (int j = 1; j < r; ++j) bits.set(l + j - 1, w.at(-j));
  return Configuration(l, r, bits);
}

}  // namespace

Configuration word_to_configuration(const CircularWord& w, int l, int r) {
  if (l < 2 || r < 2) throw Error(ErrorCode::size_out_of_range, "side sizes must be at least 2");
  if (r % w.length() != 0) {
    throw Error(ErrorCode::invalid_argument, "word length " + std::to_string(w.length()) +
                                                 " does not divide r = " + std::to_string(r));
  }
  return unroll(w, l, r);
}

Configuration word_to_configuration(const DbacSpec& spec, const CircularWord& w) {
  const int p = w.length();
  const bool left_neg = spec.left_sign() == Sign::negative;
  const bool right_neg = spec.right_sign() == Sign::negative;
  bool ok = true;
  if (left_neg && !right_neg) {
    ok = spec.r() % p == 0;
  } else if (!left_neg && right_neg) {
    ok = spec.l() % p == 0;
  } else if (left_neg && right_neg) {
    ok = (spec.l() + spec.r()) % p == 0;
  } else {
    ok = spec.l() % p == 0 && spec.r() % p == 0;
  }
  if (!ok) {
    throw Error(ErrorCode::invalid_argument,
                "word length " + std::to_string(p) + " is not a possible period of this instance");
  }
  return unroll(w, spec.l(), spec.r());
}

CircularWord configuration_to_word(const DbacSpec& spec, const Configuration& x, int p) {
  if (p < 1 || p > Bits::max_size) throw Error(ErrorCode::invalid_argument, "bad period");
  const Network net(spec);
  Bits letters = Bits::zeros(p);
  std::uint64_t y = x.bits().word();
  for (int i = 0; i < p; ++i) {
    letters.set(i, y & 1u);
    y = net.step(y);
  }
  if (y != x.bits().word()) {
    throw Error(ErrorCode::not_periodic, x.to_string() + " does not have period " + std::to_string(p));
  }
  return CircularWord(letters);
}

std::vector<CircularWord> enumerate_admissible(int p, int d, WordMode mode) {
  if (p < 1 || p > enumeration_limit) {
    throw Error(ErrorCode::size_out_of_range, "word length must be in [1, 32]");
  }
  check_stride(d);
  std::vector<std::pair<std::uint64_t, CircularWord>> found;
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << p); ++word) {
    const CircularWord w(Bits(word, p));
    const bool ok = mode == WordMode::negpos ? admissible_negpos(w, d) : admissible_negneg(w, d);
    if (ok) found.emplace_back(w.letters().lex_key(), w);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CircularWord> out;
  out.reserve(found.size());
  for (auto& [key, w] : found) out.push_back(w);
  return out;
}

std::uint64_t count_admissible(int p, int d, WordMode mode) {
  if (p < 1 || p > enumeration_limit) {
    throw Error(ErrorCode::size_out_of_range, "word length must be in [1, 32]");
  }
  check_stride(d);
  std::uint64_t count = 0;
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << p); ++word) {
    const CircularWord w(Bits(word, p));
    count += mode == WordMode::negpos ? admissible_negpos(w, d) : admissible_negneg(w, d);
  }
  return count;
}

}  // namespace dbac
