#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dbac {

// Fixed-width bit string of at most 64 positions. Position 0 prints leftmost.
class Bits {
 public:
  static constexpr int max_size = 64;

  Bits() = default;
  Bits(std::uint64_t word, int size);

  static Bits zeros(int size) { return Bits(0, size); }
  static Bits ones(int size);
  static Bits parse(std::string_view text);

  int size() const noexcept { return size_; }
  std::uint64_t word() const noexcept { return word_; }
  bool test(int i) const noexcept { return (word_ >> i) & 1u; }
  void set(int i, bool value) noexcept;

  std::string to_string() const;

  // Integer whose numeric order is the lexicographic order of to_string().
  std::uint64_t lex_key() const noexcept;

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::uint64_t word_ = 0;
  int size_ = 0;
};

inline std::uint64_t low_mask(int size) {
  return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

// Reverses the low `size` bits of `word`.
std::uint64_t reverse_bits(std::uint64_t word, int size) noexcept;

}  // namespace dbac
