#include "dbac/bits.hpp"

#include "dbac/error.hpp"

namespace dbac {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::size_out_of_range: return "size-out-of-range";
    case ErrorCode::malformed_arc_list: return "malformed-arc-list";
    case ErrorCode::state_space_too_large: return "state-space-too-large";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::not_periodic: return "not-periodic";
    case ErrorCode::mismatched_parts: return "mismatched-parts";
    case ErrorCode::inadmissible_context: return "inadmissible-context";
    case ErrorCode::unsupported_sign_combo: return "unsupported-sign-combo";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

Bits::Bits(std::uint64_t word, int size) : word_(word & low_mask(size)), size_(size) {
  if (size < 0 || size > max_size) {
    throw Error(ErrorCode::size_out_of_range, "bit string length " + std::to_string(size));
  }
}

Bits Bits::ones(int size) { return Bits(low_mask(size), size); }

Bits Bits::parse(std::string_view text) {
  if (text.size() > max_size) {
    throw Error(ErrorCode::size_out_of_range, "bit string longer than 64");
  }
  Bits out(0, static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw Error(ErrorCode::invalid_argument, "not a bit string: " + std::string(text));
    }
    out.set(static_cast<int>(i), text[i] == '1');
  }
  return out;
}

void Bits::set(int i, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << i;
  word_ = value ? (word_ | bit) : (word_ & ~bit);
}

std::string Bits::to_string() const {
  std::string s(static_cast<std::size_t>(size_), '0');
  for (int i = 0; i < size_; ++i) {
    if (test(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::uint64_t Bits::lex_key() const noexcept { return reverse_bits(word_, size_); }

std::uint64_t reverse_bits(std::uint64_t word, int size) noexcept {
  std::uint64_t out = 0;
  for (int i = 0; i < size; ++i) {
    out = (out << 1) | ((word >> i) & 1u);
  }
  return out;
}

}  // namespace dbac
