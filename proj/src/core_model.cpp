#include "dbac/core_model.hpp"

#include "json.hpp"

namespace dbac {

namespace {

void check_sizes(int l, int r) {
  if (l < 2 || r < 2) {
    throw Error(ErrorCode::size_out_of_range,
                "side sizes must be at least 2 (got l=" + std::to_string(l) +
                    ", r=" + std::to_string(r) + ")");
  }
}

const char* sign_word(Sign s) { return s == Sign::positive ? "pos" : "neg"; }

Sign parse_sign_word(const std::string& s) {
  if (s == "pos") return Sign::positive;
  if (s == "neg") return Sign::negative;
  throw Error(ErrorCode::invalid_argument, "sign must be pos or neg, got " + s);
}

std::vector<Sign> canonical_arcs(int n, Sign left, Sign right) {
  std::vector<Sign> out(static_cast<std::size_t>(n + 1), Sign::positive);
  out.front() = left;
  out.back() = right;
  return out;
}

}  // namespace

Sign sign_of_parity(int negative_arcs) noexcept {
  return negative_arcs % 2 == 0 ? Sign::positive : Sign::negative;
}

Sign flip(Sign s) noexcept { return s == Sign::positive ? Sign::negative : Sign::positive; }

std::string sign_code(Sign left, Sign right) {
  std::string code;
  code += left == Sign::positive ? 'p' : 'n';
  code += right == Sign::positive ? 'p' : 'n';
  return code;
}

std::pair<Sign, Sign> parse_sign_code(std::string_view code) {
  auto letter = [&](char c) {
    if (c == 'p') return Sign::positive;
    if (c == 'n') return Sign::negative;
    throw Error(ErrorCode::invalid_argument, "sign code must be two of p/n, got " + std::string(code));
  };
  if (code.size() != 2) {
    throw Error(ErrorCode::invalid_argument, "sign code must be two of p/n, got " + std::string(code));
  }
  return {letter(code[0]), letter(code[1])};
}

DbacSpec::DbacSpec(int l, int r, Sign left, Sign right, Combiner star)
    : l_(l), r_(r), left_(left), right_(right), star_(star) {
  check_sizes(l, r);
}

DbacSpec DbacSpec::with_arc_signs(int l, int r, Combiner star, std::vector<Sign> arc_signs) {
  check_sizes(l, r);
  const int n = l + r - 1;
  if (static_cast<int>(arc_signs.size()) != n + 1) {
    throw Error(ErrorCode::malformed_arc_list, "expected " + std::to_string(n + 1) + " arc signs, got " +
                                                   std::to_string(arc_signs.size()));
  }
  int left_neg = arc_signs[0] == Sign::negative ? 1 : 0;
  int right_neg = arc_signs[static_cast<std::size_t>(n)] == Sign::negative ? 1 : 0;
  for (int i = 1; i < n; ++i) {
    if (arc_signs[static_cast<std::size_t>(i)] != Sign::negative) continue;
    if (i < l) {
      ++left_neg;
    } else {
      ++right_neg;
    }
  }
  DbacSpec spec(l, r, sign_of_parity(left_neg), sign_of_parity(right_neg), star);
  spec.arc_signs_ = std::move(arc_signs);
  return spec;
}

std::vector<Sign> DbacSpec::effective_arc_signs() const {
  if (arc_signs_) return *arc_signs_;
  return canonical_arcs(n(), left_, right_);
}

bool DbacSpec::is_canonical() const {
  if (star_ != Combiner::disjunction) return false;
  return !arc_signs_ || *arc_signs_ == canonical_arcs(n(), left_, right_);
}

DbacSpec new_spec(int l, int r, Sign left, Sign right, Combiner star) {
  return DbacSpec(l, r, left, right, star);
}

DbacSpec canonicalize(const DbacSpec& spec) {
  return DbacSpec(spec.l(), spec.r(), spec.left_sign(), spec.right_sign(), Combiner::disjunction);
}

std::string to_json(const DbacSpec& spec) {
  nlohmann::ordered_json j;
  j["l"] = spec.l();
  j["r"] = spec.r();
  j["left_sign"] = sign_word(spec.left_sign());
  j["right_sign"] = sign_word(spec.right_sign());
  j["star"] = spec.star() == Combiner::disjunction ? "or" : "and";
  return j.dump();
}

DbacSpec spec_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const std::string star = j.at("star").get<std::string>();
    if (star != "or" && star != "and") {
      throw Error(ErrorCode::invalid_argument, "star must be or/and, got " + star);
    }
    return DbacSpec(j.at("l").get<int>(), j.at("r").get<int>(),
                    parse_sign_word(j.at("left_sign").get<std::string>()),
                    parse_sign_word(j.at("right_sign").get<std::string>()),
                    star == "or" ? Combiner::disjunction : Combiner::conjunction);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("bad spec json: ") + e.what());
  }
}

Configuration::Configuration(const DbacSpec& spec, std::uint64_t word)
    : l_(spec.l()), r_(spec.r()), bits_(word, spec.n()) {}

Configuration::Configuration(int l, int r, Bits bits) : l_(l), r_(r), bits_(bits) {
  if (bits.size() != l + r - 1) {
    throw Error(ErrorCode::size_out_of_range, "configuration length does not match l + r - 1");
  }
}

Bits left_projection(const Configuration& x) { return Bits(x.bits().word(), x.l()); }

Bits right_projection(const Configuration& x) {
  Bits out = Bits::zeros(x.r());
  out.set(0, x.node(0));
  for (int j = 1; j < x.r(); ++j) out.set(j, x.node(x.l() + j - 1));
  return out;
}

}  // namespace dbac
