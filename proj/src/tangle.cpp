#include "lug/tangle.hpp"

#include <cctype>
#include <cstdlib>
#include <memory>
#include <sstream>

#include "lug/error.hpp"

namespace lug {

bool PseudoTangleWord::fully_resolved() const noexcept {
  for (const auto& s : syllables)
    if (s.unresolved != 0) return false;
  return true;
}

bool PseudoTangleWord::fully_unresolved() const noexcept {
  for (const auto& s : syllables)
    if (s.net != 0) return false;
  return true;
}

int PseudoTangleWord::crossing_count() const noexcept {
  int total = 0;
  for (const auto& s : syllables) total += s.size();
  return total;
}

PseudoTangleWord PseudoTangleWord::from_nets(std::span<const int> nets) {
  PseudoTangleWord w;
  for (int n : nets) w.syllables.push_back({n, 0});
  return w;
}

PseudoTangleWord PseudoTangleWord::shadow_of_sizes(std::span<const int> sizes) {
  PseudoTangleWord w;
  for (int n : sizes) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "syllable size must be nonnegative");
    w.syllables.push_back({0, n});
  }
  return w;
}

std::vector<int> PseudoTangleWord::nets() const {
  std::vector<int> out;
  out.reserve(syllables.size());
  for (const auto& s : syllables) out.push_back(s.net);
  return out;
}

std::vector<int> PseudoTangleWord::sizes() const {
  std::vector<int> out;
  out.reserve(syllables.size());
  for (const auto& s : syllables) out.push_back(s.size());
  return out;
}

PseudoTangleWord shadow_word(const PseudoTangleWord& word) {
  PseudoTangleWord out;
  for (const auto& s : word.syllables) out.syllables.push_back({0, s.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Grammar: '(' item (',' item)* ')', item := int | int '(' uint ')' | '(' uint ')'

namespace {

class WordParser {
public:
  explicit WordParser(std::string_view text) : text_(text) {}

  PseudoTangleWord parse() {
    PseudoTangleWord word;
    expect('(');
    word.syllables.push_back(item());
    while (peek() == ',') {
      ++pos_;
      word.syllables.push_back(item());
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return word;
  }

private:
  Syllable item() {
    Syllable s;
    if (peek() == '(') {
      ++pos_;
      s.unresolved = unsigned_count();
      expect(')');
      return s;
    }
    s.net = signed_int();
    if (peek() == '(') {
      ++pos_;
      s.unresolved = unsigned_count();
      expect(')');
    }
    return s;
  }

  int signed_int() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const long v = digits();
    return static_cast<int>(negative ? -v : v);
  }

  int unsigned_count() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative unresolved count");
    if (pos_ < text_.size() && text_[pos_] == '+') ++pos_;
    return static_cast<int>(digits());
  }

  long digits() {
    skip_ws();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::Syntax, "word syntax error at position " + std::to_string(pos_) + ": " + what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PseudoTangleWord parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string render_word(const PseudoTangleWord& word, std::span<const bool> starred) {
  std::ostringstream out;
  out << '(';
  if (word.syllables.empty()) out << '0';
  for (std::size_t i = 0; i < word.syllables.size(); ++i) {
    const auto& s = word.syllables[i];
    if (i) out << ',';
    if (s.unresolved == 0)
      out << s.net;
    else if (s.net == 0)
      out << '(' << s.unresolved << ')';
    else
      out << s.net << '(' << s.unresolved << ')';
    if (i < starred.size() && starred[i]) out << '*';
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------

const char* to_string(SyllableKind kind) noexcept { return kind == SyllableKind::SI ? "SI" : "NSI"; }

std::vector<SyllableKind> classify_syllables(const PseudoTangleWord& word) {
  const auto n = word.syllables.size();
  std::vector<SyllableKind> kinds(n, SyllableKind::NSI);
  auto even = [&](std::size_t i) { return word.syllables[i].size() % 2 == 0; };
  for (std::size_t i = 1; i < n; ++i) {
    if (i == 1) {
      kinds[1] = even(0) ? SyllableKind::SI : SyllableKind::NSI;
    } else if (kinds[i - 1] == SyllableKind::SI) {
      kinds[i] = SyllableKind::NSI;
    } else if (kinds[i - 2] == SyllableKind::SI) {
      kinds[i] = even(i - 1) ? SyllableKind::SI : SyllableKind::NSI;
    } else {
      kinds[i] = even(i - 1) ? SyllableKind::NSI : SyllableKind::SI;
    }
  }
  return kinds;
}

IntersectionCounts count_intersections(const PseudoTangleWord& word) {
  IntersectionCounts counts;
  const auto kinds = classify_syllables(word);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    (kinds[i] == SyllableKind::SI ? counts.si : counts.nsi) += word.syllables[i].size();
  }
  return counts;
}

// ---------------------------------------------------------------------------

const char* to_string(BlockTag tag) noexcept {
  switch (tag) {
    case BlockTag::SingleEven: return "single-even";
    case BlockTag::TwoOdd: return "two-odd";
    case BlockTag::OddEvensOdd: return "odd-evens-odd";
    case BlockTag::FinalSingleOdd: return "final-single-odd";
    case BlockTag::FinalOddEvens: return "final-odd-evens";
    case BlockTag::IsolatedSi: return "isolated-si";
  }
  return "?";
}

std::vector<bool> Decomposition::starred(std::size_t length) const {
  std::vector<bool> stars(length, false);
  for (const auto& b : blocks)
    if (b.is_si())
      for (int i : b.syllables) stars[static_cast<std::size_t>(i)] = true;
  return stars;
}

namespace {

std::optional<BlockTag> tag_nsi_string(const PseudoTangleWord& word, const std::vector<int>& run, bool final,
                                       bool odd_nsi_total) {
  auto odd = [&](int i) { return word.syllables[static_cast<std::size_t>(i)].size() % 2 != 0; };
  const std::size_t len = run.size();
  bool middles_even = true;
  for (std::size_t k = 1; k + 1 < len; ++k) middles_even = middles_even && !odd(run[k]);

  if (!final || !odd_nsi_total) {
    if (len == 1 && !odd(run[0])) return BlockTag::SingleEven;
    if (len == 2 && odd(run[0]) && odd(run[1])) return BlockTag::TwoOdd;
    if (len >= 3 && odd(run.front()) && odd(run.back()) && middles_even) return BlockTag::OddEvensOdd;
    return std::nullopt;
  }
  bool rest_even = true;
  for (std::size_t k = 1; k < len; ++k) rest_even = rest_even && !odd(run[k]);
  if (len == 1 && odd(run[0])) return BlockTag::FinalSingleOdd;
  if (len >= 2 && odd(run[0]) && rest_even) return BlockTag::FinalOddEvens;
  return std::nullopt;
}

}  // namespace

Decomposition decompose_word(const PseudoTangleWord& word) {
  if (word.syllables.empty()) throw Error(ErrorCode::InvalidArgument, "cannot decompose an empty word");
  const auto kinds = classify_syllables(word);
  const auto counts = count_intersections(word);

  Decomposition d;
  std::vector<std::vector<int>> runs;  // NSI strings, interleaved with SI markers below
  std::vector<int> current;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == SyllableKind::NSI) {
      current.push_back(static_cast<int>(i));
      continue;
    }
    if (current.empty()) throw Error(ErrorCode::ContractViolation, "adjacent SI syllables in classification");
    d.blocks.push_back({BlockTag::SingleEven, current});  // tagged below
    current.clear();
    d.blocks.push_back({BlockTag::IsolatedSi, {static_cast<int>(i)}});
  }
  if (!current.empty()) d.blocks.push_back({BlockTag::SingleEven, current});

  std::size_t last_nsi = 0;
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    if (!d.blocks[b].is_si()) last_nsi = b;

  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    auto& block = d.blocks[b];
    if (block.is_si()) continue;
    const auto tag = tag_nsi_string(word, block.syllables, b == last_nsi, counts.nsi % 2 != 0);
    if (!tag) {
      throw Error(ErrorCode::ContractViolation,
                  "decomposition taxonomy violated at block starting with syllable " +
                      std::to_string(block.syllables.front() + 1) + " of " + render_word(word));
    }
    block.tag = *tag;
  }
  return d;
}

std::string render_decomposition(const PseudoTangleWord& word, const Decomposition& decomposition) {
  const auto stars = decomposition.starred(word.syllables.size());
  const std::unique_ptr<bool[]> flags(new bool[stars.size() + 1]);
  for (std::size_t i = 0; i < stars.size(); ++i) flags[i] = stars[i];
  return render_word(word, std::span<const bool>(flags.get(), stars.size()));
}

// ---------------------------------------------------------------------------

namespace {

bool zero_at(const PseudoTangleWord& w, std::size_t i) { return i < w.syllables.size() && w.syllables[i].is_zero(); }

bool resolved_net(const PseudoTangleWord& w, std::size_t i, int net) {
  return i < w.syllables.size() && w.syllables[i].unresolved == 0 && w.syllables[i].net == net;
}

}  // namespace

std::optional<PseudoTangleWord> apply_statement(const PseudoTangleWord& word, TangleStatement statement,
                                                std::size_t position) {
  const auto n = word.syllables.size();
  PseudoTangleWord out = word;
  auto& s = out.syllables;
  switch (statement) {
    case TangleStatement::S0:
      if (n < 2 || position != n - 1 || !zero_at(word, position)) return std::nullopt;
      s.pop_back();
      return out;
    case TangleStatement::S1: {
      if (position == 0 || position + 1 >= n || !zero_at(word, position)) return std::nullopt;
      auto& left = s[position - 1];
      const auto& right = s[position + 1];
      left.net += right.net;
      left.unresolved += right.unresolved;
      s.erase(s.begin() + static_cast<long>(position), s.begin() + static_cast<long>(position) + 2);
      return out;
    }
    case TangleStatement::S2:
      if (position + 2 >= n || !zero_at(word, position) || !zero_at(word, position + 1)) return std::nullopt;
      s.erase(s.begin() + static_cast<long>(position), s.begin() + static_cast<long>(position) + 2);
      return out;
    case TangleStatement::S3:
      if (position != 0 || n < 2 || !zero_at(word, 0) || s[1].unresolved != 0 || s[1].net == 0) return std::nullopt;
      s[1].net += s[1].net > 0 ? -1 : 1;
      return out;
    case TangleStatement::S4:
    case TangleStatement::S5: {
      const int lead = statement == TangleStatement::S4 ? 1 : -1;
      if (position != 0 || n < 2 || !resolved_net(word, 0, lead) || s[1].unresolved != 0) return std::nullopt;
      s[1].net += lead;
      s.erase(s.begin());
      return out;
    }
  }
  return std::nullopt;
}

Reduction reduce_word_traced(const PseudoTangleWord& word) {
  Reduction r{word, {}};
  if (r.result.syllables.empty()) r.result.syllables.push_back({0, 0});
  const bool resolved = r.result.fully_resolved();
  const TangleStatement later[] = {TangleStatement::S1, TangleStatement::S2, TangleStatement::S3,
                                   TangleStatement::S4, TangleStatement::S5};
  for (;;) {
    const auto n = r.result.syllables.size();
    if (auto next = apply_statement(r.result, TangleStatement::S0, n - 1)) {
      r.steps.push_back({TangleStatement::S0, n - 1});
      r.result = std::move(*next);
      continue;
    }
    bool applied = false;
    for (std::size_t pos = 0; pos < n && !applied; ++pos) {
      for (auto st : later) {
        if (!resolved && (st == TangleStatement::S3 || st == TangleStatement::S4 || st == TangleStatement::S5))
          continue;
        if (auto next = apply_statement(r.result, st, pos)) {
          r.steps.push_back({st, pos});
          r.result = std::move(*next);
          applied = true;
          break;
        }
      }
    }
    if (!applied) return r;
  }
}

PseudoTangleWord reduce_word(const PseudoTangleWord& word) { return reduce_word_traced(word).result; }

TangleFraction tangle_fraction(const PseudoTangleWord& word) {
  if (!word.fully_resolved()) throw Error(ErrorCode::InvalidArgument, "tangle fraction needs a fully resolved word");
  TangleFraction f = TangleFraction::infinity();
  for (std::size_t i = 0; i < word.syllables.size(); ++i) {
    const int net = word.syllables[i].net;
    f = is_bottom_twist(i) ? f.bottom_twist(net) : f.right_twist(net);
  }
  return f;
}

// ---------------------------------------------------------------------------

const char* to_string(ClosureKind kind) noexcept { return kind == ClosureKind::Numerator ? "numerator" : "denominator"; }

const char* to_string(EndpointPairing pairing) noexcept {
  switch (pairing) {
    case EndpointPairing::TopBottom: return "top-bottom";
    case EndpointPairing::LeftRight: return "left-right";
    case EndpointPairing::Diagonal: return "diagonal";
  }
  return "?";
}

std::optional<ClosureKind> parse_closure(std::string_view text) {
  if (text == "numerator" || text == "N" || text == "n") return ClosureKind::Numerator;
  if (text == "denominator" || text == "D" || text == "d") return ClosureKind::Denominator;
  return std::nullopt;
}

ClosureInfo closure_components(const PseudoTangleWord& word) {
  // The tangle (0) is two vertical strands: NW-SW and NE-SE.
  auto pairing = EndpointPairing::LeftRight;
  for (std::size_t i = 0; i < word.syllables.size(); ++i) {
    if (word.syllables[i].size() % 2 == 0) continue;
    if (is_bottom_twist(i)) {
      // swaps SW and SE
      if (pairing == EndpointPairing::LeftRight)
        pairing = EndpointPairing::Diagonal;
      else if (pairing == EndpointPairing::Diagonal)
        pairing = EndpointPairing::LeftRight;
    } else {
      // swaps NE and SE
      if (pairing == EndpointPairing::TopBottom)
        pairing = EndpointPairing::Diagonal;
      else if (pairing == EndpointPairing::Diagonal)
        pairing = EndpointPairing::TopBottom;
    }
  }
  ClosureInfo info{pairing, std::nullopt};
  if (pairing == EndpointPairing::TopBottom) info.two_component = ClosureKind::Numerator;
  if (pairing == EndpointPairing::LeftRight) info.two_component = ClosureKind::Denominator;
  return info;
}

Verdict rational_splittability(const PseudoTangleWord& word) {
  if (!word.fully_resolved())
    throw Error(ErrorCode::InvalidArgument, "rational splittability needs a fully resolved word");
  if (!closure_components(word).two_component)
    throw Error(ErrorCode::InvalidArgument, "word " + render_word(word) + " has no two-component closure");
  Verdict v;
  v.fraction = tangle_fraction(word);
  v.kind = (v.fraction->is_zero() || v.fraction->is_infinite()) ? VerdictKind::Splittable : VerdictKind::Unsplittable;
  return v;
}

}  // namespace lug
