#include "lug/strategy.hpp"

#include <algorithm>
#include <map>

#include "lug/error.hpp"

namespace lug {

namespace {

constexpr std::array<StrategyId, 8> kAll = {
    StrategyId::Thm1UnlinkerAlways, StrategyId::Thm1_2Second,     StrategyId::Thm2Second,
    StrategyId::Thm3Second,         StrategyId::Thm4Second,       StrategyId::Thm4First,
    StrategyId::Thm6LinkerSecond,   StrategyId::Thm6LinkerFirst,
};

int slope(CrossingState s) { return s == CrossingState::ResolvedA ? 1 : -1; }
CrossingState with_slope(int sign) { return sign > 0 ? CrossingState::ResolvedA : CrossingState::ResolvedB; }

[[noreturn]] void violation(const std::string& msg) { throw Error(ErrorCode::ContractViolation, msg); }

std::vector<int> syllable_sizes(const ShadowDiagram& d) { return d.provenance()->word.sizes(); }

int syllable_of(const ShadowDiagram& d, int c) {
  const auto& s = d.crossing(c).syllable;
  if (!s) violation("crossing " + std::to_string(c) + " has no syllable");
  return *s;
}

int unresolved_in_syllable(const ShadowDiagram& d, int syllable) {
  int n = 0;
  for (const auto& x : d.crossings())
    if (x.syllable == syllable && x.state == CrossingState::Unresolved) ++n;
  return n;
}

std::optional<int> lowest_unresolved(const ShadowDiagram& d, const auto& pred) {
  for (int c = 0; c < d.crossing_count(); ++c)
    if (d.crossing(c).state == CrossingState::Unresolved && pred(c)) return c;
  return std::nullopt;
}

std::optional<int> lowest_in_syllable(const ShadowDiagram& d, int syllable) {
  return lowest_unresolved(d, [&](int c) { return d.crossing(c).syllable == syllable; });
}

std::optional<int> lowest_of_kind(const ShadowDiagram& d, SyllableKind kind) {
  return lowest_unresolved(d, [&](int c) { return classify_crossing(d, c) == kind; });
}

Move region_response(const GameState& state, const Move& last, bool cancel) {
  const auto& d = state.diagram;
  const auto region = region_crossings(d, last.crossing);
  std::optional<int> target;
  for (int c : region)
    if (d.crossing(c).state == CrossingState::Unresolved) {
      target = c;
      break;
    }
  if (!target)
    throw Error(ErrorCode::Inapplicable,
                "no unresolved crossing left in the region of crossing " + std::to_string(last.crossing));
  const int want = cancel ? -region_sign(d, region, last.crossing, last.resolution)
                          : region_sign(d, region, last.crossing, last.resolution);
  const auto st = region_sign(d, region, *target, CrossingState::ResolvedA) == want ? CrossingState::ResolvedA
                                                                                     : CrossingState::ResolvedB;
  return {*target, st};
}

std::string region_label(const ShadowDiagram& d, int crossing) {
  if (d.provenance()) return "syllable " + std::to_string(syllable_of(d, crossing) + 1);
  const auto regions = twist_regions(d);
  for (std::size_t i = 0; i < regions.size(); ++i)
    for (int c : regions[i].crossings)
      if (c == crossing) return "region " + std::to_string(i + 1);
  return "region ?";
}

StrategyChoice choice(Move m, const StrategyMemory& mem, std::string why) { return {m, mem, std::move(why)}; }

StrategyChoice r2_choice(const GameState& s, const Move& last, const StrategyMemory& mem) {
  return choice(r2_response(s, last), mem, "R2 response in " + region_label(s.diagram, last.crossing));
}

StrategyChoice anti_r2_choice(const GameState& s, const Move& last, const StrategyMemory& mem) {
  return choice(anti_r2_response(s, last), mem, "anti-R2 response in " + region_label(s.diagram, last.crossing));
}

// R2 everywhere; a Linker turns the final pair of the designated syllable into a clasp.
StrategyChoice single_even_policy(const GameState& s, const Move& last, const StrategyMemory& mem, Role mode,
                                  int designated) {
  const int j = syllable_of(s.diagram, last.crossing);
  if (mode == Role::Linker && j == designated && unresolved_in_syllable(s.diagram, j) == 1)
    return anti_r2_choice(s, last, mem);
  return r2_choice(s, last, mem);
}

// Odd end syllables e1, e2 with even syllables between them.
StrategyChoice ends_policy(const GameState& s, const Move& last, const StrategyMemory& mem, Role mode, int e1,
                           int e2, Mutation mutation) {
  const auto& d = s.diagram;
  const int j = syllable_of(d, last.crossing);
  if (unresolved_in_syllable(d, j) > 0) return r2_choice(s, last, mem);
  if (j != e1 && j != e2) violation("even syllable " + std::to_string(j + 1) + " left without a partner");
  const int other_end = j == e1 ? e2 : e1;
  const auto target = lowest_in_syllable(d, other_end);
  if (!target) violation("both end syllables exhausted");
  bool copy = mode == Role::Linker;
  if (mutation == Mutation::SkipSignCopy && copy) copy = false;
  const int sign = copy ? slope(last.resolution) : -slope(last.resolution);
  return choice({*target, with_slope(sign)}, mem,
                std::string(copy ? "slope copy" : "opposite slope") + " on syllable " + std::to_string(other_end + 1));
}

StrategyChoice opening_on_si(const GameState& s, const StrategyMemory& mem) {
  const auto c = lowest_of_kind(s.diagram, SyllableKind::SI);
  if (!c) violation("no SI to open on");
  return choice({*c, CrossingState::ResolvedA}, mem, "opening on SI crossing " + std::to_string(*c));
}

std::optional<StrategyChoice> si_pairing(const GameState& s, const Move& last, const StrategyMemory& mem) {
  if (classify_crossing(s.diagram, last.crossing) != SyllableKind::SI) return std::nullopt;
  const auto c = lowest_of_kind(s.diagram, SyllableKind::SI);
  if (!c) violation("no SI left to pair with");
  return choice({*c, CrossingState::ResolvedA}, mem, "SI pairing on crossing " + std::to_string(*c));
}

StrategyChoice thm4_response(const GameState& s, const Move& last, const StrategyMemory& mem, Role me,
                             Mutation mutation) {
  if (auto si = si_pairing(s, last, mem)) return *si;
  const auto sizes = syllable_sizes(s.diagram);
  const auto dec = decompose_word(PseudoTangleWord::shadow_of_sizes(sizes));
  int final_block = -1;
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    if (dec.blocks[b].is_si()) continue;
    int total = 0;
    for (int i : dec.blocks[b].syllables) total += sizes[static_cast<std::size_t>(i)];
    if (total > 0) final_block = static_cast<int>(b);
  }
  const int j = syllable_of(s.diagram, last.crossing);
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    const auto& block = dec.blocks[b];
    if (std::find(block.syllables.begin(), block.syllables.end(), j) == block.syllables.end()) continue;
    const Role mode = static_cast<int>(b) == final_block ? me : Role::Unlinker;
    switch (block.tag) {
      case BlockTag::SingleEven: return single_even_policy(s, last, mem, mode, j);
      case BlockTag::TwoOdd:
      case BlockTag::OddEvensOdd:
        return ends_policy(s, last, mem, mode, block.syllables.front(), block.syllables.back(), mutation);
      default: violation(std::string("unexpected block ") + to_string(block.tag));
    }
  }
  violation("syllable outside every block");
}

int oriented_sign(const ShadowDiagram& d, const Orientation& o, int c, CrossingState st) {
  return crossing_sign(d.with_state(c, st), o, c);
}

StrategyChoice thm6_response(const GameState& s, const Move& last, StrategyMemory mem, Mutation mutation) {
  if (auto si = si_pairing(s, last, mem)) return *si;
  const auto& d = s.diagram;
  const auto c = lowest_of_kind(d, SyllableKind::NSI);
  if (!c) violation("no NSI left to answer on");
  const int theirs = crossing_sign(d, *mem.orientation, last.crossing);
  bool copy = mem.nsi_responses == 0;
  if (mutation == Mutation::SkipSignCopy) copy = false;
  const int want = copy ? theirs : -theirs;
  const auto st = oriented_sign(d, *mem.orientation, *c, CrossingState::ResolvedA) == want ? CrossingState::ResolvedA
                                                                                          : CrossingState::ResolvedB;
  ++mem.nsi_responses;
  return choice({*c, st}, mem,
                std::string(copy ? "sign copy" : "sign opposition") + " on NSI crossing " + std::to_string(*c));
}

}  // namespace

const std::array<StrategyId, 8>& all_strategies() noexcept { return kAll; }

const char* to_string(StrategyId id) noexcept {
  switch (id) {
    case StrategyId::Thm1UnlinkerAlways: return "Thm1-Unlinker-always";
    case StrategyId::Thm1_2Second: return "Thm1-2-second";
    case StrategyId::Thm2Second: return "Thm2-second";
    case StrategyId::Thm3Second: return "Thm3-second";
    case StrategyId::Thm4Second: return "Thm4-second";
    case StrategyId::Thm4First: return "Thm4-first";
    case StrategyId::Thm6LinkerSecond: return "Thm6-Linker-second";
    case StrategyId::Thm6LinkerFirst: return "Thm6-Linker-first";
  }
  return "?";
}

std::optional<StrategyId> parse_strategy(std::string_view text) {
  for (auto id : kAll)
    if (text == to_string(id)) return id;
  return std::nullopt;
}

const char* hypothesis(StrategyId id) noexcept {
  switch (id) {
    case StrategyId::Thm1UnlinkerAlways:
      return "rational word with every odd-position syllable empty, or a shadow without NSIs";
    case StrategyId::Thm1_2Second: return "rational word, all syllables even, some odd-position syllable nonzero";
    case StrategyId::Thm2Second: return "rational word (a1,a2) with both syllables odd";
    case StrategyId::Thm3Second: return "rational word with n >= 3, odd end syllables, even middle syllables";
    case StrategyId::Thm4Second: return "rational word with an even number of SIs";
    case StrategyId::Thm4First: return "rational word with an odd number of SIs";
    case StrategyId::Thm6LinkerSecond: return "shadow with NSIs and an even number of SIs, Linker moving second";
    case StrategyId::Thm6LinkerFirst: return "shadow with NSIs and an odd number of SIs, Linker moving first";
  }
  return "";
}

std::optional<Role> strategy_role(StrategyId id, Role first_mover) noexcept {
  switch (id) {
    case StrategyId::Thm1UnlinkerAlways: return Role::Unlinker;
    case StrategyId::Thm1_2Second:
    case StrategyId::Thm2Second:
    case StrategyId::Thm3Second:
    case StrategyId::Thm4Second: return other(first_mover);
    case StrategyId::Thm4First: return first_mover;
    case StrategyId::Thm6LinkerSecond:
      if (first_mover == Role::Unlinker) return Role::Linker;
      return std::nullopt;
    case StrategyId::Thm6LinkerFirst:
      if (first_mover == Role::Linker) return Role::Linker;
      return std::nullopt;
  }
  return std::nullopt;
}

bool strategy_moves_first(StrategyId id) noexcept {
  return id == StrategyId::Thm4First || id == StrategyId::Thm6LinkerFirst;
}

bool is_applicable(StrategyId id, const GameConfig& config) {
  const auto& d = config.shadow;
  if (d.component_count() != 2 || !d.fully_unresolved()) return false;
  if (!strategy_role(id, config.first_mover)) return false;
  const auto counts = count_intersections(d);
  const bool rational = d.provenance().has_value();
  std::vector<int> sizes;
  if (rational) sizes = syllable_sizes(d);
  const std::size_t n = sizes.size();
  auto odd = [&](std::size_t i) { return sizes[i] % 2 == 1; };
  switch (id) {
    case StrategyId::Thm1UnlinkerAlways: {
      if (counts.nsi == 0) return true;
      if (!rational) return false;
      for (std::size_t i = 0; i < n; i += 2)
        if (sizes[i] != 0) return false;
      return true;
    }
    case StrategyId::Thm1_2Second: {
      if (!rational) return false;
      bool some = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (odd(i)) return false;
        if (i % 2 == 0 && sizes[i] != 0) some = true;
      }
      return some;
    }
    case StrategyId::Thm2Second: return rational && n == 2 && odd(0) && odd(1);
    case StrategyId::Thm3Second: {
      if (!rational || n < 3 || !odd(0) || !odd(n - 1)) return false;
      for (std::size_t i = 1; i + 1 < n; ++i)
        if (odd(i)) return false;
      return true;
    }
    case StrategyId::Thm4Second: return rational && counts.si % 2 == 0;
    case StrategyId::Thm4First: return rational && counts.si % 2 == 1;
    case StrategyId::Thm6LinkerSecond: return counts.nsi >= 2 && counts.si % 2 == 0;
    case StrategyId::Thm6LinkerFirst: return counts.nsi >= 2 && counts.si % 2 == 1;
  }
  return false;
}

std::vector<StrategyId> applicable_strategies(const GameConfig& config) {
  std::vector<StrategyId> out;
  for (auto id : kAll)
    if (is_applicable(id, config)) out.push_back(id);
  return out;
}

std::vector<int> region_crossings(const ShadowDiagram& d, int crossing) {
  std::vector<int> out;
  if (d.provenance()) {
    const int j = syllable_of(d, crossing);
    for (int c = 0; c < d.crossing_count(); ++c)
      if (d.crossing(c).syllable == j) out.push_back(c);
    return out;
  }
  for (const auto& r : twist_regions(d)) {
    if (std::find(r.crossings.begin(), r.crossings.end(), crossing) == r.crossings.end()) continue;
    out = r.crossings;
    std::sort(out.begin(), out.end());
    return out;
  }
  return {crossing};
}

int region_sign(const ShadowDiagram& d, const std::vector<int>& region, int crossing, CrossingState state) {
  const int flip_sign = state == CrossingState::ResolvedA ? 1 : -1;
  if (d.provenance()) return flip_sign;
  // handedness of ResolvedA, propagated across the bigons of the chain
  std::map<int, int> hand{{region.front(), 1}};
  const auto fs = faces(d);
  bool grew = true;
  while (grew && hand.size() < region.size()) {
    grew = false;
    for (const auto& f : fs) {
      if (f.darts.size() != 2) continue;
      const PortRef a = f.darts[0];
      const PortRef b = d.opposite_end(a);
      if (a.crossing == b.crossing) continue;
      auto ia = hand.find(a.crossing);
      auto ib = hand.find(b.crossing);
      if ((ia == hand.end()) == (ib == hand.end())) continue;
      if (std::find(region.begin(), region.end(), ia == hand.end() ? a.crossing : b.crossing) == region.end())
        continue;
      // same strand over at both ends means the pair cancels
      const bool over_a = a.port % 2 == 0;
      const bool over_b = b.port % 2 == 0;
      if (ia != hand.end())
        hand[b.crossing] = over_a == over_b ? -ia->second : ia->second;
      else
        hand[a.crossing] = over_a == over_b ? -ib->second : ib->second;
      grew = true;
    }
  }
  const auto it = hand.find(crossing);
  if (it == hand.end()) throw Error(ErrorCode::InvalidArgument, "crossing outside the region");
  return it->second * flip_sign;
}

Move r2_response(const GameState& state, const Move& last_move) { return region_response(state, last_move, true); }

Move anti_r2_response(const GameState& state, const Move& last_move) {
  return region_response(state, last_move, false);
}

StrategyMemory memory_from_history(StrategyId id, const GameState& state) {
  StrategyMemory mem;
  mem.orientation = canonical_orientation(state.diagram);
  const auto role = strategy_role(id, state.first_mover);
  Role mover = state.first_mover;
  for (const auto& m : state.history) {
    if (mover == role && classify_crossing(state.diagram, m.crossing) == SyllableKind::NSI) ++mem.nsi_responses;
    if (mover != role) mem.last_opponent_move = m;
    mover = other(mover);
  }
  return mem;
}

StrategyChoice choose_move(StrategyId id, const GameState& s, const StrategyMemory& memory, Mutation mutation) {
  const auto role = strategy_role(id, s.first_mover);
  if (!role) violation(std::string(to_string(id)) + " does not cover this turn order");
  if (*role != s.mover) violation(std::string("not ") + to_string(id) + "'s turn");
  if (s.terminal()) violation("game is over");
  StrategyMemory mem = memory;
  if (!mem.orientation) mem.orientation = canonical_orientation(s.diagram);
  if (!s.history.empty()) mem.last_opponent_move = s.history.back();
  const bool opening = s.history.empty();
  if (opening && !strategy_moves_first(id) && id != StrategyId::Thm1UnlinkerAlways)
    violation(std::string(to_string(id)) + " moves second");
  const bool rational = s.diagram.provenance().has_value();
  if (!rational && id != StrategyId::Thm1UnlinkerAlways && id != StrategyId::Thm6LinkerSecond &&
      id != StrategyId::Thm6LinkerFirst)
    violation(std::string(to_string(id)) + " needs a diagram built from a word");
  const Move last = opening ? Move{} : s.history.back();

  switch (id) {
    case StrategyId::Thm1UnlinkerAlways: {
      const auto c = lowest_unresolved(s.diagram, [](int) { return true; });
      return choice({*c, CrossingState::ResolvedA}, mem, "every resolution splits");
    }
    case StrategyId::Thm1_2Second: {
      const auto sizes = syllable_sizes(s.diagram);
      int designated = -1;
      for (std::size_t i = 0; i < sizes.size(); i += 2)
        if (sizes[i] != 0) {
          designated = static_cast<int>(i);
          break;
        }
      return single_even_policy(s, last, mem, *role, designated);
    }
    case StrategyId::Thm2Second:
    case StrategyId::Thm3Second: {
      const int n = static_cast<int>(syllable_sizes(s.diagram).size());
      return ends_policy(s, last, mem, *role, 0, n - 1, mutation);
    }
    case StrategyId::Thm4First:
      if (opening) return opening_on_si(s, mem);
      [[fallthrough]];
    case StrategyId::Thm4Second: return thm4_response(s, last, mem, *role, mutation);
    case StrategyId::Thm6LinkerFirst:
      if (opening) return opening_on_si(s, mem);
      [[fallthrough]];
    case StrategyId::Thm6LinkerSecond: return thm6_response(s, last, mem, mutation);
  }
  violation("unknown strategy");
}

}  // namespace lug
