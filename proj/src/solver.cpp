#include "lug/solver.hpp"

#include <string>
#include <unordered_map>

#include "lug/error.hpp"
#include "lug/rational_shadow.hpp"

namespace lug {

const char* to_string(SolvedWinner winner) noexcept {
  switch (winner) {
    case SolvedWinner::FirstMover: return "first_mover";
    case SolvedWinner::SecondMover: return "second_mover";
    case SolvedWinner::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// +1 Linker wins, -1 Unlinker wins, 0 undetermined.
int value_of(const Verdict& v) {
  if (v.kind == VerdictKind::Unsplittable) return 1;
  if (v.kind == VerdictKind::Splittable) return -1;
  return 0;
}

int best_for(Role mover) { return mover == Role::Linker ? 1 : -1; }

bool better(Role mover, int a, int b) { return mover == Role::Linker ? a > b : a < b; }

struct Entry {
  int value = 0;
  int best = -1;  // index into the ordered move list
};

void finish(SolveResult& r, int value, Role first_mover) {
  r.first_mover = first_mover;
  if (value == 0) {
    r.winner = SolvedWinner::Undetermined;
    r.unknown_influence = true;
    return;
  }
  r.winning_role = value > 0 ? Role::Linker : Role::Unlinker;
  r.winner = *r.winning_role == first_mover ? SolvedWinner::FirstMover : SolvedWinner::SecondMover;
}

// Slope sign of a move: +1 for ResolvedA.
int slope(CrossingState s) { return s == CrossingState::ResolvedA ? 1 : -1; }

class RationalSearch {
public:
  RationalSearch(const PseudoTangleWord& word, Role first_mover, const SolveOptions& opt, SolveResult& r)
      : word_(word), first_(first_mover), opt_(opt), r_(r) {
    for (const auto& s : word.syllables) total_ += s.unresolved;
  }

  struct AbstractMove {
    std::size_t syllable;
    int sign;
  };

  std::vector<AbstractMove> moves(const PseudoTangleWord& w, Role mover, int last_sign) const {
    std::vector<AbstractMove> out;
    int first = 1;
    if (opt_.order_moves && last_sign != 0) first = mover == Role::Linker ? last_sign : -last_sign;
    for (std::size_t i = 0; i < w.length(); ++i) {
      if (w.syllables[i].unresolved == 0) continue;
      out.push_back({i, first});
      out.push_back({i, -first});
    }
    return out;
  }

  Role mover_of(const PseudoTangleWord& w) const {
    int left = 0;
    for (const auto& s : w.syllables) left += s.unresolved;
    return (total_ - left) % 2 == 0 ? first_ : other(first_);
  }

  std::string key(const PseudoTangleWord& w, int last_sign) const {
    std::string k;
    k.reserve(2 * w.length() + 1);
    for (const auto& s : w.syllables) {
      k.push_back(static_cast<char>(s.net + 64));
      k.push_back(static_cast<char>(s.unresolved));
    }
    // the ordering depends on the last move, and so does the stored best index
    k.push_back(static_cast<char>(last_sign + 2));
    return k;
  }

  Entry solve(PseudoTangleWord& w, int last_sign) {
    ++r_.nodes;
    if (w.fully_resolved()) {
      const int v = value_of(rational_splittability(w));
      if (v == 0) ++r_.unknown_leaves;
      return {v, -1};
    }
    std::string k;
    if (opt_.memoize) {
      k = key(w, last_sign);
      if (auto it = memo_.find(k); it != memo_.end()) {
        ++r_.transposition_hits;
        return it->second;
      }
    }
    const Role mover = mover_of(w);
    const auto ms = moves(w, mover, last_sign);
    Entry e{-best_for(mover), -1};
    for (std::size_t i = 0; i < ms.size(); ++i) {
      auto& s = w.syllables[ms[i].syllable];
      --s.unresolved;
      s.net += ms[i].sign;
      const int v = solve(w, ms[i].sign).value;
      s.net -= ms[i].sign;
      ++s.unresolved;
      if (e.best < 0 || better(mover, v, e.value)) e = {v, static_cast<int>(i)};
      if (e.value == best_for(mover)) break;
    }
    if (opt_.memoize) memo_.emplace(std::move(k), e);
    return e;
  }

  const PseudoTangleWord& word_;
  Role first_;
  const SolveOptions& opt_;
  SolveResult& r_;
  int total_ = 0;
  std::unordered_map<std::string, Entry> memo_;
};

class DiagramSearch {
public:
  DiagramSearch(const SolveOptions& opt, SolveResult& r) : opt_(opt), r_(r) {}

  std::vector<Move> ordered(const GameState& s) const {
    auto ms = legal_moves(s);
    if (!opt_.order_moves || s.history.empty()) return ms;
    const int last = slope(s.history.back().resolution);
    const int want = s.mover == Role::Linker ? last : -last;
    std::vector<Move> out;
    for (const auto& m : ms)
      if (slope(m.resolution) == want) out.push_back(m);
    for (const auto& m : ms)
      if (slope(m.resolution) != want) out.push_back(m);
    return out;
  }

  std::string key(const GameState& s) const {
    std::string k;
    for (const auto& x : s.diagram.crossings()) k.push_back(static_cast<char>('0' + static_cast<int>(x.state)));
    if (opt_.order_moves && !s.history.empty()) k.push_back(state_glyph(s.history.back().resolution));
    return k;
  }

  int leaf(const GameState& s) {
    std::string k;
    for (const auto& x : s.diagram.crossings()) k.push_back(static_cast<char>('0' + static_cast<int>(x.state)));
    if (auto it = leaves_.find(k); it != leaves_.end()) return it->second;
    const int v = value_of(evaluate_terminal(s.diagram, s.budget));
    leaves_.emplace(std::move(k), v);
    return v;
  }

  Entry solve(const GameState& s) {
    ++r_.nodes;
    if (s.terminal()) {
      const int v = leaf(s);
      if (v == 0) ++r_.unknown_leaves;
      return {v, -1};
    }
    std::string k;
    if (opt_.memoize) {
      k = key(s);
      if (auto it = memo_.find(k); it != memo_.end()) {
        ++r_.transposition_hits;
        return it->second;
      }
    }
    const auto ms = ordered(s);
    Entry e{-best_for(s.mover), -1};
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const int v = solve(apply_move(s, ms[i])).value;
      if (e.best < 0 || better(s.mover, v, e.value)) e = {v, static_cast<int>(i)};
      if (e.value == best_for(s.mover)) break;
    }
    if (opt_.memoize) memo_.emplace(std::move(k), e);
    return e;
  }

  const SolveOptions& opt_;
  SolveResult& r_;
  std::unordered_map<std::string, Entry> memo_;
  std::unordered_map<std::string, int> leaves_;
};

}  // namespace

SolveResult solve_rational(const PseudoTangleWord& word, ClosureKind closure, Role first_mover,
                           const SolveOptions& options) {
  if (!word.fully_unresolved()) throw Error(ErrorCode::InvalidArgument, "word must be all-unresolved");
  const auto info = closure_components(word);
  if (info.two_component != closure)
    throw Error(ErrorCode::InvalidDiagram,
                std::string("the ") + to_string(closure) + " closure of " + render_word(word) +
                    " does not have two components");
  SolveResult r;
  RationalSearch search(word, first_mover, options, r);
  PseudoTangleWord w = word;
  const auto root = search.solve(w, 0);
  finish(r, root.value, first_mover);

  // walk the best line on the concrete shadow
  auto diagram = build_rational_shadow(word, closure, true);
  SolveOptions walk = options;
  walk.memoize = true;
  SolveResult scratch;
  RationalSearch again(word, first_mover, walk, scratch);
  int last = 0;
  while (!w.fully_resolved()) {
    const Role mover = again.mover_of(w);
    const auto ms = again.moves(w, mover, last);
    const auto e = again.solve(w, last);
    const auto& m = ms.at(static_cast<std::size_t>(e.best));
    int target = -1;
    for (int c = 0; c < diagram.crossing_count(); ++c) {
      const auto& x = diagram.crossing(c);
      if (x.state == CrossingState::Unresolved && *x.syllable == static_cast<int>(m.syllable)) {
        target = c;
        break;
      }
    }
    const Move move{target, m.sign > 0 ? CrossingState::ResolvedA : CrossingState::ResolvedB};
    diagram = diagram.with_state(target, move.resolution);
    r.principal_variation.push_back(move);
    auto& s = w.syllables[m.syllable];
    --s.unresolved;
    s.net += m.sign;
    last = m.sign;
  }
  return r;
}

SolveResult solve_diagram(const GameState& state, const SolveOptions& options) {
  const int left = state.diagram.unresolved_count();
  if (left > options.max_crossings)
    throw Error(ErrorCode::BoundExceeded, std::to_string(left) + " unresolved crossings exceed the bound of " +
                                              std::to_string(options.max_crossings));
  GameState root = state;
  if (!options.use_provenance) root.diagram.set_provenance(std::nullopt);
  root.budget = options.budget;
  SolveResult r;
  DiagramSearch search(options, r);
  const auto e = search.solve(root);
  finish(r, e.value, state.first_mover);
  const SolveResult counts = r;
  GameState at = root;
  while (!at.terminal()) {
    const auto ms = search.ordered(at);
    const auto step = search.solve(at);
    const auto& m = ms.at(static_cast<std::size_t>(step.best));
    r.principal_variation.push_back(m);
    at = apply_move(at, m);
  }
  r.nodes = counts.nodes;
  r.transposition_hits = counts.transposition_hits;
  r.unknown_leaves = counts.unknown_leaves;
  return r;
}

}  // namespace lug
