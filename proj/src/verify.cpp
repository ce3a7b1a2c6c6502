#include "lug/verify.hpp"

#include <cstdlib>

#include "lug/error.hpp"

namespace lug {

namespace {

class Verifier {
public:
  Verifier(StrategyId id, Role role, Mutation mutation, VerificationReport& r)
      : id_(id), role_(role), mutation_(mutation), r_(r) {}

  void run(const GameState& s, const StrategyMemory& mem, bool plk_ok) {
    if (s.terminal()) {
      finish_line(s, plk_ok);
      return;
    }
    if (s.mover == role_) {
      StrategyChoice c;
      try {
        c = choose_move(id_, s, mem, mutation_);
      } catch (const Error& e) {
        ++r_.lines;
        ++r_.dispatcher_errors;
        if (r_.errors.size() < kKeptLines) r_.errors.push_back(e.what());
        return;
      }
      GameState next;
      try {
        next = apply_move(s, c.move);
      } catch (const Error& e) {
        ++r_.lines;
        ++r_.dispatcher_errors;
        if (r_.errors.size() < kKeptLines) r_.errors.push_back(std::string("illegal strategy move: ") + e.what());
        return;
      }
      bool ok = plk_ok;
      if (sign_strategy() && classify_crossing(next.diagram, c.move.crossing) == SyllableKind::NSI)
        ok = ok && std::abs(pseudo_linking_twice(next.diagram, *c.memory.orientation)) == 2;
      run(next, c.memory, ok);
      return;
    }
    for (const auto& m : legal_moves(s)) run(apply_move(s, m), mem, plk_ok);
  }

private:
  bool sign_strategy() const {
    return id_ == StrategyId::Thm6LinkerFirst || id_ == StrategyId::Thm6LinkerSecond;
  }

  void finish_line(const GameState& s, bool plk_ok) {
    ++r_.lines;
    const auto out = game_outcome(s);
    switch (out->verdict.kind) {
      case VerdictKind::Splittable: ++r_.splittable; break;
      case VerdictKind::Unsplittable: ++r_.unsplittable; break;
      case VerdictKind::Unknown: ++r_.unknown; break;
    }
    if (out->winner == role_) {
      ++r_.wins;
    } else if (out->winner) {
      ++r_.losses;
      if (r_.loss_lines.size() < kKeptLines) r_.loss_lines.push_back(s.history);
    }
    if (!plk_ok) {
      ++r_.plk_violations;
      if (r_.plk_violation_lines.size() < kKeptLines) r_.plk_violation_lines.push_back(s.history);
    }
  }

  StrategyId id_;
  Role role_;
  Mutation mutation_;
  VerificationReport& r_;
};

}  // namespace

VerificationReport verify_strategy(StrategyId id, const GameConfig& config, Mutation mutation) {
  if (!is_applicable(id, config))
    throw Error(ErrorCode::Inapplicable, std::string(to_string(id)) + " does not apply: needs " + hypothesis(id) +
                                             ", with the " + to_string(config.first_mover) + " moving first");
  VerificationReport r;
  r.strategy = id;
  r.first_mover = config.first_mover;
  r.role = *strategy_role(id, config.first_mover);
  Verifier v(id, r.role, mutation, r);
  v.run(new_game(config), {}, true);
  return r;
}

}  // namespace lug
