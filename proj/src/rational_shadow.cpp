#include "lug/rational_shadow.hpp"

#include <variant>

#include "lug/error.hpp"

namespace lug {

namespace {

enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

struct OpenEnd {
  bool to_corner = false;  // strand reaches another corner without crossings
  int corner = -1;
  PortRef ref;
};

class Builder {
public:
  Builder() {
    ends_[NW] = {true, SW, {}};
    ends_[SW] = {true, NW, {}};
    ends_[NE] = {true, SE, {}};
    ends_[SE] = {true, NE, {}};
  }

  int add_crossing(int syllable, CrossingState state, Point at) {
    Crossing x;
    x.state = state;
    x.syllable = syllable;
    x.position = at;
    x.arcs = {-1, -1, -1, -1};
    crossings_.push_back(x);
    return static_cast<int>(crossings_.size()) - 1;
  }

  void attach(int corner, PortRef target) {
    const OpenEnd e = ends_[corner];
    if (e.to_corner)
      ends_[e.corner] = {false, -1, target};
    else
      add_arc(e.ref, target);
  }

  void set_end(int corner, PortRef ref) { ends_[corner] = {false, -1, ref}; }

  std::array<std::optional<PortRef>, 4> endpoints() const {
    std::array<std::optional<PortRef>, 4> out;
    for (int k = 0; k < 4; ++k)
      if (!ends_[k].to_corner) out[static_cast<std::size_t>(k)] = ends_[k].ref;
    return out;
  }

  void join(int a, int b) {
    const OpenEnd ea = ends_[a];
    const OpenEnd eb = ends_[b];
    if (ea.to_corner) {
      if (ea.corner == b) {
        ++free_loops_;
        return;
      }
      ends_[ea.corner] = eb;
      if (eb.to_corner) ends_[eb.corner] = {true, ea.corner, {}};
      return;
    }
    if (eb.to_corner) {
      ends_[eb.corner] = ea;
      return;
    }
    add_arc(ea.ref, eb.ref);
  }

  ShadowDiagram finish() {
    const int arcs = next_arc_ + free_loops_;
    return ShadowDiagram(std::move(crossings_), arcs);
  }

private:
  void add_arc(PortRef a, PortRef b) {
    crossings_[static_cast<std::size_t>(a.crossing)].arcs[static_cast<std::size_t>(a.port)] = next_arc_;
    crossings_[static_cast<std::size_t>(b.crossing)].arcs[static_cast<std::size_t>(b.port)] = next_arc_;
    ++next_arc_;
  }

  std::array<OpenEnd, 4> ends_;
  std::vector<Crossing> crossings_;
  int next_arc_ = 0;
  int free_loops_ = 0;
};

}  // namespace

ShadowDiagram build_rational_shadow(const PseudoTangleWord& word, ClosureKind closure, bool require_two_components) {
  Builder b;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (std::size_t i = 0; i < word.syllables.size(); ++i) {
    const auto& s = word.syllables[i];
    if (s.unresolved < 0) throw Error(ErrorCode::InvalidArgument, "negative unresolved count");
    const int resolved = s.net < 0 ? -s.net : s.net;
    const auto sign_state = s.net > 0 ? CrossingState::ResolvedA : CrossingState::ResolvedB;
    for (int k = 0; k < s.size(); ++k) {
      const auto state = k < resolved ? sign_state : CrossingState::Unresolved;
      const int syl = static_cast<int>(i);
      if (is_bottom_twist(i)) {
        const int x = b.add_crossing(syl, state, {(xmin + xmax) / 2, ymin - 1});
        ymin -= 1;
        b.attach(SW, {x, 3});
        b.attach(SE, {x, 2});
        b.set_end(SW, {x, 0});
        b.set_end(SE, {x, 1});
      } else {
        const int x = b.add_crossing(syl, state, {xmax + 1, (ymin + ymax) / 2});
        xmax += 1;
        b.attach(NE, {x, 3});
        b.attach(SE, {x, 0});
        b.set_end(NE, {x, 2});
        b.set_end(SE, {x, 1});
      }
    }
  }
  RationalProvenance prov{word, closure, b.endpoints()};
  if (closure == ClosureKind::Denominator) {
    b.join(NW, SW);
    b.join(NE, SE);
  } else {
    b.join(NW, NE);
    b.join(SW, SE);
  }
  ShadowDiagram d = b.finish();
  d.set_provenance(std::move(prov));
  if (require_two_components && d.component_count() != 2) {
    throw Error(ErrorCode::InvalidArgument, std::string("the ") + to_string(closure) + " closure of " +
                                                render_word(word) + " has " + std::to_string(d.component_count()) +
                                                " component(s), not 2");
  }
  return d;
}

}  // namespace lug
