#include "lug/simplify.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lug/error.hpp"

namespace lug {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int over_pair(const Crossing& x) {
  switch (x.state) {
    case CrossingState::ResolvedA: return 0;
    case CrossingState::ResolvedB: return 1;
    case CrossingState::Unresolved: break;
  }
  throw Error(ErrorCode::InvalidArgument, "simplification needs resolved crossings");
}

// The strand along the edge leaving P through pe and entering Q through qe is
// over at both ends or under at both ends.
bool edge_is_level(const ShadowDiagram& d, PortRef from, PortRef to) {
  const bool over_p = over_pair(d.crossing(from.crossing)) == from.port % 2;
  const bool over_q = over_pair(d.crossing(to.crossing)) == to.port % 2;
  return over_p == over_q;
}

ShadowDiagram rebuild(const ShadowDiagram& old, std::vector<Crossing> crossings, int arc_count,
                      const std::vector<int>& representative) {
  ShadowDiagram d(std::move(crossings), arc_count);
  for (int a = 0; a < arc_count; ++a) {
    const int rep = representative[idx(a)];
    if (rep >= 0) d.set_component_name(d.component_of_arc(a), old.component_name(old.component_of_arc(rep)));
  }
  return d;
}

// Darts of a face starting at (c, p), or empty if longer than limit.
std::vector<PortRef> face_from(const ShadowDiagram& d, PortRef start, std::size_t limit) {
  std::vector<PortRef> darts{start};
  PortRef dart = start;
  for (;;) {
    const PortRef arrive = d.opposite_end(dart);
    dart = {arrive.crossing, (arrive.port + 3) % 4};
    if (dart == start) return darts;
    if (darts.size() == limit) return {};
    darts.push_back(dart);
  }
}

std::optional<std::vector<PortRef>> checked_face(const ShadowDiagram& d, const SimplifyStep& step, std::size_t size) {
  if (step.crossings.size() != size || step.ports.size() != size) return std::nullopt;
  const PortRef start{step.crossings[0], step.ports[0]};
  if (start.crossing < 0 || start.crossing >= d.crossing_count() || start.port < 0 || start.port > 3)
    return std::nullopt;
  auto darts = face_from(d, start, size);
  if (darts.size() != size) return std::nullopt;
  for (std::size_t i = 0; i < size; ++i)
    if (darts[i] != PortRef{step.crossings[i], step.ports[i]}) return std::nullopt;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (darts[i].crossing == darts[j].crossing) return std::nullopt;
  return darts;
}

bool face_has_level_edge(const ShadowDiagram& d, const std::vector<PortRef>& darts) {
  for (const auto& dart : darts)
    if (edge_is_level(d, dart, d.opposite_end(dart))) return true;
  return false;
}

}  // namespace

ShadowDiagram flip_triangle(const ShadowDiagram& d, const std::vector<PortRef>& darts) {
  std::vector<Crossing> xs = d.crossings();
  for (const auto& dart : darts) {
    const PortRef p = dart;
    const PortRef q = d.opposite_end(dart);
    const int outer_p = d.arc_at({p.crossing, (p.port + 2) % 4});
    const int inner = d.arc_at(p);
    const int outer_q = d.arc_at({q.crossing, (q.port + 2) % 4});
    xs[idx(q.crossing)].arcs[idx(q.port)] = outer_p;
    xs[idx(p.crossing)].arcs[idx(p.port)] = outer_q;
    xs[idx(q.crossing)].arcs[idx((q.port + 2) % 4)] = inner;
    xs[idx(p.crossing)].arcs[idx((p.port + 2) % 4)] = inner;
  }
  std::vector<int> rep(idx(d.arc_count()));
  for (int a = 0; a < d.arc_count(); ++a) rep[idx(a)] = a;
  return rebuild(d, std::move(xs), d.arc_count(), rep);
}

ShadowDiagram remove_crossings(const ShadowDiagram& d, const std::vector<int>& doomed_list) {
  std::vector<bool> doomed(idx(d.crossing_count()), false);
  for (int c : doomed_list) {
    d.crossing(c);
    doomed[idx(c)] = true;
  }
  std::vector<int> new_id(idx(d.crossing_count()), -1);
  std::vector<Crossing> kept;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (doomed[idx(c)]) continue;
    new_id[idx(c)] = static_cast<int>(kept.size());
    kept.push_back(d.crossing(c));
    kept.back().arcs = {-1, -1, -1, -1};
  }

  std::vector<bool> used(idx(d.arc_count()), false);
  std::vector<int> rep;
  int next = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (doomed[idx(c)]) continue;
    for (int p = 0; p < 4; ++p) {
      if (kept[idx(new_id[idx(c)])].arcs[idx(p)] != -1) continue;
      PortRef leave{c, p};
      PortRef arrive;
      for (;;) {
        used[idx(d.arc_at(leave))] = true;
        arrive = d.opposite_end(leave);
        if (!doomed[idx(arrive.crossing)]) break;
        leave = {arrive.crossing, (arrive.port + 2) % 4};
      }
      kept[idx(new_id[idx(c)])].arcs[idx(p)] = next;
      kept[idx(new_id[idx(arrive.crossing)])].arcs[idx(arrive.port)] = next;
      rep.push_back(d.arc_at({c, p}));
      ++next;
    }
  }
  for (int a = 0; a < d.arc_count(); ++a) {
    if (used[idx(a)]) continue;
    rep.push_back(a);
    ++next;
    if (d.is_free_loop(a)) continue;
    PortRef leave = d.arc_ends(a)[0];
    while (!used[idx(d.arc_at(leave))]) {
      used[idx(d.arc_at(leave))] = true;
      const PortRef arrive = d.opposite_end(leave);
      leave = {arrive.crossing, (arrive.port + 2) % 4};
    }
  }
  return rebuild(d, std::move(kept), next, rep);
}

std::vector<SimplifyStep> r1_moves(const ShadowDiagram& d) {
  std::vector<SimplifyStep> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossing(c);
    for (int p = 0; p < 4; ++p) {
      if (x.arcs[idx(p)] == x.arcs[idx((p + 1) % 4)]) {
        out.push_back({ReidemeisterKind::R1, {c}, {p}});
        break;
      }
    }
  }
  return out;
}

std::vector<SimplifyStep> r2_moves(const ShadowDiagram& d) {
  std::vector<SimplifyStep> out;
  for (const auto& f : faces(d)) {
    if (f.darts.size() != 2 || f.darts[0].crossing == f.darts[1].crossing) continue;
    if (!face_has_level_edge(d, f.darts)) continue;
    out.push_back({ReidemeisterKind::R2, {f.darts[0].crossing, f.darts[1].crossing}, {f.darts[0].port, f.darts[1].port}});
  }
  return out;
}

std::vector<SimplifyStep> r3_moves(const ShadowDiagram& d) {
  std::vector<SimplifyStep> out;
  for (const auto& f : faces(d)) {
    if (f.darts.size() != 3) continue;
    const auto& t = f.darts;
    if (t[0].crossing == t[1].crossing || t[1].crossing == t[2].crossing || t[0].crossing == t[2].crossing) continue;
    if (!face_has_level_edge(d, t)) continue;
    out.push_back({ReidemeisterKind::R3, {t[0].crossing, t[1].crossing, t[2].crossing}, {t[0].port, t[1].port, t[2].port}});
  }
  return out;
}

ShadowDiagram apply_step(const ShadowDiagram& d, const SimplifyStep& step) {
  switch (step.kind) {
    case ReidemeisterKind::R1: {
      if (step.crossings.size() == 1 && step.ports.size() == 1) {
        const int c = step.crossings[0];
        const int p = step.ports[0];
        if (c >= 0 && c < d.crossing_count() && p >= 0 && p < 4 &&
            d.crossing(c).arcs[idx(p)] == d.crossing(c).arcs[idx((p + 1) % 4)])
          return remove_crossings(d, {c});
      }
      break;
    }
    case ReidemeisterKind::R2: {
      const auto darts = checked_face(d, step, 2);
      if (darts && face_has_level_edge(d, *darts)) return remove_crossings(d, step.crossings);
      break;
    }
    case ReidemeisterKind::R3: {
      const auto darts = checked_face(d, step, 3);
      if (darts && face_has_level_edge(d, *darts)) return flip_triangle(d, *darts);
      break;
    }
  }
  throw Error(ErrorCode::InvalidArgument, std::string("step ") + to_string(step.kind) + " does not apply");
}

ShadowDiagram replay_trace(ShadowDiagram d, const std::vector<SimplifyStep>& trace) {
  for (const auto& step : trace) d = apply_step(d, step);
  return d;
}

// ---------------------------------------------------------------------------

std::vector<int> diagram_key(const ShadowDiagram& d) {
  const int n = d.crossing_count();
  std::vector<int> piece(idx(n), -1);
  int pieces = 0;
  for (int c = 0; c < n; ++c) {
    if (piece[idx(c)] != -1) continue;
    std::vector<int> stack{c};
    piece[idx(c)] = pieces;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        const int y = d.opposite_end({x, p}).crossing;
        if (piece[idx(y)] == -1) {
          piece[idx(y)] = pieces;
          stack.push_back(y);
        }
      }
    }
    ++pieces;
  }

  std::vector<int> label(idx(n));
  std::vector<int> base(idx(n));
  std::vector<int> order;
  auto encode = [&](int root, int root_port) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    order.push_back(root);
    label[idx(root)] = 0;
    base[idx(root)] = root_port;
    std::vector<int> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int x = order[i];
      const auto& cx = d.crossing(x);
      out.push_back(cx.state == CrossingState::Unresolved ? 2 : (over_pair(cx) ^ (base[idx(x)] % 2)));
      for (int k = 0; k < 4; ++k) {
        const PortRef e = d.opposite_end({x, (base[idx(x)] + k) % 4});
        if (label[idx(e.crossing)] == -1) {
          label[idx(e.crossing)] = static_cast<int>(order.size());
          base[idx(e.crossing)] = e.port;
          order.push_back(e.crossing);
        }
        out.push_back(label[idx(e.crossing)]);
        out.push_back((e.port - base[idx(e.crossing)] + 4) % 4);
      }
    }
    return out;
  };

  std::vector<std::vector<int>> keys(idx(pieces));
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      auto k = encode(c, p);
      auto& best = keys[idx(piece[idx(c)])];
      if (best.empty() || k < best) best = std::move(k);
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> out;
  int loops = 0;
  for (int a = 0; a < d.arc_count(); ++a) loops += d.is_free_loop(a);
  out.push_back(loops);
  for (const auto& k : keys) {
    out.push_back(-1);
    out.insert(out.end(), k.begin(), k.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Applies R1 then R2 moves until none is left; stops early at a split diagram when asked.
void reduce_greedily(ShadowDiagram& d, std::vector<SimplifyStep>& trace, bool stop_when_split) {
  for (;;) {
    if (stop_when_split && is_split(d)) return;
    auto moves = r1_moves(d);
    if (moves.empty()) moves = r2_moves(d);
    if (moves.empty()) return;
    d = apply_step(d, moves.front());
    trace.push_back(moves.front());
  }
}

}  // namespace

SimplifyResult simplify(const ShadowDiagram& diagram, std::size_t budget, bool stop_when_split) {
  if (budget == 0) throw Error(ErrorCode::InvalidArgument, "simplify budget must be positive");
  if (!diagram.fully_resolved()) throw Error(ErrorCode::InvalidArgument, "simplify needs a fully resolved diagram");

  SimplifyResult best{diagram, {}, 1};
  reduce_greedily(best.diagram, best.trace, stop_when_split);
  best.diagram.set_provenance(std::nullopt);
  if (stop_when_split && is_split(best.diagram)) return best;

  struct Node {
    ShadowDiagram diagram;
    std::vector<SimplifyStep> trace;
  };
  std::set<std::vector<int>> seen{diagram_key(best.diagram)};
  std::deque<Node> frontier{{best.diagram, best.trace}};
  std::size_t nodes = 1;
  while (!frontier.empty() && nodes < budget) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& move : r3_moves(node.diagram)) {
      if (nodes >= budget) break;
      Node next{apply_step(node.diagram, move), node.trace};
      next.trace.push_back(move);
      reduce_greedily(next.diagram, next.trace, stop_when_split);
      if (!seen.insert(diagram_key(next.diagram)).second) continue;
      ++nodes;
      const bool split = stop_when_split && is_split(next.diagram);
      if (next.diagram.crossing_count() < best.diagram.crossing_count() || split) {
        best.diagram = next.diagram;
        best.trace = next.trace;
      }
      if (split) {
        best.nodes = nodes;
        return best;
      }
      frontier.push_back(std::move(next));
    }
  }
  best.nodes = nodes;
  return best;
}

Verdict decide_splittability(const ShadowDiagram& diagram, std::size_t budget) {
  if (!diagram.fully_resolved())
    throw Error(ErrorCode::InvalidArgument, "splittability needs a fully resolved diagram");
  if (diagram.component_count() != 2)
    throw Error(ErrorCode::InvalidArgument, "splittability needs 2 components, found " +
                                                std::to_string(diagram.component_count()));
  Verdict v;
  const int lk2 = pseudo_linking_twice(diagram, canonical_orientation(diagram));
  if (lk2 != 0) {
    v.kind = VerdictKind::Unsplittable;
    v.linking_number = lk2 / 2;
    return v;
  }
  v.linking_number = 0;
  if (is_split(diagram)) {
    v.kind = VerdictKind::Splittable;
    return v;
  }
  auto result = simplify(diagram, budget, true);
  v.nodes_explored = result.nodes;
  if (is_split(result.diagram)) {
    v.kind = VerdictKind::Splittable;
    v.trace = std::move(result.trace);
  }
  return v;
}

}  // namespace lug
