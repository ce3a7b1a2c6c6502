#include "lug/generate.hpp"

#include "lug/error.hpp"
#include "lug/rational_shadow.hpp"
#include "lug/simplify.hpp"

namespace lug {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

ShadowDiagram rebuild_named(const ShadowDiagram& old, std::vector<Crossing> xs, int arc_count) {
  ShadowDiagram d(std::move(xs), arc_count);
  for (int a = 0; a < old.arc_count(); ++a)
    d.set_component_name(d.component_of_arc(a), old.component_name(old.component_of_arc(a)));
  return d;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

ShadowDiagram insert_kink(const ShadowDiagram& d, int arc, bool left) {
  std::vector<Crossing> xs = d.crossings();
  const int x = static_cast<int>(xs.size());
  const int loop = d.arc_count();
  const int tail = d.arc_count() + 1;
  Crossing k;
  if (d.is_free_loop(arc)) {
    // the circle becomes a figure eight
    k.arcs = left ? std::array<int, 4>{arc, loop, loop, arc} : std::array<int, 4>{arc, arc, loop, loop};
    xs.push_back(k);
    return rebuild_named(d, std::move(xs), d.arc_count() + 1);
  }
  const PortRef to = d.arc_ends(arc)[1];
  // strand enters through 0, leaves through 2, returns through 1 or 3, exits the other
  k.arcs = left ? std::array<int, 4>{arc, tail, loop, loop} : std::array<int, 4>{arc, loop, loop, tail};
  xs[idx(to.crossing)].arcs[idx(to.port)] = tail;
  xs.push_back(k);
  return rebuild_named(d, std::move(xs), d.arc_count() + 2);
}

ShadowDiagram insert_finger(const ShadowDiagram& d, PortRef da, PortRef db) {
  const int a = d.arc_at(da);
  const int b = d.arc_at(db);
  if (a == b) throw Error(ErrorCode::InvalidArgument, "finger move needs two different arcs");
  const PortRef va = d.opposite_end(da);
  const PortRef vb = d.opposite_end(db);
  std::vector<Crossing> xs = d.crossings();
  const int l = static_cast<int>(xs.size());
  const int r = l + 1;
  const int a2 = d.arc_count();
  const int tip = a2 + 1;
  const int bmid = a2 + 2;
  const int b2 = a2 + 3;
  // a's first part reuses a, b's first part reuses b
  xs[idx(va.crossing)].arcs[idx(va.port)] = a2;
  xs[idx(vb.crossing)].arcs[idx(vb.port)] = b2;
  Crossing cl;
  cl.arcs = {a, bmid, tip, b2};
  Crossing cr;
  cr.arcs = {tip, bmid, a2, b};
  xs.push_back(cl);
  xs.push_back(cr);
  return rebuild_named(d, std::move(xs), d.arc_count() + 4);
}

ShadowDiagram random_shadow(Rng& rng, int components, int max_crossings) {
  if (components != 1 && components != 2) throw Error(ErrorCode::InvalidArgument, "components must be 1 or 2");
  if (max_crossings < 2) throw Error(ErrorCode::InvalidArgument, "max_crossings must be at least 2");
  ShadowDiagram d;
  if (components == 1) {
    d = parse_pd("X 1,1,2,2\n");
  } else if (uniform(rng, 0, 1) == 0) {
    d = parse_pd("X 4,1,3,2\nX 2,3,1,4\n");
  } else {
    // a small rational seed
    for (;;) {
      PseudoTangleWord w;
      const int len = uniform(rng, 1, 3);
      int total = 0;
      for (int i = 0; i < len; ++i) {
        const int s = uniform(rng, 0, 3);
        total += s;
        w.syllables.push_back({0, s});
      }
      if (total < 2 || total > max_crossings) continue;
      const auto info = closure_components(w);
      if (!info.two_component) continue;
      d = build_rational_shadow(w, *info.two_component, true);
      if (d.crossing_count() >= 1) break;
    }
  }
  const int target = uniform(rng, d.crossing_count(), max_crossings);
  for (int guard = 0; guard < 200 && d.crossing_count() < target; ++guard) {
    const int kind = uniform(rng, 0, 2);
    if (kind == 0 && d.crossing_count() + 1 <= target) {
      const int arc = uniform(rng, 0, d.arc_count() - 1);
      d = insert_kink(d, arc, uniform(rng, 0, 1) == 0);
    } else if (kind == 1 && d.crossing_count() + 2 <= target) {
      const auto fs = faces(d);
      const auto& f = fs[idx(uniform(rng, 0, static_cast<int>(fs.size()) - 1))];
      if (f.darts.size() < 2) continue;
      const int i = uniform(rng, 0, static_cast<int>(f.darts.size()) - 1);
      int j = uniform(rng, 0, static_cast<int>(f.darts.size()) - 2);
      if (j >= i) ++j;
      if (d.arc_at(f.darts[idx(i)]) == d.arc_at(f.darts[idx(j)])) continue;
      d = insert_finger(d, f.darts[idx(i)], f.darts[idx(j)]);
    } else {
      std::vector<std::vector<PortRef>> triangles;
      for (const auto& f : faces(d)) {
        const auto& t = f.darts;
        if (t.size() == 3 && t[0].crossing != t[1].crossing && t[1].crossing != t[2].crossing &&
            t[0].crossing != t[2].crossing)
          triangles.push_back(t);
      }
      if (triangles.empty()) continue;
      d = flip_triangle(d, triangles[idx(uniform(rng, 0, static_cast<int>(triangles.size()) - 1))]);
    }
  }
  d.set_provenance(std::nullopt);
  d = d.shadow();
  return d;
}

ShadowDiagram random_resolution(const ShadowDiagram& shadow, Rng& rng) {
  ShadowDiagram d = shadow;
  for (int c = 0; c < d.crossing_count(); ++c)
    d = d.with_state(c, uniform(rng, 0, 1) == 0 ? CrossingState::ResolvedA : CrossingState::ResolvedB);
  return d;
}

}  // namespace lug
