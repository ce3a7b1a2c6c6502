#include "lug/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "lug/error.hpp"

namespace lug {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

const char* to_string(CrossingState state) noexcept {
  switch (state) {
    case CrossingState::Unresolved: return "unresolved";
    case CrossingState::ResolvedA: return "A";
    case CrossingState::ResolvedB: return "B";
  }
  return "?";
}

char state_glyph(CrossingState state) noexcept {
  switch (state) {
    case CrossingState::Unresolved: return '?';
    case CrossingState::ResolvedA: return '/';
    case CrossingState::ResolvedB: return '\\';
  }
  return '?';
}

std::optional<CrossingState> parse_state_glyph(std::string_view glyph) {
  if (glyph == "?") return CrossingState::Unresolved;
  if (glyph == "/" || glyph == "A") return CrossingState::ResolvedA;
  if (glyph == "\\" || glyph == "B") return CrossingState::ResolvedB;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ShadowDiagram::ShadowDiagram(std::vector<Crossing> crossings, int arc_count) : crossings_(std::move(crossings)) {
  if (arc_count < 0) throw Error(ErrorCode::InvalidDiagram, "negative arc count");
  const auto n_arcs = idx(arc_count);
  std::vector<std::vector<PortRef>> seen(n_arcs);
  for (int c = 0; c < crossing_count(); ++c) {
    for (int p = 0; p < 4; ++p) {
      const int a = crossings_[idx(c)].arcs[idx(p)];
      if (a < 0 || a >= arc_count)
        throw Error(ErrorCode::InvalidDiagram, "crossing " + std::to_string(c) + " references unknown arc");
      seen[idx(a)].push_back({c, p});
    }
  }
  arc_ends_.resize(n_arcs);
  free_loop_.assign(n_arcs, false);
  for (std::size_t a = 0; a < n_arcs; ++a) {
    auto& s = seen[a];
    if (s.empty()) {
      free_loop_[a] = true;
      continue;
    }
    if (s.size() != 2) {
      throw Error(ErrorCode::InvalidDiagram,
                  (s.size() == 1 ? "dangling arc-end on arc " : "arc used more than twice: ") + std::to_string(a));
    }
    std::sort(s.begin(), s.end());
    arc_ends_[a] = {s[0], s[1]};
  }

  UnionFind uf(n_arcs);
  for (const auto& x : crossings_) {
    uf.unite(idx(x.arcs[0]), idx(x.arcs[2]));
    uf.unite(idx(x.arcs[1]), idx(x.arcs[3]));
  }
  std::map<std::size_t, int> label;
  arc_component_.assign(n_arcs, -1);
  for (std::size_t a = 0; a < n_arcs; ++a) {
    auto [it, inserted] = label.try_emplace(uf.find(a), static_cast<int>(label.size()));
    arc_component_[a] = it->second;
  }
  component_count_ = static_cast<int>(label.size());
  for (int i = 0; i < component_count_; ++i) component_names_.push_back(std::string(1, static_cast<char>('A' + i % 26)));
}

const Crossing& ShadowDiagram::crossing(int id) const {
  if (id < 0 || id >= crossing_count()) throw Error(ErrorCode::InvalidArgument, "unknown crossing id " + std::to_string(id));
  return crossings_[idx(id)];
}

PortRef ShadowDiagram::opposite_end(PortRef ref) const {
  const auto& ends = arc_ends(arc_at(ref));
  return ends[0] == ref ? ends[1] : ends[0];
}

int ShadowDiagram::strand_component(int c, int pair) const { return component_of_arc(crossing(c).arcs[idx(pair)]); }

void ShadowDiagram::set_component_name(int component, std::string name) {
  component_names_.at(idx(component)) = std::move(name);
}

int ShadowDiagram::unresolved_count() const noexcept {
  int n = 0;
  for (const auto& x : crossings_) n += x.state == CrossingState::Unresolved;
  return n;
}

ShadowDiagram ShadowDiagram::with_state(int c, CrossingState state) const {
  crossing(c);
  ShadowDiagram out = *this;
  out.crossings_[idx(c)].state = state;
  return out;
}

ShadowDiagram ShadowDiagram::shadow() const {
  ShadowDiagram out = *this;
  for (auto& x : out.crossings_) x.state = CrossingState::Unresolved;
  if (out.provenance_) out.provenance_->word = shadow_word(out.provenance_->word);
  return out;
}

void ShadowDiagram::set_position(int c, Point p) {
  crossing(c);
  crossings_[idx(c)].position = p;
}

bool ShadowDiagram::has_layout() const noexcept {
  return !crossings_.empty() &&
         std::all_of(crossings_.begin(), crossings_.end(), [](const Crossing& x) { return x.position.has_value(); });
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void pd_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Syntax, "PD line " + std::to_string(line) + ": " + what, line);
}

long parse_long(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    pd_fail(line, "expected integer, got '" + token + "'");
  }
  if (used != token.size()) pd_fail(line, "expected integer, got '" + token + "'");
  return v;
}

double parse_double(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    pd_fail(line, "expected number, got '" + token + "'");
  }
  if (used != token.size()) pd_fail(line, "expected number, got '" + token + "'");
  return v;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

struct RawCrossing {
  std::array<long, 4> arcs{};
  CrossingState state = CrossingState::Unresolved;
  std::optional<Point> position;
};

}  // namespace

ShadowDiagram parse_pd(std::string_view text, bool require_two_components) {
  std::vector<RawCrossing> raw;
  std::vector<long> loops;
  std::vector<std::pair<long, std::string>> names;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const char kind = line[0];
    std::string rest = trim(std::string_view(line).substr(1));
    if (kind == 'X') {
      RawCrossing x;
      if (auto at = rest.find('@'); at != std::string::npos) {
        const auto xy = split_on(trim(std::string_view(rest).substr(at + 1)), ',');
        if (xy.size() != 2) pd_fail(line_no, "coordinates must be @x,y");
        x.position = Point{parse_double(xy[0], line_no), parse_double(xy[1], line_no)};
        rest = trim(std::string_view(rest).substr(0, at));
      }
      std::string glyph = "?";
      if (!rest.empty() && (rest.back() == '?' || rest.back() == '/' || rest.back() == '\\')) {
        glyph = std::string(1, rest.back());
        rest = trim(std::string_view(rest).substr(0, rest.size() - 1));
      }
      x.state = *parse_state_glyph(glyph);
      const auto ids = split_on(rest, ',');
      if (ids.size() != 4) pd_fail(line_no, "crossing needs four arc ids");
      for (std::size_t i = 0; i < 4; ++i) x.arcs[i] = parse_long(ids[i], line_no);
      raw.push_back(x);
    } else if (kind == 'O') {
      loops.push_back(parse_long(rest, line_no));
    } else if (kind == 'C') {
      const auto colon = rest.find(':');
      if (colon == std::string::npos) pd_fail(line_no, "component line must be C arc:label");
      names.emplace_back(parse_long(trim(std::string_view(rest).substr(0, colon)), line_no),
                         trim(std::string_view(rest).substr(colon + 1)));
    } else {
      pd_fail(line_no, std::string("unknown record '") + kind + "'");
    }
  }

  std::vector<long> ids(loops);
  for (const auto& x : raw) ids.insert(ids.end(), x.arcs.begin(), x.arcs.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](long id) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (long loop : loops) {
    for (const auto& x : raw)
      if (std::find(x.arcs.begin(), x.arcs.end(), loop) != x.arcs.end())
        throw Error(ErrorCode::InvalidDiagram, "free loop arc " + std::to_string(loop) + " also meets a crossing");
  }

  std::vector<Crossing> crossings;
  for (const auto& x : raw) {
    Crossing c;
    for (std::size_t i = 0; i < 4; ++i) c.arcs[i] = dense(x.arcs[i]);
    c.state = x.state;
    c.position = x.position;
    crossings.push_back(c);
  }
  ShadowDiagram d(std::move(crossings), static_cast<int>(ids.size()));
  if (!is_planar(d)) throw Error(ErrorCode::InvalidDiagram, "non-planar rotation system");
  for (const auto& [arc, label] : names) {
    if (!std::binary_search(ids.begin(), ids.end(), arc))
      throw Error(ErrorCode::InvalidDiagram, "component label names unknown arc " + std::to_string(arc));
    d.set_component_name(d.component_of_arc(dense(arc)), label);
  }
  if (require_two_components && d.component_count() != 2) {
    throw Error(ErrorCode::InvalidDiagram,
                "game diagrams need exactly 2 components, found " + std::to_string(d.component_count()));
  }
  return d;
}

ShadowDiagram load_pd_file(const std::string& path, bool require_two_components) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pd(buf.str(), require_two_components);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.position());
  }
}

std::string write_pd(const ShadowDiagram& d) {
  std::ostringstream out;
  for (const auto& x : d.crossings()) {
    out << "X " << x.arcs[0] + 1 << ',' << x.arcs[1] + 1 << ',' << x.arcs[2] + 1 << ',' << x.arcs[3] + 1 << ' '
        << state_glyph(x.state);
    if (x.position) out << " @" << x.position->x << ',' << x.position->y;
    out << '\n';
  }
  for (int a = 0; a < d.arc_count(); ++a)
    if (d.is_free_loop(a)) out << "O " << a + 1 << '\n';
  std::vector<bool> named(static_cast<std::size_t>(d.component_count()), false);
  for (int a = 0; a < d.arc_count(); ++a) {
    const int comp = d.component_of_arc(a);
    if (named[idx(comp)]) continue;
    named[idx(comp)] = true;
    out << "C " << a + 1 << ':' << d.component_name(comp) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

SyllableKind classify_crossing(const ShadowDiagram& d, int c) {
  return d.strand_component(c, 0) == d.strand_component(c, 1) ? SyllableKind::SI : SyllableKind::NSI;
}

IntersectionCounts count_intersections(const ShadowDiagram& d) {
  IntersectionCounts counts;
  for (int c = 0; c < d.crossing_count(); ++c) (classify_crossing(d, c) == SyllableKind::SI ? counts.si : counts.nsi)++;
  return counts;
}

Orientation canonical_orientation(const ShadowDiagram& d) {
  Orientation o;
  o.forward.assign(idx(d.arc_count()), true);
  o.start_arc.assign(idx(d.component_count()), -1);
  std::vector<bool> done(idx(d.arc_count()), false);
  for (int a = 0; a < d.arc_count(); ++a) {
    const int comp = d.component_of_arc(a);
    if (o.start_arc[idx(comp)] != -1) continue;
    o.start_arc[idx(comp)] = a;
    if (d.is_free_loop(a)) continue;
    int arc = a;
    bool fwd = true;
    while (!done[idx(arc)]) {
      done[idx(arc)] = true;
      o.forward[idx(arc)] = fwd;
      const PortRef arrive = d.arc_ends(arc)[fwd ? 1 : 0];
      const PortRef leave{arrive.crossing, (arrive.port + 2) % 4};
      arc = d.arc_at(leave);
      fwd = d.arc_ends(arc)[0] == leave;
    }
  }
  return o;
}

Orientation reverse_component(const ShadowDiagram& d, Orientation o, int component) {
  for (int a = 0; a < d.arc_count(); ++a)
    if (d.component_of_arc(a) == component) o.forward[idx(a)] = !o.forward[idx(a)];
  return o;
}

int incoming_port(const ShadowDiagram& d, const Orientation& o, int c, int pair) {
  const int arc = d.crossing(c).arcs[idx(pair)];
  const PortRef arrive = d.arc_ends(arc)[o.forward[idx(arc)] ? 1 : 0];
  return arrive == PortRef{c, pair} ? pair : pair + 2;
}

int crossing_sign(const ShadowDiagram& d, const Orientation& o, int c) {
  const auto state = d.crossing(c).state;
  if (state == CrossingState::Unresolved)
    throw Error(ErrorCode::InvalidArgument, "crossing " + std::to_string(c) + " is unresolved");
  const int over = state == CrossingState::ResolvedA ? 0 : 1;
  const int over_in = incoming_port(d, o, c, over);
  const int under_in = incoming_port(d, o, c, 1 - over);
  return under_in == (over_in + 1) % 4 ? 1 : -1;
}

int pseudo_linking_twice(const ShadowDiagram& d, const Orientation& o) {
  if (d.component_count() != 2)
    throw Error(ErrorCode::InvalidArgument, "pseudo-linking number needs 2 components, found " +
                                                std::to_string(d.component_count()));
  int sum = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (d.crossing(c).state == CrossingState::Unresolved) continue;
    if (classify_crossing(d, c) == SyllableKind::NSI) sum += crossing_sign(d, o, c);
  }
  return sum;
}

std::string format_half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

// ---------------------------------------------------------------------------

std::vector<Face> faces(const ShadowDiagram& d) {
  std::vector<Face> out;
  std::vector<std::array<bool, 4>> seen(idx(d.crossing_count()), {false, false, false, false});
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int p = 0; p < 4; ++p) {
      if (seen[idx(c)][idx(p)]) continue;
      Face f;
      PortRef dart{c, p};
      while (!seen[idx(dart.crossing)][idx(dart.port)]) {
        seen[idx(dart.crossing)][idx(dart.port)] = true;
        f.darts.push_back(dart);
        const PortRef arrive = d.opposite_end(dart);
        dart = {arrive.crossing, (arrive.port + 3) % 4};
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<std::array<int, 4>> dart_faces(const ShadowDiagram& d, const std::vector<Face>& fs) {
  std::vector<std::array<int, 4>> out(idx(d.crossing_count()), {-1, -1, -1, -1});
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (const auto& dart : fs[f].darts) out[idx(dart.crossing)][idx(dart.port)] = static_cast<int>(f);
  return out;
}

int crossing_graph_components(const ShadowDiagram& d) {
  UnionFind uf(idx(d.crossing_count()));
  for (int a = 0; a < d.arc_count(); ++a) {
    if (d.is_free_loop(a)) continue;
    const auto& e = d.arc_ends(a);
    uf.unite(idx(e[0].crossing), idx(e[1].crossing));
  }
  int n = 0;
  for (int c = 0; c < d.crossing_count(); ++c) n += uf.find(idx(c)) == idx(c);
  return n;
}

bool is_planar(const ShadowDiagram& d) {
  int edges = 0;
  for (int a = 0; a < d.arc_count(); ++a) edges += !d.is_free_loop(a);
  const int f = static_cast<int>(faces(d).size());
  return d.crossing_count() - edges + f == 2 * crossing_graph_components(d);
}

std::vector<TwistRegion> twist_regions(const ShadowDiagram& d) {
  const int n = d.crossing_count();
  std::vector<std::vector<int>> adj(idx(n));
  for (const auto& f : faces(d)) {
    if (f.darts.size() != 2) continue;
    const int a = f.darts[0].crossing;
    const int b = f.darts[1].crossing;
    if (a == b) continue;
    adj[idx(a)].push_back(b);
    adj[idx(b)].push_back(a);
  }
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  UnionFind uf(idx(n));
  for (int c = 0; c < n; ++c)
    for (int m : adj[idx(c)]) uf.unite(idx(c), idx(m));

  std::vector<TwistRegion> out;
  std::vector<bool> placed(idx(n), false);
  for (int c = 0; c < n; ++c) {
    if (placed[idx(c)]) continue;
    // start from a chain end when there is one
    int start = c;
    for (int m = c; m < n; ++m) {
      if (uf.find(idx(m)) == uf.find(idx(c)) && adj[idx(m)].size() <= 1) {
        start = m;
        break;
      }
    }
    TwistRegion region;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (placed[idx(x)]) continue;
      placed[idx(x)] = true;
      region.crossings.push_back(x);
      for (auto it = adj[idx(x)].rbegin(); it != adj[idx(x)].rend(); ++it)
        if (!placed[idx(*it)]) stack.push_back(*it);
    }
    out.push_back(std::move(region));
  }
  return out;
}

FaceColoring checkerboard(const ShadowDiagram& d) {
  if (d.component_count() != 1)
    throw Error(ErrorCode::InvalidArgument,
                "checkerboard colouring needs one component, found " + std::to_string(d.component_count()));
  FaceColoring out;
  if (d.crossing_count() == 0) {
    out.loop_colors = {FaceColor::Black, FaceColor::White};
    return out;
  }
  out.faces = faces(d);
  const auto nf = out.faces.size();

  int best = 0;
  if (d.has_layout()) {
    double best_area = 0;
    for (std::size_t f = 0; f < nf; ++f) {
      double area = 0;
      const auto& darts = out.faces[f].darts;
      for (std::size_t k = 0; k < darts.size(); ++k) {
        const Point a = *d.crossing(darts[k].crossing).position;
        const Point b = *d.crossing(darts[(k + 1) % darts.size()].crossing).position;
        area += a.x * b.y - b.x * a.y;
      }
      const bool better = f == 0 || area < best_area - 1e-9 ||
                          (std::abs(area - best_area) <= 1e-9 && darts.size() > out.faces[idx(best)].darts.size());
      if (better) {
        best = static_cast<int>(f);
        best_area = area;
      }
    }
  } else {
    for (std::size_t f = 1; f < nf; ++f)
      if (out.faces[f].darts.size() > out.faces[idx(best)].darts.size()) best = static_cast<int>(f);
  }
  out.unbounded = best;

  const auto of_dart = dart_faces(d, out.faces);
  std::vector<int> color(nf, -1);
  std::queue<int> q;
  color[idx(best)] = 0;
  q.push(best);
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (const auto& dart : out.faces[idx(f)].darts) {
      const PortRef back = d.opposite_end(dart);
      const int g = of_dart[idx(back.crossing)][idx(back.port)];
      if (color[idx(g)] == -1) {
        color[idx(g)] = 1 - color[idx(f)];
        q.push(g);
      } else if (color[idx(g)] == color[idx(f)]) {
        throw Error(ErrorCode::ContractViolation, "face colouring does not close consistently");
      }
    }
  }
  for (int c : color) {
    if (c == -1) throw Error(ErrorCode::ContractViolation, "disconnected face structure");
    out.colors.push_back(c == 0 ? FaceColor::White : FaceColor::Black);
  }
  return out;
}

bool is_split(const ShadowDiagram& d) {
  if (d.component_count() < 2) return false;
  return count_intersections(d).nsi == 0;
}

}  // namespace lug
