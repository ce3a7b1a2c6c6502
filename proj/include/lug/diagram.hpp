#pragma once

// Planar 4-valent diagrams with per-crossing resolution state. Ports of a crossing
// are numbered counterclockwise; ports (0,2) form one strand and (1,3) the other.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lug/tangle.hpp"

namespace lug {

// ResolvedA: strand through ports (0,2) is over. ResolvedB: strand through (1,3) is over.
enum class CrossingState { Unresolved, ResolvedA, ResolvedB };

const char* to_string(CrossingState state) noexcept;
char state_glyph(CrossingState state) noexcept;  // '?', '/', '\'
std::optional<CrossingState> parse_state_glyph(std::string_view glyph);

struct PortRef {
  int crossing = -1;
  int port = -1;

  friend bool operator==(const PortRef&, const PortRef&) = default;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

struct Point {
  double x = 0;
  double y = 0;
};

struct Crossing {
  std::array<int, 4> arcs{};
  CrossingState state = CrossingState::Unresolved;
  std::optional<int> syllable;
  std::optional<Point> position;
};

// Where a built rational diagram came from. Endpoints are the first crossing ports
// met from the tangle corners NW, NE, SW, SE (empty when the strand meets no crossing).
struct RationalProvenance {
  PseudoTangleWord word;
  ClosureKind closure = ClosureKind::Denominator;
  std::array<std::optional<PortRef>, 4> endpoints;
};

class ShadowDiagram {
public:
  ShadowDiagram() = default;
  // arcs referenced by no port are free loops.
  ShadowDiagram(std::vector<Crossing> crossings, int arc_count);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return static_cast<int>(arc_ends_.size()); }
  int component_count() const noexcept { return component_count_; }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int id) const;

  bool is_free_loop(int arc) const { return free_loop_.at(static_cast<std::size_t>(arc)); }
  // Sorted pair of port references for a non-loop arc.
  const std::array<PortRef, 2>& arc_ends(int arc) const { return arc_ends_.at(static_cast<std::size_t>(arc)); }
  int arc_at(PortRef ref) const { return crossing(ref.crossing).arcs[static_cast<std::size_t>(ref.port)]; }
  // The port at the far end of the arc leaving through ref.
  PortRef opposite_end(PortRef ref) const;

  int component_of_arc(int arc) const { return arc_component_.at(static_cast<std::size_t>(arc)); }
  // Component of the strand through ports (pair, pair+2).
  int strand_component(int crossing, int pair) const;
  const std::string& component_name(int component) const { return component_names_.at(static_cast<std::size_t>(component)); }
  void set_component_name(int component, std::string name);

  int unresolved_count() const noexcept;
  bool fully_resolved() const noexcept { return unresolved_count() == 0; }
  bool fully_unresolved() const noexcept { return unresolved_count() == crossing_count(); }

  ShadowDiagram with_state(int crossing, CrossingState state) const;
  // Every crossing reset to Unresolved.
  ShadowDiagram shadow() const;

  const std::optional<RationalProvenance>& provenance() const noexcept { return provenance_; }
  void set_provenance(std::optional<RationalProvenance> provenance) { provenance_ = std::move(provenance); }
  void set_position(int crossing, Point p);
  bool has_layout() const noexcept;

private:
  std::vector<Crossing> crossings_;
  std::vector<std::array<PortRef, 2>> arc_ends_;
  std::vector<bool> free_loop_;
  std::vector<int> arc_component_;
  int component_count_ = 0;
  std::vector<std::string> component_names_;
  std::optional<RationalProvenance> provenance_;
};

// Annotated PD text. `X a,b,c,d m [@x,y]`, `O a` for a crossing-free loop,
// `C a:label` names the component containing arc a, `#` comments.
ShadowDiagram parse_pd(std::string_view text, bool require_two_components = false);
ShadowDiagram load_pd_file(const std::string& path, bool require_two_components = false);
std::string write_pd(const ShadowDiagram& diagram);

SyllableKind classify_crossing(const ShadowDiagram& diagram, int crossing);
IntersectionCounts count_intersections(const ShadowDiagram& diagram);

// Direction of travel per arc: forward means from arc_ends[0] to arc_ends[1].
struct Orientation {
  std::vector<bool> forward;
  std::vector<int> start_arc;  // per component

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Each component starts at its lowest arc, travelling away from its first end.
Orientation canonical_orientation(const ShadowDiagram& diagram);
Orientation reverse_component(const ShadowDiagram& diagram, Orientation orientation, int component);
// Port through which the oriented strand of the given pair enters the crossing.
int incoming_port(const ShadowDiagram& diagram, const Orientation& orientation, int crossing, int pair);

int crossing_sign(const ShadowDiagram& diagram, const Orientation& orientation, int crossing);
// Twice the pseudo-linking number (sum of signs over resolved NSIs).
int pseudo_linking_twice(const ShadowDiagram& diagram, const Orientation& orientation);
std::string format_half(int twice);

// A face is the cycle of darts with the face on the left; dart (c,p) leaves c through p.
struct Face {
  std::vector<PortRef> darts;
};

std::vector<Face> faces(const ShadowDiagram& diagram);
// Number of connected pieces of the crossing graph (free loops excluded).
int crossing_graph_components(const ShadowDiagram& diagram);
bool is_planar(const ShadowDiagram& diagram);

struct TwistRegion {
  std::vector<int> crossings;
};

std::vector<TwistRegion> twist_regions(const ShadowDiagram& diagram);

enum class FaceColor { Black, White };

struct FaceColoring {
  std::vector<Face> faces;
  std::vector<FaceColor> colors;
  int unbounded = -1;
  // Crossing-free circle: inside black, outside white.
  std::optional<std::pair<FaceColor, FaceColor>> loop_colors;
};

FaceColoring checkerboard(const ShadowDiagram& diagram);
// Face index of every dart, indexed [crossing][port].
std::vector<std::array<int, 4>> dart_faces(const ShadowDiagram& diagram, const std::vector<Face>& faces);

// No crossing joins the two components.
bool is_split(const ShadowDiagram& diagram);

}  // namespace lug
