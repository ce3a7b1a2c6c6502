#include "oracles.hpp"

#include <cstdlib>
#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

using namespace lug;

namespace oracle {

namespace {

void enumerate(std::vector<int>& cur, int len, int lo, int hi, int budget,
               const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == len) {
    fn(cur);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    if (std::abs(v) > budget) continue;
    cur.push_back(v);
    enumerate(cur, len, lo, hi, budget - std::abs(v), fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_size_word(int max_len, int max_size, const std::function<void(const PseudoTangleWord&)>& fn) {
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> cur;
    enumerate(cur, len, 0, max_size, 1 << 20,
              [&](const std::vector<int>& sizes) { fn(PseudoTangleWord::shadow_of_sizes(sizes)); });
  }
}

void for_each_net_word(int max_len, int max_abs, const std::function<void(const PseudoTangleWord&)>& fn) {
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> cur;
    enumerate(cur, len, -max_abs, max_abs, 1 << 20,
              [&](const std::vector<int>& nets) { fn(PseudoTangleWord::from_nets(nets)); });
  }
}

void for_each_net_word_by_crossings(int max_len, int max_crossings,
                                    const std::function<void(const PseudoTangleWord&)>& fn) {
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> cur;
    enumerate(cur, len, -max_crossings, max_crossings, max_crossings,
              [&](const std::vector<int>& nets) { fn(PseudoTangleWord::from_nets(nets)); });
  }
}

CornerTrace corner_strand_kinds(const PseudoTangleWord& word) {
  // corners NW, NE, SW, SE hold strand ids; two vertical strands to start
  std::array<int, 4> strand{0, 1, 0, 1};
  CornerTrace out;
  for (std::size_t i = 0; i < word.length(); ++i) {
    const bool bottom = i % 2 == 0;
    const int a = bottom ? 2 : 1;  // SW or NE
    const int b = 3;               // SE
    out.kinds.push_back(strand[a] == strand[b] ? SyllableKind::SI : SyllableKind::NSI);
    if (word.syllables[i].size() % 2 == 1) std::swap(strand[a], strand[b]);
  }
  if (strand[0] == strand[2])
    out.pairing = EndpointPairing::LeftRight;
  else if (strand[0] == strand[1])
    out.pairing = EndpointPairing::TopBottom;
  else
    out.pairing = EndpointPairing::Diagonal;
  return out;
}

bool satisfies_six_conditions(const PseudoTangleWord& w, const std::vector<SyllableKind>& k) {
  const auto n = k.size();
  auto si = [&](std::size_t i) { return k[i] == SyllableKind::SI; };
  auto even = [&](std::size_t i) { return w.syllables[i].size() % 2 == 0; };
  if (n == 0) return true;
  if (si(0)) return false;
  if (n > 1 && si(1) != even(0)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (si(i) && si(i + 1)) return false;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (si(i) && si(i + 2) != even(i + 1)) return false;
    if (!si(i) && !si(i + 1) && si(i + 2) != !even(i + 1)) return false;
  }
  return true;
}

TangleFraction continued_fraction(const std::vector<int>& nets) {
  // column vector (p, q); bottom twist [[1,0],[n,1]], right twist [[1,n],[0,1]]
  __int128 m[2][2] = {{1, 0}, {0, 1}};
  for (std::size_t i = 0; i < nets.size(); ++i) {
    __int128 t[2][2];
    const __int128 n = nets[i];
    const __int128 b[2][2] = {{1, i % 2 == 0 ? 0 : n}, {i % 2 == 0 ? n : 0, 1}};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) t[r][c] = b[r][0] * m[0][c] + b[r][1] * m[1][c];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m[r][c] = t[r][c];
  }
  return TangleFraction(static_cast<std::int64_t>(m[0][0]), static_cast<std::int64_t>(m[1][0]));
}

std::vector<SyllableKind> traced_tangle_kinds(const ShadowDiagram& d) {
  const auto& prov = d.provenance();
  if (!prov) throw std::logic_error("no provenance");
  const auto& ends = prov->endpoints;
  std::vector<std::vector<int>> visitors(static_cast<std::size_t>(d.crossing_count()));
  std::array<bool, 4> used{false, false, false, false};
  int strand = 0;
  for (std::size_t corner = 0; corner < 4; ++corner) {
    if (!ends[corner] || used[corner]) continue;
    used[corner] = true;
    PortRef in = *ends[corner];
    for (;;) {
      visitors[static_cast<std::size_t>(in.crossing)].push_back(strand);
      const PortRef out{in.crossing, (in.port + 2) % 4};
      bool exits = false;
      for (std::size_t k = 0; k < 4; ++k) {
        if (ends[k] && *ends[k] == out) {
          used[k] = true;
          exits = true;
        }
      }
      if (exits) break;
      in = d.opposite_end(out);
    }
    ++strand;
  }
  std::vector<SyllableKind> out;
  for (const auto& v : visitors) {
    if (v.size() != 2) throw std::logic_error("crossing not met twice by tangle strands");
    out.push_back(v[0] == v[1] ? SyllableKind::SI : SyllableKind::NSI);
  }
  return out;
}

long long link_determinant(const ShadowDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return d.component_count() == 1 ? 1 : 0;
  for (int a = 0; a < d.arc_count(); ++a)
    if (d.is_free_loop(a)) return 0;
  // over-arcs: merge the two arcs on the over strand at every crossing
  std::vector<int> parent(static_cast<std::size_t>(d.arc_count()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& x : d.crossings()) {
    const int over = x.state == CrossingState::ResolvedA ? 0 : 1;
    parent[find(x.arcs[over])] = find(x.arcs[over + 2]);
  }
  std::map<int, int> col;
  for (int a = 0; a < d.arc_count(); ++a) col.emplace(find(a), static_cast<int>(col.size()));
  if (static_cast<int>(col.size()) != n) return 0;
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int c = 0; c < n; ++c) {
    const auto& x = d.crossing(c);
    const int over = x.state == CrossingState::ResolvedA ? 0 : 1;
    m[c][col[find(x.arcs[over])]] += 2;
    m[c][col[find(x.arcs[1 - over])]] -= 1;
    m[c][col[find(x.arcs[3 - over])]] -= 1;
  }
  // Bareiss on the leading (n-1)x(n-1) minor
  const int k = n - 1;
  if (k == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    int piv = i;
    while (piv < k && m[piv][i] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != i) {
      std::swap(m[piv], m[i]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c) {
        m[r][c] = static_cast<long long>((static_cast<__int128>(m[r][c]) * m[i][i] - static_cast<__int128>(m[r][i]) * m[i][c]) / prev);
      }
      m[r][i] = 0;
    }
    prev = m[i][i];
  }
  const long long det = sign * m[k - 1][k - 1];
  return det < 0 ? -det : det;
}

int linking_twice_by_traversal(const ShadowDiagram& d) {
  // walk each component once, recording entry ports of both strands
  const int n = d.crossing_count();
  std::vector<std::array<int, 2>> in_port(static_cast<std::size_t>(n), {-1, -1});
  std::vector<bool> visited_arc(static_cast<std::size_t>(d.arc_count()), false);
  for (int start = 0; start < d.arc_count(); ++start) {
    if (visited_arc[start] || d.is_free_loop(start)) continue;
    PortRef at = d.arc_ends(start)[1];
    int arc = start;
    while (!visited_arc[arc]) {
      visited_arc[arc] = true;
      in_port[at.crossing][at.port % 2] = at.port;
      const PortRef out{at.crossing, (at.port + 2) % 4};
      arc = d.arc_at(out);
      at = d.opposite_end(out);
    }
  }
  int lk = 0;
  for (int c = 0; c < n; ++c) {
    const auto& x = d.crossing(c);
    const int over = x.state == CrossingState::ResolvedA ? 0 : 1;
    if (d.strand_component(c, over) != 0 || d.strand_component(c, 1 - over) != 1) continue;
    const int o = in_port[c][over];
    const int u = in_port[c][1 - over];
    lk += u == (o + 1) % 4 ? 1 : -1;
  }
  return 2 * lk;
}

}  // namespace oracle

namespace oracle {

int brute_force_linker_value(const ShadowDiagram& d, bool linker_to_move) {
  int c = 0;
  while (c < d.crossing_count() && d.crossing(c).state != CrossingState::Unresolved) ++c;
  if (c == d.crossing_count()) return link_determinant(d) != 0 ? 1 : -1;
  int best = linker_to_move ? -1 : 1;
  for (auto s : {CrossingState::ResolvedA, CrossingState::ResolvedB}) {
    const int v = brute_force_linker_value(d.with_state(c, s), !linker_to_move);
    best = linker_to_move ? std::max(best, v) : std::min(best, v);
  }
  for (int k = c + 1; k < d.crossing_count(); ++k) {
    if (d.crossing(k).state != CrossingState::Unresolved) continue;
    for (auto s : {CrossingState::ResolvedA, CrossingState::ResolvedB}) {
      const int v = brute_force_linker_value(d.with_state(k, s), !linker_to_move);
      best = linker_to_move ? std::max(best, v) : std::min(best, v);
    }
  }
  return best;
}

}  // namespace oracle
