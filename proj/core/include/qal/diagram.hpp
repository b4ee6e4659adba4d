#pragma once

// Oriented link diagrams in planar-diagram (PD) notation.
//
// Each crossing is a quadruple of edge labels listed counterclockwise from the
// incoming under-strand. Edge labels run 1..2n and increase along the
// orientation of each component: every component owns a contiguous label
// range and the last label of a range flows back into the first. Crossing-free
// circles cannot be written in PD form and are kept as a separate count.
//
// Diagrams are immutable values; every operation returns a new diagram whose
// labels are renumbered into the normal form above.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qal {

using Quad = std::array<int, 4>;

struct Crossing {
  Quad edges{};  // counterclockwise from the incoming under-strand

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A component that passes through at least one crossing.
struct Component {
  int first_label;
  int length;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Where an edge end meets a crossing.
struct Port {
  int crossing;
  int position;  // 0..3

  friend bool operator==(const Port&, const Port&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class Diagram {
 public:
  /// The standard unknot diagram: no crossings, one circle.
  Diagram();

  static Diagram unknot() { return Diagram(); }
  static Diagram unlink(int circles);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int i) const;
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return 2 * crossing_count(); }
  int free_circles() const noexcept { return free_circles_; }

  /// Components that meet a crossing, ordered by first label.
  const std::vector<Component>& components() const noexcept { return components_; }
  /// All components including crossing-free circles.
  int component_count() const noexcept { return static_cast<int>(components_.size()) + free_circles_; }

  /// Sign (+1/-1) of crossing i. Throws std::out_of_range.
  int sign(int i) const;

  /// Label that follows edge e along its component.
  int successor(int edge) const;
  /// Index into components() of the component containing edge e.
  int component_of(int edge) const;

  /// Port where the edge ends (enters a crossing) and where it starts.
  Port head(int edge) const;
  Port tail(int edge) const;

  bool is_unknot_diagram() const noexcept { return crossings_.empty() && free_circles_ == 1; }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.signs_ == b.signs_ && a.free_circles_ == b.free_circles_;
  }

 private:
  friend class DiagramAssembler;

  void index_ports();

  std::vector<Crossing> crossings_;
  std::vector<std::int8_t> signs_;
  std::vector<Component> components_;
  std::vector<int> component_index_;  // by label - 1
  std::vector<Port> heads_;           // by label - 1
  std::vector<Port> tails_;           // by label - 1
  int free_circles_ = 1;
};

/// L0 (orientation-compatible smoothing), L1 (the other one, re-oriented),
/// and the count difference e measured on the stored diagrams.
struct SmoothingOutcome {
  Diagram zero_smoothing;
  Diagram one_smoothing;
  int e = 0;
  int crossing_sign = 0;
};

/// Result of simplify() that also records removed kinks. A kink whose loop
/// lies in an A-smoothing pair multiplies the bracket by -A^3, one in a
/// B-smoothing pair by -A^-3.
struct Reduction {
  Diagram diagram;
  int a_kinks = 0;
  int b_kinks = 0;
  int r2_moves = 0;
};

/// Unoriented smoothings used by the bracket: A joins positions (0,1),(2,3);
/// B joins (0,3),(1,2).
enum class Splice { A, B };

enum class TwistAxis {
  parallel,      // strands run the same way through the twist (braid-like)
  antiparallel,  // strands run opposite ways
};

/// Parses "X[a,b,c,d] X[...] ... ; circles=N". An optional PD[...] wrapper and
/// commas between crossings are accepted. Throws ParseError.
Diagram parse_pd(std::string_view text);

/// Inverse of parse_pd; round-trips exactly.
std::string to_pd(const Diagram& d);

int crossing_sign(const Diagram& d, int i);
int writhe(const Diagram& d);
int positive_crossings(const Diagram& d);
int negative_crossings(const Diagram& d);

SmoothingOutcome smooth(const Diagram& d, int i);

/// Removes crossing i by the given unoriented smoothing. The orientation of
/// the result is arbitrary but valid; intended for bracket computations.
Diagram splice(const Diagram& d, int i, Splice kind);

Reduction reduce(const Diagram& d);
Diagram simplify(const Diagram& d);

/// Relabeling-invariant key. Equal for diagrams that differ only by edge
/// labels, crossing order, or reversal of every component at once.
std::string canonical_key(const Diagram& d);

/// Replaces crossing i by a twist of n crossings of the same sign. n = 1
/// returns d unchanged. Throws std::out_of_range / std::invalid_argument.
Diagram replace_crossing_with_tangle(const Diagram& d, int i, int n, TwistAxis axis = TwistAxis::parallel);

Diagram disjoint_union(const Diagram& d1, const Diagram& d2);

/// Swaps over and under at every crossing.
Diagram mirror(const Diagram& d);

/// Reverses the orientation of components()[k].
Diagram reverse_component(const Diagram& d, int k);

/// Faces of the underlying 4-valent plane graph, each as the list of ports
/// whose corner (position, position + 1) it contains.
std::vector<std::vector<Port>> faces(const Diagram& d);

/// Number of connected pieces of the crossing graph.
int connected_pieces(const Diagram& d);

/// Closure of a braid word on `strands` strands; generator +k (resp. -k) is
/// sigma_k (resp. its inverse), 1 <= k < strands. Unused strands become free
/// circles. Used for fixtures and generated test corpora.
Diagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace qal
