#include "qal/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "disjoint_set.hpp"

namespace qal {

namespace {

constexpr std::array<int, 4> kStrandPartner{2, 3, 0, 1};
constexpr std::array<int, 4> kAPartner{1, 0, 3, 2};
constexpr std::array<int, 4> kBPartner{3, 2, 1, 0};

Quad rotate2(const Quad& q) { return {q[2], q[3], q[0], q[1]}; }

}  // namespace

namespace detail {

// An unoriented PD-like structure with arbitrary positive edge ids.
struct RawDiagram {
  std::vector<Quad> quads;
  int free_circles = 0;
};

// Reports where a given edge id ends (enters a crossing) in raw indexing, or
// nullopt when the orientation has to be inferred from the labels.
using HeadHint = std::function<std::optional<Port>(int)>;

struct AssemblyError : std::invalid_argument {
  AssemblyError(const std::string& what, int crossing) : std::invalid_argument(what), crossing(crossing) {}
  int crossing;
};

}  // namespace detail

using detail::AssemblyError;
using detail::HeadHint;
using detail::RawDiagram;

// Orients, renumbers and validates a raw diagram.
class DiagramAssembler {
 public:
  DiagramAssembler(const RawDiagram& raw, const HeadHint& hint) : raw_(raw), hint_(hint) {}

  Diagram run() {
    collect_occurrences();
    const int n = static_cast<int>(raw_.quads.size());
    under_entry_.assign(n, -1);
    over_entry_.assign(n, -1);

    Diagram d;
    d.free_circles_ = raw_.free_circles;
    int next_label = 1;
    for (const auto& [id, ports] : occ_) {
      if (labels_.count(id)) continue;
      std::vector<Step> steps = orient_component(id);
      std::size_t start = 0;
      if (steps.size() == 2 && !has_under(steps)) {
        // Over-only two-edge component: labels alone cannot fix its direction.
        // Start numbering at the edge entering the lower-indexed crossing so
        // that parse_pd reads the same orientation back.
        if (steps[1].head.crossing < steps[0].head.crossing) start = 1;
      }
      Component comp{next_label, static_cast<int>(steps.size())};
      for (std::size_t k = 0; k < steps.size(); ++k) {
        const Step& s = steps[(start + k) % steps.size()];
        labels_[s.edge] = next_label++;
        const int x = s.head.crossing;
        if (s.head.position % 2 == 0) {
          under_entry_[x] = s.head.position;
        } else {
          over_entry_[x] = s.head.position;
        }
      }
      d.components_.push_back(comp);
    }

    d.crossings_.resize(n);
    d.signs_.resize(n);
    for (int x = 0; x < n; ++x) {
      Quad q;
      for (int p = 0; p < 4; ++p) q[p] = labels_.at(raw_.quads[x][p]);
      int over = over_entry_[x];
      if (under_entry_[x] == 2) {
        q = rotate2(q);
        over = (over + 2) % 4;
      }
      d.crossings_[x].edges = q;
      d.signs_[x] = static_cast<std::int8_t>(over == 3 ? 1 : -1);
    }
    if (n == 0 && d.free_circles_ == 0) throw AssemblyError("empty diagram", -1);
    d.index_ports();
    return d;
  }

 private:
  struct Step {
    int edge;
    Port head;
  };

  void collect_occurrences() {
    for (int x = 0; x < static_cast<int>(raw_.quads.size()); ++x) {
      for (int p = 0; p < 4; ++p) occ_[raw_.quads[x][p]].push_back({x, p});
    }
    for (const auto& [id, ports] : occ_) {
      if (ports.size() != 2) {
        throw AssemblyError("edge " + std::to_string(id) + " appears " + std::to_string(ports.size()) +
                                " time(s), expected 2",
                            ports.front().crossing);
      }
    }
  }

  Port other_end(int edge, Port p) const {
    const auto& ports = occ_.at(edge);
    return ports[0] == p ? ports[1] : ports[0];
  }

  std::vector<Step> traverse(int start_edge, Port head) const {
    std::vector<Step> steps;
    const std::size_t limit = occ_.size() + 1;
    int edge = start_edge;
    while (true) {
      steps.push_back({edge, head});
      if (steps.size() > limit) throw AssemblyError("broken traversal through edge " + std::to_string(start_edge), head.crossing);
      const Port exit{head.crossing, (head.position + 2) % 4};
      edge = raw_.quads[exit.crossing][exit.position];
      head = other_end(edge, exit);
      if (edge == start_edge) {
        if (!(head == steps.front().head)) {
          throw AssemblyError("broken traversal through edge " + std::to_string(start_edge), head.crossing);
        }
        break;
      }
    }
    return steps;
  }

  static bool has_under(const std::vector<Step>& steps) {
    return std::any_of(steps.begin(), steps.end(), [](const Step& s) { return s.head.position % 2 == 0; });
  }

  std::vector<Step> orient_component(int id) const {
    if (auto head = hint_ ? hint_(id) : std::nullopt) return traverse(id, *head);

    const auto& ports = occ_.at(id);
    std::vector<Step> fwd = traverse(id, ports[1]);
    bool along = false;
    bool against = false;
    int conflict = -1;
    for (const Step& s : fwd) {
      if (s.head.position == 0) along = true;
      if (s.head.position == 2) {
        against = true;
        conflict = s.head.crossing;
      }
    }
    if (along && against) {
      throw AssemblyError("incoming under-strands disagree along the component through edge " + std::to_string(id),
                          conflict);
    }
    bool reverse = against;
    if (!along && !against) {
      const std::size_t len = fwd.size();
      if (len >= 3) {
        reverse = fwd[1].edge > fwd[len - 1].edge;
      } else if (len == 2) {
        const int low = std::min(fwd[0].head.crossing, fwd[1].head.crossing);
        const Step& entering = fwd[0].head.crossing == low ? fwd[0] : fwd[1];
        reverse = entering.edge != id;
      }
    }
    return reverse ? traverse(id, ports[0]) : fwd;
  }

  const RawDiagram& raw_;
  const HeadHint& hint_;
  std::map<int, std::vector<Port>> occ_;
  std::map<int, int> labels_;
  std::vector<int> under_entry_;
  std::vector<int> over_entry_;
};

namespace {

Diagram assemble(const RawDiagram& raw, const HeadHint& hint) { return DiagramAssembler(raw, hint).run(); }

RawDiagram raw_of(const Diagram& d) {
  RawDiagram raw;
  for (const Crossing& c : d.crossings()) raw.quads.push_back(c.edges);
  raw.free_circles = d.free_circles();
  return raw;
}

struct Removal {
  int crossing;
  const std::array<int, 4>* partner;
};

// Deletes crossings, joining their positions by the given pairings. The
// orientation of each resulting component follows the original direction of
// its smallest surviving label.
Diagram remove_crossings(const Diagram& d, const std::vector<Removal>& removals) {
  const int n = d.crossing_count();
  std::vector<const std::array<int, 4>*> partner(n, nullptr);
  for (const Removal& r : removals) partner.at(r.crossing) = r.partner;

  detail::DisjointSet dsu(d.edge_count() + 1);
  for (int x = 0; x < n; ++x) {
    if (!partner[x]) continue;
    const Quad& q = d.crossing(x).edges;
    for (int p = 0; p < 4; ++p) dsu.unite(q[p], q[(*partner[x])[p]]);
  }

  std::vector<int> new_index(n, -1);
  RawDiagram raw;
  std::set<int> used_roots;
  for (int x = 0; x < n; ++x) {
    if (partner[x]) continue;
    new_index[x] = static_cast<int>(raw.quads.size());
    Quad q = d.crossing(x).edges;
    for (int& e : q) {
      e = dsu.find(e);
      used_roots.insert(e);
    }
    raw.quads.push_back(q);
  }
  std::set<int> all_roots;
  for (int e = 1; e <= d.edge_count(); ++e) all_roots.insert(dsu.find(e));
  raw.free_circles = d.free_circles() + static_cast<int>(all_roots.size() - used_roots.size());

  HeadHint hint = [&](int root) -> std::optional<Port> {
    Port port = d.head(root);
    for (int guard = 0; guard <= 4 * n; ++guard) {
      if (!partner[port.crossing]) return Port{new_index[port.crossing], port.position};
      const int q = (*partner[port.crossing])[port.position];
      const Port exit{port.crossing, q};
      const int f = d.crossing(port.crossing).edges[q];
      port = d.tail(f) == exit ? d.head(f) : d.tail(f);
    }
    throw std::logic_error("remove_crossings: strand does not reach a surviving crossing");
  };
  return assemble(raw, hint);
}

}  // namespace

Diagram::Diagram() { index_ports(); }

Diagram Diagram::unlink(int circles) {
  if (circles < 1) throw std::invalid_argument("unlink needs at least one circle");
  Diagram d;
  d.free_circles_ = circles;
  return d;
}

const Crossing& Diagram::crossing(int i) const {
  if (i < 0 || i >= crossing_count()) {
    throw std::out_of_range("crossing index " + std::to_string(i) + " out of range [0, " +
                            std::to_string(crossing_count()) + ")");
  }
  return crossings_[i];
}

int Diagram::sign(int i) const {
  crossing(i);
  return signs_[i];
}

void Diagram::index_ports() {
  const int edges = edge_count();
  heads_.assign(edges, Port{-1, -1});
  tails_.assign(edges, Port{-1, -1});
  component_index_.assign(edges, -1);
  for (int x = 0; x < crossing_count(); ++x) {
    const Quad& q = crossings_[x].edges;
    heads_[q[0] - 1] = {x, 0};
    tails_[q[2] - 1] = {x, 2};
    if (signs_[x] > 0) {
      heads_[q[3] - 1] = {x, 3};
      tails_[q[1] - 1] = {x, 1};
    } else {
      heads_[q[1] - 1] = {x, 1};
      tails_[q[3] - 1] = {x, 3};
    }
  }
  for (int k = 0; k < static_cast<int>(components_.size()); ++k) {
    for (int j = 0; j < components_[k].length; ++j) component_index_[components_[k].first_label - 1 + j] = k;
  }
}

int Diagram::component_of(int edge) const {
  if (edge < 1 || edge > edge_count()) throw std::out_of_range("edge label " + std::to_string(edge) + " out of range");
  return component_index_[edge - 1];
}

int Diagram::successor(int edge) const {
  const Component& c = components_[component_of(edge)];
  return edge == c.first_label + c.length - 1 ? c.first_label : edge + 1;
}

Port Diagram::head(int edge) const {
  component_of(edge);
  return heads_[edge - 1];
}

Port Diagram::tail(int edge) const {
  component_of(edge);
  return tails_[edge - 1];
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class PdReader {
 public:
  explicit PdReader(std::string_view text) : text_(text) {}

  Diagram read() {
    skip_separators();
    bool wrapped = false;
    if (text_.substr(pos_, 3) == "PD[") {
      wrapped = true;
      pos_ += 3;
    }
    while (true) {
      skip_separators();
      if (at_end()) break;
      const char c = text_[pos_];
      if (c == 'X') {
        read_crossing();
      } else if (c == ']' && wrapped) {
        ++pos_;
        wrapped = false;
      } else if (c == ';') {
        ++pos_;
        read_circles();
      } else {
        fail("unexpected character '" + std::string(1, c) + "'");
      }
    }
    if (wrapped) fail("missing ']' closing PD[");
    if (raw_.quads.empty() && raw_.free_circles == 0) throw ParseError("empty diagram", 1);

    std::map<int, int> count;
    std::map<int, std::size_t> first_seen;
    for (std::size_t x = 0; x < raw_.quads.size(); ++x) {
      for (int e : raw_.quads[x]) {
        ++count[e];
        first_seen.try_emplace(e, columns_[x]);
      }
    }
    for (const auto& [e, k] : count) {
      if (k != 2) {
        throw ParseError("edge " + std::to_string(e) + " appears " + std::to_string(k) + " time(s), expected 2",
                         first_seen[e]);
      }
    }

    Diagram d;
    try {
      d = assemble(raw_, HeadHint{});
    } catch (const AssemblyError& err) {
      throw ParseError(err.what(), err.crossing >= 0 ? columns_[err.crossing] : 1);
    }
    if (d.crossing_count() > 0) {
      const auto face_count = faces(d).size();
      const auto expected = static_cast<std::size_t>(d.crossing_count() + 2 * connected_pieces(d));
      if (face_count != expected) {
        throw ParseError("non-planar code: " + std::to_string(face_count) + " faces, expected " +
                             std::to_string(expected),
                         columns_.front());
      }
    }
    return d;
  }

 private:
  void read_crossing() {
    const std::size_t column = pos_ + 1;
    ++pos_;
    if (at_end() || text_[pos_] != '[') fail("malformed quadruple: expected '[' after X");
    ++pos_;
    Quad q{};
    for (int k = 0; k < 4; ++k) {
      skip_space();
      if (k > 0) {
        if (at_end() || text_[pos_] != ',') fail("malformed quadruple: expected 4 edge labels");
        ++pos_;
        skip_space();
      }
      q[k] = read_label();
    }
    skip_space();
    if (at_end() || text_[pos_] != ']') fail("malformed quadruple: expected ']'");
    ++pos_;
    raw_.quads.push_back(q);
    columns_.push_back(column);
  }

  void read_circles() {
    skip_space();
    constexpr std::string_view key = "circles";
    if (text_.substr(pos_, key.size()) != key) fail("expected 'circles=N'");
    pos_ += key.size();
    skip_space();
    if (at_end() || text_[pos_] != '=') fail("expected '=' after circles");
    ++pos_;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected circle count");
    raw_.free_circles = read_number();
  }

  int read_label() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("malformed quadruple: expected a positive edge label");
    }
    const std::size_t column = pos_ + 1;
    const int v = read_number();
    if (v <= 0) throw ParseError("malformed quadruple: edge labels must be positive", column);
    return v;
  }

  int read_number() {
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  std::string_view text_;
  std::size_t pos_ = 0;
  RawDiagram raw_;
  std::vector<std::size_t> columns_;
};

}  // namespace

Diagram parse_pd(std::string_view text) { return PdReader(text).read(); }

std::string to_pd(const Diagram& d) {
  std::ostringstream out;
  if (d.crossing_count() == 0) {
    out << "PD[]; circles=" << d.free_circles();
    return out.str();
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Quad& q = d.crossing(x).edges;
    if (x > 0) out << ' ';
    out << "X[" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ']';
  }
  if (d.free_circles() > 0) out << "; circles=" << d.free_circles();
  return out.str();
}

// ---------------------------------------------------------------------------
// Signs and smoothing

int crossing_sign(const Diagram& d, int i) { return d.sign(i); }

int positive_crossings(const Diagram& d) {
  int k = 0;
  for (int i = 0; i < d.crossing_count(); ++i) k += d.sign(i) > 0;
  return k;
}

int negative_crossings(const Diagram& d) { return d.crossing_count() - positive_crossings(d); }

int writhe(const Diagram& d) { return positive_crossings(d) - negative_crossings(d); }

SmoothingOutcome smooth(const Diagram& d, int i) {
  const int s = d.sign(i);
  // The A-smoothing is orientation-compatible exactly at positive crossings.
  const auto* coherent = s > 0 ? &kAPartner : &kBPartner;
  const auto* incoherent = s > 0 ? &kBPartner : &kAPartner;
  SmoothingOutcome out{remove_crossings(d, {{i, coherent}}), remove_crossings(d, {{i, incoherent}}), 0, s};
  out.e = s > 0 ? negative_crossings(out.one_smoothing) - negative_crossings(d)
                : positive_crossings(out.one_smoothing) - positive_crossings(d);
  return out;
}

Diagram splice(const Diagram& d, int i, Splice kind) {
  d.crossing(i);
  return remove_crossings(d, {{i, kind == Splice::A ? &kAPartner : &kBPartner}});
}

// ---------------------------------------------------------------------------
// Faces and simplification

std::vector<std::vector<Port>> faces(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  std::vector<std::vector<Port>> out;
  for (int x = 0; x < n; ++x) {
    for (int p = 0; p < 4; ++p) {
      if (seen[x][p]) continue;
      std::vector<Port> face;
      Port cur{x, p};
      while (!seen[cur.crossing][cur.position]) {
        seen[cur.crossing][cur.position] = true;
        face.push_back(cur);
        const int e = d.crossing(cur.crossing).edges[cur.position];
        const Port far = d.head(e) == cur ? d.tail(e) : d.head(e);
        cur = {far.crossing, (far.position + 1) % 4};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

int connected_pieces(const Diagram& d) {
  detail::DisjointSet dsu(d.crossing_count());
  for (int e = 1; e <= d.edge_count(); ++e) dsu.unite(d.head(e).crossing, d.tail(e).crossing);
  return dsu.sets();
}

namespace {

std::optional<int> find_kink(const Diagram& d, int x) {
  const Quad& q = d.crossing(x).edges;
  for (int p = 0; p < 4; ++p) {
    if (q[p] == q[(p + 1) % 4]) return p;
  }
  return std::nullopt;
}

// Partner crossing of an R2 bigon at x, if any.
std::optional<int> find_r2(const std::vector<std::vector<Port>>& fs, int x) {
  for (const auto& face : fs) {
    if (face.size() != 2) continue;
    const Port u = face[0];
    const Port v = face[1];
    if (u.crossing == v.crossing) continue;
    if (u.crossing != x && v.crossing != x) continue;
    // The edge leaving u lands at position v.position - 1 of v's crossing.
    const int far_pos = (v.position + 3) % 4;
    if (u.position % 2 == far_pos % 2) return u.crossing == x ? v.crossing : u.crossing;
  }
  return std::nullopt;
}

}  // namespace

Reduction reduce(const Diagram& d) {
  Reduction r{d};
  bool changed = true;
  while (changed) {
    changed = false;
    const Diagram& cur = r.diagram;
    const auto fs = faces(cur);
    for (int x = 0; x < cur.crossing_count() && !changed; ++x) {
      if (auto p = find_kink(cur, x)) {
        (*p % 2 == 0 ? r.a_kinks : r.b_kinks) += 1;
        r.diagram = remove_crossings(cur, {{x, &kStrandPartner}});
        changed = true;
      } else if (auto y = find_r2(fs, x)) {
        r.diagram = remove_crossings(cur, {{x, &kStrandPartner}, {*y, &kStrandPartner}});
        r.r2_moves += 1;
        changed = true;
      }
    }
  }
  return r;
}

Diagram simplify(const Diagram& d) { return reduce(d).diagram; }

// ---------------------------------------------------------------------------
// Canonical key

namespace {

std::vector<int> piece_code(const Diagram& d, const std::vector<int>& piece_crossings, int start_edge, bool reversed) {
  const int edges = d.edge_count();
  std::vector<int> label(edges + 1, 0);
  std::vector<char> found(d.crossing_count(), 0);
  std::vector<int> queue;
  int next = 1;

  auto flow = [&](int e) {
    if (!reversed) return d.successor(e);
    const Component& c = d.components()[d.component_of(e)];
    return e == c.first_label ? c.first_label + c.length - 1 : e - 1;
  };
  auto quad_of = [&](int x) { return reversed ? rotate2(d.crossing(x).edges) : d.crossing(x).edges; };
  auto run_component = [&](int s) {
    int e = s;
    do {
      label[e] = next++;
      const int x = reversed ? d.tail(e).crossing : d.head(e).crossing;
      if (!found[x]) {
        found[x] = 1;
        queue.push_back(x);
      }
      e = flow(e);
    } while (e != s);
  };

  run_component(start_edge);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Quad q = quad_of(queue[qi]);
    for (int e : q) {
      if (!label[e]) run_component(e);
    }
  }

  std::vector<std::array<int, 5>> rows;
  rows.reserve(piece_crossings.size());
  for (int x : piece_crossings) {
    const Quad q = quad_of(x);
    rows.push_back({label[q[0]], label[q[1]], label[q[2]], label[q[3]], d.sign(x)});
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> code;
  code.reserve(rows.size() * 5);
  for (const auto& r : rows) code.insert(code.end(), r.begin(), r.end());
  return code;
}

}  // namespace

std::string canonical_key(const Diagram& d) {
  detail::DisjointSet dsu(d.crossing_count());
  for (int e = 1; e <= d.edge_count(); ++e) dsu.unite(d.head(e).crossing, d.tail(e).crossing);
  std::map<int, std::vector<int>> pieces;
  for (int x = 0; x < d.crossing_count(); ++x) pieces[dsu.find(x)].push_back(x);

  std::vector<std::string> piece_keys;
  for (const auto& [root, xs] : pieces) {
    std::vector<int> best;
    for (int x : xs) {
      for (int e : d.crossing(x).edges) {
        for (bool rev : {false, true}) {
          std::vector<int> code = piece_code(d, xs, e, rev);
          if (best.empty() || code < best) best = std::move(code);
        }
      }
    }
    std::string s;
    for (std::size_t k = 0; k < best.size(); ++k) {
      if (k) s += (k % 5 == 0) ? ';' : ',';
      s += std::to_string(best[k]);
    }
    piece_keys.push_back(std::move(s));
  }
  std::sort(piece_keys.begin(), piece_keys.end());
  std::string key = "n" + std::to_string(d.crossing_count()) + "c" + std::to_string(d.free_circles());
  for (const auto& pk : piece_keys) key += "|" + pk;
  return key;
}

// ---------------------------------------------------------------------------
// Constructions

Diagram replace_crossing_with_tangle(const Diagram& d, int i, int n, TwistAxis axis) {
  const Quad& x = d.crossing(i).edges;
  if (n < 1) throw std::invalid_argument("twist length must be at least 1");
  if (n == 1) return d;

  // Two ways to stack a crossing of the same type: gluing positions (1,2) of
  // one crossing to (0,3) of the next, or (3,2) to (0,1). The first is the
  // braid-like stacking for a positive crossing, the second for a negative one.
  const bool positive = d.sign(i) > 0;
  const bool first_pattern = (axis == TwistAxis::parallel) == positive;

  int fresh = d.edge_count() + 1;
  std::vector<Quad> chain(n);
  int in_a = x[0];
  int in_b = first_pattern ? x[3] : x[1];
  for (int k = 0; k < n; ++k) {
    const bool last = k == n - 1;
    Quad& y = chain[k];
    if (first_pattern) {
      y = {in_a, last ? x[1] : fresh++, last ? x[2] : fresh++, in_b};
      in_a = y[1];
      in_b = y[2];
    } else {
      y = {in_a, in_b, last ? x[2] : fresh++, last ? x[3] : fresh++};
      in_a = y[3];
      in_b = y[2];
    }
  }

  RawDiagram raw;
  raw.free_circles = d.free_circles();
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (c == i) {
      raw.quads.insert(raw.quads.end(), chain.begin(), chain.end());
    } else {
      raw.quads.push_back(d.crossing(c).edges);
    }
  }
  auto map_port = [&](Port p) {
    if (p.crossing < i) return p;
    if (p.crossing > i) return Port{p.crossing + n - 1, p.position};
    const bool at_first = first_pattern ? (p.position == 0 || p.position == 3) : (p.position == 0 || p.position == 1);
    return Port{at_first ? i : i + n - 1, p.position};
  };
  return assemble(raw, [&](int e) -> std::optional<Port> { return map_port(d.head(e)); });
}

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
  RawDiagram raw = raw_of(d1);
  const int shift = d1.edge_count();
  const int offset = d1.crossing_count();
  for (const Crossing& c : d2.crossings()) {
    Quad q = c.edges;
    for (int& e : q) e += shift;
    raw.quads.push_back(q);
  }
  raw.free_circles += d2.free_circles();
  return assemble(raw, [&](int e) -> std::optional<Port> {
    if (e <= shift) return d1.head(e);
    Port p = d2.head(e - shift);
    return Port{p.crossing + offset, p.position};
  });
}

Diagram mirror(const Diagram& d) {
  RawDiagram raw;
  raw.free_circles = d.free_circles();
  std::vector<int> shift(d.crossing_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Quad& q = d.crossing(x).edges;
    // The incoming over-strand becomes the incoming under-strand.
    shift[x] = d.sign(x) > 0 ? 1 : 3;
    Quad m{};
    for (int p = 0; p < 4; ++p) m[(p + shift[x]) % 4] = q[p];
    raw.quads.push_back(m);
  }
  return assemble(raw, [&](int e) -> std::optional<Port> {
    Port p = d.head(e);
    return Port{p.crossing, (p.position + shift[p.crossing]) % 4};
  });
}

Diagram reverse_component(const Diagram& d, int k) {
  if (k < 0 || k >= static_cast<int>(d.components().size())) throw std::out_of_range("component index out of range");
  return assemble(raw_of(d), [&](int e) -> std::optional<Port> {
    return d.component_of(e) == k ? d.tail(e) : d.head(e);
  });
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  std::vector<int> bottom(strands);
  std::vector<int> cur(strands);
  int fresh = 1;
  for (int s = 0; s < strands; ++s) bottom[s] = cur[s] = fresh++;

  RawDiagram raw;
  std::map<int, Port> head;
  for (int g : word) {
    const int k = g > 0 ? g : -g;
    if (g == 0 || k >= strands) throw std::invalid_argument("braid generator out of range: " + std::to_string(g));
    const int l = k - 1;
    const int r = k;
    const int x = static_cast<int>(raw.quads.size());
    const int l_in = cur[l];
    const int r_in = cur[r];
    const int l_out = fresh++;
    const int r_out = fresh++;
    if (g > 0) {
      raw.quads.push_back({r_in, r_out, l_out, l_in});
      head[r_in] = {x, 0};
      head[l_in] = {x, 3};
    } else {
      raw.quads.push_back({l_in, r_in, r_out, l_out});
      head[l_in] = {x, 0};
      head[r_in] = {x, 1};
    }
    cur[l] = l_out;
    cur[r] = r_out;
  }
  for (int s = 0; s < strands; ++s) {
    if (cur[s] == bottom[s]) {
      raw.free_circles += 1;
      continue;
    }
    for (Quad& q : raw.quads) {
      for (int& e : q) {
        if (e == cur[s]) e = bottom[s];
      }
    }
  }
  if (raw.quads.empty()) return Diagram::unlink(strands);
  return assemble(raw, [&](int e) -> std::optional<Port> { return head.at(e); });
}

}  // namespace qal
