#include "goeritz.hpp"

#include <gmpxx.h>

#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

namespace qal::testing {

namespace {

// Fraction-free Gaussian elimination.
mpz_class bareiss(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::int64_t goeritz_determinant(const Diagram& d) {
  if (d.crossing_count() == 0) return d.free_circles() == 1 ? 1 : 0;
  if (d.free_circles() > 0) return 0;
  if (connected_pieces(d) != 1) throw std::invalid_argument("goeritz oracle needs a connected diagram");

  const auto fs = faces(d);
  // corner (x, p) -> face index
  std::map<std::pair<int, int>, int> face_of;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    for (const Port& p : fs[f]) face_of[{p.crossing, p.position}] = f;
  }

  // Faces on the two sides of an edge get opposite colors: corners p-1 and p
  // at a crossing are separated by the edge at position p.
  std::vector<int> color(fs.size(), -1);
  color[0] = 0;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int f = todo.front();
    todo.pop();
    for (const Port& p : fs[f]) {
      for (int nb_pos : {(p.position + 1) % 4, (p.position + 3) % 4}) {
        const int g = face_of.at({p.crossing, nb_pos});
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          todo.push(g);
        } else if (color[g] == color[f]) {
          throw std::logic_error("faces are not two-colorable");
        }
      }
    }
  }

  std::vector<int> index(fs.size(), -1);
  int white = 0;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (color[f] == 0) index[f] = white++;
  }
  std::vector<std::vector<mpz_class>> g(white, std::vector<mpz_class>(white, 0));
  for (int x = 0; x < d.crossing_count(); ++x) {
    // White corners are either {0, 2} or {1, 3}; corners 1 and 3 are the
    // regions joined by the A-smoothing.
    const int p = color[face_of.at({x, 0})] == 0 ? 0 : 1;
    const int eta = p == 1 ? 1 : -1;
    const int a = index[face_of.at({x, p})];
    const int b = index[face_of.at({x, p + 2})];
    if (a == b) continue;
    g[a][b] -= eta;
    g[b][a] -= eta;
    g[a][a] += eta;
    g[b][b] += eta;
  }
  // Drop the last row and column.
  g.pop_back();
  for (auto& row : g) row.pop_back();
  const mpz_class det = abs(bareiss(g));
  return det.get_si();
}

}  // namespace qal::testing
