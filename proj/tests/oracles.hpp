#pragma once

// Naive reference checks, kept independent of the library's axiom scanner
// so the two can disagree in tests.

#include <optional>
#include <vector>

#include "nsalg/magma.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline Table table_of(const nsalg::FiniteMagma& m) {
  Table t(m.order(), std::vector<int>(m.order()));
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y) t[x][y] = m.apply(x, y);
  return t;
}

inline bool associative(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
  return true;
}

inline bool left_invertive(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[z][y]][x]) return false;
  return true;
}

inline bool medial(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (t[t[a][b]][t[c][d]] != t[t[a][c]][t[b][d]]) return false;
  return true;
}

inline bool commutative(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t[x][y] != t[y][x]) return false;
  return true;
}

inline bool latin_square(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x) {
    std::vector<int> row(n, 0), col(n, 0);
    for (int y = 0; y < n; ++y) {
      ++row[t[x][y]];
      ++col[t[y][x]];
    }
    for (int y = 0; y < n; ++y)
      if (row[y] != 1 || col[y] != 1) return false;
  }
  return true;
}

inline std::optional<int> two_sided_identity(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int s = 0; s < n; ++s) ok = ok && t[e][s] == s && t[s][e] == s;
    if (ok) return e;
  }
  return std::nullopt;
}

// Fixpoint closure by repeated full passes.
inline std::vector<int> closure_of(const Table& t, std::vector<int> seed) {
  const int n = static_cast<int>(t.size());
  std::vector<char> in(n, 0);
  for (int x : seed) in[x] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (in[x] && in[y] && !in[t[x][y]]) {
          in[t[x][y]] = 1;
          changed = true;
        }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

}  // namespace oracle
