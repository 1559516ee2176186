#pragma once

// Reference implementations the suites compare against.  Everything here is
// deliberately naive: plain loops and textbook formulas, no reuse of library
// code paths beyond elementary types.

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

// Every monotone endofunction of {0..n-1}, as sorted image vectors, found by
// filtering all n^n functions.
inline std::vector<std::vector<int>> all_monotone(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(n, 0);
  while (true) {
    bool mono = true;
    for (int i = 0; i + 1 < n; ++i)
      if (img[i] > img[i + 1]) mono = false;
    if (mono) out.push_back(img);
    int i = 0;
    for (; i < n; ++i) {
      if (img[i] + 1 < n) {
        ++img[i];
        for (int r = 0; r < i; ++r) img[r] = 0;
        break;
      }
      img[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool pointwise_le(const std::vector<int>& f, const std::vector<int>& g) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] > g[i]) return false;
  return true;
}

inline Big pow_big(const Big& base, const Big& e) {
  Big r = 1;
  for (Big i = 0; i < e; ++i) r *= base;
  return r;
}

// tetra(0, y) = y, tetra(m+1, y) = tetra(m, y) ^ y.
inline Big tetra_big(const Big& m, const Big& y) {
  Big acc = y;
  for (Big i = 0; i < m; ++i) acc = pow_big(acc, y);
  return acc;
}

// Image level of a factor at level j under the composite map u (as images),
// or -1 when erased: the greatest i with u(i) <= j.
inline int level_image(const std::vector<int>& u, int j) {
  int act = -1;
  for (int i = 0; i < static_cast<int>(u.size()); ++i)
    if (u[i] <= j) act = i;
  return act;
}

}  // namespace oracle
