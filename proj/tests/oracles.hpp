// Reference implementations used only by the tests. Deliberately naive and
// independent of the library: cofactor determinants, explicit minors.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

using P4 = std::array<double, 4>;
using L6 = std::array<double, 6>;

template <std::size_t N>
using Mat = std::array<std::array<double, N>, N>;

// Laplace expansion along the first row.
template <std::size_t N>
double det(const Mat<N>& m) {
  if constexpr (N == 1) {
    return m[0][0];
  } else {
    double sum = 0.0;
    for (std::size_t col = 0; col < N; ++col) {
      if (m[0][col] == 0.0) continue;
      Mat<N - 1> minor{};
      for (std::size_t r = 1; r < N; ++r) {
        std::size_t c2 = 0;
        for (std::size_t c = 0; c < N; ++c) {
          if (c != col) minor[r - 1][c2++] = m[r][c];
        }
      }
      const double term = m[0][col] * det<N - 1>(minor);
      sum += (col % 2 == 0) ? term : -term;
    }
    return sum;
  }
}

// Points as columns.
inline double bracket(const P4& a, const P4& b, const P4& c, const P4& d) {
  Mat<4> m{};
  for (int r = 0; r < 4; ++r) {
    m[r][0] = a[r];
    m[r][1] = b[r];
    m[r][2] = c[r];
    m[r][3] = d[r];
  }
  return det<4>(m);
}

// Plucker coordinates from 2x2 minors p_ij = a_i b_j - a_j b_i of the
// point pair, indices 0..2 spatial, 3 the weight:
// direction = (p_30, p_31, p_32) read as a_w b - b_w a, moment = (p_12, p_20, p_01).
inline L6 line(const P4& a, const P4& b) {
  auto p = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
  return {p(3, 0), p(3, 1), p(3, 2), p(1, 2), p(2, 0), p(0, 1)};
}

inline double superbracket(const std::array<P4, 12>& pts) {
  Mat<6> m{};
  for (int k = 0; k < 6; ++k) {
    const L6 l = line(pts[2 * k], pts[2 * k + 1]);
    for (int c = 0; c < 6; ++c) m[k][c] = l[c];
  }
  return det<6>(m);
}

inline double triple(const std::array<double, 3>& x, const std::array<double, 3>& y,
                     const std::array<double, 3>& z) {
  return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
         x[2] * (y[0] * z[1] - y[1] * z[0]);
}

// Own generator so the tests do not share the library's sampling code.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  P4 point() {
    P4 p{uniform(), uniform(), uniform(), uniform(0.5, 1.5)};
    return p;
  }
  P4 direction() { return {uniform(), uniform(), uniform(), 0.0}; }

 private:
  std::mt19937_64 engine_;
};

inline double rel(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace oracle
