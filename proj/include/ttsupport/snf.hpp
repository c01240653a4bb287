#ifndef TTSUPPORT_SNF_HPP
#define TTSUPPORT_SNF_HPP

#include "ttsupport/matrix.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace ttsupport {

template <class T>
struct basic_snf_result {
  basic_matrix<T> U;  ///< rows x rows, unimodular
  basic_matrix<T> V;  ///< cols x cols, unimodular
  basic_matrix<T> D;  ///< U * M * V
  std::vector<T> invariant_factors;  ///< positive diagonal entries, each dividing the next

  std::size_t rank() const { return invariant_factors.size(); }
};

using SNFResult = basic_snf_result<BigInt>;

namespace detail {

template <class T>
T magnitude(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Row/column reduction with smallest-magnitude pivoting. When Track is false U and V
// are left empty and only D is produced.
template <bool Track, class T>
basic_snf_result<T> smith_reduce(basic_matrix<T> a) {
  const std::size_t m = a.rows(), n = a.cols();
  basic_snf_result<T> out;
  if constexpr (Track) {
    out.U = basic_matrix<T>::identity(m);
    out.V = basic_matrix<T>::identity(n);
  }
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if constexpr (Track) out.U.swap_rows(i, j);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if constexpr (Track) out.V.swap_cols(i, j);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const T& f) {
    a.add_row(dst, src, f);
    if constexpr (Track) out.U.add_row(dst, src, f);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const T& f) {
    a.add_col(dst, src, f);
    if constexpr (Track) out.V.add_col(dst, src, f);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    // Global smallest nonzero pivot in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_mag = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        T mag = magnitude(a(i, j));
        if (!best || mag < best_mag) {
          best = {i, j};
          best_mag = mag;
        }
      }
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        T q = a(i, t) / a(t, t);
        add_row(i, t, T(-q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        T q = a(t, j) / a(t, t);
        add_col(j, t, T(-q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote the smallest one.
        std::size_t bi = t, bj = t;
        T mag = magnitude(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && magnitude(a(i, t)) < mag) {
            mag = magnitude(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && magnitude(a(t, j)) < mag) {
            mag = magnitude(a(t, j));
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      add_row(t, *offender, T(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if constexpr (Track) out.U.negate_row(t);
    }
    out.invariant_factors.push_back(a(t, t));
  }
  out.D = std::move(a);
  return out;
}

}  // namespace detail

/// Smith normal form: unimodular U, V with U * M * V = D diagonal, d1 | d2 | ... .
template <class T>
basic_snf_result<T> snf(const basic_matrix<T>& m) {
  return detail::smith_reduce<true>(m);
}

/// Invariant factors only (no transforms tracked).
template <class T>
std::vector<T> invariant_factors(const basic_matrix<T>& m) {
  return detail::smith_reduce<false>(m).invariant_factors;
}

}  // namespace ttsupport

#endif  // TTSUPPORT_SNF_HPP
