#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace pnlm {

/// Dense row-major 2-D plane. Images, distance planes and divergence maps are
/// all Plane<Scalar> with (row, col) = (y, x) indexing.
template <class Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Working intensity type for images. Values live in a nominal [0,255] range
/// but are intentionally unclamped; quantization happens only at save time.
using Image = Plane<double>;

using Index = Eigen::Index;

/// Half-sample symmetric reflection of coordinate v into [0, n):
/// ... c b a | a b c ... Applied iteratively so any pad works even when it
/// exceeds n.
constexpr Index reflect_index(Index v, Index n) {
  while (v < 0 || v >= n) {
    if (v < 0) v = -v - 1;
    if (v >= n) v = 2 * n - 1 - v;
  }
  return v;
}

/// Image extended by `pad` pixels of reflected margin on every side.
/// Coordinates are source-based: at(r, c) is valid for r in [-pad, rows+pad).
template <class Scalar>
struct Padded {
  Plane<Scalar> data;  // (src_rows + 2 pad) x (src_cols + 2 pad)
  Index pad = 0;
  Index src_rows = 0;
  Index src_cols = 0;

  Scalar at(Index r, Index c) const { return data(r + pad, c + pad); }
  const Scalar* row_ptr(Index r, Index c0) const { return data.row(r + pad).data() + (c0 + pad); }

  auto interior() const { return data.block(pad, pad, src_rows, src_cols); }
};

/// Builds the reflected coordinate map for one axis: entry p (padded index,
/// p in [0, n + 2 pad)) holds the source index it mirrors.
inline std::vector<Index> reflection_map(Index n, Index pad) {
  std::vector<Index> map(static_cast<std::size_t>(n + 2 * pad));
  for (Index p = 0; p < n + 2 * pad; ++p) map[static_cast<std::size_t>(p)] = reflect_index(p - pad, n);
  return map;
}

template <class Scalar>
Padded<Scalar> extend(const Plane<Scalar>& img, Index pad) {
  if (pad < 0) throw std::invalid_argument("extend: pad must be >= 0");
  if (img.rows() == 0 || img.cols() == 0) throw std::invalid_argument("extend: empty image");
  Padded<Scalar> out;
  out.pad = pad;
  out.src_rows = img.rows();
  out.src_cols = img.cols();
  out.data.resize(img.rows() + 2 * pad, img.cols() + 2 * pad);
  const auto rmap = reflection_map(img.rows(), pad);
  const auto cmap = reflection_map(img.cols(), pad);
  for (Index r = 0; r < out.data.rows(); ++r)
    for (Index c = 0; c < out.data.cols(); ++c)
      out.data(r, c) = img(rmap[static_cast<std::size_t>(r)], cmap[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace pnlm
