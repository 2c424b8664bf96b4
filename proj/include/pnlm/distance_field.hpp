#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pnlm/image.hpp"
#include "pnlm/parallel.hpp"
#include "pnlm/params.hpp"

namespace pnlm {

enum class FieldStorage {
  automatic,  // cache if it fits the budget, else stream
  cached,     // cache or fail
  streaming   // always recompute planes on demand
};

struct FieldOptions {
  FieldStorage storage = FieldStorage::automatic;
  std::size_t cache_budget_mb = 1024;
  int threads = 0;
};

/// Per-offset squared patch distances
///   d_tau(i) = sum_{k in P} (y~_{i+k} - y~_{i+tau+k})^2
/// evaluated on the reflected extension y~. Each plane is produced with a
/// summed-area table over the per-offset squared-difference grid, so the cost
/// per plane is independent of the patch radius. Planes are accumulated in
/// 64-bit regardless of the storage scalar.
///
/// Either all (2S+1)^2 planes are cached, or the field is "streaming" and
/// planes are recomputed into caller scratch on demand. Immutable once built.
template <class Scalar>
class DistanceField {
 public:
  /// Reusable per-thread buffers for plane computation / streaming access.
  struct Workspace {
    Plane<double> diff;  // (H+2K) x (W+2K) squared differences
    Plane<double> sat;   // (H+2K+1) x (W+2K+1) prefix sums
    Plane<Scalar> plane; // H x W streamed plane
  };

  DistanceField() = default;

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  int search_radius() const { return S_; }
  int patch_radius() const { return K_; }
  int offset_count() const { return n_offsets_; }
  bool cached() const { return !store_.empty(); }
  const Padded<double>& extended() const { return ext_; }
  const NlmParams& params() const { return params_; }

  /// Offset index <-> (dy, dx), dy and dx in [-S, S], row-major over dy.
  std::pair<int, int> offset(int k) const {
    const int w = 2 * S_ + 1;
    return {k / w - S_, k % w - S_};
  }
  int offset_index(int dy, int dx) const { return (dy + S_) * (2 * S_ + 1) + (dx + S_); }

  /// Pointer to plane k (row-major rows x cols). In streaming mode the plane
  /// is computed into ws.plane first.
  const Scalar* plane_data(int k, Workspace& ws) const {
    if (cached()) return store_.data() + static_cast<std::size_t>(k) * plane_elems();
    auto [dy, dx] = offset(k);
    ws.plane.resize(rows_, cols_);
    compute_plane(dy, dx, ws, ws.plane.data());
    return ws.plane.data();
  }

  /// Distance at one pixel for one offset (test/diagnostic convenience; in
  /// streaming mode this recomputes the patch sum directly).
  Scalar at(Index r, Index c, int dy, int dx, Workspace& ws) const {
    if (cached()) return plane_data(offset_index(dy, dx), ws)[r * cols_ + c];
    double acc = 0;
    for (Index pr = r - K_; pr <= r + K_; ++pr)
      for (Index pc = c - K_; pc <= c + K_; ++pc) {
        const double d = ext_.at(pr, pc) - ext_.at(pr + dy, pc + dx);
        acc += d * d;
      }
    return static_cast<Scalar>(acc);
  }

  std::size_t plane_elems() const { return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_); }
  std::size_t cache_bytes() const {
    return static_cast<std::size_t>(n_offsets_) * plane_elems() * sizeof(Scalar);
  }

  /// Recomputes plane (dy, dx) into out (rows x cols row-major).
  void compute_plane(int dy, int dx, Workspace& ws, Scalar* out) const {
    const Index H = rows_, W = cols_;
    if (dy == 0 && dx == 0) {
      for (std::size_t i = 0; i < plane_elems(); ++i) out[i] = Scalar(0);
      return;
    }
    const Index K = K_, S = S_;
    const Index eh = H + 2 * K, ew = W + 2 * K;
    ws.diff.resize(eh, ew);
    ws.sat.resize(eh + 1, ew + 1);
    // diff(er, ec) = (y~_p - y~_{p+tau})^2 at source coords p = (er-K, ec-K);
    // ext row index of p is er + S (pad = S + K).
    for (Index er = 0; er < eh; ++er) {
      const double* a = ext_.data.row(er + S).data() + S;
      const double* b = ext_.data.row(er + S + dy).data() + S + dx;
      double* e = ws.diff.row(er).data();
      for (Index ec = 0; ec < ew; ++ec) {
        const double d = a[ec] - b[ec];
        e[ec] = d * d;
      }
    }
    ws.sat.row(0).setZero();
    for (Index er = 0; er < eh; ++er) {
      const double* e = ws.diff.row(er).data();
      const double* prev = ws.sat.row(er).data();
      double* cur = ws.sat.row(er + 1).data();
      double rowsum = 0;
      cur[0] = 0;
      for (Index ec = 0; ec < ew; ++ec) {
        rowsum += e[ec];
        cur[ec + 1] = prev[ec + 1] + rowsum;
      }
    }
    // Box sum over e-grid rows [i, i+2K], cols [j, j+2K] for source pixel (i, j).
    const Index span = 2 * K + 1;
    for (Index i = 0; i < H; ++i) {
      const double* top = ws.sat.row(i).data();
      const double* bot = ws.sat.row(i + span).data();
      Scalar* o = out + i * W;
      for (Index j = 0; j < W; ++j) {
        const double v = bot[j + span] - bot[j] - top[j + span] + top[j];
        o[j] = static_cast<Scalar>(v < 0 ? 0 : v);
      }
    }
  }

  template <class S2>
  friend DistanceField<S2> compute_distance_field(const Image&, const NlmParams&, const FieldOptions&);

 private:
  Index rows_ = 0, cols_ = 0;
  int S_ = 0, K_ = 0, n_offsets_ = 0;
  NlmParams params_;
  Padded<double> ext_;          // pad = S + K
  std::vector<Scalar> store_;   // empty in streaming mode
};

template <class Scalar>
DistanceField<Scalar> compute_distance_field(const Image& img, const NlmParams& params,
                                             const FieldOptions& opts = {}) {
  params.validate();
  if (img.rows() == 0 || img.cols() == 0)
    throw std::invalid_argument("compute_distance_field: empty image");
  DistanceField<Scalar> f;
  f.rows_ = img.rows();
  f.cols_ = img.cols();
  f.S_ = params.search_radius;
  f.K_ = params.patch_radius;
  f.n_offsets_ = params.offset_count();
  f.params_ = params;
  f.ext_ = extend(img, static_cast<Index>(f.S_ + f.K_));

  const std::size_t need = f.cache_bytes();
  const std::size_t budget = opts.cache_budget_mb * std::size_t(1024) * 1024;
  bool cache = false;
  switch (opts.storage) {
    case FieldStorage::automatic:
      cache = need <= budget;
      break;
    case FieldStorage::cached:
      if (need > budget)
        throw std::invalid_argument("distance field cache (" + std::to_string(need / (1024 * 1024)) +
                                    " MiB) exceeds budget (" + std::to_string(opts.cache_budget_mb) +
                                    " MiB); use streaming or raise --cache-mb");
      cache = true;
      break;
    case FieldStorage::streaming:
      cache = false;
      break;
  }
  if (cache) {
    f.store_.resize(static_cast<std::size_t>(f.n_offsets_) * f.plane_elems());
    parallel_blocks(0, f.n_offsets_, opts.threads, [&](std::int64_t lo, std::int64_t hi, int) {
      typename DistanceField<Scalar>::Workspace ws;
      for (std::int64_t k = lo; k < hi; ++k) {
        auto [dy, dx] = f.offset(static_cast<int>(k));
        f.compute_plane(dy, dx, ws, f.store_.data() + static_cast<std::size_t>(k) * f.plane_elems());
      }
    });
  }
  return f;
}

}  // namespace pnlm
