#pragma once

#include <stdexcept>

namespace pnlm {

/// Core NLM parameters: search window (2S+1)^2, patch (2K+1)^2, smoothing h
/// and the (known) noise level sigma. The conventional binding is h = 10 sigma.
struct NlmParams {
  int search_radius = 10;  // S
  int patch_radius = 3;    // K
  double h = 0;            // smoothing, intensity units
  double sigma = 0;        // noise std-dev, intensity units

  static NlmParams standard(double sigma, int S = 10, int K = 3) {
    NlmParams p;
    p.search_radius = S;
    p.patch_radius = K;
    p.sigma = sigma;
    p.h = 10.0 * sigma;
    return p;
  }

  int window_size() const { return 2 * search_radius + 1; }
  int offset_count() const { return window_size() * window_size(); }

  void validate() const {
    if (search_radius < 1) throw std::invalid_argument("NlmParams: search radius must be >= 1");
    if (patch_radius < 0) throw std::invalid_argument("NlmParams: patch radius must be >= 0");
    if (!(h > 0)) throw std::invalid_argument("NlmParams: h must be > 0");
    if (!(sigma >= 0)) throw std::invalid_argument("NlmParams: sigma must be >= 0");
  }
};

enum class PruneMode { none, hard, soft };

/// Weight-pruning configuration. lambda/alpha are meaningful only for
/// hard (lambda) and soft (lambda + alpha) modes.
struct PruneConfig {
  PruneMode mode = PruneMode::none;
  double lambda = 0.0;  // threshold in [0,1]
  double alpha = 100.0; // sigmoid slope at t = lambda

  static PruneConfig none() { return {PruneMode::none, 0.0, 100.0}; }
  static PruneConfig hard(double lambda) { return {PruneMode::hard, lambda, 100.0}; }
  static PruneConfig soft(double lambda, double alpha = 100.0) {
    return {PruneMode::soft, lambda, alpha};
  }

  void validate() const {
    if (mode == PruneMode::none) return;
    if (!(lambda >= 0.0 && lambda <= 1.0))
      throw std::invalid_argument("PruneConfig: lambda must be in [0,1]");
    if (mode == PruneMode::soft && !(alpha > 0))
      throw std::invalid_argument("PruneConfig: alpha must be > 0");
  }
};

}  // namespace pnlm
