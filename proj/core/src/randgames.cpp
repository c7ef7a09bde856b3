// Copyright 2026 The mogkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mogkit/randgames.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "mogkit/errors.hpp"

namespace mogkit {
namespace {

PayoffVector DrawVector(Rng& rng, std::size_t d, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Rational> v(d);
  for (auto& c : v) c = dist(rng);
  return PayoffVector(std::move(v));
}

void RequireRange(long lo, long hi) {
  if (lo > hi) throw InvalidArgument("payoff range lo > hi");
}

// Runs body(t) for t in [0, count) on up to `threads` workers.
template <class Body>
void ParallelFor(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t t = w; t < count; t += threads) body(t);
    });
  }
  for (auto& worker : workers) worker.join();
}

template <class T>
bool WeaklyDominates(const std::vector<T>& a, const std::vector<T>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

// Number of maximal points among real vectors (distinct almost surely).
std::size_t CountMaximal(std::vector<std::vector<double>> points) {
  std::sort(points.begin(), points.end(), std::greater<>());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!points.empty() && points.front().size() == 2) {
    std::size_t count = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
      if (p[1] > best) {
        ++count;
        best = p[1];
      }
    }
    return count;
  }
  std::vector<const std::vector<double>*> front;
  for (const auto& p : points) {
    bool dominated = std::any_of(front.begin(), front.end(),
                                 [&](const auto* f) { return WeaklyDominates(*f, p); });
    if (!dominated) front.push_back(&p);
  }
  return front.size();
}

std::vector<double> DrawSimplexPoint(Rng& rng, std::size_t d) {
  if (d <= 4) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (true) {
      std::vector<double> u(d);
      double sum = 0;
      for (auto& x : u) {
        x = unit(rng);
        sum += x;
      }
      if (sum <= 1.0) return u;
    }
  }
  // Normalized exponential spacings, with one slack coordinate.
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> e(d + 1);
  double sum = 0;
  for (auto& x : e) {
    x = expo(rng);
    sum += x;
  }
  std::vector<double> u(d);
  for (std::size_t k = 0; k < d; ++k) u[k] = e[k] / sum;
  return u;
}

}  // namespace

NormalFormGame gen_uniform_normal(std::size_t n, std::size_t alpha, std::size_t d,
                                  long lo, long hi, std::uint64_t seed) {
  RequireRange(lo, hi);
  if (n == 0 || alpha == 0 || d == 0) throw InvalidArgument("n, alpha, d must be >= 1");
  Rng rng(mix_seed(seed));
  std::vector<std::size_t> actions(n, alpha);
  const std::size_t total = num_profiles(actions);
  std::vector<std::vector<PayoffVector>> payoffs(n);
  for (auto& table : payoffs) {
    table.reserve(total);
    for (std::size_t p = 0; p < total; ++p) table.push_back(DrawVector(rng, d, lo, hi));
  }
  return NormalFormGame(d, std::move(actions), std::move(payoffs));
}

SymmetricGame gen_uniform_symmetric(std::size_t n, std::size_t alpha, std::size_t d,
                                    long lo, long hi, std::uint64_t seed) {
  RequireRange(lo, hi);
  if (n == 0 || alpha == 0 || d == 0) throw InvalidArgument("n, alpha, d must be >= 1");
  Rng rng(mix_seed(seed));
  std::vector<SymmetricEntry> entries;
  for (const auto& c : configurations(n, alpha)) {
    for (std::size_t a = 0; a < alpha; ++a) {
      if (c[a] > 0) entries.push_back({a, c, DrawVector(rng, d, lo, hi)});
    }
  }
  return SymmetricGame(n, alpha, d, std::move(entries));
}

GraphicalGame gen_uniform_graphical(std::vector<std::vector<std::size_t>> scopes,
                                    std::size_t alpha, std::size_t d, long lo,
                                    long hi, std::uint64_t seed) {
  RequireRange(lo, hi);
  if (scopes.empty() || alpha == 0 || d == 0) {
    throw InvalidArgument("n, alpha, d must be >= 1");
  }
  Rng rng(mix_seed(seed));
  std::vector<std::size_t> actions(scopes.size(), alpha);
  std::vector<std::vector<PayoffVector>> tables(scopes.size());
  for (std::size_t i = 0; i < scopes.size(); ++i) {
    std::vector<std::size_t> local(scopes[i].size(), alpha);
    const std::size_t size = num_profiles(local);
    tables[i].reserve(size);
    for (std::size_t p = 0; p < size; ++p) tables[i].push_back(DrawVector(rng, d, lo, hi));
  }
  return GraphicalGame(d, std::move(actions), std::move(scopes), std::move(tables));
}

std::vector<std::vector<std::size_t>> grid_scopes(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw InvalidArgument("grid dimensions must be >= 1");
  std::vector<std::vector<std::size_t>> scopes(n1 * n2);
  for (std::size_t r = 0; r < n1; ++r) {
    for (std::size_t c = 0; c < n2; ++c) {
      auto& s = scopes[r * n2 + c];
      s.push_back(r * n2 + c);
      if (r > 0) s.push_back((r - 1) * n2 + c);
      if (r + 1 < n1) s.push_back((r + 1) * n2 + c);
      if (c > 0) s.push_back(r * n2 + c - 1);
      if (c + 1 < n2) s.push_back(r * n2 + c + 1);
      std::sort(s.begin(), s.end());
    }
  }
  return scopes;
}

GraphicalGame gen_uniform_grid_graphical(std::size_t n1, std::size_t n2,
                                         std::size_t alpha, std::size_t d, long lo,
                                         long hi, std::uint64_t seed) {
  return gen_uniform_graphical(grid_scopes(n1, n2), alpha, d, lo, hi, seed);
}

// ---------------------------------------------------------------------------

ResponseTables::ResponseTables(std::size_t n, std::size_t alpha, std::size_t beta,
                               std::vector<std::vector<std::uint64_t>> masks)
    : n_(n), alpha_(alpha), beta_(beta), masks_(std::move(masks)) {
  if (n_ == 0 || alpha_ == 0 || alpha_ > 64) {
    throw InvalidArgument("response tables need n >= 1 and 1 <= alpha <= 64");
  }
  if (beta_ == 0 || beta_ > alpha_) throw InvalidArgument("beta must be in [1, alpha]");
  cells_ = num_profiles(std::vector<std::size_t>(n_ - 1, alpha_));
  if (masks_.size() != n_) throw InvalidArgument("one mask table per agent expected");
  for (const auto& agent_masks : masks_) {
    if (agent_masks.size() != cells_) throw InvalidArgument("mask table size mismatch");
    for (std::uint64_t m : agent_masks) {
      if (static_cast<std::size_t>(std::popcount(m)) != beta_ ||
          (alpha_ < 64 && (m >> alpha_) != 0)) {
        throw InvalidArgument("every cell must mark exactly beta valid actions");
      }
    }
  }
}

ResponseTables gen_response_tables(std::size_t n, std::size_t alpha, std::size_t beta,
                                   Rng& rng) {
  if (n == 0 || alpha == 0 || alpha > 64) {
    throw InvalidArgument("response tables need n >= 1 and 1 <= alpha <= 64");
  }
  if (beta == 0 || beta > alpha) throw InvalidArgument("beta must be in [1, alpha]");
  const std::size_t cells = num_profiles(std::vector<std::size_t>(n - 1, alpha));
  std::vector<std::vector<std::uint64_t>> masks(n, std::vector<std::uint64_t>(cells));
  std::vector<std::size_t> order(alpha);
  for (auto& agent_masks : masks) {
    for (auto& m : agent_masks) {
      // Partial Fisher-Yates: the first beta slots are a uniform beta-subset.
      std::iota(order.begin(), order.end(), std::size_t{0});
      for (std::size_t j = 0; j < beta; ++j) {
        std::uniform_int_distribution<std::size_t> pick(j, alpha - 1);
        std::swap(order[j], order[pick(rng)]);
      }
      m = 0;
      for (std::size_t j = 0; j < beta; ++j) m |= std::uint64_t{1} << order[j];
    }
  }
  return ResponseTables(n, alpha, beta, std::move(masks));
}

ResponseTables gen_response_tables(std::size_t n, std::size_t alpha, std::size_t beta,
                                   std::uint64_t seed) {
  Rng rng(mix_seed(seed));
  return gen_response_tables(n, alpha, beta, rng);
}

std::uint64_t count_pn(const ResponseTables& tables) {
  const std::size_t n = tables.num_agents();
  const std::size_t alpha = tables.alpha();
  const std::vector<std::size_t> actions(n, alpha);
  const std::size_t total = num_profiles(actions);
  std::uint64_t count = 0;
  std::size_t stride = total;
  std::vector<std::size_t> strides(n);
  for (std::size_t i = 0; i < n; ++i) strides[i] = (stride /= alpha);
  for (std::size_t p = 0; p < total; ++p) {
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i) {
      const std::size_t s = strides[i];
      const std::size_t own = (p / s) % alpha;
      const std::size_t cell = (p / (s * alpha)) * s + p % s;
      stable = tables.marked(i, cell, own);
    }
    count += stable;
  }
  return count;
}

ZMoments estimate_z_moments(std::size_t n, std::size_t alpha, std::size_t beta,
                            std::size_t trials, std::uint64_t seed,
                            const std::vector<double>& gammas, unsigned threads) {
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  ZMoments out;
  out.gammas = gammas;
  out.samples.assign(trials, 0);
  ParallelFor(trials, threads, [&](std::size_t t) {
    Rng rng = stream_rng(seed, t);
    out.samples[t] = count_pn(gen_response_tables(n, alpha, beta, rng));
  });

  double sum = 0;
  for (auto z : out.samples) sum += static_cast<double>(z);
  out.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double sq = 0;
    for (auto z : out.samples) sq += (static_cast<double>(z) - out.mean) * (static_cast<double>(z) - out.mean);
    out.variance = sq / static_cast<double>(trials - 1);
  }
  const double center = std::pow(static_cast<double>(beta), static_cast<double>(n));
  for (double gamma : gammas) {
    std::size_t inside = 0;
    for (auto z : out.samples) {
      const double zd = static_cast<double>(z);
      inside += zd >= (1 - gamma) * center && zd <= (1 + gamma) * center;
    }
    out.tail_freq.push_back(static_cast<double>(inside) / static_cast<double>(trials));
  }
  return out;
}

double chebyshev_tail_bound(std::size_t n, std::size_t beta, double gamma) {
  return 1.0 - 1.0 / (gamma * gamma *
                      std::pow(static_cast<double>(beta), static_cast<double>(n)));
}

FrontSizeEstimate simplex_front_size(std::size_t alpha, std::size_t d,
                                     std::size_t trials, std::uint64_t seed,
                                     unsigned threads) {
  if (alpha == 0 || d == 0) throw InvalidArgument("alpha and d must be >= 1");
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  FrontSizeEstimate out;
  out.samples.assign(trials, 0);
  ParallelFor(trials, threads, [&](std::size_t t) {
    Rng rng = stream_rng(seed, t);
    std::vector<std::vector<double>> points;
    points.reserve(alpha);
    for (std::size_t a = 0; a < alpha; ++a) points.push_back(DrawSimplexPoint(rng, d));
    out.samples[t] = CountMaximal(std::move(points));
  });
  double sum = 0;
  for (auto b : out.samples) sum += static_cast<double>(b);
  out.mean = sum / static_cast<double>(trials);
  return out;
}

double simplex_front_asymptote(std::size_t alpha, std::size_t d) {
  const double dd = static_cast<double>(d);
  return dd / std::pow(std::tgamma(dd + 1), 1.0 / dd) *
         std::pow(static_cast<double>(alpha), (dd - 1) / dd);
}

}  // namespace mogkit
