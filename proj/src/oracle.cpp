#include "prophet_gap/oracle.hpp"

#include <algorithm>
#include <random>

#include "prophet_gap/parallel.hpp"

namespace prophet_gap {
namespace {

constexpr std::uint64_t kShards = 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Running mean / sum of squared deviations (Welford), mergeable (Chan et al.).
struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments &other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(other.count) / total;
    count += other.count;
  }
};

class AtomSampler {
 public:
  explicit AtomSampler(const FiniteDistribution<double> &d) : atoms_(d.atoms().begin(), d.atoms().end()) {
    double running = 0.0;
    for (double w : d.weights()) cumulative_.push_back(running += w);
    cumulative_.back() = 1.0;
  }

  double operator()(std::mt19937_64 &rng) const {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return atoms_[static_cast<std::size_t>(std::min<std::ptrdiff_t>(
        it - cumulative_.begin(), static_cast<std::ptrdiff_t>(atoms_.size()) - 1))];
  }

 private:
  std::vector<double> atoms_;
  std::vector<double> cumulative_;
};

// Runs `draw(rng)` samples times across kShards deterministic shards.
template <class Draw>
McEstimate simulate(std::uint64_t samples, std::uint64_t seed, Draw draw) {
  std::vector<Moments> shards(kShards);
  parallel_for(kShards, [&](std::size_t s) {
    const std::uint64_t begin = samples * s / kShards;
    const std::uint64_t end = samples * (s + 1) / kShards;
    std::mt19937_64 rng(splitmix64(seed + s * 0x9e3779b97f4a7c15ULL));
    for (std::uint64_t k = begin; k < end; ++k) shards[s].add(draw(rng));
  });
  Moments pooled;
  for (const auto &shard : shards) pooled.merge(shard);

  McEstimate est;
  est.mean = pooled.mean;
  est.samples = pooled.count;
  est.seed = seed;
  est.algorithm = kMcAlgorithm;
  if (pooled.count > 1) {
    const double variance = pooled.m2 / static_cast<double>(pooled.count - 1);
    est.std_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(pooled.count));
  }
  return est;
}

}  // namespace

McEstimate mc_prophet(const Instance<double> &inst, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error("no-samples", "samples must be positive");
  const AtomSampler sampler(inst.dist);
  return simulate(samples, seed, [&](std::mt19937_64 &rng) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= inst.horizon; ++i)
      best = std::max(best, sampler(rng) - static_cast<double>(i) * inst.cost);
    return best;
  });
}

McEstimate mc_rule_value(const Instance<double> &inst, const std::vector<double> &thresholds,
                         std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error("no-samples", "samples must be positive");
  if (thresholds.size() != static_cast<std::size_t>(inst.horizon))
    throw Error("threshold-count-mismatch", "need one threshold per stage");
  const AtomSampler sampler(inst.dist);
  return simulate(samples, seed, [&](std::mt19937_64 &rng) {
    for (int i = 1;; ++i) {
      const double x = sampler(rng);
      if (i == inst.horizon || x >= thresholds[static_cast<std::size_t>(i - 1)])
        return x - static_cast<double>(i) * inst.cost;
    }
  });
}

}  // namespace prophet_gap
