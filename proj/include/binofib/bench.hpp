/// @file bench.hpp
/// @brief Wall-clock comparison of direct summation against a closed form.
#ifndef BINOFIB_BENCH_HPP
#define BINOFIB_BENCH_HPP

#include <binofib/closed_forms.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace binofib {

struct BenchResult {
  IdentityId id{};
  IdentityParams params;
  ExactRational value;  ///< common value of both sides
  int reps = 0;
  double oracle_median_s = 0.0;
  double closed_median_s = 0.0;

  double speedup() const { return closed_median_s > 0.0 ? oracle_median_s / closed_median_s : 0.0; }
};

/// Used to keep results alive across timed calls.
inline void bench_sink(const ExactRational& v) {
  static thread_local int bits = 0;
  bits ^= v.sign();
}

template <typename Fn>
double median_seconds(int reps, Fn&& fn) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    bench_sink(fn());
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

/// Verifies lhs == rhs once, then times each side `reps` times.
/// Throws InapplicableError for out-of-domain params and std::runtime_error
/// if the two sides disagree.
inline BenchResult bench_identity(IdentityId id, const IdentityParams& params, int reps) {
  if (reps < 1) {
    throw std::invalid_argument("reps must be positive");
  }
  const PairResult pair = eval_pair(id, params);
  if (!pair.match) {
    throw std::runtime_error("closed form disagrees with direct summation: lhs=" + pair.lhs.to_string() +
                             " rhs=" + pair.rhs.to_string());
  }
  const IdentityDescriptor& d = descriptor(id);
  const PowerSum lhs = d.lhs(params);

  BenchResult out;
  out.id = id;
  out.params = params;
  out.value = pair.lhs;
  out.reps = reps;
  out.oracle_median_s = median_seconds(reps, [&] { return direct_sum(lhs); });
  out.closed_median_s = median_seconds(reps, [&] { return d.rhs(params); });
  return out;
}

}  // namespace binofib

#endif  // BINOFIB_BENCH_HPP
