#ifndef TVMIN_RNG_H_
#define TVMIN_RNG_H_

#include <cstdint>
#include <initializer_list>

namespace tvmin {

// SplitMix64 output function (Steele, Lea & Flood 2014).
std::uint64_t mix64(std::uint64_t z);

// Counter-based generator: draw c of stream `key` is mix64(key + (c+1)*phi),
// with phi the 64-bit golden-ratio increment used by SplitMix64. Draws are
// addressable by counter, so results do not depend on evaluation order or
// on how work is divided among threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t key() const { return key_; }
  std::uint64_t bits(std::uint64_t counter) const;
  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform(std::uint64_t counter) const;

  // Independent child stream.
  CounterRng split(std::uint64_t stream) const;
  CounterRng split(std::initializer_list<std::uint64_t> path) const;

 private:
  std::uint64_t key_;
};

// Sequential view of a CounterRng for algorithms that consume a variable
// number of draws.
class RngStream {
 public:
  explicit RngStream(CounterRng rng) : rng_(rng) {}

  std::uint64_t next() { return rng_.bits(counter_++); }
  // Unbiased integer in [0, bound), Lemire's multiply-and-reject method.
  std::uint64_t below(std::uint64_t bound);

 private:
  CounterRng rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace tvmin

#endif  // TVMIN_RNG_H_
