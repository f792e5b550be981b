#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lucent {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec3f = Eigen::Vector3f;

inline constexpr double kPi = 3.14159265358979323846;

// Thrown for bad user input (missing files, malformed configs, contract
// violations at the tool boundary). The CLI maps it to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Deterministic RNG. PCG32 (O'Neill); distributions are hand-rolled so that
// streams are bit-identical across platforms and standard libraries.

class Pcg32 {
 public:
  explicit Pcg32(uint64_t seed = 0x853c49e6748fea9bULL, uint64_t stream = 1) {
    state_ = 0;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  uint32_t next_u32() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  // Uniform in [0, 1).
  double uniform() { return next_u32() * 0x1p-32; }
  float uniformf() { return static_cast<float>(next_u32() >> 8) * 0x1p-24f; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint32_t next_below(uint32_t n) {
    // Lemire's method without the rejection step would bias; keep the
    // classic threshold rejection for exactness.
    uint64_t threshold = (-uint64_t(n)) % n;
    while (true) {
      uint64_t r = next_u32();
      uint64_t m = r * n;
      if (static_cast<uint64_t>(static_cast<uint32_t>(m)) >= threshold)
        return static_cast<uint32_t>(m >> 32);
    }
  }

 private:
  uint64_t state_;
  uint64_t inc_;
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Fans a root seed out into purpose-labeled sub-streams, so that every
// consumer of randomness in a run derives from one manifest seed.
inline uint64_t seed_fanout(uint64_t root, const std::string& label,
                            uint64_t index = 0) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return splitmix64(root ^ splitmix64(h ^ splitmix64(index)));
}

// ---------------------------------------------------------------------------
// Chunked parallel loop. Work is split into fixed-size chunks independent of
// the thread count, so any reduction done per chunk and combined in chunk
// order yields thread-count-invariant results.

int thread_count();
void set_thread_count(int n);

void parallel_chunks(std::size_t total, std::size_t chunk_size,
                     const std::function<void(std::size_t begin, std::size_t end,
                                              std::size_t chunk_index)>& fn);

inline std::size_t chunk_count(std::size_t total, std::size_t chunk_size) {
  return (total + chunk_size - 1) / chunk_size;
}

}  // namespace lucent
