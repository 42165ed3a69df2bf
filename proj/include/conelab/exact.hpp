#pragma once

// Scalar types, the error type and the deterministic random stream shared by
// every module.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conelab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using MatrixZ = MatrixX<Integer>;
using VectorZ = VectorX<Integer>;

enum class ErrorKind {
  Parse,
  DuplicatePoint,
  CenterOnSecant,
  BadScreen,
  SingularTransform,
  DimensionMismatch,
  NoFormAvailable,
  ZeroForm,
  Degenerate,
  DegenerateParameters,
  UnknownName,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parses "n" or "n/d" (d > 0). Throws Error{Parse} on malformed text.
Rational parse_rational(std::string_view text);

/// Always "p/q", including "n/1" for integers.
std::string format_rational(const Rational& q);

/// Explicit random state. Streams derived with fork() depend only on the
/// root seed and the tags, never on how much of the parent was consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  Rng fork(std::uint64_t tag) const { return Rng(mix(seed_ ^ mix(tag + 0x632be59bd9b4e019ULL))); }

  template <typename... Tags>
  Rng fork(std::uint64_t tag, Tags... rest) const {
    return fork(tag).fork(static_cast<std::uint64_t>(rest)...);
  }

  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Integer-valued rational drawn uniformly from [-height, height].
Rational sample_rational(Rng& rng, std::uint64_t height);

inline Integer binomial(long n, long k) {
  if (k < 0 || n < k) return Integer(0);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline long binomial_small(long n, long k) { return binomial(n, k).convert_to<long>(); }

}  // namespace conelab
