#pragma once

// Wall-clock comparison of schoolbook and transform-based multiplication
// over a prime field. Inputs are generated from (seed, size) alone. Root
// finding happens before the timed region; each fft sample covers two
// forward transforms, the pointwise product and the inverse transform.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "radix2/poly.hpp"
#include "radix2/prime_field.hpp"

namespace radix2::cli {

/// Algorithms cmd_bench knows: "naive", "fft" (iterative), "fft-recursive",
/// "fft-butterfly".
const std::vector<std::string>& bench_algorithms();

struct BenchOptions {
  std::vector<std::size_t> sizes{1024};  // coefficients per operand, powers of two
  std::vector<std::string> algos{"naive", "fft"};
  unsigned repeat = 3;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string algo;
  std::size_t size = 0;
  std::vector<double> samples_ns;
  double min_ns = 0;
  double median_ns = 0;
  std::uint64_t checksum = 0;  // sum of product residues; equal across algos
};

struct BenchReport {
  std::uint32_t modulus = 0;
  std::uint64_t seed = 0;
  unsigned repeat = 0;
  std::vector<BenchRow> rows;

  const BenchRow* find(const std::string& algo, std::size_t size) const;
};

/// Two operands of exactly `size` coefficients, reproducible from (seed, size).
std::pair<Polynomial<Zp>, Polynomial<Zp>> bench_inputs(const PrimeField& field, std::uint64_t seed,
                                                       std::size_t size);

/// Throws radix2::Error(kSizeExceedsOrder) for a size that is not a power
/// of two or whose product does not fit the field's largest transform, and
/// kInvalidArgument for an unknown algorithm.
BenchReport run_bench(const PrimeField& field, const BenchOptions& options);

nlohmann::json to_json(const BenchReport& report);
std::string to_csv(const BenchReport& report);

}  // namespace radix2::cli
