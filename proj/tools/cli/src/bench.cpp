#include "radix2/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "radix2/error.hpp"
#include "radix2/inverse.hpp"

namespace radix2::cli {

const std::vector<std::string>& bench_algorithms() {
  static const std::vector<std::string> kAlgos{"naive", "fft", "fft-recursive", "fft-butterfly"};
  return kAlgos;
}

const BenchRow* BenchReport::find(const std::string& algo, std::size_t size) const {
  for (const auto& r : rows) {
    if (r.algo == algo && r.size == size) return &r;
  }
  return nullptr;
}

std::pair<Polynomial<Zp>, Polynomial<Zp>> bench_inputs(const PrimeField& field, std::uint64_t seed,
                                                       std::size_t size) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(size)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint32_t> any(0, field.modulus() - 1);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, field.modulus() - 1);
  auto draw = [&] {
    std::vector<Zp> c(size);
    for (auto& x : c) x = Zp{any(rng)};
    if (size > 0) c.back() = Zp{nonzero(rng)};
    return Polynomial<Zp>(std::move(c));
  };
  auto p = draw();
  auto q = draw();
  return {std::move(p), std::move(q)};
}

namespace {

std::uint64_t checksum(const Polynomial<Zp>& p) {
  std::uint64_t s = 0;
  for (Zp c : p.coeffs()) s += c.value;
  return s;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

BenchReport run_bench(const PrimeField& field, const BenchOptions& options) {
  for (const auto& a : options.algos) {
    const auto& known = bench_algorithms();
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw_error(ErrorKind::kInvalidArgument, "unknown benchmark algorithm \"" + a + "\"");
    }
  }
  for (std::size_t size : options.sizes) {
    if (size == 0 || (size & (size - 1)) != 0) {
      throw_error(ErrorKind::kSizeExceedsOrder, "size " + std::to_string(size) + " is not a power of two");
    }
    if (order_for_length(2 * size) > field.max_order()) {
      throw_error(ErrorKind::kSizeExceedsOrder,
                  "size " + std::to_string(size) + " needs a transform of length " +
                      std::to_string(2 * size) + ", beyond 2^" + std::to_string(field.max_order()));
    }
  }

  BenchReport report{field.modulus(), options.seed, options.repeat, {}};
  for (std::size_t size : options.sizes) {
    const auto [p, q] = bench_inputs(field, options.seed, size);
    const auto plan = primitive_root_of_order(field, order_for_length(2 * size - 1));
    for (const auto& algo : options.algos) {
      BenchRow row{algo, size, {}, 0, 0, 0};
      for (unsigned r = 0; r < options.repeat; ++r) {
        const auto start = std::chrono::steady_clock::now();
        Polynomial<Zp> product;
        if (algo == "naive") {
          product = naive_mul(field, p, q);
        } else {
          const Engine engine = algo == "fft-recursive"   ? Engine::kRecursive
                                : algo == "fft-butterfly" ? Engine::kButterfly
                                                          : Engine::kIterative;
          product = fft_mul_with_plan(field, plan, p, q, engine);
        }
        const auto stop = std::chrono::steady_clock::now();
        row.samples_ns.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
        row.checksum = checksum(product);
      }
      if (!row.samples_ns.empty()) {
        row.min_ns = *std::min_element(row.samples_ns.begin(), row.samples_ns.end());
        row.median_ns = median(row.samples_ns);
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

nlohmann::json to_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"algo", r.algo},
                    {"size", r.size},
                    {"samples_ns", r.samples_ns},
                    {"min_ns", r.min_ns},
                    {"median_ns", r.median_ns},
                    {"checksum", r.checksum}});
  }
  return {{"modulus", report.modulus},
          {"seed", report.seed},
          {"repeat", report.repeat},
          {"rows", std::move(rows)}};
}

std::string to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "algo,size,repeat,seed,min_ns,median_ns,checksum\n";
  for (const auto& r : report.rows) {
    out << r.algo << ',' << r.size << ',' << r.samples_ns.size() << ',' << report.seed << ','
        << r.min_ns << ',' << r.median_ns << ',' << r.checksum << '\n';
  }
  return out.str();
}

}  // namespace radix2::cli
