#pragma once

// PolynomialDocument: the file format shared by every subcommand.
//
//   {"domain": "prime",   "modulus": 17,      "coeffs": [1, 2, 3, 4]}
//   {"domain": "complex", "epsilon": 1e-9,    "coeffs": [[1, 0], [0.5, -2]]}
//
// coeffs[i] is the coefficient of X^i (ascending degree). Prime residues
// must lie in [0, p). Prime polynomials may also be given as plain text:
// whitespace-separated decimal coefficients, modulus supplied separately.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "radix2/complex_field.hpp"
#include "radix2/poly.hpp"
#include "radix2/prime_field.hpp"

namespace radix2::cli {

/// Malformed input; maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimeDocument {
  PrimeField field;
  Polynomial<Zp> poly;

  bool operator==(const PrimeDocument&) const = default;
};

struct ComplexDocument {
  ComplexField field;
  Polynomial<std::complex<double>> poly;

  bool operator==(const ComplexDocument&) const = default;
};

using PolynomialDocument = std::variant<PrimeDocument, ComplexDocument>;

/// JSON if the first non-blank character is '{', plain text otherwise.
PolynomialDocument parse_document(std::string_view text,
                                  std::uint32_t text_modulus = PrimeField::kNttModulus);
PolynomialDocument read_document(const std::string& path,
                                 std::uint32_t text_modulus = PrimeField::kNttModulus);

nlohmann::json to_json(const PolynomialDocument& doc);
std::string serialize_document(const PolynomialDocument& doc);

nlohmann::json element_to_json(Zp x);
nlohmann::json element_to_json(const std::complex<double>& x);

/// Same domain tag and parameters (modulus, or epsilon).
bool same_domain(const PolynomialDocument& a, const PolynomialDocument& b);

}  // namespace radix2::cli
