#include "radix2/cli/document.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "radix2/error.hpp"

namespace radix2::cli {

namespace {

using json = nlohmann::json;

std::uint32_t parse_modulus(const json& j) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 0xFFFFFFFFULL) {
    throw ParseError("\"modulus\" must be an odd prime below 2^32");
  }
  return static_cast<std::uint32_t>(j.get<std::uint64_t>());
}

PrimeField make_field(std::uint32_t modulus) {
  try {
    return PrimeField(modulus);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Zp parse_residue(const PrimeField& f, std::uint64_t value, std::size_t index) {
  if (value >= f.modulus()) {
    throw ParseError("coefficient " + std::to_string(index) + " = " + std::to_string(value) +
                     " is not in [0, " + std::to_string(f.modulus()) + ")");
  }
  return Zp{static_cast<std::uint32_t>(value)};
}

std::complex<double> parse_complex(const json& c, std::size_t index) {
  auto component = [&](const json& v) {
    if (!v.is_number()) throw ParseError("coefficient " + std::to_string(index) + " is not numeric");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError("coefficient " + std::to_string(index) + " is not finite");
    return d;
  };
  if (c.is_number()) return {component(c), 0.0};
  if (c.is_array() && c.size() == 2) return {component(c[0]), component(c[1])};
  throw ParseError("complex coefficient " + std::to_string(index) + " must be [re, im]");
}

PolynomialDocument parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("domain") || !j["domain"].is_string()) throw ParseError("missing \"domain\"");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("missing \"coeffs\" array");
  const auto& coeffs = j["coeffs"];
  const std::string domain = j["domain"].get<std::string>();

  if (domain == "prime") {
    if (!j.contains("modulus")) throw ParseError("prime document needs \"modulus\"");
    const PrimeField f = make_field(parse_modulus(j["modulus"]));
    std::vector<Zp> c;
    c.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!coeffs[i].is_number_unsigned()) {
        throw ParseError("coefficient " + std::to_string(i) + " must be a non-negative integer");
      }
      c.push_back(parse_residue(f, coeffs[i].get<std::uint64_t>(), i));
    }
    return PrimeDocument{f, Polynomial<Zp>(std::move(c))};
  }
  if (domain == "complex") {
    double eps = ComplexField::kDefaultEpsilon;
    if (j.contains("epsilon")) {
      if (!j["epsilon"].is_number()) throw ParseError("\"epsilon\" must be a number");
      eps = j["epsilon"].get<double>();
    }
    ComplexField f(ComplexField::kDefaultEpsilon);
    try {
      f = ComplexField(eps);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    std::vector<std::complex<double>> c;
    c.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c.push_back(parse_complex(coeffs[i], i));
    return ComplexDocument{f, Polynomial<std::complex<double>>(std::move(c))};
  }
  throw ParseError("unknown domain \"" + domain + "\" (expected \"prime\" or \"complex\")");
}

PolynomialDocument parse_text(std::string_view text, std::uint32_t modulus) {
  const PrimeField f = make_field(modulus);
  std::vector<Zp> c;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("not a decimal coefficient: \"" + std::string(token) + "\"");
    }
    c.push_back(parse_residue(f, value, c.size()));
    pos = end;
  }
  return PrimeDocument{f, Polynomial<Zp>(std::move(c))};
}

}  // namespace

PolynomialDocument parse_document(std::string_view text, std::uint32_t text_modulus) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text, text_modulus);
}

PolynomialDocument read_document(const std::string& path, std::uint32_t text_modulus) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), text_modulus);
}

json element_to_json(Zp x) { return x.value; }

json element_to_json(const std::complex<double>& x) { return json::array({x.real(), x.imag()}); }

json to_json(const PolynomialDocument& doc) {
  return std::visit(
      [](const auto& d) {
        json j;
        json coeffs = json::array();
        for (const auto& c : d.poly.coeffs()) coeffs.push_back(element_to_json(c));
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, PrimeDocument>) {
          j["domain"] = "prime";
          j["modulus"] = d.field.modulus();
        } else {
          j["domain"] = "complex";
          j["epsilon"] = d.field.epsilon();
        }
        j["coeffs"] = std::move(coeffs);
        return j;
      },
      doc);
}

std::string serialize_document(const PolynomialDocument& doc) { return to_json(doc).dump() + "\n"; }

bool same_domain(const PolynomialDocument& a, const PolynomialDocument& b) {
  if (a.index() != b.index()) return false;
  if (const auto* pa = std::get_if<PrimeDocument>(&a)) {
    return pa->field == std::get<PrimeDocument>(b).field;
  }
  return std::get<ComplexDocument>(a).field == std::get<ComplexDocument>(b).field;
}

}  // namespace radix2::cli
