#include "radix2/cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "radix2/cli/bench.hpp"
#include "radix2/cli/document.hpp"
#include "radix2/cli/selfcheck.hpp"
#include "radix2/error.hpp"
#include "radix2/inverse.hpp"
#include "radix2/iterative.hpp"
#include "radix2/transform.hpp"

namespace radix2::cli {

namespace {

using json = nlohmann::json;

struct PlanFlags {
  std::optional<unsigned> n;
  std::optional<std::string> root;
  bool automatic = false;
};

void add_plan_flags(CLI::App* cmd, PlanFlags& flags) {
  cmd->add_option("--n", flags.n, "Order exponent; transform length 2^n (default: smallest that fits)");
  auto* root = cmd->add_option("--root", flags.root,
                               "Primitive 2^n-th root: an integer for prime domains, re,im for complex");
  auto* automatic = cmd->add_flag("--auto", flags.automatic, "Use the domain's canonical root (default)");
  root->excludes(automatic);
}

Zp parse_root(const PrimeField& f, const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw ParseError("bad --root \"" + text + "\"");
  return f.elt(v);
}

std::complex<double> parse_root(const ComplexField&, const std::string& text) {
  std::istringstream in(text);
  double re = 0;
  double im = 0;
  char comma = 0;
  if (!(in >> re)) throw ParseError("bad --root \"" + text + "\"");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw ParseError("bad --root \"" + text + "\" (expected re,im)");
  }
  if (in >> comma) throw ParseError("bad --root \"" + text + "\"");
  return {re, im};
}

template <class D>
FftPlan<elt_t<D>> make_plan(const D& dom, const PlanFlags& flags, std::size_t size) {
  const unsigned n = flags.n.value_or(order_for_length(size));
  if (flags.root) return FftPlan<elt_t<D>>(dom, n, parse_root(dom, *flags.root));
  return primitive_root_of_order(dom, n);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
}

Engine parse_engine(const std::string& algo) {
  if (algo == "recursive") return Engine::kRecursive;
  if (algo == "butterfly") return Engine::kButterfly;
  return Engine::kIterative;
}

/// Runs `body`, translating library and parse failures into exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    body();
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radix-2 FFT/NTT toolkit: transforms, multiplication, stage traces, self-checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::uint32_t modulus = PrimeField::kNttModulus;
  std::string output;

  // fft
  auto* fft_cmd = app.add_subcommand("fft", "Transform a polynomial document");
  std::string fft_input;
  std::string fft_algo = "iterative";
  bool inverse = false;
  PlanFlags fft_plan;
  fft_cmd->add_option("input", fft_input, "Polynomial document (JSON or plain text)")->required();
  fft_cmd->add_option("--algo", fft_algo, "recursive | butterfly | iterative")
      ->check(CLI::IsMember({"recursive", "butterfly", "iterative"}));
  add_plan_flags(fft_cmd, fft_plan);
  fft_cmd->add_flag("--inverse", inverse, "Apply the inverse transform");
  fft_cmd->add_option("-o,--output", output, "Output file (default: stdout)");
  fft_cmd->add_option("--modulus", modulus, "Modulus for plain-text input");

  // mul
  auto* mul_cmd = app.add_subcommand("mul", "Multiply two polynomial documents");
  std::string mul_a;
  std::string mul_b;
  std::string mul_algo = "fft";
  mul_cmd->add_option("a", mul_a, "First factor")->required();
  mul_cmd->add_option("b", mul_b, "Second factor")->required();
  mul_cmd->add_option("--algo", mul_algo, "naive | fft")->check(CLI::IsMember({"naive", "fft"}));
  mul_cmd->add_option("-o,--output", output, "Output file (default: stdout)");
  mul_cmd->add_option("--modulus", modulus, "Modulus for plain-text input");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time naive vs transform-based multiplication");
  BenchOptions bench;
  std::string format = "json";
  bench_cmd->add_option("--sizes", bench.sizes, "Coefficients per operand (powers of two)")
      ->delimiter(',');
  bench_cmd->add_option("--algos", bench.algos, "naive, fft, fft-recursive, fft-butterfly")
      ->delimiter(',')
      ->check(CLI::IsMember(bench_algorithms()));
  bench_cmd->add_option("--repeat", bench.repeat, "Samples per (algo, size)");
  bench_cmd->add_option("--seed", bench.seed, "Input generation seed");
  bench_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  bench_cmd->add_option("--modulus", modulus, "Prime modulus");

  // trace
  auto* trace_cmd = app.add_subcommand("trace", "Emit every stage of the iterative transform");
  std::string trace_input;
  PlanFlags trace_plan;
  trace_cmd->add_option("input", trace_input, "Polynomial document")->required();
  add_plan_flags(trace_cmd, trace_plan);
  trace_cmd->add_option("-o,--output", output, "Output file (default: stdout)");
  trace_cmd->add_option("--modulus", modulus, "Modulus for plain-text input");

  // selfcheck
  auto* check_cmd = app.add_subcommand("selfcheck", "Run the randomized lemma suites");
  SelfcheckOptions check;
  check_cmd->add_option("--trials", check.trials, "Cases per lemma");
  check_cmd->add_option("--seed", check.seed, "Random seed");
  check_cmd->add_option("--max-n", check.max_n, "Largest transform order exercised")
      ->check(CLI::Range(0U, 12U));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }

  if (fft_cmd->parsed()) {
    return guarded(err, [&] {
      const auto doc = read_document(fft_input, modulus);
      const Engine engine = parse_engine(fft_algo);
      const PolynomialDocument result = std::visit(
          [&](const auto& d) -> PolynomialDocument {
            const auto plan = make_plan(d.field, fft_plan, d.poly.size());
            auto poly = inverse ? ifft(d.field, plan, d.poly, engine)
                                : forward(d.field, engine, plan, d.poly);
            return std::decay_t<decltype(d)>{d.field, std::move(poly)};
          },
          doc);
      emit(serialize_document(result), output, out);
    });
  }

  if (mul_cmd->parsed()) {
    return guarded(err, [&] {
      const auto a = read_document(mul_a, modulus);
      const auto b = read_document(mul_b, modulus);
      if (!same_domain(a, b)) throw ParseError("factors are over different domains");
      const PolynomialDocument result = std::visit(
          [&](const auto& da) -> PolynomialDocument {
            using Doc = std::decay_t<decltype(da)>;
            const auto& db = std::get<Doc>(b);
            auto poly = mul_algo == "naive" ? naive_mul(da.field, da.poly, db.poly)
                                            : fft_mul(da.field, da.poly, db.poly);
            return Doc{da.field, std::move(poly)};
          },
          a);
      emit(serialize_document(result), output, out);
    });
  }

  if (bench_cmd->parsed()) {
    return guarded(err, [&] {
      PrimeField field(PrimeField::kNttModulus);
      try {
        field = PrimeField(modulus);
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
      const auto report = run_bench(field, bench);
      out << (format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n");
    });
  }

  if (trace_cmd->parsed()) {
    return guarded(err, [&] {
      const auto doc = read_document(trace_input, modulus);
      const json trace = std::visit(
          [&](const auto& d) {
            const auto plan = make_plan(d.field, trace_plan, d.poly.size());
            json j = to_json(PolynomialDocument{d});
            j.erase("coeffs");
            j["input"] = to_json(PolynomialDocument{d})["coeffs"];
            j["n"] = plan.order();
            j["root"] = element_to_json(plan.root());
            json stages = json::array();
            for (const auto& s : stage_trace(d.field, plan, d.poly)) {
              json coeffs = json::array();
              for (const auto& c : s.data.coeffs()) coeffs.push_back(element_to_json(c));
              stages.push_back({{"depth", s.depth},
                                {"width", s.width},
                                {"root", element_to_json(s.root)},
                                {"coeffs", std::move(coeffs)}});
            }
            j["stages"] = std::move(stages);
            return j;
          },
          doc);
      emit(trace.dump() + "\n", output, out);
    });
  }

  if (check_cmd->parsed()) {
    const auto results = run_selfcheck(check);
    bool all_ok = true;
    for (const auto& r : results) {
      out << std::left << std::setw(34) << r.name << r.passed << "/" << r.run
          << (r.ok() ? " passed" : " FAILED") << "\n";
      if (r.counterexample) out << "  minimal failing input: " << *r.counterexample << "\n";
      all_ok = all_ok && r.ok();
    }
    out << (all_ok ? "selfcheck: all suites passed\n" : "selfcheck: FAILED\n");
    return all_ok ? kExitOk : kExitPropertyFailure;
  }
  return kExitParseError;
}

}  // namespace radix2::cli
