#include "freepoly/jobs.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace {

struct Options {
  std::string input;
  std::string expr;
  std::string precision;
  std::string cone;
  std::string format = "json";
  std::size_t jobs = 0;
};

std::optional<freepoly::Rational> parse_precision(const std::string& text) {
  if (text.empty()) return std::nullopt;
  freepoly::Rational q;
  if (q.set_str(text, 10) != 0) throw CLI::ValidationError("--precision", "not a rational: " + text);
  q.canonicalize();
  if (q <= 0) throw CLI::ValidationError("--precision", "must be positive");
  return q;
}

std::string read_document(const Options& opt) {
  if (!opt.expr.empty()) return opt.expr;
  if (opt.input.empty() || opt.input == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(opt.input);
  if (!in) throw CLI::ValidationError("--input", "cannot read " + opt.input);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int dispatch(freepoly::Mode mode, const Options& opt) {
  using namespace freepoly;
  std::optional<Rational> precision;
  std::string document;
  try {
    precision = parse_precision(opt.precision);
    document = read_document(opt);
  } catch (const CLI::Error& err) {
    std::cerr << err.what() << "\n";
    return 2;
  }
  std::optional<ConeChoice> cone;
  if (!opt.cone.empty()) cone = parse_cone_choice(opt.cone);
  const Format format = opt.format == "text" ? Format::Text : Format::Json;

  const auto specs = jobs_from_document(document, mode, precision, cone);
  if (specs.empty()) {
    std::cerr << "no input\n";
    return 2;
  }
  const std::size_t threads = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto results = run_batch(specs, threads);

  int code = 0;
  Json out = Json::array();
  for (const auto& r : results) {
    code = std::max(code, r.exit_code);
    out.push_back(r.report);
  }
  std::cout << emit_report(results.size() == 1 ? out[0] : out, format) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of free polynomials over power series rings"};
  app.require_subcommand(1);
  Options opt;

  const std::pair<freepoly::Mode, const char*> commands[] = {
      {freepoly::Mode::Analyze, "full invariant report"},
      {freepoly::Mode::Prepare, "discriminant and preparing shear"},
      {freepoly::Mode::Blowup, "monomial blowup and quasi-ordinary test"},
      {freepoly::Mode::RootExpand, "root of the blown-up polynomial, unblown into the cone"},
      {freepoly::Mode::Semigroup, "semigroup generators and element representations"},
      {freepoly::Mode::ApproxRoot, "approximate roots compared through the blowup"},
      {freepoly::Mode::CertifyFree, "freeness certificate or orbit factorization"},
  };
  std::vector<std::pair<freepoly::Mode, CLI::App*>> subs;
  for (const auto& [mode, help] : commands) {
    CLI::App* sub = app.add_subcommand(freepoly::to_string(mode), help);
    sub->add_option("--input", opt.input, "input file, '-' or absent for stdin");
    sub->add_option("--expr", opt.expr, "input text given inline");
    sub->add_option("--precision", opt.precision, "truncation weight T as P/Q");
    sub->add_option("--cone", opt.cone, "cone choice")->check(CLI::IsMember({"orthant", "blowup", "custom"}));
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--jobs", opt.jobs, "worker threads for batch input");
    subs.emplace_back(mode, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (const auto& [mode, sub] : subs) {
    if (sub->parsed()) return dispatch(mode, opt);
  }
  return 2;
}
