#pragma once

#include "freepoly/parser.hpp"
#include "freepoly/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freepoly {

enum class Mode { Analyze, Prepare, Blowup, RootExpand, Semigroup, ApproxRoot, CertifyFree };
enum class ConeChoice { Orthant, Blowup, Custom };

std::optional<Mode> parse_mode(const std::string& name);
std::string to_string(Mode mode);
std::optional<ConeChoice> parse_cone_choice(const std::string& name);

struct JobSpec {
  Mode mode = Mode::Analyze;
  std::string text;
  std::size_t first_line = 1;
  std::optional<Rational> precision;  // overrides the input's directive
  std::optional<ConeChoice> cone;     // overrides the input's cone
};

// Exit codes: 0 every check passed, 1 a check failed or the computation
// stopped on a mathematical error, 2 the input was rejected.
struct JobResult {
  int exit_code = 0;
  Json report;
};

JobResult run(const JobSpec& job);

// Runs independent jobs on up to `threads` workers; results keep job order.
std::vector<JobResult> run_batch(const std::vector<JobSpec>& jobs, std::size_t threads);

// One JobSpec per "---"-separated section of the document.
std::vector<JobSpec> jobs_from_document(const std::string& document, Mode mode, std::optional<Rational> precision,
                                        std::optional<ConeChoice> cone);

}  // namespace freepoly
