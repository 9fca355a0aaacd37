#include "freepoly/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace freepoly {

namespace {

const std::pair<Mode, const char*> kModes[] = {
    {Mode::Analyze, "analyze"},     {Mode::Prepare, "prepare"},       {Mode::Blowup, "blowup"},
    {Mode::RootExpand, "root-expand"}, {Mode::Semigroup, "semigroup"}, {Mode::ApproxRoot, "approx-root"},
    {Mode::CertifyFree, "certify-free"},
};

struct Context {
  ParsedInput in;
  std::size_t e = 1;
  Ambient ambient = Ambient::orthant(1);
  bool orthant = true;
};

Context make_context(const JobSpec& job) {
  Context ctx;
  ctx.in = parse_input(job.text, job.first_line);
  ctx.e = ctx.in.dim();
  const ConeChoice choice = job.cone.value_or(ctx.in.cone ? ConeChoice::Custom : ConeChoice::Orthant);
  switch (choice) {
    case ConeChoice::Orthant: ctx.ambient = Ambient::orthant(ctx.e); break;
    case ConeChoice::Blowup: ctx.ambient = Ambient::blowup(ctx.e); break;
    case ConeChoice::Custom:
      if (!ctx.in.cone) fail(ErrorKind::InvalidArgument, "a custom cone needs a cone{...} line in the input");
      if (ctx.in.cone->dim() != ctx.e) fail(ErrorKind::InvalidArgument, "the cone dimension differs from the input");
      ctx.ambient = Ambient(to_cone(*ctx.in.cone));
      break;
  }
  ctx.orthant = ctx.ambient == Ambient::orthant(ctx.e);
  return ctx;
}

SeriesPoly input_polynomial(const Context& ctx, const Ambient& ambient) {
  if (!ctx.in.polynomial) fail(ErrorKind::InvalidArgument, "this mode needs a polynomial");
  SeriesPoly f = to_series_poly(*ctx.in.polynomial, ambient);
  if (!f.is_monic() || f.degree() < 1) fail(ErrorKind::InvalidArgument, "the polynomial must be monic in y of positive degree");
  return f;
}

SeriesPoly orthant_polynomial(const Context& ctx) {
  if (!ctx.orthant) fail(ErrorKind::InvalidArgument, "a polynomial without a root series is processed over the orthant");
  return input_polynomial(ctx, ctx.ambient);
}

Rational precision_for(const JobSpec& job, const Context& ctx, const SeriesPoly& f) {
  if (job.precision) return *job.precision;
  if (ctx.in.precision) return *ctx.in.precision;
  return default_precision(f);
}

// A free polynomial with a root: either given as a series, or produced by
// the preparation pipeline.
struct Subject {
  SeriesPoly f = SeriesPoly(Ambient::orthant(1));
  FracSeries root = FracSeries(Ambient::orthant(1));
  std::optional<Pipeline> pipeline;
};

Subject subject_for(const JobSpec& job, const Context& ctx) {
  Subject s;
  if (ctx.in.series) {
    s.root = to_frac_series(*ctx.in.series, ctx.ambient);
    if (job.precision) s.root = s.root.with_precision(*job.precision);
    if (ctx.in.polynomial) {
      s.f = input_polynomial(ctx, ctx.ambient);
    } else {
      s.f = minimal_polynomial(s.root, ctx.in.n.value_or(s.root.denom()));
    }
    return s;
  }
  const SeriesPoly f = orthant_polynomial(ctx);
  s.pipeline = run_pipeline(f, precision_for(job, ctx, f));
  s.f = s.pipeline->f;
  s.root = s.pipeline->root;
  return s;
}

Json header(const JobSpec& job) {
  Json out = Json::object();
  out["mode"] = to_string(job.mode);
  out["status"] = "ok";
  return out;
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

int finish(Json& report, bool pass) {
  report["status"] = pass ? "ok" : "check_failed";
  return pass ? 0 : 1;
}

int run_analyze(const JobSpec& job, const Context& ctx, Json& report, bool semigroup) {
  const Subject s = subject_for(job, ctx);
  if (s.pipeline) report["pipeline"] = pipeline_json(*s.pipeline);
  const Certificate cert = free_certificate(s.f, s.f.degree(), s.root);
  if (!cert.free) {
    report["n"] = s.f.degree();
    report["e"] = ctx.e;
    report["polynomial"] = s.f.to_string();
    report["root"] = s.root.to_string();
    report["certificate"] = certificate_json(cert);
    report["checks"] = checks_json(cert.checks);
    return finish(report, false);
  }
  const FreeAnalysis a = analyze_free(s.f, s.root);
  merge(report, analysis_json(a));
  if (semigroup) {
    Json reps = Json::array();
    for (const auto& v : ctx.in.elements) {
      Json r = Json::object();
      r["element"] = vector_json(v);
      if (v.size() != ctx.e) fail(ErrorKind::InvalidArgument, "element has the wrong dimension");
      const auto rep = semigroup_representation(a.semigroup, v);
      r["representable"] = rep.has_value();
      if (rep) {
        r["alpha0"] = vector_json(rep->alpha0);
        r["alpha"] = sequence_json(rep->alpha);
      }
      reps.push_back(std::move(r));
    }
    report["representations"] = reps;
  }
  return finish(report, a.all_pass());
}

int run_prepare(const Context& ctx, Json& report) {
  const SeriesPoly f = orthant_polynomial(ctx);
  report["polynomial"] = f.to_string();
  report["discriminant"] = f.degree() >= 2 ? series_expression(discriminant_y(f)) : "1";
  const QuasiOrdinary qo = is_quasi_ordinary(f);
  report["quasi_ordinary"] = qo.quasi_ordinary;
  if (qo.alpha) report["alpha"] = vector_json(*qo.alpha);
  merge(report, prep_json(prepare_shear(f)));
  return finish(report, true);
}

int run_blowup(const Context& ctx, Json& report) {
  const SeriesPoly f = orthant_polynomial(ctx);
  report["polynomial"] = f.to_string();
  const SeriesPoly F = blowup_unchecked(f);
  report["blowup"] = F.to_string();
  const QuasiOrdinary qo = is_quasi_ordinary(F);
  report["quasi_ordinary"] = qo.quasi_ordinary;
  if (qo.alpha) report["alpha"] = vector_json(*qo.alpha);
  report["checks"] = checks_json({{"blowup is quasi-ordinary", qo.quasi_ordinary,
                                   qo.alpha ? "alpha = " + vector_json(*qo.alpha).dump() : "no minimal exponent"}});
  return finish(report, qo.quasi_ordinary);
}

int run_root_expand(const JobSpec& job, const Context& ctx, Json& report) {
  const SeriesPoly f = orthant_polynomial(ctx);
  const Rational T = precision_for(job, ctx, f);
  const Pipeline p = run_pipeline(f, T);
  report["polynomial"] = p.f.to_string();
  report["cone"] = cone_json(p.root.ambient().cone());
  report["order"] = order_json(p.root.order());
  report["precision"] = p.root.precision() ? rational_json(*p.root.precision()) : Json(nullptr);
  report["root"] = p.root.to_string();
  report["pipeline"] = pipeline_json(p);
  const FracSeries residual = p.f.eval_at(p.root);
  report["checks"] = checks_json({{"f(root) = 0", residual.has_no_terms(),
                                   residual.is_exact() ? "exact" : "below weight " + to_string(*residual.precision())}});
  return finish(report, residual.has_no_terms());
}

int run_approx_root(const JobSpec& job, const Context& ctx, Json& report) {
  const SeriesPoly f = orthant_polynomial(ctx);
  const Rational T = precision_for(job, ctx, f);
  std::vector<std::int64_t> ds;
  if (ctx.in.d) {
    ds.push_back(*ctx.in.d);
  } else {
    for (std::int64_t d = 1; d <= f.degree(); ++d) {
      if (f.degree() % d == 0) ds.push_back(d);
    }
  }
  report["polynomial"] = f.to_string();
  Json list = Json::array();
  bool pass = true;
  for (auto d : ds) {
    const AppCheck ac = free_approximate_root_check(f, d, T);
    Json j = Json::object();
    j["d"] = d;
    j["app"] = ac.app.to_string();
    j["app_via_blowup"] = ac.app_via_blowup.to_string();
    j["transformed"] = ac.transformed;
    j["certificate"] = certificate_json(ac.certificate);
    pass = pass && ac.certificate.free;
    list.push_back(std::move(j));
  }
  report["approximate_roots"] = list;
  return finish(report, pass);
}

int run_certify(const JobSpec& job, const Context& ctx, Json& report) {
  const Subject s = subject_for(job, ctx);
  if (s.pipeline) report["pipeline"] = pipeline_json(*s.pipeline);
  report["n"] = s.f.degree();
  report["e"] = ctx.e;
  report["cone"] = cone_json(s.root.ambient().cone());
  report["order"] = order_json(s.root.order());
  report["polynomial"] = s.f.to_string();
  report["root"] = s.root.to_string();
  const Certificate cert = free_certificate(s.f, s.f.degree(), s.root);
  report["certificate"] = certificate_json(cert);
  report["checks"] = checks_json(cert.checks);
  return finish(report, cert.free);
}

Json error_json(const Error& err) {
  Json out = Json::object();
  out["kind"] = std::string(to_string(err.kind()));
  out["message"] = err.what();
  if (const auto* pf = dynamic_cast<const ParseFailure*>(&err)) {
    out["line"] = pf->line();
    out["column"] = pf->column();
    out["expected"] = pf->expected();
  }
  return out;
}

}  // namespace

std::optional<Mode> parse_mode(const std::string& name) {
  for (const auto& [m, s] : kModes) {
    if (name == s) return m;
  }
  return std::nullopt;
}

std::string to_string(Mode mode) {
  for (const auto& [m, s] : kModes) {
    if (m == mode) return s;
  }
  return "analyze";
}

std::optional<ConeChoice> parse_cone_choice(const std::string& name) {
  if (name == "orthant") return ConeChoice::Orthant;
  if (name == "blowup") return ConeChoice::Blowup;
  if (name == "custom") return ConeChoice::Custom;
  return std::nullopt;
}

JobResult run(const JobSpec& job) {
  JobResult result;
  result.report = header(job);
  try {
    const Context ctx = make_context(job);
    switch (job.mode) {
      case Mode::Analyze: result.exit_code = run_analyze(job, ctx, result.report, false); break;
      case Mode::Semigroup: result.exit_code = run_analyze(job, ctx, result.report, true); break;
      case Mode::Prepare: result.exit_code = run_prepare(ctx, result.report); break;
      case Mode::Blowup: result.exit_code = run_blowup(ctx, result.report); break;
      case Mode::RootExpand: result.exit_code = run_root_expand(job, ctx, result.report); break;
      case Mode::ApproxRoot: result.exit_code = run_approx_root(job, ctx, result.report); break;
      case Mode::CertifyFree: result.exit_code = run_certify(job, ctx, result.report); break;
    }
  } catch (const Error& err) {
    const bool input = err.kind() == ErrorKind::ParseError || err.kind() == ErrorKind::InvalidArgument;
    result.exit_code = input ? 2 : 1;
    result.report["status"] = input ? "input_error" : "error";
    result.report["error"] = error_json(err);
  }
  return result;
}

std::vector<JobResult> run_batch(const std::vector<JobSpec>& jobs, std::size_t threads) {
  std::vector<JobResult> results(jobs.size());
  threads = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = run(jobs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run(jobs[i]);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

std::vector<JobSpec> jobs_from_document(const std::string& document, Mode mode, std::optional<Rational> precision,
                                        std::optional<ConeChoice> cone) {
  std::vector<JobSpec> out;
  for (const auto& jt : split_jobs(document)) out.push_back({mode, jt.text, jt.first_line, precision, cone});
  return out;
}

}  // namespace freepoly
