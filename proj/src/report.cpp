#include "freepoly/report.hpp"

#include <sstream>

namespace freepoly {

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

Json vector_json(const IVec& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json vector_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Json sequence_json(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json cone_json(const Cone& c) {
  Json out = Json::array();
  for (const auto& g : c.generators()) out.push_back(vector_json(g));
  return out;
}

Json order_json(const OrderSpec& o) {
  Json out = Json::object();
  out["weight"] = vector_json(o.weight());
  out["tiebreak"] = "lex";
  return out;
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json j = Json::object();
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["witness"] = c.witness;
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

Json precision_json(const std::optional<Rational>& p) { return p ? rational_json(*p) : Json(nullptr); }

Json vectors_json(const std::vector<IVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

Json qvectors_json(const std::vector<QVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

Json polys_json(const std::vector<SeriesPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

Json analysis_json(const FreeAnalysis& a) {
  Json out = Json::object();
  out["n"] = a.n;
  out["e"] = a.chars.e;
  out["h"] = a.chars.h();
  out["cone"] = cone_json(a.root.ambient().cone());
  out["order"] = order_json(a.root.order());
  out["precision"] = precision_json(a.root.precision());
  out["polynomial"] = a.f.to_string();
  out["root"] = a.root.to_string();
  out["characteristic_exponents"] = vectors_json(a.chars.m);
  out["D"] = sequence_json(a.seq.D);
  out["d"] = sequence_json(a.seq.d);
  out["e_seq"] = sequence_json(a.seq.e_seq);
  out["r"] = vectors_json(a.seq.generators());
  out["generators"] = vectors_json(a.semigroup.generators());
  out["pseudo_roots"] = polys_json(a.pseudo_roots);
  out["pseudo_root_orders"] = qvectors_json(a.pseudo_root_orders);
  out["approx_roots"] = polys_json(a.approx_roots);
  out["approx_root_orders"] = qvectors_json(a.approx_root_orders);
  Json counts = Json::object();
  counts["R"] = sequence_json(a.counts.R);
  counts["S"] = sequence_json(a.counts.S);
  counts["R_tilde"] = sequence_json(a.counts.R_tilde);
  counts["S_tilde"] = sequence_json(a.counts.S_tilde);
  std::vector<std::int64_t> q;
  for (std::size_t i = 0; i < a.counts.R.size(); ++i) q.push_back(a.seq.D.front() - a.counts.R[i]);
  counts["Q"] = sequence_json(q);
  out["galois_counts"] = counts;
  out["checks"] = checks_json(a.checks);
  return out;
}

Json certificate_json(const Certificate& c) {
  Json out = Json::object();
  out["free"] = c.free;
  out["n"] = c.n;
  out["precision"] = precision_json(c.precision);
  out["conjugates"] = c.conjugate_count;
  out["checks"] = checks_json(c.checks);
  if (!c.factors.empty()) out["factorization"] = polys_json(c.factors);
  return out;
}

Json prep_json(const PrepResult& p) {
  Json out = Json::object();
  out["t"] = p.t;
  out["a"] = p.a;
  out["u_a"] = series_expression(p.u_a);
  out["epsilon_a_at_t"] = p.epsilon_a_at_t.to_string();
  out["sheared"] = p.sheared.to_string();
  return out;
}

Json pipeline_json(const Pipeline& p) {
  Json out = Json::object();
  out["input"] = p.input.to_string();
  out["quasi_ordinary"] = p.input_quasi_ordinary;
  if (p.prep) out["preparation"] = prep_json(*p.prep);
  if (p.blown) out["blowup"] = p.blown->to_string();
  if (p.blown_root) out["blowup_root"] = p.blown_root->to_string();
  out["root"] = p.root.to_string();
  return out;
}

namespace {

void emit_text(std::ostringstream& out, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (it.key() == "checks" && v.is_array()) {
      out << indent << "checks:\n";
      for (const auto& c : v) {
        out << indent << "  " << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
        const auto w = c.at("witness").get<std::string>();
        if (!w.empty()) out << ": " << w;
        out << "\n";
      }
    } else if (v.is_object()) {
      out << indent << it.key() << ":\n";
      emit_text(out, v, indent + "  ");
    } else if (v.is_string()) {
      out << indent << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string emit_report(const Json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream out;
  if (report.is_array()) {
    for (std::size_t i = 0; i < report.size(); ++i) {
      if (i) out << "---\n";
      emit_text(out, report[i], "");
    }
  } else {
    emit_text(out, report, "");
  }
  return out.str();
}

}  // namespace freepoly
