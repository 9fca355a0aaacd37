#pragma once

#include "freepoly/preparation.hpp"

#include "json.hpp"

#include <string>

namespace freepoly {

using Json = nlohmann::ordered_json;

enum class Format { Json, Text };

// Integral rationals become JSON integers, others "p/q" strings.
Json rational_json(const Rational& q);
Json vector_json(const IVec& v);
Json vector_json(const QVec& v);
Json sequence_json(const std::vector<std::int64_t>& v);

Json cone_json(const Cone& c);
Json order_json(const OrderSpec& o);
Json checks_json(const std::vector<Check>& checks);

// The invariant block: n, e, h, cone, order, precision, polynomial, root,
// characteristic_exponents, D, d, e_seq, r, generators, pseudo-root and
// approximate-root data, galois_counts, checks.
Json analysis_json(const FreeAnalysis& a);
Json certificate_json(const Certificate& c);
Json prep_json(const PrepResult& p);
Json pipeline_json(const Pipeline& p);

std::string emit_report(const Json& report, Format format);

}  // namespace freepoly
