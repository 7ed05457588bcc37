#ifndef SPRKIT_JSON_IO_HPP
#define SPRKIT_JSON_IO_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sprkit/hash.hpp"
#include "sprkit/identities.hpp"
#include "sprkit/lab.hpp"
#include "sprkit/parse.hpp"
#include "sprkit/shepherdson.hpp"
#include "sprkit/witness.hpp"

// Canonical JSON: keys sorted (nlohmann::json default), ring elements as
// literal strings, counts as integers, no floating point.

namespace sprkit {

using Json = nlohmann::json;

template <Ring R>
Json matrix_to_json(const Matrix<R>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.ring().to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix<DynRing> matrix_from_json(const Json& j, const RingSpec& spec, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw Error(ErrorKind::dim_mismatch, "expected " + std::to_string(dim) + " matrix rows");
  }
  std::vector<RingElem> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim) {
      throw Error(ErrorKind::dim_mismatch, "expected rows of length " + std::to_string(dim));
    }
    for (const auto& e : row) {
      if (e.is_string()) {
        entries.push_back(parse_element(e.get<std::string>(), spec));
      } else if (e.is_number_integer()) {
        entries.push_back(RingElem::from_integer(spec, Integer(e.get<std::int64_t>())));
      } else {
        throw Error(ErrorKind::parse_error, "matrix entry must be a string, got " + e.dump());
      }
    }
  }
  return Matrix<DynRing>(DynRing(spec), dim, std::move(entries));
}

inline Json identities_to_json(const CertificateVerdict& v) {
  Json out = Json::array();
  for (const auto& id : v.identities) out.push_back({{"name", id.name}, {"holds", id.holds}});
  return out;
}

inline Json certificate_to_json(const LeftWitnessCertificate<DynRing>& cert) {
  const auto verdict = verify_certificate(cert);
  Json p = Json::array();
  for (const auto& c : cert.p.coefficients()) p.push_back(c.to_string());
  return Json{
      {"ring", cert.instance.a().ring().spec().to_string()},
      {"dim", cert.instance.a().dim()},
      {"n", cert.instance.n()},
      {"N", cert.big_n},
      {"A", matrix_to_json(cert.instance.a())},
      {"X", matrix_to_json(cert.instance.x())},
      {"p_coeffs", p},
      {"C", matrix_to_json(cert.c)},
      {"w", matrix_to_json(cert.w)},
      {"Y", matrix_to_json(cert.y)},
      {"verified", verdict.verified},
      {"identities", identities_to_json(verdict)},
  };
}

/// Reads a certificate without trusting it; run verify_certificate next.
inline LeftWitnessCertificate<DynRing> certificate_from_json(const Json& j) {
  try {
    const RingSpec spec = parse_ring_spec(j.at("ring").get<std::string>());
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw Error(ErrorKind::dim_mismatch, "dimension must be positive");
    const auto n = j.at("n").get<std::uint64_t>();
    const auto big_n = j.at("N").get<std::uint64_t>();
    std::vector<RingElem> p;
    for (const auto& c : j.at("p_coeffs")) p.push_back(parse_element(c.get<std::string>(), spec));
    const DynRing ring(spec);
    return LeftWitnessCertificate<DynRing>{
        RightWitnessInstance<DynRing>::unchecked(matrix_from_json(j.at("A"), spec, dim), n,
                                                 matrix_from_json(j.at("X"), spec, dim)),
        UniPolynomial<DynRing>(ring, std::move(p)),
        matrix_from_json(j.at("C"), spec, dim),
        big_n,
        matrix_from_json(j.at("w"), spec, dim),
        matrix_from_json(j.at("Y"), spec, dim),
    };
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("certificate JSON: ") + e.what());
  }
}

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

/// Writes the canonical form. Refuses certificates that do not verify.
inline void emit_certificate(const LeftWitnessCertificate<DynRing>& cert, std::ostream& out) {
  const Json j = certificate_to_json(cert);
  if (!j.at("verified").get<bool>()) {
    throw Error(ErrorKind::precondition_failed, "refusing to emit an unverified certificate");
  }
  out << canonical_dump(j);
}

inline Json identity_report_to_json(const IdentityReport& r) {
  Json j{
      {"ring", r.ring.to_string()}, {"dim", r.dim},         {"degree", r.degree},
      {"samples", r.samples},       {"all_vanish", r.all_vanish},
  };
  if (r.witness) {
    Json w = Json::array();
    for (const auto& m : *r.witness) w.push_back(matrix_to_json(m));
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json shepherdson_report_to_json(const ShepherdsonReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}, {"normal_form", c.entries}});
  return Json{{"all_hold", r.all_hold}, {"checks", checks}};
}

inline Json classification_record_to_json(const lab::ClassificationRecord& r) {
  auto side = [](const std::vector<lab::ExponentWitness>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) out.push_back({{"n", w.n}, {"witness", matrix_to_json(w.witness)}});
    return out;
  };
  return Json{
      {"A", matrix_to_json(r.a)},     {"index", r.cycle.index}, {"period", r.cycle.period},
      {"checked_up_to", r.checked_up_to}, {"right", side(r.right)}, {"left", side(r.left)},
      {"agrees", r.agrees},
  };
}

inline Json transpose_report_to_json(const lab::TransposeClosureReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(matrix_to_json(f));
  return Json{{"ring", r.ring.to_string()}, {"dim", r.dim},        {"n", r.n},
              {"total", r.total},           {"holds", r.holds},    {"failures", failures}};
}

/// Deterministic report body plus "content_hash" over it. Timing is only
/// added on request since it changes from run to run.
inline Json cp_report_to_json(const lab::CpReport& r, bool include_timing = false) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back({{"A", matrix_to_json(c.a)}, {"right", c.right}, {"left", c.left}});
  }
  Json j{
      {"ring", r.ring.to_string()},
      {"dim", r.dim},
      {"n", r.n},
      {"total", r.total},
      {"counts", {{"both", r.both}, {"right_only", r.right_only}, {"left_only", r.left_only}, {"neither", r.neither}}},
      {"pipeline", {{"certified", r.certified}, {"failures", r.pipeline_failures}}},
      {"counterexamples", ces},
      {"transpose_closure", transpose_report_to_json(r.transpose)},
  };
  j["content_hash"] = sha256_hex(j.dump());
  if (include_timing) j["wall_time_ms"] = static_cast<std::int64_t>(r.wall_seconds * 1000.0);
  return j;
}

}  // namespace sprkit

#endif  // SPRKIT_JSON_IO_HPP
