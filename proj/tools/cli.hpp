#ifndef SPRKIT_TOOLS_CLI_HPP
#define SPRKIT_TOOLS_CLI_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sprkit/free_algebra.hpp"
#include "sprkit/identities.hpp"
#include "sprkit/json_io.hpp"
#include "sprkit/lab.hpp"
#include "sprkit/parse.hpp"
#include "sprkit/shepherdson.hpp"
#include "sprkit/witness.hpp"

namespace sprkit::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2 };

namespace detail {

inline int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse_error:
    case ErrorKind::invalid_spec:
    case ErrorKind::malformed_payload:
    case ErrorKind::dim_mismatch:
    case ErrorKind::spec_mismatch:
    case ErrorKind::invalid_bound:
    case ErrorKind::degree_too_large:
    case ErrorKind::not_enumerable:
    case ErrorKind::budget_exceeded:
    case ErrorKind::invalid_rewrite_system:
      return usage;
    default:
      return negative;
  }
}

inline void print_error(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& message) {
  out << canonical_dump(Json{{"error", {{"kind", kind}, {"message", message}}}});
  err << "error: " << message << "\n";
}

struct MatrixArgs {
  std::string ring;
  std::size_t dim = 0;
  std::uint64_t n = 1;
  std::string a;
  std::string x;
};

inline void add_matrix_args(CLI::App* cmd, MatrixArgs& m) {
  cmd->add_option("--ring", m.ring, "ring spec, e.g. zmod:4")->required();
  cmd->add_option("--dim", m.dim, "matrix dimension (checked against the literals)");
  cmd->add_option("--n", m.n, "exponent n >= 1")->required();
  cmd->add_option("--A", m.a, "matrix literal [[..],[..]]")->required();
  cmd->add_option("--X", m.x, "right witness literal")->required();
}

inline std::pair<Matrix<DynRing>, Matrix<DynRing>> load_matrices(const MatrixArgs& m) {
  const RingSpec spec = parse_ring_spec(m.ring);
  auto a = parse_matrix(m.a, spec);
  auto x = parse_matrix(m.x, spec);
  if (m.dim != 0 && (a.dim() != m.dim || x.dim() != m.dim)) {
    throw Error(ErrorKind::parse_error, "matrix literal dimension differs from --dim " + std::to_string(m.dim));
  }
  if (a.dim() != x.dim()) throw Error(ErrorKind::parse_error, "A and X differ in dimension");
  return {std::move(a), std::move(x)};
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace detail

/// Runs one invocation. args[0] is the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Strongly pi-regular witness toolkit"};
  app.require_subcommand(1);

  MatrixArgs rtl;
  std::string rtl_out;
  auto* cmd_rtl = app.add_subcommand("right-to-left", "left witness certificate from A^n = A^(n+1) X");
  add_matrix_args(cmd_rtl, rtl);
  cmd_rtl->add_option("--out", rtl_out, "also write the certificate to this file");

  std::string cert_path;
  auto* cmd_verify = app.add_subcommand("verify-cert", "re-check every identity of a certificate");
  cmd_verify->add_option("--cert", cert_path, "certificate file, '-' for stdin")->required();

  MatrixArgs dz;
  auto* cmd_drazin = app.add_subcommand("drazin", "commuting witness w = A^n X^(n+1)");
  add_matrix_args(cmd_drazin, dz);

  std::string cp_k;
  std::string cp_ring;
  std::size_t cp_dim = 2;
  std::uint64_t cp_n = 1;
  std::size_t workers = default_workers();
  bool timing = false;
  bool no_cross = false;
  auto* cmd_cp = app.add_subcommand("cp-verify", "right vs left strong pi-regularity over all of M_m(Z/k)");
  auto* k_opt = cmd_cp->add_option("--k", cp_k, "modulus k");
  cmd_cp->add_option("--ring", cp_ring, "any finite ring spec instead of --k")->excludes(k_opt);
  cmd_cp->add_option("--dim", cp_dim, "matrix dimension");
  cmd_cp->add_option("--n", cp_n, "exponent");
  cmd_cp->add_option("--workers", workers, "worker threads (default from SPRKIT_WORKERS)");
  cmd_cp->add_flag("--timing", timing, "include wall time in the JSON (breaks byte-identical output)");
  cmd_cp->add_flag("--no-cross-validate", no_cross, "skip the certificate pipeline on each right witness");

  std::string cl_ring;
  std::size_t cl_dim = 2;
  std::optional<std::uint64_t> cl_bound;
  std::string cl_records;
  auto* cmd_classify = app.add_subcommand("classify", "per-matrix right/left exponent sets over a finite ring");
  cmd_classify->add_option("--ring", cl_ring, "finite ring spec")->required();
  cmd_classify->add_option("--dim", cl_dim, "matrix dimension");
  cmd_classify->add_option("--n-bound", cl_bound, "largest exponent checked (default: power-cycle index + 1)");
  cmd_classify->add_option("--records", cl_records, "write one JSON record per matrix to this file");
  cmd_classify->add_option("--workers", workers, "worker threads");

  std::string id_ring;
  std::size_t id_dim = 2;
  std::size_t id_degree = 4;
  std::size_t id_samples = 500;
  std::uint64_t seed = 0;
  std::int64_t bound = 9;
  bool units = false;
  auto* cmd_id = app.add_subcommand("identity-check", "evaluate the standard polynomial s_k on M_m");
  cmd_id->add_option("--ring", id_ring, "ring spec")->required();
  cmd_id->add_option("--dim", id_dim, "matrix dimension");
  cmd_id->add_option("--degree", id_degree, "k, at most 8");
  cmd_id->add_option("--samples", id_samples, "number of sampled tuples");
  cmd_id->add_option("--seed", seed, "sampling seed");
  cmd_id->add_option("--bound", bound, "entry magnitude bound for infinite rings");
  cmd_id->add_flag("--units", units, "exhaustive search over matrix-unit tuples instead of sampling");

  auto* cmd_shep = app.add_subcommand("shepherdson", "AB = I but BA != I in M_2 of Shepherdson's ring");

  std::string nf_expr;
  std::vector<std::string> nf_rules;
  std::string nf_strategy = "leftmost";
  std::size_t nf_budget = default_rewrite_budget;
  auto* cmd_nf = app.add_subcommand("nf", "normal form in Q<a,b,c,d,w,x,y,z> modulo rewrite rules");
  cmd_nf->add_option("--expr", nf_expr, "polynomial, e.g. 'c a w + 2/3 x'")->required();
  cmd_nf->add_option("--rule", nf_rules, "rule 'aw=1-by' (repeatable; default: Shepherdson's four)");
  cmd_nf->add_option("--strategy", nf_strategy, "leftmost | rightmost")->check(CLI::IsMember({"leftmost", "rightmost"}));
  cmd_nf->add_option("--budget", nf_budget, "rewrite steps per input monomial");

  std::vector<std::string> argv_store = args;
  if (argv_store.empty()) argv_store.emplace_back("sprkit");
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    print_error(out, err, "UsageError", e.what());
    return usage;
  }

  try {
    if (cmd_rtl->parsed()) {
      auto [a, x] = load_matrices(rtl);
      const RightWitnessInstance<DynRing> inst(std::move(a), rtl.n, std::move(x));
      const auto cert = right_to_left_certificate(inst);
      std::ostringstream doc;
      emit_certificate(cert, doc);
      if (!rtl_out.empty()) write_text(rtl_out, doc.str());
      out << doc.str();
      err << "left witness Y = " << cert.y.to_string() << " (N = " << cert.big_n << "), certificate verified\n";
      return ok;
    }
    if (cmd_verify->parsed()) {
      std::string text;
      if (cert_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream f(cert_path, std::ios::binary);
        if (!f) throw Error(ErrorKind::parse_error, "cannot open '" + cert_path + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
      }
      Json j;
      try {
        j = Json::parse(text);
      } catch (const Json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
      }
      const auto cert = certificate_from_json(j);
      const auto verdict = verify_certificate(cert);
      out << canonical_dump(Json{{"verified", verdict.verified}, {"identities", identities_to_json(verdict)}});
      if (const auto* bad = verdict.first_failure()) {
        err << "certificate rejected: " << bad->name << " fails\n";
        return negative;
      }
      err << "certificate verified\n";
      return ok;
    }
    if (cmd_drazin->parsed()) {
      auto [a, x] = load_matrices(dz);
      const auto w = drazin_witness(a, x, dz.n);
      out << canonical_dump(Json{
          {"ring", a.ring().spec().to_string()},
          {"dim", a.dim()},
          {"n", dz.n},
          {"A", matrix_to_json(a)},
          {"X", matrix_to_json(x)},
          {"w", matrix_to_json(w)},
          {"identities",
           Json::array({{{"name", "A w = w A"}, {"holds", true}}, {{"name", "A^n = A^(n+1) w"}, {"holds", true}}})},
      });
      err << "w = " << w.to_string() << "\n";
      return ok;
    }
    if (cmd_cp->parsed()) {
      RingSpec spec;
      if (!cp_ring.empty()) {
        spec = parse_ring_spec(cp_ring);
      } else if (!cp_k.empty()) {
        spec = parse_ring_spec("zmod:" + cp_k);
      } else {
        throw Error(ErrorKind::parse_error, "cp-verify needs --k or --ring");
      }
      lab::CpOptions opts;
      opts.workers = workers;
      opts.cross_validate = !no_cross;
      const auto report = lab::cp_report(spec, cp_dim, cp_n, opts);
      out << canonical_dump(cp_report_to_json(report, timing));
      err << report.total << " matrices, " << report.counterexamples.size() << " counterexamples, "
          << report.certified << " certificates, " << report.pipeline_failures << " pipeline failures, "
          << report.wall_seconds << " s\n";
      return report.ok() && report.transpose.holds ? ok : negative;
    }
    if (cmd_classify->parsed()) {
      const RingSpec spec = parse_ring_spec(cl_ring);
      const auto records = lab::classify_all(spec, cl_dim, cl_bound, workers);
      std::string lines;
      std::uint64_t disagree = 0;
      for (const auto& r : records) {
        lines += classification_record_to_json(r).dump() + "\n";
        if (!r.agrees) ++disagree;
      }
      if (!cl_records.empty()) write_text(cl_records, lines);
      out << canonical_dump(Json{{"ring", spec.to_string()},
                                 {"dim", cl_dim},
                                 {"total", records.size()},
                                 {"disagreements", disagree},
                                 {"records_hash", sha256_hex(lines)}});
      err << records.size() << " matrices classified, " << disagree << " disagreements\n";
      return disagree == 0 ? ok : negative;
    }
    if (cmd_id->parsed()) {
      const RingSpec spec = parse_ring_spec(id_ring);
      IdentityReport report;
      if (units) {
        auto w = search_nonvanishing(spec, id_dim, id_degree);
        report = IdentityReport{spec, id_dim, id_degree, 0, !w.has_value(), std::move(w)};
      } else {
        report = check_identity_on_samples(spec, id_dim, id_degree, id_samples, seed, bound);
      }
      out << canonical_dump(identity_report_to_json(report));
      err << "s_" << id_degree << " on M_" << id_dim << "(" << spec.to_string() << "): "
          << (report.all_vanish ? "vanishes on every tuple tried" : "non-vanishing tuple found") << "\n";
      return report.all_vanish ? ok : negative;
    }
    if (cmd_shep->parsed()) {
      const auto report = shepherdson_demo();
      out << canonical_dump(shepherdson_report_to_json(report));
      err << (report.all_hold ? "all identities hold\n" : "an identity failed\n");
      return report.all_hold ? ok : negative;
    }
    if (cmd_nf->parsed()) {
      std::vector<RewriteRule> rules;
      for (const auto& r : nf_rules) rules.push_back(parse_rewrite_rule(r));
      const RewriteSystem rs = nf_rules.empty() ? RewriteSystem::shepherdson() : RewriteSystem(std::move(rules));
      const auto p = parse_nc_polynomial(nf_expr);
      const auto strategy = nf_strategy == "rightmost" ? ReductionStrategy::rightmost : ReductionStrategy::leftmost;
      const auto nf = nc_normal_form(p, rs, strategy, nf_budget);
      Json rule_json = Json::array();
      for (const auto& r : rs.rules()) rule_json.push_back(r.lhs + " -> " + r.rhs.to_string());
      Json overlaps = Json::array();
      for (const auto& o : overlap_check(rs)) overlaps.push_back(o.word);
      out << canonical_dump(
          Json{{"input", p.to_string()}, {"normal_form", nf.to_string()}, {"rules", rule_json}, {"overlaps", overlaps}});
      err << nf.to_string() << "\n";
      return ok;
    }
  } catch (const Error& e) {
    print_error(out, err, std::string(to_string(e.kind())), e.what());
    return exit_for(e);
  } catch (const std::exception& e) {
    print_error(out, err, "IOError", e.what());
    return usage;
  }
  return usage;
}

}  // namespace sprkit::cli

#endif  // SPRKIT_TOOLS_CLI_HPP
