#ifndef SPRKIT_SHEPHERDSON_HPP
#define SPRKIT_SHEPHERDSON_HPP

#include <string>
#include <vector>

#include "sprkit/free_algebra.hpp"
#include "sprkit/matrix.hpp"

namespace sprkit {

using NCMatrix = Matrix<FreeAlgebra>;

/// Entrywise normal form.
inline NCMatrix nc_normal_form(const NCMatrix& m, const RewriteSystem& rs) {
  std::vector<NCPolynomial> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(nc_normal_form(e, rs));
  return NCMatrix(m.ring(), m.dim(), std::move(out));
}

struct ShepherdsonCheck {
  std::string name;
  bool holds;
  /// normal form of the matrix the statement is about, row-major
  std::vector<std::string> entries;
};

struct ShepherdsonReport {
  std::vector<ShepherdsonCheck> checks;
  bool all_hold = true;
};

inline NCMatrix shepherdson_a() {
  using P = NCPolynomial;
  return NCMatrix(FreeAlgebra{}, 2, {P::monomial("a"), P::monomial("b"), P::monomial("c"), P::monomial("d")});
}

inline NCMatrix shepherdson_b() {
  using P = NCPolynomial;
  return NCMatrix(FreeAlgebra{}, 2, {P::monomial("w"), P::monomial("x"), P::monomial("y"), P::monomial("z")});
}

/// In M_2(R), R = Q<a,b,c,d,w,x,y,z>/(AB = I): AB = I but BA != I, A is a
/// left zero divisor, A = A^2 (B^2 A) is right strongly regular, and no Y
/// with A = Y A^2 exists (such a Y equals A B^2 = B, yet B A^2 != A).
inline ShepherdsonReport shepherdson_demo() {
  const RewriteSystem rs = RewriteSystem::shepherdson();
  const NCMatrix a = shepherdson_a();
  const NCMatrix b = shepherdson_b();
  const NCMatrix id = NCMatrix::identity(FreeAlgebra{}, 2);

  ShepherdsonReport report;
  auto record = [&](const std::string& name, bool holds, const NCMatrix& shown) {
    std::vector<std::string> entries;
    for (const auto& e : shown.entries()) entries.push_back(e.to_string());
    report.checks.push_back({name, holds, std::move(entries)});
    report.all_hold = report.all_hold && holds;
  };

  const NCMatrix ab = nc_normal_form(a * b, rs);
  record("AB = I", ab == id, ab);

  const NCMatrix ba = nc_normal_form(b * a, rs);
  record("BA != I", !(ba == id), ba);

  const NCMatrix zd = nc_normal_form(a * (id - b * a), rs);
  record("A(I - BA) = 0", zd.is_zero(), zd);

  const NCMatrix i_minus_ba = nc_normal_form(id - b * a, rs);
  record("I - BA != 0", !i_minus_ba.is_zero(), i_minus_ba);

  const NCMatrix rsr = nc_normal_form(a * a * (b * b * a) - a, rs);
  record("A = A^2 (B^2 A)", rsr.is_zero(), rsr);

  const NCMatrix forced = nc_normal_form(a * b * b - b, rs);
  record("A B^2 = B", forced.is_zero(), forced);

  const NCMatrix left_fail = nc_normal_form(b * a * a - a, rs);
  record("B A^2 != A", !left_fail.is_zero(), left_fail);

  if (!report.all_hold) {
    for (const auto& c : report.checks) {
      if (!c.holds) throw Error(ErrorKind::internal_violation, "identity failed: " + c.name);
    }
  }
  return report;
}

}  // namespace sprkit

#endif  // SPRKIT_SHEPHERDSON_HPP
