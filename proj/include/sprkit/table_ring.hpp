#ifndef SPRKIT_TABLE_RING_HPP
#define SPRKIT_TABLE_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sprkit/matrix.hpp"
#include "sprkit/ring_spec.hpp"

namespace sprkit {

/// A finite RingSpec with its addition and multiplication tabulated.
/// Elements are indices into enumerate_elements(spec).
class TableRing {
 public:
  using value_type = std::uint16_t;
  static constexpr bool commutative = true;
  static constexpr std::size_t max_order = 256;

  TableRing() = default;

  explicit TableRing(const RingSpec& spec) {
    const auto elems = enumerate_elements(spec, max_order);
    auto t = std::make_shared<Tables>();
    t->spec = spec;
    t->order = elems.size();
    t->elements = elems;
    const std::size_t q = t->order;
    t->add.resize(q * q);
    t->mul.resize(q * q);
    t->neg.resize(q);
    for (std::size_t i = 0; i < q; ++i) {
      t->neg[i] = static_cast<value_type>(element_index(-elems[i]));
      for (std::size_t j = 0; j < q; ++j) {
        t->add[i * q + j] = static_cast<value_type>(element_index(elems[i] + elems[j]));
        t->mul[i * q + j] = static_cast<value_type>(element_index(elems[i] * elems[j]));
      }
    }
    t->one = static_cast<value_type>(element_index(RingElem::one(spec)));
    tables_ = std::move(t);
  }

  const RingSpec& spec() const { return tables_->spec; }
  std::size_t order() const noexcept { return tables_->order; }

  value_type zero() const { return 0; }
  value_type one() const { return tables_->one; }
  value_type from_integer(const Integer& k) const {
    return static_cast<value_type>(element_index(RingElem::from_integer(tables_->spec, k)));
  }
  value_type add(value_type a, value_type b) const { return tables_->add[a * tables_->order + b]; }
  value_type sub(value_type a, value_type b) const { return add(a, tables_->neg[b]); }
  value_type mul(value_type a, value_type b) const { return tables_->mul[a * tables_->order + b]; }
  value_type neg(value_type a) const { return tables_->neg[a]; }
  bool equal(value_type a, value_type b) const { return a == b; }
  bool is_zero(value_type a) const { return a == 0; }
  std::string to_string(value_type a) const { return tables_->elements[a].to_string(); }
  bool contains(value_type a) const { return a < tables_->order; }

  const RingElem& lift(value_type a) const { return tables_->elements[a]; }
  value_type lower(const RingElem& e) const {
    if (!(e.spec() == tables_->spec)) throw Error(ErrorKind::spec_mismatch, "element outside tabulated ring");
    return static_cast<value_type>(element_index(e));
  }

  friend bool operator==(const TableRing& a, const TableRing& b) {
    return a.tables_ == b.tables_ || (a.tables_ && b.tables_ && a.tables_->spec == b.tables_->spec);
  }

 private:
  struct Tables {
    RingSpec spec;
    std::size_t order = 0;
    std::vector<RingElem> elements;
    std::vector<value_type> add;
    std::vector<value_type> mul;
    std::vector<value_type> neg;
    value_type one = 0;
  };
  std::shared_ptr<const Tables> tables_;
};

inline Matrix<DynRing> lift(const Matrix<TableRing>& m) {
  std::vector<RingElem> out;
  out.reserve(m.entries().size());
  for (auto e : m.entries()) out.push_back(m.ring().lift(e));
  return Matrix<DynRing>(DynRing(m.ring().spec()), m.dim(), std::move(out));
}

inline Matrix<TableRing> lower(const TableRing& ring, const Matrix<DynRing>& m) {
  std::vector<TableRing::value_type> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(ring.lower(e));
  return Matrix<TableRing>(ring, m.dim(), std::move(out));
}

}  // namespace sprkit

#endif  // SPRKIT_TABLE_RING_HPP
