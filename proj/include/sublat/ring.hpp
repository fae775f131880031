#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sublat/arith.hpp"

namespace sublat {

/// Coefficient ring: the integers, a residue ring Z/nZ, or a finite product
/// of residue rings. Each ring has one or more "factors"; the integers and
/// residue rings have exactly one.
class Ring {
 public:
  enum class Kind { Integer, Residue, Product };

  static Ring integers();
  static Ring residue(std::int64_t modulus);
  static Ring product(std::vector<std::int64_t> moduli);

  Kind kind() const noexcept { return kind_; }
  std::size_t factor_count() const noexcept { return moduli_.size(); }
  /// Modulus of factor i; 0 stands for the integers.
  std::int64_t modulus(std::size_t i) const { return moduli_.at(i); }
  std::span<const std::int64_t> moduli() const noexcept { return moduli_; }
  bool is_finite() const noexcept { return kind_ != Kind::Integer; }

  /// `Z`, `Z12`, `Z4*Z9`.
  std::string descriptor() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind k, std::vector<std::int64_t> m) : kind_(k), moduli_(std::move(m)) {}
  Kind kind_;
  std::vector<std::int64_t> moduli_;
};

/// Parses `Z`, `Z<n>` or `Z<n>*Z<m>*...`; whitespace is ignored.
Ring parse_ring(std::string_view text);

/// A ring element given by one integer per factor.
using RingElement = std::vector<std::int64_t>;

/// An ideal with its canonical generator per factor: g >= 0 over the
/// integers (0 is the zero ideal), a divisor d of n over Z/nZ (d == n is
/// the zero ideal, d == 1 the whole ring).
class Ideal {
 public:
  /// Canonicalizes: |g| over Z, gcd(g mod n, n) over Z/nZ.
  Ideal(Ring ring, std::vector<std::int64_t> gens);
  static Ideal principal(const Ring& ring, const RingElement& r) { return Ideal(ring, r); }
  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const std::int64_t> gens() const noexcept { return gens_; }
  std::int64_t gen(std::size_t factor = 0) const { return gens_.at(factor); }

  bool is_zero() const;
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  /// this ⊇ other.
  bool contains(const Ideal& other) const;
  bool contains_element(const RingElement& r) const;

  std::string to_string() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend auto operator<=>(const Ideal& a, const Ideal& b) { return a.gens_ <=> b.gens_; }

 private:
  Ring ring_;
  std::vector<std::int64_t> gens_;
};

enum class IdealOp { Sum, Intersect, Product, Colon };

/// Ideal arithmetic. Colon is (lhs : rhs) = {r : r·rhs ⊆ lhs}.
Ideal ideal_combine(const Ideal& lhs, const Ideal& rhs, IdealOp op);
Ideal ideal_radical(const Ideal& ideal);

enum class IdealPredicate {
  Prime,
  Irreducible,
  StronglyIrreducible,
  TwoIrreducible,
  StronglyTwoIrreducible,
  TwoAbsorbing,
};

std::string_view to_string(IdealPredicate p);
IdealPredicate parse_ideal_predicate(std::string_view name);
inline constexpr IdealPredicate kAllIdealPredicates[] = {
    IdealPredicate::Prime,          IdealPredicate::Irreducible,
    IdealPredicate::StronglyIrreducible, IdealPredicate::TwoIrreducible,
    IdealPredicate::StronglyTwoIrreducible, IdealPredicate::TwoAbsorbing};

/// Decides an ideal predicate. Over the integers prime, strongly
/// irreducible and strongly 2-irreducible use closed forms from the
/// factorization; everything else quantifies over a finite ideal lattice.
/// Throws DomainError for the whole ring with a proper-only predicate,
/// ResourceError for an integer generator above `factor_cap`.
bool classify_ideal(const Ideal& ideal, IdealPredicate p, std::int64_t factor_cap = kDefaultFactorCap);

/// Every ideal of a finite ring, in lexicographic generator order.
/// DomainError over the integers.
std::vector<Ideal> all_ideals(const Ring& ring);

}  // namespace sublat
