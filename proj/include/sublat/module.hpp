#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sublat/ring.hpp"

namespace sublat {

/// Size bounds shared by every operation that can blow up.
struct Limits {
  std::uint32_t order_cap = 4096;
  std::size_t lattice_cap = 512;
  std::int64_t factor_cap = 1'000'000'000'000;
};

/// Index of an element inside its module. Indices follow the lexicographic
/// order of residue tuples.
using ElemId = std::uint32_t;

/// Residue tuple, one entry per cyclic component.
struct Element {
  std::vector<std::int64_t> residues;
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// A finite module: per ring factor, a direct sum of cyclic groups. The i-th
/// ring factor acts on block i and annihilates the other blocks.
class FiniteModule {
 public:
  /// Validates and normalizes (components of order 1 dropped, orders sorted
  /// descending within a block). Throws ResourceError above `limits.order_cap`,
  /// DomainError when an order does not divide its residue-ring modulus or
  /// the block count does not match the ring.
  static ModulePtr build(Ring ring, std::vector<std::vector<std::int64_t>> blocks,
                         const Limits& limits = {});

  const Ring& ring() const noexcept { return ring_; }
  std::size_t block_count() const noexcept { return block_start_.size() - 1; }
  /// Cyclic orders of block b.
  std::span<const std::int64_t> block(std::size_t b) const;
  std::span<const std::int64_t> orders() const noexcept { return orders_; }
  std::size_t component_count() const noexcept { return orders_.size(); }
  std::size_t block_of(std::size_t component) const { return block_of_.at(component); }
  std::size_t block_begin(std::size_t b) const { return block_start_.at(b); }
  std::size_t block_end(std::size_t b) const { return block_start_.at(b + 1); }

  std::uint32_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  std::int64_t block_exponent(std::size_t b) const { return block_exponent_.at(b); }
  const Limits& limits() const noexcept { return limits_; }

  ElemId zero() const noexcept { return 0; }
  Element decode(ElemId id) const;
  ElemId encode(const Element& e) const;
  std::int64_t digit(ElemId id, std::size_t component) const {
    return digits_[static_cast<std::size_t>(id) * orders_.size() + component];
  }
  ElemId add(ElemId a, ElemId b) const;
  ElemId negate(ElemId a) const;
  /// r·a for a ring element with one integer per ring factor.
  ElemId scale(const RingElement& r, ElemId a) const;
  /// The unit vector of a cyclic component.
  ElemId basis(std::size_t component) const;
  /// e_b · a: keep block b, zero the rest.
  ElemId project_block(std::size_t b, ElemId a) const;

  /// Ring element acting as `value` on block b and as 0 on the others.
  RingElement block_scalar(std::size_t b, std::int64_t value) const;

  /// Descriptor `Z4xZ2 | Z9`; an empty block prints as `Z1`.
  std::string descriptor() const;

  /// For product rings: block b as a module over its residue-ring factor.
  ModulePtr factor_module(std::size_t b) const;
  /// Index in this module of element `e` of factor_module(b).
  ElemId embed_from_factor(std::size_t b, ElemId e) const;
  /// Component of `a` in factor_module(b).
  ElemId restrict_to_factor(std::size_t b, ElemId a) const;

 private:
  FiniteModule() = default;

  Ring ring_ = Ring::integers();
  Limits limits_;
  std::vector<std::int64_t> orders_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> block_start_;
  std::vector<std::int64_t> block_exponent_;
  std::vector<std::uint32_t> stride_;
  std::vector<std::int32_t> digits_;
  std::uint32_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<ModulePtr> factors_;
};

/// Parses the module grammar: `Z<k>` cyclic summand, `x` joins summands in
/// a block, `|` separates ring-factor blocks. Without a ring, a single block
/// is a Z-module and several blocks get the product of their exponents.
ModulePtr parse_module(std::string_view module_text, std::string_view ring_text = {},
                       const Limits& limits = {});

/// Direct product of modules over residue rings, as a module over the
/// product ring.
ModulePtr product_module(std::span<const ModulePtr> parts, const Limits& limits = {});

/// r·m, with r reduced per factor.
Element scalar_action(const FiniteModule& m, const RingElement& r, const Element& x);

std::string element_to_string(const Element& e);

}  // namespace sublat
