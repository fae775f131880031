#include "sublat/module.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "sublat/arith.hpp"
#include "sublat/errors.hpp"

namespace sublat {

ModulePtr FiniteModule::build(Ring ring, std::vector<std::vector<std::int64_t>> blocks,
                              const Limits& limits) {
  if (blocks.size() != ring.factor_count())
    throw DomainError("module has " + std::to_string(blocks.size()) + " block(s) but ring " +
                      ring.descriptor() + " has " + std::to_string(ring.factor_count()) +
                      " factor(s)");
  std::shared_ptr<FiniteModule> m(new FiniteModule());
  m->ring_ = ring;
  m->limits_ = limits;
  m->block_start_.push_back(0);
  std::uint64_t order = 1;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto& blk = blocks[b];
    const auto n = ring.modulus(b);
    for (auto k : blk) {
      if (k < 1) throw DomainError("cyclic order must be >= 1, got " + std::to_string(k));
      if (n != 0 && n % k != 0)
        throw DomainError("cyclic order " + std::to_string(k) + " does not divide modulus " +
                          std::to_string(n));
    }
    std::erase(blk, 1);
    std::sort(blk.begin(), blk.end(), std::greater<>());
    std::int64_t e = 1;
    for (auto k : blk) {
      order *= static_cast<std::uint64_t>(k);
      if (order > limits.order_cap)
        throw ResourceError("module order exceeds order cap " + std::to_string(limits.order_cap));
      e = std::lcm(e, k);
      m->orders_.push_back(k);
      m->block_of_.push_back(b);
    }
    m->block_exponent_.push_back(e);
    m->exponent_ = std::lcm(m->exponent_, e);
    m->block_start_.push_back(m->orders_.size());
  }
  m->order_ = static_cast<std::uint32_t>(order);

  const std::size_t c = m->orders_.size();
  m->stride_.assign(c, 1);
  for (std::size_t j = c; j-- > 1;)
    m->stride_[j - 1] = m->stride_[j] * static_cast<std::uint32_t>(m->orders_[j]);
  m->digits_.resize(static_cast<std::size_t>(m->order_) * c);
  for (std::uint32_t id = 0; id < m->order_; ++id) {
    std::uint32_t rest = id;
    for (std::size_t j = 0; j < c; ++j) {
      m->digits_[id * c + j] = static_cast<std::int32_t>(rest / m->stride_[j]);
      rest %= m->stride_[j];
    }
  }

  if (ring.kind() == Ring::Kind::Product) {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      m->factors_.push_back(build(Ring::residue(ring.modulus(b)), {blocks[b]}, limits));
  }
  return m;
}

std::span<const std::int64_t> FiniteModule::block(std::size_t b) const {
  return std::span<const std::int64_t>(orders_).subspan(block_begin(b), block_end(b) - block_begin(b));
}

Element FiniteModule::decode(ElemId id) const {
  Element e;
  e.residues.resize(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) e.residues[j] = digit(id, j);
  return e;
}

ElemId FiniteModule::encode(const Element& e) const {
  if (e.residues.size() != orders_.size())
    throw DomainError("element has " + std::to_string(e.residues.size()) + " residues, module " +
                      descriptor() + " has " + std::to_string(orders_.size()) + " components");
  ElemId id = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (e.residues[j] < 0 || e.residues[j] >= orders_[j])
      throw DomainError("residue out of range for component of order " + std::to_string(orders_[j]));
    id += static_cast<ElemId>(e.residues[j]) * stride_[j];
  }
  return id;
}

ElemId FiniteModule::add(ElemId a, ElemId b) const {
  ElemId out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    auto s = digit(a, j) + digit(b, j);
    if (s >= orders_[j]) s -= orders_[j];
    out += static_cast<ElemId>(s) * stride_[j];
  }
  return out;
}

ElemId FiniteModule::negate(ElemId a) const {
  ElemId out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const auto d = digit(a, j);
    out += static_cast<ElemId>(d == 0 ? 0 : orders_[j] - d) * stride_[j];
  }
  return out;
}

ElemId FiniteModule::scale(const RingElement& r, ElemId a) const {
  if (r.size() != block_count())
    throw DomainError("ring element has " + std::to_string(r.size()) + " coordinates, ring " +
                      ring_.descriptor() + " has " + std::to_string(block_count()));
  ElemId out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const auto n = orders_[j];
    const auto s = mod_floor(r[block_of_[j]], n);
    out += static_cast<ElemId>((s * digit(a, j)) % n) * stride_[j];
  }
  return out;
}

ElemId FiniteModule::basis(std::size_t component) const { return stride_.at(component); }

ElemId FiniteModule::project_block(std::size_t b, ElemId a) const {
  ElemId out = 0;
  for (std::size_t j = block_begin(b); j < block_end(b); ++j)
    out += static_cast<ElemId>(digit(a, j)) * stride_[j];
  return out;
}

RingElement FiniteModule::block_scalar(std::size_t b, std::int64_t value) const {
  RingElement r(block_count(), 0);
  r.at(b) = value;
  return r;
}

std::string FiniteModule::descriptor() const {
  std::string out;
  for (std::size_t b = 0; b < block_count(); ++b) {
    if (b) out += " | ";
    const auto blk = block(b);
    if (blk.empty()) out += "Z1";
    for (std::size_t j = 0; j < blk.size(); ++j) {
      if (j) out += 'x';
      out += 'Z' + std::to_string(blk[j]);
    }
  }
  return out;
}

ModulePtr FiniteModule::factor_module(std::size_t b) const {
  if (factors_.empty()) throw DomainError("factor_module requires a product-ring module");
  return factors_.at(b);
}

ElemId FiniteModule::embed_from_factor(std::size_t b, ElemId e) const {
  const auto& f = *factor_module(b);
  ElemId out = 0;
  for (std::size_t j = 0; j < f.component_count(); ++j)
    out += static_cast<ElemId>(f.digit(e, j)) * stride_[block_begin(b) + j];
  return out;
}

ElemId FiniteModule::restrict_to_factor(std::size_t b, ElemId a) const {
  const auto& f = *factor_module(b);
  Element e;
  for (std::size_t j = block_begin(b); j < block_end(b); ++j) e.residues.push_back(digit(a, j));
  return f.encode(e);
}

// ---------------------------------------------------------------------------

ModulePtr parse_module(std::string_view module_text, std::string_view ring_text,
                       const Limits& limits) {
  std::string s;
  for (char c : module_text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw UsageError("empty module descriptor");

  std::vector<std::vector<std::int64_t>> blocks;
  std::size_t start = 0;
  while (true) {
    const auto bar = s.find('|', start);
    const std::string blk = s.substr(start, bar - start);
    std::vector<std::int64_t> orders;
    std::size_t t = 0;
    while (true) {
      const auto x = blk.find('x', t);
      const std::string term = blk.substr(t, x - t);
      if (term.size() < 2 || term[0] != 'Z')
        throw UsageError("module descriptor: expected Z<k>, got '" + term + "'");
      std::int64_t v = 0;
      for (std::size_t i = 1; i < term.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(term[i])))
          throw UsageError("module descriptor: bad number in '" + term + "'");
        if (v > 1'000'000'000'000) throw ResourceError("module descriptor: cyclic order too large");
        v = v * 10 + (term[i] - '0');
      }
      if (v < 1) throw UsageError("module descriptor: cyclic order must be >= 1");
      if (v > limits.order_cap)
        throw ResourceError("module order exceeds order cap " + std::to_string(limits.order_cap));
      orders.push_back(v);
      if (x == std::string::npos) break;
      t = x + 1;
    }
    blocks.push_back(std::move(orders));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }

  Ring ring = Ring::integers();
  if (!ring_text.empty()) {
    ring = parse_ring(ring_text);
  } else if (blocks.size() > 1) {
    std::vector<std::int64_t> moduli;
    for (const auto& blk : blocks) {
      std::int64_t e = 1;
      for (auto k : blk) e = std::lcm(e, k);
      moduli.push_back(e);
    }
    ring = Ring::product(std::move(moduli));
  }
  return FiniteModule::build(std::move(ring), std::move(blocks), limits);
}

ModulePtr product_module(std::span<const ModulePtr> parts, const Limits& limits) {
  if (parts.size() < 2) throw DomainError("product_module needs at least two parts");
  std::vector<std::int64_t> moduli;
  std::vector<std::vector<std::int64_t>> blocks;
  for (const auto& p : parts) {
    if (p->ring().kind() != Ring::Kind::Residue)
      throw DomainError("product_module parts must be modules over residue rings");
    moduli.push_back(p->ring().modulus(0));
    auto blk = p->block(0);
    blocks.emplace_back(blk.begin(), blk.end());
  }
  return FiniteModule::build(Ring::product(std::move(moduli)), std::move(blocks), limits);
}

Element scalar_action(const FiniteModule& m, const RingElement& r, const Element& x) {
  return m.decode(m.scale(r, m.encode(x)));
}

std::string element_to_string(const Element& e) {
  if (e.residues.empty()) return "0";
  if (e.residues.size() == 1) return std::to_string(e.residues[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < e.residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e.residues[i]);
  }
  return out + ")";
}

}  // namespace sublat
