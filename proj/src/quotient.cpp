#include "sublat/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "sublat/arith.hpp"
#include "sublat/errors.hpp"

namespace sublat {

Projection::Projection(ModulePtr source, ModulePtr target, std::vector<ElemId> table)
    : source_(std::move(source)),
      target_(std::move(target)),
      table_(std::move(table)),
      kernel_(zero_submodule(source_)) {
  if (table_.size() != source_->order()) throw InternalError("projection table has wrong size");
  if (!(source_->ring() == target_->ring())) throw InternalError("projection changes the ring");
  constexpr ElemId kUnset = ~ElemId{0};
  min_rep_.assign(target_->order(), kUnset);
  MemberSet ker(source_->order());
  for (ElemId x = 0; x < source_->order(); ++x) {
    const ElemId q = table_[x];
    if (q >= target_->order()) throw InternalError("projection leaves the target module");
    if (min_rep_[q] == kUnset) min_rep_[q] = x;
    if (q == target_->zero()) ker.set(x);
  }
  if (std::find(min_rep_.begin(), min_rep_.end(), kUnset) != min_rep_.end())
    throw InternalError("projection is not surjective");
  kernel_ = from_members(source_, ker);
  if (static_cast<std::uint64_t>(kernel_.order()) * target_->order() != source_->order())
    throw InternalError("projection fibres are uneven; not a homomorphism");
}

Submodule Projection::image(const Submodule& n) const {
  if (!same_module(n.module(), *source_)) throw DomainError("image: submodule of another module");
  std::vector<ElemId> gens;
  for (auto g : n.gens()) gens.push_back(apply(g));
  return span(target_, gens);
}

Submodule Projection::preimage(const Submodule& n) const {
  if (!same_module(n.module(), *target_)) throw DomainError("preimage: submodule of another module");
  MemberSet out(source_->order());
  for (ElemId x = 0; x < source_->order(); ++x)
    if (n.contains(apply(x))) out.set(x);
  return from_members(source_, out);
}

namespace {

using Wide = __int128;

struct Diagonalization {
  std::vector<std::int64_t> diagonal;          // one entry per column
  std::vector<std::vector<std::int64_t>> cols;  // column transform, reduced mod `modulus`
};

Wide wabs(Wide v) { return v < 0 ? -v : v; }

// Smith normal form of an integer relation matrix with c columns, tracking
// only the column transform V (U·A·V = D). The quotient Z^c / rowspace(A)
// is then ⊕ Z/d_j through x ↦ xV mod d.
Diagonalization diagonalize(std::vector<std::vector<Wide>> a, std::size_t c, std::int64_t modulus) {
  const std::size_t r = a.size();
  std::vector<std::vector<Wide>> v(c, std::vector<Wide>(c, 0));
  for (std::size_t i = 0; i < c; ++i) v[i][i] = 1;
  constexpr Wide kLimit = Wide(1) << 100;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, Wide q) {  // col_dst -= q col_src
    for (auto& row : a) {
      row[dst] -= q * row[src];
      if (wabs(row[dst]) > kLimit) throw InternalError("Smith normal form overflow");
    }
    for (auto& row : v) row[dst] = (row[dst] - q * row[src]) % modulus;
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, Wide q) {
    for (std::size_t j = 0; j < c; ++j) {
      a[dst][j] -= q * a[src][j];
      if (wabs(a[dst][j]) > kLimit) throw InternalError("Smith normal form overflow");
    }
  };

  Diagonalization out;
  out.diagonal.assign(c, 0);
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a[i][j] != 0 && (pi == r || wabs(a[i][j]) < wabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;
      std::swap(a[t], a[pi]);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        row_axpy(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block keeps the invariant factors canonical.
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_axpy(t, i, -1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    out.diagonal[t] = static_cast<std::int64_t>(wabs(a[t][t]));
  }
  out.cols.assign(c, std::vector<std::int64_t>(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      out.cols[i][j] = static_cast<std::int64_t>(((v[i][j] % modulus) + modulus) % modulus);
  return out;
}

struct BlockMap {
  std::vector<std::int64_t> orders;          // target cyclic orders, descending
  std::vector<std::vector<std::int64_t>> w;  // per target component: weight of each source component
};

BlockMap quotient_block(const FiniteModule& m, std::size_t b, const Submodule& k) {
  const std::size_t lo = m.block_begin(b), hi = m.block_end(b), c = hi - lo;
  BlockMap out;
  if (c == 0) return out;
  std::vector<std::vector<Wide>> rel;
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Wide> row(c, 0);
    row[j] = m.orders()[lo + j];
    rel.push_back(std::move(row));
  }
  for (auto g : k.gens()) {
    std::vector<Wide> row(c, 0);
    bool any = false;
    for (std::size_t j = 0; j < c; ++j) {
      row[j] = m.digit(g, lo + j);
      any = any || row[j] != 0;
    }
    if (any) rel.push_back(std::move(row));
  }
  const auto d = diagonalize(std::move(rel), c, m.block_exponent(b));
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < c; ++j)
    if (d.diagonal[j] > 1) keep.push_back(j);
  std::stable_sort(keep.begin(), keep.end(),
                   [&](std::size_t x, std::size_t y) { return d.diagonal[x] > d.diagonal[y]; });
  for (auto j : keep) {
    out.orders.push_back(d.diagonal[j]);
    std::vector<std::int64_t> col(c);
    for (std::size_t i = 0; i < c; ++i) col[i] = d.cols[i][j];
    out.w.push_back(std::move(col));
  }
  return out;
}

}  // namespace

Quotient quotient(const Submodule& k) {
  const auto& m = k.module();
  std::vector<BlockMap> maps;
  std::vector<std::vector<std::int64_t>> blocks;
  for (std::size_t b = 0; b < m.block_count(); ++b) {
    maps.push_back(quotient_block(m, b, k));
    blocks.push_back(maps.back().orders);
  }
  auto target = FiniteModule::build(m.ring(), blocks, m.limits());
  std::vector<ElemId> table(m.order());
  for (ElemId x = 0; x < m.order(); ++x) {
    Element y;
    for (std::size_t b = 0; b < m.block_count(); ++b) {
      const auto lo = m.block_begin(b);
      for (std::size_t t = 0; t < maps[b].orders.size(); ++t) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < maps[b].w[t].size(); ++i)
          s = (s + m.digit(x, lo + i) * maps[b].w[t][i]) % maps[b].orders[t];
        y.residues.push_back(s);
      }
    }
    table[x] = target->encode(y);
  }
  Projection proj(k.module_ptr(), target, std::move(table));
  if (!(proj.kernel() == k)) throw InternalError("quotient: kernel differs from the submodule");
  return Quotient{target, std::move(proj)};
}

Localization localize(const ModulePtr& m, std::int64_t p) {
  if (m->ring().kind() != Ring::Kind::Integer)
    throw DomainError("localize: only modules over the integers are supported");
  if (!is_prime(p)) throw DomainError("localize: " + std::to_string(p) + " is not prime");
  std::vector<std::pair<std::int64_t, std::size_t>> parts;  // (p-part order, source component)
  for (std::size_t j = 0; j < m->component_count(); ++j) {
    std::int64_t q = 1;
    for (int v = valuation(m->orders()[j], p); v > 0; --v) q *= p;
    if (q > 1) parts.emplace_back(q, j);
  }
  std::stable_sort(parts.begin(), parts.end(), [](auto& x, auto& y) { return x.first > y.first; });
  std::vector<std::int64_t> orders;
  for (auto& [q, j] : parts) orders.push_back(q);
  auto target = FiniteModule::build(m->ring(), {orders}, m->limits());
  std::vector<ElemId> table(m->order());
  for (ElemId x = 0; x < m->order(); ++x) {
    Element y;
    for (auto& [q, j] : parts) y.residues.push_back(m->digit(x, j) % q);
    table[x] = target->encode(y);
  }
  return Localization{p, target, Projection(m, target, std::move(table))};
}

bool exists_unit_multiplier(const Submodule& n, const Submodule& k, std::int64_t p) {
  const auto& m = n.module();
  const auto e = m.exponent();
  // The action factors through Z/e; s and s mod e are both prime to p when
  // p | e. When p ∤ e, s = e is available and kills everything.
  if (e % p != 0) return true;
  for (std::int64_t s = 1; s < e; ++s) {
    if (s % p == 0) continue;
    const RingElement r{s};
    bool ok = true;
    for (auto g : n.gens())
      if (!k.contains(m.scale(r, g))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<Submodule> decompose_submodule(const Submodule& n) {
  const auto& m = n.module();
  if (m.ring().kind() != Ring::Kind::Product)
    throw DomainError("decompose_submodule requires a product-ring module");
  std::vector<Submodule> out;
  for (std::size_t b = 0; b < m.block_count(); ++b) {
    std::vector<ElemId> gens;
    for (auto g : n.gens()) gens.push_back(m.restrict_to_factor(b, g));
    out.push_back(span(m.factor_module(b), gens));
  }
  return out;
}

Submodule product_submodule(const ModulePtr& m, const std::vector<Submodule>& parts) {
  if (parts.size() != m->block_count()) throw DomainError("product_submodule: wrong part count");
  std::vector<ElemId> gens;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    if (!same_module(parts[b].module(), *m->factor_module(b)))
      throw DomainError("product_submodule: part is not a submodule of the factor module");
    for (auto g : parts[b].gens()) gens.push_back(m->embed_from_factor(b, g));
  }
  return span(m, gens);
}

}  // namespace sublat
