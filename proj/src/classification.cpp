#include "sublat/classification.hpp"

#include <bit>
#include <unordered_set>

#include "sublat/errors.hpp"

namespace sublat {

std::string_view to_string(SubPredicate p) {
  switch (p) {
    case SubPredicate::Irreducible: return "irreducible";
    case SubPredicate::StronglyIrreducible: return "strongly_irreducible";
    case SubPredicate::TwoIrreducible: return "two_irreducible";
    case SubPredicate::StronglyTwoIrreducible: return "strongly_two_irreducible";
    case SubPredicate::StronglySumTwoIrreducible: return "strongly_sum_two_irreducible";
  }
  return "?";
}

std::string_view to_string(RowFlag f) {
  switch (f) {
    case RowFlag::Irreducible: return "irreducible";
    case RowFlag::StronglyIrreducible: return "strongly_irreducible";
    case RowFlag::TwoIrreducible: return "two_irreducible";
    case RowFlag::StronglyTwoIrreducible: return "strongly_two_irreducible";
    case RowFlag::StronglySumTwoIrreducible: return "strongly_sum_two_irreducible";
    case RowFlag::Prime: return "prime";
    case RowFlag::Primary: return "primary";
    case RowFlag::TwoAbsorbing: return "two_absorbing";
    case RowFlag::TwoAbsorbingPrimary: return "two_absorbing_primary";
    case RowFlag::Radical: return "radical";
    case RowFlag::Pure: return "pure";
    case RowFlag::Waist: return "waist";
  }
  return "?";
}

namespace {

using Index = SubmoduleLattice::Index;
using Word = std::uint64_t;

// Row-major bit matrix over lattice indices.
class BitRows {
 public:
  BitRows(std::size_t rows, std::size_t bits) : words_((bits + 63) / 64), data_(rows * words_, 0) {}
  std::size_t words() const { return words_; }
  Word* row(std::size_t r) { return data_.data() + r * words_; }
  const Word* row(std::size_t r) const { return data_.data() + r * words_; }
  static void set(Word* row, std::size_t i) { row[i / 64] |= Word{1} << (i % 64); }
  static bool test(const Word* row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1; }

 private:
  std::size_t words_;
  std::vector<Word> data_;
};

std::vector<Word> words_of(const IndexSet& s) {
  std::vector<Word> w(s.num_blocks());
  boost::to_block_range(s, w.begin());
  return w;
}

// First set bit at position >= from of the word stream produced by `word`.
template <class F>
std::optional<Index> first_from(std::size_t from, std::size_t words, F&& word) {
  for (std::size_t w = from / 64; w < words; ++w) {
    Word v = word(w);
    if (w == from / 64) v &= ~Word{0} << (from % 64);
    if (v) return static_cast<Index>(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
  }
  return std::nullopt;
}

// Searches D for the least unordered pair/triple violating the predicate.
// `combine` is meet or join, `ok(x)` says a combined value is acceptable
// (x ⊆ N for meets, N ⊆ x for joins).
template <class Combine, class Ok>
class Kernel {
 public:
  Kernel(std::size_t size, const std::vector<Word>& domain, Combine combine, Ok ok)
      : size_(size), domain_(domain), combine_(combine), ok_(ok), bad_(size, size) {
    for (std::size_t h = 0; h < size_; ++h) {
      if (!BitRows::test(domain_.data(), h)) continue;
      Word* row = bad_.row(h);
      for (std::size_t c = 0; c < size_; ++c)
        if (BitRows::test(domain_.data(), c) && !ok_(combine_(static_cast<Index>(h), static_cast<Index>(c))))
          BitRows::set(row, c);
    }
  }

  // a, b in D with neither acceptable alone but combine(a, b) acceptable.
  std::optional<std::vector<Index>> pair() const {
    const std::size_t w = bad_.words();
    for (std::size_t a = 0; a < size_; ++a) {
      if (!BitRows::test(domain_.data(), a) || ok_(static_cast<Index>(a))) continue;
      const Word* xa = bad_.row(a);
      // Single-element badness coincides with combine(c, c) = c being bad.
      auto b = first_from(a, w, [&](std::size_t i) { return domain_[i] & ~xa[i] & diag(i); });
      if (b) return std::vector<Index>{static_cast<Index>(a), *b};
    }
    return std::nullopt;
  }

  // a < b < c in D, every pairwise combination bad, the triple acceptable.
  std::optional<std::vector<Index>> triple() const {
    const std::size_t w = bad_.words();
    for (std::size_t a = 0; a < size_; ++a) {
      if (!BitRows::test(domain_.data(), a)) continue;
      const Word* xa = bad_.row(a);
      for (auto b = first_from(a + 1, w, [&](std::size_t i) { return xa[i]; }); b;
           b = first_from(*b + 1, w, [&](std::size_t i) { return xa[i]; })) {
        const Word* xb = bad_.row(*b);
        const Word* xm = bad_.row(combine_(static_cast<Index>(a), *b));
        auto c = first_from(*b + 1, w, [&](std::size_t i) { return xa[i] & xb[i] & ~xm[i] & domain_[i]; });
        if (c) return std::vector<Index>{static_cast<Index>(a), *b, *c};
      }
    }
    return std::nullopt;
  }

 private:
  Word diag(std::size_t word) const {
    if (diag_.empty()) {
      diag_.assign(bad_.words(), 0);
      for (std::size_t c = 0; c < size_; ++c)
        if (!ok_(static_cast<Index>(c))) BitRows::set(diag_.data(), c);
    }
    return diag_[word];
  }

  std::size_t size_;
  const std::vector<Word>& domain_;
  Combine combine_;
  Ok ok_;
  BitRows bad_;
  mutable std::vector<Word> diag_;
};

template <class Combine, class Ok>
Kernel<Combine, Ok> make_kernel(std::size_t size, const std::vector<Word>& domain, Combine c, Ok ok) {
  return Kernel<Combine, Ok>(size, domain, c, ok);
}

}  // namespace

Verdict classify(const SubmoduleLattice& lattice, Index n, SubPredicate p, const ClassifyOptions& options) {
  if (n >= lattice.size()) throw DomainError("submodule index out of range");
  const Index top = options.ambient.value_or(lattice.whole_index());
  if (top >= lattice.size()) throw DomainError("ambient submodule index out of range");
  if (!lattice.leq(n, top)) throw DomainError("N is not contained in the ambient submodule");

  const bool whole_allowed =
      p == SubPredicate::StronglySumTwoIrreducible ||
      (options.allow_whole && (p == SubPredicate::Irreducible || p == SubPredicate::TwoIrreducible));
  if (n == top && !whole_allowed)
    throw DomainError(std::string(to_string(p)) + " is defined only for proper submodules");

  IndexSet domain = lattice.below(top);
  if (p == SubPredicate::Irreducible || p == SubPredicate::TwoIrreducible) domain &= lattice.above(n);
  const auto words = words_of(domain);

  const auto meet = [&](Index a, Index b) { return lattice.meet(a, b); };
  const auto join = [&](Index a, Index b) { return lattice.join(a, b); };
  const auto inside = [&](Index x) { return lattice.leq(x, n); };
  const auto covers = [&](Index x) { return lattice.leq(n, x); };

  std::optional<std::vector<Index>> witness;
  switch (p) {
    case SubPredicate::Irreducible:
    case SubPredicate::StronglyIrreducible:
      witness = make_kernel(lattice.size(), words, meet, inside).pair();
      break;
    case SubPredicate::TwoIrreducible:
    case SubPredicate::StronglyTwoIrreducible:
      witness = make_kernel(lattice.size(), words, meet, inside).triple();
      break;
    case SubPredicate::StronglySumTwoIrreducible:
      witness = make_kernel(lattice.size(), words, join, covers).triple();
      break;
  }
  if (witness) return {false, std::move(*witness)};
  return {true, {}};
}

bool classify(const Submodule& n, const SubmoduleLattice& lattice, SubPredicate p) {
  return classify(lattice, lattice.index_of(n), p).holds;
}

namespace {

std::vector<Submodule> distinct_cyclic(const ModulePtr& m) {
  std::vector<Submodule> out;
  std::unordered_set<MemberSet> seen;
  for (ElemId x = 0; x < m->order(); ++x) {
    const ElemId g[] = {x};
    Submodule s = span(m, g);
    if (seen.insert(s.members()).second) out.push_back(std::move(s));
  }
  return out;
}

bool subset(const MemberSet& a, const MemberSet& b) { return a.is_subset_of(b); }

// For every unordered triple of the given sets (repetition allowed):
// A ∩ B ∩ C ⊆ N forces a pairwise intersection into N.
bool triple_condition(std::size_t count, const MemberSet& n, auto&& pick) {
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i; j < count; ++j)
      for (std::size_t k = j; k < count; ++k) {
        const MemberSet& a = pick(i, j, k, 0);
        const MemberSet& b = pick(i, j, k, 1);
        const MemberSet& c = pick(i, j, k, 2);
        const MemberSet ab = a & b;
        if (subset(ab, n)) continue;
        const MemberSet ac = a & c;
        if (subset(ac, n)) continue;
        const MemberSet bc = b & c;
        if (subset(bc, n)) continue;
        if (subset(ab & c, n)) return false;
      }
  return true;
}

}  // namespace

bool classify_via_elements(const Submodule& n) {
  if (n.is_whole()) return true;
  const auto cyc = distinct_cyclic(n.module_ptr());
  const std::size_t k = cyc.size();
  std::vector<std::vector<MemberSet>> sums(k, std::vector<MemberSet>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      sums[i][j] = extend(cyc[i], cyc[j].gens()).members();
      sums[j][i] = sums[i][j];
    }
  // x, y, z ↦ (Rx+Ry), (Rx+Rz), (Ry+Rz).
  return triple_condition(k, n.members(),
                          [&](std::size_t i, std::size_t j, std::size_t l, int which) -> const MemberSet& {
                            if (which == 0) return sums[i][j];
                            if (which == 1) return sums[i][l];
                            return sums[j][l];
                          });
}

bool cyclic_triple_condition(const Submodule& n) {
  const auto cyc = distinct_cyclic(n.module_ptr());
  return triple_condition(cyc.size(), n.members(),
                          [&](std::size_t i, std::size_t j, std::size_t l, int which) -> const MemberSet& {
                            if (which == 0) return cyc[i].members();
                            if (which == 1) return cyc[j].members();
                            return cyc[l].members();
                          });
}

ClassificationReport classify_all(const SubmoduleLattice& lattice) {
  const auto& m = lattice.module();
  ClassificationReport rep;
  rep.module = m.descriptor();
  rep.ring = m.ring().descriptor();
  rep.order = m.order();
  rep.exponent = m.exponent();

  for (Index i = 0; i < lattice.size(); ++i) {
    const Submodule& s = lattice[i];
    ReportRow row;
    row.id = i;
    row.order = s.order();
    row.generators = s.generators();
    row.colon = colon_into(s);
    row.annihilator = annihilator(s);
    row.radical = radical_index(lattice, i);
    auto set = [&](RowFlag f, bool v) { row.flags[static_cast<std::size_t>(f)] = v; };
    if (s.is_proper()) {
      set(RowFlag::Irreducible, classify(lattice, i, SubPredicate::Irreducible).holds);
      set(RowFlag::StronglyIrreducible, classify(lattice, i, SubPredicate::StronglyIrreducible).holds);
      set(RowFlag::TwoIrreducible, classify(lattice, i, SubPredicate::TwoIrreducible).holds);
      set(RowFlag::StronglyTwoIrreducible, classify(lattice, i, SubPredicate::StronglyTwoIrreducible).holds);
      set(RowFlag::Prime, submodule_predicate(s, lattice, SubmoduleProperty::Prime));
      set(RowFlag::Primary, submodule_predicate(s, lattice, SubmoduleProperty::Primary));
      set(RowFlag::TwoAbsorbing, submodule_predicate(s, lattice, SubmoduleProperty::TwoAbsorbing));
      set(RowFlag::TwoAbsorbingPrimary, submodule_predicate(s, lattice, SubmoduleProperty::TwoAbsorbingPrimary));
    }
    set(RowFlag::StronglySumTwoIrreducible, classify(lattice, i, SubPredicate::StronglySumTwoIrreducible).holds);
    set(RowFlag::Radical, submodule_predicate(s, lattice, SubmoduleProperty::Radical));
    set(RowFlag::Pure, submodule_predicate(s, lattice, SubmoduleProperty::Pure));
    set(RowFlag::Waist, submodule_predicate(s, lattice, SubmoduleProperty::Waist));

    auto broken = [&](RowFlag a, RowFlag b) {
      if (row.flag(a) && !row.flag(b))
        throw InternalError("classification of " + submodule_to_string(s) + " in " + rep.module + ": " +
                            std::string(to_string(a)) + " without " + std::string(to_string(b)));
    };
    broken(RowFlag::StronglyIrreducible, RowFlag::StronglyTwoIrreducible);
    broken(RowFlag::StronglyTwoIrreducible, RowFlag::TwoIrreducible);
    broken(RowFlag::Irreducible, RowFlag::TwoIrreducible);
    broken(RowFlag::Prime, RowFlag::Radical);
    rep.rows.push_back(std::move(row));
  }

  rep.module_flags.distributive = module_predicate(lattice, ModuleProperty::Distributive);
  rep.module_flags.multiplication = module_predicate(lattice, ModuleProperty::Multiplication);
  rep.module_flags.comultiplication = module_predicate(lattice, ModuleProperty::Comultiplication);
  rep.module_flags.fully_pure = module_predicate(lattice, ModuleProperty::FullyPure);
  if (m.ring().is_finite())
    rep.module_flags.strong_comultiplication = module_predicate(lattice, ModuleProperty::StrongComultiplication);
  return rep;
}

ClassificationReport classify_all(const ModulePtr& module) {
  return classify_all(SubmoduleLattice::enumerate(module));
}

}  // namespace sublat
