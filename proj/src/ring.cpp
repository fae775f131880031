#include "sublat/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sublat/arith.hpp"
#include "sublat/errors.hpp"

namespace sublat {

Ring Ring::integers() { return Ring(Kind::Integer, {0}); }

Ring Ring::residue(std::int64_t modulus) {
  if (modulus < 2)
    throw DomainError("residue ring modulus must be >= 2, got " + std::to_string(modulus));
  return Ring(Kind::Residue, {modulus});
}

Ring Ring::product(std::vector<std::int64_t> moduli) {
  if (moduli.size() < 2) throw DomainError("product ring needs at least two factors");
  for (auto n : moduli)
    if (n < 2) throw DomainError("product ring factor modulus must be >= 2, got " + std::to_string(n));
  return Ring(Kind::Product, std::move(moduli));
}

std::string Ring::descriptor() const {
  if (kind_ == Kind::Integer) return "Z";
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += '*';
    out += 'Z' + std::to_string(moduli_[i]);
  }
  return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

std::int64_t parse_z_term(const std::string& term, std::string_view what) {
  if (term.size() < 2 || term[0] != 'Z')
    throw UsageError(std::string(what) + ": expected Z<n>, got '" + term + "'");
  std::int64_t v = 0;
  for (std::size_t i = 1; i < term.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(term[i])))
      throw UsageError(std::string(what) + ": bad number in '" + term + "'");
    if (v > 1'000'000'000'000'000) throw UsageError(std::string(what) + ": number too large");
    v = v * 10 + (term[i] - '0');
  }
  return v;
}

}  // namespace

Ring parse_ring(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s == "Z") return Ring::integers();
  std::vector<std::int64_t> moduli;
  std::size_t start = 0;
  while (true) {
    const auto star = s.find('*', start);
    moduli.push_back(parse_z_term(s.substr(start, star - start), "ring descriptor"));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  if (moduli.size() == 1) return Ring::residue(moduli[0]);
  return Ring::product(std::move(moduli));
}

// ---------------------------------------------------------------------------

Ideal::Ideal(Ring ring, std::vector<std::int64_t> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (gens_.size() != ring_.factor_count())
    throw DomainError("ideal generator count does not match ring " + ring_.descriptor());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto n = ring_.modulus(i);
    if (n == 0) {
      gens_[i] = gens_[i] < 0 ? -gens_[i] : gens_[i];
    } else {
      gens_[i] = std::gcd(mod_floor(gens_[i], n), n);
    }
  }
}

Ideal Ideal::zero(const Ring& ring) {
  std::vector<std::int64_t> g(ring.moduli().begin(), ring.moduli().end());
  return Ideal(ring, std::move(g));
}

Ideal Ideal::unit(const Ring& ring) {
  return Ideal(ring, std::vector<std::int64_t>(ring.factor_count(), 1));
}

bool Ideal::is_zero() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] != ring_.modulus(i)) return false;
  return true;
}

bool Ideal::is_unit() const {
  return std::all_of(gens_.begin(), gens_.end(), [](auto g) { return g == 1; });
}

namespace {

// Does generator g divide h, with the integers' convention that everything divides 0.
bool gen_divides(std::int64_t g, std::int64_t h) {
  if (g == 0) return h == 0;
  return h % g == 0;
}

}  // namespace

bool Ideal::contains(const Ideal& other) const {
  if (!(ring_ == other.ring_)) throw DomainError("ideal containment across different rings");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!gen_divides(gens_[i], other.gens_[i])) return false;
  return true;
}

bool Ideal::contains_element(const RingElement& r) const {
  return contains(Ideal(ring_, r));
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  if (ring_.kind() == Ring::Kind::Integer) {
    os << gens_[0] << "Z";
    return os.str();
  }
  if (gens_.size() == 1) {
    os << gens_[0] << "Z/" << ring_.modulus(0) << "Z";
    return os.str();
  }
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << ")";
  os << ring_.descriptor();
  return os.str();
}

// ---------------------------------------------------------------------------

Ideal ideal_combine(const Ideal& lhs, const Ideal& rhs, IdealOp op) {
  if (!(lhs.ring() == rhs.ring()))
    throw DomainError("ideal_combine: ring mismatch (" + lhs.ring().descriptor() + " vs " +
                      rhs.ring().descriptor() + ")");
  const Ring& ring = lhs.ring();
  std::vector<std::int64_t> out(ring.factor_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto g = lhs.gen(i);
    const auto h = rhs.gen(i);
    const auto n = ring.modulus(i);
    switch (op) {
      case IdealOp::Sum:
        out[i] = std::gcd(g, h);
        break;
      case IdealOp::Intersect:
        out[i] = lcm0(g, h);
        break;
      case IdealOp::Product:
        // Reduce before multiplying; over Z/nZ only gcd(gh, n) matters.
        out[i] = n == 0 ? g * h : std::gcd((g % n) * (h % n) % n, n);
        if (n != 0 && out[i] == 0) out[i] = n;
        break;
      case IdealOp::Colon:
        // (gR : hR) = (g / gcd(g, h))R; (0 : 0) is the whole ring.
        if (g == 0 && h == 0) {
          out[i] = 1;
        } else {
          out[i] = g / std::gcd(g, h);
        }
        break;
    }
  }
  return Ideal(ring, std::move(out));
}

Ideal ideal_radical(const Ideal& ideal) {
  std::vector<std::int64_t> out(ideal.gens().begin(), ideal.gens().end());
  for (auto& g : out) g = radical_of(g);
  return Ideal(ideal.ring(), std::move(out));
}

std::string_view to_string(IdealPredicate p) {
  switch (p) {
    case IdealPredicate::Prime: return "prime";
    case IdealPredicate::Irreducible: return "irreducible";
    case IdealPredicate::StronglyIrreducible: return "strongly_irreducible";
    case IdealPredicate::TwoIrreducible: return "two_irreducible";
    case IdealPredicate::StronglyTwoIrreducible: return "strongly_two_irreducible";
    case IdealPredicate::TwoAbsorbing: return "two_absorbing";
  }
  return "?";
}

IdealPredicate parse_ideal_predicate(std::string_view name) {
  for (auto p : kAllIdealPredicates)
    if (to_string(p) == name) return p;
  throw UsageError("unknown ideal predicate '" + std::string(name) + "'");
}

std::vector<Ideal> all_ideals(const Ring& ring) {
  if (!ring.is_finite()) throw DomainError("the integers have infinitely many ideals");
  std::vector<std::vector<std::int64_t>> per_factor;
  for (auto n : ring.moduli()) per_factor.push_back(divisors(n));
  std::vector<Ideal> out;
  std::vector<std::size_t> pos(per_factor.size(), 0);
  while (true) {
    std::vector<std::int64_t> g(per_factor.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = per_factor[i][pos[i]];
    out.emplace_back(ring, std::move(g));
    std::size_t i = pos.size();
    while (i > 0) {
      --i;
      if (++pos[i] < per_factor[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

namespace {

bool requires_proper(IdealPredicate p) {
  return p == IdealPredicate::Prime || p == IdealPredicate::StronglyIrreducible ||
         p == IdealPredicate::StronglyTwoIrreducible || p == IdealPredicate::TwoAbsorbing;
}

Ideal meet(const Ideal& a, const Ideal& b) { return ideal_combine(a, b, IdealOp::Intersect); }
Ideal mul(const Ideal& a, const Ideal& b) { return ideal_combine(a, b, IdealOp::Product); }

// Definitions quantified over a finite family of ideals. For the order-free
// predicates `family` must contain every ideal that can occur as an argument
// (all ideals of a finite ring, or all ideals containing I for the
// intersection-equality predicates over Z).
bool quantify(const Ideal& ideal, IdealPredicate p, const std::vector<Ideal>& family) {
  const std::size_t n = family.size();
  switch (p) {
    case IdealPredicate::Irreducible:
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
          if (meet(family[a], family[b]) == ideal && !(family[a] == ideal) && !(family[b] == ideal))
            return false;
      return true;
    case IdealPredicate::StronglyIrreducible:
      for (std::size_t a = 0; a < n; ++a) {
        if (ideal.contains(family[a])) continue;
        for (std::size_t b = a; b < n; ++b)
          if (!ideal.contains(family[b]) && ideal.contains(meet(family[a], family[b]))) return false;
      }
      return true;
    case IdealPredicate::TwoIrreducible:
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
          const Ideal ab = meet(family[a], family[b]);
          if (ab == ideal) continue;
          for (std::size_t c = b; c < n; ++c)
            if (meet(ab, family[c]) == ideal && !(meet(family[a], family[c]) == ideal) &&
                !(meet(family[b], family[c]) == ideal))
              return false;
        }
      return true;
    case IdealPredicate::StronglyTwoIrreducible:
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
          const Ideal ab = meet(family[a], family[b]);
          if (ideal.contains(ab)) continue;
          for (std::size_t c = b; c < n; ++c)
            if (ideal.contains(meet(ab, family[c])) && !ideal.contains(meet(family[a], family[c])) &&
                !ideal.contains(meet(family[b], family[c])))
              return false;
        }
      return true;
    case IdealPredicate::Prime:
      // Every ideal here is principal, so element quantification reduces to
      // quantification over ideals.
      for (std::size_t a = 0; a < n; ++a) {
        if (ideal.contains(family[a])) continue;
        for (std::size_t b = a; b < n; ++b)
          if (!ideal.contains(family[b]) && ideal.contains(mul(family[a], family[b]))) return false;
      }
      return true;
    case IdealPredicate::TwoAbsorbing:
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
          const Ideal ab = mul(family[a], family[b]);
          if (ideal.contains(ab)) continue;
          for (std::size_t c = b; c < n; ++c)
            if (ideal.contains(mul(ab, family[c])) && !ideal.contains(mul(family[a], family[c])) &&
                !ideal.contains(mul(family[b], family[c])))
              return false;
        }
      return true;
  }
  return false;
}

// 2-absorbing over Z for g > 0: capping each argument at gcd(arg, g) preserves
// divisibility of products by g, so divisors of g suffice. Products are
// tested through cofactors to stay within 64 bits.
bool integer_two_absorbing(std::int64_t g) {
  const auto ds = divisors(g);
  auto divides_product = [g](std::int64_t x, std::int64_t y) {
    const auto rest = g / std::gcd(g, x);
    return y % rest == 0;
  };
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i; j < ds.size(); ++j) {
      if (divides_product(ds[i], ds[j])) continue;
      const auto rest = (g / std::gcd(g, ds[i]));
      const auto rest2 = rest / std::gcd(rest, ds[j]);
      for (std::size_t k = j; k < ds.size(); ++k)
        if (ds[k] % rest2 == 0 && !divides_product(ds[i], ds[k]) && !divides_product(ds[j], ds[k]))
          return false;
    }
  return true;
}

bool classify_integer_ideal(std::int64_t g, IdealPredicate p, std::int64_t factor_cap) {
  if (g == 0) return true;  // 0 is prime in Z, hence every predicate holds
  const auto primes = distinct_primes(g, factor_cap);
  switch (p) {
    case IdealPredicate::Prime:
      return primes.size() == 1 && primes[0] == g;
    case IdealPredicate::StronglyIrreducible:
      return primes.size() == 1;
    case IdealPredicate::StronglyTwoIrreducible:
      return primes.size() == 1 || primes.size() == 2;
    case IdealPredicate::TwoAbsorbing:
      return integer_two_absorbing(g);
    case IdealPredicate::Irreducible:
    case IdealPredicate::TwoIrreducible: {
      // Any J with gZ = J ∩ ... contains gZ, so J is generated by a divisor of g.
      const Ring z = Ring::integers();
      std::vector<Ideal> above;
      for (auto d : divisors(g)) above.emplace_back(z, std::vector<std::int64_t>{d});
      return quantify(Ideal(z, {g}), p, above);
    }
  }
  return false;
}

}  // namespace

bool classify_ideal(const Ideal& ideal, IdealPredicate p, std::int64_t factor_cap) {
  if (requires_proper(p) && ideal.is_unit())
    throw DomainError(std::string(to_string(p)) + " is defined only for proper ideals");
  if (ideal.ring().kind() == Ring::Kind::Integer) return classify_integer_ideal(ideal.gen(), p, factor_cap);
  return quantify(ideal, p, all_ideals(ideal.ring()));
}

}  // namespace sublat
