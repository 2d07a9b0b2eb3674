#include "osa/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace osa {

// ---------------------------------------------------------------- Domain

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Domain Domain::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InputError("field modulus must be a prime below 2^31: " + std::to_string(p));
  return Domain(DomainKind::Prime, p);
}

Domain Domain::parse(const std::string& tag) {
  if (tag == "z" || tag == "Z") return integers();
  if (tag == "q" || tag == "Q") return rationals();
  if (tag.size() >= 2 && (tag[0] == 'f' || tag[0] == 'F') &&
      std::all_of(tag.begin() + 1, tag.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      tag.size() <= 11) {
    const unsigned long long p = std::stoull(tag.substr(1));
    if (p >= (1ull << 31)) throw InputError("field modulus too large: " + tag);
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("unknown coefficient domain '" + tag + "'");
}

std::string Domain::tag() const {
  switch (kind_) {
    case DomainKind::Integer: return "z";
    case DomainKind::Rational: return "q";
    case DomainKind::Prime: return "f" + std::to_string(modulus_);
  }
  return "?";
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::Integer: return "Z";
    case DomainKind::Rational: return "Q";
    case DomainKind::Prime: return "F" + std::to_string(modulus_);
  }
  return "?";
}

// ----------------------------------------------------------- Coefficient

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Coefficient::Coefficient(Domain d, long v) : Coefficient(d, mpz_class(v)) {}

Coefficient::Coefficient(Domain d, const mpz_class& v) : domain_(d) {
  switch (d.kind()) {
    case DomainKind::Integer: value_ = v; break;
    case DomainKind::Rational: value_ = mpq_class(v); break;
    case DomainKind::Prime: value_ = reduce_mod(v, d.modulus()); break;
  }
}

Coefficient::Coefficient(Domain d, const mpq_class& v) : domain_(d) {
  mpq_class c = v;
  c.canonicalize();
  switch (d.kind()) {
    case DomainKind::Integer:
      if (c.get_den() != 1) throw DomainMismatch("non-integral value in Z");
      value_ = mpz_class(c.get_num());
      break;
    case DomainKind::Rational: value_ = c; break;
    case DomainKind::Prime: {
      const std::uint32_t p = d.modulus();
      const std::uint32_t den = reduce_mod(c.get_den(), p);
      if (den == 0) throw DomainMismatch("denominator vanishes mod " + std::to_string(p));
      value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(reduce_mod(c.get_num(), p)) *
                                          pow_mod(den, p - 2, p) % p);
      break;
    }
  }
}

bool Coefficient::is_zero() const {
  switch (domain_.kind()) {
    case DomainKind::Integer: return std::get<mpz_class>(value_) == 0;
    case DomainKind::Rational: return std::get<mpq_class>(value_) == 0;
    case DomainKind::Prime: return std::get<std::uint32_t>(value_) == 0;
  }
  return false;
}

bool Coefficient::is_one() const {
  switch (domain_.kind()) {
    case DomainKind::Integer: return std::get<mpz_class>(value_) == 1;
    case DomainKind::Rational: return std::get<mpq_class>(value_) == 1;
    case DomainKind::Prime: return std::get<std::uint32_t>(value_) == 1;
  }
  return false;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw ReductionError("division by zero coefficient");
  switch (domain_.kind()) {
    case DomainKind::Integer: {
      const auto& v = std::get<mpz_class>(value_);
      if (v != 1 && v != -1)
        throw ReductionError("coefficient " + v.get_str() + " is not a unit in Z");
      return *this;
    }
    case DomainKind::Rational: return Coefficient(domain_, mpq_class(1) / std::get<mpq_class>(value_));
    case DomainKind::Prime: {
      const std::uint32_t p = domain_.modulus();
      return Coefficient(domain_, static_cast<long>(pow_mod(std::get<std::uint32_t>(value_), p - 2, p)));
    }
  }
  return *this;
}

mpq_class Coefficient::to_rational() const {
  switch (domain_.kind()) {
    case DomainKind::Integer: return mpq_class(std::get<mpz_class>(value_));
    case DomainKind::Rational: return std::get<mpq_class>(value_);
    case DomainKind::Prime: return mpq_class(static_cast<unsigned long>(std::get<std::uint32_t>(value_)));
  }
  return 0;
}

std::string Coefficient::to_string() const {
  switch (domain_.kind()) {
    case DomainKind::Integer: return std::get<mpz_class>(value_).get_str();
    case DomainKind::Rational: return std::get<mpq_class>(value_).get_str();
    case DomainKind::Prime: return std::to_string(std::get<std::uint32_t>(value_));
  }
  return "?";
}

namespace {

void require_same(const Coefficient& a, const Coefficient& b) {
  if (!(a.domain() == b.domain()))
    throw DomainMismatch("coefficient domains differ: " + a.domain().name() + " vs " + b.domain().name());
}

}  // namespace

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  require_same(a, b);
  switch (a.domain_.kind()) {
    case DomainKind::Integer:
      return Coefficient(a.domain_, mpz_class(std::get<mpz_class>(a.value_) + std::get<mpz_class>(b.value_)));
    case DomainKind::Rational:
      return Coefficient(a.domain_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    case DomainKind::Prime: {
      const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(a.value_)} + std::get<std::uint32_t>(b.value_);
      return Coefficient(a.domain_, static_cast<long>(s % a.domain_.modulus()));
    }
  }
  return a;
}

Coefficient operator-(const Coefficient& a) {
  switch (a.domain_.kind()) {
    case DomainKind::Integer: return Coefficient(a.domain_, mpz_class(-std::get<mpz_class>(a.value_)));
    case DomainKind::Rational: return Coefficient(a.domain_, mpq_class(-std::get<mpq_class>(a.value_)));
    case DomainKind::Prime: {
      const std::uint32_t v = std::get<std::uint32_t>(a.value_);
      return Coefficient(a.domain_, static_cast<long>(v == 0 ? 0 : a.domain_.modulus() - v));
    }
  }
  return a;
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  require_same(a, b);
  switch (a.domain_.kind()) {
    case DomainKind::Integer:
      return Coefficient(a.domain_, mpz_class(std::get<mpz_class>(a.value_) * std::get<mpz_class>(b.value_)));
    case DomainKind::Rational:
      return Coefficient(a.domain_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    case DomainKind::Prime: {
      const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(a.value_)} * std::get<std::uint32_t>(b.value_);
      return Coefficient(a.domain_, static_cast<long>(s % a.domain_.modulus()));
    }
  }
  return a;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  return a.domain_ == b.domain_ && a.value_ == b.value_;
}

// --------------------------------------------------------- VariableOrder

VariableOrder::VariableOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
  const int n = static_cast<int>(sequence_.size());
  if (n > kMaxGroundSet) throw PreconditionError("variable order longer than 64 elements");
  position_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    const int e = sequence_[k];
    if (e < 0 || e >= n || position_[e] != -1)
      throw PreconditionError("variable order is not a permutation");
    position_[e] = k;
  }
}

VariableOrder VariableOrder::natural(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return VariableOrder(std::move(seq));
}

VariableOrder VariableOrder::from_sequence(std::vector<int> sequence) {
  return VariableOrder(std::move(sequence));
}

int VariableOrder::min_element(Subset s) const {
  if (s == 0) return -1;
  return sequence_[std::countr_zero(to_positions(s))];
}

Subset VariableOrder::to_positions(Subset s) const {
  Subset out = 0;
  while (s) {
    out |= singleton(position_[std::countr_zero(s)]);
    s &= s - 1;
  }
  return out;
}

Subset VariableOrder::from_positions(Subset s) const {
  Subset out = 0;
  while (s) {
    out |= singleton(sequence_[std::countr_zero(s)]);
    s &= s - 1;
  }
  return out;
}

// ------------------------------------------------------------ ExtElement

ExtElement ExtElement::monomial(Domain d, Subset x, long coeff) {
  ExtElement f(d);
  f.add_term(x, Coefficient(d, coeff));
  return f;
}

void ExtElement::check_domain(const Domain& d) const {
  if (!(d == domain_))
    throw DomainMismatch("exterior elements over different domains: " + domain_.name() + " vs " + d.name());
}

Coefficient ExtElement::coefficient(Subset x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Coefficient(domain_) : it->second;
}

void ExtElement::add_term(Subset x, const Coefficient& c) {
  check_domain(c.domain());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ExtElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = popcount(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return popcount(t.first) == d; });
}

int ExtElement::degree() const {
  int d = 0;
  for (const auto& [x, c] : terms_) d = std::max(d, popcount(x));
  return d;
}

ExtElement ExtElement::convert(Domain target) const {
  ExtElement out(target);
  for (const auto& [x, c] : terms_) out.add_term(x, Coefficient(target, c.to_rational()));
  return out;
}

ExtElement& ExtElement::operator+=(const ExtElement& other) {
  check_domain(other.domain_);
  for (const auto& [x, c] : other.terms_) add_term(x, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& other) {
  check_domain(other.domain_);
  for (const auto& [x, c] : other.terms_) add_term(x, -c);
  return *this;
}

ExtElement operator*(const Coefficient& c, const ExtElement& f) {
  f.check_domain(c.domain());
  ExtElement out(f.domain_);
  for (const auto& [x, a] : f.terms_) out.add_term(x, c * a);
  return out;
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  return a.domain_ == b.domain_ && a.terms_ == b.terms_;
}

std::string ExtElement::to_string(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    std::string coeff = c.to_string();
    if (!first) {
      if (coeff[0] == '-') {
        os << " - ";
        coeff.erase(0, 1);
      } else {
        os << " + ";
      }
    } else if (coeff[0] == '-') {
      os << "-";
      coeff.erase(0, 1);
    }
    first = false;
    if (coeff != "1" || x == 0) os << coeff << (x == 0 ? "" : "*");
    if (x == 0) continue;
    os << "e[";
    bool sep = false;
    for (int i : elements(x)) {
      if (sep) os << ' ';
      os << (labels.empty() ? std::to_string(i + 1) : labels[i]);
      sep = true;
    }
    os << "]";
  }
  return os.str();
}

// ------------------------------------------------------------ operations

int wedge_sign(Subset x, Subset y) {
  int inversions = 0;
  while (y) {
    const int j = std::countr_zero(y);
    // elements of x strictly above j
    inversions += popcount(x & ~((singleton(j) << 1) - 1));
    y &= y - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  if (!(a.domain() == b.domain()))
    throw DomainMismatch("wedge of elements over " + a.domain().name() + " and " + b.domain().name());
  ExtElement out(a.domain());
  for (const auto& [x, ca] : a.terms()) {
    for (const auto& [y, cb] : b.terms()) {
      if (x & y) continue;
      const Coefficient c = ca * cb;
      out.add_term(x | y, wedge_sign(x, y) < 0 ? -c : c);
    }
  }
  return out;
}

ExtElement boundary_of(Domain d, Subset x) {
  ExtElement out(d);
  int k = 0;
  for (int i : elements(x)) {
    out.add_term(x & ~singleton(i), Coefficient(d, (k % 2 == 0) ? 1L : -1L));
    ++k;
  }
  return out;
}

ExtElement boundary(const ExtElement& f) {
  ExtElement out(f.domain());
  for (const auto& [x, c] : f.terms()) {
    int k = 0;
    for (int i : elements(x)) {
      out.add_term(x & ~singleton(i), (k % 2 == 0) ? c : -c);
      ++k;
    }
  }
  return out;
}

std::strong_ordering compare(const VariableOrder& order, Monomial x, Monomial y) {
  const int dx = x.degree();
  const int dy = y.degree();
  if (dx != dy) return dx <=> dy;
  // Position bitsets compare as integers by their highest differing bit.
  return order.to_positions(x.bits) <=> order.to_positions(y.bits);
}

Monomial initial_monomial(const VariableOrder& order, const ExtElement& f) {
  if (f.is_zero()) throw EmptyElement("initial monomial of the zero element");
  Monomial best{f.terms().begin()->first};
  for (const auto& [x, c] : f.terms())
    if (compare(order, Monomial{x}, best) > 0) best = Monomial{x};
  return best;
}

Coefficient leading_coefficient(const VariableOrder& order, const ExtElement& f) {
  return f.coefficient(initial_monomial(order, f).bits);
}

ExtElement make_monic(const VariableOrder& order, const ExtElement& f) {
  return leading_coefficient(order, f).inverse() * f;
}

ExtElement normal_form(const ExtElement& f, const std::vector<ExtElement>& divisors,
                       const VariableOrder& order) {
  struct Lead {
    Subset bits;
    Coefficient inverse;
  };
  std::vector<Lead> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (!(g.domain() == f.domain()))
      throw DomainMismatch("normal form: divisor over " + g.domain().name() + ", input over " + f.domain().name());
    const Monomial m = initial_monomial(order, g);
    leads.push_back({m.bits, g.coefficient(m.bits).inverse()});
  }

  auto order_key = [&order](Subset x) {
    return std::pair<int, Subset>(popcount(x), order.to_positions(x));
  };

  ExtElement r = f;
  while (true) {
    // Largest reducible term under the monomial order.
    bool found = false;
    std::pair<int, Subset> best_key{};
    Subset best_term = 0;
    std::size_t best_divisor = 0;
    for (const auto& [x, c] : r.terms()) {
      for (std::size_t i = 0; i < leads.size(); ++i) {
        if (!is_subset(leads[i].bits, x)) continue;
        const auto key = order_key(x);
        if (!found || key > best_key) {
          found = true;
          best_key = key;
          best_term = x;
          best_divisor = i;
        }
        break;
      }
    }
    if (!found) return r;

    const Lead& lead = leads[best_divisor];
    const Subset cofactor = best_term & ~lead.bits;
    const int sign = wedge_sign(cofactor, lead.bits);
    Coefficient scale = r.coefficient(best_term) * lead.inverse;
    if (sign < 0) scale = -scale;
    const ExtElement multiple =
        wedge(ExtElement::monomial(f.domain(), cofactor), divisors[best_divisor]);
    r -= scale * multiple;
  }
}

}  // namespace osa
