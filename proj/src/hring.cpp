#include "kkschur/hring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace kks {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_bigint(std::string_view s) {
  s = trim(s);
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const bool ok = !digits.empty() &&
                  std::all_of(digits.begin() + (digits.front() == '-' ? 1 : 0), digits.end(),
                              [](char ch) { return ch >= '0' && ch <= '9'; }) &&
                  digits != "-";
  if (!ok) throw InputError("cannot parse integer '" + std::string(s) + "'");
  return BigInt(digits, 10);
}

bool looks_like_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

HMonomial parse_monomial(std::string_view text) {
  text = trim(text);
  if (text == "1") return {};
  std::vector<std::uint32_t> exps;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || token[0] != 'h') throw InputError("bad monomial factor '" + token + "'");
    const auto caret = token.find('^');
    auto read_int = [&](std::string_view digits) {
      int v = 0;
      const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (digits.empty() || ec != std::errc{} || p != digits.data() + digits.size() || v < 1)
        throw InputError("bad monomial factor '" + token + "'");
      return v;
    };
    const std::string_view body(token);
    const int index = read_int(body.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    const int e = caret == std::string::npos ? 1 : read_int(body.substr(caret + 1));
    if (exps.size() < static_cast<std::size_t>(index)) exps.resize(static_cast<std::size_t>(index), 0);
    exps[static_cast<std::size_t>(index - 1)] += static_cast<std::uint32_t>(e);
  }
  if (exps.empty()) throw InputError("empty monomial");
  return HMonomial(std::move(exps));
}

}  // namespace

HMonomial::HMonomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  for (std::size_t i = 0; i < exps_.size(); ++i) degree_ += static_cast<long>(i + 1) * exps_[i];
}

HMonomial HMonomial::generator(int index) {
  if (index < 0) throw InputError("negative generator index");
  if (index == 0) return {};
  std::vector<std::uint32_t> e(static_cast<std::size_t>(index), 0);
  e.back() = 1;
  return HMonomial(std::move(e));
}

HMonomial HMonomial::from_partition(const Partition& mu) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(mu.first()), 0);
  for (int p : mu.parts()) ++e[static_cast<std::size_t>(p - 1)];
  return HMonomial(std::move(e));
}

std::uint32_t HMonomial::exponent(int index) const {
  return index >= 1 && index <= max_index() ? exps_[static_cast<std::size_t>(index - 1)] : 0;
}

Partition HMonomial::to_partition() const {
  std::vector<int> parts;
  for (int i = max_index(); i >= 1; --i)
    for (std::uint32_t e = 0; e < exponent(i); ++e) parts.push_back(i);
  return Partition(std::move(parts));
}

HMonomial HMonomial::operator*(const HMonomial& other) const {
  std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = exponent(static_cast<int>(i + 1)) + other.exponent(static_cast<int>(i + 1));
  return HMonomial(std::move(e));
}

bool HMonomial::divisible_by(const HMonomial& other) const {
  for (int i = 1; i <= other.max_index(); ++i)
    if (other.exponent(i) > exponent(i)) return false;
  return true;
}

HMonomial HMonomial::operator/(const HMonomial& other) const {
  if (!divisible_by(other)) throw InputError("monomial quotient does not exist");
  std::vector<std::uint32_t> e = exps_;
  for (int i = 1; i <= other.max_index(); ++i) e[static_cast<std::size_t>(i - 1)] -= other.exponent(i);
  return HMonomial(std::move(e));
}

bool LeadingFirst::operator()(const HMonomial& a, const HMonomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = std::max(a.max_index(), b.max_index()); i >= 1; --i) {
    const auto ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea < eb;
  }
  return false;
}

HPolynomial::HPolynomial(const BigInt& constant) {
  if (constant != 0) terms_.emplace(HMonomial(), constant);
}

HPolynomial::HPolynomial(const HMonomial& m, const BigInt& c) {
  if (c != 0) terms_.emplace(m, c);
}

HPolynomial HPolynomial::h(int r, const LevelContext& ctx) {
  if (r < 0 || r > ctx.k)
    throw InputError("h_" + std::to_string(r) + " is outside the ring generated by h_1..h_" +
                     std::to_string(ctx.k));
  return HPolynomial(HMonomial::generator(r), BigInt(1));
}

BigInt HPolynomial::coefficient(const HMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

const HPolynomial::TermMap::value_type& HPolynomial::leading() const {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  return *terms_.begin();
}

long HPolynomial::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

HPolynomial HPolynomial::homogeneous_part(long degree) const {
  HPolynomial out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

int HPolynomial::max_index() const {
  int out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.max_index());
  return out;
}

void HPolynomial::add_term(const HMonomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& other) {
  if (&other == this) return *this *= BigInt(2);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

HPolynomial& HPolynomial::operator-=(const HPolynomial& other) {
  if (&other == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

HPolynomial& HPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

HPolynomial HPolynomial::operator-() const {
  HPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void HPolynomial::add_scaled(const HPolynomial& other, const BigInt& scalar, const HMonomial& shift) {
  if (scalar == 0) return;
  if (&other == this) {
    const HPolynomial copy = other;
    add_scaled(copy, scalar, shift);
    return;
  }
  BigInt product;
  for (const auto& [m, c] : other.terms_) {
    product = c * scalar;
    add_term(shift.is_unit() ? m : m * shift, product);
  }
}

HPolynomial operator*(const HPolynomial& a, const HPolynomial& b) {
  const HPolynomial& small = a.term_count() <= b.term_count() ? a : b;
  const HPolynomial& large = &small == &a ? b : a;
  HPolynomial out;
  for (const auto& [m, c] : small.terms()) out.add_scaled(large, c, m);
  return out;
}

HPolynomial pow(const HPolynomial& base, int exponent) {
  if (exponent < 0) throw InputError("negative polynomial power");
  HPolynomial out(1);
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

HPolynomial exact_divide(const HPolynomial& f, const HPolynomial& g) {
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  const auto& [lead_m, lead_c] = g.leading();
  if (lead_c != 1 && lead_c != -1)
    throw UnitLeadingCoefficientRequired("divisor leading coefficient " + lead_c.get_str() +
                                         " is not a unit");
  const BigInt unit = lead_c;
  HPolynomial rest = f, quotient, remainder;
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading();
    if (m.divisible_by(lead_m)) {
      const HMonomial shift = m / lead_m;
      const BigInt factor = c * unit;
      quotient.add_term(shift, factor);
      rest.add_scaled(g, -factor, shift);
    } else {
      remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  if (!remainder.is_zero())
    throw NotDivisible(remainder, "nonzero remainder with " + std::to_string(remainder.term_count()) +
                                      " terms; leading " + to_text(remainder.leading().first));
  return quotient;
}

BigInt random_evaluate(const HPolynomial& p, std::span<const BigInt> assignment) {
  BigInt total = 0;
  BigInt term, power;
  for (const auto& [m, c] : p.terms()) {
    if (m.max_index() > static_cast<int>(assignment.size()))
      throw InputError("assignment does not cover h_" + std::to_string(m.max_index()));
    term = c;
    for (int i = 1; i <= m.max_index(); ++i) {
      if (m.exponent(i) == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), assignment[static_cast<std::size_t>(i - 1)].get_mpz_t(), m.exponent(i));
      term *= power;
    }
    total += term;
  }
  return total;
}

std::string to_text(const HMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int i = 1; i <= m.max_index(); ++i) {
    const auto e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'h' + std::to_string(i);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string to_text(const HPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += '\n';
    if (m.is_unit())
      out += c.get_str();
    else if (c == 1)
      out += to_text(m);
    else
      out += c.get_str() + " * " + to_text(m);
  }
  return out;
}

HPolynomial parse_hpolynomial(std::string_view text) {
  HPolynomial out;
  bool saw_term = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty()) continue;
    saw_term = true;
    if (const auto star = line.find('*'); star != std::string_view::npos) {
      out.add_term(parse_monomial(line.substr(star + 1)), parse_bigint(line.substr(0, star)));
    } else if (looks_like_integer(line)) {
      out.add_term(HMonomial(), parse_bigint(line));
    } else {
      out.add_term(parse_monomial(line), BigInt(1));
    }
  }
  if (!saw_term) throw InputError("empty polynomial text");
  return out;
}

KksVector::KksVector(std::initializer_list<std::pair<Partition, long>> terms) {
  for (const auto& [p, c] : terms) add_term(p, BigInt(c));
}

BigInt KksVector::coefficient(const Partition& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void KksVector::add_term(const Partition& p, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

KksVector& KksVector::operator+=(const KksVector& other) {
  if (&other == this) return *this *= BigInt(2);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

KksVector& KksVector::operator-=(const KksVector& other) {
  if (&other == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

KksVector& KksVector::operator*=(const BigInt& scalar) {
  if (scalar == 0) terms_.clear();
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

std::string to_text(const KksVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : v.terms()) {
    if (!out.empty()) out += '\n';
    out += c.get_str() + " * g[" + to_string(p) + "]";
  }
  return out;
}

}  // namespace kks
