#pragma once

// Exact arithmetic in Z[h_1, ..., h_k].
//
// Monomials are ordered by weighted degree (sum of index * exponent)
// descending; ties are broken by reading exponent vectors from the highest
// generator downwards, where the smaller exponent ranks higher.  Under this
// order the leading monomial of a product of h's indexed by a partition mu
// precedes every h-monomial of a partition dominating mu, which is what
// makes the K-k-Schur expansions unitriangular.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kkschur/error.hpp"
#include "kkschur/partition.hpp"

namespace kks {

using BigInt = mpz_class;

/// Product of generators h_i^{e_i}; exponents are stored without trailing
/// zeros so that equal monomials compare equal regardless of level.
class HMonomial {
 public:
  HMonomial() = default;
  explicit HMonomial(std::vector<std::uint32_t> exponents);
  static HMonomial generator(int index);
  /// h_{mu_1} h_{mu_2} ...
  static HMonomial from_partition(const Partition& mu);

  /// Exponent of h_index (index >= 1).
  std::uint32_t exponent(int index) const;
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  /// Highest generator index present, 0 for the unit.
  int max_index() const { return static_cast<int>(exps_.size()); }
  /// Weighted degree sum_i i * e_i.
  long degree() const { return degree_; }
  bool is_unit() const { return exps_.empty(); }
  Partition to_partition() const;

  HMonomial operator*(const HMonomial& other) const;
  /// Quotient when other divides *this.
  bool divisible_by(const HMonomial& other) const;
  HMonomial operator/(const HMonomial& other) const;

  friend bool operator==(const HMonomial& a, const HMonomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  long degree_ = 0;
};

/// Strict weak order placing the leading monomial first.
struct LeadingFirst {
  bool operator()(const HMonomial& a, const HMonomial& b) const;
};

class HPolynomial {
 public:
  using TermMap = std::map<HMonomial, BigInt, LeadingFirst>;

  HPolynomial() = default;
  HPolynomial(const BigInt& constant);  // NOLINT(google-explicit-constructor)
  HPolynomial(long constant) : HPolynomial(BigInt(constant)) {}  // NOLINT
  HPolynomial(const HMonomial& m, const BigInt& c);

  /// h_r with h_0 = 1; r must lie in [0, k].
  static HPolynomial h(int r, const LevelContext& ctx);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coefficient(const HMonomial& m) const;
  /// Leading term; the polynomial must be nonzero.
  const TermMap::value_type& leading() const;
  /// Maximum weighted degree; -1 for zero.
  long degree() const;
  HPolynomial homogeneous_part(long degree) const;
  int max_index() const;

  void add_term(const HMonomial& m, const BigInt& c);

  HPolynomial& operator+=(const HPolynomial& other);
  HPolynomial& operator-=(const HPolynomial& other);
  HPolynomial& operator*=(const BigInt& scalar);
  HPolynomial operator-() const;
  /// this += scalar * m * other
  void add_scaled(const HPolynomial& other, const BigInt& scalar,
                  const HMonomial& shift = HMonomial());

  friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
  friend HPolynomial operator-(HPolynomial a, const HPolynomial& b) { return a -= b; }
  friend HPolynomial operator*(const HPolynomial& a, const HPolynomial& b);
  friend HPolynomial operator*(HPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const HPolynomial& a, const HPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

HPolynomial pow(const HPolynomial& base, int exponent);

/// Raised by exact_divide when the division leaves a remainder.
class NotDivisible : public Error {
 public:
  NotDivisible(HPolynomial remainder, const std::string& what)
      : Error(Status::identity_failed, what), remainder_(std::move(remainder)) {}
  const HPolynomial& remainder() const { return remainder_; }

 private:
  HPolynomial remainder_;
};

class UnitLeadingCoefficientRequired : public InputError {
 public:
  using InputError::InputError;
};

/// q with f = g * q exactly, by multivariate division under the global order.
HPolynomial exact_divide(const HPolynomial& f, const HPolynomial& g);

/// Substitutes h_i -> assignment[i-1]; generators beyond the assignment throw.
BigInt random_evaluate(const HPolynomial& p, std::span<const BigInt> assignment);

// "c * h1^e1 h2^e2 ..." per line, leading term first.  A coefficient of 1 and
// exponents of 1 are omitted; the zero polynomial is "0".
std::string to_text(const HPolynomial& p);
std::string to_text(const HMonomial& m);
HPolynomial parse_hpolynomial(std::string_view text);

/// Exact integer combination of K-k-Schur basis elements.
class KksVector {
 public:
  using TermMap = std::map<Partition, BigInt, SizeThenLexDescending>;

  KksVector() = default;
  KksVector(std::initializer_list<std::pair<Partition, long>> terms);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  BigInt coefficient(const Partition& p) const;
  void add_term(const Partition& p, const BigInt& c);
  KksVector& operator+=(const KksVector& other);
  KksVector& operator-=(const KksVector& other);
  KksVector& operator*=(const BigInt& scalar);

  friend KksVector operator+(KksVector a, const KksVector& b) { return a += b; }
  friend KksVector operator-(KksVector a, const KksVector& b) { return a -= b; }
  friend bool operator==(const KksVector& a, const KksVector& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// "c * g[3,3]" per line in basis order; "0" when empty.
std::string to_text(const KksVector& v);

}  // namespace kks
