#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cluster {

using Exponents = std::vector<int>;

// Sparse Laurent polynomial over Z in a fixed number of variables.
// Terms are ordered lexicographically on exponent vectors; zero coefficients are never stored.
class Laurent {
 public:
  using TermMap = std::map<Exponents, mpz_class>;

  explicit Laurent(std::size_t nvars = 0) : nvars_(nvars) {}

  static Laurent constant(std::size_t nvars, const mpz_class& c);
  static Laurent monomial(std::size_t nvars, const Exponents& e, const mpz_class& c = 1);
  // Variable with 0-based index i.
  static Laurent variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  mpz_class coeff(const Exponents& e) const;

  // Lex-largest term; precondition: nonzero.
  const TermMap::value_type& leading() const { return *terms_.rbegin(); }

  // Per-slot minimum / maximum exponent; precondition: nonzero.
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  void add_term(const Exponents& e, const mpz_class& c);

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent operator-() const;
  Laurent pow(unsigned k) const;
  // Multiply by x^e (exponents may be negative).
  Laurent shifted(const Exponents& e) const;

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_dims(const Laurent& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

Laurent add(const Laurent& p, const Laurent& q);
Laurent mul(const Laurent& p, const Laurent& q);
// r with r*q == p; throws DivisibilityError when no such Laurent polynomial exists.
Laurent div_exact(const Laurent& p, const Laurent& q);

// Simultaneous substitution x_i -> assignment[i] into an ambient of target_nvars variables.
// Unassigned variables map to the same-index variable of the target ambient.
Laurent substitute(const Laurent& p, const std::map<std::size_t, Laurent>& assignment,
                   std::size_t target_nvars);
Laurent substitute(const Laurent& p, const std::map<std::size_t, Laurent>& assignment);

struct MonomialFactorization {
  Laurent numerator;
  // x^{-denominator} * numerator reproduces the source polynomial.
  Exponents denominator;

  Laurent recombine() const;
};

// Throws DomainError on zero.
MonomialFactorization split(const Laurent& p);

// x1..xn.
std::vector<std::string> default_names(std::size_t nvars);

// Canonical text: terms in descending lex order, e.g. "x1*x3 + 2*x2 + 1".
std::string to_string(const Laurent& p, const std::vector<std::string>& names = {});
// "(x2 + 1) / x1"; plain numerator when the denominator is trivial.
std::string to_fraction_string(const Laurent& p, const std::vector<std::string>& names = {});
std::string monomial_string(const Exponents& e, const std::vector<std::string>& names = {});

// Inverse of to_string and to_fraction_string.
Laurent parse(std::string_view text, std::size_t nvars, const std::vector<std::string>& names = {});

}  // namespace cluster
