#include "cluster/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cluster/errors.hpp"

namespace cluster {

namespace {

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

const std::string& name_of(const std::vector<std::string>& names, std::size_t i,
                           std::vector<std::string>& fallback) {
  if (i < names.size()) return names[i];
  if (fallback.size() <= i) fallback = default_names(i + 1);
  return fallback[i];
}

}  // namespace

Laurent Laurent::constant(std::size_t nvars, const mpz_class& c) {
  return monomial(nvars, Exponents(nvars, 0), c);
}

Laurent Laurent::monomial(std::size_t nvars, const Exponents& e, const mpz_class& c) {
  if (e.size() != nvars) throw DimensionError("exponent vector length does not match ambient");
  Laurent p(nvars);
  p.add_term(e, c);
  return p;
}

Laurent Laurent::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, e);
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

mpz_class Laurent::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Exponents Laurent::min_exponents() const {
  if (terms_.empty()) throw DomainError("min_exponents of zero polynomial");
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponents Laurent::max_exponents() const {
  if (terms_.empty()) throw DomainError("max_exponents of zero polynomial");
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

void Laurent::add_term(const Exponents& e, const mpz_class& c) {
  if (e.size() != nvars_) throw DimensionError("exponent vector length does not match ambient");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Laurent::check_dims(const Laurent& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionError("ambient mismatch: " + std::to_string(nvars_) + " vs " +
                         std::to_string(o.nvars_));
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check_dims(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  check_dims(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  a.check_dims(b);
  Laurent r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent Laurent::pow(unsigned k) const {
  Laurent result = constant(nvars_, 1);
  Laurent base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Laurent Laurent::shifted(const Exponents& s) const {
  if (s.size() != nvars_) throw DimensionError("shift length does not match ambient");
  Laurent r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add_exp(e, s), c);
  return r;
}

Laurent add(const Laurent& p, const Laurent& q) { return p + q; }
Laurent mul(const Laurent& p, const Laurent& q) { return p * q; }

Laurent div_exact(const Laurent& p, const Laurent& q) {
  if (p.nvars() != q.nvars()) throw DimensionError("div_exact: ambient mismatch");
  if (q.is_zero()) throw DomainError("div_exact: division by zero");
  const std::size_t n = p.nvars();
  Laurent r(n);
  if (p.is_zero()) return r;

  if (q.is_monomial()) {
    const auto& [qe, qc] = q.leading();
    for (const auto& [e, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), qc.get_mpz_t()))
        throw DivisibilityError("div_exact: coefficient not divisible");
      r.add_term(sub_exp(e, qe), c / qc);
    }
    return r;
  }

  // Every quotient exponent lies in the box [min p - min q, max p - max q].
  const Exponents lo = sub_exp(p.min_exponents(), q.min_exponents());
  const Exponents hi = sub_exp(p.max_exponents(), q.max_exponents());
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) throw DivisibilityError("div_exact: degree box is empty");

  const auto& [qe, qc] = q.leading();
  Laurent rem = p;
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.leading();
    Exponents e = sub_exp(re, qe);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) throw DivisibilityError("div_exact: inexact division");
    if (!mpz_divisible_p(rc.get_mpz_t(), qc.get_mpz_t()))
      throw DivisibilityError("div_exact: inexact division");
    mpz_class c = rc / qc;
    for (const auto& [te, tc] : q.terms()) rem.add_term(add_exp(te, e), -c * tc);
    r.add_term(e, c);
  }
  return r;
}

Laurent substitute(const Laurent& p, const std::map<std::size_t, Laurent>& assignment,
                   std::size_t target_nvars) {
  const std::size_t n = p.nvars();
  for (const auto& [i, v] : assignment) {
    if (i >= n) throw DimensionError("substitute: variable index out of range");
    if (v.nvars() != target_nvars) throw DimensionError("substitute: value ambient mismatch");
  }
  std::vector<Laurent> image(n, Laurent(target_nvars));
  std::vector<Laurent> inverse(n, Laurent(target_nvars));
  std::vector<bool> has_inverse(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = assignment.find(i);
    if (it != assignment.end()) {
      image[i] = it->second;
    } else {
      if (i >= target_nvars) throw DimensionError("substitute: unassigned variable outside target");
      image[i] = Laurent::variable(target_nvars, i);
    }
    const Laurent& v = image[i];
    if (v.is_monomial() && (v.leading().second == 1 || v.leading().second == -1)) {
      Exponents neg = v.leading().first;
      for (int& x : neg) x = -x;
      inverse[i] = Laurent::monomial(target_nvars, neg, v.leading().second);
      has_inverse[i] = true;
    }
  }

  std::vector<std::map<int, Laurent>> cache(n);
  auto power = [&](std::size_t i, int k) -> const Laurent& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    Laurent val(target_nvars);
    if (k >= 0) {
      val = image[i].pow(static_cast<unsigned>(k));
    } else {
      if (!has_inverse[i])
        throw PoleError("substitute: negative power of a non-invertible value in slot " +
                        std::to_string(i + 1));
      val = inverse[i].pow(static_cast<unsigned>(-k));
    }
    return cache[i].emplace(k, std::move(val)).first->second;
  };

  Laurent result(target_nvars);
  for (const auto& [e, c] : p.terms()) {
    Laurent term = Laurent::constant(target_nvars, c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    result += term;
  }
  return result;
}

Laurent substitute(const Laurent& p, const std::map<std::size_t, Laurent>& assignment) {
  return substitute(p, assignment, p.nvars());
}

Laurent MonomialFactorization::recombine() const {
  Exponents neg = denominator;
  for (int& x : neg) x = -x;
  return numerator.shifted(neg);
}

MonomialFactorization split(const Laurent& p) {
  if (p.is_zero()) throw DomainError("split of zero polynomial");
  Exponents m = p.min_exponents();
  Exponents d(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) d[i] = -m[i];
  return {p.shifted(d), d};
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> out;
  out.reserve(nvars);
  for (std::size_t i = 1; i <= nvars; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::vector<std::string> fallback;
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += name_of(names, i, fallback);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string to_string(const Laurent& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpz_class mag = abs(c);
    std::string mono = monomial_string(e, names);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

std::string to_fraction_string(const Laurent& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  MonomialFactorization f = split(p);
  Exponents pos(f.denominator.size()), neg(f.denominator.size());
  bool has_den = false;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (f.denominator[i] > 0) {
      pos[i] = f.denominator[i];
      has_den = true;
    } else {
      neg[i] = -f.denominator[i];
    }
  }
  Laurent num = f.numerator.shifted(neg);
  if (!has_den) return to_string(num, names);
  std::string ns = to_string(num, names);
  if (num.size() > 1) ns = "(" + ns + ")";
  std::string ds = monomial_string(pos, names);
  bool den_product = std::count(ds.begin(), ds.end(), '*') > 0;
  if (den_product) ds = "(" + ds + ")";
  return ns + " / " + ds;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::size_t nvars, const std::vector<std::string>& names)
      : s_(s), n_(nvars), names_(names.empty() ? default_names(nvars) : names) {}

  Laurent run() {
    Laurent r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Laurent expr() {
    bool neg = eat('-');
    if (!neg) eat('+');
    Laurent r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  Laurent term() {
    Laurent r = factor();
    for (;;) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        r = div_exact(r, factor());
      } else {
        return r;
      }
    }
  }

  Laurent factor() {
    Laurent base = primary();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    long k = integer_value();
    if (!neg) return base.pow(static_cast<unsigned>(k));
    if (!base.is_monomial()) fail("negative power of a non-monomial");
    Exponents e = base.leading().first;
    for (int& x : e) x = static_cast<int>(-x * k);
    const mpz_class& c = base.leading().second;
    if (c != 1 && c != -1) fail("negative power of a non-unit coefficient");
    return Laurent::monomial(n_, e, (k % 2 == 1) ? c : mpz_class(1));
  }

  long integer_value() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Laurent primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Laurent r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Laurent::constant(n_, mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size() && i < n_; ++i)
        if (names_[i] == id) return Laurent::variable(n_, i);
      pos_ = start;
      fail("unknown variable '" + id + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t n_;
  std::vector<std::string> names_;
};

}  // namespace

Laurent parse(std::string_view text, std::size_t nvars, const std::vector<std::string>& names) {
  return Parser(text, nvars, names).run();
}

}  // namespace cluster
