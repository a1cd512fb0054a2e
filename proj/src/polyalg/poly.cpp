#include "a1mod/polyalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace a1mod::polyalg {

std::string rat_str(const Rational& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

Rational rat_parse(const std::string& s) {
  size_t pos = 0;
  auto parse_int = [&](bool allow_sign) -> BigInt {
    size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("malformed rational: " + s);
    return BigInt(s.substr(start, pos - start));
  };
  BigInt num = parse_int(true);
  BigInt den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = parse_int(false);
  }
  if (pos != s.size()) throw std::invalid_argument("malformed rational: " + s);
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num, den);
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  long sa = std::accumulate(a.begin(), a.end(), 0L);
  long sb = std::accumulate(b.begin(), b.end(), 0L);
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
  Poly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Poly Poly::monomial(std::vector<std::string> vars, const std::string& var, int power,
                    const Rational& c) {
  Poly p(std::move(vars));
  auto it = std::find(p.vars_.begin(), p.vars_.end(), var);
  if (it == p.vars_.end()) throw std::invalid_argument("monomial: unknown variable " + var);
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  Exponents e(p.vars_.size(), 0);
  e[static_cast<size_t>(it - p.vars_.begin())] = power;
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Poly::constant_value() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(size_t var_index) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
  return d;
}

Rational Poly::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

namespace {
void require_same_vars(const Poly& a, const Poly& b, const char* op) {
  if (a.vars() != b.vars())
    throw std::invalid_argument(std::string("poly ") + op + ": variable lists differ");
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
  require_same_vars(*this, o, "add");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  require_same_vars(*this, o, "sub");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_vars(*this, o, "mul");
  Poly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.add_term(e, coef * c);
  return r;
}

Poly Poly::with_vars(const std::vector<std::string>& new_vars) const {
  std::vector<size_t> where(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it == new_vars.end())
      throw std::invalid_argument("with_vars: " + vars_[i] + " missing from the new list");
    where[i] = static_cast<size_t>(it - new_vars.begin());
  }
  Poly r(new_vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    r.add_term(ne, c);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images,
                      const std::vector<std::string>& target_vars) const {
  if (images.size() != vars_.size())
    throw std::invalid_argument("substitute: expected one image per variable");
  for (const Poly& im : images)
    if (im.vars() != target_vars)
      throw std::invalid_argument("substitute: image over the wrong variables");
  Poly result(target_vars);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target_vars, c);
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    result = result + term;
  }
  return result;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("add_term: exponent arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string body;
    if (mono.empty())
      body = rat_str(mag);
    else if (mag == 1)
      body = mono;
    else
      body = rat_str(mag) + "*" + mono;
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (a.vars() != b.vars() || a.vars().size() != 1)
    throw std::invalid_argument("divmod: univariate polynomials over one shared variable");
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero");
  Poly q = Poly::zero(a.vars());
  Poly r = a;
  int db = b.total_degree();
  Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.total_degree() >= db) {
    int shift = r.total_degree() - db;
    Rational c = r.leading_coeff() / lb;
    Poly factor = Poly::monomial(a.vars(), a.vars()[0], shift, c);
    q = q + factor;
    r = r - factor * b;
  }
  return {q, r};
}

Poly gcd_univariate(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.scaled(Rational(1) / x.leading_coeff());
}

namespace {

// Recursive-descent parser for sums of products of rationals and powers.
struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " at position " +
                                std::to_string(pos) + " of \"" + text + "\"");
  }

  Rational number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    BigInt num(text.substr(start, pos - start));
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected denominator digits");
      den = BigInt(text.substr(dstart, pos - dstart));
      if (den == 0) fail("zero denominator");
    }
    return Rational(num, den);
  }

  Poly factor() {
    skip_ws();
    if (pos >= text.size()) fail("expected a factor");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Poly::constant(vars, number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      if (std::find(vars.begin(), vars.end(), name) == vars.end())
        fail("unknown variable " + name);
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t pstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == pstart) fail("expected exponent digits");
        power = std::stoi(text.substr(pstart, pos - pstart));
      }
      return Poly::monomial(vars, name, power, Rational(1));
    }
    fail("unexpected character");
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly sum() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      skip_ws();
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        break;
    }
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return p;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  Parser p{text, vars};
  return p.sum();
}

}  // namespace a1mod::polyalg
