#pragma once

#include "a1mod/polyalg/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace a1mod::polyalg {

using Exponents = std::vector<int>;

// Graded order: total degree first, then lexicographic on exponent vectors.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial over Rational in an ordered list of named variables.
// Invariants: no zero coefficients stored; every exponent vector has length
// vars.size(); the zero polynomial has an empty term map.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly zero(std::vector<std::string> vars) { return Poly(std::move(vars)); }
  static Poly constant(std::vector<std::string> vars, const Rational& c);
  // The monomial c * var^power; var must occur in vars.
  static Poly monomial(std::vector<std::string> vars, const std::string& var, int power,
                       const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational, TermOrder>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero exponent vector) coefficient.
  Rational constant_value() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(size_t var_index) const;
  Rational leading_coeff() const;  // of the maximal term in the graded order

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  // Reindexes the polynomial over a variable superset (new variables unused).
  Poly with_vars(const std::vector<std::string>& new_vars) const;

  // Substitutes every variable by its image (parallel to this->vars()); the
  // result lives over target_vars and each image must too.
  Poly substitute(const std::vector<Poly>& images,
                  const std::vector<std::string>& target_vars) const;

  void add_term(const Exponents& e, const Rational& c);  // accumulates, drops zeros

  std::string str() const;  // canonical: graded order, leading term first

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Rational, TermOrder> terms_;
};

// Univariate Euclidean division: a = q*b + r with deg r < deg b.
// Requires exactly one variable and b != 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

Poly gcd_univariate(const Poly& a, const Poly& b);  // monic gcd

// Parses "3/2*t^2 - 1", "t1*t2^2", "-x" over the given variables.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace a1mod::polyalg
