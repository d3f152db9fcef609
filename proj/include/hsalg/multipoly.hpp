#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hsalg/errors.hpp"
#include "hsalg/rational.hpp"

namespace hsalg {

/// Variable families of the symmetric-function rings plus free symbols for
/// user input. Constants carry family None; families never mix inside one
/// polynomial, conversions between them are explicit substitutions.
enum class VarFamily : std::uint8_t { None = 0, E, H, X, Sym };

inline std::string family_name(VarFamily f) {
  switch (f) {
    case VarFamily::E: return "e";
    case VarFamily::H: return "h";
    case VarFamily::X: return "x";
    case VarFamily::Sym: return "symbol";
    case VarFamily::None: break;
  }
  return "constant";
}

inline std::string var_name(VarFamily f, int index) {
  switch (f) {
    case VarFamily::E: return "e" + std::to_string(index);
    case VarFamily::H: return "h" + std::to_string(index);
    case VarFamily::X: return "x" + std::to_string(index);
    case VarFamily::Sym: return std::string(1, static_cast<char>('a' + index - 1));
    case VarFamily::None: break;
  }
  return "?";
}

/// Product of variables with positive integer exponents, stored sorted by
/// variable index. The family lives on the owning polynomial.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(int index, int exp = 1) {
    Monomial m;
    if (index < 1 || exp < 1) throw precondition_error("monomial variable needs index >= 1, exponent >= 1");
    m.exps_.emplace_back(index, exp);
    return m;
  }

  const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
  bool is_constant() const { return exps_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [i, e] : exps_) d += e;
    return d;
  }

  /// Degree where the variable of index i weighs i.
  long long weighted_degree() const {
    long long d = 0;
    for (const auto& [i, e] : exps_) d += static_cast<long long>(i) * e;
    return d;
  }

  int exponent_of(int index) const {
    for (const auto& [i, e] : exps_)
      if (i == index) return e;
    return 0;
  }

  int max_index() const { return exps_.empty() ? 0 : exps_.back().first; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    std::size_t a = 0, b = 0;
    while (a < exps_.size() || b < o.exps_.size()) {
      if (b == o.exps_.size() || (a < exps_.size() && exps_[a].first < o.exps_[b].first)) {
        r.exps_.push_back(exps_[a++]);
      } else if (a == exps_.size() || o.exps_[b].first < exps_[a].first) {
        r.exps_.push_back(o.exps_[b++]);
      } else {
        r.exps_.emplace_back(exps_[a].first, exps_[a].second + o.exps_[b].second);
        ++a, ++b;
      }
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::string to_string(VarFamily f) const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [i, e] : exps_) {
      if (!s.empty()) s += "*";
      s += var_name(f, i);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<std::pair<int, int>> exps_;
};

/// Descending graded-lexicographic order: higher total degree first, ties by
/// the larger exponent on the smallest differing variable index. This is the
/// canonical printing order.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
      if (ea[i].first != eb[j].first) return ea[i].first < eb[j].first;
      if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
      ++i, ++j;
    }
    return i < ea.size();
  }
};

/// Sparse multivariate polynomial over Rational within a single variable
/// family; no zero coefficients are stored and constants carry family None.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  MultiPoly() = default;
  MultiPoly(long long c) { *this = MultiPoly(Rational(c)); }  // NOLINT: ring constant
  explicit MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
  }

  static MultiPoly variable(VarFamily f, int index, int exp = 1) {
    if (f == VarFamily::None) throw precondition_error("variable needs a concrete family");
    if (f == VarFamily::Sym && (index < 1 || index > 26 || index == 't' - 'a' + 1))
      throw precondition_error("free symbols are single letters a..z other than t");
    MultiPoly p;
    p.family_ = f;
    p.terms_.emplace(Monomial::var(index, exp), Rational(1));
    return p;
  }

  static MultiPoly term(VarFamily f, Monomial m, const Rational& c) {
    MultiPoly p;
    if (c.is_zero()) return p;
    p.family_ = m.is_constant() ? VarFamily::None : f;
    if (p.family_ == VarFamily::None && !m.is_constant())
      throw precondition_error("non-constant monomial needs a concrete family");
    p.terms_.emplace(std::move(m), c);
    return p;
  }

  VarFamily family() const { return family_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return family_ == VarFamily::None; }

  Rational constant_value() const {
    if (!is_constant()) throw precondition_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  long long weighted_degree() const {
    long long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree());
    return d;
  }

  bool is_homogeneous_weighted(long long w) const {
    for (const auto& [m, c] : terms_)
      if (m.weighted_degree() != w) return false;
    return true;
  }

  int max_var_index() const {
    int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.max_index());
    return n;
  }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    family_ = combine_family(family_, o.family_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    fixup_family();
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    family_ = combine_family(family_, o.family_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    fixup_family();
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.family_ = combine_family(a.family_, b.family_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    r.fixup_family();
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

  MultiPoly pow(int n) const {
    if (n < 0) throw precondition_error("negative polynomial power");
    MultiPoly r(1);
    MultiPoly base(*this);
    while (n > 0) {
      if (n & 1) r *= base;
      base = (n >>= 1) > 0 ? base * base : base;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.family_ == b.family_ && a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin());
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly derivative(int index) const {
    MultiPoly r;
    r.family_ = family_;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent_of(index);
      if (e == 0) continue;
      Monomial dm;
      for (const auto& [i, k] : m.exponents()) {
        if (i == index) {
          if (k > 1) dm = dm * Monomial::var(i, k - 1);
        } else {
          dm = dm * Monomial::var(i, k);
        }
      }
      r.add_term(dm, c * Rational(e));
    }
    r.fixup_family();
    return r;
  }

  /// Simultaneous substitution of every variable; images must share a family.
  /// Variables without an image are rejected.
  MultiPoly substitute(const std::vector<MultiPoly>& images_by_index) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      MultiPoly t(c);
      for (const auto& [i, e] : m.exponents()) {
        if (i < 1 || static_cast<std::size_t>(i) > images_by_index.size())
          throw precondition_error("substitution image missing for " + var_name(family_, i));
        t *= images_by_index[static_cast<std::size_t>(i) - 1].pow(e);
      }
      r += t;
    }
    return r;
  }

  /// Sends every variable of index > keep to zero (same family).
  MultiPoly zero_out_above(int keep) const {
    MultiPoly r;
    r.family_ = family_;
    for (const auto& [m, c] : terms_)
      if (m.max_index() <= keep) r.add_term(m, c);
    r.fixup_family();
    return r;
  }

  /// Drops stored zero coefficients and renormalizes the family tag; values
  /// built through the public interface are already canonical.
  MultiPoly normalized() const {
    MultiPoly r;
    r.family_ = family_;
    for (const auto& [m, c] : terms_)
      if (!c.is_zero()) r.terms_.emplace(m, c);
    r.fixup_family();
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      Rational a = c;
      if (s.empty()) {
        if (a < Rational(0)) {
          s += "-";
          a = -a;
        }
      } else {
        s += a < Rational(0) ? " - " : " + ";
        if (a < Rational(0)) a = -a;
      }
      if (m.is_constant()) {
        s += a.to_string();
      } else if (a.is_one()) {
        s += m.to_string(family_);
      } else {
        s += a.to_string() + "*" + m.to_string(family_);
      }
    }
    return s;
  }

 private:
  static VarFamily combine_family(VarFamily a, VarFamily b) {
    if (a == VarFamily::None) return b;
    if (b == VarFamily::None || a == b) return a;
    throw family_mismatch_error("cannot combine " + var_name(a, 1).substr(0, 1) +
                                "-family and " + var_name(b, 1).substr(0, 1) +
                                "-family polynomials");
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void fixup_family() {
    if (terms_.empty() || terms_.begin()->first.is_constant()) family_ = VarFamily::None;
  }

  VarFamily family_ = VarFamily::None;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

inline MultiPoly scale(const MultiPoly& p, const Rational& s) {
  MultiPoly r;
  for (const auto& [m, c] : p.terms()) r += MultiPoly::term(p.family(), m, c * s);
  return r;
}

}  // namespace hsalg
