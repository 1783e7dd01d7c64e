#include "snakedimer/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "snakedimer/errors.hpp"

namespace snakedimer {

namespace {

std::vector<std::string>& registry_names() {
  static std::vector<std::string> v;
  return v;
}

std::map<std::string, int>& registry_index() {
  static std::map<std::string, int> m;
  return m;
}

// "a12" -> ("a", 12); names without a numeric suffix get -1.
std::pair<std::string, long long> split_suffix(const std::string& s) {
  size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  long long num = -1;
  if (i < s.size() && s.size() - i <= 18) num = std::stoll(s.substr(i));
  return {s.substr(0, i), num};
}

bool name_natural_less(int a, int b) {
  const std::string& na = registry_names()[a];
  const std::string& nb = registry_names()[b];
  auto [sa, ia] = split_suffix(na);
  auto [sb, ib] = split_suffix(nb);
  if (sa != sb) return sa < sb;
  if (ia != ib) return ia < ib;
  return na < nb;
}

long long total_degree(const Monomial& m) {
  long long d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

}  // namespace

Indeterminate::Indeterminate(const std::string& name) {
  if (name.empty()) throw ValidationError("indeterminate name must be nonempty");
  auto& idx = registry_index();
  auto it = idx.find(name);
  if (it != idx.end()) {
    id_ = it->second;
    return;
  }
  id_ = static_cast<int>(registry_names().size());
  registry_names().push_back(name);
  idx.emplace(name, id_);
}

const std::string& Indeterminate::name() const { return registry_names()[id_]; }

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(const Indeterminate& v, int exponent) {
  LaurentPoly p;
  if (exponent == 0) {
    p.terms_.emplace(Monomial{}, BigInt(1));
  } else {
    p.terms_.emplace(Monomial{{v.id(), exponent}}, BigInt(1));
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigInt LaurentPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw ValidationError("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

BigInt LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (auto& [ma, ca] : a.terms_) {
    for (auto& [mb, cb] : b.terms_) {
      // Merge the two sorted exponent vectors.
      Monomial m;
      m.reserve(ma.size() + mb.size());
      size_t i = 0, j = 0;
      while (i < ma.size() || j < mb.size()) {
        if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
          m.push_back(ma[i++]);
        } else if (i == ma.size() || mb[j].first < ma[i].first) {
          m.push_back(mb[j++]);
        } else {
          int e = ma[i].second + mb[j].second;
          if (e != 0) m.emplace_back(ma[i].first, e);
          ++i;
          ++j;
        }
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPoly out(1);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

LaurentPoly LaurentPoly::inverse() const {
  if (terms_.size() != 1)
    throw ValidationError("cannot invert non-monomial polynomial: " + str());
  auto& [m, c] = *terms_.begin();
  if (c != 1 && c != -1)
    throw ValidationError("cannot invert monomial with non-unit coefficient: " + str());
  LaurentPoly out;
  Monomial inv = m;
  for (auto& [v, e] : inv) e = -e;
  out.terms_.emplace(inv, c);
  return out;
}

LaurentPoly LaurentPoly::substitute(const Indeterminate& v, const LaurentPoly& value) const {
  LaurentPoly out;
  for (auto& [m, c] : terms_) {
    Monomial rest;
    int e = 0;
    for (auto& [var, exp] : m) {
      if (var == v.id()) {
        e = exp;
      } else {
        rest.emplace_back(var, exp);
      }
    }
    LaurentPoly term;
    term.terms_.emplace(rest, c);
    if (e != 0) term *= value.pow(e);
    out += term;
  }
  return out;
}

BigInt LaurentPoly::sum_of_coefficients() const {
  BigInt s = 0;
  for (auto& [m, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::is_univariate_in(const Indeterminate& v) const {
  for (auto& [m, c] : terms_)
    for (auto& [var, e] : m)
      if (var != v.id()) return false;
  return true;
}

std::map<int, BigInt> LaurentPoly::univariate_coefficients(const Indeterminate& v) const {
  if (!is_univariate_in(v))
    throw ValidationError("polynomial is not univariate in " + v.name() + ": " + str());
  std::map<int, BigInt> out;
  for (auto& [m, c] : terms_) out[m.empty() ? 0 : m.front().second] = c;
  return out;
}

int LaurentPoly::min_degree_in(const Indeterminate& v) const {
  int best = 0;
  bool first = true;
  for (auto& [m, c] : terms_) {
    int e = 0;
    for (auto& [var, exp] : m)
      if (var == v.id()) e = exp;
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, BigInt>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    long long da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    // Same total degree: walk variables in natural name order; the term with
    // the larger exponent on the first differing variable comes first.
    Monomial ma = a.first, mb = b.first;
    auto by_name = [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
      return name_natural_less(x.first, y.first);
    };
    std::sort(ma.begin(), ma.end(), by_name);
    std::sort(mb.begin(), mb.end(), by_name);
    size_t i = 0, j = 0;
    while (i < ma.size() && j < mb.size()) {
      if (ma[i].first == mb[j].first) {
        if (ma[i].second != mb[j].second) return ma[i].second > mb[j].second;
        ++i;
        ++j;
      } else {
        return name_natural_less(ma[i].first, mb[j].first);
      }
    }
    return i < ma.size();
  });

  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : ts) {
    BigInt coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;

    Monomial vars = m;
    std::sort(vars.begin(), vars.end(), [](const auto& x, const auto& y) {
      return name_natural_less(x.first, y.first);
    });
    bool wrote = false;
    if (vars.empty() || coeff != 1) {
      os << coeff.str();
      wrote = true;
    }
    for (auto& [v, e] : vars) {
      if (wrote) os << "*";
      os << registry_names()[v];
      if (e != 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace snakedimer
