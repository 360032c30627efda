#include "mmtp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mmtp/error.hpp"

namespace mmtp {

namespace {

constexpr const char* kTimeVar = "t";

// name ascending, then exponent descending
bool factor_less(const std::pair<std::string, int>& a, const std::pair<std::string, int>& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second > b.second;
}

bool valid_var_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool valid_var_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '@';
}

}  // namespace

Monomial Monomial::variable(const std::string& name, int half_units) {
  Monomial m;
  if (name.empty() || !valid_var_start(name[0]))
    throw Error(Errc::malformed, "bad variable name '" + name + "'");
  for (char c : name)
    if (!valid_var_char(c)) throw Error(Errc::malformed, "bad variable name '" + name + "'");
  if (half_units != 0) m.factors_.emplace_back(name, half_units);
  return m;
}

int Monomial::half_exponent(const std::string& name) const {
  for (const auto& [var, exp] : factors_)
    if (var == name) return exp;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      int exp = a->second + b->second;
      if (exp != 0) out.factors_.emplace_back(a->first, exp);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(int k) const {
  Monomial out;
  if (k == 0) return out;
  out.factors_ = factors_;
  for (auto& [var, exp] : out.factors_) exp *= k;
  return out;
}

bool Monomial::has_negative_exponent() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second < 0; });
}

bool Monomial::integral() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second % 2 == 0; });
}

bool Monomial::operator<(const Monomial& other) const {
  int ta = half_exponent(kTimeVar), tb = other.half_exponent(kTimeVar);
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(factors_.begin(), factors_.end(), other.factors_.begin(),
                                      other.factors_.end(), factor_less);
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& var, int exp) {
    if (!first) out << '*';
    first = false;
    out << var;
    if (exp == 2) return;
    out << '^';
    if (exp % 2 == 0)
      out << exp / 2;
    else
      out << exp << "/2";
  };
  for (const auto& [var, exp] : factors_)
    if (var != kTimeVar) emit(var, exp);
  if (int te = half_exponent(kTimeVar); te != 0) emit(kTimeVar, te);
  return out.str();
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add_term(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.add_term(Monomial::variable(name), 1);
  return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c, bool laurent) {
  if (m.has_negative_exponent() && !laurent)
    throw Error(Errc::malformed, "negative exponent in non-Laurent polynomial");
  MultiPoly p;
  p.laurent_ = laurent;
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  laurent_ = laurent_ || other.laurent_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  laurent_ = laurent_ || other.laurent_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  out += other;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  out -= other;
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  out.laurent_ = laurent_;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  MultiPoly out;
  out.laurent_ = laurent_ || other.laurent_;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly MultiPoly::times(const Rational& c) const {
  MultiPoly out;
  out.laurent_ = laurent_;
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = one();
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
  MultiPoly out;
  out.laurent_ = laurent_;
  for (const auto& [m, c] : terms_) {
    MultiPoly term_value = constant(c);
    Monomial kept;
    for (const auto& [var, exp] : m.factors()) {
      auto it = images.find(var);
      if (it == images.end()) {
        kept = kept.times(Monomial::variable(var, exp));
        continue;
      }
      const MultiPoly& image = it->second;
      if (image.terms_.size() == 1 && image.terms_.begin()->second == 1 &&
          image.terms_.begin()->first.factors().size() == 1 &&
          image.terms_.begin()->first.factors()[0].second == 2) {
        // plain renaming works for any exponent, including half-grid ones
        kept = kept.times(Monomial::variable(image.terms_.begin()->first.factors()[0].first, exp));
        continue;
      }
      if (exp < 0 || exp % 2 != 0)
        throw Error(Errc::malformed,
                    "cannot substitute a polynomial for '" + var + "' with fractional or negative exponent");
      term_value *= image.pow(static_cast<unsigned>(exp / 2));
    }
    out += term_value * MultiPoly::term(kept, 1, laurent_);
  }
  return out;
}

MultiPoly MultiPoly::rename(const std::map<std::string, std::string>& names) const {
  std::map<std::string, MultiPoly> images;
  for (const auto& [from, to] : names) images.emplace(from, variable(to));
  return substitute(images);
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [var, exp] : m.factors()) {
      auto it = point.find(var);
      if (it == point.end()) throw Error(Errc::missing_assignment, "no value for '" + var + "'");
      if (exp % 2 != 0)
        throw Error(Errc::malformed, "cannot evaluate fractional exponent of '" + var + "'");
      if (it->second == 0 && exp < 0)
        throw Error(Errc::division_by_zero, "zero assigned to negatively exponentiated '" + var + "'");
      value *= rational_pow(it->second, exp / 2);
    }
    total += value;
  }
  return total;
}

std::vector<std::string> MultiPoly::variables() const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [var, exp] : m.factors()) out.push_back(var);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int MultiPoly::max_half_exponent(const std::string& name) const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.half_exponent(name));
  return best;
}

bool MultiPoly::integral_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.integral(); });
}

bool MultiPoly::nonnegative_exponents() const {
  return std::none_of(terms_.begin(), terms_.end(),
                      [](const auto& t) { return t.first.has_negative_exponent(); });
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c < 0) {
        out << '-';
        mag = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    if (m.empty()) {
      out << rational_to_string(mag);
    } else {
      if (mag != 1) out << rational_to_string(mag) << '*';
      out << m.to_string();
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }
};

std::string read_number(Cursor& c) {
  std::size_t start = c.pos;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
  if (c.pos == start) throw Error(Errc::malformed, "expected a number in polynomial text");
  return c.text.substr(start, c.pos - start);
}

// integer, or integer/2 (half-grid); optionally negative
int read_half_exponent(Cursor& c) {
  c.skip_ws();
  bool neg = false;
  if (c.pos < c.text.size() && (c.text[c.pos] == '-' || c.text[c.pos] == '+')) {
    neg = c.text[c.pos] == '-';
    ++c.pos;
  }
  long whole = std::stol(read_number(c));
  int half_units;
  if (c.pos < c.text.size() && c.text[c.pos] == '/') {
    ++c.pos;
    if (read_number(c) != "2") throw Error(Errc::malformed, "only halves allowed in exponents");
    half_units = static_cast<int>(whole);
  } else {
    half_units = static_cast<int>(2 * whole);
  }
  return neg ? -half_units : half_units;
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
  Cursor c{text};
  MultiPoly result;
  bool any_negative_exp = false;
  bool expect_term = true;
  int sign = 1;
  if (c.done()) throw Error(Errc::malformed, "empty polynomial text");
  while (!c.done()) {
    if (expect_term) {
      c.skip_ws();
      if (c.peek() == '-') {
        sign = -sign;
        ++c.pos;
        continue;
      }
      if (c.peek() == '+') {
        ++c.pos;
        continue;
      }
      // term: [coefficient] factors
      Rational coeff = sign;
      Monomial mono;
      bool saw_anything = false;
      bool expect_factor = true;
      while (true) {
        c.skip_ws();
        if (c.pos >= c.text.size()) break;
        char ch = c.peek();
        if (expect_factor && std::isdigit(static_cast<unsigned char>(ch))) {
          std::string num = read_number(c);
          if (c.pos < c.text.size() && c.text[c.pos] == '/') {
            ++c.pos;
            std::string den = read_number(c);
            coeff *= Rational(BigInt(num), BigInt(den));
          } else {
            coeff *= Rational(BigInt(num));
          }
          saw_anything = true;
        } else if (expect_factor && valid_var_start(ch)) {
          std::size_t start = c.pos;
          while (c.pos < c.text.size() && valid_var_char(c.text[c.pos])) ++c.pos;
          std::string name = c.text.substr(start, c.pos - start);
          int half_units = 2;
          if (c.pos < c.text.size() && c.text[c.pos] == '^') {
            ++c.pos;
            half_units = read_half_exponent(c);
          }
          if (half_units < 0) any_negative_exp = true;
          mono = mono.times(Monomial::variable(name, half_units));
          saw_anything = true;
        } else {
          break;
        }
        c.skip_ws();
        if (c.pos < c.text.size() && c.text[c.pos] == '*') {
          ++c.pos;
          expect_factor = true;
        } else {
          break;
        }
      }
      if (!saw_anything) throw Error(Errc::malformed, "expected a term in polynomial text");
      result.add_term(mono, coeff);
      sign = 1;
      expect_term = false;
    } else {
      c.skip_ws();
      char ch = c.peek();
      if (ch == '+') {
        ++c.pos;
        expect_term = true;
      } else if (ch == '-') {
        ++c.pos;
        sign = -1;
        expect_term = true;
      } else {
        throw Error(Errc::malformed, "unexpected character '" + std::string(1, ch) + "' in polynomial text");
      }
    }
  }
  if (expect_term) throw Error(Errc::malformed, "dangling sign in polynomial text");
  result.laurent_ = any_negative_exp;
  return result;
}

}  // namespace mmtp
