#include "ksl/algebra/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ksl::algebra {
namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "gamma", "a", "b", "beta", "k", "eps", "lambda", "q", "n", "x", "lambda1"};

bool divides(const Exponents& d, const Exponents& e) {
  for (int i = 0; i < kNumVars; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Exponents sub(const Exponents& e, const Exponents& d) {
  Exponents r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = e[i] - d[i];
  return r;
}

Exponents add(const Exponents& e, const Exponents& d) {
  Exponents r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = e[i] + d[i];
  return r;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[int(v)]; }

Point& Point::set(Var v, const Rational& value) {
  values_[int(v)] = value;
  values_[int(v)]->canonicalize();
  return *this;
}

const Rational& Point::at(Var v) const {
  if (!values_[int(v)])
    throw std::invalid_argument("point has no value for " +
                                std::string(var_name(v)));
  return *values_[int(v)];
}

std::string Point::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < kNumVars; ++i) {
    if (!values_[i]) continue;
    if (!first) out += ", ";
    first = false;
    out += std::string(kNames[i]) + "=" + values_[i]->get_str();
  }
  return out + "}";
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Exponents{}, Rational(c));
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c).first->second.canonicalize();
}

Poly Poly::var(Var v, unsigned power) {
  Exponents e{};
  e[int(v)] = static_cast<std::uint16_t>(power);
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& e, const Rational& c) {
  Poly p;
  Rational v = c;
  v.canonicalize();
  p.add_term(e, v);
  return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[int(v)]);
  return d;
}

int Poly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[int(v)];
  for (const auto& [e, c] : terms_) d = std::min<int>(d, e[int(v)]);
  return d;
}

Exponents Poly::monomial_content() const {
  if (terms_.empty()) return Exponents{};
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Poly Poly::divide_monomial(const Exponents& d) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    if (!divides(d, e)) throw std::logic_error("monomial does not divide term");
    r.terms_.emplace_hint(r.terms_.end(), sub(e, d), c);
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Rational f = c;
  f.canonicalize();
  if (f == 0) return {};
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v *= f;
  return r;
}

const std::pair<const Exponents, Rational>& Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

std::optional<Poly> Poly::exact_div(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return Poly{};
  const auto& [dl_exp, dl_coef] = divisor.leading();
  Poly rem = *this;
  Poly quot;
  // d | r forces LT(d) | LT(r); failure of that test means no exact quotient.
  while (!rem.is_zero()) {
    const auto& [rl_exp, rl_coef] = rem.leading();
    if (!divides(dl_exp, rl_exp)) return std::nullopt;
    Poly t = monomial(sub(rl_exp, dl_exp), rl_coef / dl_coef);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<Poly> out(degree(v) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[int(v)] = 0;
    out[e[int(v)]].add_term(rest, c);
  }
  return out;
}

Poly Poly::set_zero(Var v) const {
  Poly r;
  for (const auto& [e, c] : terms_)
    if (e[int(v)] == 0) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

Rational Poly::eval(const Point& pt) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      const Rational& x = pt.at(Var(i));
      for (int j = 0; j < e[i]; ++j) t *= x;
    }
    sum += t;
  }
  return sum;
}

long double Poly::eval_ld(const std::array<long double, kNumVars>& values) const {
  long double sum = 0;
  for (const auto& [e, c] : terms_) {
    long double t = c.get_d();
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) t *= std::pow(values[i], static_cast<long double>(e[i]));
    sum += t;
  }
  return sum;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return cmp(x.second, y.second) < 0;
      });
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = e == Exponents{};
    if (mag != 1 || unit) os << mag.get_str();
    bool need_star = mag != 1;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << kNames[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace ksl::algebra
