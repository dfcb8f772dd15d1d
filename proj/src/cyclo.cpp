#include "twocat/cyclo.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twocat {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  std::size_t start = (t[0] == '-') ? 1 : 0;
  std::size_t slash = t.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(start, t.size())
                                       : digits(start, slash) && digits(slash + 1, t.size());
  if (!ok) throw std::invalid_argument("malformed rational '" + text + "'");
  Rational q(t);
  if (slash != std::string::npos && sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

using RPoly = Poly<Rational>;

std::mutex cyclo_cache_mutex;
std::map<int, std::vector<Rational>> cyclo_cache;

std::vector<Rational> compute_cyclotomic(int d) {
  // x^d - 1 divided by Phi_e for every proper divisor e.
  std::vector<Rational> top(d + 1, Rational(0));
  top[0] = -1;
  top[d] = 1;
  RPoly p(top);
  for (int e = 1; e < d; ++e) {
    if (d % e) continue;
    auto [q, r] = RPoly::divmod(p, RPoly(cyclotomic_polynomial(e)));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    p = q;
  }
  return p.coeffs();
}

std::vector<Rational> reduce(std::vector<Rational> c, const std::vector<Rational>& phi) {
  std::size_t n = phi.size() - 1;  // field degree; phi is monic
  for (std::size_t i = c.size(); i-- > n;) {
    if (sgn(c[i]) == 0) continue;
    Rational f = c[i];
    for (std::size_t j = 0; j <= n; ++j) c[i - n + j] -= f * phi[j];
  }
  if (c.size() > n) c.resize(n);
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  return c;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic polynomial needs d >= 1");
  {
    std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
    auto it = cyclo_cache.find(d);
    if (it != cyclo_cache.end()) return it->second;
  }
  std::vector<Rational> c = compute_cyclotomic(d);
  std::lock_guard<std::mutex> lock(cyclo_cache_mutex);
  return cyclo_cache.emplace(d, std::move(c)).first->second;
}

int euler_phi(int d) { return static_cast<int>(cyclotomic_polynomial(d).size()) - 1; }

Cyclo::Cyclo(const Rational& q) {
  if (sgn(q) != 0) {
    c_.push_back(q);
    c_.back().canonicalize();
  }
}

Cyclo Cyclo::from_coeffs(int d, std::vector<Rational> coeffs) {
  if (d < 1) throw std::invalid_argument("conductor must be positive");
  Cyclo x;
  x.d_ = d;
  for (auto& c : coeffs) c.canonicalize();
  x.c_ = reduce(std::move(coeffs), cyclotomic_polynomial(d));
  x.normalize();
  return x;
}

Cyclo Cyclo::zeta(int d, long power) {
  if (d < 1) throw std::invalid_argument("conductor must be positive");
  long e = ((power % d) + d) % d;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = 1;
  return from_coeffs(d, std::move(c));
}

void Cyclo::normalize() {
  if (c_.size() <= 1) d_ = 0;
}

int Cyclo::common_conductor(const Cyclo& a, const Cyclo& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw std::invalid_argument("mixing elements of Q(zeta_" + std::to_string(a.d_) +
                              ") and Q(zeta_" + std::to_string(b.d_) + ")");
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  int d = common_conductor(*this, o);
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  Cyclo x;
  x.d_ = d;
  x.c_ = std::move(c);
  x.normalize();
  return x;
}

Cyclo Cyclo::operator-() const {
  Cyclo x = *this;
  for (auto& v : x.c_) v = -v;
  return x;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (c_.empty() || o.c_.empty()) return Cyclo();
  int d = common_conductor(*this, o);
  if (d == 0) return Cyclo(c_[0] * o.c_[0]);
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  Cyclo x;
  x.d_ = d;
  x.c_ = reduce(std::move(c), cyclotomic_polynomial(d));
  x.normalize();
  return x;
}

Cyclo Cyclo::inverse() const {
  if (c_.empty()) throw std::domain_error("inverse of zero in cyclotomic field");
  if (d_ == 0) return Cyclo(Rational(1) / c_[0]);
  RPoly phi(cyclotomic_polynomial(d_));
  auto bz = ext_gcd(RPoly(c_), phi);
  if (bz.g.degree() != 0) throw std::logic_error("cyclotomic polynomial is not irreducible?");
  return from_coeffs(d_, bz.u.coeffs());
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Cyclo::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational a = c_[i];
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Cyclo Cyclo::parse(const std::string& text, int d) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty scalar");
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      if (t[pos] == '-') sign = -1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string term = t.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed scalar '" + text + "'");
    pos = end;
    Rational coef = 1;
    std::size_t power = 0;
    std::size_t zpos = term.find('z');
    if (zpos == std::string::npos) {
      coef = parse_rational(term);
    } else {
      std::string head = term.substr(0, zpos);
      std::string tail = term.substr(zpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("expected '*' before z in '" + text + "'");
        head.pop_back();
        coef = parse_rational(head);
      }
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2) throw std::invalid_argument("malformed power in '" + text + "'");
        for (std::size_t i = 1; i < tail.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(tail[i])))
            throw std::invalid_argument("malformed power in '" + text + "'");
        power = std::stoul(tail.substr(1));
      }
      if (d < 1) throw std::invalid_argument("z used without a conductor");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] += sign * coef;
  }
  if (d < 1) {
    return Cyclo(coeffs.empty() ? Rational(0) : coeffs[0]);
  }
  return from_coeffs(d, std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.str(); }

}  // namespace twocat
