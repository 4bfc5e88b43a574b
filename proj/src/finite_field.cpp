#include "bocalc/finite_field.hpp"

#include <cctype>

#include "bocalc/arith.hpp"

namespace bocalc {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FiniteField::FiniteField(long q) : q_(q) {
  if (q < 3 || q % 2 == 0) throw ParameterError("q must be an odd prime power");
  if (q > (1L << 20)) throw ParameterError("field too large");
  long p = 2;
  while (q % p != 0) ++p;
  long m = q;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1 || !is_prime(p)) throw ParameterError("q must be an odd prime power");
  p_ = p;
  k_ = k;

  // Search monic f of degree k for which x has multiplicative order q - 1.
  const long tails = q;  // choices of the k lower coefficients
  for (long code = 1; code < tails; ++code) {
    std::vector<int> f(static_cast<std::size_t>(k) + 1, 0);
    long c = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (f[0] == 0) continue;
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    cur[0] = 1;
    std::vector<Elem> seq;
    std::vector<bool> seen(static_cast<std::size_t>(q), false);
    bool ok = true;
    for (long j = 0; j < q - 1; ++j) {
      long enc = 0;
      for (int i = k - 1; i >= 0; --i) enc = enc * p + cur[static_cast<std::size_t>(i)];
      if (seen[static_cast<std::size_t>(enc)] || enc == 0) {
        ok = false;
        break;
      }
      seen[static_cast<std::size_t>(enc)] = true;
      seq.push_back(static_cast<Elem>(enc));
      // Multiply by x modulo f.
      const int top = cur[static_cast<std::size_t>(k - 1)];
      for (int i = k - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      for (int i = 0; i < k; ++i) {
        const long v = cur[static_cast<std::size_t>(i)] - static_cast<long>(top) * f[static_cast<std::size_t>(i)];
        cur[static_cast<std::size_t>(i)] = static_cast<int>(((v % p) + p) % p);
      }
    }
    if (!ok) continue;
    // x^{q-1} must return to 1.
    long enc = 0;
    for (int i = k - 1; i >= 0; --i) enc = enc * p + cur[static_cast<std::size_t>(i)];
    if (enc != 1) continue;
    modulus_ = f;
    exp_ = seq;
    log_.assign(static_cast<std::size_t>(q), -1);
    for (long j = 0; j < q - 1; ++j) log_[static_cast<std::size_t>(exp_[static_cast<std::size_t>(j)])] = j;
    return;
  }
  throw ParameterError("no primitive polynomial found");
}

std::vector<int> FiniteField::digits(Elem a) const {
  std::vector<int> d(static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(a % p_);
    a = static_cast<Elem>(a / p_);
  }
  return d;
}

FiniteField::Elem FiniteField::from_digits(const std::vector<int>& d) const {
  long enc = 0;
  for (int i = k_ - 1; i >= 0; --i) enc = enc * p_ + d[static_cast<std::size_t>(i)];
  return static_cast<Elem>(enc);
}

FiniteField::Elem FiniteField::from_int(long n) const { return static_cast<Elem>(((n % p_) + p_) % p_); }

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  auto da = digits(a);
  const auto db = digits(b);
  for (std::size_t i = 0; i < da.size(); ++i) da[i] = static_cast<int>((da[i] + db[i]) % p_);
  return from_digits(da);
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  auto d = digits(a);
  for (auto& x : d) x = static_cast<int>((p_ - x) % p_);
  return from_digits(d);
}

long FiniteField::log(Elem a) const {
  if (a <= 0 || a >= q_) throw ParameterError("log of zero or out-of-range element");
  return log_[static_cast<std::size_t>(a)];
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>((log(a) + log(b)) % (q_ - 1))];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_q");
  return exp_[static_cast<std::size_t>((q_ - 1 - log(a)) % (q_ - 1))];
}

FiniteField::Elem FiniteField::pow(Elem a, long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const long n = q_ - 1;
  const long t = ((log(a) * (e % n)) % n + n) % n;
  return exp_[static_cast<std::size_t>(t)];
}

std::vector<FiniteField::Elem> FiniteField::elements() const {
  std::vector<Elem> out;
  for (long a = 0; a < q_; ++a) out.push_back(static_cast<Elem>(a));
  return out;
}

std::string FiniteField::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto d = digits(a);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    const int c = d[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FiniteField::Elem FiniteField::parse(const std::string& s) const {
  // Integers, or sums of terms c, a, ca, a^i, ca^i.
  if (s.empty()) throw PresentationError("empty field element");
  std::vector<int> d(static_cast<std::size_t>(k_), 0);
  std::size_t pos = 0;
  long sign = 1;
  auto read_num = [&](long& out) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out = std::stol(s.substr(start, pos - start)) % p_;
    return true;
  };
  while (pos < s.size()) {
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    long c = 1;
    const bool had = read_num(c);
    int deg = 0;
    if (pos < s.size() && s[pos] == 'a') {
      ++pos;
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        long e = 0;
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw PresentationError("bad exponent in '" + s + "'");
        e = std::stol(s.substr(start, pos - start));
        deg = static_cast<int>(e);
      }
    } else if (!had) {
      throw PresentationError("cannot parse field element '" + s + "'");
    }
    if (deg > 0 && k_ == 1) throw PresentationError("prime field has no symbol a: '" + s + "'");
    Elem term = pow(exp_[1 % (q_ - 1)], deg);
    if (k_ == 1) term = 1;
    term = mul(term, from_int(sign * c));
    const auto td = digits(term);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<int>((d[i] + td[i]) % p_);
    sign = 1;
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw PresentationError("cannot parse field element '" + s + "'");
  }
  return from_digits(d);
}

}  // namespace bocalc
