#include "bocalc/gw_coeff.hpp"

namespace bocalc {

void GWElem::normalize() {
  std::erase_if(parts_, [](const auto& kv) {
    return bocalc::is_zero(kv.second.one) && bocalc::is_zero(kv.second.eps);
  });
}

GWElem& GWElem::operator+=(const GWElem& o) {
  for (const auto& [k, p] : o.parts_) {
    auto& mine = parts_[k];
    mine.one += p.one;
    mine.eps += p.eps;
  }
  normalize();
  return *this;
}

GWElem& GWElem::operator-=(const GWElem& o) {
  for (const auto& [k, p] : o.parts_) {
    auto& mine = parts_[k];
    mine.one -= p.one;
    mine.eps -= p.eps;
  }
  normalize();
  return *this;
}

GWElem operator-(const GWElem& a) {
  GWElem out = a;
  for (auto& [k, p] : out.parts_) {
    p.one = -p.one;
    p.eps = -p.eps;
  }
  return out;
}

GWElem operator*(const GWElem& a, const GWElem& b) {
  GWElem out;
  for (const auto& [ka, pa] : a.parts_) {
    for (const auto& [kb, pb] : b.parts_) {
      auto& dst = out.parts_[ka + kb];
      // (a + b eps)(c + d eps) = (ac + bd) + (ad + bc) eps
      dst.one += pa.one * pb.one + pa.eps * pb.eps;
      dst.eps += pa.one * pb.eps + pa.eps * pb.one;
    }
  }
  out.normalize();
  return out;
}

GWElem GWElem::times_eps() const {
  GWElem out = *this;
  for (auto& [k, p] : out.parts_) std::swap(p.one, p.eps);
  return out;
}

GWElem GWElem::specialize_eps(int s) const {
  GWElem out;
  for (const auto& [k, p] : parts_) out.parts_[k] = Part{p.one + s * p.eps, Int(0)};
  out.normalize();
  return out;
}

GWElem GWElem::mod2() const {
  GWElem out;
  for (const auto& [k, p] : parts_) {
    Int a, b;
    mpz_fdiv_r_ui(a.get_mpz_t(), p.one.get_mpz_t(), 2);
    mpz_fdiv_r_ui(b.get_mpz_t(), p.eps.get_mpz_t(), 2);
    out.parts_[k] = Part{a, b};
  }
  out.normalize();
  return out;
}

std::string GWElem::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    const auto& [k, p] = *it;
    std::string inner;
    if (!bocalc::is_zero(p.one)) inner = p.one.get_str();
    if (!bocalc::is_zero(p.eps)) {
      const bool neg = sgn(p.eps) < 0;
      const Int mag = abs(p.eps);
      const std::string e = (mag == 1 ? std::string() : mag.get_str()) + "ε";
      if (inner.empty()) inner = (neg ? "-" : "") + e;
      else inner += (neg ? " - " : " + ") + e;
    }
    const bool compound = !bocalc::is_zero(p.one) && !bocalc::is_zero(p.eps);
    std::string term;
    if (k == 0) {
      term = inner;
    } else {
      const std::string b = k == 1 ? "β" : "β^" + std::to_string(k);
      if (!compound && inner == "1") term = b;
      else if (!compound && inner == "-1") term = "-" + b;
      else term = (compound ? "(" + inner + ")" : inner) + "*" + b;
    }
    if (!first) out += " + ";
    first = false;
    out += term;
  }
  return out;
}

}  // namespace bocalc
