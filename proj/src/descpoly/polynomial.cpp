#include "descpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "descpoly/error.hpp"

namespace descpoly {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return IntPoly(std::move(coeffs));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPoly::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Integer(0);
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Integer& c = coeffs_[j];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0 || mag != 1) os << mag;
    if (j >= 1) os << var;
    if (j >= 2) os << '^' << j;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly geometric(std::size_t k) { return IntPoly(std::vector<Integer>(k + 1, Integer(1))); }

IntPoly substitute_power(const IntPoly& p, std::size_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "substitute_power: exponent multiplier must be >= 1");
  if (p.is_zero()) return {};
  std::vector<Integer> out((p.coeffs().size() - 1) * m + 1);
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) out[j * m] = p.coeffs()[j];
  return IntPoly(std::move(out));
}

IntPoly multisect(const IntPoly& p, std::size_t step) {
  if (step == 0) fail(ErrorCode::InvalidArgument, "multisect: step must be >= 1");
  std::vector<Integer> out;
  for (std::size_t j = 0; j < p.coeffs().size(); j += step) out.push_back(p.coeffs()[j]);
  return IntPoly(std::move(out));
}

IntPoly reverse(const IntPoly& p, std::size_t d) {
  if (p.is_zero()) return {};
  if (*p.degree() > d)
    fail(ErrorCode::InvalidArgument, "reverse: target degree " + std::to_string(d) +
                                         " is below degree " + std::to_string(*p.degree()));
  std::vector<Integer> out(d + 1);
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) out[d - j] = p.coeffs()[j];
  return IntPoly(std::move(out));
}

bool is_symmetric(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "is_symmetric: zero polynomial");
  return reverse(p, *p.degree()) == p;
}

bool is_unimodal(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "is_unimodal: zero polynomial");
  const auto& c = p.coeffs();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i == c.size();
}

// LaurentPoly

LaurentPoly::LaurentPoly(long min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly::LaurentPoly(const IntPoly& p) : min_exp_(0), coeffs_(p.coeffs()) { normalize(); }

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
  return LaurentPoly(exponent, std::vector<Integer>{c});
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  min_exp_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

Integer LaurentPoly::coeff(long exponent) const {
  long idx = exponent - min_exp_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  long lo = std::min(min_exp_, rhs.min_exp_);
  long hi = std::max(min_exp_ + static_cast<long>(coeffs_.size()),
                     rhs.min_exp_ + static_cast<long>(rhs.coeffs_.size()));
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    out[static_cast<std::size_t>(min_exp_ - lo) + j] += coeffs_[j];
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
    out[static_cast<std::size_t>(rhs.min_exp_ - lo) + j] += rhs.coeffs_[j];
  min_exp_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return LaurentPoly(lhs.min_exp_ + rhs.min_exp_, std::move(out));
}

LaurentPoly l_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly l_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly l_scale(const LaurentPoly& p, const Integer& c) {
  LaurentPoly out = p;
  out *= c;
  return out;
}

IntPoly to_poly(const LaurentPoly& lp) {
  if (lp.is_zero()) return {};
  if (lp.min_exp() < 0)
    fail(ErrorCode::NegativeExponentResidue,
         "nonzero coefficient at u^" + std::to_string(lp.min_exp()));
  std::vector<Integer> out(static_cast<std::size_t>(lp.min_exp()), Integer(0));
  out.insert(out.end(), lp.coeffs().begin(), lp.coeffs().end());
  return IntPoly(std::move(out));
}

}  // namespace descpoly
