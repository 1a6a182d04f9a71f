#include "bedard/qpoly.hpp"

#include "bedard/error.hpp"

namespace bedard {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("polynomial coefficient overflow");
  return r;
}

}  // namespace

QPoly::QPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(std::int64_t c) { return QPoly({c}); }

QPoly QPoly::monomial(int degree, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::q_minus_one_pow(int r) {
  QPoly out = constant(1);
  const QPoly factor({-1, 1});
  for (int i = 0; i < r; ++i) out = out * factor;
  return out;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t QPoly::evaluate(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, q), *it);
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], checked_mul(-1, o.c_[k]));
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a.c_[i], b.c_[j]));
  return QPoly(std::move(out));
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::int64_t c = c_[k];
    if (c == 0) continue;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = c < 0 ? -c : c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string QPoly::to_list_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(c_[k]);
  }
  return out + "]";
}

}  // namespace bedard
