#include "bedard/field.hpp"

#include "bedard/error.hpp"

namespace bedard {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> digits(int x, int p, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

int encode(const std::vector<int>& d, int p) {
  int x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

// Product of two residues modulo a monic polynomial of degree k.
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& mod, int p) {
  const int k = static_cast<int>(mod.size()) - 1;
  std::vector<int> prod(static_cast<std::size_t>(2 * k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(static_cast<std::size_t>(k));
  return prod;
}

// A monic polynomial of degree k <= 4 is irreducible iff it has no monic
// factor of degree <= k/2; test by trial division over all such factors.
bool irreducible(const std::vector<int>& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      std::vector<int> g = digits(low, p, d);
      g.push_back(1);
      std::vector<int> r = f;
      for (int top = k; top >= d; --top) {
        const int c = r[top];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) r[top - d + i] = ((r[top - d + i] - c * g[i]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

std::shared_ptr<const FqField> FqField::make(int p, int k) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error("field degree must be positive");
  long long size = 1;
  for (int i = 0; i < k; ++i) {
    size *= p;
    if (size > kMaxFieldSize) throw Error("field of order " + std::to_string(p) + "^" + std::to_string(k) + " is too large");
  }
  auto f = std::shared_ptr<FqField>(new FqField());
  f->p_ = p;
  f->k_ = k;
  f->size_ = static_cast<int>(size);
  const int n = f->size_;

  if (k == 1) {
    f->modulus_ = {0, 1};
  } else {
    for (int low = 0; low < n; ++low) {
      std::vector<int> cand = digits(low, p, k);
      cand.push_back(1);
      if (irreducible(cand, p)) {
        f->modulus_ = cand;
        break;
      }
    }
  }

  f->add_.resize(static_cast<std::size_t>(n) * n);
  f->mul_.resize(static_cast<std::size_t>(n) * n);
  f->neg_.resize(n);
  for (int a = 0; a < n; ++a) {
    const auto da = digits(a, p, k);
    std::vector<int> na(da.size());
    for (int i = 0; i < k; ++i) na[i] = (p - da[i]) % p;
    f->neg_[a] = encode(na, p);
    for (int b = 0; b < n; ++b) {
      const auto db = digits(b, p, k);
      std::vector<int> s(da.size());
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      f->add_[a * n + b] = encode(s, p);
      if (k == 1) {
        f->mul_[a * n + b] = (a * b) % p;
      } else {
        f->mul_[a * n + b] = encode(polymulmod(da, db, f->modulus_, p), p);
      }
    }
  }
  f->inv_.assign(n, 0);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (f->mul(a, b) == 1) f->inv_[a] = b;
  f->frob_.resize(n);
  for (int a = 0; a < n; ++a) f->frob_[a] = f->pow(a, static_cast<std::uint64_t>(p));
  for (int g = 1; g < n; ++g) {
    int order = 1;
    for (int x = g; x != 1; x = f->mul(x, g)) ++order;
    if (order == n - 1) {
      f->primitive_ = g;
      break;
    }
  }
  return f;
}

std::shared_ptr<const FqField> FqField::of_order(int q) {
  if (q < 2) throw Error("field order must be at least 2");
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(std::to_string(q) + " is not a prime power");
  return make(p, k);
}

std::string FqField::name() const { return "F_" + std::to_string(size_); }

int FqField::inv(int a) const {
  if (a == 0) throw Error("division by zero in " + name());
  return inv_[a];
}

int FqField::pow(int a, std::uint64_t e) const {
  int result = 1;
  int base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

int FqField::frobenius(int x, int power) const {
  int r = ((power % k_) + k_) % k_;
  for (int i = 0; i < r; ++i) x = frob_[x];
  return x;
}

}  // namespace bedard
