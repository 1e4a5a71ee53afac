#include "jpst/common.hpp"

#include <sstream>

namespace jpst {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Coeff mod_inverse(Coeff a, Coeff n) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = n, newr = a % n;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) return 0;
  return mod_reduce(t, n);
}

namespace vec {

Vec zero(std::size_t d) { return Vec(d, 0); }

Vec unit(std::size_t d, std::size_t i) {
  Vec v(d, 0);
  v[i] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b, Coeff n) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_add(a[i], b[i], n);
  return r;
}

Vec sub(const Vec& a, const Vec& b, Coeff n) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_sub(a[i], b[i], n);
  return r;
}

Vec neg(const Vec& a, Coeff n) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_neg(a[i], n);
  return r;
}

Vec scale(Coeff s, const Vec& a, Coeff n) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_mul(s, a[i], n);
  return r;
}

void axpy(Coeff s, const Vec& x, Vec& y, Coeff n) {
  if (s == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = static_cast<Coeff>((y[i] + std::uint64_t{s} * x[i]) % n);
}

bool is_zero(const Vec& a) {
  for (Coeff c : a)
    if (c) return false;
  return true;
}

std::string str(const Vec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

}  // namespace vec

std::uint64_t encode(const Vec& v, Coeff n) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * n + v[i];
  return code;
}

Vec decode(std::uint64_t code, Coeff n, std::size_t d) {
  Vec v(d);
  for (std::size_t i = 0; i < d; ++i) {
    v[i] = static_cast<Coeff>(code % n);
    code /= n;
  }
  return v;
}

std::uint64_t checked_power(Coeff n, std::size_t d, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    r *= n;
    if (r > cap) throw BudgetExceeded("enumeration of " + std::to_string(n) + "^" +
                                          std::to_string(d) + " elements exceeds cap",
                                      static_cast<std::size_t>(cap));
  }
  return r;
}

}  // namespace jpst
