#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jpst {

using Coeff = std::uint32_t;
using Vec = std::vector<Coeff>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t reached)
      : Error(what), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

struct Budget {
  std::size_t max_group_elements = 1'000'000;
  std::size_t max_instances = 10'000'000;
  std::size_t max_enumeration = std::size_t{1} << 20;
  std::size_t samples = 10'000;
  std::size_t max_cosets = 100'000;
  std::uint64_t seed = 20240611;
};

bool is_prime(std::uint64_t n);

inline Coeff mod_add(Coeff a, Coeff b, Coeff n) {
  return static_cast<Coeff>((std::uint64_t{a} + b) % n);
}
inline Coeff mod_sub(Coeff a, Coeff b, Coeff n) {
  return static_cast<Coeff>((std::uint64_t{a} + n - b) % n);
}
inline Coeff mod_mul(Coeff a, Coeff b, Coeff n) {
  return static_cast<Coeff>((std::uint64_t{a} * b) % n);
}
inline Coeff mod_neg(Coeff a, Coeff n) { return a == 0 ? 0 : n - a; }
inline Coeff mod_reduce(std::int64_t a, Coeff n) {
  std::int64_t r = a % static_cast<std::int64_t>(n);
  return static_cast<Coeff>(r < 0 ? r + n : r);
}
// Inverse of a modulo n, or 0 when a is not a unit.
Coeff mod_inverse(Coeff a, Coeff n);

namespace vec {
Vec zero(std::size_t d);
Vec unit(std::size_t d, std::size_t i);
Vec add(const Vec& a, const Vec& b, Coeff n);
Vec sub(const Vec& a, const Vec& b, Coeff n);
Vec neg(const Vec& a, Coeff n);
Vec scale(Coeff s, const Vec& a, Coeff n);
void axpy(Coeff s, const Vec& x, Vec& y, Coeff n);  // y += s x
bool is_zero(const Vec& a);
std::string str(const Vec& a);
}  // namespace vec

// Mixed radix codes for vectors in (Z/n)^d.
std::uint64_t encode(const Vec& v, Coeff n);
Vec decode(std::uint64_t code, Coeff n, std::size_t d);
// n^d, or throws BudgetExceeded above cap.
std::uint64_t checked_power(Coeff n, std::size_t d, std::uint64_t cap);

}  // namespace jpst
