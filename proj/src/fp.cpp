#include "fundom/fp.hpp"

#include <ostream>

namespace fundom {

std::uint32_t Fp::modulus_ = 32003;

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

void Fp::set_modulus(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  modulus_ = p;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid
  std::int64_t a = v_, m = modulus_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0);
}

std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

}  // namespace fundom
