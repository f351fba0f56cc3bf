#ifndef FUNDOM_FP_HPP_
#define FUNDOM_FP_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

#include <Eigen/Core>

namespace fundom {

// Residue modulo a process-global prime p (default 32003).  All quantities
// computed over representation-finite path algebras are field-independent,
// so a single prime field with exact arithmetic suffices.
class Fp {
 public:
  Fp() : v_(0) {}
  explicit Fp(std::int64_t x) { v_ = reduce(x); }

  static std::uint32_t modulus() { return modulus_; }
  // Must be called before any Fp arithmetic; rejects non-primes.
  static void set_modulus(std::uint32_t p);

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus_ - v_); }
  Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  Fp& operator-=(Fp o) {
    v_ += modulus_ - o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  Fp& operator*=(Fp o) {
    v_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(v_) * o.v_) % modulus_);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const;

  friend std::ostream& operator<<(std::ostream& os, Fp a);

 private:
  static Fp from_raw(std::uint32_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  static std::uint32_t reduce(std::int64_t x) {
    std::int64_t m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
  }

  static std::uint32_t modulus_;
  std::uint32_t v_;
};

inline Fp abs(Fp a) { return a; }  // for Eigen's generic printing/tests

using Mat = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;

}  // namespace fundom

namespace Eigen {
template <>
struct NumTraits<fundom::Fp> {
  using Real = fundom::Fp;
  using NonInteger = fundom::Fp;
  using Nested = fundom::Fp;
  using Literal = fundom::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline fundom::Fp epsilon() { return fundom::Fp(0); }
  static inline fundom::Fp dummy_precision() { return fundom::Fp(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // FUNDOM_FP_HPP_
