#pragma once

#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/traits/is_byte_container.hpp>

namespace genk {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

}  // namespace genk

/// Eigen expressions expose a const_iterator typedef of void in C++20; keep them out of Boost's byte-container probe.
namespace boost::multiprecision::detail {

template <class C>
  requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container_imp<C, true> : boost::false_type {};

}  // namespace boost::multiprecision::detail

namespace Eigen {

template <>
struct NumTraits<genk::Rational> : GenericNumTraits<genk::Rational> {
  typedef genk::Rational Real;
  typedef genk::Rational NonInteger;
  typedef genk::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 60
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
