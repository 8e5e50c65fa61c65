#pragma once

#include <concepts>

namespace landen {

/// Customization point describing a coefficient ring. Specializations live
/// next to each ring type (scalars.hpp, multipoly.hpp, polynomial.hpp).
///
///   zero(), one(), from_int(long)   constants of the ring
///   is_zero(x)                      exact test for exact rings, == 0 otherwise
///   exact_div(a, b)                 a / b, throws NonZeroRemainder when b does
///                                   not divide a (exact non-field rings)
///   is_exact                        arithmetic never rounds
///   is_field                        every nonzero element is invertible
template <class R>
struct RingOps;

template <class R>
concept CommutativeRing = requires(const R& a, const R& b, R& acc) {
  { RingOps<R>::zero() } -> std::convertible_to<R>;
  { RingOps<R>::one() } -> std::convertible_to<R>;
  { RingOps<R>::from_int(1L) } -> std::convertible_to<R>;
  { RingOps<R>::is_zero(a) } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  acc += a;
  acc -= a;
};

template <class R>
concept Field = CommutativeRing<R> && RingOps<R>::is_field;

template <class R>
concept ExactRing = CommutativeRing<R> && RingOps<R>::is_exact;

}  // namespace landen
