#pragma once

#include "bcert/interval.hpp"
#include "bcert/quadext.hpp"
#include "bcert/rational.hpp"

namespace bcert::exact {

// Uniform construction of the four assembly scalars (Rational, QuadExt,
// RatInterval, double) from exact rational constants, so the certification
// formulas can be written once and instantiated per mode.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct scalar_traits<QuadExt> {
    static QuadExt from_rational(const Rational& r) { return QuadExt(r); }
};

template <>
struct scalar_traits<RatInterval> {
    static RatInterval from_rational(const Rational& r) { return RatInterval(r); }
};

template <>
struct scalar_traits<double> {
    static double from_rational(const Rational& r) { return r.to_double(); }
};

template <class S>
S from_rational(const Rational& r) {
    return scalar_traits<S>::from_rational(r);
}

}  // namespace bcert::exact
