#pragma once

#include <compare>
#include <vector>

#include "toricsyz/rational.hpp"

namespace toricsyz {

// Selects the toric surface X_delta together with the embedding divisor L_d.
// Everything else in the library derives from this pair.
struct SurfaceSpec {
    long delta = 0;  // slant parameter of the trapezoid, >= 0
    long d = 1;      // width parameter, >= 1 (very-ampleness threshold)

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

// Throws std::invalid_argument unless d >= 1 and delta >= 0.
void validate(const SurfaceSpec& spec);

struct LatticePoint {
    long x = 0;
    long y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    // lex (y, x): the fixed enumeration order used everywhere downstream
    friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

// Counts attached to the trapezoid conv{(0,0), (d,0), (0,2), (d+delta,2)}.
// r and n are computed both by enumeration and by closed form; constants()
// throws std::logic_error if the two routes ever disagree.
struct PolytopeConstants {
    long r = 0;          // projective dimension, n - 1
    long n = 0;          // #(Delta ∩ Z^2)
    Rational c_delta;    // r = 3d + c_delta
    Rational e_delta;    // offset in the algebraic n1 closed form
    Rational n1_algebraic;   // r/3 + e_delta, exact rational
    long interior = 0;   // strict-inequality lattice points
    long height_one = 0; // lattice points at y = 1
};

// gcd(delta, 2), with the convention gcd(0, 2) = 2.
long gcd_with_two(long delta);

// Integer points of the k-th dilate in lex (y, x) order; k = 0 gives {(0,0)}.
// Membership at height y: 0 <= x <= floor((2kd + y*delta) / 2).
std::vector<LatticePoint> lattice_points(const SurfaceSpec& spec, long k);

// #(k Delta ∩ Z^2) via the Ehrhart quadratic A k^2 + (B/2) k + 1 with
// A = 2d + delta and B = 2d + delta + 2 + gcd(delta,2). Overflow-checked:
// throws std::overflow_error instead of wrapping.
long long ehrhart_count(const SurfaceSpec& spec, long k);

PolytopeConstants constants(const SurfaceSpec& spec);

}  // namespace toricsyz
