#include "toricsyz/lattice.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace toricsyz {

namespace {

using i128 = __int128;

long long checked_narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
    return static_cast<long long>(v);
}

// floor((2kd + y*delta) / 2): x-extent of row y in the k-th dilate
i128 row_xmax(const SurfaceSpec& spec, long k, long y) {
    return (i128(2) * k * spec.d + i128(y) * spec.delta) / 2;
}

}  // namespace

void validate(const SurfaceSpec& spec) {
    if (spec.d < 1)
        throw std::invalid_argument("SurfaceSpec: d must be >= 1 (got " +
                                    std::to_string(spec.d) + ")");
    if (spec.delta < 0)
        throw std::invalid_argument("SurfaceSpec: delta must be >= 0 (got " +
                                    std::to_string(spec.delta) + ")");
}

long gcd_with_two(long delta) {
    if (delta < 0) throw std::invalid_argument("gcd_with_two: negative delta");
    return delta % 2 == 0 ? 2 : 1;  // gcd(0,2) = 2 by convention
}

std::vector<LatticePoint> lattice_points(const SurfaceSpec& spec, long k) {
    validate(spec);
    if (k < 0) throw std::invalid_argument("lattice_points: k must be >= 0");

    long long count = ehrhart_count(spec, k);
    if (count > (1LL << 28))
        throw std::overflow_error("lattice_points: dilate has too many points to enumerate");

    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<size_t>(count));
    for (long y = 0; y <= 2 * k; ++y) {
        long xmax = static_cast<long>(row_xmax(spec, k, y));
        for (long x = 0; x <= xmax; ++x) pts.push_back({x, y});
    }
    return pts;
}

long long ehrhart_count(const SurfaceSpec& spec, long k) {
    validate(spec);
    if (k < 0) throw std::invalid_argument("ehrhart_count: k must be >= 0");
    i128 area = i128(2) * spec.d + spec.delta;                       // A
    i128 boundary = area + 2 + gcd_with_two(spec.delta);             // B, always even
    i128 value = area * k * k + (boundary / 2) * k + 1;
    return checked_narrow(value, "ehrhart_count");
}

PolytopeConstants constants(const SurfaceSpec& spec) {
    validate(spec);
    PolytopeConstants pc;

    const long g = gcd_with_two(spec.delta);
    pc.c_delta = Rational(3 * spec.delta, 2) + Rational(g, 2) + Rational(1);
    pc.e_delta = Rational(g, 3) - Rational(1, 3);

    auto pts = lattice_points(spec, 1);
    pc.n = static_cast<long>(pts.size());
    pc.r = pc.n - 1;

    // cross-check the enumeration against the closed forms
    if (Rational(pc.r) != Rational(3 * spec.d) + pc.c_delta)
        throw std::logic_error("constants: enumeration disagrees with r = 3d + C_delta");
    if (static_cast<long long>(pc.n) != ehrhart_count(spec, 1))
        throw std::logic_error("constants: enumeration disagrees with Ehrhart count");

    pc.n1_algebraic = Rational(pc.r, 3) + pc.e_delta;

    for (const auto& pt : pts) {
        if (pt.y == 1) ++pc.height_one;
        bool strict = pt.y > 0 && pt.y < 2 && pt.x > 0 &&
                      2 * pt.x < 2 * spec.d + pt.y * spec.delta;
        if (strict) ++pc.interior;
    }
    return pc;
}

}  // namespace toricsyz
