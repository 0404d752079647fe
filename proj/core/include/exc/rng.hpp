#pragma once

// Deterministic seeded RNG (splitmix64). std::random distributions are
// implementation-defined, so everything is generated from raw bits here to
// keep reports byte-identical for a fixed seed.

#include <cmath>
#include <cstdint>
#include <string>

#include "exc/octonion.hpp"
#include "exc/scalars.hpp"

namespace exc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // derive an independent stream, e.g. per check id
    static Rng derive(std::uint64_t root, const std::string& tag) {
        std::uint64_t h = 1469598103934665603ull;
        for (char ch : tag) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
        return Rng(root ^ h);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // small exact rational, numerator in [-9,9], denominator in {1,2,3}
    Rat rational() { return rat(int_in(-9, 9), int_in(1, 3)); }

    Rat rational_nonzero() {
        for (;;) {
            Rat r = rational();
            if (sgn(r) != 0) return r;
        }
    }

    CRat crational() { return CRat(rational(), rational()); }

    CF cfloat() { return CF(gaussian(), gaussian()); }

    Quat<double> quat() {
        return Quat<double>(gaussian(), gaussian(), gaussian(), gaussian());
    }

    Quat<double> unit_quat() {
        for (;;) {
            Quat<double> q = quat();
            double n = std::sqrt(norm2(q));
            if (n > 1e-3) return (1.0 / n) * q;
        }
    }

    Quat<Rat> quat_rat() {
        return Quat<Rat>(rational(), rational(), rational(), rational());
    }

    Oct<double> oct() { return Oct<double>(quat(), quat()); }
    Oct<Rat> oct_rat() { return Oct<Rat>(quat_rat(), quat_rat()); }
    Oct<CRat> oct_crat() {
        Oct<CRat> z;
        for (std::size_t k = 0; k < 8; ++k) z.coord(k) = crational();
        return z;
    }

    // exact unit quaternion via the Cayley transform of an imaginary quaternion
    Quat<Rat> unit_quat_rat() {
        Quat<Rat> u(Rat(0), rational(), rational(), rational());
        // (1 - u)(1 + u)^{-1}, |1 + u|^2 = 1 + |u|^2 > 0
        Quat<Rat> num = Quat<Rat>(Rat(1)) - u;
        Quat<Rat> den_conj = conj(Quat<Rat>(Rat(1)) + u);
        Rat den2 = norm2(Quat<Rat>(Rat(1)) + u);
        Quat<Rat> p = num * den_conj;
        Rat inv = Rat(1) / den2;
        return inv * p;
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace exc
