#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace trigvar {

inline constexpr std::size_t kMaxVars = 24;

// Exponent vector with a cached total degree. Unused slots stay zero, so monomials
// over registries of different sizes never compare equal by accident.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    std::uint16_t operator[](std::size_t i) const { return e[i]; }

    void set(std::size_t i, std::uint16_t v) {
        deg = deg - e[i] + v;
        e[i] = v;
    }

    bool is_one() const { return deg == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
        r.deg = a.deg + b.deg;
        return r;
    }

    bool divides(const Monomial& b) const {
        if (deg > b.deg) return false;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    // Caller guarantees b.divides(*this).
    Monomial operator/(const Monomial& b) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - b.e[i]);
        r.deg = deg - b.deg;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
            r.deg += r.e[i];
        }
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
            r.deg += r.e[i];
        }
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }

    static Monomial var(std::size_t i, std::uint16_t power = 1) {
        Monomial r;
        r.e[i] = power;
        r.deg = power;
        return r;
    }
};

// Graded reverse lexicographic comparison; variable 0 is the largest.
// Returns <0, 0, >0 like strcmp.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (std::size_t i = kMaxVars; i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : m.e) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace trigvar
