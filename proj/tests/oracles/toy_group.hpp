#pragma once

// Test-only elliptic-curve group over a small prime field, enumerated by
// brute force and implemented with plain int64 modular arithmetic. Serves as
// the ground-truth group table for the curve/msm suites.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace testoracle {

struct ToyPoint {
    bool inf = true;
    std::int64_t x = 0, y = 0;

    friend bool operator==(const ToyPoint& a, const ToyPoint& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.x == b.x && a.y == b.y;
    }
};

class ToyGroup {
  public:
    std::int64_t p, a, b;
    std::vector<ToyPoint> elements;  // identity first, then all finite points

    static ToyGroup enumerate(std::int64_t p, std::int64_t a, std::int64_t b) {
        ToyGroup g{p, a, b, {}};
        g.elements.push_back(ToyPoint{});
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t y = 0; y < p; ++y)
                if ((y * y - (x * x * x + a * x + b)) % p == 0)
                    g.elements.push_back(ToyPoint{false, x, y});
        return g;
    }

    std::size_t order() const { return elements.size(); }

    std::int64_t mod(std::int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }

    std::int64_t inv(std::int64_t v) const {  // Fermat, p prime
        std::int64_t r = 1, base = mod(v), e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    }

    ToyPoint add(const ToyPoint& P, const ToyPoint& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        if (P.x == Q.x && mod(P.y + Q.y) == 0) return ToyPoint{};
        std::int64_t lam;
        if (P == Q) {
            if (P.y == 0) return ToyPoint{};
            lam = mod((3 * P.x % p * P.x + a) % p * inv(2 * P.y) % p);
        } else {
            lam = mod((Q.y - P.y) % p * inv(Q.x - P.x) % p);
        }
        const std::int64_t x3 = mod(lam * lam % p - P.x - Q.x);
        const std::int64_t y3 = mod(lam * (P.x - x3) % p - P.y);
        return ToyPoint{false, x3, y3};
    }

    ToyPoint mul(std::uint64_t k, const ToyPoint& P) const {
        ToyPoint acc{};
        ToyPoint base = P;
        while (k) {
            if (k & 1) acc = add(acc, base);
            base = add(base, base);
            k >>= 1;
        }
        return acc;
    }
};

}  // namespace testoracle
