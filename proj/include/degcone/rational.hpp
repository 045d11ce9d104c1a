#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>
#include <cstdint>

namespace degcone {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { Rat r(num, den); r.canonicalize(); return r; }

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace degcone
