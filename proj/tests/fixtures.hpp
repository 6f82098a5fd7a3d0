#pragma once

#include "lya/algebra.hpp"
#include "lya/cochain.hpp"
#include "lya/matrix.hpp"

#include <random>

namespace fx {

using namespace lya;

// [e1,e2] = e1, [[e1,e2,e2]] = e1
inline LYAlgebra two_dim()
{
    LYAlgebra a(2);
    a.set_binary(0, 1, {1, 0});
    a.set_ternary(0, 1, 1, {1, 0});
    return a;
}

// [e1,e2] = 2e4, [[e1,e2,e1]] = e4
inline LYAlgebra four_dim()
{
    LYAlgebra a(4);
    a.set_binary(0, 1, {0, 0, 0, 2});
    a.set_ternary(0, 1, 0, {0, 0, 0, 1});
    return a;
}

// [[0,a],[0,b]]
inline Matrix R2(const Scalar& a, const Scalar& b)
{
    Matrix r(2, 2);
    r(0, 1) = a;
    r(1, 1) = b;
    return r;
}

// rows 1 and 2 are (0,a12,0,0) and zero, rows 3 and 4 are free
inline Matrix R4(std::mt19937_64& rng)
{
    Matrix r(4, 4);
    r(0, 1) = random_scalar(rng);
    for (std::size_t c = 0; c < 4; ++c) {
        r(2, c) = random_scalar(rng);
        r(3, c) = random_scalar(rng);
    }
    return r;
}

inline Vector wedge_unit(std::size_t n, std::size_t i, std::size_t j) { return unit(n * (n - 1) / 2, WedgeBasis(n).index(i, j)); }

}  // namespace fx
