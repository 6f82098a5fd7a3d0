// Times serial and OpenMP coboundary-matrix assembly and checks they agree.
//   bench_assembly [reps]

#include "lya/rb_cohomology.hpp"
#include "lya/yamaguti.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lya;

namespace {

LYAlgebra four_dim()
{
    LYAlgebra a(4);
    a.set_binary(0, 1, {0, 0, 0, 2});
    a.set_ternary(0, 1, 0, {0, 0, 0, 1});
    return a;
}

template <class F>
double seconds(F&& f, int reps)
{
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

bool same(const SparseMatrix& a, const SparseMatrix& b)
{
    return a.rows == b.rows && a.cols == b.cols && a.columns == b.columns;
}

}  // namespace

int main(int argc, char** argv)
{
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    if (reps < 1) reps = 1;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    bool ok = true;
    LYAlgebra g = four_dim();
    Representation ad = adjoint_representation(g);
    for (int level = 2; level <= 3; ++level) {
        SparseMatrix par, ser;
        double tp = seconds([&] { par = yamaguti_matrix(g, ad, level); }, reps);
        double ts = seconds([&] { ser = yamaguti_matrix_serial(g, ad, level); }, reps);
        bool eq = same(par, ser);
        ok = ok && eq;
        std::cout << "yamaguti level " << level << " (" << ser.rows << "x" << ser.cols << "): serial " << ts
                  << " s, parallel " << tp << " s, " << (eq ? "equal" : "DIFFERENT") << "\n";
    }
    Matrix T(4, 4);
    T(0, 1) = 1;
    T(2, 0) = 3;
    T(2, 2) = 1;
    T(3, 1) = -1;
    T(3, 3) = Scalar(1, 2);
    RBComplex cx(g, ad, T);
    for (int level = 1; level <= 2; ++level) {
        SparseMatrix par, ser;
        double tp = seconds([&] { par = cx.matrix(level); }, reps);
        double ts = seconds([&] { ser = cx.matrix_serial(level); }, reps);
        bool eq = same(par, ser);
        ok = ok && eq;
        std::cout << "operator complex level " << level << " (" << ser.rows << "x" << ser.cols << "): serial " << ts
                  << " s, parallel " << tp << " s, " << (eq ? "equal" : "DIFFERENT") << "\n";
    }
    return ok ? 0 : 1;
}
