// Compares the serial reference and the OpenMP kernel of the brute-force
// isotropic subspace enumeration against the closed formula.
//
//   bench-isotropic [p] [dim] [r] [threads]
#include <chrono>
#include <iostream>

#ifdef SYMCOX_HAVE_OPENMP
#include <omp.h>
#endif

#include "symcox/counting.hpp"

using namespace symcox;

namespace {

template <typename F>
double timed(F&& f, Int& result) {
    auto start = std::chrono::steady_clock::now();
    result = f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    long p = argc > 1 ? std::stol(argv[1]) : 7;
    int dim = argc > 2 ? std::stoi(argv[2]) : 6;
    int r = argc > 3 ? std::stoi(argv[3]) : 3;
#ifdef SYMCOX_HAVE_OPENMP
    if (argc > 4)
        omp_set_num_threads(std::stoi(argv[4]));
#endif

    BruteForceGuard guard;
    guard.override_guard = true;

    std::cout << "p=" << p << " dim=" << dim << " r=" << r << "\n";
    for (FormKind kind : {FormKind::Symplectic, FormKind::OrthogonalOdd,
                          FormKind::OrthogonalEvenSplit, FormKind::OrthogonalEvenNonsplit}) {
        int d = dim;
        if ((kind == FormKind::OrthogonalOdd) != (d % 2 == 1))
            --d;  // fix up parity per kind
        FormSpace space(kind, d);
        int rr = std::min(r, space.witt_index());
        GramMatrix g = GramMatrix::standard(space, Int(p));

        Int formula = count_isotropic(space, rr, Int(p));
        Int serial, parallel;
        double t_serial = timed([&] { return brute_force_isotropic_serial(g, rr, Int(p), guard); },
                                serial);
        double t_parallel = timed([&] { return brute_force_isotropic(g, rr, Int(p), guard); },
                                  parallel);
        bool ok = serial == formula && parallel == formula;
        std::cout << form_kind_name(kind) << " d=" << d << " r=" << rr << ": count="
                  << formula.get_str() << " serial=" << t_serial << "ms parallel=" << t_parallel
                  << "ms speedup=" << (t_parallel > 0 ? t_serial / t_parallel : 0)
                  << (ok ? "" : "  MISMATCH") << "\n";
        if (!ok)
            return 1;
    }
    return 0;
}
