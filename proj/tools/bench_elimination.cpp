// Times the serial reference elimination against the OpenMP row kernel on
// random dense rational matrices and checks that both produce the same
// reduced form. Thread count comes from OMP_NUM_THREADS.

#include "bigolin/labeled_matrix.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bigolin;

namespace {

LabeledMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::vector<std::string> r, c;
    for (int i = 0; i < rows; ++i) r.push_back("r" + std::to_string(i));
    for (int j = 0; j < cols; ++j) c.push_back("c" + std::to_string(j));
    LabeledMatrix m(r, c);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (auto& e : m.entries) e = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng)));
    return m;
}

double seconds(void (*run)(const LabeledMatrix&), const LabeledMatrix& m, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) run(m);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void run_serial(const LabeledMatrix& m) { (void)rref_serial(m); }
void run_parallel(const LabeledMatrix& m) { (void)rref_parallel(m); }

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial kernel\n");
#endif
    std::printf("%8s %12s %12s %8s %8s\n", "size", "serial[s]", "parallel[s]", "speedup", "equal");
    std::mt19937 rng(20240811);
    // Exact elimination on dense random fractions suffers severe coefficient
    // growth; sizes beyond ~50 take minutes, which is why the cohomology
    // engine works with small sparse matrices instead.
    for (int size : {16, 24, 32, 48}) {
        LabeledMatrix m = random_matrix(size, size + size / 3, rng);
        LabeledMatrix a = rref_serial(m);
        LabeledMatrix b = rref_parallel(m);
        bool equal = a.entries == b.entries;
        int reps = size <= 24 ? 3 : 2;
        double ts = seconds(run_serial, m, reps);
        double tp = seconds(run_parallel, m, reps);
        std::printf("%4dx%-4d %12.4f %12.4f %8.2f %8s\n", m.nrows(), m.ncols(), ts, tp, ts / tp,
                    equal ? "yes" : "NO");
        if (!equal) return 1;
    }
    return 0;
}
