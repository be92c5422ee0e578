// Serial reference loops vs OpenMP kernels.

#include <chrono>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "ortho/circumcenter.hpp"
#include "ortho/detectors.hpp"

using namespace ortho;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void line(const char* what, double serial, double parallel) {
  std::printf("%-34s serial %8.3f s  parallel %8.3f s  speedup %5.2fx\n", what, serial, parallel,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("OpenMP threads: %d\n", parallel_threads());

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<Triangle> tris;
  for (int i = 0; i < 200; ++i) tris.push_back({{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}});

  for (double p : {1.5, 2.0, kInf}) {
    const NormSpec s = NormSpec::lp(p);
    auto run = [&](Exec e) {
      std::size_t found = 0;
      for (const auto& t : tris) found += circumcenters(s, t, {}, e).size();
      return found;
    };
    const double ts = best_of(reps, [&] { run(Exec::serial); });
    const double tp = best_of(reps, [&] { run(Exec::parallel); });
    char name[64];
    std::snprintf(name, sizeof name, "circumcenters x200 %s", s.id().c_str());
    line(name, ts, tp);
  }

  for (double p : {1.5, 2.0}) {
    const NormSpec s = NormSpec::lp(p);
    const double ts = best_of(reps, [&] { euclideanity_report(s, 1000, 0, Exec::serial); });
    const double tp = best_of(reps, [&] { euclideanity_report(s, 1000, 0, Exec::parallel); });
    char name[64];
    std::snprintf(name, sizeof name, "euclideanity_report n=1000 %s", s.id().c_str());
    line(name, ts, tp);
  }
  return 0;
}
