#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "knotgap/kernels.hpp"

using namespace knotgap;

namespace {

double now() {
  using clk = std::chrono::steady_clock;
  return std::chrono::duration<double>(clk::now().time_since_epoch()).count();
}

template <typename F>
double time_of(F&& f) {
  double t0 = now();
  f();
  return now() - t0;
}

Mat hyperbolic_sum(int copies) {
  Mat h(std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
  Mat out = h;
  for (int i = 1; i < copies; ++i) out = direct_sum(out, h);
  return out;
}

void row(const std::string& name, double serial, double omp, size_t items) {
  std::printf("%-34s %10.3fs %10.3fs %7.2fx %10zu\n", name.c_str(), serial,
              omp, omp > 0 ? serial / omp : 0.0, items);
}

}  // namespace

int main() {
  std::printf("%-34s %11s %11s %8s %10s\n", "workload", "serial", "omp",
              "speedup", "results");

  {
    Mat s = hyperbolic_sum(3);  // 6-dim split form, large shells
    for (int h : {4, 6, 8}) {
      std::vector<std::vector<long long>> a, b;
      double ts = time_of([&] { a = kernels::isotropic_shell_serial(s, h); });
      double tp = time_of([&] { b = kernels::isotropic_shell_omp(s, h); });
      if (a != b) {
        std::printf("MISMATCH isotropic shell h=%d\n", h);
        return 1;
      }
      row("isotropic shell 6-dim h=" + std::to_string(h), ts, tp, a.size());
    }
  }

  {
    Mat s(std::vector<std::vector<long long>>{
        {2, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, 2, 1}, {0, 0, 1, -2}});
    for (int h : {10, 16}) {
      std::vector<std::vector<long long>> a, b;
      double ts = time_of([&] { a = kernels::isotropic_shell_serial(s, h); });
      double tp = time_of([&] { b = kernels::isotropic_shell_omp(s, h); });
      if (a != b) {
        std::printf("MISMATCH isotropic shell h=%d\n", h);
        return 1;
      }
      row("isotropic shell 4-dim h=" + std::to_string(h), ts, tp, a.size());
    }
  }

  {
    for (long long m : {21, 401, 3981}) {
      std::vector<long long> a, b;
      double ts =
          time_of([&] { a = kernels::dagger_shell_serial(m, 1, 200000); });
      double tp = time_of([&] { b = kernels::dagger_shell_omp(m, 1, 200000); });
      if (a != b) {
        std::printf("MISMATCH dagger shell m=%lld\n", m);
        return 1;
      }
      row("dagger shell m=" + std::to_string(m) + " [1,2e5)", ts, tp,
          a.size());
    }
  }

  return 0;
}
