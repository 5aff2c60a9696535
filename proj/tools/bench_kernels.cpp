// Timing comparison of the serial reference paths against the blocked
// OpenMP kernels. Values must agree bit for bit; only wall time differs.

#include <chrono>
#include <cstdio>

#include "hsd/levi.hpp"
#include "hsd/verify.hpp"

using namespace hsd;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_s(F&& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-40s %9.3f s %9.3f s  %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, identical ? "bit-identical" : "VALUES DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  long mc_samples = argc > 1 ? std::atol(argv[1]) : 1000000;
  int levi_points = argc > 2 ? std::atoi(argv[2]) : 400;
  int series_evals = argc > 3 ? std::atoi(argv[3]) : 400;

  std::printf("%-40s %11s %11s %7s\n", "kernel", "serial", "OpenMP", "speedup");

  {
    auto D = Domain::disc();
    CVector p = CVector::Zero(1);
    McResult rs, rp;
    double ts = time_s([&] { rs = mc_reproducing(D, {0}, p, mc_samples, 7, par::Exec::Serial); });
    double tp =
        time_s([&] { rp = mc_reproducing(D, {0}, p, mc_samples, 7, par::Exec::Parallel); });
    row("mc reproducing (disc, 1e6)", ts, tp,
        rs.estimate == rp.estimate && rs.se_re == rp.se_re);
  }

  {
    HartogsDomain H = make_hartogs(Domain::siegel_ball(1), 2, 1.5);
    std::vector<LeviReport> a, b;
    double ts = time_s([&] { a = levi_batch(H, levi_points, 7, par::Exec::Serial, true); });
    double tp = time_s([&] { b = levi_batch(H, levi_points, 7, par::Exec::Parallel, true); });
    bool same = true;
    for (std::size_t i = 0; i < a.size(); ++i) same = same && a[i].min_eig == b[i].min_eig;
    row("levi batch certificates", ts, tp, same);
  }

  {
    HartogsDomain H = make_hartogs(Domain::disc(), 2, 1.5);
    Rng rng(9);
    std::vector<HartogsPoint> pts;
    for (int i = 0; i < series_evals; ++i) pts.push_back(sample_hartogs_interior(H, rng, 0.8));
    Complex acc_s(0.0), acc_p(0.0);
    double ts = time_s([&] {
      for (int i = 0; i + 1 < series_evals; i += 2)
        acc_s += hartogs_kernel_series(H, pts[i], pts[i + 1], 400, par::Exec::Serial).value;
    });
    double tp = time_s([&] {
      for (int i = 0; i + 1 < series_evals; i += 2)
        acc_p += hartogs_kernel_series(H, pts[i], pts[i + 1], 400, par::Exec::Parallel).value;
    });
    row("hartogs series oracle", ts, tp, acc_s == acc_p);
  }

  {
    CalibrationResult cs, cp;
    double ts =
        time_s([&] { cs = calibrate_lorentz_constant(3, mc_samples / 2, 7, par::Exec::Serial); });
    double tp = time_s(
        [&] { cp = calibrate_lorentz_constant(3, mc_samples / 2, 7, par::Exec::Parallel); });
    row("lorentz constant calibration", ts, tp, cs.estimate == cp.estimate);
  }

  return 0;
}
