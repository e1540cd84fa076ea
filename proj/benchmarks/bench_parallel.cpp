// Wall clock comparison of the two execution policies on the verification
// kernels. Results must be identical either way (that part is asserted);
// the interesting output is the ratio, which tracks the OpenMP thread count
// on multi-core machines and stays near 1.0 on a single core.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "nestcx/building.hpp"
#include "nestcx/fan.hpp"
#include "nestcx/nested.hpp"
#include "nestcx/oracle.hpp"
#include "nestcx/polytope.hpp"

namespace {

using namespace nestcx;

double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Best of three runs; kernels here are long enough that cache warmth is the
// only effect worth smoothing out.
template <typename F>
double best_of_3(F&& f) {
  double best = 1e100;
  for (int r = 0; r < 3; r++) {
    double t0 = now_s();
    f();
    double t = now_s() - t0;
    if (t < best) best = t;
  }
  return best;
}

void row(const char* label, double seq, double par) {
  printf("%-34s %9.3fs %9.3fs %7.2fx\n", label, seq, par, par > 0 ? seq / par : 0.0);
}

void mismatch(const char* what) {
  fprintf(stderr, "policies disagree on %s\n", what);
  std::exit(1);
}

}  // namespace

int main() {
  printf("threads available: %d\n\n", max_threads());
  printf("%-34s %10s %10s %8s\n", "kernel", "seq", "par", "speedup");

  BuildingSet k6 = BuildingSet::from_graph(complete_graph(6));
  QuotientLattice q = make_quotient(k6);

  NestedComplex cx_seq, cx_par;
  double t_seq = best_of_3([&] { cx_seq = enumerate_complex(k6, {.exec = Exec::seq}); });
  double t_par = best_of_3([&] { cx_par = enumerate_complex(k6, {.exec = Exec::par}); });
  if (cx_seq.f != cx_par.f || cx_seq.faces != cx_par.faces) mismatch("enumeration");
  row("enumerate complete(6)", t_seq, t_par);

  const NestedComplex& cx = cx_seq;
  DualGraph dual = dual_graph(k6, cx);

  FanReport fan_seq, fan_par;
  FanOptions fo;
  fo.samples = 0;
  fo.exec = Exec::seq;
  t_seq = best_of_3([&] { fan_seq = verify_fan(k6, q, cx, fo); });
  fo.exec = Exec::par;
  t_par = best_of_3([&] { fan_par = verify_fan(k6, q, cx, fo); });
  if (!fan_seq.ok() || !fan_par.ok() || fan_seq.pairs != fan_par.pairs)
    mismatch("pairwise cone meets");
  row("pair meets complete(6)", t_seq, t_par);

  fo.samples = 20000;
  fo.seed = 11;
  fo.exec = Exec::seq;
  t_seq = best_of_3([&] { fan_seq = verify_fan(k6, q, cx, fo); });
  fo.exec = Exec::par;
  t_par = best_of_3([&] { fan_par = verify_fan(k6, q, cx, fo); });
  if (!fan_seq.ok() || !fan_par.ok() ||
      fan_seq.samples_expanded != fan_par.samples_expanded ||
      fan_seq.samples_separated != fan_par.samples_separated)
    mismatch("sampled expansions");
  row("20k expansion samples complete(6)", t_seq, t_par);

  NormalFanReport nf_seq, nf_par;
  t_seq = best_of_3([&] { nf_seq = verify_normal_fan(k6, cx, dual, Exec::seq); });
  t_par = best_of_3([&] { nf_par = verify_normal_fan(k6, cx, dual, Exec::par); });
  if (!nf_seq.ok() || !nf_par.ok() || nf_seq.edges != nf_par.edges ||
      nf_seq.polygons != nf_par.polygons)
    mismatch("normal fan checks");
  row("normal fan complete(6)", t_seq, t_par);

  auto census_seq = loop_census(k6, cx, dual, Exec::seq);
  t_seq = best_of_3([&] { census_seq = loop_census(k6, cx, dual, Exec::seq); });
  auto census_par = loop_census(k6, cx, dual, Exec::par);
  t_par = best_of_3([&] { census_par = loop_census(k6, cx, dual, Exec::par); });
  if (census_seq != census_par) mismatch("loop census");
  row("loop census complete(6)", t_seq, t_par);

  return 0;
}
