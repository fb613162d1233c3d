// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgeom/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace qgeom {

namespace {

struct Bridge {
  const Objective* f;
  RVec x, g;
};

void load(const gsl_vector* v, RVec& x) {
  for (size_t i = 0; i < v->size; ++i) x(i) = gsl_vector_get(v, i);
}

double gsl_f(const gsl_vector* v, void* p) {
  auto* b = static_cast<Bridge*>(p);
  load(v, b->x);
  double val = (*b->f)(b->x, nullptr);
  return std::isfinite(val) ? val : std::numeric_limits<double>::max();
}

void gsl_df(const gsl_vector* v, void* p, gsl_vector* df) {
  auto* b = static_cast<Bridge*>(p);
  load(v, b->x);
  (*b->f)(b->x, &b->g);
  for (size_t i = 0; i < df->size; ++i) gsl_vector_set(df, i, b->g(i));
}

void gsl_fdf(const gsl_vector* v, void* p, double* f, gsl_vector* df) {
  auto* b = static_cast<Bridge*>(p);
  load(v, b->x);
  *f = (*b->f)(b->x, &b->g);
  for (size_t i = 0; i < df->size; ++i) gsl_vector_set(df, i, b->g(i));
}

}  // namespace

LocalResult bfgs_minimize(const Objective& f, const RVec& x0, double grad_tol, int max_iter) {
  gsl_set_error_handler_off();
  const size_t n = x0.size();
  Bridge bridge{&f, RVec(n), RVec(n)};
  gsl_multimin_function_fdf fn;
  fn.n = n;
  fn.f = gsl_f;
  fn.df = gsl_df;
  fn.fdf = gsl_fdf;
  fn.params = &bridge;

  gsl_vector* x = gsl_vector_alloc(n);
  for (size_t i = 0; i < n; ++i) gsl_vector_set(x, i, x0(i));
  gsl_multimin_fdfminimizer* s = gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, n);
  gsl_multimin_fdfminimizer_set(s, &fn, x, 0.01 * std::max(1.0, x0.norm()), 0.1);

  LocalResult r;
  int status = GSL_CONTINUE;
  int it = 0;
  // BFGS stalls (ENOPROG) are restarted a few times from the current point.
  int restarts_left = 3;
  while (it < max_iter) {
    ++it;
    int st = gsl_multimin_fdfminimizer_iterate(s);
    status = gsl_multimin_test_gradient(s->gradient, grad_tol);
    if (status == GSL_SUCCESS) break;
    if (st != GSL_SUCCESS) {
      if (restarts_left-- <= 0) break;
      gsl_multimin_fdfminimizer_restart(s);
    }
  }
  r.x = RVec(n);
  load(s->x, r.x);
  r.value = s->f;
  r.iterations = it;
  r.converged = status == GSL_SUCCESS;
  gsl_multimin_fdfminimizer_free(s);
  gsl_vector_free(x);
  return r;
}

RVec numeric_gradient(const std::function<double(const RVec&)>& f, const RVec& x, double h) {
  RVec g(x.size());
  RVec y = x;
  for (int i = 0; i < x.size(); ++i) {
    y(i) = x(i) + h;
    const double fp = f(y);
    y(i) = x(i) - h;
    const double fm = f(y);
    y(i) = x(i);
    g(i) = (fp - fm) / (2.0 * h);
  }
  return g;
}

int worker_threads() {
  if (const char* env = std::getenv("QGEOM_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MultiStartResult multistart_maximize(const Objective& f, int n, int restarts, std::uint64_t seed, double grad_tol,
                                     int max_iter) {
  if (restarts < 1) throw InvalidInput("restarts must be >= 1");
  // Start points are drawn up front so the result does not depend on the
  // thread count.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<RVec> starts(restarts, RVec(n));
  for (RVec& x0 : starts) {
    for (int i = 0; i < n; ++i) x0(i) = nd(rng);
    x0 /= x0.norm();
  }
  Objective neg = [&f](const RVec& x, RVec* g) {
    const double v = f(x, g);
    if (g) *g = -*g;
    return -v;
  };
  std::vector<LocalResult> local(restarts);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (int r = next++; r < restarts; r = next++) {
      try {
        local[r] = bfgs_minimize(neg, starts[r], grad_tol, max_iter);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int nthreads = std::min(worker_threads(), restarts);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  MultiStartResult out;
  out.best_value = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    const double v = -local[r].value;
    out.values.push_back(v);
    out.iterations += local[r].iterations;
    out.converged += local[r].converged ? 1 : 0;
    if (v > out.best_value) {
      out.best_value = v;
      out.best_x = local[r].x;
    }
  }
  // Converged when some restart meeting the gradient tolerance reached the
  // best value.
  const double tie = 1e-10 * std::max(1.0, std::abs(out.best_value));
  for (int r = 0; r < restarts; ++r)
    if (local[r].converged && out.values[r] >= out.best_value - tie) out.best_converged = true;
  return out;
}

CVec to_complex(const RVec& x) {
  const int n = static_cast<int>(x.size() / 2);
  CVec z(n);
  for (int i = 0; i < n; ++i) z(i) = cplx(x(i), x(n + i));
  return z;
}

RVec to_real(const CVec& z) {
  const int n = static_cast<int>(z.size());
  RVec x(2 * n);
  for (int i = 0; i < n; ++i) {
    x(i) = z(i).real();
    x(n + i) = z(i).imag();
  }
  return x;
}

}  // namespace qgeom
