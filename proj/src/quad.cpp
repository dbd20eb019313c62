#include "ssbath/quad.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <exception>
#include <memory>
#include <string>

#include "ssbath/error.hpp"

namespace ssbath::quad {

namespace {

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

// GSL's default handler aborts the process; errors are reported through
// status codes instead.
const bool g_handler_disabled = [] {
  gsl_set_error_handler_off();
  return true;
}();

struct Trampoline {
  const std::function<double(double)>* f;
  std::exception_ptr error;
};

double call(double x, void* params) {
  auto* t = static_cast<Trampoline*>(params);
  if (t->error) return std::nan("");
  try {
    return (*t->f)(x);
  } catch (...) {
    t->error = std::current_exception();
    return std::nan("");
  }
}

}  // namespace

Estimate integrate(const std::function<double(double)>& f, double a, double b, Tolerance tol) {
  (void)g_handler_disabled;
  if (a == b) return {};
  Workspace ws(gsl_integration_workspace_alloc(tol.max_intervals));
  Trampoline t{&f, nullptr};
  gsl_function gf{&call, &t};
  double value = 0.0;
  double error = 0.0;
  const int status = gsl_integration_qag(&gf, a, b, tol.abs, tol.rel, tol.max_intervals,
                                         GSL_INTEG_GAUSS21, ws.get(), &value, &error);
  if (t.error) std::rethrow_exception(t.error);
  if (status != GSL_SUCCESS) {
    // Round-off limited runs whose bound still sits near the request are fine.
    const double requested = std::max(tol.abs, tol.rel * std::abs(value));
    if (!(status == GSL_EROUND && error <= 100.0 * requested) || !std::isfinite(value)) {
      throw NumericError(std::string("quad::integrate: ") + gsl_strerror(status), value, error);
    }
  }
  return {value, error};
}

ComplexEstimate integrate_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                          Tolerance tol) {
  const Estimate re = integrate([&f](double x) { return f(x).real(); }, a, b, tol);
  const Estimate im = integrate([&f](double x) { return f(x).imag(); }, a, b, tol);
  return {{re.value, im.value}, std::hypot(re.error, im.error)};
}

}  // namespace ssbath::quad
