#include "weylreps.h"

#include <cstdlib>
#include <cstring>
#include <iterator>
#include <new>
#include <string>
#include <vector>

#include "weylreps/almost_periodic.hpp"
#include "weylreps/error.hpp"
#include "weylreps/gns.hpp"
#include "weylreps/position_rep.hpp"
#include "weylreps/schrodinger_oracle.hpp"
#include "weylreps/states.hpp"
#include "weylreps/text_format.hpp"
#include "weylreps/verify.hpp"
#include "weylreps/weyl_algebra.hpp"

struct wr_element {
  weylreps::WeylElement value;
};
struct wr_state {
  weylreps::StateFunctional value;
};
struct wr_vector {
  weylreps::FiniteSupportVector value;
};
struct wr_polynomial {
  weylreps::TrigPolynomial value;
};

namespace {

using namespace weylreps;

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

wr_status fail(wr_status status, const std::string& message, std::size_t line = 0, std::size_t column = 0) {
  last_error = {message, line, column};
  return status;
}

// Maps every exception escaping `body` onto a status code.
template <typename Body>
wr_status guarded(Body&& body) noexcept {
  try {
    body();
    return WR_OK;
  } catch (const ParseError& e) {
    return fail(WR_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const OwnerMismatch& e) {
    return fail(WR_ERR_OWNER_MISMATCH, e.what());
  } catch (const FlavorMismatch& e) {
    return fail(WR_ERR_FLAVOR_MISMATCH, e.what());
  } catch (const NonexistentObservable& e) {
    return fail(WR_ERR_NONEXISTENT_OBSERVABLE, e.what());
  } catch (const EigenFailure& e) {
    return fail(WR_ERR_EIGEN_FAILURE, e.what());
  } catch (const InvalidArgument& e) {
    return fail(WR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WR_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string("null argument: ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Rational rational_arg(const char* text, const char* what) {
  require(text, what);
  return Rational::parse(text);
}

std::vector<WeylElement> elements(const wr_element* const* items, std::size_t count) {
  if (count > 0) require(items, "element array");
  std::vector<WeylElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    require(items[i], "element");
    out.push_back(items[i]->value);
  }
  return out;
}

Direction direction_arg(wr_direction d) {
  if (d != WR_DIRECTION_U && d != WR_DIRECTION_V) throw InvalidArgument("unknown direction");
  return d == WR_DIRECTION_U ? Direction::U : Direction::V;
}

void split(Complex c, double* re, double* im) {
  require(re, "re");
  require(im, "im");
  *re = c.real();
  *im = c.imag();
}

}  // namespace

extern "C" {

const char* wr_version(void) { return "1.0.0"; }

const char* wr_status_name(wr_status status) {
  switch (status) {
    case WR_OK:
      return "ok";
    case WR_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case WR_ERR_PARSE:
      return "parse error";
    case WR_ERR_OWNER_MISMATCH:
      return "owner mismatch";
    case WR_ERR_FLAVOR_MISMATCH:
      return "flavor mismatch";
    case WR_ERR_NONEXISTENT_OBSERVABLE:
      return "nonexistent observable";
    case WR_ERR_EIGEN_FAILURE:
      return "eigensolver failure";
    case WR_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* wr_last_error(void) { return last_error.message.c_str(); }
size_t wr_last_error_line(void) { return last_error.line; }
size_t wr_last_error_column(void) { return last_error.column; }
void wr_string_free(char* s) { std::free(s); }

wr_status wr_element_generator(const char* a, const char* b, wr_element** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wr_element{WeylElement::generator(rational_arg(a, "a"), rational_arg(b, "b"))};
  });
}

wr_status wr_element_parse(const char* text, wr_element** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wr_element{parse_element(text)};
  });
}

wr_status wr_element_serialize(const wr_element* x, char** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = copy_string(serialize_element(x->value));
  });
}

wr_status wr_element_multiply(const wr_element* x, const wr_element* y, wr_element** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = new wr_element{multiply(x->value, y->value)};
  });
}

wr_status wr_element_add(const wr_element* x, const wr_element* y, wr_element** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = new wr_element{add(x->value, y->value)};
  });
}

wr_status wr_element_scale(double re, double im, const wr_element* x, wr_element** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = new wr_element{scale(Complex{re, im}, x->value)};
  });
}

wr_status wr_element_adjoint(const wr_element* x, wr_element** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = new wr_element{adjoint(x->value)};
  });
}

wr_status wr_element_l1_bound(const wr_element* x, double* out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = x->value.l1_bound();
  });
}

wr_status wr_element_term_count(const wr_element* x, size_t* out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = x->value.size();
  });
}

wr_status wr_element_term(const wr_element* x, size_t index, wr_element** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    if (index >= x->value.size()) throw InvalidArgument("term index out of range");
    auto it = x->value.terms().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    *out = new wr_element{WeylElement::from_terms({{it->first, it->second}})};
  });
}

void wr_element_free(wr_element* x) { delete x; }

wr_status wr_state_parse(const char* text, wr_state** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wr_state{parse_state(text)};
  });
}

wr_status wr_state_serialize(const wr_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = copy_string(serialize_state(state->value));
  });
}

wr_status wr_state_evaluate(const wr_state* state, const wr_element* x, double* re, double* im) {
  return guarded([&] {
    require(state, "state");
    require(x, "x");
    split(state->value.evaluate(x->value), re, im);
  });
}

wr_status wr_state_gram_matrix(const wr_state* state, const wr_element* const* basis, size_t count, double* re_out,
                               double* im_out) {
  return guarded([&] {
    require(state, "state");
    require(re_out, "re_out");
    require(im_out, "im_out");
    const auto g = gram_matrix(state->value, elements(basis, count));
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        const Complex c = g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        re_out[i * count + j] = c.real();
        im_out[i * count + j] = c.imag();
      }
    }
  });
}

wr_status wr_state_min_gram_eigenvalue(const wr_state* state, const wr_element* const* basis, size_t count,
                                       double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = check_positivity(state->value, elements(basis, count));
  });
}

void wr_state_free(wr_state* state) { delete state; }

wr_status wr_gns_inner(const wr_state* owner, const wr_element* x, const wr_element* y, double* re, double* im) {
  return guarded([&] {
    require(owner, "owner");
    require(x, "x");
    require(y, "y");
    split(gns_inner({x->value, owner->value}, {y->value, owner->value}), re, im);
  });
}

wr_status wr_gns_norm(const wr_state* owner, const wr_element* x, double* out) {
  return guarded([&] {
    require(owner, "owner");
    require(x, "x");
    require(out, "out");
    *out = gns_norm({x->value, owner->value});
  });
}

wr_status wr_gns_reduce(const wr_state* owner, const wr_element* x, char** out) {
  return guarded([&] {
    require(owner, "owner");
    require(x, "x");
    require(out, "out");
    *out = copy_string(serialize_reduced(reduce({x->value, owner->value})));
  });
}

wr_status wr_continuity_scan_csv(const wr_state* state, wr_direction direction, const char* grid, char** out) {
  return guarded([&] {
    require(state, "state");
    require(grid, "grid");
    require(out, "out");
    const auto points = parse_rational_list(grid);
    *out = copy_string(scan_to_csv(continuity_scan(state->value, direction_arg(direction), points)));
  });
}

wr_status wr_is_regular_direction(const wr_state* state, wr_direction direction, int* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = is_regular_direction(state->value, direction_arg(direction)) ? 1 : 0;
  });
}

wr_status wr_equivalence_check(const wr_state* state, const wr_element* const* words, size_t count, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = equivalence_check(state->value, elements(words, count));
  });
}

wr_status wr_vector_basis(const char* point, int momentum_flavor, wr_vector** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wr_vector{
        FiniteSupportVector::basis(rational_arg(point, "point"), momentum_flavor ? Flavor::Momentum : Flavor::Position)};
  });
}

wr_status wr_vector_parse(const char* text, wr_vector** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wr_vector{parse_support_vector(text)};
  });
}

wr_status wr_vector_serialize(const wr_vector* v, char** out) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    *out = copy_string(serialize_support_vector(v->value));
  });
}

wr_status wr_vector_inner(const wr_vector* u, const wr_vector* v, double* re, double* im) {
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    split(inner(u->value, v->value), re, im);
  });
}

wr_status wr_vector_apply_u(const char* a, const wr_vector* v, wr_vector** out) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    *out = new wr_vector{apply_U(rational_arg(a, "a"), v->value)};
  });
}

wr_status wr_vector_apply_v(const char* b, const wr_vector* v, wr_vector** out) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    *out = new wr_vector{apply_V(rational_arg(b, "b"), v->value)};
  });
}

wr_status wr_vector_apply_q(const wr_vector* v, wr_vector** out) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    *out = new wr_vector{apply_Q(v->value)};
  });
}

wr_status wr_vector_apply_p(const wr_vector* v, wr_vector** out) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    *out = new wr_vector{apply_P(v->value)};
  });
}

void wr_vector_free(wr_vector* v) { delete v; }

wr_status wr_polynomial_parse(const char* text, wr_polynomial** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wr_polynomial{parse_polynomial(text)};
  });
}

wr_status wr_polynomial_serialize(const wr_polynomial* f, char** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = copy_string(serialize_polynomial(f->value));
  });
}

wr_status wr_polynomial_mean(const wr_polynomial* f, double* re, double* im) {
  return guarded([&] {
    require(f, "f");
    split(invariant_mean(f->value), re, im);
  });
}

wr_status wr_polynomial_mean_quadrature(const wr_polynomial* f, double half_width, double* re, double* im,
                                        double* bound) {
  return guarded([&] {
    require(f, "f");
    require(bound, "bound");
    const Complex q = mean_quadrature(f->value, half_width);
    split(q, re, im);
    *bound = mean_truncation_bound(f->value, half_width);
  });
}

wr_status wr_polynomial_evaluate(const wr_polynomial* f, const char* x, double* re, double* im) {
  return guarded([&] {
    require(f, "f");
    split(evaluate_at(f->value, rational_arg(x, "x")), re, im);
  });
}

void wr_polynomial_free(wr_polynomial* f) { delete f; }

wr_status wr_verify_run(const char* suite, uint64_t seed, char** report, int* all_passed) {
  return guarded([&] {
    require(suite, "suite");
    require(report, "report");
    require(all_passed, "all_passed");
    const SuiteReport r = run_suite(suite, seed);
    *report = copy_string(r.render());
    *all_passed = r.all_passed() ? 1 : 0;
  });
}

}  // extern "C"
