#include "descpoly/descpoly.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "descpoly/descent.hpp"
#include "descpoly/error.hpp"
#include "descpoly/eulerian.hpp"
#include "descpoly/genfunc.hpp"
#include "descpoly/juggling.hpp"
#include "descpoly/permutation.hpp"
#include "descpoly/verify.hpp"

struct descpoly_poly {
  explicit descpoly_poly(descpoly::IntPoly p) : poly(std::move(p)) {
    decimal.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs()) decimal.push_back(c.str());
  }
  descpoly::IntPoly poly;
  std::vector<std::string> decimal;
};

struct descpoly_polylist {
  std::vector<descpoly_poly> items;
};

struct descpoly_gf {
  descpoly::RationalBivariateGF gf;
  descpoly_polylist numerator;
  descpoly_polylist denominator;
};

struct descpoly_report {
  std::vector<descpoly::CheckResult> checks;
};

namespace {

thread_local std::string last_error;

descpoly_status status_of(descpoly::ErrorCode code) {
  using descpoly::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return DESCPOLY_E_INVALID_ARGUMENT;
    case ErrorCode::NegativeExponentResidue:
      return DESCPOLY_E_NEGATIVE_EXPONENT_RESIDUE;
    case ErrorCode::CapExceeded:
      return DESCPOLY_E_CAP_EXCEEDED;
    case ErrorCode::DropExceedsK:
      return DESCPOLY_E_DROP_EXCEEDS_K;
    case ErrorCode::InvalidSequence:
      return DESCPOLY_E_INVALID_SEQUENCE;
  }
  return DESCPOLY_E_INTERNAL;
}

template <typename Body>
descpoly_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return DESCPOLY_OK;
  } catch (const descpoly::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return DESCPOLY_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DESCPOLY_E_INTERNAL;
  }
}

descpoly_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return DESCPOLY_E_INVALID_ARGUMENT;
}

descpoly_polylist to_list(const std::vector<descpoly::IntPoly>& polys) {
  descpoly_polylist out;
  out.items.reserve(polys.size());
  for (const auto& p : polys) out.items.emplace_back(p);
  return out;
}

descpoly::Permutation to_perm(const int* perm, size_t n) {
  if (perm == nullptr && n > 0) descpoly::fail(descpoly::ErrorCode::InvalidArgument, "null permutation");
  return descpoly::Permutation(std::vector<int>(perm, perm + n));
}

descpoly::JugglingSequence to_seq(const int64_t* throws, size_t n) {
  if (throws == nullptr) descpoly::fail(descpoly::ErrorCode::InvalidArgument, "null throw array");
  return descpoly::JugglingSequence(std::vector<std::int64_t>(throws, throws + n));
}

}  // namespace

extern "C" {

const char* descpoly_version(void) { return "1.0.0"; }

const char* descpoly_last_error(void) { return last_error.c_str(); }

const char* descpoly_status_name(descpoly_status status) {
  switch (status) {
    case DESCPOLY_OK:
      return "OK";
    case DESCPOLY_E_INVALID_ARGUMENT:
      return "InvalidArgument";
    case DESCPOLY_E_NEGATIVE_EXPONENT_RESIDUE:
      return "NegativeExponentResidue";
    case DESCPOLY_E_CAP_EXCEEDED:
      return "CapExceeded";
    case DESCPOLY_E_DROP_EXCEEDS_K:
      return "DropExceedsK";
    case DESCPOLY_E_INVALID_SEQUENCE:
      return "InvalidSequence";
    case DESCPOLY_E_INTERNAL:
      return "Internal";
  }
  return "Unknown";
}

void descpoly_poly_free(descpoly_poly* p) { delete p; }

size_t descpoly_poly_size(const descpoly_poly* p) { return p ? p->decimal.size() : 0; }

const char* descpoly_poly_coeff(const descpoly_poly* p, size_t j) {
  if (p == nullptr || j >= p->decimal.size()) return "0";
  return p->decimal[j].c_str();
}

int descpoly_poly_equal(const descpoly_poly* a, const descpoly_poly* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->poly == b->poly;
}

void descpoly_polylist_free(descpoly_polylist* l) { delete l; }

size_t descpoly_polylist_size(const descpoly_polylist* l) { return l ? l->items.size() : 0; }

const descpoly_poly* descpoly_polylist_at(const descpoly_polylist* l, size_t i) {
  if (l == nullptr || i >= l->items.size()) return nullptr;
  return &l->items[i];
}

descpoly_status descpoly_bnk(unsigned n, unsigned k, descpoly_route route, unsigned enum_cap,
                             descpoly_poly** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    descpoly::Route r;
    switch (route) {
      case DESCPOLY_ROUTE_ENUMERATION:
        r = descpoly::Route::Enumeration;
        break;
      case DESCPOLY_ROUTE_RECURRENCE:
        r = descpoly::Route::Recurrence;
        break;
      case DESCPOLY_ROUTE_CLOSED_FORM:
        r = descpoly::Route::ClosedForm;
        break;
      default:
        descpoly::fail(descpoly::ErrorCode::InvalidArgument, "unknown route");
    }
    *out = new descpoly_poly(descpoly::bnk(n, k, r, enum_cap).poly);
  });
}

descpoly_status descpoly_eulerian(unsigned n, descpoly_poly** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new descpoly_poly(descpoly::eulerian_poly(n)); });
}

descpoly_status descpoly_pk(unsigned k, descpoly_which which, descpoly_construction construction,
                            descpoly_poly** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    if (which != DESCPOLY_WHICH_P && which != DESCPOLY_WHICH_PP)
      descpoly::fail(descpoly::ErrorCode::InvalidArgument, "unknown polynomial selector");
    descpoly::PkPoly p;
    switch (construction) {
      case DESCPOLY_CONSTRUCTION_FORMULA:
        if (which == DESCPOLY_WHICH_PP) {
          *out = new descpoly_poly(descpoly::pp_poly_formula(k));
          return;
        }
        p = descpoly::p_poly(k);
        break;
      case DESCPOLY_CONSTRUCTION_STRETCH:
        p = descpoly::p_poly_via_stretch(k);
        break;
      case DESCPOLY_CONSTRUCTION_DUPLICATION:
        p = descpoly::p_poly_via_duplication(k);
        break;
      default:
        descpoly::fail(descpoly::ErrorCode::InvalidArgument, "unknown construction");
    }
    *out = new descpoly_poly(which == DESCPOLY_WHICH_PP ? descpoly::stretch(p) : p.poly);
  });
}

descpoly_status descpoly_gf_build(unsigned k, descpoly_gf** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto handle = std::make_unique<descpoly_gf>();
    handle->gf = descpoly::build_gf(k);
    handle->numerator = to_list(handle->gf.numerator);
    handle->denominator = to_list(handle->gf.denominator);
    *out = handle.release();
  });
}

void descpoly_gf_free(descpoly_gf* gf) { delete gf; }

const descpoly_polylist* descpoly_gf_numerator(const descpoly_gf* gf) { return gf ? &gf->numerator : nullptr; }

const descpoly_polylist* descpoly_gf_denominator(const descpoly_gf* gf) {
  return gf ? &gf->denominator : nullptr;
}

descpoly_status descpoly_gf_series(const descpoly_gf* gf, unsigned upto, descpoly_polylist** out) {
  if (gf == nullptr) return null_argument("gf");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new descpoly_polylist(to_list(descpoly::series_coefficients(gf->gf, upto))); });
}

descpoly_status descpoly_gf_residual(const descpoly_gf* gf, unsigned upto, descpoly_polylist** out) {
  if (gf == nullptr) return null_argument("gf");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto series = descpoly::series_coefficients(gf->gf, upto);
    *out = new descpoly_polylist(to_list(descpoly::convolution_residual(gf->gf, series)));
  });
}

descpoly_status descpoly_maxdrop(const int* perm, size_t n, unsigned* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = static_cast<unsigned>(descpoly::maxdrop(to_perm(perm, n))); });
}

descpoly_status descpoly_bsort_pass(const int* perm, size_t n, int* out) {
  if (out == nullptr && n > 0) return null_argument("out");
  return guarded([&] {
    auto sorted = descpoly::bsort_pass(to_perm(perm, n));
    std::copy(sorted.values().begin(), sorted.values().end(), out);
  });
}

descpoly_status descpoly_phi(const int* perm, size_t n, unsigned k, int64_t* throws_out) {
  if (throws_out == nullptr) return null_argument("throws_out");
  return guarded([&] {
    auto t = descpoly::phi(to_perm(perm, n), k);
    std::copy(t.throws().begin(), t.throws().end(), throws_out);
  });
}

descpoly_status descpoly_juggle_is_valid(const int64_t* throws, size_t n, int* valid) {
  if (valid == nullptr) return null_argument("valid");
  return guarded([&] { *valid = descpoly::is_valid(to_seq(throws, n)) ? 1 : 0; });
}

descpoly_status descpoly_juggle_ball_count(const int64_t* throws, size_t n, int64_t* balls) {
  if (balls == nullptr) return null_argument("balls");
  return guarded([&] { *balls = descpoly::ball_count(to_seq(throws, n)); });
}

descpoly_status descpoly_fk_transform(const int64_t* throws, size_t n, int64_t* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto t = descpoly::fk_transform(to_seq(throws, n));
    std::copy(t.throws().begin(), t.throws().end(), out);
  });
}

descpoly_status descpoly_verify(descpoly_suite suite, unsigned nmax, unsigned kmax, descpoly_report** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    descpoly::Suite s;
    switch (suite) {
      case DESCPOLY_SUITE_IDENTITIES:
        s = descpoly::Suite::Identities;
        break;
      case DESCPOLY_SUITE_ROUTES:
        s = descpoly::Suite::Routes;
        break;
      case DESCPOLY_SUITE_BIJECTIONS:
        s = descpoly::Suite::Bijections;
        break;
      case DESCPOLY_SUITE_JUGGLING:
        s = descpoly::Suite::Juggling;
        break;
      case DESCPOLY_SUITE_STRUCTURE:
        s = descpoly::Suite::Structure;
        break;
      case DESCPOLY_SUITE_ALL:
        s = descpoly::Suite::All;
        break;
      default:
        descpoly::fail(descpoly::ErrorCode::InvalidArgument, "unknown suite");
    }
    auto report = std::make_unique<descpoly_report>();
    report->checks = descpoly::run_suite(s, {nmax, kmax});
    *out = report.release();
  });
}

void descpoly_report_free(descpoly_report* r) { delete r; }

size_t descpoly_report_size(const descpoly_report* r) { return r ? r->checks.size() : 0; }

int descpoly_report_all_passed(const descpoly_report* r) {
  if (r == nullptr) return 0;
  return std::all_of(r->checks.begin(), r->checks.end(), [](const auto& c) { return c.passed; }) ? 1 : 0;
}

const char* descpoly_report_suite(const descpoly_report* r, size_t i) {
  return r && i < r->checks.size() ? r->checks[i].suite.c_str() : "";
}

const char* descpoly_report_claim(const descpoly_report* r, size_t i) {
  return r && i < r->checks.size() ? r->checks[i].claim.c_str() : "";
}

int descpoly_report_passed(const descpoly_report* r, size_t i) {
  return r && i < r->checks.size() && r->checks[i].passed ? 1 : 0;
}

size_t descpoly_report_cases(const descpoly_report* r, size_t i) {
  return r && i < r->checks.size() ? r->checks[i].cases : 0;
}

const char* descpoly_report_counterexample(const descpoly_report* r, size_t i) {
  return r && i < r->checks.size() ? r->checks[i].counterexample.c_str() : "";
}

}  // extern "C"
