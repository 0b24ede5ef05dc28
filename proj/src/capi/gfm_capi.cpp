#include "gfm/gfm.h"

#include <cstring>
#include <new>
#include <string>

#include "modules.hpp"
#include "poly.hpp"
#include "report.hpp"

struct gfm_poly {
    gfm::Poly value;
};
struct gfm_eelt {
    gfm::EElt value;
};
struct gfm_report {
    gfm::Report value;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gfm_status fail(gfm_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

/// Runs the body, translating exceptions into status codes.
template <class Fn>
gfm_status guarded(Fn&& body) {
    try {
        t_last_error.clear();
        return body();
    } catch (const gfm::ParseError& ex) {
        return fail(GFM_ERR_PARSE, ex.what());
    } catch (const gfm::PrecisionError& ex) {
        return fail(GFM_ERR_PRECISION, ex.what());
    } catch (const std::overflow_error& ex) {
        return fail(GFM_ERR_OVERFLOW, ex.what());
    } catch (const std::invalid_argument& ex) {
        return fail(GFM_ERR_INVALID_ARGUMENT, ex.what());
    } catch (const std::domain_error& ex) {
        return fail(GFM_ERR_INVALID_ARGUMENT, ex.what());
    } catch (const std::exception& ex) {
        return fail(GFM_ERR_INTERNAL, ex.what());
    } catch (...) {
        return fail(GFM_ERR_INTERNAL, "unknown error");
    }
}

gfm_status require(bool ok, const char* what) {
    return ok ? GFM_OK : fail(GFM_ERR_INVALID_ARGUMENT, what);
}

} // namespace

extern "C" {

const char* gfm_version(void) { return "1.0.0"; }

const char* gfm_status_name(gfm_status status) {
    switch (status) {
        case GFM_OK: return "ok";
        case GFM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case GFM_ERR_PARSE: return "parse error";
        case GFM_ERR_PRECISION: return "insufficient precision";
        case GFM_ERR_OVERFLOW: return "exponent overflow";
        case GFM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* gfm_last_error(void) { return t_last_error.c_str(); }

void gfm_string_free(char* s) { delete[] s; }

gfm_status gfm_poly_parse(uint32_t p, uint32_t e, const char* text, gfm_poly** out) {
    if (gfm_status s = require(text && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_poly{gfm::parse_poly(gfm::FieldId{p, e}, text)};
        return GFM_OK;
    });
}

gfm_status gfm_poly_render(const gfm_poly* poly, char** out) {
    if (gfm_status s = require(poly && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = dup_string(poly->value.to_string());
        return *out ? GFM_OK : fail(GFM_ERR_INTERNAL, "allocation failure");
    });
}

gfm_status gfm_poly_add(const gfm_poly* a, const gfm_poly* b, gfm_poly** out) {
    if (gfm_status s = require(a && b && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_poly{a->value + b->value};
        return GFM_OK;
    });
}

gfm_status gfm_poly_mul(const gfm_poly* a, const gfm_poly* b, gfm_poly** out) {
    if (gfm_status s = require(a && b && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_poly{a->value * b->value};
        return GFM_OK;
    });
}

gfm_status gfm_poly_degree(const gfm_poly* poly, int64_t* degree, int* homogeneous) {
    if (gfm_status s = require(poly && degree && homogeneous, "null argument"); s != GFM_OK)
        return s;
    return guarded([&]() -> gfm_status {
        auto d = poly->value.degree();
        if (!d) return fail(GFM_ERR_INVALID_ARGUMENT, "the zero polynomial has no degree");
        *degree = d->degree;
        *homogeneous = d->homogeneous ? 1 : 0;
        return GFM_OK;
    });
}

void gfm_poly_free(gfm_poly* poly) { delete poly; }

gfm_status gfm_eelt_parse(uint32_t p, uint32_t e, const char* text, gfm_eelt** out) {
    if (gfm_status s = require(text && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_eelt{gfm::parse_eelt(gfm::FieldId{p, e}, text)};
        return GFM_OK;
    });
}

gfm_status gfm_eelt_render(const gfm_eelt* elt, char** out) {
    if (gfm_status s = require(elt && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = dup_string(elt->value.to_string());
        return *out ? GFM_OK : fail(GFM_ERR_INTERNAL, "allocation failure");
    });
}

gfm_status gfm_eelt_from_fraction(const gfm_poly* h, int64_t A, int64_t B, gfm_eelt** out) {
    if (gfm_status s = require(h && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_eelt{gfm::e_from_fraction(h->value, A, B)};
        return GFM_OK;
    });
}

gfm_status gfm_eelt_act(const gfm_poly* r, const gfm_eelt* elt, gfm_eelt** out) {
    if (gfm_status s = require(r && elt && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_eelt{gfm::e_act(r->value, elt->value)};
        return GFM_OK;
    });
}

gfm_status gfm_eelt_is_zero(const gfm_eelt* elt, int* out) {
    if (gfm_status s = require(elt && out, "null argument"); s != GFM_OK) return s;
    *out = elt->value.is_zero() ? 1 : 0;
    return GFM_OK;
}

gfm_status gfm_cech_vanishes(const gfm_poly* h, int64_t A, int64_t B, int64_t r_max,
                             int* out) {
    if (gfm_status s = require(h && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        std::int64_t bound = r_max < 0 ? gfm::cech_default_rmax(h->value, A, B) : r_max;
        *out = gfm::cech_vanishes(h->value, A, B, bound) ? 1 : 0;
        return GFM_OK;
    });
}

void gfm_eelt_free(gfm_eelt* elt) { delete elt; }

gfm_status gfm_run_theorem(uint32_t p, uint32_t e, int64_t alpha_max, gfm_report** out) {
    if (gfm_status s = require(out != nullptr, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_report{gfm::run_theorem(gfm::FieldId{p, e}, alpha_max)};
        return GFM_OK;
    });
}

gfm_status gfm_run_roundtrip(uint32_t p, uint32_t e, int64_t degree, int64_t precision,
                             uint64_t trials, uint64_t seed, gfm_report** out) {
    if (gfm_status s = require(out != nullptr, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_report{
            gfm::run_roundtrip(gfm::FieldId{p, e}, degree, precision, trials, seed)};
        return GFM_OK;
    });
}

gfm_status gfm_run_zero_fuzz(uint32_t p, uint32_t e, uint64_t trials, uint64_t seed,
                             gfm_report** out) {
    if (gfm_status s = require(out != nullptr, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = new gfm_report{gfm::run_zero_fuzz(gfm::FieldId{p, e}, trials, seed)};
        return GFM_OK;
    });
}

gfm_status gfm_run_walkthrough(uint32_t p, uint32_t e, int64_t alpha, const char* t_text,
                               gfm_report** out) {
    if (gfm_status s = require(t_text && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        gfm::FieldId field{p, e};
        gfm::Poly t = gfm::parse_poly(field, t_text);
        *out = new gfm_report{gfm::run_walkthrough(field, alpha, t)};
        return GFM_OK;
    });
}

int gfm_report_passed(const gfm_report* report) {
    return report && report->value.passed() ? 1 : 0;
}

gfm_status gfm_report_json(const gfm_report* report, char** out) {
    if (gfm_status s = require(report && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = dup_string(report->value.to_json().dump(2) + "\n");
        return *out ? GFM_OK : fail(GFM_ERR_INTERNAL, "allocation failure");
    });
}

gfm_status gfm_report_text(const gfm_report* report, char** out) {
    if (gfm_status s = require(report && out, "null argument"); s != GFM_OK) return s;
    return guarded([&] {
        *out = dup_string(report->value.to_text());
        return *out ? GFM_OK : fail(GFM_ERR_INTERNAL, "allocation failure");
    });
}

void gfm_report_free(gfm_report* report) { delete report; }

} // extern "C"
