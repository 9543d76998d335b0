#include "hermnest/intervals.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <stdexcept>

namespace hermnest {

namespace {

// One directed evaluation of base + sum c_i * x_i * ln(n_i/d_i)^e_i.
// Each term is computed as sign * magnitude with every factor positive, so
// uniform directed rounding of the magnitude is monotone and safe.
void eval_dir(mpfr_t out, int64_t base_num, int64_t base_den,
              const std::vector<LogTerm>& terms, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  mpfr_set_si(out, base_num, rnd);
  mpfr_div_si(out, out, base_den, rnd);
  mpfr_t lg, mag;
  mpfr_init2(lg, prec);
  mpfr_init2(mag, prec);
  for (const auto& t : terms) {
    if (t.coeff_num == 0 || t.x == 0) continue;
    if (t.log_num == t.log_den) continue;  // ln 1 = 0 exactly
    bool log_neg = t.log_num < t.log_den;
    bool sign_neg = (t.coeff_num < 0) ^ (t.coeff_den < 0) ^ (t.x < 0);
    if (log_neg && t.log_exp % 2 == 1) sign_neg = !sign_neg;
    // magnitude rounds down when the signed term must round down and the term
    // is positive, or when it must round up and the term is negative
    mpfr_rnd_t magdir = ((rnd == MPFR_RNDD) != sign_neg) ? MPFR_RNDD : MPFR_RNDU;
    int64_t ln_num = log_neg ? t.log_den : t.log_num;  // argument > 1
    int64_t ln_den = log_neg ? t.log_num : t.log_den;
    mpfr_set_si(lg, ln_num, magdir);
    mpfr_div_si(lg, lg, ln_den, magdir);
    mpfr_log(lg, lg, magdir);
    mpfr_pow_ui(mag, lg, t.log_exp, magdir);
    mpfr_mul_si(mag, mag, std::llabs(t.x), magdir);
    mpfr_mul_si(mag, mag, std::llabs(t.coeff_num), magdir);
    mpfr_div_si(mag, mag, std::llabs(t.coeff_den), magdir);
    if (sign_neg) mpfr_neg(mag, mag, MPFR_RNDN);  // exact
    mpfr_add(out, out, mag, rnd);
  }
  mpfr_clear(lg);
  mpfr_clear(mag);
}

int64_t resolve(int64_t base_num, int64_t base_den, const std::vector<LogTerm>& terms,
                bool want_floor) {
  for (mpfr_prec_t prec = 128; prec <= (1 << 16); prec *= 2) {
    mpfr_t lo, hi, rlo, rhi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(rlo, prec);
    mpfr_init2(rhi, prec);
    eval_dir(lo, base_num, base_den, terms, MPFR_RNDD, prec);
    eval_dir(hi, base_num, base_den, terms, MPFR_RNDU, prec);
    if (want_floor) {
      mpfr_floor(rlo, lo);
      mpfr_floor(rhi, hi);
    } else {
      mpfr_ceil(rlo, lo);
      mpfr_ceil(rhi, hi);
    }
    long vlo = mpfr_get_si(rlo, MPFR_RNDN);
    long vhi = mpfr_get_si(rhi, MPFR_RNDN);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(rlo);
    mpfr_clear(rhi);
    if (vlo == vhi) return vlo;
  }
  throw std::runtime_error("interval evaluation did not resolve an integer boundary");
}

}  // namespace

int64_t floor_log_expr(int64_t base_num, int64_t base_den, const std::vector<LogTerm>& terms) {
  return resolve(base_num, base_den, terms, true);
}

int64_t ceil_log_expr(int64_t base_num, int64_t base_den, const std::vector<LogTerm>& terms) {
  return resolve(base_num, base_den, terms, false);
}

int64_t floor_x_xln(int64_t x, int64_t num, int64_t den) {
  if (num == den) return x;  // ln 1 = 0 exactly
  LogTerm t;
  t.x = x;
  t.log_num = num;
  t.log_den = den;
  return floor_log_expr(x, 1, {t});
}

}  // namespace hermnest
