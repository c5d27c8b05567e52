#include "gridmagic/recurrence.hpp"

#include "gridmagic/config.hpp"

#include <mpfr.h>

#include <cmath>

namespace gridmagic {

namespace {

// One Kasteleyn factor (c_j^{n+1} - cbar_j^{n+1}) / (c_j - cbar_j), where
// c_j, cbar_j are the roots of x^2 - 2 a_j x - 1 with a_j = cos(j pi/(m+1)):
// f satisfies f(k) = 2 a_j f(k-1) + f(k-2), f(0) = 1, f(-1) = 0.
void factor_value(mpfr_t out, int j, int m, int n, mpfr_prec_t prec) {
    mpfr_t a, fprev, fcur, tmp;
    mpfr_inits2(prec, a, fprev, fcur, tmp, (mpfr_ptr) nullptr);
    mpfr_const_pi(a, MPFR_RNDN);
    mpfr_mul_si(a, a, j, MPFR_RNDN);
    mpfr_div_si(a, a, m + 1, MPFR_RNDN);
    mpfr_cos(a, a, MPFR_RNDN);
    mpfr_mul_si(a, a, 2, MPFR_RNDN);  // 2 a_j
    mpfr_set_si(fprev, 0, MPFR_RNDN);
    mpfr_set_si(fcur, 1, MPFR_RNDN);
    for (int k = 1; k <= n; ++k) {
        mpfr_mul(tmp, a, fcur, MPFR_RNDN);
        mpfr_add(tmp, tmp, fprev, MPFR_RNDN);
        mpfr_set(fprev, fcur, MPFR_RNDN);
        mpfr_set(fcur, tmp, MPFR_RNDN);
    }
    mpfr_set(out, fcur, MPFR_RNDN);
    mpfr_clears(a, fprev, fcur, tmp, (mpfr_ptr) nullptr);
}

}  // namespace

Int kasteleyn(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("need m, n >= 1");
    const int ceiling = config().precision_ceiling_bits;
    for (mpfr_prec_t prec = 128; prec <= ceiling; prec *= 2) {
        mpfr_t prod, f, resid;
        mpfr_inits2(prec, prod, f, resid, (mpfr_ptr) nullptr);
        mpfr_set_si(prod, 1, MPFR_RNDN);
        for (int j = 1; j <= (m + 1) / 2; ++j) {
            factor_value(f, j, m, n, prec);
            mpfr_mul(prod, prod, f, MPFR_RNDN);
        }
        Int rounded;
        mpfr_get_z(rounded.get_mpz_t(), prod, MPFR_RNDN);
        mpfr_sub_z(resid, prod, rounded.get_mpz_t(), MPFR_RNDN);
        mpfr_abs(resid, resid, MPFR_RNDN);
        double r = mpfr_get_d(resid, MPFR_RNDN);
        mpfr_clears(prod, f, resid, (mpfr_ptr) nullptr);
        if (r < 0.25) return rounded;
    }
    throw cap_exceeded("Kasteleyn evaluation exceeded the precision ceiling of " +
                       std::to_string(ceiling) + " bits");
}

}  // namespace gridmagic
