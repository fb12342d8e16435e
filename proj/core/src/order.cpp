#include "mcg/order.hpp"

namespace mcg::cert {

mpz_class sp_order(int two_n) {
  if (two_n < 0 || two_n % 2 != 0) throw Error("sp_order: argument must be even and >= 0");
  int n = two_n / 2;
  mpz_class o = 1;
  mpz_mul_2exp(o.get_mpz_t(), o.get_mpz_t(), (mp_bitcnt_t)n * n);
  for (int i = 1; i <= n; ++i) {
    mpz_class f = 1;
    mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), (mp_bitcnt_t)(2 * i));
    o *= f - 1;
  }
  return o;
}

mpz_class expected_order(const surface::GenusConfig& cfg) {
  mpz_class sp = sp_order(2 * cfg.h);
  if (cfg.g % 2 == 1) return sp;
  mpz_class aff = 1;
  mpz_mul_2exp(aff.get_mpz_t(), aff.get_mpz_t(), (mp_bitcnt_t)(2 * cfg.h + 1));
  return sp * aff;
}

}  // namespace mcg::cert
