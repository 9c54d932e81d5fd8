#include "kkschur/binomial.hpp"

namespace kks {

mpz_class binom(long n, long j) {
  if (j < 0) return 0;
  mpz_class top = n, out;
  // mpz_bin_ui extends to negative n via binom(-n, j) = (-1)^j binom(n+j-1, j).
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
  return out;
}

}  // namespace kks
