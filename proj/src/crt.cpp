#include "repdet/crt.hpp"

#include "repdet/errors.hpp"

namespace repdet {

Integer crt_combine(std::span<const Residue> residues) {
    Integer x = 0;
    Integer m = 1;
    for (const auto& [value, modulus] : residues) {
        if (modulus <= 0) throw InvalidModuli("modulus must be positive, got " + modulus.get_str());
        Integer g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
        if (g != 1) throw InvalidModuli("moduli are not pairwise coprime (" + modulus.get_str() + ")");

        // x' = x + m * ((value - x) * m^{-1} mod modulus)
        Integer inv;
        mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
        Integer t = (value - x) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
        x += m * t;
        m *= modulus;
    }
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (2 * x > m) x -= m;
    return x;
}

}  // namespace repdet
