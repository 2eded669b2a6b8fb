#include "qwalk/modarith.hpp"

#include <mutex>
#include <vector>

namespace qwalk::modp {

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 prime_at(std::size_t i)
{
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> lock(mu);
    while (primes.size() <= i) {
        mpz_class c = primes.empty() ? (mpz_class(1) << 62) - 100000 : mpz_class(static_cast<unsigned long>(primes.back()));
        --c;
        while (!mpz_probab_prime_p(c.get_mpz_t(), 30))
            --c;
        primes.push_back(static_cast<u64>(c.get_ui()));
    }
    return primes[i];
}

std::optional<u64> reduce(const Rational& c, u64 p)
{
    u64 den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    if (den == 0)
        return std::nullopt;
    u64 num = mpz_fdiv_ui(c.get_num_mpz_t(), p);
    return mulmod(num, invmod(den, p), p);
}

std::optional<u64> sqrtmod(u64 a, u64 p)
{
    if (a == 0)
        return 0;
    if (powmod(a, (p - 1) / 2, p) != 1)
        return std::nullopt;
    u64 q = p - 1;
    u64 s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j)
            b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

} // namespace qwalk::modp
