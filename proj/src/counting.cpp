#include "fgn/counting.hpp"

namespace fgn {

const char* count_kind_name(CountKind kind) {
    switch (kind) {
    case CountKind::ReducedWords: return "reduced-words";
    case CountKind::Necklaces: return "necklaces";
    case CountKind::Bracelets: return "bracelets";
    case CountKind::PrimeWords: return "prime-words";
    case CountKind::Lyndon: return "lyndon";
    case CountKind::PrimeBracelets: return "prime-bracelets";
    }
    return "?";
}

unsigned long euler_phi(unsigned long n) {
    if (n == 0)
        throw std::invalid_argument("euler_phi: n must be >= 1");
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

int mobius(unsigned long n) {
    if (n == 0)
        throw std::invalid_argument("mobius: n must be >= 1");
    int primes = 0;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            ++primes;
        }
    }
    if (n > 1)
        ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

namespace {

BigCount reduced_words(int g, int len) {
    BigCount base = 2 * g - 1;
    BigCount pow;
    mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), len);
    return pow + (len % 2 == 1 ? BigCount(1) : base);
}

BigCount necklaces(int g, int len) {
    BigCount sum = 0;
    for (int d = 1; d * d <= len; ++d) {
        if (len % d != 0)
            continue;
        sum += BigCount(euler_phi(d)) * reduced_words(g, len / d);
        int e = len / d;
        if (e != d)
            sum += BigCount(euler_phi(e)) * reduced_words(g, d);
    }
    BigCount q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), len);
    if (r != 0)
        throw std::logic_error("necklace count: divisor sum not divisible by length");
    return q;
}

BigCount prime_words(int g, int len) {
    BigCount sum = 0;
    for (int d = 1; d * d <= len; ++d) {
        if (len % d != 0)
            continue;
        sum += mobius(len / d) * reduced_words(g, d);
        int e = len / d;
        if (e != d)
            sum += mobius(d) * reduced_words(g, e);
    }
    if (sum < 0)
        throw std::logic_error("prime-word count: negative Moebius sum");
    return sum;
}

BigCount exact_half(BigCount v, const char* what) {
    if (v % 2 != 0)
        throw std::logic_error(std::string(what) + ": count is odd, cannot halve exactly");
    return v / 2;
}

} // namespace

BigCount count(CountKind kind, int g, int len) {
    if (g < 1 || len < 1)
        throw std::invalid_argument("count: g and length must be >= 1");
    switch (kind) {
    case CountKind::ReducedWords:
        return reduced_words(g, len);
    case CountKind::Necklaces:
        return necklaces(g, len);
    case CountKind::Bracelets:
        if (g == 1)
            throw std::domain_error("count: bracelet counts are undefined by the "
                                    "halving formula at g = 1");
        return exact_half(necklaces(g, len), "bracelets");
    case CountKind::PrimeWords:
        return prime_words(g, len);
    case CountKind::Lyndon: {
        BigCount tau = prime_words(g, len);
        if (tau % len != 0)
            throw std::logic_error("lyndon count: tau not divisible by length");
        return tau / len;
    }
    case CountKind::PrimeBracelets: {
        if (g == 1)
            throw std::domain_error("count: prime-bracelet counts are undefined by "
                                    "the halving formula at g = 1");
        BigCount tau = prime_words(g, len);
        if (tau % (2 * len) != 0)
            throw std::logic_error("prime-bracelet count: tau not divisible by 2l");
        return tau / (2 * len);
    }
    }
    throw std::invalid_argument("count: unknown kind");
}

} // namespace fgn
