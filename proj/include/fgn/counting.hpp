#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

// Closed-form counts of reduced words, necklaces and bracelets in F_g.
// Everything is exact: counts grow like (2g-1)^l, so all arithmetic is
// arbitrary precision and every division is checked for exactness.

namespace fgn {

using BigCount = mpz_class;

enum class CountKind {
    ReducedWords,  // C(g,l)
    Necklaces,     // CC(g,l)
    Bracelets,     // CC(g,l) / 2
    PrimeWords,    // tau(g,l)
    Lyndon,        // tau(g,l) / l
    PrimeBracelets // tau(g,l) / 2l
};

const char* count_kind_name(CountKind kind);

// Standard totient, n >= 1.
unsigned long euler_phi(unsigned long n);

// Standard Moebius function, n >= 1.
int mobius(unsigned long n);

// The count selected by `kind` for rank g and word length l. Throws
// std::invalid_argument for g = 0 or l = 0, and std::domain_error for the
// bracelet and prime-bracelet kinds at g = 1 (the inverse-pairing argument
// behind the halving needs g >= 2). An inexact division anywhere else is an
// internal error.
BigCount count(CountKind kind, int g, int len);

} // namespace fgn
