#pragma once

#include <optional>
#include <vector>

#include "univoque/base_solver.hpp"
#include "univoque/expansion.hpp"
#include "univoque/precision_real.hpp"
#include "univoque/words.hpp"

namespace univoque {

// Thue-Morse digit: parity of the binary digit sum of i (tau_0 = 0).
int tau(std::uint64_t i);

// tau_1 .. tau_len as a word over {0,1}.
Word thue_morse_prefix(int len);

// The shifted sequence tau_1 tau_2 ... as a stream (0-based index i gives tau_{i+1}).
DigitStream thue_morse_stream();

// Everything below is specific to the two-letter alphabet {0,1}.

// alpha word of the n-th bifurcation base: tau_1..tau_{2^n} with the last
// digit decremented; its periodization is the expansion of 1 in base q_n.
Word bifurcation_alpha_word(int n);

struct BifurcationBase {
    int n = 0;
    Word alpha_word;     // tau_1..tau_{2^n} minus
    PrecisionReal q;     // root of pi_q((alpha_word)^inf) = 1
};

BifurcationBase bifurcation_base(int n, const Rational& tol);

// Families of sequences sitting in the set difference U_{q_{n+1}} \ U_{q_n}:
//   c(n,k) = tau_1..tau_{2^{n-1}} (refl+)^k ((refl of 2^n prefix)+)^inf
//   d(n,k) = same with an extra (refl of 2^{n-2} prefix)+ block before the tail
EventuallyPeriodicWord c_family(int n, int k);
EventuallyPeriodicWord c_family_limit(int n);            // k -> inf
EventuallyPeriodicWord d_family(int n, int k);           // n >= 2

// Exact membership check: every shifted tail of w lies strictly between the
// reflected and plain periodizations of bifurcation_alpha_word(n+1), and the
// tail of w is (a rotation of) the reflected periodization at level n.
// Purely lexicographic, no tolerance involved.
bool verify_member_star(const EventuallyPeriodicWord& w, int n);

struct IsoInterval {
    PrecisionReal lo;  // pi_{q_{n+1}}(word)
    PrecisionReal hi;  // pi_{q_n}(word)
    int n = 0;
    int k = 0;
    char family = 'C';
};

// Interval covers (pi_{q_{n+1}}(w), pi_{q_n}(w)) for both families.
// Rows come back keyed by (family, n, k) regardless of worker order.
std::vector<IsoInterval> iso_intervals(int n_max, int k_max, const Rational& tol, int jobs = 1);

// z_n = pi_{q_n}(c(n, inf)); z_1 equals M/(q_G - 1).
PrecisionReal z_point(int n, const Rational& tol);

enum class CertificateFamily { c_family, d_family, singleton };

struct IsolationCertificate {
    PrecisionReal x;
    PrecisionReal p;   // the isolated base
    int n = 0;
    int k = 0;
    CertificateFamily family = CertificateFamily::c_family;
    EventuallyPeriodicWord expansion;
    int match_length = 0; // preperiod length + 2 * 2^n
};

// Finds a family interval containing x, inverts the family word at x and
// verifies the certificate. x > 1 required; for x >= M/(q_G-1) the base set
// is the singleton {q_x} and a degenerate certificate is returned.
std::optional<IsolationCertificate> isolate(const PrecisionReal& x, int n_max, int k_max,
                                            const Rational& tol);

// Re-runs all certificate checks, with the base re-derived at a tighter
// tolerance (tol^2-level).
bool certificate_self_check(const IsolationCertificate& cert, const Rational& tol);

} // namespace univoque
