#include "knottunnel/torus.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace knottunnel {

namespace {

Integer abs_int(Integer v) { return v < 0 ? -v : v; }

Integer gcd(Integer a, Integer b) {
    a = abs_int(std::move(a));
    b = abs_int(std::move(b));
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

} // namespace

NormalizedTorus normalize(const TorusInput& input) {
    if (input.p == 0 || input.q == 0) {
        throw std::domain_error("normalize: p and q must be nonzero");
    }
    if (gcd(input.p, input.q) != 1) {
        throw std::domain_error(
            "normalize: p and q must be coprime (a torus link otherwise)");
    }
    bool mirrored = (input.p < 0) != (input.q < 0);
    Integer p = abs_int(input.p);
    Integer q = abs_int(input.q);
    if (p < q) std::swap(p, q);
    return NormalizedTorus{std::move(p), std::move(q), mirrored};
}

std::string to_string(Letter l) { return l == Letter::U ? "U" : "L"; }

std::vector<Letter> letter_word(const CF& cf) {
    if (cf.terms.size() < 2) {
        throw std::domain_error("letter_word: trivial knot (single CF term)");
    }
    std::vector<Letter> letters;
    for (std::size_t i = 1; i < cf.terms.size(); ++i) {
        Integer reps = cf.terms[i];
        if (i + 1 == cf.terms.size()) reps -= 1;
        Letter l = (i % 2 == 1) ? Letter::U : Letter::L;
        for (Integer r = 0; r < reps; ++r) {
            letters.push_back(l);
        }
    }
    return letters;
}

CablingTrace cabling_trace(const NormalizedTorus& nt) {
    if (nt.q < 2) {
        throw std::domain_error("cabling_trace: trivial knot");
    }
    CablingTrace trace;
    trace.cf = cf_expand(nt.p, nt.q);
    trace.letters = letter_word(trace.cf);

    const Integer& n1 = trace.cf.terms.front();
    trace.m0 = simple_slope(1, 2 * n1 + 1);
    if (nt.mirrored) {
        trace.m0 = negate(trace.m0);
    }

    Mat2 m{1, 0, n1, 1}; // M(K_rho, K_lambda) after the n_1 trivial cablings
    bool first = true;
    for (Letter l : trace.letters) {
        m = (l == Letter::U ? mat2_u() : mat2_l()) * m;
        CablingStep step;
        step.letter = l;
        step.matrix = m;
        step.stage_knot = {m.a + m.c, m.b + m.d};
        if (!first) {
            Integer slope = permanent(m);
            step.slope = nt.mirrored ? -slope : slope;
        }
        first = false;
        trace.steps.push_back(std::move(step));
    }

    // s_i compares the carried disk of cablings i and i+1; the U-step
    // retains the lambda slot and the L-step the rho slot, so the carried
    // disk repeats exactly when consecutive letters coincide.
    std::string bits;
    for (std::size_t i = 1; i + 1 < trace.letters.size(); ++i) {
        bits.push_back(trace.letters[i] == trace.letters[i + 1] ? '0' : '1');
    }
    trace.s_string = SString{std::move(bits)};
    return trace;
}

SString torus_sstring(const NormalizedTorus& nt) {
    return cabling_trace(nt).s_string;
}

int torus_depth(const NormalizedTorus& nt) {
    if (nt.q < 2) return 0;
    return depth(torus_sstring(nt));
}

TunnelClass torus_classify(const TorusInput& input) {
    NormalizedTorus nt = normalize(input);
    if (nt.q < 2) return TunnelClass::Trivial;
    if (nt.q == 2) return TunnelClass::Simple;
    Integer r = nt.p % nt.q;
    if (r == 1 || r == nt.q - 1) return TunnelClass::Semisimple;
    return TunnelClass::Regular;
}

Integer torus_bridge_number(const NormalizedTorus& nt) { return nt.q; }

std::string slope_line(const CablingTrace& trace) {
    std::ostringstream os;
    os << "[ " << trace.m0.num << '/' << trace.m0.den << " ]";
    for (const CablingStep& step : trace.steps) {
        if (step.slope) {
            os << ", " << *step.slope;
        }
    }
    return os.str();
}

} // namespace knottunnel
