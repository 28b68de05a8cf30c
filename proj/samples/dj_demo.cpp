// Runs Deutsch-Jozsa next to the deterministic classical baseline for a few
// oracle widths and prints the query counts side by side.

#include <cstdio>

#include "braket/deutsch_jozsa.hpp"

int main() {
    using namespace braket;
    std::printf("%4s %-10s %8s %12s %12s\n", "n", "oracle", "p_zero", "quantum", "classical");
    for (unsigned n : {2U, 4U, 6U, 8U, 10U}) {
        for (bool constant : {true, false}) {
            BooleanOracle f = constant ? BooleanOracle::make_constant(n, 1)
                                       : BooleanOracle::make_balanced(n, balanced::SingleBit{0});
            const DJResult q = deutsch_jozsa(f);
            const ClassicalOutcome c = classify_classical_deterministic(f);
            std::printf("%4u %-10s %8.4f %12u %12llu\n", n, to_string(q.verdict).c_str(), q.p_zero,
                        q.oracle_applications, static_cast<unsigned long long>(c.queries));
        }
    }
}
