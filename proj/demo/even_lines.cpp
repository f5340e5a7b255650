// Iterated lines through the Schubert point of IG(2,6) and IG(2,5).
#include <iostream>

#include "igcurve/igcurve.hpp"

int main() {
    using namespace igcurve;
    const SpaceParams s{2, 2};
    for (int d = 0; d <= 3; ++d) {
        const auto z = even_zd(s, d);
        const auto odd = nbhd_formula_cosets(identity_coset(s), d);
        std::cout << "d=" << d << "  even: (" << format_window(z) << ")  odd:";
        for (const auto& c : odd) std::cout << " (" << format_window(c) << ")";
        std::cout << "\n";
    }
}
