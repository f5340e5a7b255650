// Degree-one curve neighborhood of X(6,5,-1) in IG(3,9).
#include <iostream>

#include "igcurve/igcurve.hpp"

int main() {
    using namespace igcurve;
    const SchubertId id{SpaceParams{3, 4}, Indexation::BKT, {6, 5, -1}};
    const auto formula = nbhd_formula(id, 1);
    const auto oracle = nbhd_oracle(id, 1);
    for (const auto& c : formula.components) {
        std::cout << to_string(c.orbit) << ":";
        for (int a : c.bkt.parts) std::cout << " " << a;
        std::cout << "\n";
    }
    std::cout << (formula.cosets() == oracle.cosets() ? "oracle agrees\n" : "oracle disagrees\n");
    return formula.cosets() == oracle.cosets() ? 0 : 1;
}
