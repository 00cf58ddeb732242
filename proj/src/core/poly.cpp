#include "core/poly.hpp"

namespace exalg {

long Monomial::multiplicity_factorial() const {
    long out = 1;
    int run = 1;
    for (int k = 1; k < 4; ++k) {
        if (v[k] != 0xFF && v[k] == v[k - 1]) {
            ++run;
            out *= run;
        } else {
            run = 1;
        }
    }
    return out;
}

}  // namespace exalg
