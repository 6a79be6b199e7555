#include "kup/hopf/sweedler.hpp"

namespace kup {

SparseVector sweedler_power(const HopfData& h, int n, const SparseVector& x) {
    if (n == 0) return h.unit().scaled(h.eps(x));
    SparseTensor legs = h.delta_n(x, std::abs(n));
    if (n < 0) {
        for (int r = 0; r < legs.arity(); ++r) legs = legs.apply_on_leg(r, h.antipode());
    }
    return h.multiply_all(legs);
}

LinearMap sweedler_power_map(const HopfData& h, int n) {
    LinearMap m(h.dim());
    for (int i = 0; i < h.dim(); ++i) m.col(i) = sweedler_power(h, n, h.basis(i));
    return m;
}

}  // namespace kup
