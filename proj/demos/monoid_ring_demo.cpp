// Builds the monoid ring of two small monoids through the truncated word
// construction, prints the recovered multiplication tables, and counts
// morphisms on both sides of the free/forgetful transpose against Z/6.

#include <moncat/adjunction.hpp>

#include <iostream>

using namespace moncat;

namespace {

void walk(const MonoidObject<FinSet>& d, const std::string& name) {
    std::cout << "== " << name << " ==\n";
    const auto lift = monoid_ring(d, 3);
    const int n = d.carrier.size;

    std::cout << "word algebra generators: " << lift.algebra.total.gens()
              << " (degrees 0.." << lift.truncation << ")\n";
    std::cout << "quotient carrier: " << lift.ring.carrier.invariant_string() << '\n';

    std::cout << "products of basis elements:\n";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto col = lift.ring.mult.matrix().col(static_cast<std::size_t>(x * n + y));
            std::cout << "  [" << x << "][" << y << "] =";
            for (std::size_t k = 0; k < col.rows(); ++k)
                if (col.at(k, 0) != 0) std::cout << ' ' << col.at(k, 0) << "*[" << k << "]";
            std::cout << '\n';
        }

    std::cout << "matches the direct construction: "
              << (monoid_equal<FinAb>(lift.ring, monoid_ring_direct(d)) ? "yes" : "NO") << '\n';

    const auto z6 = cyclic_ring(6);
    const auto report = hom_bijection_check(lift, z6);
    std::cout << "morphisms to Z/6: " << report.monoid_side.size()
              << " monoid-side, " << report.ring_side.size() << " ring-side; transpose "
              << (report.verification.ok() ? "bijective" : "FAILED") << "\n\n";
}

}  // namespace

int main() {
    walk(monoid_from_table({0, 1, 1, 0}, 0), "two-element group");
    walk(monoid_from_table({0, 1, 1, 1}, 0), "two-element absorbing monoid");
    return 0;
}
