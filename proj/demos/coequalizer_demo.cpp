// Collapses the cyclic group of order 4 by identifying 1 with 3, then runs
// the matching construction on the ring side: Z/12 modulo the two-sided
// ideal generated by 8. Both quotients come with verified projections.

#include <moncat/monoid.hpp>

#include <iostream>

using namespace moncat;

namespace {

void print_table(const MonoidObject<FinSet>& m, const std::string& name) {
    const int n = m.carrier.size;
    std::cout << name << " (order " << n << ", unit " << m.unit.table[0] << ")\n";
    for (int i = 0; i < n; ++i) {
        std::cout << "  ";
        for (int j = 0; j < n; ++j)
            std::cout << m.mult.table[static_cast<std::size_t>(i * n + j)] << ' ';
        std::cout << '\n';
    }
}

}  // namespace

int main() {
    const auto c4 = monoid_from_table({0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2}, 0);
    print_table(c4, "Z/4");

    const FinSetObj point(1);
    const FinSetMor pick_one(point, c4.carrier, {1});
    const FinSetMor pick_three(point, c4.carrier, {3});
    const auto q = quotient_by_translates<FinSet>(c4, pick_one, pick_three);

    std::cout << "\nafter identifying 1 ~ 3:\n";
    print_table(q.quotient, "quotient");
    std::cout << "projection:";
    for (int v : q.projection.map.table) std::cout << ' ' << v;
    std::cout << "\nverification: " << (q.verification.ok() ? "all laws hold" : "FAILED")
              << "\n\n";

    const auto z12 = cyclic_ring(12);
    const auto x = PresentedAbGroup::free_group(1);
    const AbMor alpha(x, z12.carrier, IntMatrix::from_rows({{8}}));
    const AbMor beta(x, z12.carrier, IntMatrix::from_rows({{0}}));
    const auto rq = quotient_by_translates<FinAb>(z12, alpha, beta);

    std::cout << "Z/12 modulo the ideal generated by 8\n";
    std::cout << "quotient carrier: " << rq.quotient.carrier.invariant_string() << '\n';
    std::cout << "verification: " << (rq.verification.ok() ? "all laws hold" : "FAILED") << '\n';
    return 0;
}
