// Walk through the main entry points on small grids.

#include <iostream>

#include "ekr/ekr.hpp"

int main() {
    using namespace ekr;

    std::cout << "K_4 x K_4, r = 2\n";
    std::cout << "  independent sets   " << rook_count(4, 4, 2) << "\n";
    std::cout << "  sets through (1,1) " << rook_star_count(4, 4, 2) << "\n";

    const auto rep = rook_ekr_verdict(4, 4, 2);
    std::cout << "  max intersecting   " << rep.max_intersecting << "\n";
    std::cout << "  verdict            " << to_string(rep.verdict) << "\n";

    // One cyclic order and its intervals.
    const auto order = canonicalize({1, 3, 2, 4}, {1, 4, 2, 3});
    std::cout << "\norder " << order_to_json(order).dump() << "\n";
    for (const auto &s : intervals_of(order, 2))
        std::cout << "  interval " << cells_to_json(s).dump() << "\n";
    std::cout << "  largest intersecting interval family: " << lemma1_max(order, 2) << "\n";

    // Double counting over every cyclic order for the star at (1,1).
    const auto star = star_family(4, 4, 2, {1, 1});
    const auto dc = double_count(star);
    std::cout << "\nstar(1,1): lhs " << dc.lhs << ", rhs " << dc.rhs << ", bound " << dc.lemma_bound << "\n";

    // Any graph works through the general path.
    const auto c5 = cycle_graph(5);
    std::cout << "\nC_5: alpha " << alpha(c5) << ", mu " << mu(c5) << "\n";
    for (const auto &r : ht_check(c5))
        std::cout << "  r=" << r.r << " " << to_string(r.verdict) << "\n";
}
