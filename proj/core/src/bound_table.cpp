#include <algorithm>
#include <stdexcept>

#include "pma/compact.hpp"

namespace pma {

namespace {

// Meta-offsets a scheduled j-tuple forbids when placing an i-tuple: j*i in
// the first period (each member against each member) plus j+i in the second
// (a j-chain blocks j+i consecutive base positions, pair-vs-pair giving the
// familiar four). Placing singles is tighter: a j-tuple costs 2j+1 in total.
Rational interference(int j, int i) {
    if (i == 1) return Rational(2 * j + 1);
    return Rational(static_cast<std::int64_t>(j) * i + j + i);
}

// Pool a phase must still hold when its last tuple gets built: the prefix
// hosting an (i-1)-tuple plus the candidate window.
Rational pool_needed(int i) {
    if (i <= 1) return Rational(0);
    std::int64_t km1 = i - 1;
    return Rational(km1 * km1 * km1, 3) + Rational(km1 * km1 + 1);
}

}  // namespace

std::vector<Rational> default_load_grid() {
    std::vector<Rational> grid;
    for (int q = 1; q <= 10; ++q)
        for (int p = 1; p <= q; ++p) grid.emplace_back(p, q);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

BoundTable bound_table(int k, const std::vector<Rational>& load_grid) {
    if (k < 1) throw std::invalid_argument("bound_table: k must be >= 1");

    BoundTable table;
    table.k = k;

    // Phase maxima as fractions of m: phase i keeps scheduling while the
    // forbidden count is below m, so the worst case stops at equality.
    std::vector<Rational> counts(k + 1, Rational(0));  // counts[i] for arity i
    for (int i = k; i >= 1; --i) {
        Rational used(0);
        for (int j = k; j > i; --j) used += counts[j] * interference(j, i);
        Rational room = Rational(1) - used;
        counts[i] = room > Rational(0) ? room / interference(i, i) : Rational(0);
    }

    table.capacity = Rational(0);
    for (int i = k; i >= 1; --i) {
        table.tuple_counts.push_back(counts[i]);
        table.capacity += Rational(i) * counts[i];
    }

    table.guaranteed_load = Rational(0);
    for (const auto& g : load_grid)
        if (g <= table.capacity && table.guaranteed_load < g) table.guaranteed_load = g;

    // Tuple supply: when phase i hits its scheduling limit, the pool must
    // still hold a compact i-tuple. With n = load * m messages and phases
    // j >= i having consumed j*counts[j]*m of them, that bounds n from below.
    table.min_n = 1;
    if (table.guaranteed_load > Rational(0)) {
        Rational consumed(0);
        for (int i = k; i >= 2; --i) {
            consumed += Rational(i) * counts[i];
            Rational pool_frac = Rational(1) - consumed / table.guaranteed_load;
            if (pool_frac <= Rational(0)) continue;
            std::int64_t need = (pool_needed(i) / pool_frac).ceil();
            table.min_n = std::max(table.min_n, static_cast<long long>(need));
        }
    }
    return table;
}

}  // namespace pma
