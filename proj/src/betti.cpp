#include <qpc/betti.hpp>

#include <numeric>
#include <stdexcept>

namespace qpc {

long BettiTable::total() const { return std::accumulate(b.begin(), b.end(), 0L); }

bool BettiTable::palindromic() const {
    for (size_t i = 0, j = b.size(); i < j--; ++i)
        if (b[i] != b[j]) return false;
    return true;
}

BettiTable torus_betti(int d) {
    if (d < 1) throw std::invalid_argument("torus_betti: d must be >= 1");
    BettiTable t;
    t.space = "T^" + std::to_string(d);
    t.b.assign(static_cast<size_t>(d) + 1, 0);
    t.b[0] = 1;
    for (int i = 1; i <= d; ++i)
        t.b[static_cast<size_t>(i)] = t.b[static_cast<size_t>(i) - 1] * (d - i + 1) / i;
    return t;
}

namespace {
// Counts, per weight, the partitions with at most `rows` parts each <= `width`,
// by exhaustive enumeration of the (non-increasing) part lists.
void enumerate_partitions(int rows, int width, int max_part, int weight, std::vector<long>& count) {
    count[static_cast<size_t>(weight)] += 1;  // the partition built so far
    if (rows == 0) return;
    for (int part = 1; part <= max_part; ++part)
        enumerate_partitions(rows - 1, width, part, weight + part, count);
}
}  // namespace

BettiTable grassmann_betti(int k, int m) {
    if (k < 1 || k >= m) throw std::invalid_argument("grassmann_betti: need 1 <= k < m");
    const int box = k * (m - k);
    std::vector<long> cells(static_cast<size_t>(box) + 1, 0);
    enumerate_partitions(k, m - k, m - k, 0, cells);

    BettiTable t;
    t.space = "Gr_" + std::to_string(k) + "(C^" + std::to_string(m) + ")";
    t.b.assign(2 * static_cast<size_t>(box) + 1, 0);
    for (int i = 0; i <= box; ++i) t.b[2 * static_cast<size_t>(i)] = cells[static_cast<size_t>(i)];
    return t;
}

BettiTable kunneth(const BettiTable& bM, const BettiTable& bX) {
    BettiTable t;
    t.space = bM.space + " x " + bX.space;
    t.field = bM.field;
    t.b.assign(bM.b.size() + bX.b.size() - 1, 0);
    for (size_t i = 0; i < bM.b.size(); ++i)
        for (size_t j = 0; j < bX.b.size(); ++j) t.b[i + j] += bM.b[i] * bX.b[j];
    return t;
}

}  // namespace qpc
