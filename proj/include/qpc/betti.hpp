#pragma once

// Exact homology bookkeeping: Betti tables of tori and complex Grassmannians
// and the Kunneth convolution. Tori and complex Grassmannians have free
// homology, so the tables hold over any coefficient field; the field label
// is metadata, not a computation branch.

#include <string>
#include <vector>

namespace qpc {

struct BettiTable {
    std::string space;
    std::vector<long> b;  // b[0], b[1], ..., b[top]
    std::string field = "Q";

    long total() const;
    bool palindromic() const;
};

// b_i = binomial(d, i).
BettiTable torus_betti(int d);

// Even Betti numbers count partitions fitting in a k x (m-k) box (Schubert
// cells of complex dimension i); odd ones vanish. Table length 2k(m-k)+1.
// The enumeration is exhaustive, not a closed form.
BettiTable grassmann_betti(int k, int m);

// b_k(M x X) = sum_i b_i(M) b_{k-i}(X).
BettiTable kunneth(const BettiTable& bM, const BettiTable& bX);

}  // namespace qpc
