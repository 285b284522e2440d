#ifndef COMMPERM_EXTREMAL_HPP
#define COMMPERM_EXTREMAL_HPP

#include <commperm/count_table.hpp>
#include <commperm/exact.hpp>
#include <commperm/report.hpp>

namespace commperm {

// E(n,k): maximum product of k positive integers summing to n. With
// n = b*k + r the maximum is b^(k-r) * (b+1)^r.
Int e_max(long n, long k);

struct MaxProductPartition {
  Int value;
  std::vector<long> parts;  // one maximizing multiset, nonincreasing
  long maximizer_count;     // number of partitions attaining the maximum
};

// Exhaustive maximum of a_1*...*a_k over partitions of n into k positive
// parts. Oracle for e_max (n <= ~60); also witnesses that the maximizer is
// unique and has parts differing by at most 1.
MaxProductPartition e_enumerate(long n, long k);

// F(n,k): the constant in A(p,n,k) ~ F(n,k) * E(n,k)^p as p grows. With
// n = b*k + r:  F(n,k) = n!/(r!(k-r)!) * H(b)^(k-r) * H(b+1)^r.
Rat f_const(long n, long k);
Rat f_const(long n, long k, const FactorialTable& facts);

// Exact rational A(p,n,k) / (F(n,k) * E(n,k)^p), with A taken from `table`
// (p = table.p()).
Rat asymptotic_ratio(const CountTable& table, long n, long k);

// Quotients and remainders of n by k-1, k, k+1.
struct DivisionTriple {
  long b1, b2, b3;
  long r1, r2, r3;
};
DivisionTriple divisions(long n, long k);

// Log-concavity ratios of E and F at (n,k), the two factors R_F1 * R_F2 of
// R_F, and the classifier label (1..6) of the case analysis used to show
// R_E > 1 or (R_E = 1 and R_F >= 1).
struct ExtremalProfile {
  long n = 0, k = 0;
  Int e;       // E(n,k)
  Rat f;       // F(n,k)
  Rat r_e;     // E(n,k)^2 / (E(n,k-1) E(n,k+1))
  Rat r_f;     // F(n,k)^2 / (F(n,k-1) F(n,k+1)) == r_f1 * r_f2
  Rat r_f1;    // factorial factor, from the remainders of the three divisions
  Rat r_f2;    // H-power factor
  int case_label = 0;
};

// Classifies (n,k), 2 <= k <= n-1, n >= 3:
//   case 1: n >= k^2 - 2k + 2                       (R_E > 1)
// otherwise by the pattern of (b1,b2,b3) with b = b3:
//   case 2: (b, b, b)                               (R_E = 1, R_F >= 1)
//   case 3: (b+1, b, b), r1 > 0                     (R_E > 1)
//   case 4: (b+1, b, b), r1 = 0                     (R_E = 1, R_F >= 1)
//   case 5: (b+1, b+1, b)                           (R_E > 1)
//   case 6: (b+2, b+1, b)                           (R_E > 1)
// Throws std::logic_error if no case matches below the threshold, if the
// two R_F routes disagree, if a case's closed-form R_E (cases 3, 5, 6)
// differs from the direct value, or if the case's predicted conclusion
// fails. All comparisons are exact.
ExtremalProfile classify_case(long n, long k);
ExtremalProfile classify_case(long n, long k, const FactorialTable& facts);

// E(n,k)^2 vs E(n,k-1)E(n,k+1) for all 3 <= n <= nmax, 2 <= k <= n-1.
// Report rows list the equality and violation pairs (strict pairs are only
// counted). Deterministic for any job count. With a sink, rows stream
// instead of collecting; at nmax in the thousands the equality rows hold
// numbers of thousands of bits, so only the streaming form stays in memory
// budget.
ScanReport check_e_logconcavity(long nmax, int jobs = 1, const RowSink& sink = {});

// classify_case over all 3 <= n <= nmax, 2 <= k <= n-1; one row per pair
// with verdict "case1".."case6", lhs = R_E, rhs = R_F. Internal consistency
// failures become "violation" rows. Sink semantics as above.
ScanReport classify_scan(long nmax, int jobs = 1, const RowSink& sink = {});

// Exhaustive checks of the four supporting inequalities:
//   lemma1: E(n,k)/E(n,k-1) nondecreasing in n       (k <= kmax, n <= nmax)
//   lemma2: strictly increasing once n >= k^2-2k+1   (same box)
//   lemma3: quotient drops b1-b2, b2-b3 <= 1 when n <= k^2-k
//   lemma4: a+b = c+d, min(a,b) >= min(c,d)  =>  a!b! <= c!d!   (sums <= 60)
// Rows list violations only (expected none). For lemma4 rows, (n,k) carry
// (a,c); b,d are the complements to the common sum.
ScanReport lemma_checks(long nmax, long kmax);

// Number of k-cliques of the complete k-partite graph on n vertices with
// part sizes as equal as possible: one vertex per part, so the product of
// the part sizes. Equals e_max(n,k).
Int turan_clique_count(long n, long k);

// Maximum number of k-cliques over all graphs on n vertices containing no
// (k+1)-clique, by exhausting all 2^C(n,2) graphs. Guarded to n <= 7.
Int ex_bruteforce(int n, int k);

// Same, all k at once (index k, entry 0 unused); one pass over the graphs.
std::vector<Int> ex_bruteforce_row(int n);

// k-clique count of an explicit graph given as adjacency bitmasks.
// Used to cross-check turan_clique_count on explicitly built graphs.
Int clique_count(const std::vector<unsigned>& adjacency, int k);

// Adjacency bitmasks of the complete multipartite graph with the given part
// sizes (sum of sizes <= 31).
std::vector<unsigned> multipartite_graph(const std::vector<long>& part_sizes);

}  // namespace commperm

#endif  // COMMPERM_EXTREMAL_HPP
