#ifndef COMMPERM_SCAN_HPP
#define COMMPERM_SCAN_HPP

#include <commperm/report.hpp>

#include <functional>

namespace commperm {

// Runs fn(n) for n in [lo, hi] across `jobs` worker threads and hands each
// batch to drain exactly once, in increasing n order, on the calling thread.
// Work distribution is order-independent, so the drained sequence is
// identical for any job count. Memory stays bounded by the out-of-order
// window (at most a few batches per worker), which is what makes large scans
// serializable without holding every row.
void parallel_rows_stream(long lo, long hi, int jobs,
                          const std::function<std::vector<ScanRow>(long)>& fn,
                          const std::function<void(std::vector<ScanRow>&&)>& drain);

// Collecting variant: concatenation of all batches in n order.
std::vector<ScanRow> parallel_rows(long lo, long hi, int jobs,
                                   const std::function<std::vector<ScanRow>(long)>& fn);

}  // namespace commperm

#endif  // COMMPERM_SCAN_HPP
