#include <commperm/extremal.hpp>

#include <commperm/arith.hpp>
#include <commperm/scan.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>
#include <tuple>

namespace commperm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Int e_max(long n, long k) {
  require(k >= 1 && k <= n, "e_max: need 1 <= k <= n");
  const long b = n / k;
  const long r = n - b * k;
  return ipow(static_cast<unsigned long>(b), static_cast<unsigned long>(k - r)) *
         ipow(static_cast<unsigned long>(b + 1), static_cast<unsigned long>(r));
}

namespace {

void enumerate_partitions(long remaining, long parts_left, long max_part, std::vector<long>& stack,
                          const Int& running, MaxProductPartition& best) {
  if (parts_left == 0) {
    if (running > best.value) {
      best.value = running;
      best.parts = stack;
      best.maximizer_count = 1;
    } else if (running == best.value) {
      ++best.maximizer_count;
    }
    return;
  }
  const long hi = std::min(max_part, remaining - (parts_left - 1));
  const long lo = (remaining + parts_left - 1) / parts_left;
  for (long part = hi; part >= lo; --part) {
    stack.push_back(part);
    enumerate_partitions(remaining - part, parts_left - 1, part, stack, running * part, best);
    stack.pop_back();
  }
}

}  // namespace

MaxProductPartition e_enumerate(long n, long k) {
  require(k >= 1 && k <= n, "e_enumerate: need 1 <= k <= n");
  MaxProductPartition best{Int(0), {}, 0};
  std::vector<long> stack;
  stack.reserve(static_cast<size_t>(k));
  enumerate_partitions(n, k, n, stack, Int(1), best);
  return best;
}

Rat f_const(long n, long k, const FactorialTable& facts) {
  require(k >= 1 && k <= n, "f_const: need 1 <= k <= n");
  const long b = n / k;
  const long r = n - b * k;
  Rat result = make_ratio(facts.at(n), facts.at(r) * facts.at(k - r));
  result *= rpow(h_value(b), static_cast<unsigned long>(k - r));
  result *= rpow(h_value(b + 1), static_cast<unsigned long>(r));
  return result;
}

Rat f_const(long n, long k) { return f_const(n, k, FactorialTable(n)); }

Rat asymptotic_ratio(const CountTable& table, long n, long k) {
  require(n >= 1 && n <= table.nmax(), "asymptotic_ratio: n out of table range");
  require(k >= 1 && k <= n, "asymptotic_ratio: need 1 <= k <= n");
  const Rat denom = f_const(n, k) * Rat(ipow(e_max(n, k), static_cast<unsigned long>(table.p())));
  return Rat(table.at(n, k)) / denom;
}

DivisionTriple divisions(long n, long k) {
  require(n >= 3 && k >= 2 && k <= n - 1, "divisions: need 2 <= k <= n-1");
  DivisionTriple d{};
  d.b1 = n / (k - 1);
  d.r1 = n % (k - 1);
  d.b2 = n / k;
  d.r2 = n % k;
  d.b3 = n / (k + 1);
  d.r3 = n % (k + 1);
  return d;
}

namespace {

// (b+1)^2 / (b(b+2)), the elementary ratio whose powers make up the
// closed-form R_E expressions.
Rat bump_ratio(long b) {
  return make_ratio(Int(b + 1) * (b + 1), Int(b) * (b + 2));
}

void check(bool ok, long n, long k, const std::string& what) {
  if (!ok)
    throw std::logic_error("classify_case(" + std::to_string(n) + "," + std::to_string(k) +
                           "): " + what);
}

}  // namespace

ExtremalProfile classify_case(long n, long k, const FactorialTable& facts) {
  require(n >= 3 && k >= 2 && k <= n - 1, "classify_case: need n >= 3, 2 <= k <= n-1");

  ExtremalProfile prof;
  prof.n = n;
  prof.k = k;
  prof.e = e_max(n, k);
  prof.f = f_const(n, k, facts);
  prof.r_e = make_ratio(prof.e * prof.e, e_max(n, k - 1) * e_max(n, k + 1));
  prof.r_f = prof.f * prof.f / (f_const(n, k - 1, facts) * f_const(n, k + 1, facts));

  const DivisionTriple d = divisions(n, k);
  prof.r_f1 = make_ratio(facts.at(d.r1) * facts.at(k - 1 - d.r1) * facts.at(d.r3) * facts.at(k + 1 - d.r3),
                         facts.at(d.r2) * facts.at(d.r2) * facts.at(k - d.r2) * facts.at(k - d.r2));
  {
    Rat num = rpow(h_value(d.b2), 2 * static_cast<unsigned long>(k - d.r2)) *
              rpow(h_value(d.b2 + 1), 2 * static_cast<unsigned long>(d.r2));
    Rat den = rpow(h_value(d.b1), static_cast<unsigned long>(k - 1 - d.r1)) *
              rpow(h_value(d.b1 + 1), static_cast<unsigned long>(d.r1)) *
              rpow(h_value(d.b3), static_cast<unsigned long>(k + 1 - d.r3)) *
              rpow(h_value(d.b3 + 1), static_cast<unsigned long>(d.r3));
    prof.r_f2 = num / den;
  }
  check(prof.r_f == prof.r_f1 * prof.r_f2, n, k, "R_F factorization mismatch");
  check(prof.r_e >= 1, n, k, "R_E < 1");

  if (n >= k * k - 2 * k + 2) {
    prof.case_label = 1;
    check(prof.r_e > 1, n, k, "case 1 needs R_E > 1");
    return prof;
  }

  const long b = d.b3;
  const long d1 = d.b1 - b;
  const long d2 = d.b2 - b;
  if (d1 == 0 && d2 == 0) {
    prof.case_label = 2;
    check(2 * d.r2 == d.r1 + d.r3, n, k, "case 2 remainder relation");
    check(prof.r_e == 1, n, k, "case 2 needs R_E = 1");
    check(prof.r_f2 == 1, n, k, "case 2 needs R_F2 = 1");
    check(prof.r_f >= 1, n, k, "case 2 needs R_F >= 1");
  } else if (d1 == 1 && d2 == 0 && d.r1 > 0) {
    prof.case_label = 3;
    check(prof.r_e == rpow(bump_ratio(b), static_cast<unsigned long>(d.r1)), n, k,
          "case 3 closed form mismatch");
    check(prof.r_e > 1, n, k, "case 3 needs R_E > 1");
  } else if (d1 == 1 && d2 == 0) {  // r1 == 0
    prof.case_label = 4;
    check(prof.r_e == 1, n, k, "case 4 needs R_E = 1");
    check(prof.r_f2 == 1, n, k, "case 4 needs R_F2 = 1");
    const Rat rf1_closed =
        make_ratio(facts.at(k - 1) * facts.at(k - 2 * b - 1) * facts.at(2 * b + 2),
                   facts.at(k - b - 1) * facts.at(k - b - 1) * facts.at(b + 1) * facts.at(b + 1));
    check(prof.r_f1 == rf1_closed, n, k, "case 4 closed form mismatch");
    check(prof.r_f >= 1, n, k, "case 4 needs R_F >= 1");
  } else if (d1 == 1 && d2 == 1) {
    prof.case_label = 5;
    check(prof.r_e == rpow(bump_ratio(b), static_cast<unsigned long>(k + 1 - d.r3)), n, k,
          "case 5 closed form mismatch");
    check(prof.r_e > 1, n, k, "case 5 needs R_E > 1");
  } else if (d1 == 2 && d2 == 1) {
    prof.case_label = 6;
    const Rat closed = rpow(bump_ratio(b), static_cast<unsigned long>(k + 1 - d.r3)) *
                       rpow(bump_ratio(b + 1), static_cast<unsigned long>(d.r1));
    check(prof.r_e == closed, n, k, "case 6 closed form mismatch");
    check(prof.r_e > 1, n, k, "case 6 needs R_E > 1");
  } else {
    check(false, n, k, "quotient pattern (" + std::to_string(d.b1) + "," + std::to_string(d.b2) +
                           "," + std::to_string(d.b3) + ") matches no case");
  }
  return prof;
}

ExtremalProfile classify_case(long n, long k) {
  return classify_case(n, k, FactorialTable(n + 2));
}

namespace {

// Shared drain for the scans below: counts violations and either forwards to
// the sink or collects into the report.
std::function<void(std::vector<ScanRow>&&)> report_drain(ScanReport& report,
                                                         const RowSink& sink) {
  return [&report, &sink](std::vector<ScanRow>&& batch) {
    for (auto& row : batch) {
      if (row.verdict == "violation") ++report.violations;
      if (sink)
        sink(row);
      else
        report.rows.push_back(std::move(row));
    }
  };
}

}  // namespace

ScanReport check_e_logconcavity(long nmax, int jobs, const RowSink& sink) {
  require(nmax >= 3, "check_e_logconcavity: nmax must be >= 3");
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport report;
  report.kind = "e_logconcavity";
  parallel_rows_stream(3, nmax, jobs, [](long n) {
    std::vector<ScanRow> rows;
    Int prev = e_max(n, 1);
    Int cur = e_max(n, 2);
    for (long k = 2; k <= n - 1; ++k) {
      Int next = e_max(n, k + 1);
      const Int lhs = cur * cur;
      const Int rhs = prev * next;
      if (lhs <= rhs) {
        ScanRow row;
        row.scan = "e_logconcavity";
        row.n = n;
        row.k = k;
        row.lhs = lhs;
        row.rhs = rhs;
        row.verdict = lhs == rhs ? "equal" : "violation";
        rows.push_back(std::move(row));
      }
      prev = std::move(cur);
      cur = std::move(next);
    }
    return rows;
  }, report_drain(report, sink));
  for (long n = 3; n <= nmax; ++n) report.checked += n - 2;
  report.seconds = elapsed_since(t0);
  return report;
}

ScanReport classify_scan(long nmax, int jobs, const RowSink& sink) {
  require(nmax >= 3, "classify_scan: nmax must be >= 3");
  const auto t0 = std::chrono::steady_clock::now();
  const FactorialTable facts(nmax + 2);
  ScanReport report;
  report.kind = "cases";
  parallel_rows_stream(3, nmax, jobs, [&facts](long n) {
    std::vector<ScanRow> rows;
    for (long k = 2; k <= n - 1; ++k) {
      ScanRow row;
      row.scan = "cases";
      row.n = n;
      row.k = k;
      try {
        const ExtremalProfile prof = classify_case(n, k, facts);
        row.lhs = prof.r_e;
        row.rhs = prof.r_f;
        row.verdict = "case" + std::to_string(prof.case_label);
      } catch (const std::logic_error&) {
        row.verdict = "violation";
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }, report_drain(report, sink));
  for (long n = 3; n <= nmax; ++n) report.checked += n - 2;
  report.seconds = elapsed_since(t0);
  return report;
}

ScanReport lemma_checks(long nmax, long kmax) {
  require(nmax >= 2 && kmax >= 2, "lemma_checks: nmax, kmax must be >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport report;
  report.kind = "lemmas";

  auto add_violation = [&report](const std::string& scan, long n, long k, Int lhs, Int rhs) {
    ScanRow row;
    row.scan = scan;
    row.n = n;
    row.k = k;
    row.lhs = Rat(std::move(lhs));
    row.rhs = Rat(std::move(rhs));
    row.verdict = "violation";
    report.rows.push_back(std::move(row));
    ++report.violations;
  };

  // lemma1/lemma2: monotonicity of E(n,k)/E(n,k-1) in n, cross-multiplied to
  // E(n,k) E(n+1,k-1) <= E(n+1,k) E(n,k-1); strict once n >= k^2 - 2k + 1.
  for (long k = 2; k <= kmax; ++k) {
    for (long n = k; n <= nmax; ++n) {
      const Int lhs = e_max(n, k) * e_max(n + 1, k - 1);
      const Int rhs = e_max(n + 1, k) * e_max(n, k - 1);
      ++report.checked;
      if (lhs > rhs) add_violation("lemma1", n, k, lhs, rhs);
      if (n >= k * k - 2 * k + 1) {
        ++report.checked;
        if (lhs >= rhs) add_violation("lemma2", n, k, lhs, rhs);
      }
    }
  }

  // lemma3: quotient drops at most 1 when n <= k^2 - k.
  for (long k = 2; k <= kmax; ++k) {
    for (long n = k + 1; n <= std::min(nmax, k * k - k); ++n) {
      const DivisionTriple d = divisions(n, k);
      ++report.checked;
      if (d.b1 - d.b2 > 1 || d.b2 - d.b3 > 1)
        add_violation("lemma3", n, k, Int(d.b1 - d.b2), Int(d.b2 - d.b3));
    }
  }

  // lemma4: over all splits of every sum S <= 60.
  {
    const FactorialTable facts(60);
    for (long s = 0; s <= 60; ++s) {
      for (long a = 0; a <= s; ++a) {
        for (long c = 0; c <= s; ++c) {
          const long bb = s - a, dd = s - c;
          if (std::min(a, bb) < std::min(c, dd)) continue;
          ++report.checked;
          const Int lhs = facts.at(a) * facts.at(bb);
          const Int rhs = facts.at(c) * facts.at(dd);
          if (lhs > rhs) add_violation("lemma4", a, c, lhs, rhs);
        }
      }
    }
  }

  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return std::tie(a.scan, a.n, a.k) < std::tie(b.scan, b.n, b.k);
  });
  report.seconds = elapsed_since(t0);
  return report;
}

Int turan_clique_count(long n, long k) {
  require(k >= 1 && k <= n, "turan_clique_count: need 1 <= k <= n");
  // Distribute the n vertices round-robin over k parts; a k-clique picks
  // exactly one vertex from each part.
  std::vector<long> part_sizes(static_cast<size_t>(k), 0);
  for (long v = 0; v < n; ++v) ++part_sizes[static_cast<size_t>(v % k)];
  Int count = 1;
  for (long size : part_sizes) count *= size;
  return count;
}

std::vector<unsigned> multipartite_graph(const std::vector<long>& part_sizes) {
  long n = 0;
  for (long s : part_sizes) n += s;
  if (n > 31) throw std::invalid_argument("multipartite_graph: too many vertices");
  std::vector<unsigned> adjacency(static_cast<size_t>(n), 0);
  long start = 0;
  const unsigned all = n == 31 ? 0x7fffffffu : (1u << n) - 1u;
  for (long s : part_sizes) {
    const unsigned part_mask = ((1u << s) - 1u) << start;
    for (long v = start; v < start + s; ++v)
      adjacency[static_cast<size_t>(v)] = all & ~part_mask;
    start += s;
  }
  return adjacency;
}

Int clique_count(const std::vector<unsigned>& adjacency, int k) {
  const int n = static_cast<int>(adjacency.size());
  if (k < 0 || k > n) return 0;
  if (k == 0) return 1;
  // Backtracking over candidate sets; candidates always to the right of the
  // last chosen vertex.
  Int total = 0;
  struct Frame {
    unsigned candidates;
    int depth;
  };
  std::vector<std::pair<unsigned, int>> work{{(n == 31 ? 0x7fffffffu : (1u << n) - 1u), 0}};
  // Recursive lambda kept iterative to avoid deep stacks on dense graphs.
  while (!work.empty()) {
    auto [cands, depth] = work.back();
    work.pop_back();
    if (depth == k) {
      total += 1;
      continue;
    }
    unsigned rest = cands;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      // only vertices above v remain candidates: fixes an ordering
      const unsigned above = ~((1u << (v + 1)) - 1u);
      work.push_back({cands & adjacency[static_cast<size_t>(v)] & above, depth + 1});
    }
  }
  return total;
}

std::vector<Int> ex_bruteforce_row(int n) {
  require(n >= 1 && n <= 7, "ex_bruteforce: n must be in 1..7");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(pairs));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);

  std::vector<Int> best(static_cast<size_t>(n) + 1, Int(0));
  const unsigned nsub = 1u << n;
  std::vector<char> is_clique(nsub);
  std::vector<int> counts(static_cast<size_t>(n) + 1);

  for (unsigned long g = 0; g < (1ul << pairs); ++g) {
    unsigned adj[7] = {0, 0, 0, 0, 0, 0, 0};
    for (int e = 0; e < pairs; ++e) {
      if (g >> e & 1) {
        adj[edges[static_cast<size_t>(e)].first] |= 1u << edges[static_cast<size_t>(e)].second;
        adj[edges[static_cast<size_t>(e)].second] |= 1u << edges[static_cast<size_t>(e)].first;
      }
    }
    std::fill(counts.begin(), counts.end(), 0);
    is_clique[0] = 1;
    int omega = 0;
    for (unsigned s = 1; s < nsub; ++s) {
      const int v = std::countr_zero(s);
      const unsigned rest = s & (s - 1);
      const bool clq = is_clique[rest] && (adj[v] & rest) == rest;
      is_clique[s] = clq;
      if (clq) {
        const int size = std::popcount(s);
        ++counts[static_cast<size_t>(size)];
        omega = std::max(omega, size);
      }
    }
    // A graph qualifies for ex(n,k) iff it has no (k+1)-clique, i.e. k >= omega.
    for (int k = omega; k <= n; ++k)
      if (counts[static_cast<size_t>(k)] > best[static_cast<size_t>(k)])
        best[static_cast<size_t>(k)] = counts[static_cast<size_t>(k)];
  }
  return best;
}

Int ex_bruteforce(int n, int k) {
  require(n >= 1 && n <= 7, "ex_bruteforce: n must be in 1..7");
  require(k >= 1 && k <= n, "ex_bruteforce: need 1 <= k <= n");
  return ex_bruteforce_row(n)[static_cast<size_t>(k)];
}

}  // namespace commperm
