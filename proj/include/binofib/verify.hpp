/// @file verify.hpp
/// @brief Exhaustive grid verification of the identity catalog.
///
/// run_grid() enumerates the Cartesian grid for each requested identity,
/// restricted to the parameter slots that identity reads (other slots stay
/// at their IdentityParams defaults), evaluates every point with eval_pair()
/// and returns the records in canonical order: catalog order of the id, then
/// (n, j, r, s, p, m, x, z) lexicographically. The order and content do not
/// depend on the number of worker threads.
#ifndef BINOFIB_VERIFY_HPP
#define BINOFIB_VERIFY_HPP

#include <binofib/closed_forms.hpp>
#include <binofib/numbers.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace binofib {

/// Inclusive integer interval.
struct IndexRange {
  Index lo = 0;
  Index hi = 0;

  bool empty() const { return hi < lo; }
  std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct GridSpec {
  IndexRange n{0, 12};
  IndexRange j{-4, 4};
  IndexRange r{-4, 4};
  IndexRange s{-4, 4};
  IndexRange p{-4, 4};
  IndexRange m{0, 3};      ///< EVEN_* / ALT_EVEN_*
  IndexRange odd_m{0, 2};  ///< ODD_* / ALT_ODD_*
  IndexRange x{-2, 2};     ///< integer weights for F1, L1, T1_*
  IndexRange z{-2, 2};
  std::vector<IdentityId> ids = all_ids();
  /// When false, points outside an identity's stated domain are still
  /// evaluated and flagged out_of_contract instead of being skipped.
  bool skip_inapplicable = true;

  static std::vector<IdentityId> all_ids() {
    std::vector<IdentityId> out;
    for (const auto& d : catalog()) {
      out.push_back(d.id);
    }
    return out;
  }

  /// Throws std::invalid_argument when a range is empty or n/m go negative.
  void validate() const {
    const std::pair<const char*, const IndexRange*> ranges[] = {
        {"n", &n}, {"j", &j}, {"r", &r}, {"s", &s}, {"p", &p},
        {"m", &m}, {"odd_m", &odd_m}, {"x", &x}, {"z", &z}};
    for (const auto& [name, range] : ranges) {
      if (range->empty()) {
        throw std::invalid_argument(std::string("empty range for ") + name);
      }
    }
    if (n.lo < 0) {
      throw std::invalid_argument("n range must be non-negative");
    }
    if (m.lo < 0 || odd_m.lo < 0) {
      throw std::invalid_argument("m range must be non-negative");
    }
  }
};

struct VerificationRecord {
  IdentityId id{};
  IdentityParams params;
  ExactRational lhs;
  ExactRational rhs;
  bool match = false;
  std::optional<std::string> skipped_reason;
  bool out_of_contract = false;

  bool skipped() const { return skipped_reason.has_value(); }
};

struct IdentityTotals {
  std::size_t checked = 0;
  std::size_t matched = 0;
  std::size_t skipped = 0;
  std::size_t out_of_contract = 0;
};

struct Report {
  std::vector<VerificationRecord> records;
  /// Keyed by catalog position so iteration follows catalog order.
  std::map<std::size_t, IdentityTotals> totals;
  /// Positions in records of in-contract mismatches.
  std::vector<std::size_t> failures;

  std::size_t checked() const {
    std::size_t c = 0;
    for (const auto& [k, t] : totals) {
      c += t.checked;
    }
    return c;
  }
  bool passed() const { return failures.empty(); }
};

namespace detail {

template <typename Fn>
void for_each_in(const IndexRange& range, bool used, Index fallback, Fn&& fn) {
  if (!used) {
    fn(fallback);
    return;
  }
  for (Index v = range.lo; v <= range.hi; ++v) {
    fn(v);
  }
}

inline bool is_odd_family(IdentityId id) {
  return id == IdentityId::ODD_F || id == IdentityId::ODD_L || id == IdentityId::ALT_ODD_F ||
         id == IdentityId::ALT_ODD_L;
}

inline std::vector<IdentityId> canonical_ids(std::vector<IdentityId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

/// All (id, params) points of the grid in canonical order.
inline std::vector<std::pair<IdentityId, IdentityParams>> enumerate_grid(const GridSpec& spec) {
  std::vector<std::pair<IdentityId, IdentityParams>> points;
  const IdentityParams defaults;
  for (const IdentityId id : canonical_ids(spec.ids)) {
    const unsigned slots = descriptor(id).slots;
    const IndexRange& m_range = is_odd_family(id) ? spec.odd_m : spec.m;
    IdentityParams q;
    for_each_in(spec.n, (slots & kSlotN) != 0U, defaults.n, [&](Index n) {
      q.n = n;
      for_each_in(spec.j, (slots & kSlotJ) != 0U, defaults.j, [&](Index j) {
        q.j = j;
        for_each_in(spec.r, (slots & kSlotR) != 0U, defaults.r, [&](Index r) {
          q.r = r;
          for_each_in(spec.s, (slots & kSlotS) != 0U, defaults.s, [&](Index s) {
            q.s = s;
            for_each_in(spec.p, (slots & kSlotP) != 0U, defaults.p, [&](Index p) {
              q.p = p;
              for_each_in(m_range, (slots & kSlotM) != 0U, defaults.m, [&](Index m) {
                q.m = m;
                for_each_in(spec.x, (slots & kSlotX) != 0U, 1, [&](Index x) {
                  q.x = x;
                  for_each_in(spec.z, (slots & kSlotZ) != 0U, 1, [&](Index z) {
                    q.z = z;
                    points.emplace_back(id, q);
                  });
                });
              });
            });
          });
        });
      });
    });
  }
  return points;
}

inline VerificationRecord evaluate_point(IdentityId id, const IdentityParams& q, bool skip_inapplicable) {
  VerificationRecord rec;
  rec.id = id;
  rec.params = q;
  const Applicability ok = applicable(id, q);
  if (!ok && skip_inapplicable) {
    rec.skipped_reason = ok.reason;
    return rec;
  }
  rec.out_of_contract = !ok;
  PairResult res = eval_pair_unchecked(id, q);
  rec.lhs = std::move(res.lhs);
  rec.rhs = std::move(res.rhs);
  rec.match = res.match;
  return rec;
}

}  // namespace detail

inline Report run_grid(const GridSpec& spec, unsigned parallelism = 1) {
  spec.validate();
  if (parallelism == 0) {
    throw std::invalid_argument("parallelism must be positive");
  }
  const auto points = detail::enumerate_grid(spec);

  Report report;
  report.records.resize(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  constexpr std::size_t kChunk = 64;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= points.size()) {
          return;
        }
        const std::size_t end = std::min(points.size(), begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) {
          report.records[i] = detail::evaluate_point(points[i].first, points[i].second, spec.skip_inapplicable);
        }
      }
    } catch (...) {
      const std::lock_guard lock(error_mutex);
      if (!error) {
        error = std::current_exception();
      }
      next = points.size();
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(parallelism, static_cast<unsigned>(points.size() / kChunk + 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }

  for (const IdentityId id : detail::canonical_ids(spec.ids)) {
    report.totals[static_cast<std::size_t>(id)];
  }
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    auto& t = report.totals[static_cast<std::size_t>(rec.id)];
    if (rec.skipped()) {
      ++t.skipped;
    } else if (rec.out_of_contract) {
      ++t.out_of_contract;
    } else {
      ++t.checked;
      if (rec.match) {
        ++t.matched;
      } else {
        report.failures.push_back(i);
      }
    }
  }
  return report;
}

/// "n=2 s=1" over the slots the identity reads.
inline std::string format_params(IdentityId id, const IdentityParams& q) {
  const unsigned slots = descriptor(id).slots;
  std::ostringstream os;
  const char* sep = "";
  auto put = [&](unsigned slot, const char* name, const auto& value) {
    if ((slots & slot) != 0U) {
      os << sep << name << '=' << value;
      sep = " ";
    }
  };
  put(kSlotN, "n", q.n);
  put(kSlotJ, "j", q.j);
  put(kSlotR, "r", q.r);
  put(kSlotS, "s", q.s);
  put(kSlotP, "p", q.p);
  put(kSlotM, "m", q.m);
  put(kSlotX, "x", q.x);
  put(kSlotZ, "z", q.z);
  return os.str();
}

/// Per-identity lines, any failures, and a final PASS/FAIL verdict line.
inline std::string summarize(const Report& report) {
  std::ostringstream os;
  for (const auto& [pos, t] : report.totals) {
    const auto id = static_cast<IdentityId>(pos);
    os << identity_name(id);
    for (std::size_t pad = identity_name(id).size(); pad < 12; ++pad) {
      os << ' ';
    }
    os << "checked=" << t.checked << " matched=" << t.matched << " skipped=" << t.skipped;
    if (t.out_of_contract != 0) {
      os << " out_of_contract=" << t.out_of_contract;
    }
    os << '\n';
  }
  for (const std::size_t i : report.failures) {
    const auto& rec = report.records[i];
    os << "FAIL " << identity_name(rec.id) << ' ' << format_params(rec.id, rec.params) << " lhs=" << rec.lhs
       << " rhs=" << rec.rhs << '\n';
  }
  const std::size_t checked = report.checked();
  if (report.passed()) {
    os << "PASS (" << checked << " checks)\n";
  } else {
    os << "FAIL (" << report.failures.size() << " of " << checked << " checks failed)\n";
  }
  return os.str();
}

}  // namespace binofib

#endif  // BINOFIB_VERIFY_HPP
