#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace cliques {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

/// Outcome of a verifier. The verdict holds exactly when no failure was recorded.
struct Report {
  std::string name;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  [[nodiscard]] bool verdict() const noexcept { return failures.empty(); }

  void fail(std::string inputs, std::string expected, std::string got) {
    failures.push_back({std::move(inputs), std::move(expected), std::move(got)});
  }

  /// Counts one check; callers build failure text only when this returns false.
  bool check(bool ok) noexcept {
    ++checked;
    return ok;
  }

  void expect(bool ok, const std::string& inputs, const std::string& expected, const std::string& got) {
    ++checked;
    if (!ok) fail(inputs, expected, got);
  }

  void note(std::string text) { notes.push_back(std::move(text)); }

  /// Absorb another report; failures stay sorted so the merge order is irrelevant.
  void merge(const Report& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    std::sort(failures.begin(), failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

inline std::string format_report(const Report& r, std::size_t max_failures = 10) {
  std::ostringstream os;
  os << "[" << r.name << "] checked=" << r.checked << " failures=" << r.failures.size()
     << " verdict=" << (r.verdict() ? "true" : "false") << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
    const auto& f = r.failures[i];
    os << "  failure: " << f.inputs << "\n    expected: " << f.expected << "\n    got: " << f.got << "\n";
  }
  if (r.failures.size() > max_failures) os << "  ... " << (r.failures.size() - max_failures) << " more failures\n";
  return os.str();
}

/// Worker count from CLIQUES_WORKERS, defaulting to 1.
inline unsigned default_workers() {
  if (const char* env = std::getenv("CLIQUES_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Runs `body(index, report)` for every index in [0, count), split into contiguous
/// chunks across at most `workers` threads. Per-worker reports are merged with
/// failures sorted, so the result does not depend on the worker count.
template <typename Body>
Report partitioned(std::string name, std::size_t count, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<Report> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      for (std::size_t i = begin; i < end; ++i) body(i, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Report out;
  out.name = std::move(name);
  for (auto& r : partial) out.merge(r);
  return out;
}

}  // namespace cliques
