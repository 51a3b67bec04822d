#include "agqss/analyzer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#include "agqss/errors.hpp"

namespace agqss::analyzer {

namespace {

std::string subset_str(const std::vector<int>& indices) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << indices[i];
    }
    out << '}';
    return out.str();
}

/// Runs fn(0), ..., fn(count - 1) on up to `threads` workers. When calls
/// throw, the exception from the lowest index is the one rethrown, so the
/// surfaced failure does not depend on scheduling; indices above a known
/// failure may be skipped since their results would be discarded anyway.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    const std::size_t workers = std::min(static_cast<std::size_t>(threads), count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{count};
    std::mutex failure_mutex;
    std::map<std::size_t, std::exception_ptr> failures;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                if (i > first_failure.load()) {
                    continue;
                }
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    failures.emplace(i, std::current_exception());
                    std::size_t seen = first_failure.load();
                    while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
                    }
                }
            }
        });
    }
    for (auto& worker : pool) {
        worker.join();
    }
    if (!failures.empty()) {
        std::rethrow_exception(failures.begin()->second);
    }
}

qsim::AccessClass class_of(bool forbidden, bool qualified) {
    if (forbidden) {
        return qsim::AccessClass::Forbidden;
    }
    return qualified ? qsim::AccessClass::Qualified : qsim::AccessClass::Intermediate;
}

void check_sweep_width(int n) {
    if (n > 12) {
        throw CapError("subset sweep needs 2^" + std::to_string(n) +
                       " classifications; n is limited to 12");
    }
}

}  // namespace

std::vector<std::vector<int>> subsets_in_order(int n) {
    if (n < 0 || n > 20) {
        throw DomainError("subset order is defined for 0 <= n <= 20, got " + std::to_string(n));
    }
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t{1} << n);
    out.emplace_back();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> combo(static_cast<std::size_t>(k));
        std::iota(combo.begin(), combo.end(), 0);
        for (;;) {
            out.push_back(combo);
            int i = k - 1;
            while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return out;
}

int thread_count_from_env() {
    const char* raw = std::getenv("AGQSS_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 1;
    }
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1) {
        return 1;
    }
    return static_cast<int>(std::min(value, 1024L));
}

AccessReport classify_all(const scheme::CodePair& pair, qsim::Mode mode, const qsim::Caps& caps,
                          int threads) {
    const int n = pair.n();
    check_sweep_width(n);
    AccessReport report;
    report.mode = mode;
    report.thresholds = scheme::thresholds(pair);

    const std::vector<std::vector<int>> subsets = subsets_in_order(n);
    report.subsets.resize(subsets.size());
    parallel_for(subsets.size(), threads, [&](std::size_t idx) {
        const std::vector<int>& j_set = subsets[idx];
        try {
            const qsim::Classification result = qsim::classify(pair, j_set, mode, caps);
            SubsetRecord& record = report.subsets[idx];
            record.j_set = j_set;
            record.cls = result.cls;
            if (result.forbidden.fast.has_value() && result.qualified.fast.has_value()) {
                record.fast = class_of(*result.forbidden.fast, *result.qualified.fast);
            }
            if (result.forbidden.oracle.has_value() && result.qualified.oracle.has_value()) {
                record.oracle = class_of(*result.forbidden.oracle, *result.qualified.oracle);
            }
        } catch (const CapError& err) {
            throw CapError("J=" + subset_str(j_set) + ": " + err.what());
        }
    });

    report.by_size.assign(static_cast<std::size_t>(n) + 1, SizeTally{});
    for (int size = 0; size <= n; ++size) {
        report.by_size[static_cast<std::size_t>(size)].size = size;
    }
    const scheme::Thresholds& th = report.thresholds;
    for (const SubsetRecord& record : report.subsets) {
        const int size = static_cast<int>(record.j_set.size());
        SizeTally& tally = report.by_size[static_cast<std::size_t>(size)];
        switch (record.cls) {
            case qsim::AccessClass::Forbidden:
                ++tally.forbidden;
                break;
            case qsim::AccessClass::Intermediate:
                ++tally.intermediate;
                break;
            case qsim::AccessClass::Qualified:
                ++tally.qualified;
                break;
        }
        if (!th.forbidden_vacuous && size <= th.forbidden &&
            record.cls != qsim::AccessClass::Forbidden) {
            report.forbidden_threshold_sound = false;
            report.forbidden_counterexamples.push_back(record.j_set);
        }
        if (!th.qualified_vacuous && size >= th.qualified &&
            record.cls != qsim::AccessClass::Qualified) {
            report.qualified_threshold_sound = false;
            report.qualified_counterexamples.push_back(record.j_set);
        }
    }
    return report;
}

StrongReport strong_security_map(const scheme::CodePair& pair, qsim::Mode mode,
                                 const qsim::Caps& caps, int threads) {
    const int n = pair.n();
    const int secret_len = pair.secret_len();
    check_sweep_width(n);
    StrongReport report;
    report.mode = mode;
    report.thresholds = scheme::thresholds(pair);

    const std::vector<std::vector<int>> i_sets = subsets_in_order(secret_len);
    const std::vector<std::vector<int>> j_sets = subsets_in_order(n);
    report.pairs.resize(i_sets.size() * j_sets.size());
    parallel_for(report.pairs.size(), threads, [&](std::size_t idx) {
        const std::vector<int>& i_set = i_sets[idx / j_sets.size()];
        const std::vector<int>& j_set = j_sets[idx % j_sets.size()];
        try {
            const qsim::CheckOutcome outcome =
                qsim::strong_security_exact(pair, i_set, j_set, mode, caps);
            StrongRecord& record = report.pairs[idx];
            record.i_set = i_set;
            record.j_set = j_set;
            record.secure = outcome.value;
            record.fast = outcome.fast;
            record.oracle = outcome.oracle;
            const int revealed = secret_len - static_cast<int>(i_set.size());
            record.within_bound = static_cast<int>(j_set.size()) <=
                                  scheme::strong_security_bound(report.thresholds, revealed);
        } catch (const CapError& err) {
            throw CapError("I=" + subset_str(i_set) + " J=" + subset_str(j_set) + ": " +
                           err.what());
        }
    });

    for (const StrongRecord& record : report.pairs) {
        if (record.within_bound && !record.secure) {
            report.bound_sound = false;
            report.counterexamples.emplace_back(record.i_set, record.j_set);
        }
    }
    return report;
}

}  // namespace agqss::analyzer
