#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace boreldegen {

struct CheckItem {
    std::string id;
    bool pass = false;
    bool warn_only = false; // failures reported as WARNING, never fatal
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckItem> items;

    bool ok() const {
        for (auto& it : items)
            if (!it.pass && !it.warn_only) return false;
        return true;
    }
    void add(const SuiteReport& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
};

// parallelism bound: BOREL_DEGEN_WORKERS, default hardware concurrency
int worker_count();
// Runs body(i) for i = 0..n-1 on up to worker_count() threads.
void parallel_for(int n, const std::function<void(int)>& body);

SuiteReport reproduce_counts();                          // catalogue sizes 7/31/112/989
SuiteReport reproduce_filter_13();                       // (1,3) filter partition
SuiteReport reproduce_degenerations_22(uint64_t seed);   // six (2,2) initial ideals
SuiteReport reproduce_witnesses_31();                    // three (3,1) curve ideals
SuiteReport reproduce_suite_33();                        // (3,3) filter + 16 witnesses
SuiteReport reproduce_predictions(bool smoke, uint64_t seed); // catalogue sweep, l = q
SuiteReport reproduce_properties(uint64_t seed);         // randomized invariants
SuiteReport reproduce_discrepancy();                     // (3,1) survivor count report
SuiteReport reproduce_all(uint64_t seed);

} // namespace boreldegen
