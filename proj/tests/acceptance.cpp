// End-to-end acceptance run: one line per criterion, nonzero exit when any
// criterion fails. Criteria with a runtime budget fail when they exceed it.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <thread>

#include "cayley/cli.hpp"

namespace {

bool run_criterion(int number, const cayley::CheckResult& result,
                   double seconds, std::optional<double> budget) {
    bool pass = result.pass && (!budget || seconds < *budget);
    std::printf("CRITERION %d: %s - %s (%s) [%.2fs%s]\n", number,
                pass ? "PASS" : "FAIL", result.name.c_str(),
                result.detail.c_str(), seconds,
                budget && seconds >= *budget ? ", over budget" : "");
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const std::uint64_t seed = 20240817;
    const int jobs =
        std::max(1u, std::thread::hardware_concurrency());

    struct Item {
        std::function<cayley::CheckResult()> check;
        std::optional<double> budget;  // seconds
    };
    const std::vector<Item> items = {
        {[] { return cayley::check_table(); }, 10.0},
        {[] { return cayley::check_collection(); }, 60.0},
        {[] { return cayley::check_mutations(); }, std::nullopt},
        {[] { return cayley::check_residual(); }, std::nullopt},
        {[] { return cayley::check_euler_matrix(); }, 5.0},
        {[] { return cayley::check_chi_sequences(); }, std::nullopt},
        {[] { return cayley::check_structure_constants(); }, 5.0},
        {[&] { return cayley::check_rank_strata(seed, jobs); }, std::nullopt},
        {[&] { return cayley::check_quadrics(seed, jobs); }, std::nullopt},
    };

    int failures = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto start = clock::now();
        auto result = items[i].check();
        double seconds =
            std::chrono::duration<double>(clock::now() - start).count();
        if (!run_criterion(static_cast<int>(i) + 1, result, seconds,
                           items[i].budget))
            ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
