// Serial reference against the OpenMP kernels: fan enumeration and state
// geometry, best of several runs, with a check that both agree.
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "algdesign/fan.hpp"

using namespace algdesign;

namespace {

double best_of(int runs, const std::function<void()>& f) {
    double best = 1e300;
    for (int i = 0; i < runs; ++i) {
        auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void row(const std::string& design, const std::string& kernel, double serial, double parallel, bool agree) {
    std::cout << std::left << std::setw(14) << design << std::setw(16) << kernel << std::right << std::fixed
              << std::setprecision(3) << std::setw(11) << serial << std::setw(11) << parallel << std::setw(9)
              << std::setprecision(2) << serial / parallel << "x" << (agree ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int runs = argc > 1 ? std::atoi(argv[1]) : 3;
    std::vector<std::string> designs{"l1.csv", "l2.csv", "pb8.csv", "frac262.csv", "ccd14.csv"};
    for (int i = 2; i < argc; ++i) designs.emplace_back(argv[i]);

    std::cout << "OpenMP threads: " << omp_get_max_threads() << ", best of " << runs << " runs (seconds)\n\n";
    std::cout << std::left << std::setw(14) << "design" << std::setw(16) << "kernel" << std::right << std::setw(11)
              << "serial" << std::setw(11) << "parallel" << std::setw(10) << "speedup" << "\n";
    bool all_agree = true;
    for (const auto& name : designs) {
        Design d = read_design_csv(name.find('/') == std::string::npos ? std::string(ALGDESIGN_DATA_DIR) + "/" + name
                                                                        : name);
        const auto limits = FanLimits::unlimited();
        FanReport serial, parallel;
        double ts = best_of(runs, [&] { serial = enumerate_fan(d, limits, Execution::Serial); });
        double tp = best_of(runs, [&] { parallel = enumerate_fan(d, limits, Execution::Parallel); });
        bool same = serial.models.size() == parallel.models.size();
        for (std::size_t i = 0; same && i < serial.models.size(); ++i)
            same = serial.models[i].model == parallel.models[i].model;
        row(name, "enumerate_fan", ts, tp, same);
        all_agree = all_agree && same;

        StateGeometry gs, gp;
        ts = best_of(runs, [&] { gs = state_geometry(serial, Execution::Serial); });
        tp = best_of(runs, [&] { gp = state_geometry(serial, Execution::Parallel); });
        same = gs.vertices == gp.vertices;
        row(name, "state_geometry", ts, tp, same);
        all_agree = all_agree && same;
    }
    return all_agree ? 0 : 1;
}
