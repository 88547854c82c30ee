#include <iostream>

#include "screenlab/acceptance.hpp"

int main(int argc, char** argv) {
    screenlab::RunConfig cfg;
    if (argc > 1) cfg = screenlab::load_config(argv[1]);
    auto results = screenlab::run_acceptance(cfg, &std::cerr);
    int failed = 0;
    for (const auto& r : results) {
        screenlab::print_criterion(std::cout, r);
        failed += r.pass ? 0 : 1;
    }
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
