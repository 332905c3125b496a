#include "acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    bool all_pass = true;
    std::size_t passed = 0;
    const auto results = aperiodic::acceptance::run(ids, [&](const aperiodic::acceptance::CriterionResult& r) {
        std::cout << aperiodic::acceptance::format(r) << std::endl;
        all_pass = all_pass && r.pass;
        if (r.pass) ++passed;
    });
    std::cout << passed << "/" << results.size() << " acceptance criteria passed" << std::endl;
    return all_pass ? 0 : 1;
}
