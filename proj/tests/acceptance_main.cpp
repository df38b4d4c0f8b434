#include <iostream>
#include <string>

#include "sqcomp/verify/acceptance.hpp"

// Usage: acceptance [threads]
int main(int argc, char** argv) {
    sqcomp::acceptance::Options opts;
    if (argc > 1)
        opts.threads = static_cast<unsigned>(std::stoul(argv[1]));
    return sqcomp::acceptance::run_all(opts, std::cout) ? 0 : 1;
}
