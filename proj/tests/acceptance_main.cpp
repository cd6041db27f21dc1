// Acceptance gate: runs every criterion and prints one pass/fail line each.
#include <iostream>

#include "oporbits/verify.hpp"

int main() {
    const bool ok = oporbits::verify::run_acceptance(std::cout, true, true);
    return ok ? 0 : 1;
}
