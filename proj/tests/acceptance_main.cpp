#include <iostream>

#include "oharm/selftest.hpp"

int main() {
    return oharm::run_acceptance(std::cout) ? 0 : 1;
}
