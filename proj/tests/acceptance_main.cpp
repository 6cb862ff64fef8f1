#include <iostream>

#include "phl/acceptance.hpp"

int main() { return phl::print_acceptance(phl::run_acceptance(), std::cout); }
