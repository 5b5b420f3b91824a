// Regenerates the shipped standard catalog: prints data/std.json to stdout.
#include <iostream>

#include "cobord/catalog.hpp"

int main() {
    std::cout << cobord::Catalog::standard_json().dump(2) << "\n";
    return 0;
}
