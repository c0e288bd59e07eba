// Regenerates the shipped fixture documents and their digest manifest.

#include <iostream>

#include "hopf/io.hpp"

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "data/fixtures";
    try {
        hopf::io::write_fixtures(dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << "fixtures written to " << dir << "\n";
    return 0;
}
