#include "skewcat/fixture_set.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    for (const auto& [name, doc] : skewcat::fixture_documents())
        skewcat::write_json_file((dir / name).string(), doc);
    for (const auto& [name, text] : skewcat::fixture_raw_files()) {
        std::ofstream out(dir / name);
        out << text;
    }
    std::cout << "wrote fixtures to " << dir << "\n";
    return 0;
}
