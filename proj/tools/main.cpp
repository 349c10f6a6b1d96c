#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto r = tightcat::cli::run(args);
    std::cout << r.text;
    if (r.status != 0 && r.body.contains("error"))
        std::cerr << "tightcat: " << r.body["error"].get<std::string>() << ": "
                  << r.body.value("message", std::string()) << "\n";
    return r.status;
}
