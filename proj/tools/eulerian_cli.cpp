#include <string>
#include <vector>

#include "eulerian/cli.hpp"

int main(int argc, char** argv) {
    return eulerian::cli::run(std::vector<std::string>(argv, argv + argc));
}
