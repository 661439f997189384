#include <string>
#include <vector>

#include "ekr/cli.hpp"

int main(int argc, char **argv) {
    return ekr::cli::dispatch(std::vector<std::string>(argv, argv + argc));
}
