#include "cli.hpp"

int main(int argc, char** argv) {
    return dirichlet::cli::run_cli(argc, argv);
}
