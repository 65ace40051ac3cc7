#include "funceq/cli/commands.hpp"

int main(int argc, char** argv) {
    return funceq::cli::run(argc, argv);
}
