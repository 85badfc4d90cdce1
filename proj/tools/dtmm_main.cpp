#include "dtmm/cli.hpp"

int main(int argc, char** argv) {
    return dtmm::run_cli(argc, argv);
}
