// SPDX-License-Identifier: Apache-2.0
#include "verisum/cli.hpp"

int main(int argc, char** argv) {
    return verisum::cli_main(argc, argv);
}
